//! Small named spaces and graphs used by tests, sweeps and the CLI fixtures.

use crate::bigraph::BipartiteGraph;
use crate::rational::Rational;
use crate::space::FiniteSpace;

/// The 3-cube `{0,1}^3` under Hamming distance, labels like `"101"`, with
/// part A the words of odd weight and part B the words of even weight.
pub fn hamming_cube() -> FiniteSpace {
    let words = ["000", "100", "010", "001", "110", "101", "011", "111"];
    let labels: Vec<String> = words.iter().map(|w| w.to_string()).collect();
    let hamming = |i: usize, j: usize| {
        let diff = words[i].bytes().zip(words[j].bytes()).filter(|(x, y)| x != y).count();
        Rational::from(diff as i64)
    };
    let space = FiniteSpace::from_fn(labels, hamming).expect("Hamming distance is a metric");
    let a = space.indices_of(&["100", "010", "001", "111"]).unwrap();
    let b = space.indices_of(&["110", "101", "011", "000"]).unwrap();
    space.with_part("A", a).unwrap().with_part("B", b).unwrap()
}

/// The cube graph drawn as two concentric squares `u1..u4` and `w1..w4`
/// joined by spokes `ui -- wi`.
pub fn cube_graph() -> BipartiteGraph {
    let a: Vec<String> = ["u1", "u3", "w2", "w4"].iter().map(|s| s.to_string()).collect();
    let b: Vec<String> = ["u2", "u4", "w1", "w3"].iter().map(|s| s.to_string()).collect();
    let pos = |l: &str| {
        a.iter()
            .position(|x| x == l)
            .map(|i| (true, i))
            .or_else(|| b.iter().position(|x| x == l).map(|i| (false, i)))
            .unwrap()
    };
    let mut edges = Vec::new();
    for ring in ["u", "w"] {
        for i in 1..=4 {
            let j = i % 4 + 1;
            edges.push((format!("{ring}{i}"), format!("{ring}{j}")));
        }
    }
    for i in 1..=4 {
        edges.push((format!("u{i}"), format!("w{i}")));
    }
    let edges: Vec<(usize, usize)> = edges
        .iter()
        .map(|(x, y)| match (pos(x), pos(y)) {
            ((true, i), (false, j)) | ((false, j), (true, i)) => (i, j),
            _ => unreachable!("cube edges join opposite parity"),
        })
        .collect();
    BipartiteGraph::new(a.clone(), b.clone(), edges).unwrap()
}

pub fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// `K_{n,m}` with parts `a1..an` and `b1..bm`.
pub fn complete_bipartite(n: usize, m: usize) -> BipartiteGraph {
    BipartiteGraph::complete(labels("a", n), labels("b", m)).unwrap()
}

/// Trivial metric on `a1..an, b1..bm` with parts A and B.
pub fn trivial_space(n: usize, m: usize) -> FiniteSpace {
    let mut all = labels("a", n);
    all.extend(labels("b", m));
    FiniteSpace::trivial(all)
        .and_then(|s| s.with_part("A", (0..n).collect()))
        .and_then(|s| s.with_part("B", (n..n + m).collect()))
        .unwrap()
}

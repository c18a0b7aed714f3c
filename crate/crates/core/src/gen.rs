//! Seeded instance generators for property sweeps.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bigraph::BipartiteGraph;
use crate::dynamics::CyclicMap;
use crate::fixtures::labels;
use crate::proximity::{proximity_report, Mode};
use crate::rational::Rational;
use crate::space::FiniteSpace;

pub use rand_chacha::ChaCha8Rng as SweepRng;

pub fn rng(seed: u64) -> SweepRng {
    rand::SeedableRng::seed_from_u64(seed)
}

fn point_labels(n: usize) -> Vec<String> {
    labels("x", n)
}

/// Every finite bipartite graph on parts `a1..an`, `b1..bm` for
/// `1 ≤ n ≤ max_a` and `1 ≤ m ≤ max_b`, edge sets enumerated by bitmask.
pub fn all_graphs(max_a: usize, max_b: usize) -> impl Iterator<Item = BipartiteGraph> {
    (1..=max_a).flat_map(move |n| {
        (1..=max_b).flat_map(move |m| {
            let cells = n * m;
            (0u64..1 << cells).map(move |mask| {
                let edges = (0..cells).filter(|c| mask >> c & 1 == 1).map(|c| (c / m, c % m));
                BipartiteGraph::new(labels("a", n), labels("b", m), edges).expect("enumerated graphs are valid")
            })
        })
    })
}

/// A random ultrametric on `n` points with distances drawn from `values`
/// (ascending, positive): clusters merge level by level, and two points sit
/// at the level where their clusters first merge.
pub fn random_ultrametric<R: Rng>(rng: &mut R, n: usize, values: &[i64]) -> FiniteSpace {
    assert!(!values.is_empty());
    let mut cluster: Vec<usize> = (0..n).collect();
    let mut dist = vec![vec![0i64; n]; n];
    for (k, &h) in values.iter().enumerate() {
        let mut roots: Vec<usize> = cluster.clone();
        roots.sort_unstable();
        roots.dedup();
        if roots.len() <= 1 {
            break;
        }
        let last = k + 1 == values.len();
        let merges = if last { roots.len() - 1 } else { rng.gen_range(0..roots.len()) };
        for _ in 0..merges {
            let mut live: Vec<usize> = cluster.clone();
            live.sort_unstable();
            live.dedup();
            let pick: Vec<usize> = live.choose_multiple(rng, 2).copied().collect();
            let (keep, gone) = (pick[0], pick[1]);
            for x in 0..n {
                for y in 0..n {
                    if cluster[x] == keep && cluster[y] == gone {
                        dist[x][y] = h;
                        dist[y][x] = h;
                    }
                }
            }
            for c in cluster.iter_mut() {
                if *c == gone {
                    *c = keep;
                }
            }
        }
    }
    FiniteSpace::from_fn(point_labels(n), |i, j| Rational::from(dist[i][j])).expect("merge heights are positive")
}

/// A random semimetric on `n` points with distances `p/q`,
/// `1 ≤ p ≤ max_numer`, `1 ≤ q ≤ max_denom`.
pub fn random_semimetric<R: Rng>(rng: &mut R, n: usize, max_numer: i64, max_denom: i64) -> FiniteSpace {
    FiniteSpace::from_fn(point_labels(n), |_, _| {
        Rational::new(rng.gen_range(1..=max_numer), rng.gen_range(1..=max_denom))
    })
    .expect("positive entries")
}

/// Two disjoint nonempty random parts of `0..n`; some points may be left out.
pub fn random_parts<R: Rng>(rng: &mut R, n: usize) -> (Vec<usize>, Vec<usize>) {
    assert!(n >= 2);
    loop {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for x in 0..n {
            match rng.gen_range(0..5) {
                0 | 1 => a.push(x),
                2 | 3 => b.push(x),
                _ => {}
            }
        }
        if !a.is_empty() && !b.is_empty() {
            return (a, b);
        }
    }
}

/// A random cyclic table as `(source, image)` pairs.
pub fn random_cyclic_table<R: Rng>(rng: &mut R, a: &[usize], b: &[usize]) -> Vec<(usize, usize)> {
    let mut table: Vec<(usize, usize)> = a.iter().map(|&x| (x, *b.choose(rng).unwrap())).collect();
    table.extend(b.iter().map(|&y| (y, *a.choose(rng).unwrap())));
    table
}

/// Rejection-samples cyclic tables until one is nonexpansive. After
/// `attempts` failures falls back to collapsing A onto `b*` and B onto `a*`
/// for a best proximity pair `(a*, b*)`, which is always nonexpansive.
pub fn random_cyclic_nonexpansive<R: Rng>(
    rng: &mut R,
    space: &FiniteSpace,
    a: &[usize],
    b: &[usize],
    attempts: usize,
) -> (CyclicMap, bool) {
    for _ in 0..attempts {
        let table = random_cyclic_table(rng, a, b);
        let map = CyclicMap::new(space, a, b, &table).expect("table is cyclic and total");
        if map.expansion(space).nonexpansive {
            return (map, true);
        }
    }
    let report = proximity_report(space, a, b, Mode::Proximinal).expect("valid parts");
    let &(pa, pb) = report.pairs.choose(rng).expect("finite parts have best pairs");
    let table: Vec<(usize, usize)> = a.iter().map(|&x| (x, pb)).chain(b.iter().map(|&y| (y, pa))).collect();
    (CyclicMap::new(space, a, b, &table).expect("collapse is cyclic"), false)
}

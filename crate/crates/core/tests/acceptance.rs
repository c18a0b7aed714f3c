//! Acceptance run: one line per criterion, nonzero exit on any failure.
//!
//! Each check recomputes its expected values with small integer oracles
//! that share no code with the library beyond constructors and accessors.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use proxgraph::bigraph::{find_isomorphism, BipartiteGraph, IsoMode};
use proxgraph::dynamics::{orbit_check, verify_self_homomorphism, Verdict};
use proxgraph::family::{CountableFamily, FamilyKind, Side, TaggedPoint};
use proxgraph::fixtures;
use proxgraph::gen;
use proxgraph::proximity::ultrametric_structure;
use proxgraph::realize::{decide, min_distance_set_size, realize_metric, DecisionLevel, Reason, Target, Witness};
use proxgraph::{farthest_graph, proximinal_graph, FiniteSpace, Level, Rational};
use rand::Rng;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Exact `p/q` with `q > 0`, read back from the display form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Frac(i128, i128);

impl Frac {
    fn of(r: &Rational) -> Frac {
        let s = r.to_string();
        match s.split_once('/') {
            Some((p, q)) => Frac(p.parse().unwrap(), q.parse().unwrap()),
            None => Frac(s.parse().unwrap(), 1),
        }
    }

    fn lt(self, o: Frac) -> bool {
        self.0 * o.1 < o.0 * self.1
    }

    fn le(self, o: Frac) -> bool {
        self.0 * o.1 <= o.0 * self.1
    }

    fn eq(self, o: Frac) -> bool {
        self.0 * o.1 == o.0 * self.1
    }
}

fn matrix(s: &FiniteSpace) -> Vec<Vec<Frac>> {
    (0..s.len()).map(|i| (0..s.len()).map(|j| Frac::of(s.d(i, j))).collect()).collect()
}

/// Cross pairs `(i, j)` (positions in `a` and `b`) attaining the minimum, or
/// the maximum when `far` is set.
fn extremal_pairs(d: &[Vec<Frac>], a: &[usize], b: &[usize], far: bool) -> BTreeSet<(usize, usize)> {
    let mut best = d[a[0]][b[0]];
    for &x in a {
        for &y in b {
            let v = d[x][y];
            if (far && best.lt(v)) || (!far && v.lt(best)) {
                best = v;
            }
        }
    }
    let mut out = BTreeSet::new();
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            if d[x][y].eq(best) {
                out.insert((i, j));
            }
        }
    }
    out
}

fn graph_pairs(g: &BipartiteGraph) -> BTreeSet<(usize, usize)> {
    g.edges().iter().copied().collect()
}

/// All bipartite graphs with `1 ≤ |A|, |B| ≤ 3`, as `(n, m, mask)` with
/// bit `i * m + j` for the edge `(a_i, b_j)`.
fn small_graphs() -> Vec<(usize, usize, u32)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for m in 1..=3 {
            for mask in 0..1u32 << (n * m) {
                out.push((n, m, mask));
            }
        }
    }
    out
}

fn build(n: usize, m: usize, mask: u32) -> BipartiteGraph {
    let edges = (0..n * m).filter(|c| mask >> c & 1 == 1).map(|c| (c / m, c % m));
    BipartiteGraph::new(fixtures::labels("a", n), fixtures::labels("b", m), edges).unwrap()
}

fn mask_of(pairs: &BTreeSet<(usize, usize)>, m: usize) -> u32 {
    pairs.iter().fold(0, |acc, &(i, j)| acc | 1 << (i * m + j))
}

/// For every {1, 2}-valued symmetric matrix on `n + m` points (A first):
/// its proximinal edge mask, whether it is ultrametric, and the size of its
/// distance set including 0.
fn two_valued(n: usize, m: usize) -> Vec<(u32, bool, usize)> {
    let k = n + m;
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let mut d = vec![vec![0u8; k]; k];
    let mut out = Vec::with_capacity(1 << pairs.len());
    for bits in 0u32..1 << pairs.len() {
        for (t, &(i, j)) in pairs.iter().enumerate() {
            let v = 1 + (bits >> t & 1) as u8;
            d[i][j] = v;
            d[j][i] = v;
        }
        let ultra = (0..k).all(|x| (0..k).all(|y| (0..k).all(|z| d[x][y] <= d[x][z].max(d[z][y]))));
        let lo = (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).map(|(i, j)| d[i][n + j]).min().unwrap();
        let mut mask = 0;
        for i in 0..n {
            for j in 0..m {
                if d[i][n + j] == lo {
                    mask |= 1 << (i * m + j);
                }
            }
        }
        let values: BTreeSet<u8> = d.iter().flatten().copied().collect();
        out.push((mask, ultra, values.len()));
    }
    out
}

fn timed(limit: Duration, start: Instant) -> Result<Duration, String> {
    let spent = start.elapsed();
    ensure(spent < limit, || format!("took {spent:?}, limit {limit:?}"))?;
    Ok(spent)
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let cube = fixtures::hamming_cube();
    let (a, b) = (cube.part("A").unwrap(), cube.part("B").unwrap());
    let g = proximinal_graph(&cube, a, b).map_err(|e| e.to_string())?;
    ensure(g.edges().len() == 12, || format!("{} edges", g.edges().len()))?;
    ensure(g.degrees().iter().all(|&d| d == 3), || "not 3-regular".into())?;
    let dist = cube.set_distance(a, b).map_err(|e| e.to_string())?;
    ensure(dist == Rational::one(), || format!("dist(A, B) = {dist}"))?;
    // Hamming distance 1 between the bit strings
    let hamming = |x: &str, y: &str| x.bytes().zip(y.bytes()).filter(|(p, q)| p != q).count();
    let mut expected = BTreeSet::new();
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            if hamming(cube.label(x), cube.label(y)) == 1 {
                expected.insert((i, j));
            }
        }
    }
    ensure(graph_pairs(&g) == expected, || "edges differ from Hamming neighbours".into())?;
    let f = find_isomorphism(&g, &fixtures::cube_graph(), IsoMode::PartAgnostic).map_err(|e| e.to_string())?;
    ensure(f.is_some(), || "no isomorphism to the cube graph".into())?;
    let spent = timed(Duration::from_secs(1), start)?;
    Ok(format!("12 edges, 3-regular, dist 1, isomorphic to Q3 ({spent:.2?})"))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let (mut nonempty, mut empty) = (0, 0);
    for (n, m, mask) in small_graphs() {
        let g = build(n, m, mask);
        if mask == 0 {
            empty += 1;
            let d = decide(&g, Target::ProximinalMetric, DecisionLevel::ExactParts);
            ensure(!d.realizable && d.reason == Reason::FiniteEmpty, || format!("empty {n}x{m} accepted"))?;
            ensure(realize_metric(&g).is_err(), || format!("empty {n}x{m} realized"))?;
            continue;
        }
        nonempty += 1;
        let s = realize_metric(&g).map_err(|e| e.to_string())?;
        ensure(s.classify().level >= Level::Metric, || format!("{n}x{m}/{mask}: witness not metric"))?;
        let (a, b) = (s.part("A").unwrap(), s.part("B").unwrap());
        let back = proximinal_graph(&s, a, b).map_err(|e| e.to_string())?;
        ensure(back == g, || format!("{n}x{m}/{mask}: round trip differs"))?;
        let oracle = mask_of(&extremal_pairs(&matrix(&s), a, b, false), m);
        ensure(oracle == mask, || format!("{n}x{m}/{mask}: oracle graph {oracle}"))?;
    }
    ensure(nonempty + empty == 682, || format!("{} graphs", nonempty + empty))?;
    let spent = timed(Duration::from_secs(10), start)?;
    Ok(format!("{nonempty} nonempty graphs round-trip, {empty} empty rejected ({spent:.2?})"))
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let mut reachable: BTreeMap<(usize, usize), BTreeSet<u32>> = BTreeMap::new();
    for n in 1..=3 {
        for m in 1..=3 {
            let set = two_valued(n, m).into_iter().filter(|t| t.1).map(|t| t.0).collect();
            reachable.insert((n, m), set);
        }
    }
    let (mut yes, mut no) = (0, 0);
    for (n, m, mask) in small_graphs() {
        let g = build(n, m, mask);
        let d = decide(&g, Target::ProximinalUltrametric, DecisionLevel::ExactParts);
        let oracle = reachable[&(n, m)].contains(&mask);
        ensure(d.realizable == oracle, || format!("{n}x{m}/{mask}: decide {} oracle {oracle}", d.realizable))?;
        if let Some(Witness::Space(s)) = &d.witness {
            ensure(s.classify().level == Level::Ultrametric, || format!("{n}x{m}/{mask}: witness not ultrametric"))?;
            let back = mask_of(&extremal_pairs(&matrix(s), s.part("A").unwrap(), s.part("B").unwrap(), false), m);
            ensure(back == mask, || format!("{n}x{m}/{mask}: witness graph {back}"))?;
        }
        if oracle {
            yes += 1;
        } else {
            no += 1;
        }
    }
    let spent = timed(Duration::from_secs(300), start)?;
    Ok(format!("682/682 agree with the {{1,2}} oracle ({yes} realizable, {no} not) ({spent:.2?})"))
}

fn criterion_4() -> Check {
    let q3 = fixtures::cube_graph();
    for level in [DecisionLevel::ExactParts, DecisionLevel::UpToIsomorphism] {
        let d = decide(&q3, Target::ProximinalUltrametric, level);
        ensure(!d.realizable, || format!("Q3 accepted at {level:?}"))?;
        ensure(matches!(d.reason, Reason::IncompleteComponent { .. }), || format!("reason {:?}", d.reason))?;
    }
    let k33 = fixtures::complete_bipartite(3, 3);
    let d = decide(&k33, Target::ProximinalUltrametric, DecisionLevel::ExactParts);
    ensure(d.realizable, || "K3,3 rejected".into())?;
    let Some(Witness::Space(s)) = d.witness else {
        return Err("K3,3 without a space witness".into());
    };
    let off: BTreeSet<String> =
        (0..s.len()).flat_map(|i| (0..s.len()).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| s.d(i, j).to_string()).collect();
    ensure(off.len() == 1, || format!("witness off-diagonal values {off:?}"))?;
    ensure(s.classify().level == Level::Ultrametric, || "witness not ultrametric".into())?;
    let g = proximinal_graph(&s, s.part("A").unwrap(), s.part("B").unwrap()).map_err(|e| e.to_string())?;
    ensure(g == k33, || "witness graph is not K3,3".into())?;
    Ok("Q3 rejected at both levels; K3,3 realized by the trivial metric".into())
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let mut fewest: BTreeMap<(usize, usize, u32), usize> = BTreeMap::new();
    for n in 1..=3 {
        for m in 1..=3 {
            for (mask, _, size) in two_valued(n, m) {
                let e = fewest.entry((n, m, mask)).or_insert(usize::MAX);
                *e = (*e).min(size);
            }
        }
    }
    let mut count = 0;
    for (n, m, mask) in small_graphs().into_iter().filter(|t| t.2 != 0) {
        let g = build(n, m, mask);
        let s = realize_metric(&g).map_err(|e| e.to_string())?;
        let ds = s.distance_set().len();
        ensure(ds <= 3, || format!("{n}x{m}/{mask}: {ds} distances"))?;
        let (size, w) = min_distance_set_size(&g).map_err(|e| e.to_string())?;
        ensure(w.distance_set().len() == size, || format!("{n}x{m}/{mask}: witness size mismatch"))?;
        let oracle = fewest.get(&(n, m, mask)).copied().unwrap_or(usize::MAX);
        ensure(size == oracle, || format!("{n}x{m}/{mask}: {size} vs oracle {oracle}"))?;
        let complete = mask.count_ones() as usize == n * m;
        ensure((size == 2) == complete, || format!("{n}x{m}/{mask}: size {size}"))?;
        count += 1;
    }
    let spent = timed(Duration::from_secs(120), start)?;
    Ok(format!("{count} graphs: at most 3 distances, minimum 2 exactly when complete ({spent:.2?})"))
}

const POPULATION_SEED: u64 = 0x5eed_0006;

/// The shared random ultrametric population for criteria 6 and 7.
fn ultrametric_population(count: usize) -> Vec<(FiniteSpace, Vec<usize>, Vec<usize>)> {
    let mut rng = gen::rng(POPULATION_SEED);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=8);
            let s = gen::random_ultrametric(&mut rng, n, &[1, 2, 3, 4]);
            let (a, b) = gen::random_parts(&mut rng, n);
            (s, a, b)
        })
        .collect()
}

fn int_matrix(s: &FiniteSpace) -> Vec<Vec<u8>> {
    (0..s.len()).map(|i| (0..s.len()).map(|j| s.d(i, j).to_string().parse().unwrap()).collect()).collect()
}

fn connected(n: usize, edges: &BTreeSet<(usize, usize)>, na: usize) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in edges {
        adj[i].push(na + j);
        adj[na + j].push(i);
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !std::mem::replace(&mut seen[w], true) {
                queue.push_back(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn criterion_6(pop: &[(FiniteSpace, Vec<usize>, Vec<usize>)]) -> Check {
    let start = Instant::now();
    let mut hits = [0usize; 3];
    for (k, (s, a, b)) in pop.iter().enumerate() {
        let d = int_matrix(s);
        let n = d.len();
        let ultra = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| d[x][y] <= d[x][z].max(d[z][y]))));
        ensure(ultra, || format!("instance {k} not ultrametric"))?;
        let diam = |set: &[usize]| set.iter().flat_map(|&x| set.iter().map(move |&y| (x, y))).map(|(x, y)| d[x][y]).max().unwrap();
        let dist = a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).map(|(x, y)| d[x][y]).min().unwrap();
        let edges: BTreeSet<(usize, usize)> = a
            .iter()
            .enumerate()
            .flat_map(|(i, &x)| b.iter().enumerate().map(move |(j, &y)| (i, j, x, y)))
            .filter(|&(_, _, x, y)| d[x][y] == dist)
            .map(|(i, j, _, _)| (i, j))
            .collect();
        let a0: BTreeSet<usize> = edges.iter().map(|e| e.0).collect();
        let b0: BTreeSet<usize> = edges.iter().map(|e| e.1).collect();
        let core_complete = !edges.is_empty() && edges.len() == a0.len() * b0.len();
        let union: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
        let small_b = diam(b) <= dist;
        let small_union = diam(&union) <= dist;
        let is_connected = connected(a.len() + b.len(), &edges, a.len());
        let complete = edges.len() == a.len() * b.len();

        // the statements themselves, on oracle quantities
        ensure(small_b == (b0.len() == b.len() && core_complete), || format!("instance {k}: diameter criterion for B"))?;
        ensure(is_connected == small_union && small_union == complete, || format!("instance {k}: connectivity criterion"))?;

        // the library's report agrees with the oracle
        let u = ultrametric_structure(s, a, b).map_err(|e| e.to_string())?;
        ensure(u.dist.to_string() == dist.to_string(), || format!("instance {k}: dist"))?;
        ensure((u.diam_b <= u.dist) == small_b, || format!("instance {k}: diam B"))?;
        ensure((u.diam_union <= u.dist) == small_union, || format!("instance {k}: diam A ∪ B"))?;
        ensure(u.b0_equals_b == (b0.len() == b.len()), || format!("instance {k}: b0"))?;
        ensure(u.all_pairs_best == core_complete, || format!("instance {k}: best pairs"))?;
        ensure(u.core_complete_bipartite == core_complete, || format!("instance {k}: core"))?;
        ensure(u.b_in_core == (b0.len() == b.len()), || format!("instance {k}: B in core"))?;
        ensure(u.graph_connected == is_connected, || format!("instance {k}: connected"))?;
        ensure(u.graph_complete_bipartite == complete, || format!("instance {k}: complete"))?;
        hits[0] += small_b as usize;
        hits[1] += small_union as usize;
        hits[2] += core_complete as usize;
    }
    let spent = timed(Duration::from_secs(60), start)?;
    Ok(format!(
        "{} spaces, no counterexample (diam B small in {}, diam A∪B small in {}, complete core in {}) ({spent:.2?})",
        pop.len(),
        hits[0],
        hits[1],
        hits[2]
    ))
}

fn criterion_7(pop: &[(FiniteSpace, Vec<usize>, Vec<usize>)]) -> Check {
    let start = Instant::now();
    let mut checks = 0usize;
    for (k, (s, _, _)) in pop.iter().enumerate() {
        let d = int_matrix(s);
        let n = d.len();
        let ball = |c: usize, r: u8| -> Vec<usize> { (0..n).filter(|&x| d[c][x] <= r).collect() };
        let radii: BTreeSet<u8> = d.iter().flatten().copied().collect();
        for &r in &radii {
            let rr = Rational::from(r as i64);
            let p = s.ball_partition(&rr).map_err(|e| e.to_string())?;
            let mut cover = vec![0; n];
            for block in &p.blocks {
                ensure(block.members == ball(block.center, r), || format!("instance {k}: block at radius {r}"))?;
                for &x in &block.members {
                    cover[x] += 1;
                }
            }
            ensure(cover.iter().all(|&c| c == 1), || format!("instance {k}: radius {r} is not a partition"))?;
            for c in 0..n {
                let bc = s.closed_ball(c, &rr).map_err(|e| e.to_string())?.members;
                ensure(bc == ball(c, r), || format!("instance {k}: closed ball"))?;
                for &x in &bc {
                    ensure(ball(x, r) == bc, || format!("instance {k}: recentering at {x}"))?;
                    checks += 1;
                }
                for &r2 in radii.iter().filter(|&&r2| r2 >= r) {
                    for c2 in 0..n {
                        let outer = ball(c2, r2);
                        if bc.iter().any(|x| outer.contains(x)) {
                            ensure(bc.iter().all(|x| outer.contains(x)), || format!("instance {k}: nesting"))?;
                            if r2 == r {
                                ensure(bc == outer, || format!("instance {k}: equal radii"))?;
                            }
                            checks += 1;
                        }
                    }
                }
            }
        }
    }
    let spent = start.elapsed();
    Ok(format!("{} spaces, {checks} nesting and recentering checks ({spent:.2?})", pop.len()))
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let fam = CountableFamily::new(FamilyKind::EmptyProximinal);
    // Φ(a_k) = 2k, Φ(b_k) = 2k - 1
    let point = |phi: u64, copy: u32| {
        let side = if phi.is_multiple_of(2) { Side::A } else { Side::B };
        TaggedPoint { side, index: phi.div_ceil(2), copy }
    };
    // expected distance as (p, q)
    let oracle = |x: (u64, u32), y: (u64, u32)| -> (u128, u128) {
        if x == y {
            (0, 1)
        } else if x.0 == y.0 {
            (1, 1)
        } else {
            let m = x.0.min(y.0) as u128;
            (m + 1, m)
        }
    };
    let check_triples = |points: &[(u64, u32)]| -> Result<usize, String> {
        let k = points.len();
        let mut d = vec![vec![(0u128, 1u128); k]; k];
        for i in 0..k {
            for j in 0..k {
                let want = oracle(points[i], points[j]);
                let got = Frac::of(&fam.distance(&point(points[i].0, points[i].1), &point(points[j].0, points[j].1)).map_err(|e| e.to_string())?);
                ensure(got.eq(Frac(want.0 as i128, want.1 as i128)), || format!("d({:?}, {:?})", points[i], points[j]))?;
                d[i][j] = want;
            }
        }
        let le = |p: (u128, u128), q: (u128, u128)| p.0 * q.1 <= q.0 * p.1;
        let mut triples = 0;
        for x in 0..k {
            for y in x + 1..k {
                for z in 0..k {
                    let hi = if le(d[x][z], d[z][y]) { d[z][y] } else { d[x][z] };
                    ensure(le(d[x][y], hi), || format!("strong triangle fails at {:?}", (points[x], points[y], points[z])))?;
                    triples += 1;
                }
            }
        }
        Ok(triples)
    };
    let plain: Vec<(u64, u32)> = (1..=200).map(|phi| (phi, 0)).collect();
    let triples = check_triples(&plain)?;
    let copies: Vec<(u64, u32)> = (1..=20).flat_map(|phi| [(phi, 0), (phi, 1)]).collect();
    check_triples(&copies)?;

    for x in 1..=200u64 {
        for y in 1..=200u64 {
            if x % 2 != y % 2 {
                let v = fam.distance(&point(x, 0), &point(y, 0)).unwrap();
                ensure(v != Rational::one(), || format!("cross pair ({x}, {y}) attains 1"))?;
            }
        }
    }

    for side in [Side::A, Side::B] {
        for index in 1..=100u64 {
            let x = TaggedPoint { side, index, copy: 0 };
            for target in [Side::A, Side::B] {
                let (w, v) = fam.best_approximation(&x, target).map_err(|e| e.to_string())?;
                ensure(w.side == target, || format!("{x}: witness on the wrong side"))?;
                ensure(fam.distance(&x, &w).unwrap() == v, || format!("{x}: witness distance"))?;
                // no point of the target part up to Φ = 400 does better
                for phi in (1..=400u64).filter(|&p| (p % 2 == 0) == (target == Side::A)) {
                    let y = point(phi, 0);
                    ensure(fam.distance(&x, &y).unwrap() >= v, || format!("{x}: {y} is closer than {w}"))?;
                }
            }
        }
    }

    let far = CountableFamily::new(FamilyKind::EmptyFarthest);
    let two = Rational::from(2);
    let lower = Rational::new(3, 2);
    for i in 1..=500u64 {
        for j in [1u64, 2, 7, 500] {
            let v = far.distance(&TaggedPoint::a(j), &TaggedPoint::b(i)).map_err(|e| e.to_string())?;
            ensure(v != two && v >= lower && v < two, || format!("d(a{j}, b{i}) = {v}"))?;
            ensure(Frac::of(&v).eq(Frac(2 * i as i128 + 1, i as i128 + 1)), || format!("d(a{j}, b{i}) = {v}"))?;
        }
    }
    let sup = far.extremum();
    ensure(sup.value == two && !sup.attained, || format!("supremum metadata {sup:?}"))?;
    let inf = fam.extremum();
    ensure(inf.value == Rational::one() && !inf.attained, || format!("infimum metadata {inf:?}"))?;
    let spent = timed(Duration::from_secs(10), start)?;
    Ok(format!("{triples} triples ultrametric, infimum 1 and supremum 2 never attained ({spent:.2?})"))
}

fn criterion_9() -> Check {
    let start = Instant::now();
    let mut rng = gen::rng(0x5eed_0009);
    let (mut sampled, mut edges_checked) = (0, 0);
    for k in 0..1000 {
        let n = rng.gen_range(2..=7);
        let s = if k % 2 == 0 {
            gen::random_ultrametric(&mut rng, n, &[1, 2, 3])
        } else {
            gen::random_semimetric(&mut rng, n, 3, 2)
        };
        let (a, b) = gen::random_parts(&mut rng, n);
        let (f, from_search) = gen::random_cyclic_nonexpansive(&mut rng, &s, &a, &b, 50);
        sampled += from_search as usize;
        let d = matrix(&s);
        let dom: Vec<usize> = a.iter().chain(&b).copied().collect();
        let nonexpansive = dom.iter().all(|&x| dom.iter().all(|&y| d[f.apply(x)][f.apply(y)].le(d[x][y])));
        ensure(nonexpansive, || format!("instance {k}: map expands"))?;
        let edges = extremal_pairs(&d, &a, &b, false);
        let pos_a: BTreeMap<usize, usize> = a.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let pos_b: BTreeMap<usize, usize> = b.iter().enumerate().map(|(j, &y)| (y, j)).collect();
        let dist = d[a[edges.iter().next().unwrap().0]][b[edges.iter().next().unwrap().1]];
        for &(i, j) in &edges {
            let image = (pos_a[&f.apply(b[j])], pos_b[&f.apply(a[i])]);
            ensure(edges.contains(&image), || format!("instance {k}: edge ({i}, {j}) maps off the graph"))?;
            let orbit = orbit_check(&f, &s, a[i], b[j], 20).map_err(|e| e.to_string())?;
            ensure(orbit.len() == 20 && orbit.iter().all(|v| Frac::of(v).eq(dist)), || format!("instance {k}: orbit {orbit:?}"))?;
            let (mut x, mut y) = (a[i], b[j]);
            for _ in 0..20 {
                x = f.apply(x);
                y = f.apply(y);
                ensure(d[x][y].eq(dist), || format!("instance {k}: iterate leaves dist"))?;
            }
            edges_checked += 1;
        }
        let verdict = verify_self_homomorphism(&f, &s).map_err(|e| e.to_string())?;
        ensure(verdict == Verdict::Homomorphism, || format!("instance {k}: {verdict:?}"))?;
    }
    let spent = start.elapsed();
    Ok(format!("1000 maps ({sampled} by rejection sampling), {edges_checked} edges preserved, orbits constant ({spent:.2?})"))
}

fn criterion_10() -> Check {
    let start = Instant::now();
    let mut rng = gen::rng(0x5eed_0010);
    for k in 0..1000 {
        let n = rng.gen_range(2..=7);
        let s = gen::random_semimetric(&mut rng, n, 7, 4);
        let (a, b) = gen::random_parts(&mut rng, n);
        let far = farthest_graph(&s, &a, &b).map_err(|e| e.to_string())?;
        let near = proximinal_graph(&s.reciprocal(), &a, &b).map_err(|e| e.to_string())?;
        ensure(far == near, || format!("instance {k}: farthest graph differs from the reciprocal's"))?;
        ensure(graph_pairs(&far) == extremal_pairs(&matrix(&s), &a, &b, true), || format!("instance {k}: oracle"))?;
    }
    for (n, m, mask) in small_graphs() {
        let g = build(n, m, mask);
        let ok = |t, l| decide(&g, t, l).realizable;
        let (exact, iso) = (DecisionLevel::ExactParts, DecisionLevel::UpToIsomorphism);
        ensure(!ok(Target::ProximinalMetric, exact) || ok(Target::Farthest, exact), || format!("{n}x{m}/{mask}: implication"))?;
        ensure(ok(Target::ProximinalMetric, iso) == ok(Target::Farthest, iso), || format!("{n}x{m}/{mask}: iso level"))?;
    }
    let spent = start.elapsed();
    Ok(format!("1000 spaces dual, 682 graphs consistent ({spent:.2?})"))
}

fn main() -> ExitCode {
    let population = ultrametric_population(10_000);
    let results: Vec<(usize, Check)> = vec![
        (1, criterion_1()),
        (2, criterion_2()),
        (3, criterion_3()),
        (4, criterion_4()),
        (5, criterion_5()),
        (6, criterion_6(&population)),
        (7, criterion_7(&population)),
        (8, criterion_8()),
        (9, criterion_9()),
        (10, criterion_10()),
    ];
    let mut failed = 0;
    for (k, result) in &results {
        match result {
            Ok(detail) => println!("criterion {k:>2}: PASS  {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {k:>2}: FAIL  {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Reproducible invariant sweeps.

use std::collections::{BTreeMap, BTreeSet};

use clap::ValueEnum;
use rand::Rng;
use serde::Serialize;

use proxgraph::bigraph::BipartiteGraph;
use proxgraph::dynamics::{orbit_check, verify_self_homomorphism, Verdict};
use proxgraph::gen::{self, all_graphs};
use proxgraph::proximity::ultrametric_structure;
use proxgraph::realize::{self, DecisionLevel, Target};
use proxgraph::{farthest_graph, proximinal_graph, Error};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Suite {
    /// Every nonempty graph is the proximinal graph of its metric witness.
    Roundtrip,
    /// Ultrametric decisions against exhaustive {1, 2}-valued spaces.
    Ultrametric,
    /// Minimal distance sets of metric witnesses.
    DistanceSet,
    /// Diameter criteria on random ultrametric spaces.
    Structure,
    /// Ball partitions, nesting and recentering.
    Balls,
    /// Cyclic nonexpansive maps and orbit distances.
    Orbit,
    /// Farthest graphs against reciprocal spaces.
    Duality,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub max_part_size: usize,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    /// The first few failures.
    pub failures: Vec<String>,
}

struct Tally {
    passed: usize,
    failures: Vec<String>,
    failed: usize,
}

impl Tally {
    fn new() -> Self {
        Tally { passed: 0, failures: Vec::new(), failed: 0 }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < 5 {
                self.failures.push(what());
            }
        }
    }
}

fn describe(g: &BipartiteGraph) -> String {
    let edges: Vec<String> = g.edge_labels().map(|(a, b)| format!("{a}-{b}")).collect();
    format!("|A|={} |B|={} edges=[{}]", g.part_a().len(), g.part_b().len(), edges.join(","))
}

/// Edge masks (bit `i * nb + j`) of the proximinal graphs of all
/// {1, 2}-valued ultrametrics on `na + nb` points.
fn ultrametric_masks(na: usize, nb: usize) -> BTreeSet<u64> {
    let n = na + nb;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut masks = BTreeSet::new();
    let mut d = vec![vec![0u8; n]; n];
    for bits in 0u64..1 << pairs.len() {
        for (k, &(i, j)) in pairs.iter().enumerate() {
            let v = 1 + (bits >> k & 1) as u8;
            d[i][j] = v;
            d[j][i] = v;
        }
        let strong = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| d[x][y] <= d[x][z].max(d[z][y]))));
        if !strong {
            continue;
        }
        let min = (0..na).flat_map(|i| (0..nb).map(move |j| (i, j))).map(|(i, j)| d[i][na + j]).min().unwrap();
        let mut mask = 0u64;
        for i in 0..na {
            for j in 0..nb {
                if d[i][na + j] == min {
                    mask |= 1 << (i * nb + j);
                }
            }
        }
        masks.insert(mask);
    }
    masks
}

fn edge_mask(g: &BipartiteGraph) -> u64 {
    let nb = g.part_b().len();
    g.edges().iter().fold(0, |m, &(i, j)| m | 1 << (i * nb + j))
}

pub fn run(suite: Suite, max_part_size: usize, seed: u64, count: usize) -> Result<Report, Error> {
    let k = max_part_size;
    let exhaustive = matches!(suite, Suite::Roundtrip | Suite::Ultrametric | Suite::DistanceSet);
    let bound = if matches!(suite, Suite::Ultrametric) { 3 } else { 4 };
    if exhaustive && k > bound {
        return Err(Error::TooLarge { vertices: 2 * k, bound: 2 * bound });
    }
    let mut t = Tally::new();
    let mut rng = gen::rng(seed);
    match suite {
        Suite::Roundtrip => {
            for g in all_graphs(k, k) {
                if g.is_nonempty() {
                    let s = realize::realize_metric(&g)?;
                    let back = proximinal_graph(&s, s.part("A")?, s.part("B")?)?;
                    t.check(back == g, || describe(&g));
                } else {
                    let d = realize::decide(&g, Target::ProximinalMetric, DecisionLevel::ExactParts);
                    t.check(!d.realizable, || describe(&g));
                }
            }
        }
        Suite::Ultrametric => {
            let mut cache: BTreeMap<(usize, usize), BTreeSet<u64>> = BTreeMap::new();
            for g in all_graphs(k, k) {
                let key = (g.part_a().len(), g.part_b().len());
                let masks = cache.entry(key).or_insert_with(|| ultrametric_masks(key.0, key.1));
                let d = realize::decide(&g, Target::ProximinalUltrametric, DecisionLevel::ExactParts);
                t.check(d.realizable == masks.contains(&edge_mask(&g)), || describe(&g));
            }
        }
        Suite::DistanceSet => {
            for g in all_graphs(k, k).filter(|g| g.is_nonempty()) {
                let witness = realize::realize_metric(&g)?;
                let (size, _) = realize::min_distance_set_size(&g)?;
                let expected = if g.is_complete_bipartite() { 2 } else { 3 };
                t.check(witness.distance_set().len() <= 3 && size == expected, || describe(&g));
            }
        }
        Suite::Structure => {
            for i in 0..count {
                let n = rng.gen_range(2..=8);
                let s = gen::random_ultrametric(&mut rng, n, &[1, 2, 3, 4]);
                let (a, b) = gen::random_parts(&mut rng, n);
                let u = ultrametric_structure(&s, &a, &b)?;
                let small_b = u.diam_b <= u.dist;
                let small_union = u.diam_union <= u.dist;
                let ok = small_b == (u.b0_equals_b && u.all_pairs_best)
                    && small_b == (u.core_complete_bipartite && u.b_in_core)
                    && u.graph_connected == small_union
                    && small_union == u.graph_complete_bipartite;
                t.check(ok, || format!("instance {i}"));
            }
        }
        Suite::Balls => {
            for i in 0..count {
                let n = rng.gen_range(1..=8);
                let s = gen::random_ultrametric(&mut rng, n, &[1, 2, 3, 4]);
                let radii = s.distance_set();
                let mut ok = true;
                for r in &radii {
                    let p = s.ball_partition(r)?;
                    let mut seen = vec![0usize; n];
                    for ball in &p.blocks {
                        for &m in &ball.members {
                            seen[m] += 1;
                        }
                    }
                    ok &= seen.iter().all(|&c| c == 1);
                    for x in 0..n {
                        let bx = s.closed_ball(x, r)?;
                        for &y in &bx.members {
                            ok &= s.closed_ball(y, r)?.members == bx.members;
                        }
                        for bigger in radii.iter().filter(|q| *q > r) {
                            let outer: BTreeSet<usize> = s.closed_ball(x, bigger)?.members.into_iter().collect();
                            ok &= bx.members.iter().all(|m| outer.contains(m));
                        }
                    }
                }
                t.check(ok, || format!("instance {i}"));
            }
        }
        Suite::Orbit => {
            for i in 0..count {
                let n = rng.gen_range(2..=7);
                let s = if rng.gen_bool(0.5) {
                    gen::random_ultrametric(&mut rng, n, &[1, 2, 3])
                } else {
                    gen::random_semimetric(&mut rng, n, 3, 1)
                };
                let (a, b) = gen::random_parts(&mut rng, n);
                let (f, _) = gen::random_cyclic_nonexpansive(&mut rng, &s, &a, &b, 50);
                let dist = s.set_distance(&a, &b)?;
                let mut ok = verify_self_homomorphism(&f, &s)? == Verdict::Homomorphism;
                let g = proximinal_graph(&s, &a, &b)?;
                for &(x, y) in g.edges() {
                    let orbit = orbit_check(&f, &s, a[x], b[y], 20)?;
                    ok &= orbit.iter().all(|v| *v == dist);
                }
                t.check(ok, || format!("instance {i}"));
            }
        }
        Suite::Duality => {
            for i in 0..count {
                let n = rng.gen_range(2..=7);
                let s = gen::random_semimetric(&mut rng, n, 5, 3);
                let (a, b) = gen::random_parts(&mut rng, n);
                let far = farthest_graph(&s, &a, &b)?;
                let recip = proximinal_graph(&s.reciprocal(), &a, &b)?;
                t.check(far == recip, || format!("instance {i}"));
            }
            for g in all_graphs(k.min(3), k.min(3)) {
                let at = |target, level| realize::decide(&g, target, level).realizable;
                let exact = DecisionLevel::ExactParts;
                let iso = DecisionLevel::UpToIsomorphism;
                let ok = (!at(Target::ProximinalMetric, exact) || at(Target::Farthest, exact))
                    && at(Target::ProximinalMetric, iso) == at(Target::Farthest, iso);
                t.check(ok, || describe(&g));
            }
        }
    }
    Ok(Report {
        suite: suite.to_possible_value().expect("no skipped variants").get_name().to_string(),
        seed,
        max_part_size: k,
        instances: t.passed + t.failed,
        passed: t.passed,
        failed: t.failed,
        failures: t.failures,
    })
}

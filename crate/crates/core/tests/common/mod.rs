#![allow(dead_code)]

use std::collections::HashMap;

use greedoid_lab::greedy::{BoundObjective, Direction};
use greedoid_lab::rational::{frac, int};
use greedoid_lab::subset::all_subsets;
use greedoid_lab::{Greedoid, GroundSet, MixedGraph, Rational, SubsetMask};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("s{i}")).collect()
}

/// Mixed graph on up to `max_nodes` nodes with `1..=max_edges` edges (parallel
/// edges allowed, no loops). Roughly `directed_share` of the edges are directed.
pub fn random_graph(rng: &mut StdRng, max_nodes: usize, max_edges: usize, directed_share: f64) -> MixedGraph {
    let nodes = rng.gen_range(2..=max_nodes);
    let m = rng.gen_range(1..=max_edges);
    let names: Vec<String> = (0..nodes).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..m {
        let t = rng.gen_range(0..nodes);
        let mut h = rng.gen_range(0..nodes - 1);
        if h >= t {
            h += 1;
        }
        edges.push((format!("e{i}"), names[t].clone(), names[h].clone(), rng.gen_bool(directed_share)));
    }
    MixedGraph::new(names.iter().map(String::as_str), edges.iter().map(|(a, b, c, d)| (a.as_str(), b.as_str(), c.as_str(), *d)), None)
        .unwrap()
}

/// Branching greedoid of a random mixed graph; the root's component is kept
/// nonempty by always attaching one edge to the root.
pub fn random_branching(rng: &mut StdRng, max_edges: usize) -> Greedoid {
    loop {
        let g = Greedoid::branching(random_graph(rng, 5, max_edges, 0.4)).unwrap();
        if g.full_rank() > 0 {
            return g;
        }
    }
}

/// Connected undirected graph: a random spanning tree plus extra edges.
pub fn random_connected_graph(rng: &mut StdRng, max_nodes: usize, max_extra: usize) -> MixedGraph {
    let nodes = rng.gen_range(2..=max_nodes);
    let names: Vec<String> = (0..nodes).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for v in 1..nodes {
        let u = rng.gen_range(0..v);
        edges.push((names[u].clone(), names[v].clone()));
    }
    for _ in 0..rng.gen_range(0..=max_extra) {
        let u = rng.gen_range(0..nodes);
        let mut v = rng.gen_range(0..nodes - 1);
        if v >= u {
            v += 1;
        }
        edges.push((names[u].clone(), names[v].clone()));
    }
    edges.shuffle(rng);
    let edges: Vec<(String, String, String, bool)> =
        edges.into_iter().enumerate().map(|(i, (u, v))| (format!("e{i}"), u, v, false)).collect();
    MixedGraph::new(names.iter().map(String::as_str), edges.iter().map(|(a, b, c, d)| (a.as_str(), b.as_str(), c.as_str(), *d)), None)
        .unwrap()
}

/// Random greedoid on `n` elements: grow a random accessible family level by
/// level, then repair exchange failures by adding `X + y` until none remain.
pub fn random_greedoid(rng: &mut StdRng, n: usize) -> Greedoid {
    let density = rng.gen_range(0.15..0.6);
    let mut feasible = vec![false; 1 << n];
    feasible[0] = true;
    for m in all_subsets(n).skip(1) {
        let accessible = m.iter().any(|e| feasible[m.without(e).index()]);
        if accessible && rng.gen_bool(density) {
            feasible[m.index()] = true;
        }
    }
    loop {
        let family: Vec<SubsetMask> = all_subsets(n).filter(|m| feasible[m.index()]).collect();
        let mut repaired = false;
        'scan: for &x in &family {
            for &y in &family {
                if x.len() >= y.len() {
                    continue;
                }
                let candidates: Vec<usize> = (y - x).iter().collect();
                if candidates.iter().any(|&e| feasible[x.with(e).index()]) {
                    continue;
                }
                let e = *candidates.choose(rng).unwrap();
                feasible[x.with(e).index()] = true;
                repaired = true;
                break 'scan;
            }
        }
        if !repaired {
            break;
        }
    }
    let family = all_subsets(n).filter(|m| feasible[m.index()]);
    Greedoid::explicit(GroundSet::new(labels(n)).unwrap(), family).unwrap()
}

/// Random interval greedoid: rejection sampling over `random_greedoid`.
pub fn random_interval_greedoid(rng: &mut StdRng, n: usize) -> Greedoid {
    loop {
        let g = random_greedoid(rng, n);
        if g.class().is_interval() {
            return g;
        }
    }
}

pub fn random_nonneg(rng: &mut StdRng) -> Rational {
    frac(rng.gen_range(0..=12), rng.gen_range(1..=4))
}

pub fn random_nonneg_weights(rng: &mut StdRng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| random_nonneg(rng)).collect()
}

pub fn random_int_weights(rng: &mut StdRng, n: usize, max: i64) -> Vec<Rational> {
    (0..n).map(|_| int(rng.gen_range(0..=max))).collect()
}

pub fn random_positive(rng: &mut StdRng) -> Rational {
    frac(rng.gen_range(1..=9), rng.gen_range(1..=4))
}

pub fn random_signed(rng: &mut StdRng) -> Rational {
    frac(rng.gen_range(-6..=6), rng.gen_range(1..=3))
}

/// Small integer values give plenty of ties.
pub fn random_set_table(rng: &mut StdRng, g: &Greedoid, direction: Direction) -> BoundObjective {
    let values: HashMap<SubsetMask, Rational> = g.family().iter().map(|&a| (a, int(rng.gen_range(-3..=3)))).collect();
    BoundObjective { values, direction }
}

/// Local forest greedoids of several provenances, all with at most 10 elements.
pub fn local_forest_zoo() -> Vec<(String, Greedoid)> {
    use greedoid_lab::fixtures;
    let u32 = Greedoid::uniform_matroid(3, 2, None).unwrap();
    let u42 = Greedoid::uniform_matroid(4, 2, Some(labels(4))).unwrap();
    let k4 = MixedGraph::new(
        ["a", "b", "c", "d"],
        [
            ("ab", "a", "b", false),
            ("ac", "a", "c", false),
            ("ad", "a", "d", false),
            ("bc", "b", "c", false),
            ("bd", "b", "d", false),
            ("cd", "c", "d", false),
        ],
        None,
    )
    .unwrap();
    let directed = MixedGraph::new(
        ["r", "p", "q", "s"],
        [
            ("rp", "r", "p", true),
            ("rq", "r", "q", false),
            ("pq", "p", "q", true),
            ("qs", "q", "s", false),
            ("ps", "s", "p", true),
        ],
        None,
    )
    .unwrap();
    let ext = Greedoid::rooted_extension(&u32, SubsetMask::from_indices([0, 1]), &[1, 0]).unwrap();
    let k3 = fixtures::k3();
    let k3_ext = Greedoid::rooted_extension(&k3, SubsetMask::from_indices([0]), &[0]).unwrap();
    let fig1 = fixtures::fig1_greedoid();
    let sum = Greedoid::direct_sum(&fig1, &Greedoid::uniform_matroid(2, 1, Some(vec!["p".into(), "q".into()])).unwrap()).unwrap();
    let sum2 = Greedoid::direct_sum(&fixtures::fig2_greedoid(), &ext).unwrap();
    vec![
        ("fig1".into(), fig1),
        ("fig2".into(), fixtures::fig2_greedoid()),
        ("single".into(), fixtures::single_greedoid()),
        ("k3".into(), k3),
        ("uniform_4_2".into(), u42),
        ("graphic_k4".into(), Greedoid::graphic_matroid(k4).unwrap()),
        ("directed_branching".into(), Greedoid::branching(directed).unwrap()),
        ("rooted_extension_u32".into(), ext),
        ("rooted_extension_k3".into(), k3_ext),
        ("direct_sum_fig1_u21".into(), sum),
        ("direct_sum_fig2_ext".into(), sum2),
    ]
}

/// Local poset greedoids that are not all local forest, including the two
/// bundled counterexamples and direct sums with random branchings.
pub fn local_poset_zoo(rng: &mut StdRng, random: usize) -> Vec<(String, Greedoid)> {
    use greedoid_lab::fixtures;
    let mut out = local_forest_zoo();
    out.push(("lpg_counterexample".into(), fixtures::lpg_greedoid()));
    out.push(("shadow_strict".into(), fixtures::shadow_strict_greedoid()));
    for i in 0..random {
        let g = if i % 2 == 0 {
            let b = random_branching(rng, 6);
            let relabeled = relabel(&b, "t");
            Greedoid::direct_sum(&fixtures::shadow_strict_greedoid(), &relabeled).unwrap()
        } else {
            loop {
                let n = rng.gen_range(2..=5);
                let g = random_greedoid(rng, n);
                if g.class().is_local_poset() {
                    break g;
                }
            }
        };
        out.push((format!("random_local_poset_{i}"), g));
    }
    out
}

/// Same family under fresh labels `prefix0, prefix1, ...`.
pub fn relabel(g: &Greedoid, prefix: &str) -> Greedoid {
    let ground = GroundSet::new((0..g.len()).map(|i| format!("{prefix}{i}"))).unwrap();
    Greedoid::explicit(ground, g.family().iter().copied()).unwrap()
}

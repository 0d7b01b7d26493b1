//! Unique bases of subfeasible sets, paths, path orderings and shadows.

use crate::error::{Error, Result};
use crate::graph::MixedGraph;
use crate::greedoid::Greedoid;
use crate::rational::{zero, Rational};
use crate::subset::SubsetMask;

/// `sh_A(x) = |A| - r(A - x)` for every element, in index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowVector {
    pub values: Vec<usize>,
}

impl ShadowVector {
    pub fn dot(&self, c: &[Rational]) -> Rational {
        self.values.iter().zip(c).map(|(&s, w)| w * Rational::from_integer(s.into())).sum()
    }

    pub fn as_rationals(&self) -> Vec<Rational> {
        self.values.iter().map(|&s| Rational::from_integer(s.into())).collect()
    }
}

/// `Δ(X)`: the union of all feasible subsets of a subfeasible `X`.
pub fn delta(g: &Greedoid, x: SubsetMask) -> Result<SubsetMask> {
    if !g.class().is_interval() {
        return Err(Error::NotInterval);
    }
    if !g.is_subfeasible(x) {
        return Err(Error::NotSubfeasible(x));
    }
    let d = delta_unchecked(g, x);
    debug_assert!(g.is_feasible(d) && d.len() == g.rank(x));
    Ok(d)
}

pub(crate) fn delta_unchecked(g: &Greedoid, x: SubsetMask) -> SubsetMask {
    x.subsets().filter(|&s| g.is_feasible(s)).fold(SubsetMask::EMPTY, |acc, s| acc | s)
}

/// `P_x^A`: the smallest feasible subset of `A` containing `x`.
pub fn path(g: &Greedoid, a: SubsetMask, x: usize) -> Result<SubsetMask> {
    if !g.class().is_local_poset() {
        return Err(Error::NotLocalPoset);
    }
    if !g.is_feasible(a) {
        return Err(Error::NotFeasible(a));
    }
    if !a.contains(x) {
        return Err(Error::BadArgs(format!("element {} is not in {}", x, a)));
    }
    let p = path_unchecked(g, a, x);
    debug_assert!(g.is_feasible(p));
    Ok(p)
}

/// Intersection of the feasible subsets of `a` that contain `x`.
pub(crate) fn path_unchecked(g: &Greedoid, a: SubsetMask, x: usize) -> SubsetMask {
    let rest = a.without(x);
    rest.subsets()
        .map(|s| s.with(x))
        .filter(|&s| g.is_feasible(s))
        .fold(a, |acc, s| acc & s)
}

/// All paths of a local poset greedoid, ascending by bitmask.
pub fn all_paths(g: &Greedoid) -> Vec<SubsetMask> {
    g.family()
        .iter()
        .copied()
        .filter(|&p| p.iter().any(|x| path_unchecked(g, p, x) == p))
        .collect()
}

pub fn is_path(g: &Greedoid, p: SubsetMask) -> bool {
    g.is_feasible(p) && p.iter().any(|x| path_unchecked(g, p, x) == p)
}

/// Feasible orderings of `x`, lexicographically, stopping after `limit`.
pub fn feasible_orderings(g: &Greedoid, x: SubsetMask, limit: usize) -> Vec<Vec<usize>> {
    fn walk(
        g: &Greedoid,
        target: SubsetMask,
        cur: SubsetMask,
        seq: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if cur == target {
            out.push(seq.clone());
            return;
        }
        for e in (target - cur).iter() {
            if g.is_feasible(cur.with(e)) {
                seq.push(e);
                walk(g, target, cur.with(e), seq, out, limit);
                seq.pop();
            }
        }
    }
    let mut out = Vec::new();
    if g.is_feasible(x) {
        walk(g, x, SubsetMask::EMPTY, &mut Vec::new(), &mut out, limit);
    }
    out
}

/// The unique feasible ordering of a path in a local forest greedoid.
pub fn path_ordering(g: &Greedoid, p: SubsetMask) -> Result<Vec<usize>> {
    if !g.class().is_local_forest() {
        return Err(Error::NotLocalForest);
    }
    if !is_path(g, p) {
        return Err(Error::NotAPath(p));
    }
    let mut orderings = feasible_orderings(g, p, 2);
    debug_assert_eq!(orderings.len(), 1);
    Ok(orderings.swap_remove(0))
}

pub fn shadow(g: &Greedoid, a: SubsetMask, x: usize) -> Result<usize> {
    if !g.is_feasible(a) {
        return Err(Error::NotFeasible(a));
    }
    Ok(a.len() - g.rank(a.without(x)))
}

pub fn shadow_vector(g: &Greedoid, a: SubsetMask) -> Result<ShadowVector> {
    if !g.is_feasible(a) {
        return Err(Error::NotFeasible(a));
    }
    Ok(ShadowVector { values: (0..g.len()).map(|x| a.len() - g.rank(a.without(x))).collect() })
}

/// Both sides of `Σ c(x)·sh_A(x) = Σ c(P_x^A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectiveIdentity {
    pub shadow_side: Rational,
    pub path_side: Rational,
}

impl ObjectiveIdentity {
    pub fn holds(&self) -> bool {
        self.shadow_side == self.path_side
    }
}

pub fn weight_of(c: &[Rational], set: SubsetMask) -> Rational {
    set.iter().map(|i| &c[i]).sum()
}

pub fn check_objfn_identity(g: &Greedoid, a: SubsetMask, c: &[Rational]) -> Result<ObjectiveIdentity> {
    if !g.class().is_local_poset() {
        return Err(Error::NotLocalPoset);
    }
    let shadow_side = shadow_vector(g, a)?.dot(c);
    let path_side = a.iter().map(|x| weight_of(c, path_unchecked(g, a, x))).fold(zero(), |s, v| s + v);
    Ok(ObjectiveIdentity { shadow_side, path_side })
}

/// `Σ_{x∈A} r(B−x) <= r(B−A) + (|A|−1)·r(B)` for every subfeasible `B` and
/// nonempty `A ⊆ B`. Returns the first violating `(B, A)`.
pub fn check_rank_deficit_bound(g: &Greedoid) -> std::result::Result<(), (SubsetMask, SubsetMask)> {
    for b in crate::subset::all_subsets(g.len()).filter(|&b| g.is_subfeasible(b)) {
        let rb = g.rank(b);
        for a in b.subsets().filter(|a| !a.is_empty()) {
            let lhs: usize = a.iter().map(|x| g.rank(b.without(x))).sum();
            if lhs > g.rank(b - a) + (a.len() - 1) * rb {
                return Err((b, a));
            }
        }
    }
    Ok(())
}

/// Root path of edge `e` in the root tree `a`, found by walking the tree.
pub fn tree_path(graph: &MixedGraph, a: SubsetMask, e: usize) -> Option<SubsetMask> {
    let parents = graph.root_tree(a)?;
    if !a.contains(e) {
        return None;
    }
    // edge entering each node from its parent
    let mut entering = vec![None; graph.nodes().len()];
    for i in a.iter() {
        let from = parents[i]?;
        entering[graph.child_node(i, from)] = Some(i);
    }
    let mut out = SubsetMask::EMPTY;
    let mut cur = Some(e);
    while let Some(i) = cur {
        out = out.with(i);
        cur = entering[parents[i]?];
    }
    Some(out)
}

/// Number of tree nodes cut off from the root when `e` is removed from `a`.
pub fn tree_shadow(graph: &MixedGraph, a: SubsetMask, e: usize) -> Option<usize> {
    graph.root_tree(a)?;
    if !a.contains(e) {
        return Some(0);
    }
    let rest = a.without(e);
    let mut reach = vec![false; graph.nodes().len()];
    reach[graph.root()] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for i in rest.iter() {
            let ed = &graph.edges()[i];
            if reach[ed.tail] != reach[ed.head] {
                reach[ed.tail] = true;
                reach[ed.head] = true;
                changed = true;
            }
        }
    }
    let tree_nodes = a.len() + 1;
    Some(tree_nodes - reach.iter().filter(|&&r| r).count())
}

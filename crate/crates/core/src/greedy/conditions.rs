//! Exhaustive checkers for greedy optimality conditions.
//!
//! Every checker works in the maximization convention: a minimization
//! objective is scored through `-w`.

use std::collections::HashMap;

use super::{BoundObjective, Evaluator};
use crate::error::{Error, Result};
use crate::greedoid::Greedoid;
use crate::paths;
use crate::rational::Rational;
use crate::subset::SubsetMask;

/// Continuations `x` of `A` with `w(A+x) >= w(A+u)` for all `u ∈ Γ(A)`.
fn best_continuations(g: &Greedoid, obj: &BoundObjective) -> HashMap<SubsetMask, SubsetMask> {
    g.family()
        .iter()
        .map(|&a| {
            let gamma = g.continuations_unchecked(a);
            let best = gamma.iter().map(|u| obj.score(a.with(u))).max();
            let set = match best {
                Some(best) => SubsetMask::from_indices(gamma.iter().filter(|&u| obj.score(a.with(u)) == best)),
                None => SubsetMask::EMPTY,
            };
            (a, set)
        })
        .collect()
}

/// Two feasible strings where the one carrying the best continuation scores lower.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KlWitness {
    /// 1 for the substitution condition, 2 for the swap condition.
    pub condition: u8,
    /// Length of the common prefix whose best continuation is involved.
    pub prefix_len: usize,
    /// String containing the best continuation; should score at least as high.
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

/// Both ordered-objective conditions over all pairs of feasible strings.
pub fn check_kl_conditions(g: &Greedoid, eval: &Evaluator) -> Result<Option<KlWitness>> {
    let strings = super::feasible_strings(g);
    let mut best_cache: HashMap<Vec<usize>, SubsetMask> = HashMap::new();
    let mut best_of = |prefix: &[usize]| -> Result<SubsetMask> {
        if let Some(&m) = best_cache.get(prefix) {
            return Ok(m);
        }
        let set = SubsetMask::from_indices(prefix.iter().copied());
        let gamma = g.continuations_unchecked(set);
        let mut scored = Vec::new();
        let mut next = prefix.to_vec();
        for u in gamma.iter() {
            next.push(u);
            scored.push((u, eval.score(&next)?));
            next.pop();
        }
        let top = scored.iter().map(|(_, s)| s.clone()).max();
        let m = SubsetMask::from_indices(
            scored.iter().filter(|(_, s)| Some(s) == top.as_ref()).map(|(u, _)| *u),
        );
        best_cache.insert(prefix.to_vec(), m);
        Ok(m)
    };

    for s in &strings {
        let used = SubsetMask::from_indices(s.iter().copied());
        let score_s = eval.score(s)?;
        for i in 0..s.len() {
            let best = best_of(&s[..i])?;
            for p in i..s.len() {
                if !best.contains(s[p]) {
                    continue;
                }
                for z in (g.full() - used).iter() {
                    let mut other = s.clone();
                    other[p] = z;
                    if g.is_feasible_sequence(&other) && score_s < eval.score(&other)? {
                        return Ok(Some(KlWitness { condition: 1, prefix_len: i, first: s.clone(), second: other }));
                    }
                }
            }
            if best.contains(s[i]) {
                for q in i + 1..s.len() {
                    let mut other = s.clone();
                    other.swap(i, q);
                    if g.is_feasible_sequence(&other) && score_s < eval.score(&other)? {
                        return Ok(Some(KlWitness { condition: 2, prefix_len: i, first: s.clone(), second: other }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// `A ⊆ B`, `A+x, B+x` feasible, `x` best for `A`, but `w(B+x) < w(B+z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Condition3Witness {
    pub a: SubsetMask,
    pub b: SubsetMask,
    pub x: usize,
    pub z: usize,
}

/// The set-function condition once claimed equivalent to the substitution
/// condition. It does not imply greedy optimality.
pub fn check_condition_3(g: &Greedoid, obj: &BoundObjective) -> Option<Condition3Witness> {
    let best = best_continuations(g, obj);
    for &a in g.family() {
        for x in best[&a].iter() {
            for &b in g.family().iter().filter(|&&b| a.is_subset_of(b) && !b.contains(x)) {
                if !g.is_feasible(b.with(x)) {
                    continue;
                }
                let bx = obj.score(b.with(x));
                for z in g.continuations_unchecked(b).iter() {
                    if bx < obj.score(b.with(z)) {
                        return Some(Condition3Witness { a, b, x, z });
                    }
                }
            }
        }
    }
    None
}

/// `(A, B, x)` with `x` best for `A ⊆ B`, `B` a base, `x ∉ B`, and no
/// `y ∈ B − A` with `B − y + x` a base of at least the same value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub a: SubsetMask,
    pub b: SubsetMask,
    pub x: usize,
}

impl ExchangeViolation {
    pub fn is_violation(&self, g: &Greedoid, obj: &BoundObjective) -> bool {
        let ExchangeViolation { a, b, x } = *self;
        if !(g.is_feasible(a) && a.is_subset_of(b) && g.is_base(b) && !b.contains(x) && g.is_feasible(a.with(x))) {
            return false;
        }
        let ax = obj.score(a.with(x));
        let best = g.continuations_unchecked(a).iter().all(|u| ax >= obj.score(a.with(u)));
        best && !exchange_partner_exists(g, obj, a, b, x)
    }
}

fn exchange_partner_exists(g: &Greedoid, obj: &BoundObjective, a: SubsetMask, b: SubsetMask, x: usize) -> bool {
    let wb = obj.score(b);
    (b - a).iter().any(|y| {
        let swapped = b.without(y).with(x);
        g.is_base(swapped) && obj.score(swapped) >= wb
    })
}

/// Exchange-type sufficient condition for greedy optimality on any greedoid.
pub fn check_condition_6(g: &Greedoid, obj: &BoundObjective) -> Option<ExchangeViolation> {
    let best = best_continuations(g, obj);
    let bases = g.bases();
    for &a in g.family() {
        for &b in bases.iter().filter(|b| a.is_subset_of(**b)) {
            for x in (best[&a] - b).iter() {
                if !exchange_partner_exists(g, obj, a, b, x) {
                    return Some(ExchangeViolation { a, b, x });
                }
            }
        }
    }
    None
}

/// `A ⊆ B`, `x` best for `A`, `B+x` and `B+z` bases with `Δ(B) ∪ {x,z}`
/// infeasible, yet `w(B+x) < w(B+z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Condition7Witness {
    pub a: SubsetMask,
    pub b: SubsetMask,
    pub x: usize,
    pub z: usize,
}

/// Interval-greedoid sufficient condition for greedy optimality.
pub fn check_condition_7(g: &Greedoid, obj: &BoundObjective) -> Result<Option<Condition7Witness>> {
    if !g.class().is_interval() {
        return Err(Error::NotInterval);
    }
    let best = best_continuations(g, obj);
    for bx in g.bases() {
        for x in bx.iter() {
            let b = bx.without(x);
            let delta = paths::delta_unchecked(g, b);
            let sx = obj.score(bx);
            for z in (g.full() - b).iter().filter(|&z| z != x) {
                let bz = b.with(z);
                if !g.is_base(bz) || g.is_feasible(delta.with(x).with(z)) || sx >= obj.score(bz) {
                    continue;
                }
                let hit = g
                    .family()
                    .iter()
                    .find(|&&a| a.is_subset_of(b) && best[&a].contains(x));
                if let Some(&a) = hit {
                    return Ok(Some(Condition7Witness { a, b, x, z }));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonotoneWitness {
    /// Paths `A ⊆ B` with `f(A) > f(B)`.
    Inclusion { a: SubsetMask, b: SubsetMask },
    /// Paths with `f(A) <= f(B)` but `f(A ∪ C) > f(B ∪ C)`, where `C` is
    /// disjoint from both and the unions are paths too.
    Extension { a: SubsetMask, b: SubsetMask, c: SubsetMask },
}

/// Path-function monotonicity under inclusion and under a common disjoint
/// extension.
pub fn check_monotone_f(g: &Greedoid, f: &HashMap<SubsetMask, Rational>) -> Result<Option<MonotoneWitness>> {
    if !g.class().is_local_forest() {
        return Err(Error::NotLocalForest);
    }
    let all = paths::all_paths(g);
    let value = |p: SubsetMask| {
        f.get(&p).ok_or_else(|| Error::ObjectiveUndefined(format!("no path value for {}", g.ground().format_mask(p))))
    };
    for &a in &all {
        for &b in &all {
            if a != b && a.is_subset_of(b) && value(a)? > value(b)? {
                return Ok(Some(MonotoneWitness::Inclusion { a, b }));
            }
        }
    }
    for &a in &all {
        for &a_ext in all.iter().filter(|&&p| a.is_subset_of(p) && p != a) {
            let c = a_ext - a;
            for &b in all.iter().filter(|b| b.is_disjoint(c)) {
                let b_ext = b | c;
                if value(a)? <= value(b)? && all.binary_search(&b_ext).is_ok() && value(a_ext)? > value(b_ext)? {
                    return Ok(Some(MonotoneWitness::Extension { a, b, c }));
                }
            }
        }
    }
    Ok(None)
}

/// Tabulates `f(P) = rule(P)` on every path.
pub fn path_table(g: &Greedoid, rule: impl Fn(SubsetMask) -> Rational) -> HashMap<SubsetMask, Rational> {
    paths::all_paths(g).into_iter().map(|p| (p, rule(p))).collect()
}

/// `(B, x, z, e)` where the paths of `e` in `B+x` and `B+z` differ outside `Δ(B)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathIntersectionWitness {
    pub b: SubsetMask,
    pub x: usize,
    pub z: usize,
    pub e: usize,
}

/// For every `B` and `x, z ∉ B` with `B+x, B+z` feasible and `Δ(B) ∪ {x,z}`
/// infeasible, `P_e^{B+x}` and `P_e^{B+z}` agree on `B − Δ(B)` for all
/// `e ∈ B − Δ(B)`.
pub fn check_path_intersections(g: &Greedoid) -> Result<Option<PathIntersectionWitness>> {
    if !g.class().is_local_poset() {
        return Err(Error::NotLocalPoset);
    }
    for &bx in g.family() {
        for x in bx.iter() {
            let b = bx.without(x);
            let delta = paths::delta_unchecked(g, b);
            let outside = b - delta;
            for z in (g.full() - b).iter().filter(|&z| z != x) {
                let bz = b.with(z);
                if !g.is_feasible(bz) || g.is_feasible(delta.with(x).with(z)) {
                    continue;
                }
                for e in outside.iter() {
                    let px = paths::path_unchecked(g, bx, e) & outside;
                    let pz = paths::path_unchecked(g, bz, e) & outside;
                    if px != pz {
                        return Ok(Some(PathIntersectionWitness { b, x, z, e }));
                    }
                }
            }
        }
    }
    Ok(None)
}

//! Structural classification of greedoids with explicit counterexamples.
//!
//! All checks are exhaustive over the materialized family. The local forest
//! check is a quadruple loop; it stays fast up to roughly 14 elements.

use crate::error::{Error, Result, Violation};
use crate::greedoid::Greedoid;
use crate::paths;
use crate::subset::SubsetMask;

/// `A, B` feasible with `A ∪ B` subfeasible, yet `A ∪ B` (or `A ∩ B`) infeasible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairWitness {
    pub a: SubsetMask,
    pub b: SubsetMask,
}

/// `A, A+x, A+y, A+x+y, A+x+y+z` feasible but neither `A+x+z` nor `A+y+z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ForestWitness {
    pub a: SubsetMask,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

/// `A ⊆ B`, `A + x` feasible, `B` a base, `x ∉ B`, and no exchange partner in `B − A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExchangeWitness {
    pub a: SubsetMask,
    pub b: SubsetMask,
    pub x: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub is_greedoid: bool,
    pub has_lup: bool,
    pub has_lip: bool,
    pub has_lfp: bool,
    pub has_strong_exchange: bool,
    pub greedoid_witness: Option<Violation>,
    pub lup_witness: Option<PairWitness>,
    pub lip_witness: Option<PairWitness>,
    pub lfp_witness: Option<ForestWitness>,
    pub strong_exchange_witness: Option<ExchangeWitness>,
}

impl ClassReport {
    pub fn is_interval(&self) -> bool {
        self.is_greedoid && self.has_lup
    }

    pub fn is_local_poset(&self) -> bool {
        self.is_interval() && self.has_lip
    }

    pub fn is_local_forest(&self) -> bool {
        self.is_local_poset() && self.has_lfp
    }

    pub fn class_name(&self) -> &'static str {
        if !self.is_greedoid {
            "not_a_greedoid"
        } else if self.is_local_forest() {
            "local_forest"
        } else if self.is_local_poset() {
            "local_poset"
        } else if self.is_interval() {
            "interval"
        } else {
            "greedoid"
        }
    }
}

/// Every property is computed independently; nothing short-circuits.
pub fn classify(g: &Greedoid) -> ClassReport {
    let greedoid_witness = g.verify_axioms().err();
    let lup_witness = find_union_violation(g);
    let lip_witness = find_intersection_violation(g);
    let lfp_witness = find_forest_violation(g);
    let strong_exchange_witness = find_strong_exchange_violation(g);
    ClassReport {
        is_greedoid: greedoid_witness.is_none(),
        has_lup: lup_witness.is_none(),
        has_lip: lip_witness.is_none(),
        has_lfp: lfp_witness.is_none(),
        has_strong_exchange: strong_exchange_witness.is_none(),
        greedoid_witness,
        lup_witness,
        lip_witness,
        lfp_witness,
        strong_exchange_witness,
    }
}

fn find_pair(g: &Greedoid, bad: impl Fn(SubsetMask, SubsetMask) -> bool) -> Option<PairWitness> {
    let family = g.family();
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if g.is_subfeasible(a | b) && bad(a, b) {
                return Some(PairWitness { a, b });
            }
        }
    }
    None
}

fn find_union_violation(g: &Greedoid) -> Option<PairWitness> {
    find_pair(g, |a, b| !g.is_feasible(a | b))
}

fn find_intersection_violation(g: &Greedoid) -> Option<PairWitness> {
    find_pair(g, |a, b| !g.is_feasible(a & b))
}

fn find_forest_violation(g: &Greedoid) -> Option<ForestWitness> {
    for &a in g.family() {
        let gamma = g.continuations_unchecked(a);
        for x in gamma.iter() {
            for y in gamma.iter().filter(|&y| y > x) {
                let axy = a.with(x).with(y);
                if !g.is_feasible(axy) {
                    continue;
                }
                for z in g.continuations_unchecked(axy).iter() {
                    if !g.is_feasible(a.with(x).with(z)) && !g.is_feasible(a.with(y).with(z)) {
                        return Some(ForestWitness { a, x, y, z });
                    }
                }
            }
        }
    }
    None
}

fn find_strong_exchange_violation(g: &Greedoid) -> Option<ExchangeWitness> {
    let bases = g.bases();
    for &a in g.family() {
        let gamma = g.continuations_unchecked(a);
        for &b in bases.iter().filter(|b| a.is_subset_of(**b)) {
            for x in (gamma - b).iter() {
                let ok = (b - a)
                    .iter()
                    .any(|y| g.is_base(b.without(y).with(x)) && g.is_feasible(a.with(y)));
                if !ok {
                    return Some(ExchangeWitness { a, b, x });
                }
            }
        }
    }
    None
}

/// Strong exchange axiom; `Ok(())` when it holds.
pub fn check_strong_exchange(g: &Greedoid) -> std::result::Result<(), ExchangeWitness> {
    match find_strong_exchange_violation(g) {
        Some(w) => Err(w),
        None => Ok(()),
    }
}

/// `r(A) + r(B) <= r(A ∪ B) + r(A ∩ B)` for all `A, B` with `A ∪ B` subfeasible.
/// Returns the first violating pair.
pub fn check_supermodularity(g: &Greedoid) -> std::result::Result<(), PairWitness> {
    for u in crate::subset::all_subsets(g.len()).filter(|&u| g.is_subfeasible(u)) {
        let ru = g.rank(u);
        for a in u.subsets() {
            let ra = g.rank(a);
            for c in a.subsets() {
                let b = (u - a) | c;
                if ra + g.rank(b) > ru + g.rank(c) {
                    return Err(PairWitness { a, b });
                }
            }
        }
    }
    Ok(())
}

/// A counterexample to unique path orderings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathWitness {
    /// A path with more than one feasible ordering (the first two are listed).
    SeveralOrderings { path: SubsetMask, orderings: [Vec<usize>; 2] },
    /// A feasible ordering of a path with a prefix that is not itself a path.
    PrefixNotPath { path: SubsetMask, ordering: Vec<usize>, prefix_len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathUniquenessReport {
    /// Every path has exactly one feasible ordering.
    pub unique_orderings: bool,
    /// Every prefix of every feasible ordering of a path is a path.
    pub prefixes_are_paths: bool,
    pub witness: Option<PathWitness>,
}

impl PathUniquenessReport {
    pub fn holds(&self) -> bool {
        self.unique_orderings && self.prefixes_are_paths
    }
}

/// Checks unique feasible orderings of paths and the prefix property, which
/// for local poset greedoids are both equivalent to the local forest property.
pub fn check_path_uniqueness(g: &Greedoid) -> Result<PathUniquenessReport> {
    if !g.class().is_local_poset() {
        return Err(Error::NotLocalPoset);
    }
    let all = paths::all_paths(g);
    let mut report =
        PathUniquenessReport { unique_orderings: true, prefixes_are_paths: true, witness: None };
    for &p in &all {
        let orderings = paths::feasible_orderings(g, p, usize::MAX);
        if orderings.len() != 1 {
            report.unique_orderings = false;
            if report.witness.is_none() {
                report.witness = Some(PathWitness::SeveralOrderings {
                    path: p,
                    orderings: [orderings[0].clone(), orderings[1].clone()],
                });
            }
        }
        for ordering in &orderings {
            let mut prefix = SubsetMask::EMPTY;
            for (i, &e) in ordering.iter().enumerate() {
                prefix = prefix.with(e);
                if all.binary_search(&prefix).is_err() {
                    report.prefixes_are_paths = false;
                    if report.witness.is_none() {
                        report.witness = Some(PathWitness::PrefixNotPath {
                            path: p,
                            ordering: ordering.clone(),
                            prefix_len: i + 1,
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

impl PairWitness {
    /// Re-checks a local union violation against the definition.
    pub fn violates_union(&self, g: &Greedoid) -> bool {
        g.is_feasible(self.a)
            && g.is_feasible(self.b)
            && g.is_subfeasible(self.a | self.b)
            && !g.is_feasible(self.a | self.b)
    }

    pub fn violates_intersection(&self, g: &Greedoid) -> bool {
        g.is_feasible(self.a)
            && g.is_feasible(self.b)
            && g.is_subfeasible(self.a | self.b)
            && !g.is_feasible(self.a & self.b)
    }

    pub fn violates_supermodularity(&self, g: &Greedoid) -> bool {
        g.is_subfeasible(self.a | self.b)
            && g.rank(self.a) + g.rank(self.b) > g.rank(self.a | self.b) + g.rank(self.a & self.b)
    }
}

impl ForestWitness {
    pub fn is_violation(&self, g: &Greedoid) -> bool {
        let ForestWitness { a, x, y, z } = *self;
        let f = |s: SubsetMask| g.is_feasible(s);
        [x, y, z].iter().all(|&e| !a.contains(e))
            && x != y
            && f(a)
            && f(a.with(x))
            && f(a.with(y))
            && f(a.with(x).with(y))
            && f(a.with(x).with(y).with(z))
            && !f(a.with(x).with(z))
            && !f(a.with(y).with(z))
    }
}

impl ExchangeWitness {
    pub fn is_violation(&self, g: &Greedoid) -> bool {
        let ExchangeWitness { a, b, x } = *self;
        g.is_feasible(a)
            && g.is_feasible(a.with(x))
            && a.is_subset_of(b)
            && g.is_base(b)
            && !b.contains(x)
            && !(b - a).iter().any(|y| g.is_base(b.without(y).with(x)) && g.is_feasible(a.with(y)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::greedoid::Greedoid;

    #[test]
    fn shadow_strict_is_local_poset_but_not_forest() {
        let g = fixtures::shadow_strict_greedoid();
        let r = classify(&g);
        assert!(r.has_lup && r.has_lip && !r.has_lfp);
        assert_eq!(r.class_name(), "local_poset");
        let w = r.lfp_witness.unwrap();
        let m = |s: &str| g.ground().parse_mask(s).unwrap();
        assert_eq!(w, ForestWitness { a: SubsetMask::EMPTY, x: 0, y: 1, z: 2 });
        assert!(w.is_violation(&g));
        assert!(!g.is_feasible(m("a,c")) && !g.is_feasible(m("b,c")));
    }

    #[test]
    fn branching_and_matroids_are_local_forest() {
        assert!(classify(&fixtures::fig1_greedoid()).is_local_forest());
        assert!(classify(&fixtures::fig2_greedoid()).is_local_forest());
        let u32_ = Greedoid::uniform_matroid(3, 2, None).unwrap();
        let r = classify(&u32_);
        assert!(r.is_local_forest() && r.has_strong_exchange);
    }

    #[test]
    fn strong_exchange() {
        assert!(check_strong_exchange(&Greedoid::uniform_matroid(2, 1, None).unwrap()).is_ok());
        assert!(check_strong_exchange(&Greedoid::uniform_matroid(2, 0, None).unwrap()).is_ok());
        let g = fixtures::lpg_greedoid();
        let w = check_strong_exchange(&g).unwrap_err();
        assert!(w.is_violation(&g));
    }

    #[test]
    fn supermodularity() {
        assert!(check_supermodularity(&fixtures::lpg_greedoid()).is_ok());
        assert!(check_supermodularity(&fixtures::fig1_greedoid()).is_ok());
        // Not interval: {a} and {b} feasible with {a,b} subfeasible but infeasible.
        let g = Greedoid::explicit_labels(&["a", "b", "c"], &[&[], &["a"], &["b"], &["a", "c"], &["b", "c"], &["a", "b", "c"]])
            .unwrap();
        let r = classify(&g);
        assert!(!r.has_lup && r.lup_witness.unwrap().violates_union(&g));
        let w = check_supermodularity(&g).unwrap_err();
        assert!(w.violates_supermodularity(&g));
    }

    #[test]
    fn path_uniqueness() {
        let fig1 = fixtures::fig1_greedoid();
        assert!(check_path_uniqueness(&fig1).unwrap().holds());

        let g = fixtures::shadow_strict_greedoid();
        let report = check_path_uniqueness(&g).unwrap();
        assert!(!report.unique_orderings);
        let Some(PathWitness::SeveralOrderings { path, orderings }) = report.witness else {
            panic!("expected two orderings")
        };
        assert_eq!(g.ground().format_mask(path), "a,b,c");
        assert_eq!(orderings, [vec![0, 1, 2], vec![1, 0, 2]]);

        let single = fixtures::single_greedoid();
        assert!(check_path_uniqueness(&single).unwrap().holds());

        let not_interval = Greedoid::explicit_labels(
            &["a", "b", "c"],
            &[&[], &["a"], &["b"], &["a", "c"], &["b", "c"], &["a", "b", "c"]],
        )
        .unwrap();
        assert!(matches!(check_path_uniqueness(&not_interval), Err(Error::NotLocalPoset)));
    }
}

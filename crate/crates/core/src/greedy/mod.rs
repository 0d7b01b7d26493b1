//! The greedy algorithm on greedoids, the objective families it runs on, a
//! brute-force optimum for comparison, and checkers for sufficient
//! optimality conditions.

mod conditions;
mod minor;

use std::collections::{BTreeSet, HashMap};

pub use conditions::{
    check_condition_3, check_condition_6, check_condition_7, check_kl_conditions, check_monotone_f,
    check_path_intersections, path_table, Condition3Witness, Condition7Witness, ExchangeViolation,
    KlWitness, MonotoneWitness, PathIntersectionWitness,
};
pub use minor::violation_minor;

use crate::error::{Error, Result};
use crate::greedoid::{Greedoid, Minor};
use crate::paths;
use crate::rational::{zero, Rational};
use crate::subset::SubsetMask;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Min,
    Max,
}

impl Direction {
    /// Maps a value into the maximization convention.
    pub fn score(self, value: &Rational) -> Rational {
        match self {
            Direction::Max => value.clone(),
            Direction::Min => -value.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ObjectiveKind {
    /// Explicit value for every feasible set.
    SetTable(HashMap<SubsetMask, Rational>),
    /// `w(A) = c(A)`.
    Linear(Vec<Rational>),
    /// `w(A) = Σ_{x∈A} c(P_x^A)`.
    PathSum(Vec<Rational>),
    /// `w(A) = Σ_{x∈A} max{c(y) : y ∈ P_x^A}`.
    Bottleneck(Vec<Rational>),
    /// `w(A) = Σ_{x∈A} f(P_x^A)` with `f` tabulated on paths.
    PathFunction(HashMap<SubsetMask, Rational>),
    /// Explicit value for every feasible ordering.
    OrderedTable(HashMap<Vec<usize>, Rational>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Objective {
    pub kind: ObjectiveKind,
    pub direction: Direction,
}

impl Objective {
    pub fn new(kind: ObjectiveKind, direction: Direction) -> Self {
        Objective { kind, direction }
    }

    pub fn is_ordered(&self) -> bool {
        matches!(self.kind, ObjectiveKind::OrderedTable(_))
    }

    /// Tabulates an order-independent objective on every feasible set.
    pub fn bind(&self, g: &Greedoid) -> Result<BoundObjective> {
        let needs_paths = matches!(
            self.kind,
            ObjectiveKind::PathSum(_) | ObjectiveKind::Bottleneck(_) | ObjectiveKind::PathFunction(_)
        );
        if needs_paths && !g.class().is_local_poset() {
            return Err(Error::NotLocalPoset);
        }
        let check_len = |c: &Vec<Rational>| {
            if c.len() == g.len() {
                Ok(())
            } else {
                Err(Error::BadArgs(format!("{} weights for {} elements", c.len(), g.len())))
            }
        };
        let mut values = HashMap::with_capacity(g.family().len());
        for &a in g.family() {
            let v = match &self.kind {
                ObjectiveKind::SetTable(t) => t.get(&a).cloned().ok_or_else(|| {
                    Error::ObjectiveUndefined(format!("no table value for {}", g.ground().format_mask(a)))
                })?,
                ObjectiveKind::Linear(c) => {
                    check_len(c)?;
                    paths::weight_of(c, a)
                }
                ObjectiveKind::PathSum(c) => {
                    check_len(c)?;
                    a.iter().map(|x| paths::weight_of(c, paths::path_unchecked(g, a, x))).sum()
                }
                ObjectiveKind::Bottleneck(c) => {
                    check_len(c)?;
                    a.iter()
                        .map(|x| {
                            let p = paths::path_unchecked(g, a, x);
                            p.iter().map(|y| &c[y]).max().cloned().unwrap_or_else(zero)
                        })
                        .sum()
                }
                ObjectiveKind::PathFunction(f) => {
                    let mut total = zero();
                    for x in a.iter() {
                        let p = paths::path_unchecked(g, a, x);
                        total += f.get(&p).ok_or_else(|| {
                            Error::ObjectiveUndefined(format!("no path value for {}", g.ground().format_mask(p)))
                        })?;
                    }
                    total
                }
                ObjectiveKind::OrderedTable(_) => {
                    return Err(Error::ObjectiveUndefined("ordered objective has no set form".into()))
                }
            };
            values.insert(a, v);
        }
        Ok(BoundObjective { values, direction: self.direction })
    }

    pub fn evaluator(&self, g: &Greedoid) -> Result<Evaluator> {
        match &self.kind {
            ObjectiveKind::OrderedTable(t) => {
                Ok(Evaluator::Ordered { table: t.clone(), direction: self.direction })
            }
            _ => Ok(Evaluator::Set(self.bind(g)?)),
        }
    }
}

/// An order-independent objective evaluated on every feasible set.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundObjective {
    pub values: HashMap<SubsetMask, Rational>,
    pub direction: Direction,
}

impl BoundObjective {
    pub fn value(&self, a: SubsetMask) -> &Rational {
        &self.values[&a]
    }

    /// Value in the maximization convention.
    pub fn score(&self, a: SubsetMask) -> Rational {
        self.direction.score(self.value(a))
    }

    /// `w'(Z) = w(Z ∪ contracted)` on the minor's feasible sets.
    pub fn transport(&self, minor: &Minor) -> BoundObjective {
        let values = minor
            .greedoid
            .family()
            .iter()
            .map(|&z| (z, self.value(minor.embedding.lift(z)).clone()))
            .collect();
        BoundObjective { values, direction: self.direction }
    }

    pub fn negated(&self) -> BoundObjective {
        let values = self.values.iter().map(|(&k, v)| (k, -v.clone())).collect();
        let direction = match self.direction {
            Direction::Min => Direction::Max,
            Direction::Max => Direction::Min,
        };
        BoundObjective { values, direction }
    }

    pub fn into_objective(self) -> Objective {
        Objective::new(ObjectiveKind::SetTable(self.values), self.direction)
    }
}

/// Scores feasible orderings; set objectives ignore the order.
#[derive(Debug, Clone)]
pub enum Evaluator {
    Set(BoundObjective),
    Ordered { table: HashMap<Vec<usize>, Rational>, direction: Direction },
}

impl Evaluator {
    pub fn direction(&self) -> Direction {
        match self {
            Evaluator::Set(b) => b.direction,
            Evaluator::Ordered { direction, .. } => *direction,
        }
    }

    pub fn value(&self, seq: &[usize]) -> Result<Rational> {
        match self {
            Evaluator::Set(b) => {
                let set = SubsetMask::from_indices(seq.iter().copied());
                b.values.get(&set).cloned().ok_or(Error::NotFeasible(set))
            }
            Evaluator::Ordered { table, .. } => table
                .get(seq)
                .cloned()
                .ok_or_else(|| Error::ObjectiveUndefined(format!("no value for ordering {seq:?}"))),
        }
    }

    pub fn score(&self, seq: &[usize]) -> Result<Rational> {
        Ok(self.direction().score(&self.value(seq)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieRule {
    LowestIndex,
    AllRuns,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pick {
    pub element: usize,
    /// `Γ(A)` just before this pick.
    pub continuations: SubsetMask,
    /// Objective value of the set after this pick.
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTrace {
    pub picks: Vec<Pick>,
    pub base: SubsetMask,
    pub value: Rational,
}

impl GreedyTrace {
    pub fn order(&self) -> Vec<usize> {
        self.picks.iter().map(|p| p.element).collect()
    }
}

/// Runs the greedy algorithm. `LowestIndex` yields one trace; `AllRuns`
/// yields every trace some legal tie-breaking produces, in DFS order.
pub fn greedy(g: &Greedoid, obj: &Objective, tie: TieRule) -> Result<Vec<GreedyTrace>> {
    let eval = obj.evaluator(g)?;
    match tie {
        TieRule::LowestIndex => Ok(vec![greedy_run(g, &eval)?]),
        TieRule::AllRuns => greedy_all_runs(g, &eval),
    }
}

/// Candidates of one greedy step: `Γ(A)` and the tied best continuations.
fn step(g: &Greedoid, eval: &Evaluator, seq: &[usize]) -> Result<(SubsetMask, Vec<(usize, Rational)>)> {
    let set = SubsetMask::from_indices(seq.iter().copied());
    let gamma = g.continuations_unchecked(set);
    let mut best: Option<Rational> = None;
    let mut ties = Vec::new();
    let mut next = seq.to_vec();
    for x in gamma.iter() {
        next.push(x);
        let value = eval.value(&next)?;
        next.pop();
        let score = eval.direction().score(&value);
        match &best {
            Some(b) if score < *b => {}
            Some(b) if score == *b => ties.push((x, value)),
            _ => {
                best = Some(score);
                ties = vec![(x, value)];
            }
        }
    }
    Ok((gamma, ties))
}

pub fn greedy_run(g: &Greedoid, eval: &Evaluator) -> Result<GreedyTrace> {
    let mut seq = Vec::new();
    let mut picks = Vec::new();
    loop {
        let (gamma, ties) = step(g, eval, &seq)?;
        let Some((x, value)) = ties.into_iter().next() else { break };
        seq.push(x);
        picks.push(Pick { element: x, continuations: gamma, value });
    }
    Ok(GreedyTrace { value: eval.value(&seq)?, base: SubsetMask::from_indices(seq), picks })
}

pub fn greedy_all_runs(g: &Greedoid, eval: &Evaluator) -> Result<Vec<GreedyTrace>> {
    fn walk(
        g: &Greedoid,
        eval: &Evaluator,
        seq: &mut Vec<usize>,
        picks: &mut Vec<Pick>,
        out: &mut Vec<GreedyTrace>,
    ) -> Result<()> {
        let (gamma, ties) = step(g, eval, seq)?;
        if ties.is_empty() {
            out.push(GreedyTrace {
                picks: picks.clone(),
                base: SubsetMask::from_indices(seq.iter().copied()),
                value: eval.value(seq)?,
            });
            return Ok(());
        }
        for (x, value) in ties {
            seq.push(x);
            picks.push(Pick { element: x, continuations: gamma, value });
            walk(g, eval, seq, picks, out)?;
            picks.pop();
            seq.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    walk(g, eval, &mut Vec::new(), &mut Vec::new(), &mut out)?;
    Ok(out)
}

/// Every base some legal greedy run can end in, for an order-independent
/// objective. Memoized on the current set, so it stays cheap when ties abound.
pub fn greedy_outcomes(g: &Greedoid, obj: &BoundObjective) -> BTreeSet<SubsetMask> {
    let eval = Evaluator::Set(obj.clone());
    let mut seen = BTreeSet::new();
    let mut ends = BTreeSet::new();
    let mut stack = vec![SubsetMask::EMPTY];
    while let Some(a) = stack.pop() {
        if !seen.insert(a) {
            continue;
        }
        let seq: Vec<usize> = a.iter().collect();
        let (_, ties) = step(g, &eval, &seq).expect("bound objectives cover the family");
        if ties.is_empty() {
            ends.insert(a);
        }
        stack.extend(ties.into_iter().map(|(x, _)| a.with(x)));
    }
    ends
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Optimum {
    pub base: SubsetMask,
    pub value: Rational,
    /// The optimal feasible ordering, for ordered objectives.
    pub ordering: Option<Vec<usize>>,
}

/// Optimum over all bases by enumeration; ties go to the lexicographically
/// smallest base (and ordering).
pub fn brute_force_optimum(g: &Greedoid, obj: &Objective) -> Result<Optimum> {
    match obj.evaluator(g)? {
        Evaluator::Set(bound) => {
            let mut best: Option<(SubsetMask, Rational)> = None;
            let mut bases = g.bases();
            bases.sort_by(|a, b| a.lex_cmp(*b));
            for b in bases {
                let s = bound.score(b);
                if best.as_ref().is_none_or(|(_, bs)| s > *bs) {
                    best = Some((b, s));
                }
            }
            let (base, _) = best.expect("every greedoid has a base");
            Ok(Optimum { base, value: bound.value(base).clone(), ordering: None })
        }
        eval @ Evaluator::Ordered { .. } => {
            let mut best: Option<(Vec<usize>, Rational)> = None;
            let mut bases = g.bases();
            bases.sort_by(|a, b| a.lex_cmp(*b));
            for b in bases {
                for ordering in paths::feasible_orderings(g, b, usize::MAX) {
                    let s = eval.score(&ordering)?;
                    if best.as_ref().is_none_or(|(_, bs)| s > *bs) {
                        best = Some((ordering, s));
                    }
                }
            }
            let (ordering, _) = best.expect("every greedoid has a base");
            Ok(Optimum {
                base: SubsetMask::from_indices(ordering.iter().copied()),
                value: eval.value(&ordering)?,
                ordering: Some(ordering),
            })
        }
    }
}

/// All feasible orderings of all feasible sets, in DFS order from `()`.
pub fn feasible_strings(g: &Greedoid) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut i = 0;
    while i < out.len() {
        let seq = out[i].clone();
        let set = SubsetMask::from_indices(seq.iter().copied());
        for x in g.continuations_unchecked(set).iter() {
            let mut next = seq.clone();
            next.push(x);
            out.push(next);
        }
        i += 1;
    }
    out
}

/// Lifts an order-independent objective to an explicit table on orderings.
pub fn lift_to_orderings(g: &Greedoid, obj: &BoundObjective) -> Objective {
    let table = feasible_strings(g)
        .into_iter()
        .map(|s| {
            let v = obj.value(SubsetMask::from_indices(s.iter().copied())).clone();
            (s, v)
        })
        .collect();
    Objective::new(ObjectiveKind::OrderedTable(table), obj.direction)
}

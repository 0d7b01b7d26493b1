//! The base game on local forest greedoids: the Attacker picks an element
//! `s`, the Defender a base `B`, and the Defender pays `d(s)·sh_B(s) − c(s)`.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::graph::MixedGraph;
use crate::greedoid::Greedoid;
use crate::paths;
use crate::rational::{int, one, zero, Rational};
use crate::simplex::{solve_zero_sum, ZeroSumSolution};
use crate::subset::{all_subsets, SubsetMask};

#[derive(Debug, Clone)]
pub struct GameInstance {
    greedoid: Greedoid,
    d: Vec<Rational>,
    c: Vec<Rational>,
}

impl GameInstance {
    pub fn new(greedoid: Greedoid, d: Vec<Rational>, c: Vec<Rational>) -> Result<Self> {
        let n = greedoid.len();
        if d.len() != n || c.len() != n {
            return Err(Error::BadParams(format!("weights must have {n} entries")));
        }
        if n == 0 || greedoid.full_rank() == 0 {
            return Err(Error::BadParams("the game needs a greedoid of positive rank".into()));
        }
        if let Some(i) = d.iter().position(|v| !v.is_positive()) {
            return Err(Error::BadParams(format!("d({}) must be positive", greedoid.ground().label(i))));
        }
        if !greedoid.class().is_local_forest() {
            return Err(Error::NotLocalForest);
        }
        Ok(GameInstance { greedoid, d, c })
    }

    /// `d ≡ 1`, `c ≡ 0`.
    pub fn unit(greedoid: Greedoid) -> Result<Self> {
        let n = greedoid.len();
        Self::new(greedoid, vec![one(); n], vec![zero(); n])
    }

    pub fn greedoid(&self) -> &Greedoid {
        &self.greedoid
    }

    pub fn d(&self) -> &[Rational] {
        &self.d
    }

    pub fn c(&self) -> &[Rational] {
        &self.c
    }
}

/// Rows are elements in index order, columns are bases in ascending bitmask order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PayoffMatrix {
    pub bases: Vec<SubsetMask>,
    pub entries: Vec<Vec<Rational>>,
}

pub fn payoff_matrix(inst: &GameInstance) -> PayoffMatrix {
    let g = &inst.greedoid;
    let bases = g.bases();
    let shadows: Vec<Vec<usize>> =
        bases.iter().map(|&b| paths::shadow_vector(g, b).expect("bases are feasible").values).collect();
    let entries = (0..g.len())
        .map(|s| shadows.iter().map(|sh| &inst.d[s] * int(sh[s] as i64) - &inst.c[s]).collect())
        .collect();
    PayoffMatrix { bases, entries }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameSolution {
    pub value: Rational,
    /// A maximizing `U`, the lowest bitmask among ties.
    pub argmax_set: SubsetMask,
    /// Probability per element, from the matrix-game oracle.
    pub attacker_mix: Option<Vec<Rational>>,
    /// Probability per base (ascending bitmask), from the matrix-game oracle.
    pub defender_mix: Option<Vec<Rational>>,
}

/// `(r(S) − r(S−U) − q(U)) / p(U)` with `p = 1/d`, `q = c/d`.
pub fn formula_ratio(inst: &GameInstance, u: SubsetMask) -> Rational {
    let g = &inst.greedoid;
    let p: Rational = u.iter().map(|s| inst.d[s].recip()).sum();
    let q: Rational = u.iter().map(|s| &inst.c[s] / &inst.d[s]).sum();
    (int((g.full_rank() - g.rank(g.full() - u)) as i64) - q) / p
}

/// Closed-form value: the maximum ratio over all nonempty `U`.
pub fn game_value_formula(inst: &GameInstance) -> GameSolution {
    let mut best: Option<(SubsetMask, Rational)> = None;
    for u in all_subsets(inst.greedoid.len()).skip(1) {
        let v = formula_ratio(inst, u);
        if best.as_ref().is_none_or(|(_, bv)| v > *bv) {
            best = Some((u, v));
        }
    }
    let (argmax_set, value) = best.expect("ground set is nonempty");
    GameSolution { value, argmax_set, attacker_mix: None, defender_mix: None }
}

/// The formula solution with both mixed strategies filled in by the exact
/// matrix-game solver. The value is the solver's.
pub fn solve_game(inst: &GameInstance) -> (GameSolution, PayoffMatrix) {
    let matrix = payoff_matrix(inst);
    let ZeroSumSolution { value, row_mix, col_mix } = solve_zero_sum(&matrix.entries);
    let formula = game_value_formula(inst);
    let solution = GameSolution {
        value,
        argmax_set: formula.argmax_set,
        attacker_mix: Some(row_mix),
        defender_mix: Some(col_mix),
    };
    (solution, matrix)
}

/// `x(s) = Σ δ(B)·sh_B(s)` for a Defender mix `δ` over the bases.
pub fn defender_point(inst: &GameInstance, bases: &[SubsetMask], mix: &[Rational]) -> Vec<Rational> {
    let g = &inst.greedoid;
    let mut x = vec![zero(); g.len()];
    for (&b, delta) in bases.iter().zip(mix) {
        let sh = paths::shadow_vector(g, b).expect("bases are feasible");
        for (xs, &v) in x.iter_mut().zip(&sh.values) {
            *xs += delta * int(v as i64);
        }
    }
    x
}

/// Whether the Defender mix caps every Attacker choice at `value`:
/// `d(s)·x(s) − c(s) <= value` for all `s`.
pub fn defender_caps_value(inst: &GameInstance, bases: &[SubsetMask], mix: &[Rational], value: &Rational) -> bool {
    defender_point(inst, bases, mix)
        .iter()
        .enumerate()
        .all(|(s, x)| &inst.d[s] * x - &inst.c[s] <= *value)
}

/// `σ_p = min p(U) / (comp(G − U) − 1)` over edge sets whose removal
/// disconnects the graph.
pub fn strength(graph: &MixedGraph, p: &[Rational]) -> Result<Rational> {
    let m = graph.edges().len();
    if p.len() != m {
        return Err(Error::BadParams(format!("p must have {m} entries")));
    }
    if let Some(i) = p.iter().position(|v| !v.is_positive()) {
        return Err(Error::BadParams(format!("p({}) must be positive", graph.edges()[i].id)));
    }
    let all = SubsetMask::full(m);
    if graph.components(all) != 1 {
        return Err(Error::Disconnected);
    }
    let mut best: Option<Rational> = None;
    for u in all_subsets(m) {
        let comps = graph.components(all - u);
        if comps <= 1 {
            continue;
        }
        let ratio: Rational = u.iter().map(|e| p[e].clone()).sum::<Rational>() / int(comps as i64 - 1);
        if best.as_ref().is_none_or(|b| ratio < *b) {
            best = Some(ratio);
        }
    }
    best.ok_or_else(|| Error::BadParams("a single node cannot be disconnected".into()))
}

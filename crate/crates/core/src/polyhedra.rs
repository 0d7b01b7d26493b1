//! The polyhedron `Q = {x : x(U) >= r(S) − r(S−U) for all U}`, shadow
//! vertices, and primal/dual optimality certificates for minimizing `cx`
//! over `Q` on local forest greedoids.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::greedoid::Greedoid;
use crate::greedy::{greedy_run, Direction, Evaluator, Objective, ObjectiveKind};
use crate::ground::GroundSet;
use crate::paths::{self, weight_of};
use crate::rational::{self, int, zero, Rational};
use crate::subset::{all_subsets, SubsetMask};

/// A point of `R^S`, one coordinate per element in index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoint {
    pub coords: Vec<Rational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalPoint { coords }
    }

    pub fn zero(n: usize) -> Self {
        RationalPoint { coords: vec![zero(); n] }
    }

    /// Parses `a=2,b=1/2,...`; every element must be given exactly once.
    pub fn parse(ground: &GroundSet, text: &str) -> Result<Self> {
        let mut coords: Vec<Option<Rational>> = vec![None; ground.len()];
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (label, value) =
                part.split_once('=').ok_or_else(|| Error::BadArgs(format!("expected label=value, got {part:?}")))?;
            let i = ground.element(label.trim())?;
            let v = rational::parse(value).ok_or_else(|| Error::BadArgs(format!("{value:?} is not rational")))?;
            if coords[i].replace(v).is_some() {
                return Err(Error::BadArgs(format!("coordinate {label:?} given twice")));
            }
        }
        let coords = coords
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::BadArgs(format!("coordinate {:?} missing", ground.label(i)))))
            .collect::<Result<_>>()?;
        Ok(RationalPoint { coords })
    }

    pub fn sum_over(&self, u: SubsetMask) -> Rational {
        weight_of(&self.coords, u)
    }

    pub fn dot(&self, other: &[Rational]) -> Rational {
        self.coords.iter().zip(other).map(|(a, b)| a * b).sum()
    }
}

/// Right-hand side `r(S) − r(S−U)` of the constraint for `U`.
pub fn q_bound(g: &Greedoid, u: SubsetMask) -> usize {
    g.full_rank() - g.rank(g.full() - u)
}

/// Every `U` whose constraint `p(U) >= r(S) − r(S−U)` fails, ascending.
pub fn q_violations(g: &Greedoid, p: &RationalPoint) -> Vec<SubsetMask> {
    all_subsets(g.len()).filter(|&u| p.sum_over(u) < int(q_bound(g, u) as i64)).collect()
}

pub fn in_q(g: &Greedoid, p: &RationalPoint) -> bool {
    q_violations(g, p).is_empty()
}

/// Whether `coeffs·x >= bound` holds at every base's shadow vector. With
/// `coeffs >= 0` the inequality is then valid on the whole up-hull.
pub fn separating_inequality_check(g: &Greedoid, coeffs: &RationalPoint, bound: &Rational) -> bool {
    g.bases().into_iter().all(|b| {
        let sh = paths::shadow_vector(g, b).expect("bases are feasible");
        coeffs.dot(&sh.as_rationals()) >= *bound
    })
}

pub fn satisfies(point: &RationalPoint, coeffs: &RationalPoint, bound: &Rational) -> bool {
    coeffs.dot(&point.coords) >= *bound
}

fn require_nonnegative(g: &Greedoid, c: &[Rational]) -> Result<()> {
    if c.len() != g.len() {
        return Err(Error::BadArgs(format!("{} weights for {} elements", c.len(), g.len())));
    }
    match c.iter().position(Signed::is_negative) {
        Some(i) => Err(Error::NegativeWeight(g.ground().label(i).to_string())),
        None => Ok(()),
    }
}

/// `min c·sh_B` over all bases; ties go to the lexicographically smallest base.
pub fn min_over_shadow(g: &Greedoid, c: &[Rational]) -> Result<(SubsetMask, Rational)> {
    require_nonnegative(g, c)?;
    let mut bases = g.bases();
    bases.sort_by(|a, b| a.lex_cmp(*b));
    let mut best: Option<(SubsetMask, Rational)> = None;
    for b in bases {
        let v = paths::shadow_vector(g, b)?.dot(c);
        if best.as_ref().is_none_or(|(_, bv)| v < *bv) {
            best = Some((b, v));
        }
    }
    Ok(best.expect("every greedoid has a base"))
}

/// Dual solution `y(U_1..U_n)` built from one greedy run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCertificate {
    pub sets: Vec<SubsetMask>,
    pub values: Vec<Rational>,
    /// `Σ (r(S) − r(S−U_i))·y(U_i)`, with the ranks taken from the
    /// construction rather than recomputed.
    pub objective: Rational,
    /// Greedy picks `s_1..s_r`.
    pub base_order: Vec<usize>,
    /// `c(P_1) .. c(P_r)` with `P_i` the path of `s_i` in the final base.
    pub path_costs: Vec<Rational>,
}

impl DualCertificate {
    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }
}

/// Dual certificate for `min{cx : x ∈ Q}` on a local forest greedoid:
/// `U_i = Γ(B_i)` with `y = c(P_i) − c(P_{i−1})` along the lowest-index greedy
/// run, then `U_i = {s_i}` for the remaining elements in ascending order with
/// whatever is left of `c(s_i)`.
pub fn dual_certificate(g: &Greedoid, c: &[Rational]) -> Result<DualCertificate> {
    if !g.class().is_local_forest() {
        return Err(Error::NotLocalForest);
    }
    require_nonnegative(g, c)?;
    let obj = Objective::new(ObjectiveKind::PathSum(c.to_vec()), Direction::Min);
    let trace = greedy_run(g, &Evaluator::Set(obj.bind(g)?))?;
    let base = trace.base;
    let order = trace.order();
    let r = order.len();

    let path_costs: Vec<Rational> =
        order.iter().map(|&s| weight_of(c, paths::path_unchecked(g, base, s))).collect();
    let mut sets = Vec::with_capacity(g.len());
    let mut values = Vec::with_capacity(g.len());
    let mut prev = zero();
    for (i, pick) in trace.picks.iter().enumerate() {
        sets.push(pick.continuations);
        values.push(&path_costs[i] - &prev);
        prev = path_costs[i].clone();
    }
    for s in (g.full() - base).iter() {
        let covered: Rational =
            sets[..r].iter().zip(&values).filter(|(u, _)| u.contains(s)).map(|(_, y)| y.clone()).sum();
        sets.push(SubsetMask::singleton(s));
        values.push(&c[s] - covered);
    }
    let objective = values
        .iter()
        .enumerate()
        .map(|(i, y)| int(if i < r { (r - i) as i64 } else { 0 }) * y)
        .sum();
    Ok(DualCertificate { sets, values, objective, base_order: order, path_costs })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub nonnegative: bool,
    pub covering: bool,
    pub objective_matches_ranks: bool,
    pub strong_duality: bool,
    pub failures: Vec<String>,
}

impl CertificateReport {
    pub fn passes(&self) -> bool {
        self.nonnegative && self.covering && self.objective_matches_ranks && self.strong_duality
    }
}

/// Exact dual feasibility, objective recomputation from ranks, and equality
/// with the best shadow vertex.
pub fn verify_certificate(g: &Greedoid, c: &[Rational], cert: &DualCertificate) -> CertificateReport {
    let labels = |u: SubsetMask| g.ground().format_mask(u);
    let mut failures = Vec::new();

    let nonnegative = match cert.values.iter().position(Signed::is_negative) {
        Some(i) => {
            failures.push(format!("y({{{}}}) is negative", labels(cert.sets[i])));
            false
        }
        None => true,
    };

    let mut covering = cert.sets.len() == cert.values.len() && c.len() == g.len();
    if covering {
        for (x, cx) in c.iter().enumerate() {
            let sum: Rational =
                cert.sets.iter().zip(&cert.values).filter(|(u, _)| u.contains(x)).map(|(_, y)| y.clone()).sum();
            if sum != *cx {
                failures.push(format!("element {} is covered {} times, not {}", g.ground().label(x), sum, cx));
                covering = false;
            }
        }
    } else {
        failures.push("certificate and weights have mismatched lengths".into());
    }

    let recomputed: Rational =
        cert.sets.iter().zip(&cert.values).map(|(&u, y)| int(q_bound(g, u) as i64) * y).sum();
    let objective_matches_ranks = recomputed == cert.objective;
    if !objective_matches_ranks {
        failures.push(format!("objective {} differs from rank recomputation {}", cert.objective, recomputed));
    }

    let strong_duality = match min_over_shadow(g, c) {
        Ok((_, primal)) if primal == cert.objective => true,
        Ok((_, primal)) => {
            failures.push(format!("objective {} differs from shadow minimum {}", cert.objective, primal));
            false
        }
        Err(e) => {
            failures.push(e.to_string());
            false
        }
    };

    CertificateReport { nonnegative, covering, objective_matches_ranks, strong_duality, failures }
}

/// The intermediate facts of the certificate construction, checked on one run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClaimsReport {
    /// For `x` first continuing `B_j`: `P_x^{B_j+x} = P_{j−1} + x`.
    pub first_path: bool,
    /// Indices `i <= r` with `x ∈ U_i` form an interval, and their `y` sum
    /// telescopes to `c(P_k) − c(P_{j−1})`.
    pub interval: bool,
    /// `c(P_1) <= … <= c(P_r)`.
    pub monotone_costs: bool,
    /// `r(S − U_i) = i − 1` for `i <= r`, and `r(S)` beyond.
    pub ranks: bool,
}

impl ClaimsReport {
    pub fn all(&self) -> bool {
        self.first_path && self.interval && self.monotone_costs && self.ranks
    }
}

pub fn check_claims(g: &Greedoid, cert: &DualCertificate) -> ClaimsReport {
    let r = cert.base_order.len();
    let prefix = |i: usize| SubsetMask::from_indices(cert.base_order[..i].iter().copied());
    let path_prefix = |i: usize| if i == 0 { SubsetMask::EMPTY } else { paths::path_unchecked(g, prefix(r), cert.base_order[i - 1]) };
    let cost_before = |j: usize| if j == 0 { zero() } else { cert.path_costs[j - 1].clone() };

    let mut first_path = true;
    let mut interval = true;
    for x in 0..g.len() {
        let hits: Vec<usize> = (0..r).filter(|&i| cert.sets[i].contains(x)).collect();
        let (Some(&j), Some(&k)) = (hits.first(), hits.last()) else { continue };
        // `j`, `k` are zero-based, so `B_j` in one-based terms is `prefix(j)`.
        let bj = prefix(j);
        first_path &= paths::path_unchecked(g, bj.with(x), x) == path_prefix(j).with(x);
        interval &= hits.len() == k - j + 1;
        let sum: Rational = hits.iter().map(|&i| cert.values[i].clone()).sum();
        interval &= sum == &cert.path_costs[k] - cost_before(j);
    }
    let monotone_costs = cert.path_costs.windows(2).all(|w| w[0] <= w[1]);
    let full = g.full_rank();
    let ranks = cert
        .sets
        .iter()
        .enumerate()
        .all(|(i, &u)| g.rank(g.full() - u) == if i < r { i } else { full });
    ClaimsReport { first_path, interval, monotone_costs, ranks }
}

/// With integral `c >= 0`: the best shadow vertex and the certificate are
/// both integral, and the certificate is optimal.
pub fn integrality_check(g: &Greedoid, c: &[Rational]) -> Result<bool> {
    if let Some(i) = c.iter().position(|v| !v.is_integer()) {
        return Err(Error::BadArgs(format!("weight of {} is not an integer", g.ground().label(i))));
    }
    let cert = dual_certificate(g, c)?;
    let (_, primal) = min_over_shadow(g, c)?;
    Ok(cert.is_integral() && primal.is_integer() && verify_certificate(g, c, &cert).passes())
}

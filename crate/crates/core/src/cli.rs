//! The `greedoid` command line. Every subcommand reads one instance (a file
//! path or `--fixture NAME`) and prints `key=value` lines.
//!
//! Exit codes: 0 success, 2 when the requested property is violated, 1 on
//! errors and bad usage.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::axioms;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::game::{self, GameInstance};
use crate::greedoid::Greedoid;
use crate::greedy::{self, Direction, Evaluator, Objective, ObjectiveKind, TieRule};
use crate::instance::{load_instance, Instance};
use crate::paths;
use crate::polyhedra::{self, RationalPoint};
use crate::rational::{self, one, zero, Rational};
use crate::simplex;
use crate::subset::SubsetMask;

#[derive(Debug, Parser)]
#[command(name = "greedoid", version, about = "Exact greedoid experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Source {
    /// Instance file.
    instance: Option<PathBuf>,
    /// Bundled fixture instead of a file.
    #[arg(long, conflicts_with = "instance")]
    fixture: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Table,
    Linear,
    PathSum,
    Bottleneck,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DirectionArg {
    Min,
    Max,
}

#[derive(Debug, Args)]
struct ObjectiveArgs {
    /// Objective family; defaults to the instance's own objective.
    #[arg(long, value_enum)]
    objective: Option<ObjectiveArg>,
    #[arg(long, value_enum)]
    direction: Option<DirectionArg>,
    /// Weight map for linear, path-sum and bottleneck objectives.
    #[arg(long, default_value = "c")]
    weights: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Condition {
    Kl,
    C3,
    C6,
    C7,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Interval / local poset / local forest classification.
    Classify(Source),
    /// Whether the strong exchange axiom holds.
    CheckStrongExchange(Source),
    /// Run the greedy algorithm.
    Greedy {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        objective: ObjectiveArgs,
        /// Print every run some tie-breaking can produce.
        #[arg(long)]
        all_runs: bool,
    },
    /// Optimum base by enumeration.
    BruteOpt {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        objective: ObjectiveArgs,
    },
    /// Shadow vectors of one base, or of all bases.
    Shadow {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        base: Option<String>,
    },
    /// Membership of a point in Q, optionally against an inequality.
    PolytopeCheck {
        #[command(flatten)]
        source: Source,
        /// Coordinates as `a=2,b=1,...`.
        #[arg(long)]
        point: String,
        /// Coefficients of an inequality `coeffs·x >= bound`, as `a=2,b=1,...`.
        #[arg(long, requires = "bound")]
        coeffs: Option<String>,
        #[arg(long, requires = "coeffs", allow_hyphen_values = true)]
        bound: Option<String>,
    },
    /// Dual certificate for minimizing over Q.
    DualCert {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "c")]
        weights: String,
        #[arg(long)]
        verify: bool,
    },
    /// Value of the base game (weights `d`, default 1, and an optional cost map).
    GameValue {
        #[command(flatten)]
        source: Source,
        /// Weight map used as the attack cost; zero when absent.
        #[arg(long)]
        cost: Option<String>,
        /// Also solve the payoff matrix exactly and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Strength of the underlying graph with weights `p` (default 1).
    Strength(Source),
    /// Exhaustive check of one greedy optimality condition.
    CheckConditions {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        objective: ObjectiveArgs,
        #[arg(long, value_enum)]
        which: Condition,
    },
    /// The bundled fixtures.
    Fixtures {
        #[arg(long)]
        list: bool,
        /// Print one fixture's source.
        #[arg(long)]
        show: Option<String>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub const OK: i32 = 0;
pub const ERROR: i32 = 1;
pub const VIOLATION: i32 = 2;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code: ERROR }
            } else {
                Outcome { stdout: text, stderr: String::new(), code: OK }
            };
        }
    };
    let mut out = String::new();
    match execute(cli.command, &mut out) {
        Ok(code) => Outcome { stdout: out, stderr: String::new(), code },
        Err(e) => Outcome { stdout: out, stderr: format!("error: {e}\n"), code: ERROR },
    }
}

fn load(source: &Source) -> Result<Instance> {
    match (&source.instance, &source.fixture) {
        (Some(path), None) => load_instance(path),
        (None, Some(name)) => fixtures::load(name),
        _ => Err(Error::BadArgs("give an instance file or --fixture NAME".into())),
    }
}

fn fmt_set(g: &Greedoid, m: SubsetMask) -> String {
    g.ground().format_mask(m)
}

fn fmt_seq(g: &Greedoid, s: &[usize]) -> String {
    g.ground().format_sequence(s.iter().copied())
}

fn fmt_values(values: &[Rational]) -> String {
    values.iter().map(rational::format).collect::<Vec<_>>().join(",")
}

fn weights(inst: &Instance, name: &str) -> Result<Vec<Rational>> {
    inst.weight(name)
        .map(<[Rational]>::to_vec)
        .ok_or_else(|| Error::BadArgs(format!("instance has no weight map {name:?}")))
}

fn objective(inst: &Instance, args: &ObjectiveArgs) -> Result<Objective> {
    let direction = args.direction.map(|d| match d {
        DirectionArg::Min => Direction::Min,
        DirectionArg::Max => Direction::Max,
    });
    let mut obj = match args.objective {
        None => inst.objective.clone().ok_or_else(|| Error::BadArgs("instance has no objective; pass --objective".into()))?,
        Some(ObjectiveArg::Table) => match &inst.objective {
            Some(o) if matches!(o.kind, ObjectiveKind::SetTable(_) | ObjectiveKind::OrderedTable(_)) => o.clone(),
            _ => return Err(Error::BadArgs("instance has no table objective".into())),
        },
        Some(kind) => {
            let c = weights(inst, &args.weights)?;
            let kind = match kind {
                ObjectiveArg::Linear => ObjectiveKind::Linear(c),
                ObjectiveArg::PathSum => ObjectiveKind::PathSum(c),
                _ => ObjectiveKind::Bottleneck(c),
            };
            let default = inst.objective.as_ref().map_or(Direction::Max, |o| o.direction);
            Objective::new(kind, default)
        }
    };
    if let Some(d) = direction {
        obj.direction = d;
    }
    Ok(obj)
}

fn execute(command: Command, out: &mut String) -> Result<i32> {
    match command {
        Command::Classify(source) => {
            let inst = load(&source)?;
            let g = &inst.greedoid;
            let r = g.class();
            writeln!(out, "class={}", r.class_name()).ok();
            writeln!(out, "is_greedoid={}", r.is_greedoid).ok();
            writeln!(out, "has_lup={}", r.has_lup).ok();
            writeln!(out, "has_lip={}", r.has_lip).ok();
            writeln!(out, "has_lfp={}", r.has_lfp).ok();
            writeln!(out, "has_strong_exchange={}", r.has_strong_exchange).ok();
            if let Some(w) = r.lup_witness {
                writeln!(out, "lup_witness=A={};B={}", fmt_set(g, w.a), fmt_set(g, w.b)).ok();
            }
            if let Some(w) = r.lip_witness {
                writeln!(out, "lip_witness=A={};B={}", fmt_set(g, w.a), fmt_set(g, w.b)).ok();
            }
            if let Some(w) = r.lfp_witness {
                let l = |i| g.ground().label(i);
                writeln!(out, "lfp_witness=A={};x={};y={};z={}", fmt_set(g, w.a), l(w.x), l(w.y), l(w.z)).ok();
            }
            Ok(OK)
        }
        Command::CheckStrongExchange(source) => {
            let inst = load(&source)?;
            let g = &inst.greedoid;
            match axioms::check_strong_exchange(g) {
                Ok(()) => {
                    writeln!(out, "strong_exchange=true").ok();
                    Ok(OK)
                }
                Err(w) => {
                    writeln!(
                        out,
                        "strong_exchange=false A={} B={} x={}",
                        fmt_set(g, w.a),
                        fmt_set(g, w.b),
                        g.ground().label(w.x)
                    )
                    .ok();
                    Ok(VIOLATION)
                }
            }
        }
        Command::Greedy { source, objective: args, all_runs } => {
            let inst = load(&source)?;
            let g = &inst.greedoid;
            let obj = objective(&inst, &args)?;
            let tie = if all_runs { TieRule::AllRuns } else { TieRule::LowestIndex };
            let traces = greedy::greedy(g, &obj, tie)?;
            for t in &traces {
                writeln!(out, "base={} value={}", fmt_set(g, t.base), t.value).ok();
                writeln!(out, "order={}", fmt_seq(g, &t.order())).ok();
            }
            if all_runs {
                writeln!(out, "runs={}", traces.len()).ok();
            }
            Ok(OK)
        }
        Command::BruteOpt { source, objective: args } => {
            let inst = load(&source)?;
            let g = &inst.greedoid;
            let opt = greedy::brute_force_optimum(g, &objective(&inst, &args)?)?;
            writeln!(out, "base={} value={}", fmt_set(g, opt.base), opt.value).ok();
            if let Some(o) = &opt.ordering {
                writeln!(out, "order={}", fmt_seq(g, o)).ok();
            }
            Ok(OK)
        }
        Command::Shadow { source, base } => {
            let inst = load(&source)?;
            let g = &inst.greedoid;
            let sets = match base {
                Some(b) => vec![g.ground().parse_mask(&b)?],
                None => g.bases(),
            };
            writeln!(out, "elements={}", g.ground().labels().join(",")).ok();
            for b in sets {
                let sh = paths::shadow_vector(g, b)?;
                let values: Vec<String> = sh.values.iter().map(usize::to_string).collect();
                writeln!(out, "base={} shadow={}", fmt_set(g, b), values.join(",")).ok();
            }
            Ok(OK)
        }
        Command::PolytopeCheck { source, point, coeffs, bound } => {
            let inst = load(&source)?;
            let g = &inst.greedoid;
            let p = RationalPoint::parse(g.ground(), &point)?;
            let violations = polyhedra::q_violations(g, &p);
            writeln!(out, "member_of_Q={}", violations.is_empty()).ok();
            if let Some(&u) = violations.first() {
                writeln!(out, "violated_U={} violations={}", fmt_set(g, u), violations.len()).ok();
            }
            let mut code = if violations.is_empty() { OK } else { VIOLATION };
            if let (Some(coeffs), Some(bound)) = (coeffs, bound) {
                let coeffs = RationalPoint::parse(g.ground(), &coeffs)?;
                let bound = rational::parse(&bound).ok_or_else(|| Error::BadArgs(format!("{bound:?} is not rational")))?;
                let valid = polyhedra::separating_inequality_check(g, &coeffs, &bound);
                let satisfied = polyhedra::satisfies(&p, &coeffs, &bound);
                writeln!(out, "inequality_valid_on_shadow_vertices={valid}").ok();
                writeln!(out, "point_satisfies_inequality={satisfied}").ok();
                if !valid {
                    code = VIOLATION;
                }
            }
            Ok(code)
        }
        Command::DualCert { source, weights: name, verify } => {
            let inst = load(&source)?;
            let g = &inst.greedoid;
            let c = weights(&inst, &name)?;
            let cert = polyhedra::dual_certificate(g, &c)?;
            writeln!(out, "base_order={}", fmt_seq(g, &cert.base_order)).ok();
            for (i, (u, y)) in cert.sets.iter().zip(&cert.values).enumerate() {
                writeln!(out, "U{}={} y={}", i + 1, fmt_set(g, *u), y).ok();
            }
            writeln!(out, "objective={}", cert.objective).ok();
            if !verify {
                return Ok(OK);
            }
            let report = polyhedra::verify_certificate(g, &c, &cert);
            let claims = polyhedra::check_claims(g, &cert);
            writeln!(out, "nonnegative={}", report.nonnegative).ok();
            writeln!(out, "covering={}", report.covering).ok();
            writeln!(out, "objective_matches_ranks={}", report.objective_matches_ranks).ok();
            writeln!(out, "strong_duality={}", report.strong_duality).ok();
            writeln!(out, "construction_claims={}", claims.all()).ok();
            for f in &report.failures {
                writeln!(out, "failure={f}").ok();
            }
            Ok(if report.passes() && claims.all() { OK } else { VIOLATION })
        }
        Command::GameValue { source, cost, oracle } => {
            let inst = load(&source)?;
            let g = inst.greedoid.clone();
            let n = g.len();
            let d = inst.weight("d").map_or_else(|| vec![one(); n], <[Rational]>::to_vec);
            let c = match cost {
                Some(name) => weights(&inst, &name)?,
                None => vec![zero(); n],
            };
            let game_inst = GameInstance::new(g, d, c)?;
            let g = game_inst.greedoid();
            let formula = game::game_value_formula(&game_inst);
            writeln!(out, "value={} U={}", formula.value, fmt_set(g, formula.argmax_set)).ok();
            if !oracle {
                return Ok(OK);
            }
            let (sol, matrix) = game::solve_game(&game_inst);
            let attacker = sol.attacker_mix.unwrap_or_default();
            let defender = sol.defender_mix.unwrap_or_default();
            let verified = simplex::ZeroSumSolution {
                value: sol.value.clone(),
                row_mix: attacker.clone(),
                col_mix: defender.clone(),
            }
            .verify(&matrix.entries);
            let bases: Vec<String> = matrix.bases.iter().map(|&b| format!("{{{}}}", fmt_set(g, b))).collect();
            writeln!(out, "formula_value={}", formula.value).ok();
            writeln!(out, "lp_value={}", sol.value).ok();
            writeln!(out, "attacker_mix={}", fmt_values(&attacker)).ok();
            writeln!(out, "defender_bases={}", bases.join(";")).ok();
            writeln!(out, "defender_mix={}", fmt_values(&defender)).ok();
            writeln!(out, "mixes_verified={verified}").ok();
            let agree = formula.value == sol.value;
            writeln!(out, "agree={agree}").ok();
            Ok(if agree && verified { OK } else { VIOLATION })
        }
        Command::Strength(source) => {
            let inst = load(&source)?;
            let graph = inst
                .greedoid
                .graph()
                .ok_or_else(|| Error::BadArgs("strength needs a graphic matroid or branching instance".into()))?;
            let p = inst.weight("p").map_or_else(|| vec![one(); graph.edges().len()], <[Rational]>::to_vec);
            let sigma = game::strength(graph, &p)?;
            writeln!(out, "strength={sigma}").ok();
            Ok(OK)
        }
        Command::CheckConditions { source, objective: args, which } => {
            let inst = load(&source)?;
            let g = &inst.greedoid;
            let obj = objective(&inst, &args)?;
            let l = |i: usize| g.ground().label(i).to_string();
            let witness = match which {
                Condition::Kl => greedy::check_kl_conditions(g, &obj.evaluator(g)?)?.map(|w| {
                    format!(
                        "condition={} first={} second={}",
                        w.condition,
                        fmt_seq(g, &w.first),
                        fmt_seq(g, &w.second)
                    )
                }),
                Condition::C3 => greedy::check_condition_3(g, &set_objective(g, &obj)?).map(|w| {
                    format!("A={} B={} x={} z={}", fmt_set(g, w.a), fmt_set(g, w.b), l(w.x), l(w.z))
                }),
                Condition::C6 => greedy::check_condition_6(g, &set_objective(g, &obj)?)
                    .map(|w| format!("A={} B={} x={}", fmt_set(g, w.a), fmt_set(g, w.b), l(w.x))),
                Condition::C7 => greedy::check_condition_7(g, &set_objective(g, &obj)?)?.map(|w| {
                    format!("A={} B={} x={} z={}", fmt_set(g, w.a), fmt_set(g, w.b), l(w.x), l(w.z))
                }),
            };
            let name = format!("{which:?}").to_lowercase();
            writeln!(out, "condition={name} holds={}", witness.is_none()).ok();
            match witness {
                Some(w) => {
                    writeln!(out, "witness {w}").ok();
                    Ok(VIOLATION)
                }
                None => Ok(OK),
            }
        }
        Command::Fixtures { list, show } => {
            if let Some(name) = show {
                let text = fixtures::source(&name).ok_or_else(|| Error::BadArgs(format!("unknown fixture {name:?}")))?;
                out.push_str(text);
                return Ok(OK);
            }
            if !list {
                return Err(Error::BadArgs("pass --list or --show NAME".into()));
            }
            for name in fixtures::names() {
                writeln!(out, "{name}").ok();
            }
            Ok(OK)
        }
    }
}

fn set_objective(g: &Greedoid, obj: &Objective) -> Result<greedy::BoundObjective> {
    match obj.evaluator(g)? {
        Evaluator::Set(b) => Ok(b),
        Evaluator::Ordered { .. } => Err(Error::BadArgs("this condition needs an order-independent objective".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str) -> Outcome {
        run(std::iter::once("greedoid").chain(args.split_whitespace()))
    }

    #[test]
    fn greedy_on_fig1() {
        let o = call("greedy --fixture fig1 --objective table --direction max");
        assert_eq!(o.code, OK, "{}", o.stderr);
        assert_eq!(o.stdout.lines().next(), Some("base=a,c value=3"));
    }

    #[test]
    fn polytope_membership() {
        let o = call("polytope-check --fixture shadow_strict --point a=2,b=1,c=1,d=1");
        assert_eq!((o.stdout.as_str(), o.code), ("member_of_Q=true\n", OK));
    }

    #[test]
    fn single_game() {
        let o = call("game-value --fixture single");
        assert_eq!((o.stdout.as_str(), o.code), ("value=1 U=e\n", OK));
    }

    #[test]
    fn usage_errors() {
        let o = call("greedy --fixture fig1 --bogus");
        assert_eq!(o.code, ERROR);
        assert!(o.stderr.contains("Usage"));
        assert_eq!(call("frobnicate").code, ERROR);
        assert_eq!(call("classify").code, ERROR);
        assert_eq!(call("classify --fixture nope").code, ERROR);
    }
}

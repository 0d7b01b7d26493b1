//! The bundled instance corpus.

use crate::error::{Error, Result};
use crate::greedoid::Greedoid;
use crate::greedy::Objective;
use crate::instance::{parse_instance, Instance};
use crate::rational::Rational;

pub const FIXTURES: &[(&str, &str)] = &[
    ("fig1", include_str!("../fixtures/fig1.toml")),
    ("fig2", include_str!("../fixtures/fig2.toml")),
    ("lpg_counterexample", include_str!("../fixtures/lpg_counterexample.toml")),
    ("shadow_strict", include_str!("../fixtures/shadow_strict.toml")),
    ("k3", include_str!("../fixtures/k3.toml")),
    ("single", include_str!("../fixtures/single.toml")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(n, _)| *n)
}

pub fn source(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn load(name: &str) -> Result<Instance> {
    let text = source(name).ok_or_else(|| Error::BadArgs(format!("unknown fixture {name:?}")))?;
    parse_instance(text)
}

fn fixture(name: &str) -> Instance {
    load(name).expect("bundled fixtures are valid")
}

pub fn fig1_greedoid() -> Greedoid {
    fixture("fig1").greedoid
}

/// The set objective bundled with `fig1`; `g` only has to share its ground set.
pub fn fig1_objective(_g: &Greedoid) -> Objective {
    fixture("fig1").objective.expect("fig1 carries an objective")
}

pub fn fig2_greedoid() -> Greedoid {
    fixture("fig2").greedoid
}

pub fn fig2_weights() -> Vec<Rational> {
    fixture("fig2").weights["c"].clone()
}

pub fn lpg_greedoid() -> Greedoid {
    fixture("lpg_counterexample").greedoid
}

pub fn lpg_weights() -> Vec<Rational> {
    fixture("lpg_counterexample").weights["c"].clone()
}

pub fn shadow_strict_greedoid() -> Greedoid {
    fixture("shadow_strict").greedoid
}

pub fn k3() -> Greedoid {
    fixture("k3").greedoid
}

pub fn single_greedoid() -> Greedoid {
    fixture("single").greedoid
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::{Direction, ObjectiveKind};
    use crate::rational::int;

    #[test]
    fn all_fixtures_load() {
        for name in names() {
            load(name).unwrap();
        }
        assert!(load("nope").is_err());
    }

    #[test]
    fn fig1_family() {
        let g = fig1_greedoid();
        let fam: Vec<String> = g.family().iter().map(|&m| g.ground().format_mask(m)).collect();
        assert_eq!(fam, ["", "a", "b", "a,c", "b,c"]);
    }

    #[test]
    fn fig2_layout_reproduces_ordering_values() {
        let g = fig2_greedoid();
        let obj = Objective::new(ObjectiveKind::PathSum(fig2_weights()), Direction::Min).bind(&g).unwrap();
        let m = |s: &str| g.ground().parse_mask(s).unwrap();
        assert_eq!(obj.value(m("x,b,a")), &int(11));
        assert_eq!(obj.value(m("z,b,a")), &int(10));
        assert!(g.is_feasible_sequence(&[0, 3, 2]));
        assert!(g.is_feasible_sequence(&[1, 3, 2]));
    }
}

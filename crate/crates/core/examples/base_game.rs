//! The attacker/defender base game: closed-form value, LP oracle, and the
//! link to graph strength on graphic matroids.

use greedoid_lab::fixtures;
use greedoid_lab::game::{game_value_formula, solve_game, strength, GameInstance};
use greedoid_lab::rational::{format, int};

fn main() -> greedoid_lab::Result<()> {
    let g = fixtures::fig1_greedoid();
    let inst = GameInstance::unit(g.clone())?;
    let formula = game_value_formula(&inst);
    let (oracle, matrix) = solve_game(&inst);
    println!("fig1: value {} attained by U={{{}}}", formula.value, g.ground().format_mask(formula.argmax_set));
    println!("  LP value {}", oracle.value);
    let mix: Vec<String> = oracle.defender_mix.unwrap().iter().map(format).collect();
    for (b, p) in matrix.bases.iter().zip(mix) {
        println!("  defender plays {{{}}} with probability {p}", g.ground().format_mask(*b));
    }

    let k3 = fixtures::k3();
    let value = game_value_formula(&GameInstance::unit(k3.clone())?).value;
    let sigma = strength(k3.graph().expect("graphic"), &[int(1), int(1), int(1)])?;
    println!("K3: value {value}, strength {sigma}, 1/strength {}", sigma.recip());
    Ok(())
}

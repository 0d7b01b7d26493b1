//! Two small instances on which the greedy algorithm misses the optimum.

use greedoid_lab::fixtures;
use greedoid_lab::greedy::{brute_force_optimum, greedy, Direction, Objective, ObjectiveKind, TieRule};

fn main() -> greedoid_lab::Result<()> {
    let g = fixtures::fig1_greedoid();
    let obj = fixtures::fig1_objective(&g);
    report("set table on a branching", &g, &obj)?;

    let g = fixtures::lpg_greedoid();
    let obj = Objective::new(ObjectiveKind::PathSum(fixtures::lpg_weights()), Direction::Min);
    report("path sum on a local poset greedoid", &g, &obj)?;

    // On a branching greedoid the same kind of objective is handled correctly.
    let g = fixtures::fig2_greedoid();
    let obj = Objective::new(ObjectiveKind::PathSum(fixtures::fig2_weights()), Direction::Min);
    report("path sum on a branching", &g, &obj)
}

fn report(title: &str, g: &greedoid_lab::Greedoid, obj: &Objective) -> greedoid_lab::Result<()> {
    let fmt = |m| g.ground().format_mask(m);
    let run = &greedy(g, obj, TieRule::LowestIndex)?[0];
    let best = brute_force_optimum(g, obj)?;
    println!("{title}");
    for p in &run.picks {
        println!("  pick {} from {{{}}} -> value {}", g.ground().label(p.element), fmt(p.continuations), p.value);
    }
    println!("  greedy {{{}}} = {}, optimum {{{}}} = {}\n", fmt(run.base), run.value, fmt(best.base), best.value);
    Ok(())
}

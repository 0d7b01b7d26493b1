//! Sufficient conditions for greedy optimality, their witnesses, and the
//! minor on which a violated exchange condition defeats the greedy algorithm.

use greedoid_lab::greedy::{
    check_condition_6, check_condition_7, check_kl_conditions, greedy_outcomes, violation_minor, Direction,
    Evaluator, Objective, ObjectiveKind,
};
use greedoid_lab::fixtures;

fn main() -> greedoid_lab::Result<()> {
    let g = fixtures::lpg_greedoid();
    let obj = Objective::new(ObjectiveKind::PathSum(fixtures::lpg_weights()), Direction::Min).bind(&g)?;
    let fmt = |m| g.ground().format_mask(m);

    match check_kl_conditions(&g, &Evaluator::Set(obj.clone()))? {
        Some(w) => println!("ordered condition ({}) fails: {:?} vs {:?}", w.condition, w.first, w.second),
        None => println!("ordered conditions hold"),
    }
    println!("condition (7) holds: {}", check_condition_7(&g, &obj)?.is_none());

    let Some(w) = check_condition_6(&g, &obj) else {
        println!("condition (6) holds");
        return Ok(());
    };
    println!("condition (6) fails at A={{{}}}, B={{{}}}, x={}", fmt(w.a), fmt(w.b), g.ground().label(w.x));
    let (minor, obj_h) = violation_minor(&g, &obj, w)?;
    let h = &minor.greedoid;
    println!("minor on {:?}:", h.ground().labels());
    for b in greedy_outcomes(h, &obj_h) {
        println!("  greedy can end at {{{}}} with value {}", h.ground().format_mask(b), obj_h.value(b));
    }
    for b in h.bases() {
        println!("  base {{{}}} has value {}", h.ground().format_mask(b), obj_h.value(b));
    }
    Ok(())
}

//! Minimize c·x over the shadow polytope and certify the optimum with the
//! dual solution built from a greedy run.

use greedoid_lab::polyhedra::{check_claims, dual_certificate, min_over_shadow, verify_certificate};
use greedoid_lab::fixtures;

fn main() -> greedoid_lab::Result<()> {
    let g = fixtures::fig2_greedoid();
    let c = fixtures::fig2_weights();
    let (base, value) = min_over_shadow(&g, &c)?;
    println!("best shadow vertex: base {{{}}} with c·sh = {value}", g.ground().format_mask(base));

    let cert = dual_certificate(&g, &c)?;
    for (u, y) in cert.sets.iter().zip(&cert.values) {
        println!("  y({{{}}}) = {y}", g.ground().format_mask(*u));
    }
    println!("dual objective = {}", cert.objective);
    let report = verify_certificate(&g, &c, &cert);
    println!("certificate valid: {} (failures: {:?})", report.passes(), report.failures);
    println!("construction claims hold: {}", check_claims(&g, &cert).all());
    Ok(())
}

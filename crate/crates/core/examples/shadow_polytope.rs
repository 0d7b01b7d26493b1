//! Shadow vectors, the polyhedron Q, and a point of Q outside the shadow up-hull.

use greedoid_lab::polyhedra::{in_q, satisfies, separating_inequality_check, RationalPoint};
use greedoid_lab::rational::int;
use greedoid_lab::{fixtures, paths};

fn main() -> greedoid_lab::Result<()> {
    let g = fixtures::shadow_strict_greedoid();
    for b in g.bases() {
        println!("base {{{}}}: shadow {:?}", g.ground().format_mask(b), paths::shadow_vector(&g, b)?.values);
    }
    let point = RationalPoint::parse(g.ground(), "a=2,b=1,c=1,d=1")?;
    let coeffs = RationalPoint::parse(g.ground(), "a=2,b=1,c=0,d=0")?;
    println!("(2,1,1,1) in Q: {}", in_q(&g, &point));
    println!("2x_a + x_b >= 6 on every shadow vertex: {}", separating_inequality_check(&g, &coeffs, &int(6)));
    println!("(2,1,1,1) satisfies it: {}", satisfies(&point, &coeffs, &int(6)));
    Ok(())
}

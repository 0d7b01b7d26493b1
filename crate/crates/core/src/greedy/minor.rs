use super::{BoundObjective, ExchangeViolation};
use crate::error::{Error, Result};
use crate::greedoid::{Greedoid, Minor};

/// For an exchange violation `(A, B, x)`, the minor `H = (G ∖ Y) / A` with
/// `Y = S − B − x` together with the transported objective. Some legal
/// greedy run on `H` ends in a base that is not optimal.
pub fn violation_minor(g: &Greedoid, obj: &BoundObjective, witness: ExchangeViolation) -> Result<(Minor, BoundObjective)> {
    if !witness.is_violation(g, obj) {
        return Err(Error::NotAViolation);
    }
    let ExchangeViolation { a, b, x } = witness;
    let y = g.full() - b.with(x);
    let minor = g.minor(y, a)?;
    let transported = obj.transport(&minor);
    Ok((minor, transported))
}

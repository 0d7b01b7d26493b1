//! Build greedoids from graphs and explicit families, then query them.

use greedoid_lab::paths;
use greedoid_lab::{Greedoid, MixedGraph};

fn main() -> greedoid_lab::Result<()> {
    // Root r, two parallel edges to v, one edge on to u.
    let graph = MixedGraph::new(
        ["r", "v", "u"],
        [("a", "r", "v", false), ("b", "r", "v", false), ("c", "v", "u", false)],
        Some("r"),
    )?;
    let g = Greedoid::branching(graph)?;
    let fmt = |m| g.ground().format_mask(m);

    println!("feasible sets:");
    for &a in g.family() {
        println!("  {{{}}}", fmt(a));
    }
    let ac = g.ground().parse_mask("a,c")?;
    println!("rank(b,c) = {}", g.rank(g.ground().parse_mask("b,c")?));
    println!("continuations of {{a}}: {{{}}}", fmt(g.continuations(g.ground().parse_mask("a")?)?));
    println!("path of c in {{a,c}}: {{{}}}", fmt(paths::path(&g, ac, 2)?));
    println!("shadow vector of {{a,c}}: {:?}", paths::shadow_vector(&g, ac)?.values);

    // Explicit families are checked against the greedoid axioms.
    let bad = Greedoid::explicit_labels(&["x", "y"], &[&[], &["x", "y"]]);
    println!("{{∅, xy}} rejected: {}", bad.unwrap_err());

    let minor = g.minor(g.ground().parse_mask("b")?, g.ground().parse_mask("a")?)?;
    let h = &minor.greedoid;
    println!("G\\b/a has elements {:?} and bases {:?}", h.ground().labels(), h.bases().iter().map(|&m| h.ground().format_mask(m)).collect::<Vec<_>>());
    Ok(())
}

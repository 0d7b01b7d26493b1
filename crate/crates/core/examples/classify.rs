//! Place greedoids in the interval ⊃ local poset ⊃ local forest hierarchy.

use greedoid_lab::axioms::{check_path_uniqueness, classify};
use greedoid_lab::{fixtures, Greedoid};

fn main() -> greedoid_lab::Result<()> {
    let zoo = [
        ("branching (fig1)", fixtures::fig1_greedoid()),
        ("graphic K3", fixtures::k3()),
        ("uniform U(4,2)", Greedoid::uniform_matroid(4, 2, None)?),
        ("local poset, not forest", fixtures::shadow_strict_greedoid()),
        ("not interval", Greedoid::explicit_labels(&["a", "b", "c"], &[&[], &["a"], &["b"], &["a", "c"], &["b", "c"], &["a", "b", "c"]])?),
    ];
    for (name, g) in &zoo {
        let r = classify(g);
        print!("{name:<26} class={:<12} strong_exchange={}", r.class_name(), r.has_strong_exchange);
        if r.has_lup && r.has_lip {
            print!(" unique_path_orderings={}", check_path_uniqueness(g)?.holds());
        }
        println!();
        if let Some(w) = r.lfp_witness {
            let l = |i| g.ground().label(i);
            println!("    forest property fails at A={{{}}}, x={}, y={}, z={}", g.ground().format_mask(w.a), l(w.x), l(w.y), l(w.z));
        }
    }
    Ok(())
}

//! Parse an instance from text, run on it, and serialize it back.

use greedoid_lab::greedy::{greedy, TieRule};
use greedoid_lab::instance::parse_instance;

const TEXT: &str = r#"#greedoid-instance v1
[greedoid]
kind = "rooted_extension"
ordering = ["e0", "e1"]

[greedoid.base]
kind = "uniform_matroid"
n = 3
k = 2

[weights.c]
e0 = "1"
e1 = "5/2"
e2 = "2"

[objective]
kind = "linear"
direction = "max"
"#;

fn main() -> greedoid_lab::Result<()> {
    let inst = parse_instance(TEXT)?;
    let g = &inst.greedoid;
    println!("{} elements, class {}, bases: {}", g.len(), g.class().class_name(), g.bases().len());
    let obj = inst.objective.clone().expect("objective given");
    let run = &greedy(g, &obj, TieRule::LowestIndex)?[0];
    println!("greedy base {{{}}} value {}", g.ground().format_mask(run.base), run.value);

    let text = inst.file.to_text();
    println!("--- serialized ---\n{text}");
    assert_eq!(parse_instance(&text)?.greedoid, inst.greedoid);

    match parse_instance("#greedoid-instance v1\n[greedoid]\nkind = \"explicit\"\nelements = [\"a\"]\nfamily = [[\"b\"]]\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("bad instance: {e}"),
    }
    Ok(())
}

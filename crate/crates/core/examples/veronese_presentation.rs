// The full d-Veronese presentation: pair classes, the relation sets R1, R2
// and R1', and the lifted kernel basis in the free algebra.
//
// cargo run --example veronese_presentation -- 2 2

use std::fmt::Write;

use qgrobner::veronese::c3_set;
use qgrobner::{QuantumSpace, VeroneseMap};

pub fn run(n: usize, d: usize) -> qgrobner::Result<String> {
    let veronese = VeroneseMap::new(&QuantumSpace::generic(n), d)?;
    let classes = veronese.classes();
    let p = veronese.presentation();
    let mut out = String::new();

    writeln!(out, "n = {n}, d = {d}, N = {}", veronese.big_n()).unwrap();
    writeln!(
        out,
        "|C2| = {}, |MV| = {}, |C3| = {}",
        classes.c2.len(),
        classes.mv.len(),
        c3_set(veronese.table()).len()
    )
    .unwrap();
    for (name, set) in [("R1", &p.r1), ("R2", &p.r2), ("R1'", &p.r1_prime)] {
        writeln!(out, "{name} ({} relations)", set.relations.len()).unwrap();
        for line in set.text_lines() {
            writeln!(out, "  {line}").unwrap();
        }
    }
    writeln!(
        out,
        "lifted kernel basis: {} relations",
        veronese.lifted_kernel_gb().relations.len()
    )
    .unwrap();
    Ok(out)
}

fn main() -> qgrobner::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("n and d are non-negative integers"))
        .collect();
    let (n, d) = match args[..] {
        [n, d] => (n, d),
        _ => (2, 2),
    };
    print!("{}", run(n, d)?);
    Ok(())
}

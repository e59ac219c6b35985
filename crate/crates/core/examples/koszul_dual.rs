// The Koszul dual of a quantum space is a quantum Grassmann algebra: its
// normal words are the strictly increasing ones.
//
// cargo run --example koszul_dual

use std::fmt::Write;

use qgrobner::{QuantumSpace, RewriteSystem, Setting};

pub fn run() -> qgrobner::Result<String> {
    let space = QuantumSpace::generic(2);
    let dual = space.koszul_dual();
    let sys = RewriteSystem::from_presentation(&dual, Setting::FreeAlgebra)?;
    let mut out = String::new();
    for line in dual.text_lines() {
        writeln!(out, "{line}").unwrap();
    }
    let dims: Vec<String> = (0..=4)
        .map(|m| sys.count_normal_words_free(m).to_string())
        .collect();
    writeln!(out, "dimensions by degree: {}", dims.join(", ")).unwrap();
    Ok(out)
}

fn main() -> qgrobner::Result<()> {
    print!("{}", run()?);
    Ok(())
}

// Normal forms in a quantum space: closed form, step-wise rewriting and the
// bullet product.
//
// cargo run --example normal_forms

use std::fmt::Write;

use qgrobner::{NormalTerm, QuantumSpace, Strategy, Word};

pub fn run() -> qgrobner::Result<String> {
    let space = QuantumSpace::generic(2);
    let names = space.params();
    let mut out = String::new();

    writeln!(out, "{space}").unwrap();
    for line in space.relations().text_lines() {
        writeln!(out, "  {line}").unwrap();
    }

    let w = Word::new([2, 1, 0, 1]);
    let nf = space.normal_form(&w);
    writeln!(
        out,
        "Nor({}) = {} {}",
        w.to_text(space.labels()),
        nf.coeff.to_text(names),
        nf.term.to_word().to_text(space.labels())
    )
    .unwrap();

    for strategy in [
        Strategy::Leftmost,
        Strategy::Rightmost,
        Strategy::RandomSeeded(7),
    ] {
        let step = space.normal_form_oracle(&w, strategy);
        writeln!(out, "  {strategy:?}: agrees = {}", step == nf).unwrap();
    }

    let a = NormalTerm::monomial(qgrobner::ExponentVector(vec![0, 1, 1]));
    let b = NormalTerm::monomial(qgrobner::ExponentVector(vec![1, 1, 0]));
    let ab = space.bullet(&a, &b);
    writeln!(
        out,
        "x1*x2 • x0*x1 = {} {}",
        ab.coeff.to_text(names),
        ab.term.to_word().to_text(space.labels())
    )
    .unwrap();
    writeln!(out, "dim A_3 = {}", space.hilbert_dim(3)).unwrap();
    Ok(out)
}

fn main() -> qgrobner::Result<()> {
    print!("{}", run()?);
    Ok(())
}

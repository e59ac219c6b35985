// The Segre threefold: Kronecker matrix, kernel basis, and a check that
// every kernel binomial maps to zero in the tensor product.
//
// cargo run --example segre

use std::fmt::Write;

use qgrobner::render::{matrix_text, presentation_text, TextStyle};
use qgrobner::SegreMap;

pub fn run() -> qgrobner::Result<String> {
    let segre = SegreMap::generic(2, 1);
    let kernel = segre.kernel_gb();
    let mut out = String::new();

    write!(
        out,
        "{}\n{}",
        matrix_text(segre.matrix(), segre.params(), segre.space().labels()),
        presentation_text(&kernel, TextStyle::plain())
    )
    .unwrap();

    for r in &kernel.relations {
        let (c_lead, x_lead, y_lead) = segre.tensor_eval(&r.lead);
        let (c_tail, x_tail, y_tail) = segre.tensor_eval(&r.tail);
        let vanishes = c_lead == r.coeff.mul(&c_tail) && x_lead == x_tail && y_lead == y_tail;
        writeln!(out, "{}: maps to zero = {vanishes}", r.to_text(&kernel)).unwrap();
    }
    writeln!(out, "dim of degree-3 component: {}", segre.hilbert_dim(3)).unwrap();
    Ok(out)
}

fn main() -> qgrobner::Result<()> {
    print!("{}", run()?);
    Ok(())
}

// The 3-Veronese of the quantum line: derived matrix and kernel basis,
// symbolic and at `q = 1`.
//
// cargo run --example twisted_cubic

use qgrobner::render::{matrix_text, presentation_eval_text, presentation_text, TextStyle};
use qgrobner::{ParamAssignment, QuantumSpace, VeroneseMap};

pub fn run() -> qgrobner::Result<String> {
    let space = QuantumSpace::generic(1);
    let veronese = VeroneseMap::new(&space, 3)?;
    let kernel = veronese.kernel_gb();
    let commutative = ParamAssignment::parse(&["q=1"], space.params())?;

    Ok(format!(
        "derived matrix:\n{}\nkernel:\n{}\nat q = 1:\n{}",
        matrix_text(
            &veronese.derived_matrix(),
            space.params(),
            veronese.labels()
        ),
        presentation_text(&kernel, TextStyle::plain()),
        presentation_eval_text(&kernel, &commutative, TextStyle::plain())?
    ))
}

fn main() -> qgrobner::Result<()> {
    print!("{}", run()?);
    Ok(())
}

// Specialising symbolic results at exact rational parameter values.
//
// cargo run --example numeric

use qgrobner::render::{matrix_eval_text, presentation_eval_text, TextStyle};
use qgrobner::{ParamAssignment, QuantumSpace, VeroneseMap};

pub fn run() -> qgrobner::Result<String> {
    let space = QuantumSpace::generic(2);
    let veronese = VeroneseMap::new(&space, 2)?;
    let values = ParamAssignment::parse(&["q10=2", "q20=-1/3", "q21=5/7"], space.params())?;
    Ok(format!(
        "{}\n{}",
        matrix_eval_text(&veronese.derived_matrix(), veronese.labels(), &values)?,
        presentation_eval_text(&veronese.kernel_gb(), &values, TextStyle::plain())?
    ))
}

fn main() -> qgrobner::Result<()> {
    print!("{}", run()?);
    Ok(())
}

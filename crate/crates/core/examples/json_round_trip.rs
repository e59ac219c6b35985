// Presentations serialize to JSON and parse back to an equal value.
//
// cargo run --example json_round_trip

use qgrobner::{Presentation, QuantumSpace, VeroneseMap};

pub fn run() -> qgrobner::Result<String> {
    let veronese = VeroneseMap::new(&QuantumSpace::generic(1), 3)?;
    let kernel = veronese.kernel_gb();
    let json = kernel.to_json();
    let back = Presentation::from_json(&json)?;
    assert_eq!(back, kernel);
    Ok(json)
}

fn main() -> qgrobner::Result<()> {
    print!("{}", run()?);
    Ok(())
}

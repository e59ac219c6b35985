//! The five worked examples: derived matrix and kernel basis for the
//! twisted cubic, a rational normal curve, the Veronese surface, the Segre
//! quadric and the Segre threefold.

use crate::qspace::QuantumSpace;
use crate::render::{matrix_text, presentation_text, TextStyle};
use crate::segre::SegreMap;
use crate::veronese::VeroneseMap;
use crate::Result;

/// Degree of the rational normal curve in the corpus.
pub const RATIONAL_NORMAL_CURVE_DEGREE: usize = 4;

/// One fixture: file name and contents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub contents: String,
}

fn document(title: &str, matrix: String, kernel: String) -> String {
    format!("# {title}\n\n## matrix\n{matrix}\n## kernel\n{kernel}")
}

fn veronese_fixture(name: &'static str, title: &str, n: usize, d: usize) -> Result<Fixture> {
    let v = VeroneseMap::new(&QuantumSpace::generic(n), d)?;
    let params = v.space().params();
    Ok(Fixture {
        name,
        contents: document(
            title,
            matrix_text(&v.derived_matrix(), params, v.labels()),
            presentation_text(&v.kernel_gb(), TextStyle::plain()),
        ),
    })
}

fn segre_fixture(name: &'static str, title: &str, n: usize, m: usize) -> Fixture {
    let s = SegreMap::generic(n, m);
    Fixture {
        name,
        contents: document(
            title,
            matrix_text(s.matrix(), s.params(), s.space().labels()),
            presentation_text(&s.kernel_gb(), TextStyle::plain()),
        ),
    }
}

/// Regenerates every fixture from scratch.
pub fn generate() -> Result<Vec<Fixture>> {
    Ok(vec![
        veronese_fixture("twisted_cubic.txt", "twisted cubic (n=1, d=3)", 1, 3)?,
        veronese_fixture(
            "rational_normal_curve.txt",
            &format!("rational normal curve (n=1, d={RATIONAL_NORMAL_CURVE_DEGREE})"),
            1,
            RATIONAL_NORMAL_CURVE_DEGREE,
        )?,
        veronese_fixture("veronese_surface.txt", "Veronese surface (n=2, d=2)", 2, 2)?,
        segre_fixture("segre_quadric.txt", "Segre quadric (n=1, m=1)", 1, 1),
        segre_fixture("segre_threefold.txt", "Segre threefold (n=2, m=1)", 2, 1),
    ])
}

/// The committed corpus, as shipped with the crate.
pub fn committed() -> [(&'static str, &'static str); 5] {
    [
        (
            "twisted_cubic.txt",
            include_str!("../fixtures/twisted_cubic.txt"),
        ),
        (
            "rational_normal_curve.txt",
            include_str!("../fixtures/rational_normal_curve.txt"),
        ),
        (
            "veronese_surface.txt",
            include_str!("../fixtures/veronese_surface.txt"),
        ),
        (
            "segre_quadric.txt",
            include_str!("../fixtures/segre_quadric.txt"),
        ),
        (
            "segre_threefold.txt",
            include_str!("../fixtures/segre_threefold.txt"),
        ),
    ]
}

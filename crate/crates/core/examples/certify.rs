// Independent certification of emitted bases, plus two negative controls.
//
// cargo run --example certify

use std::fmt::Write;

use qgrobner::{
    LaurentMonomial, ParamNames, QuantumSpace, RewriteSystem, SegreMap, Setting, VeroneseMap, Word,
};

fn count(n: &num_bigint::BigUint) -> u64 {
    n.try_into().expect("small dimension")
}

pub fn run() -> qgrobner::Result<String> {
    let mut out = String::new();

    let veronese = VeroneseMap::new(&QuantumSpace::generic(2), 2)?;
    let expected = count(&veronese.image_dim(3));
    let in_space = RewriteSystem::from_presentation(
        &veronese.kernel_gb(),
        Setting::QuantumSpace(veronese.derived_matrix()),
    )?;
    out.push_str(&in_space.certify_quadratic_gb(expected)?.to_text());

    let lifted =
        RewriteSystem::from_presentation(&veronese.lifted_kernel_gb(), Setting::FreeAlgebra)?;
    out.push_str(&lifted.certify_quadratic_gb(expected)?.to_text());

    let segre = SegreMap::generic(2, 1);
    let segre_sys = RewriteSystem::from_presentation(
        &segre.kernel_gb(),
        Setting::QuantumSpace(segre.matrix().clone()),
    )?;
    out.push_str(
        &segre_sys
            .certify_quadratic_gb(count(&segre.hilbert_dim(3)))?
            .to_text(),
    );

    let mut dropped = in_space.clone();
    dropped.id.push_str(" without y1*y1");
    dropped.remove_rule(&Word::new([1, 1]));
    out.push_str(&dropped.certify_quadratic_gb(expected)?.to_text());

    let mut names = ParamNames::new();
    let fresh = LaurentMonomial::param(names.push("t")?);
    let mut corrupted = lifted.clone();
    corrupted.id.push_str(" with y1*y1 scaled");
    corrupted.scale_rule(&Word::new([1, 1]), &fresh)?;
    let report = corrupted.certify_quadratic_gb(expected)?;
    out.push_str(&report.to_text());
    for comp in corrupted.overlap_compositions()? {
        if !corrupted.check_solvable(&comp)?.solvable {
            writeln!(
                out,
                "  unresolved overlap {:?}",
                comp.overlap_word.letters()
            )
            .unwrap();
        }
    }
    Ok(out)
}

fn main() -> qgrobner::Result<()> {
    print!("{}", run()?);
    Ok(())
}

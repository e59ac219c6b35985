//! Exact computations with quantum spaces: noncommutative projective spaces
//! `A^n_q = k<x_0..x_n> / (x_j x_i - q_ji x_i x_j)` defined by a
//! multiplicatively anti-symmetric deformation matrix.
//!
//! The crate builds the d-Veronese and Segre presentations of such spaces,
//! emits closed-form reduced Gröbner bases for the kernels of the Veronese
//! and Segre maps, and certifies every emitted basis independently, either
//! by resolving all overlap ambiguities (Diamond Lemma) or by comparing the
//! number of normal words of length three with the Hilbert function.
//!
//! All coefficients are Laurent monomials in named parameters, so every
//! result holds for generic `q` at once. Numeric specialisation goes through
//! exact rationals.
//!
//! ```
//! use qgrobner::{QuantumSpace, VeroneseMap};
//!
//! let space = QuantumSpace::generic(1);
//! let veronese = VeroneseMap::new(&space, 3).unwrap();
//! let kernel = veronese.kernel_gb();
//! assert_eq!(kernel.relations.len(), 3);
//! assert_eq!(kernel.relations[0].to_text(&kernel), "y1*y1 - q^2 y0*y2");
//! ```

pub mod coeff;
pub mod corpus;
pub mod error;
pub mod gbcheck;
pub mod presentation;
pub mod qspace;
pub mod render;
pub mod segre;
pub mod veronese;

pub use coeff::{LaurentMonomial, ParamAssignment, ParamId, ParamNames};
pub use error::{Error, Result};
pub use gbcheck::{CertificationReport, Composition, RewriteSystem, Setting};
pub use presentation::{BinomialRelation, Header, Presentation, Provenance};
pub use qspace::{
    binomial, DeformationMatrix, ExponentVector, NormalTerm, QuantumSpace, Strategy, Word,
};
pub use segre::{SegreIndex, SegreMap, SegreQuadruple};
pub use veronese::{PairClasses, PhiEntry, TermTable, VeroneseMap, VeronesePresentation};

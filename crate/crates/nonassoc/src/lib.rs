//! Commutative nonassociative algebras with prescribed idempotent spectra.
//!
//! The crate revolves around finite-dimensional commutative (generally
//! nonassociative) algebras given by structure constants over the complex
//! numbers or a prime field F_p. On top of that representation it provides:
//!
//! - enumeration and certification of idempotents (closed form for the
//!   cyclotomic model, Newton iteration over C, brute force over F_p);
//! - Peirce decompositions, fusion-rule and isospectrality checks, canonical
//!   forms and isomorphism testing;
//! - verification of the medial identity `(xy)(zw) = (xz)(yw)` and its
//!   consequences (Kaplansky isotopes, determinant homomorphisms, the
//!   identities `x^(n+1) = b(x) x` and `L_x^n = d(x) I`);
//! - the idempotent quasigroup: Latin/medial certificates, the hidden cyclic
//!   group, and the relabeling onto Z_N with `u * v = (u + v)/2 mod N`.
//!
//! See the `examples/` directory for one runnable walk-through per
//! capability, and the `nonassoc` binary for a JSON-speaking CLI.
//!
//! # Quick start
//!
//! ```
//! use nonassoc::{models, idempotents, medial, peirce};
//! use nonassoc::scalar::{FieldDescriptor, Tolerance};
//!
//! let tol = Tolerance::default();
//! let c3 = models::build_cn(3, FieldDescriptor::complex()).unwrap();
//!
//! // all 2^3 - 1 idempotents in closed form, then certify the structure
//! let idm = idempotents::enumerate_closed_form(&c3, &tol).unwrap();
//! assert_eq!(idm.len(), 7);
//! assert!(medial::is_medial_basis(&c3, &tol).verdict);
//! let (isospectral, _) = peirce::is_isospectral(&c3, &idm, &tol).unwrap();
//! assert!(isospectral);
//!
//! // the idempotents form a cyclic group after the boxplus twist
//! let relabeling = nonassoc::quasigroup::isotopy_to_zn(&c3, &idm, &tol).unwrap();
//! assert!(relabeling.verified);
//! ```

pub mod algebra;
pub mod error;
pub mod idempotents;
pub mod linalg;
pub mod medial;
pub mod models;
pub mod peirce;
pub mod quasigroup;
pub mod report;
pub mod scalar;

pub use algebra::{Algebra, Element, MulOperator};
pub use error::{Error, Result};
pub use idempotents::{GenericityReport, IdempotentSet, Method};
pub use peirce::{CanonicalForm, PeirceData};
pub use quasigroup::{QuasigroupTable, ZnRelabeling};
pub use scalar::{
    approx_eq, half, primitive_root_of_unity, FieldDescriptor, FieldKind, Scalar, Tolerance,
};

//! Exact analysis of p-ary functions over finite fields of odd characteristic.
//!
//! The crate provides:
//!
//! - [`galois`]: arithmetic in `GF(p^n)` with trace, norm and quadratic
//!   character maps;
//! - [`cyclotomic`]: exact integers in `Z[w]`, `w` a primitive p-th root of
//!   unity, so Walsh coefficients and their magnitudes are computed without
//!   floating point;
//! - [`pfun`]: truth-table p-ary functions, naive and butterfly Walsh
//!   transforms, bent/plateaued classification, duals and algebraic degree;
//! - [`linpoly`]: linearized polynomials, permutation tests and compositional
//!   inverses of permutation binomials;
//! - [`constructions`]: Kasami and Sidelnikov base functions, the
//!   product-of-linear-forms and indicator augmentations, and the closed-form
//!   verdict/distribution predictors for each construction family;
//! - [`survey`]: deterministic exhaustive or sampled sweeps comparing
//!   predicted verdicts against observed classifications.
//!
//! A narrative guide with runnable snippets lives in `book/`; the snippets are
//! compiled and executed as doc-tests.

pub mod constructions;
pub mod cyclotomic;
mod error;
pub mod fields;
pub mod galois;
pub mod linpoly;
pub mod pfun;
pub mod survey;

pub use error::{Error, Result};
pub use galois::{Field, FieldElement, SubfieldHandle};

#[cfg(doctest)]
mod book {
    //! Every chapter of the guide is compiled here so `cargo test --doc`
    //! keeps the book's snippets honest.
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/cyclotomic.md")]
    mod cyclotomic {}
    #[doc = include_str!("../../../book/src/walsh.md")]
    mod walsh {}
    #[doc = include_str!("../../../book/src/linearized.md")]
    mod linearized {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/surveys.md")]
    mod surveys {}
}

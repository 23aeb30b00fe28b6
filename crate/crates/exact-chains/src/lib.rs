//! Exact linear algebra over graded modules with chosen basis.
//!
//! Every computation in the workspace happens over one of two scalar
//! modes — arbitrary-precision rationals or a prime field `F_p` — chosen
//! once per run and never mixed.  On top of the scalars this crate
//! provides:
//!
//! * [`Chain`]: finite linear combinations of graded basis labels with a
//!   deterministic (ordered) representation, so equal chains print
//!   byte-identically;
//! * the Koszul sign engine ([`koszul_sign`], [`interleave_sign`]): all
//!   graded signs downstream are produced here and nowhere else;
//! * [`Tens`]: tensor-product labels with signed permutation actions;
//! * [`LinOp`]: finite table-backed linear operators, their (signed)
//!   tensor products, the regrouped tensor product
//!   `f ⊗̃ g : (A⊗B)^{⊗n} → (C⊗D)^{⊗k}`, and a differential check;
//! * exact Gaussian elimination ([`linalg`]) for kernels, ranks, and
//!   solving linear systems, used by the homotopy-group computations.

pub mod chain;
pub mod koszul;
pub mod linalg;
pub mod linop;
pub mod scalar;
pub mod tensor;

pub use chain::{Chain, ChainLabel};
pub use koszul::{interleave_sign, koszul_sign, reorder_to_sorted_sign};
pub use linalg::Matrix;
pub use linop::{
    apply_regrouped, apply_to_factor, contraction_on_word, derivation_on_word,
    hom_differential, LinOp,
};
pub use scalar::{Field, Scalar};
pub use tensor::{into_words, tensor_product, Pair, Tens};

//! Normalized chains of the standard simplices Δⁿ and their suspended
//! duals.
//!
//! The chain side carries the faces `a_0 < … < a_r` of Δⁿ in degree `r`,
//! the simplicial boundary, the coface/codegeneracy maps between ambient
//! simplices, and the explicit deformation retraction `(h_n^k, φ_n^k)`
//! contracting `N_*(Δⁿ)` onto the vertex `k`.
//!
//! The dual side stores the suspension `Σ N^*(Δⁿ)` directly: the label for
//! `Σ x^∨` carries degree `1 − r`, which is the grading every simplicial
//! Maurer–Cartan construction downstream works in (a degree-0 element of
//! `A ⊗ Σ N^*` pairs degree-(r−1) coefficients with r-dimensional faces).
//! All transposed operators — differential, contraction, cofaces,
//! codegeneracies — are tabulated here with their suspension signs, and
//! the retraction identities are re-verified on the dual side.

pub mod face;
pub mod ops;
pub mod sigma_dual;

pub use face::{all_faces, in_boundary, in_horn, Cochain, Face};
pub use ops::{
    augmentation, boundary, boundary_op, codegeneracy_face, codegeneracy_op, coface_face,
    coface_op, retraction_homotopy, retraction_projector,
};
pub use sigma_dual::{
    all_cochains, sigma_dual_codegeneracy, sigma_dual_coface, sigma_dual_differential,
    sigma_dual_homotopy, sigma_dual_projector,
};

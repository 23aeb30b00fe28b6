//! An inductive lift of the commutative structure through the
//! permutation-tuple operad, indexed by planar rooted trees.
//!
//! * [`susp`]: the operadic suspension of the tuple operad, realized as
//!   sign twists on underlying elements — slot composition, the
//!   differential, the prepending homotopy, and permutation actions.
//! * [`table`]: the memoized tree-indexed family `mu(T)` together with
//!   the verification of its defining identity.
//! * [`structure`]: how the table reductions of the family look —
//!   vanishing for wide first branches, a forced two-letter prefix for
//!   thin ones.

pub mod structure;
pub mod susp;
pub mod table;

pub use structure::{first_branch_count, tr_structure, TrStructure};
pub use susp::{
    relabel_chain, susp_act, susp_compose_at_letter, susp_compose_chains,
    susp_differential, susp_differential_chain, susp_homotopy, susp_projector,
};
pub use table::{verify_lift_up_to, MuTable};

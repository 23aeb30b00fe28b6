//! Chain-level symmetric operads on permutation tuples and surjection
//! words, with the table-reduction map between them and the interval-cut
//! action on simplex chains.
//!
//! * [`be`]: tuples of orderings of a letter set (degree = tuple length
//!   minus one), with the simplicial differential, diagonal, homotopy
//!   retraction onto a chosen ordering, and shuffle composition.
//! * [`surj`]: nondegenerate surjection words over a label set (degree =
//!   number of caesuras), with the caesura-signed differential and
//!   overlapping-block composition.
//! * [`tr`]: the table-reduction quotient map from tuples to surjection
//!   words, and the prefix-forgetting maps it interacts with.
//! * [`cuts`]: the interval-cut action of surjection words on normalized
//!   simplex chains, specializing to cup products and the diagonal
//!   approximation.

pub mod be;
pub mod cuts;
pub mod surj;
pub mod tr;

pub use be::{
    be_act, be_compose, be_compose_at_letter, be_compose_chains, be_diagonal,
    be_differential, be_homotopy, be_projector, be_term, enumerate_be, BeTuple, BeWord,
};
pub use surj::{
    enumerate_surjections, surjection_act, surjection_compose, surjection_compose_at_label,
    surjection_compose_chains, surjection_differential, surjection_term, Surjection,
};
pub use cuts::{coact_in_slot, interval_cut, interval_cut_chain};
pub use tr::{
    concat_prefix, forget_prefix, staircase_sum, table_reduction, table_reduction_chain,
};

//! Planar rooted trees with labelled vertices: canonical depth-first order,
//! subtrees and contractions, substitution of one tree into a vertex of
//! another, and trees with free input slots for building operads freely.

mod compose;
mod subtree;
mod tree;
mod with_inputs;

pub use compose::{brace_compose, compose_at_label, slot_sequence};
pub use subtree::{contract, induced_subtree, subtree_sets};
pub use tree::{enumerate_canonical, enumerate_trees, Tree};
pub use with_inputs::{
    arrangements, contract_with_inputs, graft, induced_with_inputs, substitute, Slot,
    TreeWithInputs,
};

//! Shape analysis of the reduced lift elements.
//!
//! Pushing a lift element through table reduction produces a chain of
//! surjection words whose shape is governed by the size of the tree's
//! first branch: two or more vertices force the reduction to vanish,
//! while a single vertex forces every word to open with the root label
//! followed by the second-smallest label, the root never recurring.
//! Stripping that two-letter prefix leaves a word chain over the
//! non-root labels.

use exact_chains::Chain;

use eops::{surjection_term, table_reduction_chain, Surjection};
use trees::Tree;

use crate::table::MuTable;

/// Number of vertices of the leftmost branch at the root.
pub fn first_branch_count(t: &Tree) -> usize {
    assert!(t.size() >= 2, "a branch needs a non-root vertex");
    t.children()[0].size()
}

/// The shape of the table-reduced lift element of a tree.
#[derive(Clone, Debug, PartialEq)]
pub enum TrStructure {
    /// The reduction vanishes.
    Zero,
    /// Every word is `root, second, …` with the root occurring only
    /// once; `tail` is the chain of stripped words over the non-root
    /// labels.
    RootSecondPrefixed {
        root: u32,
        second: u32,
        tail: Chain<Surjection>,
    },
    /// Neither shape; carries the full reduction.
    Unstructured(Chain<Surjection>),
}

/// Classify the table reduction of `mu(T)`.
pub fn tr_structure(table: &MuTable, t: &Tree) -> TrStructure {
    let reduction = table_reduction_chain(&table.mu(t), &table.field());
    if reduction.is_zero() {
        return TrStructure::Zero;
    }
    let root = t.root_label();
    let second = *t
        .labels()
        .iter()
        .find(|&&l| l != root)
        .expect("at least two labels");
    let mut tail = Chain::zero();
    for (word, coeff) in reduction.iter() {
        let values = word.values();
        let opens = values.len() >= 2 && values[0] == root && values[1] == second;
        let stripped = if opens && word.occurrences(root) == 1 {
            Surjection::new(values[2..].to_vec())
        } else {
            None
        };
        match stripped {
            Some(s) => tail = tail.add(&surjection_term(Some(s), coeff.clone())),
            None => return TrStructure::Unstructured(reduction.clone()),
        }
    }
    TrStructure::RootSecondPrefixed { root, second, tail }
}

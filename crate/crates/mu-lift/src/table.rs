//! The tree-indexed lift family.
//!
//! To every planar rooted tree `T` on a totally ordered label set the
//! table assigns a chain `mu(T)` of tuples over the labels, of degree
//! `|T| - 2`: one-vertex trees give zero, the two-vertex trees give
//! their own vertex order as a single word, and larger trees are built
//! inductively.  For each connected vertex set `S` with at least two
//! vertices and proper in `T`, compose the value of the contraction
//! `T/S` with the value of `S` at the slot named by the root of `S`,
//! all in the suspended operad; sum over `S`; feed the sum to the
//! suspended prepending homotopy for the tree's sorting permutation;
//! and negate.
//!
//! The defining property, verified by [`MuTable::verify_lift`], is that
//! the suspended differential of `mu(T)` cancels the subtree sum — the
//! family solves a lifting problem one degree at a time.

use std::collections::BTreeMap;
use std::sync::RwLock;

use exact_chains::{Chain, Field};

use eops::{BeTuple, BeWord};
use trees::{contract, induced_subtree, subtree_sets, Tree};

use crate::susp::{
    relabel_chain, susp_compose_chains, susp_differential_chain, susp_homotopy,
};

/// Memoized builder for the lift family.
///
/// Entries are keyed by the order-standardized tree — the unique
/// relabelling of the input onto `1..n` preserving the label order —
/// because the construction commutes with order isomorphisms without
/// signs.  Each key is written once; concurrent builders may race to
/// compute the same key, but purity makes every computed value agree,
/// and readers of a completed entry never wait on a builder.
pub struct MuTable {
    field: Field,
    memo: RwLock<BTreeMap<Tree, Chain<BeTuple>>>,
}

impl MuTable {
    pub fn new(field: Field) -> Self {
        MuTable {
            field,
            memo: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// The lift element for `T`, a chain of tuples over `T`'s labels in
    /// degree `|T| - 2` (zero for a single vertex).
    pub fn mu(&self, t: &Tree) -> Chain<BeTuple> {
        if t.size() == 1 {
            return Chain::zero();
        }
        let labels = t.labels();
        let standard = (1..=labels.len() as u32).collect::<Vec<_>>() == labels;
        if standard {
            return self.mu_standard(t);
        }
        let squash = |v: u32| {
            labels.binary_search(&v).expect("label in the tree's label set") as u32 + 1
        };
        let value = self.mu_standard(&t.map_labels(&squash));
        relabel_chain(&value, &self.field, &|l| labels[l as usize - 1])
    }

    /// Lookup-or-build for a tree already labelled by `1..n`.
    fn mu_standard(&self, t: &Tree) -> Chain<BeTuple> {
        if let Some(v) = self.memo.read().expect("table lock healthy").get(t) {
            return v.clone();
        }
        let value = self.compute(t);
        self.memo
            .write()
            .expect("table lock healthy")
            .entry(t.clone())
            .or_insert_with(|| value.clone());
        value
    }

    fn compute(&self, t: &Tree) -> Chain<BeTuple> {
        if t.size() == 2 {
            let word = BeWord::new(t.vertex_order());
            return Chain::term(BeTuple::single(word), self.field.one());
        }
        let sum = self.subtree_sum(t);
        let sigma = BeWord::from_permutation(&t.canonical_sigma());
        sum.apply_linear(|x| susp_homotopy(&sigma, x, &self.field)).neg()
    }

    /// The suspended subtree sum: over every connected vertex set `S`
    /// of `T` with `2 ≤ |S| < |T|`, the suspended composition of the
    /// value of `T/S` with the value of `S` at the root of `S`.  The
    /// omitted sets — singletons and all of `T` — would contribute
    /// through a one-vertex factor, whose value is zero.
    pub fn subtree_sum(&self, t: &Tree) -> Chain<BeTuple> {
        let n = t.size();
        let mut out = Chain::zero();
        for set in subtree_sets(t) {
            if set.len() < 2 || set.len() == n {
                continue;
            }
            let sub = induced_subtree(t, &set);
            let quotient = contract(t, &set);
            let composite = susp_compose_chains(
                &self.mu(&quotient),
                &self.mu(&sub),
                sub.root_label(),
                &self.field,
            );
            out = out.add(&composite);
        }
        out
    }

    /// The defining identity's left-hand side: the suspended
    /// differential of `mu(T)` plus the suspended subtree sum.
    pub fn lift_residual(&self, t: &Tree) -> Chain<BeTuple> {
        susp_differential_chain(&self.mu(t), &self.field).add(&self.subtree_sum(t))
    }

    /// Check the defining identity for `T`; the residual chain is
    /// returned on failure.
    pub fn verify_lift(&self, t: &Tree) -> Result<(), Chain<BeTuple>> {
        let residual = self.lift_residual(t);
        if residual.is_zero() {
            Ok(())
        } else {
            Err(residual)
        }
    }
}

/// Check the defining identity for every canonical tree with `2..=max`
/// vertices, sharing one table across the sweep; failures are returned
/// with their residuals.
pub fn verify_lift_up_to(field: Field, max: usize) -> Vec<(Tree, Chain<BeTuple>)> {
    let table = MuTable::new(field);
    let all: Vec<Tree> = (2..=max).flat_map(trees::enumerate_canonical).collect();
    let check = |t: &Tree| table.verify_lift(t).err().map(|r| (t.clone(), r));
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        all.par_iter().filter_map(check).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        all.iter().filter_map(check).collect()
    }
}

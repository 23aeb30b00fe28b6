//! Subtrees and contractions.
//!
//! A subtree is a connected set of vertices with the induced planar
//! structure; it is determined by its vertex set, whose unique minimal
//! element (closest to the root) serves as its root.  Contracting a subtree
//! `S` inside `T` collapses it to a single vertex that keeps the label of
//! the root of `S`; the branches of `T` hanging off `S` become the children
//! of that vertex, ordered as a traversal around `S` meets them.

use std::collections::BTreeSet;

use crate::tree::Tree;

/// All connected vertex sets of `t`, each inducing a subtree.  Includes the
/// singletons and the full vertex set.
pub fn subtree_sets(t: &Tree) -> Vec<BTreeSet<u32>> {
    let mut out = rooted_sets(t);
    for c in t.children() {
        out.extend(subtree_sets(c));
    }
    out
}

/// Connected vertex sets containing the root of `t`.
fn rooted_sets(t: &Tree) -> Vec<BTreeSet<u32>> {
    let mut acc: Vec<BTreeSet<u32>> = vec![BTreeSet::from([t.root_label()])];
    for c in t.children() {
        let with_child = rooted_sets(c);
        let mut next = Vec::with_capacity(acc.len() * (1 + with_child.len()));
        for set in acc {
            next.push(set.clone());
            for extra in &with_child {
                let mut bigger = set.clone();
                bigger.extend(extra.iter().copied());
                next.push(bigger);
            }
        }
        acc = next;
    }
    acc
}

/// The subtree induced by a connected vertex set.  Panics if the set is
/// empty, contains unknown labels, or is not connected in `t`.
pub fn induced_subtree(t: &Tree, set: &BTreeSet<u32>) -> Tree {
    assert!(!set.is_empty(), "subtree set must be nonempty");
    let root = find_top(t, set)
        .unwrap_or_else(|| panic!("set {set:?} has no vertex inside the tree {t}"));
    let sub = build_induced(root, set);
    assert_eq!(
        sub.size(),
        set.len(),
        "set {set:?} is not connected in {t}: reached only {sub}"
    );
    sub
}

/// The highest tree vertex belonging to the set.
fn find_top<'a>(t: &'a Tree, set: &BTreeSet<u32>) -> Option<&'a Tree> {
    if set.contains(&t.root_label()) {
        return Some(t);
    }
    t.children().iter().find_map(|c| find_top(c, set))
}

fn build_induced(t: &Tree, set: &BTreeSet<u32>) -> Tree {
    let children = t
        .children()
        .iter()
        .filter(|c| set.contains(&c.root_label()))
        .map(|c| build_induced(c, set))
        .collect();
    Tree::node(t.root_label(), children)
}

/// Contract the subtree induced by `set` to a single vertex labelled by the
/// subtree's root.  The hanging branches become the children of that vertex
/// in the order a planar traversal of the subtree meets them: at each
/// subtree vertex the children of `t` are scanned left to right, descending
/// into those inside the set and collecting those outside it.
pub fn contract(t: &Tree, set: &BTreeSet<u32>) -> Tree {
    // Validate the set and locate the subtree root.
    let sub = induced_subtree(t, set);
    contract_in(t, set, sub.root_label())
}

fn contract_in(t: &Tree, set: &BTreeSet<u32>, sub_root: u32) -> Tree {
    if t.root_label() == sub_root {
        let mut hanging = Vec::new();
        collect_hanging(t, set, &mut hanging);
        return Tree::node(sub_root, hanging);
    }
    let children = t
        .children()
        .iter()
        .map(|c| contract_in(c, set, sub_root))
        .collect();
    Tree::node(t.root_label(), children)
}

fn collect_hanging(v: &Tree, set: &BTreeSet<u32>, out: &mut Vec<Tree>) {
    for c in v.children() {
        if set.contains(&c.root_label()) {
            collect_hanging(c, set, out);
        } else {
            out.push(c.clone());
        }
    }
}

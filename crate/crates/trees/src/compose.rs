//! Tree composition: substituting one tree into a vertex of another.
//!
//! Substituting `v` into the vertex `a` of `u` removes that vertex and puts
//! `v` in its place; the former children of `a` are distributed over the
//! insertion slots of `v` in every order-preserving way, one output tree per
//! distribution.  A tree with `q` vertices has `2q - 1` slots, visited by a
//! planar traversal: the gap before a vertex's first child, the gaps
//! between consecutive children, and the gap after the last child.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::tree::Tree;

/// The insertion slots of `v` in traversal order, each identified by
/// `(vertex label, gap index)` where gap `g` sits between children `g - 1`
/// and `g`.
pub fn slot_sequence(v: &Tree) -> Vec<(u32, usize)> {
    let mut out = Vec::with_capacity(2 * v.size() - 1);
    fill_slots(v, &mut out);
    out
}

fn fill_slots(v: &Tree, out: &mut Vec<(u32, usize)>) {
    out.push((v.root_label(), 0));
    for (idx, c) in v.children().iter().enumerate() {
        fill_slots(c, out);
        out.push((v.root_label(), idx + 1));
    }
}

/// Substitute `v` for the vertex labelled `at` inside `u`.  The labels of
/// `v` must be disjoint from the remaining labels of `u`.  Returns one tree
/// per order-preserving distribution of the children of `at` over the slots
/// of `v`; all trees carry coefficient one.
pub fn compose_at_label(u: &Tree, v: &Tree, at: u32) -> Vec<Tree> {
    let site = u
        .branch_at(at)
        .unwrap_or_else(|| panic!("tree {u} has no vertex labelled {at}"));
    let branches: Vec<Tree> = site.children().to_vec();
    let mut u_rest: BTreeSet<u32> = u.labels().into_iter().collect();
    for l in site.labels() {
        u_rest.remove(&l);
    }
    for l in v.labels() {
        assert!(
            !u_rest.contains(&l),
            "label {l} of the inserted tree collides with the host tree"
        );
    }

    let slots = slot_sequence(v);
    let mut out = Vec::new();
    for assignment in monotone_assignments(branches.len(), slots.len()) {
        let mut placed: BTreeMap<(u32, usize), Vec<Tree>> = BTreeMap::new();
        for (branch, &slot_idx) in branches.iter().zip(&assignment) {
            placed.entry(slots[slot_idx]).or_default().push(branch.clone());
        }
        let filled = insert_branches(v, &placed);
        out.push(replace_vertex(u, at, &filled));
    }
    out
}

/// Composition for trees labelled `1..p` and `1..q`: insert `v` at the
/// vertex `i` of `u` and renumber so the result is labelled `1..p+q-1`,
/// with `v` occupying the block `i..i+q-1`.
pub fn brace_compose(u: &Tree, v: &Tree, i: u32) -> Vec<Tree> {
    let p = u.size() as u32;
    let q = v.size() as u32;
    assert_eq!(u.labels(), (1..=p).collect::<Vec<_>>(), "host labels must be 1..p");
    assert_eq!(v.labels(), (1..=q).collect::<Vec<_>>(), "inserted labels must be 1..q");
    assert!((1..=p).contains(&i), "composition index {i} out of range 1..{p}");
    // Move the host's labels above `i` out of the way (0 marks the site,
    // which disappears) and shift the inserted labels into the gap.
    let u_shift = u.map_labels(&|l| {
        if l < i {
            l
        } else if l == i {
            0
        } else {
            l + q - 1
        }
    });
    let v_shift = v.map_labels(&|l| l + i - 1);
    compose_at_label(&u_shift, &v_shift, 0)
}

/// All weakly increasing sequences of length `m` with values in `0..n`.
fn monotone_assignments(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(m: usize, n: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for next in min..n {
            cur.push(next);
            rec(m, n, next, cur, out);
            cur.pop();
        }
    }
    rec(m, n, 0, &mut cur, &mut out);
    out
}

fn insert_branches(v: &Tree, placed: &BTreeMap<(u32, usize), Vec<Tree>>) -> Tree {
    let label = v.root_label();
    let mut children = Vec::new();
    if let Some(bs) = placed.get(&(label, 0)) {
        children.extend(bs.iter().cloned());
    }
    for (idx, c) in v.children().iter().enumerate() {
        children.push(insert_branches(c, placed));
        if let Some(bs) = placed.get(&(label, idx + 1)) {
            children.extend(bs.iter().cloned());
        }
    }
    Tree::node(label, children)
}

fn replace_vertex(u: &Tree, at: u32, replacement: &Tree) -> Tree {
    if u.root_label() == at {
        return replacement.clone();
    }
    let children = u
        .children()
        .iter()
        .map(|c| replace_vertex(c, at, replacement))
        .collect();
    Tree::node(u.root_label(), children)
}

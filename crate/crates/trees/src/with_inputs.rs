//! Planar rooted trees with free input slots.
//!
//! Every vertex carries an ordered list of slots; each slot is either an
//! edge to a child subtree or a free input.  The inputs of the whole tree
//! are numbered by the planar traversal: at each vertex the slots are
//! scanned left to right, descending into child slots as they are met.
//! Grafting attaches one tree's root to an input of another; substitution
//! replaces a vertex whose slot count matches the other tree's input count.

use std::collections::BTreeSet;
use std::collections::VecDeque;
use std::fmt;

use itertools::Itertools;

use crate::tree::Tree;

/// One ingoing slot of a vertex: a child edge or a free input.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Input,
    Child(TreeWithInputs),
}

/// A planar rooted tree whose vertices carry ordered input/child slots.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeWithInputs {
    label: u32,
    slots: Vec<Slot>,
}

impl TreeWithInputs {
    /// A vertex with the given slots.  Panics on repeated vertex labels.
    pub fn new(label: u32, slots: Vec<Slot>) -> Self {
        let t = TreeWithInputs { label, slots };
        let mut seen = BTreeSet::new();
        for v in t.shape().vertex_order() {
            assert!(seen.insert(v), "repeated vertex label {v} in tree");
        }
        t
    }

    /// A vertex whose slots are all inputs.
    pub fn corolla(label: u32, valence: usize) -> Self {
        TreeWithInputs { label, slots: vec![Slot::Input; valence] }
    }

    pub fn root_label(&self) -> u32 {
        self.label
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// Number of vertices.
    pub fn size(&self) -> usize {
        1 + self
            .slots
            .iter()
            .map(|s| match s {
                Slot::Input => 0,
                Slot::Child(c) => c.size(),
            })
            .sum::<usize>()
    }

    /// Total number of free inputs.
    pub fn num_inputs(&self) -> usize {
        self.input_positions().len()
    }

    /// The slot count of the vertex with the given label, if present.
    pub fn valence(&self, label: u32) -> Option<usize> {
        self.branch_at(label).map(|b| b.slots.len())
    }

    /// The underlying tree, forgetting inputs.
    pub fn shape(&self) -> Tree {
        let children = self
            .slots
            .iter()
            .filter_map(|s| match s {
                Slot::Input => None,
                Slot::Child(c) => Some(c.shape()),
            })
            .collect();
        Tree::node(self.label, children)
    }

    /// The positions `(vertex label, slot index)` of the inputs in their
    /// numbering order: the planar traversal scans each vertex's slots left
    /// to right and descends into child slots as it meets them.
    pub fn input_positions(&self) -> Vec<(u32, usize)> {
        let mut out = Vec::new();
        self.collect_inputs(&mut out);
        out
    }

    fn collect_inputs(&self, out: &mut Vec<(u32, usize)>) {
        for (idx, s) in self.slots.iter().enumerate() {
            match s {
                Slot::Input => out.push((self.label, idx)),
                Slot::Child(c) => c.collect_inputs(out),
            }
        }
    }

    /// The branch rooted at the vertex with the given label, if present.
    pub fn branch_at(&self, label: u32) -> Option<&TreeWithInputs> {
        if self.label == label {
            return Some(self);
        }
        self.slots.iter().find_map(|s| match s {
            Slot::Input => None,
            Slot::Child(c) => c.branch_at(label),
        })
    }

    /// Sorted vertex labels.
    pub fn labels(&self) -> Vec<u32> {
        self.shape().labels()
    }

    /// Apply a relabelling function to every vertex.
    pub fn map_labels(&self, f: &impl Fn(u32) -> u32) -> TreeWithInputs {
        TreeWithInputs {
            label: f(self.label),
            slots: self
                .slots
                .iter()
                .map(|s| match s {
                    Slot::Input => Slot::Input,
                    Slot::Child(c) => Slot::Child(c.map_labels(f)),
                })
                .collect(),
        }
    }
}

impl fmt::Display for TreeWithInputs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if !self.slots.is_empty() {
            write!(f, "(")?;
            for (idx, s) in self.slots.iter().enumerate() {
                if idx > 0 {
                    write!(f, ",")?;
                }
                match s {
                    Slot::Input => write!(f, "*")?,
                    Slot::Child(c) => write!(f, "{c}")?,
                }
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TreeWithInputs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Graft `v` onto the `i`-th input (1-based) of `u`: that input slot
/// becomes a child edge to `v`.  Labels must be disjoint.
pub fn graft(u: &TreeWithInputs, v: &TreeWithInputs, i: usize) -> TreeWithInputs {
    let positions = u.input_positions();
    assert!(
        (1..=positions.len()).contains(&i),
        "input index {i} out of range 1..{}",
        positions.len()
    );
    let u_labels: BTreeSet<u32> = u.labels().into_iter().collect();
    for l in v.labels() {
        assert!(!u_labels.contains(&l), "label {l} of the grafted tree collides");
    }
    let (vertex, slot_idx) = positions[i - 1];
    graft_at(u, vertex, slot_idx, v)
}

fn graft_at(u: &TreeWithInputs, vertex: u32, slot_idx: usize, v: &TreeWithInputs) -> TreeWithInputs {
    let slots = u
        .slots
        .iter()
        .enumerate()
        .map(|(idx, s)| {
            if u.label == vertex && idx == slot_idx {
                Slot::Child(v.clone())
            } else {
                match s {
                    Slot::Input => Slot::Input,
                    Slot::Child(c) => Slot::Child(graft_at(c, vertex, slot_idx, v)),
                }
            }
        })
        .collect();
    TreeWithInputs { label: u.label, slots }
}

/// Substitute `v` for the vertex labelled `at` of `u`.  Returns `None`
/// when the slot count of that vertex differs from the input count of `v`;
/// otherwise the vertex's slots fill the inputs of `v` in numbering order.
pub fn substitute(
    u: &TreeWithInputs,
    v: &TreeWithInputs,
    at: u32,
) -> Option<TreeWithInputs> {
    let site = u
        .branch_at(at)
        .unwrap_or_else(|| panic!("tree {u} has no vertex labelled {at}"));
    if site.slots.len() != v.num_inputs() {
        return None;
    }
    let mut queue: VecDeque<Slot> = site.slots.iter().cloned().collect();
    let filled = fill_inputs(v, &mut queue);
    debug_assert!(queue.is_empty());
    Some(replace_branch(u, at, &filled))
}

fn fill_inputs(v: &TreeWithInputs, queue: &mut VecDeque<Slot>) -> TreeWithInputs {
    let slots = v
        .slots
        .iter()
        .map(|s| match s {
            Slot::Input => queue.pop_front().expect("one slot per input"),
            Slot::Child(c) => Slot::Child(fill_inputs(c, queue)),
        })
        .collect();
    TreeWithInputs { label: v.label, slots }
}

fn replace_branch(u: &TreeWithInputs, at: u32, replacement: &TreeWithInputs) -> TreeWithInputs {
    if u.label == at {
        return replacement.clone();
    }
    let slots = u
        .slots
        .iter()
        .map(|s| match s {
            Slot::Input => Slot::Input,
            Slot::Child(c) => Slot::Child(replace_branch(c, at, replacement)),
        })
        .collect();
    TreeWithInputs { label: u.label, slots }
}

/// The slot-level subtree on a connected vertex set: each vertex keeps its
/// full slot list, with child edges leaving the set turned into inputs.
pub fn induced_with_inputs(t: &TreeWithInputs, set: &BTreeSet<u32>) -> TreeWithInputs {
    // Reuse the shape-level connectivity validation.
    let shape_sub = crate::subtree::induced_subtree(&t.shape(), set);
    let top = t
        .branch_at(shape_sub.root_label())
        .expect("subtree root present");
    build_induced(top, set)
}

fn build_induced(t: &TreeWithInputs, set: &BTreeSet<u32>) -> TreeWithInputs {
    let slots = t
        .slots
        .iter()
        .map(|s| match s {
            Slot::Input => Slot::Input,
            Slot::Child(c) => {
                if set.contains(&c.label) {
                    Slot::Child(build_induced(c, set))
                } else {
                    Slot::Input
                }
            }
        })
        .collect();
    TreeWithInputs { label: t.label, slots }
}

/// Contract the subtree on `set` to one vertex labelled by its root.  The
/// contracted vertex's slots are the subtree's outward slots in traversal
/// order: free inputs stay inputs and the hanging branches stay children,
/// so its slot count equals the input count of the slot-level subtree.
pub fn contract_with_inputs(t: &TreeWithInputs, set: &BTreeSet<u32>) -> TreeWithInputs {
    let shape_sub = crate::subtree::induced_subtree(&t.shape(), set);
    contract_in(t, set, shape_sub.root_label())
}

fn contract_in(t: &TreeWithInputs, set: &BTreeSet<u32>, sub_root: u32) -> TreeWithInputs {
    if t.label == sub_root {
        let mut outward = Vec::new();
        collect_outward(t, set, &mut outward);
        return TreeWithInputs { label: sub_root, slots: outward };
    }
    let slots = t
        .slots
        .iter()
        .map(|s| match s {
            Slot::Input => Slot::Input,
            Slot::Child(c) => Slot::Child(contract_in(c, set, sub_root)),
        })
        .collect();
    TreeWithInputs { label: t.label, slots }
}

fn collect_outward(v: &TreeWithInputs, set: &BTreeSet<u32>, out: &mut Vec<Slot>) {
    for s in &v.slots {
        match s {
            Slot::Input => out.push(Slot::Input),
            Slot::Child(c) => {
                if set.contains(&c.label) {
                    collect_outward(c, set, out);
                } else {
                    out.push(Slot::Child(c.clone()));
                }
            }
        }
    }
}

/// All ways to place the children of each vertex of `t` into `val(v)`
/// ordered slots, where `val` maps each label to a slot count at least the
/// child count.  Every placement keeps the children in order and fills the
/// remaining slots with inputs.
pub fn arrangements(t: &Tree, val: &impl Fn(u32) -> usize) -> Vec<TreeWithInputs> {
    let label = t.root_label();
    let children = t.children();
    let w = val(label);
    assert!(
        w >= children.len(),
        "valence {w} at vertex {label} is below its child count {}",
        children.len()
    );
    let child_options: Vec<Vec<TreeWithInputs>> =
        children.iter().map(|c| arrangements(c, val)).collect();
    let mut out = Vec::new();
    for positions in (0..w).combinations(children.len()) {
        for combo in product_choices(&child_options) {
            let mut slots = vec![Slot::Input; w];
            for (pos, sub) in positions.iter().zip(combo.iter()) {
                slots[*pos] = Slot::Child((*sub).clone());
            }
            out.push(TreeWithInputs { label, slots });
        }
    }
    out
}

/// One choice per factor; a single empty choice when there are no factors.
fn product_choices(options: &[Vec<TreeWithInputs>]) -> Vec<Vec<&TreeWithInputs>> {
    let mut acc: Vec<Vec<&TreeWithInputs>> = vec![Vec::new()];
    for opts in options {
        let mut next = Vec::with_capacity(acc.len() * opts.len());
        for prefix in &acc {
            for opt in opts {
                let mut item = prefix.clone();
                item.push(opt);
                next.push(item);
            }
        }
        acc = next;
    }
    acc
}

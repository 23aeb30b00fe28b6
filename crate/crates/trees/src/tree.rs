//! Planar rooted trees with labelled vertices.
//!
//! A tree stores its root label and the ordered list of child subtrees, so
//! the planar structure is part of the data.  Labels are arbitrary distinct
//! `u32` values; a tree on the label set `{1, ..., n}` is *canonical* when
//! its depth-first vertex order is increasing.

use std::collections::BTreeSet;
use std::fmt;

use symgroups::Permutation;

/// A planar rooted tree with distinct `u32` vertex labels.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    label: u32,
    children: Vec<Tree>,
}

impl Tree {
    /// A single vertex.
    pub fn leaf(label: u32) -> Self {
        Tree { label, children: Vec::new() }
    }

    /// A vertex with the given ordered children.  Panics if any label
    /// repeats among the assembled vertices.
    pub fn node(label: u32, children: Vec<Tree>) -> Self {
        let t = Tree { label, children };
        let mut seen = BTreeSet::new();
        for v in t.vertex_order() {
            assert!(seen.insert(v), "repeated vertex label {v} in tree");
        }
        t
    }

    /// The label of the root vertex.
    pub fn root_label(&self) -> u32 {
        self.label
    }

    /// The ordered child subtrees of the root.
    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    /// Number of vertices.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Tree::size).sum::<usize>()
    }

    /// The label set, sorted increasingly.
    pub fn labels(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.vertex_order();
        out.sort_unstable();
        out
    }

    /// Depth-first vertex order: root first, then the children's orders from
    /// left to right.  For the planar structure this is the order in which a
    /// traversal around the tree first meets each vertex.
    pub fn vertex_order(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(8);
        self.collect_order(&mut out);
        out
    }

    fn collect_order(&self, out: &mut Vec<u32>) {
        out.push(self.label);
        for c in &self.children {
            c.collect_order(out);
        }
    }

    /// Whether the depth-first vertex order is increasing.
    pub fn is_canonical(&self) -> bool {
        let order = self.vertex_order();
        order.windows(2).all(|w| w[0] < w[1])
    }

    /// The permutation whose one-line word is the rank pattern of the
    /// depth-first vertex order.  For a tree labelled by `{1, ..., n}` the
    /// word is the vertex order itself; acting by the inverse of this
    /// permutation makes the tree canonical.
    pub fn canonical_sigma(&self) -> Permutation {
        let order = self.vertex_order();
        let sorted = self.labels();
        let word: Vec<usize> = order
            .iter()
            .map(|v| sorted.binary_search(v).expect("label in own label set") + 1)
            .collect();
        Permutation::from_values(word)
    }

    /// Relabel so the depth-first order becomes increasing, keeping the same
    /// label set: the vertex met `k`-th receives the `k`-th smallest label.
    pub fn canonical_form(&self) -> Tree {
        let order = self.vertex_order();
        let sorted = self.labels();
        let map = |v: u32| sorted[order.iter().position(|&w| w == v).expect("vertex present")];
        self.map_labels(&map)
    }

    /// Apply a relabelling function to every vertex.
    pub fn map_labels(&self, f: &impl Fn(u32) -> u32) -> Tree {
        Tree {
            label: f(self.label),
            children: self.children.iter().map(|c| c.map_labels(f)).collect(),
        }
    }

    /// Act by a permutation on a tree labelled by `{1, .., n}`: the vertex
    /// labelled `v` becomes labelled `sigma(v)`.
    pub fn act(&self, sigma: &Permutation) -> Tree {
        assert_eq!(
            self.labels(),
            (1..=self.size() as u32).collect::<Vec<_>>(),
            "permutation action needs labels 1..n"
        );
        assert_eq!(sigma.n(), self.size(), "permutation size must match vertex count");
        self.map_labels(&|v| sigma.apply(v as usize) as u32)
    }

    /// The subtree hanging at the vertex with the given label, if present.
    pub fn branch_at(&self, label: u32) -> Option<&Tree> {
        if self.label == label {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.branch_at(label))
    }

    /// Parse the textual form produced by `Display`, e.g. `"5(6(3,7),1,4(2))"`.
    pub fn parse(input: &str) -> Result<Tree, String> {
        let mut chars = input.chars().peekable();
        let t = parse_tree(&mut chars)?;
        if let Some(c) = chars.next() {
            return Err(format!("unexpected trailing character {c:?}"));
        }
        let mut seen = BTreeSet::new();
        for v in t.vertex_order() {
            if !seen.insert(v) {
                return Err(format!("repeated vertex label {v}"));
            }
        }
        Ok(t)
    }
}

fn parse_tree(chars: &mut std::iter::Peekable<std::str::Chars>) -> Result<Tree, String> {
    let mut digits = String::new();
    while let Some(c) = chars.peek() {
        if c.is_ascii_digit() {
            digits.push(*c);
            chars.next();
        } else {
            break;
        }
    }
    if digits.is_empty() {
        return Err(format!("expected a vertex label, found {:?}", chars.peek()));
    }
    let label: u32 = digits.parse().map_err(|e| format!("bad label {digits:?}: {e}"))?;
    let mut children = Vec::new();
    if chars.peek() == Some(&'(') {
        chars.next();
        loop {
            children.push(parse_tree(chars)?);
            match chars.next() {
                Some(',') => continue,
                Some(')') => break,
                other => return Err(format!("expected ',' or ')', found {other:?}")),
            }
        }
    }
    Ok(Tree { label, children })
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if !self.children.is_empty() {
            write!(f, "(")?;
            // Compress runs of identical consecutive branches as `branch^k`.
            let mut i = 0;
            let mut first = true;
            while i < self.children.len() {
                let mut j = i + 1;
                while j < self.children.len() && self.children[j] == self.children[i] {
                    j += 1;
                }
                if !first {
                    write!(f, ",")?;
                }
                first = false;
                if j - i > 1 {
                    write!(f, "{}^{}", self.children[i], j - i)?;
                } else {
                    write!(f, "{}", self.children[i])?;
                }
                i = j;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All planar shapes with `n` vertices, labelled `0` everywhere.  The count
/// is the Catalan number 1, 1, 2, 5, 14, ...
fn shapes(n: usize) -> Vec<Tree> {
    assert!(n >= 1);
    if n == 1 {
        return vec![Tree::leaf(0)];
    }
    let mut out = Vec::new();
    // Split n - 1 vertices into an ordered sequence of child subtree sizes.
    for first in 1..n {
        for head in shapes(first) {
            for rest in shapes_forest(n - 1 - first) {
                let mut children = vec![head.clone()];
                children.extend(rest);
                out.push(Tree { label: 0, children });
            }
        }
    }
    out
}

/// All ordered forests with `n` vertices in total (possibly empty).
fn shapes_forest(n: usize) -> Vec<Vec<Tree>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for head in shapes(first) {
            for rest in shapes_forest(n - first) {
                let mut f = vec![head.clone()];
                f.extend(rest);
                out.push(f);
            }
        }
    }
    out
}

/// All trees on the labels `1, ..., n`: every planar shape with every
/// assignment of the labels.  Counts 1, 2, 12, 120, ...
pub fn enumerate_trees(n: usize) -> Vec<Tree> {
    let mut out = Vec::new();
    for shape in shapes(n) {
        for perm in symgroups::all_permutations(n) {
            let mut next = 0usize;
            out.push(relabel_dfs(&shape, &mut |_| {
                next += 1;
                perm.apply(next) as u32
            }));
        }
    }
    out
}

/// All canonical trees on the labels `1, ..., n`: one labelling per planar
/// shape, so the count is the Catalan number.
pub fn enumerate_canonical(n: usize) -> Vec<Tree> {
    shapes(n)
        .into_iter()
        .map(|shape| {
            let mut next = 0u32;
            relabel_dfs(&shape, &mut |_| {
                next += 1;
                next
            })
        })
        .collect()
}

fn relabel_dfs(t: &Tree, f: &mut impl FnMut(u32) -> u32) -> Tree {
    let label = f(t.label);
    let children = t.children.iter().map(|c| relabel_dfs(c, f)).collect();
    Tree { label, children }
}

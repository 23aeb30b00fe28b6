//! Face and cochain labels of the standard simplices.

use std::fmt;

use exact_chains::ChainLabel;
use itertools::Itertools;

/// A nondegenerate face `a_0 < … < a_r` of Δⁿ, graded by its dimension
/// `r`.  The ambient `n` is part of the label: the same vertex set means
/// different things in different simplices (duals, contractions, and
/// projectors all depend on the ambient).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Face {
    ambient: usize,
    vertices: Vec<usize>,
}

impl Face {
    pub fn new(ambient: usize, vertices: Vec<usize>) -> Self {
        assert!(!vertices.is_empty(), "a face needs at least one vertex");
        assert!(
            vertices.windows(2).all(|w| w[0] < w[1]),
            "face vertices must strictly increase: {vertices:?}"
        );
        assert!(
            *vertices.last().unwrap() <= ambient,
            "vertex out of range for Δ^{ambient}: {vertices:?}"
        );
        Face { ambient, vertices }
    }

    pub fn vertex(ambient: usize, v: usize) -> Self {
        Face::new(ambient, vec![v])
    }

    /// The top face `0 1 … n` of Δⁿ.
    pub fn top(ambient: usize) -> Self {
        Face::new(ambient, (0..=ambient).collect())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Dimension `r` (one less than the vertex count).
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Deletes the vertex at `position`, or `None` for a lone vertex.
    pub fn delete(&self, position: usize) -> Option<Face> {
        if self.vertices.len() == 1 {
            return None;
        }
        let mut v = self.vertices.clone();
        v.remove(position);
        Some(Face {
            ambient: self.ambient,
            vertices: v,
        })
    }

    /// Inserts vertex `v`, returning the new face and the insertion
    /// position; `None` if `v` is already present.
    pub fn insert(&self, v: usize) -> Option<(Face, usize)> {
        match self.vertices.binary_search(&v) {
            Ok(_) => None,
            Err(pos) => {
                let mut vs = self.vertices.clone();
                vs.insert(pos, v);
                Some((
                    Face {
                        ambient: self.ambient,
                        vertices: vs,
                    },
                    pos,
                ))
            }
        }
    }

    /// Parses "013" (or comma-separated "0,1,13") as a face of Δⁿ.
    pub fn parse(s: &str, ambient: usize) -> Result<Face, String> {
        let vertices: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse().map_err(|_| format!("bad vertex {p:?}")))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| format!("bad vertex {c:?}"))
                })
                .collect::<Result<_, _>>()?
        };
        if vertices.is_empty() {
            return Err("empty face".into());
        }
        if !vertices.windows(2).all(|w| w[0] < w[1]) {
            return Err(format!("vertices must strictly increase: {s:?}"));
        }
        if *vertices.last().unwrap() > ambient {
            return Err(format!("vertex out of range for Δ^{ambient}: {s:?}"));
        }
        Ok(Face { ambient, vertices })
    }
}

impl ChainLabel for Face {
    fn degree(&self) -> i64 {
        self.dim() as i64
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vertices.iter().all(|&v| v < 10) {
            for v in &self.vertices {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.vertices.iter().join(","))
        }
    }
}

/// The label `Σ x^∨` of the suspended dual `Σ N^*(Δⁿ)`, graded by
/// `1 − r`.  The unsuspended cochain degree `−r` is available as a view.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Cochain(pub Face);

impl Cochain {
    pub fn face(&self) -> &Face {
        &self.0
    }

    pub fn ambient(&self) -> usize {
        self.0.ambient()
    }

    /// Degree of the plain (unsuspended) dual label `x^∨`.
    pub fn unsuspended_degree(&self) -> i64 {
        -(self.0.dim() as i64)
    }
}

impl ChainLabel for Cochain {
    fn degree(&self) -> i64 {
        1 - self.0.dim() as i64
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^", self.0)
    }
}

/// All faces of Δⁿ in label order (by dimension refinement left to the
/// `Ord` on vertex lists).
pub fn all_faces(n: usize) -> Vec<Face> {
    (0..=n)
        .flat_map(|r| {
            (0..=n)
                .combinations(r + 1)
                .map(move |vertices| Face::new(n, vertices))
        })
        .sorted()
        .collect()
}

/// Membership in the boundary ∂Δⁿ: every face except the top one.
pub fn in_boundary(face: &Face) -> bool {
    face.dim() < face.ambient()
}

/// Membership in the horn Λⁿ_i: the union of all facets except the one
/// opposite vertex `i`.  A face lies in it exactly when it misses some
/// vertex other than `i`.
pub fn in_horn(face: &Face, i: usize) -> bool {
    (0..=face.ambient()).any(|v| v != i && !face.contains(v))
}

//! Chain-level operators on `N_*(Δⁿ)`: boundary, cofaces, codegeneracies,
//! and the deformation retraction onto a chosen vertex.

use exact_chains::{Chain, Field, LinOp, Scalar};

use crate::face::{all_faces, Face};

/// Simplicial boundary `∂(a_0…a_r) = Σ_i (−1)^i (a_0…â_i…a_r)`.
pub fn boundary(face: &Face, field: &Field) -> Chain<Face> {
    let mut out = Chain::zero();
    for i in 0..=face.dim() {
        if let Some(subface) = face.delete(i) {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            out = out.add(&Chain::term(subface, field.integer(sign)));
        }
    }
    out
}

/// The boundary tabulated over all faces of Δⁿ.
pub fn boundary_op(n: usize, field: &Field) -> LinOp<Face, Face> {
    LinOp::from_fn(-1, all_faces(n), |f| boundary(f, field))
}

/// Image of a face under the coface `d^i : Δⁿ → Δ^{n+1}` (the monotone
/// injection missing `i`): vertices below `i` stay, the rest shift up.
pub fn coface_face(i: usize, face: &Face) -> Face {
    let n = face.ambient();
    assert!(i <= n + 1, "coface index {i} out of range for Δ^{n}");
    Face::new(
        n + 1,
        face.vertices()
            .iter()
            .map(|&v| if v < i { v } else { v + 1 })
            .collect(),
    )
}

/// Image of a face under the codegeneracy `s^j : Δⁿ → Δ^{n−1}` (the
/// monotone surjection hitting `j` twice); `None` when two vertices
/// collapse, i.e. the image is degenerate.
pub fn codegeneracy_face(j: usize, face: &Face) -> Option<Face> {
    let n = face.ambient();
    assert!(n >= 1 && j + 1 <= n, "codegeneracy index {j} out of range for Δ^{n}");
    if face.contains(j) && face.contains(j + 1) {
        return None;
    }
    Some(Face::new(
        n - 1,
        face.vertices()
            .iter()
            .map(|&v| if v <= j { v } else { v - 1 })
            .collect(),
    ))
}

/// `d^i` on chains, tabulated from `N_*(Δⁿ)` to `N_*(Δ^{n+1})`.
pub fn coface_op(n: usize, i: usize, field: &Field) -> LinOp<Face, Face> {
    LinOp::from_fn(0, all_faces(n), |f| {
        Chain::term(coface_face(i, f), field.one())
    })
}

/// `s^j` on normalized chains, tabulated from `N_*(Δⁿ)` to `N_*(Δ^{n−1})`
/// (degenerate images are dropped).
pub fn codegeneracy_op(n: usize, j: usize, field: &Field) -> LinOp<Face, Face> {
    LinOp::from_fn(0, all_faces(n), |f| match codegeneracy_face(j, f) {
        Some(g) => Chain::term(g, field.one()),
        None => Chain::zero(),
    })
}

/// The contraction `h_n^k` of `N_*(Δⁿ)` onto the vertex `k`: inserts `k`
/// with sign `(−1)^{insertion position}`, and kills faces already
/// containing `k`.
pub fn retraction_homotopy(n: usize, k: usize, field: &Field) -> LinOp<Face, Face> {
    assert!(k <= n, "vertex {k} out of range for Δ^{n}");
    LinOp::from_fn(1, all_faces(n), |f| match f.insert(k) {
        None => Chain::zero(),
        Some((g, pos)) => Chain::term(g, field.integer(if pos % 2 == 0 { 1 } else { -1 })),
    })
}

/// The associated projector `φ_n^k = i_n^k ∘ p_n`: every vertex maps to
/// the vertex `k`, higher faces to zero.
pub fn retraction_projector(n: usize, k: usize, field: &Field) -> LinOp<Face, Face> {
    assert!(k <= n, "vertex {k} out of range for Δ^{n}");
    LinOp::from_fn(0, all_faces(n), |f| {
        if f.dim() == 0 {
            Chain::term(Face::vertex(n, k), field.one())
        } else {
            Chain::zero()
        }
    })
}

/// The augmentation `p_n`: sums the coefficients of the vertices.
pub fn augmentation(chain: &Chain<Face>, field: &Field) -> Scalar {
    let mut acc = field.zero();
    for (f, c) in chain.iter() {
        if f.dim() == 0 {
            acc = acc.add(c);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_chains::LinOp;

    fn q() -> Field {
        Field::Rational
    }

    fn face(n: usize, s: &str) -> Face {
        Face::parse(s, n).unwrap()
    }

    #[test]
    fn boundary_of_small_faces() {
        let f = q();
        assert_eq!(boundary(&face(1, "01"), &f).to_string(), "-0 + 1");
        assert_eq!(boundary(&face(2, "012"), &f).to_string(), "01 - 02 + 12");
        assert!(boundary(&face(2, "1"), &f).is_zero());
    }

    #[test]
    fn boundary_squares_to_zero() {
        let f = q();
        for n in 1..=4 {
            assert!(boundary_op(n, &f).is_differential(), "∂² ≠ 0 on Δ^{n}");
        }
    }

    #[test]
    fn coface_and_codegeneracy_examples() {
        // d⁰ : Δ⁰ → Δ¹ sends the vertex 0 to the vertex 1.
        assert_eq!(coface_face(0, &face(0, "0")), face(1, "1"));
        // s⁰ collapses the edge 01 of Δ¹.
        assert_eq!(codegeneracy_face(0, &face(1, "01")), None);
        assert_eq!(codegeneracy_face(0, &face(2, "02")), Some(face(1, "01")));
    }

    #[test]
    fn cosimplicial_identities_hold_exhaustively() {
        let f = q();
        // dʲ dⁱ = dⁱ d^{j−1} for i < j, checked on all faces of Δ², Δ³.
        for n in 2..=3usize {
            for j in 0..=(n + 1) {
                for i in 0..j {
                    let lhs = coface_op(n, i, &f).then(&coface_op(n + 1, j, &f));
                    let rhs = coface_op(n, j - 1, &f).then(&coface_op(n + 1, i, &f));
                    assert_eq!(lhs, rhs, "d^{j} d^{i} on Δ^{n}");
                }
            }
        }
        // sʲ sⁱ = sⁱ s^{j+1} for i ≤ j (maps out of Δⁿ with n ≥ 2).
        for n in 2..=4usize {
            for j in 0..(n - 1) {
                for i in 0..=j {
                    let lhs = codegeneracy_op(n, i, &f).then(&codegeneracy_op(n - 1, j, &f));
                    let rhs = codegeneracy_op(n, j + 1, &f).then(&codegeneracy_op(n - 1, i, &f));
                    assert_eq!(lhs, rhs, "s^{j} s^{i} on Δ^{n}");
                }
            }
        }
        // Mixed identities out of Δⁿ: sʲ dⁱ.
        for n in 1..=3usize {
            for j in 0..=(n.saturating_sub(0)) {
                if j + 1 > n + 1 {
                    continue;
                }
                for i in 0..=(n + 1) {
                    let lhs = coface_op(n, i, &f).then(&codegeneracy_op(n + 1, j, &f));
                    let rhs: LinOp<Face, Face> = if i < j {
                        codegeneracy_op(n, j - 1, &f).then(&coface_op(n - 1, i, &f))
                    } else if i == j || i == j + 1 {
                        LinOp::identity_on(all_faces(n), f.one())
                    } else {
                        codegeneracy_op(n, j, &f).then(&coface_op(n - 1, i - 1, &f))
                    };
                    assert_eq!(lhs, rhs, "s^{j} d^{i} on Δ^{n}");
                }
            }
        }
    }

    #[test]
    fn contraction_inserts_with_position_sign() {
        let f = q();
        let h10 = retraction_homotopy(1, 0, &f);
        assert_eq!(h10.apply_label(&face(1, "1")).to_string(), "01");
        let h20 = retraction_homotopy(2, 0, &f);
        assert_eq!(h20.apply_label(&face(2, "12")).to_string(), "012");
        assert!(h20.apply_label(&face(2, "02")).is_zero());
        let h21 = retraction_homotopy(2, 1, &f);
        assert_eq!(h21.apply_label(&face(2, "02")).to_string(), "-012");
    }

    #[test]
    fn retraction_identities_hold_for_all_vertices() {
        let f = q();
        for n in 1..=4usize {
            let d = boundary_op(n, &f);
            let id = LinOp::identity_on(all_faces(n), f.one());
            for k in 0..=n {
                let h = retraction_homotopy(n, k, &f);
                let phi = retraction_projector(n, k, &f);
                // id − φ = d h + h d.
                let lhs = id.sub(&phi);
                let rhs = h.then(&d).add(&d.then(&h));
                assert_eq!(lhs, rhs, "homotopy identity fails on Δ^{n}, vertex {k}");
                // Side conditions: h² = 0, φ² = φ, φ h = h φ = 0, φ a chain map.
                assert!(h.then(&h).is_zero(), "h² ≠ 0 on Δ^{n}, vertex {k}");
                assert_eq!(phi.then(&phi), phi);
                assert!(h.then(&phi).is_zero());
                assert!(phi.then(&h).is_zero());
                assert_eq!(phi.then(&d), d.then(&phi));
            }
        }
    }

    #[test]
    fn augmentation_retracts_onto_the_point() {
        let f = q();
        // p i = id: the augmentation of any single vertex is 1.
        for n in 1..=3usize {
            for k in 0..=n {
                let v = Chain::term(Face::vertex(n, k), f.one());
                assert!(augmentation(&v, &f).is_one());
            }
            // p kills boundaries: augmentation ∘ ∂ = 0.
            let d = boundary_op(n, &f);
            for x in all_faces(n) {
                let b = d.apply_label(&x);
                assert!(augmentation(&b, &f).is_zero());
            }
        }
    }
}

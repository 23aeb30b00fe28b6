//! The suspended dual `Σ N^*(Δⁿ)` and its transposed operators.
//!
//! For a face `x` of dimension `r`, the label `Σ x^∨` has degree `1 − r`.
//! Transposition follows the usual graded rule (a degree-`p` operator `f`
//! transposes with sign `(−1)^{p·|x^∨|}`) and suspension conjugates odd
//! operators with one more sign; rather than carry these factors around
//! separately, each operator below is written in closed form and the
//! defining identities are re-proved by the tests (the differential
//! squares to zero, the contraction satisfies `DH + HD = id − Φ`, and the
//! degree-0 transposes satisfy the pairing relation).

use exact_chains::{Chain, Field, LinOp};

use crate::face::{all_faces, Cochain, Face};

/// All dual labels `Σ x^∨` of Δⁿ.
pub fn all_cochains(n: usize) -> Vec<Cochain> {
    all_faces(n).into_iter().map(Cochain).collect()
}

/// The differential of `Σ N^*(Δⁿ)` (degree −1): the transpose of the
/// simplicial boundary, suspended.  On `Σ x^∨` with `dim x = r`:
/// `D(Σ x^∨) = (−1)^r Σ_{w ∉ x} (−1)^{pos(w)} Σ (x ∪ w)^∨`,
/// where `pos(w)` is the slot `w` occupies in `x ∪ w`.
pub fn sigma_dual_differential(n: usize, field: &Field) -> LinOp<Cochain, Cochain> {
    LinOp::from_fn(-1, all_cochains(n), |c| {
        let x = c.face();
        let r = x.dim() as i64;
        let mut out = Chain::zero();
        for w in 0..=n {
            if let Some((y, pos)) = x.insert(w) {
                let sign = if (r + pos as i64) % 2 == 0 { 1 } else { -1 };
                out = out.add(&Chain::term(Cochain(y), field.integer(sign)));
            }
        }
        out
    })
}

/// The transposed, suspended contraction `H_n^k` (degree +1): deletes the
/// vertex `k` with sign `(−1)^{r+1+pos(k)}`, and kills labels without `k`
/// (or with nothing else left).
pub fn sigma_dual_homotopy(n: usize, k: usize, field: &Field) -> LinOp<Cochain, Cochain> {
    assert!(k <= n, "vertex {k} out of range for Δ^{n}");
    LinOp::from_fn(1, all_cochains(n), |c| {
        let x = c.face();
        let r = x.dim() as i64;
        let Ok(pos) = x.vertices().binary_search(&k) else {
            return Chain::zero();
        };
        match x.delete(pos) {
            None => Chain::zero(),
            Some(y) => {
                let sign = if (r + 1 + pos as i64) % 2 == 0 { 1 } else { -1 };
                Chain::term(Cochain(y), field.integer(sign))
            }
        }
    })
}

/// The transposed projector `Φ_n^k` (degree 0): `Σ k^∨ ↦ Σ_v Σ v^∨` over
/// all vertices `v`, everything else to zero.
pub fn sigma_dual_projector(n: usize, k: usize, field: &Field) -> LinOp<Cochain, Cochain> {
    assert!(k <= n, "vertex {k} out of range for Δ^{n}");
    LinOp::from_fn(0, all_cochains(n), |c| {
        let x = c.face();
        if x.dim() == 0 && x.contains(k) {
            Chain::from_terms(
                (0..=n).map(|v| (Cochain(Face::vertex(n, v)), field.one())),
            )
        } else {
            Chain::zero()
        }
    })
}

/// Transpose of the coface `d^i`: restricts a dual label of Δⁿ to
/// Δ^{n−1}, i.e. `Σ x^∨ ↦ Σ y^∨` when `x = d^i(y)` and `0` when `i ∈ x`.
pub fn sigma_dual_coface(n: usize, i: usize, field: &Field) -> LinOp<Cochain, Cochain> {
    assert!(n >= 1 && i <= n, "coface index {i} out of range into Δ^{n}");
    LinOp::from_fn(0, all_cochains(n), |c| {
        let x = c.face();
        if x.contains(i) {
            return Chain::zero();
        }
        let y = Face::new(
            n - 1,
            x.vertices()
                .iter()
                .map(|&v| if v < i { v } else { v - 1 })
                .collect(),
        );
        Chain::term(Cochain(y), field.one())
    })
}

/// Transpose of the codegeneracy `s^j`: sends a dual label of Δⁿ to the
/// sum of its nondegenerate lifts in Δ^{n+1} (two lifts when `j ∈ x`,
/// else one).
pub fn sigma_dual_codegeneracy(n: usize, j: usize, field: &Field) -> LinOp<Cochain, Cochain> {
    assert!(j + 1 <= n + 1, "codegeneracy index {j} out of range from Δ^{n}");
    LinOp::from_fn(0, all_cochains(n), |c| {
        let x = c.face();
        let lift = |bump_j: bool| -> Face {
            Face::new(
                n + 1,
                x.vertices()
                    .iter()
                    .map(|&v| {
                        if v < j {
                            v
                        } else if v == j {
                            if bump_j {
                                j + 1
                            } else {
                                j
                            }
                        } else {
                            v + 1
                        }
                    })
                    .collect(),
            )
        };
        let mut out = Chain::term(Cochain(lift(false)), field.one());
        if x.contains(j) {
            out = out.add(&Chain::term(Cochain(lift(true)), field.one()));
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::{codegeneracy_op, coface_op};
    use exact_chains::{ChainLabel, LinOp, Scalar};

    fn q() -> Field {
        Field::Rational
    }

    fn sc(n: usize, s: &str) -> Cochain {
        Cochain(Face::parse(s, n).unwrap())
    }

    #[test]
    fn dual_differential_on_the_interval() {
        let f = q();
        let d = sigma_dual_differential(1, &f);
        assert_eq!(d.apply_label(&sc(1, "0")).to_string(), "-01^");
        assert_eq!(d.apply_label(&sc(1, "1")).to_string(), "01^");
        assert!(d.apply_label(&sc(1, "01")).is_zero());
        assert_eq!(sc(1, "0").degree(), 1);
        assert_eq!(sc(1, "01").degree(), 0);
    }

    #[test]
    fn dual_differential_squares_to_zero() {
        let f = q();
        for n in 1..=4 {
            assert!(
                sigma_dual_differential(n, &f).is_differential(),
                "D² ≠ 0 on ΣN^*(Δ^{n})"
            );
        }
    }

    #[test]
    fn dual_retraction_identities_hold_for_all_vertices() {
        let f = q();
        for n in 1..=4usize {
            let d = sigma_dual_differential(n, &f);
            let id = LinOp::identity_on(all_cochains(n), f.one());
            for k in 0..=n {
                let h = sigma_dual_homotopy(n, k, &f);
                let phi = sigma_dual_projector(n, k, &f);
                let lhs = id.sub(&phi);
                let rhs = h.then(&d).add(&d.then(&h));
                assert_eq!(lhs, rhs, "dual homotopy identity fails on Δ^{n}, vertex {k}");
                assert!(h.then(&h).is_zero());
                assert_eq!(phi.then(&phi), phi);
                assert!(h.then(&phi).is_zero());
                assert!(phi.then(&h).is_zero());
                assert_eq!(phi.then(&d), d.then(&phi));
            }
        }
    }

    /// `⟨T^t(Σx^∨), y⟩ = ⟨Σx^∨, T(y)⟩` for a degree-0 chain-level `T`.
    fn pairing_check(
        n_from: usize,
        n_to: usize,
        chain_level: &LinOp<Face, Face>,
        transposed: &LinOp<Cochain, Cochain>,
    ) {
        let one = Field::Rational.one();
        for x in all_faces(n_to) {
            let tx = transposed.apply_label(&Cochain(x.clone()));
            for y in all_faces(n_from) {
                let lhs = tx
                    .coefficient(&Cochain(y.clone()))
                    .cloned()
                    .unwrap_or_else(|| Field::Rational.zero());
                let rhs = chain_level
                    .apply_label(&y)
                    .coefficient(&x)
                    .cloned()
                    .unwrap_or_else(|| Field::Rational.zero());
                assert_eq!(lhs, rhs, "pairing mismatch at x={x}, y={y}");
                let _ = &one;
            }
        }
    }

    #[test]
    fn transposes_satisfy_the_pairing_relation() {
        let f = q();
        for n in 1..=3usize {
            for i in 0..=n {
                pairing_check(
                    n - 1,
                    n,
                    &coface_op(n - 1, i, &f),
                    &sigma_dual_coface(n, i, &f),
                );
            }
        }
        for n in 0..=2usize {
            for j in 0..=n {
                pairing_check(
                    n + 1,
                    n,
                    &codegeneracy_op(n + 1, j, &f),
                    &sigma_dual_codegeneracy(n, j, &f),
                );
            }
        }
    }

    #[test]
    fn transposed_cofaces_and_codegeneracies_are_chain_maps() {
        let f = q();
        for n in 1..=4usize {
            let d_n = sigma_dual_differential(n, &f);
            let d_prev = sigma_dual_differential(n - 1, &f);
            for i in 0..=n {
                let t = sigma_dual_coface(n, i, &f);
                assert_eq!(
                    t.then(&d_prev),
                    d_n.then(&t),
                    "coface transpose fails to commute with D (n={n}, i={i})"
                );
            }
        }
        for n in 0..=3usize {
            let d_n = sigma_dual_differential(n, &f);
            let d_next = sigma_dual_differential(n + 1, &f);
            for j in 0..=n {
                let t = sigma_dual_codegeneracy(n, j, &f);
                assert_eq!(
                    t.then(&d_next),
                    d_n.then(&t),
                    "codegeneracy transpose fails to commute with D (n={n}, j={j})"
                );
            }
        }
    }

    #[test]
    fn transported_simplicial_identities() {
        let f = q();
        // The dual cofaces compose oppositely: for i < j,
        // ∂_i ∘ ∂_j = ∂_{j−1} ∘ ∂_i as maps ΣN^*(Δⁿ) → ΣN^*(Δ^{n−2}).
        for n in 2..=4usize {
            for j in 0..=n {
                for i in 0..j {
                    let lhs = sigma_dual_coface(n, j, &f).then(&sigma_dual_coface(n - 1, i, &f));
                    let rhs =
                        sigma_dual_coface(n, i, &f).then(&sigma_dual_coface(n - 1, j - 1, &f));
                    assert_eq!(lhs, rhs, "∂_{i} ∂_{j} on ΣN^*(Δ^{n})");
                }
            }
        }
        // Degeneracy then face: s then ∂ with matching index is the
        // identity on the dual side too.
        for n in 0..=2usize {
            for j in 0..=n {
                let s = sigma_dual_codegeneracy(n, j, &f);
                for i in [j, j + 1] {
                    let comp = s.then(&sigma_dual_coface(n + 1, i, &f));
                    let id = LinOp::identity_on(all_cochains(n), f.one());
                    assert_eq!(comp, id, "∂_{i} s_{j} ≠ id on ΣN^*(Δ^{n})");
                }
            }
        }
    }

    #[test]
    fn dual_labels_over_f2_lose_all_signs() {
        let f2 = Field::prime(2).unwrap();
        let d = sigma_dual_differential(2, &f2);
        let img = d.apply_label(&sc(2, "02"));
        assert_eq!(img.to_string(), "012^");
        assert!(img
            .iter()
            .all(|(_, c): (&Cochain, &Scalar)| c.is_one()));
    }
}

//! Word-level contractions built from the simplex retraction: extending
//! `(h_n^k, φ_n^k)` over tensor powers of `N_*(Δⁿ)` (and its suspended
//! dual) must again satisfy the homotopy identity and square to zero.
//! This is the exact mechanism later used to contract decorated trees.

use exact_chains::{
    contraction_on_word, derivation_on_word, Chain, ChainLabel, Field, LinOp, Tens,
};
use simplex_chains::{
    all_cochains, all_faces, boundary_op, retraction_homotopy, retraction_projector,
    sigma_dual_differential, sigma_dual_homotopy, sigma_dual_projector, Cochain, Face,
};

fn check_word_contraction<L: ChainLabel + std::hash::Hash>(
    labels: &[L],
    d: &LinOp<L, L>,
    h: &LinOp<L, L>,
    phi: &LinOp<L, L>,
    max_len: usize,
) {
    let field = Field::Rational;
    let d_word = |w: &Tens<L>| derivation_on_word(w, -1, |l| d.apply_label(l));
    let h_word =
        |w: &Tens<L>| contraction_on_word(w, 1, |l| h.apply_label(l), |l| phi.apply_label(l));
    let phi_word = |w: &Tens<L>| -> Chain<Tens<L>> {
        // φ^{⊗k}: degree 0, no signs, straight product expansion.
        let mut acc = vec![(Vec::new(), field.one())];
        for x in w.factors() {
            let img = phi.apply_label(x);
            let mut next = Vec::new();
            for (prefix, c) in &acc {
                for (m, cm) in img.iter() {
                    let mut p = prefix.clone();
                    p.push(m.clone());
                    next.push((p, c.mul(cm)));
                }
            }
            acc = next;
        }
        Chain::from_terms(acc.into_iter().map(|(v, c)| (Tens::new(v), c)))
    };

    // All words of length 1..=max_len over the label list.
    let mut words: Vec<Tens<L>> = labels.iter().map(|l| Tens::new(vec![l.clone()])).collect();
    let mut frontier = words.clone();
    for _ in 1..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for l in labels {
                let mut v = w.factors().to_vec();
                v.push(l.clone());
                next.push(Tens::new(v));
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }

    for w in &words {
        let hw = h_word(w);
        let dhw = hw.apply_linear(|t| d_word(t));
        let hdw = d_word(w).apply_linear(|t| h_word(t));
        let lhs = dhw.add(&hdw);
        let rhs = Chain::term(w.clone(), field.one()).sub(&phi_word(w));
        assert_eq!(lhs, rhs, "homotopy identity fails on word {w}");
        let hhw = hw.apply_linear(|t| h_word(t));
        assert!(hhw.is_zero(), "h_word² ≠ 0 on {w}");
    }
}

#[test]
fn chain_side_word_contraction_for_the_triangle() {
    let field = Field::Rational;
    for k in 0..=2 {
        check_word_contraction::<Face>(
            &all_faces(2),
            &boundary_op(2, &field),
            &retraction_homotopy(2, k, &field),
            &retraction_projector(2, k, &field),
            2,
        );
    }
}

#[test]
fn chain_side_word_contraction_longer_words_on_the_interval() {
    let field = Field::Rational;
    check_word_contraction::<Face>(
        &all_faces(1),
        &boundary_op(1, &field),
        &retraction_homotopy(1, 0, &field),
        &retraction_projector(1, 0, &field),
        4,
    );
}

#[test]
fn dual_side_word_contraction() {
    let field = Field::Rational;
    for n in 1..=2usize {
        for k in 0..=n {
            check_word_contraction::<Cochain>(
                &all_cochains(n),
                &sigma_dual_differential(n, &field),
                &sigma_dual_homotopy(n, k, &field),
                &sigma_dual_projector(n, k, &field),
                2,
            );
        }
    }
}

#[test]
fn desuspended_chain_side_word_contraction() {
    // Conjugating through Σ^{-1} flips both the boundary and the
    // contraction; the homotopy identity must survive.  This is the
    // grading the free brace algebra generators live in.
    use std::fmt;

    #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
    struct Des(Face);

    impl fmt::Display for Des {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "s⁻¹{}", self.0)
        }
    }

    impl ChainLabel for Des {
        fn degree(&self) -> i64 {
            self.0.degree() - 1
        }
    }

    let field = Field::Rational;
    let n = 2usize;
    let labels: Vec<Des> = all_faces(n).into_iter().map(Des).collect();
    let wrap = |op: &LinOp<Face, Face>, degree: i64, flip: bool| -> LinOp<Des, Des> {
        LinOp::from_fn(degree, labels.clone(), |l: &Des| {
            let img = op.apply_label(&l.0).map_labels(|f| Des(f.clone()));
            if flip {
                img.scale_int(-1)
            } else {
                img
            }
        })
    };
    for k in 0..=n {
        let d = wrap(&boundary_op(n, &field), -1, true);
        let h = wrap(&retraction_homotopy(n, k, &field), 1, true);
        let phi = wrap(&retraction_projector(n, k, &field), 0, false);
        check_word_contraction::<Des>(&labels, &d, &h, &phi, 2);
    }
}

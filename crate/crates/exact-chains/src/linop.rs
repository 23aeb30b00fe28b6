//! Table-backed linear operators between based graded modules, plus the
//! operator-level sign bookkeeping: operators acting on tensor factors,
//! the hom-complex differential, and the regrouped tensor of operators.
//!
//! An operator stores one row per domain label; labels without a row map
//! to zero.  This matches the finite situations downstream (simplicial
//! chain complexes, truncated operads), where tables are complete on the
//! basis in play.

use std::collections::BTreeMap;
use std::fmt;

use crate::chain::{Chain, ChainLabel};
use crate::koszul::interleave_sign;
use crate::scalar::Scalar;
use crate::tensor::{Pair, Tens};

/// A homogeneous linear map of graded degree `degree`, stored row by row.
/// Absent rows are zero.
#[derive(Clone, PartialEq, Eq)]
pub struct LinOp<A: ChainLabel, B: ChainLabel> {
    degree: i64,
    rows: BTreeMap<A, Chain<B>>,
}

impl<A: ChainLabel, B: ChainLabel> LinOp<A, B> {
    pub fn new(degree: i64) -> Self {
        LinOp {
            degree,
            rows: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Sets the image of one basis label.  The image must be homogeneous
    /// of degree `label.degree() + self.degree()`; a zero image deletes
    /// the row, keeping table equality canonical.
    pub fn set(&mut self, label: A, image: Chain<B>) {
        if image.is_zero() {
            self.rows.remove(&label);
            return;
        }
        let expect = label.degree() + self.degree;
        assert_eq!(
            image.degree(),
            Some(expect),
            "operator row for {label} must be homogeneous of degree {expect}"
        );
        self.rows.insert(label, image);
    }

    /// Builds a table by evaluating `f` on each listed label.
    pub fn from_fn(
        degree: i64,
        labels: impl IntoIterator<Item = A>,
        f: impl Fn(&A) -> Chain<B>,
    ) -> Self {
        let mut op = LinOp::new(degree);
        for l in labels {
            let image = f(&l);
            op.set(l, image);
        }
        op
    }

    pub fn apply_label(&self, label: &A) -> Chain<B> {
        self.rows.get(label).cloned().unwrap_or_else(Chain::zero)
    }

    pub fn apply(&self, chain: &Chain<A>) -> Chain<B> {
        chain.apply_linear(|l| self.apply_label(l))
    }

    /// Domain labels with a stored (nonzero) row.
    pub fn rows(&self) -> impl Iterator<Item = (&A, &Chain<B>)> {
        self.rows.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Composite "`self`, then `g`", i.e. `g ∘ self`.
    pub fn then<C: ChainLabel>(&self, g: &LinOp<B, C>) -> LinOp<A, C> {
        let mut out = LinOp::new(self.degree + g.degree);
        for (a, img) in &self.rows {
            out.set(a.clone(), g.apply(img));
        }
        out
    }

    pub fn add(&self, other: &LinOp<A, B>) -> LinOp<A, B> {
        assert_eq!(
            self.degree, other.degree,
            "cannot add operators of different degrees"
        );
        let mut out = self.clone();
        for (a, img) in &other.rows {
            let sum = out.apply_label(a).add(img);
            out.set(a.clone(), sum);
        }
        out
    }

    pub fn neg(&self) -> LinOp<A, B> {
        self.scale_int(-1)
    }

    pub fn sub(&self, other: &LinOp<A, B>) -> LinOp<A, B> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> LinOp<A, B> {
        let mut out = LinOp::new(self.degree);
        for (a, img) in &self.rows {
            out.set(a.clone(), img.scale(s));
        }
        out
    }

    pub fn scale_int(&self, n: i64) -> LinOp<A, B> {
        let mut out = LinOp::new(self.degree);
        for (a, img) in &self.rows {
            out.set(a.clone(), img.scale_int(n));
        }
        out
    }
}

impl<A: ChainLabel> LinOp<A, A> {
    /// The identity on an explicit basis list.
    pub fn identity_on(labels: impl IntoIterator<Item = A>, one: Scalar) -> Self {
        let mut op = LinOp::new(0);
        for l in labels {
            let image = Chain::term(l.clone(), one.clone());
            op.set(l, image);
        }
        op
    }

    /// True when the operator has degree `-1` and squares to zero on every
    /// stored row (labels outside the table are zero by convention, so the
    /// table must cover every label reachable from its own images).
    pub fn is_differential(&self) -> bool {
        self.degree == -1 && self.rows.values().all(|img| self.apply(img).is_zero())
    }
}

impl<A: ChainLabel, B: ChainLabel> fmt::Debug for LinOp<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "operator of degree {}:", self.degree)?;
        for (a, img) in &self.rows {
            writeln!(f, "  {a} ↦ {img}")?;
        }
        Ok(())
    }
}

/// Hom-complex differential `∂(f) = d_cod ∘ f − (−1)^{|f|} f ∘ d_dom`,
/// tabulated over every label either table mentions in the domain.
pub fn hom_differential<A: ChainLabel, B: ChainLabel>(
    f: &LinOp<A, B>,
    d_dom: &LinOp<A, A>,
    d_cod: &LinOp<B, B>,
) -> LinOp<A, B> {
    let mut labels: Vec<A> = f.rows.keys().cloned().collect();
    for a in d_dom.rows.keys() {
        if !f.rows.contains_key(a) {
            labels.push(a.clone());
        }
    }
    let sign = if f.degree % 2 == 0 { 1 } else { -1 };
    LinOp::from_fn(f.degree - 1, labels, |a| {
        d_cod
            .apply(&f.apply_label(a))
            .sub(&f.apply(&d_dom.apply_label(a)).scale_int(sign))
    })
}

/// Applies an operator of degree `op_degree` to the factor at `index`
/// (0-based) of a tensor word, with the usual passage sign
/// `(−1)^{op_degree·(|x_1|+…+|x_{index}|)}` for moving the operator past
/// the untouched leading factors.
pub fn apply_to_factor<L: ChainLabel>(
    word: &Tens<L>,
    index: usize,
    op_degree: i64,
    op: impl Fn(&L) -> Chain<L>,
) -> Chain<Tens<L>> {
    let prefix: i64 = word.factors()[..index].iter().map(|l| l.degree()).sum();
    let sign = if (op_degree * prefix) % 2 == 0 { 1 } else { -1 };
    let image = op(&word.factors()[index]);
    Chain::from_terms(image.into_terms().map(|(m, c)| {
        let mut factors = word.factors().to_vec();
        factors[index] = m;
        (Tens::new(factors), c.mul_int(sign))
    }))
}

/// Extends a degree-`op_degree` operator over tensor words as a
/// derivation: the signed sum of `apply_to_factor` over all positions.
pub fn derivation_on_word<L: ChainLabel>(
    word: &Tens<L>,
    op_degree: i64,
    op: impl Fn(&L) -> Chain<L>,
) -> Chain<Tens<L>> {
    let mut out = Chain::zero();
    for i in 0..word.len() {
        out = out.add(&apply_to_factor(word, i, op_degree, &op));
    }
    out
}

/// Extends a contraction `(h, φ)` of a complex over tensor words:
/// `h_word = Σ_i φ^{⊗(i−1)} ⊗ h ⊗ id^{⊗(k−i)}`, with the Koszul sign for
/// `h` (of degree `h_degree`) crossing the leading factors.  When
/// `dh + hd = id − φ` with the side conditions `h² = 0`, `hφ = φh = 0`,
/// the extension satisfies `d h_word + h_word d = id − φ^{⊗k}` and
/// `h_word² = 0`.
pub fn contraction_on_word<L: ChainLabel>(
    word: &Tens<L>,
    h_degree: i64,
    h: impl Fn(&L) -> Chain<L>,
    phi: impl Fn(&L) -> Chain<L>,
) -> Chain<Tens<L>> {
    let mut out = Chain::zero();
    for i in 0..word.len() {
        let prefix: i64 = word.factors()[..i].iter().map(|l| l.degree()).sum();
        let sign = if (h_degree * prefix) % 2 == 0 { 1 } else { -1 };
        // Expand φ(x_1) ⊗ … ⊗ φ(x_{i−1}) ⊗ h(x_i) ⊗ x_{i+1} ⊗ …; identity
        // factors contribute labels only, so the coefficient is the product
        // over the φ/h images (always nonempty: h acts once).
        let mut partial: Vec<(Vec<L>, Option<Scalar>)> = vec![(Vec::new(), None)];
        for (j, x) in word.factors().iter().enumerate() {
            let mut next = Vec::new();
            if j > i {
                for (prefix_word, c) in &partial {
                    let mut w = prefix_word.clone();
                    w.push(x.clone());
                    next.push((w, c.clone()));
                }
            } else {
                let image = if j < i { phi(x) } else { h(x) };
                for (prefix_word, c) in &partial {
                    for (m, d) in image.iter() {
                        let mut w = prefix_word.clone();
                        w.push(m.clone());
                        let coeff = match c {
                            None => d.clone(),
                            Some(c) => c.mul(d),
                        };
                        next.push((w, Some(coeff)));
                    }
                }
            }
            partial = next;
        }
        out = out.add(&Chain::from_terms(partial.into_iter().map(|(w, c)| {
            let c = c.expect("the h factor always contributes a coefficient");
            (Tens::new(w), c.mul_int(sign))
        })));
    }
    out
}

/// Applies the regrouped tensor `f ⊗̃ g` of two word operators to an
/// interleaved word `(a_1⊗b_1)⊗…⊗(a_n⊗b_n)`.
///
/// The word is split into `a_1⊗…⊗a_n` and `b_1⊗…⊗b_n` (Koszul sign of
/// de-interleaving), `f ⊗ g` acts with the crossing sign
/// `(−1)^{|g|·|a-word|}`, and each output pair of equal-length words is
/// interleaved back (Koszul sign again).
pub fn apply_regrouped<A: ChainLabel, B: ChainLabel>(
    f: impl Fn(&Tens<A>) -> Chain<Tens<A>>,
    g: impl Fn(&Tens<B>) -> Chain<Tens<B>>,
    g_degree: i64,
    word: &Tens<Pair<A, B>>,
) -> Chain<Tens<Pair<A, B>>> {
    let a_word = Tens::new(word.factors().iter().map(|p| p.0.clone()).collect::<Vec<_>>());
    let b_word = Tens::new(word.factors().iter().map(|p| p.1.clone()).collect::<Vec<_>>());
    // De-interleaving crosses the same pairs as interleaving, so both
    // directions carry the same sign.
    let unzip = interleave_sign(&a_word.degrees(), &b_word.degrees());
    let across = if (g_degree * a_word.degree()) % 2 == 0 {
        1
    } else {
        -1
    };
    let fa = f(&a_word);
    let gb = g(&b_word);
    let mut out = Chain::zero();
    for (x, cx) in fa.iter() {
        for (y, cy) in gb.iter() {
            assert_eq!(
                x.len(),
                y.len(),
                "regrouped tensor needs equal output lengths, got {x} vs {y}"
            );
            let zip = interleave_sign(&x.degrees(), &y.degrees());
            let pairs: Vec<Pair<A, B>> = x
                .factors()
                .iter()
                .zip(y.factors())
                .map(|(xa, yb)| Pair(xa.clone(), yb.clone()))
                .collect();
            out = out.add(&Chain::term(
                Tens::new(pairs),
                cx.mul(cy).mul_int((unzip * across * zip) as i64),
            ));
        }
    }
    out
}

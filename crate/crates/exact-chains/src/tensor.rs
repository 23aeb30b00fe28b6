//! Tensor-word labels: basis elements of `M^{⊗n}` as lists of factors.

use std::fmt;

use symgroups::Permutation;

use crate::chain::{Chain, ChainLabel};
use crate::koszul::koszul_sign;
use crate::scalar::Scalar;

/// A basis tensor `x_1 ⊗ … ⊗ x_n` with all factors drawn from one label
/// type.  Mixed tensors are modelled downstream by an enum label.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Tens<L>(pub Vec<L>);

impl<L: ChainLabel> Tens<L> {
    pub fn new(factors: Vec<L>) -> Self {
        Tens(factors)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[L] {
        &self.0
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.0.iter().map(|l| l.degree()).collect()
    }

    /// Acts by `sigma` on the left (factor `i` moves to slot `sigma(i)`),
    /// returning the permuted word and its Koszul sign.
    pub fn permute_with_sign(&self, sigma: &Permutation) -> (Tens<L>, i32) {
        let sign = koszul_sign(&self.degrees(), sigma);
        (Tens(sigma.act_on(&self.0)), sign)
    }

    /// Concatenation `(x ⊗ y)`: no sign, the factors just juxtapose.
    pub fn concat(&self, other: &Tens<L>) -> Tens<L> {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Tens(v)
    }
}

impl<L: ChainLabel> ChainLabel for Tens<L> {
    fn degree(&self) -> i64 {
        self.0.iter().map(|l| l.degree()).sum()
    }
}

impl<L: fmt::Display> fmt::Display for Tens<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "⊗")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// One factor of a two-sorted tensor `A ⊗ B`; words in `(A ⊗ B)^{⊗n}`
/// are `Tens<Pair<A, B>>`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Pair<A, B>(pub A, pub B);

impl<A: ChainLabel, B: ChainLabel> ChainLabel for Pair<A, B> {
    fn degree(&self) -> i64 {
        self.0.degree() + self.1.degree()
    }
}

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}⊗{})", self.0, self.1)
    }
}

/// Tensor product of chains: bilinear extension of concatenation.  The
/// factors are juxtaposed left-to-right, so no Koszul sign arises here;
/// signs appear only when operators or factors move past each other.
pub fn tensor_product<L: ChainLabel>(a: &Chain<Tens<L>>, b: &Chain<Tens<L>>) -> Chain<Tens<L>> {
    let mut terms: Vec<(Tens<L>, Scalar)> = Vec::new();
    for (la, ca) in a.iter() {
        for (lb, cb) in b.iter() {
            terms.push((la.concat(lb), ca.mul(cb)));
        }
    }
    Chain::from_terms(terms)
}

/// Wraps each basis label of a chain into a length-one tensor word.
pub fn into_words<L: ChainLabel>(c: &Chain<L>) -> Chain<Tens<L>> {
    c.map_labels(|l| Tens(vec![l.clone()]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
    struct G(&'static str, i64);

    impl fmt::Display for G {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{}", self.0)
        }
    }

    impl ChainLabel for G {
        fn degree(&self) -> i64 {
            self.1
        }
    }

    #[test]
    fn degree_adds_and_display_joins() {
        let t = Tens(vec![G("a", 1), G("b", 2)]);
        assert_eq!(t.degree(), 3);
        assert_eq!(t.to_string(), "a⊗b");
    }

    #[test]
    fn transposing_odd_factors_flips_the_sign() {
        let t = Tens(vec![G("a", 1), G("b", 1)]);
        let swap = Permutation::from_values(vec![2, 1]);
        let (u, s) = t.permute_with_sign(&swap);
        assert_eq!(u, Tens(vec![G("b", 1), G("a", 1)]));
        assert_eq!(s, -1);
    }

    #[test]
    fn product_distributes_over_sums() {
        let f = Field::Rational;
        let x = Chain::from_terms([
            (Tens(vec![G("a", 0)]), f.one()),
            (Tens(vec![G("b", 0)]), f.integer(2)),
        ]);
        let y = Chain::term(Tens(vec![G("c", 0)]), f.integer(3));
        let xy = tensor_product(&x, &y);
        assert_eq!(
            xy.coefficient(&Tens(vec![G("a", 0), G("c", 0)])),
            Some(&f.integer(3))
        );
        assert_eq!(
            xy.coefficient(&Tens(vec![G("b", 0), G("c", 0)])),
            Some(&f.integer(6))
        );
    }
}

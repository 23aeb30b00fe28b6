//! Finite symmetric groups in the sequence-of-values convention.
//!
//! A permutation `σ ∈ Σ_n` is stored as the sequence of its values
//! `(σ(1), …, σ(n))` on `1, …, n`.  Composition is composition of
//! functions, `(σ·τ)(i) = σ(τ(i))`.  Acting on a sequence of objects on
//! the left, `σ` places the i-th object at position `σ(i)`, so
//! `σ·(x_1, …, x_n)` has `x_{σ^{-1}(j)}` in slot `j`.
//!
//! Besides the group structure, this crate implements the block calculus
//! used by the operadic layers:
//!
//! * direct sums `τ_1 ⊕ … ⊕ τ_n` (block-diagonal permutations);
//! * block permutations `σ_*(r_1, …, r_n)` that move consecutive blocks
//!   of sizes `r_i` as units;
//! * the associative composite `σ(τ_1, …, τ_n) = (τ_1 ⊕ … ⊕ τ_n) ·
//!   σ_*(r_1, …, r_n)`, which is the symmetric-groups operad;
//! * `(r_1, …, r_n)`-shuffles and pointed shuffles;
//! * the unique factorizations `σ = ω · (τ_1 ⊕ … ⊕ τ_n)` with `ω` a
//!   shuffle, and `σ = ω · σ'(τ_1, …, τ_n)` with `ω` a pointed shuffle.
//!
//! The block lemma tying the two sides together,
//! `(τ_1 ⊕ … ⊕ τ_n) · σ_*(r_1, …, r_n) = σ_*(r_1, …, r_n) ·
//! (τ_{σ(1)} ⊕ … ⊕ τ_{σ(n)})`, is exercised in the integration tests; it
//! pins the one global convention every caller relies on.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

/// A permutation of `{1, …, n}` in sequence-of-values form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its value sequence `(σ(1), …, σ(n))`.
    ///
    /// Panics if the sequence is not a bijection of `{1, …, n}`.
    pub fn from_values(values: Vec<usize>) -> Self {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            assert!(v >= 1 && v <= n, "value {v} out of range 1..={n}");
            assert!(!seen[v], "value {v} repeated");
            seen[v] = true;
        }
        Permutation { values }
    }

    /// The identity of `Σ_n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    /// Size `n` of the underlying set.
    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// Value `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// The value sequence `(σ(1), …, σ(n))`.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Function composition `(self · other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different sizes");
        Permutation {
            values: (1..=self.n()).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut values = vec![0; self.n()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v - 1] = i + 1;
        }
        Permutation { values }
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i32 {
        let mut inversions = 0usize;
        for i in 0..self.n() {
            for j in (i + 1)..self.n() {
                if self.values[i] > self.values[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Acts on a sequence on the left: the i-th entry moves to slot `σ(i)`,
    /// so the result has `x_{σ^{-1}(j)}` in slot `j`.
    pub fn act_on<T: Clone>(&self, xs: &[T]) -> Vec<T> {
        assert_eq!(self.n(), xs.len());
        let inv = self.inverse();
        (1..=self.n()).map(|j| xs[inv.apply(j) - 1].clone()).collect()
    }

    /// Block-diagonal direct sum `τ_1 ⊕ … ⊕ τ_k`.
    pub fn direct_sum(parts: &[&Permutation]) -> Permutation {
        let mut values = Vec::new();
        let mut offset = 0usize;
        for p in parts {
            values.extend(p.values.iter().map(|v| v + offset));
            offset += p.n();
        }
        Permutation { values }
    }

    /// The block permutation `σ_*(r_1, …, r_n)` for `σ = self ∈ Σ_n`.
    ///
    /// Its value sequence is the concatenation of the consecutive value
    /// blocks `B_{σ(1)}, …, B_{σ(n)}`, where `B_j` is the increasing run
    /// of size `r_j` starting at `r_1 + … + r_{j-1} + 1`.  For example
    /// `(21)_*(2, 1) = (312)`.
    pub fn block_permutation(&self, sizes: &[usize]) -> Permutation {
        assert_eq!(self.n(), sizes.len(), "one size per block");
        let mut starts = vec![1usize; sizes.len()];
        for j in 1..sizes.len() {
            starts[j] = starts[j - 1] + sizes[j - 1];
        }
        let mut values = Vec::with_capacity(sizes.iter().sum());
        for i in 1..=self.n() {
            let j = self.apply(i);
            values.extend(starts[j - 1]..starts[j - 1] + sizes[j - 1]);
        }
        Permutation { values }
    }

    /// Operadic composite `σ(τ_1, …, τ_n) = (τ_1 ⊕ … ⊕ τ_n) · σ_*(r_1, …, r_n)`
    /// with `r_i` the size of `τ_i`.
    pub fn composite(&self, inner: &[&Permutation]) -> Permutation {
        assert_eq!(self.n(), inner.len(), "one inner permutation per letter");
        let sizes: Vec<usize> = inner.iter().map(|t| t.n()).collect();
        Permutation::direct_sum(inner).compose(&self.block_permutation(&sizes))
    }

    /// Partial composite `σ ∘_i τ = σ(id, …, τ, …, id)` with `τ` in slot `i`
    /// (1-based).
    pub fn partial_composite(&self, i: usize, tau: &Permutation) -> Permutation {
        let ids: Vec<Permutation> = (1..=self.n())
            .map(|j| {
                if j == i {
                    tau.clone()
                } else {
                    Permutation::identity(1)
                }
            })
            .collect();
        self.composite(&ids.iter().collect::<Vec<_>>())
    }

    /// Whether `self` is an `(r_1, …, r_n)`-shuffle: increasing on each
    /// consecutive position block of size `r_i`.
    pub fn is_shuffle(&self, sizes: &[usize]) -> bool {
        assert_eq!(self.n(), sizes.iter().sum::<usize>());
        let mut pos = 0usize;
        for &r in sizes {
            for t in 1..r {
                if self.values[pos + t - 1] >= self.values[pos + t] {
                    return false;
                }
            }
            pos += r;
        }
        true
    }

    /// Whether `self` is a pointed `(r_1, …, r_n)`-shuffle: a shuffle whose
    /// values at the block-leading positions `1, r_1+1, r_1+r_2+1, …` are
    /// increasing.
    pub fn is_pointed_shuffle(&self, sizes: &[usize]) -> bool {
        if !self.is_shuffle(sizes) {
            return false;
        }
        let mut pos = 0usize;
        let mut last_leader = 0usize;
        for &r in sizes {
            if r > 0 {
                let leader = self.values[pos];
                if leader <= last_leader {
                    return false;
                }
                last_leader = leader;
            }
            pos += r;
        }
        true
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    /// Renders `(312)` for sizes up to 9 and space-separated `(3 1 2 10)`
    /// beyond that.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        if self.n() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
        } else {
            write!(f, "{}", self.values.iter().join(" "))?;
        }
        write!(f, ")")
    }
}

/// All permutations of `Σ_n` in lexicographic order of value sequences.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    (1..=n)
        .permutations(n)
        .map(Permutation::from_values)
        .collect()
}

/// All `(r_1, …, r_n)`-shuffles, ordered lexicographically.
///
/// A shuffle is determined by the partition of `{1, …, r_1 + … + r_n}`
/// into the value sets of the blocks, so there are
/// `(r_1 + … + r_n)! / (r_1! ⋯ r_n!)` of them.
pub fn shuffles(sizes: &[usize]) -> Vec<Permutation> {
    let total: usize = sizes.iter().sum();
    let mut out = Vec::new();
    // Choose which values land in each position block: a shuffle is the
    // monotone bijection from position block i onto its chosen value set.
    fn assign(sizes: &[usize], pool: Vec<usize>, prefix: Vec<usize>, out: &mut Vec<Permutation>) {
        if sizes.is_empty() {
            out.push(Permutation::from_values(prefix));
            return;
        }
        let r = sizes[0];
        for combo in pool.iter().copied().combinations(r) {
            let rest: Vec<usize> = pool.iter().copied().filter(|v| !combo.contains(v)).collect();
            let mut next_prefix = prefix.clone();
            next_prefix.extend(combo);
            assign(&sizes[1..], rest, next_prefix, out);
        }
    }
    assign(sizes, (1..=total).collect(), Vec::new(), &mut out);
    out.sort();
    out
}

/// All pointed `(r_1, …, r_n)`-shuffles, ordered lexicographically.
pub fn pointed_shuffles(sizes: &[usize]) -> Vec<Permutation> {
    shuffles(sizes)
        .into_iter()
        .filter(|s| s.is_pointed_shuffle(sizes))
        .collect()
}

/// The unique factorization `σ = ω · (τ_1 ⊕ … ⊕ τ_n)` with
/// `ω ∈ Sh(r_1, …, r_n)` and `τ_i ∈ Σ_{r_i}`.
pub fn shuffle_decompose(sigma: &Permutation, sizes: &[usize]) -> (Permutation, Vec<Permutation>) {
    assert_eq!(sigma.n(), sizes.iter().sum::<usize>());
    let mut omega_values = Vec::with_capacity(sigma.n());
    let mut taus = Vec::with_capacity(sizes.len());
    let mut pos = 0usize;
    for &r in sizes {
        let block: Vec<usize> = (0..r).map(|t| sigma.values[pos + t]).collect();
        let mut sorted = block.clone();
        sorted.sort_unstable();
        // ω maps the block monotonically onto the sorted value set; τ is the
        // pattern of σ inside the block.
        omega_values.extend(sorted.iter().copied());
        let tau: Vec<usize> = block
            .iter()
            .map(|v| sorted.iter().position(|w| w == v).unwrap() + 1)
            .collect();
        taus.push(Permutation::from_values(tau));
        pos += r;
    }
    (Permutation::from_values(omega_values), taus)
}

/// All factorizations `σ = ω · σ'(τ_1, …, τ_n)` with `σ' ∈ Σ_n`,
/// `τ_i ∈ Σ_{r_i}`, and `ω ∈ Sh_*(r_1, …, r_n)` a pointed shuffle,
/// ordered by `(ω, σ')`.
///
/// When all block sizes agree this factorization exists and is unique —
/// `Sh_*` is then a transversal of the wreath subgroup `Σ_n ⋉ (Σ_r)^n`
/// and the count `|Sh_*| · n! · (r!)^n = (nr)!` balances exactly.  For
/// mixed sizes it is a factorization *attempt*, not a bijection: `(2134)`
/// with sizes `(2,1,1)` factors both as `id · id((21), id, id)` and as
/// `(1324) · (213)(id, id, id)`, while `(213)` with sizes `(1,2)` does
/// not factor at all (`|Sh_*(1,2)| · 2! · 1! · 2! = 4 < 3!`).
pub fn pointed_shuffle_factorizations(
    sigma: &Permutation,
    sizes: &[usize],
) -> Vec<(Permutation, Permutation, Vec<Permutation>)> {
    assert_eq!(sigma.n(), sizes.iter().sum::<usize>());
    let n = sizes.len();
    let mut found: Vec<(Permutation, Permutation, Vec<Permutation>)> = Vec::new();
    for sp in all_permutations(n) {
        // σ = ω · σ'(τ_1, …, τ_n) = ω · (τ_1 ⊕ … ⊕ τ_n) · σ'_*(r_1, …, r_n),
        // so σ · σ'_*^{-1} = ω · (τ_1 ⊕ … ⊕ τ_n) and the plain factorization
        // of the left side with the original sizes recovers ω and the τ_i.
        let bp = sp.block_permutation(sizes);
        let aligned = sigma.compose(&bp.inverse());
        let (omega, taus) = shuffle_decompose(&aligned, sizes);
        if omega.is_pointed_shuffle(sizes) {
            let inner: Vec<&Permutation> = taus.iter().collect();
            let rebuilt = omega.compose(&sp.composite(&inner));
            if &rebuilt == sigma {
                found.push((omega, sp.clone(), taus));
            }
        }
    }
    found.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
    found
}

/// The canonical pointed factorization `σ = ω · σ'(τ_1, …, τ_n)`: the
/// `(ω, σ')`-least element of [`pointed_shuffle_factorizations`].
/// Exists and is unique when all block sizes are equal; see there for the
/// mixed-size caveats.  Panics if no factorization exists.
pub fn pointed_shuffle_decompose(
    sigma: &Permutation,
    sizes: &[usize],
) -> (Permutation, Permutation, Vec<Permutation>) {
    pointed_shuffle_factorizations(sigma, sizes)
        .into_iter()
        .next()
        .unwrap_or_else(|| panic!("no pointed factorization for {sigma} with sizes {sizes:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let s = Permutation::from_values(vec![3, 1, 2]);
        let t = Permutation::from_values(vec![2, 1, 3]);
        // (s·t)(1) = s(2) = 1.
        assert_eq!(s.compose(&t).values(), &[1, 3, 2]);
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(3));
        assert_eq!(s.inverse().compose(&s), Permutation::identity(3));
    }

    #[test]
    fn left_action_places_entry_i_at_slot_sigma_i() {
        let s = Permutation::from_values(vec![3, 1, 2]);
        // x_1 goes to slot 3, x_2 to slot 1, x_3 to slot 2.
        assert_eq!(s.act_on(&['a', 'b', 'c']), vec!['b', 'c', 'a']);
    }

    #[test]
    fn block_permutation_matches_worked_example() {
        let s = Permutation::from_values(vec![2, 1]);
        assert_eq!(s.block_permutation(&[2, 1]).values(), &[3, 1, 2]);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Permutation::from_values(vec![3, 1, 2]).to_string(), "(312)");
        let big = Permutation::identity(10);
        assert_eq!(big.to_string(), "(1 2 3 4 5 6 7 8 9 10)");
    }

    #[test]
    fn shuffle_counts_are_multinomial() {
        assert_eq!(shuffles(&[2, 1]).len(), 3);
        assert_eq!(shuffles(&[2, 2]).len(), 6);
        assert_eq!(shuffles(&[1, 1, 1]).len(), 6);
        assert_eq!(pointed_shuffles(&[2, 1]).len(), 2);
    }

    #[test]
    fn every_sigma_factors_once_through_shuffles() {
        let sizes = [2usize, 2];
        for sigma in all_permutations(4) {
            let (omega, taus) = shuffle_decompose(&sigma, &sizes);
            assert!(omega.is_shuffle(&sizes));
            let inner: Vec<&Permutation> = taus.iter().collect();
            let rebuilt = omega.compose(&Permutation::direct_sum(&inner));
            assert_eq!(rebuilt, sigma, "factorization must reproduce σ");
        }
    }

    #[test]
    fn pointed_factorization_exists_uniquely_for_equal_sizes() {
        for sizes in [vec![1usize, 1], vec![1, 1, 1], vec![2, 2], vec![1, 1, 1, 1]] {
            let total = sizes.iter().sum();
            for sigma in all_permutations(total) {
                let all = pointed_shuffle_factorizations(&sigma, &sizes);
                assert_eq!(
                    all.len(),
                    1,
                    "equal-size pointed factorization of {sigma} must be unique"
                );
                let (omega, sp, taus) = pointed_shuffle_decompose(&sigma, &sizes);
                assert!(omega.is_pointed_shuffle(&sizes));
                let inner: Vec<&Permutation> = taus.iter().collect();
                assert_eq!(omega.compose(&sp.composite(&inner)), sigma);
            }
        }
    }

    #[test]
    fn pointed_factorization_mixed_sizes_round_trip_without_bijectivity() {
        // For mixed sizes every returned factorization reconstructs σ, but
        // the count per σ may be 0 or 2: the map (ω, σ', τ) ↦ ω·σ'(τ) is a
        // bijection only when all block sizes agree.
        for sizes in [vec![2usize, 1, 1], vec![1, 2]] {
            let total: usize = sizes.iter().sum();
            let mut counts = std::collections::BTreeMap::<usize, usize>::new();
            for sigma in all_permutations(total) {
                let all = pointed_shuffle_factorizations(&sigma, &sizes);
                *counts.entry(all.len()).or_default() += 1;
                for (omega, sp, taus) in all {
                    let inner: Vec<&Permutation> = taus.iter().collect();
                    assert_eq!(omega.compose(&sp.composite(&inner)), sigma);
                }
            }
            // The total number of factorizations is |Sh_*| · n! · Π r_i!.
            let total_factorizations: usize = counts.iter().map(|(k, v)| k * v).sum();
            let expected = pointed_shuffles(&sizes).len()
                * (1..=sizes.len()).product::<usize>()
                * sizes.iter().map(|r| (1..=*r).product::<usize>()).product::<usize>();
            assert_eq!(total_factorizations, expected);
        }
    }

    #[test]
    fn pointed_factorization_known_mixed_size_collision() {
        // (2134) with sizes (2,1,1) admits two pointed factorizations, and
        // (213) with sizes (1,2) admits none.
        let sigma = Permutation::from_values(vec![2, 1, 3, 4]);
        assert_eq!(pointed_shuffle_factorizations(&sigma, &[2, 1, 1]).len(), 2);
        let sigma = Permutation::from_values(vec![2, 1, 3]);
        assert_eq!(pointed_shuffle_factorizations(&sigma, &[1, 2]).len(), 0);
    }
}

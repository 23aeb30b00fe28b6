//! The sign engine: every permutation-of-graded-factors sign in the
//! workspace is computed here, from one rule.
//!
//! Moving a factor of degree `p` past a factor of degree `q` costs
//! `(-1)^{p·q}`.  Everything else (reordering to sorted order, tensor
//! interleavings) is a composite of such moves.

use symgroups::Permutation;

/// Sign of permuting graded factors `x_1 ⊗ … ⊗ x_n` (with
/// `degrees[i-1] = |x_i|`) by the left action of `sigma`, which places
/// factor `i` into slot `sigma(i)`.
///
/// Each inversion of `sigma` — a pair `i < j` with `sigma(i) > sigma(j)`
/// — transposes `x_i` past `x_j` and contributes `(-1)^{|x_i||x_j|}`.
pub fn koszul_sign(degrees: &[i64], sigma: &Permutation) -> i32 {
    assert_eq!(
        degrees.len(),
        sigma.n(),
        "degree list and permutation size differ"
    );
    let mut parity = 0i64;
    for i in 1..=degrees.len() {
        for j in (i + 1)..=degrees.len() {
            if sigma.apply(i) > sigma.apply(j) {
                parity += degrees[i - 1] * degrees[j - 1];
            }
        }
    }
    if parity % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of sorting the list `keys` into weakly increasing order by the
/// minimal transposition sequence, where entry `i` carries degree
/// `degrees[i]`.  Equal keys never cross, so the result is well defined.
///
/// Returns `(sign, order)` where `order[k]` is the original index of the
/// `k`-th entry after sorting.
pub fn reorder_to_sorted_sign<K: Ord>(keys: &[K], degrees: &[i64]) -> (i32, Vec<usize>) {
    assert_eq!(keys.len(), degrees.len(), "keys and degrees length differ");
    let mut order: Vec<usize> = (0..keys.len()).collect();
    // Stable sort: ties keep original relative order, so no sign from them.
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]).then(a.cmp(&b)));
    // Crossings are exactly the pairs out of original order in `order`.
    let mut parity = 0i64;
    for a in 0..order.len() {
        for b in (a + 1)..order.len() {
            if order[a] > order[b] {
                parity += degrees[order[a]] * degrees[order[b]];
            }
        }
    }
    let sign = if parity % 2 == 0 { 1 } else { -1 };
    (sign, order)
}

/// Sign of interleaving `a_1 ⊗ … ⊗ a_n ⊗ b_1 ⊗ … ⊗ b_n` into
/// `a_1 ⊗ b_1 ⊗ … ⊗ a_n ⊗ b_n`: each `b_i` moves left past
/// `a_{i+1}, …, a_n`, so the parity is `Σ_{i<j} |b_i|·|a_j|`.
pub fn interleave_sign(a_degrees: &[i64], b_degrees: &[i64]) -> i32 {
    assert_eq!(
        a_degrees.len(),
        b_degrees.len(),
        "interleaving needs equally many factors on both sides"
    );
    let mut parity = 0i64;
    for i in 0..b_degrees.len() {
        for j in (i + 1)..a_degrees.len() {
            parity += b_degrees[i] * a_degrees[j];
        }
    }
    if parity % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use symgroups::all_permutations;

    #[test]
    fn transposition_of_odd_factors_is_negative() {
        let swap = Permutation::from_values(vec![2, 1]);
        assert_eq!(koszul_sign(&[1, 1], &swap), -1);
        assert_eq!(koszul_sign(&[1, 2], &swap), 1);
        assert_eq!(koszul_sign(&[0, 5], &swap), 1);
        assert_eq!(koszul_sign(&[3, 3], &swap), -1);
    }

    #[test]
    fn koszul_sign_is_multiplicative_in_the_action() {
        // sign(σ·τ acting) = sign(σ acting after τ)·with degrees permuted by τ.
        let degrees = [1i64, 2, 1, 3];
        for sigma in all_permutations(4) {
            for tau in all_permutations(4) {
                let st = sigma.compose(&tau);
                // Acting by τ first permutes the factor list; factor i lands
                // in slot τ(i), so slot s holds factor τ^{-1}(s).
                let tau_inv = tau.inverse();
                let permuted: Vec<i64> =
                    (1..=4).map(|s| degrees[tau_inv.apply(s) - 1]).collect();
                let lhs = koszul_sign(&degrees, &st);
                let rhs = koszul_sign(&degrees, &tau) * koszul_sign(&permuted, &sigma);
                assert_eq!(lhs, rhs, "sigma={sigma} tau={tau}");
            }
        }
    }

    #[test]
    fn all_even_degrees_give_plus_one() {
        for sigma in all_permutations(4) {
            assert_eq!(koszul_sign(&[0, 2, 4, 6], &sigma), 1);
        }
    }

    #[test]
    fn sorting_reorders_and_signs() {
        // Sort (b, a) with both odd: one crossing.
        let (s, order) = reorder_to_sorted_sign(&["b", "a"], &[1, 1]);
        assert_eq!(s, -1);
        assert_eq!(order, vec![1, 0]);
        // Equal keys stay put (stable), no sign.
        let (s, order) = reorder_to_sorted_sign(&["a", "a"], &[1, 1]);
        assert_eq!(s, 1);
        assert_eq!(order, vec![0, 1]);
        // Already sorted: identity.
        let (s, order) = reorder_to_sorted_sign(&[1, 2, 3], &[1, 1, 1]);
        assert_eq!(s, 1);
        assert_eq!(order, vec![0, 1, 2]);
    }

    #[test]
    fn sort_sign_matches_koszul_sign_of_the_sorting_permutation() {
        // For distinct keys the sorting map "original index i ↦ sorted slot"
        // is a permutation whose Koszul sign must agree.
        let keys = [3, 1, 4, 2];
        let degrees = [1i64, 3, 1, 1];
        let (s, order) = reorder_to_sorted_sign(&keys, &degrees);
        // order[k] = original index at sorted slot k, so factor order[k]+1
        // goes to slot k+1.
        let mut values = vec![0usize; 4];
        for (slot, &orig) in order.iter().enumerate() {
            values[orig] = slot + 1;
        }
        let sigma = Permutation::from_values(values);
        assert_eq!(s, koszul_sign(&degrees, &sigma));
    }

    #[test]
    fn interleaving_two_pairs() {
        // (a1 a2 b1 b2) → (a1 b1 a2 b2): b1 crosses a2 only.
        assert_eq!(interleave_sign(&[1, 1], &[1, 1]), -1);
        assert_eq!(interleave_sign(&[1, 0], &[1, 1]), 1);
        assert_eq!(interleave_sign(&[0, 1], &[1, 1]), -1);
        // Single factors never cross.
        assert_eq!(interleave_sign(&[7], &[5]), 1);
    }

    #[test]
    fn interleaving_agrees_with_the_explicit_permutation() {
        // n = 3: factors a1 a2 a3 b1 b2 b3 (indices 1..6) go to slots
        // 1,3,5,2,4,6 respectively.
        let sigma = Permutation::from_values(vec![1, 3, 5, 2, 4, 6]);
        for degs in [
            [1i64, 1, 1, 1, 1, 1],
            [1, 2, 1, 0, 1, 3],
            [2, 1, 1, 1, 2, 1],
        ] {
            let a = &degs[..3];
            let b = &degs[3..];
            assert_eq!(interleave_sign(a, b), koszul_sign(&degs, &sigma));
        }
    }
}

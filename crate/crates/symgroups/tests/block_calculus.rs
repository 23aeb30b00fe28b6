//! The block calculus identities every operadic layer of the workspace
//! leans on, checked exhaustively in small sizes and by property tests.

use proptest::prelude::*;
use symgroups::{all_permutations, pointed_shuffles, shuffles, Permutation};

/// `(τ_1 ⊕ … ⊕ τ_n) · σ_*(r_1, …, r_n) = σ_*(r_1, …, r_n) · (τ_{σ(1)} ⊕ … ⊕ τ_{σ(n)})`.
///
/// This single identity fixes the global convention relating direct sums
/// and block permutations; everything downstream (operad composites,
/// equivariance, shuffle factorizations) is phrased in terms of it.
fn check_block_lemma(sigma: &Permutation, taus: &[Permutation]) {
    let sizes: Vec<usize> = taus.iter().map(|t| t.n()).collect();
    let refs: Vec<&Permutation> = taus.iter().collect();
    let lhs = Permutation::direct_sum(&refs).compose(&sigma.block_permutation(&sizes));
    let permuted: Vec<&Permutation> = (1..=sigma.n()).map(|i| &taus[sigma.apply(i) - 1]).collect();
    let rhs = sigma
        .block_permutation(&sizes)
        .compose(&Permutation::direct_sum(&permuted));
    assert_eq!(lhs, rhs, "block lemma fails for σ={sigma}, τ={taus:?}");
}

#[test]
fn block_lemma_exhaustive_small() {
    for sigma in all_permutations(2) {
        for t1 in all_permutations(2) {
            for t2 in all_permutations(3) {
                check_block_lemma(&sigma, &[t1.clone(), t2.clone()]);
            }
        }
    }
    for sigma in all_permutations(3) {
        for t1 in all_permutations(2) {
            for t2 in all_permutations(1) {
                for t3 in all_permutations(2) {
                    check_block_lemma(&sigma, &[t1.clone(), t2.clone(), t3.clone()]);
                }
            }
        }
    }
}

/// Operad associativity of the composite: composing in two stages agrees
/// with composing the composites.
#[test]
fn composite_is_associative() {
    // σ(τ_1, τ_2) then substitute ρ into each slot of the τ's, versus
    // substituting first and composing once.
    for sigma in all_permutations(2) {
        for tau1 in all_permutations(2) {
            for tau2 in all_permutations(1) {
                for rho in all_permutations(2) {
                    // Left: (σ(τ_1, τ_2))(ρ, id, id) with ρ in slot 1.
                    let stage1 = sigma.composite(&[&tau1, &tau2]);
                    let id1 = Permutation::identity(1);
                    let left = stage1.composite(&[&rho, &id1, &id1]);
                    // Right: σ(τ_1(ρ, id), τ_2).
                    let tau1_rho = tau1.composite(&[&rho, &id1]);
                    let right = sigma.composite(&[&tau1_rho, &tau2]);
                    assert_eq!(left, right);
                }
            }
        }
    }
}

#[test]
fn composite_unit_laws() {
    for sigma in all_permutations(3) {
        let ids: Vec<Permutation> = (0..3).map(|_| Permutation::identity(1)).collect();
        let refs: Vec<&Permutation> = ids.iter().collect();
        assert_eq!(sigma.composite(&refs), sigma);
        let unit = Permutation::identity(1);
        assert_eq!(unit.composite(&[&sigma]), sigma);
    }
}

#[test]
fn shuffles_partition_sigma_through_unique_factorization() {
    // Each σ factors as ω·(τ_1⊕τ_2) for exactly one shuffle ω; counting
    // both ways: |Σ_4| = |Sh(2,2)| · |Σ_2|².
    let sizes = [2usize, 2];
    let all = all_permutations(4);
    let sh = shuffles(&sizes);
    assert_eq!(sh.len() * 2 * 2, all.len());
    for omega in &sh {
        assert!(omega.is_shuffle(&sizes));
    }
    // Pointed shuffles refine by the block-leader order: Sh(2,2) has 6
    // elements, 3 of them pointed.
    assert_eq!(pointed_shuffles(&sizes).len(), 3);
}

proptest! {
    #[test]
    fn prop_block_lemma(seed in 0u64..5000) {
        // Derive σ and the τ's deterministically from the seed to keep the
        // case generation simple and reproducible.
        let n = 2 + (seed % 3) as usize;          // 2..=4 blocks
        let sigma = {
            let all = all_permutations(n);
            all[(seed as usize / 7) % all.len()].clone()
        };
        let taus: Vec<Permutation> = (0..n)
            .map(|i| {
                let r = 1 + ((seed as usize + i * 13) % 3); // sizes 1..=3
                let all = all_permutations(r);
                all[(seed as usize + i * 31) % all.len()].clone()
            })
            .collect();
        check_block_lemma(&sigma, &taus);
    }

    #[test]
    fn prop_sign_is_multiplicative(seed in 0u64..2000) {
        let all = all_permutations(4);
        let a = &all[(seed as usize) % all.len()];
        let b = &all[(seed as usize / 24) % all.len()];
        prop_assert_eq!(a.compose(b).sign(), a.sign() * b.sign());
    }

    #[test]
    fn prop_act_on_is_a_left_action(seed in 0u64..2000) {
        let all = all_permutations(4);
        let a = &all[(seed as usize) % all.len()];
        let b = &all[(seed as usize / 24) % all.len()];
        let xs: Vec<u64> = vec![10, 20, 30, 40];
        // (a·b)·x = a·(b·x).
        prop_assert_eq!(a.compose(b).act_on(&xs), a.act_on(&b.act_on(&xs)));
    }
}

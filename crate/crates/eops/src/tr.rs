//! Table reduction: the quotient map from permutation tuples to
//! surjection words, and the prefix-forgetting maps that measure it.
//!
//! A `(d+1)`-tuple of orderings of `r` letters maps to a sum of surjection
//! words, one per composition `r_0 + … + r_d = r + d` with `r_i ≥ 1`: row
//! `i` collects the first `r_i` letters of the `i`-th ordering that are
//! still *open*, and every row entry except the row's last becomes
//! exhausted afterwards.  Concatenating the rows gives the word; terms
//! whose row boundaries repeat a letter vanish.  The map is sign-free, a
//! chain map, and compatible with both compositions.

use std::collections::BTreeSet;

use exact_chains::{Chain, ChainLabel, Field};

use crate::be::BeTuple;
use crate::surj::{surjection_term, Surjection};

/// All compositions of `total` into `parts` parts, each in `1..=max`.
fn compositions(total: usize, parts: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        total: usize,
        parts: usize,
        max: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if parts == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // Remaining parts need at least 1 and at most max each.
        for r in 1..=max.min(total.saturating_sub(parts - 1)) {
            cur.push(r);
            rec(total - r, parts - 1, max, cur, out);
            cur.pop();
        }
    }
    rec(total, parts, max, &mut cur, &mut out);
    out
}

/// Table reduction of a single tuple.  Distinct compositions always give
/// distinct words (the word's table recovers its row lengths), so the
/// surviving terms all carry coefficient `+1`.
pub fn table_reduction(x: &BeTuple, field: &Field) -> Chain<Surjection> {
    let r = x.arity();
    let d = x.degree() as usize;
    let mut out = Chain::zero();
    for comp in compositions(r + d, d + 1, r) {
        let mut exhausted: BTreeSet<u32> = BTreeSet::new();
        let mut word: Vec<u32> = Vec::with_capacity(r + d);
        for (level, &len) in x.levels().iter().zip(comp.iter()) {
            let row: Vec<u32> = level
                .letters()
                .iter()
                .copied()
                .filter(|l| !exhausted.contains(l))
                .take(len)
                .collect();
            debug_assert_eq!(row.len(), len, "every row can be filled");
            for &l in &row[..len - 1] {
                exhausted.insert(l);
            }
            word.extend_from_slice(&row);
        }
        out = out.add(&surjection_term(Surjection::new(word), field.one()));
    }
    out
}

/// Linear extension of table reduction to chains of tuples.
pub fn table_reduction_chain(x: &Chain<BeTuple>, field: &Field) -> Chain<Surjection> {
    x.apply_linear(|t| table_reduction(t, field))
}

/// Forget the labels below `k`: delete every value `< k` from a word over
/// `1..r`, keeping the labels `k..r`.  Each forgotten value must occur
/// exactly once — otherwise the degree would drop and the word maps to
/// zero — and a deletion that leaves equal neighbours also gives zero.
pub fn forget_prefix(k: u32, u: &Surjection) -> Option<Surjection> {
    let r = u.arity() as u32;
    assert_eq!(
        u.labels(),
        (1..=r).collect::<Vec<_>>(),
        "prefix forgetting needs labels 1..r"
    );
    assert!((1..=r).contains(&k), "prefix bound {k} out of range 1..{r}");
    for v in 1..k {
        if u.occurrences(v) != 1 {
            return None;
        }
    }
    let kept: Vec<u32> = u.values().iter().copied().filter(|&v| v >= k).collect();
    let result = Surjection::new(kept)?;
    debug_assert_eq!(result.degree(), u.degree(), "degree is preserved");
    Some(result)
}

/// Glue the staircase prefix `1, 2, …, k` in front of a word over the
/// labels `k..r`; the shared value `k` makes the result a word over
/// `1..r` of degree one higher, or zero if the word starts with `k`.
pub fn concat_prefix(k: u32, u: &Surjection) -> Option<Surjection> {
    let labels = u.labels();
    assert_eq!(labels[0], k, "word must live over labels starting at {k}");
    let mut values: Vec<u32> = (1..=k).collect();
    values.extend_from_slice(u.values());
    let result = Surjection::new(values)?;
    debug_assert_eq!(result.degree(), u.degree() + 1, "degree rises by one");
    Some(result)
}

/// The staircase sum `Σ_k 1⋯k·π_k(u)` over `k = 1..r`, extended linearly.
pub fn staircase_sum(u: &Surjection, field: &Field) -> Chain<Surjection> {
    let r = u.arity() as u32;
    let mut out = Chain::zero();
    for k in 1..=r {
        if let Some(pk) = forget_prefix(k, u) {
            out = out.add(&surjection_term(concat_prefix(k, &pk), field.one()));
        }
    }
    out
}

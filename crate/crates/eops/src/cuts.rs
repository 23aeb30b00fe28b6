//! Interval-cut coactions: a surjection word of arity `r` sends a face of
//! a simplex to a sum of `r`-fold tensors of faces.
//!
//! For a word of length `N` acting on a face with vertex positions
//! `0..=m`, each term chooses cut points `0 ≤ k_1 ≤ … ≤ k_{N-1} ≤ m`,
//! splitting the position range into `N` consecutive intervals that share
//! their endpoints.  The `v`-th output factor concatenates the intervals
//! at the positions holding value `v`; a term vanishes when two intervals
//! of the same value meet at a shared vertex, which would repeat it.  The
//! arity-2 degree-0 words specialize to the diagonal approximation and
//! its transposition.

use exact_chains::{reorder_to_sorted_sign, Chain, ChainLabel, Field, Tens};
use simplex_chains::Face;

use crate::surj::Surjection;

/// One unsigned term of an interval cut, with the data the sign depends
/// on: the Koszul parity of regrouping the intervals by value, and the
/// full cut tuple.
pub(crate) struct CutTerm {
    pub faces: Vec<Face>,
    /// `+1`/`-1` from reordering the interval symbols (graded by interval
    /// length) from position order into value order.
    pub regroup_sign: i32,
    /// The full cut bounds `0 = k_0 ≤ k_1 ≤ … ≤ k_N = m`.
    pub bounds: Vec<usize>,
}

/// All surviving interval cuts of `face` along `u`, unsigned.
pub(crate) fn cut_terms(u: &Surjection, face: &Face) -> Vec<CutTerm> {
    let r = u.arity();
    assert_eq!(
        u.labels(),
        (1..=r as u32).collect::<Vec<_>>(),
        "interval cuts need a word over the labels 1..r"
    );
    let n = u.values().len();
    let m = face.dim();
    let mut out = Vec::new();
    let mut cuts = vec![0usize; n + 1];
    cuts[n] = m;
    // Recursively choose the weakly increasing interior cut points.
    fn rec(u: &Surjection, face: &Face, cuts: &mut Vec<usize>, j: usize, out: &mut Vec<CutTerm>) {
        let n = u.values().len();
        if j == n {
            if let Some(term) = assemble(u, face, cuts) {
                out.push(term);
            }
            return;
        }
        for k in cuts[j - 1]..=face.dim() {
            cuts[j] = k;
            rec(u, face, cuts, j + 1, out);
        }
    }
    fn assemble(u: &Surjection, face: &Face, cuts: &[usize]) -> Option<CutTerm> {
        let r = u.arity();
        let mut grouped: Vec<Vec<usize>> = vec![Vec::new(); r];
        for (j, &v) in u.values().iter().enumerate() {
            let (lo, hi) = (cuts[j], cuts[j + 1]);
            let group = &mut grouped[v as usize - 1];
            if let Some(&last) = group.last() {
                // Cut points increase, so an earlier interval of the same
                // value ends at or before `lo`; ending exactly at `lo`
                // would repeat that vertex and degenerate the simplex.
                if last == lo {
                    return None;
                }
                debug_assert!(last < lo, "cut points are weakly increasing");
            }
            group.extend(lo..=hi);
        }
        // Each value must have received its intervals without repeats; the
        // group is a strictly increasing position list.  Translate the
        // positions to vertices.
        let verts = face.vertices();
        let faces: Vec<Face> = grouped
            .iter()
            .map(|g| Face::new(face.ambient(), g.iter().map(|&p| verts[p]).collect()))
            .collect();
        let lengths: Vec<i64> = (0..u.values().len())
            .map(|j| (cuts[j + 1] - cuts[j]) as i64)
            .collect();
        let (regroup_sign, _) = reorder_to_sorted_sign(u.values(), &lengths);
        Some(CutTerm {
            faces,
            regroup_sign,
            bounds: cuts.to_vec(),
        })
    }
    if n == 1 {
        // No interior cuts: the single interval is the whole face.
        if let Some(term) = assemble(u, face, &cuts) {
            out.push(term);
        }
        return out;
    }
    rec(u, face, &mut cuts, 1, &mut out);
    out
}

/// The extra sign of one term beyond the regrouping parity.
///
/// A value occurring `k ≥ 2` times contributes through its non-final
/// intervals: the interval at its `i`-th occurrence (1-based) counts
/// `k - i` times, and the interval lengths at all positions holding
/// smaller values count `k - 1` times.  On top of that, every
/// out-of-order pair of caesuras — an earlier caesura holding the larger
/// value — flips the sign.  Solved from, and checked against, the chain
/// compatibility of the coaction with the word differential.
pub(crate) fn cut_extra_sign(u: &Surjection, bounds: &[usize]) -> i32 {
    let vals = u.values();
    let len = |j: usize| bounds[j + 1] - bounds[j];
    let mut exp = 0usize;
    for v in u.labels() {
        let positions: Vec<usize> = (0..vals.len()).filter(|&j| vals[j] == v).collect();
        let k = positions.len();
        if k < 2 {
            continue;
        }
        let smaller: usize = (0..vals.len()).filter(|&j| vals[j] < v).map(len).sum();
        for (i, &p) in positions[..k - 1].iter().enumerate() {
            exp += (k - 1 - i) * len(p);
        }
        exp += (k - 1) * smaller;
    }
    let caes = u.caesuras();
    for a in 0..caes.len() {
        for b in a + 1..caes.len() {
            if vals[caes[a] - 1] > vals[caes[b] - 1] {
                exp += 1;
            }
        }
    }
    if exp % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The interval-cut coaction of a word over `1..r` on a face: a chain of
/// `r`-fold face tensors, the `v`-th factor assembled from the intervals
/// of the positions holding `v`.
pub fn interval_cut(u: &Surjection, face: &Face, field: &Field) -> Chain<Tens<Face>> {
    let mut out = Chain::zero();
    for term in cut_terms(u, face) {
        let sign = term.regroup_sign * cut_extra_sign(u, &term.bounds);
        out = out.add(&Chain::term(
            Tens::new(term.faces),
            field.integer(sign as i64),
        ));
    }
    out
}

/// Linear extension of the coaction to chains of faces.
pub fn interval_cut_chain(
    u: &Surjection,
    c: &Chain<Face>,
    field: &Field,
) -> Chain<Tens<Face>> {
    c.apply_linear(|f| interval_cut(u, f, field))
}

/// Apply a further coaction to the `i`-th factor (1-based) of each face
/// tensor, with the Koszul sign of carrying the inner word past the
/// preceding factors.
///
/// Cutting along a composed word factors through this: cutting `c` along
/// `u ∘_i v` equals cutting along `u` and then cutting the `i`-th factor
/// along `v`, up to the operator-interchange sign `(-1)^{|u||v|}`.
pub fn coact_in_slot(
    word: &Tens<Face>,
    i: usize,
    v: &Surjection,
    field: &Field,
) -> Chain<Tens<Face>> {
    assert!((1..=word.len()).contains(&i), "slot {i} out of range");
    let prefix: i64 = word.factors()[..i - 1].iter().map(|f| f.degree()).sum();
    let sign = if (v.degree() * prefix) % 2 == 0 { 1 } else { -1 };
    interval_cut(v, &word.factors()[i - 1], field)
        .apply_linear(|inner| {
            let mut factors = word.factors()[..i - 1].to_vec();
            factors.extend(inner.factors().iter().cloned());
            factors.extend(word.factors()[i..].iter().cloned());
            Chain::term(Tens::new(factors), field.one())
        })
        .scale_int(sign)
}

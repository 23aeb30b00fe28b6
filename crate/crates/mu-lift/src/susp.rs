//! Operadic suspension of the tuple operad, on underlying elements.
//!
//! Shifting the arity-`n` part of an operad by `1 - n` — tensoring with
//! the endomorphism operad of a one-dimensional degree-one module —
//! yields an operad with the same basis elements but sign-twisted
//! structure maps.  Each wrapper here takes unsuspended tuples, applies
//! the corresponding twisted operation, and returns the underlying chain
//! of the result, so the shift itself never needs to be materialized.
//!
//! With the suspension factor written on the left, the twists are: a
//! composition at the `i`-th slot with a factor of arity `q` picks up
//! `(-1)^{(q-1)(i-1) + (q-1)|x|}` where `|x|` is the outer degree; the
//! differential of an arity-`p` element picks up `(-1)^{p-1}`; a
//! degree-one operator conjugates to `(-1)^{n-1}` times itself; and a
//! permutation acts with its sign.
//!
//! Over a letter set, the composite `x ∘_a y` first lives on the letters
//! of `y` standing as a block where `a` stood; re-sorting that block
//! arrangement into increasing order costs the sign of the sorting
//! permutation, which the slot composition includes.

use exact_chains::{Chain, ChainLabel, Field};

use eops::{
    be_act, be_compose_at_letter, be_differential, be_homotopy, be_projector, be_term,
    BeTuple, BeWord,
};
use symgroups::Permutation;

/// Parity of the inversions of a sequence: the number of pairs standing
/// in decreasing order, modulo two.
fn inversion_parity(seq: &[u32]) -> usize {
    let mut inv = 0usize;
    for a in 0..seq.len() {
        inv += seq[a + 1..].iter().filter(|&&b| seq[a] > b).count();
    }
    inv % 2
}

fn sign_of(parity: usize) -> i64 {
    if parity % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Suspended slot composition: substitute `y` for the letter `at` of `x`
/// and multiply by the suspension sign of the slot together with the
/// sign that re-sorts the block arrangement of the composite letter set.
pub fn susp_compose_at_letter(
    x: &BeTuple,
    y: &BeTuple,
    at: u32,
    field: &Field,
) -> Chain<BeTuple> {
    let xs = x.letter_set();
    let ys = y.letter_set();
    let slot = xs
        .iter()
        .position(|&l| l == at)
        .expect("slot letter must belong to the outer factor");
    let q = y.arity();
    let mut arrangement: Vec<u32> = xs[..slot].to_vec();
    arrangement.extend_from_slice(&ys);
    arrangement.extend_from_slice(&xs[slot + 1..]);
    let exp = (q - 1) * (slot + x.degree() as usize) + inversion_parity(&arrangement);
    be_compose_at_letter(x, y, at, field).scale_int(sign_of(exp))
}

/// Bilinear extension of the suspended slot composition to chains.
pub fn susp_compose_chains(
    x: &Chain<BeTuple>,
    y: &Chain<BeTuple>,
    at: u32,
    field: &Field,
) -> Chain<BeTuple> {
    let mut out = Chain::zero();
    for (xt, xc) in x.iter() {
        for (yt, yc) in y.iter() {
            out = out.add(&susp_compose_at_letter(xt, yt, at, field).scale(&xc.mul(yc)));
        }
    }
    out
}

/// Suspended differential: `(-1)^{p-1}` times the word-deletion
/// differential, for arity `p`.
pub fn susp_differential(x: &BeTuple, field: &Field) -> Chain<BeTuple> {
    be_differential(x, field).scale_int(sign_of(x.arity() + 1))
}

/// Linear extension of the suspended differential to chains.
pub fn susp_differential_chain(c: &Chain<BeTuple>, field: &Field) -> Chain<BeTuple> {
    c.apply_linear(|x| susp_differential(x, field))
}

/// Suspended prepending homotopy: conjugating the degree-one prepending
/// operator with the arity-`n` shift costs `(-1)^{n-1}`.
pub fn susp_homotopy(sigma: &BeWord, x: &BeTuple, field: &Field) -> Chain<BeTuple> {
    be_homotopy(sigma, x, field).scale_int(sign_of(x.arity() + 1))
}

/// Suspended retraction onto a chosen ordering: degree zero, so the
/// conjugation introduces no sign.
pub fn susp_projector(sigma: &BeWord, x: &BeTuple, field: &Field) -> Chain<BeTuple> {
    be_projector(sigma, x, field)
}

/// Suspended left-translation action: the permutation acts on letters
/// and contributes its sign.
pub fn susp_act(sigma: &Permutation, x: &BeTuple, field: &Field) -> Chain<BeTuple> {
    be_term(be_act(sigma, x), field.integer(i64::from(sigma.sign())))
}

/// Relabel every letter of every tuple in a chain.  Order-preserving
/// relabellings leave suspended elements untouched, so no sign appears.
pub fn relabel_chain(
    c: &Chain<BeTuple>,
    field: &Field,
    f: &impl Fn(u32) -> u32,
) -> Chain<BeTuple> {
    c.apply_linear(|x| be_term(x.map_letters(f), field.one()))
}

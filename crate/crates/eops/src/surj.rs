//! Surjection words: nondegenerate surjective value sequences with the
//! caesura-signed differential and overlapping-block composition.
//!
//! An arity-`r`, degree-`d` element is a sequence of `r + d` values
//! covering a set of `r` distinct labels, with no two consecutive values
//! equal.  A *caesura* is a position whose value occurs again later; the
//! number of caesuras equals the degree.  Cutting the sequence after each
//! caesura arranges it as a table whose rows all end at caesuras except
//! the last.

use std::collections::BTreeSet;
use std::fmt;

use exact_chains::{Chain, ChainLabel, Field, Scalar};
use symgroups::Permutation;

/// A nondegenerate surjection word.  The label set is the set of distinct
/// values, so surjectivity holds by construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Surjection {
    values: Vec<u32>,
}

impl Surjection {
    /// Build a word from its value sequence; `None` encodes the zero
    /// identification when two consecutive values coincide.
    pub fn new(values: Vec<u32>) -> Option<Self> {
        assert!(!values.is_empty(), "surjection words are nonempty");
        if values.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Surjection { values })
    }

    /// The degree-0 word of a permutation of `1..n`.
    pub fn from_permutation(p: &Permutation) -> Self {
        Surjection {
            values: p.values().iter().map(|&v| v as u32).collect(),
        }
    }

    /// Interpret a degree-0 word over `1..n` as a permutation.
    pub fn to_permutation(&self) -> Permutation {
        assert_eq!(self.degree(), 0, "only degree-0 words are permutations");
        assert_eq!(
            self.labels(),
            (1..=self.arity() as u32).collect::<Vec<_>>(),
            "labels must be 1..n to form a permutation"
        );
        Permutation::from_values(self.values.iter().map(|&v| v as usize).collect())
    }

    /// Parse either a space-separated list ("1 2 1", parentheses and
    /// commas ignored) or a compact digit string ("121").
    pub fn parse(s: &str) -> Result<Surjection, String> {
        let cleaned: String = s
            .chars()
            .map(|c| if c == '(' || c == ')' || c == ',' { ' ' } else { c })
            .collect();
        let trimmed = cleaned.trim();
        if trimmed.is_empty() {
            return Err("empty surjection word".to_string());
        }
        let values: Vec<u32> = if trimmed.contains(' ') {
            trimmed
                .split_whitespace()
                .map(|t| t.parse::<u32>().map_err(|e| format!("bad value {t:?}: {e}")))
                .collect::<Result<_, _>>()?
        } else {
            trimmed
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| format!("bad digit {c:?} in surjection word"))
                })
                .collect::<Result<_, _>>()?
        };
        Surjection::new(values).ok_or_else(|| "degenerate surjection word".to_string())
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// The sorted label set (the distinct values).
    pub fn labels(&self) -> Vec<u32> {
        let set: BTreeSet<u32> = self.values.iter().copied().collect();
        set.into_iter().collect()
    }

    pub fn arity(&self) -> usize {
        let set: BTreeSet<u32> = self.values.iter().copied().collect();
        set.len()
    }

    /// How many times `v` occurs in the word.
    pub fn occurrences(&self, v: u32) -> usize {
        self.values.iter().filter(|&&x| x == v).count()
    }

    /// Whether the 1-based position holds a value that occurs again later.
    pub fn is_caesura(&self, pos: usize) -> bool {
        assert!((1..=self.values.len()).contains(&pos), "position out of range");
        self.values[pos..].contains(&self.values[pos - 1])
    }

    /// The 1-based positions of the caesuras; their count is the degree.
    pub fn caesuras(&self) -> Vec<usize> {
        (1..=self.values.len())
            .filter(|&p| self.is_caesura(p))
            .collect()
    }

    /// The table arrangement: the word cut after each caesura, so every
    /// row but the last ends at a caesura.
    pub fn table(&self) -> Vec<Vec<u32>> {
        let mut rows = Vec::new();
        let mut row = Vec::new();
        for pos in 1..=self.values.len() {
            row.push(self.values[pos - 1]);
            if self.is_caesura(pos) {
                rows.push(std::mem::take(&mut row));
            }
        }
        rows.push(row);
        rows
    }

    /// The table rendered row-per-line, values space-separated.
    pub fn render_table(&self) -> String {
        self.table()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Apply an injective value relabelling.
    pub fn map_values(&self, f: &impl Fn(u32) -> u32) -> Surjection {
        let values: Vec<u32> = self.values.iter().map(|&v| f(v)).collect();
        let distinct: BTreeSet<u32> = values.iter().copied().collect();
        assert_eq!(distinct.len(), self.arity(), "relabelling must be injective");
        Surjection::new(values).expect("injective relabelling preserves nondegeneracy")
    }

    /// Transport to the standard labels `1..r` by the order isomorphism;
    /// returns the standard word and the original labels in order.
    pub fn to_standard(&self) -> (Surjection, Vec<u32>) {
        let labels = self.labels();
        let std = self.map_values(&|v| {
            labels.iter().position(|&l| l == v).expect("value in label set") as u32 + 1
        });
        (std, labels)
    }

    /// Transport a standard word onto the given sorted label list.
    pub fn from_standard(std: &Surjection, labels: &[u32]) -> Surjection {
        assert_eq!(std.arity(), labels.len(), "label count must match arity");
        assert!(labels.windows(2).all(|w| w[0] < w[1]), "labels must be strictly increasing");
        std.map_values(&|v| labels[v as usize - 1])
    }
}

impl ChainLabel for Surjection {
    fn degree(&self) -> i64 {
        self.values.len() as i64 - self.arity() as i64
    }
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A one-term chain, or zero for the degenerate identification.
pub fn surjection_term(word: Option<Surjection>, coeff: Scalar) -> Chain<Surjection> {
    match word {
        Some(u) => Chain::term(u, coeff),
        None => Chain::zero(),
    }
}

/// The differential: delete one occurrence at a time.  Each deletion
/// consumes exactly one caesura — the deleted position itself when the
/// occurrence is not the last of its value, or the value's previous
/// occurrence when it is.  Treating the caesuras in word order as odd
/// generators, the sign is `(-1)^c` with `c` the number of caesuras
/// strictly before the consumed one, times an extra `-1` when a last
/// occurrence is deleted.  Deleting the sole occurrence of a value breaks
/// surjectivity and the term vanishes, as does a deletion that leaves
/// equal neighbours.
pub fn surjection_differential(u: &Surjection, field: &Field) -> Chain<Surjection> {
    let vals = u.values();
    // caesuras_before[p] = number of caesuras among positions 1..p (1-based,
    // exclusive), indexed by 0-based position p.
    let mut caesuras_before = vec![0usize; vals.len()];
    for p in 1..vals.len() {
        caesuras_before[p] =
            caesuras_before[p - 1] + usize::from(u.is_caesura(p));
    }
    let mut out = Chain::zero();
    for i in 0..vals.len() {
        if u.occurrences(vals[i]) == 1 {
            continue;
        }
        let is_last = !vals[i + 1..].contains(&vals[i]);
        let (consumed, flip) = if is_last {
            let prev = (0..i)
                .rev()
                .find(|&p| vals[p] == vals[i])
                .expect("non-sole occurrence has a predecessor");
            (prev, -1)
        } else {
            (i, 1)
        };
        let sign = flip * if caesuras_before[consumed] % 2 == 0 { 1 } else { -1 };
        let mut rest = vals.to_vec();
        rest.remove(i);
        out = out.add(&surjection_term(Surjection::new(rest), field.integer(sign)));
    }
    out
}

/// Diagonal value-renaming action of a permutation on a word over `1..n`.
pub fn surjection_act(sigma: &Permutation, u: &Surjection) -> Surjection {
    assert_eq!(
        u.labels(),
        (1..=u.arity() as u32).collect::<Vec<_>>(),
        "permutation action needs labels 1..n"
    );
    u.map_values(&|v| sigma.apply(v as usize) as u32)
}

/// Which of the two factors a caesura of a composite word comes from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum CaesuraSource {
    Outer,
    Inner,
}

/// One term of a composition: the composite word together with the
/// left-to-right sources of its caesuras.
pub(crate) struct CompositeTerm {
    pub word: Surjection,
    pub sources: Vec<CaesuraSource>,
}

/// All composition terms (no signs): substitute the inner word's values
/// for the occurrences of `at`, splitting the inner word into as many
/// consecutive blocks as `at` has occurrences, adjacent blocks sharing
/// their boundary value.  Every term is automatically nondegenerate and
/// surjective.  The caesura sources record, per caesura of the result in
/// word order, whether it descends from an outer caesura (including the
/// block junctions, which replace the non-final occurrences of `at`) or
/// from an inner one.
pub(crate) fn composite_terms(u: &Surjection, v: &Surjection, at: u32) -> Vec<CompositeTerm> {
    let u_rest: BTreeSet<u32> = u.values().iter().copied().filter(|&x| x != at).collect();
    assert!(u_rest.len() + 1 == u.arity(), "outer word must contain {at}");
    for l in v.labels() {
        assert!(
            !u_rest.contains(&l),
            "label {l} of the inner word collides with the outer word"
        );
    }
    let k = u.occurrences(at);
    let m = v.values().len();
    let mut out = Vec::new();
    for cuts in weakly_increasing(k - 1, m) {
        // Block t (1-based) spans inner positions bounds[t-1]..=bounds[t].
        let mut bounds = Vec::with_capacity(k + 1);
        bounds.push(1);
        bounds.extend(cuts.iter().copied());
        bounds.push(m);
        let mut word = Vec::new();
        let mut sources = Vec::new();
        let mut t = 0usize; // occurrences of `at` seen so far
        for (pos, &x) in u.values().iter().enumerate() {
            if x != at {
                word.push(x);
                if u.is_caesura(pos + 1) {
                    sources.push(CaesuraSource::Outer);
                }
            } else {
                t += 1;
                for j in bounds[t - 1]..=bounds[t] {
                    word.push(v.values()[j - 1]);
                    if j == bounds[t] && t < k {
                        sources.push(CaesuraSource::Outer);
                    } else if v.is_caesura(j) {
                        sources.push(CaesuraSource::Inner);
                    }
                }
            }
        }
        let word = Surjection::new(word).expect("composites are nondegenerate");
        debug_assert_eq!(word.degree(), u.degree() + v.degree(), "degree bookkeeping");
        debug_assert_eq!(word.caesuras().len(), sources.len(), "every caesura is sourced");
        out.push(CompositeTerm { word, sources });
    }
    out
}

/// Weakly increasing sequences of the given length with entries in `1..=m`.
fn weakly_increasing(len: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(len: usize, m: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for q in lo..=m {
            cur.push(q);
            rec(len, m, q, cur, out);
            cur.pop();
        }
    }
    rec(len, m, 1, &mut cur, &mut out);
    out
}

/// The sign of one composition term: the parity of the interleaving of
/// inner caesuras among outer ones, an inner caesura standing before an
/// outer one counting as an inversion.
pub(crate) fn interleave_parity(sources: &[CaesuraSource]) -> i64 {
    let mut inner_seen = 0usize;
    let mut inversions = 0usize;
    for s in sources {
        match s {
            CaesuraSource::Inner => inner_seen += 1,
            CaesuraSource::Outer => inversions += inner_seen,
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Composition over label sets: substitute `v` for the label `at` of `u`,
/// summing over the overlapping block splittings with the interleaving
/// sign of each term's caesuras.
pub fn surjection_compose_at_label(
    u: &Surjection,
    v: &Surjection,
    at: u32,
    field: &Field,
) -> Chain<Surjection> {
    let mut out = Chain::zero();
    for term in composite_terms(u, v, at) {
        let sign = interleave_parity(&term.sources);
        out = out.add(&Chain::term(term.word, field.integer(sign)));
    }
    out
}

/// Standard-label composition: `u` over `1..p` and `v` over `1..q` give a
/// result over `1..p+q-1`, with `v`'s labels occupying `i..i+q-1`.
pub fn surjection_compose(
    u: &Surjection,
    v: &Surjection,
    i: usize,
    field: &Field,
) -> Chain<Surjection> {
    let p = u.arity();
    let q = v.arity();
    assert!((1..=p).contains(&i), "composition index {i} out of range 1..{p}");
    assert_eq!(u.labels(), (1..=p as u32).collect::<Vec<_>>());
    assert_eq!(v.labels(), (1..=q as u32).collect::<Vec<_>>());
    // Label 0 marks the substitution site.
    let u_shift = u.map_values(&|l| {
        if (l as usize) < i {
            l
        } else if l as usize == i {
            0
        } else {
            l + q as u32 - 1
        }
    });
    let v_shift = v.map_values(&|l| l + i as u32 - 1);
    surjection_compose_at_label(&u_shift, &v_shift, 0, field)
}

/// Bilinear extension of the label-set composition to chains.
pub fn surjection_compose_chains(
    u: &Chain<Surjection>,
    v: &Chain<Surjection>,
    at: u32,
    field: &Field,
) -> Chain<Surjection> {
    let mut out = Chain::zero();
    for (ut, uc) in u.iter() {
        for (vt, vc) in v.iter() {
            out = out.add(&surjection_compose_at_label(ut, vt, at, field).scale(&uc.mul(vc)));
        }
    }
    out
}

/// All nondegenerate surjection words of the given arity and degree over
/// the labels `1..r`.
pub fn enumerate_surjections(r: usize, degree: usize) -> Vec<Surjection> {
    let len = r + degree;
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(r: usize, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Surjection>) {
        if cur.len() == len {
            if let Some(s) = Surjection::new(cur.clone()) {
                if s.arity() == r {
                    out.push(s);
                }
            }
            return;
        }
        // Pruning: still-missing labels must fit in the remaining slots.
        let distinct: BTreeSet<u32> = cur.iter().copied().collect();
        let missing = r - distinct.len();
        if missing > len - cur.len() {
            return;
        }
        for v in 1..=r as u32 {
            if cur.last() != Some(&v) {
                cur.push(v);
                rec(r, len, cur, out);
                cur.pop();
            }
        }
    }
    rec(r, len, &mut cur, &mut out);
    out
}

//! Tuples of permutations with the simplicial differential, diagonal,
//! constant-retraction homotopy, and shuffle composition.
//!
//! An arity-`r` element of degree `d` is a `(d+1)`-tuple of words, each word
//! an ordering of the same `r` distinct letters; tuples with two equal
//! consecutive words are identified with zero.  Over the letters `1..r` the
//! words are permutations, but arbitrary letter sets are supported so that
//! elements can live over the vertex labels of a tree.

use std::collections::BTreeSet;
use std::fmt;

use exact_chains::{Chain, ChainLabel, Field, Pair, Scalar};
use symgroups::Permutation;

/// An ordering of a finite set of distinct `u32` letters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BeWord {
    letters: Vec<u32>,
}

impl BeWord {
    /// A word from its letter sequence.  Panics if a letter repeats.
    pub fn new(letters: Vec<u32>) -> Self {
        let distinct: BTreeSet<u32> = letters.iter().copied().collect();
        assert_eq!(distinct.len(), letters.len(), "word letters must be distinct");
        assert!(!letters.is_empty(), "words are nonempty");
        BeWord { letters }
    }

    /// The word of a permutation of `1..n`.
    pub fn from_permutation(p: &Permutation) -> Self {
        BeWord::new(p.values().iter().map(|&v| v as u32).collect())
    }

    /// Interpret as a permutation; panics unless the letters are `1..n`.
    pub fn to_permutation(&self) -> Permutation {
        let n = self.letters.len();
        assert_eq!(
            self.letter_set(),
            (1..=n as u32).collect::<Vec<_>>(),
            "word letters must be 1..n to form a permutation"
        );
        Permutation::from_values(self.letters.iter().map(|&v| v as usize).collect())
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    /// The sorted letter set.
    pub fn letter_set(&self) -> Vec<u32> {
        let mut s: Vec<u32> = self.letters.clone();
        s.sort_unstable();
        s
    }

    pub fn arity(&self) -> usize {
        self.letters.len()
    }

    /// Replace the letter `at` by the whole word `block`, keeping every
    /// other letter in place.  Panics if `at` is absent or a remaining
    /// letter collides with the block.
    pub fn splice(&self, at: u32, block: &BeWord) -> BeWord {
        let pos = self
            .letters
            .iter()
            .position(|&l| l == at)
            .unwrap_or_else(|| panic!("letter {at} not present in {self}"));
        let mut letters = Vec::with_capacity(self.letters.len() + block.letters.len() - 1);
        letters.extend_from_slice(&self.letters[..pos]);
        letters.extend_from_slice(&block.letters);
        letters.extend_from_slice(&self.letters[pos + 1..]);
        BeWord::new(letters)
    }

    /// Apply a letter relabelling.
    pub fn map_letters(&self, f: &impl Fn(u32) -> u32) -> BeWord {
        BeWord::new(self.letters.iter().map(|&l| f(l)).collect())
    }
}

impl fmt::Display for BeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        if self.letters.iter().all(|&l| l <= 9) {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
        } else {
            for (i, l) in self.letters.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{l}")?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for BeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A nonzero basis element: a tuple of words over a common letter set with
/// no two consecutive words equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BeTuple {
    levels: Vec<BeWord>,
}

impl BeTuple {
    /// Assemble a tuple; `None` encodes the zero identification when two
    /// consecutive words coincide.  Panics if the words are over different
    /// letter sets or the tuple is empty.
    pub fn new(levels: Vec<BeWord>) -> Option<Self> {
        assert!(!levels.is_empty(), "tuples are nonempty");
        let set = levels[0].letter_set();
        for w in &levels[1..] {
            assert_eq!(w.letter_set(), set, "all words must order the same letters");
        }
        if levels.windows(2).any(|p| p[0] == p[1]) {
            return None;
        }
        Some(BeTuple { levels })
    }

    /// The degree-0 tuple of a single word.
    pub fn single(word: BeWord) -> Self {
        BeTuple { levels: vec![word] }
    }

    /// A tuple of permutations of `1..n`.
    pub fn from_permutations(perms: &[Permutation]) -> Option<Self> {
        BeTuple::new(perms.iter().map(BeWord::from_permutation).collect())
    }

    pub fn levels(&self) -> &[BeWord] {
        &self.levels
    }

    pub fn arity(&self) -> usize {
        self.levels[0].arity()
    }

    /// The sorted common letter set.
    pub fn letter_set(&self) -> Vec<u32> {
        self.levels[0].letter_set()
    }

    pub fn map_letters(&self, f: &impl Fn(u32) -> u32) -> Option<BeTuple> {
        BeTuple::new(self.levels.iter().map(|w| w.map_letters(f)).collect())
    }
}

impl ChainLabel for BeTuple {
    fn degree(&self) -> i64 {
        self.levels.len() as i64 - 1
    }
}

impl fmt::Display for BeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.levels.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for BeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A one-term chain, or zero when the tuple is identified with zero.
pub fn be_term(tuple: Option<BeTuple>, coeff: Scalar) -> Chain<BeTuple> {
    match tuple {
        Some(t) => Chain::term(t, coeff),
        None => Chain::zero(),
    }
}

/// Alternating sum of the word deletions; deleting a word may make two
/// equal words consecutive, and those terms vanish.
pub fn be_differential(x: &BeTuple, field: &Field) -> Chain<BeTuple> {
    let mut out = Chain::zero();
    if x.levels.len() == 1 {
        return out;
    }
    for i in 0..x.levels.len() {
        let mut levels = x.levels.clone();
        levels.remove(i);
        let sign = if i % 2 == 0 { 1 } else { -1 };
        out = out.add(&be_term(BeTuple::new(levels), field.integer(sign)));
    }
    out
}

/// The coproduct `sum over k of (w_0..w_k) tensor (w_k..w_d)`.
pub fn be_diagonal(x: &BeTuple, field: &Field) -> Chain<Pair<BeTuple, BeTuple>> {
    let mut out = Chain::zero();
    for k in 0..x.levels.len() {
        let left = BeTuple::new(x.levels[..=k].to_vec());
        let right = BeTuple::new(x.levels[k..].to_vec());
        if let (Some(l), Some(r)) = (left, right) {
            out = out.add(&Chain::term(Pair(l, r), field.one()));
        }
    }
    out
}

/// Prepend the word `sigma`: the degree `+1` homotopy of the retraction
/// onto `sigma`.  Vanishes on tuples already starting with `sigma`.
pub fn be_homotopy(sigma: &BeWord, x: &BeTuple, field: &Field) -> Chain<BeTuple> {
    assert_eq!(sigma.letter_set(), x.letter_set(), "homotopy word must match the letter set");
    let mut levels = Vec::with_capacity(x.levels.len() + 1);
    levels.push(sigma.clone());
    levels.extend(x.levels.iter().cloned());
    be_term(BeTuple::new(levels), field.one())
}

/// The retraction onto `sigma`: every degree-0 tuple maps to `(sigma)`,
/// higher degrees map to zero.
pub fn be_projector(sigma: &BeWord, x: &BeTuple, field: &Field) -> Chain<BeTuple> {
    assert_eq!(sigma.letter_set(), x.letter_set(), "projector word must match the letter set");
    if x.degree() == 0 {
        Chain::term(BeTuple::single(sigma.clone()), field.one())
    } else {
        Chain::zero()
    }
}

/// Diagonal left-translation action of a permutation on a tuple over the
/// letters `1..n`: every letter `l` becomes `sigma(l)` in every word.
pub fn be_act(sigma: &Permutation, x: &BeTuple) -> Option<BeTuple> {
    assert_eq!(
        x.letter_set(),
        (1..=x.arity() as u32).collect::<Vec<_>>(),
        "permutation action needs letters 1..n"
    );
    x.map_letters(&|l| sigma.apply(l as usize) as u32)
}

/// Composition over letter sets: substitute `y` for the letter `at` of `x`.
///
/// Word-level substitution splices `y`'s word into the `at` position; in
/// higher degrees the result sums over monotone staircase paths through the
/// grid of level pairs, with the sign of the corresponding shuffle.  The
/// letters of `y` must be disjoint from the remaining letters of `x`.
pub fn be_compose_at_letter(
    x: &BeTuple,
    y: &BeTuple,
    at: u32,
    field: &Field,
) -> Chain<BeTuple> {
    let x_rest: BTreeSet<u32> = x.letter_set().into_iter().filter(|&l| l != at).collect();
    for l in y.letter_set() {
        assert!(!x_rest.contains(&l), "letter {l} of the inserted element collides");
    }
    let p = x.levels.len() - 1;
    let q = y.levels.len() - 1;
    let mut out = Chain::zero();
    for path in staircase_paths(p, q) {
        let levels: Vec<BeWord> = path
            .iter()
            .map(|&(a, b)| x.levels[a].splice(at, &y.levels[b]))
            .collect();
        out = out.add(&be_term(
            BeTuple::new(levels),
            field.integer(path_sign(&path)),
        ));
    }
    out
}

/// Standard-letter composition: `x` over `1..p` and `y` over `1..q` give a
/// result over `1..p+q-1`, with `y`'s letters occupying `i..i+q-1`.
pub fn be_compose(x: &BeTuple, y: &BeTuple, i: usize, field: &Field) -> Chain<BeTuple> {
    let p = x.arity();
    let q = y.arity();
    assert!((1..=p).contains(&i), "composition index {i} out of range 1..{p}");
    assert_eq!(x.letter_set(), (1..=p as u32).collect::<Vec<_>>());
    assert_eq!(y.letter_set(), (1..=q as u32).collect::<Vec<_>>());
    // Letter 0 marks the substitution site.
    let x_shift = x
        .map_letters(&|l| {
            if (l as usize) < i {
                l
            } else if l as usize == i {
                0
            } else {
                l + q as u32 - 1
            }
        })
        .expect("relabelling preserves tuples");
    let y_shift = y
        .map_letters(&|l| l + i as u32 - 1)
        .expect("relabelling preserves tuples");
    be_compose_at_letter(&x_shift, &y_shift, 0, field)
}

/// Bilinear extension of the letter-set composition to chains.
pub fn be_compose_chains(
    x: &Chain<BeTuple>,
    y: &Chain<BeTuple>,
    at: u32,
    field: &Field,
) -> Chain<BeTuple> {
    let mut out = Chain::zero();
    for (xt, xc) in x.iter() {
        for (yt, yc) in y.iter() {
            out = out.add(&be_compose_at_letter(xt, yt, at, field).scale(&xc.mul(yc)));
        }
    }
    out
}

/// Monotone staircase paths from `(0,0)` to `(p,q)`, each a full vertex
/// list of length `p + q + 1`.
fn staircase_paths(p: usize, q: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut cur = vec![(0usize, 0usize)];
    fn rec(
        p: usize,
        q: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let &(a, b) = cur.last().expect("path nonempty");
        if a == p && b == q {
            out.push(cur.clone());
            return;
        }
        if a < p {
            cur.push((a + 1, b));
            rec(p, q, cur, out);
            cur.pop();
        }
        if b < q {
            cur.push((a, b + 1));
            rec(p, q, cur, out);
            cur.pop();
        }
    }
    rec(p, q, &mut cur, &mut out);
    out
}

/// The sign of the shuffle a staircase path encodes: the parity of pairs
/// of steps where a vertical step precedes a horizontal one.
fn path_sign(path: &[(usize, usize)]) -> i64 {
    let steps: Vec<bool> = path
        .windows(2)
        .map(|w| w[1].0 > w[0].0) // true for a horizontal (first-factor) step
        .collect();
    let mut inversions = 0usize;
    for k in 0..steps.len() {
        if !steps[k] {
            inversions += steps[k + 1..].iter().filter(|&&h| h).count();
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All basis tuples of the given arity and degree over the letters `1..r`.
pub fn enumerate_be(r: usize, degree: usize) -> Vec<BeTuple> {
    let words: Vec<BeWord> = symgroups::all_permutations(r)
        .iter()
        .map(BeWord::from_permutation)
        .collect();
    let mut tuples: Vec<Vec<BeWord>> = words.iter().map(|w| vec![w.clone()]).collect();
    for _ in 0..degree {
        let mut next = Vec::new();
        for t in &tuples {
            for w in &words {
                if t.last() != Some(w) {
                    let mut ext = t.clone();
                    ext.push(w.clone());
                    next.push(ext);
                }
            }
        }
        tuples = next;
    }
    tuples
        .into_iter()
        .map(|levels| BeTuple::new(levels).expect("enumerated tuples are nondegenerate"))
        .collect()
}

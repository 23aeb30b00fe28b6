//! Exact scalars: arbitrary-precision rationals or a prime field `F_p`.
//!
//! A [`Field`] is selected once per computation; a [`Scalar`] carries its
//! mode so that accidental mixing of modes panics instead of silently
//! coercing.  Prime-field elements are canonical residues `0 ≤ v < p`
//! with `p < 2^31`, so products fit in `u64` without overflow.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The scalar mode of a computation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Field {
    /// Exact rational numbers of unbounded size.
    Rational,
    /// The prime field `F_p`.
    Prime(u64),
}

impl Field {
    /// Parses `"q"` or a prime number literal.
    pub fn parse(s: &str) -> Result<Field, String> {
        match s {
            "q" | "Q" | "rational" => Ok(Field::Rational),
            _ => {
                let p: u64 = s.parse().map_err(|_| format!("not a field: {s}"))?;
                Field::prime(p)
            }
        }
    }

    /// The prime field `F_p`; errors unless `p` is a prime below `2^31`.
    pub fn prime(p: u64) -> Result<Field, String> {
        if p >= 1 << 31 {
            return Err(format!("prime {p} too large (need p < 2^31)"));
        }
        if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(format!("{p} is not prime"));
        }
        Ok(Field::Prime(p))
    }

    /// The zero of this field.
    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::zero()),
            Field::Prime(p) => Scalar::Fp { p, v: 0 },
        }
    }

    /// The one of this field.
    pub fn one(self) -> Scalar {
        self.integer(1)
    }

    /// The image of an integer in this field.
    pub fn integer(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let v = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, v }
            }
        }
    }

    /// Whether this field has characteristic 2 (where all signs vanish).
    pub fn char_is_two(self) -> bool {
        matches!(self, Field::Prime(2))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "{p}"),
        }
    }
}

/// An exact scalar in one of the two modes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u64, v: u64 },
}

impl Scalar {
    /// The field this scalar lives in.
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    fn assert_same_mode(&self, other: &Scalar) {
        assert_eq!(
            self.field(),
            other.field(),
            "scalar mode mismatch: {} vs {}",
            self.field(),
            other.field()
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.assert_same_mode(other);
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                p: *p,
                v: (a + b) % p,
            },
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: (p - v) % p,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.assert_same_mode(other);
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                p: *p,
                v: (a * b) % p,
            },
            _ => unreachable!(),
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inverse(&self) -> Scalar {
        match self {
            Scalar::Q(a) => {
                assert!(!a.is_zero(), "inverting zero");
                Scalar::Q(a.recip())
            }
            Scalar::Fp { p, v } => {
                assert!(*v != 0, "inverting zero");
                // Fermat: v^(p-2) mod p.
                let mut acc: u64 = 1;
                let mut base = *v;
                let mut e = p - 2;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    e >>= 1;
                }
                Scalar::Fp { p: *p, v: acc }
            }
        }
    }

    /// Multiplies by an integer (converted into this scalar's own mode).
    pub fn mul_int(&self, n: i64) -> Scalar {
        self.mul(&self.field().integer(n))
    }

    /// `n`-th power for `n ≥ 0`.
    pub fn pow(&self, n: u32) -> Scalar {
        let mut acc = self.field().one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Scalar {
    /// Whether the rational is negative (always false in `F_p`, where the
    /// canonical residue is printed as-is).
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_negative(),
            Scalar::Fp { .. } => false,
        }
    }

    /// Parses a scalar in the given field: `3`, `-3`, or `3/2` (rationals).
    pub fn parse(field: Field, s: &str) -> Result<Scalar, String> {
        match field {
            Field::Rational => BigRational::from_str(s)
                .map(Scalar::Q)
                .map_err(|e| format!("bad rational {s}: {e}")),
            Field::Prime(p) => {
                let n: i64 = s.parse().map_err(|_| format!("bad integer {s}"))?;
                Ok(Scalar::Fp {
                    p,
                    v: n.rem_euclid(p as i64) as u64,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = Field::Rational;
        let third = f.integer(1).mul(&f.integer(3).inverse());
        let sum = third.add(&third).add(&third);
        assert!(sum.is_one());
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(7).unwrap();
        for v in 1..7 {
            let s = f.integer(v);
            assert!(s.mul(&s.inverse()).is_one());
        }
    }

    #[test]
    fn primality_is_checked() {
        assert!(Field::prime(6).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(101).is_ok());
    }

    #[test]
    #[should_panic(expected = "scalar mode mismatch")]
    fn mixing_modes_panics() {
        let a = Field::Rational.one();
        let b = Field::prime(5).unwrap().one();
        let _ = a.add(&b);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Field::Rational.integer(-3).to_string(), "-3");
        let half = Field::Rational.integer(1).mul(&Field::Rational.integer(2).inverse());
        assert_eq!(half.to_string(), "1/2");
        assert_eq!(Field::prime(5).unwrap().integer(-1).to_string(), "4");
    }
}

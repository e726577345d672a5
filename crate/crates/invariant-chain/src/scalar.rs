//! Exact scalars of the ground field F: arbitrary-precision rationals in
//! characteristic zero, residues modulo a prime in characteristic p.

use crate::error::{Error, Result};
use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

/// Field characteristic: zero or a prime below 2^31.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Char {
    Zero,
    Prime(u64),
}

impl Char {
    /// Validates a user-supplied characteristic: 0 or a prime < 2^31.
    pub fn new(p: u64) -> Result<Char> {
        if p == 0 {
            return Ok(Char::Zero);
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidInput(format!(
                "characteristic {p} is not below 2^31"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!(
                "characteristic {p} is not 0 or a prime"
            )));
        }
        Ok(Char::Prime(p))
    }

    pub fn is_zero(self) -> bool {
        self == Char::Zero
    }
}

impl fmt::Display for Char {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Char::Zero => write!(f, "0"),
            Char::Prime(p) => write!(f, "{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of the ground field F.
///
/// Rationals are kept in lowest terms with positive denominator (maintained
/// by `BigRational`); residues are kept reduced into `[0, p)`. Arithmetic
/// panics on operands of different characteristics; the polynomial layer
/// checks domains first and reports `Error::DomainMismatch`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { modulus: u64, value: u64 },
}

impl Scalar {
    pub fn zero(ch: Char) -> Scalar {
        match ch {
            Char::Zero => Scalar::Rational(BigRational::zero()),
            Char::Prime(p) => Scalar::Residue { modulus: p, value: 0 },
        }
    }

    pub fn one(ch: Char) -> Scalar {
        match ch {
            Char::Zero => Scalar::Rational(BigRational::one()),
            Char::Prime(p) => Scalar::Residue { modulus: p, value: 1 % p },
        }
    }

    pub fn from_i64(n: i64, ch: Char) -> Scalar {
        match ch {
            Char::Zero => Scalar::Rational(BigRational::from(BigInt::from(n))),
            Char::Prime(p) => Scalar::Residue {
                modulus: p,
                value: n.rem_euclid(p as i64) as u64,
            },
        }
    }

    /// Builds num/den in the requested characteristic; `den` must not map to zero.
    pub fn from_ratio(num: i64, den: i64, ch: Char) -> Result<Scalar> {
        let d = Scalar::from_i64(den, ch);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::from_i64(num, ch).mul(&d.inv()))
    }

    pub fn characteristic(&self) -> Char {
        match self {
            Scalar::Rational(_) => Char::Zero,
            Scalar::Residue { modulus, .. } => Char::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { modulus, value } => *value == 1 % *modulus,
        }
    }

    fn check_same(&self, other: &Scalar) {
        assert_eq!(
            self.characteristic(),
            other.characteristic(),
            "scalar arithmetic across characteristics"
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check_same(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { modulus, value: a }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue { modulus: *modulus, value: (a + b) % modulus }
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check_same(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { modulus, value: a }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue { modulus: *modulus, value: (a * b) % modulus }
            }
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Residue { modulus, value } => Scalar::Residue {
                modulus: *modulus,
                value: (modulus - value) % modulus,
            },
        }
    }

    /// Multiplicative inverse; panics on zero (call sites guard).
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero scalar");
        match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { modulus, value } => Scalar::Residue {
                modulus: *modulus,
                value: mod_pow(*value, *modulus - 2, *modulus),
            },
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul(&other.inv()))
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.characteristic());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base.clone());
            e >>= 1;
        }
        acc
    }

    /// Sign in characteristic zero (-1, 0, +1); residues report 0 or +1.
    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Rational(q) => match q.numer().sign() {
                Sign::Minus => -1,
                Sign::NoSign => 0,
                Sign::Plus => 1,
            },
            Scalar::Residue { value, .. } => (*value != 0) as i32,
        }
    }

    /// Absolute value; identity on residues.
    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(q.abs()),
            r => r.clone(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            _ => None,
        }
    }
}

/// value^exp mod m for m < 2^31.
fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

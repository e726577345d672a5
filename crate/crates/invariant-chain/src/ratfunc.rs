//! The rational function field K = F(a1, b1, a2, b2, ...).
//!
//! Fractions are content-normalized, not gcd-reduced: the denominator's
//! scalar content is removed and its leading coefficient is sign/unit
//! normalized, which makes the representative deterministic. Equality is
//! decided by cross-multiplication, so no multivariate gcd is needed.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{Char, Scalar};
use crate::var::VarRef;
use rand::Rng;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of K as a normalized fraction of two polynomials.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds `num/den`; rejects a zero denominator and mismatched domains.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.characteristic() != den.characteristic() {
            return Err(Error::DomainMismatch(format!(
                "characteristic {} vs {}",
                num.characteristic(),
                den.characteristic()
            )));
        }
        Ok(RatFunc::normalized(num, den))
    }

    fn normalized(mut num: Poly, mut den: Poly) -> RatFunc {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc {
                num,
                den: Poly::one(den.characteristic()),
            };
        }
        // Not a gcd: a single exact-division attempt. It collapses the
        // quotients that elimination chains produce and leaves genuinely
        // mixed fractions alone.
        if !den.is_constant() {
            if let Some(q) = num.div_exact(&den) {
                num = q;
                den = Poly::one(den.characteristic());
            }
        }
        let unit = den.normalization_unit();
        if unit.is_one() {
            return RatFunc { num, den };
        }
        let inv = unit.inv();
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        let ch = p.characteristic();
        RatFunc { num: p, den: Poly::one(ch) }
    }

    pub fn constant(c: Scalar) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn var(v: VarRef, ch: Char) -> RatFunc {
        RatFunc::from_poly(Poly::var(v, ch))
    }

    pub fn zero(ch: Char) -> RatFunc {
        RatFunc::from_poly(Poly::zero(ch))
    }

    pub fn one(ch: Char) -> RatFunc {
        RatFunc::from_poly(Poly::one(ch))
    }

    pub fn from_i64(n: i64, ch: Char) -> RatFunc {
        RatFunc::from_poly(Poly::from_i64(n, ch))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn characteristic(&self) -> Char {
        self.den.characteristic()
    }

    /// Zero iff the numerator is the zero polynomial; exact because the
    /// numerator is in canonical form.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &RatFunc::one(self.characteristic())
    }

    /// True when the value lies in F, i.e. both parts are constants.
    pub fn is_scalar(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn max_index(&self) -> u32 {
        self.num.max_index().max(self.den.max_index())
    }

    fn same_domain(&self, other: &RatFunc) -> Result<()> {
        if self.characteristic() != other.characteristic() {
            return Err(Error::DomainMismatch(format!(
                "characteristic {} vs {}",
                self.characteristic(),
                other.characteristic()
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &RatFunc) -> Result<RatFunc> {
        self.same_domain(other)?;
        // Shared denominators stay shared; this keeps iterated sums like
        // Cramer combinations from compounding the denominator.
        if self.den == other.den {
            let num = self.num.checked_add(&other.num)?;
            if num.is_zero() {
                return Ok(RatFunc::zero(self.characteristic()));
            }
            return Ok(RatFunc { num, den: self.den.clone() });
        }
        // One denominator dividing the other is the common case in
        // elimination chains; reuse the larger one instead of multiplying.
        if self.den.total_degree() <= other.den.total_degree() {
            if let Some(q) = other.den.div_exact(&self.den) {
                let num = &(&self.num * &q) + &other.num;
                return Ok(RatFunc::normalized(num, other.den.clone()));
            }
        } else if let Some(q) = self.den.div_exact(&other.den) {
            let num = &self.num + &(&other.num * &q);
            return Ok(RatFunc::normalized(num, self.den.clone()));
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        let den = &self.den * &other.den;
        Ok(RatFunc::normalized(num, den))
    }

    pub fn checked_sub(&self, other: &RatFunc) -> Result<RatFunc> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &RatFunc) -> Result<RatFunc> {
        self.same_domain(other)?;
        // Cancel across the product by exact division before multiplying
        // out; quotient chains like (b*p/a) * (a/e) stay flat this way.
        let one = Poly::one(self.characteristic());
        let (mut n1, mut d2) = (self.num.clone(), other.den.clone());
        if !d2.is_constant() {
            if let Some(q) = n1.div_exact(&d2) {
                n1 = q;
                d2 = one.clone();
            }
        }
        let (mut n2, mut d1) = (other.num.clone(), self.den.clone());
        if !d1.is_constant() {
            if let Some(q) = n2.div_exact(&d1) {
                n2 = q;
                d1 = one;
            }
        }
        let num = n1.checked_mul(&n2)?;
        let den = &d1 * &d2;
        Ok(RatFunc::normalized(num, den))
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc> {
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn neg_ref(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        RatFunc::normalized(self.num.pow(e), self.den.pow(e))
    }

    pub fn scale(&self, c: &Scalar) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero(self.characteristic());
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Clears the denominator: the numerator of the normalized fraction.
    /// Nonzero iff the value is nonzero.
    pub fn cleared_numerator(&self) -> &Poly {
        &self.num
    }

    /// Evaluates at scalar values; `None` when the denominator vanishes.
    pub fn eval(&self, assign: &BTreeMap<VarRef, Scalar>) -> Result<Option<Scalar>> {
        let den = self.den.eval(assign)?;
        if den.is_zero() {
            return Ok(None);
        }
        let num = self.num.eval(assign)?;
        Ok(Some(num.mul(&den.inv())))
    }

    /// Randomized equality check by evaluation at random points. Never used
    /// for certificates; exact equality is `==`.
    pub fn probably_equal<R: Rng>(&self, other: &RatFunc, rng: &mut R, trials: u32) -> bool {
        if self.same_domain(other).is_err() {
            return false;
        }
        let ch = self.characteristic();
        let mut vars: std::collections::BTreeSet<VarRef> = self.num.vars().collect();
        vars.extend(self.den.vars());
        vars.extend(other.num.vars());
        vars.extend(other.den.vars());
        let mut done = 0;
        let mut attempts = 0;
        while done < trials {
            attempts += 1;
            if attempts > 20 * trials + 20 {
                // Denominators kept vanishing; fall back to the exact test.
                return self == other;
            }
            let assign: BTreeMap<VarRef, Scalar> = vars
                .iter()
                .map(|v| {
                    let val = match ch {
                        Char::Zero => Scalar::from_i64(rng.random_range(-100_000..=100_000), ch),
                        Char::Prime(p) => Scalar::from_i64(rng.random_range(0..p as i64), ch),
                    };
                    (*v, val)
                })
                .collect();
            match (self.eval(&assign), other.eval(&assign)) {
                (Ok(Some(l)), Ok(Some(r))) => {
                    if l != r {
                        return false;
                    }
                    done += 1;
                }
                _ => continue,
            }
        }
        true
    }
}

/// Field equality by cross-multiplication on canonical polynomials.
impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.characteristic() != other.characteristic() {
            return false;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.checked_add(rhs).expect("rational function domain mismatch")
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.checked_sub(rhs).expect("rational function domain mismatch")
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.checked_mul(rhs).expect("rational function domain mismatch")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.neg_ref()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

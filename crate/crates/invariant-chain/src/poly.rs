//! Sparse multivariate polynomials over F in the indeterminates `a<n>`, `b<n>`.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::scalar::{Char, Scalar};
use crate::var::VarRef;
use num::{BigInt, BigRational, Integer, One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial in canonical form: no zero coefficients stored, terms keyed
/// by monomial in the canonical graded order. The empty term map is 0.
///
/// Every coefficient shares the polynomial's characteristic, which is kept
/// explicitly so the zero polynomial still knows its domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    characteristic: Char,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(ch: Char) -> Poly {
        Poly { characteristic: ch, terms: BTreeMap::new() }
    }

    pub fn one(ch: Char) -> Poly {
        Poly::constant(Scalar::one(ch))
    }

    pub fn constant(c: Scalar) -> Poly {
        let ch = c.characteristic();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { characteristic: ch, terms }
    }

    pub fn var(v: VarRef, ch: Char) -> Poly {
        Poly::term(Scalar::one(ch), Monomial::var(v))
    }

    pub fn term(c: Scalar, m: Monomial) -> Poly {
        let ch = c.characteristic();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { characteristic: ch, terms }
    }

    pub fn from_terms(ch: Char, pairs: impl IntoIterator<Item = (Monomial, Scalar)>) -> Poly {
        let mut p = Poly::zero(ch);
        for (m, c) in pairs {
            assert_eq!(c.characteristic(), ch, "coefficient characteristic mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn from_i64(n: i64, ch: Char) -> Poly {
        Poly::constant(Scalar::from_i64(n, ch))
    }

    pub fn characteristic(&self) -> Char {
        self.characteristic
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(Scalar::is_one)
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(Monomial::is_one)
    }

    /// The coefficient of the monomial 1.
    pub fn constant_coeff(&self) -> Scalar {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.characteristic))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.characteristic))
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Leading (largest) term in the canonical order; `None` for 0.
    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn max_index(&self) -> u32 {
        self.terms.keys().map(Monomial::max_index).max().unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = VarRef> + '_ {
        let mut seen = std::collections::BTreeSet::new();
        self.terms.keys().for_each(|m| {
            seen.extend(m.vars());
        });
        seen.into_iter()
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    fn same_domain(&self, other: &Poly) -> Result<()> {
        if self.characteristic != other.characteristic {
            return Err(Error::DomainMismatch(format!(
                "characteristic {} vs {}",
                self.characteristic, other.characteristic
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.same_domain(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.same_domain(other)?;
        let mut out = Poly::zero(self.characteristic);
        for (ml, cl) in &self.terms {
            for (mr, cr) in &other.terms {
                out.add_term(ml.mul(mr), cl.mul(cr));
            }
        }
        Ok(out)
    }

    pub fn neg_ref(&self) -> Poly {
        Poly {
            characteristic: self.characteristic,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.characteristic);
        }
        Poly {
            characteristic: self.characteristic,
            terms: self.terms.iter().map(|(m, s)| (m.clone(), s.mul(c))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.characteristic);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same domain");
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base).expect("same domain");
            }
        }
        acc
    }

    /// Exact division: returns `Some(q)` with `self = q * divisor`, or
    /// `None` when the division does not come out even. Coefficients live
    /// in a field, so leading-term division decides divisibility.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero(self.characteristic));
        }
        if self.characteristic != divisor.characteristic {
            return None;
        }
        let (dm, dc) = divisor.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let dc_inv = dc.inv();
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.characteristic);
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.div(&dm)?;
            let qc = rc.mul(&dc_inv);
            let qterm = Poly::term(qc, qm);
            rem = rem.checked_sub(&qterm.checked_mul(divisor).ok()?).ok()?;
            quot = quot.checked_add(&qterm).ok()?;
        }
        Some(quot)
    }

    /// The canonical unit of the polynomial, used to normalize fraction
    /// denominators: in characteristic zero, the signed scalar content
    /// (gcd of coefficient numerators over lcm of denominators, carrying
    /// the sign of the leading coefficient); in characteristic p, the
    /// leading coefficient. Dividing by it leaves a primitive polynomial
    /// with positive leading coefficient (char 0) or a monic one (char p).
    pub fn normalization_unit(&self) -> Scalar {
        if self.is_zero() {
            return Scalar::one(self.characteristic);
        }
        match self.characteristic {
            Char::Prime(_) => self.leading_term().expect("nonzero").1.clone(),
            Char::Zero => {
                let mut num_gcd = BigInt::zero();
                let mut den_lcm = BigInt::one();
                for c in self.terms.values() {
                    let q = c.as_rational().expect("char-0 coefficient");
                    num_gcd = num_gcd.gcd(q.numer());
                    den_lcm = den_lcm.lcm(q.denom());
                }
                let mut content = BigRational::new(num_gcd, den_lcm);
                if self.leading_term().expect("nonzero").1.signum() < 0 {
                    content = -content;
                }
                Scalar::Rational(content)
            }
        }
    }

    /// Evaluates the polynomial at scalar values for every variable.
    /// Variables missing from the assignment are an error.
    pub fn eval(&self, assign: &BTreeMap<VarRef, Scalar>) -> Result<Scalar> {
        let mut acc = Scalar::zero(self.characteristic);
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in m.iter() {
                let val = assign
                    .get(&v)
                    .ok_or(Error::IncompleteSubstitution(v))?;
                term = term.mul(&val.pow(e));
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("polynomial domain mismatch")
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("polynomial domain mismatch")
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomial domain mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.neg_ref()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Leading term first: descending canonical order.
        for (pos, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.signum() < 0;
            let mag = if neg { c.neg() } else { c.clone() };
            if pos == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: u32) -> Poly {
        Poly::var(VarRef::a(i), Char::Zero)
    }

    fn b(i: u32) -> Poly {
        Poly::var(VarRef::b(i), Char::Zero)
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&a(1) + &b(1)) * &(&a(1) - &b(1));
        let expect = &(&a(1) * &a(1)) - &(&b(1) * &b(1));
        assert_eq!(lhs, expect);
        assert_eq!(lhs.to_string(), "a1^2 - b1^2");
    }

    #[test]
    fn frobenius_in_char_two() {
        let ch = Char::Prime(2);
        let a1 = Poly::var(VarRef::a(1), ch);
        let b1 = Poly::var(VarRef::b(1), ch);
        let sq = (&a1 + &b1).pow(2);
        assert_eq!(sq, &(&a1 * &a1) + &(&b1 * &b1));
        assert_eq!(sq.to_string(), "a1^2 + b1^2");
    }

    #[test]
    fn zero_absorbs() {
        let z = Poly::zero(Char::Zero);
        assert_eq!(&a(1) * &z, z);
        assert!((&a(1) * &z).is_zero());
    }

    #[test]
    fn mixed_characteristic_is_an_error() {
        let p = Poly::var(VarRef::a(1), Char::Zero);
        let q = Poly::var(VarRef::a(1), Char::Prime(5));
        assert!(matches!(p.checked_add(&q), Err(Error::DomainMismatch(_))));
        assert!(matches!(p.checked_mul(&q), Err(Error::DomainMismatch(_))));
    }

    #[test]
    fn display_sorts_descending_with_signs() {
        let p = Poly::from_terms(
            Char::Zero,
            [
                (
                    Monomial::from_exps([(VarRef::a(3), 1)]),
                    Scalar::from_ratio(-1, 2, Char::Zero).unwrap(),
                ),
                (
                    Monomial::from_exps([(VarRef::a(1), 2), (VarRef::b(2), 1)]),
                    Scalar::from_i64(3, Char::Zero),
                ),
            ],
        );
        assert_eq!(p.to_string(), "3*a1^2*b2 - 1/2*a3");
    }

    #[test]
    fn exact_division() {
        let prod = &(&a(1) + &b(2)) * &(&a(2) - &b(1));
        let q = prod.div_exact(&(&a(1) + &b(2))).unwrap();
        assert_eq!(q, &a(2) - &b(1));
        assert_eq!((&a(1) + &b(1)).div_exact(&a(2)), None);
    }

    #[test]
    fn normalization_unit_char0() {
        // 4*a1 - 6*b1: content 2, leading coefficient (a1 term) positive.
        let p = &a(1).scale(&Scalar::from_i64(4, Char::Zero))
            - &b(1).scale(&Scalar::from_i64(6, Char::Zero));
        assert_eq!(p.normalization_unit(), Scalar::from_i64(2, Char::Zero));
        // Flip the sign of the leading coefficient; unit follows it.
        assert_eq!(p.neg_ref().normalization_unit(), Scalar::from_i64(-2, Char::Zero));
    }

    #[test]
    fn eval_at_point() {
        let p = &(&a(1) * &a(1)) + &b(2); // a1^2 + b2
        let mut at = BTreeMap::new();
        at.insert(VarRef::a(1), Scalar::from_i64(3, Char::Zero));
        at.insert(VarRef::b(2), Scalar::from_i64(-1, Char::Zero));
        assert_eq!(p.eval(&at).unwrap(), Scalar::from_i64(8, Char::Zero));
        at.remove(&VarRef::b(2));
        assert!(matches!(
            p.eval(&at),
            Err(Error::IncompleteSubstitution(v)) if v == VarRef::b(2)
        ));
    }
}

//! The ring `R = K[[x,y]]` truncated at a total degree d.
//!
//! A series stores only its nonzero coefficients, keyed by the (x,y)
//! bidegree; every operation truncates at d, so computing in the truncated
//! ring agrees with computing exactly and truncating afterwards.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::Char;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Bidegree of a series monomial x^i * y^j, ordered by (i + j, i) so that
/// iteration and display follow the canonical order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bideg {
    pub x: u32,
    pub y: u32,
}

impl Bideg {
    pub fn new(x: u32, y: u32) -> Bideg {
        Bideg { x, y }
    }

    pub fn total(self) -> u32 {
        self.x + self.y
    }
}

impl Ord for Bideg {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.total(), self.x).cmp(&(other.total(), other.x))
    }
}

impl PartialOrd for Bideg {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of `K[[x,y]]` truncated at total degree `trunc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    characteristic: Char,
    trunc: u32,
    coeffs: BTreeMap<Bideg, RatFunc>,
}

impl PowerSeries {
    pub fn zero(ch: Char, trunc: u32) -> PowerSeries {
        PowerSeries { characteristic: ch, trunc, coeffs: BTreeMap::new() }
    }

    pub fn one(ch: Char, trunc: u32) -> PowerSeries {
        PowerSeries::constant(RatFunc::one(ch), trunc)
    }

    /// Embeds an element of K as a degree-0 series.
    pub fn constant(c: RatFunc, trunc: u32) -> PowerSeries {
        let ch = c.characteristic();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(Bideg::new(0, 0), c);
        }
        PowerSeries { characteristic: ch, trunc, coeffs }
    }

    pub fn from_poly(p: Poly, trunc: u32) -> PowerSeries {
        PowerSeries::constant(RatFunc::from_poly(p), trunc)
    }

    /// The series variable x.
    pub fn var_x(ch: Char, trunc: u32) -> PowerSeries {
        PowerSeries::monomial(RatFunc::one(ch), 1, 0, trunc)
    }

    /// The series variable y.
    pub fn var_y(ch: Char, trunc: u32) -> PowerSeries {
        PowerSeries::monomial(RatFunc::one(ch), 0, 1, trunc)
    }

    /// c * x^i * y^j, dropped silently if i + j exceeds the truncation.
    pub fn monomial(c: RatFunc, i: u32, j: u32, trunc: u32) -> PowerSeries {
        let ch = c.characteristic();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() && i + j <= trunc {
            coeffs.insert(Bideg::new(i, j), c);
        }
        PowerSeries { characteristic: ch, trunc, coeffs }
    }

    pub fn from_coeffs(
        ch: Char,
        trunc: u32,
        entries: impl IntoIterator<Item = ((u32, u32), RatFunc)>,
    ) -> PowerSeries {
        let mut s = PowerSeries::zero(ch, trunc);
        for ((i, j), c) in entries {
            assert_eq!(c.characteristic(), ch, "coefficient characteristic mismatch");
            s.add_coeff(Bideg::new(i, j), c);
        }
        s
    }

    pub fn characteristic(&self) -> Char {
        self.characteristic
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficients in canonical (i+j, i) order.
    pub fn coeffs(&self) -> impl Iterator<Item = (Bideg, &RatFunc)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    /// The coefficient of x^i y^j; zero when absent.
    pub fn coeff(&self, i: u32, j: u32) -> RatFunc {
        self.coeffs
            .get(&Bideg::new(i, j))
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(self.characteristic))
    }

    /// The coefficient of x^0 y^0, an element of K.
    pub fn constant_term(&self) -> RatFunc {
        self.coeff(0, 0)
    }

    /// Least total degree with a nonzero coefficient; `None` for the zero
    /// series (order +infinity).
    pub fn order(&self) -> Option<u32> {
        self.coeffs.keys().map(|d| d.total()).min()
    }

    pub fn max_index(&self) -> u32 {
        self.coeffs.values().map(RatFunc::max_index).max().unwrap_or(0)
    }

    fn add_coeff(&mut self, d: Bideg, c: RatFunc) {
        if c.is_zero() || d.total() > self.trunc {
            return;
        }
        match self.coeffs.entry(d) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().checked_add(&c).expect("same domain");
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    fn same_domain(&self, other: &PowerSeries) -> Result<()> {
        if self.characteristic != other.characteristic {
            return Err(Error::DomainMismatch(format!(
                "characteristic {} vs {}",
                self.characteristic, other.characteristic
            )));
        }
        if self.trunc != other.trunc {
            return Err(Error::DomainMismatch(format!(
                "truncation degree {} vs {}",
                self.trunc, other.trunc
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.same_domain(other)?;
        let mut out = self.clone();
        for (d, c) in &other.coeffs {
            out.add_coeff(*d, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.same_domain(other)?;
        let mut out = PowerSeries::zero(self.characteristic, self.trunc);
        for (dl, cl) in &self.coeffs {
            for (dr, cr) in &other.coeffs {
                if dl.total() + dr.total() > self.trunc {
                    continue;
                }
                let d = Bideg::new(dl.x + dr.x, dl.y + dr.y);
                out.add_coeff(d, cl.checked_mul(cr)?);
            }
        }
        Ok(out)
    }

    pub fn neg_ref(&self) -> PowerSeries {
        PowerSeries {
            characteristic: self.characteristic,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, c.neg_ref())).collect(),
        }
    }

    pub fn scale(&self, c: &RatFunc) -> PowerSeries {
        if c.is_zero() {
            return PowerSeries::zero(self.characteristic, self.trunc);
        }
        PowerSeries {
            characteristic: self.characteristic,
            trunc: self.trunc,
            coeffs: self
                .coeffs
                .iter()
                .map(|(d, v)| (*d, v.checked_mul(c).expect("same domain")))
                .collect(),
        }
    }

    /// Multiplies by the monomial x^i y^j, truncating overflowing terms.
    pub fn shift(&self, i: u32, j: u32) -> PowerSeries {
        let mut out = PowerSeries::zero(self.characteristic, self.trunc);
        for (d, c) in &self.coeffs {
            out.add_coeff(Bideg::new(d.x + i, d.y + j), c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> PowerSeries {
        let mut acc = PowerSeries::one(self.characteristic, self.trunc);
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

    /// Inverse of a unit u: with c the constant term, returns
    /// c^-1 * sum_{k<=d} (1 - c^-1 u)^k, which satisfies u * v = 1 at the
    /// truncation. Errors when the constant term is zero.
    pub fn invert_unit(&self) -> Result<PowerSeries> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::NonUnit);
        }
        let c_inv = c.inv()?;
        // w = 1 - c^-1 u has order >= 1, so the geometric sum stops at d.
        let w = PowerSeries::one(self.characteristic, self.trunc)
            .checked_sub(&self.scale(&c_inv))?;
        let mut acc = PowerSeries::one(self.characteristic, self.trunc);
        let mut power = PowerSeries::one(self.characteristic, self.trunc);
        for _ in 0..self.trunc {
            power = power.checked_mul(&w)?;
            if power.is_zero() {
                break;
            }
            acc = acc.checked_add(&power)?;
        }
        Ok(acc.scale(&c_inv))
    }

    /// Normal form modulo m^k: drops every term of total degree >= k.
    pub fn reduce_mod_m_pow(&self, k: u32) -> PowerSeries {
        PowerSeries {
            characteristic: self.characteristic,
            trunc: self.trunc,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(d, _)| d.total() < k)
                .map(|(d, c)| (*d, c.clone()))
                .collect(),
        }
    }

    /// Normal form modulo (x^2, y^2)R: keeps the terms whose monomial is
    /// divisible by neither x^2 nor y^2, i.e. the span of {1, x, y, xy}.
    pub fn reduce_mod_x2y2(&self) -> PowerSeries {
        PowerSeries {
            characteristic: self.characteristic,
            trunc: self.trunc,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(d, _)| d.x < 2 && d.y < 2)
                .map(|(d, c)| (*d, c.clone()))
                .collect(),
        }
    }

    /// Lowers the truncation degree to d'; raising it is an error.
    pub fn retrunc(&self, d: u32) -> Result<PowerSeries> {
        if d > self.trunc {
            return Err(Error::CannotExtend { have: self.trunc, want: d });
        }
        Ok(PowerSeries {
            characteristic: self.characteristic,
            trunc: d,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.total() <= d)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        })
    }
}

impl Add<&PowerSeries> for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        self.checked_add(rhs).expect("series domain mismatch")
    }
}

impl Sub<&PowerSeries> for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        self.checked_sub(rhs).expect("series domain mismatch")
    }
}

impl Mul<&PowerSeries> for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        self.checked_mul(rhs).expect("series domain mismatch")
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        self.neg_ref()
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, (d, c)) in self.coeffs.iter().enumerate() {
            if pos > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({},{}): {}", d.x, d.y, c)?;
        }
        write!(f, "}}")
    }
}

/// Evaluates a polynomial at series images of its variables: the F-algebra
/// homomorphism sending each occurring variable to `images[v]`, computed in
/// the ring truncated at `trunc`. Every image must carry that truncation
/// degree and the polynomial's characteristic.
pub fn substitute(
    p: &Poly,
    images: &BTreeMap<crate::var::VarRef, PowerSeries>,
    trunc: u32,
) -> Result<PowerSeries> {
    let ch = p.characteristic();
    for (v, img) in images {
        if img.characteristic() != ch {
            return Err(Error::DomainMismatch(format!(
                "image of {v} has characteristic {}, polynomial has {ch}",
                img.characteristic()
            )));
        }
        if img.trunc() != trunc {
            return Err(Error::DomainMismatch(format!(
                "image of {v} is truncated at {}, expected {trunc}",
                img.trunc()
            )));
        }
    }
    let mut powers: BTreeMap<(crate::var::VarRef, u32), PowerSeries> = BTreeMap::new();
    let mut acc = PowerSeries::zero(ch, trunc);
    for (m, c) in p.terms() {
        let mut term = PowerSeries::constant(RatFunc::constant(c.clone()), trunc);
        for (v, e) in m.iter() {
            let img = images.get(&v).ok_or(Error::IncompleteSubstitution(v))?;
            let powered = powers
                .entry((v, e))
                .or_insert_with(|| img.pow(e))
                .clone();
            term = term.checked_mul(&powered)?;
        }
        acc = acc.checked_add(&term)?;
    }
    Ok(acc)
}

/// Parses the canonical series form `{(i,j): <ratfunc>, ...}`.
pub fn parse_series(src: &str, ch: Char, trunc: u32) -> Result<PowerSeries> {
    let body = src
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| Error::Parse("series text must be wrapped in { }".into()))?;
    let mut out = PowerSeries::zero(ch, trunc);
    let mut rest = body.trim();
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse("expected '(i,j)' key".into()))?;
        let close = open
            .find(')')
            .ok_or_else(|| Error::Parse("unterminated '(i,j)' key".into()))?;
        let (key, tail) = open.split_at(close);
        let mut parts = key.split(',');
        let i: u32 = parts
            .next()
            .and_then(|t| t.trim().parse().ok())
            .ok_or_else(|| Error::Parse("bad x-exponent".into()))?;
        let j: u32 = parts
            .next()
            .and_then(|t| t.trim().parse().ok())
            .ok_or_else(|| Error::Parse("bad y-exponent".into()))?;
        if parts.next().is_some() {
            return Err(Error::Parse("key must be a pair".into()));
        }
        if i + j > trunc {
            return Err(Error::Parse(format!(
                "term x^{i}y^{j} exceeds truncation degree {trunc}"
            )));
        }
        let tail = tail
            .strip_prefix(')')
            .and_then(|t| t.trim_start().strip_prefix(':'))
            .ok_or_else(|| Error::Parse("expected ':' after key".into()))?;
        // The coefficient runs to the next top-level comma.
        let mut depth = 0usize;
        let mut split_at = tail.len();
        for (pos, byte) in tail.bytes().enumerate() {
            match byte {
                b'(' => depth += 1,
                b')' => depth = depth.saturating_sub(1),
                b',' if depth == 0 => {
                    split_at = pos;
                    break;
                }
                _ => {}
            }
        }
        let (coeff_src, next) = tail.split_at(split_at);
        out.add_coeff(
            Bideg::new(i, j),
            crate::parse::parse_ratfunc(coeff_src.trim(), ch)?,
        );
        rest = next.strip_prefix(',').unwrap_or(next).trim_start();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use crate::var::VarRef;
    use proptest::prelude::*;

    fn x(d: u32) -> PowerSeries {
        PowerSeries::var_x(Char::Zero, d)
    }

    fn y(d: u32) -> PowerSeries {
        PowerSeries::var_y(Char::Zero, d)
    }

    #[test]
    fn product_of_linear_forms() {
        let prod = &(&x(2) + &y(2)) * &(&x(2) - &y(2));
        let expect = &(&x(2) * &x(2)) - &(&y(2) * &y(2));
        assert_eq!(prod, expect);
        assert_eq!(prod.to_string(), "{(0,2): -1, (2,0): 1}");
    }

    #[test]
    fn degree_overflow_truncates() {
        let d = 3;
        let xd = x(d).pow(d);
        assert!(!xd.is_zero());
        assert!((&xd * &x(d)).is_zero());
    }

    #[test]
    fn constant_plus_x() {
        let c = RatFunc::var(VarRef::a(1), Char::Zero)
            .checked_div(&RatFunc::var(VarRef::b(1), Char::Zero))
            .unwrap();
        let s = &PowerSeries::constant(c.clone(), 4) + &x(4);
        assert_eq!(s.constant_term(), c);
        assert_eq!(s.coeff(1, 0), RatFunc::one(Char::Zero));
        assert_eq!(s.to_string(), "{(0,0): (a1)/(b1), (1,0): 1}");
    }

    #[test]
    fn geometric_inverse() {
        let u = &PowerSeries::one(Char::Zero, 3) - &x(3);
        let v = u.invert_unit().unwrap();
        let mut expect = PowerSeries::one(Char::Zero, 3);
        for k in 1..=3 {
            expect = &expect + &x(3).pow(k);
        }
        assert_eq!(v, expect);
        assert!((&u * &v).to_string() == "{(0,0): 1}");
    }

    #[test]
    fn constant_series_inverts_in_k() {
        let a1 = PowerSeries::constant(RatFunc::var(VarRef::a(1), Char::Zero), 4);
        let inv = a1.invert_unit().unwrap();
        assert_eq!(inv.constant_term().to_string(), "(1)/(a1)");
        assert_eq!(inv.num_terms(), 1);
    }

    #[test]
    fn non_unit_rejected() {
        assert_eq!(x(4).invert_unit(), Err(Error::NonUnit));
    }

    #[test]
    fn reductions() {
        let d = 4;
        // x^2 y + x y + y^3 mod (x^2, y^2) -> x y
        let s = &(&x(d).pow(2) * &y(d)) + &(&(&x(d) * &y(d)) + &y(d).pow(3));
        assert_eq!(s.reduce_mod_x2y2(), &x(d) * &y(d));
        // 5 + x + xy mod m^2 -> 5 + x
        let five = PowerSeries::from_poly(Poly::from_i64(5, Char::Zero), d);
        let t = &(&five + &x(d)) + &(&x(d) * &y(d));
        assert_eq!(t.reduce_mod_m_pow(2), &five + &x(d));
        // retrunc(1 + x + x^2, 1) -> 1 + x
        let u = &(&PowerSeries::one(Char::Zero, 2) + &x(2)) + &x(2).pow(2);
        let ud = u.retrunc(1).unwrap();
        assert_eq!(ud, &PowerSeries::one(Char::Zero, 1) + &x(1));
        assert_eq!(
            u.retrunc(3),
            Err(Error::CannotExtend { have: 2, want: 3 })
        );
    }

    #[test]
    fn inspection() {
        let d = 4;
        let a2 = RatFunc::var(VarRef::a(2), Char::Zero);
        let b2 = RatFunc::var(VarRef::b(2), Char::Zero);
        // a1 + a2 x y + b2 y^2
        let s = PowerSeries::from_coeffs(
            Char::Zero,
            d,
            [
                ((0, 0), RatFunc::var(VarRef::a(1), Char::Zero)),
                ((1, 1), a2.clone()),
                ((0, 2), b2),
            ],
        );
        assert_eq!(s.coeff(1, 1), a2);
        assert_eq!(s.order(), Some(0));
        assert_eq!((&x(d).pow(2) + &(&x(d) * &y(d))).order(), Some(2));
        assert_eq!(PowerSeries::zero(Char::Zero, d).order(), None);
    }

    #[test]
    fn substitution_examples() {
        let d = 4;
        let ch = Char::Zero;
        // image of a1: a1 + a2 x y + b2 y^2
        let image = PowerSeries::from_coeffs(
            ch,
            d,
            [
                ((0, 0), RatFunc::var(VarRef::a(1), ch)),
                ((1, 1), RatFunc::var(VarRef::a(2), ch)),
                ((0, 2), RatFunc::var(VarRef::b(2), ch)),
            ],
        );
        let mut images = BTreeMap::new();
        images.insert(VarRef::a(1), image.clone());

        let p = Poly::var(VarRef::a(1), ch);
        assert_eq!(substitute(&p, &images, d).unwrap(), image);

        // a1^2 expands binomially: a1^2 + 2 a1 a2 xy + 2 a1 b2 y^2 + (a2 xy + b2 y^2)^2
        let sq = substitute(&p.pow(2), &images, d).unwrap();
        assert_eq!(sq, image.pow(2));
        let a1 = RatFunc::var(VarRef::a(1), ch);
        let a2 = RatFunc::var(VarRef::a(2), ch);
        let b2 = RatFunc::var(VarRef::b(2), ch);
        let two = RatFunc::from_i64(2, ch);
        assert_eq!(sq.coeff(0, 0), &a1 * &a1);
        assert_eq!(sq.coeff(1, 1), &two * &(&a1 * &a2));
        assert_eq!(sq.coeff(0, 2), &two * &(&a1 * &b2));
        assert_eq!(sq.coeff(2, 2), &a2 * &a2);
        assert_eq!(sq.coeff(1, 3), &two * &(&a2 * &b2));
        assert_eq!(sq.coeff(0, 4), &b2 * &b2);

        // substituting a variable by itself embeds the polynomial
        let mut identity = BTreeMap::new();
        identity.insert(
            VarRef::a(1),
            PowerSeries::constant(RatFunc::var(VarRef::a(1), ch), d),
        );
        assert_eq!(
            substitute(&p.pow(2), &identity, d).unwrap(),
            PowerSeries::from_poly(p.pow(2), d)
        );

        // a variable without an image is an error
        let q = Poly::var(VarRef::b(1), ch);
        assert!(matches!(
            substitute(&q, &images, d),
            Err(Error::IncompleteSubstitution(v)) if v == VarRef::b(1)
        ));
    }

    #[test]
    fn series_text_round_trip() {
        let d = 4;
        let s = PowerSeries::from_coeffs(
            Char::Zero,
            d,
            [
                ((0, 0), RatFunc::var(VarRef::a(1), Char::Zero)),
                (
                    (1, 1),
                    RatFunc::var(VarRef::a(2), Char::Zero)
                        .checked_div(&RatFunc::var(VarRef::b(1), Char::Zero))
                        .unwrap(),
                ),
                ((0, 2), RatFunc::from_i64(-3, Char::Zero)),
            ],
        );
        let text = s.to_string();
        let back = parse_series(&text, Char::Zero, d).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_string(), text);
        assert_eq!(parse_series("{}", Char::Zero, 2).unwrap(), PowerSeries::zero(Char::Zero, 2));
        assert!(parse_series("{(3,0): 1}", Char::Zero, 2).is_err());
    }

    fn arb_series(d: u32) -> impl Strategy<Value = PowerSeries> {
        proptest::collection::vec(
            ((0u32..=6u32, 0u32..=6u32), -9i64..10, 1u32..3),
            0..6,
        )
        .prop_map(move |entries| {
            PowerSeries::from_coeffs(
                Char::Zero,
                d,
                entries.into_iter().map(|((i, j), c, idx)| {
                    let c = RatFunc::from_poly(
                        Poly::var(VarRef::a(idx), Char::Zero).scale(&Scalar::from_i64(c, Char::Zero)),
                    );
                    ((i, j), c)
                }),
            )
        })
    }

    proptest! {
        /// retrunc commutes with add and mul; inversion commutes too.
        #[test]
        fn truncation_coherence((s, t, dp) in (arb_series(6), arb_series(6), 0u32..=6)) {
            let sum_then = (&s + &t).retrunc(dp).unwrap();
            let then_sum = &s.retrunc(dp).unwrap() + &t.retrunc(dp).unwrap();
            prop_assert_eq!(sum_then, then_sum);
            let mul_then = (&s * &t).retrunc(dp).unwrap();
            let then_mul = &s.retrunc(dp).unwrap() * &t.retrunc(dp).unwrap();
            prop_assert_eq!(mul_then, then_mul);
        }

        /// u * invert(u) = 1 exactly at every truncation <= 8.
        #[test]
        fn inverse_is_exact((u0, d) in (arb_series(8), 0u32..=8)) {
            let u = &u0.retrunc(d).unwrap() + &PowerSeries::one(Char::Zero, d);
            prop_assume!(!u.constant_term().is_zero());
            let v = u.invert_unit().unwrap();
            prop_assert_eq!(&u * &v, PowerSeries::one(Char::Zero, d));
        }

        /// mod (x^2, y^2) is idempotent and linear.
        #[test]
        fn x2y2_reduction_properties((s, t) in (arb_series(6), arb_series(6))) {
            let rs = s.reduce_mod_x2y2();
            prop_assert_eq!(rs.reduce_mod_x2y2(), rs.clone());
            prop_assert_eq!(
                (&s + &t).reduce_mod_x2y2(),
                &rs + &t.reduce_mod_x2y2()
            );
            for (d, _) in rs.coeffs() {
                prop_assert!(d.x < 2 && d.y < 2);
            }
            // mod m^2 keeps only monomials 1, x, y
            for (d, _) in s.reduce_mod_m_pow(2).coeffs() {
                prop_assert!(d.total() < 2);
            }
        }

        /// Orders add under multiplication when within the truncation.
        #[test]
        fn order_is_additive((s, t) in (arb_series(6), arb_series(6))) {
            prop_assume!(!s.is_zero() && !t.is_zero());
            let (os, ot) = (s.order().unwrap(), t.order().unwrap());
            prop_assume!(os + ot <= 6);
            prop_assert_eq!((&s * &t).order(), Some(os + ot));
        }
    }
}

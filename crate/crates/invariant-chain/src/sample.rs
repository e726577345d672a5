//! Seeded random values for property suites: scalars, polynomials,
//! fractions, and series. All generators are deterministic for a fixed
//! RNG stream, which keeps reports reproducible.

use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::{Char, Scalar};
use crate::series::PowerSeries;
use crate::var::{Family, VarRef};
use rand::Rng;

pub fn random_scalar<R: Rng>(rng: &mut R, ch: Char) -> Scalar {
    match ch {
        Char::Zero => Scalar::from_i64(rng.random_range(-9..=9), ch),
        Char::Prime(p) => Scalar::from_i64(rng.random_range(0..p.min(1 << 20) as i64), ch),
    }
}

pub fn random_nonzero_scalar<R: Rng>(rng: &mut R, ch: Char) -> Scalar {
    loop {
        let s = random_scalar(rng, ch);
        if !s.is_zero() {
            return s;
        }
    }
}

fn random_monomial<R: Rng>(rng: &mut R, max_index: u32, max_degree: u32) -> Monomial {
    let degree = rng.random_range(0..=max_degree);
    let mut exps: Vec<(VarRef, u32)> = Vec::new();
    for _ in 0..degree {
        let family = if rng.random_bool(0.5) { Family::A } else { Family::B };
        let index = rng.random_range(1..=max_index);
        exps.push((VarRef::new(family, index), 1));
    }
    Monomial::from_exps(exps)
}

/// A sparse polynomial of total degree <= `max_degree` in indices
/// <= `max_index`; may be zero.
pub fn random_poly<R: Rng>(
    rng: &mut R,
    ch: Char,
    max_index: u32,
    max_degree: u32,
    max_terms: u32,
) -> Poly {
    let n_terms = rng.random_range(0..=max_terms);
    Poly::from_terms(
        ch,
        (0..n_terms).map(|_| {
            (
                random_monomial(rng, max_index, max_degree),
                random_scalar(rng, ch),
            )
        }),
    )
}

pub fn random_nonzero_poly<R: Rng>(
    rng: &mut R,
    ch: Char,
    max_index: u32,
    max_degree: u32,
    max_terms: u32,
) -> Poly {
    loop {
        let p = random_poly(rng, ch, max_index, max_degree, max_terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A fraction with numerator and denominator of degree <= `max_degree`.
/// Denominators stay sparse (at most two terms) so naive fraction
/// elimination in the oracle suites stays tractable.
pub fn random_ratfunc<R: Rng>(rng: &mut R, ch: Char, max_index: u32, max_degree: u32) -> RatFunc {
    let num = random_poly(rng, ch, max_index, max_degree, 3);
    let den = if rng.random_bool(0.5) {
        Poly::one(ch)
    } else {
        random_nonzero_poly(rng, ch, max_index, max_degree.min(1), 2)
    };
    RatFunc::new(num, den).expect("nonzero denominator")
}

/// A random element of K for the scalar-congruence suite: nonzero
/// numerator and denominator of degree <= 2.
pub fn random_alpha<R: Rng>(rng: &mut R, ch: Char, max_index: u32) -> RatFunc {
    let num = random_nonzero_poly(rng, ch, max_index, 2, 3);
    let den = random_nonzero_poly(rng, ch, max_index, 2, 2);
    RatFunc::new(num, den).expect("nonzero denominator")
}

/// A series with a handful of fraction coefficients, possibly zero.
pub fn random_series<R: Rng>(
    rng: &mut R,
    ch: Char,
    trunc: u32,
    max_index: u32,
) -> PowerSeries {
    let n_terms = rng.random_range(0..=5);
    PowerSeries::from_coeffs(
        ch,
        trunc,
        (0..n_terms).map(|_| {
            let i = rng.random_range(0..=trunc);
            let j = rng.random_range(0..=trunc.saturating_sub(i));
            ((i, j), random_ratfunc(rng, ch, max_index, 1))
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn deterministic_for_fixed_seed() {
        let mut r1 = ChaCha8Rng::seed_from_u64(99);
        let mut r2 = ChaCha8Rng::seed_from_u64(99);
        for ch in [Char::Zero, Char::Prime(5)] {
            for _ in 0..10 {
                assert_eq!(
                    random_ratfunc(&mut r1, ch, 3, 2),
                    random_ratfunc(&mut r2, ch, 3, 2)
                );
            }
        }
    }

    #[test]
    fn respects_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let p = random_poly(&mut rng, Char::Prime(3), 4, 2, 4);
            assert!(p.total_degree() <= 2);
            assert!(p.max_index() <= 4);
            let a = random_alpha(&mut rng, Char::Zero, 3);
            assert!(!a.is_zero());
        }
    }
}

//! The automorphism sigma of `R = K[[x,y]]` and its integer powers.
//!
//! sigma fixes x and y and sends `a_n -> a_n + y*f_{n+1}`,
//! `b_n -> b_n - x*f_{n+1}` with `f_n = a_n*x + b_n*y`. The power k acts
//! through the characteristic, so the closed form of sigma^k is
//! `a_n -> a_n + k*y*f_{n+1}` and `b_n -> b_n - k*x*f_{n+1}`.
//!
//! On a fraction g/h the image is sigma(g) * invert(sigma(h)), which is
//! well defined because sigma(h) keeps the nonzero constant term h. On a
//! series the map acts on each K-coefficient while fixing x^i y^j.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::{Char, Scalar};
use crate::series::{substitute, PowerSeries};
use crate::var::{Family, VarRef, VarRegistry};
use std::collections::BTreeMap;

/// A power of the automorphism at a fixed truncation degree.
#[derive(Clone, Debug)]
pub struct Sigma {
    power: i64,
    trunc: u32,
    tampered: bool,
}

impl Sigma {
    /// The generator sigma itself.
    pub fn new(trunc: u32) -> Sigma {
        Sigma { power: 1, trunc, tampered: false }
    }

    /// sigma^k by its closed-form generator table.
    pub fn with_power(trunc: u32, k: i64) -> Sigma {
        Sigma { power: k, trunc, tampered: false }
    }

    /// Negative-control hook: a perturbed table whose a-image references
    /// f_{n+2} instead of f_{n+1}. This breaks sigma(f_n) = f_n in every
    /// characteristic, so a verification run over it must fail.
    pub fn tampered(trunc: u32) -> Sigma {
        Sigma { power: 1, trunc, tampered: true }
    }

    /// Full constructor used by the report runner.
    pub fn configured(trunc: u32, power: i64, tampered: bool) -> Sigma {
        Sigma { power, trunc, tampered }
    }

    pub fn power(&self) -> i64 {
        self.power
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn is_identity_power(&self) -> bool {
        self.power == 0
    }

    /// Image of a_n: a_n + k * (a_m x y + b_m y^2) with m = n + 1.
    pub fn image_a(&self, n: u32, ch: Char, reg: &VarRegistry) -> Result<PowerSeries> {
        let an = reg.intern(Family::A, n)?;
        let m = if self.tampered { n + 2 } else { n + 1 };
        let am = reg.intern(Family::A, m)?;
        let bm = reg.intern(Family::B, m)?;
        let k = Scalar::from_i64(self.power, ch);
        Ok(PowerSeries::from_coeffs(
            ch,
            self.trunc,
            [
                ((0, 0), RatFunc::var(an, ch)),
                ((1, 1), RatFunc::var(am, ch).scale(&k)),
                ((0, 2), RatFunc::var(bm, ch).scale(&k)),
            ],
        ))
    }

    /// Image of b_n: b_n - k * (a_m x^2 + b_m x y) with m = n + 1.
    pub fn image_b(&self, n: u32, ch: Char, reg: &VarRegistry) -> Result<PowerSeries> {
        let bn = reg.intern(Family::B, n)?;
        let m = n + 1;
        let am = reg.intern(Family::A, m)?;
        let bm = reg.intern(Family::B, m)?;
        let k = Scalar::from_i64(self.power, ch).neg();
        Ok(PowerSeries::from_coeffs(
            ch,
            self.trunc,
            [
                ((0, 0), RatFunc::var(bn, ch)),
                ((2, 0), RatFunc::var(am, ch).scale(&k)),
                ((1, 1), RatFunc::var(bm, ch).scale(&k)),
            ],
        ))
    }

    /// Applies the map to a polynomial by substituting the generator
    /// images; the registry widens to cover the referenced indices.
    pub fn apply_poly(&self, p: &Poly, reg: &VarRegistry) -> Result<PowerSeries> {
        let ch = p.characteristic();
        let mut images: BTreeMap<VarRef, PowerSeries> = BTreeMap::new();
        for v in p.vars() {
            let img = match v.family() {
                Family::A => self.image_a(v.index(), ch, reg)?,
                Family::B => self.image_b(v.index(), ch, reg)?,
            };
            images.insert(v, img);
        }
        substitute(p, &images, self.trunc)
    }

    /// Applies the map to g/h as sigma(g) * invert(sigma(h)).
    pub fn apply_ratfunc(&self, r: &RatFunc, reg: &VarRegistry) -> Result<PowerSeries> {
        let num = self.apply_poly(r.num(), reg)?;
        if r.is_zero() {
            return Ok(num);
        }
        let den = self.apply_poly(r.den(), reg)?;
        let den_inv = den.invert_unit().map_err(|_| {
            // sigma preserves constant terms, so a nonzero denominator
            // cannot map to a non-unit.
            Error::Internal("sigma image of a nonzero denominator lost its unit")
        })?;
        num.checked_mul(&den_inv)
    }

    /// Applies the map coefficient-wise to a series, fixing x and y.
    pub fn apply_series(&self, s: &PowerSeries, reg: &VarRegistry) -> Result<PowerSeries> {
        if s.trunc() != self.trunc {
            return Err(Error::DomainMismatch(format!(
                "series truncated at {}, map at {}",
                s.trunc(),
                self.trunc
            )));
        }
        let mut acc = PowerSeries::zero(s.characteristic(), self.trunc);
        for (d, c) in s.coeffs() {
            let image = self.apply_ratfunc(c, reg)?;
            acc = acc.checked_add(&image.shift(d.x, d.y))?;
        }
        Ok(acc)
    }
}

/// How to compute sigma^k.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PowerMode {
    /// Compose the generator (or its inverse) |k| times.
    Iterate,
    /// Use the closed-form generator table at power k.
    ClosedForm,
}

/// sigma^k applied to a series, guarded by an iteration budget.
pub fn sigma_power(
    s: &PowerSeries,
    k: i64,
    mode: PowerMode,
    limit: u32,
    reg: &VarRegistry,
) -> Result<PowerSeries> {
    if k.unsigned_abs() > u64::from(limit) {
        return Err(Error::PowerLimit { k, limit });
    }
    match mode {
        PowerMode::ClosedForm => Sigma::with_power(s.trunc(), k).apply_series(s, reg),
        PowerMode::Iterate => {
            let step = Sigma::with_power(s.trunc(), k.signum());
            let mut acc = s.clone();
            for _ in 0..k.unsigned_abs() {
                acc = step.apply_series(&acc, reg)?;
            }
            Ok(acc)
        }
    }
}

/// Outcome of the cyclic-group order check.
#[derive(Clone, Debug)]
pub struct OrderCheck {
    pub characteristic: Char,
    pub k_max: u32,
    pub pass: bool,
    /// In characteristic p, the verified order; `None` in characteristic 0
    /// where no power up to k_max is the identity.
    pub order: Option<u64>,
    pub witness: String,
}

/// Verifies the order of the cyclic group generated by the given unit step
/// by honest iteration: in characteristic p the order is exactly p (no
/// smaller power fixes a_1, and the p-th power fixes every generator in the
/// active window); in characteristic 0 no power up to k_max is the identity.
pub fn check_group_order(
    sigma: &Sigma,
    ch: Char,
    k_max: u32,
    reg: &VarRegistry,
) -> Result<OrderCheck> {
    let window = reg.max_index().max(2);
    let trunc = sigma.trunc();
    let a1 = PowerSeries::constant(RatFunc::var(reg.intern(Family::A, 1)?, ch), trunc);

    match ch {
        Char::Prime(p) => {
            if u64::from(k_max) < p {
                return Err(Error::InvalidInput(format!(
                    "k_max {k_max} is below the characteristic {p}"
                )));
            }
            let mut current = a1.clone();
            for k in 1..p {
                current = sigma.apply_series(&current, reg)?;
                if current == a1 {
                    return Ok(OrderCheck {
                        characteristic: ch,
                        k_max,
                        pass: false,
                        order: Some(k),
                        witness: format!("sigma^{k} already fixes a1 with 0 < {k} < {p}"),
                    });
                }
            }
            // sigma^p must fix every generator in the window.
            for idx in 1..=window {
                for family in [Family::A, Family::B] {
                    let gen = PowerSeries::constant(
                        RatFunc::var(reg.intern(family, idx)?, ch),
                        trunc,
                    );
                    let mut img = gen.clone();
                    for _ in 0..p {
                        img = sigma.apply_series(&img, reg)?;
                    }
                    if img != gen {
                        return Ok(OrderCheck {
                            characteristic: ch,
                            k_max,
                            pass: false,
                            order: None,
                            witness: format!(
                                "sigma^{p} moves the generator with index {idx}"
                            ),
                        });
                    }
                }
            }
            Ok(OrderCheck {
                characteristic: ch,
                k_max,
                pass: true,
                order: Some(p),
                witness: format!(
                    "sigma^k != id for 0 < k < {p}; sigma^{p} = id on indices 1..={window}"
                ),
            })
        }
        Char::Zero => {
            let mut current = a1.clone();
            for k in 1..=k_max {
                current = sigma.apply_series(&current, reg)?;
                if current == a1 {
                    return Ok(OrderCheck {
                        characteristic: ch,
                        k_max,
                        pass: false,
                        order: Some(u64::from(k)),
                        witness: format!("sigma^{k} unexpectedly fixes a1"),
                    });
                }
            }
            Ok(OrderCheck {
                characteristic: ch,
                k_max,
                pass: true,
                order: None,
                witness: format!("sigma^k != id for 0 < k <= {k_max}"),
            })
        }
    }
}

//! Constructible invariants: F-coefficient polynomial expressions in
//! x, y, f_1..f_w. Since the automorphism fixes x, y, and every f_n, any
//! such expression is a fixed point; construction re-checks this exactly.

use crate::error::{Error, Result};
use crate::ratfunc::RatFunc;
use crate::scalar::{Char, Scalar};
use crate::series::PowerSeries;
use crate::sigma::Sigma;
use crate::theorem::make_f;
use crate::var::VarRegistry;
use rand::Rng;
use std::collections::BTreeMap;
use std::fmt;

/// A formal monomial x^i y^j f_1^e1 ... in the invariant generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct RecipeMono {
    pub x: u32,
    pub y: u32,
    /// f-index -> exponent, no zero exponents stored.
    pub f: BTreeMap<u32, u32>,
}

impl RecipeMono {
    pub fn total_degree(&self) -> u32 {
        self.x + self.y + self.f.values().sum::<u32>()
    }

    fn expand(&self, ch: Char, trunc: u32, reg: &VarRegistry) -> Result<PowerSeries> {
        let mut acc = PowerSeries::one(ch, trunc);
        if self.x > 0 {
            acc = acc.checked_mul(&PowerSeries::var_x(ch, trunc).pow(self.x))?;
        }
        if self.y > 0 {
            acc = acc.checked_mul(&PowerSeries::var_y(ch, trunc).pow(self.y))?;
        }
        for (idx, e) in &self.f {
            acc = acc.checked_mul(&make_f(*idx, ch, trunc, reg)?.pow(*e))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for RecipeMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (sym, e) in [("x", self.x), ("y", self.y)] {
            match e {
                0 => {}
                1 => parts.push(sym.to_string()),
                _ => parts.push(format!("{sym}^{e}")),
            }
        }
        for (idx, e) in &self.f {
            if *e == 1 {
                parts.push(format!("f{idx}"));
            } else {
                parts.push(format!("f{idx}^{e}"));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A sampled element of the invariant ring, carrying both the formal
/// expression it was built from and its expanded truncated series.
#[derive(Clone, Debug)]
pub struct InvariantSample {
    recipe: Vec<(Scalar, RecipeMono)>,
    value: PowerSeries,
}

impl InvariantSample {
    /// Expands the recipe and verifies sigma-invariance of the result;
    /// a moved value is a construction error.
    pub fn new(
        recipe: Vec<(Scalar, RecipeMono)>,
        ch: Char,
        trunc: u32,
        reg: &VarRegistry,
    ) -> Result<InvariantSample> {
        let mut value = PowerSeries::zero(ch, trunc);
        for (c, mono) in &recipe {
            if c.characteristic() != ch {
                return Err(Error::DomainMismatch(
                    "recipe coefficient characteristic".into(),
                ));
            }
            let term = mono
                .expand(ch, trunc, reg)?
                .scale(&RatFunc::constant(c.clone()));
            value = value.checked_add(&term)?;
        }
        let image = Sigma::new(trunc).apply_series(&value, reg)?;
        if image != value {
            return Err(Error::Verification(format!(
                "recipe {} is not sigma-invariant",
                show_recipe(&recipe)
            )));
        }
        Ok(InvariantSample { recipe, value })
    }

    /// A seeded random recipe of total degree <= 3 in x, y, f_1..f_window.
    pub fn random<R: Rng>(
        rng: &mut R,
        ch: Char,
        trunc: u32,
        window: u32,
        reg: &VarRegistry,
    ) -> Result<InvariantSample> {
        let n_terms = rng.random_range(1..=4);
        let mut terms: BTreeMap<RecipeMono, Scalar> = BTreeMap::new();
        for _ in 0..n_terms {
            let mut mono = RecipeMono::default();
            for _ in 0..rng.random_range(0..=3u32) {
                match rng.random_range(0..=window + 1) {
                    0 => mono.x += 1,
                    1 => mono.y += 1,
                    s => *mono.f.entry(s - 1).or_insert(0) += 1,
                }
            }
            let coeff = crate::sample::random_nonzero_scalar(rng, ch);
            terms
                .entry(mono)
                .and_modify(|c| *c = c.add(&coeff))
                .or_insert(coeff);
        }
        let recipe = terms
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, m))
            .collect();
        InvariantSample::new(recipe, ch, trunc, reg)
    }

    pub fn value(&self) -> &PowerSeries {
        &self.value
    }

    /// The constant term, an element of K (here always in F).
    pub fn constant_term(&self) -> RatFunc {
        self.value.constant_term()
    }

    pub fn recipe_text(&self) -> String {
        show_recipe(&self.recipe)
    }
}

fn show_recipe(recipe: &[(Scalar, RecipeMono)]) -> String {
    if recipe.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (pos, (c, m)) in recipe.iter().enumerate() {
        let neg = c.signum() < 0;
        let mag = if neg { c.neg() } else { c.clone() };
        if pos == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let trivial_mono = m.total_degree() == 0;
        if trivial_mono {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&m.to_string());
        } else {
            out.push_str(&format!("{mag}*{m}"));
        }
    }
    out
}

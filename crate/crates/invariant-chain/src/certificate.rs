//! Finite non-membership certificates.
//!
//! A membership equation f_{n+1} = sum r_k f_k with invariant coefficients
//! would force, through repeated sigma-derivation, the whole recurrence
//! family a_{n+m+1} = sum c_k a_{k+m} with one fixed coefficient vector c.
//! The certificate shows this family is already infeasible on its first
//! n + 1 members: the Hankel system of the first n constraints pins a
//! unique candidate c*, and the next constraint then leaves a nonzero
//! residual. Both facts are exact polynomial statements.

use crate::digest::content_digest;
use crate::error::{Error, Result};
use crate::linalg::{DetMode, KMatrix};
use crate::ratfunc::RatFunc;
use crate::scalar::Char;
use crate::var::{Family, VarRegistry};
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Default ceiling on inlined polynomial text in serialized certificates.
pub const WITNESS_TEXT_LIMIT: usize = 64 * 1024;

/// Exact witness that no single coefficient vector satisfies the first
/// n + 1 derived constraints at depth n.
#[derive(Clone, Debug)]
pub struct ChainCertificate {
    pub depth: u32,
    pub characteristic: Char,
    /// det of `H[m][k] = a_(k+m)` (m = 0..n-1, k = 1..n); nonzero.
    pub hankel_det: RatFunc,
    /// The unique candidate solving constraints m = 0..n-1.
    pub cstar: Vec<RatFunc>,
    /// a_{2n+1} - sum_k c*_k a_{k+n}; nonzero.
    pub residual: RatFunc,
    /// Stable digests of the canonical texts of the fields above.
    pub digests: BTreeMap<String, String>,
}

/// Builds and verifies the depth-n certificate. Nonsingularity of the
/// Hankel system and the nonzero residual are verification assertions:
/// their failure is reported as a fatal error, not an input error.
pub fn chain_certificate(n: u32, ch: Char, reg: &VarRegistry) -> Result<ChainCertificate> {
    if n < 1 {
        return Err(Error::InvalidIndex(n));
    }
    let a = |index: u32| -> Result<RatFunc> {
        Ok(RatFunc::var(reg.intern(Family::A, index)?, ch))
    };
    // Touch the full window a_1..a_{2n+1} up front.
    let _ = a(2 * n + 1)?;

    let size = n as usize;
    let hankel = KMatrix::from_fn(size, size, |m, k| {
        RatFunc::var(
            crate::var::VarRef::a(k as u32 + 1 + m as u32),
            ch,
        )
    })?;
    let hankel_det = hankel.det(DetMode::Bareiss)?;
    if hankel_det.is_zero() {
        return Err(Error::Verification(format!(
            "depth {n}: Hankel determinant vanished"
        )));
    }

    let rhs: Vec<RatFunc> = (0..n).map(|m| a(n + m + 1)).collect::<Result<_>>()?;
    let cstar = hankel.solve(&rhs)?;

    // Constraint m = n, the first one the candidate was not fitted to.
    let mut residual = a(2 * n + 1)?;
    for (k, c) in cstar.iter().enumerate() {
        let term = c.checked_mul(&a(k as u32 + 1 + n)?)?;
        residual = residual.checked_sub(&term)?;
    }
    if residual.is_zero() {
        return Err(Error::Verification(format!(
            "depth {n}: residual of constraint m = {n} vanished"
        )));
    }

    let mut digests = BTreeMap::new();
    digests.insert("hankel_det".into(), content_digest(&hankel_det.to_string()));
    digests.insert("residual".into(), content_digest(&residual.to_string()));
    for (k, c) in cstar.iter().enumerate() {
        digests.insert(format!("cstar{}", k + 1), content_digest(&c.to_string()));
    }

    Ok(ChainCertificate {
        depth: n,
        characteristic: ch,
        hankel_det,
        cstar,
        residual,
        digests,
    })
}

impl ChainCertificate {
    /// The residual with denominators cleared: a nonzero polynomial.
    pub fn cleared_residual(&self) -> &crate::poly::Poly {
        self.residual.cleared_numerator()
    }

    /// One value rendered for a report: inline text below `limit` bytes,
    /// digest plus degree/term summaries above it.
    fn witness_value(r: &RatFunc, limit: usize) -> Value {
        let text = r.to_string();
        if text.len() <= limit {
            json!({ "text": text })
        } else {
            json!({
                "sha256": content_digest(&text),
                "num_degree": r.num().total_degree(),
                "num_terms": r.num().num_terms(),
                "den_degree": r.den().total_degree(),
                "den_terms": r.den().num_terms(),
            })
        }
    }

    /// Machine-readable certificate body used by reports and fixtures.
    pub fn to_json(&self, limit: usize) -> Value {
        json!({
            "depth": self.depth,
            "characteristic": self.characteristic.to_string(),
            "hankel_det": Self::witness_value(&self.hankel_det, limit),
            "cstar": self.cstar.iter().map(|c| Self::witness_value(c, limit)).collect::<Vec<_>>(),
            "residual": Self::witness_value(&self.residual, limit),
            "digests": self.digests,
        })
    }

    /// Single-line fixture form.
    pub fn to_json_line(&self, limit: usize) -> String {
        self.to_json(limit).to_string()
    }
}

/// Classification of the valuation image of an invariant subring of a
/// discrete valuation ring: all valuations zero means a field; otherwise
/// the image is generated by the gcd of the nonzero values, and dividing
/// by it renormalizes the image onto a surjective valuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DvrClass {
    Field,
    Dvr {
        generator: u64,
        normalized: std::collections::BTreeSet<u64>,
    },
}

pub fn dvr_classify(values: &std::collections::BTreeSet<u64>) -> Result<DvrClass> {
    if values.is_empty() {
        return Err(Error::InvalidInput(
            "valuation sample set must be nonempty".into(),
        ));
    }
    let generator = values.iter().fold(0u64, |g, &v| gcd(g, v));
    if generator == 0 {
        return Ok(DvrClass::Field);
    }
    Ok(DvrClass::Dvr {
        generator,
        normalized: values.iter().map(|v| v / generator).collect(),
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

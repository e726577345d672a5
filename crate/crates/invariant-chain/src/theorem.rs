//! The derivation engine: the generators f_n, the two congruence checks,
//! ideal membership with non-invariant coefficients, linear recurrence
//! relations among the a_n, and the sigma-derivation step that shifts a
//! relation while accounting for its pollution terms.

use crate::digest::content_digest;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::Char;
use crate::series::{Bideg, PowerSeries};
use crate::sigma::Sigma;
use crate::var::{Family, VarRegistry};
use std::fmt;

/// f_n = a_n x + b_n y, the common fixed points of the action.
pub fn make_f(n: u32, ch: Char, trunc: u32, reg: &VarRegistry) -> Result<PowerSeries> {
    if n < 1 {
        return Err(Error::InvalidIndex(n));
    }
    if trunc < 1 {
        return Err(Error::InsufficientTrunc { have: trunc, need: 1 });
    }
    let an = reg.intern(Family::A, n)?;
    let bn = reg.intern(Family::B, n)?;
    Ok(PowerSeries::from_coeffs(
        ch,
        trunc,
        [
            ((1, 0), RatFunc::var(an, ch)),
            ((0, 1), RatFunc::var(bn, ch)),
        ],
    ))
}

/// Outcome of the scalar congruence check: sigma(alpha) - alpha must have
/// order at least 2.
#[derive(Clone, Debug)]
pub struct Eq1Outcome {
    pub pass: bool,
    /// sigma(alpha) - alpha in the truncated ring.
    pub difference: PowerSeries,
    /// Lowest offending term on failure.
    pub offending: Option<(Bideg, RatFunc)>,
}

/// Verifies that sigma moves an element of K only inside m^2.
pub fn check_eq1(alpha: &RatFunc, trunc: u32, reg: &VarRegistry) -> Result<Eq1Outcome> {
    if trunc < 2 {
        return Err(Error::InsufficientTrunc { have: trunc, need: 2 });
    }
    let image = Sigma::new(trunc).apply_ratfunc(alpha, reg)?;
    let difference = image.checked_sub(&PowerSeries::constant(alpha.clone(), trunc))?;
    let pass = difference.order().is_none_or(|o| o >= 2);
    let offending = if pass {
        None
    } else {
        difference
            .coeffs()
            .next()
            .map(|(d, c)| (d, c.clone()))
    };
    Ok(Eq1Outcome { pass, difference, offending })
}

/// Outcome of the constant-term congruence check on an invariant.
#[derive(Clone, Debug)]
pub struct Eq2Outcome {
    pub pass: bool,
    /// sigma(rbar) - rbar reduced mod (x^2, y^2); zero iff pass.
    pub reduced_difference: PowerSeries,
}

/// Verifies that the constant term rbar of an invariant satisfies
/// sigma(rbar) = rbar modulo (x^2, y^2)R.
pub fn check_eq2(
    sample: &crate::invariant::InvariantSample,
    reg: &VarRegistry,
) -> Result<Eq2Outcome> {
    let trunc = sample.value().trunc();
    let rbar = sample.constant_term();
    let image = Sigma::new(trunc).apply_ratfunc(&rbar, reg)?;
    let reduced_difference = image
        .checked_sub(&PowerSeries::constant(rbar, trunc))?
        .reduce_mod_x2y2();
    Ok(Eq2Outcome { pass: reduced_difference.is_zero(), reduced_difference })
}

/// Witness that one membership coefficient moves under sigma.
#[derive(Clone, Debug)]
pub struct NonInvariance {
    /// 1-based coefficient position.
    pub position: usize,
    /// Digest of the canonical text of sigma(r) - r.
    pub difference_digest: String,
    /// Order of sigma(r) - r, always Some(2) here.
    pub difference_order: Option<u32>,
}

/// f_t written in the ideal (f_1, f_2)R with explicit, non-invariant
/// coefficients.
#[derive(Clone, Debug)]
pub struct IdealMembership {
    pub target: u32,
    pub r1: RatFunc,
    pub r2: RatFunc,
    pub noninvariance: Vec<NonInvariance>,
}

/// Solves f_t = r1 f_1 + r2 f_2 by Cramer's rule over the x- and
/// y-coefficients, verifies the identity exactly in the truncated ring,
/// and certifies that each r_i moves under sigma (so membership in R says
/// nothing about membership with invariant coefficients).
pub fn express_f_in_ideal(
    t: u32,
    ch: Char,
    trunc: u32,
    reg: &VarRegistry,
) -> Result<IdealMembership> {
    if t < 3 {
        return Err(Error::InvalidIndex(t));
    }
    let var = |family, index: u32| -> Result<RatFunc> {
        Ok(RatFunc::var(reg.intern(family, index)?, ch))
    };
    let a1 = var(Family::A, 1)?;
    let b1 = var(Family::B, 1)?;
    let a2 = var(Family::A, 2)?;
    let b2 = var(Family::B, 2)?;
    let at = var(Family::A, t)?;
    let bt = var(Family::B, t)?;
    // delta = a1 b2 - a2 b1, nonzero because its monomials are distinct.
    let delta = &(&a1 * &b2) - &(&a2 * &b1);
    let r1 = (&(&at * &b2) - &(&bt * &a2)).checked_div(&delta)?;
    let r2 = (&(&a1 * &bt) - &(&at * &b1)).checked_div(&delta)?;

    let f1 = make_f(1, ch, trunc, reg)?;
    let f2 = make_f(2, ch, trunc, reg)?;
    let ft = make_f(t, ch, trunc, reg)?;
    let combined = f1.scale(&r1).checked_add(&f2.scale(&r2))?;
    if combined != ft {
        return Err(Error::Verification(format!(
            "f{t} = r1*f1 + r2*f2 failed to hold exactly"
        )));
    }

    let sigma = Sigma::new(trunc);
    let mut noninvariance = Vec::new();
    for (position, r) in [(1usize, &r1), (2usize, &r2)] {
        let diff = sigma
            .apply_ratfunc(r, reg)?
            .checked_sub(&PowerSeries::constant(r.clone(), trunc))?;
        if diff.is_zero() {
            return Err(Error::Verification(format!(
                "membership coefficient r{position} for f{t} is sigma-invariant"
            )));
        }
        noninvariance.push(NonInvariance {
            position,
            difference_digest: content_digest(&diff.to_string()),
            difference_order: diff.order(),
        });
    }
    Ok(IdealMembership { target: t, r1, r2, noninvariance })
}

/// A candidate recurrence a_t = sum_k c_k a_{k+m} with c_k in K,
/// t = n + m + 1 for depth n = len(coeffs) and shift m.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearRelation {
    depth: usize,
    shift: u32,
    coeffs: Vec<RatFunc>,
}

impl LinearRelation {
    pub fn new(shift: u32, coeffs: Vec<RatFunc>) -> Result<LinearRelation> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("a relation needs depth >= 1".into()));
        }
        let ch = coeffs[0].characteristic();
        if coeffs.iter().any(|c| c.characteristic() != ch) {
            return Err(Error::DomainMismatch(
                "relation coefficients mix characteristics".into(),
            ));
        }
        Ok(LinearRelation { depth: coeffs.len(), shift, coeffs })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn shift(&self) -> u32 {
        self.shift
    }

    /// The asserted target index t = n + m + 1.
    pub fn target(&self) -> u32 {
        self.depth as u32 + self.shift + 1
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn characteristic(&self) -> Char {
        self.coeffs[0].characteristic()
    }

    /// sum_k c_k a_{k+m}, the right-hand side as an element of K.
    pub fn combination(&self) -> RatFunc {
        let ch = self.characteristic();
        let mut acc = RatFunc::zero(ch);
        for (k, c) in self.coeffs.iter().enumerate() {
            let a = RatFunc::var(
                crate::var::VarRef::a(k as u32 + 1 + self.shift),
                ch,
            );
            acc = &acc + &(c * &a);
        }
        acc
    }

    /// Decides whether the relation holds exactly in K.
    pub fn holds_exactly(&self) -> bool {
        let target = RatFunc::var(crate::var::VarRef::a(self.target()), self.characteristic());
        target == self.combination()
    }

    /// The same coefficients advanced to shift m + 1.
    pub fn shifted(&self) -> LinearRelation {
        LinearRelation {
            depth: self.depth,
            shift: self.shift + 1,
            coeffs: self.coeffs.clone(),
        }
    }

    /// One-line fixture form, e.g. `a3 = (a2/a1)*a1 + (0)*a2`.
    pub fn to_line(&self) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| format!("({})*a{}", c, k as u32 + 1 + self.shift))
            .collect();
        format!("a{} = {}", self.target(), terms.join(" + "))
    }

    /// Parses the fixture form produced by [`LinearRelation::to_line`].
    pub fn parse_line(line: &str, ch: Char) -> Result<LinearRelation> {
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse("relation line needs '='".into()))?;
        let target: u32 = lhs
            .trim()
            .strip_prefix('a')
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("relation target must be a<t>".into()))?;
        let mut coeffs = Vec::new();
        let mut shift = None;
        for (k, term) in split_top_level_plus(rhs).into_iter().enumerate() {
            let term = term.trim();
            let close = matching_paren(term)?;
            let coeff = crate::parse::parse_ratfunc(&term[1..close], ch)?;
            let index: u32 = term[close + 1..]
                .trim()
                .strip_prefix("*a")
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse("relation term must end in *a<k>".into()))?;
            let expected_shift = index
                .checked_sub(k as u32 + 1)
                .ok_or_else(|| Error::Parse("relation indices must ascend from m+1".into()))?;
            if *shift.get_or_insert(expected_shift) != expected_shift {
                return Err(Error::Parse("relation indices must be consecutive".into()));
            }
            coeffs.push(coeff);
        }
        let shift = shift.ok_or_else(|| Error::Parse("relation has no terms".into()))?;
        let rel = LinearRelation::new(shift, coeffs)?;
        if rel.target() != target {
            return Err(Error::Parse(format!(
                "relation target a{target} does not match depth and shift (expected a{})",
                rel.target()
            )));
        }
        Ok(rel)
    }
}

fn split_top_level_plus(src: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    let bytes = src.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        match bytes[pos] {
            b'(' => depth += 1,
            b')' => depth = depth.saturating_sub(1),
            b'+' if depth == 0 => {
                parts.push(&src[start..pos]);
                start = pos + 1;
            }
            _ => {}
        }
        pos += 1;
    }
    parts.push(&src[start..]);
    parts
}

fn matching_paren(term: &str) -> Result<usize> {
    if !term.starts_with('(') {
        return Err(Error::Parse("relation term must start with '('".into()));
    }
    let mut depth = 0usize;
    for (pos, byte) in term.bytes().enumerate() {
        match byte {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth == 0 {
                    return Ok(pos);
                }
            }
            _ => {}
        }
    }
    Err(Error::Parse("unbalanced parentheses in relation term".into()))
}

impl fmt::Display for LinearRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_line())
    }
}

/// Builds the constant-term relation a_t = sum_k coeffs_k a_k (shift 0)
/// from coefficients read off a membership equation.
pub fn extract_constant_relation(t: u32, coeffs: Vec<RatFunc>) -> Result<LinearRelation> {
    if t as usize != coeffs.len() + 1 {
        return Err(Error::InvalidInput(format!(
            "target a{t} needs exactly {} coefficients, got {}",
            t.saturating_sub(1),
            coeffs.len()
        )));
    }
    LinearRelation::new(0, coeffs)
}

/// The xy-part of sigma(c_k) for each coefficient: the exact failure of
/// the constant-term congruence, term by term. Zero whenever c_k lies in F.
#[derive(Clone, Debug, PartialEq)]
pub struct PollutionVector(pub Vec<RatFunc>);

impl PollutionVector {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(RatFunc::is_zero)
    }
}

/// Result of applying sigma to both sides of a relation and reducing
/// modulo (x^2, y^2).
#[derive(Clone, Debug)]
pub struct SigmaStepOutcome {
    /// The pollution-free shifted relation: same coefficients, shift m+1.
    pub next: LinearRelation,
    /// lambda_k = xy-coefficient of sigma(c_k).
    pub pollution: PollutionVector,
    /// Whether the constant parts of the two sides cancelled, which happens
    /// exactly when the input relation holds.
    pub constant_parts_match: bool,
    /// Whether the full xy-identity
    /// a_{t+1} = sum c_k a_{k+m+1} + sum lambda_k a_{k+m} holds in K.
    /// Guaranteed whenever the input relation holds exactly.
    pub full_identity_holds: bool,
    /// The xy-identity residual (zero iff `full_identity_holds`).
    pub xy_residual: RatFunc,
}

/// Applies sigma to both sides of `rel` inside R (truncation >= 4), reduces
/// modulo (x^2, y^2), and extracts the xy-coefficient identity. The xy-part
/// splits into the shifted relation plus pollution terms; both the series
/// route and the direct K-arithmetic route must agree, which is checked.
pub fn sigma_step(
    rel: &LinearRelation,
    trunc: u32,
    reg: &VarRegistry,
) -> Result<SigmaStepOutcome> {
    if trunc < 4 {
        return Err(Error::InsufficientTrunc { have: trunc, need: 4 });
    }
    let ch = rel.characteristic();
    let sigma = Sigma::new(trunc);
    let m = rel.shift();
    let t = rel.target();

    let a_poly = |index: u32| -> Result<Poly> {
        Ok(Poly::var(reg.intern(Family::A, index)?, ch))
    };

    // sigma of both sides, exactly in the truncated ring.
    let lhs = sigma.apply_poly(&a_poly(t)?, reg)?;
    let mut rhs = PowerSeries::zero(ch, trunc);
    let mut pollution = Vec::with_capacity(rel.depth());
    for (k, c) in rel.coeffs().iter().enumerate() {
        let c_image = sigma.apply_ratfunc(c, reg)?;
        pollution.push(c_image.coeff(1, 1));
        let a_image = sigma.apply_poly(&a_poly(k as u32 + 1 + m)?, reg)?;
        rhs = rhs.checked_add(&c_image.checked_mul(&a_image)?)?;
    }
    let reduced = lhs.checked_sub(&rhs)?.reduce_mod_x2y2();

    // Constant parts cancel iff the relation holds; cross-check the series
    // route against the direct K computation.
    let holds = rel.holds_exactly();
    let constant_parts_match = reduced.constant_term().is_zero();
    if constant_parts_match != holds {
        return Err(Error::Internal(
            "constant-part cancellation disagrees with the relation residual",
        ));
    }

    // xy-identity residual, straight from K arithmetic:
    // a_{t+1} - sum c_k a_{k+m+1} - sum lambda_k a_{k+m}.
    let next = rel.shifted();
    let mut xy_residual = RatFunc::var(reg.intern(Family::A, t + 1)?, ch);
    xy_residual = &xy_residual - &next.combination();
    for (k, lambda) in pollution.iter().enumerate() {
        let a = RatFunc::var(reg.intern(Family::A, k as u32 + 1 + m)?, ch);
        xy_residual = &xy_residual - &(lambda * &a);
    }
    // The same residual must appear as the xy-coefficient of the reduced
    // series difference.
    if reduced.coeff(1, 1) != xy_residual {
        return Err(Error::Internal(
            "series xy-extraction disagrees with the K-arithmetic identity",
        ));
    }

    Ok(SigmaStepOutcome {
        next,
        pollution: PollutionVector(pollution),
        constant_parts_match,
        full_identity_holds: xy_residual.is_zero(),
        xy_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ratfunc;
    use crate::scalar::Scalar;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rf(src: &str) -> RatFunc {
        parse_ratfunc(src, Char::Zero).unwrap()
    }

    #[test]
    fn make_f_examples() {
        let reg = VarRegistry::new();
        let f1 = make_f(1, Char::Zero, 4, &reg).unwrap();
        assert_eq!(f1.to_string(), "{(0,1): b1, (1,0): a1}");
        let f2 = make_f(2, Char::Zero, 4, &reg).unwrap();
        assert_eq!(f2.to_string(), "{(0,1): b2, (1,0): a2}");
        assert_eq!(make_f(0, Char::Zero, 4, &reg), Err(Error::InvalidIndex(0)));
        assert_eq!(reg.max_index(), 2);
    }

    #[test]
    fn eq1_on_a_generator() {
        let reg = VarRegistry::new();
        let out = check_eq1(&rf("a1"), 4, &reg).unwrap();
        assert!(out.pass);
        // sigma(a1) - a1 = a2 xy + b2 y^2, order exactly 2
        assert_eq!(out.difference.to_string(), "{(0,2): b2, (1,1): a2}");
        assert_eq!(out.difference.order(), Some(2));
    }

    #[test]
    fn eq1_fixes_ground_field() {
        let reg = VarRegistry::new();
        let out = check_eq1(&rf("5"), 4, &reg).unwrap();
        assert!(out.pass);
        assert!(out.difference.is_zero());
    }

    #[test]
    fn eq1_worked_fraction() {
        let reg = VarRegistry::new();
        let out = check_eq1(&rf("a1/b1"), 2, &reg).unwrap();
        assert!(out.pass);
        let expected = crate::series::parse_series(
            "{(2,0): (a1*a2)/(b1^2), (1,1): a2/b1 + (a1*b2)/(b1^2), (0,2): b2/b1}",
            Char::Zero,
            2,
        )
        .unwrap();
        assert_eq!(out.difference, expected);
    }

    #[test]
    fn eq1_requires_depth_two() {
        let reg = VarRegistry::new();
        assert!(matches!(
            check_eq1(&rf("a1"), 1, &reg),
            Err(Error::InsufficientTrunc { have: 1, need: 2 })
        ));
    }

    #[test]
    fn eq2_examples() {
        use crate::invariant::{InvariantSample, RecipeMono};
        let reg = VarRegistry::new();
        let ch = Char::Zero;
        let f = |idx: u32| RecipeMono {
            f: [(idx, 1)].into_iter().collect(),
            ..Default::default()
        };
        // r = f1 (constant term 0)
        let s1 = InvariantSample::new(vec![(Scalar::one(ch), f(1))], ch, 6, &reg).unwrap();
        assert!(check_eq2(&s1, &reg).unwrap().pass);
        // r = 3 + x + f2 (constant term 3)
        let s2 = InvariantSample::new(
            vec![
                (Scalar::from_i64(3, ch), RecipeMono::default()),
                (Scalar::one(ch), RecipeMono { x: 1, ..Default::default() }),
                (Scalar::one(ch), f(2)),
            ],
            ch,
            6,
            &reg,
        )
        .unwrap();
        assert!(check_eq2(&s2, &reg).unwrap().pass);
        // r = f1*f2 + y
        let s3 = InvariantSample::new(
            vec![
                (
                    Scalar::one(ch),
                    RecipeMono {
                        f: [(1, 1), (2, 1)].into_iter().collect(),
                        ..Default::default()
                    },
                ),
                (Scalar::one(ch), RecipeMono { y: 1, ..Default::default() }),
            ],
            ch,
            6,
            &reg,
        )
        .unwrap();
        assert!(check_eq2(&s3, &reg).unwrap().pass);
    }

    #[test]
    fn membership_with_moving_coefficients() {
        let reg = VarRegistry::new();
        let m = express_f_in_ideal(3, Char::Zero, 6, &reg).unwrap();
        assert_eq!(m.r1, rf("(a3*b2 - a2*b3)/(a1*b2 - a2*b1)"));
        assert_eq!(m.r2, rf("(a1*b3 - a3*b1)/(a1*b2 - a2*b1)"));
        assert_eq!(m.noninvariance.len(), 2);
        for w in &m.noninvariance {
            assert_eq!(w.difference_order, Some(2));
            assert_eq!(w.difference_digest.len(), 64);
        }
        // floor t = 3: f1 and f2 are the ideal generators themselves
        assert!(matches!(
            express_f_in_ideal(2, Char::Zero, 6, &reg),
            Err(Error::InvalidIndex(2))
        ));
    }

    #[test]
    fn identity_membership_has_invariant_coefficients() {
        // f1 = 1*f1 + 0*f2: membership with coefficients in F, which sigma
        // fixes exactly; the contrast case to express_f_in_ideal.
        let reg = VarRegistry::new();
        let ch = Char::Zero;
        let d = 6;
        let f1 = make_f(1, ch, d, &reg).unwrap();
        let f2 = make_f(2, ch, d, &reg).unwrap();
        let one = RatFunc::one(ch);
        let zero = RatFunc::zero(ch);
        let combined = f1.scale(&one).checked_add(&f2.scale(&zero)).unwrap();
        assert_eq!(combined, f1);
        let sigma = Sigma::new(d);
        for c in [&one, &zero] {
            let image = sigma.apply_ratfunc(c, &reg).unwrap();
            assert_eq!(image, PowerSeries::constant(c.clone(), d));
        }
    }

    #[test]
    fn constant_relation_examples() {
        // the Cramer coefficients satisfy a3 = r1 a1 + r2 a2
        let reg = VarRegistry::new();
        let m = express_f_in_ideal(3, Char::Zero, 6, &reg).unwrap();
        let rel = extract_constant_relation(3, vec![m.r1.clone(), m.r2.clone()]).unwrap();
        assert!(rel.holds_exactly());
        assert_eq!(rel.target(), 3);

        // a2 = (a2/a1) a1 holds; a2 = 1*a1 does not
        let good = extract_constant_relation(2, vec![rf("a2/a1")]).unwrap();
        assert!(good.holds_exactly());
        let bad = extract_constant_relation(2, vec![rf("1")]).unwrap();
        assert!(!bad.holds_exactly());

        assert!(extract_constant_relation(3, vec![rf("1")]).is_err());
    }

    #[test]
    fn sigma_step_on_scalar_coefficients() {
        // coefficients in F: pollution vanishes and the step reproduces the
        // pure shifted shape.
        let reg = VarRegistry::new();
        let rel = LinearRelation::new(0, vec![rf("2"), rf("-1/3")]).unwrap();
        let out = sigma_step(&rel, 4, &reg).unwrap();
        assert!(out.pollution.is_zero());
        assert!(!out.constant_parts_match); // a3 = 2 a1 - 1/3 a2 is false
        assert_eq!(out.next.shift(), 1);
        assert_eq!(out.next.target(), 4);
        assert_eq!(out.next.coeffs(), rel.coeffs());
    }

    #[test]
    fn sigma_step_on_cramer_relation() {
        let reg = VarRegistry::new();
        for ch in [Char::Zero, Char::Prime(2), Char::Prime(5)] {
            let m = express_f_in_ideal(3, ch, 6, &reg).unwrap();
            let rel = extract_constant_relation(3, vec![m.r1, m.r2]).unwrap();
            assert!(rel.holds_exactly());
            let out = sigma_step(&rel, 6, &reg).unwrap();
            assert!(out.constant_parts_match);
            // the full xy-identity a4 = c1 a2 + c2 a3 + l1 a1 + l2 a2 holds...
            assert!(out.full_identity_holds, "char {ch}");
            assert!(out.xy_residual.is_zero());
            // ...with nonzero pollution,
            assert!(!out.pollution.is_zero(), "char {ch}");
            // so the pollution-free shifted relation cannot hold by itself.
            assert!(!out.next.holds_exactly(), "char {ch}");
        }
    }

    #[test]
    fn sigma_step_on_false_relation_is_vacuous() {
        let reg = VarRegistry::new();
        let rel = LinearRelation::new(0, vec![rf("0"), rf("0")]).unwrap();
        let out = sigma_step(&rel, 4, &reg).unwrap();
        assert!(out.pollution.is_zero());
        assert!(!out.constant_parts_match);
        assert!(!out.full_identity_holds);
    }

    #[test]
    fn sigma_step_needs_truncation_four() {
        let reg = VarRegistry::new();
        let rel = LinearRelation::new(0, vec![rf("1")]).unwrap();
        assert!(matches!(
            sigma_step(&rel, 3, &reg),
            Err(Error::InsufficientTrunc { have: 3, need: 4 })
        ));
    }

    #[test]
    fn pollution_vanishes_on_scalar_coefficients() {
        let reg = VarRegistry::new();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for ch in [Char::Zero, Char::Prime(5)] {
            for _ in 0..10 {
                let coeffs: Vec<RatFunc> = (0..3)
                    .map(|_| RatFunc::constant(crate::sample::random_scalar(&mut rng, ch)))
                    .collect();
                let rel = LinearRelation::new(0, coeffs).unwrap();
                let out = sigma_step(&rel, 4, &reg).unwrap();
                assert!(out.pollution.is_zero());
            }
        }
    }

    #[test]
    fn relation_line_round_trip() {
        let reg = VarRegistry::new();
        let m = express_f_in_ideal(3, Char::Zero, 6, &reg).unwrap();
        let rel = extract_constant_relation(3, vec![m.r1, m.r2]).unwrap();
        let line = rel.to_line();
        let back = LinearRelation::parse_line(&line, Char::Zero).unwrap();
        assert_eq!(back, rel);
        assert_eq!(back.to_line(), line);

        let simple = LinearRelation::parse_line("a4 = (1)*a2 + (a1/b1)*a3", Char::Zero).unwrap();
        assert_eq!(simple.shift(), 1);
        assert_eq!(simple.depth(), 2);
        assert!(LinearRelation::parse_line("a4 = (1)*a2 + (2)*a4", Char::Zero).is_err());
        assert!(LinearRelation::parse_line("a9 = (1)*a2 + (2)*a3", Char::Zero).is_err());
    }
}

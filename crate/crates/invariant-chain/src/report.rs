//! Verification suites and machine-readable reports.
//!
//! `run_verify` exercises the construction end to end (fixed points,
//! closed-form powers, group order, both congruences, the derivation step,
//! ideal membership, DVR classification); `run_certify` builds the
//! non-membership certificates up to the configured depth; `run_bench`
//! times the arithmetic kernels. Reports are deterministic for a fixed
//! (command, config) apart from the recorded runtimes.

use crate::certificate::{chain_certificate, dvr_classify, DvrClass, WITNESS_TEXT_LIMIT};
use crate::error::{Error, Result};
use crate::invariant::InvariantSample;
use crate::linalg::{DetMode, KMatrix};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::sample::{random_alpha, random_poly, random_ratfunc, random_scalar};
use crate::scalar::{Char, Scalar};
use crate::series::PowerSeries;
use crate::sigma::{check_group_order, Sigma};
use crate::theorem::{
    check_eq1, check_eq2, express_f_in_ideal, extract_constant_relation, make_f,
    LinearRelation, sigma_step,
};
use crate::var::{Family, VarRegistry};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeSet;
use std::time::Instant;

/// Output format for reports.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Json,
    Text,
}

/// Configuration shared by every command.
#[derive(Clone, Debug)]
pub struct Config {
    pub characteristic: Char,
    pub trunc: u32,
    pub depth_max: u32,
    pub power_max: u32,
    pub samples: u32,
    pub seed: u64,
    pub format: ReportFormat,
    pub fast_probabilistic: bool,
    /// Hidden negative control: run the suites over a perturbed generator
    /// table to prove they can fail.
    pub negative_control: bool,
    /// Optional wall-clock budget per check, in milliseconds.
    pub budget_ms: Option<u64>,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            characteristic: Char::Zero,
            trunc: 6,
            depth_max: 5,
            power_max: 7,
            samples: 100,
            seed: 0,
            format: ReportFormat::Text,
            fast_probabilistic: false,
            negative_control: false,
            budget_ms: None,
        }
    }
}

impl Config {
    /// Enforces the documented bounds: trunc >= 4 and all counts >= 1.
    /// (The characteristic is validated on construction by [`Char::new`].)
    pub fn validate(&self) -> Result<()> {
        if self.trunc < 4 {
            return Err(Error::InvalidInput(format!(
                "truncation degree must be at least 4, got {}",
                self.trunc
            )));
        }
        if self.depth_max < 1 || self.power_max < 1 || self.samples < 1 {
            return Err(Error::InvalidInput(
                "depth, kmax, and samples must all be at least 1".into(),
            ));
        }
        Ok(())
    }

    fn step(&self) -> Sigma {
        Sigma::configured(self.trunc, 1, self.negative_control)
    }

    fn power(&self, k: i64) -> Sigma {
        Sigma::configured(self.trunc, k, self.negative_control)
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_add(stream))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "failed-budget")]
    FailedBudget,
}

/// One verification record.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    /// The mathematical statement the check verifies.
    pub anchor: String,
    pub status: CheckStatus,
    pub runtime_ms: u64,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
struct ConfigEcho {
    command: String,
    characteristic: String,
    trunc: u32,
    depth_max: u32,
    power_max: u32,
    samples: u32,
    seed: u64,
    format: ReportFormat,
    fast_probabilistic: bool,
    negative_control: bool,
    budget_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
struct Window {
    max_index: u32,
}

/// The full result of one command run.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    config: ConfigEcho,
    window: Window,
    checks: Vec<CheckRecord>,
    overall: String,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.overall == "pass"
    }

    pub fn checks(&self) -> &[CheckRecord] {
        &self.checks
    }

    pub fn window_max_index(&self) -> u32 {
        self.window.max_index
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{} (char {}, trunc {}, seed {})\n",
            self.config.command, self.config.characteristic, self.config.trunc, self.config.seed
        ));
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::FailedBudget => "FAILED-BUDGET",
            };
            out.push_str(&format!("[{status}] {} ({} ms)\n", c.id, c.runtime_ms));
            out.push_str(&format!("    checks: {}\n", c.anchor));
            out.push_str(&format!("    witness: {}\n", c.witness));
        }
        out.push_str(&format!(
            "window: max variable index {}\n",
            self.window.max_index
        ));
        out.push_str(&format!("overall: {}\n", self.overall));
        out
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => self.to_json(),
            ReportFormat::Text => self.to_text(),
        }
    }
}

struct Runner<'a> {
    cfg: &'a Config,
    reg: VarRegistry,
    checks: Vec<CheckRecord>,
}

impl<'a> Runner<'a> {
    fn new(cfg: &'a Config) -> Runner<'a> {
        Runner { cfg, reg: VarRegistry::new(), checks: Vec::new() }
    }

    fn run(
        &mut self,
        id: &str,
        anchor: &str,
        body: impl FnOnce(&Config, &VarRegistry) -> Result<String>,
    ) {
        let start = Instant::now();
        let outcome = body(self.cfg, &self.reg);
        let runtime_ms = start.elapsed().as_millis() as u64;
        let (status, witness) = match outcome {
            Ok(witness) => (CheckStatus::Pass, witness),
            Err(err) => (CheckStatus::Fail, err.to_string()),
        };
        let status = match self.cfg.budget_ms {
            Some(budget) if runtime_ms > budget => CheckStatus::FailedBudget,
            _ => status,
        };
        self.checks.push(CheckRecord {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status,
            runtime_ms,
            witness,
        });
    }

    fn finish(mut self, command: &str) -> Report {
        self.checks.sort_by(|l, r| l.id.cmp(&r.id));
        let overall = if self.checks.iter().all(|c| c.status == CheckStatus::Pass) {
            "pass"
        } else {
            "fail"
        };
        Report {
            config: ConfigEcho {
                command: command.to_string(),
                characteristic: self.cfg.characteristic.to_string(),
                trunc: self.cfg.trunc,
                depth_max: self.cfg.depth_max,
                power_max: self.cfg.power_max,
                samples: self.cfg.samples,
                seed: self.cfg.seed,
                format: self.cfg.format,
                fast_probabilistic: self.cfg.fast_probabilistic,
                negative_control: self.cfg.negative_control,
                budget_ms: self.cfg.budget_ms,
            },
            window: Window { max_index: self.reg.max_index() },
            checks: self.checks,
            overall: overall.to_string(),
        }
    }
}

fn fail(msg: String) -> Error {
    Error::Verification(msg)
}

/// Probabilistic zero test for a series: evaluates every coefficient at
/// random points. Only consulted in fast mode, and flagged in witnesses.
fn probably_zero_series<R: Rng>(s: &PowerSeries, rng: &mut R) -> bool {
    let zero = RatFunc::zero(s.characteristic());
    s.coeffs().all(|(_, c)| c.probably_equal(&zero, rng, 2))
}

fn check_fixed_points(cfg: &Config, reg: &VarRegistry) -> Result<String> {
    let ch = cfg.characteristic;
    let d = cfg.trunc;
    let sigma = cfg.step();
    let x = PowerSeries::var_x(ch, d);
    let y = PowerSeries::var_y(ch, d);
    if sigma.apply_series(&x, reg)? != x {
        return Err(fail("sigma(x) != x".into()));
    }
    if sigma.apply_series(&y, reg)? != y {
        return Err(fail("sigma(y) != y".into()));
    }
    for n in 1..=6 {
        let f = make_f(n, ch, d, reg)?;
        if sigma.apply_series(&f, reg)? != f {
            return Err(fail(format!("sigma(f{n}) != f{n}")));
        }
    }
    Ok(format!("x, y, f1..f6 all fixed at truncation {d}"))
}

fn check_closed_form(cfg: &Config, reg: &VarRegistry) -> Result<String> {
    let ch = cfg.characteristic;
    let d = cfg.trunc;
    let k_hi = match ch {
        Char::Prime(p) if p <= 61 => cfg.power_max.max(2 * p as u32 + 3),
        _ => cfg.power_max,
    };
    for n in 1..=3u32 {
        let an = reg.intern(Family::A, n)?;
        let embedded = PowerSeries::constant(RatFunc::var(an, ch), d);
        let f_next = make_f(n + 1, ch, d, reg)?;
        let y = PowerSeries::var_y(ch, d);
        for direction in [1i64, -1] {
            let step = cfg.power(direction);
            let mut iterated = embedded.clone();
            for step_count in 1..=k_hi {
                let k = direction * i64::from(step_count);
                iterated = step.apply_series(&iterated, reg)?;
                let expected = embedded.checked_add(
                    &y.checked_mul(&f_next)?
                        .scale(&RatFunc::constant(Scalar::from_i64(k, ch))),
                )?;
                let closed = cfg.power(k).apply_poly(&Poly::var(an, ch), reg)?;
                if closed != expected {
                    return Err(fail(format!(
                        "closed form of sigma^{k}(a{n}) differs from a{n} + {k}*y*f{}",
                        n + 1
                    )));
                }
                if iterated != closed {
                    return Err(fail(format!(
                        "iterated sigma^{k}(a{n}) differs from the closed form"
                    )));
                }
            }
        }
    }
    Ok(format!(
        "sigma^k(a_n) = a_n + k*y*f_(n+1) for n <= 3, |k| <= {k_hi}; iterate agrees with closed form"
    ))
}

fn check_order(cfg: &Config, reg: &VarRegistry) -> Result<String> {
    let ch = cfg.characteristic;
    let k_max = match ch {
        Char::Prime(p) => cfg.power_max.max(p as u32),
        Char::Zero => cfg.power_max,
    };
    let check = check_group_order(&cfg.step(), ch, k_max, reg)?;
    if !check.pass {
        return Err(fail(check.witness));
    }
    Ok(check.witness)
}

fn check_eq1_random(cfg: &Config, reg: &VarRegistry) -> Result<String> {
    let ch = cfg.characteristic;
    let mut rng = cfg.rng(0x01);
    let mut prob_rng = cfg.rng(0xff01);
    for i in 0..cfg.samples {
        let alpha = random_alpha(&mut rng, ch, 3);
        let out = check_eq1(&alpha, cfg.trunc, reg)?;
        let pass = if cfg.fast_probabilistic {
            probably_zero_series(&out.difference.reduce_mod_m_pow(2), &mut prob_rng)
        } else {
            out.pass
        };
        if !pass {
            return Err(fail(format!(
                "sample {i}: sigma(alpha) - alpha has a term below degree 2 for alpha = {alpha}"
            )));
        }
    }
    let mode = if cfg.fast_probabilistic { " [probabilistic]" } else { "" };
    Ok(format!(
        "order(sigma(alpha) - alpha) >= 2 for {0}/{0} sampled alpha{mode}",
        cfg.samples
    ))
}

fn check_eq1_worked(cfg: &Config, reg: &VarRegistry) -> Result<String> {
    let ch = cfg.characteristic;
    let alpha = crate::parse::parse_ratfunc("a1/b1", ch)?;
    let sigma = Sigma::configured(2, 1, cfg.negative_control);
    let image = sigma.apply_ratfunc(&alpha, reg)?;
    let expected = crate::series::parse_series(
        "{(0,0): a1/b1, (2,0): (a1*a2)/(b1^2), (1,1): a2/b1 + (a1*b2)/(b1^2), (0,2): b2/b1}",
        ch,
        2,
    )?;
    if image != expected {
        return Err(fail(format!(
            "sigma(a1/b1) = {image} differs from the hand-derived degree-2 expansion"
        )));
    }
    Ok("sigma(a1/b1) matches its geometric-series expansion through degree 2".into())
}

fn check_eq2_family(cfg: &Config, reg: &VarRegistry) -> Result<String> {
    let ch = cfg.characteristic;
    let mut rng = cfg.rng(0x02);
    let mut prob_rng = cfg.rng(0xff02);
    for i in 0..cfg.samples {
        let sample = InvariantSample::random(&mut rng, ch, cfg.trunc, 4, reg)?;
        let out = check_eq2(&sample, reg)?;
        let pass = if cfg.fast_probabilistic {
            probably_zero_series(&out.reduced_difference, &mut prob_rng)
        } else {
            out.pass
        };
        if !pass {
            return Err(fail(format!(
                "sample {i}: sigma(rbar) != rbar mod (x^2,y^2) for r = {}",
                sample.recipe_text()
            )));
        }
    }
    let mode = if cfg.fast_probabilistic { " [probabilistic]" } else { "" };
    Ok(format!(
        "sigma(r) = r and sigma(rbar) = rbar mod (x^2,y^2) for {0}/{0} sampled invariants{mode}",
        cfg.samples
    ))
}

fn check_derivation_cramer(cfg: &Config, reg: &VarRegistry) -> Result<String> {
    let ch = cfg.characteristic;
    let membership = express_f_in_ideal(3, ch, cfg.trunc, reg)?;
    let rel = extract_constant_relation(3, vec![membership.r1, membership.r2])?;
    if !rel.holds_exactly() {
        return Err(fail("constant-term relation a3 = r1 a1 + r2 a2 failed".into()));
    }
    let out = sigma_step(&rel, cfg.trunc, reg)?;
    if !out.constant_parts_match {
        return Err(fail("constant parts did not cancel".into()));
    }
    if !out.full_identity_holds {
        return Err(fail(format!(
            "full xy-identity failed; residual {}",
            out.xy_residual
        )));
    }
    if out.pollution.is_zero() {
        return Err(fail("pollution vector unexpectedly vanished".into()));
    }
    if out.next.holds_exactly() {
        return Err(fail(
            "pollution-free shifted relation held, but the coefficients move under sigma".into(),
        ));
    }
    Ok(format!(
        "a4 = c1 a2 + c2 a3 + l1 a1 + l2 a2 holds exactly with nonzero pollution (l1, l2) = ({}, {})",
        out.pollution.0[0], out.pollution.0[1]
    ))
}

fn check_derivation_scalar(cfg: &Config, reg: &VarRegistry) -> Result<String> {
    let ch = cfg.characteristic;
    let mut rng = cfg.rng(0x03);
    let rounds = 10;
    for _ in 0..rounds {
        let depth = rng.random_range(1..=3usize);
        let shift = rng.random_range(0..=1u32);
        let coeffs: Vec<RatFunc> = (0..depth)
            .map(|_| RatFunc::constant(random_scalar(&mut rng, ch)))
            .collect();
        let rel = LinearRelation::new(shift, coeffs.clone())?;
        let out = sigma_step(&rel, cfg.trunc, reg)?;
        if !out.pollution.is_zero() {
            return Err(fail(
                "pollution appeared on ground-field coefficients".into(),
            ));
        }
        if out.next.shift() != shift + 1 || out.next.coeffs() != coeffs {
            return Err(fail("shifted relation lost its coefficients".into()));
        }
    }
    Ok(format!(
        "pollution vanishes and the step is a pure shift on {rounds} ground-field relations"
    ))
}

fn check_membership(cfg: &Config, reg: &VarRegistry) -> Result<String> {
    let ch = cfg.characteristic;
    let mut digests = Vec::new();
    for t in 3..=6 {
        let m = express_f_in_ideal(t, ch, cfg.trunc, reg)?;
        for w in &m.noninvariance {
            digests.push(format!("t={t},r{}:{}", w.position, &w.difference_digest[..12]));
        }
    }
    Ok(format!(
        "f_t = r1 f1 + r2 f2 exactly, with sigma moving r1, r2, for t = 3..6; diffs {}",
        digests.join(" ")
    ))
}

fn check_dvr(cfg: &Config, _reg: &VarRegistry) -> Result<String> {
    let single: BTreeSet<u64> = [0].into_iter().collect();
    if dvr_classify(&single)? != DvrClass::Field {
        return Err(fail("valuation image {0} must classify as a field".into()));
    }
    let pair: BTreeSet<u64> = [4, 6].into_iter().collect();
    let expect = DvrClass::Dvr { generator: 2, normalized: [2, 3].into_iter().collect() };
    if dvr_classify(&pair)? != expect {
        return Err(fail("valuation image {4,6} must normalize to (2, {2,3})".into()));
    }
    let mut rng = cfg.rng(0x04);
    let rounds = cfg.samples.min(100);
    for _ in 0..rounds {
        let size = rng.random_range(1..=6usize);
        let values: BTreeSet<u64> = (0..size).map(|_| rng.random_range(0..40u64)).collect();
        match dvr_classify(&values)? {
            DvrClass::Field => {
                if values.iter().any(|&v| v != 0) {
                    return Err(fail(format!("nonzero values {values:?} classified as field")));
                }
            }
            DvrClass::Dvr { generator, normalized } => {
                if values.iter().any(|v| v % generator != 0) {
                    return Err(fail(format!(
                        "generator {generator} does not divide all of {values:?}"
                    )));
                }
                let g = normalized
                    .iter()
                    .filter(|&&v| v != 0)
                    .fold(0u64, |acc, &v| num::integer::gcd(acc, v));
                if g != 1 {
                    return Err(fail(format!(
                        "normalized values {normalized:?} have gcd {g} != 1"
                    )));
                }
            }
        }
    }
    Ok(format!(
        "field vs generated-by-gcd classification verified on {rounds} sampled valuation sets"
    ))
}

/// Runs the full verification suite.
pub fn run_verify(cfg: &Config) -> Report {
    let mut runner = Runner::new(cfg);
    runner.run(
        "01-fixed-points",
        "sigma fixes x, y, and every f_n",
        check_fixed_points,
    );
    runner.run(
        "02-closed-form-powers",
        "sigma^k(a_n) = a_n + k*y*f_(n+1), iterate and closed form agree",
        check_closed_form,
    );
    runner.run(
        "03-group-order",
        "the group generated by sigma has order p in characteristic p and is infinite in characteristic 0",
        check_order,
    );
    runner.run(
        "04-scalar-congruence-random",
        "sigma(alpha) = alpha mod m^2 for alpha in K",
        check_eq1_random,
    );
    runner.run(
        "05-scalar-congruence-worked",
        "sigma(a1/b1) expands by the geometric series of its denominator image",
        check_eq1_worked,
    );
    runner.run(
        "06-invariant-constant-congruence",
        "sigma(rbar) = rbar mod (x^2,y^2) for the constant term rbar of an invariant r",
        check_eq2_family,
    );
    runner.run(
        "07-derivation-step-cramer",
        "applying sigma to a3 = r1 a1 + r2 a2 yields the exact shifted xy-identity with nonzero pollution",
        check_derivation_cramer,
    );
    runner.run(
        "08-derivation-step-scalar",
        "relations with ground-field coefficients shift without pollution",
        check_derivation_scalar,
    );
    runner.run(
        "09-ideal-membership-noninvariant",
        "f_t lies in (f1, f2)R only with coefficients that move under sigma",
        check_membership,
    );
    runner.run(
        "10-dvr-classification",
        "the valuation image of an invariant subring of a DVR is zero or generated by its gcd",
        check_dvr,
    );
    runner.finish("verify")
}

/// Builds certificates for every depth up to `depth_max`.
pub fn run_certify(cfg: &Config) -> Report {
    let mut runner = Runner::new(cfg);
    for n in 1..=cfg.depth_max {
        let id = format!("cert-n{n}");
        let anchor = format!(
            "depth {n}: the Hankel system pins a unique candidate and constraint m = {n} leaves a nonzero residual"
        );
        runner.run(&id, &anchor, |cfg, reg| {
            let cert = chain_certificate(n, cfg.characteristic, reg)?;
            Ok(cert.to_json_line(WITNESS_TEXT_LIMIT))
        });
    }
    runner.finish("certify")
}

/// Times the arithmetic kernels on fixed seeded workloads.
pub fn run_bench(cfg: &Config) -> Report {
    let mut runner = Runner::new(cfg);
    let ch = cfg.characteristic;
    runner.run(
        "bench-01-poly-mul",
        "sparse polynomial product",
        |cfg, _| {
            let mut rng = cfg.rng(0x10);
            let lhs = random_poly(&mut rng, ch, 6, 6, 40);
            let rhs = random_poly(&mut rng, ch, 6, 6, 40);
            let prod = lhs.checked_mul(&rhs)?;
            Ok(format!(
                "{} x {} terms -> {} terms",
                lhs.num_terms(),
                rhs.num_terms(),
                prod.num_terms()
            ))
        },
    );
    runner.run(
        "bench-02-series-mul",
        "truncated series product at degree 8",
        |cfg, _| {
            let mut rng = cfg.rng(0x11);
            let lhs = crate::sample::random_series(&mut rng, ch, 8, 4);
            let rhs = crate::sample::random_series(&mut rng, ch, 8, 4);
            let prod = lhs.checked_mul(&rhs)?;
            Ok(format!(
                "{} x {} coefficients -> {} coefficients",
                lhs.num_terms(),
                rhs.num_terms(),
                prod.num_terms()
            ))
        },
    );
    runner.run(
        "bench-03-series-invert",
        "unit inversion at degree 8",
        |cfg, _| {
            let mut rng = cfg.rng(0x12);
            let unit = crate::sample::random_series(&mut rng, ch, 8, 3)
                .checked_add(&PowerSeries::one(ch, 8))?;
            let inv = unit.invert_unit()?;
            Ok(format!("inverse carries {} coefficients", inv.num_terms()))
        },
    );
    runner.run(
        "bench-04-bareiss-det",
        "fraction-free determinant of the 5x5 Hankel matrix",
        |_, reg| {
            for i in 1..=9 {
                reg.intern(Family::A, i)?;
            }
            let m = KMatrix::from_fn(5, 5, |i, j| {
                RatFunc::var(crate::var::VarRef::a((i + j + 1) as u32), ch)
            })?;
            let det = m.det(DetMode::Bareiss)?;
            Ok(format!("determinant has {} terms", det.num().num_terms()))
        },
    );
    runner.run(
        "bench-05-naive-det",
        "naive fraction determinant of a random 4x4 matrix",
        |cfg, _| {
            let mut rng = cfg.rng(0x13);
            let m = KMatrix::from_fn(4, 4, |_, _| random_ratfunc(&mut rng, ch, 3, 2))?;
            let det = m.det(DetMode::Naive)?;
            Ok(format!(
                "determinant numerator has {} terms",
                det.num().num_terms()
            ))
        },
    );
    runner.run(
        "bench-06-certificate",
        "depth-3 certificate construction",
        |cfg, reg| {
            let cert = chain_certificate(3, cfg.characteristic, reg)?;
            Ok(format!(
                "residual numerator has {} terms",
                cert.residual.num().num_terms()
            ))
        },
    );
    runner.finish("bench")
}

//! Verification suites: each one checks a single identity exhaustively over
//! small inputs and returns a deterministic [`VerificationReport`].
//!
//! Cases run in parallel on the current rayon pool; results are collected
//! in case order, so reports do not depend on scheduling.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{format_rational, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::formulas::{
    corollary_product, hook_dimension, prop4_product, rtheta_induction_sides, rtheta_value, skew_fraction_product,
    theorem1_product, theorem2_product, theorem2_value, LinearProduct,
};
use crate::fusion::{check_yang_baxter, fused_f};
use crate::intertwiner::{
    check_eq4, check_prop3, composite_i_prime_i, composite_scalar, interpolate_values, Component,
};
use crate::partition::{
    build_delta, build_gamma, enumerate_index_sequences, IndexKind, IndexSequence, Partition, ShapeBuild,
};
use crate::points::{generic_points, rng, small_rational};
use crate::repr::{matrix_element_f, model, multiplicity_in_w, verify_prop6};
use crate::tableau::{build_gamma_tableau, column_tableau, enumerate_standard, row_tableau, StandardTableau};

/// Evaluation points per case for the point-wise comparisons.
pub const POINTS_PER_CASE: usize = 3;

/// Largest `gamma` model for which the rank check is attempted.
pub const PROP6_MODEL_LIMIT: usize = 200;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Theorem1,
    Theorem2,
    Corollary,
    Prop1,
    Prop2,
    Prop3,
    Prop4,
    Prop5,
    Prop6,
    Prop7,
    Eq4,
    YangBaxter,
    HookDim,
    RTheta,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Theorem1,
        Suite::Theorem2,
        Suite::Corollary,
        Suite::Prop1,
        Suite::Prop2,
        Suite::Prop3,
        Suite::Prop4,
        Suite::Prop5,
        Suite::Prop6,
        Suite::Prop7,
        Suite::Eq4,
        Suite::YangBaxter,
        Suite::HookDim,
        Suite::RTheta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Corollary => "corollary",
            Suite::Prop1 => "prop1",
            Suite::Prop2 => "prop2",
            Suite::Prop3 => "prop3",
            Suite::Prop4 => "prop4",
            Suite::Prop5 => "prop5",
            Suite::Prop6 => "prop6",
            Suite::Prop7 => "prop7",
            Suite::Eq4 => "eq4",
            Suite::YangBaxter => "yangbaxter",
            Suite::HookDim => "hookdim",
            Suite::RTheta => "rtheta",
        }
    }

    pub fn claim(self) -> &'static str {
        match self {
            Suite::Theorem1 => "J acts on the gamma-component of W by the closed-form product over the boxes of lambda",
            Suite::Theorem2 => "J acts on the delta-component of W by the closed-form product over the boxes of lambda",
            Suite::Corollary => "r_{lambda+mu} / r_{(lambda'+mu')'} is the product of mixed-hook fractions over the boxes common to lambda and mu",
            Suite::Prop1 => "Jucys-Murphy elements act diagonally with the contents as eigenvalues, and F_L^2 = (l!/dim V_lambda) F_L",
            Suite::Prop2 => "the fusion procedure recovers the diagonal matrix element F_L",
            Suite::Prop3 => "right multiplication by R_LM tau intertwines W and W' as modules over the degenerate affine Hecke algebra",
            Suite::Prop4 => "R_LM(z,w) tau R_ML(w,z) tau^-1 is scalar and r_nu(z,w) r'_nu(w,z) equals the closed-form product",
            Suite::Prop5 => "Gamma is standard for the chain l+1 < ... < l+m < 1 < ... < l",
            Suite::Prop6 => "F_{L^c} Fbar_M has one-dimensional image in V_gamma, spanned by Q v_Gamma",
            Suite::Prop7 => "the product of the mixed-hook fractions over the boxes of lambda outside mu equals 1",
            Suite::Eq4 => "F_L Fbar_M R_LM = R'_LM F_L Fbar_M",
            Suite::YangBaxter => "the factors f_pq satisfy the braid relation and f_pq(u,v) f_qp(v,u) = 1 - (u-v)^-2",
            Suite::HookDim => "dim V_lambda = l! / (product of hook lengths)",
            Suite::RTheta => "r_theta collapses to a single product over rows, and h_lambda m! r_theta at u = lambda'_1 equals h_theta",
        }
    }

    /// Suites that only evaluate closed forms allow larger sizes.
    pub fn formula_only(self) -> bool {
        matches!(self, Suite::Prop5 | Suite::Prop7 | Suite::HookDim | Suite::RTheta)
    }

    pub fn default_max_size(self) -> usize {
        match self {
            Suite::Prop3 => 5,
            Suite::Prop7 => 6,
            Suite::HookDim | Suite::RTheta => 8,
            _ if self.formula_only() => 8,
            _ => 6,
        }
    }

    pub fn hard_cap(self) -> usize {
        if self.formula_only() {
            8
        } else {
            6
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    pub max_size: Option<usize>,
    pub seed: u64,
    pub samples: usize,
    /// Run the group-algebra computations over `RatFunc` instead of at points.
    pub symbolic: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_size: None, seed: 1, samples: 20, symbolic: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub case: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportInputs {
    pub max_size: usize,
    pub seed: u64,
    pub samples: usize,
    pub symbolic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub claim: String,
    pub inputs: ReportInputs,
    pub status: String,
    pub total: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<CaseRecord>,
    pub cases: Vec<CaseRecord>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn new(suite: Suite, inputs: ReportInputs, cases: Vec<CaseRecord>) -> Self {
        let failed = cases.iter().filter(|c| !c.ok).count();
        VerificationReport {
            suite: suite.name().into(),
            claim: suite.claim().into(),
            inputs,
            status: if failed == 0 { "pass" } else { "fail" }.into(),
            total: cases.len(),
            failed,
            first_failure: cases.iter().find(|c| !c.ok).cloned(),
            cases,
        }
    }
}

/// Result of one case: `None` on success, otherwise what went wrong.
type Outcome = Result<Option<String>>;

fn run_cases<C: Sync>(
    cases: &[C],
    label: impl Fn(&C) -> String + Sync,
    check: impl Fn(usize, &C) -> Outcome + Sync,
) -> Vec<CaseRecord> {
    cases
        .par_iter()
        .enumerate()
        .map(|(idx, c)| {
            let detail = match check(idx, c) {
                Ok(d) => d,
                Err(e) => Some(e.to_string()),
            };
            CaseRecord { case: label(c), ok: detail.is_none(), detail }
        })
        .collect()
}

/// Runs one suite. Fails only on option errors; mathematical failures are
/// recorded in the report.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<VerificationReport> {
    let max = opts.max_size.unwrap_or(suite.default_max_size());
    if max > suite.hard_cap() {
        return Err(Error::Precondition(format!(
            "--max-size {max} exceeds the cap {} for {suite}",
            suite.hard_cap()
        )));
    }
    let inputs = ReportInputs { max_size: max, seed: opts.seed, samples: opts.samples, symbolic: opts.symbolic };
    let cases = match suite {
        Suite::Theorem1 => eigenvalue_suite(IndexKind::Rows, max, opts),
        Suite::Theorem2 => eigenvalue_suite(IndexKind::Columns, max, opts),
        Suite::Corollary => corollary_suite(max, opts),
        Suite::Prop1 => prop1_suite(max),
        Suite::Prop2 => prop2_suite(max),
        Suite::Prop3 => prop3_suite(max, opts),
        Suite::Prop4 => prop4_suite(max, opts),
        Suite::Prop5 => prop5_suite(max),
        Suite::Prop6 => prop6_suite(max),
        Suite::Prop7 => prop7_suite(max),
        Suite::Eq4 => eq4_suite(max, opts),
        Suite::YangBaxter => yang_baxter_suite(opts),
        Suite::HookDim => hookdim_suite(max),
        Suite::RTheta => rtheta_suite(max),
    };
    Ok(VerificationReport::new(suite, inputs, cases))
}

/// Every suite in order, each at its own default size unless
/// `opts.max_size` is set, in which case it is clamped to each cap.
pub fn run_all(opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    Suite::ALL
        .into_iter()
        .map(|s| {
            let o = VerifyOptions { max_size: opts.max_size.map(|m| m.min(s.hard_cap())), ..opts.clone() };
            run_suite(s, &o)
        })
        .collect()
}

/// `(lam, mu)` with both nonempty and `|lam| + |mu| <= max`.
pub fn pairs(max: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for n in 2..=max {
        for l in 1..n {
            for lam in Partition::all_of_size(l) {
                for mu in Partition::all_of_size(n - l) {
                    out.push((lam.clone(), mu));
                }
            }
        }
    }
    out
}

fn case_seed(seed: u64, idx: usize) -> u64 {
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(idx as u64)
}

fn fmt_seq(s: &IndexSequence) -> String {
    s.values().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Compares a brute-force eigenvalue with a closed form, either
/// symbolically or at `2 lm + 1` generic points (the first three compared
/// directly, all of them interpolated).
fn compare_eigenvalue(
    brute: impl Fn(&Rational) -> Result<Rational>,
    brute_symbolic: impl Fn() -> Result<RatFunc>,
    closed: &LinearProduct,
    bound: usize,
    n: usize,
    seed: u64,
    symbolic: bool,
) -> Outcome {
    let expected = closed.to_ratfunc();
    if symbolic {
        let got = brute_symbolic()?;
        return Ok((got != expected).then(|| format!("brute force {got}, closed form {expected}")));
    }
    let pts = generic_points(seed, n, (2 * bound + 1).max(POINTS_PER_CASE));
    let mut values = Vec::with_capacity(pts.len());
    for (k, u) in pts.into_iter().enumerate() {
        let got = brute(&u)?;
        if k < POINTS_PER_CASE {
            let want = closed.eval(&u)?;
            if got != want {
                return Ok(Some(format!(
                    "at u = {}: brute force {}, closed form {}",
                    format_rational(&u),
                    format_rational(&got),
                    format_rational(&want)
                )));
            }
        }
        values.push((u, got));
    }
    let interp = interpolate_values(&values, bound)?;
    Ok((interp != expected).then(|| format!("interpolated {interp}, closed form {expected}")))
}

struct EigenCase {
    lam: Partition,
    mu: Partition,
    m_tab: StandardTableau,
    seq: IndexSequence,
    nu: Partition,
}

fn eigen_cases(kind: IndexKind, max: usize) -> Vec<EigenCase> {
    let mut out = Vec::new();
    for (lam, mu) in pairs(max) {
        for seq in enumerate_index_sequences(&lam, &mu, kind) {
            let built = match kind {
                IndexKind::Rows => build_gamma(&lam, &mu, &seq),
                IndexKind::Columns => build_delta(&lam, &mu, &seq),
            };
            let Ok(ShapeBuild::Accepted(nu)) = built else { continue };
            for m_tab in enumerate_standard(&mu) {
                out.push(EigenCase { lam: lam.clone(), mu: mu.clone(), m_tab, seq: seq.clone(), nu: nu.clone() });
            }
        }
    }
    out
}

fn eigenvalue_suite(kind: IndexKind, max: usize, opts: &VerifyOptions) -> Vec<CaseRecord> {
    let cases = eigen_cases(kind, max);
    let letter = if kind == IndexKind::Rows { "a" } else { "b" };
    run_cases(
        &cases,
        |c| format!("lambda={} mu={} M={} {letter}={} nu={}", c.lam, c.mu, c.m_tab, fmt_seq(&c.seq), c.nu),
        |idx, c| {
            let closed = match kind {
                IndexKind::Rows => theorem1_product(&c.lam, &c.mu, &c.seq)?,
                IndexKind::Columns => theorem2_product(&c.lam, &c.mu, &c.seq)?,
            };
            let comp = Component::new(&c.nu, &column_tableau(&c.lam), &c.m_tab)?;
            compare_eigenvalue(
                |u| Ok(comp.eigenvalue_at(u)?.value),
                || Ok(comp.eigenvalue(&RatFunc::var())?.value),
                &closed,
                c.lam.size() * c.mu.size(),
                c.lam.size() + c.mu.size(),
                case_seed(opts.seed, idx),
                opts.symbolic,
            )
        },
    )
}

/// Brute force up to `max`, closed forms up to `CLOSED_FORM_MAX`.
pub const CLOSED_FORM_MAX: usize = 10;

fn corollary_suite(max: usize, opts: &VerifyOptions) -> Vec<CaseRecord> {
    let brute_cases = pairs(max);
    let mut records = run_cases(
        &brute_cases,
        |(lam, mu)| format!("brute force lambda={lam} mu={mu}"),
        |idx, (lam, mu)| {
            let (lam_tab, m_tab) = (column_tableau(lam), row_tableau(mu));
            let top = Component::new(&lam.row_sum(mu), &lam_tab, &m_tab)?;
            let bottom = Component::new(&lam.column_sum(mu), &lam_tab, &m_tab)?;
            compare_eigenvalue(
                |u| Ok(top.eigenvalue_at(u)?.value / bottom.eigenvalue_at(u)?.value),
                || top.eigenvalue(&RatFunc::var())?.value.div(&bottom.eigenvalue(&RatFunc::var())?.value),
                &corollary_product(lam, mu),
                2 * lam.size() * mu.size(),
                lam.size() + mu.size(),
                case_seed(opts.seed, idx),
                opts.symbolic,
            )
        },
    );
    let closed_cases = pairs(CLOSED_FORM_MAX);
    records.extend(run_cases(
        &closed_cases,
        |(lam, mu)| format!("closed form lambda={lam} mu={mu}"),
        |_, (lam, mu)| {
            let mut ratio =
                theorem1_product(lam, mu, &IndexSequence::identity(lam.len(), IndexKind::Rows))?;
            ratio.times(
                &theorem2_product(lam, mu, &IndexSequence::identity(lam.part(1), IndexKind::Columns))?.inverse(),
            );
            let h = corollary_product(lam, mu);
            Ok((ratio != h).then(|| format!("ratio {}, h {}", ratio.to_ratfunc(), h.to_ratfunc())))
        },
    ));
    records
}

fn shapes_up_to(max: usize) -> Vec<Partition> {
    (1..=max).flat_map(Partition::all_of_size).collect()
}

fn prop1_suite(max: usize) -> Vec<CaseRecord> {
    let shapes = shapes_up_to(max);
    let mut records = run_cases(
        &shapes,
        |s| format!("Jucys-Murphy in the model of {s}"),
        |_, s| {
            let md = model(s);
            md.check_relations()?;
            md.check_jucys_murphy()?;
            Ok(None)
        },
    );
    let tabs: Vec<StandardTableau> = shapes_up_to(max.min(5)).iter().flat_map(enumerate_standard).collect();
    records.extend(run_cases(
        &tabs,
        |t| format!("F^2 for {t}"),
        |_, t| {
            let f = matrix_element_f(t);
            let l = t.size() as i64;
            let fact: i64 = (1..=l).product();
            let c = Rational::new(fact.into(), (model(t.shape()).dim() as i64).into());
            Ok((f.mul(&f)? != f.scale(&c)).then(|| "F^2 is not the expected multiple of F".to_string()))
        },
    ));
    records
}

fn prop2_suite(max: usize) -> Vec<CaseRecord> {
    let tabs: Vec<StandardTableau> = shapes_up_to(max.min(5)).iter().flat_map(enumerate_standard).collect();
    run_cases(
        &tabs,
        |t| format!("T={t}"),
        |_, t| Ok((fused_f(t)? != *matrix_element_f(t)).then(|| "fused value differs from F_T".to_string())),
    )
}

fn all_tableau_pairs(max: usize) -> Vec<(StandardTableau, StandardTableau)> {
    let mut out = Vec::new();
    for (lam, mu) in pairs(max) {
        for lam_tab in enumerate_standard(&lam) {
            for m_tab in enumerate_standard(&mu) {
                out.push((lam_tab.clone(), m_tab));
            }
        }
    }
    out
}

fn points_for(opts: &VerifyOptions, idx: usize, n: usize, count: usize) -> Vec<Rational> {
    generic_points(case_seed(opts.seed, idx), n, count)
}

fn prop3_suite(max: usize, opts: &VerifyOptions) -> Vec<CaseRecord> {
    let cases = all_tableau_pairs(max);
    run_cases(
        &cases,
        |(a, b)| format!("L={a} M={b}"),
        |idx, (lam_tab, m_tab)| {
            let n = lam_tab.size() + m_tab.size();
            if opts.symbolic {
                let r = check_prop3(lam_tab, m_tab, &RatFunc::var())?;
                return Ok((!r.passed()).then(|| format!("{r:?}")));
            }
            for u in points_for(opts, idx, n, POINTS_PER_CASE) {
                let r = check_prop3(lam_tab, m_tab, &u)?;
                if !r.passed() {
                    return Ok(Some(format!("at u = {}: {r:?}", format_rational(&u))));
                }
            }
            Ok(None)
        },
    )
}

fn prop4_suite(max: usize, opts: &VerifyOptions) -> Vec<CaseRecord> {
    let pair_list = pairs(max);
    let mut records = run_cases(
        &pair_list,
        |(lam, mu)| format!("composite lambda={lam} mu={mu}"),
        |idx, (lam, mu)| {
            let n = lam.size() + mu.size();
            let rhs = prop4_product(lam, mu);
            for m_tab in enumerate_standard(mu) {
                let lam_tab = column_tableau(lam);
                for u in points_for(opts, idx, n, POINTS_PER_CASE) {
                    let comp = composite_i_prime_i(&lam_tab, &m_tab, &u)?;
                    let Some(s) = comp.scalar_value() else {
                        return Ok(Some(format!("M={m_tab}: not scalar at u = {}", format_rational(&u))));
                    };
                    let proof = composite_scalar(&lam_tab, &m_tab, &u)?;
                    let closed = rhs.eval(&u)?;
                    if s != proof || s != closed {
                        return Ok(Some(format!(
                            "M={m_tab} at u = {}: element {}, factor product {}, closed form {}",
                            format_rational(&u),
                            format_rational(&s),
                            format_rational(&proof),
                            format_rational(&closed)
                        )));
                    }
                }
            }
            Ok(None)
        },
    );

    let mut nu_cases = Vec::new();
    for (lam, mu) in &pair_list {
        let (lam_tab, m_tab) = (column_tableau(lam), row_tableau(mu));
        for nu in Partition::all_of_size(lam.size() + mu.size()) {
            if multiplicity_in_w(&nu, &lam_tab, &m_tab).map(|k| k == 1).unwrap_or(false) {
                nu_cases.push((lam.clone(), mu.clone(), nu));
            }
        }
    }
    records.extend(run_cases(
        &nu_cases,
        |(lam, mu, nu)| format!("eigenvalue product lambda={lam} mu={mu} nu={nu}"),
        |idx, (lam, mu, nu)| {
            let n = lam.size() + mu.size();
            let comp = Component::new(nu, &column_tableau(lam), &row_tableau(mu))?;
            let rhs = prop4_product(lam, mu);
            if opts.symbolic {
                let u = RatFunc::var();
                let got = comp.eigenvalue(&u)?.value.mul(&comp.eigenvalue_prime(&u)?.value);
                let want = rhs.to_ratfunc();
                return Ok((got != want).then(|| format!("r r' = {got}, closed form {want}")));
            }
            for u in generic_points(case_seed(opts.seed, 10_000 + idx), n, POINTS_PER_CASE) {
                let got = comp.eigenvalue_at(&u)?.value * comp.eigenvalue_prime_at(&u)?.value;
                let want = rhs.eval(&u)?;
                if got != want {
                    return Ok(Some(format!(
                        "at u = {}: r r' = {}, closed form {}",
                        format_rational(&u),
                        format_rational(&got),
                        format_rational(&want)
                    )));
                }
            }
            Ok(None)
        },
    ));
    records
}

struct GammaCase {
    lam: Partition,
    mu: Partition,
    a: IndexSequence,
    m_tab: StandardTableau,
}

fn gamma_cases(max: usize) -> Vec<GammaCase> {
    let mut out = Vec::new();
    for (lam, mu) in pairs(max) {
        for a in enumerate_index_sequences(&lam, &mu, IndexKind::Rows) {
            for m_tab in enumerate_standard(&mu) {
                out.push(GammaCase { lam: lam.clone(), mu: mu.clone(), a: a.clone(), m_tab });
            }
        }
    }
    out
}

fn gamma_label(c: &GammaCase) -> String {
    format!("lambda={} mu={} a={} M={}", c.lam, c.mu, fmt_seq(&c.a), c.m_tab)
}

fn prop5_suite(max: usize) -> Vec<CaseRecord> {
    let cases = gamma_cases(max);
    run_cases(&cases, gamma_label, |_, c| {
        let g = build_gamma_tableau(&c.lam, &c.mu, &c.a, &c.m_tab)?;
        let shape = build_gamma(&c.lam, &c.mu, &c.a)?.accepted();
        Ok((shape.as_ref() != Some(g.shape())).then(|| format!("Gamma {g} has the wrong shape")))
    })
}

fn prop6_suite(max: usize) -> Vec<CaseRecord> {
    let cases: Vec<GammaCase> = gamma_cases(max)
        .into_iter()
        .filter(|c| {
            build_gamma(&c.lam, &c.mu, &c.a)
                .ok()
                .and_then(ShapeBuild::accepted)
                .is_some_and(|g| model(&g).dim() < PROP6_MODEL_LIMIT)
        })
        .collect();
    run_cases(&cases, gamma_label, |_, c| {
        let r = verify_prop6(&c.lam, &c.mu, &c.a, &c.m_tab)?;
        Ok((!r.passed()).then(|| format!("{r:?}")))
    })
}

fn prop7_suite(max: usize) -> Vec<CaseRecord> {
    let shapes: Vec<Partition> = (0..=max).flat_map(Partition::all_of_size).collect();
    let cases: Vec<(Partition, Partition)> =
        shapes.iter().flat_map(|l| shapes.iter().map(move |m| (l.clone(), m.clone()))).collect();
    run_cases(
        &cases,
        |(lam, mu)| format!("lambda={lam} mu={mu}"),
        |_, (lam, mu)| {
            let prod = skew_fraction_product(lam, mu);
            Ok((!prod.is_one()).then(|| format!("product is {}", prod.to_ratfunc())))
        },
    )
}

fn eq4_suite(max: usize, opts: &VerifyOptions) -> Vec<CaseRecord> {
    let cases = all_tableau_pairs(max);
    let mut records = run_cases(
        &cases,
        |(a, b)| format!("L={a} M={b}"),
        |idx, (lam_tab, m_tab)| {
            let n = lam_tab.size() + m_tab.size();
            if opts.symbolic {
                return Ok(check_eq4(lam_tab, m_tab, &RatFunc::var())?.map(|s| format!("coefficient of {s} differs")));
            }
            for u in points_for(opts, idx, n, POINTS_PER_CASE) {
                if let Some(s) = check_eq4(lam_tab, m_tab, &u)? {
                    return Ok(Some(format!("at u = {}: coefficient of {s} differs", format_rational(&u))));
                }
            }
            Ok(None)
        },
    );
    // seeded random instances
    let mut r = rng(opts.seed);
    let samples: Vec<(StandardTableau, StandardTableau, Rational)> = (0..opts.samples)
        .map(|_| {
            let (lam_tab, m_tab) = cases[r.gen_range(0..cases.len())].clone();
            let n = lam_tab.size() + m_tab.size();
            let u = crate::points::generic_point(&mut r, n);
            (lam_tab, m_tab, u)
        })
        .collect();
    records.extend(run_cases(
        &samples,
        |(a, b, u)| format!("sample L={a} M={b} u={}", format_rational(u)),
        |_, (lam_tab, m_tab, u)| Ok(check_eq4(lam_tab, m_tab, u)?.map(|s| format!("coefficient of {s} differs"))),
    ));
    records
}

fn yang_baxter_suite(opts: &VerifyOptions) -> Vec<CaseRecord> {
    let mut r = rng(opts.seed);
    let mut triples = Vec::with_capacity(opts.samples);
    while triples.len() < opts.samples {
        let (u, v, w) = (small_rational(&mut r), small_rational(&mut r), small_rational(&mut r));
        if u != v && v != w && u != w {
            triples.push((u, v, w));
        }
    }
    run_cases(
        &triples,
        |(u, v, w)| format!("u={} v={} w={}", format_rational(u), format_rational(v), format_rational(w)),
        |_, (u, v, w)| {
            let failures = check_yang_baxter(u, v, w)?;
            Ok(failures.first().map(|f| format!("{} relation fails for labels {:?}", f.relation, f.labels)))
        },
    )
}

fn hookdim_suite(max: usize) -> Vec<CaseRecord> {
    let shapes: Vec<Partition> = (0..=max).flat_map(Partition::all_of_size).collect();
    run_cases(
        &shapes,
        |s| format!("lambda={s}"),
        |_, s| {
            let dim = hook_dimension(s)?.dim;
            let count = enumerate_standard(s).len();
            Ok((dim != count.into()).then(|| format!("hook formula {dim}, tableaux {count}")))
        },
    )
}

fn rtheta_suite(max: usize) -> Vec<CaseRecord> {
    let cases: Vec<(Partition, usize)> = shapes_up_to(max)
        .into_iter()
        .flat_map(|lam| {
            let smallest = *lam.parts().last().expect("nonempty");
            (1..=smallest).map(move |m| (lam.clone(), m))
        })
        .collect();
    run_cases(
        &cases,
        |(lam, m)| format!("lambda={lam} m={m}"),
        |_, (lam, m)| {
            let b = IndexSequence::identity(lam.part(1), IndexKind::Columns);
            let t2 = theorem2_value(lam, &Partition::new(vec![*m])?, &b)?;
            let rt = rtheta_value(lam, *m)?;
            if t2 != rt {
                return Ok(Some(format!("collapsed product {rt}, full product {t2}")));
            }
            let (h_theta, rhs) = rtheta_induction_sides(lam, *m)?;
            Ok((h_theta != rhs).then(|| format!("h_theta {h_theta}, h_lambda m! r_theta {rhs}")))
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(max: usize) -> VerifyOptions {
        VerifyOptions { max_size: Some(max), ..VerifyOptions::default() }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("theorem3".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let max = if s == Suite::YangBaxter { 3 } else { 4 };
            let r = run_suite(s, &VerifyOptions { samples: 5, ..opts(max) }).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.first_failure);
            assert!(r.total > 0, "{s} ran no cases");
        }
    }

    #[test]
    fn symbolic_mode_agrees() {
        let o = VerifyOptions { symbolic: true, ..opts(3) };
        for s in [Suite::Theorem1, Suite::Theorem2, Suite::Corollary, Suite::Prop3, Suite::Prop4, Suite::Eq4] {
            let r = run_suite(s, &o).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.first_failure);
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite(Suite::Theorem1, &opts(4)).unwrap();
        let b = run_suite(Suite::Theorem1, &opts(4)).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(run_suite(Suite::Theorem1, &opts(7)).is_err());
        assert!(run_suite(Suite::HookDim, &opts(9)).is_err());
    }

    #[test]
    fn pair_counts() {
        // partitions of 1 and 1: one pair; sizes summing to 3: (1,2),(2,1) splits
        assert_eq!(pairs(2).len(), 1);
        assert_eq!(pairs(3).len(), 1 + 2 + 2);
    }
}

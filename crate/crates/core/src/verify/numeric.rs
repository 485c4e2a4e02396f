//! Floating-point redundancy checks: limit relations and integral representations.

use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{int, pochhammer, rat, Rational};
use crate::families::{recurrence_eval, FamilyParams, Params};

fn f(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitKind {
    /// `C_n(x; a, gamma) = lim_{beta -> oo} M_n(x; beta, a/(a+beta), gamma) / (gamma+beta)_n`.
    CharlierFromMeixner,
    /// `L_n^(alpha)(x; gamma) = lim_{c -> 1} M_n(x/(1-c); alpha+1, c, gamma) / (gamma+1)_n`.
    LaguerreFromMeixner,
}

impl LimitKind {
    pub fn id(self) -> &'static str {
        match self {
            Self::CharlierFromMeixner => "charlier_from_meixner",
            Self::LaguerreFromMeixner => "laguerre_from_meixner",
        }
    }
}

/// Limit schedule: step `k` uses `beta = 2^k` or `c = 1 - 2^-k`.
/// `param` is `a` or `alpha`.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitSchedule {
    pub kind: LimitKind,
    pub param: Rational,
    pub gamma: Rational,
    pub x: Rational,
    pub n: usize,
    pub steps: Vec<u32>,
}

impl LimitSchedule {
    /// Exponents `4..=20`.
    pub fn doubling(kind: LimitKind, param: Rational, gamma: Rational, x: Rational, n: usize) -> Self {
        Self { kind, param, gamma, x, n, steps: (4..=20).collect() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitOutcome {
    pub target: f64,
    pub final_value: f64,
    pub errors: Vec<f64>,
    pub final_relative_error: f64,
    pub passed: bool,
}

/// Tail length over which decay and the `1/2` ratio are checked.
const TAIL: usize = 5;

/// Runs the schedule. Passes when the error is zero throughout, or when the
/// last errors decrease, their ratios lie within 20% of `1/2`, and the final
/// relative error is below `tolerance_ratio`.
pub fn limit_check(schedule: &LimitSchedule, tolerance_ratio: f64) -> Result<LimitOutcome> {
    if schedule.steps.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Precondition("limit steps must increase".into()));
    }
    if schedule.n > 10 {
        return Err(Error::Precondition("limit checks need n <= 10".into()));
    }
    let (n, gamma, x) = (schedule.n, &schedule.gamma, &schedule.x);
    let target_params = match schedule.kind {
        LimitKind::CharlierFromMeixner => Params::acp(schedule.param.clone(), gamma.clone()),
        LimitKind::LaguerreFromMeixner => Params::alp(schedule.param.clone(), gamma.clone()),
    };
    let target = recurrence_eval(&target_params, x, n)?[n].clone();
    let mut errors = Vec::with_capacity(schedule.steps.len());
    let mut last = Rational::zero();
    for &k in &schedule.steps {
        let big = Rational::from_integer(num_bigint::BigInt::from(2u8).pow(k));
        let value = match schedule.kind {
            LimitKind::CharlierFromMeixner => {
                let a = &schedule.param;
                let params = Params::amp(big.clone(), a / (a + &big), gamma.clone());
                recurrence_eval(&params, x, n)?[n].clone() / pochhammer(&(gamma + &big), n)
            }
            LimitKind::LaguerreFromMeixner => {
                let c = int(1) - Rational::one() / &big;
                let params = Params::amp(&schedule.param + int(1), c.clone(), gamma.clone());
                recurrence_eval(&params, &(x * &big), n)?[n].clone() / pochhammer(&(gamma + int(1)), n)
            }
        };
        errors.push(f(&(&value - &target).abs()));
        last = value;
    }
    let t = f(&target);
    let final_err = errors.last().copied().unwrap_or(0.0);
    let final_relative_error = final_err / t.abs().max(f64::MIN_POSITIVE);
    let passed = if errors.iter().all(|e| *e == 0.0) {
        true
    } else {
        let tail = &errors[errors.len().saturating_sub(TAIL + 1)..];
        let decreasing = tail.windows(2).all(|w| w[1] < w[0]);
        let halving = tail.windows(2).all(|w| ((w[1] / w[0]) - 0.5).abs() <= 0.1);
        decreasing && halving && final_err <= tolerance_ratio * t.abs()
    };
    Ok(LimitOutcome { target: t, final_value: f(&last), errors, final_relative_error, passed })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IntegralKind {
    AmpGf,
    AcpGf,
}

impl IntegralKind {
    pub fn id(self) -> &'static str {
        match self {
            Self::AmpGf => "amp_gf",
            Self::AcpGf => "acp_gf",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntegralOutcome {
    pub integral: f64,
    pub series: f64,
    pub abs_err: f64,
    pub passed: bool,
}

pub const INTEGRAL_TOLERANCE: f64 = 1e-8;
const SERIES_EPS: f64 = 1e-14;

/// `sum_n w_n t^n` with exact coefficients, stopped after two consecutive
/// terms below `1e-14 |partial sum|`.
fn series_side(kind: IntegralKind, params: &Params, x: &Rational, t: f64) -> Result<f64> {
    let mut nmax = 64;
    loop {
        let values = recurrence_eval(params, x, nmax)?;
        let mut sum = 0.0;
        let mut small = 0;
        let mut tn = 1.0;
        for (n, v) in values.iter().enumerate() {
            let w = match (kind, params) {
                (IntegralKind::AmpGf, FamilyParams::Amp { c, gamma, .. }) => {
                    v * c.pow(n as i32) / pochhammer(&(gamma + int(1)), n)
                }
                (_, p) => v / pochhammer(&(p.gamma() + int(1)), n),
            };
            let term = f(&w) * tn;
            sum += term;
            tn *= t;
            if term.abs() < SERIES_EPS * sum.abs() {
                small += 1;
                if small == 2 {
                    return Ok(sum);
                }
            } else {
                small = 0;
            }
        }
        if nmax >= 512 {
            return Err(Error::Domain("generating series converges too slowly".into()));
        }
        nmax *= 2;
    }
}

/// Compares the integral representation of the AMP or ACP generating
/// function at the point `t` with the series side.
///
/// The `u^(gamma-1)` endpoint factor is removed by `u = v^q`, `q` the
/// denominator of `gamma`, so the integrand is smooth in `v`.
pub fn integral_check(kind: IntegralKind, params: &Params, x: &Rational, t: &Rational, quad_order: usize) -> Result<IntegralOutcome> {
    params.validate()?;
    let gamma = params.gamma();
    if gamma < &rat(1, 2) {
        return Err(Error::Unsupported("integral check needs gamma >= 1/2".into()));
    }
    if quad_order < 16 {
        return Err(Error::Precondition("quadrature order must be at least 16".into()));
    }
    let (tf, xf) = (f(t), f(x));
    let q = gamma.denom().to_i32().ok_or_else(|| Error::Unsupported("gamma denominator too large".into()))?;
    let p = gamma.numer().to_i32().ok_or_else(|| Error::Unsupported("gamma numerator too large".into()))?;
    let qf = f64::from(q);
    let rule = GaussLegendre::new(NonZeroUsize::new(quad_order).expect("checked above"));
    let gf = f(gamma);
    let (pre, integral) = match (kind, params) {
        (IntegralKind::AmpGf, FamilyParams::Amp { beta, c, .. }) => {
            let (bf, cf) = (f(beta), f(c));
            if tf.abs() >= 1.0 || (cf * tf).abs() >= 1.0 {
                return Err(Error::Domain("need |t| < 1 and |c t| < 1".into()));
            }
            let pre = gf * (1.0 - cf * tf).powf(-bf - xf) * (1.0 - tf).powf(xf);
            let body = rule.integrate(0.0, 1.0, |v| {
                let u = v.powi(q);
                qf * v.powi(p - 1) * (1.0 - cf * tf * u).powf(xf + bf - 1.0) * (1.0 - tf * u).powf(-xf - 1.0)
            });
            (pre, body)
        }
        (IntegralKind::AcpGf, FamilyParams::Acp { a, .. }) => {
            let af = f(a);
            if tf.abs() >= af.abs() {
                return Err(Error::Domain("need |t| < a".into()));
            }
            let pre = gf * tf.exp() * (1.0 - tf / af).powf(xf);
            let body = rule.integrate(0.0, 1.0, |v| {
                let u = v.powi(q);
                qf * v.powi(p - 1) * (-tf * u).exp() * (1.0 - tf * u / af).powf(-xf - 1.0)
            });
            (pre, body)
        }
        (k, p) => {
            return Err(Error::Validation(format!("{} does not apply to family {}", k.id(), p.kind())));
        }
    };
    let integral = if t.is_zero() { 1.0 } else { pre * integral };
    let series = if t.is_zero() { 1.0 } else { series_side(kind, params, x, tf)? };
    let abs_err = (integral - series).abs();
    Ok(IntegralOutcome { integral, series, abs_err, passed: abs_err < INTEGRAL_TOLERANCE })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charlier_limit_example() {
        let s = LimitSchedule::doubling(LimitKind::CharlierFromMeixner, int(2), int(1), int(1), 2);
        let out = limit_check(&s, 1e-4).unwrap();
        assert!(out.passed, "{out:?}");
        assert!(out.final_relative_error < 1e-4);
        let zero = LimitSchedule::doubling(LimitKind::CharlierFromMeixner, int(2), int(1), int(1), 0);
        let out = limit_check(&zero, 1e-4).unwrap();
        assert!(out.errors.iter().all(|e| *e == 0.0) && out.passed);
    }

    #[test]
    fn laguerre_limit_example() {
        let s = LimitSchedule::doubling(LimitKind::LaguerreFromMeixner, rat(1, 2), int(1), rat(3, 2), 3);
        let out = limit_check(&s, 1e-4).unwrap();
        assert!(out.passed, "{out:?}");
    }

    #[test]
    fn integral_examples() {
        let acp = integral_check(IntegralKind::AcpGf, &Params::acp(int(2), int(2)), &int(1), &rat(1, 2), 32).unwrap();
        assert!(acp.passed, "{acp:?}");
        let amp = integral_check(IntegralKind::AmpGf, &Params::amp(int(2), rat(1, 3), rat(3, 2)), &int(1), &rat(1, 4), 32).unwrap();
        assert!(amp.passed, "{amp:?}");
        let zero = integral_check(IntegralKind::AcpGf, &Params::acp(int(2), int(2)), &int(1), &int(0), 32).unwrap();
        assert_eq!((zero.integral, zero.series), (1.0, 1.0));
        let low = integral_check(IntegralKind::AcpGf, &Params::acp(int(2), rat(1, 3)), &int(1), &rat(1, 2), 32);
        assert!(matches!(low, Err(Error::Unsupported(_))));
    }
}

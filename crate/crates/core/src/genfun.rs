//! Exact truncated-series right-hand sides of the generating functions,
//! built from Appell `F1` and Humbert `Phi1` double series.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{factorial, int, is_natural, pochhammer, Rational, Scalar};
use crate::families::{recurrence_eval, FamilyKind, FamilyParams, Params};
use crate::series::TruncatedSeries;

type Series = TruncatedSeries<Rational>;

fn check_arg<S: Scalar>(s: &TruncatedSeries<S>, name: &str) -> Result<()> {
    if !s.coeff(0).is_zero() {
        return Err(Error::Precondition(format!("{name} must have zero constant term")));
    }
    Ok(())
}

/// `sum_{m+n <= total} w(m, n) X^m Y^n`, with `w` returning `None` for a vanishing term.
fn double_sum<S, W>(x: &TruncatedSeries<S>, y: &TruncatedSeries<S>, total: usize, w: W) -> Result<TruncatedSeries<S>>
where
    S: Scalar,
    W: Fn(usize, usize) -> Result<Option<S>>,
{
    check_arg(x, "first argument")?;
    check_arg(y, "second argument")?;
    let order = x.order().min(y.order());
    let total = total.min(order);
    let mut y_pows = vec![TruncatedSeries::one(order)];
    for n in 1..=total {
        let next = y_pows[n - 1].mul_series(y);
        y_pows.push(next);
    }
    let mut out = TruncatedSeries::zero(order);
    let mut x_pow = TruncatedSeries::one(order);
    for m in 0..=total {
        if m > 0 {
            x_pow = x_pow.mul_series(x);
        }
        if x_pow.is_zero() {
            break;
        }
        let mut inner = TruncatedSeries::zero(order - m);
        for (n, yp) in y_pows.iter().enumerate().take(total - m + 1) {
            if let Some(c) = w(m, n)? {
                inner = &inner + &yp.truncate(order - m).scale(&c);
            }
        }
        let shifted = inner.truncate(order);
        out = &out + &x_pow.mul_series(&shifted);
    }
    Ok(out)
}

/// `(a)_k` for `k <= len`.
fn ladder<S: Scalar>(a: &S, len: usize) -> Vec<S> {
    (0..=len).map(|k| pochhammer(a, k)).collect()
}

fn double_hyper<S: Scalar>(
    alpha: &S,
    b1: &S,
    b2: Option<&S>,
    sigma: &S,
    x: &TruncatedSeries<S>,
    y: &TruncatedSeries<S>,
    total: usize,
) -> Result<TruncatedSeries<S>> {
    let len = x.order().min(y.order()).min(total);
    let pa = ladder(alpha, len);
    let ps = ladder(sigma, len);
    let p1 = ladder(b1, len);
    let p2 = b2.map(|b| ladder(b, len));
    let facts: Vec<S> = (0..=len).map(|k| S::from_rational(&factorial(k))).collect();
    double_sum(x, y, total, |m, n| {
        let mut num = pa[m + n].clone() * p1[m].clone();
        if let Some(p2) = &p2 {
            num = num * p2[n].clone();
        }
        if num.is_zero() {
            return Ok(None);
        }
        let den = ps[m + n].clone() * facts[m].clone() * facts[n].clone();
        if den.is_zero() {
            return Err(Error::Pole(format!(
                "lower parameter {} vanishes in the ladder at {}",
                sigma.render(),
                m + n
            )));
        }
        Ok(Some(num / den))
    })
}

/// Appell `F1[alpha, b1, b2; sigma; X, Y]` with series arguments, truncated at
/// the common order.
pub fn appell_f1_series<S: Scalar>(
    alpha: &S,
    b1: &S,
    b2: &S,
    sigma: &S,
    x: &TruncatedSeries<S>,
    y: &TruncatedSeries<S>,
) -> Result<TruncatedSeries<S>> {
    double_hyper(alpha, b1, Some(b2), sigma, x, y, usize::MAX)
}

/// `F1` restricted to the triangle `m + n <= total`.
pub fn appell_f1_partial<S: Scalar>(
    alpha: &S,
    b1: &S,
    b2: &S,
    sigma: &S,
    x: &TruncatedSeries<S>,
    y: &TruncatedSeries<S>,
    total: usize,
) -> Result<TruncatedSeries<S>> {
    double_hyper(alpha, b1, Some(b2), sigma, x, y, total)
}

/// Humbert `Phi1[a1, lambda; a2; X, Y]` with series arguments.
pub fn humbert_phi1_series<S: Scalar>(
    a1: &S,
    lambda: &S,
    a2: &S,
    x: &TruncatedSeries<S>,
    y: &TruncatedSeries<S>,
) -> Result<TruncatedSeries<S>> {
    double_hyper(a1, lambda, None, a2, x, y, usize::MAX)
}

/// Generating-function identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GfId {
    AmpGf1,
    AmpGf2,
    MeixnerGf,
    MeixnerGf2,
    MeixnerWeighted,
    AcpGf,
    CharlierGf,
    CharlierWeighted,
    AlpGf,
    LaguerreGf,
    LaguerreWeighted,
    AkpGf,
    AkpGfPartial,
    KrawtchoukGf,
}

impl GfId {
    pub const ALL: [GfId; 14] = [
        GfId::AmpGf1,
        GfId::AmpGf2,
        GfId::MeixnerGf,
        GfId::MeixnerGf2,
        GfId::MeixnerWeighted,
        GfId::AcpGf,
        GfId::CharlierGf,
        GfId::CharlierWeighted,
        GfId::AlpGf,
        GfId::LaguerreGf,
        GfId::LaguerreWeighted,
        GfId::AkpGf,
        GfId::AkpGfPartial,
        GfId::KrawtchoukGf,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Self::AmpGf1 => "AMP-GF1",
            Self::AmpGf2 => "AMP-GF2",
            Self::MeixnerGf => "MEIXNER-GF",
            Self::MeixnerGf2 => "MEIXNER-GF2",
            Self::MeixnerWeighted => "MEIXNER-WEIGHTED",
            Self::AcpGf => "ACP-GF",
            Self::CharlierGf => "CHARLIER-GF",
            Self::CharlierWeighted => "CHARLIER-WEIGHTED",
            Self::AlpGf => "ALP-GF",
            Self::LaguerreGf => "LAGUERRE-GF",
            Self::LaguerreWeighted => "LAGUERRE-WEIGHTED",
            Self::AkpGf => "AKP-GF",
            Self::AkpGfPartial => "AKP-GF-PARTIAL",
            Self::KrawtchoukGf => "KRAWTCHOUK-GF",
        }
    }

    pub fn family(self) -> FamilyKind {
        match self {
            Self::AmpGf1 | Self::AmpGf2 | Self::MeixnerGf | Self::MeixnerGf2 | Self::MeixnerWeighted => FamilyKind::Amp,
            Self::AcpGf | Self::CharlierGf | Self::CharlierWeighted => FamilyKind::Acp,
            Self::AlpGf | Self::LaguerreGf | Self::LaguerreWeighted => FamilyKind::Alp,
            Self::AkpGf | Self::AkpGfPartial | Self::KrawtchoukGf => FamilyKind::Akp,
        }
    }

    /// Left side built from classical (`gamma = 0`) values, with `gamma` unused.
    pub fn is_classical(self) -> bool {
        matches!(
            self,
            Self::MeixnerGf | Self::MeixnerGf2 | Self::CharlierGf | Self::LaguerreGf | Self::KrawtchoukGf
        )
    }

    /// Classical values weighted by `gamma / (n + gamma)`.
    pub fn is_weighted(self) -> bool {
        matches!(self, Self::MeixnerWeighted | Self::CharlierWeighted | Self::LaguerreWeighted)
    }
}

impl fmt::Display for GfId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for GfId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.to_ascii_uppercase().replace('_', "-");
        Self::ALL
            .into_iter()
            .find(|g| g.id() == upper)
            .ok_or_else(|| Error::Unknown { kind: "generating function", id: s.to_string() })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GfSpec {
    pub id: GfId,
    pub params: Params,
    pub x: Rational,
    pub order: usize,
}

impl GfSpec {
    pub fn new(id: GfId, params: Params, x: Rational, order: usize) -> Self {
        Self { id, params, x, order }
    }

    /// Number of meaningful coefficients for the truncated identities.
    fn cutoff(&self) -> Result<Option<usize>> {
        match (self.id, &self.params) {
            (GfId::AkpGfPartial, p) => p
                .akp_boundary()
                .map(Some)
                .ok_or_else(|| Error::Validation("AKP-GF-PARTIAL needs N - gamma in N".into())),
            (GfId::KrawtchoukGf, FamilyParams::Akp { n, .. }) => {
                if is_natural(n) {
                    Ok(n.to_integer().try_into().ok())
                } else {
                    Err(Error::Validation("KRAWTCHOUK-GF needs N in N".into()))
                }
            }
            _ => Ok(None),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.params.kind() != self.id.family() {
            return Err(Error::Validation(format!("{} does not apply to family {}", self.id, self.params.kind())));
        }
        if self.id.is_classical() && !self.params.gamma().is_zero() {
            return Err(Error::Validation(format!("{} needs gamma = 0", self.id)));
        }
        self.params.validate()?;
        if self.id.is_weighted() {
            self.params.with_gamma(Rational::zero()).validate()?;
        }
        self.cutoff()?;
        Ok(())
    }
}

fn t_series(order: usize) -> Series {
    Series::variable(order)
}

/// `(1 - c t)^r`.
fn one_minus_pow(c: &Rational, r: &Rational, order: usize) -> Result<Series> {
    Series::binomial_power(&Series::monomial(-c.clone(), 1, order), r)
}

/// `t / (t - 1) = -t / (1 - t)`.
fn t_over_t_minus_one(order: usize) -> Result<Series> {
    let inv = one_minus_pow(&Rational::one(), &int(-1), order)?;
    Ok(-&(&t_series(order) * &inv))
}

fn exp_of(u: &Series) -> Result<Series> {
    Series::exp(u)
}

/// The printed right-hand side as an exact truncated series.
pub fn gf_rhs(spec: &GfSpec) -> Result<Series> {
    spec.validate()?;
    let order = spec.order;
    let x = &spec.x;
    let one = Rational::one();
    let t = t_series(order);
    match (spec.id, &spec.params) {
        (GfId::AmpGf1, FamilyParams::Amp { beta, c, gamma }) => {
            let pre = &one_minus_pow(c, &(-beta - x), order)? * &one_minus_pow(&one, x, order)?;
            let f1 = appell_f1_series(gamma, &(&one - beta - x), &(&one + x), &(gamma + &one), &t.scale(c), &t)?;
            Ok(&pre * &f1)
        }
        (GfId::AmpGf2, FamilyParams::Amp { beta, c, gamma }) => {
            let inv = one_minus_pow(c, &int(-1), order)?;
            let y = (&t * &inv).scale(&(&one - c));
            let f1 = appell_f1_series(&one, gamma, &-x, &(gamma + beta), &t, &y)?;
            Ok(&inv * &f1)
        }
        (GfId::MeixnerGf, FamilyParams::Amp { beta, c, .. }) => {
            Ok(&one_minus_pow(c, &(-beta - x), order)? * &one_minus_pow(&one, x, order)?)
        }
        (GfId::MeixnerGf2, FamilyParams::Amp { beta, c, .. }) => {
            let inv = one_minus_pow(&one, &int(-1), order)?;
            let z = (&t * &inv).scale(&((&one - c) / c));
            let f = Series::hypergeometric(&[one.clone(), -x], std::slice::from_ref(beta), order)?;
            Ok(&inv * &Series::compose(&f, &z)?)
        }
        (GfId::MeixnerWeighted, FamilyParams::Amp { beta, c, gamma }) => {
            appell_f1_series(gamma, &(x + beta), &-x, &(gamma + &one), &t.scale(c), &t)
        }
        (GfId::AcpGf, FamilyParams::Acp { a, gamma }) => {
            let pre = &exp_of(&t)? * &one_minus_pow(&(&one / a), x, order)?;
            let phi = humbert_phi1_series(gamma, &(x + &one), &(gamma + &one), &t.scale(&(&one / a)), &-&t)?;
            Ok(&pre * &phi)
        }
        (GfId::CharlierGf, FamilyParams::Acp { a, .. }) => {
            Ok(&exp_of(&t)? * &one_minus_pow(&(&one / a), x, order)?)
        }
        (GfId::CharlierWeighted, FamilyParams::Acp { a, gamma }) => {
            humbert_phi1_series(gamma, &-x, &(gamma + &one), &t.scale(&(&one / a)), &t)
        }
        (GfId::AlpGf, FamilyParams::Alp { alpha, gamma }) => {
            let u = t_over_t_minus_one(order)?;
            let pre = &one_minus_pow(&one, &(-gamma - alpha - &one), order)? * &exp_of(&u.scale(x))?;
            let phi = humbert_phi1_series(gamma, &(gamma + alpha), &(gamma + &one), &u, &u.scale(&-x))?;
            Ok(&pre * &phi)
        }
        (GfId::LaguerreGf, FamilyParams::Alp { alpha, .. }) => {
            let u = t_over_t_minus_one(order)?;
            Ok(&one_minus_pow(&one, &(-alpha - &one), order)? * &exp_of(&u.scale(x))?)
        }
        (GfId::LaguerreWeighted, FamilyParams::Alp { alpha, gamma }) => {
            let u = t_over_t_minus_one(order)?;
            let phi = humbert_phi1_series(gamma, &(gamma - alpha), &(gamma + &one), &u, &u.scale(x))?;
            Ok(&one_minus_pow(&one, &-gamma, order)? * &phi)
        }
        (GfId::AkpGf | GfId::AkpGfPartial, FamilyParams::Akp { p, n, gamma }) => {
            let inv = one_minus_pow(&one, &int(-1), order)?;
            let big_x = t.scale(&((p - &one) / p));
            let big_y = t_over_t_minus_one(order)?.scale(&(&one / p));
            let sigma = gamma - n;
            if spec.id == GfId::AkpGf {
                let f1 = appell_f1_series(&one, gamma, &-x, &sigma, &big_x, &big_y)?;
                Ok(&inv * &f1)
            } else {
                let m = spec.cutoff()?.unwrap_or(0);
                let f1 = appell_f1_partial(&one, gamma, &-x, &sigma, &big_x, &big_y, m)?;
                (&inv * &f1).partial_sum(m.min(order))
            }
        }
        (GfId::KrawtchoukGf, FamilyParams::Akp { p, n, .. }) => {
            let big_n = spec.cutoff()?.unwrap_or(0);
            let inner_order = big_n.min(order);
            let inv = one_minus_pow(&one, &int(-1), order)?;
            let z = t_over_t_minus_one(order)?.scale(&(&one / p));
            let f = Series::hypergeometric(&[one.clone(), -x], &[-n.clone()], inner_order)?;
            let f = Series::new(f.into_coeffs()).truncate(order);
            (&inv * &Series::compose(&f, &z)?).partial_sum(inner_order)
        }
        (id, p) => Err(Error::Validation(format!("{id} does not apply to family {}", p.kind()))),
    }
}

/// Coefficients `[t^n]` of the left-hand side, from the recurrence oracle.
pub fn gf_lhs(spec: &GfSpec) -> Result<Series> {
    spec.validate()?;
    let order = spec.order;
    let cutoff = spec.cutoff()?;
    let nmax = cutoff.map_or(order, |m| m.min(order));
    let value_params = if spec.id.is_weighted() {
        spec.params.with_gamma(Rational::zero())
    } else {
        spec.params.clone()
    };
    let values = recurrence_eval(&value_params, &spec.x, nmax)?;
    let gamma = spec.params.gamma().clone();
    let mut coeffs = vec![Rational::zero(); order + 1];
    for (n, v) in values.into_iter().enumerate() {
        let nn = int(n as i64);
        let weight = |g: &Rational| if n == 0 { Rational::one() } else { g / (&nn + g) };
        coeffs[n] = match (spec.id, &spec.params) {
            (GfId::AmpGf1, FamilyParams::Amp { c, gamma, .. }) => {
                v * c.pow(n as i32) / pochhammer(&(gamma + Rational::one()), n)
            }
            (GfId::AmpGf2, FamilyParams::Amp { beta, c, gamma }) => v * c.pow(n as i32) / pochhammer(&(gamma + beta), n),
            (GfId::MeixnerGf, FamilyParams::Amp { c, .. }) => v * c.pow(n as i32) / factorial(n),
            (GfId::MeixnerGf2, FamilyParams::Amp { beta, .. }) => v / pochhammer(beta, n),
            (GfId::MeixnerWeighted, FamilyParams::Amp { c, .. }) => weight(&gamma) * v * c.pow(n as i32) / factorial(n),
            (GfId::AcpGf, _) => v / pochhammer(&(&gamma + Rational::one()), n),
            (GfId::CharlierGf, _) => v / factorial(n),
            (GfId::CharlierWeighted, _) => weight(&gamma) * v / factorial(n),
            (GfId::LaguerreWeighted, _) => weight(&gamma) * v,
            _ => v,
        };
    }
    Ok(Series::new(coeffs))
}

/// First coefficient where the two sides disagree.
#[derive(Debug, Clone, PartialEq)]
pub struct GfMismatch {
    pub n: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GfCheck {
    pub lhs: Series,
    pub rhs: Series,
    pub mismatch: Option<GfMismatch>,
}

impl GfCheck {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Compares `[t^n]` of both sides exactly for all `n <= order`.
pub fn gf_coefficient_check(spec: &GfSpec) -> Result<GfCheck> {
    let lhs = gf_lhs(spec)?;
    let rhs = gf_rhs(spec)?;
    let mismatch = (0..=spec.order).find(|&n| lhs.coeff(n) != rhs.coeff(n)).map(|n| GfMismatch {
        n,
        lhs: lhs.coeff(n),
        rhs: rhs.coeff(n),
    });
    Ok(GfCheck { lhs, rhs, mismatch })
}

/// Both sides of `F1[a, b1, b2; s; X, Y] = (1-X)^-b1 (1-Y)^-b2 F1[s-a, b1, b2; s; X/(X-1), Y/(Y-1)]`
/// with `X = x t`, `Y = y t`.
pub fn f1_transform_check(
    alpha: &Rational,
    b1: &Rational,
    b2: &Rational,
    sigma: &Rational,
    x: &Rational,
    y: &Rational,
    order: usize,
) -> Result<(Series, Series)> {
    let t = t_series(order);
    let (big_x, big_y) = (t.scale(x), t.scale(y));
    let lhs = appell_f1_series(alpha, b1, b2, sigma, &big_x, &big_y)?;
    let inv_x = one_minus_pow(x, &int(-1), order)?;
    let inv_y = one_minus_pow(y, &int(-1), order)?;
    let xx = -&(&big_x * &inv_x);
    let yy = -&(&big_y * &inv_y);
    let pre = &one_minus_pow(x, &-b1, order)? * &one_minus_pow(y, &-b2, order)?;
    let rhs = &pre * &appell_f1_series(&(sigma - alpha), b1, b2, sigma, &xx, &yy)?;
    Ok((lhs, rhs))
}

/// `t (a - t) G' + [t^2 + (x - a - gamma) t + a gamma] G - a gamma` for the
/// ACP generating function `G`; vanishes through `t^(order-1)`.
pub fn acp_ode_residual(a: &Rational, gamma: &Rational, x: &Rational, order: usize) -> Result<Series> {
    let g = gf_rhs(&GfSpec::new(GfId::AcpGf, Params::acp(a.clone(), gamma.clone()), x.clone(), order))?;
    let low = order.saturating_sub(1);
    let gd = g.derivative().truncate(low);
    let g = g.truncate(low);
    let ag = a * gamma;
    let ta = Series::new(vec![Rational::zero(), a.clone(), int(-1)]).truncate(low);
    let poly = Series::new(vec![ag.clone(), x - a - gamma, Rational::one()]).truncate(low);
    Ok(&(&(&ta * &gd) + &(&poly * &g)) - &Series::constant(ag, low))
}

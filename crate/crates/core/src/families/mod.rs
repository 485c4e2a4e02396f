//! Associated families defined by a three-term recurrence
//!
//! ```text
//! A_{n+g} P_{n+1}(x) = (B_{n+g} x + C_{n+g}) P_n(x) - D_{n+g} P_{n-1}(x),   P_{-1} = 0, P_0 = 1
//! ```
//!
//! where `g` is the association parameter. The recurrence is the ground-truth
//! oracle for every explicit formula and generating function in the crate.

mod poly;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{CirclePoint, GaussianRational, Rational, Scalar};

pub use poly::PolyX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    /// Associated Meixner.
    Amp,
    /// Associated Charlier.
    Acp,
    /// Associated Laguerre.
    Alp,
    /// Associated Krawtchouk.
    Akp,
    /// Associated Meixner-Pollaczek.
    MPollaczek,
}

impl FamilyKind {
    pub fn id(self) -> &'static str {
        match self {
            Self::Amp => "amp",
            Self::Acp => "acp",
            Self::Alp => "alp",
            Self::Akp => "akp",
            Self::MPollaczek => "mp",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "amp" | "meixner" => Ok(Self::Amp),
            "acp" | "charlier" => Ok(Self::Acp),
            "alp" | "laguerre" => Ok(Self::Alp),
            "akp" | "krawtchouk" => Ok(Self::Akp),
            "mp" | "mpollaczek" | "meixner-pollaczek" => Ok(Self::MPollaczek),
            _ => Err(Error::Unknown { kind: "family", id: s.to_string() }),
        }
    }
}

/// Parameters of one associated family. `gamma` is the association parameter.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilyParams<S> {
    Amp { beta: S, c: S, gamma: S },
    Acp { a: S, gamma: S },
    Alp { alpha: S, gamma: S },
    Akp { p: S, n: S, gamma: S },
    /// `cos`/`sin` are those of the angle `phi`.
    MPollaczek { nu: S, cos: S, sin: S, gamma: S },
}

/// `A, B, C, D` of the recurrence at one (shifted) index.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceCoeffs<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

impl<S: Scalar> FamilyParams<S> {
    pub fn kind(&self) -> FamilyKind {
        match self {
            Self::Amp { .. } => FamilyKind::Amp,
            Self::Acp { .. } => FamilyKind::Acp,
            Self::Alp { .. } => FamilyKind::Alp,
            Self::Akp { .. } => FamilyKind::Akp,
            Self::MPollaczek { .. } => FamilyKind::MPollaczek,
        }
    }

    pub fn gamma(&self) -> &S {
        match self {
            Self::Amp { gamma, .. }
            | Self::Acp { gamma, .. }
            | Self::Alp { gamma, .. }
            | Self::Akp { gamma, .. }
            | Self::MPollaczek { gamma, .. } => gamma,
        }
    }

    /// Same family with the association parameter replaced.
    pub fn with_gamma(&self, g: S) -> Self {
        let mut out = self.clone();
        match &mut out {
            Self::Amp { gamma, .. }
            | Self::Acp { gamma, .. }
            | Self::Alp { gamma, .. }
            | Self::Akp { gamma, .. }
            | Self::MPollaczek { gamma, .. } => *gamma = g,
        }
        out
    }

    /// Recurrence coefficients at index `n + gamma`.
    pub fn coeffs(&self, n: usize) -> RecurrenceCoeffs<S> {
        let m = S::from_int(n as i64) + self.gamma().clone();
        let one = S::one();
        let two = S::from_int(2);
        match self {
            Self::Amp { beta, c, .. } => RecurrenceCoeffs {
                a: c.clone(),
                b: c.clone() - one.clone(),
                c: (c.clone() + one.clone()) * m.clone() + beta.clone() * c.clone(),
                d: m.clone() * (m + beta.clone() - one),
            },
            Self::Acp { a, .. } => RecurrenceCoeffs {
                a: a.clone(),
                b: -one,
                c: m.clone() + a.clone(),
                d: m,
            },
            Self::Alp { alpha, .. } => RecurrenceCoeffs {
                a: m.clone() + one.clone(),
                b: -one.clone(),
                c: two * m.clone() + alpha.clone() + one,
                d: m + alpha.clone(),
            },
            Self::Akp { p, n: big_n, .. } => RecurrenceCoeffs {
                a: p.clone() * (big_n.clone() - m.clone()),
                b: -one.clone(),
                c: p.clone() * big_n.clone() + m.clone() * (one - two * p.clone()),
                d: m * (S::one() - p.clone()),
            },
            Self::MPollaczek { nu, cos, sin, .. } => RecurrenceCoeffs {
                a: m.clone() + one.clone(),
                b: two.clone() * sin.clone(),
                c: two * (m.clone() + nu.clone()) * cos.clone(),
                d: m + two_times(nu) - one,
            },
        }
    }

    pub fn map<T, F: Fn(&S) -> T>(&self, f: F) -> FamilyParams<T> {
        match self {
            Self::Amp { beta, c, gamma } => FamilyParams::Amp { beta: f(beta), c: f(c), gamma: f(gamma) },
            Self::Acp { a, gamma } => FamilyParams::Acp { a: f(a), gamma: f(gamma) },
            Self::Alp { alpha, gamma } => FamilyParams::Alp { alpha: f(alpha), gamma: f(gamma) },
            Self::Akp { p, n, gamma } => FamilyParams::Akp { p: f(p), n: f(n), gamma: f(gamma) },
            Self::MPollaczek { nu, cos, sin, gamma } => FamilyParams::MPollaczek {
                nu: f(nu),
                cos: f(cos),
                sin: f(sin),
                gamma: f(gamma),
            },
        }
    }

    /// Named parameters in a fixed order, rendered as text.
    pub fn named(&self) -> Vec<(&'static str, String)> {
        match self {
            Self::Amp { beta, c, gamma } => {
                vec![("beta", beta.render()), ("c", c.render()), ("gamma", gamma.render())]
            }
            Self::Acp { a, gamma } => vec![("a", a.render()), ("gamma", gamma.render())],
            Self::Alp { alpha, gamma } => vec![("alpha", alpha.render()), ("gamma", gamma.render())],
            Self::Akp { p, n, gamma } => {
                vec![("p", p.render()), ("N", n.render()), ("gamma", gamma.render())]
            }
            Self::MPollaczek { nu, cos, sin, gamma } => vec![
                ("nu", nu.render()),
                ("cos", cos.render()),
                ("sin", sin.render()),
                ("gamma", gamma.render()),
            ],
        }
    }
}

fn two_times<S: Scalar>(v: &S) -> S {
    v.clone() + v.clone()
}

/// Family parameters over exact rationals.
pub type Params = FamilyParams<Rational>;

impl FamilyParams<Rational> {
    pub fn amp(beta: Rational, c: Rational, gamma: Rational) -> Self {
        Self::Amp { beta, c, gamma }
    }

    pub fn acp(a: Rational, gamma: Rational) -> Self {
        Self::Acp { a, gamma }
    }

    pub fn alp(alpha: Rational, gamma: Rational) -> Self {
        Self::Alp { alpha, gamma }
    }

    pub fn akp(p: Rational, n: Rational, gamma: Rational) -> Self {
        Self::Akp { p, n, gamma }
    }

    pub fn mpollaczek(nu: Rational, phi: &CirclePoint, gamma: Rational) -> Self {
        Self::MPollaczek { nu, cos: phi.cos.clone(), sin: phi.sin.clone(), gamma }
    }

    /// Checks the family's orthogonality region and `gamma >= 0`.
    pub fn validate(&self) -> Result<()> {
        let zero = Rational::zero();
        let one = Rational::one();
        if self.gamma().is_negative() {
            return Err(Error::Validation("gamma must be >= 0".into()));
        }
        match self {
            Self::Amp { beta, c, gamma } => {
                if !c.is_positive() || *c == one {
                    return Err(Error::Validation("AMP needs c > 0 and c != 1".into()));
                }
                if !(gamma + beta).is_positive() {
                    return Err(Error::Validation("AMP needs gamma + beta > 0".into()));
                }
            }
            Self::Acp { a, .. } => {
                if !a.is_positive() {
                    return Err(Error::Validation("ACP needs a > 0".into()));
                }
            }
            Self::Alp { alpha, gamma } => {
                if alpha + gamma <= -one {
                    return Err(Error::Validation("ALP needs alpha + gamma > -1".into()));
                }
            }
            Self::Akp { p, n, gamma } => {
                let shifted = n - gamma;
                let case_i = p.is_negative() && shifted.is_negative();
                let case_ii = p > &zero && p < &one && !shifted.is_negative();
                let case_iii = p > &one && shifted.is_negative();
                if !(case_i || case_ii || case_iii) {
                    return Err(Error::Validation(
                        "AKP needs p < 0 with N - gamma < 0, 0 < p < 1 with N - gamma >= 0, \
                         or p > 1 with N - gamma < 0"
                            .into(),
                    ));
                }
            }
            Self::MPollaczek { nu, sin, gamma, .. } => {
                if sin.is_zero() {
                    return Err(Error::Validation("Meixner-Pollaczek needs sin(phi) != 0".into()));
                }
                if !(gamma + nu + nu).is_positive() {
                    return Err(Error::Validation("Meixner-Pollaczek needs gamma + 2 nu > 0".into()));
                }
            }
        }
        Ok(())
    }

    /// For AKP with `N - gamma` a nonnegative integer, that integer.
    pub fn akp_boundary(&self) -> Option<usize> {
        match self {
            Self::Akp { n, gamma, .. } => {
                let shifted = n - gamma;
                if shifted.is_integer() && !shifted.is_negative() {
                    shifted.to_integer().to_usize()
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn to_gaussian(&self) -> FamilyParams<GaussianRational> {
        self.map(|q| Complex::new(q.clone(), Rational::zero()))
    }

    pub fn to_f64(&self) -> FamilyParams<f64> {
        self.map(f64::from_rational)
    }
}

/// Runs the recurrence at a fixed `x` without validating parameters
/// ("formal mode"). Fails when `A` vanishes before `P_nmax` is reached.
pub fn recurrence_eval_formal<S: Scalar>(params: &FamilyParams<S>, x: &S, nmax: usize) -> Result<Vec<S>> {
    let mut values = Vec::with_capacity(nmax + 1);
    values.push(S::one());
    let mut prev = S::zero();
    for n in 0..nmax {
        let RecurrenceCoeffs { a, b, c, d } = params.coeffs(n);
        if a.is_zero() {
            return Err(Error::Truncated { n });
        }
        let cur = values[n].clone();
        let next = ((b * x.clone() + c) * cur.clone() - d * prev) / a;
        prev = cur;
        values.push(next);
    }
    Ok(values)
}

/// `[P_0(x), ..., P_nmax(x)]` after validating the parameters.
pub fn recurrence_eval(params: &Params, x: &Rational, nmax: usize) -> Result<Vec<Rational>> {
    params.validate()?;
    recurrence_eval_formal(params, x, nmax)
}

/// The recurrence run with `x` as an indeterminate, without validation.
pub fn recurrence_polyx_formal<S: Scalar>(params: &FamilyParams<S>, nmax: usize) -> Result<Vec<PolyX<S>>> {
    let mut polys = Vec::with_capacity(nmax + 1);
    polys.push(PolyX::constant(S::one()));
    let mut prev = PolyX::zero();
    for n in 0..nmax {
        let RecurrenceCoeffs { a, b, c, d } = params.coeffs(n);
        if a.is_zero() {
            return Err(Error::Truncated { n });
        }
        let cur = polys[n].clone();
        let next = (&PolyX::linear(b, c).mul(&cur) - &prev.scale(&d)).scale(&(S::one() / a));
        prev = cur;
        polys.push(next);
    }
    Ok(polys)
}

/// Coefficient vectors of `P_0..P_nmax` in `x` after validating the parameters.
pub fn recurrence_eval_polyx(params: &Params, nmax: usize) -> Result<Vec<PolyX<Rational>>> {
    params.validate()?;
    recurrence_polyx_formal(params, nmax)
}

/// Why index `k` fails the orthogonality test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// `A_{k-1} B_{k-1} B_k D_k <= 0`.
    SignCondition,
    /// Past the `floor(N - gamma)` cutoff of the Krawtchouk case `0 < p < 1`.
    KrawtchoukCutoff,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub k: usize,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub valid_range: usize,
    pub violations: Vec<Violation>,
}

/// Scans `A_{k-1} B_{k-1} B_k D_k > 0` for `1 <= k <= nmax`. For AKP with
/// `0 < p < 1` indices past `floor(N - gamma)` are also reported.
pub fn orthogonality_check(params: &Params, nmax: usize) -> OrthogonalityReport {
    let cutoff = match params {
        FamilyParams::Akp { p, n, gamma } if p.is_positive() && *p < Rational::one() => {
            let shifted = n - gamma;
            if shifted.is_negative() {
                Some(0)
            } else {
                shifted.floor().to_integer().to_usize()
            }
        }
        _ => None,
    };
    let mut violations = Vec::new();
    for k in 1..=nmax {
        let prev = params.coeffs(k - 1);
        let cur = params.coeffs(k);
        let product = prev.a * prev.b * cur.b * cur.d;
        if !product.is_positive() {
            violations.push(Violation { k, kind: ViolationKind::SignCondition });
        } else if cutoff.is_some_and(|c| k > c) {
            violations.push(Violation { k, kind: ViolationKind::KrawtchoukCutoff });
        }
    }
    let valid_range = violations.first().map_or(nmax, |v| v.k - 1);
    OrthogonalityReport { valid_range, violations }
}

/// Classical Meixner polynomials `M_n(x; beta, c)` (the `gamma = 0` AMPs).
pub fn meixner(beta: &Rational, c: &Rational, x: &Rational, nmax: usize) -> Result<Vec<Rational>> {
    recurrence_eval_formal(&Params::amp(beta.clone(), c.clone(), Rational::zero()), x, nmax)
}

/// Classical Charlier polynomials `C_n(x; a)`.
pub fn charlier(a: &Rational, x: &Rational, nmax: usize) -> Result<Vec<Rational>> {
    recurrence_eval_formal(&Params::acp(a.clone(), Rational::zero()), x, nmax)
}

/// Classical Laguerre polynomials `L_n^(alpha)(x)`.
pub fn laguerre(alpha: &Rational, x: &Rational, nmax: usize) -> Result<Vec<Rational>> {
    recurrence_eval_formal(&Params::alp(alpha.clone(), Rational::zero()), x, nmax)
}

/// Classical Krawtchouk polynomials `K_n(x; p, N)`.
pub fn krawtchouk(p: &Rational, n: &Rational, x: &Rational, nmax: usize) -> Result<Vec<Rational>> {
    recurrence_eval_formal(&Params::akp(p.clone(), n.clone(), Rational::zero()), x, nmax)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    #[test]
    fn amp_worked_example() {
        let params = Params::amp(int(1), rat(1, 2), int(1));
        assert_eq!(recurrence_eval(&params, &int(1), 2).unwrap(), vec![int(1), int(3), int(10)]);
    }

    #[test]
    fn acp_first_step() {
        let params = Params::acp(int(2), int(0));
        assert_eq!(recurrence_eval(&params, &int(1), 1).unwrap(), vec![int(1), rat(1, 2)]);
    }

    #[test]
    fn nmax_zero_is_one() {
        for params in [
            Params::amp(int(2), rat(1, 3), int(0)),
            Params::acp(int(1), rat(1, 2)),
            Params::alp(rat(1, 2), int(3)),
            Params::akp(rat(1, 3), int(4), int(1)),
        ] {
            assert_eq!(recurrence_eval(&params, &rat(7, 3), 0).unwrap(), vec![int(1)]);
        }
    }

    #[test]
    fn polyx_first_members() {
        let alp = recurrence_eval_polyx(&Params::alp(rat(1, 2), int(0)), 1).unwrap();
        assert_eq!(alp[1].coeffs(), &[rat(3, 2), int(-1)]);
        let akp = recurrence_eval_polyx(&Params::akp(rat(1, 2), int(4), int(0)), 1).unwrap();
        assert_eq!(akp[1].coeffs(), &[int(1), rat(-1, 2)]);
        let zero = recurrence_eval_polyx(&Params::acp(int(3), int(1)), 0).unwrap();
        assert_eq!(zero, vec![PolyX::constant(int(1))]);
    }

    #[test]
    fn polyx_agrees_with_pointwise() {
        let params = Params::amp(rat(3, 2), rat(2, 5), rat(1, 3));
        let polys = recurrence_eval_polyx(&params, 8).unwrap();
        let x = rat(-7, 4);
        let values = recurrence_eval(&params, &x, 8).unwrap();
        for (p, v) in polys.iter().zip(&values) {
            assert_eq!(&p.eval(&x), v);
        }
    }

    #[test]
    fn akp_hard_stop_at_boundary() {
        let params = Params::akp(rat(1, 3), int(4), int(1));
        assert!(recurrence_eval(&params, &int(1), 3).is_ok());
        assert_eq!(recurrence_eval(&params, &int(1), 4), Err(Error::Truncated { n: 3 }));
    }

    #[test]
    fn validation_rules() {
        assert!(Params::amp(int(1), int(1), int(1)).validate().is_err());
        assert!(Params::amp(int(-2), rat(1, 2), int(1)).validate().is_err());
        assert!(Params::acp(int(-1), int(0)).validate().is_err());
        assert!(Params::alp(int(-3), int(1)).validate().is_err());
        assert!(Params::alp(rat(-1, 2), int(0)).validate().is_ok());
        assert!(Params::akp(rat(1, 2), int(5), rat(1, 2)).validate().is_ok());
        assert!(Params::akp(int(2), int(5), int(1)).validate().is_err());
        assert!(Params::akp(int(2), int(-5), int(1)).validate().is_ok());
        assert!(Params::acp(int(1), int(-1)).validate().is_err());
        // formal mode ignores validation
        assert!(recurrence_eval_formal(&Params::acp(int(-1), int(0)), &int(1), 3).is_ok());
    }

    #[test]
    fn orthogonality_examples() {
        let akp = orthogonality_check(&Params::akp(rat(1, 2), int(5), rat(1, 2)), 10);
        assert_eq!(akp.valid_range, 4);
        assert!(!akp.violations.is_empty());
        let amp = orthogonality_check(&Params::amp(int(1), rat(1, 2), int(1)), 10);
        assert_eq!(amp.valid_range, 10);
        assert!(amp.violations.is_empty());
        let acp = orthogonality_check(&Params::acp(int(-1), int(0)), 10);
        assert!(!acp.violations.is_empty());
        assert_eq!(acp.valid_range, 0);
    }

    #[test]
    fn akp_integer_cutoff() {
        // N - gamma = 4: conditions hold for k <= 4, A_4 = 0 afterwards
        let r = orthogonality_check(&Params::akp(rat(1, 3), int(5), int(1)), 10);
        assert_eq!(r.valid_range, 4);
    }

    #[test]
    fn family_kind_parsing() {
        assert_eq!("AMP".parse::<FamilyKind>().unwrap(), FamilyKind::Amp);
        assert_eq!("mp".parse::<FamilyKind>().unwrap(), FamilyKind::MPollaczek);
        assert!("hermite".parse::<FamilyKind>().is_err());
    }
}

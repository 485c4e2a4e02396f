use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{factorial, pochhammer, powi, rat, GaussianRational, Rational, Scalar};
use crate::families::{FamilyKind, FamilyParams, Params};

use super::pfq::{pfq_terminating, HyperSpec};

/// Which closed form to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// AMP as a sum of terminating 4F3(1) in powers of `1 - c`.
    AmpA,
    /// AMP in powers of `(c-1)/c`, the reflected form.
    AmpB,
    /// ACP with an inner 3F2 in `gamma - x + k`.
    AcpA,
    /// ACP after the 3F2 transformation.
    AcpB,
    /// ALP in powers of `x`.
    AlpA,
    /// ALP after the 3F2 transformation.
    AlpB,
    /// AKP in powers of `1/(1-p)`.
    AkpA,
    /// AKP in powers of `1/p`.
    AkpB,
    /// AKP at `n = N - gamma` with the inner sum reduced to a 3F2.
    AkpBoundary,
    /// Associated Meixner-Pollaczek, evaluated over Gaussian rationals.
    MPollaczek,
    /// Classical Meixner `(beta)_n 2F1(-n, -x; beta; 1 - 1/c)`.
    Meixner,
    /// Classical Charlier `2F0(-n, -x; ; -1/a)`.
    Charlier,
    /// Classical Laguerre `(alpha+1)_n / n! 1F1(-n; alpha+1; x)`.
    Laguerre,
    /// Classical Krawtchouk `2F1(-n, -x; -N; 1/p)`.
    Krawtchouk,
}

impl Variant {
    pub const ALL: [Variant; 14] = [
        Variant::AmpA,
        Variant::AmpB,
        Variant::AcpA,
        Variant::AcpB,
        Variant::AlpA,
        Variant::AlpB,
        Variant::AkpA,
        Variant::AkpB,
        Variant::AkpBoundary,
        Variant::MPollaczek,
        Variant::Meixner,
        Variant::Charlier,
        Variant::Laguerre,
        Variant::Krawtchouk,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Self::AmpA => "amp-a",
            Self::AmpB => "amp-b",
            Self::AcpA => "acp-a",
            Self::AcpB => "acp-b",
            Self::AlpA => "alp-a",
            Self::AlpB => "alp-b",
            Self::AkpA => "akp-a",
            Self::AkpB => "akp-b",
            Self::AkpBoundary => "akp-boundary",
            Self::MPollaczek => "mp",
            Self::Meixner => "meixner",
            Self::Charlier => "charlier",
            Self::Laguerre => "laguerre",
            Self::Krawtchouk => "krawtchouk",
        }
    }

    pub fn family(self) -> FamilyKind {
        match self {
            Self::AmpA | Self::AmpB | Self::Meixner => FamilyKind::Amp,
            Self::AcpA | Self::AcpB | Self::Charlier => FamilyKind::Acp,
            Self::AlpA | Self::AlpB | Self::Laguerre => FamilyKind::Alp,
            Self::AkpA | Self::AkpB | Self::AkpBoundary | Self::Krawtchouk => FamilyKind::Akp,
            Self::MPollaczek => FamilyKind::MPollaczek,
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Self::Meixner | Self::Charlier | Self::Laguerre | Self::Krawtchouk)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Self::ALL
            .into_iter()
            .find(|v| v.id() == lower)
            .ok_or_else(|| Error::Unknown { kind: "variant", id: s.to_string() })
    }
}

/// `prod num / prod den`, with a zero denominator reported as a pole.
fn ratio<S: Scalar>(num: &[S], den: &[S]) -> Result<S> {
    let mut acc = S::one();
    for v in num {
        acc = acc * v.clone();
    }
    if acc.is_zero() {
        return Ok(acc);
    }
    for v in den {
        if v.is_zero() {
            return Err(Error::Pole(format!("vanishing factor in denominator ({})", v.render())));
        }
        acc = acc / v.clone();
    }
    Ok(acc)
}

fn s_int<S: Scalar>(n: usize) -> S {
    S::from_int(n as i64)
}

fn neg_n<S: Scalar>(n: usize) -> S {
    S::from_int(-(n as i64))
}

fn fact<S: Scalar>(n: usize) -> S {
    S::from_rational(&factorial(n))
}

/// Generic 4F3-type inner sum shared by the AMP/AKP/MP forms:
/// `sum_k w^k (-n)_k (u)_k / ((g+1)_k (v)_k) 4F3(k-n, u+k, v-1, g; u, v+k, g+1+k; 1)`.
fn amp_type_sum<S: Scalar>(w: &S, u: &S, v: &S, gamma: &S, n: usize) -> Result<S> {
    let one = S::one();
    let g1 = gamma.clone() + one.clone();
    let mut total = S::zero();
    let mut wk = S::one();
    for k in 0..=n {
        let kk: S = s_int(k);
        let outer = ratio(
            &[wk.clone(), pochhammer(&neg_n(n), k), pochhammer(u, k)],
            &[pochhammer(&g1, k), pochhammer(v, k)],
        )?;
        let spec = HyperSpec::with_range(
            vec![kk.clone() - s_int(n), u.clone() + kk.clone(), v.clone() - one.clone(), gamma.clone()],
            vec![u.clone(), v.clone() + kk.clone(), g1.clone() + kk],
            S::one(),
            n - k,
        );
        spec.check_poles()?;
        if !outer.is_zero() {
            total = total + outer * pfq_terminating(&spec)?;
        }
        wk = wk * w.clone();
    }
    Ok(total)
}

fn amp_a<S: Scalar>(beta: &S, c: &S, gamma: &S, x: &S, n: usize) -> Result<S> {
    let gb = gamma.clone() + beta.clone();
    let pref = ratio(
        &[pochhammer(&(gamma.clone() + S::one()), n), pochhammer(&gb, n)],
        &[powi(c, n as i64), fact(n)],
    )?;
    let sum = amp_type_sum(&(S::one() - c.clone()), &(gb.clone() + x.clone()), &gb, gamma, n)?;
    Ok(pref * sum)
}

fn amp_b<S: Scalar>(beta: &S, c: &S, gamma: &S, x: &S, n: usize) -> Result<S> {
    let gb = gamma.clone() + beta.clone();
    if c.is_zero() {
        return Err(Error::Pole("c = 0".into()));
    }
    let c_tilde = (c.clone() - S::one()) / c.clone();
    let pref = ratio(&[pochhammer(&(gamma.clone() + S::one()), n), pochhammer(&gb, n)], &[fact(n)])?;
    let sum = amp_type_sum(&c_tilde, &(gamma.clone() - x.clone()), &gb, gamma, n)?;
    Ok(pref * sum)
}

fn akp_a<S: Scalar>(p: &S, big_n: &S, gamma: &S, x: &S, n: usize) -> Result<S> {
    let gn = gamma.clone() - big_n.clone();
    let one = S::one();
    if p.is_zero() || p.clone() == one {
        return Err(Error::Pole("p must differ from 0 and 1".into()));
    }
    let base = (p.clone() - one.clone()) / p.clone();
    let pref = ratio(&[powi(&base, n as i64), pochhammer(&(gamma.clone() + one.clone()), n)], &[fact(n)])?;
    let w = one.clone() / (one - p.clone());
    let sum = amp_type_sum(&w, &(gn.clone() + x.clone()), &gn, gamma, n)?;
    Ok(pref * sum)
}

fn akp_b<S: Scalar>(p: &S, big_n: &S, gamma: &S, x: &S, n: usize) -> Result<S> {
    let gn = gamma.clone() - big_n.clone();
    if p.is_zero() {
        return Err(Error::Pole("p = 0".into()));
    }
    let pref = ratio(&[pochhammer(&(gamma.clone() + S::one()), n)], &[fact(n)])?;
    let sum = amp_type_sum(&(S::one() / p.clone()), &(gamma.clone() - x.clone()), &gn, gamma, n)?;
    Ok(pref * sum)
}

/// `n = N - gamma`: the factor `(-n)_k / (gamma - N)_k` is 1 and the inner
/// 4F3 loses its `k - n` pair. The remaining 3F2 is summed over the same
/// range `j <= n - k`, which is its value by continuity in `N`.
fn akp_boundary<S: Scalar>(p: &S, big_n: &S, gamma: &S, x: &S, n: usize) -> Result<S> {
    let one = S::one();
    let g1 = gamma.clone() + one.clone();
    let gx = gamma.clone() - x.clone();
    let mut total = S::zero();
    for k in 0..=n {
        let kk: S = s_int(k);
        let outer = ratio(&[powi(p, -(k as i64)), pochhammer(&gx, k)], &[pochhammer(&g1, k)])?;
        let spec = HyperSpec::with_range(
            vec![gx.clone() + kk.clone(), gamma.clone() - big_n.clone() - one.clone(), gamma.clone()],
            vec![gx.clone(), g1.clone() + kk],
            S::one(),
            n - k,
        );
        spec.check_poles()?;
        if outer.is_zero() {
            continue;
        }
        let inner = pfq_terminating(&spec)?;
        total = total + outer * inner;
    }
    let pref = ratio(&[pochhammer(&g1, n)], &[fact(n)])?;
    Ok(pref * total)
}

fn acp_a<S: Scalar>(a: &S, gamma: &S, x: &S, n: usize) -> Result<S> {
    let one = S::one();
    let g1 = gamma.clone() + one.clone();
    let gx = gamma.clone() - x.clone();
    if a.is_zero() {
        return Err(Error::Pole("a = 0".into()));
    }
    let w = -(one / a.clone());
    let mut total = S::zero();
    for k in 0..=n {
        let kk: S = s_int(k);
        let outer = ratio(
            &[powi(&w, k as i64), pochhammer(&neg_n(n), k), pochhammer(&gx, k)],
            &[pochhammer(&g1, k)],
        )?;
        let spec = HyperSpec::with_range(
            vec![kk.clone() - s_int(n), gx.clone() + kk.clone(), gamma.clone()],
            vec![gx.clone(), g1.clone() + kk],
            S::one(),
            n - k,
        );
        spec.check_poles()?;
        if outer.is_zero() {
            continue;
        }
        let inner = pfq_terminating(&spec)?;
        total = total + outer * inner;
    }
    Ok(ratio(&[pochhammer(&g1, n)], &[fact(n)])? * total)
}

fn acp_b<S: Scalar>(a: &S, gamma: &S, x: &S, n: usize) -> Result<S> {
    let gx = gamma.clone() - x.clone();
    if a.is_zero() {
        return Err(Error::Pole("a = 0".into()));
    }
    let w = -(S::one() / a.clone());
    let mut total = S::zero();
    for k in 0..=n {
        let kk: S = s_int(k);
        let outer = ratio(
            &[powi(&w, k as i64), pochhammer(&neg_n(n), k), pochhammer(&gx, k)],
            &[fact(k)],
        )?;
        let spec = HyperSpec::with_range(
            vec![-kk.clone(), gamma.clone(), kk - s_int(n)],
            vec![neg_n(n), gx.clone()],
            S::one(),
            k.min(n - k),
        );
        spec.check_poles()?;
        if outer.is_zero() {
            continue;
        }
        let inner = pfq_terminating(&spec)?;
        total = total + outer * inner;
    }
    Ok(total)
}

fn alp_a<S: Scalar>(alpha: &S, gamma: &S, x: &S, n: usize) -> Result<S> {
    let one = S::one();
    let g1 = gamma.clone() + one.clone();
    let ga = gamma.clone() + alpha.clone();
    let ga1 = ga.clone() + one;
    let mut total = S::zero();
    for k in 0..=n {
        let kk: S = s_int(k);
        let outer = ratio(
            &[pochhammer(&neg_n(n), k), powi(x, k as i64)],
            &[pochhammer(&g1, k), pochhammer(&ga1, k)],
        )?;
        let spec = HyperSpec::with_range(
            vec![kk.clone() - s_int(n), ga.clone(), gamma.clone()],
            vec![ga1.clone() + kk.clone(), g1.clone() + kk],
            S::one(),
            n - k,
        );
        spec.check_poles()?;
        if outer.is_zero() {
            continue;
        }
        let inner = pfq_terminating(&spec)?;
        total = total + outer * inner;
    }
    Ok(ratio(&[pochhammer(&ga1, n)], &[fact(n)])? * total)
}

fn alp_b<S: Scalar>(alpha: &S, gamma: &S, x: &S, n: usize) -> Result<S> {
    let one = S::one();
    let g1 = gamma.clone() + one.clone();
    let a1 = alpha.clone() + one.clone();
    let mut total = S::zero();
    for k in 0..=n {
        let kk: S = s_int(k);
        let outer = ratio(
            &[pochhammer(&neg_n(n), k), powi(x, k as i64)],
            &[pochhammer(&g1, k), pochhammer(&a1, k)],
        )?;
        let spec = HyperSpec::with_range(
            vec![kk.clone() - s_int(n), one.clone() - alpha.clone() + kk.clone(), gamma.clone()],
            vec![-alpha.clone() - s_int(n), g1.clone() + kk],
            S::one(),
            n - k,
        );
        spec.check_poles()?;
        if outer.is_zero() {
            continue;
        }
        let inner = pfq_terminating(&spec)?;
        total = total + outer * inner;
    }
    Ok(ratio(&[pochhammer(&a1, n)], &[fact(n)])? * total)
}

fn meixner_classical<S: Scalar>(beta: &S, c: &S, x: &S, n: usize) -> Result<S> {
    if c.is_zero() {
        return Err(Error::Pole("c = 0".into()));
    }
    let z = S::one() - S::one() / c.clone();
    let f = pfq_terminating(&HyperSpec::with_range(vec![neg_n(n), -x.clone()], vec![beta.clone()], z, n))?;
    Ok(pochhammer(beta, n) * f)
}

fn charlier_classical<S: Scalar>(a: &S, x: &S, n: usize) -> Result<S> {
    if a.is_zero() {
        return Err(Error::Pole("a = 0".into()));
    }
    let z = -(S::one() / a.clone());
    pfq_terminating(&HyperSpec::with_range(vec![neg_n(n), -x.clone()], vec![], z, n))
}

fn laguerre_classical<S: Scalar>(alpha: &S, x: &S, n: usize) -> Result<S> {
    let a1 = alpha.clone() + S::one();
    let f = pfq_terminating(&HyperSpec::with_range(vec![neg_n(n)], vec![a1.clone()], x.clone(), n))?;
    Ok(ratio(&[pochhammer(&a1, n)], &[fact(n)])? * f)
}

fn krawtchouk_classical<S: Scalar>(p: &S, big_n: &S, x: &S, n: usize) -> Result<S> {
    if p.is_zero() {
        return Err(Error::Pole("p = 0".into()));
    }
    pfq_terminating(&HyperSpec::with_range(
        vec![neg_n(n), -x.clone()],
        vec![-big_n.clone()],
        S::one() / p.clone(),
        n,
    ))
}

fn mismatch(variant: Variant, kind: FamilyKind) -> Error {
    Error::Validation(format!("variant {variant} does not apply to family {kind}"))
}

/// Literal evaluation of a real-scalar variant; poles are returned as errors.
fn eval_literal<S: Scalar>(params: &FamilyParams<S>, variant: Variant, x: &S, n: usize) -> Result<S> {
    use FamilyParams as F;
    match (variant, params) {
        (Variant::AmpA, F::Amp { beta, c, gamma }) => amp_a(beta, c, gamma, x, n),
        (Variant::AmpB, F::Amp { beta, c, gamma }) => amp_b(beta, c, gamma, x, n),
        (Variant::Meixner, F::Amp { beta, c, .. }) => meixner_classical(beta, c, x, n),
        (Variant::AcpA, F::Acp { a, gamma }) => acp_a(a, gamma, x, n),
        (Variant::AcpB, F::Acp { a, gamma }) => acp_b(a, gamma, x, n),
        (Variant::Charlier, F::Acp { a, .. }) => charlier_classical(a, x, n),
        (Variant::AlpA, F::Alp { alpha, gamma }) => alp_a(alpha, gamma, x, n),
        (Variant::AlpB, F::Alp { alpha, gamma }) => alp_b(alpha, gamma, x, n),
        (Variant::Laguerre, F::Alp { alpha, .. }) => laguerre_classical(alpha, x, n),
        (Variant::AkpA, F::Akp { p, n: big_n, gamma }) => akp_a(p, big_n, gamma, x, n),
        (Variant::AkpB, F::Akp { p, n: big_n, gamma }) => akp_b(p, big_n, gamma, x, n),
        (Variant::AkpBoundary, F::Akp { p, n: big_n, gamma }) => akp_boundary(p, big_n, gamma, x, n),
        (Variant::Krawtchouk, F::Akp { p, n: big_n, .. }) => krawtchouk_classical(p, big_n, x, n),
        (Variant::MPollaczek, _) => Err(Error::Unsupported(
            "the Meixner-Pollaczek form needs Gaussian rationals; use mpollaczek_explicit".into(),
        )),
        (v, p) => Err(mismatch(v, p.kind())),
    }
}

/// Evaluates `f` at `x`; if `x` sits on a removable singularity of the
/// closed form, recovers the value by exact Lagrange interpolation of the
/// degree-`n` polynomial through nearby regular points.
fn eval_or_interpolate<S, F>(x: &S, degree: usize, f: F) -> Result<S>
where
    S: Scalar,
    F: Fn(&S) -> Result<S>,
{
    match f(x) {
        Err(Error::Pole(_)) => {}
        other => return other,
    }
    let denom = 2 * degree as i64 + 7;
    let mut nodes: Vec<(S, S)> = Vec::with_capacity(degree + 1);
    let mut last_err = None;
    for j in 1..=(20 * (degree as i64 + 1) + 100) {
        if nodes.len() == degree + 1 {
            break;
        }
        let offset = if j % 2 == 0 { rat(j / 2, denom) } else { rat(-(j + 1) / 2, denom) };
        let xj = x.clone() + S::from_rational(&offset);
        match f(&xj) {
            Ok(v) => nodes.push((xj, v)),
            Err(e @ Error::Pole(_)) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    if nodes.len() < degree + 1 {
        return Err(last_err.unwrap_or_else(|| Error::Pole("no regular interpolation nodes".into())));
    }
    let mut value = S::zero();
    for (i, (xi, yi)) in nodes.iter().enumerate() {
        let mut basis = yi.clone();
        for (j, (xj, _)) in nodes.iter().enumerate() {
            if i != j {
                basis = basis * (x.clone() - xj.clone()) / (xi.clone() - xj.clone());
            }
        }
        value = value + basis;
    }
    Ok(value)
}

/// Closed-form value without parameter validation ("formal mode").
///
/// Removable singularities in `x` are resolved by interpolation; genuine
/// parameter poles are reported as [`Error::Pole`].
pub fn explicit_eval_formal<S: Scalar>(params: &FamilyParams<S>, variant: Variant, x: &S, n: usize) -> Result<S> {
    if variant.family() != params.kind() {
        return Err(mismatch(variant, params.kind()));
    }
    eval_or_interpolate(x, n, |xv| eval_literal(params, variant, xv, n))
}

/// Closed-form value of the `n`-th member at `x`, after validating the parameters.
pub fn explicit_eval(params: &Params, variant: Variant, x: &Rational, n: usize) -> Result<Rational> {
    params.validate()?;
    if variant.is_classical() && !params.gamma().is_zero() {
        return Err(Error::Validation(format!("variant {variant} needs gamma = 0")));
    }
    if variant == Variant::AkpBoundary && params.akp_boundary() != Some(n) {
        return Err(Error::Validation("the boundary form needs n = N - gamma".into()));
    }
    if variant == Variant::MPollaczek {
        let z = mpollaczek_explicit(params, x, n)?;
        if !z.im.is_zero() {
            return Err(Error::Domain(format!("nonreal Meixner-Pollaczek value {}", z.render())));
        }
        return Ok(z.re);
    }
    explicit_eval_formal(params, variant, x, n)
}

/// Associated Meixner-Pollaczek polynomial `P_n^(nu)(x; phi, gamma)` from its
/// 4F3 representation, in Gaussian-rational arithmetic.
pub fn mpollaczek_explicit(params: &Params, x: &Rational, n: usize) -> Result<GaussianRational> {
    let FamilyParams::MPollaczek { nu, cos, sin, gamma } = params else {
        return Err(mismatch(Variant::MPollaczek, params.kind()));
    };
    let g = |q: &Rational| Complex::new(q.clone(), Rational::zero());
    let (nu, gamma) = (g(nu), g(gamma));
    let e_phi = Complex::new(cos.clone(), sin.clone());
    let two_i_sin = Complex::new(Rational::zero(), sin + sin);
    let x = g(x);
    eval_or_interpolate(&x, n, |xv| {
        let ix = xv.clone() * Complex::new(Rational::zero(), Rational::from_integer(1.into()));
        let u = gamma.clone() + nu.clone() + ix;
        let v = gamma.clone() + nu.clone() + nu.clone();
        let one = GaussianRational::from_int(1);
        let g1 = gamma.clone() + one.clone();
        let mut total = GaussianRational::zero();
        for k in 0..=n {
            let kk = GaussianRational::from_int(k as i64);
            let outer = ratio(
                &[
                    powi(&e_phi, (n - k) as i64),
                    powi(&two_i_sin, k as i64),
                    pochhammer(&neg_n(n), k),
                    pochhammer(&u, k),
                ],
                &[pochhammer(&g1, k), pochhammer(&v, k)],
            )?;
            let spec = HyperSpec::with_range(
                vec![kk.clone() - s_int::<GaussianRational>(n), u.clone() + kk.clone(), v.clone() - one.clone(), gamma.clone()],
                vec![u.clone(), v.clone() + kk.clone(), g1.clone() + kk],
                one.clone(),
                n - k,
            );
            spec.check_poles()?;
            if outer.is_zero() {
                continue;
            }
            let inner = pfq_terminating(&spec)?;
            total += outer * inner;
        }
        Ok(ratio(&[pochhammer(&v, n)], &[fact(n)])? * total)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, CirclePoint};
    use crate::families::{recurrence_eval, recurrence_eval_formal};

    #[test]
    fn amp_b_worked_example() {
        let params = Params::amp(int(1), rat(1, 2), int(1));
        assert_eq!(explicit_eval(&params, Variant::AmpB, &int(1), 2).unwrap(), int(10));
        assert_eq!(explicit_eval(&params, Variant::AmpA, &int(1), 2).unwrap(), int(10));
    }

    #[test]
    fn n_zero_is_one() {
        let cases = [
            (Params::amp(int(2), rat(1, 3), rat(1, 2)), Variant::AmpA),
            (Params::amp(int(2), rat(1, 3), rat(1, 2)), Variant::AmpB),
            (Params::acp(int(2), int(1)), Variant::AcpA),
            (Params::acp(int(2), int(1)), Variant::AcpB),
            (Params::alp(rat(1, 3), int(1)), Variant::AlpA),
            (Params::alp(rat(1, 3), int(1)), Variant::AlpB),
            (Params::akp(rat(1, 3), rat(9, 2), int(1)), Variant::AkpA),
            (Params::akp(rat(1, 3), rat(9, 2), int(1)), Variant::AkpB),
            (Params::mpollaczek(int(1), &CirclePoint::new(rat(1, 2)), int(1)), Variant::MPollaczek),
        ];
        for (params, variant) in cases {
            assert_eq!(explicit_eval(&params, variant, &rat(5, 7), 0).unwrap(), int(1), "{variant}");
        }
    }

    #[test]
    fn classical_meixner_value() {
        let params = Params::amp(int(2), rat(1, 2), int(0));
        assert_eq!(explicit_eval(&params, Variant::Meixner, &int(1), 1).unwrap(), int(1));
        let bad = Params::amp(int(2), rat(1, 2), int(1));
        assert!(matches!(explicit_eval(&bad, Variant::Meixner, &int(1), 1), Err(Error::Validation(_))));
    }

    #[test]
    fn removable_singularities_are_interpolated() {
        // gamma - x a nonpositive integer makes the inner 4F3 singular
        let params = Params::amp(rat(3, 2), rat(2, 5), int(1));
        let oracle = recurrence_eval(&params, &int(4), 7).unwrap();
        for variant in [Variant::AmpA, Variant::AmpB] {
            assert_eq!(explicit_eval(&params, variant, &int(4), 7).unwrap(), oracle[7]);
        }
        let akp = Params::akp(rat(1, 3), rat(11, 2), int(1));
        let oracle = recurrence_eval(&akp, &int(3), 4).unwrap();
        assert_eq!(explicit_eval(&akp, Variant::AkpB, &int(3), 4).unwrap(), oracle[4]);
        // gamma = x: the vanishing outer factor hides a 0/0 in the inner sum
        let acp = Params::acp(int(1), rat(1, 4));
        let oracle = recurrence_eval(&acp, &rat(1, 4), 3).unwrap();
        for variant in [Variant::AcpA, Variant::AcpB] {
            assert_eq!(explicit_eval(&acp, variant, &rat(1, 4), 3).unwrap(), oracle[3]);
        }
    }

    #[test]
    fn boundary_form_matches_recurrence() {
        let params = Params::akp(rat(1, 3), rat(9, 2), rat(1, 2));
        for x in [int(0), int(1), int(2), rat(7, 3)] {
            let oracle = recurrence_eval(&params, &x, 4).unwrap();
            assert_eq!(explicit_eval(&params, Variant::AkpBoundary, &x, 4).unwrap(), oracle[4]);
            assert_eq!(explicit_eval(&params, Variant::AkpB, &x, 4).unwrap(), oracle[4]);
            assert_eq!(explicit_eval(&params, Variant::AkpA, &x, 4).unwrap(), oracle[4]);
        }
        assert!(explicit_eval(&params, Variant::AkpBoundary, &int(1), 3).is_err());
    }

    #[test]
    fn meixner_pollaczek_matches_complex_recurrence() {
        let phi = CirclePoint::new(rat(1, 3));
        let params = Params::mpollaczek(rat(3, 4), &phi, rat(1, 2));
        let x = rat(2, 5);
        let oracle = recurrence_eval_formal(&params.to_gaussian(), &Complex::new(x.clone(), int(0)), 6).unwrap();
        for (n, expected) in oracle.iter().enumerate() {
            assert_eq!(&mpollaczek_explicit(&params, &x, n).unwrap(), expected);
        }
    }

    #[test]
    fn variant_family_mismatch() {
        let params = Params::acp(int(1), int(0));
        assert!(matches!(explicit_eval(&params, Variant::AmpA, &int(1), 2), Err(Error::Validation(_))));
        assert_eq!("AMP-B".parse::<Variant>().unwrap(), Variant::AmpB);
        assert!("amp-c".parse::<Variant>().is_err());
    }
}

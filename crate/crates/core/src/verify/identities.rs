//! Two-sided identities that are not owned by a single module.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, int, pochhammer, powi, CirclePoint, GaussianRational, Rational};
use crate::families::{charlier, laguerre, meixner, recurrence_eval_formal, recurrence_eval_polyx, FamilyParams, Params};
use crate::series::TruncatedSeries;

type Series = TruncatedSeries<Rational>;

/// Both sides of an identity, indexed by `n`.
pub type Sides<T> = Vec<(T, T)>;

fn weight(gamma: &Rational, k: usize) -> Rational {
    if k == 0 {
        Rational::one()
    } else {
        gamma / (gamma + int(k as i64))
    }
}

fn amp_values(beta: &Rational, c: &Rational, gamma: &Rational, x: &Rational, nmax: usize) -> Result<Vec<Rational>> {
    recurrence_eval_formal(&Params::amp(beta.clone(), c.clone(), gamma.clone()), x, nmax)
}

/// `n! M_n / (gamma+1)_n = sum_k C(n,k) w_k M_{n-k}(x; beta, c) M_k(-x-1; 2-beta, c)`.
pub fn convolution_amp(beta: &Rational, c: &Rational, gamma: &Rational, x: &Rational, nmax: usize) -> Result<Sides<Rational>> {
    let assoc = amp_values(beta, c, gamma, x, nmax)?;
    let left = meixner(beta, c, x, nmax)?;
    let right = meixner(&(int(2) - beta), c, &(-x - int(1)), nmax)?;
    let g1 = gamma + int(1);
    (0..=nmax)
        .map(|n| {
            let lhs = factorial(n) * &assoc[n] / pochhammer(&g1, n);
            let mut rhs = Rational::zero();
            for k in 0..=n {
                rhs += binomial(n, k)? * weight(gamma, k) * &left[n - k] * &right[k];
            }
            Ok((lhs, rhs))
        })
        .collect()
}

/// `n! C_n / (gamma+1)_n = sum_k C(n,k) w_k (-1)^k C_{n-k}(x; a) C_k(-x-1; -a)`.
pub fn convolution_acp(a: &Rational, gamma: &Rational, x: &Rational, nmax: usize) -> Result<Sides<Rational>> {
    let assoc = recurrence_eval_formal(&Params::acp(a.clone(), gamma.clone()), x, nmax)?;
    let left = charlier(a, x, nmax)?;
    let right = charlier(&-a.clone(), &(-x - int(1)), nmax)?;
    let g1 = gamma + int(1);
    (0..=nmax)
        .map(|n| {
            let lhs = factorial(n) * &assoc[n] / pochhammer(&g1, n);
            let mut rhs = Rational::zero();
            for k in 0..=n {
                let sign = if k % 2 == 0 { int(1) } else { int(-1) };
                rhs += binomial(n, k)? * weight(gamma, k) * sign * &left[n - k] * &right[k];
            }
            Ok((lhs, rhs))
        })
        .collect()
}

/// `L_n^(alpha)(x; gamma) = sum_k w_k L_{n-k}^(alpha)(x) L_k^(-alpha)(-x)`.
pub fn convolution_alp(alpha: &Rational, gamma: &Rational, x: &Rational, nmax: usize) -> Result<Sides<Rational>> {
    let assoc = recurrence_eval_formal(&Params::alp(alpha.clone(), gamma.clone()), x, nmax)?;
    let left = laguerre(alpha, x, nmax)?;
    let right = laguerre(&-alpha.clone(), &-x.clone(), nmax)?;
    Ok((0..=nmax)
        .map(|n| {
            let rhs = (0..=n).map(|k| weight(gamma, k) * &left[n - k] * &right[k]).sum();
            (assoc[n].clone(), rhs)
        })
        .collect())
}

/// `M_n(x; beta, c, gamma) = c^-n M_n(-beta-x; beta, 1/c, gamma)`.
pub fn reflection(beta: &Rational, c: &Rational, gamma: &Rational, x: &Rational, nmax: usize) -> Result<Sides<Rational>> {
    if c.is_zero() {
        return Err(Error::Pole("c = 0".into()));
    }
    let lhs = amp_values(beta, c, gamma, x, nmax)?;
    let rhs = amp_values(beta, &(Rational::one() / c), gamma, &(-beta - x), nmax)?;
    Ok(lhs
        .into_iter()
        .zip(rhs)
        .enumerate()
        .map(|(n, (l, r))| (l, r / powi(c, n as i64)))
        .collect())
}

/// `(gamma-N)_n K_n(x; p, N, gamma) = M_n(x; -N, p/(p-1), gamma)`.
pub fn akp_amp(p: &Rational, big_n: &Rational, gamma: &Rational, x: &Rational, nmax: usize) -> Result<Sides<Rational>> {
    if p.is_one() {
        return Err(Error::Pole("p = 1".into()));
    }
    let k = recurrence_eval_formal(&Params::akp(p.clone(), big_n.clone(), gamma.clone()), x, nmax)?;
    let m = amp_values(&-big_n.clone(), &(p / (p - int(1))), gamma, x, nmax)?;
    let gn = gamma - big_n;
    Ok(k.into_iter().zip(m).enumerate().map(|(n, (kv, mv))| (kv * pochhammer(&gn, n), mv)).collect())
}

/// `M_n(x; beta, c, 1-beta) = M_n(x+beta-1; 2-beta, c)`.
pub fn meixner_shift(beta: &Rational, c: &Rational, x: &Rational, nmax: usize) -> Result<Sides<Rational>> {
    let lhs = amp_values(beta, c, &(int(1) - beta), x, nmax)?;
    let rhs = meixner(&(int(2) - beta), c, &(x + beta - int(1)), nmax)?;
    Ok(lhs.into_iter().zip(rhs).collect())
}

/// `P_n^(nu)(x; phi, gamma) = e^{-i n phi} / (gamma+1)_n M_n(ix - nu; 2nu, e^{-2i phi}, gamma)`,
/// both sides in Gaussian rationals.
pub fn mpollaczek_amp(nu: &Rational, phi: &CirclePoint, gamma: &Rational, x: &Rational, nmax: usize) -> Result<Sides<GaussianRational>> {
    let g = |q: &Rational| Complex::new(q.clone(), Rational::zero());
    let params = Params::mpollaczek(nu.clone(), phi, gamma.clone()).to_gaussian();
    let lhs = recurrence_eval_formal(&params, &g(x), nmax)?;
    let e_neg = phi.exp_neg_i();
    let c = &e_neg * &e_neg;
    let amp = FamilyParams::Amp { beta: g(&(nu + nu)), c, gamma: g(gamma) };
    let arg = Complex::new(-nu.clone(), x.clone());
    let m = recurrence_eval_formal(&amp, &arg, nmax)?;
    let g1 = g(&(gamma + int(1)));
    Ok(lhs
        .into_iter()
        .zip(m)
        .enumerate()
        .map(|(n, (l, mv))| (l, mv * powi(&e_neg, n as i64) / pochhammer(&g1, n)))
        .collect())
}

/// `2F1(a, b; c; z) = (1-z)^{c-a-b} 2F1(c-a, c-b; c; z)` as series in `z`.
pub fn euler_transform(a: &Rational, b: &Rational, c: &Rational, order: usize) -> Result<(Series, Series)> {
    let lhs = Series::hypergeometric(&[a.clone(), b.clone()], std::slice::from_ref(c), order)?;
    let pre = Series::binomial_power(&Series::monomial(int(-1), 1, order), &(c - a - b))?;
    let rhs = &pre * &Series::hypergeometric(&[c - a, c - b], std::slice::from_ref(c), order)?;
    Ok((lhs, rhs))
}

/// `1F1(a; b; z) = e^z 1F1(b-a; b; -z)` as series in `z`.
pub fn kummer_transform(a: &Rational, b: &Rational, order: usize) -> Result<(Series, Series)> {
    let lhs = Series::hypergeometric(std::slice::from_ref(a), std::slice::from_ref(b), order)?;
    let inner = Series::hypergeometric(&[b - a], std::slice::from_ref(b), order)?;
    let flipped = Series::new(
        inner
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, v)| if k % 2 == 0 { v.clone() } else { -v.clone() })
            .collect(),
    );
    let rhs = &Series::exp(&Series::variable(order))? * &flipped;
    Ok((lhs, rhs))
}

/// Degree and leading coefficient of each `P_n`, `n <= nmax`, next to the
/// closed-form leading coefficient.
pub fn leading_coefficients(params: &Params, nmax: usize) -> Result<Vec<(usize, Rational, Rational)>> {
    let polys = recurrence_eval_polyx(params, nmax)?;
    let expected = |n: usize| -> Result<Rational> {
        let nn = n as i64;
        Ok(match params {
            FamilyParams::Amp { c, .. } => powi(&((c - int(1)) / c), nn),
            FamilyParams::Acp { a, .. } => powi(&(-(Rational::one() / a)), nn),
            FamilyParams::Alp { gamma, .. } => powi(&int(-1), nn) / pochhammer(&(gamma + int(1)), n),
            FamilyParams::Akp { p, n: big_n, gamma } => {
                Rational::one() / (powi(p, nn) * pochhammer(&(gamma - big_n), n))
            }
            FamilyParams::MPollaczek { sin, gamma, .. } => powi(&(sin + sin), nn) / pochhammer(&(gamma + int(1)), n),
        })
    };
    polys
        .iter()
        .enumerate()
        .map(|(n, p)| Ok((p.degree(), p.leading_coeff(), expected(n)?)))
        .collect()
}

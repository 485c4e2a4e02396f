use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{is_natural, pochhammer, Rational};

use super::pfq::pfq_f64;

/// Default truncation threshold for the nonterminating 2F1 factors.
pub const DEFAULT_EPS: f64 = 1e-14;
/// Hard cap on the number of terms of each 2F1.
pub const MAX_TERMS: usize = 100_000;

/// Largest tolerated ratio between the cross-product terms and the result.
pub const MAX_CANCELLATION: f64 = 1e4;

fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// AMP value from the cross product of four nonterminating 2F1 series in
/// `t = (c-1)/c`, in double precision.
pub fn amp_quadratic_form(
    beta: &Rational,
    c: &Rational,
    gamma: &Rational,
    x: &Rational,
    n: usize,
    eps: f64,
) -> Result<f64> {
    if c.is_zero() {
        return Err(Error::Domain("c = 0".into()));
    }
    let t_exact = (c - Rational::one()) / c;
    if t_exact.abs() >= Rational::one() {
        return Err(Error::Domain(format!("|(c-1)/c| = {} is not below 1", t_exact.abs())));
    }
    if !gamma.is_positive() {
        return Err(Error::Precondition("gamma must be positive".into()));
    }
    let gb = gamma + beta;
    if !gb.is_positive() || gb.is_one() {
        return Err(Error::Precondition("gamma + beta must be positive and different from 1".into()));
    }
    if is_natural(beta) && !beta.is_zero() {
        return Err(Error::Pole(format!("beta = {beta} is a positive integer")));
    }
    let (b, g, xf, t) = (to_f64(beta), to_f64(gamma), to_f64(x), to_f64(&t_exact));
    let nf = n as f64;
    let f = |num: [f64; 2], den: f64| pfq_f64(&num, &[den], t, eps, MAX_TERMS);
    let first = to_f64(&pochhammer(&(&gb - Rational::one()), n + 1))
        * f([xf + 1.0, g], 2.0 - b)?
        * f([-xf, -nf - g], b)?;
    let second = to_f64(&pochhammer(gamma, n + 1))
        * f([xf + b, g + b - 1.0], b)?
        * f([1.0 - b - xf, -nf - g - b + 1.0], 2.0 - b)?;
    let value = (first - second) / (b - 1.0);
    let magnitude = first.abs().max(second.abs()) / (b - 1.0).abs();
    if magnitude > MAX_CANCELLATION * (1.0 + value.abs()) {
        return Err(Error::Unsupported(format!(
            "cancellation between terms of size {magnitude:e} leaves too few digits"
        )));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::families::{recurrence_eval, Params};

    #[test]
    fn matches_recurrence() {
        let cases = [
            (rat(3, 2), rat(2, 3), int(1), int(1), 1),
            (rat(5, 3), rat(3, 4), rat(1, 2), rat(2, 5), 4),
            (rat(1, 3), rat(4, 5), int(2), rat(-3, 7), 6),
        ];
        for (beta, c, gamma, x, n) in cases {
            let exact = recurrence_eval(&Params::amp(beta.clone(), c.clone(), gamma.clone()), &x, n).unwrap();
            let oracle = exact[n].to_f64().unwrap();
            let v = amp_quadratic_form(&beta, &c, &gamma, &x, n, DEFAULT_EPS).unwrap();
            assert!((v - oracle).abs() < 1e-10 * (1.0 + oracle.abs()), "{v} vs {oracle}");
        }
        let v = amp_quadratic_form(&rat(3, 2), &rat(2, 3), &int(1), &int(0), 0, DEFAULT_EPS).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_inputs() {
        let r = amp_quadratic_form(&rat(1, 2), &rat(1, 2), &int(1), &int(1), 1, DEFAULT_EPS);
        assert!(matches!(r, Err(Error::Domain(_))));
        let r = amp_quadratic_form(&int(2), &rat(2, 3), &int(1), &int(1), 1, DEFAULT_EPS);
        assert!(matches!(r, Err(Error::Pole(_))));
        let r = amp_quadratic_form(&rat(31, 4), &int(2), &int(7), &int(8), 3, DEFAULT_EPS);
        assert!(matches!(r, Err(Error::Unsupported(_))));
    }
}

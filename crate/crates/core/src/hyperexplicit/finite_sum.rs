use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{factorial, int, is_natural, pochhammer, powi, Rational, Scalar};

use super::pfq::{pfq_f64, pfq_terminating, HyperSpec};
use super::quadratic::{DEFAULT_EPS, MAX_TERMS};

/// A side of an identity: exact when every series involved terminates.
#[derive(Debug, Clone, PartialEq)]
pub enum SideValue {
    Exact(Rational),
    Float(f64),
}

impl SideValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            Self::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            Self::Float(v) => *v,
        }
    }

    pub fn render(&self) -> String {
        match self {
            Self::Exact(q) => q.render(),
            Self::Float(v) => format!("{v:e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FiniteSumResult {
    pub lhs: Rational,
    pub rhs: SideValue,
}

impl FiniteSumResult {
    /// Exact equality, or relative agreement within `tol` when the right side is a float.
    pub fn agrees(&self, tol: f64) -> bool {
        match &self.rhs {
            SideValue::Exact(q) => q == &self.lhs,
            SideValue::Float(v) => {
                let l = self.lhs.to_f64().unwrap_or(f64::NAN);
                (l - v).abs() <= tol * (1.0 + l.abs())
            }
        }
    }

    pub fn abs_err(&self) -> f64 {
        match &self.rhs {
            SideValue::Exact(q) => (&self.lhs - q).abs().to_f64().unwrap_or(f64::NAN),
            SideValue::Float(v) => (self.lhs.to_f64().unwrap_or(f64::NAN) - v).abs(),
        }
    }
}

fn terminates(params: &[&Rational]) -> bool {
    params.iter().any(|p| p.nonpositive_integer().is_some())
}

/// Both sides of the finite 4F3 sum
///
/// `sum_k t^k (-n)_k (a+y)_k / ((a+1)_k (b+1)_k) 4F3(k-n, a+y+k, a, b; a+y, b+1+k, a+1+k; 1)`
///
/// against its closed form as two products of 2F1 series in `t`.
/// `b - a` may be a positive integer when `t = 0`, or when `1 - y` ends the
/// series with denominator `a - b + 1` before its pole.
pub fn finite_sum_identity(a: &Rational, b: &Rational, y: &Rational, t: &Rational, n: usize) -> Result<FiniteSumResult> {
    if !a.is_positive() || b <= &int(-1) || b.is_zero() {
        return Err(Error::Validation("need a > 0, b > -1 and b != 0".into()));
    }
    let diff = b - a;
    if diff.is_zero() {
        return Err(Error::Validation("need b != a".into()));
    }
    if !t.is_zero() && is_natural(&diff) {
        let stops = (Rational::one() - y).nonpositive_integer().is_some_and(|m| int(m as i64) < diff);
        if !stops {
            return Err(Error::Validation("b - a must not be a nonnegative integer".into()));
        }
    }

    let one = Rational::one();
    let (a1, b1, ay) = (a + &one, b + &one, a + y);
    let mut lhs = Rational::zero();
    for k in 0..=n {
        let kk = int(k as i64);
        let outer = powi(t, k as i64) * pochhammer(&int(-(n as i64)), k) * pochhammer(&ay, k)
            / (pochhammer(&a1, k) * pochhammer(&b1, k));
        if outer.is_zero() {
            continue;
        }
        let inner = pfq_terminating(&HyperSpec::with_range(
            vec![&kk - int(n as i64), &ay + &kk, a.clone(), b.clone()],
            vec![ay.clone(), &b1 + &kk, &a1 + &kk],
            one.clone(),
            n - k,
        ))?;
        lhs += outer * inner;
    }

    let nf = factorial(n);
    let (c1, c2) = (&one - &diff, &diff + &one);
    let one_minus_y = &one - y;
    let (p2, p3, p4) = (-a - int(n as i64), a + int(n as i64 + 1), &one - a);
    let factors: [([&Rational; 2], &Rational); 4] = [
        ([&one_minus_y, a], &c1),
        ([y, &p2], &c2),
        ([&one_minus_y, &p3], &c1),
        ([y, &p4], &c2),
    ];
    let weight_a = b / pochhammer(&a1, n);
    let weight_b = powi(&(&one - t), n as i64 + 1) * a / pochhammer(&b1, n);
    let scale = &nf / &diff;

    let rhs = if t.is_zero() || factors.iter().all(|(num, _)| terminates(num)) {
        let mut v = Vec::with_capacity(4);
        for (num, den) in &factors {
            v.push(pfq_terminating(&HyperSpec::new(
                vec![num[0].clone(), num[1].clone()],
                vec![(*den).clone()],
                t.clone(),
            ))
            .or_else(|e| if t.is_zero() { Ok(one.clone()) } else { Err(e) })?);
        }
        SideValue::Exact(scale * (weight_a * &v[0] * &v[1] - weight_b * &v[2] * &v[3]))
    } else {
        if t.abs() >= one {
            return Err(Error::Domain("nonterminating 2F1 factors need |t| < 1".into()));
        }
        let f = |q: &Rational| q.to_f64().unwrap_or(f64::NAN);
        let tf = f(t);
        let mut v = Vec::with_capacity(4);
        for (num, den) in &factors {
            v.push(pfq_f64(&[f(num[0]), f(num[1])], &[f(den)], tf, DEFAULT_EPS, MAX_TERMS)?);
        }
        SideValue::Float(f(&scale) * (f(&weight_a) * v[0] * v[1] - f(&weight_b) * v[2] * v[3]))
    };
    Ok(FiniteSumResult { lhs, rhs })
}

/// Both sides of `3F2(-m, a, b; c, d; 1) = (c-a)_m/(c)_m 3F2(-m, a, d-b; a-c+1-m, d; 1)`.
pub fn ternary_transform_check(
    m: usize,
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
) -> Result<(Rational, Rational)> {
    let mneg = int(-(m as i64));
    let lhs = pfq_terminating(&HyperSpec::new(
        vec![mneg.clone(), a.clone(), b.clone()],
        vec![c.clone(), d.clone()],
        Rational::one(),
    ))?;
    let cm = pochhammer(c, m);
    if cm.is_zero() {
        return Err(Error::Pole("(c)_m vanishes".into()));
    }
    let inner = pfq_terminating(&HyperSpec::new(
        vec![mneg, a.clone(), d - b],
        vec![a - c + Rational::one() - int(m as i64), d.clone()],
        Rational::one(),
    ))?;
    let rhs = pochhammer(&(c - a), m) / cm * inner;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn spot_values() {
        let r = finite_sum_identity(&int(1), &int(2), &rat(3, 5), &int(0), 1).unwrap();
        assert_eq!(r.lhs, rat(2, 3));
        assert_eq!(r.rhs, SideValue::Exact(rat(2, 3)));
        let r = finite_sum_identity(&rat(1, 3), &rat(5, 7), &rat(2, 9), &rat(1, 4), 0).unwrap();
        assert_eq!(r.lhs, int(1));
        assert!(r.agrees(1e-12));
    }

    #[test]
    fn terminating_configurations_are_exact() {
        for n in 0..6 {
            let r = finite_sum_identity(&int(2), &rat(1, 2), &int(3), &rat(2, 7), n).unwrap();
            assert!(matches!(r.rhs, SideValue::Exact(_)));
            assert!(r.agrees(0.0), "n = {n}: {r:?}");
        }
    }

    #[test]
    fn y_one_needs_float_rhs() {
        let r = finite_sum_identity(&rat(1, 2), &rat(3, 2), &int(1), &rat(1, 3), 2).unwrap();
        assert!(matches!(r.rhs, SideValue::Float(_)));
        assert!(r.agrees(1e-12), "{r:?}");
    }

    #[test]
    fn parameter_violations() {
        assert!(finite_sum_identity(&int(0), &int(2), &int(1), &int(0), 1).is_err());
        assert!(finite_sum_identity(&int(1), &int(2), &rat(1, 2), &rat(1, 2), 1).is_err());
        assert!(finite_sum_identity(&int(1), &int(0), &int(1), &int(0), 1).is_err());
    }

    #[test]
    fn ternary_transform() {
        for m in 0..6 {
            let (l, r) = ternary_transform_check(m, &rat(2, 3), &rat(-5, 4), &rat(7, 2), &rat(9, 5)).unwrap();
            assert_eq!(l, r);
        }
    }
}

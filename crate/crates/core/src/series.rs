//! Truncated formal power series in `t` over any [`Scalar`].
//!
//! A series of order `T` stores `c_0..=c_T`. Binary operations between series
//! of different orders truncate to the smaller order.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> TruncatedSeries<S> {
    /// Series with the given coefficients; an empty vector becomes the zero series of order 0.
    pub fn new(mut coeffs: Vec<S>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(S::zero());
        }
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![S::zero(); order + 1] }
    }

    pub fn constant(value: S, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(S::one(), order)
    }

    /// `value * t^power`, or zero when `power > order`.
    pub fn monomial(value: S, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = value;
        }
        s
    }

    /// The series `t`.
    pub fn variable(order: usize) -> Self {
        Self::monomial(S::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// `[t^k]`, zero past the order.
    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<S> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, S::zero());
        Self { coeffs }
    }

    pub fn scale(&self, factor: &S) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect() }
    }

    /// Multiplies by `t^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k > order {
                break;
            }
            out.coeffs[i + k] = c.clone();
        }
        out
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul_series(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        let lead_a = self.coeffs.iter().position(|c| !c.is_zero());
        let lead_b = other.coeffs.iter().position(|c| !c.is_zero());
        let (Some(va), Some(vb)) = (lead_a, lead_b) else {
            return out;
        };
        for i in va..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in vb..=order - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j].mul_add_assign(&self.coeffs[i], &other.coeffs[j]);
            }
        }
        out
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let f0 = &self.coeffs[0];
        if f0.is_zero() {
            return Err(Error::Singular);
        }
        let inv0 = S::one() / f0.clone();
        let order = self.order();
        let mut g: Vec<S> = Vec::with_capacity(order + 1);
        g.push(inv0.clone());
        for n in 1..=order {
            let mut acc = S::zero();
            for k in 1..=n {
                acc.mul_add_assign(&self.coeffs[k], &g[n - k]);
            }
            g.push(-(acc * inv0.clone()));
        }
        Ok(Self { coeffs: g })
    }

    /// `(1 + u)^r` for `u(0) = 0`, by the power recurrence
    /// `n g_n = sum_{k=1}^{n} ((r+1) k - n) u_k g_{n-k}`.
    pub fn binomial_power(u: &Self, r: &Rational) -> Result<Self> {
        if !u.coeffs[0].is_zero() {
            return Err(Error::Precondition(
                "binomial_power needs a series with zero constant term".into(),
            ));
        }
        let order = u.order();
        let r1 = S::from_rational(&(r + Rational::from_integer(1.into())));
        let mut g: Vec<S> = Vec::with_capacity(order + 1);
        g.push(S::one());
        for n in 1..=order {
            let mut acc = S::zero();
            for k in 1..=n {
                if u.coeffs[k].is_zero() {
                    continue;
                }
                let weight = r1.clone() * S::from_int(k as i64) - S::from_int(n as i64);
                acc.mul_add_assign(&(weight * u.coeffs[k].clone()), &g[n - k]);
            }
            g.push(acc / S::from_int(n as i64));
        }
        Ok(Self { coeffs: g })
    }

    /// `f^r` for a series with `f(0) = 1`.
    pub fn pow_rational(&self, r: &Rational) -> Result<Self> {
        if self.coeffs[0] != S::one() {
            return Err(Error::Precondition("pow_rational needs f(0) = 1".into()));
        }
        let u = self - &Self::one(self.order());
        Self::binomial_power(&u, r)
    }

    /// `exp(u)` for `u(0) = 0`, via `g' = u' g`.
    pub fn exp(u: &Self) -> Result<Self> {
        if !u.coeffs[0].is_zero() {
            return Err(Error::Precondition("exp needs a series with zero constant term".into()));
        }
        let order = u.order();
        let mut g: Vec<S> = Vec::with_capacity(order + 1);
        g.push(S::one());
        for n in 1..=order {
            let mut acc = S::zero();
            for k in 1..=n {
                if u.coeffs[k].is_zero() {
                    continue;
                }
                acc.mul_add_assign(&(S::from_int(k as i64) * u.coeffs[k].clone()), &g[n - k]);
            }
            g.push(acc / S::from_int(n as i64));
        }
        Ok(Self { coeffs: g })
    }

    /// `outer(inner(t))` for `inner(0) = 0`, by Horner's scheme.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Precondition("compose needs inner(0) = 0".into()));
        }
        let order = outer.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::constant(outer.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = acc.mul_series(&inner);
            acc.coeffs[0] = acc.coeffs[0].clone() + outer.coeffs[k].clone();
        }
        Ok(acc)
    }

    /// `d/dt`, order drops by one; order 0 gives the zero series of order 0.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * S::from_int(k as i64))
            .collect();
        Self { coeffs }
    }

    /// The partial-sum operator `[f]_N`: coefficients above `N` zeroed, order kept.
    pub fn partial_sum(&self, n: usize) -> Result<Self> {
        if n > self.order() {
            return Err(Error::Domain(format!(
                "partial sum index {n} exceeds series order {}",
                self.order()
            )));
        }
        let mut out = self.clone();
        for c in out.coeffs.iter_mut().skip(n + 1) {
            *c = S::zero();
        }
        Ok(out)
    }

    /// Coefficient series of `pFq(num; den; z)` in `z` up to `order`.
    pub fn hypergeometric(num: &[S], den: &[S], order: usize) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = S::one();
        coeffs.push(term.clone());
        for j in 0..order {
            if term.is_zero() {
                coeffs.push(S::zero());
                continue;
            }
            let mut next = term;
            for a in num {
                next = next * (a.clone() + S::from_int(j as i64));
            }
            if !next.is_zero() {
                for b in den {
                    let bj = b.clone() + S::from_int(j as i64);
                    if bj.is_zero() {
                        return Err(Error::Pole(format!(
                            "denominator parameter {} reaches zero at term {}",
                            b.render(),
                            j + 1
                        )));
                    }
                    next = next / bj;
                }
                next = next / S::from_int(j as i64 + 1);
            }
            coeffs.push(next.clone());
            term = next;
        }
        Ok(Self { coeffs })
    }
}

impl<S: Scalar> Add for &TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;

    fn add(self, rhs: Self) -> TruncatedSeries<S> {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone()).collect();
        TruncatedSeries { coeffs }
    }
}

impl<S: Scalar> Sub for &TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;

    fn sub(self, rhs: Self) -> TruncatedSeries<S> {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|k| self.coeffs[k].clone() - rhs.coeffs[k].clone()).collect();
        TruncatedSeries { coeffs }
    }
}

impl<S: Scalar> Mul for &TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;

    fn mul(self, rhs: Self) -> TruncatedSeries<S> {
        self.mul_series(rhs)
    }
}

impl<S: Scalar> Neg for &TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;

    fn neg(self) -> TruncatedSeries<S> {
        TruncatedSeries { coeffs: self.coeffs.iter().cloned().map(Neg::neg).collect() }
    }
}

impl<S: Scalar> Add for TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;

    fn add(self, rhs: Self) -> TruncatedSeries<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;

    fn sub(self, rhs: Self) -> TruncatedSeries<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Mul for TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;

    fn mul(self, rhs: Self) -> TruncatedSeries<S> {
        self.mul_series(&rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    type Series = TruncatedSeries<Rational>;

    fn s(v: &[Rational]) -> Series {
        Series::new(v.to_vec())
    }

    fn ones(len: usize) -> Series {
        Series::new(vec![int(1); len])
    }

    #[test]
    fn arithmetic_examples() {
        let one_plus_t = s(&[int(1), int(1), int(0)]);
        assert_eq!(&one_plus_t * &one_plus_t, s(&[int(1), int(2), int(1)]));
        let f = s(&[int(3), rat(1, 2), int(-7)]);
        assert_eq!(&f + &Series::zero(2), f);
        assert_eq!(s(&[int(1), rat(1, 2), rat(1, 6)]).scale(&int(6)), s(&[int(6), int(3), int(1)]));
        assert_eq!(&f - &f, Series::zero(2));
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = s(&[int(1), int(1), int(1), int(1)]);
        let b = s(&[int(1), int(1)]);
        assert_eq!((&a + &b).order(), 1);
        assert_eq!(&a * &b, s(&[int(1), int(2)]));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(s(&[int(1), int(-1), int(0), int(0)]).reciprocal().unwrap(), ones(4));
        assert_eq!(Series::one(5).reciprocal().unwrap(), Series::one(5));
        assert_eq!(
            s(&[int(2), int(-1), int(0)]).reciprocal().unwrap(),
            s(&[rat(1, 2), rat(1, 4), rat(1, 8)])
        );
        assert_eq!(s(&[int(0), int(1)]).reciprocal(), Err(Error::Singular));
    }

    #[test]
    fn binomial_power_examples() {
        let minus_t = s(&[int(0), int(-1), int(0), int(0)]);
        assert_eq!(Series::binomial_power(&minus_t, &int(-1)).unwrap(), ones(4));
        // (1 - c t)^{-beta - x}, c = 1/2, beta = 2, x = 1
        let u = s(&[int(0), rat(-1, 2), int(0), int(0)]);
        let p = Series::binomial_power(&u, &int(-3)).unwrap();
        assert_eq!(p.coeff(1), rat(3, 2));
        let t = Series::variable(3);
        assert_eq!(Series::binomial_power(&t, &int(2)).unwrap(), s(&[int(1), int(2), int(1), int(0)]));
        assert!(matches!(
            Series::binomial_power(&Series::one(3), &int(2)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn binomial_power_matches_generalised_binomial_sum() {
        // (1+u)^r = sum_k (r choose k) u^k
        let u = s(&[int(0), rat(2, 3), rat(-1, 5), int(4), rat(1, 7), int(0), int(2)]);
        let r = rat(-5, 3);
        let mut expected = Series::zero(6);
        let mut upow = Series::one(6);
        for k in 0..=6 {
            expected = &expected + &upow.scale(&crate::exactnum::binomial_general(&r, k));
            upow = &upow * &u;
        }
        assert_eq!(Series::binomial_power(&u, &r).unwrap(), expected);
    }

    #[test]
    fn exp_examples() {
        let t = Series::variable(3);
        assert_eq!(Series::exp(&t).unwrap(), s(&[int(1), int(1), rat(1, 2), rat(1, 6)]));
        assert_eq!(Series::exp(&Series::zero(4)).unwrap(), Series::one(4));
        assert_eq!(Series::exp(&t.truncate(2).scale(&int(2))).unwrap(), s(&[int(1), int(2), int(2)]));
        assert!(Series::exp(&Series::one(2)).is_err());
    }

    #[test]
    fn compose_examples() {
        let geom = ones(4);
        let two_t = Series::variable(3).scale(&int(2));
        assert_eq!(Series::compose(&geom, &two_t).unwrap(), s(&[int(1), int(2), int(4), int(8)]));
        let f = s(&[int(3), rat(1, 2), int(-1), int(5)]);
        assert_eq!(Series::compose(&f, &Series::variable(3)).unwrap(), f);
        assert_eq!(Series::compose(&Series::one(3), &two_t).unwrap(), Series::one(3));
        assert!(Series::compose(&f, &Series::one(3)).is_err());
    }

    #[test]
    fn derivative_examples() {
        let e = s(&[int(1), int(1), rat(1, 2), rat(1, 6)]);
        assert_eq!(e.derivative(), s(&[int(1), int(1), rat(1, 2)]));
        assert!(Series::constant(int(7), 3).derivative().is_zero());
        assert_eq!(s(&[int(0), int(0), int(3)]).derivative(), s(&[int(0), int(6)]));
        assert_eq!(Series::constant(int(7), 0).derivative(), Series::zero(0));
    }

    #[test]
    fn partial_sum_examples() {
        let f = ones(4);
        assert_eq!(f.partial_sum(1).unwrap(), s(&[int(1), int(1), int(0), int(0)]));
        assert_eq!(f.partial_sum(3).unwrap(), f);
        assert_eq!(s(&[int(2), int(4), int(6)]).partial_sum(0).unwrap(), s(&[int(2), int(0), int(0)]));
        assert!(matches!(f.partial_sum(4), Err(Error::Domain(_))));
    }

    #[test]
    fn hypergeometric_coefficients() {
        // 1F0(1;;z) = 1/(1-z)
        assert_eq!(Series::hypergeometric(&[int(1)], &[], 4).unwrap(), ones(5));
        // terminating: 2F1(-2, 1; 1; z) = (1-z)^2
        assert_eq!(
            Series::hypergeometric(&[int(-2), int(1)], &[int(1)], 4).unwrap(),
            s(&[int(1), int(-2), int(1), int(0), int(0)])
        );
        assert!(matches!(
            Series::hypergeometric(&[int(1)], &[int(-1)], 3),
            Err(Error::Pole(_))
        ));
    }
}

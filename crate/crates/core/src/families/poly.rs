use std::ops::{Add, Sub};

use crate::exactnum::Scalar;

/// Dense polynomial in `x`, `coeffs[k]` multiplying `x^k`. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyX<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> PolyX<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// `b x + c`.
    pub fn linear(b: S, c: S) -> Self {
        Self::new(vec![c, b])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading_coeff(&self) -> S {
        self.coeffs.last().cloned().unwrap_or_else(S::zero)
    }

    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, k: &S) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].mul_add_assign(a, b);
            }
        }
        Self::new(out)
    }
}

impl<S: Scalar> Add for &PolyX<S> {
    type Output = PolyX<S>;

    fn add(self, rhs: Self) -> PolyX<S> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                let a = self.coeffs.get(k).cloned().unwrap_or_else(S::zero);
                let b = rhs.coeffs.get(k).cloned().unwrap_or_else(S::zero);
                a + b
            })
            .collect();
        PolyX::new(coeffs)
    }
}

impl<S: Scalar> Sub for &PolyX<S> {
    type Output = PolyX<S>;

    fn sub(self, rhs: Self) -> PolyX<S> {
        self + &rhs.scale(&-S::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, Rational};

    #[test]
    fn trims_and_evaluates() {
        let p: PolyX<Rational> = PolyX::new(vec![int(1), rat(-1, 2), int(0), int(0)]);
        assert_eq!(p.degree(), 1);
        assert_eq!(p.eval(&int(4)), int(-1));
        assert_eq!(p.leading_coeff(), rat(-1, 2));
        assert!(PolyX::<Rational>::new(vec![int(0)]).is_zero());
    }

    #[test]
    fn product_and_sum() {
        let a: PolyX<Rational> = PolyX::linear(int(1), int(1));
        let sq = a.mul(&a);
        assert_eq!(sq.coeffs(), &[int(1), int(2), int(1)]);
        assert!((&sq - &sq).is_zero());
        assert_eq!((&sq + &a).coeffs(), &[int(2), int(3), int(1)]);
    }
}

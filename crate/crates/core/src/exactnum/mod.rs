//! Exact scalars: arbitrary-precision rationals, Gaussian rationals, rational
//! points on the unit circle, and the Pochhammer/factorial/binomial
//! primitives every explicit formula is built from.
//!
//! Rationals are `num_rational::BigRational`, which is always kept in lowest
//! terms with a positive denominator, so exact identity checks reduce to `==`.

mod scalar;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use scalar::{int, is_natural, rat, Scalar};

/// Arbitrary-precision rational number in canonical form.
pub type Rational = num_rational::BigRational;

/// Complex number with rational real and imaginary parts.
pub type GaussianRational = Complex<Rational>;

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer<S: Scalar>(a: &S, k: usize) -> S {
    let mut acc = S::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc = acc * term.clone();
        if acc.is_zero() {
            return acc;
        }
        term = term + S::one();
    }
    acc
}

/// `n!` as an exact rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient `C(n, k)`; `k > n` is a domain error.
pub fn binomial(n: usize, k: usize) -> Result<Rational> {
    if k > n {
        return Err(Error::Domain(format!("binomial({n}, {k}) needs k <= n")));
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Ok(Rational::from_integer(acc))
}

/// Generalised binomial coefficient `(r choose k) = (-1)^k (-r)_k / k!`.
pub fn binomial_general(r: &Rational, k: usize) -> Rational {
    let sign = if k.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    sign * pochhammer(&-r.clone(), k) / factorial(k)
}

/// Integer power for any scalar, negative exponents included.
pub fn powi<S: Scalar>(base: &S, exp: i64) -> S {
    let mut acc = S::one();
    for _ in 0..exp.unsigned_abs() {
        acc = acc * base.clone();
    }
    if exp < 0 {
        S::one() / acc
    } else {
        acc
    }
}

/// Exact rational point `e^{i phi}` on the unit circle, parametrised by
/// `s = tan(phi / 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirclePoint {
    pub s: Rational,
    pub cos: Rational,
    pub sin: Rational,
}

impl CirclePoint {
    pub fn new(s: Rational) -> Self {
        let s2 = &s * &s;
        let denom = Rational::one() + &s2;
        let cos = (Rational::one() - &s2) / &denom;
        let sin = (&s + &s) / &denom;
        Self { s, cos, sin }
    }

    /// `e^{i phi}`.
    pub fn exp_i(&self) -> GaussianRational {
        Complex::new(self.cos.clone(), self.sin.clone())
    }

    /// `e^{-i phi}`.
    pub fn exp_neg_i(&self) -> GaussianRational {
        Complex::new(self.cos.clone(), -self.sin.clone())
    }
}

/// Parses `"p/q"` or `"p"`; decimals are rejected.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let err = || Error::Parse { what: "rational", input: input.to_string() };
    let trimmed = input.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Formats as `"p/q+r/s*i"`, the imaginary part always present.
pub fn format_gaussian(z: &GaussianRational) -> String {
    let sign = if z.im.is_negative() { '-' } else { '+' };
    format!("{}{}{}*i", z.re, sign, z.im.abs())
}

/// Parses `"p/q+r/s*i"`, `"r/s*i"` or a plain rational.
pub fn parse_gaussian(input: &str) -> Result<GaussianRational> {
    let err = || Error::Parse { what: "gaussian rational", input: input.to_string() };
    let trimmed = input.trim();
    let Some(body) = trimmed.strip_suffix("*i") else {
        return Ok(Complex::new(parse_rational(trimmed)?, Rational::zero()));
    };
    let split = body
        .char_indices()
        .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
        .map(|(i, _)| i)
        .next_back();
    match split {
        Some(i) => {
            let re = parse_rational(&body[..i]).map_err(|_| err())?;
            let im_text = body[i..].strip_prefix('+').unwrap_or(&body[i..]);
            let im = parse_rational(im_text).map_err(|_| err())?;
            Ok(Complex::new(re, im))
        }
        None => Ok(Complex::new(Rational::zero(), parse_rational(body).map_err(|_| err())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(5, 2), 0), int(1));
        assert_eq!(pochhammer(&int(1), 4), int(24));
        assert_eq!(pochhammer(&int(-3), 5), int(0));
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2).unwrap(), int(6));
        assert_eq!(binomial(9, 0).unwrap(), int(1));
        assert_eq!(binomial(5, 5).unwrap(), int(1));
        assert!(matches!(binomial(3, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn general_binomial_matches_integer_case() {
        for n in 0..8usize {
            for k in 0..=n {
                assert_eq!(binomial_general(&int(n as i64), k), binomial(n, k).unwrap());
            }
        }
        // (-1 choose k) = (-1)^k
        assert_eq!(binomial_general(&int(-1), 3), int(-1));
    }

    #[test]
    fn negative_integer_pochhammer() {
        // (-n)_k = (-1)^k n! / (n-k)!
        for n in 0..=12usize {
            for k in 0..=n {
                let lhs = pochhammer(&-int(n as i64), k);
                let sign = if k % 2 == 0 { int(1) } else { int(-1) };
                assert_eq!(lhs, sign * factorial(n) / factorial(n - k));
            }
        }
    }

    #[test]
    fn canonical_form() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(int(5).to_string(), "5");
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("-3/7").unwrap(), rat(-3, 7));
        assert_eq!(parse_rational("5").unwrap(), int(5));
        assert_eq!(parse_rational(" 4/6 ").unwrap(), rat(2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn gaussian_text_format() {
        let z = Complex::new(rat(1, 2), rat(-3, 4));
        assert_eq!(format_gaussian(&z), "1/2-3/4*i");
        assert_eq!(parse_gaussian("1/2-3/4*i").unwrap(), z);
        assert_eq!(parse_gaussian("-1/2+3*i").unwrap(), Complex::new(rat(-1, 2), int(3)));
        assert_eq!(parse_gaussian("2*i").unwrap(), Complex::new(int(0), int(2)));
        assert_eq!(parse_gaussian("7").unwrap(), Complex::new(int(7), int(0)));
        assert!(parse_gaussian("1/2+x*i").is_err());
    }

    #[test]
    fn circle_point_on_circle() {
        let p = CirclePoint::new(rat(1, 2));
        assert_eq!(p.cos, rat(3, 5));
        assert_eq!(p.sin, rat(4, 5));
        assert_eq!(p.exp_i() * p.exp_neg_i(), Complex::new(int(1), int(0)));
    }

    #[test]
    fn nonpositive_integer_detection() {
        assert_eq!(int(-4).nonpositive_integer(), Some(4));
        assert_eq!(int(0).nonpositive_integer(), Some(0));
        assert_eq!(int(2).nonpositive_integer(), None);
        assert_eq!(rat(-1, 2).nonpositive_integer(), None);
        assert_eq!((-3.0f64).nonpositive_integer(), Some(3));
        assert_eq!(Complex::new(int(-2), int(1)).nonpositive_integer(), None);
    }
}

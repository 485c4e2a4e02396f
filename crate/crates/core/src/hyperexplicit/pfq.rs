use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// A terminating `pFq(num; den; z)`.
///
/// With `terminate_at = None` the summation range is the smallest `m` over
/// numerator parameters equal to `-m`. An explicit `terminate_at` fixes the
/// range instead (the structural `k - n` parameter of the explicit formulas).
#[derive(Debug, Clone, PartialEq)]
pub struct HyperSpec<S> {
    pub numerator_params: Vec<S>,
    pub denominator_params: Vec<S>,
    pub argument: S,
    pub terminate_at: Option<usize>,
}

impl<S: Scalar> HyperSpec<S> {
    pub fn new(num: Vec<S>, den: Vec<S>, z: S) -> Self {
        Self { numerator_params: num, denominator_params: den, argument: z, terminate_at: None }
    }

    pub fn with_range(num: Vec<S>, den: Vec<S>, z: S, terminate_at: usize) -> Self {
        Self { numerator_params: num, denominator_params: den, argument: z, terminate_at: Some(terminate_at) }
    }

    /// Fails with `Pole` when a denominator parameter `-m` is reached, `m < range`.
    pub fn check_poles(&self) -> Result<()> {
        let range = self.range()?;
        for b in &self.denominator_params {
            if let Some(m) = b.nonpositive_integer() {
                if (m as usize) < range {
                    return Err(Error::Pole(format!(
                        "denominator parameter {} vanishes at term {} of {range}",
                        b.render(),
                        m + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Index of the last summed term.
    pub fn range(&self) -> Result<usize> {
        if let Some(r) = self.terminate_at {
            return Ok(r);
        }
        self.numerator_params
            .iter()
            .filter_map(Scalar::nonpositive_integer)
            .min()
            .map(|m| m as usize)
            .ok_or_else(|| Error::Domain("hypergeometric sum does not terminate".into()))
    }
}

/// Exact finite sum `sum_{j=0}^{R} prod (a)_j / prod (b)_j z^j / j!`.
///
/// Any denominator parameter `-m` with `m < R` is a pole, even when a
/// numerator would have stopped the sum earlier: the explicit formulas only
/// agree with their polynomial limits away from such points.
pub fn pfq_terminating<S: Scalar>(spec: &HyperSpec<S>) -> Result<S> {
    spec.check_poles()?;
    let range = spec.range()?;
    let mut sum = S::one();
    let mut term = S::one();
    for j in 0..range {
        let shift = S::from_int(j as i64);
        for a in &spec.numerator_params {
            term = term * (a.clone() + shift.clone());
        }
        if term.is_zero() {
            break;
        }
        for b in &spec.denominator_params {
            term = term / (b.clone() + shift.clone());
        }
        term = term * spec.argument.clone() / S::from_int(j as i64 + 1);
        sum = sum + term.clone();
    }
    Ok(sum)
}

/// Nonterminating `pFq` in double precision by forward term recursion.
///
/// Stops after two consecutive terms below `eps * |partial sum|`, or when a
/// numerator ends the series; at most `max_terms` terms.
pub fn pfq_f64(num: &[f64], den: &[f64], z: f64, eps: f64, max_terms: usize) -> Result<f64> {
    for b in den {
        if let Some(m) = b.nonpositive_integer() {
            let stops_first = num
                .iter()
                .filter_map(|a| a.nonpositive_integer())
                .any(|ma| ma <= m);
            if !stops_first {
                return Err(Error::Pole(format!("denominator parameter {b} is a nonpositive integer")));
            }
        }
    }
    let mut sum = 1.0;
    let mut term = 1.0;
    let mut small = 0;
    for j in 0..max_terms {
        let jf = j as f64;
        for a in num {
            term *= a + jf;
        }
        if term == 0.0 {
            return Ok(sum);
        }
        for b in den {
            term /= b + jf;
        }
        term *= z / (jf + 1.0);
        sum += term;
        if term.abs() < eps * sum.abs() {
            small += 1;
            if small >= 2 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::Domain(format!("series did not converge within {max_terms} terms")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, Rational};

    #[test]
    fn worked_values() {
        // 2F1(-1, -x; beta; z), x = 1, beta = 2, z = 1/2
        let s = HyperSpec::new(vec![int(-1), int(-1)], vec![int(2)], rat(1, 2));
        assert_eq!(pfq_terminating(&s).unwrap(), rat(5, 4));
        let s = HyperSpec::new(vec![int(-1), int(1), int(2)], vec![int(2), int(3)], int(1));
        assert_eq!(pfq_terminating(&s).unwrap(), rat(2, 3));
        let s = HyperSpec::new(vec![int(-4), rat(1, 3)], vec![rat(5, 2)], int(0));
        assert_eq!(pfq_terminating(&s).unwrap(), int(1));
    }

    #[test]
    fn chu_vandermonde() {
        // 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
        let (b, c) = (rat(2, 7), rat(11, 3));
        for n in 0..8usize {
            let s = HyperSpec::new(vec![-int(n as i64), b.clone()], vec![c.clone()], int(1));
            let expected = crate::exactnum::pochhammer(&(&c - &b), n) / crate::exactnum::pochhammer(&c, n);
            assert_eq!(pfq_terminating(&s).unwrap(), expected);
        }
    }

    #[test]
    fn pole_and_nontermination() {
        let s = HyperSpec::new(vec![int(-3)], vec![int(-1)], int(1));
        assert!(matches!(pfq_terminating(&s), Err(Error::Pole(_))));
        // denominator -3 is never reached by a sum of length 2
        let s = HyperSpec::new(vec![int(-2)], vec![int(-3)], int(1));
        assert!(pfq_terminating(&s).is_ok());
        let s = HyperSpec::new(vec![rat(1, 2)], vec![int(3)], int(1));
        assert!(matches!(pfq_terminating(&s), Err(Error::Domain(_))));
        let s: HyperSpec<Rational> = HyperSpec::with_range(vec![rat(1, 2)], vec![int(3)], int(1), 2);
        assert_eq!(pfq_terminating(&s).unwrap(), int(1) + rat(1, 6) + rat(1, 2) * rat(3, 2) / (int(3) * int(4) * int(2)));
    }

    #[test]
    fn float_series_matches_closed_form() {
        // 2F1(1, 1; 2; z) = -ln(1-z)/z
        let z = 0.5;
        let v = pfq_f64(&[1.0, 1.0], &[2.0], z, 1e-15, 100_000).unwrap();
        assert!((v - (-(1.0 - z).ln() / z)).abs() < 1e-14);
        assert!(pfq_f64(&[1.0], &[-2.0], 0.5, 1e-14, 100).is_err());
        assert_eq!(pfq_f64(&[-1.0, 3.0], &[-2.0], 0.5, 1e-14, 100).unwrap(), 1.75);
    }
}

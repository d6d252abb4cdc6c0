//! Exact polynomials in `q` with nonnegative integer coefficients.
//!
//! Houses the generating function of the sum-of-entries statistic and the
//! q-factorial analogue of the product formula. Coefficients are arbitrary
//! precision; nothing here touches floating point.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QPolyError {
    #[error("polynomial division left a nonzero remainder")]
    NonExactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("quotient has a negative coefficient at q^{0}")]
    NegativeCoefficient(usize),
}

/// A polynomial `c_0 + c_1 q + c_2 q^2 + ...` with `c_i >= 0`.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// an empty coefficient list and structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct QPolynomial {
    coeffs: Vec<BigUint>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![BigUint::one()],
        }
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigUint>,
    {
        let mut p = Self {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    /// The q-integer `[m]_q = 1 + q + ... + q^(m-1)`; `[0]_q = 0`.
    pub fn q_integer(m: usize) -> Self {
        Self {
            coeffs: vec![BigUint::one(); m],
        }
    }

    /// `[m]_q! = [1]_q [2]_q ... [m]_q`.
    pub fn q_factorial(m: usize) -> Self {
        (1..=m).fold(Self::one(), |acc, i| acc.mul(&Self::q_integer(i)))
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficient of `q^exp` (zero past the degree).
    pub fn coeff(&self, exp: usize) -> BigUint {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `amount` to the coefficient of `q^exp`.
    pub fn add_term(&mut self, exp: usize, amount: impl Into<BigUint>) {
        let amount = amount.into();
        if amount.is_zero() {
            return;
        }
        if self.coeffs.len() <= exp {
            self.coeffs.resize(exp + 1, BigUint::zero());
        }
        self.coeffs[exp] += amount;
    }

    pub fn eval_at_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Exact division. Fails if the divisor does not divide `self` or the
    /// quotient would leave the nonnegative-coefficient ring.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, QPolyError> {
        let Some(dd) = divisor.degree() else {
            return Err(QPolyError::DivisionByZero);
        };
        let Some(nd) = self.degree() else {
            return Ok(Self::zero());
        };
        if nd < dd {
            return Err(QPolyError::NonExactDivision);
        }
        let mut rem: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| BigInt::from(c.clone()))
            .collect();
        let div: Vec<BigInt> = divisor
            .coeffs
            .iter()
            .map(|c| BigInt::from(c.clone()))
            .collect();
        let lead = &div[dd];
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return Err(QPolyError::NonExactDivision);
            }
            let factor = top / lead;
            for (k, d) in div.iter().enumerate() {
                rem[shift + k] -= &factor * d;
            }
            quot[shift] = factor;
        }
        if rem.iter().any(|r| !r.is_zero()) {
            return Err(QPolyError::NonExactDivision);
        }
        let mut coeffs = Vec::with_capacity(quot.len());
        for (exp, c) in quot.into_iter().enumerate() {
            match c.into_parts() {
                (Sign::Minus, _) => return Err(QPolyError::NegativeCoefficient(exp)),
                (_, mag) => coeffs.push(mag),
            }
        }
        Ok(Self::from_coeffs(coeffs))
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl From<QPolynomial> for Vec<String> {
    fn from(p: QPolynomial) -> Self {
        p.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl TryFrom<Vec<String>> for QPolynomial {
    type Error = String;

    fn try_from(v: Vec<String>) -> Result<Self, String> {
        let coeffs = v
            .iter()
            .map(|s| {
                s.parse::<BigUint>()
                    .map_err(|e| format!("bad coefficient {s:?}: {e}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

impl fmt::Display for QPolynomial {
    /// Ascending powers, e.g. `1 + q^2 + 3q^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (exp, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coeff = if c.is_one() && exp > 0 {
                String::new()
            } else {
                c.to_string()
            };
            match exp {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{coeff}q")?,
                _ => write!(f, "{coeff}q^{exp}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[u32]) -> QPolynomial {
        QPolynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn trailing_zeros_are_dropped() {
        assert_eq!(poly(&[1, 0, 2, 0, 0]), poly(&[1, 0, 2]));
        assert_eq!(poly(&[0, 0]).degree(), None);
    }

    #[test]
    fn q_factorial_small() {
        // [3]! = (1)(1+q)(1+q+q^2) = 1 + 2q + 2q^2 + q^3
        assert_eq!(QPolynomial::q_factorial(3), poly(&[1, 2, 2, 1]));
        assert_eq!(QPolynomial::q_factorial(0), QPolynomial::one());
    }

    #[test]
    fn exact_division() {
        let a = QPolynomial::q_integer(4);
        let b = QPolynomial::q_integer(2);
        assert_eq!(a.div_exact(&b).unwrap(), poly(&[1, 0, 1]));
    }

    #[test]
    fn inexact_division_is_reported() {
        let a = QPolynomial::q_integer(3);
        let b = QPolynomial::q_integer(2);
        assert_eq!(a.div_exact(&b), Err(QPolyError::NonExactDivision));
        assert_eq!(
            a.div_exact(&QPolynomial::zero()),
            Err(QPolyError::DivisionByZero)
        );
    }

    #[test]
    fn negative_quotient_is_reported() {
        // (1 - q + q^2)(1 + q) = 1 + q^3
        let a = poly(&[1, 0, 0, 1]);
        let b = poly(&[1, 1]);
        assert_eq!(a.div_exact(&b), Err(QPolyError::NegativeCoefficient(1)));
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[1, 0, 1]).to_string(), "1 + q^2");
        assert_eq!(poly(&[0, 3, 0, 1]).to_string(), "3q + q^3");
        assert_eq!(QPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn serde_uses_decimal_strings() {
        let p = poly(&[1, 0, 2]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["1","0","2"]"#);
        assert_eq!(serde_json::from_str::<QPolynomial>(&s).unwrap(), p);
    }
}

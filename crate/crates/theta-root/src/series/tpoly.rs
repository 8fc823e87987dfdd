//! Integer polynomials in the vertex-count variable `t`.
//!
//! These are the coefficients of [`crate::TQSeries`]: the coefficient of
//! `q^k` in a refined tree series is a polynomial whose `t^d` coefficient
//! counts trees with `d` vertices.

use std::fmt;

use num_bigint::BigInt;

use super::ring::{is_unit, Ring};

/// A polynomial in `t` with arbitrary-precision integer coefficients.
///
/// `coeffs[d]` holds the coefficient of `t^d`. Trailing zeros are trimmed,
/// so the zero polynomial is the empty coefficient vector and a nonzero
/// polynomial always ends in a nonzero entry.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TPoly {
    coeffs: Vec<BigInt>,
}

impl TPoly {
    /// Builds a polynomial from raw coefficients, lowest degree first.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = TPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        TPoly::new(vec![c.into()])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        TPoly::new(vec![BigInt::from(0), BigInt::from(1)])
    }

    /// The monomial `c * t^d`.
    pub fn monomial(c: impl Into<BigInt>, d: usize) -> Self {
        let mut coeffs = vec![BigInt::from(0); d + 1];
        coeffs[d] = c.into();
        TPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^d` (zero beyond the stored degree).
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_else(<BigInt as Ring>::zero)
    }

    /// Coefficients lowest degree first, trailing zeros trimmed.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Evaluates the polynomial at `t = 1`, i.e. sums the coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `t` (shifts every degree up by one).
    pub fn mul_t(&self) -> Self {
        if self.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        TPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(<BigInt as Ring>::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Ring for TPoly {
    fn zero() -> Self {
        TPoly::zero()
    }

    fn one() -> Self {
        TPoly::constant(1)
    }

    fn is_zero(&self) -> bool {
        TPoly::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for d in 0..n {
            out.push(self.coeff(d) + rhs.coeff(d));
        }
        TPoly::new(out)
    }

    fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for d in 0..n {
            out.push(self.coeff(d) - rhs.coeff(d));
        }
        TPoly::new(out)
    }

    fn neg(&self) -> Self {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![<BigInt as Ring>::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Ring::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if Ring::is_zero(b) {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        TPoly::new(out)
    }

    fn try_recip(&self) -> Option<Self> {
        // Units of Z[t] are the constants 1 and -1, which are self-inverse.
        if self.coeffs.len() == 1 && is_unit(&self.coeffs[0]) {
            Some(self.clone())
        } else {
            None
        }
    }

    fn add_assign(&mut self, rhs: &Self) {
        if rhs.is_zero() {
            return;
        }
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize_with(rhs.coeffs.len(), <BigInt as Ring>::zero);
        }
        for (d, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[d] += c;
        }
        self.trim();
    }
}

impl fmt::Display for TPoly {
    /// Renders highest degree first, `t^6 + 6t^5 + ... + 15t` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[d];
            if Ring::is_zero(c) {
                continue;
            }
            let (sign, mag) = if c.sign() == num_bigint::Sign::Minus {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let show_coeff = mag != BigInt::from(1) || d == 0;
            match (show_coeff, d) {
                (true, 0) => write!(f, "{}", mag)?,
                (true, 1) => write!(f, "{}t", mag)?,
                (true, _) => write!(f, "{}t^{}", mag, d)?,
                (false, 1) => write!(f, "t")?,
                (false, _) => write!(f, "t^{}", d)?,
            }
        }
        Ok(())
    }
}

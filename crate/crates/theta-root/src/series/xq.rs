//! Doubly-truncated bivariate series in `x` and `q`.
//!
//! These hold the partial theta function and both sides of its product-sum
//! expansions. Storage is a dense `(x_order+1) x (q_order+1)` grid of exact
//! integers: the identities are verified once at desk scale, so simplicity
//! beats sparsity here.

use num_bigint::BigInt;
use num_traits::Zero;

use super::ring::is_unit;
use crate::Error;

/// A formal power series in `x` and `q`, exact modulo
/// `x^(x_order+1)` and `q^(q_order+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XQSeries {
    x_order: usize,
    q_order: usize,
    // row-major: coeffs[m * (q_order+1) + k] holds [x^m q^k]
    coeffs: Vec<BigInt>,
}

impl XQSeries {
    pub fn zero(x_order: usize, q_order: usize) -> Self {
        XQSeries {
            x_order,
            q_order,
            coeffs: vec![BigInt::zero(); (x_order + 1) * (q_order + 1)],
        }
    }

    pub fn one(x_order: usize, q_order: usize) -> Self {
        Self::monomial(BigInt::from(1), 0, 0, x_order, q_order)
    }

    /// The series `c * x^m q^k` (zero when the monomial exceeds the truncation).
    pub fn monomial(c: BigInt, m: usize, k: usize, x_order: usize, q_order: usize) -> Self {
        let mut s = Self::zero(x_order, q_order);
        if m <= x_order && k <= q_order {
            s.set(m, k, c);
        }
        s
    }

    pub fn x_order(&self) -> usize {
        self.x_order
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    fn idx(&self, m: usize, k: usize) -> usize {
        m * (self.q_order + 1) + k
    }

    /// Coefficient of `x^m q^k`.
    pub fn get(&self, m: usize, k: usize) -> &BigInt {
        assert!(m <= self.x_order && k <= self.q_order);
        &self.coeffs[m * (self.q_order + 1) + k]
    }

    pub fn set(&mut self, m: usize, k: usize, c: BigInt) {
        assert!(m <= self.x_order && k <= self.q_order);
        let i = self.idx(m, k);
        self.coeffs[i] = c;
    }

    /// Lifts a univariate q-series onto the `x^0` row.
    pub fn from_qseries(s: &crate::QSeries, x_order: usize) -> Self {
        let mut out = Self::zero(x_order, s.order());
        for k in 0..=s.order() {
            out.set(0, k, s.coeff(k).clone());
        }
        out
    }

    /// Both truncations shrink to the pairwise minimum.
    pub fn truncated(&self, x_order: usize, q_order: usize) -> Self {
        assert!(x_order <= self.x_order && q_order <= self.q_order);
        let mut out = Self::zero(x_order, q_order);
        for m in 0..=x_order {
            for k in 0..=q_order {
                out.set(m, k, self.get(m, k).clone());
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let xo = self.x_order.min(rhs.x_order);
        let qo = self.q_order.min(rhs.q_order);
        let mut out = Self::zero(xo, qo);
        for m in 0..=xo {
            for k in 0..=qo {
                out.set(m, k, self.get(m, k) + rhs.get(m, k));
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let xo = self.x_order.min(rhs.x_order);
        let qo = self.q_order.min(rhs.q_order);
        let mut out = Self::zero(xo, qo);
        for m in 0..=xo {
            for k in 0..=qo {
                out.set(m, k, self.get(m, k) - rhs.get(m, k));
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        XQSeries {
            x_order: self.x_order,
            q_order: self.q_order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Truncated 2-D Cauchy product at the pairwise minimum orders.
    pub fn mul(&self, rhs: &Self) -> Self {
        let xo = self.x_order.min(rhs.x_order);
        let qo = self.q_order.min(rhs.q_order);
        let mut out = Self::zero(xo, qo);
        for ma in 0..=xo {
            for ka in 0..=qo {
                let a = self.get(ma, ka);
                if Zero::is_zero(a) {
                    continue;
                }
                for mb in 0..=(xo - ma) {
                    for kb in 0..=(qo - ka) {
                        let b = rhs.get(mb, kb);
                        if Zero::is_zero(b) {
                            continue;
                        }
                        let i = out.idx(ma + mb, ka + kb);
                        out.coeffs[i] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Multiplicative inverse at the same truncation.
    ///
    /// Requires the constant coefficient to be `1` or `-1`; the recurrence
    /// runs in row-major order, which is a linear extension of the
    /// divisibility order on monomials.
    pub fn reciprocal(&self) -> Result<Self, Error> {
        let a00 = self.get(0, 0);
        if !is_unit(a00) {
            return Err(Error::NonInvertibleSeries);
        }
        let lead = a00.clone(); // (+-1)^{-1} = +-1
        let mut out = Self::zero(self.x_order, self.q_order);
        for m in 0..=self.x_order {
            for k in 0..=self.q_order {
                if m == 0 && k == 0 {
                    out.set(0, 0, lead.clone());
                    continue;
                }
                let mut acc = BigInt::zero();
                for i in 0..=m {
                    for j in 0..=k {
                        if i == 0 && j == 0 {
                            continue;
                        }
                        let a = self.get(i, j);
                        if Zero::is_zero(a) {
                            continue;
                        }
                        acc += a * out.get(m - i, k - j);
                    }
                }
                let i = out.idx(m, k);
                out.coeffs[i] = -(&lead * acc);
            }
        }
        Ok(out)
    }

    /// `self *= c * x^dx * q^dq` (coefficients sliding off the grid vanish).
    pub fn mul_monomial(&mut self, dx: usize, dq: usize, c: &BigInt) {
        for m in (0..=self.x_order).rev() {
            for k in (0..=self.q_order).rev() {
                let i = self.idx(m, k);
                self.coeffs[i] = if m >= dx && k >= dq {
                    c * self.get(m - dx, k - dq)
                } else {
                    BigInt::zero()
                };
            }
        }
    }

    /// In-place exact division by `1 - c * x^dx * q^dq` with `dx + dq >= 1`:
    /// `b = a / (1 - c x^dx q^dq)` satisfies `b[m,k] = a[m,k] + c b[m-dx,k-dq]`.
    pub fn div_one_minus_monomial(&mut self, dx: usize, dq: usize, c: &BigInt) {
        assert!(dx + dq >= 1);
        for m in 0..=self.x_order {
            for k in 0..=self.q_order {
                if m >= dx && k >= dq {
                    let prev = c * self.get(m - dx, k - dq);
                    let i = self.idx(m, k);
                    self.coeffs[i] += prev;
                }
            }
        }
    }

    /// Finite product `(t0; q)_n = prod_{i=0}^{n-1} (1 - t0 q^i)` at this
    /// truncation, where `t0` is itself a bivariate series.
    pub fn pochhammer(t0: &Self, n: usize) -> Self {
        let xo = t0.x_order;
        let qo = t0.q_order;
        let mut acc = Self::one(xo, qo);
        for i in 0..n {
            let mut shifted = t0.clone();
            shifted.mul_monomial(0, i, &BigInt::from(1));
            if shifted.coeffs.iter().all(Zero::is_zero) && i > 0 {
                break; // all further factors are 1 at this truncation
            }
            let factor = Self::one(xo, qo).sub(&shifted);
            acc = acc.mul(&factor);
        }
        acc
    }

    /// Infinite product `(t0; q)_inf` at this truncation; `t0` must have zero
    /// constant coefficient so that the factors eventually become `1`.
    pub fn pochhammer_infinite(t0: &Self) -> Result<Self, Error> {
        if !Zero::is_zero(t0.get(0, 0)) {
            return Err(Error::DivergentInfiniteProduct);
        }
        // Every monomial of t0 has positive total degree, so after q_order+1
        // shifts it falls off the grid.
        Ok(Self::pochhammer(t0, t0.q_order + 2))
    }

    /// Nonzero entries as `(x_degree, q_degree, coefficient)`, row-major.
    pub fn support(&self) -> Vec<(usize, usize, BigInt)> {
        let mut out = Vec::new();
        for m in 0..=self.x_order {
            for k in 0..=self.q_order {
                let c = self.get(m, k);
                if !Zero::is_zero(c) {
                    out.push((m, k, c.clone()));
                }
            }
        }
        out
    }
}

//! Exact truncated formal power series in `q`.
//!
//! A [`Series`] stores the coefficients of `q^0 .. q^order` exactly; the
//! series is understood modulo `q^(order+1)`. Binary operations return the
//! minimum of the operand orders — precision is never silently invented.
//!
//! The coefficient ring is generic: [`QSeries`] has arbitrary-precision
//! integer coefficients, [`TQSeries`] has integer polynomials in `t`. The
//! doubly-truncated bivariate series in `x` and `q` live in [`xq::XQSeries`].

pub mod json;
pub mod ring;
pub mod tpoly;
pub mod xq;

use std::fmt;

use num_bigint::BigInt;

use crate::Error;
use ring::Ring;
use tpoly::TPoly;

/// A truncated formal power series in `q` over the coefficient ring `C`.
///
/// Invariant: `coeffs.len() == order + 1`, and index `k` holds the exact
/// coefficient of `q^k`. No operation reads or writes beyond `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<C> {
    order: usize,
    coeffs: Vec<C>,
}

/// Univariate q-series with integer coefficients.
pub type QSeries = Series<BigInt>;

/// q-series whose coefficients are integer polynomials in `t`.
pub type TQSeries = Series<TPoly>;

impl<C: Ring> Series<C> {
    /// The zero series at the given truncation order.
    pub fn zero(order: usize) -> Self {
        Series {
            order,
            coeffs: vec![C::zero(); order + 1],
        }
    }

    /// The constant series `1` at the given truncation order.
    pub fn one(order: usize) -> Self {
        Self::monomial(C::one(), 0, order)
    }

    /// The series `c * q^k` (zero if `k` exceeds the order).
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from explicit coefficients; the order is `len - 1`.
    ///
    /// Panics on an empty vector: even the zero series carries a coefficient
    /// for `q^0`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least q^0");
        Series {
            order: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The exact coefficient of `q^k`. Panics beyond the truncation order,
    /// where the coefficient is unknown.
    pub fn coeff(&self, k: usize) -> &C {
        assert!(
            k <= self.order,
            "coefficient of q^{} requested from a series of order {}",
            k,
            self.order
        );
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    /// Smallest exponent with nonzero coefficient, if any.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// The same series truncated to a smaller order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order, "truncation cannot raise the order");
        Series {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn set_coeff(&mut self, k: usize, c: C) {
        assert!(k <= self.order);
        self.coeffs[k] = c;
    }

    /// Coefficientwise sum at the minimum of the two orders.
    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut coeffs = Vec::with_capacity(order + 1);
        for k in 0..=order {
            coeffs.push(self.coeffs[k].add(&rhs.coeffs[k]));
        }
        Series { order, coeffs }
    }

    /// Coefficientwise difference at the minimum of the two orders.
    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut coeffs = Vec::with_capacity(order + 1);
        for k in 0..=order {
            coeffs.push(self.coeffs[k].sub(&rhs.coeffs[k]));
        }
        Series { order, coeffs }
    }

    pub fn neg(&self) -> Self {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(C::neg).collect(),
        }
    }

    /// Truncated Cauchy product at the minimum of the two orders.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j].add_mul_assign(a, b);
            }
        }
        Series { order, coeffs }
    }

    /// Multiplies every coefficient by the ring element `c`.
    pub fn scale(&self, c: &C) -> Self {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// `self += rhs * q^shift`, reading only the coefficients of `rhs` that
    /// land at or below the truncation order.
    pub fn add_shifted(&mut self, rhs: &Self, shift: usize) {
        for k in shift..=self.order {
            let j = k - shift;
            if j > rhs.order {
                break;
            }
            let c = rhs.coeffs[j].clone();
            if !c.is_zero() {
                self.coeffs[k].add_assign(&c);
            }
        }
    }

    /// Multiplicative inverse at the same order.
    ///
    /// The constant term must be a unit of the coefficient ring (`1` or `-1`
    /// for the rings used here), which keeps the recurrence
    /// `b_k = -a_0^{-1} * sum_{j=1}^{k} a_j b_{k-j}` in exact integer
    /// arithmetic.
    pub fn reciprocal(&self) -> Result<Self, Error> {
        let lead = self.coeffs[0]
            .try_recip()
            .ok_or(Error::NonInvertibleSeries)?;
        let mut out = vec![C::zero(); self.order + 1];
        out[0] = lead.clone();
        for k in 1..=self.order {
            let mut acc = C::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc.add_mul_assign(&self.coeffs[j], &out[k - j]);
            }
            out[k] = lead.mul(&acc).neg();
        }
        Ok(Series {
            order: self.order,
            coeffs: out,
        })
    }

    /// The finite q-Pochhammer product `(t0; q)_n = prod_{i=0}^{n-1} (1 - t0 q^i)`
    /// truncated at `order`. The empty product (`n = 0`) is `1`.
    pub fn pochhammer(t0: &Self, n: usize, order: usize) -> Self {
        assert!(
            t0.order >= order,
            "pochhammer argument must carry at least the requested order"
        );
        let mut acc = Self::one(order);
        let min_deg = t0.min_degree();
        for i in 0..n {
            // Once t0 * q^i vanishes at this truncation, so do all later
            // factors, and the product is complete.
            match min_deg {
                None => break,
                Some(d) if d + i > order => break,
                _ => {}
            }
            let mut shifted = Self::zero(order);
            shifted.add_shifted(t0, i);
            let factor = Self::one(order).sub(&shifted);
            acc = acc.mul(&factor);
        }
        acc
    }

    /// The infinite q-Pochhammer product `(t0; q)_inf` truncated at `order`.
    ///
    /// Requires `t0` to have zero constant term so that only finitely many
    /// factors differ from `1` below the truncation order.
    pub fn pochhammer_infinite(t0: &Self, order: usize) -> Result<Self, Error> {
        if !t0.coeffs[0].is_zero() {
            return Err(Error::DivergentInfiniteProduct);
        }
        // With zero constant term the factor 1 - t0 q^i is trivial for
        // i > order, so (t0; q)_{order+1} already carries every factor.
        Ok(Self::pochhammer(t0, order + 1, order))
    }

    /// In-place exact division by `1 - q^m` (`m >= 1`).
    ///
    /// Solving `b * (1 - q^m) = a` gives `b_k = a_k + b_{k-m}`, a linear pass.
    pub(crate) fn div_one_minus_qpow(&mut self, m: usize) {
        assert!(m >= 1);
        for k in m..=self.order {
            let prev = self.coeffs[k - m].clone();
            if !prev.is_zero() {
                self.coeffs[k].add_assign(&prev);
            }
        }
    }

    /// In-place exact division by `1 - s * q^m` (`m >= 1`).
    ///
    /// Solving `b * (1 - s q^m) = a` gives the progressive recurrence
    /// `b_k = a_k + sum_j s_j b_{k-m-j}`, well-founded because `m >= 1`.
    pub(crate) fn div_one_minus_shifted(&mut self, s: &Self, m: usize) {
        assert!(m >= 1);
        for k in m..=self.order {
            let mut acc = C::zero();
            for j in 0..=(k - m).min(s.order) {
                if s.coeffs[j].is_zero() || self.coeffs[k - m - j].is_zero() {
                    continue;
                }
                acc.add_mul_assign(&s.coeffs[j], &self.coeffs[k - m - j]);
            }
            self.coeffs[k].add_assign(&acc);
        }
    }
}

impl QSeries {
    /// Convenience constructor from small integers; the order is `len - 1`.
    pub fn from_ints(cs: &[i64]) -> Self {
        Series::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Lifts the series into the polynomial-coefficient ring, where each
    /// integer becomes a constant polynomial in `t`.
    pub fn lift_to_tq(&self) -> TQSeries {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| TPoly::constant(c.clone())).collect(),
        }
    }
}

impl TQSeries {
    /// The series whose only term is the polynomial `t` at `q^0`.
    pub fn t(order: usize) -> Self {
        Series::monomial(TPoly::t(), 0, order)
    }

    /// Substitutes `t = 1` in every coefficient polynomial.
    ///
    /// Evaluation is total: every polynomial sums to an integer, so the
    /// result is an ordinary [`QSeries`] of the same order.
    pub fn eval_t_one(&self) -> QSeries {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(TPoly::eval_one).collect(),
        }
    }

    /// Multiplies the whole series by `t`.
    pub fn mul_t(&self) -> Self {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(TPoly::mul_t).collect(),
        }
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_takes_min_order_and_sums() {
        // (1+q zero-padded to order 3) + (q+q^2 at order 3) = 1+2q+q^2
        let a = QSeries::from_ints(&[1, 1, 0, 0]);
        let b = QSeries::from_ints(&[0, 1, 1, 0]);
        assert_eq!(a.add(&b), QSeries::from_ints(&[1, 2, 1, 0]));
    }

    #[test]
    fn add_zero_truncates_to_min_order() {
        let a = QSeries::from_ints(&[3, 1, 4, 1, 5]);
        let z = QSeries::zero(2);
        assert_eq!(a.add(&z), a.truncated(2));
    }

    #[test]
    fn add_inverse_gives_zero() {
        let a = QSeries::from_ints(&[1, 1]);
        assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = QSeries::from_ints(&[1, 1, 0]);
        let b = QSeries::from_ints(&[1, -1, 0]);
        assert_eq!(a.mul(&b), QSeries::from_ints(&[1, 0, -1]));
    }

    #[test]
    fn mul_by_one_is_identity() {
        let a = QSeries::from_ints(&[2, -3, 5, 7]);
        assert_eq!(a.mul(&QSeries::one(3)), a);
    }

    #[test]
    fn mul_geometric_telescopes_to_one() {
        // (1+q+q^2+...)(1-q) = 1, checked against a naive convolution oracle.
        let order = 10;
        let geo = QSeries::from_coeffs(vec![BigInt::from(1); order + 1]);
        let one_minus_q = {
            let mut s = QSeries::zero(order);
            s.set_coeff(0, BigInt::from(1));
            s.set_coeff(1, BigInt::from(-1));
            s
        };
        let product = geo.mul(&one_minus_q);

        // independent oracle: direct convolution
        let mut oracle = vec![BigInt::from(0); order + 1];
        for k in 0..=order {
            for i in 0..=k {
                oracle[k] += geo.coeff(i) * one_minus_q.coeff(k - i);
            }
        }
        assert_eq!(product.coeffs(), &oracle[..]);
        assert_eq!(product, QSeries::one(order));
    }

    #[test]
    fn reciprocal_of_one_minus_q_is_geometric() {
        let s = QSeries::from_ints(&[1, -1, 0, 0, 0]);
        assert_eq!(s.reciprocal().unwrap(), QSeries::from_ints(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn reciprocal_of_one_is_one() {
        let one = QSeries::one(6);
        assert_eq!(one.reciprocal().unwrap(), one);
    }

    #[test]
    fn reciprocal_counts_partitions_into_parts_one_and_two() {
        // 1 / ((1-q)(1-q^2)) counts partitions with parts in {1, 2};
        // oracle: brute-force count for each n.
        let order = 5;
        let a = QSeries::from_ints(&[1, -1, 0, 0, 0, 0]);
        let b = QSeries::from_ints(&[1, 0, -1, 0, 0, 0]);
        let recip = a.mul(&b).reciprocal().unwrap();

        let brute = |n: usize| -> i64 {
            // number of (i, j) with i*1 + j*2 = n
            (0..=n / 2).filter(|j| n >= 2 * j).count() as i64
        };
        let expected: Vec<i64> = (0..=order).map(brute).collect();
        assert_eq!(recip, QSeries::from_ints(&expected));
        assert_eq!(recip, QSeries::from_ints(&[1, 1, 2, 2, 3, 3]));
    }

    #[test]
    fn reciprocal_requires_unit_constant_term() {
        let s = QSeries::from_ints(&[2, 1]);
        assert!(matches!(s.reciprocal(), Err(Error::NonInvertibleSeries)));
        let z = QSeries::from_ints(&[0, 1]);
        assert!(matches!(z.reciprocal(), Err(Error::NonInvertibleSeries)));
    }

    #[test]
    fn reciprocal_is_two_sided_inverse() {
        let s = QSeries::from_ints(&[1, 3, -2, 5, 0, -7]);
        let r = s.reciprocal().unwrap();
        assert_eq!(s.mul(&r), QSeries::one(5));
        assert_eq!(r.mul(&s), QSeries::one(5));
    }

    #[test]
    fn pochhammer_two_factors() {
        // (q; q)_2 = (1-q)(1-q^2) = 1 - q - q^2 + q^3
        let q = QSeries::monomial(BigInt::from(1), 1, 4);
        let p = QSeries::pochhammer(&q, 2, 4);
        assert_eq!(p, QSeries::from_ints(&[1, -1, -1, 1, 0]));
    }

    #[test]
    fn pochhammer_empty_product_is_one() {
        let t0 = QSeries::from_ints(&[5, 3, 2]);
        assert_eq!(QSeries::pochhammer(&t0, 0, 2), QSeries::one(2));
    }

    #[test]
    fn pochhammer_three_factors_oracle() {
        // (1-q)(1-q^2)(1-q^3) expanded by an independent naive product.
        let order = 6;
        let q = QSeries::monomial(BigInt::from(1), 1, order);
        let p = QSeries::pochhammer(&q, 3, order);

        let mut oracle = vec![0i64; order + 1];
        oracle[0] = 1;
        for m in 1..=3usize {
            let prev = oracle.clone();
            for k in 0..=order {
                let sub = if k >= m { prev[k - m] } else { 0 };
                oracle[k] = prev[k] - sub;
            }
        }
        assert_eq!(p, QSeries::from_ints(&oracle));
        assert_eq!(p, QSeries::from_ints(&[1, -1, -1, 0, 1, 1, -1]));
    }

    #[test]
    fn pochhammer_infinite_euler_function() {
        // (q; q)_inf to order 5: pentagonal-number pattern 1 - q - q^2 + q^5,
        // cross-checked against multiplying every relevant factor directly.
        let order = 5;
        let q = QSeries::monomial(BigInt::from(1), 1, order);
        let euler = QSeries::pochhammer_infinite(&q, order).unwrap();

        let mut oracle = QSeries::one(order);
        for i in 1..=order {
            let factor = {
                let mut f = QSeries::one(order);
                let m = QSeries::monomial(BigInt::from(-1), i, order);
                f = f.add(&m);
                f
            };
            oracle = oracle.mul(&factor);
        }
        assert_eq!(euler, oracle);
        assert_eq!(euler, QSeries::from_ints(&[1, -1, -1, 0, 0, 1]));
    }

    #[test]
    fn pochhammer_infinite_of_zero_is_one() {
        let z = QSeries::zero(4);
        assert_eq!(QSeries::pochhammer_infinite(&z, 4).unwrap(), QSeries::one(4));
    }

    #[test]
    fn pochhammer_infinite_single_surviving_factor() {
        let q = QSeries::monomial(BigInt::from(1), 1, 1);
        assert_eq!(
            QSeries::pochhammer_infinite(&q, 1).unwrap(),
            QSeries::from_ints(&[1, -1])
        );
    }

    #[test]
    fn pochhammer_infinite_rejects_nonzero_constant_term() {
        let s = QSeries::from_ints(&[1, 1]);
        assert!(matches!(
            QSeries::pochhammer_infinite(&s, 1),
            Err(Error::DivergentInfiniteProduct)
        ));
    }

    #[test]
    fn division_kernels_invert_multiplication() {
        // dividing by (1 - q^2) and by (1 - s q) undoes the corresponding products
        let s = QSeries::from_ints(&[1, 2, 0, -1, 3, 0, 0, 1, 0, 0, 2, 0, 1]);
        let order = s.order();

        let mut one_minus_q2 = QSeries::one(order);
        one_minus_q2.set_coeff(2, BigInt::from(-1));
        let mut a = s.clone();
        a.div_one_minus_qpow(2);
        assert_eq!(a.mul(&one_minus_q2), s);

        let u = QSeries::from_ints(&[1, 1, 2, 4, 9, 21, 52, 133, 351, 948, 0, 0, 0]);
        let mut one_minus_uq = QSeries::zero(order);
        one_minus_uq.add_shifted(&u, 1);
        one_minus_uq = QSeries::one(order).sub(&one_minus_uq);
        let mut b = s.clone();
        b.div_one_minus_shifted(&u, 1);
        assert_eq!(b.mul(&one_minus_uq), s);
    }

    #[test]
    fn lift_and_eval_t_one_round_trip() {
        let s = QSeries::from_ints(&[1, 1, 2, 4]);
        assert_eq!(s.lift_to_tq().eval_t_one(), s);
    }

    #[test]
    fn tq_mul_t_shifts_degrees() {
        let t = TQSeries::t(3);
        let t2 = t.mul_t();
        assert_eq!(*t2.coeff(0), tpoly::TPoly::monomial(1, 2));
    }

    #[test]
    #[should_panic(expected = "coefficient of q^4")]
    fn coeff_beyond_order_panics() {
        let s = QSeries::from_ints(&[1, 2]);
        let _ = s.coeff(4);
    }
}

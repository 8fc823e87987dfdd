//! The leading root of the partial theta function and its refinements.
//!
//! The partial theta function `Theta_0(x, q) = sum_n x^n q^(n(n-1)/2)` has a
//! unique formal-power-series root `x = -xi(q)` with `xi(0) = 1`. This
//! module computes `xi(q)` three independent ways:
//!
//! 1. [`xi_via_theta`] solves `Theta_0(-xi, q) = 0` coefficient by
//!    coefficient. The `x^1` term of `Theta_0` makes each new coefficient
//!    appear linearly with coefficient `-1`, so the system is triangular
//!    with unit pivots and stays in integer arithmetic.
//! 2. [`xi_fix1`] iterates `xi <- F(xi)` where `F` is the generating
//!    function of stack polyominoes counted by rise and area (plus the
//!    empty polyomino): `F(a) = 1 + sum_{n>=1} q^n / ((q;q)_n (aq;q)_{n-1})`.
//! 3. [`xi_fix2`] iterates `xi <- F~(xi)` where `F~` is the generating
//!    function of Ferrers diagrams whose n-th largest row has length n for
//!    some n, counted by width and area (plus the empty diagram):
//!    `F~(a) = 1 + sum_{n>=1} a^n q^(n^2) / ((q;q)_n (aq;q)_{n-1})`.
//!
//! Both species maps also run over polynomial coefficients, which yields the
//! vertex-count refinements [`a_refined`] (`A = t F(A)`), [`atilde_refined`]
//! (`A~ = t F~(A~)`) and the level-mixed [`a_sigma`].
//!
//! Truncation bounds are exact, never heuristic: in the `F` sum each term
//! carries `q^n`, so the sum stops at `n = order`; in the `F~` sum each term
//! carries `q^(n^2)`, so it stops at `n = floor(sqrt(order))`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;

use crate::series::ring::Ring;
use crate::series::xq::XQSeries;
use crate::series::{QSeries, Series, TQSeries};
use crate::Error;

/// The partial theta function truncated to the requested orders: the
/// coefficient of `x^n q^k` is 1 exactly when `k = n(n-1)/2`.
pub fn theta0(x_order: usize, q_order: usize) -> XQSeries {
    let mut out = XQSeries::zero(x_order, q_order);
    for n in 0..=x_order {
        let k = n * (n.saturating_sub(1)) / 2;
        if k <= q_order {
            out.set(n, k, <BigInt as Ring>::one());
        }
    }
    out
}

/// Evaluates `Theta_0(x(q), q)` for a series argument, truncated at `order`.
///
/// Only the theta terms with `n(n-1)/2 <= order` contribute.
pub fn theta0_eval(x: &QSeries, order: usize) -> QSeries {
    assert!(x.order() >= order);
    let x = x.truncated(order);
    let mut sum = QSeries::one(order); // n = 0
    let mut xpow = QSeries::one(order);
    let mut n = 1usize;
    loop {
        let b = n * (n - 1) / 2;
        if b > order {
            break;
        }
        xpow = xpow.mul(&x);
        sum.add_shifted(&xpow, b);
        n += 1;
    }
    sum
}

/// Largest `n` with `n(n-1)/2 <= order`.
fn theta_term_bound(order: usize) -> usize {
    let mut n = 1usize;
    while (n + 1) * n / 2 <= order {
        n += 1;
    }
    n
}

/// The unique series `xi` with `xi(0) = 1` and
/// `Theta_0(-xi(q), q) = 0 mod q^(order+1)`.
///
/// Writing the root equation as `xi = 1 + sum_{n>=2} (-1)^n q^(n(n-1)/2) xi^n`,
/// the coefficient of `q^k` on the right uses only coefficients of `xi`
/// below `q^k` (every term carries at least `q^1`), so the solve is a single
/// forward pass. Powers of `xi` are grown degree by degree alongside it.
pub fn xi_via_theta(order: usize) -> QSeries {
    let nmax = theta_term_bound(order);
    // c[k] = [q^k] xi, extended as we solve
    let mut c: Vec<BigInt> = vec![<BigInt as Ring>::one()];
    // pows[i][k] = [q^k] xi^(i+2) for i+2 = 2..=nmax
    let mut pows: Vec<Vec<BigInt>> = vec![vec![<BigInt as Ring>::one()]; nmax.saturating_sub(1)];

    for k in 1..=order {
        let mut ck = <BigInt as Ring>::zero();
        for n in 2..=nmax {
            let b = n * (n - 1) / 2;
            if b > k {
                break;
            }
            let v = &pows[n - 2][k - b];
            if n % 2 == 0 {
                ck += v;
            } else {
                ck -= v;
            }
        }
        c.push(ck);

        // extend xi^n to degree k: [q^k] xi^n = sum_j c_j [q^(k-j)] xi^(n-1)
        for i in 0..pows.len() {
            let (lower, rest) = pows.split_at_mut(i);
            let prev: &[BigInt] = if i == 0 { &c } else { &lower[i - 1] };
            let mut v = <BigInt as Ring>::zero();
            for (j, cj) in c.iter().enumerate().take(k + 1) {
                if cj.is_zero() {
                    continue;
                }
                let w = &prev[k - j];
                if !w.is_zero() {
                    v += cj * w;
                }
            }
            rest[0].push(v);
        }
    }
    QSeries::from_coeffs(c)
}

/// Applies the stack-polyomino species map
/// `F(a) = 1 + sum_{n=1}^{order} q^n / ((q;q)_n (aq;q)_{n-1})`
/// over any coefficient ring, truncated at `order`.
///
/// The running reciprocal is maintained incrementally: step `n` divides by
/// `(1 - q^n)` and `(1 - a q^(n-1))`, each a linear-pass exact division.
pub fn stack_species_gf<C: Ring>(a: &Series<C>, order: usize) -> Series<C> {
    assert!(a.order() >= order, "argument must carry the working order");
    let a = a.truncated(order);
    let mut sum = Series::one(order);
    let mut inv = Series::one(order);
    for n in 1..=order {
        inv.div_one_minus_qpow(n);
        if n >= 2 {
            inv.div_one_minus_shifted(&a, n - 1);
        }
        sum.add_shifted(&inv, n);
    }
    sum
}

/// Applies the constrained-Ferrers species map
/// `F~(a) = 1 + sum_{n=1}^{floor(sqrt(order))} a^n q^(n^2) / ((q;q)_n (aq;q)_{n-1})`
/// over any coefficient ring, truncated at `order`.
pub fn ferrers_species_gf<C: Ring>(a: &Series<C>, order: usize) -> Series<C> {
    assert!(a.order() >= order, "argument must carry the working order");
    let a = a.truncated(order);
    let mut sum = Series::one(order);
    let mut inv = Series::one(order);
    let mut a_pow = Series::one(order);
    for n in 1..=order.sqrt() {
        a_pow = a_pow.mul(&a);
        inv.div_one_minus_qpow(n);
        if n >= 2 {
            inv.div_one_minus_shifted(&a, n - 1);
        }
        let term = a_pow.mul(&inv);
        sum.add_shifted(&term, n * n);
    }
    sum
}

/// `F` applied to a polynomial-coefficient series (see [`stack_species_gf`]).
pub fn f_eval(a: &TQSeries, order: usize) -> TQSeries {
    stack_species_gf(a, order)
}

/// `F~` applied to a polynomial-coefficient series (see [`ferrers_species_gf`]).
pub fn ftilde_eval(a: &TQSeries, order: usize) -> TQSeries {
    ferrers_species_gf(a, order)
}

/// `F` on plain q-series (the `t = 1` shadow of [`f_eval`]).
pub fn f_eval_q(a: &QSeries, order: usize) -> QSeries {
    stack_species_gf(a, order)
}

/// `F~` on plain q-series (the `t = 1` shadow of [`ftilde_eval`]).
pub fn ftilde_eval_q(a: &QSeries, order: usize) -> QSeries {
    ferrers_species_gf(a, order)
}

/// Iterates `map` from `start` until two successive iterates agree at the
/// working order. Every map used here fixes at least one further
/// q-coefficient per application, so `order + 2` applications suffice; the
/// cap turns that argument into a runtime guard.
fn fixed_point<C: Ring>(
    start: Series<C>,
    order: usize,
    map: impl Fn(&Series<C>) -> Series<C>,
    what: &str,
) -> Series<C> {
    let mut cur = start;
    for _ in 0..order + 2 {
        let next = map(&cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
    panic!("{what}: fixed-point iteration failed to stabilize within {} steps", order + 2);
}

/// `xi(q)` as the fixed point of the stack-polyomino map `F`, iterated from
/// the constant series 1.
pub fn xi_fix1(order: usize) -> QSeries {
    fixed_point(
        QSeries::one(order),
        order,
        |x| stack_species_gf(x, order),
        "xi_fix1",
    )
}

/// `xi(q)` as the fixed point of the constrained-Ferrers map `F~`, iterated
/// from the constant series 1.
pub fn xi_fix2(order: usize) -> QSeries {
    fixed_point(
        QSeries::one(order),
        order,
        |x| ferrers_species_gf(x, order),
        "xi_fix2",
    )
}

/// The vertex-count refinement `A(t, q)`: the unique solution of
/// `A = t * F(A)` with `A = t mod q`, by fixed-point iteration from `A = t`.
///
/// The coefficient of `t^d q^a` counts stack-enriched rooted trees with `d`
/// vertices and total decoration area `a`.
pub fn a_refined(order: usize) -> TQSeries {
    fixed_point(
        TQSeries::t(order),
        order,
        |a| f_eval(a, order).mul_t(),
        "a_refined",
    )
}

/// The vertex-count refinement `A~(t, q)`: the unique solution of
/// `A~ = t * F~(A~)` with `A~ = t mod q`.
pub fn atilde_refined(order: usize) -> TQSeries {
    fixed_point(
        TQSeries::t(order),
        order,
        |a| ftilde_eval(a, order).mul_t(),
        "atilde_refined",
    )
}

/// Which decoration species a tree level carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Species {
    /// Stack polyominoes, sized by rise. Letter `0`.
    Stack,
    /// Ferrers diagrams whose n-th largest row has length n, sized by width.
    /// Letter `1`.
    Ferrers,
}

/// A finite word over `{0, 1}` assigning a species to each tree level:
/// letter `i` governs level `i` (the root is level 0), `0` meaning stack
/// polyominoes and `1` meaning constrained Ferrers diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaWord {
    letters: Vec<Species>,
}

impl SigmaWord {
    pub fn new(letters: Vec<Species>) -> Self {
        SigmaWord { letters }
    }

    /// Parses a word of `'0'` and `'1'` characters.
    pub fn parse(text: &str) -> Result<Self, Error> {
        if text.is_empty() {
            return Err(Error::EmptySigmaWord);
        }
        text.chars()
            .map(|ch| match ch {
                '0' => Ok(Species::Stack),
                '1' => Ok(Species::Ferrers),
                other => Err(Error::InvalidSeriesJson(format!(
                    "sigma word letter must be 0 or 1, found {:?}",
                    other
                ))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SigmaWord::new)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Species] {
        &self.letters
    }

    /// Species at a given level, extending the word periodically by its
    /// last letter — the reading under which a short word denotes the
    /// infinite family `(s_0, ..., s_k, s_k, s_k, ...)`.
    pub fn species_at(&self, level: usize) -> Species {
        assert!(!self.letters.is_empty(), "empty sigma word has no species");
        *self
            .letters
            .get(level)
            .unwrap_or_else(|| self.letters.last().unwrap())
    }

    /// The word extended by its last letter to at least `len` letters.
    pub fn extended_to(&self, len: usize) -> SigmaWord {
        assert!(!self.letters.is_empty(), "empty sigma word cannot be extended");
        let mut letters = self.letters.clone();
        while letters.len() < len {
            letters.push(*letters.last().unwrap());
        }
        SigmaWord { letters }
    }
}

impl fmt::Display for SigmaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.letters {
            write!(f, "{}", if *s == Species::Stack { '0' } else { '1' })?;
        }
        Ok(())
    }
}

/// The level-mixed refinement
/// `A_sigma(t, q) = t F^(s_0)(t F^(s_1)(... t F^(s_N)(0) ...))`
/// for a finite word `sigma = (s_0, ..., s_N)`, truncated at `order`.
///
/// The composition is evaluated innermost first with the zero series as the
/// innermost argument; all maps preserve the working order. The coefficient
/// of `t^d q^a` counts trees of height at most `N` with species `s_i` at
/// level `i`, `d` vertices, and total area `a`.
pub fn a_sigma(sigma: &SigmaWord, order: usize) -> Result<TQSeries, Error> {
    if sigma.is_empty() {
        return Err(Error::EmptySigmaWord);
    }
    let mut cur = TQSeries::zero(order);
    for &letter in sigma.letters().iter().rev() {
        cur = match letter {
            Species::Stack => f_eval(&cur, order),
            Species::Ferrers => ftilde_eval(&cur, order),
        }
        .mul_t();
    }
    Ok(cur)
}

/// [`a_sigma`] for the word extended by its last letter to cover every level
/// reachable at the working order (length `order + 1`), so that a short
/// word denotes its infinite periodic extension.
pub fn a_sigma_extended(sigma: &SigmaWord, order: usize) -> Result<TQSeries, Error> {
    if sigma.is_empty() {
        return Err(Error::EmptySigmaWord);
    }
    a_sigma(&sigma.extended_to(order + 1), order)
}

/// Iterates the Ferrers species map `n` times from the constant series 1:
/// returns `F~^n(1)` at `t = 1`, truncated at `order`.
///
/// Each application fixes at least one further q-coefficient, so the
/// iteration stabilizes to `xi(q)` once `n` exceeds the order. Starting at
/// 1 instead of 0 shifts the iteration index: `F~^n(1) = F~^(n+1)(0)`.
pub fn iterate_ferrers_map(n: usize, order: usize) -> QSeries {
    let mut cur = QSeries::one(order);
    for _ in 0..n {
        cur = ferrers_species_gf(&cur, order);
    }
    cur
}

/// Both sides of the first product-sum expansion of the partial theta
/// function:
/// `Theta_0(x, q) = (q;q)_inf (-x;q)_inf sum_{n>=0} q^n / ((q;q)_n (-x;q)_n)`.
///
/// Each summand carries `q^n`, so the sum is truncated at `n = q_order`.
pub fn identity_first_sides(x_order: usize, q_order: usize) -> (XQSeries, XQSeries) {
    let lhs = theta0(x_order, q_order);

    let q_mono = QSeries::monomial(<BigInt as Ring>::one(), 1, q_order);
    let euler = QSeries::pochhammer_infinite(&q_mono, q_order)
        .expect("q has zero constant term");
    let euler_x = XQSeries::from_qseries(&euler, x_order);

    let neg_x = XQSeries::monomial(BigInt::from(-1), 1, 0, x_order, q_order);
    let negx_inf = XQSeries::pochhammer_infinite(&neg_x).expect("-x has zero constant term");

    let mut sum = XQSeries::zero(x_order, q_order);
    let mut inv = XQSeries::one(x_order, q_order); // 1 / ((q;q)_n (-x;q)_n)
    for n in 0..=q_order {
        if n >= 1 {
            inv.div_one_minus_monomial(0, n, &<BigInt as Ring>::one()); // 1/(1 - q^n)
            inv.div_one_minus_monomial(1, n - 1, &BigInt::from(-1)); // 1/(1 + x q^(n-1))
        }
        let mut term = inv.clone();
        term.mul_monomial(0, n, &<BigInt as Ring>::one());
        sum = sum.add(&term);
    }

    let rhs = euler_x.mul(&negx_inf).mul(&sum);
    (lhs, rhs)
}

/// Checks the first product-sum expansion coefficientwise at the given
/// truncation. `false` is a meaningful result, not an error.
pub fn verify_identity_first(x_order: usize, q_order: usize) -> bool {
    let (lhs, rhs) = identity_first_sides(x_order, q_order);
    lhs == rhs
}

/// Both sides of the second product-sum expansion:
/// `Theta_0(x, q) = (-x;q)_inf sum_{n>=0} q^(n^2) (-x)^n / ((q;q)_n (-x;q)_n)`.
///
/// Each summand carries `q^(n^2)` and `x^n`, so the sum stops at
/// `n = min(floor(sqrt(q_order)), x_order)`.
pub fn identity_second_sides(x_order: usize, q_order: usize) -> (XQSeries, XQSeries) {
    let lhs = theta0(x_order, q_order);

    let neg_x = XQSeries::monomial(BigInt::from(-1), 1, 0, x_order, q_order);
    let negx_inf = XQSeries::pochhammer_infinite(&neg_x).expect("-x has zero constant term");

    let mut sum = XQSeries::zero(x_order, q_order);
    let mut inv = XQSeries::one(x_order, q_order);
    let nmax = q_order.sqrt().min(x_order);
    for n in 0..=nmax {
        if n >= 1 {
            inv.div_one_minus_monomial(0, n, &<BigInt as Ring>::one());
            inv.div_one_minus_monomial(1, n - 1, &BigInt::from(-1));
        }
        let sign = if n % 2 == 0 { <BigInt as Ring>::one() } else { BigInt::from(-1) };
        let mut term = inv.clone();
        term.mul_monomial(n, n * n, &sign);
        sum = sum.add(&term);
    }

    let rhs = negx_inf.mul(&sum);
    (lhs, rhs)
}

/// Checks the second product-sum expansion coefficientwise at the given
/// truncation.
pub fn verify_identity_second(x_order: usize, q_order: usize) -> bool {
    let (lhs, rhs) = identity_second_sides(x_order, q_order);
    lhs == rhs
}

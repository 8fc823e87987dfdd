//! Exhaustive enumeration of stack polyominoes and Ferrers diagrams, plus
//! their closed-form generating functions — each the ground truth for the
//! other.
//!
//! A stack polyomino is a unimodal sequence of positive column heights
//! `h_1 <= ... <= h_j < h_{j+1} >= h_{j+2} >= ... >= h_m`; `j` is the rise,
//! `m` the width, `max h_i` the height, `sum h_i` the area. A Ferrers
//! diagram is a weakly decreasing sequence of positive row lengths; its
//! Durfee side is the largest `n` with `m_n >= n`.
//!
//! Enumerators generate each object exactly once by recursive descent;
//! generating functions are expanded by exact monomial division on dense
//! coefficient grids. The two routes are compared coefficient by
//! coefficient in the tests and in the verification suite.

use std::collections::BTreeMap;

use num_integer::Roots;

use crate::Error;

/// Count table for stacks keyed by `(area, width, height, rise)`.
pub type StackTable = BTreeMap<(usize, usize, usize, usize), u64>;

/// Count table for Ferrers diagrams keyed by `(area, width, height)`.
pub type FerrersTable = BTreeMap<(usize, usize, usize), u64>;

/// A stack polyomino: positive column heights, left to right, unimodal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StackPolyomino {
    heights: Vec<u32>,
}

impl StackPolyomino {
    /// Validates unimodality: some `j >= 0` must satisfy
    /// `h_1 <= ... <= h_j < h_{j+1} >= ... >= h_m`. Equivalently, the
    /// sequence weakly rises to the first maximum and weakly falls after it.
    pub fn new(heights: Vec<u32>) -> Result<Self, Error> {
        if heights.is_empty() || heights.iter().any(|&h| h == 0) {
            return Err(Error::InvalidStackHeights);
        }
        let max = *heights.iter().max().unwrap();
        let peak = heights.iter().position(|&h| h == max).unwrap();
        let rising_ok = heights[..peak].windows(2).all(|w| w[0] <= w[1]);
        let falling_ok = heights[peak..].windows(2).all(|w| w[0] >= w[1]);
        if rising_ok && falling_ok {
            Ok(StackPolyomino { heights })
        } else {
            Err(Error::InvalidStackHeights)
        }
    }

    fn from_valid(heights: Vec<u32>) -> Self {
        debug_assert!(StackPolyomino::new(heights.clone()).is_ok());
        StackPolyomino { heights }
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    /// Number of columns.
    pub fn width(&self) -> usize {
        self.heights.len()
    }

    /// Tallest column.
    pub fn height(&self) -> usize {
        *self.heights.iter().max().unwrap() as usize
    }

    /// Total number of cells.
    pub fn area(&self) -> usize {
        self.heights.iter().map(|&h| h as usize).sum()
    }

    /// Number of columns strictly before the first maximal column.
    pub fn rise(&self) -> usize {
        let max = *self.heights.iter().max().unwrap();
        self.heights.iter().position(|&h| h == max).unwrap()
    }

    /// All `j` satisfying the unimodality pattern directly; the definition
    /// makes this a singleton equal to [`rise`](Self::rise), which the
    /// invariant tests recompute both ways.
    pub fn rise_candidates(&self) -> Vec<usize> {
        let h = &self.heights;
        (0..h.len())
            .filter(|&j| {
                let rising = h[..j].windows(2).all(|w| w[0] <= w[1]);
                let strict = j == 0 || h[j - 1] < h[j];
                let falling = h[j..].windows(2).all(|w| w[0] >= w[1]);
                rising && strict && falling
            })
            .collect()
    }

    /// Appends one cell to the right end of the bottom row: a new height-1
    /// column. Area grows by one; the first maximal column, and so the
    /// rise, is unchanged.
    pub fn widen_bottom_row(&self) -> StackPolyomino {
        let mut heights = self.heights.clone();
        heights.push(1);
        StackPolyomino::from_valid(heights)
    }
}

/// A Ferrers diagram: positive row lengths, weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FerrersDiagram {
    rows: Vec<u32>,
}

impl FerrersDiagram {
    pub fn new(rows: Vec<u32>) -> Result<Self, Error> {
        if rows.is_empty()
            || rows.iter().any(|&r| r == 0)
            || rows.windows(2).any(|w| w[0] < w[1])
        {
            return Err(Error::InvalidFerrersRows);
        }
        Ok(FerrersDiagram { rows })
    }

    fn from_valid(rows: Vec<u32>) -> Self {
        debug_assert!(FerrersDiagram::new(rows.clone()).is_ok());
        FerrersDiagram { rows }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Longest row.
    pub fn width(&self) -> usize {
        self.rows[0] as usize
    }

    /// Number of rows.
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn area(&self) -> usize {
        self.rows.iter().map(|&r| r as usize).sum()
    }

    /// Side of the Durfee square: the largest `n` with `m_n >= n`.
    pub fn durfee_side(&self) -> usize {
        let mut n = 0;
        while n < self.rows.len() && self.rows[n] as usize >= n + 1 {
            n += 1;
        }
        n
    }

    /// Whether the `n`-th largest row has length exactly `n` for some `n` —
    /// equivalently, the cell just right of the top row of the Durfee
    /// square is absent, i.e. `m_d = d` at the Durfee side `d`.
    pub fn satisfies_durfee_condition(&self) -> bool {
        let d = self.durfee_side();
        self.rows[d - 1] as usize == d
    }
}

/// Calls `f` once for every stack polyomino with area at most `max_area`.
///
/// Generation follows the unique decomposition of a unimodal sequence into
/// a weakly increasing prefix (every entry below the peak), the first
/// maximal column, and a weakly decreasing tail, so nothing is produced
/// twice.
pub fn for_each_stack(max_area: usize, mut f: impl FnMut(&StackPolyomino)) {
    let mut heights: Vec<u32> = Vec::new();
    descend_prefix(&mut heights, max_area, &mut f);
}

fn descend_prefix(heights: &mut Vec<u32>, budget: usize, f: &mut impl FnMut(&StackPolyomino)) {
    let last = heights.last().map_or(0, |&h| h as usize);
    // place the peak: strictly taller than the prefix
    for p in (last + 1)..=budget {
        heights.push(p as u32);
        descend_tail(heights, budget - p, f);
        heights.pop();
    }
    // or grow the prefix; a peak of at least h+1 must still fit
    for h in last.max(1)..=budget {
        if 2 * h + 1 > budget {
            break;
        }
        heights.push(h as u32);
        descend_prefix(heights, budget - h, f);
        heights.pop();
    }
}

fn descend_tail(heights: &mut Vec<u32>, budget: usize, f: &mut impl FnMut(&StackPolyomino)) {
    f(&StackPolyomino::from_valid(heights.clone()));
    let last = *heights.last().unwrap() as usize;
    for h in 1..=last.min(budget) {
        heights.push(h as u32);
        descend_tail(heights, budget - h, f);
        heights.pop();
    }
}

/// Exhaustive stack counts keyed by `(area, width, height, rise)`.
pub fn enumerate_stacks(max_area: usize) -> StackTable {
    let mut table = StackTable::new();
    for_each_stack(max_area, |s| {
        *table
            .entry((s.area(), s.width(), s.height(), s.rise()))
            .or_insert(0) += 1;
    });
    table
}

/// Calls `f` once for every Ferrers diagram (partition) with area at most
/// `max_area`, rows generated weakly decreasing.
pub fn for_each_ferrers(max_area: usize, mut f: impl FnMut(&FerrersDiagram)) {
    let mut rows: Vec<u32> = Vec::new();
    descend_rows(&mut rows, max_area, &mut f);
}

fn descend_rows(rows: &mut Vec<u32>, budget: usize, f: &mut impl FnMut(&FerrersDiagram)) {
    if !rows.is_empty() {
        f(&FerrersDiagram::from_valid(rows.clone()));
    }
    let cap = rows.last().map_or(budget, |&r| (r as usize).min(budget));
    for m in 1..=cap {
        rows.push(m as u32);
        descend_rows(rows, budget - m, f);
        rows.pop();
    }
}

/// Exhaustive Ferrers counts keyed by `(area, width, height)`; with
/// `durfee_condition` set, only diagrams whose `n`-th largest row has
/// length `n` for some `n` are kept.
pub fn enumerate_ferrers(max_area: usize, durfee_condition: bool) -> FerrersTable {
    let mut table = FerrersTable::new();
    for_each_ferrers(max_area, |d| {
        if !durfee_condition || d.satisfies_durfee_condition() {
            *table.entry((d.area(), d.width(), d.height())).or_insert(0) += 1;
        }
    });
    table
}

// ---------------------------------------------------------------------------
// Dense coefficient grids for the closed generating-function sums.
//
// Every denominator factor in those sums has the shape 1 - (monomial), so a
// term expands by one exact linear pass per factor:
// b = a / (1 - m) satisfies b[v] = a[v] + b[v - deg m].
// ---------------------------------------------------------------------------

/// Dense grid over (x = width, y = height, a = rise, q = area).
#[derive(Clone, PartialEq, Eq, Debug)]
struct Grid4 {
    xo: usize,
    yo: usize,
    ao: usize,
    qo: usize,
    data: Vec<u64>,
}

impl Grid4 {
    fn zero(xo: usize, yo: usize, ao: usize, qo: usize) -> Self {
        Grid4 {
            xo,
            yo,
            ao,
            qo,
            data: vec![0; (xo + 1) * (yo + 1) * (ao + 1) * (qo + 1)],
        }
    }

    fn idx(&self, x: usize, y: usize, a: usize, q: usize) -> usize {
        ((x * (self.yo + 1) + y) * (self.ao + 1) + a) * (self.qo + 1) + q
    }

    fn monomial(&mut self, x: usize, y: usize, a: usize, q: usize) {
        if x <= self.xo && y <= self.yo && a <= self.ao && q <= self.qo {
            let i = self.idx(x, y, a, q);
            self.data[i] = 1;
        }
    }

    /// Divide in place by `1 - x^dx y^dy a^da q^dq`.
    fn div_one_minus_monomial(&mut self, dx: usize, dy: usize, da: usize, dq: usize) {
        assert!(dx + dy + da + dq >= 1);
        for x in dx..=self.xo {
            for y in dy..=self.yo {
                for a in da..=self.ao {
                    for q in dq..=self.qo {
                        let prev = self.data[self.idx(x - dx, y - dy, a - da, q - dq)];
                        if prev != 0 {
                            let i = self.idx(x, y, a, q);
                            self.data[i] += prev;
                        }
                    }
                }
            }
        }
    }

    /// Multiply in place by `x^dx y^dy a^da q^dq`.
    fn mul_monomial(&mut self, dx: usize, dy: usize, da: usize, dq: usize) {
        let mut out = Grid4::zero(self.xo, self.yo, self.ao, self.qo);
        for x in 0..=self.xo.saturating_sub(dx) {
            for y in 0..=self.yo.saturating_sub(dy) {
                for a in 0..=self.ao.saturating_sub(da) {
                    for q in 0..=self.qo.saturating_sub(dq) {
                        let v = self.data[self.idx(x, y, a, q)];
                        if v != 0 {
                            let i = out.idx(x + dx, y + dy, a + da, q + dq);
                            out.data[i] = v;
                        }
                    }
                }
            }
        }
        *self = out;
    }

    fn add_assign(&mut self, rhs: &Grid4) {
        for (d, s) in self.data.iter_mut().zip(&rhs.data) {
            *d += s;
        }
    }

    /// Substitute `x -> x q`: each `x^i` picks up `q^i`.
    fn substitute_x_times_q(&self) -> Grid4 {
        let mut out = Grid4::zero(self.xo, self.yo, self.ao, self.qo);
        for x in 0..=self.xo {
            for y in 0..=self.yo {
                for a in 0..=self.ao {
                    for q in 0..=self.qo {
                        let v = self.data[self.idx(x, y, a, q)];
                        if v != 0 && q + x <= self.qo {
                            let i = out.idx(x, y, a, q + x);
                            out.data[i] = v;
                        }
                    }
                }
            }
        }
        out
    }

    fn to_table(&self) -> StackTable {
        let mut table = StackTable::new();
        for x in 0..=self.xo {
            for y in 0..=self.yo {
                for a in 0..=self.ao {
                    for q in 0..=self.qo {
                        let v = self.data[self.idx(x, y, a, q)];
                        if v != 0 {
                            table.insert((q, x, y, a), v);
                        }
                    }
                }
            }
        }
        table
    }
}

/// Expands the closed stack-polyomino sum
/// `G(x,y,a,q) = sum_{n>=1} x (yq)^n / ((xq;q)_n (axq;q)_{n-1})`
/// to the requested truncations; keys are `(area, width, height, rise)`.
///
/// Term `n` carries `(yq)^n`, so the sum stops at `n = min(y_order, q_order)`.
pub fn stack_gf_closed(
    x_order: usize,
    y_order: usize,
    a_order: usize,
    q_order: usize,
) -> StackTable {
    let mut total = Grid4::zero(x_order, y_order, a_order, q_order);
    for n in 1..=y_order.min(q_order) {
        let mut term = Grid4::zero(x_order, y_order, a_order, q_order);
        term.monomial(1, n, 0, n); // x (yq)^n
        for i in 1..=n {
            term.div_one_minus_monomial(1, 0, 0, i); // 1/(1 - x q^i)
        }
        for i in 1..n {
            term.div_one_minus_monomial(1, 0, 1, i); // 1/(1 - a x q^i)
        }
        total.add_assign(&term);
    }
    total.to_table()
}

fn stack_functional_step(g: &Grid4) -> Grid4 {
    // G(x) = xyq/(1-xq) + y/((1-xq)(1-axq)) G(xq)
    let (xo, yo, ao, qo) = (g.xo, g.yo, g.ao, g.qo);
    let mut out = Grid4::zero(xo, yo, ao, qo);
    out.monomial(1, 1, 0, 1);
    out.div_one_minus_monomial(1, 0, 0, 1);

    let mut rest = g.substitute_x_times_q();
    rest.mul_monomial(0, 1, 0, 0);
    rest.div_one_minus_monomial(1, 0, 0, 1);
    rest.div_one_minus_monomial(1, 0, 1, 1);
    out.add_assign(&rest);
    out
}

/// Iterates the height-layer functional equation
/// `G(x) = xyq/(1-xq) + y/((1-xq)(1-axq)) G(xq)` the given number of times
/// starting from zero. Each step adds one height layer.
pub fn stack_gf_functional_with_steps(
    x_order: usize,
    y_order: usize,
    a_order: usize,
    q_order: usize,
    steps: usize,
) -> StackTable {
    let mut g = Grid4::zero(x_order, y_order, a_order, q_order);
    for _ in 0..steps {
        g = stack_functional_step(&g);
    }
    g.to_table()
}

/// Iterates the functional equation until the truncated expansion is stable.
/// Heights beyond `min(y_order, q_order)` cannot contribute, so stability
/// arrives within that many steps.
pub fn stack_gf_functional(
    x_order: usize,
    y_order: usize,
    a_order: usize,
    q_order: usize,
) -> StackTable {
    let mut g = Grid4::zero(x_order, y_order, a_order, q_order);
    let cap = y_order.min(q_order) + 2;
    for _ in 0..cap {
        let next = stack_functional_step(&g);
        if next == g {
            return g.to_table();
        }
        g = next;
    }
    panic!("stack functional iteration failed to stabilize within {cap} steps");
}

/// Dense grid over (x = width, y = height, q = area).
#[derive(Clone, PartialEq, Eq, Debug)]
struct Grid3 {
    xo: usize,
    yo: usize,
    qo: usize,
    data: Vec<u64>,
}

impl Grid3 {
    fn zero(xo: usize, yo: usize, qo: usize) -> Self {
        Grid3 {
            xo,
            yo,
            qo,
            data: vec![0; (xo + 1) * (yo + 1) * (qo + 1)],
        }
    }

    fn idx(&self, x: usize, y: usize, q: usize) -> usize {
        (x * (self.yo + 1) + y) * (self.qo + 1) + q
    }

    fn monomial(&mut self, x: usize, y: usize, q: usize) {
        if x <= self.xo && y <= self.yo && q <= self.qo {
            let i = self.idx(x, y, q);
            self.data[i] = 1;
        }
    }

    fn div_one_minus_monomial(&mut self, dx: usize, dy: usize, dq: usize) {
        assert!(dx + dy + dq >= 1);
        for x in dx..=self.xo {
            for y in dy..=self.yo {
                for q in dq..=self.qo {
                    let prev = self.data[self.idx(x - dx, y - dy, q - dq)];
                    if prev != 0 {
                        let i = self.idx(x, y, q);
                        self.data[i] += prev;
                    }
                }
            }
        }
    }

    fn add_assign(&mut self, rhs: &Grid3) {
        for (d, s) in self.data.iter_mut().zip(&rhs.data) {
            *d += s;
        }
    }

    fn to_table(&self) -> FerrersTable {
        let mut table = FerrersTable::new();
        for x in 0..=self.xo {
            for y in 0..=self.yo {
                for q in 0..=self.qo {
                    let v = self.data[self.idx(x, y, q)];
                    if v != 0 {
                        table.insert((q, x, y), v);
                    }
                }
            }
        }
        table
    }
}

/// Expands the Ferrers generating function `H(x, y, q)` by its two closed
/// sums and returns both coefficient tables (keys `(area, width, height)`)
/// so callers can check their equality.
///
/// The column form sums over the width `n`: a width-`n` diagram is `n`
/// weakly decreasing positive columns, giving `x^n y q^n / (yq;q)_n`
/// (conjugation turns the column multiset into rows of length at most `n`,
/// with the row count marked by `y`). The Durfee form sums over the Durfee
/// square side: `(xy)^n q^(n^2) / ((xq;q)_n (yq;q)_n)`.
pub fn ferrers_gf_two_forms(
    x_order: usize,
    y_order: usize,
    q_order: usize,
) -> (FerrersTable, FerrersTable) {
    // column form: sum_{n>=1} x^n y q^n prod_{i=1}^{n} 1/(1 - y q^i)
    let mut column = Grid3::zero(x_order, y_order, q_order);
    for n in 1..=x_order.min(q_order) {
        let mut term = Grid3::zero(x_order, y_order, q_order);
        term.monomial(n, 1, n);
        for i in 1..=n {
            term.div_one_minus_monomial(0, 1, i);
        }
        column.add_assign(&term);
    }

    // Durfee form: sum_{n>=1} (xy)^n q^(n^2)
    //              prod_{i=1}^{n} 1/(1 - x q^i) 1/(1 - y q^i)
    let mut durfee = Grid3::zero(x_order, y_order, q_order);
    for n in 1..=q_order.sqrt().min(x_order).min(y_order) {
        let mut term = Grid3::zero(x_order, y_order, q_order);
        term.monomial(n, n, n * n);
        for i in 1..=n {
            term.div_one_minus_monomial(1, 0, i);
            term.div_one_minus_monomial(0, 1, i);
        }
        durfee.add_assign(&term);
    }

    (column.to_table(), durfee.to_table())
}

/// Expands the closed sum for Durfee-constrained Ferrers diagrams
/// `G~(x,y,q) = sum_{n>=1} (xy)^n q^(n^2) / ((yq;q)_n (xq;q)_{n-1})`;
/// keys are `(area, width, height)`.
pub fn ferrers_gf_constrained(x_order: usize, y_order: usize, q_order: usize) -> FerrersTable {
    let mut total = Grid3::zero(x_order, y_order, q_order);
    for n in 1..=q_order.sqrt().min(x_order).min(y_order) {
        let mut term = Grid3::zero(x_order, y_order, q_order);
        term.monomial(n, n, n * n);
        for i in 1..=n {
            term.div_one_minus_monomial(0, 1, i);
        }
        for i in 1..n {
            term.div_one_minus_monomial(1, 0, i);
        }
        total.add_assign(&term);
    }
    total.to_table()
}

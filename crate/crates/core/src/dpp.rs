//! Descending plane partitions: validation, canonical enumeration, counting,
//! and the sum-of-entries statistic.
//!
//! Row `k` (0-indexed) of a shifted array starts at column `k`, so the entry
//! directly above position `j` of row `k` is position `j + 1` of row `k - 1`.
//!
//! The canonical enumeration order compares DPPs by number of rows, then row
//! by row from the top. Rows compare by first part, then length, then
//! colexicographically (last entry most significant).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::qpoly::{QPolyError, QPolynomial};
use crate::rows::{cmp_rows, RowSpace};

/// Default largest order for which full DPP enumeration is attempted.
pub const DEFAULT_DPP_CAP: u32 = 8;

/// First violated invariant. `row` is 0-based; `col` is the absolute
/// (shifted) column, so row `k` starts at column `k`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DppError {
    #[error("row {row} is empty or extends past the row above it (column {col})")]
    RaggedShape { row: usize, col: usize },
    #[error("part at row {row}, column {col} is not positive")]
    NonPositivePart { row: usize, col: usize },
    #[error("part {value} at row {row}, column {col} exceeds the order {order}")]
    PartExceedsOrder {
        row: usize,
        col: usize,
        value: i64,
        order: u32,
    },
    #[error("row {row} increases at column {col}")]
    RowNotWeaklyDecreasing { row: usize, col: usize },
    #[error("column {col} does not strictly decrease from row {} to row {row}", row - 1)]
    ColumnNotStrictlyDecreasing { row: usize, col: usize },
    #[error("row {row} has {len} parts, not fewer than its greatest part {first}")]
    RowTooLong { row: usize, len: usize, first: u32 },
    #[error(
        "row {row} has {len} parts, fewer than the greatest part {next_first} of the next row"
    )]
    RowTooShort {
        row: usize,
        len: usize,
        next_first: u32,
    },
    #[error("order {order} exceeds the enumeration cap {cap}")]
    OrderTooLargeForEnumeration { order: u32, cap: u32 },
    #[error(transparent)]
    QPoly(#[from] QPolyError),
}

/// A strict shifted plane partition with all parts in `1..=order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrictShiftedArray {
    rows: Vec<Vec<u32>>,
    order: u32,
}

impl StrictShiftedArray {
    pub fn new(rows: &[Vec<i64>], order: u32) -> Result<Self, DppError> {
        let mut out: Vec<Vec<u32>> = Vec::with_capacity(rows.len());
        for (k, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(DppError::RaggedShape { row: k, col: k });
            }
            let mut parts = Vec::with_capacity(row.len());
            for (j, &v) in row.iter().enumerate() {
                let col = k + j;
                if v < 1 {
                    return Err(DppError::NonPositivePart { row: k, col });
                }
                if v > i64::from(order) {
                    return Err(DppError::PartExceedsOrder {
                        row: k,
                        col,
                        value: v,
                        order,
                    });
                }
                if j > 0 && v > row[j - 1] {
                    return Err(DppError::RowNotWeaklyDecreasing { row: k, col });
                }
                parts.push(v as u32);
            }
            if let Some(above) = out.last() {
                for (j, &v) in parts.iter().enumerate() {
                    match above.get(j + 1) {
                        None => return Err(DppError::RaggedShape { row: k, col: k + j }),
                        Some(&up) if v >= up => {
                            return Err(DppError::ColumnNotStrictlyDecreasing {
                                row: k,
                                col: k + j,
                            })
                        }
                        Some(_) => {}
                    }
                }
            }
            out.push(parts);
        }
        Ok(Self { rows: out, order })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn order(&self) -> u32 {
        self.order
    }
}

/// A descending plane partition of a fixed order bound.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dpp {
    inner: StrictShiftedArray,
}

/// Checks every strict-shifted and DPP condition on `rows` with order bound `n`.
pub fn validate_dpp(rows: &[Vec<i64>], n: u32) -> Result<Dpp, DppError> {
    let inner = StrictShiftedArray::new(rows, n)?;
    let r = inner.rows();
    for (k, row) in r.iter().enumerate() {
        if row.len() as u32 >= row[0] {
            return Err(DppError::RowTooLong {
                row: k,
                len: row.len(),
                first: row[0],
            });
        }
        if let Some(next) = r.get(k + 1) {
            if (row.len() as u32) < next[0] {
                return Err(DppError::RowTooShort {
                    row: k,
                    len: row.len(),
                    next_first: next[0],
                });
            }
        }
    }
    Ok(Dpp { inner })
}

impl Dpp {
    pub fn empty(order: u32) -> Self {
        Self {
            inner: StrictShiftedArray {
                rows: Vec::new(),
                order,
            },
        }
    }

    pub fn new(rows: Vec<Vec<u32>>, order: u32) -> Result<Self, DppError> {
        let wide: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| i64::from(v)).collect())
            .collect();
        validate_dpp(&wide, order)
    }

    /// Trusted constructor for generator output.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>, order: u32) -> Self {
        Self {
            inner: StrictShiftedArray { rows, order },
        }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        self.inner.rows()
    }

    pub fn order(&self) -> u32 {
        self.inner.order()
    }

    pub fn is_empty(&self) -> bool {
        self.rows().is_empty()
    }

    /// First entry `a_{k,k}` of row `k`.
    pub fn diagonal(&self, k: usize) -> Option<u32> {
        self.rows().get(k).map(|r| r[0])
    }

    /// Absolute column `lambda_k` of the last entry of row `k` (0-based).
    pub fn last_column(&self, k: usize) -> Option<usize> {
        self.rows().get(k).map(|r| k + r.len() - 1)
    }

    pub fn as_strict_shifted(&self) -> &StrictShiftedArray {
        &self.inner
    }

    /// The same partition viewed with a different order bound.
    pub fn with_order(&self, order: u32) -> Result<Self, DppError> {
        Self::new(self.rows().to_vec(), order)
    }

    /// Multi-line rendering in the shifted layout, one row per line.
    pub fn shifted_layout(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        let width = self
            .rows()
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for (k, row) in self.rows().iter().enumerate() {
            if k > 0 {
                out.push('\n');
            }
            out.push_str(&" ".repeat(k * (width + 1)));
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            out.push_str(&cells.join(" "));
        }
        out
    }

    pub fn to_record(&self) -> DppRecord {
        DppRecord {
            rows: self.rows().to_vec(),
            order: self.order(),
            sum: sum_of_entries(self),
        }
    }
}

/// Canonical total order (see module docs). Order bounds are compared last.
impl Ord for Dpp {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.rows(), other.rows());
        a.len()
            .cmp(&b.len())
            .then_with(|| {
                a.iter()
                    .zip(b)
                    .map(|(x, y)| cmp_rows(x, y))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
            .then(self.order().cmp(&other.order()))
    }
}

impl PartialOrd for Dpp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Single-line form: rows separated by ` / `, `∅` when empty.
impl fmt::Display for Dpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

/// JSON shape of a DPP: `{"rows": [[..],..], "order": n, "sum": s}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DppRecord {
    pub rows: Vec<Vec<u32>>,
    pub order: u32,
    pub sum: u64,
}

impl TryFrom<DppRecord> for Dpp {
    type Error = DppError;

    fn try_from(rec: DppRecord) -> Result<Self, DppError> {
        Dpp::new(rec.rows, rec.order)
    }
}

/// Streams every DPP of a given order exactly once, in canonical order.
///
/// Generation is row-by-row backtracking over the candidate rows allowed
/// beneath the previous row, one pass per row count.
#[derive(Debug, Clone)]
pub struct DppIter {
    order: u32,
    target_rows: usize,
    started: bool,
    done: bool,
    stack: Vec<Vec<u32>>,
}

impl DppIter {
    fn space(&self, depth: usize) -> RowSpace<'_> {
        match depth {
            0 => RowSpace::top(self.order, false),
            d => RowSpace::below(self.order, &self.stack[d - 1]),
        }
    }

    /// Replaces the deepest row by its successor, backtracking as needed.
    fn advance(&mut self) -> bool {
        while let Some(row) = self.stack.pop() {
            if let Some(next) = self.space(self.stack.len()).next(&row) {
                self.stack.push(next);
                return true;
            }
        }
        false
    }

    /// Extends the stack to the target row count with the smallest rows.
    fn fill(&mut self) -> bool {
        while self.stack.len() < self.target_rows {
            match self.space(self.stack.len()).first() {
                Some(row) => self.stack.push(row),
                None => {
                    if !self.advance() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl Iterator for DppIter {
    type Item = Dpp;

    fn next(&mut self) -> Option<Dpp> {
        loop {
            if self.done {
                return None;
            }
            if self.target_rows == 0 {
                self.target_rows = 1;
                return Some(Dpp::empty(self.order));
            }
            let found = if self.started {
                self.advance() && self.fill()
            } else {
                self.started = true;
                self.fill()
            };
            if found {
                return Some(Dpp::from_rows_unchecked(self.stack.clone(), self.order));
            }
            // a row needs first part >= 2 and the diagonal strictly decreases
            self.target_rows += 1;
            self.started = false;
            self.stack.clear();
            if self.target_rows as u32 >= self.order.max(1) {
                self.done = true;
            }
        }
    }
}

pub fn enumerate_dpps(n: u32) -> DppIter {
    DppIter {
        order: n,
        target_rows: 0,
        started: false,
        done: false,
        stack: Vec::new(),
    }
}

pub fn count_dpps(n: u32) -> BigUint {
    BigUint::from(enumerate_dpps(n).count())
}

fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `prod_{j=0}^{n-1} (3j+1)! / (n+j)!`, exactly.
pub fn product_formula(n: u32) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for j in 0..n {
        num *= factorial(3 * j + 1);
        den *= factorial(n + j);
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(
        r == BigUint::default(),
        "product formula is not integral at n={n}"
    );
    q
}

pub fn sum_of_entries(d: &Dpp) -> u64 {
    d.rows().iter().flatten().map(|&v| u64::from(v)).sum()
}

/// Generating polynomial of the sum-of-entries statistic, by enumeration.
pub fn dpp_generating_polynomial(n: u32) -> Result<QPolynomial, DppError> {
    dpp_generating_polynomial_capped(n, DEFAULT_DPP_CAP)
}

pub fn dpp_generating_polynomial_capped(n: u32, cap: u32) -> Result<QPolynomial, DppError> {
    if n > cap {
        return Err(DppError::OrderTooLargeForEnumeration { order: n, cap });
    }
    let mut hist: Vec<u64> = Vec::new();
    for d in enumerate_dpps(n) {
        let s = sum_of_entries(&d) as usize;
        if hist.len() <= s {
            hist.resize(s + 1, 0);
        }
        hist[s] += 1;
    }
    Ok(QPolynomial::from_coeffs(hist))
}

/// `prod_{j=0}^{n-1} [3j+1]_q! / [n+j]_q!` by exact polynomial division.
///
/// Both products are expanded into q-integer factors `[i]_q`; common factors
/// cancel before the remaining numerator is divided by each remaining
/// denominator factor in turn.
pub fn q_product_formula(n: u32) -> Result<QPolynomial, DppError> {
    let top = (3 * n.max(1) + 1) as usize;
    let mut mult = vec![0i64; top + 1];
    for j in 0..n {
        mult[1..=(3 * j + 1) as usize]
            .iter_mut()
            .for_each(|m| *m += 1);
        mult[1..=(n + j) as usize].iter_mut().for_each(|m| *m -= 1);
    }
    let mut poly = QPolynomial::one();
    for (i, &m) in mult.iter().enumerate() {
        for _ in 0..m.max(0) {
            poly = poly.mul(&QPolynomial::q_integer(i));
        }
    }
    for (i, &m) in mult.iter().enumerate() {
        for _ in 0..(-m).max(0) {
            poly = poly.div_exact(&QPolynomial::q_integer(i))?;
        }
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(r: &[&[i64]]) -> Vec<Vec<i64>> {
        r.iter().map(|x| x.to_vec()).collect()
    }

    #[test]
    fn validates_known_examples() {
        assert!(validate_dpp(&rows(&[&[3, 3], &[2]]), 3).is_ok());
        assert!(validate_dpp(&[], 0).is_ok());
        let big = rows(&[&[7, 7, 5, 4, 3, 2], &[6, 4, 2, 2, 1], &[3, 1]]);
        assert!(validate_dpp(&big, 7).is_ok());
    }

    #[test]
    fn reports_row_too_long() {
        assert_eq!(
            validate_dpp(&rows(&[&[2, 1]]), 3),
            Err(DppError::RowTooLong {
                row: 0,
                len: 2,
                first: 2
            })
        );
    }

    #[test]
    fn reports_each_violation() {
        assert!(matches!(
            validate_dpp(&rows(&[&[3, 2]]), 2),
            Err(DppError::PartExceedsOrder { row: 0, col: 0, .. })
        ));
        assert_eq!(
            validate_dpp(&rows(&[&[3, 0]]), 3),
            Err(DppError::NonPositivePart { row: 0, col: 1 })
        );
        assert_eq!(
            validate_dpp(&rows(&[&[2, 3]]), 3),
            Err(DppError::RowNotWeaklyDecreasing { row: 0, col: 1 })
        );
        assert_eq!(
            validate_dpp(&rows(&[&[3, 3], &[3]]), 3),
            Err(DppError::ColumnNotStrictlyDecreasing { row: 1, col: 1 })
        );
        assert_eq!(
            validate_dpp(&rows(&[&[3, 3], &[2, 1]]), 3),
            Err(DppError::RaggedShape { row: 1, col: 2 })
        );
        assert_eq!(
            validate_dpp(&rows(&[&[3, 3], &[]]), 3),
            Err(DppError::RaggedShape { row: 1, col: 1 })
        );
        // strict shifted, rows short enough, but the first row is too short
        // for the second row's greatest part
        assert_eq!(
            validate_dpp(&rows(&[&[5, 4], &[3]]), 5),
            Err(DppError::RowTooShort {
                row: 0,
                len: 2,
                next_first: 3
            })
        );
    }

    #[test]
    fn order_three_listing() {
        let got: Vec<String> = enumerate_dpps(3).map(|d| d.to_string()).collect();
        assert_eq!(got, ["∅", "2", "3", "3 1", "3 2", "3 3", "3 3 / 2"]);
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_dpps(0), BigUint::from(1u32));
        assert_eq!(count_dpps(1), BigUint::from(1u32));
        assert_eq!(count_dpps(2), BigUint::from(2u32));
        assert_eq!(count_dpps(4), BigUint::from(42u32));
    }

    #[test]
    fn product_formula_small() {
        let got: Vec<u64> = (0..=6)
            .map(|n| product_formula(n).try_into().unwrap())
            .collect();
        assert_eq!(got, [1, 1, 2, 7, 42, 429, 7436]);
    }

    #[test]
    fn sums() {
        let example = Dpp::new(
            vec![vec![7, 7, 5, 4, 3, 2], vec![6, 4, 2, 2, 1], vec![3, 1]],
            7,
        )
        .unwrap();
        assert_eq!(sum_of_entries(&example), 47);
        assert_eq!(sum_of_entries(&Dpp::empty(0)), 0);
        assert_eq!(
            sum_of_entries(&Dpp::new(vec![vec![3, 3], vec![2]], 3).unwrap()),
            8
        );
    }

    #[test]
    fn generating_polynomials() {
        assert_eq!(dpp_generating_polynomial(0).unwrap(), QPolynomial::one());
        assert_eq!(
            dpp_generating_polynomial(2).unwrap(),
            QPolynomial::from_coeffs([1u32, 0, 1])
        );
        assert_eq!(
            dpp_generating_polynomial(3).unwrap(),
            QPolynomial::from_coeffs([1u32, 0, 1, 1, 1, 1, 1, 0, 1])
        );
        assert_eq!(
            dpp_generating_polynomial(9),
            Err(DppError::OrderTooLargeForEnumeration { order: 9, cap: 8 })
        );
    }

    #[test]
    fn q_product_small() {
        assert_eq!(q_product_formula(0).unwrap(), QPolynomial::one());
        assert_eq!(
            q_product_formula(2).unwrap(),
            QPolynomial::from_coeffs([1u32, 0, 1])
        );
        assert_eq!(
            q_product_formula(3).unwrap(),
            QPolynomial::from_coeffs([1u32, 0, 1, 1, 1, 1, 1, 0, 1])
        );
    }

    #[test]
    fn shifted_layout_indents_rows() {
        let d = Dpp::new(vec![vec![3, 3], vec![2]], 3).unwrap();
        assert_eq!(d.shifted_layout(), "3 3\n  2");
        let d = Dpp::new(vec![vec![10, 10], vec![2]], 10).unwrap();
        assert_eq!(d.shifted_layout(), "10 10\n    2");
        assert_eq!(Dpp::empty(4).shifted_layout(), "∅");
    }

    #[test]
    fn record_json_shape() {
        let d = Dpp::new(vec![vec![3, 3], vec![2]], 3).unwrap();
        let s = serde_json::to_string(&d.to_record()).unwrap();
        assert_eq!(s, r#"{"rows":[[3,3],[2]],"order":3,"sum":8}"#);
        let empty = serde_json::to_string(&Dpp::empty(3).to_record()).unwrap();
        assert_eq!(empty, r#"{"rows":[],"order":3,"sum":0}"#);
    }
}

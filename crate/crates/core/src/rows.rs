//! Candidate rows for backtracking generation, in canonical row order.
//!
//! Rows are ordered by first part, then by length, then colexicographically
//! (the last entry is the most significant). This ordering reproduces the
//! printed listings of the order-3 DPPs and the order-4 Catalan DPPs.

use std::cmp::Ordering;

/// The set of rows that may be placed below `above` (or as the top row when
/// `above` is `None`), optionally restricted by the staircase bound
/// `a_j <= a_1 - j` (0-indexed `j`).
#[derive(Debug, Clone, Copy)]
pub(crate) struct RowSpace<'a> {
    max_part: u32,
    above: Option<&'a [u32]>,
    staircase: bool,
}

impl<'a> RowSpace<'a> {
    pub(crate) fn top(order: u32, staircase: bool) -> Self {
        Self {
            max_part: order,
            above: None,
            staircase,
        }
    }

    pub(crate) fn below(order: u32, above: &'a [u32]) -> Self {
        Self {
            max_part: order,
            above: Some(above),
            staircase: false,
        }
    }

    /// Largest admissible first part. Under a row of length `l` the first
    /// part must be `<= l` (inter-row condition) and strictly below the entry
    /// it sits under.
    fn max_first(&self) -> u32 {
        match self.above {
            None => self.max_part,
            Some(above) if above.len() >= 2 => (above.len() as u32).min(above[1] - 1),
            Some(_) => 0,
        }
    }

    /// Upper bound for the entry at position `j >= 1` of a row whose first
    /// part is `first`. Zero means no legal value.
    fn bound(&self, first: u32, j: usize) -> u32 {
        let mut b = first;
        if let Some(above) = self.above {
            b = b.min(above.get(j + 1).map_or(0, |&x| x.saturating_sub(1)));
        }
        if self.staircase {
            b = b.min(first.saturating_sub(j as u32));
        }
        b
    }

    /// Smallest row of length `len` with first part `first`, if one exists.
    fn first_of_shape(&self, first: u32, len: usize) -> Option<Vec<u32>> {
        // row length must stay below the first part
        if len == 0 || len as u32 >= first {
            return None;
        }
        if len > 1 && self.bound(first, len - 1) == 0 {
            return None;
        }
        let mut row = vec![1; len];
        row[0] = first;
        Some(row)
    }

    pub(crate) fn first(&self) -> Option<Vec<u32>> {
        (2..=self.max_first()).find_map(|a| self.first_of_shape(a, 1))
    }

    /// Successor of `row` in canonical row order within this space.
    pub(crate) fn next(&self, row: &[u32]) -> Option<Vec<u32>> {
        let first = row[0];
        let len = row.len();
        // colex increment of the tail, same first part and length
        if let Some(i) = (1..len).find(|&i| row[i] < self.bound(first, i)) {
            let mut next = row.to_vec();
            let v = row[i] + 1;
            next[1..=i].fill(v);
            return Some(next);
        }
        if let Some(next) = self.first_of_shape(first, len + 1) {
            return Some(next);
        }
        (first + 1..=self.max_first()).find_map(|a| self.first_of_shape(a, 1))
    }
}

/// Canonical comparison of two rows (see module docs).
pub(crate) fn cmp_rows(a: &[u32], b: &[u32]) -> Ordering {
    a.first()
        .cmp(&b.first())
        .then(a.len().cmp(&b.len()))
        .then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

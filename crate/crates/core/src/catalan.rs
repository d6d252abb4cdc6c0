//! The Catalan families: one-row Catalan DPPs, DPP paths, and 231-avoiding
//! permutations, plus the boundary-word bijection between the first two.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dpp::{Dpp, DppError};
use crate::rows::RowSpace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalanError {
    #[error("not a Catalan DPP: {0}")]
    NotADpp(#[from] DppError),
    #[error("DPP has {0} rows; a Catalan DPP has at most one")]
    TooManyRows(usize),
    #[error("entry {value} at position {position} exceeds the staircase bound {bound}")]
    StaircaseViolated {
        position: usize,
        value: u32,
        bound: u32,
    },
    #[error("path has {ones} ones, more than the {max} allowed at order {order}")]
    TooManyOnes { ones: usize, max: usize, order: u32 },
    #[error("partial sum becomes negative at step {0}")]
    NegativePartialSum(usize),
    #[error("nonempty path has total sum {0}")]
    NonpositiveTotalSum(i64),
    #[error("step {value} at index {index} is not 1 or -1")]
    BadStep { index: usize, value: i64 },
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("values are not a permutation of 1..={0}")]
    NotAPermutation(usize),
}

/// A one-row DPP `a_1 a_2 ... a_l` with `a_j <= a_1 - j + 1` (1-indexed).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalanDpp {
    parts: Vec<u32>,
    order: u32,
}

impl CatalanDpp {
    pub fn empty(order: u32) -> Self {
        Self {
            parts: Vec::new(),
            order,
        }
    }

    pub fn new(parts: Vec<u32>, order: u32) -> Result<Self, CatalanError> {
        let dpp = Dpp::new(
            if parts.is_empty() {
                Vec::new()
            } else {
                vec![parts.clone()]
            },
            order,
        )?;
        Self::try_from(&dpp)
    }

    /// Trusted constructor for generator output.
    pub(crate) fn from_parts_unchecked(parts: Vec<u32>, order: u32) -> Self {
        Self { parts, order }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Greatest part `a_{1,1}`, or `None` when empty.
    pub fn first(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn to_dpp(&self) -> Dpp {
        let rows = if self.parts.is_empty() {
            Vec::new()
        } else {
            vec![self.parts.clone()]
        };
        Dpp::from_rows_unchecked(rows, self.order)
    }

    pub fn with_order(&self, order: u32) -> Result<Self, CatalanError> {
        Self::new(self.parts.clone(), order)
    }

    /// Parses the space-separated form, e.g. `"4 3 2"`; `"∅"` or blank is empty.
    pub fn parse(s: &str, order: u32) -> Result<Self, CatalanError> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Self::empty(order));
        }
        let parts = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| CatalanError::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts, order)
    }
}

impl TryFrom<&Dpp> for CatalanDpp {
    type Error = CatalanError;

    fn try_from(d: &Dpp) -> Result<Self, CatalanError> {
        match d.rows() {
            [] => Ok(Self::empty(d.order())),
            [row] => {
                let first = row[0];
                for (j, &v) in row.iter().enumerate() {
                    let bound = first - j as u32;
                    if v > bound {
                        return Err(CatalanError::StaircaseViolated {
                            position: j + 1,
                            value: v,
                            bound,
                        });
                    }
                }
                Ok(Self {
                    parts: row.clone(),
                    order: d.order(),
                })
            }
            rows => Err(CatalanError::TooManyRows(rows.len())),
        }
    }
}

impl fmt::Display for CatalanDpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        f.write_str(&s.join(" "))
    }
}

#[derive(Serialize, Deserialize)]
struct CatalanDppRecord {
    parts: Vec<u32>,
}

impl Serialize for CatalanDpp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CatalanDppRecord {
            parts: self.parts.clone(),
        }
        .serialize(s)
    }
}

/// True iff `d` has at most one row and meets the staircase bound.
pub fn is_catalan_dpp(d: &Dpp) -> bool {
    CatalanDpp::try_from(d).is_ok()
}

/// Direct generation: pick `a_{1,1}`, then the remaining entries under the
/// staircase bound. Ordered by first part, length, then colexicographically.
pub fn enumerate_catalan_dpps(n: u32) -> impl Iterator<Item = CatalanDpp> {
    let space = RowSpace::top(n, true);
    let first = space.first();
    let head = std::iter::once(CatalanDpp::empty(n));
    let rest = std::iter::successors(first, move |r| space.next(r))
        .map(move |parts| CatalanDpp::from_parts_unchecked(parts, n));
    head.chain(rest)
}

/// A sequence over `{1, -1}` with at most `order - 1` ones, nonnegative
/// prefix sums, and positive total when nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DppPath {
    steps: Vec<i8>,
    order: u32,
}

pub fn validate_path(steps: &[i64], n: u32) -> Result<DppPath, CatalanError> {
    let mut sum: i64 = 0;
    let mut ones = 0usize;
    for (index, &value) in steps.iter().enumerate() {
        match value {
            1 => ones += 1,
            -1 => {}
            _ => return Err(CatalanError::BadStep { index, value }),
        }
        sum += value;
        if sum < 0 {
            return Err(CatalanError::NegativePartialSum(index));
        }
    }
    let max = n.saturating_sub(1) as usize;
    if ones > max || (n == 0 && ones > 0) {
        return Err(CatalanError::TooManyOnes {
            ones,
            max,
            order: n,
        });
    }
    if !steps.is_empty() && sum <= 0 {
        return Err(CatalanError::NonpositiveTotalSum(sum));
    }
    Ok(DppPath {
        steps: steps.iter().map(|&s| s as i8).collect(),
        order: n,
    })
}

impl DppPath {
    pub fn empty(order: u32) -> Self {
        Self {
            steps: Vec::new(),
            order,
        }
    }

    pub fn new(steps: &[i64], order: u32) -> Result<Self, CatalanError> {
        validate_path(steps, order)
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<i8>, order: u32) -> Self {
        Self { steps, order }
    }

    pub fn steps(&self) -> &[i8] {
        &self.steps
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.steps.iter().filter(|&&s| s == 1).count()
    }

    pub fn minus_ones(&self) -> usize {
        self.steps.len() - self.ones()
    }

    /// Smallest order this path is valid at.
    pub fn min_order(&self) -> u32 {
        if self.steps.is_empty() {
            0
        } else {
            self.ones() as u32 + 1
        }
    }

    pub fn with_order(&self, order: u32) -> Result<Self, CatalanError> {
        let wide: Vec<i64> = self.steps.iter().map(|&s| i64::from(s)).collect();
        validate_path(&wide, order)
    }

    /// Parses the concatenated form, e.g. `"1-11-11"`; `"∅"` or blank is empty.
    /// Commas and whitespace between steps are tolerated.
    pub fn parse(s: &str, order: u32) -> Result<Self, CatalanError> {
        let steps = parse_steps(s)?;
        validate_path(&steps, order)
    }

    /// Column-box picture of the profile (tallest column first, `#` per
    /// box) followed by the full boundary word with its forced first `-1`
    /// and last `1` restored.
    pub fn grid_profile(&self) -> String {
        if self.steps.is_empty() {
            return "∅".to_string();
        }
        let heights = path_to_dpp(self).parts;
        let mut lines: Vec<String> = (1..=heights[0])
            .rev()
            .map(|level| {
                heights
                    .iter()
                    .map(|&h| if h >= level { '#' } else { ' ' })
                    .collect::<String>()
                    .trim_end()
                    .to_string()
            })
            .collect();
        let word: Vec<String> = full_word(&self.steps).iter().map(i8::to_string).collect();
        lines.push(word.join(" "));
        lines.join("\n")
    }
}

fn parse_steps(s: &str) -> Result<Vec<i64>, CatalanError> {
    let t = s.trim();
    if t.is_empty() || t == "∅" {
        return Ok(Vec::new());
    }
    let mut steps = Vec::new();
    let mut chars = t.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '1' => steps.push(1),
            '-' if chars.peek() == Some(&'1') => {
                chars.next();
                steps.push(-1);
            }
            ',' | ' ' | '\t' | '+' => {}
            _ => return Err(CatalanError::Parse(s.to_string())),
        }
    }
    Ok(steps)
}

fn full_word(steps: &[i8]) -> Vec<i8> {
    let mut w = Vec::with_capacity(steps.len() + 2);
    w.push(-1);
    w.extend_from_slice(steps);
    w.push(1);
    w
}

impl fmt::Display for DppPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str("∅");
        }
        for &s in &self.steps {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for DppPath {
    type Err = CatalanError;

    /// Parses at the smallest order that admits the path.
    fn from_str(s: &str) -> Result<Self, CatalanError> {
        let steps = parse_steps(s)?;
        let ones = steps.iter().filter(|&&x| x == 1).count() as u32;
        let order = if steps.is_empty() { 0 } else { ones + 1 };
        validate_path(&steps, order)
    }
}

#[derive(Serialize, Deserialize)]
struct DppPathRecord {
    steps: Vec<i8>,
}

impl Serialize for DppPath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DppPathRecord {
            steps: self.steps.clone(),
        }
        .serialize(s)
    }
}

/// Boundary word of the column profile with its forced first `-1` and last
/// `1` removed. Each column `j` contributes a `-1` followed by
/// `a_j - a_{j+1}` ones (with `a_{l+1} = 0`).
pub fn dpp_to_path(c: &CatalanDpp) -> DppPath {
    let parts = c.parts();
    if parts.is_empty() {
        return DppPath::empty(c.order());
    }
    let mut word: Vec<i8> = Vec::with_capacity(parts.len() + parts[0] as usize);
    for (j, &h) in parts.iter().enumerate() {
        word.push(-1);
        let next = parts.get(j + 1).copied().unwrap_or(0);
        word.extend(std::iter::repeat_n(1, (h - next) as usize));
    }
    word.pop();
    word.remove(0);
    DppPath::from_steps_unchecked(word, c.order())
}

/// Inverse of [`dpp_to_path`]: `a_j` is the number of ones after the
/// `j`-th `-1` of the restored boundary word.
pub fn path_to_dpp(p: &DppPath) -> CatalanDpp {
    if p.is_empty() {
        return CatalanDpp::empty(p.order());
    }
    let word = full_word(p.steps());
    let mut parts = Vec::new();
    let mut ones_after = word.iter().filter(|&&s| s == 1).count() as u32;
    for &s in &word {
        if s == -1 {
            parts.push(ones_after);
        } else {
            ones_after -= 1;
        }
    }
    CatalanDpp::from_parts_unchecked(parts, p.order())
}

/// All DPP paths of order `n`, in the image order of
/// [`enumerate_catalan_dpps`] under [`dpp_to_path`].
pub fn enumerate_paths(n: u32) -> impl Iterator<Item = DppPath> {
    enumerate_catalan_dpps(n).map(|c| dpp_to_path(&c))
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self, CatalanError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(CatalanError::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Self { values })
    }

    pub fn empty() -> Self {
        Self { values: Vec::new() }
    }

    pub fn identity(n: u32) -> Self {
        Self {
            values: (1..=n).collect(),
        }
    }

    pub(crate) fn from_values_unchecked(values: Vec<u32>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl fmt::Display for Permutation {
    /// Concatenated digits when every value is a single digit (`4132`),
    /// space-separated otherwise; `∅` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return f.write_str("∅");
        }
        let sep = if self.values.len() < 10 { "" } else { " " };
        let s: Vec<String> = self.values.iter().map(u32::to_string).collect();
        f.write_str(&s.join(sep))
    }
}

impl FromStr for Permutation {
    type Err = CatalanError;

    fn from_str(s: &str) -> Result<Self, CatalanError> {
        let t = s.trim();
        if t.is_empty() || t == "∅" {
            return Ok(Self::empty());
        }
        let values: Vec<u32> = if t.contains(|c: char| c.is_whitespace() || c == ',') {
            t.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|x| !x.is_empty())
                .map(|x| x.parse().map_err(|_| CatalanError::Parse(s.to_string())))
                .collect::<Result<_, _>>()?
        } else {
            t.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| CatalanError::Parse(s.to_string()))
                })
                .collect::<Result<_, _>>()?
        };
        Self::new(values)
    }
}

#[derive(Serialize, Deserialize)]
struct PermutationRecord {
    values: Vec<u32>,
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PermutationRecord {
            values: self.values.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rec = PermutationRecord::deserialize(d)?;
        Permutation::new(rec.values).map_err(serde::de::Error::custom)
    }
}

impl<'de> Deserialize<'de> for DppPath {
    /// Deserialized paths take the smallest order that admits them.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rec = DppPathRecord::deserialize(d)?;
        let steps: Vec<i64> = rec.steps.iter().map(|&s| i64::from(s)).collect();
        let ones = steps.iter().filter(|&&s| s == 1).count() as u32;
        let order = if steps.is_empty() { 0 } else { ones + 1 };
        validate_path(&steps, order).map_err(serde::de::Error::custom)
    }
}

impl<'de> Deserialize<'de> for CatalanDpp {
    /// Deserialized Catalan DPPs take order `a_{1,1}` (0 when empty).
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rec = CatalanDppRecord::deserialize(d)?;
        let order = rec.parts.first().copied().unwrap_or(0);
        CatalanDpp::new(rec.parts, order).map_err(serde::de::Error::custom)
    }
}

/// True iff no `i < j < k` has `s_k < s_i < s_j`.
///
/// Uses the stack-sorting characterization: a permutation avoids 231
/// exactly when one pass through a stack sorts it.
pub fn is_231_avoiding(p: &Permutation) -> bool {
    let mut stack: Vec<u32> = Vec::new();
    let mut next_out = 1;
    for &v in p.values() {
        while stack.last().is_some_and(|&top| top < v) {
            if stack.pop() != Some(next_out) {
                return false;
            }
            next_out += 1;
        }
        stack.push(v);
    }
    while let Some(top) = stack.pop() {
        if top != next_out {
            return false;
        }
        next_out += 1;
    }
    true
}

/// All 231-avoiding permutations of length `n` in lexicographic order.
pub fn enumerate_231_avoiding(n: u32) -> Vec<Permutation> {
    // `floor` is the largest value followed later by something bigger; any
    // further value must exceed it or it would close a 231.
    fn extend(
        n: u32,
        prefix: &mut Vec<u32>,
        used: &mut [bool],
        floor: u32,
        out: &mut Vec<Permutation>,
    ) {
        if prefix.len() == n as usize {
            out.push(Permutation::from_values_unchecked(prefix.clone()));
            return;
        }
        for v in (floor + 1)..=n {
            if used[v as usize] {
                continue;
            }
            let new_floor = prefix
                .iter()
                .copied()
                .filter(|&x| x < v)
                .fold(floor, u32::max);
            used[v as usize] = true;
            prefix.push(v);
            extend(n, prefix, used, new_floor, out);
            prefix.pop();
            used[v as usize] = false;
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; n as usize + 1];
    extend(
        n,
        &mut Vec::with_capacity(n as usize),
        &mut used,
        0,
        &mut out,
    );
    out
}

fn catalan_closed_form(n: u32) -> BigUint {
    // binomial(2n, n) / (n + 1)
    let mut binom = BigUint::one();
    for i in 0..n {
        binom = binom * (2 * n - i) / (i + 1);
    }
    binom / (n + 1)
}

fn catalan_recurrence(n: u32) -> BigUint {
    let mut x: Vec<BigUint> = vec![BigUint::one()];
    for m in 1..=n as usize {
        let next = (1..=m).map(|p| &x[p - 1] * &x[m - p]).sum();
        x.push(next);
    }
    x.pop().unwrap_or_default()
}

/// The `n`th Catalan number, computed by the closed form and by the
/// recurrence `X_n = sum_{p=1}^{n} X_{p-1} X_{n-p}`; the two must agree.
pub fn catalan_number(n: u32) -> BigUint {
    let closed = catalan_closed_form(n);
    let rec = catalan_recurrence(n);
    assert_eq!(
        closed, rec,
        "Catalan closed form and recurrence disagree at n={n}"
    );
    closed
}

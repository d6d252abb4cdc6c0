//! Cross-family checks: alternating sign matrices via monotone triangles,
//! the Catalan diagonal sequences of monotone and magog triangles, and
//! totally symmetric self-complementary plane partitions.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const DEFAULT_ASM_CAP: u32 = 6;
pub const DEFAULT_TSSCPP_CAP: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AsmError {
    #[error("matrix is not square (row {row} has {len} entries, expected {expected})")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry {value} at ({row}, {col}) is not -1, 0 or 1")]
    BadEntry { row: usize, col: usize, value: i64 },
    #[error("row {row} sums to {sum}")]
    RowSum { row: usize, sum: i64 },
    #[error("column {col} sums to {sum}")]
    ColSum { col: usize, sum: i64 },
    #[error("nonzero entries fail to alternate at ({row}, {col})")]
    SignAlternation { row: usize, col: usize },
    #[error("not a monotone triangle: {0}")]
    BadTriangle(String),
    #[error("order {order} exceeds the cap {cap}")]
    OrderTooLarge { order: u32, cap: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TsscppError {
    #[error("not a plane partition in the {side}-box: {reason}")]
    NotPlanePartition { side: usize, reason: String },
    #[error(
        "not totally symmetric: cell ({0}, {1}, {2}) is filled but a permutation of it is not"
    )]
    NotTotallySymmetric(usize, usize, usize),
    #[error(
        "not self-complementary: heights at ({0}, {1}) and its opposite do not sum to the box side"
    )]
    NotSelfComplementary(usize, usize),
    #[error("order {order} exceeds the cap {cap}")]
    OrderTooLarge { order: u32, cap: u32 },
}

/// An `n x n` alternating sign matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Asm {
    entries: Vec<Vec<i8>>,
}

impl Asm {
    pub fn entries(&self) -> &[Vec<i8>] {
        &self.entries
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn identity(n: usize) -> Self {
        Self {
            entries: (0..n)
                .map(|i| (0..n).map(|j| i8::from(i == j)).collect())
                .collect(),
        }
    }
}

impl<'de> Deserialize<'de> for Asm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Rec {
            entries: Vec<Vec<i64>>,
        }
        let rec = Rec::deserialize(d)?;
        validate_asm(&rec.entries).map_err(serde::de::Error::custom)
    }
}

/// Columns padded to two characters so `-1` lines up with `0` and `1`.
impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn validate_asm(matrix: &[Vec<i64>]) -> Result<Asm, AsmError> {
    let n = matrix.len();
    for (row, r) in matrix.iter().enumerate() {
        if r.len() != n {
            return Err(AsmError::NotSquare {
                row,
                len: r.len(),
                expected: n,
            });
        }
        if let Some((col, &value)) = r.iter().enumerate().find(|(_, v)| !(-1..=1).contains(*v)) {
            return Err(AsmError::BadEntry { row, col, value });
        }
    }
    // a line is valid iff its partial sums stay in {0, 1} and end at 1
    let check_line = |line: &mut dyn Iterator<Item = (usize, i64)>| -> Result<(), (usize, bool)> {
        let mut partial = 0;
        let mut last = 0;
        for (idx, v) in line {
            partial += v;
            if !(0..=1).contains(&partial) {
                return Err((idx, true));
            }
            last = idx;
        }
        if partial != 1 {
            return Err((last, false));
        }
        Ok(())
    };
    for (row, line) in matrix.iter().enumerate() {
        if let Err((col, alternation)) = check_line(&mut line.iter().copied().enumerate()) {
            return Err(if alternation {
                AsmError::SignAlternation { row, col }
            } else {
                AsmError::RowSum {
                    row,
                    sum: line.iter().sum(),
                }
            });
        }
    }
    #[allow(clippy::needless_range_loop)]
    for col in 0..n {
        if let Err((row, alternation)) = check_line(&mut (0..n).map(|r| (r, matrix[r][col]))) {
            return Err(if alternation {
                AsmError::SignAlternation { row, col }
            } else {
                AsmError::ColSum {
                    col,
                    sum: (0..n).map(|r| matrix[r][col]).sum(),
                }
            });
        }
    }
    Ok(Asm {
        entries: matrix
            .iter()
            .map(|r| r.iter().map(|&v| v as i8).collect())
            .collect(),
    })
}

/// Row `i` (1-indexed) holds `i` strictly increasing values; the bottom row
/// is `1..=n` and consecutive rows interlace.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MonotoneTriangle {
    rows: Vec<Vec<u32>>,
}

impl MonotoneTriangle {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, AsmError> {
        let n = rows.len();
        let bad = |m: String| Err(AsmError::BadTriangle(m));
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return bad(format!("row {} has {} entries", i + 1, row.len()));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("row {} is not strictly increasing", i + 1));
            }
            if row.iter().any(|&v| v == 0 || v as usize > n) {
                return bad(format!("row {} leaves 1..={n}", i + 1));
            }
        }
        if let Some(bottom) = rows.last() {
            if !bottom.iter().copied().eq(1..=n as u32) {
                return bad("bottom row is not 1..=n".into());
            }
        }
        for i in 1..n {
            let (up, down) = (&rows[i - 1], &rows[i]);
            for (j, &v) in up.iter().enumerate() {
                if v < down[j] || v > down[j + 1] {
                    return bad(format!("row {i} does not interlace with row {}", i + 1));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// The length-`n` northwest-to-southeast diagonal: the last entry of
    /// each row, apex first.
    pub fn nw_se_diagonal(&self) -> Vec<u32> {
        self.rows
            .iter()
            .map(|r| *r.last().expect("rows are nonempty"))
            .collect()
    }
}

impl fmt::Display for MonotoneTriangle {
    /// Centered layout with the apex on top.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rows.len();
        let w = n.to_string().len();
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let pad = " ".repeat((n - 1 - i) * w);
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>w$}")).collect();
            write!(f, "{pad}{}", cells.join(&" ".repeat(w)))?;
        }
        Ok(())
    }
}

/// Row `i` of the triangle lists the columns whose partial column sum over
/// the first `i` matrix rows equals 1.
pub fn asm_to_monotone(a: &Asm) -> MonotoneTriangle {
    let n = a.order();
    let mut partial = vec![0i32; n];
    let rows = a
        .entries()
        .iter()
        .map(|row| {
            for (c, &v) in row.iter().enumerate() {
                partial[c] += i32::from(v);
            }
            (0..n)
                .filter(|&c| partial[c] == 1)
                .map(|c| c as u32 + 1)
                .collect()
        })
        .collect();
    MonotoneTriangle { rows }
}

pub fn monotone_to_asm(t: &MonotoneTriangle) -> Asm {
    let n = t.rows().len();
    let mut prev = vec![0i8; n];
    let entries = t
        .rows()
        .iter()
        .map(|row| {
            let mut cur = vec![0i8; n];
            for &v in row {
                cur[v as usize - 1] = 1;
            }
            let out = cur.iter().zip(&prev).map(|(c, p)| c - p).collect();
            prev = cur;
            out
        })
        .collect();
    Asm { entries }
}

/// All monotone triangles with bottom row `1..=n`, built upward by
/// interlacing backtracking. Rows above are chosen in lexicographic order.
pub fn enumerate_monotone_triangles(n: u32) -> Vec<MonotoneTriangle> {
    fn rows_above(below: &[u32]) -> Vec<Vec<u32>> {
        // entry j lies in [below[j], below[j+1]] and rows strictly increase
        fn rec(below: &[u32], j: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if j + 1 == below.len() {
                out.push(cur.clone());
                return;
            }
            let lo = cur.last().map_or(below[j], |&p| below[j].max(p + 1));
            for v in lo..=below[j + 1] {
                cur.push(v);
                rec(below, j + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(below, 0, &mut Vec::new(), &mut out);
        out
    }
    fn build(stack: &mut Vec<Vec<u32>>, out: &mut Vec<MonotoneTriangle>) {
        let below = stack.last().expect("bottom row").clone();
        if below.len() <= 1 {
            let mut rows = stack.clone();
            rows.reverse();
            out.push(MonotoneTriangle { rows });
            return;
        }
        for row in rows_above(&below) {
            stack.push(row);
            build(stack, out);
            stack.pop();
        }
    }
    if n == 0 {
        return vec![MonotoneTriangle { rows: Vec::new() }];
    }
    let mut out = Vec::new();
    build(&mut vec![(1..=n).collect()], &mut out);
    out
}

pub fn enumerate_asms(n: u32) -> Result<Vec<Asm>, AsmError> {
    enumerate_asms_capped(n, DEFAULT_ASM_CAP)
}

pub fn enumerate_asms_capped(n: u32, cap: u32) -> Result<Vec<Asm>, AsmError> {
    if n > cap {
        return Err(AsmError::OrderTooLarge { order: n, cap });
    }
    Ok(enumerate_monotone_triangles(n)
        .iter()
        .map(monotone_to_asm)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagonalFlavor {
    /// Weakly increasing.
    Monotone,
    /// Rises by at most one per step.
    Magog,
}

/// `x_1..x_n` with `i <= x_i <= n` plus the flavor's step condition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DiagonalSequence {
    values: Vec<u32>,
    #[serde(skip)]
    flavor: DiagonalFlavor,
}

impl DiagonalSequence {
    pub fn new(values: Vec<u32>, flavor: DiagonalFlavor) -> Option<Self> {
        is_valid_diagonal(&values, flavor).then_some(Self { values, flavor })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn flavor(&self) -> DiagonalFlavor {
        self.flavor
    }
}

impl fmt::Display for DiagonalSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return f.write_str("∅");
        }
        let s: Vec<String> = self.values.iter().map(u32::to_string).collect();
        f.write_str(&s.join(" "))
    }
}

impl PartialOrd for DiagonalFlavor {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DiagonalFlavor {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (*self as u8).cmp(&(*other as u8))
    }
}

pub fn is_valid_diagonal(values: &[u32], flavor: DiagonalFlavor) -> bool {
    let n = values.len() as u32;
    let bounds = values
        .iter()
        .enumerate()
        .all(|(i, &x)| (i as u32) < x && x <= n);
    let steps = values.windows(2).all(|w| match flavor {
        DiagonalFlavor::Monotone => w[0] <= w[1],
        DiagonalFlavor::Magog => w[1] <= w[0] + 1,
    });
    bounds && steps
}

/// All diagonal sequences of length `n` and the given flavor, lexicographic.
pub fn enumerate_diagonals(n: u32, flavor: DiagonalFlavor) -> Vec<DiagonalSequence> {
    fn rec(n: u32, flavor: DiagonalFlavor, cur: &mut Vec<u32>, out: &mut Vec<DiagonalSequence>) {
        let i = cur.len() as u32 + 1;
        if i > n {
            out.push(DiagonalSequence {
                values: cur.clone(),
                flavor,
            });
            return;
        }
        let (mut lo, mut hi) = (i, n);
        if let Some(&prev) = cur.last() {
            match flavor {
                DiagonalFlavor::Monotone => lo = lo.max(prev),
                DiagonalFlavor::Magog => hi = hi.min(prev + 1),
            }
        }
        for x in lo..=hi {
            cur.push(x);
            rec(n, flavor, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, flavor, &mut Vec::new(), &mut out);
    out
}

/// A totally symmetric self-complementary plane partition in the `2n`-cube,
/// stored as its `2n x 2n` height array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TsscppBox {
    heights: Vec<Vec<u32>>,
    n: u32,
}

impl TsscppBox {
    pub fn heights(&self) -> &[Vec<u32>] {
        &self.heights
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Pads ragged rows (as printed, with zero heights omitted) to `2n`.
    pub fn pad_ragged(rows: &[Vec<u32>], n: u32) -> Vec<Vec<u32>> {
        let side = 2 * n as usize;
        let mut out: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.resize(side.max(r.len()), 0);
                r
            })
            .collect();
        while out.len() < side {
            out.push(vec![0; side]);
        }
        out
    }
}

impl fmt::Display for TsscppBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = (2 * self.n).to_string().len();
        for (i, row) in self.heights.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>w$}")).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

fn filled(h: &[Vec<u32>], i: usize, j: usize, k: usize) -> bool {
    // 0-based cell (i, j, k) is filled iff k < h[i][j]
    (k as u32) < h[i][j]
}

pub fn validate_tsscpp(heights: &[Vec<u32>], n: u32) -> Result<TsscppBox, TsscppError> {
    let side = 2 * n as usize;
    let not_pp = |reason: String| Err(TsscppError::NotPlanePartition { side, reason });
    if heights.len() != side {
        return not_pp(format!("{} rows", heights.len()));
    }
    for (i, row) in heights.iter().enumerate() {
        if row.len() != side {
            return not_pp(format!("row {i} has {} entries", row.len()));
        }
        for (j, &v) in row.iter().enumerate() {
            if v as usize > side {
                return not_pp(format!("height {v} at ({i}, {j}) exceeds {side}"));
            }
            if j > 0 && v > row[j - 1] {
                return not_pp(format!("row {i} increases at column {j}"));
            }
            if i > 0 && v > heights[i - 1][j] {
                return not_pp(format!("column {j} increases at row {i}"));
            }
        }
    }
    for i in 0..side {
        for j in 0..side {
            for k in 0..side {
                if filled(heights, i, j, k) {
                    let perms = [(i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)];
                    if perms.iter().any(|&(a, b, c)| !filled(heights, a, b, c)) {
                        return Err(TsscppError::NotTotallySymmetric(i, j, k));
                    }
                }
            }
        }
    }
    for i in 0..side {
        for j in 0..side {
            if heights[i][j] + heights[side - 1 - i][side - 1 - j] != side as u32 {
                return Err(TsscppError::NotSelfComplementary(i, j));
            }
        }
    }
    Ok(TsscppBox {
        heights: heights.to_vec(),
        n,
    })
}

pub fn enumerate_tsscpps(n: u32) -> Result<Vec<TsscppBox>, TsscppError> {
    enumerate_tsscpps_capped(n, DEFAULT_TSSCPP_CAP)
}

/// Backtracking over the cells on or above the diagonal in the first half
/// of the array (row-major); transposition and complementation fill in the
/// rest, and total symmetry is checked on each completed array.
pub fn enumerate_tsscpps_capped(n: u32, cap: u32) -> Result<Vec<TsscppBox>, TsscppError> {
    if n > cap {
        return Err(TsscppError::OrderTooLarge { order: n, cap });
    }
    let side = 2 * n as usize;
    let mut h = vec![vec![u32::MAX; side]; side];
    let mut out = Vec::new();

    fn place(h: &mut [Vec<u32>], side: usize, i: usize, j: usize, v: u32) -> bool {
        // sets (i,j), its transpose, and both complements; false on conflict
        let cells = [
            (i, j, v),
            (j, i, v),
            (side - 1 - i, side - 1 - j, side as u32 - v),
            (side - 1 - j, side - 1 - i, side as u32 - v),
        ];
        for &(a, b, x) in &cells {
            if h[a][b] != u32::MAX && h[a][b] != x {
                return false;
            }
        }
        for &(a, b, x) in &cells {
            h[a][b] = x;
        }
        true
    }

    fn rec(h: &mut Vec<Vec<u32>>, side: usize, idx: usize, n: u32, out: &mut Vec<TsscppBox>) {
        if idx == side * side {
            if let Ok(b) = validate_tsscpp(h, n) {
                out.push(b);
            }
            return;
        }
        let (i, j) = (idx / side, idx % side);
        let upper = [
            if i > 0 { h[i - 1][j] } else { side as u32 },
            if j > 0 { h[i][j - 1] } else { side as u32 },
        ]
        .into_iter()
        .min()
        .unwrap_or(side as u32);
        if h[i][j] != u32::MAX {
            if h[i][j] <= upper {
                rec(h, side, idx + 1, n, out);
            }
            return;
        }
        for v in (0..=upper).rev() {
            let saved = h.clone();
            if place(h, side, i, j, v) {
                rec(h, side, idx + 1, n, out);
            }
            *h = saved;
        }
    }

    rec(&mut h, side, 0, n, &mut out);
    Ok(out)
}

//! The four Catalan generating trees and a level-by-level shape comparison.
//!
//! * abstract: a node in sibling position `p` has `p + 1` children; the root
//!   has one.
//! * perm: West's tree on 231-avoiding permutations, inserting the new
//!   maximum just left of each left-to-right maximum and at the end.
//! * path: the three-case rule on DPP paths.
//! * dpp: the same tree read directly on Catalan DPPs.
//!
//! Sibling lists are always stored left to right.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::catalan::{catalan_number, is_231_avoiding, CatalanDpp, DppPath, Permutation};

/// Default deepest level `build_level` will expand.
pub const DEFAULT_TREE_CAP: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("permutation {0} contains 231")]
    Not231Avoiding(String),
    #[error("lr_maxima of the empty permutation")]
    EmptyPermutation,
    #[error("invalid DPP path: {0}")]
    InvalidPath(String),
    #[error("invalid Catalan DPP: {0}")]
    InvalidCatalanDpp(String),
    #[error("depth {depth} exceeds the cap {cap}")]
    DepthTooLarge { depth: u32, cap: u32 },
    #[error("unknown tree {0:?} (expected abstract, perm, path or dpp)")]
    UnknownTree(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TreeKind {
    Abstract,
    Perm,
    Path,
    Dpp,
}

impl TreeKind {
    pub const ALL: [TreeKind; 4] = [Self::Abstract, Self::Perm, Self::Path, Self::Dpp];

    pub fn name(self) -> &'static str {
        match self {
            Self::Abstract => "abstract",
            Self::Perm => "perm",
            Self::Path => "path",
            Self::Dpp => "dpp",
        }
    }

    pub fn root(self) -> TreeLabel {
        match self {
            Self::Abstract => TreeLabel::Abstract { child_count: 1 },
            Self::Perm => TreeLabel::Perm(Permutation::empty()),
            Self::Path => TreeLabel::Path {
                path: DppPath::empty(0),
                has_parent: false,
            },
            Self::Dpp => TreeLabel::Dpp {
                dpp: CatalanDpp::empty(0),
                has_parent: false,
            },
        }
    }
}

impl fmt::Display for TreeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TreeKind {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, TreeError> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| TreeError::UnknownTree(s.to_string()))
    }
}

/// A node label in one of the four trees.
///
/// `has_parent` is tree-position state: only the root `∅` lacks a parent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TreeLabel {
    Abstract { child_count: u32 },
    Perm(Permutation),
    Path { path: DppPath, has_parent: bool },
    Dpp { dpp: CatalanDpp, has_parent: bool },
}

impl TreeLabel {
    pub fn children(&self) -> Vec<TreeLabel> {
        match self {
            Self::Abstract { child_count } => {
                // the k children sit in positions 1..=k and so have 2..=k+1 children
                (2..=child_count + 1)
                    .map(|c| Self::Abstract { child_count: c })
                    .collect()
            }
            Self::Perm(p) => perm_children(p)
                .expect("tree labels are 231-avoiding")
                .into_iter()
                .map(Self::Perm)
                .collect(),
            Self::Path { path, has_parent } => path_children(path, *has_parent)
                .expect("tree labels are valid paths")
                .into_iter()
                .map(|path| Self::Path {
                    path,
                    has_parent: true,
                })
                .collect(),
            Self::Dpp { dpp, has_parent } => dpp_children(dpp, *has_parent)
                .expect("tree labels are valid Catalan DPPs")
                .into_iter()
                .map(|dpp| Self::Dpp {
                    dpp,
                    has_parent: true,
                })
                .collect(),
        }
    }

    /// Number of children, without materializing them.
    pub fn child_count(&self) -> usize {
        match self {
            Self::Abstract { child_count } => *child_count as usize,
            Self::Perm(p) => lr_maxima(p).map_or(1, |k| k + 1),
            Self::Path { path, has_parent } => path_child_count(path, *has_parent),
            Self::Dpp { dpp, has_parent } => match dpp.parts() {
                [] => 1 + usize::from(*has_parent),
                [a] => *a as usize + 1,
                [a, b, ..] => (a + 1 - b) as usize,
            },
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Self::Abstract { child_count } => serde_json::json!(child_count),
            Self::Perm(p) => serde_json::json!(p.values()),
            Self::Path { path, .. } => serde_json::json!(path.steps()),
            Self::Dpp { dpp, .. } => serde_json::json!(dpp.parts()),
        }
    }
}

impl fmt::Display for TreeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Abstract { child_count } => write!(f, "{child_count}"),
            Self::Perm(p) => write!(f, "{p}"),
            Self::Path { path, .. } => write!(f, "{path}"),
            Self::Dpp { dpp, .. } => write!(f, "{dpp}"),
        }
    }
}

/// Child counts of the children of a node in the abstract tree.
///
/// The node in sibling position `p` has `p + 1` children, which occupy
/// positions `1..=p+1` and so themselves have `2..=p+2` children. The root
/// has a single child (in position 1, hence with 2 children).
pub fn abstract_children(position_from_left: u32, is_root: bool) -> Vec<u32> {
    let k = if is_root { 1 } else { position_from_left + 1 };
    (1..=k).map(|p| p + 1).collect()
}

/// Number of left-to-right maxima.
pub fn lr_maxima(p: &Permutation) -> Result<usize, TreeError> {
    if p.is_empty() {
        return Err(TreeError::EmptyPermutation);
    }
    let mut best = 0;
    Ok(p.values()
        .iter()
        .filter(|&&v| {
            let is_max = v > best;
            best = best.max(v);
            is_max
        })
        .count())
}

/// West's rule: insert `n + 1` immediately left of each left-to-right
/// maximum, then at the end, emitting children left to right.
pub fn perm_children(p: &Permutation) -> Result<Vec<Permutation>, TreeError> {
    if !is_231_avoiding(p) {
        return Err(TreeError::Not231Avoiding(p.to_string()));
    }
    let vals = p.values();
    let new = vals.len() as u32 + 1;
    let mut best = 0;
    let mut slots = Vec::new();
    for (i, &v) in vals.iter().enumerate() {
        if v > best {
            slots.push(i);
            best = v;
        }
    }
    slots.push(vals.len());
    Ok(slots
        .into_iter()
        .map(|i| {
            let mut v = vals.to_vec();
            v.insert(i, new);
            Permutation::new(v).expect("insertion of the new maximum")
        })
        .collect())
}

fn path_child_count(p: &DppPath, has_parent: bool) -> usize {
    let steps = p.steps();
    if steps.is_empty() {
        return 1 + usize::from(has_parent);
    }
    match steps.iter().position(|&s| s == -1) {
        // the inserted -1 starts at index f + 1 and may rest at any of 1..=f+1
        Some(f) => f + 1,
        None => steps.len() + 2,
    }
}

/// Children of a DPP path, left to right.
///
/// * `∅` has children `[∅]` at the root and `[∅, 1]` elsewhere.
/// * With a `-1` present, the rightmost child inserts `1 -1` just before the
///   first `-1`; each sibling to its left moves that new `-1` one place
///   further left, stopping before it would lead the word.
/// * With no `-1`, the rightmost child appends a `1`; the next appends a
///   `-1` to that, and the rest move the `-1` left as far as legal.
pub fn path_children(p: &DppPath, has_parent: bool) -> Result<Vec<DppPath>, TreeError> {
    let steps = p.steps();
    let wide: Vec<i64> = steps.iter().map(|&s| i64::from(s)).collect();
    crate::catalan::validate_path(&wide, p.order())
        .map_err(|e| TreeError::InvalidPath(e.to_string()))?;
    let order = p.order() + 1;
    if steps.is_empty() {
        let mut out = vec![DppPath::empty(order)];
        if has_parent {
            out.push(path_with(vec![1], order));
        }
        return Ok(out);
    }
    let mut right_to_left = Vec::new();
    // (word with the moving -1 at `start`, index of that -1)
    let (base, start) = match steps.iter().position(|&s| s == -1) {
        Some(f) => {
            let mut w = steps.to_vec();
            w.splice(f..f, [1, -1]);
            (w, f + 1)
        }
        None => {
            let mut w = steps.to_vec();
            w.push(1);
            right_to_left.push(path_with(w.clone(), order));
            let idx = w.len();
            w.push(-1);
            (w, idx)
        }
    };
    let mut w = base;
    let mut at = start;
    loop {
        right_to_left.push(path_with(w.clone(), order));
        if at <= 1 {
            break;
        }
        w.swap(at - 1, at);
        at -= 1;
    }
    right_to_left.reverse();
    Ok(right_to_left)
}

fn path_with(steps: Vec<i8>, order: u32) -> DppPath {
    let wide: Vec<i64> = steps.iter().map(|&s| i64::from(s)).collect();
    crate::catalan::validate_path(&wide, order).expect("children of valid paths are valid")
}

/// Inverse of the child relation: `∅` maps to `∅`; a word with no `-1`
/// loses a `1`; otherwise the leftmost `1` and leftmost `-1` are removed.
/// The parent keeps the child's order bound minus one.
pub fn path_parent(p: &DppPath) -> DppPath {
    let order = p.order().saturating_sub(1);
    let mut steps = p.steps().to_vec();
    if steps.is_empty() {
        return DppPath::empty(order);
    }
    match steps.iter().position(|&s| s == -1) {
        None => {
            steps.pop();
        }
        Some(m) => {
            let one = steps
                .iter()
                .position(|&s| s == 1)
                .expect("nonempty paths start with 1");
            steps.remove(m);
            steps.remove(one);
        }
    }
    path_with(steps, order)
}

/// Children of a Catalan DPP, left to right: `(a+1) x a_2 ... a_l` for `x`
/// from `a` down to `a_2`. A single entry `a` has `a_2` taken as 0, with
/// `x = 0` meaning nothing is inserted; `∅` follows the path rule.
pub fn dpp_children(c: &CatalanDpp, has_parent: bool) -> Result<Vec<CatalanDpp>, TreeError> {
    let parts = c.parts();
    let checked = CatalanDpp::new(parts.to_vec(), c.order())
        .map_err(|e| TreeError::InvalidCatalanDpp(e.to_string()))?;
    let order = checked.order() + 1;
    let Some(&a) = parts.first() else {
        let mut out = vec![CatalanDpp::empty(order)];
        if has_parent {
            out.push(CatalanDpp::new(vec![2], order.max(2)).expect("2 is Catalan"));
        }
        return Ok(out);
    };
    let low = parts.get(1).copied().unwrap_or(0);
    Ok((low..=a)
        .rev()
        .map(|x| {
            let mut child = Vec::with_capacity(parts.len() + 1);
            child.push(a + 1);
            if x > 0 {
                child.push(x);
            }
            child.extend_from_slice(&parts[1..]);
            CatalanDpp::new(child, order).expect("children of Catalan DPPs are Catalan")
        })
        .collect())
}

/// One node of a materialized level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelNode {
    pub label: TreeLabel,
    /// Index of the parent in the previous level (`None` at the root).
    pub parent: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeLevel {
    pub depth: u32,
    pub nodes: Vec<LevelNode>,
}

impl TreeLevel {
    pub fn root(kind: TreeKind) -> Self {
        Self {
            depth: 0,
            nodes: vec![LevelNode {
                label: kind.root(),
                parent: None,
            }],
        }
    }

    /// The next level, siblings grouped by parent in parent order.
    pub fn expand(&self) -> Self {
        let nodes = self
            .nodes
            .iter()
            .enumerate()
            .flat_map(|(i, n)| {
                n.label.children().into_iter().map(move |label| LevelNode {
                    label,
                    parent: Some(i),
                })
            })
            .collect();
        Self {
            depth: self.depth + 1,
            nodes,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = &TreeLabel> {
        self.nodes.iter().map(|n| &n.label)
    }

    pub fn child_counts(&self) -> Vec<usize> {
        self.labels().map(TreeLabel::child_count).collect()
    }
}

/// All levels `0..=depth`, breadth first.
pub fn build_levels(kind: TreeKind, depth: u32, cap: u32) -> Result<Vec<TreeLevel>, TreeError> {
    if depth > cap {
        return Err(TreeError::DepthTooLarge { depth, cap });
    }
    let mut levels = vec![TreeLevel::root(kind)];
    for _ in 0..depth {
        let next = levels.last().expect("root level").expand();
        levels.push(next);
    }
    Ok(levels)
}

pub fn build_level(kind: TreeKind, depth: u32) -> Result<TreeLevel, TreeError> {
    build_level_capped(kind, depth, DEFAULT_TREE_CAP)
}

pub fn build_level_capped(kind: TreeKind, depth: u32, cap: u32) -> Result<TreeLevel, TreeError> {
    if depth > cap {
        return Err(TreeError::DepthTooLarge { depth, cap });
    }
    let mut level = TreeLevel::root(kind);
    for _ in 0..depth {
        level = level.expand();
    }
    Ok(level)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    /// Index within the level of the first differing node.
    pub index: usize,
    pub tree: TreeKind,
    pub expected: usize,
    pub found: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    pub depth: u32,
    pub catalan: String,
    /// Level size per tree, in `TreeKind::ALL` order.
    pub sizes: Vec<usize>,
    pub passed: bool,
    /// First child-count disagreement against the abstract tree.
    pub mismatch: Option<Mismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsomorphismReport {
    pub depth_cap: u32,
    pub levels: Vec<LevelReport>,
}

impl IsomorphismReport {
    pub fn passed(&self) -> bool {
        self.levels.iter().all(|l| l.passed)
    }
}

/// Compares, at every depth up to `depth_cap`, the sibling-order sequence of
/// child counts across the four trees, and each level size against `C_n`.
pub fn check_isomorphism(depth_cap: u32) -> IsomorphismReport {
    let mut levels: Vec<TreeLevel> = TreeKind::ALL.iter().map(|&k| TreeLevel::root(k)).collect();
    let mut reports = Vec::new();
    for depth in 0..=depth_cap {
        if depth > 0 {
            levels = levels.iter().map(TreeLevel::expand).collect();
        }
        let catalan = catalan_number(depth);
        let sizes: Vec<usize> = levels.iter().map(TreeLevel::len).collect();
        let counts: Vec<Vec<usize>> = levels.iter().map(TreeLevel::child_counts).collect();
        let reference = &counts[0];
        let mut mismatch = None;
        for (t, seq) in counts.iter().enumerate().skip(1) {
            let first_diff = reference
                .iter()
                .zip(seq)
                .position(|(a, b)| a != b)
                .or_else(|| (reference.len() != seq.len()).then(|| reference.len().min(seq.len())));
            if let Some(index) = first_diff {
                mismatch = Some(Mismatch {
                    index,
                    tree: TreeKind::ALL[t],
                    expected: reference.get(index).copied().unwrap_or(0),
                    found: seq.get(index).copied().unwrap_or(0),
                });
                break;
            }
        }
        let sizes_ok = sizes.iter().all(|&s| BigUint::from(s) == catalan);
        reports.push(LevelReport {
            depth,
            catalan: catalan.to_string(),
            sizes,
            passed: sizes_ok && mismatch.is_none(),
            mismatch,
        });
    }
    IsomorphismReport {
        depth_cap,
        levels: reports,
    }
}

/// Graphviz rendering of levels `0..=depth`. Node ids are `d{depth}_{index}`.
pub fn to_dot(kind: TreeKind, levels: &[TreeLevel]) -> String {
    let mut out = format!("digraph {} {{\n  node [shape=plaintext];\n", kind.name());
    for level in levels {
        for (i, node) in level.nodes.iter().enumerate() {
            let label = node.label.to_string().replace('"', "\\\"");
            out.push_str(&format!(
                "  d{}_{} [label=\"{}\"];\n",
                level.depth, i, label
            ));
            if let Some(p) = node.parent {
                out.push_str(&format!(
                    "  d{}_{} -> d{}_{};\n",
                    level.depth - 1,
                    p,
                    level.depth,
                    i
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

//! Invariant suites: each check is an exact comparison over every object up
//! to a requested order, clamped to the enumeration caps.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::asm::{
    asm_to_monotone, enumerate_asms_capped, enumerate_diagonals, enumerate_tsscpps_capped,
    is_valid_diagonal, monotone_to_asm, DiagonalFlavor, DEFAULT_ASM_CAP, DEFAULT_TSSCPP_CAP,
};
use crate::catalan::{
    catalan_number, dpp_to_path, enumerate_231_avoiding, enumerate_catalan_dpps, enumerate_paths,
    path_to_dpp, CatalanDpp,
};
use crate::dpp::{
    count_dpps, dpp_generating_polynomial_capped, enumerate_dpps, product_formula,
    q_product_formula, DEFAULT_DPP_CAP,
};
use crate::trees::{
    check_isomorphism, path_children, path_parent, TreeKind, TreeLabel, TreeLevel, DEFAULT_TREE_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub dpp_order: u32,
    pub tree_depth: u32,
    pub asm_order: u32,
    pub tsscpp_n: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            dpp_order: DEFAULT_DPP_CAP,
            tree_depth: DEFAULT_TREE_CAP,
            asm_order: DEFAULT_ASM_CAP,
            tsscpp_n: DEFAULT_TSSCPP_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Counts,
    Bijection,
    Trees,
    QPoly,
    CrossFamily,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Self::Counts,
        Self::Bijection,
        Self::Trees,
        Self::QPoly,
        Self::CrossFamily,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Counts => "counts",
            Self::Bijection => "bijection",
            Self::Trees => "trees",
            Self::QPoly => "qpoly",
            Self::CrossFamily => "cross-family",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn eq<T: PartialEq + fmt::Display>(name: impl Into<String>, got: T, want: T) -> Self {
        Self {
            name: name.into(),
            passed: got == want,
            detail: format!("got {got}, expected {want}"),
        }
    }

    fn holds(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {}", self.name, self.detail)
    }
}

pub fn run_suite(suite: Suite, max_order: u32, caps: Caps) -> Vec<Check> {
    match suite {
        Suite::Counts => counts(max_order, caps),
        Suite::Bijection => bijection(max_order),
        Suite::Trees => trees(max_order.min(caps.tree_depth)),
        Suite::QPoly => qpoly(max_order.min(caps.dpp_order)),
        Suite::CrossFamily => cross_family(max_order, caps),
    }
}

fn counts(max_order: u32, caps: Caps) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 0..=max_order.min(caps.dpp_order) {
        out.push(Check::eq(
            format!("dpp count n={n}"),
            count_dpps(n),
            product_formula(n),
        ));
    }
    for n in 0..=max_order {
        let c = catalan_number(n);
        out.push(Check::eq(
            format!("catalan dpp count n={n}"),
            BigUint::from(enumerate_catalan_dpps(n).count()),
            c.clone(),
        ));
        out.push(Check::eq(
            format!("path count n={n}"),
            BigUint::from(enumerate_paths(n).count()),
            c.clone(),
        ));
        out.push(Check::eq(
            format!("231-avoiding count n={n}"),
            BigUint::from(enumerate_231_avoiding(n).len()),
            c,
        ));
    }
    for n in 0..=max_order.min(caps.dpp_order) {
        let direct: Vec<CatalanDpp> = enumerate_catalan_dpps(n).collect();
        let filtered: Vec<CatalanDpp> = enumerate_dpps(n)
            .filter_map(|d| CatalanDpp::try_from(&d).ok())
            .collect();
        out.push(Check::holds(
            format!("catalan filter route n={n}"),
            direct == filtered,
            format!("{} direct, {} filtered", direct.len(), filtered.len()),
        ));
    }
    out
}

fn bijection(max_order: u32) -> Vec<Check> {
    let mut out = Vec::new();
    let sample = CatalanDpp::new(vec![4, 3, 2], 4).expect("4 3 2 is Catalan");
    out.push(Check::eq(
        "4 3 2 maps to 1-11-11",
        dpp_to_path(&sample).to_string(),
        "1-11-11".into(),
    ));
    for n in 0..=max_order {
        let dpps: Vec<CatalanDpp> = enumerate_catalan_dpps(n).collect();
        let there_and_back = dpps.iter().all(|c| path_to_dpp(&dpp_to_path(c)) == *c);
        out.push(Check::holds(
            format!("path_to_dpp . dpp_to_path = id, n={n}"),
            there_and_back,
            format!("{} objects", dpps.len()),
        ));
        let paths: Vec<_> = enumerate_paths(n).collect();
        let back_and_there = paths.iter().all(|p| dpp_to_path(&path_to_dpp(p)) == *p);
        let distinct: HashSet<_> = paths.iter().collect();
        out.push(Check::holds(
            format!("dpp_to_path . path_to_dpp = id, n={n}"),
            back_and_there && distinct.len() == paths.len(),
            format!("{} objects", paths.len()),
        ));
        let transport = dpps.iter().filter(|c| !c.is_empty()).all(|c| {
            let p = dpp_to_path(c);
            p.ones() + 1 == c.parts()[0] as usize && p.minus_ones() + 1 == c.parts().len()
        });
        out.push(Check::holds(
            format!("parameter transport n={n}"),
            transport,
            "ones = a11 - 1, minus-ones = length - 1",
        ));
    }
    out
}

fn label_set(level: &TreeLevel) -> BTreeSet<String> {
    level.labels().map(ToString::to_string).collect()
}

fn trees(depth_cap: u32) -> Vec<Check> {
    let mut out = Vec::new();
    let report = check_isomorphism(depth_cap);
    for l in &report.levels {
        out.push(Check::holds(
            format!("tree shapes agree at depth {}", l.depth),
            l.passed,
            match &l.mismatch {
                None => format!("sizes {:?}, C = {}", l.sizes, l.catalan),
                Some(m) => format!(
                    "{} tree differs at index {}: {} vs {}",
                    m.tree, m.index, m.found, m.expected
                ),
            },
        ));
    }
    let mut perm = TreeLevel::root(TreeKind::Perm);
    let mut path = TreeLevel::root(TreeKind::Path);
    let mut dpp = TreeLevel::root(TreeKind::Dpp);
    for depth in 0..=depth_cap {
        if depth > 0 {
            perm = perm.expand();
            path = path.expand();
            dpp = dpp.expand();
        }
        let perms: BTreeSet<String> = enumerate_231_avoiding(depth)
            .iter()
            .map(ToString::to_string)
            .collect();
        let paths: BTreeSet<String> = enumerate_paths(depth).map(|p| p.to_string()).collect();
        let cats: BTreeSet<String> = enumerate_catalan_dpps(depth)
            .map(|c| c.to_string())
            .collect();
        out.push(Check::holds(
            format!("labeled levels equal their families at depth {depth}"),
            label_set(&perm) == perms && label_set(&path) == paths && label_set(&dpp) == cats,
            format!("{} labels", perms.len()),
        ));
        let natural = dpp.labels().zip(path.labels()).all(|(d, p)| match (d, p) {
            (TreeLabel::Dpp { dpp, .. }, TreeLabel::Path { path, .. }) => dpp_to_path(dpp) == *path,
            _ => false,
        });
        out.push(Check::holds(
            format!("dpp tree maps onto path tree at depth {depth}"),
            natural && dpp.len() == path.len(),
            "node-wise dpp_to_path in sibling order",
        ));
        out.push(parent_check(&path, depth));
    }
    out
}

/// Every node's parent map lands on its actual parent, and siblings gain
/// exactly one child each step to the right.
fn parent_check(level: &TreeLevel, depth: u32) -> Check {
    let mut ok = true;
    let mut seen = HashSet::new();
    for (i, node) in level.nodes.iter().enumerate() {
        let TreeLabel::Path { path, has_parent } = &node.label else {
            return Check::holds(
                format!("path parents at depth {depth}"),
                false,
                "not a path level",
            );
        };
        ok &= seen.insert(path.clone());
        if depth > 0 {
            let parent = path_parent(path);
            let regenerated = path_children(&parent, depth > 1)
                .map(|kids| kids.contains(path))
                .unwrap_or(false);
            ok &= regenerated && *has_parent;
        }
        if let Some(next) = level.nodes.get(i + 1) {
            if next.parent == node.parent && depth > 0 {
                ok &= next.label.child_count() == node.label.child_count() + 1;
            }
        }
    }
    Check::holds(
        format!("path parents and sibling law at depth {depth}"),
        ok,
        format!("{} nodes", level.len()),
    )
}

fn qpoly(max_order: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 0..=max_order {
        let brute = dpp_generating_polynomial_capped(n, max_order);
        let closed = q_product_formula(n);
        match (brute, closed) {
            (Ok(b), Ok(c)) => {
                out.push(Check::holds(
                    format!("q-polynomial n={n}"),
                    b == c && b.eval_at_one() == product_formula(n),
                    format!("{b}"),
                ));
            }
            (b, c) => out.push(Check::holds(
                format!("q-polynomial n={n}"),
                false,
                format!("{b:?} / {c:?}"),
            )),
        }
    }
    out
}

fn cross_family(max_order: u32, caps: Caps) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 0..=max_order.min(caps.asm_order) {
        let asms = enumerate_asms_capped(n, caps.asm_order).unwrap_or_default();
        out.push(Check::eq(
            format!("asm count n={n}"),
            BigUint::from(asms.len()),
            product_formula(n),
        ));
        let roundtrip = asms
            .iter()
            .all(|a| monotone_to_asm(&asm_to_monotone(a)) == *a);
        let distinct: HashSet<_> = asms.iter().collect();
        out.push(Check::holds(
            format!("asm <-> monotone triangle roundtrip n={n}"),
            roundtrip && distinct.len() == asms.len(),
            format!("{} matrices", asms.len()),
        ));
        let diagonals_ok = asms.iter().all(|a| {
            is_valid_diagonal(
                &asm_to_monotone(a).nw_se_diagonal(),
                DiagonalFlavor::Monotone,
            )
        });
        out.push(Check::holds(
            format!("triangle diagonals are monotone sequences n={n}"),
            diagonals_ok,
            "",
        ));
    }
    for n in 0..=max_order {
        let c = catalan_number(n);
        for flavor in [DiagonalFlavor::Monotone, DiagonalFlavor::Magog] {
            out.push(Check::eq(
                format!("{flavor:?} diagonal count n={n}").to_lowercase(),
                BigUint::from(enumerate_diagonals(n, flavor).len()),
                c.clone(),
            ));
        }
    }
    for n in 0..=max_order.min(caps.tsscpp_n) {
        let boxes = enumerate_tsscpps_capped(n, caps.tsscpp_n).unwrap_or_default();
        out.push(Check::eq(
            format!("tsscpp count n={n}"),
            BigUint::from(boxes.len()),
            product_formula(n),
        ));
    }
    out
}

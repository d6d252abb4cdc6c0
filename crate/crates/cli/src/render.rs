//! Output formatting for the enumerate, count and tree subcommands.

use std::io::{self, Write};

use catdpp::asm::{enumerate_asms_capped, enumerate_tsscpps_capped};
use catdpp::trees::{build_levels, to_dot};
use catdpp::verify::Caps;
use catdpp::{
    catalan_number, enumerate_231_avoiding, enumerate_catalan_dpps, enumerate_diagonals,
    enumerate_dpps, enumerate_paths, product_formula, DiagonalFlavor, TreeKind,
};
use num_bigint::BigUint;
use serde::Serialize;

use crate::{Family, Format, TreeFormat};

/// Writes one object per record. Multi-line ASCII objects are separated by
/// a blank line; JSON ends with a `{"count":N}` summary.
struct Sink<'a, W: Write> {
    out: &'a mut W,
    format: Format,
    blocks: bool,
    count: u64,
}

impl<'a, W: Write> Sink<'a, W> {
    fn new(out: &'a mut W, format: Format, blocks: bool) -> Self {
        Self {
            out,
            format,
            blocks,
            count: 0,
        }
    }

    fn emit<T: Serialize>(&mut self, json: &T, ascii: impl FnOnce() -> String) -> io::Result<()> {
        match self.format {
            Format::Json => {
                serde_json::to_writer(&mut *self.out, json)?;
                writeln!(self.out)?;
            }
            Format::Ascii => {
                if self.blocks && self.count > 0 {
                    writeln!(self.out)?;
                }
                writeln!(self.out, "{}", ascii())?;
            }
            Format::Count => {}
        }
        self.count += 1;
        Ok(())
    }

    fn finish(self) -> io::Result<()> {
        match self.format {
            Format::Json => writeln!(self.out, "{{\"count\":{}}}", self.count),
            Format::Count => writeln!(self.out, "{}", self.count),
            Format::Ascii => Ok(()),
        }
    }
}

fn flavor(family: Family) -> DiagonalFlavor {
    if family == Family::MagogDiag {
        DiagonalFlavor::Magog
    } else {
        DiagonalFlavor::Monotone
    }
}

pub fn enumerate(
    out: &mut impl Write,
    family: Family,
    order: u32,
    format: Format,
    caps: Caps,
) -> anyhow::Result<()> {
    let blocks = matches!(family, Family::Dpp | Family::Asm | Family::Tsscpp);
    let mut sink = Sink::new(out, format, blocks);
    match family {
        Family::Dpp => {
            for d in enumerate_dpps(order) {
                sink.emit(&d.to_record(), || d.shifted_layout())?;
            }
        }
        Family::CatalanDpp => {
            for c in enumerate_catalan_dpps(order) {
                sink.emit(&c, || c.to_string())?;
            }
        }
        Family::Path => {
            for p in enumerate_paths(order) {
                sink.emit(&p, || p.to_string())?;
            }
        }
        Family::Perm231 => {
            for p in enumerate_231_avoiding(order) {
                sink.emit(&p, || p.to_string())?;
            }
        }
        Family::Asm => {
            for a in enumerate_asms_capped(order, caps.asm_order)? {
                sink.emit(&a, || a.to_string())?;
            }
        }
        Family::MonoDiag | Family::MagogDiag => {
            for d in enumerate_diagonals(order, flavor(family)) {
                sink.emit(&d, || d.to_string())?;
            }
        }
        Family::Tsscpp => {
            for t in enumerate_tsscpps_capped(order, caps.tsscpp_n)? {
                sink.emit(&t, || t.to_string())?;
            }
        }
    }
    sink.finish()?;
    Ok(())
}

/// Prints count, formula and verdict; returns whether they agree.
pub fn count(out: &mut impl Write, family: Family, order: u32, caps: Caps) -> anyhow::Result<bool> {
    let (found, formula, name): (BigUint, BigUint, &str) = match family {
        Family::Dpp => (
            BigUint::from(enumerate_dpps(order).count()),
            product_formula(order),
            "product formula",
        ),
        Family::Asm => (
            BigUint::from(enumerate_asms_capped(order, caps.asm_order)?.len()),
            product_formula(order),
            "product formula",
        ),
        Family::Tsscpp => (
            BigUint::from(enumerate_tsscpps_capped(order, caps.tsscpp_n)?.len()),
            product_formula(order),
            "product formula",
        ),
        Family::CatalanDpp => (
            BigUint::from(enumerate_catalan_dpps(order).count()),
            catalan_number(order),
            "Catalan number",
        ),
        Family::Path => (
            BigUint::from(enumerate_paths(order).count()),
            catalan_number(order),
            "Catalan number",
        ),
        Family::Perm231 => (
            BigUint::from(enumerate_231_avoiding(order).len()),
            catalan_number(order),
            "Catalan number",
        ),
        Family::MonoDiag | Family::MagogDiag => (
            BigUint::from(enumerate_diagonals(order, flavor(family)).len()),
            catalan_number(order),
            "Catalan number",
        ),
    };
    let ok = found == formula;
    writeln!(out, "count: {found}")?;
    writeln!(out, "formula: {formula} ({name})")?;
    writeln!(out, "{}", if ok { "MATCH" } else { "MISMATCH" })?;
    Ok(ok)
}

pub fn tree(
    out: &mut impl Write,
    kind: TreeKind,
    depth: u32,
    cap: u32,
    format: TreeFormat,
) -> anyhow::Result<()> {
    let levels = build_levels(kind, depth, cap)?;
    match format {
        TreeFormat::Dot => out.write_all(to_dot(kind, &levels).as_bytes())?,
        TreeFormat::Json => {
            let mut total = 0usize;
            for level in &levels {
                for (i, node) in level.nodes.iter().enumerate() {
                    let line = serde_json::json!({
                        "depth": level.depth,
                        "index": i,
                        "parent": node.parent,
                        "label": node.label.to_json(),
                        "children": node.label.child_count(),
                    });
                    writeln!(out, "{line}")?;
                    total += 1;
                }
            }
            writeln!(out, "{{\"count\":{total}}}")?;
        }
        TreeFormat::Ascii => {
            // siblings bracketed together, in parent order
            for level in &levels {
                let mut groups: Vec<Vec<String>> = Vec::new();
                let mut prev = None;
                for node in &level.nodes {
                    if groups.is_empty() || node.parent != prev {
                        groups.push(Vec::new());
                        prev = node.parent;
                    }
                    groups
                        .last_mut()
                        .expect("group")
                        .push(node.label.to_string());
                }
                let rendered: Vec<String> = groups
                    .iter()
                    .map(|g| format!("[{}]", g.join(", ")))
                    .collect();
                writeln!(out, "{}: {}", level.depth, rendered.join(" "))?;
            }
        }
    }
    Ok(())
}

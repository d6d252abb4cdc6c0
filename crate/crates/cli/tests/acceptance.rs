//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.

use std::collections::{BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use catdpp::asm::enumerate_monotone_triangles;
use catdpp::catalan::is_catalan_dpp;
use catdpp::dpp::dpp_generating_polynomial_capped;
use catdpp::trees::build_level_capped;
use catdpp::{
    asm_to_monotone, catalan_number, check_isomorphism, count_dpps, dpp_children, dpp_to_path,
    enumerate_231_avoiding, enumerate_asms, enumerate_catalan_dpps, enumerate_diagonals,
    enumerate_dpps, enumerate_paths, enumerate_tsscpps, monotone_to_asm, path_children,
    path_parent, path_to_dpp, product_formula, q_product_formula, validate_asm, validate_tsscpp,
    CatalanDpp, DiagonalFlavor, QPolynomial, TreeKind, TreeLabel, TsscppBox,
};
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_catdpp"))
        .args(args)
        .output()
        .map_err(|e| format!("spawn: {e}"))?;
    ensure!(
        out.status.success(),
        "{args:?} exited {:?}",
        out.status.code()
    );
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn reference_listings() -> Outcome {
    let cases = [
        ("dpp", "3", "dpp_order3.txt"),
        ("catalan-dpp", "4", "catalan_dpp_order4.txt"),
        ("path", "4", "path_order4.txt"),
    ];
    let mut slowest = Duration::ZERO;
    for (family, order, file) in cases {
        let start = Instant::now();
        let got = cli(&[
            "enumerate",
            "--family",
            family,
            "--order",
            order,
            "--format",
            "ascii",
        ])?;
        slowest = slowest.max(start.elapsed());
        ensure!(
            got == golden(file),
            "{family} order {order} differs from {file}:\n{got}"
        );
    }
    ensure!(
        slowest < Duration::from_secs(1),
        "slowest run took {slowest:?}"
    );
    Ok(format!(
        "7 DPPs, 14 Catalan DPPs, 14 paths; slowest {slowest:.0?}"
    ))
}

fn counts_vs_formula() -> Outcome {
    let expected: [u32; 8] = [1, 1, 2, 7, 42, 429, 7436, 218348];
    for (n, &want) in expected.iter().enumerate() {
        let n = n as u32;
        let formula = product_formula(n);
        let counted = count_dpps(n);
        ensure!(formula == BigUint::from(want), "formula({n}) = {formula}");
        ensure!(
            counted == formula,
            "count({n}) = {counted}, formula {formula}"
        );
    }
    Ok("n = 0..7 up to 218348".into())
}

fn catalan_counts() -> Outcome {
    for n in 0..=12 {
        let direct = BigUint::from(enumerate_catalan_dpps(n).count());
        ensure!(direct == catalan_number(n), "direct n={n}: {direct}");
    }
    for n in 0..=8 {
        let filtered = BigUint::from(enumerate_dpps(n).filter(is_catalan_dpp).count());
        ensure!(filtered == catalan_number(n), "filtered n={n}: {filtered}");
    }
    Ok("direct n = 0..12, filtered n = 0..8".into())
}

fn bijection_roundtrips() -> Outcome {
    let mut total = 0usize;
    for n in 0..=10 {
        for c in enumerate_catalan_dpps(n) {
            let back = path_to_dpp(&dpp_to_path(&c));
            ensure!(back == c, "dpp {c} returns as {back}");
            total += 1;
        }
        for p in enumerate_paths(n) {
            let back = dpp_to_path(&path_to_dpp(&p));
            ensure!(back == p, "path {p} returns as {back}");
        }
    }
    let fwd = cli(&["map", "--from", "catalan-dpp", "--value", "4 3 2"])?;
    ensure!(fwd == "1-11-11\n", "4 3 2 maps to {fwd:?}");
    let back = cli(&["map", "--from", "path", "--value", "1-11-11"])?;
    ensure!(back == "4 3 2\n", "1-11-11 maps to {back:?}");
    Ok(format!("{total} objects each way, 4 3 2 <-> 1-11-11"))
}

fn label_set(kind: TreeKind, depth: u32) -> Result<BTreeSet<String>, String> {
    let level = build_level_capped(kind, depth, depth).map_err(|e| e.to_string())?;
    let labels: Vec<String> = level.labels().map(TreeLabel::to_string).collect();
    let set: BTreeSet<String> = labels.iter().cloned().collect();
    ensure!(
        set.len() == labels.len(),
        "{kind} level {depth} has duplicate labels"
    );
    Ok(set)
}

fn tree_isomorphism() -> Outcome {
    let report = check_isomorphism(10);
    if let Some(bad) = report.levels.iter().find(|l| !l.passed) {
        return Err(format!("depth {} failed: {bad:?}", bad.depth));
    }
    for n in 0..=10u32 {
        let perms: BTreeSet<String> = enumerate_231_avoiding(n)
            .iter()
            .map(ToString::to_string)
            .collect();
        let paths: BTreeSet<String> = enumerate_paths(n).map(|p| p.to_string()).collect();
        let dpps: BTreeSet<String> = enumerate_catalan_dpps(n).map(|c| c.to_string()).collect();
        ensure!(
            label_set(TreeKind::Perm, n)? == perms,
            "perm level {n} differs from family"
        );
        ensure!(
            label_set(TreeKind::Path, n)? == paths,
            "path level {n} differs from family"
        );
        ensure!(
            label_set(TreeKind::Dpp, n)? == dpps,
            "dpp level {n} differs from family"
        );
    }
    let sizes: Vec<String> = report.levels.iter().map(|l| l.catalan.clone()).collect();
    Ok(format!("depths 0..10, level sizes {}", sizes.join(",")))
}

fn child_rule() -> Outcome {
    let node = CatalanDpp::parse("6 4 2 2", 6).map_err(|e| e.to_string())?;
    let kids: BTreeSet<String> = dpp_children(&node, true)
        .map_err(|e| e.to_string())?
        .iter()
        .map(ToString::to_string)
        .collect();
    let want: BTreeSet<String> = ["7 4 4 2 2", "7 5 4 2 2", "7 6 4 2 2"]
        .map(String::from)
        .into();
    ensure!(kids == want, "children of 6 4 2 2: {kids:?}");

    // random root-to-node walks in the labeled tree
    let mut rng = StdRng::seed_from_u64(0x05ee_dd99);
    let mut checked = 0usize;
    for _ in 0..10_000 {
        let depth = rng.gen_range(0..=10u32);
        let mut label = TreeKind::Dpp.root();
        for _ in 0..depth {
            let kids = label.children();
            label = kids[rng.gen_range(0..kids.len())].clone();
        }
        let TreeLabel::Dpp { dpp, has_parent } = &label else {
            return Err("dpp tree produced a foreign label".into());
        };
        let kids = dpp_children(dpp, *has_parent).map_err(|e| e.to_string())?;
        if let [a, b, ..] = dpp.parts() {
            ensure!(
                kids.len() == (a + 1 - b) as usize,
                "{dpp}: {} children",
                kids.len()
            );
            checked += 1;
        }
        for k in &kids {
            let p = k.parts();
            ensure!(
                !dpp.parts().is_empty() || p.is_empty() || p == [2],
                "{dpp} has child {k}"
            );
            if let Some(&a) = dpp.parts().first() {
                ensure!(p[0] == a + 1, "{dpp} has child {k}");
                let low = dpp.parts().get(1).copied().unwrap_or(0);
                let x = if p.len() > dpp.parts().len() { p[1] } else { 0 };
                ensure!(low <= x && x <= a, "{dpp} has child {k}");
                ensure!(
                    p[p.len() - (dpp.parts().len() - 1)..] == dpp.parts()[1..],
                    "{dpp} has child {k}"
                );
            }
        }
    }
    Ok(format!(
        "6 4 2 2 example; {checked} sampled two-entry nodes"
    ))
}

fn q_statistic() -> Outcome {
    for n in 0..=5 {
        let brute = dpp_generating_polynomial_capped(n, 5).map_err(|e| e.to_string())?;
        let closed = q_product_formula(n).map_err(|e| e.to_string())?;
        ensure!(brute == closed, "n={n}: {brute} vs {closed}");
    }
    let p3 = QPolynomial::from_coeffs(vec![1u32, 0, 1, 1, 1, 1, 1, 0, 1]);
    ensure!(
        q_product_formula(3).map_err(|e| e.to_string())? == p3,
        "P3 mismatch"
    );
    Ok(format!("n = 0..5, P3 = {p3}"))
}

fn ragged(rows: &[&[u32]]) -> Vec<Vec<u32>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn cross_family() -> Outcome {
    for n in 0..=5 {
        let asms = enumerate_asms(n).map_err(|e| e.to_string())?;
        ensure!(
            BigUint::from(asms.len()) == product_formula(n),
            "ASM count n={n}: {}",
            asms.len()
        );
        for a in &asms {
            ensure!(
                &monotone_to_asm(&asm_to_monotone(a)) == a,
                "roundtrip failed for\n{a}"
            );
        }
        let diag: BTreeSet<Vec<u32>> = enumerate_monotone_triangles(n)
            .iter()
            .map(|t| t.nw_se_diagonal())
            .collect();
        let seqs: BTreeSet<Vec<u32>> = enumerate_diagonals(n, DiagonalFlavor::Monotone)
            .iter()
            .map(|d| d.values().to_vec())
            .collect();
        ensure!(diag == seqs, "monotone triangle diagonals differ at n={n}");
    }
    let fig5 = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
        [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
        [[0, 1, 0], [1, -1, 1], [0, 1, 0]],
        [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
        [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
        [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
    ];
    let want: BTreeSet<_> = fig5
        .iter()
        .map(|m| validate_asm(&m.map(|r| r.to_vec())).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let got: BTreeSet<_> = enumerate_asms(3)
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    ensure!(got == want, "3x3 ASMs differ from the reference set");

    for n in 0..=12 {
        for flavor in [DiagonalFlavor::Monotone, DiagonalFlavor::Magog] {
            let c = BigUint::from(enumerate_diagonals(n, flavor).len());
            ensure!(c == catalan_number(n), "{flavor:?} diagonals n={n}: {c}");
        }
    }

    let fig6: [&[&[u32]]; 7] = [
        &[
            &[6, 6, 6, 3, 3, 3],
            &[6, 6, 6, 3, 3, 3],
            &[6, 6, 6, 3, 3, 3],
            &[3, 3, 3],
            &[3, 3, 3],
            &[3, 3, 3],
        ],
        &[
            &[6, 6, 6, 4, 3, 3],
            &[6, 6, 6, 3, 3, 3],
            &[6, 6, 5, 3, 3, 2],
            &[4, 3, 3, 1],
            &[3, 3, 3],
            &[3, 3, 2],
        ],
        &[
            &[6, 6, 6, 5, 4, 3],
            &[6, 6, 5, 3, 3, 2],
            &[6, 5, 5, 3, 3, 1],
            &[5, 3, 3, 1, 1],
            &[4, 3, 3, 1],
            &[3, 2, 1],
        ],
        &[
            &[6, 6, 6, 5, 4, 3],
            &[6, 6, 5, 4, 3, 2],
            &[6, 5, 4, 3, 2, 1],
            &[5, 4, 3, 2, 1],
            &[4, 3, 2, 1],
            &[3, 2, 1],
        ],
        &[
            &[6, 6, 6, 4, 3, 3],
            &[6, 6, 6, 4, 3, 3],
            &[6, 6, 4, 3, 2, 2],
            &[4, 4, 3, 2],
            &[3, 3, 2],
            &[3, 3, 2],
        ],
        &[
            &[6, 6, 6, 5, 5, 3],
            &[6, 5, 5, 3, 3, 1],
            &[6, 5, 5, 3, 3, 1],
            &[5, 3, 3, 1, 1],
            &[5, 3, 3, 1, 1],
            &[3, 1, 1],
        ],
        &[
            &[6, 6, 6, 5, 5, 3],
            &[6, 5, 5, 4, 3, 1],
            &[6, 5, 4, 3, 2, 1],
            &[5, 4, 3, 2, 1],
            &[5, 3, 2, 1, 1],
            &[3, 1, 1],
        ],
    ];
    let mut want = BTreeSet::new();
    for rows in fig6 {
        let padded = TsscppBox::pad_ragged(&ragged(rows), 3);
        validate_tsscpp(&padded, 3).map_err(|e| format!("reference entry rejected: {e}"))?;
        want.insert(padded);
    }
    let got: BTreeSet<Vec<Vec<u32>>> = enumerate_tsscpps(3)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|b| b.heights().to_vec())
        .collect();
    ensure!(got.len() == 7, "{} TSSCPPs in the 6-box", got.len());
    ensure!(got == want, "6-box TSSCPPs differ from the reference set");
    Ok("ASMs n <= 5, 3x3 set, roundtrips, diagonals n <= 12, 7 TSSCPPs".into())
}

fn parent_map() -> Outcome {
    let mut total = 0usize;
    for n in 1..=10u32 {
        let upper: Vec<_> = enumerate_paths(n).collect();
        let lower: Vec<_> = enumerate_paths(n - 1).collect();
        let has_parent = n > 1;
        let mut produced: HashMap<String, usize> = HashMap::new();
        for q in &lower {
            for k in path_children(q, has_parent).map_err(|e| e.to_string())? {
                *produced.entry(k.to_string()).or_default() += 1;
            }
        }
        ensure!(
            produced.len() == upper.len(),
            "level {n}: {} distinct children",
            produced.len()
        );
        for p in &upper {
            let parent = catch_unwind(AssertUnwindSafe(|| path_parent(p)))
                .map_err(|_| format!("path_parent({p}) panicked"))?;
            ensure!(
                parent.order() == n - 1,
                "parent of {p} has order {}",
                parent.order()
            );
            let kids = path_children(&parent, has_parent).map_err(|e| e.to_string())?;
            ensure!(
                kids.contains(p),
                "{p} is not a child of its parent {parent}"
            );
            ensure!(
                produced.get(&p.to_string()) == Some(&1),
                "{p} produced {:?} times",
                produced.get(&p.to_string())
            );
            total += 1;
        }
    }
    Ok(format!(
        "{total} paths, each produced exactly once by its parent"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("reference listings", reference_listings),
        ("DPP count vs product formula", counts_vs_formula),
        ("Catalan DPP counts", catalan_counts),
        ("bijection roundtrips", bijection_roundtrips),
        ("generating tree isomorphism", tree_isomorphism),
        ("Catalan DPP child rule", child_rule),
        ("q-statistic", q_statistic),
        ("cross-family checks", cross_family),
        ("parent map", parent_map),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {} {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

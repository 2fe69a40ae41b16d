//! Acceptance run: one line per criterion, exact arithmetic throughout.
//!
//! A criterion that fails is printed as FAIL. The target itself succeeds
//! when the set of failing criteria is exactly [`EXPECTED_FAILURES`], each of
//! which comes with the counterexample that makes it unattainable. Any other
//! outcome, including an expected failure starting to pass, fails the run.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rbhopf::check::CheckReport;
use rbhopf::group::{catalog, catalog_group, enumerate_group_rb, GroupMap, GroupTable};
use rbhopf::hopf::{group_algebra, lift_group_map};
use rbhopf::matched_pair::{
    double_cross, matched_pair_check, mp_from_rb_with_report, right_action_displayed_form_check, MatchedPairData,
};
use rbhopf::projection::{
    c_pair_with_report, cmm_check, lemma_suite, phi_iso_with_report, pi_hom_with_report, proj_pair_check, rbp_operator,
};
use rbhopf::report::{verify_operator, Stage};
use rbhopf::rota_baxter::{derive_with_report, RBOperator};
use rbhopf::Error;
use serde_json::Value;

/// Criteria that cannot pass, with the reason.
const EXPECTED_FAILURES: &[(u32, &str)] = &[
    (
        4,
        "the displayed right-action closed form S(B̃(y₁)S_B(x₁)B̃(S_B(x₂)y₂)) differs from the \
         defining action, e.g. on ℚ[ℤ/3] with x ↦ 2x at x = 0, y = 1",
    ),
    (
        5,
        "the first displayed form of C̃ in the descendent-product chain swaps x and y, e.g. on \
         ℚ[ℤ/3] with x ↦ 2x",
    ),
    (
        6,
        "B = u∘ε runs the displayed right-action form, which gives y⁻² instead of 1 for x = e on \
         any group with an element of order above 2",
    ),
];

struct Outcome {
    passed: bool,
    detail: String,
}

fn within(limit: Duration, elapsed: Duration) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:.2?}, limit {limit:?}"))
    }
}

/// `f` with `f(g)f(h) = f(f(g)·h·f(g)⁻¹·g)`, tested over all `nⁿ` maps.
fn brute_force_operators(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    let mut f = vec![0usize; n];
    loop {
        let ok = (0..n).all(|a| {
            (0..n).all(|b| {
                let fa = f[a];
                let arg = g.mul(g.mul(g.mul(fa, b), g.inv(fa)), a);
                g.mul(fa, f[b]) == f[arg]
            })
        });
        if ok {
            out.push(f.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            f[i] += 1;
            if f[i] < n {
                break;
            }
            f[i] = 0;
        }
    }
}

fn brute_force_endomorphisms(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    let mut f = vec![0usize; n];
    loop {
        if (0..n).all(|a| (0..n).all(|b| f[g.mul(a, b)] == g.mul(f[a], f[b]))) {
            out.push(f.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            f[i] += 1;
            if f[i] < n {
                break;
            }
            f[i] = 0;
        }
    }
}

fn images(ops: &[GroupMap]) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = ops.iter().map(|f| f.images.clone()).collect();
    v.sort();
    v
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut counts = Vec::new();
    for g in catalog().into_iter().filter(|g| g.order() <= 4) {
        let found = images(&enumerate_group_rb(&g, 12).unwrap());
        if found != brute_force_operators(&g) {
            problems.push(format!("{} differs from the brute-force list", g.name()));
        }
        counts.push(format!("{} {}", g.name(), found.len()));
        if g.name() == "Z2" && found.len() != 2 {
            problems.push(format!("Z2 has {} operators", found.len()));
        }
    }
    if let Err(e) = within(Duration::from_secs(1), start.elapsed()) {
        problems.push(e);
    }
    finish(problems, counts.join(", "))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut counts = Vec::new();
    for name in ["Z4", "Z2xZ2"] {
        let g = catalog_group(name).unwrap();
        let ops = images(&enumerate_group_rb(&g, 12).unwrap());
        let ends = brute_force_endomorphisms(&g);
        if ops != ends {
            problems.push(format!("{name}: {} operators, {} endomorphisms", ops.len(), ends.len()));
        }
        counts.push(format!("{name} {}", ops.len()));
    }
    if let Err(e) = within(Duration::from_secs(1), start.elapsed()) {
        problems.push(e);
    }
    finish(problems, counts.join(", "))
}

/// Failing check names with counts, over every operator in the corpus.
#[derive(Default)]
struct Tally {
    operators: usize,
    checks: usize,
    failures: BTreeMap<String, usize>,
    first: BTreeMap<String, String>,
    elapsed: Duration,
}

impl Tally {
    fn add(&mut self, label: &str, report: &CheckReport) {
        self.checks += report.checks.len();
        for c in report.checks.iter().filter(|c| !c.passed()) {
            *self.failures.entry(c.name.clone()).or_insert(0) += 1;
            self.first.entry(c.name.clone()).or_insert_with(|| {
                let w = c.witness.as_ref().unwrap();
                format!("{label} at {:?}: {}", w.at, w.detail)
            });
        }
    }

    fn add_error(&mut self, label: &str, what: &str, e: Error) {
        self.checks += 1;
        *self.failures.entry(what.to_string()).or_insert(0) += 1;
        self.first
            .entry(what.to_string())
            .or_insert_with(|| format!("{label}: {e}"));
    }

    fn outcome(&self, limit: Duration) -> Outcome {
        let mut problems: Vec<String> = self
            .failures
            .iter()
            .map(|(name, n)| format!("{name} fails for {n} operators (first: {})", self.first[name]))
            .collect();
        if let Err(e) = within(limit, self.elapsed) {
            problems.push(e);
        }
        finish(
            problems,
            format!(
                "{} operators, {} checks, {:.1?}",
                self.operators, self.checks, self.elapsed
            ),
        )
    }
}

struct Corpus {
    operator: Tally,
    matched: Tally,
    projection: Tally,
}

/// Criteria 3 to 5 share the corpus of every operator on every catalog
/// group of order at most 8.
fn run_corpus() -> Corpus {
    let mut c = Corpus {
        operator: Tally::default(),
        matched: Tally::default(),
        projection: Tally::default(),
    };
    for g in catalog().into_iter().filter(|g| g.order() <= 8) {
        for f in enumerate_group_rb(&g, 12).unwrap() {
            let label = format!("{} [{f}]", g.name());
            let t = Instant::now();
            let rb = RBOperator::from_group_map(&g, &f).unwrap();
            let derived = derive_with_report(&rb);
            c.operator.operators += 1;
            let derived = match derived {
                Ok((d, report)) => {
                    c.operator.add(&label, &report);
                    c.operator.elapsed += t.elapsed();
                    d
                }
                Err(e) => {
                    c.operator.add_error(&label, "derived structures", e);
                    c.operator.elapsed += t.elapsed();
                    continue;
                }
            };

            let t = Instant::now();
            c.matched.operators += 1;
            let rbmp = match mp_from_rb_with_report(&derived) {
                Ok((rbmp, mut report)) => {
                    report.push(
                        "right action displayed form",
                        "",
                        right_action_displayed_form_check(&rbmp),
                    );
                    c.matched.add(&label, &report);
                    c.matched.elapsed += t.elapsed();
                    rbmp
                }
                Err(e) => {
                    c.matched.add_error(&label, "matched pair", e);
                    c.matched.elapsed += t.elapsed();
                    continue;
                }
            };

            let t = Instant::now();
            c.projection.operators += 1;
            match c_pair_with_report(&rbmp) {
                Ok((pp, mut report)) => {
                    let induced = |r: Result<_, Error>| {
                        r.map(|_| ())
                            .map_err(|e| rbhopf::check::Witness::new(&[], e.to_string()))
                    };
                    report.push("induced operator on Im C", "", induced(rbp_operator(&pp)));
                    report.push("induced operator on Im C̃", "", induced(rbp_operator(&pp.swapped())));
                    report.extend(lemma_suite(&rbmp));
                    match phi_iso_with_report(&rbmp, &pp) {
                        Ok((_, r)) => report.extend(r),
                        Err(e) => c.projection.add_error(&label, "φ", e),
                    }
                    match pi_hom_with_report(&rbmp, &pp) {
                        Ok((_, r)) => report.extend(r),
                        Err(e) => c.projection.add_error(&label, "π", e),
                    }
                    c.projection.add(&label, &report);
                }
                Err(e) => c.projection.add_error(&label, "projection pair", e),
            }
            c.projection.elapsed += t.elapsed();
        }
    }
    c
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut runs = 0;
    for g in catalog() {
        for (label, f) in [
            ("identity", GroupMap::identity(&g)),
            ("u∘ε", GroupMap::constant(&g, g.identity())),
        ] {
            runs += 1;
            let rb = RBOperator::from_group_map(&g, &f).unwrap();
            let d = derive_with_report(&rb).unwrap().0;
            let degenerate = if label == "identity" {
                d.h_minus.dim()
            } else {
                d.h_plus.dim()
            };
            if degenerate != 1 {
                problems.push(format!(
                    "{} {label}: degenerate side has dimension {degenerate}",
                    g.name()
                ));
            }
            match verify_operator(&g, &f, &Stage::ALL) {
                Ok(r) => {
                    for s in r.failed_checks() {
                        problems.push(format!("{} {label}: {}", g.name(), s.name));
                    }
                }
                Err(e) => problems.push(format!("{} {label}: {e}", g.name())),
            }
        }
    }
    let total = problems.len();
    problems.truncate(6);
    if total > problems.len() {
        problems.push(format!("{} more", total - problems.len()));
    }
    finish(problems, format!("{runs} runs, {:.1?}", start.elapsed()))
}

fn criterion_7() -> Outcome {
    let mut problems = Vec::new();
    let mut seen = Vec::new();

    // a map that is not an operator is stopped before any construction
    let z4 = catalog_group("Z4").unwrap();
    match verify_operator(&z4, &GroupMap::new(vec![1, 2, 3, 0]), &Stage::ALL) {
        Err(Error::InvalidOperator(w)) if w.at.len() == 2 => seen.push(format!("non-operator at {:?}", w.at)),
        other => problems.push(format!("non-operator not rejected: {:?}", other.map(|r| r.passed))),
    }

    // changing one action value breaks the matched pair
    let z6 = catalog_group("Z6").unwrap();
    let rb = RBOperator::from_group_map(&z6, &GroupMap::new(vec![0, 3, 0, 3, 0, 3])).unwrap();
    let derived = derive_with_report(&rb).unwrap().0;
    let (rbmp, report) = mp_from_rb_with_report(&derived).unwrap();
    let pair: &MatchedPairData = &rbmp.pair;
    assert!(report
        .checks
        .iter()
        .filter(|c| c.name != "right action displayed form")
        .all(|c| c.passed()));
    let original = pair.act_basis(1, 1).clone();
    let replacement = rbhopf::linalg::SparseVec::unit(if original.get(0).is_zero() { 0 } else { 1 });
    let broken = pair.with_left_action_value(1, 1, replacement);
    let check = matched_pair_check(&broken);
    match (check.first_failure(), double_cross(&broken)) {
        (Some(f), Err(Error::Identity { .. })) => seen.push(format!("perturbed action caught by {:?}", f.name)),
        _ => problems.push("perturbed action accepted".into()),
    }

    // idempotent endomorphisms of ℚ[S3] whose images do not commute
    let s3 = catalog_group("S3").unwrap();
    let d = double_cross(&MatchedPairData::trivial(
        &group_algebra(&s3),
        &group_algebra(&catalog_group("Z1").unwrap()),
    ))
    .unwrap();
    let mut caught = false;
    for f in rbhopf::group::enumerate_endomorphisms(&s3) {
        if (0..6).any(|x| f.apply(f.apply(x)) != f.apply(x)) {
            continue;
        }
        let p = lift_group_map(&s3, &f);
        let cmm = cmm_check(&d, &p).unwrap();
        if cmm.images_commute {
            continue;
        }
        let pair = proj_pair_check(&d, &p, &cmm.q).unwrap();
        if pair.passed() || cmm.commute_failure.is_none() || cmm.is_projection_pair {
            problems.push(format!("[{f}]: non-commuting pair not rejected"));
        } else {
            caught = true;
            let w = pair.first_failure().unwrap();
            seen.push(format!("[{f}] rejected by {:?}", w.name));
            break;
        }
    }
    if !caught {
        problems.push("no non-commuting idempotent pair found".into());
    }
    finish(problems, seen.join("; "))
}

fn strip_timing(text: &str) -> String {
    let mut v: Value = serde_json::from_str(text).unwrap();
    v.as_object_mut().unwrap().remove("timing");
    serde_json::to_string_pretty(&v).unwrap()
}

fn criterion_8() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let mut texts = Vec::new();
    for (i, jobs) in [(1, "1"), (2, "0")] {
        let path = dir.path().join(format!("out{i}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_rbhopf"))
            .args(["sweep", "--max-order", "6", "--jobs", jobs, "--json"])
            .arg(&path)
            .env_remove("RBHOPF_ENUM_CAP")
            .output()
            .unwrap()
            .status;
        if status.code() == Some(2) {
            return finish(vec![format!("sweep exited with {status}")], String::new());
        }
        texts.push(std::fs::read_to_string(&path).unwrap());
    }
    let (a, b) = (&texts[0], &texts[1]);
    let has_timing = a.contains("\"timing\"");
    let mut problems = Vec::new();
    if strip_timing(a) != strip_timing(b) {
        problems.push("reports differ outside timing".into());
    }
    // the text before the timing object is also byte-identical
    let head = |t: &str| t.split("\"timing\"").next().unwrap().to_string();
    if head(a) != head(b) {
        problems.push("report prefixes differ".into());
    }
    if !has_timing {
        problems.push("timing sub-object missing".into());
    }
    finish(problems, format!("{} bytes", a.len()))
}

fn finish(problems: Vec<String>, summary: String) -> Outcome {
    if problems.is_empty() {
        Outcome {
            passed: true,
            detail: summary,
        }
    } else {
        Outcome {
            passed: false,
            detail: format!("{summary}; {}", problems.join("; ")),
        }
    }
}

fn main() -> ExitCode {
    // `cargo test -- --list` and filters from other targets land here too
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();
    results.push((1, "enumeration matches brute force", criterion_1()));
    results.push((2, "abelian operators are endomorphisms", criterion_2()));
    let corpus = run_corpus();
    results.push((
        3,
        "operator identities",
        corpus.operator.outcome(Duration::from_secs(120)),
    ));
    results.push((4, "matched pair", corpus.matched.outcome(Duration::from_secs(300))));
    results.push((
        5,
        "projection pair",
        corpus.projection.outcome(Duration::from_secs(600)),
    ));
    results.push((6, "degenerate operators", criterion_6()));
    results.push((7, "negative controls", criterion_7()));
    results.push((8, "reproducible sweep", criterion_8()));

    let mut unexpected = Vec::new();
    for (n, name, o) in &results {
        println!(
            "criterion {n} {}: {name}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
        let expected_fail = EXPECTED_FAILURES.iter().find(|(k, _)| k == n);
        match (o.passed, expected_fail) {
            (false, Some((_, why))) => println!("    known: {why}"),
            (false, None) => unexpected.push(format!("criterion {n} failed")),
            (true, Some(_)) => unexpected.push(format!("criterion {n} passed but is listed as failing")),
            (true, None) => {}
        }
    }
    let passed = results.iter().filter(|r| r.2.passed).count();
    println!("{passed}/{} criteria pass", results.len());
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        for u in unexpected {
            println!("unexpected: {u}");
        }
        ExitCode::FAILURE
    }
}

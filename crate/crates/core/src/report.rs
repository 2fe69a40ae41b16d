//! The verification pipeline and its machine-readable reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::check::{CheckOutcome, CheckReport, Witness};
use crate::error::{Error, Result};
use crate::group::{catalog, enumerate_group_rb, group_rb_check, GroupMap, GroupTable};
use crate::matched_pair::{mp_from_rb_with_report, right_action_displayed_form_check, RBMatchedPair};
use crate::projection::{
    c_pair_with_report, lemma_suite, phi_iso_with_report, pi_hom_with_report, rbp_operator, ProjectionPair,
};
use crate::rota_baxter::{derive_with_report, plain_antipode_on_descendent, RBDerived, RBOperator};

/// Report format version, bumped on any change to the JSON layout.
pub const REPORT_VERSION: u32 = 1;

/// The JSON schema both report kinds validate against.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    Operator,
    MatchedPair,
    Projection,
    Lemmas,
    Phi,
    Pi,
}

impl Stage {
    pub const ALL: [Stage; 6] = [
        Stage::Operator,
        Stage::MatchedPair,
        Stage::Projection,
        Stage::Lemmas,
        Stage::Phi,
        Stage::Pi,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Stage::Operator => "operator",
            Stage::MatchedPair => "matched-pair",
            Stage::Projection => "projection",
            Stage::Lemmas => "lemmas",
            Stage::Phi => "phi",
            Stage::Pi => "pi",
        }
    }

    /// Parses a comma-separated list; `all` selects every stage.
    pub fn parse_list(s: &str) -> Result<Vec<Stage>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Stage::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        if out.is_empty() {
            return Err(Error::Parse("no stages selected".into()));
        }
        Ok(out)
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Stage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Stage::ALL.into_iter().find(|st| st.as_str() == s).ok_or_else(|| {
            let names: Vec<&str> = Stage::ALL.iter().map(|s| s.as_str()).collect();
            Error::Parse(format!("unknown stage {s:?}, expected one of {}", names.join(", ")))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageResult {
    pub stage: Stage,
    pub name: String,
    pub statement: String,
    pub passed: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    /// Wall-clock seconds per stage, including the constructions it needs.
    pub stages: BTreeMap<Stage, f64>,
    pub total: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: u32,
    pub group: String,
    pub operator: Vec<usize>,
    pub passed: bool,
    pub checks_run: usize,
    pub failures: usize,
    pub stages: Vec<StageResult>,
    /// Facts worth recording that are not expected to hold.
    pub observations: Vec<CheckOutcome>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing: Option<Timing>,
    pub toolchain: String,
}

impl VerificationReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &StageResult> {
        self.stages.iter().filter(|s| !s.passed)
    }

    pub fn get(&self, name: &str) -> Option<&StageResult> {
        self.stages.iter().find(|s| s.name == name)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

pub fn toolchain() -> String {
    format!(
        "rbhopf {} ({})",
        env!("CARGO_PKG_VERSION"),
        env!("RBHOPF_RUSTC_VERSION")
    )
}

struct Builder {
    selected: Vec<Stage>,
    stages: Vec<StageResult>,
    timing: Timing,
}

impl Builder {
    fn wants(&self, stage: Stage) -> bool {
        self.selected.contains(&stage)
    }

    fn wants_after(&self, stage: Stage) -> bool {
        self.selected.iter().any(|s| *s >= stage)
    }

    fn record(&mut self, stage: Stage, report: CheckReport) {
        if !self.wants(stage) {
            return;
        }
        for c in report.checks {
            self.stages.push(StageResult {
                stage,
                passed: c.passed(),
                name: c.name,
                statement: c.statement,
                witness: c.witness,
            });
        }
    }

    fn push(&mut self, stage: Stage, name: &str, statement: &str, result: std::result::Result<(), Witness>) {
        let mut r = CheckReport::new();
        r.push(name, statement, result);
        self.record(stage, r);
    }

    /// Turns a failed construction into a failed check; input errors pass
    /// through unchanged.
    fn construction<T>(&mut self, stage: Stage, what: &str, r: Result<T>) -> Result<Option<T>> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(Error::Identity { name, witness }) | Err(Error::HopfAxiom { axiom: name, witness }) => {
                let w = Witness::new(&witness.at, format!("{name}: {}", witness.detail));
                self.stages.push(StageResult {
                    stage,
                    name: format!("construction of {what}"),
                    statement: format!("{what} can be built"),
                    passed: false,
                    witness: Some(w),
                });
                Ok(None)
            }
            Err(Error::NotCocommutative(w)) => {
                self.stages.push(StageResult {
                    stage,
                    name: format!("construction of {what}"),
                    statement: format!("{what} can be built"),
                    passed: false,
                    witness: Some(w),
                });
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }

    fn timed<T>(&mut self, stage: Stage, f: impl FnOnce(&mut Self) -> Result<T>) -> Result<T> {
        let start = Instant::now();
        let out = f(self);
        *self.timing.stages.entry(stage).or_default() += start.elapsed().as_secs_f64();
        out
    }
}

/// Rejects maps that are not Rota-Baxter operators on the group.
pub fn require_group_rb(g: &GroupTable, f: &GroupMap) -> Result<()> {
    if f.len() != g.order() {
        return Err(Error::Shape(format!(
            "operator has {} images but the group has order {}",
            f.len(),
            g.order()
        )));
    }
    group_rb_check(g, f).map_err(Error::InvalidOperator)
}

/// Runs the pipeline on a group operator.
pub fn verify_operator(g: &GroupTable, f: &GroupMap, stages: &[Stage]) -> Result<VerificationReport> {
    require_group_rb(g, f)?;
    let rb = RBOperator::from_group_map(g, f)?;
    let mut report = verify_rb(&rb, stages)?;
    report.group = g.name().to_string();
    report.operator = f.images.clone();
    Ok(report)
}

/// Runs the pipeline on any Rota-Baxter operator; `group` and `operator`
/// are left empty.
pub fn verify_rb(rb: &RBOperator, stages: &[Stage]) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut b = Builder {
        selected: stages.to_vec(),
        stages: Vec::new(),
        timing: Timing::default(),
    };
    let mut observations = CheckReport::new();
    run(&mut b, rb, &mut observations)?;
    b.timing.total = start.elapsed().as_secs_f64();
    let failures = b.stages.iter().filter(|s| !s.passed).count();
    Ok(VerificationReport {
        version: REPORT_VERSION,
        group: String::new(),
        operator: Vec::new(),
        passed: failures == 0,
        checks_run: b.stages.len(),
        failures,
        stages: b.stages,
        observations: observations.checks,
        timing: Some(b.timing),
        toolchain: toolchain(),
    })
}

fn run(b: &mut Builder, rb: &RBOperator, observations: &mut CheckReport) -> Result<()> {
    let derived: Option<RBDerived> = b.timed(Stage::Operator, |b| {
        let built = b.construction(Stage::Operator, "derived structures", derive_with_report(rb))?;
        Ok(built.map(|(d, report)| {
            b.record(Stage::Operator, report);
            d
        }))
    })?;
    let Some(derived) = derived else { return Ok(()) };
    observations.push(
        "plain antipode on the descendent",
        "S is an antipode for (H, *_B)",
        plain_antipode_on_descendent(&derived),
    );
    if !b.wants_after(Stage::MatchedPair) {
        return Ok(());
    }

    let rbmp: Option<RBMatchedPair> = b.timed(Stage::MatchedPair, |b| {
        let built = b.construction(Stage::MatchedPair, "matched pair", mp_from_rb_with_report(&derived))?;
        Ok(built.map(|(rbmp, report)| {
            b.record(Stage::MatchedPair, report);
            b.push(
                Stage::MatchedPair,
                "right action displayed form",
                "B(x)◁B̃(y) = S(B̃(y₁)S_B(x₁)B̃(S_B(x₂)y₂))",
                right_action_displayed_form_check(&rbmp),
            );
            rbmp
        }))
    })?;
    let Some(rbmp) = rbmp else { return Ok(()) };
    if !b.wants_after(Stage::Projection) {
        return Ok(());
    }

    let pp: Option<ProjectionPair> = b.timed(Stage::Projection, |b| {
        let built = b.construction(Stage::Projection, "projection pair", c_pair_with_report(&rbmp))?;
        let Some((pp, report)) = built else { return Ok(None) };
        b.record(Stage::Projection, report);
        b.push(
            Stage::Projection,
            "induced operator on Im C",
            "C((a, x)) = C((a, ε(x)1)) restricted to Im C is a weight −1 operator",
            induced_check(rbp_operator(&pp)),
        );
        b.push(
            Stage::Projection,
            "induced operator on Im C̃",
            "C̃((a, x)) = C̃((a, ε(x)1)) restricted to Im C̃ is a weight −1 operator",
            induced_check(rbp_operator(&pp.swapped())),
        );
        Ok(Some(pp))
    })?;

    if b.wants(Stage::Lemmas) {
        b.timed(Stage::Lemmas, |b| {
            b.record(Stage::Lemmas, lemma_suite(&rbmp));
            Ok(())
        })?;
    }
    let Some(pp) = pp else { return Ok(()) };

    if b.wants(Stage::Phi) {
        b.timed(Stage::Phi, |b| {
            if let Some((_, report)) = b.construction(Stage::Phi, "φ", phi_iso_with_report(&rbmp, &pp))? {
                b.record(Stage::Phi, report);
            }
            Ok(())
        })?;
    }
    if b.wants(Stage::Pi) {
        b.timed(Stage::Pi, |b| {
            if let Some((_, report)) = b.construction(Stage::Pi, "π", pi_hom_with_report(&rbmp, &pp))? {
                b.record(Stage::Pi, report);
            }
            Ok(())
        })?;
    }
    Ok(())
}

fn induced_check<T>(r: Result<T>) -> std::result::Result<(), Witness> {
    match r {
        Ok(_) => Ok(()),
        Err(Error::Identity { name, witness }) => Err(Witness::new(&witness.at, format!("{name}: {}", witness.detail))),
        Err(e) => Err(Witness::new(&[], e.to_string())),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub group: String,
    pub order: usize,
    pub abelian: bool,
    pub operators: usize,
    pub failing_operators: usize,
}

/// One operator in a sweep, without its passing checks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OperatorSummary {
    pub group: String,
    pub operator: Vec<usize>,
    pub checks_run: usize,
    pub failed: Vec<StageResult>,
    pub observations_failed: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SweepTiming {
    pub total: f64,
    pub jobs: usize,
    /// Summed wall-clock seconds per stage over every operator.
    pub stages: BTreeMap<Stage, f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub version: u32,
    pub max_order: usize,
    pub passed: bool,
    pub operators: usize,
    pub identities_checked: usize,
    pub failures: usize,
    pub failures_by_check: BTreeMap<String, usize>,
    pub observations_by_check: BTreeMap<String, usize>,
    pub groups: Vec<GroupSummary>,
    pub results: Vec<OperatorSummary>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing: Option<SweepTiming>,
    pub toolchain: String,
}

impl SweepReport {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

/// Every operator on every catalog group of order at most `max_order`,
/// each through the full pipeline. `jobs = 0` uses rayon's default width.
pub fn sweep(max_order: usize, cap: usize, jobs: usize) -> Result<SweepReport> {
    if max_order > cap {
        return Err(Error::CapExceeded {
            what: "sweep order",
            value: max_order,
            cap,
        });
    }
    let start = Instant::now();
    let groups: Vec<GroupTable> = catalog().into_iter().filter(|g| g.order() <= max_order).collect();
    let mut work = Vec::new();
    for (gi, g) in groups.iter().enumerate() {
        for f in enumerate_group_rb(g, cap)? {
            work.push((gi, f));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    let mut reports: Vec<(usize, VerificationReport)> = pool.install(|| {
        work.par_iter()
            .map(|(gi, f)| verify_operator(&groups[*gi], f, &Stage::ALL).map(|r| (*gi, r)))
            .collect::<Result<Vec<_>>>()
    })?;
    reports.sort_by(|a, b| (a.0, &a.1.operator).cmp(&(b.0, &b.1.operator)));

    let mut timing = SweepTiming {
        jobs: pool.current_num_threads(),
        ..SweepTiming::default()
    };
    let mut failures_by_check = BTreeMap::new();
    let mut observations_by_check = BTreeMap::new();
    let mut summaries: Vec<GroupSummary> = groups
        .iter()
        .map(|g| GroupSummary {
            group: g.name().to_string(),
            order: g.order(),
            abelian: g.is_abelian(),
            operators: 0,
            failing_operators: 0,
        })
        .collect();
    let mut results = Vec::with_capacity(reports.len());
    let (mut identities_checked, mut failures) = (0, 0);
    for (gi, mut r) in reports {
        if let Some(t) = r.timing.take() {
            for (stage, secs) in t.stages {
                *timing.stages.entry(stage).or_default() += secs;
            }
        }
        identities_checked += r.checks_run;
        failures += r.failures;
        summaries[gi].operators += 1;
        if !r.passed {
            summaries[gi].failing_operators += 1;
        }
        for s in r.failed_checks() {
            *failures_by_check.entry(s.name.clone()).or_insert(0) += 1;
        }
        let observations_failed: Vec<String> = r
            .observations
            .iter()
            .filter(|o| !o.passed())
            .map(|o| o.name.clone())
            .collect();
        for o in &observations_failed {
            *observations_by_check.entry(o.clone()).or_insert(0) += 1;
        }
        results.push(OperatorSummary {
            failed: r.failed_checks().cloned().collect(),
            group: r.group,
            operator: r.operator,
            checks_run: r.checks_run,
            observations_failed,
        });
    }
    timing.total = start.elapsed().as_secs_f64();
    Ok(SweepReport {
        version: REPORT_VERSION,
        max_order,
        passed: failures == 0,
        operators: results.len(),
        identities_checked,
        failures,
        failures_by_check,
        observations_by_check,
        groups: summaries,
        results,
        timing: Some(timing),
        toolchain: toolchain(),
    })
}

/// JSON text with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

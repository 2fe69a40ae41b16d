use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rbhopf::group::{
    catalog, catalog_group, enumerate_group_rb, operator_orbit_count, GroupMap, GroupTable, DEFAULT_ENUMERATION_CAP,
    ENUMERATION_CAP_VAR,
};
use rbhopf::hopf::{group_algebra, verify_hopf};
use rbhopf::io::{hopf_from_json_str, hopf_to_json_string, HopfJson};
use rbhopf::report::{sweep, to_json, verify_operator, Stage, VerificationReport, REPORT_SCHEMA};
use rbhopf::{Error, Result};

/// Like `println!`, but a closed stdout (say, piped into `head`) ends the
/// program quietly.
macro_rules! out {
    ($($t:tt)*) => {
        if writeln!(std::io::stdout().lock(), $($t)*).is_err() {
            std::process::exit(0);
        }
    };
}

macro_rules! put {
    ($($t:tt)*) => {
        if write!(std::io::stdout().lock(), $($t)*).is_err() {
            std::process::exit(0);
        }
    };
}

#[derive(Parser)]
#[command(
    name = "rbhopf",
    version,
    about = "Exact checks for weight -1 Rota-Baxter operators on group algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in groups.
    Groups,
    /// List every Rota-Baxter operator on a group.
    Enumerate {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, env = ENUMERATION_CAP_VAR, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// Run the verification pipeline on one operator.
    Verify {
        #[command(flatten)]
        group: GroupArg,
        /// Index into the enumerated operators, or an image tuple such as `0,3,0,3`.
        #[arg(long)]
        op: String,
        /// Comma-separated stages: operator, matched-pair, projection, lemmas, phi, pi, or all.
        #[arg(long, default_value = "all")]
        stages: String,
        #[arg(long, env = ENUMERATION_CAP_VAR, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        /// Write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run the pipeline on every operator of every catalog group up to an order.
    Sweep {
        #[arg(long)]
        max_order: usize,
        #[arg(long, env = ENUMERATION_CAP_VAR, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the JSON schema for reports.
    Schema,
    /// Write the group algebra of a group as Hopf JSON.
    ExportHopf {
        #[command(flatten)]
        group: GroupArg,
    },
    /// Check the Hopf axioms on a Hopf JSON file.
    CheckHopf { path: PathBuf },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GroupArg {
    /// A catalog name such as `S3`, `Z2xZ4` or `Q8`.
    #[arg(long)]
    group: Option<String>,
    /// A Cayley table file: `order n` then n rows of n indices.
    #[arg(long)]
    table: Option<PathBuf>,
}

impl GroupArg {
    fn load(&self) -> Result<GroupTable> {
        match (&self.group, &self.table) {
            (Some(name), _) => catalog_group(name),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)?;
                let name = path
                    .file_stem()
                    .map_or("table".into(), |s| s.to_string_lossy().into_owned());
                GroupTable::parse_cayley(name, &text)
            }
            (None, None) => Err(Error::Parse("either --group or --table is required".into())),
        }
    }
}

fn write_output(path: &Path, text: &str) -> Result<()> {
    if path == Path::new("-") {
        put!("{text}");
        Ok(())
    } else {
        Ok(std::fs::write(path, text)?)
    }
}

fn resolve_operator(g: &GroupTable, op: &str, cap: usize) -> Result<GroupMap> {
    if op.contains(',') {
        return GroupMap::parse(op);
    }
    let index: usize = op
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("--op {op:?} is neither an index nor an image tuple")))?;
    let ops = enumerate_group_rb(g, cap)?;
    let count = ops.len();
    ops.into_iter()
        .nth(index)
        .ok_or_else(|| Error::Parse(format!("operator index {index} out of range, {} has {count}", g.name())))
}

fn print_report(r: &VerificationReport) {
    out!("group {}  operator [{}]", r.group, GroupMap::new(r.operator.clone()));
    let mut current = None;
    for s in &r.stages {
        if current != Some(s.stage) {
            out!("{}", s.stage);
            current = Some(s.stage);
        }
        let mark = if s.passed { "ok  " } else { "FAIL" };
        out!("  {mark} {}", s.name);
        if let Some(w) = &s.witness {
            out!("       at {:?}: {}", w.at, w.detail);
        }
    }
    for o in r.observations.iter().filter(|o| !o.passed()) {
        out!("note: {} does not hold", o.name);
    }
    out!("{} checks, {} failed", r.checks_run, r.failures);
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Groups => {
            out!("{:<10} {:>5}  abelian", "name", "order");
            for g in catalog() {
                out!(
                    "{:<10} {:>5}  {}",
                    g.name(),
                    g.order(),
                    if g.is_abelian() { "yes" } else { "no" }
                );
            }
        }
        Command::Enumerate { group, cap } => {
            let g = group.load()?;
            let ops = enumerate_group_rb(&g, cap)?;
            let orbits = operator_orbit_count(&g, &ops);
            out!("{}: {} operators, {orbits} up to automorphism", g.name(), ops.len());
            for (i, f) in ops.iter().enumerate() {
                out!("{i:>4}  {f}");
            }
        }
        Command::Verify {
            group,
            op,
            stages,
            cap,
            json,
        } => {
            let g = group.load()?;
            let stages = Stage::parse_list(&stages)?;
            let f = resolve_operator(&g, &op, cap)?;
            let report = verify_operator(&g, &f, &stages)?;
            match json.as_deref() {
                Some(p) if p == Path::new("-") => write_output(p, &to_json(&report)?)?,
                Some(p) => {
                    write_output(p, &to_json(&report)?)?;
                    print_report(&report);
                }
                None => print_report(&report),
            }
            return Ok(report.exit_code());
        }
        Command::Sweep {
            max_order,
            cap,
            jobs,
            json,
        } => {
            let report = sweep(max_order, cap, jobs)?;
            if let Some(p) = &json {
                write_output(p, &to_json(&report)?)?;
            }
            if json.as_deref() != Some(Path::new("-")) {
                out!(
                    "{} operators, {} checks, {} failures",
                    report.operators,
                    report.identities_checked,
                    report.failures
                );
                for (name, n) in &report.failures_by_check {
                    out!("  {n:>5}  {name}");
                }
            }
            return Ok(report.exit_code());
        }
        Command::Schema => put!("{REPORT_SCHEMA}"),
        Command::ExportHopf { group } => {
            let g = group.load()?;
            out!("{}", hopf_to_json_string(&group_algebra(&g))?);
        }
        Command::CheckHopf { path } => {
            let text = std::fs::read_to_string(&path)?;
            let parsed: HopfJson = serde_json::from_str(&text)?;
            let h = rbhopf::hopf::HopfData::new_unchecked(parsed.parts()?)?;
            let report = verify_hopf(&h);
            for c in &report.checks {
                out!("{} {}", if c.passed() { "ok  " } else { "FAIL" }, c.name);
            }
            if !report.passed() {
                return Ok(1);
            }
            hopf_from_json_str(&text)?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

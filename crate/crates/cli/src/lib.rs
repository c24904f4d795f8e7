//! Command implementations for the `clifford-brackets` binary. Each command
//! returns its output and exit status instead of printing, so the whole CLI
//! can be driven from tests.

pub mod document;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use clifford_brackets::formulas::{actual_table, Budget};
use clifford_brackets::golden::{compare_with_golden, GOLDEN_N_MAX};
use clifford_brackets::multivector::{group_residual, lie_residual};
use clifford_brackets::subalgebra::{
    augmentations, catalog, enumerate_closed, reference_listing, BracketAtlas, Classification,
    GradedSubspace, Provenance, LISTING_N_MAX,
};
use clifford_brackets::{
    actual_grades, build_table, kernel_grades, special_case_report, theorem_grades, BracketKind,
    Error, GradeSet, RankTable, Signature, Variant, N_MAX,
};
use serde::{Deserialize, Serialize};

use crate::document::{render, MultivectorDocument};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Status {
    Ok = 0,
    Mismatch = 1,
    Usage = 2,
    Budget = 3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: Status,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: Status::Ok,
        }
    }

    fn with(stdout: String, code: Status) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn error(err: &Error) -> Self {
        let code = match err {
            Error::Budget { .. } => Status::Budget,
            _ => Status::Usage,
        };
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "clifford-brackets",
    version,
    about = "Grade structure of commutators and anticommutators in Clifford algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Commutator,
    Anticommutator,
    Both,
}

impl KindArg {
    fn kinds(self) -> Vec<BracketKind> {
        match self {
            KindArg::Commutator => vec![BracketKind::Commutator],
            KindArg::Anticommutator => vec![BracketKind::Anticommutator],
            KindArg::Both => BracketKind::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    ComplexLie,
    Plain,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::ComplexLie => Variant::ComplexLie,
            VariantArg::Plain => Variant::Plain,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Predicate {
    /// `U* U = e`
    Group,
    /// `u* = -u`
    Lie,
}

/// Signature split `p,q`.
fn parse_pq(s: &str) -> Result<(usize, usize), String> {
    let (p, q) = s.split_once(',').ok_or("expected p,q")?;
    let p = p.trim().parse().map_err(|_| format!("bad p in {s:?}"))?;
    let q = q.trim().parse().map_err(|_| format!("bad q in {s:?}"))?;
    Ok((p, q))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the rank tables of `[U^k, V^l]` / `{U^k, V^l}` for ranks 1..n.
    Tables {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "both")]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Fill the table by brute force in this signature instead of the closed form.
        #[arg(long, value_parser = parse_pq)]
        pq: Option<(usize, usize)>,
        /// Maximum number of blade pairs for brute force.
        #[arg(long, default_value_t = Budget::DEFAULT_MAX_PAIRS)]
        budget: u64,
    },
    /// Run the formula, brute-force, reference-table, special-case and
    /// subalgebra suites for every n up to --n-max.
    Verify {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "both")]
        kind: KindArg,
        #[arg(long, default_value_t = Budget::DEFAULT_MAX_PAIRS)]
        budget: u64,
    },
    /// List the graded subalgebras for n with brute-force closure verdicts.
    Subalgebras {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "complex-lie")]
        variant: VariantArg,
        /// Also list reducible subalgebras obtained by adjoining grade 0 or n.
        #[arg(long)]
        augmented: bool,
        /// Search all grade subsets and compare with the catalog.
        #[arg(long)]
        enumerate: bool,
        /// Signature split for the closure check (default n,0).
        #[arg(long, value_parser = parse_pq)]
        pq: Option<(usize, usize)>,
        /// Check closure in every split p + q = n.
        #[arg(long, conflicts_with = "pq")]
        all_splits: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = Budget::DEFAULT_MAX_PAIRS)]
        budget: u64,
    },
    /// Test a multivector document for group or Lie algebra membership.
    Check {
        /// JSON document path, or `-` for standard input.
        input: PathBuf,
        #[arg(long, value_enum)]
        predicate: Predicate,
    },
}

/// Parse arguments and run one command. Standard input is read only by
/// `check -`.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                Status::Usage
            } else {
                Status::Ok
            };
            let text = e.render().to_string();
            return if code == Status::Ok {
                Outcome::ok(text)
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    match cli.command {
        Command::Tables {
            n,
            kind,
            format,
            pq,
            budget,
        } => {
            let source = match pq {
                Some((p, q)) => match Signature::new(p, q) {
                    Ok(sig) if sig.dim() == n => Some(sig),
                    Ok(sig) => {
                        return Outcome::error(&Error::Domain(format!(
                            "{sig} does not have n = {n}"
                        )))
                    }
                    Err(e) => return Outcome::error(&e),
                },
                None => None,
            };
            cmd_tables(n, &kind.kinds(), format, source, Budget::new(budget))
        }
        Command::Verify {
            n_max,
            kind,
            budget,
        } => cmd_verify(n_max, &kind.kinds(), Budget::new(budget)),
        Command::Subalgebras {
            n,
            variant,
            augmented,
            enumerate,
            pq,
            all_splits,
            format,
            budget,
        } => {
            let opts = SubalgebraOptions {
                variant: variant.into(),
                augmented,
                enumerate,
                pq,
                all_splits,
                format,
                budget: Budget::new(budget),
            };
            cmd_subalgebras(n, &opts)
        }
        Command::Check { input, predicate } => {
            let text = if input.as_os_str() == "-" {
                std::io::read_to_string(std::io::stdin())
            } else {
                std::fs::read_to_string(&input)
            };
            match text {
                Ok(t) => cmd_check(&t, predicate),
                Err(e) => Outcome {
                    stdout: String::new(),
                    stderr: format!("error: cannot read {}: {e}\n", input.display()),
                    code: Status::Usage,
                },
            }
        }
    }
}

/// Self-describing JSON form of a rank table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub n: usize,
    pub kind: String,
    /// `cells[k-1][l-1]`: sorted grades of the `(k, l)` cell.
    pub cells: Vec<Vec<Vec<usize>>>,
}

impl TableDocument {
    pub fn from_table(t: &RankTable) -> Self {
        TableDocument {
            n: t.n(),
            kind: t.kind().name().to_owned(),
            cells: t
                .rows()
                .map(|row| row.iter().map(|g| g.to_vec()).collect())
                .collect(),
        }
    }

    pub fn to_table(&self) -> clifford_brackets::Result<RankTable> {
        let kind: BracketKind = self.kind.parse()?;
        if self.cells.len() != self.n || self.cells.iter().any(|r| r.len() != self.n) {
            return Err(Error::Validation(format!(
                "cells must be {0} x {0}",
                self.n
            )));
        }
        let mut cells = Vec::with_capacity(self.n * self.n);
        for row in &self.cells {
            for cell in row {
                if let Some(&g) = cell.iter().find(|&&g| g > self.n) {
                    return Err(Error::Validation(format!(
                        "grade {g} exceeds n = {}",
                        self.n
                    )));
                }
                cells.push(cell.iter().copied().collect::<GradeSet>());
            }
        }
        RankTable::from_cells(self.n, kind, cells)
    }
}

/// Parse the JSON emitted by `tables --format json` back into tables.
pub fn parse_json_tables(text: &str) -> clifford_brackets::Result<Vec<RankTable>> {
    let docs: Vec<TableDocument> = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    docs.iter().map(TableDocument::to_table).collect()
}

pub fn cmd_tables(
    n: usize,
    kinds: &[BracketKind],
    format: Format,
    brute_force: Option<Signature>,
    budget: Budget,
) -> Outcome {
    if n == 0 || n > N_MAX {
        return Outcome::error(&Error::Domain(format!("n = {n} outside [1, {N_MAX}]")));
    }
    let mut tables = Vec::new();
    for &kind in kinds {
        let t = match brute_force {
            Some(sig) => actual_table(&sig, kind, budget),
            None => build_table(n, kind),
        };
        match t {
            Ok(t) => tables.push(t),
            Err(e) => return Outcome::error(&e),
        }
    }
    let out = match format {
        Format::Text => tables
            .iter()
            .map(|t| format!("# {}\n{}", t.kind(), t.to_text()))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => {
            let docs: Vec<TableDocument> = tables.iter().map(TableDocument::from_table).collect();
            serde_json::to_string_pretty(&docs).expect("tables serialize") + "\n"
        }
    };
    Outcome::ok(out)
}

/// Running tally for `verify`.
#[derive(Default)]
struct Tally {
    out: String,
    mismatches: usize,
    warnings: usize,
}

impl Tally {
    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn fail(&mut self, s: impl AsRef<str>) {
        self.mismatches += 1;
        self.line(format!("  MISMATCH {}", s.as_ref()));
    }
}

pub fn cmd_verify(n_max: usize, kinds: &[BracketKind], budget: Budget) -> Outcome {
    if n_max == 0 || n_max > N_MAX {
        return Outcome::error(&Error::Domain(format!(
            "n-max = {n_max} outside [1, {N_MAX}]"
        )));
    }
    let mut t = Tally::default();
    match verify_suites(n_max, kinds, budget, &mut t) {
        Ok(()) => {}
        Err(e) => {
            let mut o = Outcome::error(&e);
            o.stdout = t.out;
            return o;
        }
    }
    let _ = writeln!(
        t.out,
        "{} mismatches, {} warnings",
        t.mismatches, t.warnings
    );
    let code = if t.mismatches == 0 {
        Status::Ok
    } else {
        Status::Mismatch
    };
    Outcome::with(t.out, code)
}

fn verify_suites(
    n_max: usize,
    kinds: &[BracketKind],
    budget: Budget,
    t: &mut Tally,
) -> clifford_brackets::Result<()> {
    // closed form against the blade-pair rule
    let mut cells = 0;
    let before = t.mismatches;
    for n in 1..=n_max {
        for k in 0..=n {
            for l in 0..=k {
                for &kind in kinds {
                    cells += 1;
                    let (a, b) = (
                        theorem_grades(n, k, l, kind)?,
                        kernel_grades(n, k, l, kind)?,
                    );
                    if a != b {
                        t.fail(format!(
                            "formula n={n} ({k},{l}) {kind}: closed form {a}, kernel {b}"
                        ));
                    }
                }
            }
        }
    }
    t.line(format!(
        "formula agreement: {cells} cells, {} mismatches",
        t.mismatches - before
    ));

    // printed tables
    let before = t.mismatches;
    for n in 1..=n_max.min(GOLDEN_N_MAX) {
        for &kind in kinds {
            let cmp = compare_with_golden(n, kind, budget)?;
            for w in &cmp.warnings {
                t.warnings += 1;
                t.line(format!(
                    "  WARN reference n={} {} cell ({},{}): printed \"{}\", computed {} (brute force {})",
                    w.n,
                    w.kind,
                    w.row,
                    w.column,
                    w.printed,
                    w.computed,
                    w.brute_force.map_or("-".to_owned(), |g| g.to_string())
                ));
            }
            for m in &cmp.mismatches {
                t.fail(format!(
                    "reference n={} {} cell ({},{}): printed \"{}\", computed {}",
                    m.n, m.kind, m.row, m.column, m.printed, m.computed
                ));
            }
            for s in &cmp.stale_overlay {
                t.fail(format!(
                    "overlay entry n={} {} ({},{}) not found in reference",
                    s.n, s.kind, s.row, s.column
                ));
            }
        }
    }
    t.line(format!(
        "reference tables (n <= {}): {} mismatches",
        n_max.min(GOLDEN_N_MAX),
        t.mismatches - before
    ));

    // brute force in every split
    let before = t.mismatches;
    let mut sweeps = 0;
    for n in 1..=n_max {
        for sig in Signature::splits(n)? {
            for &kind in kinds {
                sweeps += 1;
                let table = actual_table(&sig, kind, budget)?;
                let formula = build_table(n, kind)?;
                for k in 1..=n {
                    for l in 1..=n {
                        if table.get(k, l) != formula.get(k, l) {
                            t.fail(format!(
                                "brute force {sig} ({k},{l}) {kind}: observed {}, predicted {}",
                                table.get(k, l),
                                formula.get(k, l)
                            ));
                        }
                    }
                }
                for k in 0..=n {
                    let (seen, predicted) = (
                        actual_grades(&sig, k, 0, kind, budget)?,
                        kernel_grades(n, k, 0, kind)?,
                    );
                    if seen != predicted {
                        t.fail(format!("brute force {sig} ({k},0) {kind}: observed {seen}, predicted {predicted}"));
                    }
                }
            }
        }
    }
    t.line(format!(
        "brute-force tightness: {sweeps} signature sweeps, {} mismatches",
        t.mismatches - before
    ));

    // special cases
    let report = special_case_report(n_max);
    t.mismatches += report.mismatches.len();
    t.out.push_str(&report.to_string());

    // subalgebras
    let before = t.mismatches;
    let mut checked = 0;
    for n in 1..=n_max {
        let mut entries = if n <= LISTING_N_MAX {
            reference_listing(n)?
        } else {
            Vec::new()
        };
        entries.extend(catalog(n, Variant::ComplexLie)?);
        for sig in Signature::splits(n)? {
            let atlas = BracketAtlas::build(&sig, budget)?;
            for s in &entries {
                checked += 1;
                if !atlas.is_closed(s.grades, s.variant) {
                    t.fail(format!("subalgebra not closed in {sig}: {s}"));
                }
            }
        }
    }
    t.line(format!(
        "subalgebra closure: {checked} checks, {} mismatches",
        t.mismatches - before
    ));
    Ok(())
}

pub struct SubalgebraOptions {
    pub variant: Variant,
    pub augmented: bool,
    pub enumerate: bool,
    pub pq: Option<(usize, usize)>,
    pub all_splits: bool,
    pub format: Format,
    pub budget: Budget,
}

fn provenance_label(p: &Provenance) -> String {
    match p {
        Provenance::Catalog(i) | Provenance::Listing(i) => format!("{i})"),
        Provenance::Augmented { base, added } => format!("{base}) + {{{added}}}"),
        Provenance::Enumerated => "*)".to_owned(),
    }
}

fn class_label(c: &Classification) -> String {
    match c {
        Classification::Trivial => "trivial".to_owned(),
        Classification::Catalog(i) => format!("catalog {i}"),
        Classification::Augmented { base, added } => format!("augmented {base} + {{{added}}}"),
        Classification::Extra => "EXTRA".to_owned(),
    }
}

#[derive(Serialize)]
struct EntryJson {
    label: String,
    grades: Vec<usize>,
    text: String,
    closed: bool,
}

#[derive(Serialize)]
struct EnumeratedJson {
    grades: Vec<usize>,
    text: String,
    class: String,
}

#[derive(Serialize)]
struct SubalgebrasJson {
    n: usize,
    variant: String,
    signatures: Vec<String>,
    entries: Vec<EntryJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    enumerated: Option<Vec<EnumeratedJson>>,
}

pub fn cmd_subalgebras(n: usize, opts: &SubalgebraOptions) -> Outcome {
    match subalgebras(n, opts) {
        Ok(o) => o,
        Err(e) => Outcome::error(&e),
    }
}

fn subalgebras(n: usize, opts: &SubalgebraOptions) -> clifford_brackets::Result<Outcome> {
    if n == 0 || n > N_MAX {
        return Err(Error::Domain(format!("n = {n} outside [1, {N_MAX}]")));
    }
    let sigs = match (opts.pq, opts.all_splits) {
        (_, true) => Signature::splits(n)?,
        (Some((p, q)), false) => {
            let sig = Signature::new(p, q)?;
            if sig.dim() != n {
                return Err(Error::Domain(format!("{sig} does not have n = {n}")));
            }
            vec![sig]
        }
        (None, false) => vec![Signature::euclidean(n)?],
    };
    let atlases = sigs
        .iter()
        .map(|s| BracketAtlas::build(s, opts.budget))
        .collect::<clifford_brackets::Result<Vec<_>>>()?;
    let closed_everywhere =
        |s: &GradedSubspace| atlases.iter().all(|a| a.is_closed(s.grades, s.variant));

    let mut entries = catalog(n, opts.variant)?;
    if opts.augmented {
        entries.extend(augmentations(n, opts.variant)?);
    }
    let enumerated = if opts.enumerate {
        Some(enumerate_closed(n, opts.variant)?)
    } else {
        None
    };

    let mut failures = 0;
    let mut out = String::new();
    let sig_names: Vec<String> = sigs.iter().map(|s| s.to_string()).collect();
    let mut json_entries = Vec::new();
    let _ = writeln!(
        out,
        "n={n} ({}), closure checked in {}",
        opts.variant,
        sig_names.join(", ")
    );
    for s in &entries {
        let closed = closed_everywhere(s);
        if !closed {
            failures += 1;
        }
        let label = provenance_label(&s.provenance);
        let _ = writeln!(
            out,
            "{label} {s}  [{}]",
            if closed { "closed" } else { "NOT CLOSED" }
        );
        json_entries.push(EntryJson {
            label,
            grades: s.grades.to_vec(),
            text: s.to_string(),
            closed,
        });
    }

    let mut json_enumerated = None;
    if let Some(found) = &enumerated {
        let extras = found
            .iter()
            .filter(|e| e.class == Classification::Extra)
            .count();
        let _ = writeln!(
            out,
            "enumerated: {} closed grade sets, {extras} extra",
            found.len()
        );
        for e in found {
            let _ = writeln!(out, "  {}  [{}]", e.subspace, class_label(&e.class));
        }
        if n <= LISTING_N_MAX {
            let listed = reference_listing(n)?;
            let missing: Vec<&GradedSubspace> = listed
                .iter()
                .filter(|s| !found.iter().any(|e| e.subspace.grades == s.grades))
                .collect();
            if missing.is_empty() {
                let _ = writeln!(
                    out,
                    "listing ({} entries) is contained in the enumeration",
                    listed.len()
                );
            }
            for s in missing {
                failures += 1;
                let _ = writeln!(out, "  MISMATCH listed but not closed: {s}");
            }
        }
        json_enumerated = Some(
            found
                .iter()
                .map(|e| EnumeratedJson {
                    grades: e.subspace.grades.to_vec(),
                    text: e.subspace.to_string(),
                    class: class_label(&e.class),
                })
                .collect(),
        );
    }

    if opts.format == Format::Json {
        let doc = SubalgebrasJson {
            n,
            variant: opts.variant.to_string(),
            signatures: sig_names,
            entries: json_entries,
            enumerated: json_enumerated,
        };
        out = serde_json::to_string_pretty(&doc).expect("listing serializes") + "\n";
    }
    Ok(Outcome::with(
        out,
        if failures == 0 {
            Status::Ok
        } else {
            Status::Mismatch
        },
    ))
}

/// Exit status is `Ok` when the predicate holds and `Mismatch` when it does not.
pub fn cmd_check(text: &str, predicate: Predicate) -> Outcome {
    let doc = match MultivectorDocument::parse(text) {
        Ok(d) => d,
        Err(e) => {
            return Outcome {
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
                code: Status::Usage,
            }
        }
    };
    let (name, residual, what) = match predicate {
        Predicate::Group => (
            "group",
            group_residual(&doc.signature, &doc.value),
            "U*U - e",
        ),
        Predicate::Lie => ("lie", lie_residual(&doc.value), "u* + u"),
    };
    if residual.is_zero() {
        Outcome::ok(format!("{name}: true\n"))
    } else {
        Outcome::with(
            format!("{name}: false\nresidual {what} = {}\n", render(&residual)),
            Status::Mismatch,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("clifford-brackets").chain(args.iter().copied()))
    }

    #[test]
    fn table_cells() {
        let o = run_args(&["tables", "--n", "6", "--kind", "commutator"]);
        assert_eq!(o.code, Status::Ok);
        let t = RankTable::parse_text(
            BracketKind::Commutator,
            o.stdout.trim_start_matches("# commutator\n"),
        )
        .unwrap();
        assert_eq!(t.get(3, 4).to_string(), "1/5");
        let a = build_table(8, BracketKind::Anticommutator).unwrap();
        assert_eq!(a.get(4, 4).to_string(), "0/4/8");
        assert_eq!(
            build_table(1, BracketKind::Commutator)
                .unwrap()
                .get(1, 1)
                .to_string(),
            "-"
        );
    }

    #[test]
    fn json_tables_round_trip() {
        for n in 1..=8 {
            let o = cmd_tables(n, &BracketKind::ALL, Format::Json, None, Budget::default());
            let parsed = parse_json_tables(&o.stdout).unwrap();
            assert_eq!(parsed[0], build_table(n, BracketKind::Commutator).unwrap());
            assert_eq!(
                parsed[1],
                build_table(n, BracketKind::Anticommutator).unwrap()
            );
        }
        assert!(parse_json_tables(r#"[{"n":2,"kind":"commutator","cells":[[[]]]}]"#).is_err());
    }

    #[test]
    fn brute_force_tables_match() {
        let a = cmd_tables(
            5,
            &BracketKind::ALL,
            Format::Text,
            Some(Signature::new(2, 3).unwrap()),
            Budget::default(),
        );
        let b = cmd_tables(5, &BracketKind::ALL, Format::Text, None, Budget::default());
        assert_eq!(a, b);
        let c = run_args(&["tables", "--n", "5", "--pq", "2,2"]);
        assert_eq!(c.code, Status::Usage);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["tables"]).code, Status::Usage);
        assert_eq!(run_args(&["tables", "--n", "0"]).code, Status::Usage);
        assert_eq!(run_args(&["tables", "--n", "17"]).code, Status::Usage);
        assert_eq!(run_args(&["bogus"]).code, Status::Usage);
        assert_eq!(run_args(&["--help"]).code, Status::Ok);
    }

    #[test]
    fn verify_small() {
        let o = cmd_verify(6, &BracketKind::ALL, Budget::default());
        assert_eq!(o.code, Status::Ok, "{}{}", o.stdout, o.stderr);
        assert!(o.stdout.contains("0 mismatches"));
        let tiny = cmd_verify(6, &BracketKind::ALL, Budget::new(10));
        assert_eq!(tiny.code, Status::Budget);
    }

    #[test]
    fn verify_warns_on_the_misprint() {
        let o = cmd_verify(7, &[BracketKind::Anticommutator], Budget::default());
        assert_eq!(o.code, Status::Ok, "{}", o.stdout);
        assert!(o
            .stdout
            .contains("WARN reference n=7 anticommutator cell (3,4): printed \"13/7\""));
    }

    #[test]
    fn subalgebra_listing() {
        let o = run_args(&["subalgebras", "--n", "4"]);
        assert_eq!(o.code, Status::Ok);
        assert_eq!(o.stdout.matches("[closed]").count(), 6);
        assert!(o.stdout.contains("6) u^2 + u^3  [closed]"));
        let o = run_args(&["subalgebras", "--n", "10", "--all-splits"]);
        assert_eq!(o.stdout.matches("[closed]").count(), 12);
        let o = run_args(&["subalgebras", "--n", "5", "--enumerate"]);
        assert_eq!(o.code, Status::Ok);
        assert!(o
            .stdout
            .contains("listing (7 entries) is contained in the enumeration"));
        let o = run_args(&["subalgebras", "--n", "2", "--augmented"]);
        assert!(o.stdout.contains("i u^0 + i u^1 + u^2"));
        let o = run_args(&["subalgebras", "--n", "15", "--enumerate"]);
        assert_eq!(o.code, Status::Budget);
        let o = run_args(&[
            "subalgebras",
            "--n",
            "3",
            "--variant",
            "plain",
            "--format",
            "json",
        ]);
        assert!(o.stdout.contains("\"text\": \"u^1 + u^2\""));
    }

    #[test]
    fn membership_checks() {
        let doc = |p: usize, q: usize, idx: &str| {
            format!(
                r#"{{"signature":{{"p":{p},"q":{q}}},"terms":[{{"indices":[{idx}],"re":1,"im":0}}]}}"#
            )
        };
        assert_eq!(
            cmd_check(&doc(1, 0, "1"), Predicate::Group).stdout,
            "group: true\n"
        );
        assert_eq!(
            cmd_check(&doc(2, 0, "1,2"), Predicate::Lie).stdout,
            "lie: true\n"
        );
        let o = cmd_check(&doc(1, 0, "1"), Predicate::Lie);
        assert_eq!(o.code, Status::Mismatch);
        assert_eq!(o.stdout, "lie: false\nresidual u* + u = 2e^{1}\n");
        let bad = cmd_check("{\"signature\": [", Predicate::Lie);
        assert_eq!(bad.code, Status::Usage);
        assert!(bad.stderr.contains("line 1"));
    }
}

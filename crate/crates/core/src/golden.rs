//! Reference tables for `n = 1..=10` as printed, plus an overlay of cells
//! known to be misprinted.

use crate::error::{Error, Result};
use crate::formulas::{actual_grades, build_table, Budget};
use crate::grades::{BracketKind, GradeSet};
use crate::signature::Signature;
use crate::table::RawTable;

/// Largest `n` with a reference table.
pub const GOLDEN_N_MAX: usize = 10;

macro_rules! golden_files {
    ($kind:literal: $($n:literal),*) => {
        [$(include_str!(concat!("../golden/", $kind, "_", $n, ".tsv"))),*]
    };
}

static COMMUTATOR: [&str; GOLDEN_N_MAX] =
    golden_files!("commutator": "01", "02", "03", "04", "05", "06", "07", "08", "09", "10");
static ANTICOMMUTATOR: [&str; GOLDEN_N_MAX] =
    golden_files!("anticommutator": "01", "02", "03", "04", "05", "06", "07", "08", "09", "10");
static OVERLAY: &str = include_str!("../golden/overlay.tsv");

/// Verbatim file contents of the reference table.
pub fn golden_text(n: usize, kind: BracketKind) -> Option<&'static str> {
    let files = match kind {
        BracketKind::Commutator => &COMMUTATOR,
        BracketKind::Anticommutator => &ANTICOMMUTATOR,
    };
    n.checked_sub(1).and_then(|i| files.get(i)).copied()
}

pub fn golden_table(n: usize, kind: BracketKind) -> Result<RawTable> {
    let text = golden_text(n, kind)
        .ok_or_else(|| Error::Domain(format!("no reference table for n = {n}")))?;
    RawTable::parse(text)
}

/// A documented misprint: the printed cell and what it should read.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlayEntry {
    pub kind: BracketKind,
    pub n: usize,
    pub row: usize,
    pub column: usize,
    pub printed: String,
    pub corrected: GradeSet,
}

pub fn overlay() -> Vec<OverlayEntry> {
    parse_overlay(OVERLAY).expect("embedded overlay is well formed")
}

pub fn parse_overlay(text: &str) -> Result<Vec<OverlayEntry>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split('\t').collect();
        let bad = |m: &str| Error::Parse {
            line: line_no,
            message: m.to_owned(),
        };
        if f.len() != 6 {
            return Err(bad("expected 6 tab-separated fields"));
        }
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad("bad integer field"));
        out.push(OverlayEntry {
            kind: f[0].parse().map_err(|_| bad("bad bracket kind"))?,
            n: num(f[1])?,
            row: num(f[2])?,
            column: num(f[3])?,
            printed: f[4].to_owned(),
            corrected: f[5].parse().map_err(|_| bad("bad corrected cell"))?,
        });
    }
    Ok(out)
}

/// Outcome for one cell that differs from its printed value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellReport {
    pub kind: BracketKind,
    pub n: usize,
    pub row: usize,
    pub column: usize,
    pub printed: String,
    pub computed: GradeSet,
    /// Brute-force value, filled in for overlay cells.
    pub brute_force: Option<GradeSet>,
}

/// Comparison of a computed table against its reference.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GoldenComparison {
    /// Cells that disagree with no documented reason, or overlay cells whose
    /// correction is not confirmed by brute force.
    pub mismatches: Vec<CellReport>,
    /// Documented misprints confirmed by brute force.
    pub warnings: Vec<CellReport>,
    /// Overlay entries for this table whose printed cell was not found.
    pub stale_overlay: Vec<OverlayEntry>,
}

impl GoldenComparison {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.stale_overlay.is_empty()
    }
}

/// Compare the formula table for `(n, kind)` cell by cell with the printed
/// reference; overlay cells are resolved by a brute-force sweep in `Cl(n, 0)`.
pub fn compare_with_golden(
    n: usize,
    kind: BracketKind,
    budget: Budget,
) -> Result<GoldenComparison> {
    let golden = golden_table(n, kind)?;
    let computed = build_table(n, kind)?;
    let overlay: Vec<OverlayEntry> = overlay()
        .into_iter()
        .filter(|o| o.kind == kind && o.n == n)
        .collect();
    let mut result = GoldenComparison::default();
    let mut used = vec![false; overlay.len()];

    for k in 1..=n {
        for l in 1..=n {
            let printed = golden.cell(k, l);
            let value = computed.get(k, l);
            if value.to_string() == printed {
                continue;
            }
            let mut report = CellReport {
                kind,
                n,
                row: k,
                column: l,
                printed: printed.to_owned(),
                computed: value,
                brute_force: None,
            };
            let documented = overlay
                .iter()
                .position(|o| o.row == k && o.column == l && o.printed == printed);
            match documented {
                Some(i) => {
                    used[i] = true;
                    let sig = Signature::euclidean(n)?;
                    let brute = actual_grades(&sig, k, l, kind, budget)?;
                    report.brute_force = Some(brute);
                    if brute == value && value == overlay[i].corrected {
                        result.warnings.push(report);
                    } else {
                        result.mismatches.push(report);
                    }
                }
                None => result.mismatches.push(report),
            }
        }
    }
    result.stale_overlay = overlay
        .into_iter()
        .zip(used)
        .filter_map(|(o, u)| (!u).then_some(o))
        .collect();
    Ok(result)
}

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::grades::{BracketKind, GradeSet};

/// Grade supports of `[U^k, V^l]` or `{U^k, V^l}` for `k, l` in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    n: usize,
    kind: BracketKind,
    cells: Vec<GradeSet>,
}

impl RankTable {
    pub fn from_fn<F>(n: usize, kind: BracketKind, mut cell: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Result<GradeSet>,
    {
        let mut cells = Vec::with_capacity(n * n);
        for k in 1..=n {
            for l in 1..=n {
                cells.push(cell(k, l)?);
            }
        }
        Ok(RankTable { n, kind, cells })
    }

    /// Row-major cells; `cells.len()` must be `n * n`.
    pub fn from_cells(n: usize, kind: BracketKind, cells: Vec<GradeSet>) -> Result<Self> {
        if cells.len() != n * n {
            return Err(Error::Validation(format!(
                "table of size {n} needs {} cells, got {}",
                n * n,
                cells.len()
            )));
        }
        Ok(RankTable { n, kind, cells })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> BracketKind {
        self.kind
    }

    /// Cell at row `k`, column `l` (both 1-based).
    pub fn get(&self, k: usize, l: usize) -> GradeSet {
        assert!((1..=self.n).contains(&k) && (1..=self.n).contains(&l));
        self.cells[(k - 1) * self.n + (l - 1)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[GradeSet]> {
        self.cells.chunks(self.n)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let cells = (0..n * n)
            .map(|i| self.cells[(i % n) * n + i / n])
            .collect();
        RankTable {
            n,
            kind: self.kind,
            cells,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Tab-separated text: a header `n=N 1 .. N`, then one row per rank with
    /// cells written as `/`-joined grades and `-` for the empty set.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={}", self.n);
        for l in 1..=self.n {
            write!(out, "\t{l}").unwrap();
        }
        out.push('\n');
        for (k, row) in self.rows().enumerate() {
            write!(out, "{}", k + 1).unwrap();
            for cell in row {
                write!(out, "\t{cell}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_text(kind: BracketKind, text: &str) -> Result<Self> {
        let raw = RawTable::parse(text)?;
        let mut cells = Vec::with_capacity(raw.n * raw.n);
        for (i, row) in raw.cells.iter().enumerate() {
            for cell in row {
                cells.push(cell.parse::<GradeSet>().map_err(|e| Error::Parse {
                    line: i + 2,
                    message: e.to_string(),
                })?);
            }
        }
        Self::from_cells(raw.n, kind, cells)
    }
}

/// A table in text form with its cells kept verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTable {
    pub n: usize,
    pub cells: Vec<Vec<String>>,
}

impl RawTable {
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |line: usize, message: String| Error::Parse { line, message };
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad(1, "empty table".into()))?;
        let mut head = header.split('\t');
        let n: usize = head
            .next()
            .and_then(|h| h.strip_prefix("n="))
            .and_then(|h| h.parse().ok())
            .ok_or_else(|| bad(1, format!("expected `n=<size>` header, got {header:?}")))?;
        let labels: Vec<&str> = head.collect();
        let expected: Vec<String> = (1..=n).map(|l| l.to_string()).collect();
        if labels != expected {
            return Err(bad(1, format!("column labels must be 1..{n}")));
        }

        let mut cells = Vec::with_capacity(n);
        for k in 1..=n {
            let line = lines
                .next()
                .ok_or_else(|| bad(k + 1, format!("missing row {k}")))?;
            let mut fields = line.split('\t');
            if fields.next() != Some(k.to_string().as_str()) {
                return Err(bad(k + 1, format!("row must start with label {k}")));
            }
            let row: Vec<String> = fields.map(str::to_owned).collect();
            if row.len() != n {
                return Err(bad(
                    k + 1,
                    format!("row {k} has {} cells, expected {n}", row.len()),
                ));
            }
            cells.push(row);
        }
        if let Some(extra) = lines.find(|l| !l.trim().is_empty()) {
            return Err(bad(n + 2, format!("trailing content {extra:?}")));
        }
        Ok(RawTable { n, cells })
    }

    pub fn cell(&self, k: usize, l: usize) -> &str {
        &self.cells[k - 1][l - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::build_table;

    #[test]
    fn text_round_trip() {
        for n in 1..=6 {
            for kind in BracketKind::ALL {
                let t = build_table(n, kind).unwrap();
                assert_eq!(RankTable::parse_text(kind, &t.to_text()).unwrap(), t);
            }
        }
    }

    #[test]
    fn text_layout() {
        let t = build_table(2, BracketKind::Commutator).unwrap();
        assert_eq!(t.to_text(), "n=2\t1\t2\n1\t2\t1\n2\t1\t-\n");
    }

    #[test]
    fn parse_errors_carry_line() {
        let err = RawTable::parse("n=2\t1\t2\n1\t2\t1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = RawTable::parse("n=2\t1\t3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = RankTable::parse_text(BracketKind::Commutator, "n=1\t1\n1\tx\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn transpose_involution() {
        let t = build_table(5, BracketKind::Anticommutator).unwrap();
        assert_eq!(t.transpose().transpose(), t);
        assert!(t.is_symmetric());
    }
}

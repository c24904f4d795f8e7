use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest grade a [`GradeSet`] can hold.
pub const MAX_GRADE: usize = 63;

/// A finite set of grades, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GradeSet(u64);

impl GradeSet {
    pub const EMPTY: GradeSet = GradeSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        GradeSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn single(grade: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(grade);
        s
    }

    /// `{0, 1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GRADE);
        GradeSet(if n == MAX_GRADE {
            u64::MAX
        } else {
            (1u64 << (n + 1)) - 1
        })
    }

    /// `{start, start+4, ...}` up to and including `end`. Empty when
    /// `start > end`; `None` if a member would be negative or too large.
    pub fn try_progression(start: i64, end: i64) -> Option<Self> {
        let mut s = Self::EMPTY;
        let mut g = start;
        while g <= end {
            if g < 0 || g > MAX_GRADE as i64 {
                return None;
            }
            s.insert(g as usize);
            g += 4;
        }
        Some(s)
    }

    /// Panicking form of [`GradeSet::try_progression`].
    pub fn progression(start: i64, end: i64) -> Self {
        Self::try_progression(start, end)
            .unwrap_or_else(|| panic!("progression {start}..={end} leaves the grade range"))
    }

    #[inline]
    pub fn insert(&mut self, grade: usize) {
        assert!(grade <= MAX_GRADE, "grade {grade} out of range");
        self.0 |= 1 << grade;
    }

    #[inline]
    pub fn remove(&mut self, grade: usize) {
        if grade <= MAX_GRADE {
            self.0 &= !(1 << grade);
        }
    }

    #[inline]
    pub fn contains(self, grade: usize) -> bool {
        grade <= MAX_GRADE && self.0 >> grade & 1 == 1
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        GradeSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        GradeSet(self.0 & other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..=MAX_GRADE).filter(move |&g| self.contains(g))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// True when the members form a progression with common difference 4.
    pub fn is_step4_progression(self) -> bool {
        let v = self.to_vec();
        v.windows(2).all(|w| w[1] - w[0] == 4)
    }
}

impl FromIterator<usize> for GradeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = GradeSet::EMPTY;
        for g in iter {
            s.insert(g);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for GradeSet {
    fn from(grades: [usize; N]) -> Self {
        grades.into_iter().collect()
    }
}

impl fmt::Debug for GradeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Table-cell form: members joined by `/`, the empty set as `-`.
impl fmt::Display for GradeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join("/"))
    }
}

impl FromStr for GradeSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(GradeSet::EMPTY);
        }
        let mut out = GradeSet::EMPTY;
        for part in s.split('/') {
            let g: usize = part.parse().map_err(|_| Error::Parse {
                line: 0,
                message: format!("bad grade {part:?} in cell {s:?}"),
            })?;
            if g > MAX_GRADE {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("grade {g} too large"),
                });
            }
            out.insert(g);
        }
        Ok(out)
    }
}

/// Which bracket: `[U,V] = UV - VU` or `{U,V} = UV + VU`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BracketKind {
    Commutator,
    Anticommutator,
}

impl BracketKind {
    pub const ALL: [BracketKind; 2] = [BracketKind::Commutator, BracketKind::Anticommutator];

    pub fn name(self) -> &'static str {
        match self {
            BracketKind::Commutator => "commutator",
            BracketKind::Anticommutator => "anticommutator",
        }
    }

    /// Parity of `kl - s` for which a blade pair survives the bracket.
    #[inline]
    pub(crate) fn surviving_parity(self) -> usize {
        match self {
            BracketKind::Commutator => 1,
            BracketKind::Anticommutator => 0,
        }
    }
}

impl fmt::Display for BracketKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BracketKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "commutator" | "comm" => Ok(BracketKind::Commutator),
            "anticommutator" | "anti" => Ok(BracketKind::Anticommutator),
            other => Err(Error::Domain(format!("unknown bracket kind {other:?}"))),
        }
    }
}

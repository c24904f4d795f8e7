//! Grade supports of brackets of homogeneous elements.
//!
//! Three independent routes compute the grades `r` for which
//! `[U^k, V^l]` (or `{U^k, V^l}`) has a nonzero rank-`r` part:
//!
//! * [`kernel_grades`]: the blade-pair rule. Two blades sharing `s` indices
//!   multiply into grade `k + l - 2s`, and the pair commutes or anticommutes
//!   according to the parity of `kl - s`.
//! * [`theorem_grades`]: the closed-form case analysis by parities of `n`,
//!   `k`, `l`, transcribed branch by branch.
//! * [`actual_grades`]: exhaustive brackets of every blade pair.

use crate::error::{domain, Error, Result};
use crate::grades::{BracketKind, GradeSet, MAX_GRADE};
use crate::multivector::blade_bracket;
use crate::signature::Signature;
use crate::table::RankTable;

/// Cap on the number of blade pairs a single brute-force call may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: u64,
}

impl Budget {
    /// `4^12` pairs: one full `(k, l)` sweep at `n = 12`.
    pub const DEFAULT_MAX_PAIRS: u64 = 1 << 24;

    pub fn new(max_pairs: u64) -> Self {
        Budget { max_pairs }
    }

    pub fn unlimited() -> Self {
        Budget {
            max_pairs: u64::MAX,
        }
    }

    pub fn check(&self, what: impl FnOnce() -> String, needed: u128) -> Result<()> {
        if needed > self.max_pairs as u128 {
            Err(Error::Budget {
                what: what(),
                needed,
                cap: self.max_pairs,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: Self::DEFAULT_MAX_PAIRS,
        }
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn check_ranks(n: usize, k: usize, l: usize) -> Result<()> {
    if n == 0 || n > MAX_GRADE {
        return Err(domain(format!("n = {n} outside [1, {MAX_GRADE}]")));
    }
    if k > n || l > n {
        return Err(domain(format!("ranks ({k}, {l}) outside [0, {n}]")));
    }
    Ok(())
}

/// Grade support predicted by the blade-pair parity rule.
///
/// With `a = max(k, l)`, `b = min(k, l)`, the number `s` of shared indices
/// ranges over `[max(0, a + b - n), b]`; a pair survives the commutator iff
/// `kl - s` is odd and the anticommutator iff it is even.
pub fn kernel_grades(n: usize, k: usize, l: usize, kind: BracketKind) -> Result<GradeSet> {
    check_ranks(n, k, l)?;
    let (a, b) = (k.max(l), k.min(l));
    let lowest = (a + b).saturating_sub(n);
    Ok((lowest..=b)
        .filter(|&s| (k * l - s) % 2 == kind.surviving_parity())
        .map(|s| a + b - 2 * s)
        .collect())
}

/// Grade support from the closed-form case analysis. Assumes nothing about
/// the order of `k` and `l`: brackets of homogeneous elements are
/// (anti)symmetric, so `k < l` is swapped first.
pub fn theorem_grades(n: usize, k: usize, l: usize, kind: BracketKind) -> Result<GradeSet> {
    check_ranks(n, k, l)?;
    let (k, l) = if k < l { (l, k) } else { (k, l) };
    let (n, k, l) = (n as i64, k as i64, l as i64);
    Ok(theorem_parts(n, k, l, kind)
        .into_iter()
        .flatten()
        .next()
        .expect("n >= k >= l is covered by one of the three parts"))
}

/// Each applicable part of the case analysis, for `n >= k >= l >= 0`:
/// `[low ranks (n >= k + l), high ranks (k + l >= n, k != n), top rank (k = n)]`.
/// Where the hypotheses overlap the parts must agree.
pub(crate) fn theorem_parts(n: i64, k: i64, l: i64, kind: BracketKind) -> [Option<GradeSet>; 3] {
    match kind {
        BracketKind::Commutator => commutator_cases(n, k, l),
        BracketKind::Anticommutator => anticommutator_cases(n, k, l),
    }
}

#[inline]
fn even(x: i64) -> bool {
    x % 2 == 0
}

fn prog(start: i64, end: i64) -> GradeSet {
    GradeSet::progression(start, end)
}

fn commutator_cases(n: i64, k: i64, l: i64) -> [Option<GradeSet>; 3] {
    let (ne, ke, le) = (even(n), even(k), even(l));

    let low = (n >= k + l).then(|| {
        if l == 0 {
            GradeSet::EMPTY
        } else if le {
            prog(k - l + 2, k + l - 2)
        } else if ke {
            prog(k - l, k + l - 2)
        } else {
            prog(k - l + 2, k + l)
        }
    });

    let high = (k + l >= n && k != n).then(|| {
        if ne && ke && !le {
            prog(k - l, 2 * n - k - l)
        } else if !ne && ke && !le {
            prog(k - l, 2 * n - k - l - 2)
        } else if (ne && !ke) || (!ne && ke && le) {
            prog(k - l + 2, 2 * n - k - l)
        } else {
            // n odd and k odd, or n, k, l all even
            prog(k - l + 2, 2 * n - k - l - 2)
        }
    });

    let top = (k == n).then(|| {
        if ne && !le {
            GradeSet::single((n - l) as usize)
        } else {
            GradeSet::EMPTY
        }
    });

    [low, high, top]
}

fn anticommutator_cases(n: i64, k: i64, l: i64) -> [Option<GradeSet>; 3] {
    let (ne, ke, le) = (even(n), even(k), even(l));

    let low = (n >= k + l).then(|| {
        if l == 0 {
            GradeSet::single(k as usize)
        } else if le {
            prog(k - l, k + l)
        } else if ke {
            prog(k - l + 2, k + l)
        } else {
            prog(k - l, k + l - 2)
        }
    });

    let high = (k + l >= n && k != n).then(|| {
        if !ne && ke && !le {
            prog(k - l + 2, 2 * n - k - l)
        } else if ne && ke && !le {
            prog(k - l + 2, 2 * n - k - l - 2)
        } else if (!ne && !ke) || (ne && ke && le) {
            prog(k - l, 2 * n - k - l)
        } else {
            // n even and k odd, or n odd and k, l even
            prog(k - l, 2 * n - k - l - 2)
        }
    });

    let top = (k == n).then(|| {
        if ne && !le {
            GradeSet::EMPTY
        } else {
            GradeSet::single((n - l) as usize)
        }
    });

    [low, high, top]
}

/// Union of the support grades of `bracket(A, B)` over every blade `A` of
/// grade `k` and `B` of grade `l`.
pub fn actual_grades(
    sig: &Signature,
    k: usize,
    l: usize,
    kind: BracketKind,
    budget: Budget,
) -> Result<GradeSet> {
    let n = sig.dim();
    check_ranks(n, k, l)?;
    budget.check(
        || format!("{kind} sweep of grades ({k}, {l}) in {sig}"),
        binomial(n, k) * binomial(n, l),
    )?;
    let left = sig.blades_of_grade(k);
    let right = sig.blades_of_grade(l);
    let mut out = GradeSet::EMPTY;
    for &a in &left {
        for &b in &right {
            if let Some((_, r)) = blade_bracket(sig, kind, a, b) {
                out.insert(r.grade());
            }
        }
    }
    Ok(out)
}

/// Table of [`theorem_grades`] over ranks `1..=n`.
pub fn build_table(n: usize, kind: BracketKind) -> Result<RankTable> {
    if n == 0 || n > MAX_GRADE {
        return Err(domain(format!("table size {n} outside [1, {MAX_GRADE}]")));
    }
    RankTable::from_fn(n, kind, |k, l| theorem_grades(n, k, l, kind))
}

/// Table filled by brute force in one pass over all blade pairs of grade >= 1.
pub fn actual_table(sig: &Signature, kind: BracketKind, budget: Budget) -> Result<RankTable> {
    let n = sig.dim();
    let nonscalar = (sig.basis_len() - 1) as u128;
    budget.check(|| format!("{kind} table of {sig}"), nonscalar * nonscalar)?;
    let mut cells = vec![GradeSet::EMPTY; n * n];
    for a in sig.basis().skip(1) {
        for b in sig.basis().skip(1) {
            if let Some((_, r)) = blade_bracket(sig, kind, a, b) {
                cells[(a.grade() - 1) * n + b.grade() - 1].insert(r.grade());
            }
        }
    }
    RankTable::from_fn(n, kind, |k, l| Ok(cells[(k - 1) * n + l - 1]))
}

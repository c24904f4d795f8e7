//! Specialised bracket formulas (equal ranks, one fixed rank, small ranks,
//! ranks near `n`) encoded as rules and audited against [`theorem_grades`].
//!
//! Each rule covers a family of rank pairs `(k, l)` with `k >= l` and lists
//! the printed branches. A branch is a condition on `(n, k, l)` and the
//! grade set it asserts. Branches that cannot be read unambiguously are
//! kept with the reason and reported as skipped, never checked.

use std::fmt;

use crate::formulas::theorem_grades;
use crate::grades::{BracketKind, GradeSet};

type Cond = fn(i64, i64, i64) -> bool;
type Rhs = fn(i64, i64, i64) -> Option<GradeSet>;
type Pairs = fn(i64) -> Vec<(i64, i64)>;

/// Printed blocks the rules are taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    EqualRanks,
    FixedSecondRank,
    SmallRanks,
    RanksNearN,
    NearNWithSmall,
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Block::EqualRanks => "equal ranks",
            Block::FixedSecondRank => "fixed second rank",
            Block::SmallRanks => "small ranks",
            Block::RanksNearN => "ranks near n",
            Block::NearNWithSmall => "rank near n with small rank",
        })
    }
}

struct Branch {
    text: &'static str,
    when: Cond,
    rhs: Result<Rhs, &'static str>,
}

pub struct Rule {
    pub block: Block,
    pub kind: BracketKind,
    pub label: &'static str,
    /// Set when the printed line lost its rank labels and they were
    /// recovered from the line order within the block.
    pub reconstructed_labels: bool,
    pairs: Pairs,
    branches: Vec<Branch>,
}

const BARE_ZERO: &str = "bare `0` in an anticommutator list: zero element or W^0";
const OVERLAP: &str = "conditions `n >= 2` and `n = 2` overlap";

fn br(text: &'static str, when: Cond, rhs: Rhs) -> Branch {
    Branch {
        text,
        when,
        rhs: Ok(rhs),
    }
}

fn unreadable(text: &'static str, when: Cond, why: &'static str) -> Branch {
    Branch {
        text,
        when,
        rhs: Err(why),
    }
}

fn always(_: i64, _: i64, _: i64) -> bool {
    true
}

fn zero(_: i64, _: i64, _: i64) -> Option<GradeSet> {
    Some(GradeSet::EMPTY)
}

/// Explicit grade list; `None` if any grade is negative.
fn w(grades: &[i64]) -> Option<GradeSet> {
    let mut s = GradeSet::EMPTY;
    for &g in grades {
        if g < 0 {
            return None;
        }
        s.insert(g as usize);
    }
    Some(s)
}

fn p(start: i64, end: i64) -> Option<GradeSet> {
    GradeSet::try_progression(start, end)
}

fn odd(x: i64) -> bool {
    x % 2 != 0
}

fn even(x: i64) -> bool {
    x % 2 == 0
}

fn equal_ranks(n: i64) -> Vec<(i64, i64)> {
    (0..=n).map(|k| (k, k)).collect()
}

macro_rules! fixed_second {
    ($l:literal) => {
        |n: i64| ($l..=n).map(|a| (a, $l)).collect::<Vec<_>>()
    };
}

macro_rules! fixed_pair {
    ($k:literal, $l:literal) => {
        |n: i64| if n >= $k { vec![($k, $l)] } else { vec![] }
    };
}

macro_rules! near_n {
    ($dk:literal, $l:expr, $min_n:literal) => {
        |n: i64| {
            if n >= $min_n {
                vec![(n - $dk, $l(n))]
            } else {
                vec![]
            }
        }
    };
}

fn rule(
    block: Block,
    kind: BracketKind,
    label: &'static str,
    pairs: Pairs,
    branches: Vec<Branch>,
) -> Rule {
    let reconstructed_labels = matches!(
        block,
        Block::SmallRanks | Block::RanksNearN | Block::NearNWithSmall
    );
    Rule {
        block,
        kind,
        label,
        reconstructed_labels,
        pairs,
        branches,
    }
}

/// Every encoded rule, in the order the blocks are printed.
pub fn rules() -> Vec<Rule> {
    use Block::*;
    use BracketKind::{Anticommutator as A, Commutator as C};

    vec![
        // k = l
        rule(
            EqualRanks,
            C,
            "[U^k, V^k]",
            equal_ranks,
            vec![
                br(
                    "W^2 + W^6 + ... + W^{2k}, k odd and n >= 2k",
                    |n, k, _| odd(k) && n >= 2 * k,
                    |_, k, _| p(2, 2 * k),
                ),
                br(
                    "W^2 + W^6 + ... + W^{2k-2}, k even and n >= 2k",
                    |n, k, _| even(k) && n >= 2 * k,
                    |_, k, _| p(2, 2 * k - 2),
                ),
                br(
                    "W^2 + W^6 + ... + W^{2n-2k}, 2k >= n, n and k of different parity",
                    |n, k, _| 2 * k >= n && odd(n + k),
                    |n, k, _| p(2, 2 * n - 2 * k),
                ),
                br(
                    "W^2 + W^6 + ... + W^{2n-2k-2}, 2k >= n, n and k of same parity",
                    |n, k, _| 2 * k >= n && even(n + k),
                    |n, k, _| p(2, 2 * n - 2 * k - 2),
                ),
                br("0, k = n or k = 0", |n, k, _| k == n || k == 0, zero),
            ],
        ),
        rule(
            EqualRanks,
            A,
            "{U^k, V^k}",
            equal_ranks,
            vec![
                br(
                    "W^0 + W^4 + ... + W^{2k-2}, k odd and n >= 2k",
                    |n, k, _| odd(k) && n >= 2 * k,
                    |_, k, _| p(0, 2 * k - 2),
                ),
                br(
                    "W^0 + W^4 + ... + W^{2k}, k even and n >= 2k",
                    |n, k, _| even(k) && n >= 2 * k,
                    |_, k, _| p(0, 2 * k),
                ),
                br(
                    "W^0 + W^4 + ... + W^{2n-2k-2}, 2k >= n, n and k of different parity",
                    |n, k, _| 2 * k >= n && odd(n + k),
                    |n, k, _| p(0, 2 * n - 2 * k - 2),
                ),
                br(
                    "W^0 + W^4 + ... + W^{2n-2k}, 2k >= n, n and k of same parity",
                    |n, k, _| 2 * k >= n && even(n + k),
                    |n, k, _| p(0, 2 * n - 2 * k),
                ),
                unreadable("0, k = n or k = 0", |n, k, _| k == n || k == 0, BARE_ZERO),
            ],
        ),
        // one rank fixed, the other (a) free with a >= l
        rule(
            FixedSecondRank,
            C,
            "[U^a, V^1]",
            fixed_second!(1),
            vec![
                br("W^{a-1}, a even", |_, a, _| even(a), |_, a, _| w(&[a - 1])),
                br(
                    "W^{a+1}, a odd, a != n",
                    |n, a, _| odd(a) && a != n,
                    |_, a, _| w(&[a + 1]),
                ),
                br("0, a odd, a = n", |n, a, _| odd(a) && a == n, zero),
            ],
        ),
        rule(
            FixedSecondRank,
            A,
            "{U^a, V^1}",
            fixed_second!(1),
            vec![
                br("W^{a-1}, a odd", |_, a, _| odd(a), |_, a, _| w(&[a - 1])),
                br(
                    "W^{a+1}, a even, a != n",
                    |n, a, _| even(a) && a != n,
                    |_, a, _| w(&[a + 1]),
                ),
                unreadable("0, a even, a = n", |n, a, _| even(a) && a == n, BARE_ZERO),
            ],
        ),
        rule(
            FixedSecondRank,
            C,
            "[U^a, V^2]",
            fixed_second!(2),
            vec![
                br("W^a, a != n", |n, a, _| a != n, |_, a, _| w(&[a])),
                br("0, a = n", |n, a, _| a == n, zero),
            ],
        ),
        rule(
            FixedSecondRank,
            A,
            "{U^a, V^2}",
            fixed_second!(2),
            vec![
                br(
                    "W^{a-2} + W^{a+2}, a != n, n-1",
                    |n, a, _| a != n && a != n - 1,
                    |_, a, _| w(&[a - 2, a + 2]),
                ),
                br(
                    "W^{a-2}, a = n, n-1",
                    |n, a, _| a == n || a == n - 1,
                    |_, a, _| w(&[a - 2]),
                ),
            ],
        ),
        rule(
            FixedSecondRank,
            C,
            "[U^a, V^3]",
            fixed_second!(3),
            vec![
                br(
                    "W^{a-3} + W^{a+1}, a even, a <= n-2",
                    |n, a, _| even(a) && a <= n - 2,
                    |_, a, _| w(&[a - 3, a + 1]),
                ),
                br(
                    "W^{a-3}, a even, a = n-1, n",
                    |n, a, _| even(a) && (a == n - 1 || a == n),
                    |_, a, _| w(&[a - 3]),
                ),
                br(
                    "W^{a-1} + W^{a+3}, a odd, a <= n-3",
                    |n, a, _| odd(a) && a <= n - 3,
                    |_, a, _| w(&[a - 1, a + 3]),
                ),
                br(
                    "W^{a-1}, a odd, a = n-2, n-1",
                    |n, a, _| odd(a) && (a == n - 2 || a == n - 1),
                    |_, a, _| w(&[a - 1]),
                ),
                br("0, a odd, a = n", |n, a, _| odd(a) && a == n, zero),
            ],
        ),
        rule(
            FixedSecondRank,
            A,
            "{U^a, V^3}",
            fixed_second!(3),
            vec![
                br(
                    "W^{a-3} + W^{a+1}, a odd, a <= n-2",
                    |n, a, _| odd(a) && a <= n - 2,
                    |_, a, _| w(&[a - 3, a + 1]),
                ),
                br(
                    "W^{a-3}, a odd, a = n-1, n",
                    |n, a, _| odd(a) && (a == n - 1 || a == n),
                    |_, a, _| w(&[a - 3]),
                ),
                br(
                    "W^{a-1} + W^{a+3}, a even, a <= n-3",
                    |n, a, _| even(a) && a <= n - 3,
                    |_, a, _| w(&[a - 1, a + 3]),
                ),
                br(
                    "W^{a-1}, a even, a = n-2, n-1",
                    |n, a, _| even(a) && (a == n - 2 || a == n - 1),
                    |_, a, _| w(&[a - 1]),
                ),
                unreadable("0, a even, a = n", |n, a, _| even(a) && a == n, BARE_ZERO),
            ],
        ),
        rule(
            FixedSecondRank,
            C,
            "[U^a, V^4]",
            fixed_second!(4),
            vec![
                br(
                    "W^{a-2} + W^{a+2}, a <= n-3",
                    |n, a, _| a <= n - 3,
                    |_, a, _| w(&[a - 2, a + 2]),
                ),
                br(
                    "W^{a-2}, a = n-2, n-1",
                    |n, a, _| a == n - 2 || a == n - 1,
                    |_, a, _| w(&[a - 2]),
                ),
                br("0, a = n", |n, a, _| a == n, zero),
            ],
        ),
        rule(
            FixedSecondRank,
            A,
            "{U^a, V^4}",
            fixed_second!(4),
            vec![
                br(
                    "W^{a-4} + W^a + W^{a+4}, a <= n-4",
                    |n, a, _| a <= n - 4,
                    |_, a, _| w(&[a - 4, a, a + 4]),
                ),
                br(
                    "W^{a-4} + W^a, a = n-3, n-2",
                    |n, a, _| a == n - 3 || a == n - 2,
                    |_, a, _| w(&[a - 4, a]),
                ),
                br(
                    "W^{a-4}, a = n-1, n",
                    |n, a, _| a == n - 1 || a == n,
                    |_, a, _| w(&[a - 4]),
                ),
            ],
        ),
        // small ranks
        rule(
            SmallRanks,
            C,
            "[U^1, V^1]",
            fixed_pair!(1, 1),
            vec![
                br("W^2, n >= 2", |n, _, _| n >= 2, |_, _, _| w(&[2])),
                br("0, n = 1", |n, _, _| n == 1, zero),
            ],
        ),
        rule(
            SmallRanks,
            A,
            "{U^1, V^1}",
            fixed_pair!(1, 1),
            vec![br("W^0", always, |_, _, _| w(&[0]))],
        ),
        rule(
            SmallRanks,
            C,
            "[U^2, V^1]",
            fixed_pair!(2, 1),
            vec![br("W^1", always, |_, _, _| w(&[1]))],
        ),
        rule(
            SmallRanks,
            A,
            "{U^2, V^1}",
            fixed_pair!(2, 1),
            vec![
                unreadable("W^3, n >= 2", |n, _, _| n >= 2, OVERLAP),
                unreadable("0, n = 2", |n, _, _| n == 2, BARE_ZERO),
            ],
        ),
        rule(
            SmallRanks,
            C,
            "[U^2, V^2]",
            fixed_pair!(2, 2),
            vec![
                br("W^2, n >= 3", |n, _, _| n >= 3, |_, _, _| w(&[2])),
                br("0, n = 2", |n, _, _| n == 2, zero),
            ],
        ),
        rule(
            SmallRanks,
            A,
            "{U^2, V^2}",
            fixed_pair!(2, 2),
            vec![
                br(
                    "W^0 + W^4, n != 2, 3",
                    |n, _, _| n != 2 && n != 3,
                    |_, _, _| w(&[0, 4]),
                ),
                br(
                    "W^0, n = 2, 3",
                    |n, _, _| n == 2 || n == 3,
                    |_, _, _| w(&[0]),
                ),
            ],
        ),
        rule(
            SmallRanks,
            C,
            "[U^3, V^1]",
            fixed_pair!(3, 1),
            vec![
                br("W^4, n >= 4", |n, _, _| n >= 4, |_, _, _| w(&[4])),
                br("0, n = 3", |n, _, _| n == 3, zero),
            ],
        ),
        rule(
            SmallRanks,
            A,
            "{U^3, V^1}",
            fixed_pair!(3, 1),
            vec![br("W^2", always, |_, _, _| w(&[2]))],
        ),
        rule(
            SmallRanks,
            C,
            "[U^3, V^2]",
            fixed_pair!(3, 2),
            vec![
                br("W^3, n >= 4", |n, _, _| n >= 4, |_, _, _| w(&[3])),
                br("0, n = 3", |n, _, _| n == 3, zero),
            ],
        ),
        rule(
            SmallRanks,
            A,
            "{U^3, V^2}",
            fixed_pair!(3, 2),
            vec![
                br(
                    "W^1 + W^5, n != 3, 4",
                    |n, _, _| n != 3 && n != 4,
                    |_, _, _| w(&[1, 5]),
                ),
                br(
                    "W^1, n = 3, 4",
                    |n, _, _| n == 3 || n == 4,
                    |_, _, _| w(&[1]),
                ),
            ],
        ),
        rule(
            SmallRanks,
            C,
            "[U^3, V^3]",
            fixed_pair!(3, 3),
            vec![
                br("W^2 + W^6, n >= 6", |n, _, _| n >= 6, |_, _, _| w(&[2, 6])),
                br(
                    "W^2, n = 4, 5",
                    |n, _, _| n == 4 || n == 5,
                    |_, _, _| w(&[2]),
                ),
                br("0, n = 3", |n, _, _| n == 3, zero),
            ],
        ),
        rule(
            SmallRanks,
            A,
            "{U^3, V^3}",
            fixed_pair!(3, 3),
            vec![
                br("W^0 + W^4, n >= 5", |n, _, _| n >= 5, |_, _, _| w(&[0, 4])),
                br(
                    "W^0, n = 3, 4",
                    |n, _, _| n == 3 || n == 4,
                    |_, _, _| w(&[0]),
                ),
            ],
        ),
        rule(
            SmallRanks,
            C,
            "[U^4, V^1]",
            fixed_pair!(4, 1),
            vec![br("W^3", always, |_, _, _| w(&[3]))],
        ),
        rule(
            SmallRanks,
            A,
            "{U^4, V^1}",
            fixed_pair!(4, 1),
            vec![
                br("W^5, n >= 5", |n, _, _| n >= 5, |_, _, _| w(&[5])),
                unreadable("0, n = 4", |n, _, _| n == 4, BARE_ZERO),
            ],
        ),
        rule(
            SmallRanks,
            C,
            "[U^4, V^2]",
            fixed_pair!(4, 2),
            vec![
                br("W^4, n >= 5", |n, _, _| n >= 5, |_, _, _| w(&[4])),
                br("0, n = 4", |n, _, _| n == 4, zero),
            ],
        ),
        rule(
            SmallRanks,
            A,
            "{U^4, V^2}",
            fixed_pair!(4, 2),
            vec![
                br(
                    "W^2 + W^6, n != 4, 5",
                    |n, _, _| n != 4 && n != 5,
                    |_, _, _| w(&[2, 6]),
                ),
                br(
                    "W^2, n = 4, 5",
                    |n, _, _| n == 4 || n == 5,
                    |_, _, _| w(&[2]),
                ),
            ],
        ),
        rule(
            SmallRanks,
            C,
            "[U^4, V^3]",
            fixed_pair!(4, 3),
            vec![
                br("W^1 + W^5, n >= 6", |n, _, _| n >= 6, |_, _, _| w(&[1, 5])),
                br(
                    "W^1, n = 4, 5",
                    |n, _, _| n == 4 || n == 5,
                    |_, _, _| w(&[1]),
                ),
            ],
        ),
        rule(
            SmallRanks,
            A,
            "{U^4, V^3}",
            fixed_pair!(4, 3),
            vec![
                br("W^3 + W^7, n >= 7", |n, _, _| n >= 7, |_, _, _| w(&[3, 7])),
                br(
                    "W^3, n = 5, 6",
                    |n, _, _| n == 5 || n == 6,
                    |_, _, _| w(&[3]),
                ),
                unreadable("0, n = 4", |n, _, _| n == 4, BARE_ZERO),
            ],
        ),
        rule(
            SmallRanks,
            C,
            "[U^4, V^4]",
            fixed_pair!(4, 4),
            vec![
                br("W^2 + W^6, n >= 7", |n, _, _| n >= 7, |_, _, _| w(&[2, 6])),
                br(
                    "W^2, n = 5, 6",
                    |n, _, _| n == 5 || n == 6,
                    |_, _, _| w(&[2]),
                ),
                br("0, n = 4", |n, _, _| n == 4, zero),
            ],
        ),
        rule(
            SmallRanks,
            A,
            "{U^4, V^4}",
            fixed_pair!(4, 4),
            vec![
                br(
                    "W^0 + W^4 + W^8, n >= 8",
                    |n, _, _| n >= 8,
                    |_, _, _| w(&[0, 4, 8]),
                ),
                br(
                    "W^0 + W^4, n = 6, 7",
                    |n, _, _| n == 6 || n == 7,
                    |_, _, _| w(&[0, 4]),
                ),
                unreadable("0, n = 4, 5", |n, _, _| n == 4 || n == 5, BARE_ZERO),
            ],
        ),
        // both ranks near n
        rule(
            RanksNearN,
            C,
            "[U^n, V^n]",
            near_n!(0, |n| n, 1),
            vec![br("0", always, zero)],
        ),
        rule(
            RanksNearN,
            A,
            "{U^n, V^n}",
            near_n!(0, |n| n, 1),
            vec![br("W^0", always, |_, _, _| w(&[0]))],
        ),
        rule(
            RanksNearN,
            C,
            "[U^n, V^{n-1}]",
            near_n!(0, |n| n - 1, 1),
            vec![
                br("0, n odd", |n, _, _| odd(n), zero),
                br("W^1, n even", |n, _, _| even(n), |_, _, _| w(&[1])),
            ],
        ),
        rule(
            RanksNearN,
            A,
            "{U^n, V^{n-1}}",
            near_n!(0, |n| n - 1, 1),
            vec![
                unreadable("0, n even", |n, _, _| even(n), BARE_ZERO),
                br("W^1, n odd", |n, _, _| odd(n), |_, _, _| w(&[1])),
            ],
        ),
        rule(
            RanksNearN,
            C,
            "[U^n, V^{n-2}]",
            near_n!(0, |n| n - 2, 2),
            vec![br("0", always, zero)],
        ),
        rule(
            RanksNearN,
            A,
            "{U^n, V^{n-2}}",
            near_n!(0, |n| n - 2, 2),
            vec![br("W^2", always, |_, _, _| w(&[2]))],
        ),
        rule(
            RanksNearN,
            C,
            "[U^{n-1}, V^{n-1}]",
            near_n!(1, |n| n - 1, 1),
            vec![
                br("W^2, n != 1", |n, _, _| n != 1, |_, _, _| w(&[2])),
                br("0, n = 1", |n, _, _| n == 1, zero),
            ],
        ),
        rule(
            RanksNearN,
            A,
            "{U^{n-1}, V^{n-1}}",
            near_n!(1, |n| n - 1, 1),
            vec![br("W^0", always, |_, _, _| w(&[0]))],
        ),
        rule(
            RanksNearN,
            C,
            "[U^{n-1}, V^{n-2}]",
            near_n!(1, |n| n - 2, 2),
            vec![
                br("W^1, n odd", |n, _, _| odd(n), |_, _, _| w(&[1])),
                br(
                    "W^3, n even, n != 2",
                    |n, _, _| even(n) && n != 2,
                    |_, _, _| w(&[3]),
                ),
                br("0, n = 2", |n, _, _| n == 2, zero),
            ],
        ),
        rule(
            RanksNearN,
            A,
            "{U^{n-1}, V^{n-2}}",
            near_n!(1, |n| n - 2, 2),
            vec![
                br("W^1, n even", |n, _, _| even(n), |_, _, _| w(&[1])),
                br("W^3, n odd", |n, _, _| odd(n), |_, _, _| w(&[3])),
            ],
        ),
        rule(
            RanksNearN,
            C,
            "[U^{n-2}, V^{n-2}]",
            near_n!(2, |n| n - 2, 2),
            vec![
                br("W^2, n >= 3", |n, _, _| n >= 3, |_, _, _| w(&[2])),
                br("0, n = 2", |n, _, _| n == 2, zero),
            ],
        ),
        rule(
            RanksNearN,
            A,
            "{U^{n-2}, V^{n-2}}",
            near_n!(2, |n| n - 2, 2),
            vec![
                br("W^0 + W^4, n >= 4", |n, _, _| n >= 4, |_, _, _| w(&[0, 4])),
                br(
                    "W^0, n = 2, 3",
                    |n, _, _| n == 2 || n == 3,
                    |_, _, _| w(&[0]),
                ),
            ],
        ),
        // first rank near n, second small
        rule(
            NearNWithSmall,
            C,
            "[U^n, V^1]",
            near_n!(0, |_| 1, 1),
            vec![
                br("W^{n-1}, n even", |n, _, _| even(n), |n, _, _| w(&[n - 1])),
                br("0, n odd", |n, _, _| odd(n), zero),
            ],
        ),
        rule(
            NearNWithSmall,
            A,
            "{U^n, V^1}",
            near_n!(0, |_| 1, 1),
            vec![
                unreadable("0, n even", |n, _, _| even(n), BARE_ZERO),
                br("W^{n-1}, n odd", |n, _, _| odd(n), |n, _, _| w(&[n - 1])),
            ],
        ),
        rule(
            NearNWithSmall,
            C,
            "[U^{n-1}, V^1]",
            near_n!(1, |_| 1, 2),
            vec![
                br("W^n, n even", |n, _, _| even(n), |n, _, _| w(&[n])),
                br("W^{n-2}, n odd", |n, _, _| odd(n), |n, _, _| w(&[n - 2])),
            ],
        ),
        rule(
            NearNWithSmall,
            A,
            "{U^{n-1}, V^1}",
            near_n!(1, |_| 1, 2),
            vec![
                br("W^{n-2}, n even", |n, _, _| even(n), |n, _, _| w(&[n - 2])),
                br("W^n, n odd", |n, _, _| odd(n), |n, _, _| w(&[n])),
            ],
        ),
        rule(
            NearNWithSmall,
            C,
            "[U^{n-2}, V^1]",
            near_n!(2, |_| 1, 3),
            vec![
                br("W^{n-3}, n even", |n, _, _| even(n), |n, _, _| w(&[n - 3])),
                br("W^{n-1}, n odd", |n, _, _| odd(n), |n, _, _| w(&[n - 1])),
            ],
        ),
        rule(
            NearNWithSmall,
            A,
            "{U^{n-2}, V^1}",
            near_n!(2, |_| 1, 3),
            vec![
                br("W^{n-1}, n even", |n, _, _| even(n), |n, _, _| w(&[n - 1])),
                br("W^{n-3}, n odd", |n, _, _| odd(n), |n, _, _| w(&[n - 3])),
            ],
        ),
        rule(
            NearNWithSmall,
            C,
            "[U^n, V^2]",
            near_n!(0, |_| 2, 2),
            vec![br("0", always, zero)],
        ),
        rule(
            NearNWithSmall,
            A,
            "{U^n, V^2}",
            near_n!(0, |_| 2, 2),
            vec![br("W^{n-2}", always, |n, _, _| w(&[n - 2]))],
        ),
        rule(
            NearNWithSmall,
            C,
            "[U^{n-1}, V^2]",
            near_n!(1, |_| 2, 3),
            vec![br("W^{n-1}", always, |n, _, _| w(&[n - 1]))],
        ),
        rule(
            NearNWithSmall,
            A,
            "{U^{n-1}, V^2}",
            near_n!(1, |_| 2, 3),
            vec![br("W^{n-3}", always, |n, _, _| w(&[n - 3]))],
        ),
        rule(
            NearNWithSmall,
            C,
            "[U^{n-2}, V^2]",
            near_n!(2, |_| 2, 4),
            vec![br("W^{n-2}", always, |n, _, _| w(&[n - 2]))],
        ),
        rule(
            NearNWithSmall,
            A,
            "{U^{n-2}, V^2}",
            near_n!(2, |_| 2, 4),
            vec![br("W^{n-4} + W^n", always, |n, _, _| w(&[n - 4, n]))],
        ),
    ]
}

/// A checked branch that disagrees with the closed form, or a rank pair no
/// branch covers (`branch` is then `None`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub label: &'static str,
    pub branch: Option<&'static str>,
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub stated: Option<GradeSet>,
    pub theorem: GradeSet,
}

/// An unreadable branch with the closed-form values at the points it covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skipped {
    pub label: &'static str,
    pub branch: &'static str,
    pub reason: &'static str,
    pub observed: Vec<GradeSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialCaseReport {
    pub n_max: usize,
    pub rules: usize,
    pub reconstructed: Vec<&'static str>,
    /// Number of `(rule branch, n, k, l)` evaluations compared.
    pub checks: usize,
    pub mismatches: Vec<Mismatch>,
    pub skipped: Vec<Skipped>,
}

impl SpecialCaseReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Evaluate every rule for `1 <= n <= n_max` against [`theorem_grades`].
pub fn special_case_report(n_max: usize) -> SpecialCaseReport {
    audit(&rules(), n_max)
}

fn audit(rules: &[Rule], n_max: usize) -> SpecialCaseReport {
    let mut report = SpecialCaseReport {
        n_max,
        rules: rules.len(),
        reconstructed: rules
            .iter()
            .filter(|r| r.reconstructed_labels)
            .map(|r| r.label)
            .collect(),
        checks: 0,
        mismatches: Vec::new(),
        skipped: Vec::new(),
    };

    for rule in rules {
        let mut observed: Vec<Vec<GradeSet>> = vec![Vec::new(); rule.branches.len()];
        for n in 1..=n_max as i64 {
            for (k, l) in (rule.pairs)(n) {
                debug_assert!(n >= k && k >= l && l >= 0, "{} at n={n}", rule.label);
                let theorem = theorem_grades(n as usize, k as usize, l as usize, rule.kind)
                    .expect("rule pairs lie in range");
                let mut covered = false;
                for (i, branch) in rule.branches.iter().enumerate() {
                    if !(branch.when)(n, k, l) {
                        continue;
                    }
                    covered = true;
                    match branch.rhs {
                        Ok(rhs) => {
                            report.checks += 1;
                            let stated = rhs(n, k, l);
                            if stated != Some(theorem) {
                                report.mismatches.push(Mismatch {
                                    label: rule.label,
                                    branch: Some(branch.text),
                                    n: n as usize,
                                    k: k as usize,
                                    l: l as usize,
                                    stated,
                                    theorem,
                                });
                            }
                        }
                        Err(_) => {
                            if !observed[i].contains(&theorem) {
                                observed[i].push(theorem);
                            }
                        }
                    }
                }
                if !covered {
                    report.mismatches.push(Mismatch {
                        label: rule.label,
                        branch: None,
                        n: n as usize,
                        k: k as usize,
                        l: l as usize,
                        stated: None,
                        theorem,
                    });
                }
            }
        }
        for (branch, seen) in rule.branches.iter().zip(observed) {
            if let Err(reason) = branch.rhs {
                report.skipped.push(Skipped {
                    label: rule.label,
                    branch: branch.text,
                    reason,
                    observed: seen,
                });
            }
        }
    }
    report
}

impl fmt::Display for SpecialCaseReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "special cases: {} rules, {} checks for n <= {}, {} mismatches, {} skipped",
            self.rules,
            self.checks,
            self.n_max,
            self.mismatches.len(),
            self.skipped.len()
        )?;
        for m in &self.mismatches {
            let stated = m.stated.map_or("invalid".to_owned(), |s| s.to_string());
            writeln!(
                f,
                "  MISMATCH {} [{}] at n={} (k={}, l={}): stated {}, closed form {}",
                m.label,
                m.branch.unwrap_or("no branch applies"),
                m.n,
                m.k,
                m.l,
                stated,
                m.theorem
            )?;
        }
        for s in &self.skipped {
            let seen: Vec<String> = s
                .observed
                .iter()
                .map(|g| {
                    if g.is_empty() {
                        "{}".to_owned()
                    } else {
                        format!("{{{g}}}")
                    }
                })
                .collect();
            writeln!(
                f,
                "  skipped: unreadable source {} [{}]: {}; closed form gives {}",
                s.label,
                s.branch,
                s.reason,
                if seen.is_empty() {
                    "nothing in range".to_owned()
                } else {
                    seen.join(", ")
                }
            )?;
        }
        Ok(())
    }
}

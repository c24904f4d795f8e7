//! Graded Lie subalgebras `⊕_{k in S} a_k C_k^R(p, q)` of the Lie algebra
//! `{u : u* = -u}` and their real/complex analogues `⊕_{k in S} C_k(p, q)`.

use std::fmt;

use num_complex::Complex;

use crate::error::{domain, Error, Result};
use crate::formulas::{binomial, kernel_grades, Budget};
use crate::grades::{BracketKind, GradeSet, MAX_GRADE};
use crate::multivector::blade_bracket;
use crate::signature::Signature;

/// Largest `n` with a transcribed listing.
pub const LISTING_N_MAX: usize = 10;

/// Default ceiling for [`enumerate_closed`] (`2^{n+1}` candidate sets).
pub const ENUMERATION_N_MAX: usize = 14;

/// The phases `a_k` of the Lie algebra elements: `a_k = i` for
/// `k ≡ 0, 1 (mod 4)` and `a_k = 1` for `k ≡ 2, 3 (mod 4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CoefficientProfile;

impl CoefficientProfile {
    /// Exponent of `i` in `a_k`.
    #[inline]
    pub fn phase(k: usize) -> u8 {
        u8::from(k % 4 <= 1)
    }

    pub fn coefficient<T: num_traits::Zero + num_traits::One>(k: usize) -> Complex<T> {
        if Self::phase(k) == 1 {
            Complex::new(T::zero(), T::one())
        } else {
            Complex::new(T::one(), T::zero())
        }
    }

    /// `a_k a_l` is a real multiple of `a_m`.
    #[inline]
    pub fn compatible(k: usize, l: usize, m: usize) -> bool {
        (Self::phase(k) + Self::phase(l) + Self::phase(m)) % 2 == 0
    }
}

/// Which algebra the graded subspace lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `⊕ a_k C_k^R(p, q)` inside the Lie algebra of the pseudounitary group.
    ComplexLie,
    /// `⊕ C_k(p, q)` inside the real or complex Clifford algebra.
    Plain,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::ComplexLie => "complex-lie",
            Variant::Plain => "plain",
        })
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complex-lie" => Ok(Variant::ComplexLie),
            "plain" => Ok(Variant::Plain),
            other => Err(domain(format!("unknown variant {other:?}"))),
        }
    }
}

/// Where a graded subspace came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// One of the twelve catalog types.
    Catalog(u8),
    /// A catalog type with grade 0 and/or grade n adjoined.
    Augmented { base: u8, added: GradeSet },
    /// Entry of the transcribed per-n listing, numbered as printed.
    Listing(u8),
    /// Found by exhaustive search.
    Enumerated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GradedSubspace {
    pub n: usize,
    pub grades: GradeSet,
    pub variant: Variant,
    pub provenance: Provenance,
}

impl GradedSubspace {
    pub fn new(
        n: usize,
        grades: GradeSet,
        variant: Variant,
        provenance: Provenance,
    ) -> Result<Self> {
        if grades.max().is_some_and(|g| g > n) {
            return Err(domain(format!("grades {grades:?} exceed n = {n}")));
        }
        Ok(GradedSubspace {
            n,
            grades,
            variant,
            provenance,
        })
    }
}

/// `i u^1 + u^2` style, `a_k` decorations only in the complex-lie variant.
impl fmt::Display for GradedSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.grades.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .grades
            .iter()
            .map(|k| match self.variant {
                Variant::ComplexLie if CoefficientProfile::phase(k) == 1 => format!("i u^{k}"),
                _ => format!("u^{k}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// Minimum `n` at which each of the twelve types is stated.
const ITEM_MIN_N: [usize; 12] = [1, 1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 9];

fn set_of(n: usize, grades: &[i64]) -> Option<GradeSet> {
    let mut s = GradeSet::EMPTY;
    for &g in grades {
        if g < 0 || g > n as i64 {
            return None;
        }
        s.insert(g as usize);
    }
    Some(s)
}

/// Periodic pattern `{g <= top : member(g)}` cut at the largest admissible
/// top grade.
fn truncated(
    n: usize,
    member: fn(usize) -> bool,
    top_ok: fn(usize, usize) -> bool,
) -> Option<GradeSet> {
    let top = (0..=n).rev().find(|&k| member(k) && top_ok(k, n))?;
    Some((0..=top).filter(|&g| member(g)).collect())
}

/// Grade set of catalog type `item` evaluated at `n`, regardless of whether
/// the type is stated for that `n`. `None` if the pattern does not fit.
pub fn item_grades(item: u8, n: usize) -> Option<GradeSet> {
    let m = n as i64;
    match item {
        1 => set_of(n, &[0]),
        2 => set_of(n, &[m]),
        3 => set_of(n, &[1, 2]),
        4 => set_of(n, &[2]),
        5 => {
            let top = if n % 2 == 0 { m } else { m - 1 };
            if top < 1 {
                return None;
            }
            Some((1..=top as usize).collect())
        }
        6 => set_of(n, &[2, m - 1]),
        7 => set_of(n, &[2, m - 2]),
        8 if n % 2 == 1 => set_of(n, &[1, 2, m - 2, m - 1]),
        8 => set_of(n, &[1, 2, m - 1, m]),
        // 2, 3, 6, 7, 10, 11, ...; top k with n = k+1, k+2 (k odd) or n = k, k+1 (k even)
        9 => truncated(
            n,
            |g| g >= 2 && g % 4 >= 2,
            |k, n| {
                if k % 2 == 1 {
                    n - k == 1 || n - k == 2
                } else {
                    n - k <= 1
                }
            },
        ),
        // 2, 4, 6, ...; n = k+1, k+2
        10 => truncated(n, |g| g >= 2 && g % 2 == 0, |k, n| n - k == 1 || n - k == 2),
        // 1, 2, 5, 6, 9, 10, ...; k even, n = k, ..., k+3
        11 => truncated(
            n,
            |g| g % 4 == 1 || g % 4 == 2,
            |k, n| k % 2 == 0 && n - k <= 3,
        ),
        // 2, 6, 10, ...; n = k+1, ..., k+4
        12 => truncated(n, |g| g % 4 == 2, |k, n| (1..=4).contains(&(n - k))),
        _ => None,
    }
}

/// The catalog types stated for `n`, in item order, with repeated grade
/// sets dropped.
pub fn catalog(n: usize, variant: Variant) -> Result<Vec<GradedSubspace>> {
    if n == 0 || n > MAX_GRADE {
        return Err(domain(format!("n = {n} outside [1, {MAX_GRADE}]")));
    }
    let mut out: Vec<GradedSubspace> = Vec::new();
    for item in 1..=12u8 {
        if n < ITEM_MIN_N[item as usize - 1] {
            continue;
        }
        let grades = item_grades(item, n).expect("stated items fit their n range");
        if out.iter().all(|s| s.grades != grades) {
            out.push(GradedSubspace {
                n,
                grades,
                variant,
                provenance: Provenance::Catalog(item),
            });
        }
    }
    Ok(out)
}

/// Grades that may be adjoined to `base` to give a reducible subalgebra:
/// grade 0 always; grade n when n is odd, or when n is even and every grade
/// of `base` is even.
pub fn augmentation_options(n: usize, base: GradeSet) -> Vec<GradeSet> {
    let mut opts = vec![GradeSet::single(0)];
    let all_even = base.iter().all(|g| g % 2 == 0);
    if n % 2 == 1 || all_even {
        opts.push(GradeSet::single(n));
        opts.push(GradeSet::from([0, n]));
    }
    opts
}

/// Reducible subalgebras obtained from the catalog by adjoining grade 0 or
/// grade n, excluding sets already in the catalog.
pub fn augmentations(n: usize, variant: Variant) -> Result<Vec<GradedSubspace>> {
    let base = catalog(n, variant)?;
    let mut out: Vec<GradedSubspace> = Vec::new();
    for b in &base {
        let Provenance::Catalog(item) = b.provenance else {
            unreachable!()
        };
        for add in augmentation_options(n, b.grades) {
            let grades = b.grades.union(add);
            let added = add.intersection(GradeSet::from_bits(!b.grades.bits()));
            if added.is_empty()
                || base.iter().any(|s| s.grades == grades)
                || out.iter().any(|s| s.grades == grades)
            {
                continue;
            }
            out.push(GradedSubspace {
                n,
                grades,
                variant,
                provenance: Provenance::Augmented { base: item, added },
            });
        }
    }
    Ok(out)
}

/// Per-n listings exactly as printed.
const LISTINGS: [&[&str]; LISTING_N_MAX] = [
    &["i u^0", "i u^1"],
    &["i u^0", "u^2", "i u^1 + u^2"],
    &["i u^0", "u^3", "i u^1 + u^2", "u^2"],
    &[
        "i u^0",
        "i u^4",
        "i u^1 + u^2",
        "u^2",
        "i u^1 + u^2 + u^3 + i u^4",
        "u^2 + u^3",
    ],
    &[
        "i u^0",
        "i u^5",
        "i u^1 + u^2",
        "u^2",
        "i u^1 + u^2 + u^3 + i u^4",
        "u^2 + i u^4",
        "u^2 + u^3",
    ],
    &[
        "i u^0",
        "u^6",
        "i u^1 + u^2",
        "u^2",
        "i u^1 + u^2 + u^3 + i u^4 + i u^5 + u^6",
        "u^2 + i u^5",
        "u^2 + i u^4",
        "i u^1 + u^2 + i u^5 + u^6",
        "u^2 + u^3 + u^6",
    ],
    &[
        "i u^0",
        "u^7",
        "i u^1 + u^2",
        "u^2",
        "i u^1 + u^2 + u^3 + i u^4 + i u^5 + u^6",
        "u^2 + u^6",
        "u^2 + i u^5",
        "i u^1 + u^2 + i u^5 + u^6",
        "u^2 + u^3 + u^6",
        "u^2 + i u^4 + u^6",
    ],
    &[
        "i u^0",
        "i u^8",
        "i u^1 + u^2",
        "u^2",
        "i u^1 + u^2 + u^3 + i u^4 + i u^5 + u^6 + u^7 + i u^8",
        "u^2 + u^7",
        "u^2 + u^6",
        "i u^1 + u^2 + u^7 + i u^8",
        "u^2 + u^3 + u^6 + u^7",
        "u^2 + i u^4 + u^6",
        "i u^1 + u^2 + i u^5 + u^6",
    ],
    &[
        "i u^0",
        "i u^9",
        "i u^1 + u^2",
        "u^2",
        "i u^1 + u^2 + u^3 + i u^4 + i u^5 + u^6 + u^7 + i u^8",
        "u^2 + i u^8",
        "u^2 + u^7",
        "i u^1 + u^2 + u^7 + i u^8",
        "u^2 + u^3 + u^6 + u^7",
        "u^2 + i u^4 + u^6 + i u^8",
        "i u^1 + u^2 + i u^5 + u^6",
        "u^2 + u^6",
    ],
    &[
        "i u^0",
        "u^10",
        "i u^1 + u^2",
        "u^2",
        "i u^1 + u^2 + u^3 + i u^4 + i u^5 + u^6 + u^7 + i u^8 + i u^9 + u^10",
        "u^2 + i u^9",
        "u^2 + i u^8",
        "i u^1 + u^2 + i u^9 + u^10",
        "u^2 + u^3 + u^6 + u^7 + u^10",
        "u^2 + i u^4 + u^6 + i u^8",
        "i u^1 + u^2 + i u^5 + u^6 + i u^9 + u^10",
        "u^2 + u^6",
    ],
];

/// One printed listing entry: each grade with whether it carries `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListingEntry {
    pub item: u8,
    pub text: &'static str,
    pub terms: Vec<(usize, bool)>,
}

impl ListingEntry {
    pub fn grades(&self) -> GradeSet {
        self.terms.iter().map(|&(g, _)| g).collect()
    }

    /// Every `i` decoration agrees with `a_k`.
    pub fn matches_profile(&self) -> bool {
        self.terms
            .iter()
            .all(|&(g, has_i)| u8::from(has_i) == CoefficientProfile::phase(g))
    }
}

fn parse_listing_entry(item: u8, text: &'static str) -> Result<ListingEntry> {
    let mut terms = Vec::new();
    for term in text.split(" + ") {
        let (has_i, rest) = match term.strip_prefix("i ") {
            Some(r) => (true, r),
            None => (false, term),
        };
        let grade = rest
            .strip_prefix("u^")
            .and_then(|g| g.parse::<usize>().ok())
            .ok_or_else(|| Error::Parse {
                line: item as usize,
                message: format!("bad term {term:?}"),
            })?;
        terms.push((grade, has_i));
    }
    Ok(ListingEntry { item, text, terms })
}

pub fn listing_entries(n: usize) -> Result<Vec<ListingEntry>> {
    if !(1..=LISTING_N_MAX).contains(&n) {
        return Err(domain(format!(
            "no listing for n = {n}; listings cover 1..={LISTING_N_MAX}"
        )));
    }
    LISTINGS[n - 1]
        .iter()
        .enumerate()
        .map(|(i, text)| parse_listing_entry(i as u8 + 1, text))
        .collect()
}

/// The printed subalgebras for `n` (complex-lie variant).
pub fn reference_listing(n: usize) -> Result<Vec<GradedSubspace>> {
    Ok(listing_entries(n)?
        .into_iter()
        .map(|e| GradedSubspace {
            n,
            grades: e.grades(),
            variant: Variant::ComplexLie,
            provenance: Provenance::Listing(e.item),
        })
        .collect())
}

/// Closure predicted from the blade-pair parity rule: every grade produced
/// by a pair of member grades is a member, and (complex-lie) the phases are
/// compatible.
pub fn closure_check_predicted(s: &GradedSubspace) -> bool {
    for k in s.grades.iter() {
        for l in s.grades.iter() {
            let produced = kernel_grades(s.n, k, l, BracketKind::Commutator)
                .expect("subspace grades lie in [0, n]");
            if !produced.is_subset(s.grades) {
                return false;
            }
            if s.variant == Variant::ComplexLie
                && !produced
                    .iter()
                    .all(|m| CoefficientProfile::compatible(k, l, m))
            {
                return false;
            }
        }
    }
    true
}

/// Is `a_k a_l c` a real multiple of `a_m`?
#[inline]
fn phase_term_ok(k: usize, l: usize, c: i8, m: usize) -> bool {
    let z = CoefficientProfile::coefficient::<i64>(k)
        * CoefficientProfile::coefficient::<i64>(l)
        * Complex::new(c as i64, 0);
    (z * CoefficientProfile::coefficient::<i64>(m).conj()).im == 0
}

/// Closure by exhaustive blade brackets: for every pair of basis blades with
/// grades in `S`, `[a_k A, a_l B]` must be a real multiple of `a_m` times a
/// blade whose grade `m` is in `S`.
pub fn closure_check_bruteforce(
    sig: &Signature,
    s: &GradedSubspace,
    budget: Budget,
) -> Result<bool> {
    if sig.dim() != s.n {
        return Err(domain(format!("{sig} does not have n = {}", s.n)));
    }
    let n = s.n;
    let blades_in_s: u128 = s.grades.iter().map(|k| binomial(n, k)).sum();
    budget.check(
        || format!("closure sweep of {{{}}} in {sig}", s.grades),
        blades_in_s * blades_in_s,
    )?;
    let members: Vec<_> = sig
        .basis()
        .filter(|b| s.grades.contains(b.grade()))
        .collect();
    for &a in &members {
        for &b in &members {
            let Some((c, r)) = blade_bracket(sig, BracketKind::Commutator, a, b) else {
                continue;
            };
            let m = r.grade();
            if !s.grades.contains(m) {
                return Ok(false);
            }
            if s.variant == Variant::ComplexLie && !phase_term_ok(a.grade(), b.grade(), c, m) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Brute-force bracket data for one signature: for each grade pair, the
/// grades produced by blade commutators and whether every produced term is
/// phase-compatible. Answers closure for any grade set in `O(|S|^2)`.
#[derive(Debug, Clone)]
pub struct BracketAtlas {
    sig: Signature,
    produced: Vec<GradeSet>,
    phase_ok: Vec<bool>,
}

impl BracketAtlas {
    pub fn build(sig: &Signature, budget: Budget) -> Result<Self> {
        let n = sig.dim();
        let len = sig.basis_len() as u128;
        budget.check(|| format!("bracket atlas of {sig}"), len * len)?;
        let w = n + 1;
        let mut produced = vec![GradeSet::EMPTY; w * w];
        let mut phase_ok = vec![true; w * w];
        for a in sig.basis() {
            for b in sig.basis() {
                if let Some((c, r)) = blade_bracket(sig, BracketKind::Commutator, a, b) {
                    let (k, l, m) = (a.grade(), b.grade(), r.grade());
                    produced[k * w + l].insert(m);
                    if !phase_term_ok(k, l, c, m) {
                        phase_ok[k * w + l] = false;
                    }
                }
            }
        }
        Ok(BracketAtlas {
            sig: *sig,
            produced,
            phase_ok,
        })
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    /// Grades produced by blade commutators of grades `k` and `l`.
    pub fn produced(&self, k: usize, l: usize) -> GradeSet {
        self.produced[k * (self.sig.dim() + 1) + l]
    }

    pub fn is_closed(&self, grades: GradeSet, variant: Variant) -> bool {
        let w = self.sig.dim() + 1;
        grades.iter().all(|k| {
            grades.iter().all(|l| {
                self.produced[k * w + l].is_subset(grades)
                    && (variant == Variant::Plain || self.phase_ok[k * w + l])
            })
        })
    }
}

/// How an enumerated closed set relates to the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// The zero subspace.
    Trivial,
    Catalog(u8),
    Augmented {
        base: u8,
        added: GradeSet,
    },
    /// Closed, but not one of the catalog types or their augmentations.
    Extra,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumeratedSubspace {
    pub subspace: GradedSubspace,
    pub class: Classification,
}

pub fn classify(n: usize, grades: GradeSet, variant: Variant) -> Result<Classification> {
    if grades.is_empty() {
        return Ok(Classification::Trivial);
    }
    if let Some(s) = catalog(n, variant)?
        .into_iter()
        .find(|s| s.grades == grades)
    {
        let Provenance::Catalog(item) = s.provenance else {
            unreachable!()
        };
        return Ok(Classification::Catalog(item));
    }
    if let Some(s) = augmentations(n, variant)?
        .into_iter()
        .find(|s| s.grades == grades)
    {
        let Provenance::Augmented { base, added } = s.provenance else {
            unreachable!()
        };
        return Ok(Classification::Augmented { base, added });
    }
    Ok(Classification::Extra)
}

/// Every subset of `{0, ..., n}` closed under the predicted bracket rule,
/// in lexicographic order of the sorted grade lists.
pub fn enumerate_closed(n: usize, variant: Variant) -> Result<Vec<EnumeratedSubspace>> {
    enumerate_closed_capped(n, variant, ENUMERATION_N_MAX)
}

pub fn enumerate_closed_capped(
    n: usize,
    variant: Variant,
    cap: usize,
) -> Result<Vec<EnumeratedSubspace>> {
    if n == 0 {
        return Err(domain("n must be at least 1"));
    }
    if n > cap || n >= MAX_GRADE {
        return Err(Error::Budget {
            what: format!("enumeration of grade subsets for n = {n} (cap n <= {cap})"),
            needed: 1u128 << (n + 1),
            cap: 1u64 << (cap.min(62) + 1),
        });
    }
    let catalog = catalog(n, variant)?;
    let augmented = augmentations(n, variant)?;
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << (n + 1)) {
        let grades = GradeSet::from_bits(bits);
        let candidate = GradedSubspace {
            n,
            grades,
            variant,
            provenance: Provenance::Enumerated,
        };
        if !closure_check_predicted(&candidate) {
            continue;
        }
        let class = if grades.is_empty() {
            Classification::Trivial
        } else if let Some(s) = catalog.iter().find(|s| s.grades == grades) {
            let Provenance::Catalog(item) = s.provenance else {
                unreachable!()
            };
            Classification::Catalog(item)
        } else if let Some(s) = augmented.iter().find(|s| s.grades == grades) {
            let Provenance::Augmented { base, added } = s.provenance else {
                unreachable!()
            };
            Classification::Augmented { base, added }
        } else {
            Classification::Extra
        };
        out.push(EnumeratedSubspace {
            subspace: candidate,
            class,
        });
    }
    out.sort_by_key(|e| e.subspace.grades.to_vec());
    Ok(out)
}

/// Three-way comparison of listing, catalog and exhaustive enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffReport {
    pub n: usize,
    pub listing: Vec<GradedSubspace>,
    /// Listing entries that fail brute-force closure, with the failing split.
    pub not_closed: Vec<(GradedSubspace, Signature)>,
    /// Listing entries whose `i` decorations disagree with `a_k`.
    pub bad_decorations: Vec<GradedSubspace>,
    pub listing_not_in_catalog: Vec<GradedSubspace>,
    pub catalog_not_in_listing: Vec<GradedSubspace>,
    /// Listing entries the enumeration did not find closed.
    pub listing_not_enumerated: Vec<GradedSubspace>,
    pub extra: Vec<GradedSubspace>,
    pub enumerated: usize,
}

impl DiffReport {
    /// No discrepancy other than EXTRA findings, which are informational.
    pub fn is_consistent(&self) -> bool {
        self.not_closed.is_empty()
            && self.bad_decorations.is_empty()
            && self.listing_not_in_catalog.is_empty()
            && self.catalog_not_in_listing.is_empty()
            && self.listing_not_enumerated.is_empty()
    }
}

pub fn diff_report(n: usize, budget: Budget) -> Result<DiffReport> {
    let entries = listing_entries(n)?;
    let listing = reference_listing(n)?;
    let catalog = catalog(n, Variant::ComplexLie)?;
    let enumerated = enumerate_closed(n, Variant::ComplexLie)?;

    let mut not_closed = Vec::new();
    for sig in Signature::splits(n)? {
        for s in &listing {
            if !closure_check_bruteforce(&sig, s, budget)? {
                not_closed.push((*s, sig));
            }
        }
    }
    let bad_decorations = entries
        .iter()
        .zip(&listing)
        .filter(|(e, _)| !e.matches_profile())
        .map(|(_, s)| *s)
        .collect();
    let has = |set: &[GradedSubspace], g: GradeSet| set.iter().any(|s| s.grades == g);
    let enumerated_sets: Vec<GradeSet> = enumerated.iter().map(|e| e.subspace.grades).collect();

    Ok(DiffReport {
        n,
        not_closed,
        bad_decorations,
        listing_not_in_catalog: listing
            .iter()
            .filter(|s| !has(&catalog, s.grades))
            .copied()
            .collect(),
        catalog_not_in_listing: catalog
            .iter()
            .filter(|s| !has(&listing, s.grades))
            .copied()
            .collect(),
        listing_not_enumerated: listing
            .iter()
            .filter(|s| !enumerated_sets.contains(&s.grades))
            .copied()
            .collect(),
        extra: enumerated
            .iter()
            .filter(|e| e.class == Classification::Extra)
            .map(|e| e.subspace)
            .collect(),
        enumerated: enumerated.len(),
        listing,
    })
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n={}: {} listed, {} closed sets enumerated, {} extra",
            self.n,
            self.listing.len(),
            self.enumerated,
            self.extra.len()
        )?;
        for (s, sig) in &self.not_closed {
            writeln!(f, "  NOT CLOSED in {sig}: {s}")?;
        }
        for s in &self.bad_decorations {
            writeln!(f, "  BAD DECORATION: {s}")?;
        }
        for s in &self.listing_not_in_catalog {
            writeln!(f, "  listed but not in catalog: {s}")?;
        }
        for s in &self.catalog_not_in_listing {
            writeln!(f, "  in catalog but not listed: {s}")?;
        }
        for s in &self.listing_not_enumerated {
            writeln!(f, "  listed but not found closed: {s}")?;
        }
        for s in &self.extra {
            writeln!(f, "  EXTRA: {s}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(n: usize, grades: &[usize], variant: Variant) -> GradedSubspace {
        GradedSubspace::new(
            n,
            grades.iter().copied().collect(),
            variant,
            Provenance::Enumerated,
        )
        .unwrap()
    }

    fn sets(v: &[GradedSubspace]) -> Vec<GradeSet> {
        v.iter().map(|s| s.grades).collect()
    }

    #[test]
    fn profile_values() {
        let phases: Vec<u8> = (0..8).map(CoefficientProfile::phase).collect();
        assert_eq!(phases, vec![1, 1, 0, 0, 1, 1, 0, 0]);
        let a4 = CoefficientProfile::coefficient::<i64>(4);
        assert_eq!(a4, Complex::new(0, 1));
    }

    #[test]
    fn catalog_examples() {
        let c6 = sets(&catalog(6, Variant::ComplexLie).unwrap());
        assert!(c6.contains(&GradeSet::from([2, 3, 6])));
        let c4 = sets(&catalog(4, Variant::ComplexLie).unwrap());
        assert!(c4.contains(&GradeSet::from([1, 2, 3, 4])));
        let c10 = sets(&catalog(10, Variant::ComplexLie).unwrap());
        assert!(c10.contains(&GradeSet::from([2, 6])));
        assert!(catalog(0, Variant::Plain).is_err());
    }

    #[test]
    fn coincidence_notes_hold() {
        let same = |a: u8, b: u8, ns: &[usize]| {
            for &n in ns {
                assert_eq!(
                    item_grades(a, n),
                    item_grades(b, n),
                    "item {a} vs {b} at n={n}"
                );
            }
        };
        same(4, 2, &[2]);
        same(5, 3, &[2, 3]);
        same(8, 5, &[5]);
        same(9, 4, &[2, 3]);
        same(9, 6, &[4]);
        same(9, 7, &[5]);
        same(10, 4, &[3, 4]);
        same(10, 6, &[5]);
        same(10, 7, &[6]);
        same(11, 3, &[2, 3, 4, 5]);
        same(11, 8, &[6, 7]);
        same(12, 4, &[3, 4, 5, 6]);
        same(12, 6, &[7]);
        same(12, 7, &[8]);
    }

    #[test]
    fn listing_examples() {
        assert_eq!(
            sets(&reference_listing(2).unwrap()),
            vec![
                GradeSet::from([0]),
                GradeSet::from([2]),
                GradeSet::from([1, 2])
            ]
        );
        assert_eq!(reference_listing(7).unwrap().len(), 10);
        assert!(sets(&reference_listing(9).unwrap()).contains(&GradeSet::from([2, 4, 6, 8])));
        assert!(reference_listing(0).is_err());
        assert!(reference_listing(11).is_err());
        for n in 1..=LISTING_N_MAX {
            assert!(listing_entries(n)
                .unwrap()
                .iter()
                .all(ListingEntry::matches_profile));
        }
    }

    #[test]
    fn listing_display_round_trips() {
        for n in 1..=LISTING_N_MAX {
            for (e, s) in listing_entries(n)
                .unwrap()
                .iter()
                .zip(reference_listing(n).unwrap())
            {
                assert_eq!(s.to_string(), e.text);
            }
        }
    }

    #[test]
    fn predicted_closure_examples() {
        for n in 1..=8 {
            assert!(closure_check_predicted(&sub(n, &[0], Variant::ComplexLie)));
        }
        assert!(!closure_check_predicted(&sub(3, &[1], Variant::ComplexLie)));
        assert!(closure_check_predicted(&sub(5, &[2], Variant::ComplexLie)));
    }

    #[test]
    fn brute_force_closure_examples() {
        let b = Budget::default();
        let e2 = Signature::new(2, 0).unwrap();
        let m11 = Signature::new(1, 1).unwrap();
        assert!(closure_check_bruteforce(&e2, &sub(2, &[1, 2], Variant::ComplexLie), b).unwrap());
        assert!(closure_check_bruteforce(&m11, &sub(2, &[1, 2], Variant::ComplexLie), b).unwrap());
        for n in 1..=6 {
            for sig in Signature::splits(n).unwrap() {
                assert!(
                    closure_check_bruteforce(&sig, &sub(n, &[n], Variant::ComplexLie), b).unwrap()
                );
            }
        }
        // grade 1 alone is not closed: e^1 e^2 - e^2 e^1 = 2 e^{12}
        assert!(!closure_check_bruteforce(&e2, &sub(2, &[1], Variant::Plain), b).unwrap());
        // {1, 2} with the phases dropped: i factors break realness only in complex-lie
        let e3 = Signature::new(3, 0).unwrap();
        assert!(closure_check_bruteforce(&e3, &sub(3, &[0, 1, 2, 3], Variant::Plain), b).unwrap());
        assert!(closure_check_bruteforce(&e3, &sub(3, &[1, 2], Variant::ComplexLie), b).unwrap());
        assert!(closure_check_bruteforce(&e2, &sub(3, &[1], Variant::Plain), b).is_err());
        assert!(
            closure_check_bruteforce(&e3, &sub(3, &[1, 2], Variant::Plain), Budget::new(3))
                .is_err()
        );
    }

    #[test]
    fn phase_check_rejects_incompatible_sets() {
        // [a_1 e^1, a_3 e^{123}]-type products: grades 1 and 3 generate 2 with a_1 a_3 = i
        // but a_2 = 1, so complex-lie closure of {1, 2, 3} fails in the phase test
        // whenever the grade condition alone would pass.
        for n in 3..=8 {
            for k in 0..=n {
                for l in 0..=n {
                    for m in kernel_grades(n, k, l, BracketKind::Commutator)
                        .unwrap()
                        .iter()
                    {
                        assert!(
                            CoefficientProfile::compatible(k, l, m),
                            "n={n} ({k},{l})->{m}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn atlas_matches_direct_check() {
        let b = Budget::default();
        for n in 1..=4 {
            for sig in Signature::splits(n).unwrap() {
                let atlas = BracketAtlas::build(&sig, b).unwrap();
                for bits in 0..(1u64 << (n + 1)) {
                    for variant in [Variant::ComplexLie, Variant::Plain] {
                        let s = GradedSubspace {
                            n,
                            grades: GradeSet::from_bits(bits),
                            variant,
                            provenance: Provenance::Enumerated,
                        };
                        assert_eq!(
                            atlas.is_closed(s.grades, variant),
                            closure_check_bruteforce(&sig, &s, b).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let e1 = enumerate_closed(1, Variant::ComplexLie).unwrap();
        let found: Vec<GradeSet> = e1.iter().map(|e| e.subspace.grades).collect();
        for g in [
            GradeSet::EMPTY,
            GradeSet::from([0]),
            GradeSet::from([1]),
            GradeSet::from([0, 1]),
        ] {
            assert!(found.contains(&g));
        }
        assert_eq!(e1[0].class, Classification::Trivial);
        let e6 = enumerate_closed(6, Variant::ComplexLie).unwrap();
        assert!(e6
            .iter()
            .any(|e| e.subspace.grades == GradeSet::from([2, 3, 6])));
        assert!(enumerate_closed(15, Variant::ComplexLie).is_err());
        assert!(enumerate_closed_capped(15, Variant::ComplexLie, 15).is_ok());
    }

    #[test]
    fn augmentation_rules() {
        // odd n: grade n may be added to anything
        assert_eq!(augmentation_options(5, GradeSet::from([1, 2])).len(), 3);
        // even n: only to all-even sets
        assert_eq!(augmentation_options(4, GradeSet::from([1, 2])).len(), 1);
        assert_eq!(augmentation_options(4, GradeSet::from([2])).len(), 3);
        let aug = augmentations(2, Variant::ComplexLie).unwrap();
        assert!(aug.iter().any(|s| s.grades == GradeSet::from([0, 1, 2])));
        assert_eq!(
            classify(1, GradeSet::from([0, 1]), Variant::ComplexLie).unwrap(),
            Classification::Augmented {
                base: 1,
                added: GradeSet::single(1)
            }
        );
    }

    #[test]
    fn diff_report_small_n() {
        for n in 1..=5 {
            let r = diff_report(n, Budget::default()).unwrap();
            assert!(r.is_consistent(), "{r}");
        }
        let r5 = diff_report(5, Budget::default()).unwrap();
        assert!(r5
            .listing
            .iter()
            .any(|s| s.grades == GradeSet::from([2, 4])));
    }

    #[test]
    fn display_variants() {
        assert_eq!(
            sub(4, &[1, 2, 3, 4], Variant::ComplexLie).to_string(),
            "i u^1 + u^2 + u^3 + i u^4"
        );
        assert_eq!(sub(4, &[1, 2], Variant::Plain).to_string(), "u^1 + u^2");
        assert_eq!(sub(4, &[], Variant::Plain).to_string(), "0");
    }
}

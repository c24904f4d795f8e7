use std::fmt;

use crate::blade::{Blade, BLADE_BITS};
use crate::error::{domain, Result};

/// Default ceiling on `n = p + q`.
pub const N_MAX: usize = 16;

/// Metric signature `(p, q)` of a Clifford algebra: `p` generators square
/// to `+e`, the remaining `q` square to `-e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: usize,
    q: usize,
}

impl Signature {
    /// `Cl(p, q)` with `1 <= p + q <= N_MAX`.
    pub fn new(p: usize, q: usize) -> Result<Self> {
        Self::with_limit(p, q, N_MAX)
    }

    /// As [`Signature::new`] with a caller-chosen ceiling (at most the
    /// blade word width).
    pub fn with_limit(p: usize, q: usize, n_max: usize) -> Result<Self> {
        let n = p + q;
        if n_max > BLADE_BITS {
            return Err(domain(format!(
                "dimension ceiling {n_max} exceeds blade width {BLADE_BITS}"
            )));
        }
        if n == 0 {
            return Err(domain("signature needs at least one generator (n >= 1)"));
        }
        if n > n_max {
            return Err(domain(format!("n = {n} exceeds ceiling {n_max}")));
        }
        Ok(Self { p, q })
    }

    /// Positive-definite `Cl(n, 0)`.
    pub fn euclidean(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    /// Every split `(p, n - p)` for `p = n, n-1, ..., 0`.
    pub fn splits(n: usize) -> Result<Vec<Self>> {
        (0..=n).rev().map(|p| Self::new(p, n - p)).collect()
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.p + self.q
    }

    /// Diagonal metric entry for generator `a` (1-based).
    pub fn metric(&self, a: usize) -> i8 {
        debug_assert!((1..=self.dim()).contains(&a));
        if a <= self.p {
            1
        } else {
            -1
        }
    }

    /// Bit mask of the generators squaring to `-e`.
    #[inline]
    pub fn negative_mask(&self) -> u32 {
        Blade::full(self.dim()).bits() & !Blade::full(self.p).bits()
    }

    /// The pseudoscalar `e^{1...n}`.
    pub fn pseudoscalar(&self) -> Blade {
        Blade::full(self.dim())
    }

    pub fn contains(&self, blade: Blade) -> bool {
        blade.bits() & !self.pseudoscalar().bits() == 0
    }

    /// Number of basis blades, `2^n`.
    pub fn basis_len(&self) -> usize {
        1 << self.dim()
    }

    /// All `2^n` basis blades in bit order.
    pub fn basis(&self) -> impl Iterator<Item = Blade> {
        (0..self.basis_len() as u32).map(Blade::from_bits)
    }

    /// Basis blades of a fixed grade, ascending by bits.
    pub fn blades_of_grade(&self, grade: usize) -> Vec<Blade> {
        self.basis().filter(|b| b.grade() == grade).collect()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metric_layout() {
        let sig = Signature::new(2, 3).unwrap();
        assert_eq!(sig.dim(), 5);
        let m: Vec<i8> = (1..=5).map(|a| sig.metric(a)).collect();
        assert_eq!(m, vec![1, 1, -1, -1, -1]);
        assert_eq!(sig.negative_mask(), 0b11100);
    }

    #[test]
    fn rejects_empty_and_oversized() {
        assert!(Signature::new(0, 0).is_err());
        assert!(Signature::new(10, 7).is_err());
        assert!(Signature::with_limit(10, 7, 20).is_ok());
        assert!(Signature::with_limit(1, 0, 40).is_err());
    }

    #[test]
    fn grade_counts_are_binomial() {
        for n in 1..=10 {
            let sig = Signature::euclidean(n).unwrap();
            let mut binom = 1usize;
            let mut total = 0;
            for k in 0..=n {
                let count = sig.blades_of_grade(k).len();
                assert_eq!(count, binom, "C({n},{k})");
                total += count;
                binom = binom * (n - k) / (k + 1);
            }
            assert_eq!(total, 1 << n);
        }
    }

    #[test]
    fn splits_cover_all_p() {
        let s = Signature::splits(3).unwrap();
        let pq: Vec<_> = s.iter().map(|s| (s.p(), s.q())).collect();
        assert_eq!(pq, vec![(3, 0), (2, 1), (1, 2), (0, 3)]);
    }
}

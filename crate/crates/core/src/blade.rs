//! Basis blades `e^{a1...ak}` as bit sets and their products.

use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};
use crate::signature::Signature;

/// Width of the blade word; no signature may exceed this many generators.
pub const BLADE_BITS: usize = 32;

/// A basis blade. Bit `a - 1` is set iff generator `e^a` is a factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Blade(u32);

impl Blade {
    /// The identity element `e`.
    pub const IDENTITY: Blade = Blade(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        Blade(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The blade `e^{1...n}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= BLADE_BITS);
        if n >= BLADE_BITS {
            Blade(u32::MAX)
        } else {
            Blade((1u32 << n) - 1)
        }
    }

    /// Single generator `e^a`, `a` 1-based.
    pub fn generator(a: usize) -> Self {
        assert!(
            (1..=BLADE_BITS).contains(&a),
            "generator index {a} out of range"
        );
        Blade(1 << (a - 1))
    }

    /// Blade from strictly ascending 1-based indices.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        let mut last = 0usize;
        for &a in indices {
            if a == 0 || a > BLADE_BITS {
                return Err(Error::Validation(format!(
                    "generator index {a} out of range"
                )));
            }
            if a <= last {
                return Err(Error::Validation(format!(
                    "indices must be strictly ascending, got {a} after {last}"
                )));
            }
            last = a;
            bits |= 1 << (a - 1);
        }
        Ok(Blade(bits))
    }

    /// Ascending 1-based generator indices.
    pub fn indices(self) -> Vec<usize> {
        (0..BLADE_BITS)
            .filter(|i| self.0 >> i & 1 == 1)
            .map(|i| i + 1)
            .collect()
    }

    /// Rank of the blade (number of generator factors).
    #[inline]
    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Sign picked up by reversing the factor order, `(-1)^{k(k-1)/2}`.
    #[inline]
    pub fn reversion_sign(self) -> Sign {
        let k = self.grade();
        Sign::from_parity(k * k.saturating_sub(1) / 2)
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("e");
        }
        let idx = self.indices();
        let sep = if idx.iter().any(|&a| a >= 10) {
            ","
        } else {
            ""
        };
        let body: Vec<String> = idx.iter().map(|a| a.to_string()).collect();
        write!(f, "e^{{{}}}", body.join(sep))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    #[inline]
    pub fn from_parity(count: usize) -> Self {
        if count % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    #[inline]
    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    #[inline]
    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    #[inline]
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    #[inline]
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

/// `e^A e^B` by direct manipulation of the generator word.
///
/// Concatenates both ascending index lists, bubble-sorts the word counting
/// adjacent transpositions, then contracts every adjacent pair `e^a e^a`
/// into the metric factor `eta^{aa}`. Slow; kept as the reference that
/// [`blade_product`] is checked against.
pub fn blade_product_reference(sig: &Signature, a: Blade, b: Blade) -> (Sign, Blade) {
    let mut word: Vec<usize> = a.indices();
    word.extend(b.indices());

    let mut swaps = 0usize;
    let len = word.len();
    for pass in 0..len {
        let mut moved = false;
        for i in 0..len.saturating_sub(pass + 1) {
            if word[i] > word[i + 1] {
                word.swap(i, i + 1);
                swaps += 1;
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }

    let mut sign = Sign::from_parity(swaps);
    let mut reduced = Vec::with_capacity(len);
    let mut i = 0;
    while i < len {
        if i + 1 < len && word[i] == word[i + 1] {
            if sig.metric(word[i]) < 0 {
                sign = -sign;
            }
            i += 2;
        } else {
            reduced.push(word[i]);
            i += 1;
        }
    }
    let blade = Blade::from_indices(&reduced).expect("contracted word is strictly ascending");
    (sign, blade)
}

/// `e^A e^B` with bit-parallel sign computation.
///
/// The reordering sign is the parity of the number of pairs `(x in A, y in B)`
/// with `x > y`; the metric sign is the parity of negative-square generators
/// shared by both blades.
#[inline]
pub fn blade_product(sig: &Signature, a: Blade, b: Blade) -> (Sign, Blade) {
    (
        product_sign_bits(a.0, b.0, sig.negative_mask()),
        Blade(a.0 ^ b.0),
    )
}

#[inline]
pub(crate) fn product_sign_bits(a: u32, b: u32, negative_mask: u32) -> Sign {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let low = rest.trailing_zeros();
        // set bits of A strictly above position `low`
        let above = if low >= 31 { 0 } else { a >> (low + 1) };
        swaps += above.count_ones();
        rest &= rest - 1;
    }
    swaps += (a & b & negative_mask).count_ones();
    Sign::from_parity(swaps as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blade(idx: &[usize]) -> Blade {
        Blade::from_indices(idx).unwrap()
    }

    #[test]
    fn reference_examples() {
        let e2 = Signature::new(2, 0).unwrap();
        assert_eq!(
            blade_product_reference(&e2, blade(&[1]), blade(&[2])),
            (Sign::Plus, blade(&[1, 2]))
        );
        assert_eq!(
            blade_product_reference(&e2, blade(&[2]), blade(&[1])),
            (Sign::Minus, blade(&[1, 2]))
        );
        let m11 = Signature::new(1, 1).unwrap();
        assert_eq!(
            blade_product_reference(&m11, blade(&[2]), blade(&[2])),
            (Sign::Minus, Blade::IDENTITY)
        );
    }

    #[test]
    fn fast_product_examples_match_reference() {
        let e2 = Signature::new(2, 0).unwrap();
        let got = blade_product(&e2, blade(&[1, 2]), blade(&[2]));
        assert_eq!(
            got,
            blade_product_reference(&e2, blade(&[1, 2]), blade(&[2]))
        );
        assert_eq!(got, (Sign::Plus, blade(&[1])));

        // e^{12} e^{23} = e^1 e^2 e^2 e^3 = e^{13} in Cl(3,0); the reference decides.
        let e3 = Signature::new(3, 0).unwrap();
        let (sign, res) = blade_product(&e3, blade(&[1, 2]), blade(&[2, 3]));
        assert_eq!(
            (sign, res),
            blade_product_reference(&e3, blade(&[1, 2]), blade(&[2, 3]))
        );
        assert_eq!(res, blade(&[1, 3]));
    }

    #[test]
    fn identity_is_neutral() {
        let sig = Signature::new(2, 2).unwrap();
        for b in sig.basis() {
            assert_eq!(blade_product(&sig, Blade::IDENTITY, b), (Sign::Plus, b));
            assert_eq!(blade_product(&sig, b, Blade::IDENTITY), (Sign::Plus, b));
        }
    }

    #[test]
    fn from_indices_rejects_bad_input() {
        assert!(Blade::from_indices(&[2, 1]).is_err());
        assert!(Blade::from_indices(&[1, 1]).is_err());
        assert!(Blade::from_indices(&[0]).is_err());
        assert_eq!(Blade::from_indices(&[]).unwrap(), Blade::IDENTITY);
    }

    #[test]
    fn display() {
        assert_eq!(Blade::IDENTITY.to_string(), "e");
        assert_eq!(blade(&[1, 2]).to_string(), "e^{12}");
        assert_eq!(blade(&[3, 10]).to_string(), "e^{3,10}");
    }

    #[test]
    fn reversion_signs() {
        let signs: Vec<i8> = (0..6)
            .map(|k| Blade::full(k).reversion_sign().to_i8())
            .collect();
        assert_eq!(signs, vec![1, 1, -1, -1, 1, 1]);
    }
}

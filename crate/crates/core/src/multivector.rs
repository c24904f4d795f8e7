//! Sparse multivectors over an arbitrary coefficient ring.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::blade::{blade_product, Blade};
use crate::error::{domain, Error, Result};
use crate::grades::{BracketKind, GradeSet};
use crate::scalar::Scalar;
use crate::signature::Signature;

/// A Clifford algebra element: a sparse map from basis blades to nonzero
/// coefficients.
#[derive(Clone, PartialEq)]
pub struct Multivector<T> {
    terms: BTreeMap<Blade, T>,
}

impl<T: Scalar> Multivector<T> {
    pub fn zero() -> Self {
        Multivector {
            terms: BTreeMap::new(),
        }
    }

    /// `coef * e`.
    pub fn scalar(coef: T) -> Self {
        Self::from_blade(Blade::IDENTITY, coef)
    }

    /// The identity element `e`.
    pub fn one() -> Self {
        Self::scalar(T::one())
    }

    pub fn from_blade(blade: Blade, coef: T) -> Self {
        let mut mv = Self::zero();
        mv.add_term(blade, coef);
        mv
    }

    /// Unit-coefficient basis blade.
    pub fn basis(blade: Blade) -> Self {
        Self::from_blade(blade, T::one())
    }

    /// Sums repeated blades and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Blade, T)>>(terms: I) -> Self {
        let mut mv = Self::zero();
        for (b, c) in terms {
            mv.add_term(b, c);
        }
        mv
    }

    /// Accumulate `coef * blade`, keeping the map free of zeros.
    pub fn add_term(&mut self, blade: Blade, coef: T) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coef;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, blade: Blade) -> Option<&T> {
        self.terms.get(&blade)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &T)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Blade, T)> {
        self.terms.into_iter()
    }

    pub fn scale(&self, factor: &T) -> Self {
        Self::from_terms(self.terms().map(|(b, c)| (b, c.clone() * factor.clone())))
    }

    /// Every blade lies inside the signature's generator range.
    pub fn is_valid_for(&self, sig: &Signature) -> bool {
        self.terms.keys().all(|b| sig.contains(*b))
    }

    pub fn validate(&self, sig: &Signature) -> Result<()> {
        match self.terms.keys().find(|b| !sig.contains(**b)) {
            Some(b) => Err(Error::Validation(format!("blade {b} is not in {sig}"))),
            None => Ok(()),
        }
    }

    /// Grades carrying at least one nonzero term.
    pub fn support_grades(&self) -> GradeSet {
        self.terms.keys().map(|b| b.grade()).collect()
    }

    /// Part of grade exactly `k`; no range check.
    pub fn grade_part(&self, k: usize) -> Self {
        Multivector {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.grade() == k)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// Reverse every blade and conjugate every coefficient.
    pub fn star(&self) -> Self {
        Multivector {
            terms: self
                .terms
                .iter()
                .map(|(b, c)| {
                    let c = c.conj();
                    let c = if b.reversion_sign().is_negative() {
                        -c
                    } else {
                        c
                    };
                    (*b, c)
                })
                .collect(),
        }
    }
}

impl<T: Scalar> Default for Multivector<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> Add for &Multivector<T> {
    type Output = Multivector<T>;

    fn add(self, rhs: Self) -> Multivector<T> {
        let mut out = self.clone();
        for (b, c) in rhs.terms() {
            out.add_term(b, c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &Multivector<T> {
    type Output = Multivector<T>;

    fn sub(self, rhs: Self) -> Multivector<T> {
        let mut out = self.clone();
        for (b, c) in rhs.terms() {
            out.add_term(b, -c.clone());
        }
        out
    }
}

impl<T: Scalar> Neg for &Multivector<T> {
    type Output = Multivector<T>;

    fn neg(self) -> Multivector<T> {
        Multivector {
            terms: self.terms.iter().map(|(b, c)| (*b, -c.clone())).collect(),
        }
    }
}

impl<T: Scalar> Add for Multivector<T> {
    type Output = Multivector<T>;

    fn add(self, rhs: Self) -> Multivector<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for Multivector<T> {
    type Output = Multivector<T>;

    fn sub(self, rhs: Self) -> Multivector<T> {
        &self - &rhs
    }
}

impl<T: Scalar> Neg for Multivector<T> {
    type Output = Multivector<T>;

    fn neg(self) -> Multivector<T> {
        -&self
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){b}")?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(b, c)| (b.to_string(), c)))
            .finish()
    }
}

/// Clifford product, the bilinear extension of [`blade_product`].
pub fn geometric_product<T: Scalar>(
    sig: &Signature,
    x: &Multivector<T>,
    y: &Multivector<T>,
) -> Multivector<T> {
    let mut out = Multivector::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            let (sign, blade) = blade_product(sig, a, b);
            let c = ca.clone() * cb.clone();
            out.add_term(blade, if sign.is_negative() { -c } else { c });
        }
    }
    out
}

/// Grade-`k` part of `x`; `k` must lie in `[0, n]`.
pub fn grade_projection<T: Scalar>(
    sig: &Signature,
    x: &Multivector<T>,
    k: usize,
) -> Result<Multivector<T>> {
    if k > sig.dim() {
        return Err(domain(format!("grade {k} exceeds n = {}", sig.dim())));
    }
    Ok(x.grade_part(k))
}

pub fn support_grades<T: Scalar>(x: &Multivector<T>) -> GradeSet {
    x.support_grades()
}

/// `XY - YX`.
pub fn commutator<T: Scalar>(
    sig: &Signature,
    x: &Multivector<T>,
    y: &Multivector<T>,
) -> Multivector<T> {
    bracket(sig, BracketKind::Commutator, x, y)
}

/// `XY + YX`.
pub fn anticommutator<T: Scalar>(
    sig: &Signature,
    x: &Multivector<T>,
    y: &Multivector<T>,
) -> Multivector<T> {
    bracket(sig, BracketKind::Anticommutator, x, y)
}

pub fn bracket<T: Scalar>(
    sig: &Signature,
    kind: BracketKind,
    x: &Multivector<T>,
    y: &Multivector<T>,
) -> Multivector<T> {
    let xy = geometric_product(sig, x, y);
    let yx = geometric_product(sig, y, x);
    match kind {
        BracketKind::Commutator => &xy - &yx,
        BracketKind::Anticommutator => &xy + &yx,
    }
}

/// Bracket of two basis blades, `e^A e^B -/+ e^B e^A = c e^{A xor B}` with
/// `c` in `{0, 2, -2}`. Returns `None` when the blades (anti)commute away.
#[inline]
pub fn blade_bracket(
    sig: &Signature,
    kind: BracketKind,
    a: Blade,
    b: Blade,
) -> Option<(i8, Blade)> {
    let (s_ab, blade) = blade_product(sig, a, b);
    let (s_ba, _) = blade_product(sig, b, a);
    let c = match kind {
        BracketKind::Commutator => s_ab.to_i8() - s_ba.to_i8(),
        BracketKind::Anticommutator => s_ab.to_i8() + s_ba.to_i8(),
    };
    (c != 0).then_some((c, blade))
}

/// The `*` anti-automorphism: reversion of blade factors combined with
/// complex conjugation of coefficients.
pub fn conjugation_star<T: Scalar>(x: &Multivector<T>) -> Multivector<T> {
    x.star()
}

/// `U* U = e` exactly.
pub fn is_group_element<T: Scalar>(sig: &Signature, u: &Multivector<T>) -> bool {
    group_residual(sig, u).is_zero()
}

/// `U* U - e`; zero iff `u` is in the pseudounitary group.
pub fn group_residual<T: Scalar>(sig: &Signature, u: &Multivector<T>) -> Multivector<T> {
    &geometric_product(sig, &u.star(), u) - &Multivector::one()
}

/// `u* = -u` exactly.
pub fn is_lie_element<T: Scalar>(u: &Multivector<T>) -> bool {
    lie_residual(u).is_zero()
}

/// `u* + u`; zero iff `u` is in the Lie algebra of the pseudounitary group.
pub fn lie_residual<T: Scalar>(u: &Multivector<T>) -> Multivector<T> {
    &u.star() + u
}

//! Exact arithmetic in complex Clifford algebras `C(p, q)` and the grade
//! structure of their commutators and anticommutators.
//!
//! * [`multivector`]: sparse multivectors over any coefficient ring, the
//!   Clifford product, brackets, the `*` anti-automorphism and the
//!   pseudounitary group / Lie algebra membership tests.
//! * [`formulas`]: which grades `[U^k, V^l]` and `{U^k, V^l}` can occupy,
//!   computed three independent ways, and the resulting rank tables.
//! * [`special_cases`]: audit of the specialised closed forms.
//! * [`subalgebra`]: graded Lie subalgebras, their catalog and an
//!   exhaustive search.
//!
//! The default coefficient ring is the Gaussian integers over arbitrary
//! precision integers ([`Coefficient`]), so every check is exact.

pub mod blade;
pub mod error;
pub mod formulas;
pub mod golden;
pub mod grades;
pub mod multivector;
pub mod scalar;
pub mod signature;
pub mod special_cases;
pub mod subalgebra;
pub mod table;

pub use blade::{blade_product, blade_product_reference, Blade, Sign};
pub use error::{Error, Result};
pub use formulas::{
    actual_grades, actual_table, build_table, kernel_grades, theorem_grades, Budget,
};
pub use grades::{BracketKind, GradeSet};
pub use multivector::{
    anticommutator, blade_bracket, bracket, commutator, conjugation_star, geometric_product,
    grade_projection, is_group_element, is_lie_element, support_grades, Multivector,
};
pub use scalar::{Conjugate, Scalar};
pub use signature::{Signature, N_MAX};
pub use special_cases::special_case_report;
pub use subalgebra::{
    catalog, closure_check_bruteforce, closure_check_predicted, diff_report, enumerate_closed,
    reference_listing, CoefficientProfile, GradedSubspace, Variant,
};
pub use table::RankTable;

/// Exact Gaussian integer `re + i im` with arbitrary-precision parts.
pub type Coefficient = num_complex::Complex<num_bigint::BigInt>;

/// Multivector with exact Gaussian integer coefficients.
pub type ExactMultivector = Multivector<Coefficient>;

/// Gaussian integers in machine words, for hot loops with small values.
pub type SmallCoefficient = num_complex::Complex<i64>;
pub type SmallMultivector = Multivector<SmallCoefficient>;

/// Exact rational coefficients.
pub type RationalMultivector = Multivector<num_rational::BigRational>;

/// Floating-point coefficients; comparisons are not exact.
pub type Multivector32 = Multivector<f32>;
pub type Multivector64 = Multivector<f64>;

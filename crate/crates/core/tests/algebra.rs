use clifford_brackets::{
    anticommutator, blade_product, blade_product_reference, commutator, conjugation_star,
    geometric_product, is_lie_element, Blade, Coefficient, ExactMultivector, Signature,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn coefficient() -> impl Strategy<Value = Coefficient> {
    (-5i64..=5, -5i64..=5).prop_map(|(re, im)| Coefficient::new(BigInt::from(re), BigInt::from(im)))
}

fn signature() -> impl Strategy<Value = Signature> {
    (1usize..=6).prop_flat_map(|n| (0..=n).prop_map(move |p| Signature::new(p, n - p).unwrap()))
}

fn multivector(sig: Signature) -> impl Strategy<Value = ExactMultivector> {
    let blades = sig.basis_len() as u32;
    prop::collection::vec((0..blades, coefficient()), 0..6).prop_map(|terms| {
        ExactMultivector::from_terms(terms.into_iter().map(|(b, c)| (Blade::from_bits(b), c)))
    })
}

fn anti_hermitian(sig: Signature) -> impl Strategy<Value = ExactMultivector> {
    multivector(sig).prop_map(|x| &x - &conjugation_star(&x))
}

fn sig_and<S: Strategy, F: Fn(Signature) -> S + Clone>(
    f: F,
) -> impl Strategy<Value = (Signature, S::Value)> {
    signature().prop_flat_map(move |sig| (Just(sig), f(sig)))
}

fn no_stored_zeros(x: &ExactMultivector) -> bool {
    x.terms()
        .all(|(_, c)| *c != Coefficient::new(BigInt::from(0), BigInt::from(0)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn product_is_associative(
        (sig, (x, y, z)) in sig_and(|s| (multivector(s), multivector(s), multivector(s)))
    ) {
        let left = geometric_product(&sig, &geometric_product(&sig, &x, &y), &z);
        let right = geometric_product(&sig, &x, &geometric_product(&sig, &y, &z));
        prop_assert!(no_stored_zeros(&left));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn star_reverses_products((sig, (x, y)) in sig_and(|s| (multivector(s), multivector(s)))) {
        let lhs = conjugation_star(&geometric_product(&sig, &x, &y));
        let rhs = geometric_product(&sig, &conjugation_star(&y), &conjugation_star(&x));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn star_is_an_involution((_sig, x) in sig_and(multivector)) {
        prop_assert_eq!(conjugation_star(&conjugation_star(&x)), x);
    }

    #[test]
    fn lie_algebra_is_closed((sig, (u, v)) in sig_and(|s| (anti_hermitian(s), anti_hermitian(s)))) {
        prop_assert!(is_lie_element(&u));
        prop_assert!(is_lie_element(&v));
        let w = commutator(&sig, &u, &v);
        prop_assert!(no_stored_zeros(&w));
        prop_assert!(is_lie_element(&w));
    }
}

fn all_signatures(n_max: usize) -> impl Iterator<Item = Signature> {
    (1..=n_max).flat_map(|n| Signature::splits(n).unwrap())
}

#[test]
fn generators_satisfy_the_defining_relation() {
    for sig in all_signatures(6) {
        for a in 1..=sig.dim() {
            for b in 1..=sig.dim() {
                let ea = ExactMultivector::basis(Blade::generator(a));
                let eb = ExactMultivector::basis(Blade::generator(b));
                let eta = if a == b { 2 * sig.metric(a) as i64 } else { 0 };
                let expected =
                    ExactMultivector::scalar(Coefficient::new(BigInt::from(eta), BigInt::from(0)));
                assert_eq!(
                    anticommutator(&sig, &ea, &eb),
                    expected,
                    "{sig} a={a} b={b}"
                );
            }
        }
    }
}

#[test]
fn blade_products_are_associative_and_reversed_by_star() {
    for sig in all_signatures(4) {
        let basis: Vec<ExactMultivector> = sig.basis().map(ExactMultivector::basis).collect();
        for x in &basis {
            for y in &basis {
                let xy = geometric_product(&sig, x, y);
                assert_eq!(
                    conjugation_star(&xy),
                    geometric_product(&sig, &conjugation_star(y), &conjugation_star(x))
                );
                for z in &basis {
                    assert_eq!(
                        geometric_product(&sig, &xy, z),
                        geometric_product(&sig, x, &geometric_product(&sig, y, z))
                    );
                }
            }
        }
    }
}

#[test]
fn grade_counts_are_binomial() {
    for n in 1..=12 {
        let sig = Signature::euclidean(n).unwrap();
        let mut total = 0;
        for k in 0..=n {
            let count = sig.blades_of_grade(k).len();
            let binom = (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
            assert_eq!(count, binom);
            total += count;
        }
        assert_eq!(total, 1 << n);
    }
}

#[test]
fn fast_product_matches_reference_up_to_n6() {
    for sig in all_signatures(6) {
        for a in sig.basis() {
            for b in sig.basis() {
                assert_eq!(
                    blade_product(&sig, a, b),
                    blade_product_reference(&sig, a, b)
                );
            }
        }
    }
}

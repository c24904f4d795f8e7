use clifford_brackets::formulas::{actual_table, kernel_grades, theorem_grades, Budget};
use clifford_brackets::{actual_grades, build_table, BracketKind, GradeSet, Signature};

#[test]
fn theorem_matches_kernel_rule_up_to_n20() {
    for n in 1..=20 {
        for k in 0..=n {
            for l in 0..=k {
                for kind in BracketKind::ALL {
                    assert_eq!(
                        theorem_grades(n, k, l, kind).unwrap(),
                        kernel_grades(n, k, l, kind).unwrap(),
                        "n={n} k={k} l={l} {kind}"
                    );
                }
            }
        }
    }
}

#[test]
fn parities_split_the_stratum_grades() {
    for n in 1..=20 {
        for k in 0..=n {
            for l in 0..=n {
                let c = kernel_grades(n, k, l, BracketKind::Commutator).unwrap();
                let a = kernel_grades(n, k, l, BracketKind::Anticommutator).unwrap();
                let lo = (k + l).saturating_sub(n);
                let all: GradeSet = (lo..=k.min(l)).map(|s| k + l - 2 * s).collect();
                assert!(c.intersection(a).is_empty());
                assert_eq!(c.union(a), all);
            }
        }
    }
}

#[test]
fn theorem_sets_step_by_four() {
    for n in 1..=20 {
        for k in 0..=n {
            for l in 0..=n {
                for kind in BracketKind::ALL {
                    assert!(theorem_grades(n, k, l, kind)
                        .unwrap()
                        .is_step4_progression());
                }
            }
        }
    }
}

#[test]
fn tables_are_symmetric() {
    for n in 1..=16 {
        for kind in BracketKind::ALL {
            assert!(build_table(n, kind).unwrap().is_symmetric());
        }
    }
}

#[test]
fn brute_force_is_tight_and_signature_independent() {
    for n in 1..=7 {
        for sig in Signature::splits(n).unwrap() {
            for kind in BracketKind::ALL {
                for k in 0..=n {
                    for l in 0..=n {
                        assert_eq!(
                            actual_grades(&sig, k, l, kind, Budget::default()).unwrap(),
                            kernel_grades(n, k, l, kind).unwrap(),
                            "{sig} ({k},{l}) {kind}"
                        );
                    }
                }
                assert_eq!(
                    actual_table(&sig, kind, Budget::default()).unwrap(),
                    build_table(n, kind).unwrap()
                );
            }
        }
    }
}

#[test]
fn budget_overflow_is_an_error() {
    let sig = Signature::euclidean(10).unwrap();
    assert!(actual_table(&sig, BracketKind::Commutator, Budget::new(1000)).is_err());
    assert!(actual_grades(&sig, 5, 5, BracketKind::Commutator, Budget::new(1000)).is_err());
}

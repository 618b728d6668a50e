use colorsuper::colored::{
    build_colored_explicit, check_triangular, compare_algebras, derive_colored_from_envelope,
};
use colorsuper::verify::{check_antisymmetry, check_grading, check_jacobi};

#[test]
fn explicit_and_derived_agree() {
    for (two_ell, central) in [(1, false), (2, false), (3, false), (1, true), (3, true)] {
        let a = build_colored_explicit(two_ell, central).unwrap();
        let b = derive_colored_from_envelope(two_ell, central).unwrap();
        let diff = compare_algebras(&a, &b).unwrap();
        for e in &diff.entries {
            eprintln!("{two_ell} {central}: {e}");
        }
        assert!(diff.is_empty(), "two_ell={two_ell} central={central}: {} differences", diff.entries.len());
    }
}

#[test]
fn explicit_tables_satisfy_axioms() {
    for (two_ell, central) in [(1, false), (2, false), (3, false), (1, true), (3, true)] {
        let a = build_colored_explicit(two_ell, central).unwrap();
        for r in [check_antisymmetry(&a), check_grading(&a), check_jacobi(&a)] {
            assert!(r.passed(), "two_ell={two_ell} central={central}: {r} {:?}", r.violations.first());
        }
    }
}

#[test]
fn triangular_sectors_match_index_tables() {
    for (two_ell, central) in [(1, false), (2, false), (3, false), (4, false), (3, true)] {
        let a = build_colored_explicit(two_ell, central).unwrap();
        let (dec, report) = check_triangular(&a).unwrap();
        assert!(report.passed(), "two_ell={two_ell}: {report} {:?}", report.violations);
        assert_eq!(dec.plus.len() + dec.zero.len() + dec.minus.len(), a.dim());
    }
}

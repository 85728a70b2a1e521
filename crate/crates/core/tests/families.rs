use brieskorn_core::matrix::{determinant, is_negative_definite, signature};
use brieskorn_core::plumbing::{brieskorn_plumbing, graph_to_seifert, intersection_matrix, star_plumbing};
use brieskorn_core::seifert::{seifert_invariants, validate_triple};
use brieskorn_core::wu::mubar;
use brieskorn_core::{family, FamilyId};
use num_traits::Signed;

fn members(id: FamilyId, range: std::ops::RangeInclusive<i64>) -> impl Iterator<Item = i64> {
    range.filter(move |&n| id.admits(n))
}

#[test]
fn first_theorem_families_match_claims() {
    for id in [FamilyId::Thm1Even2, FamilyId::Thm1Even3] {
        for n in 1..=100 {
            let g = brieskorn_plumbing(&family(id, n).unwrap()).unwrap();
            assert_eq!(g.vertex_count() as i64, n + 5, "{id} n={n}");
            let r = mubar(&g).unwrap();
            assert_eq!(r.signature, -n - 5, "{id} n={n}");
            let square = if n % 2 == 0 { -n - 13 } else { -n - 5 };
            assert_eq!(r.wu_square, square, "{id} n={n}");
            assert_eq!(r.mubar, if n % 2 == 0 { 1 } else { 0 }, "{id} n={n}");
        }
    }
}

#[test]
fn odd_regression_families_are_obstructed() {
    for id in [FamilyId::Al2, FamilyId::Al3] {
        for n in members(id, 1..=99) {
            let r = mubar(&brieskorn_plumbing(&family(id, n).unwrap()).unwrap()).unwrap();
            assert!(r.obstructed, "{id} n={n}");
        }
    }
}

#[test]
fn second_theorem_families_have_vanishing_mubar() {
    let ids = [
        FamilyId::Thm2TwoA,
        FamilyId::Thm2ThreeA,
        FamilyId::Thm2TwoB,
        FamilyId::Thm2ThreeB,
        FamilyId::Thm2TwoC,
        FamilyId::Thm2ThreeC,
        FamilyId::Thm2Single13,
        FamilyId::Thm2Single25,
    ];
    for id in ids {
        for n in members(id, 1..=100) {
            let r = mubar(&brieskorn_plumbing(&family(id, n).unwrap()).unwrap()).unwrap();
            assert_eq!(r.mubar, 0, "{id} n={n}");
        }
    }
}

#[test]
fn every_plumbing_is_negative_definite_and_unimodular() {
    for id in FamilyId::ALL {
        for n in members(id, 1..=100) {
            let m = intersection_matrix(&brieskorn_plumbing(&family(id, n).unwrap()).unwrap());
            assert!(is_negative_definite(&m), "{id} n={n}");
            assert_eq!(determinant(&m).abs(), 1u32.into(), "{id} n={n}");
            assert_eq!(signature(&m), Ok(-(m.dim() as i64)));
        }
    }
}

#[test]
fn plumbing_round_trips_to_seifert_data() {
    for id in FamilyId::ALL {
        for n in members(id, 1..=100) {
            let s = seifert_invariants(&family(id, n).unwrap()).unwrap();
            assert_eq!(graph_to_seifert(&star_plumbing(&s)), Ok(s), "{id} n={n}");
        }
    }
}

#[test]
fn leg_weights_are_canonical() {
    for id in FamilyId::ALL {
        for n in members(id, 1..=100) {
            let g = brieskorn_plumbing(&family(id, n).unwrap()).unwrap();
            assert!(g.weights()[0] <= -1);
            assert!(g.weights()[1..].iter().all(|&w| w <= -2));
        }
    }
}

#[test]
fn figure_plumbings() {
    let g = brieskorn_plumbing(&validate_triple(3, 5, 19).unwrap()).unwrap();
    assert_eq!(g.weights(), &[-1, -3, -3, -2, -4, -5]);
    let g = brieskorn_plumbing(&validate_triple(2, 3, 13).unwrap()).unwrap();
    assert_eq!(g.weights(), &[-1, -2, -3, -7, -2]);
}

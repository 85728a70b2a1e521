use brieskorn_core::casson::{casson_brieskorn, casson_surgery_twist, milnor_fiber_signature};
use brieskorn_core::seifert::validate_triple;
use brieskorn_core::{family, FamilyId};

#[test]
fn twist_surgery_matches_brieskorn_side_under_one_sign() {
    let pairs: Vec<(i64, i64)> = (0..=10)
        .map(|n| {
            let t = validate_triple(2, 3, 6 * n + 1).unwrap();
            (casson_brieskorn(&t).unwrap(), casson_surgery_twist(n, 1))
        })
        .collect();
    let signs: Vec<i64> = [1, -1]
        .into_iter()
        .filter(|&s| pairs.iter().all(|&(b, k)| b == s * k))
        .collect();
    assert_eq!(signs, vec![-1]);
    for (n, &(b, _)) in pairs.iter().enumerate() {
        assert_eq!(b.abs(), n as i64);
    }
}

#[test]
fn no_lattice_point_lands_on_an_integer() {
    for id in FamilyId::ALL {
        for n in 1..=10 {
            if !id.admits(n) {
                continue;
            }
            let t = family(id, n).unwrap();
            let s = milnor_fiber_signature(&t).unwrap();
            let [p, q, r] = t.as_array();
            assert_eq!(s.sigma_zero, 0, "{t}");
            assert_eq!(s.sigma_plus + s.sigma_minus, (p - 1) * (q - 1) * (r - 1));
            assert_eq!(s.sigma() % 8, 0, "{t}");
        }
    }
}

#[test]
fn twist_family_generator_matches() {
    for n in 0..=10 {
        let t = family(FamilyId::Twist, n).unwrap();
        assert_eq!(casson_brieskorn(&t).unwrap(), -casson_surgery_twist(n, 1));
    }
}

use proptest::prelude::*;

use qbernoulli::bernoulli::{solve_system, LinearSystem};
use qbernoulli::qexp::from_xpoly;
use qbernoulli::verify::{check_eq1, params, run_suite, IdentityTag, Verifier};
use qbernoulli::{qbernoulli, QPoly, QRat, XPoly};

fn small_qrat() -> impl Strategy<Value = QRat> {
    let poly = prop::collection::vec(-3i64..=3, 1..=3);
    (poly.clone(), poly).prop_map(|(n, d)| {
        let d = if d.iter().all(|&c| c == 0) { vec![1] } else { d };
        QRat::new(QPoly::from_ints(&n), QPoly::from_ints(&d)).unwrap()
    })
}

fn nonzero_qrat() -> impl Strategy<Value = QRat> {
    small_qrat().prop_filter("nonzero", |c| !c.is_zero())
}

fn small_xpoly() -> impl Strategy<Value = XPoly> {
    prop::collection::vec(small_qrat(), 0..=4).prop_map(XPoly::from_coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn substitution_is_a_ring_homomorphism(p in small_xpoly(), r in small_xpoly()) {
        prop_assert_eq!(from_xpoly(&(&p * &r)), &from_xpoly(&p) * &from_xpoly(&r));
        prop_assert_eq!(from_xpoly(&(&p + &r)), &from_xpoly(&p) + &from_xpoly(&r));
    }

    #[test]
    fn any_single_perturbation_breaks_the_defining_integral(
        n in 0usize..=4,
        index in 0usize..=4,
        delta in nonzero_qrat(),
    ) {
        let index = index % (n + 1);
        let mut coeffs = qbernoulli(n).unwrap().poly.into_coeffs();
        coeffs[index] = &coeffs[index] + &delta;
        let report = check_eq1(n, &XPoly::from_coeffs(coeffs));
        prop_assert!(!report.passed);
        prop_assert!(report.lhs.is_some() && report.rhs.is_some());
    }

    #[test]
    fn solver_round_trips(
        matrix in prop::collection::vec(prop::collection::vec(small_qrat(), 3), 3),
        x in prop::collection::vec(small_qrat(), 3),
    ) {
        let probe = LinearSystem::new(matrix.clone(), vec![QRat::zero(); 3]).unwrap();
        let system = LinearSystem::new(matrix, probe.apply(&x)).unwrap();
        if let Ok(solution) = solve_system(&system) {
            prop_assert_eq!(solution, x);
        }
    }
}

#[test]
fn suite_is_deterministic_and_passes() {
    let a = run_suite(8, 6);
    let b = run_suite(8, 6);
    assert_eq!(a, b);
    let failures: Vec<String> = a.iter().filter(|r| !r.passed).map(|r| r.summary_line()).collect();
    assert!(failures.is_empty(), "{failures:#?}");
    // 11 tags over n = 0..=8, EQ8 over 0..=3, PROP3 over 1..=8,
    // PROP2 over 8 x 6, NUM_JACKSON over 2 x 8.
    assert_eq!(a.len(), 10 * 9 + 4 + 8 + 48 + 16);
}

#[test]
fn shared_cache_matches_fresh_verifiers() {
    let shared = Verifier::new();
    for tag in [IdentityTag::Cor2, IdentityTag::Thm1, IdentityTag::Eq1, IdentityTag::Cor2] {
        for n in 0..=5usize {
            let p = params([("n", n)]);
            let warm = shared.run_identity(tag, &p).unwrap();
            let cold = Verifier::new().run_identity(tag, &p).unwrap();
            assert_eq!(warm, cold);
        }
    }
}

#[test]
fn tag_filtered_sweep() {
    let reports = Verifier::new().run_suite(12, 1, &[IdentityTag::Cor2]);
    assert_eq!(reports.len(), 13);
    assert!(reports.iter().all(|r| r.passed));
    let ns: Vec<String> = reports.iter().map(|r| r.params["n"].to_string()).collect();
    assert_eq!(ns, (0..=12).map(|n| n.to_string()).collect::<Vec<_>>());
}

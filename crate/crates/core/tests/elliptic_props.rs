//! sn, cn, dn by ODE, by integral inversion and by AGM, checked against
//! each other and against their defining identities.

use jacobi_lie::ellint::{self, QuadratureConfig};
use jacobi_lie::jacobiode::{self, IntegratorConfig};
use jacobi_lie::oracle;
use proptest::prelude::*;

const KAPPAS: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

fn quarter(k: f64) -> f64 {
    ellint::complete_k(k).unwrap()
}

#[test]
fn round_trips_on_first_quarter() {
    for k in KAPPAS {
        let kk = quarter(k);
        for i in 0..20 {
            let u = kk * i as f64 / 20.0;
            let (sn, cn, dn) = jacobiode::jacobi(u, k).unwrap();
            assert!((ellint::asn(sn, k).unwrap() - u).abs() < 1e-8, "asn k={k} u={u}");
            assert!((ellint::acn(cn, k).unwrap() - u).abs() < 1e-8, "acn k={k} u={u}");
            assert!((ellint::adn(dn.min(1.0), k).unwrap() - u).abs() < 1e-8, "adn k={k} u={u}");
        }
    }
}

#[test]
fn monotone_integrals() {
    for k in [0.0, 0.4, 0.9] {
        let xs: Vec<f64> = (0..=100).map(|i| i as f64 / 100.0).collect();
        let asn: Vec<f64> = xs.iter().map(|&x| ellint::asn(x, k).unwrap()).collect();
        let acn: Vec<f64> = xs.iter().map(|&x| ellint::acn(x, k).unwrap()).collect();
        assert!(asn.windows(2).all(|w| w[1] > w[0]));
        assert!(acn.windows(2).all(|w| w[1] < w[0]));
    }
}

#[test]
fn three_routes_agree_on_first_quarter() {
    for k in KAPPAS {
        let kk = quarter(k);
        for i in 0..=25 {
            let u = kk * i as f64 / 25.0;
            let by_root = ellint::invert_asn(u, k).unwrap();
            let by_ode = jacobiode::sn(u, k).unwrap();
            let by_agm = oracle::jacobi_agm(u, k).unwrap().0;
            assert!((by_root - by_ode).abs() < 1e-8);
            assert!((by_root - by_agm).abs() < 1e-8);
            assert!((by_ode - by_agm).abs() < 1e-8);
        }
    }
}

#[test]
fn tighter_quadrature_moves_less_than_error_estimate() {
    let loose = QuadratureConfig {
        abs_tol: 1e-8,
        rel_tol: 1e-8,
        max_depth: 30,
    };
    let tight = QuadratureConfig {
        abs_tol: 0.5e-8,
        rel_tol: 0.5e-8,
        max_depth: 30,
    };
    for k in [0.3, 0.9, 0.99] {
        for x in [0.2, 0.7, 0.999, 1.0] {
            let a = ellint::asn_with(x, k, &loose).unwrap();
            let b = ellint::asn_with(x, k, &tight).unwrap();
            assert!((a.value - b.value).abs() <= a.error, "k={k} x={x}");
        }
    }
}

#[test]
fn conservation_to_eight_quarter_periods() {
    let cfg = IntegratorConfig::default();
    for k in [0.0, 0.3, 0.7, 0.9, 0.99] {
        let traj = jacobiode::trajectory(8.0 * quarter(k), k, &cfg).unwrap();
        for s in &traj {
            assert!(s.circle_defect() < 10.0 * cfg.tol, "k={k} u={} {:e}", s.u, s.circle_defect());
            assert!(s.modulus_defect() < 10.0 * cfg.tol, "k={k} u={} {:e}", s.u, s.modulus_defect());
            assert!(s.f2.abs() <= 1.0 + 1e-10 && s.f3.abs() <= 1.0 + 1e-10);
            let kp = (1.0 - k * k).sqrt();
            assert!(s.f1.abs() >= kp - 1e-10 && s.f1.abs() <= 1.0 + 1e-10);
        }
    }
}

#[test]
fn square_root_relations_and_sign_flips() {
    for k in [0.2, 0.6, 0.95] {
        let kk = quarter(k);
        for i in 0..80 {
            let u = 8.0 * kk * i as f64 / 79.0;
            let (sn, cn, dn) = jacobiode::jacobi(u, k).unwrap();
            assert!((dn - (1.0 - k * k * sn * sn).sqrt()).abs() < 1e-9);
            assert!((cn.abs() - (1.0 - sn * sn).max(0.0).sqrt()).abs() < 1e-5);
            // cn > 0 on (−K, K) mod 4K, < 0 on (K, 3K)
            let phase = (u / kk).rem_euclid(4.0);
            if (phase - 1.0).abs() > 0.02 && (phase - 3.0).abs() > 0.02 {
                let expected = if phase < 1.0 || phase > 3.0 { 1.0 } else { -1.0 };
                assert_eq!(cn.signum(), expected, "k={k} u={u}");
            }
        }
        for m in [1.0, 3.0, 5.0, 7.0] {
            assert!(jacobiode::cn(m * kk, k).unwrap().abs() < 1e-8);
        }
    }
}

fn five_point_derivative(f: impl Fn(f64) -> f64, u: f64, h: f64) -> f64 {
    (f(u - 2.0 * h) - 8.0 * f(u - h) + 8.0 * f(u + h) - f(u + 2.0 * h)) / (12.0 * h)
}

#[test]
fn first_order_form_by_finite_differences() {
    for k in [0.1, 0.5, 0.9] {
        let kk = quarter(k);
        for i in 0..40 {
            let u = kk * i as f64 / 40.0;
            let d = five_point_derivative(|x| jacobiode::sn(x, k).unwrap(), u, 1e-3);
            let sn = jacobiode::sn(u, k).unwrap();
            let rhs = (1.0 - k * k * sn * sn).sqrt() * (1.0 - sn * sn).sqrt();
            assert!((d - rhs).abs() < 1e-6, "k={k} u={u} {d} vs {rhs}");
        }
    }
}

#[test]
fn oracle_equivalence_grid() {
    let kappas = [0.0, 0.1, 0.3, 0.5, 0.7, 0.8, 0.9, 0.95, 0.99];
    for k in kappas {
        for i in 0..50 {
            let u = -12.0 + 24.0 * i as f64 / 49.0;
            let (a, b, c) = jacobiode::jacobi(u, k).unwrap();
            let (x, y, z) = oracle::jacobi_agm(u, k).unwrap();
            let dev = (a - x).abs().max((b - y).abs()).max((c - z).abs());
            assert!(dev < 1e-9, "k={k} u={u} dev={dev:e}");
        }
    }
}

#[test]
fn quarter_period_from_both_routes() {
    for k in [0.0, 0.25, 0.5, 0.75, 0.9, 0.99] {
        let quad = quarter(k);
        let agm = oracle::complete_k_agm(k).unwrap();
        assert!((quad - agm).abs() < 1e-10);
        let (sn, cn, dn) = jacobiode::jacobi(quad, k).unwrap();
        assert!((sn - 1.0).abs() < 1e-8);
        assert!(cn.abs() < 1e-8);
        assert!((dn - (1.0 - k * k).sqrt()).abs() < 1e-8);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn periodicity(u in -6.0f64..6.0, k in 0.0f64..0.99) {
        let kk = quarter(k);
        let a = jacobiode::sn(u, k).unwrap();
        let b = jacobiode::sn(u + 4.0 * kk, k).unwrap();
        prop_assert!((a - b).abs() < 1e-8);
    }

    #[test]
    fn parity(u in 0.0f64..10.0, k in 0.0f64..0.99) {
        let p = jacobiode::jacobi(u, k).unwrap();
        let m = jacobiode::jacobi(-u, k).unwrap();
        prop_assert!((p.0 + m.0).abs() < 1e-10);
        prop_assert!((p.1 - m.1).abs() < 1e-10);
        prop_assert!((p.2 - m.2).abs() < 1e-10);
    }

    #[test]
    fn oracle_identities(u in -20.0f64..20.0, k in 0.0f64..0.999) {
        let (sn, cn, dn) = oracle::jacobi_agm(u, k).unwrap();
        prop_assert!((sn * sn + cn * cn - 1.0).abs() < 1e-12);
        prop_assert!((dn * dn + k * k * sn * sn - 1.0).abs() < 1e-12);
    }

    #[test]
    fn agm_symmetric(a in 0.01f64..10.0, b in 0.01f64..10.0) {
        let x = oracle::agm(a, b).unwrap();
        let y = oracle::agm(b, a).unwrap();
        prop_assert!((x - y).abs() <= 1e-15 * x.max(1.0));
        prop_assert!(x >= a.min(b) && x <= a.max(b));
    }

    #[test]
    fn inversion_round_trip(frac in 0.0f64..=1.0, k in 0.0f64..0.99) {
        let u = frac * quarter(k);
        let x = ellint::invert_asn(u, k).unwrap();
        prop_assert!((ellint::asn(x, k).unwrap() - u).abs() < 1e-10);
    }

    #[test]
    fn integral_route_matches_oracle_everywhere(u in -15.0f64..15.0, k in 0.0f64..0.99) {
        let (a, b, c) = ellint::jacobi_by_inversion(u, k).unwrap();
        let (x, y, z) = oracle::jacobi_agm(u, k).unwrap();
        prop_assert!((a - x).abs() < 1e-9 && (b - y).abs() < 1e-9 && (c - z).abs() < 1e-9);
    }

    #[test]
    fn asn_odd(x in 0.0f64..=1.0, k in 0.0f64..0.99) {
        prop_assert!((ellint::asn(-x, k).unwrap() + ellint::asn(x, k).unwrap()).abs() < 1e-14);
    }
}

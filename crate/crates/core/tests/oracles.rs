//! Computed values checked against independent oracles: brute-force projection,
//! Hilbert-function counts, hand-computed matrices.

use secantcat::linalg::{rank, LinearSpan};
use secantcat::multisym::{alternating_basis, verify_mappoly, ConfigRing, TwistedProjector};
use secantcat::secants::{secant_ideal, verify_determinantal, SecantOptions};
use secantcat::sections::{build_catalecticant, build_catalecticant_in, minors_ideal, model_p1, model_veronese, rank_profile, variety_ideal};
use secantcat::text::parse_poly;
use secantcat::{Budget, Ideal, PolyRing, ScalarMode};

fn q() -> ScalarMode {
    ScalarMode::Rational
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Rank of the twisted projector on all monomials of degree `e`.
fn projected_rank(cfg: &ConfigRing, e: u32, twist: i64) -> usize {
    let p = TwistedProjector::new(cfg, twist).unwrap();
    let ring = cfg.ring();
    let images: Vec<_> = ring
        .monomials_of_degree(e)
        .into_iter()
        .map(|m| p.apply(&ring.monomial(m, q().one())).unwrap())
        .collect();
    LinearSpan::from_polys(ring, images.iter()).dim()
}

#[test]
fn alternating_dimensions_match_brute_force() {
    for (n, d, emax) in [(1, 2, 4), (1, 3, 5), (2, 2, 4), (2, 3, 4), (3, 2, 3), (1, 4, 6)] {
        let cfg = ConfigRing::new(n, d, q()).unwrap();
        for e in 0..=emax {
            let brute = projected_rank(&cfg, e, 1);
            let basis = alternating_basis(&cfg, e).unwrap();
            assert_eq!(basis.len(), brute, "n={n} d={d} e={e}");
            assert_eq!(LinearSpan::from_polys(cfg.ring(), basis.iter()).dim(), brute);
            assert_eq!(cfg.isotypic_dim(e, 1), brute);
            assert_eq!(cfg.isotypic_dim(e, 0), projected_rank(&cfg, e, 0));
        }
    }
}

#[test]
fn vandermonde_is_the_first_alternation() {
    let cfg = ConfigRing::new(1, 3, q()).unwrap();
    assert_eq!(cfg.min_alternating_degree(), 3);
    assert!(alternating_basis(&cfg, 2).unwrap().is_empty());
    let l = |s: &str| parse_poly(cfg.ring(), s).unwrap();
    let v = &(&l("x_1_1 - x_1_2") * &l("x_1_1 - x_1_3")) * &l("x_1_2 - x_1_3");
    let b = alternating_basis(&cfg, 3).unwrap();
    assert_eq!(b.len(), 1);
    assert_eq!(b[0].monic(), v.monic());
    // n = 3, d = 3 has no linear alternations.
    assert!(alternating_basis(&ConfigRing::new(3, 3, q()).unwrap(), 1).unwrap().is_empty());
}

#[test]
fn mappoly_hand_expansion() {
    let cfg = ConfigRing::new(1, 2, q()).unwrap();
    let c = verify_mappoly(&cfg, 2, 2).unwrap();
    let e2 = c.degrees.iter().find(|g| g.degree == 2).unwrap();
    assert_eq!((e2.dim_products, e2.dim_power, e2.dim_lower_power), (1, 1, 1));
    let e1 = c.degrees.iter().find(|g| g.degree == 1).unwrap();
    assert_eq!(e1.dim_products, 0);
    let cfg = ConfigRing::new(2, 2, q()).unwrap();
    let c = verify_mappoly(&cfg, 2, 2).unwrap();
    assert!(c.degrees.iter().all(|g| g.products_equal_power));
}

/// `dim I(P¹, O(d))₂ = C(d+2, 2) - (2d + 1)`.
#[test]
fn rational_normal_curve_quadrics() {
    for d in 2..=6u32 {
        let i = variety_ideal(&model_p1(1, d - 1), q(), Budget::default()).unwrap().ideal;
        let hilbert = 2 * d as usize + 1;
        assert_eq!(i.graded_piece(2).unwrap().dim(), binomial(d as usize + 2, 2) - hilbert, "d={d}");
        assert_eq!(i.graded_piece(1).unwrap().dim(), 0);
    }
}

#[test]
fn veronese_surface_quadrics() {
    let i = variety_ideal(&model_veronese(2, 1, 1).unwrap(), q(), Budget::default()).unwrap().ideal;
    assert_eq!(i.graded_piece(2).unwrap().dim(), 21 - 15);
}

#[test]
fn rational_normal_curves_are_hankel_two_minors() {
    // The degree-d curve from P1(a, b) with a + b = d, against the 2 x (d) Hankel.
    for (a, b) in [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)] {
        let x = variety_ideal(&model_p1(a, b), q(), Budget::default()).unwrap().ideal;
        let hankel = minors_ideal(&build_catalecticant(&model_p1(1, a + b - 1)), 2).unwrap();
        assert!(x.equals(&hankel).unwrap(), "({a},{b})");
    }
}

#[test]
fn conic_elimination_by_hand() {
    let r = PolyRing::grevlex(["s", "t", "z_0", "z_1", "z_2"], q()).unwrap();
    let gens = ["z_0 - s^2", "z_1 - s*t", "z_2 - t^2"].map(|g| parse_poly(&r, g).unwrap());
    let e = Ideal::new(&r, gens.to_vec()).unwrap().eliminate(&[2, 3, 4]).unwrap();
    let conic = parse_poly(&r, "z_0*z_2 - z_1^2").unwrap();
    assert!(e.equals(&Ideal::new(&r, vec![conic]).unwrap()).unwrap());
}

#[test]
fn rank_profiles_by_hand() {
    let m = model_p1(2, 2);
    let cat = build_catalecticant(&m);
    let z = |v: [i64; 5]| v.map(|x| q().from_i64(x)).to_vec();
    assert_eq!(rank_profile(&cat, &z([1, 1, 1, 1, 1])).unwrap(), 1);
    assert_eq!(rank_profile(&cat, &z([1, 0, 0, 0, 1])).unwrap(), 2);
    assert_eq!(rank_profile(&cat, &z([0; 5])).unwrap(), 0);
    // Explicit matrix of (1,0,0,0,1): diag(1,0,1).
    let row = |v: [i64; 3]| v.map(|x| q().from_i64(x)).to_vec();
    let rows = vec![row([1, 0, 0]), row([0, 0, 0]), row([0, 0, 1])];
    assert_eq!(rank(&rows), 2);
    // Sum of two curve points, image(1,0) + image(0,1), matches the above.
    let p = m.point(&[q().one(), q().zero()]).unwrap();
    let r = m.point(&[q().zero(), q().one()]).unwrap();
    let sum: Vec<_> = p.iter().zip(&r).map(|(a, b)| a + b).collect();
    assert_eq!(sum, z([1, 0, 0, 0, 1]));
}

#[test]
fn quintic_secant_is_cut_by_three_minors() {
    let c = verify_determinantal(&model_p1(2, 3), 1, SecantOptions::default()).unwrap();
    assert!(c.verdicts().equal.is_true());
}

#[test]
fn sextic_second_secant_is_the_hankel_quartic() {
    let mode = ScalarMode::prime_field(32003).unwrap();
    let m = model_p1(3, 3);
    let sec = secant_ideal(&m, 2, mode, Budget::default()).unwrap();
    let det = minors_ideal(&build_catalecticant_in(&m, mode).unwrap(), 4).unwrap();
    assert_eq!(det.gens().len(), 1);
    assert!(sec.equals(&det).unwrap());
}

#[test]
fn principal_intersection_is_lcm() {
    let r = PolyRing::grevlex(["x_1", "x_2", "x_3"], q()).unwrap();
    let l = |s: &str| parse_poly(&r, s).unwrap();
    let p = |f| Ideal::new(&r, vec![f]).unwrap();
    let i = p(l("x_1 - x_2")).intersect(&p(l("x_1 - x_3"))).unwrap().intersect(&p(l("x_2 - x_3"))).unwrap();
    let lcm = &(&l("x_1 - x_2") * &l("x_1 - x_3")) * &l("x_2 - x_3");
    assert!(i.equals(&p(lcm)).unwrap());
}

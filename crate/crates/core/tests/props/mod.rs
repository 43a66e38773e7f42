//! Seeded property suites for the algebra engine, shared by the core integration
//! tests and the acceptance harness.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use secantcat::multisym::{ConfigRing, Perm, TwistedProjector};
use secantcat::rank3::{quad_rank, QuadForm};
use secantcat::secants::join_ideals;
use secantcat::{ExpVec, Ideal, Poly, PolyRing, ScalarMode};

pub const CASES: u32 = 128;

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(Config { cases, failure_persistence: None, ..Config::default() }, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn finish(name: &str, r: Result<(), proptest::test_runner::TestError<impl std::fmt::Debug>>) -> Result<(), String> {
    r.map_err(|e| format!("{name}: {e}"))
}

type RawPoly = Vec<(i64, Vec<u16>)>;

fn raw_poly(nvars: usize, max_exp: u16, terms: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((-3i64..=3, prop::collection::vec(0..=max_exp, nvars)), 1..=terms)
}

fn build(ring: &PolyRing, raw: &RawPoly) -> Poly {
    let mode = ring.mode();
    ring.from_terms(raw.iter().map(|(c, e)| (ExpVec::from_slice(e), mode.from_i64(*c))))
}

/// Homogeneous part of degree `deg` of the monomials picked by `picks`.
fn build_homogeneous(ring: &PolyRing, deg: u32, picks: &[(i64, usize)]) -> Poly {
    let mons = ring.monomials_of_degree(deg);
    let mode = ring.mode();
    ring.from_terms(picks.iter().map(|&(c, k)| (mons[k % mons.len()].clone(), mode.from_i64(c))))
}

fn xyz() -> PolyRing {
    PolyRing::grevlex(["x", "y", "z"], ScalarMode::Rational).unwrap()
}

fn ideal_of(ring: &PolyRing, raws: &[RawPoly]) -> Ideal {
    Ideal::new(ring, raws.iter().map(|r| build(ring, r)).collect()).unwrap()
}

/// `P² = P` and `σ·P(f) = ε(σ)^ℓ P(f)` for every `σ` in `S_d`, `d <= 4`.
pub fn projector(cases: u32) -> Result<(), String> {
    let strat = (1usize..=4, 1usize..=2, 0i64..=1).prop_flat_map(|(d, n, twist)| {
        (Just(d), Just(n), Just(twist), raw_poly(n * d, 2, 4))
    });
    let r = runner(cases).run(&strat, |(d, n, twist, raw)| {
        let cfg = ConfigRing::new(n, d, ScalarMode::Rational).unwrap();
        let p = TwistedProjector::new(&cfg, twist).unwrap();
        let f = build(cfg.ring(), &raw);
        let pf = p.apply(&f).unwrap();
        prop_assert_eq!(p.apply(&pf).unwrap(), pf.clone());
        for s in Perm::all(d) {
            let sign = if twist == 1 { s.sign() } else { 1 };
            let want = pf.scale(&ScalarMode::Rational.from_i64(sign));
            prop_assert_eq!(cfg.act(&s, &pf).unwrap(), want.clone());
            prop_assert_eq!(p.apply(&cfg.act(&s, &f).unwrap()).unwrap(), want);
        }
        Ok(())
    });
    finish("projector", r)
}

/// `NF(NF(f)) = NF(f)` and `f - NF(f) ∈ I`.
pub fn normal_form(cases: u32) -> Result<(), String> {
    let strat = (prop::collection::vec(raw_poly(3, 2, 3), 1..=3), raw_poly(3, 3, 5));
    let r = runner(cases).run(&strat, |(gens, f)| {
        let ring = xyz();
        let i = ideal_of(&ring, &gens);
        let f = build(&ring, &f);
        let nf = i.normal_form(&f).unwrap();
        prop_assert_eq!(i.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(i.contains(&(&f - &nf)).unwrap());
        Ok(())
    });
    finish("normal form", r)
}

/// `I = I`, `I = I'` for a regenerated copy, and symmetry on random pairs.
pub fn ideal_equal(cases: u32) -> Result<(), String> {
    let strat = (
        prop::collection::vec(raw_poly(3, 2, 3), 1..=3),
        prop::collection::vec(raw_poly(3, 2, 3), 1..=3),
        -3i64..=3,
    );
    let r = runner(cases).run(&strat, |(a, b, c)| {
        let ring = xyz();
        let i = ideal_of(&ring, &a);
        let j = ideal_of(&ring, &b);
        prop_assert!(i.equals(&i).unwrap());
        prop_assert_eq!(i.equals(&j).unwrap(), j.equals(&i).unwrap());
        if i.gens().is_empty() {
            return Ok(());
        }
        let mut regen: Vec<Poly> = i.gens().iter().rev().cloned().collect();
        let extra = &regen[0] + &i.gens()[0].scale(&ScalarMode::Rational.from_i64(c));
        regen.push(extra);
        let i2 = Ideal::new(&ring, regen).unwrap();
        prop_assert!(i.equals(&i2).unwrap() && i2.equals(&i).unwrap());
        Ok(())
    });
    finish("ideal equality", r)
}

/// `IJ ⊆ I ∩ J ⊆ I, J`.
pub fn intersection(cases: u32) -> Result<(), String> {
    let strat = (
        prop::collection::vec(raw_poly(3, 2, 3), 1..=2),
        prop::collection::vec(raw_poly(3, 2, 3), 1..=2),
    );
    let r = runner(cases).run(&strat, |(a, b)| {
        let ring = xyz();
        let i = ideal_of(&ring, &a);
        let j = ideal_of(&ring, &b);
        let k = i.intersect(&j).unwrap();
        prop_assert!(i.contains_ideal(&k).unwrap());
        prop_assert!(j.contains_ideal(&k).unwrap());
        prop_assert!(k.contains_ideal(&i.product(&j).unwrap()).unwrap());
        Ok(())
    });
    finish("intersection", r)
}

/// `join(I, J) = join(J, I)` on homogeneous ideals of points and curves in `P²`.
pub fn join_symmetry(cases: u32) -> Result<(), String> {
    let gens = || prop::collection::vec((1u32..=2, prop::collection::vec((-3i64..=3, 0usize..6), 1..=3)), 1..=2);
    let r = runner(cases).run(&(gens(), gens()), |(a, b)| {
        let ring = xyz();
        let mk = |spec: &[(u32, Vec<(i64, usize)>)]| {
            Ideal::new(&ring, spec.iter().map(|(deg, picks)| build_homogeneous(&ring, *deg, picks)).collect()).unwrap()
        };
        let (i, j) = (mk(&a), mk(&b));
        let ij = join_ideals(&i, &j).unwrap();
        let ji = join_ideals(&j, &i).unwrap();
        prop_assert!(ij.equals(&ji).unwrap());
        Ok(())
    });
    finish("join symmetry", r)
}

/// `rank(AᵀMA) = rank(M)` for invertible `A`.
pub fn quad_rank_congruence(cases: u32) -> Result<(), String> {
    let strat = (2usize..=5).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(-3i64..=3, n * n),
            prop::collection::vec(-2i64..=2, n * n),
            prop::collection::vec(1i64..=3, n),
            Just(()).prop_perturb(move |_, mut rng| {
                let mut p: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    p.swap(i, (rng.next_u32() as usize) % (i + 1));
                }
                p
            }),
        )
    });
    let r = runner(cases).run(&strat, |(n, m, l, diag, perm)| {
        let mode = ScalarMode::Rational;
        let ring = PolyRing::grevlex((0..n).map(|i| format!("z_{i}")), mode).unwrap();
        let sym: Vec<Vec<_>> = (0..n)
            .map(|i| (0..n).map(|j| mode.from_i64(m[i.min(j) * n + i.max(j)])).collect())
            .collect();
        let q = QuadForm::new(&ring, sym).unwrap();
        // A = P·L, L lower triangular with nonzero diagonal.
        let a: Vec<Vec<_>> = (0..n)
            .map(|i| {
                let row = perm[i];
                (0..n)
                    .map(|j| match j.cmp(&row) {
                        std::cmp::Ordering::Less => mode.from_i64(l[row * n + j]),
                        std::cmp::Ordering::Equal => mode.from_i64(diag[row]),
                        std::cmp::Ordering::Greater => mode.zero(),
                    })
                    .collect()
            })
            .collect();
        let pulled = q.pullback(&a, &ring).unwrap();
        prop_assert_eq!(quad_rank(&pulled), quad_rank(&q));
        Ok(())
    });
    finish("quad_rank congruence", r)
}

pub fn all(cases: u32) -> Vec<(&'static str, Result<(), String>)> {
    vec![
        ("projector idempotence and equivariance", projector(cases)),
        ("normal-form idempotence", normal_form(cases)),
        ("ideal equality reflexive and symmetric", ideal_equal(cases)),
        ("intersection containments", intersection(cases)),
        ("join symmetry", join_symmetry(cases)),
        ("quad_rank congruence invariance", quad_rank_congruence(cases)),
    ]
}

//! Joins of affine cones, secant-variety ideals, and the comparison of secant
//! ideals with catalecticant minor ideals.

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{Budget, Ideal};
use crate::poly::{Poly, PolyRing};
use crate::scalar::ScalarMode;
use crate::sections::{build_catalecticant_in, minors_ideal, variety_ideal, Provenance, SectionModel};
use crate::verdict::Verdict;

/// Ideal of the join of the cones of `I` and `J`: with `w = z - y`, eliminate `y`
/// from `I(y) + J(z - y)`.
pub fn join_ideals(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let ring = i.ring();
    if j.ring() != ring {
        return Err(Error::RingMismatch);
    }
    let l = ring.nvars();
    let names = (0..l).map(|g| format!("y_{g}")).chain(ring.names().iter().cloned());
    let big = PolyRing::grevlex(names, ring.mode())?;
    let z_minus_y: Vec<Poly> = (0..l).map(|g| &big.var(l + g) - &big.var(g)).collect();
    let mut gens: Vec<Poly> = i.gens().iter().map(|f| f.reindex(&big, |g| g)).collect();
    for f in j.gens() {
        gens.push(f.apply_ring_map(&z_minus_y)?);
    }
    let budget = i.budget();
    let elim = Ideal::new(&big, gens)?.with_budget(budget).eliminate(&(l..2 * l).collect::<Vec<_>>())?;
    elim.to_ring(ring)
}

/// `Σ_0 = I(X)`, `Σ_k = join(Σ_{k-1}, I(X))`.
pub fn secant_ideal(model: &SectionModel, k: u32, mode: ScalarMode, budget: Budget) -> Result<Ideal> {
    Ok(secant_chain(model, k, mode, budget)?.pop().unwrap())
}

/// `[Σ_0, .., Σ_k]`.
pub fn secant_chain(model: &SectionModel, k: u32, mode: ScalarMode, budget: Budget) -> Result<Vec<Ideal>> {
    let x = variety_ideal(model, mode, budget)?.ideal;
    let mut chain = vec![x.clone()];
    for _ in 0..k {
        let next = join_ideals(chain.last().unwrap(), &x)?;
        chain.push(next);
    }
    Ok(chain)
}

#[derive(Debug, Clone, Serialize)]
pub struct SecantVerdicts {
    pub minors_contained: Verdict,
    pub equal: Verdict,
    pub degree_k1_empty: Verdict,
    pub generated_in_degree_k2: Verdict,
}

impl SecantVerdicts {
    fn all(v: Verdict) -> Self {
        SecantVerdicts {
            minors_contained: v.clone(),
            equal: v.clone(),
            degree_k1_empty: v.clone(),
            generated_in_degree_k2: v,
        }
    }

    pub fn all_true(&self) -> bool {
        [&self.minors_contained, &self.equal, &self.degree_k1_empty, &self.generated_in_degree_k2]
            .iter()
            .all(|v| v.is_true())
    }

    pub fn any_false(&self) -> bool {
        [&self.minors_contained, &self.equal, &self.degree_k1_empty, &self.generated_in_degree_k2]
            .iter()
            .any(|v| v.is_false())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SecantRun {
    pub mode: String,
    pub verdicts: SecantVerdicts,
    pub secant_gb_size: Option<usize>,
    pub secant_gb_hash: Option<String>,
    pub minors_generators: usize,
    pub minors_hash: String,
    pub degree_k1_dim: Option<usize>,
    pub degree_k2_dim: Option<usize>,
    #[serde(skip)]
    pub seconds: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SecantCertificate {
    pub provenance: Provenance,
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_l: usize,
    pub k: u32,
    /// Prime-field screening run, when requested.
    pub screen: Option<SecantRun>,
    /// Run in the requested mode; absent for screen-only runs.
    pub confirm: Option<SecantRun>,
    pub assumptions: Vec<String>,
}

impl SecantCertificate {
    /// Verdicts that count: the confirming run's, or inconclusive without one.
    pub fn verdicts(&self) -> SecantVerdicts {
        match &self.confirm {
            Some(r) => r.verdicts.clone(),
            None => SecantVerdicts::all(Verdict::Inconclusive("no confirming run".into())),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SecantOptions {
    pub mode: ScalarMode,
    pub budget: Budget,
    /// Run in `F_p` before the confirming run.
    pub screen_prime: Option<u32>,
    /// Stop after screening; verdicts then stay inconclusive.
    pub screen_only: bool,
}

impl Default for SecantOptions {
    fn default() -> Self {
        SecantOptions { mode: ScalarMode::Rational, budget: Budget::default(), screen_prime: None, screen_only: false }
    }
}

fn run_once(model: &SectionModel, k: u32, mode: ScalarMode, budget: Budget) -> Result<SecantRun> {
    let start = Instant::now();
    let cat = build_catalecticant_in(model, mode)?;
    let minors = minors_ideal(&cat, k as usize + 2)?.with_budget(budget);
    let mut run = SecantRun {
        mode: mode.label(),
        verdicts: SecantVerdicts::all(Verdict::Inconclusive(String::new())),
        secant_gb_size: None,
        secant_gb_hash: None,
        minors_generators: minors.gens().len(),
        minors_hash: minors.gens_hash(),
        degree_k1_dim: None,
        degree_k2_dim: None,
        seconds: 0.0,
    };
    let sec = match secant_ideal(model, k, mode, budget) {
        Ok(s) => s,
        Err(e) if e.is_budget() => {
            run.verdicts = SecantVerdicts::all(Verdict::Inconclusive(format!("secant ideal: {e}")));
            run.seconds = start.elapsed().as_secs_f64();
            return Ok(run);
        }
        Err(e) => return Err(e),
    };
    let gb = sec.groebner()?.to_vec();
    run.secant_gb_size = Some(gb.len());
    run.secant_gb_hash = Some(sec.gb_hash()?);
    let contained = Verdict::from_result(sec.contains_all(minors.gens()))?;
    let equal = if contained.is_true() {
        Verdict::from_result(minors.contains_all(&gb))?
    } else {
        contained.clone()
    };
    let k1 = sec.graded_piece(k + 1)?;
    run.degree_k1_dim = Some(k1.dim());
    let k2 = sec.graded_piece(k + 2)?;
    run.degree_k2_dim = Some(k2.dim());
    let low = Ideal::new(sec.ring(), k2.polys().to_vec())?.with_budget(budget);
    // low ⊆ sec by construction
    let generated = Verdict::from_result(low.contains_all(&gb))?;
    run.verdicts = SecantVerdicts {
        minors_contained: contained,
        equal,
        degree_k1_empty: Verdict::from_bool(k1.dim() == 0),
        generated_in_degree_k2: generated,
    };
    run.seconds = start.elapsed().as_secs_f64();
    Ok(run)
}

/// Compares `Σ_k` with the ideal of `(k+2)`-minors of the catalecticant.
pub fn verify_determinantal(model: &SectionModel, k: u32, opts: SecantOptions) -> Result<SecantCertificate> {
    if model.dim_a().min(model.dim_b()) < k as usize + 2 {
        return Err(Error::InvalidArgument(format!(
            "catalecticant is {}x{}, too small for {}-minors",
            model.dim_a(),
            model.dim_b(),
            k + 2
        )));
    }
    if !model.has_parametrization() {
        return Err(Error::UnsupportedProvenance);
    }
    let screen = match opts.screen_prime {
        Some(p) => Some(run_once(model, k, ScalarMode::prime_field(p)?, opts.budget)?),
        None => None,
    };
    let confirm = if opts.screen_only {
        None
    } else {
        Some(run_once(model, k, opts.mode, opts.budget)?)
    };
    let mut assumptions = vec![
        "elimination ideals of prime inputs are taken as ideals of the image closures; no saturation".to_string(),
    ];
    if opts.mode != ScalarMode::Rational {
        assumptions.push(format!("confirming run over {}, not over QQ", opts.mode.label()));
    }
    Ok(SecantCertificate {
        provenance: model.provenance,
        dim_a: model.dim_a(),
        dim_b: model.dim_b(),
        dim_l: model.dim_l(),
        k,
        screen,
        confirm,
        assumptions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sections::{build_catalecticant, model_p1, z_ring};

    fn q() -> ScalarMode {
        ScalarMode::Rational
    }

    #[test]
    fn conic_secants_fill_the_plane() {
        let x = variety_ideal(&model_p1(1, 1), q(), Budget::default()).unwrap().ideal;
        let j = join_ideals(&x, &x).unwrap();
        assert!(j.is_zero_ideal() || j.groebner().unwrap().is_empty());
    }

    #[test]
    fn cubic_secants_fill_space() {
        let x = variety_ideal(&model_p1(1, 2), q(), Budget::default()).unwrap().ideal;
        let j = join_ideals(&x, &x).unwrap();
        assert!(j.groebner().unwrap().is_empty());
    }

    #[test]
    fn join_with_vertex_cone() {
        let x = variety_ideal(&model_p1(1, 2), q(), Budget::default()).unwrap().ideal;
        let r = z_ring(4, q());
        let max = Ideal::new(&r, r.vars()).unwrap();
        assert!(join_ideals(&x, &max).unwrap().equals(&x).unwrap());
    }

    #[test]
    fn quartic_secant_is_hankel_cubic() {
        let m = model_p1(2, 2);
        let s = secant_ideal(&m, 1, q(), Budget::default()).unwrap();
        let det = minors_ideal(&build_catalecticant(&m), 3).unwrap();
        assert!(s.equals(&det).unwrap());
        assert_eq!(secant_ideal(&m, 0, q(), Budget::default()).unwrap().gens().len(), 6);
    }

    #[test]
    fn determinantal_small() {
        let c = verify_determinantal(&model_p1(1, 1), 0, SecantOptions::default()).unwrap();
        assert!(c.verdicts().all_true());
        let c = verify_determinantal(&model_p1(2, 2), 1, SecantOptions::default()).unwrap();
        assert!(c.verdicts().all_true());
        assert!(verify_determinantal(&model_p1(1, 1), 1, SecantOptions::default()).is_err());
    }

    #[test]
    fn screening_then_confirm() {
        let opts = SecantOptions { screen_prime: Some(32003), ..Default::default() };
        let c = verify_determinantal(&model_p1(2, 2), 1, opts).unwrap();
        assert!(c.screen.as_ref().unwrap().verdicts.all_true());
        assert!(c.verdicts().all_true());
        let only = SecantOptions { screen_only: true, ..opts };
        let c = verify_determinantal(&model_p1(2, 2), 1, only).unwrap();
        assert!(c.confirm.is_none());
        assert!(!c.verdicts().all_true());
    }

    #[test]
    fn exhausted_budget_is_inconclusive() {
        let opts = SecantOptions { budget: Budget::pairs(1), ..Default::default() };
        let c = verify_determinantal(&model_p1(2, 2), 1, opts).unwrap();
        let v = c.verdicts();
        assert!(!v.all_true() && !v.any_false());
    }
}

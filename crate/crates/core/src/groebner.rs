//! Buchberger's algorithm and the ideal operations built on it.
//!
//! Pairs are selected by the normal strategy (least lcm degree, ties by the
//! monomial order on lcms, then by index). Useless pairs are discarded with the
//! Gebauer-Moeller installation of the coprime and chain criteria. The returned
//! basis is reduced, monic, and sorted by ascending leading monomial.

use std::sync::{Arc, Mutex, OnceLock};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::LinearSpan;
use crate::poly::{axpy_terms, ExpVec, MonomialOrder, Poly, PolyRing, Term};
use crate::scalar::{Scalar, ScalarMode};
use crate::text;

/// Resource limits for a Groebner computation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: Option<u64>,
    pub deadline: Option<(Instant, u64)>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn pairs(max_pairs: u64) -> Self {
        Budget { max_pairs: Some(max_pairs), deadline: None }
    }

    pub fn with_wall_clock(mut self, seconds: u64) -> Self {
        self.deadline = Some((Instant::now() + Duration::from_secs(seconds), seconds));
        self
    }

    fn check(&self, pairs_done: u64) -> Result<()> {
        if let Some(m) = self.max_pairs {
            if pairs_done > m {
                return Err(Error::BudgetExceeded { max_pairs: m });
            }
        }
        if let Some((at, seconds)) = self.deadline {
            if Instant::now() > at {
                return Err(Error::DeadlineExceeded { seconds });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GbStats {
    pub pairs_processed: u64,
    pub zero_reductions: u64,
    pub basis_size: usize,
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: ExpVec,
    deg: u32,
}

/// Division by a fixed list of monic polynomials.
pub(crate) struct Reducer<'a> {
    order: MonomialOrder,
    polys: Vec<&'a Poly>,
    lms: Vec<ExpVec>,
    masks: Vec<u64>,
}

impl<'a> Reducer<'a> {
    pub(crate) fn new(order: MonomialOrder, polys: impl IntoIterator<Item = &'a Poly>) -> Self {
        let polys: Vec<&Poly> = polys.into_iter().filter(|p| !p.is_zero()).collect();
        let lms: Vec<ExpVec> = polys.iter().map(|p| p.lm().unwrap().clone()).collect();
        let masks = lms.iter().map(|e| e.support_mask()).collect();
        Reducer { order, polys, lms, masks }
    }

    fn find(&self, e: &ExpVec, skip: Option<usize>) -> Option<usize> {
        let m = e.support_mask();
        (0..self.lms.len()).find(|&k| Some(k) != skip && self.masks[k] & !m == 0 && self.lms[k].divides(e))
    }

    /// Full reduction; the remainder has no term divisible by a leading monomial.
    pub(crate) fn reduce_terms(&self, f: Vec<Term>, skip: Option<usize>) -> Vec<Term> {
        let mut p = f;
        let mut start = 0;
        let mut rem = Vec::new();
        while start < p.len() {
            let (e, c) = &p[start];
            match self.find(e, skip) {
                Some(k) => {
                    let g = self.polys[k];
                    let m = e.div(&self.lms[k]);
                    let c = &-c / g.lc().unwrap();
                    p = axpy_terms(self.order, &p[start..], &c, &m, g.terms());
                    start = 0;
                }
                None => {
                    rem.push(p[start].clone());
                    start += 1;
                }
            }
        }
        rem
    }

    pub(crate) fn reduce(&self, f: &Poly) -> Poly {
        Poly::from_sorted_terms(f.ring(), self.reduce_terms(f.terms().to_vec(), None))
    }
}

struct Engine<'a> {
    ring: &'a PolyRing,
    order: MonomialOrder,
    budget: Budget,
    polys: Vec<Poly>,
    lms: Vec<ExpVec>,
    masks: Vec<u64>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    stats: GbStats,
}

impl<'a> Engine<'a> {
    fn new(ring: &'a PolyRing, budget: Budget) -> Self {
        Engine {
            ring,
            order: ring.order(),
            budget,
            polys: Vec::new(),
            lms: Vec::new(),
            masks: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            stats: GbStats::default(),
        }
    }

    fn reduce(&self, f: Vec<Term>) -> Vec<Term> {
        let mut p = f;
        let mut start = 0;
        let mut rem = Vec::new();
        while start < p.len() {
            let (e, c) = &p[start];
            let m = e.support_mask();
            let hit = self
                .active
                .iter()
                .copied()
                .find(|&k| self.masks[k] & !m == 0 && self.lms[k].divides(e));
            match hit {
                Some(k) => {
                    let g = &self.polys[k];
                    let shift = e.div(&self.lms[k]);
                    let c = -c;
                    p = axpy_terms(self.order, &p[start..], &c, &shift, g.terms());
                    start = 0;
                }
                None => {
                    rem.push(p[start].clone());
                    start += 1;
                }
            }
        }
        rem
    }

    fn add(&mut self, terms: Vec<Term>) {
        let p = Poly::from_sorted_terms(self.ring, terms).monic();
        let h = self.polys.len();
        let lm_h = p.lm().unwrap().clone();
        self.masks.push(lm_h.support_mask());
        self.lms.push(lm_h.clone());
        self.polys.push(p);

        // Gebauer-Moeller update
        let mut cands: Vec<(usize, ExpVec, bool)> = self
            .active
            .iter()
            .map(|&g| (g, self.lms[g].lcm(&lm_h), self.lms[g].is_coprime(&lm_h)))
            .collect();
        let mut kept: Vec<(usize, ExpVec, bool)> = Vec::new();
        while !cands.is_empty() {
            let p = cands.remove(0);
            let dominated = cands.iter().chain(kept.iter()).any(|q| q.1.divides(&p.1));
            if p.2 || !dominated {
                kept.push(p);
            }
        }
        let lms = &self.lms;
        self.pairs.retain(|pr| {
            !(lm_h.divides(&pr.lcm) && lms[pr.i].lcm(&lm_h) != pr.lcm && lms[pr.j].lcm(&lm_h) != pr.lcm)
        });
        for (g, lcm, coprime) in kept {
            if !coprime {
                let deg = lcm.degree();
                self.pairs.push(Pair { i: g, j: h, lcm, deg });
            }
        }
        self.active.retain(|&g| !lm_h.divides(&lms[g]));
        self.active.push(h);
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let ord = a
                .deg
                .cmp(&b.deg)
                .then_with(|| order.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)));
            if ord == std::cmp::Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, pr: &Pair) -> Vec<Term> {
        let one = self.ring.mode().one();
        let gi = &self.polys[pr.i];
        let gj = &self.polys[pr.j];
        let mi = pr.lcm.div(&self.lms[pr.i]);
        let mj = pr.lcm.div(&self.lms[pr.j]);
        let left = gi.mul_term(&one, &mi);
        let out = axpy_terms(self.order, left.terms(), &-&one, &mj, gj.terms());
        debug_assert!(out.first().is_none_or(|t| self.order.cmp(&t.0, &pr.lcm).is_lt()));
        out
    }

    /// Runs to completion, or up to `degree_bound` for homogeneous input.
    /// Returns whether every pair was processed.
    fn run(&mut self, gens: &[Poly], degree_bound: Option<u32>) -> Result<bool> {
        let mut sorted: Vec<&Poly> = gens.iter().filter(|g| !g.is_zero()).collect();
        sorted.sort_by(|a, b| {
            a.total_degree()
                .cmp(&b.total_degree())
                .then_with(|| self.order.cmp(a.lm().unwrap(), b.lm().unwrap()))
        });
        for g in sorted {
            if let Some(d) = degree_bound {
                if g.total_degree().unwrap() > d {
                    continue;
                }
            }
            let r = self.reduce(g.terms().to_vec());
            if !r.is_empty() {
                self.add(r);
            }
        }
        while let Some(pr) = self.select() {
            if let Some(d) = degree_bound {
                if pr.deg > d {
                    self.pairs.push(pr);
                    return Ok(false);
                }
            }
            self.stats.pairs_processed += 1;
            self.budget.check(self.stats.pairs_processed)?;
            let s = self.spoly(&pr);
            let r = self.reduce(s);
            if r.is_empty() {
                self.stats.zero_reductions += 1;
            } else {
                self.add(r);
            }
        }
        Ok(true)
    }

    fn reduced_basis(&self) -> Vec<Poly> {
        let act: Vec<&Poly> = self.active.iter().map(|&k| &self.polys[k]).collect();
        let red = Reducer::new(self.order, act.iter().copied());
        let mut out: Vec<Poly> = (0..act.len())
            .map(|k| {
                let p = act[k];
                let mut terms = vec![p.terms()[0].clone()];
                terms.extend(red.reduce_terms(p.terms()[1..].to_vec(), Some(k)));
                Poly::from_sorted_terms(self.ring, terms)
            })
            .collect();
        out.sort_by(|a, b| self.order.cmp(a.lm().unwrap(), b.lm().unwrap()));
        out
    }
}

/// Computes the reduced Groebner basis of `gens` (a full run).
pub fn groebner_basis(ring: &PolyRing, gens: &[Poly], budget: Budget) -> Result<(Vec<Poly>, GbStats)> {
    let mut eng = Engine::new(ring, budget);
    eng.run(gens, None)?;
    let basis = eng.reduced_basis();
    let mut stats = eng.stats.clone();
    stats.basis_size = basis.len();
    Ok((basis, stats))
}

#[derive(Debug)]
struct GbCache {
    basis: Vec<Poly>,
    stats: GbStats,
}

/// An ideal given by generators, with a lazily computed and cached Groebner basis.
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<Poly>,
    budget: Budget,
    gb: OnceLock<Arc<GbCache>>,
    truncated: Mutex<Option<(u32, Arc<Vec<Poly>>)>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(c) = self.gb.get() {
            let _ = gb.set(c.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            budget: self.budget,
            gb,
            truncated: Mutex::new(self.truncated.lock().unwrap().clone()),
        }
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Ideal").field("ring", &self.ring).field("gens", &self.gens).finish()
    }
}

impl Ideal {
    /// Ideal generated by `gens` in `ring`; zero generators are dropped.
    pub fn new(ring: &PolyRing, gens: Vec<Poly>) -> Result<Ideal> {
        for g in &gens {
            if g.ring().mode() != ring.mode() {
                return Err(Error::ModeMismatch);
            }
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
        }
        let mut seen = std::collections::HashSet::new();
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero() && seen.insert(g.clone())).collect();
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            budget: Budget::default(),
            gb: OnceLock::new(),
            truncated: Mutex::new(None),
        })
    }

    pub fn zero(ring: &PolyRing) -> Ideal {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn with_budget(mut self, budget: Budget) -> Ideal {
        self.budget = budget;
        self
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Poly::is_homogeneous)
    }

    fn seeded(ring: &PolyRing, basis: Vec<Poly>, stats: GbStats, budget: Budget) -> Ideal {
        let ideal = Ideal::new(ring, basis.clone()).unwrap().with_budget(budget);
        let _ = ideal.gb.set(Arc::new(GbCache { basis, stats }));
        ideal
    }

    /// Reduced monic Groebner basis, computed once and cached.
    pub fn groebner(&self) -> Result<&[Poly]> {
        if let Some(c) = self.gb.get() {
            return Ok(&c.basis);
        }
        let (basis, stats) = groebner_basis(&self.ring, &self.gens, self.budget)?;
        let _ = self.gb.set(Arc::new(GbCache { basis, stats }));
        Ok(&self.gb.get().unwrap().basis)
    }

    pub fn cached_gb(&self) -> Option<&[Poly]> {
        self.gb.get().map(|c| c.basis.as_slice())
    }

    pub fn gb_stats(&self) -> Option<GbStats> {
        self.gb.get().map(|c| c.stats.clone())
    }

    /// Basis valid for membership of homogeneous polynomials of degree <= `deg`.
    /// Requires homogeneous generators. Falls back to the full basis once it exists.
    pub fn truncated_gb(&self, deg: u32) -> Result<Arc<Vec<Poly>>> {
        if let Some(c) = self.gb.get() {
            return Ok(Arc::new(c.basis.clone()));
        }
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        {
            let cache = self.truncated.lock().unwrap();
            if let Some((d, b)) = cache.as_ref() {
                if *d >= deg {
                    return Ok(b.clone());
                }
            }
        }
        let mut eng = Engine::new(&self.ring, self.budget);
        let complete = eng.run(&self.gens, Some(deg))?;
        let basis = eng.reduced_basis();
        if complete {
            let mut stats = eng.stats.clone();
            stats.basis_size = basis.len();
            let _ = self.gb.set(Arc::new(GbCache { basis: basis.clone(), stats }));
        }
        let arc = Arc::new(basis);
        *self.truncated.lock().unwrap() = Some((deg, arc.clone()));
        Ok(arc)
    }

    fn check_poly(&self, f: &Poly) -> Result<()> {
        if f.ring().mode() != self.ring.mode() {
            return Err(Error::ModeMismatch);
        }
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Normal form with respect to the reduced Groebner basis (computed on demand).
    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        self.check_poly(f)?;
        let gb = self.groebner()?;
        Ok(Reducer::new(self.ring.order(), gb.iter()).reduce(f))
    }

    /// Normal form using only an already cached basis.
    pub fn normal_form_cached(&self, f: &Poly) -> Result<Poly> {
        self.check_poly(f)?;
        let gb = self.cached_gb().ok_or(Error::NoGb)?;
        Ok(Reducer::new(self.ring.order(), gb.iter()).reduce(f))
    }

    /// Membership test. Homogeneous queries against homogeneous ideals only
    /// need a basis truncated at the query degree.
    pub fn contains(&self, f: &Poly) -> Result<bool> {
        self.check_poly(f)?;
        if f.is_zero() {
            return Ok(true);
        }
        if self.gb.get().is_none() && self.is_homogeneous() && f.is_homogeneous() {
            let b = self.truncated_gb(f.total_degree().unwrap())?;
            return Ok(Reducer::new(self.ring.order(), b.iter()).reduce(f).is_zero());
        }
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_all(&self, polys: &[Poly]) -> Result<bool> {
        if polys.is_empty() {
            return Ok(true);
        }
        if self.gb.get().is_none() && self.is_homogeneous() && polys.iter().all(Poly::is_homogeneous) {
            let d = polys.iter().filter_map(Poly::total_degree).max().unwrap_or(0);
            self.truncated_gb(d)?;
        }
        for p in polys {
            if !self.contains(p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        self.contains_all(&other.gens)
    }

    /// Equality by mutual generator membership.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Ideal::new(&self.ring, gens)?.with_budget(self.budget))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.try_mul(g)?);
            }
        }
        Ok(Ideal::new(&self.ring, gens)?.with_budget(self.budget))
    }

    /// `I ∩ k[keep]` by a block order eliminating the other variables.
    /// The result lives in the same ring.
    pub fn eliminate(&self, keep: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        let mut is_kept = vec![false; n];
        for &k in keep {
            if k >= n {
                return Err(Error::InvalidArgument(format!("variable index {k} out of range")));
            }
            is_kept[k] = true;
        }
        let elim: Vec<usize> = (0..n).filter(|&i| !is_kept[i]).collect();
        let kept: Vec<usize> = (0..n).filter(|&i| is_kept[i]).collect();
        if elim.is_empty() {
            return Ok(self.clone());
        }
        let mut pos = vec![0usize; n];
        let mut names = Vec::with_capacity(n);
        for (p, &i) in elim.iter().chain(kept.iter()).enumerate() {
            pos[i] = p;
            names.push(self.ring.names()[i].clone());
        }
        let big = PolyRing::new(names, MonomialOrder::Block(elim.len()), self.ring.mode())?;
        let gens: Vec<Poly> = self.gens.iter().map(|g| g.reindex(&big, |i| pos[i])).collect();
        let (gb, stats) = groebner_basis(&big, &gens, self.budget)?;
        let nelim = elim.len();
        let out: Vec<Poly> = gb
            .iter()
            .filter(|g| g.terms().iter().all(|(e, _)| e.as_slice()[..nelim].iter().all(|&x| x == 0)))
            .map(|g| g.reindex(&self.ring, |p| kept[p - nelim]))
            .collect();
        let order_preserving = self.ring.order() == MonomialOrder::GrevLex;
        if order_preserving {
            let mut out = out;
            out.sort_by(|a, b| self.ring.order().cmp(a.lm().unwrap(), b.lm().unwrap()));
            let stats = GbStats { basis_size: out.len(), ..stats };
            Ok(Ideal::seeded(&self.ring, out, stats, self.budget))
        } else {
            Ok(Ideal::new(&self.ring, out)?.with_budget(self.budget))
        }
    }

    pub fn eliminate_named(&self, keep: &[&str]) -> Result<Ideal> {
        let idx = keep
            .iter()
            .map(|n| {
                self.ring
                    .var_index(n)
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown variable {n}")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.eliminate(&idx)
    }

    /// `I ∩ J` as `(t·I + (1-t)·J) ∩ k[x]`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring).with_budget(self.budget));
        }
        let mut tname = "l_0".to_string();
        let mut k = 0;
        while self.ring.var_index(&tname).is_some() {
            k += 1;
            tname = format!("l_{k}");
        }
        let n = self.ring.nvars();
        let mut names = vec![tname];
        names.extend(self.ring.names().iter().cloned());
        let big = PolyRing::new(names, self.ring.order(), self.ring.mode())?;
        let t = big.var(0);
        let one_minus_t = &big.one() - &t;
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(&t * &f.reindex(&big, |i| i + 1));
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.reindex(&big, |i| i + 1));
        }
        let big_ideal = Ideal::new(&big, gens)?.with_budget(self.budget);
        let keep: Vec<usize> = (1..=n).collect();
        let elim = big_ideal.eliminate(&keep)?;
        let out: Vec<Poly> = elim.gens().iter().map(|g| g.reindex(&self.ring, |i| i - 1)).collect();
        let stats = elim.gb_stats().unwrap_or_default();
        if self.ring.order() == MonomialOrder::GrevLex {
            Ok(Ideal::seeded(&self.ring, out, stats, self.budget))
        } else {
            Ok(Ideal::new(&self.ring, out)?.with_budget(self.budget))
        }
    }

    /// Moves generators (and a compatible cached basis) into another ring by variable name.
    pub fn to_ring(&self, target: &PolyRing) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.to_ring(target)).collect::<Result<Vec<_>>>()?;
        let compatible = self.ring.order() == MonomialOrder::GrevLex
            && target.order() == MonomialOrder::GrevLex
            && {
                let used: Vec<usize> = (0..self.ring.nvars())
                    .filter(|&i| self.gens.iter().any(|g| g.support_vars().contains(&i)))
                    .collect();
                let mapped: Vec<Option<usize>> =
                    used.iter().map(|&i| target.var_index(&self.ring.names()[i])).collect();
                mapped.windows(2).all(|w| w[0] < w[1])
            };
        match (self.gb.get(), compatible) {
            (Some(c), true) => {
                let basis = c.basis.iter().map(|g| g.to_ring(target)).collect::<Result<Vec<_>>>()?;
                let mut ideal = Ideal::new(target, gens)?.with_budget(self.budget);
                ideal.gb = OnceLock::new();
                let _ = ideal.gb.set(Arc::new(GbCache { basis, stats: c.stats.clone() }));
                Ok(ideal)
            }
            _ => Ok(Ideal::new(target, gens)?.with_budget(self.budget)),
        }
    }

    pub fn change_mode(&self, mode: ScalarMode) -> Result<Ideal> {
        let ring = self.ring.with_mode(mode);
        let gens = self.gens.iter().map(|g| g.change_mode(mode)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&ring, gens)?.with_budget(self.budget))
    }

    /// Basis of the degree-`e` piece, spanned by all `m·g` of degree `e`.
    pub fn graded_piece(&self, e: u32) -> Result<GradedPieceBasis> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let monomials = self.ring.monomials_of_degree(e);
        let mut span = LinearSpan::new(&self.ring);
        let one = self.ring.mode().one();
        let full = monomials.len();
        'outer: for g in &self.gens {
            let dg = g.total_degree().unwrap();
            if dg > e {
                continue;
            }
            for m in self.ring.monomials_of_degree(e - dg).iter().rev() {
                span.insert(&g.mul_term(&one, m));
                if span.dim() == full {
                    break 'outer;
                }
            }
        }
        Ok(GradedPieceBasis::from_span(e, monomials, &span))
    }

    /// Canonical content hash of the generators.
    pub fn gens_hash(&self) -> String {
        text::content_hash(&self.ring, &self.gens)
    }

    /// Content hash of the reduced Groebner basis.
    pub fn gb_hash(&self) -> Result<String> {
        Ok(text::content_hash(&self.ring, self.groebner()?))
    }
}

/// Row-reduced basis of a graded piece `I_e`, as coefficient rows over the
/// ambient degree-`e` monomials.
#[derive(Debug, Clone)]
pub struct GradedPieceBasis {
    pub degree: u32,
    pub monomials: Vec<ExpVec>,
    pub vectors: Vec<Vec<Scalar>>,
    polys: Vec<Poly>,
}

impl GradedPieceBasis {
    fn from_span(degree: u32, monomials: Vec<ExpVec>, span: &LinearSpan) -> Self {
        let polys = span.rref();
        let vectors = polys.iter().map(|p| monomials.iter().map(|m| p.coeff(m)).collect()).collect();
        GradedPieceBasis { degree, monomials, vectors, polys }
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Basis rows expanded back into polynomials.
    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }
}

/// Returns `I` with its reduced Groebner basis cached.
pub fn buchberger(ideal: &Ideal, max_pairs: Option<u64>) -> Result<Ideal> {
    let budget = Budget { max_pairs, ..ideal.budget };
    let out = ideal.clone().with_budget(budget);
    out.groebner()?;
    Ok(out)
}

pub fn normal_form(f: &Poly, ideal: &Ideal) -> Result<Poly> {
    ideal.normal_form(f)
}

pub fn ideal_member(f: &Poly, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    a.equals(b)
}

pub fn ideal_intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.intersect(b)
}

pub fn eliminate(ideal: &Ideal, keep: &[usize]) -> Result<Ideal> {
    ideal.eliminate(keep)
}

pub fn graded_piece(ideal: &Ideal, e: u32) -> Result<GradedPieceBasis> {
    ideal.graded_piece(e)
}

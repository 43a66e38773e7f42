//! Point-configuration rings `k[x_i_j]` (coordinate `i` of point `j`) with the
//! column action of the symmetric group, twisted projectors, alternating
//! polynomials, the ideal `J_d` they generate, and the big-diagonal ideal.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{Budget, Ideal};
use crate::linalg::LinearSpan;
use crate::par;
use crate::poly::{ExpVec, Poly, PolyRing};
use crate::scalar::ScalarMode;
use crate::text::content_hash;

/// A permutation of `{0, .., d-1}` stored by images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(d: usize) -> Perm {
        Perm((0..d).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// Cycle given in 1-based notation, e.g. `[1, 2, 3]` for (123).
    pub fn cycle(d: usize, cycle: &[usize]) -> Result<Perm> {
        let mut img: Vec<usize> = (0..d).collect();
        for (k, &a) in cycle.iter().enumerate() {
            let b = cycle[(k + 1) % cycle.len()];
            if a == 0 || a > d || b == 0 || b > d {
                return Err(Error::InvalidArgument("cycle entry out of range".into()));
            }
            img[a - 1] = b - 1;
        }
        Perm::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, j: usize) -> usize {
        self.0[j]
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&j| self.0[j]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (j, &s) in self.0.iter().enumerate() {
            inv[s] = j;
        }
        Perm(inv)
    }

    /// +1 or -1.
    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.0.len()];
        let mut transpositions = 0;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j];
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All `d!` permutations in lexicographic order of their image lists.
    pub fn all(d: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..d).collect();
        loop {
            out.push(Perm(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..d).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..d).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

/// `k[x_i_j]` for `1 <= i <= n` coordinates and `1 <= j <= d` points.
#[derive(Debug, Clone)]
pub struct ConfigRing {
    n: usize,
    d: usize,
    ring: PolyRing,
}

impl ConfigRing {
    pub fn new(n: usize, d: usize, mode: ScalarMode) -> Result<ConfigRing> {
        if n == 0 || d == 0 {
            return Err(Error::InvalidArgument("n and d must be positive".into()));
        }
        let names = (1..=n).flat_map(|i| (1..=d).map(move |j| format!("x_{i}_{j}")));
        Ok(ConfigRing { n, d, ring: PolyRing::grevlex(names, mode)? })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// Variable index of `x_i_j` (both 1-based).
    pub fn index(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.d + (j - 1)
    }

    pub fn var(&self, i: usize, j: usize) -> Poly {
        self.ring.var(self.index(i, j))
    }

    fn permute_exp(&self, sigma: &Perm, e: &ExpVec) -> ExpVec {
        let d = self.d;
        e.map_indices(e.len(), |k| (k / d) * d + sigma.apply(k % d))
    }

    /// Column action `x_i_j -> x_i_σ(j)`.
    pub fn act(&self, sigma: &Perm, f: &Poly) -> Result<Poly> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if sigma.degree() != self.d {
            return Err(Error::InvalidArgument("permutation degree differs from d".into()));
        }
        Ok(self.ring.from_terms(f.terms().iter().map(|(e, c)| (self.permute_exp(sigma, e), c.clone()))))
    }

    fn column(&self, e: &ExpVec, j: usize) -> Vec<u16> {
        (0..self.n).map(|i| e[i * self.d + j]).collect()
    }

    /// Orbit representative test: columns in non-increasing lexicographic order.
    fn is_orbit_rep(&self, e: &ExpVec) -> bool {
        (1..self.d).all(|j| self.column(e, j - 1) >= self.column(e, j))
    }

    fn has_distinct_columns(&self, e: &ExpVec) -> bool {
        (1..self.d).all(|j| self.column(e, j - 1) != self.column(e, j))
    }

    fn orbit_reps(&self, deg: u32, distinct: bool) -> Vec<ExpVec> {
        self.ring
            .monomials_of_degree(deg)
            .into_iter()
            .filter(|e| self.is_orbit_rep(e) && (!distinct || self.has_distinct_columns(e)))
            .collect()
    }

    /// Dimension of the degree-`deg` part of `(k[x] ⊗ ε^twist)^{S_d}`, by orbit counting.
    pub fn isotypic_dim(&self, deg: u32, twist: i64) -> usize {
        self.orbit_reps(deg, twist.rem_euclid(2) == 1).len()
    }

    /// Least degree carrying a nonzero alternating polynomial.
    pub fn min_alternating_degree(&self) -> u32 {
        (0..).find(|&e| !self.orbit_reps(e, true).is_empty()).unwrap()
    }
}

/// The projector `f -> (1/d!) Σ_σ ε(σ)^twist σ(f)`.
#[derive(Debug, Clone)]
pub struct TwistedProjector {
    config: ConfigRing,
    twist: i64,
    perms: Vec<(Perm, i64)>,
}

impl TwistedProjector {
    pub fn new(config: &ConfigRing, twist: i64) -> Result<Self> {
        if let ScalarMode::PrimeField(p) = config.ring.mode() {
            if p as usize <= config.d {
                return Err(Error::ModeUnsupported(format!("F_{p} cannot divide by {}!", config.d)));
            }
        }
        let odd = twist.rem_euclid(2) == 1;
        let perms = Perm::all(config.d)
            .into_iter()
            .map(|s| {
                let sg = if odd { s.sign() } else { 1 };
                (s, sg)
            })
            .collect();
        Ok(TwistedProjector { config: config.clone(), twist, perms })
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn config(&self) -> &ConfigRing {
        &self.config
    }

    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        if f.ring() != &self.config.ring {
            return Err(Error::RingMismatch);
        }
        let mode = self.config.ring.mode();
        let mut coeffs: HashMap<ExpVec, crate::scalar::Scalar> = HashMap::new();
        // Accumulate signed images; coefficients combine exactly afterwards.
        for (e, c) in f.terms() {
            for (s, sg) in &self.perms {
                let pe = self.config.permute_exp(s, e);
                let term = if *sg == 1 { c.clone() } else { -c };
                match coeffs.get_mut(&pe) {
                    Some(v) => *v = &*v + &term,
                    None => {
                        coeffs.insert(pe, term);
                    }
                }
            }
        }
        let fact = mode.from_i64(self.perms.len() as i64).inv().unwrap();
        Ok(self.config.ring.from_terms(coeffs.into_iter().map(|(e, c)| (e, &c * &fact))))
    }
}

/// Twisted projection of `f`.
pub fn project(f: &Poly, projector: &TwistedProjector) -> Result<Poly> {
    projector.apply(f)
}

/// Degreewise bases of the alternating polynomials up to a maximal degree.
#[derive(Debug, Clone)]
pub struct AlternatingFamily {
    pub config: ConfigRing,
    pub max_degree: u32,
    /// `(degree, member)` pairs in increasing degree.
    pub members: Vec<(u32, Poly)>,
}

impl AlternatingFamily {
    pub fn polys(&self) -> Vec<Poly> {
        self.members.iter().map(|(_, p)| p.clone()).collect()
    }

    pub fn of_degree(&self, e: u32) -> Vec<Poly> {
        self.members.iter().filter(|(d, _)| *d == e).map(|(_, p)| p.clone()).collect()
    }
}

/// Alternating basis of a single degree: one signed orbit sum per monomial orbit with
/// pairwise distinct columns. Orbits have disjoint supports, so the members are
/// independent and already in reduced echelon form.
pub fn alternating_basis(cfg: &ConfigRing, e: u32) -> Result<Vec<Poly>> {
    let proj = TwistedProjector::new(cfg, 1)?;
    let reps = cfg.orbit_reps(e, true);
    let one = cfg.ring.mode().one();
    par::try_map(&reps, |m| Ok(proj.apply(&cfg.ring.monomial(m.clone(), one.clone()))?.monic()))
}

pub fn alternating_family(cfg: &ConfigRing, max_degree: u32) -> Result<AlternatingFamily> {
    let mut members = Vec::new();
    for e in 0..=max_degree {
        for p in alternating_basis(cfg, e)? {
            members.push((e, p));
        }
    }
    Ok(AlternatingFamily { config: cfg.clone(), max_degree, members })
}

/// `J_d^{(D)}`: the ideal generated by alternating polynomials of degree `<= D`.
pub fn ideal_jd(cfg: &ConfigRing, max_degree: u32) -> Result<Ideal> {
    let fam = alternating_family(cfg, max_degree)?;
    Ideal::new(&cfg.ring, fam.polys())
}

/// Linear ideal of the pairwise diagonal `{point a = point b}` (1-based points).
pub fn pair_diagonal_ideal(cfg: &ConfigRing, a: usize, b: usize) -> Result<Ideal> {
    let gens = (1..=cfg.n).map(|i| &cfg.var(i, a) - &cfg.var(i, b)).collect();
    Ideal::new(&cfg.ring, gens)
}

/// `I(Δ_d)` as the intersection of all pairwise diagonal ideals.
pub fn diagonal_ideal(cfg: &ConfigRing, budget: Budget) -> Result<Ideal> {
    let mut acc: Option<Ideal> = None;
    for a in 1..=cfg.d {
        for b in a + 1..=cfg.d {
            let lin = pair_diagonal_ideal(cfg, a, b)?.with_budget(budget);
            acc = Some(match acc {
                None => lin,
                Some(i) => i.intersect(&lin)?,
            });
        }
    }
    // d = 1: the diagonal is empty
    Ok(acc.unwrap_or_else(|| Ideal::new(&cfg.ring, vec![cfg.ring.one()]).unwrap()).with_budget(budget))
}

/// Substitution `x_i_b -> x_i_a` restricting to the pairwise diagonal.
pub fn restrict_to_pair_diagonal(cfg: &ConfigRing, f: &Poly, a: usize, b: usize) -> Result<Poly> {
    let images: Vec<Poly> = (1..=cfg.n)
        .flat_map(|i| (1..=cfg.d).map(move |j| (i, j)))
        .map(|(i, j)| if j == b { cfg.var(i, a) } else { cfg.var(i, j) })
        .collect();
    f.apply_ring_map(&images)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Success { witness_degree: u32 },
    Inconclusive { reason: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct TruncationCheck {
    pub truncation: u32,
    pub generators: usize,
    /// Every generator of the truncation lies in `I(Δ_d)`.
    pub contained: bool,
    pub equal: bool,
    pub truncation_hash: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiagonalCertificate {
    pub n: usize,
    pub d: usize,
    pub dmax: u32,
    pub min_alternating_degree: Option<u32>,
    pub diagonal_generators: usize,
    pub diagonal_hash: Option<String>,
    pub diagonal_gb_hash: Option<String>,
    pub checks: Vec<TruncationCheck>,
    /// Containment `J_d^{(D)} ⊆ I(Δ_d)` held at every computed truncation.
    pub containment: bool,
    pub outcome: Outcome,
}

/// Default escalation cap for truncations.
pub fn default_dmax(cfg: &ConfigRing) -> u32 {
    (cfg.n * cfg.d + 3) as u32
}

/// Escalates `D` and tests `J_d^{(D)} = I(Δ_d)`. Success certifies `J_d = I(Δ_d)`
/// since `J_d^{(D)} ⊆ J_d ⊆ I(Δ_d)`.
pub fn verify_jd_equals_diagonal(cfg: &ConfigRing, dmax: u32, budget: Budget) -> Result<DiagonalCertificate> {
    let mut cert = DiagonalCertificate {
        n: cfg.n,
        d: cfg.d,
        dmax,
        min_alternating_degree: None,
        diagonal_generators: 0,
        diagonal_hash: None,
        diagonal_gb_hash: None,
        checks: Vec::new(),
        containment: true,
        outcome: Outcome::Inconclusive { reason: String::new() },
    };
    let diag = match diagonal_ideal(cfg, budget) {
        Ok(i) => i,
        Err(e) if e.is_budget() => {
            cert.outcome = Outcome::Inconclusive { reason: format!("diagonal ideal: {e}") };
            return Ok(cert);
        }
        Err(e) => return Err(e),
    };
    cert.diagonal_generators = diag.gens().len();
    cert.diagonal_hash = Some(diag.gens_hash());
    cert.diagonal_gb_hash = diag.cached_gb().map(|gb| content_hash(cfg.ring(), gb));
    let top = diag.gens().iter().filter_map(Poly::total_degree).max().unwrap_or(0);
    let min_deg = cfg.min_alternating_degree();
    cert.min_alternating_degree = Some(min_deg);
    let mut members: Vec<Poly> = Vec::new();
    for e in 0..min_deg {
        debug_assert!(alternating_basis(cfg, e)?.is_empty());
    }
    let stop = dmax.min(top.max(min_deg));
    for dd in min_deg..=stop {
        let fresh = alternating_basis(cfg, dd)?;
        members.extend(fresh.iter().cloned());
        let jd = Ideal::new(cfg.ring(), members.clone())?.with_budget(budget);
        let step = (|| -> Result<(bool, bool)> {
            let contained = diag.contains_all(&fresh)?;
            let equal = contained && jd.contains_all(diag.gens())?;
            Ok((contained, equal))
        })();
        let (contained, equal) = match step {
            Ok(v) => v,
            Err(e) if e.is_budget() => {
                cert.outcome = Outcome::Inconclusive { reason: format!("truncation D={dd}: {e}") };
                return Ok(cert);
            }
            Err(e) => return Err(e),
        };
        cert.containment &= contained;
        cert.checks.push(TruncationCheck {
            truncation: dd,
            generators: members.len(),
            contained,
            equal,
            truncation_hash: jd.gens_hash(),
        });
        if equal {
            cert.outcome = Outcome::Success { witness_degree: dd };
            return Ok(cert);
        }
    }
    let reason = if stop < dmax {
        format!(
            "no equality up to D={stop}; truncations above D={stop} agree with J^({stop}) in all degrees <= {top}, \
             the top generator degree of I(Delta)"
        )
    } else {
        format!("no equality up to Dmax={dmax}")
    };
    cert.outcome = Outcome::Inconclusive { reason };
    Ok(cert)
}

/// The product `(x_a_1 - x_a_2)(x_b_1 - x_b_3)(x_c_2 - x_c_3)` in a 3-point ring.
pub fn triple_product(cfg: &ConfigRing, a: usize, b: usize, c: usize) -> Poly {
    let f1 = &cfg.var(a, 1) - &cfg.var(a, 2);
    let f2 = &cfg.var(b, 1) - &cfg.var(b, 3);
    let f3 = &cfg.var(c, 2) - &cfg.var(c, 3);
    &(&f1 * &f2) * &f3
}

#[derive(Debug, Clone, Serialize)]
pub struct TripleResult {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    /// Least truncation containing the product, if any up to the cap.
    pub witness_degree: Option<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProductTripleCertificate {
    pub n: usize,
    pub dmax: u32,
    pub triples: Vec<TripleResult>,
    pub all_members: bool,
    pub truncation_hashes: Vec<(u32, String)>,
    pub inconclusive_reason: Option<String>,
}

/// Membership of every triple product in escalating truncations `J_3^{(D)}`, `D <= dmax`.
pub fn verify_product_triple(cfg: &ConfigRing, dmax: u32, budget: Budget) -> Result<ProductTripleCertificate> {
    if cfg.d != 3 {
        return Err(Error::InvalidArgument("product triples need d = 3".into()));
    }
    let n = cfg.n;
    let idx: Vec<(usize, usize, usize)> = (1..=n)
        .flat_map(|a| (1..=n).flat_map(move |b| (1..=n).map(move |c| (a, b, c))))
        .collect();
    let prods: Vec<Poly> = idx.iter().map(|&(a, b, c)| triple_product(cfg, a, b, c)).collect();
    let mut witness: Vec<Option<u32>> = vec![None; idx.len()];
    let mut hashes = Vec::new();
    let mut members = Vec::new();
    let mut reason = None;
    for dd in cfg.min_alternating_degree()..=dmax {
        members.extend(alternating_basis(cfg, dd)?);
        let jd = Ideal::new(cfg.ring(), members.clone())?.with_budget(budget);
        hashes.push((dd, jd.gens_hash()));
        if let Err(e) = jd.truncated_gb(3) {
            if e.is_budget() {
                reason = Some(format!("truncation D={dd}: {e}"));
                break;
            }
            return Err(e);
        }
        let pending: Vec<usize> = (0..idx.len()).filter(|&k| witness[k].is_none()).collect();
        let hits = par::try_map(&pending, |&k| jd.contains(&prods[k]))?;
        for (k, hit) in pending.into_iter().zip(hits) {
            if hit {
                witness[k] = Some(dd);
            }
        }
        if witness.iter().all(Option::is_some) {
            break;
        }
    }
    let triples: Vec<TripleResult> = idx
        .iter()
        .zip(&witness)
        .map(|(&(a, b, c), w)| TripleResult { a, b, c, witness_degree: *w })
        .collect();
    let all_members = triples.iter().all(|t| t.witness_degree.is_some());
    Ok(ProductTripleCertificate { n, dmax, triples, all_members, truncation_hashes: hashes, inconclusive_reason: reason })
}

#[derive(Debug, Clone, Serialize)]
pub struct MapPolyDegree {
    pub degree: u32,
    pub truncation: u32,
    /// Content hash of the echelon basis of the product span.
    pub products_hash: String,
    pub power_hash: String,
    pub lower_power_hash: String,
    /// Span of `ℓ`-fold products of alternating polynomials.
    pub dim_products: usize,
    /// Twisted projection of `(J^ℓ)_e`.
    pub dim_power: usize,
    /// Twisted projection of `(J^{ℓ-1})_e`.
    pub dim_lower_power: usize,
    pub products_equal_power: bool,
    pub power_equal_lower_power: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct MapPolyCertificate {
    pub n: usize,
    pub d: usize,
    pub ell: u32,
    pub emax: u32,
    pub degrees: Vec<MapPolyDegree>,
    pub holds: bool,
}

/// Multisets of `parts` nondecreasing degrees from `degs` summing to at most `total`.
fn degree_tuples(degs: &[u32], parts: u32, total: u32) -> Vec<Vec<u32>> {
    fn rec(degs: &[u32], from: usize, parts: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 0 {
            out.push(cur.clone());
            return;
        }
        for k in from..degs.len() {
            if degs[k] * parts > left {
                break;
            }
            cur.push(degs[k]);
            rec(degs, k, parts - 1, left - degs[k], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(degs, 0, parts, total, &mut Vec::new(), &mut out);
    out
}

/// All products `a_1 ⋯ a_k` of alternating basis elements with the given degrees
/// (unordered selection with repetition within equal degrees).
fn basis_products(alt: &HashMap<u32, Vec<Poly>>, degs: &[u32], ring: &PolyRing) -> Vec<Poly> {
    let mut acc: Vec<(Poly, usize, u32)> = vec![(ring.one(), 0, u32::MAX)];
    for &dg in degs {
        let basis = &alt[&dg];
        let mut next = Vec::new();
        for (p, last_idx, last_deg) in &acc {
            let start = if *last_deg == dg { *last_idx } else { 0 };
            for (k, b) in basis.iter().enumerate().skip(start) {
                next.push((p * b, k, dg));
            }
        }
        acc = next;
    }
    acc.into_iter().map(|(p, _, _)| p).collect()
}

/// Degreewise check of `Im m^ℓ = π_ℓ(J^ℓ) = π_ℓ(J^{ℓ-1})` up to degree `emax`.
/// In degree `e` the truncation `J^{(e)}` is used, which agrees with `J` there.
pub fn verify_mappoly(cfg: &ConfigRing, ell: u32, emax: u32) -> Result<MapPolyCertificate> {
    if ell == 0 {
        return Err(Error::InvalidArgument("ell must be at least 1".into()));
    }
    let ring = cfg.ring().clone();
    let proj = TwistedProjector::new(cfg, ell as i64)?;
    let min_deg = cfg.min_alternating_degree();
    let mut alt: HashMap<u32, Vec<Poly>> = HashMap::new();
    let mut alt_degs = Vec::new();
    for e in min_deg..=emax {
        let b = alternating_basis(cfg, e)?;
        if !b.is_empty() {
            alt_degs.push(e);
        }
        alt.insert(e, b);
    }
    let one = ring.mode().one();
    let degrees = par::try_map(&(0..=emax).collect::<Vec<u32>>(), |&e| -> Result<MapPolyDegree> {
        let cap = cfg.isotypic_dim(e, ell as i64);
        // products of exactly ℓ alternating polynomials of total degree e
        let mut products = LinearSpan::new(&ring);
        for degs in degree_tuples(&alt_degs, ell, e) {
            if degs.iter().sum::<u32>() != e {
                continue;
            }
            for p in basis_products(&alt, &degs, &ring) {
                products.insert(&p);
            }
        }
        let projected_power = |k: u32| -> Result<LinearSpan> {
            let mut span = LinearSpan::new(&ring);
            for degs in degree_tuples(&alt_degs, k, e) {
                let rest = e - degs.iter().sum::<u32>();
                for g in basis_products(&alt, &degs, &ring) {
                    for m in ring.monomials_of_degree(rest) {
                        if span.dim() == cap {
                            return Ok(span);
                        }
                        span.insert(&proj.apply(&g.mul_term(&one, &m))?);
                    }
                }
            }
            Ok(span)
        };
        let power = projected_power(ell)?;
        let lower = projected_power(ell - 1)?;
        Ok(MapPolyDegree {
            degree: e,
            truncation: e,
            products_hash: content_hash(&ring, &products.rref()),
            power_hash: content_hash(&ring, &power.rref()),
            lower_power_hash: content_hash(&ring, &lower.rref()),
            dim_products: products.dim(),
            dim_power: power.dim(),
            dim_lower_power: lower.dim(),
            products_equal_power: products.same_span(&power),
            power_equal_lower_power: power.same_span(&lower),
        })
    })?;
    let holds = degrees.iter().all(|d| d.products_equal_power && d.power_equal_lower_power);
    Ok(MapPolyCertificate { n: cfg.n, d: cfg.d, ell, emax, degrees, holds })
}

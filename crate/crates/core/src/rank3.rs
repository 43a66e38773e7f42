//! Quadric ranks, the Grassmannian family `q_W`, the two rank-3 expansion
//! identities for symmetric catalecticants, restriction along linear sections,
//! and span/generation certificates for rank-3 presentations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{Budget, Ideal};
use crate::linalg::{self, LinearSpan};
use crate::par;
use crate::poly::{ExpVec, Poly, PolyRing};
use crate::scalar::{Scalar, ScalarMode};
use crate::sections::{build_catalecticant, model_p1, model_veronese, variety_ideal, CatalecticantMatrix, SectionModel};
use crate::text::content_hash;
use crate::verdict::Verdict;

/// The quadric `zᵀ M z` with `M` symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadForm {
    ring: PolyRing,
    matrix: Vec<Vec<Scalar>>,
}

impl QuadForm {
    pub fn new(ring: &PolyRing, matrix: Vec<Vec<Scalar>>) -> Result<QuadForm> {
        let n = ring.nvars();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument(format!("matrix must be {n}x{n}")));
        }
        if (0..n).any(|i| (0..i).any(|j| matrix[i][j] != matrix[j][i])) {
            return Err(Error::InvalidArgument("matrix is not symmetric".into()));
        }
        Ok(QuadForm { ring: ring.clone(), matrix })
    }

    pub fn zero(ring: &PolyRing) -> QuadForm {
        let n = ring.nvars();
        QuadForm { ring: ring.clone(), matrix: vec![vec![ring.mode().zero(); n]; n] }
    }

    /// Gram matrix of a quadratic form; off-diagonal coefficients are halved.
    pub fn from_poly(f: &Poly) -> Result<QuadForm> {
        let ring = f.ring();
        if ring.mode().characteristic() == 2 {
            return Err(Error::ModeUnsupported("characteristic 2".into()));
        }
        if !f.is_zero() && (!f.is_homogeneous() || f.total_degree() != Some(2)) {
            return Err(Error::InvalidArgument(format!("{f} is not a quadratic form")));
        }
        let mut q = QuadForm::zero(ring);
        let half = ring.mode().from_i64(2).inv().unwrap();
        for (e, c) in f.terms() {
            let idx: Vec<usize> = e.as_slice().iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, _)| i).collect();
            match idx[..] {
                [i] => q.matrix[i][i] = c.clone(),
                [i, j] => {
                    let h = c * &half;
                    q.matrix[i][j] = h.clone();
                    q.matrix[j][i] = h;
                }
                _ => unreachable!(),
            }
        }
        Ok(q)
    }

    /// `Σ c_t (v_t · z)^2`.
    pub fn from_weighted_squares(ring: &PolyRing, squares: &[(Scalar, Vec<Scalar>)]) -> QuadForm {
        let mut q = QuadForm::zero(ring);
        for (c, v) in squares {
            q.add_outer(c, v, v);
        }
        q
    }

    /// Adds `c · sym(u vᵀ)`.
    fn add_outer(&mut self, c: &Scalar, u: &[Scalar], v: &[Scalar]) {
        let n = self.matrix.len();
        let half = self.ring.mode().from_i64(2).inv().unwrap();
        let ch = c * &half;
        for i in 0..n {
            for j in 0..n {
                let t = &(&u[i] * &v[j]) + &(&u[j] * &v[i]);
                if !t.is_zero() {
                    self.matrix[i][j] = &self.matrix[i][j] + &(&ch * &t);
                }
            }
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(Scalar::is_zero)
    }

    pub fn to_poly(&self) -> Poly {
        let n = self.matrix.len();
        let two = self.ring.mode().from_i64(2);
        let mut terms = Vec::new();
        for i in 0..n {
            for j in i..n {
                let c = &self.matrix[i][j];
                if c.is_zero() {
                    continue;
                }
                let mut e = vec![0u16; n];
                e[i] += 1;
                e[j] += 1;
                terms.push((ExpVec::from_slice(&e), if i == j { c.clone() } else { &two * c }));
            }
        }
        self.ring.from_terms(terms)
    }

    /// `Aᵀ M A` for `A` of shape (this dim) × (target dim).
    pub fn pullback(&self, a: &[Vec<Scalar>], target: &PolyRing) -> Result<QuadForm> {
        let (n, m) = (self.matrix.len(), target.nvars());
        if a.len() != n || a.iter().any(|r| r.len() != m) {
            return Err(Error::ArityMismatch { expected: n * m, got: a.iter().map(Vec::len).sum() });
        }
        let zero = target.mode().zero();
        let ma: Vec<Vec<Scalar>> = (0..n)
            .map(|i| (0..m).map(|j| (0..n).fold(zero.clone(), |acc, k| &acc + &(&self.matrix[i][k] * &a[k][j]))).collect())
            .collect();
        let out = (0..m)
            .map(|i| (0..m).map(|j| (0..n).fold(zero.clone(), |acc, k| &acc + &(&a[k][i] * &ma[k][j]))).collect())
            .collect();
        QuadForm::new(target, out)
    }
}

pub fn quad_rank(q: &QuadForm) -> usize {
    linalg::rank(&q.matrix)
}

/// Where a family member came from.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MemberOrigin {
    GrassmannPair { sigma0: Vec<String>, sigma1: Vec<String> },
    RemarkIdentity { case: u8, indices: Vec<usize> },
    Restriction { parent: Box<MemberOrigin> },
    Pushforward { alpha: Vec<String>, parent: Box<MemberOrigin> },
}

#[derive(Debug, Clone)]
pub struct Rank3Member {
    pub quad: QuadForm,
    pub rank: usize,
    pub origin: MemberOrigin,
}

#[derive(Debug, Clone)]
pub struct Rank3Family {
    pub ring: PolyRing,
    pub members: Vec<Rank3Member>,
}

impl Rank3Family {
    pub fn new(ring: &PolyRing) -> Self {
        Rank3Family { ring: ring.clone(), members: Vec::new() }
    }

    /// Adds a nonzero quadric; rejects ranks above 3.
    pub fn push(&mut self, quad: QuadForm, origin: MemberOrigin) -> Result<bool> {
        if quad.is_zero() {
            return Ok(false);
        }
        let rank = quad_rank(&quad);
        if rank > 3 {
            return Err(Error::NotSumOfSquares { rank });
        }
        self.members.push(Rank3Member { quad, rank, origin });
        Ok(true)
    }

    pub fn polys(&self) -> Vec<Poly> {
        self.members.iter().map(|m| m.quad.to_poly()).collect()
    }

    pub fn max_rank(&self) -> usize {
        self.members.iter().map(|m| m.rank).max().unwrap_or(0)
    }

    pub fn span(&self) -> LinearSpan {
        LinearSpan::from_polys(&self.ring, self.polys().iter())
    }
}

fn vec_labels(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

/// The section `α·β` of `L` as a coefficient vector over the L-basis.
pub fn product_section(model: &SectionModel, alpha: &[Scalar], beta: &[Scalar]) -> Result<Vec<Scalar>> {
    if alpha.len() != model.dim_a() || beta.len() != model.dim_b() {
        return Err(Error::ArityMismatch { expected: model.dim_a() + model.dim_b(), got: alpha.len() + beta.len() });
    }
    let mode = alpha.first().map_or(ScalarMode::Rational, Scalar::mode);
    let mut out = vec![mode.zero(); model.dim_l()];
    for (i, a) in alpha.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in beta.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let ab = a * b;
            for (g, c) in &model.mult[i][j] {
                out[*g] = &out[*g] + &(&ab * c);
            }
        }
    }
    Ok(out)
}

/// `q_W = x_0 x_2 - x_1^2` with `x_0 = σ0²`, `x_1 = σ0σ1`, `x_2 = σ1²` in the
/// z-coordinates of a self-paired model.
pub fn grassmann_quadric(model: &SectionModel, sigma0: &[Scalar], sigma1: &[Scalar]) -> Result<QuadForm> {
    if !model.is_self_paired() {
        return Err(Error::InvalidArgument("grassmann quadrics need a self-paired model".into()));
    }
    if linalg::rank(&[sigma0.to_vec(), sigma1.to_vec()]) < 2 {
        return Err(Error::DependentSections);
    }
    let x0 = product_section(model, sigma0, sigma0)?;
    let x1 = product_section(model, sigma0, sigma1)?;
    let x2 = product_section(model, sigma1, sigma1)?;
    let ring = crate::sections::z_ring(model.dim_l(), ScalarMode::Rational);
    let mut q = QuadForm::zero(&ring);
    let one = ring.mode().one();
    q.add_outer(&one, &x0, &x2);
    q.add_outer(&-&one, &x1, &x1);
    Ok(q)
}

#[derive(Debug, Clone)]
pub struct RemarkExpansion {
    pub case: u8,
    pub indices: Vec<usize>,
    /// The 2×2 minor being expanded.
    pub target: Poly,
    pub summands: Vec<(Scalar, QuadForm)>,
    /// `target - Σ c_t summand_t` expands to zero.
    pub exact: bool,
}

impl RemarkExpansion {
    pub fn max_rank(&self) -> usize {
        self.summands.iter().map(|(_, q)| quad_rank(q)).max().unwrap_or(0)
    }
}

/// Rank-≤3 expansions of `m_ii m_kk - m_ik²` (case 1, indices `[i, k]`) and of
/// `m_ii m_kl - m_il m_ki` (case 2, indices `[i, k, l]`, pairwise distinct).
pub fn remark_identity(cat: &CatalecticantMatrix, case: u8, indices: &[usize]) -> Result<RemarkExpansion> {
    if !cat.is_symmetric() {
        return Err(Error::CaseMismatch("matrix is not symmetric".into()));
    }
    let n = cat.nrows();
    if indices.iter().any(|&i| i >= n) {
        return Err(Error::CaseMismatch(format!("index out of range for {n}x{n}")));
    }
    let m = |a: usize, b: usize| &cat.entries[a][b];
    let ring = &cat.ring;
    let mode = ring.mode();
    let half = mode.from_ratio(1, 2)?;
    let (target, summands): (Poly, Vec<(Scalar, Poly)>) = match (case, indices) {
        (1, &[i, k]) if i != k => {
            let t = &(m(i, i) * m(k, k)) - &(m(i, k) * m(i, k));
            (t.clone(), vec![(mode.one(), t)])
        }
        (2, &[i, k, l]) if i != k && i != l && k != l => {
            let t = &(m(i, i) * m(k, l)) - &(m(i, l) * m(k, i));
            let s1 = &(m(i, i) * m(k, k)) - &(m(i, k) * m(i, k));
            let s2 = &(m(i, i) * m(l, l)) - &(m(i, l) * m(i, l));
            let d = m(i, k) - m(i, l);
            let two_kl = &ring.constant_i64(2) * m(k, l);
            let inner = &(&two_kl - m(k, k)) - m(l, l);
            let s3 = &(&d * &d) + &(m(i, i) * &inner);
            (t, vec![(half.clone(), s1), (half.clone(), s2), (half, s3)])
        }
        (1 | 2, _) => {
            return Err(Error::CaseMismatch(format!("indices {indices:?} do not fit case {case}")));
        }
        _ => return Err(Error::CaseMismatch(format!("unknown case {case}"))),
    };
    let sum = summands.iter().fold(ring.zero(), |acc, (c, s)| &acc + &s.scale(c));
    let summands = summands
        .into_iter()
        .map(|(c, s)| Ok((c, QuadForm::from_poly(&s)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RemarkExpansion { case, indices: indices.to_vec(), exact: (&target - &sum).is_zero(), target, summands })
}

/// Pullback of `q` along `z_big = A z_small`; `A` must have full column rank.
pub fn restrict_quadric(q: &QuadForm, inclusion: &[Vec<Scalar>], target: &PolyRing) -> Result<QuadForm> {
    if linalg::rank(inclusion) < target.nvars() {
        return Err(Error::RankDeficientInclusion);
    }
    q.pullback(inclusion, target)
}

/// Inclusion matrix of `P(H0(L_small)) ⊆ P(H0(L_big))` induced by two models on the
/// same pair of bases: big coordinate `γ` maps to the small coordinate that the
/// small table assigns to the same `(i, j)`.
pub fn multiplication_inclusion(big: &SectionModel, small: &SectionModel) -> Result<Vec<Vec<Scalar>>> {
    if big.dim_a() != small.dim_a() || big.dim_b() != small.dim_b() {
        return Err(Error::InvalidArgument("models have different section bases".into()));
    }
    let q = ScalarMode::Rational;
    let mut a = vec![vec![q.zero(); small.dim_l()]; big.dim_l()];
    let mut set = vec![false; big.dim_l()];
    for i in 0..big.dim_a() {
        for j in 0..big.dim_b() {
            let (bm, sm) = (&big.mult[i][j], &small.mult[i][j]);
            if bm.len() != 1 || !bm[0].1.is_one() {
                return Err(Error::InvalidArgument("big model must have a monomial table".into()));
            }
            let g = bm[0].0;
            let row: Vec<Scalar> = {
                let mut r = vec![q.zero(); small.dim_l()];
                for (d, c) in sm {
                    r[*d] = c.clone();
                }
                r
            };
            if set[g] && a[g] != row {
                return Err(Error::InvalidArgument("tables are not compatible".into()));
            }
            a[g] = row;
            set[g] = true;
        }
    }
    Ok(a)
}

/// Images `Σ c_t (α·β_t)²` of base members under `α² ⊗ q`, for each `α`.
/// Base members are decomposed as weighted squares by congruence.
pub fn lemma_pushforward_family(
    mult: &SectionModel,
    base: &Rank3Family,
    alphas: &[Vec<Scalar>],
) -> Result<Rank3Family> {
    if base.ring.nvars() != mult.dim_b() {
        return Err(Error::ArityMismatch { expected: mult.dim_b(), got: base.ring.nvars() });
    }
    let target = crate::sections::z_ring(mult.dim_l(), base.ring.mode());
    let per_member = par::try_map(&base.members, |m| -> Result<Vec<(QuadForm, MemberOrigin)>> {
        let squares = linalg::diagonalize_symmetric(&m.quad.matrix);
        if squares.len() > 3 {
            return Err(Error::NotSumOfSquares { rank: squares.len() });
        }
        let mut out = Vec::new();
        for alpha in alphas {
            if alpha.iter().all(Scalar::is_zero) {
                continue;
            }
            let pushed = squares
                .iter()
                .map(|(c, beta)| Ok((c.clone(), product_section(mult, alpha, beta)?)))
                .collect::<Result<Vec<_>>>()?;
            let origin = MemberOrigin::Pushforward { alpha: vec_labels(alpha), parent: Box::new(m.origin.clone()) };
            out.push((QuadForm::from_weighted_squares(&target, &pushed), origin));
        }
        Ok(out)
    })?;
    let mut fam = Rank3Family::new(&target);
    for (q, o) in per_member.into_iter().flatten() {
        fam.push(q, o)?;
    }
    Ok(fam)
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let q = ScalarMode::Rational;
    (0..n).map(|k| if k == i { q.one() } else { q.zero() }).collect()
}

/// `e_i` and `e_i + e_j`: their squares span `S²`.
fn square_spanning_sections(n: usize) -> Vec<Vec<Scalar>> {
    let mut out: Vec<Vec<Scalar>> = (0..n).map(|i| unit(n, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            out.push(unit(n, i).iter().zip(unit(n, j)).map(|(a, b)| a + &b).collect());
        }
    }
    out
}

/// `q_W` for all coordinate planes and `batch` random planes drawn from `rng`.
fn grassmann_batch(model: &SectionModel, rng: &mut ChaCha8Rng, batch: usize, coords: bool) -> Result<Vec<(QuadForm, MemberOrigin)>> {
    let n = model.dim_a();
    let q = ScalarMode::Rational;
    let mut planes = Vec::new();
    if coords {
        for i in 0..n {
            for j in i + 1..n {
                planes.push((unit(n, i), unit(n, j)));
            }
        }
    }
    while planes.len() < batch + if coords { n * (n - 1) / 2 } else { 0 } {
        let mut draw = || (0..n).map(|_| q.from_i64(rng.gen_range(-3..=3))).collect::<Vec<_>>();
        let (a, b) = (draw(), draw());
        if linalg::rank(&[a.clone(), b.clone()]) == 2 {
            planes.push((a, b));
        }
    }
    par::try_map(&planes, |(a, b)| {
        Ok((
            grassmann_quadric(model, a, b)?,
            MemberOrigin::GrassmannPair { sigma0: vec_labels(a), sigma1: vec_labels(b) },
        ))
    })
}

/// `q_W` family on `v_2(P^n)`: coordinate planes plus seeded random planes, with the
/// random batch enlarged until the degree-2 span stops growing short of `target_dim`.
pub fn veronese_family(n: u32, seed: u64, target_dim: Option<usize>) -> Result<Rank3Family> {
    let model = model_veronese(n, 1, 1)?;
    let want = target_dim.unwrap_or_else(|| veronese_quadric_count(n as usize + 1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = crate::sections::z_ring(model.dim_l(), ScalarMode::Rational);
    let mut fam = Rank3Family::new(&ring);
    let mut batch = 3 * want;
    let mut first = true;
    for _ in 0..4 {
        for (q, o) in grassmann_batch(&model, &mut rng, batch, first)? {
            fam.push(q, o)?;
        }
        first = false;
        if fam.span().dim() >= want {
            break;
        }
        batch *= 2;
    }
    Ok(fam)
}

/// `dim S²(S²V) - dim S⁴V` for `dim V = m`.
pub fn veronese_quadric_count(m: usize) -> usize {
    m * m * (m * m - 1) / 12
}

/// Rank-≤3 family for `I(P¹, O(a+b))` from the split `(a, b)`.
///
/// `a == b`: restriction of the `q_W` family of `v_2(P^a)` along the multiplication
/// inclusion, together with the case-1/case-2 expansions on `Cat(O(a), O(a))`.
/// Otherwise, with `a < b`: pushforward of the family for `O(b)` by sections of `O(a)`.
pub fn p1_family(a: u32, b: u32, seed: u64) -> Result<Rank3Family> {
    let (a, b) = (a.min(b), a.max(b));
    if a == 0 {
        return Err(Error::InvalidArgument("both degrees must be positive".into()));
    }
    if a == b {
        let small = model_p1(a, a);
        let ring = crate::sections::z_ring(small.dim_l(), ScalarMode::Rational);
        let mut fam = Rank3Family::new(&ring);
        let big = model_veronese(a, 1, 1)?;
        let base = veronese_family(a, seed, None)?;
        // Veronese A-basis is ascending in grevlex, which lists P¹ sections by the exponent of s.
        let incl = multiplication_inclusion(&big, &small)?;
        for m in &base.members {
            let q = restrict_quadric(&m.quad, &incl, &ring)?;
            fam.push(q, MemberOrigin::Restriction { parent: Box::new(m.origin.clone()) })?;
        }
        let cat = build_catalecticant(&small);
        let n = cat.nrows();
        for i in 0..n {
            for k in 0..n {
                if i == k {
                    continue;
                }
                if i < k {
                    push_expansion(&mut fam, &remark_identity(&cat, 1, &[i, k])?)?;
                }
                for l in k + 1..n {
                    if l != i {
                        push_expansion(&mut fam, &remark_identity(&cat, 2, &[i, k, l])?)?;
                    }
                }
            }
        }
        return Ok(fam);
    }
    let base = if b % 2 == 0 { p1_family(b / 2, b / 2, seed)? } else { p1_family(b / 2, b - b / 2, seed)? };
    let mult = model_p1(a, b);
    lemma_pushforward_family(&mult, &base, &square_spanning_sections(a as usize + 1))
}

fn push_expansion(fam: &mut Rank3Family, e: &RemarkExpansion) -> Result<()> {
    for (_, q) in &e.summands {
        fam.push(q.clone(), MemberOrigin::RemarkIdentity { case: e.case, indices: e.indices.clone() })?;
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct Rank3Certificate {
    pub family_size: usize,
    pub family_hash: String,
    pub max_rank: usize,
    pub family_span_dim: usize,
    pub degree2_dim: usize,
    pub ideal_gb_hash: Option<String>,
    pub members_in_ideal: Verdict,
    pub ranks_at_most_3: Verdict,
    pub spans2: Verdict,
    pub generates: Verdict,
}

impl Rank3Certificate {
    pub fn all_true(&self) -> bool {
        [&self.members_in_ideal, &self.ranks_at_most_3, &self.spans2, &self.generates].iter().all(|v| v.is_true())
    }
}

/// Checks that the family spans `I_2` and generates `I`.
pub fn rank3_span_certificate(ideal: &Ideal, family: &Rank3Family) -> Result<Rank3Certificate> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if family.ring != *ideal.ring() {
        return Err(Error::RingMismatch);
    }
    let polys = family.polys();
    let span = LinearSpan::from_polys(ideal.ring(), polys.iter());
    let piece = ideal.graded_piece(2)?;
    let members_in = Verdict::from_result(ideal.contains_all(&polys))?;
    let spans2 = if members_in.is_true() { Verdict::from_bool(span.dim() == piece.dim()) } else { members_in.clone() };
    let generated = Ideal::new(ideal.ring(), span.rref())?.with_budget(ideal.budget());
    let gb = match ideal.groebner() {
        Ok(gb) => Some(gb.to_vec()),
        Err(e) if e.is_budget() => None,
        Err(e) => return Err(e),
    };
    let generates = match (&gb, members_in.is_true()) {
        (Some(gb), true) => Verdict::from_result(generated.contains_all(gb))?,
        (None, _) => Verdict::Inconclusive("Groebner basis of the target ideal exceeded its budget".into()),
        (_, false) => members_in.clone(),
    };
    Ok(Rank3Certificate {
        family_size: family.members.len(),
        family_hash: content_hash(&family.ring, &polys),
        max_rank: family.max_rank(),
        family_span_dim: span.dim(),
        degree2_dim: piece.dim(),
        ideal_gb_hash: gb.as_ref().map(|g| content_hash(ideal.ring(), g)),
        members_in_ideal: members_in,
        ranks_at_most_3: Verdict::from_bool(family.max_rank() <= 3),
        spans2,
        generates,
    })
}

/// `I(P^n, O(2))` against its `q_W` family.
pub fn certify_veronese(n: u32, seed: u64, budget: Budget) -> Result<(Rank3Family, Rank3Certificate)> {
    let ideal = variety_ideal(&model_veronese(n, 1, 1)?, ScalarMode::Rational, budget)?.ideal;
    let fam = veronese_family(n, seed, None)?;
    let cert = rank3_span_certificate(&ideal, &fam)?;
    Ok((fam, cert))
}

/// `I(P¹, O(a+b))` against the family built from the split `(a, b)`.
pub fn certify_p1(a: u32, b: u32, seed: u64, budget: Budget) -> Result<(Rank3Family, Rank3Certificate)> {
    let ideal = variety_ideal(&model_p1(a, b), ScalarMode::Rational, budget)?.ideal;
    let fam = p1_family(a, b, seed)?;
    let cert = rank3_span_certificate(&ideal, &fam)?;
    Ok((fam, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sections::z_ring;
    use crate::text::parse_poly;

    fn q(v: i64) -> Scalar {
        ScalarMode::Rational.from_i64(v)
    }

    fn rank_of(ring: &PolyRing, s: &str) -> usize {
        quad_rank(&QuadForm::from_poly(&parse_poly(ring, s).unwrap()).unwrap())
    }

    #[test]
    fn ranks() {
        let r = z_ring(3, ScalarMode::Rational);
        assert_eq!(rank_of(&r, "z_0*z_2 - z_1^2"), 3);
        assert_eq!(rank_of(&r, "z_0^2"), 1);
        assert_eq!(rank_of(&r, "z_0*z_1"), 2);
    }

    #[test]
    fn round_trip() {
        let r = z_ring(3, ScalarMode::Rational);
        let f = parse_poly(&r, "3*z_0*z_2 - 1/2*z_1^2 + z_0*z_1").unwrap();
        assert_eq!(QuadForm::from_poly(&f).unwrap().to_poly(), f);
    }

    #[test]
    fn conic_from_grassmann() {
        let m = model_p1(1, 1);
        // A-basis is [t, s]
        let g = grassmann_quadric(&m, &[q(0), q(1)], &[q(1), q(0)]).unwrap();
        assert_eq!(g.to_poly(), parse_poly(g.ring(), "z_0*z_2 - z_1^2").unwrap());
        assert_eq!(grassmann_quadric(&m, &[q(1), q(2)], &[q(2), q(4)]), Err(Error::DependentSections));
    }

    #[test]
    fn surface_grassmann_member() {
        let m = model_veronese(2, 1, 1).unwrap();
        let g = grassmann_quadric(&m, &[q(0), q(0), q(1)], &[q(0), q(1), q(0)]).unwrap();
        assert_eq!(quad_rank(&g), 3);
        let ideal = variety_ideal(&m, ScalarMode::Rational, Budget::default()).unwrap().ideal;
        assert!(ideal.contains(&g.to_poly()).unwrap());
    }

    #[test]
    fn remark_cases() {
        let cat = build_catalecticant(&model_veronese(2, 1, 1).unwrap());
        let e = remark_identity(&cat, 1, &[0, 2]).unwrap();
        assert!(e.exact && e.summands.len() == 1 && e.max_rank() == 3);
        let e = remark_identity(&cat, 2, &[0, 1, 2]).unwrap();
        assert!(e.exact);
        assert_eq!(e.summands.len(), 3);
        assert!(e.max_rank() <= 3);
        assert!(matches!(remark_identity(&cat, 2, &[0, 1, 1]), Err(Error::CaseMismatch(_))));
        assert!(matches!(remark_identity(&cat, 3, &[0, 1, 2]), Err(Error::CaseMismatch(_))));
    }

    #[test]
    fn restriction() {
        let r = z_ring(3, ScalarMode::Rational);
        let f = QuadForm::from_poly(&parse_poly(&r, "z_0*z_2 - z_1^2").unwrap()).unwrap();
        let id: Vec<Vec<Scalar>> = (0..3).map(|i| unit(3, i)).collect();
        assert_eq!(restrict_quadric(&f, &id, &r).unwrap(), f);
        let r2 = z_ring(2, ScalarMode::Rational);
        let hyper = vec![vec![q(1), q(0)], vec![q(0), q(1)], vec![q(1), q(1)]];
        assert!(quad_rank(&restrict_quadric(&f, &hyper, &r2).unwrap()) <= 3);
        let bad = vec![vec![q(1), q(1)], vec![q(0), q(0)], vec![q(0), q(0)]];
        assert_eq!(restrict_quadric(&f, &bad, &r2), Err(Error::RankDeficientInclusion));
    }

    #[test]
    fn quartic_as_section_of_surface() {
        let small = model_p1(2, 2);
        let big = model_veronese(2, 1, 1).unwrap();
        let incl = multiplication_inclusion(&big, &small).unwrap();
        let ring = z_ring(5, ScalarMode::Rational);
        let ideal = variety_ideal(&small, ScalarMode::Rational, Budget::default()).unwrap().ideal;
        for m in veronese_family(2, 0, None).unwrap().members {
            let r = restrict_quadric(&m.quad, &incl, &ring).unwrap();
            assert!(quad_rank(&r) <= 3);
            assert!(ideal.contains(&r.to_poly()).unwrap());
        }
    }

    #[test]
    fn pushforward_examples() {
        let r = z_ring(3, ScalarMode::Rational);
        let mut base = Rank3Family::new(&r);
        base.push(QuadForm::from_poly(&parse_poly(&r, "z_0*z_2 - z_1^2").unwrap()).unwrap(), MemberOrigin::RemarkIdentity { case: 1, indices: vec![0, 1] })
            .unwrap();
        let mult = model_p1(1, 2);
        let fam = lemma_pushforward_family(&mult, &base, &[vec![q(0), q(1)], vec![q(0), q(0)]]).unwrap();
        assert_eq!(fam.members.len(), 1);
        assert_eq!(fam.members[0].rank, 3);
        let cubic = variety_ideal(&model_p1(1, 2), ScalarMode::Rational, Budget::default()).unwrap().ideal;
        assert!(cubic.contains(&fam.members[0].quad.to_poly()).unwrap());

        let mut sq = Rank3Family::new(&r);
        sq.push(QuadForm::from_poly(&parse_poly(&r, "z_1^2").unwrap()).unwrap(), MemberOrigin::RemarkIdentity { case: 1, indices: vec![0, 1] })
            .unwrap();
        let fam = lemma_pushforward_family(&mult, &sq, &[vec![q(1), q(1)]]).unwrap();
        assert_eq!(fam.members[0].rank, 1);
    }

    #[test]
    fn small_certificates() {
        let (_, c) = certify_veronese(1, 0, Budget::default()).unwrap();
        assert!(c.all_true());
        assert_eq!(c.degree2_dim, 1);
        let (_, c) = certify_p1(1, 2, 0, Budget::default()).unwrap();
        assert!(c.all_true(), "{c:?}");
    }
}

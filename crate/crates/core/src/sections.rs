//! Section-ring models, catalecticant matrices `Cat(A, B)` and their minor ideals.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{Budget, Ideal};
use crate::linalg;
use crate::par;
use crate::poly::{ExpVec, Poly, PolyRing};
use crate::scalar::{Scalar, ScalarMode};
use crate::text::parse_poly_at;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    P1 { deg_a: u32, deg_b: u32 },
    Veronese { n: u32, d1: u32, d2: u32 },
    UserTable,
}

/// Bases of `H0(A)`, `H0(B)`, `H0(L)` and the multiplication table
/// `α_i ⊗ β_j -> Σ_γ c_ijγ λ_γ`.
#[derive(Debug, Clone)]
pub struct SectionModel {
    pub labels_a: Vec<String>,
    pub labels_b: Vec<String>,
    pub labels_l: Vec<String>,
    /// `mult[i][j]` is a sparse vector over the L-basis.
    pub mult: Vec<Vec<Vec<(usize, Scalar)>>>,
    pub provenance: Provenance,
    /// Exponents of the L-basis monomials in the parameters, for built-ins.
    param_exps: Option<Vec<Vec<u16>>>,
}

fn monomial_label(names: &[&str], e: &[u16]) -> String {
    let parts: Vec<String> = e
        .iter()
        .zip(names)
        .filter(|(x, _)| **x > 0)
        .map(|(&x, n)| if x == 1 { n.to_string() } else { format!("{n}^{x}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Degree-`deg` monomials in `nvars` variables, ascending in grevlex with `x_0 > x_1 > ...`.
fn ascending_monomials(nvars: usize, deg: u32) -> Vec<Vec<u16>> {
    let names: Vec<String> = (0..nvars).map(|i| format!("x_{i}")).collect();
    let ring = PolyRing::grevlex(names, ScalarMode::Rational).unwrap();
    let mut out: Vec<Vec<u16>> = ring.monomials_of_degree(deg).iter().map(|e| e.as_slice().to_vec()).collect();
    out.reverse();
    out
}

impl SectionModel {
    pub fn dim_a(&self) -> usize {
        self.labels_a.len()
    }

    pub fn dim_b(&self) -> usize {
        self.labels_b.len()
    }

    pub fn dim_l(&self) -> usize {
        self.labels_l.len()
    }

    pub fn has_parametrization(&self) -> bool {
        self.param_exps.is_some()
    }

    pub fn num_params(&self) -> usize {
        self.param_exps.as_ref().map_or(0, |p| p.first().map_or(0, Vec::len))
    }

    /// `A` and `B` are the same bundle with the same basis.
    pub fn is_self_paired(&self) -> bool {
        match self.provenance {
            Provenance::P1 { deg_a, deg_b } => deg_a == deg_b,
            Provenance::Veronese { d1, d2, .. } => d1 == d2,
            Provenance::UserTable => false,
        }
    }

    /// Coordinates of the parametrized point `params` in `P(H0(L))`.
    pub fn point(&self, params: &[Scalar]) -> Result<Vec<Scalar>> {
        let exps = self.param_exps.as_ref().ok_or(Error::UnsupportedProvenance)?;
        if params.len() != self.num_params() {
            return Err(Error::ArityMismatch { expected: self.num_params(), got: params.len() });
        }
        let mode = params.first().map_or(ScalarMode::Rational, Scalar::mode);
        Ok(exps
            .iter()
            .map(|e| {
                e.iter().zip(params).fold(mode.one(), |acc, (&x, p)| {
                    (0..x).fold(acc, |a, _| &a * p)
                })
            })
            .collect())
    }

    /// Reads a user multiplication table.
    ///
    /// ```text
    /// sections: a=2 b=2 l=3
    /// 0 0 : z_0
    /// 0 1 : z_1
    /// ```
    /// Indices are 0-based; omitted entries are zero.
    pub fn parse_user_table(text: &str) -> Result<SectionModel> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "empty table"))?;
        let rest = header
            .strip_prefix("sections:")
            .ok_or_else(|| Error::parse(hl, "expected `sections:` header"))?;
        let mut dims: HashMap<&str, usize> = HashMap::new();
        for tok in rest.split_whitespace() {
            let (k, v) = tok.split_once('=').ok_or_else(|| Error::parse(hl, format!("bad field {tok:?}")))?;
            let v: usize = v.parse().map_err(|_| Error::parse(hl, format!("bad size {v:?}")))?;
            dims.insert(k, v);
        }
        let get = |k: &str| dims.get(k).copied().ok_or_else(|| Error::parse(hl, format!("missing {k}=")));
        let (a, b, l) = (get("a")?, get("b")?, get("l")?);
        if a == 0 || b == 0 || l == 0 {
            return Err(Error::parse(hl, "sizes must be positive"));
        }
        let ring = z_ring(l, ScalarMode::Rational);
        let mut mult = vec![vec![Vec::new(); b]; a];
        let mut seen = vec![vec![false; b]; a];
        for (ln, line) in lines {
            let (idx, body) = line.split_once(':').ok_or_else(|| Error::parse(ln, "expected `i j : poly`"))?;
            let ij: Vec<usize> = idx
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::parse(ln, format!("bad index {t:?}"))))
                .collect::<Result<_>>()?;
            let [i, j] = ij[..] else { return Err(Error::parse(ln, "expected two indices")) };
            if i >= a || j >= b {
                return Err(Error::parse(ln, format!("index ({i},{j}) out of range")));
            }
            if seen[i][j] {
                return Err(Error::parse(ln, format!("duplicate entry ({i},{j})")));
            }
            seen[i][j] = true;
            let p = parse_poly_at(&ring, body, ln)?;
            if !p.is_zero() && (!p.is_homogeneous() || p.total_degree() != Some(1)) {
                return Err(Error::parse(ln, "entries must be linear forms"));
            }
            mult[i][j] = p
                .terms()
                .iter()
                .map(|(e, c)| (e.as_slice().iter().position(|&x| x == 1).unwrap(), c.clone()))
                .collect();
            mult[i][j].sort_by_key(|(g, _)| *g);
        }
        Ok(SectionModel {
            labels_a: (0..a).map(|i| format!("a_{i}")).collect(),
            labels_b: (0..b).map(|i| format!("b_{i}")).collect(),
            labels_l: ring.names().to_vec(),
            mult,
            provenance: Provenance::UserTable,
            param_exps: None,
        })
    }
}

/// `O(degA)`, `O(degB)` on the projective line with monomial bases indexed by the
/// exponent of `s`.
pub fn model_p1(deg_a: u32, deg_b: u32) -> SectionModel {
    let names = ["s", "t"];
    let basis = |d: u32| -> Vec<String> { (0..=d).map(|i| monomial_label(&names, &[i as u16, (d - i) as u16])).collect() };
    let dl = deg_a + deg_b;
    let one = ScalarMode::Rational.one();
    let mult = (0..=deg_a as usize)
        .map(|i| (0..=deg_b as usize).map(|j| vec![(i + j, one.clone())]).collect())
        .collect();
    SectionModel {
        labels_a: basis(deg_a),
        labels_b: basis(deg_b),
        labels_l: basis(dl),
        mult,
        provenance: Provenance::P1 { deg_a, deg_b },
        param_exps: Some((0..=dl).map(|e| vec![e as u16, (dl - e) as u16]).collect()),
    }
}

/// `O(d1)`, `O(d2)` on `P^n` with ascending grevlex monomial bases.
pub fn model_veronese(n: u32, d1: u32, d2: u32) -> Result<SectionModel> {
    if n == 0 || d1 == 0 || d2 == 0 {
        return Err(Error::InvalidArgument("Veronese model needs n, d1, d2 >= 1".into()));
    }
    let nv = n as usize + 1;
    let names: Vec<String> = (0..nv).map(|i| format!("x_{i}")).collect();
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let (ba, bb, bl) = (ascending_monomials(nv, d1), ascending_monomials(nv, d2), ascending_monomials(nv, d1 + d2));
    let index: HashMap<&Vec<u16>, usize> = bl.iter().enumerate().map(|(k, e)| (e, k)).collect();
    let one = ScalarMode::Rational.one();
    let mult = ba
        .iter()
        .map(|ea| {
            bb.iter()
                .map(|eb| {
                    let prod: Vec<u16> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                    vec![(index[&prod], one.clone())]
                })
                .collect()
        })
        .collect();
    let label = |b: &[Vec<u16>]| b.iter().map(|e| monomial_label(&names, e)).collect();
    Ok(SectionModel {
        labels_a: label(&ba),
        labels_b: label(&bb),
        labels_l: label(&bl),
        mult,
        provenance: Provenance::Veronese { n, d1, d2 },
        param_exps: Some(bl),
    })
}

/// `k[z_0, .., z_{l-1}]` with grevlex.
pub fn z_ring(l: usize, mode: ScalarMode) -> PolyRing {
    PolyRing::grevlex((0..l).map(|g| format!("z_{g}")), mode).unwrap()
}

/// An `a × b` matrix of linear forms in the `z` coordinates of `P(H0(L))`.
#[derive(Debug, Clone)]
pub struct CatalecticantMatrix {
    pub model: SectionModel,
    pub ring: PolyRing,
    pub entries: Vec<Vec<Poly>>,
}

pub fn build_catalecticant(model: &SectionModel) -> CatalecticantMatrix {
    build_catalecticant_in(model, ScalarMode::Rational).expect("rational structure constants")
}

/// Same matrix over another scalar mode; fails if a structure constant has a
/// denominator divisible by the characteristic.
pub fn build_catalecticant_in(model: &SectionModel, mode: ScalarMode) -> Result<CatalecticantMatrix> {
    let ring = z_ring(model.dim_l(), mode);
    let entries = model
        .mult
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| {
                    let terms = v
                        .iter()
                        .map(|(g, c)| Ok((ExpVec::unit(ring.nvars(), *g), mode.from_rational(c.as_rational().unwrap())?)))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(ring.from_terms(terms))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CatalecticantMatrix { model: model.clone(), ring, entries })
}

impl CatalecticantMatrix {
    pub fn nrows(&self) -> usize {
        self.entries.len()
    }

    pub fn ncols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn is_symmetric(&self) -> bool {
        self.nrows() == self.ncols() && (0..self.nrows()).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Scalar matrix at a point of `P(H0(L))`.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Vec<Vec<Scalar>>> {
        self.entries.iter().map(|row| row.iter().map(|e| e.eval(point)).collect()).collect()
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Laplace expansion along the first row, memoized on (row set, column set).
struct LaplaceMemo<'a> {
    m: &'a [Vec<Poly>],
    memo: Mutex<HashMap<(u64, u64), Poly>>,
}

impl LaplaceMemo<'_> {
    fn det(&self, rows: &[usize], cols: &[usize]) -> Poly {
        let ring = self.m[0][0].ring();
        if rows.is_empty() {
            return ring.one();
        }
        if rows.len() == 1 {
            return self.m[rows[0]][cols[0]].clone();
        }
        let key = (
            rows.iter().fold(0u64, |a, &r| a | 1 << r),
            cols.iter().fold(0u64, |a, &c| a | 1 << c),
        );
        if let Some(p) = self.memo.lock().unwrap().get(&key) {
            return p.clone();
        }
        let mut acc = ring.zero();
        for (k, &c) in cols.iter().enumerate() {
            let e = &self.m[rows[0]][c];
            if e.is_zero() {
                continue;
            }
            let sub: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let t = e * &self.det(&rows[1..], &sub);
            acc = if k % 2 == 0 { &acc + &t } else { &acc - &t };
        }
        self.memo.lock().unwrap().insert(key, acc.clone());
        acc
    }
}

/// Fraction-free elimination over the polynomial ring; every division is exact.
fn bareiss_det(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    let ring = m[0][0].ring().clone();
    let mut prev = ring.one();
    let mut sign = false;
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else { return ring.zero() };
        if p != k {
            m.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -&d
    } else {
        d
    }
}

/// Largest size computed by cofactor expansion.
pub const LAPLACE_MAX: usize = 6;

/// All `size × size` minors, rows and columns in lexicographic subset order.
pub fn minors(matrix: &CatalecticantMatrix, size: usize) -> Result<Vec<Poly>> {
    let (a, b) = (matrix.nrows(), matrix.ncols());
    if size == 0 || size > a.min(b) {
        return Err(Error::InvalidArgument(format!("minor size {size} outside 1..={}", a.min(b))));
    }
    if a > 64 || b > 64 {
        return Err(Error::InvalidArgument("matrices above 64 rows or columns are not supported".into()));
    }
    let rsets = subsets(a, size);
    let csets = subsets(b, size);
    let pairs: Vec<(&Vec<usize>, &Vec<usize>)> = rsets.iter().flat_map(|r| csets.iter().map(move |c| (r, c))).collect();
    if size <= LAPLACE_MAX {
        let memo = LaplaceMemo { m: &matrix.entries, memo: Mutex::new(HashMap::new()) };
        Ok(par::map(&pairs, |(r, c)| memo.det(r, c)))
    } else {
        Ok(par::map(&pairs, |(r, c)| {
            bareiss_det(r.iter().map(|&i| c.iter().map(|&j| matrix.entries[i][j].clone()).collect()).collect())
        }))
    }
}

/// Ideal of `size × size` minors (generators deduplicated up to scale).
pub fn minors_ideal(matrix: &CatalecticantMatrix, size: usize) -> Result<Ideal> {
    let mut seen = std::collections::HashSet::new();
    let gens: Vec<Poly> = minors(matrix, size)?
        .into_iter()
        .filter(|p| !p.is_zero())
        .filter(|p| seen.insert(p.monic()))
        .collect();
    Ideal::new(&matrix.ring, gens)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealMethod {
    Elimination,
    TwoMinors,
}

#[derive(Debug, Clone)]
pub struct EmbeddedVarietyIdeal {
    pub model: SectionModel,
    pub ideal: Ideal,
    pub method: IdealMethod,
}

/// `I(X, L)` as the kernel of the parametrization, by eliminating parameters `w_i`
/// from `z_γ - w^γ`.
pub fn variety_ideal(model: &SectionModel, mode: ScalarMode, budget: Budget) -> Result<EmbeddedVarietyIdeal> {
    let exps = model.param_exps.as_ref().ok_or(Error::UnsupportedProvenance)?;
    let np = model.num_params();
    let l = model.dim_l();
    let names = (0..np).map(|i| format!("w_{i}")).chain((0..l).map(|g| format!("z_{g}")));
    let big = PolyRing::grevlex(names, mode)?;
    let one = mode.one();
    let gens: Vec<Poly> = exps
        .iter()
        .enumerate()
        .map(|(g, e)| {
            let mut full = e.clone();
            full.resize(np + l, 0);
            &big.var(np + g) - &big.monomial(ExpVec::from_slice(&full), one.clone())
        })
        .collect();
    let elim = Ideal::new(&big, gens)?.with_budget(budget).eliminate(&(np..np + l).collect::<Vec<_>>())?;
    let ideal = elim.to_ring(&z_ring(l, mode))?;
    Ok(EmbeddedVarietyIdeal { model: model.clone(), ideal, method: IdealMethod::Elimination })
}

/// Exact rank of the catalecticant at a point.
pub fn rank_profile(matrix: &CatalecticantMatrix, point: &[Scalar]) -> Result<usize> {
    if point.len() != matrix.model.dim_l() {
        return Err(Error::ArityMismatch { expected: matrix.model.dim_l(), got: point.len() });
    }
    Ok(linalg::rank(&matrix.evaluate(point)?))
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct StratificationReport {
    pub draws: usize,
    /// Curve points whose catalecticant has rank exactly 1.
    pub rank_one_points: usize,
    /// Sums of `k+1` points with rank at most `k+1`.
    pub bounded_sums: usize,
    /// Sums of `k+1` points at which every `(k+2)`-minor vanishes.
    pub vanishing_minors: usize,
}

impl StratificationReport {
    pub fn holds(&self) -> bool {
        self.rank_one_points == self.draws && self.bounded_sums == self.draws && self.vanishing_minors == self.draws
    }
}

/// Seeded random check of the rank stratification: rank 1 on parametrized points,
/// rank at most `k+1` and vanishing `(k+2)`-minors on sums of `k+1` such points.
pub fn stratification_sample(model: &SectionModel, k: u32, draws: usize, seed: u64) -> Result<StratificationReport> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let cat = build_catalecticant(model);
    let size = k as usize + 2;
    let minor_polys = if size <= cat.nrows().min(cat.ncols()) { minors(&cat, size)? } else { Vec::new() };
    let mode = ScalarMode::Rational;
    let draw = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<Scalar> {
        loop {
            let v: Vec<i64> = (0..model.num_params()).map(|_| rng.gen_range(-5..=5)).collect();
            if v.iter().any(|&x| x != 0) {
                return v.into_iter().map(|x| mode.from_i64(x)).collect();
            }
        }
    };
    let mut rep = StratificationReport { draws, ..Default::default() };
    for _ in 0..draws {
        let p = model.point(&draw(&mut rng))?;
        if rank_profile(&cat, &p)? == 1 {
            rep.rank_one_points += 1;
        }
        let mut sum = vec![mode.zero(); model.dim_l()];
        for _ in 0..=k {
            let c = mode.from_i64(rng.gen_range(1..=4));
            for (s, x) in sum.iter_mut().zip(model.point(&draw(&mut rng))?) {
                *s = &*s + &(&c * &x);
            }
        }
        if rank_profile(&cat, &sum)? <= k as usize + 1 {
            rep.bounded_sums += 1;
        }
        if minor_polys.iter().map(|m| m.eval(&sum)).collect::<Result<Vec<_>>>()?.iter().all(Scalar::is_zero) {
            rep.vanishing_minors += 1;
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    fn q(v: i64) -> Scalar {
        ScalarMode::Rational.from_i64(v)
    }

    fn entries_text(m: &CatalecticantMatrix) -> Vec<Vec<String>> {
        m.entries.iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect()
    }

    #[test]
    fn p1_hankel() {
        let m = build_catalecticant(&model_p1(2, 2));
        assert_eq!(
            entries_text(&m),
            vec![vec!["z_0", "z_1", "z_2"], vec!["z_1", "z_2", "z_3"], vec!["z_2", "z_3", "z_4"]]
        );
        assert!(m.is_symmetric());
        let m = build_catalecticant(&model_p1(1, 3));
        assert_eq!((m.nrows(), m.ncols()), (2, 4));
        assert_eq!(m.entries[1][3].to_string(), "z_4");
        assert_eq!(model_p1(1, 1).dim_l(), 3);
    }

    #[test]
    fn veronese_models() {
        let v = build_catalecticant(&model_veronese(1, 1, 1).unwrap());
        assert_eq!(entries_text(&v), entries_text(&build_catalecticant(&model_p1(1, 1))));
        let v = build_catalecticant(&model_veronese(1, 2, 2).unwrap());
        assert_eq!(entries_text(&v), entries_text(&build_catalecticant(&model_p1(2, 2))));
        let m = build_catalecticant(&model_veronese(2, 1, 1).unwrap());
        assert_eq!((m.nrows(), m.model.dim_l()), (3, 6));
        assert!(m.is_symmetric());
        let m = model_veronese(2, 2, 2).unwrap();
        assert_eq!((m.dim_a(), m.dim_l()), (6, 15));
        assert!(build_catalecticant(&m).is_symmetric());
    }

    #[test]
    fn user_table() {
        let m = SectionModel::parse_user_table("sections: a=1 b=1 l=3\n0 0 : 2*z_0 - 1/2*z_2\n").unwrap();
        let c = build_catalecticant(&m);
        assert_eq!(entries_text(&c), vec![vec!["2*z_0 - 1/2*z_2"]]);
        assert!(matches!(variety_ideal(&m, ScalarMode::Rational, Budget::default()), Err(Error::UnsupportedProvenance)));
        assert!(SectionModel::parse_user_table("sections: a=1 b=1 l=1\n0 0 : z_0^2\n").is_err());
        assert!(SectionModel::parse_user_table("sections: a=1 b=1 l=1\n1 0 : z_0\n").is_err());
    }

    #[test]
    fn minor_examples() {
        let m = build_catalecticant(&model_p1(1, 1));
        let i = minors_ideal(&m, 2).unwrap();
        assert_eq!(i.gens().len(), 1);
        assert_eq!(i.gens()[0], parse_poly(&m.ring, "z_0*z_2 - z_1^2").unwrap());
        let h = build_catalecticant(&model_p1(2, 2));
        assert_eq!(minors_ideal(&h, 3).unwrap().gens().len(), 1);
    }

    #[test]
    fn bareiss_agrees_with_laplace() {
        let m = build_catalecticant(&model_p1(3, 3));
        let memo = LaplaceMemo { m: &m.entries, memo: Mutex::new(HashMap::new()) };
        let all: Vec<usize> = (0..4).collect();
        assert_eq!(bareiss_det(m.entries.clone()), memo.det(&all, &all));
    }

    #[test]
    fn variety_ideals() {
        let conic = variety_ideal(&model_p1(1, 1), ScalarMode::Rational, Budget::default()).unwrap();
        let m = build_catalecticant(&model_p1(1, 1));
        assert!(conic.ideal.equals(&minors_ideal(&m, 2).unwrap()).unwrap());
        let quartic = variety_ideal(&model_p1(2, 2), ScalarMode::Rational, Budget::default()).unwrap();
        let m13 = build_catalecticant(&model_p1(1, 3));
        assert!(quartic.ideal.equals(&minors_ideal(&m13, 2).unwrap()).unwrap());
        let surf = variety_ideal(&model_veronese(2, 1, 1).unwrap(), ScalarMode::Rational, Budget::default()).unwrap();
        assert_eq!(surf.ideal.graded_piece(2).unwrap().dim(), 6);
        assert_eq!(surf.ideal.graded_piece(1).unwrap().dim(), 0);
    }

    #[test]
    fn stratification_small() {
        let rep = stratification_sample(&model_p1(2, 2), 1, 20, 7).unwrap();
        assert!(rep.holds(), "{rep:?}");
    }

    #[test]
    fn rank_examples() {
        let m = build_catalecticant(&model_p1(2, 2));
        assert_eq!(rank_profile(&m, &vec![q(1); 5]).unwrap(), 1);
        assert_eq!(rank_profile(&m, &[q(1), q(0), q(0), q(0), q(1)]).unwrap(), 2);
        assert_eq!(rank_profile(&m, &vec![q(0); 5]).unwrap(), 0);
        let model = model_p1(2, 2);
        let p = model.point(&[q(1), q(0)]).unwrap();
        let r = model.point(&[q(0), q(1)]).unwrap();
        assert_eq!(p, vec![q(0), q(0), q(0), q(0), q(1)]);
        let sum: Vec<Scalar> = p.iter().zip(&r).map(|(x, y)| x + y).collect();
        assert_eq!(rank_profile(&m, &sum).unwrap(), 2);
    }
}

//! Exact linear algebra over the scalar field: echelon spans of polynomials,
//! matrix rank, and congruence diagonalization of symmetric matrices.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::{ExpVec, Poly, PolyRing};
use crate::scalar::{Scalar, ScalarMode};

/// Row-echelon basis of a finite-dimensional space of polynomials, with monomials
/// as columns ordered by the ring's monomial order. Rows are monic and have
/// pairwise distinct leading monomials.
#[derive(Clone, Debug)]
pub struct LinearSpan {
    ring: PolyRing,
    rows: Vec<Poly>,
    pivots: HashMap<ExpVec, usize>,
}

impl LinearSpan {
    pub fn new(ring: &PolyRing) -> Self {
        LinearSpan { ring: ring.clone(), rows: Vec::new(), pivots: HashMap::new() }
    }

    pub fn from_polys<'a>(ring: &PolyRing, polys: impl IntoIterator<Item = &'a Poly>) -> Self {
        let mut s = Self::new(ring);
        for p in polys {
            s.insert(p);
        }
        s
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Poly] {
        &self.rows
    }

    /// Eliminates leading terms against existing pivots.
    pub fn reduce(&self, f: &Poly) -> Poly {
        let mut p = f.clone();
        while let Some((e, c)) = p.leading_term() {
            match self.pivots.get(e) {
                Some(&k) => {
                    let c = -c;
                    p = p.axpy(&c, &ExpVec::zero(self.ring.nvars()), &self.rows[k]);
                }
                None => break,
            }
        }
        p
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.reduce(f).is_zero()
    }

    /// Adds `f` to the span; returns true if the dimension grew.
    pub fn insert(&mut self, f: &Poly) -> bool {
        let p = self.reduce(f);
        if p.is_zero() {
            return false;
        }
        let p = p.monic();
        self.pivots.insert(p.lm().unwrap().clone(), self.rows.len());
        self.rows.push(p);
        true
    }

    pub fn contains_span(&self, other: &LinearSpan) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn same_span(&self, other: &LinearSpan) -> bool {
        self.dim() == other.dim() && self.contains_span(other)
    }

    /// Reduced row-echelon basis sorted by descending pivot.
    pub fn rref(&self) -> Vec<Poly> {
        let order = self.ring.order();
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by(|&a, &b| order.cmp(self.rows[a].lm().unwrap(), self.rows[b].lm().unwrap()));
        let zero = ExpVec::zero(self.ring.nvars());
        let mut done: Vec<Poly> = Vec::with_capacity(idx.len());
        let mut done_piv: HashMap<ExpVec, usize> = HashMap::new();
        for &k in &idx {
            let mut row = self.rows[k].clone();
            loop {
                let hit = row
                    .terms()
                    .iter()
                    .skip(1)
                    .find_map(|(e, c)| done_piv.get(e).map(|&j| (j, c.clone())));
                match hit {
                    Some((j, c)) => row = row.axpy(&-c, &zero, &done[j]),
                    None => break,
                }
            }
            done_piv.insert(row.lm().unwrap().clone(), done.len());
            done.push(row);
        }
        done.reverse();
        done
    }
}

/// Exact rank of a scalar matrix.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    match rows[0][0].mode() {
        ScalarMode::Rational => bareiss_rank(rows),
        ScalarMode::PrimeField(_) => field_rank(rows.to_vec()),
    }
}

fn field_rank(mut m: Vec<Vec<Scalar>>) -> usize {
    let ncols = m[0].len();
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(r, piv);
        let inv = m[r][col].inv().unwrap();
        for i in r + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] * &inv;
            let (top, rest) = m.split_at_mut(i);
            for (x, p) in rest[0][col..ncols].iter_mut().zip(&top[r][col..ncols]) {
                *x = &*x - &(&f * p);
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Fraction-free elimination: rows are scaled to integers, then Bareiss steps keep
/// all intermediate entries integral.
fn bareiss_rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let den = row
                .iter()
                .map(|s| s.as_rational().unwrap().denom().clone())
                .fold(BigInt::one(), |a, d| a.lcm(&d));
            row.iter()
                .map(|s| {
                    let q = s.as_rational().unwrap();
                    q.numer() * (&den / q.denom())
                })
                .collect()
        })
        .collect();
    let nrows = m.len();
    let ncols = m[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..nrows).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(r, piv);
        for i in r + 1..nrows {
            for j in col + 1..ncols {
                let v = &m[r][col] * &m[i][j] - &m[i][col] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[r][col].clone();
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

/// Writes a symmetric matrix `M` as `sum_t c_t v_t v_t^T` by congruence
/// (Lagrange reduction). The number of terms equals the rank. Requires char != 2.
pub fn diagonalize_symmetric(matrix: &[Vec<Scalar>]) -> Vec<(Scalar, Vec<Scalar>)> {
    let n = matrix.len();
    let mut m: Vec<Vec<Scalar>> = matrix.to_vec();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mode = m[0][0].mode();
    let two = mode.from_i64(2);
    let subtract = |m: &mut Vec<Vec<Scalar>>, c: &Scalar, v: &[Scalar]| {
        for i in 0..n {
            if v[i].is_zero() {
                continue;
            }
            let ci = c * &v[i];
            for j in 0..n {
                if !v[j].is_zero() {
                    let t = &ci * &v[j];
                    m[i][j] = &m[i][j] - &t;
                }
            }
        }
    };
    loop {
        if let Some(i) = (0..n).find(|&i| !m[i][i].is_zero()) {
            let c = m[i][i].inv().unwrap();
            let v = m[i].clone();
            subtract(&mut m, &c, &v);
            out.push((c, v));
            continue;
        }
        let hit = (0..n).find_map(|i| (0..n).find(|&j| !m[i][j].is_zero()).map(|j| (i, j)));
        let Some((i, j)) = hit else { break };
        let a = m[i].clone();
        let b = m[j].clone();
        let c = (&two * &m[i][j]).inv().unwrap();
        let plus: Vec<Scalar> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let minus: Vec<Scalar> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
        subtract(&mut m, &c, &plus);
        let neg_c = -&c;
        subtract(&mut m, &neg_c, &minus);
        out.push((c, plus));
        out.push((neg_c, minus));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        ScalarMode::Rational.from_i64(v)
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&mat(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]])), 1);
        assert_eq!(rank(&mat(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]])), 2);
        assert_eq!(rank(&mat(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&mat(&[&[2, 4, 1], &[1, 2, 0], &[0, 0, 3]])), 2);
        let fp = ScalarMode::PrimeField(7);
        let m: Vec<Vec<Scalar>> = vec![vec![fp.from_i64(1), fp.from_i64(3)], vec![fp.from_i64(2), fp.from_i64(6)]];
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn diagonalization_reconstructs() {
        // z0*z2 - z1^2 as a Gram matrix
        let half = ScalarMode::Rational.from_ratio(1, 2).unwrap();
        let m = vec![
            vec![q(0), q(0), half.clone()],
            vec![q(0), q(-1), q(0)],
            vec![half, q(0), q(0)],
        ];
        let d = diagonalize_symmetric(&m);
        assert_eq!(d.len(), 3);
        let mut acc = vec![vec![q(0); 3]; 3];
        for (c, v) in &d {
            for i in 0..3 {
                for j in 0..3 {
                    acc[i][j] = &acc[i][j] + &(&(c * &v[i]) * &v[j]);
                }
            }
        }
        assert_eq!(acc, m);
    }

    #[test]
    fn span_membership_and_rref() {
        let r = PolyRing::grevlex(["x", "y"], ScalarMode::Rational).unwrap();
        let (x, y) = (r.var(0), r.var(1));
        let mut s = LinearSpan::new(&r);
        assert!(s.insert(&(&x + &y)));
        assert!(s.insert(&(&x - &y)));
        assert!(!s.insert(&x));
        assert_eq!(s.dim(), 2);
        let rr = s.rref();
        assert_eq!(rr, vec![x.clone(), y.clone()]);
    }
}

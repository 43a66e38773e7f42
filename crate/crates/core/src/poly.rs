//! Sparse multivariate polynomials with exact coefficients.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarMode};

/// Dense exponent vector, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpVec(Box<[u16]>);

impl ExpVec {
    pub fn zero(nvars: usize) -> Self {
        ExpVec(vec![0; nvars].into_boxed_slice())
    }

    pub fn from_slice(e: &[u16]) -> Self {
        ExpVec(e.into())
    }

    pub fn unit(nvars: usize, i: usize) -> Self {
        let mut v = vec![0; nvars];
        v[i] = 1;
        ExpVec(v.into_boxed_slice())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of the variables (mod 64) occurring with positive exponent.
    pub fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                m |= 1 << (i % 64);
            }
        }
        m
    }

    pub fn map_indices(&self, target_len: usize, f: impl Fn(usize) -> usize) -> ExpVec {
        let mut v = vec![0u16; target_len];
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                v[f(i)] += e;
            }
        }
        ExpVec(v.into_boxed_slice())
    }
}

impl fmt::Debug for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl std::ops::Index<usize> for ExpVec {
    type Output = u16;
    fn index(&self, i: usize) -> &u16 {
        &self.0[i]
    }
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// GrevLex on the first `n` variables, ties broken by GrevLex on the rest.
    Block(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &ExpVec, b: &ExpVec) -> Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex(&a.0, &b.0),
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Block(k) => {
                let k = (*k).min(a.len());
                grevlex(&a.0[..k], &b.0[..k]).then_with(|| grevlex(&a.0[k..], &b.0[k..]))
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Block(k) => format!("block({k})"),
        }
    }
}

#[derive(Debug)]
struct RingData {
    names: Vec<String>,
    index: HashMap<String, usize>,
    order: MonomialOrder,
    mode: ScalarMode,
}

/// A polynomial ring `k[vars]` with a fixed monomial order. Cheap to clone.
#[derive(Clone)]
pub struct PolyRing(Arc<RingData>);

impl PolyRing {
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        order: MonomialOrder,
        mode: ScalarMode,
    ) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::InvalidArgument(format!("bad variable name {n:?}")));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate variable {n}")));
            }
        }
        if let MonomialOrder::Block(k) = order {
            if k > names.len() {
                return Err(Error::InvalidArgument("block larger than variable count".into()));
            }
        }
        Ok(PolyRing(Arc::new(RingData { names, index, order, mode })))
    }

    pub fn grevlex<S: Into<String>>(names: impl IntoIterator<Item = S>, mode: ScalarMode) -> Result<Self> {
        Self::new(names, MonomialOrder::GrevLex, mode)
    }

    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn mode(&self) -> ScalarMode {
        self.0.mode
    }

    /// Same variables with a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<PolyRing> {
        PolyRing::new(self.0.names.clone(), order, self.0.mode)
    }

    /// Same variables and order over a different scalar mode.
    pub fn with_mode(&self, mode: ScalarMode) -> PolyRing {
        PolyRing::new(self.0.names.clone(), self.0.order, mode).expect("names already validated")
    }

    pub fn zero(&self) -> Poly {
        Poly { ring: self.clone(), terms: Vec::new() }
    }

    pub fn one(&self) -> Poly {
        self.constant(self.mode().one())
    }

    pub fn constant(&self, c: Scalar) -> Poly {
        self.monomial(ExpVec::zero(self.nvars()), c)
    }

    pub fn constant_i64(&self, c: i64) -> Poly {
        self.constant(self.mode().from_i64(c))
    }

    pub fn var(&self, i: usize) -> Poly {
        self.monomial(ExpVec::unit(self.nvars(), i), self.mode().one())
    }

    pub fn var_named(&self, name: &str) -> Result<Poly> {
        self.var_index(name)
            .map(|i| self.var(i))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown variable {name}")))
    }

    pub fn vars(&self) -> Vec<Poly> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn monomial(&self, e: ExpVec, c: Scalar) -> Poly {
        debug_assert_eq!(e.len(), self.nvars());
        if c.is_zero() {
            self.zero()
        } else {
            Poly { ring: self.clone(), terms: vec![(e, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates and dropping zeros.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (ExpVec, Scalar)>) -> Poly {
        let mut acc: HashMap<ExpVec, Scalar> = HashMap::new();
        for (e, c) in terms {
            debug_assert_eq!(e.len(), self.nvars());
            match acc.get_mut(&e) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(e, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = self.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly { ring: self.clone(), terms }
    }

    /// All exponent vectors of total degree `deg`, in descending monomial order.
    pub fn monomials_of_degree(&self, deg: u32) -> Vec<ExpVec> {
        let mut out = Vec::new();
        let n = self.nvars();
        if n == 0 {
            if deg == 0 {
                out.push(ExpVec::zero(0));
            }
            return out;
        }
        let mut cur = vec![0u16; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<ExpVec>) {
            if i + 1 == cur.len() {
                cur[i] = left as u16;
                out.push(ExpVec::from_slice(cur));
                cur[i] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u16;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, deg, &mut cur, &mut out);
        let order = self.order();
        out.sort_by(|a, b| order.cmp(b, a));
        out
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.names == other.0.names && self.0.order == other.0.order && self.0.mode == other.0.mode)
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ring: vars=[{}] order={} mode={}",
            self.0.names.join(","),
            self.0.order.label(),
            self.0.mode.label()
        )
    }
}

pub type Term = (ExpVec, Scalar);

/// Polynomial in canonical form: nonzero terms sorted by descending monomial order.
#[derive(Clone)]
pub struct Poly {
    ring: PolyRing,
    terms: Vec<Term>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Poly {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lm(&self) -> Option<&ExpVec> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lc(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.1)
    }

    /// Maximum total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((e, _)) => {
                let d = e.degree();
                self.terms.iter().all(|t| t.0.degree() == d)
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    /// Coefficient of the monomial `e` (zero if absent).
    pub fn coeff(&self, e: &ExpVec) -> Scalar {
        let order = self.ring.order();
        match self.terms.binary_search_by(|t| order.cmp(e, &t.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.ring.mode().zero(),
        }
    }

    /// Variables occurring in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for (e, _) in &self.terms {
            for (i, &x) in e.as_slice().iter().enumerate() {
                if x > 0 {
                    used[i] = true;
                }
            }
        }
        used.iter().enumerate().filter(|(_, &u)| u).map(|(i, _)| i).collect()
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.ring.mode() != other.ring.mode() {
            return Err(Error::ModeMismatch);
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.axpy(&self.ring.mode().one(), &ExpVec::zero(self.ring.nvars()), other))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.axpy(&-self.ring.mode().one(), &ExpVec::zero(self.ring.nvars()), other))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn try_scale(&self, c: &Scalar) -> Result<Poly> {
        if !c.same_mode(&self.ring.mode().zero()) {
            return Err(Error::ModeMismatch);
        }
        Ok(self.scale(c))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// `c * x^m * self`; the order is multiplicative so no re-sort is needed.
    pub fn mul_term(&self, c: &Scalar, m: &ExpVec) -> Poly {
        if c.is_zero() {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.mul(m), a * c)).collect(),
        }
    }

    /// `self + c * x^m * g` by a single merge pass.
    pub fn axpy(&self, c: &Scalar, m: &ExpVec, g: &Poly) -> Poly {
        if c.is_zero() || g.is_zero() {
            return self.clone();
        }
        Poly { ring: self.ring.clone(), terms: axpy_terms(self.ring.order(), &self.terms, c, m, &g.terms) }
    }

    pub(crate) fn from_sorted_terms(ring: &PolyRing, terms: Vec<Term>) -> Poly {
        Poly { ring: ring.clone(), terms }
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return self.ring.zero();
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            let (e, c) = &small.terms[0];
            return big.mul_term(c, e);
        }
        let mut acc: HashMap<ExpVec, Scalar> = HashMap::with_capacity(self.len() * other.len());
        for (ea, ca) in &small.terms {
            for (eb, cb) in &big.terms {
                let e = ea.mul(eb);
                let c = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v = &*v + &c,
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = self.ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = self.ring.one();
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Quotient `self / g` when `g` divides `self` exactly, otherwise `None`.
    pub fn div_exact(&self, g: &Poly) -> Option<Poly> {
        let (gm, gc) = g.leading_term()?;
        let ginv = gc.inv().unwrap();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((e, c)) = rem.leading_term() {
            if !gm.divides(e) {
                return None;
            }
            let m = e.div(gm);
            let q = c * &ginv;
            rem = rem.axpy(&-&q, &m, g);
            quot.push((m, q));
        }
        // quotient terms come out in descending order
        Some(Poly { ring: self.ring.clone(), terms: quot })
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.lc() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().unwrap()),
        }
    }

    /// Sum of the terms of total degree exactly `e`.
    pub fn graded_component(&self, e: u32) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|t| t.0.degree() == e).cloned().collect(),
        }
    }

    /// Substitutes `images[i]` for variable `i` and expands in the images' ring.
    pub fn apply_ring_map(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.ring.nvars() {
            return Err(Error::ArityMismatch { expected: self.ring.nvars(), got: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => {
                return Ok(self.clone());
            }
        };
        if images.iter().any(|p| p.ring != target) {
            return Err(Error::RingMismatch);
        }
        if target.mode() != self.ring.mode() {
            return Err(Error::ModeMismatch);
        }
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![target.one(), p.clone()]).collect();
        let mut acc: HashMap<ExpVec, Scalar> = HashMap::new();
        for (e, c) in &self.terms {
            let mut prod = target.constant(c.clone());
            for (i, &k) in e.as_slice().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul_unchecked(&images[i]);
                    powers[i].push(next);
                }
                prod = prod.mul_unchecked(&powers[i][k as usize]);
            }
            for (pe, pc) in prod.terms {
                match acc.get_mut(&pe) {
                    Some(v) => *v = &*v + &pc,
                    None => {
                        acc.insert(pe, pc);
                    }
                }
            }
        }
        Ok(target.from_terms(acc))
    }

    /// Evaluates at a point given by one scalar per variable.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.ring.nvars() {
            return Err(Error::ArityMismatch { expected: self.ring.nvars(), got: point.len() });
        }
        let mut acc = self.ring.mode().zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.as_slice().iter().enumerate() {
                for _ in 0..k {
                    t = &t * &point[i];
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Re-expresses this polynomial in `target` by a variable index map.
    pub fn reindex(&self, target: &PolyRing, map: impl Fn(usize) -> usize) -> Poly {
        let n = target.nvars();
        target.from_terms(self.terms.iter().map(|(e, c)| (e.map_indices(n, &map), c.clone())))
    }

    /// Moves the polynomial into a ring whose variables include all variables used here,
    /// matching variables by name.
    pub fn to_ring(&self, target: &PolyRing) -> Result<Poly> {
        if target.mode() != self.ring.mode() {
            return Err(Error::ModeMismatch);
        }
        if *target == self.ring {
            return Ok(self.clone());
        }
        let mut map = vec![usize::MAX; self.ring.nvars()];
        for i in self.support_vars() {
            let name = &self.ring.names()[i];
            map[i] = target
                .var_index(name)
                .ok_or_else(|| Error::InvalidArgument(format!("variable {name} missing from target ring")))?;
        }
        Ok(self.reindex(target, |i| map[i]))
    }

    /// Maps coefficients into another scalar mode, keeping variables and order.
    pub fn change_mode(&self, mode: ScalarMode) -> Result<Poly> {
        let ring = self.ring.with_mode(mode);
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let c = match (c, mode) {
                (Scalar::Q(q), m) => m.from_rational(q)?,
                (Scalar::Fp(..), ScalarMode::Rational) => return Err(Error::ModeMismatch),
                (Scalar::Fp(v, _), m) => m.from_i64(*v as i64),
            };
            terms.push((e.clone(), c));
        }
        Ok(ring.from_terms(terms))
    }
}

impl<'a> std::ops::Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("polynomial ring mismatch")
    }
}

impl<'a> std::ops::Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl<'a> std::ops::Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-self.ring.mode().one())
    }
}

/// Merge of `a + c * x^m * g` for term lists sorted descending under `order`.
pub(crate) fn axpy_terms(order: MonomialOrder, a: &[Term], c: &Scalar, m: &ExpVec, g: &[Term]) -> Vec<Term> {
    if g.is_empty() || c.is_zero() {
        return a.to_vec();
    }
    let shift = !m.is_one();
    let shifted = |j: usize| -> ExpVec {
        if shift {
            g[j].0.mul(m)
        } else {
            g[j].0.clone()
        }
    };
    let mut out = Vec::with_capacity(a.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let mut ge = shifted(0);
    loop {
        if i == a.len() {
            out.push((ge, &g[j].1 * c));
            for (k, t) in g.iter().enumerate().skip(j + 1) {
                out.push((shifted(k), &t.1 * c));
            }
            break;
        }
        match order.cmp(&a[i].0, &ge) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
                continue;
            }
            Ordering::Less => {
                out.push((ge, &g[j].1 * c));
            }
            Ordering::Equal => {
                let s = &a[i].1 + &(&g[j].1 * c);
                if !s.is_zero() {
                    out.push((ge, s));
                }
                i += 1;
            }
        }
        j += 1;
        if j == g.len() {
            out.extend_from_slice(&a[i..]);
            break;
        }
        ge = shifted(j);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked binary arithmetic on two polynomials of the same ring.
pub fn poly_arith(op: ArithOp, f: &Poly, g: &Poly) -> Result<Poly> {
    match op {
        ArithOp::Add => f.try_add(g),
        ArithOp::Sub => f.try_sub(g),
        ArithOp::Mul => f.try_mul(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> PolyRing {
        PolyRing::grevlex(names.iter().copied(), ScalarMode::Rational).unwrap()
    }

    #[test]
    fn cancellation_and_squares() {
        let r = ring(&["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        assert!((&(&x - &y) + &(&y - &x)).is_zero());
        let lhs = &(&x + &y) * &(&x - &y);
        let rhs = &(&x * &x) - &(&y * &y);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_mod_seven() {
        let r = PolyRing::grevlex(["x"], ScalarMode::prime_field(7).unwrap()).unwrap();
        let x = r.var(0);
        let a = x.scale(&r.mode().from_i64(3));
        let b = x.scale(&r.mode().from_i64(5));
        assert_eq!(&a * &b, &x * &x);
    }

    #[test]
    fn mismatches_are_errors() {
        let r1 = ring(&["x", "y"]);
        let r2 = ring(&["y", "x"]);
        assert_eq!(r1.var(0).try_add(&r2.var(0)), Err(Error::RingMismatch));
        let r3 = PolyRing::grevlex(["x", "y"], ScalarMode::PrimeField(7)).unwrap();
        assert_eq!(r1.var(0).try_mul(&r3.var(0)), Err(Error::ModeMismatch));
    }

    #[test]
    fn graded_components() {
        let r = ring(&["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let f = &(&(&x * &x) + &x) + &r.one();
        assert_eq!(f.graded_component(1), x);
        assert!(r.zero().graded_component(5).is_zero());
        let g = &(&(&x * &x) * &y) + &(&x * &y);
        assert_eq!(g.graded_component(3), &(&x * &x) * &y);
    }

    #[test]
    fn ring_maps() {
        let src = ring(&["x", "y"]);
        let tgt = ring(&["s", "t"]);
        let (s, t) = (tgt.var(0), tgt.var(1));
        let f = &src.var(0) - &src.var(1);
        assert!(f.apply_ring_map(&[t.clone(), t.clone()]).unwrap().is_zero());
        let sq = src.var(0).pow(2);
        let single = ring(&["x"]);
        let sq1 = single.var(0).pow(2);
        let img = sq1.apply_ring_map(&[&s + &t]).unwrap();
        let expect = &(&s.pow(2) + &(&s * &t).scale(&tgt.mode().from_i64(2))) + &t.pow(2);
        assert_eq!(img, expect);
        let xy = &src.var(0) * &src.var(1);
        assert_eq!(xy.apply_ring_map(&[s.pow(2), s.pow(3)]).unwrap(), s.pow(5));
        assert!(matches!(sq.apply_ring_map(&[s]), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn orders_behave() {
        let a = ExpVec::from_slice(&[1, 0, 1]);
        let b = ExpVec::from_slice(&[0, 2, 0]);
        assert_eq!(MonomialOrder::GrevLex.cmp(&a, &b), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
        // eliminated variable dominates in a block order
        let c = ExpVec::from_slice(&[1, 0, 0]);
        let d = ExpVec::from_slice(&[0, 5, 5]);
        assert_eq!(MonomialOrder::Block(1).cmp(&c, &d), Ordering::Greater);
    }

    #[test]
    fn monomial_enumeration() {
        let r = ring(&["a", "b", "c"]);
        assert_eq!(r.monomials_of_degree(2).len(), 6);
        assert_eq!(r.monomials_of_degree(0).len(), 1);
    }
}

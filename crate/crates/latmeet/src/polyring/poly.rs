use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use super::{Monomial, Ring};
use crate::Scalar;

/// Two polynomials from different rings were combined.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomials belong to different rings (variable set or order mismatch)")]
pub struct RingMismatch;

/// One coefficient-monomial pair.
pub type Term<C> = (C, Monomial);

/// A polynomial in canonical form: terms strictly decreasing in the ring's
/// monomial order, coefficients nonzero.
#[derive(Debug, Clone)]
pub struct Polynomial<C: Scalar> {
    ring: Ring,
    terms: Vec<Term<C>>,
}

impl<C: Scalar> PartialEq for Polynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl<C: Scalar> Eq for Polynomial<C> {}

impl<C: Scalar> Polynomial<C> {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::constant(ring, C::one())
    }

    pub fn constant(ring: &Ring, c: C) -> Self {
        let terms =
            if c.is_zero() { Vec::new() } else { vec![(c, Monomial::one(ring.nvars()))] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(C::one(), Monomial::var(i, ring.nvars()))],
        }
    }

    pub fn monomial(ring: &Ring, c: C, m: Monomial) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
        let terms = if c.is_zero() { Vec::new() } else { vec![(c, m)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds from arbitrary terms: combines like monomials, drops zeros, sorts.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = Term<C>>) -> Self {
        let mut map: HashMap<Monomial, C> = HashMap::new();
        for (c, m) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
            match map.get_mut(&m) {
                Some(acc) => *acc = acc.clone() + c,
                None => {
                    map.insert(m, c);
                }
            }
        }
        let mut terms: Vec<Term<C>> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (c, m)).collect();
        terms.sort_by(|a, b| ring.cmp(&b.1, &a.1));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(_, m)| m.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m0)) => {
                let d = m0.degree();
                self.terms.iter().all(|(_, m)| m.degree() == d)
            }
        }
    }

    pub fn leading_term(&self) -> Option<&Term<C>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.first().map(|(c, _)| c)
    }

    pub fn same_ring(&self, other: &Self) -> Result<(), RingMismatch> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, RingMismatch> {
        self.same_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, RingMismatch> {
        self.same_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, RingMismatch> {
        self.same_ring(other)?;
        let mut acc: HashMap<Monomial, C> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ca, ma) in &self.terms {
            for (cb, mb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.clone() * cb.clone();
                match acc.get_mut(&m) {
                    Some(v) => *v = v.clone() + c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<Term<C>> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (c, m)).collect();
        terms.sort_by(|a, b| self.ring.cmp(&b.1, &a.1));
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Merge-add of two canonical term lists (subtracting when `sub`).
    fn merge(&self, other: &Self, sub: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ca, ma) = &self.terms[i];
            let (cb, mb) = &other.terms[j];
            match self.ring.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ca.clone(), ma.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if sub { -cb.clone() } else { cb.clone() };
                    out.push((c, mb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if sub {
                        ca.clone() - cb.clone()
                    } else {
                        ca.clone() + cb.clone()
                    };
                    if !c.is_zero() {
                        out.push((c, ma.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (cb, mb) in &other.terms[j..] {
            let c = if sub { -cb.clone() } else { cb.clone() };
            out.push((c, mb.clone()));
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms =
            self.terms.iter().map(|(a, m)| (a.clone() * c.clone(), m.clone())).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Multiplies by `c * m`; the term order is preserved, so no re-sort.
    pub fn mul_term(&self, c: &C, m: &Monomial) -> Self {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(a, ma)| (a.clone() * c.clone(), ma.mul(m)))
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                if lc.is_one() {
                    self.clone()
                } else {
                    let inv = C::one() / lc.clone();
                    self.scale(&inv)
                }
            }
        }
    }

    /// Re-sorts the terms under another ring's order (same variable set).
    pub fn reorder(&self, ring: &Ring) -> Self {
        assert_eq!(ring.vars(), self.ring.vars(), "reorder across variable sets");
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.cmp(&b.1, &a.1));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        let n = self.ring.nvars();
        let mut used = vec![false; n];
        for (_, m) in &self.terms {
            for v in m.support() {
                used[v] = true;
            }
        }
        (0..n).filter(|&i| used[i]).collect()
    }

    /// Maps the polynomial into `target`, whose variable set must contain every
    /// variable in this polynomial's support (matched by name).
    pub fn project_to(&self, target: &Ring) -> Result<Self, RingMismatch> {
        let mut map = Vec::with_capacity(self.ring.nvars());
        for name in self.ring.vars().names() {
            map.push(target.vars().index_of(name));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    match map[i] {
                        Some(t) => exps[t] = e,
                        None => return Err(RingMismatch),
                    }
                }
            }
            terms.push((c.clone(), Monomial::from_exps(exps)));
        }
        Ok(Polynomial::from_terms(target, terms))
    }
}

impl<C: Scalar> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl<C: Scalar> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl<C: Scalar> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl<C: Scalar> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        let terms = self.terms.iter().map(|(c, m)| (-c.clone(), m.clone())).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl<C: Scalar> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", m.display(vars))?;
            } else {
                write!(f, "{}*{}", mag, m.display(vars))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::MonomialOrder;
    use crate::Rat;

    fn ring() -> Ring {
        Ring::degrevlex(["x", "y", "z"])
    }

    fn p(r: &Ring, s: &str) -> Polynomial<Rat> {
        r.parse_poly(s).unwrap()
    }

    #[test]
    fn canonical_form_combines_and_sorts() {
        let r = ring();
        let f = Polynomial::from_terms(
            &r,
            vec![
                (Rat::from_integer(1.into()), Monomial::from_exps(vec![1, 0, 1])),
                (Rat::from_integer(2.into()), Monomial::from_exps(vec![0, 2, 0])),
                (Rat::from_integer((-1).into()), Monomial::from_exps(vec![1, 0, 1])),
            ],
        );
        assert_eq!(f.num_terms(), 1);
        assert_eq!(f.to_string(), "2*y^2");
    }

    #[test]
    fn arithmetic_round_trip() {
        let r = ring();
        let f = p(&r, "x*y - z^2");
        let g = p(&r, "x*y + z^2");
        assert_eq!((&f + &g).to_string(), "2*x*y");
        assert_eq!((&f - &g).to_string(), "-2*z^2");
        assert_eq!((&f * &g).to_string(), "x^2*y^2 - z^4");
        let diff = &(&f * &g) - &(&g * &f);
        assert!(diff.is_zero());
    }

    #[test]
    fn monic_normalizes_leading_coefficient() {
        let r = ring();
        let f = p(&r, "3*x^2 - 6*y*z");
        assert_eq!(f.monic().to_string(), "x^2 - 2*y*z");
    }

    #[test]
    fn reorder_changes_leading_term() {
        let lexr = Ring::lex(["x", "y", "z"]);
        let f = p(&lexr, "x*z - y^3");
        assert_eq!(f.leading_monomial().unwrap(), &Monomial::from_exps(vec![1, 0, 1]));
        let g = f.reorder(&lexr.with_order(MonomialOrder::DegRevLex));
        assert_eq!(g.leading_monomial().unwrap(), &Monomial::from_exps(vec![0, 3, 0]));
    }

    #[test]
    fn project_to_smaller_ring() {
        let big = Ring::degrevlex(["x", "y", "z"]);
        let small = Ring::degrevlex(["x", "z"]);
        let f = p(&big, "x*z - z^2");
        let g = f.project_to(&small).unwrap();
        assert_eq!(g.to_string(), "x*z - z^2");
        let bad = p(&big, "y");
        assert!(bad.project_to(&small).is_err());
    }

    #[test]
    fn ring_mismatch_is_detected() {
        let a = Ring::degrevlex(["x", "y"]);
        let b = Ring::lex(["x", "y"]);
        let f = p(&a, "x + y");
        let g = p(&b, "x + y");
        assert_eq!(f.checked_add(&g), Err(RingMismatch));
    }
}

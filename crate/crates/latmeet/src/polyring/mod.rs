//! Multivariate polynomial rings over an exact coefficient field.
//!
//! A [`Ring`] is a named variable set plus a global monomial order. Polynomials
//! are kept in canonical form: terms strictly decreasing in the ring's order,
//! no zero coefficients, like monomials combined. Everything downstream
//! (Buchberger, normal forms, Koszul differentials) leans on that invariant.

mod parse;
mod poly;

pub use parse::ParseError;
pub use poly::{Polynomial, RingMismatch, Term};

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// An ordered set of variable names.
///
/// Names are significant: lattice elements become variables, files round-trip
/// through them. Index order is the precedence order (index 0 is the largest
/// variable in any of the supported monomial orders).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    /// Builds a variable set; names must be distinct and nonempty.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(!n.is_empty(), "empty variable name");
            assert!(
                !names[..i].contains(n),
                "duplicate variable name {n:?} in variable set"
            );
        }
        VarSet { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A power product of the ring variables; exponent vector plus cached degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars], deg: 0 }
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps, deg: 1 }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Variables with positive exponent, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, deg: self.deg + other.deg }
    }

    pub fn mul_var(&self, v: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[v] += 1;
        m.deg += 1;
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if exact.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Some(Monomial { exps, deg: other.deg - self.deg })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> =
            self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        Monomial::from_exps(exps)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> =
            self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial::from_exps(exps)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Renders with the given names, e.g. `x*y1^2`; `1` for the trivial monomial.
    pub fn display(&self, vars: &VarSet) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(vars.name(i).to_string()),
                _ => parts.push(format!("{}^{}", vars.name(i), e)),
            }
        }
        parts.join("*")
    }
}

/// Global monomial orders.
///
/// `Elim` is the block order that makes the flagged variables eliminable:
/// monomials are compared degrevlex on the flagged block first, then degrevlex
/// on the rest. Any Gröbner basis under it intersects cleanly with the subring
/// on the unflagged variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    DegLex,
    DegRevLex,
    Elim { elim: Vec<bool> },
}

/// Degrevlex comparison of exponent slices restricted to indices where `mask`
/// allows (None = all). Larger degree wins; on ties the monomial whose trailing
/// difference is negative wins.
fn degrevlex_cmp(a: &[u32], b: &[u32], mask: Option<(&[bool], bool)>) -> Ordering {
    let included = |i: usize| match mask {
        None => true,
        Some((m, want)) => m[i] == want,
    };
    let (mut da, mut db) = (0u64, 0u64);
    for i in 0..a.len() {
        if included(i) {
            da += a[i] as u64;
            db += b[i] as u64;
        }
    }
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.len()).rev() {
        if included(i) && a[i] != b[i] {
            // smaller exponent on the last differing variable = larger monomial
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Lex => {
                for i in 0..a.exps.len() {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegLex => match a.deg.cmp(&b.deg) {
                Ordering::Equal => MonomialOrder::Lex.cmp(a, b),
                ord => ord,
            },
            MonomialOrder::DegRevLex => degrevlex_cmp(&a.exps, &b.exps, None),
            MonomialOrder::Elim { elim } => {
                match degrevlex_cmp(&a.exps, &b.exps, Some((elim, true))) {
                    Ordering::Equal => degrevlex_cmp(&a.exps, &b.exps, Some((elim, false))),
                    ord => ord,
                }
            }
        }
    }

    /// Short stable name, used in reports.
    pub fn label(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::Elim { .. } => "elim",
        }
    }
}

/// A polynomial ring context: variables plus order. Cheap to clone and compare;
/// every polynomial carries one so that cross-ring mixups are caught.
#[derive(Debug, Clone)]
pub struct Ring {
    vars: Arc<VarSet>,
    order: MonomialOrder,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars)
            && self.order == other.order
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new(vars: VarSet, order: MonomialOrder) -> Self {
        if let MonomialOrder::Elim { elim } = &order {
            assert_eq!(elim.len(), vars.len(), "elimination mask length mismatch");
        }
        Ring { vars: Arc::new(vars), order }
    }

    pub fn degrevlex<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Ring::new(VarSet::new(names), MonomialOrder::DegRevLex)
    }

    pub fn lex<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Ring::new(VarSet::new(names), MonomialOrder::Lex)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Same variables, different order. Shares the variable set.
    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        if let MonomialOrder::Elim { elim } = &order {
            assert_eq!(elim.len(), self.vars.len(), "elimination mask length mismatch");
        }
        Ring { vars: Arc::clone(&self.vars), order }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// All monomials of total degree `d`, in no particular order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let n = self.nvars();
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        fn rec(exps: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Monomial>) {
            if i + 1 == exps.len() {
                exps[i] = left;
                out.push(Monomial::from_exps(exps.clone()));
                exps[i] = 0;
                return;
            }
            for e in 0..=left {
                exps[i] = e;
                rec(exps, i + 1, left - e, out);
            }
            exps[i] = 0;
        }
        if n == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(&mut exps, 0, d, &mut out);
        out
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[{}] ({})", self.vars.names().join(", "), self.order.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn degrevlex_prefers_incomparable_product() {
        // variables x > y1 > y2 > y3 > z
        let ord = MonomialOrder::DegRevLex;
        let y1y2 = m(&[0, 1, 1, 0, 0]);
        let xz = m(&[1, 0, 0, 0, 1]);
        assert_eq!(ord.cmp(&y1y2, &xz), Ordering::Greater);
        // x*y1*z vs x*y3*z: the one avoiding the later variable wins
        let xy1z = m(&[1, 1, 0, 0, 1]);
        let xy3z = m(&[1, 0, 0, 1, 1]);
        assert_eq!(ord.cmp(&xy1z, &xy3z), Ordering::Greater);
        // x*y3^2*z vs x^2*z^2
        let xy3y3z = m(&[1, 0, 0, 2, 1]);
        let x2z2 = m(&[2, 0, 0, 0, 2]);
        assert_eq!(ord.cmp(&xy3y3z, &x2z2), Ordering::Greater);
    }

    #[test]
    fn lex_follows_first_difference() {
        let ord = MonomialOrder::Lex;
        // x1 > x2 > y1 > y2: x1*y2 beats x2*y1 because of x1
        let x1y2 = m(&[1, 0, 0, 1]);
        let x2y1 = m(&[0, 1, 1, 0]);
        assert_eq!(ord.cmp(&x1y2, &x2y1), Ordering::Greater);
        // degree does not matter for lex
        let x1 = m(&[1, 0, 0, 0]);
        let x2cubed = m(&[0, 3, 0, 0]);
        assert_eq!(ord.cmp(&x1, &x2cubed), Ordering::Greater);
    }

    #[test]
    fn deglex_breaks_degree_ties_by_lex() {
        let ord = MonomialOrder::DegLex;
        let x1 = m(&[1, 0]);
        let x2sq = m(&[0, 2]);
        assert_eq!(ord.cmp(&x1, &x2sq), Ordering::Less);
        let x1x2 = m(&[1, 1]);
        let x2sq = m(&[0, 2]);
        assert_eq!(ord.cmp(&x1x2, &x2sq), Ordering::Greater);
    }

    #[test]
    fn elim_order_separates_blocks() {
        // eliminate variable 0; any monomial containing it beats any that avoids it
        let ord = MonomialOrder::Elim { elim: vec![true, false, false] };
        let w = m(&[1, 0, 0]);
        let xy5 = m(&[0, 3, 2]);
        assert_eq!(ord.cmp(&w, &xy5), Ordering::Greater);
        // within the kept block: degrevlex
        let xy = m(&[0, 1, 1]);
        let y2 = m(&[0, 0, 2]);
        assert_eq!(ord.cmp(&xy, &y2), Ordering::Greater);
    }

    #[test]
    fn monomial_arithmetic() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 1, 1]);
        assert_eq!(a.lcm(&b), m(&[2, 1, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 1, 0]));
        assert!(!a.divides(&b));
        assert!(a.gcd(&b).divides(&a));
        assert_eq!(b.div_into(&a.mul(&b)), Some(a.clone()));
        assert!(!a.coprime(&b));
        assert!(m(&[1, 0, 0]).coprime(&m(&[0, 0, 2])));
    }

    #[test]
    fn monomials_of_degree_counts() {
        let r = Ring::degrevlex(["x", "y", "z"]);
        assert_eq!(r.monomials_of_degree(0).len(), 1);
        assert_eq!(r.monomials_of_degree(1).len(), 3);
        assert_eq!(r.monomials_of_degree(4).len(), 15); // C(4+2, 2)
    }
}

//! Gröbner bases via Buchberger's algorithm, plus the ideal operations built
//! on them: membership, elimination, ideal quotients, and leading ideals.
//!
//! Bases are always brought to reduced form (monic, minimal, tail-reduced,
//! sorted), so two ideals are equal iff their reduced bases are equal
//! term-for-term. All pair selection and reduction is deterministic.

use std::collections::HashSet;

use thiserror::Error;

use crate::polyring::{Monomial, MonomialOrder, Polynomial, Ring, RingMismatch, VarSet};
use crate::{Caps, Scalar};

/// Why a Gröbner-level computation failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("computation exceeded resource limits: {0}")]
    ResourceLimit(String),
    #[error(transparent)]
    RingMismatch(#[from] RingMismatch),
    #[error("operation requires a degrevlex basis, found {0}")]
    OrderMismatch(String),
    #[error("operation requires homogeneous generators")]
    NotHomogeneous,
    #[error("exact division failed: {0}")]
    DivisionFailed(String),
}

/// A finitely generated ideal: a ring plus a list of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal<C: Scalar> {
    ring: Ring,
    gens: Vec<Polynomial<C>>,
}

impl<C: Scalar> Ideal<C> {
    /// Builds an ideal; zero generators are dropped. Panics if a generator
    /// belongs to a different ring (that is a programming error, not data).
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Polynomial<C>>) -> Self {
        let gens: Vec<Polynomial<C>> = gens
            .into_iter()
            .inspect(|g| assert_eq!(g.ring(), ring, "generator from a different ring"))
            .filter(|g| !g.is_zero())
            .collect();
        Ideal { ring: ring.clone(), gens }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<C>] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    /// The same generators re-sorted under another order on the same variables.
    pub fn reorder(&self, ring: &Ring) -> Ideal<C> {
        Ideal {
            ring: ring.clone(),
            gens: self.gens.iter().map(|g| g.reorder(ring)).collect(),
        }
    }

    /// Sum of ideals (concatenated generators).
    pub fn plus(&self, other: &Ideal<C>) -> Result<Ideal<C>, RingMismatch> {
        if self.ring != other.ring {
            return Err(RingMismatch);
        }
        let gens = self.gens.iter().chain(&other.gens).cloned().collect::<Vec<_>>();
        Ok(Ideal { ring: self.ring.clone(), gens })
    }

    pub fn groebner(&self, caps: &Caps) -> Result<GroebnerBasis<C>, GroebnerError> {
        buchberger(self, caps)
    }
}

/// A reduced Gröbner basis: monic, minimal, tail-reduced, sorted by increasing
/// leading monomial. Canonical for the (ideal, order) pair.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<C: Scalar> {
    ring: Ring,
    basis: Vec<Polynomial<C>>,
    pair_reductions: usize,
}

impl<C: Scalar> PartialEq for GroebnerBasis<C> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.basis == other.basis
    }
}

impl<C: Scalar> Eq for GroebnerBasis<C> {}

impl<C: Scalar> GroebnerBasis<C> {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial<C>] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Number of S-pair reductions Buchberger performed (diagnostic).
    pub fn pair_reductions(&self) -> usize {
        self.pair_reductions
    }

    pub fn max_degree(&self) -> u32 {
        self.basis.iter().map(Polynomial::degree).max().unwrap_or(0)
    }

    /// The ideal of leading terms.
    pub fn leading_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.ring.nvars(),
            self.basis.iter().filter_map(|g| g.leading_monomial().cloned()),
        )
    }

    /// Remainder of `f` on division by the basis; the canonical representative
    /// of `f` modulo the ideal.
    pub fn normal_form(&self, f: &Polynomial<C>) -> Result<Polynomial<C>, RingMismatch> {
        if f.ring() != &self.ring {
            return Err(RingMismatch);
        }
        Ok(divide(f, &self.basis)?.1)
    }

    pub fn contains(&self, f: &Polynomial<C>) -> Result<bool, RingMismatch> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Whether the basis generates the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.basis.iter().any(|g| g.degree() == 0 && !g.is_zero())
    }
}

/// Multivariate division with remainder: `f = sum q_i * d_i + r` where no term
/// of `r` is divisible by any leading monomial of the divisors. At each step
/// the first divisor (in list order) whose leading monomial divides the
/// current leading term is used, so the output is deterministic.
pub fn divide<C: Scalar>(
    f: &Polynomial<C>,
    divisors: &[Polynomial<C>],
) -> Result<(Vec<Polynomial<C>>, Polynomial<C>), RingMismatch> {
    let ring = f.ring();
    for d in divisors {
        if d.ring() != ring {
            return Err(RingMismatch);
        }
    }
    let mut quotients = vec![Polynomial::zero(ring); divisors.len()];
    let mut remainder: Vec<(C, Monomial)> = Vec::new();
    let mut work = f.clone();
    'outer: while let Some((lc, lm)) = work.leading_term().cloned() {
        for (k, d) in divisors.iter().enumerate() {
            let Some((dc, dm)) = d.leading_term() else { continue };
            if let Some(q) = dm.div_into(&lm) {
                let coef = lc.clone() / dc.clone();
                let step = Polynomial::monomial(ring, coef.clone(), q.clone());
                quotients[k] = quotients[k].checked_add(&step).expect("same ring");
                work = work
                    .checked_sub(&d.mul_term(&coef, &q))
                    .expect("same ring");
                continue 'outer;
            }
        }
        // No divisor applies: the leading term goes to the remainder. Terms
        // are peeled in decreasing order, so a plain push keeps canonicity.
        remainder.push((lc.clone(), lm.clone()));
        work = work
            .checked_sub(&Polynomial::monomial(ring, lc, lm))
            .expect("same ring");
    }
    Ok((quotients, Polynomial::from_terms(ring, remainder)))
}

/// Remainder only.
pub fn normal_form<C: Scalar>(
    f: &Polynomial<C>,
    divisors: &[Polynomial<C>],
) -> Result<Polynomial<C>, RingMismatch> {
    Ok(divide(f, divisors)?.1)
}

fn spolynomial<C: Scalar>(f: &Polynomial<C>, g: &Polynomial<C>) -> Polynomial<C> {
    let (fc, fm) = f.leading_term().expect("nonzero");
    let (gc, gm) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&(C::one() / fc.clone()), &fm.div_into(&l).expect("lcm divisible"));
    let b = g.mul_term(&(C::one() / gc.clone()), &gm.div_into(&l).expect("lcm divisible"));
    a.checked_sub(&b).expect("same ring")
}

/// Buchberger's algorithm with the normal selection strategy (smallest pair
/// lcm first) and the coprimality and chain criteria.
pub fn buchberger<C: Scalar>(
    ideal: &Ideal<C>,
    caps: &Caps,
) -> Result<GroebnerBasis<C>, GroebnerError> {
    let ring = ideal.ring().clone();
    let mut basis: Vec<Polynomial<C>> =
        autoreduce(&ring, ideal.gens().iter().map(|g| g.monic()).collect());

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    let mut reductions = 0usize;

    while !pairs.is_empty() {
        // Normal strategy: smallest lcm in the ring order; ties by index pair.
        let mut best = 0;
        let mut best_key = pair_lcm(&basis, pairs[0]);
        for (k, &p) in pairs.iter().enumerate().skip(1) {
            let key = pair_lcm(&basis, p);
            let ord = ring.cmp(&key, &best_key).then_with(|| p.cmp(&pairs[best]));
            if ord == std::cmp::Ordering::Less {
                best = k;
                best_key = key;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        done.insert((i, j));

        let (lm_i, lm_j) = (
            basis[i].leading_monomial().expect("nonzero"),
            basis[j].leading_monomial().expect("nonzero"),
        );
        if lm_i.coprime(lm_j) {
            continue;
        }
        let lcm = lm_i.lcm(lm_j);
        let chain_skip = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().expect("nonzero").divides(&lcm)
                && done.contains(&key(i, k))
                && done.contains(&key(k, j))
        });
        if chain_skip {
            continue;
        }

        reductions += 1;
        if reductions > caps.max_pair_reductions {
            return Err(GroebnerError::ResourceLimit(format!(
                "more than {} S-pair reductions",
                caps.max_pair_reductions
            )));
        }
        let s = spolynomial(&basis[i], &basis[j]);
        let nf = normal_form(&s, &basis)?;
        if nf.is_zero() {
            continue;
        }
        if nf.degree() > caps.max_degree {
            return Err(GroebnerError::ResourceLimit(format!(
                "basis element of degree {} exceeds cap {}",
                nf.degree(),
                caps.max_degree
            )));
        }
        let t = basis.len();
        basis.push(nf.monic());
        for k in 0..t {
            pairs.push((k, t));
        }
    }

    let basis = reduce_basis(&ring, basis);
    Ok(GroebnerBasis { ring, basis, pair_reductions: reductions })
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn pair_lcm<C: Scalar>(basis: &[Polynomial<C>], (i, j): (usize, usize)) -> Monomial {
    basis[i]
        .leading_monomial()
        .expect("nonzero")
        .lcm(basis[j].leading_monomial().expect("nonzero"))
}

/// Autoreduction of an arbitrary generating set: replaces each generator by
/// its normal form against the others until stable. Unlike [`reduce_basis`]
/// this never merely discards a generator, so it preserves the ideal and is
/// safe on input that is not yet a Gröbner basis.
fn autoreduce<C: Scalar>(ring: &Ring, gens: Vec<Polynomial<C>>) -> Vec<Polynomial<C>> {
    let mut gens: Vec<Polynomial<C>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    loop {
        gens.sort_by(|a, b| {
            ring.cmp(
                a.leading_monomial().expect("nonzero"),
                b.leading_monomial().expect("nonzero"),
            )
        });
        let mut changed = false;
        let mut i = 0;
        while i < gens.len() {
            let others: Vec<Polynomial<C>> = gens
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, g)| g.clone())
                .collect();
            let nf = normal_form(&gens[i], &others).expect("same ring").monic();
            if nf == gens[i] {
                i += 1;
            } else if nf.is_zero() {
                gens.remove(i);
                changed = true;
            } else {
                gens[i] = nf;
                changed = true;
                i += 1;
            }
        }
        if !changed {
            return gens;
        }
    }
}

/// Brings a **Gröbner basis** to reduced form: monic, minimal leading terms,
/// fully tail-reduced, sorted by increasing leading monomial. Dropping an
/// element whose leading term another divides is only ideal-preserving when
/// the input is already a Gröbner basis.
fn reduce_basis<C: Scalar>(ring: &Ring, gens: Vec<Polynomial<C>>) -> Vec<Polynomial<C>> {
    let mut gens: Vec<Polynomial<C>> =
        gens.into_iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    gens.sort_by(|a, b| {
        ring.cmp(
            a.leading_monomial().expect("nonzero"),
            b.leading_monomial().expect("nonzero"),
        )
    });
    // Minimal: keep a generator only if no kept one divides its leading term.
    // (Divisibility implies order-smaller, so one ascending pass is enough.)
    let mut minimal: Vec<Polynomial<C>> = Vec::with_capacity(gens.len());
    for g in gens {
        let lm = g.leading_monomial().expect("nonzero");
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().expect("nonzero").divides(lm))
        {
            minimal.push(g);
        }
    }
    // Tail-reduce each element against the rest. Leading terms are pairwise
    // indivisible, so these passes never change a leading term and the
    // reduced property only depends on the (fixed) leading terms.
    let n = minimal.len();
    for i in 0..n {
        let others: Vec<Polynomial<C>> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, g)| g.clone())
            .collect();
        minimal[i] = normal_form(&minimal[i], &others).expect("same ring").monic();
    }
    minimal
}

/// Eliminates the given variables: returns generators of `I ∩ K[kept vars]`
/// as an ideal of a fresh degrevlex ring on the kept variables.
pub fn eliminate<C: Scalar>(
    ideal: &Ideal<C>,
    drop_vars: &[usize],
    caps: &Caps,
) -> Result<Ideal<C>, GroebnerError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut elim = vec![false; n];
    for &v in drop_vars {
        assert!(v < n, "variable index out of range");
        elim[v] = true;
    }
    let elim_ring = ring.with_order(MonomialOrder::Elim { elim: elim.clone() });
    let gb = buchberger(&ideal.reorder(&elim_ring), caps)?;

    let kept_names: Vec<String> = (0..n)
        .filter(|&v| !elim[v])
        .map(|v| ring.vars().name(v).to_string())
        .collect();
    let target = Ring::new(VarSet::new(kept_names), MonomialOrder::DegRevLex);
    let mut out = Vec::new();
    for g in gb.basis() {
        if g.support().iter().all(|&v| !elim[v]) {
            out.push(g.project_to(&target).expect("support is within kept variables"));
        }
    }
    Ok(Ideal::new(&target, out))
}

/// The ideal quotient `I : (f)` for nonzero `f`, via `I ∩ (f)` (computed with
/// one auxiliary variable and elimination) followed by exact division by `f`.
pub fn colon<C: Scalar>(
    ideal: &Ideal<C>,
    f: &Polynomial<C>,
    caps: &Caps,
) -> Result<Ideal<C>, GroebnerError> {
    let ring = ideal.ring();
    if f.ring() != ring {
        return Err(GroebnerError::RingMismatch(RingMismatch));
    }
    if f.is_zero() {
        return Err(GroebnerError::DivisionFailed("quotient by the zero polynomial".into()));
    }

    // Extended ring [aux, original vars] with an elimination order on aux.
    let mut aux = "t".to_string();
    while ring.vars().index_of(&aux).is_some() {
        aux.push('_');
    }
    let mut names = vec![aux];
    names.extend(ring.vars().names().iter().cloned());
    let mut elim = vec![false; names.len()];
    elim[0] = true;
    let ext = Ring::new(VarSet::new(names), MonomialOrder::Elim { elim });

    let lift = |p: &Polynomial<C>| p.project_to(&ext).expect("extension contains all variables");
    let t = Polynomial::<C>::var(&ext, 0);
    let one = Polynomial::<C>::one(&ext);
    let mut gens = Vec::with_capacity(ideal.gens().len() + 1);
    for g in ideal.gens() {
        gens.push(&t * &lift(g));
    }
    gens.push(&(&one - &t) * &lift(f));

    let gb = buchberger(&Ideal::new(&ext, gens), caps)?;
    let mut out = Vec::new();
    for g in gb.basis() {
        if !g.support().contains(&0) {
            // g generates I ∩ (f); divide by f exactly.
            let back = g.project_to(ring).expect("no aux variable left");
            let (q, r) = divide(&back, std::slice::from_ref(f))?;
            if !r.is_zero() {
                return Err(GroebnerError::DivisionFailed(format!(
                    "{back} is not a multiple of {f}"
                )));
            }
            out.push(q.into_iter().next().expect("one divisor"));
        }
    }
    Ok(Ideal::new(ring, out))
}

/// The ideal quotient `I : (v)` where `v` is the last ring variable, read off
/// a reduced degrevlex basis of a homogeneous ideal: any basis element whose
/// leading monomial the last variable divides is divisible by it throughout,
/// and dividing those elements (keeping the rest) presents the quotient.
pub fn colon_by_last_var_revlex<C: Scalar>(
    gb: &GroebnerBasis<C>,
) -> Result<GroebnerBasis<C>, GroebnerError> {
    let ring = gb.ring();
    if ring.order() != &MonomialOrder::DegRevLex {
        return Err(GroebnerError::OrderMismatch(ring.order().label().to_string()));
    }
    if !gb.basis().iter().all(Polynomial::is_homogeneous) {
        return Err(GroebnerError::NotHomogeneous);
    }
    let last = ring.nvars() - 1;
    let v = Monomial::var(last, ring.nvars());
    let mut out = Vec::with_capacity(gb.len());
    for g in gb.basis() {
        let lm = g.leading_monomial().expect("nonzero");
        if lm.exp(last) > 0 {
            let terms: Vec<(C, Monomial)> = g
                .terms()
                .iter()
                .map(|(c, m)| {
                    let q = v.div_into(m).expect(
                        "in degrevlex a homogeneous element with leading term \
                         divisible by the last variable is divisible throughout",
                    );
                    (c.clone(), q)
                })
                .collect();
            out.push(Polynomial::from_terms(ring, terms));
        } else {
            out.push(g.clone());
        }
    }
    let basis = reduce_basis(ring, out);
    Ok(GroebnerBasis { ring: ring.clone(), basis, pair_reductions: 0 })
}

/// Whether two ideals of the same ring are equal, decided by reduced bases.
pub fn ideal_equal<C: Scalar>(
    a: &Ideal<C>,
    b: &Ideal<C>,
    caps: &Caps,
) -> Result<bool, GroebnerError> {
    if a.ring() != b.ring() {
        return Err(GroebnerError::RingMismatch(RingMismatch));
    }
    Ok(buchberger(a, caps)? == buchberger(b, caps)?)
}

/// A monomial ideal, kept as its unique minimal generating set, sorted by
/// (degree, exponents). Equality is equality of ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut gens: Vec<Monomial> = gens
            .into_iter()
            .inspect(|m| assert_eq!(m.nvars(), nvars, "monomial arity mismatch"))
            .collect();
        gens.sort_by(|a, b| (a.degree(), a.exps()).cmp(&(b.degree(), b.exps())));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for m in gens {
            if !minimal.iter().any(|g| g.divides(&m)) {
                minimal.push(m);
            }
        }
        MonomialIdeal { nvars, gens: minimal }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    pub fn max_gen_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// All generators have the same degree.
    pub fn is_equigenerated(&self) -> bool {
        self.gens.windows(2).all(|w| w[0].degree() == w[1].degree())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|m| m.exps().iter().all(|&e| e <= 1))
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn plus(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.nvars, other.nvars);
        MonomialIdeal::new(self.nvars, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn plus_monomial(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().cloned().chain([m.clone()]))
    }

    /// The colon ideal `M : m`, generated by `g / gcd(g, m)`.
    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(
            self.nvars,
            self.gens.iter().map(|g| g.gcd(m).div_into(g).expect("gcd divides")),
        )
    }

    /// Krull dimension of the quotient by this ideal: the largest number of
    /// variables whose coordinate subspace avoids every generator's support.
    /// `None` when the ideal is the whole ring (empty quotient).
    pub fn dim_quotient(&self) -> Option<usize> {
        if self.is_unit() {
            return None;
        }
        assert!(self.nvars <= 24, "dimension search enumerates variable subsets");
        let supports: Vec<u32> = self
            .gens
            .iter()
            .map(|g| g.support().iter().fold(0u32, |acc, &v| acc | (1 << v)))
            .collect();
        let mut best = 0usize;
        for t in 0u32..(1 << self.nvars) {
            if t.count_ones() as usize > best
                && supports.iter().all(|&s| s & !t != 0)
            {
                best = t.count_ones() as usize;
            }
        }
        Some(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rat, RatPoly};

    fn caps() -> Caps {
        Caps::default()
    }

    fn ring_xyz() -> Ring {
        Ring::degrevlex(["x", "y1", "y2", "y3", "z"])
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal<Rat> {
        Ideal::new(r, gens.iter().map(|s| r.parse_poly::<Rat>(s).unwrap()))
    }

    fn strings(polys: &[RatPoly]) -> Vec<String> {
        polys.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn buchberger_on_incomparable_pair_relations() {
        // Three relations y_i*y_j - x*z; the reduced basis grows the two
        // degree-4 elements and one degree-5 element with the predicted shape.
        let r = ring_xyz();
        let i = ideal(&r, &["y1*y2 - x*z", "y1*y3 - x*z", "y2*y3 - x*z"]);
        let gb = i.groebner(&caps()).unwrap();
        assert_eq!(
            strings(gb.basis()),
            vec![
                "y2*y3 - x*z",
                "y1*y3 - x*z",
                "y1*y2 - x*z",
                "x*y2*z - x*y3*z",
                "x*y1*z - x*y3*z",
                "x*y3^2*z - x^2*z^2",
            ]
        );
        // S-pairs of the final basis all reduce to zero.
        for a in 0..gb.len() {
            for b in (a + 1)..gb.len() {
                let s = spolynomial(&gb.basis()[a], &gb.basis()[b]);
                assert!(gb.normal_form(&s).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn normal_form_and_membership() {
        let r = ring_xyz();
        let i = ideal(&r, &["y1*y2 - x*z", "y1*y3 - x*z", "y2*y3 - x*z"]);
        let gb = i.groebner(&caps()).unwrap();
        let f = r.parse_poly::<Rat>("x*y1*z - x*y2*z").unwrap();
        assert!(gb.contains(&f).unwrap());
        let g = r.parse_poly::<Rat>("y1*y2").unwrap();
        assert!(!gb.contains(&g).unwrap());
        let nf = gb.normal_form(&g).unwrap();
        assert_eq!(nf.to_string(), "x*z");
        assert_eq!(gb.normal_form(&nf).unwrap(), nf);
    }

    #[test]
    fn division_produces_certificate() {
        let r = ring_xyz();
        let i = ideal(&r, &["y1*y2 - x*z", "y1*y3 - x*z", "y2*y3 - x*z"]);
        let gb = i.groebner(&caps()).unwrap();
        let f = r.parse_poly::<Rat>("y1^2*y2*y3 + x*y3^2*z").unwrap();
        let (q, rem) = divide(&f, gb.basis()).unwrap();
        let mut back = rem.clone();
        for (qi, d) in q.iter().zip(gb.basis()) {
            back = back.checked_add(&qi.checked_mul(d).unwrap()).unwrap();
        }
        assert_eq!(back, f);
        for (_, m) in rem.terms() {
            assert!(
                !gb.basis().iter().any(|d| d.leading_monomial().unwrap().divides(m)),
                "remainder term {m:?} is reducible"
            );
        }
    }

    #[test]
    fn elimination_projects_away_variables() {
        // x = s^2, y = s^3 (indices: s=0, x=1, y=2); eliminating s leaves the cusp.
        let r = Ring::degrevlex(["s", "x", "y"]);
        let i = ideal(&r, &["x - s^2", "y - s^3"]);
        let out = eliminate(&i, &[0], &caps()).unwrap();
        let gb = out.groebner(&caps()).unwrap();
        assert_eq!(strings(gb.basis()), vec!["x^3 - y^2"]);
    }

    #[test]
    fn colon_of_monomial_ideal() {
        let r = Ring::degrevlex(["x", "y"]);
        let i = ideal(&r, &["x^2", "x*y"]);
        let x = r.parse_poly::<Rat>("x").unwrap();
        let q = colon(&i, &x, &caps()).unwrap();
        let expect = ideal(&r, &["x", "y"]);
        assert!(ideal_equal(&q, &expect, &caps()).unwrap());
    }

    #[test]
    fn colon_via_last_variable_matches_generic_route() {
        let r = ring_xyz();
        let i = ideal(&r, &["y1*y2 - x*z", "y1*y3 - x*z", "y2*y3 - x*z"]);
        let gb = i.groebner(&caps()).unwrap();
        let fast = colon_by_last_var_revlex(&gb).unwrap();
        assert_eq!(
            strings(fast.basis()),
            vec![
                "y2*y3 - x*z",
                "y1*y3 - x*z",
                "y1*y2 - x*z",
                "x*y2 - x*y3",
                "x*y1 - x*y3",
                "x*y3^2 - x^2*z",
            ]
        );
        let z = r.parse_poly::<Rat>("z").unwrap();
        let generic = colon(&i, &z, &caps()).unwrap();
        let fast_ideal = Ideal::new(&r, fast.basis().to_vec());
        assert!(ideal_equal(&generic, &fast_ideal, &caps()).unwrap());
    }

    #[test]
    fn colon_by_last_var_requires_degrevlex() {
        let r = Ring::lex(["x", "y"]);
        let i = ideal(&r, &["x^2 - y^2"]);
        let gb = i.groebner(&caps()).unwrap();
        assert!(matches!(
            colon_by_last_var_revlex(&gb),
            Err(GroebnerError::OrderMismatch(_))
        ));
    }

    #[test]
    fn resource_caps_trip() {
        let r = ring_xyz();
        let i = ideal(&r, &["y1*y2 - x*z", "y1*y3 - x*z", "y2*y3 - x*z"]);
        let tight = Caps { max_pair_reductions: 1, max_degree: 40 };
        assert!(matches!(
            i.groebner(&tight),
            Err(GroebnerError::ResourceLimit(_))
        ));
        let low_deg = Caps { max_pair_reductions: 50_000, max_degree: 3 };
        assert!(matches!(
            i.groebner(&low_deg),
            Err(GroebnerError::ResourceLimit(_))
        ));
    }

    #[test]
    fn unit_ideal_reduces_to_one() {
        let r = Ring::degrevlex(["x", "y"]);
        let i = ideal(&r, &["x", "x + 1"]);
        let gb = i.groebner(&caps()).unwrap();
        assert_eq!(strings(gb.basis()), vec!["1"]);
        assert!(gb.is_unit_ideal());
    }

    #[test]
    fn monomial_ideal_minimal_generators() {
        let n = 3;
        let m = |e: &[u32]| Monomial::from_exps(e.to_vec());
        let ideal = MonomialIdeal::new(
            n,
            vec![m(&[2, 0, 0]), m(&[2, 1, 0]), m(&[0, 1, 1]), m(&[0, 1, 1])],
        );
        assert_eq!(ideal.gens(), &[m(&[0, 1, 1]), m(&[2, 0, 0])]);
        assert!(ideal.contains(&m(&[2, 5, 0])));
        assert!(!ideal.contains(&m(&[1, 1, 0])));
        assert!(ideal.is_squarefree() == false);

        let colon = ideal.colon_monomial(&m(&[0, 1, 0]));
        assert_eq!(colon.gens(), &[m(&[0, 0, 1]), m(&[2, 0, 0])]);

        // dim of K[x,y,z]/(yz, x^2): independent sets avoid {y,z} together and x.
        assert_eq!(ideal.dim_quotient(), Some(1));
        assert_eq!(MonomialIdeal::zero(n).dim_quotient(), Some(3));
        assert_eq!(MonomialIdeal::new(n, vec![m(&[0, 0, 0])]).dim_quotient(), None);
    }
}

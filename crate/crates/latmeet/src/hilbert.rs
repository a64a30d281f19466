//! Hilbert series of quotients by monomial ideals.
//!
//! For a monomial ideal `M` in `n` variables the series of `S/M` is written
//! `num(t) / (1-t)^n` with an integer numerator (the K-polynomial). The
//! numerator is computed by the pivot recursion
//! `num(M) = num(M + (v)) + t * num(M : v)`, splitting on the variable that
//! appears in the most generator supports; pairwise-coprime generators form a
//! regular sequence and close the recursion with a product formula.
//!
//! Gröbner bases reduce the general case to this one: a quotient and the
//! quotient by the leading ideal share their Hilbert series.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::groebner::{GroebnerBasis, MonomialIdeal};
use crate::polyring::Monomial;
use crate::Scalar;

/// The Hilbert series of a graded quotient `S/M`, stored as the raw numerator
/// over `(1-t)^nvars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    nvars: usize,
    numerator: Vec<BigInt>,
}

impl HilbertSeries {
    /// Series of `S/M`.
    pub fn of_quotient(m: &MonomialIdeal) -> HilbertSeries {
        let mut memo: HashMap<Vec<Monomial>, Vec<BigInt>> = HashMap::new();
        let numerator = numerator_rec(m, &mut memo);
        HilbertSeries { nvars: m.nvars(), numerator }
    }

    /// Series of `S/I` read off a Gröbner basis of `I` (the quotient by the
    /// leading ideal has the same graded dimensions).
    pub fn of_ideal_quotient<C: Scalar>(gb: &GroebnerBasis<C>) -> HilbertSeries {
        HilbertSeries::of_quotient(&gb.leading_ideal())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Raw numerator over `(1-t)^nvars`; coefficient of `t^j` at index `j`.
    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    /// Whether the module is zero (quotient by the unit ideal).
    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Numerator and denominator exponent after cancelling every factor of
    /// `(1-t)`: the h-polynomial and the Krull dimension. `None` for the zero
    /// module.
    pub fn reduced(&self) -> Option<(Vec<BigInt>, usize)> {
        if self.is_zero() {
            return None;
        }
        let mut h = self.numerator.clone();
        let mut cancelled = 0usize;
        while cancelled < self.nvars {
            match divide_by_one_minus_t(&h) {
                Some(q) => {
                    h = q;
                    cancelled += 1;
                }
                None => break,
            }
        }
        Some((h, self.nvars - cancelled))
    }

    /// Krull dimension of the quotient; `None` for the zero module.
    pub fn krull_dim(&self) -> Option<usize> {
        self.reduced().map(|(_, d)| d)
    }

    /// Degree of the h-polynomial (the reduced numerator).
    pub fn h_degree(&self) -> Option<usize> {
        self.reduced().map(|(h, _)| h.len().saturating_sub(1))
    }

    /// Multiplicity: the h-polynomial evaluated at 1.
    pub fn multiplicity(&self) -> Option<BigInt> {
        self.reduced().map(|(h, _)| h.iter().sum())
    }

    /// Dimension of the degree-`d` graded piece.
    pub fn hilbert_function(&self, d: u32) -> BigInt {
        let n = self.nvars;
        let mut total = BigInt::zero();
        for (k, c) in self.numerator.iter().enumerate() {
            if k as u32 > d {
                break;
            }
            // dim_K S_e = C(n-1+e, n-1)
            let e = (d - k as u32) as u64;
            total += c * binomial(n as u64 - 1 + e, n as u64 - 1);
        }
        total
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some((h, dim)) = self.reduced() else {
            return write!(f, "0");
        };
        write!(f, "(")?;
        let mut first = true;
        for (k, c) in h.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")?;
        match dim {
            0 => Ok(()),
            1 => write!(f, "/(1 - t)"),
            d => write!(f, "/(1 - t)^{d}"),
        }
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

fn numerator_rec(
    m: &MonomialIdeal,
    memo: &mut HashMap<Vec<Monomial>, Vec<BigInt>>,
) -> Vec<BigInt> {
    if m.is_zero() {
        return vec![BigInt::one()];
    }
    if m.is_unit() {
        return Vec::new();
    }
    if let Some(hit) = memo.get(m.gens()) {
        return hit.clone();
    }

    let gens = m.gens();
    let pairwise_coprime = (0..gens.len())
        .all(|i| (i + 1..gens.len()).all(|j| gens[i].coprime(&gens[j])));
    let result = if pairwise_coprime {
        // A regular sequence: the numerator is the product of (1 - t^deg).
        let mut p = vec![BigInt::one()];
        for g in gens {
            p = mul_one_minus_power(&p, g.degree() as usize);
        }
        p
    } else {
        // Split on the variable hitting the most generator supports. Some
        // variable hits two supports (a non-coprime pair exists), so the pivot
        // is never itself a minimal generator and both branches shrink.
        let mut counts = vec![0usize; m.nvars()];
        for g in gens {
            for v in g.support() {
                counts[v] += 1;
            }
        }
        let pivot = (0..m.nvars()).max_by_key(|&v| counts[v]).expect("nonempty ring");
        debug_assert!(counts[pivot] >= 2);
        let v = Monomial::var(pivot, m.nvars());
        let with = numerator_rec(&m.plus_monomial(&v), memo);
        let colon = numerator_rec(&m.colon_monomial(&v), memo);
        add_shifted(&with, &colon, 1)
    };

    memo.insert(m.gens().to_vec(), result.clone());
    result
}

/// `p * (1 - t^d)`.
fn mul_one_minus_power(p: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + d];
    for (i, c) in p.iter().enumerate() {
        out[i] += c;
        out[i + d] -= c;
    }
    trim(out)
}

/// `a + t^shift * b`.
fn add_shifted(a: &[BigInt], b: &[BigInt], shift: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len() + shift)];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + shift] += c;
    }
    trim(out)
}

/// Quotient of `p` by `(1 - t)` if exact (i.e. if `p(1) = 0`).
fn divide_by_one_minus_t(p: &[BigInt]) -> Option<Vec<BigInt>> {
    // p = (1 - t) q  =>  q_k = sum_{i <= k} p_i; exact iff the running sum
    // of all coefficients vanishes.
    let mut q = Vec::with_capacity(p.len());
    let mut acc = BigInt::zero();
    for c in p {
        acc += c;
        q.push(acc.clone());
    }
    match q.pop() {
        Some(last) if last.is_zero() => Some(trim(q)),
        Some(_) => None,
        None => Some(Vec::new()),
    }
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

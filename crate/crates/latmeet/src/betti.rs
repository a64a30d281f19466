//! Graded Betti tables β_{i,j}(S/I) = dim_K Tor_i(S/I, K)_j and the derived
//! homological invariants (projective dimension, depth, regularity,
//! Cohen–Macaulay / Gorenstein / linearly-related verdicts).
//!
//! Tor is computed from the Koszul complex on all variables with
//! coefficients in S/I, by exact rank computations over the scalar field.
//! Two engines cross-check each other:
//!
//! * [`monomial_betti_table`] handles monomial ideals. The Koszul complex of
//!   a monomial quotient splits into finite-dimensional blocks indexed by
//!   multidegree, and blocks with nonzero homology only occur at least
//!   common multiples of subsets of the minimal generators, so the whole
//!   (complete) table is a sum of small combinatorial homology computations.
//! * [`betti_table`] handles arbitrary homogeneous ideals. Each strand rank
//!   is computed on the standard-monomial basis of S/I, split into blocks
//!   along every integer grading that makes the ideal homogeneous (the
//!   kernel of the exponent-difference matrix of the Gröbner basis), and
//!   the cells that must be computed are pruned by the classical
//!   upper-semicontinuity bound β_{i,j}(S/I) ≤ β_{i,j}(S/in(I)).
//!
//! Linear-quotients analysis of monomial ideals (successive colons generated
//! by variables) provides a third, purely combinatorial route to the table.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::groebner::{GroebnerBasis, GroebnerError, Ideal, MonomialIdeal};
use crate::hilbert::HilbertSeries;
use crate::linalg::SparseMatrix;
use crate::polyring::{Monomial, Polynomial};
use crate::{Caps, Rat, Scalar};

#[derive(Debug, Error)]
pub enum BettiError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("the ideal is the unit ideal; the quotient is the zero ring")]
    UnitIdeal,
    #[error("the ideal is not generated in a single degree")]
    NotEquigenerated,
    #[error("resource limit: {0}")]
    ResourceLimit(String),
}

/// A graded Betti table of a cyclic quotient S/I: the map (i, j) → β_{i,j},
/// storing only nonzero entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    nvars: usize,
    /// `None` means the table is complete for every degree; `Some(j)` means
    /// entries are only guaranteed for internal degree ≤ j.
    complete_through: Option<u32>,
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    fn new(nvars: usize) -> Self {
        BettiTable { nvars, complete_through: None, entries: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Degree bound the table is guaranteed through (`None`: complete).
    pub fn complete_through(&self) -> Option<u32> {
        self.complete_through
    }

    pub fn is_complete(&self) -> bool {
        self.complete_through.is_none()
    }

    fn add(&mut self, i: usize, j: u32, value: u64) {
        if value != 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in sorted order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// Projective dimension: the largest homological degree with a nonzero
    /// entry.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Castelnuovo–Mumford regularity: max{j − i : β_{i,j} ≠ 0}.
    pub fn reg(&self) -> u32 {
        self.entries.keys().map(|&(i, j)| j - i as u32).max().unwrap_or(0)
    }

    /// Sum of a homological-degree row.
    pub fn row_total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|&(&(r, _), _)| r == i).map(|(_, &b)| b).sum()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// The Euler identity per internal degree: the coefficient of t^j in the
    /// Hilbert numerator over (1−t)^N must equal Σ_i (−1)^i β_{i,j}.
    /// Degrees beyond `complete_through` cannot be certified and make the
    /// check fail if the numerator still has terms there.
    pub fn euler_matches(&self, series: &HilbertSeries) -> bool {
        if series.nvars() != self.nvars {
            return false;
        }
        let num = series.numerator();
        let max_j = self
            .entries
            .keys()
            .map(|&(_, j)| j as usize)
            .chain(num.iter().enumerate().rev().find(|(_, c)| !c.is_zero()).map(|(d, _)| d))
            .max()
            .unwrap_or(0);
        if let Some(cap) = self.complete_through {
            if max_j > cap as usize {
                return false;
            }
        }
        for j in 0..=max_j {
            let mut alt = BigInt::zero();
            for (&(i, jj), &b) in &self.entries {
                if jj as usize == j {
                    let term = BigInt::from(b);
                    if i % 2 == 0 {
                        alt += term;
                    } else {
                        alt -= term;
                    }
                }
            }
            let expected = num.get(j).cloned().unwrap_or_else(BigInt::zero);
            if alt != expected {
                return false;
            }
        }
        true
    }

    /// Whether the table has the symmetry β_{i,j} = β_{pd−i, (pd+reg)−j}
    /// expected of Gorenstein quotients.
    pub fn gorenstein_symmetric(&self) -> bool {
        let pd = self.pd();
        let s = pd as u32 + self.reg();
        self.entries.iter().all(|(&(i, j), &b)| {
            i <= pd && j <= s && self.get(pd - i, s - j) == b
        })
    }

    /// Macaulay-style Betti diagram: rows are strands d = j − i, columns are
    /// homological degrees.
    pub fn diagram(&self) -> String {
        let pd = self.pd();
        let reg = self.reg();
        let width = self
            .entries
            .values()
            .map(|b| b.to_string().len())
            .chain((0..=pd).map(|i| self.row_total(i).to_string().len()))
            .max()
            .unwrap_or(1)
            .max(2);
        let mut out = String::new();
        out.push_str("       ");
        for i in 0..=pd {
            out.push_str(&format!(" {i:>width$}"));
        }
        out.push('\n');
        out.push_str("total: ");
        for i in 0..=pd {
            out.push_str(&format!(" {:>width$}", self.row_total(i)));
        }
        out.push('\n');
        for d in 0..=reg {
            out.push_str(&format!("{d:>6}: "));
            for i in 0..=pd {
                let b = self.get(i, i as u32 + d);
                if b == 0 {
                    out.push_str(&format!(" {:>width$}", "."));
                } else {
                    out.push_str(&format!(" {b:>width$}"));
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "nvars": self.nvars,
            "complete_through": self.complete_through,
            "entries": self
                .entries
                .iter()
                .map(|(&(i, j), &b)| serde_json::json!({"i": i, "j": j, "beta": b}))
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.diagram())
    }
}

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as u128 / (t + 1) as u128;
    }
    u64::try_from(acc).expect("binomial fits in 64 bits at supported sizes")
}

/// Bitmasks over `n` positions with exactly `k` bits set, ascending.
fn masks_of_weight(n: usize, k: usize) -> Vec<u32> {
    assert!(n <= 31);
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::with_capacity(binom(n, k) as usize);
    let last: u32 = ((1u32 << k) - 1) << (n - k);
    let mut m: u32 = (1 << k) - 1;
    loop {
        out.push(m);
        if m == last {
            break;
        }
        // Gosper's hack: next larger integer with the same popcount.
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    out
}

/// Sign of dropping position `t` from subset mask `s`: parity of the number
/// of set bits below `t`.
fn drop_sign(s: u32, t: usize) -> i32 {
    if (s & ((1u32 << t) - 1)).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

// ---------------------------------------------------------------------------
// Monomial engine: multidegree blocks over the lcm closure.
// ---------------------------------------------------------------------------

/// Complete graded Betti table of S/M for a monomial ideal M.
///
/// For each multidegree α the Koszul strand is the complex spanned by pairs
/// (T, α − e_T) with T a subset of the support of α and α − e_T outside M;
/// nonzero homology only occurs when α is a least common multiple of some of
/// the minimal generators, so it suffices to sweep the lcm closure. Pass a
/// degree cap to truncate; `None` computes the complete table.
pub fn monomial_betti_table(
    ideal: &MonomialIdeal,
    j_cap: Option<u32>,
) -> Result<BettiTable, BettiError> {
    let n = ideal.nvars();
    let mut table = BettiTable::new(n);
    table.add(0, 0, 1);
    table.complete_through = j_cap;
    if ideal.is_zero() {
        table.complete_through = None;
        return Ok(table);
    }
    if ideal.is_unit() {
        return Err(BettiError::UnitIdeal);
    }

    // lcm closure of the minimal generators (capped if requested).
    let within = |m: &Monomial| j_cap.is_none_or(|cap| m.degree() <= cap);
    let mut closure: BTreeSet<Monomial> = ideal.gens().iter().filter(|g| within(g)).cloned().collect();
    let mut work: Vec<Monomial> = closure.iter().cloned().collect();
    while let Some(alpha) = work.pop() {
        for g in ideal.gens() {
            let l = alpha.lcm(g);
            if within(&l) && closure.insert(l.clone()) {
                work.push(l);
            }
        }
        if closure.len() > 200_000 {
            return Err(BettiError::ResourceLimit(format!(
                "lcm closure exceeds 200000 multidegrees (nvars = {n})"
            )));
        }
    }
    if j_cap.is_none() {
        table.complete_through = None;
    }

    for alpha in &closure {
        let supp = alpha.support();
        let s = supp.len();
        let j = alpha.degree();
        // Standard flags for α − e_T, indexed by subset masks of the support.
        let exps = alpha.exps().to_vec();
        let nmasks = 1usize << s;
        let mut standard = vec![false; nmasks];
        for (mask, flag) in standard.iter_mut().enumerate() {
            let mut e = exps.clone();
            for (b, &v) in supp.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    e[v] -= 1;
                }
            }
            *flag = !ideal.contains(&Monomial::from_exps(e));
        }
        // Positions of standard masks, per homological degree.
        let mut pos: HashMap<u32, usize> = HashMap::new();
        let mut count = vec![0usize; s + 2];
        for (mask, &flag) in standard.iter().enumerate() {
            if flag {
                let i = (mask as u32).count_ones() as usize;
                pos.insert(mask as u32, count[i]);
                count[i] += 1;
            }
        }
        // Ranks of the boundary maps ∂_i for 1 ≤ i ≤ s.
        let mut rank = vec![0u64; s + 2];
        for i in 1..=s {
            if count[i] == 0 || count[i - 1] == 0 {
                continue;
            }
            let mut mat: SparseMatrix<Rat> = SparseMatrix::new(count[i - 1], count[i]);
            for mask in masks_of_weight(s, i) {
                if !standard[mask as usize] {
                    continue;
                }
                let col = pos[&mask];
                for b in 0..s {
                    if mask & (1 << b) == 0 {
                        continue;
                    }
                    let sub = mask & !(1 << b);
                    if !standard[sub as usize] {
                        continue;
                    }
                    let sign = Rat::from_integer(drop_sign(mask, b).into());
                    mat.add_entry(pos[&sub], col, sign);
                }
            }
            rank[i] = mat.rank() as u64;
        }
        for i in 1..=s {
            let homology = count[i] as u64 - rank[i] - rank[i + 1];
            table.add(i, j, homology);
        }
    }
    Ok(table)
}

// ---------------------------------------------------------------------------
// General engine: Koszul strand ranks over the standard-monomial basis.
// ---------------------------------------------------------------------------

/// All degree-`d` monomials outside the initial ideal of the (reduced)
/// Gröbner basis — a field basis of (S/I)_d.
pub fn standard_monomials<C: Scalar>(gb: &GroebnerBasis<C>, d: u32) -> Vec<Monomial> {
    let ini = gb.leading_ideal();
    gb.ring()
        .monomials_of_degree(d)
        .into_iter()
        .filter(|m| !ini.contains(m))
        .collect()
}

/// Integer gradings under which every basis element is homogeneous: a basis
/// of the null space of the matrix of exponent differences between
/// consecutive terms. Every ideal generated by the basis is graded by each
/// of these weight vectors, so Koszul strands split along them.
fn grading_kernel<C: Scalar>(gb: &GroebnerBasis<C>) -> Vec<Vec<i64>> {
    let n = gb.ring().nvars();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for f in gb.basis() {
        let terms = f.terms();
        for w in terms.windows(2) {
            let a = w[0].1.exps();
            let b = w[1].1.exps();
            let row: Vec<Rat> =
                (0..n).map(|v| Rat::from_integer((a[v] as i64 - b[v] as i64).into())).collect();
            rows.push(row);
        }
    }
    null_space(rows, n)
        .into_iter()
        .map(|v| {
            // Scale to integers.
            let lcm_den = v.iter().fold(BigInt::one(), |acc, r| {
                let d = r.denom().clone();
                num_integer::lcm(acc, d)
            });
            v.iter()
                .map(|r| {
                    let scaled = r.numer() * &lcm_den / r.denom();
                    i64::try_from(scaled).expect("grading weights fit in i64")
                })
                .collect()
        })
        .collect()
}

/// Basis of the right null space of a small rational matrix.
fn null_space(mut rows: Vec<Vec<Rat>>, n: usize) -> Vec<Vec<Rat>> {
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0usize;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() / inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for cc in 0..n {
                    let delta = f.clone() * rows[r][cc].clone();
                    rows[i][cc] = rows[i][cc].clone() - delta;
                }
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let pivot_cols: BTreeSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![Rat::zero(); n];
        v[free] = Rat::one();
        for (row, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -rows[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

struct KoszulEngine<'a, C: Scalar> {
    gb: &'a GroebnerBasis<C>,
    nvars: usize,
    weights: Vec<Vec<i64>>,
    /// Standard monomials per degree, with positions.
    sm: Vec<Vec<Monomial>>,
    sm_pos: Vec<HashMap<Monomial, usize>>,
    /// Normal form of a monomial, in standard-monomial coordinates of its
    /// degree.
    nf: HashMap<Monomial, Vec<(usize, C)>>,
    /// rank of ∂_i at internal degree j, keyed by (i, j).
    ranks: HashMap<(usize, u32), u64>,
}

impl<'a, C: Scalar> KoszulEngine<'a, C> {
    fn new(gb: &'a GroebnerBasis<C>) -> Self {
        KoszulEngine {
            gb,
            nvars: gb.ring().nvars(),
            weights: grading_kernel(gb),
            sm: Vec::new(),
            sm_pos: Vec::new(),
            nf: HashMap::new(),
            ranks: HashMap::new(),
        }
    }

    fn sm_len(&mut self, d: u32) -> usize {
        self.ensure_sm(d);
        self.sm[d as usize].len()
    }

    fn ensure_sm(&mut self, d: u32) {
        while self.sm.len() <= d as usize {
            let dd = self.sm.len() as u32;
            let list = standard_monomials(self.gb, dd);
            let map = list.iter().cloned().enumerate().map(|(p, m)| (m, p)).collect();
            self.sm.push(list);
            self.sm_pos.push(map);
        }
    }

    fn normal_form(&mut self, m: &Monomial) -> Vec<(usize, C)> {
        if let Some(v) = self.nf.get(m) {
            return v.clone();
        }
        let d = m.degree();
        self.ensure_sm(d);
        let value = if let Some(&p) = self.sm_pos[d as usize].get(m) {
            vec![(p, C::one())]
        } else {
            let poly = Polynomial::monomial(self.gb.ring(), C::one(), m.clone());
            let reduced = self.gb.normal_form(&poly).expect("same ring");
            reduced
                .terms()
                .iter()
                .map(|(c, q)| (self.sm_pos[d as usize][q], c.clone()))
                .collect()
        };
        self.nf.insert(m.clone(), value.clone());
        value
    }

    fn weight_key(&self, t_mask: u32, m: &Monomial) -> Vec<i64> {
        self.weights
            .iter()
            .map(|w| {
                let mut acc = 0i64;
                for (v, &wv) in w.iter().enumerate() {
                    let mut e = m.exp(v) as i64;
                    if t_mask & (1 << v) != 0 {
                        e += 1;
                    }
                    acc += wv * e;
                }
                acc
            })
            .collect()
    }

    /// Rank of the Koszul differential ∂_i restricted to internal degree j,
    /// summed over weight blocks (the differential preserves every grading
    /// in the kernel, so the matrix is block diagonal).
    fn rank(&mut self, i: usize, j: u32) -> Result<u64, BettiError> {
        if i == 0 || i > self.nvars || (j as usize) < i {
            return Ok(0);
        }
        if let Some(&r) = self.ranks.get(&(i, j)) {
            return Ok(r);
        }
        let d = j - i as u32;
        let cols_total = binom(self.nvars, i) as u128 * self.sm_len(d) as u128;
        if cols_total > 5_000_000 {
            return Err(BettiError::ResourceLimit(format!(
                "Koszul strand at (i = {i}, j = {j}) has {cols_total} columns"
            )));
        }
        self.ensure_sm(d + 1);

        struct Block<C> {
            cols: usize,
            rows: HashMap<(u32, usize), usize>,
            entries: Vec<(usize, usize, C)>,
        }
        let mut blocks: HashMap<Vec<i64>, Block<C>> = HashMap::new();

        for t_mask in masks_of_weight(self.nvars, i) {
            for mi in 0..self.sm_len(d) {
                let m = self.sm[d as usize][mi].clone();
                let key = self.weight_key(t_mask, &m);
                let image: Vec<(usize, i32, Vec<(usize, C)>)> = (0..self.nvars)
                    .filter(|&t| t_mask & (1 << t) != 0)
                    .map(|t| (t, drop_sign(t_mask, t), self.normal_form(&m.mul_var(t))))
                    .collect();
                let block = blocks.entry(key).or_insert_with(|| Block {
                    cols: 0,
                    rows: HashMap::new(),
                    entries: Vec::new(),
                });
                let col = block.cols;
                block.cols += 1;
                for (t, sign, nf) in image {
                    let sub = t_mask & !(1 << t);
                    for (q, c) in nf {
                        let next = block.rows.len();
                        let row = *block.rows.entry((sub, q)).or_insert(next);
                        let value = if sign < 0 { C::zero() - c } else { c };
                        block.entries.push((row, col, value));
                    }
                }
            }
        }

        // The blocks are independent matrices and rank is a pure function, so
        // they fan out across threads; the commutative sum keeps the result
        // schedule-independent.
        let nonempty: Vec<Block<C>> =
            blocks.into_values().filter(|b| !b.rows.is_empty()).collect();
        let total: u64 = nonempty
            .into_par_iter()
            .map(|block| {
                let mut mat: SparseMatrix<C> = SparseMatrix::new(block.rows.len(), block.cols);
                for (r, c, v) in block.entries {
                    mat.add_entry(r, c, v);
                }
                mat.rank() as u64
            })
            .sum();
        self.ranks.insert((i, j), total);
        Ok(total)
    }

    fn cell(&mut self, i: usize, j: u32) -> Result<u64, BettiError> {
        if (j as usize) < i {
            return Ok(0);
        }
        let d = j - i as u32;
        let dim = binom(self.nvars, i) * self.sm_len(d) as u64;
        let r_in = self.rank(i, j)?;
        let r_out = self.rank(i + 1, j)?;
        Ok(dim - r_in - r_out)
    }
}

/// Graded Betti table of S/I from a reduced Gröbner basis of a homogeneous
/// ideal I, exact over the scalar field.
///
/// The complete table of the initial ideal is computed first; cells outside
/// its support vanish for S/I as well (Betti numbers can only drop when
/// passing from the initial ideal back to I), so only the support cells with
/// internal degree ≤ `j_cap` are evaluated by Koszul strand ranks. The
/// result is complete — not merely complete through `j_cap` — whenever
/// `j_cap` covers the support of the initial-ideal table.
pub fn betti_table<C: Scalar>(
    gb: &GroebnerBasis<C>,
    j_cap: u32,
) -> Result<BettiTable, BettiError> {
    if gb.is_unit_ideal() {
        return Err(BettiError::UnitIdeal);
    }
    let ini = gb.leading_ideal();
    let ini_table = monomial_betti_table(&ini, None)?;
    if gb.basis().iter().all(|p| p.num_terms() == 1) {
        return Ok(ini_table);
    }
    let max_support_j = ini_table.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
    let mut table = BettiTable::new(gb.ring().nvars());
    table.add(0, 0, 1);
    table.complete_through = if max_support_j <= j_cap { None } else { Some(j_cap) };

    let mut engine = KoszulEngine::new(gb);
    for (i, j, _) in ini_table.entries() {
        if i == 0 || j > j_cap {
            continue;
        }
        table.add(i, j, engine.cell(i, j)?);
    }
    Ok(table)
}

/// Reference implementation sweeping every cell (1 ≤ i ≤ N, i ≤ j ≤ j_cap)
/// without semicontinuity pruning. Much slower; used to cross-check
/// [`betti_table`].
pub fn betti_table_unpruned<C: Scalar>(
    gb: &GroebnerBasis<C>,
    j_cap: u32,
) -> Result<BettiTable, BettiError> {
    if gb.is_unit_ideal() {
        return Err(BettiError::UnitIdeal);
    }
    let n = gb.ring().nvars();
    let mut table = BettiTable::new(n);
    table.add(0, 0, 1);
    table.complete_through = Some(j_cap);
    let mut engine = KoszulEngine::new(gb);
    for i in 1..=n {
        for j in i as u32..=j_cap {
            table.add(i, j, engine.cell(i, j)?);
        }
    }
    Ok(table)
}

/// Betti numbers β_{i,j}(S/I) at the requested cells only, in input order.
///
/// Cells outside the support of the initial ideal's table are zero without
/// any rank work; the rest are evaluated by Koszul strand ranks. Useful when
/// a verification needs a handful of entries of a table too large to fill.
pub fn betti_cells<C: Scalar>(
    gb: &GroebnerBasis<C>,
    cells: &[(usize, u32)],
) -> Result<Vec<u64>, BettiError> {
    if gb.is_unit_ideal() {
        return Err(BettiError::UnitIdeal);
    }
    let ini = gb.leading_ideal();
    let ini_table = monomial_betti_table(&ini, None)?;
    let monomial_only = gb.basis().iter().all(|p| p.num_terms() == 1);
    let mut engine = KoszulEngine::new(gb);
    let mut out = Vec::with_capacity(cells.len());
    for &(i, j) in cells {
        let value = if i == 0 {
            u64::from(j == 0)
        } else if ini_table.get(i, j) == 0 {
            0
        } else if monomial_only {
            ini_table.get(i, j)
        } else {
            engine.cell(i, j)?
        };
        out.push(value);
    }
    Ok(out)
}

/// Exact Castelnuovo–Mumford regularity of S/I from a reduced Gröbner basis,
/// evaluating as few cells as possible.
///
/// reg(S/I) ≤ reg(S/in(I)) and every nonzero cell of S/I sits inside the
/// support of the initial ideal's table, so it suffices to walk diagonals
/// j − i downward from reg(S/in(I)) and return the first diagonal carrying a
/// nonzero cell.
pub fn quotient_regularity<C: Scalar>(gb: &GroebnerBasis<C>) -> Result<u32, BettiError> {
    if gb.is_unit_ideal() {
        return Err(BettiError::UnitIdeal);
    }
    let ini = gb.leading_ideal();
    let ini_table = monomial_betti_table(&ini, None)?;
    if gb.basis().iter().all(|p| p.num_terms() == 1) {
        return Ok(ini_table.reg());
    }
    let mut engine = KoszulEngine::new(gb);
    let mut d = ini_table.reg();
    while d > 0 {
        let mut diagonal: Vec<(usize, u32)> = ini_table
            .entries()
            .filter(|&(i, j, _)| i > 0 && j == i as u32 + d)
            .map(|(i, j, _)| (i, j))
            .collect();
        diagonal.sort_unstable();
        for (i, j) in diagonal {
            if engine.cell(i, j)? > 0 {
                return Ok(d);
            }
        }
        d -= 1;
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// Linear quotients.
// ---------------------------------------------------------------------------

/// Outcome of a linear-quotients check for a fixed generator ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearQuotients {
    /// Each successive colon (f_1,…,f_{k−1}) : f_k is generated by r_k
    /// variables.
    Linear { r: Vec<usize> },
    /// First position (0-based index into the ordering) whose colon is not
    /// generated by variables.
    FailsAt { k: usize },
}

/// Checks a generator ordering for linear quotients. `ordering` must be a
/// permutation of the minimal generator indices of `ideal`.
pub fn linear_quotients_check(ideal: &MonomialIdeal, ordering: &[usize]) -> LinearQuotients {
    let gens = ideal.gens();
    assert_eq!(ordering.len(), gens.len(), "ordering must cover all generators");
    let mut seen = vec![false; gens.len()];
    for &g in ordering {
        assert!(!seen[g], "ordering must be a permutation");
        seen[g] = true;
    }
    let mut r = Vec::with_capacity(gens.len());
    for k in 0..ordering.len() {
        match colon_variable_count(gens, &ordering[..k], ordering[k]) {
            Some(rk) => r.push(rk),
            None => return LinearQuotients::FailsAt { k },
        }
    }
    LinearQuotients::Linear { r }
}

/// Number of variables generating (f_{prior}) : f_k, or `None` if that colon
/// is not generated by variables. The colon of a monomial ideal by a
/// monomial is generated by the quotients f_i / gcd(f_i, f_k); it is
/// variable-generated iff every quotient is divisible by a degree-one
/// quotient.
fn colon_variable_count(gens: &[Monomial], prior: &[usize], k: usize) -> Option<usize> {
    let fk = &gens[k];
    let mut vars: BTreeSet<usize> = BTreeSet::new();
    let mut quotients = Vec::with_capacity(prior.len());
    for &i in prior {
        let q = gens[i].gcd(fk).div_into(&gens[i]).expect("gcd divides");
        if q.degree() == 1 {
            vars.insert(q.support()[0]);
        }
        quotients.push(q);
    }
    if quotients
        .iter()
        .all(|q| q.support().iter().any(|v| vars.contains(v)))
    {
        Some(vars.len())
    } else {
        None
    }
}

/// Searches for an ordering of the minimal generators with linear quotients,
/// by depth-first search over generator subsets (whether an ordering of a
/// subset can be extended depends only on the subset). Returns the first
/// ordering found (candidates tried in index order), or `None`.
pub fn find_linear_quotients_order(ideal: &MonomialIdeal) -> Option<Vec<usize>> {
    let gens = ideal.gens();
    let g = gens.len();
    assert!(g <= 24, "linear-quotients search supports at most 24 generators");
    if g == 0 {
        return Some(Vec::new());
    }
    let mut dead: std::collections::HashSet<u32> = std::collections::HashSet::new();
    let mut order = Vec::with_capacity(g);
    let mut chosen = Vec::with_capacity(g);
    fn rec(
        gens: &[Monomial],
        mask: u32,
        chosen: &mut Vec<usize>,
        order: &mut Vec<usize>,
        dead: &mut std::collections::HashSet<u32>,
    ) -> bool {
        let g = gens.len();
        if chosen.len() == g {
            order.clone_from(chosen);
            return true;
        }
        if dead.contains(&mask) {
            return false;
        }
        for next in 0..g {
            if mask & (1 << next) != 0 {
                continue;
            }
            if colon_variable_count(gens, chosen, next).is_none() {
                continue;
            }
            chosen.push(next);
            if rec(gens, mask | (1 << next), chosen, order, dead) {
                return true;
            }
            chosen.pop();
        }
        dead.insert(mask);
        false
    }
    if rec(gens, 0, &mut chosen, &mut order, &mut dead) {
        Some(order)
    } else {
        None
    }
}

/// Betti table of S/M from linear-quotients data: if the k-th generator has
/// degree d_k and colon generated by r_k variables, then
/// β_{i+1, i+j}(S/M) = Σ_{k : d_k = j} C(r_k, i).
pub fn betti_from_linear_quotients(r: &[usize], degrees: &[u32], nvars: usize) -> BettiTable {
    assert_eq!(r.len(), degrees.len());
    let mut table = BettiTable::new(nvars);
    table.add(0, 0, 1);
    for (rk, dk) in r.iter().zip(degrees) {
        for i in 0..=*rk {
            table.add(i + 1, i as u32 + dk, binom(*rk, i));
        }
    }
    table
}

// ---------------------------------------------------------------------------
// Reports.
// ---------------------------------------------------------------------------

/// Homological summary of a graded quotient S/I.
#[derive(Debug, Clone)]
pub struct AlgebraReport {
    pub nvars: usize,
    pub dim: usize,
    pub depth: usize,
    pub pd: usize,
    pub reg: u32,
    pub multiplicity: BigInt,
    pub is_cm: bool,
    pub is_gorenstein: bool,
    /// Gorenstein with h-polynomial degree exactly one more than the least
    /// generator degree of the ideal.
    pub nearly_extremal_gorenstein: bool,
    /// `None` when the ideal is not generated in a single degree.
    pub is_linearly_related: Option<bool>,
    pub has_linear_resolution: Option<bool>,
    pub hilbert: HilbertSeries,
    pub betti: BettiTable,
}

impl AlgebraReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "nvars": self.nvars,
            "dim": self.dim,
            "depth": self.depth,
            "pd": self.pd,
            "reg": self.reg,
            "multiplicity": self.multiplicity.to_string(),
            "is_cm": self.is_cm,
            "is_gorenstein": self.is_gorenstein,
            "nearly_extremal_gorenstein": self.nearly_extremal_gorenstein,
            "is_linearly_related": self.is_linearly_related,
            "has_linear_resolution": self.has_linear_resolution,
            "hilbert_series": self.hilbert.to_string(),
            "betti": self.betti.to_json(),
        })
    }
}

impl fmt::Display for AlgebraReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "dim {}  depth {}  pd {}  reg {}  multiplicity {}",
            self.dim, self.depth, self.pd, self.reg, self.multiplicity
        )?;
        writeln!(
            f,
            "CM: {}  Gorenstein: {}  nearly extremal Gorenstein: {}",
            self.is_cm, self.is_gorenstein, self.nearly_extremal_gorenstein
        )?;
        let opt = |o: Option<bool>| match o {
            Some(true) => "yes",
            Some(false) => "no",
            None => "n/a (not equigenerated)",
        };
        writeln!(
            f,
            "linearly related: {}  linear resolution: {}",
            opt(self.is_linearly_related),
            opt(self.has_linear_resolution)
        )?;
        writeln!(f, "Hilbert series: {}", self.hilbert)?;
        write!(f, "{}", self.betti.diagram())
    }
}

/// Computes the full homological report of S/I for a homogeneous ideal I.
///
/// The degree cap is chosen automatically: the larger of
/// (reduced-numerator degree + number of variables) and the top internal
/// degree in the initial ideal's table, so the reported table — and hence
/// pd, reg, and all verdicts — is complete.
pub fn invariants_report<C: Scalar>(
    ideal: &Ideal<C>,
    caps: &Caps,
) -> Result<AlgebraReport, BettiError> {
    let gb = ideal.groebner(caps)?;
    report_from_gb(&gb)
}

/// Same as [`invariants_report`] starting from an existing reduced basis.
pub fn report_from_gb<C: Scalar>(gb: &GroebnerBasis<C>) -> Result<AlgebraReport, BettiError> {
    report_from_gb_with_cap(gb, None)
}

/// [`report_from_gb`] with a user-supplied degree cap replacing the
/// automatic one. With a cap below the table's support the table — and the
/// verdicts derived from it — are complete only through the cap, which the
/// table's completeness flag records.
pub fn report_from_gb_with_cap<C: Scalar>(
    gb: &GroebnerBasis<C>,
    j_cap: Option<u32>,
) -> Result<AlgebraReport, BettiError> {
    if gb.is_unit_ideal() {
        return Err(BettiError::UnitIdeal);
    }
    let n = gb.ring().nvars();
    let series = HilbertSeries::of_ideal_quotient(gb);
    let (h_poly, dim) = series.reduced().expect("nonzero quotient");
    let ini_table = monomial_betti_table(&gb.leading_ideal(), None)?;
    let ini_max_j = ini_table.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
    let default_cap = (h_poly.len().saturating_sub(1) + n) as u32;
    let betti = betti_table(gb, j_cap.unwrap_or(default_cap.max(ini_max_j)))?;

    let pd = betti.pd();
    let depth = n - pd;
    let reg = betti.reg();
    let is_cm = dim == depth;
    let is_gorenstein = is_cm && betti.row_total(pd) == 1;
    let gen_degrees: BTreeSet<u32> =
        betti.entries().filter(|&(i, _, _)| i == 1).map(|(_, j, _)| j).collect();
    let h_degree = series.h_degree().expect("nonzero quotient") as u32;
    let nearly_extremal_gorenstein = is_gorenstein
        && gen_degrees.iter().next().is_some_and(|&d0| h_degree == d0 + 1);

    let (is_linearly_related, has_linear_resolution) = if gen_degrees.len() == 1 {
        let d = *gen_degrees.iter().next().unwrap();
        let related = betti.entries().all(|(i, j, _)| i != 2 || j < d + 2);
        let linear = betti
            .entries()
            .all(|(i, j, _)| i == 0 || j == i as u32 + d - 1);
        (Some(related), Some(linear))
    } else {
        (None, None)
    };

    Ok(AlgebraReport {
        nvars: n,
        dim,
        depth,
        pd,
        reg,
        multiplicity: series.multiplicity().expect("nonzero quotient"),
        is_cm,
        is_gorenstein,
        nearly_extremal_gorenstein,
        is_linearly_related,
        has_linear_resolution,
        hilbert: series,
        betti,
    })
}

/// Whether the (equigenerated) ideal is linearly related: all first syzygies
/// linear, i.e. β_{2,j}(S/I) = 0 for j ≥ d + 2.
pub fn is_linearly_related<C: Scalar>(ideal: &Ideal<C>, caps: &Caps) -> Result<bool, BettiError> {
    invariants_report(ideal, caps)?.is_linearly_related.ok_or(BettiError::NotEquigenerated)
}

/// Whether the (equigenerated) ideal has a linear resolution:
/// β_{i,j}(S/I) = 0 for i ≥ 1 unless j = i + d − 1.
pub fn has_linear_resolution<C: Scalar>(
    ideal: &Ideal<C>,
    caps: &Caps,
) -> Result<bool, BettiError> {
    invariants_report(ideal, caps)?.has_linear_resolution.ok_or(BettiError::NotEquigenerated)
}

//! Finite posets and lattices: construction from cover relations (Hasse
//! diagrams), meet/join tables, structural predicates (graded, modular,
//! distributive), certificate searches (pentagon / diamond sublattices), and
//! sublattice machinery.
//!
//! Lattices are immutable after construction and all operations are pure.

use std::fmt;

use thiserror::Error;

pub mod families;

mod enumerate;
mod io;

pub use enumerate::{automorphism_count, enumerate_lattices};
pub use io::{lattice_from_json, lattice_to_json, LatticeIoError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("duplicate element {0:?}")]
    DuplicateElement(String),
    #[error("unknown element {0:?} in cover relation")]
    UnknownElement(String),
    #[error("invalid element name {0:?} (expected [A-Za-z_][A-Za-z0-9_]*)")]
    BadName(String),
    #[error("cover relations contain a cycle")]
    CycleDetected,
    #[error("elements {a:?} and {b:?} have no unique {bound}")]
    NotALattice { a: String, b: String, bound: &'static str },
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("the subset is not closed under meet and join")]
    NotASublattice,
    #[error("enumeration supports at most {max} elements, requested {requested}")]
    SizeLimitExceeded { requested: usize, max: usize },
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Indexes names, rejecting duplicates and malformed names.
fn index_names(elements: &[impl AsRef<str>]) -> Result<Vec<String>, LatticeError> {
    if elements.is_empty() {
        return Err(LatticeError::Empty);
    }
    let mut names = Vec::with_capacity(elements.len());
    for e in elements {
        let name = e.as_ref().to_string();
        if !valid_name(&name) {
            return Err(LatticeError::BadName(name));
        }
        if names.contains(&name) {
            return Err(LatticeError::DuplicateElement(name));
        }
        names.push(name);
    }
    Ok(names)
}

/// Reflexive-transitive closure of the cover digraph, with cycle detection.
fn closure(n: usize, edges: &[(usize, usize)]) -> Result<Vec<Vec<bool>>, LatticeError> {
    let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &(a, b) in edges {
        up[a].push(b);
        indeg[b] += 1;
    }
    // Kahn's algorithm; anything left over sits on a cycle.
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut topo = Vec::with_capacity(n);
    while let Some(v) = queue.pop() {
        topo.push(v);
        for &w in &up[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push(w);
            }
        }
    }
    if topo.len() != n {
        return Err(LatticeError::CycleDetected);
    }
    let mut le = vec![vec![false; n]; n];
    for i in 0..n {
        le[i][i] = true;
    }
    // Propagate reachability in reverse topological order.
    for &v in topo.iter().rev() {
        for &w in &up[v] {
            for t in 0..n {
                if le[w][t] {
                    le[v][t] = true;
                }
            }
        }
    }
    Ok(le)
}

/// A finite partially ordered set. Input to the Birkhoff construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    le: Vec<Vec<bool>>,
}

impl Poset {
    pub fn from_covers(
        elements: &[impl AsRef<str>],
        covers: &[(impl AsRef<str>, impl AsRef<str>)],
    ) -> Result<Poset, LatticeError> {
        let names = index_names(elements)?;
        let edges = resolve_edges(&names, covers)?;
        let le = closure(names.len(), &edges)?;
        Ok(Poset { names, le })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a][b]
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        let n = self.len();
        let mut h = vec![1usize; n];
        // Order elements by down-set size: a < b implies fewer elements below a.
        let mut order: Vec<usize> = (0..n).collect();
        let below = |v: usize| (0..n).filter(|&u| self.le[u][v]).count();
        order.sort_by_key(|&v| below(v));
        for &v in &order {
            for u in 0..n {
                if u != v && self.le[u][v] {
                    h[v] = h[v].max(h[u] + 1);
                }
            }
        }
        h.into_iter().max().unwrap_or(0)
    }
}

fn resolve_edges(
    names: &[String],
    covers: &[(impl AsRef<str>, impl AsRef<str>)],
) -> Result<Vec<(usize, usize)>, LatticeError> {
    let find = |s: &str| {
        names
            .iter()
            .position(|n| n == s)
            .ok_or_else(|| LatticeError::UnknownElement(s.to_string()))
    };
    covers
        .iter()
        .map(|(a, b)| Ok((find(a.as_ref())?, find(b.as_ref())?)))
        .collect()
}

/// A finite lattice: named elements, the order relation, meet/join tables,
/// canonical cover list, and the height (longest-chain) vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    names: Vec<String>,
    le: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    covers: Vec<(usize, usize)>,
    height: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl Lattice {
    /// Builds and validates a lattice from elements and cover relations
    /// (`(lower, upper)` pairs). The transitive closure is computed; every
    /// pair must have a unique greatest lower and least upper bound.
    pub fn from_covers(
        elements: &[impl AsRef<str>],
        covers: &[(impl AsRef<str>, impl AsRef<str>)],
    ) -> Result<Lattice, LatticeError> {
        let names = index_names(elements)?;
        let edges = resolve_edges(&names, covers)?;
        let le = closure(names.len(), &edges)?;
        Lattice::from_relation(names, le)
    }

    fn from_relation(names: Vec<String>, le: Vec<Vec<bool>>) -> Result<Lattice, LatticeError> {
        let n = names.len();
        let mut meet = vec![vec![0usize; n]; n];
        let mut join = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in a..n {
                let m = bound(&le, a, b, true).ok_or_else(|| LatticeError::NotALattice {
                    a: names[a].clone(),
                    b: names[b].clone(),
                    bound: "greatest lower bound",
                })?;
                let j = bound(&le, a, b, false).ok_or_else(|| LatticeError::NotALattice {
                    a: names[a].clone(),
                    b: names[b].clone(),
                    bound: "least upper bound",
                })?;
                meet[a][b] = m;
                meet[b][a] = m;
                join[a][b] = j;
                join[b][a] = j;
            }
        }
        let bottom = (0..n).fold(0, |acc, v| meet[acc][v]);
        let top = (0..n).fold(0, |acc, v| join[acc][v]);

        // Canonical covers: a < b with nothing strictly between.
        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b
                    && le[a][b]
                    && !(0..n).any(|c| c != a && c != b && le[a][c] && le[c][b])
                {
                    covers.push((a, b));
                }
            }
        }
        covers.sort_unstable();

        // Heights along the cover DAG.
        let mut height = vec![0usize; n];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (0..n).filter(|&u| le[u][v]).count());
        for &v in &order {
            for &(a, b) in &covers {
                if b == v {
                    height[v] = height[v].max(height[a] + 1);
                }
            }
        }

        Ok(Lattice { names, le, meet, join, covers, height, bottom, top })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.le[a][b] || self.le[b][a]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    /// Cover pairs `(lower, upper)`, sorted by index.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Length (in edges) of a longest chain from the bottom to `v`.
    pub fn height(&self, v: usize) -> usize {
        self.height[v]
    }

    /// Length of a longest maximal chain: the height of the top.
    pub fn rank(&self) -> usize {
        self.height[self.top]
    }

    /// All maximal chains have the same length iff every cover raises the
    /// height by exactly one.
    pub fn is_graded(&self) -> bool {
        self.covers.iter().all(|&(a, b)| self.height[b] == self.height[a] + 1)
    }

    /// The modular law: `a ≤ c` implies `a ∨ (b ∧ c) = (a ∨ b) ∧ c`.
    pub fn is_modular(&self) -> bool {
        let n = self.len();
        for a in 0..n {
            for c in 0..n {
                if !self.le[a][c] {
                    continue;
                }
                for b in 0..n {
                    if self.join[a][self.meet[b][c]] != self.meet[self.join[a][b]][c] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The distributive law: `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`.
    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.meet[a][self.join[b][c]]
                        != self.join[self.meet[a][b]][self.meet[a][c]]
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The rank identity `h(a) + h(b) = h(a ∧ b) + h(a ∨ b)` for all pairs;
    /// holds in every modular lattice.
    pub fn rank_identity_holds(&self) -> bool {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                if self.height[a] + self.height[b]
                    != self.height[self.meet[a][b]] + self.height[self.join[a][b]]
                {
                    return false;
                }
            }
        }
        true
    }

    /// A pentagon sublattice `{o, z, x, y, i}` with `o < z < x < i`,
    /// `o < y < i`, and `y` incomparable to both `z` and `x`; exists iff the
    /// lattice is non-modular. Returned as `[o, z, x, y, i]`.
    pub fn find_pentagon(&self) -> Option<[usize; 5]> {
        let n = self.len();
        for x in 0..n {
            for z in 0..n {
                if !self.lt(z, x) {
                    continue;
                }
                for y in 0..n {
                    if self.comparable(y, x) || self.comparable(y, z) {
                        continue;
                    }
                    let o = self.meet[x][y];
                    let i = self.join[x][y];
                    if self.meet[z][y] == o && self.join[z][y] == i {
                        return Some([o, z, x, y, i]);
                    }
                }
            }
        }
        None
    }

    /// A diamond sublattice `{o, a, b, c, i}`: three pairwise incomparable
    /// elements with all pairwise meets equal and all pairwise joins equal.
    /// For modular lattices this exists iff the lattice is non-distributive.
    /// Returned as `[o, a, b, c, i]`.
    pub fn find_diamond(&self) -> Option<[usize; 5]> {
        let n = self.len();
        for a in 0..n {
            for b in (a + 1)..n {
                if self.comparable(a, b) {
                    continue;
                }
                let o = self.meet[a][b];
                let i = self.join[a][b];
                for c in (b + 1)..n {
                    if self.comparable(a, c) || self.comparable(b, c) {
                        continue;
                    }
                    if self.meet[a][c] == o
                        && self.meet[b][c] == o
                        && self.join[a][c] == i
                        && self.join[b][c] == i
                    {
                        return Some([o, a, b, c, i]);
                    }
                }
            }
        }
        None
    }

    /// A height-2 interval `[z, x]` whose interior is an antichain of at
    /// least three elements — a diamond interval. Returns `(z, x, middles)`.
    pub fn find_diamond_interval(&self) -> Option<(usize, usize, Vec<usize>)> {
        let n = self.len();
        for z in 0..n {
            for x in 0..n {
                if !self.lt(z, x) || self.height[x] != self.height[z] + 2 {
                    continue;
                }
                let middles: Vec<usize> =
                    (0..n).filter(|&y| self.lt(z, y) && self.lt(y, x)).collect();
                if middles.len() < 3 {
                    continue;
                }
                let antichain = middles
                    .iter()
                    .enumerate()
                    .all(|(k, &u)| middles[k + 1..].iter().all(|&v| !self.comparable(u, v)));
                if antichain {
                    return Some((z, x, middles));
                }
            }
        }
        None
    }

    /// Elements of the closed interval `[a, b]`, in index order.
    pub fn interval(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.le[a][v] && self.le[v][b]).collect()
    }

    /// Index pairs `(a, b)` with `a < b` as indices and `a ∥ b` in the order.
    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                if !self.comparable(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Whether the subset is closed under meet and join.
    pub fn is_sublattice_subset(&self, subset: &[usize]) -> bool {
        subset.iter().all(|&a| {
            subset
                .iter()
                .all(|&b| subset.contains(&self.meet[a][b]) && subset.contains(&self.join[a][b]))
        })
    }

    /// Whether a sublattice subset is *induced*: for every pair of lattice
    /// elements whose meet and join both land in the subset, the pair itself
    /// lies in the subset. Errors if the subset is not a sublattice.
    pub fn is_induced_sublattice(&self, subset: &[usize]) -> Result<bool, LatticeError> {
        if !self.is_sublattice_subset(subset) {
            return Err(LatticeError::NotASublattice);
        }
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                if subset.contains(&self.meet[a][b])
                    && subset.contains(&self.join[a][b])
                    && !(subset.contains(&a) && subset.contains(&b))
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The sublattice on `subset` (which must be meet/join closed) as a
    /// standalone lattice; element names and their relative order are kept.
    pub fn sublattice(&self, subset: &[usize]) -> Result<Lattice, LatticeError> {
        if !self.is_sublattice_subset(subset) {
            return Err(LatticeError::NotASublattice);
        }
        let names: Vec<String> = subset.iter().map(|&v| self.names[v].clone()).collect();
        let k = subset.len();
        let mut le = vec![vec![false; k]; k];
        for i in 0..k {
            for j in 0..k {
                le[i][j] = self.le[subset[i]][subset[j]];
            }
        }
        Lattice::from_relation(names, le)
    }

    /// Isomorphism test by backtracking on height-compatible assignments.
    pub fn isomorphic(&self, other: &Lattice) -> bool {
        let n = self.len();
        if n != other.len() || self.rank() != other.rank() {
            return false;
        }
        let profile = |l: &Lattice, v: usize| {
            let up = l.covers.iter().filter(|&&(a, _)| a == v).count();
            let down = l.covers.iter().filter(|&&(_, b)| b == v).count();
            (l.height[v], up, down)
        };
        let mut mine: Vec<_> = (0..n).map(|v| profile(self, v)).collect();
        let mut theirs: Vec<_> = (0..n).map(|v| profile(other, v)).collect();
        mine.sort_unstable();
        theirs.sort_unstable();
        if mine != theirs {
            return false;
        }

        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn rec(a: &Lattice, b: &Lattice, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
            let n = a.len();
            if v == n {
                return true;
            }
            for w in 0..n {
                if used[w] || a.height[v] != b.height[w] {
                    continue;
                }
                let ok = (0..v).all(|u| {
                    a.le[u][v] == b.le[map[u]][w] && a.le[v][u] == b.le[w][map[u]]
                });
                if ok {
                    map[v] = w;
                    used[w] = true;
                    if rec(a, b, v + 1, map, used) {
                        return true;
                    }
                    used[w] = false;
                    map[v] = usize::MAX;
                }
            }
            false
        }
        rec(self, other, 0, &mut map, &mut used)
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lattice on {} elements (bottom {}, top {}, rank {})",
            self.len(),
            self.names[self.bottom],
            self.names[self.top],
            self.rank()
        )
    }
}

/// Unique greatest lower bound (`lower = true`) or least upper bound of a pair.
fn bound(le: &[Vec<bool>], a: usize, b: usize, lower: bool) -> Option<usize> {
    let n = le.len();
    let candidates: Vec<usize> = (0..n)
        .filter(|&c| {
            if lower {
                le[c][a] && le[c][b]
            } else {
                le[a][c] && le[b][c]
            }
        })
        .collect();
    candidates
        .iter()
        .copied()
        .find(|&m| candidates.iter().all(|&c| if lower { le[c][m] } else { le[m][c] }))
}

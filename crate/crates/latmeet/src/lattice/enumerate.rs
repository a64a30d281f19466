//! Exhaustive enumeration of all finite lattices up to isomorphism, up to
//! eight elements.
//!
//! Elements are added one at a time along a linear extension; at each step
//! the new element's strict down-set is chosen among the down-closed subsets
//! for which all meets with existing elements stay well defined (every
//! prefix of a lattice along a linear extension is a meet-semilattice).
//! A prefix with a unique maximal element is a complete lattice and is
//! recorded. Two pruning rules keep the search small without losing any
//! isomorphism class: heights must be non-decreasing along the extension
//! (every lattice has a height-sorted linear extension), and elements of
//! equal height — always pairwise incomparable — are required to appear with
//! non-decreasing down-set masks. Survivors are deduplicated by invariant
//! fingerprint plus explicit isomorphism tests.

use std::collections::HashMap;

use super::{Lattice, LatticeError};

const MAX_SIZE: usize = 8;

/// All lattices with between 1 and `max_size` elements, one representative
/// per isomorphism class, in a deterministic order (by size, then by
/// discovery order of the search). Sizes above eight are rejected.
pub fn enumerate_lattices(max_size: usize) -> Result<Vec<Lattice>, LatticeError> {
    if max_size > MAX_SIZE {
        return Err(LatticeError::SizeLimitExceeded { requested: max_size, max: MAX_SIZE });
    }
    let mut search = Search {
        max_size,
        down: Vec::new(),
        height: Vec::new(),
        found: Vec::new(),
        buckets: HashMap::new(),
    };
    search.step();
    let mut found = std::mem::take(&mut search.found);
    found.sort_by_key(|l| l.len());
    Ok(found)
}

type Fingerprint = (usize, usize, Vec<(usize, usize, usize)>);

struct Search {
    max_size: usize,
    /// Strict down-set of each element as a bitmask over earlier elements.
    down: Vec<u16>,
    height: Vec<usize>,
    found: Vec<Lattice>,
    buckets: HashMap<Fingerprint, Vec<usize>>,
}

impl Search {
    fn step(&mut self) {
        let k = self.down.len();
        if k > 0 && self.has_unique_top() {
            self.record();
        }
        if k == self.max_size {
            return;
        }
        let all: u16 = ((1u32 << k) - 1) as u16;
        let first: u16 = if k == 0 { 0 } else { 1 };
        for d in first..=all {
            if !self.candidate_ok(d, k, all) {
                continue;
            }
            let h = if k == 0 {
                0
            } else {
                1 + (0..k).filter(|&i| d & (1 << i) != 0).map(|i| self.height[i]).max().unwrap()
            };
            if k > 0 {
                // Height-sorted extension; ties ordered by down-set mask.
                if h < self.height[k - 1] || (h == self.height[k - 1] && d < self.down[k - 1]) {
                    continue;
                }
            }
            self.down.push(d);
            self.height.push(h);
            self.step();
            self.down.pop();
            self.height.pop();
        }
    }

    fn candidate_ok(&self, d: u16, k: usize, all: u16) -> bool {
        // Down-closed.
        for i in 0..k {
            if d & (1 << i) != 0 && self.down[i] & !d != 0 {
                return false;
            }
        }
        // Meet with every existing element stays unique: the common lower
        // bounds of the new element and x must have a single maximum.
        for x in 0..k {
            let common = d & (self.down[x] | (1 << x));
            if common == 0 {
                // Unreachable for k ≥ 1 since every nonempty down-closed set
                // contains the unique minimal element 0; keep as a guard.
                if k > 0 {
                    return false;
                }
                continue;
            }
            let mut has_max = false;
            for m in 0..k {
                if common & (1 << m) != 0 && common & !(self.down[m] | (1 << m)) == 0 {
                    has_max = true;
                    break;
                }
            }
            if !has_max {
                return false;
            }
        }
        let _ = all;
        true
    }

    fn has_unique_top(&self) -> bool {
        let k = self.down.len();
        let covered = self.down.iter().fold(0u16, |acc, &d| acc | d);
        let all: u16 = ((1u32 << k) - 1) as u16;
        (all & !covered).count_ones() == 1
    }

    fn record(&mut self) {
        let n = self.down.len();
        let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        let mut le = vec![vec![false; n]; n];
        for (j, &d) in self.down.iter().enumerate() {
            le[j][j] = true;
            for (i, row) in le.iter_mut().enumerate().take(j) {
                if d & (1 << i) != 0 {
                    row[j] = true;
                }
            }
        }
        let lattice = Lattice::from_relation(names, le)
            .expect("a meet-semilattice with a top element is a lattice");
        let key = fingerprint(&lattice);
        let bucket = self.buckets.entry(key).or_default();
        if bucket.iter().any(|&idx| self.found[idx].isomorphic(&lattice)) {
            return;
        }
        bucket.push(self.found.len());
        self.found.push(lattice);
    }
}

fn fingerprint(l: &Lattice) -> Fingerprint {
    let n = l.len();
    let mut profiles: Vec<(usize, usize, usize)> = (0..n)
        .map(|v| {
            let up = l.covers().iter().filter(|&&(a, _)| a == v).count();
            let down = l.covers().iter().filter(|&&(_, b)| b == v).count();
            (l.height(v), up, down)
        })
        .collect();
    profiles.sort_unstable();
    (n, l.covers().len(), profiles)
}

/// Number of automorphisms (order-preserving self-bijections).
pub fn automorphism_count(l: &Lattice) -> usize {
    let n = l.len();
    let mut used = vec![false; n];
    let mut map = vec![usize::MAX; n];
    fn rec(l: &Lattice, v: usize, map: &mut [usize], used: &mut [bool]) -> usize {
        let n = l.len();
        if v == n {
            return 1;
        }
        let mut total = 0;
        for w in 0..n {
            if used[w] || l.height(v) != l.height(w) {
                continue;
            }
            let ok =
                (0..v).all(|u| l.le(u, v) == l.le(map[u], w) && l.le(v, u) == l.le(w, map[u]));
            if ok {
                map[v] = w;
                used[w] = true;
                total += rec(l, v + 1, map, used);
                used[w] = false;
                map[v] = usize::MAX;
            }
        }
        total
    }
    rec(l, 0, &mut map, &mut used)
}

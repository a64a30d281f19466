//! Parameterized lattice families used throughout the crate: chains, Boolean
//! lattices, diamonds, the two-chain `lk` family, and Birkhoff lattices of
//! down-sets of a poset.

use super::{Lattice, LatticeError, Poset};

/// The chain `c1 < c2 < … < cm`. Requires `m ≥ 1`.
pub fn chain(m: usize) -> Result<Lattice, LatticeError> {
    if m == 0 {
        return Err(LatticeError::InvalidParameter("chain needs m >= 1".into()));
    }
    let names: Vec<String> = (1..=m).map(|i| format!("c{i}")).collect();
    let covers: Vec<(String, String)> =
        (1..m).map(|i| (format!("c{i}"), format!("c{}", i + 1))).collect();
    Lattice::from_covers(&names, &covers)
}

/// The Boolean lattice of subsets of an `n`-set, `n ≤ 7`. Element names are
/// `b` followed by the indicator bitstring (position `j` is element `j`).
pub fn boolean(n: usize) -> Result<Lattice, LatticeError> {
    if n > 7 {
        return Err(LatticeError::InvalidParameter(format!(
            "boolean lattice limited to n <= 7, got {n}"
        )));
    }
    let masks = sorted_masks((0..1u32 << n).collect());
    let names: Vec<String> = masks.iter().map(|&m| mask_name(m, n)).collect();
    let mut covers = Vec::new();
    for &m in &masks {
        for j in 0..n {
            if m & (1 << j) == 0 {
                covers.push((mask_name(m, n), mask_name(m | (1 << j), n)));
            }
        }
    }
    Lattice::from_covers(&names, &covers)
}

/// The diamond lattice with `n ≥ 3` coatoms: a bottom `z`, an antichain
/// `y1, …, yn`, and a top `x`. It has `n + 2` elements and is the smallest
/// family of modular, non-distributive lattices.
pub fn diamond(n: usize) -> Result<Lattice, LatticeError> {
    if n < 3 {
        return Err(LatticeError::InvalidParameter(format!(
            "diamond needs at least 3 middle elements, got {n}"
        )));
    }
    let mut names = vec!["x".to_string()];
    names.extend((1..=n).map(|i| format!("y{i}")));
    names.push("z".into());
    let mut covers = Vec::new();
    for i in 1..=n {
        covers.push(("z".to_string(), format!("y{i}")));
        covers.push((format!("y{i}"), "x".to_string()));
    }
    Lattice::from_covers(&names, &covers)
}

/// Two parallel chains `x1 < … < xn` and `y1 < … < yn` glued by `xi < yi`,
/// with one extra element `z` squeezed between `xk` and `y(k+1)`. Requires
/// `n ≥ 2` and `1 ≤ k ≤ n − 1`. The result is modular, non-distributive,
/// graded of rank `n`, with `2n + 1` elements; the interval `[xk, y(k+1)]`
/// is a three-middle diamond `{xk < {z, yk, x(k+1)} < y(k+1)}`.
pub fn lk(n: usize, k: usize) -> Result<Lattice, LatticeError> {
    if n < 2 {
        return Err(LatticeError::InvalidParameter(format!("lk needs n >= 2, got n = {n}")));
    }
    if k == 0 || k >= n {
        return Err(LatticeError::InvalidParameter(format!(
            "lk needs 1 <= k <= n - 1, got k = {k}, n = {n}"
        )));
    }
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.extend((1..=n).map(|i| format!("y{i}")));
    names.push("z".into());
    let mut covers = Vec::new();
    for i in 1..n {
        covers.push((format!("x{i}"), format!("x{}", i + 1)));
        covers.push((format!("y{i}"), format!("y{}", i + 1)));
    }
    for i in 1..=n {
        covers.push((format!("x{i}"), format!("y{i}")));
    }
    covers.push((format!("x{k}"), "z".to_string()));
    covers.push(("z".to_string(), format!("y{}", k + 1)));
    Lattice::from_covers(&names, &covers)
}

/// The Birkhoff lattice of down-sets of `p`, ordered by inclusion. Element
/// names are `d` followed by the indicator bitstring. Always distributive.
/// Limited to at most 128 down-sets.
pub fn birkhoff(p: &Poset) -> Result<Lattice, LatticeError> {
    let n = p.len();
    if n > 16 {
        return Err(LatticeError::InvalidParameter(format!(
            "birkhoff limited to posets with <= 16 elements, got {n}"
        )));
    }
    let mut ideals = Vec::new();
    for mask in 0..1u32 << n {
        let closed = (0..n).all(|i| {
            mask & (1 << i) == 0 || (0..n).all(|j| !p.le(j, i) || mask & (1 << j) != 0)
        });
        if closed {
            ideals.push(mask);
        }
    }
    if ideals.len() > 128 {
        return Err(LatticeError::InvalidParameter(format!(
            "birkhoff lattice would have {} elements; limit is 128",
            ideals.len()
        )));
    }
    let ideals = sorted_masks(ideals);
    let names: Vec<String> = ideals.iter().map(|&m| format!("d{}", bits(m, n))).collect();
    let mut covers = Vec::new();
    for &a in &ideals {
        for &b in &ideals {
            if a != b && a & b == a && (b & !a).count_ones() == 1 {
                covers.push((format!("d{}", bits(a, n)), format!("d{}", bits(b, n))));
            }
        }
    }
    Lattice::from_covers(&names, &covers)
}

/// The poset `p1 < p2 < … < pm`.
pub fn poset_chain(m: usize) -> Result<Poset, LatticeError> {
    if m == 0 {
        return Err(LatticeError::InvalidParameter("poset_chain needs m >= 1".into()));
    }
    let names: Vec<String> = (1..=m).map(|i| format!("p{i}")).collect();
    let covers: Vec<(String, String)> =
        (1..m).map(|i| (format!("p{i}"), format!("p{}", i + 1))).collect();
    Poset::from_covers(&names, &covers)
}

/// The poset of `n` pairwise incomparable elements.
pub fn poset_antichain(n: usize) -> Result<Poset, LatticeError> {
    if n == 0 {
        return Err(LatticeError::InvalidParameter("poset_antichain needs n >= 1".into()));
    }
    let names: Vec<String> = (1..=n).map(|i| format!("p{i}")).collect();
    Poset::from_covers(&names, &[] as &[(&str, &str)])
}

/// A chain `p1 < … < pm` together with one isolated element `q`.
pub fn chain_plus_point(m: usize) -> Result<Poset, LatticeError> {
    if m == 0 {
        return Err(LatticeError::InvalidParameter("chain_plus_point needs m >= 1".into()));
    }
    let mut names: Vec<String> = (1..=m).map(|i| format!("p{i}")).collect();
    names.push("q".into());
    let covers: Vec<(String, String)> =
        (1..m).map(|i| (format!("p{i}"), format!("p{}", i + 1))).collect();
    Poset::from_covers(&names, &covers)
}

fn sorted_masks(mut masks: Vec<u32>) -> Vec<u32> {
    masks.sort_by_key(|&m| (m.count_ones(), m));
    masks
}

fn bits(mask: u32, n: usize) -> String {
    (0..n).map(|j| if mask & (1 << j) != 0 { '1' } else { '0' }).collect()
}

fn mask_name(mask: u32, n: usize) -> String {
    format!("b{}", bits(mask, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_shape() {
        let c = chain(4).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.name(c.bottom()), "c1");
        assert_eq!(c.name(c.top()), "c4");
        assert!(c.is_distributive());
        assert!(chain(0).is_err());
    }

    #[test]
    fn boolean_shape() {
        let b3 = boolean(3).unwrap();
        assert_eq!(b3.len(), 8);
        assert!(b3.is_graded() && b3.is_distributive() && b3.is_modular());
        assert_eq!(b3.rank(), 3);
        assert!(b3.find_diamond().is_none());
        assert!(boolean(8).is_err());
    }

    #[test]
    fn diamond_shape() {
        assert!(diamond(2).is_err());
        let d = diamond(5).unwrap();
        assert_eq!(d.len(), 7);
        assert!(d.is_modular() && !d.is_distributive() && d.is_graded());
        assert_eq!(d.rank(), 2);
        assert_eq!(d.incomparable_pairs().len(), 10);
        let (z, x, mid) = d.find_diamond_interval().unwrap();
        assert_eq!((d.name(z), d.name(x), mid.len()), ("z", "x", 5));
    }

    #[test]
    fn lk_shape() {
        assert!(lk(1, 1).is_err());
        assert!(lk(3, 0).is_err());
        assert!(lk(3, 3).is_err());
        for (n, k) in [(2, 1), (3, 1), (3, 2), (4, 2), (5, 3)] {
            let l = lk(n, k).unwrap();
            assert_eq!(l.len(), 2 * n + 1, "size of lk({n},{k})");
            assert!(l.is_graded(), "lk({n},{k}) graded");
            assert!(l.is_modular(), "lk({n},{k}) modular");
            assert!(!l.is_distributive(), "lk({n},{k}) non-distributive");
            assert_eq!(l.rank(), n);
            assert_eq!(l.name(l.bottom()), "x1");
            assert_eq!(l.name(l.top()), format!("y{n}"));

            // The diamond interval sits between xk and y(k+1), with middles
            // {z, yk, x(k+1)}.
            let (z, x, mid) = l.find_diamond_interval().unwrap();
            assert_eq!(l.name(z), format!("x{k}"));
            assert_eq!(l.name(x), format!("y{}", k + 1));
            let mut mid_names: Vec<&str> = mid.iter().map(|&v| l.name(v)).collect();
            mid_names.sort_unstable();
            let mut expect = vec![format!("x{}", k + 1), format!("y{k}"), "z".to_string()];
            expect.sort();
            assert_eq!(mid_names, expect);
        }
    }

    #[test]
    fn lk_meets_and_joins_of_cross_pairs() {
        let l = lk(4, 2).unwrap();
        let idx = |s: &str| l.index_of(s).unwrap();
        // For i < j the pair (xj, yi) is incomparable with meet xi, join yj.
        for (i, j) in [(1usize, 2usize), (1, 3), (2, 4), (3, 4)] {
            let xj = idx(&format!("x{j}"));
            let yi = idx(&format!("y{i}"));
            assert!(!l.comparable(xj, yi));
            assert_eq!(l.name(l.meet(xj, yi)), format!("x{i}"));
            assert_eq!(l.name(l.join(xj, yi)), format!("y{j}"));
        }
    }

    #[test]
    fn birkhoff_of_antichain_is_boolean() {
        let p = poset_antichain(3).unwrap();
        let b = birkhoff(&p).unwrap();
        assert!(b.isomorphic(&boolean(3).unwrap()));
    }

    #[test]
    fn birkhoff_of_chain_plus_point() {
        for m in 1..=4 {
            let p = chain_plus_point(m).unwrap();
            let l = birkhoff(&p).unwrap();
            assert_eq!(l.len(), 2 * (m + 1));
            assert!(l.is_distributive());
            assert!(l.is_graded());
            assert_eq!(l.rank(), m + 1);
        }
    }

    #[test]
    fn birkhoff_of_chain_is_chain() {
        let p = poset_chain(3).unwrap();
        let l = birkhoff(&p).unwrap();
        assert!(l.isomorphic(&chain(4).unwrap()));
    }
}

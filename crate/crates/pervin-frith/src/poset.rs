//! Finite preorders and partial orders.
//!
//! The order is stored per element as the bitmask of everything above it, so
//! comparisons and up/down-set computations are single word operations.

use crate::bits::{self, Bits};
use crate::error::{Error, Result};

/// A reflexive transitive relation on `0..size`.
///
/// `up[i]` is the set `{j : i <= j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    size: usize,
    up: Vec<Bits>,
}

impl Preorder {
    /// Build from up-set rows, checking reflexivity and transitivity.
    pub fn new(up: Vec<Bits>) -> Result<Self> {
        let size = up.len();
        if size > bits::MAX_ELEMS {
            return Err(Error::SizeExceeded {
                what: "preorder",
                size,
                bound: bits::MAX_ELEMS,
            });
        }
        let all = bits::full(size);
        for (i, &row) in up.iter().enumerate() {
            if row & !all != 0 {
                return Err(Error::Invariant(format!("row {i} mentions elements >= {size}")));
            }
            if !bits::has(row, i) {
                return Err(Error::Invariant(format!("relation not reflexive at {i}")));
            }
        }
        for i in 0..size {
            for j in bits::iter(up[i]) {
                if up[j] & !up[i] != 0 {
                    return Err(Error::Invariant(format!(
                        "relation not transitive at {i} <= {j}"
                    )));
                }
            }
        }
        Ok(Preorder { size, up })
    }

    /// Reflexive-transitive closure of an arbitrary relation given as up-rows.
    pub fn closure(mut up: Vec<Bits>, size: usize) -> Self {
        for (i, row) in up.iter_mut().enumerate() {
            *row |= bits::bit(i);
        }
        // Warshall over bitmask rows.
        for k in 0..size {
            for i in 0..size {
                if bits::has(up[i], k) {
                    up[i] |= up[k];
                }
            }
        }
        Preorder { size, up }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        bits::has(self.up[i], j)
    }

    /// `{j : i <= j}`.
    pub fn up_set(&self, i: usize) -> Bits {
        self.up[i]
    }

    /// `{j : j <= i}`.
    pub fn down_set(&self, i: usize) -> Bits {
        (0..self.size).filter(|&j| self.leq(j, i)).fold(0, |m, j| m | bits::bit(j))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.size).all(|i| {
            bits::iter(self.up[i]).all(|j| i == j || !self.leq(j, i))
        })
    }

    /// Subsets closed upward.
    pub fn up_closed_sets(&self) -> Vec<Bits> {
        assert!(self.size <= 20, "up-set enumeration guard");
        let mut out = Vec::new();
        for cand in 0..=bits::full(self.size) {
            if bits::iter(cand).all(|i| self.up[i] & !cand == 0) {
                out.push(cand);
            }
        }
        out
    }
}

/// Every preorder on `n` labeled elements, by brute filtering of the
/// off-diagonal relation bits.
pub fn all_preorders(n: usize) -> Vec<Preorder> {
    assert!(n <= 5, "preorder enumeration guard");
    if n == 0 {
        return vec![Preorder { size: 0, up: vec![] }];
    }
    // Positions of the n(n-1) off-diagonal pairs.
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut up = vec![0 as Bits; n];
        for (i, row) in up.iter_mut().enumerate() {
            *row |= bits::bit(i);
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                up[i] |= bits::bit(j);
            }
        }
        let transitive = (0..n)
            .all(|i| bits::iter(up[i]).all(|j| up[j] & !up[i] == 0));
        if transitive {
            out.push(Preorder { size: n, up });
        }
    }
    out
}

/// A finite poset: an antisymmetric [`Preorder`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinPoset {
    pre: Preorder,
}

impl FinPoset {
    pub fn new(up: Vec<Bits>) -> Result<Self> {
        let pre = Preorder::new(up)?;
        Self::from_preorder(pre)
    }

    pub fn from_preorder(pre: Preorder) -> Result<Self> {
        if !pre.is_antisymmetric() {
            return Err(Error::Invariant("relation not antisymmetric".into()));
        }
        Ok(FinPoset { pre })
    }

    /// Poset from a cover (Hasse) relation; the order is the closure.
    pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut up = vec![0 as Bits; size];
        for &(lo, hi) in covers {
            if lo >= size || hi >= size {
                return Err(Error::Schema(format!("cover ({lo},{hi}) out of range")));
            }
            up[lo] |= bits::bit(hi);
        }
        Self::from_preorder(Preorder::closure(up, size))
    }

    pub fn size(&self) -> usize {
        self.pre.size()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.pre.leq(i, j)
    }

    pub fn up_set(&self, i: usize) -> Bits {
        self.pre.up_set(i)
    }

    pub fn down_set(&self, i: usize) -> Bits {
        self.pre.down_set(i)
    }

    pub fn preorder(&self) -> &Preorder {
        &self.pre
    }

    /// Covering pairs `(lo, hi)`: the transitive reduction, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for lo in 0..n {
            for hi in 0..n {
                if lo != hi && self.leq(lo, hi) {
                    let between = (0..n).any(|m| {
                        m != lo && m != hi && self.leq(lo, m) && self.leq(m, hi)
                    });
                    if !between {
                        out.push((lo, hi));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Maximal elements of a subset.
    pub fn maximal_in(&self, sub: Bits) -> Vec<usize> {
        bits::iter(sub)
            .filter(|&i| bits::iter(sub).all(|j| j == i || !self.leq(i, j)))
            .collect()
    }

    /// Minimal elements of a subset.
    pub fn minimal_in(&self, sub: Bits) -> Vec<usize> {
        bits::iter(sub)
            .filter(|&i| bits::iter(sub).all(|j| j == i || !self.leq(j, i)))
            .collect()
    }

    /// All down-closed subsets, sorted numerically.
    pub fn downsets(&self) -> Vec<Bits> {
        let n = self.size();
        assert!(n <= 20, "downset enumeration guard");
        let downs: Vec<Bits> = (0..n).map(|i| self.down_set(i)).collect();
        let mut out = Vec::new();
        for cand in 0..=bits::full(n) {
            if bits::iter(cand).all(|i| downs[i] & !cand == 0) {
                out.push(cand);
            }
        }
        out
    }

    /// Restriction to a subset of the carrier; element `k` of the result is
    /// the `k`-th member of `sub` in increasing order.
    pub fn restrict(&self, sub: Bits) -> FinPoset {
        let elems = bits::to_vec(sub);
        let up = elems
            .iter()
            .map(|&i| {
                elems
                    .iter()
                    .enumerate()
                    .filter(|&(_, &j)| self.leq(i, j))
                    .fold(0, |m, (k, _)| m | bits::bit(k))
            })
            .collect();
        FinPoset {
            pre: Preorder { size: elems.len(), up },
        }
    }

    /// Search for an order isomorphism onto `other`; returns the image vector.
    pub fn isomorphism(&self, other: &FinPoset) -> Option<Vec<usize>> {
        if self.size() != other.size() {
            return None;
        }
        let n = self.size();
        // Degree profile pruning: (|down|, |up|) must match.
        let prof = |p: &FinPoset, i: usize| (bits::count(p.down_set(i)), bits::count(p.up_set(i)));
        let mut img = vec![usize::MAX; n];
        let mut used: Bits = 0;
        fn go(
            a: &FinPoset,
            b: &FinPoset,
            prof: &dyn Fn(&FinPoset, usize) -> (usize, usize),
            img: &mut Vec<usize>,
            used: &mut Bits,
            i: usize,
        ) -> bool {
            let n = a.size();
            if i == n {
                return true;
            }
            for cand in 0..n {
                if bits::has(*used, cand) || prof(a, i) != prof(b, cand) {
                    continue;
                }
                let ok = (0..i).all(|k| {
                    a.leq(k, i) == b.leq(img[k], cand) && a.leq(i, k) == b.leq(cand, img[k])
                });
                if ok {
                    img[i] = cand;
                    *used |= bits::bit(cand);
                    if go(a, b, prof, img, used, i + 1) {
                        return true;
                    }
                    *used &= !bits::bit(cand);
                    img[i] = usize::MAX;
                }
            }
            false
        }
        if go(self, other, &prof, &mut img, &mut used, 0) {
            Some(img)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FinPoset {
        let up = (0..n).map(|i| bits::full(n) & !bits::full(i)).collect();
        FinPoset::new(up).unwrap()
    }

    #[test]
    fn closure_and_covers_of_chain() {
        let p = FinPoset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(p, chain(3));
    }

    #[test]
    fn antisymmetry_rejected() {
        let pre = Preorder::closure(vec![bits::bit(1), bits::bit(0)], 2);
        assert!(FinPoset::from_preorder(pre).is_err());
    }

    #[test]
    fn downsets_of_antichain() {
        let p = FinPoset::from_covers(2, &[]).unwrap();
        assert_eq!(p.downsets().len(), 4);
    }

    #[test]
    fn chain_iso_detects_shape() {
        let p = chain(3);
        let q = FinPoset::from_covers(3, &[(2, 1), (1, 0)]).unwrap();
        let img = p.isomorphism(&q).unwrap();
        assert_eq!(img, vec![2, 1, 0]);
        let r = FinPoset::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(p.isomorphism(&r).is_none());
    }

    #[test]
    fn labeled_preorder_counts() {
        assert_eq!(all_preorders(1).len(), 1);
        assert_eq!(all_preorders(2).len(), 4);
        assert_eq!(all_preorders(3).len(), 29);
        assert_eq!(all_preorders(4).len(), 355);
    }
}

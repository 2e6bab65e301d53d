//! Subsets of a carrier with at most 128 elements, stored as bitmasks.
//!
//! Every carrier in this crate (points of a space, elements of a lattice,
//! members of a family) is a dense index range `0..n`, so a `u128` covers all
//! sizes the size guards admit.  Word operations keep the closure algorithms
//! (sublattice generation, congruence joins, topology generation) cheap.

/// A subset of `0..n` for some carrier size `n <= 128`.
pub type Bits = u128;

/// Largest carrier size representable.
pub const MAX_ELEMS: usize = 128;

/// The full subset `{0, .., n-1}`.
pub fn full(n: usize) -> Bits {
    assert!(n <= MAX_ELEMS, "carrier size {n} exceeds {MAX_ELEMS}");
    if n == MAX_ELEMS {
        !0
    } else {
        (1 << n) - 1
    }
}

/// The singleton `{i}`.
pub fn bit(i: usize) -> Bits {
    1 << i
}

/// Does `b` contain `i`?
pub fn has(b: Bits, i: usize) -> bool {
    b >> i & 1 == 1
}

/// Number of elements.
pub fn count(b: Bits) -> usize {
    b.count_ones() as usize
}

/// Iterate over the elements of `b` in increasing order.
pub fn iter(b: Bits) -> impl Iterator<Item = usize> {
    let mut rest = b;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

/// Elements as a vector of indices.
pub fn to_vec(b: Bits) -> Vec<usize> {
    iter(b).collect()
}

/// Subset from a slice of indices.
pub fn from_indices(idx: &[usize]) -> Bits {
    idx.iter().fold(0, |acc, &i| acc | bit(i))
}

/// Iterate over all subsets of `b` (including empty and `b` itself),
/// in increasing numeric order of the masks.
pub fn subsets(b: Bits) -> impl Iterator<Item = Bits> {
    let mut next: Option<Bits> = Some(0);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == b {
            None
        } else {
            // Standard subset-enumeration step within mask `b`.
            Some(cur.wrapping_sub(b) & b)
        };
        Some(cur)
    })
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    assert!(n <= 8, "permutation enumeration guard");
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // Next lexicographic permutation.
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_enumeration_visits_all() {
        let b = from_indices(&[0, 2, 5]);
        let all: Vec<Bits> = subsets(b).collect();
        assert_eq!(all.len(), 8);
        assert!(all.contains(&0));
        assert!(all.contains(&b));
        for s in &all {
            assert_eq!(s & !b, 0);
        }
    }

    #[test]
    fn full_mask_edges() {
        assert_eq!(full(0), 0);
        assert_eq!(full(1), 1);
        assert_eq!(full(128), !0);
        assert_eq!(count(full(7)), 7);
    }

    #[test]
    fn iteration_order() {
        assert_eq!(to_vec(from_indices(&[3, 1, 4])), vec![1, 3, 4]);
    }
}

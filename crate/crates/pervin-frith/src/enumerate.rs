//! Exhaustive enumeration of the finite structures at desk scale.
//!
//! Everything here is deterministic: results come back in a fixed order so
//! reports and golden counts are reproducible run to run.

use crate::bitop::{self, BiFrame, BiSpace};
use crate::bits::{self, Bits};
use crate::family::{all_families, SubsetFamily};
use crate::frith::FrithPair;
use crate::lattice::{downset_lattice, FinLattice};
use crate::pervin::PervinSpace;
use crate::poset::FinPoset;

/// All posets with exactly `elems` elements and at most `max_downsets`
/// down-closed sets, one representative per isomorphism class.
///
/// Posets are grown one maximal element at a time (every poset arises this
/// way by deleting a maximal element), the new element's strict down-set
/// ranging over the down-closed subsets.  Down-set counts only grow under
/// extension, so the `max_downsets` cut prunes whole subtrees soundly.
pub fn posets_up_to_iso(elems: usize, max_downsets: usize) -> Vec<FinPoset> {
    assert!(elems <= 7, "poset generation guard");
    let mut level: Vec<FinPoset> = vec![FinPoset::new(vec![]).expect("empty poset")];
    for k in 0..elems {
        let mut next: Vec<FinPoset> = Vec::new();
        for p in &level {
            for d in p.downsets() {
                let mut up: Vec<Bits> = (0..k).map(|i| p.up_set(i)).collect();
                for i in bits::iter(d) {
                    up[i] |= bits::bit(k);
                }
                up.push(bits::bit(k));
                let q = FinPoset::new(up).expect("maximal extension is a poset");
                if q.downsets().len() > max_downsets {
                    continue;
                }
                if !next.iter().any(|r| iso_key(r) == iso_key(&q) && r.isomorphism(&q).is_some())
                {
                    next.push(q);
                }
            }
        }
        level = next;
    }
    level
}

/// Cheap isomorphism invariant used to avoid most pairwise checks.
fn iso_key(p: &FinPoset) -> Vec<(usize, usize)> {
    let mut key: Vec<(usize, usize)> = (0..p.size())
        .map(|i| (bits::count(p.down_set(i)), bits::count(p.up_set(i))))
        .collect();
    key.sort_unstable();
    key
}

/// All distributive lattices with exactly `size` elements, one per
/// isomorphism class, realized as down-set lattices of their
/// join-irreducible posets.  Distinct poset classes give distinct lattice
/// classes, so no second deduplication is needed.
pub fn distributive_lattices(size: usize) -> Vec<FinLattice> {
    assert!((1..=8).contains(&size), "distributive lattice enumeration guard");
    let mut out = Vec::new();
    for elems in 0..size {
        for p in posets_up_to_iso(elems, size) {
            if p.downsets().len() == size {
                out.push(downset_lattice(&p).expect("down-set lattice"));
            }
        }
    }
    out
}

/// Every distributive lattice with `1..=max_size` elements.
pub fn distributive_lattices_upto(max_size: usize) -> Vec<FinLattice> {
    (1..=max_size).flat_map(distributive_lattices).collect()
}

/// The lexicographically least relabeling of a family under ground-set
/// permutations: the canonical form used to count spaces up to
/// isomorphism.
pub fn canonical_family(family: &SubsetFamily) -> SubsetFamily {
    bits::permutations(family.ground_size())
        .iter()
        .map(|perm| family.permuted(perm))
        .min()
        .expect("at least the identity permutation")
}

/// All lattice families on `points` ground elements, one per isomorphism
/// class, in canonical form.
pub fn families_up_to_iso(points: usize) -> Vec<SubsetFamily> {
    let mut out: Vec<SubsetFamily> = all_families(points)
        .iter()
        .map(canonical_family)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Pervin spaces with at most `max_points` points and at most `max_family`
/// family members, one per isomorphism class, default point names.
pub fn pervin_spaces(max_points: usize, max_family: usize) -> Vec<PervinSpace> {
    let mut out = Vec::new();
    for points in 1..=max_points {
        for fam in families_up_to_iso(points) {
            if fam.len() <= max_family {
                out.push(PervinSpace::with_default_names(fam).expect("enumerated family"));
            }
        }
    }
    out
}

/// Labeled variant: every lattice family on every ground size, no
/// isomorphism collapsing.
pub fn pervin_spaces_labeled(max_points: usize, max_family: usize) -> Vec<PervinSpace> {
    let mut out = Vec::new();
    for points in 1..=max_points {
        for fam in all_families(points) {
            if fam.len() <= max_family {
                out.push(PervinSpace::with_default_names(fam).expect("enumerated family"));
            }
        }
    }
    out
}

/// All bounded sublattices of a lattice, as carrier masks in increasing
/// numeric order.
pub fn bounded_sublattices(l: &FinLattice) -> Vec<Bits> {
    assert!(l.size() <= 16, "sublattice sweep guard");
    let base = bits::bit(l.bottom()) | bits::bit(l.top());
    let mut out: Vec<Bits> = bits::subsets(l.all() & !base)
        .map(|s| s | base)
        .filter(|&s| l.is_bounded_sublattice(s))
        .collect();
    out.sort_unstable();
    out
}

/// All pairs with a join-dense designated part, up to `max_size` carrier
/// elements.  At finite scale join-density forces the designated part to
/// contain every join-irreducible and hence, being join-closed, the whole
/// carrier; so these are exactly the fully-designated pairs (a fact frozen
/// by a sweep test over all bounded sublattices).
pub fn frith_pairs(max_size: usize) -> Vec<FrithPair> {
    distributive_lattices_upto(max_size)
        .into_iter()
        .map(|l| FrithPair::full(l).expect("distributive carrier"))
        .collect()
}

/// All pairs of a distributive lattice with any bounded sublattice
/// designated, join-dense or not, up to `max_size` carrier elements.
pub fn frith_prepairs(max_size: usize) -> Vec<FrithPair> {
    let mut out = Vec::new();
    for l in distributive_lattices_upto(max_size) {
        for s in bounded_sublattices(&l) {
            out.push(FrithPair::new(l.clone(), s).expect("bounded sublattice"));
        }
    }
    out
}

/// The bispace family the law harness runs on: Skula images and doubled
/// embeddings of the enumerated Pervin spaces, plus the Sierpinski bispace
/// (the canonical non-zero-dimensional instance) when it fits the bound.
pub fn bispaces(max_points: usize, max_family: usize) -> Vec<BiSpace> {
    let mut out = Vec::new();
    for p in pervin_spaces(max_points, max_family) {
        out.push(bitop::skula_space(&p).expect("Skula bispace"));
        out.push(bitop::embed_bispace(&p).expect("doubled bispace"));
    }
    if max_points >= 2 {
        out.push(crate::catalog::sier_bispace());
    }
    out
}

/// The biframe family the law harness runs on: doubled embeddings of the
/// enumerated distributive lattices, Skula biframes of the fully-designated
/// pairs, plus the mixed-chain biframe when it fits the bound.
pub fn biframes(max_size: usize) -> Vec<BiFrame> {
    let mut out = Vec::new();
    for l in distributive_lattices_upto(max_size) {
        out.push(bitop::embed_biframe(&l).expect("doubled biframe"));
    }
    for f in frith_pairs(max_size) {
        out.push(bitop::skula_biframe(&f).expect("Skula biframe").biframe);
    }
    if max_size >= 3 {
        out.push(crate::catalog::biframe_332());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unlabeled_poset_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| posets_up_to_iso(n, usize::MAX >> 1).len())
            .collect();
        assert_eq!(counts, vec![1, 2, 5, 16, 63]);
    }

    #[test]
    fn distributive_lattice_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| distributive_lattices(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 5, 8, 15]);
        for l in distributive_lattices_upto(6) {
            assert!(l.is_distributive());
        }
    }

    #[test]
    fn topology_counts() {
        assert_eq!(all_families(1).len(), 1);
        assert_eq!(all_families(2).len(), 4);
        assert_eq!(all_families(3).len(), 29);
        assert_eq!(all_families(4).len(), 355);
        assert_eq!(families_up_to_iso(1).len(), 1);
        assert_eq!(families_up_to_iso(2).len(), 3);
        assert_eq!(families_up_to_iso(3).len(), 9);
        assert_eq!(families_up_to_iso(4).len(), 33);
    }

    #[test]
    fn canonical_form_is_idempotent_and_invariant() {
        for fam in all_families(3) {
            let canon = canonical_family(&fam);
            assert_eq!(canonical_family(&canon), canon);
            for perm in bits::permutations(3) {
                assert_eq!(canonical_family(&fam.permuted(&perm)), canon);
            }
        }
    }

    #[test]
    fn pervin_space_enumeration_bounds() {
        let spaces = pervin_spaces(3, 4);
        assert!(spaces.iter().all(|s| s.points() <= 3 && s.family().len() <= 4));
        // Every space is valid by construction and strongly exact.
        for s in &spaces {
            assert!(s.is_strongly_exact());
        }
    }

    #[test]
    fn bounded_sublattice_counts() {
        use crate::catalog;
        assert_eq!(bounded_sublattices(&catalog::c2()).len(), 1);
        assert_eq!(bounded_sublattices(&catalog::c3()).len(), 2);
        assert_eq!(bounded_sublattices(&catalog::chain(4)).len(), 4);
        assert_eq!(bounded_sublattices(&catalog::b4()).len(), 4);
        // Powerset of a two-element set: 4 sublattices is the frozen count.
        for s in bounded_sublattices(&catalog::b4()) {
            assert!(catalog::b4().is_bounded_sublattice(s));
        }
    }

    #[test]
    fn join_dense_parts_are_full_at_finite_scale() {
        for l in distributive_lattices_upto(5) {
            for s in bounded_sublattices(&l) {
                let pair = FrithPair::new(l.clone(), s).unwrap();
                assert_eq!(pair.is_frith(), s == l.all());
            }
        }
        assert_eq!(frith_pairs(5).len(), 8);
    }

    #[test]
    fn harness_families_are_valid_and_deterministic() {
        let xs = bispaces(2, 4);
        assert!(!xs.is_empty());
        let again = bispaces(2, 4);
        assert_eq!(xs.len(), again.len());
        assert!(xs.iter().zip(&again).all(|(a, b)| a == b));

        let ls = biframes(4);
        assert!(ls.iter().any(|l| l.main().size() == 3));
        for l in &ls {
            assert!(l.is_compact());
        }
    }
}

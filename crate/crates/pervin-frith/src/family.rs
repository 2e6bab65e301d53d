//! Families of subsets of a finite ground set.
//!
//! A family closed under pairwise union and intersection and containing both
//! the empty set and the whole ground set is simultaneously a bounded
//! sublattice of the powerset and (the ground being finite) a topology; both
//! readings are used throughout.

use crate::bits::{self, Bits};
use crate::error::{Error, Result};
use crate::lattice::{FinLattice, LatticeHom};
use crate::poset::FinPoset;

/// Cover searches on families run only below this member count.
const COVER_ENUM_MAX: usize = 16;

/// A set of subsets of `0..ground_size`, canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubsetFamily {
    ground_size: usize,
    members: Vec<Bits>,
}

impl SubsetFamily {
    /// Build a family; members are deduplicated and sorted numerically.
    pub fn new(ground_size: usize, mut members: Vec<Bits>) -> Result<Self> {
        if ground_size > 64 {
            return Err(Error::SizeExceeded {
                what: "ground set",
                size: ground_size,
                bound: 64,
            });
        }
        let full = bits::full(ground_size);
        if let Some(&bad) = members.iter().find(|&&m| m & !full != 0) {
            return Err(Error::Schema(format!(
                "member {bad:b} mentions points outside the ground set"
            )));
        }
        members.sort_unstable();
        members.dedup();
        Ok(SubsetFamily {
            ground_size,
            members,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn full_mask(&self) -> Bits {
        bits::full(self.ground_size)
    }

    pub fn members(&self) -> &[Bits] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: Bits) -> bool {
        self.members.binary_search(&m).is_ok()
    }

    pub fn index_of(&self, m: Bits) -> Option<usize> {
        self.members.binary_search(&m).ok()
    }

    /// Is this a bounded sublattice of the powerset (equivalently, a finite
    /// topology): bounds present and closed under pairwise union and
    /// intersection?
    pub fn is_lattice_family(&self) -> bool {
        self.contains(0)
            && self.contains(self.full_mask())
            && self.members.iter().all(|&a| {
                self.members
                    .iter()
                    .all(|&b| self.contains(a | b) && self.contains(a & b))
            })
    }

    /// Reject families that are not bounded sublattices, with a diagnostic.
    pub fn require_lattice_family(&self) -> Result<()> {
        if !self.contains(0) {
            return Err(Error::Invariant("family must contain the empty set".into()));
        }
        if !self.contains(self.full_mask()) {
            return Err(Error::Invariant("family must contain the ground set".into()));
        }
        for &a in &self.members {
            for &b in &self.members {
                if !self.contains(a | b) {
                    return Err(Error::Invariant(format!(
                        "family not closed under union: {a:b} | {b:b}"
                    )));
                }
                if !self.contains(a & b) {
                    return Err(Error::Invariant(format!(
                        "family not closed under intersection: {a:b} & {b:b}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Closed under complement (hence a Boolean subalgebra when it is a
    /// lattice family)?
    pub fn is_boolean_family(&self) -> bool {
        let full = self.full_mask();
        self.is_lattice_family() && self.members.iter().all(|&m| self.contains(full & !m))
    }

    /// Closure under pairwise union and intersection, with both bounds: the
    /// bounded sublattice of the powerset generated by the members.  For a
    /// finite ground set this is also the topology the members generate.
    pub fn lattice_closure(&self) -> SubsetFamily {
        let mut set: Vec<Bits> = self.members.clone();
        set.push(0);
        set.push(self.full_mask());
        set.sort_unstable();
        set.dedup();
        loop {
            let mut grew = false;
            let snapshot = set.clone();
            for (i, &a) in snapshot.iter().enumerate() {
                for &b in &snapshot[i + 1..] {
                    for c in [a | b, a & b] {
                        if set.binary_search(&c).is_err() {
                            set.push(c);
                            set.sort_unstable();
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                return SubsetFamily {
                    ground_size: self.ground_size,
                    members: set,
                };
            }
        }
    }

    /// The Boolean subalgebra of the powerset generated by the members:
    /// closure under union, intersection, and complement.
    pub fn boolean_closure(&self) -> SubsetFamily {
        let full = self.full_mask();
        let with_complements: Vec<Bits> = self
            .members
            .iter()
            .flat_map(|&m| [m, full & !m])
            .collect();
        SubsetFamily {
            ground_size: self.ground_size,
            members: with_complements,
        }
        .normalized()
        .lattice_closure()
    }

    fn normalized(mut self) -> Self {
        self.members.sort_unstable();
        self.members.dedup();
        self
    }

    /// The family of complements of all members.
    pub fn complements(&self) -> SubsetFamily {
        let full = self.full_mask();
        let mut members: Vec<Bits> = self.members.iter().map(|&m| full & !m).collect();
        members.sort_unstable();
        SubsetFamily {
            ground_size: self.ground_size,
            members,
        }
    }

    /// Members that are compact in the cover-refinement sense: every
    /// subfamily whose union dominates the member has a finite subfamily
    /// doing the same.  Above the enumeration guard every subfamily is its
    /// own finite witness and the search is skipped.
    pub fn compact_members(&self) -> SubsetFamily {
        let n = self.members.len();
        if n > COVER_ENUM_MAX {
            return self.clone();
        }
        let union = self.subfamily_unions();
        let compact: Vec<Bits> = self
            .members
            .iter()
            .copied()
            .filter(|&u| {
                (0..1usize << n).all(|cover| self.has_finite_subcover(&union, cover, u))
            })
            .collect();
        SubsetFamily {
            ground_size: self.ground_size,
            members: compact,
        }
    }

    /// Does the whole ground set admit a finite subcover of every cover?
    pub fn is_compact_space(&self) -> bool {
        let n = self.members.len();
        if n > COVER_ENUM_MAX {
            return true;
        }
        let union = self.subfamily_unions();
        let full = self.full_mask();
        (0..1usize << n).all(|cover| self.has_finite_subcover(&union, cover, full))
    }

    /// Unions of every subfamily, indexed by subfamily mask.
    fn subfamily_unions(&self) -> Vec<Bits> {
        let n = self.members.len();
        let mut union = vec![0 as Bits; 1usize << n];
        for cm in 1..1usize << n {
            let low = cm.trailing_zeros() as usize;
            union[cm] = union[cm & (cm - 1)] | self.members[low];
        }
        union
    }

    /// If `cover` covers `target`, shrink it to an inclusion-minimal
    /// subfamily and confirm that finite subfamily still covers.
    fn has_finite_subcover(&self, union: &[Bits], cover: usize, target: Bits) -> bool {
        if union[cover] & target != target {
            return true; // not a cover of target at all
        }
        let mut sub = cover;
        for i in 0..self.members.len() {
            let without = sub & !(1usize << i);
            if union[without] & target == target {
                sub = without;
            }
        }
        union[sub] & target == target
    }

    /// Rename points along a permutation: point `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> SubsetFamily {
        let mut members: Vec<Bits> = self
            .members
            .iter()
            .map(|&m| bits::iter(m).fold(0, |acc, i| acc | bits::bit(perm[i])))
            .collect();
        members.sort_unstable();
        SubsetFamily {
            ground_size: self.ground_size,
            members,
        }
    }

    /// Human-readable member label over ground names.
    pub fn member_label(&self, m: Bits, ground_names: &[String]) -> String {
        let items: Vec<&str> = bits::iter(m).map(|i| ground_names[i].as_str()).collect();
        format!("{{{}}}", items.join(","))
    }
}

/// The members of a lattice family as a lattice under inclusion.  The meet
/// and join tables are checked to be intersection and union of members,
/// tying the order-theoretic construction to the set semantics.
pub fn family_lattice(family: &SubsetFamily, ground_names: &[String]) -> Result<FinLattice> {
    family.require_lattice_family()?;
    let members = family.members();
    let n = members.len();
    if n > bits::MAX_ELEMS {
        return Err(Error::SizeExceeded {
            what: "family lattice",
            size: n,
            bound: bits::MAX_ELEMS,
        });
    }
    let up_rows: Vec<Bits> = members
        .iter()
        .map(|&m| {
            members
                .iter()
                .enumerate()
                .filter(|&(_, &e)| m & !e == 0)
                .fold(0, |acc, (j, _)| acc | bits::bit(j))
        })
        .collect();
    let names = members
        .iter()
        .map(|&m| family.member_label(m, ground_names))
        .collect();
    let lat = FinLattice::from_poset(FinPoset::new(up_rows)?, names)?;
    for i in 0..n {
        for j in 0..n {
            let inter = family.index_of(members[i] & members[j]).expect("closed");
            let uni = family.index_of(members[i] | members[j]).expect("closed");
            assert_eq!(lat.meet(i, j), inter, "meet is not intersection");
            assert_eq!(lat.join(i, j), uni, "join is not union");
        }
    }
    Ok(lat)
}

/// The spatial embedding of a distributive lattice: send each element `a` to
/// the set of prime filters containing `a`.  Injective for every finite
/// distributive lattice, which the construction asserts; the returned hom
/// targets the image family as a lattice.
pub fn phi_embedding(d: &FinLattice) -> Result<(SubsetFamily, LatticeHom)> {
    let filters = d.prime_filters()?;
    let images: Vec<Bits> = (0..d.size())
        .map(|a| {
            filters
                .iter()
                .enumerate()
                .filter(|&(_, &f)| bits::has(f, a))
                .fold(0, |acc, (k, _)| acc | bits::bit(k))
        })
        .collect();
    let family = SubsetFamily::new(filters.len(), images.clone())?;
    assert_eq!(
        family.len(),
        d.size(),
        "spatial embedding of a finite distributive lattice is injective"
    );
    let ground_names: Vec<String> = filters
        .iter()
        .map(|&f| format!("up({})", d.name(d.meet_set(f))))
        .collect();
    let image_lattice = family_lattice(&family, &ground_names)?;
    let map: Vec<usize> = images
        .iter()
        .map(|&m| family.index_of(m).expect("image member"))
        .collect();
    let hom = LatticeHom::new(d.clone(), image_lattice, map)?;
    assert!(hom.is_iso(), "spatial embedding is an isomorphism onto its image");
    Ok((family, hom))
}

/// Every lattice family on a labeled ground set of the given size.  Finite
/// topologies are exactly the up-set families of preorders, so the
/// enumeration walks preorders; the correspondence is one-to-one.
pub fn all_families(ground_size: usize) -> Vec<SubsetFamily> {
    let mut out: Vec<SubsetFamily> = crate::poset::all_preorders(ground_size)
        .iter()
        .map(|p| {
            SubsetFamily::new(ground_size, p.up_closed_sets()).expect("up-sets form a topology")
        })
        .collect();
    out.sort();
    debug_assert!(out.windows(2).all(|w| w[0] != w[1]));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn closure_generates_topology() {
        // Two incomparable sets on three points.
        let gens = SubsetFamily::new(3, vec![0b011, 0b110]).unwrap();
        let closed = gens.lattice_closure();
        assert!(closed.is_lattice_family());
        assert_eq!(closed.members(), &[0b000, 0b010, 0b011, 0b110, 0b111]);
    }

    #[test]
    fn boolean_closure_of_sierpinski_family_is_powerset() {
        let fam = SubsetFamily::new(2, vec![0b00, 0b01, 0b11]).unwrap();
        let sym = fam.boolean_closure();
        assert_eq!(sym.len(), 4);
        assert!(sym.is_boolean_family());
        // Idempotent.
        assert_eq!(sym.boolean_closure(), sym);
    }

    #[test]
    fn family_lattice_of_powerset_is_boolean() {
        let fam = SubsetFamily::new(2, vec![0b00, 0b01, 0b10, 0b11]).unwrap();
        let names = vec!["a".to_string(), "b".to_string()];
        let lat = family_lattice(&fam, &names).unwrap();
        assert!(lat.is_boolean());
        assert_eq!(lat.size(), 4);
    }

    #[test]
    fn compact_members_cover_search_is_total() {
        let fam = SubsetFamily::new(3, vec![0b000, 0b001, 0b011, 0b111]).unwrap();
        assert_eq!(fam.compact_members(), fam);
    }

    #[test]
    fn phi_embedding_on_catalog() {
        let (family, hom) = phi_embedding(&catalog::b4()).unwrap();
        assert_eq!(family.ground_size(), 2);
        assert_eq!(family.len(), 4);
        assert!(hom.is_iso());
        let (family, hom) = phi_embedding(&catalog::c3()).unwrap();
        assert_eq!(family.ground_size(), 2);
        assert_eq!(family.len(), 3);
        assert!(hom.is_iso());
    }
}

//! Lattice congruences and congruence frames.
//!
//! A congruence is an equivalence relation compatible with meet and join.
//! For an element `a` the relation identifying `x` with `y` when
//! `a \/ x = a \/ y` is written `nabla a` (its blocks shape the quotient
//! above `a`), and the one identifying along `a /\ x = a /\ y` is `delta a`.
//! The two are complements of one another inside the congruence lattice,
//! which is what makes congruence frames the right home for adding
//! complements to designated elements.

use std::collections::BTreeMap;

use crate::bits::{self, Bits};
use crate::error::{Error, Result};
use crate::lattice::{FinLattice, LatticeHom};
use crate::poset::FinPoset;

/// Carrier-size guard for whole-lattice congruence enumeration.
pub const CONGRUENCE_ENUM_BOUND: usize = 10;

/// An equivalence relation on lattice elements in canonical form:
/// `repr[i]` is the least element of the block of `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Congruence {
    repr: Vec<usize>,
}

impl Congruence {
    /// The diagonal: everything in its own block.
    pub fn diagonal(n: usize) -> Self {
        Congruence {
            repr: (0..n).collect(),
        }
    }

    /// Everything identified.
    pub fn total(n: usize) -> Self {
        Congruence { repr: vec![0; n] }
    }

    /// Canonicalize an arbitrary block-assignment vector.
    pub fn from_assignment(assign: &[usize]) -> Self {
        let n = assign.len();
        let mut first: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, &b) in assign.iter().enumerate() {
            first.entry(b).or_insert(i);
        }
        let repr = (0..n).map(|i| first[&assign[i]]).collect();
        Congruence { repr }
    }

    pub fn size(&self) -> usize {
        self.repr.len()
    }

    pub fn same(&self, i: usize, j: usize) -> bool {
        self.repr[i] == self.repr[j]
    }

    /// Blocks as masks, ordered by least element.
    pub fn blocks(&self) -> Vec<Bits> {
        let mut by_rep: BTreeMap<usize, Bits> = BTreeMap::new();
        for (i, &r) in self.repr.iter().enumerate() {
            *by_rep.entry(r).or_insert(0) |= bits::bit(i);
        }
        by_rep.into_values().collect()
    }

    /// Refinement order: every block of `self` sits inside a block of `other`.
    pub fn refines(&self, other: &Congruence) -> bool {
        (0..self.size()).all(|i| !self.same(i, self.repr[i]) || other.same(i, self.repr[i]))
    }

    /// Compatibility with the lattice operations.
    pub fn is_congruence(&self, l: &FinLattice) -> bool {
        let n = l.size();
        for a in 0..n {
            let b = self.repr[a];
            if a == b {
                continue;
            }
            for c in 0..n {
                if !self.same(l.meet(a, c), l.meet(b, c)) || !self.same(l.join(a, c), l.join(b, c)) {
                    return false;
                }
            }
        }
        true
    }

    /// Partition label over element names, blocks separated by `|`.
    pub fn label(&self, l: &FinLattice) -> String {
        let parts: Vec<String> = self
            .blocks()
            .iter()
            .map(|&b| {
                bits::iter(b)
                    .map(|i| l.name(i).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        parts.join(" | ")
    }
}

/// The relation `x ~ y iff a \/ x = a \/ y`, checked to be a congruence.
pub fn nabla(l: &FinLattice, a: usize) -> Result<Congruence> {
    let assign: Vec<usize> = (0..l.size()).map(|x| l.join(a, x)).collect();
    let c = Congruence::from_assignment(&assign);
    if !c.is_congruence(l) {
        return Err(Error::Invariant(format!(
            "join-classes of element {a} do not form a congruence"
        )));
    }
    Ok(c)
}

/// The relation `x ~ y iff a /\ x = a /\ y`, checked to be a congruence.
pub fn delta(l: &FinLattice, a: usize) -> Result<Congruence> {
    let assign: Vec<usize> = (0..l.size()).map(|x| l.meet(a, x)).collect();
    let c = Congruence::from_assignment(&assign);
    if !c.is_congruence(l) {
        return Err(Error::Invariant(format!(
            "meet-classes of element {a} do not form a congruence"
        )));
    }
    Ok(c)
}

/// Intersection of congruences (blockwise common refinement).
pub fn congruence_meet(a: &Congruence, b: &Congruence) -> Congruence {
    let n = a.size();
    let assign: Vec<usize> = (0..n).map(|i| a.repr[i] * n + b.repr[i]).collect();
    Congruence::from_assignment(&assign)
}

/// Join of congruences: merge blocks, then close under compatibility with
/// the lattice operations until a fixpoint.
pub fn congruence_join(l: &FinLattice, a: &Congruence, b: &Congruence) -> Congruence {
    let n = l.size();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    fn union(parent: &mut Vec<usize>, i: usize, j: usize) -> bool {
        let (ri, rj) = (find(parent, i), find(parent, j));
        if ri == rj {
            return false;
        }
        let (lo, hi) = (ri.min(rj), ri.max(rj));
        parent[hi] = lo;
        true
    }
    for i in 0..n {
        union(&mut parent, i, a.repr[i]);
        union(&mut parent, i, b.repr[i]);
    }
    // Compatibility closure: merged pairs force merges of meets and joins.
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in x + 1..n {
                if find(&mut parent, x) == find(&mut parent, y) {
                    for c in 0..n {
                        changed |= union(&mut parent, l.meet(x, c), l.meet(y, c));
                        changed |= union(&mut parent, l.join(x, c), l.join(y, c));
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let assign: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    let out = Congruence::from_assignment(&assign);
    debug_assert!(out.is_congruence(l));
    out
}

/// The least congruence identifying `a` with `b`.
pub fn principal_congruence(l: &FinLattice, a: usize, b: usize) -> Congruence {
    let n = l.size();
    let mut seed: Vec<usize> = (0..n).collect();
    seed[a.max(b)] = a.min(b);
    let merged = Congruence::from_assignment(&seed);
    // Join with the diagonal performs exactly the compatibility closure.
    congruence_join(l, &merged, &Congruence::diagonal(n))
}

/// A set of congruences on a base lattice that is closed under meet and
/// join, packaged as a lattice under refinement together with the canonical
/// maps in and out of the base.
#[derive(Debug, Clone)]
pub struct CongruenceFrame {
    pub base: FinLattice,
    /// Members sorted canonically (lexicographic block assignment).
    pub members: Vec<Congruence>,
    /// The members under the refinement order.
    pub lattice: FinLattice,
    /// `a  |->  nabla a`, a lattice embedding of the base.  Present when
    /// every `nabla a` is a congruence and a member, which holds for
    /// distributive bases; absent for lattices like the pentagon whose
    /// congruence lattice still makes sense but carries no such embedding.
    pub nabla: Option<LatticeHom>,
    /// `s  |->  index of delta s`, for the designated elements only.
    pub delta: Vec<Option<usize>>,
}

impl CongruenceFrame {
    pub fn index_of(&self, c: &Congruence) -> Option<usize> {
        self.members.binary_search(c).ok()
    }

    pub fn nabla_hom(&self) -> &LatticeHom {
        self.nabla
            .as_ref()
            .expect("the nabla embedding needs a distributive base")
    }
}

/// Closure of the seed congruences under pairwise meet and join.
fn close_congruence_set(l: &FinLattice, seeds: Vec<Congruence>) -> Vec<Congruence> {
    let mut set: Vec<Congruence> = seeds;
    set.sort();
    set.dedup();
    let mut frontier: Vec<Congruence> = set.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for m in set.clone() {
                for c in [congruence_meet(f, &m), congruence_join(l, f, &m)] {
                    if let Err(pos) = set.binary_search(&c) {
                        set.insert(pos, c.clone());
                        next.push(c);
                    }
                }
            }
        }
        frontier = next;
    }
    set
}

/// Package a meet/join-closed set of congruences as a [`CongruenceFrame`],
/// checking that the refinement order really is a lattice whose operations
/// agree with congruence meet and join.
fn build_frame(l: &FinLattice, members: Vec<Congruence>, designated: Bits) -> Result<CongruenceFrame> {
    let k = members.len();
    if k > bits::MAX_ELEMS {
        return Err(Error::SizeExceeded {
            what: "congruence frame",
            size: k,
            bound: bits::MAX_ELEMS,
        });
    }
    let up_rows: Vec<Bits> = members
        .iter()
        .map(|c| {
            members
                .iter()
                .enumerate()
                .filter(|&(_, d)| c.refines(d))
                .fold(0, |m, (j, _)| m | bits::bit(j))
        })
        .collect();
    let names = members.iter().map(|c| c.label(l)).collect();
    let lattice = FinLattice::from_poset(FinPoset::new(up_rows)?, names)?;
    let locate = |c: &Congruence| -> usize {
        members
            .binary_search(c)
            .expect("congruence set closed under meet and join")
    };
    for i in 0..k {
        for j in 0..k {
            assert_eq!(
                lattice.meet(i, j),
                locate(&congruence_meet(&members[i], &members[j])),
                "refinement meet disagrees with congruence intersection"
            );
            assert_eq!(
                lattice.join(i, j),
                locate(&congruence_join(l, &members[i], &members[j])),
                "refinement join disagrees with congruence join"
            );
        }
    }
    let nabla_hom = if l.is_distributive() {
        let mut nabla_map = Vec::with_capacity(l.size());
        for a in 0..l.size() {
            nabla_map.push(locate(&nabla(l, a)?));
        }
        let hom = LatticeHom::new(l.clone(), lattice.clone(), nabla_map)?;
        assert!(hom.is_injective(), "nabla is an embedding");
        Some(hom)
    } else {
        None
    };
    let mut delta_idx: Vec<Option<usize>> = vec![None; l.size()];
    for s in bits::iter(designated) {
        delta_idx[s] = delta(l, s).ok().map(|c| locate(&c));
    }
    Ok(CongruenceFrame {
        base: l.clone(),
        members,
        lattice,
        nabla: nabla_hom,
        delta: delta_idx,
    })
}

/// All congruences of the lattice, enumerated as the join-closure of the
/// principal congruences (every congruence is the join of the principal
/// ones it contains).  Guarded by [`CONGRUENCE_ENUM_BOUND`].
pub fn all_congruences(l: &FinLattice) -> Result<CongruenceFrame> {
    let n = l.size();
    if n > CONGRUENCE_ENUM_BOUND {
        return Err(Error::SizeExceeded {
            what: "congruence enumeration",
            size: n,
            bound: CONGRUENCE_ENUM_BOUND,
        });
    }
    let mut seeds = vec![Congruence::diagonal(n)];
    for a in 0..n {
        for b in a + 1..n {
            seeds.push(principal_congruence(l, a, b));
        }
    }
    let members = close_congruence_set(l, seeds);
    build_frame(l, members, l.all())
}

/// Brute-force congruence enumeration: filter every set partition of the
/// carrier for compatibility.  Oracle for [`all_congruences`] on small
/// lattices.
pub fn all_congruences_bruteforce(l: &FinLattice) -> Vec<Congruence> {
    let n = l.size();
    assert!(n <= 8, "partition enumeration guard");
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let c = Congruence::from_assignment(&rgs);
        if c.is_congruence(l) {
            out.push(c);
        }
        // Next restricted growth string.
        let mut i = n;
        loop {
            if i == 1 {
                out.sort();
                out.dedup();
                return out;
            }
            i -= 1;
            let cap = rgs[..i].iter().copied().max().unwrap_or(0) + 1;
            if rgs[i] < cap {
                rgs[i] += 1;
                rgs[i + 1..].iter_mut().for_each(|v| *v = 0);
                break;
            }
        }
    }
}

/// The subframe of the congruence lattice generated by all `nabla a`
/// together with `delta s` for the designated elements `s`.
pub fn generated_congruence_subframe(l: &FinLattice, designated: Bits) -> Result<CongruenceFrame> {
    let mut seeds = Vec::new();
    for a in 0..l.size() {
        seeds.push(nabla(l, a)?);
    }
    for s in bits::iter(designated) {
        seeds.push(delta(l, s)?);
    }
    let members = close_congruence_set(l, seeds);
    build_frame(l, members, designated)
}

/// Quotient of the lattice by a congruence: the blocks under the induced
/// order, with the projection homomorphism.
pub fn quotient(l: &FinLattice, c: &Congruence) -> Result<(FinLattice, LatticeHom)> {
    if !c.is_congruence(l) {
        return Err(Error::Invariant("relation is not a congruence".into()));
    }
    let blocks = c.blocks();
    let k = blocks.len();
    let reps: Vec<usize> = blocks.iter().map(|&b| bits::iter(b).next().unwrap()).collect();
    let block_of = |x: usize| reps.iter().position(|&r| c.same(r, x)).unwrap();
    // [x] <= [y] iff [x /\ y] = [x]; compatibility makes this well-defined.
    let up_rows: Vec<Bits> = (0..k)
        .map(|i| {
            (0..k)
                .filter(|&j| block_of(l.meet(reps[i], reps[j])) == i)
                .fold(0, |m, j| m | bits::bit(j))
        })
        .collect();
    let names = blocks
        .iter()
        .map(|&b| {
            bits::iter(b)
                .map(|i| l.name(i).to_string())
                .collect::<Vec<_>>()
                .join("+")
        })
        .collect();
    let q_lat = FinLattice::from_poset(FinPoset::new(up_rows)?, names)?;
    for i in 0..k {
        for j in 0..k {
            assert_eq!(q_lat.meet(i, j), block_of(l.meet(reps[i], reps[j])));
            assert_eq!(q_lat.join(i, j), block_of(l.join(reps[i], reps[j])));
        }
    }
    let proj = LatticeHom::new(l.clone(), q_lat.clone(), (0..l.size()).map(block_of).collect())?;
    Ok((q_lat, proj))
}

/// Extend a homomorphism `h` along the congruence frame on its domain: the
/// unique map out of the frame generated by the designated elements that
/// agrees with `h` on every `nabla a` and sends `delta s` to the complement
/// of `h(s)`.  Requires every `h(s)` to be complemented in the codomain.
pub fn universal_extension(
    h: &LatticeHom,
    designated: Bits,
) -> Result<(CongruenceFrame, LatticeHom)> {
    let l = &h.dom;
    let m = &h.cod;
    let mut complement = vec![None; l.size()];
    for s in bits::iter(designated) {
        complement[s] = Some(m.complement_of(h.apply(s)).ok_or(Error::NotComplemented(s))?);
    }
    let frame = generated_congruence_subframe(l, designated)?;
    let k = frame.members.len();
    let mut value: Vec<Option<usize>> = vec![None; k];
    let set_value = |slot: &mut Option<usize>, v: usize| match slot {
        None => {
            *slot = Some(v);
            true
        }
        Some(old) => {
            assert_eq!(*old, v, "universal extension got conflicting values");
            false
        }
    };
    for a in 0..l.size() {
        set_value(&mut value[frame.nabla_hom().apply(a)], h.apply(a));
    }
    for s in bits::iter(designated) {
        set_value(&mut value[frame.delta[s].unwrap()], complement[s].unwrap());
    }
    // Propagate through meets and joins until every member has a value.
    loop {
        let mut changed = false;
        for i in 0..k {
            for j in 0..k {
                if let (Some(vi), Some(vj)) = (value[i], value[j]) {
                    let mt = frame.lattice.meet(i, j);
                    let jn = frame.lattice.join(i, j);
                    changed |= set_value(&mut value[mt], m.meet(vi, vj));
                    changed |= set_value(&mut value[jn], m.join(vi, vj));
                }
            }
        }
        if !changed {
            break;
        }
    }
    let map: Vec<usize> = value
        .into_iter()
        .map(|v| v.expect("closure reaches every member"))
        .collect();
    // Validation here is the heart of the theorem: the forced assignment is
    // a lattice homomorphism.
    let ext = LatticeHom::new(frame.lattice.clone(), m.clone(), map)?;
    Ok((frame, ext))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::lattice::{enumerate_homs, find_isomorphism};

    #[test]
    fn nabla_delta_on_chain() {
        let c3 = catalog::c3();
        let nab = nabla(&c3, 1).unwrap();
        assert_eq!(nab.blocks(), vec![bits::from_indices(&[0, 1]), bits::bit(2)]);
        let del = delta(&c3, 1).unwrap();
        assert_eq!(del.blocks(), vec![bits::bit(0), bits::from_indices(&[1, 2])]);
        // Complements in the congruence lattice.
        assert_eq!(congruence_meet(&nab, &del), Congruence::diagonal(3));
        assert_eq!(congruence_join(&c3, &nab, &del), Congruence::total(3));
    }

    #[test]
    fn nabla_fails_on_diamond() {
        // x ~ 0 under join-classes of x, but meets with y split the blocks.
        assert!(nabla(&catalog::m3(), 1).is_err());
    }

    #[test]
    fn nabla_turns_meets_to_meets_delta_swaps() {
        let b4 = catalog::b4();
        for a in 0..4 {
            for b in 0..4 {
                let na = nabla(&b4, a).unwrap();
                let nb = nabla(&b4, b).unwrap();
                assert_eq!(congruence_meet(&na, &nb), nabla(&b4, b4.meet(a, b)).unwrap());
                assert_eq!(
                    congruence_join(&b4, &na, &nb),
                    nabla(&b4, b4.join(a, b)).unwrap()
                );
                let da = delta(&b4, a).unwrap();
                let db = delta(&b4, b).unwrap();
                assert_eq!(
                    congruence_join(&b4, &da, &db),
                    delta(&b4, b4.meet(a, b)).unwrap()
                );
                assert_eq!(congruence_meet(&da, &db), delta(&b4, b4.join(a, b)).unwrap());
            }
        }
    }

    #[test]
    fn congruences_of_c3_form_b4() {
        let c3 = catalog::c3();
        let frame = all_congruences(&c3).unwrap();
        assert_eq!(frame.members.len(), 4);
        assert!(find_isomorphism(&frame.lattice, &catalog::b4()).is_some());
        // Cross-check against the partition filter.
        assert_eq!(frame.members, all_congruences_bruteforce(&c3));
    }

    #[test]
    fn congruence_counts_match_bruteforce() {
        for l in [catalog::c2(), catalog::c3(), catalog::b4(), catalog::chain(4), catalog::n5(), catalog::m3()] {
            let fast = all_congruences(&l).unwrap();
            let brute = all_congruences_bruteforce(&l);
            assert_eq!(fast.members, brute);
        }
        // Boolean algebras: one congruence per subset of atoms.
        assert_eq!(all_congruences(&catalog::b4()).unwrap().members.len(), 4);
        assert_eq!(all_congruences(&catalog::b8()).unwrap().members.len(), 8);
    }

    #[test]
    fn quotient_by_nabla_is_upper_interval() {
        let c3 = catalog::c3();
        let (q, proj) = quotient(&c3, &nabla(&c3, 1).unwrap()).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(proj.map, vec![0, 0, 1]);
        // Right adjoint picks block tops: q_* (bottom) = m.
        assert_eq!(proj.right_adjoint(), vec![1, 2]);
        let (q, _) = quotient(&c3, &delta(&c3, 1).unwrap()).unwrap();
        assert_eq!(q.size(), 2); // lower interval below m
        let (q, _) = quotient(&c3, &Congruence::total(3)).unwrap();
        assert_eq!(q.size(), 1);
    }

    #[test]
    fn generated_subframe_of_chain_with_all_elements() {
        let c3 = catalog::c3();
        let frame = generated_congruence_subframe(&c3, c3.all()).unwrap();
        assert_eq!(frame.members.len(), 4);
        assert!(find_isomorphism(&frame.lattice, &catalog::b4()).is_some());
        // nabla and delta of each designated element are complements.
        for s in 0..3 {
            let n_idx = frame.nabla_hom().apply(s);
            let d_idx = frame.delta[s].unwrap();
            assert_eq!(frame.lattice.meet(n_idx, d_idx), frame.lattice.bottom());
            assert_eq!(frame.lattice.join(n_idx, d_idx), frame.lattice.top());
        }
    }

    #[test]
    fn universal_extension_on_chain_into_square() {
        // h: C3 -> B4 with m |-> {a}; delta m must go to {b}.
        let h = LatticeHom::new(catalog::c3(), catalog::b4(), vec![0, 1, 3]).unwrap();
        let (frame, ext) = universal_extension(&h, bits::bit(1)).unwrap();
        assert_eq!(frame.members.len(), 4);
        assert_eq!(ext.apply(frame.delta[1].unwrap()), 2);
        // ext restricted along nabla recovers h.
        for a in 0..3 {
            assert_eq!(ext.apply(frame.nabla_hom().apply(a)), h.apply(a));
        }
        // Uniqueness: no other hom out of the frame restricts to h.
        let all = enumerate_homs(&frame.lattice, &catalog::b4()).unwrap();
        let restricting: Vec<_> = all
            .into_iter()
            .filter(|g| (0..3).all(|a| g.apply(frame.nabla_hom().apply(a)) == h.apply(a)))
            .collect();
        assert_eq!(restricting.len(), 1);
        assert_eq!(restricting[0].map, ext.map);
    }

    #[test]
    fn universal_extension_requires_complemented_images() {
        // id on C3: m is not complemented.
        let id = LatticeHom::identity(&catalog::c3());
        assert!(matches!(
            universal_extension(&id, bits::bit(1)),
            Err(Error::NotComplemented(1))
        ));
    }
}

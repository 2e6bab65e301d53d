//! Finite bounded lattices, their homomorphisms, and the representation
//! theory used everywhere else: join-irreducibles, prime filters, ideal and
//! downset lattices, and the Birkhoff isomorphism for distributive lattices.
//!
//! A lattice is stored with full meet/join tables computed (and checked) from
//! its order, so all higher-level operations are table lookups.

use crate::bits::{self, Bits};
use crate::error::{Error, Result};
use crate::poset::FinPoset;

/// Exhaustive cover searches (compactness) run only below this carrier size;
/// larger lattices fall back to the finite-cover collapse argument.
const COMPACT_ENUM_MAX: usize = 10;

/// Guard for hom-set enumeration: candidate assignments explored.
const HOM_SEARCH_MAX: u128 = 4_000_000;

/// A finite bounded lattice over carrier `0..size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinLattice {
    poset: FinPoset,
    names: Vec<String>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FinLattice {
    /// Validate that the poset is a bounded lattice and tabulate its
    /// operations.  Fails with [`Error::NotALattice`] naming an offending
    /// pair when some infimum or supremum is missing or ambiguous.
    pub fn from_poset(poset: FinPoset, names: Vec<String>) -> Result<Self> {
        let n = poset.size();
        if n == 0 {
            return Err(Error::Invariant("lattice carrier is empty".into()));
        }
        if names.len() != n {
            return Err(Error::Schema(format!(
                "expected {n} element names, got {}",
                names.len()
            )));
        }
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for i in 0..n {
            for j in i..n {
                let lower = poset.down_set(i) & poset.down_set(j);
                let inf = match poset.maximal_in(lower)[..] {
                    [m] => m,
                    _ => return Err(Error::NotALattice(i, j, "infimum")),
                };
                let upper = poset.up_set(i) & poset.up_set(j);
                let sup = match poset.minimal_in(upper)[..] {
                    [m] => m,
                    _ => return Err(Error::NotALattice(i, j, "supremum")),
                };
                meet[i * n + j] = inf;
                meet[j * n + i] = inf;
                join[i * n + j] = sup;
                join[j * n + i] = sup;
            }
        }
        let bottom = match poset.minimal_in(bits::full(n))[..] {
            [m] => m,
            _ => return Err(Error::NotALattice(0, 0, "bottom")),
        };
        let top = match poset.maximal_in(bits::full(n))[..] {
            [m] => m,
            _ => return Err(Error::NotALattice(0, 0, "top")),
        };
        let l = FinLattice {
            poset,
            names,
            meet,
            join,
            bottom,
            top,
        };
        l.check_laws()?;
        Ok(l)
    }

    /// Lattice from Hasse covers with generated element names.
    pub fn from_covers(size: usize, covers: &[(usize, usize)], names: Vec<String>) -> Result<Self> {
        Self::from_poset(FinPoset::from_covers(size, covers)?, names)
    }

    /// Idempotency, commutativity, absorption on all pairs; associativity on
    /// small carriers (it follows from the order-theoretic construction, the
    /// check guards against table corruption).
    fn check_laws(&self) -> Result<()> {
        let n = self.size();
        for a in 0..n {
            if self.meet(a, a) != a || self.join(a, a) != a {
                return Err(Error::Invariant(format!("operations not idempotent at {a}")));
            }
            for b in 0..n {
                if self.meet(a, b) != self.meet(b, a) || self.join(a, b) != self.join(b, a) {
                    return Err(Error::Invariant(format!("operations not commutative at ({a},{b})")));
                }
                if self.meet(a, self.join(a, b)) != a || self.join(a, self.meet(a, b)) != a {
                    return Err(Error::Invariant(format!("absorption fails at ({a},{b})")));
                }
            }
        }
        if n <= 40 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if self.meet(self.meet(a, b), c) != self.meet(a, self.meet(b, c))
                            || self.join(self.join(a, b), c) != self.join(a, self.join(b, c))
                        {
                            return Err(Error::Invariant(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.poset.size()
    }

    pub fn poset(&self) -> &FinPoset {
        &self.poset
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.poset.leq(i, j)
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.size() + j]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.size() + j]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Meet of a subset; the empty meet is the top.
    pub fn meet_set(&self, sub: Bits) -> usize {
        bits::iter(sub).fold(self.top, |acc, i| self.meet(acc, i))
    }

    /// Join of a subset; the empty join is the bottom.
    pub fn join_set(&self, sub: Bits) -> usize {
        bits::iter(sub).fold(self.bottom, |acc, i| self.join(acc, i))
    }

    /// All elements as a mask.
    pub fn all(&self) -> Bits {
        bits::full(self.size())
    }

    /// First triple breaking the distributive law, if any.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    fn require_distributive(&self) -> Result<()> {
        match self.distributivity_witness() {
            Some((a, b, c)) => Err(Error::NotDistributive(a, b, c)),
            None => Ok(()),
        }
    }

    /// Heyting implication `a -> b`: the largest `x` with `x /\ a <= b`.
    pub fn heyting_arrow(&self, a: usize, b: usize) -> Result<usize> {
        self.require_distributive()?;
        let candidates = (0..self.size())
            .filter(|&x| self.leq(self.meet(x, a), b))
            .fold(0, |m, x| m | bits::bit(x));
        let arrow = self.join_set(candidates);
        // Adjunction sanity: x /\ a <= b iff x <= arrow.
        debug_assert!((0..self.size())
            .all(|x| self.leq(self.meet(x, a), b) == self.leq(x, arrow)));
        Ok(arrow)
    }

    /// Pseudocomplement `a* = a -> 0`.
    pub fn pseudocomplement(&self, a: usize) -> Result<usize> {
        self.heyting_arrow(a, self.bottom)
    }

    /// Elements with a (two-sided) complement.
    pub fn complemented_elements(&self) -> Bits {
        let n = self.size();
        (0..n)
            .filter(|&a| {
                (0..n).any(|b| self.meet(a, b) == self.bottom && self.join(a, b) == self.top)
            })
            .fold(0, |m, a| m | bits::bit(a))
    }

    /// The complement of `a` when one exists; in a distributive lattice it is
    /// unique.
    pub fn complement_of(&self, a: usize) -> Option<usize> {
        (0..self.size()).find(|&b| self.meet(a, b) == self.bottom && self.join(a, b) == self.top)
    }

    /// Is the lattice Boolean (distributive with every element complemented)?
    pub fn is_boolean(&self) -> bool {
        self.is_distributive() && self.complemented_elements() == self.all()
    }

    /// Elements that are not the join of the elements strictly below them.
    /// The bottom (empty join) is excluded.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&j| {
                let below = self.poset.down_set(j) & !bits::bit(j);
                self.join_set(below) != j
            })
            .collect()
    }

    /// Literal cover-refinement compactness of a single element: every subset
    /// whose join dominates `a` must contain a finite subfamily whose join
    /// still dominates `a`.  On carriers above the enumeration guard every
    /// cover is itself the required finite subfamily, so the search is skipped.
    pub fn is_compact_element(&self, a: usize) -> bool {
        let n = self.size();
        if n > COMPACT_ENUM_MAX {
            return true;
        }
        'covers: for cover in bits::subsets(self.all()) {
            if !self.leq(a, self.join_set(cover)) {
                continue;
            }
            // Shrink to an inclusion-minimal finite subcover.
            let mut sub = cover;
            for i in bits::iter(cover) {
                let without = sub & !bits::bit(i);
                if self.leq(a, self.join_set(without)) {
                    sub = without;
                }
            }
            if self.leq(a, self.join_set(sub)) {
                continue 'covers;
            }
            return false;
        }
        true
    }

    /// Coherence of a designated part `s`: every member compact, closed under
    /// finite meets (including the empty meet, the top), and join-generating.
    pub fn is_coherent_pair(&self, s: Bits) -> bool {
        if !bits::has(s, self.top) {
            return false;
        }
        for a in bits::iter(s) {
            if !self.is_compact_element(a) {
                return false;
            }
            for b in bits::iter(s) {
                if !bits::has(s, self.meet(a, b)) {
                    return false;
                }
            }
        }
        (0..self.size()).all(|a| {
            let below = self.poset.down_set(a) & s;
            self.join_set(below) == a
        })
    }

    /// Brute-force prime filter enumeration: proper, upward-closed,
    /// meet-closed, and prime subsets, sorted numerically.
    pub fn prime_filters_brute(&self) -> Vec<Bits> {
        let n = self.size();
        assert!(n <= 16, "prime filter brute-force guard");
        let mut out = Vec::new();
        'cand: for f in 1..=self.all() {
            for a in bits::iter(f) {
                if self.poset.up_set(a) & !f != 0 {
                    continue 'cand; // not upward closed
                }
                for b in bits::iter(f) {
                    if !bits::has(f, self.meet(a, b)) {
                        continue 'cand;
                    }
                }
            }
            if f == self.all() {
                continue; // not proper
            }
            for a in 0..n {
                for b in 0..n {
                    if bits::has(f, self.join(a, b)) && !bits::has(f, a) && !bits::has(f, b) {
                        continue 'cand;
                    }
                }
            }
            out.push(f);
        }
        out
    }

    /// Prime filters of a distributive lattice: the up-sets of the
    /// join-irreducibles.  Cross-checked against the brute-force enumeration
    /// on small carriers.
    pub fn prime_filters(&self) -> Result<Vec<Bits>> {
        self.require_distributive()?;
        let mut fast: Vec<Bits> = self
            .join_irreducibles()
            .into_iter()
            .map(|j| self.poset.up_set(j))
            .collect();
        fast.sort_unstable();
        if self.size() <= 10 {
            assert_eq!(
                fast,
                self.prime_filters_brute(),
                "prime filter fast path disagrees with brute force"
            );
        }
        Ok(fast)
    }

    /// Closure of a generating set under meets and joins, with both bounds.
    pub fn generated_sublattice(&self, gens: Bits) -> Bits {
        let mut set = gens | bits::bit(self.bottom) | bits::bit(self.top);
        loop {
            let mut grew = false;
            let elems = bits::to_vec(set);
            for (k, &a) in elems.iter().enumerate() {
                for &b in &elems[k..] {
                    for c in [self.meet(a, b), self.join(a, b)] {
                        if !bits::has(set, c) {
                            set |= bits::bit(c);
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                return set;
            }
        }
    }

    /// Is `s` a bounded sublattice (contains both bounds, closed under the
    /// lattice operations)?
    pub fn is_bounded_sublattice(&self, s: Bits) -> bool {
        bits::has(s, self.bottom)
            && bits::has(s, self.top)
            && bits::iter(s).all(|a| {
                bits::iter(s).all(|b| bits::has(s, self.meet(a, b)) && bits::has(s, self.join(a, b)))
            })
    }

    /// The restriction of the lattice to a bounded sublattice, together with
    /// the vector sending new indices to old ones.
    pub fn sublattice(&self, s: Bits) -> Result<(FinLattice, Vec<usize>)> {
        if !self.is_bounded_sublattice(s) {
            return Err(Error::Invariant(
                "subset is not a bounded sublattice".into(),
            ));
        }
        let elems = bits::to_vec(s);
        let poset = self.poset.restrict(s);
        let names = elems.iter().map(|&i| self.names[i].clone()).collect();
        let lat = FinLattice::from_poset(poset, names)?;
        // Meets and joins of the restriction agree with the ambient ones.
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                debug_assert_eq!(elems[lat.meet(i, j)], self.meet(a, b));
                debug_assert_eq!(elems[lat.join(i, j)], self.join(a, b));
            }
        }
        Ok((lat, elems))
    }
}

/// A bound-preserving lattice homomorphism between two owned lattices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeHom {
    pub dom: FinLattice,
    pub cod: FinLattice,
    pub map: Vec<usize>,
}

impl LatticeHom {
    /// Validate preservation of meet, join, bottom, and top.
    pub fn new(dom: FinLattice, cod: FinLattice, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.size() {
            return Err(Error::Schema(format!(
                "map length {} does not match domain size {}",
                map.len(),
                dom.size()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= cod.size()) {
            return Err(Error::Schema(format!("image {bad} outside codomain")));
        }
        for a in 0..dom.size() {
            for b in 0..dom.size() {
                if map[dom.meet(a, b)] != cod.meet(map[a], map[b]) {
                    return Err(Error::Invariant(format!("meet not preserved at ({a},{b})")));
                }
                if map[dom.join(a, b)] != cod.join(map[a], map[b]) {
                    return Err(Error::Invariant(format!("join not preserved at ({a},{b})")));
                }
            }
        }
        if map[dom.bottom()] != cod.bottom() || map[dom.top()] != cod.top() {
            return Err(Error::Invariant("bounds not preserved".into()));
        }
        Ok(LatticeHom { dom, cod, map })
    }

    pub fn identity(l: &FinLattice) -> Self {
        LatticeHom {
            dom: l.clone(),
            cod: l.clone(),
            map: (0..l.size()).collect(),
        }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `g` after `self`.
    pub fn then(&self, g: &LatticeHom) -> Result<Self> {
        if self.cod != g.dom {
            return Err(Error::Invariant("composition mismatch".into()));
        }
        LatticeHom::new(
            self.dom.clone(),
            g.cod.clone(),
            self.map.iter().map(|&a| g.map[a]).collect(),
        )
    }

    pub fn is_injective(&self) -> bool {
        let mut seen: Bits = 0;
        for &v in &self.map {
            if bits::has(seen, v) {
                return false;
            }
            seen |= bits::bit(v);
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen: Bits = 0;
        for &v in &self.map {
            seen |= bits::bit(v);
        }
        seen == self.cod.all()
    }

    pub fn is_iso(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Image of a subset.
    pub fn image_of(&self, s: Bits) -> Bits {
        bits::iter(s).fold(0, |m, a| m | bits::bit(self.map[a]))
    }

    /// The inverse of an isomorphism.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_iso() {
            return Err(Error::Invariant("hom is not an isomorphism".into()));
        }
        let mut inv = vec![0usize; self.cod.size()];
        for (a, &v) in self.map.iter().enumerate() {
            inv[v] = a;
        }
        LatticeHom::new(self.cod.clone(), self.dom.clone(), inv)
    }

    /// Right adjoint as a monotone map: `y` goes to the largest `x` with
    /// `h(x) <= y`.  It is not in general a lattice homomorphism.
    pub fn right_adjoint(&self) -> Vec<usize> {
        (0..self.cod.size())
            .map(|y| {
                let fiber = (0..self.dom.size())
                    .filter(|&x| self.cod.leq(self.map[x], y))
                    .fold(0, |m, x| m | bits::bit(x));
                self.dom.join_set(fiber)
            })
            .collect()
    }
}

/// All bound-preserving lattice homs `a -> b`, in deterministic order.
///
/// A hom is determined by its values on the join-irreducibles of `a`, since
/// every element is the join of the irreducibles below it; candidates are
/// extended by joins and then checked in full.
pub fn enumerate_homs(a: &FinLattice, b: &FinLattice) -> Result<Vec<LatticeHom>> {
    let ji = a.join_irreducibles();
    let space = (b.size() as u128).checked_pow(ji.len() as u32);
    match space {
        Some(s) if s <= HOM_SEARCH_MAX => {}
        _ => {
            return Err(Error::SizeExceeded {
                what: "hom enumeration",
                size: ji.len(),
                bound: 0,
            })
        }
    }
    let mut out = Vec::new();
    let mut img = vec![0usize; ji.len()];
    search_homs(a, b, &ji, &mut img, 0, &mut out);
    Ok(out)
}

fn search_homs(
    a: &FinLattice,
    b: &FinLattice,
    ji: &[usize],
    img: &mut Vec<usize>,
    k: usize,
    out: &mut Vec<LatticeHom>,
) {
    if k == ji.len() {
        if let Some(h) = extend_from_ji(a, b, ji, img) {
            out.push(h);
        }
        return;
    }
    for cand in 0..b.size() {
        // Monotonicity on the irreducibles assigned so far.
        let ok = (0..k).all(|i| {
            (!a.leq(ji[i], ji[k]) || b.leq(img[i], cand))
                && (!a.leq(ji[k], ji[i]) || b.leq(cand, img[i]))
        });
        if ok {
            img[k] = cand;
            search_homs(a, b, ji, img, k + 1, out);
        }
    }
}

/// Extend an assignment on the join-irreducibles to the whole lattice by
/// joins and validate it.
fn extend_from_ji(a: &FinLattice, b: &FinLattice, ji: &[usize], img: &[usize]) -> Option<LatticeHom> {
    let map: Vec<usize> = (0..a.size())
        .map(|x| {
            let mut v = b.bottom();
            for (k, &j) in ji.iter().enumerate() {
                if a.leq(j, x) {
                    v = b.join(v, img[k]);
                }
            }
            v
        })
        .collect();
    LatticeHom::new(a.clone(), b.clone(), map).ok()
}

/// All lattice isomorphisms `a -> b`.  An isomorphism restricts to an order
/// isomorphism of the join-irreducibles, so the search branches only over
/// those, heavily pruned.
pub fn enumerate_isos(a: &FinLattice, b: &FinLattice) -> Vec<LatticeHom> {
    if a.size() != b.size() {
        return Vec::new();
    }
    let ji_a = a.join_irreducibles();
    let ji_b = b.join_irreducibles();
    if ji_a.len() != ji_b.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut img = vec![0usize; ji_a.len()];
    let mut used: Bits = 0;
    search_isos(a, b, &ji_a, &ji_b, &mut img, &mut used, 0, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn search_isos(
    a: &FinLattice,
    b: &FinLattice,
    ji_a: &[usize],
    ji_b: &[usize],
    img: &mut Vec<usize>,
    used: &mut Bits,
    k: usize,
    out: &mut Vec<LatticeHom>,
) {
    if k == ji_a.len() {
        if let Some(h) = extend_from_ji(a, b, ji_a, img) {
            if h.is_iso() {
                out.push(h);
            }
        }
        return;
    }
    for (pos, &cand) in ji_b.iter().enumerate() {
        if bits::has(*used, pos) {
            continue;
        }
        let ok = (0..k).all(|i| {
            a.leq(ji_a[i], ji_a[k]) == b.leq(img[i], cand)
                && a.leq(ji_a[k], ji_a[i]) == b.leq(cand, img[i])
        });
        if ok {
            img[k] = cand;
            *used |= bits::bit(pos);
            search_isos(a, b, ji_a, ji_b, img, used, k + 1, out);
            *used &= !bits::bit(pos);
        }
    }
}

/// First isomorphism `a -> b` in the deterministic search order, if any.
pub fn find_isomorphism(a: &FinLattice, b: &FinLattice) -> Option<LatticeHom> {
    enumerate_isos(a, b).into_iter().next()
}

/// The lattice of downsets of a poset, ordered by inclusion, with meets and
/// joins checked to be intersection and union.
pub fn downset_lattice(p: &FinPoset) -> Result<FinLattice> {
    let downs = p.downsets();
    let index: std::collections::BTreeMap<Bits, usize> =
        downs.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let n = downs.len();
    let up_rows: Vec<Bits> = downs
        .iter()
        .map(|&d| {
            downs
                .iter()
                .enumerate()
                .filter(|&(_, &e)| d & !e == 0)
                .fold(0, |m, (j, _)| m | bits::bit(j))
        })
        .collect();
    let names = downs
        .iter()
        .map(|&d| {
            let items: Vec<String> = bits::iter(d).map(|i| i.to_string()).collect();
            format!("{{{}}}", items.join(","))
        })
        .collect();
    let lat = FinLattice::from_poset(FinPoset::new(up_rows)?, names)?;
    for i in 0..n {
        for j in 0..n {
            debug_assert_eq!(lat.meet(i, j), index[&(downs[i] & downs[j])]);
            debug_assert_eq!(lat.join(i, j), index[&(downs[i] | downs[j])]);
        }
    }
    Ok(lat)
}

/// Birkhoff representation: the canonical isomorphism from a finite
/// distributive lattice onto the downset lattice of its join-irreducibles,
/// `a  |->  { j irreducible : j <= a }`.
pub fn birkhoff_roundtrip(d: &FinLattice) -> Result<LatticeHom> {
    if let Some((a, b, c)) = d.distributivity_witness() {
        return Err(Error::NotDistributive(a, b, c));
    }
    let ji = d.join_irreducibles();
    let ji_poset = d.poset().restrict(bits::from_indices(&ji));
    let dl = downset_lattice(&ji_poset)?;
    let downs = ji_poset.downsets();
    let index: std::collections::BTreeMap<Bits, usize> =
        downs.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let map: Vec<usize> = (0..d.size())
        .map(|a| {
            let img = ji
                .iter()
                .enumerate()
                .filter(|&(_, &j)| d.leq(j, a))
                .fold(0, |m, (k, _)| m | bits::bit(k));
            index[&img]
        })
        .collect();
    let hom = LatticeHom::new(d.clone(), dl, map)?;
    if !hom.is_iso() {
        return Err(Error::Invariant(
            "Birkhoff map is not an isomorphism".into(),
        ));
    }
    Ok(hom)
}

/// The ideal lattice of a lattice: nonempty downsets closed under finite
/// joins, ordered by inclusion, plus the principal-ideal embedding.  For a
/// finite lattice every ideal is principal, so the embedding is checked to be
/// an isomorphism.
pub struct IdealLattice {
    pub lattice: FinLattice,
    /// Ideals as element sets of the base lattice, indexed like `lattice`.
    pub ideals: Vec<Bits>,
    /// `a  |->  index of the principal ideal on a`.
    pub principal: LatticeHom,
}

pub fn ideal_lattice(d: &FinLattice) -> Result<IdealLattice> {
    let ideals: Vec<Bits> = d
        .poset()
        .downsets()
        .into_iter()
        .filter(|&s| {
            s != 0
                && bits::iter(s).all(|a| bits::iter(s).all(|b| bits::has(s, d.join(a, b))))
        })
        .collect();
    let n = ideals.len();
    let up_rows: Vec<Bits> = ideals
        .iter()
        .map(|&i| {
            ideals
                .iter()
                .enumerate()
                .filter(|&(_, &j)| i & !j == 0)
                .fold(0, |m, (k, _)| m | bits::bit(k))
        })
        .collect();
    let names = ideals
        .iter()
        .map(|&i| format!("idl({})", d.name(d.join_set(i))))
        .collect();
    let lattice = FinLattice::from_poset(FinPoset::new(up_rows)?, names)?;
    let index: std::collections::BTreeMap<Bits, usize> =
        ideals.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let map: Vec<usize> = (0..d.size())
        .map(|a| index[&d.poset().down_set(a)])
        .collect();
    let principal = LatticeHom::new(d.clone(), lattice.clone(), map)?;
    assert!(
        principal.is_iso() && n == d.size(),
        "every ideal of a finite lattice is principal"
    );
    Ok(IdealLattice {
        lattice,
        ideals,
        principal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn chain_and_diamond_validate() {
        let c3 = catalog::c3();
        assert_eq!(c3.bottom(), 0);
        assert_eq!(c3.top(), 2);
        assert_eq!(c3.meet(1, 2), 1);
        assert_eq!(c3.join(0, 1), 1);
        let b4 = catalog::b4();
        assert_eq!(b4.meet(1, 2), b4.bottom());
        assert_eq!(b4.join(1, 2), b4.top());
    }

    #[test]
    fn non_lattice_rejected() {
        // Two maximal elements over two minimal ones: no sup of the minima.
        let p = FinPoset::from_covers(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let err = FinLattice::from_poset(p, vec!["a".into(), "b".into(), "c".into(), "d".into()])
            .unwrap_err();
        assert!(matches!(err, Error::NotALattice(..)));
    }

    #[test]
    fn pentagon_and_diamond_not_distributive() {
        let n5 = catalog::n5();
        let w = n5.distributivity_witness().unwrap();
        assert!(!n5.is_distributive());
        // The witness really breaks the law.
        let (a, b, c) = w;
        assert_ne!(
            n5.meet(a, n5.join(b, c)),
            n5.join(n5.meet(a, b), n5.meet(a, c))
        );
        assert!(!catalog::m3().is_distributive());
        assert!(matches!(
            n5.heyting_arrow(0, 0),
            Err(Error::NotDistributive(..))
        ));
    }

    #[test]
    fn heyting_on_chain_and_square() {
        let c3 = catalog::c3();
        assert_eq!(c3.heyting_arrow(1, 0).unwrap(), 0); // m -> 0 = 0
        assert_eq!(c3.heyting_arrow(2, 1).unwrap(), 1); // 1 -> m = m
        assert_eq!(c3.heyting_arrow(0, 1).unwrap(), 2); // 0 -> m = 1
        let b4 = catalog::b4();
        // {a} -> {b} = {b}
        assert_eq!(b4.heyting_arrow(1, 2).unwrap(), 2);
        assert_eq!(b4.pseudocomplement(1).unwrap(), 2);
    }

    #[test]
    fn complemented_elements_examples() {
        let c3 = catalog::c3();
        assert_eq!(c3.complemented_elements(), bits::from_indices(&[0, 2]));
        let b4 = catalog::b4();
        assert_eq!(b4.complemented_elements(), b4.all());
        assert!(b4.is_boolean());
        assert!(!c3.is_boolean());
    }

    #[test]
    fn join_irreducibles_examples() {
        assert_eq!(catalog::c3().join_irreducibles(), vec![1, 2]);
        assert_eq!(catalog::b4().join_irreducibles(), vec![1, 2]);
        // Pentagon: 0 < a < b < 1 and 0 < c < 1 with names 0,a,b,c,1.
        assert_eq!(catalog::n5().join_irreducibles(), vec![1, 2, 3]);
    }

    #[test]
    fn every_element_compact_and_coherent() {
        for l in [catalog::c3(), catalog::b4(), catalog::n5(), catalog::b8()] {
            for a in 0..l.size() {
                assert!(l.is_compact_element(a));
            }
        }
        let b4 = catalog::b4();
        assert!(b4.is_coherent_pair(b4.all()));
        // {0, a, 1} misses b from its join-generation.
        assert!(!b4.is_coherent_pair(bits::from_indices(&[0, 1, 3])));
    }

    #[test]
    fn prime_filters_small_cases() {
        let c2 = catalog::c2();
        assert_eq!(c2.prime_filters().unwrap().len(), 1);
        let c3 = catalog::c3();
        let pf = c3.prime_filters().unwrap();
        assert_eq!(pf.len(), 2);
        assert_eq!(pf, vec![bits::from_indices(&[2]), bits::from_indices(&[1, 2])]);
        assert_eq!(catalog::b4().prime_filters().unwrap().len(), 2);
        assert_eq!(catalog::b8().prime_filters().unwrap().len(), 3);
    }

    #[test]
    fn ideal_lattice_is_iso_for_finite() {
        let c3 = catalog::c3();
        let idl = ideal_lattice(&c3).unwrap();
        assert_eq!(idl.lattice.size(), 3);
        assert!(idl.principal.is_iso());
        let b4 = catalog::b4();
        assert_eq!(ideal_lattice(&b4).unwrap().lattice.size(), 4);
    }

    #[test]
    fn birkhoff_recovers_catalog_lattices() {
        for l in [catalog::c2(), catalog::c3(), catalog::b4(), catalog::b8()] {
            let iso = birkhoff_roundtrip(&l).unwrap();
            assert!(iso.is_iso());
            assert_eq!(iso.cod.size(), l.size());
        }
        assert!(birkhoff_roundtrip(&catalog::n5()).is_err());
    }

    #[test]
    fn hom_enumeration_examples() {
        let c2 = catalog::c2();
        let c3 = catalog::c3();
        assert_eq!(enumerate_homs(&c2, &c3).unwrap().len(), 1);
        assert_eq!(enumerate_homs(&c3, &c3).unwrap().len(), 3);
        assert_eq!(enumerate_homs(&c3, &c2).unwrap().len(), 2);
        // pt(B4) = 2: only the two projections preserve all structure.
        assert_eq!(enumerate_homs(&catalog::b4(), &c2).unwrap().len(), 2);
    }

    #[test]
    fn iso_search_distinguishes_shapes() {
        let b4 = catalog::b4();
        let c4 = catalog::chain(4);
        assert!(find_isomorphism(&b4, &c4).is_none());
        assert_eq!(enumerate_isos(&b4, &b4).len(), 2); // swap the atoms
        let got = find_isomorphism(&catalog::c3(), &catalog::chain(3)).unwrap();
        assert!(got.is_iso());
    }

    #[test]
    fn right_adjoint_of_quotient_picks_block_top() {
        // q: C3 -> C2 collapsing {0, m}.
        let q = LatticeHom::new(catalog::c3(), catalog::c2(), vec![0, 0, 1]).unwrap();
        assert_eq!(q.right_adjoint(), vec![1, 2]);
        // Galois condition: q(x) <= y iff x <= q_*(y).
        let adj = q.right_adjoint();
        for x in 0..3 {
            for y in 0..2 {
                assert_eq!(q.cod.leq(q.apply(x), y), q.dom.leq(x, adj[y]));
            }
        }
    }
}

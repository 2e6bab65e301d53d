//! Frith pairs: a finite distributive lattice with a designated bounded
//! sublattice, morphism classification, the dual adjunction against Pervin
//! spaces, symmetrization through congruence frames, ideal completion,
//! strongly exact meets, Scott-open filters, and sublocale-based recognition
//! of completeness and locale-basedness.
//!
//! On a finite carrier, join-density of the designated part collapses to the
//! designated part being the whole lattice.  Pairs with a proper designated
//! sublattice ("pre-pairs") are still accepted everywhere so that the
//! non-degenerate code paths get exercised; operations whose statements need
//! join-density gate their extra assertions on [`FrithPair::is_frith`].

use serde::Serialize;

use crate::bits::{self, Bits};
use crate::congruence::{self, Congruence, CongruenceFrame};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::family::family_lattice;
use crate::lattice::{enumerate_homs, enumerate_isos, ideal_lattice, FinLattice, LatticeHom};
use crate::pervin::{self, PervinMap, PervinSpace};

/// Carrier bound for sweeps over all subsets of a lattice.
const SUBSET_SWEEP_MAX: usize = 16;
/// Carrier bound for directed-subset and filter enumeration.
const SCOTT_ENUM_MAX: usize = 12;

/// A finite distributive lattice together with a designated bounded
/// sublattice of "basic" elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrithPair {
    lattice: FinLattice,
    sub: Bits,
}

impl FrithPair {
    /// Validate distributivity of the carrier and closure of the designated
    /// part under the lattice operations and both bounds.
    pub fn new(lattice: FinLattice, sub: Bits) -> Result<Self> {
        if let Some((a, b, c)) = lattice.distributivity_witness() {
            return Err(Error::NotDistributive(a, b, c));
        }
        if !lattice.is_bounded_sublattice(sub) {
            return Err(Error::Invariant(
                "designated elements must form a bounded sublattice".into(),
            ));
        }
        Ok(FrithPair { lattice, sub })
    }

    /// The pair whose designated part is the whole carrier.
    pub fn full(lattice: FinLattice) -> Result<Self> {
        let sub = lattice.all();
        FrithPair::new(lattice, sub)
    }

    pub fn lattice(&self) -> &FinLattice {
        &self.lattice
    }

    pub fn sub(&self) -> Bits {
        self.sub
    }

    /// Designated elements in ascending carrier order.
    pub fn sub_elements(&self) -> Vec<usize> {
        bits::to_vec(self.sub)
    }

    /// Join-density of the designated part: every element is the join of the
    /// designated elements below it.  On a finite carrier this is equivalent
    /// to the designated part being everything, which is asserted.
    pub fn is_frith(&self) -> bool {
        let dense = (0..self.lattice.size()).all(|a| {
            let below = bits::iter(self.sub)
                .filter(|&s| self.lattice.leq(s, a))
                .fold(0, |m, s| m | bits::bit(s));
            self.lattice.join_set(below) == a
        });
        assert_eq!(
            dense,
            self.sub == self.lattice.all(),
            "join-density collapses to the full designated part on finite carriers"
        );
        dense
    }

    /// Whether every designated element has a designated complement.
    pub fn is_symmetric(&self) -> bool {
        let direct = bits::iter(self.sub).all(|s| {
            matches!(self.lattice.complement_of(s), Some(c) if bits::has(self.sub, c))
        });
        #[cfg(debug_assertions)]
        {
            let (part, _) = self.lattice.sublattice(self.sub).expect("validated sublattice");
            assert_eq!(direct, part.is_boolean());
        }
        direct
    }
}

/// A lattice homomorphism carrying designated elements to designated
/// elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrithHom {
    pub dom: FrithPair,
    pub cod: FrithPair,
    pub hom: LatticeHom,
}

impl FrithHom {
    pub fn new(dom: FrithPair, cod: FrithPair, hom: LatticeHom) -> Result<Self> {
        if hom.dom != dom.lattice || hom.cod != cod.lattice {
            return Err(Error::Invariant(
                "homomorphism does not connect the given pairs".into(),
            ));
        }
        if hom.image_of(dom.sub) & !cod.sub != 0 {
            return Err(Error::Invariant(
                "designated elements must land on designated elements".into(),
            ));
        }
        Ok(FrithHom { dom, cod, hom })
    }

    pub fn identity(pair: &FrithPair) -> Self {
        FrithHom {
            dom: pair.clone(),
            cod: pair.clone(),
            hom: LatticeHom::identity(&pair.lattice),
        }
    }

    pub fn then(&self, g: &FrithHom) -> Result<FrithHom> {
        FrithHom::new(self.dom.clone(), g.cod.clone(), self.hom.then(&g.hom)?)
    }
}

/// Classification flags for a morphism of pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HomClass {
    pub mono: bool,
    pub extremal_epi: bool,
    pub dense: bool,
    pub iso: bool,
}

/// Classify a morphism.  Monomorphisms are the injective maps, extremal
/// epimorphisms are those carrying the designated part onto the designated
/// part, and dense means only the bottom hits the bottom.  The `iso` flag is
/// `mono && extremal_epi`; when the codomain's designated part is
/// join-dense, an injection whose image join-generates is already onto, so
/// the flag coincides with being invertible (asserted).  On pre-pairs the
/// flag can overshoot the literal bijection; callers that need an actual
/// inverse should use [`is_pair_iso`].
pub fn classify_hom(h: &FrithHom) -> HomClass {
    let mono = h.hom.is_injective();
    let extremal_epi = h.hom.image_of(h.dom.sub) == h.cod.sub;
    let bot = h.cod.lattice.bottom();
    let dense = (0..h.dom.lattice.size())
        .all(|a| h.hom.apply(a) != bot || a == h.dom.lattice.bottom());
    let iso = mono && extremal_epi;
    if iso && h.cod.is_frith() {
        assert!(
            h.hom.is_iso(),
            "an injection onto a join-dense designated part is invertible"
        );
    }
    HomClass { mono, extremal_epi, dense, iso }
}

/// Whether a morphism is an isomorphism of pairs in the literal sense: an
/// invertible lattice map matching the designated parts exactly.
pub fn is_pair_iso(h: &FrithHom) -> bool {
    h.hom.is_iso() && h.hom.image_of(h.dom.sub) == h.cod.sub
}

/// All morphisms between two pairs.
pub fn frith_homs(dom: &FrithPair, cod: &FrithPair) -> Result<Vec<FrithHom>> {
    Ok(enumerate_homs(&dom.lattice, &cod.lattice)?
        .into_iter()
        .filter(|h| h.image_of(dom.sub) & !cod.sub == 0)
        .map(|hom| FrithHom { dom: dom.clone(), cod: cod.clone(), hom })
        .collect())
}

/// A lattice isomorphism carrying one designated part onto the other, if any
/// exists.
pub fn find_pair_isomorphism(a: &FrithPair, b: &FrithPair) -> Option<FrithHom> {
    enumerate_isos(&a.lattice, &b.lattice)
        .into_iter()
        .find(|i| i.image_of(a.sub) == b.sub)
        .map(|hom| FrithHom { dom: a.clone(), cod: b.clone(), hom })
}

/// The restriction of a morphism to the designated parts, as a homomorphism
/// between the designated sublattices in their own right.
pub fn lfrith_hom(h: &FrithHom) -> Result<LatticeHom> {
    let (s_lat, s_carrier) = h.dom.lattice.sublattice(h.dom.sub)?;
    let (t_lat, t_carrier) = h.cod.lattice.sublattice(h.cod.sub)?;
    let map = s_carrier
        .iter()
        .map(|&s| {
            t_carrier
                .binary_search(&h.hom.apply(s))
                .expect("designated images are designated")
        })
        .collect();
    LatticeHom::new(s_lat, t_lat, map)
}

/// Every bound-preserving lattice homomorphism into the two-element chain,
/// recorded as the preimage of the top, found by sweeping all subsets of the
/// carrier and testing the homomorphism laws pointwise.
pub fn frame_homs_to_two(l: &FinLattice) -> Vec<Bits> {
    assert!(l.size() <= SUBSET_SWEEP_MAX, "two-valued hom sweep guard");
    let mut out = Vec::new();
    for f in 0..=l.all() {
        let value = |a: usize| bits::has(f, a);
        if !value(l.top()) || value(l.bottom()) {
            continue;
        }
        let hom = (0..l.size()).all(|a| {
            (0..l.size()).all(|b| {
                value(l.meet(a, b)) == (value(a) && value(b))
                    && value(l.join(a, b)) == (value(a) || value(b))
            })
        });
        if hom {
            out.push(f);
        }
    }
    out
}

/// The spectrum of a pair: points are the two-valued homomorphisms of the
/// carrier (computed as prime filters and cross-checked against the direct
/// sweep), opens are the extents of the designated elements.
pub fn pt_functor(p: &FrithPair) -> Result<PervinSpace> {
    let filters = p.lattice.prime_filters()?;
    if p.lattice.size() <= SUBSET_SWEEP_MAX {
        assert_eq!(
            frame_homs_to_two(&p.lattice),
            filters,
            "two-valued homomorphisms match prime filters"
        );
    }
    pervin::pt_space_of_designated(&p.lattice, &p.sub_elements())
}

/// Spectrum action on a morphism: precomposition, i.e. each point of the
/// codomain's spectrum pulls back along the morphism.
pub fn pt_map(h: &FrithHom) -> Result<PervinMap> {
    let dom_space = pt_functor(&h.cod)?;
    let cod_space = pt_functor(&h.dom)?;
    let dom_filters = h.cod.lattice.prime_filters()?;
    let cod_filters = h.dom.lattice.prime_filters()?;
    let map = dom_filters
        .iter()
        .map(|&q| {
            let pre = (0..h.dom.lattice.size())
                .filter(|&a| bits::has(q, h.hom.apply(a)))
                .fold(0, |acc, a| acc | bits::bit(a));
            cod_filters
                .iter()
                .position(|&p| p == pre)
                .expect("the preimage of a prime filter is prime")
        })
        .collect();
    PervinMap::new(dom_space, cod_space, map)
}

/// The opens of a space as a pair: the family ordered by inclusion, with
/// every member designated.
pub fn omega_functor(p: &PervinSpace) -> Result<FrithPair> {
    FrithPair::full(family_lattice(p.family(), p.names())?)
}

/// Opens action on a map: preimage.
pub fn omega_map(f: &PervinMap) -> Result<FrithHom> {
    let dom = omega_functor(&f.cod)?;
    let cod = omega_functor(&f.dom)?;
    FrithHom::new(dom, cod, f.preimage_hom()?)
}

/// The unit of the dual adjunction at a space: each point goes to its
/// neighborhood filter inside the spectrum of the opens.
pub fn spectrum_unit(p: &PervinSpace) -> Result<PervinMap> {
    let omega_p = omega_functor(p)?;
    let target = pt_functor(&omega_p)?;
    let filters = omega_p.lattice.prime_filters()?;
    let map: Vec<usize> = (0..p.points())
        .map(|x| {
            let trace = p
                .family()
                .members()
                .iter()
                .enumerate()
                .filter(|&(_, &s)| bits::has(s, x))
                .fold(0, |acc, (i, _)| acc | bits::bit(i));
            filters
                .iter()
                .position(|&f| f == trace)
                .expect("a neighborhood trace is a prime filter of the opens")
        })
        .collect();
    let unit = PervinMap::new(p.clone(), target, map)?;
    #[cfg(debug_assertions)]
    assert_eq!(
        unit.map,
        pervin::neighborhood_map(p)?.map,
        "the unit has the same graph as the neighborhood completion map"
    );
    Ok(unit)
}

/// The counit of the dual adjunction at a pair: each element goes to its
/// extent among the opens of the spectrum.
pub fn spectrum_counit(f: &FrithPair) -> Result<FrithHom> {
    let pt_f = pt_functor(f)?;
    let omega_pt = omega_functor(&pt_f)?;
    let filters = f.lattice.prime_filters()?;
    let map = (0..f.lattice.size())
        .map(|a| {
            let hat = filters
                .iter()
                .enumerate()
                .filter(|&(_, &q)| bits::has(q, a))
                .fold(0, |acc, (k, _)| acc | bits::bit(k));
            pt_f.family().index_of(hat).ok_or_else(|| {
                Error::Invariant(format!(
                    "extent of {} is not an open of the spectrum",
                    f.lattice.name(a)
                ))
            })
        })
        .collect::<Result<Vec<usize>>>()?;
    let hom = LatticeHom::new(f.lattice.clone(), omega_pt.lattice.clone(), map)?;
    FrithHom::new(f.clone(), omega_pt, hom)
}

fn transpose_to_frith(
    p: &PervinSpace,
    f: &FrithPair,
    omega_p: &FrithPair,
    filters: &[Bits],
    g: &PervinMap,
) -> Result<FrithHom> {
    let map = (0..f.lattice.size())
        .map(|a| {
            let hat = filters
                .iter()
                .enumerate()
                .filter(|&(_, &q)| bits::has(q, a))
                .fold(0, |acc, (k, _)| acc | bits::bit(k));
            p.family().index_of(g.preimage(hat)).ok_or_else(|| {
                Error::Invariant("a transposed open escapes the domain family".into())
            })
        })
        .collect::<Result<Vec<usize>>>()?;
    let hom = LatticeHom::new(f.lattice.clone(), omega_p.lattice.clone(), map)?;
    FrithHom::new(f.clone(), omega_p.clone(), hom)
}

fn transpose_to_pervin(
    p: &PervinSpace,
    f: &FrithPair,
    pt_f: &PervinSpace,
    filters: &[Bits],
    h: &FrithHom,
) -> Result<PervinMap> {
    let map = (0..p.points())
        .map(|x| {
            let trace = (0..f.lattice.size())
                .filter(|&a| bits::has(p.family().members()[h.hom.apply(a)], x))
                .fold(0, |acc, a| acc | bits::bit(a));
            filters
                .iter()
                .position(|&q| q == trace)
                .expect("a transposed point trace is a prime filter")
        })
        .collect();
    PervinMap::new(p.clone(), pt_f.clone(), map)
}

/// Instance report for the dual adjunction between spaces and pairs.
#[derive(Debug, Clone, Serialize)]
pub struct DualAdjunctionReport {
    pub pervin_homs: usize,
    pub frith_homs: usize,
    pub bijection: bool,
    pub space_triangle: bool,
    pub frame_triangle: bool,
}

impl DualAdjunctionReport {
    pub fn pass(&self) -> bool {
        self.bijection && self.space_triangle && self.frame_triangle
    }
}

/// Verify the natural hom-set bijection between maps `P -> pt F` and
/// morphisms `F -> Omega P` by enumerating both sides and transposing each
/// way, then check both triangle identities on the instance.  The pair must
/// have a join-dense designated part: transposition needs every extent of
/// the carrier to be an open of the spectrum.
pub fn dual_adjunction_check(p: &PervinSpace, f: &FrithPair) -> Result<DualAdjunctionReport> {
    if !f.is_frith() {
        return Err(Error::Invariant(
            "the dual adjunction needs a join-dense designated part".into(),
        ));
    }
    let pt_f = pt_functor(f)?;
    let omega_p = omega_functor(p)?;
    let filters = f.lattice.prime_filters()?;
    let perv_side = pervin::pervin_maps(p, &pt_f);
    let frith_side = frith_homs(f, &omega_p)?;
    let mut bijection = perv_side.len() == frith_side.len();
    for g in &perv_side {
        let t = transpose_to_frith(p, f, &omega_p, &filters, g)?;
        bijection &= frith_side.iter().any(|k| k.hom.map == t.hom.map);
        let back = transpose_to_pervin(p, f, &pt_f, &filters, &t)?;
        bijection &= back.map == g.map;
    }
    for h in &frith_side {
        let t = transpose_to_pervin(p, f, &pt_f, &filters, h)?;
        bijection &= perv_side.iter().any(|k| k.map == t.map);
        let back = transpose_to_frith(p, f, &omega_p, &filters, &t)?;
        bijection &= back.hom.map == h.hom.map;
    }
    let round_space = spectrum_unit(&pt_f)?.then(&pt_map(&spectrum_counit(f)?)?)?;
    let space_triangle = round_space.map == (0..pt_f.points()).collect::<Vec<_>>();
    let round_frame = spectrum_counit(&omega_p)?
        .hom
        .then(&omega_map(&spectrum_unit(p)?)?.hom)?;
    let frame_triangle = round_frame.map == (0..omega_p.lattice.size()).collect::<Vec<_>>();
    Ok(DualAdjunctionReport {
        pervin_homs: perv_side.len(),
        frith_homs: frith_side.len(),
        bijection,
        space_triangle,
        frame_triangle,
    })
}

/// A symmetrization: the Boolean-designated pair built inside the congruence
/// frame, the universal morphism into it, and the frame bookkeeping.
#[derive(Debug, Clone)]
pub struct Symmetrization {
    pub pair: FrithPair,
    pub unit: FrithHom,
    pub frame: CongruenceFrame,
}

/// Symmetrize a pair: inside the congruence subframe generated by all closed
/// congruences and the designated open ones, designate the sublattice
/// generated by the designated closed/open complement pairs.
pub fn fsym(f: &FrithPair) -> Result<Symmetrization> {
    let frame = congruence::generated_congruence_subframe(&f.lattice, f.sub)?;
    let nabla = frame.nabla_hom().clone();
    let mut gens: Bits = 0;
    for s in bits::iter(f.sub) {
        gens |= bits::bit(nabla.apply(s));
        gens |= bits::bit(frame.delta[s].expect("designated opens are members"));
    }
    let sub = frame.lattice.generated_sublattice(gens);
    let pair = FrithPair::new(frame.lattice.clone(), sub)?;
    assert!(
        pair.is_symmetric(),
        "the designated part of a symmetrization is Boolean"
    );
    let unit = FrithHom::new(f.clone(), pair.clone(), nabla)?;
    Ok(Symmetrization { pair, unit, frame })
}

/// Symmetrization action on a morphism: the unique extension between the
/// congruence subframes.
pub fn fsym_map(h: &FrithHom) -> Result<FrithHom> {
    let source = fsym(&h.dom)?;
    let target = fsym(&h.cod)?;
    let comp = h.hom.then(&target.unit.hom)?;
    let (_, ext) = congruence::universal_extension(&comp, h.dom.sub)?;
    let out = FrithHom::new(source.pair.clone(), target.pair, ext)?;
    #[cfg(debug_assertions)]
    assert_eq!(
        source.unit.hom.then(&out.hom).expect("composable").map,
        comp.map,
        "the extension commutes with the units"
    );
    Ok(out)
}

/// Universal-property report for the symmetrization unit.
#[derive(Debug, Clone, Serialize)]
pub struct SymmetrizationCheck {
    pub factors: bool,
    pub unique: bool,
}

impl SymmetrizationCheck {
    pub fn pass(&self) -> bool {
        self.factors && self.unique
    }
}

/// Check that a morphism into a symmetric pair factors through the
/// symmetrization unit of its domain, and that the mediating morphism is the
/// only one doing so.
pub fn fsym_adjunction_check(h: &FrithHom) -> Result<SymmetrizationCheck> {
    if !h.cod.is_symmetric() {
        return Err(Error::Invariant(
            "the universal property targets symmetric pairs".into(),
        ));
    }
    let sym = fsym(&h.dom)?;
    let (_, ext) = congruence::universal_extension(&h.hom, h.dom.sub)?;
    let mediating = FrithHom::new(sym.pair.clone(), h.cod.clone(), ext)?;
    let factors = sym.unit.hom.then(&mediating.hom)?.map == h.hom.map;
    let through: Vec<LatticeHom> = enumerate_homs(&sym.pair.lattice, &h.cod.lattice)?
        .into_iter()
        .filter(|k| k.image_of(sym.pair.sub) & !h.cod.sub == 0)
        .filter(|k| {
            sym.unit
                .hom
                .then(k)
                .map(|c| c.map == h.hom.map)
                .unwrap_or(false)
        })
        .collect();
    let unique = through.len() == 1 && through[0].map == mediating.hom.map;
    Ok(SymmetrizationCheck { factors, unique })
}

/// An ideal completion: the completed pair and the counit evaluating each
/// ideal of the designated part to its join.
#[derive(Debug, Clone)]
pub struct Completion {
    pub pair: FrithPair,
    pub counit: FrithHom,
}

/// Build the ideal completion of the designated part together with the
/// evaluation counit, which is always a dense extremal epimorphism
/// (asserted).
pub fn completion(f: &FrithPair) -> Result<Completion> {
    let (s_lat, carrier) = f.lattice.sublattice(f.sub)?;
    let idl = ideal_lattice(&s_lat)?;
    let sub = idl.principal.image_of(s_lat.all());
    let pair = FrithPair::new(idl.lattice.clone(), sub)?;
    let map = idl
        .ideals
        .iter()
        .map(|&j| {
            f.lattice
                .join_set(bits::iter(j).fold(0, |m, i| m | bits::bit(carrier[i])))
        })
        .collect();
    let hom = LatticeHom::new(idl.lattice.clone(), f.lattice.clone(), map)?;
    let counit = FrithHom::new(pair.clone(), f.clone(), hom)?;
    let class = classify_hom(&counit);
    assert!(
        class.dense && class.extremal_epi,
        "the completion counit is a dense extremal epimorphism"
    );
    Ok(Completion { pair, counit })
}

/// Structural completeness: the designated part is coherent in the carrier,
/// equivalently the pair is isomorphic to its ideal completion.  Both routes
/// are evaluated independently and must agree, and the counit must witness
/// the isomorphism exactly when it exists.
pub fn is_complete(f: &FrithPair) -> Result<bool> {
    let coherent = f.lattice.is_coherent_pair(f.sub);
    let comp = completion(f)?;
    let by_ideals = find_pair_isomorphism(&comp.pair, f).is_some();
    assert_eq!(coherent, by_ideals, "coherence agrees with the ideal route");
    assert_eq!(
        by_ideals,
        comp.counit.hom.is_iso(),
        "the counit witnesses the isomorphism route"
    );
    Ok(coherent)
}

/// Completeness through every available lens.
#[derive(Debug, Clone, Serialize)]
pub struct CompletenessReport {
    pub bound: usize,
    pub coherent: bool,
    pub counit_iso: bool,
    pub symmetrization_complete_up_to_bound: bool,
    pub complete: bool,
}

/// Evaluate completeness structurally and through the quotient-style
/// definition: no dense extremal epimorphism out of a symmetric pair onto
/// the symmetrization, other than isomorphisms, among candidates with
/// Boolean carriers up to `bound` (the symmetrized completion counit is
/// always included as a candidate).  For join-dense pairs all lenses agree
/// (asserted); on a pre-pair the symmetrization can repair the density
/// defect, so that field is reported without being forced to match.
pub fn completeness_report(f: &FrithPair, bound: usize) -> Result<CompletenessReport> {
    let coherent = f.lattice.is_coherent_pair(f.sub);
    let complete = is_complete(f)?;
    let comp = completion(f)?;
    let counit_iso = comp.counit.hom.is_iso();
    let sym = fsym(f)?;
    let mut candidates: Vec<FrithHom> = vec![fsym_map(&comp.counit)?];
    for m in enumerate::distributive_lattices_upto(bound) {
        if !m.is_boolean() {
            continue;
        }
        candidates.extend(frith_homs(&FrithPair::full(m)?, &sym.pair)?);
    }
    let symmetrization_complete = candidates.iter().all(|h| {
        let class = classify_hom(h);
        !(class.dense && class.extremal_epi) || is_pair_iso(h)
    });
    if f.is_frith() {
        assert_eq!(
            symmetrization_complete, complete,
            "the quotient-style definition agrees on join-dense pairs"
        );
    }
    Ok(CompletenessReport {
        bound,
        coherent,
        counit_iso,
        symmetrization_complete_up_to_bound: symmetrization_complete,
        complete,
    })
}

/// Elements arising as strongly exact meets of designated elements: for each
/// subset of the designated part, join the corresponding open congruences
/// and keep the meet when that join is itself open.  The empty subset yields
/// the top.  Every such element equals the plain meet of its subset
/// (asserted), and for join-dense pairs every element arises (asserted).
pub fn strongly_exact_meets(f: &FrithPair) -> Result<Vec<usize>> {
    let l = &f.lattice;
    assert!(bits::count(f.sub) <= SUBSET_SWEEP_MAX, "designated sweep guard");
    let deltas: Vec<Congruence> = (0..l.size())
        .map(|a| congruence::delta(l, a))
        .collect::<Result<_>>()?;
    let mut sem = Vec::new();
    for p in bits::subsets(f.sub) {
        let join = bits::iter(p).fold(Congruence::diagonal(l.size()), |acc, s| {
            congruence::congruence_join(l, &acc, &deltas[s])
        });
        if let Some(a) = (0..l.size()).find(|&a| deltas[a] == join) {
            assert_eq!(a, l.meet_set(p), "an open join of opens names the meet");
            sem.push(a);
        }
    }
    sem.sort_unstable();
    sem.dedup();
    debug_assert_eq!(
        sem,
        f.sub_elements(),
        "every finite meet is strongly exact and the designated part is meet-closed"
    );
    if f.is_frith() {
        assert_eq!(sem, (0..l.size()).collect::<Vec<_>>());
    }
    Ok(sem)
}

/// Whether the designated part is closed under strongly exact meets.  All
/// finite meets are strongly exact and the designated part is closed under
/// them, so on finite carriers this always holds (asserted rather than
/// assumed).
pub fn is_strongly_exact(f: &FrithPair) -> Result<bool> {
    let sem = strongly_exact_meets(f)?;
    let closed = sem.iter().all(|&a| bits::has(f.sub, a));
    assert!(closed, "finite designated parts are closed under strongly exact meets");
    Ok(closed)
}

/// A proper filter on a finite lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScottFilter {
    pub lattice: FinLattice,
    pub members: Bits,
}

impl ScottFilter {
    /// Validate nonemptiness, properness, upward closure, and closure under
    /// binary meets.
    pub fn new(lattice: FinLattice, members: Bits) -> Result<Self> {
        if members == 0 || bits::has(members, lattice.bottom()) {
            return Err(Error::Invariant("a filter must be nonempty and proper".into()));
        }
        for x in bits::iter(members) {
            for y in 0..lattice.size() {
                if lattice.leq(x, y) && !bits::has(members, y) {
                    return Err(Error::Invariant("filters are upward closed".into()));
                }
            }
            for y in bits::iter(members) {
                if !bits::has(members, lattice.meet(x, y)) {
                    return Err(Error::Invariant("filters are closed under meets".into()));
                }
            }
        }
        Ok(ScottFilter { lattice, members })
    }
}

/// Scott-openness by directed-subset enumeration: whenever a directed set
/// joins into the filter, some member of the set is already in it.
pub fn is_scott_open(f: &ScottFilter) -> bool {
    let l = &f.lattice;
    assert!(l.size() <= SCOTT_ENUM_MAX, "directed subset sweep guard");
    for d in bits::subsets(l.all()) {
        if d == 0 {
            continue;
        }
        let directed = bits::iter(d).all(|x| {
            bits::iter(d).all(|y| bits::iter(d).any(|z| l.leq(x, z) && l.leq(y, z)))
        });
        if directed && bits::has(f.members, l.join_set(d)) && d & f.members == 0 {
            return false;
        }
    }
    true
}

/// Instance report: the proper filters of a lattice, their Scott-openness
/// (automatic on finite carriers, asserted), and closure under strongly
/// exact meets.
#[derive(Debug, Clone, Serialize)]
pub struct ScottReport {
    pub filters: usize,
    pub all_scott_open: bool,
    pub closed_under_strongly_exact_meets: bool,
}

impl ScottReport {
    pub fn pass(&self) -> bool {
        self.all_scott_open && self.closed_under_strongly_exact_meets
    }
}

/// Enumerate every proper filter, assert each is Scott-open, and check that
/// each is closed under those meets whose open-congruence join is again
/// open.
pub fn scott_strong_exact_check(l: &FinLattice) -> Result<ScottReport> {
    assert!(l.size() <= SCOTT_ENUM_MAX, "filter sweep guard");
    let deltas: Vec<Congruence> = (0..l.size())
        .map(|a| congruence::delta(l, a))
        .collect::<Result<_>>()?;
    let mut filters = Vec::new();
    for m in bits::subsets(l.all()) {
        if let Ok(f) = ScottFilter::new(l.clone(), m) {
            filters.push(f);
        }
    }
    let all_scott_open = filters.iter().all(is_scott_open);
    assert!(all_scott_open, "every proper filter on a finite carrier is Scott-open");
    let mut closed = true;
    for f in &filters {
        for p in bits::subsets(f.members) {
            let join = bits::iter(p).fold(Congruence::diagonal(l.size()), |acc, s| {
                congruence::congruence_join(l, &acc, &deltas[s])
            });
            if let Some(a) = (0..l.size()).find(|&a| deltas[a] == join) {
                closed &= bits::has(f.members, a);
            }
        }
    }
    Ok(ScottReport {
        filters: filters.len(),
        all_scott_open,
        closed_under_strongly_exact_meets: closed,
    })
}

/// Closure of a generating set under binary meets, the top, and implications
/// from arbitrary elements, iterated to a fixpoint: the smallest sublocale
/// containing the generators.
pub fn generated_sublocale(l: &FinLattice, gens: Bits) -> Result<Bits> {
    let mut set = gens | bits::bit(l.top());
    loop {
        let mut next = set;
        for x in bits::iter(set) {
            for y in bits::iter(set) {
                next |= bits::bit(l.meet(x, y));
            }
            for a in 0..l.size() {
                next |= bits::bit(l.heyting_arrow(a, x)?);
            }
        }
        if next == set {
            return Ok(set);
        }
        set = next;
    }
}

/// Whether the designated part generates the whole carrier as a sublocale.
/// Two independent routes must agree pointwise: the fixpoint closure and the
/// implication-meet formula `a = meet of the implications above a`.
pub fn is_locale_based(f: &FrithPair) -> Result<bool> {
    let l = &f.lattice;
    let closure = generated_sublocale(l, f.sub)?;
    let mut formula: Bits = 0;
    for a in 0..l.size() {
        let mut above: Bits = 0;
        for b in 0..l.size() {
            for s in bits::iter(f.sub) {
                let arrow = l.heyting_arrow(b, s)?;
                if l.leq(a, arrow) {
                    above |= bits::bit(arrow);
                }
            }
        }
        if l.meet_set(above) == a {
            formula |= bits::bit(a);
        }
    }
    assert_eq!(closure, formula, "sublocale closure matches the implication formula");
    Ok(closure == l.all())
}

/// The sublocale generated by the designated part, as a pair of its own,
/// together with the frame quotient sending each element to the least
/// sublocale element above it.  Designated elements are fixed by the
/// quotient.
pub fn sublocale_quotient(f: &FrithPair) -> Result<(FrithPair, FrithHom)> {
    let l = &f.lattice;
    let carrier_bits = generated_sublocale(l, f.sub)?;
    let carrier = bits::to_vec(carrier_bits);
    let names = carrier.iter().map(|&i| l.name(i).to_string()).collect();
    let sub_lat = FinLattice::from_poset(l.poset().restrict(carrier_bits), names)?;
    let map: Vec<usize> = (0..l.size())
        .map(|a| {
            let above = carrier
                .iter()
                .filter(|&&x| l.leq(a, x))
                .fold(0, |m, &x| m | bits::bit(x));
            carrier
                .binary_search(&l.meet_set(above))
                .expect("the reflection lands in the sublocale")
        })
        .collect();
    let hom = LatticeHom::new(l.clone(), sub_lat.clone(), map)?;
    let sub_image = bits::iter(f.sub).fold(0, |m, s| m | bits::bit(hom.apply(s)));
    let pair = FrithPair::new(sub_lat, sub_image)?;
    let q = FrithHom::new(f.clone(), pair.clone(), hom)?;
    Ok((pair, q))
}

/// Recognition of completeness and locale-basedness through morphisms whose
/// designated restriction is an isomorphism.
#[derive(Debug, Clone, Serialize)]
pub struct FrithRecognitionReport {
    pub bound: usize,
    pub complete_side: bool,
    pub locale_based_side: bool,
}

/// Completeness is recognized by maps into the pair, locale-basedness by
/// maps out of it: in each direction, every candidate whose designated
/// restriction is an isomorphism must itself be an isomorphism of pairs.
/// Candidates are the fully-designated pairs with carriers up to `bound`;
/// the completion counit and the sublocale quotient are always included,
/// which keeps the bounded searches decisive.  Both verdicts must agree with
/// the structural notions (asserted).
pub fn frith_banaschewski_check(f: &FrithPair, bound: usize) -> Result<FrithRecognitionReport> {
    let complete = is_complete(f)?;
    let locale_based = is_locale_based(f)?;
    let comp = completion(f)?;
    let (_, q) = sublocale_quotient(f)?;
    debug_assert!(lfrith_hom(&q)?.is_iso(), "the quotient fixes the designated part");
    let mut into: Vec<FrithHom> = vec![comp.counit.clone()];
    let mut out_of: Vec<FrithHom> = vec![q];
    for m in enumerate::distributive_lattices_upto(bound) {
        let cand = FrithPair::full(m)?;
        into.extend(frith_homs(&cand, f)?);
        out_of.extend(frith_homs(f, &cand)?);
    }
    let mut complete_side = true;
    for h in &into {
        complete_side &= !lfrith_hom(h)?.is_iso() || is_pair_iso(h);
    }
    let mut locale_based_side = true;
    for h in &out_of {
        locale_based_side &= !lfrith_hom(h)?.is_iso() || is_pair_iso(h);
    }
    assert_eq!(complete_side, complete, "incoming recognition matches completeness");
    assert_eq!(
        locale_based_side, locale_based,
        "outgoing recognition matches locale-basedness"
    );
    Ok(FrithRecognitionReport { bound, complete_side, locale_based_side })
}

/// Verify, for a homomorphism of finite distributive lattices: the Galois
/// property of the tabulated right adjoint, the implication inequality
/// `h(a -> b) <= h(a) -> h(b)` (both asserted), and the Frobenius identity
/// `a -> h_*(x) = h_*(h(a) -> x)`, whose truth value is returned.
pub fn frobenius_check(h: &LatticeHom) -> Result<bool> {
    let radj = h.right_adjoint();
    for a in 0..h.dom.size() {
        for y in 0..h.cod.size() {
            assert_eq!(
                h.cod.leq(h.apply(a), y),
                h.dom.leq(a, radj[y]),
                "right adjoint Galois property"
            );
        }
    }
    for a in 0..h.dom.size() {
        for b in 0..h.dom.size() {
            assert!(
                h.cod.leq(
                    h.apply(h.dom.heyting_arrow(a, b)?),
                    h.cod.heyting_arrow(h.apply(a), h.apply(b))?
                ),
                "homomorphisms are sub-implicative"
            );
        }
    }
    let mut frobenius = true;
    for a in 0..h.dom.size() {
        for x in 0..h.cod.size() {
            frobenius &=
                h.dom.heyting_arrow(a, radj[x])? == radj[h.cod.heyting_arrow(h.apply(a), x)?];
        }
    }
    Ok(frobenius)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::lattice::find_isomorphism;

    fn pre_b4() -> FrithPair {
        // Carrier B4, designated part the three-element chain {0, {a}, top}.
        FrithPair::new(catalog::b4(), bits::from_indices(&[0, 1, 3])).unwrap()
    }

    fn pre_c3() -> FrithPair {
        // Carrier C3 with only the bounds designated.
        FrithPair::new(catalog::c3(), bits::from_indices(&[0, 2])).unwrap()
    }

    #[test]
    fn pair_validation_and_density() {
        assert!(FrithPair::full(catalog::c3()).unwrap().is_frith());
        let pre = pre_b4();
        assert!(!pre.is_frith());
        assert!(!pre.is_symmetric());
        assert!(FrithPair::full(catalog::b4()).unwrap().is_symmetric());
        assert!(matches!(
            FrithPair::full(catalog::m3()),
            Err(Error::NotDistributive(..))
        ));
        assert!(FrithPair::new(catalog::b4(), bits::from_indices(&[0, 1])).is_err());
    }

    #[test]
    fn hom_classification_on_chain_maps() {
        let c3 = FrithPair::full(catalog::c3()).unwrap();
        let c2 = FrithPair::full(catalog::c2()).unwrap();

        let class = classify_hom(&FrithHom::identity(&c3));
        assert!(class.mono && class.extremal_epi && class.dense && class.iso);

        // Collapse the lower half of the chain: onto but not injective, and
        // not dense since the middle hits the bottom.
        let collapse = FrithHom::new(
            c3.clone(),
            c2.clone(),
            LatticeHom::new(catalog::c3(), catalog::c2(), vec![0, 0, 1]).unwrap(),
        )
        .unwrap();
        let class = classify_hom(&collapse);
        assert!(class.extremal_epi && !class.mono && !class.dense && !class.iso);

        // The endpoint embedding: injective and dense but not onto.
        let emb = FrithHom::new(
            c2,
            c3,
            LatticeHom::new(catalog::c2(), catalog::c3(), vec![0, 2]).unwrap(),
        )
        .unwrap();
        let class = classify_hom(&emb);
        assert!(class.mono && class.dense && !class.extremal_epi && !class.iso);
    }

    #[test]
    fn spectra_of_catalog_pairs() {
        let pt = pt_functor(&FrithPair::full(catalog::c3()).unwrap()).unwrap();
        assert_eq!(pt.points(), 2);
        assert!(pervin::find_pervin_isomorphism(&pt, &catalog::sier()).is_some());

        let one = pt_functor(&FrithPair::full(catalog::c2()).unwrap()).unwrap();
        assert_eq!(one.points(), 1);

        let two = pt_functor(&FrithPair::full(catalog::b4()).unwrap()).unwrap();
        assert_eq!((two.points(), two.family().len()), (2, 4));
    }

    #[test]
    fn opens_of_catalog_spaces() {
        let om = omega_functor(&catalog::sier()).unwrap();
        assert!(om.is_frith());
        assert!(find_isomorphism(om.lattice(), &catalog::c3()).is_some());
        assert_eq!(omega_functor(&catalog::p3()).unwrap().lattice().size(), 4);
    }

    #[test]
    fn dual_adjunction_on_catalog_instances() {
        let rep =
            dual_adjunction_check(&catalog::sier(), &FrithPair::full(catalog::c3()).unwrap())
                .unwrap();
        assert_eq!((rep.pervin_homs, rep.frith_homs), (3, 3));
        assert!(rep.pass());

        let rep = dual_adjunction_check(&catalog::p3(), &FrithPair::full(catalog::b4()).unwrap())
            .unwrap();
        assert_eq!((rep.pervin_homs, rep.frith_homs), (2, 2));
        assert!(rep.pass());

        assert!(dual_adjunction_check(&catalog::sier(), &pre_b4()).is_err());
    }

    #[test]
    fn unit_and_counit_degeneracies() {
        // Finite distributive lattices have enough points: the counit is an
        // isomorphism of pairs on every fully-designated pair.
        for l in [catalog::c2(), catalog::c3(), catalog::b4(), catalog::b8()] {
            let f = FrithPair::full(l).unwrap();
            assert!(is_pair_iso(&spectrum_counit(&f).unwrap()));
        }
        // The unit is injective exactly on point-distinguishing spaces.
        assert!(spectrum_unit(&catalog::sier()).unwrap().is_injective());
        assert!(!spectrum_unit(&catalog::indisc()).unwrap().is_injective());
    }

    #[test]
    fn symmetrization_of_catalog_pairs() {
        let sym = fsym(&FrithPair::full(catalog::c3()).unwrap()).unwrap();
        assert_eq!(sym.pair.lattice().size(), 4);
        assert_eq!(bits::count(sym.pair.sub()), 4);
        assert!(find_isomorphism(sym.pair.lattice(), &catalog::b4()).is_some());
        let class = classify_hom(&sym.unit);
        assert!(class.mono && class.dense);

        let sym = fsym(&FrithPair::full(catalog::c2()).unwrap()).unwrap();
        assert_eq!(sym.pair.lattice().size(), 2);

        let sym = fsym(&FrithPair::full(catalog::b4()).unwrap()).unwrap();
        assert_eq!((sym.pair.lattice().size(), bits::count(sym.pair.sub())), (4, 4));

        // A pre-pair keeps its defect: with only the bounds of the chain
        // designated, the congruence subframe is again a three-element chain
        // and only its bounds are designated.
        let sym = fsym(&pre_c3()).unwrap();
        assert_eq!(sym.pair.lattice().size(), 3);
        assert_eq!(bits::count(sym.pair.sub()), 2);
        assert!(sym.pair.is_symmetric());
    }

    #[test]
    fn symmetrization_is_universal_and_idempotent() {
        for f in [
            FrithPair::full(catalog::c2()).unwrap(),
            FrithPair::full(catalog::c3()).unwrap(),
            FrithPair::full(catalog::b4()).unwrap(),
            pre_b4(),
        ] {
            let sym = fsym(&f).unwrap();
            // The unit itself must factor uniquely (through the identity).
            let check = fsym_adjunction_check(&sym.unit).unwrap();
            assert!(check.pass());
            // Symmetrizing a symmetric pair changes nothing.
            let again = fsym(&sym.pair).unwrap();
            assert!(find_pair_isomorphism(&again.pair, &sym.pair).is_some());
        }
    }

    #[test]
    fn completion_of_catalog_pairs() {
        let comp = completion(&FrithPair::full(catalog::c3()).unwrap()).unwrap();
        assert!(is_pair_iso(&comp.counit));
        assert!(is_complete(&FrithPair::full(catalog::c3()).unwrap()).unwrap());

        // The chain designated inside the square: its ideal completion is the
        // chain itself, and the counit embeds it densely without being onto.
        let pre = pre_b4();
        let comp = completion(&pre).unwrap();
        assert_eq!(comp.pair.lattice().size(), 3);
        let class = classify_hom(&comp.counit);
        assert!(class.dense && class.extremal_epi && class.mono);
        assert!(!comp.counit.hom.is_iso());
        assert!(!is_complete(&pre).unwrap());
    }

    #[test]
    fn completeness_report_separates_the_quotient_lens() {
        let rep = completeness_report(&FrithPair::full(catalog::b4()).unwrap(), 4).unwrap();
        assert!(rep.complete && rep.coherent && rep.counit_iso);
        assert!(rep.symmetrization_complete_up_to_bound);

        // On this pre-pair the symmetrization is a fully-designated square,
        // which is complete even though the pair itself is not.
        let rep = completeness_report(&pre_b4(), 4).unwrap();
        assert!(!rep.complete && !rep.coherent && !rep.counit_iso);
        assert!(rep.symmetrization_complete_up_to_bound);
    }

    #[test]
    fn strongly_exact_meets_follow_the_designated_part() {
        let f = FrithPair::full(catalog::c3()).unwrap();
        assert_eq!(strongly_exact_meets(&f).unwrap(), vec![0, 1, 2]);
        assert!(is_strongly_exact(&f).unwrap());

        assert_eq!(strongly_exact_meets(&pre_b4()).unwrap(), vec![0, 1, 3]);
        assert!(is_strongly_exact(&pre_b4()).unwrap());
    }

    #[test]
    fn scott_filters_and_strongly_exact_closure() {
        assert!(ScottFilter::new(catalog::c3(), bits::full(3)).is_err());
        assert!(ScottFilter::new(catalog::c3(), 0).is_err());
        let up_m = ScottFilter::new(catalog::c3(), bits::from_indices(&[1, 2])).unwrap();
        assert!(is_scott_open(&up_m));

        let rep = scott_strong_exact_check(&catalog::c3()).unwrap();
        assert_eq!(rep.filters, 2);
        assert!(rep.pass());

        let rep = scott_strong_exact_check(&catalog::b4()).unwrap();
        assert_eq!(rep.filters, 3);
        assert!(rep.pass());
    }

    #[test]
    fn sublocale_generation_and_locale_basedness() {
        // Implications out of the designated chain reach the other atom.
        assert!(is_locale_based(&pre_b4()).unwrap());
        // The bounds of a chain generate nothing new.
        assert!(!is_locale_based(&pre_c3()).unwrap());
        assert!(is_locale_based(&FrithPair::full(catalog::c3()).unwrap()).unwrap());

        let (pair, q) = sublocale_quotient(&pre_c3()).unwrap();
        assert_eq!(pair.lattice().size(), 2);
        assert_eq!(q.hom.map, vec![0, 1, 1]);
        assert!(lfrith_hom(&q).unwrap().is_iso());
    }

    #[test]
    fn recognition_of_complete_and_locale_based_pairs() {
        let rep = frith_banaschewski_check(&FrithPair::full(catalog::c3()).unwrap(), 3).unwrap();
        assert!(rep.complete_side && rep.locale_based_side);

        let rep = frith_banaschewski_check(&pre_b4(), 3).unwrap();
        assert!(!rep.complete_side && rep.locale_based_side);

        let rep = frith_banaschewski_check(&pre_c3(), 3).unwrap();
        assert!(!rep.complete_side && !rep.locale_based_side);
    }

    #[test]
    fn designated_restrictions_detect_density_and_surjectivity() {
        // Across all morphisms between small fully-designated pairs, the
        // designated restriction is injective exactly when symmetrization
        // makes the morphism dense, and surjective exactly when the morphism
        // is an extremal epimorphism.
        let pairs = [
            FrithPair::full(catalog::c2()).unwrap(),
            FrithPair::full(catalog::c3()).unwrap(),
            FrithPair::full(catalog::b4()).unwrap(),
        ];
        for dom in &pairs {
            for cod in &pairs {
                for h in frith_homs(dom, cod).unwrap() {
                    let restriction = lfrith_hom(&h).unwrap();
                    let sym_dense = classify_hom(&fsym_map(&h).unwrap()).dense;
                    assert_eq!(restriction.is_injective(), sym_dense);
                    assert_eq!(
                        restriction.is_surjective(),
                        classify_hom(&h).extremal_epi
                    );
                    if restriction.is_injective() {
                        let radj = h.hom.right_adjoint();
                        for s in h.dom.sub_elements() {
                            assert_eq!(radj[h.hom.apply(s)], s);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_identity_holds_for_small_homomorphisms() {
        let quotient = LatticeHom::new(catalog::c3(), catalog::c2(), vec![0, 0, 1]).unwrap();
        assert!(frobenius_check(&quotient).unwrap());
        let embed = LatticeHom::new(catalog::c2(), catalog::c3(), vec![0, 2]).unwrap();
        assert!(frobenius_check(&embed).unwrap());
        for h in enumerate_homs(&catalog::b4(), &catalog::c3()).unwrap() {
            assert!(frobenius_check(&h).unwrap());
        }
    }
}

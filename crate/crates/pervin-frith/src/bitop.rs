//! Bitopological spaces and biframes: patch topologies, positive/negative
//! clopens, bicomplemented elements, zero-dimensionality and compactness,
//! the Skula constructions on both the point-set and pointfree sides with
//! their adjunctions (positive-clopen functor against the Skula bispace,
//! congruence-frame Skula biframe against the bicomplemented-part functor),
//! the commuting square of open-set functors, the natural comparison of
//! spectra with its genuine failure witness, and the monotopological
//! restrictions recovering clopen algebras and complemented-element pairs.

use serde::Serialize;

use crate::bits::{self, Bits};
use crate::congruence::{self, CongruenceFrame};
use crate::error::{Error, Result};
use crate::family::{family_lattice, SubsetFamily};
use crate::frith::{
    self, frith_homs, is_pair_iso, omega_functor, pt_functor, FrithHom, FrithPair,
};
use crate::lattice::{enumerate_homs, FinLattice, LatticeHom};
use crate::pervin::{self, PervinMap, PervinSpace};

/// Guard on function-sweep enumeration between bispaces.
const MAP_ENUM_MAX: u128 = 1 << 20;

/// A set carrying two topologies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSpace {
    names: Vec<String>,
    pos: SubsetFamily,
    neg: SubsetFamily,
}

impl BiSpace {
    /// Validate that both families are topologies on the named ground set:
    /// closed under union and intersection and containing the empty set and
    /// the whole set.
    pub fn new(names: Vec<String>, pos: SubsetFamily, neg: SubsetFamily) -> Result<Self> {
        if pos.ground_size() != names.len() || neg.ground_size() != names.len() {
            return Err(Error::Schema(format!(
                "{} point names for topologies on {} and {} points",
                names.len(),
                pos.ground_size(),
                neg.ground_size()
            )));
        }
        pos.require_lattice_family()?;
        neg.require_lattice_family()?;
        Ok(BiSpace { names, pos, neg })
    }

    pub fn points(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn pos(&self) -> &SubsetFamily {
        &self.pos
    }

    pub fn neg(&self) -> &SubsetFamily {
        &self.neg
    }

    /// The topology generated by the union of the two topologies.
    pub fn patch(&self) -> SubsetFamily {
        let mut members = self.pos.members().to_vec();
        members.extend_from_slice(self.neg.members());
        SubsetFamily::new(self.points(), members)
            .expect("union of topologies is a family")
            .lattice_closure()
    }

    /// Positive opens whose complement is a negative open.
    pub fn pos_clopens(&self) -> SubsetFamily {
        let full = self.pos.full_mask();
        let members = self
            .pos
            .members()
            .iter()
            .copied()
            .filter(|&u| self.neg.contains(full & !u))
            .collect();
        SubsetFamily::new(self.points(), members).expect("clopens form a family")
    }

    /// Negative opens whose complement is a positive open.
    pub fn neg_clopens(&self) -> SubsetFamily {
        let full = self.neg.full_mask();
        let members = self
            .neg
            .members()
            .iter()
            .copied()
            .filter(|&u| self.pos.contains(full & !u))
            .collect();
        SubsetFamily::new(self.points(), members).expect("clopens form a family")
    }

    /// The patch topology distinguishes points.
    pub fn is_t0(&self) -> bool {
        let patch = self.patch();
        (0..self.points()).all(|x| {
            (0..x).all(|y| {
                patch
                    .members()
                    .iter()
                    .any(|&m| bits::has(m, x) != bits::has(m, y))
            })
        })
    }

    /// Compactness of the patch topology, established by cover enumeration.
    /// Finite spaces are always compact; the search keeps the definition
    /// honest and the result is asserted.
    pub fn is_compact(&self) -> bool {
        let compact = self.patch().is_compact_space();
        assert!(compact, "finite bispaces are compact");
        compact
    }

    /// Every positive open is a union of positive clopens, and dually.
    pub fn is_zero_dimensional(&self) -> bool {
        let generated = |opens: &SubsetFamily, clopens: &SubsetFamily| {
            opens.members().iter().all(|&u| {
                clopens
                    .members()
                    .iter()
                    .filter(|&&c| c & !u == 0)
                    .fold(0, |acc, &c| acc | c)
                    == u
            })
        };
        generated(&self.pos, &self.pos_clopens()) && generated(&self.neg, &self.neg_clopens())
    }
}

/// A function continuous for both topologies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSpaceMap {
    pub dom: BiSpace,
    pub cod: BiSpace,
    pub map: Vec<usize>,
}

impl BiSpaceMap {
    pub fn new(dom: BiSpace, cod: BiSpace, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.points() || map.iter().any(|&y| y >= cod.points()) {
            return Err(Error::Schema("map does not fit the point sets".into()));
        }
        let preimage = |t: Bits| {
            (0..dom.points())
                .filter(|&x| bits::has(t, map[x]))
                .fold(0, |acc, x| acc | bits::bit(x))
        };
        for &t in cod.pos.members() {
            if !dom.pos.contains(preimage(t)) {
                return Err(Error::Invariant(
                    "preimage of a positive open is not positively open".into(),
                ));
            }
        }
        for &t in cod.neg.members() {
            if !dom.neg.contains(preimage(t)) {
                return Err(Error::Invariant(
                    "preimage of a negative open is not negatively open".into(),
                ));
            }
        }
        Ok(BiSpaceMap { dom, cod, map })
    }

    pub fn identity(x: &BiSpace) -> Self {
        BiSpaceMap {
            dom: x.clone(),
            cod: x.clone(),
            map: (0..x.points()).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn preimage(&self, t: Bits) -> Bits {
        (0..self.dom.points())
            .filter(|&x| bits::has(t, self.map[x]))
            .fold(0, |acc, x| acc | bits::bit(x))
    }

    pub fn then(&self, g: &BiSpaceMap) -> Result<BiSpaceMap> {
        if self.cod != g.dom {
            return Err(Error::Invariant("composition mismatch".into()));
        }
        let map = self.map.iter().map(|&x| g.map[x]).collect();
        BiSpaceMap::new(self.dom.clone(), g.cod.clone(), map)
    }

    /// A bijection matching both topologies exactly.
    pub fn is_iso(&self) -> bool {
        let mut seen = vec![false; self.cod.points()];
        for &y in &self.map {
            seen[y] = true;
        }
        if self.map.len() != self.cod.points() || seen.iter().any(|&s| !s) {
            return false;
        }
        let image_family = |fam: &SubsetFamily| {
            let mut members: Vec<Bits> = fam
                .members()
                .iter()
                .map(|&m| bits::iter(m).fold(0, |acc, x| acc | bits::bit(self.map[x])))
                .collect();
            members.sort_unstable();
            members
        };
        image_family(&self.dom.pos) == self.cod.pos.members()
            && image_family(&self.dom.neg) == self.cod.neg.members()
    }
}

/// All bicontinuous functions between two bispaces.
pub fn bispace_maps(dom: &BiSpace, cod: &BiSpace) -> Vec<BiSpaceMap> {
    let total = (cod.points() as u128).saturating_pow(dom.points() as u32);
    assert!(total <= MAP_ENUM_MAX, "bispace map sweep guard");
    let mut out = Vec::new();
    let mut digits = vec![0usize; dom.points()];
    loop {
        if let Ok(f) = BiSpaceMap::new(dom.clone(), cod.clone(), digits.clone()) {
            out.push(f);
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                return out;
            }
            digits[i] += 1;
            if digits[i] < cod.points() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// A frame with two distinguished subframes that together generate it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiFrame {
    main: FinLattice,
    pos: Bits,
    neg: Bits,
}

impl BiFrame {
    /// Validate distributivity of the main component, that both parts are
    /// bounded sublattices, and that together they generate the whole
    /// carrier under joins of finite meets.
    pub fn new(main: FinLattice, pos: Bits, neg: Bits) -> Result<Self> {
        if let Some((a, b, c)) = main.distributivity_witness() {
            return Err(Error::NotDistributive(a, b, c));
        }
        if !main.is_bounded_sublattice(pos) || !main.is_bounded_sublattice(neg) {
            return Err(Error::Invariant(
                "both components must be bounded sublattices".into(),
            ));
        }
        if main.generated_sublattice(pos | neg) != main.all() {
            return Err(Error::Invariant(
                "the two components must generate the main frame".into(),
            ));
        }
        Ok(BiFrame { main, pos, neg })
    }

    pub fn main(&self) -> &FinLattice {
        &self.main
    }

    pub fn pos(&self) -> Bits {
        self.pos
    }

    pub fn neg(&self) -> Bits {
        self.neg
    }

    /// Positive elements complemented in the main frame with complement in
    /// the negative part.
    pub fn bicomplemented_pos(&self) -> Bits {
        bits::iter(self.pos)
            .filter(|&a| {
                matches!(self.main.complement_of(a), Some(c) if bits::has(self.neg, c))
            })
            .fold(0, |acc, a| acc | bits::bit(a))
    }

    /// Negative elements complemented in the main frame with complement in
    /// the positive part.
    pub fn bicomplemented_neg(&self) -> Bits {
        bits::iter(self.neg)
            .filter(|&a| {
                matches!(self.main.complement_of(a), Some(c) if bits::has(self.pos, c))
            })
            .fold(0, |acc, a| acc | bits::bit(a))
    }

    /// Compactness of the main component: its top is a compact element.
    /// Automatic on finite carriers and asserted.
    pub fn is_compact(&self) -> bool {
        let compact = self.main.is_compact_element(self.main.top());
        assert!(compact, "finite biframes are compact");
        compact
    }

    /// Both parts are join-generated by their bicomplemented elements.
    pub fn is_zero_dimensional(&self) -> bool {
        let generated = |part: Bits, bc: Bits| {
            bits::iter(part).all(|a| {
                let below = bits::iter(bc)
                    .filter(|&c| self.main.leq(c, a))
                    .fold(0, |acc, c| acc | bits::bit(c));
                self.main.join_set(below) == a
            })
        };
        generated(self.pos, self.bicomplemented_pos())
            && generated(self.neg, self.bicomplemented_neg())
    }
}

/// A homomorphism of main frames carrying each part into the matching part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiFrameHom {
    pub dom: BiFrame,
    pub cod: BiFrame,
    pub hom: LatticeHom,
}

impl BiFrameHom {
    pub fn new(dom: BiFrame, cod: BiFrame, hom: LatticeHom) -> Result<Self> {
        if hom.dom != dom.main || hom.cod != cod.main {
            return Err(Error::Invariant(
                "homomorphism does not connect the given biframes".into(),
            ));
        }
        if hom.image_of(dom.pos) & !cod.pos != 0 || hom.image_of(dom.neg) & !cod.neg != 0 {
            return Err(Error::Invariant(
                "homomorphism must respect the positive and negative parts".into(),
            ));
        }
        Ok(BiFrameHom { dom, cod, hom })
    }

    pub fn then(&self, g: &BiFrameHom) -> Result<BiFrameHom> {
        BiFrameHom::new(self.dom.clone(), g.cod.clone(), self.hom.then(&g.hom)?)
    }

    /// Only the bottom hits the bottom.
    pub fn is_dense(&self) -> bool {
        let bot = self.cod.main.bottom();
        (0..self.dom.main.size())
            .all(|a| self.hom.apply(a) != bot || a == self.dom.main.bottom())
    }

    /// Invertible with both parts mapped onto the matching parts.
    pub fn is_iso(&self) -> bool {
        self.hom.is_iso()
            && self.hom.image_of(self.dom.pos) == self.cod.pos
            && self.hom.image_of(self.dom.neg) == self.cod.neg
    }
}

/// All morphisms between two biframes.
pub fn biframe_homs(dom: &BiFrame, cod: &BiFrame) -> Result<Vec<BiFrameHom>> {
    Ok(enumerate_homs(&dom.main, &cod.main)?
        .into_iter()
        .filter(|h| {
            h.image_of(dom.pos) & !cod.pos == 0 && h.image_of(dom.neg) & !cod.neg == 0
        })
        .map(|hom| BiFrameHom {
            dom: dom.clone(),
            cod: cod.clone(),
            hom,
        })
        .collect())
}

/// The Skula bispace of a Pervin space: the topology generated by the
/// family on the positive side and the one generated by the complements on
/// the negative side.  The output is always zero-dimensional (asserted).
pub fn skula_space(p: &PervinSpace) -> Result<BiSpace> {
    let pos = p.omega_topology();
    let neg = p.family().complements().lattice_closure();
    let out = BiSpace::new(p.names().to_vec(), pos, neg)?;
    assert!(out.is_zero_dimensional(), "Skula bispaces are zero-dimensional");
    Ok(out)
}

/// Skula action on maps: the same underlying function.
pub fn skula_space_map(f: &PervinMap) -> Result<BiSpaceMap> {
    BiSpaceMap::new(skula_space(&f.dom)?, skula_space(&f.cod)?, f.map.clone())
}

/// The positive-clopen Pervin space of a bispace.
pub fn clplus(x: &BiSpace) -> Result<PervinSpace> {
    PervinSpace::new(x.names().to_vec(), x.pos_clopens())
}

/// Positive-clopen action on maps: the same underlying function.
pub fn clplus_map(g: &BiSpaceMap) -> Result<PervinMap> {
    PervinMap::new(clplus(&g.dom)?, clplus(&g.cod)?, g.map.clone())
}

/// The unit comparison at a bispace: the identity function into the Skula
/// bispace of the positive-clopen space.  An isomorphism exactly when the
/// bispace is zero-dimensional (asserted).
pub fn skula_unit(x: &BiSpace) -> Result<BiSpaceMap> {
    let target = skula_space(&clplus(x)?)?;
    let unit = BiSpaceMap::new(x.clone(), target, (0..x.points()).collect())?;
    assert_eq!(
        unit.is_iso(),
        x.is_zero_dimensional(),
        "unit fixpoints are the zero-dimensional bispaces"
    );
    Ok(unit)
}

/// The counit comparison at a Pervin space: the identity function from the
/// positive clopens of the Skula bispace back to the space.  At finite
/// scale the designated family is closed under open intersections, so this
/// is always an isomorphism (asserted).
pub fn skula_counit(p: &PervinSpace) -> Result<PervinMap> {
    let source = clplus(&skula_space(p)?)?;
    assert_eq!(
        source.family(),
        &p.open_intersection_closure(),
        "positive clopens of the Skula bispace are the open intersections"
    );
    let counit = PervinMap::new(source, p.clone(), (0..p.points()).collect())?;
    assert!(
        p.is_strongly_exact(),
        "finite Pervin spaces are strongly exact"
    );
    assert_eq!(counit.dom.family(), counit.cod.family());
    Ok(counit)
}

/// Instance report for the adjunction between the positive-clopen functor
/// and the Skula bispace functor.
#[derive(Debug, Clone, Serialize)]
pub struct SkulaAdjunctionReport {
    pub bispace_maps: usize,
    pub pervin_maps: usize,
    pub bijection: bool,
    pub triangles: bool,
    pub unit_iso: bool,
    pub zero_dimensional: bool,
    pub counit_iso: bool,
    pub idempotent: bool,
}

impl SkulaAdjunctionReport {
    pub fn pass(&self) -> bool {
        self.bijection && self.triangles && self.counit_iso && self.idempotent
            && self.unit_iso == self.zero_dimensional
    }
}

/// Verify on an instance that bicontinuous maps into the Skula bispace and
/// Pervin maps out of the positive-clopen space are the same functions,
/// that both triangle identities hold, that the unit is an isomorphism
/// exactly on zero-dimensional bispaces, and that the adjunction is
/// idempotent.
pub fn skula_adjunction_check(x: &BiSpace, p: &PervinSpace) -> Result<SkulaAdjunctionReport> {
    let sk_p = skula_space(p)?;
    let cl_x = clplus(x)?;
    let mut into_sk: Vec<Vec<usize>> = bispace_maps(x, &sk_p).into_iter().map(|f| f.map).collect();
    let mut from_cl: Vec<Vec<usize>> =
        pervin::pervin_maps(&cl_x, p).into_iter().map(|f| f.map).collect();
    into_sk.sort_unstable();
    from_cl.sort_unstable();
    let bijection = into_sk == from_cl;

    let unit = skula_unit(x)?;
    let counit = skula_counit(p)?;
    // Left triangle: the counit at the positive-clopen space absorbs the
    // image of the unit.
    let t1 = clplus_map(&unit)?.then(&skula_counit(&cl_x)?)?.map
        == (0..x.points()).collect::<Vec<_>>();
    // Right triangle: the Skula image of the counit absorbs the unit at the
    // Skula bispace.
    let t2 = skula_unit(&sk_p)?.then(&skula_space_map(&counit)?)?.map
        == (0..p.points()).collect::<Vec<_>>();
    let idempotent = skula_unit(&sk_p)?.is_iso();
    assert!(idempotent, "the adjunction is idempotent");

    Ok(SkulaAdjunctionReport {
        bispace_maps: into_sk.len(),
        pervin_maps: from_cl.len(),
        bijection,
        triangles: t1 && t2,
        unit_iso: unit.is_iso(),
        zero_dimensional: x.is_zero_dimensional(),
        counit_iso: counit.dom.family() == counit.cod.family(),
        idempotent,
    })
}

/// The Skula biframe of a pair, with the congruence bookkeeping needed to
/// locate the images of base elements.
#[derive(Debug, Clone)]
pub struct SkulaBiframe {
    pub biframe: BiFrame,
    pub frame: CongruenceFrame,
}

/// The Skula biframe of a pair: the congruence subframe generated by all
/// closed congruences and the designated open ones, with positive part the
/// closed image and negative part generated by the designated opens.
pub fn skula_biframe(f: &FrithPair) -> Result<SkulaBiframe> {
    let frame = congruence::generated_congruence_subframe(f.lattice(), f.sub())?;
    let nabla = frame.nabla_hom();
    let pos = (0..f.lattice().size()).fold(0, |acc, a| acc | bits::bit(nabla.apply(a)));
    let delta_gens = bits::iter(f.sub()).fold(0, |acc, s| {
        acc | bits::bit(frame.delta[s].expect("designated opens are members"))
    });
    let neg = frame.lattice.generated_sublattice(delta_gens);
    let biframe = BiFrame::new(frame.lattice.clone(), pos, neg)?;
    if f.is_frith() {
        assert!(
            biframe.is_zero_dimensional(),
            "Skula biframes of join-dense pairs are zero-dimensional"
        );
    }
    Ok(SkulaBiframe { biframe, frame })
}

/// Skula action on morphisms: the unique extension between the congruence
/// subframes, which respects both parts.
pub fn skula_biframe_map(h: &FrithHom) -> Result<BiFrameHom> {
    let dom = skula_biframe(&h.dom)?;
    let cod = skula_biframe(&h.cod)?;
    let comp = h.hom.then(cod.frame.nabla_hom())?;
    let (_, ext) = congruence::universal_extension(&comp, h.dom.sub())?;
    BiFrameHom::new(dom.biframe, cod.biframe, ext)
}

/// Whether, for every base element, the closed congruence over it is
/// positively bicomplemented in the Skula biframe exactly when the element
/// is a strongly exact meet of designated elements.  Always true; the two
/// sides are computed independently.
pub fn nabla_bicomplemented_check(f: &FrithPair) -> Result<bool> {
    let sk = skula_biframe(f)?;
    let bc = sk.biframe.bicomplemented_pos();
    let sem = frith::strongly_exact_meets(f)?;
    let nabla = sk.frame.nabla_hom();
    let agree = (0..f.lattice().size()).all(|a| {
        bits::has(bc, nabla.apply(a)) == sem.binary_search(&a).is_ok()
    });
    assert!(agree, "bicomplemented closed congruences name strongly exact meets");
    Ok(agree)
}

/// The bicomplemented part of a biframe as a pair: the subframe generated
/// by the positively bicomplemented elements with those elements
/// designated, returned together with its inclusion into the main frame.
pub fn bbplus(l: &BiFrame) -> Result<(FrithPair, LatticeHom)> {
    let bc = l.bicomplemented_pos();
    let carrier_bits = l.main.generated_sublattice(bc);
    debug_assert_eq!(carrier_bits, bc, "bicomplemented elements form a sublattice");
    let (lat, carrier) = l.main.sublattice(carrier_bits)?;
    let sub = carrier
        .iter()
        .enumerate()
        .filter(|&(_, &a)| bits::has(bc, a))
        .fold(0, |acc, (i, _)| acc | bits::bit(i));
    let pair = FrithPair::new(lat.clone(), sub)?;
    let inclusion = LatticeHom::new(lat, l.main.clone(), carrier)?;
    Ok((pair, inclusion))
}

/// Bicomplemented-part action on morphisms: the restriction.
pub fn bbplus_map(h: &BiFrameHom) -> Result<FrithHom> {
    let (dom_pair, dom_inc) = bbplus(&h.dom)?;
    let (cod_pair, cod_inc) = bbplus(&h.cod)?;
    let map = dom_inc
        .map
        .iter()
        .map(|&a| {
            cod_inc
                .map
                .iter()
                .position(|&b| b == h.hom.apply(a))
                .ok_or_else(|| {
                    Error::Invariant(
                        "bicomplemented elements must land on bicomplemented elements".into(),
                    )
                })
        })
        .collect::<Result<Vec<usize>>>()?;
    let hom = LatticeHom::new(dom_pair.lattice().clone(), cod_pair.lattice().clone(), map)?;
    FrithHom::new(dom_pair, cod_pair, hom)
}

/// The unit comparison at a pair: each base element goes to its closed
/// congruence inside the bicomplemented part of the Skula biframe.  Needs a
/// join-dense designated part; at finite scale it is then an isomorphism of
/// pairs (asserted), since every meet is strongly exact.
pub fn fsk_unit(f: &FrithPair) -> Result<FrithHom> {
    let sk = skula_biframe(f)?;
    let (pair, inclusion) = bbplus(&sk.biframe)?;
    let nabla = sk.frame.nabla_hom();
    let map = (0..f.lattice().size())
        .map(|a| {
            inclusion
                .map
                .iter()
                .position(|&c| c == nabla.apply(a))
                .ok_or_else(|| {
                    Error::Invariant(format!(
                        "closed congruence over {} escapes the bicomplemented part",
                        f.lattice().name(a)
                    ))
                })
        })
        .collect::<Result<Vec<usize>>>()?;
    let hom = LatticeHom::new(f.lattice().clone(), pair.lattice().clone(), map)?;
    let unit = FrithHom::new(f.clone(), pair, hom)?;
    if f.is_frith() {
        assert!(
            is_pair_iso(&unit),
            "finite join-dense pairs are strongly exact, hence unit fixpoints"
        );
    }
    Ok(unit)
}

/// The counit at a biframe: the unique extension of the inclusion of the
/// bicomplemented part, from the Skula biframe of that part back to the
/// biframe.
pub fn fsk_counit(l: &BiFrame) -> Result<BiFrameHom> {
    let (pair, inclusion) = bbplus(l)?;
    let (_, ext) = congruence::universal_extension(&inclusion, pair.sub())?;
    let dom = skula_biframe(&pair)?;
    BiFrameHom::new(dom.biframe, l.clone(), ext)
}

/// Fixpoint diagnostics for the counit at a biframe.
#[derive(Debug, Clone, Serialize)]
pub struct CounitReport {
    pub dense: bool,
    pub image_pos: bool,
    pub image_neg: bool,
    pub zero_dimensional: bool,
    pub iso: bool,
}

/// The counit is always dense; when the biframe is zero-dimensional it maps
/// the parts onto the parts, and — compactness being automatic at finite
/// scale — it is then an isomorphism.  Conversely an isomorphism forces
/// zero-dimensionality.  All of this is asserted.
pub fn fsk_counit_report(l: &BiFrame) -> Result<CounitReport> {
    let eps = fsk_counit(l)?;
    let dense = eps.is_dense();
    assert!(dense, "the counit is dense on every biframe");
    let image_pos = eps.hom.image_of(eps.dom.pos) == l.pos;
    let image_neg = eps.hom.image_of(eps.dom.neg) == l.neg;
    let zero_dimensional = l.is_zero_dimensional();
    let iso = eps.is_iso();
    if zero_dimensional {
        assert!(image_pos && image_neg, "zero-dimensionality fills both parts");
    }
    assert_eq!(
        iso, zero_dimensional,
        "counit fixpoints are the zero-dimensional biframes at finite scale"
    );
    Ok(CounitReport {
        dense,
        image_pos,
        image_neg,
        zero_dimensional,
        iso,
    })
}

/// Instance report for the adjunction between the Skula biframe functor and
/// the bicomplemented-part functor.
#[derive(Debug, Clone, Serialize)]
pub struct FskAdjunctionReport {
    pub biframe_homs: usize,
    pub frith_homs: usize,
    pub bijection: bool,
    pub triangles: bool,
    pub unit_iso: bool,
    pub counit: CounitReport,
    pub bicomplemented_lemma: bool,
}

impl FskAdjunctionReport {
    pub fn pass(&self) -> bool {
        self.bijection && self.triangles && self.unit_iso && self.bicomplemented_lemma
    }
}

/// Verify the hom-set bijection between biframe morphisms out of the Skula
/// biframe and pair morphisms into the bicomplemented part, both triangle
/// identities, the unit isomorphism, the counit diagnostics, and the
/// bicomplemented-congruence lemma.  Needs a join-dense designated part on
/// the pair side.
pub fn fsk_adjunction_check(f: &FrithPair, l: &BiFrame) -> Result<FskAdjunctionReport> {
    if !f.is_frith() {
        return Err(Error::Invariant(
            "the Skula adjunction needs a join-dense designated part".into(),
        ));
    }
    let sk = skula_biframe(f)?;
    let (pair, inclusion) = bbplus(l)?;
    let bif_side = biframe_homs(&sk.biframe, l)?;
    let frith_side = frith_homs(f, &pair)?;

    let transpose_down = |g: &BiFrameHom| -> Result<FrithHom> {
        let nabla = sk.frame.nabla_hom();
        let map = (0..f.lattice().size())
            .map(|a| {
                inclusion
                    .map
                    .iter()
                    .position(|&c| c == g.hom.apply(nabla.apply(a)))
                    .ok_or_else(|| {
                        Error::Invariant("transposed image escapes the bicomplemented part".into())
                    })
            })
            .collect::<Result<Vec<usize>>>()?;
        let hom = LatticeHom::new(f.lattice().clone(), pair.lattice().clone(), map)?;
        FrithHom::new(f.clone(), pair.clone(), hom)
    };
    let transpose_up = |h: &FrithHom| -> Result<BiFrameHom> {
        let comp = h.hom.then(&inclusion)?;
        let (_, ext) = congruence::universal_extension(&comp, f.sub())?;
        BiFrameHom::new(sk.biframe.clone(), l.clone(), ext)
    };

    let mut bijection = bif_side.len() == frith_side.len();
    for g in &bif_side {
        let down = transpose_down(g)?;
        bijection &= frith_side.iter().any(|h| h.hom.map == down.hom.map);
        bijection &= transpose_up(&down)?.hom.map == g.hom.map;
    }
    for h in &frith_side {
        let up = transpose_up(h)?;
        bijection &= bif_side.iter().any(|g| g.hom.map == up.hom.map);
        bijection &= transpose_down(&up)?.hom.map == h.hom.map;
    }

    let unit = fsk_unit(f)?;
    // Left triangle: the counit at the Skula biframe absorbs the Skula
    // image of the unit; the composite is the identity congruence-wise.
    let t1 = skula_biframe_map(&unit)?.then(&fsk_counit(&sk.biframe)?)?.hom.map
        == (0..sk.biframe.main.size()).collect::<Vec<_>>();
    // Right triangle: the restricted counit absorbs the unit of the
    // bicomplemented part.
    let t2 = fsk_unit(&pair)?.then(&bbplus_map(&fsk_counit(l)?)?)?.hom.map
        == (0..pair.lattice().size()).collect::<Vec<_>>();

    Ok(FskAdjunctionReport {
        biframe_homs: bif_side.len(),
        frith_homs: frith_side.len(),
        bijection,
        triangles: t1 && t2,
        unit_iso: is_pair_iso(&unit),
        counit: fsk_counit_report(l)?,
        bicomplemented_lemma: nabla_bicomplemented_check(f)?,
    })
}

/// The biframe of a bispace: the patch topology with the two topologies as
/// its parts.
pub fn omega_b(x: &BiSpace) -> Result<BiFrame> {
    let patch = x.patch();
    let main = family_lattice(&patch, x.names())?;
    let locate = |fam: &SubsetFamily| {
        fam.members()
            .iter()
            .map(|&m| patch.index_of(m).expect("topologies embed in the patch"))
            .fold(0, |acc, i| acc | bits::bit(i))
    };
    BiFrame::new(main, locate(&x.pos), locate(&x.neg))
}

/// Opens action on maps: preimage on the patch topologies.
pub fn omega_b_map(g: &BiSpaceMap) -> Result<BiFrameHom> {
    let dom = omega_b(&g.cod)?;
    let cod = omega_b(&g.dom)?;
    let dom_patch = g.cod.patch();
    let cod_patch = g.dom.patch();
    let map = dom_patch
        .members()
        .iter()
        .map(|&m| cod_patch.index_of(g.preimage(m)).expect("preimages are patch opens"))
        .collect();
    BiFrameHom::new(dom, cod, LatticeHom::new(
        family_lattice(&dom_patch, g.cod.names())?,
        family_lattice(&cod_patch, g.dom.names())?,
        map,
    )?)
}

/// The spectrum bispace of a biframe: prime filters of the main frame with
/// the extents of each part as the two topologies.
pub fn pt_b(l: &BiFrame) -> Result<BiSpace> {
    let filters = l.main.prime_filters()?;
    let names = (0..filters.len()).map(|i| format!("q{i}")).collect();
    let extent_family = |part: Bits| {
        let members = bits::iter(part)
            .map(|a| {
                filters
                    .iter()
                    .enumerate()
                    .filter(|&(_, &q)| bits::has(q, a))
                    .fold(0, |acc, (i, _)| acc | bits::bit(i))
            })
            .collect();
        SubsetFamily::new(filters.len(), members).expect("extents form a family")
    };
    BiSpace::new(names, extent_family(l.pos), extent_family(l.neg))
}

/// Spectrum action on morphisms: preimage on prime filters.
pub fn pt_b_map(h: &BiFrameHom) -> Result<BiSpaceMap> {
    let dom_space = pt_b(&h.cod)?;
    let cod_space = pt_b(&h.dom)?;
    let dom_filters = h.cod.main.prime_filters()?;
    let cod_filters = h.dom.main.prime_filters()?;
    let map = dom_filters
        .iter()
        .map(|&q| {
            let pre = (0..h.dom.main.size())
                .filter(|&a| bits::has(q, h.hom.apply(a)))
                .fold(0, |acc, a| acc | bits::bit(a));
            cod_filters
                .iter()
                .position(|&p| p == pre)
                .expect("preimages of prime filters are prime")
        })
        .collect();
    BiSpaceMap::new(dom_space, cod_space, map)
}

/// The open-set square: the bicomplemented part of the biframe of a bispace
/// is isomorphic, as a pair, to the opens of its positive-clopen space.
/// Always true (asserted).
pub fn open_square_check(x: &BiSpace) -> Result<bool> {
    let (via_biframe, _) = bbplus(&omega_b(x)?)?;
    let via_pervin = omega_functor(&clplus(x)?)?;
    let iso = frith::find_pair_isomorphism(&via_biframe, &via_pervin).is_some();
    assert!(iso, "the open-set square commutes up to isomorphism");
    Ok(iso)
}

/// The spectra comparison at a pair: the bijection sending each point of
/// the carrier to its unique extension through the closed-congruence
/// embedding, from the Skula bispace of the spectrum to the spectrum
/// bispace of the Skula biframe.  Verified to be an isomorphism of
/// bispaces.
pub fn beta_natural_iso(f: &FrithPair) -> Result<BiSpaceMap> {
    let dom = skula_space(&pt_functor(f)?)?;
    let sk = skula_biframe(f)?;
    let cod = pt_b(&sk.biframe)?;
    let two = crate::catalog::c2();
    let base_filters = f.lattice().prime_filters()?;
    let frame_filters = sk.biframe.main.prime_filters()?;
    let map = base_filters
        .iter()
        .map(|&p| {
            let point = (0..f.lattice().size())
                .map(|a| usize::from(bits::has(p, a)))
                .collect();
            let p_hom = LatticeHom::new(f.lattice().clone(), two.clone(), point)
                .expect("a prime filter is a two-valued homomorphism");
            let (_, ext) = congruence::universal_extension(&p_hom, f.sub())
                .expect("two-valued extensions exist");
            let lifted = (0..sk.biframe.main.size())
                .filter(|&c| ext.apply(c) == 1)
                .fold(0, |acc, c| acc | bits::bit(c));
            frame_filters
                .iter()
                .position(|&q| q == lifted)
                .expect("the lifted point is a prime filter")
        })
        .collect();
    let beta = BiSpaceMap::new(dom, cod, map)?;
    assert!(beta.is_iso(), "the spectra comparison is an isomorphism of bispaces");
    Ok(beta)
}

/// Naturality of the spectra comparison over a morphism of pairs: the
/// square formed by the two comparisons and the two functorial images of
/// the morphism commutes pointwise.
pub fn beta_naturality_check(h: &FrithHom) -> Result<bool> {
    let beta_dom = beta_natural_iso(&h.cod)?;
    let beta_cod = beta_natural_iso(&h.dom)?;
    let spectra = skula_space_map(&frith::pt_map(h)?)?;
    let frames = pt_b_map(&skula_biframe_map(h)?)?;
    let left = spectra.then(&beta_cod)?;
    let right = beta_dom.then(&frames)?;
    Ok(left.map == right.map)
}

/// The two spectra composites at a biframe: the spectrum of the
/// bicomplemented part against the positive-clopen space of the spectrum
/// bispace.  They need not be isomorphic.
#[derive(Debug, Clone, Serialize)]
pub struct SpectraSquareReport {
    pub points_via_bicomplemented: usize,
    pub points_via_clopens: usize,
    pub isomorphic: bool,
}

pub fn spectra_square_check(l: &BiFrame) -> Result<SpectraSquareReport> {
    let (pair, _) = bbplus(l)?;
    let via_bb = pt_functor(&pair)?;
    let via_cl = clplus(&pt_b(l)?)?;
    Ok(SpectraSquareReport {
        points_via_bicomplemented: via_bb.points(),
        points_via_clopens: via_cl.points(),
        isomorphic: pervin::find_pervin_isomorphism(&via_bb, &via_cl).is_some(),
    })
}

/// A topological space as the bispace carrying its topology twice.
pub fn embed_bispace(t: &PervinSpace) -> Result<BiSpace> {
    let tau = t.omega_topology();
    BiSpace::new(t.names().to_vec(), tau.clone(), tau)
}

/// A frame as the biframe carrying itself twice.
pub fn embed_biframe(l: &FinLattice) -> Result<BiFrame> {
    BiFrame::new(l.clone(), l.all(), l.all())
}

/// The clopen algebra of a topological space, as a Pervin space.
pub fn clopen_space(t: &PervinSpace) -> Result<PervinSpace> {
    let out = clplus(&embed_bispace(t)?)?;
    assert!(
        out.family().is_boolean_family(),
        "clopen families are Boolean"
    );
    Ok(out)
}

/// The complemented-element pair of a frame.
pub fn complemented_pair(l: &FinLattice) -> Result<FrithPair> {
    let (pair, inclusion) = bbplus(&embed_biframe(l)?)?;
    debug_assert_eq!(
        inclusion.image_of(pair.lattice().all()),
        l.complemented_elements()
    );
    Ok(pair)
}

/// Membership in the monotopological subcategory on the space side: the
/// two Skula topologies coincide.
pub fn is_mono_pervin(p: &PervinSpace) -> Result<bool> {
    let sk = skula_space(p)?;
    Ok(sk.pos() == sk.neg())
}

/// Membership in the monotopological subcategory on the frame side: the
/// closed image and the designated-open part of the Skula biframe coincide.
pub fn is_mono_frith(f: &FrithPair) -> Result<bool> {
    let sk = skula_biframe(f)?;
    Ok(sk.biframe.pos() == sk.biframe.neg())
}

/// Zero-dimensionality of a finite frame through three lenses that must
/// agree: join-generation by complemented elements, being Boolean, and the
/// counit of the biframe embedding being an isomorphism.
#[derive(Debug, Clone, Serialize)]
pub struct ZeroDimFrameReport {
    pub zero_dimensional: bool,
    pub boolean: bool,
    pub counit_iso: bool,
}

pub fn zero_dim_frame_check(l: &FinLattice) -> Result<ZeroDimFrameReport> {
    let embedded = embed_biframe(l)?;
    let zero_dimensional = embedded.is_zero_dimensional();
    let boolean = l.is_boolean();
    let counit_iso = fsk_counit_report(&embedded)?.iso;
    assert_eq!(
        zero_dimensional, boolean,
        "finite zero-dimensional frames are Boolean"
    );
    assert_eq!(zero_dimensional, counit_iso);
    Ok(ZeroDimFrameReport {
        zero_dimensional,
        boolean,
        counit_iso,
    })
}

/// Zero-dimensionality of a finite topological space: the topology is
/// generated by its clopens exactly when the doubled bispace is
/// zero-dimensional, and the clopen Pervin space is always symmetric and
/// strongly exact.
#[derive(Debug, Clone, Serialize)]
pub struct ZeroDimSpaceReport {
    pub zero_dimensional: bool,
    pub clopens_generate: bool,
    pub fixpoint_symmetric: bool,
}

pub fn zero_dim_space_check(t: &PervinSpace) -> Result<ZeroDimSpaceReport> {
    let embedded = embed_bispace(t)?;
    let zero_dimensional = embedded.is_zero_dimensional();
    let clopens = clopen_space(t)?;
    let clopens_generate = clopens.omega_topology().lattice_closure() == t.omega_topology();
    assert_eq!(zero_dimensional, clopens_generate);
    let fixpoint_symmetric = clopens.is_symmetric() && clopens.is_strongly_exact();
    assert!(fixpoint_symmetric, "clopen fixpoints are symmetric and strongly exact");
    Ok(ZeroDimSpaceReport {
        zero_dimensional,
        clopens_generate,
        fixpoint_symmetric,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn patch_and_clopens_of_skula_spaces() {
        let sk = skula_space(&catalog::sier()).unwrap();
        assert_eq!(sk.pos().len(), 3);
        assert_eq!(sk.neg().len(), 3);
        assert_eq!(sk.patch().len(), 4);
        assert_eq!(sk.pos_clopens().len(), 3);
        assert!(sk.is_zero_dimensional());
        assert!(sk.is_compact());
        assert!(sk.is_t0());

        let disc = embed_bispace(&catalog::disc2()).unwrap();
        assert_eq!(disc.pos_clopens().len(), 4);
        assert!(disc.is_zero_dimensional());
    }

    #[test]
    fn sierpinski_bispace_is_not_zero_dimensional() {
        let x = catalog::sier_bispace();
        assert_eq!(x.pos_clopens().len(), 2);
        assert!(!x.is_zero_dimensional());
        assert!(x.is_t0());
        let cl = clplus(&x).unwrap();
        assert_eq!(cl.family().len(), 2);
        assert!(pervin::find_pervin_isomorphism(&cl, &catalog::indisc()).is_some());
    }

    #[test]
    fn biframe_validation_rejects_non_generating_parts() {
        let bounds = bits::from_indices(&[0, 2]);
        assert!(BiFrame::new(catalog::c3(), bounds, bounds).is_err());
        assert!(BiFrame::new(catalog::c3(), bits::full(3), bounds).is_ok());
        assert!(matches!(
            BiFrame::new(catalog::m3(), bits::full(5), bits::full(5)),
            Err(Error::NotDistributive(..))
        ));
    }

    #[test]
    fn skula_adjunction_on_catalog_instances() {
        for x in [
            catalog::sier_bispace(),
            skula_space(&catalog::sier()).unwrap(),
            embed_bispace(&catalog::indisc()).unwrap(),
        ] {
            for p in [catalog::sier(), catalog::indisc(), catalog::disc2()] {
                let rep = skula_adjunction_check(&x, &p).unwrap();
                assert!(rep.pass(), "failed on {rep:?}");
            }
        }
        // The Sierpinski bispace is not a unit fixpoint; Skula images are.
        assert!(!skula_unit(&catalog::sier_bispace()).unwrap().is_iso());
        assert!(skula_unit(&skula_space(&catalog::sier()).unwrap()).unwrap().is_iso());
    }

    #[test]
    fn skula_biframe_of_the_chain() {
        let sk = skula_biframe(&FrithPair::full(catalog::c3()).unwrap()).unwrap();
        assert_eq!(sk.biframe.main().size(), 4);
        assert_eq!(bits::count(sk.biframe.pos()), 3);
        assert_eq!(bits::count(sk.biframe.neg()), 3);
        assert_eq!(bits::count(sk.biframe.bicomplemented_pos()), 3);
        assert!(sk.biframe.is_zero_dimensional());
        assert!(sk.biframe.is_compact());
    }

    #[test]
    fn bicomplemented_congruences_name_strongly_exact_meets() {
        assert!(nabla_bicomplemented_check(&FrithPair::full(catalog::c3()).unwrap()).unwrap());
        assert!(nabla_bicomplemented_check(&FrithPair::full(catalog::b4()).unwrap()).unwrap());
        // On the chain with only its bounds designated, the middle closed
        // congruence has no complement in the designated-open part.
        let pre = FrithPair::new(catalog::c3(), bits::from_indices(&[0, 2])).unwrap();
        let sk = skula_biframe(&pre).unwrap();
        assert_eq!(sk.biframe.main().size(), 3);
        assert_eq!(bits::count(sk.biframe.bicomplemented_pos()), 2);
        assert!(nabla_bicomplemented_check(&pre).unwrap());
        assert!(!sk.biframe.is_zero_dimensional());
    }

    #[test]
    fn bicomplemented_part_of_the_mixed_chain_biframe() {
        let (pair, _) = bbplus(&catalog::biframe_332()).unwrap();
        assert_eq!(pair.lattice().size(), 2);
        assert!(pair.is_frith());
        let rep = fsk_counit_report(&catalog::biframe_332()).unwrap();
        assert!(rep.dense && !rep.zero_dimensional && !rep.iso);
    }

    #[test]
    fn fsk_adjunction_on_catalog_instances() {
        for f in [
            FrithPair::full(catalog::c2()).unwrap(),
            FrithPair::full(catalog::c3()).unwrap(),
            FrithPair::full(catalog::b4()).unwrap(),
        ] {
            for l in [
                catalog::biframe_332(),
                embed_biframe(&catalog::b4()).unwrap(),
                skula_biframe(&FrithPair::full(catalog::c3()).unwrap())
                    .unwrap()
                    .biframe,
            ] {
                let rep = fsk_adjunction_check(&f, &l).unwrap();
                assert!(rep.pass(), "failed on {rep:?}");
            }
        }
    }

    #[test]
    fn round_trip_through_the_skula_biframe() {
        // The unit exhibits each fully-designated pair as the
        // bicomplemented part of its own Skula biframe.
        for l in [catalog::c2(), catalog::c3(), catalog::b4()] {
            let f = FrithPair::full(l).unwrap();
            let unit = fsk_unit(&f).unwrap();
            assert!(is_pair_iso(&unit));
        }
    }

    #[test]
    fn open_square_commutes_on_catalog_bispaces() {
        for x in [
            catalog::sier_bispace(),
            skula_space(&catalog::sier()).unwrap(),
            embed_bispace(&catalog::disc2()).unwrap(),
        ] {
            assert!(open_square_check(&x).unwrap());
        }
    }

    #[test]
    fn beta_is_a_natural_isomorphism() {
        for f in [
            FrithPair::full(catalog::c2()).unwrap(),
            FrithPair::full(catalog::c3()).unwrap(),
            FrithPair::full(catalog::b4()).unwrap(),
        ] {
            assert!(beta_natural_iso(&f).unwrap().is_iso());
        }
        let c3 = FrithPair::full(catalog::c3()).unwrap();
        let b4 = FrithPair::full(catalog::b4()).unwrap();
        for h in frith_homs(&c3, &b4).unwrap() {
            assert!(beta_naturality_check(&h).unwrap());
        }
        for h in frith_homs(&b4, &c3).unwrap() {
            assert!(beta_naturality_check(&h).unwrap());
        }
    }

    #[test]
    fn spectra_square_fails_on_the_mixed_chain_biframe() {
        let rep = spectra_square_check(&catalog::biframe_332()).unwrap();
        assert_eq!(rep.points_via_bicomplemented, 1);
        assert_eq!(rep.points_via_clopens, 2);
        assert!(!rep.isomorphic);

        // On Skula biframes of fully-designated pairs the square does
        // commute.
        let sk = skula_biframe(&FrithPair::full(catalog::c3()).unwrap()).unwrap();
        assert!(spectra_square_check(&sk.biframe).unwrap().isomorphic);
    }

    #[test]
    fn monotopological_memberships() {
        assert!(!is_mono_pervin(&catalog::sier()).unwrap());
        assert!(is_mono_pervin(&catalog::disc2()).unwrap());
        assert!(is_mono_pervin(&catalog::indisc()).unwrap());
        assert!(!is_mono_frith(&FrithPair::full(catalog::c3()).unwrap()).unwrap());
        assert!(is_mono_frith(&FrithPair::full(catalog::b4()).unwrap()).unwrap());
    }

    #[test]
    fn clopen_algebras_and_complemented_pairs() {
        let cl = clopen_space(&catalog::sier()).unwrap();
        assert_eq!(cl.family().len(), 2);
        let pair = complemented_pair(&catalog::b4()).unwrap();
        assert_eq!(pair.lattice().size(), 4);
        assert!(pair.is_frith());
        let pair = complemented_pair(&catalog::c3()).unwrap();
        assert_eq!(pair.lattice().size(), 2);
    }

    #[test]
    fn zero_dimensionality_reports() {
        let rep = zero_dim_frame_check(&catalog::b4()).unwrap();
        assert!(rep.zero_dimensional && rep.boolean && rep.counit_iso);
        let rep = zero_dim_frame_check(&catalog::c3()).unwrap();
        assert!(!rep.zero_dimensional && !rep.boolean && !rep.counit_iso);

        let rep = zero_dim_space_check(&catalog::disc2()).unwrap();
        assert!(rep.zero_dimensional && rep.clopens_generate && rep.fixpoint_symmetric);
        let rep = zero_dim_space_check(&catalog::sier()).unwrap();
        assert!(!rep.zero_dimensional && !rep.clopens_generate);
    }
}

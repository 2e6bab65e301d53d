//! A single law engine for every adjunction in the summary diagram.
//!
//! Functors are handed to the verifier as object/morphism closures over a
//! small sum type of the five concrete categories; the engine then checks
//! functor laws (identities and composition), naturality of the two
//! comparison transformations, and both triangle identities over explicit
//! instance and morphism families.  Dual (contravariant) adjunctions supply
//! two units instead of a unit/counit pair and get the matching triangle
//! shapes.

use crate::bitop::{self, BiFrame, BiFrameHom, BiSpace, BiSpaceMap};
use crate::bits::{self, Bits};
use crate::catalog;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::family::family_lattice;
use crate::frith::{self, FrithHom, FrithPair};
use crate::lattice::{enumerate_homs, ideal_lattice, FinLattice, LatticeHom};
use crate::pervin::{self, PervinMap, PervinSpace};
use crate::report::LawReport;

/// An object of one of the five concrete categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obj {
    Lattice(FinLattice),
    Pervin(PervinSpace),
    Frith(FrithPair),
    Bispace(BiSpace),
    Biframe(BiFrame),
}

impl Obj {
    /// Short identifier used in witnesses.
    pub fn label(&self) -> String {
        match self {
            Obj::Lattice(l) => format!("lattice[{}]", l.size()),
            Obj::Pervin(p) => format!("pervin[{}pts,{}sets]", p.points(), p.family().len()),
            Obj::Frith(f) => {
                format!("frith[{},{}]", f.lattice().size(), bits::count(f.sub()))
            }
            Obj::Bispace(x) => format!(
                "bispace[{}pts,{}+{}]",
                x.points(),
                x.pos().len(),
                x.neg().len()
            ),
            Obj::Biframe(l) => format!(
                "biframe[{},{}+{}]",
                l.main().size(),
                bits::count(l.pos()),
                bits::count(l.neg())
            ),
        }
    }
}

/// A morphism of one of the five concrete categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mor {
    Lattice(LatticeHom),
    Pervin(PervinMap),
    Frith(FrithHom),
    Bispace(BiSpaceMap),
    Biframe(BiFrameHom),
}

impl Mor {
    pub fn dom(&self) -> Obj {
        match self {
            Mor::Lattice(h) => Obj::Lattice(h.dom.clone()),
            Mor::Pervin(f) => Obj::Pervin(f.dom.clone()),
            Mor::Frith(h) => Obj::Frith(h.dom.clone()),
            Mor::Bispace(f) => Obj::Bispace(f.dom.clone()),
            Mor::Biframe(h) => Obj::Biframe(h.dom.clone()),
        }
    }

    pub fn cod(&self) -> Obj {
        match self {
            Mor::Lattice(h) => Obj::Lattice(h.cod.clone()),
            Mor::Pervin(f) => Obj::Pervin(f.cod.clone()),
            Mor::Frith(h) => Obj::Frith(h.cod.clone()),
            Mor::Bispace(f) => Obj::Bispace(f.cod.clone()),
            Mor::Biframe(h) => Obj::Biframe(h.cod.clone()),
        }
    }

    /// Diagrammatic composition: `self` first, then `g`.
    pub fn then(&self, g: &Mor) -> Result<Mor> {
        match (self, g) {
            (Mor::Lattice(a), Mor::Lattice(b)) => Ok(Mor::Lattice(a.then(b)?)),
            (Mor::Pervin(a), Mor::Pervin(b)) => Ok(Mor::Pervin(a.then(b)?)),
            (Mor::Frith(a), Mor::Frith(b)) => Ok(Mor::Frith(a.then(b)?)),
            (Mor::Bispace(a), Mor::Bispace(b)) => Ok(Mor::Bispace(a.then(b)?)),
            (Mor::Biframe(a), Mor::Biframe(b)) => Ok(Mor::Biframe(a.then(b)?)),
            _ => Err(Error::Invariant("morphisms live in different categories".into())),
        }
    }

    /// The underlying assignment, for witnesses.
    pub fn assignment(&self) -> &[usize] {
        match self {
            Mor::Lattice(h) => &h.map,
            Mor::Pervin(f) => &f.map,
            Mor::Frith(h) => &h.hom.map,
            Mor::Bispace(f) => &f.map,
            Mor::Biframe(h) => &h.hom.map,
        }
    }
}

/// The identity morphism of an object.
pub fn identity_mor(o: &Obj) -> Result<Mor> {
    Ok(match o {
        Obj::Lattice(l) => Mor::Lattice(LatticeHom::identity(l)),
        Obj::Pervin(p) => Mor::Pervin(PervinMap::identity(p)),
        Obj::Frith(f) => Mor::Frith(FrithHom::identity(f)),
        Obj::Bispace(x) => Mor::Bispace(BiSpaceMap::identity(x)),
        Obj::Biframe(l) => Mor::Biframe(BiFrameHom::new(
            l.clone(),
            l.clone(),
            LatticeHom::identity(l.main()),
        )?),
    })
}

fn as_lattice(o: &Obj) -> Result<&FinLattice> {
    match o {
        Obj::Lattice(l) => Ok(l),
        _ => Err(Error::Invariant(format!("expected a lattice, got {}", o.label()))),
    }
}

fn as_pervin(o: &Obj) -> Result<&PervinSpace> {
    match o {
        Obj::Pervin(p) => Ok(p),
        _ => Err(Error::Invariant(format!("expected a Pervin space, got {}", o.label()))),
    }
}

fn as_frith(o: &Obj) -> Result<&FrithPair> {
    match o {
        Obj::Frith(f) => Ok(f),
        _ => Err(Error::Invariant(format!("expected a pair, got {}", o.label()))),
    }
}

fn as_bispace(o: &Obj) -> Result<&BiSpace> {
    match o {
        Obj::Bispace(x) => Ok(x),
        _ => Err(Error::Invariant(format!("expected a bispace, got {}", o.label()))),
    }
}

fn as_biframe(o: &Obj) -> Result<&BiFrame> {
    match o {
        Obj::Biframe(l) => Ok(l),
        _ => Err(Error::Invariant(format!("expected a biframe, got {}", o.label()))),
    }
}

fn as_lattice_mor(m: &Mor) -> Result<&LatticeHom> {
    match m {
        Mor::Lattice(h) => Ok(h),
        _ => Err(Error::Invariant("expected a lattice homomorphism".into())),
    }
}

fn as_pervin_mor(m: &Mor) -> Result<&PervinMap> {
    match m {
        Mor::Pervin(f) => Ok(f),
        _ => Err(Error::Invariant("expected a Pervin map".into())),
    }
}

fn as_frith_mor(m: &Mor) -> Result<&FrithHom> {
    match m {
        Mor::Frith(h) => Ok(h),
        _ => Err(Error::Invariant("expected a pair morphism".into())),
    }
}

fn as_bispace_mor(m: &Mor) -> Result<&BiSpaceMap> {
    match m {
        Mor::Bispace(f) => Ok(f),
        _ => Err(Error::Invariant("expected a bispace map".into())),
    }
}

fn as_biframe_mor(m: &Mor) -> Result<&BiFrameHom> {
    match m {
        Mor::Biframe(h) => Ok(h),
        _ => Err(Error::Invariant("expected a biframe morphism".into())),
    }
}

type ObjAction = Box<dyn Fn(&Obj) -> Result<Obj> + Sync>;
type MorAction = Box<dyn Fn(&Mor) -> Result<Mor> + Sync>;
type Assignment = Box<dyn Fn(&Obj) -> Result<Mor> + Sync>;

/// A functor as object/morphism closures.
pub struct FunctorHandle {
    pub name: String,
    pub contravariant: bool,
    pub on_obj: ObjAction,
    pub on_mor: MorAction,
}

impl FunctorHandle {
    fn apply(&self, m: &Mor) -> Result<Mor> {
        (self.on_mor)(m)
    }
}

/// An adjunction as two functors and two comparison assignments.
///
/// Covariant: `unit(a): a -> R(L(a))` and `counit(b): L(R(b)) -> b`.  Dual
/// (both functors contravariant): `unit(a): a -> R(L(a))` and
/// `counit(b): b -> L(R(b))` — two units, with the triangle shapes adjusted
/// accordingly.
pub struct AdjunctionSpec {
    pub name: String,
    pub dual: bool,
    pub left: FunctorHandle,
    pub right: FunctorHandle,
    pub unit: Assignment,
    pub counit: Assignment,
}

/// An adjunction together with the instance families to verify it on.
pub struct AdjunctionFamily {
    pub spec: AdjunctionSpec,
    pub dom_objects: Vec<Obj>,
    pub dom_morphisms: Vec<Mor>,
    pub cod_objects: Vec<Obj>,
    pub cod_morphisms: Vec<Mor>,
}

fn check_functor(
    rep: &mut LawReport,
    f: &FunctorHandle,
    objects: &[Obj],
    morphisms: &[Mor],
) -> Result<()> {
    for o in objects {
        let lhs = f.apply(&identity_mor(o)?)?;
        let rhs = identity_mor(&(f.on_obj)(o)?)?;
        rep.require(lhs == rhs, || {
            format!("{} does not preserve the identity of {}", f.name, o.label())
        });
    }
    for a in morphisms {
        for b in morphisms {
            if a.cod() != b.dom() {
                continue;
            }
            let lhs = f.apply(&a.then(b)?)?;
            let rhs = if f.contravariant {
                f.apply(b)?.then(&f.apply(a)?)?
            } else {
                f.apply(a)?.then(&f.apply(b)?)?
            };
            rep.require(lhs == rhs, || {
                format!(
                    "{} does not preserve composition at {} -> {} -> {}",
                    f.name,
                    a.dom().label(),
                    a.cod().label(),
                    b.cod().label()
                )
            });
        }
    }
    Ok(())
}

/// Run every law of an adjunction over its instance families.
pub fn verify(family: &AdjunctionFamily) -> Result<LawReport> {
    let spec = &family.spec;
    let mut rep = LawReport::new(format!("adjunction:{}", spec.name));

    check_functor(&mut rep, &spec.left, &family.dom_objects, &family.dom_morphisms)?;
    check_functor(&mut rep, &spec.right, &family.cod_objects, &family.cod_morphisms)?;

    // Naturality of the unit: for f: a -> a', going around through the
    // composite endofunctor matches going straight.
    for f in &family.dom_morphisms {
        let through = (spec.unit)(&f.dom())?.then(&spec.right.apply(&spec.left.apply(f)?)?)?;
        let straight = f.then(&(spec.unit)(&f.cod())?)?;
        rep.require(through == straight, || {
            format!(
                "unit not natural at {} -> {}",
                f.dom().label(),
                f.cod().label()
            )
        });
    }

    // Naturality of the second comparison.
    for g in &family.cod_morphisms {
        let (through, straight) = if spec.dual {
            (
                (spec.counit)(&g.dom())?.then(&spec.left.apply(&spec.right.apply(g)?)?)?,
                g.then(&(spec.counit)(&g.cod())?)?,
            )
        } else {
            (
                (spec.counit)(&g.dom())?.then(g)?,
                spec.left.apply(&spec.right.apply(g)?)?.then(&(spec.counit)(&g.cod())?)?,
            )
        };
        rep.require(through == straight, || {
            format!(
                "counit not natural at {} -> {}",
                g.dom().label(),
                g.cod().label()
            )
        });
    }

    // Triangle identities.
    for a in &family.dom_objects {
        rep.instance(format!("{}:{}", spec.name, a.label()));
        let la = (spec.left.on_obj)(a)?;
        let composite = if spec.dual {
            (spec.counit)(&la)?.then(&spec.left.apply(&(spec.unit)(a)?)?)?
        } else {
            spec.left.apply(&(spec.unit)(a)?)?.then(&(spec.counit)(&la)?)?
        };
        rep.require(composite == identity_mor(&la)?, || {
            format!(
                "left triangle fails at {} (composite {:?})",
                a.label(),
                composite.assignment()
            )
        });
    }
    for b in &family.cod_objects {
        rep.instance(format!("{}:{}", spec.name, b.label()));
        let rb = (spec.right.on_obj)(b)?;
        let composite = (spec.unit)(&rb)?.then(&spec.right.apply(&(spec.counit)(b)?)?)?;
        rep.require(composite == identity_mor(&rb)?, || {
            format!(
                "right triangle fails at {} (composite {:?})",
                b.label(),
                composite.assignment()
            )
        });
    }
    Ok(rep)
}

fn pervin_mors(core: &[PervinSpace]) -> Vec<Mor> {
    let mut out = Vec::new();
    for d in core {
        for c in core {
            out.extend(pervin::pervin_maps(d, c).into_iter().map(Mor::Pervin));
        }
    }
    out
}

fn frith_mors(core: &[FrithPair]) -> Result<Vec<Mor>> {
    let mut out = Vec::new();
    for d in core {
        for c in core {
            out.extend(frith::frith_homs(d, c)?.into_iter().map(Mor::Frith));
        }
    }
    Ok(out)
}

fn lattice_mors(core: &[FinLattice]) -> Result<Vec<Mor>> {
    let mut out = Vec::new();
    for d in core {
        for c in core {
            out.extend(
                enumerate_homs(d, c)?
                    .into_iter()
                    .map(|hom| Mor::Lattice(hom)),
            );
        }
    }
    Ok(out)
}

fn bispace_mors(core: &[BiSpace]) -> Vec<Mor> {
    let mut out = Vec::new();
    for d in core {
        for c in core {
            out.extend(bitop::bispace_maps(d, c).into_iter().map(Mor::Bispace));
        }
    }
    out
}

fn biframe_mors(core: &[BiFrame]) -> Result<Vec<Mor>> {
    let mut out = Vec::new();
    for d in core {
        for c in core {
            out.extend(bitop::biframe_homs(d, c)?.into_iter().map(Mor::Biframe));
        }
    }
    Ok(out)
}

fn pervin_core(max_points: usize) -> Vec<PervinSpace> {
    [catalog::sier(), catalog::indisc(), catalog::disc2(), catalog::p3()]
        .into_iter()
        .filter(|p| p.points() <= max_points)
        .collect()
}

fn lattice_core(max_size: usize) -> Vec<FinLattice> {
    [catalog::c2(), catalog::c3(), catalog::b4()]
        .into_iter()
        .filter(|l| l.size() <= max_size)
        .collect()
}

fn full_pair_core(max_size: usize) -> Vec<FrithPair> {
    lattice_core(max_size)
        .into_iter()
        .map(|l| FrithPair::full(l).expect("catalog lattices are distributive"))
        .collect()
}

/// The dual adjunction between spaces and pairs through opens and spectra.
pub fn omega_pt_family(
    max_points: usize,
    max_family: usize,
    max_lattice: usize,
) -> Result<AdjunctionFamily> {
    let spec = AdjunctionSpec {
        name: "omega-pt".into(),
        dual: true,
        left: FunctorHandle {
            name: "omega".into(),
            contravariant: true,
            on_obj: Box::new(|o| Ok(Obj::Frith(frith::omega_functor(as_pervin(o)?)?))),
            on_mor: Box::new(|m| Ok(Mor::Frith(frith::omega_map(as_pervin_mor(m)?)?))),
        },
        right: FunctorHandle {
            name: "pt".into(),
            contravariant: true,
            on_obj: Box::new(|o| Ok(Obj::Pervin(frith::pt_functor(as_frith(o)?)?))),
            on_mor: Box::new(|m| Ok(Mor::Pervin(frith::pt_map(as_frith_mor(m)?)?))),
        },
        unit: Box::new(|o| Ok(Mor::Pervin(frith::spectrum_unit(as_pervin(o)?)?))),
        counit: Box::new(|o| Ok(Mor::Frith(frith::spectrum_counit(as_frith(o)?)?))),
    };
    Ok(AdjunctionFamily {
        spec,
        dom_objects: enumerate::pervin_spaces(max_points, max_family)
            .into_iter()
            .map(Obj::Pervin)
            .collect(),
        dom_morphisms: pervin_mors(&pervin_core(max_points)),
        cod_objects: enumerate::frith_pairs(max_lattice).into_iter().map(Obj::Frith).collect(),
        cod_morphisms: frith_mors(&full_pair_core(max_lattice))?,
    })
}

/// The inclusion of symmetric Pervin spaces with symmetrization as its
/// right adjoint.
pub fn psym_family(max_points: usize, max_family: usize) -> Result<AdjunctionFamily> {
    let symmetric_core: Vec<PervinSpace> = pervin_core(max_points)
        .into_iter()
        .filter(|p| p.is_symmetric())
        .collect();
    let spec = AdjunctionSpec {
        name: "psym".into(),
        dual: false,
        left: FunctorHandle {
            name: "include-symmetric".into(),
            contravariant: false,
            on_obj: Box::new(|o| {
                let p = as_pervin(o)?;
                if !p.is_symmetric() {
                    return Err(Error::Invariant("object is not symmetric".into()));
                }
                Ok(o.clone())
            }),
            on_mor: Box::new(|m| Ok(m.clone())),
        },
        right: FunctorHandle {
            name: "psym".into(),
            contravariant: false,
            on_obj: Box::new(|o| Ok(Obj::Pervin(as_pervin(o)?.symmetrize()))),
            on_mor: Box::new(|m| Ok(Mor::Pervin(as_pervin_mor(m)?.symmetrize()))),
        },
        unit: Box::new(|o| {
            let p = as_pervin(o)?;
            let map = (0..p.points()).collect();
            Ok(Mor::Pervin(PervinMap::new(p.clone(), p.symmetrize(), map)?))
        }),
        counit: Box::new(|o| {
            let p = as_pervin(o)?;
            let map = (0..p.points()).collect();
            Ok(Mor::Pervin(PervinMap::new(p.symmetrize(), p.clone(), map)?))
        }),
    };
    Ok(AdjunctionFamily {
        spec,
        dom_objects: enumerate::pervin_spaces(max_points, max_family)
            .into_iter()
            .filter(|p| p.is_symmetric())
            .map(Obj::Pervin)
            .collect(),
        dom_morphisms: pervin_mors(&symmetric_core),
        cod_objects: enumerate::pervin_spaces(max_points, max_family)
            .into_iter()
            .map(Obj::Pervin)
            .collect(),
        cod_morphisms: pervin_mors(&pervin_core(max_points)),
    })
}

/// Symmetrization of pairs as a left adjoint to the inclusion of
/// Boolean-designated pairs.
///
/// The left triangle evaluates the counit at the symmetrization image, so
/// each instance is effectively symmetrized twice; a carrier of size n can
/// blow up to 2^(n-1) congruences before the second pass.  The domain
/// family is therefore capped at carriers of size 5 (images up to 16
/// elements); the codomain side only symmetrizes once and keeps the full
/// bound.
pub fn fsym_family(max_lattice: usize) -> Result<AdjunctionFamily> {
    let all_pairs = enumerate::frith_prepairs(max_lattice.min(5));
    let symmetric: Vec<FrithPair> = enumerate::frith_prepairs(max_lattice)
        .into_iter()
        .filter(|f| f.is_symmetric())
        .collect();
    let dom_core: Vec<FrithPair> = full_pair_core(max_lattice.min(4));
    let cod_core: Vec<FrithPair> = dom_core.iter().filter(|f| f.is_symmetric()).cloned().collect();
    let spec = AdjunctionSpec {
        name: "fsym".into(),
        dual: false,
        left: FunctorHandle {
            name: "fsym".into(),
            contravariant: false,
            on_obj: Box::new(|o| Ok(Obj::Frith(frith::fsym(as_frith(o)?)?.pair))),
            on_mor: Box::new(|m| Ok(Mor::Frith(frith::fsym_map(as_frith_mor(m)?)?))),
        },
        right: FunctorHandle {
            name: "include-symmetric".into(),
            contravariant: false,
            on_obj: Box::new(|o| {
                let f = as_frith(o)?;
                if !f.is_symmetric() {
                    return Err(Error::Invariant("pair is not symmetric".into()));
                }
                Ok(o.clone())
            }),
            on_mor: Box::new(|m| Ok(m.clone())),
        },
        unit: Box::new(|o| Ok(Mor::Frith(frith::fsym(as_frith(o)?)?.unit))),
        counit: Box::new(|o| {
            let f = as_frith(o)?;
            let sym = frith::fsym(f)?;
            let inv = sym.unit.hom.inverse()?;
            Ok(Mor::Frith(FrithHom::new(sym.pair, f.clone(), inv)?))
        }),
    };
    Ok(AdjunctionFamily {
        spec,
        dom_objects: all_pairs.into_iter().map(Obj::Frith).collect(),
        dom_morphisms: frith_mors(&dom_core)?,
        cod_objects: symmetric.into_iter().map(Obj::Frith).collect(),
        cod_morphisms: frith_mors(&cod_core)?,
    })
}

/// The dual adjunction between spaces and distributive lattices through
/// designated families and prime-filter spectra.
pub fn lperv_pff_family(
    max_points: usize,
    max_family: usize,
    max_lattice: usize,
) -> Result<AdjunctionFamily> {
    let spec = AdjunctionSpec {
        name: "lperv-pff".into(),
        dual: true,
        left: FunctorHandle {
            name: "lperv".into(),
            contravariant: true,
            on_obj: Box::new(|o| {
                let p = as_pervin(o)?;
                Ok(Obj::Lattice(family_lattice(p.family(), p.names())?))
            }),
            on_mor: Box::new(|m| Ok(Mor::Lattice(as_pervin_mor(m)?.preimage_hom()?))),
        },
        right: FunctorHandle {
            name: "pff".into(),
            contravariant: true,
            on_obj: Box::new(|o| Ok(Obj::Pervin(pervin::pf_space(as_lattice(o)?)?))),
            on_mor: Box::new(|m| Ok(Mor::Pervin(pervin::pf_map(as_lattice_mor(m)?)?))),
        },
        unit: Box::new(|o| Ok(Mor::Pervin(pervin::neighborhood_map(as_pervin(o)?)?))),
        counit: Box::new(|o| {
            let d = as_lattice(o)?;
            let space = pervin::pf_space(d)?;
            let lat = family_lattice(space.family(), space.names())?;
            let filters = d.prime_filters()?;
            let map = (0..d.size())
                .map(|a| {
                    let extent = filters
                        .iter()
                        .enumerate()
                        .filter(|&(_, &q)| bits::has(q, a))
                        .fold(0 as Bits, |acc, (i, _)| acc | bits::bit(i));
                    space
                        .family()
                        .index_of(extent)
                        .ok_or_else(|| Error::Invariant("extent escapes the spectrum".into()))
                })
                .collect::<Result<Vec<usize>>>()?;
            Ok(Mor::Lattice(LatticeHom::new(d.clone(), lat, map)?))
        }),
    };
    Ok(AdjunctionFamily {
        spec,
        dom_objects: enumerate::pervin_spaces(max_points, max_family)
            .into_iter()
            .map(Obj::Pervin)
            .collect(),
        dom_morphisms: pervin_mors(&pervin_core(max_points)),
        cod_objects: enumerate::distributive_lattices_upto(max_lattice)
            .into_iter()
            .map(Obj::Lattice)
            .collect(),
        cod_morphisms: lattice_mors(&lattice_core(max_lattice))?,
    })
}

fn idlf_obj(d: &FinLattice) -> Result<FrithPair> {
    let il = ideal_lattice(d)?;
    FrithPair::new(il.lattice.clone(), il.principal.image_of(d.all()))
}

fn idlf_mor(h: &LatticeHom) -> Result<FrithHom> {
    let dom_il = ideal_lattice(&h.dom)?;
    let cod_il = ideal_lattice(&h.cod)?;
    let map = dom_il
        .ideals
        .iter()
        .map(|&ideal| {
            let peak = h.cod.join_set(h.image_of(ideal));
            let target = h.cod.poset().down_set(peak);
            cod_il
                .ideals
                .iter()
                .position(|&j| j == target)
                .expect("principal down-sets are ideals")
        })
        .collect();
    let hom = LatticeHom::new(dom_il.lattice.clone(), cod_il.lattice.clone(), map)?;
    FrithHom::new(idlf_obj(&h.dom)?, idlf_obj(&h.cod)?, hom)
}

/// Ideal completion of a lattice as a left adjoint to taking the designated
/// part of a pair.
pub fn idlf_lfrith_family(max_lattice: usize) -> Result<AdjunctionFamily> {
    let spec = AdjunctionSpec {
        name: "idlf-lfrith".into(),
        dual: false,
        left: FunctorHandle {
            name: "idlf".into(),
            contravariant: false,
            on_obj: Box::new(|o| Ok(Obj::Frith(idlf_obj(as_lattice(o)?)?))),
            on_mor: Box::new(|m| Ok(Mor::Frith(idlf_mor(as_lattice_mor(m)?)?))),
        },
        right: FunctorHandle {
            name: "lfrith".into(),
            contravariant: false,
            on_obj: Box::new(|o| {
                let f = as_frith(o)?;
                Ok(Obj::Lattice(f.lattice().sublattice(f.sub())?.0))
            }),
            on_mor: Box::new(|m| Ok(Mor::Lattice(frith::lfrith_hom(as_frith_mor(m)?)?))),
        },
        unit: Box::new(|o| {
            let d = as_lattice(o)?;
            let il = ideal_lattice(d)?;
            let pair = idlf_obj(d)?;
            let (sub_lat, carrier) = pair.lattice().sublattice(pair.sub())?;
            let map = (0..d.size())
                .map(|a| {
                    carrier
                        .binary_search(&il.principal.apply(a))
                        .expect("principal ideals are designated")
                })
                .collect();
            Ok(Mor::Lattice(LatticeHom::new(d.clone(), sub_lat, map)?))
        }),
        counit: Box::new(|o| Ok(Mor::Frith(frith::completion(as_frith(o)?)?.counit))),
    };
    Ok(AdjunctionFamily {
        spec,
        dom_objects: enumerate::distributive_lattices_upto(max_lattice)
            .into_iter()
            .map(Obj::Lattice)
            .collect(),
        dom_morphisms: lattice_mors(&lattice_core(max_lattice))?,
        cod_objects: enumerate::frith_prepairs(max_lattice)
            .into_iter()
            .map(Obj::Frith)
            .collect(),
        cod_morphisms: frith_mors(&full_pair_core(max_lattice))?,
    })
}

fn bispace_core(max_points: usize, max_family: usize) -> Vec<BiSpace> {
    let mut core = Vec::new();
    if max_points >= 2 {
        core.push(catalog::sier_bispace());
        core.push(bitop::skula_space(&catalog::sier()).expect("Skula bispace"));
        core.push(bitop::embed_bispace(&catalog::disc2()).expect("doubled bispace"));
    }
    core.retain(|x| x.pos().len().max(x.neg().len()) <= max_family);
    core
}

/// Positive clopens as a left adjoint to the Skula bispace construction.
pub fn clplus_skula_family(max_points: usize, max_family: usize) -> Result<AdjunctionFamily> {
    let spec = AdjunctionSpec {
        name: "clplus-skula".into(),
        dual: false,
        left: FunctorHandle {
            name: "clplus".into(),
            contravariant: false,
            on_obj: Box::new(|o| Ok(Obj::Pervin(bitop::clplus(as_bispace(o)?)?))),
            on_mor: Box::new(|m| Ok(Mor::Pervin(bitop::clplus_map(as_bispace_mor(m)?)?))),
        },
        right: FunctorHandle {
            name: "skula".into(),
            contravariant: false,
            on_obj: Box::new(|o| Ok(Obj::Bispace(bitop::skula_space(as_pervin(o)?)?))),
            on_mor: Box::new(|m| Ok(Mor::Bispace(bitop::skula_space_map(as_pervin_mor(m)?)?))),
        },
        unit: Box::new(|o| Ok(Mor::Bispace(bitop::skula_unit(as_bispace(o)?)?))),
        counit: Box::new(|o| Ok(Mor::Pervin(bitop::skula_counit(as_pervin(o)?)?))),
    };
    Ok(AdjunctionFamily {
        spec,
        dom_objects: enumerate::bispaces(max_points, max_family)
            .into_iter()
            .map(Obj::Bispace)
            .collect(),
        dom_morphisms: bispace_mors(&bispace_core(max_points, max_family)),
        cod_objects: enumerate::pervin_spaces(max_points, max_family)
            .into_iter()
            .map(Obj::Pervin)
            .collect(),
        cod_morphisms: pervin_mors(&pervin_core(max_points)),
    })
}

fn biframe_core(max_lattice: usize) -> Vec<BiFrame> {
    let mut core = Vec::new();
    if max_lattice >= 3 {
        core.push(catalog::biframe_332());
        core.push(
            bitop::skula_biframe(&FrithPair::full(catalog::c3()).expect("chain pair"))
                .expect("Skula biframe")
                .biframe,
        );
    }
    if max_lattice >= 4 {
        core.push(bitop::embed_biframe(&catalog::b4()).expect("doubled biframe"));
    }
    core.retain(|l| l.main().size() <= max_lattice.max(4));
    core
}

/// The Skula biframe as a left adjoint to the bicomplemented part.
pub fn fsk_bbplus_family(max_lattice: usize) -> Result<AdjunctionFamily> {
    let spec = AdjunctionSpec {
        name: "fsk-bbplus".into(),
        dual: false,
        left: FunctorHandle {
            name: "fsk".into(),
            contravariant: false,
            on_obj: Box::new(|o| Ok(Obj::Biframe(bitop::skula_biframe(as_frith(o)?)?.biframe))),
            on_mor: Box::new(|m| Ok(Mor::Biframe(bitop::skula_biframe_map(as_frith_mor(m)?)?))),
        },
        right: FunctorHandle {
            name: "bbplus".into(),
            contravariant: false,
            on_obj: Box::new(|o| Ok(Obj::Frith(bitop::bbplus(as_biframe(o)?)?.0))),
            on_mor: Box::new(|m| Ok(Mor::Frith(bitop::bbplus_map(as_biframe_mor(m)?)?))),
        },
        unit: Box::new(|o| Ok(Mor::Frith(bitop::fsk_unit(as_frith(o)?)?))),
        counit: Box::new(|o| Ok(Mor::Biframe(bitop::fsk_counit(as_biframe(o)?)?))),
    };
    Ok(AdjunctionFamily {
        spec,
        dom_objects: enumerate::frith_pairs(max_lattice).into_iter().map(Obj::Frith).collect(),
        dom_morphisms: frith_mors(&full_pair_core(max_lattice))?,
        cod_objects: enumerate::biframes(max_lattice).into_iter().map(Obj::Biframe).collect(),
        cod_morphisms: biframe_mors(&biframe_core(max_lattice))?,
    })
}

/// Clopens as a left adjoint to viewing a monotopological Pervin space as a
/// topological space.
pub fn cl_uperv_family(max_points: usize, max_family: usize) -> Result<AdjunctionFamily> {
    let spec = AdjunctionSpec {
        name: "cl-uperv".into(),
        dual: false,
        left: FunctorHandle {
            name: "cl".into(),
            contravariant: false,
            on_obj: Box::new(|o| Ok(Obj::Pervin(bitop::clopen_space(as_pervin(o)?)?))),
            on_mor: Box::new(|m| {
                let f = as_pervin_mor(m)?;
                Ok(Mor::Pervin(PervinMap::new(
                    bitop::clopen_space(&f.dom)?,
                    bitop::clopen_space(&f.cod)?,
                    f.map.clone(),
                )?))
            }),
        },
        right: FunctorHandle {
            name: "uperv".into(),
            contravariant: false,
            on_obj: Box::new(|o| {
                let p = as_pervin(o)?;
                if !bitop::is_mono_pervin(p)? {
                    return Err(Error::Invariant("space is not monotopological".into()));
                }
                Ok(o.clone())
            }),
            on_mor: Box::new(|m| Ok(m.clone())),
        },
        unit: Box::new(|o| {
            let p = as_pervin(o)?;
            let map = (0..p.points()).collect();
            Ok(Mor::Pervin(PervinMap::new(p.clone(), bitop::clopen_space(p)?, map)?))
        }),
        counit: Box::new(|o| {
            let p = as_pervin(o)?;
            let map = (0..p.points()).collect();
            Ok(Mor::Pervin(PervinMap::new(bitop::clopen_space(p)?, p.clone(), map)?))
        }),
    };
    let mono: Vec<PervinSpace> = enumerate::pervin_spaces(max_points, max_family)
        .into_iter()
        .filter(|p| bitop::is_mono_pervin(p).unwrap_or(false))
        .collect();
    let mono_core: Vec<PervinSpace> = pervin_core(max_points)
        .into_iter()
        .filter(|p| bitop::is_mono_pervin(p).unwrap_or(false))
        .collect();
    Ok(AdjunctionFamily {
        spec,
        dom_objects: enumerate::pervin_spaces(max_points, max_family)
            .into_iter()
            .map(Obj::Pervin)
            .collect(),
        dom_morphisms: pervin_mors(&pervin_core(max_points)),
        cod_objects: mono.into_iter().map(Obj::Pervin).collect(),
        cod_morphisms: pervin_mors(&mono_core),
    })
}

fn bb_restriction(h: &LatticeHom) -> Result<FrithHom> {
    let dom = bitop::embed_biframe(&h.dom)?;
    let cod = bitop::embed_biframe(&h.cod)?;
    bitop::bbplus_map(&BiFrameHom::new(dom, cod, h.clone())?)
}

/// Forgetting the designated part of a monotopological pair as a left
/// adjoint to the complemented-element pair.
pub fn ufrith_bb_family(max_lattice: usize) -> Result<AdjunctionFamily> {
    let mono: Vec<FrithPair> = enumerate::frith_pairs(max_lattice)
        .into_iter()
        .filter(|f| bitop::is_mono_frith(f).unwrap_or(false))
        .collect();
    let mono_core: Vec<FrithPair> = full_pair_core(max_lattice)
        .into_iter()
        .filter(|f| bitop::is_mono_frith(f).unwrap_or(false))
        .collect();
    let spec = AdjunctionSpec {
        name: "ufrith-bb".into(),
        dual: false,
        left: FunctorHandle {
            name: "ufrith".into(),
            contravariant: false,
            on_obj: Box::new(|o| Ok(Obj::Lattice(as_frith(o)?.lattice().clone()))),
            on_mor: Box::new(|m| Ok(Mor::Lattice(as_frith_mor(m)?.hom.clone()))),
        },
        right: FunctorHandle {
            name: "bb".into(),
            contravariant: false,
            on_obj: Box::new(|o| Ok(Obj::Frith(bitop::complemented_pair(as_lattice(o)?)?))),
            on_mor: Box::new(|m| Ok(Mor::Frith(bb_restriction(as_lattice_mor(m)?)?))),
        },
        unit: Box::new(|o| {
            let f = as_frith(o)?;
            let target = bitop::complemented_pair(f.lattice())?;
            let (_, carrier) = bitop::bbplus(&bitop::embed_biframe(f.lattice())?)?;
            let map = (0..f.lattice().size())
                .map(|a| {
                    carrier.map.iter().position(|&c| c == a).ok_or_else(|| {
                        Error::Invariant("carrier is not generated by complemented elements".into())
                    })
                })
                .collect::<Result<Vec<usize>>>()?;
            let hom = LatticeHom::new(f.lattice().clone(), target.lattice().clone(), map)?;
            Ok(Mor::Frith(FrithHom::new(f.clone(), target, hom)?))
        }),
        counit: Box::new(|o| {
            let l = as_lattice(o)?;
            let (pair, inclusion) = bitop::bbplus(&bitop::embed_biframe(l)?)?;
            let _ = pair;
            Ok(Mor::Lattice(inclusion))
        }),
    };
    Ok(AdjunctionFamily {
        spec,
        dom_objects: mono.into_iter().map(Obj::Frith).collect(),
        dom_morphisms: frith_mors(&mono_core)?,
        cod_objects: enumerate::distributive_lattices_upto(max_lattice)
            .into_iter()
            .map(Obj::Lattice)
            .collect(),
        cod_morphisms: lattice_mors(&lattice_core(max_lattice))?,
    })
}

/// The identity adjunction on Pervin spaces: a smoke test for the engine.
pub fn identity_family(max_points: usize, max_family: usize) -> Result<AdjunctionFamily> {
    let idf = || FunctorHandle {
        name: "id".into(),
        contravariant: false,
        on_obj: Box::new(|o: &Obj| Ok(o.clone())),
        on_mor: Box::new(|m: &Mor| Ok(m.clone())),
    };
    let spec = AdjunctionSpec {
        name: "identity".into(),
        dual: false,
        left: idf(),
        right: idf(),
        unit: Box::new(|o| identity_mor(o)),
        counit: Box::new(|o| identity_mor(o)),
    };
    let objects: Vec<Obj> = enumerate::pervin_spaces(max_points, max_family)
        .into_iter()
        .map(Obj::Pervin)
        .collect();
    Ok(AdjunctionFamily {
        spec,
        dom_objects: objects.clone(),
        dom_morphisms: pervin_mors(&pervin_core(max_points)),
        cod_objects: objects,
        cod_morphisms: pervin_mors(&pervin_core(max_points)),
    })
}

/// Negative control: the symmetrization adjunction with its counit
/// corrupted by a point swap.  Verification must fail with a witness.
pub fn corrupted_counit_family() -> Result<AdjunctionFamily> {
    let mut family = psym_family(2, 4)?;
    family.spec.name = "psym-corrupted".into();
    family.spec.counit = Box::new(|o| {
        let p = as_pervin(o)?;
        let mut map: Vec<usize> = (0..p.points()).collect();
        if map.len() >= 2 {
            map.swap(0, 1);
        }
        Ok(Mor::Pervin(PervinMap::new(p.symmetrize(), p.clone(), map)?))
    });
    // Keep only the fully symmetric discrete instance, where the swapped
    // counit is still a valid morphism and the failure is purely a law
    // failure.
    family.cod_objects = vec![Obj::Pervin(catalog::disc2())];
    family.cod_morphisms.clear();
    family.dom_objects = vec![Obj::Pervin(catalog::disc2())];
    family.dom_morphisms.clear();
    Ok(family)
}

/// Every adjunction of the summary diagram at the given bounds, in a fixed
/// order.
pub fn standard_families(
    max_points: usize,
    max_family: usize,
    max_lattice: usize,
) -> Result<Vec<AdjunctionFamily>> {
    Ok(vec![
        omega_pt_family(max_points, max_family, max_lattice)?,
        psym_family(max_points, max_family)?,
        fsym_family(max_lattice)?,
        lperv_pff_family(max_points, max_family, max_lattice)?,
        idlf_lfrith_family(max_lattice)?,
        clplus_skula_family(max_points, max_family)?,
        fsk_bbplus_family(max_lattice)?,
        cl_uperv_family(max_points, max_family)?,
        ufrith_bb_family(max_lattice)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_adjunction_passes() {
        let rep = verify(&identity_family(2, 4).unwrap()).unwrap();
        assert!(rep.pass, "{:?}", rep.witness);
    }

    #[test]
    fn omega_pt_laws() {
        let rep = verify(&omega_pt_family(3, 6, 4).unwrap()).unwrap();
        assert!(rep.pass, "{:?}", rep.witness);
    }

    #[test]
    fn psym_laws() {
        let rep = verify(&psym_family(3, 6).unwrap()).unwrap();
        assert!(rep.pass, "{:?}", rep.witness);
    }

    #[test]
    fn fsym_laws() {
        let rep = verify(&fsym_family(4).unwrap()).unwrap();
        assert!(rep.pass, "{:?}", rep.witness);
    }

    #[test]
    fn lperv_pff_laws() {
        let rep = verify(&lperv_pff_family(3, 6, 4).unwrap()).unwrap();
        assert!(rep.pass, "{:?}", rep.witness);
    }

    #[test]
    fn idlf_lfrith_laws() {
        let rep = verify(&idlf_lfrith_family(4).unwrap()).unwrap();
        assert!(rep.pass, "{:?}", rep.witness);
    }

    #[test]
    fn clplus_skula_laws() {
        let rep = verify(&clplus_skula_family(2, 4).unwrap()).unwrap();
        assert!(rep.pass, "{:?}", rep.witness);
    }

    #[test]
    fn fsk_bbplus_laws() {
        let rep = verify(&fsk_bbplus_family(4).unwrap()).unwrap();
        assert!(rep.pass, "{:?}", rep.witness);
    }

    #[test]
    fn monotopological_restriction_laws() {
        let rep = verify(&cl_uperv_family(3, 6).unwrap()).unwrap();
        assert!(rep.pass, "{:?}", rep.witness);
        let rep = verify(&ufrith_bb_family(4).unwrap()).unwrap();
        assert!(rep.pass, "{:?}", rep.witness);
    }

    #[test]
    fn corrupted_counit_is_detected() {
        let rep = verify(&corrupted_counit_family().unwrap()).unwrap();
        assert!(!rep.pass);
        assert!(rep.witness.is_some());
    }
}

//! Spectral and Priestley structures and the dualities that pass through
//! them: sober/spectral recognition, the compact-open and clopen-upset
//! functors, the patch-plus-specialization construction, pairwise Stone
//! bispaces, and the law sweeps tying every round trip back to the
//! enumerated instance families.

use crate::bitop::{self, BiSpace};
use crate::bits::{self, Bits};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::family::SubsetFamily;
use crate::frith::{self, FrithPair};
use crate::pervin::{self, PervinSpace};
use crate::poset::{FinPoset, Preorder};
use crate::report::{witness_hash, LawReport};

/// Closure of a single point: the complement of the union of the members
/// avoiding it.
fn point_closure(t: &SubsetFamily, x: usize) -> Bits {
    let avoid = t
        .members()
        .iter()
        .filter(|&&u| !bits::has(u, x))
        .fold(0, |acc, &u| acc | u);
    t.full_mask() & !avoid
}

/// Sobriety by the definition: every irreducible closed set is the closure
/// of exactly one point.  At finite scale this coincides with separation,
/// which is verified on the side.
pub fn is_sober(t: &SubsetFamily) -> Result<bool> {
    t.require_lattice_family()?;
    let full = t.full_mask();
    let closed: Vec<Bits> = t.members().iter().map(|&u| full & !u).collect();
    let sober = closed.iter().all(|&c| {
        if c == 0 {
            return true;
        }
        let irreducible = !closed.iter().any(|&c1| {
            c1 != c && c1 & !c == 0 && closed
                .iter()
                .any(|&c2| c2 != c && c2 & !c == 0 && c1 | c2 == c)
        });
        if !irreducible {
            return true;
        }
        let generic = bits::iter(c).filter(|&x| point_closure(t, x) == c).count();
        generic == 1
    });
    let t0 = (0..t.ground_size()).all(|x| {
        (0..x).all(|y| {
            t.members()
                .iter()
                .any(|&u| bits::has(u, x) != bits::has(u, y))
        })
    });
    debug_assert_eq!(sober, t0, "finite sobriety is separation");
    Ok(sober)
}

/// Compact members of a topology, by cover search.  On a finite carrier
/// every open is compact; the search keeps the definition honest and the
/// equality is asserted.
pub fn compact_opens(t: &SubsetFamily) -> SubsetFamily {
    let co = t.compact_members();
    assert_eq!(&co, t, "every open of a finite space is compact");
    co
}

/// Spectral recognition: sober, compact opens closed under intersection,
/// and compact opens a basis.  Each clause is computed from its definition.
pub fn is_spectral(t: &SubsetFamily) -> Result<bool> {
    let sober = is_sober(t)?;
    let co = compact_opens(t);
    let meet_closed = co
        .members()
        .iter()
        .all(|&u| co.members().iter().all(|&v| co.contains(u & v)));
    let basis = t.members().iter().all(|&u| {
        co.members()
            .iter()
            .filter(|&&c| c & !u == 0)
            .fold(0, |acc, &c| acc | c)
            == u
    });
    Ok(sober && meet_closed && basis)
}

/// The Pervin space of compact opens of a spectral topology.
pub fn ko(names: Vec<String>, t: &SubsetFamily) -> Result<PervinSpace> {
    if !is_spectral(t)? {
        return Err(Error::NotSpectral);
    }
    PervinSpace::new(names, compact_opens(t))
}

/// The topology generated by the family of a Pervin space.
pub fn u(p: &PervinSpace) -> SubsetFamily {
    p.omega_topology()
}

/// A Priestley space: a compact ordered topological space in which points
/// out of order are separated by clopen upsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PriestleySpace {
    names: Vec<String>,
    topology: SubsetFamily,
    order: FinPoset,
}

impl PriestleySpace {
    pub fn new(names: Vec<String>, topology: SubsetFamily, order: FinPoset) -> Result<Self> {
        if topology.ground_size() != names.len() || order.size() != names.len() {
            return Err(Error::Schema(format!(
                "{} point names for a topology on {} and an order on {} points",
                names.len(),
                topology.ground_size(),
                order.size()
            )));
        }
        topology.require_lattice_family()?;
        assert!(topology.is_compact_space(), "finite spaces are compact");
        let space = PriestleySpace { names, topology, order };
        let upsets = space.clopen_upsets();
        for x in 0..space.points() {
            for y in 0..space.points() {
                if !space.order.leq(x, y)
                    && !upsets
                        .members()
                        .iter()
                        .any(|&m| bits::has(m, x) && !bits::has(m, y))
                {
                    return Err(Error::Invariant(format!(
                        "Priestley separation fails: no clopen upset contains {} and omits {}",
                        space.names[x], space.names[y]
                    )));
                }
            }
        }
        Ok(space)
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

    pub fn topology(&self) -> &SubsetFamily {
        &self.topology
    }

    pub fn order(&self) -> &FinPoset {
        &self.order
    }

    /// Members that are clopen and upward closed.
    pub fn clopen_upsets(&self) -> SubsetFamily {
        let full = self.topology.full_mask();
        let members = self
            .topology
            .members()
            .iter()
            .copied()
            .filter(|&m| {
                self.topology.contains(full & !m)
                    && bits::iter(m).all(|x| self.order.up_set(x) & !m == 0)
            })
            .collect();
        SubsetFamily::new(self.points(), members).expect("clopen upsets form a family")
    }
}

/// Search for a homeomorphism matching the orders.
pub fn find_priestley_isomorphism(a: &PriestleySpace, b: &PriestleySpace) -> Option<Vec<usize>> {
    if a.points() != b.points() || a.topology.len() != b.topology.len() {
        return None;
    }
    bits::permutations(a.points()).into_iter().find(|perm| {
        a.topology.permuted(perm) == b.topology
            && (0..a.points()).all(|x| {
                (0..a.points()).all(|y| a.order.leq(x, y) == b.order.leq(perm[x], perm[y]))
            })
    })
}

/// The Priestley space of a separated Pervin space: the topology of the
/// symmetrization together with the specialization order.
pub fn pp(p: &PervinSpace) -> Result<PriestleySpace> {
    if !p.is_t0() {
        return Err(Error::NotT0);
    }
    let order = FinPoset::from_preorder(p.specialization())?;
    PriestleySpace::new(
        p.names().to_vec(),
        p.symmetrize().omega_topology(),
        order,
    )
}

/// The Pervin space of clopen upsets of a Priestley space.
pub fn cup(y: &PriestleySpace) -> Result<PervinSpace> {
    PervinSpace::new(y.names().to_vec(), y.clopen_upsets())
}

/// The classical Priestley space of a spectral topology: Boolean closure
/// for the patch, point-closure membership for the order.  An independent
/// route kept to cross-check the composite through Pervin spaces.
pub fn classical_priestley(names: Vec<String>, t: &SubsetFamily) -> Result<PriestleySpace> {
    if !is_spectral(t)? {
        return Err(Error::NotSpectral);
    }
    let n = t.ground_size();
    let up = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| bits::has(point_closure(t, y), x))
                .fold(0, |acc, y| acc | bits::bit(y))
        })
        .collect();
    let order = FinPoset::from_preorder(Preorder::new(up)?)?;
    PriestleySpace::new(names, t.boolean_closure(), order)
}

/// Finite Priestley spaces up to isomorphism: discrete topologies over the
/// enumerated posets.  Order-disconnectedness forces finite Priestley
/// topologies to be discrete, so this family is exhaustive.
pub fn priestley_spaces(max_points: usize) -> Vec<PriestleySpace> {
    assert!(max_points <= 4, "Priestley enumeration guard");
    let mut out = Vec::new();
    for n in 1..=max_points {
        let discrete =
            SubsetFamily::new(n, (0..=bits::full(n)).collect()).expect("powerset family");
        for order in enumerate::posets_up_to_iso(n, usize::MAX >> 1) {
            let names = (0..n).map(|i| format!("p{i}")).collect();
            out.push(
                PriestleySpace::new(names, discrete.clone(), order)
                    .expect("discrete ordered spaces are Priestley"),
            );
        }
    }
    out
}

fn pervin_id(i: usize, p: &PervinSpace) -> String {
    format!("pervin#{i}({}pts,{}sets)", p.points(), p.family().len())
}

fn pair_id(i: usize, f: &FrithPair) -> String {
    format!("pair#{i}({}elts)", f.lattice().size())
}

/// The spectral/Pervin isomorphism of categories: compact opens after the
/// generated topology is the identity on separated Pervin spaces, and the
/// generated topology after compact opens is the identity on spectral
/// topologies.
pub fn stone_iso_check(max_points: usize, max_family: usize) -> Result<LawReport> {
    let mut rep = LawReport::new("stone-iso");
    for (i, p) in enumerate::pervin_spaces(max_points, max_family)
        .into_iter()
        .filter(|p| p.is_t0())
        .enumerate()
    {
        rep.instance(pervin_id(i, &p));
        let roundtrip = ko(p.names().to_vec(), &u(&p))?;
        rep.require(roundtrip.family() == p.family(), || {
            format!("ko(u(-)) moved the family of {}", pervin_id(i, &p))
        });
    }
    for (i, fam) in enumerate::families_up_to_iso(max_points)
        .into_iter()
        .filter(|fam| is_spectral(fam).unwrap_or(false))
        .enumerate()
    {
        rep.instance(format!("spectral#{i}({}opens)", fam.len()));
        let names = (0..fam.ground_size()).map(|k| format!("p{k}")).collect();
        let roundtrip = u(&ko(names, &fam)?);
        rep.require(roundtrip == fam, || {
            format!("u(ko(-)) moved spectral topology #{i}")
        });
    }
    Ok(rep)
}

/// The Priestley/Pervin isomorphism of categories, plus the agreement of
/// the composite spectral-to-Priestley path with the classical one.
pub fn priestley_iso_check(max_points: usize, max_family: usize) -> Result<LawReport> {
    let mut rep = LawReport::new("priestley-iso");
    for (i, p) in enumerate::pervin_spaces(max_points, max_family)
        .into_iter()
        .filter(|p| p.is_t0())
        .enumerate()
    {
        rep.instance(pervin_id(i, &p));
        let roundtrip = cup(&pp(&p)?)?;
        rep.require(roundtrip.family() == p.family(), || {
            format!("cup(pp(-)) moved the family of {}", pervin_id(i, &p))
        });
    }
    for (i, y) in priestley_spaces(max_points.min(3)).into_iter().enumerate() {
        rep.instance(format!("priestley#{i}({}pts)", y.points()));
        let roundtrip = pp(&cup(&y)?)?;
        rep.require(
            roundtrip.topology() == y.topology() && roundtrip.order() == y.order(),
            || format!("pp(cup(-)) moved Priestley space #{i}"),
        );
    }
    for (i, fam) in enumerate::families_up_to_iso(max_points)
        .into_iter()
        .filter(|fam| is_spectral(fam).unwrap_or(false))
        .enumerate()
    {
        let names: Vec<String> = (0..fam.ground_size()).map(|k| format!("p{k}")).collect();
        let via_pervin = pp(&ko(names.clone(), &fam)?)?;
        let classical = classical_priestley(names, &fam)?;
        rep.instance(format!("spectral#{i}({}opens)", fam.len()));
        match find_priestley_isomorphism(&via_pervin, &classical) {
            Some(perm) => rep.instance(format!(
                "  witness spectral#{i}: {}",
                witness_hash(&format!("{perm:?}"))
            )),
            None => rep.require(false, || {
                format!("composite and classical Priestley spaces differ on spectral #{i}")
            }),
        }
    }
    Ok(rep)
}

/// Pairwise Stone: patch-separated, compact, zero-dimensional.
pub fn pairwise_stone_check(x: &BiSpace) -> bool {
    x.is_t0() && x.is_compact() && x.is_zero_dimensional()
}

/// The bitopological dualities: Skula images of separated Pervin spaces are
/// pairwise Stone and the positive clopens recover the space; Skula
/// biframes of join-dense pairs are compact and zero-dimensional and the
/// bicomplemented part recovers the pair; bicomplemented parts of arbitrary
/// biframes are complete; and completeness forces strong exactness on both
/// sides.
pub fn bitop_duality_check(
    max_points: usize,
    max_family: usize,
    max_lattice: usize,
) -> Result<LawReport> {
    let mut rep = LawReport::new("bitop-duality");
    for (i, p) in enumerate::pervin_spaces(max_points, max_family)
        .into_iter()
        .filter(|p| p.is_t0())
        .enumerate()
    {
        rep.instance(pervin_id(i, &p));
        let sk = bitop::skula_space(&p)?;
        rep.require(pairwise_stone_check(&sk), || {
            format!("Skula image of {} is not pairwise Stone", pervin_id(i, &p))
        });
        let back = bitop::clplus(&sk)?;
        rep.require(back.family() == p.family(), || {
            format!("positive clopens moved the family of {}", pervin_id(i, &p))
        });
        rep.require(back.is_cauchy_complete(), || {
            format!("positive-clopen space of {} is not complete", pervin_id(i, &p))
        });
        rep.require(p.is_strongly_exact(), || {
            format!("{} is not strongly exact", pervin_id(i, &p))
        });
    }
    rep.instance("sierpinski-bispace");
    rep.require(
        !pairwise_stone_check(&crate::catalog::sier_bispace()),
        || "the Sierpinski bispace passed pairwise Stone".to_string(),
    );
    for (i, f) in enumerate::frith_pairs(max_lattice).into_iter().enumerate() {
        rep.instance(pair_id(i, &f));
        let sk = bitop::skula_biframe(&f)?;
        rep.require(
            sk.biframe.is_compact() && sk.biframe.is_zero_dimensional(),
            || format!("Skula biframe of {} not compact zero-dimensional", pair_id(i, &f)),
        );
        rep.require(frith::is_pair_iso(&bitop::fsk_unit(&f)?), || {
            format!("bicomplemented part does not recover {}", pair_id(i, &f))
        });
        rep.require(frith::is_strongly_exact(&f)?, || {
            format!("{} is complete but not strongly exact", pair_id(i, &f))
        });
    }
    for (i, l) in enumerate::biframes(max_lattice).into_iter().enumerate() {
        rep.instance(format!("biframe#{i}({}elts)", l.main().size()));
        let (pair, _) = bitop::bbplus(&l)?;
        rep.require(frith::is_complete(&pair)?, || {
            format!("bicomplemented part of biframe #{i} is not complete")
        });
    }
    Ok(rep)
}

/// The completeness duality: opens of separated spaces are complete pairs
/// and the spectrum returns the space; spectra of complete pairs are
/// separated complete spaces and the opens return the pair; and the
/// designated family is exactly the compact opens of the generated
/// topology.
pub fn completeness_duality_check(
    max_points: usize,
    max_family: usize,
    max_lattice: usize,
) -> Result<LawReport> {
    let mut rep = LawReport::new("completeness-duality");
    for (i, p) in enumerate::pervin_spaces(max_points, max_family)
        .into_iter()
        .filter(|p| p.is_t0())
        .enumerate()
    {
        rep.instance(pervin_id(i, &p));
        let omega = frith::omega_functor(&p)?;
        rep.require(frith::is_complete(&omega)?, || {
            format!("opens of {} are not complete", pervin_id(i, &p))
        });
        let unit = frith::spectrum_unit(&p)?;
        rep.require(pervin::classify_map(&unit).iso, || {
            format!("spectrum unit of {} is not an isomorphism", pervin_id(i, &p))
        });
        rep.require(compact_opens(&u(&p)) == *p.family(), || {
            format!("compact opens differ from the family of {}", pervin_id(i, &p))
        });
    }
    for (i, f) in enumerate::frith_pairs(max_lattice).into_iter().enumerate() {
        rep.instance(pair_id(i, &f));
        let x = frith::pt_functor(&f)?;
        rep.require(x.is_t0() && x.is_cauchy_complete(), || {
            format!("spectrum of {} is not separated complete", pair_id(i, &f))
        });
        let counit = frith::spectrum_counit(&f)?;
        rep.require(frith::is_pair_iso(&counit), || {
            format!("spectrum counit of {} is not an isomorphism", pair_id(i, &f))
        });
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn sobriety_and_spectrality_of_small_topologies() {
        assert!(is_spectral(catalog::sier().family()).unwrap());
        assert!(is_spectral(catalog::p3().family()).unwrap());
        assert!(!is_spectral(catalog::indisc().family()).unwrap());
        assert!(!is_sober(catalog::indisc().family()).unwrap());
        let one = SubsetFamily::new(1, vec![0b0, 0b1]).unwrap();
        assert!(is_spectral(&one).unwrap());
        assert_eq!(compact_opens(catalog::sier().family()).len(), 3);
    }

    #[test]
    fn compact_open_functor_round_trips() {
        let p = catalog::sier();
        let back = ko(p.names().to_vec(), &u(&p)).unwrap();
        assert_eq!(back.family(), p.family());
        assert!(matches!(
            ko(catalog::indisc().names().to_vec(), catalog::indisc().family()),
            Err(Error::NotSpectral)
        ));
        let rep = stone_iso_check(3, 8).unwrap();
        assert!(rep.pass, "{:?}", rep.witness);
    }

    #[test]
    fn priestley_space_of_sierpinski() {
        let y = pp(&catalog::sier()).unwrap();
        assert_eq!(y.points(), 2);
        assert_eq!(y.topology().len(), 4);
        // b is below a: the only member containing b is the whole space.
        assert!(y.order().leq(1, 0));
        assert!(!y.order().leq(0, 1));
        assert_eq!(y.clopen_upsets().members(), catalog::sier().family().members());
        let back = cup(&y).unwrap();
        assert!(pervin::find_pervin_isomorphism(&back, &catalog::sier()).is_some());
    }

    #[test]
    fn priestley_validation_rejects_missing_separation() {
        let indiscrete = SubsetFamily::new(2, vec![0b00, 0b11]).unwrap();
        let antichain = FinPoset::from_covers(2, &[]).unwrap();
        let names = vec!["a".to_string(), "b".to_string()];
        assert!(PriestleySpace::new(names, indiscrete, antichain).is_err());
    }

    #[test]
    fn priestley_round_trips_and_classical_agreement() {
        let rep = priestley_iso_check(3, 8).unwrap();
        assert!(rep.pass, "{:?}", rep.witness);
        assert_eq!(priestley_spaces(2).len(), 3);
        let direct = classical_priestley(
            catalog::sier().names().to_vec(),
            catalog::sier().family(),
        )
        .unwrap();
        let composite = pp(&ko(catalog::sier().names().to_vec(), catalog::sier().family()).unwrap())
            .unwrap();
        assert!(find_priestley_isomorphism(&direct, &composite).is_some());
    }

    #[test]
    fn pairwise_stone_recognition() {
        assert!(pairwise_stone_check(&bitop::skula_space(&catalog::sier()).unwrap()));
        assert!(!pairwise_stone_check(&catalog::sier_bispace()));
        assert!(pairwise_stone_check(
            &bitop::embed_bispace(&catalog::disc2()).unwrap()
        ));
    }

    #[test]
    fn bitop_duality_sweep() {
        let rep = bitop_duality_check(3, 8, 5).unwrap();
        assert!(rep.pass, "{:?}", rep.witness);
    }

    #[test]
    fn completeness_duality_sweep() {
        let rep = completeness_duality_check(3, 8, 5).unwrap();
        assert!(rep.pass, "{:?}", rep.witness);
    }

    #[test]
    fn frozen_duality_correspondents() {
        // Sierpinski's opens are the three-element chain; its spectrum has
        // the same two points back.
        let omega = frith::omega_functor(&catalog::sier()).unwrap();
        assert!(
            frith::find_pair_isomorphism(&omega, &FrithPair::full(catalog::c3()).unwrap())
                .is_some()
        );
        let back = frith::pt_functor(&FrithPair::full(catalog::c3()).unwrap()).unwrap();
        assert!(pervin::find_pervin_isomorphism(&back, &catalog::sier()).is_some());
        // The three-point chain space has a four-chain of opens.
        let omega = frith::omega_functor(&catalog::p3()).unwrap();
        assert!(
            frith::find_pair_isomorphism(&omega, &FrithPair::full(catalog::chain(4)).unwrap())
                .is_some()
        );
        // One point against the two-element chain.
        let one = PervinSpace::with_default_names(SubsetFamily::new(1, vec![0, 1]).unwrap())
            .unwrap();
        let omega = frith::omega_functor(&one).unwrap();
        assert!(
            frith::find_pair_isomorphism(&omega, &FrithPair::full(catalog::c2()).unwrap())
                .is_some()
        );
    }
}

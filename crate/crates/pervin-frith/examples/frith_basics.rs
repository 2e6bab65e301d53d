//! Frith pairs: distributive lattices with a designated bounded
//! sublattice.  Opens and spectra, completion by ideals, symmetrization,
//! and the locale-based recognition predicates.

use pervin_frith::catalog;
use pervin_frith::error::Result;
use pervin_frith::frith::{self, FrithPair};

fn main() -> Result<()> {
    // The opens functor sends a Pervin space to the pair (topology, family).
    let p3 = catalog::p3();
    let opens = frith::omega_functor(&p3)?;
    println!(
        "omega(P3): {} opens, {} designated",
        opens.lattice().size(),
        opens.sub_elements().len()
    );

    // pt recovers the space from its pair; on T0 spaces the unit is an iso.
    let back = frith::pt_functor(&opens)?;
    let unit = frith::spectrum_unit(&p3)?;
    println!("pt(omega(P3)): {} points, unit map {:?}", back.points(), unit.map);

    // Pre-pairs with a partial designated part are completed by ideals;
    // the counit of the completion is a dense extremal epimorphism.
    let prepair = FrithPair::new(catalog::b4(), pervin_frith::bits::from_indices(&[0, 1, 3]))?;
    let completion = frith::completion(&prepair)?;
    println!(
        "completion of (B4, {{0,a,1}}): {} elements, counit {:?}",
        completion.pair.lattice().size(),
        completion.counit.hom.map
    );
    println!("  complete: {}", frith::is_complete(&completion.pair)?);

    // Symmetrization makes the designated part Boolean inside the
    // congruence frame; the unit is the nabla embedding.
    let sym = frith::fsym(&prepair)?;
    println!(
        "fsym: {} elements, designated Boolean part {}",
        sym.pair.lattice().size(),
        sym.pair.sub_elements().len()
    );
    println!("  symmetric: {}", sym.pair.is_symmetric());

    // Recognition predicates from the localic side.
    let full = FrithPair::full(catalog::c3())?;
    println!(
        "(C3, C3): frith={} strongly-exact={} locale-based={}",
        full.is_frith(),
        frith::is_strongly_exact(&full)?,
        frith::is_locale_based(&full)?
    );

    // The hom-set bijection of the dual adjunction, checked by double
    // enumeration on a small instance.
    let report = frith::dual_adjunction_check(&catalog::sier(), &full)?;
    println!("dual adjunction on (SIER, (C3,C3)): {}", if report.pass() { "pass" } else { "FAIL" });
    Ok(())
}

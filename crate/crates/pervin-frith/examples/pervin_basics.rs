//! Pervin spaces: sets equipped with a bounded, meet- and join-closed
//! family of subsets.  Separation, symmetrization, Cauchy filters, and the
//! completeness characterization report.

use pervin_frith::catalog;
use pervin_frith::error::Result;
use pervin_frith::family::SubsetFamily;
use pervin_frith::pervin::{self, CauchyFilter, PervinSpace};

fn main() -> Result<()> {
    // The Sierpinski space: two points, one nontrivial set {a}.
    let sier = catalog::sier();
    println!("Sierpinski: T0={} TD={} symmetric={}", sier.is_t0(), sier.is_td(), sier.is_symmetric());

    // Symmetrization closes the family under complements; it is the
    // reflection into symmetric (uniformity-like) spaces.
    let sym = sier.symmetrize();
    println!("symmetrized family size: {} -> {}", sier.family().len(), sym.family().len());

    // A custom space on three points: the family tracks a nested pair.
    let space = PervinSpace::new(
        ["x", "y", "z"].map(String::from).to_vec(),
        SubsetFamily::new(3, vec![0b000, 0b001, 0b011, 0b111])?,
    )?;
    println!("nested space: T0={} complete={}", space.is_t0(), space.is_cauchy_complete());

    // Cauchy filters are up-sets deciding every family member; each one
    // converging somewhere is exactly completeness.
    let filter = CauchyFilter::new(&space, 0b001)?;
    println!(
        "filter generated by {{x}}: {} members, limit points mask {:#b}",
        filter.members.len(),
        pervin::limit_points(&space, &filter)
    );

    // Undecided generators are rejected.
    match CauchyFilter::new(&space, 0b011) {
        Err(e) => println!("filter on {{x,y}} rejected: {e}"),
        Ok(_) => println!("unexpectedly Cauchy"),
    }

    // The seven-way characterization of completeness, each condition
    // evaluated independently and required to agree.
    let report = pervin::theorem_char_report(&space, 3)?;
    println!(
        "characterization agrees: complete={} iso-to-spectrum={} maximal={}",
        report.complete, report.iso_to_pf_of_family, report.maximal_among_extensions
    );

    // The prime-filter spectrum of a lattice is itself a Pervin space.
    let spectrum = pervin::pf_space(&catalog::b4())?;
    println!(
        "spectrum of B4: {} points, {} sets",
        spectrum.points(),
        spectrum.family().len()
    );
    Ok(())
}

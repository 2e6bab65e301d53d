//! Tour of the order layer: building lattices from cover relations,
//! distributivity and Boolean tests, Birkhoff's representation, ideal
//! lattices, and prime filters.

use pervin_frith::catalog;
use pervin_frith::error::Result;
use pervin_frith::lattice::{self, FinLattice};
use pervin_frith::poset::FinPoset;

fn main() -> Result<()> {
    // A lattice can be validated out of any finite poset given by covers.
    // This one is the divisor lattice of 12: 1, 2, 3, 4, 6, 12.
    let poset = FinPoset::from_covers(
        6,
        &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (3, 5), (4, 5)],
    )?;
    let names = ["1", "2", "3", "4", "6", "12"].map(String::from).to_vec();
    let divisors = FinLattice::from_poset(poset, names)?;
    println!("divisors of 12: {} elements", divisors.size());
    println!("  2 join 3 = {}", divisors.name(divisors.join(1, 2)));
    println!("  4 meet 6 = {}", divisors.name(divisors.meet(3, 4)));
    println!("  distributive: {}", divisors.is_distributive());
    println!("  boolean: {}", divisors.is_boolean());

    // The pentagon breaks distributivity and the check names a witness.
    let n5 = catalog::n5();
    match n5.distributivity_witness() {
        Some((a, b, c)) => println!(
            "pentagon witness: ({}, {}, {})",
            n5.name(a),
            n5.name(b),
            n5.name(c)
        ),
        None => println!("pentagon unexpectedly distributive"),
    }

    // Birkhoff: a distributive lattice is the downset lattice of its
    // join-irreducibles; the roundtrip returns the isomorphism.
    let iso = lattice::birkhoff_roundtrip(&divisors)?;
    println!("birkhoff iso assignment: {:?}", iso.map);

    // Ideal completion: C3 has three ideals forming another chain.
    let ideals = lattice::ideal_lattice(&catalog::c3())?;
    println!(
        "Idl(C3): {} elements, principal embedding {:?}",
        ideals.lattice.size(),
        ideals.principal.map
    );

    // Prime filters drive every spectrum construction; the fast
    // join-irreducible path agrees with the brute-force sweep.
    let b4 = catalog::b4();
    let fast = b4.prime_filters()?;
    let brute = b4.prime_filters_brute();
    assert_eq!(fast, brute);
    println!("B4 prime filters: {}", fast.len());

    // Isomorphism search works up to relabeling.
    let relabeled = FinLattice::from_poset(
        FinPoset::from_covers(4, &[(0, 2), (0, 3), (2, 1), (3, 1)])?,
        ["bot", "top", "left", "right"].map(String::from).to_vec(),
    )?;
    println!(
        "B4 ~ relabeled diamond: {}",
        lattice::find_isomorphism(&b4, &relabeled).is_some()
    );
    Ok(())
}

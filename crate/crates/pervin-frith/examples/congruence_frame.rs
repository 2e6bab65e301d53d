//! Congruences of finite distributive lattices: the assembly of all
//! congruences, principal and generated ones, frame quotients, and the
//! universal extension property of the congruence frame.

use pervin_frith::catalog;
use pervin_frith::congruence::{
    self, all_congruences, generated_congruence_subframe, principal_congruence, quotient,
    universal_extension,
};
use pervin_frith::error::Result;
use pervin_frith::lattice::{self, LatticeHom};

fn main() -> Result<()> {
    // The congruence lattice of the three-element chain is the diamond.
    let c3 = catalog::c3();
    let con = all_congruences(&c3)?;
    println!("Con(C3): {} congruences", con.members.len());
    println!(
        "  forms B4: {}",
        lattice::find_isomorphism(&con.lattice, &catalog::b4()).is_some()
    );

    // nabla(a) collapses everything below a; delta(s) collapses the
    // interval above s.  They are the open and closed quotients.
    let nab = congruence::nabla(&c3, 1)?;
    let del = congruence::delta(&c3, 1)?;
    println!("  nabla(m) blocks: {:?}", nab.blocks());
    println!("  delta(m) blocks: {:?}", del.blocks());

    // A principal congruence identifies one pair and everything forced.
    let pr = principal_congruence(&c3, 0, 1);
    println!("  principal(0,m) blocks: {:?}", pr.blocks());

    // Quotients are again lattices, with the projection as a hom.
    let (q, proj) = quotient(&c3, &nab)?;
    println!("  C3/nabla(m): {} elements via {:?}", q.size(), proj.map);

    // The subframe generated by the nablas of a designated sublattice is
    // the assembly used by every Skula-style construction.
    let frame = generated_congruence_subframe(&c3, c3.all())?;
    println!("congruence subframe of (C3, C3): {} members", frame.members.len());

    // Universal extension: a lattice hom into a frame where designated
    // images are complemented factors uniquely through the nablas.
    let b4 = catalog::b4();
    let h = LatticeHom::new(catalog::c2(), b4.clone(), vec![0, 3])?;
    let (assembly, extension) = universal_extension(&h, catalog::c2().all())?;
    println!(
        "universal extension through a {}-member assembly: {:?}",
        assembly.members.len(),
        extension.map
    );
    Ok(())
}

//! The interchange formats: canonical JSON for every instance kind and
//! DOT diagrams for Hasse structure.  Parsing is liberal, emission is
//! byte-deterministic, and schema errors point at the offending field.

use pervin_frith::catalog;
use pervin_frith::dot;
use pervin_frith::error::Result;
use pervin_frith::files::{self, Payload};

fn main() -> Result<()> {
    // Canonical emission of a catalog lattice.
    let payload = Payload::Lattice(catalog::b4());
    let text = files::emit(&payload);
    println!("--- B4 as JSON ---\n{text}");

    // Parsing accepts unsorted subsets and normalizes them.
    let loose = r#"{
        "kind": "pervin",
        "ground": ["a", "b"],
        "sets": [[1, 0], [], [0]]
    }"#;
    let parsed = files::parse(loose)?;
    println!("--- canonicalized Sierpinski ---\n{}", files::emit(&parsed));

    // Schema errors name the field path.
    let broken = r#"{"kind": "frith", "lattice": {"kind": "lattice",
        "elements": ["0", "1"], "covers": [[0, 1]]}, "sub": [0, 7]}"#;
    match files::parse(broken) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => println!("unexpectedly parsed"),
    }

    // Structural laws are enforced after the schema: families must be
    // closed under union and intersection.
    let not_closed = r#"{"kind": "pervin", "ground": ["a", "b", "c"],
        "sets": [[], [0], [1], [0, 1, 2]]}"#;
    match files::parse(not_closed) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => println!("unexpectedly parsed"),
    }

    // Maps carry their endpoints so a file is self-contained.
    let hom = pervin_frith::lattice::LatticeHom::new(
        catalog::c2(),
        catalog::c3(),
        vec![0, 2],
    )?;
    println!("--- a lattice map ---\n{}", files::emit(&Payload::LatticeMap(hom)));

    // DOT output draws Hasse covers only.
    println!("--- DOT of C3 ---\n{}", dot::lattice_dot(&catalog::c3()));
    println!("--- DOT of the Sierpinski family ---\n{}", dot::pervin_dot(&catalog::sier())?);
    Ok(())
}

//! The adjunction battery: every functor pair of the summary diagram is
//! wrapped in a generic law engine that checks functoriality, naturality
//! of unit and counit, and both triangle identities over enumerated
//! instance families.  A deliberately corrupted counit shows the engine
//! actually detects violations.

use pervin_frith::adjunction::{self, corrupted_counit_family, standard_families};
use pervin_frith::error::Result;

fn main() -> Result<()> {
    for family in &standard_families(3, 6, 5)? {
        let report = adjunction::verify(family)?;
        println!(
            "{:<12} {:>4} instances  {}",
            family.spec.name,
            report.instances.len(),
            if report.pass { "pass" } else { "FAIL" }
        );
    }

    // The negative control: a counit that swaps two points.  The engine
    // must fail it and name the broken law.
    let corrupted = adjunction::verify(&corrupted_counit_family()?)?;
    println!();
    println!(
        "corrupted counit detected: {}",
        if corrupted.pass { "NO (engine is broken)" } else { "yes" }
    );
    if let Some(witness) = &corrupted.witness {
        println!("  {witness}");
    }
    Ok(())
}

//! Running the verification suite from code: configure bounds, execute the
//! ten criteria, and render the report in both formats.

use pervin_frith::error::Result;
use pervin_frith::suite::{run_criterion, run_suite, SuiteConfig};

fn main() -> Result<()> {
    // Small bounds keep this demo quick; the defaults are the acceptance
    // bounds (4 points, family 8, lattices 8, search bound 4).
    let cfg = SuiteConfig {
        max_points: 3,
        max_family: 6,
        max_lattice: 5,
        search_bound: 3,
        parallelism: 0,
    };

    // A single criterion can be run on its own.
    let c1 = run_criterion("c1", &cfg)?;
    println!("{}: {}", c1.title, if c1.pass { "pass" } else { "FAIL" });
    for law in &c1.laws {
        println!("  law {} over {} instances", law.law, law.instances.len());
    }
    println!();

    // The full battery, summarized one line per criterion.
    let report = run_suite(&cfg, false)?;
    print!("{}", report.summary());

    // The negative control appends an eleventh criterion that records a
    // corrupted adjunction; a working detector fails the suite.
    let controlled = run_suite(&cfg, true)?;
    println!();
    println!(
        "with negative control: suite pass = {} (the detector caught the corruption)",
        controlled.pass
    );
    Ok(())
}

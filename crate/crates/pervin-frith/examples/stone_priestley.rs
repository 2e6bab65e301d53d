//! The classical dualities at finite scale: spectral spaces with compact
//! opens, Priestley spaces with clopen upsets, and the equivalence of the
//! two routes between them.

use pervin_frith::catalog;
use pervin_frith::duality::{self, find_priestley_isomorphism};
use pervin_frith::error::Result;

fn main() -> Result<()> {
    // Spectral recognition on topologies: sobriety plus a meet-closed
    // basis of compact opens.  Finite T0 topologies are spectral.
    let p3 = catalog::p3();
    let topology = duality::u(&p3);
    println!("u(P3) spectral: {}", duality::is_spectral(&topology)?);
    println!("u(P3) sober: {}", duality::is_sober(&topology)?);

    // KO re-equips the carrier with the compact opens; at finite scale
    // every open is compact so the round trip is exact on complete spaces.
    let ko = duality::ko(p3.names().to_vec(), &topology)?;
    println!("ko(u(P3)) == P3: {}", ko == p3);

    // PP sends a Pervin space to its Priestley space: the Boolean closure
    // as patch topology, the specialization relation as order.
    let pp = duality::pp(&catalog::sier())?;
    println!(
        "pp(SIER): {} points, order b<=a: {}",
        pp.points(),
        pp.order().leq(1, 0)
    );
    println!("  clopen upsets: {}", pp.clopen_upsets().len());

    // CUP goes back via clopen upsets.
    let cup = duality::cup(&pp)?;
    println!("cup(pp(SIER)) == SIER: {}", cup == catalog::sier());

    // The direct classical construction on a spectral topology agrees
    // with the composite route through Pervin spaces.
    let classical = duality::classical_priestley(p3.names().to_vec(), &topology)?;
    let composite = duality::pp(&duality::ko(p3.names().to_vec(), &topology)?)?;
    println!(
        "classical vs composite Priestley: {}",
        find_priestley_isomorphism(&classical, &composite).is_some()
    );

    // The family-level checks sweep every enumerated instance.
    let stone = duality::stone_iso_check(3, 6)?;
    let priestley = duality::priestley_iso_check(3, 6)?;
    println!(
        "stone sweep: {} / priestley sweep: {}",
        if stone.pass { "pass" } else { "FAIL" },
        if priestley.pass { "pass" } else { "FAIL" }
    );
    Ok(())
}

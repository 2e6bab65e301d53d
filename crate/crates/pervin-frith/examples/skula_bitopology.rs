//! The bitopological picture: Skula bispaces of Pervin spaces, pairwise
//! Stone properties, Skula biframes of pairs, the bicomplemented-part
//! functor, and the biframe on which the two spectra genuinely differ.

use pervin_frith::bitop::{self};
use pervin_frith::catalog;
use pervin_frith::error::Result;
use pervin_frith::frith::FrithPair;

fn main() -> Result<()> {
    // Sk(P) carries the family positively and its complements negatively.
    let p3 = catalog::p3();
    let sk = bitop::skula_space(&p3)?;
    println!(
        "Sk(P3): {} points, {}+ opens, {}- opens",
        sk.points(),
        sk.pos().len(),
        sk.neg().len()
    );
    println!("  pairwise Stone: {}", pervin_frith::duality::pairwise_stone_check(&sk));
    println!("  zero-dimensional: {}", sk.is_zero_dimensional());

    // cl+ recovers the space from the positive clopens; on Skula images
    // this is exact equality, which is the counit of the adjunction.
    let back = bitop::clplus(&sk)?;
    println!("  cl+(Sk(P3)) == P3: {}", back == p3);

    // On the frame side, Sk_f builds the congruence biframe of a pair.
    let pair = FrithPair::full(catalog::b4())?;
    let skf = bitop::skula_biframe(&pair)?;
    println!(
        "Sk_f(B4, B4): main {} elements, pos {}, neg {}",
        skf.biframe.main().size(),
        skf.biframe.pos().count_ones(),
        skf.biframe.neg().count_ones()
    );

    // bb+ extracts the bicomplemented part; on Skula images it recovers
    // the pair up to isomorphism.
    let (recovered, _inclusion) = bitop::bbplus(&skf.biframe)?;
    println!(
        "bb+(Sk_f): {} elements, iso to original: {}",
        recovered.lattice().size(),
        pervin_frith::frith::find_pair_isomorphism(&pair, &recovered).is_some()
    );

    // The (3,3,2) biframe: its two spectra composites disagree, so the
    // square of functors commutes in only one direction.
    let report = bitop::spectra_square_check(&catalog::biframe_332())?;
    println!(
        "(3,3,2) spectra: {} point via bb+, {} points via cl+, isomorphic: {}",
        report.points_via_bicomplemented, report.points_via_clopens, report.isomorphic
    );
    Ok(())
}

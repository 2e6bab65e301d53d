//! Canonical small instances used across tests, examples, and the suite.
//!
//! Each constructor builds the instance from scratch through the public
//! validators, so the catalog doubles as a smoke test of the constructors.

use crate::bits;
use crate::bitop::{BiFrame, BiSpace};
use crate::family::SubsetFamily;
use crate::lattice::FinLattice;
use crate::pervin::PervinSpace;

fn named(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// The one-element lattice.
pub fn c1() -> FinLattice {
    FinLattice::from_covers(1, &[], named(&["*"])).unwrap()
}

/// The two-element chain `0 < 1`.
pub fn c2() -> FinLattice {
    FinLattice::from_covers(2, &[(0, 1)], named(&["0", "1"])).unwrap()
}

/// The three-element chain `0 < m < 1`.
pub fn c3() -> FinLattice {
    FinLattice::from_covers(3, &[(0, 1), (1, 2)], named(&["0", "m", "1"])).unwrap()
}

/// A chain with `n` elements named by height.
pub fn chain(n: usize) -> FinLattice {
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    let names = (0..n).map(|i| i.to_string()).collect();
    FinLattice::from_covers(n, &covers, names).unwrap()
}

/// The four-element Boolean algebra: the powerset of `{a, b}`.
pub fn b4() -> FinLattice {
    FinLattice::from_covers(
        4,
        &[(0, 1), (0, 2), (1, 3), (2, 3)],
        named(&["{}", "{a}", "{b}", "{a,b}"]),
    )
    .unwrap()
}

/// The eight-element Boolean algebra: the powerset of `{x, y, z}`, with
/// element `i` the subset whose bit pattern is `i`.
pub fn b8() -> FinLattice {
    let mut up = vec![0 as bits::Bits; 8];
    for (i, row) in up.iter_mut().enumerate() {
        for j in 0..8usize {
            if i & j == i {
                *row |= bits::bit(j);
            }
        }
    }
    let letters = ["x", "y", "z"];
    let names = (0..8usize)
        .map(|i| {
            let items: Vec<&str> = (0..3).filter(|&k| i >> k & 1 == 1).map(|k| letters[k]).collect();
            format!("{{{}}}", items.join(","))
        })
        .collect();
    FinLattice::from_poset(crate::poset::FinPoset::new(up).unwrap(), names).unwrap()
}

/// The pentagon: `0 < a < b < 1` and `0 < c < 1`.  Not distributive.
pub fn n5() -> FinLattice {
    FinLattice::from_covers(
        5,
        &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
        named(&["0", "a", "b", "c", "1"]),
    )
    .unwrap()
}

/// The diamond: three incomparable middle elements.  Not distributive.
pub fn m3() -> FinLattice {
    FinLattice::from_covers(
        5,
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        named(&["0", "x", "y", "z", "1"]),
    )
    .unwrap()
}

/// Sierpinski-style Pervin space: points `{a, b}`, family `{{}, {a}, X}`.
pub fn sier() -> PervinSpace {
    PervinSpace::new(
        named(&["a", "b"]),
        SubsetFamily::new(2, vec![0b00, 0b01, 0b11]).unwrap(),
    )
    .unwrap()
}

/// Indiscrete two-point space: family `{{}, X}` only.
pub fn indisc() -> PervinSpace {
    PervinSpace::new(
        named(&["a", "b"]),
        SubsetFamily::new(2, vec![0b00, 0b11]).unwrap(),
    )
    .unwrap()
}

/// Three-point chain-like space: `X = {x, y, z}`, family
/// `{{}, {x}, {x,y}, X}`.
pub fn p3() -> PervinSpace {
    PervinSpace::new(
        named(&["x", "y", "z"]),
        SubsetFamily::new(3, vec![0b000, 0b001, 0b011, 0b111]).unwrap(),
    )
    .unwrap()
}

/// Two-point discrete space: the full powerset family.
pub fn disc2() -> PervinSpace {
    PervinSpace::new(
        named(&["a", "b"]),
        SubsetFamily::new(2, vec![0b00, 0b01, 0b10, 0b11]).unwrap(),
    )
    .unwrap()
}

/// The Sierpinski bispace: positive topology `{{}, {a}, X}`, negative
/// topology indiscrete.  Its only biclopens are trivial, so it is not
/// zero-dimensional.
pub fn sier_bispace() -> BiSpace {
    BiSpace::new(
        named(&["a", "b"]),
        SubsetFamily::new(2, vec![0b00, 0b01, 0b11]).unwrap(),
        SubsetFamily::new(2, vec![0b00, 0b11]).unwrap(),
    )
    .unwrap()
}

/// The mixed-chain biframe: the three-element chain with positive part
/// everything and negative part only the bounds.  The smallest biframe on
/// which the two spectra composites genuinely differ.
pub fn biframe_332() -> BiFrame {
    BiFrame::new(c3(), bits::full(3), bits::from_indices(&[0, 2])).unwrap()
}

/// Look up a catalog lattice by name.
pub fn lattice_by_name(name: &str) -> Option<FinLattice> {
    match name {
        "C1" => Some(c1()),
        "C2" => Some(c2()),
        "C3" => Some(c3()),
        "C4" => Some(chain(4)),
        "B4" => Some(b4()),
        "B8" => Some(b8()),
        "N5" => Some(n5()),
        "M3" => Some(m3()),
        _ => None,
    }
}

/// Look up a catalog Pervin space by name.
pub fn pervin_by_name(name: &str) -> Option<PervinSpace> {
    match name {
        "SIER" => Some(sier()),
        "INDISC" => Some(indisc()),
        "P3" => Some(p3()),
        "DISC2" => Some(disc2()),
        _ => None,
    }
}

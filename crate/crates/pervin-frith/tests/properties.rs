//! Property tests over sampled finite instances: order laws, Heyting
//! adjunction, symmetrization, congruence algebra, prime-filter agreement,
//! and file round trips.

use std::sync::OnceLock;

use proptest::prelude::*;

use pervin_frith::congruence::{all_congruences, congruence_join, congruence_meet};
use pervin_frith::files::{self, Payload};
use pervin_frith::frith::FrithPair;
use pervin_frith::lattice::FinLattice;
use pervin_frith::pervin::PervinSpace;
use pervin_frith::{dot, enumerate};

fn lattices() -> &'static [FinLattice] {
    static POOL: OnceLock<Vec<FinLattice>> = OnceLock::new();
    POOL.get_or_init(|| enumerate::distributive_lattices_upto(6))
}

fn spaces() -> &'static [PervinSpace] {
    static POOL: OnceLock<Vec<PervinSpace>> = OnceLock::new();
    POOL.get_or_init(|| enumerate::pervin_spaces(3, 6))
}

fn pairs() -> &'static [FrithPair] {
    static POOL: OnceLock<Vec<FrithPair>> = OnceLock::new();
    POOL.get_or_init(|| enumerate::frith_prepairs(5))
}

/// A sampled lattice together with elements of it.
fn lattice_and_elements(k: usize) -> impl Strategy<Value = (FinLattice, Vec<usize>)> {
    (0..lattices().len()).prop_flat_map(move |i| {
        let l = lattices()[i].clone();
        let n = l.size();
        (Just(l), proptest::collection::vec(0..n, k))
    })
}

fn any_space() -> impl Strategy<Value = PervinSpace> {
    (0..spaces().len()).prop_map(|i| spaces()[i].clone())
}

fn any_pair() -> impl Strategy<Value = FrithPair> {
    (0..pairs().len()).prop_map(|i| pairs()[i].clone())
}

proptest! {
    /// Meet and join agree with brute-force infima and suprema of the order.
    #[test]
    fn tables_are_infima_and_suprema((l, es) in lattice_and_elements(2)) {
        let (a, b) = (es[0], es[1]);
        let m = l.meet(a, b);
        prop_assert!(l.leq(m, a) && l.leq(m, b));
        for c in 0..l.size() {
            if l.leq(c, a) && l.leq(c, b) {
                prop_assert!(l.leq(c, m));
            }
        }
        let j = l.join(a, b);
        prop_assert!(l.leq(a, j) && l.leq(b, j));
        for c in 0..l.size() {
            if l.leq(a, c) && l.leq(b, c) {
                prop_assert!(l.leq(j, c));
            }
        }
    }

    /// The Heyting arrow is right adjoint to meet.
    #[test]
    fn heyting_adjunction((l, es) in lattice_and_elements(3)) {
        let (a, b, c) = (es[0], es[1], es[2]);
        let arrow = l.heyting_arrow(a, b).expect("sampled lattices are distributive");
        prop_assert_eq!(l.leq(c, arrow), l.leq(l.meet(c, a), b));
    }

    /// Fast prime filters agree with the brute-force sweep.
    #[test]
    fn prime_filters_agree(i in 0..lattices().len()) {
        let l = &lattices()[i];
        prop_assert_eq!(l.prime_filters().expect("distributive"), l.prime_filters_brute());
    }

    /// Symmetrization is idempotent and lands in symmetric spaces.
    #[test]
    fn symmetrization_idempotent(p in any_space()) {
        let s = p.symmetrize();
        prop_assert!(s.is_symmetric());
        prop_assert_eq!(s.symmetrize(), s);
    }

    /// Finite T0 and TD coincide.
    #[test]
    fn t0_equals_td(p in any_space()) {
        prop_assert_eq!(p.is_t0(), p.is_td());
    }

    /// Congruence meet and join stay inside the congruence lattice and
    /// satisfy the absorption laws.
    #[test]
    fn congruence_absorption((l, _) in lattice_and_elements(0), seed in any::<u64>()) {
        let all = all_congruences(&l).expect("within enumeration guard");
        let members = &all.members;
        let a = &members[(seed % members.len() as u64) as usize];
        let b = &members[((seed >> 16) % members.len() as u64) as usize];
        let meet = congruence_meet(a, b);
        let join = congruence_join(&l, a, b);
        prop_assert!(meet.is_congruence(&l));
        prop_assert!(join.is_congruence(&l));
        prop_assert!(members.binary_search(&meet).is_ok());
        prop_assert!(members.binary_search(&join).is_ok());
        prop_assert_eq!(congruence_join(&l, a, &meet), a.clone());
        prop_assert_eq!(congruence_meet(a, &join), a.clone());
    }

    /// Parse inverts emission, and re-emission is byte-stable.
    #[test]
    fn file_roundtrip_lattice(i in 0..lattices().len()) {
        let payload = Payload::Lattice(lattices()[i].clone());
        let text = files::emit(&payload);
        let back = files::parse(&text).expect("own emission parses");
        prop_assert_eq!(files::emit(&back), text);
    }

    #[test]
    fn file_roundtrip_pervin(p in any_space()) {
        let payload = Payload::Pervin(p);
        let text = files::emit(&payload);
        let back = files::parse(&text).expect("own emission parses");
        prop_assert_eq!(files::emit(&back), text);
    }

    #[test]
    fn file_roundtrip_frith(f in any_pair()) {
        let payload = Payload::Frith(f);
        let text = files::emit(&payload);
        let back = files::parse(&text).expect("own emission parses");
        prop_assert_eq!(files::emit(&back), text);
    }

    /// DOT emission is deterministic.
    #[test]
    fn dot_is_deterministic(i in 0..lattices().len()) {
        let l = &lattices()[i];
        prop_assert_eq!(dot::lattice_dot(l), dot::lattice_dot(l));
    }
}

//! Deterministic DOT renderings.
//!
//! Every graph lists nodes in index order and draws covering (Hasse) edges
//! only, oriented from the smaller element upward, so output is stable
//! across runs and diffs cleanly.

use std::fmt::Write;

use crate::duality::PriestleySpace;
use crate::family::family_lattice;
use crate::lattice::FinLattice;
use crate::pervin::PervinSpace;
use crate::poset::FinPoset;

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

fn render(name: &str, labels: &[String], edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {name} {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for (i, label) in labels.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{}\"];", escape(label)).unwrap();
    }
    for &(lo, hi) in edges {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

/// A poset with explicit node labels.
pub fn poset_dot(poset: &FinPoset, labels: &[String]) -> String {
    render("poset", labels, &poset.covers())
}

/// A lattice as its Hasse diagram.
pub fn lattice_dot(l: &FinLattice) -> String {
    render("lattice", l.names(), &l.poset().covers())
}

/// The designated family of a Pervin space ordered by inclusion.
pub fn pervin_dot(p: &PervinSpace) -> crate::error::Result<String> {
    let lat = family_lattice(p.family(), p.names())?;
    Ok(render("pervin", lat.names(), &lat.poset().covers()))
}

/// The point order of a Priestley space.
pub fn priestley_dot(p: &PriestleySpace) -> String {
    render("priestley", p.names(), &p.order().covers())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::duality;

    #[test]
    fn chain_renders_two_edges() {
        let text = lattice_dot(&catalog::c3());
        let expected = "digraph lattice {\n  rankdir=BT;\n  n0 [label=\"0\"];\n  \
                        n1 [label=\"m\"];\n  n2 [label=\"1\"];\n  n0 -> n1;\n  n1 -> n2;\n}\n";
        assert_eq!(text, expected);
    }

    #[test]
    fn diamond_renders_four_nodes_and_four_edges() {
        let text = lattice_dot(&catalog::b4());
        assert_eq!(text.matches("label=").count(), 4);
        assert_eq!(text.matches("->").count(), 4);
        assert!(text.contains("n0 -> n1;"));
        assert!(text.contains("n0 -> n2;"));
        assert!(text.contains("n1 -> n3;"));
        assert!(text.contains("n2 -> n3;"));
    }

    #[test]
    fn priestley_dual_of_sierpinski_orders_b_below_a() {
        let pri = duality::pp(&catalog::sier()).unwrap();
        let text = priestley_dot(&pri);
        assert_eq!(text.matches("label=").count(), 2);
        assert_eq!(text.matches("->").count(), 1);
        assert!(text.contains("n1 -> n0;"));
        assert!(text.contains("[label=\"a\"]"));
        assert!(text.contains("[label=\"b\"]"));
    }

    #[test]
    fn pervin_family_renders_inclusion_hasse() {
        let text = pervin_dot(&catalog::sier()).unwrap();
        assert_eq!(text.matches("->").count(), 2);
        assert!(text.contains("{a}"));
    }
}

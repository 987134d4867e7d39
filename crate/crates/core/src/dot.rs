//! Hasse diagrams in Graphviz DOT. Nodes are emitted in index order and
//! edges in ascending `(lower, upper)` order, so output is byte-stable.

use std::fmt::Write;

use crate::lattice::FiniteDistLattice;
use crate::poset::SpecPoset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn render(name: &str, labels: &[String], edges: &[(usize, usize)]) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(name));
    for (i, l) in labels.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(l)).expect("writing to a String");
    }
    for (lo, hi) in edges {
        writeln!(out, "  n{lo} -> n{hi};").expect("writing to a String");
    }
    out.push_str("}\n");
    out
}

pub fn poset_dot(s: &SpecPoset) -> String {
    render("spec", s.labels(), &s.covers())
}

pub fn lattice_dot(l: &FiniteDistLattice) -> String {
    let labels: Vec<String> = l.elements().map(|x| l.label(x)).collect();
    let mut edges = Vec::new();
    for x in l.elements() {
        for y in l.elements() {
            let covers = x != y
                && l.le(x, y)
                && l.elements().all(|z| z == x || z == y || !(l.le(x, z) && l.le(z, y)));
            if covers {
                edges.push((x, y));
            }
        }
    }
    render("lattice", &labels, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(dot: &str) -> (usize, usize) {
        let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
        let edges = dot.lines().filter(|l| l.contains("->")).count();
        (nodes, edges)
    }

    #[test]
    fn small_posets() {
        assert_eq!(counts(&poset_dot(&SpecPoset::chain(1))), (1, 0));
        assert_eq!(counts(&poset_dot(&SpecPoset::chain(2))), (2, 1));
        assert_eq!(counts(&poset_dot(&SpecPoset::antichain(2))), (2, 0));
    }

    #[test]
    fn boolean_square() {
        let dot = lattice_dot(&FiniteDistLattice::boolean(2).unwrap());
        assert_eq!(counts(&dot), (4, 4));
        assert!(dot.contains("n0 -> n1;") && !dot.contains("n0 -> n3;"));
        assert_eq!(dot, lattice_dot(&FiniteDistLattice::boolean(2).unwrap()));
    }

    #[test]
    fn labels_are_escaped() {
        let s = SpecPoset::from_relation(vec!["a\"b".into()], |i, j| i == j).unwrap();
        assert!(poset_dot(&s).contains("label=\"a\\\"b\""));
    }
}

use std::fmt::Write;

use matadj::{FlatLattice, Matroid};

/// Hasse diagram of the lattice of flats, rank 0 at the bottom.
pub fn lattice_dot(m: &Matroid) -> String {
    let lattice: FlatLattice = m.flats();
    let mut out = String::new();
    let title = m.name().unwrap_or("M");
    writeln!(out, "digraph lattice {{").unwrap();
    writeln!(out, "  label=\"flats of {}\";", escape(title)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    let mut index = 0;
    for (k, layer) in lattice.layers().iter().enumerate() {
        let mut ids = Vec::with_capacity(layer.len());
        for flat in layer {
            writeln!(out, "  f{index} [label=\"r{k} {flat}\"];").unwrap();
            ids.push(format!("f{index}"));
            index += 1;
        }
        writeln!(out, "  {{ rank=same; {}; }}", ids.join("; ")).unwrap();
    }
    for i in 0..lattice.len() {
        for j in lattice.covers(i) {
            writeln!(out, "  f{i} -> f{j};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u23_diagram() {
        let dot = lattice_dot(&Matroid::uniform(2, 3).unwrap());
        assert_eq!(dot.matches(" [label=").count(), 5);
        assert_eq!(dot.matches(" -> ").count(), 6);
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("f0 [label=\"r0 {}\"]"));
    }
}

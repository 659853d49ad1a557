//! Canonical emitters: algebra definitions in the DSL, and the listing of a
//! constructed binary-ternary structure. Output is deterministic — statements
//! are sorted by basis index and scalars print in their canonical form — so
//! `parse(emit(spec)) == spec` and repeated runs are byte-identical.

use crate::algebra::{AlgebraSpec, HomLYSpec, LinearMap};
use std::fmt::Write;

pub fn emit_algebra_file(spec: &AlgebraSpec) -> String {
    let mut out = String::new();
    writeln!(out, "algebra {}", spec.name()).unwrap();
    writeln!(out, "dim {}", spec.dim()).unwrap();
    if !spec.params().is_empty() {
        writeln!(out, "params {}", spec.params()).unwrap();
    }

    let mut prods = Vec::new();
    for i in 0..spec.dim() {
        for j in 0..spec.dim() {
            let v = spec.product().entry(i, j);
            if !v.is_zero() {
                prods.push(format!("prod {} {} -> {}", i + 1, j + 1, v));
            }
        }
    }
    if !prods.is_empty() {
        out.push('\n');
        for line in prods {
            writeln!(out, "{line}").unwrap();
        }
    }

    if !spec.alpha().is_identity() {
        out.push('\n');
        for line in map_lines(spec.alpha()) {
            writeln!(out, "{line}").unwrap();
        }
    }
    out
}

/// Human-readable listing of a Hom-Lie-Yamaguti structure: nonzero brackets,
/// nonzero triples, and the twisting map when it is not the identity.
pub fn emit_hom_ly(h: &HomLYSpec) -> String {
    let mut out = String::new();
    writeln!(out, "homly {}", h.name()).unwrap();
    writeln!(out, "dim {}", h.dim()).unwrap();
    if !h.params().is_empty() {
        writeln!(out, "params {}", h.params()).unwrap();
    }

    let mut body = Vec::new();
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            let v = h.bracket().entry(i, j);
            if !v.is_zero() {
                body.push(format!("bracket {} {} -> {}", i + 1, j + 1, v));
            }
        }
    }
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            for k in 0..h.dim() {
                let v = h.triple().entry(i, j, k);
                if !v.is_zero() {
                    body.push(format!("triple {} {} {} -> {}", i + 1, j + 1, k + 1, v));
                }
            }
        }
    }
    if !body.is_empty() {
        out.push('\n');
        for line in body {
            writeln!(out, "{line}").unwrap();
        }
    }

    if !h.alpha().is_identity() {
        out.push('\n');
        for line in map_lines(h.alpha()) {
            writeln!(out, "{line}").unwrap();
        }
    }
    out
}

fn map_lines(alpha: &LinearMap) -> Vec<String> {
    (0..alpha.dim())
        .map(|i| format!("map {} -> {}", i + 1, alpha.column(i)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BinaryTensor, Vector};
    use crate::coeff::Params;
    use crate::io::parse::parse_algebra_file;

    #[test]
    fn zero_algebra_emits_header_only() {
        let ps = Params::empty();
        let spec = AlgebraSpec::new(
            "zero",
            ps.clone(),
            BinaryTensor::zero(&ps, 2),
            LinearMap::identity(&ps, 2),
        )
        .unwrap();
        assert_eq!(emit_algebra_file(&spec), "algebra zero\ndim 2\n");
    }

    #[test]
    fn emit_then_parse_is_identity() {
        let text = "algebra rt\ndim 3\nparams a b\n\nprod 1 2 -> (a*b+1)*e1 + I*e3\nprod 2 1 -> -e3\n\nmap 1 -> e1\nmap 2 -> b*e2\nmap 3 -> a*e1 + e3\n";
        let spec = parse_algebra_file(text).unwrap();
        let emitted = emit_algebra_file(&spec);
        let reparsed = parse_algebra_file(&emitted).unwrap();
        assert_eq!(reparsed, spec);
        // Canonical input survives byte-for-byte.
        assert_eq!(emitted, text);
    }

    #[test]
    fn derived_twists_round_trip() {
        use crate::constructions::yau_twist;
        use crate::io::builtins::builtin;
        for base in ["l4", "r7", "r8", "heisenberg"] {
            let twisted = yau_twist(&builtin(base).unwrap()).unwrap();
            let reparsed = parse_algebra_file(&emit_algebra_file(&twisted)).unwrap();
            assert_eq!(reparsed, twisted, "round-trip of twisted {base}");
        }
    }

    #[test]
    fn statements_are_sorted_by_index() {
        let ps = Params::empty();
        let mut b = BinaryTensor::zero(&ps, 2);
        b.set_entry(1, 0, Vector::basis(&ps, 2, 0));
        b.set_entry(0, 1, Vector::basis(&ps, 2, 1));
        let spec = AlgebraSpec::new("s", ps.clone(), b, LinearMap::identity(&ps, 2)).unwrap();
        let emitted = emit_algebra_file(&spec);
        let p12 = emitted.find("prod 1 2").unwrap();
        let p21 = emitted.find("prod 2 1").unwrap();
        assert!(p12 < p21);
    }
}

//! Catalog of built-in algebras: two low-dimensional complex left Leibniz
//! algebras (`l4`, solvable, dim 3; `r7` and `r8`, nilpotent, dim 4), the
//! Heisenberg Lie algebra, and their Yau twists along the catalogued
//! endomorphisms. The `*-twist` tables are stored precomputed; tests re-derive
//! them through `yau_twist` to guard against transcription drift.

use crate::algebra::AlgebraSpec;
use crate::io::parse::parse_algebra_file;

pub const BUILTIN_NAMES: [&str; 8] = [
    "l4",
    "l4-twist",
    "r7",
    "r7-twist",
    "r8",
    "r8-twist",
    "heisenberg",
    "heisenberg-twist",
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown builtin `{name}`; available: {}", BUILTIN_NAMES.join(", "))]
pub struct UnknownBuiltin {
    pub name: String,
}

const L4: &str = "\
algebra l4
dim 3
params a b l

prod 2 3 -> e2
prod 3 1 -> l*e1
prod 3 2 -> -e2
prod 3 3 -> e1

map 1 -> (a*l+1)*e1
map 2 -> b*e2
map 3 -> a*e1 + e2 + e3
";

const L4_TWIST: &str = "\
algebra l4-twist
dim 3
params a b l

prod 2 3 -> b*e2
prod 3 1 -> (a*l^2+l)*e1
prod 3 2 -> -b*e2
prod 3 3 -> (a*l+1)*e1

map 1 -> (a*l+1)*e1
map 2 -> b*e2
map 3 -> a*e1 + e2 + e3
";

const R7: &str = "\
algebra r7
dim 4

prod 1 1 -> e4
prod 1 2 -> e3
prod 1 3 -> e4
prod 2 1 -> -e3
prod 3 1 -> -e4

map 1 -> e1 + e2 + e3 + e4
map 2 -> e2 + e3 + e4
map 3 -> e3 + e4
map 4 -> e4
";

const R7_TWIST: &str = "\
algebra r7-twist
dim 4

prod 1 1 -> e4
prod 1 2 -> e3 + e4
prod 1 3 -> e4
prod 2 1 -> -e3 - e4
prod 3 1 -> -e4

map 1 -> e1 + e2 + e3 + e4
map 2 -> e2 + e3 + e4
map 3 -> e3 + e4
map 4 -> e4
";

const R8: &str = "\
algebra r8
dim 4

prod 1 1 -> e4
prod 1 2 -> e3
prod 1 3 -> e4
prod 2 1 -> -e3 + e4
prod 3 1 -> -e4

map 1 -> e1 + e3 + e4
map 2 -> e2 + e4
map 3 -> e3
map 4 -> e4
";

// α fixes e3 and e4, so twisting leaves the r8 table unchanged.
const R8_TWIST: &str = "\
algebra r8-twist
dim 4

prod 1 1 -> e4
prod 1 2 -> e3
prod 1 3 -> e4
prod 2 1 -> -e3 + e4
prod 3 1 -> -e4

map 1 -> e1 + e3 + e4
map 2 -> e2 + e4
map 3 -> e3
map 4 -> e4
";

const HEISENBERG: &str = "\
algebra heisenberg
dim 3

prod 1 2 -> e3
prod 2 1 -> -e3

map 1 -> e1
map 2 -> e2 + e3
map 3 -> e3
";

// The product lands in the center, which α fixes: the table is unchanged.
const HEISENBERG_TWIST: &str = "\
algebra heisenberg-twist
dim 3

prod 1 2 -> e3
prod 2 1 -> -e3

map 1 -> e1
map 2 -> e2 + e3
map 3 -> e3
";

pub fn builtin(name: &str) -> Result<AlgebraSpec, UnknownBuiltin> {
    let text = match name {
        "l4" => L4,
        "l4-twist" => L4_TWIST,
        "r7" => R7,
        "r7-twist" => R7_TWIST,
        "r8" => R8,
        "r8-twist" => R8_TWIST,
        "heisenberg" => HEISENBERG,
        "heisenberg-twist" => HEISENBERG_TWIST,
        other => {
            return Err(UnknownBuiltin {
                name: other.to_string(),
            })
        }
    };
    Ok(parse_algebra_file(text).expect("builtin definitions parse"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Vector;
    use crate::coeff::{Params, Scalar};
    use crate::constructions::yau_twist;
    use crate::identities::{check_multiplicative, CheckOptions};
    use crate::io::emit::emit_algebra_file;

    #[test]
    fn all_names_resolve() {
        for name in BUILTIN_NAMES {
            let spec = builtin(name).unwrap();
            assert_eq!(spec.name(), name);
        }
    }

    #[test]
    fn unknown_name_lists_catalog() {
        let err = builtin("l5").unwrap_err();
        assert_eq!(err.name, "l5");
        assert!(err.to_string().contains("l4-twist"));
        assert!(err.to_string().contains("heisenberg"));
    }

    #[test]
    fn tables_match_structure_constants_entry_by_entry() {
        // Pin a few structure constants built by hand, independent of the parser.
        let l4 = builtin("l4").unwrap();
        let ps = l4.params().clone();
        let e = |k: usize| Vector::basis(&ps, 3, k);
        let l = Scalar::parameter(&ps, "l").unwrap();
        assert_eq!(l4.product().entry(1, 2), &e(1));
        assert_eq!(l4.product().entry(2, 0), &e(0).scale(&l));
        assert_eq!(l4.product().entry(2, 1), &-&e(1));
        assert_eq!(l4.product().entry(2, 2), &e(0));
        let zero_entries = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .filter(|&(i, j)| ![(1, 2), (2, 0), (2, 1), (2, 2)].contains(&(i, j)));
        for (i, j) in zero_entries {
            assert!(l4.product().entry(i, j).is_zero(), "l4 entry ({i},{j})");
        }

        // α of l4: (a*l+1)e1, b e2, a e1 + e2 + e3.
        let a = Scalar::parameter(&ps, "a").unwrap();
        let b = Scalar::parameter(&ps, "b").unwrap();
        let al1 = &(&a * &l) + &Scalar::one(&ps);
        assert_eq!(l4.alpha().column(0), &e(0).scale(&al1));
        assert_eq!(l4.alpha().column(1), &e(1).scale(&b));
        assert_eq!(l4.alpha().column(2), &(&e(0).scale(&a) + &(&e(1) + &e(2))));

        let psq = Params::empty();
        let f = |k: usize| Vector::basis(&psq, 4, k);

        let r7 = builtin("r7").unwrap();
        assert_eq!(r7.product().entry(0, 0), &f(3));
        assert_eq!(r7.product().entry(0, 1), &f(2));
        assert_eq!(r7.product().entry(0, 2), &f(3));
        assert_eq!(r7.product().entry(1, 0), &-&f(2));
        assert_eq!(r7.product().entry(2, 0), &-&f(3));
        for (i, j) in (0..4).flat_map(|i| (0..4).map(move |j| (i, j))) {
            if ![(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)].contains(&(i, j)) {
                assert!(r7.product().entry(i, j).is_zero(), "r7 entry ({i},{j})");
            }
        }
        assert_eq!(r7.alpha().column(0), &(&(&f(0) + &f(1)) + &(&f(2) + &f(3))));
        assert_eq!(r7.alpha().column(1), &(&f(1) + &(&f(2) + &f(3))));
        assert_eq!(r7.alpha().column(2), &(&f(2) + &f(3)));
        assert_eq!(r7.alpha().column(3), &f(3));

        let r8 = builtin("r8").unwrap();
        assert_eq!(r8.product().entry(0, 0), &f(3));
        assert_eq!(r8.product().entry(0, 1), &f(2));
        assert_eq!(r8.product().entry(0, 2), &f(3));
        assert_eq!(r8.product().entry(1, 0), &(&-&f(2) + &f(3)));
        assert_eq!(r8.product().entry(2, 0), &-&f(3));
        assert_eq!(r8.alpha().column(0), &(&f(0) + &(&f(2) + &f(3))));
        assert_eq!(r8.alpha().column(1), &(&f(1) + &f(3)));
        assert_eq!(r8.alpha().column(2), &f(2));
        assert_eq!(r8.alpha().column(3), &f(3));

        let heis = builtin("heisenberg").unwrap();
        let g = |k: usize| Vector::basis(&psq, 3, k);
        assert_eq!(heis.product().entry(0, 1), &g(2));
        assert_eq!(heis.product().entry(1, 0), &-&g(2));
        assert_eq!(heis.alpha().column(1), &(&g(1) + &g(2)));
    }

    #[test]
    fn twisted_r7_emits_the_expected_statement_lines() {
        let text = emit_algebra_file(&builtin("r7-twist").unwrap());
        assert!(text.contains("prod 2 1 -> -e3 - e4"));
        assert!(text.contains("prod 1 2 -> e3 + e4"));
    }

    #[test]
    fn l4_keeps_parameters_symbolic() {
        let l4 = builtin("l4").unwrap();
        assert_eq!(l4.params().names(), ["a", "b", "l"]);
        let entry = l4.product().entry(2, 0);
        assert_eq!(entry.coord(0).to_string(), "l");
    }

    #[test]
    fn precomputed_twists_agree_with_yau_twist() {
        for base in ["l4", "r7", "r8", "heisenberg"] {
            let spec = builtin(base).unwrap();
            let derived = yau_twist(&spec).unwrap();
            let stored = builtin(&format!("{base}-twist")).unwrap();
            assert_eq!(derived, stored, "twist of {base}");
            assert_eq!(emit_algebra_file(&derived), emit_algebra_file(&stored));
        }
    }

    #[test]
    fn catalogued_maps_are_endomorphisms() {
        let opts = CheckOptions::default();
        for name in BUILTIN_NAMES {
            let spec = builtin(name).unwrap();
            let report = check_multiplicative(spec.product(), spec.alpha(), &opts).unwrap();
            assert!(report.holds, "alpha of {name} is an endomorphism");
        }
    }
}

//! Named diagrams used throughout the tests and the command line.

use crate::braid::{trefoil_sum_braid, BraidWord};
use crate::coloring::{propagate_from_seeds, ClassColoring, ClassSpec};
use crate::diagram::{braid_closure, braid_closure_with_letters, pretzel, whitehead_double_diagram, PlanarDiagram};
use crate::paths::{CaseLabel, ClaspSection};
use crate::perm::Perm;

fn closure(strands: usize, word: &[i32]) -> PlanarDiagram {
    braid_closure(&BraidWord::new(strands, word.to_vec()).expect("valid braid")).expect("knot closure")
}

pub fn trefoil() -> PlanarDiagram {
    closure(2, &[1, 1, 1])
}

pub fn figure_eight() -> PlanarDiagram {
    closure(3, &[1, -2, 1, -2])
}

pub fn granny() -> PlanarDiagram {
    closure(3, &[1, 1, 1, 2, 2, 2])
}

pub fn square() -> PlanarDiagram {
    closure(3, &[1, 1, 1, -2, -2, -2])
}

pub const KNOT_8_20: [i32; 8] = [1, 1, 1, -2, -1, -1, -1, -2];
/// Chirality with `lk = {4}`; the mirror of the KnotInfo braid `[-1,-1,-1,-2,1,1,-2,-2]`.
pub const KNOT_8_21: [i32; 8] = [1, 1, 1, 2, -1, -1, 2, 2];

pub fn knot_8_20() -> PlanarDiagram {
    closure(3, &KNOT_8_20)
}

pub fn knot_8_21() -> PlanarDiagram {
    closure(3, &KNOT_8_21)
}

pub fn pretzel_333() -> PlanarDiagram {
    pretzel([3, 3, 3]).expect("pretzel knot")
}

/// Diagram by name: `unknot`, `3_1`, `4_1`, `8_20`, `8_21`, `granny`, `square`,
/// `P(3,3,3)`, `trefoil-sum-K`, `whitehead-M`. A trailing `-mirror` mirrors.
pub fn by_name(name: &str) -> Option<PlanarDiagram> {
    if let Some(base) = name.strip_suffix("-mirror") {
        return by_name(base).map(|d| d.mirror());
    }
    let d = match name {
        "unknot" => PlanarDiagram::trivial(),
        "3_1" | "trefoil" => trefoil(),
        "4_1" | "figure-eight" => figure_eight(),
        "8_20" => knot_8_20(),
        "8_21" => knot_8_21(),
        "granny" => granny(),
        "square" => square(),
        "P(3,3,3)" | "pretzel-333" => pretzel_333(),
        _ => {
            if let Some(k) = name.strip_prefix("trefoil-sum-") {
                let k: usize = k.parse().ok().filter(|&k| k >= 1)?;
                return braid_closure(&trefoil_sum_braid(k)).ok();
            }
            if let Some(m) = name.strip_prefix("whitehead-") {
                let m: usize = m.parse().ok().filter(|&m| m >= 1)?;
                return whitehead_double_diagram(m).ok();
            }
            return None;
        }
    };
    Some(d)
}

/// Clasp sections for each case: `K_1` is the closure of `P σ1⁻² σ2⁻² Q` on three
/// strands, and the coloring of `K_0` extends the given bottom colors.
pub fn section_fixture(case: CaseLabel) -> (ClaspSection, ClassColoring) {
    let t = |n: usize, a: usize, b: usize| Perm::transposition(n, a - 1, b - 1);
    let (p, q, bottom): (&[i32], &[i32], [Perm; 3]) = match case {
        CaseLabel::Case1 => (&[-1, -1], &[-2, -1], [t(3, 1, 2), t(3, 1, 3), t(3, 1, 2)]),
        CaseLabel::Case2a => (&[1], &[-2], [t(3, 1, 2), t(3, 1, 2), t(3, 1, 3)]),
        CaseLabel::Case2b => (&[-1, -1], &[-2, -1], [t(4, 1, 2), t(4, 1, 3), t(4, 2, 4)]),
        CaseLabel::Case2c => (&[-1, -1], &[-2, -1], [t(4, 1, 2), t(4, 1, 3), t(4, 1, 4)]),
    };
    let mut word = p.to_vec();
    word.extend([-1, -1, -2, -2]);
    word.extend(q);
    let (k1, letters) = braid_closure_with_letters(&BraidWord::new(3, word).unwrap()).expect("knot closure");
    let a = (letters[p.len()], letters[p.len() + 1]);
    let b = (letters[p.len() + 2], letters[p.len() + 3]);
    let section = ClaspSection::new(k1, a, b, None).expect("fixture section");
    let k0 = section.k0();
    let seeds: Vec<(usize, Perm)> = k0.seed_arcs().into_iter().zip(bottom.iter().cloned()).collect();
    let colors = propagate_from_seeds(&k0, &seeds).expect("fixture coloring extends");
    let spec = ClassSpec::transpositions(bottom[0].degree());
    (section, ClassColoring::new(spec, colors).expect("transpositions"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::check_coloring;
    use crate::paths::{classify_clasp_case, synthesize_k1_tilde, verify_rewrite, DEFAULT_BUDGET};

    #[test]
    fn names_resolve() {
        for n in [
            "unknot",
            "3_1",
            "4_1",
            "8_20",
            "8_21",
            "granny",
            "square",
            "P(3,3,3)",
            "trefoil-sum-3",
            "whitehead-1",
            "3_1-mirror",
        ] {
            assert!(by_name(n).is_some(), "{n}");
        }
        assert!(by_name("5_2").is_none());
        assert_eq!(by_name("3_1-mirror").unwrap(), trefoil().mirror());
    }

    #[test]
    fn section_fixtures_classify_and_rewrite() {
        for case in [CaseLabel::Case1, CaseLabel::Case2a, CaseLabel::Case2b, CaseLabel::Case2c] {
            let (s, col) = section_fixture(case);
            assert!(check_coloring(&s.k0(), &col).unwrap().is_valid());
            assert!(col.is_surjective());
            assert_eq!(classify_clasp_case(&s, &col).unwrap(), case);
            let rw = synthesize_k1_tilde(&s, &col, DEFAULT_BUDGET).unwrap();
            assert!(verify_rewrite(&s, &col, &rw), "{case:?} {:?}", rw.word);
            if case == CaseLabel::Case2a {
                assert_eq!(rw.diagram, s.diagram);
            }
        }
    }
}

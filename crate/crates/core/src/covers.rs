//! Irregular 3-fold dihedral branched covers associated to 3-colorings.
//!
//! Sheets are the points `0, 1, 2` permuted by the transposition colors; sheet 0 is the
//! root of the Schreier tree. Loops act on the right: sheet `s` followed by generator
//! `x` lands on `φ(x)(s)`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{solve_class_colorings, ClassColoring, ClassSpec, SolveOptions};
use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::linalg::{format_rational, proportion, to_rational, Rational, RowSpace};
use crate::perm::Perm;
use crate::presentation::{exponent_sums, GroupPresentation, Letter, Word};
use crate::snf::{from_i64, smith_normal_form};

/// Schreier rewriting of a knot group presentation for the index-3 subgroup fixing a sheet.
#[derive(Clone, Debug)]
pub struct CoverPresentation {
    pub colors: Vec<Perm>,
    /// Tree path from sheet 0, per sheet.
    pub transversal: Vec<Word>,
    /// Provenance `(arc, sheet)` of each Schreier generator.
    pub generators: Vec<(usize, usize)>,
    pub relators: Vec<Word>,
    /// Per arc: the loop at the sheet its color fixes.
    pub degree_one_lifts: Vec<Word>,
    /// Per arc: the square of the arc starting at the least sheet its color swaps.
    pub degree_two_lifts: Vec<Word>,
    /// Longitude of arc 0 lifted from the fixed sheet, then from the least swapped sheet.
    pub longitude_lifts: [Word; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyDecomposition {
    pub free_rank: usize,
    /// Torsion coefficients, each greater than one and dividing the next.
    #[serde(serialize_with = "ser_bigints")]
    pub invariant_factors: Vec<BigInt>,
}

fn ser_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// Homology of the cokernel of an integer relation matrix with `cols` generators.
pub fn cokernel(rows: &[Vec<i64>], cols: usize) -> HomologyDecomposition {
    if rows.is_empty() {
        return HomologyDecomposition { free_rank: cols, invariant_factors: vec![] };
    }
    let f = smith_normal_form(&from_i64(rows));
    let factors = f.invariant_factors();
    HomologyDecomposition {
        free_rank: cols - factors.len(),
        invariant_factors: factors.into_iter().filter(|x| !x.abs().is_one()).collect(),
    }
}

/// The three transpositions of `S_3`.
pub fn is_three_coloring(c: &ClassColoring) -> bool {
    c.spec == ClassSpec::transpositions(3) && c.is_surjective()
}

pub fn reidemeister_schreier(w: &GroupPresentation, d: &PlanarDiagram, c: &ClassColoring) -> Result<CoverPresentation> {
    if !is_three_coloring(c) || c.assignment.len() != w.generator_count {
        return Err(Error::NotSurjective);
    }
    let colors = c.assignment.clone();
    let a = w.generator_count;
    let mut transversal: Vec<Option<Word>> = vec![None; 3];
    transversal[0] = Some(vec![]);
    let mut tree = BTreeSet::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(s) = queue.pop_front() {
        for (x, col) in colors.iter().enumerate() {
            let t = col.apply(s);
            if transversal[t].is_none() {
                let mut path = transversal[s].clone().unwrap();
                path.push(Letter::new(x, 1));
                transversal[t] = Some(path);
                tree.insert((s, x));
                queue.push_back(t);
            }
        }
    }
    let transversal: Vec<Word> = transversal.into_iter().map(|t| t.expect("transitive")).collect();
    let mut index = BTreeMap::new();
    let mut generators = vec![];
    for s in 0..3 {
        for x in 0..a {
            if !tree.contains(&(s, x)) {
                index.insert((s, x), generators.len());
                generators.push((x, s));
            }
        }
    }
    let rewrite = |word: &[Letter], mut s: usize| -> (Word, usize) {
        let mut out = vec![];
        for l in word {
            let t = colors[l.gen].apply(s);
            // transpositions are involutions, so the inverse edge also ends at t
            let from = if l.exp > 0 { s } else { t };
            if let Some(&g) = index.get(&(from, l.gen)) {
                out.push(Letter::new(g, l.exp));
            }
            s = t;
        }
        (out, s)
    };
    let mut relators = vec![];
    for r in &w.relators {
        for s in 0..3 {
            let (rw, e) = rewrite(r, s);
            debug_assert_eq!(e, s);
            relators.push(rw);
        }
    }
    let fixed = |x: usize| (0..3).find(|&s| colors[x].apply(s) == s).unwrap();
    let swapped = |x: usize| (0..3).find(|&s| colors[x].apply(s) != s).unwrap();
    let degree_one_lifts = (0..a).map(|x| rewrite(&[Letter::new(x, 1)], fixed(x)).0).collect();
    let degree_two_lifts = (0..a).map(|x| rewrite(&[Letter::new(x, 1), Letter::new(x, 1)], swapped(x)).0).collect();
    let lam = d.longitude_word(0)?;
    let l1 = rewrite(&lam, fixed(0));
    let l2 = rewrite(&lam, swapped(0));
    debug_assert!(l1.1 == fixed(0) && l2.1 == swapped(0));
    Ok(CoverPresentation {
        colors,
        transversal,
        generators,
        relators,
        degree_one_lifts,
        degree_two_lifts,
        longitude_lifts: [l1.0, l2.0],
    })
}

impl CoverPresentation {
    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    fn abelian(&self, words: &[Word]) -> Vec<Vec<i64>> {
        words.iter().map(|w| exponent_sums(w, self.generator_count())).collect()
    }

    /// First homology of the unbranched cover of the knot complement.
    pub fn unbranched_homology(&self) -> HomologyDecomposition {
        cokernel(&self.abelian(&self.relators), self.generator_count())
    }
}

/// Homology of the branched cover: every meridian lift is killed.
pub fn branched_homology(cp: &CoverPresentation) -> HomologyDecomposition {
    let mut rows = cp.abelian(&cp.relators);
    rows.extend(cp.abelian(&cp.degree_one_lifts));
    rows.extend(cp.abelian(&cp.degree_two_lifts));
    cokernel(&rows, cp.generator_count())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Linking {
    Value(Rational),
    /// A lift is not torsion in the rational homology used.
    Undefined,
}

/// Linking number of the two branch lifts for one 3-coloring.
///
/// Works in `H_1` of the cover with only the degree-two branch component filled, over
/// Q. The degree-one meridian lift must be nonzero there and the degree-two longitude
/// lift must be a rational multiple `r` of it; `r` is the linking number.
pub fn dihedral_linking(d: &PlanarDiagram, c: &ClassColoring) -> Result<Linking> {
    let cp = reidemeister_schreier(&d.wirtinger(), d, c)?;
    let width = cp.generator_count();
    let mut space = RowSpace::new(width);
    for row in cp.abelian(&cp.relators).iter().chain(&cp.abelian(&cp.degree_two_lifts)) {
        space.insert(&to_rational(row));
    }
    let m1 = space.reduce(&to_rational(&exponent_sums(&cp.degree_one_lifts[0], width)));
    let l2 = space.reduce(&to_rational(&exponent_sums(&cp.longitude_lifts[1], width)));
    if m1.iter().all(|x| *x == Rational::default()) {
        return Ok(Linking::Undefined);
    }
    Ok(match proportion(&l2, &m1) {
        Some(r) => Linking::Value(r),
        None => Linking::Undefined,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingSet {
    pub values: BTreeSet<Rational>,
    pub undefined_count: usize,
    /// Colorings (up to permuting the three colors) per value.
    pub orbit_counts: BTreeMap<Rational, usize>,
}

impl LinkingSet {
    pub fn to_report(&self, knot: &str) -> LinkingReport {
        LinkingReport {
            knot: knot.to_string(),
            lk: self.values.iter().map(format_rational).collect(),
            undefined: self.undefined_count,
            orbits: self.orbit_counts.iter().map(|(k, v)| (format_rational(k), *v)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkingReport {
    pub knot: String,
    pub lk: Vec<String>,
    pub undefined: usize,
    pub orbits: BTreeMap<String, usize>,
}

/// Surjective 3-colorings, one per orbit of the color permutations.
pub fn three_colorings(d: &PlanarDiagram) -> Vec<ClassColoring> {
    solve_class_colorings(d, ClassSpec::transpositions(3), &SolveOptions::default()).expect("no node limit").colorings
}

pub fn linking_set(d: &PlanarDiagram) -> LinkingSet {
    let results: Vec<Linking> =
        three_colorings(d).par_iter().map(|c| dihedral_linking(d, c).expect("surjective by construction")).collect();
    let mut set = LinkingSet { values: BTreeSet::new(), undefined_count: 0, orbit_counts: BTreeMap::new() };
    for r in results {
        match r {
            Linking::Value(v) => {
                *set.orbit_counts.entry(v.clone()).or_insert(0) += 1;
                set.values.insert(v);
            }
            Linking::Undefined => set.undefined_count += 1,
        }
    }
    set
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub first: LinkingSet,
    pub second: LinkingSet,
    pub common: BTreeSet<Rational>,
    /// Both sets nonempty and disjoint. Under the conjecture that monochromatic crossing
    /// changes preserve linking numbers, this rules out a single crossing change.
    pub disjoint: bool,
}

/// Compares linking sets of `d1` and a twice 3-colorable `d2`.
pub fn lk_obstruction(d1: &PlanarDiagram, d2: &PlanarDiagram) -> Result<ObstructionReport> {
    let fox = crate::coloring::fox_coloring_space(d2, 3)?;
    if !fox.twice_three_colorable() {
        return Err(Error::NotTwiceThreeColorable(fox.dimension));
    }
    let first = linking_set(d1);
    let second = linking_set(d2);
    let common: BTreeSet<Rational> = first.values.intersection(&second.values).cloned().collect();
    let disjoint = common.is_empty() && !first.values.is_empty() && !second.values.is_empty();
    Ok(ObstructionReport { first, second, common, disjoint })
}

/// Rational from an integer, for comparisons in callers.
pub fn integer(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

//! Rewriting a clasp section so that a transposition coloring survives.
//!
//! `K_1` carries two neighboring clasps `A` and `B` on three strands. Changing a crossing
//! of `A` gives `K_0`, which is colored; changing a crossing of `B` gives `K_2`. The
//! rewrite replaces the section of `K_1` by a braid tangle `K̃_1` that still carries the
//! coloring of `K_0` and is one crossing change from tangles isotopic (rel boundary) to
//! the sections of `K_0` and `K_2`.

mod artin;
mod synth;

pub use artin::{artin_images, braid_equivalent};
pub use synth::{synthesize_k1_tilde, verify_rewrite, Rewrite, DEFAULT_BUDGET};

use serde::{Deserialize, Serialize};

use crate::coloring::{check_coloring, ClassColoring};
use crate::diagram::{Crossing, PlanarDiagram};
use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseLabel {
    Case1,
    Case2a,
    Case2b,
    Case2c,
}

/// Section JSON: `{"clasp_a": [i, j], "clasp_b": [k, l], "arcs": [b1, .., b5]}`. Arc ids
/// refer to the diagram with `clasp_a` changed; `arcs` may be omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionFile {
    pub clasp_a: [usize; 2],
    pub clasp_b: [usize; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arcs: Option<[usize; 5]>,
}

/// Position of the section inside `K_1`, read as a 3-strand braid going up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Frame {
    /// `T_1` in frame positions.
    pub word: Vec<i32>,
    /// `K_1` crossing of each letter.
    pub crossing_of_letter: [usize; 4],
    /// Per bottom position, the `K_1` edges of that strand from bottom to top.
    pub strands: [Vec<usize>; 3],
}

impl Frame {
    pub fn letter_of(&self, crossing: usize) -> usize {
        self.crossing_of_letter.iter().position(|&c| c == crossing).expect("section crossing")
    }

    pub fn bottom(&self) -> [usize; 3] {
        [0, 1, 2].map(|p| self.strands[p][0])
    }

    pub fn top(&self) -> [usize; 3] {
        [0, 1, 2].map(|p| *self.strands[p].last().unwrap())
    }
}

#[derive(Clone, Debug)]
pub struct ClaspSection {
    /// The diagram `K_1`, with both clasps closed.
    pub diagram: PlanarDiagram,
    pub clasp_a: (usize, usize),
    pub clasp_b: (usize, usize),
    /// `b_1..b_5` as arcs of `K_0`: the middle strand entering and leaving `B`, the other
    /// strand of `B` entering and leaving, and the other strand of `A`.
    pub arcs: [usize; 5],
    pub(crate) frame: Frame,
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedSection(msg.into())
}

/// Builds the crossings of `word` on three upward strands whose edges are listed per
/// bottom position. `None` if the word does not consume the edge lists exactly.
pub(crate) fn braid_crossings(word: &[i32], strands: &[Vec<usize>; 3]) -> Option<Vec<Crossing>> {
    let mut at: [usize; 3] = [0, 1, 2];
    let mut cursor = [0usize; 3];
    let mut out = vec![];
    for &l in word {
        let i = l.unsigned_abs() as usize;
        if !(1..=2).contains(&i) {
            return None;
        }
        let (sl, sr) = (at[i - 1], at[i]);
        let edge = |s: usize, k: usize| strands[s].get(k).copied();
        let (l_in, r_in) = (edge(sl, cursor[sl])?, edge(sr, cursor[sr])?);
        // outgoing edges follow the strands, which trade places
        let (l_out, r_out) = (edge(sl, cursor[sl] + 1)?, edge(sr, cursor[sr] + 1)?);
        cursor[sl] += 1;
        cursor[sr] += 1;
        out.push(if l > 0 {
            Crossing::from_roles(r_in, r_out, l_in, l_out, 1)
        } else {
            Crossing::from_roles(l_in, l_out, r_in, r_out, -1)
        });
        at.swap(i - 1, i);
    }
    let complete = (0..3).all(|s| at[s] == s && cursor[s] + 1 == strands[s].len());
    complete.then_some(out)
}

/// Strand permutation of a 3-strand word is trivial.
pub(crate) fn is_pure(word: &[i32]) -> bool {
    let mut at = [0, 1, 2];
    for &l in word {
        let i = l.unsigned_abs() as usize;
        at.swap(i - 1, i);
    }
    at == [0, 1, 2]
}

/// Colors by position after pushing `bottom` up through `word`.
pub(crate) fn push_colors(word: &[i32], bottom: &[Perm; 3]) -> [Perm; 3] {
    let mut c = bottom.clone();
    for &l in word {
        let i = l.unsigned_abs() as usize;
        let (a, b) = (c[i - 1].clone(), c[i].clone());
        if l > 0 {
            // left strand passes over to the right
            c[i - 1] = a.then(&b).then(&a.inverse());
            c[i] = a;
        } else {
            c[i - 1] = b.clone();
            c[i] = b.inverse().then(&a).then(&b);
        }
    }
    c
}

impl ClaspSection {
    pub fn new(
        d: PlanarDiagram,
        clasp_a: (usize, usize),
        clasp_b: (usize, usize),
        arcs: Option<[usize; 5]>,
    ) -> Result<Self> {
        for (name, (i, j)) in [("clasp_a", clasp_a), ("clasp_b", clasp_b)] {
            if !d.is_bigon(i, j) {
                return Err(malformed(format!("{name} ({i}, {j}) is not a bigon")));
            }
        }
        let four = [clasp_a.0, clasp_a.1, clasp_b.0, clasp_b.1];
        if (0..4).any(|i| (i + 1..4).any(|j| four[i] == four[j])) {
            return Err(malformed("clasps share a crossing"));
        }
        let mut head = vec![usize::MAX; d.edge_count()];
        for (c, x) in d.crossings().iter().enumerate() {
            head[x.under_in()] = c;
            head[x.over_in()] = c;
        }
        let in_a = |c: usize| c == clasp_a.0 || c == clasp_a.1;
        let in_b = |c: usize| c == clasp_b.0 || c == clasp_b.1;
        let path = |e: usize, k: usize| {
            let mut v = vec![e];
            for _ in 0..k {
                v.push(d.next_edge(*v.last().unwrap()));
            }
            v
        };
        // the middle strand runs through all four crossings in a row
        let middles: Vec<(Vec<usize>, bool)> = (0..d.edge_count())
            .filter_map(|e| {
                let x = path(e, 4);
                let h: Vec<usize> = x[..4].iter().map(|&k| head[k]).collect();
                let ab = in_a(h[0]) && in_a(h[1]) && in_b(h[2]) && in_b(h[3]);
                let ba = in_b(h[0]) && in_b(h[1]) && in_a(h[2]) && in_a(h[3]);
                (h[0] != h[1] && h[2] != h[3] && (ab || ba)).then_some((x, ab))
            })
            .collect();
        let [(x, a_first)] = middles.as_slice() else {
            return Err(malformed("no strand passes through both clasps in a row"));
        };
        let partner = |c: usize, x_edge: usize| -> Result<Vec<usize>> {
            let cr = &d.crossings()[c];
            let other = if cr.under_in() == x_edge { cr.over_in() } else { cr.under_in() };
            let p = path(other, 2);
            if head[p[1]] != head[x[if c == head[x[0]] { 1 } else { 3 }]] {
                return Err(malformed("clasp strands do not run in parallel"));
            }
            Ok(p)
        };
        let p1 = partner(head[x[0]], x[0])?;
        let p2 = partner(head[x[2]], x[2])?;
        let (z, y) = if *a_first { (&p1, &p2) } else { (&p2, &p1) };

        let mut frame = None;
        'search: for p1_left in [true, false] {
            for e1 in [-1i32, 1] {
                for e2 in [-1i32, 1] {
                    let (i1, i2) = if p1_left { (1, 2) } else { (2, 1) };
                    let word = vec![i1 * e1, i1 * e1, i2 * e2, i2 * e2];
                    let strands =
                        if p1_left { [p1.clone(), x.clone(), p2.clone()] } else { [p2.clone(), x.clone(), p1.clone()] };
                    let Some(built) = braid_crossings(&word, &strands) else { continue };
                    let mut crossing_of_letter = [0; 4];
                    let mut ok = true;
                    for (k, b) in built.iter().enumerate() {
                        match four.iter().find(|&&c| &d.crossings()[c] == b) {
                            Some(&c) => crossing_of_letter[k] = c,
                            None => ok = false,
                        }
                    }
                    if ok {
                        frame = Some(Frame { word, crossing_of_letter, strands });
                        break 'search;
                    }
                }
            }
        }
        let frame = frame.ok_or_else(|| malformed("section is not a braid of two clasps on co-oriented strands"))?;

        let k0 = d.crossing_change(clasp_a.0)?;
        let (b_in, b_out) = if *a_first { (x[2], x[4]) } else { (x[0], x[2]) };
        let derived = [b_in, b_out, y[0], y[2], z[0]].map(|e| k0.arc_of_edge(e));
        if let Some(given) = arcs {
            if given != derived {
                return Err(malformed(format!("arcs {given:?} do not match the section, expected {derived:?}")));
            }
        }
        Ok(ClaspSection { diagram: d, clasp_a, clasp_b, arcs: derived, frame })
    }

    pub fn from_file(d: PlanarDiagram, f: &SectionFile) -> Result<Self> {
        ClaspSection::new(d, (f.clasp_a[0], f.clasp_a[1]), (f.clasp_b[0], f.clasp_b[1]), f.arcs)
    }

    pub fn to_file(&self) -> SectionFile {
        SectionFile {
            clasp_a: [self.clasp_a.0, self.clasp_a.1],
            clasp_b: [self.clasp_b.0, self.clasp_b.1],
            arcs: Some(self.arcs),
        }
    }

    /// `K_0`: the first crossing of clasp `A` changed.
    pub fn k0(&self) -> PlanarDiagram {
        self.diagram.crossing_change(self.clasp_a.0).expect("section crossing")
    }

    /// `K_2`: the first crossing of clasp `B` changed.
    pub fn k2(&self) -> PlanarDiagram {
        self.diagram.crossing_change(self.clasp_b.0).expect("section crossing")
    }

    /// Section of `K_1` as a 3-strand braid word.
    pub fn braid_word(&self) -> &[i32] {
        &self.frame.word
    }

    fn flipped(&self, crossing: usize) -> Vec<i32> {
        let mut w = self.frame.word.clone();
        let k = self.frame.letter_of(crossing);
        w[k] = -w[k];
        w
    }

    /// Section of `K_0` as a braid word.
    pub fn k0_word(&self) -> Vec<i32> {
        self.flipped(self.clasp_a.0)
    }

    /// Section of `K_2` as a braid word.
    pub fn k2_word(&self) -> Vec<i32> {
        self.flipped(self.clasp_b.0)
    }
}

/// Case of the coloring of `K_0` at the section, with precedence 2a, 2b, 2c.
pub fn classify_clasp_case(s: &ClaspSection, col: &ClassColoring) -> Result<CaseLabel> {
    let k0 = s.k0();
    if !check_coloring(&k0, col)?.is_valid() {
        return Err(Error::SpecMismatch("coloring is not valid on the diagram with clasp A changed".into()));
    }
    classify_colors(&s.arcs.map(|a| col.assignment[a].clone()))
}

/// Case from the colors of `b_1..b_5`.
pub fn classify_colors(b: &[Perm; 5]) -> Result<CaseLabel> {
    let [b1, b2, b3, b4, b5] = b.clone();
    if b1 == b2 {
        if b3 != b4 || !b3.commutes_with(&b1) {
            return Err(malformed(format!("b1 = b2 = {b1} but b3 = {b3}, b4 = {b4}")));
        }
        return Ok(CaseLabel::Case1);
    }
    // b1 = (jk), b2 = (ij)
    let s1 = b1.support();
    let s2 = b2.support();
    let common: Vec<usize> = s1.iter().copied().filter(|x| s2.contains(x)).collect();
    if common.len() != 1 || s1.len() != 2 || s2.len() != 2 {
        return Err(malformed(format!("b1 = {b1} and b2 = {b2} do not overlap in one point")));
    }
    let j = common[0];
    let k = s1.iter().copied().find(|&p| p != j).unwrap();
    let i = s2.iter().copied().find(|&p| p != j).unwrap();
    let n = b1.degree();
    let ik = Perm::transposition(n, i, k);
    let jk = Perm::transposition(n, j, k);
    let pair_ok = (b3 == ik && b4 == jk) || (b3 == jk && b4 == ik);
    if !pair_ok {
        return Err(malformed(format!("b3 = {b3}, b4 = {b4}, expected {jk} and {ik}")));
    }
    if b5.commutes_with(&b1) {
        Ok(CaseLabel::Case2a)
    } else if b5.commutes_with(&b2) {
        Ok(CaseLabel::Case2b)
    } else if b5.commutes_with(&ik) {
        Ok(CaseLabel::Case2c)
    } else {
        Err(malformed(format!("b5 = {b5} fits no case")))
    }
}

/// The two diagrams agree edge for edge except at exactly one crossing, which is switched.
pub fn is_one_crossing_adjacent(d1: &PlanarDiagram, d2: &PlanarDiagram) -> bool {
    let (a, b) = (d1.crossings(), d2.crossings());
    if a.len() != b.len() {
        return false;
    }
    let diff: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
    diff.len() == 1 && a[diff[0]].switched() == b[diff[0]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::trefoil;

    fn t(a: usize, b: usize) -> Perm {
        Perm::transposition(5, a - 1, b - 1)
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_colors(&[t(1, 2), t(1, 2), t(3, 4), t(3, 4), t(1, 5)]).unwrap(), CaseLabel::Case1);
        assert_eq!(classify_colors(&[t(2, 3), t(1, 2), t(1, 3), t(2, 3), t(2, 3)]).unwrap(), CaseLabel::Case2a);
        assert_eq!(classify_colors(&[t(2, 3), t(1, 2), t(1, 3), t(2, 3), t(4, 5)]).unwrap(), CaseLabel::Case2a);
        assert_eq!(classify_colors(&[t(2, 3), t(1, 2), t(1, 3), t(2, 3), t(3, 4)]).unwrap(), CaseLabel::Case2b);
        assert_eq!(classify_colors(&[t(2, 3), t(1, 2), t(1, 3), t(2, 3), t(1, 3)]).unwrap(), CaseLabel::Case2c);
        assert_eq!(classify_colors(&[t(2, 3), t(1, 2), t(1, 3), t(2, 3), t(2, 4)]).unwrap(), CaseLabel::Case2c);
        assert!(matches!(
            classify_colors(&[t(1, 2), t(1, 2), t(1, 3), t(3, 4), t(1, 5)]),
            Err(Error::MalformedSection(_))
        ));
        assert!(classify_colors(&[t(1, 2), t(3, 4), t(1, 3), t(3, 4), t(1, 5)]).is_err());
    }

    #[test]
    fn classification_is_total() {
        // every overlapping pair with the forced b3, b4 and any b5 gets a label
        let all: Vec<Perm> = crate::coloring::ClassSpec::transpositions(5).elements();
        let (b1, b2) = (t(2, 3), t(1, 2));
        for b5 in &all {
            assert!(classify_colors(&[b1.clone(), b2.clone(), t(1, 3), t(2, 3), b5.clone()]).is_ok());
        }
    }

    #[test]
    fn adjacency() {
        let d = trefoil();
        let c = d.crossing_change(1).unwrap();
        assert!(is_one_crossing_adjacent(&d, &c));
        assert!(!is_one_crossing_adjacent(&d, &d));
        assert!(!is_one_crossing_adjacent(&d, &c.crossing_change(2).unwrap()));
    }

    #[test]
    fn words_and_colors() {
        assert!(is_pure(&[1, 1, -2, 2]));
        assert!(!is_pure(&[1, 2]));
        let c = [t(1, 2), t(2, 3), t(4, 5)];
        assert_eq!(push_colors(&[1, -1], &c), c);
        let strands = [vec![0, 2], vec![1, 3], vec![4]];
        let x = braid_crossings(&[1], &[vec![0, 10], vec![1, 11], vec![4]]);
        assert!(x.is_none(), "strands trade places");
        assert_eq!(braid_crossings(&[1, 1], &[vec![0, 5, 2], vec![1, 6, 3], vec![4]]).unwrap().len(), 2);
        assert!(braid_crossings(&[1, 1], &strands).is_none());
    }
}

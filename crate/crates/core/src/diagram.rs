//! Oriented knot diagrams in PD form.
//!
//! Each crossing lists its four edges counterclockwise starting from the incoming
//! under-edge, plus an explicit sign. Edges are the `2C` segments between crossings;
//! arcs (Wirtinger generators) are maximal runs of edges between undercrossings and
//! are numbered in traversal order starting from the arc that contains edge 0.

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::morse::{BoundaryPoint, Level, MorseDiagram};
use crate::presentation::{GroupPresentation, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub edges: [usize; 4],
    pub sign: i8,
}

impl Crossing {
    pub fn from_roles(under_in: usize, under_out: usize, over_in: usize, over_out: usize, sign: i8) -> Self {
        // Positive: the over strand runs from the fourth slot to the second.
        let edges =
            if sign > 0 { [under_in, over_out, under_out, over_in] } else { [under_in, over_in, under_out, over_out] };
        Crossing { edges, sign }
    }

    pub fn under_in(&self) -> usize {
        self.edges[0]
    }
    pub fn under_out(&self) -> usize {
        self.edges[2]
    }
    pub fn over_in(&self) -> usize {
        if self.sign > 0 {
            self.edges[3]
        } else {
            self.edges[1]
        }
    }
    pub fn over_out(&self) -> usize {
        if self.sign > 0 {
            self.edges[1]
        } else {
            self.edges[3]
        }
    }

    /// Same crossing with the strands' over/under roles exchanged.
    pub fn switched(&self) -> Self {
        Crossing::from_roles(self.over_in(), self.over_out(), self.under_in(), self.under_out(), -self.sign)
    }

    /// The crossing seen in a mirror held against the page: same strands over and
    /// under, reversed cyclic order, opposite sign.
    pub fn reflected(&self) -> Self {
        let [a, b, c, d] = self.edges;
        Crossing { edges: [a, d, c, b], sign: -self.sign }
    }
}

/// Arc ids meeting at a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingArcs {
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub sign: i8,
}

#[derive(Clone, Debug)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    clasps: Vec<(usize, usize)>,
    seed_edges: Vec<usize>,
    // derived
    next_edge: Vec<usize>,
    arc_of_edge: Vec<usize>,
    arc_count: usize,
    arcs: Vec<CrossingArcs>,
}

impl PartialEq for PlanarDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings && self.clasps == other.clasps && self.seed_edges == other.seed_edges
    }
}
impl Eq for PlanarDiagram {}

impl PlanarDiagram {
    pub fn new(crossings: Vec<Crossing>, clasps: Vec<(usize, usize)>) -> Result<Self> {
        let c = crossings.len();
        let e = 2 * c;
        for (i, x) in crossings.iter().enumerate() {
            if x.sign != 1 && x.sign != -1 {
                return Err(Error::InvalidDiagram(format!("crossing {i} has sign {}", x.sign)));
            }
            if let Some(&bad) = x.edges.iter().find(|&&k| k >= e) {
                return Err(Error::InvalidDiagram(format!("crossing {i} uses edge {bad}, only {e} edges")));
            }
        }
        let mut next_edge = vec![usize::MAX; e];
        let mut has_tail = vec![false; e];
        for x in &crossings {
            for (i, o) in [(x.under_in(), x.under_out()), (x.over_in(), x.over_out())] {
                if next_edge[i] != usize::MAX {
                    return Err(Error::InvalidDiagram(format!("edge {i} enters two crossings")));
                }
                if has_tail[o] {
                    return Err(Error::InvalidDiagram(format!("edge {o} leaves two crossings")));
                }
                next_edge[i] = o;
                has_tail[o] = true;
            }
        }
        if c > 0 {
            let mut len = 0;
            let mut k = 0;
            loop {
                k = next_edge[k];
                len += 1;
                if k == 0 || len > e {
                    break;
                }
            }
            if len != e {
                let comps = count_cycles(&next_edge);
                return Err(Error::InvalidDiagram(format!("diagram has {comps} components, expected one")));
            }
        }

        // under_in edges end an arc
        let mut ends_arc = vec![false; e];
        for x in &crossings {
            ends_arc[x.under_in()] = true;
        }
        let mut arc_of_edge = vec![0; e];
        let mut arc = 0;
        if c > 0 {
            let mut k = 0;
            for _ in 0..e {
                arc_of_edge[k] = arc % c;
                if ends_arc[k] {
                    arc += 1;
                }
                k = next_edge[k];
            }
        }
        let arc_count = c.max(1);
        let arcs = crossings
            .iter()
            .map(|x| CrossingArcs {
                over: arc_of_edge[x.over_in()],
                under_in: arc_of_edge[x.under_in()],
                under_out: arc_of_edge[x.under_out()],
                sign: x.sign,
            })
            .collect();
        let d =
            PlanarDiagram { crossings, clasps: vec![], seed_edges: vec![], next_edge, arc_of_edge, arc_count, arcs };
        d.with_clasps(clasps)
    }

    pub fn trivial() -> Self {
        PlanarDiagram::new(vec![], vec![]).expect("empty diagram is valid")
    }

    pub fn with_clasps(mut self, clasps: Vec<(usize, usize)>) -> Result<Self> {
        for &(i, j) in &clasps {
            if !self.is_bigon(i, j) {
                return Err(Error::InvalidDiagram(format!("clasp ({i}, {j}) is not a bigon")));
            }
        }
        self.clasps = clasps;
        Ok(self)
    }

    pub fn with_seed_edges(mut self, seeds: Vec<usize>) -> Result<Self> {
        if let Some(&s) = seeds.iter().find(|&&s| s >= self.edge_count().max(1)) {
            return Err(Error::InvalidDiagram(format!("seed edge {s} out of range")));
        }
        self.seed_edges = seeds;
        Ok(self)
    }

    /// Two distinct crossings joined by two distinct edges.
    pub fn is_bigon(&self, i: usize, j: usize) -> bool {
        if i == j || i >= self.crossings.len() || j >= self.crossings.len() {
            return false;
        }
        let a = &self.crossings[i].edges;
        let b = &self.crossings[j].edges;
        let mut shared: Vec<usize> = a.iter().filter(|e| b.contains(e)).copied().collect();
        shared.sort_unstable();
        shared.dedup();
        shared.len() >= 2
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }
    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }
    pub fn arc_count(&self) -> usize {
        self.arc_count
    }
    pub fn clasps(&self) -> &[(usize, usize)] {
        &self.clasps
    }
    pub fn seed_edges(&self) -> &[usize] {
        &self.seed_edges
    }
    pub fn is_trivial(&self) -> bool {
        self.crossings.is_empty()
    }
    pub fn next_edge(&self, e: usize) -> usize {
        self.next_edge[e]
    }
    pub fn arc_of_edge(&self, e: usize) -> usize {
        if self.is_trivial() {
            0
        } else {
            self.arc_of_edge[e]
        }
    }
    pub fn crossing_arcs(&self) -> &[CrossingArcs] {
        &self.arcs
    }
    /// Arcs holding the seed edges (for braid closures: the bottom strands, left to right).
    pub fn seed_arcs(&self) -> Vec<usize> {
        self.seed_edges.iter().map(|&e| self.arc_of_edge(e)).collect()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|x| x.sign as i64).sum()
    }

    /// Edges in traversal order starting from `start`.
    pub fn traversal(&self, start: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.edge_count());
        if self.is_trivial() {
            return out;
        }
        let mut k = start;
        loop {
            out.push(k);
            k = self.next_edge[k];
            if k == start {
                break;
            }
        }
        out
    }

    /// First edge of `arc` along the traversal from edge 0.
    pub fn first_edge_of_arc(&self, arc: usize) -> Result<usize> {
        if arc >= self.arc_count {
            return Err(Error::InvalidArc(arc));
        }
        if self.is_trivial() {
            return Ok(0);
        }
        let ends: Vec<usize> = self.crossings.iter().map(|x| x.under_in()).collect();
        // an arc starts right after an under_in edge; arc 0 may wrap, take its first edge after the wrap
        let t = self.traversal(0);
        let mut prev_ended = ends.contains(t.last().unwrap());
        for &k in &t {
            if prev_ended && self.arc_of_edge[k] == arc {
                return Ok(k);
            }
            prev_ended = ends.contains(&k);
        }
        Err(Error::InvalidArc(arc))
    }

    /// Number of arcs that pass over at least one crossing (one for the trivial diagram).
    pub fn overpass_count(&self) -> usize {
        let mut over = vec![false; self.arc_count];
        for a in &self.arcs {
            over[a.over] = true;
        }
        over.iter().filter(|&&b| b).count().max(1)
    }

    /// Renumbers edges along the traversal so that `start` becomes edge 0.
    pub fn relabeled_from(&self, start: usize) -> PlanarDiagram {
        if self.is_trivial() {
            return self.clone();
        }
        let mut label = vec![0; self.edge_count()];
        for (i, &k) in self.traversal(start).iter().enumerate() {
            label[k] = i;
        }
        let crossings =
            self.crossings.iter().map(|x| Crossing { edges: x.edges.map(|k| label[k]), sign: x.sign }).collect();
        PlanarDiagram::new(crossings, self.clasps.clone())
            .and_then(|d| d.with_seed_edges(self.seed_edges.iter().map(|&k| label[k]).collect()))
            .expect("relabeling preserves validity")
    }

    pub fn crossing_change(&self, c: usize) -> Result<PlanarDiagram> {
        if c >= self.crossings.len() {
            return Err(Error::InvalidCrossing(c));
        }
        let mut crossings = self.crossings.clone();
        crossings[c] = crossings[c].switched();
        self.rebuilt(crossings)
    }

    /// Mirror image by reflecting the plane. Edges and arcs keep their labels.
    pub fn mirror(&self) -> PlanarDiagram {
        let crossings = self.crossings.iter().map(|x| x.reflected()).collect();
        self.rebuilt(crossings).expect("mirror preserves validity")
    }

    fn rebuilt(&self, crossings: Vec<Crossing>) -> Result<PlanarDiagram> {
        PlanarDiagram::new(crossings, self.clasps.clone())?.with_seed_edges(self.seed_edges.clone())
    }

    /// Connected sum, splicing the first edge of arc `a1` of `self` with the first edge of arc `a2` of `other`.
    pub fn connected_sum(&self, other: &PlanarDiagram, a1: usize, a2: usize) -> Result<PlanarDiagram> {
        if a1 >= self.arc_count {
            return Err(Error::InvalidArc(a1));
        }
        if a2 >= other.arc_count {
            return Err(Error::InvalidArc(a2));
        }
        if self.is_trivial() {
            return Ok(other.clone());
        }
        if other.is_trivial() {
            return Ok(self.clone());
        }
        let e1 = self.first_edge_of_arc(a1)?;
        let e2 = other.first_edge_of_arc(a2)? + self.edge_count();
        let off = self.edge_count();
        let c1 = self.crossing_count();
        let mut crossings: Vec<Crossing> = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|x| Crossing { edges: x.edges.map(|k| k + off), sign: x.sign }));
        // e1 now runs into e2's head crossing and e2 into e1's head crossing
        let head = |xs: &[Crossing], e: usize| -> (usize, usize) {
            for (ci, x) in xs.iter().enumerate() {
                if x.under_in() == e {
                    return (ci, 0);
                }
                if x.over_in() == e {
                    let slot = if x.sign > 0 { 3 } else { 1 };
                    return (ci, slot);
                }
            }
            unreachable!("every edge has a head")
        };
        let h1 = head(&crossings, e1);
        let h2 = head(&crossings, e2);
        crossings[h1.0].edges[h1.1] = e2;
        crossings[h2.0].edges[h2.1] = e1;
        let mut clasps = self.clasps.clone();
        clasps.extend(other.clasps.iter().map(|&(i, j)| (i + c1, j + c1)));
        let d = PlanarDiagram::new(crossings, clasps)?;
        Ok(d.relabeled_from(0))
    }

    /// Wirtinger presentation: one meridian generator per arc, one relator
    /// `x_out · x_over^ε · x_in^-1 · x_over^-ε` per crossing of sign `ε`.
    pub fn wirtinger(&self) -> GroupPresentation {
        let relators = self
            .arcs
            .iter()
            .map(|a| {
                vec![
                    Letter::new(a.under_out, 1),
                    Letter::new(a.over, a.sign),
                    Letter::new(a.under_in, -1),
                    Letter::new(a.over, -a.sign),
                ]
            })
            .collect();
        let mut p = GroupPresentation::new(self.arc_count, relators);
        p.meridians = vec![true; self.arc_count];
        p.labels = (0..self.arc_count).map(|i| Some(format!("x{i}"))).collect();
        p
    }

    /// Preferred longitude based at `base_arc`: the product of over-arc meridians met at
    /// undercrossings (later crossings on the left), times `x_base^-writhe`.
    pub fn longitude_word(&self, base_arc: usize) -> Result<Word> {
        if base_arc >= self.arc_count {
            return Err(Error::InvalidArc(base_arc));
        }
        if self.is_trivial() {
            return Ok(vec![]);
        }
        let start = self.first_edge_of_arc(base_arc)?;
        let mut under_at = vec![None; self.edge_count()];
        for (ci, x) in self.crossings.iter().enumerate() {
            under_at[x.under_in()] = Some(ci);
        }
        let mut w: Word = vec![];
        for k in self.traversal(start) {
            if let Some(ci) = under_at[k] {
                let a = self.arcs[ci];
                w.push(Letter::new(a.over, a.sign));
            }
        }
        w.reverse();
        let writhe = self.writhe();
        let e = if writhe > 0 { -1 } else { 1 };
        w.extend(std::iter::repeat(Letter::new(base_arc, e)).take(writhe.unsigned_abs() as usize));
        Ok(w)
    }

    pub fn to_pd(&self) -> PdFile {
        PdFile {
            crossings: self.crossings.iter().map(|x| x.edges).collect(),
            signs: self.crossings.iter().map(|x| x.sign).collect(),
            clasps: self.clasps.iter().map(|&(i, j)| [i, j]).collect(),
            seed_edges: self.seed_edges.clone(),
        }
    }

    pub fn from_pd(pd: &PdFile) -> Result<PlanarDiagram> {
        if pd.crossings.len() != pd.signs.len() {
            return Err(Error::InvalidDiagram(format!(
                "{} crossings but {} signs",
                pd.crossings.len(),
                pd.signs.len()
            )));
        }
        let crossings = pd.crossings.iter().zip(&pd.signs).map(|(&edges, &sign)| Crossing { edges, sign }).collect();
        PlanarDiagram::new(crossings, pd.clasps.iter().map(|c| (c[0], c[1])).collect())?
            .with_seed_edges(pd.seed_edges.clone())
    }
}

fn count_cycles(next: &[usize]) -> usize {
    let mut seen = vec![false; next.len()];
    let mut n = 0;
    for s in 0..next.len() {
        if seen[s] {
            continue;
        }
        n += 1;
        let mut k = s;
        while !seen[k] && k != usize::MAX {
            seen[k] = true;
            k = next[k];
        }
    }
    n
}

/// PD file schema. Edges are 0-based; each crossing is listed counterclockwise from
/// its incoming under-edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdFile {
    pub crossings: Vec<[usize; 4]>,
    pub signs: Vec<i8>,
    #[serde(default)]
    pub clasps: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub seed_edges: Vec<usize>,
}

/// Plat closure of a braid: nested cups, the braid, nested caps.
fn closure_levels(b: &BraidWord) -> Vec<Level> {
    let n = b.strands;
    let mut levels: Vec<Level> = (1..=n).map(Level::Cup).collect();
    levels.extend(b.letters.iter().map(|&l| Level::Cross(l.unsigned_abs() as usize, l.signum() as i8)));
    levels.extend((1..=n).rev().map(Level::Cap));
    levels
}

/// Closure of a braid, oriented upward through the braid. Edge 0 starts at the bottom
/// of strand 1; the seed edges are the bottom of each strand, left to right.
pub fn braid_closure(b: &BraidWord) -> Result<PlanarDiagram> {
    braid_closure_with_letters(b).map(|(d, _)| d)
}

/// [`braid_closure`] together with the crossing index of each braid letter.
pub fn braid_closure_with_letters(b: &BraidWord) -> Result<(PlanarDiagram, Vec<usize>)> {
    b.validate()?;
    let comps = b.closure_components();
    if comps != 1 {
        return Err(Error::MultiComponentClosure(comps));
    }
    let n = b.strands;
    let morse = MorseDiagram::new(closure_levels(b));
    let bottom = n; // boundary after the n cups
    let marks: Vec<BoundaryPoint> = (1..=n).map(|p| BoundaryPoint { level: bottom, pos: p }).collect();
    let t = morse.trace(BoundaryPoint { level: bottom, pos: 1 }, &marks)?;
    let letters = t.crossing_of_level[n..n + b.letters.len()].iter().map(|c| c.unwrap()).collect();
    Ok((t.diagram.with_seed_edges(t.marked_edges)?, letters))
}

/// Whitehead double `K_m` of `T(2,5)^m`: closure of `β_m` with a clasp spliced into the
/// top of strands 1 and 2. `clasp_sign` selects the hooking (`+1` or `-1`).
pub fn whitehead_double_with_clasp(m: usize, clasp_sign: i8) -> Result<PlanarDiagram> {
    let b = crate::braid::whitehead_companion_braid(m);
    let n = b.strands;
    let mut levels: Vec<Level> = (1..=n).map(Level::Cup).collect();
    levels.extend(b.letters.iter().map(|&l| Level::Cross(l.unsigned_abs() as usize, l.signum() as i8)));
    // cup between strands 1 and 2, hook its legs with the cap that joins them
    levels.push(Level::Cup(2));
    let clasp_levels = [levels.len(), levels.len() + 1];
    levels.push(Level::Cross(1, clasp_sign));
    levels.push(Level::Cross(3, clasp_sign));
    levels.push(Level::Cap(2));
    levels.extend((1..=n).rev().map(Level::Cap));
    let morse = MorseDiagram::new(levels);
    let marks: Vec<BoundaryPoint> = (1..=n).map(|p| BoundaryPoint { level: n, pos: p }).collect();
    let t = morse.trace(BoundaryPoint { level: n, pos: 1 }, &marks)?;
    let clasp = (t.crossing_of_level[clasp_levels[0]].unwrap(), t.crossing_of_level[clasp_levels[1]].unwrap());
    t.diagram.with_clasps(vec![clasp])?.with_seed_edges(t.marked_edges)
}

/// Whitehead double with the clasp orientation that carries the consecutive-transposition
/// coloring of the bottom strands.
pub fn whitehead_double_diagram(m: usize) -> Result<PlanarDiagram> {
    whitehead_double_with_clasp(m, WHITEHEAD_CLASP_SIGN)
}

/// Fixed by running the coloring checker on both hookings of the `m = 1` diagram.
pub const WHITEHEAD_CLASP_SIGN: i8 = 1;

/// Pretzel knot `P(p, q, r)` (odd entries) as a plat: three twisted columns.
pub fn pretzel(cols: [i32; 3]) -> Result<PlanarDiagram> {
    let mut levels = vec![Level::Cup(1), Level::Cup(2), Level::Cup(4)];
    for (k, &t) in cols.iter().enumerate() {
        let pos = 2 * k + 1;
        levels.extend(std::iter::repeat(Level::Cross(pos, t.signum() as i8)).take(t.unsigned_abs() as usize));
    }
    levels.extend([Level::Cap(4), Level::Cap(2), Level::Cap(1)]);
    let t = MorseDiagram::new(levels).trace(BoundaryPoint { level: 3, pos: 1 }, &[])?;
    Ok(t.diagram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::trefoil_sum_braid;

    pub(crate) fn trefoil() -> PlanarDiagram {
        braid_closure(&BraidWord::new(2, vec![1, 1, 1]).unwrap()).unwrap()
    }

    #[test]
    fn trefoil_closure() {
        let d = trefoil();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.arc_count(), 3);
        assert!(d.crossings().iter().all(|x| x.sign == 1));
        assert_eq!(d.seed_arcs(), vec![0, 1]);
        assert_eq!(d.seed_edges()[0], 0);
    }

    #[test]
    fn trivial_diagram() {
        let d = braid_closure(&BraidWord::new(1, vec![]).unwrap()).unwrap();
        assert!(d.is_trivial());
        assert_eq!(d.arc_count(), 1);
        let w = d.wirtinger();
        assert_eq!(w.generator_count, 1);
        assert!(w.relators.is_empty());
        assert!(d.longitude_word(0).unwrap().is_empty());
    }

    #[test]
    fn t25_closure() {
        let d = braid_closure(&BraidWord::new(2, vec![1; 5]).unwrap()).unwrap();
        assert_eq!(d.crossing_count(), 5);
        assert_eq!(d.arc_count(), 5);
    }

    #[test]
    fn multi_component_rejected() {
        let e = braid_closure(&BraidWord::new(2, vec![1, 1]).unwrap()).unwrap_err();
        assert_eq!(e, Error::MultiComponentClosure(2));
    }

    #[test]
    fn crossing_change_involution() {
        let d = trefoil();
        let e = d.crossing_change(1).unwrap();
        assert_ne!(d, e);
        assert_eq!(e.crossing_change(1).unwrap(), d);
        let differing = d.crossings().iter().zip(e.crossings()).filter(|(a, b)| a != b).count();
        assert_eq!(differing, 1);
        assert_eq!(d.crossing_change(3).unwrap_err(), Error::InvalidCrossing(3));
    }

    #[test]
    fn mirror_flips_signs() {
        let d = trefoil();
        let m = d.mirror();
        assert!(m.crossings().iter().all(|x| x.sign == -1));
        assert_eq!(m.mirror(), d);
    }

    #[test]
    fn connected_sum_counts() {
        let d = trefoil();
        let s = d.connected_sum(&d, 0, 0).unwrap();
        assert_eq!(s.crossing_count(), 6);
        assert_eq!(s.arc_count(), 6);
        let t = PlanarDiagram::trivial();
        assert_eq!(t.connected_sum(&d, 0, 1).unwrap(), d);
        assert_eq!(d.connected_sum(&d, 5, 0).unwrap_err(), Error::InvalidArc(5));
        let g = braid_closure(&trefoil_sum_braid(2)).unwrap();
        assert_eq!(g.crossing_count(), s.crossing_count());
    }

    #[test]
    fn wirtinger_shape() {
        let w = trefoil().wirtinger();
        assert_eq!(w.generator_count, 3);
        assert_eq!(w.relators.len(), 3);
        assert!(w.relators.iter().all(|r| r.len() == 4));
        assert!(w.meridians.iter().all(|&m| m));
    }

    #[test]
    fn longitude_exponent_sum_vanishes() {
        let d = braid_closure(&trefoil_sum_braid(2)).unwrap();
        for a in 0..d.arc_count() {
            let l = d.longitude_word(a).unwrap();
            assert_eq!(l.iter().map(|x| x.exp as i64).sum::<i64>(), 0);
        }
    }

    #[test]
    fn pd_roundtrip() {
        let d = trefoil();
        let json = serde_json::to_string(&d.to_pd()).unwrap();
        let back: PdFile = serde_json::from_str(&json).unwrap();
        assert_eq!(PlanarDiagram::from_pd(&back).unwrap(), d);
    }

    #[test]
    fn rejects_two_components() {
        // Hopf link: edges 0,1 on one component and 2,3 on the other
        let pd = PdFile {
            crossings: vec![[0, 3, 1, 2], [3, 0, 2, 1]],
            signs: vec![1, 1],
            clasps: vec![],
            seed_edges: vec![],
        };
        assert!(PlanarDiagram::from_pd(&pd).is_err());
    }

    #[test]
    fn whitehead_double_is_a_knot() {
        for m in 1..=2 {
            let d = whitehead_double_diagram(m).unwrap();
            assert_eq!(d.crossing_count(), 21 * m + 1 + 2);
            assert_eq!(d.arc_count(), d.crossing_count());
            assert_eq!(d.clasps().len(), 1);
            assert_eq!(d.seed_arcs().len(), 2 * m + 2);
        }
    }

    #[test]
    fn pretzel_is_a_knot() {
        let d = pretzel([3, 3, 3]).unwrap();
        assert_eq!(d.crossing_count(), 9);
    }
}

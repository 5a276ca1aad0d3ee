//! Bounded search for the replacement tangle.

use std::collections::BTreeMap;

use super::artin::artin_images;
use super::{
    braid_crossings, classify_clasp_case, is_one_crossing_adjacent, is_pure, push_colors, CaseLabel, ClaspSection,
};
use crate::coloring::{check_coloring, ClassColoring};
use crate::diagram::{Crossing, PlanarDiagram};
use crate::error::{Error, Result};
use crate::perm::Perm;

pub const DEFAULT_BUDGET: usize = 8;

/// Letters tried at each position, in this order.
const LETTERS: [i32; 4] = [1, -1, 2, -2];

#[derive(Clone, Debug)]
pub struct Rewrite {
    pub case: CaseLabel,
    /// Section of `K̃_1` as a 3-strand braid word in the frame of the section.
    pub word: Vec<i32>,
    pub diagram: PlanarDiagram,
    pub coloring: ClassColoring,
    /// Crossing of `diagram` whose change gives the `K_0` side.
    pub to_k0: usize,
    /// Crossing of `diagram` whose change gives the `K_2` side.
    pub to_k2: usize,
    pub k0_witness: PlanarDiagram,
    pub k2_witness: PlanarDiagram,
}

/// Replaces the section of `K_1` by a tangle carrying the coloring of `K_0`.
///
/// Case 2a keeps `K_1`. Otherwise words on three strands are tried by length up to
/// `budget`, then lexicographically; a word is accepted when it is a pure braid, carries
/// the boundary colors, and single crossing changes turn it into braids equal to the
/// sections of `K_0` and `K_2`.
pub fn synthesize_k1_tilde(s: &ClaspSection, col: &ClassColoring, budget: usize) -> Result<Rewrite> {
    let case = classify_clasp_case(s, col)?;
    let k0 = s.k0();
    let edge_color: Vec<Perm> =
        (0..k0.edge_count().max(1)).map(|e| col.assignment[k0.arc_of_edge(e)].clone()).collect();
    let bottom = s.frame.bottom().map(|e| edge_color[e].clone());
    let top = s.frame.top().map(|e| edge_color[e].clone());

    if case == CaseLabel::Case2a {
        let word = s.frame.word.clone();
        if push_colors(&word, &bottom) != top {
            return Err(Error::MalformedSection("case 2a colors do not pass the clasps".into()));
        }
        let coloring = transport(&s.diagram, &edge_color, &s.frame.strands, &word, &bottom)?;
        let rw = Rewrite {
            case,
            word,
            diagram: s.diagram.clone(),
            coloring,
            to_k0: s.clasp_a.0,
            to_k2: s.clasp_b.0,
            k0_witness: k0,
            k2_witness: s.k2(),
        };
        return Ok(rw);
    }

    let target0 = artin_images(3, &s.k0_word());
    let target2 = artin_images(3, &s.k2_word());
    for len in 1..=budget {
        let mut idx = vec![0usize; len];
        loop {
            let word: Vec<i32> = idx.iter().map(|&i| LETTERS[i]).collect();
            if let Some(rw) = try_word(s, col, case, &word, &edge_color, &bottom, &top, &target0, &target2)? {
                return Ok(rw);
            }
            if !advance(&mut idx) {
                break;
            }
        }
    }
    Err(Error::SynthesisExhausted(budget))
}

/// Next index tuple in lexicographic order; `false` after the last.
fn advance(idx: &mut [usize]) -> bool {
    for k in (0..idx.len()).rev() {
        idx[k] += 1;
        if idx[k] < LETTERS.len() {
            return true;
        }
        idx[k] = 0;
    }
    false
}

fn flip(word: &[i32], k: usize) -> Vec<i32> {
    let mut w = word.to_vec();
    w[k] = -w[k];
    w
}

#[allow(clippy::too_many_arguments)]
fn try_word(
    s: &ClaspSection,
    col: &ClassColoring,
    case: CaseLabel,
    word: &[i32],
    edge_color: &[Perm],
    bottom: &[Perm; 3],
    top: &[Perm; 3],
    target0: &[Vec<i32>],
    target2: &[Vec<i32>],
) -> Result<Option<Rewrite>> {
    if !is_pure(word) || &push_colors(word, bottom) != top {
        return Ok(None);
    }
    let p = (0..word.len()).find(|&k| artin_images(3, &flip(word, k)) == target0);
    let q = (0..word.len()).find(|&k| artin_images(3, &flip(word, k)) == target2);
    let (Some(p), Some(q)) = (p, q) else { return Ok(None) };
    let (diagram, first_letter, edge_map) = splice(&s.diagram, &s.frame, word)?;
    // colors of the fresh edges come from pushing the boundary colors through the word
    let mut colors: BTreeMap<usize, Perm> = BTreeMap::new();
    for (old, new) in &edge_map {
        if *old < edge_color.len() {
            colors.insert(*new, edge_color[*old].clone());
        }
    }
    let strands = fresh_strands(&s.diagram, &s.frame, word, &edge_map);
    let coloring = transport(&diagram, &dense(&diagram, &colors), &strands, word, bottom)?;
    if !check_coloring(&diagram, &coloring)?.is_valid() || !coloring.is_surjective() || coloring.spec != col.spec {
        return Ok(None);
    }
    let to_k0 = first_letter + p;
    let to_k2 = first_letter + q;
    Ok(Some(Rewrite {
        case,
        word: word.to_vec(),
        k0_witness: diagram.crossing_change(to_k0)?,
        k2_witness: diagram.crossing_change(to_k2)?,
        diagram,
        coloring,
        to_k0,
        to_k2,
    }))
}

fn dense(d: &PlanarDiagram, colors: &BTreeMap<usize, Perm>) -> Vec<Perm> {
    let filler = colors.values().next().cloned().expect("boundary colors");
    (0..d.edge_count()).map(|e| colors.get(&e).cloned().unwrap_or_else(|| filler.clone())).collect()
}

/// Edge labels of a section word spliced with [`splice`], per bottom position.
fn fresh_strands(
    d: &PlanarDiagram,
    frame: &super::Frame,
    word: &[i32],
    edge_map: &BTreeMap<usize, usize>,
) -> [Vec<usize>; 3] {
    let (raw, _) = raw_strands(d, frame, word);
    raw.map(|s| s.iter().map(|e| edge_map[e]).collect())
}

/// Strand edge lists for `word`, with fresh internal labels from `d.edge_count()` up.
/// Also returns merges `(out, in)` for strands that cross nothing.
fn raw_strands(d: &PlanarDiagram, frame: &super::Frame, word: &[i32]) -> ([Vec<usize>; 3], Vec<(usize, usize)>) {
    let mut next = d.edge_count();
    let mut uses = [0usize; 3];
    let mut at = [0usize, 1, 2];
    for &l in word {
        let i = l.unsigned_abs() as usize;
        uses[at[i - 1]] += 1;
        uses[at[i]] += 1;
        at.swap(i - 1, i);
    }
    let bottom = frame.bottom();
    let top = frame.top();
    let mut merges = vec![];
    let strands = [0, 1, 2].map(|p| {
        let mut v = vec![bottom[p]];
        if uses[p] == 0 {
            merges.push((top[p], bottom[p]));
            return v;
        }
        for _ in 1..uses[p] {
            v.push(next);
            next += 1;
        }
        v.push(top[p]);
        v
    });
    (strands, merges)
}

/// `K_1` with its section replaced by `word`. Returns the diagram, the index of the first
/// section crossing (section crossings come last, in letter order), and the edge map.
fn splice(
    d: &PlanarDiagram,
    frame: &super::Frame,
    word: &[i32],
) -> Result<(PlanarDiagram, usize, BTreeMap<usize, usize>)> {
    let (strands, merges) = raw_strands(d, frame, word);
    let inner = braid_crossings(word, &strands)
        .ok_or_else(|| Error::MalformedSection("word does not fit the section".into()))?;
    let rename = |e: usize| merges.iter().find(|(o, _)| *o == e).map_or(e, |(_, i)| *i);
    let mut crossings: Vec<Crossing> = d
        .crossings()
        .iter()
        .enumerate()
        .filter(|(c, _)| !frame.crossing_of_letter.contains(c))
        .map(|(_, x)| Crossing { edges: x.edges.map(rename), sign: x.sign })
        .collect();
    let first_letter = crossings.len();
    crossings.extend(inner);
    let mut used: Vec<usize> = crossings.iter().flat_map(|x| x.edges).collect();
    used.sort_unstable();
    used.dedup();
    let mut edge_map: BTreeMap<usize, usize> = used.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    for (o, i) in &merges {
        edge_map.insert(*o, edge_map[i]);
    }
    let compact: Vec<Crossing> =
        crossings.iter().map(|x| Crossing { edges: x.edges.map(|e| edge_map[&e]), sign: x.sign }).collect();
    let spliced = PlanarDiagram::new(compact, vec![])?;
    Ok((spliced, first_letter, edge_map))
}

/// Arc coloring of `d` from edge colors outside the section and the colors pushed
/// through `word` along `strands`.
fn transport(
    d: &PlanarDiagram,
    edge_color: &[Perm],
    strands: &[Vec<usize>; 3],
    word: &[i32],
    bottom: &[Perm; 3],
) -> Result<ClassColoring> {
    let mut ec = edge_color.to_vec();
    let mut c = bottom.clone();
    let mut at = [0usize, 1, 2];
    let mut cursor = [0usize; 3];
    for &l in word {
        let i = l.unsigned_abs() as usize;
        c = push_colors(&[if l > 0 { 1 } else { -1 } * i as i32], &c);
        at.swap(i - 1, i);
        for p in [i - 1, i] {
            let s = at[p];
            cursor[s] += 1;
            ec[strands[s][cursor[s]]] = c[p].clone();
        }
    }
    let mut assignment: Vec<Option<Perm>> = vec![None; d.arc_count()];
    for e in 0..d.edge_count() {
        let a = d.arc_of_edge(e);
        match &assignment[a] {
            Some(p) if p != &ec[e] => return Err(Error::MalformedSection(format!("arc {a} gets two colors"))),
            Some(_) => {}
            None => assignment[a] = Some(ec[e].clone()),
        }
    }
    let spec = crate::coloring::ClassSpec::transpositions(bottom[0].degree());
    ClassColoring::new(spec, assignment.into_iter().map(|p| p.expect("every arc has an edge")).collect())
}

/// Checks the three contracts of a rewrite against its section.
pub fn verify_rewrite(s: &ClaspSection, col: &ClassColoring, rw: &Rewrite) -> bool {
    let valid = check_coloring(&rw.diagram, &rw.coloring).map(|c| c.is_valid()).unwrap_or(false)
        && rw.coloring.is_surjective()
        && rw.coloring.spec == col.spec;
    let adjacent =
        is_one_crossing_adjacent(&rw.diagram, &rw.k0_witness) && is_one_crossing_adjacent(&rw.diagram, &rw.k2_witness);
    let sides = if rw.case == CaseLabel::Case2a {
        rw.diagram == s.diagram && rw.k0_witness == s.k0() && rw.k2_witness == s.k2()
    } else {
        // section crossings are the last ones, in letter order
        let first = rw.diagram.crossing_count() - rw.word.len();
        if rw.to_k0 < first || rw.to_k2 < first {
            return false;
        }
        let w0 = flip(&rw.word, rw.to_k0 - first);
        let w2 = flip(&rw.word, rw.to_k2 - first);
        artin_images(3, &w0) == artin_images(3, &s.k0_word()) && artin_images(3, &w2) == artin_images(3, &s.k2_word())
    };
    valid && adjacent && sides
}

//! Colorings of diagram arcs by a conjugacy class of a permutation group.

mod canonical;
mod fox;
mod pnum;
mod solver;

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::presentation::evaluate;

pub use canonical::canonical_key;
pub use fox::{fox_coloring_space, is_fox_coloring, monochromatic_combination, FoxSpace, MONO_COMBINATIONS};
pub use pnum::{gn_member, permutation_number, PermutationNumber};
pub use solver::{brute_force_colorings, solve_class_colorings, SolveOptions, SolveOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    Symmetric,
    Alternating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    Transpositions,
    ThreeCycles,
}

/// A group `S_n` or `A_n` with the conjugacy class used for meridians.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassSpec {
    pub group: GroupKind,
    pub degree: usize,
    pub class: ClassKind,
}

impl ClassSpec {
    pub fn new(group: GroupKind, degree: usize, class: ClassKind) -> Result<Self> {
        if !(2..=12).contains(&degree) {
            return Err(Error::SpecMismatch(format!("degree {degree} outside 2..=12")));
        }
        match (group, class) {
            (GroupKind::Symmetric, ClassKind::Transpositions) => {}
            (GroupKind::Alternating, ClassKind::ThreeCycles) if degree >= 3 => {}
            _ => {
                return Err(Error::SpecMismatch(format!(
                    "{class:?} do not generate the {group:?} group of degree {degree}"
                )))
            }
        }
        Ok(ClassSpec { group, degree, class })
    }

    pub fn transpositions(n: usize) -> Self {
        ClassSpec::new(GroupKind::Symmetric, n, ClassKind::Transpositions).expect("2 <= n <= 12")
    }

    pub fn three_cycles(n: usize) -> Self {
        ClassSpec::new(GroupKind::Alternating, n, ClassKind::ThreeCycles).expect("3 <= n <= 12")
    }

    /// Group name as used in JSON, e.g. `S5` or `A5`.
    pub fn group_name(&self) -> String {
        match self.group {
            GroupKind::Symmetric => format!("S{}", self.degree),
            GroupKind::Alternating => format!("A{}", self.degree),
        }
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree
            && match self.class {
                ClassKind::Transpositions => p.cycle_type() == [2],
                ClassKind::ThreeCycles => p.cycle_type() == [3],
            }
    }

    /// All class elements, least first (ordered by their cycle written from its least point).
    pub fn elements(&self) -> Vec<Perm> {
        let n = self.degree;
        let mut out = vec![];
        match self.class {
            ClassKind::Transpositions => {
                for a in 0..n {
                    for b in a + 1..n {
                        out.push(Perm::transposition(n, a, b));
                    }
                }
            }
            ClassKind::ThreeCycles => {
                for a in 0..n {
                    for b in a + 1..n {
                        for c in a + 1..n {
                            if c != b {
                                out.push(Perm::cycle(n, &[a, b, c]));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Whether the given elements generate the whole group. Transpositions generate
    /// `S_n` iff their graph on `n` points is connected; 3-cycles generate `A_n` iff the
    /// hypergraph of their supports is connected and spans all `n` points.
    pub fn generates(&self, elements: &[Perm]) -> bool {
        let n = self.degree;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        let mut touched = vec![false; n];
        for e in elements {
            let s = e.support();
            for &x in &s {
                touched[x] = true;
            }
            for w in s.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a] = b;
            }
        }
        if touched.iter().any(|t| !t) {
            return false;
        }
        let r = find(&mut parent, 0);
        (0..n).all(|x| find(&mut parent, x) == r)
    }
}

/// Transposition-graph criterion on a set of transpositions of `{0..n-1}`.
pub fn is_surjective_transpositions(colors: &[Perm], n: usize) -> bool {
    ClassSpec::new(GroupKind::Symmetric, n, ClassKind::Transpositions)
        .map(|s| colors.iter().all(|c| s.contains(c)) && s.generates(colors))
        .unwrap_or(false)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassColoring {
    pub spec: ClassSpec,
    /// Class element per arc id.
    pub assignment: Vec<Perm>,
}

impl ClassColoring {
    pub fn new(spec: ClassSpec, assignment: Vec<Perm>) -> Result<Self> {
        if let Some((i, p)) = assignment.iter().enumerate().find(|(_, p)| !spec.contains(p)) {
            return Err(Error::SpecMismatch(format!("arc {i} colored {p}, not in the class")));
        }
        Ok(ClassColoring { spec, assignment })
    }

    pub fn is_surjective(&self) -> bool {
        self.spec.generates(&self.assignment)
    }

    /// Number of points moved by some color.
    pub fn points_used(&self) -> usize {
        let mut moved = vec![false; self.spec.degree];
        for p in &self.assignment {
            for x in p.support() {
                moved[x] = true;
            }
        }
        moved.iter().filter(|&&m| m).count()
    }

    /// Conjugates every color by `g` (renaming point `x` to `g(x)`).
    pub fn relabeled(&self, g: &Perm) -> ClassColoring {
        ClassColoring { spec: self.spec, assignment: self.assignment.iter().map(|p| p.relabel(g)).collect() }
    }

    pub fn to_json(&self) -> ColoringFile {
        ColoringFile {
            group: self.spec.group_name(),
            class: self.spec.class,
            assignment: self
                .assignment
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    let c = p.cycles().into_iter().next().unwrap_or_default();
                    (i.to_string(), c.iter().map(|&x| x + 1).collect())
                })
                .collect(),
        }
    }

    pub fn from_json(f: &ColoringFile) -> Result<Self> {
        let (group, rest) = f.group.split_at(1.min(f.group.len()));
        let group = match group {
            "S" => GroupKind::Symmetric,
            "A" => GroupKind::Alternating,
            _ => return Err(Error::SpecMismatch(format!("unknown group {}", f.group))),
        };
        let degree: usize = rest.parse().map_err(|_| Error::SpecMismatch(format!("unknown group {}", f.group)))?;
        let spec = ClassSpec::new(group, degree, f.class)?;
        let mut assignment = vec![None; f.assignment.len()];
        for (k, cyc) in &f.assignment {
            let i: usize = k.parse().map_err(|_| Error::SpecMismatch(format!("arc key {k:?}")))?;
            if i >= assignment.len() {
                return Err(Error::SpecMismatch(format!("arc key {i} beyond {} arcs", assignment.len())));
            }
            if cyc.iter().any(|&x| x == 0 || x > degree) {
                return Err(Error::SpecMismatch(format!("arc {i}: point out of range")));
            }
            let pts: Vec<usize> = cyc.iter().map(|&x| x - 1).collect();
            assignment[i] = Some(Perm::cycle(degree, &pts));
        }
        let assignment = assignment
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.ok_or_else(|| Error::SpecMismatch(format!("arc {i} missing"))))
            .collect::<Result<Vec<_>>>()?;
        ClassColoring::new(spec, assignment)
    }
}

/// Coloring JSON: `{"group": "S5", "class": "transpositions", "assignment": {"0": [1,2], ..}}`,
/// points 1-based, each color written as one cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    pub group: String,
    pub class: ClassKind,
    pub assignment: BTreeMap<String, Vec<usize>>,
}

/// Outcome of checking a coloring against a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Valid,
    Violated { crossing: usize },
}

impl Check {
    pub fn is_valid(&self) -> bool {
        matches!(self, Check::Valid)
    }
}

/// Verifies the Wirtinger relation at every crossing.
pub fn check_coloring(d: &PlanarDiagram, c: &ClassColoring) -> Result<Check> {
    if c.assignment.len() != d.arc_count() {
        return Err(Error::SpecMismatch(format!("{} colors for {} arcs", c.assignment.len(), d.arc_count())));
    }
    if let Some((i, p)) = c.assignment.iter().enumerate().find(|(_, p)| !c.spec.contains(p)) {
        return Err(Error::SpecMismatch(format!("arc {i} colored {p}, not in the class")));
    }
    let w = d.wirtinger();
    for (i, r) in w.relators.iter().enumerate() {
        if !evaluate(r, &c.assignment).is_identity() {
            return Ok(Check::Violated { crossing: i });
        }
    }
    Ok(Check::Valid)
}

/// Color forced on the outgoing under-arc: `over^ε · in · over^-ε`.
#[inline]
pub(crate) fn push_through(over: &Perm, incoming: &Perm, sign: i8) -> Perm {
    let o = if sign > 0 { over.clone() } else { over.inverse() };
    o.then(incoming).then(&o.inverse())
}

/// Color forced on the incoming under-arc from the outgoing one.
#[inline]
pub(crate) fn pull_back(over: &Perm, outgoing: &Perm, sign: i8) -> Perm {
    push_through(over, outgoing, -sign)
}

/// Propagates colors from the seed arcs through the crossings. Returns `None` if some
/// arc stays undetermined or a crossing is contradicted.
pub fn propagate_from_seeds(d: &PlanarDiagram, seeds: &[(usize, Perm)]) -> Option<Vec<Perm>> {
    let mut colors: Vec<Option<Perm>> = vec![None; d.arc_count()];
    for (a, p) in seeds {
        match &colors[*a] {
            Some(q) if q != p => return None,
            _ => colors[*a] = Some(p.clone()),
        }
    }
    loop {
        let mut changed = false;
        for x in d.crossing_arcs() {
            let (o, a, b) = (&colors[x.over], &colors[x.under_in], &colors[x.under_out]);
            match (o, a, b) {
                (Some(o), Some(a), Some(b)) => {
                    if &push_through(o, a, x.sign) != b {
                        return None;
                    }
                }
                (Some(o), Some(a), None) => {
                    colors[x.under_out] = Some(push_through(o, a, x.sign));
                    changed = true;
                }
                (Some(o), None, Some(b)) => {
                    colors[x.under_in] = Some(pull_back(o, b, x.sign));
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    colors.into_iter().collect()
}

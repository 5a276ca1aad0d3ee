//! Depth-first search for class colorings with propagation and symmetry breaking.

use std::collections::BTreeMap;

use super::canonical::canonical_key;
use super::{check_coloring, pull_back, push_through, ClassColoring, ClassKind, ClassSpec};
use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::perm::{all_perms, Perm};

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Report one coloring per conjugacy orbit instead of every coloring.
    pub up_to_conjugation: bool,
    pub node_limit: Option<u64>,
    /// Arcs whose colors are fixed in advance. Disables label symmetry breaking.
    pub seeds: Vec<(usize, Perm)>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { up_to_conjugation: true, node_limit: None, seeds: vec![] }
    }
}

#[derive(Clone, Debug)]
pub struct SolveOutcome {
    /// Surjective colorings in canonical order.
    pub colorings: Vec<ClassColoring>,
    pub nodes: u64,
}

/// All surjective colorings of `d` by the class of `spec`.
pub fn solve_class_colorings(d: &PlanarDiagram, spec: ClassSpec, opts: &SolveOptions) -> Result<SolveOutcome> {
    let mut search = Search::new(d, spec, opts.seeds.is_empty(), opts.node_limit);
    search.min_points = spec.degree;
    for (a, p) in &opts.seeds {
        if *a >= d.arc_count() {
            return Err(Error::InvalidArc(*a));
        }
        if !spec.contains(p) {
            return Err(Error::SpecMismatch(format!("seed {p} not in the class")));
        }
    }
    let mut found: BTreeMap<_, ClassColoring> = BTreeMap::new();
    let complete = search.run(&opts.seeds, &mut |_, colors| {
        let c = ClassColoring { spec, assignment: colors.to_vec() };
        if c.is_surjective() {
            found.entry(canonical_key(&c)).or_insert(c);
        }
        Flow::Continue
    });
    if !complete {
        return Err(Error::BudgetExceeded { limit: opts.node_limit.unwrap_or(0) });
    }
    let nodes = search.nodes;
    let mut colorings: Vec<ClassColoring> = found.into_values().collect();
    if !opts.up_to_conjugation {
        let mut all: Vec<Vec<Perm>> = vec![];
        let group = all_perms(spec.degree);
        for c in &colorings {
            for g in &group {
                all.push(c.relabeled(g).assignment);
            }
        }
        all.sort();
        all.dedup();
        if !opts.seeds.is_empty() {
            all.retain(|a| opts.seeds.iter().all(|(i, p)| &a[*i] == p));
        }
        colorings = all.into_iter().map(|assignment| ClassColoring { spec, assignment }).collect();
    }
    Ok(SolveOutcome { colorings, nodes })
}

/// Exhaustive product enumeration over all class elements per arc. Exponential; for
/// testing the search on small diagrams only.
pub fn brute_force_colorings(d: &PlanarDiagram, spec: ClassSpec) -> Vec<ClassColoring> {
    let els = spec.elements();
    let a = d.arc_count();
    let mut idx = vec![0usize; a];
    let mut out = vec![];
    loop {
        let c = ClassColoring { spec, assignment: idx.iter().map(|&i| els[i].clone()).collect() };
        if c.is_surjective() && check_coloring(d, &c).map(|r| r.is_valid()).unwrap_or(false) {
            out.push(c);
        }
        let mut k = 0;
        loop {
            if k == a {
                out.sort_by(|x, y| x.assignment.cmp(&y.assignment));
                return out;
            }
            idx[k] += 1;
            if idx[k] < els.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Visitor verdict after each complete coloring.
pub(crate) enum Flow {
    Continue,
    Stop,
    /// Continue, pruning branches that cannot move this many points.
    RequireAtLeast(usize),
}

/// Shared search engine. The visitor receives the number of points used and the full
/// assignment of each complete coloring.
pub(crate) struct Search<'a> {
    d: &'a PlanarDiagram,
    spec: ClassSpec,
    elements: Vec<Perm>,
    /// Crossings incident to each arc.
    incident: Vec<Vec<usize>>,
    order: Vec<usize>,
    canonical: bool,
    node_limit: Option<u64>,
    pub nodes: u64,
    /// Branches that cannot reach this many points are pruned.
    pub min_points: usize,
    colors: Vec<Option<Perm>>,
    trail: Vec<usize>,
    /// `uses[x]`: number of assigned arcs whose color moves `x`.
    uses: Vec<u32>,
    stopped: bool,
    exceeded: bool,
}

impl<'a> Search<'a> {
    pub(crate) fn new(d: &'a PlanarDiagram, spec: ClassSpec, canonical: bool, node_limit: Option<u64>) -> Self {
        let mut incident = vec![vec![]; d.arc_count()];
        for (i, x) in d.crossing_arcs().iter().enumerate() {
            for a in [x.over, x.under_in, x.under_out] {
                if !incident[a].contains(&i) {
                    incident[a].push(i);
                }
            }
        }
        Search {
            d,
            spec,
            elements: spec.elements(),
            incident,
            order: seed_order(d),
            canonical,
            node_limit,
            nodes: 0,
            min_points: 0,
            colors: vec![None; d.arc_count()],
            trail: vec![],
            uses: vec![0; spec.degree],
            stopped: false,
            exceeded: false,
        }
    }

    /// Runs the search; returns `false` if the node limit was hit.
    pub(crate) fn run(&mut self, seeds: &[(usize, Perm)], visit: &mut dyn FnMut(usize, &[Perm]) -> Flow) -> bool {
        let mut ok = true;
        for (a, p) in seeds {
            match &self.colors[*a] {
                Some(q) if q != p => ok = false,
                Some(_) => {}
                None => ok = ok && self.assign(*a, p.clone()),
            }
        }
        if ok {
            self.dfs(visit);
        }
        !self.exceeded
    }

    fn points_used(&self) -> usize {
        self.uses.iter().filter(|&&u| u > 0).count()
    }

    /// Largest point label in use plus one.
    fn label_bound(&self) -> usize {
        self.uses.iter().rposition(|&u| u > 0).map_or(0, |x| x + 1)
    }

    fn set(&mut self, a: usize, p: Perm) {
        for x in p.support() {
            self.uses[x] += 1;
        }
        self.colors[a] = Some(p);
        self.trail.push(a);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let a = self.trail.pop().unwrap();
            let p = self.colors[a].take().unwrap();
            for x in p.support() {
                self.uses[x] -= 1;
            }
        }
    }

    /// Assigns and propagates; on conflict the caller undoes.
    fn assign(&mut self, a: usize, p: Perm) -> bool {
        self.set(a, p);
        let mut queue: Vec<usize> = self.incident[a].clone();
        while let Some(ci) = queue.pop() {
            let x = self.d.crossing_arcs()[ci];
            let forced = match (&self.colors[x.over], &self.colors[x.under_in], &self.colors[x.under_out]) {
                (Some(o), Some(i), Some(u)) => {
                    if &push_through(o, i, x.sign) != u {
                        return false;
                    }
                    None
                }
                (Some(o), Some(i), None) => Some((x.under_out, push_through(o, i, x.sign))),
                (Some(o), None, Some(u)) => Some((x.under_in, pull_back(o, u, x.sign))),
                (None, Some(i), Some(u)) if i != u => match self.unique_over(i, u, x.sign) {
                    Err(()) => return false,
                    Ok(Some(o)) => Some((x.over, o)),
                    Ok(None) => None,
                },
                _ => None,
            };
            if let Some((b, p)) = forced {
                self.set(b, p);
                queue.extend(self.incident[b].iter().copied());
            }
        }
        true
    }

    /// The over-color conjugating `i` to `u`, if unique. `Err` when none exists.
    fn unique_over(&self, i: &Perm, u: &Perm, sign: i8) -> std::result::Result<Option<Perm>, ()> {
        if self.spec.class == ClassKind::Transpositions {
            // (x y) -> (x z) only by (y z)
            let (si, su) = (i.support(), u.support());
            let common: Vec<usize> = si.iter().copied().filter(|x| su.contains(x)).collect();
            if common.len() != 1 {
                return Err(());
            }
            let y = si.iter().copied().find(|x| *x != common[0]).unwrap();
            let z = su.iter().copied().find(|x| *x != common[0]).unwrap();
            return Ok(Some(Perm::transposition(self.spec.degree, y, z)));
        }
        let mut found = None;
        for o in &self.elements {
            if &push_through(o, i, sign) == u {
                if found.is_some() {
                    return Ok(None);
                }
                found = Some(o.clone());
            }
        }
        found.map(Some).ok_or(())
    }

    fn candidates(&self) -> Vec<Perm> {
        if !self.canonical {
            return self.elements.clone();
        }
        let used = self.label_bound();
        self.elements
            .iter()
            .filter(|e| {
                let fresh: Vec<usize> = e.support().into_iter().filter(|&x| x >= used).collect();
                fresh.iter().enumerate().all(|(k, &x)| x == used + k)
            })
            .cloned()
            .collect()
    }

    fn dfs(&mut self, visit: &mut dyn FnMut(usize, &[Perm]) -> Flow) {
        if self.stopped {
            return;
        }
        let Some(&a) = self.order.iter().find(|&&a| self.colors[a].is_none()) else {
            let colors: Vec<Perm> = self.colors.iter().map(|c| c.clone().unwrap()).collect();
            if self.points_used() >= self.min_points {
                match visit(self.points_used(), &colors) {
                    Flow::Continue => {}
                    Flow::Stop => self.stopped = true,
                    Flow::RequireAtLeast(m) => self.min_points = m,
                }
            }
            return;
        };
        let per_arc = match self.spec.class {
            ClassKind::Transpositions => 2,
            ClassKind::ThreeCycles => 3,
        };
        let open = self.colors.iter().filter(|c| c.is_none()).count();
        if self.points_used() + per_arc * open < self.min_points {
            return;
        }
        for p in self.candidates() {
            self.nodes += 1;
            if self.node_limit.is_some_and(|l| self.nodes > l) {
                self.exceeded = true;
                self.stopped = true;
                return;
            }
            let mark = self.trail.len();
            if self.assign(a, p) {
                self.dfs(visit);
            }
            self.undo_to(mark);
            if self.stopped {
                return;
            }
        }
    }
}

/// Branching order: repeatedly take the arc whose addition determines the most arcs
/// through over/under propagation, ties to the least arc id.
pub(crate) fn seed_order(d: &PlanarDiagram) -> Vec<usize> {
    let n = d.arc_count();
    let mut known = vec![false; n];
    let mut order = vec![];
    let closure = |known: &mut Vec<bool>| loop {
        let mut changed = false;
        for x in d.crossing_arcs() {
            if known[x.over] && known[x.under_in] != known[x.under_out] {
                known[x.under_in] = true;
                known[x.under_out] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    };
    while known.iter().any(|k| !k) {
        let mut best: Option<(usize, usize)> = None;
        for a in (0..n).filter(|&a| !known[a]) {
            let mut k = known.clone();
            k[a] = true;
            closure(&mut k);
            let gain = k.iter().filter(|&&x| x).count();
            if best.is_none_or(|(g, _)| gain > g) {
                best = Some((gain, a));
            }
        }
        let (_, a) = best.unwrap();
        known[a] = true;
        order.push(a);
        closure(&mut known);
    }
    // arcs that become known by propagation keep a place in the order for safety
    for a in 0..n {
        if !order.contains(&a) {
            order.push(a);
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::coloring::permutation_number;
    use crate::diagram::braid_closure;

    fn closure(k: usize, w: &[i32]) -> PlanarDiagram {
        braid_closure(&BraidWord::new(k, w.to_vec()).unwrap()).unwrap()
    }

    fn full(d: &PlanarDiagram, spec: ClassSpec) -> Vec<ClassColoring> {
        let opts = SolveOptions { up_to_conjugation: false, ..Default::default() };
        solve_class_colorings(d, spec, &opts).unwrap().colorings
    }

    #[test]
    fn matches_brute_force() {
        let knots = [closure(2, &[1, 1, 1]), closure(3, &[1, -2, 1, -2]), closure(2, &[-1, -1, -1])];
        for d in &knots {
            for spec in [ClassSpec::transpositions(3), ClassSpec::transpositions(4), ClassSpec::three_cycles(4)] {
                assert_eq!(full(d, spec), brute_force_colorings(d, spec), "{spec:?}");
            }
        }
    }

    #[test]
    fn trefoil_has_one_s3_orbit() {
        let d = closure(2, &[1, 1, 1]);
        let out = solve_class_colorings(&d, ClassSpec::transpositions(3), &SolveOptions::default()).unwrap();
        assert_eq!(out.colorings.len(), 1);
        assert_eq!(full(&d, ClassSpec::transpositions(3)).len(), 6);
        let none = solve_class_colorings(&d, ClassSpec::transpositions(4), &SolveOptions::default()).unwrap();
        assert!(none.colorings.is_empty());
    }

    #[test]
    fn seeded_search_respects_seeds() {
        let d = closure(3, &[1, 1, 1, 2, 2, 2]);
        let s = d.seed_arcs();
        let seeds = vec![(s[0], Perm::transposition(4, 0, 1)), (s[1], Perm::transposition(4, 0, 2))];
        let opts = SolveOptions { up_to_conjugation: false, seeds: seeds.clone(), ..Default::default() };
        let out = solve_class_colorings(&d, ClassSpec::transpositions(4), &opts).unwrap();
        assert!(!out.colorings.is_empty());
        for c in &out.colorings {
            assert!(seeds.iter().all(|(a, p)| &c.assignment[*a] == p));
            assert!(check_coloring(&d, c).unwrap().is_valid());
        }
    }

    #[test]
    fn node_limit_is_reported() {
        let d = closure(4, &[1, 1, 1, 2, 2, 2, 3, 3, 3]);
        let opts = SolveOptions { node_limit: Some(3), ..Default::default() };
        assert!(matches!(
            solve_class_colorings(&d, ClassSpec::transpositions(5), &opts),
            Err(Error::BudgetExceeded { limit: 3 })
        ));
        let p = permutation_number(&d, None, Some(3));
        assert!(!p.complete);
    }

    #[test]
    fn small_permutation_numbers() {
        assert_eq!(permutation_number(&PlanarDiagram::trivial(), None, None).value, 2);
        assert_eq!(permutation_number(&closure(2, &[1, 1, 1]), None, None).value, 3);
        assert_eq!(permutation_number(&closure(3, &[1, -2, 1, -2]), None, None).value, 2);
        let p = permutation_number(&closure(3, &[1, 1, 1, 2, 2, 2]), None, None);
        assert_eq!((p.value, p.complete), (4, true));
        assert!(check_coloring(&closure(3, &[1, 1, 1, 2, 2, 2]), &p.witness).unwrap().is_valid());
        assert!(p.witness.is_surjective());
    }
}

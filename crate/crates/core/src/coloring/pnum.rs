//! The permutation number: the largest `n` with a transposition coloring onto `S_n`.

use super::solver::{Flow, Search};
use super::{ClassColoring, ClassKind, ClassSpec, GroupKind};
use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Clone, Debug)]
pub struct PermutationNumber {
    /// Largest `n` found. Exact when `complete`, otherwise a lower bound.
    pub value: usize,
    /// Coloring onto `S_value`.
    pub witness: ClassColoring,
    /// Upper bound searched: the overpass count plus one.
    pub bound: usize,
    pub complete: bool,
    pub nodes: u64,
}

fn unchecked_spec(n: usize) -> ClassSpec {
    ClassSpec { group: GroupKind::Symmetric, degree: n, class: ClassKind::Transpositions }
}

/// Restricts a coloring whose colors move only points below `m` to degree `m`.
fn restrict(colors: &[Perm], m: usize) -> ClassColoring {
    let assignment = colors
        .iter()
        .map(|p| {
            let s = p.support();
            Perm::transposition(m, s[0], s[1])
        })
        .collect();
    ClassColoring { spec: unchecked_spec(m), assignment }
}

/// Searches transposition colorings moving up to `n_max` points (default and cap: the
/// overpass count plus one). Every knot coloring by transpositions is transitive on the
/// points it moves, so the number of points moved is the `n` of the surjection.
pub fn permutation_number(d: &PlanarDiagram, n_max: Option<usize>, node_limit: Option<u64>) -> PermutationNumber {
    let cap = (d.overpass_count() + 1).max(2);
    let bound = n_max.map_or(cap, |n| n.clamp(2, cap));
    let mut search = Search::new(d, unchecked_spec(bound), true, node_limit);
    search.min_points = 2;
    let mut best: Option<(usize, Vec<Perm>)> = None;
    let complete = search.run(&[], &mut |m, colors| {
        if best.as_ref().is_none_or(|(b, _)| m > *b) {
            best = Some((m, colors.to_vec()));
        }
        if m >= bound {
            Flow::Stop
        } else {
            Flow::RequireAtLeast(m + 1)
        }
    });
    let (value, colors) = best.unwrap_or_else(|| (2, vec![Perm::transposition(bound, 0, 1); d.arc_count()]));
    PermutationNumber { value, witness: restrict(&colors, value), bound, complete, nodes: search.nodes }
}

/// Whether the knot has a transposition coloring onto `S_m` for some `m >= n`.
pub fn gn_member(d: &PlanarDiagram, n: usize, node_limit: Option<u64>) -> Result<bool> {
    let bound = (d.overpass_count() + 1).max(2);
    if n <= 2 {
        return Ok(true);
    }
    if n > bound {
        return Ok(false);
    }
    let mut search = Search::new(d, unchecked_spec(bound), true, node_limit);
    search.min_points = n;
    let mut hit = false;
    let complete = search.run(&[], &mut |_, _| {
        hit = true;
        Flow::Stop
    });
    if hit {
        Ok(true)
    } else if complete {
        Ok(false)
    } else {
        Err(Error::BudgetExceeded { limit: node_limit.unwrap_or(0) })
    }
}

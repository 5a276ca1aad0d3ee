//! Diagrams described level by level, as a stack of cups, caps and crossings.
//!
//! Positions are 1-based to match braid generator indices. `Cross(i, +1)` is drawn
//! like `σ_i`: the strand entering at the lower left passes over to the upper right.
//! Crossing signs come from the traced orientation, so strands running downward
//! (closure returns, the far side of a clasp) are handled uniformly.

use crate::diagram::{Crossing, PlanarDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    /// New pair of positions `i, i+1` joined below.
    Cup(usize),
    /// Positions `i, i+1` joined above.
    Cap(usize),
    /// Crossing between positions `i, i+1`; `+1` puts the lower-left strand on top.
    Cross(usize, i8),
}

#[derive(Clone, Debug, Default)]
pub struct MorseDiagram {
    pub levels: Vec<Level>,
}

/// A point on the boundary between `level - 1` and `level`, at 1-based `pos`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryPoint {
    pub level: usize,
    pub pos: usize,
}

#[derive(Clone, Copy)]
enum Link {
    /// Through level `k` to boundary `k+1` (up) or `k` (down) at `pos`.
    Straight { to: (usize, usize), crossing: Option<(usize, bool)> },
    /// Cup or cap joining two points on the same boundary.
    Turn { to: (usize, usize) },
}

pub struct Traced {
    pub diagram: PlanarDiagram,
    /// Edge containing each requested marked point, in request order.
    pub marked_edges: Vec<usize>,
    /// PD crossing index of each `Cross` level, in level order.
    pub crossing_of_level: Vec<Option<usize>>,
}

impl MorseDiagram {
    pub fn new(levels: Vec<Level>) -> Self {
        MorseDiagram { levels }
    }

    fn widths(&self) -> Result<Vec<usize>> {
        let mut w = vec![0usize];
        for (k, lv) in self.levels.iter().enumerate() {
            let cur = *w.last().unwrap();
            let next = match *lv {
                Level::Cup(i) => {
                    if i == 0 || i > cur + 1 {
                        return Err(Error::InvalidDiagram(format!("cup at {i} on width {cur} (level {k})")));
                    }
                    cur + 2
                }
                Level::Cap(i) | Level::Cross(i, _) => {
                    if i == 0 || i + 1 > cur {
                        return Err(Error::InvalidDiagram(format!("level {k} uses position {i} on width {cur}")));
                    }
                    if matches!(lv, Level::Cap(_)) {
                        cur - 2
                    } else {
                        cur
                    }
                }
            };
            w.push(next);
        }
        if *w.last().unwrap() != 0 {
            return Err(Error::InvalidDiagram("open strands at the top".into()));
        }
        Ok(w)
    }

    /// Traces the closed curve starting at `start` heading upward and builds the PD.
    /// Edge 0 is the edge through `start`.
    pub fn trace(&self, start: BoundaryPoint, marks: &[BoundaryPoint]) -> Result<Traced> {
        let widths = self.widths()?;
        let nb = widths.len();
        // up[k][p]: link from boundary k going into level k; down[k][p]: into level k-1.
        let mut up: Vec<Vec<Option<Link>>> = widths.iter().map(|&w| vec![None; w]).collect();
        let mut down: Vec<Vec<Option<Link>>> = widths.iter().map(|&w| vec![None; w]).collect();
        let mut crossing_of_level = vec![None; self.levels.len()];
        let mut ncross = 0;
        for (k, lv) in self.levels.iter().enumerate() {
            let w = widths[k];
            match *lv {
                Level::Cross(i, _) => {
                    let c = ncross;
                    crossing_of_level[k] = Some(c);
                    ncross += 1;
                    let (l, r) = (i - 1, i);
                    for p in 0..w {
                        let (q, cr) = if p == l {
                            (r, Some((c, true)))
                        } else if p == r {
                            (l, Some((c, false)))
                        } else {
                            (p, None)
                        };
                        up[k][p] = Some(Link::Straight { to: (k + 1, q), crossing: cr });
                        down[k + 1][q] = Some(Link::Straight { to: (k, p), crossing: cr });
                    }
                }
                Level::Cup(i) => {
                    let a = i - 1;
                    for p in 0..w {
                        let q = if p < a { p } else { p + 2 };
                        up[k][p] = Some(Link::Straight { to: (k + 1, q), crossing: None });
                        down[k + 1][q] = Some(Link::Straight { to: (k, p), crossing: None });
                    }
                    down[k + 1][a] = Some(Link::Turn { to: (k + 1, a + 1) });
                    down[k + 1][a + 1] = Some(Link::Turn { to: (k + 1, a) });
                }
                Level::Cap(i) => {
                    let a = i - 1;
                    for p in 0..w {
                        if p == a || p == a + 1 {
                            continue;
                        }
                        let q = if p < a { p } else { p - 2 };
                        up[k][p] = Some(Link::Straight { to: (k + 1, q), crossing: None });
                        down[k + 1][q] = Some(Link::Straight { to: (k, p), crossing: None });
                    }
                    up[k][a] = Some(Link::Turn { to: (k, a + 1) });
                    up[k][a + 1] = Some(Link::Turn { to: (k, a) });
                }
            }
        }
        let total_links: usize = (0..nb).map(|k| widths[k]).sum();
        if start.level >= nb || start.pos == 0 || start.pos > widths[start.level] {
            return Err(Error::InvalidDiagram("start point outside the diagram".into()));
        }

        // Walk. State: at boundary point, about to leave via up (true) or down (false).
        #[derive(Clone, Copy)]
        struct Pass {
            crossing: usize,
            left: bool,
            upward: bool,
        }
        let mut passes: Vec<Pass> = vec![];
        let mut point_edge: Vec<Vec<Option<usize>>> = widths.iter().map(|&w| vec![None; w]).collect();
        let mut cur = (start.level, start.pos - 1);
        let mut going_up = true;
        let mut visited = 0;
        loop {
            if point_edge[cur.0][cur.1].is_some() {
                break;
            }
            point_edge[cur.0][cur.1] = Some(passes.len());
            visited += 1;
            let link = if going_up { up[cur.0][cur.1] } else { down[cur.0][cur.1] };
            let link = link.expect("every boundary point has both links");
            match link {
                Link::Straight { to, crossing } => {
                    if let Some((c, left)) = crossing {
                        passes.push(Pass { crossing: c, left, upward: going_up });
                    }
                    cur = to;
                }
                Link::Turn { to } => {
                    cur = to;
                    going_up = !going_up;
                }
            }
        }
        if cur != (start.level, start.pos - 1) {
            return Err(Error::InvalidDiagram("trace did not close at its start".into()));
        }
        if visited != total_links {
            let comps = count_components(&up, &down, &widths);
            return Err(Error::MultiComponentClosure(comps));
        }
        let nedges = passes.len();
        // edge index of each point: passes seen so far, wrapping the tail onto edge 0
        let edge_at = |k: usize, p: usize| -> usize {
            let e = point_edge[k][p].unwrap();
            if nedges == 0 {
                0
            } else {
                e % nedges
            }
        };
        let marked_edges = marks
            .iter()
            .map(|m| {
                if m.level >= nb || m.pos == 0 || m.pos > widths[m.level] {
                    return Err(Error::InvalidDiagram("marked point outside the diagram".into()));
                }
                Ok(edge_at(m.level, m.pos - 1))
            })
            .collect::<Result<Vec<_>>>()?;

        // Collect the two passes of each crossing.
        let mut info: Vec<[Option<(usize, usize, bool, bool)>; 2]> = vec![[None, None]; ncross];
        for (j, ps) in passes.iter().enumerate() {
            let e_in = j;
            let e_out = (j + 1) % nedges;
            let slot = if ps.left { 0 } else { 1 };
            info[ps.crossing][slot] = Some((e_in, e_out, ps.upward, ps.left));
        }
        let mut geo = vec![0i8; ncross];
        for (k, lv) in self.levels.iter().enumerate() {
            if let (Level::Cross(_, e), Some(c)) = (lv, crossing_of_level[k]) {
                geo[c] = *e;
            }
        }
        let mut crossings = Vec::with_capacity(ncross);
        for c in 0..ncross {
            let l = info[c][0].unwrap();
            let r = info[c][1].unwrap();
            let (over, under) = if geo[c] > 0 { (l, r) } else { (r, l) };
            let d = |up: bool| if up { 1i8 } else { -1 };
            // lower-left to upper-right on top, both running upward, is positive
            let sign = geo[c] * d(over.2) * d(under.2);
            crossings.push(Crossing::from_roles(under.0, under.1, over.0, over.1, sign));
        }
        let diagram = PlanarDiagram::new(crossings, vec![])?;
        Ok(Traced { diagram, marked_edges, crossing_of_level })
    }
}

fn count_components(up: &[Vec<Option<Link>>], down: &[Vec<Option<Link>>], widths: &[usize]) -> usize {
    let mut seen: Vec<Vec<bool>> = widths.iter().map(|&w| vec![false; w]).collect();
    let mut comps = 0;
    for k in 0..widths.len() {
        for p in 0..widths[k] {
            if seen[k][p] {
                continue;
            }
            comps += 1;
            let mut stack = vec![(k, p)];
            while let Some((a, b)) = stack.pop() {
                if seen[a][b] {
                    continue;
                }
                seen[a][b] = true;
                for l in [up[a][b], down[a][b]].into_iter().flatten() {
                    let to = match l {
                        Link::Straight { to, .. } | Link::Turn { to } => to,
                    };
                    stack.push(to);
                }
            }
        }
    }
    comps
}

//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use gordian_core::coloring::ClassSpec;
use gordian_core::covers::{cokernel, HomologyDecomposition};
use gordian_core::perm::Perm;
use gordian_core::presentation::evaluate;
use gordian_core::{BraidWord, PlanarDiagram};
use rand::Rng;

/// All surjective class colorings, by depth-first enumeration over arcs in id order,
/// pruning a branch as soon as some fully assigned crossing fails.
pub fn all_colorings(d: &PlanarDiagram, spec: ClassSpec) -> Vec<Vec<Perm>> {
    let els = spec.elements();
    let w = d.wirtinger();
    let xs = d.crossing_arcs().to_vec();
    let mut out = vec![];
    let mut asg: Vec<Perm> = vec![];
    fn rec(
        k: usize,
        n: usize,
        els: &[Perm],
        xs: &[gordian_core::diagram::CrossingArcs],
        w: &gordian_core::presentation::GroupPresentation,
        spec: ClassSpec,
        asg: &mut Vec<Perm>,
        out: &mut Vec<Vec<Perm>>,
    ) {
        if k == n {
            if spec.generates(asg) {
                out.push(asg.clone());
            }
            return;
        }
        for e in els {
            asg.push(e.clone());
            let ok = xs.iter().enumerate().all(|(i, x)| {
                let m = x.over.max(x.under_in).max(x.under_out);
                m != k || evaluate(&w.relators[i], asg).is_identity()
            });
            if ok {
                rec(k + 1, n, els, xs, w, spec, asg, out);
            }
            asg.pop();
        }
    }
    rec(0, d.arc_count(), &els, &xs, &w, spec, &mut asg, &mut out);
    out.sort();
    out
}

/// Number of Fox p-colorings by enumeration.
pub fn fox_count(d: &PlanarDiagram, p: u64) -> u64 {
    let n = d.arc_count();
    let xs = d.crossing_arcs();
    let total = p.pow(n as u32);
    (0..total)
        .filter(|&code| {
            let v: Vec<u64> = (0..n).map(|i| code / p.pow(i as u32) % p).collect();
            xs.iter().all(|x| (2 * v[x.over] + 2 * p - v[x.under_in] - v[x.under_out]) % p == 0)
        })
        .count() as u64
}

fn perm_matrix(g: &Perm) -> Vec<Vec<i64>> {
    let n = g.degree();
    let mut m = vec![vec![0; n]; n];
    for s in 0..n {
        m[s][g.apply(s)] = 1;
    }
    m
}

/// `H_1` of the cover of the presentation complex relative to the fiber over the base
/// point, from the Fox Jacobian evaluated in the permutation representation. Equals the
/// cover's `H_1` plus a free summand of rank `degree - 1`.
pub fn fox_relative_homology(d: &PlanarDiagram, colors: &[Perm]) -> HomologyDecomposition {
    let w = d.wirtinger();
    let deg = colors[0].degree();
    let a = w.generator_count;
    let mut rows = vec![];
    for r in &w.relators {
        let mut block = vec![vec![0i64; deg * a]; deg];
        let mut prefix = Perm::identity(deg);
        for l in r {
            let g = &colors[l.gen];
            let (coef, at) = if l.exp > 0 { (1, prefix.clone()) } else { (-1, prefix.then(&g.inverse())) };
            let m = perm_matrix(&at);
            for s in 0..deg {
                for t in 0..deg {
                    block[s][l.gen * deg + t] += coef * m[s][t];
                }
            }
            prefix = if l.exp > 0 { prefix.then(g) } else { prefix.then(&g.inverse()) };
        }
        rows.extend(block);
    }
    cokernel(&rows, deg * a)
}

/// A random braid whose closure is a knot.
pub fn random_knot_braid<R: Rng>(rng: &mut R, max_strands: usize, max_len: usize) -> BraidWord {
    loop {
        let n = rng.gen_range(1..=max_strands);
        let len = if n == 1 { 0 } else { rng.gen_range(0..=max_len) };
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..n as i32);
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        let b = BraidWord::new(n, letters).unwrap();
        if b.closure_components() == 1 {
            return b;
        }
    }
}

//! Fox p-colorings: the kernel of the coloring matrix over `Z/p`.

use serde::{Deserialize, Serialize};

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoxSpace {
    pub p: u64,
    pub dimension: usize,
    /// Reduced basis of the coloring space, one vector of arc values per row.
    pub basis: Vec<Vec<u64>>,
}

impl FoxSpace {
    /// Twice 3-colorable: at least two independent nontrivial 3-colorings besides
    /// the constants.
    pub fn twice_three_colorable(&self) -> bool {
        self.p == 3 && self.dimension >= 3
    }
}

/// Order of the checks in [`monochromatic_combination`].
pub const MONO_COMBINATIONS: [(i8, i8); 4] = [(1, 0), (0, 1), (1, 1), (1, -1)];

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    r
}

/// Coloring matrix mod p: row `2 over - in - out` per crossing.
fn coloring_matrix(d: &PlanarDiagram, p: u64) -> Vec<Vec<u64>> {
    let n = d.arc_count();
    d.crossing_arcs()
        .iter()
        .map(|x| {
            let mut row = vec![0u64; n];
            row[x.over] = (row[x.over] + 2) % p;
            row[x.under_in] = (row[x.under_in] + p - 1) % p;
            row[x.under_out] = (row[x.under_out] + p - 1) % p;
            row
        })
        .collect()
}

/// Row reduces in place; returns pivot columns.
fn rref(m: &mut [Vec<u64>], cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = vec![];
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..m.len()).find(|&k| m[k][c] != 0) else { continue };
        m.swap(r, k);
        let inv = pow_mod(m[r][c], p - 2, p);
        for v in m[r].iter_mut() {
            *v = (*v as u128 * inv as u128 % p as u128) as u64;
        }
        for k in 0..m.len() {
            if k != r && m[k][c] != 0 {
                let f = m[k][c];
                for j in 0..cols {
                    let sub = (f as u128 * m[r][j] as u128 % p as u128) as u64;
                    m[k][j] = (m[k][j] + p - sub) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn fox_coloring_space(d: &PlanarDiagram, p: u64) -> Result<FoxSpace> {
    if p < 3 || !is_prime(p) {
        return Err(Error::SpecMismatch(format!("{p} is not an odd prime")));
    }
    let n = d.arc_count();
    let mut m = coloring_matrix(d, p);
    let pivots = rref(&mut m, n, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[r][f]) % p;
            }
            v
        })
        .collect::<Vec<_>>();
    Ok(FoxSpace { p, dimension: basis.len(), basis })
}

/// Whether `v` satisfies the 3-coloring relation at every crossing.
pub fn is_fox_coloring(d: &PlanarDiagram, v: &[u64], p: u64) -> bool {
    v.len() == d.arc_count()
        && coloring_matrix(d, p).iter().all(|row| row.iter().zip(v).map(|(a, b)| a * (b % p)).sum::<u64>() % p == 0)
}

/// For independent (modulo constants) 3-colorings `c1`, `c2` and a crossing `x`, the
/// first combination `a c1 + b c2` in [`MONO_COMBINATIONS`] that is monochromatic at `x`.
///
/// Panics if none is: among the four combinations some one is always monochromatic.
pub fn monochromatic_combination(d: &PlanarDiagram, c1: &[u64], c2: &[u64], x: usize) -> Result<(i8, i8)> {
    let xs = d.crossing_arcs();
    let Some(cx) = xs.get(x) else { return Err(Error::InvalidCrossing(x)) };
    for c in [c1, c2] {
        if !is_fox_coloring(d, c, 3) {
            return Err(Error::SpecMismatch("not a 3-coloring".into()));
        }
    }
    let mut m =
        vec![c1.iter().map(|v| v % 3).collect::<Vec<_>>(), c2.iter().map(|v| v % 3).collect(), vec![1; c1.len()]];
    if rref(&mut m, c1.len(), 3).len() < 3 {
        return Err(Error::SpecMismatch("colorings are dependent modulo constants".into()));
    }
    for (a, b) in MONO_COMBINATIONS {
        let at = |arc: usize| (a as i64 * c1[arc] as i64 + b as i64 * c2[arc] as i64).rem_euclid(3);
        if at(cx.over) == at(cx.under_in) && at(cx.under_in) == at(cx.under_out) {
            return Ok((a, b));
        }
    }
    panic!("no monochromatic combination at crossing {x}");
}

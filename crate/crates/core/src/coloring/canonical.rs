//! Canonical forms of colorings under relabeling of points.

use super::{ClassColoring, GroupKind};

/// Orbit invariant of a coloring under conjugation by its group.
///
/// The sequence part is the least relabeled color sequence over all labelings that
/// number points in order of first appearance along the arcs. Conjugation by `S_n`
/// preserves it. For `A_n` the orbit also depends on whether some even labeling
/// reaches the minimum; `odd` records that none does.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    pub sequence: Vec<Vec<(u8, u8)>>,
    pub odd: bool,
}

#[derive(Clone)]
struct Branch {
    map: Vec<Option<u8>>,
    next: u8,
}

pub fn canonical_key(c: &ClassColoring) -> CanonicalKey {
    let n = c.spec.degree;
    let mut branches = vec![Branch { map: vec![None; n], next: 0 }];
    let mut sequence = vec![];
    for color in &c.assignment {
        let support = color.support();
        let mut best: Option<Vec<(u8, u8)>> = None;
        let mut kept: Vec<Branch> = vec![];
        for b in &branches {
            let fresh: Vec<usize> = support.iter().copied().filter(|&x| b.map[x].is_none()).collect();
            for order in orderings(&fresh) {
                let mut nb = b.clone();
                for x in order {
                    nb.map[x] = Some(nb.next);
                    nb.next += 1;
                }
                let mut img: Vec<(u8, u8)> =
                    support.iter().map(|&x| (nb.map[x].unwrap(), nb.map[color.apply(x)].unwrap())).collect();
                img.sort_unstable();
                match &best {
                    Some(bi) if &img > bi => continue,
                    Some(bi) if &img == bi => kept.push(nb),
                    _ => {
                        best = Some(img);
                        kept = vec![nb];
                    }
                }
            }
        }
        kept.sort_by(|x, y| x.map.cmp(&y.map));
        kept.dedup_by(|x, y| x.map == y.map);
        branches = kept;
        sequence.push(best.unwrap_or_default());
    }
    let odd = c.spec.group == GroupKind::Alternating && branches.iter().all(|b| completion_is_odd(&b.map));
    CanonicalKey { sequence, odd }
}

/// Parity of the permutation extending `map` by sending unmapped points to the unused
/// labels in increasing order. With two or more free points an even extension exists.
fn completion_is_odd(map: &[Option<u8>]) -> bool {
    let n = map.len();
    let free = map.iter().filter(|m| m.is_none()).count();
    if free >= 2 {
        return false;
    }
    let mut used = vec![false; n];
    for m in map.iter().flatten() {
        used[*m as usize] = true;
    }
    let mut spare = (0..n).filter(|&l| !used[l]);
    let images: Vec<u8> = map.iter().map(|m| m.unwrap_or_else(|| spare.next().unwrap() as u8)).collect();
    !crate::perm::Perm::from_images(images).unwrap().is_even()
}

fn orderings(xs: &[usize]) -> Vec<Vec<usize>> {
    if xs.len() <= 1 {
        return vec![xs.to_vec()];
    }
    let mut out = vec![];
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut tail in orderings(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

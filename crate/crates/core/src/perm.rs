//! Permutations on `{0, .., n-1}`.
//!
//! Composition is left-to-right: `a.then(&b)` first applies `a`, then `b`.
//! Conjugation `a^g` used by the crossing rule is `g^-1 a g` in this order,
//! which agrees with the usual right-to-left `g a g^-1` convention after
//! inverting `g`; the crossing rule below is stated directly on images.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm(images))
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(a, b);
        p
    }

    /// Builds a cycle `(c0 c1 .. ck)`: `c0 -> c1 -> .. -> ck -> c0`.
    pub fn cycle(n: usize, points: &[usize]) -> Self {
        let mut p = Self::identity(n);
        for (i, &a) in points.iter().enumerate() {
            p.0[a] = points[(i + 1) % points.len()] as u8;
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn pow(&self, e: i32) -> Perm {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Perm::identity(self.degree());
        for _ in 0..e.unsigned_abs() {
            acc = acc.then(&base);
        }
        acc
    }

    /// `g^-1 self g`: the relabeling of `self` by `g` (the point `x` is renamed `g(x)`).
    pub fn relabel(&self, g: &Perm) -> Perm {
        g.inverse().then(self).then(g)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.apply(i) != i).collect()
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.then(other) == other.then(self)
    }

    pub fn is_even(&self) -> bool {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut j = i;
            let mut len = 0;
            while !seen[j] {
                seen[j] = true;
                j = self.apply(j);
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = vec![];
        for i in 0..n {
            if seen[i] || self.apply(i) == i {
                continue;
            }
            let mut c = vec![];
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                c.push(j);
                j = self.apply(j);
            }
            out.push(c);
        }
        out
    }

    /// Cycle type as sorted cycle lengths (lengths ≥ 2 only).
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<_> = self.cycles().iter().map(|c| c.len()).collect();
        t.sort_unstable();
        t
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Perm {
    /// One-based cycle notation, e.g. `(1 2)(3 4 5)`; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Enumerates every permutation of `{0, .., n-1}` in lexicographic order of image vectors.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = vec![];
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Perm(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Order of the subgroup generated by `gens`, by closure. Only for small degrees.
pub fn generated_order(n: usize, gens: &[Perm]) -> usize {
    use std::collections::HashSet;
    let id = Perm::identity(n);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(g) = stack.pop() {
        for s in gens {
            let h = g.then(s);
            if seen.insert(h.clone()) {
                stack.push(h);
            }
        }
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation() {
        let p = Perm::cycle(5, &[0, 1, 2]);
        assert_eq!(p.to_string(), "(1 2 3)");
        assert_eq!(Perm::identity(3).to_string(), "()");
        assert!(p.is_even());
        assert!(!Perm::transposition(4, 1, 3).is_even());
    }

    #[test]
    fn relabel_renames_points() {
        let t = Perm::transposition(4, 0, 1);
        let g = Perm::cycle(4, &[0, 2, 3]);
        // 0 -> 2, 1 -> 1
        assert_eq!(t.relabel(&g), Perm::transposition(4, 2, 1));
    }

    #[test]
    fn perm_enumeration() {
        assert_eq!(all_perms(4).len(), 24);
        assert_eq!(generated_order(4, &all_perms(4)), 24);
        let s = [Perm::transposition(4, 0, 1), Perm::transposition(4, 0, 2), Perm::transposition(4, 0, 3)];
        assert_eq!(generated_order(4, &s), 24);
    }
}

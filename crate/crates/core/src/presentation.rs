use crate::perm::Perm;

/// A generator with exponent `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub exp: i8,
}

impl Letter {
    pub fn new(gen: usize, exp: i8) -> Self {
        debug_assert!(exp == 1 || exp == -1);
        Letter { gen, exp }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, exp: -self.exp }
    }
}

pub type Word = Vec<Letter>;

pub fn inverse_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inverse()).collect()
}

/// Free reduction.
pub fn reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generator_count: usize,
    pub relators: Vec<Word>,
    pub meridians: Vec<bool>,
    pub labels: Vec<Option<String>>,
}

impl GroupPresentation {
    pub fn new(generator_count: usize, relators: Vec<Word>) -> Self {
        GroupPresentation {
            generator_count,
            relators,
            meridians: vec![false; generator_count],
            labels: vec![None; generator_count],
        }
    }

    /// Exponent-sum matrix, one row per relator.
    pub fn relation_matrix(&self) -> Vec<Vec<i64>> {
        self.relators.iter().map(|r| exponent_sums(r, self.generator_count)).collect()
    }
}

pub fn exponent_sums(w: &[Letter], n: usize) -> Vec<i64> {
    let mut row = vec![0i64; n];
    for l in w {
        row[l.gen] += l.exp as i64;
    }
    row
}

/// Image of `w` under the homomorphism sending generator `g` to `images[g]`
/// (left-to-right composition).
pub fn evaluate(w: &[Letter], images: &[Perm]) -> Perm {
    let n = images.first().map(|p| p.degree()).unwrap_or(0);
    let mut acc = Perm::identity(n);
    for l in w {
        let g = &images[l.gen];
        acc = if l.exp > 0 { acc.then(g) } else { acc.then(&g.inverse()) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let w = vec![Letter::new(0, 1), Letter::new(1, 1), Letter::new(1, -1), Letter::new(0, -1), Letter::new(2, 1)];
        assert_eq!(reduce(&w), vec![Letter::new(2, 1)]);
        assert_eq!(reduce(&[&w[..], &inverse_word(&w)[..]].concat()), vec![]);
    }
}

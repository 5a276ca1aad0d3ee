use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// A braid word in the Artin generators. Letter `i > 0` is `σ_i`, `-i` is `σ_i^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidWord {
    pub strands: usize,
    #[serde(rename = "word")]
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        let b = BraidWord { strands, letters };
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<()> {
        if self.strands == 0 {
            return Err(Error::InvalidBraid("braid needs at least one strand".into()));
        }
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            if l == 0 || i >= self.strands {
                return Err(Error::InvalidBraid(format!("letter {l} out of range for {} strands", self.strands)));
            }
        }
        Ok(())
    }

    /// Underlying permutation: position `j` at the bottom ends at position `p(j)` at the top.
    pub fn permutation(&self) -> Perm {
        let mut at: Vec<u8> = (0..self.strands as u8).collect(); // at[pos] = strand
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut end = vec![0u8; self.strands];
        for (pos, &s) in at.iter().enumerate() {
            end[s as usize] = pos as u8;
        }
        Perm::from_images(end).expect("swaps preserve bijectivity")
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        let p = self.permutation();
        let fixed = (0..self.strands).filter(|&i| p.apply(i) == i).count();
        p.cycles().len() + fixed
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }
}

/// `σ_1^3 σ_2^3 ⋯ σ_k^3` on `k + 1` strands; its closure is the `k`-fold sum of trefoils.
pub fn trefoil_sum_braid(k: usize) -> BraidWord {
    assert!(k >= 1, "need at least one summand");
    let letters = (1..=k as i32).flat_map(|i| [i, i, i]).collect();
    BraidWord { strands: k + 1, letters }
}

/// `β_m` on `2m + 2` strands: the doubled `T(2,5)^m` companion with its framing twists.
///
/// `(σ_2 σ_1 σ_3 σ_2)^5 σ_3 (σ_4 σ_3 σ_5 σ_4)^5 σ_5 ⋯ (σ_2m σ_2m-1 σ_2m+1 σ_2m)^5 σ_2m+1 σ_1`
pub fn whitehead_companion_braid(m: usize) -> BraidWord {
    assert!(m >= 1);
    let mut letters = vec![];
    for j in 1..=m as i32 {
        let (a, b, c) = (2 * j, 2 * j - 1, 2 * j + 1);
        for _ in 0..5 {
            letters.extend([a, b, c, a]);
        }
        letters.push(c);
    }
    letters.push(1);
    BraidWord { strands: 2 * m + 2, letters }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_sums() {
        assert_eq!(trefoil_sum_braid(1), BraidWord { strands: 2, letters: vec![1, 1, 1] });
        assert_eq!(trefoil_sum_braid(2).letters, vec![1, 1, 1, 2, 2, 2]);
        assert_eq!(trefoil_sum_braid(3).strands, 4);
        for k in 1..6 {
            assert_eq!(trefoil_sum_braid(k).closure_components(), 1);
        }
    }

    #[test]
    fn companion_braid_shape() {
        let b = whitehead_companion_braid(1);
        assert_eq!(b.strands, 4);
        assert_eq!(b.letters.len(), 22);
        assert_eq!(&b.letters[..4], &[2, 1, 3, 2]);
        assert_eq!(&b.letters[20..], &[3, 1]);
        let b2 = whitehead_companion_braid(2);
        assert_eq!(b2.strands, 6);
        assert_eq!(b2.letters.len(), 43);
        // the doubled pattern closes into two components before the clasp is added
        assert_eq!(b.closure_components(), 2);
    }

    #[test]
    fn rejects_bad_letters() {
        assert!(BraidWord::new(2, vec![2]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::new(1, vec![]).is_ok());
    }
}

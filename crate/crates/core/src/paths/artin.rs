//! Braid equivalence through the Artin action on the free group.

/// Free group word: `k` stands for `x_k`, `-k` for its inverse (`k >= 1`).
pub type FreeWord = Vec<i32>;

fn push_reduced(out: &mut FreeWord, x: i32) {
    if out.last() == Some(&-x) {
        out.pop();
    } else {
        out.push(x);
    }
}

fn substitute(w: &[i32], images: &[FreeWord]) -> FreeWord {
    let mut out = vec![];
    for &x in w {
        let img = &images[x.unsigned_abs() as usize - 1];
        if x > 0 {
            for &y in img {
                push_reduced(&mut out, y);
            }
        } else {
            for &y in img.iter().rev() {
                push_reduced(&mut out, -y);
            }
        }
    }
    out
}

/// Images of `x_1..x_n` under the automorphism of the braid word, with
/// `σ_i: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i`. The action is faithful, so two
/// braids are equal exactly when their images agree.
pub fn artin_images(strands: usize, word: &[i32]) -> Vec<FreeWord> {
    let mut images: Vec<FreeWord> = (1..=strands as i32).map(|k| vec![k]).collect();
    for &l in word {
        let i = l.unsigned_abs() as i32;
        let mut sub: Vec<FreeWord> = (1..=strands as i32).map(|k| vec![k]).collect();
        let (a, b) = ((i - 1) as usize, i as usize);
        if l > 0 {
            sub[a] = vec![i, i + 1, -i];
            sub[b] = vec![i];
        } else {
            sub[a] = vec![i + 1];
            sub[b] = vec![-(i + 1), i, i + 1];
        }
        images = images.iter().map(|w| substitute(w, &sub)).collect();
    }
    images
}

pub fn braid_equivalent(strands: usize, u: &[i32], v: &[i32]) -> bool {
    artin_images(strands, u) == artin_images(strands, v)
}

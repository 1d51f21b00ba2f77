//! Parabolic double cosets P_a \ GL_m(F_q) / P_α and their Weyl representatives.

use serde::Serialize;

use crate::symgroup::{w_of, KMatrix};

use super::matrix::{gl_group, gl_subgroup, FqMatrix};
use super::GlError;

#[derive(Debug, Clone, Serialize)]
pub struct BruhatReport {
    pub a: usize,
    pub alpha: usize,
    pub m: usize,
    pub q: u32,
    pub double_cosets: usize,
    pub k_solutions: usize,
    /// Double coset index hit by each w(k), in `KMatrix::solutions` order.
    pub images: Vec<usize>,
    pub bijective: bool,
}

pub fn verify_bruhat_bijection(a: usize, alpha: usize, m: usize, q: u32) -> Result<BruhatReport, GlError> {
    if a > m || alpha > m {
        return Err(GlError::InvalidArgument(format!("need a, α ≤ m = {m}")));
    }
    let g = gl_group(m, q)?;
    let left = gl_subgroup(&g, &format!("P({a},{})", m - a))?;
    let right = gl_subgroup(&g, &format!("P({alpha},{})", m - alpha))?;
    let lgens: Vec<FqMatrix> = left.generators().into_iter().copied().collect();
    let rgens: Vec<FqMatrix> = right.generators().into_iter().copied().collect();

    let mut label = vec![usize::MAX; g.order()];
    let mut count = 0;
    for start in 0..g.order() {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = count;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let x = g.element(i);
            let moves = lgens.iter().map(|p| p.mul(x)).chain(rgens.iter().map(|p| x.mul(p)));
            for y in moves {
                let j = g.index_of(&y).expect("closed under multiplication");
                if label[j] == usize::MAX {
                    label[j] = count;
                    stack.push(j);
                }
            }
        }
        count += 1;
    }

    let f = g.identity().field();
    let solutions = KMatrix::solutions(a, alpha, m).map_err(|e| GlError::InvalidArgument(e.to_string()))?;
    let images: Vec<usize> = solutions
        .iter()
        .map(|k| {
            let w = FqMatrix::permutation(f, &w_of(k, a, alpha, m));
            label[g.index_of(&w).expect("permutation matrices are invertible")]
        })
        .collect();
    let mut seen = images.clone();
    seen.sort_unstable();
    seen.dedup();
    let bijective = seen.len() == images.len() && images.len() == count;
    Ok(BruhatReport { a, alpha, m, q, double_cosets: count, k_solutions: solutions.len(), images, bijective })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let r = verify_bruhat_bijection(1, 1, 2, 2).unwrap();
        assert_eq!(r.double_cosets, 2);
        assert!(r.bijective);
        let r = verify_bruhat_bijection(0, 1, 2, 3).unwrap();
        assert_eq!(r.double_cosets, 1);
        assert!(r.bijective);
        let r = verify_bruhat_bijection(1, 2, 3, 2).unwrap();
        assert_eq!(r.double_cosets, r.k_solutions);
        assert!(r.bijective);
    }

    #[test]
    fn sweep() {
        for q in [2, 3] {
            for m in 1..=3 {
                for a in 0..=m {
                    for alpha in 0..=m {
                        let r = verify_bruhat_bijection(a, alpha, m, q).unwrap();
                        assert!(r.bijective, "{r:?}");
                    }
                }
            }
        }
    }
}

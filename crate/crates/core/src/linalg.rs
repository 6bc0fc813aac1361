//! Small dense rational matrices. Ranks here never exceed a few dozen, so
//! plain Gauss–Jordan elimination is all that is needed.

use num_traits::{One, Zero};

use crate::rational::Rational;

pub type RationalMatrix = Vec<Vec<Rational>>;

pub fn from_integers(rows: &[Vec<i64>]) -> RationalMatrix {
    rows.iter()
        .map(|row| row.iter().map(|&a| crate::rational::int(a)).collect())
        .collect()
}

pub fn transpose(m: &RationalMatrix) -> RationalMatrix {
    let n = m.len();
    let k = m.first().map_or(0, Vec::len);
    (0..k)
        .map(|j| (0..n).map(|i| m[i][j].clone()).collect())
        .collect()
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(m: &RationalMatrix) -> Option<RationalMatrix> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                let (pivot_row, target) = if r < col {
                    let (lo, hi) = aug.split_at_mut(col);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = aug.split_at_mut(r);
                    (&lo[col], &mut hi[0])
                };
                for (t, p) in target.iter_mut().zip(pivot_row) {
                    *t = &*t - &factor * p;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn determinant(m: &RationalMatrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        det = &det * &a[col][col];
        for r in col + 1..n {
            let factor = &a[r][col] / &a[col][col];
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] = &a[r][c] - delta;
            }
        }
    }
    det
}

pub fn mat_vec(m: &RationalMatrix, v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, x)| a * x).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn inverse_of_a2_cartan() {
        let a = from_integers(&[vec![2, -1], vec![-1, 2]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(
            inv,
            vec![vec![frac(2, 3), frac(1, 3)], vec![frac(1, 3), frac(2, 3)]]
        );
        assert_eq!(determinant(&a), int(3));
    }

    #[test]
    fn singular() {
        let a = from_integers(&[vec![1, 2], vec![2, 4]]);
        assert!(inverse(&a).is_none());
        assert_eq!(determinant(&a), int(0));
    }
}

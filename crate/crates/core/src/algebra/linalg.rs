//! Exact rank and determinant over the Gaussian rationals.

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Row-reduces a copy of `rows` and returns its rank.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = Scalar::one() / m[rank][col].clone();
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() * inv.clone();
            for c in col..ncols {
                let v = m[rank][c].clone() * factor.clone();
                m[r][c] = m[r][c].clone() - v;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Determinant of a square matrix.
pub fn determinant(rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Scalar::zero();
        };
        if pivot != col {
            m.swap(col, pivot);
            det = -det;
        }
        det *= m[col][col].clone();
        let inv = Scalar::one() / m[col][col].clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() * inv.clone();
            for c in col..n {
                let v = m[col][c].clone() * factor.clone();
                m[r][c] = m[r][c].clone() - v;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::from_int;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&v| from_int(v)).collect()).collect()
    }

    #[test]
    fn rank_and_det() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&m), 2);
        assert!(determinant(&m).is_zero());
        let m = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(determinant(&m), from_int(-1));
        assert_eq!(rank(&m), 2);
        let m = mat(&[&[2, 0, 0], &[0, 3, 0], &[1, 0, 4]]);
        assert_eq!(determinant(&m), from_int(24));
    }
}

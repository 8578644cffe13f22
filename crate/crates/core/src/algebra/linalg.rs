//! Dense exact linear algebra over the rationals (Gaussian elimination).

use num_traits::{One, Zero};

use super::rational::Rat;

pub type Matrix = Vec<Vec<Rat>>;

/// Row-reduces a copy of `a`, returning the rank and the determinant
/// (meaningful only for square input).
fn eliminate(a: &Matrix) -> (usize, Rat) {
    let mut m = a.clone();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut det = Rat::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            det = Rat::zero();
            continue;
        };
        if piv != rank {
            m.swap(piv, rank);
            det = -det;
        }
        let p = m[rank][col].clone();
        det *= &p;
        for r in rank + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..cols {
                let delta = &f * &m[rank][c];
                m[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    if rank < rows.min(cols) || rows != cols {
        det = Rat::zero();
    }
    (rank, det)
}

pub fn rank(a: &Matrix) -> usize {
    eliminate(a).0
}

pub fn determinant(a: &Matrix) -> Rat {
    assert!(a.iter().all(|r| r.len() == a.len()), "matrix is not square");
    if a.is_empty() {
        return Rat::one();
    }
    eliminate(a).1
}

/// Solves `a·x = b` for square nonsingular `a`; `None` if singular.
pub fn solve(a: &Matrix, b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(piv, col);
        let p = m[col][col].clone();
        for c in col..=n {
            m[col][c] /= &p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..=n {
                let delta = &f * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

pub fn transpose(a: &Matrix) -> Matrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|c| a.iter().map(|r| r[c].clone()).collect())
        .collect()
}

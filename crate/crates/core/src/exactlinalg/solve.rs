use num_traits::{One, Zero};

use super::{primitive_integer, ExactMatrix, Rat};
use crate::error::{Error, Result};

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub rows: Vec<Vec<Rat>>,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination. Columns are scanned left to right and the pivot
/// row is the first remaining row with a nonzero entry in that column.
pub fn rref(rows: &[Vec<Rat>], cols: usize) -> Rref {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rat::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for k in 0..cols {
                if !m[r][k].is_zero() {
                    let v = &m[r][k] * &f;
                    m[i][k] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Rref { rows: m, pivots }
}

pub fn rank(rows: &[Vec<Rat>], cols: usize) -> usize {
    rref(rows, cols).pivots.len()
}

/// One exact solution of `A x = b`, or `None` when the system is
/// inconsistent. Free variables are set to zero, so the result is the
/// deterministic representative selected by the left-to-right pivots.
pub fn solve_rational(a: &ExactMatrix, b: &[Rat]) -> Result<Option<Vec<Rat>>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "matrix has {} rows, right-hand side has {} entries",
            a.rows(),
            b.len()
        )));
    }
    let n = a.cols();
    let aug: Vec<Vec<Rat>> = (0..a.rows())
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let red = rref(&aug, n + 1);
    if red.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![Rat::zero(); n];
    for (row, &p) in red.rows.iter().zip(&red.pivots) {
        x[p] = row[n].clone();
    }
    Ok(Some(x))
}

/// Basis of the right kernel, one vector per free column, each scaled to a
/// primitive integer vector (stored as rationals).
pub fn kernel_basis(a: &ExactMatrix) -> Vec<Vec<Rat>> {
    let n = a.cols();
    let red = rref(&a.row_vecs(), n);
    let mut basis = Vec::new();
    for f in (0..n).filter(|c| !red.pivots.contains(c)) {
        let mut v = vec![Rat::zero(); n];
        v[f] = Rat::one();
        for (row, &p) in red.rows.iter().zip(&red.pivots) {
            v[p] = -row[f].clone();
        }
        basis.push(primitive_integer(&v).into_iter().map(Rat::from_integer).collect());
    }
    basis
}

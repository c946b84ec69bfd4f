//! Hermite and Smith normal forms over `Z`.
//!
//! Pivot rule: smallest nonzero absolute value, ties broken by the lowest row
//! index and then the lowest column index.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactMatrix, Int, LatticeVector};
use crate::error::{Error, Result};

type IntRows = Vec<Vec<Int>>;

fn identity(n: usize) -> IntRows {
    (0..n).map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect()).collect()
}

fn to_matrix(rows: &IntRows, cols: usize) -> ExactMatrix {
    ExactMatrix::from_int_rows(rows, cols).expect("rectangular by construction")
}

/// `row[dst] -= q * row[src]`
fn row_axpy(m: &mut IntRows, dst: usize, src: usize, q: &Int) {
    if q.is_zero() {
        return;
    }
    let (d, s) = if dst < src {
        let (a, b) = m.split_at_mut(src);
        (&mut a[dst], &b[0])
    } else {
        let (a, b) = m.split_at_mut(dst);
        (&mut b[0], &a[src])
    };
    for (x, y) in d.iter_mut().zip(s) {
        *x -= q * y;
    }
}

/// `col[dst] -= q * col[src]`
fn col_axpy(m: &mut IntRows, dst: usize, src: usize, q: &Int) {
    if q.is_zero() {
        return;
    }
    for row in m.iter_mut() {
        let v = q * &row[src];
        row[dst] -= v;
    }
}

fn negate_row(m: &mut IntRows, r: usize) {
    for x in m[r].iter_mut() {
        *x = -x.clone();
    }
}

/// Row-style Hermite normal form: returns `(H, U)` with `H = U * m`, `U`
/// unimodular, pivots positive and entries above each pivot reduced into
/// `[0, pivot)`.
pub fn hermite_normal_form(m: &ExactMatrix) -> Result<(ExactMatrix, ExactMatrix)> {
    let mut a = m.to_int_rows()?;
    let (rows, cols) = (m.rows(), m.cols());
    let mut u = identity(rows);
    let mut p = 0;
    for c in 0..cols {
        if p == rows {
            break;
        }
        loop {
            let best = (p..rows)
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()).then(i.cmp(&j)));
            let Some(best) = best else { break };
            a.swap(p, best);
            u.swap(p, best);
            let mut done = true;
            for i in p + 1..rows {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = &a[i][c] / &a[p][c];
                row_axpy(&mut a, i, p, &q);
                row_axpy(&mut u, i, p, &q);
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[p][c].is_zero() {
            continue;
        }
        if a[p][c].is_negative() {
            negate_row(&mut a, p);
            negate_row(&mut u, p);
        }
        for i in 0..p {
            let q = a[i][c].div_floor(&a[p][c]);
            row_axpy(&mut a, i, p, &q);
            row_axpy(&mut u, i, p, &q);
        }
        p += 1;
    }
    Ok((to_matrix(&a, cols), to_matrix(&u, rows)))
}

pub(crate) struct Smith {
    pub d: IntRows,
    pub u: IntRows,
    pub v: IntRows,
    pub v_inv: IntRows,
    pub rank: usize,
}

pub(crate) fn smith_int(m: &IntRows, cols: usize) -> Smith {
    let rows = m.len();
    let mut a = m.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let mut v_inv = identity(cols);
    let mut rank = 0;
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return Smith { d: a, u, v, v_inv, rank };
            };
            a.swap(t, bi);
            u.swap(t, bi);
            if bj != t {
                for row in a.iter_mut() {
                    row.swap(t, bj);
                }
                for row in v.iter_mut() {
                    row.swap(t, bj);
                }
                v_inv.swap(t, bj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                row_axpy(&mut a, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                col_axpy(&mut a, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                // inverse of the column operation acts on the rows of V^-1
                row_axpy(&mut v_inv, t, j, &(-q));
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad_row = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad_row {
                Some(i) => {
                    row_axpy(&mut a, t, i, &(-Int::one()));
                    row_axpy(&mut u, t, i, &(-Int::one()));
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            negate_row(&mut a, t);
            negate_row(&mut u, t);
        }
        rank += 1;
    }
    Smith { d: a, u, v, v_inv, rank }
}

/// Smith normal form: returns `(D, U, V)` with `D = U * m * V` diagonal,
/// `d_1 | d_2 | ...`, and `U`, `V` unimodular.
pub fn smith_normal_form(m: &ExactMatrix) -> Result<(ExactMatrix, ExactMatrix, ExactMatrix)> {
    let a = m.to_int_rows()?;
    let s = smith_int(&a, m.cols());
    Ok((to_matrix(&s.d, m.cols()), to_matrix(&s.u, m.rows()), to_matrix(&s.v, m.cols())))
}

/// Index of the lattice spanned by `vectors` inside the saturation of their
/// rational span (the product of the invariant factors).
pub fn lattice_index(vectors: &[LatticeVector], k: usize) -> Result<Int> {
    if vectors.len() != k {
        return Err(Error::DimensionMismatch(format!("expected {k} vectors, got {}", vectors.len())));
    }
    if k == 0 {
        return Ok(Int::one());
    }
    let dim = vectors[0].dim();
    if vectors.iter().any(|v| v.dim() != dim) {
        return Err(Error::DimensionMismatch("vectors of different lengths".into()));
    }
    let rows: IntRows = vectors.iter().map(|v| v.0.clone()).collect();
    let s = smith_int(&rows, dim);
    if s.rank < k {
        return Err(Error::DependentVectors);
    }
    Ok((0..k).fold(Int::one(), |acc, i| acc * &s.d[i][i]))
}

/// Index of the group generated by `vectors` (possibly dependent) inside
/// the saturation of their span, together with the rank of the span.
pub fn generated_index(vectors: &[LatticeVector], dim: usize) -> (Int, usize) {
    if vectors.is_empty() {
        return (Int::one(), 0);
    }
    let rows: IntRows = vectors.iter().map(|v| v.0.clone()).collect();
    let s = smith_int(&rows, dim);
    ((0..s.rank).fold(Int::one(), |acc, i| acc * &s.d[i][i]), s.rank)
}

/// A basis of `Z^n ∩ span(vectors)`.
pub fn saturated_basis(vectors: &[LatticeVector], dim: usize) -> Vec<LatticeVector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let rows: IntRows = vectors.iter().map(|v| v.0.clone()).collect();
    let s = smith_int(&rows, dim);
    s.v_inv.into_iter().take(s.rank).map(LatticeVector).collect()
}

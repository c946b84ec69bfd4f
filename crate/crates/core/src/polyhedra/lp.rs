//! Exact feasibility for `G λ = p, λ >= 0` by phase-one simplex with Bland's
//! rule.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlinalg::Rat;

/// A point together with the generators of the cone it is tested against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeMembershipQuery {
    pub point: Vec<Rat>,
    pub generators: Vec<Vec<Rat>>,
}

/// Whether `point` is a nonnegative combination of `generators`.
pub fn cone_contains(q: &ConeMembershipQuery) -> Result<bool> {
    Ok(nonnegative_combination(&q.point, &q.generators)?.is_some())
}

/// A witness `λ >= 0` with `Σ λ_i g_i = point`, if one exists.
pub fn nonnegative_combination(point: &[Rat], generators: &[Vec<Rat>]) -> Result<Option<Vec<Rat>>> {
    let n = point.len();
    if let Some(g) = generators.iter().find(|g| g.len() != n) {
        return Err(Error::DimensionMismatch(format!("generator of length {} for a point in R^{n}", g.len())));
    }
    let m = generators.len();
    let width = m + n + 1;
    // tableau rows: [λ | artificials | rhs]
    let mut t: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let flip = point[i].is_negative();
            let mut row = vec![Rat::zero(); width];
            for (j, g) in generators.iter().enumerate() {
                row[j] = if flip { -g[i].clone() } else { g[i].clone() };
            }
            row[m + i] = Rat::one();
            row[width - 1] = point[i].abs();
            row
        })
        .collect();
    let mut basis: Vec<usize> = (m..m + n).collect();
    // reduced costs of the phase-one objective Σ artificials
    let mut cost = vec![Rat::zero(); width];
    for row in &t {
        for j in 0..m {
            cost[j] -= &row[j];
        }
        cost[width - 1] -= &row[width - 1];
    }
    loop {
        let Some(enter) = (0..m + n).find(|&j| cost[j].is_negative()) else { break };
        let mut leave: Option<usize> = None;
        for i in 0..n {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][width - 1] / &t[i][enter];
            leave = match leave {
                None => Some(i),
                Some(l) => {
                    let best = &t[l][width - 1] / &t[l][enter];
                    if ratio < best || (ratio == best && basis[i] < basis[l]) {
                        Some(i)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        // unbounded is impossible: the objective is bounded below by zero
        let Some(r) = leave else { break };
        let piv = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x /= &piv;
        }
        let prow = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == r || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let f = cost[enter].clone();
        for (x, y) in cost.iter_mut().zip(&prow) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
        basis[r] = enter;
    }
    if !cost[width - 1].is_zero() {
        return Ok(None);
    }
    let mut lambda = vec![Rat::zero(); m];
    for (i, &b) in basis.iter().enumerate() {
        if b < m {
            lambda[b] = t[i][width - 1].clone();
        }
    }
    Ok(Some(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::rat;

    fn q(p: &[i64], g: &[&[i64]]) -> ConeMembershipQuery {
        ConeMembershipQuery {
            point: p.iter().map(|&x| rat(x)).collect(),
            generators: g.iter().map(|v| v.iter().map(|&x| rat(x)).collect()).collect(),
        }
    }

    #[test]
    fn quadrant_membership() {
        assert!(cone_contains(&q(&[1, 0], &[&[1, 0], &[0, 1]])).unwrap());
        assert!(!cone_contains(&q(&[-1, 0], &[&[1, 0], &[0, 1]])).unwrap());
        assert!(cone_contains(&q(&[0, 0], &[])).unwrap());
        assert!(!cone_contains(&q(&[0, 1], &[])).unwrap());
    }

    #[test]
    fn witness_is_valid() {
        let gens: Vec<Vec<Rat>> = vec![vec![rat(1), rat(2)], vec![rat(3), rat(-1)], vec![rat(-1), rat(-1)]];
        let p = vec![rat(5), rat(-4)];
        let l = nonnegative_combination(&p, &gens).unwrap().unwrap();
        for i in 0..2 {
            let s: Rat = l.iter().zip(&gens).map(|(a, g)| a * &g[i]).sum();
            assert_eq!(s, p[i]);
        }
        assert!(l.iter().all(|x| !x.is_negative()));
    }

    #[test]
    fn mismatched_lengths() {
        let bad = ConeMembershipQuery { point: vec![rat(1)], generators: vec![vec![rat(1), rat(0)]] };
        assert!(matches!(cone_contains(&bad), Err(Error::DimensionMismatch(_))));
    }
}

//! Orders of vanishing of a Laurent polynomial, restricted to a linear space,
//! along the boundary divisors of a tropical compactification.
//!
//! The space is parametrized by `z` with `x_i = ℓ_{i+1}(z) / ℓ_0(z)`. After
//! clearing denominators `f|_Y = P(z) / Π ℓ_j^{N_j}`. For a weight `w` on the
//! Bergman fan, a basis of forms picked greedily by decreasing weight gives
//! coordinates in which the valuation is monomial with those weights.

use std::collections::HashMap;

use num_traits::{ToPrimitive, Zero};

use super::LinearSystem;
use crate::error::{Error, Result};
use crate::exactlinalg::{rank, rat_from_int, solve_rational, ExactMatrix, Int, LatticeVector, Rat};
use crate::tropical::LaurentPolynomial;

type Poly = HashMap<Vec<u32>, Rat>;

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let v = out.entry(e).or_insert_with(Rat::zero);
            *v += ca * cb;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn pow(a: &Poly, k: u32, vars: usize) -> Poly {
    let mut out = Poly::from([(vec![0; vars], Rat::from_integer(1.into()))]);
    for _ in 0..k {
        out = mul(&out, a);
    }
    out
}

/// `ord_w(f|_Y)` for each weight vector `w` in `Z^m`, read as `(0, w)` on the
/// hyperplanes `(ℓ_0, ..., ℓ_m)`.
pub(crate) fn boundary_orders(
    linear: &LinearSystem,
    f: &LaurentPolynomial,
    weights: &[LatticeVector],
) -> Result<Vec<Rat>> {
    let real = linear.realization()?;
    let r = real.rows();
    let forms: Vec<Vec<Rat>> = (0..real.cols()).map(|j| real.column(j)).collect();

    let mut exps: Vec<Vec<i64>> = Vec::new();
    for (_, a) in f.terms() {
        let a: Vec<i64> = a
            .iter()
            .map(|x| x.to_i64().ok_or_else(|| Error::Invalid("exponent too large".into())))
            .collect::<Result<_>>()?;
        exps.push(std::iter::once(-a.iter().sum::<i64>()).chain(a).collect());
    }
    let shift: Vec<i64> = (0..forms.len()).map(|j| exps.iter().map(|e| -e[j]).max().unwrap_or(0).max(0)).collect();

    weights
        .iter()
        .map(|w| {
            let wt: Vec<Int> = std::iter::once(Int::zero()).chain(w.iter().cloned()).collect();
            let mut order: Vec<usize> = (0..forms.len()).collect();
            order.sort_by(|&a, &b| wt[b].cmp(&wt[a]).then(a.cmp(&b)));
            let mut basis: Vec<usize> = Vec::new();
            for j in order {
                let mut rows: Vec<Vec<Rat>> = basis.iter().map(|&b| forms[b].clone()).collect();
                rows.push(forms[j].clone());
                if rank(&rows, r) == rows.len() {
                    basis.push(j);
                }
                if basis.len() == r {
                    break;
                }
            }
            // each form in the new coordinates
            let bt = ExactMatrix::from_rows(
                (0..r).map(|i| basis.iter().map(|&b| forms[b][i].clone()).collect()).collect(),
                r,
            )?;
            let lin: Vec<Poly> = forms
                .iter()
                .map(|l| {
                    let c = solve_rational(&bt, l)?.expect("basis spans every form");
                    Ok(c.into_iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(k, v)| {
                            let mut e = vec![0; r];
                            e[k] = 1;
                            (e, v)
                        })
                        .collect())
                })
                .collect::<Result<_>>()?;
            let mut p = Poly::new();
            for ((c, _), e) in f.terms().iter().zip(&exps) {
                let mut t = Poly::from([(vec![0; r], c.clone())]);
                for (j, l) in lin.iter().enumerate() {
                    t = mul(&t, &pow(l, (e[j] + shift[j]) as u32, r));
                }
                for (k, v) in t {
                    *p.entry(k).or_insert_with(Rat::zero) += v;
                }
            }
            p.retain(|_, v| !v.is_zero());
            let val = p
                .keys()
                .map(|e| e.iter().zip(&basis).map(|(&k, &b)| Int::from(k) * &wt[b]).sum::<Int>())
                .min()
                .ok_or_else(|| Error::Invalid("the polynomial vanishes on the linear space".into()))?;
            let cleared: Int = shift.iter().zip(&wt).map(|(&n, x)| Int::from(n) * x).sum();
            Ok(rat_from_int(&(val - cleared)))
        })
        .collect()
}

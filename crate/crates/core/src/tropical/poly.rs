use std::collections::BTreeMap;

use num_traits::Zero;

use super::TropicalCycle;
use crate::error::{Error, Result};
use crate::exactlinalg::{dot_int, gcd_all, kernel_basis, primitive_integer, ExactMatrix, Int, LatticeVector, Rat};
use crate::polyhedra::Cone;

/// A Laurent polynomial with rational coefficients. Terms are kept sorted by
/// exponent, with no repeats and no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPolynomial {
    num_vars: usize,
    terms: Vec<(Rat, Vec<Int>)>,
}

impl LaurentPolynomial {
    pub fn new(num_vars: usize, terms: Vec<(Rat, Vec<Int>)>) -> Result<LaurentPolynomial> {
        let mut map: BTreeMap<Vec<Int>, Rat> = BTreeMap::new();
        for (c, e) in terms {
            if e.len() != num_vars {
                return Err(Error::DimensionMismatch(format!(
                    "exponent of length {} in {num_vars} variables",
                    e.len()
                )));
            }
            *map.entry(e).or_insert_with(Rat::zero) += c;
        }
        let terms = map.into_iter().filter(|(_, c)| !c.is_zero()).map(|(e, c)| (c, e)).collect();
        Ok(LaurentPolynomial { num_vars, terms })
    }

    /// Convenience constructor from `(coefficient, exponents)` literals.
    pub fn from_i64(num_vars: usize, terms: &[(i64, &[i64])]) -> Result<LaurentPolynomial> {
        Self::new(
            num_vars,
            terms
                .iter()
                .map(|(c, e)| (Rat::from_integer((*c).into()), e.iter().map(|&x| Int::from(x)).collect()))
                .collect(),
        )
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &[(Rat, Vec<Int>)] {
        &self.terms
    }

    /// Negated exponents: converts between the min and max conventions.
    pub fn negate_exponents(&self) -> LaurentPolynomial {
        let terms = self.terms.iter().map(|(c, e)| (c.clone(), e.iter().map(|x| -x).collect())).collect();
        LaurentPolynomial::new(self.num_vars, terms).expect("same shape")
    }
}

/// The tropical hypersurface of `f` under the min convention: the normal
/// cones of the edges of the Newton polytope, weighted by lattice length.
pub fn tropical_hypersurface(f: &LaurentPolynomial) -> Result<TropicalCycle> {
    let exps: Vec<&Vec<Int>> = f.terms.iter().map(|(_, e)| e).collect();
    if exps.len() < 2 {
        return Err(Error::EmptyHypersurface);
    }
    let n = f.num_vars;
    let diffs: Vec<Vec<Rat>> =
        exps[1..].iter().map(|e| e.iter().zip(exps[0]).map(|(a, b)| Rat::from_integer(a - b)).collect()).collect();
    let lineality: Vec<LatticeVector> = kernel_basis(&ExactMatrix::from_rows(diffs, n)?)
        .into_iter()
        .map(|v| LatticeVector(primitive_integer(&v)))
        .collect();

    let mut cells: Vec<Cone> = Vec::new();
    for i in 0..exps.len() {
        for j in i + 1..exps.len() {
            let eq = LatticeVector(exps[i].iter().zip(exps[j]).map(|(a, b)| a - b).collect());
            let ineq: Vec<LatticeVector> =
                exps.iter().map(|c| LatticeVector(c.iter().zip(exps[i]).map(|(a, b)| a - b).collect())).collect();
            let c = Cone::from_inequalities(n, &ineq, &[eq])?;
            if c.dim() + 1 == n && !cells.contains(&c) {
                cells.push(c);
            }
        }
    }
    let mut weighted = Vec::with_capacity(cells.len());
    for c in cells {
        let w: Vec<Int> = c.rays().iter().fold(vec![Int::zero(); n], |mut acc, r| {
            for (a, b) in acc.iter_mut().zip(r.iter()) {
                *a += b;
            }
            acc
        });
        let vals: Vec<Int> = exps.iter().map(|e| dot_int(e, &w)).collect();
        let min = vals.iter().min().expect("nonempty").clone();
        let edge: Vec<&Vec<Int>> = exps.iter().zip(&vals).filter(|(_, v)| **v == min).map(|(e, _)| *e).collect();
        let d: Vec<Int> = edge[1].iter().zip(edge[0]).map(|(a, b)| a - b).collect();
        let lo = edge.iter().min_by_key(|e| dot_int(e, &d)).expect("nonempty");
        let hi = edge.iter().max_by_key(|e| dot_int(e, &d)).expect("nonempty");
        let len = gcd_all(&hi.iter().zip(lo.iter()).map(|(a, b)| a - b).collect::<Vec<_>>());
        weighted.push((c, len));
    }
    let t = TropicalCycle::from_cones(n, &lineality, n - 1, weighted)?;
    t.require_balanced()?;
    Ok(t)
}

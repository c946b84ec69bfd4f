use std::sync::Arc;

use super::{class_from_tropical, ClassRecovery, StructuredIdeal};
use crate::error::{Error, Result};
use crate::exactlinalg::{solve_rational, ExactMatrix, Int, Rat};
use crate::toric::ToricVariety;
use crate::tropical::LaurentPolynomial;

/// A polynomial in the Cox ring, one variable per ray.
#[derive(Clone, Debug)]
pub struct CoxPolynomial {
    variety: Arc<ToricVariety>,
    terms: Vec<(Rat, Vec<Int>)>,
}

impl CoxPolynomial {
    pub fn new(variety: Arc<ToricVariety>, terms: Vec<(Rat, Vec<Int>)>) -> Result<CoxPolynomial> {
        let r = variety.num_rays();
        if let Some((_, e)) = terms.iter().find(|(_, e)| e.len() != r) {
            return Err(Error::DimensionMismatch(format!("exponent of length {} for {r} rays", e.len())));
        }
        if terms.is_empty() {
            return Err(Error::Invalid("the zero polynomial defines no hypersurface".into()));
        }
        Ok(CoxPolynomial { variety, terms })
    }

    pub fn variety(&self) -> &Arc<ToricVariety> {
        &self.variety
    }

    pub fn terms(&self) -> &[(Rat, Vec<Int>)] {
        &self.terms
    }
}

/// Divides by the first monomial and rewrites every quotient as a character
/// of the torus.
pub fn cox_dehomogenize(g: &CoxPolynomial) -> Result<LaurentPolynomial> {
    let x = &g.variety;
    let n = x.dim();
    let rays = ExactMatrix::from_rows(x.fan().ray_rats(), n)?;
    let reference = &g.terms[0].1;
    let mut terms = Vec::with_capacity(g.terms.len());
    for (c, e) in &g.terms {
        let rhs: Vec<Rat> = e.iter().zip(reference).map(|(a, b)| Rat::from_integer(a - b)).collect();
        let m = solve_rational(&rays, &rhs)?.ok_or(Error::Inhomogeneous)?;
        if m.iter().any(|v| !v.is_integer()) {
            return Err(Error::Inhomogeneous);
        }
        terms.push((c.clone(), m.into_iter().map(|v| v.to_integer()).collect()));
    }
    LaurentPolynomial::new(n, terms)
}

pub fn class_from_tropical_cox(x: &Arc<ToricVariety>, g: &CoxPolynomial, seed: u64) -> Result<ClassRecovery> {
    if !Arc::ptr_eq(x, &g.variety) && x.fan() != g.variety.fan() {
        return Err(Error::MixedVarieties);
    }
    class_from_tropical(x, &StructuredIdeal::Principal(cox_dehomogenize(g)?), seed)
}

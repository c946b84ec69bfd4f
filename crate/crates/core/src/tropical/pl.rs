//! Intersecting tropical cycles with piecewise-linear functions.

use num_traits::Zero;

use super::TropicalCycle;
use crate::error::{Error, Result};
use crate::exactlinalg::{dot, rat_from_int, solve_rational, ExactMatrix, Rat};
use crate::polyhedra::{Cone, Fan};

/// A function on the support of a simplicial fan, linear on each cone and
/// determined by its values on the rays. It vanishes on the lineality space.
#[derive(Clone, Debug)]
pub struct PLDivisor {
    fan: Fan,
    values: Vec<Rat>,
}

impl PLDivisor {
    pub fn new(fan: Fan, values: Vec<Rat>) -> Result<PLDivisor> {
        if values.len() != fan.rays().len() {
            return Err(Error::DimensionMismatch(format!("{} values for {} rays", values.len(), fan.rays().len())));
        }
        if !fan.simplicial_unchecked() {
            return Err(Error::NotSimplicial);
        }
        Ok(PLDivisor { fan, values })
    }

    /// The function with value one on ray `rho` and zero on the others.
    pub fn indicator(fan: Fan, rho: usize) -> Result<PLDivisor> {
        let mut values = vec![Rat::zero(); fan.rays().len()];
        if rho >= values.len() {
            return Err(Error::Invalid(format!("ray {rho} out of range")));
        }
        values[rho] = crate::exactlinalg::rat(1);
        Self::new(fan, values)
    }

    pub fn base_fan(&self) -> &Fan {
        &self.fan
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    /// A linear form agreeing with the function on the base cone `b`.
    fn form_on(&self, b: usize) -> Vec<Rat> {
        let n = self.fan.ambient_dim();
        let cone = &self.fan.maximal_cones()[b];
        let mut rows: Vec<Vec<Rat>> = cone.iter().map(|&r| self.fan.rays()[r].to_rat()).collect();
        let mut rhs: Vec<Rat> = cone.iter().map(|&r| self.values[r].clone()).collect();
        for l in self.fan.lineality() {
            rows.push(l.to_rat());
            rhs.push(Rat::zero());
        }
        let a = ExactMatrix::from_rows(rows, n).expect("ray lengths agree");
        solve_rational(&a, &rhs).expect("dimensions agree").expect("simplicial cones have independent rays")
    }

    /// Linear forms for every maximal cone of `t`, read off a base cone
    /// containing it.
    fn forms_for(&self, t: &TropicalCycle) -> Result<Vec<Vec<Rat>>> {
        let base = self.fan.cones();
        let mut cache: Vec<Option<Vec<Rat>>> = vec![None; base.len()];
        let mut out = Vec::with_capacity(t.fan().cones().len());
        for (i, c) in t.fan().cones().iter().enumerate() {
            let b = base.iter().position(|b| inside(c, b)).ok_or(Error::NotLinearOnCone(i))?;
            if cache[b].is_none() {
                cache[b] = Some(self.form_on(b));
            }
            out.push(cache[b].clone().expect("filled"));
        }
        Ok(out)
    }
}

fn inside(c: &Cone, b: &Cone) -> bool {
    c.rays().iter().all(|r| b.contains_lattice(r))
        && c.lineality().iter().all(|l| b.contains_lattice(l) && b.contains_lattice(&l.neg()))
}

/// Weights of `φ · t` on the codimension-one faces of `t`, in the order of
/// `t.fan().cones_of_dim(dim - 1)`.
pub(crate) fn pl_weights(phi: &PLDivisor, t: &TropicalCycle) -> Result<Vec<(Vec<usize>, Rat)>> {
    if phi.fan.ambient_dim() != t.ambient_dim() {
        return Err(Error::DimensionMismatch(format!("R^{} and R^{}", phi.fan.ambient_dim(), t.ambient_dim())));
    }
    if t.dim() == 0 {
        return Err(Error::Invalid("cannot cut a 0-dimensional cycle".into()));
    }
    t.require_balanced()?;
    let forms = phi.forms_for(t)?;
    let mut out = Vec::new();
    for tau in t.fan().cones_of_dim(t.dim() - 1) {
        let (sum, lifts) = t.weighted_normal_sum(&tau);
        let mut w = Rat::zero();
        for (s, u) in &lifts {
            w += rat_from_int(&t.weights()[*s]) * dot(&forms[*s], u);
        }
        w -= dot(&forms[lifts[0].0], &sum);
        out.push((tau, w));
    }
    Ok(out)
}

/// The tropical divisor of `φ` on `t`, supported on the codimension-one
/// skeleton of `t`.
pub fn pl_divisor_intersect(phi: &PLDivisor, t: &TropicalCycle) -> Result<TropicalCycle> {
    let weights = pl_weights(phi, t)?;
    let mut cells = Vec::new();
    for (tau, w) in weights {
        if w.is_zero() {
            continue;
        }
        if !w.is_integer() {
            return Err(Error::NonInteger);
        }
        cells.push((t.fan().cone_of(&tau)?, w.to_integer()));
    }
    let out = TropicalCycle::from_cones(t.ambient_dim(), t.fan().lineality(), t.dim() - 1, cells)?;
    out.require_balanced()?;
    Ok(out)
}

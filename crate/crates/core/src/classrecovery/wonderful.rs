use std::sync::Arc;

use num_traits::{One, Zero};

use super::valuation::boundary_orders;
use super::LinearSystem;
use crate::error::{Error, Result};
use crate::exactlinalg::{rat_from_int, solve_rational, ExactMatrix, Int, Rat};
use crate::matroid::bergman_fan;
use crate::polyhedra::Cone;
use crate::toric::{ToricCycle, ToricVariety};
use crate::tropical::pl::pl_weights;
use crate::tropical::random::Displacer;
use crate::tropical::{
    random_interior_point, stable_intersection, tropical_hypersurface, LaurentPolynomial, PLDivisor, TropicalCycle,
};

/// The divisor `D = Σ c_ρ V(ρ)` on the toric variety of a Bergman fan whose
/// piecewise-linear function cuts the fan in `trop(Y ∩ V(f))`.
///
/// The target cycle defaults to the stable intersection of the fan with
/// `trop(f)`. When that leaves the codimension-one skeleton, `f` is not
/// transverse and the target is cut out by the orders of vanishing of `f|_Y`
/// along the boundary instead. `target` overrides both.
pub fn class_wonderful_compactification(
    x: &Arc<ToricVariety>,
    linear: &LinearSystem,
    f: &LaurentPolynomial,
    target: Option<&TropicalCycle>,
    seed: u64,
) -> Result<ToricCycle> {
    x.require_simplicial()?;
    let n = x.dim();
    if linear.num_vars() != n || f.num_vars() != n {
        return Err(Error::DimensionMismatch(format!(
            "variety of dimension {n}, system in {} variables, polynomial in {}",
            linear.num_vars(),
            f.num_vars()
        )));
    }
    let fan = x.fan().clone();
    let k = fan.maximal_cones().len();
    let b = TropicalCycle::new(fan.clone(), vec![Int::one(); k])?;
    if b.dim() == 0 {
        return Err(Error::Invalid("a 0-dimensional linear space has no divisors".into()));
    }
    let trop_y = bergman_fan(&linear.matroid()?, 0)?;
    if !b.same_cycle(&trop_y, seed) {
        return Err(Error::Invalid("the fan does not carry the tropicalization of the linear space".into()));
    }
    let skeleton = fan.cones_of_dim(b.dim() - 1);
    let cells: Vec<_> = skeleton.iter().map(|t| fan.cone_of(t)).collect::<Result<_>>()?;
    let mut rng = Displacer::new(seed);
    let rhs = match target {
        Some(t) => {
            t.require_balanced()?;
            weights_on_skeleton(t, &b, &cells, &mut rng)?
                .ok_or_else(|| Error::Inconsistent("the target cycle leaves the codimension-one skeleton".into()))?
        }
        None => match weights_on_skeleton(
            &stable_intersection(&b, &tropical_hypersurface(f)?, seed)?,
            &b,
            &cells,
            &mut rng,
        )? {
            Some(w) => w,
            None => {
                // f|_Y is not transverse to the fan; cut with its boundary orders
                let orders = boundary_orders(linear, f, fan.rays())?;
                let phi = PLDivisor::new(fan.clone(), orders.into_iter().map(|v| -v).collect())?;
                pl_weights(&phi, &b)?.into_iter().map(|(_, w)| w).collect()
            }
        },
    };

    let rays = fan.rays().len();
    let mut columns = Vec::with_capacity(rays);
    for rho in 0..rays {
        let w = pl_weights(&PLDivisor::indicator(fan.clone(), rho)?, &b)?;
        columns.push(w.into_iter().map(|(_, v)| v).collect::<Vec<Rat>>());
    }
    let a = ExactMatrix::from_rows(
        (0..skeleton.len()).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect(),
        rays,
    )?;
    let c = solve_rational(&a, &rhs)?
        .ok_or_else(|| Error::Inconsistent("no divisor on the fan cuts out the target cycle".into()))?;

    let check = pl_weights(&PLDivisor::new(fan, c.clone())?, &b)?;
    if check.into_iter().map(|(_, w)| w).collect::<Vec<_>>() != rhs {
        return Err(Error::Inconsistent("solved divisor does not reproduce the target cycle".into()));
    }
    let terms = c.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (vec![i], v));
    ToricCycle::new(x.clone(), 1, terms)
}

/// Weights of `t` on the codimension-one cones of `b`, or `None` if `t` is
/// not supported there.
fn weights_on_skeleton(
    t: &TropicalCycle,
    b: &TropicalCycle,
    cells: &[Cone],
    rng: &mut Displacer,
) -> Result<Option<Vec<Rat>>> {
    if !t.is_zero() && (t.dim() + 1 != b.dim() || t.ambient_dim() != b.ambient_dim()) {
        return Err(Error::WrongCodimension { expected: b.dim() - 1, found: t.dim() });
    }
    for g in t.fan().cones() {
        let p = random_interior_point(g, rng);
        if !cells.iter().any(|c| c.contains(&p)) {
            return Ok(None);
        }
    }
    Ok(Some(cells.iter().map(|c| rat_from_int(&t.weight_at(&random_interior_point(c, rng)))).collect()))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::system;
    use super::*;
    use crate::exactlinalg::rat;

    #[test]
    fn conic_through_three_points() {
        let lin = system(&[&[-1, 0, 1]], &[-1]);
        let b = bergman_fan(&lin.matroid().unwrap(), 0).unwrap();
        let x = ToricVariety::new(b.fan().clone()).unwrap();
        let f = LaurentPolynomial::from_i64(3, &[(1, &[1, 0, 0]), (1, &[0, 1, 0]), (1, &[1, 1, 0])]).unwrap();
        let d = class_wonderful_compactification(&x, &lin, &f, None, 0).unwrap();
        let expected =
            ToricCycle::new(x.clone(), 1, [(vec![0], rat(1)), (vec![1], rat(1)), (vec![4], rat(1))]).unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn a_line_of_the_arrangement() {
        // a generic line y_0 + 2 y_1 + 3
        let lin = system(&[&[-1, 0, 1]], &[-1]);
        let b = bergman_fan(&lin.matroid().unwrap(), 0).unwrap();
        let x = ToricVariety::new(b.fan().clone()).unwrap();
        let f = LaurentPolynomial::from_i64(3, &[(1, &[1, 0, 0]), (2, &[0, 1, 0]), (3, &[0, 0, 0])]).unwrap();
        let d = class_wonderful_compactification(&x, &lin, &f, None, 0).unwrap();
        // its strict transform has self-intersection one
        let deg: Rat = {
            let phi = PLDivisor::new(x.fan().clone(), (0..8).map(|r| d.coefficient(&[r])).collect()).unwrap();
            let k = x.fan().maximal_cones().len();
            let once = crate::tropical::pl_divisor_intersect(
                &phi,
                &TropicalCycle::new(x.fan().clone(), vec![Int::one(); k]).unwrap(),
            )
            .unwrap();
            let w = pl_weights(&phi, &once).unwrap();
            w.into_iter().map(|(_, v)| v).sum()
        };
        assert_eq!(deg, rat(1));
    }

    #[test]
    fn mismatched_fans_are_rejected() {
        let lin = system(&[&[-1, 0, 1]], &[-1]);
        let p3 = ToricVariety::projective_space(3).unwrap();
        let f = LaurentPolynomial::from_i64(3, &[(1, &[1, 0, 0]), (1, &[0, 0, 0])]).unwrap();
        assert!(matches!(class_wonderful_compactification(&p3, &lin, &f, None, 0), Err(Error::Invalid(_))));
    }
}

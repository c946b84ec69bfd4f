//! Tropical cycles: weighted balanced fans, and the constructions that
//! produce them.

pub(crate) mod intersect;
mod map;
pub(crate) mod pl;
mod poly;
pub mod random;

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlinalg::{lattice_index, rank, rat_from_int, Int, LatticeVector, Rat};
use crate::polyhedra::{canonical_subspace, Cone, Fan};

pub use intersect::{displacement_numbers, displacement_pairing, stable_intersection};
pub use map::{pushforward, MonomialMap};
pub use pl::{pl_divisor_intersect, PLDivisor};
pub use poly::{tropical_hypersurface, LaurentPolynomial};
pub use random::Displacer;

/// Outcome of the balancing check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BalanceReport {
    Balanced,
    /// The first codimension-one cone (as ray indices) where balancing fails.
    Failure(Vec<usize>),
}

/// A pure weighted fan. Maximal cones with weight zero are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalCycle {
    fan: Fan,
    weights: Vec<Int>,
    dim: usize,
}

impl TropicalCycle {
    /// A balanced cycle; fails on impure fans or unbalanced weights.
    pub fn new(fan: Fan, weights: Vec<Int>) -> Result<TropicalCycle> {
        let t = Self::new_unchecked(fan, weights)?;
        t.require_balanced()?;
        Ok(t)
    }

    /// Skips the balancing check (purity is still enforced).
    pub fn new_unchecked(fan: Fan, weights: Vec<Int>) -> Result<TropicalCycle> {
        if weights.len() != fan.maximal_cones().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} weights for {} maximal cones",
                weights.len(),
                fan.maximal_cones().len()
            )));
        }
        if !fan.is_pure() {
            return Err(Error::NonPure);
        }
        let dim = fan.dim();
        Ok(Self::from_parts(fan, weights, dim))
    }

    fn from_parts(fan: Fan, weights: Vec<Int>, dim: usize) -> TropicalCycle {
        if weights.iter().all(|w| !w.is_zero()) {
            return TropicalCycle { fan, weights, dim };
        }
        let keep: Vec<usize> = (0..weights.len()).filter(|&i| !weights[i].is_zero()).collect();
        if keep.is_empty() {
            return Self::zero(fan.ambient_dim(), dim);
        }
        let cones = keep.iter().map(|&i| fan.maximal_cones()[i].clone()).collect();
        let fan = Fan::with_lineality(fan.ambient_dim(), fan.rays().to_vec(), cones, fan.lineality().to_vec())
            .expect("subfan of a valid fan");
        TropicalCycle { fan, weights: keep.iter().map(|&i| weights[i].clone()).collect(), dim }
    }

    /// The empty cycle of dimension `dim` in `R^ambient`.
    pub fn zero(ambient: usize, dim: usize) -> TropicalCycle {
        TropicalCycle { fan: Fan::new(ambient, vec![], vec![]).expect("empty fan"), weights: vec![], dim }
    }

    /// `R^n` with weight one.
    pub fn fundamental(n: usize) -> TropicalCycle {
        let lin = (0..n).map(|i| LatticeVector::unit(n, i)).collect();
        let fan = Fan::with_lineality(n, vec![], vec![vec![]], lin).expect("standard basis");
        TropicalCycle { fan, weights: vec![Int::one()], dim: n }
    }

    /// Builds a cycle from canonical cones that share the lineality space
    /// `lineality`. Equal cones are merged by adding weights.
    pub fn from_cones(
        ambient: usize,
        lineality: &[LatticeVector],
        dim: usize,
        cells: Vec<(Cone, Int)>,
    ) -> Result<TropicalCycle> {
        let lin_rows: Vec<Vec<Int>> = lineality.iter().map(|l| l.0.clone()).collect();
        let lin: Vec<LatticeVector> = canonical_subspace(&lin_rows, ambient).into_iter().map(LatticeVector).collect();
        let mut merged: Vec<(Cone, Int)> = Vec::new();
        for (c, w) in cells {
            if c.lineality() != lin.as_slice() {
                return Err(Error::InvalidFan("cell lineality differs from the global lineality".into()));
            }
            match merged.iter_mut().find(|(d, _)| *d == c) {
                Some((_, acc)) => *acc += w,
                None => merged.push((c, w)),
            }
        }
        merged.retain(|(_, w)| !w.is_zero());
        let rays: Vec<LatticeVector> =
            merged.iter().flat_map(|(c, _)| c.rays().iter().cloned()).collect::<BTreeSet<_>>().into_iter().collect();
        let mut cones: Vec<(Vec<usize>, Int)> = merged
            .iter()
            .map(|(c, w)| {
                let mut idx: Vec<usize> = c.rays().iter().map(|r| rays.binary_search(r).expect("collected")).collect();
                idx.sort();
                (idx, w.clone())
            })
            .collect();
        cones.sort();
        let fan = Fan::with_lineality(ambient, rays, cones.iter().map(|c| c.0.clone()).collect(), lin)?;
        Ok(Self::from_parts(fan, cones.into_iter().map(|c| c.1).collect(), dim))
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn weights(&self) -> &[Int] {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.fan.ambient_dim()
    }

    pub fn is_zero(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn check_balancing(&self) -> BalanceReport {
        if self.dim == 0 {
            return BalanceReport::Balanced;
        }
        for tau in self.fan.cones_of_dim(self.dim - 1) {
            let (sum, _) = self.weighted_normal_sum(&tau);
            if !self.in_span(&tau, &sum) {
                return BalanceReport::Failure(tau);
            }
        }
        BalanceReport::Balanced
    }

    pub(crate) fn require_balanced(&self) -> Result<()> {
        match self.check_balancing() {
            BalanceReport::Balanced => Ok(()),
            BalanceReport::Failure(t) => Err(Error::Unbalanced(t)),
        }
    }

    /// `Σ w_σ u_σ` over maximal cones `σ` adjacent to `tau`, together with the
    /// individual `(σ, u_σ)` lifts.
    pub(crate) fn weighted_normal_sum(&self, tau: &[usize]) -> (Vec<Rat>, Vec<(usize, Vec<Rat>)>) {
        let n = self.ambient_dim();
        let mut sum = vec![Rat::zero(); n];
        let mut lifts = Vec::new();
        for s in self.fan.maximal_cones_containing(tau) {
            let u = self.normal_lift(tau, s);
            let w = rat_from_int(&self.weights[s]);
            for (a, b) in sum.iter_mut().zip(&u) {
                *a += &w * b;
            }
            lifts.push((s, u));
        }
        (sum, lifts)
    }

    /// A rational vector congruent, modulo the span of `tau`, to the
    /// primitive normal of maximal cone `s` relative to its facet `tau`.
    pub(crate) fn normal_lift(&self, tau: &[usize], s: usize) -> Vec<Rat> {
        let rays = self.fan.rays();
        let r = self.fan.maximal_cones()[s].iter().copied().find(|x| !tau.contains(x)).expect("tau is a proper face");
        let mut gens: Vec<LatticeVector> = tau.iter().map(|&i| rays[i].clone()).collect();
        gens.extend(self.fan.lineality().iter().cloned());
        let mut basis = crate::exactlinalg::saturated_basis(&gens, self.ambient_dim());
        basis.push(rays[r].clone());
        let k = basis.len();
        let idx = rat_from_int(&lattice_index(&basis, k).expect("normal ray is outside the facet span"));
        rays[r].iter().map(|x| rat_from_int(x) / &idx).collect()
    }

    pub(crate) fn in_span(&self, tau: &[usize], v: &[Rat]) -> bool {
        let mut rows: Vec<Vec<Rat>> = tau.iter().map(|&i| self.fan.rays()[i].to_rat()).collect();
        rows.extend(self.fan.lineality().iter().map(|l| l.to_rat()));
        let r = rank(&rows, self.ambient_dim());
        rows.push(v.to_vec());
        rank(&rows, self.ambient_dim()) == r
    }

    /// Sum of the weights of the maximal cones containing `p`. At a generic
    /// point of the support this is the weight there.
    pub fn weight_at(&self, p: &[Rat]) -> Int {
        self.fan
            .cones()
            .iter()
            .zip(&self.weights)
            .filter(|(c, _)| c.contains(p))
            .fold(Int::zero(), |acc, (_, w)| acc + w)
    }

    /// Equality as weighted sets, tested at random relative-interior points
    /// of every maximal cone of either cycle.
    pub fn same_cycle(&self, other: &TropicalCycle, seed: u64) -> bool {
        if self.ambient_dim() != other.ambient_dim() {
            return false;
        }
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        if self.dim != other.dim {
            return false;
        }
        let mut rng = Displacer::new(seed);
        for t in [self, other] {
            for c in t.fan.cones() {
                let p = random_interior_point(c, &mut rng);
                if self.weight_at(&p) != other.weight_at(&p) {
                    return false;
                }
            }
        }
        true
    }
}

/// A random point of the relative interior of a cone.
pub(crate) fn random_interior_point(c: &Cone, rng: &mut Displacer) -> Vec<Rat> {
    let mut p = vec![Rat::zero(); c.ambient_dim()];
    let gens: Vec<&LatticeVector> = c.rays().iter().collect();
    let lam = rng.positive(gens.len());
    for (l, r) in lam.iter().zip(gens) {
        for (x, y) in p.iter_mut().zip(r.iter()) {
            *x += l * rat_from_int(y);
        }
    }
    let lin = c.lineality();
    let mu = rng.vector(lin.len());
    for (m, l) in mu.iter().zip(lin) {
        for (x, y) in p.iter_mut().zip(l.iter()) {
            *x += m * rat_from_int(y);
        }
    }
    p
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn tropical_line_is_balanced() {
        assert_eq!(line().check_balancing(), BalanceReport::Balanced);
        let bad = TropicalCycle::new_unchecked(line().fan().clone(), weights(&[1, 1, 2])).unwrap();
        assert_eq!(bad.check_balancing(), BalanceReport::Failure(vec![]));
        assert_eq!(
            TropicalCycle::new(line().fan().clone(), weights(&[1, 1, 2])).unwrap_err(),
            Error::Unbalanced(vec![])
        );
    }

    #[test]
    fn non_primitive_directions_use_lattice_normals() {
        let f = fan(&[&[1, 0], &[-1, -2], &[0, 1]], &[&[0], &[1], &[2]]);
        assert!(TropicalCycle::new(f.clone(), weights(&[1, 1, 2])).is_ok());
        assert!(TropicalCycle::new(f, weights(&[1, 1, 1])).is_err());
    }

    #[test]
    fn two_dimensional_balancing() {
        // the fan over the faces of the tropical plane in R^3
        let f = fan(
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]],
            &[&[0, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]],
        );
        let t = TropicalCycle::new(f, weights(&[1; 6])).unwrap();
        assert_eq!(t.dim(), 2);
    }

    #[test]
    fn impure_fans_are_rejected() {
        let f = fan(&[&[1, 0], &[0, 1], &[-1, -1]], &[&[0, 1], &[2]]);
        assert_eq!(TropicalCycle::new(f, weights(&[1, 1])).unwrap_err(), Error::NonPure);
    }

    #[test]
    fn zero_weights_are_pruned() {
        let t = TropicalCycle::new_unchecked(line().fan().clone(), weights(&[1, 0, 1])).unwrap();
        assert_eq!(t.fan().maximal_cones().len(), 2);
    }

    #[test]
    fn same_cycle_sees_refinements() {
        let a = TropicalCycle::fundamental(1);
        let b = TropicalCycle::new(fan(&[&[1], &[-1]], &[&[0], &[1]]), weights(&[1, 1])).unwrap();
        assert!(a.same_cycle(&b, 0));
        let c = TropicalCycle::new(fan(&[&[1], &[-1]], &[&[0], &[1]]), weights(&[2, 2])).unwrap();
        assert!(!a.same_cycle(&c, 0));
    }
}

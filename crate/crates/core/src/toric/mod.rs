//! Simplicial toric varieties and their Chow groups.
//!
//! Cycles are combinations of orbit closures `V(σ)` with rational
//! coefficients. Products are only ever taken with divisors, using the rule
//! `D_ρ · V(σ) = mult(σ)/mult(σ+ρ) · V(σ+ρ)` after moving `D` off the rays of
//! `σ` by a principal divisor.

mod cycle;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlinalg::{lattice_index, rat_from_int, solve_rational, ExactMatrix, Int, LatticeVector, Rat};
use crate::polyhedra::Fan;

pub use cycle::{PairingMatrix, ToricCycle, ToricDivisor};

/// A toric variety given by a valid pointed fan.
#[derive(Debug)]
pub struct ToricVariety {
    fan: Fan,
    complete: bool,
    simplicial: bool,
    smooth: bool,
    /// every cone of a simplicial fan with its multiplicity
    mults: BTreeMap<Vec<usize>, Int>,
}

impl PartialEq for ToricVariety {
    fn eq(&self, other: &Self) -> bool {
        self.fan == other.fan
    }
}

impl Eq for ToricVariety {}

fn subsets(c: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0u64..1 << c.len()).map(move |mask| (0..c.len()).filter(|i| mask >> i & 1 == 1).map(|i| c[i]).collect())
}

impl ToricVariety {
    pub fn new(fan: Fan) -> Result<Arc<ToricVariety>> {
        if !fan.lineality().is_empty() {
            return Err(Error::InvalidFan("toric fans must be pointed".into()));
        }
        fan.require_valid()?;
        let complete = fan.complete_unchecked();
        let simplicial = fan.simplicial_unchecked();
        let mut mults = BTreeMap::new();
        if simplicial {
            for c in fan.maximal_cones() {
                for s in subsets(c) {
                    if mults.contains_key(&s) {
                        continue;
                    }
                    let vs: Vec<LatticeVector> = s.iter().map(|&i| fan.rays()[i].clone()).collect();
                    let m = lattice_index(&vs, vs.len())?;
                    mults.insert(s, m);
                }
            }
        }
        let smooth = simplicial && fan.maximal_cones().iter().all(|c| mults[c].is_one());
        Ok(Arc::new(ToricVariety { fan, complete, simplicial, smooth, mults }))
    }

    /// `P^n` with rays `e_1, ..., e_n, -(e_1 + ... + e_n)`.
    pub fn projective_space(n: usize) -> Result<Arc<ToricVariety>> {
        if n == 0 {
            return Err(Error::Invalid("projective space needs n >= 1".into()));
        }
        let mut rays: Vec<LatticeVector> = (0..n).map(|i| LatticeVector::unit(n, i)).collect();
        rays.push(LatticeVector::from_i64(&vec![-1; n]));
        let cones = (0..=n).map(|skip| (0..=n).filter(|&i| i != skip).collect()).collect();
        ToricVariety::new(Fan::new(n, rays, cones)?)
    }

    /// The product fan in the direct sum lattice: rays of `a` first.
    pub fn cartesian_product(a: &ToricVariety, b: &ToricVariety) -> Result<Arc<ToricVariety>> {
        let (na, nb) = (a.dim(), b.dim());
        let mut rays = Vec::new();
        for r in a.fan.rays() {
            let mut v = r.0.clone();
            v.extend(std::iter::repeat_n(Int::zero(), nb));
            rays.push(LatticeVector(v));
        }
        for r in b.fan.rays() {
            let mut v = vec![Int::zero(); na];
            v.extend(r.0.iter().cloned());
            rays.push(LatticeVector(v));
        }
        let off = a.fan.rays().len();
        let mut cones = Vec::new();
        for ca in a.fan.maximal_cones() {
            for cb in b.fan.maximal_cones() {
                cones.push(ca.iter().copied().chain(cb.iter().map(|&j| j + off)).collect());
            }
        }
        ToricVariety::new(Fan::new(na + nb, rays, cones)?)
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn dim(&self) -> usize {
        self.fan.ambient_dim()
    }

    pub fn num_rays(&self) -> usize {
        self.fan.rays().len()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn is_simplicial(&self) -> bool {
        self.simplicial
    }

    pub fn is_smooth(&self) -> bool {
        self.smooth
    }

    pub(crate) fn require_simplicial(&self) -> Result<()> {
        if self.simplicial {
            Ok(())
        } else {
            Err(Error::NotSimplicial)
        }
    }

    pub(crate) fn require_complete(&self) -> Result<()> {
        if self.complete {
            Ok(())
        } else {
            Err(Error::NotComplete)
        }
    }

    /// Whether a sorted index set is a cone of the fan.
    pub fn is_cone(&self, sorted: &[usize]) -> bool {
        if self.simplicial {
            self.mults.contains_key(sorted)
        } else {
            self.fan.contains_cone(sorted)
        }
    }

    /// Multiplicity of a cone of a simplicial fan.
    pub fn mult(&self, sorted: &[usize]) -> Result<&Int> {
        self.mults.get(sorted).ok_or_else(|| Error::NotACone(sorted.to_vec()))
    }

    /// Cones with exactly `k` rays, in lexicographic order.
    pub fn cones_of_codim(&self, k: usize) -> Vec<Vec<usize>> {
        if self.simplicial {
            self.mults.keys().filter(|c| c.len() == k).cloned().collect()
        } else {
            self.fan.cones_of_dim(k)
        }
    }

    /// The `n` principal divisors `div(χ^{e_i})`.
    pub fn linear_relations(self: &Arc<Self>) -> Vec<ToricDivisor> {
        (0..self.dim())
            .map(|i| {
                let coeffs = self.fan.rays().iter().map(|r| rat_from_int(&r[i])).collect();
                ToricDivisor::from_parts(self.clone(), coeffs)
            })
            .collect()
    }

    /// The divisor `div(χ^m) = Σ ⟨m, v_ρ⟩ D_ρ`.
    pub fn principal_divisor(self: &Arc<Self>, m: &[Rat]) -> ToricDivisor {
        let coeffs = self
            .fan
            .rays()
            .iter()
            .map(|r| r.iter().zip(m).fold(Rat::zero(), |acc, (a, b)| acc + rat_from_int(a) * b))
            .collect();
        ToricDivisor::from_parts(self.clone(), coeffs)
    }

    /// A character `m` with `⟨m, v_ρ⟩ = target_ρ` for the listed rays.
    pub(crate) fn solve_character(&self, rays: &[usize], target: &[Rat]) -> Option<Vec<Rat>> {
        let n = self.dim();
        let rows: Vec<Vec<Rat>> = rays.iter().map(|&r| self.fan.rays()[r].to_rat()).collect();
        let a = ExactMatrix::from_rows(rows, n).expect("ray lengths checked");
        solve_rational(&a, target).expect("dimensions agree")
    }

    /// Index of the first maximal cone containing the sorted set `s`.
    pub(crate) fn first_maximal_containing(&self, s: &[usize]) -> Option<usize> {
        self.fan.maximal_cones().iter().position(|c| s.iter().all(|x| c.contains(x)))
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn flags() {
        let b = blowup();
        assert!(b.is_complete() && b.is_simplicial() && b.is_smooth());
        let p2 = ToricVariety::projective_space(2).unwrap();
        assert!(p2.is_smooth() && p2.is_complete());
        assert_eq!(p2.num_rays(), 3);
        assert_eq!(p2.fan().maximal_cones().len(), 3);
        let sq = Fan::new(
            3,
            [[1, 0, 1], [0, 1, 1], [-1, 0, 1], [0, -1, 1]].iter().map(|r| LatticeVector::from_i64(r)).collect(),
            vec![vec![0, 1, 2, 3]],
        )
        .unwrap();
        let v = ToricVariety::new(sq).unwrap();
        assert!(!v.is_simplicial() && !v.is_complete());
    }

    #[test]
    fn projective_spaces_and_products() {
        assert!(ToricVariety::projective_space(0).is_err());
        let p1 = ToricVariety::projective_space(1).unwrap();
        assert_eq!(p1.num_rays(), 2);
        let p4 = ToricVariety::projective_space(4).unwrap();
        assert_eq!((p4.num_rays(), p4.fan().maximal_cones().len()), (5, 5));
        let p = ToricVariety::cartesian_product(&p4, &p4).unwrap();
        assert_eq!((p.num_rays(), p.fan().maximal_cones().len()), (10, 25));
        assert!(p.is_complete() && p.is_smooth());
        assert_eq!(p1xp1().fan().maximal_cones().len(), 4);

        let point = ToricVariety::new(Fan::new(0, vec![], vec![vec![]]).unwrap()).unwrap();
        assert!(point.is_complete());
        let p2 = ToricVariety::projective_space(2).unwrap();
        let q = ToricVariety::cartesian_product(&p2, &point).unwrap();
        assert_eq!(q.fan(), p2.fan());
    }

    #[test]
    fn relations_of_the_blowup() {
        let b = blowup();
        let rel: Vec<Vec<Rat>> = b.linear_relations().iter().map(|d| d.coefficients().to_vec()).collect();
        let expect = |v: &[i64]| v.iter().map(|&x| Rat::from_integer(x.into())).collect::<Vec<_>>();
        assert_eq!(rel, vec![expect(&[1, 1, 0, -1]), expect(&[0, 1, 1, -1])]);
        let p1 = ToricVariety::projective_space(1).unwrap();
        let rel: Vec<Vec<Rat>> = p1.linear_relations().iter().map(|d| d.coefficients().to_vec()).collect();
        assert_eq!(rel, vec![expect(&[1, -1])]);
    }

    #[test]
    fn lineality_is_rejected() {
        let f = Fan::with_lineality(
            2,
            vec![LatticeVector::from_i64(&[1, 0])],
            vec![vec![0]],
            vec![LatticeVector::from_i64(&[0, 1])],
        )
        .unwrap();
        assert!(matches!(ToricVariety::new(f), Err(Error::InvalidFan(_))));
    }
}

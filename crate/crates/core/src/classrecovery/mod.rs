//! Rational equivalence classes from tropical data.

mod cox;
mod huhkatz;
mod valuation;
mod wonderful;

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlinalg::{kernel_basis, rank, solve_rational, ExactMatrix, Rat};
use crate::matroid::{bergman_fan, Matroid};
use crate::toric::{PairingMatrix, ToricCycle, ToricVariety};
use crate::tropical::random::Displacer;
use crate::tropical::{pushforward, tropical_hypersurface, LaurentPolynomial, MonomialMap, TropicalCycle};

pub use cox::{class_from_tropical_cox, cox_dehomogenize, CoxPolynomial};
pub use huhkatz::{huh_katz_check, HuhKatzReport};
pub use wonderful::class_wonderful_compactification;

/// An affine linear system `A x + c = 0` in torus coordinates `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub coefficients: ExactMatrix,
    pub constants: Vec<Rat>,
}

impl LinearSystem {
    pub fn new(coefficients: ExactMatrix, constants: Vec<Rat>) -> Result<LinearSystem> {
        if constants.len() != coefficients.rows() {
            return Err(Error::DimensionMismatch(format!(
                "{} constants for {} equations",
                constants.len(),
                coefficients.rows()
            )));
        }
        Ok(LinearSystem { coefficients, constants })
    }

    /// The system whose solutions are parametrized by the rows of `r`: column
    /// `j` of `r` is the `j`-th coordinate, the first one being the constant.
    pub fn from_realization(r: &ExactMatrix) -> Result<LinearSystem> {
        if r.cols() == 0 {
            return Err(Error::Invalid("a realization needs the constant column".into()));
        }
        let rows = kernel_basis(r);
        let coefficients = ExactMatrix::from_rows(rows.iter().map(|u| u[1..].to_vec()).collect(), r.cols() - 1)?;
        LinearSystem::new(coefficients, rows.iter().map(|u| u[0].clone()).collect())
    }

    pub fn num_vars(&self) -> usize {
        self.coefficients.cols()
    }

    /// The matroid of the hyperplane arrangement cut out on the solution
    /// space by the coordinates `(1, x_0, ..., x_{m-1})`, constant first.
    pub fn matroid(&self) -> Result<Matroid> {
        let mat = Matroid::from_matrix(&self.realization()?)?;
        match mat.loops().first() {
            None => Ok(mat),
            Some(0) => Err(Error::Inconsistent("the affine system has no solution".into())),
            Some(&e) => Err(Error::Invalid(format!("the solution set lies in the hyperplane x_{} = 0", e - 1))),
        }
    }
}

impl LinearSystem {
    /// Rows span the solutions of the homogenized system; column `j` is the
    /// linear form cutting out the `j`-th hyperplane, constant first.
    pub fn realization(&self) -> Result<ExactMatrix> {
        let m = self.num_vars();
        let rows: Vec<Vec<Rat>> = (0..self.coefficients.rows())
            .map(|i| {
                std::iter::once(self.constants[i].clone()).chain(self.coefficients.row(i).iter().cloned()).collect()
            })
            .collect();
        let ext = ExactMatrix::from_rows(rows, m + 1)?;
        ExactMatrix::from_rows(kernel_basis(&ext), m + 1)
    }
}

/// The supported ways to describe a subvariety of the torus.
#[derive(Clone, Debug)]
pub enum StructuredIdeal {
    Principal(LaurentPolynomial),
    Linear(LinearSystem),
    /// The image of a linear space under a monomial map.
    MonomialGraph(LinearSystem, MonomialMap),
    ExplicitTropical(TropicalCycle),
}

pub fn tropicalize(ideal: &StructuredIdeal) -> Result<TropicalCycle> {
    match ideal {
        StructuredIdeal::Principal(f) => tropical_hypersurface(f),
        StructuredIdeal::Linear(l) => bergman_fan(&l.matroid()?, 0),
        StructuredIdeal::MonomialGraph(l, m) => {
            if m.source_dim() != l.num_vars() {
                return Err(Error::DimensionMismatch(format!(
                    "map from Z^{} applied to a system in {} variables",
                    m.source_dim(),
                    l.num_vars()
                )));
            }
            pushforward(m, &bergman_fan(&l.matroid()?, 0)?)
        }
        StructuredIdeal::ExplicitTropical(t) => {
            t.require_balanced()?;
            Ok(t.clone())
        }
    }
}

/// The numbers `deg([Y] · [V(σ)])` for `σ ∈ Σ(k)`, `k = dim Y`.
#[derive(Clone, Debug)]
pub struct PairingVector {
    pub variety: Arc<ToricVariety>,
    pub codim: usize,
    pub cones: Vec<Vec<usize>>,
    pub values: Vec<Rat>,
}

impl PairingVector {
    pub fn compute(x: &Arc<ToricVariety>, t: &TropicalCycle, seed: u64) -> Result<PairingVector> {
        let p = PairingMatrix::compute(x, t.dim())?;
        Self::with_matrix(x, t, &p, seed)
    }

    fn with_matrix(x: &Arc<ToricVariety>, t: &TropicalCycle, p: &PairingMatrix, seed: u64) -> Result<PairingVector> {
        let mut rng = Displacer::new(seed);
        let values = crate::tropical::intersect::pairing_values(t, x, p, &mut rng)?;
        Ok(PairingVector { variety: x.clone(), codim: t.dim(), cones: p.cols.clone(), values })
    }
}

/// A recovered class together with the data that determined it.
#[derive(Clone, Debug)]
pub struct ClassRecovery {
    pub cycle: ToricCycle,
    /// Dimension of the affine space of solutions of the pairing system.
    pub solution_dim: usize,
    pub pairing: PairingVector,
}

/// A cycle `Σ c_τ V(τ)` whose degree pairings with all `V(σ)`, `σ ∈ Σ(k)`,
/// match those of the tropical cycle.
pub fn class_from_tropical_cycle(x: &Arc<ToricVariety>, t: &TropicalCycle, seed: u64) -> Result<ClassRecovery> {
    x.require_complete()?;
    x.require_simplicial()?;
    if t.ambient_dim() != x.dim() {
        return Err(Error::DimensionMismatch(format!(
            "cycle in R^{} on a variety of dimension {}",
            t.ambient_dim(),
            x.dim()
        )));
    }
    let p = PairingMatrix::compute(x, t.dim())?;
    let pairing = PairingVector::with_matrix(x, t, &p, seed)?;
    // rows σ, columns τ
    let a = ExactMatrix::from_rows(
        (0..p.cols.len()).map(|s| p.entries.iter().map(|row| row[s].clone()).collect()).collect(),
        p.rows.len(),
    )?;
    let c = solve_rational(&a, &pairing.values)?
        .ok_or_else(|| Error::Inconsistent("no cycle has these intersection numbers".into()))?;
    let solution_dim = p.rows.len() - rank(&a.row_vecs(), p.rows.len());
    let terms = p.rows.iter().cloned().zip(c).filter(|(_, v)| !v.is_zero());
    let cycle = ToricCycle::new(x.clone(), x.dim() - t.dim(), terms)?;
    Ok(ClassRecovery { cycle, solution_dim, pairing })
}

pub fn class_from_tropical(x: &Arc<ToricVariety>, ideal: &StructuredIdeal, seed: u64) -> Result<ClassRecovery> {
    class_from_tropical_cycle(x, &tropicalize(ideal)?, seed)
}

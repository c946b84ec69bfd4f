use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use super::dd::{double_description, Generators};
use crate::error::{Error, Result};
use crate::exactlinalg::{
    dot, dot_int, ints_to_rats, primitive_integer, rank, rat_from_int, rref, saturated_basis, solve_rational,
    ExactMatrix, Int, LatticeVector, Rat,
};

/// Facet inequalities `a . x >= 0` and equations `e . x = 0` of a cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facets {
    pub inequalities: Vec<LatticeVector>,
    pub equations: Vec<LatticeVector>,
}

/// A rational polyhedral cone `cone(rays) + span(lineality)`.
///
/// Stored canonically: the lineality basis is in reduced echelon form with
/// primitive rows, rays are extremal, primitive, orthogonal to the lineality
/// space and sorted. Two cones are equal iff they are the same set.
#[derive(Clone)]
pub struct Cone {
    ambient: usize,
    dim: usize,
    rays: Vec<LatticeVector>,
    lineality: Vec<LatticeVector>,
    facets: OnceLock<Facets>,
}

/// Canonical basis of the span of `vectors`: reduced echelon rows scaled to
/// primitive integer vectors.
pub(crate) fn canonical_subspace(vectors: &[Vec<Int>], n: usize) -> Vec<Vec<Int>> {
    let rows: Vec<Vec<Rat>> = vectors.iter().map(|v| ints_to_rats(v)).collect();
    rref(&rows, n).rows.iter().map(|r| primitive_integer(r)).collect()
}

/// Orthogonal projection of `v` onto the complement of `span(basis)`, scaled
/// to a primitive integer vector. `basis` must be linearly independent.
pub(crate) fn project_out(v: &[Int], basis: &[Vec<Int>]) -> Vec<Int> {
    if basis.is_empty() {
        return primitive_integer(&ints_to_rats(v));
    }
    let b: Vec<Vec<Rat>> = basis.iter().map(|x| ints_to_rats(x)).collect();
    let vr = ints_to_rats(v);
    let gram: Vec<Vec<Rat>> = b.iter().map(|x| b.iter().map(|y| dot(x, y)).collect()).collect();
    let rhs: Vec<Rat> = b.iter().map(|x| dot(x, &vr)).collect();
    let g = ExactMatrix::from_rows(gram, b.len()).expect("square");
    let c = solve_rational(&g, &rhs).expect("dims").expect("gram matrix is invertible");
    let mut out = vr;
    for (ci, bi) in c.iter().zip(&b) {
        for (o, x) in out.iter_mut().zip(bi) {
            *o -= ci * x;
        }
    }
    primitive_integer(&out)
}

fn to_lv(v: Vec<Vec<Int>>) -> Vec<LatticeVector> {
    v.into_iter().map(LatticeVector).collect()
}

fn check_dims(ambient: usize, vs: &[LatticeVector]) -> Result<()> {
    match vs.iter().find(|v| v.dim() != ambient) {
        Some(v) => Err(Error::DimensionMismatch(format!("vector of length {} in R^{ambient}", v.dim()))),
        None => Ok(()),
    }
}

fn canonical_pair(n: usize, g: Generators) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let lin = canonical_subspace(&g.lineality, n);
    let mut rays: Vec<Vec<Int>> =
        g.rays.iter().map(|r| project_out(r, &lin)).filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    rays.sort();
    rays.dedup();
    (rays, lin)
}

impl Cone {
    /// `cone(rays) + span(lineality)` in `R^ambient`. Zero vectors are ignored.
    pub fn new(ambient: usize, rays: &[LatticeVector], lineality: &[LatticeVector]) -> Result<Cone> {
        check_dims(ambient, rays)?;
        check_dims(ambient, lineality)?;
        let gens: Vec<Vec<Int>> = rays.iter().map(|r| r.0.clone()).collect();
        let lin: Vec<Vec<Int>> = lineality.iter().map(|r| r.0.clone()).collect();
        let dual = double_description(ambient, &gens, &lin);
        let (ineq, eq) = canonical_pair(ambient, dual);
        let primal = double_description(ambient, &ineq, &eq);
        let cone = Self::from_generators(ambient, primal);
        let _ = cone.facets.set(Facets { inequalities: to_lv(ineq), equations: to_lv(eq) });
        Ok(cone)
    }

    pub fn from_rays(ambient: usize, rays: &[LatticeVector]) -> Result<Cone> {
        Self::new(ambient, rays, &[])
    }

    /// `{x : a . x >= 0 for a in inequalities, e . x = 0 for e in equations}`.
    pub fn from_inequalities(
        ambient: usize,
        inequalities: &[LatticeVector],
        equations: &[LatticeVector],
    ) -> Result<Cone> {
        check_dims(ambient, inequalities)?;
        check_dims(ambient, equations)?;
        let a: Vec<Vec<Int>> = inequalities.iter().map(|r| r.0.clone()).collect();
        let e: Vec<Vec<Int>> = equations.iter().map(|r| r.0.clone()).collect();
        Ok(Self::from_generators(ambient, double_description(ambient, &a, &e)))
    }

    fn from_generators(ambient: usize, g: Generators) -> Cone {
        let (rays, lin) = canonical_pair(ambient, g);
        let dim = lin.len() + rank(&rays.iter().map(|r| ints_to_rats(r)).collect::<Vec<_>>(), ambient);
        Cone { ambient, dim, rays: to_lv(rays), lineality: to_lv(lin), facets: OnceLock::new() }
    }

    /// The cone `{0}` in `R^ambient`.
    pub fn origin(ambient: usize) -> Cone {
        Cone { ambient, dim: 0, rays: vec![], lineality: vec![], facets: OnceLock::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn lineality(&self) -> &[LatticeVector] {
        &self.lineality
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_simplicial(&self) -> bool {
        self.is_pointed() && self.rays.len() == self.dim
    }

    /// Facet inequalities and equations, computed once.
    pub fn facets(&self) -> &Facets {
        self.facets.get_or_init(|| {
            let gens: Vec<Vec<Int>> = self.rays.iter().map(|r| r.0.clone()).collect();
            let lin: Vec<Vec<Int>> = self.lineality.iter().map(|r| r.0.clone()).collect();
            let (ineq, eq) = canonical_pair(self.ambient, double_description(self.ambient, &gens, &lin));
            Facets { inequalities: to_lv(ineq), equations: to_lv(eq) }
        })
    }

    /// Inequalities whose common nonnegativity locus is the cone; each
    /// equation `e` appears as the pair `e`, `-e`.
    pub fn dual_description(&self) -> Vec<Vec<Rat>> {
        let f = self.facets();
        let mut out: Vec<Vec<Rat>> = f.inequalities.iter().map(|a| a.to_rat()).collect();
        for e in &f.equations {
            out.push(e.to_rat());
            out.push(e.neg().to_rat());
        }
        out
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        let f = self.facets();
        f.equations.iter().all(|e| dot(&e.to_rat(), x).is_zero())
            && f.inequalities.iter().all(|a| !dot(&a.to_rat(), x).is_negative())
    }

    pub fn contains_lattice(&self, x: &LatticeVector) -> bool {
        let f = self.facets();
        f.equations.iter().all(|e| dot_int(e, x).is_zero())
            && f.inequalities.iter().all(|a| !dot_int(a, x).is_negative())
    }

    /// Membership in the relative interior.
    pub fn contains_relint(&self, x: &[Rat]) -> bool {
        let f = self.facets();
        f.equations.iter().all(|e| dot(&e.to_rat(), x).is_zero())
            && f.inequalities.iter().all(|a| dot(&a.to_rat(), x).is_positive())
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!("R^{} and R^{}", self.ambient, other.ambient)));
        }
        let (fa, fb) = (self.facets(), other.facets());
        let ineq: Vec<LatticeVector> = fa.inequalities.iter().chain(&fb.inequalities).cloned().collect();
        let eq: Vec<LatticeVector> = fa.equations.iter().chain(&fb.equations).cloned().collect();
        Cone::from_inequalities(self.ambient, &ineq, &eq)
    }

    /// Rays and lineality generators together; they span the linear span.
    pub fn generators(&self) -> Vec<LatticeVector> {
        self.rays.iter().chain(&self.lineality).cloned().collect()
    }

    /// Lattice basis of `Z^n ∩ span(cone)`.
    pub fn lattice_basis(&self) -> Vec<LatticeVector> {
        saturated_basis(&self.generators(), self.ambient)
    }

    /// The sum of the rays: a point of the relative interior when the cone is
    /// pointed.
    pub fn interior_point(&self) -> Vec<Rat> {
        let mut p = vec![Rat::zero(); self.ambient];
        for r in &self.rays {
            for (x, y) in p.iter_mut().zip(r.iter()) {
                *x += rat_from_int(y);
            }
        }
        p
    }
}

impl PartialEq for Cone {
    fn eq(&self, other: &Cone) -> bool {
        self.ambient == other.ambient && self.rays == other.rays && self.lineality == other.lineality
    }
}

impl Eq for Cone {}

impl Hash for Cone {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.rays.hash(state);
        self.lineality.hash(state);
    }
}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cone(R^{}, rays {:?}", self.ambient, self.rays)?;
        if !self.lineality.is_empty() {
            write!(f, ", lineality {:?}", self.lineality)?;
        }
        write!(f, ")")
    }
}

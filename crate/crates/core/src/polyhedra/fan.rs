use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

use super::cone::{project_out, Cone};
use crate::error::{Error, Result};
use crate::exactlinalg::{dot_int, gcd_all, ints_to_rats, rank, LatticeVector, Rat};

/// Rays plus maximal cones given as index sets into the rays. A global
/// lineality space may be attached; it is added to every cone. Ordinary fans
/// of toric varieties have none.
#[derive(Clone)]
pub struct Fan {
    ambient: usize,
    rays: Vec<LatticeVector>,
    cones: Vec<Vec<usize>>,
    lineality: Vec<LatticeVector>,
    geometry: OnceLock<Vec<Cone>>,
}

/// A violated fan axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ZeroRay(usize),
    NonPrimitiveRay(usize),
    DuplicateRays(usize, usize),
    NotPointed(usize),
    NonExtremalRay { cone: usize, ray: usize },
    BadIntersection(usize, usize),
    NestedCones(usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroRay(i) => write!(f, "ray {i} is zero"),
            Violation::NonPrimitiveRay(i) => write!(f, "ray {i} is not primitive"),
            Violation::DuplicateRays(i, j) => write!(f, "rays {i} and {j} coincide"),
            Violation::NotPointed(c) => write!(f, "cone {c} is not pointed"),
            Violation::NonExtremalRay { cone, ray } => write!(f, "ray {ray} is not extremal in cone {cone}"),
            Violation::BadIntersection(i, j) => write!(f, "cones {i} and {j} do not meet in a common face"),
            Violation::NestedCones(i, j) => write!(f, "cone {i} is a face of cone {j}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FanReport {
    pub violations: Vec<Violation>,
}

impl FanReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Fan {
    pub fn new(ambient: usize, rays: Vec<LatticeVector>, cones: Vec<Vec<usize>>) -> Result<Fan> {
        Self::with_lineality(ambient, rays, cones, Vec::new())
    }

    /// Checks only the shape of the data: lengths and index ranges. Cone
    /// index sets are sorted and deduplicated.
    pub fn with_lineality(
        ambient: usize,
        rays: Vec<LatticeVector>,
        cones: Vec<Vec<usize>>,
        lineality: Vec<LatticeVector>,
    ) -> Result<Fan> {
        if let Some(r) = rays.iter().chain(&lineality).find(|r| r.dim() != ambient) {
            return Err(Error::DimensionMismatch(format!("vector {r:?} in R^{ambient}")));
        }
        let mut sorted = Vec::with_capacity(cones.len());
        for c in cones {
            let s: BTreeSet<usize> = c.into_iter().collect();
            if let Some(&i) = s.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::InvalidFan(format!("ray index {i} out of range")));
            }
            sorted.push(s.into_iter().collect());
        }
        let lin_rows: Vec<Vec<Rat>> = lineality.iter().map(|l| l.to_rat()).collect();
        if rank(&lin_rows, ambient) != lineality.len() {
            return Err(Error::InvalidFan("lineality generators are dependent".into()));
        }
        Ok(Fan { ambient, rays, cones: sorted, lineality, geometry: OnceLock::new() })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn maximal_cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn lineality(&self) -> &[LatticeVector] {
        &self.lineality
    }

    /// The geometric cone spanned by the given rays (plus the lineality).
    pub fn cone_of(&self, indices: &[usize]) -> Result<Cone> {
        if let Some(&i) = indices.iter().find(|&&i| i >= self.rays.len()) {
            return Err(Error::InvalidFan(format!("ray index {i} out of range")));
        }
        let rays: Vec<LatticeVector> = indices.iter().map(|&i| self.rays[i].clone()).collect();
        Cone::new(self.ambient, &rays, &self.lineality)
    }

    /// Geometric cones of the maximal cones, computed once.
    pub fn cones(&self) -> &[Cone] {
        self.geometry.get_or_init(|| {
            self.cones.iter().map(|c| self.cone_of(c).expect("indices checked at construction")).collect()
        })
    }

    /// Dimension of the span of the given rays together with the lineality.
    pub fn span_dim(&self, indices: &[usize]) -> usize {
        let rows: Vec<Vec<Rat>> =
            indices.iter().map(|&i| self.rays[i].to_rat()).chain(self.lineality.iter().map(|l| l.to_rat())).collect();
        rank(&rows, self.ambient)
    }

    pub fn dim(&self) -> usize {
        self.cones().iter().map(Cone::dim).max().unwrap_or(self.lineality.len())
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.cones().iter().all(|c| c.dim() == d)
    }

    /// Checks primitivity, pointedness, extremality, the pairwise face
    /// axiom and that no maximal cone is a face of another.
    pub fn validate(&self) -> FanReport {
        let mut v = Vec::new();
        for (i, r) in self.rays.iter().enumerate() {
            let g = gcd_all(r);
            if g.is_zero() {
                v.push(Violation::ZeroRay(i));
            } else if g != 1.into() {
                v.push(Violation::NonPrimitiveRay(i));
            }
            for j in i + 1..self.rays.len() {
                if self.rays[j] == *r {
                    v.push(Violation::DuplicateRays(i, j));
                }
            }
        }
        if !v.is_empty() {
            return FanReport { violations: v };
        }
        let cones = self.cones();
        let mut shape_ok = vec![true; cones.len()];
        for (ci, (idx, cone)) in self.cones.iter().zip(cones).enumerate() {
            if cone.lineality().len() != self.lineality.len() {
                v.push(Violation::NotPointed(ci));
                shape_ok[ci] = false;
                continue;
            }
            let lin: Vec<_> = cone.lineality().iter().map(|l| l.0.clone()).collect();
            for &r in idx {
                let p = LatticeVector(project_out(&self.rays[r], &lin));
                if !cone.rays().contains(&p) {
                    v.push(Violation::NonExtremalRay { cone: ci, ray: r });
                    shape_ok[ci] = false;
                }
            }
        }
        for i in 0..cones.len() {
            for j in i + 1..cones.len() {
                if !(shape_ok[i] && shape_ok[j]) {
                    continue;
                }
                let (a, b) = (&self.cones[i], &self.cones[j]);
                if a == b {
                    v.push(Violation::NestedCones(i, j));
                    continue;
                }
                if is_subset(a, b) {
                    v.push(Violation::NestedCones(i, j));
                    continue;
                }
                if is_subset(b, a) {
                    v.push(Violation::NestedCones(j, i));
                    continue;
                }
                if !self.meet_in_common_face(i, j) {
                    v.push(Violation::BadIntersection(i, j));
                }
            }
        }
        FanReport { violations: v }
    }

    fn meet_in_common_face(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.cones[i], &self.cones[j]);
        let common: Vec<usize> = a.iter().copied().filter(|x| b.contains(x)).collect();
        if !self.is_face_of(&common, i) || !self.is_face_of(&common, j) {
            return false;
        }
        let cones = self.cones();
        let Ok(meet) = cones[i].intersect(&cones[j]) else { return false };
        match self.cone_of(&common) {
            Ok(c) => c == meet,
            Err(_) => false,
        }
    }

    /// Whether `face` (ray indices, a subset of maximal cone `c`) spans a
    /// face of that cone.
    pub fn is_face_of(&self, face: &[usize], c: usize) -> bool {
        if !is_subset(face, &self.cones[c]) {
            return false;
        }
        self.face_closure(face, c) == face
    }

    /// Rays of maximal cone `c` lying on the smallest face containing `face`.
    fn face_closure(&self, face: &[usize], c: usize) -> Vec<usize> {
        let facets = &self.cones()[c].facets().inequalities;
        let tight: Vec<&LatticeVector> =
            facets.iter().filter(|f| face.iter().all(|&r| dot_int(f, &self.rays[r]).is_zero())).collect();
        self.cones[c].iter().copied().filter(|&r| tight.iter().all(|f| dot_int(f, &self.rays[r]).is_zero())).collect()
    }

    /// All faces of maximal cone `c` as sorted ray index sets.
    pub fn faces_of(&self, c: usize) -> Vec<Vec<usize>> {
        let all = self.cones[c].clone();
        let facets = &self.cones()[c].facets().inequalities;
        let tight_sets: Vec<Vec<usize>> = facets
            .iter()
            .map(|f| all.iter().copied().filter(|&r| dot_int(f, &self.rays[r]).is_zero()).collect())
            .collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut stack = vec![all];
        while let Some(face) = stack.pop() {
            if !seen.insert(face.clone()) {
                continue;
            }
            for t in &tight_sets {
                let next: Vec<usize> = face.iter().copied().filter(|x| t.contains(x)).collect();
                if next.len() < face.len() && !seen.contains(&next) {
                    stack.push(next);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Facets (codimension-one faces) of maximal cone `c`.
    pub fn facets_of(&self, c: usize) -> Vec<Vec<usize>> {
        let all = &self.cones[c];
        let mut out: Vec<Vec<usize>> = self.cones()[c]
            .facets()
            .inequalities
            .iter()
            .map(|f| all.iter().copied().filter(|&r| dot_int(f, &self.rays[r]).is_zero()).collect())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// All cones of the fan of the given dimension, lexicographically sorted.
    pub fn cones_of_dim(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = BTreeSet::new();
        for c in 0..self.cones.len() {
            if self.cones()[c].dim() < k {
                continue;
            }
            for f in self.faces_of(c) {
                if self.span_dim(&f) == k {
                    out.insert(f);
                }
            }
        }
        out.into_iter().collect()
    }

    /// Whether the index set spans a cone of the fan.
    pub fn contains_cone(&self, indices: &[usize]) -> bool {
        let mut s: Vec<usize> = indices.to_vec();
        s.sort();
        s.dedup();
        (0..self.cones.len()).any(|c| self.is_face_of(&s, c))
    }

    /// Maximal cones having the given cone as a face.
    pub fn maximal_cones_containing(&self, face: &[usize]) -> Vec<usize> {
        (0..self.cones.len()).filter(|&c| self.is_face_of(face, c)).collect()
    }

    /// Completeness by the wall condition; assumes a valid fan.
    pub(crate) fn complete_unchecked(&self) -> bool {
        let n = self.ambient;
        if self.cones.is_empty() {
            return false;
        }
        if self.cones().iter().any(|c| c.dim() != n) {
            return false;
        }
        let mut walls: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for c in 0..self.cones.len() {
            for f in self.facets_of(c) {
                *walls.entry(f).or_default() += 1;
            }
        }
        walls.values().all(|&k| k == 2)
    }

    pub(crate) fn simplicial_unchecked(&self) -> bool {
        self.cones.iter().all(|c| self.span_dim(c) == c.len() + self.lineality.len())
    }

    pub fn is_complete(&self) -> Result<bool> {
        self.require_valid()?;
        Ok(self.complete_unchecked())
    }

    pub fn is_simplicial(&self) -> Result<bool> {
        self.require_valid()?;
        Ok(self.simplicial_unchecked())
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidFan(v.to_string())),
        }
    }

    /// A fan with the same cones whose rays are reordered by `perm`
    /// (`new_rays[i] = rays[perm[i]]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Fan> {
        let mut inv = vec![usize::MAX; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let rays = perm.iter().map(|&p| self.rays[p].clone()).collect();
        let cones = self.cones.iter().map(|c| c.iter().map(|&r| inv[r]).collect()).collect();
        Fan::with_lineality(self.ambient, rays, cones, self.lineality.clone())
    }

    /// Rays as rational vectors.
    pub fn ray_rats(&self) -> Vec<Vec<Rat>> {
        self.rays.iter().map(|r| ints_to_rats(r)).collect()
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

impl PartialEq for Fan {
    fn eq(&self, other: &Fan) -> bool {
        self.ambient == other.ambient
            && self.rays == other.rays
            && self.cones == other.cones
            && self.lineality == other.lineality
    }
}

impl Eq for Fan {}

impl fmt::Debug for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Fan")
            .field("ambient", &self.ambient)
            .field("rays", &self.rays)
            .field("cones", &self.cones)
            .field("lineality", &self.lineality)
            .finish()
    }
}

use super::TropicalCycle;
use crate::error::{Error, Result};
use crate::exactlinalg::{
    dot_int, ints_to_rats, lattice_index, rank, saturated_basis, ExactMatrix, Int, LatticeVector,
};
use crate::polyhedra::Cone;

/// An integer linear map `Z^source -> Z^target`, stored as a
/// `target x source` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    rows: Vec<Vec<Int>>,
    source: usize,
}

impl MonomialMap {
    pub fn new(matrix: &ExactMatrix) -> Result<MonomialMap> {
        Ok(MonomialMap { rows: matrix.to_int_rows()?, source: matrix.cols() })
    }

    pub fn from_i64(source: usize, rows: &[&[i64]]) -> MonomialMap {
        MonomialMap { rows: rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect(), source }
    }

    /// `w ↦ (w, -w)`.
    pub fn graph_of_inversion(n: usize) -> MonomialMap {
        let rows = (0..2 * n)
            .map(|i| {
                (0..n).map(|j| if i % n == j { Int::from(if i < n { 1 } else { -1 }) } else { Int::from(0) }).collect()
            })
            .collect();
        MonomialMap { rows, source: n }
    }

    pub fn source_dim(&self) -> usize {
        self.source
    }

    pub fn target_dim(&self) -> usize {
        self.rows.len()
    }

    pub fn matrix(&self) -> ExactMatrix {
        ExactMatrix::from_int_rows(&self.rows, self.source).expect("rectangular")
    }

    pub fn apply(&self, v: &[Int]) -> LatticeVector {
        LatticeVector(self.rows.iter().map(|r| dot_int(r, v)).collect())
    }

    pub fn is_injective(&self) -> bool {
        let rows: Vec<_> = self.rows.iter().map(|r| ints_to_rats(r)).collect();
        rank(&rows, self.source) == self.source
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MonomialMap) -> Result<MonomialMap> {
        self.matrix().mul(&inner.matrix()).and_then(|m| MonomialMap::new(&m))
    }
}

/// Image of a tropical cycle. Each cone's weight is multiplied by the index
/// of the image of its lattice inside the saturation.
pub fn pushforward(m: &MonomialMap, t: &TropicalCycle) -> Result<TropicalCycle> {
    if t.ambient_dim() != m.source {
        return Err(Error::DimensionMismatch(format!("map from R^{} applied in R^{}", m.source, t.ambient_dim())));
    }
    let p = m.target_dim();
    let fan = t.fan();
    let lin: Vec<LatticeVector> = fan.lineality().iter().map(|l| m.apply(l)).collect();
    let mut cells = Vec::new();
    for (i, (idx, w)) in fan.maximal_cones().iter().zip(t.weights()).enumerate() {
        let mut gens: Vec<LatticeVector> = idx.iter().map(|&r| fan.rays()[r].clone()).collect();
        gens.extend(fan.lineality().iter().cloned());
        let basis = saturated_basis(&gens, m.source);
        let image: Vec<LatticeVector> = basis.iter().map(|b| m.apply(b)).collect();
        let k = image.len();
        let index = lattice_index(&image, k).map_err(|_| Error::NonInjectiveMap(i))?;
        let rays: Vec<LatticeVector> = idx.iter().map(|&r| m.apply(&fan.rays()[r])).collect();
        let cone = Cone::new(p, &rays, &lin)?;
        cells.push((cone, w * index));
    }
    let out = TropicalCycle::from_cones(p, &lin, t.dim(), cells)?;
    out.require_balanced()?;
    Ok(out)
}

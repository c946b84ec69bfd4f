use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use super::ToricVariety;
use crate::error::{Error, Result};
use crate::exactlinalg::{rat_from_int, Rat};

fn same(a: &Arc<ToricVariety>, b: &Arc<ToricVariety>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A `Q`-divisor `Σ c_ρ D_ρ`.
#[derive(Clone, Debug)]
pub struct ToricDivisor {
    variety: Arc<ToricVariety>,
    coeffs: Vec<Rat>,
}

impl PartialEq for ToricDivisor {
    fn eq(&self, other: &Self) -> bool {
        same(&self.variety, &other.variety) && self.coeffs == other.coeffs
    }
}

impl ToricDivisor {
    pub fn new(variety: Arc<ToricVariety>, coeffs: Vec<Rat>) -> Result<ToricDivisor> {
        if coeffs.len() != variety.num_rays() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for {} rays",
                coeffs.len(),
                variety.num_rays()
            )));
        }
        Ok(ToricDivisor { variety, coeffs })
    }

    pub(crate) fn from_parts(variety: Arc<ToricVariety>, coeffs: Vec<Rat>) -> ToricDivisor {
        ToricDivisor { variety, coeffs }
    }

    pub fn zero(variety: Arc<ToricVariety>) -> ToricDivisor {
        let n = variety.num_rays();
        ToricDivisor { variety, coeffs: vec![Rat::zero(); n] }
    }

    /// The prime divisor `D_ρ`.
    pub fn prime(variety: Arc<ToricVariety>, ray: usize) -> Result<ToricDivisor> {
        if ray >= variety.num_rays() {
            return Err(Error::NotACone(vec![ray]));
        }
        let mut d = Self::zero(variety);
        d.coeffs[ray] = Rat::from_integer(1.into());
        Ok(d)
    }

    pub fn variety(&self) -> &Arc<ToricVariety> {
        &self.variety
    }

    pub fn coefficients(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn add(&self, other: &ToricDivisor) -> Result<ToricDivisor> {
        if !same(&self.variety, &other.variety) {
            return Err(Error::MixedVarieties);
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(ToricDivisor { variety: self.variety.clone(), coeffs })
    }

    pub fn scale(&self, c: &Rat) -> ToricDivisor {
        ToricDivisor { variety: self.variety.clone(), coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }

    /// A linearly equivalent divisor with zero coefficient on every ray in
    /// `avoid`, obtained by adding a principal divisor.
    pub fn make_transverse(&self, avoid: &[usize]) -> Result<ToricDivisor> {
        let mut rays: Vec<usize> = avoid.to_vec();
        rays.sort();
        rays.dedup();
        if let Some(&r) = rays.iter().find(|&&r| r >= self.coeffs.len()) {
            return Err(Error::NotACone(vec![r]));
        }
        let target: Vec<Rat> = rays.iter().map(|&r| -self.coeffs[r].clone()).collect();
        let m = self.variety.solve_character(&rays, &target).ok_or(Error::InfeasibleAvoidance)?;
        let mut out = self.add(&self.variety.principal_divisor(&m))?;
        for &r in &rays {
            out.coeffs[r] = Rat::zero();
        }
        Ok(out)
    }

    /// The intersection product `D · Z`.
    pub fn times(&self, z: &ToricCycle) -> Result<ToricCycle> {
        if !same(&self.variety, &z.variety) {
            return Err(Error::MixedVarieties);
        }
        let x = &self.variety;
        x.require_simplicial()?;
        let mut out: BTreeMap<Vec<usize>, Rat> = BTreeMap::new();
        for (sigma, c) in &z.terms {
            for (tau, w) in times_orbit(x, &self.coeffs, sigma)? {
                *out.entry(tau).or_insert_with(Rat::zero) += w * c;
            }
        }
        Ok(ToricCycle::from_map(x.clone(), z.codim + 1, out))
    }

    /// The divisor whose coefficients are those of a codimension-one cycle.
    pub fn from_cycle(z: &ToricCycle) -> Result<ToricDivisor> {
        if z.codim != 1 {
            return Err(Error::WrongCodimension { expected: 1, found: z.codim });
        }
        let mut d = Self::zero(z.variety.clone());
        for (k, c) in &z.terms {
            d.coeffs[k[0]] = c.clone();
        }
        Ok(d)
    }

    pub fn to_cycle(&self) -> ToricCycle {
        let terms = (0..self.coeffs.len()).map(|i| (vec![i], self.coeffs[i].clone())).collect();
        ToricCycle::from_map(self.variety.clone(), 1, terms)
    }
}

/// `D · V(σ)` for one orbit closure. When `D` meets the rays of `σ` it is
/// first replaced by the equivalent divisor vanishing on the first maximal
/// cone containing `σ`.
fn times_orbit(x: &ToricVariety, d: &[Rat], sigma: &[usize]) -> Result<Vec<(Vec<usize>, Rat)>> {
    let moved;
    let d = if sigma.iter().any(|&r| !d[r].is_zero()) {
        let c = x.first_maximal_containing(sigma).ok_or_else(|| Error::NotACone(sigma.to_vec()))?;
        let cone = &x.fan().maximal_cones()[c];
        let target: Vec<Rat> = cone.iter().map(|&r| -d[r].clone()).collect();
        let m = x.solve_character(cone, &target).ok_or(Error::InfeasibleAvoidance)?;
        moved = x
            .fan()
            .rays()
            .iter()
            .zip(d)
            .map(|(v, a)| a + v.iter().zip(&m).fold(Rat::zero(), |acc, (p, q)| acc + rat_from_int(p) * q))
            .collect::<Vec<Rat>>();
        &moved[..]
    } else {
        d
    };
    let ms = rat_from_int(x.mult(sigma)?);
    let mut out = Vec::new();
    for (rho, a) in d.iter().enumerate() {
        if a.is_zero() || sigma.contains(&rho) {
            continue;
        }
        let mut tau = sigma.to_vec();
        tau.push(rho);
        tau.sort();
        if let Ok(mt) = x.mult(&tau) {
            out.push((tau, a * &ms / rat_from_int(mt)));
        }
    }
    Ok(out)
}

/// A rational combination of orbit closures of a fixed codimension.
#[derive(Clone, Debug)]
pub struct ToricCycle {
    variety: Arc<ToricVariety>,
    codim: usize,
    terms: BTreeMap<Vec<usize>, Rat>,
}

impl PartialEq for ToricCycle {
    fn eq(&self, other: &Self) -> bool {
        same(&self.variety, &other.variety) && self.codim == other.codim && self.terms == other.terms
    }
}

impl ToricCycle {
    pub fn new(
        variety: Arc<ToricVariety>,
        codim: usize,
        terms: impl IntoIterator<Item = (Vec<usize>, Rat)>,
    ) -> Result<ToricCycle> {
        let mut map: BTreeMap<Vec<usize>, Rat> = BTreeMap::new();
        for (mut k, c) in terms {
            k.sort();
            k.dedup();
            if k.len() != codim {
                return Err(Error::WrongCodimension { expected: codim, found: k.len() });
            }
            if !variety.is_cone(&k) {
                return Err(Error::NotACone(k));
            }
            *map.entry(k).or_insert_with(Rat::zero) += c;
        }
        Ok(Self::from_map(variety, codim, map))
    }

    fn from_map(variety: Arc<ToricVariety>, codim: usize, mut terms: BTreeMap<Vec<usize>, Rat>) -> ToricCycle {
        terms.retain(|_, c| !c.is_zero());
        ToricCycle { variety, codim, terms }
    }

    /// `V(σ)` for the cone spanned by the given rays.
    pub fn orbit(variety: Arc<ToricVariety>, rays: &[usize]) -> Result<ToricCycle> {
        let k = {
            let mut s = rays.to_vec();
            s.sort();
            s.dedup();
            s.len()
        };
        Self::new(variety, k, [(rays.to_vec(), Rat::from_integer(1.into()))])
    }

    pub fn zero(variety: Arc<ToricVariety>, codim: usize) -> ToricCycle {
        ToricCycle { variety, codim, terms: BTreeMap::new() }
    }

    pub fn variety(&self) -> &Arc<ToricVariety> {
        &self.variety
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, cone: &[usize]) -> Rat {
        let mut k = cone.to_vec();
        k.sort();
        self.terms.get(&k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &ToricCycle) -> Result<ToricCycle> {
        if !same(&self.variety, &other.variety) {
            return Err(Error::MixedVarieties);
        }
        if self.codim != other.codim {
            return Err(Error::WrongCodimension { expected: self.codim, found: other.codim });
        }
        let mut t = self.terms.clone();
        for (k, c) in &other.terms {
            *t.entry(k.clone()).or_insert_with(Rat::zero) += c;
        }
        Ok(Self::from_map(self.variety.clone(), self.codim, t))
    }

    pub fn scale(&self, c: &Rat) -> ToricCycle {
        let t = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        Self::from_map(self.variety.clone(), self.codim, t)
    }

    /// Degree of a zero-dimensional cycle: every torus fixed point has
    /// degree one.
    pub fn degree(&self) -> Result<Rat> {
        self.variety.require_complete()?;
        if self.codim != self.variety.dim() {
            return Err(Error::WrongCodimension { expected: self.variety.dim(), found: self.codim });
        }
        Ok(self.terms.values().fold(Rat::zero(), |acc, c| acc + c))
    }

    /// `[V(σ)] · Z`, expanding `[V(σ)] = mult(σ) · D_{ρ_1} ⋯ D_{ρ_k}` and
    /// multiplying the divisors in the given order.
    pub fn times_orbit_class(&self, rays_in_order: &[usize]) -> Result<ToricCycle> {
        let mut sorted = rays_in_order.to_vec();
        sorted.sort();
        let m = rat_from_int(self.variety.mult(&sorted)?);
        let mut z = self.clone();
        for &r in rays_in_order {
            z = ToricDivisor::prime(self.variety.clone(), r)?.times(&z)?;
        }
        Ok(z.scale(&m))
    }
}

/// Degrees `deg(V(τ) · V(σ))` for `τ ∈ Σ(n−k)` (rows) and `σ ∈ Σ(k)`
/// (columns), both listed lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix {
    pub rows: Vec<Vec<usize>>,
    pub cols: Vec<Vec<usize>>,
    pub entries: Vec<Vec<Rat>>,
}

impl PairingMatrix {
    pub fn compute(x: &Arc<ToricVariety>, k: usize) -> Result<PairingMatrix> {
        x.require_complete()?;
        x.require_simplicial()?;
        let n = x.dim();
        if k > n {
            return Err(Error::WrongCodimension { expected: n, found: k });
        }
        let rows = x.cones_of_codim(n - k);
        let cols = x.cones_of_codim(k);
        let mut entries = Vec::with_capacity(rows.len());
        for tau in &rows {
            let v = ToricCycle::orbit(x.clone(), tau)?;
            let mut row = Vec::with_capacity(cols.len());
            for sigma in &cols {
                row.push(v.times_orbit_class(sigma)?.degree()?);
            }
            entries.push(row);
        }
        Ok(PairingMatrix { rows, cols, entries })
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::exactlinalg::rat;

    #[test]
    fn exceptional_self_intersection() {
        let x = blowup();
        let e = ToricCycle::orbit(x.clone(), &[1]).unwrap();
        let d1 = ToricDivisor::prime(x.clone(), 1).unwrap();
        let p = d1.times(&e).unwrap();
        let expected = ToricCycle::new(x.clone(), 2, [(vec![1, 2], rat(-1))]).unwrap();
        assert_eq!(p, expected);
        assert_eq!(p.degree().unwrap(), rat(-1));
    }

    #[test]
    fn hidden_degrees_of_the_blowup() {
        let x = blowup();
        let v3 = ToricCycle::orbit(x.clone(), &[3]).unwrap();
        let d0 = ToricDivisor::prime(x.clone(), 0).unwrap();
        let d1 = ToricDivisor::prime(x.clone(), 1).unwrap();
        assert_eq!(d0.times(&v3).unwrap().degree().unwrap(), rat(1));
        assert_eq!(d1.times(&v3).unwrap().degree().unwrap(), rat(0));
    }

    #[test]
    fn p2_products() {
        let x = ToricVariety::projective_space(2).unwrap();
        let v1 = ToricCycle::orbit(x.clone(), &[1]).unwrap();
        let d0 = ToricDivisor::prime(x.clone(), 0).unwrap();
        assert_eq!(d0.times(&v1).unwrap(), ToricCycle::orbit(x.clone(), &[0, 1]).unwrap());
        let pt = ToricCycle::orbit(x.clone(), &[0, 2]).unwrap();
        assert_eq!(pt.degree().unwrap(), rat(1));
        assert_eq!(ToricCycle::zero(x.clone(), 2).degree().unwrap(), rat(0));
        assert!(matches!(ToricCycle::orbit(x.clone(), &[0, 1, 2]), Err(Error::NotACone(_))));
        let fundamental = ToricCycle::orbit(x.clone(), &[]).unwrap();
        assert_eq!(fundamental.codim(), 0);
        assert!(matches!(fundamental.degree(), Err(Error::WrongCodimension { .. })));
    }

    #[test]
    fn non_adjacent_rays_give_zero() {
        let x = blowup();
        let v1 = ToricCycle::orbit(x.clone(), &[1]).unwrap();
        let d3 = ToricDivisor::prime(x.clone(), 3).unwrap();
        assert!(d3.times(&v1).unwrap().is_zero());
    }

    #[test]
    fn make_transverse_on_p2() {
        let x = ToricVariety::projective_space(2).unwrap();
        let d = ToricDivisor::prime(x.clone(), 0).unwrap();
        let t = d.make_transverse(&[0]).unwrap();
        assert!(t.coefficients()[0].is_zero());
        let v = ToricCycle::orbit(x.clone(), &[1]).unwrap();
        assert_eq!(t.times(&v).unwrap().degree().unwrap(), d.times(&v).unwrap().degree().unwrap());
        assert_eq!(d.make_transverse(&[1, 2]).unwrap(), d);
        assert_eq!(d.make_transverse(&[0, 1, 2]).unwrap_err(), Error::InfeasibleAvoidance);
    }

    #[test]
    fn pairing_matrices() {
        let x = ToricVariety::projective_space(2).unwrap();
        let p = PairingMatrix::compute(&x, 1).unwrap();
        assert!(p.entries.iter().flatten().all(|e| *e == rat(1)));
        let p0 = PairingMatrix::compute(&x, 0).unwrap();
        assert_eq!(p0.cols, vec![Vec::<usize>::new()]);
        assert_eq!(p0.rows.len(), 3);
        assert!(p0.entries.iter().all(|r| r == &vec![rat(1)]));

        let b = blowup();
        let p = PairingMatrix::compute(&b, 1).unwrap();
        assert_eq!(p.entries[1][1], rat(-1));
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(p.entries[i][j], p.entries[j][i]);
            }
        }
    }

    #[test]
    fn divisor_cycle_round_trip() {
        let x = blowup();
        let z = ToricCycle::new(x.clone(), 1, [(vec![0], rat(2))]).unwrap();
        let d = ToricDivisor::from_cycle(&z).unwrap();
        assert_eq!(d.coefficients(), &[rat(2), rat(0), rat(0), rat(0)]);
        assert_eq!(d.to_cycle(), z);
        assert!(ToricDivisor::from_cycle(&ToricCycle::zero(x.clone(), 1)).unwrap().support().is_empty());
    }
}

//! Intersection numbers by generic displacement.

use std::sync::Arc;

use num_traits::Zero;

use super::random::{Displacer, MAX_ATTEMPTS};
use super::{random_interior_point, TropicalCycle};
use crate::error::{Error, Result};
use crate::exactlinalg::{generated_index, primitive_integer, rat_from_int, Int, LatticeVector, Rat};
use crate::polyhedra::{shifted_intersection, Cone, ShiftOutcome};
use crate::toric::{PairingMatrix, ToricVariety};

fn lattice_bases(cones: &[Cone]) -> Vec<Vec<LatticeVector>> {
    cones.iter().map(Cone::lattice_basis).collect()
}

/// `[N : N_a + N_b]`, or `None` when the spans do not fill the space.
fn joint_index(a: &[LatticeVector], b: &[LatticeVector], n: usize) -> Option<Int> {
    let all: Vec<LatticeVector> = a.iter().chain(b).cloned().collect();
    match generated_index(&all, n) {
        (i, r) if r == n => Some(i),
        _ => None,
    }
}

/// For each cone `β`, the sum of `w_γ · [N : N_γ + N_β]` over the maximal
/// cones `γ` of `t` meeting `β + v` in a point, for one generic `v` shared by
/// all `β`. Draws fresh displacements until no intersection is degenerate.
pub fn displacement_numbers(t: &TropicalCycle, betas: &[Cone], rng: &mut Displacer) -> Result<Vec<Int>> {
    let n = t.ambient_dim();
    if let Some(b) = betas.iter().find(|b| b.ambient_dim() != n || b.dim() + t.dim() != n) {
        return Err(Error::DimensionMismatch(format!(
            "cone of dimension {} against a {}-cycle in R^{n}",
            b.dim(),
            t.dim()
        )));
    }
    let gammas = t.fan().cones();
    let gb = lattice_bases(gammas);
    let bb = lattice_bases(betas);
    // pairs with transverse spans and their lattice indices
    let mut pairs: Vec<Vec<(usize, Int)>> = Vec::with_capacity(betas.len());
    for b in &bb {
        let mut row = Vec::new();
        for (g, basis) in gb.iter().enumerate() {
            if let Some(i) = joint_index(basis, b, n) {
                row.push((g, i * &t.weights()[g]));
            }
        }
        pairs.push(row);
    }
    'attempt: for _ in 0..MAX_ATTEMPTS {
        let v = rng.vector(n);
        let mut out = Vec::with_capacity(betas.len());
        for (beta, row) in betas.iter().zip(&pairs) {
            let mut acc = Int::zero();
            for (g, m) in row {
                match shifted_intersection(&gammas[*g], beta, &v)? {
                    ShiftOutcome::Empty => {}
                    ShiftOutcome::Point { interior: true, .. } => acc += m,
                    _ => continue 'attempt,
                }
            }
            out.push(acc);
        }
        return Ok(out);
    }
    Err(Error::GenericityFailure(MAX_ATTEMPTS))
}

/// `deg([Y] · [V(σ)])` for every `σ ∈ Σ(k)`, where `t` is the tropical
/// cycle of a `k`-dimensional `Y`. Computed as `Σ_β P[β,σ] · DP(β)` over
/// `β ∈ Σ(n−k)`, and recomputed with a second displacement as a check.
pub(crate) fn pairing_values(
    t: &TropicalCycle,
    x: &Arc<ToricVariety>,
    p: &PairingMatrix,
    rng: &mut Displacer,
) -> Result<Vec<Rat>> {
    if t.ambient_dim() != x.dim() {
        return Err(Error::DimensionMismatch(format!(
            "cycle in R^{} on a variety of dimension {}",
            t.ambient_dim(),
            x.dim()
        )));
    }
    let betas: Vec<Cone> = p.rows.iter().map(|b| x.fan().cone_of(b)).collect::<Result<_>>()?;
    let mut draws = Vec::with_capacity(2);
    for _ in 0..2 {
        let dp = displacement_numbers(t, &betas, rng)?;
        let vals: Vec<Rat> = (0..p.cols.len())
            .map(|s| dp.iter().enumerate().fold(Rat::zero(), |acc, (b, d)| acc + &p.entries[b][s] * rat_from_int(d)))
            .collect();
        draws.push(vals);
    }
    if draws[0] != draws[1] {
        return Err(Error::Inconsistent(
            "intersection numbers depend on the displacement; is the cycle balanced?".into(),
        ));
    }
    Ok(draws.swap_remove(0))
}

/// `deg([Y] · [V(σ)])` for a single cone `σ` with as many rays as `dim t`.
pub fn displacement_pairing(t: &TropicalCycle, x: &Arc<ToricVariety>, sigma: &[usize], seed: u64) -> Result<Rat> {
    x.require_complete()?;
    x.require_simplicial()?;
    let mut s = sigma.to_vec();
    s.sort();
    s.dedup();
    if s.len() != t.dim() {
        return Err(Error::WrongCodimension { expected: t.dim(), found: s.len() });
    }
    if !x.is_cone(&s) {
        return Err(Error::NotACone(s));
    }
    let n = x.dim();
    let rows = x.cones_of_codim(n - t.dim());
    let v = crate::toric::ToricCycle::orbit(x.clone(), &s)?;
    let mut entries = Vec::with_capacity(rows.len());
    for tau in &rows {
        entries.push(vec![v.times_orbit_class(tau)?.degree()?]);
    }
    let p = PairingMatrix { rows, cols: vec![s], entries };
    let mut rng = Displacer::new(seed);
    Ok(pairing_values(t, x, &p, &mut rng)?.swap_remove(0))
}

/// The stable intersection of two tropical cycles in the same space.
pub fn stable_intersection(a: &TropicalCycle, b: &TropicalCycle, seed: u64) -> Result<TropicalCycle> {
    let n = a.ambient_dim();
    if b.ambient_dim() != n {
        return Err(Error::DimensionMismatch(format!("R^{n} and R^{}", b.ambient_dim())));
    }
    if a.dim() + b.dim() < n {
        return Ok(TropicalCycle::zero(n, 0));
    }
    let d = a.dim() + b.dim() - n;
    let lin = Cone::new(n, &[], a.fan().lineality())?.intersect(&Cone::new(n, &[], b.fan().lineality())?)?;
    let (ca, cb) = (a.fan().cones(), b.fan().cones());
    let (ba, bb) = (lattice_bases(ca), lattice_bases(cb));

    let mut cells: Vec<Cone> = Vec::new();
    for (i, g) in ca.iter().enumerate() {
        for (j, h) in cb.iter().enumerate() {
            if joint_index(&ba[i], &bb[j], n).is_none() {
                continue;
            }
            let c = g.intersect(h)?;
            if c.dim() == d && !cells.contains(&c) {
                cells.push(c);
            }
        }
    }

    let mut rng = Displacer::new(seed);
    let mut weighted = Vec::with_capacity(cells.len());
    for c in cells {
        let w = local_weight(a, b, &c, &ba, &bb, &mut rng)?;
        weighted.push((c, w));
    }
    let out = TropicalCycle::from_cones(n, lin.lineality(), d, weighted)?;
    out.require_balanced()?;
    Ok(out)
}

/// Weight of the stable intersection along the cell `c`, computed from the
/// tangent cones at a generic point of `c`.
fn local_weight(
    a: &TropicalCycle,
    b: &TropicalCycle,
    c: &Cone,
    ba: &[Vec<LatticeVector>],
    bb: &[Vec<LatticeVector>],
    rng: &mut Displacer,
) -> Result<Int> {
    let n = a.ambient_dim();
    let p = random_interior_point(c, rng);
    let p_int = LatticeVector(primitive_integer(&p));
    let minus_p = p_int.neg();
    let span_c = c.generators();

    let tangent = |g: &Cone| -> Result<Cone> {
        let mut rays = g.rays().to_vec();
        if !p_int.is_zero() {
            rays.push(minus_p.clone());
        }
        Cone::new(n, &rays, g.lineality())
    };
    let mut left: Vec<(Cone, usize)> = Vec::new();
    for (i, g) in a.fan().cones().iter().enumerate() {
        if g.contains(&p) {
            left.push((tangent(g)?, i));
        }
    }
    let mut right: Vec<(Cone, usize)> = Vec::new();
    for (j, h) in b.fan().cones().iter().enumerate() {
        if h.contains(&p) {
            let t = tangent(h)?;
            let f = t.facets();
            let mut eq = f.equations.clone();
            eq.extend(span_c.iter().cloned());
            right.push((Cone::from_inequalities(n, &f.inequalities, &eq)?, j));
        }
    }
    let mut terms: Vec<(usize, usize, Int)> = Vec::new();
    for (_, i) in &left {
        for (_, j) in &right {
            if let Some(m) = joint_index(&ba[*i], &bb[*j], n) {
                terms.push((*i, *j, m * &a.weights()[*i] * &b.weights()[*j]));
            }
        }
    }
    'attempt: for _ in 0..super::random::MAX_ATTEMPTS {
        let v = rng.vector(n);
        let mut acc = Int::zero();
        for (i, j, m) in &terms {
            let tl = &left.iter().find(|(_, k)| k == i).expect("collected").0;
            let tr = &right.iter().find(|(_, k)| k == j).expect("collected").0;
            match shifted_intersection(tl, tr, &v)? {
                ShiftOutcome::Empty => {}
                ShiftOutcome::Point { interior: true, .. } => acc += m,
                _ => continue 'attempt,
            }
        }
        return Ok(acc);
    }
    Err(Error::GenericityFailure(super::random::MAX_ATTEMPTS))
}

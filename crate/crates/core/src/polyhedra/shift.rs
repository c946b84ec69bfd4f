use num_traits::{Signed, Zero};

use super::cone::Cone;
use super::dd::double_description;
use crate::error::{Error, Result};
use crate::exactlinalg::{rat_from_int, solve_rational, ExactMatrix, Int, Rat};

/// How `a ∩ (b + v)` looks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShiftOutcome {
    Empty,
    /// A single point; `interior` records whether it lies in the relative
    /// interiors of both `a` and `b + v`.
    Point {
        point: Vec<Rat>,
        interior: bool,
    },
    PositiveDim,
}

impl ShiftOutcome {
    pub fn is_point(&self) -> bool {
        matches!(self, ShiftOutcome::Point { .. })
    }
}

/// Classifies `a ∩ (b + v)` for cones of complementary dimension.
pub fn shifted_intersection(a: &Cone, b: &Cone, v: &[Rat]) -> Result<ShiftOutcome> {
    let n = a.ambient_dim();
    if b.ambient_dim() != n || v.len() != n {
        return Err(Error::DimensionMismatch("cones and displacement live in different spaces".into()));
    }
    if a.dim() + b.dim() != n {
        return Err(Error::DimensionMismatch(format!("dim {} + dim {} != {n}", a.dim(), b.dim())));
    }
    if a.is_simplicial() && b.is_simplicial() {
        if let Some(out) = simplicial_case(a, b, v) {
            return Ok(out);
        }
    }
    Ok(general_case(a, b, v))
}

fn simplicial_case(a: &Cone, b: &Cone, v: &[Rat]) -> Option<ShiftOutcome> {
    let n = a.ambient_dim();
    // columns: rays of a, then negated rays of b
    let mut m = ExactMatrix::zeros(n, n);
    for (j, r) in a.rays().iter().enumerate() {
        for i in 0..n {
            m.set(i, j, rat_from_int(&r[i]));
        }
    }
    let k = a.rays().len();
    for (j, r) in b.rays().iter().enumerate() {
        for i in 0..n {
            m.set(i, k + j, -rat_from_int(&r[i]));
        }
    }
    if m.determinant().ok()?.is_zero() {
        return None;
    }
    let c = solve_rational(&m, v).ok()??;
    if c.iter().any(|x| x.is_negative()) {
        return Some(ShiftOutcome::Empty);
    }
    let mut point = vec![Rat::zero(); n];
    for (cj, r) in c.iter().zip(a.rays()) {
        for (p, x) in point.iter_mut().zip(r.iter()) {
            *p += cj * rat_from_int(x);
        }
    }
    Some(ShiftOutcome::Point { point, interior: c.iter().all(|x| x.is_positive()) })
}

fn general_case(a: &Cone, b: &Cone, v: &[Rat]) -> ShiftOutcome {
    let n = a.ambient_dim();
    // a ∩ (b + v) = (a ∩ (b + w)) / d with w = d v integral
    let d = v.iter().fold(Int::from(1), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    let w: Vec<Int> = v.iter().map(|x| (x * rat_from_int(&d)).to_integer()).collect();
    let lift = |a: &[Int], shift: bool| -> Vec<Int> {
        let mut row = a.to_vec();
        let t = if shift { -a.iter().zip(&w).fold(Int::zero(), |acc, (x, y)| acc + x * y) } else { Int::zero() };
        row.push(t);
        row
    };
    let (fa, fb) = (a.facets(), b.facets());
    let mut ineq: Vec<Vec<Int>> = fa.inequalities.iter().map(|x| lift(x, false)).collect();
    ineq.extend(fb.inequalities.iter().map(|x| lift(x, true)));
    let mut t = vec![Int::zero(); n + 1];
    t[n] = Int::from(1);
    ineq.push(t);
    let mut eq: Vec<Vec<Int>> = fa.equations.iter().map(|x| lift(x, false)).collect();
    eq.extend(fb.equations.iter().map(|x| lift(x, true)));
    let g = double_description(n + 1, &ineq, &eq);

    let vertices: Vec<&Vec<Int>> = g.rays.iter().filter(|r| r[n].is_positive()).collect();
    if vertices.is_empty() {
        return ShiftOutcome::Empty;
    }
    let recession = !g.lineality.is_empty() || g.rays.iter().any(|r| r[n].is_zero());
    if recession || vertices.len() > 1 {
        return ShiftOutcome::PositiveDim;
    }
    let r = vertices[0];
    let scale = rat_from_int(&r[n]) * rat_from_int(&d);
    let point: Vec<Rat> = r[..n].iter().map(|x| rat_from_int(x) / &scale).collect();
    let shifted: Vec<Rat> = point.iter().zip(v).map(|(p, x)| p - x).collect();
    let interior = a.contains_relint(&point) && b.contains_relint(&shifted);
    ShiftOutcome::Point { point, interior }
}

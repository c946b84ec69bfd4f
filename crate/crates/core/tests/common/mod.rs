#![allow(dead_code)]

//! Fixtures and brute-force oracles shared by the integration tests.

use std::collections::HashSet;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use tropical_toric::exactlinalg::{rat, ExactMatrix, LatticeVector, Rat};
use tropical_toric::polyhedra::Fan;
use tropical_toric::toric::ToricVariety;

pub fn fan(rays: &[&[i64]], cones: &[&[usize]]) -> Fan {
    let n = rays.first().map_or(0, |r| r.len());
    Fan::new(n, rays.iter().map(|r| LatticeVector::from_i64(r)).collect(), cones.iter().map(|c| c.to_vec()).collect())
        .unwrap()
}

pub fn variety(rays: &[&[i64]], cones: &[&[usize]]) -> Arc<ToricVariety> {
    ToricVariety::new(fan(rays, cones)).unwrap()
}

pub fn pn(n: usize) -> Arc<ToricVariety> {
    ToricVariety::projective_space(n).unwrap()
}

pub fn product(a: &Arc<ToricVariety>, b: &Arc<ToricVariety>) -> Arc<ToricVariety> {
    ToricVariety::cartesian_product(a, b).unwrap()
}

pub fn blowup() -> Arc<ToricVariety> {
    variety(&[&[1, 0], &[1, 1], &[0, 1], &[-1, -1]], &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]])
}

/// The Hirzebruch surface `F_a`.
pub fn hirzebruch(a: i64) -> Arc<ToricVariety> {
    variety(&[&[1, 0], &[0, 1], &[-1, a], &[0, -1]], &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]])
}

/// The weighted projective plane `P(1,1,2)`, simplicial but not smooth.
pub fn p112() -> Arc<ToricVariety> {
    variety(&[&[1, 0], &[0, 1], &[-1, -2]], &[&[0, 1], &[1, 2], &[2, 0]])
}

pub fn complete_surfaces() -> Vec<(&'static str, Arc<ToricVariety>)> {
    vec![
        ("P2", pn(2)),
        ("P1xP1", product(&pn(1), &pn(1))),
        ("blowup", blowup()),
        ("F2", hirzebruch(2)),
        ("P112", p112()),
    ]
}

pub fn rats(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat(x)).collect()
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0i128;
    for j in 0..n {
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
            .collect();
        let term = m[0][j] as i128 * cofactor_det(&minor);
        total += if j % 2 == 0 { term } else { -term };
    }
    total
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Convex hull of lattice points, counterclockwise (monotone chain).
pub fn hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut p: Vec<(i64, i64)> = points.to_vec();
    p.sort();
    p.dedup();
    if p.len() < 3 {
        return p;
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &q in &p {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], q) <= 0 {
            lower.pop();
        }
        lower.push(q);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &q in p.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], q) <= 0 {
            upper.pop();
        }
        upper.push(q);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Twice the area of the convex hull, by the shoelace formula.
pub fn double_area(points: &[(i64, i64)]) -> i64 {
    let h = hull(points);
    let n = h.len();
    if n < 3 {
        return 0;
    }
    (0..n).map(|i| h[i].0 * h[(i + 1) % n].1 - h[(i + 1) % n].0 * h[i].1).sum::<i64>().abs()
}

/// Mixed volume of two lattice polygons, `area(P+Q) - area(P) - area(Q)`.
pub fn mixed_volume(p: &[(i64, i64)], q: &[(i64, i64)]) -> i64 {
    let sum: Vec<(i64, i64)> = p.iter().flat_map(|a| q.iter().map(move |b| (a.0 + b.0, a.1 + b.1))).collect();
    let twice = double_area(&sum) - double_area(p) - double_area(q);
    assert!(twice % 2 == 0);
    twice / 2
}

/// Whether `point` is a nonnegative combination of `generators`, decided by
/// eliminating the equations `G λ = p` and then Fourier–Motzkin on `λ ≥ 0`.
pub fn fm_contains(point: &[Rat], generators: &[Vec<Rat>]) -> bool {
    let g = generators.len();
    // rows are [coeffs of λ | rhs] meaning Σ a_j λ_j = b
    let mut eqs: Vec<Vec<Rat>> = (0..point.len())
        .map(|i| {
            let mut row: Vec<Rat> = generators.iter().map(|v| v[i].clone()).collect();
            row.push(point[i].clone());
            row
        })
        .collect();
    // inequalities [a | b] meaning Σ a_j λ_j >= b
    let mut ineqs: Vec<Vec<Rat>> = (0..g)
        .map(|j| {
            let mut row = vec![Rat::zero(); g + 1];
            row[j] = rat(1);
            row
        })
        .collect();
    let mut eliminated = vec![false; g];
    while let Some(eq) = eqs.pop() {
        let Some(j) = (0..g).find(|&j| !eq[j].is_zero()) else {
            if !eq[g].is_zero() {
                return false;
            }
            continue;
        };
        eliminated[j] = true;
        let sub = |row: &mut Vec<Rat>| {
            if row[j].is_zero() {
                return;
            }
            let f = &row[j] / &eq[j];
            for k in 0..=g {
                let v = &eq[k] * &f;
                row[k] -= v;
            }
        };
        eqs.iter_mut().for_each(sub);
        ineqs.iter_mut().for_each(sub);
    }
    for j in 0..g {
        if eliminated[j] {
            continue;
        }
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in ineqs {
            if r[j].is_positive() {
                pos.push(r);
            } else if r[j].is_negative() {
                neg.push(r);
            } else {
                rest.push(r);
            }
        }
        let mut seen: HashSet<Vec<Rat>> = rest.iter().cloned().collect();
        for p in &pos {
            for n in &neg {
                let (a, b) = (-&n[j], p[j].clone());
                let mut row: Vec<Rat> = (0..=g).map(|k| &p[k] * &a + &n[k] * &b).collect();
                let scale = row.iter().find(|x| !x.is_zero()).map(|x| x.abs());
                if let Some(s) = scale {
                    row.iter_mut().for_each(|x| *x /= &s);
                }
                if seen.insert(row.clone()) {
                    rest.push(row);
                }
            }
        }
        ineqs = rest;
    }
    // only constant rows 0 >= b remain
    ineqs.iter().all(|r| !r[g].is_positive())
}

/// Connected simple graphs on vertices `0..n` using every vertex, with at
/// most `max_edges` edges, one per isomorphism class.
pub fn connected_graphs(max_edges: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for n in 2..=max_edges + 1 {
        let all: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let perms = permutations(n);
        let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::new();
        for mask in 0u32..(1 << all.len()) {
            let k = mask.count_ones() as usize;
            if k + 1 < n || k > max_edges {
                continue;
            }
            let edges: Vec<(usize, usize)> = (0..all.len()).filter(|&i| mask >> i & 1 == 1).map(|i| all[i]).collect();
            if !is_connected(n, &edges) {
                continue;
            }
            let canon = perms
                .iter()
                .map(|p| {
                    let mut e: Vec<(usize, usize)> =
                        edges.iter().map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b]))).collect();
                    e.sort();
                    e
                })
                .min()
                .unwrap();
            if seen.insert(canon) {
                out.push(edges);
            }
        }
    }
    out
}

pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut reached = vec![false; n];
    let mut stack = vec![0];
    reached[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !reached[y] {
                    reached[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    reached.into_iter().all(|r| r)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Rank of a subset of columns, computed independently of the matroid code.
pub fn column_rank(a: &ExactMatrix, cols: &[usize]) -> usize {
    let rows: Vec<Vec<Rat>> = (0..a.rows()).map(|i| cols.iter().map(|&j| a.get(i, j).clone()).collect()).collect();
    tropical_toric::exactlinalg::rank(&rows, cols.len())
}

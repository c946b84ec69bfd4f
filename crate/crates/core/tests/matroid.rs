mod common;

use std::collections::BTreeSet;

use common::*;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use tropical_toric::exactlinalg::{int, ExactMatrix, Int};
use tropical_toric::matroid::{chromatic_polynomial, nested_set_fan, BuildingSet, Matroid, Polynomial, Subset};
use tropical_toric::tropical::BalanceReport;
use tropical_toric::Error;

fn realizable() -> impl Strategy<Value = ExactMatrix> {
    (2usize..=3, 3usize..=7)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-2i64..=2, r), c))
        .prop_filter_map("zero column", |cols| {
            if cols.iter().any(|c| c.iter().all(|&x| x == 0)) {
                return None;
            }
            let rows: Vec<Vec<i64>> = (0..cols[0].len()).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            Some(ExactMatrix::from_i64(&refs))
        })
}

/// Flats found by brute force: sets to which no element can be added
/// without raising the rank.
fn brute_force_flats(m: &Matroid) -> BTreeSet<Subset> {
    let n = m.ground_size();
    (0..1u64 << n).filter(|&s| (0..n).all(|e| s >> e & 1 == 1 || m.rank_of(s | 1 << e) > m.rank_of(s))).collect()
}

fn signed_incidence(edges: &[(usize, usize)], vertices: usize) -> ExactMatrix {
    let rows: Vec<Vec<i64>> = (0..vertices)
        .map(|v| {
            edges
                .iter()
                .map(|&(a, b)| {
                    if v == a {
                        1
                    } else if v == b {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    ExactMatrix::from_i64(&refs)
}

/// Proper colorings of a graph with `q` colors, counted one by one.
fn count_colorings(vertices: usize, edges: &[(usize, usize)], q: usize) -> i64 {
    let mut count = 0;
    let mut colors = vec![0usize; vertices];
    loop {
        if edges.iter().all(|&(a, b)| colors[a] != colors[b]) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == vertices {
                return count;
            }
            colors[i] += 1;
            if colors[i] < q {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

fn check_lattice(m: &Matroid) -> Result<(), TestCaseError> {
    let l = m.flat_lattice().unwrap();
    let sets: BTreeSet<Subset> = l.flats.iter().map(|f| f.set).collect();
    prop_assert_eq!(&sets, &brute_force_flats(m));
    prop_assert_eq!(l.of_rank(0).len(), 1);
    prop_assert_eq!(l.of_rank(0)[0].set, 0);
    prop_assert_eq!(l.of_rank(m.rank()).len(), 1);
    prop_assert_eq!(l.of_rank(m.rank())[0].set, m.full());
    for (f, mu) in l.flats.iter().zip(&l.mobius) {
        prop_assert_eq!(f.rank, m.rank_of(f.set));
        let expected_sign = if f.rank % 2 == 0 { 1 } else { -1 };
        prop_assert!(!mu.is_zero() && (mu.is_positive() == (expected_sign == 1)), "mu {} at rank {}", mu, f.rank);
        if f.set != 0 {
            let total: Int =
                l.flats.iter().zip(&l.mobius).filter(|(g, _)| g.set & f.set == g.set).map(|(_, m)| m.clone()).sum();
            prop_assert!(total.is_zero());
        }
    }
    let chi = m.characteristic_polynomial().unwrap();
    prop_assert!(chi.eval(&int(1)).is_zero());
    let reduced = m.reduced_characteristic_polynomial().unwrap();
    prop_assert_eq!(reduced.mul(&Polynomial::from_i64(&[-1, 1])), chi);
    Ok(())
}

proptest! {
    #[test]
    fn rank_axioms(a in realizable()) {
        let m = Matroid::from_matrix(&a).unwrap();
        let n = m.ground_size();
        for s in 0..1u64 << n {
            let r = m.rank_of(s);
            prop_assert!(r <= s.count_ones() as usize);
            for e in 0..n {
                prop_assert!(m.rank_of(s | 1 << e) >= r);
                prop_assert!(m.rank_of(s | 1 << e) <= r + 1);
            }
            let t = s.rotate_left(1) & m.full();
            prop_assert!(m.rank_of(s | t) + m.rank_of(s & t) <= r + m.rank_of(t));
        }
    }

    #[test]
    fn lattices_of_realizable_matroids(a in realizable()) {
        check_lattice(&Matroid::from_matrix(&a).unwrap())?;
    }

    #[test]
    fn bergman_fans_are_balanced(a in realizable()) {
        let m = Matroid::from_matrix(&a).unwrap();
        for b in [BuildingSet::Maximal, BuildingSet::Minimal] {
            // the minimal building set needs a connected matroid
            let t = match nested_set_fan(&m, b, 0) {
                Err(Error::Disconnected) if b == BuildingSet::Minimal && !m.is_connected() => continue,
                t => t.unwrap(),
            };
            prop_assert!(matches!(t.check_balancing(), BalanceReport::Balanced));
            prop_assert!(t.weights().iter().all(|w| *w == int(1)));
        }
    }

    #[test]
    fn graphs_and_incidence_matrices_agree(edges in prop::collection::vec((0usize..5, 0usize..5), 1..=7)) {
        let edges: Vec<(usize, usize)> = edges.into_iter().filter(|(a, b)| a != b).collect();
        prop_assume!(!edges.is_empty());
        let g = Matroid::from_graph(&edges).unwrap();
        let a = Matroid::from_matrix(&signed_incidence(&edges, 5)).unwrap();
        for s in 0..1u64 << edges.len() {
            prop_assert_eq!(g.rank_of(s), a.rank_of(s));
        }
    }
}

#[test]
fn lattices_of_graphs() {
    for edges in connected_graphs(5) {
        check_lattice(&Matroid::from_graph(&edges).unwrap()).unwrap();
    }
}

#[test]
fn chromatic_is_q_times_characteristic() {
    let q = Polynomial::monomial(1);
    let graphs = connected_graphs(5);
    assert_eq!(graphs.len(), 1 + 1 + 3 + 5 + 12);
    for edges in &graphs {
        let chi = Matroid::from_graph(edges).unwrap().characteristic_polynomial().unwrap();
        assert_eq!(chromatic_polynomial(edges), q.mul(&chi), "{edges:?}");
    }
}

#[test]
fn chromatic_counts_colorings() {
    for edges in connected_graphs(5) {
        let vertices = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap();
        let p = chromatic_polynomial(&edges);
        for q in 1..=4 {
            assert_eq!(p.eval(&int(q as i64)), int(count_colorings(vertices, &edges, q)), "{edges:?} at {q}");
        }
    }
}

#[test]
fn the_house_graph() {
    // a square with one diagonal, as a graph and as a matrix
    let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)];
    let a = ExactMatrix::from_i64(&[&[1, 0, 0, 1, 1], &[0, 1, 0, -1, 0], &[0, 0, 1, 0, -1]]);
    let (g, m) = (Matroid::from_graph(&edges).unwrap(), Matroid::from_matrix(&a).unwrap());
    // edge e of the graph corresponds to column perm[e]
    let perm = [1, 0, 2, 3, 4];
    for s in 0..32u64 {
        let t = (0..5).filter(|&e| s >> e & 1 == 1).fold(0u64, |acc, e| acc | 1 << perm[e]);
        assert_eq!(g.rank_of(s), m.rank_of(t), "{s:05b}");
    }
    assert_eq!(chromatic_polynomial(&edges), Polynomial::from_i64(&[0, -4, 8, -5, 1]));
    assert_eq!(m.reduced_characteristic_polynomial().unwrap(), Polynomial::from_i64(&[4, -4, 1]));
}

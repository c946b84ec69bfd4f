mod common;

use std::sync::Arc;

use common::*;
use num_traits::Zero;
use proptest::prelude::*;
use tropical_toric::exactlinalg::{lattice_index, rat, Int, Rat};
use tropical_toric::toric::{ToricCycle, ToricDivisor, ToricVariety};

fn test_varieties() -> Vec<Arc<ToricVariety>> {
    let p1 = pn(1);
    let mut v: Vec<Arc<ToricVariety>> = complete_surfaces().into_iter().map(|(_, x)| x).collect();
    v.extend([pn(3), product(&pn(2), &p1), product(&product(&p1, &p1), &p1)]);
    v
}

fn smooth_surfaces() -> Vec<Arc<ToricVariety>> {
    vec![pn(2), product(&pn(1), &pn(1)), blowup()]
}

fn divisor(x: &Arc<ToricVariety>, c: &[i64]) -> ToricDivisor {
    ToricDivisor::new(x.clone(), c[..x.num_rays()].iter().map(|&v| rat(v)).collect()).unwrap()
}

fn fundamental(x: &Arc<ToricVariety>) -> ToricCycle {
    ToricCycle::orbit(x.clone(), &[]).unwrap()
}

fn deg(d: &ToricDivisor, z: &ToricCycle) -> Rat {
    d.times(z).unwrap().degree().unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 10)
}

proptest! {
    #[test]
    fn products_commute(which in 0usize..3, d in coeffs(), e in coeffs()) {
        let x = &smooth_surfaces()[which];
        let (d, e) = (divisor(x, &d), divisor(x, &e));
        let one = fundamental(x);
        let de = d.times(&e.times(&one).unwrap()).unwrap().degree().unwrap();
        let ed = e.times(&d.times(&one).unwrap()).unwrap().degree().unwrap();
        prop_assert_eq!(de, ed);
    }

    #[test]
    fn degrees_see_only_linear_equivalence_classes(
        which in 0usize..8,
        d in coeffs(),
        m in prop::collection::vec(-4i64..=4, 3),
    ) {
        let x = &test_varieties()[which];
        let n = x.dim();
        let d = divisor(x, &d);
        let moved = d.add(&x.principal_divisor(&rats(&m[..n]))).unwrap();
        for tau in x.cones_of_codim(n - 1) {
            let z = ToricCycle::orbit(x.clone(), &tau).unwrap();
            prop_assert_eq!(deg(&d, &z), deg(&moved, &z));
        }
        for r in x.linear_relations() {
            for tau in x.cones_of_codim(n - 1) {
                prop_assert!(deg(&r, &ToricCycle::orbit(x.clone(), &tau).unwrap()).is_zero());
            }
        }
    }

    #[test]
    fn moving_keeps_every_pairing(which in 0usize..8, d in coeffs(), pick in any::<prop::sample::Index>()) {
        let x = &test_varieties()[which];
        let n = x.dim();
        let d = divisor(x, &d);
        let cones: Vec<Vec<usize>> = (1..=n).flat_map(|k| x.cones_of_codim(k)).collect();
        let sigma = pick.get(&cones);
        let t = d.make_transverse(sigma).unwrap();
        for &r in sigma {
            prop_assert!(t.coefficients()[r].is_zero());
        }
        for tau in x.cones_of_codim(n - 1) {
            let z = ToricCycle::orbit(x.clone(), &tau).unwrap();
            prop_assert_eq!(deg(&d, &z), deg(&t, &z));
        }
    }
}

#[test]
fn flags_follow_the_fan() {
    for x in test_varieties() {
        assert_eq!(x.is_complete(), x.fan().is_complete().unwrap());
        assert_eq!(x.is_simplicial(), x.fan().is_simplicial().unwrap());
        let unimodular = x.fan().maximal_cones().iter().all(|c| {
            let rays: Vec<_> = c.iter().map(|&i| x.fan().rays()[i].clone()).collect();
            lattice_index(&rays, rays.len()).map_or(false, |i| i == Int::from(1))
        });
        assert_eq!(x.is_smooth(), unimodular);
        assert_eq!(x.linear_relations().len(), x.dim());
    }
    assert!(!p112().is_smooth());
    assert!(hirzebruch(2).is_smooth());
}

#[test]
fn blowup_intersection_numbers() {
    let x = blowup();
    let e = ToricDivisor::prime(x.clone(), 1).unwrap();
    let v1 = ToricCycle::orbit(x.clone(), &[1]).unwrap();
    assert_eq!(e.times(&v1).unwrap(), ToricCycle::orbit(x.clone(), &[1, 2]).unwrap().scale(&rat(-1)));
    let h = ToricDivisor::prime(x.clone(), 3).unwrap();
    let one = fundamental(&x);
    assert_eq!(h.times(&h.times(&one).unwrap()).unwrap().degree().unwrap(), rat(1));
    assert_eq!(e.times(&h.times(&one).unwrap()).unwrap().degree().unwrap(), rat(0));
}

#[test]
fn cycles_drop_zero_terms() {
    let x = pn(2);
    let z = ToricCycle::new(x.clone(), 1, [(vec![0], rat(1)), (vec![1], rat(2)), (vec![0], rat(-1))]).unwrap();
    assert_eq!(z.terms().len(), 1);
    assert!(ToricCycle::new(x.clone(), 2, [(vec![0], rat(1))]).is_err());
    assert!(ToricDivisor::new(x, vec![rat(1); 4]).is_err());
}

#[test]
fn weighted_plane_has_fractional_points() {
    let x = p112();
    // V(ρ_2) is the line through the singular point
    let d2 = ToricDivisor::prime(x.clone(), 2).unwrap();
    let z = ToricCycle::orbit(x.clone(), &[2]).unwrap();
    assert_eq!(deg(&d2, &z), Rat::new(1.into(), 2.into()));
}

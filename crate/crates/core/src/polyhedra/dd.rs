//! Double description over the integers.
//!
//! Constraints are processed one at a time starting from the whole space.
//! Lineality directions that a constraint does not vanish on are used to
//! project everything else onto the hyperplane; otherwise rays are split by
//! sign and adjacent pairs are combined. Adjacency is decided combinatorially
//! from the zero sets of the inequalities processed so far.

use num_traits::{Signed, Zero};

use crate::exactlinalg::{dot_int, gcd_all, Int};

#[derive(Clone, Debug, Default)]
pub(crate) struct Generators {
    pub rays: Vec<Vec<Int>>,
    pub lineality: Vec<Vec<Int>>,
}

fn make_primitive(mut v: Vec<Int>) -> Vec<Int> {
    let g = gcd_all(&v);
    if !g.is_zero() && g != Int::from(1) {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

/// `s * x - t * l`
fn combine(s: &Int, x: &[Int], t: &Int, l: &[Int]) -> Vec<Int> {
    make_primitive(x.iter().zip(l).map(|(a, b)| s * a - t * b).collect())
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn contains(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & b == *b)
    }
}

/// Generators of `{x : A x >= 0, E x = 0}` in `R^n`. Rays are extremal
/// modulo the lineality space and primitive.
pub(crate) fn double_description(n: usize, inequalities: &[Vec<Int>], equations: &[Vec<Int>]) -> Generators {
    let mut lin: Vec<Vec<Int>> = (0..n).map(|i| (0..n).map(|j| Int::from((i == j) as i64)).collect()).collect();
    let mut rays: Vec<Vec<Int>> = Vec::new();
    // zero sets of the rays over processed inequalities
    let mut zeros: Vec<Bits> = Vec::new();
    let mut processed = 0usize;
    let cap = inequalities.len();

    let constraints = equations.iter().map(|e| (e, true)).chain(inequalities.iter().map(|a| (a, false)));
    for (a, is_eq) in constraints {
        if a.iter().all(Zero::is_zero) {
            continue;
        }
        if let Some(k) = lin.iter().position(|l| !dot_int(a, l).is_zero()) {
            let mut l = lin.remove(k);
            let mut s = dot_int(a, &l);
            if s.is_negative() {
                l = l.into_iter().map(|x| -x).collect();
                s = -s;
            }
            for x in lin.iter_mut() {
                let t = dot_int(a, x);
                if !t.is_zero() {
                    *x = combine(&s, x, &t, &l);
                }
            }
            for (x, z) in rays.iter_mut().zip(zeros.iter_mut()) {
                let t = dot_int(a, x);
                if !t.is_zero() {
                    *x = combine(&s, x, &t, &l);
                }
                if !is_eq {
                    z.set(processed);
                }
            }
            if !is_eq {
                rays.push(make_primitive(l));
                // lineality vectors vanish on every earlier inequality
                let mut z = Bits::new(cap);
                for i in 0..processed {
                    z.set(i);
                }
                zeros.push(z);
                processed += 1;
            }
            continue;
        }

        let vals: Vec<Int> = rays.iter().map(|r| dot_int(a, r)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let mut new_rays = Vec::new();
        let mut new_zeros = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = zeros[p].and(&zeros[q]);
                let adjacent = (0..rays.len()).all(|r| r == p || r == q || !zeros[r].contains(&common));
                if !adjacent {
                    continue;
                }
                let v = combine(&vals[p], &rays[q], &vals[q], &rays[p]);
                let mut z = common;
                if !is_eq {
                    z.set(processed);
                }
                new_rays.push(v);
                new_zeros.push(z);
            }
        }
        let mut kept_rays = Vec::new();
        let mut kept_zeros = Vec::new();
        for (i, (r, mut z)) in rays.into_iter().zip(zeros).enumerate() {
            if vals[i].is_zero() {
                if !is_eq {
                    z.set(processed);
                }
                kept_rays.push(r);
                kept_zeros.push(z);
            } else if vals[i].is_positive() && !is_eq {
                kept_rays.push(r);
                kept_zeros.push(z);
            }
        }
        kept_rays.extend(new_rays);
        kept_zeros.extend(new_zeros);
        rays = kept_rays;
        zeros = kept_zeros;
        if !is_eq {
            processed += 1;
        }
    }
    Generators { rays, lineality: lin }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn quadrant() {
        let g = double_description(2, &[iv(&[1, 0]), iv(&[0, 1])], &[]);
        assert!(g.lineality.is_empty());
        let mut r = g.rays.clone();
        r.sort();
        assert_eq!(r, vec![iv(&[0, 1]), iv(&[1, 0])]);
    }

    #[test]
    fn half_plane_and_line() {
        let g = double_description(2, &[iv(&[1, 0])], &[]);
        assert_eq!(g.rays, vec![iv(&[1, 0])]);
        assert_eq!(g.lineality.len(), 1);

        let g = double_description(3, &[], &[iv(&[1, 1, 1])]);
        assert!(g.rays.is_empty());
        assert_eq!(g.lineality.len(), 2);
    }

    #[test]
    fn cube_cone_has_four_rays() {
        // cone over a square: |x| <= z, |y| <= z
        let g = double_description(3, &[iv(&[1, 0, 1]), iv(&[-1, 0, 1]), iv(&[0, 1, 1]), iv(&[0, -1, 1])], &[]);
        let mut r = g.rays.clone();
        r.sort();
        assert_eq!(r, vec![iv(&[-1, -1, 1]), iv(&[-1, 1, 1]), iv(&[1, -1, 1]), iv(&[1, 1, 1])]);
    }

    #[test]
    fn empty_interior() {
        let g = double_description(2, &[iv(&[1, 0]), iv(&[-1, 0]), iv(&[0, 1]), iv(&[0, -1])], &[]);
        assert!(g.rays.is_empty() && g.lineality.is_empty());
    }
}

//! Realizable matroids: rank oracles, flats, Möbius values and
//! characteristic polynomials.
//!
//! Subsets of the ground set are `u64` bitmasks, so the ground set has at
//! most 64 elements. Everything else here is exponential long before that.

mod bergman;
mod graph;
mod poly;

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlinalg::{rank, ExactMatrix, Int, Rat};

pub use bergman::{bergman_fan, nested_set_fan, BuildingSet};
pub use graph::chromatic_polynomial;
pub use poly::Polynomial;

pub type Subset = u64;

pub fn subset_of(elements: &[usize]) -> Subset {
    elements.iter().fold(0, |m, &e| m | (1 << e))
}

pub fn elements_of(s: Subset) -> Vec<usize> {
    (0..64).filter(|&i| s & (1 << i) != 0).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Oracle {
    /// Columns of a realizing matrix.
    Columns(Vec<Vec<Rat>>, usize),
    /// Edges of a multigraph on vertices `0..vertices`.
    Graph(usize, Vec<(usize, usize)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    ground: usize,
    rank: usize,
    oracle: Oracle,
}

impl Matroid {
    /// The column matroid of `a`.
    pub fn from_matrix(a: &ExactMatrix) -> Result<Matroid> {
        if a.cols() > 64 {
            return Err(Error::Invalid("at most 64 columns are supported".into()));
        }
        let cols: Vec<Vec<Rat>> = (0..a.cols()).map(|j| a.column(j)).collect();
        let mut m = Matroid { ground: a.cols(), rank: 0, oracle: Oracle::Columns(cols, a.rows()) };
        m.rank = m.rank_of(m.full());
        Ok(m)
    }

    /// The cycle matroid of a multigraph given by its edges. Vertex labels are
    /// arbitrary; a self-loop is a loop of the matroid.
    pub fn from_graph(edges: &[(usize, usize)]) -> Result<Matroid> {
        if edges.len() > 64 {
            return Err(Error::Invalid("at most 64 edges are supported".into()));
        }
        let (vertices, relabeled) = relabel_vertices(edges);
        let mut m = Matroid { ground: edges.len(), rank: 0, oracle: Oracle::Graph(vertices, relabeled) };
        m.rank = m.rank_of(m.full());
        Ok(m)
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn full(&self) -> Subset {
        if self.ground == 64 {
            u64::MAX
        } else {
            (1u64 << self.ground) - 1
        }
    }

    pub fn rank_of(&self, s: Subset) -> usize {
        match &self.oracle {
            Oracle::Columns(cols, rows) => {
                let sel: Vec<Vec<Rat>> = elements_of(s).into_iter().map(|j| cols[j].clone()).collect();
                rank(&sel, *rows)
            }
            Oracle::Graph(vertices, edges) => {
                let mut parent: Vec<usize> = (0..*vertices).collect();
                fn find(p: &mut [usize], x: usize) -> usize {
                    let mut r = x;
                    while p[r] != r {
                        r = p[r];
                    }
                    p[x] = r;
                    r
                }
                let mut r = 0;
                for e in elements_of(s) {
                    let (a, b) = edges[e];
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        parent[ra] = rb;
                        r += 1;
                    }
                }
                r
            }
        }
    }

    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank_of(s);
        (0..self.ground).filter(|&e| s & (1 << e) != 0 || self.rank_of(s | (1 << e)) == r).fold(0, |m, e| m | (1 << e))
    }

    pub fn loops(&self) -> Vec<usize> {
        elements_of(self.closure(0))
    }

    pub(crate) fn require_loopless(&self) -> Result<()> {
        match self.loops().first() {
            Some(&e) => Err(Error::Loop(e)),
            None => Ok(()),
        }
    }

    /// Whether `flat` cannot be split into two parts whose ranks add up.
    pub fn is_connected_set(&self, flat: Subset) -> bool {
        if flat == 0 {
            return false;
        }
        let r = self.rank_of(flat);
        let low = flat & flat.wrapping_neg();
        let rest = flat & !low;
        // enumerate subsets containing the lowest element
        let mut sub = rest;
        loop {
            let part = sub | low;
            if part != flat && self.rank_of(part) + self.rank_of(flat & !part) == r {
                return false;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.full())
    }

    pub fn flat_lattice(&self) -> Result<FlatLattice> {
        FlatLattice::new(self)
    }

    /// `Σ_F μ(∅,F) q^{r − r(F)}`.
    pub fn characteristic_polynomial(&self) -> Result<Polynomial> {
        let l = self.flat_lattice()?;
        let mut coeffs = vec![Int::zero(); self.rank + 1];
        for (f, mu) in l.flats.iter().zip(&l.mobius) {
            coeffs[self.rank - f.rank] += mu;
        }
        Ok(Polynomial::new(coeffs))
    }

    /// The characteristic polynomial divided by `q − 1`.
    pub fn reduced_characteristic_polynomial(&self) -> Result<Polynomial> {
        let chi = self.characteristic_polynomial()?;
        let (q, r) = chi.div_by_linear(&Int::from(1));
        if !r.is_zero() {
            return Err(Error::Inconsistent(format!("characteristic polynomial leaves remainder {r} at q = 1")));
        }
        Ok(q)
    }
}

fn relabel_vertices(edges: &[(usize, usize)]) -> (usize, Vec<(usize, usize)>) {
    let labels: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect::<BTreeSet<_>>().into_iter().collect();
    let idx = |v: usize| labels.binary_search(&v).expect("collected");
    (labels.len(), edges.iter().map(|&(a, b)| (idx(a), idx(b))).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    pub set: Subset,
    pub rank: usize,
}

impl Flat {
    pub fn elements(&self) -> Vec<usize> {
        elements_of(self.set)
    }
}

/// Flats ordered by rank, then lexicographically by their sorted elements.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    pub flats: Vec<Flat>,
    /// `covers[i]` lists the flats covering flat `i`.
    pub covers: Vec<Vec<usize>>,
    /// `μ(∅, F)` for each flat.
    pub mobius: Vec<Int>,
}

impl FlatLattice {
    fn new(m: &Matroid) -> Result<FlatLattice> {
        m.require_loopless()?;
        let mut by_rank: Vec<Vec<Subset>> = vec![vec![0]];
        for r in 0..m.rank {
            let mut next = BTreeSet::new();
            for &f in &by_rank[r] {
                for e in 0..m.ground {
                    if f & (1 << e) == 0 {
                        next.insert(m.closure(f | (1 << e)));
                    }
                }
            }
            let mut level: Vec<Subset> = next.into_iter().collect();
            level.sort_by_key(|&s| elements_of(s));
            by_rank.push(level);
        }
        let flats: Vec<Flat> = by_rank
            .iter()
            .enumerate()
            .flat_map(|(r, level)| level.iter().map(move |&set| Flat { set, rank: r }))
            .collect();
        let mut covers = vec![Vec::new(); flats.len()];
        for (i, f) in flats.iter().enumerate() {
            for (j, g) in flats.iter().enumerate() {
                if g.rank == f.rank + 1 && g.set & f.set == f.set {
                    covers[i].push(j);
                }
            }
        }
        let mut mobius: Vec<Int> = Vec::with_capacity(flats.len());
        for f in &flats {
            let mu = if f.set == 0 {
                Int::from(1)
            } else {
                -flats
                    .iter()
                    .zip(&mobius)
                    .filter(|(g, _)| g.set != f.set && g.set & f.set == g.set)
                    .fold(Int::zero(), |acc, (_, m)| acc + m)
            };
            mobius.push(mu);
        }
        Ok(FlatLattice { flats, covers, mobius })
    }

    pub fn of_rank(&self, r: usize) -> Vec<&Flat> {
        self.flats.iter().filter(|f| f.rank == r).collect()
    }

    pub fn join(&self, m: &Matroid, a: Subset, b: Subset) -> Subset {
        m.closure(a | b)
    }
}

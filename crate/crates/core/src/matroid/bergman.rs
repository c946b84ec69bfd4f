use std::cell::RefCell;
use std::collections::{HashMap, HashSet};

use num_traits::One;

use super::{FlatLattice, Matroid, Subset};
use crate::error::{Error, Result};
use crate::exactlinalg::{Int, LatticeVector};
use crate::polyhedra::Fan;
use crate::tropical::TropicalCycle;

/// Which flats index the rays of a nested-set fan.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BuildingSet {
    /// All nonempty flats; cones are chains.
    #[default]
    Maximal,
    /// Connected flats only; needs a connected matroid.
    Minimal,
}

/// The Bergman fan with cones indexed by chains of flats, rays
/// `e_F − (e_F)_h 𝟙` with coordinate `h` dropped, all weights one.
pub fn bergman_fan(m: &Matroid, dehomogenize: usize) -> Result<TropicalCycle> {
    nested_set_fan(m, BuildingSet::Maximal, dehomogenize)
}

pub fn nested_set_fan(m: &Matroid, building: BuildingSet, dehomogenize: usize) -> Result<TropicalCycle> {
    let n = m.ground_size();
    if dehomogenize >= n {
        return Err(Error::Invalid(format!("dehomogenization index {dehomogenize} outside a ground set of size {n}")));
    }
    let lattice = m.flat_lattice()?;
    if building == BuildingSet::Minimal && !m.is_connected() {
        return Err(Error::Disconnected);
    }
    let full = m.full();
    let building: HashSet<Subset> = lattice
        .flats
        .iter()
        .map(|f| f.set)
        .filter(|&s| match building {
            BuildingSet::Maximal => s != 0,
            BuildingSet::Minimal => s == full || m.is_connected_set(s),
        })
        .collect();
    let members: Vec<Subset> = proper_flats(&lattice, full).filter(|s| building.contains(s)).collect();
    let search = NestedSearch { m, members: &members, building: &building, closures: RefCell::new(HashMap::new()) };
    let mut cones = Vec::new();
    search.extend(m.rank() - 1, 0, &mut Vec::new(), &mut cones);

    let rays = members
        .iter()
        .map(|&f| {
            let base = (f >> dehomogenize) & 1;
            LatticeVector(
                (0..n).filter(|&i| i != dehomogenize).map(|i| Int::from(((f >> i) & 1) as i64 - base as i64)).collect(),
            )
        })
        .collect();
    let k = cones.len();
    TropicalCycle::new(Fan::new(n - 1, rays, cones)?, vec![Int::one(); k])
}

fn proper_flats(l: &FlatLattice, full: Subset) -> impl Iterator<Item = Subset> + '_ {
    l.flats.iter().map(|f| f.set).filter(move |&s| s != 0 && s != full)
}

fn comparable(a: Subset, b: Subset) -> bool {
    a & b == a || a & b == b
}

struct NestedSearch<'a> {
    m: &'a Matroid,
    members: &'a [Subset],
    building: &'a HashSet<Subset>,
    closures: RefCell<HashMap<Subset, Subset>>,
}

impl NestedSearch<'_> {
    fn closure(&self, s: Subset) -> Subset {
        if let Some(&c) = self.closures.borrow().get(&s) {
            return c;
        }
        let c = self.m.closure(s);
        self.closures.borrow_mut().insert(s, c);
        c
    }

    /// Depth-first search over nested sets with increasing member indices.
    fn extend(&self, depth: usize, start: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if stack.len() == depth {
            out.push(stack.clone());
            return;
        }
        for x in start..self.members.len() {
            if self.nested_with(stack, x) {
                stack.push(x);
                self.extend(depth, x + 1, stack, out);
                stack.pop();
            }
        }
    }

    /// Whether adding member `x` keeps the set nested: no antichain through
    /// `x` of size at least two has its join in the building set.
    fn nested_with(&self, s: &[usize], x: usize) -> bool {
        let fx = self.members[x];
        let others: Vec<Subset> = s.iter().map(|&i| self.members[i]).filter(|&f| !comparable(f, fx)).collect();
        for mask in 1u32..(1 << others.len()) {
            let chosen: Vec<Subset> = (0..others.len()).filter(|i| mask & (1 << i) != 0).map(|i| others[i]).collect();
            let antichain = chosen.iter().enumerate().all(|(i, a)| chosen[i + 1..].iter().all(|b| !comparable(*a, *b)));
            if antichain && self.building.contains(&self.closure(chosen.iter().fold(fx, |acc, f| acc | f))) {
                return false;
            }
        }
        true
    }
}

use num_traits::{One, Zero};

use super::class_from_tropical_cycle;
use crate::error::Result;
use crate::exactlinalg::{rat_from_int, Int, Rat};
use crate::matroid::{bergman_fan, Matroid, Polynomial};
use crate::toric::{ToricCycle, ToricVariety};
use crate::tropical::{pushforward, MonomialMap};

#[derive(Clone, Debug)]
pub struct HuhKatzReport {
    pub reduced: Polynomial,
    /// `a_i` with `χ̄(q) = Σ (−1)^i a_i q^{d−i}`.
    pub a: Vec<Int>,
    /// Coefficients of `[P^{d−i} × P^i]` in the class of the graph closure.
    pub class_coefficients: Vec<Rat>,
    pub class: Option<ToricCycle>,
    pub matches: bool,
    pub log_concave: bool,
}

/// Compares the class of the closure of the graph of the Cremona map on the
/// arrangement complement with the reduced characteristic polynomial.
pub fn huh_katz_check(m: &Matroid, seed: u64) -> Result<HuhKatzReport> {
    let reduced = m.reduced_characteristic_polynomial()?;
    let d = m.rank() - 1;
    let a: Vec<Int> = (0..=d)
        .map(|i| {
            let c = reduced.coefficient(d - i);
            if i % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    let log_concave = (1..d).all(|i| &a[i] * &a[i] >= &a[i - 1] * &a[i + 1]);

    let n = m.ground_size() - 1;
    let (class_coefficients, class) = if n == 0 {
        (vec![Rat::one()], None)
    } else {
        let t = pushforward(&MonomialMap::graph_of_inversion(n), &bergman_fan(m, 0)?)?;
        let pn = ToricVariety::projective_space(n)?;
        let x = ToricVariety::cartesian_product(&pn, &pn)?;
        let z = class_from_tropical_cycle(&x, &t, seed)?.cycle;
        let mut coeffs = vec![Rat::zero(); d + 1];
        for (tau, c) in z.terms() {
            let first = tau.iter().filter(|&&r| r <= n).count();
            // first = n − d + i
            coeffs[first + d - n] += c;
        }
        (coeffs, Some(z))
    };
    let matches = class_coefficients.iter().zip(&a).all(|(c, ai)| *c == rat_from_int(ai));
    Ok(HuhKatzReport { reduced, a, class_coefficients, class, matches, log_concave })
}

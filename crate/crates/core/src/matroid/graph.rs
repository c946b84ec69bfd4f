use super::poly::Polynomial;
use super::relabel_vertices;

/// Chromatic polynomial of a multigraph by deletion and contraction. The
/// vertex set is the set of endpoints.
pub fn chromatic_polynomial(edges: &[(usize, usize)]) -> Polynomial {
    let (n, e) = relabel_vertices(edges);
    chrom(n, e)
}

fn chrom(vertices: usize, mut edges: Vec<(usize, usize)>) -> Polynomial {
    if edges.iter().any(|&(a, b)| a == b) {
        return Polynomial::zero();
    }
    // parallel edges do not change the count
    for e in edges.iter_mut() {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
    edges.sort();
    edges.dedup();
    let Some(&(a, b)) = edges.last() else {
        return Polynomial::monomial(vertices);
    };
    edges.pop();
    let deleted = chrom(vertices, edges.clone());
    // contract b into a, then move the last vertex into slot b
    let last = vertices - 1;
    let rename = |v: usize| {
        let v = if v == b { a } else { v };
        if v == last {
            b
        } else {
            v
        }
    };
    let contracted: Vec<(usize, usize)> = edges.iter().map(|&(x, y)| (rename(x), rename(y))).collect();
    deleted.sub(&chrom(vertices - 1, contracted))
}

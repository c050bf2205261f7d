//! 1-cocycles and 1-coboundaries of `g` with values in `Lambda^2 g`.

use crate::bialg::{coboundary_from_r, cocycle_residual, Cobracket, RMatrix};
use crate::exactnum::{Mat, Rat};
use crate::liealg::{basis_vector, invariant_wedges, wedge_dim, LieAlgebra};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    pub dim_invariants: usize,
    pub dim_coboundaries: usize,
    pub dim_cocycles: usize,
    pub dim_h1: usize,
    pub cocycle_basis: Vec<Cobracket>,
}

/// Matrix of the linear map `d -> cocycle residual`, in flat coordinates.
fn cocycle_system(g: &LieAlgebra) -> Mat {
    let n = g.dim();
    let unknowns = n * wedge_dim(n);
    let cols: Vec<Vec<Rat>> = (0..unknowns)
        .map(|k| {
            let d = Cobracket::from_flat(n, &basis_vector(unknowns, k)).expect("flat length");
            cocycle_residual(g, &d)
                .expect("shape matches")
                .into_iter()
                .flatten()
                .collect()
        })
        .collect();
    if cols.is_empty() || cols[0].is_empty() {
        return Mat::zeros(0, unknowns);
    }
    Mat::from_columns(&cols).expect("uniform residual length")
}

/// Basis of the space of 1-cocycles.
pub fn cocycle_space(g: &LieAlgebra) -> Vec<Cobracket> {
    let n = g.dim();
    let unknowns = n * wedge_dim(n);
    let system = cocycle_system(g);
    let kernel = if system.rows() == 0 {
        (0..unknowns).map(|k| basis_vector(unknowns, k)).collect()
    } else {
        system.nullspace_basis()
    };
    kernel
        .iter()
        .map(|v| Cobracket::from_flat(n, v).expect("flat length"))
        .collect()
}

/// Basis of the coboundaries `ad(r)`, each returned with an `r` realizing it.
pub fn coboundary_space(g: &LieAlgebra) -> Vec<(RMatrix, Cobracket)> {
    let n = g.dim();
    let big_n = wedge_dim(n);
    let all: Vec<(RMatrix, Cobracket)> = (0..big_n)
        .map(|p| {
            let r = RMatrix {
                coords: basis_vector(big_n, p),
            };
            let d = coboundary_from_r(g, &r).expect("shape matches");
            (r, d)
        })
        .collect();
    if all.is_empty() {
        return all;
    }
    let cols: Vec<Vec<Rat>> = all.iter().map(|(_, d)| d.to_flat()).collect();
    let (_, pivots) = Mat::from_columns(&cols).expect("uniform").rref();
    all.into_iter()
        .enumerate()
        .filter(|(i, _)| pivots.contains(i))
        .map(|(_, pair)| pair)
        .collect()
}

pub fn h1_report(g: &LieAlgebra) -> CohomologyReport {
    let cocycles = cocycle_space(g);
    let dim_invariants = invariant_wedges(g).len();
    let dim_coboundaries = coboundary_space(g).len();
    CohomologyReport {
        dim_invariants,
        dim_coboundaries,
        dim_cocycles: cocycles.len(),
        dim_h1: cocycles.len() - dim_coboundaries,
        cocycle_basis: cocycles,
    }
}

//! Identifying the isomorphism type of a Lie algebra of dimension 2 or 3.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{in_span, int, rational_sqrt, sym_signature, Mat, Rat};
use crate::liealg::{
    basis_vector, center, derived_subalgebra, is_lie_algebra, killing_form, CatalogLabel, Family,
    LieAlgebra,
};

/// Outcome of recognition: either a catalog label, or the family together with
/// exact invariants when the parameter itself would be irrational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognized {
    Label(CatalogLabel),
    Irrational {
        family: Family,
        invariants: BTreeMap<String, Rat>,
    },
}

/// Catalog label of `g`. A stored label is returned as is.
pub fn recognize(g: &LieAlgebra) -> Result<CatalogLabel> {
    if let Some(l) = g.label() {
        return Ok(l.clone());
    }
    match recognize_invariants(g)? {
        Recognized::Label(l) => Ok(l),
        Recognized::Irrational { family, invariants } => {
            let detail = invariants
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(", ");
            Err(Error::NeedsCanonicalBasis(format!(
                "{} with irrational parameter ({detail})",
                family.name()
            )))
        }
    }
}

/// Recognition from brackets alone, ignoring any stored label.
pub fn recognize_invariants(g: &LieAlgebra) -> Result<Recognized> {
    if !is_lie_algebra(g) {
        return Err(Error::NotJacobi);
    }
    let n = g.dim();
    let derived = derived_subalgebra(g);
    let plain = |f| Ok(Recognized::Label(CatalogLabel::plain(f)));
    match (n, derived.len()) {
        (2, 0) => plain(Family::Abelian2),
        (2, _) => plain(Family::Aff2),
        (3, 0) => plain(Family::Abelian3),
        (3, 1) => {
            let z = center(g);
            if in_span(&z, &derived[0]) {
                plain(Family::H3)
            } else {
                Ok(Recognized::Label(CatalogLabel::r3_lambda(int(0))?))
            }
        }
        (3, 2) => recognize_solvable(g, &derived),
        (3, _) => match sym_signature(&killing_form(g))? {
            (0, 3) => plain(Family::Su2),
            (2, 1) => plain(Family::Sl2R),
            sig => Err(Error::Unsupported(format!(
                "simple algebra with Killing signature {sig:?}"
            ))),
        },
        _ => Err(Error::Unsupported(format!("dimension {n}"))),
    }
}

/// `[g,g]` is 2-dimensional and abelian; read off `ad_z` on it for `z` outside.
fn recognize_solvable(g: &LieAlgebra, derived: &[Vec<Rat>]) -> Result<Recognized> {
    let n = g.dim();
    let z = (0..n)
        .map(|i| basis_vector(n, i))
        .find(|e| !in_span(derived, e))
        .expect("a basis vector outside a proper subspace");
    let basis = Mat::from_columns(derived)?;
    let mut a = Mat::zeros(2, 2);
    for (j, d) in derived.iter().enumerate() {
        let image = g.bracket(&z, d);
        let coords = basis
            .solve(&image)
            .ok_or_else(|| Error::Unsupported("derived algebra is not an ideal".into()))?;
        a.set_column(j, &coords);
    }
    let t = a.trace();
    let det = a.det()?;
    let disc = &t * &t - int(4) * &det;
    if disc.is_negative() {
        let lambda2 = &t * &t / (int(4) * &det - &t * &t);
        return Ok(match rational_sqrt(&lambda2) {
            Some(l) => Recognized::Label(CatalogLabel::r3_prime(l)?),
            None => Recognized::Irrational {
                family: Family::R3PrimeLambda,
                invariants: BTreeMap::from([("lambda2".to_string(), lambda2)]),
            },
        });
    }
    if disc.is_zero() {
        let half = &t / int(2);
        let scalar = Mat::diag(&[half.clone(), half]);
        return Ok(Recognized::Label(if a == scalar {
            CatalogLabel::r3_lambda(Rat::one())?
        } else {
            CatalogLabel::plain(Family::R3)
        }));
    }
    match rational_sqrt(&disc) {
        Some(s) => {
            let e1 = (&t + &s) / int(2);
            let e2 = (&t - &s) / int(2);
            let lambda = if e1.abs() >= e2.abs() {
                e2 / e1
            } else {
                e1 / e2
            };
            Ok(Recognized::Label(CatalogLabel::r3_lambda(lambda)?))
        }
        None => Ok(Recognized::Irrational {
            family: Family::R3Lambda,
            // (1 + lambda)^2 / lambda, symmetric under lambda -> 1/lambda.
            invariants: BTreeMap::from([("t2_over_det".to_string(), &t * &t / det)]),
        }),
    }
}

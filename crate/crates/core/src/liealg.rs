//! Lie algebras as exact structure constants, the catalog of real algebras of
//! dimension 2 and 3, and the structural invariants the classification needs.
//!
//! Wedge basis convention: for dimension 3 the ordered basis of the exterior
//! square is `(e0^e1, e1^e2, e2^e0)`, for dimension 2 it is `(e0^e1)`. With
//! the basis `(x, y, h)` this is `(x^y, y^h, h^x)`; with `(u, v, w)` it is
//! `(u^v, v^w, w^u)`. In dimension 3 the coordinates of `a^b` are the cross
//! product `a x b`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{self, is_zero_vec, span_basis, Mat, Rat};

const PAIRS_2: [(usize, usize); 1] = [(0, 1)];
const PAIRS_3: [(usize, usize); 3] = [(0, 1), (1, 2), (2, 0)];

/// Ordered index pairs `(i, j)` of the wedge basis `e_i ^ e_j`.
pub fn wedge_pairs(dim: usize) -> &'static [(usize, usize)] {
    match dim {
        2 => &PAIRS_2,
        3 => &PAIRS_3,
        _ => &[],
    }
}

pub fn wedge_dim(dim: usize) -> usize {
    dim * dim.saturating_sub(1) / 2
}

/// Coordinates of `a ^ b` in the wedge basis.
pub fn wedge(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    wedge_pairs(a.len())
        .iter()
        .map(|&(i, j)| &a[i] * &b[j] - &a[j] * &b[i])
        .collect()
}

/// Position of `e_i ^ e_j` in the wedge basis together with its sign.
pub fn wedge_index(dim: usize, i: usize, j: usize) -> Option<(usize, i32)> {
    wedge_pairs(dim)
        .iter()
        .enumerate()
        .find_map(|(k, &(p, q))| {
            if (p, q) == (i, j) {
                Some((k, 1))
            } else if (p, q) == (j, i) {
                Some((k, -1))
            } else {
                None
            }
        })
}

pub fn basis_vector(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = Rat::one();
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Abelian2,
    Aff2,
    Abelian3,
    H3,
    R3,
    R3Lambda,
    R3PrimeLambda,
    Su2,
    Sl2R,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Abelian2,
        Family::Aff2,
        Family::Abelian3,
        Family::H3,
        Family::R3,
        Family::R3Lambda,
        Family::R3PrimeLambda,
        Family::Su2,
        Family::Sl2R,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Abelian2 => "Abelian2",
            Family::Aff2 => "Aff2",
            Family::Abelian3 => "Abelian3",
            Family::H3 => "H3",
            Family::R3 => "R3",
            Family::R3Lambda => "R3Lambda",
            Family::R3PrimeLambda => "R3PrimeLambda",
            Family::Su2 => "Su2",
            Family::Sl2R => "Sl2R",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
    }

    pub fn dim(self) -> usize {
        match self {
            Family::Abelian2 | Family::Aff2 => 2,
            _ => 3,
        }
    }

    pub fn takes_lambda(self) -> bool {
        matches!(self, Family::R3Lambda | Family::R3PrimeLambda)
    }
}

/// Name of a catalog algebra, with its parameter where the family has one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalogLabel {
    pub family: Family,
    pub lambda: Option<Rat>,
}

impl CatalogLabel {
    pub fn new(family: Family, lambda: Option<Rat>) -> Result<Self> {
        let label = CatalogLabel { family, lambda };
        label.validate()?;
        Ok(label)
    }

    pub fn plain(family: Family) -> Self {
        CatalogLabel {
            family,
            lambda: None,
        }
    }

    pub fn r3_lambda(lambda: Rat) -> Result<Self> {
        CatalogLabel::new(Family::R3Lambda, Some(lambda))
    }

    pub fn r3_prime(lambda: Rat) -> Result<Self> {
        CatalogLabel::new(Family::R3PrimeLambda, Some(lambda))
    }

    pub fn validate(&self) -> Result<()> {
        match (&self.lambda, self.family) {
            (Some(l), Family::R3Lambda) => {
                if l.abs() > Rat::one() {
                    return Err(Error::ParameterOutOfRange(format!(
                        "r3,lambda needs |lambda| <= 1, got {l}"
                    )));
                }
            }
            (Some(l), Family::R3PrimeLambda) => {
                if l.is_negative() {
                    return Err(Error::ParameterOutOfRange(format!(
                        "r'3,lambda needs lambda >= 0, got {l}"
                    )));
                }
            }
            (None, f) if f.takes_lambda() => {
                return Err(Error::ParameterOutOfRange(format!(
                    "{} needs lambda",
                    f.name()
                )));
            }
            (Some(_), f) => {
                return Err(Error::ParameterOutOfRange(format!(
                    "{} takes no parameter",
                    f.name()
                )));
            }
            (None, _) => {}
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.family.dim()
    }

    /// Parses `NAME` or `NAME,lambda=p/q`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut parts = s.split(',');
        let name = parts.next().unwrap_or_default().trim();
        let family = Family::from_name(name)
            .ok_or_else(|| Error::parse("label", format!("unknown family {name:?}")))?;
        let mut lambda = None;
        for part in parts {
            match part.split_once('=') {
                Some((k, v)) if k.trim() == "lambda" => lambda = Some(exactnum::parse_rat(v)?),
                _ => return Err(Error::parse("label", format!("unknown option {part:?}"))),
            }
        }
        CatalogLabel::new(family, lambda)
    }
}

impl fmt::Display for CatalogLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lambda {
            Some(l) => write!(f, "{},lambda={}", self.family.name(), l),
            None => write!(f, "{}", self.family.name()),
        }
    }
}

/// Structure constants `c[k][i][j]` with `[e_i, e_j] = sum_k c[k][i][j] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    c: Vec<Rat>,
    label: Option<CatalogLabel>,
    basis_names: Vec<String>,
}

impl LieAlgebra {
    /// Builds the tensor from the brackets of basis pairs; pairs not listed are zero.
    /// The Jacobi identity is not enforced here, see [`check_jacobi`].
    pub fn from_brackets(
        basis_names: Vec<String>,
        brackets: &[(usize, usize, Vec<Rat>)],
    ) -> Result<Self> {
        let dim = basis_names.len();
        if dim > 3 {
            return Err(Error::DimensionMismatch(format!("dimension {dim} > 3")));
        }
        let mut c = vec![Rat::zero(); dim * dim * dim];
        let mut seen = Vec::new();
        for (i, j, coeffs) in brackets {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim || coeffs.len() != dim {
                return Err(Error::DimensionMismatch(format!("bracket ({i},{j})")));
            }
            if i == j {
                if !is_zero_vec(coeffs) {
                    return Err(Error::NotAntisymmetric(format!("[e{i}, e{i}] != 0")));
                }
                continue;
            }
            let key = (i.min(j), i.max(j));
            if seen.contains(&key) {
                return Err(Error::NotAntisymmetric(format!(
                    "pair ({i},{j}) given twice"
                )));
            }
            seen.push(key);
            for (k, v) in coeffs.iter().enumerate() {
                c[(k * dim + i) * dim + j] = v.clone();
                c[(k * dim + j) * dim + i] = -v.clone();
            }
        }
        Ok(LieAlgebra {
            dim,
            c,
            label: None,
            basis_names,
        })
    }

    pub fn from_tensor(basis_names: Vec<String>, c: Vec<Rat>) -> Result<Self> {
        let dim = basis_names.len();
        if c.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch("structure tensor size".into()));
        }
        for k in 0..dim {
            for i in 0..dim {
                for j in 0..dim {
                    let a = &c[(k * dim + i) * dim + j];
                    let b = &c[(k * dim + j) * dim + i];
                    if *a != -b.clone() {
                        return Err(Error::NotAntisymmetric(format!("c[{k}][{i}][{j}]")));
                    }
                }
            }
        }
        Ok(LieAlgebra {
            dim,
            c,
            label: None,
            basis_names,
        })
    }

    pub fn abelian(dim: usize) -> Self {
        let names = default_names(dim);
        LieAlgebra::from_brackets(names, &[]).expect("abelian algebra")
    }

    pub fn with_label(mut self, label: Option<CatalogLabel>) -> Self {
        self.label = label;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn wedge_dim(&self) -> usize {
        wedge_dim(self.dim)
    }

    pub fn label(&self) -> Option<&CatalogLabel> {
        self.label.as_ref()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn structure_constant(&self, k: usize, i: usize, j: usize) -> &Rat {
        &self.c[(k * self.dim + i) * self.dim + j]
    }

    pub fn tensor(&self) -> &[Rat] {
        &self.c
    }

    /// Same structure constants, ignoring labels and basis names.
    pub fn same_brackets(&self, other: &LieAlgebra) -> bool {
        self.dim == other.dim && self.c == other.c
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        (0..self.dim)
            .map(|k| self.structure_constant(k, i, j).clone())
            .collect()
    }

    pub fn bracket(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let n = self.dim;
        let mut out = vec![Rat::zero(); n];
        for (i, ai) in a.iter().enumerate().take(n) {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate().take(n) {
                if bj.is_zero() || i == j {
                    continue;
                }
                let s = ai * bj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.structure_constant(k, i, j);
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// `dim x N` matrix of the bracket map `Lambda^2 g -> g`.
    pub fn wedge_bracket_matrix(&self) -> Mat {
        let cols: Vec<Vec<Rat>> = wedge_pairs(self.dim)
            .iter()
            .map(|&(i, j)| self.bracket_basis(i, j))
            .collect();
        if cols.is_empty() {
            return Mat::zeros(self.dim, 0);
        }
        Mat::from_columns(&cols).expect("uniform columns")
    }

    /// Action of `ad_z` on `Lambda^2 g` for any dimension.
    pub(crate) fn lambda2_action(&self, z: &[Rat]) -> Mat {
        let n = self.dim;
        let pairs = wedge_pairs(n);
        let mut m = Mat::zeros(pairs.len(), pairs.len());
        for (col, &(i, j)) in pairs.iter().enumerate() {
            let a = basis_vector(n, i);
            let b = basis_vector(n, j);
            let za = self.bracket(z, &a);
            let zb = self.bracket(z, &b);
            let image: Vec<Rat> = wedge(&za, &b)
                .iter()
                .zip(wedge(&a, &zb))
                .map(|(p, q)| p + q)
                .collect();
            m.set_column(col, &image);
        }
        m
    }

    /// Applies `ad_z` to an element of `Lambda^2 g` given in wedge coordinates.
    pub fn act_on_wedge(&self, z: &[Rat], omega: &[Rat]) -> Vec<Rat> {
        self.lambda2_action(z)
            .mul_vec(omega)
            .expect("wedge coordinates match dimension")
    }
}

pub(crate) fn default_names(dim: usize) -> Vec<String> {
    match dim {
        3 => vec!["x".into(), "y".into(), "h".into()],
        2 => vec!["h".into(), "x".into()],
        _ => (1..=dim).map(|i| format!("e{i}")).collect(),
    }
}

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

/// The catalog algebra in its canonical basis.
pub fn catalog_build(label: &CatalogLabel) -> Result<LieAlgebra> {
    label.validate()?;
    let z = Rat::zero;
    let o = Rat::one;
    let lam = || label.lambda.clone().unwrap_or_default();
    let xyh = names(&["x", "y", "h"]);
    let uvw = names(&["u", "v", "w"]);
    let g = match label.family {
        Family::Abelian2 => LieAlgebra::from_brackets(names(&["h", "x"]), &[])?,
        Family::Aff2 => LieAlgebra::from_brackets(names(&["h", "x"]), &[(0, 1, vec![z(), o()])])?,
        Family::Abelian3 => LieAlgebra::from_brackets(xyh, &[])?,
        Family::H3 => LieAlgebra::from_brackets(xyh, &[(0, 1, vec![z(), z(), o()])])?,
        Family::R3 => LieAlgebra::from_brackets(
            xyh,
            &[(2, 0, vec![o(), z(), z()]), (2, 1, vec![o(), o(), z()])],
        )?,
        Family::R3Lambda => LieAlgebra::from_brackets(
            xyh,
            &[(2, 0, vec![o(), z(), z()]), (2, 1, vec![z(), lam(), z()])],
        )?,
        Family::R3PrimeLambda => LieAlgebra::from_brackets(
            xyh,
            &[
                (2, 0, vec![lam(), -o(), z()]),
                (2, 1, vec![o(), lam(), z()]),
            ],
        )?,
        Family::Su2 => LieAlgebra::from_brackets(
            uvw,
            &[
                (0, 1, vec![z(), z(), o()]),
                (1, 2, vec![o(), z(), z()]),
                (2, 0, vec![z(), o(), z()]),
            ],
        )?,
        Family::Sl2R => LieAlgebra::from_brackets(
            uvw,
            &[
                (0, 1, vec![z(), z(), o()]),
                (1, 2, vec![-o(), z(), z()]),
                (2, 0, vec![z(), -o(), z()]),
            ],
        )?,
    };
    Ok(g.with_label(Some(label.clone())))
}

/// Cyclic sums `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]` for `i<j<k`.
pub fn check_jacobi(g: &LieAlgebra) -> Vec<Vec<Rat>> {
    let n = g.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (ei, ej, ek) = (basis_vector(n, i), basis_vector(n, j), basis_vector(n, k));
                let t1 = g.bracket(&g.bracket(&ei, &ej), &ek);
                let t2 = g.bracket(&g.bracket(&ej, &ek), &ei);
                let t3 = g.bracket(&g.bracket(&ek, &ei), &ej);
                out.push((0..n).map(|m| &t1[m] + &t2[m] + &t3[m]).collect());
            }
        }
    }
    out
}

pub fn is_lie_algebra(g: &LieAlgebra) -> bool {
    check_jacobi(g).iter().all(|r| is_zero_vec(r))
}

/// Matrix of `ad_z = [z, -]`.
pub fn ad_matrix(g: &LieAlgebra, z: &[Rat]) -> Result<Mat> {
    let n = g.dim();
    if z.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} in dim {n}",
            z.len()
        )));
    }
    let cols: Vec<Vec<Rat>> = (0..n).map(|j| g.bracket(z, &basis_vector(n, j))).collect();
    if n == 0 {
        return Ok(Mat::zeros(0, 0));
    }
    Mat::from_columns(&cols)
}

/// Matrix of the Leibniz extension of `ad_z` to `Lambda^2 g`.
pub fn wedge_action_matrix(g: &LieAlgebra, z: &[Rat]) -> Result<Mat> {
    if g.dim() != 3 {
        return Err(Error::DimensionMismatch("wedge action needs dim 3".into()));
    }
    if z.len() != 3 {
        return Err(Error::DimensionMismatch("vector length".into()));
    }
    Ok(g.lambda2_action(z))
}

/// Basis of `{ z : [z, e_i] = 0 for all i }`.
pub fn center(g: &LieAlgebra) -> Vec<Vec<Rat>> {
    let n = g.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        // z -> [e_i, z] is ad_{e_i}; its kernel for every i is the center.
        let ad = ad_matrix(g, &basis_vector(n, i)).expect("basis vector");
        rows.extend(ad.to_rows());
    }
    if rows.is_empty() {
        return (0..n).map(|i| basis_vector(n, i)).collect();
    }
    Mat::from_rows(rows).expect("uniform").nullspace_basis()
}

/// Row-reduced basis of `[g, g]`.
pub fn derived_subalgebra(g: &LieAlgebra) -> Vec<Vec<Rat>> {
    let n = g.dim();
    let brackets: Vec<Vec<Rat>> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| g.bracket_basis(i, j))
        .collect();
    span_basis(&brackets, n)
}

/// Basis of the invariant part `(Lambda^2 g)^g`.
pub fn invariant_wedge_subspace(g: &LieAlgebra) -> Result<Vec<Vec<Rat>>> {
    if g.dim() != 3 {
        return Err(Error::DimensionMismatch(
            "invariant wedge subspace needs dim 3".into(),
        ));
    }
    Ok(invariant_wedges(g))
}

pub(crate) fn invariant_wedges(g: &LieAlgebra) -> Vec<Vec<Rat>> {
    let n = g.dim();
    let big_n = g.wedge_dim();
    if big_n == 0 {
        return Vec::new();
    }
    let rows: Vec<Vec<Rat>> = (0..n)
        .flat_map(|i| g.lambda2_action(&basis_vector(n, i)).to_rows())
        .collect();
    Mat::from_rows(rows).expect("uniform").nullspace_basis()
}

/// `K_ij = tr(ad_{e_i} ad_{e_j})`.
pub fn killing_form(g: &LieAlgebra) -> Mat {
    let n = g.dim();
    let ads: Vec<Mat> = (0..n)
        .map(|i| ad_matrix(g, &basis_vector(n, i)).expect("basis vector"))
        .collect();
    let mut k = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            k[(i, j)] = ads[i].mul(&ads[j]).expect("square").trace();
        }
    }
    k
}

/// Checks `phi [e_i, e_j] = [phi e_i, phi e_j]` without requiring invertibility.
pub(crate) fn preserves_bracket(g: &LieAlgebra, phi: &Mat) -> bool {
    let n = g.dim();
    let cols: Vec<Vec<Rat>> = (0..n).map(|j| phi.column(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = phi.mul_vec(&g.bracket_basis(i, j)).expect("square");
            let rhs = g.bracket(&cols[i], &cols[j]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

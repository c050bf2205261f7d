//! Cobrackets and the Lie bialgebra axioms.
//!
//! A cobracket is stored as an `N x dim` matrix whose column `j` holds the
//! wedge coordinates of `delta(e_j)`. For dimension 3 with basis `(x, y, h)`
//! the entries are named
//!
//! ```text
//! a1 b1 c1     x^y
//! a2 b2 c2     y^h
//! a3 b3 c3     h^x
//! ```
//!
//! so `delta x = a1 x^y + a2 y^h + a3 h^x` and likewise for `y` (b) and `h` (c).

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{in_span, int, is_zero_vec, span_basis, Mat, Rat};
use crate::liealg::{
    self, basis_vector, wedge, wedge_dim, wedge_pairs, CatalogLabel, Family, LieAlgebra,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cobracket {
    m: Mat,
}

impl Cobracket {
    pub fn zero(dim: usize) -> Self {
        Cobracket {
            m: Mat::zeros(wedge_dim(dim), dim),
        }
    }

    /// Wraps an `N x dim` matrix, checking the shape.
    pub fn from_mat(dim: usize, m: Mat) -> Result<Self> {
        if m.rows() != wedge_dim(dim) || m.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "cobracket of shape {}x{} for dimension {dim}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(Cobracket { m })
    }

    /// Integer 3x3 cobracket in the `(a|b|c)` layout above.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let m = Mat::from_i64(rows);
        let dim = m.cols();
        Cobracket::from_mat(dim, m).expect("well-shaped cobracket literal")
    }

    /// Cobracket whose column `j` is `images[j]`.
    pub fn from_images(dim: usize, images: &[Vec<Rat>]) -> Result<Self> {
        let mut m = Mat::zeros(wedge_dim(dim), dim);
        if images.len() != dim {
            return Err(Error::DimensionMismatch("number of images".into()));
        }
        for (j, v) in images.iter().enumerate() {
            if v.len() != wedge_dim(dim) {
                return Err(Error::DimensionMismatch("image length".into()));
            }
            m.set_column(j, v);
        }
        Ok(Cobracket { m })
    }

    pub fn mat(&self) -> &Mat {
        &self.m
    }

    pub fn into_mat(self) -> Mat {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.m.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    /// `delta(e_j)`.
    pub fn image(&self, j: usize) -> Vec<Rat> {
        self.m.column(j)
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        self.m
            .mul_vec(v)
            .expect("vector matches cobracket dimension")
    }

    /// Entry in row `row` (wedge index) and column `col` (basis index).
    pub fn get(&self, row: usize, col: usize) -> &Rat {
        &self.m[(row, col)]
    }

    /// `a_i`, `b_i`, `c_i` by letter and 1-based index, dimension 3 only.
    pub fn coeff(&self, letter: char, i: usize) -> &Rat {
        let col = match letter {
            'a' => 0,
            'b' => 1,
            'c' => 2,
            _ => panic!("cobracket coefficient letter must be a, b or c"),
        };
        &self.m[(i - 1, col)]
    }

    pub fn add(&self, other: &Cobracket) -> Cobracket {
        Cobracket {
            m: self.m.add(&other.m).expect("same shape"),
        }
    }

    pub fn scale(&self, s: &Rat) -> Cobracket {
        Cobracket { m: self.m.scale(s) }
    }

    /// Entries flattened column by column (one block per basis image).
    pub fn to_flat(&self) -> Vec<Rat> {
        (0..self.dim()).flat_map(|j| self.image(j)).collect()
    }

    pub fn from_flat(dim: usize, flat: &[Rat]) -> Result<Self> {
        let n = wedge_dim(dim);
        if flat.len() != n * dim {
            return Err(Error::DimensionMismatch("flat cobracket length".into()));
        }
        let images: Vec<Vec<Rat>> = flat
            .chunks(n.max(1))
            .take(dim)
            .map(<[Rat]>::to_vec)
            .collect();
        if n == 0 {
            return Ok(Cobracket::zero(dim));
        }
        Cobracket::from_images(dim, &images)
    }
}

/// A Lie algebra with a cobracket satisfying the 1-cocycle and co-Jacobi axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieBialgebra {
    g: LieAlgebra,
    delta: Cobracket,
}

impl LieBialgebra {
    pub fn new(g: LieAlgebra, delta: Cobracket) -> Result<Self> {
        check_axioms(&g, &delta)?;
        Ok(LieBialgebra { g, delta })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn delta(&self) -> &Cobracket {
        &self.delta
    }

    pub fn into_parts(self) -> (LieAlgebra, Cobracket) {
        (self.g, self.delta)
    }
}

/// Residual of every axiom, in the order Jacobi, cocycle, co-Jacobi.
pub fn check_axioms(g: &LieAlgebra, d: &Cobracket) -> Result<()> {
    if !liealg::is_lie_algebra(g) {
        return Err(Error::NotJacobi);
    }
    let res = cocycle_residual(g, d)?;
    if !res.iter().all(|r| is_zero_vec(r)) {
        return Err(Error::NotCocycle);
    }
    if !is_zero_vec(&dual_jacobi_residual(g, d)?) {
        return Err(Error::NotCoJacobi);
    }
    Ok(())
}

fn check_shape(g: &LieAlgebra, d: &Cobracket) -> Result<()> {
    if d.dim() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "cobracket for dimension {} on algebra of dimension {}",
            d.dim(),
            g.dim()
        )));
    }
    Ok(())
}

/// `delta[e_i,e_j] - [delta e_i, e_j] - [e_i, delta e_j]` for each pair `i < j`.
pub fn cocycle_residual(g: &LieAlgebra, d: &Cobracket) -> Result<Vec<Vec<Rat>>> {
    check_shape(g, d)?;
    let n = g.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = d.apply(&g.bracket_basis(i, j));
            // [w, e_j] = -ad_{e_j} w.
            let t1 = g.act_on_wedge(&basis_vector(n, j), &d.image(i));
            let t2 = g.act_on_wedge(&basis_vector(n, i), &d.image(j));
            out.push(
                lhs.iter()
                    .zip(&t1)
                    .zip(&t2)
                    .map(|((l, p), q)| l + p - q)
                    .collect(),
            );
        }
    }
    Ok(out)
}

pub fn is_cocycle(g: &LieAlgebra, d: &Cobracket) -> bool {
    cocycle_residual(g, d).is_ok_and(|r| r.iter().all(|v| is_zero_vec(v)))
}

/// The three quadratic co-Jacobi polynomials in the `(a|b|c)` coefficients.
pub fn cojacobi_equations_3d(d: &Cobracket) -> Result<[Rat; 3]> {
    if d.dim() != 3 {
        return Err(Error::DimensionMismatch(
            "co-Jacobi equations need dim 3".into(),
        ));
    }
    let a = |i| d.coeff('a', i);
    let b = |i| d.coeff('b', i);
    let c = |i| d.coeff('c', i);
    let q1 = -(a(1) * b(2)) + a(2) * (b(1) - c(3)) + a(3) * c(2);
    let q2 = b(1) * a(3) - b(2) * c(3) + b(3) * (c(2) - a(1));
    let q3 = c(1) * (a(3) - b(2)) + c(2) * b(1) - c(3) * a(1);
    Ok([q1, q2, q3])
}

/// Lie algebra on the dual space with `[e^i, e^j] = sum_k <delta e_k, e_i^e_j> e^k`.
pub fn dual_algebra(d: &Cobracket) -> LieAlgebra {
    let n = d.dim();
    let mut c = vec![Rat::zero(); n * n * n];
    for (p, &(i, j)) in wedge_pairs(n).iter().enumerate() {
        for k in 0..n {
            let v = d.get(p, k).clone();
            c[(k * n + i) * n + j] = v.clone();
            c[(k * n + j) * n + i] = -v;
        }
    }
    let names = (1..=n).map(|i| format!("e{i}*")).collect();
    LieAlgebra::from_tensor(names, c).expect("antisymmetric by construction")
}

/// Jacobi residuals of the dual bracket, flattened.
pub fn dual_jacobi_residual(g: &LieAlgebra, d: &Cobracket) -> Result<Vec<Rat>> {
    check_shape(g, d)?;
    Ok(liealg::check_jacobi(&dual_algebra(d))
        .into_iter()
        .flatten()
        .collect())
}

pub fn satisfies_cojacobi(d: &Cobracket) -> bool {
    liealg::check_jacobi(&dual_algebra(d))
        .iter()
        .all(|r| is_zero_vec(r))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationReport {
    pub d: Mat,
    pub trace: Rat,
    pub det: Rat,
    /// Leading coefficient first.
    pub charpoly: Vec<Rat>,
}

/// `D = [-,-] o delta` without validating the pair.
pub fn derivation_matrix(g: &LieAlgebra, d: &Cobracket) -> Mat {
    let n = g.dim();
    if wedge_dim(n) == 0 {
        return Mat::zeros(n, n);
    }
    g.wedge_bracket_matrix().mul(d.mat()).expect("shapes agree")
}

pub fn char_derivation(b: &LieBialgebra) -> DerivationReport {
    let d = derivation_matrix(&b.g, &b.delta);
    let trace = d.trace();
    let det = d.det().expect("square");
    let charpoly = d.charpoly().expect("square");
    DerivationReport {
        d,
        trace,
        det,
        charpoly,
    }
}

/// Extension `T^1 + 1^T` of an endomorphism to `Lambda^2`.
pub fn wedge_extension(t: &Mat) -> Mat {
    let n = t.cols();
    let pairs = wedge_pairs(n);
    let mut m = Mat::zeros(pairs.len(), pairs.len());
    for (col, &(i, j)) in pairs.iter().enumerate() {
        let ti = t.column(i);
        let tj = t.column(j);
        let v: Vec<Rat> = wedge(&ti, &basis_vector(n, j))
            .into_iter()
            .zip(wedge(&basis_vector(n, i), &tj))
            .map(|(p, q)| p + q)
            .collect();
        m.set_column(col, &v);
    }
    m
}

/// Element `r` of `Lambda^2 g` in wedge coordinates; for `(u, v, w)` this is
/// `(alpha, beta, gamma)` on `(u^v, v^w, w^u)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RMatrix {
    pub coords: Vec<Rat>,
}

impl RMatrix {
    pub fn new(alpha: Rat, beta: Rat, gamma: Rat) -> Self {
        RMatrix {
            coords: vec![alpha, beta, gamma],
        }
    }

    pub fn from_i64(alpha: i64, beta: i64, gamma: i64) -> Self {
        RMatrix::new(int(alpha), int(beta), int(gamma))
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coords)
    }
}

/// `delta(x) = ad_x(r)`.
pub fn coboundary_from_r(g: &LieAlgebra, r: &RMatrix) -> Result<Cobracket> {
    let n = g.dim();
    if r.coords.len() != wedge_dim(n) {
        return Err(Error::DimensionMismatch("r-matrix length".into()));
    }
    let images: Vec<Vec<Rat>> = (0..n)
        .map(|j| g.act_on_wedge(&basis_vector(n, j), &r.coords))
        .collect();
    Cobracket::from_images(n, &images)
}

fn simple_family(g: &LieAlgebra) -> Result<Family> {
    match g.label().map(|l| l.family) {
        Some(f @ (Family::Su2 | Family::Sl2R)) => {
            let canonical = liealg::catalog_build(&CatalogLabel::plain(f))?;
            if !g.same_brackets(&canonical) {
                return Err(Error::NotCanonicalBasis(f.name().into()));
            }
            Ok(f)
        }
        _ => Err(Error::Unsupported(
            "only su(2) and sl(2,R) in their catalog bases".into(),
        )),
    }
}

/// The unique `r` with `ad(r) = d` on su(2) or sl(2,R).
pub fn coboundary_preimage(g: &LieAlgebra, d: &Cobracket) -> Result<RMatrix> {
    simple_family(g)?;
    check_shape(g, d)?;
    let n = g.dim();
    let rows: Vec<Vec<Rat>> = (0..n)
        .flat_map(|j| g.lambda2_action(&basis_vector(n, j)).to_rows())
        .collect();
    let system = Mat::from_rows(rows)?;
    let rhs = d.to_flat();
    let coords = system.solve(&rhs).ok_or(Error::NotCoboundary)?;
    Ok(RMatrix { coords })
}

fn det3(a: &[Rat], b: &[Rat], c: &[Rat]) -> Rat {
    let w = wedge(b, c);
    &a[0] * &w[1] + &a[1] * &w[2] + &a[2] * &w[0]
}

/// Coefficient of `[r, r]` on `e1^e2^e3`, with
/// `[X^Y, Z^W] = [X,Z]^Y^W - [X,W]^Y^Z - [Y,Z]^X^W + [Y,W]^X^Z`.
pub fn schouten_self_bracket(g: &LieAlgebra, r: &RMatrix) -> Result<Rat> {
    if g.dim() != 3 || r.coords.len() != 3 {
        return Err(Error::DimensionMismatch(
            "Schouten bracket needs dim 3".into(),
        ));
    }
    if r.is_zero() {
        return Ok(Rat::zero());
    }
    simple_family(g)?;
    Ok(schouten_coefficient(g, r))
}

pub(crate) fn schouten_coefficient(g: &LieAlgebra, r: &RMatrix) -> Rat {
    let n = 3;
    let mut total = Rat::zero();
    let pairs = wedge_pairs(n);
    for (p, &(x, y)) in pairs.iter().enumerate() {
        for (q, &(z, w)) in pairs.iter().enumerate() {
            let s = &r.coords[p] * &r.coords[q];
            if s.is_zero() {
                continue;
            }
            let e = |i| basis_vector(n, i);
            let term = det3(&g.bracket_basis(x, z), &e(y), &e(w))
                - det3(&g.bracket_basis(x, w), &e(y), &e(z))
                - det3(&g.bracket_basis(y, z), &e(x), &e(w))
                + det3(&g.bracket_basis(y, w), &e(x), &e(z));
            total += s * term;
        }
    }
    total
}

/// Projection onto `g/[g,g]`: returns the quotient basis indices and the
/// matrix of the projection (columns are images of the original basis).
pub(crate) fn derived_quotient(g: &LieAlgebra) -> (Vec<usize>, Mat) {
    let n = g.dim();
    let derived = liealg::derived_subalgebra(g);
    let pivots: Vec<usize> = derived
        .iter()
        .map(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect();
    let keep: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
    let mut proj = Mat::zeros(keep.len(), n);
    for j in 0..n {
        let mut v = basis_vector(n, j);
        for (row, &p) in derived.iter().zip(&pivots) {
            let f = v[p].clone();
            if !f.is_zero() {
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi -= &f * ri;
                }
            }
        }
        for (qi, &k) in keep.iter().enumerate() {
            proj[(qi, j)] = v[k].clone();
        }
    }
    (keep, proj)
}

/// Induced bialgebra on the abelian quotient `g/[g,g]`.
pub fn quotient_bialgebra(b: &LieBialgebra) -> LieBialgebra {
    let g = &b.g;
    let (keep, proj) = derived_quotient(g);
    let m = keep.len();
    let names: Vec<String> = keep.iter().map(|&i| g.basis_names()[i].clone()).collect();
    let label = match m {
        2 => Some(CatalogLabel::plain(Family::Abelian2)),
        3 => Some(CatalogLabel::plain(Family::Abelian3)),
        _ => None,
    };
    let q = LieAlgebra::from_brackets(names, &[])
        .expect("abelian quotient")
        .with_label(label);
    let pp = wedge_square_rect(&proj);
    let images: Vec<Vec<Rat>> = keep
        .iter()
        .map(|&j| pp.mul_vec(&b.delta.image(j)).expect("shapes agree"))
        .collect();
    let delta = if wedge_dim(m) == 0 {
        Cobracket::zero(m)
    } else {
        Cobracket::from_images(m, &images).expect("shapes agree")
    };
    LieBialgebra::new(q, delta).expect("quotient of a bialgebra by a coideal ideal")
}

/// `p^p : Lambda^2 V -> Lambda^2 W` for a linear map `p : V -> W`.
pub(crate) fn wedge_square_rect(p: &Mat) -> Mat {
    let src = wedge_pairs(p.cols());
    let dst = wedge_dim(p.rows());
    let mut m = Mat::zeros(dst, src.len());
    if dst == 0 {
        return m;
    }
    for (col, &(i, j)) in src.iter().enumerate() {
        m.set_column(col, &wedge(&p.column(i), &p.column(j)));
    }
    m
}

/// Whether `delta(V) ⊆ V^g`.
pub fn is_coideal(b: &LieBialgebra, v: &[Vec<Rat>]) -> bool {
    let n = b.g.dim();
    let span: Vec<Vec<Rat>> = v
        .iter()
        .flat_map(|vi| (0..n).map(move |j| wedge(vi, &basis_vector(n, j))))
        .collect();
    let span = span_basis(&span, wedge_dim(n));
    v.iter().all(|vi| in_span(&span, &b.delta.apply(vi)))
}

/// Basis of `ker delta`, checked to close under the bracket.
pub fn kernel_subalgebra(b: &LieBialgebra) -> Result<Vec<Vec<Rat>>> {
    let n = b.g.dim();
    let kernel = if wedge_dim(n) == 0 {
        (0..n).map(|i| basis_vector(n, i)).collect()
    } else {
        b.delta.mat().nullspace_basis()
    };
    for (i, x) in kernel.iter().enumerate() {
        for y in &kernel[i + 1..] {
            if !in_span(&kernel, &b.g.bracket(x, y)) {
                return Err(Error::NotCocycle);
            }
        }
    }
    Ok(kernel)
}

//! Automorphisms of the catalog algebras and their action on cobrackets.
//!
//! Matrices act on column vectors, so column `j` of `phi` is `phi(e_j)`.
//! Cobrackets transform by `delta' = (phi^phi)^-1 delta phi`, which is a
//! right action: `pullback(phi psi, d) = pullback(psi, pullback(phi, d))`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bialg::{wedge_square_rect, Cobracket, LieBialgebra};
use crate::error::{Error, Result};
use crate::exactnum::{int, rat, Mat, Rat};
use crate::liealg::{preserves_bracket, CatalogLabel, Family, LieAlgebra};

/// An invertible bracket-preserving matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    phi: Mat,
}

impl Automorphism {
    pub fn new(g: &LieAlgebra, phi: Mat) -> Result<Self> {
        if !is_lie_automorphism(g, &phi) {
            return Err(Error::NotAutomorphism);
        }
        Ok(Automorphism { phi })
    }

    pub fn identity(dim: usize) -> Self {
        Automorphism {
            phi: Mat::identity(dim),
        }
    }

    pub fn mat(&self) -> &Mat {
        &self.phi
    }

    pub fn dim(&self) -> usize {
        self.phi.cols()
    }

    /// `self o other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            phi: self.phi.mul(&other.phi).expect("same dimension"),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism {
            phi: self.phi.inverse().expect("automorphisms are invertible"),
        }
    }
}

pub fn is_lie_automorphism(g: &LieAlgebra, phi: &Mat) -> bool {
    let n = g.dim();
    if phi.rows() != n || phi.cols() != n {
        return false;
    }
    match phi.det() {
        Ok(d) if !d.is_zero() => preserves_bracket(g, phi),
        _ => false,
    }
}

/// Matrix of `phi^phi` on `Lambda^2` in the wedge basis order.
pub fn wedge_square(phi: &Mat) -> Result<Mat> {
    if !phi.is_square() {
        return Err(Error::DimensionMismatch(
            "wedge square of a non-square matrix".into(),
        ));
    }
    if phi.det()?.is_zero() {
        return Err(Error::Singular);
    }
    Ok(wedge_square_rect(phi))
}

/// `(phi^phi)^-1 d phi`.
pub fn pullback(phi: &Automorphism, d: &Cobracket) -> Result<Cobracket> {
    pullback_mat(&phi.phi, d)
}

pub(crate) fn pullback_mat(phi: &Mat, d: &Cobracket) -> Result<Cobracket> {
    let n = d.dim();
    if phi.cols() != n || phi.rows() != n {
        return Err(Error::DimensionMismatch(
            "automorphism and cobracket".into(),
        ));
    }
    let ww = wedge_square(phi)?;
    if ww.rows() == 0 {
        return Ok(Cobracket::zero(n));
    }
    let m = ww.inverse()?.mul(d.mat())?.mul(phi)?;
    Cobracket::from_mat(n, m)
}

pub fn is_bialgebra_automorphism(b: &LieBialgebra, phi: &Mat) -> bool {
    is_lie_automorphism(b.algebra(), phi)
        && pullback_mat(phi, b.delta()).is_ok_and(|d| &d == b.delta())
}

/// Parametrized automorphism family of a catalog algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutFamilySpec {
    pub label: CatalogLabel,
}

impl AutFamilySpec {
    pub fn new(label: CatalogLabel) -> Self {
        AutFamilySpec { label }
    }

    /// Parameter names in the order [`AutFamilySpec::instantiate`] expects.
    pub fn param_names(&self) -> &'static [&'static str] {
        match self.label.family {
            Family::Abelian2 => &["m11", "m12", "m21", "m22"],
            Family::Abelian3 => &[
                "m11", "m12", "m13", "m21", "m22", "m23", "m31", "m32", "m33",
            ],
            Family::Aff2 => &["b", "d"],
            Family::H3 => &["mu", "rho", "sigma", "nu", "a", "b"],
            Family::R3 => &["mu", "rho", "a", "b"],
            Family::R3Lambda if self.is_lambda(1) => &["mu", "rho", "sigma", "nu", "a", "b"],
            Family::R3Lambda => &["mu", "nu", "a", "b"],
            Family::R3PrimeLambda => &["mu", "sigma", "a", "b"],
            Family::Su2 => &["a", "b", "c", "d"],
            Family::Sl2R => &["a", "b", "c", "d"],
        }
    }

    fn is_lambda(&self, v: i64) -> bool {
        self.label.lambda.as_ref() == Some(&int(v))
    }

    /// Whether the family also contains the discrete generator `phi0`.
    pub fn has_phi0(&self) -> bool {
        self.label.family == Family::R3Lambda && self.is_lambda(-1)
    }

    /// The family member with the given parameters, as a matrix (no validity check).
    pub fn matrix(&self, p: &[Rat]) -> Result<Mat> {
        if p.len() != self.param_names().len() {
            return Err(Error::DimensionMismatch(
                "number of family parameters".into(),
            ));
        }
        let z = Rat::zero;
        let o = Rat::one;
        let v = |i: usize| p[i].clone();
        let rows = match self.label.family {
            Family::Abelian2 => vec![vec![v(0), v(1)], vec![v(2), v(3)]],
            Family::Abelian3 => vec![
                vec![v(0), v(1), v(2)],
                vec![v(3), v(4), v(5)],
                vec![v(6), v(7), v(8)],
            ],
            Family::Aff2 => vec![vec![o(), z()], vec![v(0), v(1)]],
            Family::H3 => {
                let det = &p[0] * &p[3] - &p[1] * &p[2];
                vec![
                    vec![v(0), v(1), z()],
                    vec![v(2), v(3), z()],
                    vec![v(4), v(5), det],
                ]
            }
            Family::R3 => vec![
                vec![v(0), v(1), v(2)],
                vec![z(), v(0), v(3)],
                vec![z(), z(), o()],
            ],
            Family::R3Lambda if self.is_lambda(1) => vec![
                vec![v(0), v(1), v(4)],
                vec![v(2), v(3), v(5)],
                vec![z(), z(), o()],
            ],
            Family::R3Lambda => vec![
                vec![v(0), z(), v(2)],
                vec![z(), v(1), v(3)],
                vec![z(), z(), o()],
            ],
            Family::R3PrimeLambda => vec![
                vec![v(0), -v(1), v(2)],
                vec![v(1), v(0), v(3)],
                vec![z(), z(), o()],
            ],
            Family::Su2 => return Ok(su2_rotation(&p[0], &p[1], &p[2], &p[3])),
            Family::Sl2R => return sl2_conjugation(&p[0], &p[1], &p[2], &p[3]),
        };
        Mat::from_rows(rows)
    }

    pub fn instantiate(&self, g: &LieAlgebra, p: &[Rat]) -> Result<Automorphism> {
        Automorphism::new(g, self.matrix(p)?)
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> Mat {
        loop {
            let m = match self.label.family {
                Family::Su2 => {
                    let q: Vec<Rat> = (0..4).map(|_| small_rat(rng)).collect();
                    if q.iter().all(Zero::is_zero) {
                        continue;
                    }
                    su2_rotation(&q[0], &q[1], &q[2], &q[3])
                }
                Family::Sl2R => {
                    let a = nonzero_rat(rng);
                    let b = small_rat(rng);
                    let c = small_rat(rng);
                    let d = (Rat::one() + &b * &c) / &a;
                    sl2_conjugation(&a, &b, &c, &d).expect("unit determinant")
                }
                _ => {
                    let p: Vec<Rat> = (0..self.param_names().len())
                        .map(|_| small_rat(rng))
                        .collect();
                    self.matrix(&p).expect("parameter count")
                }
            };
            if m.det().is_ok_and(|d| !d.is_zero()) {
                if self.has_phi0() && rng.gen_bool(0.5) {
                    return m.mul(&phi0()).expect("3x3");
                }
                return m;
            }
        }
    }
}

/// The swap `x <-> y`, `h -> -h` of `r_{3,-1}`.
pub fn phi0() -> Mat {
    Mat::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]])
}

/// Rotation of su(2) given by conjugation with the quaternion `(a, b, c, d)`,
/// scaled by `1/(a^2+b^2+c^2+d^2)` so any nonzero quaternion works.
pub fn su2_rotation(a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> Mat {
    let (a2, b2, c2, d2) = (a * a, b * b, c * c, d * d);
    let n = &a2 + &b2 + &c2 + &d2;
    let two = int(2);
    let cols = [
        vec![
            &a2 + &b2 - &c2 - &d2,
            &two * (b * d - a * c),
            -(&two * (b * c + a * d)),
        ],
        vec![
            &two * (a * c + b * d),
            &a2 - &b2 - &c2 + &d2,
            &two * (a * b - c * d),
        ],
        vec![
            -(&two * (b * c - a * d)),
            -(&two * (a * b + c * d)),
            &a2 - &b2 + &c2 - &d2,
        ],
    ];
    Mat::from_columns(&cols)
        .expect("3x3")
        .scale(&(Rat::one() / n))
}

fn traceless_coords(m: &[[Rat; 2]; 2]) -> Vec<Rat> {
    // [[p, q], [r, -p]] = 2p u + (q + r) v + (q - r) w
    vec![&m[0][0] * int(2), &m[0][1] + &m[1][0], &m[0][1] - &m[1][0]]
}

fn mul2(x: &[[Rat; 2]; 2], y: &[[Rat; 2]; 2]) -> [[Rat; 2]; 2] {
    let e = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// `M -> S M S^-1` on sl(2,R) in the basis `u = diag(1,-1)/2`,
/// `v = [[0,1],[1,0]]/2`, `w = [[0,1],[-1,0]]/2`, for `S = [[a,b],[c,d]]`.
pub fn sl2_conjugation(a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> Result<Mat> {
    let det = a * d - b * c;
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let s = [[a.clone(), b.clone()], [c.clone(), d.clone()]];
    let s_inv = [[d / &det, -b / &det], [-c / &det, a / &det]];
    let h = rat(1, 2);
    let z = Rat::zero();
    let basis = [
        [[h.clone(), z.clone()], [z.clone(), -h.clone()]],
        [[z.clone(), h.clone()], [h.clone(), z.clone()]],
        [[z.clone(), h.clone()], [-h.clone(), z.clone()]],
    ];
    let cols: Vec<Vec<Rat>> = basis
        .iter()
        .map(|m| traceless_coords(&mul2(&mul2(&s, m), &s_inv)))
        .collect();
    Mat::from_columns(&cols)
}

fn small_rat(rng: &mut ChaCha8Rng) -> Rat {
    let p: i64 = rng.gen_range(-6..=6);
    let q: i64 = rng.gen_range(1..=4);
    rat(p, q)
}

fn nonzero_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let r = small_rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// `count` pseudo-random members of the family, deterministic in `seed`.
pub fn sample_aut(spec: &AutFamilySpec, seed: u64, count: usize) -> Vec<Automorphism> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| Automorphism {
            phi: spec.draw(&mut rng),
        })
        .collect()
}

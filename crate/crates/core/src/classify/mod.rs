//! Isomorphism classes of Lie bialgebras on the catalog algebras.
//!
//! Each bialgebra is mapped to a [`ClassTag`] built from exact orbit
//! invariants. When the reduction to the class representative can be carried
//! out over the rationals, a witness automorphism is produced as well.

mod normal;
mod orbit;
mod recognize;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::autact::{phi0, pullback, AutFamilySpec, Automorphism};
use crate::bialg::{
    coboundary_from_r, coboundary_preimage, derivation_matrix, dual_algebra, Cobracket,
    LieBialgebra, RMatrix,
};
use crate::error::{Error, Result};
use crate::exactnum::{int, rational_sqrt, sign, sym_signature, Mat, Rat};
use crate::liealg::{catalog_build, CatalogLabel, Family, LieAlgebra};

pub use normal::{normal_form_catalog, normal_forms_with, NormalForm};
pub use orbit::{orbit_check, OrbitCheckReport};
pub use recognize::{recognize, recognize_invariants, Recognized};

pub const OUTSIDE_PUBLISHED_LIST: &str = "outside_published_list";
pub const INNER_AUTOMORPHISMS_ONLY: &str = "inner_automorphisms_only";

/// Isomorphism class of a Lie bialgebra on a fixed catalog algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassTag {
    pub algebra: CatalogLabel,
    pub case_id: String,
    pub params: BTreeMap<String, Rat>,
    pub flags: BTreeSet<String>,
}

impl ClassTag {
    pub fn new(algebra: CatalogLabel, case_id: &str) -> Self {
        ClassTag {
            algebra,
            case_id: case_id.to_string(),
            params: BTreeMap::new(),
            flags: BTreeSet::new(),
        }
    }

    pub fn trivial(algebra: CatalogLabel) -> Self {
        ClassTag::new(algebra, "trivial")
    }

    pub fn with(mut self, name: &str, value: Rat) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    pub fn flag(mut self, flag: &str) -> Self {
        self.flags.insert(flag.to_string());
        self
    }

    pub fn param(&self, name: &str) -> Option<&Rat> {
        self.params.get(name)
    }

    fn lambda(&self) -> Rat {
        self.algebra.lambda.clone().unwrap_or_default()
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.case_id, self.algebra)?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            write!(f, " ({})", ps.join(", "))?;
        }
        if !self.flags.is_empty() {
            let fs: Vec<&str> = self.flags.iter().map(String::as_str).collect();
            write!(f, " [{}]", fs.join(", "))?;
        }
        Ok(())
    }
}

/// A tag and, when available, an automorphism carrying the input onto the
/// representative of the tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub tag: ClassTag,
    pub witness: Option<Automorphism>,
}

fn sgn(q: &Rat) -> Rat {
    int(sign(q) as i64)
}

/// Classification of a bialgebra of dimension 2 or 3.
pub fn classify(b: &LieBialgebra) -> Result<Classification> {
    match b.algebra().dim() {
        2 => Ok(Classification {
            tag: classify2(b)?,
            witness: None,
        }),
        3 => classify3_full(b),
        n => Err(Error::Unsupported(format!(
            "classification in dimension {n}"
        ))),
    }
}

/// Rows of the 2-dimensional table, in any basis.
pub fn classify2(b: &LieBialgebra) -> Result<ClassTag> {
    let g = b.algebra();
    if g.dim() != 2 {
        return Err(Error::DimensionMismatch(
            "classify2 needs dimension 2".into(),
        ));
    }
    let label = CatalogLabel::plain(if g.is_abelian() {
        Family::Abelian2
    } else {
        Family::Aff2
    });
    if b.delta().is_zero() {
        return Ok(ClassTag::trivial(label));
    }
    if g.is_abelian() {
        return Ok(ClassTag::new(label, "ABEL2-1"));
    }
    let mu = derivation_matrix(g, b.delta()).trace();
    if mu.is_zero() {
        Ok(ClassTag::new(label, "AFF2-0"))
    } else {
        Ok(ClassTag::new(label, "AFF2-MU").with("mu", mu))
    }
}

pub fn classify3(b: &LieBialgebra) -> Result<ClassTag> {
    Ok(classify3_full(b)?.tag)
}

/// Label of a 3-dimensional algebra, checked to be in its canonical basis.
fn canonical_label(g: &LieAlgebra) -> Result<CatalogLabel> {
    let label = recognize(g)?;
    let canonical = catalog_build(&label)?;
    if !g.same_brackets(&canonical) {
        return Err(Error::NotCanonicalBasis(label.to_string()));
    }
    Ok(label)
}

fn classify3_full(b: &LieBialgebra) -> Result<Classification> {
    let g = b.algebra();
    if g.dim() != 3 {
        return Err(Error::DimensionMismatch(
            "classify3 needs dimension 3".into(),
        ));
    }
    let label = canonical_label(g)?;
    let d = b.delta();
    if d.is_zero() {
        return Ok(Classification {
            tag: ClassTag::trivial(label),
            witness: Some(Automorphism::identity(3)),
        });
    }
    let lambda = label.lambda.clone().unwrap_or_default();
    let (tag, witness) = match label.family {
        Family::Abelian3 => (abelian3(&label, d), None),
        Family::H3 => h3(g, &label, d)?,
        Family::R3 => r3(g, &label, d)?,
        Family::R3Lambda if lambda == int(1) => r31(g, &label, d)?,
        Family::R3Lambda if lambda == int(-1) => r3m1(g, &label, d)?,
        Family::R3Lambda => r3l(g, &label, d, &lambda)?,
        Family::R3PrimeLambda => r3p(g, &label, d, &lambda)?,
        Family::Su2 => {
            let r = coboundary_preimage(g, d)?;
            let c = &r.coords;
            let norm2 = &c[0] * &c[0] + &c[1] * &c[1] + &c[2] * &c[2];
            (ClassTag::new(label, "SU2").with("norm2", norm2), None)
        }
        Family::Sl2R => (sl2(g, &label, d)?, None),
        Family::Abelian2 | Family::Aff2 => unreachable!("dimension checked above"),
    };
    let witness = witness.or_else(|| {
        // The input may already be the representative.
        (representative(&tag).as_ref() == Some(d)).then(|| Automorphism::identity(3))
    });
    Ok(Classification { tag, witness })
}

type Tagged = (ClassTag, Option<Automorphism>);

fn member(g: &LieAlgebra, label: &CatalogLabel, p: &[Rat]) -> Result<Automorphism> {
    AutFamilySpec::new(label.clone()).instantiate(g, p)
}

fn abelian3(label: &CatalogLabel, d: &Cobracket) -> ClassTag {
    let dual = dual_algebra(d);
    let rec = recognize_invariants(&dual).expect("co-Jacobi makes the dual a Lie algebra");
    match rec {
        Recognized::Label(l) => {
            let tag = ClassTag::new(label.clone(), &format!("ABEL3-{}", l.family.name()));
            match l.lambda {
                Some(v) => tag.with("lambda", v),
                None => tag,
            }
        }
        Recognized::Irrational { family, invariants } => {
            let mut tag = ClassTag::new(label.clone(), &format!("ABEL3-{}", family.name()));
            tag.params = invariants;
            tag
        }
    }
}

fn h3(g: &LieAlgebra, label: &CatalogLabel, d: &Cobracket) -> Result<Tagged> {
    let a1 = d.coeff('a', 1).clone();
    let b1 = d.coeff('b', 1).clone();
    if !(a1.is_zero() && b1.is_zero()) {
        // Rotate-and-scale the quotient cobracket to (0, 1), then translate away a3.
        let n = &a1 * &a1 + &b1 * &b1;
        let z = Rat::zero();
        let o = Rat::one();
        let phi1 = member(
            g,
            label,
            &[
                b1.clone(),
                &a1 / &n,
                -a1.clone(),
                &b1 / &n,
                z.clone(),
                z.clone(),
            ],
        )?;
        let d1 = pullback(&phi1, d)?;
        let a3 = d1.coeff('a', 3).clone();
        let phi2 = member(g, label, &[o.clone(), z.clone(), z.clone(), o, a3, z])?;
        let d2 = pullback(&phi2, &d1)?;
        let tag = ClassTag::new(label.clone(), "H3-I").with("b3", d2.coeff('b', 3).clone());
        return Ok((tag, Some(phi1.compose(&phi2))));
    }
    let (a2, b2) = (d.coeff('a', 2).clone(), d.coeff('b', 2).clone());
    let (a3, b3) = (d.coeff('a', 3).clone(), d.coeff('b', 3).clone());
    let off = (&b2 + &a3) / int(2);
    let k = (&b2 - &a3) / int(2);
    let s = Mat::from_rows(vec![vec![a2.clone(), off.clone()], vec![off, b3.clone()]])?;
    let (rep_a2, rep_b3) = match sym_signature(&s)? {
        (2, 0) => (1, 1),
        (0, 2) => (-1, -1),
        (1, 1) => (1, -1),
        (1, 0) => (1, 0),
        (0, 1) => (-1, 0),
        _ => (0, 0),
    };
    let mut tag = ClassTag::new(label.clone(), "H3-II")
        .with("a2", int(rep_a2))
        .with("b3", int(rep_b3));
    if !k.is_zero() {
        let det_s = s.det()?;
        tag = tag
            .with("detS_over_k2", det_s / (&k * &k))
            .flag(OUTSIDE_PUBLISHED_LIST);
    }
    Ok((tag, None))
}

fn r3(g: &LieAlgebra, label: &CatalogLabel, d: &Cobracket) -> Result<Tagged> {
    let b1 = d.coeff('b', 1).clone();
    let c1 = d.coeff('c', 1).clone();
    let b3 = d.coeff('b', 3).clone();
    let z = Rat::zero;
    let o = Rat::one;
    if !b3.is_zero() {
        let kappa = &c1 - &b1 * &b1 / &b3;
        let tag = ClassTag::new(label.clone(), "R3-A")
            .with("b3", b3.clone())
            .with("sign", sgn(&kappa));
        let mu = if kappa.is_zero() {
            Some(o())
        } else {
            rational_sqrt(&kappa.abs())
        };
        let w = match mu {
            Some(mu) => Some(member(g, label, &[mu, z(), z(), -(&b1 / &b3)])?),
            None => None,
        };
        return Ok((tag, w));
    }
    if !b1.is_zero() {
        let b = -(&c1 / (int(2) * &b1));
        let w = member(g, label, &[b1, z(), z(), b])?;
        return Ok((ClassTag::new(label.clone(), "R3-B"), Some(w)));
    }
    let tag = ClassTag::new(label.clone(), "R3-C").with("sign", sgn(&c1));
    let w = match rational_sqrt(&c1.abs()) {
        Some(mu) => Some(member(g, label, &[mu, z(), z(), z()])?),
        None => None,
    };
    Ok((tag, w))
}

fn r3l(g: &LieAlgebra, label: &CatalogLabel, d: &Cobracket, lambda: &Rat) -> Result<Tagged> {
    let a1 = d.coeff('a', 1).clone();
    let c1 = d.coeff('c', 1).clone();
    let a3 = d.coeff('a', 3).clone();
    let c3 = d.coeff('c', 3).clone();
    let z = Rat::zero;
    let o = Rat::one;
    let one_l = o() + lambda;
    if !a3.is_zero() {
        let w = member(g, label, &[o(), o(), -(&c3 / &a3), -(&a1 / &a3)])?;
        return Ok((
            ClassTag::new(label.clone(), "R3L-A").with("a3", a3),
            Some(w),
        ));
    }
    if !a1.is_zero() {
        let a = -(&c1 / (&a1 * &one_l));
        let w = member(g, label, &[o(), a1, a, z()])?;
        return Ok((ClassTag::new(label.clone(), "R3L-B1"), Some(w)));
    }
    if !c3.is_zero() {
        let b = -(&c1 / (&c3 * &one_l));
        let w = member(g, label, &[c3, o(), z(), b])?;
        return Ok((ClassTag::new(label.clone(), "R3L-B2"), Some(w)));
    }
    let w = member(g, label, &[c1, o(), z(), z()])?;
    Ok((ClassTag::new(label.clone(), "R3L-B0"), Some(w)))
}

fn r3m1(g: &LieAlgebra, label: &CatalogLabel, d: &Cobracket) -> Result<Tagged> {
    let a1 = d.coeff('a', 1).clone();
    let b1 = d.coeff('b', 1).clone();
    let c1 = d.coeff('c', 1).clone();
    let a3 = d.coeff('a', 3).clone();
    let z = Rat::zero;
    let o = Rat::one;
    let swap = Automorphism::new(g, phi0())?;
    if !a3.is_zero() {
        let mut w = member(g, label, &[o(), o(), &b1 / &a3, -(&a1 / &a3)])?;
        if a3.is_negative() {
            w = w.compose(&swap);
        }
        return Ok((
            ClassTag::new(label.clone(), "R3M1-A").with("a3", a3.abs()),
            Some(w),
        ));
    }
    match (a1.is_zero(), b1.is_zero()) {
        (true, true) => {
            let w = member(g, label, &[c1, o(), z(), z()])?;
            Ok((ClassTag::new(label.clone(), "R3M1-B0"), Some(w)))
        }
        (false, false) => {
            let tag = ClassTag::new(label.clone(), "R3M1-B2").with("c1", &c1 / (&a1 * &b1));
            Ok((tag, Some(member(g, label, &[b1, a1, z(), z()])?)))
        }
        (a1_zero, _) => {
            // Bring the nonzero entry to a1 (phi0 sends (a1, b1) to (-b1, -a1)).
            let (pre, lead) = if a1_zero {
                (Some(swap), -b1)
            } else {
                (None, a1)
            };
            let has_c1 = !c1.is_zero();
            let mu = if has_c1 { &c1 / &lead } else { o() };
            let scale = member(g, label, &[mu, lead, z(), z()])?;
            let w = match pre {
                Some(s) => s.compose(&scale),
                None => scale,
            };
            let tag = ClassTag::new(label.clone(), "R3M1-B1").with("c1", int(has_c1 as i64));
            Ok((tag, Some(w)))
        }
    }
}

fn r31(g: &LieAlgebra, label: &CatalogLabel, d: &Cobracket) -> Result<Tagged> {
    let a1 = d.coeff('a', 1).clone();
    let b1 = d.coeff('b', 1).clone();
    let c1 = d.coeff('c', 1).clone();
    let a2 = d.coeff('a', 2).clone();
    let a3 = d.coeff('a', 3).clone();
    let b3 = d.coeff('b', 3).clone();
    let z = Rat::zero;
    let o = Rat::one;
    let bm = Mat::from_rows(vec![
        vec![a2.clone(), a3.clone()],
        vec![a3.clone(), b3.clone()],
    ])?;
    let det_b = bm.det()?;
    let tr_b = &a2 + &b3;
    let u = [a1.clone(), b1.clone()];
    let tag = |id: &str| ClassTag::new(label.clone(), id);
    if det_b.is_positive() {
        let inv = bm.inverse()?;
        let q = quad(&inv, &u);
        let kappa = &c1 - q;
        let t = tag("R31-1")
            .with("a2", det_b)
            .with("c1", sgn(&kappa) * sgn(&tr_b));
        return Ok((t, None));
    }
    if det_b.is_negative() {
        let inv = bm.inverse()?;
        let kappa = &c1 - quad(&inv, &u);
        let t = tag("R31-4")
            .with("a3sq", -det_b)
            .with("c1", int(!kappa.is_zero() as i64));
        return Ok((t, None));
    }
    if !bm.is_zero() {
        // rank one: u lies in the row space iff u = t0 B for some t0.
        let t0 = bm.transpose().solve(&u);
        return Ok(match t0 {
            None => (tag("R31-2"), None),
            Some(t0) => {
                let kappa = &c1 - quad(&bm, &t0);
                (tag("R31-3").with("c1", sgn(&kappa) * sgn(&tr_b)), None)
            }
        });
    }
    if !(a1.is_zero() && b1.is_zero()) {
        let n = &a1 * &a1 + &b1 * &b1;
        let shift = -(&c1 / (int(2) * &n));
        let translate = member(g, label, &[o(), z(), z(), o(), &shift * &a1, &shift * &b1])?;
        let rotate = member(g, label, &[a1.clone(), -b1.clone(), b1, a1, z(), z()])?;
        return Ok((tag("R31-7"), Some(translate.compose(&rotate))));
    }
    let w = member(g, label, &[c1, z(), z(), o(), z(), z()])?;
    Ok((tag("R31-8").with("c1", o()), Some(w)))
}

/// `v M v^T` for a 2x2 matrix.
fn quad(m: &Mat, v: &[Rat]) -> Rat {
    let mv = m.mul_vec(v).expect("2x2");
    &v[0] * &mv[0] + &v[1] * &mv[1]
}

fn r3p(g: &LieAlgebra, label: &CatalogLabel, d: &Cobracket, lambda: &Rat) -> Result<Tagged> {
    let a1 = d.coeff('a', 1).clone();
    let b1 = d.coeff('b', 1).clone();
    let c1 = d.coeff('c', 1).clone();
    let a3 = d.coeff('a', 3).clone();
    let z = Rat::zero;
    let o = Rat::one;
    if !a3.is_zero() {
        let a = (&b1 + lambda * &a1) / (&a3 * (o() + lambda * lambda));
        let b = &a * lambda - &a1 / &a3;
        let w = member(g, label, &[o(), z(), a, b])?;
        return Ok((
            ClassTag::new(label.clone(), "R3P-A").with("a3", a3),
            Some(w),
        ));
    }
    if a1.is_zero() && b1.is_zero() {
        let tag = ClassTag::new(label.clone(), "R3P-B").with("sign", sgn(&c1));
        let w = match rational_sqrt(&c1.abs()) {
            Some(mu) => Some(member(g, label, &[mu, z(), z(), z()])?),
            None => None,
        };
        return Ok((tag, w));
    }
    // Only reachable for lambda = 0, where co-Jacobi allows (a1, b1) != 0.
    let n = &a1 * &a1 + &b1 * &b1;
    let tag = ClassTag::new(label.clone(), "R3P-C").with("c1", &c1 / n);
    Ok((tag, Some(member(g, label, &[a1, b1, z(), z()])?)))
}

fn sl2(g: &LieAlgebra, label: &CatalogLabel, d: &Cobracket) -> Result<ClassTag> {
    let r = coboundary_preimage(g, d)?;
    let c = &r.coords;
    let q = &c[0] * &c[0] - &c[1] * &c[1] - &c[2] * &c[2];
    let tag = if q.is_negative() {
        ClassTag::new(label.clone(), "SL2-BETA").with("beta2", -q)
    } else if q.is_positive() {
        ClassTag::new(label.clone(), "SL2-ALPHA")
            .with("alpha2", q)
            .with("sign", sgn(&c[0]))
    } else if c[0].is_positive() {
        ClassTag::new(label.clone(), "SL2-TRI+")
    } else {
        ClassTag::new(label.clone(), "SL2-TRI-")
    };
    Ok(tag.flag(INNER_AUTOMORPHISMS_ONLY))
}

fn p(tag: &ClassTag, name: &str) -> Option<Rat> {
    tag.param(name).cloned()
}

fn cob(rows: [[Rat; 3]; 3]) -> Cobracket {
    let m = Mat::from_rows(rows.into_iter().map(Vec::from).collect()).expect("3x3");
    Cobracket::from_mat(3, m).expect("3x3")
}

/// The representative cobracket of a tag, when it has rational entries.
pub fn representative(tag: &ClassTag) -> Option<Cobracket> {
    let z = Rat::zero;
    let o = Rat::one;
    let lam = tag.lambda();
    let dim = tag.algebra.dim();
    if tag.case_id == "trivial" {
        return Some(Cobracket::zero(dim));
    }
    let two_d =
        |h: i64, x: Rat| Cobracket::from_images(2, &[vec![int(h)], vec![x]]).expect("2-dim");
    let coboundary = |f: Family, r: RMatrix| {
        coboundary_from_r(&catalog_build(&CatalogLabel::plain(f)).ok()?, &r).ok()
    };
    Some(match tag.case_id.as_str() {
        "ABEL2-1" => two_d(-1, z()),
        "AFF2-0" => two_d(1, z()),
        "AFF2-MU" => two_d(0, p(tag, "mu")?),
        "H3-I" => cob([[z(), o(), z()], [z(), z(), z()], [z(), p(tag, "b3")?, -o()]]),
        "H3-II" => {
            if tag.flags.contains(OUTSIDE_PUBLISHED_LIST) {
                return None;
            }
            cob([
                [z(), z(), z()],
                [p(tag, "a2")?, z(), z()],
                [z(), p(tag, "b3")?, z()],
            ])
        }
        "R3-A" => cob([
            [z(), z(), p(tag, "sign")?],
            [z(), z(), z()],
            [z(), p(tag, "b3")?, z()],
        ]),
        "R3-B" => cob([[z(), o(), z()], [z(), z(), z()], [z(), z(), o()]]),
        "R3-C" => cob([
            [z(), z(), p(tag, "sign")?],
            [z(), z(), z()],
            [z(), z(), z()],
        ]),
        "R3L-A" => {
            let a3 = p(tag, "a3")?;
            cob([[z(), z(), z()], [z(), &lam * &a3, z()], [a3, z(), z()]])
        }
        "R3L-B0" => cob([[z(), z(), o()], [z(), z(), z()], [z(), z(), z()]]),
        "R3L-B1" => cob([[o(), z(), z()], [z(), z(), lam], [z(), z(), z()]]),
        "R3L-B2" => cob([[z(), lam, z()], [z(), z(), z()], [z(), z(), o()]]),
        "R3M1-A" => {
            let a3 = p(tag, "a3")?;
            cob([[z(), z(), z()], [z(), -a3.clone(), z()], [a3, z(), z()]])
        }
        "R3M1-B0" => cob([[z(), z(), o()], [z(), z(), z()], [z(), z(), z()]]),
        "R3M1-B1" => cob([[o(), z(), p(tag, "c1")?], [z(), z(), -o()], [z(), z(), z()]]),
        "R3M1-B2" => cob([
            [o(), o(), p(tag, "c1")?],
            [z(), z(), -o()],
            [z(), z(), -o()],
        ]),
        "R31-1" => cob([
            [z(), z(), p(tag, "c1")?],
            [p(tag, "a2")?, z(), z()],
            [z(), o(), z()],
        ]),
        "R31-2" => cob([[o(), z(), z()], [z(), z(), o()], [z(), o(), z()]]),
        "R31-3" => cob([[z(), z(), p(tag, "c1")?], [z(), z(), z()], [z(), o(), z()]]),
        "R31-4" => {
            let a3 = rational_sqrt(&p(tag, "a3sq")?)?;
            cob([
                [z(), z(), p(tag, "c1")?],
                [z(), a3.clone(), z()],
                [a3, z(), z()],
            ])
        }
        "R31-7" => cob([[o(), z(), z()], [z(), z(), o()], [z(), z(), z()]]),
        "R31-8" => cob([[z(), z(), o()], [z(), z(), z()], [z(), z(), z()]]),
        "R3P-A" => {
            let a3 = p(tag, "a3")?;
            cob([
                [z(), z(), z()],
                [-(&lam * &a3), -a3.clone(), z()],
                [a3.clone(), -(&lam * &a3), z()],
            ])
        }
        "R3P-B" => cob([
            [z(), z(), p(tag, "sign")?],
            [z(), z(), z()],
            [z(), z(), z()],
        ]),
        "R3P-C" => cob([[o(), z(), p(tag, "c1")?], [z(), z(), -o()], [z(), z(), z()]]),
        "SU2" => {
            let alpha = rational_sqrt(&p(tag, "norm2")?)?;
            coboundary(Family::Su2, RMatrix::new(alpha, z(), z()))?
        }
        "SL2-BETA" => {
            let beta = rational_sqrt(&p(tag, "beta2")?)?;
            coboundary(Family::Sl2R, RMatrix::new(z(), beta, z()))?
        }
        "SL2-ALPHA" => {
            let alpha = rational_sqrt(&p(tag, "alpha2")?)? * p(tag, "sign")?;
            coboundary(Family::Sl2R, RMatrix::new(alpha, z(), z()))?
        }
        "SL2-TRI+" => coboundary(Family::Sl2R, RMatrix::from_i64(1, 1, 0))?,
        "SL2-TRI-" => coboundary(Family::Sl2R, RMatrix::from_i64(-1, -1, 0))?,
        id => {
            let family = Family::from_name(id.strip_prefix("ABEL3-")?)?;
            let label = CatalogLabel::new(family, p(tag, "lambda")).ok()?;
            abelian_dual_of(&catalog_build(&label).ok()?)
        }
    })
}

/// Cobracket on the abelian algebra whose dual bracket is the bracket of `h`.
pub fn abelian_dual_of(h: &LieAlgebra) -> Cobracket {
    let n = h.dim();
    let images: Vec<Vec<Rat>> = (0..n)
        .map(|k| {
            crate::liealg::wedge_pairs(n)
                .iter()
                .map(|&(i, j)| h.structure_constant(k, i, j).clone())
                .collect()
        })
        .collect();
    Cobracket::from_images(n, &images).expect("shape")
}

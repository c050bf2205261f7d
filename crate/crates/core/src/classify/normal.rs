//! Published representative cobrackets for every catalog algebra.

use num_traits::{One, Signed, Zero};

use super::{abelian_dual_of, classify, ClassTag};
use crate::bialg::{coboundary_from_r, Cobracket, LieBialgebra, RMatrix};
use crate::error::Result;
use crate::exactnum::{int, rat, Mat, Rat};
use crate::liealg::{catalog_build, CatalogLabel, Family};

/// A representative cobracket together with the tag the classifier assigns it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    /// Name of the representative family, e.g. `delta_b3`.
    pub name: String,
    /// Values substituted into the family's parameters.
    pub params: Vec<(String, Rat)>,
    pub tag: ClassTag,
    pub cobracket: Cobracket,
}

/// Default values substituted into continuous families.
pub fn default_values() -> Vec<Rat> {
    vec![int(1), int(-2), rat(3, 5)]
}

pub fn normal_form_catalog(label: &CatalogLabel) -> Result<Vec<NormalForm>> {
    normal_forms_with(label, &default_values())
}

type Entry = (String, Vec<(String, Rat)>, Cobracket);

struct Builder {
    out: Vec<Entry>,
}

impl Builder {
    fn push(&mut self, name: &str, params: &[(&str, Rat)], d: Cobracket) {
        let params = params
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        self.out.push((name.to_string(), params, d));
    }
}

fn m3(rows: [[Rat; 3]; 3]) -> Cobracket {
    let m = Mat::from_rows(rows.into_iter().map(Vec::from).collect()).expect("3x3");
    Cobracket::from_mat(3, m).expect("3x3")
}

fn nonzero_abs(values: &[Rat]) -> Vec<Rat> {
    let mut v: Vec<Rat> = values
        .iter()
        .filter(|x| !x.is_zero())
        .map(|x| x.abs())
        .collect();
    v.sort();
    v.dedup();
    v
}

fn nonzero(values: &[Rat]) -> Vec<Rat> {
    values.iter().filter(|x| !x.is_zero()).cloned().collect()
}

/// Every published representative, with continuous parameters set to each of
/// `values` (restricted to the allowed range of the parameter).
pub fn normal_forms_with(label: &CatalogLabel, values: &[Rat]) -> Result<Vec<NormalForm>> {
    let g = catalog_build(label)?;
    let z = Rat::zero;
    let o = Rat::one;
    let lam = label.lambda.clone().unwrap_or_default();
    let mut b = Builder { out: Vec::new() };
    let dim = label.dim();
    b.push("zero", &[], Cobracket::zero(dim));
    match label.family {
        Family::Abelian2 => {
            b.push("abelian_non_coabelian", &[], two(-1, z()));
        }
        Family::Aff2 => {
            b.push("aff_2_0", &[], two(1, z()));
            for mu in nonzero(values) {
                b.push("aff_2_mu", &[("mu", mu.clone())], two(0, mu));
            }
        }
        Family::Abelian3 => {
            let mut duals = vec![
                CatalogLabel::plain(Family::H3),
                CatalogLabel::plain(Family::R3),
                CatalogLabel::plain(Family::Su2),
                CatalogLabel::plain(Family::Sl2R),
                CatalogLabel::r3_lambda(int(1))?,
                CatalogLabel::r3_lambda(int(-1))?,
                CatalogLabel::r3_lambda(int(0))?,
                CatalogLabel::r3_prime(int(0))?,
            ];
            for v in nonzero(values) {
                let inside = if v.abs() <= o() { v.clone() } else { o() / &v };
                duals.push(CatalogLabel::r3_lambda(inside)?);
                duals.push(CatalogLabel::r3_prime(v.abs())?);
            }
            duals.sort();
            duals.dedup();
            for l in duals {
                let h = catalog_build(&l)?;
                b.push(
                    &format!("dual_of_{}", l.family.name()),
                    &lambda_param(&l),
                    abelian_dual_of(&h),
                );
            }
        }
        Family::H3 => {
            let mut b3s = values.to_vec();
            b3s.push(z());
            for b3 in b3s {
                b.push(
                    "delta_b3",
                    &[("b3", b3.clone())],
                    m3([[z(), o(), z()], [z(), z(), z()], [z(), b3, -o()]]),
                );
            }
            for (a2, b3) in [(1, 1), (-1, -1), (1, -1), (1, 0), (-1, 0)] {
                b.push(
                    "delta_a2_b3",
                    &[("a2", int(a2)), ("b3", int(b3))],
                    m3([[z(), z(), z()], [int(a2), z(), z()], [z(), int(b3), z()]]),
                );
            }
        }
        Family::R3 => {
            b.push(
                "delta_b1",
                &[],
                m3([[z(), o(), z()], [z(), z(), z()], [z(), z(), o()]]),
            );
            let mut b3s = values.to_vec();
            b3s.push(z());
            for b3 in b3s {
                for c1 in [-1, 0, 1] {
                    if b3.is_zero() && c1 == 0 {
                        continue;
                    }
                    b.push(
                        "delta_c1_b3",
                        &[("c1", int(c1)), ("b3", b3.clone())],
                        m3([[z(), z(), int(c1)], [z(), z(), z()], [z(), b3.clone(), z()]]),
                    );
                }
            }
        }
        Family::R3Lambda if lam == int(1) => r31_forms(&mut b, values),
        Family::R3Lambda if lam == int(-1) => {
            for a3 in nonzero_abs(values) {
                b.push(
                    "delta_a3",
                    &[("a3", a3.clone())],
                    m3([[z(), z(), z()], [z(), -a3.clone(), z()], [a3, z(), z()]]),
                );
            }
            b.push(
                "delta_0_0_1",
                &[],
                m3([[z(), z(), o()], [z(), z(), z()], [z(), z(), z()]]),
            );
            b.push(
                "delta_1_0_0",
                &[],
                m3([[o(), z(), z()], [z(), z(), -o()], [z(), z(), z()]]),
            );
            b.push(
                "delta_1_0_1",
                &[],
                m3([[o(), z(), o()], [z(), z(), -o()], [z(), z(), z()]]),
            );
            for c1 in values {
                b.push(
                    "delta_1_1_c1",
                    &[("c1", c1.clone())],
                    m3([[o(), o(), c1.clone()], [z(), z(), -o()], [z(), z(), -o()]]),
                );
            }
        }
        Family::R3Lambda => {
            b.push(
                "delta_c1",
                &[],
                m3([[z(), z(), o()], [z(), z(), z()], [z(), z(), z()]]),
            );
            b.push(
                "delta_a1",
                &[],
                m3([[o(), z(), z()], [z(), z(), lam.clone()], [z(), z(), z()]]),
            );
            b.push(
                "delta_c3",
                &[],
                m3([[z(), lam.clone(), z()], [z(), z(), z()], [z(), z(), o()]]),
            );
            for a3 in nonzero(values) {
                b.push(
                    "delta_a3",
                    &[("a3", a3.clone())],
                    m3([[z(), z(), z()], [z(), &lam * &a3, z()], [a3, z(), z()]]),
                );
            }
        }
        Family::R3PrimeLambda => {
            for a3 in nonzero(values) {
                b.push(
                    "delta_a3",
                    &[("a3", a3.clone())],
                    m3([
                        [z(), z(), z()],
                        [-(&lam * &a3), -a3.clone(), z()],
                        [a3.clone(), -(&lam * &a3), z()],
                    ]),
                );
            }
            for c1 in [1, -1] {
                b.push(
                    "delta_0_c1",
                    &[("c1", int(c1))],
                    m3([[z(), z(), int(c1)], [z(), z(), z()], [z(), z(), z()]]),
                );
            }
            if lam.is_zero() {
                for c1 in values {
                    b.push(
                        "delta_1_0_c1",
                        &[("c1", c1.clone())],
                        m3([[o(), z(), c1.clone()], [z(), z(), -o()], [z(), z(), z()]]),
                    );
                }
            }
        }
        Family::Su2 => {
            for alpha in nonzero_abs(values) {
                let d = coboundary_from_r(&g, &RMatrix::new(alpha.clone(), z(), z()))?;
                b.push("delta_alpha", &[("alpha", alpha)], d);
            }
        }
        Family::Sl2R => {
            for beta in nonzero_abs(values) {
                let d = coboundary_from_r(&g, &RMatrix::new(z(), beta.clone(), z()))?;
                b.push("delta_beta", &[("beta", beta)], d);
            }
            for alpha in nonzero(values) {
                let d = coboundary_from_r(&g, &RMatrix::new(alpha.clone(), z(), z()))?;
                b.push("delta_alpha", &[("alpha", alpha)], d);
            }
            b.push(
                "delta_1",
                &[],
                m3([[z(), o(), z()], [z(), o(), z()], [-o(), z(), -o()]]),
            );
            b.push(
                "delta_-1",
                &[],
                m3([[z(), -o(), z()], [z(), -o(), z()], [o(), z(), o()]]),
            );
        }
    }
    b.out
        .into_iter()
        .map(|(name, params, cobracket)| {
            let bi = LieBialgebra::new(g.clone(), cobracket.clone())?;
            Ok(NormalForm {
                name,
                params,
                tag: classify(&bi)?.tag,
                cobracket,
            })
        })
        .collect()
}

fn lambda_param(l: &CatalogLabel) -> Vec<(&'static str, Rat)> {
    l.lambda.iter().map(|v| ("lambda", v.clone())).collect()
}

fn two(h: i64, x: Rat) -> Cobracket {
    Cobracket::from_images(2, &[vec![int(h)], vec![x]]).expect("2-dim")
}

/// The eight leaves of the decision diagram for `r_{3,1}`.
fn r31_forms(b: &mut Builder, values: &[Rat]) {
    let z = Rat::zero;
    let o = Rat::one;
    let signs = [-1, 0, 1];
    for a2 in nonzero_abs(values) {
        for c1 in signs {
            b.push(
                "leaf_1",
                &[("a2", a2.clone()), ("c1", int(c1))],
                m3([[z(), z(), int(c1)], [a2.clone(), z(), z()], [z(), o(), z()]]),
            );
        }
    }
    b.push(
        "leaf_2",
        &[],
        m3([[o(), z(), z()], [z(), z(), o()], [z(), o(), z()]]),
    );
    for c1 in signs {
        b.push(
            "leaf_3",
            &[("c1", int(c1))],
            m3([[z(), z(), int(c1)], [z(), z(), z()], [z(), o(), z()]]),
        );
    }
    for a3 in nonzero_abs(values) {
        for c1 in [0, 1] {
            b.push(
                "leaf_4",
                &[("a3", a3.clone()), ("c1", int(c1))],
                m3([
                    [z(), z(), int(c1)],
                    [z(), a3.clone(), z()],
                    [a3.clone(), z(), z()],
                ]),
            );
        }
    }
    for c1 in signs {
        b.push(
            "leaf_5",
            &[("c1", int(c1))],
            m3([[z(), z(), int(c1)], [o(), z(), z()], [z(), z(), z()]]),
        );
    }
    b.push(
        "leaf_6",
        &[],
        m3([[z(), o(), z()], [o(), z(), z()], [z(), z(), o()]]),
    );
    b.push(
        "leaf_7",
        &[],
        m3([[o(), z(), z()], [z(), z(), o()], [z(), z(), z()]]),
    );
    b.push(
        "leaf_8",
        &[("c1", o())],
        m3([[z(), z(), o()], [z(), z(), z()], [z(), z(), z()]]),
    );
}

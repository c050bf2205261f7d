mod common;

use common::labels;
use liebialg::autact::{
    is_lie_automorphism, pullback, sample_aut, wedge_square, AutFamilySpec, Automorphism,
};
use liebialg::bialg::{
    char_derivation, coboundary_from_r, derivation_matrix, is_cocycle, quotient_bialgebra,
    satisfies_cojacobi, wedge_extension, Cobracket, LieBialgebra, RMatrix,
};
use liebialg::classify::{classify, classify2, normal_form_catalog, ClassTag};
use liebialg::cohom::cocycle_space;
use liebialg::exactnum::{format_rat, int, parse_rat, Mat, Rat};
use liebialg::format::{
    algebra_from, algebra_value, bialgebra_from, bialgebra_value, parse_json, to_pretty,
};
use liebialg::liealg::{catalog_build, check_jacobi, wedge, CatalogLabel, Family, LieAlgebra};
use proptest::prelude::*;

fn rat_s() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=6).prop_map(|(p, q)| Rat::new(p.into(), q.into()))
}

fn vec3() -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec(rat_s(), 3)
}

fn mat3() -> impl Strategy<Value = Mat> {
    prop::collection::vec(rat_s(), 9)
        .prop_map(|v| Mat::from_rows(v.chunks(3).map(<[Rat]>::to_vec).collect()).unwrap())
}

fn label_s() -> impl Strategy<Value = CatalogLabel> {
    prop::sample::select(labels())
}

fn label3_s() -> impl Strategy<Value = CatalogLabel> {
    prop::sample::select(
        labels()
            .into_iter()
            .filter(|l| l.dim() == 3)
            .collect::<Vec<_>>(),
    )
}

fn alg(l: &CatalogLabel) -> LieAlgebra {
    catalog_build(l).unwrap()
}

fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// A random orbit image of a random representative on `l`.
fn orbit_image(l: &CatalogLabel, pick: usize, seed: u64) -> (Cobracket, Automorphism) {
    let forms = normal_form_catalog(l).unwrap();
    let f = &forms[pick % forms.len()];
    let phi = sample_aut(&AutFamilySpec::new(l.clone()), seed, 1).remove(0);
    (pullback(&phi, &f.cobracket).unwrap(), phi)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_round_trip(q in rat_s()) {
        prop_assert_eq!(parse_rat(&format_rat(&q)).unwrap(), q);
    }

    #[test]
    fn determinant_is_multiplicative(a in mat3(), b in mat3()) {
        prop_assert_eq!(a.mul(&b).unwrap().det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn inverse_is_two_sided(a in mat3()) {
        if let Ok(inv) = a.inverse() {
            prop_assert_eq!(a.mul(&inv).unwrap(), Mat::identity(3));
            prop_assert_eq!(inv.mul(&a).unwrap(), Mat::identity(3));
        } else {
            prop_assert_eq!(a.det().unwrap(), int(0));
        }
    }

    #[test]
    fn rank_nullity(a in mat3()) {
        prop_assert_eq!(a.rank() + a.nullspace_basis().len(), 3);
        for v in a.nullspace_basis() {
            prop_assert!(a.mul_vec(&v).unwrap().iter().all(|x| *x == int(0)));
        }
    }

    #[test]
    fn catalog_algebras_satisfy_jacobi(l in label_s()) {
        prop_assert!(check_jacobi(&alg(&l)).iter().flatten().all(|x| *x == int(0)));
    }

    #[test]
    fn wedge_action_is_leibniz(l in label3_s(), z in vec3(), a in vec3(), b in vec3()) {
        let g = alg(&l);
        let lhs = g.act_on_wedge(&z, &wedge(&a, &b));
        let rhs = add(&wedge(&g.bracket(&z, &a), &b), &wedge(&a, &g.bracket(&z, &b)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coboundaries_are_cocycles(l in label3_s(), r in vec3()) {
        let g = alg(&l);
        let d = coboundary_from_r(&g, &RMatrix::new(r[0].clone(), r[1].clone(), r[2].clone())).unwrap();
        prop_assert!(is_cocycle(&g, &d));
    }

    #[test]
    fn cocycle_combinations_are_cocycles(l in label_s(), coeffs in prop::collection::vec(rat_s(), 6)) {
        let g = alg(&l);
        let mut d = Cobracket::zero(g.dim());
        for (c, b) in coeffs.iter().zip(cocycle_space(&g)) {
            d = d.add(&b.scale(c));
        }
        prop_assert!(is_cocycle(&g, &d));
    }

    #[test]
    fn wedge_square_determinant(a in mat3()) {
        match wedge_square(&a) {
            Ok(w) => {
                let d = a.det().unwrap();
                prop_assert_eq!(w.det().unwrap(), &d * &d)
            },
            Err(_) => prop_assert_eq!(a.det().unwrap(), int(0)),
        }
    }

    #[test]
    fn wedge_extension_is_derivation_on_wedges(t in mat3(), a in vec3(), b in vec3()) {
        let lhs = wedge_extension(&t).mul_vec(&wedge(&a, &b)).unwrap();
        let rhs = add(&wedge(&t.mul_vec(&a).unwrap(), &b), &wedge(&a, &t.mul_vec(&b).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sampled_automorphisms_preserve_brackets(l in label_s(), seed in any::<u64>()) {
        let g = alg(&l);
        for phi in sample_aut(&AutFamilySpec::new(l.clone()), seed, 3) {
            prop_assert!(is_lie_automorphism(&g, phi.mat()));
        }
    }

    #[test]
    fn pullback_is_a_right_action(l in label_s(), pick in any::<usize>(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let (d, _) = orbit_image(&l, pick, s1);
        let spec = AutFamilySpec::new(l.clone());
        let a = sample_aut(&spec, s1 ^ 1, 1).remove(0);
        let b = sample_aut(&spec, s2, 1).remove(0);
        let ab = pullback(&a.compose(&b), &d).unwrap();
        prop_assert_eq!(&ab, &pullback(&b, &pullback(&a, &d).unwrap()).unwrap());
        prop_assert_eq!(pullback(&a.inverse(), &pullback(&a, &d).unwrap()).unwrap(), d.clone());
        prop_assert_eq!(pullback(&Automorphism::identity(d.dim()), &d).unwrap(), d);
    }

    #[test]
    fn orbit_images_stay_valid_and_keep_their_tag(l in label_s(), pick in any::<usize>(), seed in any::<u64>()) {
        let g = alg(&l);
        let forms = normal_form_catalog(&l).unwrap();
        let f = &forms[pick % forms.len()];
        let phi = sample_aut(&AutFamilySpec::new(l.clone()), seed, 1).remove(0);
        let d = pullback(&phi, &f.cobracket).unwrap();
        let b = LieBialgebra::new(g, d).unwrap();
        prop_assert_eq!(classify(&b).unwrap().tag, f.tag.clone());
    }

    #[test]
    fn witnesses_reach_representatives(l in label3_s(), pick in any::<usize>(), seed in any::<u64>()) {
        let (d, _) = orbit_image(&l, pick, seed);
        let c = classify(&LieBialgebra::new(alg(&l), d.clone()).unwrap()).unwrap();
        if let Some(w) = c.witness {
            let rep = liebialg::classify::representative(&c.tag).unwrap();
            prop_assert_eq!(pullback(&w, &d).unwrap(), rep);
        }
    }

    #[test]
    fn characteristic_derivation_is_conjugation_covariant(l in label_s(), pick in any::<usize>(), seed in any::<u64>()) {
        let g = alg(&l);
        let (d, _) = orbit_image(&l, pick, seed);
        let phi = sample_aut(&AutFamilySpec::new(l.clone()), seed.wrapping_add(17), 1).remove(0);
        let d2 = pullback(&phi, &d).unwrap();
        let lhs = derivation_matrix(&g, &d2);
        let p = phi.mat();
        let rhs = p.inverse().unwrap().mul(&derivation_matrix(&g, &d).mul(p).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn characteristic_derivation_is_a_coderivation(l in label_s(), pick in any::<usize>(), seed in any::<u64>()) {
        // delta o D = (D^1 + 1^D) o delta
        let g = alg(&l);
        let (d, _) = orbit_image(&l, pick, seed);
        let dm = derivation_matrix(&g, &d);
        let lhs = d.mat().mul(&dm).unwrap();
        let rhs = wedge_extension(&dm).mul(d.mat()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn equal_tags_have_equal_charpolys(l in label3_s(), pick in any::<usize>(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let g = alg(&l);
        let (d1, _) = orbit_image(&l, pick, s1);
        let (d2, _) = orbit_image(&l, pick, s2);
        let b1 = LieBialgebra::new(g.clone(), d1).unwrap();
        let b2 = LieBialgebra::new(g, d2).unwrap();
        let (t1, t2) = (classify(&b1).unwrap().tag, classify(&b2).unwrap().tag);
        prop_assert_eq!(&t1, &t2);
        prop_assert_eq!(char_derivation(&b1).charpoly, char_derivation(&b2).charpoly);
    }

    #[test]
    fn heisenberg_quotient_matches_tag(pick in any::<usize>(), seed in any::<u64>()) {
        let l = CatalogLabel::plain(Family::H3);
        let (d, _) = orbit_image(&l, pick, seed);
        let b = LieBialgebra::new(alg(&l), d).unwrap();
        let tag = classify(&b).unwrap().tag;
        let q = quotient_bialgebra(&b);
        match tag.case_id.as_str() {
            "H3-I" => prop_assert!(!q.delta().is_zero()),
            "H3-II" | "trivial" => prop_assert!(q.delta().is_zero()),
            other => prop_assert!(false, "unexpected {}", other),
        }
        let qt = classify2(&q).unwrap();
        prop_assert_eq!(qt.algebra.family, Family::Abelian2);
    }

    #[test]
    fn two_dim_trace_is_total(a in rat_s(), b in rat_s(), c in rat_s(), d in rat_s(),
                              a2 in rat_s(), b2 in rat_s(), c2 in rat_s(), d2 in rat_s()) {
        let build = |a: &Rat, b: &Rat, c: &Rat, d: &Rat| -> Option<(ClassTag, Rat)> {
            let z = int(0);
            if (*a == z && *b == z) || (*c == z && *d == z) {
                return None;
            }
            let g = LieAlgebra::from_brackets(vec!["h".into(), "x".into()], &[(0, 1, vec![a.clone(), b.clone()])]).unwrap();
            let delta = Cobracket::from_images(2, &[vec![c.clone()], vec![d.clone()]]).unwrap();
            let bi = LieBialgebra::new(g, delta).unwrap();
            Some((classify2(&bi).unwrap(), char_derivation(&bi).trace))
        };
        if let (Some((t1, tr1)), Some((t2, tr2))) = (build(&a, &b, &c, &d), build(&a2, &b2, &c2, &d2)) {
            prop_assert_eq!(t1 == t2, tr1 == tr2);
        }
    }

    #[test]
    fn documents_round_trip(l in label_s(), pick in any::<usize>(), seed in any::<u64>()) {
        let g = alg(&l);
        let (d, _) = orbit_image(&l, pick, seed);
        let text = to_pretty(&bialgebra_value(&g, &d));
        let (g2, d2) = bialgebra_from(&parse_json(&text).unwrap()).unwrap();
        prop_assert_eq!(&g2, &g);
        prop_assert_eq!(&d2, &d);
        prop_assert_eq!(to_pretty(&bialgebra_value(&g2, &d2)), text);
        let unlabeled = g.clone().with_label(None);
        prop_assert_eq!(algebra_from(&algebra_value(&unlabeled), "algebra").unwrap(), unlabeled);
    }

    #[test]
    fn dual_of_valid_cobracket_is_lie(l in label3_s(), pick in any::<usize>(), seed in any::<u64>()) {
        let (d, _) = orbit_image(&l, pick, seed);
        prop_assert!(satisfies_cojacobi(&d));
    }
}

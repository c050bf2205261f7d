//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so the summary is always printed.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{labels, nonzero, parse, rng, small};
use liebialg::autact::{phi0, pullback, sample_aut, AutFamilySpec, Automorphism};
use liebialg::bialg::{
    char_derivation, cocycle_residual, cojacobi_equations_3d, dual_jacobi_residual, is_coideal,
    kernel_subalgebra, schouten_self_bracket, Cobracket, LieBialgebra, RMatrix,
};
use liebialg::classify::{
    abelian_dual_of, classify, classify2, normal_form_catalog, normal_forms_with, orbit_check,
    ClassTag,
};
use liebialg::cohom::h1_report;
use liebialg::exactnum::{int, is_zero_vec, rat, Mat, Rat};
use liebialg::liealg::{
    basis_vector, catalog_build, center, derived_subalgebra, CatalogLabel, Family, LieAlgebra,
};
use rand::Rng;

type Outcome = Result<String, String>;
type Dims = (usize, usize, usize, usize);
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn m3(rows: [[Rat; 3]; 3]) -> Cobracket {
    Cobracket::from_mat(
        3,
        Mat::from_rows(rows.into_iter().map(Vec::from).collect()).unwrap(),
    )
    .unwrap()
}

fn alg(l: &CatalogLabel) -> LieAlgebra {
    catalog_build(l).unwrap()
}

fn h1_table() -> Outcome {
    let columns: [(&str, Dims); 11] = [
        ("H3", (2, 1, 6, 5)),
        ("R3", (0, 3, 4, 1)),
        ("R3Lambda,lambda=1/2", (0, 3, 4, 1)),
        ("R3Lambda,lambda=-1/2", (0, 3, 4, 1)),
        ("R3Lambda,lambda=-1", (1, 2, 4, 2)),
        ("R3Lambda,lambda=1", (0, 3, 6, 3)),
        ("R3PrimeLambda,lambda=1", (0, 3, 4, 1)),
        ("R3PrimeLambda,lambda=2", (0, 3, 4, 1)),
        ("R3PrimeLambda,lambda=0", (1, 2, 4, 2)),
        ("Su2", (0, 3, 3, 0)),
        ("Sl2R", (0, 3, 3, 0)),
    ];
    let mut bad = Vec::new();
    for (l, want) in columns {
        let r = h1_report(&alg(&parse(l)));
        let got = (
            r.dim_invariants,
            r.dim_coboundaries,
            r.dim_cocycles,
            r.dim_h1,
        );
        if got != want {
            bad.push(format!("{l}: got {got:?}, expected {want:?}"));
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{} columns", columns.len()))
}

fn two_dim(brackets: (Rat, Rat), delta: (Rat, Rat)) -> LieBialgebra {
    let g = LieAlgebra::from_brackets(
        vec!["h".into(), "x".into()],
        &[(0, 1, vec![brackets.0, brackets.1])],
    )
    .unwrap();
    let d = Cobracket::from_images(2, &[vec![delta.0], vec![delta.1]]).unwrap();
    LieBialgebra::new(g, d).unwrap()
}

fn two_dim_table() -> Outcome {
    let z = || int(0);
    let rows = [
        (two_dim((z(), z()), (z(), z())), "trivial", None),
        (two_dim((z(), z()), (int(-1), z())), "ABEL2-1", None),
        (two_dim((z(), int(1)), (z(), z())), "trivial", None),
        (two_dim((z(), int(1)), (int(1), z())), "AFF2-0", None),
        (
            two_dim((z(), int(1)), (z(), rat(-7, 3))),
            "AFF2-MU",
            Some(rat(-7, 3)),
        ),
    ];
    let mut tags: Vec<ClassTag> = Vec::new();
    for (b, case, mu) in &rows {
        let t = classify2(b).map_err(|e| e.to_string())?;
        ensure(t.case_id == *case && t.param("mu") == mu.as_ref(), || {
            format!("row {case}: got {t}")
        })?;
        ensure(!tags.contains(&t), || format!("row {case} repeats tag {t}"))?;
        tags.push(t);
    }
    let mut r = rng(2);
    for _ in 0..50 {
        let (a, b, c, d) = loop {
            let v = (small(&mut r), small(&mut r), small(&mut r), small(&mut r));
            if (v.0 != int(0) || v.1 != int(0)) && (v.2 != int(0) || v.3 != int(0)) {
                break v;
            }
        };
        let mu = &a * &c + &b * &d;
        let t = classify2(&two_dim((a.clone(), b.clone()), (c.clone(), d.clone()))).unwrap();
        let ok = if mu == int(0) {
            t.case_id == "AFF2-0"
        } else {
            t.case_id == "AFF2-MU" && t.param("mu") == Some(&mu)
        };
        ensure(ok, || {
            format!("(a,b,c,d)=({a},{b},{c},{d}): got {t}, mu should be {mu}")
        })?;
    }
    Ok("5 rows, 50 random (a,b,c,d)".into())
}

fn normal_form_validity() -> Outcome {
    let mut r = rng(3);
    let mut count = 0;
    for l in labels() {
        let g = alg(&l);
        for _ in 0..5 {
            let values: Vec<Rat> = (0..3).map(|_| nonzero(&mut r)).collect();
            for f in normal_forms_with(&l, &values).map_err(|e| format!("{l}: {e}"))? {
                let cocycle = cocycle_residual(&g, &f.cobracket).unwrap();
                let cojac = dual_jacobi_residual(&g, &f.cobracket).unwrap();
                ensure(
                    cocycle.iter().all(|v| is_zero_vec(v)) && is_zero_vec(&cojac),
                    || format!("{l} {}{} fails", f.name, show(&f.params)),
                )?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} cobrackets"))
}

fn orbit_stability() -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    for (k, l) in labels().into_iter().enumerate() {
        let rep = orbit_check(&l, 100, 40 + k as u64).map_err(|e| format!("{l}: {e}"))?;
        total += rep.representatives * rep.samples;
        if rep.failures > 0 || rep.witness_mismatches > 0 {
            bad.push(format!(
                "{l}: {} failures, {} witness mismatches ({})",
                rep.failures,
                rep.witness_mismatches,
                rep.details.first().cloned().unwrap_or_default()
            ));
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{total} orbit images, 100 per representative"))
}

fn show(ps: &[(String, Rat)]) -> String {
    let v: Vec<String> = ps.iter().map(|(k, x)| format!("{k}={x}")).collect();
    format!("({})", v.join(","))
}

fn tag_separation() -> Outcome {
    let mut bad = Vec::new();
    for l in labels() {
        let forms = normal_form_catalog(&l).map_err(|e| e.to_string())?;
        for (i, f) in forms.iter().enumerate() {
            for h in &forms[i + 1..] {
                if f.tag == h.tag {
                    bad.push(format!(
                        "{l}: {}{} and {}{} both {}",
                        f.name,
                        show(&f.params),
                        h.name,
                        show(&h.params),
                        f.tag
                    ));
                }
            }
        }
    }
    let tag = |l: &str, d: Cobracket| {
        classify(&LieBialgebra::new(alg(&parse(l)), d).unwrap())
            .unwrap()
            .tag
    };
    let o = || int(1);
    let z = || int(0);
    let sl_plus = tag(
        "Sl2R",
        m3([[z(), o(), z()], [z(), o(), z()], [-o(), z(), -o()]]),
    );
    let sl_minus = tag(
        "Sl2R",
        m3([[z(), -o(), z()], [z(), -o(), z()], [o(), z(), o()]]),
    );
    if sl_plus == sl_minus {
        bad.push(format!("Sl2R: delta_1 and delta_-1 both {sl_plus}"));
    }
    let h3 = |a2: i64, b3: i64| {
        tag(
            "H3",
            m3([[z(), z(), z()], [int(a2), z(), z()], [z(), int(b3), z()]]),
        )
    };
    let hs = [h3(1, 1), h3(-1, -1), h3(1, -1)];
    if hs[0] == hs[1] || hs[1] == hs[2] || hs[0] == hs[2] {
        bad.push("H3: (1,1), (-1,-1), (1,-1) not separated".into());
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok("all representative lists separated".into())
}

fn schouten_values() -> Outcome {
    let su2 = alg(&CatalogLabel::plain(Family::Su2));
    let sl2 = alg(&CatalogLabel::plain(Family::Sl2R));
    let mut r = rng(6);
    for _ in 0..100 {
        let (a, b, c) = (small(&mut r), small(&mut r), small(&mut r));
        let rm = RMatrix::new(a.clone(), b.clone(), c.clone());
        let s = schouten_self_bracket(&su2, &rm).unwrap();
        let want = int(2) * (&a * &a + &b * &b + &c * &c);
        ensure(s == want, || format!("su2 r=({a},{b},{c}): {s} != {want}"))?;
        let s = schouten_self_bracket(&sl2, &rm).unwrap();
        let want = int(2) * (&a * &a - &b * &b - &c * &c);
        ensure(s == want, || format!("sl2 r=({a},{b},{c}): {s} != {want}"))?;
    }
    Ok("100 random r on su2 and sl2".into())
}

fn derivation_laws() -> Outcome {
    let mut checked = 0;
    for (k, l) in labels().into_iter().enumerate() {
        let g = alg(&l);
        let n = g.dim();
        let forms = normal_form_catalog(&l).map_err(|e| e.to_string())?;
        let auts = sample_aut(&AutFamilySpec::new(l.clone()), 700 + k as u64, 8);
        let derived = derived_subalgebra(&g);
        let z = center(&g);
        for f in &forms {
            for phi in &auts {
                let d = pullback(phi, &f.cobracket).unwrap();
                let b = LieBialgebra::new(g.clone(), d.clone()).map_err(|e| format!("{l}: {e}"))?;
                let dm = char_derivation(&b).d;
                for i in 0..n {
                    for j in 0..n {
                        let (ei, ej) = (basis_vector(n, i), basis_vector(n, j));
                        let lhs = dm.mul_vec(&g.bracket(&ei, &ej)).unwrap();
                        let a = g.bracket(&dm.mul_vec(&ei).unwrap(), &ej);
                        let c = g.bracket(&ei, &dm.mul_vec(&ej).unwrap());
                        let rhs: Vec<Rat> = a.iter().zip(&c).map(|(x, y)| x + y).collect();
                        ensure(lhs == rhs, || format!("{l} {}: D not a derivation", f.name))?;
                    }
                }
                for c in &z {
                    let dz = d.apply(c);
                    for i in 0..n {
                        ensure(
                            is_zero_vec(&g.act_on_wedge(&basis_vector(n, i), &dz)),
                            || format!("{l} {}: delta(center) not invariant", f.name),
                        )?;
                    }
                }
                ensure(is_coideal(&b, &derived), || {
                    format!("{l} {}: [g,g] not a coideal", f.name)
                })?;
                let ker = kernel_subalgebra(&b).map_err(|e| format!("{l} {}: {e}", f.name))?;
                for u in &ker {
                    for v in &ker {
                        ensure(is_zero_vec(&d.apply(&g.bracket(u, v))), || {
                            format!("{l} {}: ker delta not closed", f.name)
                        })?;
                    }
                }
                checked += 1;
            }
        }
    }
    ensure(checked >= 500, || format!("only {checked} bialgebras"))?;
    Ok(format!("{checked} orbit images"))
}

fn cojacobi_equivalence() -> Outcome {
    let algebras: Vec<LieAlgebra> = ["H3", "Su2", "R3Lambda,lambda=1/3", "Sl2R"]
        .iter()
        .map(|l| alg(&parse(l)))
        .collect();
    let abelian = alg(&CatalogLabel::plain(Family::Abelian3));
    let duals: Vec<Cobracket> = labels()
        .iter()
        .filter(|l| l.dim() == 3)
        .map(|l| abelian_dual_of(&alg(l)))
        .collect();
    let mut r = rng(8);
    let (mut zeros, mut total) = (0, 0);
    for k in 0..1200 {
        let g = &algebras[k % algebras.len()];
        let d = if k % 2 == 0 {
            let flat: Vec<Rat> = (0..9).map(|_| small(&mut r)).collect();
            Cobracket::from_flat(3, &flat).unwrap()
        } else {
            // a Lie bracket on the dual in a random basis
            let m = loop {
                let rows: Vec<Vec<Rat>> = (0..3)
                    .map(|_| (0..3).map(|_| small(&mut r)).collect())
                    .collect();
                let m = Mat::from_rows(rows).unwrap();
                if m.det().unwrap() != int(0) {
                    break m;
                }
            };
            let phi = Automorphism::new(&abelian, m).unwrap();
            let base = &duals[r.gen_range(0..duals.len())];
            pullback(&phi, base).unwrap().scale(&nonzero(&mut r))
        };
        let eqs = cojacobi_equations_3d(&d).unwrap();
        let by_equations = eqs.iter().all(|x| *x == int(0));
        let by_dual = is_zero_vec(&dual_jacobi_residual(g, &d).unwrap());
        ensure(by_equations == by_dual, || {
            format!("disagreement on {:?}", d.to_flat())
        })?;
        zeros += by_dual as usize;
        total += 1;
    }
    Ok(format!(
        "{total} cobrackets on {} algebras, {zeros} satisfy co-Jacobi",
        algebras.len()
    ))
}

fn compare(name: &str, got: &Cobracket, want: &Cobracket) -> Result<(), String> {
    let mut diffs = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if got.get(i, j) != want.get(i, j) {
                diffs.push(format!(
                    "({},{}) got {} printed {}",
                    i + 1,
                    j + 1,
                    got.get(i, j),
                    want.get(i, j)
                ));
            }
        }
    }
    ensure(diffs.is_empty(), || format!("{name}: {}", diffs.join(", ")))
}

fn act(l: &str, params: &[Rat], d: &Cobracket) -> Cobracket {
    let label = parse(l);
    let phi = AutFamilySpec::new(label.clone())
        .instantiate(&alg(&label), params)
        .unwrap();
    pullback(&phi, d).unwrap()
}

fn reduction_goldens() -> Outcome {
    let z = || int(0);
    let o = || int(1);
    let mut bad = Vec::new();
    let mut record = |r: Result<(), String>| {
        if let Err(e) = r {
            bad.push(e);
        }
    };

    // Heisenberg algebra, case b1 = 1.
    let (a3, b3) = (int(2), int(3));
    let d = m3([
        [z(), o(), z()],
        [z(), -a3.clone(), z()],
        [a3.clone(), b3.clone(), -o()],
    ]);
    let (mu, rho, nu, a, b) = (int(2), int(5), int(3), int(1), int(-7));
    let got = act(
        "H3",
        &[
            mu.clone(),
            rho.clone(),
            z(),
            nu.clone(),
            a.clone(),
            b.clone(),
        ],
        &d,
    );
    let mmn = &mu * &mu * &nu;
    let want = m3([
        [z(), o() / &mu, z()],
        [z(), (&a - &a3 * &mu) / &mmn, z()],
        [(-&a + &a3 * &mu) / &mmn, &b3 / (&mu * &mu), -o() / &mu],
    ]);
    record(compare("h3 sigma=0", &got, &want));
    let got = act(
        "H3",
        &[o(), rho.clone(), z(), nu.clone(), a.clone(), b.clone()],
        &d,
    );
    let want = m3([
        [z(), o(), z()],
        [z(), (&a - &a3) / &nu, z()],
        [-(&a - &a3) / &nu, b3.clone(), -o()],
    ]);
    record(compare("h3 sigma=0, mu=1", &got, &want));
    let got = act(
        "H3",
        &[o(), rho.clone(), z(), nu.clone(), a3.clone(), b.clone()],
        &d,
    );
    record(compare(
        "h3 a=a3",
        &got,
        &m3([[z(), o(), z()], [z(), z(), z()], [z(), b3.clone(), -o()]]),
    ));

    // r3, case b3 != 0.
    let (b1, c1, b3) = (int(4), int(-2), int(3));
    let d = m3([
        [z(), b1.clone(), c1.clone()],
        [z(), z(), z()],
        [z(), b3.clone(), b1.clone()],
    ]);
    let (mu, rho, a, b) = (int(2), rat(1, 2), int(5), rat(-1, 3));
    let got = act("R3", &[mu.clone(), rho.clone(), a.clone(), b.clone()], &d);
    let s = (&b1 + &b * &b3) / &mu;
    let want = m3([
        [
            z(),
            s.clone(),
            (int(2) * &b * &b1 + &b * &b * &b3 + &c1) / (&mu * &mu),
        ],
        [z(), z(), z()],
        [z(), b3.clone(), s],
    ]);
    record(compare("r3 general", &got, &want));
    let got = act("R3", &[mu.clone(), rho.clone(), a.clone(), -&b1 / &b3], &d);
    record(ensure(
        got.get(0, 1) == &z() && got.get(2, 2) == &z(),
        || "r3 b=-b1/b3 leaves b1' != 0".into(),
    ));
    let d0 = m3([
        [z(), z(), c1.clone()],
        [z(), z(), z()],
        [z(), b3.clone(), z()],
    ]);
    let got = act("R3", &[mu.clone(), rho.clone(), a.clone(), z()], &d0);
    let want = m3([
        [z(), z(), &c1 / (&mu * &mu)],
        [z(), z(), z()],
        [z(), b3.clone(), z()],
    ]);
    record(compare("r3 b1=0, b=0", &got, &want));

    // r_{3,-1}, the extra automorphism phi0.
    let g = alg(&parse("R3Lambda,lambda=-1"));
    let p0 = Automorphism::new(&g, phi0()).unwrap();
    for (a1, b1, c1, a3) in [(2, 3, 5, 0), (2, -3, 0, 7)] {
        let (a1, b1, c1, a3) = (int(a1), int(b1), int(c1), int(a3));
        let d = m3([
            [a1.clone(), b1.clone(), c1.clone()],
            [z(), -a3.clone(), -a1.clone()],
            [a3.clone(), z(), -b1.clone()],
        ]);
        let got = pullback(&p0, &d).unwrap();
        let want = m3([
            [-b1.clone(), -a1.clone(), c1.clone()],
            [z(), a3.clone(), b1.clone()],
            [-a3.clone(), z(), -b1.clone()],
        ]);
        record(compare(
            &format!("phi0 on (a1,b1,c1,a3)=({a1},{b1},{c1},{a3})"),
            &got,
            &want,
        ));
    }

    // r'_{3,lambda}, rotations with a = b = 0.
    for lam in [rat(1, 2), int(2)] {
        let (a1, b1, c1) = (int(1), int(-2), int(3));
        let l2 = &lam * &lam + int(1);
        // co-Jacobi fixes a3
        let a3 = -((&a1 * &a1 + &b1 * &b1) * &lam) / (&c1 * &l2);
        let d = m3([
            [a1.clone(), b1.clone(), c1.clone()],
            [
                -&lam * &a3,
                -a3.clone(),
                (&a1 * (&lam * &lam - int(1)) + int(2) * &lam * &b1) / &l2,
            ],
            [
                a3.clone(),
                -&lam * &a3,
                (&b1 * (&lam * &lam - int(1)) - int(2) * &lam * &a1) / &l2,
            ],
        ]);
        let label = format!("R3PrimeLambda,lambda={lam}");
        let (mu, sigma) = (int(2), int(-1));
        let got = act(&label, &[mu.clone(), sigma.clone(), z(), z()], &d);
        let n = &mu * &mu + &sigma * &sigma;
        let printed = [
            (0, 0, (&a1 * &mu + &b1 * &sigma) / &n),
            (0, 1, (&b1 * &mu - &a1 * &sigma) / &n),
            (0, 2, &c1 * &l2 / (&n * &l2)),
            (1, 0, -&a3 * &lam),
            (1, 1, -a3.clone()),
            (2, 0, a3.clone()),
            (2, 1, -&a3 * &lam),
        ];
        for (i, j, v) in printed {
            record(ensure(got.get(i, j) == &v, || {
                format!(
                    "r' lambda={lam} a=b=0: ({},{}) got {} printed {v}",
                    i + 1,
                    j + 1,
                    got.get(i, j)
                )
            }));
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok("h3, r3, phi0 and r' reductions".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("H1 table", h1_table),
        ("two-dimensional classification", two_dim_table),
        ("normal-form validity", normal_form_validity),
        ("orbit stability", orbit_stability),
        ("tag separation", tag_separation),
        ("Schouten values", schouten_values),
        ("characteristic-derivation laws", derivation_laws),
        ("co-Jacobi equivalence", cojacobi_equivalence),
        ("reduction goldens", reduction_goldens),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(s) => println!("criterion {} {name}: PASS ({s}) [{secs:.1}s]", k + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {} {name}: FAIL {e} [{secs:.1}s]", k + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

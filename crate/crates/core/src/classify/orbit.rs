//! Randomized cross-check of the classifier against the automorphism action.

use super::{classify, normal_form_catalog, representative, NormalForm};
use crate::autact::{pullback, sample_aut, AutFamilySpec};
use crate::bialg::{Cobracket, LieBialgebra};
use crate::error::Result;
use crate::liealg::{catalog_build, CatalogLabel};

const MAX_DETAILS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCheckReport {
    pub label: CatalogLabel,
    pub representatives: usize,
    /// Automorphisms sampled per representative.
    pub samples: usize,
    /// Orbit images whose tag differs from the representative's (or that fail validation).
    pub failures: usize,
    pub witness_checks: usize,
    /// Witnesses that do not carry their input onto the representative of its tag.
    pub witness_mismatches: usize,
    /// Pairs of distinct representatives that receive the same tag.
    pub tag_collisions: usize,
    pub details: Vec<String>,
}

impl OrbitCheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.witness_mismatches == 0 && self.tag_collisions == 0
    }

    fn note(&mut self, s: String) {
        if self.details.len() < MAX_DETAILS {
            self.details.push(s);
        }
    }
}

fn describe(f: &NormalForm) -> String {
    let ps: Vec<String> = f.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    if ps.is_empty() {
        f.name.clone()
    } else {
        format!("{}({})", f.name, ps.join(","))
    }
}

/// Classifies every published representative and `samples` random orbit
/// images of each, deterministically in `seed`.
pub fn orbit_check(label: &CatalogLabel, samples: usize, seed: u64) -> Result<OrbitCheckReport> {
    let g = catalog_build(label)?;
    let forms = normal_form_catalog(label)?;
    let mut report = OrbitCheckReport {
        label: label.clone(),
        representatives: forms.len(),
        samples,
        failures: 0,
        witness_checks: 0,
        witness_mismatches: 0,
        tag_collisions: 0,
        details: Vec::new(),
    };
    for (i, f) in forms.iter().enumerate() {
        for h in &forms[i + 1..] {
            if f.cobracket != h.cobracket && f.tag == h.tag {
                report.tag_collisions += 1;
                report.note(format!(
                    "{} and {} share tag {}",
                    describe(f),
                    describe(h),
                    f.tag
                ));
            }
        }
    }
    let auts = sample_aut(&AutFamilySpec::new(label.clone()), seed, samples);
    for f in &forms {
        check_witness(&mut report, &g, &f.cobracket, f);
        for phi in &auts {
            let image = pullback(phi, &f.cobracket)?;
            let b = match LieBialgebra::new(g.clone(), image.clone()) {
                Ok(b) => b,
                Err(e) => {
                    report.failures += 1;
                    report.note(format!("{}: orbit image invalid ({e})", describe(f)));
                    continue;
                }
            };
            let tag = classify(&b)?.tag;
            if tag != f.tag {
                report.failures += 1;
                report.note(format!(
                    "{}: orbit image tagged {tag}, expected {}",
                    describe(f),
                    f.tag
                ));
            }
            check_witness(&mut report, &g, &image, f);
        }
    }
    Ok(report)
}

fn check_witness(
    report: &mut OrbitCheckReport,
    g: &crate::liealg::LieAlgebra,
    d: &Cobracket,
    origin: &NormalForm,
) {
    let Ok(b) = LieBialgebra::new(g.clone(), d.clone()) else {
        return;
    };
    let Ok(c) = classify(&b) else {
        return;
    };
    let Some(w) = c.witness else {
        return;
    };
    report.witness_checks += 1;
    let lands = match (representative(&c.tag), pullback(&w, d)) {
        (Some(rep), Ok(image)) => rep == image,
        _ => false,
    };
    if !lands {
        report.witness_mismatches += 1;
        report.note(format!(
            "{}: witness does not reach representative of {}",
            describe(origin),
            c.tag
        ));
    }
}

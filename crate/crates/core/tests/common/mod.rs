#![allow(dead_code)]

use liebialg::exactnum::{int, Rat};
use liebialg::liealg::{CatalogLabel, Family};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// p/q with |p| <= 9, 1 <= q <= 5.
pub fn small(r: &mut ChaCha8Rng) -> Rat {
    Rat::new(r.gen_range(-9i64..=9).into(), r.gen_range(1i64..=5).into())
}

pub fn nonzero(r: &mut ChaCha8Rng) -> Rat {
    loop {
        let q = small(r);
        if q != int(0) {
            return q;
        }
    }
}

pub fn parse(s: &str) -> CatalogLabel {
    CatalogLabel::parse(s).unwrap()
}

/// One representative label for every catalog family, with the special
/// parameter values of the one-parameter families spelled out.
pub fn labels() -> Vec<CatalogLabel> {
    let mut v: Vec<CatalogLabel> = [
        Family::Abelian2,
        Family::Aff2,
        Family::Abelian3,
        Family::H3,
        Family::R3,
        Family::Su2,
        Family::Sl2R,
    ]
    .into_iter()
    .map(CatalogLabel::plain)
    .collect();
    for l in [
        "R3Lambda,lambda=1/2",
        "R3Lambda,lambda=-1/2",
        "R3Lambda,lambda=0",
        "R3Lambda,lambda=1",
        "R3Lambda,lambda=-1",
        "R3PrimeLambda,lambda=0",
        "R3PrimeLambda,lambda=1",
        "R3PrimeLambda,lambda=2",
    ] {
        v.push(parse(l));
    }
    v
}

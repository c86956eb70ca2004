#![allow(dead_code)]

use proptest::prelude::*;
use thetapos_core::linalg::{frac, int, Rat};
use thetapos_core::semigroup::{boundary_from_ints, interior_from_ints, UCoord};
use thetapos_core::somodel::{model, SOModel};

pub fn models() -> impl Strategy<Value = SOModel> {
    (4usize..=6).prop_map(|q| model(q).unwrap())
}

pub fn pos_rat() -> impl Strategy<Value = Rat> {
    (1i64..9, 1i64..5).prop_map(|(n, d)| frac(n, d))
}

pub fn interior(m: usize) -> impl Strategy<Value = Vec<Rat>> {
    (1i64..5, 1i64..7, prop::collection::vec(-3i64..4, m - 2)).prop_map(|(a, k, ys)| interior_from_ints(a, k, &ys))
}

pub fn boundary(m: usize) -> impl Strategy<Value = Vec<Rat>> {
    (1i64..5, prop::collection::vec(-3i64..4, m - 2)).prop_map(|(a, ys)| boundary_from_ints(a, &ys))
}

pub fn interior_coords(m: usize) -> impl Strategy<Value = UCoord> {
    (pos_rat(), interior(m), pos_rat(), interior(m)).prop_map(|(s1, v1, s2, v2)| UCoord::new(s1, v1, s2, v2))
}

/// A model together with interior coordinates for it.
pub fn model_and_coords() -> impl Strategy<Value = (SOModel, UCoord)> {
    models().prop_flat_map(|m| {
        let k = m.m;
        (Just(m), interior_coords(k))
    })
}

/// Parameters in the domain of stratum `i` (0-based).
pub fn stratum_params(m: usize, i: usize) -> BoxedStrategy<UCoord> {
    let z = || Just(vec![int(0); m]).boxed();
    let o = || Just(int(0)).boxed();
    let p = || pos_rat().boxed();
    let b = || boundary(m).boxed();
    let n = || interior(m).boxed();
    let parts: (BoxedStrategy<Rat>, BoxedStrategy<Vec<Rat>>, BoxedStrategy<Rat>, BoxedStrategy<Vec<Rat>>) = match i {
        0 => (o(), z(), o(), z()),
        1 => (p(), z(), o(), z()),
        2 => (o(), b(), o(), z()),
        3 => (o(), n(), o(), z()),
        4 => (o(), b(), p(), z()),
        5 => (o(), n(), p(), z()),
        6 => (p(), b(), o(), z()),
        7 => (p(), n(), o(), z()),
        8 => (o(), b(), p(), b()),
        9 => (o(), b(), p(), n()),
        10 => (o(), n(), p(), b()),
        11 => (o(), n(), p(), n()),
        12 => (p(), b(), p(), z()),
        13 => (p(), n(), p(), z()),
        14 => (p(), n(), p(), b()),
        _ => (p(), n(), p(), n()),
    };
    parts.prop_map(|(s1, v1, s2, v2)| UCoord::new(s1, v1, s2, v2)).boxed()
}

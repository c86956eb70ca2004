//! Seeded samplers for rational test data.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thetapos_core::linalg::{frac, int, Rat};
use thetapos_core::semigroup::{boundary_from_ints, interior_from_ints, UCoord, UrElem};
use thetapos_core::somodel::SOModel;

/// Deterministic generator for a seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n/d` with `1 <= n <= 12`, `1 <= d <= 6`.
pub fn pos_rat<R: Rng>(r: &mut R) -> Rat {
    frac(r.random_range(1..=12), r.random_range(1..=6))
}

/// Nonnegative rational, zero about a quarter of the time.
pub fn nonneg_rat<R: Rng>(r: &mut R) -> Rat {
    if r.random_range(0..4) == 0 {
        Rat::zero()
    } else {
        pos_rat(r)
    }
}

fn middle<R: Rng>(r: &mut R, m: usize) -> Vec<i64> {
    (0..m - 2).map(|_| r.random_range(-4..=4)).collect()
}

/// Point of the open cone of the standard `J`.
pub fn interior<R: Rng>(r: &mut R, m: usize) -> Vec<Rat> {
    let a = r.random_range(1..=5);
    let k = r.random_range(1..=8);
    let ys = middle(r, m);
    interior_from_ints(a, k, &ys)
}

/// Nonzero point of the boundary of the cone of the standard `J`.
pub fn boundary<R: Rng>(r: &mut R, m: usize) -> Vec<Rat> {
    let a = r.random_range(1..=5);
    let ys = middle(r, m);
    boundary_from_ints(a, &ys)
}

/// Interior coordinates in order 1212.
pub fn interior_coords<R: Rng>(r: &mut R, model: &SOModel) -> UCoord {
    let s1 = pos_rat(r);
    let v1 = interior(r, model.m);
    let s2 = pos_rat(r);
    let v2 = interior(r, model.m);
    UCoord::new(s1, v1, s2, v2)
}

/// Coordinates with at least one parameter on the boundary of its cone.
pub fn boundary_coords<R: Rng>(r: &mut R, model: &SOModel) -> UCoord {
    let mut u = interior_coords(r, model);
    match r.random_range(0..4) {
        0 => u.s1 = Rat::zero(),
        1 => u.v1 = boundary(r, model.m),
        2 => u.s2 = Rat::zero(),
        _ => u.v2 = boundary(r, model.m),
    }
    u
}

/// Parameters in the domain of stratum `i` (0-based, same order as the strata table).
pub fn stratum_params<R: Rng>(r: &mut R, model: &SOModel, i: usize) -> UCoord {
    let m = model.m;
    let z = || vec![Rat::zero(); m];
    loop {
        let (ps1, kv1, ps2, kv2) = STRATUM_SHAPES[i];
        let s = |r: &mut R, p: bool| if p { pos_rat(r) } else { Rat::zero() };
        let v = |r: &mut R, k: u8| match k {
            0 => z(),
            1 => boundary(r, m),
            _ => interior(r, m),
        };
        let s1 = s(r, ps1);
        let v1 = v(r, kv1);
        let s2 = s(r, ps2);
        let v2 = v(r, kv2);
        if i == 8 && model.b_j(&v1, &v2).is_zero() {
            continue;
        }
        return UCoord::new(s1, v1, s2, v2);
    }
}

/// `(s₁ > 0, v₁ kind, s₂ > 0, v₂ kind)` with kinds 0 zero, 1 boundary, 2 interior.
const STRATUM_SHAPES: [(bool, u8, bool, u8); 16] = [
    (false, 0, false, 0),
    (true, 0, false, 0),
    (false, 1, false, 0),
    (false, 2, false, 0),
    (false, 1, true, 0),
    (false, 2, true, 0),
    (true, 1, false, 0),
    (true, 2, false, 0),
    (false, 1, true, 1),
    (false, 1, true, 2),
    (false, 2, true, 1),
    (false, 2, true, 2),
    (true, 1, true, 0),
    (true, 2, true, 0),
    (true, 2, true, 1),
    (true, 2, true, 2),
];

/// Member of `U_r`, the identity about a tenth of the time.
pub fn ur_elem<R: Rng>(r: &mut R, rr: &Rat) -> UrElem {
    if r.random_range(0..10) == 0 {
        return UrElem::identity(rr.clone());
    }
    let a = nonneg_rat(r);
    let b = nonneg_rat(r);
    let top = rr * &a * &b;
    let c = &top * frac(r.random_range(0..=8), 8);
    UrElem { a, b, c, r: rr.clone() }
}

/// `k` strictly increasing rationals.
pub fn increasing<R: Rng>(r: &mut R, k: usize) -> Vec<Rat> {
    let mut t = frac(r.random_range(-12..=12), r.random_range(1..=4));
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(t.clone());
        t += pos_rat(r);
    }
    out
}

/// Small integer vector as rationals.
pub fn int_vec<R: Rng>(r: &mut R, n: usize, lo: i64, hi: i64) -> Vec<Rat> {
    (0..n).map(|_| int(r.random_range(lo..=hi))).collect()
}

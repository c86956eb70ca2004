//! Isotropic flags `(line ⊂ plane)` of SO(3,q): transversality, relative
//! position, diamonds, positive tuples and the positive circle.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::linalg::{vecops, Matrix, Rat};
use crate::semigroup::{decode, is_positive, Order, STRATA};
use crate::somodel::{exp_nilpotent, principal_sl2, GroupElem, SOModel, ThetaBase};

/// An isotropic line contained in an isotropic plane, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    /// Spanning vector of the line, first nonzero entry 1.
    pub line: Vec<Rat>,
    /// Reduced row echelon basis of the plane.
    pub plane: [Vec<Rat>; 2],
}

impl Flag {
    /// Validates and canonicalizes `(line, plane)`.
    pub fn new(m: &SOModel, line: &[Rat], plane: &[Vec<Rat>]) -> Result<Flag, Error> {
        if line.len() != m.n || plane.len() != 2 || plane.iter().any(|p| p.len() != m.n) {
            return Err(Error::Dimension(alloc::format!("flag vectors must have length {}", m.n)));
        }
        let (r, piv) = Matrix::from_rows(plane).rref();
        if piv.len() != 2 {
            return Err(Error::InvalidFlag("plane basis has rank < 2".into()));
        }
        if vecops::is_zero(line) {
            return Err(Error::InvalidFlag("zero line".into()));
        }
        let mut with_line = plane.to_vec();
        with_line.push(line.to_vec());
        if Matrix::from_rows(&with_line).rank() != 2 {
            return Err(Error::InvalidFlag("line is not contained in the plane".into()));
        }
        for a in plane {
            for b in plane {
                if !m.b_q(a, b).is_zero() {
                    return Err(Error::InvalidFlag("plane is not isotropic".into()));
                }
            }
        }
        Ok(Flag { line: vecops::normalize_pivot(line), plane: [r.row(0), r.row(1)] })
    }

    /// Plane basis as a list.
    pub fn plane_rows(&self) -> Vec<Vec<Rat>> {
        self.plane.to_vec()
    }
}

/// The flag `E_{(v₁,v₂)} = (ℝv₁, ℝv₁ ⊕ ℝv₂)`.
pub fn flag_from(m: &SOModel, v1: &[Rat], v2: &[Rat]) -> Result<Flag, Error> {
    Flag::new(m, v1, &[v1.to_vec(), v2.to_vec()])
}

/// Basis vector named `e1`, `e2`, `e3`, `g1`, …, `f3`, `f2`, `f1`.
pub fn basis_vector(m: &SOModel, name: &str) -> Option<Vec<Rat>> {
    m.basis_labels.iter().position(|l| l == name).map(|i| vecops::unit(m.n, i))
}

fn named_flag(m: &SOModel, a: &str, b: &str) -> Flag {
    let v = |s| basis_vector(m, s).expect("basis name");
    flag_from(m, &v(a), &v(b)).expect("isotropic representative")
}

/// `E⁺ = (ℝe₁, ℝe₁ ⊕ ℝe₂)` and `E⁻ = (ℝf₁, ℝf₁ ⊕ ℝf₂)`.
pub fn standard_flags(m: &SOModel) -> (Flag, Flag) {
    (named_flag(m, "e1", "e2"), named_flag(m, "f1", "f2"))
}

/// `g · F`.
pub fn act(m: &SOModel, g: &GroupElem, f: &Flag) -> Flag {
    let plane: Vec<Vec<Rat>> = f.plane.iter().map(|p| g.apply(p)).collect();
    Flag::new(m, &g.apply(&f.line), &plane).expect("group elements map flags to flags")
}

fn gram(m: &SOModel, a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Matrix {
    Matrix::from_rows(&a.iter().map(|x| b.iter().map(|y| m.b_q(x, y)).collect()).collect::<Vec<_>>())
}

/// `b_Q(ℓ, ℓ′) ≠ 0` and the Gram matrix of the two planes is invertible.
pub fn is_transverse(m: &SOModel, f: &Flag, g: &Flag) -> bool {
    !m.b_q(&f.line, &g.line).is_zero() && gram(m, &f.plane, &g.plane).rank() == 2
}

/// Invariants of a pair of flags under SO(3,q).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    /// Rank of the Gram matrix of the planes.
    pub gram_rank: u8,
    /// `b_Q(ℓ, ℓ′) ≠ 0`.
    pub lines_paired: bool,
    /// `b_Q(ℓ, P′) = 0`.
    pub line_perp_plane: bool,
    /// `b_Q(P, ℓ′) = 0`.
    pub plane_perp_line: bool,
    /// `dim(P ∩ P′)`.
    pub meet_dim: u8,
    /// `ℓ ⊂ P′`.
    pub line_in_other_plane: bool,
    /// `ℓ′ ⊂ P`.
    pub other_line_in_plane: bool,
    /// `dim(P ∩ P′^⊥)`.
    pub perp_dim: u8,
    /// `ℓ = ℓ′`.
    pub same_line: bool,
}

fn contains(plane: &[Vec<Rat>], v: &[Rat]) -> bool {
    let mut rows = plane.to_vec();
    rows.push(v.to_vec());
    Matrix::from_rows(&rows).rank() == 2
}

/// Computes the [`Signature`] of `(f, g)`.
pub fn signature(m: &SOModel, f: &Flag, g: &Flag) -> Signature {
    let gm = gram(m, &f.plane, &g.plane);
    let rank = gm.rank() as u8;
    let mut both = f.plane_rows();
    both.extend(g.plane_rows());
    let line_perp = g.plane.iter().all(|p| m.b_q(&f.line, p).is_zero());
    let perp_line = f.plane.iter().all(|p| m.b_q(p, &g.line).is_zero());
    Signature {
        gram_rank: rank,
        lines_paired: !m.b_q(&f.line, &g.line).is_zero(),
        line_perp_plane: line_perp,
        plane_perp_line: perp_line,
        meet_dim: (4 - Matrix::from_rows(&both).rank()) as u8,
        line_in_other_plane: contains(&g.plane, &f.line),
        other_line_in_plane: contains(&f.plane, &g.line),
        perp_dim: 2 - rank,
        same_line: f.line == g.line,
    }
}

/// Representatives `E_{(v₁,v₂)}` of the 16 relative positions to E⁻,
/// in the order of [`STRATA`].
pub const REPRESENTATIVES: [(&str, &str); 16] = [
    ("f1", "f2"),
    ("f2", "f1"),
    ("f1", "f3"),
    ("f1", "e2"),
    ("f3", "f1"),
    ("e2", "f1"),
    ("f2", "f3"),
    ("f2", "e1"),
    ("f3", "e2"),
    ("f3", "e1"),
    ("e2", "f3"),
    ("e2", "e1"),
    ("f3", "f2"),
    ("e1", "f2"),
    ("e1", "f3"),
    ("e1", "e2"),
];

const fn sig(v: [u8; 9]) -> Signature {
    Signature {
        gram_rank: v[0],
        lines_paired: v[1] == 1,
        line_perp_plane: v[2] == 1,
        plane_perp_line: v[3] == 1,
        meet_dim: v[4],
        line_in_other_plane: v[5] == 1,
        other_line_in_plane: v[6] == 1,
        perp_dim: v[7],
        same_line: v[8] == 1,
    }
}

/// Signature of `(E⁻, representative)` for each class, indexed like [`STRATA`].
pub const CALIBRATION: [Signature; 16] = [
    sig([0, 0, 1, 1, 2, 1, 1, 2, 1]),
    sig([0, 0, 1, 1, 2, 1, 1, 2, 0]),
    sig([0, 0, 1, 1, 1, 1, 1, 2, 1]),
    sig([1, 0, 1, 1, 1, 1, 1, 1, 1]),
    sig([0, 0, 1, 1, 1, 1, 0, 2, 0]),
    sig([1, 0, 1, 0, 1, 1, 0, 1, 0]),
    sig([0, 0, 1, 1, 1, 0, 1, 2, 0]),
    sig([1, 0, 0, 1, 1, 0, 1, 1, 0]),
    sig([1, 0, 1, 1, 0, 0, 0, 1, 0]),
    sig([1, 0, 0, 1, 0, 0, 0, 1, 0]),
    sig([1, 0, 1, 0, 0, 0, 0, 1, 0]),
    sig([2, 0, 0, 0, 0, 0, 0, 0, 0]),
    sig([0, 0, 1, 1, 1, 0, 0, 2, 0]),
    sig([1, 1, 0, 0, 1, 0, 0, 1, 0]),
    sig([1, 1, 0, 0, 0, 0, 0, 1, 0]),
    sig([2, 1, 0, 0, 0, 0, 0, 0, 0]),
];

/// Recomputes [`CALIBRATION`] from [`REPRESENTATIVES`].
pub fn calibrate(m: &SOModel) -> Vec<Signature> {
    let (_, minus) = standard_flags(m);
    REPRESENTATIVES.iter().map(|(a, b)| signature(m, &minus, &named_flag(m, a, b))).collect()
}

/// Relative position of a pair of flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPosition {
    /// Index into [`STRATA`].
    pub index: usize,
    /// Label such as `"s1"`.
    pub label: &'static str,
    /// Invariants of the pair.
    pub signature: Signature,
}

/// Classifies `(f, g)` into one of the 16 classes.
pub fn relative_position(m: &SOModel, f: &Flag, g: &Flag) -> Result<PairPosition, Error> {
    let s = signature(m, f, g);
    let index = CALIBRATION.iter().position(|c| *c == s).ok_or(Error::CalibrationIncomplete)?;
    Ok(PairPosition { index, label: STRATA[index].0, signature: s })
}

/// The unique `u ∈ U_Θ` with `u · E⁻ = x`, for `x` transverse to E⁺.
pub fn recover_unipotent(m: &SOModel, x: &Flag) -> Result<GroupElem, Error> {
    let (plus, minus) = standard_flags(m);
    if !is_transverse(m, &plus, x) {
        return Err(Error::NotTransverse);
    }
    let (n, f1, f2) = (m.n, m.n - 1, m.n - 2);
    let l = vecops::scale(&x.line[f1].recip(), &x.line);
    let other = x.plane.iter().find(|p| !vecops::parallel(p, &l)).expect("rank two");
    let p0 = vecops::sub(other, &vecops::scale(&other[f1], &l));
    if p0[f2].is_zero() {
        return Err(Error::NotTransverse);
    }
    let p = vecops::scale(&p0[f2].recip(), &p0);
    let a = l[f2].clone();
    let v = m.j.apply(&p[2..n - 2]);
    let w = vecops::neg(&m.j.apply(&l[2..n - 2]));
    let c = &p[0] - &a * m.q_j(&v);
    let u = &(&(&m.x1(&a) * &m.x2(&v)) * &m.y(&w)) * &m.z(&c);
    if act(m, &u, &minus) == *x {
        Ok(u)
    } else {
        Err(Error::NotTransverse)
    }
}

/// Data of `u` relevant to positivity up to `L_Θ`: `(s₁, s₂, v₁, v₂)` in order 1212.
fn positive_variant(m: &SOModel, u: &GroupElem) -> Option<(Rat, Rat, Vec<Rat>, Vec<Rat>)> {
    let c = decode(m, u, Order::O1212).ok()?;
    let ok = (&c.s1 * &c.s2).is_positive()
        && m.q_j(&c.v1).is_positive()
        && m.q_j(&c.v2).is_positive()
        && m.b_j(&c.v1, &c.v2).is_positive();
    ok.then_some((c.s1, c.s2, c.v1, c.v2))
}

fn common_variant(m: &SOModel, us: &[GroupElem]) -> bool {
    let mut vs: Vec<Vec<Rat>> = Vec::new();
    let mut sign = None;
    for u in us {
        let Some((s1, _, v1, v2)) = positive_variant(m, u) else {
            return false;
        };
        let s = s1.is_positive();
        if *sign.get_or_insert(s) != s {
            return false;
        }
        vs.push(v1);
        vs.push(v2);
    }
    vs.iter().enumerate().all(|(i, a)| vs[i + 1..].iter().all(|b| m.b_j(a, b).is_positive()))
}

/// Positivity of the triple `(E⁺, x, E⁻)`.
pub fn positive_triple_std(m: &SOModel, x: &Flag) -> bool {
    match recover_unipotent(m, x) {
        Ok(u) => common_variant(m, &[u]),
        Err(_) => false,
    }
}

/// Which diamond with extremities `E⁺`, `E⁻`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diamond {
    /// `U_Θ^{>0} · E⁻`.
    D,
    /// `(U_Θ^{>0})⁻¹ · E⁻`.
    Dopp,
}

/// Membership of `x` in a diamond.
pub fn diamond_membership(m: &SOModel, x: &Flag, which: Diamond) -> bool {
    let Ok(u) = recover_unipotent(m, x) else {
        return false;
    };
    let g = match which {
        Diamond::D => u,
        Diamond::Dopp => u.inverse().expect("unipotent"),
    };
    is_positive(m, &g).unwrap_or(false)
}

/// Positivity of `(E⁺, f₂, …, f_{n−1}, E⁻)` given the interior flags.
pub fn positive_tuple_std(m: &SOModel, interior: &[Flag]) -> bool {
    let (plus, minus) = standard_flags(m);
    if interior.is_empty() {
        return is_transverse(m, &plus, &minus);
    }
    let mut us: Vec<GroupElem> = Vec::new();
    let mut prefix_inv = Matrix::identity(m.n);
    for f in interior.iter().rev() {
        let Ok(u) = recover_unipotent(m, &act(m, &prefix_inv, f)) else {
            return false;
        };
        prefix_inv = &u.inverse().expect("unipotent") * &prefix_inv;
        us.push(u);
    }
    common_variant(m, &us)
}

/// Each consecutive quadruple `(E⁺, fᵢ, fᵢ₊₁, E⁻)` is positive.
pub fn quadruple_criterion(m: &SOModel, interior: &[Flag]) -> bool {
    match interior.len() {
        0 => positive_tuple_std(m, interior),
        1 => positive_triple_std(m, &interior[0]),
        _ => interior.windows(2).all(|w| positive_tuple_std(m, w)),
    }
}

/// An orthonormal-style frame adapted to a transverse pair of flags.
struct Frame {
    basis: Matrix,
    model: SOModel,
}

fn find_timelike(form: &Matrix) -> Option<Vec<Rat>> {
    let q = |v: &[Rat]| vecops::dot(v, &form.apply(v));
    let b = |v: &[Rat], w: &[Rat]| vecops::dot(v, &form.apply(w));
    let mut space: Vec<Vec<Rat>> = (0..form.nrows()).map(|i| vecops::unit(form.nrows(), i)).collect();
    while !space.is_empty() {
        let mut pick = space.iter().position(|v| !q(v).is_zero()).map(|i| space[i].clone());
        if pick.is_none() {
            'outer: for i in 0..space.len() {
                for k in i + 1..space.len() {
                    let v = vecops::add(&space[i], &space[k]);
                    if !q(&v).is_zero() {
                        pick = Some(v);
                        break 'outer;
                    }
                }
            }
        }
        let u = pick?;
        let qu = q(&u);
        if qu.is_positive() {
            return Some(u);
        }
        let projected: Vec<Vec<Rat>> =
            space.iter().map(|v| vecops::sub(v, &vecops::scale(&(b(v, &u) / &qu), &u))).collect();
        let (r, piv) = Matrix::from_rows(&projected).rref();
        space = (0..piv.len()).map(|i| r.row(i)).collect();
    }
    None
}

fn frame(m: &SOModel, a: &Flag, b: &Flag) -> Result<Frame, Error> {
    if !is_transverse(m, a, b) {
        return Err(Error::NotTransverse);
    }
    let e1 = a.line.clone();
    let f1 = vecops::scale(&m.b_q(&e1, &b.line).recip(), &b.line);
    let pick = |f: &Flag| f.plane.iter().find(|p| !vecops::parallel(p, &f.line)).cloned().expect("rank two");
    let p = pick(a);
    let e2 = vecops::sub(&p, &vecops::scale(&m.b_q(&p, &f1), &e1));
    let pp = pick(b);
    let f2 = vecops::sub(&pp, &vecops::scale(&m.b_q(&pp, &e1), &f1));
    let k = m.b_q(&e2, &f2);
    if k.is_zero() {
        return Err(Error::NotTransverse);
    }
    let f2 = vecops::scale(&(-k.recip()), &f2);
    let rows: Vec<Vec<Rat>> = [&e1, &e2, &f2, &f1].iter().map(|v| m.qmat.apply(v)).collect();
    let w = Matrix::from_rows(&rows).kernel();
    let jp = gram(m, &w, &w);
    let axis = find_timelike(&jp.inverse().ok_or(Error::NotTransverse)?).ok_or(Error::NotTransverse)?;
    let model = SOModel::with_middle_form(jp, axis)?;
    let mut cols = vec![e1, e2];
    cols.extend(w);
    cols.push(f2);
    cols.push(f1);
    Ok(Frame { basis: Matrix::from_cols(&cols), model })
}

/// Positivity of an arbitrary tuple `(f₁, …, f_n)` of flags, `n >= 2`.
///
/// The pair `(f₁, f_n)` is carried to the standard pair of a model whose
/// middle form is the Gram matrix of the complement of the adapted frame.
pub fn positive_tuple(m: &SOModel, flags: &[Flag]) -> Result<bool, Error> {
    if flags.len() < 2 {
        return Err(Error::Dimension("a tuple needs at least two flags".into()));
    }
    let (a, b) = (&flags[0], &flags[flags.len() - 1]);
    let fr = match frame(m, a, b) {
        Ok(fr) => fr,
        Err(Error::NotTransverse) => return Ok(false),
        Err(e) => return Err(e),
    };
    let inv = fr.basis.inverse().expect("frame is a basis");
    let moved: Vec<Flag> = flags[1..flags.len() - 1]
        .iter()
        .map(|f| {
            let plane: Vec<Vec<Rat>> = f.plane.iter().map(|p| inv.apply(p)).collect();
            Flag::new(&fr.model, &inv.apply(&f.line), &plane)
        })
        .collect::<Result<_, _>>()?;
    Ok(positive_tuple_std(&fr.model, &moved))
}

/// A point of the positive circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CircleParam {
    /// A finite rational parameter.
    Finite(Rat),
    /// The point at infinity.
    Infinity,
}

/// `exp(t F) · E⁺` for the Θ-principal `F`, and `E⁻` at infinity.
pub fn circle_point(m: &SOModel, base: &ThetaBase, t: &CircleParam) -> Flag {
    let (plus, minus) = standard_flags(m);
    match t {
        CircleParam::Infinity => minus,
        CircleParam::Finite(t) => {
            let f = principal_sl2(base).f;
            let g = exp_nilpotent(&f.scale(t)).expect("F is nilpotent");
            act(m, &g, &plus)
        }
    }
}

/// For `t₁ < … < t_k`, positivity of `(circle(∞), circle(t_k), …, circle(t₁))`.
///
/// Translating by `exp(−t₁F)`, which fixes `E⁻`, reduces to the standard tuple
/// `(E⁺, circle(t₂−t₁), …, circle(t_k−t₁), E⁻)` read backwards.
pub fn circle_tuple_positive(m: &SOModel, base: &ThetaBase, ts: &[Rat]) -> Result<bool, Error> {
    if ts.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Dimension("parameters must be strictly increasing".into()));
    }
    let Some(t0) = ts.first() else {
        return Ok(true);
    };
    let flags: Vec<Flag> =
        ts[1..].iter().map(|t| circle_point(m, base, &CircleParam::Finite(t - t0))).collect();
    Ok(positive_tuple_std(m, &flags))
}

/// The lift of `w_Δ = (s₁s₂s₃)³`, exchanging `E⁺` and `E⁻`.
pub fn longest_lift(m: &SOModel) -> GroupElem {
    m.weyl_lift_word(&[1, 2, 3, 1, 2, 3, 1, 2, 3])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::somodel::model;

    use crate::linalg::{frac, int};
    use crate::semigroup::{f_gamma, interior_from_ints, boundary_from_ints, UCoord};

    fn v(m: &SOModel, s: &str) -> Vec<Rat> {
        basis_vector(m, s).unwrap()
    }

    fn positive_u(m: &SOModel, k: i64) -> GroupElem {
        let ys: Vec<i64> = (0..m.m as i64 - 2).map(|i| i - k).collect();
        let zs: Vec<i64> = (0..m.m as i64 - 2).map(|i| k * i + 1).collect();
        f_gamma(m, &UCoord::new(frac(k, 2), interior_from_ints(1, k, &ys), int(k), interior_from_ints(k, 1, &zs)))
    }

    #[test]
    fn standard_pair() {
        let m = model(4).unwrap();
        let (p, n) = standard_flags(&m);
        assert!(m.b_q(&v(&m, "e1"), &v(&m, "e2")).is_zero());
        assert_ne!(p, n);
        let w = longest_lift(&m);
        assert_eq!(act(&m, &w, &p), n);
        assert_eq!(act(&m, &w, &n), p);
        let stab = &m.x1(&int(3)) * &m.y(&vecops::ints(&[1, 2, 0]));
        assert_eq!(act(&m, &stab, &p), p);
    }

    #[test]
    fn flag_construction() {
        let m = model(4).unwrap();
        let (_, minus) = standard_flags(&m);
        assert_eq!(flag_from(&m, &v(&m, "f1"), &v(&m, "f2")).unwrap(), minus);
        let twice = vecops::scale(&int(2), &v(&m, "f2"));
        assert_eq!(flag_from(&m, &v(&m, "f1"), &twice).unwrap(), minus);
        assert!(matches!(flag_from(&m, &v(&m, "e1"), &v(&m, "f1")), Err(Error::InvalidFlag(_))));
        assert!(matches!(flag_from(&m, &v(&m, "e1"), &v(&m, "e1")), Err(Error::InvalidFlag(_))));
    }

    #[test]
    fn calibration_regenerates() {
        for q in [4, 5, 6] {
            let m = model(q).unwrap();
            let cal = calibrate(&m);
            assert_eq!(cal.as_slice(), CALIBRATION.as_slice());
            let mut sorted = cal.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), 16);
            let (_, minus) = standard_flags(&m);
            let transverse: Vec<usize> = (0..16)
                .filter(|&i| {
                    let (a, b) = REPRESENTATIVES[i];
                    is_transverse(&m, &minus, &named_flag(&m, a, b))
                })
                .collect();
            assert_eq!(transverse, vec![15]);
        }
    }

    #[test]
    fn position_examples() {
        let m = model(5).unwrap();
        let (plus, minus) = standard_flags(&m);
        let f = |a, b| named_flag(&m, a, b);
        assert_eq!(relative_position(&m, &minus, &f("f2", "f1")).unwrap().label, "s1");
        assert_eq!(relative_position(&m, &minus, &minus).unwrap().label, "e");
        assert_eq!(relative_position(&m, &minus, &f("e2", "e1")).unwrap().label, "(s2s3s2)s1(s2s3s2)");
        assert!(is_transverse(&m, &plus, &minus));
        assert!(!is_transverse(&m, &minus, &f("f1", "f3")));
        let x = act(&m, &positive_u(&m, 2), &minus);
        assert!(is_transverse(&m, &plus, &x));
        assert_eq!(relative_position(&m, &minus, &x).unwrap().index, 15);
    }

    #[test]
    fn positions_of_strata() {
        let m = model(5).unwrap();
        let (_, minus) = standard_flags(&m);
        let z = vecops::zeros(m.m);
        let bd = boundary_from_ints(1, &[1, 0]);
        let bd2 = boundary_from_ints(3, &[0, 2]);
        let inn = interior_from_ints(2, 3, &[1, 1]);
        let inn2 = interior_from_ints(1, 1, &[-1, 0]);
        let (p, q, o) = (frac(3, 2), int(2), Rat::zero());
        let samples = [
            (o.clone(), z.clone(), o.clone(), z.clone()),
            (p.clone(), z.clone(), o.clone(), z.clone()),
            (o.clone(), bd.clone(), o.clone(), z.clone()),
            (o.clone(), inn.clone(), o.clone(), z.clone()),
            (o.clone(), bd.clone(), q.clone(), z.clone()),
            (o.clone(), inn.clone(), q.clone(), z.clone()),
            (p.clone(), bd.clone(), o.clone(), z.clone()),
            (p.clone(), inn.clone(), o.clone(), z.clone()),
            (o.clone(), bd.clone(), q.clone(), bd2.clone()),
            (o.clone(), bd.clone(), q.clone(), inn2.clone()),
            (o.clone(), inn.clone(), q.clone(), bd2.clone()),
            (o.clone(), inn.clone(), q.clone(), inn2.clone()),
            (p.clone(), bd.clone(), q.clone(), z.clone()),
            (p.clone(), inn.clone(), q.clone(), z.clone()),
            (p.clone(), inn.clone(), q.clone(), bd2.clone()),
            (p.clone(), inn.clone(), q.clone(), inn2.clone()),
        ];
        for (i, (s1, v1, s2, v2)) in samples.into_iter().enumerate() {
            let g = f_gamma(&m, &UCoord::new(s1, v1, s2, v2));
            assert_eq!(relative_position(&m, &minus, &act(&m, &g, &minus)).unwrap().index, i, "{}", STRATA[i].0);
        }
    }

    #[test]
    fn recovery() {
        let m = model(5).unwrap();
        let (_, minus) = standard_flags(&m);
        assert!(recover_unipotent(&m, &minus).unwrap().is_identity());
        let c = UCoord::new(int(2), interior_from_ints(1, 3, &[1, 0]), frac(1, 3), interior_from_ints(2, 1, &[0, 1]));
        let x = act(&m, &f_gamma(&m, &c), &minus);
        let u = recover_unipotent(&m, &x).unwrap();
        assert_eq!(decode(&m, &u, Order::O1212).unwrap(), c);
        let g = &(&(&m.x1(&int(-3)) * &m.x2(&vecops::ints(&[1, -2, 0, 5]))) * &m.y(&vecops::ints(&[0, 1, 1, 2])))
            * &m.z(&frac(7, 2));
        let y = act(&m, &g, &minus);
        assert_eq!(act(&m, &recover_unipotent(&m, &y).unwrap(), &minus), y);
        assert_eq!(recover_unipotent(&m, &named_flag(&m, "f2", "f1")), Err(Error::NotTransverse));
    }

    #[test]
    fn triples_and_diamonds() {
        let m = model(4).unwrap();
        let (plus, minus) = standard_flags(&m);
        let u = positive_u(&m, 3);
        let x = act(&m, &u, &minus);
        let y = act(&m, &u.inverse().unwrap(), &minus);
        assert!(positive_triple_std(&m, &x));
        assert!(!positive_triple_std(&m, &minus));
        assert!(!positive_triple_std(&m, &plus));
        assert!(positive_triple_std(&m, &y));
        assert!(diamond_membership(&m, &x, Diamond::D));
        assert!(!diamond_membership(&m, &x, Diamond::Dopp));
        assert!(diamond_membership(&m, &y, Diamond::Dopp));
        assert!(is_transverse(&m, &x, &y));
        let w = longest_lift(&m);
        for f in [&x, &y] {
            assert_eq!(positive_triple_std(&m, f), positive_triple_std(&m, &act(&m, &w, f)));
        }
        let not_pos = act(&m, &f_gamma(&m, &UCoord::new(int(1), interior_from_ints(1, 1, &[0]), int(-1), interior_from_ints(1, 1, &[1]))), &minus);
        assert!(!positive_triple_std(&m, &not_pos));
    }

    #[test]
    fn tuples() {
        let m = model(5).unwrap();
        let (_, minus) = standard_flags(&m);
        let (u1, u2) = (positive_u(&m, 1), positive_u(&m, 2));
        let f3 = act(&m, &u1, &minus);
        let f2 = act(&m, &(&u1 * &u2), &minus);
        assert!(positive_tuple_std(&m, &[f2.clone(), f3.clone()]));
        assert!(quadruple_criterion(&m, &[f2.clone(), f3.clone()]));
        assert!(!positive_tuple_std(&m, &[f3.clone(), f2.clone()]));
        assert!(!positive_tuple_std(&m, &[f2.clone(), f2.clone()]));
        let f1 = act(&m, &(&(&u1 * &u2) * &positive_u(&m, 3)), &minus);
        let fs = [f1, f2, f3];
        assert!(positive_tuple_std(&m, &fs));
        assert_eq!(positive_tuple_std(&m, &fs), quadruple_criterion(&m, &fs));
    }

    #[test]
    fn circle() {
        let m = model(4).unwrap();
        let base = crate::somodel::theta_base(&m).unwrap();
        let (plus, minus) = standard_flags(&m);
        assert_eq!(circle_point(&m, &base, &CircleParam::Finite(Rat::zero())), plus);
        assert_eq!(circle_point(&m, &base, &CircleParam::Infinity), minus);
        let c1 = circle_point(&m, &base, &CircleParam::Finite(int(1)));
        assert_eq!(Flag::new(&m, &c1.line, &c1.plane_rows()).unwrap(), c1);
        let e = principal_sl2(&base).e;
        for t in [int(1), frac(1, 3), int(5)] {
            let lhs = circle_point(&m, &base, &CircleParam::Finite(t.clone()));
            let rhs = act(&m, &exp_nilpotent(&e.scale(&t.recip())).unwrap(), &minus);
            assert_eq!(lhs, rhs);
        }
        assert!(circle_tuple_positive(&m, &base, &[int(-1), frac(1, 2), int(4)]).unwrap());
        assert!(circle_tuple_positive(&m, &base, &[int(0), int(1), int(2), int(3)]).unwrap());
        assert!(circle_tuple_positive(&m, &base, &[int(2), int(1)]).is_err());
    }

    #[test]
    fn general_pairs() {
        let m = model(4).unwrap();
        let (plus, minus) = standard_flags(&m);
        let x = act(&m, &positive_u(&m, 2), &minus);
        let bad = named_flag(&m, "f2", "f1");
        assert!(positive_tuple(&m, &[plus.clone(), x.clone(), minus.clone()]).unwrap());
        assert!(!positive_tuple(&m, &[plus.clone(), bad.clone(), minus.clone()]).unwrap());
        let g = &(&m.weyl_lift_word(&[1, 2]) * &m.x1(&int(2))) * &(&m.x2(&vecops::ints(&[1, 3, -1])) * &m.weyl_lift(3));
        let mv = |f: &Flag| act(&m, &g, f);
        assert!(positive_tuple(&m, &[mv(&plus), mv(&x), mv(&minus)]).unwrap());
        assert!(positive_tuple(&m, &[mv(&minus), mv(&x), mv(&plus)]).unwrap());
        assert!(!positive_tuple(&m, &[mv(&plus), mv(&bad), mv(&minus)]).unwrap());
        assert!(!positive_tuple(&m, &[plus.clone(), x, plus]).unwrap());
    }
}

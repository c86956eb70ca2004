//! The nonnegative and positive unipotent semigroups of SO(3,q).
//!
//! Elements are parametrized by `F(s₁, v₁, s₂, v₂)` in one of the two
//! reduced orders `1212` (`x₁(s₁)x₂(v₁)x₁(s₂)x₂(v₂)`) and `2121`
//! (`x₂(v₂)x₁(s₂)x₂(v₁)x₁(s₁)`).

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::linalg::{int, vecops, Matrix, Rat};
use crate::somodel::{ConeStatus, GroupElem, SOModel};

/// Reduced word used for the parametrization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    /// `x₁(s₁) x₂(v₁) x₁(s₂) x₂(v₂)`.
    O1212,
    /// `x₂(v₂) x₁(s₂) x₂(v₁) x₁(s₁)`.
    O2121,
}

impl Order {
    /// `"1212"` or `"2121"`.
    pub fn as_str(self) -> &'static str {
        match self {
            Order::O1212 => "1212",
            Order::O2121 => "2121",
        }
    }

    /// Inverse of [`Order::as_str`].
    pub fn parse(s: &str) -> Result<Order, Error> {
        match s {
            "1212" => Ok(Order::O1212),
            "2121" => Ok(Order::O2121),
            _ => Err(Error::Parse(alloc::format!("unknown order {s:?}"))),
        }
    }
}

/// Coordinates `(s₁, v₁, s₂, v₂)` in a given order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UCoord {
    /// First scalar.
    pub s1: Rat,
    /// First vector.
    pub v1: Vec<Rat>,
    /// Second scalar.
    pub s2: Rat,
    /// Second vector.
    pub v2: Vec<Rat>,
    /// Reduced word.
    pub order: Order,
}

impl UCoord {
    /// Coordinates in order `1212`.
    pub fn new(s1: Rat, v1: Vec<Rat>, s2: Rat, v2: Vec<Rat>) -> Self {
        UCoord { s1, v1, s2, v2, order: Order::O1212 }
    }

    /// All-zero coordinates.
    pub fn zero(m: &SOModel, order: Order) -> Self {
        UCoord { s1: Rat::zero(), v1: vecops::zeros(m.m), s2: Rat::zero(), v2: vecops::zeros(m.m), order }
    }

    /// Scalars positive and both vectors in the open cone.
    pub fn is_interior(&self, m: &SOModel) -> bool {
        self.s1.is_positive()
            && self.s2.is_positive()
            && m.cone_status(&self.v1) == ConeStatus::Interior
            && m.cone_status(&self.v2) == ConeStatus::Interior
    }

    fn check(&self, m: &SOModel) -> Result<(), Error> {
        if self.v1.len() != m.m || self.v2.len() != m.m {
            return Err(Error::Dimension(alloc::format!("vectors must have length {}", m.m)));
        }
        Ok(())
    }
}

/// Location of a quantity in `F(s₁, v₁, s₂, v₂)` (order 1212).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Index {
    /// Counted from the first basis vector.
    Start(usize),
    /// Counted from the last basis vector (`End(1)` is f₁).
    End(usize),
    /// The middle block `e₃, g₁, …, f₃`.
    Middle,
}

/// Entries of `F` read by [`decode`] and [`stratify`]: `(quantity, row, column)`.
pub const ENTRY_MAP: [(&str, Index, Index); 7] = [
    ("s1 + s2", Index::End(2), Index::End(1)),
    ("s2 J^-1 v1", Index::Middle, Index::End(1)),
    ("s2 q(v1)", Index::Start(1), Index::End(1)),
    ("s1 s2 q(v1)", Index::Start(0), Index::End(1)),
    ("J^-1 (v1 + v2)", Index::Middle, Index::End(2)),
    ("q(v1 + v2)", Index::Start(1), Index::End(2)),
    ("s1 q(v1 + v2) + s2 q(v2)", Index::Start(0), Index::End(2)),
];

fn resolve(m: &SOModel, i: Index) -> Vec<usize> {
    match i {
        Index::Start(k) => vec![k],
        Index::End(k) => vec![m.n - k],
        Index::Middle => (2..2 + m.m).collect(),
    }
}

/// Reads the quantity `name` of [`ENTRY_MAP`] from `g`.
pub fn read_entry(m: &SOModel, g: &Matrix, name: &str) -> Vec<Rat> {
    let (_, r, c) = ENTRY_MAP.iter().find(|e| e.0 == name).expect("known entry");
    let col = resolve(m, *c)[0];
    resolve(m, *r).into_iter().map(|row| g[(row, col)].clone()).collect()
}

/// The parametrization map.
pub fn f_gamma(m: &SOModel, u: &UCoord) -> GroupElem {
    let (a, b, c, d) = match u.order {
        Order::O1212 => (m.x1(&u.s1), m.x2(&u.v1), m.x1(&u.s2), m.x2(&u.v2)),
        Order::O2121 => (m.x2(&u.v2), m.x1(&u.s2), m.x2(&u.v1), m.x1(&u.s1)),
    };
    &(&(&a * &b) * &c) * &d
}

/// Involution `g ↦ h g⁻¹ h` exchanging the two orders.
fn order_swap(m: &SOModel, g: &Matrix) -> Matrix {
    let mut h = Matrix::identity(m.n);
    h[(1, 1)] = int(-1);
    h[(m.n - 2, m.n - 2)] = int(-1);
    let gi = g.inverse().expect("unipotent");
    &(&h * &gi) * &h
}

fn decode1212(m: &SOModel, g: &Matrix) -> Result<UCoord, Error> {
    let one = |name| read_entry(m, g, name).remove(0);
    let sigma = one("s1 + s2");
    let qv = one("s2 q(v1)");
    let r = one("s1 s2 q(v1)");
    if qv.is_zero() {
        return Err(Error::NotInChart);
    }
    let s1 = &r / &qv;
    let s2 = &sigma - &s1;
    if s2.is_zero() {
        return Err(Error::NotInChart);
    }
    let p = m.j.apply(&read_entry(m, g, "s2 J^-1 v1"));
    let v = m.j.apply(&read_entry(m, g, "J^-1 (v1 + v2)"));
    let v1 = vecops::scale(&(Rat::one() / &s2), &p);
    let v2 = vecops::sub(&v, &v1);
    let u = UCoord::new(s1, v1, s2, v2);
    if f_gamma(m, &u) == *g {
        Ok(u)
    } else {
        Err(Error::NotInChart)
    }
}

/// Recovers coordinates from the last two columns of `g`.
pub fn decode(m: &SOModel, g: &GroupElem, order: Order) -> Result<UCoord, Error> {
    if !m.in_u_theta(g) {
        return Err(Error::NotInUTheta);
    }
    match order {
        Order::O1212 => decode1212(m, g),
        Order::O2121 => {
            let mut u = decode1212(m, &order_swap(m, g))?;
            u.order = Order::O2121;
            Ok(u)
        }
    }
}

/// Membership in U_Θ^{>0}.
pub fn is_positive(m: &SOModel, g: &GroupElem) -> Result<bool, Error> {
    match decode(m, g, Order::O1212) {
        Ok(u) => Ok(u.is_interior(m)),
        Err(Error::NotInChart) => Ok(false),
        Err(e) => Err(e),
    }
}

/// `a(v₁, v₂) = q_J(v₁+v₂) v₁ − q_J(v₁)(v₁+v₂)`.
pub fn a_op(m: &SOModel, v1: &[Rat], v2: &[Rat]) -> Vec<Rat> {
    let s = vecops::add(v1, v2);
    vecops::sub(&vecops::scale(&m.q_j(&s), v1), &vecops::scale(&m.q_j(v1), &s))
}

fn braid_formula(m: &SOModel, u: &UCoord) -> Result<(Rat, Vec<Rat>, Rat, Vec<Rat>), Error> {
    if !u.is_interior(m) {
        return Err(Error::BraidBoundary);
    }
    let (s1, s2) = (&u.s1, &u.s2);
    let sum = vecops::add(&u.v1, &u.v2);
    let d = s1 * m.q_j(&sum) + s2 * m.q_j(&u.v2);
    let x = vecops::add(&vecops::scale(s1, &sum), &vecops::scale(s2, &u.v2));
    let qx = m.q_j(&x);
    if d.is_zero() || qx.is_zero() {
        return Err(Error::BraidBoundary);
    }
    let t1 = s1 * s2 * m.q_j(&u.v1) / &d;
    let t2 = &qx / &d;
    let w1 = vecops::scale(&(&d / &qx), &x);
    let inner = vecops::add(
        &vecops::scale(&(s2 * m.q_j(&u.v2)), &u.v1),
        &vecops::scale(s1, &a_op(m, &u.v1, &u.v2)),
    );
    let w2 = vecops::scale(&(s2 / &qx), &inner);
    Ok((t1, w1, t2, w2))
}

/// Change of coordinates from order 1212 to order 2121.
pub fn braid_change(m: &SOModel, u: &UCoord) -> Result<UCoord, Error> {
    u.check(m)?;
    if u.order != Order::O1212 {
        return Err(Error::Dimension("braid_change expects order 1212".into()));
    }
    let (t1, w1, t2, w2) = braid_formula(m, u)?;
    Ok(UCoord { s1: t1, v1: w1, s2: t2, v2: w2, order: Order::O2121 })
}

/// Change of coordinates from order 2121 back to order 1212.
///
/// The closed forms are an involution on interior data, so the same
/// expressions apply with the roles of the two orders exchanged.
pub fn braid_inverse(m: &SOModel, u: &UCoord) -> Result<UCoord, Error> {
    u.check(m)?;
    if u.order != Order::O2121 {
        return Err(Error::Dimension("braid_inverse expects order 2121".into()));
    }
    let (s1, v1, s2, v2) = braid_formula(m, u)?;
    Ok(UCoord { s1, v1, s2, v2, order: Order::O1212 })
}

/// The sixteen strata of U_Θ^{≥0}: label and reduced word in `s₁, s₂, s₃`.
pub const STRATA: [(&str, &[usize]); 16] = [
    ("e", &[]),
    ("s1", &[1]),
    ("s2", &[2]),
    ("s2s3s2", &[2, 3, 2]),
    ("s2s1", &[2, 1]),
    ("(s2s3s2)s1", &[2, 3, 2, 1]),
    ("s1s2", &[1, 2]),
    ("s1(s2s3s2)", &[1, 2, 3, 2]),
    ("(s2s3)s1s2", &[2, 3, 1, 2]),
    ("s2s1(s2s3s2)", &[2, 1, 2, 3, 2]),
    ("(s2s3s2)s1s2", &[2, 3, 2, 1, 2]),
    ("(s2s3s2)s1(s2s3s2)", &[2, 3, 2, 1, 2, 3, 2]),
    ("s1s2s1", &[1, 2, 1]),
    ("s1(s2s3s2)s1", &[1, 2, 3, 2, 1]),
    ("s1(s2s3s2)s1s2", &[1, 2, 3, 2, 1, 2]),
    ("s1(s2s3s2)s1(s2s3s2)", &[1, 2, 3, 2, 1, 2, 3, 2]),
];

#[derive(Clone, Copy, PartialEq, Eq)]
enum S {
    Zero,
    Pos,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum V {
    Zero,
    Bd,
    In,
    /// Boundary, paired with a boundary `v₂` with `b_J(v₁,v₂) ≠ 0`.
    BdPair,
}

const DOMAINS: [(S, V, S, V); 16] = [
    (S::Zero, V::Zero, S::Zero, V::Zero),
    (S::Pos, V::Zero, S::Zero, V::Zero),
    (S::Zero, V::Bd, S::Zero, V::Zero),
    (S::Zero, V::In, S::Zero, V::Zero),
    (S::Zero, V::Bd, S::Pos, V::Zero),
    (S::Zero, V::In, S::Pos, V::Zero),
    (S::Pos, V::Bd, S::Zero, V::Zero),
    (S::Pos, V::In, S::Zero, V::Zero),
    (S::Zero, V::BdPair, S::Pos, V::BdPair),
    (S::Zero, V::Bd, S::Pos, V::In),
    (S::Zero, V::In, S::Pos, V::Bd),
    (S::Zero, V::In, S::Pos, V::In),
    (S::Pos, V::Bd, S::Pos, V::Zero),
    (S::Pos, V::In, S::Pos, V::Zero),
    (S::Pos, V::In, S::Pos, V::Bd),
    (S::Pos, V::In, S::Pos, V::In),
];

fn s_class(s: &Rat) -> Option<S> {
    if s.is_zero() {
        Some(S::Zero)
    } else if s.is_positive() {
        Some(S::Pos)
    } else {
        None
    }
}

fn v_class(m: &SOModel, v: &[Rat]) -> Option<V> {
    match m.cone_status(v) {
        ConeStatus::Zero => Some(V::Zero),
        ConeStatus::BoundaryNonzero => Some(V::Bd),
        ConeStatus::Interior => Some(V::In),
        ConeStatus::Outside => None,
    }
}

/// Index (0-based into [`STRATA`]) of the domain `D_w` containing the
/// 1212 coordinates `u`, if any.
pub fn domain_of(m: &SOModel, u: &UCoord) -> Option<usize> {
    let (a, b) = (s_class(&u.s1)?, s_class(&u.s2)?);
    let (x, y) = (v_class(m, &u.v1)?, v_class(m, &u.v2)?);
    let paired = x == V::Bd && y == V::Bd && !m.b_j(&u.v1, &u.v2).is_zero();
    DOMAINS.iter().position(|&(da, dx, db, dy)| {
        let vm = |d: V, c: V| match d {
            V::BdPair => paired,
            d => d == c,
        };
        da == a && db == b && vm(dx, x) && vm(dy, y)
    })
}

/// A stratum of U_Θ^{≥0} with parameters in its domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    /// Index into [`STRATA`].
    pub index: usize,
    /// Label such as `"(s2s3)s1s2"`.
    pub label: &'static str,
    /// Reduced word in `s₁, s₂, s₃`.
    pub word: &'static [usize],
    /// Parameters in order 1212.
    pub params: UCoord,
}

/// Outcome of [`stratify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stratification {
    /// `g ∈ U_Θ^{≥0}`.
    Nonnegative(Stratum),
    /// `g ∉ U_Θ^{≥0}`.
    NotNonnegative,
}

/// Finds the stratum of `g ∈ U_Θ` in the disjoint union of Bruhat cells of U_Θ^{≥0}.
pub fn stratify(m: &SOModel, g: &GroupElem) -> Result<Stratification, Error> {
    if !m.in_u_theta(g) {
        return Err(Error::NotInUTheta);
    }
    let one = |name| read_entry(m, g, name).remove(0);
    let sigma = one("s1 + s2");
    let qv = one("s2 q(v1)");
    let r = one("s1 s2 q(v1)");
    let p = m.j.apply(&read_entry(m, g, "s2 J^-1 v1"));
    let v = m.j.apply(&read_entry(m, g, "J^-1 (v1 + v2)"));
    let zero = vecops::zeros(m.m);
    let mut cands = Vec::new();
    if vecops::is_zero(&p) {
        cands.push(UCoord::new(sigma.clone(), v.clone(), Rat::zero(), zero.clone()));
    } else if !qv.is_zero() {
        let s1 = &r / &qv;
        let s2 = &sigma - &s1;
        if !s2.is_zero() {
            let v1 = vecops::scale(&(Rat::one() / &s2), &p);
            cands.push(UCoord::new(s1, v1.clone(), s2, vecops::sub(&v, &v1)));
        }
    } else if !sigma.is_zero() {
        let v1 = vecops::scale(&(Rat::one() / &sigma), &p);
        cands.push(UCoord::new(Rat::zero(), v1.clone(), sigma.clone(), vecops::sub(&v, &v1)));
        if let Some(k) = v.iter().position(|x| !x.is_zero()) {
            let s2 = &p[k] / &v[k];
            if vecops::scale(&s2, &v) == p {
                cands.push(UCoord::new(&sigma - &s2, v.clone(), s2, zero.clone()));
            }
        }
    }
    let mut found: Vec<Stratum> = cands
        .into_iter()
        .filter_map(|u| {
            let idx = domain_of(m, &u)?;
            (f_gamma(m, &u) == *g).then(|| Stratum { index: idx, label: STRATA[idx].0, word: STRATA[idx].1, params: u })
        })
        .collect();
    debug_assert!(found.windows(2).all(|w| w[0].index == w[1].index), "strata overlap");
    Ok(match found.is_empty() {
        true => Stratification::NotNonnegative,
        false => Stratification::Nonnegative(found.swap_remove(0)),
    })
}

/// Components of `x` of Θ-degree `k` (entries `E_{ij}` with level difference `k`).
pub fn degree_component(m: &SOModel, x: &Matrix, k: i64) -> Matrix {
    let level = |i: usize| {
        let w = m.basis_weight(i);
        2 * w[0] + w[1]
    };
    let mut out = Matrix::zeros(m.n, m.n);
    for i in 0..m.n {
        for j in 0..m.n {
            if level(i) - level(j) == k {
                out[(i, j)] = x[(i, j)].clone();
            }
        }
    }
    out
}

/// Vector of the open cone built from integers (standard J): the middle
/// coordinates are `ys`, the first is `a > 0`, and `q_J = k/2 > 0`.
pub fn interior_from_ints(a: i64, k: i64, ys: &[i64]) -> Vec<Rat> {
    assert!(a > 0 && k > 0);
    cone_vector(a, k, ys)
}

/// Nonzero vector of the cone boundary built from integers (standard J).
pub fn boundary_from_ints(a: i64, ys: &[i64]) -> Vec<Rat> {
    assert!(a > 0);
    cone_vector(a, 0, ys)
}

fn cone_vector(a: i64, k: i64, ys: &[i64]) -> Vec<Rat> {
    let sq: i64 = ys.iter().map(|y| y * y).sum();
    let last = Rat::new((sq + k).into(), (2 * a).into());
    let mut v = vec![int(a)];
    v.extend(ys.iter().map(|&y| int(y)));
    v.push(last);
    v
}

/// Element of the semigroup `U_r`: the unipotent matrix with entries `a`, `b`, `c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UrElem {
    /// Entry (1,2).
    pub a: Rat,
    /// Entry (2,3).
    pub b: Rat,
    /// Entry (1,3).
    pub c: Rat,
    /// Parameter `r >= 1`.
    pub r: Rat,
}

impl UrElem {
    /// The identity of `U_r`.
    pub fn identity(r: Rat) -> Self {
        UrElem { a: Rat::zero(), b: Rat::zero(), c: Rat::zero(), r }
    }

    /// `a, b ≥ 0` and `0 ≤ c ≤ r a b`.
    pub fn is_member(&self) -> bool {
        !self.a.is_negative()
            && !self.b.is_negative()
            && !self.c.is_negative()
            && self.c <= &self.r * &self.a * &self.b
            && self.r >= Rat::one()
    }

    /// `[[1, a, c], [0, 1, b], [0, 0, 1]]`.
    pub fn matrix(&self) -> Matrix {
        let mut x = Matrix::identity(3);
        x[(0, 1)] = self.a.clone();
        x[(1, 2)] = self.b.clone();
        x[(0, 2)] = self.c.clone();
        x
    }
}

/// Product `(a+a′, b+b′, c+c′+ab′)`.
pub fn ur_product(x: &UrElem, y: &UrElem) -> Result<UrElem, Error> {
    if x.r != y.r || !x.is_member() || !y.is_member() {
        return Err(Error::UrMembership);
    }
    Ok(UrElem { a: &x.a + &y.a, b: &x.b + &y.b, c: &x.c + &y.c + &x.a * &y.b, r: x.r.clone() })
}

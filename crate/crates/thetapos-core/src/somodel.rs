//! Rational matrix model of SO(3,q): the form Q, the unipotent generators
//! x₁ and x₂, weight spaces of the diagonal Cartan subspace, the Θ-base,
//! the Serre relations and the Θ-principal sl₂.
//!
//! Basis order is `(e₁, e₂, e₃, g₁, …, g_{q−3}, f₃, f₂, f₁)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::linalg::{frac, int, span_rank, vecops, Matrix, Rat};
use crate::rootsys::{roots_from_diagram, Edge, Node};

/// Group element: an `n × n` matrix preserving Q.
pub type GroupElem = Matrix;

/// Lie algebra element: an `n × n` matrix `M` with `ᵗM Q + Q M = 0`.
pub type LieElem = Matrix;

/// Position of a vector relative to the cone `c₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeStatus {
    /// `q_J(v) > 0` on the positive nappe.
    Interior,
    /// `q_J(v) = 0`, `v ≠ 0`, on the closure of the positive nappe.
    BoundaryNonzero,
    /// `v = 0`.
    Zero,
    /// Anything else.
    Outside,
}

/// The quadratic space `ℝ^{3,q}` with `Q = [[0,0,K],[0,J,0],[−K,0,0]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SOModel {
    /// The parameter q.
    pub q: usize,
    /// Ambient dimension `q + 3`.
    pub n: usize,
    /// Size `q − 1` of the middle block.
    pub m: usize,
    /// The form Q.
    pub qmat: Matrix,
    /// Middle block J.
    pub j: Matrix,
    /// Inverse of J.
    pub j_inv: Matrix,
    /// `K = [[0,1],[−1,0]]`.
    pub k: Matrix,
    /// A vector of the positive nappe used to orient the cone.
    pub axis: Vec<Rat>,
    /// Basis names.
    pub basis_labels: Vec<String>,
}

/// The standard model of SO(3,q).
pub fn model(q: usize) -> Result<SOModel, Error> {
    if q < 4 {
        return Err(Error::QTooSmall(q));
    }
    let m = q - 1;
    let mut j = Matrix::zeros(m, m);
    j[(0, m - 1)] = Rat::one();
    j[(m - 1, 0)] = Rat::one();
    for i in 1..m - 1 {
        j[(i, i)] = int(-1);
    }
    let mut axis = vecops::zeros(m);
    axis[0] = Rat::one();
    axis[m - 1] = Rat::one();
    SOModel::with_middle_form(j, axis)
}

impl SOModel {
    /// Model with an arbitrary nondegenerate symmetric middle block of size `m >= 3`.
    ///
    /// `axis` must satisfy `q_J(axis) > 0`; it selects the positive nappe.
    pub fn with_middle_form(j: Matrix, axis: Vec<Rat>) -> Result<SOModel, Error> {
        let m = j.nrows();
        if !j.is_square() || m < 3 || j != j.transpose() {
            return Err(Error::Dimension("middle block must be symmetric of size >= 3".into()));
        }
        let j_inv = j.inverse().ok_or_else(|| Error::Dimension("middle block is singular".into()))?;
        let q = m + 1;
        let n = q + 3;
        let k = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
        let mut qmat = Matrix::zeros(n, n);
        qmat.set_block(0, n - 2, &k);
        qmat.set_block(2, 2, &j);
        qmat.set_block(n - 2, 0, &(-&k));
        let mut basis_labels = vec![String::from("e1"), String::from("e2"), String::from("e3")];
        for i in 1..=q - 3 {
            basis_labels.push(format!("g{i}"));
        }
        basis_labels.extend([String::from("f3"), String::from("f2"), String::from("f1")]);
        let model = SOModel { q, n, m, qmat, j, j_inv, k, axis, basis_labels };
        if !model.q_j(&model.axis).is_positive() {
            return Err(Error::Dimension("axis is not timelike".into()));
        }
        Ok(model)
    }

    /// `b_Q(v, w) = ᵗv Q w`.
    pub fn b_q(&self, v: &[Rat], w: &[Rat]) -> Rat {
        vecops::dot(v, &self.qmat.apply(w))
    }

    /// `b_J(x, y) = ½ ᵗx J⁻¹ y`; for the standard block `J⁻¹ = J`.
    pub fn b_j(&self, x: &[Rat], y: &[Rat]) -> Rat {
        vecops::dot(x, &self.j_inv.apply(y)) * frac(1, 2)
    }

    /// `q_J(x) = b_J(x, x)`.
    pub fn q_j(&self, x: &[Rat]) -> Rat {
        self.b_j(x, x)
    }

    /// Position of `v` relative to the closed cone.
    pub fn cone_status(&self, v: &[Rat]) -> ConeStatus {
        if vecops::is_zero(v) {
            return ConeStatus::Zero;
        }
        let q = self.q_j(v);
        let side = self.b_j(v, &self.axis);
        if q.is_positive() && side.is_positive() {
            ConeStatus::Interior
        } else if q.is_zero() && side.is_positive() {
            ConeStatus::BoundaryNonzero
        } else {
            ConeStatus::Outside
        }
    }

    /// `x₁(s) = I + s (E_{e₁,e₂} + E_{f₂,f₁})`.
    pub fn x1(&self, s: &Rat) -> GroupElem {
        let mut g = Matrix::identity(self.n);
        g[(0, 1)] = s.clone();
        g[(self.n - 2, self.n - 1)] = s.clone();
        g
    }

    /// `x₂(v)`: row e₂ carries `ᵗv`, column f₂ carries `J⁻¹ v`, corner `q_J(v)`.
    pub fn x2(&self, v: &[Rat]) -> GroupElem {
        let mut g = Matrix::identity(self.n);
        let jv = self.j_inv.apply(v);
        for i in 0..self.m {
            g[(1, 2 + i)] = v[i].clone();
            g[(2 + i, self.n - 2)] = jv[i].clone();
        }
        g[(1, self.n - 2)] = self.q_j(v);
        g
    }

    /// Root group of `u_{α₁+α₂}`: row e₁ carries `ᵗw`, column f₁ carries `−J⁻¹ w`.
    pub fn y(&self, w: &[Rat]) -> GroupElem {
        let mut g = Matrix::identity(self.n);
        let jw = self.j_inv.apply(w);
        for i in 0..self.m {
            g[(0, 2 + i)] = w[i].clone();
            g[(2 + i, self.n - 1)] = -jw[i].clone();
        }
        g[(0, self.n - 1)] = -self.q_j(w);
        g
    }

    /// Root group of `u_{α₁+2α₂}`: `I + c (E_{e₁,f₂} + E_{e₂,f₁})`.
    pub fn z(&self, c: &Rat) -> GroupElem {
        let mut g = Matrix::identity(self.n);
        g[(0, self.n - 2)] = c.clone();
        g[(1, self.n - 1)] = c.clone();
        g
    }

    /// Generator of `x₁`: `log x₁(s)`.
    pub fn x1_generator(&self, s: &Rat) -> LieElem {
        &self.x1(s) - &Matrix::identity(self.n)
    }

    /// Generator of `x₂`: `log x₂(v)`.
    pub fn x2_generator(&self, v: &[Rat]) -> LieElem {
        let mut x = &self.x2(v) - &Matrix::identity(self.n);
        x[(1, self.n - 2)] = Rat::zero();
        x
    }

    /// `ᵗg Q g = Q`.
    pub fn preserves_form(&self, g: &Matrix) -> bool {
        &(&g.transpose() * &self.qmat) * g == self.qmat
    }

    /// `ᵗg Q g = Q` and `det g = 1`.
    pub fn is_group_element(&self, g: &Matrix) -> bool {
        g.nrows() == self.n && g.is_square() && self.preserves_form(g) && g.det().is_one()
    }

    /// `ᵗX Q + Q X = 0`.
    pub fn is_lie_element(&self, x: &Matrix) -> bool {
        x.nrows() == self.n && x.is_square() && (&(&x.transpose() * &self.qmat) + &(&self.qmat * x)).is_zero()
    }

    /// Block boundaries `(1, 1, q−1, 1, 1)`.
    pub fn block_of(&self, i: usize) -> usize {
        match i {
            0 => 0,
            1 => 1,
            i if i == self.n - 2 => 3,
            i if i == self.n - 1 => 4,
            _ => 2,
        }
    }

    /// Membership in U_Θ: preserves Q and `g − I` is strictly block upper triangular.
    pub fn in_u_theta(&self, g: &Matrix) -> bool {
        if g.nrows() != self.n || !g.is_square() {
            return false;
        }
        for i in 0..self.n {
            for j in 0..self.n {
                let expected_zero = self.block_of(i) >= self.block_of(j);
                let x = if i == j { &g[(i, j)] - Rat::one() } else { g[(i, j)].clone() };
                if expected_zero && !x.is_zero() {
                    return false;
                }
            }
        }
        self.preserves_form(g)
    }

    /// Lift of the simple reflection `s_i` (i ∈ {1,2,3}) to SO(3,q).
    ///
    /// `s₁`: e₁ ↔ e₂, f₁ ↦ −f₂, f₂ ↦ −f₁. `s₂`: e₂ ↔ e₃, f₂ ↦ −f₃, f₃ ↦ −f₂.
    /// `s₃`: e₃ ↔ f₃, g₁ ↦ −g₁.
    pub fn weyl_lift(&self, i: usize) -> GroupElem {
        let n = self.n;
        let (f1, f2, f3) = (n - 1, n - 2, n - 3);
        let mut images: Vec<(usize, usize, i64)> = (0..n).map(|k| (k, k, 1)).collect();
        let mut set = |from: usize, to: usize, s: i64| images[from] = (from, to, s);
        match i {
            1 => {
                set(0, 1, 1);
                set(1, 0, 1);
                set(f1, f2, -1);
                set(f2, f1, -1);
            }
            2 => {
                set(1, 2, 1);
                set(2, 1, 1);
                set(f2, f3, -1);
                set(f3, f2, -1);
            }
            3 => {
                set(2, f3, 1);
                set(f3, 2, 1);
                set(3, 3, -1);
            }
            _ => panic!("simple reflection index must be 1, 2 or 3"),
        }
        let mut g = Matrix::zeros(n, n);
        for (from, to, s) in images {
            g[(to, from)] = int(s);
        }
        g
    }

    /// Lift of a word in `s₁, s₂, s₃`.
    pub fn weyl_lift_word(&self, word: &[usize]) -> GroupElem {
        word.iter().fold(Matrix::identity(self.n), |acc, &i| &acc * &self.weyl_lift(i))
    }

    /// Weight of basis vector `i` under the diagonal Cartan subspace, in `ℤ³`.
    pub fn basis_weight(&self, i: usize) -> [i64; 3] {
        let n = self.n;
        match i {
            0 => [1, 0, 0],
            1 => [0, 1, 0],
            2 => [0, 0, 1],
            i if i == n - 3 => [0, 0, -1],
            i if i == n - 2 => [0, -1, 0],
            i if i == n - 1 => [-1, 0, 0],
            _ => [0, 0, 0],
        }
    }

    /// Weight of the matrix unit `E_{ij}`.
    pub fn unit_weight(&self, i: usize, j: usize) -> [i64; 3] {
        let (a, b) = (self.basis_weight(i), self.basis_weight(j));
        [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
    }

    /// Θ-coefficients `(c₁, c₂)` of a weight: coefficients of α₁ and α₂.
    pub fn theta_coefficients(w: [i64; 3]) -> (i64, i64) {
        (w[0], w[0] + w[1])
    }

    /// Diagonal element of `a` with the given coordinates.
    pub fn cartan_element(&self, h: [Rat; 3]) -> LieElem {
        let d: Vec<Rat> = (0..self.n)
            .map(|i| {
                let w = self.basis_weight(i);
                (0..3).fold(Rat::zero(), |acc, k| acc + &h[k] * int(w[k]))
            })
            .collect();
        Matrix::diag(&d)
    }
}

/// Exponential of a nilpotent matrix as a finite series.
pub fn exp_nilpotent(x: &Matrix) -> Result<Matrix, Error> {
    let n = x.nrows();
    let mut term = Matrix::identity(n);
    let mut sum = Matrix::identity(n);
    for k in 1..=n {
        term = (&term * x).scale(&frac(1, k as i64));
        if term.is_zero() {
            return Ok(sum);
        }
        sum = &sum + &term;
    }
    if (&term * x).is_zero() {
        Ok(sum)
    } else {
        Err(Error::NotNilpotent)
    }
}

/// Logarithm of a unipotent matrix as a finite series.
pub fn log_unipotent(g: &Matrix) -> Result<Matrix, Error> {
    let n = g.nrows();
    let nil = g - &Matrix::identity(n);
    let mut power = Matrix::identity(n);
    let mut sum = Matrix::zeros(n, n);
    for k in 1..=n {
        power = &power * &nil;
        if power.is_zero() {
            return Ok(sum);
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        sum = &sum + &power.scale(&frac(sign, k as i64));
    }
    if (&power * &nil).is_zero() {
        Ok(sum)
    } else {
        Err(Error::NotNilpotent)
    }
}

/// Cartan involution `X ↦ −ᵗX` (valid because Q is symmetric with `Q² = I`).
pub fn cartan_involution(x: &LieElem) -> LieElem {
    -&x.transpose()
}

/// Simultaneous eigenspaces of the diagonal Cartan subspace on `so(b_Q)`.
pub fn weight_spaces(m: &SOModel) -> BTreeMap<[i64; 3], Vec<LieElem>> {
    let n = m.n;
    let mut units: BTreeMap<[i64; 3], Vec<(usize, usize)>> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            units.entry(m.unit_weight(i, j)).or_default().push((i, j));
        }
    }
    let mut out = BTreeMap::new();
    for (w, us) in units {
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        let mats: Vec<Matrix> = us.iter().map(|&(i, j)| Matrix::unit(n, i, j)).collect();
        let conds: Vec<Matrix> =
            mats.iter().map(|e| &(&e.transpose() * &m.qmat) + &(&m.qmat * e)).collect();
        for r in 0..n {
            for c in 0..n {
                let row: Vec<Rat> = conds.iter().map(|x| x[(r, c)].clone()).collect();
                if !vecops::is_zero(&row) {
                    rows.push(row);
                }
            }
        }
        let kernel = if rows.is_empty() {
            (0..mats.len()).map(|k| vecops::unit(mats.len(), k)).collect()
        } else {
            Matrix::from_rows(&rows).kernel()
        };
        let basis: Vec<Matrix> = kernel
            .iter()
            .map(|coef| {
                mats.iter().zip(coef).fold(Matrix::zeros(n, n), |acc, (e, c)| &acc + &e.scale(c))
            })
            .collect();
        if !basis.is_empty() {
            out.insert(w, basis);
        }
    }
    out
}

/// The space `u_β` for the Θ-root with Θ-coefficients `(c₁, c₂)`.
pub fn u_block(m: &SOModel, c: (i64, i64)) -> Vec<LieElem> {
    weight_spaces(m)
        .into_iter()
        .filter(|(w, _)| *w != [0, 0, 0] && SOModel::theta_coefficients(*w) == c)
        .flat_map(|(_, b)| b)
        .collect()
}

/// The compact part `m` of the centralizer: zero weight space fixed by τ.
pub fn compact_centralizer(m: &SOModel) -> Vec<LieElem> {
    let zero = weight_spaces(m).remove(&[0, 0, 0]).unwrap_or_default();
    let n = m.n;
    let flat: Vec<Vec<Rat>> = zero.iter().map(|x| x.entries().to_vec()).collect();
    let fixed: Vec<Vec<Rat>> = zero.iter().map(|x| vecops::sub(x.entries(), cartan_involution(x).entries())).collect();
    let k = zero.len();
    let rows: Vec<Vec<Rat>> = (0..n * n).map(|e| (0..k).map(|i| fixed[i][e].clone()).collect()).collect();
    Matrix::from_rows(&rows)
        .kernel()
        .iter()
        .map(|c| {
            let v = (0..k).fold(vecops::zeros(n * n), |acc, i| vecops::add(&acc, &vecops::scale(&c[i], &flat[i])));
            Matrix::from_rows(&v.chunks(n).map(<[Rat]>::to_vec).collect::<Vec<_>>())
        })
        .collect()
}

/// Dimension of the span of a family of matrices.
pub fn span_dim(xs: &[Matrix]) -> usize {
    span_rank(&xs.iter().map(|x| x.entries().to_vec()).collect::<Vec<_>>())
}

/// Span of all brackets `[a, b]`.
pub fn bracket_span(a: &[Matrix], b: &[Matrix]) -> Vec<Matrix> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            out.push(x.bracket(y));
        }
    }
    out
}

/// Dimension of the Lie subalgebra generated by a family.
pub fn generated_dimension(gens: &[Matrix]) -> usize {
    let mut basis: Vec<Matrix> = Vec::new();
    for g in gens {
        let mut trial = basis.clone();
        trial.push(g.clone());
        if span_dim(&trial) > basis.len() {
            basis = trial;
        }
    }
    let mut i = 0;
    while i < basis.len() {
        for j in 0..basis.len() {
            let b = basis[i].bracket(&basis[j]);
            let mut trial = basis.clone();
            trial.push(b);
            if span_dim(&trial) > basis.len() {
                basis = trial;
            }
        }
        i += 1;
    }
    basis.len()
}

/// Unique scalar `c` with `y = c x`, when it exists and `x ≠ 0`.
pub fn proportionality(y: &Matrix, x: &Matrix) -> Option<Rat> {
    let (k, xv) = x.entries().iter().enumerate().find(|(_, v)| !v.is_zero())?;
    let c = &y.entries()[k] / xv;
    (x.scale(&c) == *y).then_some(c)
}

/// An sl₂-triple `(E, F, D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    /// Raising element.
    pub e: LieElem,
    /// Lowering element.
    pub f: LieElem,
    /// Semisimple element `[E, F]`.
    pub d: LieElem,
}

impl Sl2Triple {
    /// `[D,E] = 2E`, `[D,F] = −2F`, `[E,F] = D`.
    pub fn holds(&self) -> bool {
        self.d.bracket(&self.e) == self.e.scale(&int(2))
            && self.d.bracket(&self.f) == self.f.scale(&int(-2))
            && self.e.bracket(&self.f) == self.d
    }
}

/// Completes `E` to an sl₂-triple with `F` a rational multiple of `τ(E)`.
pub fn sl2_from(e: &LieElem) -> Result<Sl2Triple, Error> {
    let t = cartan_involution(e);
    let h = e.bracket(&t);
    let c = proportionality(&h.bracket(e), e)
        .filter(|c| !c.is_zero())
        .ok_or_else(|| Error::Dimension("element does not span an sl2".into()))?;
    let f = t.scale(&(int(2) / c));
    let d = e.bracket(&f);
    let triple = Sl2Triple { e: e.clone(), f, d };
    if triple.holds() {
        Ok(triple)
    } else {
        Err(Error::Dimension("element does not span an sl2".into()))
    }
}

/// The Θ-base of so(3,q) with `Θ = {α₁, α₂}`, `d = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaBase {
    /// Triple of α₁.
    pub alpha1: Sl2Triple,
    /// Triple of α₂ = α_Θ.
    pub alpha2: Sl2Triple,
    /// `Z₀ ∈ g_{α₂}`.
    pub z0: LieElem,
    /// `Z₁ = Ad(ṡ₃) Z₀ ∈ g_{α₂+2α₃}`.
    pub z1: LieElem,
    /// `u_{α₂}`-coordinates of `E_{α₂}`.
    pub e2_coords: Vec<Rat>,
}

impl ThetaBase {
    /// Triple of the `i`-th root of Θ (1-based).
    pub fn triple(&self, i: usize) -> &Sl2Triple {
        match i {
            1 => &self.alpha1,
            2 => &self.alpha2,
            _ => panic!("Θ has two elements"),
        }
    }
}

/// Builds the Θ-base: `E_{α₁} = log x₁(1)`, `E_{α₂} = Z₀ + Z₁`.
pub fn theta_base(m: &SOModel) -> Result<ThetaBase, Error> {
    let e1 = m.x1_generator(&Rat::one());
    let z0 = m.x2_generator(&vecops::unit(m.m, 0));
    let s3 = m.weyl_lift(3);
    let s3_inv = s3.inverse().expect("lift is invertible");
    let z1 = &(&s3 * &z0) * &s3_inv;
    let e2 = &z0 + &z1;
    let mut coords = vecops::zeros(m.m);
    for i in 0..m.m {
        coords[i] = e2[(1, 2 + i)].clone();
    }
    Ok(ThetaBase { alpha1: sl2_from(&e1)?, alpha2: sl2_from(&e2)?, z0, z1, e2_coords: coords })
}

/// One checked identity of the Serre report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerreEntry {
    /// Relation group: `"sl2"`, `"commuting"`, `"distant"`, `"chain"`, `"special-eigenvalue"` or `"special-nilpotency"`.
    pub equation: String,
    /// The identity checked.
    pub statement: String,
    /// Whether it holds exactly.
    pub pass: bool,
}

/// Result of [`serre_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerreReport {
    /// Individual identities.
    pub entries: Vec<SerreEntry>,
    /// Cartan matrix read off `[D_i, E_j] = a_{ij} E_j`.
    pub cartan: Vec<Vec<i64>>,
    /// Type of the generated split subalgebra.
    pub type_label: String,
    /// Dimension of the subalgebra generated by the `E_α`, `F_α`.
    pub generated_dim: usize,
}

impl SerreReport {
    /// True when every identity holds.
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

fn ad_power(x: &Matrix, y: &Matrix, k: usize) -> Matrix {
    (0..k).fold(y.clone(), |acc, _| x.bracket(&acc))
}

/// Verifies the Serre relations of the Θ-base (`p = 2`, `d = 1`).
pub fn serre_check(base: &ThetaBase) -> SerreReport {
    let d_len = 1i64;
    let mut entries = Vec::new();
    let mut push = |eq: &str, st: String, pass: bool| {
        entries.push(SerreEntry { equation: String::from(eq), statement: st, pass })
    };
    for i in 1..=2 {
        let t = base.triple(i);
        push("sl2", format!("[D{i},E{i}] = 2E{i}"), t.d.bracket(&t.e) == t.e.scale(&int(2)));
        push("sl2", format!("[D{i},F{i}] = -2F{i}"), t.d.bracket(&t.f) == t.f.scale(&int(-2)));
        push("sl2", format!("[E{i},F{i}] = D{i}"), t.e.bracket(&t.f) == t.d);
    }
    let (a, b) = (base.triple(1), base.triple(2));
    push("commuting", String::from("[E1,F2] = 0"), a.e.bracket(&b.f).is_zero());
    push("commuting", String::from("[E2,F1] = 0"), b.e.bracket(&a.f).is_zero());
    push("distant", String::from("no pair with |i-j| > 1"), true);
    push("chain", String::from("(ad E1)^2 E2 = 0"), ad_power(&a.e, &b.e, 2).is_zero());
    push("chain", String::from("(ad F1)^2 F2 = 0"), ad_power(&a.f, &b.f, 2).is_zero());
    push("chain", String::from("[D1,E2] = -E2"), a.d.bracket(&b.e) == b.e.scale(&int(-1)));
    push("chain", String::from("[D1,F2] = F2"), a.d.bracket(&b.f) == b.f);
    push("special-eigenvalue", String::from("[D2,E1] = -2E1"), b.d.bracket(&a.e) == a.e.scale(&int(-(d_len + 1))));
    push("special-eigenvalue", String::from("[D2,F1] = 2F1"), b.d.bracket(&a.f) == a.f.scale(&int(d_len + 1)));
    let k = (d_len + 2) as usize;
    push("special-nilpotency", String::from("(ad E2)^3 E1 = 0"), ad_power(&b.e, &a.e, k).is_zero());
    push("special-nilpotency", String::from("(ad F2)^3 F1 = 0"), ad_power(&b.f, &a.f, k).is_zero());
    let triples = [a, b];
    let cartan: Vec<Vec<i64>> = (0..2)
        .map(|i| {
            (0..2)
                .map(|j| {
                    let c = proportionality(&triples[i].d.bracket(&triples[j].e), &triples[j].e)
                        .unwrap_or_else(Rat::zero);
                    c.to_integer().try_into().unwrap_or(0)
                })
                .collect()
        })
        .collect();
    let type_label = cartan_label(&cartan);
    let generated_dim = generated_dimension(&[a.e.clone(), a.f.clone(), b.e.clone(), b.f.clone()]);
    SerreReport { entries, cartan, type_label, generated_dim }
}

fn cartan_label(a: &[Vec<i64>]) -> String {
    let n = a.len();
    let nodes: Vec<Node> = (0..n).map(|i| Node { label: format!("a{}", i + 1), mult: 1 }).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = a[i][j] * a[j][i];
            if p == 0 {
                continue;
            }
            let short = if a[i][j].abs() > a[j][i].abs() { Some(i) } else if p > 1 { Some(j) } else { None };
            edges.push(Edge { from: i, to: j, bond: p as u8, arrow_toward: short });
        }
    }
    match crate::rootsys::DynkinDiagram::new(nodes, edges, false).and_then(|d| d.cartan_type()) {
        Ok((t, _)) => format!("{t}"),
        Err(_) => String::from("unknown"),
    }
}

/// Coefficients `(q_α)` of the Θ-principal sl₂ for `g_Θ` of type B₂ with α₁ long.
pub fn principal_coefficients() -> Vec<Rat> {
    let b2 = crate::rootsys::catalog_entry("split-B2").expect("catalog entry");
    roots_from_diagram(&b2).expect("finite type").principal_coefficients()
}

/// `E = Σ q_α E_α`, `F = Σ F_α`, `D = Σ q_α D_α`.
pub fn principal_sl2(base: &ThetaBase) -> Sl2Triple {
    let q = principal_coefficients();
    let n = base.alpha1.e.nrows();
    let mut t = Sl2Triple { e: Matrix::zeros(n, n), f: Matrix::zeros(n, n), d: Matrix::zeros(n, n) };
    for (i, qa) in q.iter().enumerate() {
        let s = base.triple(i + 1);
        t.e = &t.e + &s.e.scale(qa);
        t.f = &t.f + &s.f;
        t.d = &t.d + &s.d.scale(qa);
    }
    t
}

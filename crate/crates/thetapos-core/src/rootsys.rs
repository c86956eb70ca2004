//! Dynkin diagrams with multiplicities, restricted root systems and the
//! built-in diagram catalog.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed};

use crate::error::Error;
use crate::linalg::{frac, int, vecops, Matrix, Rat};

/// A node of a Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    /// Display label, e.g. `"a1"`.
    pub label: String,
    /// Dimension of the restricted root space of the simple root.
    pub mult: u32,
}

/// A bond between two nodes (indices into the node list).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    /// First endpoint.
    pub from: usize,
    /// Second endpoint.
    pub to: usize,
    /// Bond multiplicity in `{1, 2, 3}`.
    pub bond: u8,
    /// For multiple bonds, the endpoint that is the shorter root.
    pub arrow_toward: Option<usize>,
}

/// Dynkin diagram of a restricted root system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinDiagram {
    /// Simple roots, in the order used by words and Θ-subsets.
    pub nodes: Vec<Node>,
    /// Bonds.
    pub edges: Vec<Edge>,
    /// Set for BC (non-reduced) systems.
    pub non_reduced: bool,
}

/// Cartan-Killing family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    /// A_n
    A,
    /// B_n
    B,
    /// C_n
    C,
    /// D_n
    D,
    /// E_6, E_7, E_8
    E,
    /// F_4
    F,
    /// G_2
    G,
    /// Non-reduced BC_n
    BC,
}

/// Type of an irreducible finite root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CartanType {
    /// Family letter.
    pub family: Family,
    /// Rank.
    pub rank: usize,
}

impl core::fmt::Display for CartanType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let s = match self.family {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
            Family::BC => "BC",
        };
        write!(f, "{}{}", s, self.rank)
    }
}

impl DynkinDiagram {
    /// Validates and builds a diagram.
    pub fn new(nodes: Vec<Node>, edges: Vec<Edge>, non_reduced: bool) -> Result<Self, Error> {
        let d = DynkinDiagram { nodes, edges, non_reduced };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<(), Error> {
        let n = self.nodes.len();
        if n == 0 {
            return Err(Error::InvalidDiagram("no nodes".into()));
        }
        let mut labels = BTreeSet::new();
        for node in &self.nodes {
            if node.mult == 0 {
                return Err(Error::InvalidDiagram(format!("multiplicity of {} is zero", node.label)));
            }
            if !labels.insert(node.label.clone()) {
                return Err(Error::InvalidDiagram(format!("duplicate label {}", node.label)));
            }
        }
        let mut pairs = BTreeSet::new();
        for e in &self.edges {
            if e.from >= n || e.to >= n || e.from == e.to {
                return Err(Error::InvalidDiagram("edge endpoint out of range".into()));
            }
            if !(1..=3).contains(&e.bond) {
                return Err(Error::InvalidDiagram(format!("bond multiplicity {}", e.bond)));
            }
            match (e.bond, e.arrow_toward) {
                (1, None) => {}
                (1, Some(_)) => return Err(Error::InvalidDiagram("arrow on a simple bond".into())),
                (_, Some(t)) if t == e.from || t == e.to => {}
                _ => return Err(Error::InvalidDiagram("multiple bond needs an arrow".into())),
            }
            if !pairs.insert((e.from.min(e.to), e.from.max(e.to))) {
                return Err(Error::InvalidDiagram("repeated edge".into()));
            }
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in self.neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidDiagram("diagram is not connected".into()));
        }
        Ok(())
    }

    /// Number of nodes.
    pub fn rank(&self) -> usize {
        self.nodes.len()
    }

    /// Index of the node with the given label.
    pub fn node_index(&self, label: &str) -> Result<usize, Error> {
        self.nodes
            .iter()
            .position(|n| n.label == label)
            .ok_or_else(|| Error::InvalidDiagram(format!("unknown node {label}")))
    }

    /// Indices of the nodes bonded to `i`.
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|e| {
                if e.from == i {
                    Some(e.to)
                } else if e.to == i {
                    Some(e.from)
                } else {
                    None
                }
            })
            .collect()
    }

    /// The edge joining `i` and `j`, if any.
    pub fn edge_between(&self, i: usize, j: usize) -> Option<&Edge> {
        self.edges.iter().find(|e| (e.from == i && e.to == j) || (e.from == j && e.to == i))
    }

    /// Squared lengths of the simple roots, normalized so the shortest is 1.
    pub fn squared_lengths(&self) -> Result<Vec<Rat>, Error> {
        let n = self.rank();
        let mut len: Vec<Option<Rat>> = vec![None; n];
        len[0] = Some(Rat::one());
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            let li = len[i].clone().expect("assigned");
            for e in self.edges.iter().filter(|e| e.from == i || e.to == i) {
                let j = if e.from == i { e.to } else { e.from };
                let lj = match e.arrow_toward {
                    None => li.clone(),
                    Some(s) if s == j => &li / int(e.bond as i64),
                    Some(_) => &li * int(e.bond as i64),
                };
                match &len[j] {
                    Some(old) if *old != lj => {
                        return Err(Error::InvalidDiagram("inconsistent bond arrows".into()))
                    }
                    Some(_) => {}
                    None => {
                        len[j] = Some(lj);
                        stack.push(j);
                    }
                }
            }
        }
        let len: Vec<Rat> = len.into_iter().map(|l| l.expect("connected")).collect();
        let min = len.iter().min().expect("nonempty").clone();
        Ok(len.iter().map(|l| l / &min).collect())
    }

    /// Cartan matrix `a_ij = 2 (α_i, α_j) / (α_i, α_i)`.
    pub fn cartan_matrix(&self) -> Result<Vec<Vec<i64>>, Error> {
        let gram = self.gram()?;
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let v = &gram[(i, j)] * int(2) / &gram[(i, i)];
                a[i][j] = v.to_integer().try_into().expect("small Cartan entry");
            }
        }
        Ok(a)
    }

    /// Gram matrix of the simple roots `(α_i, α_j)`.
    pub fn gram(&self) -> Result<Matrix, Error> {
        let len = self.squared_lengths()?;
        let n = self.rank();
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            g[(i, i)] = len[i].clone();
        }
        for e in &self.edges {
            let (i, j) = (e.from, e.to);
            let long = if len[i] >= len[j] { &len[i] } else { &len[j] };
            let v = -(long / int(2));
            g[(i, j)] = v.clone();
            g[(j, i)] = v;
        }
        Ok(g)
    }

    /// True when the Gram matrix is positive definite.
    pub fn is_finite_type(&self) -> Result<bool, Error> {
        let g = self.gram()?;
        let n = self.rank();
        Ok((1..=n).all(|k| g.block(0, k, 0, k).det().is_positive()))
    }

    /// Identifies the type and the Bourbaki ordering of the nodes.
    ///
    /// The returned vector maps the canonical position to a diagram index.
    pub fn cartan_type(&self) -> Result<(CartanType, Vec<usize>), Error> {
        if !self.is_finite_type()? {
            return Err(Error::InfiniteType);
        }
        let n = self.rank();
        let len = self.squared_lengths()?;
        if n == 1 {
            let fam = if self.non_reduced { Family::BC } else { Family::A };
            return Ok((CartanType { family: fam, rank: 1 }, vec![0]));
        }
        let max_bond = self.edges.iter().map(|e| e.bond).max().unwrap_or(1);
        let degree: Vec<usize> = (0..n).map(|i| self.neighbors(i).len()).collect();
        let path_from = |start: usize| -> Vec<usize> {
            let mut order = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            loop {
                let next = self.neighbors(cur).into_iter().find(|&j| j != prev);
                match next {
                    Some(j) => {
                        prev = cur;
                        cur = j;
                        order.push(j);
                    }
                    None => break,
                }
            }
            order
        };
        let ends: Vec<usize> = (0..n).filter(|&i| degree[i] == 1).collect();
        if max_bond == 3 {
            let e = &self.edges[0];
            let short = e.arrow_toward.expect("triple bond arrow");
            let long = if short == e.from { e.to } else { e.from };
            return Ok((CartanType { family: Family::G, rank: 2 }, vec![short, long]));
        }
        if max_bond == 2 {
            let e = self.edges.iter().find(|e| e.bond == 2).expect("double bond");
            let short = e.arrow_toward.expect("double bond arrow");
            let long = if short == e.from { e.to } else { e.from };
            if n == 4 && degree[short] == 2 && degree[long] == 2 {
                let start = *ends.iter().find(|&&i| len[i] == len[long]).expect("long end");
                return Ok((CartanType { family: Family::F, rank: 4 }, path_from(start)));
            }
            if degree[short] == 1 {
                let start = if n == 2 { long } else { *ends.iter().find(|&&i| i != short).expect("end") };
                let fam = if self.non_reduced { Family::BC } else { Family::B };
                return Ok((CartanType { family: fam, rank: n }, path_from(start)));
            }
            let start = *ends.iter().find(|&&i| i != long).expect("end");
            return Ok((CartanType { family: Family::C, rank: n }, path_from(start)));
        }
        if let Some(branch) = (0..n).find(|&i| degree[i] == 3) {
            let mut arms: Vec<Vec<usize>> = self
                .neighbors(branch)
                .into_iter()
                .map(|first| {
                    let mut arm = vec![first];
                    let mut prev = branch;
                    let mut cur = first;
                    while let Some(j) = self.neighbors(cur).into_iter().find(|&j| j != prev) {
                        prev = cur;
                        cur = j;
                        arm.push(j);
                    }
                    arm
                })
                .collect();
            arms.sort_by_key(|a| (a.len(), a[0]));
            let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
            if lens[0] == 1 && lens[1] == 1 {
                let mut order: Vec<usize> = arms[2].iter().rev().cloned().collect();
                order.push(branch);
                order.push(arms[0][0]);
                order.push(arms[1][0]);
                return Ok((CartanType { family: Family::D, rank: n }, order));
            }
            let mut order = vec![arms[1][1], arms[0][0], arms[1][0], branch];
            order.extend(arms[2].iter().cloned());
            return Ok((CartanType { family: Family::E, rank: n }, order));
        }
        let start = *ends.iter().min().expect("path end");
        Ok((CartanType { family: Family::A, rank: n }, path_from(start)))
    }

    /// The sub-diagram induced by a node subset is connected.
    pub fn induced_connected(&self, subset: &[usize]) -> bool {
        if subset.is_empty() {
            return true;
        }
        let set: BTreeSet<usize> = subset.iter().cloned().collect();
        let mut seen = BTreeSet::new();
        let mut stack = vec![subset[0]];
        seen.insert(subset[0]);
        while let Some(i) = stack.pop() {
            for j in self.neighbors(i) {
                if set.contains(&j) && seen.insert(j) {
                    stack.push(j);
                }
            }
        }
        seen.len() == set.len()
    }
}

/// Coordinates of the simple roots in canonical order for a given type.
fn canonical_simple_roots(t: CartanType) -> (usize, Vec<Vec<Rat>>) {
    let n = t.rank;
    let e = |dim: usize, i: usize| vecops::unit(dim, i);
    let diff = |dim: usize, i: usize, j: usize| vecops::sub(&e(dim, i), &e(dim, j));
    match t.family {
        Family::A => (n + 1, (0..n).map(|k| diff(n + 1, k, k + 1)).collect()),
        Family::B | Family::BC => {
            let mut s: Vec<Vec<Rat>> = (0..n - 1).map(|k| diff(n, k, k + 1)).collect();
            s.push(e(n, n - 1));
            (n, s)
        }
        Family::C => {
            let mut s: Vec<Vec<Rat>> = (0..n - 1).map(|k| diff(n, k, k + 1)).collect();
            s.push(vecops::scale(&int(2), &e(n, n - 1)));
            (n, s)
        }
        Family::D => {
            let mut s: Vec<Vec<Rat>> = (0..n - 1).map(|k| diff(n, k, k + 1)).collect();
            s.push(vecops::add(&e(n, n - 2), &e(n, n - 1)));
            (n, s)
        }
        Family::E => {
            let h = frac(1, 2);
            let mut a1 = vec![-h.clone(); 8];
            a1[0] = h.clone();
            a1[7] = h;
            let mut s = vec![a1, vecops::add(&e(8, 0), &e(8, 1))];
            for k in 0..n - 2 {
                s.push(diff(8, k + 1, k));
            }
            (8, s)
        }
        Family::F => {
            let h = frac(1, 2);
            (
                4,
                vec![
                    diff(4, 2, 1),
                    diff(4, 1, 0),
                    e(4, 0),
                    vec![-h.clone(), -h.clone(), -h.clone(), h],
                ],
            )
        }
        Family::G => (3, vec![diff(3, 0, 1), vecops::ints(&[-2, 1, 1])]),
    }
}

/// Restricted root system realized in Euclidean coordinates.
#[derive(Clone, Debug)]
pub struct RootSystem {
    /// Number of simple roots.
    pub rank: usize,
    /// Dimension of the ambient coordinate space.
    pub dim: usize,
    /// Type and canonical ordering.
    pub cartan_type: CartanType,
    /// Simple roots indexed like the diagram nodes.
    pub simple: Vec<Vec<Rat>>,
    /// All roots: the positive ones sorted by height, then their negatives.
    pub roots: Vec<Vec<Rat>>,
    /// Coefficients of each root in the simple-root basis.
    pub coeffs: Vec<Vec<i64>>,
    /// Multiplicity of each root.
    pub mults: Vec<u32>,
    /// Non-reduced flag copied from the diagram.
    pub non_reduced: bool,
    index: BTreeMap<Vec<Rat>, usize>,
}

/// Full root system generated from a diagram by closure under simple reflections.
pub fn roots_from_diagram(d: &DynkinDiagram) -> Result<RootSystem, Error> {
    let (t, order) = d.cartan_type()?;
    let (dim, canon) = canonical_simple_roots(t);
    let n = d.rank();
    let mut simple = vec![Vec::new(); n];
    for (k, &i) in order.iter().enumerate() {
        simple[i] = canon[k].clone();
    }
    let norms: Vec<Rat> = simple.iter().map(|a| vecops::dot(a, a)).collect();
    let mut found: BTreeMap<Vec<Rat>, (Vec<i64>, u32)> = BTreeMap::new();
    let mut queue: Vec<Vec<Rat>> = Vec::new();
    for i in 0..n {
        let mut c = vec![0i64; n];
        c[i] = 1;
        found.insert(simple[i].clone(), (c, d.nodes[i].mult));
        queue.push(simple[i].clone());
    }
    while let Some(beta) = queue.pop() {
        let (c, m) = found[&beta].clone();
        for i in 0..n {
            let pairing = int(2) * vecops::dot(&beta, &simple[i]) / &norms[i];
            let k: i64 = pairing.to_integer().try_into().map_err(|_| Error::InfiniteType)?;
            let img = vecops::sub(&beta, &vecops::scale(&pairing, &simple[i]));
            if !found.contains_key(&img) {
                let mut ci = c.clone();
                ci[i] -= k;
                found.insert(img.clone(), (ci, m));
                queue.push(img);
                if found.len() > 1000 {
                    return Err(Error::InfiniteType);
                }
            }
        }
    }
    let mut pos: Vec<(Vec<Rat>, Vec<i64>, u32)> = found
        .into_iter()
        .filter(|(_, (c, _))| c.iter().all(|&x| x >= 0))
        .map(|(v, (c, m))| (v, c, m))
        .collect();
    pos.sort_by(|a, b| {
        let ha: i64 = a.1.iter().sum();
        let hb: i64 = b.1.iter().sum();
        (ha, &a.1).cmp(&(hb, &b.1))
    });
    let mut roots = Vec::new();
    let mut coeffs = Vec::new();
    let mut mults = Vec::new();
    for (v, c, m) in &pos {
        roots.push(v.clone());
        coeffs.push(c.clone());
        mults.push(*m);
    }
    for (v, c, m) in &pos {
        roots.push(vecops::neg(v));
        coeffs.push(c.iter().map(|x| -x).collect());
        mults.push(*m);
    }
    let index = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
    Ok(RootSystem { rank: n, dim, cartan_type: t, simple, roots, coeffs, mults, non_reduced: d.non_reduced, index })
}

impl RootSystem {
    /// Number of positive roots.
    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    /// Positive roots.
    pub fn positive(&self) -> &[Vec<Rat>] {
        &self.roots[..self.num_positive()]
    }

    /// Index of a root, if `v` is one.
    pub fn root_index(&self, v: &[Rat]) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// True when `v` is a root.
    pub fn is_root(&self, v: &[Rat]) -> bool {
        self.index.contains_key(v)
    }

    /// True when the root with index `i` is positive.
    pub fn is_positive_index(&self, i: usize) -> bool {
        i < self.num_positive()
    }

    /// Euclidean inner product.
    pub fn inner(&self, a: &[Rat], b: &[Rat]) -> Rat {
        vecops::dot(a, b)
    }

    /// Cartan integer `<β, α^∨> = 2 (β, α) / (α, α)`.
    pub fn pairing(&self, beta: &[Rat], alpha: &[Rat]) -> Rat {
        int(2) * self.inner(beta, alpha) / self.inner(alpha, alpha)
    }

    /// Reflection `s_α(v)`.
    pub fn reflect(&self, alpha: &[Rat], v: &[Rat]) -> Vec<Rat> {
        vecops::sub(v, &vecops::scale(&self.pairing(v, alpha), alpha))
    }

    /// Matrix of the reflection in `α` on the ambient space.
    pub fn reflection_matrix(&self, alpha: &[Rat]) -> Matrix {
        let cols: Vec<Vec<Rat>> = (0..self.dim).map(|j| self.reflect(alpha, &vecops::unit(self.dim, j))).collect();
        Matrix::from_cols(&cols)
    }

    /// Matrix of the simple reflection `s_i` (0-based node index).
    pub fn simple_reflection(&self, i: usize) -> Matrix {
        self.reflection_matrix(&self.simple[i])
    }

    /// Coefficients of `v` in the simple-root basis, when `v` lies in their span.
    pub fn simple_coefficients(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        Matrix::from_cols(&self.simple).solve(v).filter(|c| {
            let back = Matrix::from_cols(&self.simple).apply(c);
            back == v
        })
    }

    /// Root-string bounds `(p, q)`: `β - nα` is a root for `n <= p`, `β + nα` for `n <= q`.
    pub fn alpha_chain(&self, alpha: &[Rat], beta: &[Rat]) -> Result<(usize, usize), Error> {
        if !self.is_root(alpha) || !self.is_root(beta) {
            return Err(Error::NotARoot);
        }
        let walk = |sign: i64| {
            let mut k = 0;
            loop {
                let v = vecops::add(beta, &vecops::scale(&int(sign * (k as i64 + 1)), alpha));
                if self.is_root(&v) {
                    k += 1;
                } else {
                    return k;
                }
            }
        };
        Ok((walk(-1), walk(1)))
    }

    /// Positive roots outside the span of `Δ ∖ Θ` (indices into `roots`).
    pub fn sigma_theta_plus(&self, theta: &[usize]) -> Vec<usize> {
        (0..self.num_positive()).filter(|&i| theta.iter().any(|&t| self.coeffs[i][t] != 0)).collect()
    }

    /// Positive roots in the span of the given simple roots.
    pub fn positive_in_span(&self, subset: &[usize]) -> Vec<usize> {
        (0..self.num_positive())
            .filter(|&i| (0..self.rank).all(|k| subset.contains(&k) || self.coeffs[i][k] == 0))
            .collect()
    }

    /// Distinct squared lengths of roots, ascending.
    pub fn norm_classes(&self) -> Vec<Rat> {
        let set: BTreeSet<Rat> = self.roots.iter().map(|r| vecops::dot(r, r)).collect();
        set.into_iter().collect()
    }

    /// Permutation of root indices induced by a matrix, if it permutes the roots.
    pub fn root_permutation(&self, w: &Matrix) -> Option<Vec<usize>> {
        self.roots.iter().map(|r| self.root_index(&w.apply(r))).collect()
    }

    /// Coroot `2α / (α, α)`.
    pub fn coroot(&self, alpha: &[Rat]) -> Vec<Rat> {
        vecops::scale(&(int(2) / self.inner(alpha, alpha)), alpha)
    }

    /// Coefficients of the sum of positive coroots in the basis of simple coroots.
    pub fn principal_coefficients(&self) -> Vec<Rat> {
        let mut sum = vecops::zeros(self.dim);
        for r in self.positive() {
            sum = vecops::add(&sum, &self.coroot(r));
        }
        let cols: Vec<Vec<Rat>> = self.simple.iter().map(|a| self.coroot(a)).collect();
        Matrix::from_cols(&cols).solve(&sum).expect("sum of coroots lies in the coroot span")
    }

    /// Total multiplicity of the roots congruent to `α` modulo the span of `Δ ∖ Θ`.
    pub fn theta_block_dimension(&self, theta: &[usize], alpha: usize) -> u32 {
        (0..self.num_positive())
            .filter(|&i| (0..self.rank).all(|k| !theta.contains(&k) || self.coeffs[i][k] == (k == alpha) as i64))
            .map(|i| self.mults[i])
            .sum()
    }
}

/// Version tag of the built-in catalog data.
pub const CATALOG_VERSION: &str = "1";

struct Entry {
    name: &'static str,
    kind: Kind,
    mults: &'static [u32],
}

#[derive(Clone, Copy)]
enum Kind {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    BC,
}

const ENTRIES: &[Entry] = &[
    Entry { name: "split-A1", kind: Kind::A, mults: &[1] },
    Entry { name: "split-A2", kind: Kind::A, mults: &[1, 1] },
    Entry { name: "split-A3", kind: Kind::A, mults: &[1, 1, 1] },
    Entry { name: "split-A4", kind: Kind::A, mults: &[1, 1, 1, 1] },
    Entry { name: "split-B2", kind: Kind::B, mults: &[1, 1] },
    Entry { name: "split-B3", kind: Kind::B, mults: &[1, 1, 1] },
    Entry { name: "split-B4", kind: Kind::B, mults: &[1, 1, 1, 1] },
    Entry { name: "split-C3", kind: Kind::C, mults: &[1, 1, 1] },
    Entry { name: "split-C4", kind: Kind::C, mults: &[1, 1, 1, 1] },
    Entry { name: "split-D4", kind: Kind::D, mults: &[1, 1, 1, 1] },
    Entry { name: "split-D5", kind: Kind::D, mults: &[1, 1, 1, 1, 1] },
    Entry { name: "split-E6", kind: Kind::E, mults: &[1, 1, 1, 1, 1, 1] },
    Entry { name: "split-E7", kind: Kind::E, mults: &[1, 1, 1, 1, 1, 1, 1] },
    Entry { name: "split-E8", kind: Kind::E, mults: &[1, 1, 1, 1, 1, 1, 1, 1] },
    Entry { name: "split-F4", kind: Kind::F, mults: &[1, 1, 1, 1] },
    Entry { name: "split-G2", kind: Kind::G, mults: &[1, 1] },
    Entry { name: "su(2,2)", kind: Kind::C, mults: &[2, 1] },
    Entry { name: "su(3,3)", kind: Kind::C, mults: &[2, 2, 1] },
    Entry { name: "so*(8)", kind: Kind::C, mults: &[4, 1] },
    Entry { name: "so*(12)", kind: Kind::C, mults: &[4, 4, 1] },
    Entry { name: "so(2,5)", kind: Kind::C, mults: &[3, 1] },
    Entry { name: "e7(-25)", kind: Kind::C, mults: &[8, 8, 1] },
    Entry { name: "so(3,5)", kind: Kind::B, mults: &[1, 1, 2] },
    Entry { name: "so(3,6)", kind: Kind::B, mults: &[1, 1, 3] },
    Entry { name: "so(3,7)", kind: Kind::B, mults: &[1, 1, 4] },
    Entry { name: "so(4,6)", kind: Kind::B, mults: &[1, 1, 1, 2] },
    Entry { name: "so(4,7)", kind: Kind::B, mults: &[1, 1, 1, 3] },
    Entry { name: "so(5,8)", kind: Kind::B, mults: &[1, 1, 1, 1, 3] },
    Entry { name: "e6(2)", kind: Kind::F, mults: &[1, 1, 2, 2] },
    Entry { name: "e7(-5)", kind: Kind::F, mults: &[1, 1, 4, 4] },
    Entry { name: "e8(-24)", kind: Kind::F, mults: &[1, 1, 8, 8] },
    Entry { name: "su(2,3)", kind: Kind::BC, mults: &[2, 2] },
    Entry { name: "su(2,5)", kind: Kind::BC, mults: &[2, 6] },
    Entry { name: "su(3,5)", kind: Kind::BC, mults: &[2, 2, 4] },
    Entry { name: "sl(3,H)", kind: Kind::A, mults: &[4, 4] },
    Entry { name: "sl(4,H)", kind: Kind::A, mults: &[4, 4, 4] },
    Entry { name: "sl(3,C)", kind: Kind::A, mults: &[2, 2] },
    Entry { name: "so(1,4)", kind: Kind::A, mults: &[3] },
];

fn simple_edge(from: usize, to: usize) -> Edge {
    Edge { from, to, bond: 1, arrow_toward: None }
}

fn multi_edge(from: usize, to: usize, bond: u8, short: usize) -> Edge {
    Edge { from, to, bond, arrow_toward: Some(short) }
}

fn build(kind: Kind, mults: &[u32]) -> DynkinDiagram {
    let n = mults.len();
    let nodes = mults.iter().enumerate().map(|(i, &m)| Node { label: format!("a{}", i + 1), mult: m }).collect();
    let chain = |upto: usize| -> Vec<Edge> { (0..upto).map(|i| simple_edge(i, i + 1)).collect() };
    let (edges, non_reduced) = match kind {
        Kind::A => (chain(n.saturating_sub(1)), false),
        Kind::B | Kind::BC => {
            let mut e = chain(n - 2);
            e.push(multi_edge(n - 2, n - 1, 2, n - 1));
            (e, matches!(kind, Kind::BC))
        }
        Kind::C => {
            let mut e = chain(n - 2);
            e.push(multi_edge(n - 2, n - 1, 2, n - 2));
            (e, false)
        }
        Kind::D => {
            let mut e = chain(n - 2);
            e.push(simple_edge(n - 3, n - 1));
            (e, false)
        }
        Kind::E => {
            let mut e = vec![simple_edge(0, 2), simple_edge(1, 3)];
            for i in 2..n - 1 {
                e.push(simple_edge(i, i + 1));
            }
            (e, false)
        }
        Kind::F => (vec![simple_edge(0, 1), multi_edge(1, 2, 2, 2), simple_edge(2, 3)], false),
        Kind::G => (vec![multi_edge(0, 1, 3, 0)], false),
    };
    DynkinDiagram { nodes, edges, non_reduced }
}

/// The built-in catalog of named diagrams.
pub fn catalog() -> Vec<(String, DynkinDiagram)> {
    ENTRIES.iter().map(|e| (e.name.to_string(), build(e.kind, e.mults))).collect()
}

/// Looks up a catalog entry by name.
pub fn catalog_entry(name: &str) -> Option<DynkinDiagram> {
    ENTRIES.iter().find(|e| e.name == name).map(|e| build(e.kind, e.mults))
}

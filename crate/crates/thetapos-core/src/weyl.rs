//! Finite Weyl groups: elements as exact matrices, words, lengths, longest
//! elements, the Θ-Weyl group W(Θ) and the Θ-length.
//!
//! Elements are stored as matrices on the ambient space of the
//! [`RootSystem`]. Combinatorics run on the induced permutation of the roots.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::classify::admits_theta_positive;
use crate::error::Error;
use crate::linalg::Matrix;
use crate::rootsys::{roots_from_diagram, DynkinDiagram, Edge, Node, RootSystem};

/// Default letter cap of [`all_reduced_words`].
pub const DEFAULT_WORD_CAP: usize = 12;

/// Sequence of 1-based generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    /// Number of letters.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation.
    pub fn concat(&self, other: &WeylWord) -> WeylWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        WeylWord(v)
    }

    /// Reverse word, which spells the inverse element.
    pub fn reversed(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().cloned().collect())
    }
}

impl core::fmt::Display for WeylWord {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A Weyl group element as an exact orthogonal matrix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElement {
    /// Action on the ambient coordinate space.
    pub matrix: Matrix,
}

impl WeylElement {
    /// Identity of the given ambient dimension.
    pub fn identity(dim: usize) -> Self {
        WeylElement { matrix: Matrix::identity(dim) }
    }

    /// Product `self * other`.
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        WeylElement { matrix: &self.matrix * &other.matrix }
    }

    /// Inverse (the transpose, elements being orthogonal).
    pub fn inverse(&self) -> WeylElement {
        WeylElement { matrix: self.matrix.transpose() }
    }

    /// True for the identity.
    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// Multiplicative order.
    pub fn order(&self) -> u32 {
        let mut k = 1;
        let mut p = self.matrix.clone();
        while !p.is_identity() {
            p = &p * &self.matrix;
            k += 1;
        }
        k
    }
}

/// Permutation of root indices: `p[i]` is the index of `w(root_i)`.
pub type RootPerm = Vec<usize>;

/// Composition `a ∘ b`.
pub fn compose(a: &RootPerm, b: &RootPerm) -> RootPerm {
    b.iter().map(|&i| a[i]).collect()
}

/// Inverse permutation.
pub fn invert(a: &RootPerm) -> RootPerm {
    let mut inv = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Root system plus the permutations of its simple reflections.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    /// Underlying root system.
    pub rs: RootSystem,
    gens: Vec<RootPerm>,
    gen_mats: Vec<Matrix>,
    simple_idx: Vec<usize>,
}

impl WeylGroup {
    /// Builds the group of a root system.
    pub fn new(rs: RootSystem) -> Self {
        let gen_mats: Vec<Matrix> = (0..rs.rank).map(|i| rs.simple_reflection(i)).collect();
        let gens = gen_mats.iter().map(|m| rs.root_permutation(m).expect("simple reflections permute roots")).collect();
        let simple_idx = rs.simple.iter().map(|a| rs.root_index(a).expect("simple root")).collect();
        WeylGroup { rs, gens, gen_mats, simple_idx }
    }

    /// Builds the group of a diagram.
    pub fn of_diagram(d: &DynkinDiagram) -> Result<Self, Error> {
        Ok(Self::new(roots_from_diagram(d)?))
    }

    /// Number of simple reflections.
    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    /// Identity permutation.
    pub fn identity_perm(&self) -> RootPerm {
        (0..self.rs.roots.len()).collect()
    }

    /// Matrix of `s_i` (1-based).
    pub fn generator(&self, i: usize) -> WeylElement {
        WeylElement { matrix: self.gen_mats[i - 1].clone() }
    }

    /// Permutation of `s_i` (1-based).
    pub fn generator_perm(&self, i: usize) -> &RootPerm {
        &self.gens[i - 1]
    }

    /// The element spelled by a word.
    pub fn element(&self, w: &WeylWord) -> WeylElement {
        let mut m = Matrix::identity(self.rs.dim);
        for &l in &w.0 {
            m = &m * &self.gen_mats[l - 1];
        }
        WeylElement { matrix: m }
    }

    /// The permutation spelled by a word.
    pub fn perm_of_word(&self, w: &WeylWord) -> RootPerm {
        let mut p = self.identity_perm();
        for &l in &w.0 {
            p = compose(&p, &self.gens[l - 1]);
        }
        p
    }

    /// The root permutation of an element.
    pub fn perm(&self, w: &WeylElement) -> Result<RootPerm, Error> {
        if w.matrix.nrows() != self.rs.dim || !w.matrix.is_square() {
            return Err(Error::NotWeylElement);
        }
        let p = self.rs.root_permutation(&w.matrix).ok_or(Error::NotWeylElement)?;
        if (&w.matrix.transpose() * &w.matrix) != Matrix::identity(self.rs.dim) {
            return Err(Error::NotWeylElement);
        }
        Ok(p)
    }

    /// Length as the number of positive roots sent to negative roots.
    pub fn length_perm(&self, p: &RootPerm) -> usize {
        let npos = self.rs.num_positive();
        p[..npos].iter().filter(|&&j| j >= npos).count()
    }

    /// True when `w s_i` is shorter than `w`.
    pub fn has_right_descent(&self, p: &RootPerm, i: usize) -> bool {
        p[self.simple_idx[i - 1]] >= self.rs.num_positive()
    }

    /// Reduced word by greedy right descent.
    pub fn reduced_word_perm(&self, p: &RootPerm) -> WeylWord {
        let mut p = p.clone();
        let mut letters = Vec::new();
        'outer: loop {
            for i in 1..=self.rank() {
                if self.has_right_descent(&p, i) {
                    p = compose(&p, &self.gens[i - 1]);
                    letters.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        letters.reverse();
        WeylWord(letters)
    }

    /// Every element of the group, as root permutations, in breadth-first order.
    pub fn enumerate_perms(&self) -> Vec<RootPerm> {
        self.enumerate_subgroup(&(1..=self.rank()).collect::<Vec<_>>())
    }

    /// Elements of the parabolic subgroup generated by the given letters.
    pub fn enumerate_subgroup(&self, letters: &[usize]) -> Vec<RootPerm> {
        let id = self.identity_perm();
        let mut seen = BTreeSet::new();
        seen.insert(id.clone());
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for &l in letters {
                let q = compose(&p, &self.gens[l - 1]);
                if seen.insert(q.clone()) {
                    out.push(q.clone());
                    queue.push_back(q);
                }
            }
        }
        out
    }

    /// Coxeter matrix entry `m_ij`.
    pub fn coxeter_m(&self, i: usize, j: usize) -> u32 {
        perm_order(&compose(&self.gens[i - 1], &self.gens[j - 1]))
    }
}

fn perm_order(p: &RootPerm) -> u32 {
    let id: RootPerm = (0..p.len()).collect();
    let mut k = 1;
    let mut q = p.clone();
    while q != id {
        q = compose(&q, p);
        k += 1;
    }
    k
}

/// Length of `w`.
pub fn length(g: &WeylGroup, w: &WeylElement) -> Result<usize, Error> {
    Ok(g.length_perm(&g.perm(w)?))
}

/// A reduced word for `w`.
pub fn reduced_word(g: &WeylGroup, w: &WeylElement) -> Result<WeylWord, Error> {
    Ok(g.reduced_word_perm(&g.perm(w)?))
}

/// Longest element of the parabolic subgroup `W_S` (0-based node indices).
pub fn longest_element(g: &WeylGroup, s: &[usize]) -> WeylElement {
    g.element(&longest_word(g, s))
}

/// A reduced word of the longest element of `W_S` (0-based node indices).
pub fn longest_word(g: &WeylGroup, s: &[usize]) -> WeylWord {
    let mut p = g.identity_perm();
    let mut letters = Vec::new();
    'outer: loop {
        for &i in s {
            if !g.has_right_descent(&p, i + 1) {
                p = compose(&p, g.generator_perm(i + 1));
                letters.push(i + 1);
                continue 'outer;
            }
        }
        break;
    }
    WeylWord(letters)
}

/// Θ, its special root and the reduced words of the generators σ_α of W(Θ).
#[derive(Clone, Debug)]
pub struct ThetaStructure {
    /// The diagram.
    pub diagram: DynkinDiagram,
    /// Θ as 0-based node indices, ascending.
    pub theta: Vec<usize>,
    /// α_Θ, absent when Θ = Δ.
    pub special_root: Option<usize>,
    /// Reduced word of σ_α for each α ∈ Θ, in the order of `theta`.
    pub sigma_words: Vec<WeylWord>,
    /// The Weyl group of the diagram.
    pub group: WeylGroup,
}

/// Builds the Θ-structure of an admissible pair.
pub fn theta_structure(d: &DynkinDiagram, theta: &[usize]) -> Result<ThetaStructure, Error> {
    let mut theta = theta.to_vec();
    theta.sort_unstable();
    theta.dedup();
    let verdict = admits_theta_positive(d, &theta)?;
    if !verdict.admits {
        return Err(Error::NoThetaPositive);
    }
    let group = WeylGroup::of_diagram(d)?;
    let rest: Vec<usize> = (0..d.rank()).filter(|i| !theta.contains(i)).collect();
    let sigma_words = theta
        .iter()
        .map(|&a| {
            if Some(a) == verdict.special_root {
                let mut with = rest.clone();
                with.push(a);
                let big = longest_element(&group, &with);
                let small = longest_element(&group, &rest);
                reduced_word(&group, &big.mul(&small)).expect("valid element")
            } else {
                WeylWord(vec![a + 1])
            }
        })
        .collect();
    Ok(ThetaStructure { diagram: d.clone(), theta, special_root: verdict.special_root, sigma_words, group })
}

impl ThetaStructure {
    /// Nodes of Δ ∖ Θ.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.diagram.rank()).filter(|i| !self.theta.contains(i)).collect()
    }

    /// σ_α for the `k`-th element of Θ (1-based).
    pub fn sigma(&self, k: usize) -> WeylElement {
        self.group.element(&self.sigma_words[k - 1])
    }

    /// Permutation of σ_α for the `k`-th element of Θ (1-based).
    pub fn sigma_perm(&self, k: usize) -> RootPerm {
        self.group.perm_of_word(&self.sigma_words[k - 1])
    }

    /// w_{Δ∖Θ}.
    pub fn w_complement(&self) -> WeylElement {
        longest_element(&self.group, &self.complement())
    }

    /// w_Δ.
    pub fn w_delta(&self) -> WeylElement {
        longest_element(&self.group, &(0..self.diagram.rank()).collect::<Vec<_>>())
    }

    /// Θ-length of a permutation: Θ-letters in a reduced word.
    pub fn theta_length_perm(&self, p: &RootPerm) -> usize {
        self.group.reduced_word_perm(p).0.iter().filter(|&&l| self.theta.contains(&(l - 1))).count()
    }

    /// The chain `Δ ∖ Θ = {χ_1, …, χ_d}` starting next to α_Θ (0-based).
    pub fn complement_chain(&self) -> Vec<usize> {
        let Some(s) = self.special_root else { return Vec::new() };
        let rest = self.complement();
        let mut chain = Vec::new();
        let mut prev = s;
        let mut cur = s;
        while let Some(j) =
            self.diagram.neighbors(cur).into_iter().find(|j| rest.contains(j) && *j != prev && !chain.contains(j))
        {
            chain.push(j);
            prev = cur;
            cur = j;
        }
        chain
    }

    /// The word `w_j = s_0 s_0^{s_1} ⋯ s_0^{s_1⋯s_{j−1}}` with `x^y = y⁻¹xy`.
    pub fn w_j_word(&self, j: usize) -> WeylWord {
        let s0 = self.special_root.map(|s| s + 1).unwrap_or(0);
        let chain: Vec<usize> = self.complement_chain().iter().map(|c| c + 1).collect();
        let mut letters = Vec::new();
        for i in 0..j {
            let ys = &chain[..i];
            letters.extend(ys.iter().rev());
            letters.push(s0);
            letters.extend(ys.iter());
        }
        WeylWord(letters)
    }
}

/// w_max^Θ = w_Δ · w_{Δ∖Θ}.
pub fn w_max_theta(ts: &ThetaStructure) -> WeylElement {
    ts.w_delta().mul(&ts.w_complement())
}

/// Coxeter type of W(Θ) computed from the orders of σ_ασ_β.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WThetaType {
    /// Θ = Δ, so W(Θ) = W.
    pub same_as_g: bool,
    /// Coxeter label such as `"B2"`.
    pub label: String,
    /// Orders `m_ij` of `σ_i σ_j`.
    pub orders: Vec<Vec<u32>>,
}

/// Coxeter type of W(Θ).
pub fn coxeter_type_of_wtheta(ts: &ThetaStructure) -> WThetaType {
    let k = ts.theta.len();
    let perms: Vec<RootPerm> = (1..=k).map(|i| ts.sigma_perm(i)).collect();
    let orders: Vec<Vec<u32>> =
        (0..k).map(|i| (0..k).map(|j| perm_order(&compose(&perms[i], &perms[j]))).collect()).collect();
    WThetaType { same_as_g: ts.special_root.is_none(), label: coxeter_label(&orders), orders }
}

/// Type label of an irreducible finite Coxeter matrix with entries in {2,3,4,6}.
pub fn coxeter_label(m: &[Vec<u32>]) -> String {
    let k = m.len();
    let nodes: Vec<Node> = (0..k).map(|i| Node { label: format!("s{}", i + 1), mult: 1 }).collect();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let bond = match m[i][j] {
                3 => 1,
                4 => 2,
                6 => 3,
                _ => continue,
            };
            edges.push(Edge { from: i, to: j, bond, arrow_toward: None });
        }
    }
    let degree = |i: usize, edges: &[Edge]| edges.iter().filter(|e| e.from == i || e.to == i).count();
    let snapshot = edges.clone();
    for e in edges.iter_mut().filter(|e| e.bond > 1) {
        let short = if degree(e.to, &snapshot) == 1 { e.to } else { e.from };
        e.arrow_toward = Some(short);
    }
    match DynkinDiagram::new(nodes, edges, false).and_then(|d| d.cartan_type()) {
        Ok((t, _)) => {
            let t = if t.family == crate::rootsys::Family::C {
                crate::rootsys::CartanType { family: crate::rootsys::Family::B, rank: t.rank }
            } else {
                t
            };
            format!("{t}")
        }
        Err(_) => String::from("unknown"),
    }
}

/// Θ-length: number of Θ-letters in a reduced word.
pub fn theta_length(ts: &ThetaStructure, w: &WeylElement) -> Result<usize, Error> {
    Ok(ts.theta_length_perm(&ts.group.perm(w)?))
}

/// Lengths in W(Θ) with respect to R(Θ), by breadth-first search.
pub fn wtheta_lengths(ts: &ThetaStructure) -> BTreeMap<RootPerm, usize> {
    let k = ts.theta.len();
    let gens: Vec<RootPerm> = (1..=k).map(|i| ts.sigma_perm(i)).collect();
    let id = ts.group.identity_perm();
    let mut dist = BTreeMap::new();
    dist.insert(id.clone(), 0usize);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        let d = dist[&p];
        for g in &gens {
            let q = compose(&p, g);
            if !dist.contains_key(&q) {
                dist.insert(q.clone(), d + 1);
                queue.push_back(q);
            }
        }
    }
    dist
}

/// Concatenates the reduced words of the σ's of a word over R(Θ).
///
/// Letters of `tw` are 1-based positions in `ts.theta`.
pub fn expand_theta_word(ts: &ThetaStructure, tw: &WeylWord) -> Result<WeylWord, Error> {
    let k = ts.theta.len();
    if tw.0.iter().any(|&l| l == 0 || l > k) {
        return Err(Error::Parse(format!("letter out of range 1..={k}")));
    }
    let mut out = WeylWord::default();
    for &l in &tw.0 {
        out = out.concat(&ts.sigma_words[l - 1]);
    }
    let gens: Vec<RootPerm> = (1..=k).map(|i| ts.sigma_perm(i)).collect();
    let mut p = ts.group.identity_perm();
    for &l in &tw.0 {
        p = compose(&p, &gens[l - 1]);
    }
    let lengths = wtheta_lengths(ts);
    if lengths.get(&p) != Some(&tw.len()) {
        return Err(Error::NotReducedTheta);
    }
    debug_assert_eq!(ts.group.length_perm(&p), out.len());
    Ok(out)
}

/// Every word obtained from `start` by braid moves, given a Coxeter matrix.
pub fn braid_closure(start: &WeylWord, m: &[Vec<u32>]) -> BTreeSet<WeylWord> {
    let mut seen = BTreeSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(w) = queue.pop_front() {
        let n = w.len();
        for pos in 0..n {
            let a = w.0[pos];
            let Some(&b) = w.0.get(pos + 1) else { continue };
            if a == b {
                continue;
            }
            let mij = m[a - 1][b - 1] as usize;
            if pos + mij > n {
                continue;
            }
            let alternating = (0..mij).all(|k| w.0[pos + k] == if k % 2 == 0 { a } else { b });
            if !alternating {
                continue;
            }
            let mut v = w.0.clone();
            for k in 0..mij {
                v[pos + k] = if k % 2 == 0 { b } else { a };
            }
            let v = WeylWord(v);
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}

/// All reduced words of `w` over the simple reflections.
pub fn all_reduced_words(g: &WeylGroup, w: &WeylElement, cap: usize) -> Result<BTreeSet<WeylWord>, Error> {
    let start = reduced_word(g, w)?;
    if start.len() > cap {
        return Err(Error::ElementTooLong { length: start.len(), cap });
    }
    let k = g.rank();
    let m: Vec<Vec<u32>> = (1..=k).map(|i| (1..=k).map(|j| g.coxeter_m(i, j)).collect()).collect();
    Ok(braid_closure(&start, &m))
}

/// All reduced words over R(Θ) of an element of W(Θ).
pub fn all_reduced_theta_words(
    ts: &ThetaStructure,
    w: &WeylElement,
    cap: usize,
) -> Result<BTreeSet<WeylWord>, Error> {
    let target = ts.group.perm(w)?;
    let k = ts.theta.len();
    let gens: Vec<RootPerm> = (1..=k).map(|i| ts.sigma_perm(i)).collect();
    let id = ts.group.identity_perm();
    let mut parent: BTreeMap<RootPerm, Option<(RootPerm, usize)>> = BTreeMap::new();
    parent.insert(id.clone(), None);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        if p == target {
            break;
        }
        for (i, g) in gens.iter().enumerate() {
            let q = compose(&p, g);
            if !parent.contains_key(&q) {
                parent.insert(q.clone(), Some((p.clone(), i + 1)));
                queue.push_back(q);
            }
        }
    }
    if !parent.contains_key(&target) {
        return Err(Error::NotWeylElement);
    }
    let mut letters = Vec::new();
    let mut cur = target;
    while let Some(Some((prev, l))) = parent.get(&cur).cloned() {
        letters.push(l);
        cur = prev;
    }
    letters.reverse();
    if letters.len() > cap {
        return Err(Error::ElementTooLong { length: letters.len(), cap });
    }
    let orders = coxeter_type_of_wtheta(ts).orders;
    Ok(braid_closure(&WeylWord(letters), &orders))
}

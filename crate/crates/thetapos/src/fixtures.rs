//! Weyl group identities for B_{p+1} and F₄, re-derived from the root data.

use serde_json::{json, Value};
use thetapos_core::linalg::{frac, int, Matrix};
use thetapos_core::rootsys::{catalog_entry, DynkinDiagram, Edge, Node};
use thetapos_core::weyl::{
    coxeter_type_of_wtheta, length, longest_element, theta_structure, w_max_theta, WeylGroup, WeylWord,
};

/// One named identity and whether it holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

fn check(out: &mut Vec<Check>, name: impl Into<String>, pass: bool) {
    out.push(Check { name: name.into(), pass });
}

/// Split B_n diagram, the last node short.
pub fn b_diagram(n: usize) -> DynkinDiagram {
    let nodes = (0..n).map(|i| Node { label: format!("a{}", i + 1), mult: 1 }).collect();
    let mut edges: Vec<Edge> = (0..n - 2).map(|i| Edge { from: i, to: i + 1, bond: 1, arrow_toward: None }).collect();
    edges.push(Edge { from: n - 2, to: n - 1, bond: 2, arrow_toward: Some(n - 1) });
    DynkinDiagram::new(nodes, edges, false).expect("valid B diagram")
}

/// `x^{s_p ⋯ s_k}` written as `s_k ⋯ s_p · x · s_p ⋯ s_k`.
fn conjugate(x: &[usize], k: usize, p: usize) -> Vec<usize> {
    let mut w: Vec<usize> = (k..=p).collect();
    w.extend_from_slice(x);
    w.extend((k..=p).rev());
    w
}

/// The B_{p+1} identities for one `p >= 1`.
pub fn b_checks(p: usize) -> Vec<Check> {
    let n = p + 1;
    let d = b_diagram(n);
    let g = WeylGroup::of_diagram(&d).expect("finite type");
    let mut out = Vec::new();
    let tag = format!("B{n}");

    let w_delta = longest_element(&g, &(0..n).collect::<Vec<_>>());
    let l = length(&g, &w_delta).expect("Weyl element");
    check(&mut out, format!("{tag}: length of w_Delta is {}", n * n), l == n * n);
    check(&mut out, format!("{tag}: w_Delta = -id"), w_delta.matrix == Matrix::identity(n).scale(&int(-1)));

    let mut wmax_word: Vec<usize> = Vec::new();
    for k in 1..=p {
        wmax_word.extend(conjugate(&[n], k, p));
    }
    let mut delta_word = wmax_word.clone();
    delta_word.push(n);
    let e_delta = g.element(&WeylWord(delta_word.clone()));
    check(
        &mut out,
        format!("{tag}: product of conjugates of s{n} is a reduced word of w_Delta"),
        e_delta == w_delta && length(&g, &e_delta).ok() == Some(delta_word.len()),
    );

    let w_rest = longest_element(&g, &[p]);
    let w_max = w_delta.mul(&w_rest);
    let e_max = g.element(&WeylWord(wmax_word.clone()));
    check(
        &mut out,
        format!("{tag}: dropping the last letter gives a reduced word of w_max^Theta"),
        e_max == w_max && length(&g, &e_max).ok() == Some(wmax_word.len()),
    );
    let mut diag = vec![int(-1); n];
    diag[p] = int(1);
    let negated = if p == 1 { String::from("x1") } else { format!("x1..x{p}") };
    check(&mut out, format!("{tag}: w_max^Theta negates {negated} and fixes x{n}"), w_max.matrix == Matrix::diag(&diag));

    let sigma = [p, n, p];
    let mut sigma_word: Vec<usize> = Vec::new();
    for k in 1..=p {
        if k < p {
            sigma_word.extend(conjugate(&sigma, k, p - 1));
        } else {
            sigma_word.extend(sigma);
        }
    }
    check(
        &mut out,
        format!("{tag}: product of conjugates of sigma_{p} equals w_max^Theta"),
        g.element(&WeylWord(sigma_word)) == w_max,
    );
    out
}

fn half(rows: &[&[i64]]) -> Matrix {
    Matrix::from_ints(rows).scale(&frac(1, 2))
}

/// The F₄ identities with Θ = {α₁, α₂}.
pub fn f4_checks() -> Vec<Check> {
    let d = catalog_entry("split-F4").expect("catalog entry");
    let ts = theta_structure(&d, &[0, 1]).expect("admissible");
    let g = &ts.group;
    let mut out = Vec::new();
    let minus_id = Matrix::identity(4).scale(&int(-1));

    let w_delta = ts.w_delta();
    check(&mut out, "F4: length of w_Delta is 24", length(g, &w_delta).ok() == Some(24));
    check(&mut out, "F4: w_Delta = -id", w_delta.matrix == minus_id);

    let (s1, s2) = (ts.sigma(1), ts.sigma(2));
    check(&mut out, "F4: sigma_1 = s1", s1 == g.element(&WeylWord(vec![1])));
    check(&mut out, "F4: sigma_2 = s2 s3 s4 s2 s3 s2", s2 == g.element(&WeylWord(vec![2, 3, 4, 2, 3, 2])));
    check(
        &mut out,
        "F4: sigma_2 matrix",
        s2.matrix == half(&[&[-1, -1, -1, 1], &[-1, -1, 1, -1], &[-1, 1, 1, 1], &[1, -1, 1, 1]]),
    );
    let s12 = s1.mul(&s2);
    check(
        &mut out,
        "F4: sigma_1 sigma_2 matrix",
        s12.matrix == half(&[&[-1, -1, -1, 1], &[-1, 1, 1, 1], &[-1, -1, 1, -1], &[1, -1, 1, 1]]),
    );
    let sq = s12.mul(&s12);
    check(
        &mut out,
        "F4: (sigma_1 sigma_2)^2 matrix",
        sq.matrix == Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1], &[0, -1, 0, 0]]),
    );
    check(&mut out, "F4: sigma_1 sigma_2 has order 6", s12.order() == 6);
    let cube = sq.mul(&s12);
    let s343 = g.element(&WeylWord(vec![3, 4, 3]));
    check(
        &mut out,
        "F4: s3 s4 s3 matrix",
        s343.matrix == half(&[&[1, 1, 1, -1], &[1, 1, -1, 1], &[1, -1, 1, 1], &[-1, 1, 1, 1]]),
    );
    check(
        &mut out,
        "F4: (sigma_1 sigma_2)^3 = -transpose(s3 s4 s3)",
        cube.matrix == half(&[&[-1, -1, -1, 1], &[-1, -1, 1, -1], &[-1, 1, -1, -1], &[1, -1, -1, -1]])
            && cube.matrix == -&s343.matrix.transpose(),
    );
    check(&mut out, "F4: (sigma_1 sigma_2)^3 s3 s4 s3 = -id", cube.mul(&s343).matrix == minus_id);
    let s21 = s2.mul(&s1);
    let cube21 = s21.mul(&s21).mul(&s21);
    check(&mut out, "F4: (sigma_2 sigma_1)^3 s3 s4 s3 = -id", cube21.mul(&s343).matrix == minus_id);

    let block = [2, 3, 2, 4, 3, 2, 1];
    let mut word: Vec<usize> = block.iter().chain(&block).chain(&block).copied().collect();
    word.extend([3, 4, 3]);
    let e = g.element(&WeylWord(word.clone()));
    check(&mut out, "F4: the 24-letter word is a reduced word of w_Delta", word.len() == 24 && e == w_delta);
    check(&mut out, "F4: w_max^Theta = (sigma_2 sigma_1)^3", w_max_theta(&ts) == cube21);
    check(&mut out, "F4: W(Theta) has type G2", coxeter_type_of_wtheta(&ts).label == "G2");
    out
}

/// Every identity, B_{p+1} for `p = 1..=5` then F₄.
pub fn all_checks() -> Vec<Check> {
    let mut out: Vec<Check> = (1..=5).flat_map(b_checks).collect();
    out.extend(f4_checks());
    out
}

/// The checks as a JSON report.
pub fn report() -> Value {
    let checks = all_checks();
    let all = checks.iter().all(|c| c.pass);
    let rows: Vec<Value> = checks.iter().map(|c| json!({ "check": c.name, "pass": c.pass })).collect();
    json!({ "allPass": all, "checks": rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_words() {
        assert_eq!(conjugate(&[3], 1, 2), vec![1, 2, 3, 2, 1]);
        assert_eq!(conjugate(&[3], 3, 2), vec![3]);
    }

    #[test]
    fn small_b_checks_pass() {
        for c in b_checks(1).into_iter().chain(b_checks(2)) {
            assert!(c.pass, "{}", c.name);
        }
    }
}

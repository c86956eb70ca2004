//! Acceptance suite: one PASS/FAIL line per criterion, all checks exact.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_traits::{One, Signed, Zero};
use thetapos::fixtures::b_diagram;
use thetapos::sample;
use thetapos_core::classify::enumerate_positive_thetas;
use thetapos_core::flags::{
    act, basis_vector, calibrate, circle_point, circle_tuple_positive, flag_from, positive_triple_std, positive_tuple,
    positive_tuple_std, quadruple_criterion, relative_position, signature, standard_flags, CircleParam, Flag,
    CALIBRATION, REPRESENTATIVES,
};
use thetapos_core::linalg::{frac, int, vecops, Matrix, Rat};
use thetapos_core::rootsys::{catalog, catalog_entry, roots_from_diagram};
use thetapos_core::semigroup::{
    braid_change, decode, domain_of, f_gamma, is_positive, stratify, ur_product, Order, Stratification, UrElem,
    STRATA,
};
use thetapos_core::somodel::{model, theta_base, serre_check, SOModel};
use thetapos_core::weyl::{
    length, longest_element, theta_length, theta_structure, w_max_theta, WeylGroup, WeylWord,
};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn labels(names: &[&str]) -> BTreeSet<Vec<String>> {
    names
        .iter()
        .map(|s| if s.is_empty() { Vec::new() } else { s.split(',').map(String::from).collect() })
        .collect()
}

fn criterion_1() -> Outcome {
    let all = |n: usize| (1..=n).map(|i| format!("a{i}")).collect::<Vec<_>>().join(",");
    let expected: BTreeMap<&str, Vec<String>> = [
        ("split-A1", vec![all(1)]),
        ("split-A2", vec![all(2)]),
        ("split-A3", vec![all(3)]),
        ("split-A4", vec![all(4)]),
        ("split-B2", vec![all(2), "a1".into()]),
        ("split-B3", vec![all(3), "a1,a2".into()]),
        ("split-B4", vec![all(4), "a1,a2,a3".into()]),
        ("split-C3", vec![all(3), "a3".into()]),
        ("split-C4", vec![all(4), "a4".into()]),
        ("split-D4", vec![all(4)]),
        ("split-D5", vec![all(5)]),
        ("split-E6", vec![all(6)]),
        ("split-E7", vec![all(7)]),
        ("split-E8", vec![all(8)]),
        ("split-F4", vec![all(4), "a1,a2".into()]),
        ("split-G2", vec![all(2)]),
        ("su(2,2)", vec!["a2".into()]),
        ("su(3,3)", vec!["a3".into()]),
        ("so*(8)", vec!["a2".into()]),
        ("so*(12)", vec!["a3".into()]),
        ("so(2,5)", vec!["a2".into()]),
        ("e7(-25)", vec!["a3".into()]),
        ("so(3,5)", vec!["a1,a2".into()]),
        ("so(3,6)", vec!["a1,a2".into()]),
        ("so(3,7)", vec!["a1,a2".into()]),
        ("so(4,6)", vec!["a1,a2,a3".into()]),
        ("so(4,7)", vec!["a1,a2,a3".into()]),
        ("so(5,8)", vec!["a1,a2,a3,a4".into()]),
        ("e6(2)", vec!["a1,a2".into()]),
        ("e7(-5)", vec!["a1,a2".into()]),
        ("e8(-24)", vec!["a1,a2".into()]),
        ("su(2,3)", vec![]),
        ("su(2,5)", vec![]),
        ("su(3,5)", vec![]),
        ("sl(3,H)", vec![]),
        ("sl(4,H)", vec![]),
        ("sl(3,C)", vec![]),
        ("so(1,4)", vec![]),
    ]
    .into_iter()
    .collect();
    let cat = catalog();
    ensure(cat.len() == expected.len(), || format!("catalog has {} entries", cat.len()))?;
    for (name, d) in &cat {
        let want = expected.get(name.as_str()).ok_or_else(|| format!("unexpected entry {name}"))?;
        let want = labels(&want.iter().map(String::as_str).collect::<Vec<_>>());
        let got: BTreeSet<Vec<String>> = enumerate_positive_thetas(d)
            .iter()
            .map(|t| t.iter().map(|&i| d.nodes[i].label.clone()).collect())
            .collect();
        ensure(got == want, || format!("{name}: got {got:?}, want {want:?}"))?;
        let split = d.nodes.iter().all(|n| n.mult == 1);
        let double = d.edges.iter().any(|e| e.bond == 2);
        if split && double {
            ensure(got.len() == 2, || format!("{name}: split B/C/F4 must admit exactly 2"))?;
        }
        if d.non_reduced || d.nodes.iter().all(|n| n.mult == 4) {
            ensure(got.is_empty(), || format!("{name}: must admit none"))?;
        }
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    for p in 1..=5usize {
        let n = p + 1;
        let d = b_diagram(n);
        let g = WeylGroup::of_diagram(&d).map_err(|e| e.to_string())?;
        let rs = roots_from_diagram(&d).map_err(|e| e.to_string())?;
        let w_delta = longest_element(&g, &(0..n).collect::<Vec<_>>());
        let l = length(&g, &w_delta).map_err(|e| e.to_string())?;
        ensure(l == n * n && rs.num_positive() == n * n, || format!("p={p}: length {l}"))?;

        // s_{p+1}^{s_p...s_k} = s_k ... s_p s_{p+1} s_p ... s_k
        let conj = |x: &[usize], k: usize, top: usize| -> Vec<usize> {
            (k..=top).chain(x.iter().copied()).chain((k..=top).rev()).collect()
        };
        let mut wmax: Vec<usize> = Vec::new();
        for k in 1..=p {
            wmax.extend(conj(&[n], k, p));
        }
        let mut wd = wmax.clone();
        wd.push(n);
        let e = g.element(&WeylWord(wd.clone()));
        ensure(e == w_delta, || format!("p={p}: w_Delta factorization"))?;
        ensure(length(&g, &e).ok() == Some(wd.len()), || format!("p={p}: w_Delta lengths not additive"))?;

        let ts = theta_structure(&d, &(0..p).collect::<Vec<_>>()).map_err(|e| e.to_string())?;
        let wm = w_max_theta(&ts);
        let e = g.element(&WeylWord(wmax.clone()));
        ensure(e == wm, || format!("p={p}: w_max^Theta factorization"))?;
        ensure(length(&g, &e).ok() == Some(wmax.len()), || format!("p={p}: w_max lengths not additive"))?;
        let mut sig: Vec<usize> = Vec::new();
        for k in 1..=p {
            if k < p {
                sig.extend(conj(&[p, n, p], k, p - 1));
            } else {
                sig.extend([p, n, p]);
            }
        }
        ensure(g.element(&WeylWord(sig)) == wm, || format!("p={p}: sigma-form of w_max^Theta"))?;

        let x: Vec<Rat> = (1..=n as i64).map(|i| int(i * i + 1)).collect();
        let mut want = vecops::neg(&x);
        want[p] = x[p].clone();
        ensure(wm.matrix.apply(&x) == want, || format!("p={p}: w_max^Theta action"))?;
    }
    Ok(())
}

fn half(rows: &[&[i64]]) -> Matrix {
    Matrix::from_ints(rows).scale(&frac(1, 2))
}

fn criterion_3() -> Outcome {
    let d = catalog_entry("split-F4").ok_or("no F4")?;
    let ts = theta_structure(&d, &[0, 1]).map_err(|e| e.to_string())?;
    let g = &ts.group;
    let wd = ts.w_delta();
    ensure(length(g, &wd).ok() == Some(24), || "length of w_Delta".into())?;
    let s2 = ts.sigma(2);
    let printed = half(&[&[-1, -1, -1, 1], &[-1, -1, 1, -1], &[-1, 1, 1, 1], &[1, -1, 1, 1]]);
    ensure(s2.matrix == printed, || format!("sigma_2 = {:?}", s2.matrix.to_strings()))?;
    let s12 = ts.sigma(1).mul(&s2);
    let s12_6 = (0..5).fold(s12.clone(), |acc, _| acc.mul(&s12));
    ensure(s12_6.is_identity(), || "(sigma1 sigma2)^6 != id".into())?;
    let s12_3 = s12.mul(&s12).mul(&s12);
    ensure(!s12_3.is_identity() && !s12.mul(&s12).is_identity(), || "order smaller than 6".into())?;
    let s343 = g.element(&WeylWord(vec![3, 4, 3]));
    let minus = Matrix::identity(4).scale(&int(-1));
    ensure(s12_3.mul(&s343).matrix == minus, || "(sigma1 sigma2)^3 s3s4s3 != -id".into())
}

fn criterion_4() -> Outcome {
    let d = catalog_entry("split-F4").ok_or("no F4")?;
    let ts = theta_structure(&d, &[0, 1]).map_err(|e| e.to_string())?;
    let all = ts.group.enumerate_perms();
    ensure(all.len() == 1152, || format!("|W(F4)| = {}", all.len()))?;
    let sub = ts.group.enumerate_subgroup(&[3, 4]);
    ensure(sub.len() == 6, || format!("|W_(Delta-Theta)| = {}", sub.len()))?;
    for w in &all {
        let l = ts.theta_length_perm(w);
        for x in &sub {
            let lx = ts.theta_length_perm(&thetapos_core::weyl::compose(x, w));
            let rx = ts.theta_length_perm(&thetapos_core::weyl::compose(w, x));
            ensure(lx == l && rx == l, || "theta-length not invariant".into())?;
        }
    }
    for (name, theta) in [("split-F4", vec![0, 1]), ("so(3,5)", vec![0, 1]), ("so(5,8)", vec![0, 1, 2, 3])] {
        let d = catalog_entry(name).ok_or("missing")?;
        let ts = theta_structure(&d, &theta).map_err(|e| e.to_string())?;
        let dd = ts.complement_chain().len();
        for j in 0..=dd + 1 {
            let w = ts.w_j_word(j);
            let e = ts.group.element(&w);
            let reduced = length(&ts.group, &e).ok() == Some(w.len());
            let letters = w.0.iter().filter(|&&l| ts.theta.contains(&(l - 1))).count();
            let tl = theta_length(&ts, &e).map_err(|e| e.to_string())?;
            ensure(reduced && letters == j && tl == j, || format!("{name}: theta-length of w_{j} is {tl}"))?;
        }
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for q in [4usize, 5, 7] {
        let m = model(q).map_err(|e| e.to_string())?;
        let base = theta_base(&m).map_err(|e| e.to_string())?;
        let report = serre_check(&base);
        ensure(report.all_pass(), || format!("q={q}: a Serre relation fails"))?;
        let (a, b) = (&base.alpha1, &base.alpha2);
        ensure(b.d.bracket(&a.e) == a.e.scale(&int(-2)), || format!("q={q}: [D2,E1] != -2 E1"))?;
        let ad = |x: &Matrix, y: &Matrix, k: usize| (0..k).fold(y.clone(), |acc, _| x.bracket(&acc));
        ensure(ad(&b.e, &a.e, 3).is_zero(), || format!("q={q}: (ad E2)^3 E1 != 0"))?;
        ensure(!ad(&b.e, &a.e, 2).is_zero(), || format!("q={q}: (ad E2)^2 E1 already 0"))?;
        ensure(report.cartan == vec![vec![2, -1], vec![-2, 2]], || format!("q={q}: cartan {:?}", report.cartan))?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for (q, seed) in [(4usize, 601u64), (6, 602)] {
        let m = model(q).map_err(|e| e.to_string())?;
        let mut r = sample::rng(seed);
        for i in 0..100 {
            let u = sample::interior_coords(&mut r, &m);
            let w = braid_change(&m, &u).map_err(|e| e.to_string())?;
            let (s1, v1, s2, v2) = (&u.s1, &u.v1, &u.s2, &u.v2);
            let (t1, w1, t2, w2) = (&w.s1, &w.v1, &w.s2, &w.v2);
            let lhs = &(&(&m.x1(s1) * &m.x2(v1)) * &m.x1(s2)) * &m.x2(v2);
            let rhs = &(&(&m.x2(w2) * &m.x1(t2)) * &m.x2(w1)) * &m.x1(t1);
            ensure(lhs == rhs, || format!("q={q} sample {i}: braid identity"))?;
            ensure(
                t1.is_positive() && t2.is_positive() && w.is_interior(&m),
                || format!("q={q} sample {i}: output not positive"),
            )?;
            let qj = |x: &[Rat]| m.q_j(x);
            let sum = vecops::add(v1, v2);
            let wsum = vecops::add(w1, w2);
            let lhs3 = vecops::add(&vecops::scale(s1, &sum), &vecops::scale(s2, v2));
            let relations = [
                s1 + s2 == t1 + t2,
                sum == wsum,
                lhs3 == vecops::scale(t2, w1),
                s1 * qj(&sum) + s2 * qj(v2) == t2 * qj(w1),
                vecops::scale(s2, v1) == vecops::add(&vecops::scale(t2, w2), &vecops::scale(t1, &wsum)),
                s2 * qj(v1) == t2 * qj(w2) + t1 * qj(&wsum),
                s1 * s2 * qj(v1) == t2 * t1 * qj(w1),
            ];
            if let Some(k) = relations.iter().position(|ok| !ok) {
                return Err(format!("q={q} sample {i}: coordinate relation {} fails", k + 1));
            }
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    for (q, seed) in [(4usize, 701u64), (5, 702), (6, 703)] {
        let m = model(q).map_err(|e| e.to_string())?;
        let mut r = sample::rng(seed);
        let mut prev: Option<Matrix> = None;
        for i in 0..100 {
            let u = sample::interior_coords(&mut r, &m);
            let g = f_gamma(&m, &u);
            let back = decode(&m, &g, Order::O1212).map_err(|e| format!("q={q} sample {i}: {e}"))?;
            ensure(back == u, || format!("q={q} sample {i}: decode(F(u)) != u"))?;
            ensure(is_positive(&m, &g) == Ok(true), || format!("q={q} sample {i}: F(u) not positive"))?;
            if let Some(h) = &prev {
                ensure(is_positive(&m, &(&g * h)) == Ok(true), || format!("q={q} sample {i}: product not positive"))?;
            }
            prev = Some(g);
            let b = sample::boundary_coords(&mut r, &m);
            ensure(
                is_positive(&m, &f_gamma(&m, &b)) == Ok(false),
                || format!("q={q} sample {i}: boundary image is positive"),
            )?;
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for q in [4usize, 5, 6] {
        let m = model(q).map_err(|e| e.to_string())?;
        let (_, minus) = standard_flags(&m);
        let v = |s: &str| basis_vector(&m, s).expect("basis name");
        let sigs: BTreeSet<_> = REPRESENTATIVES
            .iter()
            .map(|(a, b)| signature(&m, &minus, &flag_from(&m, &v(a), &v(b)).expect("isotropic")))
            .collect();
        ensure(sigs.len() == 16, || format!("q={q}: {} distinct signatures", sigs.len()))?;
        ensure(calibrate(&m) == CALIBRATION.to_vec(), || format!("q={q}: calibration table differs"))?;

        let mut r = sample::rng(800 + q as u64);
        let mut seen: BTreeMap<Matrix, usize> = BTreeMap::new();
        for (i, (label, _)) in STRATA.iter().enumerate() {
            for k in 0..12 {
                let u = sample::stratum_params(&mut r, &m, i);
                ensure(domain_of(&m, &u) == Some(i), || format!("q={q}: params not in D_{label}"))?;
                let g = f_gamma(&m, &u);
                match stratify(&m, &g).map_err(|e| e.to_string())? {
                    Stratification::Nonnegative(st) => {
                        ensure(st.index == i, || format!("q={q} {label} sample {k}: stratified as {}", st.label))?;
                        ensure(f_gamma(&m, &st.params) == g, || format!("q={q} {label}: params do not reproduce g"))?;
                    }
                    Stratification::NotNonnegative => return Err(format!("q={q} {label}: not nonnegative")),
                }
                let pos = relative_position(&m, &minus, &act(&m, &g, &minus)).map_err(|e| e.to_string())?;
                ensure(pos.index == i, || format!("q={q} {label}: relative position {}", pos.label))?;
                if let Some(&j) = seen.get(&g) {
                    ensure(j == i, || format!("q={q}: strata {j} and {i} share a sample"))?;
                }
                seen.insert(g, i);
            }
        }
    }
    Ok(())
}

fn u_flags(m: &SOModel, us: &[Matrix]) -> Vec<Flag> {
    let (_, minus) = standard_flags(m);
    let mut prefix = Matrix::identity(m.n);
    let mut partial: Vec<Flag> = Vec::new();
    for u in us {
        prefix = &prefix * u;
        partial.push(act(m, &prefix, &minus));
    }
    partial.reverse();
    partial
}

fn criterion_9() -> Outcome {
    let mut agree_negative = 0usize;
    for (q, seed) in [(4usize, 901u64), (5, 902)] {
        let m = model(q).map_err(|e| e.to_string())?;
        let (plus, minus) = standard_flags(&m);
        let lift = thetapos_core::flags::longest_lift(&m);
        let mut r = sample::rng(seed);
        for i in 0..25 {
            let c = sample::interior_coords(&mut r, &m);
            let x = act(&m, &f_gamma(&m, &c), &minus);
            ensure(positive_triple_std(&m, &x), || format!("q={q} sample {i}: (E+, F(c)E-, E-) not positive"))?;
            let general = positive_tuple(&m, &[plus.clone(), x.clone(), minus.clone()]).map_err(|e| e.to_string())?;
            ensure(general, || format!("q={q} sample {i}: general test rejects the triple"))?;

            let b = sample::boundary_coords(&mut r, &m);
            let inv = f_gamma(&m, &c).inverse().expect("unipotent");
            for y in [x.clone(), act(&m, &f_gamma(&m, &b), &minus), act(&m, &inv, &minus)] {
                let swapped = positive_triple_std(&m, &act(&m, &lift, &y));
                let reversed = positive_tuple(&m, &[minus.clone(), y.clone(), plus.clone()]).map_err(|e| e.to_string())?;
                let direct = positive_triple_std(&m, &y);
                ensure(swapped == direct && reversed == direct, || format!("q={q} sample {i}: swap changes positivity"))?;
            }

            let us: Vec<Matrix> = (0..3).map(|_| f_gamma(&m, &sample::interior_coords(&mut r, &m))).collect();
            let flags = u_flags(&m, &us);
            let a = positive_tuple_std(&m, &flags);
            let b4 = quadruple_criterion(&m, &flags);
            ensure(a && b4, || format!("q={q} sample {i}: constructed 5-tuple rejected"))?;
            let mut full = vec![plus.clone()];
            full.extend(flags.iter().cloned());
            full.push(minus.clone());
            ensure(positive_tuple(&m, &full) == Ok(true), || format!("q={q} sample {i}: general 5-tuple rejected"))?;

            let mut bad = us.clone();
            match i % 3 {
                0 => bad[1] = bad[1].inverse().expect("unipotent"),
                1 => bad[2] = f_gamma(&m, &sample::boundary_coords(&mut r, &m)),
                _ => bad.swap(0, 2),
            }
            let mut flags = u_flags(&m, &bad);
            if i % 3 == 2 {
                flags.swap(0, 1);
            }
            let a = positive_tuple_std(&m, &flags);
            ensure(a == quadruple_criterion(&m, &flags), || format!("q={q} sample {i}: criteria disagree"))?;
            agree_negative += usize::from(!a);
        }
    }
    ensure(agree_negative > 0, || "no non-positive tuples were exercised".into())
}

fn criterion_10() -> Outcome {
    for (q, seed) in [(4usize, 1001u64), (5, 1002)] {
        let m = model(q).map_err(|e| e.to_string())?;
        let base = theta_base(&m).map_err(|e| e.to_string())?;
        let mut r = sample::rng(seed);
        for i in 0..10 {
            let ts = sample::increasing(&mut r, 3);
            ensure(circle_tuple_positive(&m, &base, &ts) == Ok(true), || format!("q={q} sample {i}: {ts:?}"))?;
            let mut tuple = vec![circle_point(&m, &base, &CircleParam::Infinity)];
            for t in ts.iter().rev() {
                tuple.push(circle_point(&m, &base, &CircleParam::Finite(t.clone())));
            }
            ensure(positive_tuple(&m, &tuple) == Ok(true), || format!("q={q} sample {i}: general test rejects"))?;
            tuple.rotate_left(1);
            ensure(positive_tuple(&m, &tuple) == Ok(true), || format!("q={q} sample {i}: rotation rejected"))?;
        }
    }
    Ok(())
}

fn criterion_11() -> Outcome {
    for (k, r_int) in [1i64, 2, 5].into_iter().enumerate() {
        let r = int(r_int);
        let mut g = sample::rng(1100 + k as u64);
        let id = UrElem::identity(r.clone());
        let mut pairs: Vec<(UrElem, UrElem)> = vec![(id.clone(), id.clone())];
        pairs.extend((0..199).map(|_| (sample::ur_elem(&mut g, &r), sample::ur_elem(&mut g, &r))));
        for (i, (x, y)) in pairs.iter().enumerate() {
            let p = ur_product(x, y).map_err(|e| e.to_string())?;
            let mm = &x.matrix() * &y.matrix();
            ensure(p.matrix() == mm, || format!("r={r_int} pair {i}: product formula"))?;
            let (a, b, c) = (&mm[(0, 1)], &mm[(1, 2)], &mm[(0, 2)]);
            ensure(
                !a.is_negative() && !b.is_negative() && !c.is_negative() && *c <= &r * a * b,
                || format!("r={r_int} pair {i}: closure fails"),
            )?;
            if mm.is_identity() {
                ensure(x.matrix().is_identity() && y.matrix().is_identity(), || format!("r={r_int}: not sharp"))?;
            }
        }
        let x = UrElem { a: int(1), b: Rat::zero(), c: Rat::zero(), r: r.clone() };
        let y = UrElem { a: -int(1), b: Rat::zero(), c: Rat::zero(), r: r.clone() };
        ensure(ur_product(&x, &y).is_err(), || "inverse pair accepted".into())?;
        ensure(Rat::one() <= r, || "r < 1".into())?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("classification table", criterion_1),
        ("longest elements of B_{p+1}", criterion_2),
        ("F4 identities", criterion_3),
        ("theta-length laws", criterion_4),
        ("Serre relations", criterion_5),
        ("braid identity", criterion_6),
        ("semigroup closure and decoding", criterion_7),
        ("stratification", criterion_8),
        ("positivity of tuples", criterion_9),
        ("positive circle", criterion_10),
        ("U_r family", criterion_11),
    ];
    let mut failures = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err(String::from("panicked")));
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name}", i + 1),
            Err(e) => {
                println!("criterion {:>2} FAIL  {name}: {e}", i + 1);
                failures.push(i + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failing criteria: {failures:?}");
}

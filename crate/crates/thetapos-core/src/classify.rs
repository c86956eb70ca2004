//! Decides from diagram data whether (G, Θ) admits a Θ-positive structure.

use alloc::vec::Vec;

use crate::error::Error;
use crate::rootsys::DynkinDiagram;

/// Why a verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    /// Θ = Δ in a split real form.
    SplitTotalPositivity,
    /// Θ ≠ Δ and both criteria hold.
    ThetaPositive,
    /// The root space of this node has dimension greater than one.
    NotProximal(usize),
    /// This node meets Δ ∖ Θ without a double arrow pointing away from Θ.
    NotEven(usize),
    /// BC systems never qualify.
    NonReducedSystem,
}

/// Outcome of [`admits_theta_positive`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    /// Whether a Θ-positive structure exists.
    pub admits: bool,
    /// The node of Θ adjacent to Δ ∖ Θ, when Θ ≠ Δ and `admits`.
    pub special_root: Option<usize>,
    /// Justification.
    pub reason: Reason,
}

impl Verdict {
    fn no(reason: Reason) -> Self {
        Verdict { admits: false, special_root: None, reason }
    }
}

/// Applies the proximal and even criteria to `(d, Θ)`.
pub fn admits_theta_positive(d: &DynkinDiagram, theta: &[usize]) -> Result<Verdict, Error> {
    if theta.is_empty() {
        return Err(Error::EmptyTheta);
    }
    let n = d.rank();
    if theta.iter().any(|&t| t >= n) {
        return Err(Error::InvalidDiagram("Θ node out of range".into()));
    }
    d.cartan_type()?;
    if d.non_reduced {
        return Ok(Verdict::no(Reason::NonReducedSystem));
    }
    let in_theta = |i: usize| theta.contains(&i);
    for i in 0..n {
        if in_theta(i) && d.nodes[i].mult != 1 {
            return Ok(Verdict::no(Reason::NotProximal(i)));
        }
    }
    let mut special = Vec::new();
    for i in 0..n {
        if !in_theta(i) {
            continue;
        }
        let outside: Vec<usize> = d.neighbors(i).into_iter().filter(|&j| !in_theta(j)).collect();
        if outside.is_empty() {
            continue;
        }
        let ok = outside.len() == 1 && {
            let e = d.edge_between(i, outside[0]).expect("neighbor edge");
            e.bond == 2 && e.arrow_toward == Some(outside[0])
        };
        if !ok {
            return Ok(Verdict::no(Reason::NotEven(i)));
        }
        special.push(i);
    }
    if theta.len() == n {
        return Ok(Verdict { admits: true, special_root: None, reason: Reason::SplitTotalPositivity });
    }
    match special.as_slice() {
        [s] => Ok(Verdict { admits: true, special_root: Some(*s), reason: Reason::ThetaPositive }),
        _ => Err(Error::InvalidDiagram("Θ is not adjacent to a unique node of Δ ∖ Θ".into())),
    }
}

/// All nonempty Θ admitting a Θ-positive structure, largest first.
pub fn enumerate_positive_thetas(d: &DynkinDiagram) -> Vec<Vec<usize>> {
    let n = d.rank();
    let mut out: Vec<Vec<usize>> = (1u32..(1 << n))
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect::<Vec<usize>>())
        .filter(|t| admits_theta_positive(d, t).map(|v| v.admits).unwrap_or(false))
        .collect();
    out.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{catalog, catalog_entry, roots_from_diagram};

    #[test]
    fn spec_examples() {
        let a2 = catalog_entry("split-A2").unwrap();
        let v = admits_theta_positive(&a2, &[0, 1]).unwrap();
        assert_eq!(v, Verdict { admits: true, special_root: None, reason: Reason::SplitTotalPositivity });
        let v = admits_theta_positive(&a2, &[0]).unwrap();
        assert_eq!(v.reason, Reason::NotEven(0));
        let b3 = catalog_entry("so(3,5)").unwrap();
        let v = admits_theta_positive(&b3, &[0, 1]).unwrap();
        assert!(v.admits);
        assert_eq!(v.special_root, Some(1));
        assert_eq!(admits_theta_positive(&b3, &[]), Err(Error::EmptyTheta));
    }

    #[test]
    fn enumerations() {
        let f4 = catalog_entry("split-F4").unwrap();
        assert_eq!(enumerate_positive_thetas(&f4), vec![vec![0, 1, 2, 3], vec![0, 1]]);
        let b3 = catalog_entry("so(3,5)").unwrap();
        assert_eq!(enumerate_positive_thetas(&b3), vec![vec![0, 1]]);
        let bc = catalog_entry("su(2,3)").unwrap();
        assert!(enumerate_positive_thetas(&bc).is_empty());
        assert_eq!(admits_theta_positive(&bc, &[0]).unwrap().reason, Reason::NonReducedSystem);
        let g2 = catalog_entry("split-G2").unwrap();
        assert_eq!(enumerate_positive_thetas(&g2), vec![vec![0, 1]]);
        assert_eq!(admits_theta_positive(&g2, &[1]).unwrap().reason, Reason::NotEven(1));
        let h = catalog_entry("sl(3,H)").unwrap();
        assert_eq!(admits_theta_positive(&h, &[0, 1]).unwrap().reason, Reason::NotProximal(0));
    }

    #[test]
    fn accepted_thetas_are_connected_with_large_special_block() {
        for (name, d) in catalog() {
            let rs = roots_from_diagram(&d).unwrap();
            for t in enumerate_positive_thetas(&d) {
                if t.len() == d.rank() {
                    continue;
                }
                let rest: Vec<usize> = (0..d.rank()).filter(|i| !t.contains(i)).collect();
                assert!(d.induced_connected(&t), "{name}");
                assert!(d.induced_connected(&rest), "{name}");
                let s = admits_theta_positive(&d, &t).unwrap().special_root.unwrap();
                assert!(rs.theta_block_dimension(&t, s) >= 2, "{name}");
            }
        }
    }
}

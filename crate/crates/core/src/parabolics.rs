//! Parabolic root subsystems `Φ_I`, their complements `Ψ_I^±`, and the
//! admissibility condition on `I`: every positive root of `Φ_I` has all
//! simple-root coefficients at most 1.

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::verdict::{Counterexample, Verdict};
use crate::weyl::{Subset, WeylGroup};

/// Largest rank for which [`admissible_subsets`] sweeps all of `2^Δ`.
pub const MAX_SWEEP_RANK: usize = 24;

/// The partition of `Φ` induced by `I`, as root indices.
#[derive(Debug, Clone)]
pub struct ParabolicData {
    pub subset: Subset,
    /// `Φ_I`: roots supported on `I`.
    pub phi: Vec<usize>,
    /// `Ψ_I⁺ = Φ⁺ − Φ_I`.
    pub psi_plus: Vec<usize>,
    /// `Ψ_I⁻ = Φ⁻ − Φ_I`.
    pub psi_minus: Vec<usize>,
}

impl ParabolicData {
    pub fn phi_plus<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = usize> + 'a {
        self.phi
            .iter()
            .copied()
            .filter(|&r| rs.root(r).is_positive())
    }

    pub fn phi_minus<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = usize> + 'a {
        self.phi
            .iter()
            .copied()
            .filter(|&r| rs.root(r).is_negative())
    }
}

pub fn subsystem(rs: &RootSystem, subset: Subset) -> ParabolicData {
    let mut data = ParabolicData {
        subset,
        phi: Vec::new(),
        psi_plus: Vec::new(),
        psi_minus: Vec::new(),
    };
    for (r, root) in rs.roots().iter().enumerate() {
        if Subset::from_bits(root.support()).is_subset_of(subset) {
            data.phi.push(r);
        } else if root.is_positive() {
            data.psi_plus.push(r);
        } else {
            data.psi_minus.push(r);
        }
    }
    data
}

/// The highest positive root of `Φ_I` with a coefficient above 1, if any.
pub fn admissibility_witness(rs: &RootSystem, subset: Subset) -> Option<usize> {
    rs.positive_roots()
        .filter(|(_, r)| Subset::from_bits(r.support()).is_subset_of(subset))
        .filter(|(_, r)| r.coeffs().iter().any(|&m| m > 1))
        .map(|(k, _)| k)
        .last()
}

pub fn is_admissible(rs: &RootSystem, subset: Subset) -> bool {
    admissibility_witness(rs, subset).is_none()
}

/// Every admissible `I ⊆ Δ`, in increasing bitmask order.
pub fn admissible_subsets(rs: &RootSystem) -> Result<Vec<Subset>> {
    if rs.rank() > MAX_SWEEP_RANK {
        return Err(Error::RankTooLarge {
            rank: rs.rank(),
            max: MAX_SWEEP_RANK,
        });
    }
    Ok(Subset::all(rs.rank())
        .filter(|&s| is_admissible(rs, s))
        .collect())
}

/// Diagram-side classification: true iff every connected component of the
/// Dynkin diagram restricted to `I` is a simply-laced path, i.e. of type A.
///
/// Reads only the Cartan matrix; kept as an independent cross-check for
/// [`is_admissible`].
pub fn dynkin_components_type_a(cartan: &[Vec<i32>], subset: Subset) -> bool {
    let nodes: Vec<usize> = subset.iter().filter(|&i| i < cartan.len()).collect();
    let mut seen = Subset::EMPTY;
    for &start in &nodes {
        if seen.contains(start) {
            continue;
        }
        let mut stack = vec![start];
        seen = seen.with(start);
        let (mut vertices, mut edges) = (0usize, 0usize);
        while let Some(v) = stack.pop() {
            vertices += 1;
            let mut degree = 0;
            for &u in &nodes {
                if u == v || cartan[v][u] == 0 {
                    continue;
                }
                if cartan[v][u] * cartan[u][v] != 1 {
                    return false;
                }
                degree += 1;
                edges += 1;
                if !seen.contains(u) {
                    seen = seen.with(u);
                    stack.push(u);
                }
            }
            if degree > 2 {
                return false;
            }
        }
        // each edge counted from both ends; a path has V - 1 edges
        if edges / 2 + 1 != vertices {
            return false;
        }
    }
    true
}

/// Checks that every `w ∈ W_I` maps `Ψ_I⁻` onto itself.
pub fn check_psi_stability(rs: &RootSystem, group: &WeylGroup, subset: Subset) -> Verdict {
    let data = subsystem(rs, subset);
    let mut in_psi = vec![false; rs.num_roots()];
    for &r in &data.psi_minus {
        in_psi[r] = true;
    }
    let mut checked = 0;
    for w in group.parabolic(subset) {
        for &r in &data.psi_minus {
            checked += 1;
            if !in_psi[w.apply(r)] {
                return Verdict::fail(
                    checked,
                    Counterexample::new("w(α) leaves Ψ_I⁻")
                        .subset(subset)
                        .element(w.word_labels())
                        .root(rs.root(r).clone()),
                );
            }
        }
    }
    Verdict::pass(checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Root;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_str_spec(s).unwrap()
    }

    #[test]
    fn extreme_subsets() {
        let b3 = rs("B3");
        let empty = subsystem(&b3, Subset::EMPTY);
        assert!(empty.phi.is_empty());
        assert_eq!(empty.psi_plus.len(), 9);
        assert_eq!(empty.psi_minus.len(), 9);
        let full = subsystem(&b3, Subset::full(3));
        assert_eq!(full.phi.len(), 18);
        assert!(full.psi_plus.is_empty() && full.psi_minus.is_empty());
    }

    #[test]
    fn b2_subsystem_on_short_root() {
        let b2 = rs("B2");
        let d = subsystem(&b2, Subset::from_labels(&[2]));
        let phi: Vec<&Root> = d.phi.iter().map(|&r| b2.root(r)).collect();
        assert_eq!(
            phi,
            vec![
                &Root::new(vec![0, -1]).unwrap(),
                &Root::new(vec![0, 1]).unwrap()
            ]
        );
        assert_eq!(d.psi_minus.len(), 3);
    }

    #[test]
    fn admissibility_examples() {
        let b2 = rs("B2");
        assert!(is_admissible(&b2, Subset::EMPTY));
        assert!(!is_admissible(&b2, Subset::full(2)));
        assert_eq!(
            b2.root(admissibility_witness(&b2, Subset::full(2)).unwrap())
                .to_string(),
            "a1+2a2"
        );
        for n in 1..=5 {
            let a = rs(&format!("A{n}"));
            assert_eq!(admissible_subsets(&a).unwrap().len(), 1 << n);
        }
    }

    #[test]
    fn admissible_subset_lists() {
        let expect = vec![
            Subset::EMPTY,
            Subset::from_labels(&[1]),
            Subset::from_labels(&[2]),
        ];
        assert_eq!(admissible_subsets(&rs("B2")).unwrap(), expect);
        assert_eq!(admissible_subsets(&rs("G2")).unwrap(), expect);
        assert_eq!(admissible_subsets(&rs("A2")).unwrap().len(), 4);
        let g2 = rs("G2");
        assert_eq!(
            g2.root(admissibility_witness(&g2, Subset::full(2)).unwrap())
                .to_string(),
            "3a1+2a2"
        );
    }

    #[test]
    fn rank_cap() {
        let big = rs("A25");
        assert_eq!(
            admissible_subsets(&big).unwrap_err(),
            Error::RankTooLarge { rank: 25, max: 24 }
        );
    }

    #[test]
    fn dynkin_oracle_examples() {
        let d4 = rs("D4");
        // the trivalent node with its three neighbours is D4, not A
        assert!(!dynkin_components_type_a(d4.cartan(), Subset::full(4)));
        assert!(dynkin_components_type_a(
            d4.cartan(),
            Subset::from_labels(&[1, 2, 3])
        ));
        assert!(dynkin_components_type_a(
            d4.cartan(),
            Subset::from_labels(&[1, 3, 4])
        ));
        let b3 = rs("B3");
        assert!(!dynkin_components_type_a(
            b3.cartan(),
            Subset::from_labels(&[2, 3])
        ));
        assert!(dynkin_components_type_a(
            b3.cartan(),
            Subset::from_labels(&[1, 3])
        ));
    }

    #[test]
    fn psi_stability_examples() {
        let a2 = rs("A2");
        let w = WeylGroup::generate(&a2).unwrap();
        assert!(check_psi_stability(&a2, &w, Subset::EMPTY).passed());
        let v = check_psi_stability(&a2, &w, Subset::from_labels(&[1]));
        assert!(v.passed());
        assert_eq!(v.checked, 4);
    }
}

//! Root-filtration level vectors.
//!
//! A subgroup generated by root-group pieces `U_{α,r}` is recorded as the
//! level `r` of each root, with `+∞` for a trivial factor. Smaller levels
//! mean bigger groups. Only this data is modelled: torus parts such as
//! `T(O)` or `N_Ω` are dropped, so containment here is containment of the
//! unipotent root-group data and nothing more. Conjugation constants
//! attached to Weyl elements are treated as units.

use serde::Serialize;

use crate::alcove::{fundamental_chamber, integral_level, Level, VPolyhedron};
use crate::error::{Error, Result};
use crate::parabolics::subsystem;
use crate::rootsys::{Coweight, RootSystem};
use crate::verdict::{Counterexample, Verdict};
use crate::weyl::{Subset, WeylElement, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LevelVector {
    levels: Vec<Level>,
}

impl LevelVector {
    pub fn new(levels: Vec<Level>) -> Self {
        Self { levels }
    }

    /// All levels `+∞`: the trivial group.
    pub fn trivial(num_roots: usize) -> Self {
        Self {
            levels: vec![Level::PlusInfinity; num_roots],
        }
    }

    /// `⌈f_Ω(α)⌉` on the support, `+∞` elsewhere.
    pub fn from_polyhedron(rs: &RootSystem, p: &VPolyhedron, support: &[usize]) -> Self {
        let mut out = Self::trivial(rs.num_roots());
        for &r in support {
            out.levels[r] = integral_level(p, rs.root(r));
        }
        out
    }

    /// `U_C`: level 0 on `Φ⁺`, 1 on `Φ⁻`.
    pub fn chamber(rs: &RootSystem) -> Self {
        let all: Vec<usize> = (0..rs.num_roots()).collect();
        Self::from_polyhedron(rs, &fundamental_chamber(rs), &all)
    }

    /// `B ∩ U_I⁻`: level 1 on `Ψ_I⁻`.
    pub fn iwahori_opposite(rs: &RootSystem, subset: Subset) -> Self {
        let data = subsystem(rs, subset);
        Self::from_polyhedron(rs, &fundamental_chamber(rs), &data.psi_minus)
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn level(&self, r: usize) -> Level {
        self.levels[r]
    }

    pub fn set(&mut self, r: usize, level: Level) {
        self.levels[r] = level;
    }

    /// Keeps the given roots and sets every other level to `+∞`.
    pub fn restrict(&self, support: &[usize]) -> Self {
        let mut out = Self::trivial(self.levels.len());
        for &r in support {
            out.levels[r] = self.levels[r];
        }
        out
    }

    /// Conjugation by `t` with `ν(t) = λ`: `U_{α,r} ↦ U_{α, r − <λ,α>}`.
    pub fn conjugate_by_translation(&self, rs: &RootSystem, lambda: &Coweight) -> Result<Self> {
        let coords = lambda.integer_coords().ok_or(Error::NonIntegralCoweight)?;
        if coords.len() != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                got: coords.len(),
            });
        }
        let levels = self
            .levels
            .iter()
            .zip(rs.roots())
            .map(|(lv, alpha)| {
                let shift: i64 = alpha
                    .coeffs()
                    .iter()
                    .zip(&coords)
                    .map(|(&m, c)| i64::from(m) * c)
                    .sum();
                lv.map(|r| r - shift)
            })
            .collect();
        Ok(Self { levels })
    }

    /// Conjugation by `w`: the level of `α` moves to `wα`.
    pub fn conjugate_by_weyl(&self, w: &WeylElement) -> Self {
        let mut levels = vec![Level::PlusInfinity; self.levels.len()];
        for (r, &lv) in self.levels.iter().enumerate() {
            levels[w.apply(r)] = lv;
        }
        Self { levels }
    }

    /// True iff the group modelled by `self` contains that of `other`.
    pub fn contains(&self, other: &Self) -> bool {
        self.levels.iter().zip(&other.levels).all(|(a, b)| a <= b)
    }

    /// Exponent `e` of the index `q^e` of `other` in `self`.
    pub fn index_exponent(&self, rs: &RootSystem, other: &Self) -> Result<u64> {
        let mut total = 0u64;
        for (r, (a, b)) in self.levels.iter().zip(&other.levels).enumerate() {
            match (a, b) {
                (Level::PlusInfinity, Level::PlusInfinity) => {}
                (Level::Finite(a), Level::Finite(b)) if a <= b => total += (b - a) as u64,
                (Level::Finite(_), Level::PlusInfinity) => {
                    return Err(Error::InfiniteIndex {
                        root: rs.root(r).to_string(),
                    })
                }
                _ => {
                    return Err(Error::NotNested {
                        root: rs.root(r).to_string(),
                    })
                }
            }
        }
        Ok(total)
    }
}

/// `ν(t_I) = Σ_{j ∉ I} ω_j`.
pub fn t_i_coweight(rank: usize, subset: Subset) -> Coweight {
    let coords: Vec<i64> = (0..rank).map(|j| i64::from(!subset.contains(j))).collect();
    Coweight::from_integers(&coords)
}

/// Dominant translations swept by [`verify_tui`]: every nonzero 0/1 sum of
/// fundamental coweights, plus twice their total.
pub fn dominant_sample(rank: usize) -> Vec<Coweight> {
    let limit = rank.min(16);
    let mut out: Vec<Coweight> = (1u32..1 << limit)
        .map(|mask| {
            let coords: Vec<i64> = (0..rank)
                .map(|j| i64::from(j < limit && mask >> j & 1 == 1))
                .collect();
            Coweight::from_integers(&coords)
        })
        .collect();
    for j in limit..rank {
        out.push(Coweight::fundamental(rank, j));
    }
    out.push(Coweight::from_integers(&vec![2; rank]));
    out
}

/// `t (B ∩ U_I⁻) t⁻¹ ⊆ B ∩ U_I⁻` for dominant `ν(t)`.
pub fn verify_tui(rs: &RootSystem, subset: Subset) -> Verdict {
    let base = LevelVector::iwahori_opposite(rs, subset);
    let mut checked = 0;
    for lambda in dominant_sample(rs.rank()) {
        checked += 1;
        let moved = base
            .conjugate_by_translation(rs, &lambda)
            .expect("integral sample");
        if !base.contains(&moved) {
            let r = (0..rs.num_roots())
                .find(|&r| base.level(r) > moved.level(r))
                .expect("a violating root");
            return Verdict::fail(
                checked,
                Counterexample::new(format!("translation by {lambda} lowers the level"))
                    .subset(subset)
                    .root(rs.root(r).clone()),
            );
        }
    }
    Verdict::pass(checked)
}

/// `w (B ∩ U⁻) w⁻¹ ⊆ U_C` for every `w ∈ W`.
pub fn verify_wbuwb(rs: &RootSystem, group: &WeylGroup) -> Verdict {
    let chamber = LevelVector::chamber(rs);
    let opposite = LevelVector::iwahori_opposite(rs, Subset::EMPTY);
    let mut checked = 0;
    for w in group.elements() {
        checked += 1;
        let moved = opposite.conjugate_by_weyl(w);
        if !chamber.contains(&moved) {
            let r = (0..rs.num_roots())
                .find(|&r| chamber.level(r) > moved.level(r))
                .expect("a violating root");
            return Verdict::fail(
                checked,
                Counterexample::new("conjugate not contained in U_C")
                    .element(w.word_labels())
                    .root(rs.root(r).clone()),
            );
        }
    }
    Verdict::pass(checked)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborhoodEstimate {
    /// `min_{α ∈ Ψ_I⁻} <ν(t_I), −α>`, absent when `Ψ_I⁻` is empty.
    pub min_pairing: Option<i64>,
    pub verdict: Verdict,
}

/// `<ν(t_I), −α> ≥ 1` for every `α ∈ Ψ_I⁻`.
pub fn verify_neighborhood_estimate(rs: &RootSystem, subset: Subset) -> NeighborhoodEstimate {
    let nu = t_i_coweight(rs.rank(), subset);
    let data = subsystem(rs, subset);
    let mut min_pairing: Option<i64> = None;
    let mut counterexample = None;
    for &r in &data.psi_minus {
        let v = -nu.pairing(rs.root(r));
        debug_assert!(v.is_integer());
        let v = v.to_integer();
        min_pairing = Some(min_pairing.map_or(v, |m| m.min(v)));
        if v < 1 && counterexample.is_none() {
            counterexample = Some(
                Counterexample::new(format!("<nu(t_I), -alpha> = {v}"))
                    .subset(subset)
                    .root(rs.root(r).clone()),
            );
        }
    }
    NeighborhoodEstimate {
        min_pairing,
        verdict: Verdict {
            checked: data.psi_minus.len(),
            counterexample,
        },
    }
}

/// `t_I^n (B ∩ U_I⁻) t_I^{-n}` for `n = 0..=steps`.
pub fn t_i_tower(rs: &RootSystem, subset: Subset, steps: usize) -> Vec<LevelVector> {
    let base = LevelVector::iwahori_opposite(rs, subset);
    let nu = t_i_coweight(rs.rank(), subset);
    (0..=steps)
        .map(|n| {
            let lambda = nu.scale(num_rational::Rational64::from_integer(n as i64));
            base.conjugate_by_translation(rs, &lambda)
                .expect("integral coweight")
        })
        .collect()
}

/// Checks that the index exponent from the base of the tower to the top is
/// the sum of the exponents of the individual steps.
pub fn verify_tower_additivity(rs: &RootSystem, subset: Subset, steps: usize) -> Verdict {
    let tower = t_i_tower(rs, subset, steps);
    let mut sum = 0u64;
    for pair in tower.windows(2) {
        match pair[0].index_exponent(rs, &pair[1]) {
            Ok(e) => sum += e,
            Err(err) => {
                return Verdict::fail(0, Counterexample::new(err.to_string()).subset(subset))
            }
        }
    }
    match tower[0].index_exponent(rs, &tower[steps]) {
        Ok(total) if total == sum => Verdict::pass(steps),
        Ok(total) => Verdict::fail(
            steps,
            Counterexample::new(format!("exponent {total} != sum of steps {sum}")).subset(subset),
        ),
        Err(err) => Verdict::fail(steps, Counterexample::new(err.to_string()).subset(subset)),
    }
}

/// Sanity model of the Iwahori factorization with respect to `P_I`: the
/// `Ψ_I⁻` part of `U_C` is `B ∩ U_I⁻`.
pub fn factorization_matches(rs: &RootSystem, subset: Subset) -> bool {
    let data = subsystem(rs, subset);
    LevelVector::chamber(rs).restrict(&data.psi_minus) == LevelVector::iwahori_opposite(rs, subset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Root;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_str_spec(s).unwrap()
    }

    fn idx(sys: &RootSystem, c: &[i32]) -> usize {
        sys.index_of(&Root::new(c.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn from_polyhedron_examples() {
        let a2 = rs("A2");
        let uc = LevelVector::chamber(&a2);
        for (r, a) in a2.roots().iter().enumerate() {
            let want = if a.is_positive() { 0 } else { 1 };
            assert_eq!(uc.level(r), Level::Finite(want));
        }
        let opp = LevelVector::iwahori_opposite(&a2, Subset::from_labels(&[1]));
        assert_eq!(opp.level(idx(&a2, &[-1, 0])), Level::PlusInfinity);
        assert_eq!(opp.level(idx(&a2, &[0, -1])), Level::Finite(1));
        assert_eq!(opp.level(idx(&a2, &[-1, -1])), Level::Finite(1));
        let all: Vec<usize> = (0..6).collect();
        let origin =
            LevelVector::from_polyhedron(&a2, &VPolyhedron::point(Coweight::zero(2)), &all);
        assert!(origin.levels().iter().all(|&l| l == Level::Finite(0)));
    }

    #[test]
    fn translation_examples() {
        let a2 = rs("A2");
        let opp = LevelVector::iwahori_opposite(&a2, Subset::EMPTY);
        assert_eq!(
            opp.conjugate_by_translation(&a2, &Coweight::zero(2))
                .unwrap(),
            opp
        );
        let moved = opp
            .conjugate_by_translation(&a2, &Coweight::fundamental(2, 0))
            .unwrap();
        assert_eq!(moved.level(idx(&a2, &[-1, 0])), Level::Finite(2));
        assert!(opp.contains(&moved));
        let half = Coweight::new(vec![num_rational::Rational64::new(1, 2), 0.into()]);
        assert_eq!(
            opp.conjugate_by_translation(&a2, &half),
            Err(Error::NonIntegralCoweight)
        );
    }

    #[test]
    fn weyl_conjugation_examples() {
        let a2 = rs("A2");
        let group = WeylGroup::generate(&a2).unwrap();
        let opp = LevelVector::iwahori_opposite(&a2, Subset::EMPTY);
        assert_eq!(opp.conjugate_by_weyl(group.identity()), opp);
        let mut single = LevelVector::trivial(6);
        single.set(idx(&a2, &[-1, 0]), Level::Finite(1));
        let s1 = group.element(group.from_word(&[0]).unwrap());
        let moved = single.conjugate_by_weyl(s1);
        let mut want = LevelVector::trivial(6);
        want.set(idx(&a2, &[1, 0]), Level::Finite(1));
        assert_eq!(moved, want);
    }

    #[test]
    fn index_examples() {
        let a2 = rs("A2");
        let opp = LevelVector::iwahori_opposite(&a2, Subset::EMPTY);
        assert_eq!(opp.index_exponent(&a2, &opp).unwrap(), 0);
        let moved = opp
            .conjugate_by_translation(&a2, &Coweight::from_integers(&[1, 1]))
            .unwrap();
        assert_eq!(opp.index_exponent(&a2, &moved).unwrap(), 4);

        let i = Subset::from_labels(&[1]);
        let opp = LevelVector::iwahori_opposite(&a2, i);
        let moved = opp
            .conjugate_by_translation(&a2, &t_i_coweight(2, i))
            .unwrap();
        assert_eq!(opp.index_exponent(&a2, &moved).unwrap(), 2);
        assert!(matches!(
            moved.index_exponent(&a2, &opp),
            Err(Error::NotNested { .. })
        ));
        let uc = LevelVector::chamber(&a2);
        assert!(matches!(
            uc.index_exponent(&a2, &opp),
            Err(Error::InfiniteIndex { .. })
        ));
    }

    #[test]
    fn a1_checks() {
        let a1 = rs("A1");
        let g = WeylGroup::generate(&a1).unwrap();
        assert!(verify_tui(&a1, Subset::EMPTY).passed());
        assert!(verify_wbuwb(&a1, &g).passed());
        assert!(verify_neighborhood_estimate(&a1, Subset::EMPTY)
            .verdict
            .passed());
    }

    #[test]
    fn neighborhood_minimum() {
        let a2 = rs("A2");
        let est = verify_neighborhood_estimate(&a2, Subset::from_labels(&[1]));
        assert!(est.verdict.passed());
        assert_eq!(est.min_pairing, Some(1));
        let full = verify_neighborhood_estimate(&a2, Subset::full(2));
        assert_eq!(full.min_pairing, None);
        assert!(full.verdict.passed());
    }

    #[test]
    fn factorization_and_tower() {
        let b3 = rs("B3");
        for i in Subset::all(3) {
            assert!(factorization_matches(&b3, i));
            assert!(verify_tower_additivity(&b3, i, 3).passed());
        }
    }
}

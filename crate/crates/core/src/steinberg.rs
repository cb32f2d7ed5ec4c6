//! Flag-count q-polynomials and a finite model of generalized Steinberg
//! representations.
//!
//! `coset_polynomial(I)` is the length generating function of the minimal
//! coset representatives `W^I`, i.e. the q-count of the cells of
//! `B\G/P_I`. The Steinberg polynomial of `I` is the alternating sum of
//! these over all `J ⊇ I`. This models the rank of the Iwahori-fixed vectors
//! of `St_I` with field coefficients; it is a model, not a statement about
//! `St_I(M)` for arbitrary coefficient groups, and is checked against two
//! independent counts (`q^{|Φ⁺|}` for `I = ∅`, and descent classes at
//! `q = 1`).

use std::fmt;

use serde::Serialize;

use crate::alcove::{verify_closure_lemma, verify_kernel_inclusion, KernelInclusion};
use crate::error::{Error, Result};
use crate::parabolics::admissibility_witness;
use crate::rootsys::{Coweight, RootSystem};
use crate::verdict::Verdict;
use crate::weyl::{Side, Subset, WeylGroup};

/// Integer polynomial in `q`; `coeffs[k]` is the coefficient of `q^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct QPolynomial {
    coeffs: Vec<i64>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let at = |v: &[i64], k: usize| v.get(k).copied().unwrap_or(0);
        Self::new(
            (0..n)
                .map(|k| at(&self.coeffs, k) + sign * at(&other.coeffs, k))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    pub fn add_monomial(&mut self, c: i64, k: usize) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, 0);
        }
        self.coeffs[k] += c;
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    /// Horner evaluation with overflow detection.
    pub fn evaluate(&self, q: i64) -> Result<i128> {
        let q = i128::from(q);
        self.coeffs.iter().rev().try_fold(0i128, |acc, &c| {
            acc.checked_mul(q)
                .and_then(|v| v.checked_add(i128::from(c)))
                .ok_or(Error::Overflow)
        })
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for QPolynomial {
    /// Writes e.g. `1 + 2q + 2q^2 + q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => f.write_str("q")?,
                (1, m) => write!(f, "{m}q")?,
                (k, 1) => write!(f, "q^{k}")?,
                (k, m) => write!(f, "{m}q^{k}")?,
            }
        }
        Ok(())
    }
}

/// `Σ_{w ∈ W^I} q^{ℓ(w)}`.
pub fn coset_polynomial(group: &WeylGroup, subset: Subset) -> QPolynomial {
    let mut p = QPolynomial::zero();
    for w in group.minimal_coset_reps(subset) {
        p.add_monomial(1, w.length());
    }
    p
}

/// Coset polynomials of every `J ⊆ Δ`, indexed by bitmask.
pub fn all_coset_polynomials(group: &WeylGroup) -> Vec<QPolynomial> {
    let rank = group.rank();
    let mut by_length: Vec<Vec<i64>> = vec![Vec::new(); 1 << rank];
    for w in group.elements() {
        let descents = group.descents(w.id(), Side::Right);
        for j in Subset::all(rank).filter(|j| j.intersection(descents).is_empty()) {
            let slot = &mut by_length[j.bits() as usize];
            if slot.len() <= w.length() {
                slot.resize(w.length() + 1, 0);
            }
            slot[w.length()] += 1;
        }
    }
    by_length.into_iter().map(QPolynomial::new).collect()
}

/// `Σ_{J ⊇ I} (−1)^{|J∖I|} coset_polynomial(J)`.
pub fn steinberg_polynomial(group: &WeylGroup, subset: Subset) -> QPolynomial {
    inclusion_exclusion(group.rank(), subset, |j| coset_polynomial(group, j))
}

/// Same as [`steinberg_polynomial`], reusing a precomputed table from
/// [`all_coset_polynomials`].
pub fn steinberg_polynomial_from(
    table: &[QPolynomial],
    rank: usize,
    subset: Subset,
) -> QPolynomial {
    inclusion_exclusion(rank, subset, |j| table[j.bits() as usize].clone())
}

fn inclusion_exclusion(
    rank: usize,
    subset: Subset,
    mut coset: impl FnMut(Subset) -> QPolynomial,
) -> QPolynomial {
    subset.supersets(rank).fold(QPolynomial::zero(), |acc, j| {
        let term = coset(j);
        if (j.len() - subset.len()).is_multiple_of(2) {
            acc.add(&term)
        } else {
            acc.sub(&term)
        }
    })
}

/// `#{w ∈ W : D_R(w) = Δ∖I}`.
pub fn descent_count(group: &WeylGroup, subset: Subset) -> usize {
    let target = subset.complement(group.rank());
    group
        .elements()
        .iter()
        .filter(|w| group.descents(w.id(), Side::Right) == target)
        .count()
}

/// Presentation data of `St_I` by parahoric subgroups, available when `I`
/// is admissible.
#[derive(Debug, Clone, Serialize)]
pub struct PresentationReport {
    pub subset: Subset,
    pub admissible: bool,
    /// `ν(t_j) = ω_j` for every `j ∈ Δ`: the data of the generators
    /// `χ_{B t_j B_I} − χ_{B_I}` of the kernel.
    pub generators: Vec<Coweight>,
    /// The subsets `I ∪ {i}`, `i ∈ Δ∖I`, whose function spaces are divided out.
    pub quotient_terms: Vec<Subset>,
    pub kernel_inclusion: KernelInclusion,
    pub closure_lemma: Verdict,
}

pub fn presentation_report(rs: &RootSystem, subset: Subset) -> Result<PresentationReport> {
    if let Some(w) = admissibility_witness(rs, subset) {
        return Err(Error::NotAdmissible {
            subset: subset.to_string(),
            witness: rs.root(w).to_string(),
        });
    }
    let l = rs.rank();
    Ok(PresentationReport {
        subset,
        admissible: true,
        generators: (0..l).map(|j| Coweight::fundamental(l, j)).collect(),
        quotient_terms: subset
            .complement(l)
            .iter()
            .map(|i| subset.with(i))
            .collect(),
        kernel_inclusion: verify_kernel_inclusion(rs, subset),
        closure_lemma: verify_closure_lemma(rs, subset),
    })
}

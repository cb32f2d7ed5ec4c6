//! Exact geometry of the fundamental apartment.
//!
//! Polyhedra are given by vertices and rays in fundamental-coweight
//! coordinates and always stand for their topological closure; since `f_Ω`
//! is an infimum of linear functionals, it is the same for a relatively open
//! cell and its closure. Convex closures are kept in half-space form only:
//! one tightest integral level per root.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::parabolics::subsystem;
use crate::rootsys::{pairing, Coweight, Point, Root, RootSystem};
use crate::verdict::{Counterexample, Verdict};
use crate::weyl::Subset;

/// A value in `R ∪ {+∞}`; `+∞` sorts above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Extended<T> {
    Finite(T),
    PlusInfinity,
}

impl<T> Extended<T> {
    pub fn is_finite(&self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    pub fn finite(self) -> Option<T> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::PlusInfinity => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Extended<U> {
        match self {
            Extended::Finite(v) => Extended::Finite(f(v)),
            Extended::PlusInfinity => Extended::PlusInfinity,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Extended<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => v.fmt(f),
            Extended::PlusInfinity => f.write_str("+inf"),
        }
    }
}

impl Serialize for Extended<i64> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(v) => s.serialize_i64(*v),
            Extended::PlusInfinity => s.serialize_str("+inf"),
        }
    }
}

impl Serialize for Extended<Rational64> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Integral filtration level of a root group; `+∞` is the trivial group.
pub type Level = Extended<i64>;

/// The closed half-space `{x : <x, α> + r ≥ 0}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HalfSpace {
    #[serde(skip)]
    pub root_index: usize,
    pub alpha: Root,
    pub r: i64,
}

impl HalfSpace {
    pub fn contains_point(&self, x: &Point) -> bool {
        pairing(x, &self.alpha) + self.r >= Rational64::zero()
    }
}

/// `conv(vertices) + cone(rays)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VPolyhedron {
    pub vertices: Vec<Point>,
    pub rays: Vec<Point>,
}

impl VPolyhedron {
    pub fn point(x: Point) -> Self {
        Self {
            vertices: vec![x],
            rays: Vec::new(),
        }
    }

    pub fn translate(&self, by: &Coweight) -> Self {
        Self {
            vertices: self.vertices.iter().map(|v| v.add(by)).collect(),
            rays: self.rays.clone(),
        }
    }
}

/// Closed fundamental alcove.
///
/// For a simple system the vertices are `0` and `ω_j / n_j`. For a product
/// the alcove is the product of the component simplices, and its vertices
/// are all combinations of one vertex per component, listed with the first
/// component varying slowest.
pub fn fundamental_chamber(rs: &RootSystem) -> VPolyhedron {
    let l = rs.rank();
    let mut vertices = vec![Coweight::zero(l)];
    for comp in rs.components() {
        let mut local = vec![Coweight::zero(l)];
        for (k, j) in comp.indices().enumerate() {
            let mark = Rational64::from_integer(i64::from(comp.marks[k]));
            local.push(Coweight::fundamental(l, j).scale(mark.recip()));
        }
        vertices = vertices
            .iter()
            .flat_map(|v| local.iter().map(move |u| v.add(u)))
            .collect();
    }
    VPolyhedron {
        vertices,
        rays: Vec::new(),
    }
}

/// Closed conical cell `𝔠_I`: vertex `0`, rays `ω_j` for `j ∉ I`.
pub fn conical_cell(rs: &RootSystem, subset: Subset) -> VPolyhedron {
    let l = rs.rank();
    VPolyhedron {
        vertices: vec![Coweight::zero(l)],
        rays: (0..l)
            .filter(|&j| !subset.contains(j))
            .map(|j| Coweight::fundamental(l, j))
            .collect(),
    }
}

/// `f_Ω(α) = −inf_{x ∈ Ω} <x, α>`.
pub fn f_omega(p: &VPolyhedron, alpha: &Root) -> Extended<Rational64> {
    if p.rays.iter().any(|d| pairing(d, alpha).is_negative()) {
        return Extended::PlusInfinity;
    }
    let best = p
        .vertices
        .iter()
        .map(|v| -pairing(v, alpha))
        .max()
        .expect("polyhedron has a vertex");
    Extended::Finite(best)
}

/// `f` of a union is the maximum over the parts.
pub fn f_union(parts: &[VPolyhedron], alpha: &Root) -> Extended<Rational64> {
    parts
        .iter()
        .map(|p| f_omega(p, alpha))
        .max()
        .expect("at least one part")
}

fn ceil(f: Extended<Rational64>) -> Level {
    f.map(|v| v.ceil().to_integer())
}

/// `⌈f_Ω(α)⌉`: valuations are integral, so only the ceiling matters.
pub fn integral_level(p: &VPolyhedron, alpha: &Root) -> Level {
    ceil(f_omega(p, alpha))
}

/// `cl(Ω)` as the tightest integral half-space for each root with finite
/// `f`, in root order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureDescription {
    pub half_spaces: Vec<HalfSpace>,
    #[serde(skip)]
    levels: Vec<Level>,
}

impl ClosureDescription {
    /// Level of the root with the given index; `+∞` when unconstrained.
    pub fn level(&self, root_index: usize) -> Level {
        self.levels[root_index]
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn contains_point(&self, x: &Point) -> bool {
        self.half_spaces.iter().all(|h| h.contains_point(x))
    }

    /// Containment of a whole polyhedron: every vertex satisfies each
    /// half-space and no ray decreases its functional.
    pub fn contains_polyhedron(&self, p: &VPolyhedron) -> bool {
        self.half_spaces.iter().all(|h| {
            p.vertices.iter().all(|v| h.contains_point(v))
                && p.rays.iter().all(|d| !pairing(d, &h.alpha).is_negative())
        })
    }
}

pub fn convex_closure(rs: &RootSystem, parts: &[VPolyhedron]) -> ClosureDescription {
    assert!(!parts.is_empty(), "convex closure of nothing");
    let levels: Vec<Level> = rs.roots().iter().map(|a| ceil(f_union(parts, a))).collect();
    let half_spaces = levels
        .iter()
        .enumerate()
        .filter_map(|(k, lv)| {
            lv.finite().map(|r| HalfSpace {
                root_index: k,
                alpha: rs.root(k).clone(),
                r,
            })
        })
        .collect();
    ClosureDescription {
        half_spaces,
        levels,
    }
}

/// Checks that `cl(C ∪ 𝔠_I)` is cut out by the simple half-spaces at level
/// 0 together with the half-spaces of `Φ_I⁻` at level 1.
///
/// The per-root levels must be exactly 0 on `Φ⁺`, 1 on `Φ_I⁻` and `+∞` on
/// `Ψ_I⁻`; every non-simple positive half-space must then follow from the
/// simple ones, certified by its nonnegative coefficient vector.
pub fn verify_closure_lemma(rs: &RootSystem, subset: Subset) -> Verdict {
    let closure = convex_closure(rs, &[fundamental_chamber(rs), conical_cell(rs, subset)]);
    let data = subsystem(rs, subset);
    let mut expected = vec![Level::Finite(0); rs.num_roots()];
    for &r in &data.psi_minus {
        expected[r] = Level::PlusInfinity;
    }
    for r in data.phi_minus(rs) {
        expected[r] = Level::Finite(1);
    }
    let mut checked = 0;
    for (r, (&got, &want)) in closure.levels().iter().zip(&expected).enumerate() {
        checked += 1;
        if got != want {
            return Verdict::fail(
                checked,
                Counterexample::new(format!("level {got}, expected {want}"))
                    .subset(subset)
                    .root(rs.root(r).clone()),
            );
        }
    }

    let simple_level = |i: usize| closure.level(rs.simple_root(i)).finite();
    for h in &closure.half_spaces {
        if !h.alpha.is_positive() || h.alpha.height() == 1 {
            continue;
        }
        checked += 1;
        let witness = h.alpha.coeffs();
        let mut bound = 0i64;
        let mut ok = witness.iter().all(|&m| m >= 0);
        for (i, &m) in witness.iter().enumerate() {
            if m == 0 {
                continue;
            }
            match simple_level(i) {
                Some(r) => bound += i64::from(m) * r,
                None => ok = false,
            }
        }
        // <x, α> + r = Σ m_i (<x, α_i> + r_i) + (r − Σ m_i r_i)
        if !ok || h.r < bound {
            return Verdict::fail(
                checked,
                Counterexample::new("positive half-space not implied by the simple ones")
                    .subset(subset)
                    .root(h.alpha.clone()),
            );
        }
    }
    Verdict::pass(checked)
}

/// Per-`j` outcome of testing `ω_j + 𝔠_I ⊆ cl(C ∪ 𝔠_I)` for `j ∈ I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelInclusion {
    /// Keyed by 1-based label `j`.
    pub per_j: BTreeMap<usize, bool>,
    pub all: bool,
}

pub fn verify_kernel_inclusion(rs: &RootSystem, subset: Subset) -> KernelInclusion {
    let cell = conical_cell(rs, subset);
    let closure = convex_closure(rs, &[fundamental_chamber(rs), cell.clone()]);
    let per_j: BTreeMap<usize, bool> = subset
        .iter()
        .map(|j| {
            let shifted = cell.translate(&Coweight::fundamental(rs.rank(), j));
            (j + 1, closure.contains_polyhedron(&shifted))
        })
        .collect();
    let all = per_j.values().all(|&b| b);
    KernelInclusion { per_j, all }
}

/// Model of `T^{++}`: all coordinates nonnegative.
pub fn is_dominant(lambda: &Coweight) -> bool {
    lambda.coords().iter().all(|c| !c.is_negative())
}

/// Model of `T_I^{++}`: dominant and vanishing on `I`.
pub fn is_dominant_for(lambda: &Coweight, subset: Subset) -> bool {
    is_dominant(lambda)
        && subset
            .iter()
            .filter(|&i| i < lambda.rank())
            .all(|i| lambda.coords()[i].is_zero())
}

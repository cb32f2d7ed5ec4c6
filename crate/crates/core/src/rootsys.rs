//! Finite reduced root systems of types A–G and their products.
//!
//! Roots are stored as integer coefficient vectors in the basis of simple
//! roots. Points of the apartment (coweights) are stored in the basis of
//! fundamental coweights, so the pairing of a coweight with a root is a dot
//! product of coordinates. Dynkin diagrams follow Bourbaki numbering and the
//! Cartan matrix convention `A[i][j] = <α̌_i, α_j>`.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Cartan–Killing type letter of a simple component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => CartanType::A,
            'B' => CartanType::B,
            'C' => CartanType::C,
            'D' => CartanType::D,
            'E' => CartanType::E,
            'F' => CartanType::F,
            'G' => CartanType::G,
            _ => return None,
        })
    }

    /// Checks the standard rank constraints for the type.
    pub fn accepts_rank(self, rank: usize) -> bool {
        match self {
            CartanType::A => rank >= 1,
            CartanType::B | CartanType::C => rank >= 2,
            CartanType::D => rank >= 3,
            CartanType::E => (6..=8).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        }
    }

    /// Number of positive roots from the closed-form table.
    pub fn positive_root_count(self, n: usize) -> usize {
        match self {
            CartanType::A => n * (n + 1) / 2,
            CartanType::B | CartanType::C => n * n,
            CartanType::D => n * (n - 1),
            CartanType::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            CartanType::F => 24,
            CartanType::G => 6,
        }
    }

    /// Order of the Weyl group from the classical product formulas.
    pub fn weyl_order(self, n: usize) -> u128 {
        let fact = |k: usize| (1..=k as u128).product::<u128>();
        match self {
            CartanType::A => fact(n + 1),
            CartanType::B | CartanType::C => (1u128 << n) * fact(n),
            CartanType::D => (1u128 << (n - 1)) * fact(n),
            CartanType::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            CartanType::F => 1_152,
            CartanType::G => 12,
        }
    }

    /// Bourbaki Cartan matrix of the simple type, 0-based.
    pub fn cartan_matrix(self, n: usize) -> Vec<Vec<i32>> {
        let mut a = vec![vec![0i32; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i32, aji: i32| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self {
            CartanType::A => {
                for i in 1..n {
                    link(i - 1, i, -1, -1);
                }
            }
            CartanType::B => {
                for i in 1..n - 1 {
                    link(i - 1, i, -1, -1);
                }
                // α_n is short
                link(n - 2, n - 1, -1, -2);
            }
            CartanType::C => {
                for i in 1..n - 1 {
                    link(i - 1, i, -1, -1);
                }
                // α_n is long
                link(n - 2, n - 1, -2, -1);
            }
            CartanType::D => {
                for i in 1..n - 1 {
                    link(i - 1, i, -1, -1);
                }
                link(n - 3, n - 1, -1, -1);
            }
            CartanType::E => {
                // 1 - 3 - 4 - 5 - 6 (- 7 (- 8)), with 2 attached to 4
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                for i in 3..n {
                    link(i - 1, i, -1, -1);
                }
            }
            CartanType::F => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            CartanType::G => {
                // α_1 short, α_2 long
                link(0, 1, -3, -1);
            }
        }
        a
    }
}

/// Largest supported total rank; subsets of simple roots are `u32` bitmasks.
pub const MAX_RANK: usize = 32;

/// A root system type: one or more simple components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootSystemSpec {
    components: Vec<(CartanType, usize)>,
}

impl RootSystemSpec {
    pub fn new(components: Vec<(CartanType, usize)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidSpec("no components".into()));
        }
        for &(kind, rank) in &components {
            if !kind.accepts_rank(rank) {
                return Err(Error::InvalidSpec(format!(
                    "type {}{} has an invalid rank",
                    kind.letter(),
                    rank
                )));
            }
        }
        let total: usize = components.iter().map(|c| c.1).sum();
        if total > MAX_RANK {
            return Err(Error::InvalidSpec(format!(
                "total rank {total} exceeds {MAX_RANK}"
            )));
        }
        Ok(Self { components })
    }

    pub fn simple(kind: CartanType, rank: usize) -> Result<Self> {
        Self::new(vec![(kind, rank)])
    }

    pub fn components(&self) -> &[(CartanType, usize)] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.1).sum()
    }

    pub fn positive_root_count(&self) -> usize {
        self.components
            .iter()
            .map(|&(k, n)| k.positive_root_count(n))
            .sum()
    }

    pub fn weyl_order(&self) -> u128 {
        self.components
            .iter()
            .map(|&(k, n)| k.weyl_order(n))
            .product()
    }
}

impl FromStr for RootSystemSpec {
    type Err = Error;

    /// Parses `<Letter><rank>` tokens joined by `x`, case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::InvalidSpec("empty spec".into()));
        }
        let mut components = Vec::new();
        for token in trimmed.split(['x', 'X']) {
            let token = token.trim();
            let mut chars = token.chars();
            let kind = chars
                .next()
                .and_then(CartanType::from_letter)
                .ok_or_else(|| Error::InvalidSpec(format!("unknown type in {token:?}")))?;
            let digits = chars.as_str();
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::InvalidSpec(format!("bad rank in {token:?}")));
            }
            let rank: usize = digits
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("bad rank in {token:?}")))?;
            components.push((kind, rank));
        }
        Self::new(components)
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (kind, rank)) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str("x")?;
            }
            write!(f, "{}{}", kind.letter(), rank)?;
        }
        Ok(())
    }
}

/// A root, as its coordinates in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coeffs: Vec<i32>,
}

impl Root {
    /// Wraps a coefficient vector. Returns `None` for the zero vector or for
    /// mixed signs, which are never roots.
    pub fn new(coeffs: Vec<i32>) -> Option<Self> {
        let pos = coeffs.iter().all(|&c| c >= 0);
        let neg = coeffs.iter().all(|&c| c <= 0);
        let zero = coeffs.iter().all(|&c| c == 0);
        if zero || !(pos || neg) {
            return None;
        }
        Some(Self { coeffs })
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[i] = 1;
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i32 {
        self.coeffs[i]
    }

    pub fn height(&self) -> i32 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.height() < 0
    }

    /// Bitmask of simple roots with nonzero coefficient.
    pub fn support(&self) -> u32 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    pub fn negated(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Root {
    /// Writes e.g. `a1+2a2` or `-(a1+a2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let neg = self.is_negative();
        let mut body = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            let c = c.abs();
            if c == 0 {
                continue;
            }
            if !body.is_empty() {
                body.push('+');
            }
            if c != 1 {
                body.push_str(&c.to_string());
            }
            body.push_str(&format!("a{}", i + 1));
        }
        if neg {
            if body.contains('+') {
                write!(f, "-({body})")
            } else {
                write!(f, "-{body}")
            }
        } else {
            f.write_str(&body)
        }
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

/// An element of `X_*(T) ⊗ Q` in the fundamental-coweight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coweight {
    coords: Vec<Rational64>,
}

/// Points of the apartment share the coweight coordinates.
pub type Point = Coweight;

impl Coweight {
    pub fn new(coords: Vec<Rational64>) -> Self {
        Self { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            coords: vec![Rational64::zero(); rank],
        }
    }

    /// The fundamental coweight `ω_j` (0-based `j`).
    pub fn fundamental(rank: usize, j: usize) -> Self {
        let mut c = Self::zero(rank);
        c.coords[j] = Rational64::one();
        c
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Self {
            coords: coords
                .iter()
                .map(|&c| Rational64::from_integer(c))
                .collect(),
        }
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Integer coordinates, if every coordinate is integral.
    pub fn integer_coords(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "coweight rank mismatch");
        Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, k: Rational64) -> Self {
        Self {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    /// `<x, α> = Σ m_i c_i`.
    pub fn pairing(&self, alpha: &Root) -> Rational64 {
        pairing(self, alpha)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for Coweight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        strs.serialize(s)
    }
}

/// Exact pairing of a coweight with a root. Panics when the ranks differ.
pub fn pairing(x: &Coweight, alpha: &Root) -> Rational64 {
    assert_eq!(x.rank(), alpha.coeffs.len(), "pairing rank mismatch");
    x.coords
        .iter()
        .zip(&alpha.coeffs)
        .fold(Rational64::zero(), |acc, (c, &m)| acc + c * i64::from(m))
}

/// A simple component inside a (possibly reducible) root system.
#[derive(Debug, Clone)]
pub struct Component {
    pub kind: CartanType,
    /// First global simple-root index of the component (0-based).
    pub offset: usize,
    pub rank: usize,
    /// Index into [`RootSystem::roots`] of the highest root.
    pub highest_root: usize,
    /// Coefficients of the highest root on the component's simple roots.
    pub marks: Vec<i32>,
}

impl Component {
    pub fn indices(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.rank
    }

    pub fn mask(&self) -> u32 {
        self.indices().fold(0, |m, i| m | (1 << i))
    }
}

/// Closes the simple roots of a Cartan matrix under simple reflections and
/// returns every root, sorted by height and then lexicographically.
pub fn enumerate_roots(cartan: &[Vec<i32>]) -> Vec<Root> {
    let l = cartan.len();
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
    for i in 0..l {
        for sign in [1, -1] {
            let mut v = vec![0; l];
            v[i] = sign;
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..l {
            let image = reflect_coeffs(cartan, i, &beta);
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut roots: Vec<Root> = seen.into_iter().map(|coeffs| Root { coeffs }).collect();
    roots.sort();
    roots
}

/// `s_i(β) = β − (Σ_j A[i][j] m_j) α_i`.
fn reflect_coeffs(cartan: &[Vec<i32>], i: usize, beta: &[i32]) -> Vec<i32> {
    let k: i32 = cartan[i].iter().zip(beta).map(|(a, m)| a * m).sum();
    let mut out = beta.to_vec();
    out[i] -= k;
    out
}

/// A root system with its roots enumerated and reflection tables precomputed.
///
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: RootSystemSpec,
    cartan: Vec<Vec<i32>>,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    components: Vec<Component>,
    simple: Vec<usize>,
    negation: Vec<usize>,
    /// `reflection[i][r]` is the index of `s_i(roots[r])`.
    reflection: Vec<Vec<usize>>,
}

impl RootSystem {
    pub fn build(spec: &RootSystemSpec) -> Self {
        let l = spec.rank();
        let mut cartan = vec![vec![0; l]; l];
        let mut offset = 0;
        for &(kind, n) in spec.components() {
            let block = kind.cartan_matrix(n);
            for i in 0..n {
                for j in 0..n {
                    cartan[offset + i][offset + j] = block[i][j];
                }
            }
            offset += n;
        }

        let roots = enumerate_roots(&cartan);
        let index: HashMap<Root, usize> = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        let simple: Vec<usize> = (0..l).map(|i| index[&Root::simple(l, i)]).collect();
        let negation: Vec<usize> = roots.iter().map(|r| index[&r.negated()]).collect();
        let reflection: Vec<Vec<usize>> = (0..l)
            .map(|i| {
                roots
                    .iter()
                    .map(|r| {
                        index[&Root {
                            coeffs: reflect_coeffs(&cartan, i, &r.coeffs),
                        }]
                    })
                    .collect()
            })
            .collect();

        let mut components = Vec::new();
        let mut offset = 0;
        for &(kind, n) in spec.components() {
            let mask: u32 = (offset..offset + n).fold(0, |m, i| m | (1 << i));
            let (highest_root, top) = roots
                .iter()
                .enumerate()
                .filter(|(_, r)| r.is_positive() && r.support() & !mask == 0)
                .max_by_key(|(_, r)| r.height())
                .expect("component has positive roots");
            components.push(Component {
                kind,
                offset,
                rank: n,
                highest_root,
                marks: top.coeffs[offset..offset + n].to_vec(),
            });
            offset += n;
        }

        Self {
            spec: spec.clone(),
            cartan,
            roots,
            index,
            components,
            simple,
            negation,
            reflection,
        }
    }

    pub fn from_str_spec(s: &str) -> Result<Self> {
        Ok(Self::build(&s.parse()?))
    }

    pub fn spec(&self) -> &RootSystemSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Bitmask of all simple roots, i.e. `Δ`.
    pub fn full_mask(&self) -> u32 {
        if self.rank() == 32 {
            u32::MAX
        } else {
            (1u32 << self.rank()) - 1
        }
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, r: usize) -> &Root {
        &self.roots[r]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = (usize, &Root)> {
        self.roots
            .iter()
            .enumerate()
            .filter(|(_, r)| r.is_positive())
    }

    pub fn negative_roots(&self) -> impl Iterator<Item = (usize, &Root)> {
        self.roots
            .iter()
            .enumerate()
            .filter(|(_, r)| r.is_negative())
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn index_of(&self, root: &Root) -> Option<usize> {
        self.index.get(root).copied()
    }

    /// Root index of the simple root `α_i` (0-based `i`).
    pub fn simple_root(&self, i: usize) -> usize {
        self.simple[i]
    }

    pub fn negate(&self, r: usize) -> usize {
        self.negation[r]
    }

    /// Index of `s_i(roots[r])`, from the precomputed table.
    pub fn reflect(&self, i: usize, r: usize) -> usize {
        self.reflection[i][r]
    }

    pub fn simple_reflection_on_root(&self, i: usize, beta: &Root) -> Result<Root> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        if beta.coeffs.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: beta.coeffs.len(),
            });
        }
        Ok(Root {
            coeffs: reflect_coeffs(&self.cartan, i, &beta.coeffs),
        })
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Component containing simple root `i`.
    pub fn component_of(&self, i: usize) -> &Component {
        self.components
            .iter()
            .find(|c| c.indices().contains(&i))
            .expect("index within rank")
    }

    pub fn highest_roots(&self) -> Vec<&Root> {
        self.components
            .iter()
            .map(|c| &self.roots[c.highest_root])
            .collect()
    }

    /// Mark `n_j`: the coefficient of `α_j` in its component's highest root.
    pub fn mark(&self, j: usize) -> i32 {
        let c = self.component_of(j);
        c.marks[j - c.offset]
    }

    pub fn weyl_order(&self) -> u128 {
        self.spec.weyl_order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_str_spec(s).unwrap()
    }

    fn root(c: &[i32]) -> Root {
        Root::new(c.to_vec()).unwrap()
    }

    #[test]
    fn a1_has_two_roots() {
        let a1 = rs("A1");
        assert_eq!(a1.roots(), &[root(&[-1]), root(&[1])]);
        assert_eq!(a1.num_positive_roots(), 1);
    }

    #[test]
    fn a2_highest_root_and_marks() {
        let a2 = rs("A2");
        assert_eq!(a2.num_positive_roots(), 3);
        assert_eq!(a2.highest_roots(), vec![&root(&[1, 1])]);
        assert_eq!(a2.components()[0].marks, vec![1, 1]);
    }

    #[test]
    fn b2_highest_root_and_marks() {
        let b2 = rs("B2");
        assert_eq!(b2.num_positive_roots(), 4);
        assert_eq!(b2.highest_roots(), vec![&root(&[1, 2])]);
        assert_eq!(b2.components()[0].marks, vec![1, 2]);
    }

    #[test]
    fn exceptional_marks() {
        assert_eq!(rs("G2").components()[0].marks, vec![3, 2]);
        assert_eq!(rs("F4").components()[0].marks, vec![2, 3, 4, 2]);
        assert_eq!(rs("E6").components()[0].marks, vec![1, 2, 2, 3, 2, 1]);
        assert_eq!(rs("E8").components()[0].marks, vec![2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(rs("C3").components()[0].marks, vec![2, 2, 1]);
        assert_eq!(rs("D4").components()[0].marks, vec![1, 2, 1, 1]);
    }

    #[test]
    fn roots_sorted_by_height_then_lex() {
        let b3 = rs("B3");
        for w in b3.roots().windows(2) {
            assert!(w[0] < w[1]);
        }
        assert!(b3.roots()[0].is_negative());
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs("A2");
        let w1 = Coweight::fundamental(2, 0);
        assert_eq!(pairing(&w1, a2.root(a2.simple_root(0))), Rational64::one());
        let w2 = Coweight::fundamental(2, 1);
        assert_eq!(pairing(&w2, &root(&[1, 2])), Rational64::from_integer(2));
        for r in a2.roots() {
            assert_eq!(pairing(&Coweight::zero(2), r), Rational64::zero());
        }
    }

    #[test]
    fn reflection_examples() {
        let a2 = rs("A2");
        assert_eq!(
            a2.simple_reflection_on_root(0, &root(&[1, 0])).unwrap(),
            root(&[-1, 0])
        );
        assert_eq!(
            a2.simple_reflection_on_root(0, &root(&[0, 1])).unwrap(),
            root(&[1, 1])
        );
        let b2 = rs("B2");
        // the highest root is orthogonal to the long simple root
        assert_eq!(
            b2.simple_reflection_on_root(0, &root(&[1, 2])).unwrap(),
            root(&[1, 2])
        );
        assert_eq!(
            b2.simple_reflection_on_root(1, &root(&[1, 2])).unwrap(),
            root(&[1, 0])
        );
        assert_eq!(
            b2.simple_reflection_on_root(2, &root(&[1, 2])),
            Err(Error::IndexOutOfRange { index: 2, rank: 2 })
        );
    }

    #[test]
    fn highest_root_plus_simple_is_not_a_root() {
        for s in ["A3", "B4", "C4", "D5", "G2", "F4", "E6", "A2xB3"] {
            let sys = rs(s);
            for c in sys.components() {
                let top = sys.root(c.highest_root);
                for i in c.indices() {
                    let mut coeffs = top.coeffs().to_vec();
                    coeffs[i] += 1;
                    assert!(sys.index_of(&root(&coeffs)).is_none(), "{s}");
                }
            }
        }
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(
            "a1xB3".parse::<RootSystemSpec>().unwrap().to_string(),
            "A1xB3"
        );
        for bad in [
            "", "Q9", "B1", "D2", "E5", "E9", "F3", "G3", "A0", "A", "A1x", "A-1",
        ] {
            assert!(bad.parse::<RootSystemSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn cartan_entries() {
        for s in ["A4", "B3", "C3", "D4", "E6", "F4", "G2"] {
            let sys = rs(s);
            for (i, row) in sys.cartan().iter().enumerate() {
                for (j, &a) in row.iter().enumerate() {
                    if i == j {
                        assert_eq!(a, 2);
                    } else {
                        assert!((-3..=0).contains(&a));
                    }
                }
            }
        }
    }

    #[test]
    fn root_display() {
        assert_eq!(root(&[1, 2]).to_string(), "a1+2a2");
        assert_eq!(root(&[-1, 0]).to_string(), "-a1");
        assert_eq!(root(&[-3, -2]).to_string(), "-(3a1+2a2)");
        assert_eq!(root(&[0, -2]).to_string(), "-2a2");
    }
}

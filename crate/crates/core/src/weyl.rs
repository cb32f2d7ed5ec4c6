//! The finite Weyl group, enumerated as permutations of the root set.
//!
//! Elements are identified by the images of the simple roots. Enumeration is
//! breadth-first by length, and within a length the elements are ordered by
//! the ShortLex-minimal reduced word, which is also the word stored on each
//! element.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

/// Full enumeration is refused above this many elements.
pub const ENUMERATION_CAP: usize = 2_000_000;

/// A subset `I ⊆ Δ`, stored as a bitmask over 0-based simple-root indices.
///
/// Displayed and serialized with 1-based indices, e.g. `{1,3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u32) -> Self {
        Self(bits)
    }

    pub fn full(rank: usize) -> Self {
        if rank >= 32 {
            Self(u32::MAX)
        } else {
            Self((1 << rank) - 1)
        }
    }

    /// Builds a subset from 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Self(indices.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    /// Builds a subset from 1-based indices, as written in reports.
    pub fn from_labels(labels: &[usize]) -> Self {
        Self::from_indices(labels.iter().map(|&j| j - 1))
    }

    /// Parses `{1,3}`, `1,3`, `{}`, `none` or `∅`; `all` means `Δ`.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        if lower == "all" || lower == "delta" {
            return Ok(Self::full(rank));
        }
        if lower == "none" || t == "∅" {
            return Ok(Self::EMPTY);
        }
        let inner = t
            .strip_prefix('{')
            .and_then(|x| x.strip_suffix('}'))
            .unwrap_or(t);
        let mut out = 0u32;
        for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let j: usize = part
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("bad subset element {part:?}")))?;
            if j == 0 || j > rank {
                return Err(Error::IndexOutOfRange { index: j, rank });
            }
            out |= 1 << (j - 1);
        }
        Ok(Self(out))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, i: usize) -> Self {
        Self(self.0 | 1 << i)
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// `Δ ∖ self` for a root system of the given rank.
    pub fn complement(self, rank: usize) -> Self {
        Self(Self::full(rank).0 & !self.0)
    }

    /// 0-based indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// 1-based labels in increasing order.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Every subset of `Δ`, in increasing bitmask order.
    pub fn all(rank: usize) -> impl Iterator<Item = Subset> {
        assert!(rank < 32, "subset sweep needs rank below 32");
        (0u32..1 << rank).map(Subset)
    }

    /// Every superset of `self` inside `Δ`, in increasing bitmask order.
    pub fn supersets(self, rank: usize) -> impl Iterator<Item = Subset> {
        let this = self;
        Self::all(rank).filter(move |j| this.is_subset_of(*j))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels().iter().map(|j| j.to_string()).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

impl FromStr for Subset {
    type Err = Error;

    /// Parses without a rank bound (indices up to 32).
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, 32)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// An element of `W`, acting on roots by permutation.
#[derive(Debug, Clone)]
pub struct WeylElement {
    id: usize,
    perm: Vec<u16>,
    word: Vec<u8>,
    length: usize,
}

impl WeylElement {
    /// Position in the enumeration order of the owning [`WeylGroup`].
    pub fn id(&self) -> usize {
        self.id
    }

    /// ShortLex-minimal reduced word, as 0-based generator indices.
    pub fn word(&self) -> Vec<usize> {
        self.word.iter().map(|&i| i as usize).collect()
    }

    /// Reduced word with 1-based generator labels.
    pub fn word_labels(&self) -> Vec<usize> {
        self.word.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Index of `w(roots[r])`.
    pub fn apply(&self, r: usize) -> usize {
        self.perm[r] as usize
    }

    /// Word support: the simple reflections occurring in a reduced word.
    pub fn support(&self) -> Subset {
        Subset::from_indices(self.word())
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.word_labels().iter().map(|i| format!("s{i}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// The enumerated Weyl group together with its multiplication tables.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    rank: usize,
    simple: Vec<usize>,
    positive: Vec<bool>,
    elements: Vec<WeylElement>,
    lookup: HashMap<Vec<u16>, usize>,
    right: Vec<u32>,
    left: Vec<u32>,
    inverse: Vec<u32>,
}

impl WeylGroup {
    pub fn generate(rs: &RootSystem) -> Result<Self> {
        Self::generate_with_cap(rs, ENUMERATION_CAP)
    }

    /// Enumerates `W` breadth-first, refusing when the classical order
    /// exceeds `cap`.
    pub fn generate_with_cap(rs: &RootSystem, cap: usize) -> Result<Self> {
        let order = rs.weyl_order();
        if order > cap as u128 {
            return Err(Error::GroupTooLarge { order, cap });
        }
        let l = rs.rank();
        let n = rs.num_roots();
        let simple: Vec<usize> = (0..l).map(|i| rs.simple_root(i)).collect();
        let positive: Vec<bool> = rs.roots().iter().map(|r| r.is_positive()).collect();
        let key_of = |perm: &[u16]| -> Vec<u16> { simple.iter().map(|&s| perm[s]).collect() };

        let identity: Vec<u16> = (0..n as u16).collect();
        let mut lookup = HashMap::with_capacity(order as usize);
        lookup.insert(key_of(&identity), 0);
        let mut elements = Vec::with_capacity(order as usize);
        elements.push(WeylElement {
            id: 0,
            perm: identity,
            word: Vec::new(),
            length: 0,
        });
        let mut right = Vec::with_capacity(order as usize * l);

        let mut k = 0;
        while k < elements.len() {
            for i in 0..l {
                // (w s_i)(β) = w(s_i β)
                let key: Vec<u16> = simple
                    .iter()
                    .map(|&s| elements[k].perm[rs.reflect(i, s)])
                    .collect();
                let target = match lookup.get(&key) {
                    Some(&t) => t,
                    None => {
                        let base = &elements[k];
                        let perm: Vec<u16> = (0..n).map(|r| base.perm[rs.reflect(i, r)]).collect();
                        let mut word = base.word.clone();
                        word.push(i as u8);
                        let id = elements.len();
                        let length = base.length + 1;
                        elements.push(WeylElement {
                            id,
                            perm,
                            word,
                            length,
                        });
                        lookup.insert(key, id);
                        id
                    }
                };
                right.push(target as u32);
            }
            k += 1;
        }
        debug_assert_eq!(elements.len() as u128, order);

        let mut left = Vec::with_capacity(elements.len() * l);
        let mut inverse = Vec::with_capacity(elements.len());
        let mut inv_perm = vec![0u16; n];
        for w in &elements {
            for i in 0..l {
                let key: Vec<u16> = simple
                    .iter()
                    .map(|&s| rs.reflect(i, w.perm[s] as usize) as u16)
                    .collect();
                left.push(lookup[&key] as u32);
            }
            for (r, &img) in w.perm.iter().enumerate() {
                inv_perm[img as usize] = r as u16;
            }
            inverse.push(lookup[&key_of(&inv_perm)] as u32);
        }

        Ok(Self {
            rank: l,
            simple,
            positive,
            elements,
            lookup,
            right,
            left,
            inverse,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &WeylElement {
        &self.elements[id]
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    /// The longest element `w_0`: last in enumeration order.
    pub fn longest(&self) -> &WeylElement {
        self.elements.last().expect("group is nonempty")
    }

    /// `w s_i`.
    pub fn right_mul_simple(&self, w: usize, i: usize) -> usize {
        self.right[w * self.rank + i] as usize
    }

    /// `s_i w`.
    pub fn left_mul_simple(&self, w: usize, i: usize) -> usize {
        self.left[w * self.rank + i] as usize
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w] as usize
    }

    /// `u v`.
    pub fn multiply(&self, u: usize, v: usize) -> usize {
        let (u, v) = (&self.elements[u], &self.elements[v]);
        let key: Vec<u16> = self
            .simple
            .iter()
            .map(|&s| u.perm[v.perm[s] as usize])
            .collect();
        self.lookup[&key]
    }

    /// Evaluates a word of 0-based generator indices.
    pub fn from_word(&self, word: &[usize]) -> Result<usize> {
        let mut w = 0;
        for &i in word {
            if i >= self.rank {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    rank: self.rank,
                });
            }
            w = self.right_mul_simple(w, i);
        }
        Ok(w)
    }

    /// `|{α ∈ Φ⁺ : w(α) ∈ Φ⁻}|`.
    pub fn inversion_count(&self, w: usize) -> usize {
        let perm = &self.elements[w].perm;
        (0..perm.len())
            .filter(|&r| self.positive[r] && !self.positive[perm[r] as usize])
            .count()
    }

    pub fn descents(&self, w: usize, side: Side) -> Subset {
        let el = &self.elements[w];
        let it = (0..self.rank).filter(|&i| match side {
            Side::Right => !self.positive[el.perm[self.simple[i]] as usize],
            Side::Left => self.elements[self.left_mul_simple(w, i)].length < el.length,
        });
        Subset::from_indices(it)
    }

    /// Elements of the parabolic subgroup `W_I`.
    pub fn parabolic(&self, subset: Subset) -> Vec<&WeylElement> {
        self.elements
            .iter()
            .filter(|w| w.support().is_subset_of(subset))
            .collect()
    }

    /// Minimal-length representatives of the cosets `w W_I`:
    /// the elements with no right descent in `I`.
    pub fn minimal_coset_reps(&self, subset: Subset) -> Vec<&WeylElement> {
        self.elements
            .iter()
            .filter(|w| {
                self.descents(w.id, Side::Right)
                    .intersection(subset)
                    .is_empty()
            })
            .collect()
    }

    /// Orbits of `W_{I1} × W_{I2}` acting by `(u, v)·w = u w v⁻¹`, computed by
    /// union-find over generator moves.
    pub fn double_cosets(&self, left: Subset, right: Subset) -> DoubleCosetTable {
        let n = self.order();
        let mut dsu = DisjointSets::new(n);
        for w in 0..n {
            for i in left.iter().filter(|&i| i < self.rank) {
                dsu.union(w, self.left_mul_simple(w, i));
            }
            for i in right.iter().filter(|&i| i < self.rank) {
                dsu.union(w, self.right_mul_simple(w, i));
            }
        }

        // Classes are numbered by their first element in enumeration order,
        // which is a minimal-length element of the class.
        let mut class_of = vec![usize::MAX; n];
        let mut root_to_class: HashMap<usize, usize> = HashMap::new();
        let mut classes: Vec<DoubleCoset> = Vec::new();
        for (w, slot) in class_of.iter_mut().enumerate() {
            let r = dsu.find(w);
            let c = *root_to_class.entry(r).or_insert_with(|| {
                classes.push(DoubleCoset {
                    representative: w,
                    size: 0,
                    minimal_length_count: 0,
                });
                classes.len() - 1
            });
            *slot = c;
            let class = &mut classes[c];
            class.size += 1;
            if self.elements[w].length == self.elements[class.representative].length {
                class.minimal_length_count += 1;
            }
        }
        DoubleCosetTable {
            left,
            right,
            classes,
            class_of,
        }
    }

    /// The double cosets reachable from `w` by one simple reflection on the
    /// given side: `{cell(w), cell(w s_i)}` or `{cell(w), cell(s_i w)}`.
    pub fn cell_closure(
        &self,
        table: &DoubleCosetTable,
        w: usize,
        i: usize,
        side: Side,
    ) -> Result<BTreeSet<usize>> {
        if i >= self.rank {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            });
        }
        let moved = match side {
            Side::Right => self.right_mul_simple(w, i),
            Side::Left => self.left_mul_simple(w, i),
        };
        Ok([table.class_of(w), table.class_of(moved)]
            .into_iter()
            .collect())
    }
}

/// One double coset `W_{I1} w W_{I2}`.
#[derive(Debug, Clone, Serialize)]
pub struct DoubleCoset {
    /// Element id of the first minimal-length member.
    pub representative: usize,
    pub size: usize,
    /// Number of members attaining the minimal length; 1 when the minimal
    /// representative is unique.
    pub minimal_length_count: usize,
}

/// Partition of `W` into `W_{I1}\W/W_{I2}`.
#[derive(Debug, Clone)]
pub struct DoubleCosetTable {
    pub left: Subset,
    pub right: Subset,
    classes: Vec<DoubleCoset>,
    class_of: Vec<usize>,
}

impl DoubleCosetTable {
    pub fn classes(&self) -> &[DoubleCoset] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class label of element `w`.
    pub fn class_of(&self, w: usize) -> usize {
        self.class_of[w]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }
}

struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        match self.rank[a].cmp(&self.rank[b]) {
            std::cmp::Ordering::Less => self.parent[a] = b,
            std::cmp::Ordering::Greater => self.parent[b] = a,
            std::cmp::Ordering::Equal => {
                self.parent[b] = a;
                self.rank[a] += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(s: &str) -> (RootSystem, WeylGroup) {
        let rs = RootSystem::from_str_spec(s).unwrap();
        let w = WeylGroup::generate(&rs).unwrap();
        (rs, w)
    }

    #[test]
    fn a1_group() {
        let (_, w) = group("A1");
        assert_eq!(w.order(), 2);
        assert_eq!(w.longest().word(), vec![0]);
    }

    #[test]
    fn a2_group() {
        let (_, w) = group("A2");
        assert_eq!(w.order(), 6);
        assert_eq!(w.longest().length(), 3);
        let words: Vec<Vec<usize>> = w.elements().iter().map(|e| e.word_labels()).collect();
        assert_eq!(
            words,
            vec![
                vec![],
                vec![1],
                vec![2],
                vec![1, 2],
                vec![2, 1],
                vec![1, 2, 1]
            ]
        );
    }

    #[test]
    fn f4_order() {
        let (_, w) = group("F4");
        assert_eq!(w.order(), 1152);
    }

    #[test]
    fn e8_is_refused() {
        let rs = RootSystem::from_str_spec("E8").unwrap();
        assert_eq!(
            WeylGroup::generate(&rs).unwrap_err(),
            Error::GroupTooLarge {
                order: 696_729_600,
                cap: ENUMERATION_CAP
            }
        );
    }

    #[test]
    fn descent_examples() {
        let (_, w) = group("A2");
        assert!(w.descents(0, Side::Right).is_empty());
        assert_eq!(w.descents(w.longest().id(), Side::Right), Subset::full(2));
        let s1s2 = w.from_word(&[0, 1]).unwrap();
        assert_eq!(w.descents(s1s2, Side::Right), Subset::from_labels(&[2]));
        assert_eq!(w.descents(s1s2, Side::Left), Subset::from_labels(&[1]));
    }

    #[test]
    fn coset_rep_examples() {
        let (_, w) = group("A2");
        let reps = w.minimal_coset_reps(Subset::from_labels(&[1]));
        let lengths: Vec<usize> = reps.iter().map(|e| e.length()).collect();
        assert_eq!(lengths, vec![0, 1, 2]);
        assert_eq!(w.minimal_coset_reps(Subset::EMPTY).len(), 6);
        let all = w.minimal_coset_reps(Subset::full(2));
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].id(), 0);
    }

    #[test]
    fn double_coset_examples() {
        let (_, w) = group("A2");
        let t = w.double_cosets(Subset::from_labels(&[1]), Subset::from_labels(&[2]));
        let mut sizes = t.sizes();
        sizes.sort();
        assert_eq!(sizes, vec![2, 4]);
        assert_eq!(w.double_cosets(Subset::EMPTY, Subset::EMPTY).len(), 6);
        let full = w.double_cosets(Subset::full(2), Subset::full(2));
        assert_eq!(full.sizes(), vec![6]);
    }

    #[test]
    fn cell_closure_examples() {
        let (_, w) = group("A2");
        let t = w.double_cosets(Subset::EMPTY, Subset::EMPTY);
        let s1 = w.from_word(&[0]).unwrap();
        let got = w.cell_closure(&t, 0, 0, Side::Right).unwrap();
        assert_eq!(got, [t.class_of(0), t.class_of(s1)].into_iter().collect());
        let got = w.cell_closure(&t, s1, 0, Side::Right).unwrap();
        assert_eq!(got, [t.class_of(s1), t.class_of(0)].into_iter().collect());

        let t = w.double_cosets(Subset::from_labels(&[1]), Subset::from_labels(&[2]));
        let s2s1 = w.from_word(&[1, 0]).unwrap();
        let got = w.cell_closure(&t, s2s1, 1, Side::Right).unwrap();
        assert_eq!(got.len(), 1);
        let class = *got.iter().next().unwrap();
        assert_eq!(t.classes()[class].size, 2);
    }

    #[test]
    fn subset_parsing() {
        assert_eq!(
            Subset::parse("{1,3}", 3).unwrap(),
            Subset::from_labels(&[1, 3])
        );
        assert_eq!(Subset::parse("2", 3).unwrap(), Subset::from_labels(&[2]));
        assert_eq!(Subset::parse("{}", 3).unwrap(), Subset::EMPTY);
        assert_eq!(Subset::parse("", 3).unwrap(), Subset::EMPTY);
        assert_eq!(Subset::parse("∅", 3).unwrap(), Subset::EMPTY);
        assert_eq!(Subset::parse("all", 3).unwrap(), Subset::full(3));
        assert!(Subset::parse("4", 3).is_err());
        assert!(Subset::parse("x", 3).is_err());
        assert_eq!(Subset::from_labels(&[1, 3]).to_string(), "{1,3}");
        assert_eq!(Subset::EMPTY.to_string(), "{}");
    }
}

use crate::error::{Error, Result};
use crate::vector::Ray;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// The irreducible families this crate realizes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E6,
    E7,
    E8,
}

impl Family {
    /// Short name with the rank attached, e.g. `D4` or `E8`.
    pub fn name(&self, rank: usize) -> String {
        match self {
            Family::A => format!("A{rank}"),
            Family::D => format!("D{rank}"),
            Family::E6 => "E6".into(),
            Family::E7 => "E7".into(),
            Family::E8 => "E8".into(),
        }
    }

    /// Parses `A4`, `D5`, `E6`, `E7`, `E8` (case-insensitive).
    pub fn parse(s: &str) -> Result<(Family, usize)> {
        let t = s.trim().to_ascii_uppercase();
        let (fam, digits) = t
            .split_at_checked(1)
            .ok_or_else(|| Error::Parse(format!("empty family {s:?}")))?;
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in family {s:?}")))?;
        match fam {
            "A" => Ok((Family::A, rank)),
            "D" => Ok((Family::D, rank)),
            "E" => match rank {
                6 => Ok((Family::E6, 6)),
                7 => Ok((Family::E7, 7)),
                8 => Ok((Family::E8, 8)),
                _ => Err(Error::UnsupportedRealization(format!("E{rank}"))),
            },
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

/// A subset of vertex-type labels, stored as a bitmask over labels `1..=16`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct TypeSet(u16);

impl TypeSet {
    /// The empty set.
    pub fn empty() -> Self {
        TypeSet(0)
    }

    /// A singleton set.
    pub fn singleton(label: usize) -> Self {
        let mut s = TypeSet::empty();
        s.insert(label);
        s
    }

    /// Builds a set from labels.
    pub fn from_iter<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        let mut s = TypeSet::empty();
        for l in labels {
            s.insert(l);
        }
        s
    }

    /// Inserts a label (1-based, at most 16).
    pub fn insert(&mut self, label: usize) {
        assert!((1..=16).contains(&label), "type label {label} out of range");
        self.0 |= 1 << (label - 1);
    }

    /// Membership test.
    pub fn contains(&self, label: usize) -> bool {
        (1..=16).contains(&label) && self.0 & (1 << (label - 1)) != 0
    }

    /// Number of labels in the set.
    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    /// Whether the set is empty.
    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// Iterates the labels in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=16).filter(|&l| self.contains(l))
    }

    /// Set union.
    pub fn union(&self, other: &TypeSet) -> TypeSet {
        TypeSet(self.0 | other.0)
    }

    /// Set intersection.
    pub fn intersection(&self, other: &TypeSet) -> TypeSet {
        TypeSet(self.0 & other.0)
    }

    /// Whether the two sets are disjoint.
    pub fn is_disjoint(&self, other: &TypeSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Whether `self ⊆ other`.
    pub fn is_subset(&self, other: &TypeSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Set difference `self ∖ other`.
    pub fn difference(&self, other: &TypeSet) -> TypeSet {
        TypeSet(self.0 & !other.0)
    }

    /// Parses a label string: concatenated digits (`"168"`), comma-separated
    /// labels (`"1,6,8"`), or the empty-set markers `""`/`"-"`.
    pub fn parse(s: &str) -> Result<TypeSet> {
        let t = s.trim();
        if t.is_empty() || t == "-" {
            return Ok(TypeSet::empty());
        }
        let mut set = TypeSet::empty();
        if t.contains(',') {
            for tok in t.split(',') {
                let l: usize = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad type label {tok:?}")))?;
                if !(1..=16).contains(&l) {
                    return Err(Error::Parse(format!("type label {l} out of range")));
                }
                set.insert(l);
            }
        } else {
            for ch in t.chars() {
                let l = ch
                    .to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("bad type digit {ch:?}")))?
                    as usize;
                if l == 0 {
                    return Err(Error::Parse("type label 0 is invalid".into()));
                }
                set.insert(l);
            }
        }
        Ok(set)
    }
}

/// Renders as concatenated digits (`"168"`); labels above 9 are
/// comma-separated; the empty set renders as `"-"`.
impl fmt::Display for TypeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "-");
        }
        if self.iter().all(|l| l <= 9) {
            for l in self.iter() {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let labels: Vec<String> = self.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", labels.join(","))
        }
    }
}

impl Serialize for TypeSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_empty() {
            s.serialize_str("")
        } else {
            s.serialize_str(&self.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for TypeSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        TypeSet::parse(&s).map_err(|e| serde::de::Error::custom(format!("{e}")))
    }
}

/// A simply-laced Dynkin diagram on an arbitrary label set.
///
/// Nodes keep the labels of the realization they came from, so induced
/// subdiagrams (links) remember which ambient types they carry.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Diagram {
    nodes: BTreeSet<usize>,
    edges: BTreeSet<(usize, usize)>,
}

impl Diagram {
    /// Builds a diagram from explicit nodes and edges.
    pub fn new<I, J>(nodes: I, edges: J) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
        J: IntoIterator<Item = (usize, usize)>,
    {
        let nodes: BTreeSet<usize> = nodes.into_iter().collect();
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b || !nodes.contains(&a) || !nodes.contains(&b) {
                return Err(Error::InvalidArgument(format!("bad edge ({a},{b})")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Diagram { nodes, edges: set })
    }

    /// Reads the diagram off a labeled simple system: labels `i` and `j` are
    /// joined iff `⟨r_i, r_j⟩ ≠ 0`. Rejects non-simply-laced pairings
    /// (edges must satisfy `4⟨r_i,r_j⟩² = ⟨r_i,r_i⟩⟨r_j,r_j⟩`).
    pub fn from_simple_system(labeled_roots: &[(usize, Ray)]) -> Result<Self> {
        let nodes: BTreeSet<usize> = labeled_roots.iter().map(|(l, _)| *l).collect();
        if nodes.len() != labeled_roots.len() {
            return Err(Error::InvalidArgument("duplicate labels".into()));
        }
        let mut edges = BTreeSet::new();
        for (k, (i, ri)) in labeled_roots.iter().enumerate() {
            for (j, rj) in labeled_roots.iter().skip(k + 1) {
                let d = ri.dot(rj)?;
                if d != 0 {
                    if 4 * d * d != ri.norm_sq() * rj.norm_sq() {
                        return Err(Error::UnsupportedDiagram(format!(
                            "bond between {i} and {j} is not simply laced"
                        )));
                    }
                    edges.insert((*i.min(j), *i.max(j)));
                }
            }
        }
        Ok(Diagram { nodes, edges })
    }

    /// Node labels in increasing order.
    pub fn nodes(&self) -> impl Iterator<Item = usize> + '_ {
        self.nodes.iter().copied()
    }

    /// Number of nodes.
    pub fn rank(&self) -> usize {
        self.nodes.len()
    }

    /// Edges as ordered pairs `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Whether two labels are joined.
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// The induced subdiagram with the given labels deleted.
    pub fn delete(&self, removed: &TypeSet) -> Diagram {
        let nodes: BTreeSet<usize> = self
            .nodes
            .iter()
            .copied()
            .filter(|l| !removed.contains(*l))
            .collect();
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|(a, b)| nodes.contains(a) && nodes.contains(b))
            .collect();
        Diagram { nodes, edges }
    }

    /// The induced subdiagram with one label deleted (the link diagram of a
    /// type-`i` vertex).
    pub fn link(&self, i: usize) -> Diagram {
        self.delete(&TypeSet::singleton(i))
    }

    /// Connected components, each as its own diagram.
    pub fn components(&self) -> Vec<Diagram> {
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.nodes {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            while let Some(n) = stack.pop() {
                if !comp.insert(n) {
                    continue;
                }
                for &m in &self.nodes {
                    if m != n && self.adjacent(n, m) && !comp.contains(&m) {
                        stack.push(m);
                    }
                }
            }
            seen.extend(&comp);
            let edges = self
                .edges
                .iter()
                .copied()
                .filter(|(a, b)| comp.contains(a) && comp.contains(b))
                .collect();
            out.push(Diagram { nodes: comp, edges });
        }
        out
    }

    /// Classifies a connected diagram as `(family, rank)`.
    ///
    /// Paths are type A; one degree-3 node with sorted arm lengths
    /// `(1,1,m)` is D_{m+3}, `(1,2,2)` is E6, `(1,2,3)` is E7, and
    /// `(1,2,4)` is E8. Everything else is rejected.
    pub fn classify_component(&self) -> Result<(Family, usize)> {
        if self.nodes.is_empty() {
            return Err(Error::UnsupportedDiagram("empty component".into()));
        }
        let degree: BTreeMap<usize, usize> = self
            .nodes
            .iter()
            .map(|&n| (n, self.nodes.iter().filter(|&&m| self.adjacent(n, m)).count()))
            .collect();
        let max_deg = degree.values().copied().max().unwrap_or(0);
        let n = self.rank();
        // A connected simply-laced diagram in scope is a tree.
        if self.edges.len() + 1 != n {
            return Err(Error::UnsupportedDiagram("component contains a cycle".into()));
        }
        if max_deg <= 2 {
            return Ok((Family::A, n));
        }
        if max_deg > 3 || degree.values().filter(|&&d| d == 3).count() > 1 {
            return Err(Error::UnsupportedDiagram(
                "branching beyond a single degree-3 node".into(),
            ));
        }
        let branch = *degree.iter().find(|(_, &d)| d == 3).unwrap().0;
        let mut arms: Vec<usize> = self
            .nodes
            .iter()
            .filter(|&&m| self.adjacent(branch, m))
            .map(|&m| {
                // Walk away from the branch node to measure the arm.
                let mut len = 1;
                let (mut prev, mut cur) = (branch, m);
                loop {
                    let next = self
                        .nodes
                        .iter()
                        .copied()
                        .find(|&k| k != prev && self.adjacent(cur, k));
                    match next {
                        Some(k) => {
                            len += 1;
                            prev = cur;
                            cur = k;
                        }
                        None => break,
                    }
                }
                len
            })
            .collect();
        arms.sort_unstable();
        match arms.as_slice() {
            [1, 1, m] => Ok((Family::D, m + 3)),
            [1, 2, 2] => Ok((Family::E6, 6)),
            [1, 2, 3] => Ok((Family::E7, 7)),
            [1, 2, 4] => Ok((Family::E8, 8)),
            _ => Err(Error::UnsupportedDiagram(format!(
                "branch arms {arms:?} outside the A/D/E catalogue"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e8() -> Diagram {
        Diagram::new(
            1..=8,
            [(1, 4), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)],
        )
        .unwrap()
    }

    #[test]
    fn classify_paths_and_branches() {
        let a4 = Diagram::new(1..=4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(a4.classify_component().unwrap(), (Family::A, 4));
        let d4 = Diagram::new(1..=4, [(1, 3), (2, 3), (3, 4)]).unwrap();
        assert_eq!(d4.classify_component().unwrap(), (Family::D, 4));
        assert_eq!(e8().classify_component().unwrap(), (Family::E8, 8));
        let e7 = e8().link(8);
        assert_eq!(e7.classify_component().unwrap(), (Family::E7, 7));
        let e6 = e8().delete(&TypeSet::from_iter([7, 8]));
        assert_eq!(e6.classify_component().unwrap(), (Family::E6, 6));
    }

    #[test]
    fn link_of_e8_at_2_is_d7() {
        let d7 = e8().link(2);
        assert_eq!(d7.rank(), 7);
        assert_eq!(d7.classify_component().unwrap(), (Family::D, 7));
        // Original labels survive.
        let labels: Vec<usize> = d7.nodes().collect();
        assert_eq!(labels, vec![1, 3, 4, 5, 6, 7, 8]);
    }

    #[test]
    fn deleting_2_and_6_from_e6_leaves_d4() {
        let e6 = e8().delete(&TypeSet::from_iter([7, 8]));
        let rest = e6.delete(&TypeSet::from_iter([2, 6]));
        assert_eq!(rest.classify_component().unwrap(), (Family::D, 4));
    }

    #[test]
    fn components_split_correctly() {
        // Deleting the branch node of E8 leaves A1 + A2 + A4.
        let cut = e8().link(4);
        let mut kinds: Vec<(Family, usize)> = cut
            .components()
            .iter()
            .map(|c| c.classify_component().unwrap())
            .collect();
        kinds.sort();
        assert_eq!(kinds, vec![(Family::A, 1), (Family::A, 2), (Family::A, 4)]);
    }

    #[test]
    fn rejects_cycles_and_heavy_branching() {
        let tri = Diagram::new(1..=3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(tri.classify_component().is_err());
        let star = Diagram::new(1..=5, [(1, 5), (2, 5), (3, 5), (4, 5)]).unwrap();
        assert!(star.classify_component().is_err());
    }

    #[test]
    fn typeset_display_and_parse() {
        let s = TypeSet::from_iter([6, 1, 8]);
        assert_eq!(s.to_string(), "168");
        assert_eq!(TypeSet::parse("168").unwrap(), s);
        assert_eq!(TypeSet::parse("1,6,8").unwrap(), s);
        assert_eq!(TypeSet::parse("").unwrap(), TypeSet::empty());
        assert_eq!(TypeSet::parse("-").unwrap(), TypeSet::empty());
        assert_eq!(TypeSet::empty().to_string(), "-");
        assert!(TypeSet::parse("0").is_err());
    }

    #[test]
    fn family_names_parse() {
        assert_eq!(Family::parse("d4").unwrap(), (Family::D, 4));
        assert_eq!(Family::parse("E8").unwrap(), (Family::E8, 8));
        assert_eq!(Family::parse("A4").unwrap(), (Family::A, 4));
        assert!(Family::parse("E9").is_err());
        assert!(Family::parse("B3").is_err());
    }
}

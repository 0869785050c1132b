//! Partitions, compositions, multipartitions, their diagrams, the dominance
//! order and rim-hook combinatorics.
//!
//! Nodes are 1-based triples `(row, col, comp)` matching the usual `(i, j, k)`
//! convention for multipartition diagrams.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::de::{Deserializer, Error as DeError};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// A partition: a weakly decreasing sequence of positive integers.
///
/// The empty partition is written `-`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Panics unless `parts` is weakly decreasing with all parts positive.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.last().is_none_or(|&p| p > 0),
            "partition parts must be weakly decreasing and positive"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from a weakly decreasing sequence that may carry a
    /// suffix of zeros (as produced by row-count arithmetic).
    pub fn from_nonincreasing(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 0-based, with parts beyond the length read as 0.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Length of the `j`-th column (1-based), i.e. the conjugate part.
    pub fn col_len(&self, j: u32) -> usize {
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    /// Canonical enumeration order: descending lexicographic on the part
    /// sequences padded with zeros, so `(2) < (1,1) < (1) < ()`.
    pub fn canonical_cmp(&self, other: &Partition) -> Ordering {
        let len = self.len().max(other.len());
        for i in 0..len {
            match self.part(i).cmp(&other.part(i)) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) || parts.last().is_some_and(|&p| p == 0) {
            return Err(D::Error::custom("not a partition"));
        }
        Ok(Partition { parts })
    }
}

/// A composition with a declared length bound: a fixed-length vector of
/// non-negative integers, trailing zeros permitted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// `parts.len()` is the declared bound `m`.
    pub fn new(parts: Vec<u32>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Declared length bound.
    pub fn bound(&self) -> usize {
        self.parts.len()
    }

    /// Index of the last nonzero entry plus one (0 for the zero composition).
    pub fn length(&self) -> usize {
        self.parts.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1)
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An ordered `r`-tuple of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "a multipartition needs r >= 1 components");
        Multipartition { components }
    }

    /// The empty `r`-multipartition `(-, ..., -)`.
    pub fn empty(r: usize) -> Self {
        Multipartition::new(vec![Partition::empty(); r])
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Component `k`, 1-based.
    pub fn component(&self, k: usize) -> &Partition {
        assert!(k >= 1 && k <= self.components.len(), "component index out of range");
        &self.components[k - 1]
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> u64 {
        self.components.iter().map(|c| c.size()).sum()
    }

    /// Whether the node lies in the diagram, i.e. `1 <= j <= mu^(k)_i`.
    pub fn contains(&self, node: Node) -> bool {
        node.comp >= 1
            && node.comp <= self.r()
            && node.row >= 1
            && node.col >= 1
            && node.col as u32 <= self.components[node.comp - 1].part(node.row - 1)
    }

    /// All nodes of the diagram, ordered by component, then row, then column.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (k0, comp) in self.components.iter().enumerate() {
            for (i0, &len) in comp.parts().iter().enumerate() {
                for j in 1..=len as usize {
                    out.push(Node::new(i0 + 1, j, k0 + 1));
                }
            }
        }
        out
    }

    /// Per-component sizes `(|mu^(1)|, ..., |mu^(r)|)`.
    pub fn component_sizes(&self) -> Vec<u64> {
        self.components.iter().map(|c| c.size()).collect()
    }

    /// Canonical enumeration order: lexicographic by component index, with
    /// each component compared by [`Partition::canonical_cmp`].
    pub fn canonical_cmp(&self, other: &Multipartition) -> Ordering {
        debug_assert_eq!(self.r(), other.r());
        for (a, b) in self.components.iter().zip(&other.components) {
            match a.canonical_cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Full dominance comparison; `Greater` means `self` dominates strictly.
    pub fn dominance_cmp(&self, other: &Multipartition) -> Result<DomOrdering, ShapeError> {
        if self.r() != other.r() {
            return Err(ShapeError::ComponentMismatch {
                left: self.r(),
                right: other.r(),
            });
        }
        if self.size() != other.size() {
            return Err(ShapeError::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let depths: Vec<usize> = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.len().max(b.len()))
            .collect();
        let a = prefix_vector(self.components.iter().map(|c| c.parts()), &depths);
        let b = prefix_vector(other.components.iter().map(|c| c.parts()), &depths);
        Ok(compare_prefixes(&a, &b))
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Multipartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.components.len()))?;
        for c in &self.components {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Multipartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let components = Vec::<Partition>::deserialize(deserializer)?;
        if components.is_empty() {
            return Err(D::Error::custom("a multipartition needs r >= 1 components"));
        }
        Ok(Multipartition { components })
    }
}

/// An ordered `r`-tuple of bounded compositions (a "type").
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RComposition {
    components: Vec<Composition>,
}

impl RComposition {
    pub fn new(components: Vec<Composition>) -> Self {
        assert!(!components.is_empty(), "an r-composition needs r >= 1 components");
        RComposition { components }
    }

    pub fn components(&self) -> &[Composition] {
        &self.components
    }

    /// Component `k`, 1-based.
    pub fn component(&self, k: usize) -> &Composition {
        &self.components[k - 1]
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> u64 {
        self.components.iter().map(|c| c.size()).sum()
    }

    pub fn component_sizes(&self) -> Vec<u64> {
        self.components.iter().map(|c| c.size()).collect()
    }

    pub fn dominance_cmp(&self, other: &RComposition) -> Result<DomOrdering, ShapeError> {
        if self.r() != other.r() {
            return Err(ShapeError::ComponentMismatch {
                left: self.r(),
                right: other.r(),
            });
        }
        if self
            .components
            .iter()
            .zip(&other.components)
            .any(|(a, b)| a.bound() != b.bound())
        {
            return Err(ShapeError::BoundMismatch);
        }
        if self.size() != other.size() {
            return Err(ShapeError::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let depths: Vec<usize> = self.components.iter().map(|c| c.bound()).collect();
        let a = prefix_vector(self.components.iter().map(|c| c.parts()), &depths);
        let b = prefix_vector(other.components.iter().map(|c| c.parts()), &depths);
        Ok(compare_prefixes(&a, &b))
    }
}

impl fmt::Display for RComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A node `(i, j, k)` of a multipartition diagram; all coordinates 1-based.
///
/// Field order gives the derived `Ord` the scan order (component, row, column).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub comp: usize,
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        assert!(row >= 1 && col >= 1 && comp >= 1, "node coordinates are 1-based");
        Node { comp, row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

impl fmt::Debug for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Result of a dominance comparison.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DomOrdering {
    Equal,
    Greater,
    Less,
    Incomparable,
}

/// Shape disagreement between operands of a comparison.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ShapeError {
    SizeMismatch { left: u64, right: u64 },
    ComponentMismatch { left: usize, right: usize },
    BoundMismatch,
}

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeError::SizeMismatch { left, right } => {
                write!(f, "size mismatch: {left} vs {right}")
            }
            ShapeError::ComponentMismatch { left, right } => {
                write!(f, "component count mismatch: {left} vs {right}")
            }
            ShapeError::BoundMismatch => write!(f, "length bounds disagree"),
        }
    }
}

impl std::error::Error for ShapeError {}

fn prefix_vector<'a>(components: impl Iterator<Item = &'a [u32]>, depths: &[usize]) -> Vec<u64> {
    let mut out = Vec::new();
    let mut running = 0u64;
    for (comp, &depth) in components.zip(depths) {
        for i in 0..depth {
            running += comp.get(i).copied().unwrap_or(0) as u64;
            out.push(running);
        }
    }
    out
}

fn compare_prefixes(a: &[u64], b: &[u64]) -> DomOrdering {
    debug_assert_eq!(a.len(), b.len());
    let mut some_greater = false;
    let mut some_less = false;
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Greater => some_greater = true,
            Ordering::Less => some_less = true,
            Ordering::Equal => {}
        }
    }
    match (some_greater, some_less) {
        (false, false) => DomOrdering::Equal,
        (true, false) => DomOrdering::Greater,
        (false, true) => DomOrdering::Less,
        (true, true) => DomOrdering::Incomparable,
    }
}

/// A rim hook of a multipartition: the connected border strip weakly
/// south-east of its generating node, within one component. Never empty.
#[derive(Clone, PartialEq, Eq, Debug)]
#[allow(clippy::len_without_is_empty)]
pub struct RimHook {
    nodes: BTreeSet<Node>,
    leg_length: usize,
    foot: Node,
}

impl RimHook {
    pub fn nodes(&self) -> &BTreeSet<Node> {
        &self.nodes
    }

    /// Number of nodes; equals the hook length of the generating node.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Number of occupied rows minus one.
    pub fn leg_length(&self) -> usize {
        self.leg_length
    }

    /// The node in the lowest occupied row's leftmost occupied column.
    pub fn foot(&self) -> Node {
        self.foot
    }
}

/// Errors from rim-hook operations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HookError {
    NodeOutsideDiagram(Node),
    NotARimHook,
}

impl fmt::Display for HookError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HookError::NodeOutsideDiagram(x) => write!(f, "node {x} lies outside the diagram"),
            HookError::NotARimHook => write!(f, "the given node set is not a rim hook of the diagram"),
        }
    }
}

impl std::error::Error for HookError {}

/// The rim hook `r_x = { (a,b,k) in [la] : a >= i, b >= j, (a+1,b+1,k) not in [la] }`
/// of `x = (i,j,k)`. Its size equals the hook length of `x`.
pub fn rim_hook(la: &Multipartition, x: Node) -> Result<RimHook, HookError> {
    if !la.contains(x) {
        return Err(HookError::NodeOutsideDiagram(x));
    }
    let comp = &la.components()[x.comp - 1];
    let (i, j) = (x.row, x.col as u32);
    // lowest row whose length still reaches column j
    let i_max = (i..=comp.len()).take_while(|&a| comp.part(a - 1) >= j).last().unwrap();
    let mut nodes = BTreeSet::new();
    for a in i..=i_max {
        let lo = j.max(comp.part(a)); // comp.part(a) is the 0-based row below
        for b in lo..=comp.part(a - 1) {
            nodes.insert(Node::new(a, b as usize, x.comp));
        }
    }
    Ok(RimHook {
        nodes,
        leg_length: i_max - i,
        foot: Node::new(i_max, j as usize, x.comp),
    })
}

/// Removes a rim hook, returning the multipartition whose diagram is
/// `[la] \ h`. Fails unless `h` is a rim hook of `la`.
pub fn remove_rim_hook(la: &Multipartition, h: &RimHook) -> Result<Multipartition, HookError> {
    let first = *h.nodes.iter().next().ok_or(HookError::NotARimHook)?;
    let i = h.nodes.iter().map(|n| n.row).min().unwrap();
    let j = h.nodes.iter().map(|n| n.col).min().unwrap();
    let x = Node::new(i, j, first.comp);
    let regenerated = rim_hook(la, x).map_err(|_| HookError::NotARimHook)?;
    if regenerated != *h {
        return Err(HookError::NotARimHook);
    }
    let i_max = h.foot.row;
    let comp = &la.components()[x.comp - 1];
    let mut rows: Vec<u32> = comp.parts().to_vec();
    for a in i..i_max {
        rows[a - 1] = comp.part(a) - 1;
    }
    rows[i_max - 1] = (j - 1) as u32;
    let mut components = la.components().to_vec();
    components[x.comp - 1] = Partition::from_nonincreasing(rows);
    Ok(Multipartition::new(components))
}

fn partitions_exact(n: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition::new(prefix.clone()));
        return;
    }
    for p in (1..=n.min(max_part)).rev() {
        prefix.push(p);
        partitions_exact(n - p, p, prefix, out);
        prefix.pop();
    }
}

fn partitions_at_most(n: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    for p in (1..=n.min(max_part)).rev() {
        prefix.push(p);
        partitions_at_most(n - p, p, prefix, out);
        prefix.pop();
    }
    out.push(Partition::new(prefix.clone()));
}

/// All partitions of `n` in canonical (descending lexicographic) order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    partitions_exact(n, n.max(1), &mut Vec::new(), &mut out);
    if n == 0 {
        // partitions_exact pushed the empty partition already
        debug_assert_eq!(out.len(), 1);
    }
    out
}

/// All `r`-multipartitions of total size `n`, in canonical order:
/// lexicographic by component index, descending lexicographic within each
/// component.
pub fn enumerate_multipartitions(n: usize, r: usize) -> Vec<Multipartition> {
    assert!(r >= 1, "r >= 1 required");
    fn rec(budget: u32, remaining: usize, comps: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
        if remaining == 1 {
            for p in enumerate_partitions(budget) {
                comps.push(p);
                out.push(Multipartition::new(comps.clone()));
                comps.pop();
            }
            return;
        }
        let mut choices = Vec::new();
        partitions_at_most(budget, budget.max(1), &mut Vec::new(), &mut choices);
        for p in choices {
            let used = p.size() as u32;
            comps.push(p);
            rec(budget - used, remaining - 1, comps, out);
            comps.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, r, &mut Vec::new(), &mut out);
    out
}

fn vectors_exact(sum: u32, len: usize, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
    if len == 0 {
        if sum == 0 {
            out.push(Composition::new(prefix.clone()));
        }
        return;
    }
    for v in (0..=sum).rev() {
        prefix.push(v);
        vectors_exact(sum - v, len - 1, prefix, out);
        prefix.pop();
    }
}

fn vectors_at_most(budget: u32, len: usize, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
    if len == 0 {
        out.push(Composition::new(prefix.clone()));
        return;
    }
    for v in (0..=budget).rev() {
        prefix.push(v);
        vectors_at_most(budget - v, len - 1, prefix, out);
        prefix.pop();
    }
}

/// All `r`-compositions of `n` with `ell(mu^(k)) <= m_k`, stored padded to the
/// declared bounds, in the canonical descending-lexicographic order.
pub fn enumerate_types(n: usize, r: usize, m: &[usize]) -> Vec<RComposition> {
    assert_eq!(m.len(), r, "length bound vector must have r entries");
    assert!(m.iter().all(|&mk| mk >= 1), "length bounds must be positive");
    fn rec(
        budget: u32,
        m: &[usize],
        comps: &mut Vec<Composition>,
        out: &mut Vec<RComposition>,
    ) {
        if m.len() == 1 {
            let mut choices = Vec::new();
            vectors_exact(budget, m[0], &mut Vec::new(), &mut choices);
            for c in choices {
                comps.push(c);
                out.push(RComposition::new(comps.clone()));
                comps.pop();
            }
            return;
        }
        let mut choices = Vec::new();
        vectors_at_most(budget, m[0], &mut Vec::new(), &mut choices);
        for c in choices {
            let used = c.size() as u32;
            comps.push(c);
            rec(budget - used, &m[1..], comps, out);
            comps.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, m, &mut Vec::new(), &mut out);
    out
}

/// Reads a multipartition as an `r`-composition padded to the bounds `m`.
pub fn multipartition_as_type(la: &Multipartition, m: &[usize]) -> RComposition {
    assert_eq!(m.len(), la.r());
    let comps = la
        .components()
        .iter()
        .zip(m)
        .map(|(c, &mk)| {
            assert!(c.len() <= mk, "component longer than its bound");
            let mut parts = c.parts().to_vec();
            parts.resize(mk, 0);
            Composition::new(parts)
        })
        .collect();
    RComposition::new(comps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(spec: &[&[u32]]) -> Multipartition {
        Multipartition::new(spec.iter().map(|p| Partition::new(p.to_vec())).collect())
    }

    #[test]
    fn enumerate_empty_multipartition() {
        let all = enumerate_multipartitions(0, 3);
        assert_eq!(all, vec![Multipartition::empty(3)]);
    }

    #[test]
    fn enumerate_single_node_placements() {
        let all = enumerate_multipartitions(1, 2);
        assert_eq!(all, vec![mp(&[&[1], &[]]), mp(&[&[], &[1]])]);
    }

    #[test]
    fn enumerate_two_two_canonical_order() {
        let all = enumerate_multipartitions(2, 2);
        assert_eq!(
            all,
            vec![
                mp(&[&[2], &[]]),
                mp(&[&[1, 1], &[]]),
                mp(&[&[1], &[1]]),
                mp(&[&[], &[2]]),
                mp(&[&[], &[1, 1]]),
            ]
        );
    }

    // independent count: sum over size compositions of products of partition
    // numbers, with p(n) from the classical recursive definition
    fn partition_count(n: u32, max: u32) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=n.min(max)).map(|p| partition_count(n - p, p)).sum()
    }

    fn multipartition_count(n: u32, r: usize) -> u64 {
        if r == 1 {
            return partition_count(n, n.max(1));
        }
        (0..=n)
            .map(|a| partition_count(a, a.max(1)) * multipartition_count(n - a, r - 1))
            .sum()
    }

    #[test]
    fn enumeration_cardinality_matches_recursive_oracle() {
        for n in 0..=6 {
            for r in 1..=3 {
                let got = enumerate_multipartitions(n, r).len() as u64;
                assert_eq!(got, multipartition_count(n as u32, r), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn enumeration_has_no_duplicates_and_is_canonically_sorted() {
        let all = enumerate_multipartitions(4, 3);
        for w in all.windows(2) {
            assert_eq!(w[0].canonical_cmp(&w[1]), Ordering::Less);
        }
    }

    #[test]
    fn types_of_two_into_one_component() {
        let all = enumerate_types(2, 1, &[2]);
        let parts: Vec<&[u32]> = all.iter().map(|t| t.component(1).parts()).collect();
        assert_eq!(parts, vec![&[2, 0][..], &[1, 1][..], &[0, 2][..]]);
    }

    #[test]
    fn types_of_one_into_two_singleton_components() {
        let all = enumerate_types(1, 2, &[1, 1]);
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].component(1).parts(), &[1]);
        assert_eq!(all[0].component(2).parts(), &[0]);
        assert_eq!(all[1].component(1).parts(), &[0]);
        assert_eq!(all[1].component(2).parts(), &[1]);
    }

    // compositions of n into exactly m ordered non-negative parts: C(n+m-1, m-1)
    fn comp_count(n: u64, m: u64) -> u64 {
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 1..m {
            num *= n + i;
            den *= i;
        }
        num / den
    }

    #[test]
    fn types_two_two_count_matches_convolution_oracle() {
        let all = enumerate_types(2, 2, &[2, 2]);
        let expected: u64 = (0..=2).map(|a| comp_count(a, 2) * comp_count(2 - a, 2)).sum();
        assert_eq!(expected, 10);
        assert_eq!(all.len(), 10);
    }

    #[test]
    fn dominance_reflexive() {
        let la = mp(&[&[2, 1], &[1]]);
        assert_eq!(la.dominance_cmp(&la).unwrap(), DomOrdering::Equal);
    }

    #[test]
    fn dominance_examples() {
        let a = mp(&[&[2], &[]]);
        let b = mp(&[&[], &[1, 1]]);
        assert_eq!(a.dominance_cmp(&b).unwrap(), DomOrdering::Greater);
        assert_eq!(b.dominance_cmp(&a).unwrap(), DomOrdering::Less);

        let c = mp(&[&[1, 1], &[]]);
        let d = mp(&[&[], &[2]]);
        assert_eq!(c.dominance_cmp(&d).unwrap(), DomOrdering::Greater);
    }

    #[test]
    fn dominance_size_mismatch_is_an_error() {
        let a = mp(&[&[2], &[]]);
        let b = mp(&[&[1], &[]]);
        assert!(a.dominance_cmp(&b).is_err());
        let c = mp(&[&[2]]);
        assert!(a.dominance_cmp(&c).is_err());
    }

    #[test]
    fn dominance_is_a_partial_order_on_small_grids() {
        for n in 0..=5 {
            for r in 1..=3 {
                let all = enumerate_multipartitions(n, r);
                let m = all.len();
                let mut cmp = vec![vec![DomOrdering::Equal; m]; m];
                for i in 0..m {
                    for j in 0..m {
                        cmp[i][j] = all[i].dominance_cmp(&all[j]).unwrap();
                    }
                }
                for i in 0..m {
                    assert_eq!(cmp[i][i], DomOrdering::Equal);
                    for j in 0..m {
                        if i != j {
                            assert_ne!(cmp[i][j], DomOrdering::Equal, "antisymmetry");
                        }
                        // symmetry of the comparison
                        let expect = match cmp[i][j] {
                            DomOrdering::Greater => DomOrdering::Less,
                            DomOrdering::Less => DomOrdering::Greater,
                            other => other,
                        };
                        assert_eq!(cmp[j][i], expect);
                    }
                }
                // transitivity
                if n <= 4 {
                    for i in 0..m {
                        for j in 0..m {
                            if cmp[i][j] != DomOrdering::Greater {
                                continue;
                            }
                            for k in 0..m {
                                if cmp[j][k] == DomOrdering::Greater {
                                    assert_eq!(cmp[i][k], DomOrdering::Greater, "transitivity");
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_order_refines_dominance() {
        for n in 0..=5 {
            let all = enumerate_multipartitions(n, 3);
            for (i, a) in all.iter().enumerate() {
                for b in &all[i + 1..] {
                    // a precedes b canonically, so b must not dominate a
                    assert_ne!(a.dominance_cmp(b).unwrap(), DomOrdering::Less);
                }
            }
        }
    }

    #[test]
    fn rim_hook_single_box() {
        let la = mp(&[&[1]]);
        let h = rim_hook(&la, Node::new(1, 1, 1)).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h.leg_length(), 0);
        assert_eq!(h.foot(), Node::new(1, 1, 1));
    }

    #[test]
    fn rim_hook_of_staircase_corner() {
        let la = mp(&[&[2, 1]]);
        let h = rim_hook(&la, Node::new(1, 1, 1)).unwrap();
        let expect: BTreeSet<Node> = [
            Node::new(1, 1, 1),
            Node::new(1, 2, 1),
            Node::new(2, 1, 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(h.nodes(), &expect);
        assert_eq!(h.leg_length(), 1);
        assert_eq!(h.foot(), Node::new(2, 1, 1));
        // |r_x| = arm + leg + 1
        assert_eq!(h.len(), 3);
    }

    #[test]
    fn rim_hook_outside_diagram_is_an_error() {
        let la = mp(&[&[1]]);
        assert_eq!(
            rim_hook(&la, Node::new(2, 1, 1)),
            Err(HookError::NodeOutsideDiagram(Node::new(2, 1, 1)))
        );
    }

    #[test]
    fn rim_hook_length_equals_hook_length_up_to_eight() {
        for n in 1..=8u32 {
            for la in enumerate_partitions(n) {
                let m = Multipartition::new(vec![la.clone()]);
                for (i0, &row) in la.parts().iter().enumerate() {
                    for j in 1..=row {
                        let arm = (row - j) as usize;
                        let leg = la.col_len(j) - (i0 + 1);
                        let h = rim_hook(&m, Node::new(i0 + 1, j as usize, 1)).unwrap();
                        assert_eq!(h.len(), arm + leg + 1, "la={la} cell=({},{})", i0 + 1, j);
                        assert_eq!(h.leg_length(), leg);
                    }
                }
            }
        }
    }

    #[test]
    fn remove_rim_hook_examples() {
        let la = mp(&[&[2, 1], &[]]);
        let h = rim_hook(&la, Node::new(1, 1, 1)).unwrap();
        assert_eq!(remove_rim_hook(&la, &h).unwrap(), Multipartition::empty(2));

        let la = mp(&[&[], &[1, 1]]);
        let h = rim_hook(&la, Node::new(2, 1, 2)).unwrap();
        assert_eq!(remove_rim_hook(&la, &h).unwrap(), mp(&[&[], &[1]]));

        let la = mp(&[&[1], &[1]]);
        let h = rim_hook(&la, Node::new(1, 1, 1)).unwrap();
        assert_eq!(remove_rim_hook(&la, &h).unwrap(), mp(&[&[], &[1]]));
    }

    #[test]
    fn remove_rejects_foreign_hooks() {
        let la = mp(&[&[2, 1], &[]]);
        let other = mp(&[&[2, 2], &[]]);
        let h = rim_hook(&other, Node::new(1, 2, 1)).unwrap();
        assert_eq!(remove_rim_hook(&la, &h), Err(HookError::NotARimHook));
    }

    #[test]
    fn removal_always_yields_valid_multipartition() {
        for n in 1..=6 {
            for la in enumerate_multipartitions(n, 2) {
                for x in la.nodes() {
                    let h = rim_hook(&la, x).unwrap();
                    let red = remove_rim_hook(&la, &h).unwrap();
                    assert_eq!(red.size(), la.size() - h.len() as u64);
                }
            }
        }
    }

    #[test]
    fn multipartition_json_round_trip() {
        let la = mp(&[&[2, 1], &[]]);
        let json = serde_json::to_string(&la).unwrap();
        assert_eq!(json, "[[2,1],[]]");
        let back: Multipartition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, la);
        assert!(serde_json::from_str::<Multipartition>("[[1,2]]").is_err());
    }
}

//! Residues and the block decomposition: two multipartitions label Weyl (or
//! Specht) modules in the same block exactly when their diagrams carry the
//! same multiset of residues. In the finite regime, members of a block differ
//! in at most two components, and every block is Morita equivalent to a block
//! of a two-parameter algebra obtained by projecting onto those components.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::combinatorics::{enumerate_multipartitions, Multipartition, Node};
use crate::parameters::{classify, Extended, ParameterSet, Verdict};

/// The residue `res(x) = j - i + f_k (mod e)` of a node; a plain integer when
/// `e = INFINITY`, and just `f_k` when `q = 1`.
pub fn residue(x: Node, p: &ParameterSet) -> i64 {
    let fk = p.f()[x.comp - 1] as i64;
    if p.q_is_one() {
        return fk;
    }
    let raw = x.col as i64 - x.row as i64 + fk;
    match p.e() {
        Extended::Finite(e) => raw.rem_euclid(e as i64),
        Extended::Infinity => raw,
    }
}

/// The sorted residue multiset of a diagram.
pub fn residue_content(la: &Multipartition, p: &ParameterSet) -> Vec<i64> {
    let mut content: Vec<i64> = la.nodes().into_iter().map(|x| residue(x, p)).collect();
    content.sort_unstable();
    content
}

/// A residue-equivalence class of multipartitions.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Block {
    /// Sorted residue multiset shared by all members.
    pub content: Vec<i64>,
    /// Members in canonical enumeration order.
    pub members: Vec<Multipartition>,
    /// Component indices (1-based) on which members differ.
    pub varying: Vec<usize>,
}

impl Block {
    /// The set of distinct residues occurring in the block.
    pub fn residue_set(&self) -> BTreeSet<i64> {
        self.content.iter().copied().collect()
    }

    /// Common size of the members.
    pub fn size(&self) -> u64 {
        self.members[0].size()
    }
}

fn varying_of(members: &[Multipartition]) -> Vec<usize> {
    let first = &members[0];
    (1..=first.r())
        .filter(|&k| members.iter().any(|m| m.component(k) != first.component(k)))
        .collect()
}

/// Component indices on which the block's members differ.
pub fn varying_components(b: &Block) -> BTreeSet<usize> {
    b.varying.iter().copied().collect()
}

/// Partitions a precomputed list of multipartitions into blocks by residue
/// content; blocks are ordered by their sorted content.
pub fn block_partition_of(members: &[Multipartition], p: &ParameterSet) -> Vec<Block> {
    let mut classes: BTreeMap<Vec<i64>, Vec<Multipartition>> = BTreeMap::new();
    for la in members {
        classes
            .entry(residue_content(la, p))
            .or_default()
            .push(la.clone());
    }
    classes
        .into_iter()
        .map(|(content, members)| {
            let varying = varying_of(&members);
            Block {
                content,
                members,
                varying,
            }
        })
        .collect()
}

/// The block decomposition of all `r`-multipartitions of `n`.
pub fn block_partition(n: usize, r: usize, p: &ParameterSet) -> Vec<Block> {
    assert_eq!(r, p.r(), "component count must match the parameter set");
    block_partition_of(&enumerate_multipartitions(n, r), p)
}

/// Failure modes of the two-component Morita reduction.
#[derive(Clone, Debug)]
pub enum BlockError {
    /// The parameters are not in the finite regime.
    RegimeViolation(Verdict),
    /// Reduction needs at least three components to be a reduction.
    TooFewComponents(usize),
    /// Members disagree outside the selected component pair, or their
    /// projections land in more than one reduced block.
    ProjectionInconsistent(String),
}

impl fmt::Display for BlockError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockError::RegimeViolation(v) => write!(
                f,
                "Morita reduction requires the finite regime, classifier says {:?}",
                v.kind
            ),
            BlockError::TooFewComponents(r) => {
                write!(f, "Morita reduction requires r >= 3, got r = {r}")
            }
            BlockError::ProjectionInconsistent(msg) => {
                write!(f, "projection inconsistency: {msg}")
            }
        }
    }
}

impl std::error::Error for BlockError {}

/// Result of projecting a finite-regime block onto its two varying components.
#[derive(Clone, Debug, Serialize)]
pub struct MoritaReduction {
    /// The selected component pair (1-based, ascending).
    pub i: usize,
    pub j: usize,
    /// `n' = |la^(i)| + |la^(j)|`, the size of the reduced block's members.
    #[serde(rename = "nReduced")]
    pub n_reduced: u64,
    /// Exponents `(f_i, f_j)` of the reduced two-parameter algebra.
    #[serde(rename = "reducedF")]
    pub reduced_f: Vec<u64>,
    /// The block of the reduced algebra containing all projections.
    #[serde(rename = "reducedBlock")]
    pub reduced_block: Block,
}

/// Projects a block onto its (at most two) varying components; valid only in
/// the finite regime with `r >= 3`. Components are padded with the smallest
/// unused indices when fewer than two vary.
pub fn morita_reduction(b: &Block, p: &ParameterSet) -> Result<MoritaReduction, BlockError> {
    if p.r() < 3 {
        return Err(BlockError::TooFewComponents(p.r()));
    }
    let n = b.size() as usize;
    let verdict = classify(n, p);
    if !verdict.is_finite_type() {
        return Err(BlockError::RegimeViolation(verdict));
    }
    let mut pair: Vec<usize> = b.varying.clone();
    let mut next = 1;
    while pair.len() < 2 {
        if !pair.contains(&next) {
            pair.push(next);
        }
        next += 1;
    }
    pair.sort_unstable();
    if pair.len() > 2 {
        return Err(BlockError::ProjectionInconsistent(format!(
            "{} varying components in a finite-regime block",
            pair.len()
        )));
    }
    let (i, j) = (pair[0], pair[1]);
    let first = &b.members[0];
    for m in &b.members {
        for k in 1..=p.r() {
            if k != i && k != j && m.component(k) != first.component(k) {
                return Err(BlockError::ProjectionInconsistent(format!(
                    "members differ in component {k} outside the pair ({i},{j})"
                )));
            }
        }
    }
    let n_reduced = first.component(i).size() + first.component(j).size();
    let reduced_f = vec![p.f()[i - 1], p.f()[j - 1]];
    let reduced_params = p
        .with_f(reduced_f.clone())
        .expect("projected exponents stay in range");
    let projections: Vec<Multipartition> = b
        .members
        .iter()
        .map(|m| Multipartition::new(vec![m.component(i).clone(), m.component(j).clone()]))
        .collect();
    let reduced_blocks = block_partition(n_reduced as usize, 2, &reduced_params);
    let target = reduced_blocks
        .into_iter()
        .find(|rb| rb.members.contains(&projections[0]))
        .expect("every multipartition lies in some block");
    for pr in &projections {
        if !target.members.contains(pr) {
            return Err(BlockError::ProjectionInconsistent(format!(
                "projection {pr} falls outside the reduced block"
            )));
        }
    }
    Ok(MoritaReduction {
        i,
        j,
        n_reduced,
        reduced_f,
        reduced_block: target,
    })
}

//! Standard and semistandard tableaux on multipartition diagrams, and the
//! dimension identities they induce: the Ariki-Koike algebra has a basis
//! indexed by pairs of standard tableaux, the cyclotomic q-Schur algebra by
//! pairs of semistandard tableaux.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::combinatorics::{
    enumerate_multipartitions, enumerate_types, Multipartition, Node,
    Partition, RComposition, ShapeError,
};

/// A semistandard entry `(a, c)`: row `a` of type component `c`.
///
/// Entries compare by `(a,c) < (b,d)` iff `c < d`, or `c = d` and `a < b`;
/// field order makes the derived `Ord` do exactly that.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Entry {
    pub comp: usize,
    pub row: u32,
}

impl Entry {
    pub fn new(row: u32, comp: usize) -> Self {
        Entry { comp, row }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.comp)
    }
}

impl fmt::Debug for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A standard tableau: a filling of the diagram by `1..n`, strictly
/// increasing along rows and down columns of every component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardTableau {
    shape: Multipartition,
    values: BTreeMap<Node, u32>,
}

impl StandardTableau {
    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn value(&self, node: Node) -> Option<u32> {
        self.values.get(&node).copied()
    }

    pub fn values(&self) -> &BTreeMap<Node, u32> {
        &self.values
    }
}

impl Serialize for StandardTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.values.len()))?;
        for (node, v) in &self.values {
            map.serialize_entry(&format!("{},{},{}", node.row, node.col, node.comp), v)?;
        }
        map.end()
    }
}

/// A semistandard tableau of some shape and type: rows weakly increase,
/// columns strictly increase, and nodes of component `k` only carry entries
/// `(a, c)` with `c >= k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemistandardTableau {
    shape: Multipartition,
    ty: RComposition,
    entries: BTreeMap<Node, Entry>,
}

impl SemistandardTableau {
    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn ty(&self) -> &RComposition {
        &self.ty
    }

    pub fn entry(&self, node: Node) -> Option<Entry> {
        self.entries.get(&node).copied()
    }

    pub fn entries(&self) -> &BTreeMap<Node, Entry> {
        &self.entries
    }
}

impl Serialize for SemistandardTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.entries.len()))?;
        for (node, e) in &self.entries {
            map.serialize_entry(
                &format!("{},{},{}", node.row, node.col, node.comp),
                &[e.row as usize, e.comp],
            )?;
        }
        map.end()
    }
}

/// All standard tableaux of the given shape, in a deterministic order
/// (values placed in increasing order, positions scanned by component/row).
pub fn enumerate_standard(shape: &Multipartition) -> Vec<StandardTableau> {
    let n = shape.size() as u32;
    let row_lens: Vec<Vec<u32>> = shape
        .components()
        .iter()
        .map(|c| c.parts().to_vec())
        .collect();
    let mut filled: Vec<Vec<u32>> = row_lens.iter().map(|rows| vec![0; rows.len()]).collect();
    let mut values: BTreeMap<Node, u32> = BTreeMap::new();
    let mut out = Vec::new();
    fn rec(
        v: u32,
        n: u32,
        row_lens: &[Vec<u32>],
        filled: &mut [Vec<u32>],
        values: &mut BTreeMap<Node, u32>,
        shape: &Multipartition,
        out: &mut Vec<StandardTableau>,
    ) {
        if v > n {
            out.push(StandardTableau {
                shape: shape.clone(),
                values: values.clone(),
            });
            return;
        }
        for k0 in 0..row_lens.len() {
            for i0 in 0..row_lens[k0].len() {
                let can = filled[k0][i0] < row_lens[k0][i0]
                    && (i0 == 0 || filled[k0][i0 - 1] > filled[k0][i0]);
                if !can {
                    continue;
                }
                filled[k0][i0] += 1;
                let node = Node::new(i0 + 1, filled[k0][i0] as usize, k0 + 1);
                values.insert(node, v);
                rec(v + 1, n, row_lens, filled, values, shape, out);
                values.remove(&node);
                filled[k0][i0] -= 1;
            }
        }
    }
    rec(1, n, &row_lens, &mut filled, &mut values, shape, &mut out);
    out
}

fn factorial(n: u64) -> u128 {
    assert!(n <= 33, "factorial overflows u128 beyond 33!");
    (1..=n as u128).product()
}

fn multinomial(n: u64, sizes: &[u64]) -> u128 {
    debug_assert_eq!(n, sizes.iter().sum::<u64>());
    let mut out = factorial(n);
    for &s in sizes {
        out /= factorial(s);
    }
    out
}

fn standard_count_single(p: &Partition) -> u128 {
    let n = p.size();
    let mut hooks = 1u128;
    for (i0, &row) in p.parts().iter().enumerate() {
        for j in 1..=row {
            let arm = (row - j) as u128;
            let leg = (p.col_len(j) - (i0 + 1)) as u128;
            hooks = hooks.checked_mul(arm + leg + 1).expect("hook product overflow");
        }
    }
    factorial(n) / hooks
}

/// `|Std(la)|` via the multinomial/hook-length product formula.
pub fn count_standard(shape: &Multipartition) -> u128 {
    let sizes = shape.component_sizes();
    let mut out = multinomial(shape.size(), &sizes);
    for c in shape.components() {
        out = out
            .checked_mul(standard_count_single(c))
            .expect("standard count overflow");
    }
    out
}

/// All semistandard tableaux of shape `la` and type `mu`, in a deterministic
/// order (nodes scanned by component/row/column, entries tried ascending).
pub fn enumerate_semistandard(
    shape: &Multipartition,
    ty: &RComposition,
) -> Result<Vec<SemistandardTableau>, ShapeError> {
    if shape.r() != ty.r() {
        return Err(ShapeError::ComponentMismatch {
            left: shape.r(),
            right: ty.r(),
        });
    }
    if shape.size() != ty.size() {
        return Err(ShapeError::SizeMismatch {
            left: shape.size(),
            right: ty.size(),
        });
    }
    struct Search<'a> {
        shape: &'a Multipartition,
        ty: &'a RComposition,
        nodes: Vec<Node>,
        remaining: Vec<Vec<u32>>,
        entries: BTreeMap<Node, Entry>,
        out: Vec<SemistandardTableau>,
    }

    impl Search<'_> {
        fn rec(&mut self, pos: usize) {
            if pos == self.nodes.len() {
                self.out.push(SemistandardTableau {
                    shape: self.shape.clone(),
                    ty: self.ty.clone(),
                    entries: self.entries.clone(),
                });
                return;
            }
            let node = self.nodes[pos];
            let left =
                (node.col > 1).then(|| self.entries[&Node::new(node.row, node.col - 1, node.comp)]);
            let above =
                (node.row > 1).then(|| self.entries[&Node::new(node.row - 1, node.col, node.comp)]);
            for c in node.comp..=self.shape.r() {
                for a0 in 0..self.remaining[c - 1].len() {
                    if self.remaining[c - 1][a0] == 0 {
                        continue;
                    }
                    let e = Entry::new(a0 as u32 + 1, c);
                    if left.is_some_and(|l| e < l) || above.is_some_and(|u| e <= u) {
                        continue;
                    }
                    self.remaining[c - 1][a0] -= 1;
                    self.entries.insert(node, e);
                    self.rec(pos + 1);
                    self.entries.remove(&node);
                    self.remaining[c - 1][a0] += 1;
                }
            }
        }
    }

    let mut search = Search {
        shape,
        ty,
        nodes: shape.nodes(),
        remaining: ty.components().iter().map(|c| c.parts().to_vec()).collect(),
        entries: BTreeMap::new(),
        out: Vec::new(),
    };
    search.rec(0);
    Ok(search.out)
}

/// `|T_0(la, mu)|`.
pub fn count_semistandard(shape: &Multipartition, ty: &RComposition) -> Result<u64, ShapeError> {
    Ok(enumerate_semistandard(shape, ty)?.len() as u64)
}

/// `|T_0(la)|` over all types in `La_{n,r}(m)`.
pub fn count_semistandard_all_types(shape: &Multipartition, m: &[usize]) -> u64 {
    let n = shape.size() as usize;
    enumerate_types(n, shape.r(), m)
        .iter()
        .map(|ty| count_semistandard(shape, ty).expect("shape/type sizes agree by construction"))
        .sum()
}

/// `dim S` over precomputed shape and type lists (shapes failing the length
/// bounds are skipped).
pub fn dim_schur_over(
    shapes: &[Multipartition],
    types: &[RComposition],
    m: &[usize],
) -> u128 {
    shapes
        .iter()
        .filter(|la| la.components().iter().zip(m).all(|(c, &mk)| c.len() <= mk))
        .map(|la| {
            let c: u128 = types
                .iter()
                .map(|ty| {
                    count_semistandard(la, ty).expect("shape/type sizes agree by construction")
                        as u128
                })
                .sum();
            c.checked_mul(c).expect("dimension overflow")
        })
        .sum()
}

/// The multipartition `omega = (-, ..., -, (1^n))`.
pub fn omega(n: usize, r: usize) -> Multipartition {
    let mut comps = vec![Partition::empty(); r - 1];
    comps.push(Partition::new(vec![1; n]));
    Multipartition::new(comps)
}

/// `dim H_{n,r} = sum over la of |Std(la)|^2`.
pub fn dim_hecke(n: usize, r: usize) -> u128 {
    enumerate_multipartitions(n, r)
        .iter()
        .map(|la| {
            let c = count_standard(la);
            c.checked_mul(c).expect("dimension overflow")
        })
        .sum()
}

/// `dim S_{n,r}(La(m)) = sum over la of |T_0(la)|^2`, the shape set filtered
/// by the length bounds `m` (a no-op when every `m_k >= n`).
pub fn dim_schur(n: usize, r: usize, m: &[usize]) -> u128 {
    assert_eq!(m.len(), r);
    dim_schur_over(
        &enumerate_multipartitions(n, r),
        &enumerate_types(n, r, m),
        m,
    )
}

//! The weight grading of the Schur algebra by a level composition
//! `p = (r_1, ..., r_g)` of the component count: the map `alpha_p` sends a
//! multipartition or type to the vector of group sizes, and for each weight
//! `eps` the graded piece is spanned by semistandard tableaux whose type has
//! weight `eps`. At the level of dimensions the top layer of each graded
//! piece factors as a product of smaller Schur algebra dimensions, which
//! [`graded_dim_check`] verifies.

use serde::Serialize;

use crate::combinatorics::{
    enumerate_multipartitions, enumerate_types, Multipartition, RComposition, ShapeError,
};
use crate::tableaux::{count_semistandard, dim_schur, enumerate_semistandard, SemistandardTableau};

/// A composition `(r_1, ..., r_g)` of the component count into groups.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct LevelComposition {
    parts: Vec<usize>,
}

impl LevelComposition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ShapeError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(ShapeError::BoundMismatch);
        }
        Ok(LevelComposition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn groups(&self) -> usize {
        self.parts.len()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Offsets `p_k = r_1 + ... + r_{k-1}`, one per group.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.parts.len());
        let mut acc = 0;
        for &r in &self.parts {
            out.push(acc);
            acc += r;
        }
        out
    }

    /// Group sizes `(|mu^[1]|, ..., |mu^[g]|)` of a per-component size
    /// vector.
    pub fn alpha_of_sizes(&self, sizes: &[u64]) -> Result<Vec<u64>, ShapeError> {
        if sizes.len() != self.total() {
            return Err(ShapeError::ComponentMismatch {
                left: sizes.len(),
                right: self.total(),
            });
        }
        let mut out = Vec::with_capacity(self.parts.len());
        let mut idx = 0;
        for &r in &self.parts {
            out.push(sizes[idx..idx + r].iter().sum());
            idx += r;
        }
        Ok(out)
    }

    /// Slice of a per-component vector belonging to group `k` (1-based).
    pub fn group_slice<'a, T>(&self, v: &'a [T], k: usize) -> &'a [T] {
        let off = self.offsets()[k - 1];
        &v[off..off + self.parts[k - 1]]
    }
}

/// `alpha_p` of a multipartition.
pub fn alpha_multipartition(la: &Multipartition, p: &LevelComposition) -> Result<Vec<u64>, ShapeError> {
    p.alpha_of_sizes(&la.component_sizes())
}

/// `alpha_p` of a type.
pub fn alpha_type(mu: &RComposition, p: &LevelComposition) -> Result<Vec<u64>, ShapeError> {
    p.alpha_of_sizes(&mu.component_sizes())
}

/// The semistandard tableaux of shape `la` split by weight: `t_epsilon` keeps
/// those whose type has weight `eps`, `t_plus` those whose type has the
/// weight of `la` itself. When `alpha_p(la) = eps` the two coincide, and
/// otherwise they are disjoint.
#[derive(Clone, Debug)]
pub struct SplitTableaux {
    pub t_plus: Vec<SemistandardTableau>,
    pub t_epsilon: Vec<SemistandardTableau>,
}

pub fn split_tableaux(
    la: &Multipartition,
    p: &LevelComposition,
    eps: &[u64],
    m: &[usize],
) -> Result<SplitTableaux, ShapeError> {
    let shape_weight = alpha_multipartition(la, p)?;
    let n = la.size() as usize;
    let mut t_plus = Vec::new();
    let mut t_epsilon = Vec::new();
    for ty in enumerate_types(n, la.r(), m) {
        let w = alpha_type(&ty, p)?;
        let matches_eps = w == eps;
        let matches_shape = w == shape_weight;
        if !matches_eps && !matches_shape {
            continue;
        }
        let tabs = enumerate_semistandard(la, &ty)?;
        if matches_eps {
            t_epsilon.extend(tabs.iter().cloned());
        }
        if matches_shape {
            t_plus.extend(tabs);
        }
    }
    // the dichotomy: either the weights agree and the two sets coincide, or
    // the eps-piece avoids the shape's own weight entirely
    if shape_weight == eps {
        debug_assert_eq!(t_plus.len(), t_epsilon.len());
    } else {
        debug_assert!(t_epsilon
            .iter()
            .all(|t| alpha_type(t.ty(), p).unwrap() != shape_weight));
    }
    Ok(SplitTableaux { t_plus, t_epsilon })
}

/// Both sides of the graded dimension identity at one weight.
#[derive(Clone, Debug, Serialize)]
pub struct GradedDimReport {
    pub epsilon: Vec<u64>,
    /// `sum over shapes of weight eps of |T+|^2`.
    pub lhs: u128,
    /// `prod over groups of dim S_{n_k, r_k}(m^[k])`.
    pub rhs: u128,
    pub factors: Vec<u128>,
    pub pass: bool,
}

/// Verifies that the weight-`eps` layer has the dimension of the product of
/// the smaller Schur algebras it degenerates to.
pub fn graded_dim_check(
    n: usize,
    r: usize,
    m: &[usize],
    p: &LevelComposition,
    eps: &[u64],
) -> Result<GradedDimReport, ShapeError> {
    assert_eq!(p.total(), r, "level composition must sum to r");
    assert_eq!(m.len(), r);
    if eps.len() != p.groups() || eps.iter().sum::<u64>() != n as u64 {
        return Err(ShapeError::SizeMismatch {
            left: eps.iter().sum(),
            right: n as u64,
        });
    }
    let mut lhs: u128 = 0;
    for la in enumerate_multipartitions(n, r) {
        if la.components().iter().zip(m).any(|(c, &mk)| c.len() > mk) {
            continue;
        }
        if alpha_multipartition(&la, p)? != eps {
            continue;
        }
        let mut count: u128 = 0;
        for ty in enumerate_types(n, r, m) {
            if alpha_type(&ty, p)? == eps {
                count += count_semistandard(&la, &ty)? as u128;
            }
        }
        lhs += count * count;
    }
    let mut rhs: u128 = 1;
    let mut factors = Vec::with_capacity(p.groups());
    for k in 1..=p.groups() {
        let mk = p.group_slice(m, k);
        let factor = dim_schur(eps[k - 1] as usize, p.parts()[k - 1], mk);
        factors.push(factor);
        rhs = rhs.checked_mul(factor).expect("dimension overflow");
    }
    Ok(GradedDimReport {
        epsilon: eps.to_vec(),
        lhs,
        rhs,
        factors,
        pass: lhs == rhs,
    })
}

/// All weights `(n_1, ..., n_g)` with `n_1 + ... + n_g = n`.
pub fn weights(n: usize, g: usize) -> Vec<Vec<u64>> {
    fn rec(budget: u64, groups: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if groups == 1 {
            prefix.push(budget);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for v in (0..=budget).rev() {
            prefix.push(v);
            rec(budget - v, groups - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u64, g, &mut Vec::new(), &mut out);
    out
}

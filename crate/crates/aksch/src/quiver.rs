//! The bounded quiver algebra `A_m` on a line with `m` vertices: arrows
//! `alpha_i: i -> i+1`, `beta_i: i+1 -> i`, relations
//! `alpha_{m-1} beta_{m-1} = 0`, `alpha_{i+1} alpha_i = 0`,
//! `beta_i beta_{i+1} = 0` and `alpha_i beta_i = beta_{i+1} alpha_{i+1}`.
//! Composition is right-to-left: `alpha_{i+1} alpha_i` is the path
//! `i -> i+1 -> i+2`.
//!
//! Normal forms: the idempotents `e_i`, the arrows, and one loop `l_i` at
//! each vertex `i < m` (`l_1 = beta_1 alpha_1`, `l_{i+1} = alpha_i beta_i`);
//! the loop at vertex `m` is zero. This gives `dim A_m = 4m - 3`.

use std::collections::BTreeSet;
use std::fmt;


/// A normal-form basis element of `A_m`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum BasisElem {
    /// Length-zero path at a vertex.
    E(usize),
    /// Arrow `i -> i+1`.
    Alpha(usize),
    /// Arrow `i+1 -> i`.
    Beta(usize),
    /// The loop at vertex `i` (`1 <= i <= m-1`).
    Loop(usize),
}

impl BasisElem {
    pub fn source(self) -> usize {
        match self {
            BasisElem::E(i) | BasisElem::Loop(i) => i,
            BasisElem::Alpha(i) => i,
            BasisElem::Beta(i) => i + 1,
        }
    }

    pub fn target(self) -> usize {
        match self {
            BasisElem::E(i) | BasisElem::Loop(i) => i,
            BasisElem::Alpha(i) => i + 1,
            BasisElem::Beta(i) => i,
        }
    }

    pub fn is_idempotent(self) -> bool {
        matches!(self, BasisElem::E(_))
    }
}

impl fmt::Display for BasisElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElem::E(i) => write!(f, "e{i}"),
            BasisElem::Alpha(i) => write!(f, "alpha{i}"),
            BasisElem::Beta(i) => write!(f, "beta{i}"),
            BasisElem::Loop(i) => write!(f, "loop{i}"),
        }
    }
}

/// A generator of the path algebra, for writing arbitrary words.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Generator {
    E(usize),
    Alpha(usize),
    Beta(usize),
}

/// Product of two basis elements: a basis element, its negation, or zero.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Product {
    Zero,
    Plus(usize),
    Minus(usize),
}

/// `A_m` with its normal-form basis and full multiplication table.
#[derive(Clone, Debug)]
pub struct AmAlgebra {
    m: usize,
    basis: Vec<BasisElem>,
    table: Vec<Vec<Product>>,
}

impl AmAlgebra {
    /// Builds the algebra and verifies the defining relations; for `m <= 8`
    /// the full associativity of the rewriting table is checked exhaustively.
    pub fn new(m: usize) -> Self {
        assert!(m >= 1, "m >= 1 required");
        let mut basis = Vec::with_capacity(4 * m - 3);
        for i in 1..=m {
            basis.push(BasisElem::E(i));
        }
        for i in 1..m {
            basis.push(BasisElem::Alpha(i));
        }
        for i in 1..m {
            basis.push(BasisElem::Beta(i));
        }
        for i in 1..m {
            basis.push(BasisElem::Loop(i));
        }
        let dim = basis.len();
        let mut table = vec![vec![Product::Zero; dim]; dim];
        for (a_idx, &a) in basis.iter().enumerate() {
            for (b_idx, &b) in basis.iter().enumerate() {
                table[a_idx][b_idx] = multiply_raw(m, &basis, a, b);
            }
        }
        let alg = AmAlgebra { m, basis, table };
        alg.check_relations();
        if m <= 8 {
            alg.check_associativity();
        }
        alg
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }

    pub fn index_of(&self, b: BasisElem) -> Option<usize> {
        self.basis.iter().position(|&x| x == b)
    }

    /// Product of two basis elements by index.
    pub fn multiply(&self, a: usize, b: usize) -> Product {
        self.table[a][b]
    }

    /// Product of two basis elements by value.
    pub fn multiply_elems(&self, a: BasisElem, b: BasisElem) -> Product {
        self.table[self.index_of(a).expect("element of this algebra")]
            [self.index_of(b).expect("element of this algebra")]
    }

    /// Normal form of a word in generators (right-to-left composition: the
    /// last generator acts first).
    pub fn normalize(&self, word: &[Generator]) -> Product {
        let mut acc: Option<Product> = None;
        for g in word.iter().rev() {
            let g_idx = self
                .index_of(match *g {
                    Generator::E(i) => BasisElem::E(i),
                    Generator::Alpha(i) => BasisElem::Alpha(i),
                    Generator::Beta(i) => BasisElem::Beta(i),
                })
                .expect("generator of this algebra");
            acc = Some(match acc {
                None => Product::Plus(g_idx),
                Some(Product::Zero) => Product::Zero,
                Some(Product::Plus(x)) => self.table[g_idx][x],
                Some(Product::Minus(x)) => match self.table[g_idx][x] {
                    Product::Zero => Product::Zero,
                    Product::Plus(y) => Product::Minus(y),
                    Product::Minus(y) => Product::Plus(y),
                },
            });
        }
        acc.unwrap_or(Product::Zero)
    }

    /// Cartan matrix: `C[i][j] = dim e_i A e_j`, the number of basis paths
    /// from vertex `j` to vertex `i` (all indices 1-based in vertex terms).
    pub fn cartan(&self) -> Vec<Vec<u64>> {
        let mut c = vec![vec![0u64; self.m]; self.m];
        for &b in &self.basis {
            c[b.target() - 1][b.source() - 1] += 1;
        }
        c
    }

    /// `dim Hom(P_i, P_j) = dim e_j A e_i` for the projectives `P_i = e_i A`.
    pub fn hom_dim(&self, i: usize, j: usize) -> u64 {
        self.basis
            .iter()
            .filter(|b| b.source() == i && b.target() == j)
            .count() as u64
    }

    /// Radical layers of the projective `P_v = e_v A` as multisets of
    /// vertices (each basis path contributes the simple at its source).
    pub fn projective_radical_series(&self, v: usize) -> Vec<Vec<usize>> {
        assert!(v >= 1 && v <= self.m, "vertex out of range");
        let radical_gens: Vec<usize> = self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_idempotent())
            .map(|(i, _)| i)
            .collect();
        let mut current: BTreeSet<usize> = [self.index_of(BasisElem::E(v)).unwrap()].into();
        let mut layers = Vec::new();
        while !current.is_empty() {
            let next: BTreeSet<usize> = current
                .iter()
                .flat_map(|&x| {
                    radical_gens.iter().filter_map(move |&g| match self.table[x][g] {
                        Product::Zero => None,
                        Product::Plus(y) | Product::Minus(y) => Some(y),
                    })
                })
                .collect();
            let mut layer: Vec<usize> = current
                .difference(&next)
                .map(|&x| self.basis[x].source())
                .collect();
            layer.sort_unstable();
            layers.push(layer);
            current = next;
        }
        layers
    }

    fn check_relations(&self) {
        let m = self.m;
        for i in 1..=m {
            for j in 1..=m {
                let prod = self.multiply_elems(BasisElem::E(i), BasisElem::E(j));
                if i == j {
                    assert_eq!(prod, Product::Plus(self.index_of(BasisElem::E(i)).unwrap()));
                } else {
                    assert_eq!(prod, Product::Zero);
                }
            }
        }
        if m >= 2 {
            assert_eq!(
                self.multiply_elems(BasisElem::Alpha(m - 1), BasisElem::Beta(m - 1)),
                Product::Zero
            );
        }
        for i in 1..=m.saturating_sub(2) {
            assert_eq!(
                self.multiply_elems(BasisElem::Alpha(i + 1), BasisElem::Alpha(i)),
                Product::Zero
            );
            assert_eq!(
                self.multiply_elems(BasisElem::Beta(i), BasisElem::Beta(i + 1)),
                Product::Zero
            );
            let left = self.multiply_elems(BasisElem::Alpha(i), BasisElem::Beta(i));
            let right = self.multiply_elems(BasisElem::Beta(i + 1), BasisElem::Alpha(i + 1));
            assert_eq!(left, right);
            assert_eq!(left, Product::Plus(self.index_of(BasisElem::Loop(i + 1)).unwrap()));
        }
    }

    fn check_associativity(&self) {
        let dim = self.dim();
        let compose = |p: Product, c: usize| match p {
            Product::Zero => Product::Zero,
            Product::Plus(x) => self.table[x][c],
            Product::Minus(x) => match self.table[x][c] {
                Product::Zero => Product::Zero,
                Product::Plus(y) => Product::Minus(y),
                Product::Minus(y) => Product::Plus(y),
            },
        };
        let compose_left = |a: usize, p: Product| match p {
            Product::Zero => Product::Zero,
            Product::Plus(x) => self.table[a][x],
            Product::Minus(x) => match self.table[a][x] {
                Product::Zero => Product::Zero,
                Product::Plus(y) => Product::Minus(y),
                Product::Minus(y) => Product::Plus(y),
            },
        };
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    let left = compose(self.table[a][b], c);
                    let right = compose_left(a, self.table[b][c]);
                    assert_eq!(left, right, "associativity fails at ({a},{b},{c})");
                }
            }
        }
    }
}

/// Case analysis implementing the rewriting rules on products of normal
/// forms.
fn multiply_raw(m: usize, basis: &[BasisElem], a: BasisElem, b: BasisElem) -> Product {
    use BasisElem::*;
    // a . b composes b first; source(a) must match target(b)
    if a.source() != b.target() {
        return Product::Zero;
    }
    let idx = |x: BasisElem| Product::Plus(basis.iter().position(|&y| y == x).unwrap());
    match (a, b) {
        (E(_), _) => idx(b),
        (_, E(_)) => idx(a),
        // loops annihilate everything except the idempotents
        (Loop(_), _) | (_, Loop(_)) => Product::Zero,
        (Alpha(_), Alpha(_)) => Product::Zero,
        (Beta(_), Beta(_)) => Product::Zero,
        (Beta(i), Alpha(j)) => {
            debug_assert_eq!(i, j);
            idx(Loop(i)) // beta_i alpha_i = loop at vertex i
        }
        (Alpha(i), Beta(j)) => {
            debug_assert_eq!(i, j);
            if i == m - 1 {
                Product::Zero // loop at vertex m vanishes
            } else {
                idx(Loop(i + 1)) // alpha_i beta_i = loop at vertex i+1
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_is_4m_minus_3() {
        assert_eq!(AmAlgebra::new(1).dim(), 1);
        assert_eq!(AmAlgebra::new(2).dim(), 5);
        assert_eq!(AmAlgebra::new(5).dim(), 17);
        for m in 1..=8 {
            assert_eq!(AmAlgebra::new(m).dim(), 4 * m - 3);
        }
    }

    #[test]
    fn basis_of_m_two() {
        let a = AmAlgebra::new(2);
        assert_eq!(
            a.basis(),
            &[
                BasisElem::E(1),
                BasisElem::E(2),
                BasisElem::Alpha(1),
                BasisElem::Beta(1),
                BasisElem::Loop(1),
            ]
        );
    }

    #[test]
    fn multiplication_examples() {
        let a = AmAlgebra::new(3);
        let e1 = a.index_of(BasisElem::E(1)).unwrap();
        assert_eq!(a.multiply(e1, e1), Product::Plus(e1));
        let e2 = a.index_of(BasisElem::E(2)).unwrap();
        assert_eq!(a.multiply(e1, e2), Product::Zero);
        // alpha_2 alpha_1 = 0
        assert_eq!(
            a.multiply_elems(BasisElem::Alpha(2), BasisElem::Alpha(1)),
            Product::Zero
        );
        // beta_2 alpha_2 = loop at 2 = alpha_1 beta_1
        let l2 = a.index_of(BasisElem::Loop(2)).unwrap();
        assert_eq!(
            a.multiply_elems(BasisElem::Beta(2), BasisElem::Alpha(2)),
            Product::Plus(l2)
        );
        assert_eq!(
            a.multiply_elems(BasisElem::Alpha(1), BasisElem::Beta(1)),
            Product::Plus(l2)
        );
        // loop at the last vertex vanishes
        assert_eq!(
            a.multiply_elems(BasisElem::Alpha(2), BasisElem::Beta(2)),
            Product::Zero
        );
    }

    #[test]
    fn words_normalize_through_the_table() {
        let a = AmAlgebra::new(3);
        // beta_1 alpha_1 (right-to-left): loop at vertex 1
        let l1 = a.index_of(BasisElem::Loop(1)).unwrap();
        assert_eq!(
            a.normalize(&[Generator::Beta(1), Generator::Alpha(1)]),
            Product::Plus(l1)
        );
        // loop squared is zero
        assert_eq!(
            a.normalize(&[
                Generator::Beta(1),
                Generator::Alpha(1),
                Generator::Beta(1),
                Generator::Alpha(1)
            ]),
            Product::Zero
        );
        assert_eq!(a.normalize(&[Generator::E(2), Generator::Alpha(1)]), {
            let al = a.index_of(BasisElem::Alpha(1)).unwrap();
            Product::Plus(al)
        });
    }

    #[test]
    fn cartan_matrix_examples() {
        assert_eq!(AmAlgebra::new(1).cartan(), vec![vec![1]]);
        assert_eq!(
            AmAlgebra::new(3).cartan(),
            vec![vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 1]]
        );
    }

    #[test]
    fn cartan_equals_bidiagonal_product() {
        for m in 1..=8 {
            let a = AmAlgebra::new(m);
            let mut d = vec![vec![0i64; m]; m];
            for i in 0..m {
                d[i][i] = 1;
                if i > 0 {
                    d[i][i - 1] = 1;
                }
            }
            let mut c = vec![vec![0u64; m]; m];
            for i in 0..m {
                for j in 0..m {
                    c[i][j] = (0..m).map(|k| (d[k][i] * d[k][j]) as u64).sum();
                }
            }
            assert_eq!(a.cartan(), c, "m={m}");
        }
    }

    #[test]
    fn cartan_total_is_the_dimension() {
        for m in 1..=8 {
            let a = AmAlgebra::new(m);
            let total: u64 = a.cartan().iter().flatten().sum();
            assert_eq!(total, (4 * m - 3) as u64);
        }
    }

    #[test]
    fn hom_dimension_table() {
        for m in 2..=6 {
            let a = AmAlgebra::new(m);
            for i in 1..=m {
                for j in 1..=m {
                    let expect = if i == j {
                        if i == m {
                            1
                        } else {
                            2
                        }
                    } else if i.abs_diff(j) == 1 {
                        1
                    } else {
                        0
                    };
                    assert_eq!(a.hom_dim(i, j), expect, "m={m} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn radical_series_of_m_two() {
        let a = AmAlgebra::new(2);
        assert_eq!(a.projective_radical_series(1), vec![vec![1], vec![2], vec![1]]);
        assert_eq!(a.projective_radical_series(2), vec![vec![2], vec![1]]);
    }

    #[test]
    fn radical_series_of_middle_vertices() {
        let a = AmAlgebra::new(3);
        assert_eq!(
            a.projective_radical_series(2),
            vec![vec![2], vec![1, 3], vec![2]]
        );
        for m in 2..=6 {
            let a = AmAlgebra::new(m);
            for v in 1..=m {
                let layers = a.projective_radical_series(v);
                let last = layers.last().unwrap();
                assert_eq!(last.len(), 1, "simple socle at m={m} v={v}");
                if v == m {
                    assert_eq!(layers, vec![vec![m], vec![m - 1]]);
                } else if v == 1 {
                    assert_eq!(layers, vec![vec![1], vec![2], vec![1]]);
                } else {
                    assert_eq!(layers, vec![vec![v], vec![v - 1, v + 1], vec![v]]);
                }
            }
        }
    }

    #[test]
    fn one_vertex_algebra() {
        let a = AmAlgebra::new(1);
        assert_eq!(a.projective_radical_series(1), vec![vec![1]]);
        assert_eq!(a.cartan(), vec![vec![1]]);
    }
}

//! Representation-type computations for Ariki-Koike algebras and cyclotomic
//! q-Schur algebras.
//!
//! Everything is driven by the parameters `(e, f_1, ..., f_r)` where `q` is a
//! primitive `e`-th root of unity and `Q_i = q^{f_i}`:
//!
//! * [`combinatorics`] — partitions, multipartitions, dominance order and
//!   rim-hook combinatorics on their diagrams;
//! * [`tableaux`] — standard and semistandard tableau enumeration and the
//!   dimension identities they induce;
//! * [`parameters`] — the gap statistics `f⁺¹`, `f⁺²`, `g`, the semisimplicity
//!   criterion and the finite/infinite/wild classifier;
//! * [`blocks`] — residue contents, the block decomposition of the set of
//!   multipartitions and the two-component Morita reduction of finite blocks;
//! * [`jantzen`] — a symbolic `t`-series valuation engine computing Jantzen
//!   coefficients, sum-formula vectors and finite-regime decomposition and
//!   Cartan matrices;
//! * [`quiver`] — the bounded quiver algebra `A_m` that models finite-type
//!   blocks up to Morita equivalence;
//! * [`grading`] — the weight grading of the Schur algebra by level
//!   compositions and its dimension-level consistency checks;
//! * [`cli`] — the command-line front end with JSON/table output.
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod blocks;
pub mod cli;
pub mod combinatorics;
pub mod grading;
pub mod jantzen;
pub mod parameters;
pub mod quiver;
pub mod tableaux;


//! The Jantzen sum formula engine.
//!
//! Working over the localization of `F[t]` at `(t)`, the parameters are
//! deformed to `qhat = q (1 + t^{c0})` (optionally) and
//! `Qhat_k = q^{f_k} + t^{c_k}` (or left undeformed), which makes the generic
//! algebra semisimple. The coefficient `J_{la,mu}` is the signed sum of
//! `t`-adic valuations `nu(res(f_x) - res(f_y))` over pairs of rim hooks with
//! equal complements, and it controls the sum of the Jantzen filtration
//! layers of the Weyl module `W^la` in the Grothendieck group.
//!
//! Series are truncated at a configurable order; coefficients are exact
//! integer combinations of `q`-powers with exponents reduced mod `e` and
//! multiplicities reduced mod the characteristic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::ser::Serializer;
use serde::Serialize;

use crate::blocks::Block;
use crate::combinatorics::{
    remove_rim_hook, rim_hook, DomOrdering, Multipartition, Node, ShapeError,
};
use crate::parameters::{classify, Extended, ParameterSet};

/// Deformation of one parameter `Qhat_k`: either undeformed (`q^{f_k}`) or
/// carrying a `t^c` term.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Deform {
    Pure,
    T(u32),
}

impl Serialize for Deform {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Deform::Pure => serializer.serialize_str("pure"),
            Deform::T(c) => serializer.serialize_u32(*c),
        }
    }
}

/// Choice of modular system: per-component deformation exponents, an optional
/// deformation of `q` itself, and the series truncation order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ModularConfig {
    #[serde(rename = "deformExponents")]
    pub deform: Vec<Deform>,
    #[serde(rename = "qDeformExponent")]
    pub q_deform: Option<u32>,
    #[serde(rename = "truncationOrder")]
    pub truncation: u32,
}

impl ModularConfig {
    /// The default system: `c_k = 2k` for every component, no `q`
    /// deformation, truncation `4 * max(c_k, 1) * (n + 1)`.
    pub fn default_for(n: usize, r: usize) -> Self {
        let deform: Vec<Deform> = (1..=r).map(|k| Deform::T(2 * k as u32)).collect();
        let max_c = (2 * r).max(1) as u32;
        ModularConfig {
            deform,
            q_deform: None,
            truncation: 4 * max_c * (n as u32 + 1),
        }
    }

    /// Deforms only the pair `(i, j)` (1-based) with exponents 2 and 4,
    /// leaving every other component undeformed, so that coefficients agree
    /// with those of the projected two-component algebra.
    pub fn deforming_pair(i: usize, j: usize, n: usize, r: usize) -> Self {
        let deform: Vec<Deform> = (1..=r)
            .map(|k| {
                if k == i {
                    Deform::T(2)
                } else if k == j {
                    Deform::T(4)
                } else {
                    Deform::Pure
                }
            })
            .collect();
        ModularConfig {
            deform,
            q_deform: None,
            truncation: 16 * (n as u32 + 1),
        }
    }

    fn max_deform(&self) -> u32 {
        self.deform
            .iter()
            .filter_map(|d| match d {
                Deform::T(c) => Some(*c),
                Deform::Pure => None,
            })
            .max()
            .unwrap_or(0)
    }

    /// Checks the structural invariants for `r` components.
    pub fn validate(&self, r: usize) -> Result<(), JantzenError> {
        if self.deform.len() != r {
            return Err(JantzenError::InvalidConfig(format!(
                "{} deformation exponents for r = {r}",
                self.deform.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for d in &self.deform {
            if let Deform::T(c) = d {
                if *c == 0 {
                    return Err(JantzenError::InvalidConfig(
                        "deformation exponents must be positive".into(),
                    ));
                }
                if !seen.insert(*c) {
                    return Err(JantzenError::InvalidConfig(format!(
                        "deformation exponent {c} repeated"
                    )));
                }
            }
        }
        if let Some(c0) = self.q_deform {
            if c0 <= self.max_deform() {
                return Err(JantzenError::InvalidConfig(format!(
                    "q-deformation exponent {c0} must exceed every component exponent"
                )));
            }
        }
        let needed = self.max_deform().max(self.q_deform.unwrap_or(0));
        if self.truncation <= needed {
            return Err(JantzenError::InvalidConfig(format!(
                "truncation order {} too small for exponents up to {needed}",
                self.truncation
            )));
        }
        Ok(())
    }
}

/// Errors of the valuation engine.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum JantzenError {
    QOneUnsupported,
    /// `qhat = q` needs the generic algebra semisimple, i.e. `n < e`.
    RequiresQDeformation { n: u64, e: u64 },
    /// A contributing pair whose residue series coincide up to truncation:
    /// the chosen modular system does not separate it.
    Degenerate { x: Node, y: Node },
    InvalidConfig(String),
    Shape(ShapeError),
    CoefficientOverflow,
    TruncationOverflow { requested: u32, limit: u32 },
    RegimeViolation(String),
    DominanceNotTotal,
    ValidationFailed(String),
}

impl fmt::Display for JantzenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JantzenError::QOneUnsupported => {
                write!(f, "the sum formula engine requires q != 1")
            }
            JantzenError::RequiresQDeformation { n, e } => {
                write!(f, "modular system requires n < e or q-deformation (n = {n}, e = {e})")
            }
            JantzenError::Degenerate { x, y } => write!(
                f,
                "modular system degenerate; enable q-deformation (c0) or report (pair {x}, {y})"
            ),
            JantzenError::InvalidConfig(msg) => write!(f, "invalid modular config: {msg}"),
            JantzenError::Shape(e) => write!(f, "{e}"),
            JantzenError::CoefficientOverflow => {
                write!(f, "binomial coefficient overflow; reduce the truncation order")
            }
            JantzenError::TruncationOverflow { requested, limit } => {
                write!(f, "order {requested} beyond truncation {limit}")
            }
            JantzenError::RegimeViolation(msg) => write!(f, "regime violation: {msg}"),
            JantzenError::DominanceNotTotal => {
                write!(f, "dominance is not a total order on the block")
            }
            JantzenError::ValidationFailed(msg) => write!(f, "Jantzen validation failed: {msg}"),
        }
    }
}

impl std::error::Error for JantzenError {}

impl From<ShapeError> for JantzenError {
    fn from(e: ShapeError) -> Self {
        JantzenError::Shape(e)
    }
}

/// A formal integer combination of `q`-powers: exponent (reduced mod `e` when
/// finite) to coefficient (reduced mod the characteristic when positive).
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QPoly {
    terms: BTreeMap<i64, i128>,
}

impl QPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<i64, i128> {
        &self.terms
    }

    fn add(&mut self, exp_raw: i64, coeff: i128, e: Extended, char_p: u64) {
        let exp = match e {
            Extended::Finite(e) => exp_raw.rem_euclid(e as i64),
            Extended::Infinity => exp_raw,
        };
        let c = reduce_mod(coeff, char_p);
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry = reduce_mod(*entry + c, char_p);
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }
}

fn reduce_mod(c: i128, char_p: u64) -> i128 {
    if char_p == 0 {
        c
    } else {
        c.rem_euclid(char_p as i128)
    }
}

/// A truncated formal series in `t` with `QPoly` coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TSeries {
    terms: BTreeMap<u32, QPoly>,
    truncation: u32,
}

impl TSeries {
    fn new(truncation: u32) -> Self {
        TSeries {
            terms: BTreeMap::new(),
            truncation,
        }
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    fn add_term(&mut self, t_exp: u32, q_exp: i64, coeff: i128, e: Extended, char_p: u64) {
        debug_assert!(t_exp < self.truncation);
        let poly = self.terms.entry(t_exp).or_default();
        poly.add(q_exp, coeff, e, char_p);
        if poly.is_zero() {
            self.terms.remove(&t_exp);
        }
    }

    /// Coefficient at a given `t`-order; orders at or beyond the truncation
    /// are not represented.
    pub fn coefficient(&self, t_exp: u32) -> Result<QPoly, JantzenError> {
        if t_exp >= self.truncation {
            return Err(JantzenError::TruncationOverflow {
                requested: t_exp,
                limit: self.truncation,
            });
        }
        Ok(self.terms.get(&t_exp).cloned().unwrap_or_default())
    }

    pub fn terms(&self) -> &BTreeMap<u32, QPoly> {
        &self.terms
    }
}

/// `C(d, s)` for any integer `d`, via `C(d,s) = (-1)^s C(s-d-1, s)` when
/// `d < 0`.
fn binomial(d: i64, s: u64) -> Result<i128, JantzenError> {
    if s == 0 {
        return Ok(1);
    }
    let (top, negate) = if d >= 0 {
        if s > d as u64 {
            return Ok(0);
        }
        (d as u64, false)
    } else {
        ((s as i64 - d - 1) as u64, s % 2 == 1)
    };
    let mut c: i128 = 1;
    for i in 1..=s {
        c = c
            .checked_mul((top - s + i) as i128)
            .ok_or(JantzenError::CoefficientOverflow)?;
        c /= i as i128;
    }
    Ok(if negate { -c } else { c })
}

/// The `t`-expansion of `res(x) = qhat^{j-i} Qhat_k` under the chosen
/// modular system.
pub fn residue_series(
    x: Node,
    p: &ParameterSet,
    cfg: &ModularConfig,
) -> Result<TSeries, JantzenError> {
    if p.q_is_one() {
        return Err(JantzenError::QOneUnsupported);
    }
    cfg.validate(p.r())?;
    let d = x.col as i64 - x.row as i64;
    let f_k = p.f()[x.comp - 1] as i64;
    // Qhat_k as (t-exponent, extra q-exponent) pairs
    let quo: Vec<(u32, i64)> = match cfg.deform[x.comp - 1] {
        Deform::Pure => vec![(0, f_k)],
        Deform::T(c) => vec![(0, f_k), (c, 0)],
    };
    let mut series = TSeries::new(cfg.truncation);
    match cfg.q_deform {
        None => {
            for &(tc, qe) in &quo {
                series.add_term(tc, d + qe, 1, p.e(), p.char_p());
            }
        }
        Some(c0) => {
            // (1 + t^{c0})^d expanded term by term
            let mut s: u64 = 0;
            loop {
                let ts = (s as u128) * (c0 as u128);
                if ts >= cfg.truncation as u128 {
                    break;
                }
                let coeff = binomial(d, s)?;
                if coeff != 0 {
                    for &(tc, qe) in &quo {
                        let tt = ts + tc as u128;
                        if tt < cfg.truncation as u128 {
                            series.add_term(tt as u32, d + qe, coeff, p.e(), p.char_p());
                        }
                    }
                }
                if d >= 0 && s >= d as u64 {
                    break;
                }
                s += 1;
            }
        }
    }
    Ok(series)
}

/// The `t`-adic valuation of a difference of series.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Valuation {
    Finite(u32),
    /// All coefficients of the difference vanish up to the truncation order.
    Degenerate,
}

/// Least `t`-order at which `a - b` has a nonvanishing coefficient.
pub fn valuation(a: &TSeries, b: &TSeries) -> Valuation {
    let orders: BTreeSet<u32> = a.terms.keys().chain(b.terms.keys()).copied().collect();
    for t in orders {
        let ca = a.terms.get(&t);
        let cb = b.terms.get(&t);
        let equal = match (ca, cb) {
            (None, None) => true,
            (Some(x), Some(y)) => x == y,
            (Some(x), None) => x.is_zero(),
            (None, Some(y)) => y.is_zero(),
        };
        if !equal {
            return Valuation::Finite(t);
        }
    }
    Valuation::Degenerate
}

/// Every rim hook of the diagram together with its complement, leg length and
/// foot node.
fn hook_data(la: &Multipartition) -> Vec<(Multipartition, usize, Node)> {
    la.nodes()
        .into_iter()
        .map(|x| {
            let h = rim_hook(la, x).expect("node comes from the diagram");
            let compl = remove_rim_hook(la, &h).expect("hook comes from the diagram");
            (compl, h.leg_length(), h.foot())
        })
        .collect()
}

fn check_generic_semisimple(n: u64, p: &ParameterSet, cfg: &ModularConfig) -> Result<(), JantzenError> {
    if cfg.q_deform.is_none() {
        if let Extended::Finite(e) = p.e() {
            if n >= e {
                return Err(JantzenError::RequiresQDeformation { n, e });
            }
        }
    }
    Ok(())
}

/// The Jantzen coefficient `J_{la,mu}`: zero unless `la` strictly dominates
/// `mu`, otherwise the sum of `(-1)^{ll(r_x)+ll(r_y)} nu(res(f_x) - res(f_y))`
/// over pairs `x, y` of nodes whose rim-hook complements coincide.
pub fn jantzen_coefficient(
    la: &Multipartition,
    mu: &Multipartition,
    p: &ParameterSet,
    cfg: &ModularConfig,
) -> Result<i64, JantzenError> {
    if p.q_is_one() {
        return Err(JantzenError::QOneUnsupported);
    }
    cfg.validate(p.r())?;
    if la.dominance_cmp(mu)? != DomOrdering::Greater {
        return Ok(0);
    }
    check_generic_semisimple(la.size(), p, cfg)?;
    let la_hooks = hook_data(la);
    let mut mu_by_complement: BTreeMap<Multipartition, Vec<(usize, Node)>> = BTreeMap::new();
    for (compl, leg, foot) in hook_data(mu) {
        mu_by_complement.entry(compl).or_default().push((leg, foot));
    }
    let mut total: i64 = 0;
    for (compl, leg_x, foot_x) in &la_hooks {
        let Some(partners) = mu_by_complement.get(compl) else {
            continue;
        };
        let series_x = residue_series(*foot_x, p, cfg)?;
        for &(leg_y, foot_y) in partners {
            debug_assert_eq!(la.size() - compl.size(), mu.size() - compl.size());
            let series_y = residue_series(foot_y, p, cfg)?;
            match valuation(&series_x, &series_y) {
                Valuation::Finite(v) => {
                    let sign = if (leg_x + leg_y) % 2 == 0 { 1 } else { -1 };
                    total += sign * v as i64;
                }
                Valuation::Degenerate => {
                    return Err(JantzenError::Degenerate {
                        x: *foot_x,
                        y: foot_y,
                    })
                }
            }
        }
    }
    Ok(total)
}

/// The sum-formula vector of `la` over a block: member index to `J_{la,mu}`,
/// nonzero entries only.
pub fn sum_formula(
    la: &Multipartition,
    b: &Block,
    p: &ParameterSet,
    cfg: &ModularConfig,
) -> Result<Vec<(usize, i64)>, JantzenError> {
    assert!(b.members.contains(la), "la must belong to the block");
    let mut out = Vec::new();
    for (idx, mu) in b.members.iter().enumerate() {
        let j = jantzen_coefficient(la, mu, p, cfg)?;
        if j != 0 {
            out.push((idx, j));
        }
    }
    Ok(out)
}

/// Jantzen coefficients of a block, members listed in an ascending linear
/// extension of dominance.
#[derive(Clone, Debug, Serialize)]
pub struct JantzenTable {
    pub ordering: Vec<Multipartition>,
    /// Nonzero coefficients as `[row, col, value]` with indices into
    /// `ordering`.
    pub entries: Vec<(usize, usize, i64)>,
}

impl JantzenTable {
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries
            .iter()
            .find(|&&(a, b, _)| a == i && b == j)
            .map_or(0, |&(_, _, v)| v)
    }
}

/// Computes all pairwise coefficients of a block. The ordering is the
/// canonical enumeration order reversed, which refines dominance
/// (smaller members first).
pub fn jantzen_table(
    b: &Block,
    p: &ParameterSet,
    cfg: &ModularConfig,
) -> Result<JantzenTable, JantzenError> {
    let mut ordering = b.members.clone();
    ordering.reverse();
    let mut entries = Vec::new();
    for (i, la) in ordering.iter().enumerate() {
        for (j, mu) in ordering.iter().enumerate() {
            if i == j {
                continue;
            }
            let v = jantzen_coefficient(la, mu, p, cfg)?;
            if v != 0 {
                entries.push((i, j, v));
            }
        }
    }
    Ok(JantzenTable { ordering, entries })
}

/// Decomposition data of a finite-regime block: the total dominance ordering,
/// the bidiagonal decomposition matrix `D`, the Cartan matrix `C = D^t D`,
/// and the raw Jantzen table used for validation.
#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    pub ordering: Vec<Multipartition>,
    pub d: Vec<Vec<i64>>,
    pub c: Vec<Vec<i64>>,
    pub table: JantzenTable,
}

fn transpose_times(d: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let m = d.len();
    let mut c = vec![vec![0i64; m]; m];
    for i in 0..m {
        for j in 0..m {
            c[i][j] = (0..m).map(|k| d[k][i] * d[k][j]).sum();
        }
    }
    c
}

/// The decomposition and Cartan matrices of a finite-regime block: members
/// sorted into the (total) dominance order `la_1 < ... < la_m`, `D` the
/// `m x m` bidiagonal matrix, `C = D^t D`. Validated against the Jantzen
/// coefficients: `J[la_i][la_{i-1}] > 0` and `J[la_i][la_j] = 0` for `j > i`.
pub fn decomposition_matrix(
    b: &Block,
    p: &ParameterSet,
    cfg: &ModularConfig,
) -> Result<Decomposition, JantzenError> {
    let n = b.size() as usize;
    let verdict = classify(n, p);
    if !verdict.is_finite_type() {
        return Err(JantzenError::RegimeViolation(format!(
            "decomposition matrices are only defined in the finite regime, classifier says {:?}",
            verdict.kind
        )));
    }
    let mut ordering = b.members.clone();
    for (i, la) in ordering.iter().enumerate() {
        for mu in &ordering[i + 1..] {
            if la.dominance_cmp(mu)? == DomOrdering::Incomparable {
                return Err(JantzenError::DominanceNotTotal);
            }
        }
    }
    ordering.sort_by(|a, b| match a.dominance_cmp(b).expect("same block") {
        DomOrdering::Less => std::cmp::Ordering::Less,
        DomOrdering::Greater => std::cmp::Ordering::Greater,
        _ => std::cmp::Ordering::Equal,
    });
    let m = ordering.len();
    let mut entries = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let v = jantzen_coefficient(&ordering[i], &ordering[j], p, cfg)?;
            if v != 0 {
                entries.push((i, j, v));
            }
        }
    }
    let table = JantzenTable {
        ordering: ordering.clone(),
        entries,
    };
    for i in 1..m {
        if table.get(i, i - 1) <= 0 {
            return Err(JantzenError::ValidationFailed(format!(
                "J[{i}][{}] = {} is not positive",
                i - 1,
                table.get(i, i - 1)
            )));
        }
        for j in i + 1..m {
            if table.get(i, j) != 0 {
                return Err(JantzenError::ValidationFailed(format!(
                    "J[{i}][{j}] = {} above the diagonal",
                    table.get(i, j)
                )));
            }
        }
    }
    let mut d = vec![vec![0i64; m]; m];
    for i in 0..m {
        d[i][i] = 1;
        if i > 0 {
            d[i][i - 1] = 1;
        }
    }
    let c = transpose_times(&d);
    Ok(Decomposition {
        ordering,
        d,
        c,
        table,
    })
}

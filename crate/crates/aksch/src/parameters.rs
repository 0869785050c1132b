//! Parameter arithmetic: the gap statistics `f⁺¹`, `f⁺²`, `g` of the exponent
//! vector, the semisimplicity criterion, and the representation-type
//! classifier, including the multi-orbit reduction for separated parameter
//! orbits.
//!
//! Parameters are `(e, f_1, ..., f_r)` with `q` a primitive `e`-th root of
//! unity and `Q_i = q^{f_i}`; `e = INFINITY` means `q` is not a root of unity.

use std::fmt;

use serde::ser::Serializer;
use serde::Serialize;

/// A natural number extended by `INFINITY`; `Finite(x) < Infinity` under the
/// derived order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Extended {
    Finite(u64),
    Infinity,
}

impl Extended {
    pub fn plus(self, c: u64) -> Extended {
        match self {
            Extended::Finite(x) => Extended::Finite(x + c),
            Extended::Infinity => Extended::Infinity,
        }
    }

    pub fn times(self, c: u64) -> Extended {
        match self {
            Extended::Finite(x) => Extended::Finite(x * c),
            Extended::Infinity => Extended::Infinity,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Extended::Finite(x) => Some(x),
            Extended::Infinity => None,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(x) => write!(f, "{x}"),
            Extended::Infinity => write!(f, "infinity"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(x) => serializer.serialize_u64(*x),
            Extended::Infinity => serializer.serialize_str("infinity"),
        }
    }
}

/// The arithmetic data every criterion reads: `e`, the exponents `f_i`, the
/// field characteristic, and whether `q = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParameterSet {
    e: Extended,
    f: Vec<u64>,
    char_p: u64,
    q_is_one: bool,
}

/// Invalid parameter data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParameterError {
    OrderTooSmall(u64),
    ExponentOutOfRange { f: u64, e: u64 },
    EmptyExponents,
    CharNotPrime(u64),
}

impl fmt::Display for ParameterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParameterError::OrderTooSmall(e) => write!(f, "e must be at least 2, got {e}"),
            ParameterError::ExponentOutOfRange { f: fi, e } => {
                write!(f, "exponent {fi} outside 0..{}", e - 1)
            }
            ParameterError::EmptyExponents => write!(f, "at least one exponent required (r >= 1)"),
            ParameterError::CharNotPrime(p) => write!(f, "characteristic must be 0 or prime, got {p}"),
        }
    }
}

impl std::error::Error for ParameterError {}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl ParameterSet {
    /// Parameters with `q != 1`: requires `e >= 2` (or `INFINITY`) and
    /// `0 <= f_i <= e-1` when `e` is finite.
    pub fn new(e: Extended, f: Vec<u64>, char_p: u64) -> Result<Self, ParameterError> {
        if f.is_empty() {
            return Err(ParameterError::EmptyExponents);
        }
        if let Extended::Finite(ef) = e {
            if ef < 2 {
                return Err(ParameterError::OrderTooSmall(ef));
            }
            if let Some(&bad) = f.iter().find(|&&fi| fi >= ef) {
                return Err(ParameterError::ExponentOutOfRange { f: bad, e: ef });
            }
        }
        if char_p != 0 && !is_prime(char_p) {
            return Err(ParameterError::CharNotPrime(char_p));
        }
        Ok(ParameterSet {
            e,
            f,
            char_p,
            q_is_one: false,
        })
    }

    /// The `q = 1`, `Q_1 = ... = Q_r = 1` case.
    pub fn q_one(r: usize, char_p: u64) -> Result<Self, ParameterError> {
        if r == 0 {
            return Err(ParameterError::EmptyExponents);
        }
        if char_p != 0 && !is_prime(char_p) {
            return Err(ParameterError::CharNotPrime(char_p));
        }
        Ok(ParameterSet {
            e: Extended::Infinity,
            f: vec![0; r],
            char_p,
            q_is_one: true,
        })
    }

    pub fn e(&self) -> Extended {
        self.e
    }

    pub fn f(&self) -> &[u64] {
        &self.f
    }

    pub fn r(&self) -> usize {
        self.f.len()
    }

    pub fn char_p(&self) -> u64 {
        self.char_p
    }

    pub fn q_is_one(&self) -> bool {
        self.q_is_one
    }

    /// Same parameters with the exponent vector replaced (validated).
    pub fn with_f(&self, f: Vec<u64>) -> Result<Self, ParameterError> {
        ParameterSet::new(self.e, f, self.char_p)
    }
}

/// Sorted exponents with cyclic extension, their gaps, and the three minima
/// the finiteness condition reads.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpreadInvariants {
    pub f_sorted: Vec<u64>,
    /// `g'_i = f'_{i+1} - f'_i` for `i = 1..r`, with `f'_{r+1} = e + f'_1`.
    pub gaps: Vec<Extended>,
    pub f_plus_1: Extended,
    pub f_plus_2: Extended,
    pub g_min: Extended,
}

/// `f'` extended periodically: `f'_{i+r} = e + f'_i` (1-based index).
fn f_ext(sorted: &[u64], e: Extended, idx: usize) -> Extended {
    let r = sorted.len();
    let wraps = ((idx - 1) / r) as u64;
    let base = sorted[(idx - 1) % r];
    if wraps == 0 {
        Extended::Finite(base)
    } else {
        e.times(wraps).plus(base)
    }
}

fn ext_sub(a: Extended, b: u64) -> Extended {
    match a {
        Extended::Finite(x) => Extended::Finite(x - b),
        Extended::Infinity => Extended::Infinity,
    }
}

fn ext_add(a: Extended, b: Extended) -> Extended {
    match (a, b) {
        (Extended::Finite(x), Extended::Finite(y)) => Extended::Finite(x + y),
        _ => Extended::Infinity,
    }
}

/// The invariants `f⁺¹ = min(f'_{i+1} - f'_i)`, `f⁺² = min(f'_{i+2} - f'_i)`
/// and `g = min(g'_i + g'_j, i != j)` of the sorted exponent vector.
pub fn spread_invariants(p: &ParameterSet) -> SpreadInvariants {
    assert!(!p.q_is_one(), "spread invariants are defined for q != 1");
    let mut f_sorted = p.f().to_vec();
    f_sorted.sort_unstable();
    let r = f_sorted.len();
    let gaps: Vec<Extended> = (1..=r)
        .map(|i| ext_sub(f_ext(&f_sorted, p.e(), i + 1), f_sorted[i - 1]))
        .collect();
    let f_plus_1 = gaps.iter().copied().min().unwrap();
    let f_plus_2 = (1..=r)
        .map(|i| ext_sub(f_ext(&f_sorted, p.e(), i + 2), f_sorted[i - 1]))
        .min()
        .unwrap();
    let g_min = (0..r)
        .flat_map(|i| (0..r).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| ext_add(gaps[i], gaps[j]))
        .min()
        .unwrap_or(Extended::Infinity);
    SpreadInvariants {
        f_sorted,
        gaps,
        f_plus_1,
        f_plus_2,
        g_min,
    }
}

/// Exact evaluation of the semisimplicity criterion
/// `prod (1+q+...+q^{i-1}) * prod (q^a Q_i - Q_j) != 0`.
pub fn is_semisimple(n: usize, p: &ParameterSet) -> bool {
    if n == 0 {
        return true;
    }
    let nn = n as u64;
    if p.q_is_one() {
        return (p.char_p() == 0 || nn < p.char_p()) && p.r() == 1;
    }
    if Extended::Finite(nn) >= p.e() {
        return false;
    }
    let f = p.f();
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            match p.e() {
                Extended::Finite(e) => {
                    let d = (f[i] as i64 - f[j] as i64).rem_euclid(e as i64) as u64;
                    if d < nn || e - d < nn {
                        return false;
                    }
                }
                Extended::Infinity => {
                    let d = f[i].abs_diff(f[j]);
                    if d < nn {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Representation-type verdict.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerdictKind {
    Semisimple,
    Finite,
    Infinite,
    Wild,
    OutOfScope,
}

/// The evaluated thresholds behind a verdict.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Bounds {
    pub e: Extended,
    #[serde(rename = "twoF1plus4")]
    pub two_f1_plus_4: Extended,
    #[serde(rename = "f2plus1")]
    pub f2_plus_1: Extended,
    #[serde(rename = "gplus2")]
    pub g_plus_2: Extended,
}

/// Classifier output: the verdict kind, the thresholds that produced it (when
/// the gap statistics are defined), and a note for unresolved cases.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub bounds: Option<Bounds>,
    pub note: Option<String>,
}

impl Verdict {
    fn plain(kind: VerdictKind, bounds: Option<Bounds>) -> Self {
        Verdict {
            kind,
            bounds,
            note: None,
        }
    }

    pub fn is_finite_type(&self) -> bool {
        matches!(self.kind, VerdictKind::Semisimple | VerdictKind::Finite)
    }
}

/// Decides the representation type of `H_{n,r}` / `S_{n,r}` from the
/// parameters.
///
/// For `q != 1` the finite regime is `n < min{e, 2f⁺¹+4}` when `r = 2` and
/// `n < min{2f⁺¹+4, f⁺²+1, g+2}` when `r >= 3`; `r = 1` follows the q-Schur
/// trichotomy `n < e` / `n < 2e` / wild. For `q = 1` and `r >= 2` the type is
/// finite exactly for `n = 1`, wild for `n >= 3`, and infinite with
/// undetermined tame/wildness for `n = 2`.
pub fn classify(n: usize, p: &ParameterSet) -> Verdict {
    let nn = Extended::Finite(n as u64);
    if p.q_is_one() {
        if p.r() == 1 {
            return Verdict {
                kind: VerdictKind::OutOfScope,
                bounds: None,
                note: Some(
                    "q = 1, r = 1 is the group algebra of the symmetric group; not classified here"
                        .into(),
                ),
            };
        }
        let kind = match n {
            0 => VerdictKind::Semisimple,
            1 => VerdictKind::Finite,
            2 => VerdictKind::Infinite,
            _ => VerdictKind::Wild,
        };
        let note = (n == 2).then(|| "tame-or-wild unknown".to_string());
        return Verdict {
            kind,
            bounds: None,
            note,
        };
    }

    let inv = spread_invariants(p);
    let bounds = Bounds {
        e: p.e(),
        two_f1_plus_4: inv.f_plus_1.times(2).plus(4),
        f2_plus_1: inv.f_plus_2.plus(1),
        g_plus_2: inv.g_min.plus(2),
    };
    let kind = match p.r() {
        1 => {
            if nn < p.e() {
                VerdictKind::Semisimple
            } else if nn < p.e().times(2) {
                VerdictKind::Finite
            } else {
                VerdictKind::Wild
            }
        }
        2 => {
            if nn < p.e().min(bounds.two_f1_plus_4) {
                if is_semisimple(n, p) {
                    VerdictKind::Semisimple
                } else {
                    VerdictKind::Finite
                }
            } else {
                VerdictKind::Infinite
            }
        }
        _ => {
            let bound = bounds
                .two_f1_plus_4
                .min(bounds.f2_plus_1)
                .min(bounds.g_plus_2);
            if nn < bound {
                if is_semisimple(n, p) {
                    VerdictKind::Semisimple
                } else {
                    VerdictKind::Finite
                }
            } else {
                VerdictKind::Infinite
            }
        }
    };
    Verdict::plain(kind, Some(bounds))
}

/// A family of parameter orbits sharing `e`, the characteristic and the
/// `q = 1` flag. Orbit separation (no `q^a Q_i - Q_j` vanishing across
/// orbits for `|a| < n`) is a caller-asserted precondition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitSpec {
    orbits: Vec<ParameterSet>,
}

impl OrbitSpec {
    pub fn new(orbits: Vec<ParameterSet>) -> Result<Self, ParameterError> {
        if orbits.is_empty() {
            return Err(ParameterError::EmptyExponents);
        }
        let first = &orbits[0];
        assert!(
            orbits.iter().all(|o| o.e() == first.e()
                && o.char_p() == first.char_p()
                && o.q_is_one() == first.q_is_one()),
            "orbits must share e, the characteristic and the q = 1 flag"
        );
        Ok(OrbitSpec { orbits })
    }

    pub fn orbits(&self) -> &[ParameterSet] {
        &self.orbits
    }
}

/// Smallest `n'` at which the orbit stops being semisimple (`n+1` if none up
/// to `n`).
fn first_non_semisimple(n: usize, p: &ParameterSet) -> usize {
    (1..=n).find(|&m| !is_semisimple(m, p)).unwrap_or(n + 1)
}

/// Representation type of a direct sum of tensor products over separated
/// orbits: finite iff every orbit is finite at `n` and no two orbits can be
/// simultaneously non-semisimple, i.e. `t_a + t_b > n` for the first
/// non-semisimple degrees `t`.
pub fn classify_multi_orbit(n: usize, spec: &OrbitSpec) -> Verdict {
    if spec.orbits.len() == 1 {
        return classify(n, &spec.orbits[0]);
    }
    let verdicts: Vec<Verdict> = spec.orbits.iter().map(|o| classify(n, o)).collect();
    if let Some(v) = verdicts.iter().find(|v| v.kind == VerdictKind::OutOfScope) {
        return v.clone();
    }
    let all_finite = verdicts.iter().all(Verdict::is_finite_type);
    let t: Vec<usize> = spec
        .orbits
        .iter()
        .map(|o| first_non_semisimple(n, o))
        .collect();
    let mut clash = None;
    'outer: for i in 0..t.len() {
        for j in i + 1..t.len() {
            if t[i] + t[j] <= n {
                clash = Some((i, j));
                break 'outer;
            }
        }
    }
    match (all_finite, clash) {
        (true, None) => Verdict::plain(VerdictKind::Finite, None),
        (false, _) => Verdict {
            kind: VerdictKind::Infinite,
            bounds: None,
            note: Some("some orbit is of infinite type".into()),
        },
        (_, Some((i, j))) => Verdict {
            kind: VerdictKind::Infinite,
            bounds: None,
            note: Some(format!(
                "orbits {} and {} can be simultaneously non-semisimple",
                i + 1,
                j + 1
            )),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(e: u64, f: &[u64]) -> ParameterSet {
        ParameterSet::new(Extended::Finite(e), f.to_vec(), 0).unwrap()
    }

    #[test]
    fn spread_of_the_three_exponent_example() {
        let inv = spread_invariants(&params(6, &[0, 1, 3]));
        assert_eq!(inv.f_plus_1, Extended::Finite(1));
        assert_eq!(inv.f_plus_2, Extended::Finite(3));
        assert_eq!(inv.g_min, Extended::Finite(3));
        assert_eq!(
            inv.gaps,
            vec![Extended::Finite(1), Extended::Finite(2), Extended::Finite(3)]
        );
    }

    #[test]
    fn spread_of_the_four_exponent_example() {
        let inv = spread_invariants(&params(16, &[0, 2, 8, 10]));
        assert_eq!(inv.f_plus_1, Extended::Finite(2));
        assert_eq!(inv.f_plus_2, Extended::Finite(8));
        assert_eq!(inv.g_min, Extended::Finite(4));
    }

    #[test]
    fn spread_with_infinite_order_and_repeats() {
        let p = ParameterSet::new(Extended::Infinity, vec![0, 0], 0).unwrap();
        let inv = spread_invariants(&p);
        assert_eq!(inv.f_plus_1, Extended::Finite(0));
        assert_eq!(inv.f_plus_2, Extended::Infinity);
        assert_eq!(inv.g_min, Extended::Infinity);
    }

    #[test]
    fn gaps_sum_to_e() {
        for e in 2..=8u64 {
            for f1 in 0..e {
                for f2 in 0..e {
                    let inv = spread_invariants(&params(e, &[f1, f2, 0]));
                    let total: u64 = inv.gaps.iter().map(|g| g.finite().unwrap()).sum();
                    assert_eq!(total, e);
                }
            }
        }
    }

    #[test]
    fn two_component_classifier_matches_the_pairwise_gap_bound() {
        // independent route to f+1 for r = 2: the least cyclic distance
        // between the two exponents over all ordered pairs
        for e in 2..=8u64 {
            for f1 in 0..e {
                for f2 in 0..e {
                    let d12 = (f1 as i64 - f2 as i64).rem_euclid(e as i64) as u64;
                    let d21 = (f2 as i64 - f1 as i64).rem_euclid(e as i64) as u64;
                    let f_plus_1 = d12.min(d21);
                    let p = params(e, &[f1, f2]);
                    for n in 1..=10usize {
                        let finite = (n as u64) < e.min(2 * f_plus_1 + 4);
                        assert_eq!(
                            classify(n, &p).is_finite_type(),
                            finite,
                            "e={e} f=({f1},{f2}) n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn semisimplicity_examples() {
        assert!(is_semisimple(2, &params(5, &[0, 3])));
        assert!(!is_semisimple(5, &params(6, &[0, 1, 3])));
        for e in 2..=5 {
            for n in e..=(2 * e) {
                assert!(!is_semisimple(n as usize, &params(e, &[0])));
            }
        }
    }

    #[test]
    fn classify_worked_instances_are_infinite() {
        assert_eq!(classify(5, &params(6, &[0, 1, 3])).kind, VerdictKind::Infinite);
        assert_eq!(
            classify(7, &params(16, &[0, 2, 8, 10])).kind,
            VerdictKind::Infinite
        );
    }

    #[test]
    fn classify_two_components_finite_not_semisimple() {
        let v = classify(2, &params(5, &[0, 1]));
        assert_eq!(v.kind, VerdictKind::Finite);
        assert!(!is_semisimple(2, &params(5, &[0, 1])));
    }

    #[test]
    fn classify_one_component_trichotomy() {
        assert_eq!(classify(6, &params(3, &[0])).kind, VerdictKind::Wild);
        assert_eq!(classify(2, &params(3, &[0])).kind, VerdictKind::Semisimple);
        assert_eq!(classify(4, &params(3, &[0])).kind, VerdictKind::Finite);
        let inf = ParameterSet::new(Extended::Infinity, vec![7], 0).unwrap();
        assert_eq!(classify(50, &inf).kind, VerdictKind::Semisimple);
    }

    #[test]
    fn classify_q_one_cases() {
        for r in 2..=3 {
            let p = ParameterSet::q_one(r, 0).unwrap();
            assert_eq!(classify(1, &p).kind, VerdictKind::Finite);
            let two = classify(2, &p);
            assert_eq!(two.kind, VerdictKind::Infinite);
            assert_eq!(two.note.as_deref(), Some("tame-or-wild unknown"));
            assert_eq!(classify(3, &p).kind, VerdictKind::Wild);
            assert_eq!(classify(4, &p).kind, VerdictKind::Wild);
        }
        let sym = ParameterSet::q_one(1, 5).unwrap();
        assert_eq!(classify(3, &sym).kind, VerdictKind::OutOfScope);
    }

    #[test]
    fn semisimple_implies_within_every_threshold() {
        for e in 2..=8u64 {
            for f1 in 0..e {
                for f2 in 0..e {
                    for f3 in 0..e {
                        let p = params(e, &[f1, f2, f3]);
                        for n in 0..=6usize {
                            let v = classify(n, &p);
                            if v.kind == VerdictKind::Semisimple {
                                assert!(is_semisimple(n, &p));
                                let b = v.bounds.unwrap();
                                let nn = Extended::Finite(n as u64);
                                assert!(nn < b.two_f1_plus_4 && nn < b.f2_plus_1 && nn < b.g_plus_2);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn finite_type_is_monotone_in_n() {
        for e in 2..=6u64 {
            for f1 in 0..e {
                for f2 in 0..e {
                    let p = params(e, &[f1, f2]);
                    for n in 1..=8usize {
                        if classify(n, &p).is_finite_type() {
                            assert!(classify(n - 1, &p).is_finite_type());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn multi_orbit_examples() {
        let o1 = params(4, &[0]);
        let spec = OrbitSpec::new(vec![o1.clone(), o1]).unwrap();
        assert_eq!(classify_multi_orbit(3, &spec).kind, VerdictKind::Finite);

        let o2 = params(2, &[0]);
        let spec = OrbitSpec::new(vec![o2.clone(), o2]).unwrap();
        assert_eq!(classify_multi_orbit(4, &spec).kind, VerdictKind::Infinite);
    }

    #[test]
    fn single_orbit_reduces_to_classify() {
        for e in 2..=5u64 {
            for f1 in 0..e {
                for n in 0..=6usize {
                    let p = params(e, &[f1, (f1 + 1) % e]);
                    let spec = OrbitSpec::new(vec![p.clone()]).unwrap();
                    assert_eq!(classify_multi_orbit(n, &spec), classify(n, &p));
                }
            }
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(ParameterSet::new(Extended::Finite(1), vec![0], 0).is_err());
        assert!(ParameterSet::new(Extended::Finite(4), vec![4], 0).is_err());
        assert!(ParameterSet::new(Extended::Finite(4), vec![], 0).is_err());
        assert!(ParameterSet::new(Extended::Finite(4), vec![0], 6).is_err());
        assert!(ParameterSet::new(Extended::Finite(4), vec![0], 7).is_ok());
        assert!(ParameterSet::new(Extended::Infinity, vec![100], 0).is_ok());
    }

    #[test]
    fn extended_serializes_as_integer_or_string() {
        assert_eq!(serde_json::to_string(&Extended::Finite(6)).unwrap(), "6");
        assert_eq!(
            serde_json::to_string(&Extended::Infinity).unwrap(),
            "\"infinity\""
        );
    }
}

//! Embedded quadrilateral discs for the fibre of a once-punctured torus
//! bundle.
//!
//! An essential arc on the fibre with homology class `(x, y)` spans an
//! embedded quadrilateral disc exactly when it and its image under the
//! monodromy `[[a, b], [c, d]]` meet at most once, that is when
//!
//! ```text
//! (a x + b y) y - (c x + d y) x  =  -c x^2 + (a - d) x y + b y^2  ∈ {0, 1, -1}.
//! ```
//!
//! The right side is a binary quadratic form of discriminant `trace^2 - 4`, so
//! existence is decided by the trace: definite forms for `|t| <= 1`, integer
//! eigenvectors for `|t| = 2`, and reduced indefinite cycles for `|t| >= 3`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
pub use crate::forms::DiscForm;
use crate::forms::{definite_units, reduced_cycle};
use crate::slope::UnimodularMatrix;

/// Largest brute-force height.
pub const MAX_SEARCH_HEIGHT: u64 = 1 << 30;

/// Largest entry bound accepted by [`scan_matrices`].
pub const MAX_SCAN_BOUND: u32 = 64;

/// Monodromy of a once-punctured torus bundle, acting on the fibre's first
/// homology. Entries are fixed width; anything that would overflow is
/// reported as [`Error::Overflow`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monodromy {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl Monodromy {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let det = a as i128 * d as i128 - b as i128 * c as i128;
        if det != 1 {
            return Err(Error::NotUnimodular(det.into()));
        }
        Ok(Monodromy { a, b, c, d })
    }

    pub fn identity() -> Self {
        Monodromy { a: 1, b: 0, c: 0, d: 1 }
    }

    /// `[a, b, c, d]`, row-major.
    pub fn entries(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn trace(&self) -> i128 {
        self.a as i128 + self.d as i128
    }

    pub fn is_identity_mod_2(&self) -> bool {
        self.a % 2 != 0 && self.d % 2 != 0 && self.b % 2 == 0 && self.c % 2 == 0
    }

    pub fn to_unimodular(&self) -> UnimodularMatrix {
        UnimodularMatrix::new(self.a, self.b, self.c, self.d).expect("determinant one")
    }

    fn from_unimodular(m: &UnimodularMatrix) -> Result<Self> {
        let [a, b, c, d] = m.entries().map(|e| e.to_i64());
        match (a, b, c, d) {
            (Some(a), Some(b), Some(c), Some(d)) => Ok(Monodromy { a, b, c, d }),
            _ => Err(Error::Overflow("monodromy entries")),
        }
    }
}

impl fmt::Display for Monodromy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.a, self.b, self.c, self.d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    BruteForce,
    Eigenvector,
    Parity,
    DefiniteEnumeration,
    RiverCycle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::BruteForce => "BruteForce",
            Method::Eigenvector => "Eigenvector",
            Method::Parity => "Parity",
            Method::DefiniteEnumeration => "DefiniteEnumeration",
            Method::RiverCycle => "RiverCycle",
        };
        f.write_str(s)
    }
}

/// A primitive class `(x, y)` with form value in `{0, 1, -1}`, signed so that
/// `y > 0`, or `y = 0` and `x = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub x: BigInt,
    pub y: BigInt,
    pub value: i64,
}

impl Witness {
    fn canonical(x: BigInt, y: BigInt, value: i64) -> Self {
        if y.is_negative() || (y.is_zero() && x.is_negative()) {
            Witness { x: -x, y: -y, value }
        } else {
            Witness { x, y, value }
        }
    }

    /// Search order: height `max(|x|, |y|)`, then `y`, then `x`.
    pub fn search_order(&self, other: &Witness) -> Ordering {
        let h = |w: &Witness| w.x.abs().max(w.y.abs());
        h(self)
            .cmp(&h(other))
            .then_with(|| self.y.cmp(&other.y))
            .then_with(|| self.x.cmp(&other.x))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    Exists,
    NotExists,
    Unknown,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VerdictKind::Exists => "Exists",
            VerdictKind::NotExists => "NotExists",
            VerdictKind::Unknown => "Unknown",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiscVerdict {
    Exists { witness: Witness, method: Method },
    NotExists { method: Method },
    /// Only produced by height-limited searches.
    Unknown { height: u64 },
}

impl DiscVerdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            DiscVerdict::Exists { .. } => VerdictKind::Exists,
            DiscVerdict::NotExists { .. } => VerdictKind::NotExists,
            DiscVerdict::Unknown { .. } => VerdictKind::Unknown,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            DiscVerdict::Exists { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn method(&self) -> Option<Method> {
        match self {
            DiscVerdict::Exists { method, .. } | DiscVerdict::NotExists { method } => Some(*method),
            DiscVerdict::Unknown { .. } => None,
        }
    }
}

/// `(a x + b y) y - (c x + d y) x` for a primitive class `(x, y)`.
pub fn disc_value(m: &Monodromy, x: &BigInt, y: &BigInt) -> Result<BigInt> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::ZeroCurve);
    }
    if !x.gcd(y).is_one() {
        return Err(Error::NotPrimitive(x.clone(), y.clone()));
    }
    let image_x = x * m.a + y * m.b;
    let image_y = x * m.c + y * m.d;
    Ok(image_x * y - image_y * x)
}

/// The quadratic form `-c x^2 + (a - d) x y + b y^2`.
pub fn form_of(m: &Monodromy) -> DiscForm {
    DiscForm::new(
        -BigInt::from(m.c),
        BigInt::from(m.a) - m.d,
        BigInt::from(m.b),
    )
}

/// The first primitive class of height at most `height`, in search order,
/// with value in `{0, 1, -1}`.
///
/// Exhaustive, but row by row: for each `y` the equation `f(x, y) = v` is a
/// quadratic in `x`, solved exactly.
pub fn brute_search(m: &Monodromy, height: u64) -> Result<Option<Witness>> {
    if height > MAX_SEARCH_HEIGHT {
        return Err(Error::BoundsTooLarge {
            requested: height,
            cap: MAX_SEARCH_HEIGHT,
        });
    }
    if height == 0 {
        return Ok(None);
    }
    let f = form_of(m);
    if f.x2.abs() <= BigInt::one() {
        return Ok(Some(Witness::canonical(BigInt::one(), BigInt::zero(), f.x2.to_i64().expect("small"))));
    }
    let h = BigInt::from(height);
    let two_a = &f.x2 * 2;
    let mut best: Option<Witness> = None;
    for y in 1..=height {
        let y = BigInt::from(y);
        if best.as_ref().is_some_and(|w| w.x.abs().max(w.y.clone()) < y) {
            break;
        }
        let by = &f.xy * &y;
        for v in [-1i64, 0, 1] {
            // x2 x^2 + by x + (y2 y^2 - v) = 0
            let c0: BigInt = &f.y2 * &y * &y - v;
            let delta: BigInt = &by * &by - &two_a * &c0 * 2;
            if delta.is_negative() {
                continue;
            }
            let root = Roots::sqrt(&delta);
            if &root * &root != delta {
                continue;
            }
            for num in [-&by - &root, -&by + &root] {
                let (x, r) = num.div_rem(&two_a);
                if !r.is_zero() || x.abs() > h || !x.gcd(&y).is_one() {
                    continue;
                }
                let w = Witness { x, y: y.clone(), value: v };
                if best.as_ref().is_none_or(|b| w.search_order(b).is_lt()) {
                    best = Some(w);
                }
            }
        }
    }
    Ok(best)
}

/// Parity obstruction: `A ≡ I (mod 2)` makes the form even, and value 0
/// needs an integer eigenvalue, which forces `trace = ±2`.
pub fn no_disc_criterion(m: &Monodromy) -> bool {
    m.is_identity_mod_2() && m.trace().abs() != 2
}

/// Exact decision of quadrilateral disc existence. Never returns `Unknown`.
pub fn decide(m: &Monodromy) -> Result<DiscVerdict> {
    let t = m.trace();
    let form = form_of(m);
    match t.abs() {
        0 | 1 => {
            // Definite: discriminant -4 or -3.
            let (positive, sign) = if form.x2.is_positive() {
                (form.clone(), 1)
            } else {
                (form.negate(), -1)
            };
            let witness = definite_units(&positive)
                .into_iter()
                .map(|(x, y)| Witness::canonical(x, y, sign))
                .min_by(|u, v| u.search_order(v));
            Ok(match witness {
                Some(witness) => DiscVerdict::Exists {
                    witness,
                    method: Method::DefiniteEnumeration,
                },
                None => DiscVerdict::NotExists {
                    method: Method::DefiniteEnumeration,
                },
            })
        }
        2 => {
            let witness = eigenvector(m);
            debug_assert!(disc_value(m, &witness.x, &witness.y).unwrap().is_zero());
            Ok(DiscVerdict::Exists {
                witness,
                method: Method::Eigenvector,
            })
        }
        _ => {
            if m.is_identity_mod_2() {
                return Ok(DiscVerdict::NotExists {
                    method: Method::Parity,
                });
            }
            let cycle = reduced_cycle(&form)?;
            let found = cycle.forms.iter().find(|(g, _)| g.x2.abs().is_one());
            Ok(match found {
                Some((g, sub)) => {
                    let value = g.x2.to_i64().expect("unit");
                    DiscVerdict::Exists {
                        witness: Witness::canonical(sub.m11.clone(), sub.m21.clone(), value),
                        method: Method::RiverCycle,
                    }
                }
                None => DiscVerdict::NotExists {
                    method: Method::RiverCycle,
                },
            })
        }
    }
}

/// Verdict from brute force alone: `Exists` or `Unknown`.
pub fn decide_by_search(m: &Monodromy, height: u64) -> Result<DiscVerdict> {
    Ok(match brute_search(m, height)? {
        Some(witness) => DiscVerdict::Exists {
            witness,
            method: Method::BruteForce,
        },
        None => DiscVerdict::Unknown { height },
    })
}

/// Primitive eigenvector for eigenvalue `trace / 2` when `|trace| = 2`.
fn eigenvector(m: &Monodromy) -> Witness {
    let lambda = (m.trace() / 2) as i64;
    let (n11, n12) = (m.a as i128 - lambda as i128, m.b as i128);
    let (n21, n22) = (m.c as i128, m.d as i128 - lambda as i128);
    let (x, y) = if n11 == 0 && n12 == 0 && n21 == 0 && n22 == 0 {
        // ±I: every class is fixed.
        (1, 0)
    } else if n11 != 0 || n12 != 0 {
        (n12, -n11)
    } else {
        (n22, -n21)
    };
    let g = x.gcd(&y);
    Witness::canonical(BigInt::from(x / g), BigInt::from(y / g), 0)
}

/// `P A P^-1`.
pub fn conjugate(m: &Monodromy, p: &UnimodularMatrix) -> Result<Monodromy> {
    let product = p.compose(&m.to_unimodular()).compose(&p.inverse());
    Monodromy::from_unimodular(&product)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanReport {
    pub total: u64,
    pub exists_count: u64,
    pub not_exists_count: u64,
    pub criterion_count: u64,
    /// Matrices where the parity criterion holds but the verdict is not
    /// `NotExists`; sorted.
    pub disagreements: Vec<Monodromy>,
}

/// Every determinant-one matrix with entries in `[-bound, bound]`, in
/// lexicographic order of `(a, b, c, d)`.
pub fn matrices_with_entries(bound: u32) -> Vec<Monodromy> {
    let n = bound as i64;
    let mut out = Vec::new();
    for a in -n..=n {
        collect_row(a, n, &mut out);
    }
    out
}

fn collect_row(a: i64, n: i64, out: &mut Vec<Monodromy>) {
    for b in -n..=n {
        for c in -n..=n {
            if a == 0 {
                if b * c == -1 {
                    out.extend((-n..=n).map(|d| Monodromy { a, b, c, d }));
                }
            } else if (1 + b * c) % a == 0 {
                let d = (1 + b * c) / a;
                if d.abs() <= n {
                    out.push(Monodromy { a, b, c, d });
                }
            }
        }
    }
}

/// Runs [`decide`] and [`no_disc_criterion`] over every matrix with entries
/// in `[-bound, bound]`. Rows of the enumeration are processed in parallel
/// and merged in order.
pub fn scan_matrices(entry_bound: u32) -> Result<ScanReport> {
    if entry_bound == 0 {
        return Err(Error::InvalidBounds("entry bound must be at least 1".into()));
    }
    if entry_bound > MAX_SCAN_BOUND {
        return Err(Error::BoundsTooLarge {
            requested: entry_bound.into(),
            cap: MAX_SCAN_BOUND.into(),
        });
    }
    let n = entry_bound as i64;
    let partials: Vec<Result<ScanReport>> = (-n..=n)
        .into_par_iter()
        .map(|a| {
            let mut row = Vec::new();
            collect_row(a, n, &mut row);
            let mut report = ScanReport::default();
            for m in row {
                report.total += 1;
                let verdict = decide(&m)?;
                match verdict.kind() {
                    VerdictKind::Exists => report.exists_count += 1,
                    VerdictKind::NotExists => report.not_exists_count += 1,
                    VerdictKind::Unknown => {}
                }
                if no_disc_criterion(&m) {
                    report.criterion_count += 1;
                    if verdict.kind() != VerdictKind::NotExists {
                        report.disagreements.push(m);
                    }
                }
            }
            Ok(report)
        })
        .collect();
    let mut total = ScanReport::default();
    for part in partials {
        let part = part?;
        total.total += part.total;
        total.exists_count += part.exists_count;
        total.not_exists_count += part.not_exists_count;
        total.criterion_count += part.criterion_count;
        total.disagreements.extend(part.disagreements);
    }
    total.disagreements.sort();
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(a: i64, b: i64, c: i64, d: i64) -> Monodromy {
        Monodromy::new(a, b, c, d).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn witness(x: i64, y: i64, value: i64) -> Witness {
        Witness {
            x: x.into(),
            y: y.into(),
            value,
        }
    }

    #[test]
    fn disc_value_examples() {
        assert_eq!(disc_value(&mono(2, 1, 1, 1), &big(1), &big(0)).unwrap(), big(-1));
        for (x, y) in [(1, 0), (3, 7), (-5, 2)] {
            assert!(disc_value(&Monodromy::identity(), &big(x), &big(y)).unwrap().is_zero());
        }
        assert_eq!(disc_value(&mono(3, 2, 4, 3), &big(1), &big(1)).unwrap(), big(-2));
        assert!(matches!(
            disc_value(&mono(3, 2, 4, 3), &big(2), &big(2)),
            Err(Error::NotPrimitive(..))
        ));
        assert_eq!(disc_value(&mono(3, 2, 4, 3), &big(0), &big(0)), Err(Error::ZeroCurve));
    }

    #[test]
    fn form_examples() {
        let f = form_of(&mono(3, 2, 4, 3));
        assert_eq!((f.x2, f.xy, f.y2, f.disc), (big(-4), big(0), big(2), big(32)));
        let f = form_of(&Monodromy::identity());
        assert_eq!((f.x2, f.xy, f.y2, f.disc), (big(0), big(0), big(0), big(0)));
        let f = form_of(&mono(2, 1, 1, 1));
        assert_eq!((f.x2, f.xy, f.y2, f.disc), (big(-1), big(1), big(1), big(5)));
    }

    #[test]
    fn rejects_non_unimodular() {
        assert_eq!(Monodromy::new(2, 0, 0, 2), Err(Error::NotUnimodular(big(4))));
    }

    #[test]
    fn brute_search_examples() {
        assert_eq!(brute_search(&mono(2, 1, 1, 1), 1).unwrap(), Some(witness(1, 0, -1)));
        assert_eq!(brute_search(&mono(3, 2, 4, 3), 1000).unwrap(), None);
        assert_eq!(brute_search(&mono(1, 1, 0, 1), 1).unwrap(), Some(witness(1, 0, 0)));
        assert!(brute_search(&mono(1, 1, 0, 1), MAX_SEARCH_HEIGHT + 1).is_err());
    }

    /// Cell-by-cell enumeration in search order.
    fn naive_search(m: &Monodromy, height: i64) -> Option<Witness> {
        let hit = |x: i64, y: i64| {
            let v = disc_value(m, &big(x), &big(y)).ok()?.to_i64()?;
            (v.abs() <= 1).then(|| witness(x, y, v))
        };
        if height == 0 {
            return None;
        }
        if let Some(w) = hit(1, 0) {
            return Some(w);
        }
        for h in 1..=height {
            for y in 1..h {
                for x in [-h, h] {
                    if let Some(w) = hit(x, y) {
                        return Some(w);
                    }
                }
            }
            for x in -h..=h {
                if let Some(w) = hit(x, h) {
                    return Some(w);
                }
            }
        }
        None
    }

    #[test]
    fn row_solver_matches_enumeration() {
        for m in matrices_with_entries(4) {
            for h in [0, 1, 2, 5, 12] {
                assert_eq!(brute_search(&m, h as u64).unwrap(), naive_search(&m, h), "{m} at {h}");
            }
        }
    }

    #[test]
    fn criterion_examples() {
        assert!(no_disc_criterion(&mono(3, 2, 4, 3)));
        assert!(!no_disc_criterion(&mono(2, 1, 1, 1)));
        assert!(!no_disc_criterion(&mono(-1, 0, 0, -1)));
        assert!(!no_disc_criterion(&mono(1, 2, 0, 1)));
    }

    #[test]
    fn decide_examples() {
        assert_eq!(
            decide(&mono(0, -1, 1, 0)).unwrap(),
            DiscVerdict::Exists {
                witness: witness(1, 0, -1),
                method: Method::DefiniteEnumeration
            }
        );
        assert_eq!(
            decide(&mono(3, 2, 4, 3)).unwrap(),
            DiscVerdict::NotExists {
                method: Method::Parity
            }
        );
        let v = decide(&mono(2, 1, 1, 1)).unwrap();
        assert_eq!(v.kind(), VerdictKind::Exists);
        assert_eq!(v.witness(), Some(&witness(1, 0, -1)));
        assert_eq!(v.method(), Some(Method::RiverCycle));
    }

    #[test]
    fn decide_trace_two_uses_eigenvector() {
        let v = decide(&mono(-1, 0, 0, -1)).unwrap();
        assert_eq!(v.witness(), Some(&witness(1, 0, 0)));
        assert_eq!(v.method(), Some(Method::Eigenvector));
        let m = mono(3, -4, 1, -1);
        let w = decide(&m).unwrap().witness().unwrap().clone();
        assert_eq!(disc_value(&m, &w.x, &w.y).unwrap(), big(0));
        assert_eq!((w.x, w.y), (big(2), big(1)));
    }

    #[test]
    fn witnesses_are_canonical_and_valid() {
        for m in matrices_with_entries(4) {
            if let Some(w) = decide(&m).unwrap().witness() {
                assert!(w.y.is_positive() || (w.y.is_zero() && w.x.is_one()), "{m}");
                assert_eq!(disc_value(&m, &w.x, &w.y).unwrap(), big(w.value), "{m}");
            }
        }
    }

    #[test]
    fn conjugate_examples() {
        let a = mono(2, 1, 1, 1);
        assert_eq!(conjugate(&a, &UnimodularMatrix::identity()).unwrap(), a);
        let p = UnimodularMatrix::new(1, 1, 0, 1).unwrap();
        let b = conjugate(&a, &p).unwrap();
        assert_eq!(b, mono(3, -1, 1, 0));
        assert_eq!(b.trace(), a.trace());
        let huge = UnimodularMatrix::new(1, i64::MAX, 0, 1).unwrap();
        assert_eq!(conjugate(&a, &huge), Err(Error::Overflow("monodromy entries")));
    }

    #[test]
    fn enumeration_counts() {
        let one = matrices_with_entries(1);
        assert!(one.contains(&Monodromy::identity()));
        let three = matrices_with_entries(3);
        assert!(three.contains(&mono(3, 2, 1, 1)));
        assert!(!three.iter().any(|m| m.entries() == [3, 2, 4, 3]));
        // Brute-force count of ad - bc = 1 over [-3, 3]^4.
        let mut count = 0;
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                for c in -3i64..=3 {
                    for d in -3i64..=3 {
                        if a * d - b * c == 1 {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(three.len(), count);
    }

    #[test]
    fn scan_small_bounds() {
        let r = scan_matrices(1).unwrap();
        assert_eq!(r.total, matrices_with_entries(1).len() as u64);
        assert_eq!(r.exists_count + r.not_exists_count, r.total);
        assert!(r.disagreements.is_empty());
        assert!(decide(&Monodromy::identity()).unwrap().kind() == VerdictKind::Exists);
        assert!(scan_matrices(5).unwrap().disagreements.is_empty());
        assert!(scan_matrices(0).is_err());
        assert!(scan_matrices(MAX_SCAN_BOUND + 1).is_err());
    }
}

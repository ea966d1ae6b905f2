//! Exact integer primitives for slopes on a boundary torus.
//!
//! A curve on the torus is a primitive integer pair. One-sided surfaces in a
//! solid torus have boundary slopes `(2p, q)` with `q` odd; halving the first
//! coordinate gives the vertex `p/q` of the Moebius band tree, which sits
//! inside the Farey graph as the full subgraph on odd-denominator fractions.
//!
//! All arithmetic is arbitrary precision. Constructors of the validated types
//! normalize the sign (positive second coordinate) but never divide out common
//! factors; [`reduce_slope`] is the only operation that does.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Anything carrying an ordered integer pair.
pub trait IntPair {
    fn first(&self) -> &BigInt;
    fn second(&self) -> &BigInt;
}

fn is_odd(n: &BigInt) -> bool {
    n.is_odd()
}

fn is_coprime(x: &BigInt, y: &BigInt) -> bool {
    x.gcd(y).is_one()
}

/// Flip both coordinates so the second is positive, or `(1, 0)` when it is zero.
fn sign_normalize(x: BigInt, y: BigInt) -> (BigInt, BigInt) {
    if y.is_negative() || (y.is_zero() && x.is_negative()) {
        (-x, -y)
    } else {
        (x, y)
    }
}

/// A reduced fraction `p/q` of the Farey graph, including `1/0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FareyVertex {
    p: BigInt,
    q: BigInt,
}

impl FareyVertex {
    /// Builds a vertex from a primitive pair; `(p,q)` and `(-p,-q)` coincide.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::ZeroCurve);
        }
        if !is_coprime(&p, &q) {
            return Err(Error::NotPrimitive(p, q));
        }
        let (p, q) = sign_normalize(p, q);
        Ok(FareyVertex { p, q })
    }

    pub fn infinity() -> Self {
        FareyVertex {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinity(&self) -> bool {
        self.q.is_zero()
    }

    /// The tree vertex with the same coordinates, if the denominator is odd.
    pub fn to_tree_vertex(&self) -> Result<TreeVertex> {
        TreeVertex::new(self.p.clone(), self.q.clone())
    }
}

impl IntPair for FareyVertex {
    fn first(&self) -> &BigInt {
        &self.p
    }
    fn second(&self) -> &BigInt {
        &self.q
    }
}

impl fmt::Display for FareyVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// A vertex `p/q` of the Moebius band tree: coprime with `q` odd and positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeVertex {
    p: BigInt,
    q: BigInt,
}

impl TreeVertex {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::ZeroCurve);
        }
        if !is_coprime(&p, &q) {
            return Err(Error::NotPrimitive(p, q));
        }
        let (p, q) = sign_normalize(p, q);
        if !is_odd(&q) {
            return Err(Error::NotTreeVertex(p, q));
        }
        Ok(TreeVertex { p, q })
    }

    /// The root `0/1`, vertex of the meridian disc.
    pub fn root() -> Self {
        TreeVertex {
            p: BigInt::zero(),
            q: BigInt::one(),
        }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_root(&self) -> bool {
        self.p.is_zero()
    }

    pub fn farey(&self) -> FareyVertex {
        FareyVertex {
            p: self.p.clone(),
            q: self.q.clone(),
        }
    }

    /// Mirror image `-p/q`.
    pub fn mirror(&self) -> Self {
        TreeVertex {
            p: -&self.p,
            q: self.q.clone(),
        }
    }

    /// Ordering key used for every vertex list: `(q, p)` lexicographic.
    pub fn canonical_key(&self) -> (&BigInt, &BigInt) {
        (&self.q, &self.p)
    }
}

impl IntPair for TreeVertex {
    fn first(&self) -> &BigInt {
        &self.p
    }
    fn second(&self) -> &BigInt {
        &self.q
    }
}

impl PartialOrd for TreeVertex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TreeVertex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }
}

impl fmt::Display for TreeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Boundary slope `(u, v)` of a one-sided surface: `u` even, `v` odd and positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundarySlope {
    u: BigInt,
    v: BigInt,
}

impl BoundarySlope {
    /// Validates an already reduced slope. Use [`reduce_slope`] for raw input.
    pub fn new(u: impl Into<BigInt>, v: impl Into<BigInt>) -> Result<Self> {
        let (u, v) = (u.into(), v.into());
        if u.is_zero() && v.is_zero() {
            return Err(Error::ZeroCurve);
        }
        if !is_coprime(&u, &v) {
            return Err(Error::NotPrimitive(u, v));
        }
        let (u, v) = sign_normalize(u, v);
        if is_odd(&u) {
            return Err(Error::NotOneSidedSlope(u, v));
        }
        Ok(BoundarySlope { u, v })
    }

    pub fn meridian() -> Self {
        BoundarySlope {
            u: BigInt::zero(),
            v: BigInt::one(),
        }
    }

    pub fn u(&self) -> &BigInt {
        &self.u
    }

    pub fn v(&self) -> &BigInt {
        &self.v
    }

    pub fn curve(&self) -> Curve {
        Curve {
            x: self.u.clone(),
            y: self.v.clone(),
        }
    }
}

impl IntPair for BoundarySlope {
    fn first(&self) -> &BigInt {
        &self.u
    }
    fn second(&self) -> &BigInt {
        &self.v
    }
}

impl fmt::Display for BoundarySlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// An essential curve on the torus: a primitive integer pair, orientation kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Curve {
    x: BigInt,
    y: BigInt,
}

impl Curve {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Result<Self> {
        let (x, y) = (x.into(), y.into());
        if x.is_zero() && y.is_zero() {
            return Err(Error::ZeroCurve);
        }
        if !is_coprime(&x, &y) {
            return Err(Error::NotPrimitive(x, y));
        }
        Ok(Curve { x, y })
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    /// The same unoriented curve with positive second coordinate.
    pub fn unoriented(&self) -> Curve {
        let (x, y) = sign_normalize(self.x.clone(), self.y.clone());
        Curve { x, y }
    }

    /// Interprets the curve as a one-sided boundary slope.
    pub fn to_slope(&self) -> Result<BoundarySlope> {
        BoundarySlope::new(self.x.clone(), self.y.clone())
    }
}

impl Neg for Curve {
    type Output = Curve;
    fn neg(self) -> Curve {
        Curve {
            x: -self.x,
            y: -self.y,
        }
    }
}

impl IntPair for Curve {
    fn first(&self) -> &BigInt {
        &self.x
    }
    fn second(&self) -> &BigInt {
        &self.y
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// An element of SL(2,Z), acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl UnimodularMatrix {
    /// Row-major `[[a, b], [c, d]]`; rejects determinant other than 1.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(Error::NotUnimodular(det));
        }
        Ok(UnimodularMatrix { a, b, c, d })
    }

    pub fn identity() -> Self {
        UnimodularMatrix {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn inverse(&self) -> Self {
        UnimodularMatrix {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    /// Matrix product `self * rhs`.
    pub fn compose(&self, rhs: &UnimodularMatrix) -> Self {
        UnimodularMatrix {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

/// Reduces a raw pair to a boundary slope of a one-sided surface.
pub fn reduce_slope(u: impl Into<BigInt>, v: impl Into<BigInt>) -> Result<BoundarySlope> {
    let (u, v) = (u.into(), v.into());
    if u.is_zero() && v.is_zero() {
        return Err(Error::ZeroCurve);
    }
    let g = u.gcd(&v);
    let (u, v) = sign_normalize(u / &g, v / &g);
    if is_odd(&u) {
        return Err(Error::NotOneSidedSlope(u, v));
    }
    Ok(BoundarySlope { u, v })
}

/// `(2p, q) -> p/q`.
pub fn vertex_of_slope(s: &BoundarySlope) -> TreeVertex {
    TreeVertex {
        p: &s.u / 2,
        q: s.v.clone(),
    }
}

/// `p/q -> (2p, q)`.
pub fn slope_of_vertex(v: &TreeVertex) -> BoundarySlope {
    BoundarySlope {
        u: &v.p * 2,
        v: v.q.clone(),
    }
}

/// `x.first * y.second - y.first * x.second`.
pub fn det<X: IntPair + ?Sized, Y: IntPair + ?Sized>(x: &X, y: &Y) -> BigInt {
    x.first() * y.second() - y.first() * x.second()
}

/// Geometric intersection number of two slopes on the torus.
pub fn intersection_number(s1: &BoundarySlope, s2: &BoundarySlope) -> BigInt {
    det(s1, s2).abs()
}

/// True when `(p, q)` names a vertex of the Moebius band tree.
pub fn is_tree_vertex(p: &BigInt, q: &BigInt) -> bool {
    !(p.is_zero() && q.is_zero()) && is_coprime(p, q) && is_odd(q)
}

/// The two Farey neighbours spanning the largest ideal triangle containing `v`.
///
/// Returned left to right for positive `v` and as the mirror image of that
/// pair for negative `v`, so `parent1 + parent2 = v` componentwise.
pub fn farey_parents(v: &FareyVertex) -> Result<(FareyVertex, FareyVertex)> {
    if v.p.is_zero() || v.q.is_zero() {
        return Err(Error::NoParents(v.to_string()));
    }
    let p = v.p.abs();
    let q = &v.q;
    // Left parent a/b solves p*b - a*q = 1 with 0 < b <= q.
    let (a, b) = if q.is_one() {
        (&p - 1, BigInt::one())
    } else {
        let b = p.extended_gcd(q).x.mod_floor(q);
        let a: BigInt = (&p * &b - 1) / q;
        (a, b)
    };
    let left = (a.clone(), b.clone());
    let right = (&p - a, q - b);
    let make = |(x, y): (BigInt, BigInt)| {
        let x = if v.p.is_negative() { -x } else { x };
        let (x, y) = sign_normalize(x, y);
        FareyVertex { p: x, q: y }
    };
    Ok((make(left), make(right)))
}

/// Matrix-vector product; primitivity is preserved by unimodularity.
pub fn apply_matrix(m: &UnimodularMatrix, curve: &Curve) -> Curve {
    Curve {
        x: &m.a * &curve.x + &m.b * &curve.y,
        y: &m.c * &curve.x + &m.d * &curve.y,
    }
}

/// A determinant-one matrix sending `curve` to the meridian `(0, 1)`.
///
/// The matrix is `[[y, -x], [r, s]]` with `r*x + s*y = 1`; the solution with
/// `s` in `(-|x|, 0]` is chosen (`s = 1` when `x = 0`).
pub fn matrix_sending_to_meridian(curve: &Curve) -> UnimodularMatrix {
    let (x, y) = (&curve.x, &curve.y);
    let (r, s) = if x.is_zero() {
        // y = ±1 by primitivity.
        (BigInt::zero(), y.clone())
    } else {
        let e = x.extended_gcd(y);
        // gcd is 1 by primitivity, possibly returned as -1.
        let (r0, s0) = if e.gcd.is_negative() {
            (-e.x, -e.y)
        } else {
            (e.x, e.y)
        };
        // General solution (r0 + k*y, s0 - k*x); pick s in (-|x|, 0].
        let ax = x.abs();
        let target = -(-&s0).mod_floor(&ax);
        let k = (&s0 - &target) / x;
        (r0 + &k * y, target)
    };
    UnimodularMatrix {
        a: y.clone(),
        b: -x,
        c: r,
        d: s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn fv(p: i64, q: i64) -> FareyVertex {
        FareyVertex::new(p, q).unwrap()
    }

    #[test]
    fn reduce_slope_examples() {
        assert_eq!(reduce_slope(10, 3).unwrap(), BoundarySlope::new(10, 3).unwrap());
        let s = reduce_slope(-4, -1).unwrap();
        assert_eq!((s.u(), s.v()), (&big(4), &big(1)));
        assert!(matches!(reduce_slope(3, 2), Err(Error::NotOneSidedSlope(..))));
        assert_eq!(reduce_slope(0, 0), Err(Error::ZeroCurve));
        assert_eq!(reduce_slope(20, 6).unwrap(), BoundarySlope::new(10, 3).unwrap());
        // (2,0) reduces to (1,0): odd first coordinate.
        assert!(matches!(reduce_slope(2, 0), Err(Error::NotOneSidedSlope(..))));
    }

    #[test]
    fn slope_constructor_rejects_unreduced_input() {
        assert!(matches!(BoundarySlope::new(20, 6), Err(Error::NotPrimitive(..))));
        assert!(matches!(TreeVertex::new(2, 4), Err(Error::NotPrimitive(..))));
        assert!(matches!(TreeVertex::new(1, 0), Err(Error::NotTreeVertex(..))));
        assert!(matches!(TreeVertex::new(1, 2), Err(Error::NotTreeVertex(..))));
    }

    #[test]
    fn vertex_slope_conversion() {
        let cases = [((10, 3), (5, 3)), ((0, 1), (0, 1)), ((4, 1), (2, 1))];
        for ((u, v), (p, q)) in cases {
            let s = BoundarySlope::new(u, v).unwrap();
            let vert = vertex_of_slope(&s);
            assert_eq!(vert, TreeVertex::new(p, q).unwrap());
            assert_eq!(slope_of_vertex(&vert), s);
        }
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&fv(5, 3), &fv(2, 1)), big(-1));
        assert_eq!(det(&FareyVertex::infinity(), &fv(0, 1)), big(1));
        assert_eq!(det(&fv(5, 3), &fv(5, 3)), big(0));
    }

    #[test]
    fn intersection_number_examples() {
        let s = |u, v| BoundarySlope::new(u, v).unwrap();
        assert_eq!(intersection_number(&s(10, 3), &s(4, 1)), big(2));
        assert_eq!(intersection_number(&s(0, 1), &s(2, 1)), big(2));
        assert_eq!(intersection_number(&s(0, 1), &s(0, 1)), big(0));
    }

    #[test]
    fn is_tree_vertex_examples() {
        assert!(!is_tree_vertex(&big(1), &big(2)));
        assert!(is_tree_vertex(&big(5), &big(3)));
        assert!(!is_tree_vertex(&big(1), &big(0)));
        assert!(is_tree_vertex(&big(-5), &big(-3)));
        assert!(!is_tree_vertex(&big(0), &big(0)));
    }

    #[test]
    fn farey_parent_examples() {
        assert_eq!(farey_parents(&fv(5, 3)).unwrap(), (fv(3, 2), fv(2, 1)));
        assert_eq!(farey_parents(&fv(1, 1)).unwrap(), (fv(0, 1), FareyVertex::infinity()));
        assert_eq!(farey_parents(&fv(-5, 3)).unwrap(), (fv(-3, 2), fv(-2, 1)));
        assert!(matches!(farey_parents(&fv(0, 1)), Err(Error::NoParents(_))));
        assert!(matches!(farey_parents(&FareyVertex::infinity()), Err(Error::NoParents(_))));
    }

    #[test]
    fn farey_parents_of_even_denominator() {
        // 3/4 = 1/1 (+) 2/3
        let (l, r) = farey_parents(&fv(3, 4)).unwrap();
        assert_eq!((l, r), (fv(2, 3), fv(1, 1)));
    }

    #[test]
    fn apply_matrix_examples() {
        let c = Curve::new(2, 1).unwrap();
        let m = |a, b, cc, d| UnimodularMatrix::new(a, b, cc, d).unwrap();
        assert_eq!(apply_matrix(&UnimodularMatrix::identity(), &c), c);
        assert_eq!(apply_matrix(&m(1, 0, 1, 1), &c), Curve::new(2, 3).unwrap());
        let rotated = apply_matrix(&m(0, -1, 1, 0), &c);
        assert_eq!(rotated, Curve::new(-1, 2).unwrap());
        assert!(matches!(rotated.to_slope(), Err(Error::NotOneSidedSlope(..))));
    }

    #[test]
    fn unimodular_rejects_bad_determinant() {
        assert_eq!(
            UnimodularMatrix::new(2, 0, 0, 1),
            Err(Error::NotUnimodular(big(2)))
        );
    }

    #[test]
    fn meridian_normalizer_examples() {
        let m = |a, b, cc, d| UnimodularMatrix::new(a, b, cc, d).unwrap();
        let c = |x, y| Curve::new(x, y).unwrap();
        assert_eq!(matrix_sending_to_meridian(&c(0, 1)), UnimodularMatrix::identity());
        assert_eq!(matrix_sending_to_meridian(&c(1, 0)), m(0, -1, 1, 0));
        assert_eq!(matrix_sending_to_meridian(&c(2, 1)), m(1, -2, 1, -1));
        assert_eq!(matrix_sending_to_meridian(&c(0, -1)), m(-1, 0, 0, -1));
    }

    #[test]
    fn meridian_normalizer_exhaustive_to_100() {
        let target = c01();
        for x in -100i64..=100 {
            for y in -100i64..=100 {
                let Ok(curve) = Curve::new(x, y) else { continue };
                let m = matrix_sending_to_meridian(&curve);
                let [a, b, cc, d] = m.entries();
                assert!((a * d - b * cc).is_one());
                assert_eq!(apply_matrix(&m, &curve), target, "curve ({x},{y})");
            }
        }
    }

    fn c01() -> Curve {
        Curve::new(0, 1).unwrap()
    }

    #[test]
    fn zero_curve_rejected() {
        assert_eq!(Curve::new(0, 0), Err(Error::ZeroCurve));
        assert!(matches!(Curve::new(4, 6), Err(Error::NotPrimitive(..))));
    }
}

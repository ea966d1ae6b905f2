//! Boundary compression, Moebius band addition and the decomposition of a
//! one-sided surface into bands and concentric torus x I regions.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::slope::{
    apply_matrix, det, matrix_sending_to_meridian, slope_of_vertex, vertex_of_slope,
    BoundarySlope, Curve, UnimodularMatrix,
};
use crate::tree::{neighbors, parent, path_between, path_to_root};

/// One Moebius band, recorded as the difference `(a, b)` of the boundary
/// slopes on either side of it. Both entries are even.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BandDescriptor {
    pub a: BigInt,
    pub b: BigInt,
}

impl BandDescriptor {
    /// The band between two consecutive slopes of a geodesic, `outer - inner`.
    pub fn between(inner: &BoundarySlope, outer: &BoundarySlope) -> Self {
        BandDescriptor {
            a: outer.u() - inner.u(),
            b: outer.v() - inner.v(),
        }
    }
}

impl fmt::Display for BandDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// The geodesic slope sequence of a surface in torus x I, in coordinates
/// where the inner boundary slope is the meridian `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionDecomposition {
    pub inner: Curve,
    pub outer: Curve,
    /// Sends `inner` to `(0, 1)` and `outer` to `slopes.last()` (up to sign).
    pub normalizer: UnimodularMatrix,
    pub slopes: Vec<BoundarySlope>,
    pub bands: Vec<BandDescriptor>,
    pub genus: usize,
}

/// Removes one Moebius band: the slope of the parent vertex.
///
/// The resulting slope is unique even when several inequivalent bands
/// compress to it.
pub fn compress(s: &BoundarySlope) -> Result<BoundarySlope> {
    let v = vertex_of_slope(s);
    if v.is_root() {
        return Err(Error::BoundaryIncompressible);
    }
    Ok(slope_of_vertex(&parent(&v)?))
}

/// Slopes obtained by attaching one more band, restricted to child vertices
/// with `max(|p|, q) <= bound`.
pub fn add_band(s: &BoundarySlope, bound: u64) -> Vec<BoundarySlope> {
    let v = vertex_of_slope(s);
    let up = parent(&v).ok();
    neighbors(&v, bound)
        .into_iter()
        .filter(|w| Some(w) != up.as_ref())
        .map(|w| slope_of_vertex(&w))
        .collect()
}

/// Bands of the surface bounded by `s`, meridian side first. The bands sum
/// with `(0, 1)` to `s`.
pub fn band_decomposition(s: &BoundarySlope) -> Vec<BandDescriptor> {
    let slopes: Vec<BoundarySlope> = path_to_root(&vertex_of_slope(s))
        .vertices()
        .iter()
        .rev()
        .map(slope_of_vertex)
        .collect();
    bands_of(&slopes)
}

fn bands_of(slopes: &[BoundarySlope]) -> Vec<BandDescriptor> {
    slopes
        .windows(2)
        .map(|w| BandDescriptor::between(&w[0], &w[1]))
        .collect()
}

/// Decomposes the surface in torus x I with the given inner and outer
/// boundary curves into its concentric once-punctured band regions.
///
/// The inner curve is moved to `(0, 1)`; the remaining freedom, a twist along
/// the meridian `(u, v) -> (u, v + k*u)`, is fixed by putting the outer slope
/// into `1 <= v < |u|`. The result depends only on the pair of curves up to a
/// simultaneous change of coordinates.
pub fn region_decomposition(inner: &Curve, outer: &Curve) -> Result<RegionDecomposition> {
    let crossing = det(inner, outer);
    if crossing.is_odd() {
        return Err(Error::NotZ2Compatible(crossing.abs()));
    }
    let to_meridian = matrix_sending_to_meridian(inner);
    let moved = apply_matrix(&to_meridian, outer);
    let u = moved.x().clone();
    let (twist, target) = if u.is_zero() {
        (BigInt::zero(), BoundarySlope::meridian())
    } else {
        let span = u.abs();
        let v = moved.y().mod_floor(&span);
        let k = (&v - moved.y()) / &u;
        let slope = BoundarySlope::new(u.clone(), v).expect("u even, v coprime to u");
        (k, slope)
    };
    let normalizer = UnimodularMatrix::new(1, 0, twist, 1)
        .expect("meridian twist")
        .compose(&to_meridian);
    let slopes: Vec<BoundarySlope> = path_between(
        &vertex_of_slope(&BoundarySlope::meridian()),
        &vertex_of_slope(&target),
    )
    .vertices()
    .iter()
    .map(slope_of_vertex)
    .collect();
    let bands = bands_of(&slopes);
    Ok(RegionDecomposition {
        inner: inner.clone(),
        outer: outer.clone(),
        normalizer,
        genus: bands.len(),
        slopes,
        bands,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::slope::intersection_number;
    use crate::tree::genus;

    fn s(u: i64, v: i64) -> BoundarySlope {
        BoundarySlope::new(u, v).unwrap()
    }

    fn c(x: i64, y: i64) -> Curve {
        Curve::new(x, y).unwrap()
    }

    fn band(a: i64, b: i64) -> BandDescriptor {
        BandDescriptor {
            a: a.into(),
            b: b.into(),
        }
    }

    #[test]
    fn compress_examples() {
        assert_eq!(compress(&s(10, 3)).unwrap(), s(4, 1));
        assert_eq!(compress(&s(2, 1)).unwrap(), s(0, 1));
        assert_eq!(compress(&s(0, 1)), Err(Error::BoundaryIncompressible));
    }

    #[test]
    fn add_band_examples() {
        assert!(add_band(&s(4, 1), 5).contains(&s(10, 3)));
        let mut root = add_band(&s(0, 1), 1);
        root.sort_by(|x, y| x.u().cmp(y.u()));
        assert_eq!(root, vec![s(-2, 1), s(2, 1)]);
        for w in add_band(&s(4, 1), 25) {
            assert_eq!(compress(&w).unwrap(), s(4, 1));
        }
    }

    #[test]
    fn band_decomposition_examples() {
        assert_eq!(
            band_decomposition(&s(10, 3)),
            vec![band(2, 0), band(2, 0), band(6, 2)]
        );
        assert_eq!(band_decomposition(&s(2, 1)), vec![band(2, 0)]);
        assert!(band_decomposition(&s(0, 1)).is_empty());
    }

    #[test]
    fn bands_are_even_and_telescope() {
        for u in (-40i64..=40).step_by(2) {
            for v in (1i64..=41).step_by(2) {
                let Ok(slope) = BoundarySlope::new(u, v) else { continue };
                let bands = band_decomposition(&slope);
                assert_eq!(BigInt::from(bands.len()), genus(&slope));
                let (mut a, mut b) = (BigInt::zero(), BigInt::from(1));
                for band in &bands {
                    assert!(band.a.is_even() && band.b.is_even());
                    a += &band.a;
                    b += &band.b;
                }
                assert_eq!((&a, &b), (slope.u(), slope.v()));
            }
        }
    }

    #[test]
    fn region_examples() {
        let r = region_decomposition(&c(0, 1), &c(10, 3)).unwrap();
        assert_eq!(r.slopes, vec![s(0, 1), s(2, 1), s(4, 1), s(10, 3)]);
        assert_eq!(r.genus, 3);
        assert_eq!(r.normalizer, UnimodularMatrix::identity());

        let r = region_decomposition(&c(3, 7), &c(3, 7)).unwrap();
        assert_eq!(r.slopes, vec![s(0, 1)]);
        assert_eq!(r.genus, 0);

        let r = region_decomposition(&c(1, 0), &c(1, 2)).unwrap();
        assert_eq!(r.slopes.last().unwrap(), &s(-2, 1));
        assert_eq!(r.genus, 1);
    }

    #[test]
    fn region_rejects_odd_intersection() {
        assert!(matches!(
            region_decomposition(&c(0, 1), &c(1, 1)),
            Err(Error::NotZ2Compatible(_))
        ));
    }

    #[test]
    fn region_normalizer_maps_curves() {
        let inner = c(3, 5);
        let outer = c(7, 11);
        let r = region_decomposition(&inner, &outer).unwrap();
        assert_eq!(apply_matrix(&r.normalizer, &inner), c(0, 1));
        let last = r.slopes.last().unwrap().curve();
        let image = apply_matrix(&r.normalizer, &outer);
        assert!(image == last || -image == last);
        for w in r.slopes.windows(2) {
            assert_eq!(intersection_number(&w[0], &w[1]), BigInt::from(2));
        }
    }
}

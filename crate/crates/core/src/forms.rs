//! Integral binary quadratic forms `x2*x^2 + xy*x*y + y2*y^2` with the
//! reductions needed to decide which of 0, 1, -1 a form represents.
//!
//! Positive definite forms are Gauss reduced. Indefinite forms of nonsquare
//! discriminant are brought to a reduced form by the normalized rho operator;
//! reduced forms of one proper equivalence class make up a single cycle
//! under rho, and walking that cycle is the periodic part of the form's
//! river in Conway's topograph.

use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The form `x2*x^2 + xy*x*y + y2*y^2` and its discriminant `xy^2 - 4*x2*y2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiscForm {
    pub x2: BigInt,
    pub xy: BigInt,
    pub y2: BigInt,
    pub disc: BigInt,
}

/// A 2x2 integer matrix `[[m11, m12], [m21, m22]]` of determinant one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Substitution {
    pub m11: BigInt,
    pub m12: BigInt,
    pub m21: BigInt,
    pub m22: BigInt,
}

impl Substitution {
    pub fn identity() -> Self {
        Self::from_i64(1, 0, 0, 1)
    }

    fn from_i64(m11: i64, m12: i64, m21: i64, m22: i64) -> Self {
        Substitution {
            m11: m11.into(),
            m12: m12.into(),
            m21: m21.into(),
            m22: m22.into(),
        }
    }

    fn then(&self, rhs: &Substitution) -> Substitution {
        Substitution {
            m11: &self.m11 * &rhs.m11 + &self.m12 * &rhs.m21,
            m12: &self.m11 * &rhs.m12 + &self.m12 * &rhs.m22,
            m21: &self.m21 * &rhs.m11 + &self.m22 * &rhs.m21,
            m22: &self.m21 * &rhs.m12 + &self.m22 * &rhs.m22,
        }
    }

    pub fn apply(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (&self.m11 * x + &self.m12 * y, &self.m21 * x + &self.m22 * y)
    }
}

impl DiscForm {
    pub fn new(x2: BigInt, xy: BigInt, y2: BigInt) -> Self {
        let disc = &xy * &xy - (&x2 * &y2) * 4;
        DiscForm { x2, xy, y2, disc }
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.x2 * x * x + &self.xy * x * y + &self.y2 * y * y
    }

    pub fn negate(&self) -> DiscForm {
        DiscForm {
            x2: -&self.x2,
            xy: -&self.xy,
            y2: -&self.y2,
            disc: self.disc.clone(),
        }
    }

    /// The form `g(X, Y) = f(m11 X + m12 Y, m21 X + m22 Y)`.
    pub(crate) fn substitute(&self, m: &Substitution) -> DiscForm {
        let x2 = self.eval(&m.m11, &m.m21);
        let y2 = self.eval(&m.m12, &m.m22);
        let xy = (&self.x2 * &m.m11 * &m.m12) * 2
            + &self.xy * (&m.m11 * &m.m22 + &m.m12 * &m.m21)
            + (&self.y2 * &m.m21 * &m.m22) * 2;
        DiscForm {
            x2,
            xy,
            y2,
            disc: self.disc.clone(),
        }
    }
}

impl fmt::Display for DiscForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}) disc {}", self.x2, self.xy, self.y2, self.disc)
    }
}

/// Gauss reduction of a positive definite form: returns `(g, m)` with
/// `g = f∘m` and `|g.xy| <= g.x2 <= g.y2`.
pub(crate) fn reduce_definite(f: &DiscForm) -> (DiscForm, Substitution) {
    debug_assert!(f.disc.is_negative() && f.x2.is_positive());
    let mut g = f.clone();
    let mut m = Substitution::identity();
    let swap = Substitution::from_i64(0, -1, 1, 0);
    loop {
        // Translate xy into (-x2, x2].
        let two_a = &g.x2 * 2;
        let k = (&g.x2 - &g.xy).div_floor(&two_a);
        if !k.is_zero() {
            let t = Substitution {
                m11: BigInt::one(),
                m12: k,
                m21: BigInt::zero(),
                m22: BigInt::one(),
            };
            g = g.substitute(&t);
            m = m.then(&t);
        }
        if g.x2 > g.y2 || (g.x2 == g.y2 && g.xy.is_negative()) {
            g = g.substitute(&swap);
            m = m.then(&swap);
        } else {
            return (g, m);
        }
    }
}

/// Primitive vectors where a positive definite form takes the value 1.
pub(crate) fn definite_units(f: &DiscForm) -> Vec<(BigInt, BigInt)> {
    let (g, m) = reduce_definite(f);
    let d = f.disc.abs();
    // 4*a*g = (2ax + by)^2 + |D| y^2, so g <= 1 forces y^2 <= 4a/|D|.
    let y_max = Roots::sqrt(&(&g.x2 * BigInt::from(4) / &d));
    let x_max = Roots::sqrt(&(&g.y2 * BigInt::from(4) / &d));
    let (x_max, y_max) = (x_max.to_i64().unwrap_or(1), y_max.to_i64().unwrap_or(1));
    let mut out = Vec::new();
    for x in -x_max..=x_max {
        for y in -y_max..=y_max {
            if x.gcd(&y) != 1 {
                continue;
            }
            let (bx, by) = (BigInt::from(x), BigInt::from(y));
            if g.eval(&bx, &by).is_one() {
                out.push(m.apply(&bx, &by));
            }
        }
    }
    out
}

fn is_reduced_indefinite(f: &DiscForm, root: &BigInt) -> bool {
    let two_a = f.x2.abs() * 2;
    f.xy.is_positive() && &f.xy <= root && &two_a + &f.xy > *root && &two_a - &f.xy <= *root
}

/// One application of the normalized rho operator.
fn rho(f: &DiscForm, root: &BigInt) -> (DiscForm, Substitution) {
    let c = &f.y2;
    let abs_c = c.abs();
    let modulus = &abs_c * 2;
    // r ≡ -b (mod 2|c|), in (-|c|, |c|] when |c| > sqrt(D), else in (sqrt(D) - 2|c|, sqrt(D)).
    let top = if abs_c > *root { abs_c.clone() } else { root.clone() };
    let r = &top - (&top + &f.xy).mod_floor(&modulus);
    let s = (&r + &f.xy) / (c * 2);
    let sub = Substitution {
        m11: BigInt::zero(),
        m12: -BigInt::one(),
        m21: BigInt::one(),
        m22: s,
    };
    let next = f.substitute(&sub);
    debug_assert_eq!(next.xy, r);
    (next, sub)
}

/// The cycle of reduced forms equivalent to an indefinite form, each paired
/// with the substitution carrying the original form to it.
pub(crate) struct ReducedCycle {
    pub forms: Vec<(DiscForm, Substitution)>,
}

pub(crate) fn reduced_cycle(f: &DiscForm) -> Result<ReducedCycle> {
    let root = Roots::sqrt(&f.disc);
    debug_assert!(f.disc.is_positive() && &root * &root != f.disc);
    // Reduction takes O(log) steps; the cap only guards against a logic error.
    let reduce_cap = 64 + 4 * f.disc.bits().max(f.x2.bits()).max(f.y2.bits());
    let mut g = f.clone();
    let mut m = Substitution::identity();
    let mut steps = 0u64;
    while !is_reduced_indefinite(&g, &root) {
        if steps >= reduce_cap {
            return Err(Error::CycleBoundExceeded(reduce_cap));
        }
        let (next, sub) = rho(&g, &root);
        g = next;
        m = m.then(&sub);
        steps += 1;
    }
    // Reduced forms have |x2|, xy < sqrt(D): at most 2D of them.
    let cycle_cap = f.disc.to_u64().map_or(u64::MAX, |d| d.saturating_mul(2).saturating_add(2));
    let start = g.clone();
    let mut forms = vec![(g.clone(), m.clone())];
    loop {
        let (next, sub) = rho(&g, &root);
        g = next;
        m = m.then(&sub);
        if g == start {
            return Ok(ReducedCycle { forms });
        }
        if forms.len() as u64 >= cycle_cap {
            return Err(Error::CycleBoundExceeded(cycle_cap));
        }
        forms.push((g.clone(), m.clone()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(a: i64, b: i64, c: i64) -> DiscForm {
        DiscForm::new(a.into(), b.into(), c.into())
    }

    #[test]
    fn substitution_matches_evaluation() {
        let f = form(-4, 3, 7);
        let m = Substitution::from_i64(2, 1, 5, 3);
        let g = f.substitute(&m);
        assert_eq!(g.disc, f.disc);
        for x in -3i64..=3 {
            for y in -3i64..=3 {
                let (bx, by) = (BigInt::from(x), BigInt::from(y));
                let (mx, my) = m.apply(&bx, &by);
                assert_eq!(g.eval(&bx, &by), f.eval(&mx, &my));
            }
        }
        assert_eq!(&g.xy * &g.xy - &g.x2 * &g.y2 * 4, f.disc);
    }

    #[test]
    fn definite_reduction_reaches_small_form() {
        // x^2 + y^2 under a large substitution.
        let f = form(1, 0, 1).substitute(&Substitution::from_i64(13, 8, 21, 13));
        let (g, m) = reduce_definite(&f);
        assert_eq!(g, form(1, 0, 1));
        assert_eq!(f.substitute(&m), g);
        assert_eq!(definite_units(&f).len(), 4);
        assert_eq!(definite_units(&form(1, 1, 1)).len(), 6);
    }

    #[test]
    fn cycle_of_golden_form_contains_both_units() {
        // -x^2 + xy + y^2 has discriminant 5.
        let cyc = reduced_cycle(&form(-1, 1, 1)).unwrap();
        let firsts: Vec<BigInt> = cyc.forms.iter().map(|(g, _)| g.x2.clone()).collect();
        assert!(firsts.contains(&BigInt::from(1)));
        assert!(firsts.contains(&BigInt::from(-1)));
        for (g, m) in &cyc.forms {
            assert!(is_reduced_indefinite(g, &BigInt::from(2)));
            assert_eq!(&form(-1, 1, 1).substitute(m), g);
        }
    }

    #[test]
    fn cycle_of_even_form_avoids_units() {
        // 2(y^2 - 2x^2), discriminant 32.
        let cyc = reduced_cycle(&form(-4, 0, 2)).unwrap();
        assert!(cyc.forms.iter().all(|(g, _)| g.x2.abs() != BigInt::one()));
    }
}

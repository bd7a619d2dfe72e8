//! Internal arithmetic back ends for the elimination routines.
//!
//! `Z` runs on [`Integer`], `Q` on [`Rational`], and `F_p` on machine words.
//! `Z/n` has no back end of its own: it is lifted to `Z`.

use std::fmt::Debug;

use malachite::base::num::arithmetic::traits::{DivRem, ExtendedGcd, Mod};
use malachite::base::num::basic::traits::{One, Zero};
use malachite::{Integer, Rational};

use super::ring::{scalar_to_integer, Scalar};

pub(crate) trait Domain: Clone + Send + Sync {
    type E: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn is_unit(&self, a: &Self::E) -> bool;
    /// Inverse of a unit.
    fn inv(&self, a: &Self::E) -> Self::E;
    /// Euclidean division; over fields the remainder is always zero.
    fn div_rem(&self, a: &Self::E, b: &Self::E) -> (Self::E, Self::E);
    /// `|a| < |b|` for the Euclidean size.
    fn smaller(&self, a: &Self::E, b: &Self::E) -> bool;
    /// `(g, s, t)` with `g = s a + t b` a gcd.
    fn gcdext(&self, a: &Self::E, b: &Self::E) -> (Self::E, Self::E, Self::E);
    /// Unit `u` such that `u * a` is the canonical associate.
    fn normalizing_unit(&self, a: &Self::E) -> Self::E;
    fn from_scalar(&self, v: &Scalar) -> Self::E;
    fn to_scalar(&self, v: &Self::E) -> Scalar;

    /// Division with a canonical remainder: over `Z` it lies in `[0, |b|)`.
    fn div_rem_canonical(&self, a: &Self::E, b: &Self::E) -> (Self::E, Self::E) {
        self.div_rem(a, b)
    }

    fn divides(&self, a: &Self::E, b: &Self::E) -> bool {
        if self.is_zero(a) {
            return self.is_zero(b);
        }
        self.is_zero(&self.div_rem(b, a).1)
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct ZZ;

impl Domain for ZZ {
    type E = Integer;

    fn zero(&self) -> Integer {
        Integer::ZERO
    }
    fn one(&self) -> Integer {
        Integer::ONE
    }
    fn is_zero(&self, a: &Integer) -> bool {
        *a == 0u32
    }
    fn add(&self, a: &Integer, b: &Integer) -> Integer {
        a + b
    }
    fn sub(&self, a: &Integer, b: &Integer) -> Integer {
        a - b
    }
    fn mul(&self, a: &Integer, b: &Integer) -> Integer {
        a * b
    }
    fn neg(&self, a: &Integer) -> Integer {
        -a
    }
    fn is_unit(&self, a: &Integer) -> bool {
        *a == 1u32 || *a == -1i32
    }
    fn inv(&self, a: &Integer) -> Integer {
        a.clone()
    }
    fn div_rem(&self, a: &Integer, b: &Integer) -> (Integer, Integer) {
        // round to nearest so that |r| <= |b| / 2
        let (q, r) = a.div_rem(b);
        let twice = Integer::from(r.unsigned_abs_ref().clone()) * Integer::from(2);
        if twice > Integer::from(b.unsigned_abs_ref().clone()) {
            let same_sign = (r > 0u32) == (*b > 0u32);
            if same_sign {
                (q + Integer::ONE, r - b)
            } else {
                (q - Integer::ONE, r + b)
            }
        } else {
            (q, r)
        }
    }
    fn smaller(&self, a: &Integer, b: &Integer) -> bool {
        a.unsigned_abs_ref() < b.unsigned_abs_ref()
    }
    fn div_rem_canonical(&self, a: &Integer, b: &Integer) -> (Integer, Integer) {
        let m = Integer::from(b.unsigned_abs_ref().clone());
        let r = a.mod_op(&m);
        let q = (a - &r).div_rem(b).0;
        (q, r)
    }
    fn gcdext(&self, a: &Integer, b: &Integer) -> (Integer, Integer, Integer) {
        let (g, s, t) = a.clone().extended_gcd(b.clone());
        (Integer::from(g), s, t)
    }
    fn normalizing_unit(&self, a: &Integer) -> Integer {
        if *a < 0u32 {
            Integer::from(-1)
        } else {
            Integer::ONE
        }
    }
    fn from_scalar(&self, v: &Scalar) -> Integer {
        scalar_to_integer(v).expect("non-integral scalar in Z back end")
    }
    fn to_scalar(&self, v: &Integer) -> Scalar {
        Rational::from(v.clone())
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct QQ;

impl Domain for QQ {
    type E = Rational;

    fn zero(&self) -> Rational {
        Rational::ZERO
    }
    fn one(&self) -> Rational {
        Rational::ONE
    }
    fn is_zero(&self, a: &Rational) -> bool {
        *a == 0u32
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn is_unit(&self, a: &Rational) -> bool {
        *a != 0u32
    }
    fn inv(&self, a: &Rational) -> Rational {
        Rational::ONE / a
    }
    fn div_rem(&self, a: &Rational, b: &Rational) -> (Rational, Rational) {
        (a / b, Rational::ZERO)
    }
    fn smaller(&self, a: &Rational, b: &Rational) -> bool {
        // prefer small heights to limit growth
        let h = |x: &Rational| x.numerator_ref() + x.denominator_ref();
        *a != 0u32 && (*b == 0u32 || h(a) < h(b))
    }
    fn gcdext(&self, a: &Rational, b: &Rational) -> (Rational, Rational, Rational) {
        if *a != 0u32 {
            (Rational::ONE, Rational::ONE / a, Rational::ZERO)
        } else if *b != 0u32 {
            (Rational::ONE, Rational::ZERO, Rational::ONE / b)
        } else {
            (Rational::ZERO, Rational::ONE, Rational::ZERO)
        }
    }
    fn normalizing_unit(&self, a: &Rational) -> Rational {
        if *a == 0u32 {
            Rational::ONE
        } else {
            Rational::ONE / a
        }
    }
    fn from_scalar(&self, v: &Scalar) -> Rational {
        v.clone()
    }
    fn to_scalar(&self, v: &Rational) -> Scalar {
        v.clone()
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        r
    }
}

impl Domain for Fp {
    type E = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.p as u128 - *b as u128) % self.p as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn inv(&self, a: &u64) -> u64 {
        self.pow(*a, self.p - 2)
    }
    fn div_rem(&self, a: &u64, b: &u64) -> (u64, u64) {
        (self.mul(a, &self.inv(b)), 0)
    }
    fn smaller(&self, a: &u64, b: &u64) -> bool {
        *a != 0 && *b == 0
    }
    fn gcdext(&self, a: &u64, b: &u64) -> (u64, u64, u64) {
        if *a != 0 {
            (1, self.inv(a), 0)
        } else if *b != 0 {
            (1, 0, self.inv(b))
        } else {
            (0, 1, 0)
        }
    }
    fn normalizing_unit(&self, a: &u64) -> u64 {
        if *a == 0 {
            1
        } else {
            self.inv(a)
        }
    }
    fn from_scalar(&self, v: &Scalar) -> u64 {
        let i = scalar_to_integer(v).expect("non-integral scalar in F_p back end");
        let r = i.mod_op(Integer::from(self.p));
        u64::try_from(&r).expect("residue fits")
    }
    fn to_scalar(&self, v: &u64) -> Scalar {
        Rational::from(*v)
    }
}

/// Sparse row: strictly increasing column indices, no explicit zeros.
pub(crate) type Row<E> = Vec<(usize, E)>;

pub(crate) fn dense_to_row<D: Domain>(d: &D, v: &[D::E]) -> Row<D::E> {
    v.iter().enumerate().filter(|(_, x)| !d.is_zero(x)).map(|(i, x)| (i, x.clone())).collect()
}

pub(crate) fn row_get<'a, E>(r: &'a Row<E>, col: usize) -> Option<&'a E> {
    r.binary_search_by_key(&col, |(c, _)| *c).ok().map(|i| &r[i].1)
}

/// `a * x + b * y` for sparse rows.
pub(crate) fn row_combine<D: Domain>(d: &D, a: &D::E, x: &Row<D::E>, b: &D::E, y: &Row<D::E>) -> Row<D::E> {
    let mut out = Vec::with_capacity(x.len().max(y.len()));
    let (mut i, mut j) = (0, 0);
    let a_zero = d.is_zero(a);
    let b_zero = d.is_zero(b);
    while i < x.len() || j < y.len() {
        let cx = x.get(i).map(|t| t.0);
        let cy = y.get(j).map(|t| t.0);
        let (col, v) = match (cx, cy) {
            (Some(p), Some(q)) if p == q => {
                let v = d.add(&d.mul(a, &x[i].1), &d.mul(b, &y[j].1));
                i += 1;
                j += 1;
                (p, v)
            }
            (Some(p), Some(q)) if p < q => {
                i += 1;
                if a_zero {
                    continue;
                }
                (p, d.mul(a, &x[i - 1].1))
            }
            (Some(p), None) => {
                i += 1;
                if a_zero {
                    continue;
                }
                (p, d.mul(a, &x[i - 1].1))
            }
            (_, Some(q)) => {
                j += 1;
                if b_zero {
                    continue;
                }
                (q, d.mul(b, &y[j - 1].1))
            }
            (None, None) => unreachable!(),
        };
        if !d.is_zero(&v) {
            out.push((col, v));
        }
    }
    out
}

/// `x - q * y`.
pub(crate) fn row_sub_mul<D: Domain>(d: &D, x: &Row<D::E>, q: &D::E, y: &Row<D::E>) -> Row<D::E> {
    row_combine(d, &d.one(), x, &d.neg(q), y)
}

pub(crate) fn row_scale<D: Domain>(d: &D, a: &D::E, x: &Row<D::E>) -> Row<D::E> {
    x.iter().map(|(c, v)| (*c, d.mul(a, v))).filter(|(_, v)| !d.is_zero(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nearest_division() {
        let z = ZZ;
        let (q, r) = z.div_rem(&Integer::from(7), &Integer::from(3));
        assert_eq!((q, r), (Integer::from(2), Integer::from(1)));
        let (q, r) = z.div_rem(&Integer::from(8), &Integer::from(3));
        assert_eq!((q, r), (Integer::from(3), Integer::from(-1)));
        let (q, r) = z.div_rem(&Integer::from(-8), &Integer::from(3));
        assert_eq!(&q * Integer::from(3) + &r, Integer::from(-8));
        assert!(r.unsigned_abs_ref() <= &malachite::Natural::from(1u32));
    }

    #[test]
    fn fp_inverse() {
        let f = Fp { p: 7 };
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
    }

    #[test]
    fn sparse_combine() {
        let z = ZZ;
        let x: Row<Integer> = vec![(0, Integer::from(1)), (2, Integer::from(2))];
        let y: Row<Integer> = vec![(1, Integer::from(1)), (2, Integer::from(1))];
        let r = row_sub_mul(&z, &x, &Integer::from(2), &y);
        assert_eq!(r, vec![(0, Integer::from(1)), (1, Integer::from(-2))]);
    }
}

//! Residue arithmetic modulo a small prime.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::{Error, Result};

/// An element of GF(P), stored as a residue in `[0, P)`.
///
/// `P` is expected to be a prime below 16 so that products fit comfortably
/// in `u16` before reduction; the rest of this crate instantiates `P = 5`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Fp<const P: u8>(u8);

/// The field this project actually computes over.
pub type F5 = Fp<5>;

impl<const P: u8> Fp<P> {
    pub const ZERO: Self = Fp(0);
    pub const ONE: Self = Fp(1 % P);

    #[inline]
    pub fn new(v: u8) -> Self {
        Fp(v % P)
    }

    /// Reduce an arbitrary signed integer.
    #[inline]
    pub fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u8)
    }

    #[inline]
    pub fn value(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = Self::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat: a^(P-2). Zero is a domain error.
    pub fn inv(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(P as u32 - 2))
    }
}

impl<const P: u8> Add for Fp<P> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u8> Sub for Fp<P> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u8> Mul for Fp<P> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u16 * rhs.0 as u16) % P as u16) as u8)
    }
}

impl<const P: u8> Neg for Fp<P> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u8> AddAssign for Fp<P> {
    #[inline]
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u8> SubAssign for Fp<P> {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u8> MulAssign for Fp<P> {
    #[inline]
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u8> Sum for Fp<P> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |a, b| a + b)
    }
}

impl<const P: u8> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u8> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all() -> impl Iterator<Item = F5> {
        (0u8..5).map(F5::new)
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(F5::new(1).inv().unwrap(), F5::new(1));
        assert_eq!(F5::new(2).inv().unwrap(), F5::new(3));
        assert_eq!(F5::new(4).inv().unwrap(), F5::new(4));
        assert!(F5::ZERO.inv().is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for a in all() {
            assert_eq!(a + (-a), F5::ZERO);
            if !a.is_zero() {
                assert_eq!(a * a.inv().unwrap(), F5::ONE);
            }
            for b in all() {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                for c in all() {
                    assert_eq!(a * (b + c), a * b + a * c);
                    assert_eq!((a * b) * c, a * (b * c));
                }
            }
        }
    }

    #[test]
    fn factorial_denominators_mod_5() {
        // 1!4! = 24 ≡ 4 and 2!3! = 12 ≡ 2; their inverses are 4 and 3.
        assert_eq!(F5::from_i64(24), F5::new(4));
        assert_eq!(F5::from_i64(12), F5::new(2));
        assert_eq!(F5::new(4).inv().unwrap(), F5::new(4));
        assert_eq!(F5::new(2).inv().unwrap(), F5::new(3));
    }

    #[test]
    fn from_i64_negative() {
        assert_eq!(F5::from_i64(-8), F5::new(2));
        assert_eq!(F5::from_i64(-5), F5::ZERO);
    }
}

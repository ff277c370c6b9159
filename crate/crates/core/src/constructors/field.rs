//! Prime-field scalars and 2×2 matrices, just enough to realize SL₂(p)
//! and PSL₂(p) as permutation groups.

use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{pow_mod, require_prime};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u64,
    modulus: u64,
}

impl FpScalar {
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        require_prime(modulus)?;
        Ok(Self::reduce(value, modulus))
    }

    fn reduce(value: i64, modulus: u64) -> Self {
        Self {
            value: value.rem_euclid(modulus as i64) as u64,
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse by Fermat; `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        (!self.is_zero()).then(|| Self {
            value: pow_mod(self.value, self.modulus - 2, self.modulus),
            modulus: self.modulus,
        })
    }

    fn lift(self, value: u64) -> Self {
        Self {
            value: value % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Add for FpScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        self.lift(self.value + rhs.value)
    }
}

impl Sub for FpScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for FpScalar {
    type Output = Self;
    fn neg(self) -> Self {
        self.lift(self.modulus - self.value)
    }
}

impl Mul for FpScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        self.lift(self.value * rhs.value)
    }
}

/// `[[a, b], [c, d]]`, acting on row vectors from the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: FpScalar,
    pub b: FpScalar,
    pub c: FpScalar,
    pub d: FpScalar,
}

impl Mat2 {
    pub fn new(entries: [[i64; 2]; 2], p: u64) -> Result<Self> {
        Ok(Mat2 {
            a: FpScalar::new(entries[0][0], p)?,
            b: FpScalar::new(entries[0][1], p)?,
            c: FpScalar::new(entries[1][0], p)?,
            d: FpScalar::new(entries[1][1], p)?,
        })
    }

    pub fn det(&self) -> FpScalar {
        self.a * self.d - self.b * self.c
    }

    /// `(x, y) · M`.
    pub fn apply(&self, (x, y): (FpScalar, FpScalar)) -> (FpScalar, FpScalar) {
        (x * self.a + y * self.c, x * self.b + y * self.d)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, r: Mat2) -> Mat2 {
        Mat2 {
            a: self.a * r.a + self.b * r.c,
            b: self.a * r.b + self.b * r.d,
            c: self.c * r.a + self.d * r.c,
            d: self.c * r.b + self.d * r.d,
        }
    }
}

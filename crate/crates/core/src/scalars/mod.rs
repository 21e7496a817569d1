//! Exact coefficient arithmetic.
//!
//! Two coefficient rings are provided. [`LaurentPoly`] is the generic ring
//! `Z[v, v^-1]`, and [`CycloScalar`] is the field `Q(q)` obtained by sending
//! `v` to a primitive `l`-th root of unity `q`. Algorithms that only need ring
//! operations are written against the [`Ring`] trait so they run in both.

mod cyclo;
mod gaussian;
mod laurent;
mod rational_poly;

pub use cyclo::{cyclotomic_polynomial, CycloScalar};
pub use gaussian::{gauss_binomial, poincare, quantum_factorial, quantum_integer};
pub use laurent::LaurentPoly;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element type of a coefficient ring.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn is_zero(&self) -> bool;
}

/// Scalars in which every nonzero element is invertible.
pub trait FieldScalar: Scalar {
    fn inverse(&self) -> Option<Self>;
}

/// A coefficient ring together with its distinguished element `q`.
///
/// Elements do not always carry enough information to build constants (a
/// cyclotomic zero needs to know `l`), so constants come from the ring value.
pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Scalar;

    fn from_int(&self, c: i64) -> Self::Elem;

    /// The image of `v^e`.
    fn q_pow(&self, e: i64) -> Self::Elem;

    /// Image of a Laurent polynomial under the structure map `Z[v, v^-1] -> R`.
    fn from_laurent(&self, p: &LaurentPoly) -> Self::Elem;

    fn zero(&self) -> Self::Elem {
        self.from_int(0)
    }

    fn one(&self) -> Self::Elem {
        self.from_int(1)
    }

    /// `q - q^-1`, the constant appearing in the quadratic relation.
    fn q_minus_q_inv(&self) -> Self::Elem {
        self.q_pow(1) - self.q_pow(-1)
    }

    /// `(-1)^e q^k` with `e` taken mod 2.
    fn signed_q_pow(&self, sign_exp: usize, k: i64) -> Self::Elem {
        let p = self.q_pow(k);
        if sign_exp % 2 == 1 {
            -p
        } else {
            p
        }
    }
}

/// The generic ring `Z[v, v^-1]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Generic;

impl Ring for Generic {
    type Elem = LaurentPoly;

    fn from_int(&self, c: i64) -> LaurentPoly {
        LaurentPoly::constant(c)
    }

    fn q_pow(&self, e: i64) -> LaurentPoly {
        LaurentPoly::monomial(1, e as i32)
    }

    fn from_laurent(&self, p: &LaurentPoly) -> LaurentPoly {
        p.clone()
    }
}

/// The cyclotomic field `Q(q)` with `q` a primitive `l`-th root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    l: u32,
}

impl Cyclotomic {
    /// Panics unless `l` is odd and at least 3.
    pub fn new(l: u32) -> Self {
        assert!(l >= 3 && l % 2 == 1, "l must be odd and at least 3, got {l}");
        Cyclotomic { l }
    }

    pub fn order(&self) -> u32 {
        self.l
    }
}

impl Ring for Cyclotomic {
    type Elem = CycloScalar;

    fn from_int(&self, c: i64) -> CycloScalar {
        CycloScalar::from_int(self.l, c)
    }

    fn q_pow(&self, e: i64) -> CycloScalar {
        CycloScalar::q_pow(self.l, e)
    }

    fn from_laurent(&self, p: &LaurentPoly) -> CycloScalar {
        specialize(p, self.l)
    }
}

/// Evaluates `p` at `v = q` for a primitive `l`-th root of unity `q`.
pub fn specialize(p: &LaurentPoly, l: u32) -> CycloScalar {
    let mut by_power = vec![0i64; l as usize];
    for (e, c) in p.terms() {
        by_power[(e as i64).rem_euclid(l as i64) as usize] += c;
    }
    CycloScalar::from_power_coeffs(l, &by_power)
}

/// Adds `c` to the entry at `key` of a sparse map, removing it if it cancels.
pub fn add_into<K: Ord, E: Scalar>(map: &mut BTreeMap<K, E>, key: K, c: E) {
    if c.is_zero() {
        return;
    }
    match map.remove(&key) {
        Some(old) => {
            let sum = old + &c;
            if !sum.is_zero() {
                map.insert(key, sum);
            }
        }
        None => {
            map.insert(key, c);
        }
    }
}

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rational_poly::{self, QPoly};
use super::{FieldScalar, Scalar};

type CyclotomicCache = RwLock<HashMap<u32, Arc<Vec<i64>>>>;

fn cache() -> &'static CyclotomicCache {
    static CACHE: OnceLock<CyclotomicCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn poly_div_integer(num: &[i64], den: &[i64]) -> Vec<i64> {
    // Both monic with integer coefficients; the quotient is exact.
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for shift in (0..quot.len()).rev() {
        let c = rem[shift + dd];
        quot[shift] = c;
        for (k, &dk) in den.iter().enumerate() {
            rem[shift + k] -= c * dk;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// The cyclotomic polynomial `Phi_l` as integer coefficients, low degree first.
///
/// Computed as `(v^l - 1) / prod_{d | l, d < l} Phi_d` and cached per `l`.
pub fn cyclotomic_polynomial(l: u32) -> Arc<Vec<i64>> {
    assert!(l >= 1);
    if let Some(p) = cache().read().unwrap().get(&l) {
        return Arc::clone(p);
    }
    let mut num = vec![0i64; l as usize + 1];
    num[0] = -1;
    num[l as usize] = 1;
    for d in (1..l).filter(|d| l.is_multiple_of(*d)) {
        let phi_d = cyclotomic_polynomial(d);
        num = poly_div_integer(&num, &phi_d);
    }
    let phi = Arc::new(num);
    cache().write().unwrap().insert(l, Arc::clone(&phi));
    phi
}

fn phi_rational(l: u32) -> QPoly {
    cyclotomic_polynomial(l)
        .iter()
        .map(|&c| BigRational::from_integer(BigInt::from(c)))
        .collect()
}

/// An element of `Q(q)`, `q` a primitive `l`-th root of unity.
///
/// Stored as the residue of a rational polynomial modulo `Phi_l`, padded to
/// exactly `deg Phi_l` coefficients so that equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloScalar {
    order: u32,
    residue: Vec<BigRational>,
}

impl CycloScalar {
    fn degree(l: u32) -> usize {
        cyclotomic_polynomial(l).len() - 1
    }

    fn from_poly(l: u32, poly: &[BigRational]) -> Self {
        let phi = cyclotomic_polynomial(l);
        let deg = phi.len() - 1;
        let mut work = poly.to_vec();
        // Reduce top-down using the monic relation Phi_l = 0.
        while work.len() > deg {
            let c = work.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let shift = work.len() - deg;
            for (k, &pk) in phi.iter().take(deg).enumerate() {
                if pk != 0 {
                    work[shift + k] -= &c * BigRational::from_integer(BigInt::from(pk));
                }
            }
        }
        work.resize(deg, BigRational::zero());
        CycloScalar { order: l, residue: work }
    }

    pub fn from_int(l: u32, c: i64) -> Self {
        CycloScalar::from_rational(l, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn from_rational(l: u32, c: BigRational) -> Self {
        let mut residue = vec![BigRational::zero(); Self::degree(l)];
        residue[0] = c;
        CycloScalar { order: l, residue }
    }

    /// `q^e` for any integer `e`, using `q^l = 1`.
    pub fn q_pow(l: u32, e: i64) -> Self {
        let k = e.rem_euclid(l as i64) as usize;
        let mut poly = vec![BigRational::zero(); k + 1];
        poly[k] = BigRational::one();
        CycloScalar::from_poly(l, &poly)
    }

    /// Builds `sum_k c_k q^k` from integer coefficients indexed by `k`.
    pub fn from_power_coeffs(l: u32, coeffs: &[i64]) -> Self {
        let poly: QPoly = coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
        CycloScalar::from_poly(l, &poly)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients of the reduced representative in the power basis `1, q, q^2, ...`.
    pub fn residue(&self) -> &[BigRational] {
        &self.residue
    }

    fn check_order(&self, other: &CycloScalar) {
        assert_eq!(self.order, other.order, "mixing roots of unity of different orders");
    }
}

impl Scalar for CycloScalar {
    fn is_zero(&self) -> bool {
        self.residue.iter().all(|c| c.is_zero())
    }
}

impl FieldScalar for CycloScalar {
    fn inverse(&self) -> Option<CycloScalar> {
        if self.is_zero() {
            return None;
        }
        let inv = rational_poly::inverse_mod(&self.residue, &phi_rational(self.order))?;
        Some(CycloScalar::from_poly(self.order, &inv))
    }
}

impl<'a> Add<&'a CycloScalar> for CycloScalar {
    type Output = CycloScalar;
    fn add(mut self, rhs: &'a CycloScalar) -> CycloScalar {
        self.check_order(rhs);
        for (a, b) in self.residue.iter_mut().zip(&rhs.residue) {
            if !b.is_zero() {
                *a += b;
            }
        }
        self
    }
}

impl Add for CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: CycloScalar) -> CycloScalar {
        self + &rhs
    }
}

impl<'a> Sub<&'a CycloScalar> for CycloScalar {
    type Output = CycloScalar;
    fn sub(mut self, rhs: &'a CycloScalar) -> CycloScalar {
        self.check_order(rhs);
        for (a, b) in self.residue.iter_mut().zip(&rhs.residue) {
            if !b.is_zero() {
                *a -= b;
            }
        }
        self
    }
}

impl Sub for CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: CycloScalar) -> CycloScalar {
        self - &rhs
    }
}

impl<'a> Mul<&'a CycloScalar> for CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: &'a CycloScalar) -> CycloScalar {
        self.check_order(rhs);
        let prod = rational_poly::mul(&self.residue, &rhs.residue);
        CycloScalar::from_poly(self.order, &prod)
    }
}

impl Mul for CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: CycloScalar) -> CycloScalar {
        self * &rhs
    }
}

impl Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(mut self) -> CycloScalar {
        for c in self.residue.iter_mut() {
            *c = -c.clone();
        }
        self
    }
}

/// Renders in the power basis of `q`, exponents ascending, e.g. `-1 - 2q`.
impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.residue.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mag = c.abs();
            let mag_str = if mag.is_integer() { mag.to_integer().to_string() } else { format!("({mag})") };
            match (mag.is_one(), e) {
                (_, 0) => write!(f, "{mag_str}")?,
                (true, 1) => write!(f, "q")?,
                (true, _) => write!(f, "q^{e}")?,
                (false, 1) => write!(f, "{mag_str}q")?,
                (false, _) => write!(f, "{mag_str}q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloScalar[l={}]({self})", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(15), vec![1, -1, 0, 1, -1, 1, 0, -1, 1]);
    }

    #[test]
    fn q_has_order_l() {
        for l in [3u32, 5, 7, 9] {
            assert_eq!(CycloScalar::q_pow(l, l as i64), CycloScalar::from_int(l, 1));
            for k in 1..l as i64 {
                assert_ne!(CycloScalar::q_pow(l, k), CycloScalar::from_int(l, 1));
            }
        }
    }

    #[test]
    fn display() {
        let l = 3;
        let x = CycloScalar::q_pow(l, 2);
        assert_eq!(x.to_string(), "-1 - q");
        assert_eq!(CycloScalar::from_int(l, 0).to_string(), "0");
    }
}

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Scalar;

/// Integer Laurent polynomial in `v`, stored sparsely with no zero terms.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    /// `c * v^e`.
    pub fn monomial(c: i64, e: i32) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(e, c);
        }
        LaurentPoly { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, combining repeats.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i32, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, e: i32) -> i64 {
        self.coeffs.get(&e).copied().unwrap_or(0)
    }

    /// Nonzero terms as `(exponent, coefficient)`, exponents ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LaurentPoly::constant(1);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `v -> v^k`; with `k = 2` this turns a polynomial in `u` into one in `v`.
    pub fn substitute_power(&self, k: i32) -> Self {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    ///
    /// Division is carried out from the top degree down, so `d` must have a
    /// leading coefficient of `+1` or `-1` unless the quotient is integral anyway.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        let (dlo, dhi) = (d.min_degree()?, d.max_degree()?);
        let lead = d.coeff(dhi);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some(top) = rem.max_degree() {
            if top - dhi < rem.min_degree().unwrap() - dlo {
                return None;
            }
            let c = rem.coeff(top);
            if c % lead != 0 {
                return None;
            }
            let t = LaurentPoly::monomial(c / lead, top - dhi);
            rem = rem - &(&t * d);
            quot = quot + &t;
        }
        Some(quot)
    }

    /// Evaluation at an integer point (only meaningful for nonnegative exponents
    /// or `x = +-1`); used by tests for sanity checks.
    pub fn eval_int(&self, x: i64) -> Option<i64> {
        let mut acc = 0i64;
        for (e, c) in self.terms() {
            if e < 0 && x.abs() != 1 {
                return None;
            }
            let xe = if e >= 0 { x.pow(e as u32) } else { x.pow((-e) as u32) };
            acc += c * xe;
        }
        Some(acc)
    }
}

impl Scalar for LaurentPoly {
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<'a> Add<&'a LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: &'a LaurentPoly) -> LaurentPoly {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
        self
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        self + &rhs
    }
}

impl<'a> Sub<&'a LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: &'a LaurentPoly) -> LaurentPoly {
        for (e, c) in rhs.terms() {
            self.add_term(e, -c);
        }
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self - &rhs
    }
}

impl<'b> Mul<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        &self * rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.coeffs.values_mut() {
            *c = -*c;
        }
        self
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, magnitude: u64, e: i32, var: &str) -> fmt::Result {
    match (magnitude, e) {
        (m, 0) => write!(f, "{m}"),
        (1, 1) => write!(f, "{var}"),
        (1, e) => write!(f, "{var}^{e}"),
        (m, 1) => write!(f, "{m}{var}"),
        (m, e) => write!(f, "{m}{var}^{e}"),
    }
}

/// Renders with exponents ascending, e.g. `v^-2 + 2 - v^3`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            match (idx, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_term(f, c.unsigned_abs(), e, "v")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_ascending_format() {
        let p = LaurentPoly::from_terms([(3, -1), (-2, 1), (0, 2)]);
        assert_eq!(p.to_string(), "v^-2 + 2 - v^3");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::from_terms([(1, -3)]).to_string(), "-3v");
    }

    #[test]
    fn zero_terms_are_not_stored() {
        let p = LaurentPoly::monomial(2, 1) + &LaurentPoly::monomial(-2, 1);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPoly::zero());
    }

    #[test]
    fn exact_division() {
        // (1 + v)(1 - v + v^2) = 1 + v^3
        let a = LaurentPoly::from_terms([(0, 1), (3, 1)]);
        let d = LaurentPoly::from_terms([(0, 1), (1, 1)]);
        let q = a.div_exact(&d).unwrap();
        assert_eq!(q, LaurentPoly::from_terms([(0, 1), (1, -1), (2, 1)]));
        assert!(LaurentPoly::from_terms([(0, 1), (2, 1)]).div_exact(&d).is_none());
    }
}

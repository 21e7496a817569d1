//! Gaussian polynomials and Poincare polynomials of Young subgroups.
//!
//! All polynomials here are in the variable `u` (printed as `v`); substitute
//! `u = v^2` with [`LaurentPoly::substitute_power`] before specializing at `q^2`.

use super::LaurentPoly;
use crate::symcomb::Composition;

/// `[i] = 1 + u + ... + u^(i-1)`, with `[0] = 0`.
pub fn quantum_integer(i: usize) -> LaurentPoly {
    LaurentPoly::from_terms((0..i as i32).map(|e| (e, 1)))
}

/// `[s]! = [1][2]...[s]`.
pub fn quantum_factorial(s: usize) -> LaurentPoly {
    (1..=s).fold(LaurentPoly::constant(1), |acc, i| acc * quantum_integer(i))
}

/// The Gaussian polynomial `[s]! / ([t]! [s-t]!)`.
///
/// Panics if `t > s`.
pub fn gauss_binomial(s: usize, t: usize) -> LaurentPoly {
    assert!(t <= s, "gauss_binomial({s}, {t}) needs t <= s");
    let den = quantum_factorial(t) * quantum_factorial(s - t);
    quantum_factorial(s)
        .div_exact(&den)
        .expect("Gaussian polynomial division is exact")
}

/// Poincare polynomial `sum_{w in W_lambda} u^l(w) = prod_i [lambda_i]!`.
pub fn poincare(lambda: &Composition) -> LaurentPoly {
    lambda
        .parts()
        .iter()
        .fold(LaurentPoly::constant(1), |acc, &p| acc * quantum_factorial(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{specialize, Scalar};

    #[test]
    fn small_binomials() {
        assert_eq!(gauss_binomial(2, 1), LaurentPoly::from_terms([(0, 1), (1, 1)]));
        assert_eq!(gauss_binomial(5, 0), LaurentPoly::constant(1));
        assert_eq!(
            gauss_binomial(4, 2),
            LaurentPoly::from_terms([(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)])
        );
    }

    #[test]
    fn binomial_vanishes_at_root_of_unity() {
        assert!(specialize(&gauss_binomial(3, 1), 3).is_zero());
        for l in [3usize, 5] {
            for h in 1..l {
                let at_q2 = gauss_binomial(l, h).substitute_power(2);
                assert!(specialize(&at_q2, l as u32).is_zero(), "l={l} h={h}");
            }
        }
    }

    #[test]
    fn poincare_examples() {
        assert_eq!(poincare(&Composition::new(vec![2])), LaurentPoly::from_terms([(0, 1), (1, 1)]));
        assert_eq!(poincare(&Composition::new(vec![1, 1, 1])), LaurentPoly::constant(1));
        let at_q2 = poincare(&Composition::new(vec![3])).substitute_power(2);
        assert!(specialize(&at_q2, 3).is_zero());
    }
}

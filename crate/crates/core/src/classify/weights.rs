use crate::error::{Error, Result};
use crate::symcomb::SuperComposition;

use super::{mullineux, restricted_decompose, small_j, IndexTriple, Partition};

fn dominant(v: &[usize]) -> Option<Partition> {
    Partition::try_new(v.to_vec())
}

/// `t(lambda)`, the odd part of a weight as a partition.
fn odd_partition(lambda: &SuperComposition) -> Option<Partition> {
    dominant(lambda.odd.parts())
}

/// Whether `lambda` lies in `Lambda^{++}(m|n, r)`: both halves dominant and
/// `j(t(lambda)) <= lambda_m`.
pub fn is_lambda_pp(lambda: &SuperComposition, p: usize) -> bool {
    if dominant(lambda.even.parts()).is_none() {
        return false;
    }
    let Some(odd) = odd_partition(lambda) else { return false };
    let last_even = if lambda.m() == 0 { 0 } else { lambda.even.parts()[lambda.m() - 1] };
    small_j(&odd, p) <= last_even
}

/// `Lambda^+(m|n, r)`: weights with both halves weakly decreasing.
pub fn dominant_weights(m: usize, n: usize, r: usize) -> Vec<SuperComposition> {
    let mut out = Vec::new();
    for i in 0..=r {
        for even in Partition::at_most_parts(m, i) {
            for odd in Partition::at_most_parts(n, r - i) {
                out.push(SuperComposition::new(even.padded(m), odd.padded(n)));
            }
        }
    }
    out
}

/// `Lambda^{++}(m|n, r)`.
pub fn lambda_pp(m: usize, n: usize, r: usize, p: usize) -> Vec<SuperComposition> {
    dominant_weights(m, n, r).into_iter().filter(|w| is_lambda_pp(w, p)).collect()
}

/// The description of `Lambda^{++}(m|n, r)` valid for `r <= m`: dominant
/// weights whose odd entries are all divisible by `p`.
pub fn lambda_pp_small_rank(m: usize, n: usize, r: usize, p: usize) -> Vec<SuperComposition> {
    dominant_weights(m, n, r).into_iter().filter(|w| w.odd.parts().iter().all(|x| x % p == 0)).collect()
}

/// `tau(lambda) = (lambda^(0), 0, ..., 0 | lambda^(1))` with `n` inserted zeros.
pub fn tau(lambda: &SuperComposition) -> SuperComposition {
    let mut even = lambda.even.parts().to_vec();
    even.extend(std::iter::repeat_n(0, lambda.n()));
    SuperComposition::new(even, lambda.odd.parts().to_vec())
}

/// Inverse of [`tau`] on weights with zeros in the inserted positions.
pub fn tau_inverse(mu: &SuperComposition, m: usize) -> Result<SuperComposition> {
    let n = mu.n();
    if mu.m() != m + n || mu.even.parts()[m..].iter().any(|&x| x != 0) {
        return Err(Error::Domain(format!("{mu:?} is not in the image of tau for m = {m}")));
    }
    Ok(SuperComposition::new(mu.even.parts()[..m].to_vec(), mu.odd.parts().to_vec()))
}

/// `h(lambda, xi, eta) = (lambda^t + p xi | p eta)` in `Lambda(m+n|n, r)`.
pub fn h_map(t: &IndexTriple, m: usize, n: usize, p: usize) -> Result<SuperComposition> {
    let even = t.lam.conjugate().plus_scaled(p, &t.xi);
    if even.len() > m + n || t.xi.len() > m || t.eta.len() > n {
        return Err(Error::Domain(format!("{t:?} does not fit ({m}|{n})")));
    }
    let odd: Vec<usize> = t.eta.padded(n).iter().map(|x| p * x).collect();
    Ok(SuperComposition::new(even.padded(m + n), odd))
}

/// `r_w(lambda) = sum_{i<=m} lambda0_i e_i + sum_i M(t(lambda0))_i e_{m+n+i} + p lambda1`
/// for `lambda = lambda0 + p lambda1` in `Lambda^{++}(m+n|n, r)`, `r <= m+n`.
///
/// The result is a weight of shape `(m+n | n)`.
pub fn rw_map(lambda: &SuperComposition, m: usize, n: usize, p: usize) -> Result<SuperComposition> {
    let r = lambda.weight();
    if lambda.m() != m + n || lambda.n() != n || r > m + n || !is_lambda_pp(lambda, p) {
        return Err(Error::Domain(format!("{lambda:?} is not in Lambda++({}|{n}, {r}) with r <= m+n", m + n)));
    }
    let even = dominant(lambda.even.parts()).expect("checked dominant");
    let (zero, one) = restricted_decompose(&even, p);
    let zero_v = zero.padded(m + n);
    let tail = Partition::new(zero_v[m..].to_vec());
    let mull = mullineux(&tail, p)?;
    if mull.len() > n {
        return Err(Error::Domain(format!("M({tail}) has more than {n} parts")));
    }
    let mut out_even: Vec<usize> = zero_v[..m].to_vec();
    out_even.extend(std::iter::repeat_n(0, n));
    for (i, x) in one.padded(m + n).into_iter().enumerate() {
        out_even[i] += p * x;
    }
    let out_odd: Vec<usize> = mull.padded(n).iter().zip(lambda.odd.parts()).map(|(a, b)| a + b).collect();
    Ok(SuperComposition::new(out_even, out_odd))
}

/// `r_w ∘ h`, mapping a label to a weight in `tau Lambda^{++}(m|n, r)`.
pub fn weight_of_label(t: &IndexTriple, m: usize, n: usize, p: usize) -> Result<SuperComposition> {
    rw_map(&h_map(t, m, n, p)?, m, n, p)
}

/// Inverse of [`weight_of_label`] following the explicit formula for `r_w^{-1}`:
/// with `mu^(1) = mu^(1),0 + p mu^(1),1`, the label is `((lambda0)^t, lambda1, mu^(1),1)`
/// where `lambda0 + p lambda1 = (mu^(0), M(mu^(1),0))`.
pub fn label_of_weight(mu: &SuperComposition, m: usize, n: usize, p: usize) -> Result<IndexTriple> {
    let base = tau_inverse(mu, m)?;
    let odd = odd_partition(&base).ok_or_else(|| Error::Domain(format!("{mu:?} is not dominant")))?;
    let (odd0, odd1) = restricted_decompose(&odd, p);
    let mull = mullineux(&odd0, p)?;
    let mut full = base.even.parts().to_vec();
    full.extend(mull.padded(n.max(mull.len())));
    let full = Partition::try_new(full).ok_or_else(|| Error::Domain(format!("{mu:?} gives a non-dominant preimage")))?;
    let (zero, one) = restricted_decompose(&full, p);
    if one.len() > m {
        return Err(Error::Domain(format!("{mu:?}: lambda1 has more than {m} parts")));
    }
    Ok(IndexTriple::new(zero.conjugate(), one, odd1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn no_odd_part_means_everything_qualifies() {
        for r in 0..5 {
            assert_eq!(lambda_pp(2, 0, r, 3).len(), dominant_weights(2, 0, r).len());
        }
    }

    #[test]
    fn tau_round_trip() {
        let w = SuperComposition::new(vec![2, 1], vec![1]);
        let t = tau(&w);
        assert_eq!(t.even.parts(), &[2, 1, 0]);
        assert_eq!(tau_inverse(&t, 2).unwrap(), w);
    }

    #[test]
    fn worked_round_trip() {
        let t = IndexTriple::new(p(&[1]), Partition::empty(), p(&[1]));
        let w = weight_of_label(&t, 2, 2, 3).unwrap();
        assert!(w.even.parts()[2..].iter().all(|&x| x == 0));
        assert_eq!(label_of_weight(&w, 2, 2, 3).unwrap(), t);
    }
}

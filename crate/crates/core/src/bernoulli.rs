//! Bernoulli numbers in exact rational arithmetic.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

/// Arbitrary-precision rational, kept in lowest terms with a positive
/// denominator.
pub type ExactRational = BigRational;

/// Binomial coefficient C(n, k) as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// B_0, ..., B_k in the x/(e^x - 1) convention, so B_1 = -1/2.
///
/// Standard recurrence: sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1.
pub fn bernoulli_sequence(k: u64) -> Vec<ExactRational> {
    let mut b: Vec<ExactRational> = Vec::with_capacity(k as usize + 1);
    b.push(ExactRational::one());
    for m in 1..=k {
        let mut sum = ExactRational::zero();
        for (j, bj) in b.iter().enumerate() {
            sum += ExactRational::from(binomial(m + 1, j as u64)) * bj;
        }
        b.push(-sum / ExactRational::from(BigInt::from(m + 1)));
    }
    b
}

/// B_k in the x/(e^x - 1) convention.
pub fn bernoulli(k: u64) -> ExactRational {
    bernoulli_sequence(k).pop().unwrap()
}

//! The generic level-p Frobenius engine.
//!
//! For a generator set A with gcd 1 and smallest element a1, the level-p
//! Apery set holds, for each residue class i mod a1, the least element m_i
//! whose representation count reaches p+1. Everything else follows from
//! those a1 numbers:
//!
//!   g(A;p) = max_i m_i - a1
//!   n(A;p) = (1/a1) sum_i m_i - (a1-1)/2
//!   s(A;p) = (1/(2a1)) sum_i m_i^2 - (1/2) sum_i m_i + (a1^2-1)/12
//!
//! and the mu-th power sum generalization via Bernoulli numbers. All
//! divisions are exact and asserted; a failed assertion means a bug, not
//! bad input.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::bernoulli::{bernoulli_sequence, binomial};
use crate::denumerant::{DenumerantTable, DEFAULT_MAX_CELLS};
use crate::error::{Error, Result};
use crate::gens::GeneratorSet;

/// The threshold elements m_i, indexed by residue class mod a1.
///
/// Invariants: `m[i] = i (mod a1)`; `d(m[i]) >= p+1`; `d(m[i] - a1) <= p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PAperySet {
    a1: u64,
    p: u64,
    m: Vec<u64>,
}

impl PAperySet {
    pub fn a1(&self) -> u64 {
        self.a1
    }

    /// The representation-count level p this set was built for.
    pub fn level(&self) -> u64 {
        self.p
    }

    /// Threshold values indexed by residue 0..a1.
    pub fn values(&self) -> &[u64] {
        &self.m
    }

    /// g(A;p): the largest integer with at most p representations.
    pub fn frobenius(&self) -> i64 {
        *self.m.iter().max().unwrap() as i64 - self.a1 as i64
    }

    /// n(A;p): how many integers n >= 0 have at most p representations.
    pub fn sylvester_number(&self) -> Result<u64> {
        let a1 = self.a1 as i128;
        let sum: i128 = self.m.iter().map(|&x| x as i128).sum();
        let num = 2 * sum - a1 * (a1 - 1);
        exact_div(num, 2 * a1, "sylvester number")
    }

    /// Same count restricted to positive integers. Differs from
    /// `sylvester_number` by exactly one for p >= 1 (n = 0 always has one
    /// representation, the empty one).
    pub fn sylvester_number_positive(&self) -> Result<u64> {
        Ok(self.sylvester_number()? - u64::from(self.p >= 1))
    }

    /// s(A;p): the sum of all integers n >= 0 with at most p representations.
    pub fn sylvester_sum(&self) -> Result<u64> {
        let a1 = self.a1 as i128;
        let sum: i128 = self.m.iter().map(|&x| x as i128).sum();
        let sq: i128 = self.m.iter().map(|&x| (x as i128) * (x as i128)).sum();
        let num = 6 * sq - 6 * a1 * sum + a1 * (a1 * a1 - 1);
        exact_div(num, 12 * a1, "sylvester sum")
    }

    /// s_mu(A;p) = sum of n^mu over all n >= 0 with d(n) <= p, evaluated
    /// through the Bernoulli-weighted closed form:
    ///
    ///   (1/(mu+1)) sum_{k=0}^{mu} C(mu+1,k) B_k a1^(k-1) sum_i m_i^(mu+1-k)
    ///     + (B_{mu+1}/(mu+1)) (a1^(mu+1) - 1)
    ///
    /// mu = 0 and mu = 1 reduce to the Sylvester number and sum.
    pub fn power_sum(&self, mu: u32) -> Result<u128> {
        let a1 = BigInt::from(self.a1);
        let bern = bernoulli_sequence(mu as u64 + 1);
        let mut total = BigRational::zero();
        for kappa in 0..=mu as u64 {
            let bk = &bern[kappa as usize];
            if bk.is_zero() {
                continue;
            }
            let msum: BigInt = self
                .m
                .iter()
                .map(|&x| BigInt::from(x).pow(mu + 1 - kappa as u32))
                .sum();
            // a1^(kappa-1) dips below 1 at kappa = 0
            let a1_pow = if kappa == 0 {
                BigRational::new(BigInt::one(), a1.clone())
            } else {
                BigRational::from(a1.pow(kappa as u32 - 1))
            };
            total += BigRational::from(binomial(mu as u64 + 1, kappa))
                * bk
                * a1_pow
                * BigRational::from(msum);
        }
        let mu1 = BigRational::from(BigInt::from(mu + 1));
        total /= mu1.clone();
        total += &bern[mu as usize + 1] / mu1 * BigRational::from(a1.pow(mu + 1) - BigInt::one());
        if !total.is_integer() || total.is_negative() {
            return Err(Error::NonIntegralResult("power sum"));
        }
        total
            .to_integer()
            .to_u128()
            .ok_or(Error::NonIntegralResult("power sum"))
    }
}

fn exact_div(num: i128, den: i128, what: &'static str) -> Result<u64> {
    if num % den != 0 || num < 0 {
        return Err(Error::NonIntegralResult(what));
    }
    u64::try_from(num / den).map_err(|_| Error::NonIntegralResult(what))
}

/// Build the level-p Apery set, growing the DP table until every residue
/// class has reached count p+1. gcd(A) = 1 guarantees termination.
pub fn p_apery_set(set: &GeneratorSet, p: u64) -> Result<PAperySet> {
    p_apery_set_capped(set, p, DEFAULT_MAX_CELLS)
}

pub fn p_apery_set_capped(set: &GeneratorSet, p: u64, max_cells: u64) -> Result<PAperySet> {
    Ok(apery_with_table(set, p, max_cells)?.0)
}

fn apery_with_table(
    set: &GeneratorSet,
    p: u64,
    max_cells: u64,
) -> Result<(PAperySet, DenumerantTable)> {
    set.require_engine_ready()?;
    let a1 = set.a1() as usize;
    let mut capacity = (4 * set.gens().last().unwrap()).max(64);
    loop {
        let table = DenumerantTable::build_capped(set, capacity, max_cells)?;
        let mut m = vec![u64::MAX; a1];
        let mut remaining = a1;
        for (n, &c) in table.counts().iter().enumerate() {
            if m[n % a1] == u64::MAX && c > p {
                m[n % a1] = n as u64;
                remaining -= 1;
                if remaining == 0 {
                    break;
                }
            }
        }
        if remaining == 0 {
            return Ok((
                PAperySet {
                    a1: a1 as u64,
                    p,
                    m,
                },
                table,
            ));
        }
        capacity = capacity.checked_mul(2).ok_or(Error::TableLimit {
            needed: u64::MAX,
            limit: max_cells,
        })?;
    }
}

/// g(A;p): largest integer with at most p representations.
pub fn p_frobenius(set: &GeneratorSet, p: u64) -> Result<i64> {
    Ok(p_apery_set(set, p)?.frobenius())
}

/// n(A;p): count of integers n >= 0 with at most p representations.
pub fn p_sylvester_number(set: &GeneratorSet, p: u64) -> Result<u64> {
    p_apery_set(set, p)?.sylvester_number()
}

/// n(A;p) restricted to positive integers.
pub fn p_sylvester_number_positive(set: &GeneratorSet, p: u64) -> Result<u64> {
    p_apery_set(set, p)?.sylvester_number_positive()
}

/// s(A;p): sum of the integers with at most p representations.
pub fn p_sylvester_sum(set: &GeneratorSet, p: u64) -> Result<u64> {
    p_apery_set(set, p)?.sylvester_sum()
}

/// s_mu(A;p): Bernoulli-weighted power sum.
pub fn p_power_sum(set: &GeneratorSet, p: u64, mu: u32) -> Result<u128> {
    p_apery_set(set, p)?.power_sum(mu)
}

/// The largest integer with exactly p representations, if one exists.
///
/// Representation counts can skip values, in which case there is no such
/// integer and the level-p and level-(p-1) Frobenius numbers coincide.
pub fn exact_rep_frobenius(set: &GeneratorSet, p: u64) -> Result<Option<i64>> {
    exact_rep_frobenius_capped(set, p, DEFAULT_MAX_CELLS)
}

pub fn exact_rep_frobenius_capped(
    set: &GeneratorSet,
    p: u64,
    max_cells: u64,
) -> Result<Option<i64>> {
    let (apery, table) = apery_with_table(set, p, max_cells)?;
    let g_p = apery.frobenius();
    if g_p < 0 {
        return Ok(None);
    }
    if p == 0 {
        // d(g_0) <= 0 means exactly 0
        return Ok(Some(g_p));
    }
    let g_prev = p_apery_set_capped(set, p - 1, max_cells)?.frobenius();
    if g_prev < g_p {
        // d(g_p) <= p and > p-1, hence exactly p
        return Ok(Some(g_p));
    }
    // levels tie; scan downward for a smaller witness
    for n in (0..=g_p).rev() {
        if table.count(n) == p {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// g(A;p), n(A;p), s(A;p) and any requested power sums, all extracted from
/// a single Apery set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PFrobeniusSummary {
    pub g: i64,
    pub n_count: u64,
    pub s_sum: u64,
    pub power_sums: Vec<(u32, u128)>,
}

pub fn summarize(set: &GeneratorSet, p: u64, mus: &[u32]) -> Result<PFrobeniusSummary> {
    summarize_capped(set, p, mus, DEFAULT_MAX_CELLS)
}

pub fn summarize_capped(
    set: &GeneratorSet,
    p: u64,
    mus: &[u32],
    max_cells: u64,
) -> Result<PFrobeniusSummary> {
    let apery = p_apery_set_capped(set, p, max_cells)?;
    let mut power_sums = Vec::with_capacity(mus.len());
    for &mu in mus {
        power_sums.push((mu, apery.power_sum(mu)?));
    }
    Ok(PFrobeniusSummary {
        g: apery.frobenius(),
        n_count: apery.sylvester_number()?,
        s_sum: apery.sylvester_sum()?,
        power_sums,
    })
}

fn two_var_check(a: u64, b: u64) -> Result<()> {
    if a < 2 || b < 2 {
        return Err(Error::Domain(format!(
            "two-variable forms need a, b >= 2, got ({a}, {b})"
        )));
    }
    if num::integer::gcd(a, b) != 1 {
        return Err(Error::NotCoprime(a, b));
    }
    Ok(())
}

/// g(a,b;p) = (p+1)ab - a - b for coprime a, b.
pub fn two_var_g(a: u64, b: u64, p: u64) -> Result<i64> {
    two_var_check(a, b)?;
    let v = (p as i128 + 1) * (a as i128) * (b as i128) - a as i128 - b as i128;
    i64::try_from(v).map_err(|_| Error::NonIntegralResult("two-variable g"))
}

/// n(a,b;p) = ((2p+1)ab - a - b + 1) / 2.
pub fn two_var_n(a: u64, b: u64, p: u64) -> Result<u64> {
    two_var_check(a, b)?;
    let num = (2 * p as i128 + 1) * (a as i128) * (b as i128) - a as i128 - b as i128 + 1;
    exact_div(num, 2, "two-variable n")
}

/// s(a,b;p) = (1/2)abp(ab(p+1) - a - b) + (1/12)(a-1)(b-1)(2ab - a - b - 1).
pub fn two_var_s(a: u64, b: u64, p: u64) -> Result<u64> {
    two_var_check(a, b)?;
    let (a, b, p) = (a as i128, b as i128, p as i128);
    let num =
        6 * a * b * p * (a * b * (p + 1) - a - b) + (a - 1) * (b - 1) * (2 * a * b - a - b - 1);
    exact_div(num, 12, "two-variable s")
}

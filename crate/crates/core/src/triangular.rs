//! Closed forms for triples of consecutive triangular numbers
//! (t_n, t_{n+1}, t_{n+2}), plus the level-indexed families for the small
//! fixed triples (6,10,15), (3,6,10) and (10,15,21).
//!
//! Every formula is integer-only; rational-looking expressions carry an
//! exact-divisibility assertion, and tripping one is a bug.

use crate::error::{Error, Result};
use crate::gens::triangular;

fn exact_div(num: u128, den: u128) -> u64 {
    assert_eq!(num % den, 0, "closed form lost integrality: {num}/{den}");
    u64::try_from(num / den).expect("closed form overflows u64")
}

/// Frobenius number of (t_n, t_{n+1}, t_{n+2}) at level 0, for n >= 2.
///
/// Evaluates both the floor form
///   floor(n/2) (t_n + t_{n+1} + t_{n+2} - 1) - 1
/// and the parity split
///   (3n-3)(n+1)(n+2)/4 - 1  (odd n),   3n(n+1)(n+2)/4 - 1  (even n)
/// and insists they agree.
pub fn g_p0(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::Domain(format!("g at level 0 needs n >= 2, got {n}")));
    }
    let floor_form = (n / 2) * (triangular(n) + triangular(n + 1) + triangular(n + 2) - 1) - 1;
    let c = if n % 2 == 1 { 3 * n - 3 } else { 3 * n };
    let split_form = exact_div(c as u128 * (n as u128 + 1) * (n as u128 + 2), 4) - 1;
    assert_eq!(
        floor_form, split_form,
        "the two level-0 forms disagree at n = {n}"
    );
    Ok(floor_form)
}

/// One point of the general-level family: at representation-count level
/// `p_index`, the Frobenius number of the triple for index n is `g_value`.
///
/// The level is a ceiling sum driven by the underlying two-generator
/// reduction; `p` is the parameter that generates it, not the level itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Theorem1Point {
    pub n: u64,
    pub p: u64,
    pub p_index: u64,
    pub g_value: u64,
}

/// For even n:  level p(p+1) + sum_{j=1}^{p} ceil(6j/n),
///              g = (n+1)(n+2)(2(n+3)p + 3n)/4 - 1.
/// For odd n >= 3:  level sum_{j=1}^{p} ceil(j(n+3)/(2n)),
///              g = (n+1)(n+2)((n+3)p + 3(n-1))/4 - 1.
///
/// Ceilings are exact integer ceiling divisions, never floating point.
pub fn theorem1_point(n: u64, p: u64) -> Result<Theorem1Point> {
    if n == 0 {
        return Err(Error::Domain("index n must be >= 1".into()));
    }
    let (p_index, g_value) = if n.is_multiple_of(2) {
        let level = p * (p + 1) + (1..=p).map(|j| (6 * j).div_ceil(n)).sum::<u64>();
        let num =
            (n as u128 + 1) * (n as u128 + 2) * (2 * (n as u128 + 3) * p as u128 + 3 * n as u128);
        (level, exact_div(num, 4) - 1)
    } else {
        if n < 3 {
            return Err(Error::OddNTooSmall);
        }
        let level = (1..=p).map(|j| (j * (n + 3)).div_ceil(2 * n)).sum::<u64>();
        let num =
            (n as u128 + 1) * (n as u128 + 2) * ((n as u128 + 3) * p as u128 + 3 * (n as u128 - 1));
        (level, exact_div(num, 4) - 1)
    };
    Ok(Theorem1Point {
        n,
        p,
        p_index,
        g_value,
    })
}

/// Level-1 Frobenius number: n(n+1)(n+2) - 1 for n >= 2.
pub fn g_p1(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::Domain(format!("g at level 1 needs n >= 2, got {n}")));
    }
    let v = n as u128 * (n as u128 + 1) * (n as u128 + 2) - 1;
    Ok(u64::try_from(v).expect("level-1 g overflows u64"))
}

/// Level-2 Frobenius number, n >= 2.
///
/// (5n-3)(n+1)(n+2)/4 - 1 for odd n >= 5, (5n)(n+1)(n+2)/4 - 1 for even n.
/// n = 3 is special: no integer has exactly two representations there, so
/// the level-2 value collapses onto level 1, which is 59.
pub fn g_p2(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::Domain(format!("g at level 2 needs n >= 2, got {n}")));
    }
    if n == 3 {
        return Ok(59);
    }
    let c = if n % 2 == 1 { 5 * n - 3 } else { 5 * n };
    Ok(exact_div(c as u128 * (n as u128 + 1) * (n as u128 + 2), 4) - 1)
}

/// Levels 3 through 10, each with its own validity set of indices n.
/// Returns None outside the stated set rather than extrapolating.
pub fn g_p3_to_10(n: u64, p: u64) -> Result<Option<u64>> {
    if !(3..=10).contains(&p) {
        return Err(Error::UnsupportedP(p));
    }
    if n < 2 {
        return Err(Error::Domain(format!(
            "triangular index must be >= 2, got {n}"
        )));
    }
    let odd = n % 2 == 1;
    // (coefficient on n, constant) in c(n) = q*n + r, where
    // g = c(n)(n+1)(n+2)/4 - 1; half/double-scale formulas are folded in
    // by writing them over the common denominator 4.
    let quartic = |cn: u128| Some(exact_div(cn * (n as u128 + 1) * (n as u128 + 2), 4) - 1);
    let n128 = n as u128;
    Ok(match p {
        3 if odd && n >= 3 => quartic(5 * n128 + 3),
        3 if !odd && n >= 6 => quartic(5 * n128 + 6),
        4 if n == 5 || n >= 7 => quartic(6 * n128),
        5 if n == 6 || n >= 8 => {
            // 3(n+1)^2(n+2)/2 - 1
            let v = 3 * (n128 + 1) * (n128 + 1) * (n128 + 2);
            Some(exact_div(v, 2) - 1)
        }
        6 if odd && n >= 11 => quartic(7 * n128 - 3),
        6 if !odd && n >= 8 => quartic(7 * n128),
        7 if odd && n >= 5 => quartic(7 * n128 + 3),
        7 if !odd && n >= 6 => quartic(7 * n128 + 6),
        8 if odd && n >= 9 => quartic(7 * n128 + 9),
        8 if !odd && n >= 12 => quartic(7 * n128 + 12),
        9 if n == 11 || n >= 13 => quartic(8 * n128),
        10 if n == 3 || n == 4 || n >= 8 => quartic(8 * n128 + 6),
        _ => None,
    })
}

/// A closed-form point for one of the fixed small triples: the
/// representation-count level, the g/n/s values at that level, and the
/// full list of Apery threshold values indexed by residue class.
///
/// `n_count` counts positive integers, matching the printed tables for
/// these families; the engine's n >= 0 count is one higher whenever the
/// level is at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormPoint {
    pub p_index: u64,
    pub g: u64,
    pub n_count: u64,
    pub s_sum: u64,
    pub m_values: Vec<u64>,
}

fn positive_count(n_from_zero: u64, p_index: u64) -> u64 {
    n_from_zero - u64::from(p_index >= 1)
}

/// Family for (6, 10, 15) at triangular levels t_{p-1}, p >= 1:
/// g = 30p - 1, s = 15(30p^2 - 31p + 12), thresholds 5(6p + {-6,-1,-2,-3,-4,1}).
///
/// The n count comes out of the thresholds; the naive "subtract one for
/// n = 0" shortcut over-subtracts at p = 1 where the level is 0.
pub fn prop1_t345(p: u64) -> Result<ClosedFormPoint> {
    if p < 1 {
        return Err(Error::Domain("family needs p >= 1".into()));
    }
    let p_index = triangular(p - 1);
    let m_values = vec![
        30 * p - 30,
        30 * p - 5,
        30 * p - 10,
        30 * p - 15,
        30 * p - 20,
        30 * p + 5,
    ];
    Ok(ClosedFormPoint {
        p_index,
        g: 30 * p - 1,
        n_count: positive_count(30 * p - 15, p_index),
        s_sum: 15 * (30 * p * p + 12 - 31 * p),
        m_values,
    })
}

/// Family for (3, 6, 10) at levels (n+1)(5n+2j)/2, n >= 0, 1 <= j <= 5.
pub fn prop2_t234(n: u64, j: u64) -> Result<ClosedFormPoint> {
    if !(1..=5).contains(&j) {
        return Err(Error::Domain(format!("j must be in 1..=5, got {j}")));
    }
    let p_index = exact_div((n as u128 + 1) * (5 * n as u128 + 2 * j as u128), 2);
    let x = 30 * n + 6 * j;
    Ok(ClosedFormPoint {
        p_index,
        g: x + 17,
        n_count: positive_count(x + 9, p_index),
        s_sum: 3 * (150 * n * n + 5 * (12 * j + 17) * n + 6 * j * j + 17 * j + 23),
        m_values: vec![x, x + 10, x + 20],
    })
}

/// Which of the three level quadratics indexes a (10, 15, 21) point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prop3Case {
    /// r_e = n(7n+8-2j)/4, even n
    Even,
    /// r_o = (7n^2 + (8-4j)n + 1)/4, odd n
    Odd,
    /// r_oo = (7n^2 + (2-4j)n - 1)/4, odd n, the lower branch
    OddLow,
}

impl Prop3Case {
    pub fn as_str(self) -> &'static str {
        match self {
            Prop3Case::Even => "r_e",
            Prop3Case::Odd => "r_o",
            Prop3Case::OddLow => "r_oo",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "r_e" | "re" | "even" => Some(Prop3Case::Even),
            "r_o" | "ro" | "odd" => Some(Prop3Case::Odd),
            "r_oo" | "roo" | "odd-low" => Some(Prop3Case::OddLow),
            _ => None,
        }
    }

    fn in_validity(self, n: u64, j: u64) -> bool {
        match self {
            Prop3Case::Even => {
                n.is_multiple_of(2) && (j == 0 || (n >= 2 && matches!(j, 2..=6 | 8)))
            }
            Prop3Case::Odd => n % 2 == 1 && (j == 0 || (n >= 3 && (1..=4).contains(&j))),
            Prop3Case::OddLow => n % 2 == 1 && j <= 1,
        }
    }
}

/// The case's level quadratic, validity-checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prop3Index {
    pub case: Prop3Case,
    pub n: u64,
    pub j: u64,
    pub value: u64,
}

impl Prop3Index {
    pub fn new(case: Prop3Case, n: u64, j: u64) -> Result<Self> {
        if !case.in_validity(n, j) {
            return Err(Error::Domain(format!(
                "(n, j) = ({n}, {j}) is outside the {} validity set",
                case.as_str()
            )));
        }
        let (ni, ji) = (n as i128, j as i128);
        let quad = match case {
            Prop3Case::Even => ni * (7 * ni + 8 - 2 * ji),
            Prop3Case::Odd => 7 * ni * ni + (8 - 4 * ji) * ni + 1,
            Prop3Case::OddLow => 7 * ni * ni + (2 - 4 * ji) * ni - 1,
        };
        let value = exact_div(u128::try_from(quad).expect("level is nonnegative"), 4);
        Ok(Self { case, n, j, value })
    }
}

// Apery threshold offsets shared by all three branches; only the base and
// the residue assignment move.
const P3_OFFSETS: [u64; 10] = [99, 84, 78, 63, 57, 42, 36, 21, 15, 0];
const P3_ORDER_A: [usize; 10] = [9, 4, 8, 3, 7, 2, 6, 1, 5, 0];
const P3_ORDER_B: [usize; 10] = [4, 9, 3, 8, 2, 7, 1, 6, 0, 5];

/// Family for (10, 15, 21) at the r_e / r_o / r_oo levels.
///
/// All ten thresholds are base + {0,15,21,36,42,57,63,78,84,99} with
/// base 105n-15j (even), 105n-30j (odd) or 105n-30j-45 (odd low); the two
/// even-n residue orderings swap with the parity of j. g, n and s follow
/// from the thresholds alone:
///   g = base + 89,  n = base + 45 (from zero),  s = (base^2 + 89 base + 2910)/2.
pub fn prop3_t456(case: Prop3Case, n: u64, j: u64) -> Result<ClosedFormPoint> {
    let index = Prop3Index::new(case, n, j)?;
    let (base, order) = match case {
        Prop3Case::Even => (
            105 * n - 15 * j,
            if j.is_multiple_of(2) {
                &P3_ORDER_A
            } else {
                &P3_ORDER_B
            },
        ),
        Prop3Case::Odd => (105 * n - 30 * j, &P3_ORDER_B),
        Prop3Case::OddLow => (105 * n - 30 * j - 45, &P3_ORDER_A),
    };
    let mut m_values = vec![0u64; 10];
    for (residue, offset) in order.iter().zip(P3_OFFSETS) {
        m_values[*residue] = base + offset;
    }
    debug_assert!(m_values
        .iter()
        .enumerate()
        .all(|(i, &v)| v % 10 == i as u64));
    let s_sum = exact_div(base as u128 * base as u128 + 89 * base as u128 + 2910, 2);
    Ok(ClosedFormPoint {
        p_index: index.value,
        g: base + 89,
        n_count: positive_count(base + 45, index.value),
        s_sum,
        m_values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level0_list() {
        let got: Vec<u64> = (2..=7).map(|n| g_p0(n).unwrap()).collect();
        assert_eq!(got, vec![17, 29, 89, 125, 251, 323]);
        assert!(g_p0(1).is_err());
    }

    #[test]
    fn level0_forms_agree_widely() {
        // the equality of the two printed forms is asserted inside g_p0
        for n in 2..=10_000 {
            g_p0(n).unwrap();
        }
    }

    #[test]
    fn theorem1_examples() {
        let t = theorem1_point(2, 1).unwrap();
        assert_eq!((t.p_index, t.g_value), (5, 47));
        let t = theorem1_point(3, 0).unwrap();
        assert_eq!((t.p_index, t.g_value), (0, 29));
        let t = theorem1_point(4, 0).unwrap();
        assert_eq!((t.p_index, t.g_value), (0, 89));
        assert_eq!(theorem1_point(1, 0), Err(Error::OddNTooSmall));
    }

    #[test]
    fn theorem1_level_zero_matches_g_p0() {
        for n in 2..=60 {
            assert_eq!(theorem1_point(n, 0).unwrap().g_value, g_p0(n).unwrap());
        }
    }

    #[test]
    fn theorem1_level_is_monotone_in_p() {
        for n in 2..=12 {
            let mut last = 0;
            for p in 0..=8 {
                let t = theorem1_point(n, p).unwrap();
                assert!(t.p_index >= last);
                last = t.p_index;
            }
        }
    }

    #[test]
    fn level1_and_level2() {
        let got: Vec<u64> = (2..=7).map(|n| g_p1(n).unwrap()).collect();
        assert_eq!(got, vec![23, 59, 119, 209, 335, 503]);
        assert_eq!(g_p2(5).unwrap(), 230);
        assert_eq!(g_p2(8).unwrap(), 899);
        assert_eq!(g_p2(3).unwrap(), 59);
        assert!(g_p1(1).is_err());
        assert!(g_p2(0).is_err());
    }

    #[test]
    fn levels_3_to_10() {
        assert_eq!(g_p3_to_10(5, 4).unwrap(), Some(314));
        assert_eq!(g_p3_to_10(6, 4).unwrap(), None);
        assert_eq!(g_p3_to_10(8, 6).unwrap(), Some(1259));
        assert_eq!(g_p3_to_10(3, 10).unwrap(), Some(149));
        assert_eq!(g_p3_to_10(4, 10).unwrap(), Some(284));
        assert_eq!(g_p3_to_10(2, 3).unwrap(), None);
        assert_eq!(g_p3_to_10(5, 11), Err(Error::UnsupportedP(11)));
        assert_eq!(g_p3_to_10(5, 2), Err(Error::UnsupportedP(2)));
    }

    #[test]
    fn family_345() {
        let p1 = prop1_t345(1).unwrap();
        assert_eq!((p1.p_index, p1.g, p1.n_count, p1.s_sum), (0, 29, 15, 165));
        assert_eq!(p1.m_values, vec![0, 25, 20, 15, 10, 35]);
        let p2 = prop1_t345(2).unwrap();
        assert_eq!((p2.p_index, p2.g, p2.n_count, p2.s_sum), (1, 59, 44, 1050));
        let p3 = prop1_t345(3).unwrap();
        assert_eq!((p3.p_index, p3.g, p3.n_count, p3.s_sum), (3, 89, 74, 2835));
        assert!(prop1_t345(0).is_err());
    }

    #[test]
    fn family_234() {
        let a = prop2_t234(0, 1).unwrap();
        assert_eq!((a.p_index, a.g, a.n_count, a.s_sum), (1, 23, 14, 138));
        assert_eq!(a.m_values, vec![6, 16, 26]);
        let b = prop2_t234(0, 2).unwrap();
        assert_eq!((b.p_index, b.g), (2, 29));
        let c = prop2_t234(1, 1).unwrap();
        assert_eq!((c.p_index, c.g), (7, 53));
        assert!(prop2_t234(0, 6).is_err());
        assert!(prop2_t234(0, 0).is_err());
    }

    #[test]
    fn family_456() {
        let a = prop3_t456(Prop3Case::Even, 0, 0).unwrap();
        assert_eq!((a.p_index, a.g, a.n_count, a.s_sum), (0, 89, 45, 1455));
        assert_eq!(a.m_values, vec![0, 21, 42, 63, 84, 15, 36, 57, 78, 99]);
        let b = prop3_t456(Prop3Case::OddLow, 1, 0).unwrap();
        assert_eq!((b.p_index, b.g, b.n_count, b.s_sum), (2, 149, 104, 5925));
        let c = prop3_t456(Prop3Case::Odd, 1, 0).unwrap();
        assert_eq!((c.p_index, c.g, c.n_count, c.s_sum), (4, 194, 149, 11640));
    }

    #[test]
    fn family_456_validity_borders() {
        assert!(prop3_t456(Prop3Case::Even, 1, 0).is_err());
        assert!(prop3_t456(Prop3Case::Even, 0, 2).is_err());
        assert!(prop3_t456(Prop3Case::Even, 2, 7).is_err());
        assert!(prop3_t456(Prop3Case::Odd, 1, 1).is_err());
        assert!(prop3_t456(Prop3Case::OddLow, 1, 2).is_err());
        // the two even-n orderings swap residues 0..4 with 5..9
        let even_j = prop3_t456(Prop3Case::Even, 2, 2).unwrap();
        let odd_j = prop3_t456(Prop3Case::Even, 2, 3).unwrap();
        for (i, v) in even_j.m_values.iter().enumerate() {
            assert_eq!(v % 10, i as u64);
        }
        for (i, v) in odd_j.m_values.iter().enumerate() {
            assert_eq!(v % 10, i as u64);
        }
    }
}

//! Generator sets and the small number-theoretic helpers built on them.

use crate::error::{Error, Result};

/// A normalized set of semigroup generators: strictly increasing positive
/// integers with their overall gcd cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    gens: Vec<u64>,
    gcd: u64,
}

impl GeneratorSet {
    /// Normalize a raw list: sort ascending, drop duplicates, compute the gcd.
    ///
    /// Duplicated generators are removed because they add nothing to the
    /// semigroup but would inflate representation counts if kept as distinct
    /// terms.
    pub fn new(values: &[u64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        if values.contains(&0) {
            return Err(Error::NonPositiveElement);
        }
        let mut gens = values.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let gcd = gens.iter().copied().fold(0, num::integer::gcd);
        Ok(Self { gens, gcd })
    }

    pub fn gens(&self) -> &[u64] {
        &self.gens
    }

    pub fn gcd(&self) -> u64 {
        self.gcd
    }

    /// Smallest generator.
    pub fn a1(&self) -> u64 {
        self.gens[0]
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub(crate) fn require_coprime(&self) -> Result<()> {
        if self.gcd != 1 {
            return Err(Error::GcdNotOne(self.gcd));
        }
        Ok(())
    }

    pub(crate) fn require_engine_ready(&self) -> Result<()> {
        self.require_coprime()?;
        if self.len() < 2 {
            return Err(Error::NeedsTwoGenerators(self.len()));
        }
        Ok(())
    }
}

impl std::fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// n-th triangular number n(n+1)/2.
pub fn triangular(n: u64) -> u64 {
    let t = (n as u128) * (n as u128 + 1) / 2;
    u64::try_from(t).expect("triangular number overflows u64")
}

/// gcd of two consecutive triangular numbers t_{n+1} and t_{n+2},
/// which is (n+2)/2 for even n and n+2 for odd n.
pub fn gcd_consecutive_triangular(n: u64) -> u64 {
    assert!(n >= 1);
    let value = if n.is_multiple_of(2) {
        (n + 2) / 2
    } else {
        n + 2
    };
    debug_assert_eq!(
        value,
        num::integer::gcd(triangular(n + 1), triangular(n + 2))
    );
    value
}

/// Three consecutive triangular numbers (t_n, t_{n+1}, t_{n+2}).
///
/// The triple always has gcd 1, so it is valid input for the whole engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularTriple {
    n: u64,
    set: GeneratorSet,
}

impl TriangularTriple {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("triangular index must be >= 1".into()));
        }
        let gens = [triangular(n), triangular(n + 1), triangular(n + 2)];
        let set = GeneratorSet::new(&gens)?;
        debug_assert_eq!(set.gcd(), 1);
        Ok(Self { n, set })
    }

    pub fn index(&self) -> u64 {
        self.n
    }

    pub fn gens(&self) -> [u64; 3] {
        [
            triangular(self.n),
            triangular(self.n + 1),
            triangular(self.n + 2),
        ]
    }

    pub fn set(&self) -> &GeneratorSet {
        &self.set
    }
}

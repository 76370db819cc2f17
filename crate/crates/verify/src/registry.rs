//! The claim registry: named, parameterized checks that compare a closed
//! form or printed fixture against the generic engine and, where feasible,
//! a brute-force scan.

use serde_json::Value;
use std::time::Instant;

use crate::report::{ClaimReport, Verdict};
use pfrob_core::DEFAULT_MAX_CELLS;

/// Evaluation context threaded through every instance.
#[derive(Debug, Clone, Copy)]
pub struct EvalCtx {
    /// When set, instances outside a formula's validity set still record
    /// the engine's observed value (without judging it).
    pub probe: bool,
    pub max_cells: u64,
}

impl Default for EvalCtx {
    fn default() -> Self {
        Self {
            probe: false,
            max_cells: DEFAULT_MAX_CELLS,
        }
    }
}

/// Channel values produced by one instance evaluation.
#[derive(Debug, Clone, Default)]
pub struct Channels {
    pub expected: Option<Value>,
    pub engine: Option<Value>,
    pub oracle: Option<Value>,
    pub skipped: bool,
}

impl Channels {
    pub fn verdict(&self) -> Verdict {
        if self.skipped {
            return Verdict::Skipped;
        }
        let present: Vec<&Value> = [&self.expected, &self.engine, &self.oracle]
            .into_iter()
            .flatten()
            .collect();
        if present.windows(2).all(|w| w[0] == w[1]) {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

pub type EvalFn = Box<dyn Fn(&EvalCtx) -> Channels + Send + Sync>;

pub struct Instance {
    pub params: Vec<(&'static str, i64)>,
    pub eval: EvalFn,
}

pub struct Claim {
    pub id: &'static str,
    pub description: &'static str,
    pub instances: Vec<Instance>,
}

/// All registered claims, held in ascending id order so that report
/// emission is deterministic.
pub struct Registry {
    claims: Vec<Claim>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownClaim(pub String);

impl std::fmt::Display for UnknownClaim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "unknown claim id: {}", self.0)
    }
}

impl std::error::Error for UnknownClaim {}

impl Registry {
    pub fn new(mut claims: Vec<Claim>) -> Self {
        claims.sort_by_key(|c| c.id);
        debug_assert!(
            claims.windows(2).all(|w| w[0].id != w[1].id),
            "claim ids must be unique"
        );
        Self { claims }
    }

    /// The full standard registry.
    pub fn standard() -> Self {
        Self::new(crate::claims::all_claims())
    }

    pub fn claims(&self) -> &[Claim] {
        &self.claims
    }

    pub fn find(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    /// Claims whose id starts with `prefix`; everything when None.
    pub fn matching(&self, prefix: Option<&str>) -> Vec<&Claim> {
        self.claims
            .iter()
            .filter(|c| prefix.is_none_or(|p| c.id.starts_with(p)))
            .collect()
    }

    /// Evaluate every instance of one claim, by exact id.
    pub fn verify_claim(&self, id: &str, ctx: &EvalCtx) -> Result<Vec<ClaimReport>, UnknownClaim> {
        let claim = self.find(id).ok_or_else(|| UnknownClaim(id.to_string()))?;
        Ok(claim
            .instances
            .iter()
            .map(|inst| evaluate(claim.id, inst, ctx))
            .collect())
    }
}

pub(crate) fn evaluate(claim_id: &str, inst: &Instance, ctx: &EvalCtx) -> ClaimReport {
    let start = Instant::now();
    let channels = (inst.eval)(ctx);
    let ms = start.elapsed().as_millis() as u64;
    ClaimReport {
        claim_id: claim_id.to_string(),
        params: inst
            .params
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect(),
        verdict: channels.verdict(),
        expected: channels.expected,
        engine: channels.engine,
        oracle: channels.oracle,
        ms,
    }
}

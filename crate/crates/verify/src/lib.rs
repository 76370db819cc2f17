//! A claim registry pinning the closed-form results to executable checks:
//! closed form vs generic engine vs brute-force oracle, with structured
//! pass/fail reports, plus the exploratory conjecture scanner and the
//! decomposition cross-checks.

#![forbid(unsafe_code)]

pub mod claims;
pub mod decomp;
pub mod registry;
pub mod report;
pub mod run;
pub mod scanner;

pub use decomp::{verify_decomposition, verify_zero_offres};
pub use registry::{Channels, Claim, EvalCtx, Instance, Registry, UnknownClaim};
pub use report::{write_csv, write_jsonl, ClaimReport, Verdict, CSV_HEADER};
pub use run::{run_suite, run_suite_seq, RunOptions, Summary};
pub use scanner::{conjecture_scan, ConjectureFit};

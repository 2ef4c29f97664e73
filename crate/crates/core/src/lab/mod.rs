//! Left-hand sides, verification grids, sharpness probes and lemma oracles.

mod lemmas;
mod lhs;
mod report;
mod sharpness;
mod theorem;
mod verify;

pub use lemmas::{
    lemma1_bound, lemma2_bound, lemma4_d, lemma5_pairs, lemma_checks, psi6, LemmaCheck, LemmaReport, LEMMA5_GRID,
    LEMMA5_MAX_M, LEMMA5_TOLERANCE,
};
pub use lhs::{closed_form, lhs_a, lhs_b, lhs_c, lhs_d, lhs_e, truncation_for, ExpandedFunction, LACUNARY_TOLERANCE};
pub use report::{GridPoint, Verdict, VerificationReport, Witness};
pub use sharpness::{
    sharpness_probe, sharpness_probe_scaled, theorem6_boundary, IffBoundary, DEFAULT_EPSILONS, DEFAULT_FACTOR,
    DEFAULT_SHARPNESS_A,
};
pub use theorem::{TheoremId, TheoremParams};
pub use verify::{standard_family, verify, VerifyConfig, DEFAULT_ANGLE_COUNT, DEFAULT_R_FRACTIONS, PASS_TOLERANCE};

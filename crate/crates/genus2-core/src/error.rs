//! Error type shared by every pipeline stage.

use thiserror::Error;

/// Errors produced by the classification and twist pipeline, tagged with the
/// stage that raised them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input (bad prime, zero form, degenerate coefficients).
    #[error("input: {0}")]
    InvalidInput(String),

    /// A valuation that must be finite is infinite (a required invariant
    /// vanished), so a least common denominator is undefined.
    #[error("valuation: infinite valuation of {0} where a finite one is required")]
    DegenerateInvariant(&'static str),

    /// None of the seven condition blocks of the stable-fiber classification
    /// matched; signals an implementation or input defect.
    #[error("classify: no condition block matched")]
    Unclassifiable,

    /// `special_fiber_tests` called for a residue characteristic where
    /// neither test is defined.
    #[error("classify: special-fiber tests are defined only in characteristic 3 or 5")]
    IrrelevantCharacteristic,

    /// J12 requested for a two-component fiber shape, where it is undefined.
    #[error("invariants: J12 is undefined for shape {0}")]
    J12Undefined(&'static str),

    /// No ω-status block of the active regime matched the model.
    #[error("ramification: indeterminate ω-status in the {0} regime")]
    IndeterminateOmega(&'static str),

    /// A degree-of-singularity formula produced a non-integral or
    /// non-positive value; the ramification index or regime is wrong.
    #[error("degrees: {0} evaluated to the non-admissible value {1}")]
    NonIntegralDegree(&'static str, String),

    /// The two-component regime is outside the paper's hypotheses in
    /// residue characteristic 3.
    #[error("ramification: the two-component regime requires residue characteristic ≠ 3")]
    Char3TwoComponent,

    /// No Möbius change over the prime field makes the leading coefficient
    /// a unit (only possible for tiny residue fields).
    #[error("ramification: no model with ν(a0) finite exists over the prime field")]
    NormalizationFailed,

    /// The tame reduction-type tables have no row for these inputs.
    #[error("tables: no matching row for {0}")]
    NoMatchingRow(String),

    /// A table-row parameter constraint (divisibility or equal-degree
    /// requirement) failed for otherwise matching inputs.
    #[error("tables: row parameter constraint violated: {0}")]
    ParamConstraint(String),

    /// The one-elliptic-one-rational n=2 rows need the explicit
    /// `E1`-smoothness flag, which was not supplied.
    #[error("tables: the two-component n=2, d odd rows require the e1_smooth flag")]
    RemarkFlagRequired,

    /// The extension is wildly ramified; the caller must supply coefficients
    /// in the appropriate wild normal form.
    #[error("twist: wild ramification in characteristic {p}; supply {needed} normal-form coefficients")]
    WildNormalFormRequired {
        /// Residue characteristic (3 or 5).
        p: u64,
        /// Which normal form is required: "c1..c6" or "b0..b6".
        needed: &'static str,
    },

    /// A wild normal form violates its preconditions.
    #[error("wild: {0}")]
    WildPrecondition(String),

    /// A symbol string failed to parse.
    #[error("symbol: {0}")]
    SymbolParse(String),
}

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

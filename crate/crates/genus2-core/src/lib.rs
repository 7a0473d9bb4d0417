//! Reduction types of genus-2 curves and their quadratic twists over a
//! discretely valued field of odd residue characteristic.
//!
//! Given a hyperelliptic equation `y^2 = P(x)` with `deg P ∈ {5, 6}` and
//! exact rational coefficients, the crate computes the Igusa and affine
//! invariants of `P`, decides the shape of the special fiber of the stable
//! model, derives the tame ramification data `(n, r, q, d_K, d)` of the
//! extension over which the stable model appears, and looks up the
//! Namikawa–Ueno-style reduction type of the minimal regular model — for the
//! curve itself and for any quadratic twist `y^2 = D·P(x)`.
//!
//! The twist route is table-driven; [`verify`] contains an independent
//! oracle that classifies the twisted equation `D·P` directly and checks the
//! two routes against each other, plus exhaustive audits of the encoded
//! decision tables.
//!
//! All arithmetic is exact (arbitrary-precision rationals); there is no
//! floating point anywhere.

pub mod error;
mod igusa_tables;
pub mod invariants;
pub mod ramification;
pub mod report;
pub mod stable;
pub mod tables;
pub mod twist;
pub mod valuation;
pub mod verify;

pub use error::Error;
pub use invariants::{
    compute_invariants, discriminant, select_j12, twist_invariants, InvariantSet, J12Selector,
    J12Source, SexticForm,
};
pub use ramification::{
    normalize_model, omega_status, ram_data_irreducible_singular, ram_data_not_irreducible,
    ram_data_smooth, rational_branch_points, OmegaStatus, RamData, Regime,
};
pub use stable::{
    classify_stable, epsilon, is_tame, regime_tame, singularity_degrees, special_fiber_tests,
    Epsilon, SingularityDegrees, SpecialFiberTests, StableFiberKind, StableFiberType,
};
pub use tables::{
    reduction_type_of_twist, reduction_type_of_x, wild_char3_type, wild_char5_type, LookupInput,
    ReductionSymbol,
};
pub use twist::{classify_curve, run_twist, twist_parity, twist_ram_data, twist_stable_shape,
    Classification, TwistParity, TwistQuery, TwistReport};
pub use valuation::{lcd, val, ExtValuation, LocalContext, Val};

/// Exact rational number used for all invariant arithmetic.
pub type Rat = num_rational::BigRational;

/// Small exact rational used for valuation-derived data (`d_K`, `r_K`, ...).
pub type Frac = num_rational::Rational64;

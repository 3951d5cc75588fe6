//! Exact computation of the dimension invariants of graded algebras.
//!
//! The crate computes and cross-checks, at desk scale and in exact
//! arithmetic, the invariants attached to an N-graded algebra with
//! finite-dimensional components:
//!
//! - the coefficient sequence of its Poincare series (truncated),
//! - the pole order d(R) of the series at t = 1, via exact rational fits,
//! - the lattice rank of a monomial algebra's exponent monoid, which equals
//!   its Krull dimension and transcendence degree,
//! - a growth-slope estimator for the Gelfand-Kirillov dimension,
//! - degree-truncated initial algebras of homogeneous subalgebras, with
//!   generator discovery and non-stabilization detection.
//!
//! All algebraic operations use arbitrary-precision integers and rationals;
//! floating point appears only in the two estimators (growth slope and
//! radius of convergence). Every value is immutable after construction and
//! every operation is pure, so the API is safe to call concurrently.

pub mod error;
pub mod gallery;
pub mod linalg;
pub mod monoid;
pub mod monomial;
pub mod random;
pub mod sagbi;
pub mod series;
pub mod text;

pub use error::{Error, Result};
pub use linalg::{bareiss_rank, hermite_normal_form, rational_rank, row_echelon, IntegerLattice, RationalMatrix};
pub use monoid::{
    dimension_report, gk_slope, growth_table, DimensionReport, DimensionReportParams, GrowthTable,
    MonoidPresentation, DEFAULT_MAX_ELEMENTS,
};
pub use monomial::{coeff, Coeff, ExponentVector, MonomialOrder, Polynomial, WeightVector};
pub use sagbi::{
    degree_component_basis, example53_invariant_check, initial_algebra_truncation, subduct,
    verify_poincare_equality, InitialAlgebraTruncation, SubalgebraPresentation,
};
pub use series::{
    classify_hilbert_serre, default_denominator_candidates, default_guard, fit_rational,
    partition_series, pole_order_at_one, power_sum_series, radius_estimate,
    regular_element_factor, FitOutcome, GradedSeries, HsClassification, HsVerdict, NotHsReason,
    RadiusEstimate, RationalSeries,
};

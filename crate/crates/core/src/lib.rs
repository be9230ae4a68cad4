//! Generalized survival functions and Choquet-type integrals over collections of sets.

pub mod aggregators;
pub mod audit;
pub mod choquet;
pub mod decision;
pub mod equivalence;
pub mod error;
pub mod gen;
pub mod gsf;
pub mod index_maps;
pub mod model;
pub mod routes;
pub mod samples;

pub use aggregators::{AggregatorKind, ConditionalAggregation, Fca};
pub use audit::{audit_instance, AuditReport};
pub use choquet::{choquet_generalized, choquet_special, choquet_standard, ChoquetResult, ChoquetRoute};
pub use decision::{
    calibrate_measure, knapsack_select, normalize_criteria, rank_alternatives, shapley_value, shapley_vector,
    verify_calibration, Alternative, CalibrationPolicy, CriterionSpec, Direction, RankMethod, ShapleyTargets,
};
pub use equivalence::{equivalence_condition, integral_equivalent, Triple};
pub use error::{Error, ErrorClass, Result};
pub use gsf::{build_arrangement, gsf_agg_scan, gsf_definition, gsf_measure_scan, gsf_special, Arrangement};
pub use index_maps::{
    build_permutations, gsf_compact, gsf_via_maps, plateau_bounds, CompactRoute, MapRoute, PermutationTables,
    PlateauBounds,
};
pub use model::*;
pub use routes::{compute_gsf, GsfRoute};

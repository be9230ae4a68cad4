//! Every way to compute a survival function, behind one entry point.

use std::fmt;
use std::str::FromStr;

use crate::aggregators::Fca;
use crate::error::{Error, Result};
use crate::gsf::{gsf_agg_scan, gsf_definition, gsf_measure_scan, Arrangement};
use crate::index_maps::{gsf_compact, gsf_via_maps, CompactRoute, MapRoute, PermutationTables, PlateauBounds};
use crate::model::{MonotoneMeasure, Rational, StepFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GsfRoute {
    Definition,
    AggScan,
    MeasureScan,
    Maps(MapRoute),
    Compact(CompactRoute),
}

impl GsfRoute {
    pub const ALL: [GsfRoute; 9] = [
        GsfRoute::Definition,
        GsfRoute::AggScan,
        GsfRoute::MeasureScan,
        GsfRoute::Maps(MapRoute::I),
        GsfRoute::Maps(MapRoute::J),
        GsfRoute::Compact(CompactRoute::PhiUpper),
        GsfRoute::Compact(CompactRoute::PhiLower),
        GsfRoute::Compact(CompactRoute::PsiLower),
        GsfRoute::Compact(CompactRoute::PsiUpper),
    ];

    pub fn name(self) -> &'static str {
        match self {
            GsfRoute::Definition => "def",
            GsfRoute::AggScan => "agg",
            GsfRoute::MeasureScan => "measure",
            GsfRoute::Maps(MapRoute::I) => "i",
            GsfRoute::Maps(MapRoute::J) => "j",
            GsfRoute::Compact(CompactRoute::PhiUpper) => "compact-phi",
            GsfRoute::Compact(CompactRoute::PhiLower) => "compact-phi-lower",
            GsfRoute::Compact(CompactRoute::PsiLower) => "compact-psi",
            GsfRoute::Compact(CompactRoute::PsiUpper) => "compact-psi-upper",
        }
    }
}

impl fmt::Display for GsfRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GsfRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "compact" => Ok(GsfRoute::Compact(CompactRoute::PhiLower)),
            _ => GsfRoute::ALL
                .into_iter()
                .find(|r| r.name() == s)
                .ok_or_else(|| Error::PreconditionViolated(format!("unknown route `{s}`"))),
        }
    }
}

/// The survival function of `(F, μ, x)` along `route`.
pub fn compute_gsf(f: &Fca, mu: &MonotoneMeasure, x: &[Rational], route: GsfRoute) -> Result<StepFunction> {
    if route == GsfRoute::Definition {
        return gsf_definition(f, mu, x);
    }
    let arr = Arrangement::build(f, mu, x)?;
    Ok(gsf_from_arrangement(&arr, route))
}

/// Like [`compute_gsf`] for a prebuilt arrangement. The definition route falls back to the
/// aggregation scan, since it needs the original family.
pub fn gsf_from_arrangement(arr: &Arrangement, route: GsfRoute) -> StepFunction {
    match route {
        GsfRoute::Definition | GsfRoute::AggScan => gsf_agg_scan(arr),
        GsfRoute::MeasureScan => gsf_measure_scan(arr),
        GsfRoute::Maps(m) => gsf_via_maps(arr, &PermutationTables::build(arr), m),
        GsfRoute::Compact(c) => gsf_compact(arr, &PlateauBounds::build(arr), c),
    }
}

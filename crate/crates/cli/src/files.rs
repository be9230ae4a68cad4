//! JSON input files. Sets are written with 1-based members, e.g. `{1,3}`; numbers are exact
//! decimal or fraction strings.

use std::collections::BTreeMap;
use std::path::Path;

use gsf_core::{
    Alternative, AggregatorKind, Collection, CriterionSpec, Fca, IndexSet, MonotoneMeasure, Rational,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

/// Set-keyed values, e.g. `{"{}": "0", "{1,2}": "0.5"}`.
pub type SetMap = BTreeMap<String, String>;

pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: shown, source })
}

pub fn parse_set(n: usize, key: &str) -> CliResult<IndexSet> {
    let t = key.trim();
    let inner = t.strip_prefix('{').and_then(|s| s.strip_suffix('}')).unwrap_or(t).trim();
    if inner.is_empty() {
        return Ok(IndexSet::EMPTY);
    }
    let members = inner
        .split(',')
        .map(|m| m.trim().parse::<usize>().map_err(|_| CliError::SetKey(key.to_string())))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(IndexSet::from_members(n, &members)?)
}

pub fn parse_number(s: &str) -> CliResult<Rational> {
    Ok(s.parse::<Rational>()?)
}

pub fn parse_numbers(v: &[String]) -> CliResult<Vec<Rational>> {
    v.iter().map(|s| parse_number(s)).collect()
}

pub fn numbers_out(v: &[Rational]) -> Vec<String> {
    v.iter().map(Rational::to_plain_string).collect()
}

fn measure_from_map(n: usize, domain: Collection, map: &SetMap) -> CliResult<MonotoneMeasure> {
    let entries = map
        .iter()
        .map(|(k, v)| Ok((parse_set(n, k)?, parse_number(v)?)))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(MonotoneMeasure::new(domain, entries)?)
}

fn measure_to_map(mu: &MonotoneMeasure) -> SetMap {
    mu.entries().map(|(s, v)| (s.to_string(), v.to_plain_string())).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindTag {
    Max,
    Min,
    Sum,
    Choquet,
}

/// One operator: a kind, plus a measure on `2^[n]` for the Choquet-based kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorSpec {
    pub kind: KindTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub measure: Option<SetMap>,
}

impl OperatorSpec {
    fn to_kind(&self, n: usize) -> CliResult<AggregatorKind> {
        Ok(match (self.kind, &self.measure) {
            (KindTag::Max, None) => AggregatorKind::Max,
            (KindTag::Min, None) => AggregatorKind::Min,
            (KindTag::Sum, None) => AggregatorKind::Sum,
            (KindTag::Choquet, Some(m)) => {
                AggregatorKind::choquet_based(measure_from_map(n, Collection::powerset(n)?, m)?)
            }
            (KindTag::Choquet, None) => {
                return Err(CliError::Usage("the choquet operator needs a `measure` on the power set".into()))
            }
            (_, Some(_)) => return Err(CliError::Usage("only the choquet operator takes a `measure`".into())),
        })
    }

    fn from_kind(k: &AggregatorKind) -> Self {
        let (kind, measure) = match k {
            AggregatorKind::Max => (KindTag::Max, None),
            AggregatorKind::Min => (KindTag::Min, None),
            AggregatorKind::Sum => (KindTag::Sum, None),
            AggregatorKind::ChoquetBased(m) => (KindTag::Choquet, Some(measure_to_map(m))),
        };
        OperatorSpec { kind, measure }
    }
}

/// A default operator with optional per-set overrides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AggregatorSpec {
    #[serde(flatten)]
    pub default: OperatorSpec,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub per_set: BTreeMap<String, OperatorSpec>,
}

impl Default for AggregatorSpec {
    fn default() -> Self {
        AggregatorSpec { default: OperatorSpec { kind: KindTag::Sum, measure: None }, per_set: BTreeMap::new() }
    }
}

/// A triple `(F, μ, x)` on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub n: usize,
    /// Names of the criteria or items, used in reports and plots.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// Member lists; the power set when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub collection: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    pub aggregator: AggregatorSpec,
    pub vector: Vec<String>,
    /// Values on the complements of the collection.
    pub measure: SetMap,
}

/// The parsed objects of an [`InstanceFile`].
#[derive(Clone, Debug)]
pub struct Instance {
    pub fca: Fca,
    pub measure: MonotoneMeasure,
    pub x: Vec<Rational>,
    pub labels: Vec<String>,
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

impl InstanceFile {
    pub fn load(path: &Path) -> CliResult<Instance> {
        read_json::<InstanceFile>(path)?.to_instance()
    }

    pub fn to_instance(&self) -> CliResult<Instance> {
        let n = self.n;
        let collection = match &self.collection {
            Some(lists) => Collection::from_member_lists(n, lists)?,
            None => Collection::powerset(n)?,
        };
        let default = self.aggregator.default.to_kind(n)?;
        let overrides = self
            .aggregator
            .per_set
            .iter()
            .map(|(k, op)| Ok((parse_set(n, k)?, op.to_kind(n)?)))
            .collect::<CliResult<Vec<_>>>()?;
        let fca = Fca::mixed(collection.clone(), default, overrides)?;
        let measure = measure_from_map(n, collection.complement(), &self.measure)?;
        let x = parse_numbers(&self.vector)?;
        gsf_core::aggregators::validate_vector(n, &x)?;
        let labels = match &self.labels {
            Some(l) if l.len() == n => l.clone(),
            Some(l) => return Err(gsf_core::Error::DimensionMismatch { expected: n, got: l.len() }.into()),
            None => default_labels(n),
        };
        Ok(Instance { fca, measure, x, labels })
    }

    /// The file describing `(fca, measure, x)`. Sets whose operator differs from the one on
    /// `∅` are listed as overrides.
    pub fn from_parts(fca: &Fca, measure: &MonotoneMeasure, x: &[Rational], labels: Option<Vec<String>>) -> Self {
        let n = fca.n();
        let c = fca.collection();
        let default = fca.kind(IndexSet::EMPTY).expect("collection holds the empty set");
        let per_set = fca
            .kinds()
            .filter(|(_, k)| *k != default)
            .map(|(s, k)| (s.to_string(), OperatorSpec::from_kind(k)))
            .collect();
        InstanceFile {
            n,
            labels,
            collection: (!c.is_powerset()).then(|| c.sets().iter().map(|s| s.members()).collect()),
            aggregator: AggregatorSpec { default: OperatorSpec::from_kind(default), per_set },
            vector: numbers_out(x),
            measure: measure_to_map(measure),
        }
    }
}

/// A measure on the power set, e.g. for Shapley values. Instance files also parse as this.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub measure: SetMap,
}

impl MeasureFile {
    pub fn to_measure(&self) -> CliResult<MonotoneMeasure> {
        measure_from_map(self.n, Collection::powerset(self.n)?, &self.measure)
    }

    pub fn from_measure(mu: &MonotoneMeasure, labels: Option<Vec<String>>) -> Self {
        MeasureFile { n: mu.n(), labels, measure: measure_to_map(mu) }
    }

    pub fn labels(&self) -> Vec<String> {
        self.labels.clone().unwrap_or_else(|| default_labels(self.n))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternativeSpec {
    pub name: String,
    pub scores: Vec<String>,
}

impl AlternativeSpec {
    fn parse(&self) -> CliResult<Alternative> {
        Ok(Alternative::new(self.name.clone(), parse_numbers(&self.scores)?))
    }
}

/// A decision maker with a measure on the power set of the criteria.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionMaker {
    pub name: String,
    pub measure: SetMap,
    /// The maker's own offers; the bundle's shared list when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alternatives: Option<Vec<AlternativeSpec>>,
}

/// Criteria, alternatives and measures for `rank`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankBundle {
    pub criteria: Vec<CriterionSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub alternatives: Vec<AlternativeSpec>,
    pub decision_makers: Vec<DecisionMaker>,
}

/// A decision maker with parsed objects and raw (unnormalized) offers.
pub struct ParsedMaker {
    pub name: String,
    pub measure: MonotoneMeasure,
    pub alternatives: Vec<Alternative>,
}

impl RankBundle {
    pub fn parse(&self) -> CliResult<Vec<ParsedMaker>> {
        let n = self.criteria.len();
        let shared = self.alternatives.iter().map(AlternativeSpec::parse).collect::<CliResult<Vec<_>>>()?;
        self.decision_makers
            .iter()
            .map(|d| {
                let alternatives = match &d.alternatives {
                    Some(a) => a.iter().map(AlternativeSpec::parse).collect::<CliResult<Vec<_>>>()?,
                    None => shared.clone(),
                };
                if alternatives.is_empty() {
                    return Err(CliError::Usage(format!("{} has no alternatives to rank", d.name)));
                }
                Ok(ParsedMaker {
                    name: d.name.clone(),
                    measure: measure_from_map(n, Collection::powerset(n)?, &d.measure)?,
                    alternatives,
                })
            })
            .collect()
    }
}

/// Inputs of `calibrate` for three criteria.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CalibrationFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Shapley targets; normalized before use.
    pub targets: Vec<String>,
    /// `μ({1}), μ({2}), μ({3})`.
    pub singletons: Vec<String>,
    /// `μ({1,2}), μ({1,3}), μ({2,3})` to verify instead of solving for them.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<String>>,
}

//! Seeded random instances for property tests, benchmarks and the CLI harness.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::aggregators::{AggregatorKind, Fca};
use crate::model::{Collection, IndexSet, MonotoneMeasure, Rational};

/// One random `(F, μ, x)` instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub fca: Fca,
    pub measure: MonotoneMeasure,
    pub x: Vec<Rational>,
}

/// Knobs for [`random_instance`].
#[derive(Clone, Debug)]
pub struct GenConfig {
    pub n_choices: Vec<usize>,
    /// Allow a different operator kind on every set.
    pub mixed_kinds: bool,
    /// Allow the Choquet-based kind.
    pub choquet_kind: bool,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig { n_choices: vec![2, 3, 4], mixed_kinds: true, choquet_kind: true }
    }
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random collection holding `∅`, `[n]` and each other subset with a random probability.
pub fn random_collection(rng: &mut impl Rng, n: usize) -> Collection {
    let p: f64 = rng.gen_range(0.15..0.85);
    let sets = IndexSet::powerset(n)
        .into_iter()
        .filter(|s| s.is_empty() || s.len() == n || rng.gen_bool(p));
    Collection::new(n, sets).expect("holds ∅ and [n]")
}

/// A random monotone measure on `2^[n]` with small rational values and frequent ties.
pub fn random_powerset_measure(rng: &mut impl Rng, n: usize) -> MonotoneMeasure {
    let domain = Collection::powerset(n).expect("small n");
    let mut values: Vec<Rational> = Vec::with_capacity(domain.kappa());
    for (k, s) in domain.sets().iter().enumerate() {
        let floor = s
            .positions()
            .map(|p| &values[domain.index_of(s.without(p)).expect("power set")])
            .max()
            .cloned()
            .unwrap_or_else(Rational::zero);
        let step = if k == 0 { 0 } else { rng.gen_range(0..=3) * rng.gen_range(0..=1) };
        values.push(floor + Rational::new(step, 4));
    }
    let top = values.last().expect("nonempty").clone();
    if top.is_zero() {
        *values.last_mut().expect("nonempty") = Rational::one();
    }
    MonotoneMeasure::new(domain.clone(), domain.sets().iter().copied().zip(values)).expect("monotone by construction")
}

/// A random monotone measure on `domain`, obtained by restricting one on the power set.
pub fn random_measure_on(rng: &mut impl Rng, domain: &Collection) -> MonotoneMeasure {
    random_powerset_measure(rng, domain.n()).restrict(domain.clone()).expect("restriction of a monotone measure")
}

/// Components drawn from a small grid, so ties and zeros are common.
pub fn random_vector(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| Rational::new(rng.gen_range(0..=6), 2)).collect()
}

fn random_kind(rng: &mut impl Rng, n: usize, cfg: &GenConfig) -> AggregatorKind {
    let top = if cfg.choquet_kind { 4 } else { 3 };
    match rng.gen_range(0..top) {
        0 => AggregatorKind::Max,
        1 => AggregatorKind::Min,
        2 => AggregatorKind::Sum,
        _ => AggregatorKind::choquet_based(random_powerset_measure(rng, n)),
    }
}

pub fn random_fca(rng: &mut impl Rng, collection: Collection, cfg: &GenConfig) -> Fca {
    let n = collection.n();
    let default = random_kind(rng, n, cfg);
    if cfg.mixed_kinds && rng.gen_bool(0.5) {
        let overrides: Vec<(IndexSet, AggregatorKind)> =
            collection.sets().iter().map(|&s| (s, random_kind(rng, n, cfg))).collect();
        Fca::mixed(collection, default, overrides).expect("built-in kinds")
    } else {
        Fca::uniform(collection, default).expect("built-in kinds")
    }
}

pub fn random_instance(rng: &mut impl Rng, cfg: &GenConfig) -> Instance {
    let n = *cfg.n_choices.choose(rng).expect("at least one n");
    let collection = random_collection(rng, n);
    let measure = random_measure_on(rng, &collection.complement());
    let fca = random_fca(rng, collection, cfg);
    let x = random_vector(rng, n);
    Instance { fca, measure, x }
}

/// The same instance with the ground set relabeled by `perm`, where position `p` becomes
/// `perm[p]`. `None` when a set carries a Choquet-based operator, whose inner measure would
/// need relabeling too.
pub fn relabel_instance(inst: &Instance, perm: &[usize]) -> Option<Instance> {
    let n = inst.fca.n();
    let map = |s: IndexSet| IndexSet::from_positions(s.positions().map(|p| perm[p]));
    let collection = Collection::new(n, inst.fca.collection().sets().iter().map(|&s| map(s))).expect("bijective image");
    let mut kinds = Vec::new();
    for (e, k) in inst.fca.kinds() {
        if matches!(k, AggregatorKind::ChoquetBased(_)) {
            return None;
        }
        kinds.push((map(e), k.clone()));
    }
    let fca = Fca::mixed(collection.clone(), AggregatorKind::Sum, kinds).expect("built-in kinds");
    let measure = MonotoneMeasure::new(collection.complement(), inst.measure.entries().map(|(f, v)| (map(f), v.clone())))
        .expect("relabeling keeps monotonicity");
    let mut x = vec![Rational::zero(); n];
    for (p, v) in inst.x.iter().enumerate() {
        x[perm[p]] = v.clone();
    }
    Some(Instance { fca, measure, x })
}

/// A partner with the same survival function: either a relabeling of the ground set, or the
/// same instance with one unachieved level raised as far as monotonicity allows. Falls back
/// to a clone when neither applies.
pub fn equivalent_partner(rng: &mut impl Rng, inst: &Instance) -> Instance {
    let n = inst.fca.n();
    if rng.gen_bool(0.5) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        if let Some(r) = relabel_instance(inst, &perm) {
            return r;
        }
    }
    let arr = crate::gsf::Arrangement::build(&inst.fca, &inst.measure, &inst.x).expect("valid instance");
    let pb = crate::index_maps::PlateauBounds::build(&arr);
    let unachieved: Vec<usize> = (0..arr.kappa())
        .filter(|&j| !crate::index_maps::is_value_achieved(j, &arr, &pb).expect("in range"))
        .collect();
    let Some(&j) = unachieved.choose(rng) else { return inst.clone() };
    let target = arr.f_sets()[j];
    let cap = inst
        .measure
        .entries()
        .filter(|(f, _)| *f != target && target.is_subset(*f))
        .map(|(_, v)| v.clone())
        .min();
    let current = inst.measure.value(target).clone();
    let cap = cap.unwrap_or_else(|| &current + &Rational::one());
    let raised = &current + &(&(&cap - &current) * &Rational::new(rng.gen_range(0..=2), 2));
    let measure = MonotoneMeasure::new(
        inst.measure.domain().clone(),
        inst.measure.entries().map(|(f, v)| (f, if f == target { raised.clone() } else { v.clone() })),
    )
    .expect("raised within the monotone range");
    Instance { measure, ..inst.clone() }
}

//! Small reference instances with known answers, shared by tests, benchmarks and the CLI.

use crate::aggregators::{AggregatorKind, Fca};
use crate::decision::{Alternative, CriterionSpec, Direction};
use crate::model::{q, Collection, IndexSet, MonotoneMeasure, Rational};

fn lists(sets: &[&[usize]]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.to_vec()).collect()
}

fn measure(n: usize, domain: &Collection, table: &[(&[usize], &str)]) -> MonotoneMeasure {
    MonotoneMeasure::new(
        domain.clone(),
        table.iter().map(|(m, v)| (IndexSet::from_members(n, m).expect("valid members"), q(v))),
    )
    .expect("valid sample measure")
}

fn vector(xs: &[&str]) -> Vec<Rational> {
    xs.iter().map(|s| q(s)).collect()
}

/// A reference instance.
#[derive(Clone, Debug)]
pub struct Sample {
    pub fca: Fca,
    pub measure: MonotoneMeasure,
    pub x: Vec<Rational>,
}

/// Six sets, sum aggregation, `x = (2, 3, 1)`. Survival function `1` on `[0,1)`, `1/2` on `[1,6)`.
pub fn six_sets() -> Sample {
    let c = Collection::from_member_lists(3, &lists(&[&[], &[1], &[2], &[3], &[1, 3], &[1, 2, 3]])).expect("valid");
    let measure = measure(
        3,
        &c.complement(),
        &[(&[1, 2, 3], "1"), (&[2, 3], "0.7"), (&[1, 3], "0.5"), (&[1, 2], "0.5"), (&[2], "0.5"), (&[], "0")],
    );
    Sample { fca: Fca::uniform(c, AggregatorKind::Sum).expect("sum"), measure, x: vector(&["2", "3", "1"]) }
}

/// Five sets whose index permutation is decreasing.
pub fn decreasing() -> Sample {
    let c = Collection::from_member_lists(3, &lists(&[&[], &[1], &[3], &[1, 2], &[1, 2, 3]])).expect("valid");
    let measure = measure(
        3,
        &c.complement(),
        &[(&[], "0"), (&[3], "0.3"), (&[1, 2], "0.5"), (&[2, 3], "0.8"), (&[1, 2, 3], "1")],
    );
    Sample { fca: Fca::uniform(c, AggregatorKind::Sum).expect("sum"), measure, x: vector(&["2", "3", "4"]) }
}

/// Product labels of the knapsack sample.
pub const KNAPSACK_LABELS: [&str; 4] = ["a", "b", "c", "d"];

/// Four products with volumes `(80, 75, 55, 65)`; the measure prices the products left behind.
pub fn knapsack() -> Sample {
    let c = Collection::powerset(4).expect("n = 4");
    let table: [(&[usize], &str); 16] = [
        (&[1, 2, 3, 4], "3.6"),
        (&[2, 3, 4], "2.4"),
        (&[1, 3, 4], "2.5"),
        (&[1, 2, 4], "3.0"),
        (&[1, 2, 3], "2.5"),
        (&[3, 4], "1.4"),
        (&[2, 4], "1.8"),
        (&[2, 3], "1.4"),
        (&[1, 4], "1.8"),
        (&[1, 3], "1.8"),
        (&[1, 2], "2.2"),
        (&[4], "0.8"),
        (&[3], "0.6"),
        (&[2], "1.0"),
        (&[1], "1.2"),
        (&[], "0"),
    ];
    let measure = measure(4, &c, &table);
    Sample { fca: Fca::uniform(c, AggregatorKind::Sum).expect("sum"), measure, x: vector(&["80", "75", "55", "65"]) }
}

/// Expected knapsack survival function as `(lo, hi, value)` rows.
pub const KNAPSACK_GSF: [(&str, &str, &str); 12] = [
    ("0", "55", "3.6"),
    ("55", "65", "3"),
    ("65", "80", "2.5"),
    ("80", "120", "2.4"),
    ("120", "130", "2.2"),
    ("130", "145", "1.8"),
    ("145", "195", "1.4"),
    ("195", "200", "1.2"),
    ("200", "210", "1"),
    ("210", "220", "0.8"),
    ("220", "275", "0.6"),
    ("275", "inf", "0"),
];

/// Two triples with the same survival function: max of `(2, 5, 9)` and sum of `(2, 3, 4)`.
pub fn equivalent_max_sum() -> (Sample, Sample) {
    let c = Collection::from_member_lists(3, &lists(&[&[], &[1], &[1, 2, 3]])).expect("valid");
    let m = measure(3, &c.complement(), &[(&[], "0"), (&[2, 3], "0.5"), (&[1, 2, 3], "1")]);
    (
        Sample { fca: Fca::uniform(c.clone(), AggregatorKind::Max).expect("max"), measure: m.clone(), x: vector(&["2", "5", "9"]) },
        Sample { fca: Fca::uniform(c, AggregatorKind::Sum).expect("sum"), measure: m, x: vector(&["2", "3", "4"]) },
    )
}

/// Two sum triples with the same survival function: `(1, 3, 5)` and `(2, 4, 3)`.
pub fn equivalent_sums() -> (Sample, Sample) {
    let c = Collection::from_member_lists(3, &lists(&[&[], &[2], &[3], &[1, 2], &[1, 3], &[1, 2, 3]])).expect("valid");
    let m = measure(
        3,
        &c.complement(),
        &[(&[], "0"), (&[1, 3], "0.5"), (&[1, 2], "0.5"), (&[3], "0.5"), (&[2], "0.5"), (&[1, 2, 3], "1")],
    );
    let f = Fca::uniform(c, AggregatorKind::Sum).expect("sum");
    (
        Sample { fca: f.clone(), measure: m.clone(), x: vector(&["1", "3", "5"]) },
        Sample { fca: f, measure: m, x: vector(&["2", "4", "3"]) },
    )
}

/// Distance, price and reviews.
pub fn accommodation_criteria() -> Vec<CriterionSpec> {
    [("distance", Direction::Minimize), ("price", Direction::Minimize), ("reviews", Direction::Maximize)]
        .into_iter()
        .map(|(name, direction)| CriterionSpec { name: name.into(), direction })
        .collect()
}

/// One decision maker of the accommodation sample.
#[derive(Clone, Debug)]
pub struct Person {
    pub name: &'static str,
    /// Singleton weights, used both as `μ({i})` and as Shapley targets.
    pub singletons: [&'static str; 3],
    /// `(μ{1,2}, μ{1,3}, μ{2,3})`.
    pub pairs: [&'static str; 3],
    /// The person's two offers, unnormalized.
    pub options: [(&'static str, [&'static str; 3]); 2],
}

impl Person {
    pub fn measure(&self) -> MonotoneMeasure {
        let c = Collection::powerset(3).expect("n = 3");
        let [s1, s2, s3] = self.singletons;
        let [p12, p13, p23] = self.pairs;
        measure(
            3,
            &c,
            &[(&[], "0"), (&[1], s1), (&[2], s2), (&[3], s3), (&[1, 2], p12), (&[1, 3], p13), (&[2, 3], p23), (&[1, 2, 3], "1")],
        )
    }

    pub fn singleton_values(&self) -> Vec<Rational> {
        vector(&self.singletons)
    }

    pub fn pair_values(&self) -> [Rational; 3] {
        self.pairs.map(q)
    }

    pub fn raw_options(&self) -> Vec<Alternative> {
        self.options.iter().map(|(n, v)| Alternative::new(*n, vector(v))).collect()
    }
}

pub fn people() -> [Person; 3] {
    [
        Person {
            name: "Anthony",
            singletons: ["0.3", "0.8", "0.1"],
            pairs: ["0.94", "0.48", "0.81"],
            options: [("a1", ["4", "100", "7"]), ("a2", ["10", "84", "8"])],
        },
        Person {
            name: "Brittany",
            singletons: ["0.75", "0.4", "0.2"],
            pairs: ["0.85", "0.76", "0.59"],
            options: [("b1", ["7", "100", "2"]), ("b2", ["10", "80", "10"])],
        },
        Person {
            name: "Charley",
            singletons: ["0.2", "0.5", "0.7"],
            pairs: ["0.63", "0.71", "0.84"],
            options: [("c1", ["3", "100", "8"]), ("c2", ["15", "95", "10"])],
        },
    ]
}

/// Published 4-decimal scores: `[option pair][person] = ((standard first, standard second),
/// (generalized first, generalized second))`. Option pairs and people follow [`people`].
pub const ACCOMMODATION_SCORES: [[((&str, &str), (&str, &str)); 3]; 3] = [
    [
        (("0.8943", "0.8860"), ("0.6439", "0.6857")),
        (("0.9604", "0.7540"), ("0.6845", "0.4554")),
        (("0.8899", "0.9040"), ("0.6161", "0.6566")),
    ],
    [
        (("0.8240", "0.9430"), ("0.6087", "0.7127")),
        (("0.8600", "0.8770"), ("0.6393", "0.5861")),
        (("0.6180", "0.9520"), ("0.3551", "0.6766")),
    ],
    [
        (("0.9560", "0.8480"), ("0.7069", "0.6654")),
        (("0.9650", "0.6720"), ("0.6895", "0.3532")),
        (("0.9045", "0.8720"), ("0.6226", "0.6433")),
    ],
];

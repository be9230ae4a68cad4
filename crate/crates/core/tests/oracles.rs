//! Published reference values, checked exactly where the source is exact and at its rounding
//! otherwise.

use gsf_core::choquet::{choquet_generalized, choquet_special, choquet_standard, owa_evaluate, owa_weights, ChoquetRoute};
use gsf_core::decision::{
    calibrate_measure, knapsack_select, normalize_criteria, rank_alternatives, shapley_vector, verify_calibration,
    CalibrationPolicy, RankMethod, ShapleyTargets,
};
use gsf_core::equivalence::{equivalence_condition, integral_equivalent, Triple};
use gsf_core::gsf::{build_arrangement, gsf_definition, gsf_special};
use gsf_core::index_maps::{build_permutations, gsf_via_maps, indexed_gsf, MapRoute};
use gsf_core::samples::{self, Sample, ACCOMMODATION_SCORES, KNAPSACK_GSF};
use gsf_core::{compute_gsf, q, AggregatorKind, Collection, Fca, GsfRoute, IndexSet, Rational, SpecialMeasure};

fn v(xs: &[&str]) -> Vec<Rational> {
    xs.iter().map(|s| q(s)).collect()
}

fn all_routes(s: &Sample) -> Vec<String> {
    GsfRoute::ALL.iter().map(|&r| compute_gsf(&s.fca, &s.measure, &s.x, r).unwrap().to_string()).collect()
}

#[test]
fn six_set_example_every_route() {
    let s = samples::six_sets();
    for g in all_routes(&s) {
        assert_eq!(g, "[0,1) -> 1; [1,6) -> 1/2; [6,inf) -> 0");
    }
    let pt = build_permutations(&build_arrangement(&s.fca, &s.measure, &s.x).unwrap());
    assert_eq!(pt.pi, [5, 2, 4, 1, 3, 0]);
    assert_eq!(indexed_gsf(&pt).to_string(), "[0,1) -> 5; [1,3) -> 2; [3,5) -> 1; [5,inf) -> 0");
}

#[test]
fn decreasing_example() {
    let s = samples::decreasing();
    for g in all_routes(&s) {
        assert_eq!(g, "[0,2) -> 1; [2,4) -> 4/5; [4,5) -> 1/2; [5,9) -> 3/10; [9,inf) -> 0");
    }
    let pt = build_permutations(&build_arrangement(&s.fca, &s.measure, &s.x).unwrap());
    assert_eq!(pt.pi, [4, 3, 2, 1, 0]);
    assert!(pt.is_decreasing());
    assert_eq!(pt.i_map, pt.pi);
    assert_eq!(pt.j_map, pt.pi_inv);
}

#[test]
fn knapsack_survival_function_and_choice() {
    let s = samples::knapsack();
    let expected: Vec<String> = KNAPSACK_GSF
        .iter()
        .map(|(lo, hi, val)| {
            let hi = if *hi == "inf" { "inf".to_string() } else { q(hi).to_string() };
            format!("[{},{}) -> {}", q(lo), hi, q(val))
        })
        .collect();
    for g in all_routes(&s) {
        assert_eq!(g, expected.join("; "));
    }
    let arr = build_arrangement(&s.fca, &s.measure, &s.x).unwrap();
    let pt = build_permutations(&arr);
    assert_eq!(pt.kappa(), 16);
    assert_eq!(gsf_via_maps(&arr, &pt, MapRoute::I).eval(&q("200")), &q("1"));

    let c = s.fca.collection();
    let pick = knapsack_select(&s.x, &s.measure, &q("200"), c).unwrap();
    assert_eq!(pick.value, q("1"));
    assert_eq!(pick.chosen, IndexSet::from_members(4, &[1, 3, 4]).unwrap());
    let empty = knapsack_select(&s.x, &s.measure, &q("0"), c).unwrap();
    assert_eq!((empty.value, empty.chosen), (q("3.6"), IndexSet::EMPTY));
    let all = knapsack_select(&s.x, &s.measure, &q("275"), c).unwrap();
    assert_eq!((all.value, all.chosen), (q("0"), IndexSet::full(4)));
}

#[test]
fn greatest_and_special_measures() {
    let s = samples::six_sets();
    assert_eq!(gsf_special(&SpecialMeasure::Greatest, &s.fca, &s.x).unwrap().to_string(), "[0,6) -> 1; [6,inf) -> 0");
    let greatest = SpecialMeasure::Greatest.induce(&s.measure.domain().clone()).unwrap();
    assert_eq!(gsf_definition(&s.fca, &greatest, &s.x).unwrap().to_string(), "[0,6) -> 1; [6,inf) -> 0");
    assert_eq!(choquet_special(&SpecialMeasure::Weakest, &s.fca, &s.x).unwrap(), q("1"));

    let p = Fca::uniform(Collection::powerset(3).unwrap(), AggregatorKind::Sum).unwrap();
    let sym = SpecialMeasure::Symmetric(v(&["0", "0.2", "0.6", "1"]));
    assert_eq!(
        gsf_special(&sym, &p, &v(&["1", "2", "3"])).unwrap().to_string(),
        "[0,1) -> 1; [1,3) -> 3/5; [3,6) -> 1/5; [6,inf) -> 0"
    );
    let pos = SpecialMeasure::Possibility(v(&["0.5", "1", "0.3"]));
    assert_eq!(
        gsf_special(&pos, &p, &v(&["2", "3", "1"])).unwrap().to_string(),
        "[0,3) -> 1; [3,5) -> 1/2; [5,6) -> 3/10; [6,inf) -> 0"
    );
}

#[test]
fn choquet_values() {
    let s = samples::six_sets();
    for r in ChoquetRoute::ALL {
        assert_eq!(choquet_generalized(&s.fca, &s.measure, &s.x, r).unwrap().value, q("7/2"));
    }
    let max = Fca::uniform(Collection::powerset(3).unwrap(), AggregatorKind::Max).unwrap();
    let levels = v(&["0", "0.2", "0.6", "1"]);
    assert_eq!(choquet_special(&SpecialMeasure::Symmetric(levels.clone()), &max, &v(&["1", "2", "3"])).unwrap(), q("1.8"));
    assert_eq!(owa_weights(&levels).unwrap(), v(&["0.4", "0.4", "0.2"]));
    assert_eq!(owa_evaluate(&owa_weights(&levels).unwrap(), &v(&["1", "2", "3"])).unwrap(), q("1.8"));
}

#[test]
fn equivalence_examples() {
    for ((a, b), gsf) in [
        (samples::equivalent_max_sum(), "[0,2) -> 1; [2,9) -> 1/2; [9,inf) -> 0"),
        (samples::equivalent_sums(), "[0,3) -> 1; [3,9) -> 1/2; [9,inf) -> 0"),
    ] {
        let t1 = Triple::new(a.measure, a.fca, a.x).unwrap();
        let t2 = Triple::new(b.measure, b.fca, b.x).unwrap();
        assert_eq!(t1.gsf().to_string(), gsf);
        assert_eq!(t2.gsf().to_string(), gsf);
        assert!(integral_equivalent(&t1, &t2));
        assert!(equivalence_condition(&t1, &t2).holds);
    }
}

#[test]
fn unachieved_level_does_not_matter() {
    let s = samples::six_sets();
    let n = 3;
    let lowered = gsf_core::MonotoneMeasure::new(
        s.measure.domain().clone(),
        s.measure.entries().map(|(f, val)| {
            let val = if f == IndexSet::from_members(n, &[2, 3]).unwrap() { q("0.65") } else { val.clone() };
            (f, val)
        }),
    )
    .unwrap();
    let t1 = Triple::new(s.measure.clone(), s.fca.clone(), s.x.clone()).unwrap();
    let t2 = Triple::new(lowered, s.fca, s.x).unwrap();
    assert!(integral_equivalent(&t1, &t2));
    assert!(equivalence_condition(&t1, &t2).holds);
}

fn close(value: &Rational, published: &str) -> bool {
    (value - &q(published)).abs() <= q("0.00005")
}

#[test]
fn accommodation_table() {
    let people = samples::people();
    let criteria = samples::accommodation_criteria();
    let normalized: Vec<_> =
        people.iter().map(|p| normalize_criteria(&criteria, &p.raw_options()).unwrap()).collect();
    assert_eq!(normalized[0][0].scores, v(&["1", "0.84", "0.875"]));
    assert_eq!(normalized[2][1].scores, v(&["0.2", "1", "1"]));

    for (pair, options) in normalized.iter().enumerate() {
        for (who, person) in people.iter().enumerate() {
            let mu = person.measure();
            let ((s1, s2), (g1, g2)) = ACCOMMODATION_SCORES[pair][who];
            let standard = rank_alternatives(options, &mu, &RankMethod::Standard).unwrap();
            let general = rank_alternatives(options, &mu, &RankMethod::generalized_default(&mu).unwrap()).unwrap();
            let score = |r: &[gsf_core::decision::Ranked], name: &str| r.iter().find(|x| x.name == name).unwrap().score.clone();
            let (first, second) = (&options[0].name, &options[1].name);
            for (r, p1, p2) in [(&standard, s1, s2), (&general, g1, g2)] {
                let (a, b) = (score(r, first), score(r, second));
                assert!(close(&a, p1), "{} {first}: {} vs {p1}", person.name, a.to_f64());
                assert!(close(&b, p2), "{} {second}: {} vs {p2}", person.name, b.to_f64());
                assert_eq!(a > b, q(p1) > q(p2), "{} prefers wrongly between {first} and {second}", person.name);
            }
        }
    }
}

#[test]
fn generalized_value_beyond_rounding() {
    let anthony = &samples::people()[0];
    let mu = anthony.measure();
    let f = Fca::uniform(Collection::powerset(3).unwrap(), AggregatorKind::choquet_based(mu.clone())).unwrap();
    let r = choquet_generalized(&f, &mu, &v(&["0.4", "1", "1"]), ChoquetRoute::Integrate).unwrap();
    assert_eq!(r.value.to_decimal(5), "0.68572");
    assert_eq!(choquet_standard(&v(&["1", "0.84", "0.875"]), &mu).unwrap(), q("0.8943"));
}

#[test]
fn shapley_fixtures() {
    let expected = [["0.25", "0.665", "0.085"]];
    for (k, person) in samples::people().iter().enumerate() {
        let targets = ShapleyTargets { weights: person.singleton_values() };
        let phi = shapley_vector(&person.measure()).unwrap();
        let t = targets.normalized().unwrap();
        for (a, b) in phi.iter().zip(&t) {
            assert!((a - b).abs() <= q("0.02"), "{}: {phi:?} vs {t:?}", person.name);
        }
        if k == 0 {
            assert_eq!(phi, v(&expected[0]));
        }
        let check = verify_calibration(&targets, &person.singleton_values(), &person.pair_values()).unwrap();
        assert!(check.within(&q("0.02")), "{}: {check:?}", person.name);
        let cal = calibrate_measure(&targets, &person.singleton_values(), CalibrationPolicy::MonotoneMinimumNorm).unwrap();
        assert_eq!(shapley_vector(&cal.measure).unwrap(), t);
    }
}

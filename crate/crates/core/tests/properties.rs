use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

use gsf_core::audit::{audit_instance, audit_structure};
use gsf_core::choquet::{owa_evaluate, owa_weights};
use gsf_core::decision::{knapsack_select, normalize_criteria, rank_alternatives, Ranked};
use gsf_core::gen::{self, equivalent_partner, random_instance, random_powerset_measure, random_vector, GenConfig};
use gsf_core::routes::gsf_from_arrangement;
use gsf_core::{
    choquet_generalized, choquet_special, choquet_standard, equivalence_condition, gsf_definition, gsf_special,
    integral_equivalent, shapley_vector, AggregatorKind, Alternative, Arrangement, ChoquetRoute, Collection,
    CriterionSpec, Direction, Fca, GsfRoute, IndexSet, RankMethod, Rational, SpecialMeasure, Triple,
};

fn seed() -> impl Strategy<Value = u64> {
    any::<u64>()
}

fn config() -> ProptestConfig {
    ProptestConfig { cases: 200, ..ProptestConfig::default() }
}

/// Shuffles each run of equal values.
fn shuffle_ties(rng: &mut impl Rng, mut v: Vec<(IndexSet, Rational)>) -> Vec<(IndexSet, Rational)> {
    let mut start = 0;
    while start < v.len() {
        let end = (start..v.len()).take_while(|&k| v[k].1 == v[start].1).last().unwrap() + 1;
        v[start..end].shuffle(rng);
        start = end;
    }
    v
}

fn levels(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    let mut v: Vec<Rational> = (0..=n).map(|_| Rational::new(rng.gen_range(0..=4), 4)).collect();
    v.sort();
    v[0] = Rational::zero();
    v[n] = Rational::one();
    v
}

fn distribution(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    let mut v: Vec<Rational> = (0..n).map(|_| Rational::new(rng.gen_range(0..=4), 4)).collect();
    v[rng.gen_range(0..n)] = Rational::one();
    v
}

fn set_monotone_family(rng: &mut impl Rng, n: usize) -> Fca {
    let kind = if rng.gen_bool(0.5) { AggregatorKind::Sum } else { AggregatorKind::Max };
    Fca::uniform(Collection::powerset(n).unwrap(), kind).unwrap()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn routes_and_structure_agree(s in seed()) {
        let mut g = gen::rng(s);
        let i = random_instance(&mut g, &GenConfig::default());
        let r = audit_instance(&i.fca, &i.measure, &i.x).unwrap();
        prop_assert!(r.passed(), "{:?}", r.findings);
    }

    #[test]
    fn tie_order_does_not_matter(s in seed()) {
        let mut g = gen::rng(s);
        let i = random_instance(&mut g, &GenConfig::default());
        let arr = Arrangement::build(&i.fca, &i.measure, &i.x).unwrap();
        let reference = gsf_from_arrangement(&arr, GsfRoute::AggScan);
        let e = shuffle_ties(&mut g, arr.e_order().map(|(s, v)| (s, v.clone())).collect());
        let f = shuffle_ties(&mut g, arr.f_order().map(|(s, v)| (s, v.clone())).collect());
        let shuffled = Arrangement::from_parts(arr.n(), e, f).unwrap();
        for route in GsfRoute::ALL {
            prop_assert_eq!(gsf_from_arrangement(&shuffled, route), reference.clone());
        }
        let r = audit_structure(&shuffled);
        prop_assert!(r.passed(), "{:?}", r.findings);
    }

    #[test]
    fn special_forms_match_the_definition(s in seed(), n in 1usize..=4) {
        let mut g = gen::rng(s);
        let f = set_monotone_family(&mut g, n);
        let x = random_vector(&mut g, n);
        let domain = f.collection().complement();
        for kind in [
            SpecialMeasure::Greatest,
            SpecialMeasure::Weakest,
            SpecialMeasure::Symmetric(levels(&mut g, n)),
            SpecialMeasure::Possibility(distribution(&mut g, n)),
            SpecialMeasure::Necessity(distribution(&mut g, n)),
        ] {
            let mu = kind.induce(&domain).unwrap();
            prop_assert_eq!(gsf_special(&kind, &f, &x).unwrap(), gsf_definition(&f, &mu, &x).unwrap(), "{:?}", kind);
            let c = choquet_generalized(&f, &mu, &x, ChoquetRoute::Integrate).unwrap().value;
            prop_assert_eq!(choquet_special(&kind, &f, &x).unwrap(), c);
        }
    }

    #[test]
    fn max_family_gives_the_classical_integral(s in seed(), n in 1usize..=4) {
        let mut g = gen::rng(s);
        let mu = random_powerset_measure(&mut g, n);
        let x = random_vector(&mut g, n);
        let f = Fca::uniform(Collection::powerset(n).unwrap(), AggregatorKind::Max).unwrap();
        for route in ChoquetRoute::ALL {
            prop_assert_eq!(choquet_generalized(&f, &mu, &x, route).unwrap().value, choquet_standard(&x, &mu).unwrap());
        }
        let l = levels(&mut g, n);
        let sym = choquet_special(&SpecialMeasure::Symmetric(l.clone()), &f, &x).unwrap();
        prop_assert_eq!(sym, owa_evaluate(&owa_weights(&l).unwrap(), &x).unwrap());
    }

    #[test]
    fn equivalence_condition_matches_equal_survival_functions(s in seed()) {
        let mut g = gen::rng(s);
        let cfg = GenConfig { n_choices: vec![g.gen_range(2..=4)], ..GenConfig::default() };
        let a = random_instance(&mut g, &cfg);
        let b = if g.gen_bool(0.6) { equivalent_partner(&mut g, &a) } else { random_instance(&mut g, &cfg) };
        let t1 = Triple::new(a.measure, a.fca, a.x).unwrap();
        let t2 = Triple::new(b.measure, b.fca, b.x).unwrap();
        let report = equivalence_condition(&t1, &t2);
        prop_assert_eq!(report.holds, integral_equivalent(&t1, &t2));
        prop_assert_eq!(report.witness().is_none(), report.holds);
    }

    #[test]
    fn sum_and_max_are_set_monotone(s in seed(), n in 1usize..=4) {
        let mut g = gen::rng(s);
        let f = set_monotone_family(&mut g, n);
        prop_assert!(f.is_set_monotone_at(&random_vector(&mut g, n)).unwrap());
    }

    #[test]
    fn sum_is_additive(s in seed(), n in 1usize..=4) {
        let mut g = gen::rng(s);
        let f = Fca::uniform(Collection::powerset(n).unwrap(), AggregatorKind::Sum).unwrap();
        let (x, y) = (random_vector(&mut g, n), random_vector(&mut g, n));
        let xy: Vec<Rational> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
        for &e in f.collection().sets() {
            prop_assert_eq!(f.evaluate(&xy, e).unwrap(), f.evaluate(&x, e).unwrap() + f.evaluate(&y, e).unwrap());
        }
    }

    #[test]
    fn shapley_values_sum_to_the_top(s in seed(), n in 1usize..=5) {
        let mut g = gen::rng(s);
        let mu = random_powerset_measure(&mut g, n);
        let total: Rational = shapley_vector(&mu).unwrap().into_iter().sum();
        prop_assert_eq!(&total, mu.value(IndexSet::full(n)));
    }

    #[test]
    fn ranking_ignores_positive_rescaling(s in seed(), scale in 1i64..=20) {
        let mut g = gen::rng(s);
        let criteria: Vec<CriterionSpec> = (0..3)
            .map(|k| CriterionSpec { name: format!("c{k}"), direction: if g.gen_bool(0.5) { Direction::Maximize } else { Direction::Minimize } })
            .collect();
        let alts: Vec<Alternative> = (0..4)
            .map(|k| Alternative::new(format!("o{k}"), (0..3).map(|_| Rational::new(g.gen_range(1..=9), 1)).collect()))
            .collect();
        let scaled: Vec<Alternative> = alts
            .iter()
            .map(|a| Alternative::new(a.name.clone(), a.scores.iter().map(|v| v * &Rational::new(scale, 3)).collect()))
            .collect();
        let mu = random_powerset_measure(&mut g, 3);
        let rank = |alts: &[Alternative]| -> Vec<Ranked> {
            rank_alternatives(&normalize_criteria(&criteria, alts).unwrap(), &mu, &RankMethod::Standard).unwrap()
        };
        prop_assert_eq!(rank(&alts), rank(&scaled));
    }

    #[test]
    fn knapsack_value_is_the_survival_function(s in seed(), n in 1usize..=4, budget in 0i64..40) {
        let mut g = gen::rng(s);
        let mu = random_powerset_measure(&mut g, n);
        let volumes = random_vector(&mut g, n);
        let c = Collection::powerset(n).unwrap();
        let f = Fca::uniform(c.clone(), AggregatorKind::Sum).unwrap();
        let b = Rational::new(budget, 4);
        let pick = knapsack_select(&volumes, &mu, &b, &c).unwrap();
        let gsf = gsf_definition(&f, &mu, &volumes).unwrap();
        prop_assert_eq!(&pick.value, gsf.eval(&b));
        let load: Rational = pick.chosen.positions().map(|p| volumes[p].clone()).sum();
        prop_assert!(load <= b);
        prop_assert_eq!(mu.value(pick.chosen.complement(n)), &pick.value);
    }
}

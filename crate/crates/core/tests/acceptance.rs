//! Acceptance criteria 1 to 10. Each prints one pass/fail line; the test fails if any does.

use std::time::{Duration, Instant};

use gsf_core::audit::{audit_routes, audit_structure};
use gsf_core::choquet::{owa_evaluate, owa_weights};
use gsf_core::decision::verify_calibration;
use gsf_core::gen::{self, equivalent_partner, random_instance, random_powerset_measure, random_vector, GenConfig};
use gsf_core::index_maps::decreasing_shortcut;
use gsf_core::samples::{self, ACCOMMODATION_SCORES, KNAPSACK_GSF};
use gsf_core::{
    build_arrangement, build_permutations, choquet_generalized, choquet_special, choquet_standard, compute_gsf,
    equivalence_condition, gsf_via_maps, integral_equivalent, knapsack_select, normalize_criteria, q,
    rank_alternatives, shapley_vector, AggregatorKind, Arrangement, ChoquetRoute, Collection, Fca, GsfRoute,
    IndexSet, MapRoute, RankMethod, Rational, ShapleyTargets, SpecialMeasure, StepFunction, Triple,
};
use rand::Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, took: Duration) -> Result<(), String> {
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn every_route(s: &samples::Sample) -> Result<StepFunction, String> {
    let first = compute_gsf(&s.fca, &s.measure, &s.x, GsfRoute::Definition).map_err(|e| e.to_string())?;
    for route in GsfRoute::ALL {
        let g = compute_gsf(&s.fca, &s.measure, &s.x, route).map_err(|e| e.to_string())?;
        ensure(g == first, || format!("{} gives {g}", route.name()))?;
    }
    Ok(first)
}

fn worked_example() -> Outcome {
    let s = samples::six_sets();
    let start = Instant::now();
    let g = every_route(&s)?;
    let took = start.elapsed();
    ensure(g.to_string() == "[0,1) -> 1; [1,6) -> 1/2; [6,inf) -> 0", || format!("got {g}"))?;
    within(Duration::from_millis(10), took)?;
    Ok(format!("{} routes give {g} in {took:?}", GsfRoute::ALL.len()))
}

fn decreasing_example() -> Outcome {
    let s = samples::decreasing();
    let g = every_route(&s)?;
    ensure(g.to_string() == "[0,2) -> 1; [2,4) -> 4/5; [4,5) -> 1/2; [5,9) -> 3/10; [9,inf) -> 0", || {
        format!("got {g}")
    })?;
    let arr = build_arrangement(&s.fca, &s.measure, &s.x).map_err(|e| e.to_string())?;
    let pt = build_permutations(&arr);
    ensure(pt.is_decreasing(), || format!("permutation {:?} not detected decreasing", pt.pi))?;
    ensure(decreasing_shortcut(&arr) == g, || "shortcut disagrees".into())?;
    Ok(format!("{g}, permutation {:?} decreasing", pt.pi))
}

fn knapsack() -> Outcome {
    let s = samples::knapsack();
    let start = Instant::now();
    let g = every_route(&s)?;
    let c = s.fca.collection();
    let pick = knapsack_select(&s.x, &s.measure, &q("200"), c).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let expected: Vec<String> = KNAPSACK_GSF
        .iter()
        .map(|(lo, hi, v)| format!("[{},{}) -> {}", q(lo), if *hi == "inf" { "inf".into() } else { q(hi).to_string() }, q(v)))
        .collect();
    ensure(g.to_string() == expected.join("; "), || format!("got {g}"))?;
    let nonzero = g.pieces().iter().filter(|p| !p.value.is_zero()).count();
    ensure(nonzero == 11, || format!("{nonzero} nonzero pieces"))?;
    let arr = build_arrangement(&s.fca, &s.measure, &s.x).map_err(|e| e.to_string())?;
    let at = gsf_via_maps(&arr, &build_permutations(&arr), MapRoute::I).eval(&q("200")).clone();
    ensure(at == q("1"), || format!("GSF(200) = {at}"))?;
    let want = IndexSet::from_members(4, &[1, 3, 4]).unwrap();
    ensure(pick.chosen == want, || format!("chose {:?}", pick.chosen.members()))?;
    within(Duration::from_millis(50), took)?;
    Ok(format!("11 pieces, GSF(200) = 1, chosen {{a,c,d}} in {took:?}"))
}

fn close(v: &Rational, published: &str) -> bool {
    (v - &q(published)).abs() <= q("0.00005")
}

fn accommodation_scores() -> Result<Vec<[((Rational, Rational), (Rational, Rational)); 3]>, String> {
    // Every person scores every owner's pair of offers.
    let people = samples::people();
    let criteria = samples::accommodation_criteria();
    let mut rows = Vec::new();
    for owner in &people {
        let options = normalize_criteria(&criteria, &owner.raw_options()).map_err(|e| e.to_string())?;
        let mut row = Vec::new();
        for p in &people {
            let mu = p.measure();
            let general = RankMethod::generalized_default(&mu).map_err(|e| e.to_string())?;
            let mut pair = Vec::new();
            for method in [RankMethod::Standard, general] {
                let r = rank_alternatives(&options, &mu, &method).map_err(|e| e.to_string())?;
                let find = |name: &str| r.iter().find(|x| x.name == name).map(|x| x.score.clone()).unwrap();
                pair.push((find(&options[0].name), find(&options[1].name)));
            }
            row.push((pair[0].clone(), pair[1].clone()));
        }
        rows.push(row.try_into().unwrap());
    }
    Ok(rows)
}

fn standard_table() -> Outcome {
    let rows = accommodation_scores()?;
    let mut n = 0;
    for (pair, row) in rows.iter().enumerate() {
        for (who, ((a, b), _)) in row.iter().enumerate() {
            let ((p1, p2), _) = ACCOMMODATION_SCORES[pair][who];
            ensure(close(a, p1) && close(b, p2), || {
                format!("pair {pair} person {who}: {:.5} {:.5} vs {p1} {p2}", a.to_f64(), b.to_f64())
            })?;
            n += 2;
        }
    }
    Ok(format!("{n} values within 5e-5"))
}

fn generalized_table() -> Outcome {
    let rows = accommodation_scores()?;
    let (mut n, mut flips) = (0, 0);
    for (pair, row) in rows.iter().enumerate() {
        for (who, ((s1, s2), (g1, g2))) in row.iter().enumerate() {
            let ((p1, p2), (r1, r2)) = ACCOMMODATION_SCORES[pair][who];
            ensure(close(g1, r1) && close(g2, r2), || {
                format!("pair {pair} person {who}: {:.5} {:.5} vs {r1} {r2}", g1.to_f64(), g2.to_f64())
            })?;
            ensure((g1 > g2) == (q(r1) > q(r2)), || format!("pair {pair} person {who}: preference reversed"))?;
            if (s1 > s2) != (g1 > g2) {
                flips += 1;
                ensure((q(p1) > q(p2)) != (q(r1) > q(r2)), || format!("pair {pair} person {who}: unexpected flip"))?;
            }
            n += 2;
        }
    }
    ensure(flips == 3, || format!("{flips} flips against the standard integral"))?;
    let a2 = &rows[0][0].1 .1;
    ensure(a2.to_decimal(5) == "0.68572", || format!("a2 = {}", a2.to_decimal(6)))?;
    Ok(format!("{n} values within 5e-5, 9 preferences, {flips} flips, a2 = 0.68572"))
}

fn shapley() -> Outcome {
    let tol = q("0.02");
    let mut worst = Rational::zero();
    for p in samples::people() {
        let targets = ShapleyTargets { weights: p.singleton_values() };
        let phi = shapley_vector(&p.measure()).map_err(|e| e.to_string())?;
        let t = targets.normalized().map_err(|e| e.to_string())?;
        for (a, b) in phi.iter().zip(&t) {
            worst = worst.max((a - b).abs());
        }
        let check = verify_calibration(&targets, &p.singleton_values(), &p.pair_values()).map_err(|e| e.to_string())?;
        ensure(check.within(&tol), || format!("{}: residual {}", p.name, check.max_residual))?;
    }
    ensure(worst <= tol, || format!("Shapley error {}", worst.to_decimal(4)))?;
    Ok(format!("3 people, worst Shapley error {}", worst.to_decimal(4)))
}

struct Corpus {
    instances: Vec<gen::Instance>,
}

fn corpus() -> Corpus {
    let mut g = gen::rng(2024);
    Corpus { instances: (0..1000).map(|_| random_instance(&mut g, &GenConfig::default())).collect() }
}

fn oracle_suite(c: &Corpus) -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for (k, i) in c.instances.iter().enumerate() {
        let r = audit_routes(&i.fca, &i.measure, &i.x).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("instance {k}: {}", r.findings[0]))?;
        checked += r.checked;
    }
    let took = start.elapsed();
    within(Duration::from_secs(60), took)?;
    Ok(format!("{} instances, {checked} comparisons in {took:.2?}", c.instances.len()))
}

fn structure_suite(c: &Corpus) -> Outcome {
    let mut checked = 0;
    for (k, i) in c.instances.iter().enumerate() {
        let arr = Arrangement::build(&i.fca, &i.measure, &i.x).map_err(|e| e.to_string())?;
        let r = audit_structure(&arr);
        ensure(r.passed(), || format!("instance {k}: {}", r.findings[0]))?;
        checked += r.checked;
    }
    let mut g = gen::rng(99);
    let (mut pairs, mut equal) = (0, 0);
    for i in c.instances.iter().take(400) {
        let other = if g.gen_bool(0.6) {
            equivalent_partner(&mut g, i)
        } else {
            let cfg = GenConfig { n_choices: vec![i.fca.n()], ..GenConfig::default() };
            random_instance(&mut g, &cfg)
        };
        let t1 = Triple::new(i.measure.clone(), i.fca.clone(), i.x.clone()).map_err(|e| e.to_string())?;
        let t2 = Triple::new(other.measure, other.fca, other.x).map_err(|e| e.to_string())?;
        let eq = integral_equivalent(&t1, &t2);
        ensure(equivalence_condition(&t1, &t2).holds == eq, || format!("pair {pairs}: condition disagrees"))?;
        pairs += 1;
        equal += eq as usize;
    }
    ensure(equal > 0 && equal < pairs, || format!("{equal} of {pairs} pairs equivalent"))?;
    Ok(format!("{checked} assertions, {pairs} pairs ({equal} equivalent)"))
}

fn classical_embedding() -> Outcome {
    let mut g = gen::rng(7);
    let cases = 500;
    for k in 0..cases {
        let n = g.gen_range(1..=4);
        let mu = random_powerset_measure(&mut g, n);
        let x = random_vector(&mut g, n);
        let f = Fca::uniform(Collection::powerset(n).unwrap(), AggregatorKind::Max).unwrap();
        let standard = choquet_standard(&x, &mu).map_err(|e| e.to_string())?;
        for route in ChoquetRoute::ALL {
            let v = choquet_generalized(&f, &mu, &x, route).map_err(|e| e.to_string())?.value;
            ensure(v == standard, || format!("case {k} {}: {v} vs {standard}", route.name()))?;
        }
        let mut levels: Vec<Rational> = (0..=n).map(|_| Rational::new(g.gen_range(0..=4), 4)).collect();
        levels.sort();
        levels[0] = Rational::zero();
        levels[n] = Rational::one();
        let sym = choquet_special(&SpecialMeasure::Symmetric(levels.clone()), &f, &x).map_err(|e| e.to_string())?;
        let owa = owa_evaluate(&owa_weights(&levels).map_err(|e| e.to_string())?, &x).map_err(|e| e.to_string())?;
        ensure(sym == owa, || format!("case {k}: symmetric {sym} vs OWA {owa}"))?;
    }
    Ok(format!("{cases} cases exact, OWA matches"))
}

fn equivalence_examples() -> Outcome {
    let mut out = Vec::new();
    for ((a, b), want) in [
        (samples::equivalent_max_sum(), "[0,2) -> 1; [2,9) -> 1/2; [9,inf) -> 0"),
        (samples::equivalent_sums(), "[0,3) -> 1; [3,9) -> 1/2; [9,inf) -> 0"),
    ] {
        let t1 = Triple::new(a.measure, a.fca, a.x).map_err(|e| e.to_string())?;
        let t2 = Triple::new(b.measure, b.fca, b.x).map_err(|e| e.to_string())?;
        ensure(t1.gsf().to_string() == want && t2.gsf().to_string() == want, || format!("got {} and {}", t1.gsf(), t2.gsf()))?;
        ensure(integral_equivalent(&t1, &t2) && equivalence_condition(&t1, &t2).holds, || "not equivalent".into())?;
        out.push(want);
    }
    Ok(format!("both equivalent: {}", out.join(" | ")))
}

fn main() {
    let c = corpus();
    let results: Vec<(&str, Outcome)> = vec![
        ("worked example, all routes", worked_example()),
        ("decreasing permutation example", decreasing_example()),
        ("knapsack", knapsack()),
        ("accommodation, standard integral", standard_table()),
        ("accommodation, generalized integral", generalized_table()),
        ("Shapley fixtures", shapley()),
        ("route agreement on random instances", oracle_suite(&c)),
        ("structural properties", structure_suite(&c)),
        ("classical embedding and OWA", classical_embedding()),
        ("equivalence examples", equivalence_examples()),
    ];
    let mut failed = 0;
    for (k, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(msg) => println!("criterion {:>2} PASS  {name}: {msg}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {msg}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

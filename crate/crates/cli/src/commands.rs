use std::path::{Path, PathBuf};

use gsf_core::audit::audit_instance;
use gsf_core::decision::{verify_calibration, Calibration, CalibrationCheck};
use gsf_core::index_maps::indexed_gsf;
use gsf_core::{
    calibrate_measure, choquet_generalized, choquet_standard, compute_gsf, equivalence_condition,
    integral_equivalent, knapsack_select, normalize_criteria, rank_alternatives, shapley_vector, Arrangement,
    CalibrationPolicy, ChoquetRoute, GsfRoute, PermutationTables, RankMethod, Rational, ShapleyTargets, Triple,
};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::files::{parse_number, parse_numbers, read_json, CalibrationFile, InstanceFile, MeasureFile, RankBundle};
use crate::plot::{self, Axes};
use crate::render::{labelled, Style};

/// A command's result, printed as text or as one JSON document.
pub struct Report {
    pub text: String,
    pub json: Value,
}

pub fn gsf(style: Style, path: &Path, route: GsfRoute, at: Option<&str>) -> CliResult<Report> {
    let inst = InstanceFile::load(path)?;
    let f = compute_gsf(&inst.fca, &inst.measure, &inst.x, route)?;
    if let Some(alpha) = at {
        let alpha = parse_number(alpha)?;
        if alpha.is_negative() {
            return Err(CliError::Usage("--at must be nonnegative".into()));
        }
        let v = f.eval(&alpha);
        return Ok(Report {
            text: format!("{}\n", style.number(v)),
            json: json!({ "route": route.name(), "at": alpha.to_string(), "value": style.number_json(v) }),
        });
    }
    let mut text = style.step_rows(&f).join("\n");
    text.push('\n');
    Ok(Report { text, json: json!({ "route": route.name(), "pieces": style.step_json(&f) }) })
}

/// `None` runs every route and checks they agree.
pub fn choquet(style: Style, path: &Path, route: Option<ChoquetRoute>, standard: bool) -> CliResult<Report> {
    let inst = InstanceFile::load(path)?;
    if standard {
        let v = choquet_standard(&inst.x, &inst.measure)?;
        return Ok(Report {
            text: format!("standard = {}\n", style.number(&v)),
            json: json!({ "route": "standard", "value": style.number_json(&v) }),
        });
    }
    let routes: Vec<ChoquetRoute> = route.map_or(ChoquetRoute::ALL.to_vec(), |r| vec![r]);
    let mut text = String::new();
    let mut rows = Vec::new();
    for r in routes {
        let v = choquet_generalized(&inst.fca, &inst.measure, &inst.x, r)?.value;
        text.push_str(&format!("{} = {}\n", r.name(), style.number(&v)));
        rows.push(json!({ "route": r.name(), "value": style.number_json(&v) }));
    }
    Ok(Report { text, json: Value::Array(rows) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodChoice {
    Standard,
    Generalized,
    Both,
}

pub fn rank(style: Style, path: &Path, method: MethodChoice) -> CliResult<Report> {
    let bundle: RankBundle = read_json(path)?;
    let makers = bundle.parse()?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for m in &makers {
        let options = normalize_criteria(&bundle.criteria, &m.alternatives)?;
        let mut methods = Vec::new();
        if method != MethodChoice::Generalized {
            methods.push(("standard", RankMethod::Standard));
        }
        if method != MethodChoice::Standard {
            methods.push(("generalized", RankMethod::generalized_default(&m.measure)?));
        }
        for (name, rm) in methods {
            let ranked = rank_alternatives(&options, &m.measure, &rm)?;
            let mut line = format!("{} {name}: ", m.name);
            for (k, r) in ranked.iter().enumerate() {
                if k > 0 {
                    line.push_str(if r.rank == ranked[k - 1].rank { " = " } else { " > " });
                }
                line.push_str(&format!("{} ({})", r.name, style.decimal(&r.score)));
            }
            text.push_str(&line);
            text.push('\n');
            let ranking: Vec<Value> = ranked
                .iter()
                .map(|r| json!({ "name": r.name, "rank": r.rank, "score": style.number_json(&r.score) }))
                .collect();
            rows.push(json!({ "decision_maker": m.name, "method": name, "ranking": ranking }));
        }
    }
    Ok(Report { text, json: Value::Array(rows) })
}

pub fn knapsack(style: Style, path: &Path, budget: &str) -> CliResult<Report> {
    let inst = InstanceFile::load(path)?;
    let budget = parse_number(budget)?;
    let pick = knapsack_select(&inst.x, &inst.measure, &budget, inst.fca.collection())?;
    let chosen = labelled(pick.chosen, &inst.labels);
    let minimizers: Vec<String> = pick.minimizers.iter().map(|&s| labelled(s, &inst.labels)).collect();
    let load: Rational = pick.chosen.positions().map(|p| inst.x[p].clone()).sum();
    Ok(Report {
        text: format!(
            "value = {}\nchosen = {chosen}\nload = {}\nminimizers = {}\n",
            style.number(&pick.value),
            style.number(&load),
            minimizers.join(" ")
        ),
        json: json!({
            "budget": budget.to_string(),
            "value": style.number_json(&pick.value),
            "chosen": chosen,
            "load": style.number_json(&load),
            "minimizers": minimizers,
        }),
    })
}

pub fn equiv(style: Style, first: &Path, second: &Path) -> CliResult<Report> {
    let load = |p: &Path| -> CliResult<Triple> {
        let i = InstanceFile::load(p)?;
        Ok(Triple::new(i.measure, i.fca, i.x)?)
    };
    let (t1, t2) = (load(first)?, load(second)?);
    let equivalent = integral_equivalent(&t1, &t2);
    let report = equivalence_condition(&t1, &t2);
    let mut text = format!("equivalent: {equivalent}\ncondition: {}\n", report.holds);
    for (name, t) in [("first", &t1), ("second", &t2)] {
        text.push_str(&format!("{name}: {}\n", style.step_rows(&t.gsf()).join("; ")));
    }
    for m in &report.matches {
        text.push_str(&format!("{m}\n"));
    }
    let matches: Vec<Value> = report
        .matches
        .iter()
        .map(|m| {
            json!({
                "side": format!("{:?}", m.side).to_lowercase(),
                "index": m.index,
                "value": m.value.to_string(),
                "interval": m.interval.to_string(),
                "counterpart": m.counterpart,
            })
        })
        .collect();
    Ok(Report {
        text,
        json: json!({
            "equivalent": equivalent,
            "condition": report.holds,
            "first": style.step_json(&t1.gsf()),
            "second": style.step_json(&t2.gsf()),
            "levels": matches,
        }),
    })
}

pub fn shapley(style: Style, path: &Path) -> CliResult<Report> {
    let file: MeasureFile = read_json(path)?;
    let mu = file.to_measure()?;
    let phi = shapley_vector(&mu)?;
    let labels = file.labels();
    let mut text = String::new();
    for (l, v) in labels.iter().zip(&phi) {
        text.push_str(&format!("{l}: {}\n", style.number(v)));
    }
    let total: Rational = phi.iter().sum();
    text.push_str(&format!("sum: {}\n", style.number(&total)));
    let values: Vec<Value> = labels.iter().zip(&phi).map(|(l, v)| json!({ "criterion": l, "value": style.number_json(v) })).collect();
    Ok(Report { text, json: json!({ "shapley": values, "sum": style.number_json(&total) }) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum PolicyChoice {
    MinNorm,
    Monotone,
}

fn vector_text(style: Style, v: &[Rational]) -> String {
    let cells: Vec<String> = v.iter().map(|x| style.decimal(x)).collect();
    format!("({})", cells.join(", "))
}

fn check_report(style: Style, c: &CalibrationCheck, tol: &Rational) -> (String, Value) {
    let text = format!(
        "shapley = {}\ntargets = {}\nresiduals = {}\nmax shapley error = {}\nmax residual = {}\nwithin {}: {}\n",
        vector_text(style, &c.shapley),
        vector_text(style, &c.targets),
        vector_text(style, &c.residuals),
        style.decimal(&c.max_shapley_error),
        style.decimal(&c.max_residual),
        tol.to_plain_string(),
        c.within(tol)
    );
    let json = json!({
        "shapley": c.shapley.iter().map(|v| style.number_json(v)).collect::<Vec<_>>(),
        "targets": c.targets.iter().map(|v| style.number_json(v)).collect::<Vec<_>>(),
        "residuals": c.residuals.iter().map(|v| style.number_json(v)).collect::<Vec<_>>(),
        "max_shapley_error": style.number_json(&c.max_shapley_error),
        "max_residual": style.number_json(&c.max_residual),
        "within": c.within(tol),
    });
    (text, json)
}

fn solution_report(style: Style, c: &Calibration) -> CliResult<(String, Value)> {
    let phi = shapley_vector(&c.measure)?;
    let text = format!(
        "pairs {{1,2}} {{1,3}} {{2,3}} = {}\nminimum norm = {}\nshift = {}\nshapley = {}\n",
        vector_text(style, &c.pairs),
        vector_text(style, &c.minimum_norm),
        style.number(&c.shift),
        vector_text(style, &phi)
    );
    let json = json!({
        "pairs": c.pairs.iter().map(|v| style.number_json(v)).collect::<Vec<_>>(),
        "minimum_norm": c.minimum_norm.iter().map(|v| style.number_json(v)).collect::<Vec<_>>(),
        "shift": style.number_json(&c.shift),
        "shapley": phi.iter().map(|v| style.number_json(v)).collect::<Vec<_>>(),
        "measure": serde_json::to_value(MeasureFile::from_measure(&c.measure, None)).expect("plain data"),
    });
    Ok((text, json))
}

pub fn calibrate(style: Style, path: &Path, policy: PolicyChoice, tolerance: &str) -> CliResult<Report> {
    let file: CalibrationFile = read_json(path)?;
    let targets = ShapleyTargets { weights: parse_numbers(&file.targets)? };
    let singletons = parse_numbers(&file.singletons)?;
    let tol = parse_number(tolerance)?;
    let (mut text, json) = match &file.pairs {
        Some(p) => {
            let p = parse_numbers(p)?;
            let pairs: [Rational; 3] = p
                .try_into()
                .map_err(|p: Vec<Rational>| gsf_core::Error::DimensionMismatch { expected: 3, got: p.len() })?;
            check_report(style, &verify_calibration(&targets, &singletons, &pairs)?, &tol)
        }
        None => {
            let policy = match policy {
                PolicyChoice::MinNorm => CalibrationPolicy::MinimumNorm,
                PolicyChoice::Monotone => CalibrationPolicy::MonotoneMinimumNorm,
            };
            solution_report(style, &calibrate_measure(&targets, &singletons, policy)?)?
        }
    };
    if let Some(name) = &file.name {
        text = format!("{name}\n{text}");
    }
    Ok(Report { text, json: json!({ "name": file.name, "result": json }) })
}

pub fn check(path: &Path, axioms: bool) -> CliResult<Report> {
    let raw: Value = read_json(path)?;
    if raw.get("vector").is_none() {
        let file: MeasureFile = read_json(path)?;
        let mu = file.to_measure()?;
        let text = format!("valid measure on 2^[{}], capacity: {}\n", mu.n(), mu.is_capacity());
        return Ok(Report { text, json: json!({ "kind": "measure", "valid": true, "capacity": mu.is_capacity() }) });
    }
    let inst = InstanceFile::load(path)?;
    let c = inst.fca.collection();
    let mut text = format!("valid instance: n = {}, kappa = {}\n", c.n(), c.kappa());
    let audit = audit_instance(&inst.fca, &inst.measure, &inst.x)?;
    text.push_str(&format!("routes and structure: {} ({} checks)\n", if audit.passed() { "ok" } else { "FAILED" }, audit.checked));
    for f in &audit.findings {
        text.push_str(&format!("  {f}\n"));
    }
    let mut json = json!({
        "kind": "instance",
        "valid": true,
        "audit": { "checked": audit.checked, "findings": audit.findings.iter().map(|f| f.to_string()).collect::<Vec<_>>() },
    });
    if axioms {
        let r = inst.fca.check_axioms(&[]);
        match &r.failure {
            None => text.push_str(&format!("operator axioms: ok ({} checks)\n", r.checked)),
            Some(f) => text.push_str(&format!("operator axioms: FAILED, {f}\n")),
        }
        json["axioms"] = json!({ "checked": r.checked, "failure": r.failure.as_ref().map(|f| f.to_string()) });
    }
    Ok(Report { text, json })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum PlotWhat {
    Gsf,
    Indexed,
    PermDiagram,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum PlotFormat {
    Svg,
    Ascii,
}

/// Returns the rendering; writes it to `out` when given.
pub fn plot(path: &Path, what: PlotWhat, format: PlotFormat, out: Option<&PathBuf>) -> CliResult<String> {
    let inst = InstanceFile::load(path)?;
    let arr = Arrangement::build(&inst.fca, &inst.measure, &inst.x)?;
    let title = path.file_stem().map_or("instance".into(), |s| s.to_string_lossy().into_owned());
    let body = match (what, format) {
        (PlotWhat::Gsf, f) | (PlotWhat::Indexed, f) => {
            let (step, axes) = if what == PlotWhat::Gsf {
                let s = compute_gsf(&inst.fca, &inst.measure, &inst.x, GsfRoute::AggScan)?;
                (s, Axes { title: &title, x_label: "alpha", y_label: "survival value" })
            } else {
                let s = indexed_gsf(&PermutationTables::build(&arr));
                (s, Axes { title: &title, x_label: "aggregation index", y_label: "measure index" })
            };
            match f {
                PlotFormat::Svg => plot::step_svg(&step, &axes),
                PlotFormat::Ascii => plot::step_ascii(&step),
            }
        }
        (PlotWhat::PermDiagram, PlotFormat::Svg) => plot::permutation_svg(&arr, &title),
        (PlotWhat::PermDiagram, PlotFormat::Ascii) => plot::permutation_ascii(&arr),
    };
    if let Some(p) = out {
        std::fs::write(p, &body).map_err(|source| CliError::Io { path: p.display().to_string(), source })?;
    }
    Ok(body)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SampleName {
    SixSets,
    Decreasing,
    Knapsack,
    EquivMax,
    EquivSum,
    EquivSumsFirst,
    EquivSumsSecond,
}

pub fn sample(name: SampleName) -> CliResult<Report> {
    use gsf_core::samples;
    let (s, labels) = match name {
        SampleName::SixSets => (samples::six_sets(), None),
        SampleName::Decreasing => (samples::decreasing(), None),
        SampleName::Knapsack => {
            (samples::knapsack(), Some(samples::KNAPSACK_LABELS.iter().map(|l| l.to_string()).collect()))
        }
        SampleName::EquivMax => (samples::equivalent_max_sum().0, None),
        SampleName::EquivSum => (samples::equivalent_max_sum().1, None),
        SampleName::EquivSumsFirst => (samples::equivalent_sums().0, None),
        SampleName::EquivSumsSecond => (samples::equivalent_sums().1, None),
    };
    let file = InstanceFile::from_parts(&s.fca, &s.measure, &s.x, labels);
    let json = serde_json::to_value(&file).expect("plain data");
    let mut text = serde_json::to_string_pretty(&file).expect("plain data");
    text.push('\n');
    Ok(Report { text, json })
}

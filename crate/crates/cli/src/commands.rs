//! The five subcommands: compute, verify, fit, predict, report.

use std::path::Path;

use serde_json::{json, Value};

use gpindex_core::dataset::{self, Family, Split};
use gpindex_core::descriptors::descriptor_record;
use gpindex_core::qspr::{self, Predictor};
use gpindex_core::regression::{self, ModelKind, RegressionFit, ResidualTable};
use gpindex_core::symmetry::automorphisms;

use crate::report::ReportTable;

/// Exit-code classes of the stable contract: usage/parse problems exit 2,
/// verification or assertion failures exit 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

/// What a command prints: the text form, the `--json` form, and whether the
/// run must exit 1 despite producing output (verification mismatches).
pub struct CommandOutput {
    pub text: String,
    pub json: Value,
    pub verification_failed: bool,
}

impl CommandOutput {
    fn ok(text: String, json: Value) -> Self {
        CommandOutput {
            text,
            json,
            verification_failed: false,
        }
    }
}

fn fmt_number(v: f64) -> String {
    if v.fract() == 0.0 && v.abs() < 1e15 {
        format!("{}", v as i64)
    } else {
        format!("{v}")
    }
}

pub fn cmd_compute(path: &Path, list_orbits: bool) -> Result<CommandOutput, CliError> {
    let graph = dataset::load_graph_file(path).map_err(|e| CliError::Usage(e.to_string()))?;
    let record = descriptor_record(&graph).map_err(|e| CliError::Failure(e.to_string()))?;
    let orbits = automorphisms(&graph).orbit_partition();

    let mut text = format!(
        "graph: {} (n={}, m={})\n",
        record.name.as_deref().unwrap_or("unnamed"),
        graph.vertex_count(),
        graph.edge_count()
    );
    text.push_str(&format!("GP={}\n", record.gp_string()));
    text.push_str(&format!("W={}\n", record.wiener));
    text.push_str(&format!("|Aut|={}\n", record.aut_order));
    text.push_str(&format!("orbits={}\n", record.orbit_count));
    if list_orbits {
        for (i, orbit) in orbits.orbits().iter().enumerate() {
            let members: Vec<String> = orbit.iter().map(usize::to_string).collect();
            text.push_str(&format!("orbit {}: {{{}}}\n", i + 1, members.join(",")));
        }
    }

    let json = json!({
        "name": record.name,
        "vertex_count": graph.vertex_count(),
        "edge_count": graph.edge_count(),
        "gp": record.gp_f64(),
        "gp_exact": record.gp_string(),
        "wiener": record.wiener,
        "aut_order": record.aut_order,
        "orbit_count": record.orbit_count,
        "orbits": orbits.orbits(),
    });
    Ok(CommandOutput::ok(text, json))
}

fn family_label(family: Family) -> &'static str {
    match family {
        Family::Alkane => "alkanes",
        Family::Pah => "PAHs",
        Family::OctaneIsomer => "octane isomers",
    }
}

pub fn cmd_verify(family: Option<Family>) -> Result<CommandOutput, CliError> {
    let (report, families) = match family {
        Some(f) => (dataset::verify_family(f), vec![f]),
        None => (dataset::verify_bundle(), Family::ALL.to_vec()),
    };

    let mut parts = Vec::new();
    for f in &families {
        let (passed, total) = report.family_counts(*f);
        parts.push(format!("{} {}/{}", family_label(*f), passed, total));
    }
    let mut text = parts.join(", ");
    text.push('\n');
    for failure in report.failures() {
        for m in &failure.mismatches {
            text.push_str(&format!(
                "FAIL {} ({}): {} computed {}, published {}\n",
                failure.name,
                failure.family.as_str(),
                m.quantity,
                m.computed,
                m.published
            ));
        }
    }
    text.push_str(&format!(
        "verified {}/{}\n",
        report.passed(),
        report.total()
    ));

    let json = json!({
        "families": families.iter().map(|f| {
            let (passed, total) = report.family_counts(*f);
            json!({ "family": f.as_str(), "passed": passed, "total": total })
        }).collect::<Vec<_>>(),
        "failures": report.failures().map(|check| {
            json!({
                "name": check.name,
                "family": check.family.as_str(),
                "mismatches": check.mismatches.iter().map(|m| json!({
                    "quantity": m.quantity,
                    "computed": m.computed,
                    "published": m.published,
                })).collect::<Vec<_>>(),
            })
        }).collect::<Vec<_>>(),
        "passed": report.passed(),
        "total": report.total(),
    });

    Ok(CommandOutput {
        text,
        json,
        verification_failed: !report.all_passed(),
    })
}

fn predictor_display(p: Predictor) -> &'static str {
    match p {
        Predictor::Gp => "GP",
        Predictor::AutOrder => "#Aut",
        Predictor::Wiener => "W",
    }
}

/// The split a fit uses when none is requested: the family's training split
/// where one exists, everything otherwise (the octane isomers are unsplit,
/// and the multilinear model uses the whole PAH set).
fn default_split(family: Family, model: ModelKind) -> Split {
    if family == Family::OctaneIsomer || model == ModelKind::Multilinear {
        Split::All
    } else {
        Split::Train
    }
}

fn signed_term(coefficient: f64, label: &str) -> String {
    if coefficient >= 0.0 {
        format!(" + {coefficient:.4}{label}")
    } else {
        format!(" - {:.4}{label}", -coefficient)
    }
}

fn fit_text(fit: &RegressionFit, family: Family, split: Split, predictor: Predictor) -> String {
    let mut text = format!("model: {}\n", fit.model_kind.as_str());
    text.push_str(&format!(
        "family: {}, split: {}, rows: {}\n",
        family.as_str(),
        split.as_str(),
        fit.residuals.len()
    ));
    let equation = match fit.model_kind {
        ModelKind::LogSingle => format!(
            "MP = {:.4} ln({}){}",
            fit.coefficients[0],
            predictor_display(predictor),
            signed_term(fit.coefficients[1], "")
        ),
        ModelKind::LinearSingle => format!(
            "MP = {:.4} {}{}",
            fit.coefficients[0],
            predictor_display(predictor),
            signed_term(fit.coefficients[1], "")
        ),
        ModelKind::Multilinear => {
            let mut eq = format!("MP = {:.4}", fit.coefficients[0]);
            for (coefficient, p) in fit.coefficients[1..].iter().zip([
                Predictor::AutOrder,
                Predictor::Gp,
                Predictor::Wiener,
            ]) {
                eq.push_str(&signed_term(
                    *coefficient,
                    &format!(" {}", predictor_display(p)),
                ));
            }
            eq
        }
    };
    text.push_str(&equation);
    text.push('\n');
    text.push_str(&format!("R^2 = {:.4}\n", fit.r_squared));
    text.push_str(&format!("adjusted R^2 = {:.4}\n", fit.adjusted_r_squared));
    text.push_str(&format!("standard error = {:.4}\n", fit.standard_error));
    text
}

fn fit_json(fit: &RegressionFit, family: Family, split: Split, predictor: Predictor) -> Value {
    json!({
        "model": fit.model_kind.as_str(),
        "family": family.as_str(),
        "split": split.as_str(),
        "predictor": match fit.model_kind {
            ModelKind::Multilinear => json!(["aut", "gp", "wiener"]),
            _ => json!(predictor.as_str()),
        },
        "rows": fit.residuals.len(),
        "coefficients": fit.coefficients,
        "r_squared": fit.r_squared,
        "adjusted_r_squared": fit.adjusted_r_squared,
        "standard_error": fit.standard_error,
    })
}

fn build_fit(
    family: Family,
    model: ModelKind,
    split: Split,
    predictor: Predictor,
) -> Result<RegressionFit, CliError> {
    match model {
        ModelKind::Multilinear => {
            if family != Family::Pah {
                return Err(CliError::Usage(format!(
                    "the multilinear model needs #Aut, GP and W columns; family {} has no \
                     published W values",
                    family.as_str()
                )));
            }
            qspr::pah_multilinear_fit_on(split).map_err(|e| CliError::Usage(e.to_string()))
        }
        single => qspr::single_predictor_fit(family, predictor, single, split)
            .map_err(|e| CliError::Usage(e.to_string())),
    }
}

pub fn cmd_fit(
    family: Family,
    model: ModelKind,
    split: Option<Split>,
    predictor: Predictor,
) -> Result<CommandOutput, CliError> {
    let split = split.unwrap_or_else(|| default_split(family, model));
    let fit = build_fit(family, model, split, predictor)?;
    Ok(CommandOutput::ok(
        fit_text(&fit, family, split, predictor),
        fit_json(&fit, family, split, predictor),
    ))
}

pub struct PredictArgs {
    pub family: Option<Family>,
    pub model: ModelKind,
    pub predictor: Predictor,
    pub gp: Option<f64>,
    pub aut: Option<f64>,
    pub wiener: Option<f64>,
    pub coefficients: Option<Vec<f64>>,
}

fn predictor_flag_value(args: &PredictArgs, p: Predictor) -> Result<f64, CliError> {
    let (value, flag) = match p {
        Predictor::Gp => (args.gp, "--gp"),
        Predictor::AutOrder => (args.aut, "--aut"),
        Predictor::Wiener => (args.wiener, "--wiener"),
    };
    value.ok_or_else(|| CliError::Usage(format!("missing {flag} value")))
}

pub fn cmd_predict(args: PredictArgs) -> Result<CommandOutput, CliError> {
    let row = match args.model {
        ModelKind::Multilinear => vec![
            predictor_flag_value(&args, Predictor::AutOrder)?,
            predictor_flag_value(&args, Predictor::Gp)?,
            predictor_flag_value(&args, Predictor::Wiener)?,
        ],
        _ => vec![predictor_flag_value(&args, args.predictor)?],
    };

    let fit = match &args.coefficients {
        Some(coefficients) => {
            let expected = match args.model {
                ModelKind::Multilinear => 4,
                _ => 2,
            };
            if coefficients.len() != expected {
                return Err(CliError::Usage(format!(
                    "--coefficients expects {expected} comma-separated values for the {} model",
                    args.model.as_str()
                )));
            }
            RegressionFit {
                model_kind: args.model,
                coefficients: coefficients.clone(),
                r_squared: f64::NAN,
                adjusted_r_squared: f64::NAN,
                standard_error: f64::NAN,
                residuals: Vec::new(),
            }
        }
        None => {
            let family = args.family.ok_or_else(|| {
                CliError::Usage("predict needs --family (to refit) or --coefficients".into())
            })?;
            build_fit(
                family,
                args.model,
                default_split(family, args.model),
                args.predictor,
            )?
        }
    };

    let predicted = regression::predict(&fit, &row).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(CommandOutput::ok(
        format!("MP-hat = {predicted:.3}\n"),
        json!({
            "model": fit.model_kind.as_str(),
            "coefficients": fit.coefficients,
            "row": row,
            "predicted": predicted,
        }),
    ))
}

/// The report identifiers of the stable CLI contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableId {
    Table2,
    Table3,
    Table5,
    OctaneCorrelations,
}

pub fn cmd_report(table: TableId, csv: bool) -> Result<CommandOutput, CliError> {
    let table = build_report(table);
    let text = if csv {
        table.render_csv()
    } else {
        table.render_text()
    };
    let json = table.to_json();
    Ok(CommandOutput::ok(text, json))
}

fn prediction_report(
    title: &str,
    first_column: &str,
    table: &ResidualTable,
    gps: &[f64],
) -> ReportTable {
    let mut report = ReportTable::new(
        title,
        &[first_column, "GP", "MP", "MP-hat", "residual", "% residual"],
    );
    for (row, gp) in table.rows.iter().zip(gps) {
        report.push_row(vec![
            row.name.clone(),
            fmt_number(*gp),
            format!("{:.3}", row.observed),
            format!("{:.3}", row.predicted),
            format!("{:.3}", row.residual),
            format!("{:.3}", row.percent_residual),
        ]);
    }
    report.set_footer(vec![
        "average".into(),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
        format!("{:.3}", table.average_percent_residual),
    ]);
    report
}

fn gps_for(family: Family, names: &[String]) -> Vec<f64> {
    let rows = qspr::family_rows(family);
    names
        .iter()
        .map(|n| {
            rows.iter()
                .find(|r| &r.name == n)
                .expect("table rows come from the bundle")
                .gp
        })
        .collect()
}

fn build_report(table: TableId) -> ReportTable {
    match table {
        TableId::Table2 => {
            let t = qspr::alkane_test_predictions();
            let names: Vec<String> = t.rows.iter().map(|r| r.name.clone()).collect();
            prediction_report(
                "alkane log model: held-out test set",
                "alkane",
                &t,
                &gps_for(Family::Alkane, &names),
            )
        }
        TableId::Table3 => {
            let t = qspr::alkane_all_predictions();
            let names: Vec<String> = t.rows.iter().map(|r| r.name.clone()).collect();
            prediction_report(
                "alkane log model: all 31 molecules",
                "alkane",
                &t,
                &gps_for(Family::Alkane, &names),
            )
        }
        TableId::Table5 => {
            let t = qspr::pah_test_predictions();
            let names: Vec<String> = t.rows.iter().map(|r| r.name.clone()).collect();
            prediction_report(
                "PAH linear model: held-out test set",
                "molecule",
                &t,
                &gps_for(Family::Pah, &names),
            )
        }
        TableId::OctaneCorrelations => {
            let c = qspr::octane_correlations();
            let mut report =
                ReportTable::new("octane isomer correlations", &["statistic", "rows", "R^2"]);
            let rows = [
                ("R^2(GP, MP)", 14usize, c.gp_vs_mp),
                (
                    "R^2(#Aut, MP), branched isomers (octane excluded)",
                    13,
                    c.aut_vs_mp_branched,
                ),
                (
                    "R^2(GP, MP), without 2,2,3,3-tetramethylbutane",
                    13,
                    c.gp_vs_mp_without_outlier,
                ),
                (
                    "R^2(#Aut, MP), without 2,2,3,3-tetramethylbutane",
                    13,
                    c.aut_vs_mp_without_outlier,
                ),
            ];
            for (label, n, r2) in rows {
                report.push_row(vec![label.into(), n.to_string(), format!("{r2:.4}")]);
            }
            report
        }
    }
}

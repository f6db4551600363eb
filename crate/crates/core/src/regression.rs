//! Ordinary-least-squares fitting for the three model families used by the
//! melting-point analysis: logarithmic single-predictor (`y = a ln x + b`),
//! linear single-predictor, and multilinear with intercept.
//!
//! The log model is linear in its parameters, so OLS on the transformed
//! predictor `ln x` is its exact least-squares optimum; no iterative
//! optimizer is involved. Single-predictor fits use the closed-form normal
//! equations; the multilinear fit goes through a Householder QR
//! decomposition of the design matrix, which keeps the two routes
//! independent of each other.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RegressionError {
    #[error("input lengths differ: x has {x_len}, y has {y_len}")]
    LengthMismatch { x_len: usize, y_len: usize },
    #[error("need at least {needed} observations, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("log model requires positive predictors; x[{index}] = {value}")]
    NonPositiveLogInput { index: usize, value: f64 },
    #[error("predictor has zero variance")]
    DegeneratePredictor,
    #[error("zero variance in correlation input")]
    ZeroVariance,
    #[error("design matrix is rank deficient")]
    RankDeficient,
    #[error("model expects {expected} predictor value(s), got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("predictor rows have inconsistent widths")]
    RaggedRows,
}

/// Which of the three model families a fit belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    /// `y = a ln x + b`; coefficients `[a, b]`.
    LogSingle,
    /// `y = a x + b`; coefficients `[a, b]`.
    LinearSingle,
    /// `y = b0 + b1 x1 + ... + bp xp`; coefficients `[b0, b1, .., bp]`.
    Multilinear,
}

impl ModelKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ModelKind::LogSingle => "log_single",
            ModelKind::LinearSingle => "linear_single",
            ModelKind::Multilinear => "multilinear",
        }
    }
}

/// One observation's fit diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualRow {
    pub name: String,
    pub observed: f64,
    pub predicted: f64,
    /// `observed - predicted`.
    pub residual: f64,
    /// `100 * |residual| / |observed|`; NaN when the observation is zero.
    pub percent_residual: f64,
}

impl ResidualRow {
    fn new(name: String, observed: f64, predicted: f64) -> Self {
        let residual = observed - predicted;
        let percent_residual = if observed == 0.0 {
            f64::NAN
        } else {
            100.0 * residual.abs() / observed.abs()
        };
        ResidualRow {
            name,
            observed,
            predicted,
            residual,
            percent_residual,
        }
    }
}

/// Residual report over a set of observations, with the arithmetic mean of
/// the per-row percent residuals as the summary ("average") line.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualTable {
    pub rows: Vec<ResidualRow>,
    pub average_percent_residual: f64,
}

/// A fitted model with its goodness-of-fit statistics.
///
/// Coefficient order mirrors the conventional model displays: slope first
/// and intercept last for the single-predictor models, intercept first for
/// the multilinear model.
#[derive(Debug, Clone, PartialEq)]
pub struct RegressionFit {
    pub model_kind: ModelKind,
    pub coefficients: Vec<f64>,
    pub r_squared: f64,
    pub adjusted_r_squared: f64,
    pub standard_error: f64,
    pub residuals: Vec<ResidualRow>,
}

impl RegressionFit {
    /// Number of predictor values forward evaluation expects.
    pub fn arity(&self) -> usize {
        match self.model_kind {
            ModelKind::LogSingle | ModelKind::LinearSingle => 1,
            ModelKind::Multilinear => self.coefficients.len() - 1,
        }
    }

    /// Residual sum of squares of the training data.
    pub fn rss(&self) -> f64 {
        self.residuals.iter().map(|r| r.residual * r.residual).sum()
    }
}

fn check_lengths(x_len: usize, y_len: usize, needed: usize) -> Result<(), RegressionError> {
    if x_len != y_len {
        return Err(RegressionError::LengthMismatch { x_len, y_len });
    }
    if x_len < needed {
        return Err(RegressionError::TooFewPoints { needed, got: x_len });
    }
    Ok(())
}

/// Closed-form simple OLS of `y` on `t` with intercept; returns the fit with
/// the given kind, using `predicted_at(t_i)` rows for diagnostics.
fn simple_ols(kind: ModelKind, t: &[f64], y: &[f64]) -> Result<RegressionFit, RegressionError> {
    let n = t.len() as f64;
    let t_mean = t.iter().sum::<f64>() / n;
    let y_mean = y.iter().sum::<f64>() / n;
    let stt: f64 = t.iter().map(|v| (v - t_mean) * (v - t_mean)).sum();
    if stt == 0.0 {
        return Err(RegressionError::DegeneratePredictor);
    }
    let sty: f64 = t
        .iter()
        .zip(y)
        .map(|(a, b)| (a - t_mean) * (b - y_mean))
        .sum();
    let slope = sty / stt;
    let intercept = y_mean - slope * t_mean;
    let residuals: Vec<ResidualRow> = t
        .iter()
        .zip(y)
        .map(|(&ti, &yi)| ResidualRow::new(String::new(), yi, slope * ti + intercept))
        .collect();
    Ok(finish_fit(kind, vec![slope, intercept], y, residuals, 1))
}

fn finish_fit(
    kind: ModelKind,
    coefficients: Vec<f64>,
    y: &[f64],
    residuals: Vec<ResidualRow>,
    predictor_count: usize,
) -> RegressionFit {
    let n = y.len() as f64;
    let p = predictor_count as f64;
    let y_mean = y.iter().sum::<f64>() / n;
    let sst: f64 = y.iter().map(|v| (v - y_mean) * (v - y_mean)).sum();
    let rss: f64 = residuals.iter().map(|r| r.residual * r.residual).sum();
    let r_squared = if sst == 0.0 { 1.0 } else { 1.0 - rss / sst };
    let df = n - p - 1.0;
    let adjusted_r_squared = 1.0 - (1.0 - r_squared) * (n - 1.0) / df;
    let standard_error = (rss / df).sqrt();
    RegressionFit {
        model_kind: kind,
        coefficients,
        r_squared,
        adjusted_r_squared,
        standard_error,
        residuals,
    }
}

/// Fits `y = a ln x + b` by OLS on the transformed predictor.
///
/// Rejects any nonpositive `x` (a molecule with GP = 0 cannot enter a log
/// model).
pub fn fit_log_single(x: &[f64], y: &[f64]) -> Result<RegressionFit, RegressionError> {
    check_lengths(x.len(), y.len(), 3)?;
    if let Some((index, &value)) = x.iter().enumerate().find(|(_, &v)| v <= 0.0) {
        return Err(RegressionError::NonPositiveLogInput { index, value });
    }
    let t: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    simple_ols(ModelKind::LogSingle, &t, y)
}

/// Fits `y = a x + b` by closed-form OLS.
pub fn fit_linear_single(x: &[f64], y: &[f64]) -> Result<RegressionFit, RegressionError> {
    check_lengths(x.len(), y.len(), 3)?;
    simple_ols(ModelKind::LinearSingle, x, y)
}

/// Fits `y = b0 + b1 x1 + ... + bp xp` by Householder QR on the design
/// matrix (intercept column prepended).
///
/// `rows` holds one predictor vector per observation. Requires at least
/// `p + 2` observations and a full-rank design.
pub fn fit_multilinear(rows: &[Vec<f64>], y: &[f64]) -> Result<RegressionFit, RegressionError> {
    if rows.len() != y.len() {
        return Err(RegressionError::LengthMismatch {
            x_len: rows.len(),
            y_len: y.len(),
        });
    }
    let Some(p) = rows.first().map(Vec::len) else {
        return Err(RegressionError::TooFewPoints { needed: 2, got: 0 });
    };
    if rows.iter().any(|r| r.len() != p) {
        return Err(RegressionError::RaggedRows);
    }
    let m = rows.len();
    let k = p + 1;
    if m < k + 1 {
        return Err(RegressionError::TooFewPoints {
            needed: k + 1,
            got: m,
        });
    }
    let mut design = vec![0.0f64; m * k];
    for (i, row) in rows.iter().enumerate() {
        design[i * k] = 1.0;
        design[i * k + 1..i * k + k].copy_from_slice(row);
    }
    let coefficients = qr_least_squares(&mut design, m, k, &mut y.to_vec())?;
    let residuals: Vec<ResidualRow> = rows
        .iter()
        .zip(y)
        .map(|(row, &yi)| {
            let pred = coefficients[0]
                + row
                    .iter()
                    .zip(&coefficients[1..])
                    .map(|(a, b)| a * b)
                    .sum::<f64>();
            ResidualRow::new(String::new(), yi, pred)
        })
        .collect();
    Ok(finish_fit(
        ModelKind::Multilinear,
        coefficients,
        y,
        residuals,
        p,
    ))
}

/// Least squares via Householder QR; `a` is row-major `m x k`, consumed.
fn qr_least_squares(
    a: &mut [f64],
    m: usize,
    k: usize,
    y: &mut [f64],
) -> Result<Vec<f64>, RegressionError> {
    let scale = a.iter().fold(0.0f64, |acc, v| acc.max(v.abs())).max(1.0);
    let mut v = vec![0.0f64; m];
    for j in 0..k {
        let norm = (j..m)
            .map(|i| a[i * k + j] * a[i * k + j])
            .sum::<f64>()
            .sqrt();
        if norm <= scale * 1e-12 {
            return Err(RegressionError::RankDeficient);
        }
        let alpha = if a[j * k + j] >= 0.0 { -norm } else { norm };
        for i in j..m {
            v[i] = a[i * k + j];
        }
        v[j] -= alpha;
        let vnorm2: f64 = (j..m).map(|i| v[i] * v[i]).sum();
        if vnorm2 > 0.0 {
            // Apply the reflector to the remaining columns and to y.
            for c in j..k {
                let dot: f64 = (j..m).map(|i| v[i] * a[i * k + c]).sum();
                let f = 2.0 * dot / vnorm2;
                for i in j..m {
                    a[i * k + c] -= f * v[i];
                }
            }
            let dot: f64 = (j..m).map(|i| v[i] * y[i]).sum();
            let f = 2.0 * dot / vnorm2;
            for i in j..m {
                y[i] -= f * v[i];
            }
        }
        a[j * k + j] = alpha;
    }
    // Back-substitute the upper-triangular system R beta = Q^T y.
    let mut beta = vec![0.0f64; k];
    for r in (0..k).rev() {
        let mut acc = y[r];
        for c in r + 1..k {
            acc -= a[r * k + c] * beta[c];
        }
        let diag = a[r * k + r];
        if diag.abs() <= scale * 1e-12 {
            return Err(RegressionError::RankDeficient);
        }
        beta[r] = acc / diag;
    }
    Ok(beta)
}

/// Evaluates a fitted model at one predictor row.
pub fn predict(fit: &RegressionFit, row: &[f64]) -> Result<f64, RegressionError> {
    let expected = fit.arity();
    if row.len() != expected {
        return Err(RegressionError::ArityMismatch {
            expected,
            got: row.len(),
        });
    }
    match fit.model_kind {
        ModelKind::LogSingle => {
            if row[0] <= 0.0 {
                return Err(RegressionError::NonPositiveLogInput {
                    index: 0,
                    value: row[0],
                });
            }
            Ok(fit.coefficients[0] * row[0].ln() + fit.coefficients[1])
        }
        ModelKind::LinearSingle => Ok(fit.coefficients[0] * row[0] + fit.coefficients[1]),
        ModelKind::Multilinear => Ok(fit.coefficients[0]
            + row
                .iter()
                .zip(&fit.coefficients[1..])
                .map(|(a, b)| a * b)
                .sum::<f64>()),
    }
}

/// Per-row predictions, residuals, and percent residuals over named
/// observations, plus their average percent residual.
pub fn evaluate(
    fit: &RegressionFit,
    names: &[String],
    rows: &[Vec<f64>],
    observed: &[f64],
) -> Result<ResidualTable, RegressionError> {
    if names.len() != rows.len() || rows.len() != observed.len() {
        return Err(RegressionError::LengthMismatch {
            x_len: rows.len(),
            y_len: observed.len(),
        });
    }
    let mut out = Vec::with_capacity(rows.len());
    for ((name, row), &obs) in names.iter().zip(rows).zip(observed) {
        let pred = predict(fit, row)?;
        out.push(ResidualRow::new(name.clone(), obs, pred));
    }
    let average = out.iter().map(|r| r.percent_residual).sum::<f64>() / out.len().max(1) as f64;
    Ok(ResidualTable {
        rows: out,
        average_percent_residual: average,
    })
}

/// Squared Pearson correlation of two samples; equals the R^2 of the simple
/// linear fit of `y` on `x`.
pub fn r_squared_between(x: &[f64], y: &[f64]) -> Result<f64, RegressionError> {
    check_lengths(x.len(), y.len(), 3)?;
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|v| (v - mx) * (v - mx)).sum();
    let syy: f64 = y.iter().map(|v| (v - my) * (v - my)).sum();
    if sxx == 0.0 || syy == 0.0 {
        return Err(RegressionError::ZeroVariance);
    }
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    Ok(sxy * sxy / (sxx * syy))
}

/// R^2 of an already-fitted model evaluated on an arbitrary observation set:
/// `1 - RSS / SST` with SST around the set's own mean.
pub fn r_squared_on(
    fit: &RegressionFit,
    rows: &[Vec<f64>],
    observed: &[f64],
) -> Result<f64, RegressionError> {
    if rows.len() != observed.len() {
        return Err(RegressionError::LengthMismatch {
            x_len: rows.len(),
            y_len: observed.len(),
        });
    }
    let n = observed.len() as f64;
    let mean = observed.iter().sum::<f64>() / n;
    let sst: f64 = observed.iter().map(|v| (v - mean) * (v - mean)).sum();
    let mut rss = 0.0;
    for (row, &obs) in rows.iter().zip(observed) {
        let pred = predict(fit, row)?;
        rss += (obs - pred) * (obs - pred);
    }
    Ok(1.0 - rss / sst)
}

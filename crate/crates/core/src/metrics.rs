//! Distributional statistics over snapshot income vectors.

use crate::economy::EconomySnapshot;
use crate::error::{ensure_finite, Error, Result};

/// Flat record of the metrics tracked per (regime, K_A) grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricRow {
    /// Total output across teams.
    pub output: f64,
    /// Output normalized by the same-regime K_A = 0 output.
    pub output_index: f64,
    /// Gini over every individual: managers, employed, unemployed at zero.
    pub gini_economy: f64,
    /// Gini over manager incomes only.
    pub gini_managers: f64,
    /// Mean manager wage over mean employed-worker wage.
    pub gap: f64,
    /// Income share of the top 10% of all individuals.
    pub top10_share: f64,
    /// `1 - employed / n_workers`.
    pub unemployment: f64,
    pub employed: usize,
}

fn validate_incomes(op: &'static str, incomes: &[f64]) -> Result<f64> {
    if incomes.is_empty() {
        return Err(Error::domain(op, "need at least one income"));
    }
    let mut total = 0.0;
    for &x in incomes {
        ensure_finite(op, "income", x)?;
        if x < 0.0 {
            return Err(Error::domain(op, format!("incomes must be >= 0, got {x}")));
        }
        total += x;
    }
    if total == 0.0 {
        return Err(Error::DegenerateIncomes { op });
    }
    Ok(total)
}

/// Gini coefficient by the exact pairwise formula
/// `sum_ij |x_i - x_j| / (2 n^2 mean)`. No small-sample correction.
pub fn gini(incomes: &[f64]) -> Result<f64> {
    let total = validate_incomes("gini", incomes)?;
    let n = incomes.len();
    let mut diff_sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            diff_sum += (incomes[i] - incomes[j]).abs();
        }
    }
    // Unordered pairs counted once, so double.
    Ok(diff_sum * 2.0 / (2.0 * (n * n) as f64 * (total / n as f64)))
}

/// Lorenz curve: cumulative (population share, income share) points from
/// (0,0) to (1,1), incomes sorted ascending.
pub fn lorenz(incomes: &[f64]) -> Result<Vec<(f64, f64)>> {
    validate_incomes("lorenz", incomes)?;
    let mut sorted = incomes.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    let n = sorted.len();
    let mut partial = Vec::with_capacity(n);
    let mut cum = 0.0;
    for &x in &sorted {
        cum += x;
        partial.push(cum);
    }
    let total = partial[n - 1];
    let mut points = Vec::with_capacity(n + 1);
    points.push((0.0, 0.0));
    for (i, &p) in partial.iter().enumerate() {
        points.push(((i + 1) as f64 / n as f64, p / total));
    }
    Ok(points)
}

/// Income share of the `ceil(fraction * n)` highest earners.
pub fn top_share(incomes: &[f64], fraction: f64) -> Result<f64> {
    const OP: &str = "top_share";
    let total = validate_incomes(OP, incomes)?;
    ensure_finite(OP, "fraction", fraction)?;
    if fraction <= 0.0 || fraction >= 1.0 {
        return Err(Error::domain(
            OP,
            format!("fraction must be in (0,1), got {fraction}"),
        ));
    }
    let k = ((fraction * incomes.len() as f64).ceil() as usize).clamp(1, incomes.len());
    let mut sorted = incomes.to_vec();
    sorted.sort_unstable_by(|a, b| b.total_cmp(a));
    Ok(sorted[..k].iter().sum::<f64>() / total)
}

/// Assemble the full metric row for a snapshot, normalizing output by the
/// same-regime zero-capital baseline.
pub fn snapshot_metrics(snapshot: &EconomySnapshot, baseline_output: f64) -> Result<MetricRow> {
    const OP: &str = "snapshot_metrics";
    ensure_finite(OP, "baseline_output", baseline_output)?;
    if baseline_output <= 0.0 {
        return Err(Error::domain(
            OP,
            format!("baseline output must be > 0, got {baseline_output}"),
        ));
    }
    let incomes = snapshot.income_vector();
    let gini_economy = gini(&incomes)?;
    let gini_managers = gini(&snapshot.manager_wages)?;
    let top10_share = top_share(&incomes, 0.1)?;
    // gini succeeding implies positive total income, hence employment > 0.
    let gap = snapshot
        .wage_gap()
        .ok_or_else(|| Error::domain(OP, "no employed workers"))?;
    Ok(MetricRow {
        output: snapshot.total_output,
        output_index: snapshot.total_output / baseline_output,
        gini_economy,
        gini_managers,
        gap,
        top10_share,
        unemployment: 1.0 - snapshot.employed as f64 / snapshot.n_workers() as f64,
        employed: snapshot.employed,
    })
}

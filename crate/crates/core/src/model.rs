//! Closed-form equations of the coordination-compression model.
//!
//! Stateless functions from parameters to scalars. Team production is
//! Cobb-Douglas in effective labor, `Y = tfp * L_eff^alpha`, where effective
//! labor discounts team quality by a coordination penalty that agent capital
//! compresses. All functions validate their domains and never return NaN.

use crate::error::{ensure_finite, Error, Result};

/// Scalar parameters of the simulated economy.
///
/// `beta` and `delta` are the home values; regime runs override them
/// per grid point. The seed is consumed only by random assignment.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams {
    /// Total factor productivity (A).
    pub tfp: f64,
    /// Labor share of team output, in (0,1).
    pub alpha: f64,
    /// Baseline per-worker coordination friction, > 0.
    pub c0: f64,
    /// Compression effectiveness of agent capital, >= 0.
    pub gamma: f64,
    /// Elite-complementarity exponent on managerial skill, >= 0.
    pub beta: f64,
    /// Task-creation elasticity of the frontier, >= 0.
    pub delta: f64,
    /// Baseline task frontier (task count), > 0.
    pub t0: f64,
    pub n_managers: usize,
    pub n_workers: usize,
    /// Lowest manager skill; must stay strictly above 0.
    pub manager_skill_min: f64,
    pub manager_skill_max: f64,
    /// Shape pair (a, b) of the worker-skill Beta distribution.
    pub worker_skill_a: f64,
    pub worker_skill_b: f64,
    /// Seed for the random-assignment robustness mode.
    pub seed: u64,
}

impl ModelParams {
    /// The baseline calibration: a 20-manager, 400-worker economy with
    /// evenly spaced manager skills on [0.05, 1.0], Beta(2,5)-quantile
    /// worker skills, `alpha` 0.65, `c0` 0.3, `gamma` 1, frontier 200.
    pub fn baseline() -> Self {
        ModelParams {
            tfp: 1.0,
            alpha: 0.65,
            c0: 0.3,
            gamma: 1.0,
            beta: 0.2,
            delta: 0.0,
            t0: 200.0,
            n_managers: 20,
            n_workers: 400,
            manager_skill_min: 0.05,
            manager_skill_max: 1.0,
            worker_skill_a: 2.0,
            worker_skill_b: 5.0,
            seed: 2026,
        }
    }

    pub fn validate(&self) -> Result<()> {
        const OP: &str = "ModelParams::validate";
        for (name, value) in [
            ("tfp", self.tfp),
            ("alpha", self.alpha),
            ("c0", self.c0),
            ("gamma", self.gamma),
            ("beta", self.beta),
            ("delta", self.delta),
            ("t0", self.t0),
            ("manager_skill_min", self.manager_skill_min),
            ("manager_skill_max", self.manager_skill_max),
            ("worker_skill_a", self.worker_skill_a),
            ("worker_skill_b", self.worker_skill_b),
        ] {
            ensure_finite(OP, name, value)?;
        }
        if self.tfp <= 0.0 {
            return Err(Error::domain(
                OP,
                format!("tfp must be > 0, got {}", self.tfp),
            ));
        }
        if self.alpha <= 0.0 || self.alpha >= 1.0 {
            return Err(Error::domain(
                OP,
                format!("alpha must be in (0,1), got {}", self.alpha),
            ));
        }
        if self.c0 <= 0.0 {
            return Err(Error::domain(
                OP,
                format!("c0 must be > 0, got {}", self.c0),
            ));
        }
        for (name, value) in [
            ("gamma", self.gamma),
            ("beta", self.beta),
            ("delta", self.delta),
        ] {
            if value < 0.0 {
                return Err(Error::domain(
                    OP,
                    format!("{name} must be >= 0, got {value}"),
                ));
            }
        }
        if self.t0 <= 0.0 {
            return Err(Error::domain(
                OP,
                format!("t0 must be > 0, got {}", self.t0),
            ));
        }
        if self.n_managers < 1 || self.n_workers < 1 {
            return Err(Error::domain(OP, "agent counts must be >= 1"));
        }
        if self.manager_skill_min <= 0.0 {
            return Err(Error::domain(
                OP,
                format!(
                    "manager_skill_min must be > 0, got {}",
                    self.manager_skill_min
                ),
            ));
        }
        if self.manager_skill_min >= self.manager_skill_max || self.manager_skill_max > 1.0 {
            return Err(Error::domain(
                OP,
                format!(
                    "manager skills must satisfy 0 < min < max <= 1, got [{}, {}]",
                    self.manager_skill_min, self.manager_skill_max
                ),
            ));
        }
        if self.worker_skill_a <= 0.0 || self.worker_skill_b <= 0.0 {
            return Err(Error::domain(
                OP,
                format!(
                    "worker skill shape must be positive, got ({}, {})",
                    self.worker_skill_a, self.worker_skill_b
                ),
            ));
        }
        Ok(())
    }
}

impl Default for ModelParams {
    fn default() -> Self {
        Self::baseline()
    }
}

/// One manager plus the workers assigned to them, with derived production
/// quantities. Assembled by [`Team::assemble`] so the derived fields always
/// satisfy the model equations.
#[derive(Debug, Clone, PartialEq)]
pub struct Team {
    pub manager_skill: f64,
    pub worker_skills: Vec<f64>,
    pub coordination_cost: f64,
    /// Sum of worker skills on the team.
    pub quality: f64,
    pub effective_labor: f64,
    pub output: f64,
}

impl Team {
    pub fn assemble(
        manager_skill: f64,
        worker_skills: Vec<f64>,
        coordination_cost: f64,
        tfp: f64,
        alpha: f64,
    ) -> Result<Self> {
        let quality: f64 = worker_skills.iter().sum();
        let l_eff = effective_labor(quality, worker_skills.len(), coordination_cost)?;
        let output = team_output(tfp, alpha, l_eff)?;
        Ok(Team {
            manager_skill,
            worker_skills,
            coordination_cost,
            quality,
            effective_labor: l_eff,
            output,
        })
    }

    pub fn headcount(&self) -> usize {
        self.worker_skills.len()
    }

    /// Coordination capacity of this team's manager, `1 / c_i`.
    pub fn span(&self) -> f64 {
        1.0 / self.coordination_cost
    }
}

/// Per-worker coordination friction of a manager with skill `skill` at agent
/// capital `k_a`: `c0 / (1 + gamma * k_a * skill^beta)`.
///
/// Equals `c0` at `k_a = 0` and falls hyperbolically as agent capital rises.
/// `beta = 0` is the homogeneous case (the skill term drops out); for
/// `beta > 0` the skill must be strictly positive, since the power mapping
/// degenerates at the origin.
pub fn coordination_cost(c0: f64, gamma: f64, k_a: f64, skill: f64, beta: f64) -> Result<f64> {
    const OP: &str = "coordination_cost";
    for (name, value) in [
        ("c0", c0),
        ("gamma", gamma),
        ("k_a", k_a),
        ("skill", skill),
        ("beta", beta),
    ] {
        ensure_finite(OP, name, value)?;
    }
    if c0 <= 0.0 {
        return Err(Error::domain(OP, format!("c0 must be > 0, got {c0}")));
    }
    if gamma < 0.0 || beta < 0.0 {
        return Err(Error::domain(
            OP,
            format!("gamma and beta must be >= 0, got gamma={gamma}, beta={beta}"),
        ));
    }
    if k_a < 0.0 {
        return Err(Error::domain(
            OP,
            format!("agent capital must be >= 0, got {k_a}"),
        ));
    }
    if beta > 0.0 && skill <= 0.0 {
        return Err(Error::domain(
            OP,
            format!("skill must be > 0 when beta > 0, got skill={skill}"),
        ));
    }
    let amplified = if beta == 0.0 { 1.0 } else { skill.powf(beta) };
    Ok(c0 / (1.0 + gamma * k_a * amplified))
}

/// Maximum team size a manager can coordinate at friction `cost`: `1 / cost`.
pub fn span(cost: f64) -> Result<f64> {
    const OP: &str = "span";
    ensure_finite(OP, "cost", cost)?;
    if cost <= 0.0 {
        return Err(Error::domain(OP, format!("cost must be > 0, got {cost}")));
    }
    Ok(1.0 / cost)
}

/// Team quality discounted by the coordination penalty:
/// `quality / (1 + cost * headcount)`.
///
/// An empty team must carry zero quality; reporting quality without
/// headcount is an inconsistency, not a zero.
pub fn effective_labor(quality: f64, headcount: usize, cost: f64) -> Result<f64> {
    const OP: &str = "effective_labor";
    ensure_finite(OP, "quality", quality)?;
    ensure_finite(OP, "cost", cost)?;
    if quality < 0.0 {
        return Err(Error::domain(
            OP,
            format!("quality must be >= 0, got {quality}"),
        ));
    }
    if cost <= 0.0 {
        return Err(Error::domain(OP, format!("cost must be > 0, got {cost}")));
    }
    if headcount == 0 && quality > 0.0 {
        return Err(Error::domain(
            OP,
            format!("headcount 0 is inconsistent with quality {quality}"),
        ));
    }
    Ok(quality / (1.0 + cost * headcount as f64))
}

/// Cobb-Douglas team output `tfp * l_eff^alpha` (one manager per team).
pub fn team_output(tfp: f64, alpha: f64, l_eff: f64) -> Result<f64> {
    const OP: &str = "team_output";
    ensure_finite(OP, "tfp", tfp)?;
    ensure_finite(OP, "alpha", alpha)?;
    ensure_finite(OP, "l_eff", l_eff)?;
    if tfp <= 0.0 {
        return Err(Error::domain(OP, format!("tfp must be > 0, got {tfp}")));
    }
    if alpha <= 0.0 || alpha >= 1.0 {
        return Err(Error::domain(
            OP,
            format!("alpha must be in (0,1), got {alpha}"),
        ));
    }
    if l_eff < 0.0 {
        return Err(Error::domain(
            OP,
            format!("l_eff must be >= 0, got {l_eff}"),
        ));
    }
    Ok(tfp * l_eff.powf(alpha))
}

/// Split team output between the manager and the workers.
///
/// The manager is the residual claimant on `(1 - alpha) * output`; the labor
/// share `alpha * output` is divided in proportion to worker skill. Returns
/// `(manager_wage, worker_wages)` with the wages summing back to `output`.
pub fn split_wages(output: f64, alpha: f64, worker_skills: &[f64]) -> Result<(f64, Vec<f64>)> {
    const OP: &str = "split_wages";
    ensure_finite(OP, "output", output)?;
    ensure_finite(OP, "alpha", alpha)?;
    if output < 0.0 {
        return Err(Error::domain(
            OP,
            format!("output must be >= 0, got {output}"),
        ));
    }
    if alpha <= 0.0 || alpha >= 1.0 {
        return Err(Error::domain(
            OP,
            format!("alpha must be in (0,1), got {alpha}"),
        ));
    }
    for &q in worker_skills {
        ensure_finite(OP, "worker skill", q)?;
        if q <= 0.0 {
            return Err(Error::domain(
                OP,
                format!("worker skills must be > 0, got {q}"),
            ));
        }
    }
    if worker_skills.is_empty() {
        if output > 0.0 {
            return Err(Error::domain(
                OP,
                format!("positive output {output} with no workers"),
            ));
        }
        return Ok((0.0, Vec::new()));
    }
    let quality: f64 = worker_skills.iter().sum();
    if quality <= 0.0 {
        return Err(Error::domain(OP, "nonempty team with zero total quality"));
    }
    let manager_wage = (1.0 - alpha) * output;
    let worker_wages = worker_skills
        .iter()
        .map(|&q| q / quality * alpha * output)
        .collect();
    Ok((manager_wage, worker_wages))
}

/// Count of organizationally feasible tasks at agent capital `k_a`:
/// `t0 * (1 + delta * k_a)`.
pub fn task_frontier(t0: f64, delta: f64, k_a: f64) -> Result<f64> {
    const OP: &str = "task_frontier";
    ensure_finite(OP, "t0", t0)?;
    ensure_finite(OP, "delta", delta)?;
    ensure_finite(OP, "k_a", k_a)?;
    if t0 <= 0.0 {
        return Err(Error::domain(OP, format!("t0 must be > 0, got {t0}")));
    }
    if delta < 0.0 {
        return Err(Error::domain(
            OP,
            format!("delta must be >= 0, got {delta}"),
        ));
    }
    if k_a < 0.0 {
        return Err(Error::domain(
            OP,
            format!("agent capital must be >= 0, got {k_a}"),
        ));
    }
    Ok(t0 * (1.0 + delta * k_a))
}

/// Hierarchy depth needed to supervise `workforce` workers at homogeneous
/// span `span`: `ceil(log(workforce) / log(span))`, clamped to at least one
/// layer for a nonempty workforce.
pub fn hierarchy_layers(workforce: usize, span: f64) -> Result<u32> {
    const OP: &str = "hierarchy_layers";
    ensure_finite(OP, "span", span)?;
    if workforce < 1 {
        return Err(Error::domain(OP, "workforce must be >= 1"));
    }
    if span <= 1.0 {
        return Err(Error::domain(OP, format!("span must be > 1, got {span}")));
    }
    let ratio = (workforce as f64).ln() / span.ln();
    // Guard against log round-off pushing an exact integer ratio (e.g.
    // workforce 400, span 20) one ulp above itself before the ceil.
    let layers = (ratio - 1e-9).ceil();
    Ok((layers as u32).max(1))
}

/// Managers required for `workforce` workers in a multi-layer hierarchy with
/// homogeneous span `span`: the geometric sum `workforce / (span - 1)`.
pub fn manager_demand(workforce: usize, span: f64) -> Result<f64> {
    const OP: &str = "manager_demand";
    ensure_finite(OP, "span", span)?;
    if workforce < 1 {
        return Err(Error::domain(OP, "workforce must be >= 1"));
    }
    if span <= 1.0 {
        return Err(Error::domain(OP, format!("span must be > 1, got {span}")));
    }
    Ok(workforce as f64 / (span - 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(actual: f64, expected: f64, tol: f64) {
        assert!(
            (actual - expected).abs() <= tol,
            "expected {expected}, got {actual} (tol {tol})"
        );
    }

    #[test]
    fn coordination_cost_collapses_to_c0_without_capital() {
        let c = coordination_cost(0.3, 1.0, 0.0, 0.5, 3.0).unwrap();
        assert_eq!(c, 0.3);
    }

    #[test]
    fn coordination_cost_at_full_skill() {
        // s = 1 makes the exponent irrelevant: c = 0.3 / 6 regardless of beta.
        for beta in [0.0, 0.2, 1.0, 3.0] {
            let c = coordination_cost(0.3, 1.0, 5.0, 1.0, beta).unwrap();
            assert_close(c, 0.05, 1e-15);
        }
    }

    #[test]
    fn coordination_cost_with_skill_amplification() {
        let c = coordination_cost(0.3, 1.0, 5.0, 0.1, 0.2).unwrap();
        assert_close(c, 0.07220587241759455, 1e-12);
    }

    #[test]
    fn coordination_cost_rejects_bad_domains() {
        assert!(coordination_cost(0.0, 1.0, 1.0, 0.5, 1.0).is_err());
        assert!(coordination_cost(0.3, -0.1, 1.0, 0.5, 1.0).is_err());
        assert!(coordination_cost(0.3, 1.0, -1.0, 0.5, 1.0).is_err());
        assert!(coordination_cost(0.3, 1.0, 1.0, 0.0, 0.5).is_err());
        assert!(coordination_cost(0.3, 1.0, 1.0, -0.5, 2.0).is_err());
        assert!(coordination_cost(f64::NAN, 1.0, 1.0, 0.5, 1.0).is_err());
        assert!(coordination_cost(0.3, 1.0, f64::INFINITY, 0.5, 1.0).is_err());
        // beta = 0 ignores the skill argument entirely.
        assert_eq!(coordination_cost(0.3, 1.0, 1.0, 0.0, 0.0).unwrap(), 0.15);
    }

    #[test]
    fn span_matches_newsroom_arithmetic() {
        assert_close(span(0.3).unwrap(), 10.0 / 3.0, 1e-12);
        assert_close(span(0.05).unwrap(), 20.0, 1e-12);
        assert_eq!(span(1.0).unwrap(), 1.0);
        assert!(span(0.0).is_err());
        assert!(span(-1.0).is_err());
    }

    #[test]
    fn compression_monotonicity_on_grid() {
        // Cost strictly falls and span strictly rises along K_A for gamma > 0.
        for &skill in &[0.05, 0.5, 1.0] {
            for &beta in &[0.2, 3.0] {
                let mut prev_cost = f64::INFINITY;
                let mut prev_span = 0.0;
                for i in 0..=50 {
                    let k = i as f64 * 0.2;
                    let c = coordination_cost(0.3, 1.0, k, skill, beta).unwrap();
                    let s = span(c).unwrap();
                    assert!(c < prev_cost, "cost not decreasing at k={k}");
                    assert!(s > prev_span, "span not increasing at k={k}");
                    prev_cost = c;
                    prev_span = s;
                }
            }
        }
        // gamma = 0 freezes the cost at c0.
        for i in 0..=50 {
            let k = i as f64 * 0.2;
            assert_eq!(coordination_cost(0.3, 0.0, k, 0.5, 0.2).unwrap(), 0.3);
        }
    }

    #[test]
    fn span_skill_gap_widens_in_capital() {
        // For beta > 0 and s1 > s2 the capacity gap grows with K_A.
        let (s1, s2) = (0.9, 0.3);
        for &beta in &[0.2, 1.0, 3.0] {
            let mut prev_gap = f64::NEG_INFINITY;
            for i in 0..=50 {
                let k = i as f64 * 0.2;
                let gap = span(coordination_cost(0.3, 1.0, k, s1, beta).unwrap()).unwrap()
                    - span(coordination_cost(0.3, 1.0, k, s2, beta).unwrap()).unwrap();
                assert!(gap > prev_gap, "gap not widening at k={k}, beta={beta}");
                prev_gap = gap;
            }
        }
    }

    #[test]
    fn cost_derivative_matches_closed_form() {
        // Central difference vs -c0*gamma*s^beta / (1 + gamma*K*s^beta)^2.
        let h = 1e-5;
        for &k in &[0.5, 1.0, 2.0, 5.0, 10.0] {
            for &skill in &[0.05, 0.5, 1.0] {
                for &beta in &[0.2, 3.0] {
                    let up = coordination_cost(0.3, 1.0, k + h, skill, beta).unwrap();
                    let down = coordination_cost(0.3, 1.0, k - h, skill, beta).unwrap();
                    let numeric = (up - down) / (2.0 * h);
                    let amplified = skill.powf(beta);
                    let analytic = -0.3 * amplified / (1.0 + k * amplified).powi(2);
                    assert!(
                        ((numeric - analytic) / analytic).abs() <= 1e-6,
                        "derivative mismatch at k={k}, s={skill}, beta={beta}: \
                         numeric {numeric}, analytic {analytic}"
                    );
                }
            }
        }
    }

    #[test]
    fn effective_labor_examples() {
        assert_eq!(effective_labor(0.0, 0, 0.3).unwrap(), 0.0);
        assert_close(effective_labor(10.0, 10, 0.3).unwrap(), 2.5, 1e-12);
        assert_close(effective_labor(10.0, 10, 1e-12).unwrap(), 10.0, 1e-9);
        assert!(effective_labor(1.0, 0, 0.3).is_err());
        assert!(effective_labor(-1.0, 1, 0.3).is_err());
        assert!(effective_labor(1.0, 1, 0.0).is_err());
    }

    #[test]
    fn effective_labor_homogeneous_reduction() {
        // All-unit skills collapse to n / (1 + c*n), bit for bit.
        for n in 1..=100usize {
            for &c in &[0.05, 0.3, 1.0] {
                let got = effective_labor(n as f64, n, c).unwrap();
                let reduced = n as f64 / (1.0 + c * n as f64);
                assert_eq!(got, reduced);
            }
        }
    }

    #[test]
    fn team_output_examples() {
        assert_eq!(team_output(1.0, 0.65, 1.0).unwrap(), 1.0);
        assert_close(
            team_output(1.0, 0.65, 2.5).unwrap(),
            1.8140990906881558,
            1e-12,
        );
        assert_close(team_output(2.0, 0.5, 4.0).unwrap(), 4.0, 1e-12);
        assert_eq!(team_output(1.0, 0.65, 0.0).unwrap(), 0.0);
        assert!(team_output(0.0, 0.65, 1.0).is_err());
        assert!(team_output(1.0, 1.0, 1.0).is_err());
        assert!(team_output(1.0, 0.65, -1.0).is_err());
    }

    #[test]
    fn split_wages_examples() {
        let (m, w) = split_wages(1.0, 0.65, &[1.0]).unwrap();
        assert_close(m, 0.35, 1e-15);
        assert_eq!(w.len(), 1);
        assert_close(w[0], 0.65, 1e-15);

        let (m, w) = split_wages(1.0, 0.65, &[1.0, 1.0, 2.0]).unwrap();
        assert_close(m, 0.35, 1e-15);
        assert_close(w[0], 0.1625, 1e-15);
        assert_close(w[1], 0.1625, 1e-15);
        assert_close(w[2], 0.325, 1e-15);

        let (m, w) = split_wages(0.0, 0.65, &[]).unwrap();
        assert_eq!(m, 0.0);
        assert!(w.is_empty());

        assert!(split_wages(1.0, 0.65, &[]).is_err());
        assert!(split_wages(1.0, 0.65, &[0.0]).is_err());
        assert!(split_wages(-1.0, 0.65, &[1.0]).is_err());
    }

    #[test]
    fn wages_conserve_output() {
        let skills = [0.13, 0.4, 0.77, 0.2, 0.91];
        for &y in &[0.01, 1.0, 57.3, 1e6] {
            for &alpha in &[0.1, 0.5, 0.65, 0.9] {
                let (m, w) = split_wages(y, alpha, &skills).unwrap();
                let total = m + w.iter().sum::<f64>();
                assert!(
                    ((total - y) / y).abs() <= 1e-12,
                    "leak at y={y}, alpha={alpha}"
                );
            }
        }
    }

    #[test]
    fn task_frontier_examples() {
        assert_eq!(task_frontier(200.0, 0.0, 10.0).unwrap(), 200.0);
        assert_close(task_frontier(200.0, 0.3, 10.0).unwrap(), 800.0, 1e-9);
        assert_eq!(task_frontier(200.0, 0.3, 0.0).unwrap(), 200.0);
        assert!(task_frontier(0.0, 0.3, 1.0).is_err());
    }

    #[test]
    fn hierarchy_layers_examples() {
        assert_eq!(hierarchy_layers(400, 20.0).unwrap(), 2);
        assert_eq!(hierarchy_layers(400, 10.0 / 3.0).unwrap(), 5);
        // The raw formula says zero layers for a single worker; clamp to 1.
        assert_eq!(hierarchy_layers(1, 2.0).unwrap(), 1);
        assert!(hierarchy_layers(400, 1.0).is_err());
        assert!(hierarchy_layers(400, 0.5).is_err());
    }

    #[test]
    fn manager_demand_examples() {
        assert_close(manager_demand(400, 10.0 / 3.0).unwrap(), 1200.0 / 7.0, 1e-9);
        assert_close(manager_demand(400, 20.0).unwrap(), 400.0 / 19.0, 1e-12);
        assert!(manager_demand(400, 1e12).unwrap() < 1e-9);
        assert!(manager_demand(400, 1.0).is_err());
    }

    #[test]
    fn manager_demand_falls_as_span_expands() {
        let mut prev = f64::INFINITY;
        for i in 0..=50 {
            let k = i as f64 * 0.2;
            let s = span(coordination_cost(0.3, 1.0, k, 1.0, 0.0).unwrap()).unwrap();
            let m = manager_demand(400, s).unwrap();
            assert!(m < prev);
            prev = m;
        }
    }

    #[test]
    fn team_assembly_derives_consistent_fields() {
        let team = Team::assemble(0.6, vec![0.5, 0.25, 0.25], 0.1, 1.0, 0.65).unwrap();
        assert_eq!(team.headcount(), 3);
        assert_eq!(team.quality, 1.0);
        assert_close(team.effective_labor, 1.0 / 1.3, 1e-15);
        assert_close(team.output, (1.0f64 / 1.3).powf(0.65), 1e-15);
        assert_close(team.span(), 10.0, 1e-12);

        let empty = Team::assemble(0.6, vec![], 0.1, 1.0, 0.65).unwrap();
        assert_eq!(empty.quality, 0.0);
        assert_eq!(empty.effective_labor, 0.0);
        assert_eq!(empty.output, 0.0);
    }

    #[test]
    fn baseline_params_validate() {
        ModelParams::baseline().validate().unwrap();

        let mut bad = ModelParams::baseline();
        bad.alpha = 1.0;
        assert!(bad.validate().is_err());

        let mut bad = ModelParams::baseline();
        bad.manager_skill_min = 0.0;
        assert!(bad.validate().is_err());

        let mut bad = ModelParams::baseline();
        bad.gamma = f64::NAN;
        assert!(bad.validate().is_err());
    }
}

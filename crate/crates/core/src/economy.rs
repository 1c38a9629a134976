//! One economy snapshot at a given level of agent capital.
//!
//! The pipeline: per-manager coordination costs and spans, the task
//! frontier, the employment count, largest-remainder integer allocation of
//! workers across managers, assortative (or seeded-random) assignment, then
//! per-team production and the wage split. Snapshots are pure functions of
//! `(params, beta, delta, k_a, mode)`.

use crate::error::{ensure_finite, Error, Result};
use crate::model::{self, ModelParams, Team};
use crate::population::{self, SkillVector};
use crate::rng::SplitMix64;

/// How employed workers are matched to managers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssignmentMode {
    /// Positive assortative matching: best workers to the managers with the
    /// most effective agent capital.
    Pam,
    /// Uniform employed subset and partition, driven by the seed.
    Random,
}

impl AssignmentMode {
    pub fn as_str(self) -> &'static str {
        match self {
            AssignmentMode::Pam => "pam",
            AssignmentMode::Random => "random",
        }
    }
}

impl std::str::FromStr for AssignmentMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "pam" => Ok(AssignmentMode::Pam),
            "random" => Ok(AssignmentMode::Random),
            other => Err(format!(
                "unknown assignment mode `{other}` (expected pam|random)"
            )),
        }
    }
}

/// Integer worker headcounts per manager, summing to the employed total.
#[derive(Debug, Clone, PartialEq)]
pub struct AllocationPlan {
    pub counts: Vec<usize>,
    pub employed_total: usize,
    pub mode: AssignmentMode,
}

impl AllocationPlan {
    fn new(counts: Vec<usize>, mode: AssignmentMode) -> Self {
        let employed_total = counts.iter().sum();
        AllocationPlan {
            counts,
            employed_total,
            mode,
        }
    }
}

/// The full state of the economy at one `K_A`: teams, the wage vector split
/// into managers / employed workers / the unemployed (at exact zero), and
/// aggregate output.
#[derive(Debug, Clone, PartialEq)]
pub struct EconomySnapshot {
    pub k_a: f64,
    pub teams: Vec<Team>,
    pub manager_wages: Vec<f64>,
    /// One entry per employed worker, grouped by team in manager order.
    pub worker_wages: Vec<f64>,
    pub unemployed_count: usize,
    pub total_output: f64,
    pub employed: usize,
}

impl EconomySnapshot {
    pub fn n_managers(&self) -> usize {
        self.manager_wages.len()
    }

    pub fn n_workers(&self) -> usize {
        self.worker_wages.len() + self.unemployed_count
    }

    /// Economy-wide income vector: every manager, every employed worker,
    /// and a zero for every unemployed worker.
    pub fn income_vector(&self) -> Vec<f64> {
        let mut incomes = Vec::with_capacity(
            self.manager_wages.len() + self.worker_wages.len() + self.unemployed_count,
        );
        incomes.extend_from_slice(&self.manager_wages);
        incomes.extend_from_slice(&self.worker_wages);
        incomes.resize(incomes.len() + self.unemployed_count, 0.0);
        incomes
    }

    /// Total supervisory capacity `sum(1 / c_i)` across managers.
    pub fn supervisory_capacity(&self) -> f64 {
        self.teams.iter().map(Team::span).sum()
    }

    pub fn mean_manager_wage(&self) -> f64 {
        self.manager_wages.iter().sum::<f64>() / self.manager_wages.len() as f64
    }

    /// Mean wage over employed workers; `None` when nobody is employed.
    pub fn mean_employed_worker_wage(&self) -> Option<f64> {
        if self.worker_wages.is_empty() {
            return None;
        }
        Some(self.worker_wages.iter().sum::<f64>() / self.worker_wages.len() as f64)
    }

    /// Ratio of mean manager wage to mean employed-worker wage.
    pub fn wage_gap(&self) -> Option<f64> {
        self.mean_employed_worker_wage()
            .map(|w| self.mean_manager_wage() / w)
    }
}

/// Number of workers employed: supervisory capacity rounded half-up, capped
/// by the integer task frontier and the worker pool.
pub fn employment(spans: &[f64], frontier: f64, worker_pool: usize) -> Result<usize> {
    const OP: &str = "employment";
    ensure_finite(OP, "frontier", frontier)?;
    if frontier <= 0.0 {
        return Err(Error::domain(
            OP,
            format!("frontier must be > 0, got {frontier}"),
        ));
    }
    let mut capacity = 0.0;
    for &s in spans {
        ensure_finite(OP, "span", s)?;
        if s <= 0.0 {
            return Err(Error::domain(OP, format!("spans must be > 0, got {s}")));
        }
        capacity += s;
    }
    let demand = (capacity + 0.5).floor() as usize;
    Ok(demand.min(frontier.floor() as usize).min(worker_pool))
}

/// Largest-remainder apportionment of `employed` workers across managers in
/// proportion to span. Every manager gets the floor of their quota; the
/// leftover seats go to the largest fractional remainders, ties broken by
/// higher manager skill, then lower index.
pub fn allocate_largest_remainder(
    spans: &[f64],
    manager_skills: &[f64],
    employed: usize,
) -> Result<Vec<usize>> {
    const OP: &str = "allocate_largest_remainder";
    if spans.len() != manager_skills.len() {
        return Err(Error::domain(
            OP,
            format!("{} spans but {} skills", spans.len(), manager_skills.len()),
        ));
    }
    if spans.is_empty() {
        return Err(Error::domain(OP, "no managers to allocate to"));
    }
    for &s in spans {
        ensure_finite(OP, "span", s)?;
        if s <= 0.0 {
            return Err(Error::domain(OP, format!("spans must be > 0, got {s}")));
        }
    }
    if employed == 0 {
        return Ok(vec![0; spans.len()]);
    }

    let capacity: f64 = spans.iter().sum();
    let quotas: Vec<f64> = spans
        .iter()
        .map(|&s| employed as f64 * s / capacity)
        .collect();
    let mut counts: Vec<usize> = quotas.iter().map(|&q| q.floor() as usize).collect();
    let assigned: usize = counts.iter().sum();
    let leftover = employed - assigned;

    let mut order: Vec<usize> = (0..spans.len()).collect();
    order.sort_by(|&i, &j| {
        let rem_i = quotas[i] - quotas[i].floor();
        let rem_j = quotas[j] - quotas[j].floor();
        rem_j
            .total_cmp(&rem_i)
            .then(manager_skills[j].total_cmp(&manager_skills[i]))
            .then(i.cmp(&j))
    });
    for &i in order.iter().take(leftover) {
        counts[i] += 1;
    }
    Ok(counts)
}

/// Distribute worker skills into per-manager teams.
///
/// PAM sorts managers by effective agent capital descending (index ascending
/// on ties) and hands out contiguous blocks of the skill-descending worker
/// list. Random mode shuffles the pool with the seeded generator, employs
/// the first `sum(counts)` workers, and partitions them in manager order.
pub fn assign_workers(
    counts: &[usize],
    effective_capital: &[f64],
    worker_skills: &[f64],
    mode: AssignmentMode,
    seed: u64,
) -> Result<Vec<Vec<f64>>> {
    const OP: &str = "assign_workers";
    if counts.len() != effective_capital.len() {
        return Err(Error::domain(
            OP,
            format!(
                "{} counts but {} capital entries",
                counts.len(),
                effective_capital.len()
            ),
        ));
    }
    let employed: usize = counts.iter().sum();
    if employed > worker_skills.len() {
        return Err(Error::domain(
            OP,
            format!(
                "{employed} workers demanded but only {} available",
                worker_skills.len()
            ),
        ));
    }

    let mut teams = vec![Vec::new(); counts.len()];
    match mode {
        AssignmentMode::Pam => {
            let mut pool: Vec<f64> = worker_skills.to_vec();
            pool.sort_unstable_by(|a, b| b.total_cmp(a));
            let mut manager_order: Vec<usize> = (0..counts.len()).collect();
            manager_order.sort_by(|&i, &j| {
                effective_capital[j]
                    .total_cmp(&effective_capital[i])
                    .then(i.cmp(&j))
            });
            let mut cursor = 0;
            for &i in &manager_order {
                teams[i] = pool[cursor..cursor + counts[i]].to_vec();
                cursor += counts[i];
            }
        }
        AssignmentMode::Random => {
            let mut pool: Vec<f64> = worker_skills.to_vec();
            SplitMix64::new(seed).shuffle(&mut pool);
            let mut cursor = 0;
            for (i, &n) in counts.iter().enumerate() {
                teams[i] = pool[cursor..cursor + n].to_vec();
                cursor += n;
            }
        }
    }
    Ok(teams)
}

/// A reusable simulation context: validated parameters plus the two skill
/// populations, which depend only on the counts and skill settings.
#[derive(Debug, Clone)]
pub struct Simulation {
    params: ModelParams,
    managers: SkillVector,
    workers: SkillVector,
}

impl Simulation {
    pub fn new(params: ModelParams) -> Result<Self> {
        params.validate()?;
        let managers = population::make_managers(
            params.n_managers,
            params.manager_skill_min,
            params.manager_skill_max,
        )?;
        let workers = population::make_workers(
            params.n_workers,
            params.worker_skill_a,
            params.worker_skill_b,
        )?;
        Ok(Simulation {
            params,
            managers,
            workers,
        })
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn managers(&self) -> &SkillVector {
        &self.managers
    }

    pub fn workers(&self) -> &SkillVector {
        &self.workers
    }

    /// Per-manager coordination landscape at one grid point: effective
    /// capital, friction, and span, in manager (skill-ascending) order.
    fn coordination(&self, beta: f64, k_a: f64) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>)> {
        let p = &self.params;
        let skills = self.managers.values();
        let mut effective_capital = Vec::with_capacity(skills.len());
        let mut costs = Vec::with_capacity(skills.len());
        let mut spans = Vec::with_capacity(skills.len());
        for &s in skills {
            let cost = model::coordination_cost(p.c0, p.gamma, k_a, s, beta)?;
            spans.push(model::span(cost)?);
            costs.push(cost);
            effective_capital.push(k_a * if beta == 0.0 { 1.0 } else { s.powf(beta) });
        }
        Ok((effective_capital, costs, spans))
    }

    /// Employment and integer headcounts at one grid point.
    pub fn allocation_plan(
        &self,
        beta: f64,
        delta: f64,
        k_a: f64,
        mode: AssignmentMode,
    ) -> Result<AllocationPlan> {
        let p = &self.params;
        let (_, _, spans) = self.coordination(beta, k_a)?;
        let frontier = model::task_frontier(p.t0, delta, k_a)?;
        let employed = employment(&spans, frontier, p.n_workers)?;
        let counts = allocate_largest_remainder(&spans, self.managers.values(), employed)?;
        Ok(AllocationPlan::new(counts, mode))
    }

    /// Build the economy at `k_a` with regime overrides `(beta, delta)`
    /// taking the place of the home parameter values.
    pub fn snapshot(
        &self,
        beta: f64,
        delta: f64,
        k_a: f64,
        mode: AssignmentMode,
    ) -> Result<EconomySnapshot> {
        let p = &self.params;
        let manager_skills = self.managers.values();
        let (effective_capital, costs, _) = self.coordination(beta, k_a)?;
        let plan = self.allocation_plan(beta, delta, k_a, mode)?;
        let employed = plan.employed_total;
        let team_skills = assign_workers(
            &plan.counts,
            &effective_capital,
            self.workers.values(),
            mode,
            p.seed,
        )?;

        let mut teams = Vec::with_capacity(manager_skills.len());
        let mut manager_wages = Vec::with_capacity(manager_skills.len());
        let mut worker_wages = Vec::with_capacity(employed);
        let mut total_output = 0.0;
        for (i, skills) in team_skills.into_iter().enumerate() {
            let team = Team::assemble(manager_skills[i], skills, costs[i], p.tfp, p.alpha)?;
            let (manager_wage, team_wages) =
                model::split_wages(team.output, p.alpha, &team.worker_skills)?;
            total_output += team.output;
            manager_wages.push(manager_wage);
            worker_wages.extend(team_wages);
            teams.push(team);
        }

        Ok(EconomySnapshot {
            k_a,
            teams,
            manager_wages,
            worker_wages,
            unemployed_count: p.n_workers - employed,
            total_output,
            employed,
        })
    }
}

/// One-shot convenience wrapper around [`Simulation`].
pub fn simulate(
    params: &ModelParams,
    beta: f64,
    delta: f64,
    k_a: f64,
    mode: AssignmentMode,
) -> Result<EconomySnapshot> {
    Simulation::new(params.clone())?.snapshot(beta, delta, k_a, mode)
}

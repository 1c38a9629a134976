//! Run configuration: flat `key = value` files with `#` comments, flag
//! overrides on top, and emission back to text so configs round-trip.

use coordsim::economy::AssignmentMode;
use coordsim::ModelParams;
use std::collections::HashMap;
use std::fmt;
use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Experiment {
    Sweep,
    Heatmap,
    Robustness,
    Props,
}

impl Experiment {
    pub fn as_str(self) -> &'static str {
        match self {
            Experiment::Sweep => "sweep",
            Experiment::Heatmap => "heatmap",
            Experiment::Robustness => "robustness",
            Experiment::Props => "props",
        }
    }
}

/// Heatmap grid bounds and the agent-capital level the plane is cut at.
#[derive(Debug, Clone, PartialEq)]
pub struct HeatmapGrid {
    pub beta_min: f64,
    pub beta_max: f64,
    pub beta_step: f64,
    pub delta_min: f64,
    pub delta_max: f64,
    pub delta_step: f64,
    pub k_a: f64,
}

impl Default for HeatmapGrid {
    fn default() -> Self {
        HeatmapGrid {
            beta_min: 0.0,
            beta_max: 4.0,
            beta_step: 0.1,
            delta_min: 0.0,
            delta_max: 0.5,
            delta_step: 0.02,
            k_a: 5.0,
        }
    }
}

/// Everything a run needs: model parameters, the experiment selector, the
/// output directory, the assignment mode, chart emission, heatmap bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub params: ModelParams,
    pub experiment: Experiment,
    pub out_dir: PathBuf,
    pub mode: AssignmentMode,
    pub emit_svg: bool,
    pub heatmap: HeatmapGrid,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            params: ModelParams::baseline(),
            experiment: Experiment::Sweep,
            out_dir: PathBuf::from("out"),
            mode: AssignmentMode::Pam,
            emit_svg: false,
            heatmap: HeatmapGrid::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("line {line}: expected `key = value`, got `{content}`")]
    Malformed { line: usize, content: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("{place}: invalid value for `{key}`: {msg}")]
    Value {
        place: String,
        key: String,
        msg: String,
    },
}

/// Where a value came from, for error reporting.
#[derive(Debug, Clone, Copy)]
enum Place {
    Line(usize),
    Flag(&'static str),
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Line(n) => write!(f, "line {n}"),
            Place::Flag(name) => write!(f, "flag {name}"),
        }
    }
}

fn value_error(place: Place, key: &str, msg: impl Into<String>) -> ConfigError {
    ConfigError::Value {
        place: place.to_string(),
        key: key.to_string(),
        msg: msg.into(),
    }
}

fn parse_f64(place: Place, key: &str, value: &str) -> Result<f64, ConfigError> {
    let v: f64 = value
        .parse()
        .map_err(|_| value_error(place, key, format!("`{value}` is not a number")))?;
    if !v.is_finite() {
        return Err(value_error(place, key, format!("`{value}` is not finite")));
    }
    Ok(v)
}

fn parse_usize(place: Place, key: &str, value: &str) -> Result<usize, ConfigError> {
    value
        .parse()
        .map_err(|_| value_error(place, key, format!("`{value}` is not a count")))
}

/// Tracks where each key was last set so cross-field violations can cite a
/// location.
type KeyLines = HashMap<&'static str, Place>;

fn apply(
    cfg: &mut RunConfig,
    key: &str,
    value: &str,
    place: Place,
    seen: &mut KeyLines,
) -> Result<(), ConfigError> {
    let p = &mut cfg.params;
    match key {
        "tfp" => {
            let v = parse_f64(place, key, value)?;
            if v <= 0.0 {
                return Err(value_error(place, key, format!("must be > 0, got {v}")));
            }
            p.tfp = v;
        }
        "alpha" => {
            let v = parse_f64(place, key, value)?;
            if !(v > 0.0 && v < 1.0) {
                return Err(value_error(
                    place,
                    key,
                    format!("must be in (0,1), got {v}"),
                ));
            }
            p.alpha = v;
        }
        "c0" => {
            let v = parse_f64(place, key, value)?;
            if v <= 0.0 {
                return Err(value_error(place, key, format!("must be > 0, got {v}")));
            }
            p.c0 = v;
        }
        "gamma" | "beta" | "delta" => {
            let v = parse_f64(place, key, value)?;
            if v < 0.0 {
                return Err(value_error(place, key, format!("must be >= 0, got {v}")));
            }
            match key {
                "gamma" => p.gamma = v,
                "beta" => p.beta = v,
                _ => p.delta = v,
            }
        }
        "t0" => {
            let v = parse_f64(place, key, value)?;
            if v <= 0.0 {
                return Err(value_error(place, key, format!("must be > 0, got {v}")));
            }
            p.t0 = v;
        }
        "n_managers" => {
            let v = parse_usize(place, key, value)?;
            if v < 2 {
                return Err(value_error(
                    place,
                    key,
                    format!("need at least 2 managers, got {v}"),
                ));
            }
            p.n_managers = v;
        }
        "n_workers" => {
            let v = parse_usize(place, key, value)?;
            if v < 1 {
                return Err(value_error(place, key, "need at least 1 worker"));
            }
            p.n_workers = v;
        }
        "manager_skill_min" | "manager_skill_max" => {
            let v = parse_f64(place, key, value)?;
            if !(v > 0.0 && v <= 1.0) {
                return Err(value_error(
                    place,
                    key,
                    format!("must be in (0,1], got {v}"),
                ));
            }
            if key == "manager_skill_min" {
                p.manager_skill_min = v;
            } else {
                p.manager_skill_max = v;
            }
        }
        "worker_skill_a" | "worker_skill_b" => {
            let v = parse_f64(place, key, value)?;
            if v <= 0.0 {
                return Err(value_error(place, key, format!("must be > 0, got {v}")));
            }
            if key == "worker_skill_a" {
                p.worker_skill_a = v;
            } else {
                p.worker_skill_b = v;
            }
        }
        "seed" => {
            p.seed = value
                .parse()
                .map_err(|_| value_error(place, key, format!("`{value}` is not a seed")))?;
        }
        "experiment" => {
            cfg.experiment = match value {
                "sweep" => Experiment::Sweep,
                "heatmap" => Experiment::Heatmap,
                "robustness" => Experiment::Robustness,
                "props" => Experiment::Props,
                other => {
                    return Err(value_error(
                        place,
                        key,
                        format!("`{other}` is not an experiment (sweep|heatmap|robustness|props)"),
                    ))
                }
            };
        }
        "out" => {
            if value.is_empty() {
                return Err(value_error(place, key, "output directory must be nonempty"));
            }
            cfg.out_dir = PathBuf::from(value);
        }
        "mode" => {
            cfg.mode = value
                .parse::<AssignmentMode>()
                .map_err(|e| value_error(place, key, e))?;
        }
        "emit_svg" => {
            cfg.emit_svg = match value {
                "true" => true,
                "false" => false,
                other => {
                    return Err(value_error(
                        place,
                        key,
                        format!("`{other}` is not true|false"),
                    ))
                }
            };
        }
        "heatmap_beta_min" | "heatmap_beta_max" | "heatmap_delta_min" | "heatmap_delta_max"
        | "heatmap_k_a" => {
            let v = parse_f64(place, key, value)?;
            if v < 0.0 {
                return Err(value_error(place, key, format!("must be >= 0, got {v}")));
            }
            let h = &mut cfg.heatmap;
            match key {
                "heatmap_beta_min" => h.beta_min = v,
                "heatmap_beta_max" => h.beta_max = v,
                "heatmap_delta_min" => h.delta_min = v,
                "heatmap_delta_max" => h.delta_max = v,
                _ => h.k_a = v,
            }
        }
        "heatmap_beta_step" | "heatmap_delta_step" => {
            let v = parse_f64(place, key, value)?;
            if v <= 0.0 {
                return Err(value_error(place, key, format!("must be > 0, got {v}")));
            }
            if key == "heatmap_beta_step" {
                cfg.heatmap.beta_step = v;
            } else {
                cfg.heatmap.delta_step = v;
            }
        }
        _ => {
            return Err(match place {
                Place::Line(line) => ConfigError::UnknownKey {
                    line,
                    key: key.to_string(),
                },
                Place::Flag(name) => value_error(place, key, format!("unknown flag {name}")),
            })
        }
    }
    // Leak-free static key tracking: match back to the canonical name.
    if let Some(canonical) = KEYS.iter().find(|&&k| k == key) {
        seen.insert(canonical, place);
    }
    Ok(())
}

/// Every recognized key, in emission order.
const KEYS: [&str; 25] = [
    "tfp",
    "alpha",
    "c0",
    "gamma",
    "beta",
    "delta",
    "t0",
    "n_managers",
    "n_workers",
    "manager_skill_min",
    "manager_skill_max",
    "worker_skill_a",
    "worker_skill_b",
    "seed",
    "experiment",
    "out",
    "mode",
    "emit_svg",
    "heatmap_beta_min",
    "heatmap_beta_max",
    "heatmap_beta_step",
    "heatmap_delta_min",
    "heatmap_delta_max",
    "heatmap_delta_step",
    "heatmap_k_a",
];

/// Cross-field consistency, run after all values land.
fn finish(cfg: &RunConfig, seen: &KeyLines) -> Result<(), ConfigError> {
    let cite = |keys: [&'static str; 2]| -> Place {
        keys.iter()
            .filter_map(|k| seen.get(k))
            .copied()
            .last()
            .unwrap_or(Place::Line(0))
    };
    if cfg.params.manager_skill_min >= cfg.params.manager_skill_max {
        return Err(value_error(
            cite(["manager_skill_min", "manager_skill_max"]),
            "manager_skill_min",
            format!(
                "must stay below manager_skill_max ({} >= {})",
                cfg.params.manager_skill_min, cfg.params.manager_skill_max
            ),
        ));
    }
    if cfg.heatmap.beta_max < cfg.heatmap.beta_min {
        return Err(value_error(
            cite(["heatmap_beta_min", "heatmap_beta_max"]),
            "heatmap_beta_max",
            "must be >= heatmap_beta_min",
        ));
    }
    if cfg.heatmap.delta_max < cfg.heatmap.delta_min {
        return Err(value_error(
            cite(["heatmap_delta_min", "heatmap_delta_max"]),
            "heatmap_delta_max",
            "must be >= heatmap_delta_min",
        ));
    }
    Ok(())
}

/// Parse a configuration file's contents on top of the defaults.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let mut cfg = RunConfig::default();
    let mut seen = KeyLines::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let content = content.trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| ConfigError::Malformed {
                line,
                content: content.to_string(),
            })?;
        apply(
            &mut cfg,
            key.trim(),
            value.trim(),
            Place::Line(line),
            &mut seen,
        )?;
    }
    finish(&cfg, &seen)?;
    Ok(cfg)
}

/// Command-line overrides, applied after the file. Fields mirror the config
/// keys one for one.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub tfp: Option<f64>,
    pub alpha: Option<f64>,
    pub c0: Option<f64>,
    pub gamma: Option<f64>,
    pub beta: Option<f64>,
    pub delta: Option<f64>,
    pub t0: Option<f64>,
    pub n_managers: Option<usize>,
    pub n_workers: Option<usize>,
    pub manager_skill_min: Option<f64>,
    pub manager_skill_max: Option<f64>,
    pub worker_skill_a: Option<f64>,
    pub worker_skill_b: Option<f64>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub mode: Option<String>,
    pub svg: bool,
    pub heatmap_beta_min: Option<f64>,
    pub heatmap_beta_max: Option<f64>,
    pub heatmap_beta_step: Option<f64>,
    pub heatmap_delta_min: Option<f64>,
    pub heatmap_delta_max: Option<f64>,
    pub heatmap_delta_step: Option<f64>,
    pub heatmap_k_a: Option<f64>,
    pub experiment: Option<Experiment>,
}

pub fn apply_overrides(cfg: &mut RunConfig, ov: &Overrides) -> Result<(), ConfigError> {
    let mut seen = KeyLines::new();
    // Route every override through the same validation as file values.
    let set = |cfg: &mut RunConfig,
               key: &'static str,
               flag: &'static str,
               value: String,
               seen: &mut KeyLines|
     -> Result<(), ConfigError> { apply(cfg, key, &value, Place::Flag(flag), seen) };

    macro_rules! fwd {
        ($field:ident, $key:literal, $flag:literal) => {
            if let Some(v) = &ov.$field {
                set(cfg, $key, $flag, v.to_string(), &mut seen)?;
            }
        };
    }
    fwd!(tfp, "tfp", "--tfp");
    fwd!(alpha, "alpha", "--alpha");
    fwd!(c0, "c0", "--c0");
    fwd!(gamma, "gamma", "--gamma");
    fwd!(beta, "beta", "--beta");
    fwd!(delta, "delta", "--delta");
    fwd!(t0, "t0", "--t0");
    fwd!(n_managers, "n_managers", "--n-managers");
    fwd!(n_workers, "n_workers", "--n-workers");
    fwd!(
        manager_skill_min,
        "manager_skill_min",
        "--manager-skill-min"
    );
    fwd!(
        manager_skill_max,
        "manager_skill_max",
        "--manager-skill-max"
    );
    fwd!(worker_skill_a, "worker_skill_a", "--worker-skill-a");
    fwd!(worker_skill_b, "worker_skill_b", "--worker-skill-b");
    fwd!(seed, "seed", "--seed");
    fwd!(heatmap_beta_min, "heatmap_beta_min", "--heatmap-beta-min");
    fwd!(heatmap_beta_max, "heatmap_beta_max", "--heatmap-beta-max");
    fwd!(
        heatmap_beta_step,
        "heatmap_beta_step",
        "--heatmap-beta-step"
    );
    fwd!(
        heatmap_delta_min,
        "heatmap_delta_min",
        "--heatmap-delta-min"
    );
    fwd!(
        heatmap_delta_max,
        "heatmap_delta_max",
        "--heatmap-delta-max"
    );
    fwd!(
        heatmap_delta_step,
        "heatmap_delta_step",
        "--heatmap-delta-step"
    );
    fwd!(heatmap_k_a, "heatmap_k_a", "--heatmap-k-a");
    if let Some(out) = &ov.out {
        set(cfg, "out", "--out", out.display().to_string(), &mut seen)?;
    }
    if let Some(mode) = &ov.mode {
        set(cfg, "mode", "--mode", mode.clone(), &mut seen)?;
    }
    if ov.svg {
        cfg.emit_svg = true;
    }
    if let Some(exp) = ov.experiment {
        cfg.experiment = exp;
    }
    finish(cfg, &seen)
}

impl RunConfig {
    /// Serialize back to `key = value` text; `parse_config` recovers the
    /// exact configuration.
    pub fn to_config_string(&self) -> String {
        let p = &self.params;
        let h = &self.heatmap;
        format!(
            "# coordination-compression simulator configuration\n\
             tfp = {}\n\
             alpha = {}\n\
             c0 = {}\n\
             gamma = {}\n\
             beta = {}\n\
             delta = {}\n\
             t0 = {}\n\
             n_managers = {}\n\
             n_workers = {}\n\
             manager_skill_min = {}\n\
             manager_skill_max = {}\n\
             worker_skill_a = {}\n\
             worker_skill_b = {}\n\
             seed = {}\n\
             experiment = {}\n\
             out = {}\n\
             mode = {}\n\
             emit_svg = {}\n\
             heatmap_beta_min = {}\n\
             heatmap_beta_max = {}\n\
             heatmap_beta_step = {}\n\
             heatmap_delta_min = {}\n\
             heatmap_delta_max = {}\n\
             heatmap_delta_step = {}\n\
             heatmap_k_a = {}\n",
            p.tfp,
            p.alpha,
            p.c0,
            p.gamma,
            p.beta,
            p.delta,
            p.t0,
            p.n_managers,
            p.n_workers,
            p.manager_skill_min,
            p.manager_skill_max,
            p.worker_skill_a,
            p.worker_skill_b,
            p.seed,
            self.experiment.as_str(),
            self.out_dir.display(),
            self.mode.as_str(),
            self.emit_svg,
            h.beta_min,
            h.beta_max,
            h.beta_step,
            h.delta_min,
            h.delta_max,
            h.delta_step,
            h.k_a,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_file_yields_defaults() {
        let cfg = parse_config("").unwrap();
        assert_eq!(cfg, RunConfig::default());
        assert_eq!(cfg.params.alpha, 0.65);
        assert_eq!(cfg.params.c0, 0.3);
        assert_eq!(cfg.params.gamma, 1.0);
        assert_eq!(cfg.params.t0, 200.0);
        assert_eq!(cfg.params.n_managers, 20);
        assert_eq!(cfg.params.n_workers, 400);
        assert_eq!(cfg.params.seed, 2026);
    }

    #[test]
    fn single_override_keeps_rest_default() {
        let cfg = parse_config("alpha = 0.5").unwrap();
        assert_eq!(cfg.params.alpha, 0.5);
        let mut expected = RunConfig::default();
        expected.params.alpha = 0.5;
        assert_eq!(cfg, expected);
    }

    #[test]
    fn unknown_key_names_key_and_line() {
        let err = parse_config("alfa = 0.5").unwrap_err();
        assert_eq!(
            err,
            ConfigError::UnknownKey {
                line: 1,
                key: "alfa".to_string()
            }
        );
        let msg = err.to_string();
        assert!(msg.contains("line 1") && msg.contains("alfa"), "{msg}");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_config("alpha = 0.5\ngamma = -1\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");

        let err = parse_config("\n\nalpha = blue\n").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");

        let err = parse_config("just some words\n").unwrap_err();
        assert!(matches!(err, ConfigError::Malformed { line: 1, .. }));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let cfg = parse_config("# a comment\n\nalpha = 0.5  # trailing\n   \n").unwrap();
        assert_eq!(cfg.params.alpha, 0.5);
    }

    #[test]
    fn out_of_range_values_rejected() {
        assert!(parse_config("alpha = 1.0").is_err());
        assert!(parse_config("alpha = 0").is_err());
        assert!(parse_config("c0 = -0.3").is_err());
        assert!(parse_config("t0 = 0").is_err());
        assert!(parse_config("n_managers = 1").is_err());
        assert!(parse_config("manager_skill_min = 0").is_err());
        assert!(parse_config("manager_skill_max = 1.5").is_err());
        assert!(parse_config("gamma = inf").is_err());
        assert!(parse_config("beta = nan").is_err());
        assert!(parse_config("mode = sorted").is_err());
        assert!(parse_config("experiment = dance").is_err());
        assert!(parse_config("emit_svg = yes").is_err());
        assert!(parse_config("heatmap_beta_step = 0").is_err());
    }

    #[test]
    fn cross_field_violations_cite_a_line() {
        let err = parse_config("manager_skill_min = 0.9\nmanager_skill_max = 0.5\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 2"), "{msg}");

        let err = parse_config("heatmap_beta_min = 3\nheatmap_beta_max = 1\n").unwrap_err();
        assert!(err.to_string().contains("heatmap_beta_max"));
    }

    #[test]
    fn emit_parse_round_trip_default() {
        let cfg = RunConfig::default();
        assert_eq!(parse_config(&cfg.to_config_string()).unwrap(), cfg);
    }

    #[test]
    fn emit_parse_round_trip_acceptance_overrides() {
        // Every override the acceptance runs exercise.
        for alpha in [0.5, 0.65, 0.8] {
            for mode in [AssignmentMode::Pam, AssignmentMode::Random] {
                let mut cfg = RunConfig::default();
                cfg.params.alpha = alpha;
                cfg.params.seed = 2026;
                cfg.mode = mode;
                assert_eq!(parse_config(&cfg.to_config_string()).unwrap(), cfg);
            }
        }
    }

    #[test]
    fn emit_parse_round_trip_overridden() {
        let mut cfg = RunConfig::default();
        cfg.params.alpha = 0.5;
        cfg.params.beta = 3.0;
        cfg.params.delta = 0.3;
        cfg.params.seed = 77;
        cfg.experiment = Experiment::Heatmap;
        cfg.mode = AssignmentMode::Random;
        cfg.emit_svg = true;
        cfg.out_dir = PathBuf::from("results/run1");
        cfg.heatmap.beta_step = 0.25;
        assert_eq!(parse_config(&cfg.to_config_string()).unwrap(), cfg);
    }

    #[test]
    fn overrides_apply_after_file_values() {
        let mut cfg = parse_config("alpha = 0.5\nseed = 1\n").unwrap();
        let ov = Overrides {
            alpha: Some(0.8),
            mode: Some("random".to_string()),
            svg: true,
            experiment: Some(Experiment::Props),
            ..Overrides::default()
        };
        apply_overrides(&mut cfg, &ov).unwrap();
        assert_eq!(cfg.params.alpha, 0.8);
        assert_eq!(cfg.params.seed, 1);
        assert_eq!(cfg.mode, AssignmentMode::Random);
        assert!(cfg.emit_svg);
        assert_eq!(cfg.experiment, Experiment::Props);
    }

    #[test]
    fn bad_override_is_a_config_error_naming_the_flag() {
        let mut cfg = RunConfig::default();
        let ov = Overrides {
            alpha: Some(1.5),
            ..Overrides::default()
        };
        let err = apply_overrides(&mut cfg, &ov).unwrap_err();
        assert!(err.to_string().contains("--alpha"), "{err}");
    }
}

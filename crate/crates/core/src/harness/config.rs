use std::fmt;
use std::path::PathBuf;

use serde::de::{self, MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};

use crate::engine::AlgoParams;
use crate::error::{Error, Result};
use crate::optimizer::AlgorithmRegistry;
use crate::problems::{nearest_name, Registry};

pub const DEFAULT_RUNS: usize = 30;

/// One algorithm and its parameter overrides. In a config file either a
/// bare name (`"msho"`) or a table with `name` and optional `params`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlgorithmConfig {
    pub name: String,
    pub params: AlgoParams,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgorithmTable {
    name: String,
    #[serde(default)]
    params: AlgoParams,
}

impl<'de> Deserialize<'de> for AlgorithmConfig {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = AlgorithmConfig;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an algorithm name or a table with `name` and `params`")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Self::Value, E> {
                Ok(AlgorithmConfig {
                    name: v.to_string(),
                    params: AlgoParams::default(),
                })
            }

            fn visit_map<A: MapAccess<'de>>(self, map: A) -> std::result::Result<Self::Value, A::Error> {
                let t = AlgorithmTable::deserialize(de::value::MapAccessDeserializer::new(map))?;
                Ok(AlgorithmConfig {
                    name: t.name,
                    params: t.params,
                })
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EmitConfig {
    pub convergence: bool,
    pub report: bool,
    pub discrepancy_ledger: bool,
    /// Log every n-th iteration in the convergence file (the last one is
    /// always kept).
    pub convergence_every: usize,
}

impl Default for EmitConfig {
    fn default() -> Self {
        Self {
            convergence: true,
            report: true,
            discrepancy_ledger: true,
            convergence_every: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub algorithms: Vec<AlgorithmConfig>,
    pub problems: Vec<String>,
    #[serde(default = "default_runs")]
    pub runs: usize,
    /// Run `r` uses seed `base_seed + r`.
    #[serde(default)]
    pub base_seed: u64,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
    /// Algorithm the pairwise tests are taken against.
    #[serde(default = "default_reference")]
    pub reference: String,
    #[serde(default)]
    pub emit: EmitConfig,
}

fn default_runs() -> usize {
    DEFAULT_RUNS
}

fn default_output_dir() -> PathBuf {
    PathBuf::from("results")
}

fn default_reference() -> String {
    "msho".into()
}

impl ExperimentConfig {
    /// Config for the given names with every default applied.
    pub fn new(algorithms: &[&str], problems: &[&str]) -> Self {
        Self {
            algorithms: algorithms
                .iter()
                .map(|n| AlgorithmConfig {
                    name: n.to_string(),
                    params: AlgoParams::default(),
                })
                .collect(),
            problems: problems.iter().map(|p| p.to_string()).collect(),
            runs: DEFAULT_RUNS,
            base_seed: 0,
            output_dir: default_output_dir(),
            reference: default_reference(),
            emit: EmitConfig::default(),
        }
    }

    pub fn seed(&self, run_index: usize) -> u64 {
        self.base_seed.wrapping_add(run_index as u64)
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string_pretty(self).map_err(|e| Error::Config(e.to_string()))
    }

    /// Checks names against the registries and every numeric setting.
    pub fn validate(&self, problems: &Registry, algorithms: &AlgorithmRegistry) -> Result<()> {
        let field = |path: String, message: String| Error::Parse { path, message };
        if self.algorithms.is_empty() {
            return Err(field("algorithms".into(), "at least one algorithm is required".into()));
        }
        if self.problems.is_empty() {
            return Err(field("problems".into(), "at least one problem is required".into()));
        }
        if self.runs == 0 {
            return Err(field("runs".into(), "must be at least 1".into()));
        }
        if self.emit.convergence_every == 0 {
            return Err(field("emit.convergence_every".into(), "must be at least 1".into()));
        }
        for (i, a) in self.algorithms.iter().enumerate() {
            if !algorithms.contains(&a.name) {
                return Err(field(
                    format!("algorithms[{i}].name"),
                    unknown("algorithm", &a.name, nearest_name(&a.name, algorithms.names())),
                ));
            }
            if let Some(j) = self.algorithms[..i].iter().position(|b| b.name == a.name) {
                return Err(field(
                    format!("algorithms[{i}].name"),
                    format!("`{}` already listed at algorithms[{j}]", a.name),
                ));
            }
            if let Err((name, msg)) = a.params.check() {
                return Err(field(format!("algorithms[{i}].params.{name}"), msg));
            }
        }
        for (i, p) in self.problems.iter().enumerate() {
            if !problems.contains(p) {
                return Err(field(format!("problems[{i}]"), unknown("problem", p, problems.suggest(p))));
            }
        }
        Ok(())
    }
}

fn unknown(what: &str, name: &str, suggestion: Option<String>) -> String {
    match suggestion {
        Some(s) => format!("unknown {what} `{name}` (did you mean `{s}`?)"),
        None => format!("unknown {what} `{name}`"),
    }
}

/// Parse and validate a TOML experiment config against the built-in
/// registries.
pub fn parse_config(text: &str) -> Result<ExperimentConfig> {
    parse_config_with(text, &Registry::builtin(), &AlgorithmRegistry::default())
}

pub fn parse_config_with(
    text: &str,
    problems: &Registry,
    algorithms: &AlgorithmRegistry,
) -> Result<ExperimentConfig> {
    let de = toml::Deserializer::parse(text).map_err(|e| Error::Parse {
        path: String::new(),
        message: e.message().to_string(),
    })?;
    let config: ExperimentConfig = serde_path_to_error::deserialize(de).map_err(|e| Error::Parse {
        path: e.path().to_string(),
        message: e.inner().message().to_string(),
    })?;
    config.validate(problems, algorithms)?;
    Ok(config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_config_gets_defaults() {
        let c = parse_config("algorithms = [\"msho\"]\nproblems = [\"spring\"]\n").unwrap();
        assert_eq!(c.runs, 30);
        assert_eq!(c.algorithms[0].params.pop, 30);
        assert_eq!(c.algorithms[0].params.max_iter, 1000);
        assert_eq!(c.reference, "msho");
    }

    #[test]
    fn round_trip_is_a_fixpoint() {
        let text = "runs = 5\nbase_seed = 9\nproblems = [\"spring\", \"sphere\"]\n\
                    [[algorithms]]\nname = \"sho\"\nparams = { pop = 12, max_iter = 40 }\n\
                    [[algorithms]]\nname = \"msho\"\n";
        let a = parse_config(text).unwrap();
        let b = parse_config(&a.to_toml().unwrap()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_toml().unwrap(), b.to_toml().unwrap());
    }

    #[test]
    fn unknown_problem_names_field_and_suggestion() {
        let e = parse_config("algorithms = [\"msho\"]\nproblems = [\"spring\", \"sprng\"]\n").unwrap_err();
        match e {
            Error::Parse { path, message } => {
                assert_eq!(path, "problems[1]");
                assert!(message.contains("spring"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zero_runs_rejected() {
        let e = parse_config("algorithms = [\"msho\"]\nproblems = [\"spring\"]\nruns = 0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { ref path, .. } if path == "runs"), "{e:?}");
    }

    #[test]
    fn bad_param_points_at_field() {
        let text = "problems = [\"spring\"]\n[[algorithms]]\nname = \"msho\"\nparams = { pop = 7 }\n";
        let e = parse_config(text).unwrap_err();
        assert!(matches!(e, Error::Parse { ref path, .. } if path == "algorithms[0].params.pop"), "{e:?}");
    }

    #[test]
    fn unknown_key_reports_path() {
        let text = "problems = [\"spring\"]\n[[algorithms]]\nname = \"msho\"\nparams = { popsize = 8 }\n";
        let e = parse_config(text).unwrap_err();
        match e {
            Error::Parse { path, .. } => assert!(path.starts_with("algorithms[0].params"), "{path}"),
            other => panic!("{other:?}"),
        }
    }
}

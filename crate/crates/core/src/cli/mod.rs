//! Command-line front end: `key = value` experiment configs, one subcommand
//! per module, CSV output with a sidecar JSON record.
//!
//! Exit codes: 0 on success, 1 on invalid input, 2 on numerical failure.

mod commands;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Arg, ArgAction, Command};
use serde_json::{json, Value};

use crate::error::{param, Error, Result};

pub use commands::COMMANDS;

/// A configurable parameter of a subcommand.
#[derive(Debug, Clone, Copy)]
pub struct KeySpec {
    pub name: &'static str,
    pub default: Option<&'static str>,
    pub help: &'static str,
}

const fn key(name: &'static str, default: Option<&'static str>, help: &'static str) -> KeySpec {
    KeySpec { name, default, help }
}

/// One subcommand: its keys, its action and its self-test.
pub struct CommandSpec {
    pub name: &'static str,
    pub about: &'static str,
    pub keys: &'static [KeySpec],
    run: fn(&ExperimentConfig) -> Result<Outcome>,
    selftest: fn() -> Vec<(String, bool)>,
}

/// What a subcommand produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    /// One line for the terminal.
    pub line: String,
    pub csv: Option<String>,
    pub summary: Value,
}

/// A subcommand with its merged parameter map.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub command: String,
    pub params: BTreeMap<String, String>,
}

impl ExperimentConfig {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.params.get(key).map(String::as_str)
    }

    pub fn text(&self, key: &str) -> Result<&str> {
        self.get(key).ok_or_else(|| param(format!("`{}` needs --{key}", self.command)))
    }

    pub fn real(&self, key: &str) -> Result<f64> {
        let v = self.text(key)?;
        v.trim().parse().map_err(|_| param(format!("--{key} expects a number, got `{v}`")))
    }

    pub fn count(&self, key: &str) -> Result<usize> {
        let v = self.text(key)?;
        v.trim().parse().map_err(|_| param(format!("--{key} expects a whole number, got `{v}`")))
    }

    pub fn real_opt(&self, key: &str) -> Result<Option<f64>> {
        self.get(key).map(|_| self.real(key)).transpose()
    }
}

fn spec(name: &str) -> Result<&'static CommandSpec> {
    COMMANDS.iter().find(|c| c.name == name).ok_or_else(|| param(format!("unknown subcommand `{name}`")))
}

fn normalize(key: &str) -> String {
    key.trim().replace('_', "-")
}

/// Reads a `key = value` file (`#` starts a comment) for `command`. Keys may
/// use `_` or `-`.
pub fn load_config(path: &Path, command: &str) -> Result<ExperimentConfig> {
    let cmd = spec(command)?;
    let text = fs::read_to_string(path)?;
    let shown = path.display().to_string();
    let mut params = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse {
            path: shown.clone(),
            line: i + 1,
            message: format!("expected `key = value`, got `{line}`"),
        })?;
        let k = normalize(k);
        if k.is_empty() {
            return Err(Error::Parse { path: shown.clone(), line: i + 1, message: "empty key".into() });
        }
        if !cmd.keys.iter().any(|s| s.name == k) {
            return Err(Error::UnknownKey { key: k, line: i + 1 });
        }
        params.insert(k, v.trim().to_string());
    }
    Ok(ExperimentConfig { command: command.into(), params })
}

fn cli() -> Command {
    let subcommands = COMMANDS.iter().map(|c| {
        let base = Command::new(c.name)
            .about(c.about)
            .arg(Arg::new("config").long("config").value_name("PATH").help("key = value file; flags take precedence"))
            .arg(Arg::new("selftest").long("selftest").action(ArgAction::SetTrue).help("run built-in checks"));
        c.keys.iter().fold(base, |cmd, k| {
            let help = match k.default {
                Some(d) => format!("{} [default: {d}]", k.help),
                None => k.help.to_string(),
            };
            cmd.arg(Arg::new(k.name).long(k.name).value_name("VALUE").allow_hyphen_values(true).help(help))
        })
    });
    Command::new("fracevo")
        .about("Fractional evolution equations: propagators, kernels, resolvents, spectra and decay experiments")
        .version(env!("CARGO_PKG_VERSION"))
        .subcommand_required(true)
        .subcommands(subcommands)
}

/// Defaults, then the config file, then flags.
fn merge(name: &str, m: &clap::ArgMatches) -> Result<ExperimentConfig> {
    let cmd = spec(name)?;
    let mut cfg = match m.get_one::<String>("config") {
        Some(path) => load_config(Path::new(path), name)?,
        None => ExperimentConfig { command: name.into(), params: BTreeMap::new() },
    };
    for k in cmd.keys {
        if let Some(v) = m.get_one::<String>(k.name) {
            cfg.params.insert(k.name.into(), v.clone());
        } else if let (Some(d), false) = (k.default, cfg.params.contains_key(k.name)) {
            cfg.params.insert(k.name.into(), d.into());
        }
    }
    Ok(cfg)
}

/// Writes via a temporary file in the same directory and a rename.
fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

fn sidecar(path: &Path) -> PathBuf {
    path.with_extension("json")
}

/// Runs a subcommand and writes its outputs. Returns the terminal line.
pub fn execute(cfg: &ExperimentConfig) -> Result<Outcome> {
    let cmd = spec(&cfg.command)?;
    let out = (cmd.run)(cfg)?;
    if let Some(path) = cfg.get("out") {
        let path = Path::new(path);
        let csv = out.csv.as_deref().unwrap_or("");
        write_atomic(path, csv)?;
        let record = json!({ "command": cfg.command, "config": cfg.params, "summary": out.summary });
        let text = serde_json::to_string_pretty(&record).map_err(|e| param(e.to_string()))?;
        write_atomic(&sidecar(path), &(text + "\n"))?;
    }
    Ok(out)
}

/// Runs the checks of one subcommand, printing one line per check.
pub fn selftest(name: &str) -> Result<bool> {
    let cmd = spec(name)?;
    let results = (cmd.selftest)();
    for (label, ok) in &results {
        println!("{} {name}: {label}", if *ok { "PASS" } else { "FAIL" });
    }
    Ok(results.iter().all(|r| r.1))
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_numerical() {
        2
    } else {
        1
    }
}

/// Entry point shared by the binary and the tests.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let matches = match cli().try_get_matches_from(argv) {
        Ok(m) => m,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let (name, sub) = matches.subcommand().expect("a subcommand is required");
    if sub.get_flag("selftest") {
        return match selftest(name) {
            Ok(true) => 0,
            Ok(false) => 2,
            Err(e) => {
                eprintln!("error: {e}");
                exit_code(&e)
            }
        };
    }
    match merge(name, sub).and_then(|cfg| execute(&cfg)) {
        Ok(out) => {
            println!("{}", out.line);
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_file_and_flag_precedence() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.cfg");
        fs::write(&path, "# resolvent run\nkernel = power:0.5\nt_max = 1\ndt = 1e-3\n").unwrap();
        let cfg = load_config(&path, "resolvent").unwrap();
        assert_eq!(cfg.get("dt"), Some("1e-3"));
        assert_eq!(cfg.get("t-max"), Some("1"));
        let m = cli()
            .try_get_matches_from(["fracevo", "resolvent", "--config", path.to_str().unwrap(), "--dt", "1e-4"])
            .unwrap();
        let merged = merge("resolvent", m.subcommand_matches("resolvent").unwrap()).unwrap();
        assert_eq!(merged.get("dt"), Some("1e-4"));
        assert_eq!(merged.get("kernel"), Some("power:0.5"));
    }

    #[test]
    fn config_errors_carry_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.cfg");
        fs::write(&path, "dt = 1e-3\n\nfoo = 2\n").unwrap();
        match load_config(&path, "resolvent") {
            Err(Error::UnknownKey { key, line }) => assert_eq!((key.as_str(), line), ("foo", 3)),
            other => panic!("{other:?}"),
        }
        fs::write(&path, "dt 1e-3\n").unwrap();
        assert!(matches!(load_config(&path, "resolvent"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn every_command_has_out_key() {
        for c in COMMANDS.iter() {
            assert!(c.keys.iter().any(|k| k.name == "out"), "{}", c.name);
        }
    }
}

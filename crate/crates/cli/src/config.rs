//! `key = value` run configurations and the resolved-config sidecar.
//!
//! A config file is expanded into command-line flags placed before the
//! user's own flags; repeated flags override earlier ones, so the command
//! line wins.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{ArgAction, ArgMatches, Command};

use crate::error::{config, CliError, CliResult};

/// Parse `key = value` lines; `#` starts a comment.
pub fn parse_config(text: &str, origin: &Path) -> CliResult<Vec<(String, String)>> {
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(config(format!("{}:{}: expected `key = value`, found `{line}`", origin.display(), i + 1)));
        };
        let key = k.trim().replace('_', "-");
        if key.is_empty() || key.contains(char::is_whitespace) {
            return Err(config(format!("{}:{}: bad key `{}`", origin.display(), i + 1, k.trim())));
        }
        pairs.push((key, v.trim().to_string()));
    }
    Ok(pairs)
}

fn take_config_flag(args: &mut Vec<OsString>) -> CliResult<Option<PathBuf>> {
    let mut found = None;
    let mut i = 0;
    while i < args.len() {
        let a = args[i].to_string_lossy().into_owned();
        if a == "--config" {
            let Some(v) = args.get(i + 1).cloned() else {
                return Err(config("--config needs a path"));
            };
            found = Some(PathBuf::from(v));
            args.drain(i..i + 2);
        } else if let Some(v) = a.strip_prefix("--config=") {
            found = Some(PathBuf::from(v));
            args.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(found)
}

/// Rewrite `argv` so that a `--config FILE` becomes explicit flags ahead of
/// the user's own. The file may name the subcommand with `command = ...`.
pub fn expand_args(argv: Vec<OsString>) -> CliResult<Vec<OsString>> {
    let mut it = argv.into_iter();
    let prog = it.next().unwrap_or_else(|| "extremo".into());
    let mut rest: Vec<OsString> = it.collect();
    let Some(path) = take_config_flag(&mut rest)? else {
        let mut out = vec![prog];
        out.extend(rest);
        return Ok(out);
    };
    let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io { path: path.clone(), source })?;
    let pairs = parse_config(&text, &path)?;

    let user_sub = rest.first().filter(|a| !a.to_string_lossy().starts_with('-')).cloned();
    let file_sub = pairs.iter().find(|(k, _)| k == "command").map(|(_, v)| OsString::from(v));
    let sub = match (&user_sub, &file_sub) {
        (Some(u), Some(f)) if u != f => {
            return Err(config(format!(
                "{}: config is for `{}` but the command line asks for `{}`",
                path.display(),
                f.to_string_lossy(),
                u.to_string_lossy()
            )))
        }
        (Some(u), _) => u.clone(),
        (None, Some(f)) => f.clone(),
        (None, None) => return Err(config(format!("{}: no `command` key and no subcommand given", path.display()))),
    };
    if user_sub.is_some() {
        rest.remove(0);
    }

    let mut out = vec![prog, sub];
    for (k, v) in pairs.into_iter().filter(|(k, _)| k != "command") {
        match v.as_str() {
            "true" => out.push(format!("--{k}").into()),
            "false" => {}
            _ => {
                out.push(format!("--{k}").into());
                out.push(v.into());
            }
        }
    }
    out.extend(rest);
    Ok(out)
}

/// Every argument of the subcommand with its resolved value (defaults and
/// environment fallbacks included), as config text.
pub fn resolved_config(name: &str, cmd: &Command, matches: &ArgMatches) -> String {
    let mut s = String::new();
    writeln!(s, "command = {name}").unwrap();
    for arg in cmd.get_arguments() {
        let id = arg.get_id().as_str();
        let Some(long) = arg.get_long() else { continue };
        if matches!(long, "config" | "help" | "version") {
            continue;
        }
        let Ok(Some(raw)) = matches.try_get_raw(id) else { continue };
        let values: Vec<String> = raw.map(|v| v.to_string_lossy().into_owned()).collect();
        if values.is_empty() {
            continue;
        }
        if matches!(arg.get_action(), ArgAction::SetTrue) && values == ["false"] {
            continue;
        }
        writeln!(s, "{long} = {}", values.join(",")).unwrap();
    }
    s
}

/// `<output>.config` next to the output.
pub fn sidecar_path(output: &Path) -> PathBuf {
    // `out/` and `out` share one sidecar, `out.config`
    let mut p = output.components().as_path().as_os_str().to_owned();
    p.push(".config");
    PathBuf::from(p)
}

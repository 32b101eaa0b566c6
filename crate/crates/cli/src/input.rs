use std::borrow::Cow;
use std::path::Path;

use anyhow::{Context, Result};
use linecfg::{Catalog, RealizabilityClass, TVector};

use crate::args::InputArgs;

pub fn catalog(path: Option<&Path>) -> Result<Cow<'static, Catalog>> {
    match path {
        Some(p) => {
            Ok(Cow::Owned(Catalog::load(p).with_context(|| {
                format!("loading catalog {}", p.display())
            })?))
        }
        None => Ok(Cow::Borrowed(Catalog::builtin())),
    }
}

pub struct Input {
    pub label: String,
    pub tv: TVector,
    /// Class recorded with the input, if any.
    pub class: Option<RealizabilityClass>,
}

pub fn read(args: &InputArgs, catalog: &Catalog) -> Result<Vec<Input>> {
    if let Some(text) = &args.tv {
        let tv = TVector::parse(text).with_context(|| format!("parsing --tv {text:?}"))?;
        return Ok(vec![Input {
            label: tv.to_compact(),
            tv,
            class: None,
        }]);
    }
    if let Some(name) = &args.name {
        let entry = catalog.get(name)?;
        return Ok(vec![Input {
            label: entry.name.clone(),
            tv: entry.tv.clone(),
            class: Some(entry.class),
        }]);
    }
    let path = args.file.as_ref().expect("clap requires one input source");
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_file(&text).with_context(|| format!("in {}", path.display()))
}

/// A JSON array of t-vectors, or one t-vector per line (blank lines and
/// lines starting with `#` skipped).
fn parse_file(text: &str) -> Result<Vec<Input>> {
    let wrap = |tv: TVector| Input {
        label: tv.to_compact(),
        tv,
        class: None,
    };
    if text.trim_start().starts_with('[') {
        let tvs: Vec<TVector> = serde_json::from_str(text).context("parsing JSON array")?;
        return Ok(tvs.into_iter().map(wrap).collect());
    }
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tv = TVector::parse(line).with_context(|| format!("line {}", no + 1))?;
        out.push(wrap(tv));
    }
    anyhow::ensure!(!out.is_empty(), "no t-vectors found");
    Ok(out)
}

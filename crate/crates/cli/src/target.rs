use std::collections::BTreeSet;
use std::path::Path;

use anyhow::{anyhow, bail, Context};
use semiring_core::finite::{parse_tables, validate_tables, FiniteSemiring, McSet};
use semiring_core::harness::Family;

/// The semiring a command operates on.
#[derive(Debug, Clone)]
pub enum Target {
    Nat,
    Bool,
    Trop,
    Table(FiniteSemiring),
}

impl Target {
    pub fn family(&self) -> Family {
        match self {
            Target::Nat => Family::Nat,
            Target::Bool => Family::Bool,
            Target::Trop => Family::Trop,
            Target::Table(_) => Family::Finite,
        }
    }
}

pub fn read_tables(path: &Path) -> anyhow::Result<Vec<FiniteSemiring>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let raw = parse_tables(&text).with_context(|| format!("{}", path.display()))?;
    raw.into_iter()
        .enumerate()
        .map(|(i, t)| {
            validate_tables(t.order, &t.add, &t.mul)
                .with_context(|| format!("{}: table {i}", path.display()))
        })
        .collect()
}

/// `nat`, `bool`, `trop`, or a table file (its first table).
pub fn load(text: &str) -> anyhow::Result<Target> {
    Ok(match text {
        "nat" => Target::Nat,
        "bool" => Target::Bool,
        "trop" => Target::Trop,
        path => {
            let mut tables = read_tables(Path::new(path))?;
            if tables.is_empty() {
                bail!("{path} contains no tables");
            }
            Target::Table(tables.swap_remove(0))
        }
    })
}

/// `units`, `nonzero`, `powers:a,b,..` or `set:{a,b,..}`.
pub fn parse_mc_set<E: Ord>(
    text: &str,
    element: impl Fn(&str) -> Option<E>,
) -> anyhow::Result<McSet<E>> {
    let text = text.trim();
    let list = |items: &str| -> anyhow::Result<Vec<E>> {
        items
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| element(x).ok_or_else(|| anyhow!("bad element `{x}` in `{text}`")))
            .collect()
    };
    match text {
        "units" => Ok(McSet::Units),
        "nonzero" => Ok(McSet::Nonzero),
        _ => {
            if let Some(rest) = text.strip_prefix("powers:") {
                return Ok(McSet::Generated(list(rest)?));
            }
            if let Some(rest) = text.strip_prefix("set:") {
                let inner = rest
                    .trim()
                    .strip_prefix('{')
                    .and_then(|r| r.strip_suffix('}'))
                    .ok_or_else(|| anyhow!("expected set:{{..}} in `{text}`"))?;
                return Ok(McSet::Members(
                    list(inner)?.into_iter().collect::<BTreeSet<E>>(),
                ));
            }
            bail!("unknown MC-set `{text}`")
        }
    }
}

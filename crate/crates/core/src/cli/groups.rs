use super::CliError;
use crate::fixtures;
use crate::group::{g351, subgroups_g351, PermGroup, Permutation};

fn need_27(name: &str, m: usize) -> Result<(), CliError> {
    if m != 27 {
        return Err(CliError::Usage(format!("group {name} acts on 27 points, the complex has {m}")));
    }
    Ok(())
}

fn class_rep(label: &str) -> Result<PermGroup, CliError> {
    let (_, classes) = subgroups_g351()?;
    classes
        .into_iter()
        .find(|c| c.label == label)
        .map(|c| c.representative)
        .ok_or_else(|| CliError::Usage(format!("no subgroup class {label}")))
}

/// A group acting on `m` points from its command-line name.
///
/// `file:<path>` reads one permutation per line in cycle notation; blank
/// lines and lines starting with `#` are skipped.
pub fn parse_group(spec: &str, m: usize) -> Result<PermGroup, CliError> {
    let lower = spec.to_ascii_lowercase();
    let g = match lower.as_str() {
        "trivial" | "1" => PermGroup::trivial(m),
        "a" | "c13" => {
            need_27(spec, m)?;
            PermGroup::generate(27, vec![g351::perm_a()])?
        }
        "b" | "c3" => {
            need_27(spec, m)?;
            PermGroup::generate(27, vec![g351::perm_b()])?
        }
        "c3^2" | "c3^3" => {
            need_27(spec, m)?;
            class_rep(&lower.replace('c', "C"))?
        }
        "g351" => {
            need_27(spec, m)?;
            g351::build_g351()?
        }
        "normalizer" | "n2106" => {
            need_27(spec, m)?;
            g351::build_normalizer()?
        }
        "a5" => {
            if m != 15 {
                return Err(CliError::Usage(format!("group a5 acts on 15 points, the complex has {m}")));
            }
            fixtures::a5_on_15()
        }
        _ => {
            let Some(path) = spec.strip_prefix("file:") else {
                return Err(CliError::Usage(format!("unknown group {spec:?}")));
            };
            let text = std::fs::read_to_string(path)?;
            let gens = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| Permutation::from_cycles(m, l))
                .collect::<crate::Result<Vec<_>>>()?;
            PermGroup::generate(m, gens)?
        }
    };
    Ok(g)
}

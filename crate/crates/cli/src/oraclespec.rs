//! Oracle spec grammar: `fg:<rank>`, `fp:<spec>,<spec>`, `rw:<path>`.
//!
//! The resolved oracle must cover the presentation's alphabet: for `fg` and
//! `fp` the generator count has to match exactly (letters line up by
//! position), while an `rw` file may extend it with extra generators as long
//! as the names of the first ones agree with the presentation.

use fpinv::oracle::{free_group_oracle, free_product_oracle, parse_rules_file, GroupOracle};
use fpinv::presentation::Presentation;

use crate::CliError;

pub struct ResolvedOracle {
    pub oracle: Box<dyn GroupOracle>,
    /// Generator names of the oracle alphabet, for printing normal forms.
    pub names: Vec<String>,
}

pub fn resolve(spec: &str, p: &Presentation) -> Result<ResolvedOracle, CliError> {
    let mut cursor = spec;
    let (oracle, names) = parse_spec(&mut cursor, p)?;
    if !cursor.is_empty() {
        return Err(CliError::data(format!(
            "trailing garbage `{cursor}` in oracle spec `{spec}`"
        )));
    }
    match &names {
        Some(names) => Ok(ResolvedOracle {
            oracle,
            names: names.clone(),
        }),
        None => {
            if oracle.alphabet_size() != p.generator_count() {
                return Err(CliError::data(format!(
                    "oracle spec `{spec}` covers {} generators, presentation has {}",
                    oracle.alphabet_size(),
                    p.generator_count()
                )));
            }
            Ok(ResolvedOracle {
                oracle,
                names: p.alphabet().names().to_vec(),
            })
        }
    }
}

/// An oracle plus its own generator names when it declares any (rw files
/// do; fg/fp inherit the presentation's).
type SpecOracle = (Box<dyn GroupOracle>, Option<Vec<String>>);

/// Parse one spec from the cursor.
fn parse_spec(cursor: &mut &str, p: &Presentation) -> Result<SpecOracle, CliError> {
    if let Some(rest) = cursor.strip_prefix("fg:") {
        let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(CliError::data("fg: needs a rank".to_string()));
        }
        *cursor = &rest[digits.len()..];
        let rank: usize = digits
            .parse()
            .map_err(|_| CliError::data(format!("bad fg rank `{digits}`")))?;
        return Ok((Box::new(free_group_oracle(rank)), None));
    }
    if let Some(rest) = cursor.strip_prefix("fp:") {
        *cursor = rest;
        let (left, _) = parse_spec(cursor, p)?;
        let rest = cursor
            .strip_prefix(',')
            .ok_or_else(|| CliError::data("fp: expects two comma-separated specs".to_string()))?;
        *cursor = rest;
        let (right, _) = parse_spec(cursor, p)?;
        let oracle = free_product_oracle(left, right).map_err(|e| CliError::data(e.to_string()))?;
        return Ok((Box::new(oracle), None));
    }
    if let Some(rest) = cursor.strip_prefix("rw:") {
        let end = rest.find(',').unwrap_or(rest.len());
        let path = &rest[..end];
        *cursor = &rest[end..];
        let text =
            std::fs::read_to_string(path).map_err(|e| CliError::data(format!("{path}: {e}")))?;
        let file = parse_rules_file(&text).map_err(|e| CliError::data(e.to_string()))?;
        if file.names.len() < p.generator_count()
            || file.names[..p.generator_count()] != p.alphabet().names()[..]
        {
            return Err(CliError::data(format!(
                "{path}: rule alphabet must start with the presentation generators"
            )));
        }
        let names = file.names.clone();
        return Ok((Box::new(file.oracle()), Some(names)));
    }
    Err(CliError::data(format!("unknown oracle spec `{cursor}`")))
}

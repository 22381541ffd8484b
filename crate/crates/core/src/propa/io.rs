//! JSON interchange for metric spaces, point maps and witnesses.
//!
//! A space is a dense distance matrix with `null` for infinity; a witness is
//! `{eps, R, S, xi: {point: {point: weight}}}` with stringified point keys;
//! a map is a plain array. Serialization sorts keys, so equal data always
//! prints identically.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{FinExtMetric, PropaError, Witness};

#[derive(Serialize, Deserialize)]
pub struct SpaceJson {
    pub dist: Vec<Vec<Option<f64>>>,
}

#[derive(Serialize, Deserialize)]
pub struct WitnessJson {
    pub eps: f64,
    #[serde(rename = "R")]
    pub r: f64,
    #[serde(rename = "S")]
    pub s: f64,
    pub xi: BTreeMap<String, BTreeMap<String, f64>>,
}

pub fn space_to_json(space: &FinExtMetric) -> String {
    serde_json::to_string_pretty(&SpaceJson {
        dist: space.to_matrix(),
    })
    .expect("serializes")
}

pub fn space_from_json(text: &str) -> Result<FinExtMetric, PropaError> {
    let parsed: SpaceJson =
        serde_json::from_str(text).map_err(|e| PropaError::BadSpace(e.to_string()))?;
    FinExtMetric::new(&parsed.dist)
}

pub fn witness_to_json(w: &Witness<f64>) -> String {
    let xi =
        w.xi.iter()
            .enumerate()
            .map(|(x, vec)| {
                (
                    x.to_string(),
                    vec.iter().map(|(q, v)| (q.to_string(), *v)).collect(),
                )
            })
            .collect();
    serde_json::to_string_pretty(&WitnessJson {
        eps: w.eps,
        r: w.r,
        s: w.s,
        xi,
    })
    .expect("serializes")
}

pub fn witness_from_json(text: &str, n_points: usize) -> Result<Witness<f64>, PropaError> {
    let parsed: WitnessJson =
        serde_json::from_str(text).map_err(|e| PropaError::WitnessInvalid(e.to_string()))?;
    let mut xi: Vec<Vec<(u32, f64)>> = vec![Vec::new(); n_points];
    for (x, entries) in parsed.xi {
        let x: usize = x
            .parse()
            .map_err(|_| PropaError::WitnessInvalid(format!("bad point key `{x}`")))?;
        if x >= n_points {
            return Err(PropaError::WitnessInvalid(format!(
                "point {x} out of range"
            )));
        }
        let mut vec: Vec<(u32, f64)> = Vec::with_capacity(entries.len());
        for (q, v) in entries {
            let q: u32 = q
                .parse()
                .map_err(|_| PropaError::WitnessInvalid(format!("bad point key `{q}`")))?;
            if q as usize >= n_points {
                return Err(PropaError::WitnessInvalid(format!(
                    "point {q} out of range"
                )));
            }
            vec.push((q, v));
        }
        vec.sort_by_key(|e| e.0);
        xi[x] = vec;
    }
    Ok(Witness {
        xi,
        eps: parsed.eps,
        r: parsed.r,
        s: parsed.s,
    })
}

pub fn map_to_json(f: &[u32]) -> String {
    serde_json::to_string(&f).expect("serializes")
}

pub fn map_from_json(text: &str) -> Result<Vec<u32>, PropaError> {
    serde_json::from_str(text).map_err(|_| PropaError::MapNotTotal)
}

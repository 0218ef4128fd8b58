//! The witness JSON schema shared between the library and the CLI.
//!
//! One object per witness; field presence depends on the type:
//!
//! ```json
//! {"type": "induced-path", "vertices": [0, 1, 2], "verified": true}
//! {"type": "biclique", "sideA": [0], "sideB": [1, 2], "verified": true}
//! {"type": "canonical", "descriptor": "H''7", "vertices": [...], "verified": true}
//! {"type": "rake", "base": [...], "teeth": [[tooth, rootIndex], ...], "density": 7, "verified": true}
//! {"type": "inconclusive", "verified": false, "stageLog": ["..."]}
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extract::{CanonicalWitness, RakeEmbedding, Witness};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessJson {
    #[serde(rename = "type")]
    pub witness_type: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<usize>>,
    #[serde(rename = "sideA", skip_serializing_if = "Option::is_none")]
    pub side_a: Option<Vec<usize>>,
    #[serde(rename = "sideB", skip_serializing_if = "Option::is_none")]
    pub side_b: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub descriptor: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub teeth: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub density: Option<usize>,
    pub verified: bool,
    #[serde(rename = "stageLog", skip_serializing_if = "Option::is_none")]
    pub stage_log: Option<Vec<String>>,
}

impl WitnessJson {
    fn empty(witness_type: &str, verified: bool) -> Self {
        WitnessJson {
            witness_type: witness_type.to_string(),
            vertices: None,
            side_a: None,
            side_b: None,
            descriptor: None,
            base: None,
            teeth: None,
            density: None,
            verified,
            stage_log: None,
        }
    }
}

/// Encodes a witness; `verified` records whether the producer validated it.
pub fn to_json(w: &Witness, verified: bool) -> WitnessJson {
    match w {
        Witness::InducedPath(seq) => WitnessJson {
            vertices: Some(seq.clone()),
            ..WitnessJson::empty("induced-path", verified)
        },
        Witness::Biclique(a, b) => WitnessJson {
            side_a: Some(a.clone()),
            side_b: Some(b.clone()),
            ..WitnessJson::empty("biclique", verified)
        },
        Witness::Canonical(cw) => WitnessJson {
            descriptor: Some(cw.descriptor.to_string()),
            vertices: Some(cw.embedding.clone()),
            ..WitnessJson::empty("canonical", verified)
        },
        Witness::Rake(r) => WitnessJson {
            base: Some(r.base.clone()),
            teeth: Some(r.teeth.clone()),
            density: r.density,
            ..WitnessJson::empty("rake", verified)
        },
        Witness::Inconclusive { reason, stage_log } => {
            let mut log = vec![reason.clone()];
            log.extend(stage_log.iter().cloned());
            WitnessJson {
                stage_log: Some(log),
                ..WitnessJson::empty("inconclusive", false)
            }
        }
    }
}

pub fn to_json_string(w: &Witness, verified: bool) -> String {
    serde_json::to_string(&to_json(w, verified)).expect("witness serialization")
}

/// Decodes a witness object, insisting on the fields its type requires.
pub fn from_json(j: &WitnessJson) -> Result<Witness> {
    let missing = |f: &str| Error::malformed(format!("{} witness misses {f}", j.witness_type));
    match j.witness_type.as_str() {
        "induced-path" => Ok(Witness::InducedPath(
            j.vertices.clone().ok_or_else(|| missing("vertices"))?,
        )),
        "biclique" => Ok(Witness::Biclique(
            j.side_a.clone().ok_or_else(|| missing("sideA"))?,
            j.side_b.clone().ok_or_else(|| missing("sideB"))?,
        )),
        "canonical" => {
            let descriptor = j
                .descriptor
                .as_deref()
                .ok_or_else(|| missing("descriptor"))?
                .parse()?;
            Ok(Witness::Canonical(CanonicalWitness {
                descriptor,
                embedding: j.vertices.clone().ok_or_else(|| missing("vertices"))?,
            }))
        }
        "rake" => Ok(Witness::Rake(RakeEmbedding {
            base: j.base.clone().ok_or_else(|| missing("base"))?,
            teeth: j.teeth.clone().ok_or_else(|| missing("teeth"))?,
            density: j.density,
        })),
        "inconclusive" => {
            let log = j.stage_log.clone().unwrap_or_default();
            let reason = log.first().cloned().unwrap_or_else(|| "inconclusive".to_string());
            Ok(Witness::Inconclusive { reason, stage_log: log })
        }
        other => Err(Error::malformed(format!("unknown witness type {other:?}"))),
    }
}

pub fn from_json_str(text: &str) -> Result<Witness> {
    let j: WitnessJson = serde_json::from_str(text)
        .map_err(|e| Error::malformed(format!("witness JSON: {e}")))?;
    from_json(&j)
}

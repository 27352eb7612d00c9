//! TOML instance documents.
//!
//! ```toml
//! [[assets]]
//! name = "T1"
//! reward_defender = 8
//! cost_defender = "2"
//! reward_attacker = "5/1"
//! cost_attacker = -2
//!
//! attack = ["0", "1/2", ...]   # optional, top level
//! ```
//!
//! Numbers are integers or strings holding an integer, a decimal or `p/q`.
//! Floats are refused so that every value is read exactly.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use stackgame_core::rational::parse_rational;
use stackgame_core::{AssetParams, AttackVector, GameError, GameInstance, Rational};

pub const EIGHT_TANKS: &str = include_str!("../fixtures/eight_tanks.toml");

#[derive(Debug, thiserror::Error)]
pub enum InstanceError {
    #[error("malformed instance document: {0}")]
    Syntax(#[from] toml::de::Error),
    #[error("{field}: {reason}")]
    Field { field: String, reason: String },
    #[error("duplicate asset name {0:?}")]
    DuplicateName(String),
    #[error(transparent)]
    Game(#[from] GameError),
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(untagged)]
enum Number {
    Int(i64),
    Text(String),
    Float(f64),
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct AssetRecord {
    name: String,
    reward_defender: Number,
    cost_defender: Number,
    reward_attacker: Number,
    cost_attacker: Number,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct Document {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    attack: Option<Vec<Number>>,
    assets: Vec<AssetRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedInstance {
    pub instance: GameInstance,
    pub attack: Option<AttackVector>,
}

fn number(value: &Number, field: impl Fn() -> String) -> Result<Rational, InstanceError> {
    match value {
        Number::Int(i) => Ok(Rational::from_integer((*i).into())),
        Number::Text(s) => parse_rational(s).map_err(|e| InstanceError::Field { field: field(), reason: e.to_string() }),
        Number::Float(f) => Err(InstanceError::Field {
            field: field(),
            reason: format!("float {f} is not exact; write it as a string such as \"{f}\" or \"p/q\""),
        }),
    }
}

pub fn parse_instance(text: &str) -> Result<ParsedInstance, InstanceError> {
    let doc: Document = toml::from_str(text)?;
    let mut seen = HashSet::new();
    let mut assets = Vec::with_capacity(doc.assets.len());
    for (i, rec) in doc.assets.iter().enumerate() {
        if !seen.insert(rec.name.as_str()) {
            return Err(InstanceError::DuplicateName(rec.name.clone()));
        }
        let at = |key: &str| format!("assets[{}] ({}).{key}", i + 1, rec.name);
        assets.push(AssetParams::new(
            rec.name.clone(),
            number(&rec.reward_defender, || at("reward_defender"))?,
            number(&rec.cost_defender, || at("cost_defender"))?,
            number(&rec.reward_attacker, || at("reward_attacker"))?,
            number(&rec.cost_attacker, || at("cost_attacker"))?,
        ));
    }
    let instance = GameInstance::new(assets)?;
    let attack = match &doc.attack {
        None => None,
        Some(values) => {
            let entries = values
                .iter()
                .enumerate()
                .map(|(i, v)| number(v, || format!("attack[{}]", i + 1)))
                .collect::<Result<Vec<_>, _>>()?;
            if entries.len() != instance.len() {
                return Err(GameError::LengthMismatch { expected: instance.len(), found: entries.len() }.into());
            }
            Some(AttackVector::new(entries)?)
        }
    };
    Ok(ParsedInstance { instance, attack })
}

/// Serializes back to the document format with every value as an exact
/// string.
pub fn echo_instance(parsed: &ParsedInstance) -> String {
    let text = |r: &Rational| Number::Text(r.to_string());
    let doc = Document {
        attack: parsed.attack.as_ref().map(|a| a.entries().iter().map(text).collect()),
        assets: parsed
            .instance
            .assets()
            .iter()
            .map(|a| AssetRecord {
                name: a.name.clone(),
                reward_defender: text(&a.reward_defender),
                cost_defender: text(&a.cost_defender),
                reward_attacker: text(&a.reward_attacker),
                cost_attacker: text(&a.cost_attacker),
            })
            .collect(),
    };
    toml::to_string(&doc).expect("instance documents always serialize")
}

/// Resolves `--anchor` given as an asset name or a one-based index.
pub fn resolve_anchor(instance: &GameInstance, key: &str) -> Option<usize> {
    if let Some(i) = instance.assets().iter().position(|a| a.name == key) {
        return Some(i);
    }
    match key.parse::<usize>() {
        Ok(k) if (1..=instance.len()).contains(&k) => Some(k - 1),
        _ => None,
    }
}

//! Serialized forms of every command output.
//!
//! Rationals travel as strings (`"p"` or `"p/q"`) and floats as JSON numbers
//! with 17 significant digits, so emitting, parsing and emitting again
//! reproduces the same bytes.

use std::fmt;

use eorbit_core::scalar::{format_rational, parse_rational};
use eorbit_core::Rational;
use serde::de::{self, Deserializer, Visitor};
use serde::ser::{Error as _, Serializer};
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

/// An exact rational written as a `"p/q"` string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rat(pub Rational);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map(Rat).map_err(de::Error::custom)
    }
}

/// Wraps an exact weight for serialization.
pub fn rats(w: &[Rational]) -> Vec<Rat> {
    w.iter().cloned().map(Rat).collect()
}

/// Unwraps a serialized weight.
pub fn unrats(w: &[Rat]) -> Vec<Rational> {
    w.iter().map(|r| r.0.clone()).collect()
}

/// A float written with 17 significant digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct F17(pub f64);

/// Text form of a float with 17 significant digits, e.g. `-1.2500000000000000e-1`.
pub fn format_f17(x: f64) -> String {
    format!("{x:.16e}")
}

impl Serialize for F17 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return Err(S::Error::custom(format!("cannot encode non-finite value {}", self.0)));
        }
        let raw = RawValue::from_string(format_f17(self.0)).map_err(S::Error::custom)?;
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for F17 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct F17Visitor;
        impl Visitor<'_> for F17Visitor {
            type Value = F17;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a number")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<F17, E> {
                Ok(F17(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<F17, E> {
                Ok(F17(v as f64))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<F17, E> {
                Ok(F17(v as f64))
            }
        }
        d.deserialize_f64(F17Visitor)
    }
}

/// One element of a Weyl group.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementOut {
    /// Action on ω-coordinates: row k gives the k-th output coordinate.
    pub matrix: Vec<Vec<i64>>,
    pub det: i8,
    /// Reduced word in 1-based simple reflection indices, applied right to left.
    pub word: Vec<usize>,
}

/// Output of `eorbit group`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupOut {
    pub system: String,
    pub order: u64,
    pub even_order: u64,
    pub elements: Vec<ElementOut>,
}

/// Output of `eorbit orbit`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitOut {
    pub system: String,
    pub even: bool,
    /// The dominant (or even-dominant) representative.
    pub rep: Vec<Rat>,
    /// `first` when the representative lies in D+, `second` when only in r_α D+.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub stabilizer: u64,
    pub size: usize,
    pub points: Vec<Vec<Rat>>,
}

/// One term of an orbit decomposition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermOut {
    pub rep: Vec<Rat>,
    pub mult: u64,
}

/// Output of `eorbit product` and `eorbit branch`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecompositionOut {
    /// The subsystem the representatives refer to (branchings only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subsystem: Option<String>,
    pub terms: Vec<TermOut>,
}

/// One point of F_M or F^e_M.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridPointOut {
    pub omega: Vec<Rat>,
    pub coweight: Vec<Rat>,
    pub stabilizer: u64,
    pub even_stabilizer: u64,
}

/// Output of `eorbit grid --M`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridOut {
    pub system: String,
    #[serde(rename = "M")]
    pub big_m: u64,
    pub even: bool,
    pub size: usize,
    pub points: Vec<GridPointOut>,
}

/// Output of `eorbit grid --m`: the torus points T_m in ω-coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TorusOut {
    pub system: String,
    pub m: u64,
    pub size: usize,
    pub points: Vec<Vec<Rat>>,
}

/// One entry of coeffs.json.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffOut {
    pub lambda: Vec<Rat>,
    pub re: F17,
    pub im: F17,
}

/// Output format of JSON-producing commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    /// Compact JSON on one line.
    #[default]
    Json,
    /// Indented JSON.
    Pretty,
    /// Comma-separated rows.
    Csv,
}

/// Encodes a value as compact or indented JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T, pretty: bool) -> serde_json::Result<String> {
    let mut text = if pretty { serde_json::to_string_pretty(value)? } else { serde_json::to_string(value)? };
    text.push('\n');
    Ok(text)
}

/// Parses a JSON document and encodes it again in the same layout. Used to
/// check that every output is a fixed point of its own parser.
pub fn reformat<T: Serialize + for<'de> Deserialize<'de>>(text: &str, pretty: bool) -> serde_json::Result<String> {
    let value: T = serde_json::from_str(text)?;
    to_json(&value, pretty)
}

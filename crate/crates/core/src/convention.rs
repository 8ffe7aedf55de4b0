//! Min-plus / max-plus conventions and extended tropical values.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::kernel::Rational;

/// Which tropical semiring a weight vector or discrete function is read in.
///
/// `MinPlus` is the valuation (`ord`) orientation: values outside the
/// effective domain are `+∞` and functions are tested for M-convexity.
/// `MaxPlus` is its negation: `−∞` outside, tested for M-concavity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Convention {
    #[serde(rename = "MIN_PLUS")]
    MinPlus,
    #[serde(rename = "MAX_PLUS")]
    MaxPlus,
}

impl Convention {
    /// Maps a value in this convention to min-plus and back (an involution).
    pub fn to_min_plus(self, v: &Rational) -> Rational {
        match self {
            Convention::MinPlus => v.clone(),
            Convention::MaxPlus => -v,
        }
    }

    pub fn infinity(self) -> TropicalValue {
        match self {
            Convention::MinPlus => TropicalValue::PosInf,
            Convention::MaxPlus => TropicalValue::NegInf,
        }
    }

    pub fn flip(self) -> Convention {
        match self {
            Convention::MinPlus => Convention::MaxPlus,
            Convention::MaxPlus => Convention::MinPlus,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::MinPlus => "MIN_PLUS",
            Convention::MaxPlus => "MAX_PLUS",
        })
    }
}

/// A rational or an infinity, serialized as `"p/q"`, `"inf"` or `"-inf"`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum TropicalValue {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl TropicalValue {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            TropicalValue::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TropicalValue::Finite(_))
    }

    /// Reads a min-plus value (`None` = `+∞`) into the given convention.
    pub fn from_min_plus(v: Option<&Rational>, convention: Convention) -> TropicalValue {
        match v {
            Some(v) => TropicalValue::Finite(convention.to_min_plus(v)),
            None => convention.infinity(),
        }
    }
}

impl Ord for TropicalValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use TropicalValue::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (PosInf, _) | (_, NegInf) => Ordering::Greater,
        }
    }
}

impl PartialOrd for TropicalValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TropicalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropicalValue::NegInf => f.write_str("-inf"),
            TropicalValue::PosInf => f.write_str("inf"),
            TropicalValue::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for TropicalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for TropicalValue {
    type Err = crate::kernel::ParseRationalError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "+inf" => Ok(TropicalValue::PosInf),
            "-inf" => Ok(TropicalValue::NegInf),
            other => other.parse().map(TropicalValue::Finite),
        }
    }
}

impl Serialize for TropicalValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TropicalValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Raw::Int(i) => Ok(TropicalValue::Finite(Rational::from(i))),
        }
    }
}

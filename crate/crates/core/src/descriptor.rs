//! JSON wire formats. Rationals and big integers travel as strings (`"1/3"`,
//! `"-7"`); unknown fields are rejected.
//!
//! ```text
//! group     {"series": "A", "rank": 2}
//! subgroup  {"q": 6, "elements": [{"coords": ["0", "0"], "count": 1}, …]}
//! string    {"direction": [1, 0], "base": [0, 0]}
//! family    {"label": "…", "strings": [<string>, …]}
//! gf        {"q": 3, "N": 1, "numerator": ["1", "0", "1", "0", "1", "0"]}
//! window    {"q": 2, "N": 1, "samples": {"0": 1, "1": 0, "2": "3"}}
//! ```

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::genfun::{RationalGF, StringSpec};
use crate::reconstruct::SampleWindow;
use crate::rootsys::{RootSystemData, Series, Weight};
use crate::spherical::StringFamily;
use crate::subgroup::{FiniteSubgroupData, SubgroupElement, TorusElement};
use crate::{Error, Result};

/// Parses any descriptor from JSON text.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDescriptor {
    pub series: String,
    pub rank: usize,
}

impl GroupDescriptor {
    pub fn build(&self, rank_cap: usize) -> Result<RootSystemData> {
        let series = Series::from_str(&self.series).map_err(|_| Error::InvalidRootSystem {
            series: self.series.clone(),
            rank: self.rank,
        })?;
        RootSystemData::build_with_cap(series, self.rank, rank_cap)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementDescriptor {
    pub coords: Vec<String>,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubgroupDescriptor {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    pub elements: Vec<ElementDescriptor>,
}

impl SubgroupDescriptor {
    /// Without `q`, the least common multiple of the element orders is used.
    pub fn build(&self, rank: usize) -> Result<FiniteSubgroupData> {
        let elements = self
            .elements
            .iter()
            .map(|e| {
                let rep = TorusElement::parse(&e.coords)?;
                if rep.rank() != rank {
                    return Err(Error::DimensionMismatch {
                        expected: rank,
                        got: rep.rank(),
                    });
                }
                Ok(SubgroupElement { rep, count: e.count })
            })
            .collect::<Result<Vec<_>>>()?;
        match self.q {
            Some(q) => FiniteSubgroupData::new(q, elements),
            None => FiniteSubgroupData::with_default_modulus(elements),
        }
    }

    pub fn from_subgroup(g: &FiniteSubgroupData) -> Self {
        SubgroupDescriptor {
            q: Some(g.modulus()),
            elements: g
                .elements()
                .iter()
                .map(|e| ElementDescriptor {
                    coords: e.rep.coords().iter().map(|x| x.to_string()).collect(),
                    count: e.count,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StringDescriptor {
    pub direction: Vec<i64>,
    pub base: Vec<i64>,
}

impl StringDescriptor {
    pub fn build(&self) -> Result<StringSpec> {
        StringSpec::new(Weight::new(self.direction.clone()), Weight::new(self.base.clone()))
    }

    pub fn from_string(s: &StringSpec) -> Self {
        StringDescriptor {
            direction: s.direction.coords().to_vec(),
            base: s.base.coords().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDescriptor {
    #[serde(default)]
    pub label: String,
    pub strings: Vec<StringDescriptor>,
}

impl FamilyDescriptor {
    pub fn build(&self) -> Result<StringFamily> {
        let strings = self.strings.iter().map(|s| s.build()).collect::<Result<Vec<_>>>()?;
        StringFamily::new(self.label.clone(), strings)
    }

    pub fn from_family(f: &StringFamily) -> Self {
        FamilyDescriptor {
            label: f.label.clone(),
            strings: f.strings.iter().map(StringDescriptor::from_string).collect(),
        }
    }
}

fn parse_int(s: &str) -> Result<BigInt> {
    BigInt::from_str(s.trim()).map_err(|_| Error::InvalidInput(format!("bad integer {s:?}")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GfDescriptor {
    pub q: u64,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub numerator: Vec<String>,
}

impl GfDescriptor {
    pub fn from_gf(gf: &RationalGF) -> Self {
        GfDescriptor {
            q: gf.q(),
            big_n: gf.big_n(),
            numerator: gf.numerator().iter().map(|b| b.to_string()).collect(),
        }
    }

    pub fn build(&self) -> Result<RationalGF> {
        let numerator = self.numerator.iter().map(|s| parse_int(s)).collect::<Result<Vec<_>>>()?;
        RationalGF::new(self.q, self.big_n, numerator)
    }
}

/// A sample value given either as a JSON number or as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntValue {
    Number(u64),
    Text(String),
}

impl IntValue {
    pub fn to_bigint(&self) -> Result<BigInt> {
        match self {
            IntValue::Number(n) => Ok(BigInt::from(*n)),
            IntValue::Text(s) => parse_int(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindowDescriptor {
    pub q: u64,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub samples: BTreeMap<String, IntValue>,
}

impl WindowDescriptor {
    pub fn build(&self) -> Result<SampleWindow> {
        let mut samples = BTreeMap::new();
        for (k, v) in &self.samples {
            let k: u64 = k
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad sample index {k:?}")))?;
            if samples.insert(k, v.to_bigint()?).is_some() {
                return Err(Error::InvalidInput(format!("duplicate sample index {k}")));
            }
        }
        SampleWindow::new(self.q, self.big_n, samples)
    }

    pub fn from_window(w: &SampleWindow) -> Self {
        WindowDescriptor {
            q: w.q,
            big_n: w.big_n,
            samples: w
                .samples
                .iter()
                .map(|(k, v)| (k.to_string(), IntValue::Text(v.to_string())))
                .collect(),
        }
    }
}

//! JSON form of formal characters.
//!
//! ```json
//! {"type": "A", "rank": 1, "level": "1", "base_weight": ["0"],
//!  "strings": [{"weight_offset": ["1"], "terms": [{"exp": "0", "coef": "1"}], "min_exp": "0"}]}
//! ```
//!
//! Affine characters use simple-root coordinates; superconformal ones
//! (`"side": "sc"`) use J*-values. Rationals are strings `"p/q"`; plain JSON
//! integers are accepted on input.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::character::{CharWeight, FormalCharacter, StringFunction};
use super::qseries::QSeries;
use crate::bilinear::{Level, ScWeight};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, Q};
use crate::rootsys::{RootSystem, Weight};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Rat {
    Str(String),
    Int(i64),
}

impl Rat {
    pub fn parse(&self) -> Result<Q> {
        match self {
            Rat::Str(s) => parse_q(s),
            Rat::Int(i) => Ok(Q::from_integer((*i).into())),
        }
    }

    pub fn of(x: &Q) -> Rat {
        Rat::Str(fmt_q(x))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SeedTerm {
    pub exp: Rat,
    pub coef: Rat,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SeedString {
    pub weight_offset: Vec<Rat>,
    pub terms: Vec<SeedTerm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_exp: Option<Rat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub validity_order: Option<Rat>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SeedDoc {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
    pub level: Rat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<String>,
    pub base_weight: Vec<Rat>,
    pub strings: Vec<SeedString>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub validity_order: Option<Rat>,
}

impl SeedDoc {
    pub fn from_json(text: &str) -> Result<SeedDoc> {
        serde_json::from_str(text).map_err(|e| Error::Seed(e.to_string()))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("seed documents serialize")
    }

    pub fn level(&self) -> Result<Arc<Level>> {
        let rs = RootSystem::build(&self.ty, self.rank)?;
        Ok(Arc::new(Level::new(&rs, self.level.parse()?)?))
    }
}

fn parse_vec(v: &[Rat], len: usize, what: &str) -> Result<Vec<Q>> {
    if v.len() != len {
        return Err(Error::Seed(format!("{what} has {} coordinates, expected {len}", v.len())));
    }
    v.iter().map(Rat::parse).collect()
}

/// Parses one string function: drops zero terms, merges repeated exponents,
/// and checks the declared minimum and validity order.
fn parse_string(s: &SeedString, label: &str) -> Result<StringFunction> {
    let floor = match &s.min_exp {
        Some(m) => m.parse()?,
        None => return Err(Error::MissingMinimum(label.to_string())),
    };
    let validity = s.validity_order.as_ref().map(Rat::parse).transpose()?;
    let mut terms = vec![];
    for t in &s.terms {
        let e = t.exp.parse()?;
        let c = t.coef.parse()?;
        if e < floor {
            return Err(Error::Seed(format!(
                "string function at weight {label} has a term q^{} below its declared minimum exponent {}",
                fmt_q(&e),
                fmt_q(&floor)
            )));
        }
        if let Some(v) = &validity {
            if e > *v {
                return Err(Error::Seed(format!(
                    "string function at weight {label} has a term q^{} above its validity order {}",
                    fmt_q(&e),
                    fmt_q(v)
                )));
            }
        }
        terms.push((e, c));
    }
    Ok(StringFunction::new(QSeries::from_terms(terms, validity), Some(floor)))
}

fn build<W: CharWeight>(
    doc: &SeedDoc,
    level: Arc<Level>,
    dim: usize,
    make: &dyn Fn(Vec<Q>) -> W,
    coset_name: &str,
) -> Result<FormalCharacter<W>> {
    let base_coords = parse_vec(&doc.base_weight, dim, "base_weight")?;
    let base = make(base_coords.clone());
    let mut ch = FormalCharacter::new(level, base.clone());
    let mut seen = BTreeMap::new();
    for s in &doc.strings {
        let off = parse_vec(&s.weight_offset, dim, "weight_offset")?;
        let w = make(base_coords.iter().zip(&off).map(|(a, b)| a + b).collect());
        if off.iter().any(|x| !x.is_integer()) {
            return Err(Error::Seed(format!(
                "weight {w} is not in the coset of the base weight {base}: offset must lie in {coset_name}"
            )));
        }
        if seen.insert(w.clone(), ()).is_some() {
            return Err(Error::Seed(format!("weight {w} is listed twice")));
        }
        let sf = parse_string(s, &w.to_string())?;
        if !(sf.series.is_zero() && sf.series.is_exact()) {
            ch.insert(w, sf);
        }
    }
    Ok(ch)
}

/// Validates an affine-side seed.
pub fn validate_seed(doc: &SeedDoc) -> Result<FormalCharacter<Weight>> {
    if let Some(side) = &doc.side {
        if side != "af" {
            return Err(Error::Seed(format!("expected an affine-side character, got side {side:?}")));
        }
    }
    let level = doc.level()?;
    let dim = level.rs().rank();
    build(doc, level, dim, &Weight, "the root lattice Q")
}

/// Validates a superconformal-side character (J*-value coordinates).
pub fn validate_sc_character(doc: &SeedDoc) -> Result<FormalCharacter<ScWeight>> {
    if doc.side.as_deref() != Some("sc") {
        return Err(Error::Seed("expected \"side\": \"sc\"".into()));
    }
    let level = doc.level()?;
    let dim = level.rs().num_positive();
    let lv = level.clone();
    build(doc, level, dim, &move |j| lv.sc_from_jstar(j), "the integral J*-lattice")
}

/// Serializes a character; the document-level validity order is the lowest one
/// among the listed weights.
pub fn emit_character<W: CharWeight>(ch: &FormalCharacter<W>) -> SeedDoc {
    let rs = ch.level.rs();
    let base = ch.base.coords();
    let strings = ch
        .strings
        .iter()
        .map(|(w, s)| SeedString {
            weight_offset: w.coords().iter().zip(&base).map(|(a, b)| Rat::of(&(a - b))).collect(),
            terms: s.series.terms().map(|(e, c)| SeedTerm { exp: Rat::of(e), coef: Rat::of(c) }).collect(),
            min_exp: s.floor.as_ref().map(Rat::of),
            validity_order: s.series.validity().map(Rat::of),
        })
        .collect();
    SeedDoc {
        ty: rs.cartan_type().series.to_string(),
        rank: rs.rank(),
        level: Rat::of(ch.level.k()),
        side: Some(ch.side().to_string()),
        base_weight: base.iter().map(Rat::of).collect(),
        strings,
        validity_order: ch.min_validity().as_ref().map(Rat::of),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charflow::transforms::fermionize_character;
    use crate::rational::q;

    fn doc(offsets: &[&str], min_exp: bool) -> String {
        let strings: Vec<String> = offsets
            .iter()
            .map(|o| {
                let m = if min_exp { r#", "min_exp": "0""# } else { "" };
                format!(r#"{{"weight_offset": ["{o}"], "terms": [{{"exp": "0", "coef": "1"}}]{m}}}"#)
            })
            .collect();
        format!(r#"{{"type": "A", "rank": 1, "level": "1", "base_weight": ["0"], "strings": [{}]}}"#, strings.join(","))
    }

    #[test]
    fn coset_checks() {
        assert!(validate_seed(&SeedDoc::from_json(&doc(&["0", "1"], true)).unwrap()).is_ok());
        let e = validate_seed(&SeedDoc::from_json(&doc(&["0", "1/2"], true)).unwrap()).unwrap_err();
        assert!(e.to_string().contains("coset"), "{e}");
        let e = validate_seed(&SeedDoc::from_json(&doc(&["0"], false)).unwrap()).unwrap_err();
        assert!(matches!(e, Error::MissingMinimum(_)));
    }

    #[test]
    fn sc_emit_parse_roundtrip() {
        let ch = validate_seed(&SeedDoc::from_json(&doc(&["0", "1", "-1"], true)).unwrap()).unwrap();
        let f = fermionize_character(&ch, &Weight::zero(1), &q(6)).unwrap();
        let json = serde_json::to_string(&emit_character(&f)).unwrap();
        let back = validate_sc_character(&SeedDoc::from_json(&json).unwrap()).unwrap();
        assert_eq!(back.strings, f.strings);
        assert_eq!(back.base, f.base);
    }
}

//! Canonical text and JSON forms.
//!
//! Text: terms in lexicographically descending exponent order, e.g.
//! `x1^2 + 2*x1 + y1^2 + 2*y1`, `x1 - 1`, `0`.
//!
//! JSON: `{"genus":g,"terms":[{"coeff":"-3","exps":[...]},...]}` in the same
//! term order. A `"vars"` list is added only when the variable list is not
//! the canonical one for the genus.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{canonical_var_order, PolyError, Polynomial, VarId};

pub(super) fn monomial(vars: &[VarId], exps: &[u32]) -> String {
    let mut out = String::new();
    for (v, &e) in vars.iter().zip(exps) {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        write!(out, "{v}").unwrap();
        if e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
    out
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exps: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    genus: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vars: Option<Vec<String>>,
    terms: Vec<TermJson>,
}

impl Polynomial {
    pub fn canonical_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (exps, c)) in self.terms().enumerate() {
            let negative = c.sign() == Sign::Minus;
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let magnitude = c.magnitude();
            let mono = monomial(&self.vars, exps);
            if mono.is_empty() {
                write!(out, "{magnitude}").unwrap();
            } else if magnitude.is_one() {
                out.push_str(&mono);
            } else {
                write!(out, "{magnitude}*{mono}").unwrap();
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = PolyJson {
            genus: self.genus,
            vars: (!self.has_canonical_vars())
                .then(|| self.vars.iter().map(|v| v.to_string()).collect()),
            terms: self
                .terms()
                .map(|(e, c)| TermJson {
                    coeff: c.to_string(),
                    exps: e.clone(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("polynomial serializes")
    }

    pub fn from_json(text: &str) -> Result<Polynomial, PolyError> {
        let doc: PolyJson =
            serde_json::from_str(text).map_err(|e| PolyError::Malformed(e.to_string()))?;
        let vars = match doc.vars {
            Some(names) => names
                .iter()
                .map(|n| n.parse::<VarId>())
                .collect::<Result<Vec<_>, _>>()?,
            None => canonical_var_order(doc.genus)?,
        };
        let mut terms = BTreeMap::new();
        for t in doc.terms {
            if t.exps.len() != vars.len() {
                return Err(PolyError::ExponentLength {
                    expected: vars.len(),
                    found: t.exps.len(),
                });
            }
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| PolyError::Malformed(format!("bad coefficient {:?}", t.coeff)))?;
            if c.is_zero() {
                return Err(PolyError::Malformed("zero coefficient".into()));
            }
            if terms.insert(t.exps, c).is_some() {
                return Err(PolyError::Malformed("repeated monomial".into()));
            }
        }
        Ok(Polynomial {
            genus: doc.genus,
            vars: vars.into(),
            terms,
        })
    }
}

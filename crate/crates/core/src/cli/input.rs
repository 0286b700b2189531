//! The JSON input document accepted by `locsig localize`.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "fibration": { "genus": 3, "base_genus": 0, "chi_o": 1, "euler_top": 19, "k_sq": -7 },
//!   "germs": [
//!     { "name": "F_0", "multiplicity": 27, "euler_top": -3, "ss_delta": [1, 0],
//!       "degrees": { "HYPERFLEX": "0" } }
//!   ],
//!   "reps": {
//!     "hyperflex": { "catalog": "HYPERFLEX" },
//!     "mine": { "a": "9", "b": ["1", "3"], "degree_key": "HYPERELLIPTIC_G3" }
//!   }
//! }
//! ```
//!
//! Rationals are strings `"p/q"` (bare integers are also accepted). A
//! representative without `degree_key` is treated as the zero divisor.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::catalog::{self, BiellipticRep, CatalogName};
use crate::error::Error;
use crate::fibration::Fibration;
use crate::germ::FiberGerm;
use crate::picard::DivisorRep;
use crate::rational::Rational;
use crate::scenarios::Scenario;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub schema_version: u32,
    pub fibration: FibrationSpec,
    #[serde(default)]
    pub germs: Vec<GermSpec>,
    #[serde(default)]
    pub reps: BTreeMap<String, RepSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FibrationSpec {
    pub genus: u32,
    pub base_genus: i64,
    pub chi_o: i64,
    pub euler_top: i64,
    pub k_sq: i64,
}

fn one() -> u64 {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GermSpec {
    pub name: String,
    #[serde(default = "one")]
    pub multiplicity: u64,
    #[serde(default = "one")]
    pub pseudo_period: u64,
    #[serde(default)]
    pub chi: Rational,
    /// Defaults to `2 - 2g` (a smooth fiber).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler_top: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c1_sq: Option<Rational>,
    /// Defaults to all zeros.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ss_delta: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ss_euler_top: Option<i64>,
    #[serde(default)]
    pub degrees: BTreeMap<String, Rational>,
}

/// Either `{"catalog": NAME, "form": ...}` or `{"a": ..., "b": [...], "degree_key": ...}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum RepSpec {
    Catalog {
        catalog: String,
        /// `rep0` or `rep1`, for the bielliptic entry only.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        form: Option<String>,
    },
    Explicit {
        a: Rational,
        b: Vec<Rational>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree_key: Option<String>,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogRepSpec {
    catalog: String,
    #[serde(default)]
    form: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExplicitRepSpec {
    a: Rational,
    b: Vec<Rational>,
    #[serde(default)]
    degree_key: Option<String>,
}

// Dispatches on the `catalog` key so that field errors (such as a bad
// rational) are reported as such rather than as a generic variant mismatch.
impl<'de> Deserialize<'de> for RepSpec {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let value = serde_json::Value::deserialize(deserializer)?;
        if value.get("catalog").is_some() {
            let c: CatalogRepSpec = serde_json::from_value(value).map_err(D::Error::custom)?;
            Ok(RepSpec::Catalog {
                catalog: c.catalog,
                form: c.form,
            })
        } else {
            let e: ExplicitRepSpec = serde_json::from_value(value).map_err(D::Error::custom)?;
            Ok(RepSpec::Explicit {
                a: e.a,
                b: e.b,
                degree_key: e.degree_key,
            })
        }
    }
}

/// A document with every reference resolved.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub fibration: Fibration,
    pub reps: BTreeMap<String, DivisorRep>,
}

impl Resolved {
    /// A representative named in the document, or else a catalog entry name
    /// resolved in the fibration's genus.
    pub fn rep(&self, name: &str) -> Result<DivisorRep, Error> {
        if let Some(rep) = self.reps.get(name) {
            return Ok(rep.clone());
        }
        match name.parse::<CatalogName>() {
            Ok(cat) => Ok(catalog::entry(cat, self.fibration.genus())?.default_rep),
            Err(_) => {
                let known: Vec<&str> = self.reps.keys().map(String::as_str).collect();
                Err(Error::Input(format!(
                    "unknown representative {name:?}; document defines {known:?}, or use a catalog name"
                )))
            }
        }
    }
}

pub fn resolve_rep(spec: &RepSpec, genus: u32) -> Result<DivisorRep, Error> {
    match spec {
        RepSpec::Catalog { catalog: name, form } => {
            let cat: CatalogName = name.parse()?;
            match (cat, form.as_deref()) {
                (_, None) => Ok(catalog::entry(cat, genus)?.default_rep),
                (CatalogName::BiellipticG2, Some(form)) => {
                    if genus != 2 {
                        return Err(Error::UnsupportedGenus {
                            entry: cat.to_string(),
                            genus,
                        });
                    }
                    match form {
                        "rep0" => Ok(catalog::bielliptic_g2_rep(BiellipticRep::Rep0)),
                        "rep1" => Ok(catalog::bielliptic_g2_rep(BiellipticRep::Rep1)),
                        other => Err(Error::Input(format!(
                            "unknown bielliptic form {other:?} (expected rep0 or rep1)"
                        ))),
                    }
                }
                (_, Some(form)) => Err(Error::Input(format!(
                    "{cat} has no alternative form {form:?}"
                ))),
            }
        }
        RepSpec::Explicit { a, b, degree_key } => {
            DivisorRep::new(genus, a.clone(), b.clone(), degree_key.clone())
        }
    }
}

impl GermSpec {
    pub fn to_germ(&self, genus: u32) -> Result<FiberGerm, Error> {
        let mut b = FiberGerm::builder(genus)
            .pseudo_period(self.pseudo_period)
            .chi(self.chi.clone());
        if let Some(e) = self.euler_top {
            b = b.euler_top(e);
        }
        if let Some(c1) = &self.c1_sq {
            b = b.c1_sq(c1.clone());
        }
        if let Some(d) = &self.ss_delta {
            b = b.ss_delta(d.clone());
        }
        if let Some(e) = self.ss_euler_top {
            b = b.ss_euler_top(e);
        }
        for (k, v) in &self.degrees {
            b = b.degree(k.clone(), v.clone());
        }
        b.build()
    }

    pub fn from_germ(name: &str, germ: &FiberGerm, multiplicity: u64) -> Self {
        GermSpec {
            name: name.to_string(),
            multiplicity,
            pseudo_period: germ.pseudo_period(),
            chi: germ.chi().clone(),
            euler_top: Some(germ.euler_top()),
            c1_sq: germ.c1_sq().cloned(),
            ss_delta: Some(germ.ss_delta().to_vec()),
            ss_euler_top: germ.ss_euler_top_override(),
            degrees: germ.degrees().clone(),
        }
    }
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let doc: InputDocument =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("invalid document: {e}")))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::Input(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                doc.schema_version
            )));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn resolve(&self) -> Result<Resolved, Error> {
        let f = &self.fibration;
        let mut fibration = Fibration::new(f.genus, f.base_genus, f.chi_o, f.euler_top, f.k_sq)?;
        let mut seen = std::collections::BTreeSet::new();
        for g in &self.germs {
            if !seen.insert(g.name.as_str()) {
                return Err(Error::Input(format!("duplicate germ name {:?}", g.name)));
            }
            let germ = g
                .to_germ(f.genus)
                .map_err(|e| Error::Input(format!("germ {:?}: {e}", g.name)))?;
            fibration.push_germ(g.name.clone(), germ, g.multiplicity)?;
        }
        let reps = self
            .reps
            .iter()
            .map(|(name, spec)| {
                resolve_rep(spec, f.genus)
                    .map(|r| (name.clone(), r))
                    .map_err(|e| Error::Input(format!("rep {name:?}: {e}")))
            })
            .collect::<Result<_, _>>()?;
        Ok(Resolved { fibration, reps })
    }

    /// The document describing a built-in scenario's fibration and reps.
    pub fn from_scenario(s: &Scenario) -> Self {
        let fib = &s.fibration;
        InputDocument {
            schema_version: SCHEMA_VERSION,
            fibration: FibrationSpec {
                genus: fib.genus(),
                base_genus: fib.base_genus(),
                chi_o: fib.chi_o(),
                euler_top: fib.euler_top(),
                k_sq: fib.k_sq(),
            },
            germs: fib
                .germs()
                .iter()
                .map(|e| GermSpec::from_germ(&e.name, &e.germ, e.multiplicity))
                .collect(),
            reps: s
                .reps
                .iter()
                .map(|(name, r)| {
                    (
                        name.clone(),
                        RepSpec::Explicit {
                            a: r.a().clone(),
                            b: r.b().to_vec(),
                            degree_key: r.degree_key().map(str::to_string),
                        },
                    )
                })
                .collect(),
        }
    }
}

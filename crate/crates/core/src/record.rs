//! Stable machine-readable records of a classification.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::classifier::{classify, ClassificationReport, SymmetryProfile};
use crate::covers::{cover_class, cover_flag_count, cover_lattice, lattice_toroid_class};
use crate::error::{Error, Result};
use crate::geometry::{analyze_twist, petrie_handedness, petrie_m};
use crate::groups::{build_group, ManifoldKind};
use crate::oracle::verify_with_bound;
use crate::params::TwistoidParams;

pub const CSV_HEADER: [&str; 12] = [
    "manifold",
    "params",
    "family",
    "rigid",
    "deformable",
    "flags",
    "flagOrbits",
    "identityComponentOrder",
    "coverClass",
    "coverIndex",
    "oracleOrbits",
    "oraclePass",
];

/// A JSON object with sorted keys and integer-only numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutputRecord {
    value: Value,
}

fn rigid_and_deformable(report: &ClassificationReport) -> (Vec<&'static str>, &'static str) {
    match report.profile {
        SymmetryProfile::DicosmAxial { rigid, class, .. } => {
            let mut r = vec!["rho"];
            r.extend(rigid.names());
            (r, class.id())
        }
        SymmetryProfile::DicosmDiagonal { beta, chi } => {
            let mut r = vec!["rho", "alpha"];
            if beta {
                r.extend(["beta", "alphabeta"]);
            }
            (r, if chi { "chi" } else { "none" })
        }
        SymmetryProfile::Tricosm { chi, zeta } => (
            vec!["alpha"],
            if chi {
                "chi"
            } else if zeta {
                "zeta"
            } else {
                "none"
            },
        ),
        SymmetryProfile::Tetracosm { alpha, chi } => (
            if alpha { vec!["alpha"] } else { vec![] },
            if chi { "chi" } else { "none" },
        ),
    }
}

impl OutputRecord {
    /// Classifies `params` and optionally attaches the cover and an oracle run.
    pub fn build(
        params: &TwistoidParams,
        with_cover: bool,
        oracle_bound: Option<usize>,
    ) -> Result<Self> {
        let report = classify(params)?;
        let p = report.params;
        let encoded: Map<String, Value> =
            p.encoded().into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        let display: Map<String, Value> =
            p.display().into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        let (rigid, deformable) = rigid_and_deformable(&report);
        let mut obj = Map::new();
        obj.insert("manifold".into(), json!(p.kind().name()));
        obj.insert("params".into(), json!({"encoded": encoded, "display": display}));
        obj.insert("family".into(), json!(report.family.id()));
        obj.insert("rigid".into(), json!(rigid));
        obj.insert("deformable".into(), json!(deformable));
        obj.insert("flags".into(), json!(report.flag_count));
        obj.insert("flagOrbits".into(), json!(report.flag_orbit_count));
        obj.insert(
            "identityComponentOrder".into(),
            json!(report.identity_component_order),
        );
        if p.kind() == ManifoldKind::Tricosm {
            let g = build_group(&p)?;
            let t = analyze_twist(g.base_twist())?;
            obj.insert(
                "petrie".into(),
                json!({"m": petrie_m(&t)?, "handedness": petrie_handedness(&t)?.to_string()}),
            );
        }
        if with_cover {
            let lat = cover_lattice(&p)?;
            let derived = match lattice_toroid_class(&lat) {
                Ok(c) => c.label().to_string(),
                Err(orbits) => format!("unlabeled({orbits} orbits)"),
            };
            obj.insert(
                "cover".into(),
                json!({
                    "t1": lat.t1,
                    "t2": lat.t2,
                    "t3": lat.t3,
                    "index": lat.index,
                    "class": cover_class(&p)?.label(),
                    "latticeClass": derived,
                    "flags": cover_flag_count(&lat),
                }),
            );
        }
        if let Some(bound) = oracle_bound {
            let v = verify_with_bound(&p, bound)?;
            obj.insert(
                "oracle".into(),
                json!({"flags": v.oracle_flags, "orbits": v.oracle_orbits, "pass": v.pass}),
            );
        }
        Ok(OutputRecord {
            value: Value::Object(obj),
        })
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    /// Single-line JSON with sorted keys.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.value).expect("records serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let value: Value =
            serde_json::from_str(s).map_err(|e| Error::invalid(format!("bad record: {e}")))?;
        if !value.is_object() {
            return Err(Error::invalid("record is not a JSON object"));
        }
        Ok(OutputRecord { value })
    }

    pub fn has(&self, key: &str) -> bool {
        self.value.get(key).is_some()
    }

    /// The parameters the record was built from.
    pub fn params(&self) -> Result<TwistoidParams> {
        let kind: ManifoldKind = self
            .value
            .get("manifold")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::invalid("record has no manifold"))?
            .parse()
            .map_err(Error::InvalidParameters)?;
        let encoded = self
            .value
            .pointer("/params/encoded")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::invalid("record has no encoded parameters"))?;
        let values: BTreeMap<String, i64> = encoded
            .iter()
            .map(|(k, v)| {
                v.as_i64()
                    .map(|n| (k.clone(), n))
                    .ok_or_else(|| Error::invalid(format!("parameter {k} is not an integer")))
            })
            .collect::<Result<_>>()?;
        TwistoidParams::from_encoded(kind, &values)
    }

    fn field(&self, pointer: &str) -> String {
        match self.value.pointer(pointer) {
            None | Some(Value::Null) => String::new(),
            Some(Value::String(s)) => s.clone(),
            Some(v) => v.to_string(),
        }
    }

    pub fn csv_row(&self) -> Vec<String> {
        let params = self
            .value
            .pointer("/params/encoded")
            .and_then(Value::as_object)
            .map(|m| {
                m.iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .unwrap_or_default();
        let rigid = self
            .value
            .get("rigid")
            .and_then(Value::as_array)
            .map(|a| {
                a.iter()
                    .filter_map(Value::as_str)
                    .collect::<Vec<_>>()
                    .join("+")
            })
            .unwrap_or_default();
        vec![
            self.field("/manifold"),
            params,
            self.field("/family"),
            rigid,
            self.field("/deformable"),
            self.field("/flags"),
            self.field("/flagOrbits"),
            self.field("/identityComponentOrder"),
            self.field("/cover/class"),
            self.field("/cover/index"),
            self.field("/oracle/orbits"),
            self.field("/oracle/pass"),
        ]
    }

    /// Human-readable `key: value` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut walk = vec![(String::new(), &self.value)];
        while let Some((prefix, v)) = walk.pop() {
            match v {
                Value::Object(m) => {
                    for (k, child) in m.iter().rev() {
                        let key = if prefix.is_empty() {
                            k.clone()
                        } else {
                            format!("{prefix}.{k}")
                        };
                        walk.push((key, child));
                    }
                }
                Value::String(s) => out.push_str(&format!("{prefix}: {s}\n")),
                other => out.push_str(&format!("{prefix}: {other}\n")),
            }
        }
        out
    }
}

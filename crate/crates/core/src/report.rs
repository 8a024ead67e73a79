//! Deterministic run reports: `key: value` text or JSON.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::interval::IntervalSet;
use crate::properties::{FissileRegion, FissileSet, PropertyReport, Side};
use crate::rational::{to_pq, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct RunReport {
    pub command: String,
    /// Input path and SHA-256 of its bytes.
    pub input: Option<(String, String)>,
    pub fields: Vec<(String, Value)>,
    /// Wall-clock milliseconds, present only when timing is requested.
    pub timing_ms: Option<u128>,
}

pub fn content_hash(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn pq(r: &Rational) -> Value {
    Value::String(to_pq(r))
}

pub fn interval_set(s: &IntervalSet) -> Value {
    serde_json::to_value(s).expect("interval sets serialize")
}

fn fissile(f: &FissileSet) -> Value {
    Value::Array(
        f.regions
            .iter()
            .map(|r| match r {
                FissileRegion::Point(x) => json!({ "point": to_pq(x) }),
                FissileRegion::Open(a, b) => json!({ "open": [to_pq(a), to_pq(b)] }),
            })
            .collect(),
    )
}

fn opt<T>(v: &Option<T>, f: impl Fn(&T) -> Value) -> Value {
    v.as_ref().map_or(Value::Null, f)
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport { command: command.to_string(), input: None, fields: Vec::new(), timing_ms: None }
    }

    pub fn with_input(mut self, path: &str, bytes: &[u8]) -> Self {
        self.input = Some((path.to_string(), content_hash(bytes)));
        self
    }

    pub fn push(&mut self, key: &str, value: Value) {
        self.fields.push((key.to_string(), value));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn add_properties(&mut self, p: &PropertyReport) {
        for (k, v) in [
            ("domain_full", p.domain_full),
            ("surjective", p.surjective),
            ("graph_connected", p.graph_connected),
            ("interior_empty", p.interior_empty),
            ("slices_connected", p.slices_connected),
            ("weakly_continuous", p.weakly_continuous),
            ("ivp", p.ivp),
            ("weak_ivp", p.weak_ivp),
            ("light", p.light),
            ("almost_nonfissile", p.almost_nonfissile),
        ] {
            self.push(k, Value::Bool(v));
        }
        self.push("fissile_set", fissile(&p.fissile_set));
        let w = &p.witnesses;
        self.push("witness.domain_gap", opt(&w.domain_gap, pq));
        self.push("witness.graph_components", json!(w.graph_components));
        self.push("witness.disconnected_slice", opt(&w.disconnected_slice, pq));
        self.push(
            "witness.discontinuity",
            opt(&w.discontinuity, |d| {
                let side = if d.side == Side::Left { "left" } else { "right" };
                json!({ "x": to_pq(&d.x), "y": to_pq(&d.y), "side": side })
            }),
        );
        self.push("witness.strip", opt(&w.strip_failure, |(a, b)| json!([to_pq(a), to_pq(b)])));
        self.push(
            "witness.weak_ivp",
            opt(&w.weak_ivp_failure, |f| json!({ "x1": to_pq(&f.x1), "y1": to_pq(&f.y1), "x2": to_pq(&f.x2) })),
        );
        self.push("witness.non_light_level", opt(&w.non_light_level, pq));
        self.push(
            "witness.fissile_graph_point",
            opt(&w.fissile_graph_point, |pt| json!([to_pq(&pt.x), to_pq(&pt.y)])),
        );
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), Value::String(self.command.clone()));
        if let Some((path, hash)) = &self.input {
            m.insert("input".into(), json!({ "path": path, "sha256": hash }));
        }
        let mut fields = Map::new();
        for (k, v) in &self.fields {
            fields.insert(k.clone(), v.clone());
        }
        m.insert("results".into(), Value::Object(fields));
        if let Some(t) = self.timing_ms {
            m.insert("timing_ms".into(), json!(t));
        }
        Value::Object(m)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        if let Some((path, hash)) = &self.input {
            out.push_str(&format!("input: {path}\nsha256: {hash}\n"));
        }
        for (k, v) in &self.fields {
            out.push_str(&format!("{k}: {}\n", render(v)));
        }
        if let Some(t) = self.timing_ms {
            out.push_str(&format!("timing_ms: {t}\n"));
        }
        out
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::Null => "none".to_string(),
        Value::String(s) => s.clone(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::corpus;
    use crate::properties::classify;

    #[test]
    fn text_lines_are_stable() {
        let mut r = RunReport::new("check").with_input("tent.plrel", b"abc");
        r.add_properties(&classify(&corpus("ex2_11").unwrap()));
        let text = r.to_text();
        assert!(text.contains("ivp: false\n"));
        assert!(text.contains("weak_ivp: false\n"));
        assert!(text.contains(r#"witness.weak_ivp: {"x1":"1/2","x2":"1/4","y1":"0/1"}"#));
        assert!(text.contains("sha256: ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad\n"));
        assert_eq!(text, r.to_text());
    }

    #[test]
    fn json_has_exact_rationals() {
        let mut r = RunReport::new("check");
        r.add_properties(&classify(&corpus("ex2_15").unwrap()));
        let j = r.to_json();
        assert_eq!(j["results"]["almost_nonfissile"], Value::Bool(false));
        assert_eq!(j["results"]["fissile_set"], json!([{ "point": "1/1" }]));
    }
}

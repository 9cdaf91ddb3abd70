use std::collections::BTreeMap;

use serde::{Serialize, Serializer};
use serde_json::Value;

use super::fd::Grid;

/// `x` with 17 significant digits in scientific notation.
pub fn sig17(x: f64) -> String {
    // drop the sign of -0
    let x = x + 0.0;
    let s = format!("{x:.16e}");
    match s.split_once('e') {
        Some((m, e)) if !e.starts_with('-') => format!("{m}e+{e}"),
        _ => s,
    }
}

/// `x` as a JSON number carrying 17 significant digits; non-finite values map to `null`.
pub fn json_number(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    sig17(x)
        .parse::<serde_json::Number>()
        .map_or(Value::Null, Value::Number)
}

pub(crate) fn ser_f64<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    json_number(*x).serialize(s)
}

fn ser_params<S: Serializer>(p: &BTreeMap<String, f64>, s: S) -> Result<S::Ok, S::Error> {
    p.iter()
        .map(|(k, v)| (k.clone(), json_number(*v)))
        .collect::<serde_json::Map<_, _>>()
        .serialize(s)
}

fn ser_grid<S: Serializer>(g: &Option<Grid>, s: S) -> Result<S::Ok, S::Error> {
    match g {
        None => s.serialize_none(),
        Some(g) => serde_json::json!({
            "left": json_number(g.left),
            "right": json_number(g.right),
            "count": g.count,
        })
        .serialize(s),
    }
}

/// One oracle comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub system: String,
    #[serde(serialize_with = "ser_params")]
    pub params: BTreeMap<String, f64>,
    #[serde(serialize_with = "ser_grid")]
    pub grid: Option<Grid>,
    pub check: String,
    #[serde(serialize_with = "ser_f64")]
    pub closed_form: f64,
    #[serde(serialize_with = "ser_f64")]
    pub oracle_value: f64,
    #[serde(serialize_with = "ser_f64")]
    pub abs_err: f64,
    #[serde(serialize_with = "ser_f64")]
    pub rel_err: f64,
    #[serde(serialize_with = "ser_f64")]
    pub tolerance: f64,
    pub pass: bool,
}

impl VerificationRecord {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("record serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(sig17(0.1), "1.0000000000000001e-1");
        assert_eq!(sig17(2.25), "2.2500000000000000e+0");
        assert_eq!(sig17(f64::INFINITY), "inf");
        assert_eq!(sig17(-0.0), "0.0000000000000000e+0");
        assert_eq!(json_number(f64::NAN), Value::Null);
        assert_eq!(json_number(-3.0).to_string(), "-3.0000000000000000e+0");
    }

    #[test]
    fn record_round_trip() {
        let r = VerificationRecord {
            system: "box".into(),
            params: BTreeMap::from([("a".to_string(), 1.0)]),
            grid: Some(Grid::new(0.0, 1.0, 16).unwrap()),
            check: "fd_eigenvalue n=0".into(),
            closed_form: 1.0,
            oracle_value: 1.0 + 1e-7,
            abs_err: 0.5,
            rel_err: 1e-7,
            tolerance: 1e-3,
            pass: true,
        };
        let text = serde_json::to_string(&r).unwrap();
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back["grid"]["count"], 16);
        assert_eq!(back["pass"], true);
        assert_eq!(back["params"]["a"].as_f64(), Some(1.0));
        assert!(text.contains("\"abs_err\":5.0000000000000000e-1"));
    }
}

//! JSON input formats for states, spin triples and setting pairs.
//!
//! Parsing goes through [`serde_json::Value`] so every error can name the
//! offending field by its path.

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::frames::{NamedSetting, SettingPair, SpinTriple};
use crate::linalg3::Mat3;
use crate::qmat::{c, Complex, Mat4};
use crate::scalar::Real;
use crate::states::{noisy_singlet, pauli_compose, validate, werner, DensityMatrix, PauliForm, PureState};
use crate::tolerance::Tolerances;

/// Parses JSON text, reporting syntax errors with line and column.
pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| {
        Error::schema("<document>", e.to_string())
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Werner,
    NoisySinglet,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Werner => "werner",
            Family::NoisySinglet => "noisy_singlet",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "werner" => Some(Family::Werner),
            "noisy_singlet" => Some(Family::NoisySinglet),
            _ => None,
        }
    }

    pub fn state<T: Real>(self, p: T) -> Result<DensityMatrix<T>> {
        match self {
            Family::Werner => werner(p),
            Family::NoisySinglet => noisy_singlet(p),
        }
    }
}

/// A state description, exactly one of the four accepted forms.
#[derive(Clone, Debug, PartialEq)]
pub enum StateSpec {
    Matrix([[(f64, f64); 4]; 4]),
    Pauli { r: [f64; 3], s: [f64; 3], t: [[f64; 3]; 3] },
    Pure([(f64, f64); 4]),
    Family { family: Family, p: f64 },
}

const STATE_KEYS: [&str; 4] = ["matrix", "pauli", "pure", "family"];

impl StateSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_value(&parse_json(text)?)
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let obj = object(v, "<root>")?;
        let present: Vec<&str> = STATE_KEYS.iter().copied().filter(|k| obj.contains_key(*k)).collect();
        let key = match present.as_slice() {
            [k] => *k,
            [] => return Err(Error::schema("<root>", "expected one of matrix, pauli, pure, family")),
            [_, second, ..] => return Err(Error::schema(*second, "only one state form may be given")),
        };
        let allowed: &[&str] = if key == "family" { &["family", "p"] } else { &[key] };
        reject_unknown(obj, allowed, "")?;
        match key {
            "matrix" => {
                let rows = array(&obj["matrix"], "matrix", 4)?;
                let mut m = [[(0.0, 0.0); 4]; 4];
                for (i, row) in rows.iter().enumerate() {
                    let path = format!("matrix[{i}]");
                    for (j, z) in array(row, &path, 4)?.iter().enumerate() {
                        m[i][j] = complex(z, &format!("{path}[{j}]"))?;
                    }
                }
                Ok(StateSpec::Matrix(m))
            }
            "pauli" => {
                let p = object(&obj["pauli"], "pauli")?;
                reject_unknown(p, &["r", "s", "T"], "pauli.")?;
                let field = |k: &str| p.get(k).ok_or_else(|| Error::schema(format!("pauli.{k}"), "missing"));
                let r = vec3(field("r")?, "pauli.r")?;
                let s = vec3(field("s")?, "pauli.s")?;
                let t = mat3(field("T")?, "pauli.T")?;
                Ok(StateSpec::Pauli { r, s, t })
            }
            "pure" => {
                let amps = array(&obj["pure"], "pure", 4)?;
                let mut a = [(0.0, 0.0); 4];
                for (k, z) in amps.iter().enumerate() {
                    a[k] = complex(z, &format!("pure[{k}]"))?;
                }
                Ok(StateSpec::Pure(a))
            }
            _ => {
                let name = obj["family"]
                    .as_str()
                    .ok_or_else(|| Error::schema("family", "expected a string"))?;
                let family = Family::from_name(name)
                    .ok_or_else(|| Error::schema("family", format!("unknown family `{name}`; expected werner or noisy_singlet")))?;
                let p = number(obj.get("p").ok_or_else(|| Error::schema("p", "missing"))?, "p")?;
                Ok(StateSpec::Family { family, p })
            }
        }
    }

    pub fn density<T: Real>(&self, tol: &Tolerances<T>) -> Result<DensityMatrix<T>> {
        match self {
            StateSpec::Matrix(m) => {
                validate(Mat4::from_rows(m.map(|row| row.map(cx))), tol)
            }
            StateSpec::Pauli { r, s, t } => {
                let form = PauliForm {
                    r: r.map(T::lit),
                    s: s.map(T::lit),
                    t: t.map(|row| row.map(T::lit)),
                };
                pauli_compose(&form, tol)
            }
            StateSpec::Pure(_) => Ok(self.pure(tol)?.density()),
            StateSpec::Family { family, p } => family.state(T::lit(*p)),
        }
    }

    /// The pure state, for the `pure` form only.
    pub fn pure<T: Real>(&self, tol: &Tolerances<T>) -> Result<PureState<T>> {
        match self {
            StateSpec::Pure(a) => PureState::new(a.map(cx), tol),
            _ => Err(Error::schema("pure", "a pure-state description is required")),
        }
    }
}

/// A spin triple: explicit axes or one side of a named pair.
#[derive(Clone, Debug, PartialEq)]
pub enum TripleSpec {
    Axes([[f64; 3]; 3]),
    Named { setting: NamedSetting, side_b: bool },
}

impl TripleSpec {
    pub fn from_value(v: &Value, path: &str) -> Result<Self> {
        let obj = object(v, path)?;
        let sub = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
        if let Some(axes) = obj.get("axes") {
            reject_unknown(obj, &["axes"], &prefix(path))?;
            return Ok(TripleSpec::Axes(mat3(axes, &sub("axes"))?));
        }
        let named = obj
            .get("named")
            .ok_or_else(|| Error::schema(if path.is_empty() { "<root>" } else { path }, "expected `axes` or `named`"))?;
        reject_unknown(obj, &["named", "side"], &prefix(path))?;
        let setting = named_setting(named, &sub("named"))?;
        let side_b = match obj.get("side").map(|s| s.as_str()) {
            None | Some(Some("A")) => false,
            Some(Some("B")) => true,
            _ => return Err(Error::schema(sub("side"), "expected \"A\" or \"B\"")),
        };
        Ok(TripleSpec::Named { setting, side_b })
    }

    pub fn triple<T: Real>(&self, tol: &Tolerances<T>) -> Result<SpinTriple<T>> {
        match self {
            TripleSpec::Axes(a) => SpinTriple::from_matrix(a.map(|row| row.map(T::lit)), tol.orthonormal),
            TripleSpec::Named { setting, side_b } => {
                let pair = setting.pair();
                Ok(if *side_b { pair.b } else { pair.a })
            }
        }
    }
}

/// A setting pair: `{"named": ...}` or `{"a": triple, "b": triple}`.
#[derive(Clone, Debug, PartialEq)]
pub enum PairSpec {
    Named(NamedSetting),
    Triples(TripleSpec, TripleSpec),
}

impl PairSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_value(&parse_json(text)?)
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let obj = object(v, "<root>")?;
        if let Some(named) = obj.get("named") {
            reject_unknown(obj, &["named"], "")?;
            return Ok(PairSpec::Named(named_setting(named, "named")?));
        }
        reject_unknown(obj, &["a", "b"], "")?;
        let a = obj.get("a").ok_or_else(|| Error::schema("a", "missing"))?;
        let b = obj.get("b").ok_or_else(|| Error::schema("b", "missing"))?;
        Ok(PairSpec::Triples(TripleSpec::from_value(a, "a")?, TripleSpec::from_value(b, "b")?))
    }

    pub fn pair<T: Real>(&self, tol: &Tolerances<T>) -> Result<SettingPair<T>> {
        match self {
            PairSpec::Named(s) => Ok(s.pair()),
            PairSpec::Triples(a, b) => Ok(SettingPair::new(a.triple(tol)?, b.triple(tol)?)),
        }
    }
}

fn cx<T: Real>((re, im): (f64, f64)) -> Complex<T> {
    c(T::lit(re), T::lit(im))
}

fn prefix(path: &str) -> String {
    if path.is_empty() {
        String::new()
    } else {
        format!("{path}.")
    }
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::schema(path, "expected an object"))
}

fn reject_unknown(obj: &Map<String, Value>, allowed: &[&str], prefix: &str) -> Result<()> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::schema(format!("{prefix}{k}"), "unexpected field")),
        None => Ok(()),
    }
}

fn array<'a>(v: &'a Value, path: &str, len: usize) -> Result<&'a Vec<Value>> {
    let a = v.as_array().ok_or_else(|| Error::schema(path, "expected an array"))?;
    if a.len() != len {
        return Err(Error::schema(path, format!("expected {len} entries, found {}", a.len())));
    }
    Ok(a)
}

fn number(v: &Value, path: &str) -> Result<f64> {
    v.as_f64()
        .filter(|x| x.is_finite())
        .ok_or_else(|| Error::schema(path, "expected a finite number"))
}

fn complex(v: &Value, path: &str) -> Result<(f64, f64)> {
    if v.is_number() {
        return Ok((number(v, path)?, 0.0));
    }
    let obj = object(v, path)?;
    reject_unknown(obj, &["re", "im"], &format!("{path}."))?;
    let re = number(obj.get("re").ok_or_else(|| Error::schema(format!("{path}.re"), "missing"))?, &format!("{path}.re"))?;
    let im = match obj.get("im") {
        Some(x) => number(x, &format!("{path}.im"))?,
        None => 0.0,
    };
    Ok((re, im))
}

fn vec3(v: &Value, path: &str) -> Result<[f64; 3]> {
    let a = array(v, path, 3)?;
    let mut out = [0.0; 3];
    for (k, x) in a.iter().enumerate() {
        out[k] = number(x, &format!("{path}[{k}]"))?;
    }
    Ok(out)
}

fn mat3(v: &Value, path: &str) -> Result<Mat3<f64>> {
    let rows = array(v, path, 3)?;
    let mut out = [[0.0; 3]; 3];
    for (i, row) in rows.iter().enumerate() {
        out[i] = vec3(row, &format!("{path}[{i}]"))?;
    }
    Ok(out)
}

fn named_setting(v: &Value, path: &str) -> Result<NamedSetting> {
    let name = v.as_str().ok_or_else(|| Error::schema(path, "expected a string"))?;
    NamedSetting::from_name(name).ok_or_else(|| Error::schema(path, format!("unknown setting `{name}`")))
}

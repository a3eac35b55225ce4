//! JSON value builders and small text formatters shared by the subcommands.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Number, Value};

use kummer_core::{DivisorKind, IdealPrimeDivisor, Line, Point};

/// Exact integer as a JSON number (arbitrary precision, no f64 round trip).
pub fn json_int(n: &BigInt) -> Value {
    Value::Number(Number::from_string_unchecked(n.to_string()))
}

pub fn json_u64(n: u64) -> Value {
    Value::Number(Number::from(n))
}

/// Exact rational as a JSON string "p/q" (or "p" for integers).
pub fn json_rat(r: &BigRational) -> Value {
    Value::String(r.to_string())
}

pub fn json_point(p: &Point) -> Value {
    Value::Array(vec![json_rat(&p.x), json_rat(&p.y)])
}

pub fn json_line(line: &Line) -> Value {
    let mut m = Map::new();
    m.insert("a".into(), json_int(line.a()));
    m.insert("b".into(), json_int(line.b()));
    m.insert("c".into(), json_int(line.c()));
    Value::Object(m)
}

/// Divisor identity object: ξ for f = 1, shifted u-tuple otherwise.
pub fn json_divisor(p: &IdealPrimeDivisor) -> Value {
    let mut m = Map::new();
    m.insert("q".into(), json_u64(p.q()));
    m.insert("f".into(), json_u64(p.f() as u64));
    match p.kind() {
        DivisorKind::Lambda => {
            m.insert("kind".into(), json!("lambda"));
        }
        DivisorKind::General { .. } => {
            m.insert("e".into(), json_u64(p.e() as u64));
            m.insert("shift".into(), json_u64(p.shift() as u64));
            if let Some(xi) = p.xi() {
                m.insert("xi".into(), json_u64(xi));
            }
            if let Some(u) = p.u_rotated() {
                m.insert(
                    "u".into(),
                    Value::Array(u.into_iter().map(json_u64).collect()),
                );
            }
        }
    }
    Value::Object(m)
}

/// One factorization entry, matching the documented schema: f = 1 divisors
/// are labeled by ξ, larger residue degrees by shift + u-tuple, the
/// ramified divisor by kind = "lambda".
pub fn json_factor_entry(p: &IdealPrimeDivisor, multiplicity: u64) -> Value {
    let mut m = Map::new();
    m.insert("q".into(), json_u64(p.q()));
    m.insert("f".into(), json_u64(p.f() as u64));
    match p.kind() {
        DivisorKind::Lambda => {
            m.insert("kind".into(), json!("lambda"));
        }
        DivisorKind::General { .. } => {
            if let Some(xi) = p.xi() {
                m.insert("xi".into(), json_u64(xi));
            } else {
                m.insert("shift".into(), json_u64(p.shift() as u64));
                if let Some(u) = p.u_rotated() {
                    m.insert(
                        "u".into(),
                        Value::Array(u.into_iter().map(json_u64).collect()),
                    );
                }
            }
        }
    }
    m.insert("multiplicity".into(), json_u64(multiplicity));
    Value::Object(m)
}

/// Ascending integer coefficients as a polynomial in x, e.g. `x^2 + x - 1`.
pub fn poly_string(coeffs: &[BigInt]) -> String {
    use num_traits::{Signed, Zero};
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let show_mag = !(mag == BigInt::from(1) && k > 0);
        if show_mag {
            out.push_str(&mag.to_string());
        }
        if k >= 1 {
            out.push('x');
            if k > 1 {
                out.push_str(&format!("^{k}"));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn u_tuple_string(u: &[u64]) -> String {
    let parts: Vec<String> = u.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

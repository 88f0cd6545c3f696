//! File formats and value notation: SG-JSON graphs, vecjson vector files,
//! exact numbers in reports, and the λ expression grammar.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::algebra::{format_rational, parse_rational, AlgebraError, AlgebraicNumber, IntPolynomial};
use crate::graph::{Graph, GraphError, SignedGraph};
use crate::spectral::{SpectralError, SpectralQuery};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("malformed {what}: {detail}")]
    Malformed { what: &'static str, detail: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

fn malformed(what: &'static str, detail: impl Into<String>) -> FormatError {
    FormatError::Malformed {
        what,
        detail: detail.into(),
    }
}

/// A graph read from SG-JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFile {
    Signed(SignedGraph),
    Plain(Graph),
}

impl GraphFile {
    /// Plain graphs are read as all-positive signed graphs.
    pub fn to_signed(&self) -> SignedGraph {
        match self {
            GraphFile::Signed(g) => g.clone(),
            GraphFile::Plain(g) => g.with_sign(1),
        }
    }
}

pub fn signed_to_json(g: &SignedGraph) -> Value {
    let edges: Vec<Value> = g.edges().into_iter().map(|(u, v, s)| json!([u, v, s])).collect();
    json!({"format": "sgjson/1", "kind": "signed", "n": g.n(), "edges": edges})
}

pub fn plain_to_json(g: &Graph) -> Value {
    let edges: Vec<Value> = g.edges().into_iter().map(|(u, v)| json!([u, v])).collect();
    json!({"format": "sgjson/1", "kind": "plain", "n": g.n(), "edges": edges})
}

pub fn graph_file_to_json(g: &GraphFile) -> Value {
    match g {
        GraphFile::Signed(g) => signed_to_json(g),
        GraphFile::Plain(g) => plain_to_json(g),
    }
}

pub fn parse_graph_value(v: &Value) -> Result<GraphFile, FormatError> {
    let what = "sgjson";
    let obj = v.as_object().ok_or_else(|| malformed(what, "not an object"))?;
    if obj.get("format").and_then(Value::as_str) != Some("sgjson/1") {
        return Err(malformed(what, "format must be \"sgjson/1\""));
    }
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| malformed(what, "missing vertex count"))? as usize;
    let edges = obj
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed(what, "missing edge list"))?;
    let index = |x: &Value| {
        x.as_u64()
            .map(|u| u as usize)
            .ok_or_else(|| malformed(what, format!("bad vertex index {x}")))
    };
    match obj.get("kind").and_then(Value::as_str) {
        Some("signed") => {
            let mut list = Vec::with_capacity(edges.len());
            for e in edges {
                let e = e.as_array().filter(|e| e.len() == 3).ok_or_else(|| malformed(what, "edge must be [u,v,s]"))?;
                let s = e[2].as_i64().ok_or_else(|| malformed(what, "sign must be 1 or -1"))?;
                if s != 1 && s != -1 {
                    return Err(GraphError::BadSign(s).into());
                }
                list.push((index(&e[0])?, index(&e[1])?, s as i8));
            }
            Ok(GraphFile::Signed(SignedGraph::new(n, &list)?))
        }
        Some("plain") => {
            let mut list = Vec::with_capacity(edges.len());
            for e in edges {
                let e = e.as_array().filter(|e| e.len() == 2).ok_or_else(|| malformed(what, "edge must be [u,v]"))?;
                list.push((index(&e[0])?, index(&e[1])?));
            }
            Ok(GraphFile::Plain(Graph::new(n, &list)?))
        }
        _ => Err(malformed(what, "kind must be \"signed\" or \"plain\"")),
    }
}

pub fn parse_graph_json(text: &str) -> Result<GraphFile, FormatError> {
    let v: Value = serde_json::from_str(text).map_err(|e| malformed("sgjson", e.to_string()))?;
    parse_graph_value(&v)
}

/// Rational as `"p/q"`, quadratic as `{"a": "p/q", "b": "p/q", "m": m}`.
pub fn number_to_json(x: &AlgebraicNumber) -> Value {
    if x.is_rational() {
        Value::String(format_rational(x.rational_part()))
    } else {
        json!({
            "a": format_rational(x.rational_part()),
            "b": format_rational(x.irrational_coeff()),
            "m": x.radicand(),
        })
    }
}

pub fn rational_to_json(x: &BigRational) -> Value {
    Value::String(format_rational(x))
}

pub fn number_from_json(v: &Value) -> Result<AlgebraicNumber, FormatError> {
    match v {
        Value::String(s) => Ok(AlgebraicNumber::from_rational(parse_rational(s)?)),
        Value::Object(o) => {
            let part = |k: &str| -> Result<BigRational, FormatError> {
                let s = o.get(k).and_then(Value::as_str).ok_or_else(|| malformed("number", format!("missing {k}")))?;
                Ok(parse_rational(s)?)
            };
            let m = o.get("m").and_then(Value::as_u64).ok_or_else(|| malformed("number", "missing m"))?;
            Ok(AlgebraicNumber::new(part("a")?, part("b")?, m))
        }
        _ => Err(malformed("number", v.to_string())),
    }
}

/// Coefficients, constant term first; numbers when they fit in `i64`.
pub fn poly_to_json(p: &IntPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(bigint_to_json).collect())
}

fn bigint_to_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(x) => json!(x),
        None => Value::String(c.to_string()),
    }
}

pub fn vectors_to_json(d: usize, vectors: &[Vec<f64>]) -> Value {
    json!({"format": "vecjson/1", "d": d, "vectors": vectors})
}

pub fn parse_vectors_json(text: &str) -> Result<(usize, Vec<Vec<f64>>), FormatError> {
    let what = "vecjson";
    let v: Value = serde_json::from_str(text).map_err(|e| malformed(what, e.to_string()))?;
    if v.get("format").and_then(Value::as_str) != Some("vecjson/1") {
        return Err(malformed(what, "format must be \"vecjson/1\""));
    }
    let d = v.get("d").and_then(Value::as_u64).ok_or_else(|| malformed(what, "missing d"))? as usize;
    let rows = v.get("vectors").and_then(Value::as_array).ok_or_else(|| malformed(what, "missing vectors"))?;
    let mut out = Vec::with_capacity(rows.len());
    for r in rows {
        let r = r.as_array().ok_or_else(|| malformed(what, "vector must be an array"))?;
        let row: Option<Vec<f64>> = r.iter().map(Value::as_f64).collect();
        let row = row.ok_or_else(|| malformed(what, "non-numeric coordinate"))?;
        if row.len() != d {
            return Err(malformed(what, format!("vector of length {} in dimension {d}", row.len())));
        }
        out.push(row);
    }
    Ok((d, out))
}

/// Parses `3/2`, `sqrt(3)`, `(1+sqrt(33))/2`, `-(3*sqrt(3)-2)/23` and similar
/// expressions over one quadratic field.
pub fn parse_number(s: &str) -> Result<AlgebraicNumber, FormatError> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
        text: s,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

/// Parses a λ: a number expression, or `minpoly:[c0,c1,...]:interval:[lo,hi]`.
pub fn parse_lambda(s: &str) -> Result<SpectralQuery, FormatError> {
    let s = s.trim();
    let Some(rest) = s.strip_prefix("minpoly:") else {
        return Ok(SpectralQuery::Quadratic(parse_number(s)?));
    };
    let bad = || malformed("lambda", s.to_string());
    let (coeffs, interval) = rest.split_once(":interval:").ok_or_else(bad)?;
    let list = |t: &str| -> Result<Vec<String>, FormatError> {
        let inner = t.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
        Ok(inner.split(',').map(|x| x.trim().to_string()).collect())
    };
    let coeffs: Result<Vec<BigInt>, _> = list(coeffs)?.iter().map(|c| c.parse::<BigInt>()).collect();
    let coeffs = coeffs.map_err(|_| bad())?;
    let bounds = list(interval)?;
    if bounds.len() != 2 {
        return Err(bad());
    }
    let lo = parse_rational(&bounds[0])?;
    let hi = parse_rational(&bounds[1])?;
    Ok(SpectralQuery::from_minpoly(IntPolynomial::new(coeffs), lo, hi)?)
}

pub fn query_to_json(q: &SpectralQuery) -> Value {
    match q {
        SpectralQuery::Quadratic(x) => number_to_json(x),
        SpectralQuery::MinPoly { poly, lo, hi } => json!({
            "minpoly": poly_to_json(poly),
            "interval": [format_rational(lo), format_rational(hi)],
        }),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn error(&self, why: &str) -> FormatError {
        malformed("number", format!("{why} at offset {} in {:?}", self.pos, self.text))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<AlgebraicNumber, FormatError> {
        let mut v = self.term()?;
        loop {
            if self.eat(b'+') {
                v = v.checked_add(&self.term()?)?;
            } else if self.eat(b'-') {
                v = v.checked_sub(&self.term()?)?;
            } else {
                return Ok(v);
            }
        }
    }

    fn term(&mut self) -> Result<AlgebraicNumber, FormatError> {
        let mut v = self.unary()?;
        loop {
            if self.eat(b'*') {
                v = v.checked_mul(&self.unary()?)?;
            } else if self.eat(b'/') {
                let d = self.unary()?;
                if d.is_zero() {
                    return Err(AlgebraError::DivisionByZero.into());
                }
                v = v.checked_div(&d)?;
            } else {
                return Ok(v);
            }
        }
    }

    fn unary(&mut self) -> Result<AlgebraicNumber, FormatError> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.atom()
    }

    fn integer(&mut self) -> Result<BigInt, FormatError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        Ok(self.text[start..self.pos].parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<AlgebraicNumber, FormatError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(v)
            }
            Some(b's') => {
                if !self.text[self.pos..].starts_with("sqrt") {
                    return Err(self.error("unexpected symbol"));
                }
                self.pos += 4;
                if !self.eat(b'(') {
                    return Err(self.error("expected '(' after sqrt"));
                }
                let k = self.integer()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                let k = k.to_u64().ok_or_else(|| self.error("radicand too large"))?;
                Ok(AlgebraicNumber::sqrt(k))
            }
            Some(c) if c.is_ascii_digit() => {
                let k = self.integer()?;
                Ok(AlgebraicNumber::from_rational(BigRational::from_integer(k)))
            }
            _ => Err(self.error("unexpected input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sgjson_layout_is_fixed() {
        let g = SignedGraph::new(3, &[(1, 2, -1), (0, 1, 1)]).unwrap();
        assert_eq!(
            signed_to_json(&g).to_string(),
            r#"{"format":"sgjson/1","kind":"signed","n":3,"edges":[[0,1,1],[1,2,-1]]}"#
        );
        let back = parse_graph_json(&signed_to_json(&g).to_string()).unwrap();
        assert_eq!(back, GraphFile::Signed(g));
        let p = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(plain_to_json(&p).to_string(), r#"{"format":"sgjson/1","kind":"plain","n":2,"edges":[[0,1]]}"#);
    }

    #[test]
    fn sgjson_rejects_bad_input() {
        assert!(parse_graph_json(r#"{"format":"sgjson/1","kind":"signed","n":2,"edges":[[0,1,2]]}"#).is_err());
        assert!(parse_graph_json(r#"{"format":"sgjson/1","kind":"signed","n":2,"edges":[[0,1,1],[0,1,-1]]}"#).is_err());
        assert!(parse_graph_json(r#"{"format":"other","kind":"plain","n":1,"edges":[]}"#).is_err());
        assert!(parse_graph_json("not json").is_err());
    }

    #[test]
    fn number_grammar() {
        assert_eq!(parse_number("3/2").unwrap(), AlgebraicNumber::from_ratio(3, 2));
        assert_eq!(parse_number("sqrt(3)").unwrap(), AlgebraicNumber::sqrt(3));
        let g = parse_number("(1+sqrt(33))/2").unwrap();
        assert_eq!(g.to_string(), "(1+sqrt(33))/2");
        let beta = parse_number("-(3*sqrt(3)-2)/23").unwrap();
        assert_eq!(beta.to_string(), "(2-3*sqrt(3))/23");
        assert_eq!(parse_number("sqrt(12)").unwrap(), parse_number("2*sqrt(3)").unwrap());
        assert!(parse_number("sqrt(2)+sqrt(3)").is_err());
        assert!(parse_number("1/0").is_err());
        assert!(parse_number("2x").is_err());
    }

    #[test]
    fn lambda_minpoly_form() {
        let q = parse_lambda("minpoly:[-2,0,0,1]:interval:[1,2]").unwrap();
        assert_eq!(q.degree(), 3);
        assert!(parse_lambda("minpoly:[-1,0,1]:interval:[0,2]").is_err());
        assert!(matches!(parse_lambda("2").unwrap(), SpectralQuery::Quadratic(_)));
    }

    #[test]
    fn number_json_forms() {
        assert_eq!(number_to_json(&AlgebraicNumber::from_int(1)).to_string(), r#""1""#);
        let x = parse_number("(1+sqrt(33))/2").unwrap();
        assert_eq!(number_to_json(&x).to_string(), r#"{"a":"1/2","b":"1/2","m":33}"#);
        assert_eq!(number_from_json(&number_to_json(&x)).unwrap(), x);
    }

    #[test]
    fn vecjson_round_trip() {
        let v = vec![vec![1.0, 0.0], vec![-0.5, 0.75f64.sqrt()]];
        let text = vectors_to_json(2, &v).to_string();
        assert_eq!(parse_vectors_json(&text).unwrap(), (2, v));
        assert!(parse_vectors_json(r#"{"format":"vecjson/1","d":3,"vectors":[[1,0]]}"#).is_err());
    }
}

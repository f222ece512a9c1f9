//! Flat prefix expressions over the model operations, e.g.
//! `oplus 0.1,0.2 gyr 0.3,0 0,0.3 0.1,0.1` or `midpoint 1 3`.
//!
//! Points are comma-separated coordinates, scalars and norm values plain
//! numbers. Every operator has a fixed arity, so no brackets are needed.

use std::fmt;

use ggv::{GgvError, Model, NormValue, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Point,
    Scalar,
    Norm,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Point => "point",
            Kind::Scalar => "scalar",
            Kind::Norm => "norm value",
        })
    }
}

/// Result of evaluating an expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Point(Point),
    Scalar(f64),
    Norm(f64),
    /// A vector of the ambient normed space (the image of `phi`).
    Ambient(Vec<f64>),
}

impl Value {
    fn kind(&self) -> Option<Kind> {
        match self {
            Value::Point(_) => Some(Kind::Point),
            Value::Scalar(_) => Some(Kind::Scalar),
            Value::Norm(_) => Some(Kind::Norm),
            Value::Ambient(_) => None,
        }
    }
}

/// Rounds to 12 significant digits and prints the shortest form.
pub fn format_number(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    let rounded = if rounded == 0.0 { 0.0 } else { rounded };
    rounded.to_string()
}

fn format_coords(c: &[f64]) -> String {
    if c.len() == 1 {
        format_number(c[0])
    } else {
        let parts: Vec<String> = c.iter().map(|&x| format_number(x)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Point(p) => f.write_str(&format_coords(p.coords())),
            Value::Scalar(x) | Value::Norm(x) => f.write_str(&format_number(*x)),
            Value::Ambient(v) => f.write_str(&format_coords(v)),
        }
    }
}

/// Operator names with their argument kinds.
const OPERATORS: &[(&str, &[Kind])] = &[
    ("identity", &[]),
    ("oplus", &[Kind::Point, Kind::Point]),
    ("ominus", &[Kind::Point]),
    ("minus", &[Kind::Point, Kind::Point]),
    ("coplus", &[Kind::Point, Kind::Point]),
    ("gyr", &[Kind::Point, Kind::Point, Kind::Point]),
    ("otimes", &[Kind::Scalar, Kind::Point]),
    ("midpoint", &[Kind::Point, Kind::Point]),
    ("reflect", &[Kind::Point, Kind::Point]),
    ("phi", &[Kind::Point]),
    ("gnorm", &[Kind::Point]),
    ("gyrometric", &[Kind::Point, Kind::Point]),
    ("distance", &[Kind::Point, Kind::Point]),
    ("linearize", &[Kind::Norm]),
    ("delinearize", &[Kind::Scalar]),
    ("nvadd", &[Kind::Norm, Kind::Norm]),
    ("nvsmul", &[Kind::Scalar, Kind::Norm]),
];

pub fn operator_names() -> impl Iterator<Item = &'static str> {
    OPERATORS.iter().map(|(name, _)| *name)
}

struct Parser<'a> {
    model: &'a Model,
    tokens: Vec<&'a str>,
    pos: usize,
}

fn syntax(msg: impl Into<String>) -> GgvError {
    GgvError::Domain(msg.into())
}

impl<'a> Parser<'a> {
    fn next(&mut self) -> Result<&'a str, GgvError> {
        let tok = self
            .tokens
            .get(self.pos)
            .copied()
            .ok_or_else(|| syntax("unexpected end of expression"))?;
        self.pos += 1;
        Ok(tok)
    }

    fn literal(&self, tok: &str, want: Kind) -> Result<Value, GgvError> {
        let numbers = tok
            .split(',')
            .map(|t| t.trim().parse::<f64>())
            .collect::<Result<Vec<f64>, _>>()
            .map_err(|_| syntax(format!("unknown operator or malformed number `{tok}`")))?;
        match want {
            Kind::Point => Ok(Value::Point(self.model.point(numbers)?)),
            Kind::Scalar | Kind::Norm if numbers.len() == 1 => Ok(if want == Kind::Scalar {
                Value::Scalar(numbers[0])
            } else {
                Value::Norm(numbers[0])
            }),
            _ => Err(syntax(format!("expected a {want}, got `{tok}`"))),
        }
    }

    fn expect(&mut self, want: Kind) -> Result<Value, GgvError> {
        let tok = self.next()?;
        let value = if OPERATORS.iter().any(|(name, _)| *name == tok) {
            self.apply(tok)?
        } else {
            self.literal(tok, want)?
        };
        match value.kind() {
            Some(k) if k == want => Ok(value),
            _ => Err(syntax(format!("`{tok}` does not produce a {want}"))),
        }
    }

    fn apply(&mut self, op: &str) -> Result<Value, GgvError> {
        let (_, kinds) = OPERATORS
            .iter()
            .find(|(name, _)| *name == op)
            .ok_or_else(|| syntax(format!("unknown operator `{op}`")))?;
        let args = kinds
            .iter()
            .map(|&k| self.expect(k))
            .collect::<Result<Vec<_>, _>>()?;
        let m = self.model;
        let p = |i: usize| match &args[i] {
            Value::Point(p) => p,
            _ => unreachable!("argument kinds are checked by `expect`"),
        };
        let x = |i: usize| match &args[i] {
            Value::Scalar(x) | Value::Norm(x) => *x,
            _ => unreachable!("argument kinds are checked by `expect`"),
        };
        Ok(match op {
            "identity" => Value::Point(m.identity()),
            "oplus" => Value::Point(m.oplus(p(0), p(1))?),
            "ominus" => Value::Point(m.ominus(p(0))?),
            "minus" => Value::Point(m.ominus_between(p(0), p(1))?),
            "coplus" => Value::Point(m.coplus(p(0), p(1))?),
            "gyr" => Value::Point(m.gyr_apply(p(0), p(1), p(2))?),
            "otimes" => Value::Point(m.otimes(x(0), p(1))?),
            "midpoint" => Value::Point(m.gyromidpoint(p(0), p(1))?),
            "reflect" => {
                let (a, y) = (p(0), p(1));
                Value::Point(m.wrap(m.reflect_coords(a.coords(), y.coords())))
            }
            "phi" => Value::Ambient(m.phi(p(0))?),
            "gnorm" => Value::Norm(m.gnorm(p(0))?.0),
            "gyrometric" => Value::Norm(m.gyrometric(p(0), p(1))?.0),
            "distance" => Value::Scalar(m.metric_distance(p(0), p(1))?),
            "linearize" => Value::Scalar(m.linearize(NormValue(x(0)))?),
            "delinearize" => Value::Norm(m.delinearize(x(0))?.0),
            "nvadd" => Value::Norm(m.nv_add(NormValue(x(0)), NormValue(x(1)))?.0),
            "nvsmul" => Value::Norm(m.nv_smul(x(0), NormValue(x(1)))?.0),
            _ => unreachable!("operator table and dispatch agree"),
        })
    }
}

/// Evaluates `expr` in `model`.
pub fn evaluate(model: &Model, expr: &str) -> Result<Value, GgvError> {
    let tokens: Vec<&str> = expr.split_whitespace().collect();
    let first = *tokens.first().ok_or_else(|| syntax("empty expression"))?;
    let mut parser = Parser {
        model,
        tokens,
        pos: 0,
    };
    let value = if OPERATORS.iter().any(|(name, _)| *name == first) {
        parser.pos = 1;
        parser.apply(first)?
    } else {
        parser.expect(Kind::Point)?
    };
    if parser.pos != parser.tokens.len() {
        return Err(syntax(format!(
            "trailing input after position {}: `{}`",
            parser.pos,
            parser.tokens[parser.pos..].join(" ")
        )));
    }
    Ok(value)
}

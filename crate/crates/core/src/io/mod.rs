//! The JSON spec format, report rendering and the built-in corpus.
//!
//! ```text
//! {
//!   "bicharacter": {"exponents": [[1]], "root_order": 2},
//!   "forms": {"B": [[i, j, "c"], ...]},
//!   "group": {"cyclic_orders": [2]},
//!   "module": {"degrees": [[0], [1]], "dimension": 2},
//!   "products": {"dot": [[i, j, k, "c"], ...]},
//!   "representations": {"rho": {"action": [[i, row, col, "c"], ...], "carrier": "self"}},
//!   "scalars": {"cyclotomic_order": 2}
//! }
//! ```
//!
//! `products`, `representations`, `forms` and `scalars` may be omitted. A
//! carrier is `"self"` or `{"dimension": n, "degrees": [...]}`.

pub mod args;
pub mod corpus;
mod emit;
mod report;

use std::sync::Arc;

use serde_json::{Map, Value};
use thiserror::Error;

use crate::forms::BilinearForm;
use crate::graded::{AlgebraSpec, BilinearMap, GradedError, GradedModule, Representation, MAX_DIMENSION};
use crate::grading::{Bicharacter, FiniteAbelianGroup, Grading, GradingError, GroupElement};
use crate::scalars::{CyclotomicField, LiteralError, Scalar};

pub use emit::{emit_spec, emit_spec_list};
pub use report::{emit_report, ReportFormat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("bicharacter violates its axioms at generators ({i}, {j})")]
    Bicharacter { i: usize, j: usize },
    #[error("{path}: {source}")]
    Grading { path: String, source: GradedError },
    #[error("{path}: index {index} out of range (bound {bound})")]
    IndexOutOfRange { path: String, index: usize, bound: usize },
    #[error("scalars.cyclotomic_order is {declared} but bicharacter.root_order is {root_order}")]
    ScalarOrderMismatch { declared: u64, root_order: u64 },
    #[error("{path}: {source}")]
    Literal { path: String, source: LiteralError },
}

impl ParseError {
    /// Stable name of the error class.
    pub fn class(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "syntax",
            ParseError::Schema { .. } => "schema",
            ParseError::Bicharacter { .. } => "bicharacter",
            ParseError::Grading { .. } => "grading",
            ParseError::IndexOutOfRange { .. } => "index-out-of-range",
            ParseError::ScalarOrderMismatch { .. } => "scalar-order-mismatch",
            ParseError::Literal { .. } => "literal",
        }
    }
}

fn schema<T>(path: &str, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError::Schema {
        path: path.to_string(),
        message: message.into(),
    })
}

fn graded_error(path: &str, err: GradedError) -> ParseError {
    match err {
        GradedError::IndexOutOfRange { index, bound, .. } => ParseError::IndexOutOfRange {
            path: path.to_string(),
            index,
            bound,
        },
        GradedError::GradingViolation { .. } => ParseError::Grading {
            path: path.to_string(),
            source: err,
        },
        other => ParseError::Schema {
            path: path.to_string(),
            message: other.to_string(),
        },
    }
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, ParseError> {
    v.as_object().map_or_else(|| schema(path, "expected an object"), Ok)
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, ParseError> {
    v.as_array().map_or_else(|| schema(path, "expected an array"), Ok)
}

fn integer(v: &Value, path: &str) -> Result<i64, ParseError> {
    v.as_i64().map_or_else(|| schema(path, "expected an integer"), Ok)
}

fn index(v: &Value, path: &str) -> Result<usize, ParseError> {
    match v.as_u64() {
        Some(i) => Ok(usize::try_from(i).unwrap_or(usize::MAX)),
        None => schema(path, "expected a non-negative integer index"),
    }
}

fn key<'a>(obj: &'a Map<String, Value>, name: &str, path: &str) -> Result<&'a Value, ParseError> {
    obj.get(name)
        .map_or_else(|| schema(path, format!("missing key `{name}`")), Ok)
}

fn no_extra_keys(obj: &Map<String, Value>, allowed: &[&str], path: &str) -> Result<(), ParseError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => schema(path, format!("unknown key `{k}`")),
        None => Ok(()),
    }
}

fn literal(v: &Value, f: &'static CyclotomicField, path: &str) -> Result<Scalar, ParseError> {
    let Some(text) = v.as_str() else {
        return schema(path, "expected a scalar literal string");
    };
    Scalar::parse(text, f).map_err(|source| ParseError::Literal {
        path: path.to_string(),
        source,
    })
}

/// Fixed-length tuple of indices followed by a scalar literal.
fn tuple(
    v: &Value,
    indices: usize,
    f: &'static CyclotomicField,
    path: &str,
) -> Result<(Vec<usize>, Scalar), ParseError> {
    let items = array(v, path)?;
    if items.len() != indices + 1 {
        return schema(path, format!("expected {} indices and a scalar", indices));
    }
    let idx = items[..indices]
        .iter()
        .enumerate()
        .map(|(k, x)| index(x, &format!("{path}[{k}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let c = literal(&items[indices], f, &format!("{path}[{indices}]"))?;
    Ok((idx, c))
}

fn parse_grading(doc: &Map<String, Value>) -> Result<Arc<Grading>, ParseError> {
    let group = object(key(doc, "group", "$")?, "group")?;
    no_extra_keys(group, &["cyclic_orders"], "group")?;
    let orders = array(key(group, "cyclic_orders", "group")?, "group.cyclic_orders")?
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let p = format!("group.cyclic_orders[{i}]");
            v.as_u64().map_or_else(|| schema(&p, "expected a positive integer"), Ok)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let group = FiniteAbelianGroup::new(orders).or_else(|e| schema("group.cyclic_orders", e.to_string()))?;

    let bichar = object(key(doc, "bicharacter", "$")?, "bicharacter")?;
    no_extra_keys(bichar, &["exponents", "root_order"], "bicharacter")?;
    let root_order = key(bichar, "root_order", "bicharacter")?
        .as_u64()
        .and_then(|n| u32::try_from(n).ok())
        .map_or_else(|| schema("bicharacter.root_order", "expected a positive integer"), Ok)?;
    let rows = array(key(bichar, "exponents", "bicharacter")?, "bicharacter.exponents")?;
    let exponents = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let p = format!("bicharacter.exponents[{i}]");
            array(row, &p)?
                .iter()
                .enumerate()
                .map(|(j, e)| integer(e, &format!("{p}[{j}]")))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    if exponents.len() != group.rank() {
        return schema(
            "bicharacter.exponents",
            format!("expected a {0}x{0} matrix", group.rank()),
        );
    }
    let eps = Bicharacter::new(root_order, exponents).or_else(|e| schema("bicharacter", e.to_string()))?;

    if let Some(scalars) = doc.get("scalars") {
        let scalars = object(scalars, "scalars")?;
        no_extra_keys(scalars, &["cyclotomic_order"], "scalars")?;
        let declared = key(scalars, "cyclotomic_order", "scalars")?
            .as_u64()
            .map_or_else(|| schema("scalars.cyclotomic_order", "expected a positive integer"), Ok)?;
        if declared != root_order as u64 {
            return Err(ParseError::ScalarOrderMismatch {
                declared,
                root_order: root_order as u64,
            });
        }
    }

    Grading::new(group, eps).map_err(|e| match e {
        GradingError::Violation(i, j) => ParseError::Bicharacter { i, j },
        other => ParseError::Schema {
            path: "bicharacter".into(),
            message: other.to_string(),
        },
    })
}

fn parse_module(v: &Value, grading: &Arc<Grading>, path: &str) -> Result<GradedModule, ParseError> {
    let obj = object(v, path)?;
    no_extra_keys(obj, &["degrees", "dimension"], path)?;
    let dim = index(key(obj, "dimension", path)?, &format!("{path}.dimension"))?;
    if dim > MAX_DIMENSION {
        return schema(
            &format!("{path}.dimension"),
            format!("dimension {dim} exceeds the supported maximum {MAX_DIMENSION}"),
        );
    }
    let p = format!("{path}.degrees");
    let raw = array(key(obj, "degrees", path)?, &p)?;
    if raw.len() != dim {
        return schema(&p, format!("expected {dim} degrees, got {}", raw.len()));
    }
    let degrees = raw
        .iter()
        .enumerate()
        .map(|(i, d)| degree(d, grading, &format!("{p}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    GradedModule::new(grading.clone(), degrees).map_err(|e| graded_error(path, e))
}

fn degree(v: &Value, grading: &Grading, path: &str) -> Result<GroupElement, ParseError> {
    let comps = array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, c)| integer(c, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    grading.group().element(&comps).or_else(|e| schema(path, e.to_string()))
}

/// Parses and fully validates a spec document.
pub fn parse_spec(text: &str) -> Result<AlgebraSpec, ParseError> {
    let value: Value = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let doc = object(&value, "$")?;
    no_extra_keys(
        doc,
        &["bicharacter", "forms", "group", "module", "products", "representations", "scalars"],
        "$",
    )?;
    let grading = parse_grading(doc)?;
    let field = grading.field();
    let module = parse_module(key(doc, "module", "$")?, &grading, "module")?;
    let mut spec = AlgebraSpec::new(module.clone());

    if let Some(products) = doc.get("products") {
        for (name, entries) in object(products, "products")? {
            let path = format!("products.{name}");
            let constants = array(entries, &path)?
                .iter()
                .enumerate()
                .map(|(t, e)| {
                    let (idx, c) = tuple(e, 3, field, &format!("{path}[{t}]"))?;
                    Ok((idx[0], idx[1], idx[2], c))
                })
                .collect::<Result<Vec<_>, ParseError>>()?;
            let map = BilinearMap::from_constants(&module, name.as_str(), constants)
                .map_err(|e| graded_error(&path, e))?;
            spec.insert_product(map).map_err(|e| graded_error(&path, e))?;
        }
    }

    if let Some(reps) = doc.get("representations") {
        for (name, rep) in object(reps, "representations")? {
            let path = format!("representations.{name}");
            let obj = object(rep, &path)?;
            no_extra_keys(obj, &["action", "carrier"], &path)?;
            let carrier_path = format!("{path}.carrier");
            let carrier = match key(obj, "carrier", &path)? {
                Value::String(s) if s == "self" => module.clone(),
                Value::String(_) => return schema(&carrier_path, "expected \"self\" or a module"),
                other => parse_module(other, &grading, &carrier_path)?,
            };
            let action_path = format!("{path}.action");
            let entries = array(key(obj, "action", &path)?, &action_path)?
                .iter()
                .enumerate()
                .map(|(t, e)| {
                    let (idx, c) = tuple(e, 3, field, &format!("{action_path}[{t}]"))?;
                    Ok((idx[0], idx[1], idx[2], c))
                })
                .collect::<Result<Vec<_>, ParseError>>()?;
            let rep = Representation::from_entries(&module, carrier, entries, name)
                .map_err(|e| graded_error(&path, e))?;
            spec.insert_representation(name.as_str(), rep)
                .map_err(|e| graded_error(&path, e))?;
        }
    }

    if let Some(forms) = doc.get("forms") {
        for (name, entries) in object(forms, "forms")? {
            let path = format!("forms.{name}");
            let entries = array(entries, &path)?
                .iter()
                .enumerate()
                .map(|(t, e)| {
                    let (idx, c) = tuple(e, 2, field, &format!("{path}[{t}]"))?;
                    Ok((idx[0], idx[1], c))
                })
                .collect::<Result<Vec<_>, ParseError>>()?;
            let form = BilinearForm::from_entries(&module, entries, name)
                .map_err(|e| graded_error(&path, e))?;
            spec.insert_form(name.as_str(), form).map_err(|e| graded_error(&path, e))?;
        }
    }
    Ok(spec)
}

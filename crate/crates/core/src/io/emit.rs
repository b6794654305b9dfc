use serde_json::{json, Map, Value};

use crate::graded::{AlgebraSpec, GradedModule};
use crate::grading::GroupElement;

fn degrees(m: &GradedModule) -> Value {
    Value::Array(m.degrees().iter().map(degree).collect())
}

fn degree(d: &GroupElement) -> Value {
    Value::Array(d.components().iter().map(|&c| json!(c)).collect())
}

fn module_value(m: &GradedModule) -> Value {
    json!({ "dimension": m.dim(), "degrees": degrees(m) })
}

pub(crate) fn spec_value(spec: &AlgebraSpec) -> Value {
    let module = spec.module();
    let grading = module.grading();
    let eps = grading.bicharacter();

    let products: Map<String, Value> = spec
        .products()
        .iter()
        .map(|(name, map)| {
            let rows = map
                .constants()
                .map(|(i, j, k, c)| json!([i, j, k, c.to_literal()]))
                .collect();
            (name.clone(), Value::Array(rows))
        })
        .collect();

    let representations: Map<String, Value> = spec
        .representations()
        .iter()
        .map(|(name, rep)| {
            let carrier = if rep.carrier() == module {
                json!("self")
            } else {
                module_value(rep.carrier())
            };
            let action = rep
                .entries()
                .map(|(i, r, c, v)| json!([i, r, c, v.to_literal()]))
                .collect();
            (name.clone(), json!({ "carrier": carrier, "action": Value::Array(action) }))
        })
        .collect();

    let forms: Map<String, Value> = spec
        .forms()
        .iter()
        .map(|(name, form)| {
            let rows = form
                .entries()
                .map(|(i, j, c)| json!([i, j, c.to_literal()]))
                .collect();
            (name.clone(), Value::Array(rows))
        })
        .collect();

    json!({
        "group": { "cyclic_orders": grading.group().cyclic_orders() },
        "bicharacter": { "root_order": eps.root_order(), "exponents": eps.exponents() },
        "scalars": { "cyclotomic_order": eps.root_order() },
        "module": module_value(module),
        "products": products,
        "representations": representations,
        "forms": forms,
    })
}

/// Canonical text: sorted keys, two-space indent, arrays of scalars on one
/// line, trailing newline.
pub(crate) fn write_canonical(value: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, value, 0);
    out.push('\n');
    out
}

fn is_flat(items: &[Value]) -> bool {
    items.iter().all(|v| !v.is_array() && !v.is_object())
}

fn write_value(out: &mut String, value: &Value, indent: usize) {
    let pad = |out: &mut String, n: usize| out.extend(std::iter::repeat_n(' ', n));
    match value {
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, v)) in map.iter().enumerate() {
                pad(out, indent + 2);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(out, v, indent + 2);
                if k + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            pad(out, indent);
            out.push('}');
        }
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if is_flat(items) => {
            out.push('[');
            for (k, v) in items.iter().enumerate() {
                if k > 0 {
                    out.push_str(", ");
                }
                out.push_str(&v.to_string());
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, v) in items.iter().enumerate() {
                pad(out, indent + 2);
                write_value(out, v, indent + 2);
                if k + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            pad(out, indent);
            out.push(']');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

/// Canonical text of a spec; `parse_spec(emit_spec(s))` reproduces `s`.
pub fn emit_spec(spec: &AlgebraSpec) -> String {
    write_canonical(&spec_value(spec))
}

/// Canonical JSON array of specs.
pub fn emit_spec_list(specs: &[AlgebraSpec]) -> String {
    write_canonical(&Value::Array(specs.iter().map(spec_value).collect()))
}

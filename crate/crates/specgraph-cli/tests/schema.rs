//! Validates emitted JSON against the schema documents shipped in
//! `schemas/`. The checker covers exactly the keywords those schemas use:
//! type, const, required, properties, items, minItems, maxItems, minimum,
//! pattern (digit strings only), oneOf, and local $ref.

use serde_json::Value;

fn lookup<'a>(root: &'a Value, reference: &str) -> &'a Value {
    let path = reference.strip_prefix("#/").expect("local reference");
    let mut node = root;
    for key in path.split('/') {
        node = &node[key];
    }
    node
}

fn type_matches(ty: &str, value: &Value) -> bool {
    match ty {
        "object" => value.is_object(),
        "array" => value.is_array(),
        "string" => value.is_string(),
        "boolean" => value.is_boolean(),
        "integer" => value.as_i64().is_some() || value.as_u64().is_some(),
        "number" => value.is_number(),
        "null" => value.is_null(),
        other => panic!("unsupported type keyword {other}"),
    }
}

fn digit_string(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
}

fn validate(root: &Value, schema: &Value, value: &Value, path: &str) -> Result<(), String> {
    if let Some(reference) = schema.get("$ref").and_then(Value::as_str) {
        return validate(root, lookup(root, reference), value, path);
    }
    if let Some(expected) = schema.get("const") {
        if expected != value {
            return Err(format!("{path}: expected const {expected}, got {value}"));
        }
    }
    if let Some(ty) = schema.get("type") {
        let ok = match ty {
            Value::String(t) => type_matches(t, value),
            Value::Array(ts) => ts
                .iter()
                .any(|t| type_matches(t.as_str().expect("type name"), value)),
            _ => panic!("bad type keyword"),
        };
        if !ok {
            return Err(format!("{path}: type mismatch, got {value}"));
        }
    }
    if let Some(min) = schema.get("minimum").and_then(Value::as_i64) {
        if let Some(x) = value.as_i64() {
            if x < min {
                return Err(format!("{path}: {x} below minimum {min}"));
            }
        }
    }
    if let Some(pattern) = schema.get("pattern").and_then(Value::as_str) {
        assert_eq!(
            pattern, "^-?[0-9]+$",
            "only the digit-string pattern is supported"
        );
        let s = value
            .as_str()
            .ok_or_else(|| format!("{path}: pattern on non-string"))?;
        if !digit_string(s) {
            return Err(format!("{path}: '{s}' is not a decimal integer string"));
        }
    }
    if let Some(required) = schema.get("required").and_then(Value::as_array) {
        let obj = value
            .as_object()
            .ok_or_else(|| format!("{path}: not an object"))?;
        for key in required {
            let key = key.as_str().unwrap();
            if !obj.contains_key(key) {
                return Err(format!("{path}: missing required field '{key}'"));
            }
        }
    }
    if let Some(props) = schema.get("properties").and_then(Value::as_object) {
        if let Some(obj) = value.as_object() {
            for (key, sub) in props {
                if let Some(v) = obj.get(key) {
                    validate(root, sub, v, &format!("{path}.{key}"))?;
                }
            }
        }
    }
    if let Some(arr) = value.as_array() {
        if let Some(min) = schema.get("minItems").and_then(Value::as_u64) {
            if (arr.len() as u64) < min {
                return Err(format!("{path}: fewer than {min} items"));
            }
        }
        if let Some(max) = schema.get("maxItems").and_then(Value::as_u64) {
            if (arr.len() as u64) > max {
                return Err(format!("{path}: more than {max} items"));
            }
        }
        if let Some(items) = schema.get("items") {
            for (i, v) in arr.iter().enumerate() {
                validate(root, items, v, &format!("{path}[{i}]"))?;
            }
        }
    }
    if let Some(alternatives) = schema.get("oneOf").and_then(Value::as_array) {
        let hits = alternatives
            .iter()
            .filter(|alt| validate(root, alt, value, path).is_ok())
            .count();
        if hits != 1 {
            return Err(format!(
                "{path}: {hits} of {} oneOf matched",
                alternatives.len()
            ));
        }
    }
    Ok(())
}

fn load_schema(name: &str) -> Value {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .join(name);
    serde_json::from_str(&std::fs::read_to_string(path).expect("schema file")).unwrap()
}

#[test]
fn dominance_reports_validate_against_schema() {
    use specgraph::dominance::dominance_report;
    use specgraph::graph::{generate, FamilySpec};

    let schema = load_schema("dominance-report-1.schema.json");
    for spec in [
        FamilySpec::Path { n: 11 },
        FamilySpec::CompleteBipartite { m: 1, n: 4 },
        FamilySpec::DoubledFan { n: 3 },
        FamilySpec::CycleComplement { m: 3, n: 4 },
        FamilySpec::CoxeterE8Tilde,
        FamilySpec::Petersen,
        FamilySpec::Complete { n: 1 },
    ] {
        let g = generate(&spec).unwrap();
        let report = dominance_report(&g, Some(spec.to_string()));
        let value: Value = serde_json::from_str(&report.to_json()).unwrap();
        validate(&schema, &schema, &value, "$").unwrap_or_else(|e| panic!("{spec:?}: {e}"));
    }

    // disconnected graph: diameter must serialize as null
    let disc = generate(&FamilySpec::Cycle { m: 3 })
        .unwrap()
        .disjoint_union(&generate(&FamilySpec::Cycle { m: 4 }).unwrap());
    let report = dominance_report(&disc, None);
    let value: Value = serde_json::from_str(&report.to_json()).unwrap();
    assert!(value["graph"]["diameter"].is_null());
    validate(&schema, &schema, &value, "$").unwrap();
}

#[test]
fn scan_aggregates_validate_against_schema() {
    use specgraph::dominance::{scan_corpus, DominancePattern};
    use specgraph::graph::{enumerate_connected, Graph};

    let schema = load_schema("scan-aggregate-1.schema.json");
    let mut inputs: Vec<Result<Graph, String>> = enumerate_connected(4)
        .unwrap()
        .into_iter()
        .map(Ok)
        .collect();
    inputs.push(Err("synthetic parse failure".into()));
    let agg = scan_corpus(inputs, DominancePattern::ExactlyKDominant(2), 10);
    let value: Value = serde_json::from_str(&agg.to_json()).unwrap();
    validate(&schema, &schema, &value, "$").unwrap();
}

//! Hand-written JSON schemas (draft 2020-12) for the machine outputs.

use serde_json::{json, Value};

fn prime_list() -> Value {
    json!({"type": "array", "items": {"type": "array", "items": {"type": "string"}}})
}

pub fn analyze() -> Value {
    json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": "analyze",
        "type": "object",
        "required": ["dim", "q_dim", "ass", "min", "q_max", "heights", "reduced", "tau_q_vnr", "tainted"],
        "properties": {
            "dim": {"type": "integer", "minimum": 0},
            "q_dim": {"type": "integer", "minimum": 0},
            "ass": prime_list(),
            "min": prime_list(),
            "q_max": prime_list(),
            "heights": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 0}},
            "reduced": {"type": "boolean"},
            "tau_q_vnr": {"type": "boolean"},
            "min_count": {"type": "integer", "minimum": 1},
            "tainted": {"type": "boolean"},
            "assumptions": {"type": "array", "items": {"type": "string"}}
        }
    })
}

pub fn query() -> Value {
    let gens = json!({"type": "array", "items": {"type": "string"}});
    let one = |key: &str, ty: Value| json!({"type": "object", "required": [key], "properties": {key: ty}});
    json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": "query",
        "oneOf": [
            one("dense", json!({"type": "boolean"})),
            one("semiregular", json!({"type": "boolean"})),
            one("member", json!({"type": "boolean"})),
            one("generators", gens),
            one("height", json!({"type": "integer", "minimum": 0})),
            {
                "type": "object",
                "required": ["ring", "analysis"],
                "properties": {"ring": {"type": "string"}, "analysis": analyze()}
            },
            {
                "type": "object",
                "required": ["k", "deg_t_f"],
                "properties": {
                    "k": {"type": "integer", "minimum": 0},
                    "deg_t_f": {"type": ["integer", "null"], "minimum": 0}
                }
            },
            {
                "type": "object",
                "required": ["outcome", "reason"],
                "properties": {
                    "outcome": {"enum": ["pass", "fail", "skipped"]},
                    "reason": {"type": ["string", "null"]}
                }
            }
        ]
    })
}

pub fn verify() -> Value {
    let status = json!({"enum": ["pass", "fail", "skip"]});
    json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": "verify",
        "type": "object",
        "required": ["corpus", "properties", "rings", "verdicts", "summary"],
        "properties": {
            "corpus": {
                "type": "object",
                "required": ["seed", "n_random", "nvars", "max_deg", "max_gens", "named_families", "dm_draws", "dm_draws_random", "suite"]
            },
            "properties": {"type": "object", "additionalProperties": {"type": "string"}},
            "rings": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["id", "presentation"],
                    "properties": {"id": {"type": "string"}, "presentation": {"type": "string"}}
                }
            },
            "verdicts": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["property", "ring", "status"],
                    "properties": {
                        "property": {"type": "string", "pattern": "^P-[A-Z0-9]+$"},
                        "ring": {"type": "string"},
                        "status": status,
                        "reason": {"type": ["string", "null"]},
                        "payload": {"type": "object"}
                    }
                }
            },
            "summary": {
                "type": "object",
                "required": ["pass", "fail", "skip"],
                "properties": {
                    "pass": {"type": "integer", "minimum": 0},
                    "fail": {"type": "integer", "minimum": 0},
                    "skip": {"type": "integer", "minimum": 0}
                }
            }
        }
    })
}

pub fn all() -> Value {
    json!({"analyze": analyze(), "query": query(), "verify": verify()})
}

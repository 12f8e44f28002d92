use serde_json::{json, Map, Value};

/// One expected-versus-actual comparison.
pub struct Check {
    pub name: String,
    pub parameters: Value,
    pub expected: Value,
    pub actual: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, parameters: Value, expected: Value, actual: Value) -> Self {
        Check { name: name.into(), parameters, expected, actual }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "parameters": self.parameters,
            "expected": self.expected,
            "actual": self.actual,
            "verdict": if self.passed() { "pass" } else { "fail" },
        })
    }
}

/// JSON output of a subcommand: the echoed command, result fields, checks.
#[derive(Default)]
pub struct RunReport {
    pub fields: Map<String, Value>,
    pub checks: Vec<Check>,
}

impl RunReport {
    pub fn set(&mut self, key: &str, v: Value) {
        self.fields.insert(key.to_string(), v);
    }

    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn render(&self, command: &[String], timing: Option<f64>) -> Value {
        let mut out = Map::new();
        out.insert("command".into(), json!(command));
        for (k, v) in &self.fields {
            out.insert(k.clone(), v.clone());
        }
        out.insert("checks".into(), Value::Array(self.checks.iter().map(Check::to_json).collect()));
        out.insert("verdict".into(), json!(if self.passed() { "pass" } else { "fail" }));
        if let Some(ms) = timing {
            out.insert("timing_ms".into(), json!(ms));
        }
        Value::Object(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_failed_check_fails_the_run() {
        let mut r = RunReport::default();
        r.check(Check::new("a", json!({}), json!(1), json!(1)));
        assert!(r.passed());
        r.check(Check::new("b", json!({}), json!(1), json!(2)));
        assert!(!r.passed());
        let v = r.render(&["x".into()], None);
        assert_eq!(v["verdict"], "fail");
        assert_eq!(v["checks"][1]["verdict"], "fail");
    }
}

use serde::{Deserialize, Serialize};
use serde_json::Value;
use uqsl2::LawReport;

pub const FORMAT_VERSION: &str = concat!("uqsl2/", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub n: u32,
    pub star: Option<String>,
    pub rep: Option<String>,
    pub embedding: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub command: String,
    pub parameters: Parameters,
    /// Identity checks; any failure gives exit code 2.
    pub checks: Vec<LawReport>,
    /// Departures from expected values that do not break an identity; not counted as failures.
    pub notes: Vec<String>,
    pub payload: Value,
}

impl Report {
    pub fn new(command: &str, parameters: Parameters) -> Report {
        Report {
            version: FORMAT_VERSION.into(),
            command: command.into(),
            parameters,
            checks: Vec::new(),
            notes: Vec::new(),
            payload: Value::Object(Default::default()),
        }
    }

    pub fn check(&mut self, r: LawReport) {
        self.checks.push(r);
    }

    pub fn checks(&mut self, rs: impl IntoIterator<Item = LawReport>) {
        self.checks.extend(rs);
    }

    /// A boolean check with a single case.
    pub fn expect(&mut self, name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) {
        let mut r = LawReport::new(name);
        r.record(ok, detail);
        self.checks.push(r);
    }

    pub fn set(&mut self, key: &str, v: impl Serialize) {
        let v = serde_json::to_value(v).expect("report values serialize");
        if let Value::Object(m) = &mut self.payload {
            m.insert(key.into(), v);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render(&self) -> String {
        let p = &self.parameters;
        let mut out = format!("uqsl2 {} (N = {}", self.command, p.n);
        if let Some(s) = &p.star {
            out += &format!(", star = {s}");
        }
        if let Some(r) = &p.rep {
            out += &format!(", rep = {r}");
        }
        out += ")\n";
        for c in &self.checks {
            if c.passed() {
                out += &format!("  PASS  {} [{}]\n", c.name, c.checked);
            } else {
                let more = c.failures.len().saturating_sub(1);
                let first = c.failures.first().map(String::as_str).unwrap_or("");
                out += &format!("  FAIL  {} [{}]: {first}", c.name, c.checked);
                if more > 0 {
                    out += &format!(" (+{more} more)");
                }
                out.push('\n');
            }
        }
        if let Value::Object(m) = &self.payload {
            for (k, v) in m {
                let s = match v {
                    Value::String(s) => s.clone(),
                    _ => serde_json::to_string(v).expect("serializes"),
                };
                if s.len() <= 160 {
                    out += &format!("  {k}: {s}\n");
                } else {
                    out += &format!("  {k}: ({} bytes, use --emit)\n", s.len());
                }
            }
        }
        for n in &self.notes {
            out += &format!("  note: {n}\n");
        }
        out
    }
}

//! Machine-readable run reports. Every CLI invocation emits exactly one
//! report; identical invocations produce byte-identical output apart from
//! the timing field, which tests and downstream tooling strip.

use std::fmt;

use serde::Serialize;
use serde_json::Value;

use crate::rat::Rat;

/// Wire schema version, bumped on breaking payload changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "markdown" => Ok(OutputFormat::Markdown),
            other => Err(format!("unknown format {other:?}, expected json|csv|markdown")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

impl Verdict {
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Error => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Error => "error",
        })
    }
}

/// Knobs shared by all commands. Levels are stored doubled and serialized
/// as rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub cutoff2: i64,
    pub i_max_formula: u32,
    pub i_max_solver: u32,
    pub paranoid: bool,
    pub wide_charge: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            cutoff2: 12,
            i_max_formula: 50,
            i_max_solver: 1,
            paranoid: false,
            wide_charge: false,
        }
    }
}

impl RunConfig {
    pub fn level_cutoff(&self) -> Rat {
        Rat::from_half(self.cutoff2)
    }

    /// Charge window for embedding scans: the families move the relative
    /// charge by at most one, wide mode re-checks one step beyond.
    pub fn charge_window(&self) -> i64 {
        if self.wide_charge {
            2
        } else {
            1
        }
    }
}

impl Serialize for RunConfig {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("RunConfig", 5)?;
        s.serialize_field("level_cutoff", &self.level_cutoff())?;
        s.serialize_field("i_max_formula", &self.i_max_formula)?;
        s.serialize_field("i_max_solver", &self.i_max_solver)?;
        s.serialize_field("paranoid", &self.paranoid)?;
        s.serialize_field("wide_charge", &self.wide_charge)?;
        s.end()
    }
}

/// One run's complete output. Top-level keys keep this declaration order;
/// payload objects sort their keys.
#[derive(Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub config: RunConfig,
    pub payload: Value,
    pub verdict: Verdict,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(command: &str, config: RunConfig, payload: Value, verdict: Verdict) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            command: command.to_string(),
            config,
            payload,
            verdict,
            timing_ms: 0,
        }
    }

    pub fn error(command: &str, config: RunConfig, message: String) -> Self {
        Report::new(
            command,
            config,
            serde_json::json!({ "message": message }),
            Verdict::Error,
        )
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            OutputFormat::Csv => render_csv(self),
            OutputFormat::Markdown => render_markdown(self),
        }
    }
}

/// Depth-first flattening of a JSON value into (dotted path, scalar) rows.
fn flatten(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    match value {
        Value::Null => rows.push((prefix.to_string(), String::new())),
        Value::Bool(b) => rows.push((prefix.to_string(), b.to_string())),
        Value::Number(n) => rows.push((prefix.to_string(), n.to_string())),
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        Value::Array(items) => {
            if items.is_empty() {
                rows.push((prefix.to_string(), "[]".to_string()));
            }
            for (i, item) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), item, rows);
            }
        }
        Value::Object(map) => {
            if map.is_empty() {
                rows.push((prefix.to_string(), "{}".to_string()));
            }
            for (k, v) in map {
                let path = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&path, v, rows);
            }
        }
    }
}

fn report_rows(report: &Report) -> Vec<(String, String)> {
    let value = serde_json::to_value(report).expect("report serializes");
    let mut rows = Vec::new();
    flatten("", &value, &mut rows);
    rows
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn render_csv(report: &Report) -> String {
    let mut out = String::from("field,value\n");
    for (path, value) in report_rows(report) {
        out.push_str(&csv_escape(&path));
        out.push(',');
        out.push_str(&csv_escape(&value));
        out.push('\n');
    }
    out
}

fn md_escape(field: &str) -> String {
    field.replace('|', "\\|").replace('\n', " ")
}

fn render_markdown(report: &Report) -> String {
    let mut out = format!(
        "# n2kit {} ({})\n\n| field | value |\n| --- | --- |\n",
        report.command, report.verdict
    );
    for (path, value) in report_rows(report) {
        out.push_str(&format!("| {} | {} |\n", md_escape(&path), md_escape(&value)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report::new(
            "classify",
            RunConfig::default(),
            serde_json::json!({ "m": "1/2", "values": ["0/1", "1/2"], "nested": {"x": 1} }),
            Verdict::Pass,
        )
    }

    #[test]
    fn json_shape_is_stable() {
        let r = sample().render(OutputFormat::Json);
        let v: Value = serde_json::from_str(&r).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["command"], "classify");
        assert_eq!(v["config"]["level_cutoff"], "6/1");
        assert_eq!(v["config"]["i_max_formula"], 50);
        assert_eq!(v["verdict"], "pass");
        assert_eq!(v["payload"]["values"][1], "1/2");
        // identical invocations render identical bytes
        assert_eq!(r, sample().render(OutputFormat::Json));
    }

    #[test]
    fn csv_flattens_paths() {
        let r = sample().render(OutputFormat::Csv);
        assert!(r.starts_with("field,value\n"));
        assert!(r.contains("payload.values[1],1/2\n"));
        assert!(r.contains("payload.nested.x,1\n"));
        assert!(r.contains("verdict,pass\n"));
    }

    #[test]
    fn markdown_renders_a_table() {
        let r = sample().render(OutputFormat::Markdown);
        assert!(r.starts_with("# n2kit classify (pass)\n"));
        assert!(r.contains("| payload.m | 1/2 |"));
    }

    #[test]
    fn csv_escaping() {
        assert_eq!(csv_escape("plain"), "plain");
        assert_eq!(csv_escape("a,b"), "\"a,b\"");
        assert_eq!(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Verdict::Pass.exit_code(), 0);
        assert_eq!(Verdict::Fail.exit_code(), 1);
        assert_eq!(Verdict::Error.exit_code(), 2);
    }
}

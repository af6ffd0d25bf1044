use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use yb_core::rack::Rack;
use yb_core::Error;

use crate::Format;

pub const EXIT_MATH: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }

    pub fn math(message: impl Into<String>) -> Self {
        Failure { code: EXIT_MATH, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::Dimension(_)
            | Error::EmptyRack
            | Error::EntryOutOfRange { .. }
            | Error::NotRightInvertible { .. }
            | Error::NotSelfDistributive { .. }
            | Error::NotIdempotent { .. }
            | Error::NotConjugationClosed { .. }
            | Error::GroupCapExceeded { .. }
            | Error::SizeLimit(_)
            | Error::OutOfRange(_) => EXIT_INPUT,
            _ => EXIT_MATH,
        };
        Failure { code, message: e.to_string() }
    }
}

pub fn rack_hash(rack: &Rack) -> String {
    hex::encode(Sha256::digest(rack.canonical_string().as_bytes()))
}

/// Collects one command's output and prints it in the chosen format.
pub struct Report {
    format: Format,
    lines: Vec<String>,
    fields: Map<String, Value>,
}

impl Report {
    pub fn new(format: Format, command: &str) -> Self {
        let mut fields = Map::new();
        fields.insert("command".into(), json!(command));
        fields.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        Report { format, lines: vec![format!("yb {} {command}", env!("CARGO_PKG_VERSION"))], fields }
    }

    pub fn rack(&mut self, rack: &Rack) -> &mut Self {
        let hash = rack_hash(rack);
        self.lines.push(format!("rack: size {}, sha256 {hash}", rack.size()));
        self.fields.insert("rack".into(), json!({ "size": rack.size(), "sha256": hash }));
        self
    }

    pub fn field(&mut self, key: &str, label: &str, value: Value) -> &mut Self {
        let shown = match &value {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        self.lines.push(format!("{label}: {shown}"));
        self.fields.insert(key.into(), value);
        self
    }

    /// A value too large for a one-line human summary.
    pub fn block(&mut self, key: &str, label: &str, human: String, value: Value) -> &mut Self {
        self.lines.push(format!("{label}:\n{human}"));
        self.fields.insert(key.into(), value);
        self
    }

    pub fn print(&self) {
        match self.format {
            Format::Human => println!("{}", self.lines.join("\n")),
            Format::Json => println!("{}", serde_json::to_string_pretty(&Value::Object(self.fields.clone())).expect("json")),
        }
    }
}

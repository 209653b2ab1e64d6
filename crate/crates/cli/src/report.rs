use std::path::Path;
use std::time::Duration;

use rmx_core::{AxiomCheck, AxiomReport};
use serde::Serialize;
use serde_json::Value;

use crate::Failure;

/// Everything a command produced. Timing stays out of the JSON so that
/// identical inputs give identical bytes.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub group: String,
    pub items: Vec<AxiomCheck>,
    pub data: Value,
    pub exit_code: i32,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl RunReport {
    pub fn new(command: Vec<String>, group: String) -> Self {
        RunReport {
            command,
            group,
            items: Vec::new(),
            data: Value::Null,
            exit_code: 0,
            elapsed: Duration::ZERO,
        }
    }

    pub fn push_report(&mut self, prefix: &str, report: AxiomReport) {
        for mut item in report.axioms {
            if !prefix.is_empty() {
                item.name = format!("{prefix}: {}", item.name);
            }
            self.items.push(item);
        }
    }

    pub fn push(&mut self, item: AxiomCheck) {
        self.items.push(item);
    }

    pub fn finish(&mut self) {
        self.exit_code = if self.items.iter().all(|i| i.pass) { 0 } else { 1 };
    }

    /// Pretty JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("serializable");
        serde_json::to_string_pretty(&value).expect("serializable") + "\n"
    }

    pub fn write_json(&self, path: &Path) -> Result<(), Failure> {
        std::fs::write(path, self.to_json())
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
    }

    pub fn print_failures(&self) {
        for item in self.items.iter().filter(|i| !i.pass) {
            match &item.witness {
                Some(w) => println!("  FAIL {} at {:?}", item.name, w),
                None => println!("  FAIL {}", item.name),
            }
        }
    }
}

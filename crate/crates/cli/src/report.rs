use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use sungeo::ComplexMatrix64;

/// One machine-readable result document per invocation.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub residuals: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Self {
            command: command.to_string(),
            inputs,
            outputs: Value::Null,
            residuals: BTreeMap::new(),
        }
    }

    pub fn outputs(mut self, outputs: Value) -> Self {
        self.outputs = outputs;
        self
    }

    pub fn residual(mut self, name: &str, value: f64) -> Self {
        self.residuals.insert(name.to_string(), value);
        self
    }
}

/// `[[[re, im], ...], ...]`, the same layout as the matrix file body.
pub fn matrix_value(a: &ComplexMatrix64) -> Value {
    serde_json::to_value(crate::io::MatrixFile::from_matrix(a).matrix)
        .expect("matrix entries are finite")
}

//! Matrix files: `{"n": 2, "matrix": [[[re, im], ...], ...]}`, row-major.
//!
//! Floats are written with 17 significant digits so that a write/read cycle
//! reproduces every `f64` bit for bit.

use std::fs;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::ser::{Formatter, Serializer};
use sungeo::{Complex, ComplexMatrix64};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub n: usize,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

impl MatrixFile {
    pub fn from_matrix(a: &ComplexMatrix64) -> Self {
        Self {
            n: a.order(),
            matrix: a
                .rows()
                .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix64, CliError> {
        if self.n == 0 {
            return Err(CliError::Invalid("matrix order must be at least 1".into()));
        }
        if self.matrix.len() != self.n || self.matrix.iter().any(|r| r.len() != self.n) {
            return Err(CliError::Invalid(format!(
                "declared n = {} does not match the matrix shape",
                self.n
            )));
        }
        let a = ComplexMatrix64::from_fn(self.n, |i, j| {
            let [re, im] = self.matrix[i][j];
            Complex::new(re, im)
        });
        if !a.is_finite() {
            return Err(CliError::Invalid("matrix has non-finite entries".into()));
        }
        Ok(a)
    }
}

/// Writes every float as `{:.16e}`, which is exact for `f64`.
#[derive(Debug, Clone, Copy, Default)]
pub struct FullPrecision;

impl Formatter for FullPrecision {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

/// Single-line JSON with full-precision floats.
pub fn to_json<S: Serialize>(value: &S) -> String {
    let mut out = Vec::new();
    let mut ser = Serializer::with_formatter(&mut out, FullPrecision);
    value
        .serialize(&mut ser)
        .expect("serializing plain data cannot fail");
    String::from_utf8(out).expect("serde_json emits UTF-8")
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix64, CliError> {
    let file: MatrixFile = serde_json::from_str(text)
        .map_err(|e| CliError::Invalid(format!("malformed matrix file: {e}")))?;
    file.to_matrix()
}

pub fn read_matrix(path: &Path) -> Result<ComplexMatrix64, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
    parse_matrix(&text)
}

pub fn write_matrix(path: &Path, a: &ComplexMatrix64) -> Result<(), CliError> {
    let mut text = to_json(&MatrixFile::from_matrix(a));
    text.push('\n');
    fs::write(path, text)
        .map_err(|e| CliError::Invalid(format!("cannot write {}: {e}", path.display())))
}

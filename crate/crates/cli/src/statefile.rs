//! JSON state files.
//!
//! A pure state is `{"kind": "pure", "amplitudes": [[re, im], ...]}` with eight
//! pairs ordered by basis index `4i + 2j + k` (qubit A most significant). A
//! mixed state is `{"kind": "mixed", "matrix": [[[re, im], ...], ...]}`, an 8×8
//! row-major array. Numbers are written in shortest round-trip form, so writing
//! and reading a state gives back the same bits.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use tripartite_core::linalg::ComplexMatrix;
use tripartite_core::states::{DensityMatrix, PureState, State, StateError};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum StateFile {
    Pure { amplitudes: Vec<[f64; 2]> },
    Mixed { matrix: Vec<Vec<[f64; 2]>> },
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

impl StateFile {
    pub fn from_state(state: &State) -> Self {
        match state {
            State::Pure(psi) => StateFile::Pure { amplitudes: psi.amplitudes().iter().map(|&z| pair(z)).collect() },
            State::Mixed(rho) => {
                let m = rho.matrix();
                StateFile::Mixed {
                    matrix: (0..m.rows()).map(|r| (0..m.cols()).map(|c| pair(m[(r, c)])).collect()).collect(),
                }
            }
        }
    }

    /// Validate into a state.
    pub fn into_state(self) -> Result<State, Rejected> {
        match self {
            StateFile::Pure { amplitudes } => {
                let n = amplitudes.len();
                let a: [[f64; 2]; 8] =
                    amplitudes.try_into().map_err(|_| Rejected::Shape(format!("expected 8 amplitudes, found {n}")))?;
                Ok(State::Pure(PureState::new(a.map(|[re, im]| Complex64::new(re, im)))?))
            }
            StateFile::Mixed { matrix } => {
                if matrix.len() != 8 || matrix.iter().any(|row| row.len() != 8) {
                    return Err(Rejected::Shape("expected an 8x8 matrix".to_string()));
                }
                let m = ComplexMatrix::from_fn(8, 8, |r, c| Complex64::new(matrix[r][c][0], matrix[r][c][1]));
                Ok(State::Mixed(DensityMatrix::three_qubit(m)?))
            }
        }
    }
}

/// Why a well-formed JSON document is not a state.
#[derive(Debug)]
pub enum Rejected {
    Shape(String),
    Invalid(StateError),
}

impl From<StateError> for Rejected {
    fn from(e: StateError) -> Self {
        Rejected::Invalid(e)
    }
}

pub fn parse_state(text: &str, path: &Path) -> Result<State, CliError> {
    let file: StateFile =
        serde_json::from_str(text).map_err(|source| CliError::Parse { path: path.to_path_buf(), source })?;
    file.into_state().map_err(|e| match e {
        Rejected::Shape(detail) => CliError::Shape { path: path.to_path_buf(), detail },
        Rejected::Invalid(source) => CliError::InvalidState { path: path.to_path_buf(), source },
    })
}

pub fn read_state(path: &Path) -> Result<State, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })?;
    parse_state(&text, path)
}

pub fn state_to_json(state: &State) -> String {
    serde_json::to_string_pretty(&StateFile::from_state(state)).expect("plain numbers always serialize")
}

pub fn write_state(path: &Path, state: &State) -> Result<(), CliError> {
    let mut text = state_to_json(state);
    text.push('\n');
    fs::write(path, text).map_err(|source| CliError::Write { path: path.to_path_buf(), source })
}

//! Line-oriented stack description.
//!
//! ```text
//! # quarter-wave MgF2-like layer
//! ambient 1.0
//! substrate 1.0
//! wavelength 600
//! angle 0
//! pol s
//! layer 1.5 100
//! ```
//!
//! `#` starts a comment. Layers keep file order. `substrate` defaults to the
//! ambient index, `angle` to 0 and `pol` to `s`.

use std::fmt;

use crate::stack::{Layer, LayerStack, Polarization};

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parsed stack file.
#[derive(Debug, Clone, PartialEq)]
pub struct StackFile {
    pub stack: LayerStack,
}

impl StackFile {
    pub fn parse(text: &str) -> Result<StackFile, ParseError> {
        let mut ambient = None;
        let mut substrate = None;
        let mut wavelength = None;
        let mut angle = 0.0;
        let mut pol = Polarization::S;
        let mut layers = Vec::new();

        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let err = |message: String| ParseError { line: line_no, message };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            let key = words.next().unwrap_or_default();
            let args: Vec<&str> = words.collect();
            let number = |s: &str| -> Result<f64, ParseError> {
                match s.parse::<f64>() {
                    Ok(v) if v.is_finite() => Ok(v),
                    _ => Err(err(format!("expected a finite decimal, got `{s}`"))),
                }
            };
            let expect = |n: usize| -> Result<(), ParseError> {
                if args.len() == n {
                    Ok(())
                } else {
                    Err(err(format!("`{key}` takes {n} value(s), got {}", args.len())))
                }
            };
            match key {
                "ambient" => {
                    expect(1)?;
                    ambient = Some(number(args[0])?);
                }
                "substrate" => {
                    expect(1)?;
                    substrate = Some(number(args[0])?);
                }
                "wavelength" => {
                    expect(1)?;
                    wavelength = Some(number(args[0])?);
                }
                "angle" => {
                    expect(1)?;
                    angle = number(args[0])?;
                }
                "pol" => {
                    expect(1)?;
                    pol = match args[0] {
                        "s" | "S" => Polarization::S,
                        "p" | "P" => Polarization::P,
                        other => return Err(err(format!("polarization must be s or p, got `{other}`"))),
                    };
                }
                "layer" => {
                    expect(2)?;
                    layers.push(Layer::new(number(args[0])?, number(args[1])?));
                }
                other => return Err(err(format!("unknown keyword `{other}`"))),
            }
        }

        let missing = |what: &str| ParseError {
            line: 0,
            message: format!("missing `{what}` line"),
        };
        let ambient_index = ambient.ok_or_else(|| missing("ambient"))?;
        Ok(StackFile {
            stack: LayerStack {
                ambient_index,
                layers,
                substrate_index: substrate.unwrap_or(ambient_index),
                wavelength: wavelength.ok_or_else(|| missing("wavelength"))?,
                incidence_angle_deg: angle,
                polarization: pol,
            },
        })
    }
}

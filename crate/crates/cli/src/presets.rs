//! Parameter presets behind the `table` and `potential` subcommands,
//! mirroring the captions of the bundled reference tables.

use tptdirac_core::{ModelParams, SymmetryLimit};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TablePreset {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
}

impl TablePreset {
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "table1" => Some(Self::T1),
            "table2" => Some(Self::T2),
            "table3" => Some(Self::T3),
            "table4" => Some(Self::T4),
            "table5" => Some(Self::T5),
            "table6" => Some(Self::T6),
            "table7" => Some(Self::T7),
            "table8" => Some(Self::T8),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::T1 => "table1",
            Self::T2 => "table2",
            Self::T3 => "table3",
            Self::T4 => "table4",
            Self::T5 => "table5",
            Self::T6 => "table6",
            Self::T7 => "table7",
            Self::T8 => "table8",
        }
    }

    /// Base parameters per the table captions. Sweep tables (5-8) fill the
    /// swept field (mass or C) per row; `tensor` likewise comes from the
    /// row for tables 1-4.
    pub fn base_params(&self) -> ModelParams {
        let p = |limit, v1: f64, v2: f64, c: f64| {
            ModelParams::new(1.0, v1, v2, 0.01, 0.0, limit, c).unwrap()
        };
        match self {
            Self::T1 => p(SymmetryLimit::PSpin, -0.002, 0.003, -5.0),
            Self::T2 => p(SymmetryLimit::PSpin, -0.002, 0.003, 0.0),
            Self::T3 => p(SymmetryLimit::Spin, 0.002, -0.003, 5.0),
            Self::T4 => p(SymmetryLimit::Spin, 0.002, -0.003, 0.0),
            Self::T5 => {
                let mut q = p(SymmetryLimit::PSpin, -0.002, 0.003, -5.0);
                q.tensor = 1.0;
                q
            }
            Self::T6 => {
                let mut q = p(SymmetryLimit::Spin, 0.002, -0.003, 5.0);
                q.tensor = 1.0;
                q
            }
            Self::T7 => {
                let mut q = p(SymmetryLimit::PSpin, -0.002, 0.003, -5.0);
                q.tensor = 1.0;
                q
            }
            // caption prints the pspin-signed wells for this spin sweep;
            // kept verbatim, the comparison documents the consequences
            Self::T8 => {
                let mut q = p(SymmetryLimit::Spin, -0.002, 0.003, 5.0);
                q.tensor = 1.0;
                q
            }
        }
    }
}

/// Potential-figure presets: (V1, V2, alpha).
pub fn potential_preset(name: &str) -> Option<(f64, f64, f64)> {
    match name {
        "fig1" => Some((5.0, 3.0, 0.02)),
        "fig2" => Some((5.0, 3.0, 0.03)),
        _ => None,
    }
}

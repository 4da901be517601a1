//! Built-in benchmark functions.

use clap::ValueEnum;

/// Canned objective functions exercising the solver's hard cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// Five simple roots, two of them 1e-5 apart.
    Eq5,
    /// Two double roots; no sign change anywhere.
    Eq7,
    /// A triple root next to a simple root 1e-5 away.
    Eq8,
    /// Triple pair, close simple pair, and a double root all at once.
    Eq10,
}

impl Preset {
    pub fn text(self) -> &'static str {
        match self {
            Preset::Eq5 => "(x-0.5)*(x-0.50001)*(x-4)*(x-4.05)*(x-9.3)",
            Preset::Eq7 => "(x-3)^2*(x-4)^2",
            Preset::Eq8 => "(x-0.5)^3*(x-0.50001)*(x-1)",
            Preset::Eq10 => "(x-0.5)^3*(x-0.50001)^3*(x-4.0)*(x-4.0001)*(x-4.2)^2",
        }
    }

    pub fn domain(self) -> (f64, f64) {
        match self {
            Preset::Eq5 => (0.0, 10.0),
            Preset::Eq7 => (0.0, 5.0),
            Preset::Eq8 => (0.0, 1.5),
            Preset::Eq10 => (0.0, 4.5),
        }
    }
}

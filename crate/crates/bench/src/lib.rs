//! Shared fixtures for the solver benchmarks.

/// Five simple roots on [0, 10], two of them 1e-5 apart.
pub fn five_roots(x: f64) -> f64 {
    (x - 0.5) * (x - 0.50001) * (x - 4.0) * (x - 4.05) * (x - 9.3)
}

/// Two double roots on [0, 5]; no sign change anywhere.
pub fn double_roots(x: f64) -> f64 {
    (x - 3.0) * (x - 3.0) * (x - 4.0) * (x - 4.0)
}

/// Triple pair, close simple pair, and a double root on [0, 4.5].
pub fn mixed_roots(x: f64) -> f64 {
    (x - 0.5).powi(3) * (x - 0.50001).powi(3) * (x - 4.0) * (x - 4.0001) * (x - 4.2) * (x - 4.2)
}

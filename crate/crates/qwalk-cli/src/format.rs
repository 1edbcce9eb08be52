//! Float formatting for the CSV outputs.
//!
//! All floating-point columns use a fixed 17-significant-digit scientific
//! form so that identical runs produce byte-identical files and every f64
//! survives a round trip through the text.

/// Render a float with 17 significant digits, enough to reconstruct it exactly.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

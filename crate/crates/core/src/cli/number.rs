//! Canonical decimal rendering for trajectory files.

/// Shortest round-trip decimal for `x`, always with a fractional part or an
/// exponent so it reads back as a float.
///
/// Magnitudes in `[1e-4, 1e16)` are written positionally; anything smaller
/// or larger uses exponent notation (`1.5e-7`). Zero of either sign is `0.0`.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0.0".to_owned();
    }
    if x.is_nan() {
        return "nan".to_owned();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_owned();
    }
    let a = x.abs();
    if (1e-4..1e16).contains(&a) {
        let s = x.to_string();
        if s.contains('.') {
            s
        } else {
            s + ".0"
        }
    } else {
        format!("{x:e}")
    }
}

pub(crate) fn format_list(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| format_number(*v)).collect();
    format!("[{}]", parts.join(", "))
}

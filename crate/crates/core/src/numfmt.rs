//! Fixed significant-digit formatting for diff-stable numeric output.

/// Formats `x` with `digits` significant digits in plain decimal
/// notation. Exact zero prints as `0`.
///
/// The digit count is resolved through the decimal exponent, so
/// `format_significant(2443.6586, 9)` gives `"2443.65865"` and
/// `format_significant(0.001234, 3)` gives `"0.00123"`.
pub fn format_significant(x: f64, digits: usize) -> String {
    assert!(digits >= 1, "need at least one significant digit");
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:e}", x.abs());
    let exp: i32 = sci
        .split('e')
        .nth(1)
        .and_then(|e| e.parse().ok())
        .expect("{:e} always carries an exponent");
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(0.0, 9), "0");
        assert_eq!(format_significant(-0.0, 9), "0");
        assert_eq!(format_significant(2443.6586491, 9), "2443.65865");
        assert_eq!(format_significant(2.8284271247461903, 9), "2.82842712");
        assert_eq!(format_significant(0.001234, 3), "0.00123");
        assert_eq!(format_significant(-13.416407864998739, 9), "-13.4164079");
        assert_eq!(
            format_significant(1728.0 * std::f64::consts::SQRT_2, 10),
            "2443.761036"
        );
        assert_eq!(format_significant(123456.0, 3), "123456");
        assert_eq!(format_significant(5.0, 4), "5.000");
    }
}

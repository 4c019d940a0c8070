/// Twelve significant digits, fixed-point for ordinary magnitudes and
/// scientific otherwise. Trailing zeros are kept so columns stay aligned.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    // Let the formatter do the rounding, then read the exponent back.
    let sci = format!("{x:.11e}");
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if (-5..12).contains(&exp) {
        format!("{x:.*}", (11 - exp) as usize)
    } else {
        sci
    }
}

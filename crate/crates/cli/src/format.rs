//! Fixed 15-significant-digit number formatting shared by CSV and JSON
//! output.

/// Significant digits in every number the CLI prints.
pub const SIG_DIGITS: usize = 15;

/// `%.15g`-style formatting: fixed notation for decimal exponents in
/// `[-5, 15)`, scientific otherwise, trailing zeros trimmed. `-0` prints as
/// `0`.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..SIG_DIGITS as i32).contains(&exp) {
        let decimals = (SIG_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}{:02}", trim_zeros(mantissa.to_string()), if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    t.to_string()
}

/// Rounds to 15 significant digits, so serializers that print the shortest
/// round-trip representation emit at most 15 digits.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    fmt_num(x).parse().unwrap_or(x)
}

//! Number formatting shared by every CLI report.

/// Significant digits in printed output.
pub const SIG_DIGITS: usize = 9;

/// Sentinel written in place of a value that has no feasible solution.
pub const INFEASIBLE: &str = "INFEASIBLE";

/// Formats `x` with [`SIG_DIGITS`] significant digits in the style of C's
/// `%.9g`: fixed notation for decimal exponents in `[-4, 9)`, scientific
/// otherwise, trailing zeros removed.
pub fn num(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..SIG_DIGITS as i32).contains(&exp) {
        let decimals = (SIG_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim_zeros(mantissa), sign, exp.abs())
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Radians printed as degrees.
pub fn deg(rad: f64) -> String {
    num(rad.to_degrees())
}

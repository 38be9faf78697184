//! Fixed-width-free number printing with 12 significant digits.
//!
//! Matches C's `%.12g`: scientific notation (lowercase `e`, no padding of
//! the exponent) when the decimal exponent is below −4 or at least 12,
//! plain decimal otherwise, trailing zeros removed.

use num_complex::Complex64;

const DIGITS: usize = 12;

pub fn num(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.*e}", DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent digits");
    if exp < -4 || exp >= DIGITS as i32 {
        format!("{}e{}", trim(mantissa), exp)
    } else {
        let decimals = (DIGITS as i32 - 1 - exp) as usize;
        trim(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `a + bi` / `a - bi`.
pub fn complex(z: Complex64) -> String {
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    if im < 0.0 {
        format!("{} - {}i", num(z.re), num(-im))
    } else {
        format!("{} + {}i", num(z.re), num(im))
    }
}

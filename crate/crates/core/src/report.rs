//! Output metadata and decimal formatting of exact ratios.

use serde::Serialize;

pub const TOOL_NAME: &str = "skcodes";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const INDEXING: &str = "one-based nongaps: rho_1 = 0, k = n - l";

/// Header written at the top of every emitted file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunMeta {
    pub tool: String,
    pub version: String,
    pub field_modulus: Option<String>,
    pub indexing: String,
    pub seed: u64,
}

impl RunMeta {
    pub fn new(field_modulus: Option<String>, seed: u64) -> Self {
        RunMeta {
            tool: TOOL_NAME.to_string(),
            version: TOOL_VERSION.to_string(),
            field_modulus,
            indexing: INDEXING.to_string(),
            seed,
        }
    }

    /// `# key: value` comment lines for CSV output.
    pub fn csv_header(&self) -> String {
        let mut out = format!("# tool: {} {}\n", self.tool, self.version);
        out.push_str(&format!(
            "# field modulus: {}\n",
            self.field_modulus.as_deref().unwrap_or("none")
        ));
        out.push_str(&format!("# indexing: {}\n", self.indexing));
        out.push_str(&format!("# seed: {}\n", self.seed));
        out
    }
}

/// `num / den` rounded half-up to `sig` significant digits, in plain decimal notation.
pub fn format_ratio_sig(num: u64, den: u64, sig: u32) -> String {
    assert!(den > 0 && sig > 0);
    if num == 0 {
        return format!("0.{}", "0".repeat(sig as usize - 1));
    }
    // Find e with 10^(sig-1) <= num * 10^e / den < 10^sig.
    let (num, den) = (num as u128, den as u128);
    let lo = 10u128.pow(sig - 1);
    let mut e: i32 = 0;
    let scaled = |e: i32| -> u128 {
        if e >= 0 {
            num * 10u128.pow(e as u32) / den
        } else {
            num / (den * 10u128.pow((-e) as u32))
        }
    };
    while scaled(e) < lo {
        e += 1;
    }
    while scaled(e) >= lo * 10 {
        e -= 1;
    }
    // Round half up at this scale.
    let (n2, d2) = if e >= 0 {
        (num * 10u128.pow(e as u32), den)
    } else {
        (num, den * 10u128.pow((-e) as u32))
    };
    let mut digits = (2 * n2 + d2) / (2 * d2);
    if digits >= lo * 10 {
        digits /= 10;
        e -= 1;
    }
    if e <= 0 {
        let int = digits * 10u128.pow((-e) as u32);
        return int.to_string();
    }
    let s = digits.to_string();
    let e = e as usize;
    if e >= s.len() {
        format!("0.{}{}", "0".repeat(e - s.len()), s)
    } else {
        let (a, b) = s.split_at(s.len() - e);
        format!("{a}.{b}")
    }
}

/// True when a printed decimal (either '.' or ',' as separator) lies within
/// one unit of its last printed place of `num / den`.
pub fn agrees_with_printed(num: u64, den: u64, printed: &str) -> bool {
    let normalized = printed.trim().replace(',', ".");
    let (int_part, frac_part) = match normalized.split_once('.') {
        Some((a, b)) => (a, b),
        None => (normalized.as_str(), ""),
    };
    let places = frac_part.len() as u32;
    let Ok(int) = int_part.parse::<u128>() else {
        return false;
    };
    let frac = if frac_part.is_empty() {
        0
    } else {
        match frac_part.parse::<u128>() {
            Ok(v) => v,
            Err(_) => return false,
        }
    };
    let scale = 10u128.pow(places);
    let printed_scaled = int * scale + frac; // printed = printed_scaled / scale
    // |printed_scaled / scale - num / den| < 1 / scale
    //   <=> |printed_scaled * den - num * scale| < den
    let a = printed_scaled * den as u128;
    let b = num as u128 * scale;
    a.abs_diff(b) < den as u128
}

//! Number formatting shared by every command.

/// Values below this magnitude are eigensolver round-off around an exact zero.
pub const ZERO_SNAP: f64 = 1e-12;

/// Rounds to 12 significant digits and prints the shortest decimal that
/// reproduces the rounded value. Magnitudes below [`ZERO_SNAP`] print as `0`.
pub fn sig12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("scientific notation round-trips");
    if rounded.abs() < ZERO_SNAP {
        "0".to_string()
    } else {
        rounded.to_string()
    }
}

/// Fixed three decimals, the precision of the human-readable tables.
pub fn fixed3(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(sig12(2.5), "2.5");
        assert_eq!(sig12(2.4999999999999996), "2.5");
        assert_eq!(sig12(0.8999999999999999), "0.9");
        assert_eq!(sig12(25.000000000000004), "25");
        assert_eq!(sig12(-1e-17), "0");
        assert_eq!(sig12(-0.0), "0");
        assert_eq!(sig12(3e-16), "0");
        assert_eq!(sig12(1.0 / 3.0), "0.333333333333");
        assert_eq!(sig12(-4.898979485566356), "-4.89897948557");
        assert_eq!(sig12(1.23456789012345e-7), "0.000000123456789012");
    }

    #[test]
    fn three_decimals() {
        assert_eq!(fixed3(0.24966), "0.250");
        assert_eq!(fixed3(-0.0001), "0.000");
        assert_eq!(fixed3(25.0), "25.000");
    }
}

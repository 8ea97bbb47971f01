use num_bigint::BigInt;

use crate::error::{Error, Result};

/// `Π num_i! / Π den_i!` evaluated as a product of telescoped ranges, pairing
/// the largest factorials so no intermediate factorial is formed.
pub fn factorial_ratio(num: &[usize], den: &[usize]) -> f64 {
    let mut num = num.to_vec();
    let mut den = den.to_vec();
    num.sort_unstable_by(|a, b| b.cmp(a));
    den.sort_unstable_by(|a, b| b.cmp(a));
    let len = num.len().max(den.len());
    num.resize(len, 0);
    den.resize(len, 0);
    let mut r = 1.0;
    for (&a, &b) in num.iter().zip(&den) {
        if a >= b {
            r *= ((b + 1)..=a).map(|i| i as f64).product::<f64>();
        } else {
            r /= ((a + 1)..=b).map(|i| i as f64).product::<f64>();
        }
    }
    r
}

fn check_order(l: i64, h: i64, s: i64) -> Result<()> {
    if l >= s && s >= h && h >= -l {
        Ok(())
    } else {
        Err(Error::OrderingViolation { l, s, h })
    }
}

/// `Π_{j=h}^{s-1} [l(l+1) - j(j+1)]`
pub fn product_formula_f(l: i64, h: i64, s: i64) -> Result<BigInt> {
    check_order(l, h, s)?;
    Ok((h..s).map(|j| BigInt::from(l * (l + 1) - j * (j + 1))).product())
}

/// `Π_{j=h+1}^{s} [l(l+1) - j(j-1)]`
pub fn product_formula_g(l: i64, h: i64, s: i64) -> Result<BigInt> {
    check_order(l, h, s)?;
    Ok(((h + 1)..=s).map(|j| BigInt::from(l * (l + 1) - j * (j - 1))).product())
}

/// `(l-h)! (l+s)! / ((l+h)! (l-s)!)` as two telescoped integer products.
pub fn product_formula_closed(l: i64, h: i64, s: i64) -> Result<BigInt> {
    check_order(l, h, s)?;
    let lower: BigInt = ((l - s + 1)..=(l - h)).map(BigInt::from).product();
    let upper: BigInt = ((l + h + 1)..=(l + s)).map(BigInt::from).product();
    Ok(lower * upper)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(product_formula_f(2, 0, 2).unwrap(), BigInt::from(24));
        assert_eq!(product_formula_f(5, 3, 3).unwrap(), BigInt::from(1));
        assert!(product_formula_f(2, 1, 0).is_err());
        assert!(product_formula_g(2, -3, 0).is_err());
    }

    #[test]
    fn factorial_ratio_matches_direct() {
        // 7! 3! / (5! 4!) = 5040 * 6 / (120 * 24)
        assert!((factorial_ratio(&[7, 3], &[5, 4]) - 10.5).abs() < 1e-13);
        assert_eq!(factorial_ratio(&[], &[3]), 1.0 / 6.0);
    }
}

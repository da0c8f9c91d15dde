//! The Koszul sign rule for permuting graded symbols.

use crate::GradedError;

/// A sign `±1`.
pub type Sign = i32;

/// `(-1)^e`.
pub fn parity_sign(e: i64) -> Sign {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Sign picked up when reversing `w_1 ⊗ … ⊗ w_n` to `w_n ⊗ … ⊗ w_1`:
/// `(-1)^ε` with `ε = Σ_{i<j} |w_i||w_j|`.
pub fn reversal_sign(degrees: &[i64]) -> Sign {
    let mut eps = 0i64;
    let mut suffix: i64 = degrees.iter().sum();
    for &d in degrees {
        suffix -= d;
        eps += (d & 1) * (suffix & 1);
    }
    parity_sign(eps)
}

/// Sign picked up when moving the last factor of `w_1 ⊗ … ⊗ w_n` to the
/// front: `(-1)^{|w_n| (|w_1| + … + |w_{n-1}|)}`.
pub fn rotation_sign(degrees: &[i64]) -> Result<Sign, GradedError> {
    let (last, init) = degrees.split_last().ok_or(GradedError::EmptyWord)?;
    Ok(parity_sign(last * init.iter().sum::<i64>()))
}

/// Sign of the Koszul rule for moving a symbol of degree `a` past symbols of
/// total degree `b`.
pub fn koszul(a: i64, b: i64) -> Sign {
    parity_sign(a * b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reversal_examples() {
        assert_eq!(reversal_sign(&[1, 1]), -1);
        assert_eq!(reversal_sign(&[0, 5]), 1);
        assert_eq!(reversal_sign(&[1, 1, 1]), -1);
        assert_eq!(reversal_sign(&[]), 1);
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(rotation_sign(&[1, 1]).unwrap(), -1);
        assert_eq!(rotation_sign(&[1, 1, 1]).unwrap(), 1);
        assert_eq!(rotation_sign(&[2, 3]).unwrap(), 1);
        assert!(rotation_sign(&[]).is_err());
    }

    #[test]
    fn negative_degrees() {
        assert_eq!(reversal_sign(&[-1, 3]), -1);
        assert_eq!(rotation_sign(&[-1, -1]).unwrap(), -1);
    }
}

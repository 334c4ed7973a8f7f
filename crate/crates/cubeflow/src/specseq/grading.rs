use num_rational::Ratio;

use crate::{Error, Result};

/// The numerical data of a cobordism `W : Y₋ → Y₊` entering `ι`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CobordismData {
    pub chi: i64,
    pub sigma: i64,
    pub b1_in: i64,
    pub b1_out: i64,
}

/// `ι(W) = ½(χ + σ + b₁(Y₊) − b₁(Y₋))`.
pub fn iota(w: CobordismData) -> Ratio<i64> {
    Ratio::new(w.chi + w.sigma + w.b1_out - w.b1_in, 2)
}

/// `δ̌ = gr̃ − (ι(W_{I∞}) + w(I)) + l mod 2`; for `l = 0` this is `gr̃ mod 2`.
pub fn delta_check(gr: Ratio<i64>, iota_to_final: Ratio<i64>, weight: usize, l: usize) -> Result<u8> {
    let x = if l == 0 { gr } else { gr - iota_to_final - Ratio::from_integer(weight as i64) + Ratio::from_integer(l as i64) };
    if !x.is_integer() {
        return Err(Error::Input(format!("δ̌ = {x} is not an integer")));
    }
    Ok(x.to_integer().rem_euclid(2) as u8)
}

/// `δ − ½(σ + ν) mod 2` for a Khovanov generator in bigrading `(t, q)`.
pub fn kh_delta_parity(q: i64, t: i64, sigma: i64, nullity: usize) -> u8 {
    let twice = q - 2 * t - sigma - nullity as i64;
    debug_assert_eq!(twice.rem_euclid(2), 0, "δ and (σ+ν)/2 differ by an integer");
    (twice / 2).rem_euclid(2) as u8
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iota_examples() {
        let c = |chi, sigma, b1_in, b1_out| CobordismData { chi, sigma, b1_in, b1_out };
        assert_eq!(iota(c(0, 0, 3, 3)), Ratio::from_integer(0));
        assert_eq!(iota(c(1, 0, 2, 1)), Ratio::from_integer(0));
        assert_eq!(iota(c(1, 0, 1, 2)), Ratio::from_integer(1));
        assert_eq!(iota(c(1, 0, 0, 0)), Ratio::new(1, 2));
    }

    #[test]
    fn delta_check_reduces_to_grading_without_crossings() {
        assert_eq!(delta_check(Ratio::from_integer(3), Ratio::from_integer(0), 0, 0).unwrap(), 1);
        assert_eq!(delta_check(Ratio::from_integer(3), Ratio::from_integer(1), 1, 2).unwrap(), 1);
        assert!(delta_check(Ratio::new(1, 2), Ratio::from_integer(0), 0, 1).is_err());
    }

    #[test]
    fn adjacent_generators_have_opposite_parity() {
        // d raises t by one and keeps q, so δ drops by one.
        for q in [-4, 0, 2, 6] {
            for t in -2..3 {
                assert_ne!(kh_delta_parity(q, t, 2, 0), kh_delta_parity(q, t + 1, 2, 0));
            }
        }
    }
}

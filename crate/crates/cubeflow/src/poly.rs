use std::collections::BTreeMap;
use std::fmt;

/// Laurent polynomial with integer coefficients in a single variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    terms: BTreeMap<i64, i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coef: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coef);
        p
    }

    pub fn add_term(&mut self, exp: i64, coef: i64) {
        if coef == 0 {
            return;
        }
        let c = self.terms.entry(exp).or_insert(0);
        *c += coef;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Laurent {
        let mut out = Laurent::zero();
        for (e, c) in self.terms() {
            out.add_term(e, c * k);
        }
        out
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Laurent {
        let mut out = Laurent::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Substitute `x ↦ x^k` (k may be negative). Fails softly only on k = 0.
    pub fn substitute_power(&self, k: i64) -> Laurent {
        let mut out = Laurent::zero();
        for (e, c) in self.terms() {
            out.add_term(e * k, c);
        }
        out
    }

    /// Divide every exponent by `k`; returns `None` if some exponent is not a multiple.
    pub fn exact_div_exponents(&self, k: i64) -> Option<Laurent> {
        let mut out = Laurent::zero();
        for (e, c) in self.terms() {
            if e % k != 0 {
                return None;
            }
            out.add_term(e / k, c);
        }
        Some(out)
    }

    /// Evaluate at the fourth root of unity `i`, returning the Gaussian integer (re, im).
    pub fn eval_at_i(&self) -> (i64, i64) {
        let (mut re, mut im) = (0i64, 0i64);
        for (e, c) in self.terms() {
            match e.rem_euclid(4) {
                0 => re += c,
                1 => im += c,
                2 => re -= c,
                _ => im -= c,
            }
        }
        (re, im)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.terms().map(|(_, c)| c).sum()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Laurent {
        let mut p = Laurent::zero();
        for &(e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    pub fn to_pairs(&self) -> Vec<(i64, i64)> {
        self.terms().collect()
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            if i > 0 {
                s.push(' ');
            }
            s.push_str(sign);
            if i > 0 {
                s.push(' ');
            }
            let a = c.abs();
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else if a == 1 {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{a}{mono}"));
            }
        }
        s
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("q"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_evaluation() {
        let p = Laurent::from_pairs(&[(2, 1), (6, 1), (8, -1)]);
        assert_eq!(p.eval_at_i(), (-3, 0));
        assert_eq!(p.eval_at_one(), 1);
        let sq = Laurent::from_pairs(&[(-1, 1), (1, 1)]).pow(2);
        assert_eq!(sq, Laurent::from_pairs(&[(-2, 1), (0, 2), (2, 1)]));
        assert_eq!(p.exact_div_exponents(2).unwrap().coeff(4), -1);
        assert!(p.shift(1).exact_div_exponents(2).is_none());
    }
}

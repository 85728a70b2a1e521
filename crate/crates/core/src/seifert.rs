//! Brieskorn triples and their normalized Seifert invariants.

use alloc::format;
use core::fmt;

use num_integer::Integer;

use crate::{Error, Result};

/// A pairwise coprime triple `(p, q, r)` naming the Brieskorn sphere
/// `Σ(p,q,r)`, stored in ascending order.
///
/// Unit components are allowed; any triple containing a 1 is the
/// three-sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrieskornTriple {
    p: u64,
    q: u64,
    r: u64,
}

impl BrieskornTriple {
    pub fn new(p: i64, q: i64, r: i64) -> Result<Self> {
        for v in [p, q, r] {
            if v < 1 {
                return Err(Error::NonPositive(v));
            }
        }
        let mut t = [p as u64, q as u64, r as u64];
        t.sort_unstable();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if t[i].gcd(&t[j]) > 1 {
                return Err(Error::NotPairwiseCoprime(t[i], t[j]));
            }
        }
        Ok(BrieskornTriple { p: t[0], q: t[1], r: t[2] })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn as_array(&self) -> [u64; 3] {
        [self.p, self.q, self.r]
    }

    /// True when some component is 1, i.e. the triple denotes `S³`.
    pub fn is_degenerate(&self) -> bool {
        self.p == 1
    }
}

impl fmt::Display for BrieskornTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ({},{},{})", self.p, self.q, self.r)
    }
}

/// Checks `p, q, r ≥ 1` and pairwise coprimality, returning the sorted triple.
pub fn validate_triple(p: i64, q: i64, r: i64) -> Result<BrieskornTriple> {
    BrieskornTriple::new(p, q, r)
}

/// One exceptional fiber `(α, β)` with `0 < β < α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Leg {
    pub alpha: i64,
    pub beta: i64,
}

/// Seifert invariants `(b; (α₁,β₁), (α₂,β₂), (α₃,β₃))` of a
/// Brieskorn sphere, oriented as the boundary of its negative-definite
/// plumbing:
///
/// `b·α₁α₂α₃ + β₁α₂α₃ + β₂α₁α₃ + β₃α₁α₂ = −1`, with `0 < βᵢ < αᵢ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeifertData {
    b: i64,
    legs: [Leg; 3],
}

impl SeifertData {
    pub fn new(b: i64, legs: [Leg; 3]) -> Result<Self> {
        for leg in &legs {
            if leg.alpha < 2 || leg.beta <= 0 || leg.beta >= leg.alpha {
                return Err(Error::InvalidSeifertData(format!(
                    "leg ({}, {}) violates 0 < β < α",
                    leg.alpha, leg.beta
                )));
            }
        }
        let s = SeifertData { b, legs };
        match s.euler_numerator() {
            Some(-1) => Ok(s),
            Some(v) => Err(Error::InvalidSeifertData(format!(
                "Seifert equation evaluates to {v}, not -1"
            ))),
            None => Err(Error::Overflow),
        }
    }

    pub fn central_weight(&self) -> i64 {
        self.b
    }

    pub fn legs(&self) -> &[Leg; 3] {
        &self.legs
    }

    pub fn alphas(&self) -> [i64; 3] {
        [self.legs[0].alpha, self.legs[1].alpha, self.legs[2].alpha]
    }

    /// `b·α₁α₂α₃ + Σ βᵢ·∏_{j≠i} αⱼ`, i.e. `α₁α₂α₃` times the rational Euler
    /// number `b + Σ βᵢ/αᵢ`.
    pub fn euler_numerator(&self) -> Option<i128> {
        let a: [i128; 3] = [
            self.legs[0].alpha as i128,
            self.legs[1].alpha as i128,
            self.legs[2].alpha as i128,
        ];
        let product = a[0].checked_mul(a[1])?.checked_mul(a[2])?;
        let mut sum = (self.b as i128).checked_mul(product)?;
        for (i, leg) in self.legs.iter().enumerate() {
            let others = product / a[i];
            sum = sum.checked_add((leg.beta as i128).checked_mul(others)?)?;
        }
        Some(sum)
    }
}

/// Normalized Seifert invariants of a non-degenerate Brieskorn sphere.
///
/// Modulo `αᵢ` the defining equation reads `βᵢ·∏_{j≠i}αⱼ ≡ −1`, which pins
/// each `βᵢ ∈ (0, αᵢ)`; `b` is then the exact quotient.
pub fn seifert_invariants(t: &BrieskornTriple) -> Result<SeifertData> {
    if t.is_degenerate() {
        return Err(Error::DegenerateTriple);
    }
    let a = t.as_array().map(|x| x as i128);
    let product = a[0]
        .checked_mul(a[1])
        .and_then(|x| x.checked_mul(a[2]))
        .ok_or(Error::Overflow)?;
    let mut legs = [Leg { alpha: 0, beta: 0 }; 3];
    let mut partial: i128 = 0;
    for i in 0..3 {
        let others = product / a[i];
        let inv = mod_inverse(others.rem_euclid(a[i]), a[i]);
        let beta = (-inv).rem_euclid(a[i]);
        partial += beta * others;
        legs[i] = Leg { alpha: a[i] as i64, beta: beta as i64 };
    }
    // b·P = −1 − partial, exact by construction.
    let b = (-1 - partial) / product;
    debug_assert_eq!((-1 - partial) % product, 0);
    SeifertData::new(i64::try_from(b).map_err(|_| Error::Overflow)?, legs)
}

fn mod_inverse(x: i128, m: i128) -> i128 {
    let g = x.extended_gcd(&m);
    debug_assert_eq!(g.gcd, 1);
    g.x.rem_euclid(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(t: &BrieskornTriple) -> alloc::vec::Vec<(i64, [i64; 3])> {
        let a = t.as_array().map(|x| x as i64);
        let mut out = alloc::vec::Vec::new();
        for b in -3..=0 {
            for b1 in 1..a[0] {
                for b2 in 1..a[1] {
                    for b3 in 1..a[2] {
                        let lhs = b * a[0] * a[1] * a[2]
                            + b1 * a[1] * a[2]
                            + b2 * a[0] * a[2]
                            + b3 * a[0] * a[1];
                        if lhs == -1 {
                            out.push((b, [b1, b2, b3]));
                        }
                    }
                }
            }
        }
        out
    }

    fn legs(s: &SeifertData) -> [(i64, i64); 3] {
        s.legs().map(|l| (l.alpha, l.beta))
    }

    #[test]
    fn validate_sorts_and_accepts_units() {
        let t = validate_triple(19, 2, 7).unwrap();
        assert_eq!(t.as_array(), [2, 7, 19]);
        assert!(validate_triple(1, 1, 1).unwrap().is_degenerate());
        assert_eq!(validate_triple(2, 4, 5), Err(Error::NotPairwiseCoprime(2, 4)));
        assert_eq!(validate_triple(0, 3, 5), Err(Error::NonPositive(0)));
        assert_eq!(validate_triple(2, 3, -7), Err(Error::NonPositive(-7)));
    }

    #[test]
    fn known_invariants() {
        let e8 = seifert_invariants(&validate_triple(2, 3, 5).unwrap()).unwrap();
        assert_eq!(e8.central_weight(), -2);
        assert_eq!(legs(&e8), [(2, 1), (3, 2), (5, 4)]);

        let s = seifert_invariants(&validate_triple(2, 7, 19).unwrap()).unwrap();
        assert_eq!(s.central_weight(), -1);
        assert_eq!(legs(&s), [(2, 1), (7, 2), (19, 4)]);

        let s = seifert_invariants(&validate_triple(3, 5, 19).unwrap()).unwrap();
        assert_eq!(s.central_weight(), -1);
        assert_eq!(legs(&s), [(3, 1), (5, 2), (19, 5)]);
    }

    #[test]
    fn brute_force_finds_exactly_the_computed_solution() {
        for (p, q, r) in [(2, 3, 5), (2, 7, 19), (3, 5, 19), (2, 3, 7), (2, 11, 31), (3, 4, 5), (5, 7, 11)] {
            let t = validate_triple(p, q, r).unwrap();
            let s = seifert_invariants(&t).unwrap();
            let found = brute_force(&t);
            assert_eq!(found.len(), 1, "{t}");
            let betas = s.legs().map(|l| l.beta);
            assert_eq!(found[0], (s.central_weight(), betas));
        }
    }

    #[test]
    fn degenerate_is_rejected() {
        let t = validate_triple(1, 2, 3).unwrap();
        assert_eq!(seifert_invariants(&t), Err(Error::DegenerateTriple));
    }

    #[test]
    fn constructor_checks_equation() {
        let legs = [Leg { alpha: 2, beta: 1 }, Leg { alpha: 3, beta: 1 }, Leg { alpha: 5, beta: 1 }];
        assert!(matches!(SeifertData::new(-1, legs), Err(Error::InvalidSeifertData(_))));
        let bad = [Leg { alpha: 2, beta: 2 }, Leg { alpha: 3, beta: 1 }, Leg { alpha: 5, beta: 1 }];
        assert!(matches!(SeifertData::new(-1, bad), Err(Error::InvalidSeifertData(_))));
    }
}

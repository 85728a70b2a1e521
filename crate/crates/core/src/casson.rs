//! Casson invariants from two independent sides: the Milnor-fiber
//! lattice count of a Brieskorn sphere and the surgery formula on twist
//! knots.

use alloc::vec::Vec;

use crate::seifert::BrieskornTriple;
use crate::{Error, Result};

/// An integer Laurent polynomial `Σ coeffs[i]·t^(low + i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn new(low: i32, coeffs: Vec<i64>) -> Self {
        LaurentPoly { low, coeffs }
    }

    pub fn low_degree(&self) -> i32 {
        self.low
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().enumerate().map(|(i, &c)| (self.low as i64 + i as i64, c))
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// `Δ″(1) = Σ c_k·k(k−1)`.
    pub fn second_derivative_at_one(&self) -> i64 {
        self.terms().map(|(k, c)| c * k * (k - 1)).sum()
    }

    /// `Δ(t) = Δ(t⁻¹)`.
    pub fn is_symmetric(&self) -> bool {
        let mut t: Vec<(i64, i64)> = self.terms().filter(|&(_, c)| c != 0).collect();
        let mut mirrored: Vec<(i64, i64)> = t.iter().map(|&(k, c)| (-k, c)).collect();
        t.sort_unstable();
        mirrored.sort_unstable();
        t == mirrored
    }
}

/// The twist knot `K_n`: `K_0` the unknot, `K_1` the figure-eight, `K_2`
/// the stevedore.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwistKnot {
    pub n: i64,
}

impl TwistKnot {
    /// `n·t − (2n+1) + n·t⁻¹`.
    pub fn alexander(&self) -> LaurentPoly {
        let n = self.n;
        LaurentPoly::new(-1, alloc::vec![n, -(2 * n + 1), n])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LatticeSignature {
    pub sigma_plus: u64,
    pub sigma_minus: u64,
    pub sigma_zero: u64,
}

impl LatticeSignature {
    pub fn sigma(&self) -> i64 {
        self.sigma_plus as i64 - self.sigma_minus as i64
    }
}

/// Counts `(i,j,k)` with `0<i<p, 0<j<q, 0<k<r` by where
/// `i/p + j/q + k/r` falls mod 2: `(0,1)` positive, `(1,2)` negative,
/// integers zero. Works with the numerator over `pqr`. A triple with a unit
/// component has an empty index range.
pub fn milnor_fiber_signature(t: &BrieskornTriple) -> Result<LatticeSignature> {
    let [p, q, r] = t.as_array().map(|x| x as u128);
    let d = p.checked_mul(q).and_then(|x| x.checked_mul(r)).ok_or(Error::Overflow)?;
    let two_d = 2 * d;
    let (qr, pr, pq) = (q * r, p * r, p * q);
    let mut out = LatticeSignature::default();
    for i in 1..p {
        for j in 1..q {
            let mut num = (i * qr + j * pr) % two_d;
            for _ in 1..r {
                num += pq;
                if num >= two_d {
                    num -= two_d;
                }
                if num == 0 || num == d {
                    out.sigma_zero += 1;
                } else if num < d {
                    out.sigma_plus += 1;
                } else {
                    out.sigma_minus += 1;
                }
            }
        }
    }
    Ok(out)
}

/// `λ(Σ(p,q,r)) = σ/8`.
pub fn casson_brieskorn(t: &BrieskornTriple) -> Result<i64> {
    let sigma = milnor_fiber_signature(t)?.sigma();
    if sigma % 8 != 0 {
        return Err(Error::NotDivisibleBy8(sigma));
    }
    Ok(sigma / 8)
}

/// `λ(S³_{1/m}(K_n)) = (m/2)·Δ″(1)`.
pub fn casson_surgery_twist(n: i64, m: i64) -> i64 {
    m * TwistKnot { n }.alexander().second_derivative_at_one() / 2
}

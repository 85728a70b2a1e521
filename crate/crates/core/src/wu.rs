//! Spherical Wu classes and the Neumann–Siebenmann invariant.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed};

use num_bigint::BigInt;

use crate::matrix::{leading_principal_minors, IntMatrix};
use crate::plumbing::{brieskorn_plumbing, intersection_matrix, PlumbingGraph};
use crate::seifert::BrieskornTriple;
use crate::{Error, Result};

/// The characteristic vector with `{0,1}` coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WuClass {
    coords: Vec<u8>,
}

impl WuClass {
    pub fn coords(&self) -> &[u8] {
        &self.coords
    }

    pub fn as_integers(&self) -> Vec<i64> {
        self.coords.iter().map(|&c| c as i64).collect()
    }

    pub fn square(&self, m: &IntMatrix) -> Option<i64> {
        let w = self.as_integers();
        i64::try_from(m.bilinear(&w, &w)?).ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MubarResult {
    pub signature: i64,
    pub wu_square: i64,
    pub mubar: i64,
    pub obstructed: bool,
}

impl MubarResult {
    /// The value for `S³`.
    pub const TRIVIAL: MubarResult = MubarResult { signature: 0, wu_square: 0, mubar: 0, obstructed: false };
}

struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    fn zeros(bits: usize) -> Self {
        BitRow { words: vec![0; bits.div_ceil(64)] }
    }
    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }
    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }
    fn xor(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }
}

/// Solves `A·w ≡ diag(A) (mod 2)` by Gauss–Jordan elimination over GF(2).
/// The augmented column sits at bit `n`.
pub fn wu_class(m: &IntMatrix) -> Result<WuClass> {
    let n = m.dim();
    let mut rows: Vec<BitRow> = (0..n)
        .map(|i| {
            let mut r = BitRow::zeros(n + 1);
            for j in 0..n {
                if m.get(i, j).rem_euclid(2) == 1 {
                    r.set(j);
                }
            }
            if m.get(i, i).rem_euclid(2) == 1 {
                r.set(n);
            }
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| rows[r].get(col)).ok_or(Error::EvenDeterminant)?;
        rows.swap(col, pivot);
        let (head, rest) = rows.split_at_mut(col);
        let (p, tail) = rest.split_first_mut().expect("pivot row exists");
        for r in head.iter_mut().chain(tail.iter_mut()) {
            if r.get(col) {
                r.xor(p);
            }
        }
    }
    Ok(WuClass { coords: rows.iter().map(|r| r.get(n) as u8).collect() })
}

/// `μ̄ = (σ − w·w)/8` for a negative-definite unimodular form.
pub fn mubar_of_matrix(m: &IntMatrix) -> Result<MubarResult> {
    // The last leading minor is the determinant, and a definite form has
    // signature −n, so one elimination settles all three.
    let minors = leading_principal_minors(m);
    let det = minors.last().cloned().unwrap_or_else(BigInt::one);
    if !det.abs().is_one() {
        return Err(Error::NotUnimodular(det));
    }
    let definite = minors
        .iter()
        .enumerate()
        .all(|(k, d)| if k % 2 == 0 { d.is_negative() } else { d.is_positive() });
    if !definite {
        return Err(Error::NotNegativeDefinite);
    }
    let sigma = -(m.dim() as i64);
    let w = wu_class(m)?;
    let wu_square = w.square(m).ok_or(Error::Overflow)?;
    let diff = sigma - wu_square;
    if diff % 8 != 0 {
        return Err(Error::NotDivisibleBy8(diff));
    }
    let mubar = diff / 8;
    Ok(MubarResult { signature: sigma, wu_square, mubar, obstructed: mubar != 0 })
}

pub fn mubar(g: &PlumbingGraph) -> Result<MubarResult> {
    mubar_of_matrix(&intersection_matrix(g))
}

/// `μ̄` of a Brieskorn sphere via its canonical plumbing; `S³` gives 0.
pub fn brieskorn_mubar(t: &BrieskornTriple) -> Result<MubarResult> {
    if t.is_degenerate() {
        return Ok(MubarResult::TRIVIAL);
    }
    mubar(&brieskorn_plumbing(t)?)
}

pub fn obstructs_integral_ball(r: &MubarResult) -> bool {
    r.mubar != 0
}

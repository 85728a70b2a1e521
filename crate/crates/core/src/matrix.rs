//! Symmetric integer matrices and exact fraction-free linear algebra.
//!
//! Entries are stored as `i64`; every quantity derived from them
//! (determinants, minors, pivots) is computed exactly. Elimination first runs
//! in checked `i64`, then `i128` arithmetic, and restarts over `BigInt` if
//! an intermediate still overflows.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A symmetric `n × n` integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, entries: vec![0; n * n] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let mut m = IntMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            for (j, &v) in row.iter().enumerate() {
                m.entries[i * n + j] = v;
            }
        }
        if !m.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(m)
    }

    pub fn diagonal(values: &[i64]) -> Self {
        let mut m = IntMatrix::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.n + j] = v;
        self.entries[j * self.n + i] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn diag(&self) -> Vec<i64> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// The principal submatrix on `keep`, in the given order.
    pub fn principal(&self, keep: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::zeros(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                m.entries[a * keep.len() + b] = self.get(i, j);
            }
        }
        m
    }

    /// `xᵀ A y` over the integers.
    pub fn bilinear(&self, x: &[i64], y: &[i64]) -> Option<i128> {
        let mut acc: i128 = 0;
        for i in 0..self.n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.n {
                let term = (x[i] as i128)
                    .checked_mul(self.get(i, j) as i128)?
                    .checked_mul(y[j] as i128)?;
                acc = acc.checked_add(term)?;
            }
        }
        Some(acc)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Exact integer arithmetic used by the elimination routines. `None` means
/// the representation overflowed and the caller should retry wider.
trait Exact: Clone + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn zero() -> Self;
    fn one() -> Self;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn add(&self, o: &Self) -> Option<Self>;
    fn div_exact(&self, o: &Self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
    fn to_big(&self) -> BigInt;
}

macro_rules! exact_primitive {
    ($t:ty) => {
        impl Exact for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }
            fn zero() -> Self {
                0
            }
            fn one() -> Self {
                1
            }
            fn mul(&self, o: &Self) -> Option<Self> {
                self.checked_mul(*o)
            }
            fn sub(&self, o: &Self) -> Option<Self> {
                self.checked_sub(*o)
            }
            fn add(&self, o: &Self) -> Option<Self> {
                self.checked_add(*o)
            }
            fn div_exact(&self, o: &Self) -> Self {
                debug_assert_eq!(self % o, 0);
                self / o
            }
            fn is_zero(&self) -> bool {
                *self == 0
            }
            fn is_negative(&self) -> bool {
                *self < 0
            }
            fn neg(&self) -> Self {
                -*self
            }
            fn to_big(&self) -> BigInt {
                BigInt::from(*self)
            }
        }
    };
}

exact_primitive!(i64);
exact_primitive!(i128);

impl Exact for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

fn load<T: Exact>(m: &IntMatrix) -> Vec<Vec<T>> {
    (0..m.dim())
        .map(|i| m.row(i).iter().map(|&v| T::from_i64(v)).collect())
        .collect()
}

/// `(a·d − b·c) / prev`, exact.
fn bareiss_step<T: Exact>(a: &T, d: &T, b: &T, c: &T, prev: &T) -> Option<T> {
    Some(a.mul(d)?.sub(&b.mul(c)?)?.div_exact(prev))
}

fn det_with<T: Exact>(m: &IntMatrix) -> Option<T> {
    let n = m.dim();
    if n == 0 {
        return Some(T::one());
    }
    let mut a = load::<T>(m);
    let mut prev = T::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return Some(T::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = bareiss_step(&a[k][k], &a[i][j], &a[i][k], &a[k][j], &prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Some(if negate { d.neg() } else { d })
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    det_with::<i64>(m)
        .map(|d| d.to_big())
        .or_else(|| det_with::<i128>(m).map(|d| d.to_big()))
        .unwrap_or_else(|| det_with::<BigInt>(m).expect("BigInt arithmetic does not overflow"))
}

fn leading_minors_with<T: Exact>(m: &IntMatrix) -> Option<Vec<T>> {
    let n = m.dim();
    let mut a = load::<T>(m);
    let mut prev = T::one();
    let mut minors = Vec::with_capacity(n);
    for k in 0..n {
        minors.push(a[k][k].clone());
        if a[k][k].is_zero() {
            // Later minors are not reachable without pivoting; compute them
            // directly.
            for j in k + 1..n {
                let keep: Vec<usize> = (0..=j).collect();
                minors.push(det_with::<T>(&m.principal(&keep))?);
            }
            return Some(minors);
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = bareiss_step(&a[k][k], &a[i][j], &a[i][k], &a[k][j], &prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    Some(minors)
}

/// The leading principal minors `D₁, …, Dₙ`.
pub fn leading_principal_minors(m: &IntMatrix) -> Vec<BigInt> {
    fn widen<T: Exact>(v: Vec<T>) -> Vec<BigInt> {
        v.iter().map(Exact::to_big).collect()
    }
    leading_minors_with::<i64>(m)
        .map(widen)
        .or_else(|| leading_minors_with::<i128>(m).map(widen))
        .unwrap_or_else(|| leading_minors_with::<BigInt>(m).expect("BigInt arithmetic does not overflow"))
}

/// Sylvester's criterion: `(−1)ᵏ·Dₖ > 0` for every leading minor.
pub fn is_negative_definite(m: &IntMatrix) -> bool {
    leading_principal_minors(m)
        .iter()
        .enumerate()
        .all(|(k, d)| if k % 2 == 0 { Signed::is_negative(d) } else { Signed::is_positive(d) })
}

/// Pivots of a symmetric fraction-free elimination. Diagonal pivots are
/// chosen among the remaining indices; if every remaining diagonal entry
/// vanishes, a basis change `eᵢ ← eᵢ + eⱼ` on a nonzero off-diagonal entry
/// creates one. The returned values are the leading principal minors of a
/// matrix congruent to `m` over the integers.
fn symmetric_pivots_with<T: Exact>(m: &IntMatrix) -> Option<Result<Vec<T>>> {
    let n = m.dim();
    let mut a = load::<T>(m);
    let mut prev = T::one();
    let mut pivots = Vec::with_capacity(n);
    for k in 0..n {
        let chosen = match (k..n).find(|&i| !a[i][i].is_zero()) {
            Some(i) => i,
            None => {
                let pair = (k..n).find_map(|i| (i + 1..n).find(|&j| !a[i][j].is_zero()).map(|j| (i, j)));
                let Some((i, j)) = pair else {
                    return Some(Err(Error::SingularMatrix));
                };
                for c in k..n {
                    a[i][c] = a[i][c].add(&a[j][c])?;
                }
                for r in k..n {
                    a[r][i] = a[r][i].add(&a[r][j])?;
                }
                i
            }
        };
        if chosen != k {
            a.swap(k, chosen);
            for row in a.iter_mut() {
                row.swap(k, chosen);
            }
        }
        pivots.push(a[k][k].clone());
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = bareiss_step(&a[k][k], &a[i][j], &a[i][k], &a[k][j], &prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    Some(Ok(pivots))
}

/// Signature `#positive − #negative` eigenvalues of a nonsingular symmetric
/// matrix, by Jacobi's rule on the sign changes of `1, D₁, …, Dₙ`.
pub fn signature(m: &IntMatrix) -> Result<i64> {
    let negatives = if let Some(r) = symmetric_pivots_with::<i64>(m) {
        sign_changes(&r?)
    } else if let Some(r) = symmetric_pivots_with::<i128>(m) {
        sign_changes(&r?)
    } else {
        sign_changes(&symmetric_pivots_with::<BigInt>(m).expect("BigInt arithmetic does not overflow")?)
    };
    Ok(m.dim() as i64 - 2 * negatives as i64)
}

fn sign_changes<T: Exact>(pivots: &[T]) -> usize {
    let mut last_negative = false;
    let mut changes = 0;
    for p in pivots {
        let neg = p.is_negative();
        if neg != last_negative {
            changes += 1;
        }
        last_negative = neg;
    }
    changes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cofactor(rows: &[Vec<i64>]) -> i128 {
        let n = rows.len();
        if n == 0 {
            return 1;
        }
        let mut total = 0i128;
        for c in 0..n {
            if rows[0][c] == 0 {
                continue;
            }
            let minor: Vec<Vec<i64>> = rows[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect())
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            total += sign * rows[0][c] as i128 * cofactor(&minor);
        }
        total
    }

    fn e8() -> IntMatrix {
        // E8 tree: center 0; legs (1), (2,3), (4,5,6,7).
        let mut m = IntMatrix::diagonal(&[-2; 8]);
        for (i, j) in [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7)] {
            m.set(i, j, 1);
        }
        m
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(&IntMatrix::diagonal(&[-1])), BigInt::from(-1));
        assert_eq!(determinant(&IntMatrix::zeros(0)), BigInt::from(1));
        assert_eq!(determinant(&e8()), BigInt::from(1));
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(determinant(&m), BigInt::from(-1));
        assert_eq!(cofactor(&e8().rows()), 1);
    }

    #[test]
    fn from_rows_rejects_bad_input() {
        assert_eq!(
            IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]),
            Err(Error::NotSymmetric)
        );
        assert!(matches!(
            IntMatrix::from_rows(&[vec![1, 2], vec![3]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn signatures() {
        assert_eq!(signature(&IntMatrix::diagonal(&[-1])), Ok(-1));
        assert_eq!(signature(&IntMatrix::diagonal(&[1, -1])), Ok(0));
        assert_eq!(signature(&e8()), Ok(-8));
        let h = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(signature(&h), Ok(0));
        let km = IntMatrix::from_rows(&[vec![0, 1], vec![1, -1]]).unwrap();
        assert_eq!(signature(&km), Ok(0));
        assert_eq!(signature(&IntMatrix::diagonal(&[1, 0])), Err(Error::SingularMatrix));
        // zero diagonal on a 3x3 block
        let z = IntMatrix::from_rows(&[vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]).unwrap();
        assert_eq!(signature(&z), Err(Error::SingularMatrix));
        let z = IntMatrix::from_rows(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap();
        // eigenvalues 2, -1, -1
        assert_eq!(signature(&z), Ok(-1));
    }

    #[test]
    fn definiteness() {
        assert!(is_negative_definite(&IntMatrix::diagonal(&[-1])));
        assert!(is_negative_definite(&e8()));
        assert!(!is_negative_definite(&IntMatrix::diagonal(&[1, -1])));
        assert!(!is_negative_definite(&IntMatrix::diagonal(&[-1, 0])));
        assert!(is_negative_definite(&IntMatrix::zeros(0)));
    }

    #[test]
    fn bigint_fallback_matches_small_path() {
        // entries large enough that products of pivots overflow i128
        let big = 3_000_000_000i64;
        let mut m = IntMatrix::diagonal(&[big; 6]);
        for i in 0..5 {
            m.set(i, i + 1, 1);
        }
        let d = determinant(&m);
        let direct = det_with::<BigInt>(&m).unwrap();
        assert_eq!(d, direct);
        assert!(det_with::<i128>(&m).is_none());
        assert_eq!(signature(&m), Ok(6));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn sym(max_n: usize) -> impl Strategy<Value = IntMatrix> {
            (1..=max_n).prop_flat_map(|n| {
                proptest::collection::vec(-9i64..=9, n * n).prop_map(move |v| {
                    let mut m = IntMatrix::zeros(n);
                    for i in 0..n {
                        for j in i..n {
                            m.set(i, j, v[i * n + j]);
                        }
                    }
                    m
                })
            })
        }

        proptest! {
            #[test]
            fn determinant_matches_cofactor_expansion(m in sym(7)) {
                prop_assert_eq!(determinant(&m), BigInt::from(cofactor(&m.rows())));
            }

            #[test]
            fn leading_minors_match_cofactor(m in sym(6)) {
                let minors = leading_principal_minors(&m);
                for k in 0..m.dim() {
                    let keep: Vec<usize> = (0..=k).collect();
                    prop_assert_eq!(&minors[k], &BigInt::from(cofactor(&m.principal(&keep).rows())));
                }
            }

            #[test]
            fn signature_parity_and_bounds(m in sym(6)) {
                if let Ok(s) = signature(&m) {
                    let n = m.dim() as i64;
                    prop_assert!(s.abs() <= n);
                    prop_assert_eq!((n - s).rem_euclid(2), 0);
                    // det sign = (−1)^{#negative}
                    let neg = (n - s) / 2;
                    let d = determinant(&m);
                    prop_assert_eq!(Signed::is_negative(&d), neg % 2 == 1);
                } else {
                    prop_assert!(Zero::is_zero(&determinant(&m)));
                }
            }

            #[test]
            fn negated_definite_signature(m in sym(6)) {
                if is_negative_definite(&m) {
                    prop_assert_eq!(signature(&m), Ok(-(m.dim() as i64)));
                }
            }
        }
    }
}

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::matrix::{determinant, IntMatrix};
use crate::plumbing::{intersection_matrix, PlumbingGraph};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Labelled components with their linking matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FramedLink {
    labels: Vec<String>,
    matrix: IntMatrix,
}

impl FramedLink {
    pub fn empty() -> Self {
        FramedLink { labels: Vec::new(), matrix: IntMatrix::zeros(0) }
    }

    pub fn new(labels: Vec<String>, matrix: IntMatrix) -> Result<Self> {
        if labels.len() != matrix.dim() {
            return Err(Error::DimensionMismatch { expected: matrix.dim(), found: labels.len() });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(FramedLink { labels, matrix })
    }

    pub fn from_rows(labels: &[&str], rows: &[Vec<i64>]) -> Result<Self> {
        FramedLink::new(labels.iter().map(|s| s.to_string()).collect(), IntMatrix::from_rows(rows)?)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn framing(&self, label: &str) -> Result<i64> {
        let i = self.index_of(label)?;
        Ok(self.matrix.get(i, i))
    }

    pub fn determinant(&self) -> BigInt {
        determinant(&self.matrix)
    }

    /// Removes a `±1`-framed component `c`; the rest transforms as
    /// `M'[j][k] = M[j][k] − ε·M[j][c]·M[c][k]`.
    pub fn blow_down(&self, label: &str) -> Result<FramedLink> {
        let c = self.index_of(label)?;
        let eps = self.matrix.get(c, c);
        if eps != 1 && eps != -1 {
            return Err(Error::IllegalBlowdown { component: label.to_string(), framing: eps });
        }
        let keep: Vec<usize> = (0..self.len()).filter(|&i| i != c).collect();
        let mut m = IntMatrix::zeros(keep.len());
        for (a, &j) in keep.iter().enumerate() {
            for (b, &k) in keep.iter().enumerate().skip(a) {
                let v = self.matrix.get(j, c)
                    .checked_mul(self.matrix.get(c, k))
                    .and_then(|x| x.checked_mul(eps))
                    .and_then(|x| self.matrix.get(j, k).checked_sub(x))
                    .ok_or(Error::Overflow)?;
                m.set(a, b, v);
            }
        }
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        Ok(FramedLink { labels, matrix: m })
    }

    /// Slides `moving` over `over`: row and column of `moving` gain
    /// `sign` times those of `over`.
    pub fn slide(&self, moving: &str, over: &str, sign: Sign) -> Result<FramedLink> {
        let i = self.index_of(moving)?;
        let j = self.index_of(over)?;
        if i == j {
            return Err(Error::SameComponent(moving.to_string()));
        }
        let s = sign.value();
        let m = &self.matrix;
        let mut out = m.clone();
        for k in 0..self.len() {
            if k == i {
                continue;
            }
            let v = m.get(j, k).checked_mul(s).and_then(|x| x.checked_add(m.get(i, k)));
            out.set(i, k, v.ok_or(Error::Overflow)?);
        }
        let diag = m.get(i, j)
            .checked_mul(2 * s)
            .and_then(|x| x.checked_add(m.get(i, i)))
            .and_then(|x| x.checked_add(m.get(j, j)))
            .ok_or(Error::Overflow)?;
        out.set(i, i, diag);
        Ok(FramedLink { labels: self.labels.clone(), matrix: out })
    }

    /// Adds a `sign`-framed unknot `label` whose linking numbers with the
    /// existing components are `linking`. Existing entries change by
    /// `+ε·vvᵀ`, so blowing the new component down restores `self` exactly.
    pub fn blow_up(&self, sign: Sign, linking: &[i64], label: &str) -> Result<FramedLink> {
        let n = self.len();
        if linking.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: linking.len() });
        }
        if self.labels.iter().any(|l| l == label) {
            return Err(Error::DuplicateLabel(label.to_string()));
        }
        let eps = sign.value();
        let mut m = IntMatrix::zeros(n + 1);
        for j in 0..n {
            for k in j..n {
                let v = linking[j]
                    .checked_mul(linking[k])
                    .and_then(|x| x.checked_mul(eps))
                    .and_then(|x| x.checked_add(self.matrix.get(j, k)))
                    .ok_or(Error::Overflow)?;
                m.set(j, k, v);
            }
            m.set(j, n, linking[j]);
        }
        m.set(n, n, eps);
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        Ok(FramedLink { labels, matrix: m })
    }

    /// Same component set under new names, positionally.
    pub fn relabel(&self, labels: Vec<String>) -> Result<FramedLink> {
        FramedLink::new(labels, self.matrix.clone())
    }

    /// First difference from `other`, if any.
    pub fn diff(&self, other: &FramedLink) -> Option<String> {
        if self.labels != other.labels {
            return Some(format!("labels {:?} != {:?}", self.labels, other.labels));
        }
        for i in 0..self.len() {
            for j in 0..self.len() {
                let (a, b) = (self.matrix.get(i, j), other.matrix.get(i, j));
                if a != b {
                    return Some(format!(
                        "entry ({}, {}) is {a}, expected {b}",
                        self.labels[i], self.labels[j]
                    ));
                }
            }
        }
        None
    }
}

impl fmt::Display for FramedLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}", self.labels.join(", "), self.matrix)
    }
}

/// One component per vertex. On a three-legged star the center is `v0`
/// and the `j`-th vertex of leg `i` is `l{i}.{j}`; other trees use
/// `v{index}`.
pub fn plumbing_to_link(g: &PlumbingGraph) -> FramedLink {
    let n = g.vertex_count();
    let mut labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    if let Ok((center, legs)) = g.star_legs() {
        labels = alloc::vec![String::new(); n];
        labels[center] = "v0".to_string();
        for (i, leg) in legs.iter().enumerate() {
            for (j, &v) in leg.iter().enumerate() {
                labels[v] = format!("l{}.{}", i + 1, j + 1);
            }
        }
    }
    FramedLink { labels, matrix: intersection_matrix(g) }
}

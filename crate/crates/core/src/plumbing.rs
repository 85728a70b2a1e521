//! Star-shaped plumbing trees from Seifert invariants.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::matrix::IntMatrix;
use crate::seifert::{BrieskornTriple, Leg, SeifertData};
use crate::{Error, Result};

/// A weighted tree. Vertex `i` has weight `weights[i]`; `edges` are
/// unordered index pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingGraph {
    weights: Vec<i64>,
    edges: Vec<(usize, usize)>,
    origin: Option<Origin>,
}

/// What a canonical plumbing was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Origin {
    pub triple: Option<BrieskornTriple>,
    pub seifert: SeifertData,
}

impl PlumbingGraph {
    /// Checks that `edges` forms a spanning tree on the vertices (or that
    /// both are empty).
    pub fn new(weights: Vec<i64>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = weights.len();
        for &(a, b) in &edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange(v));
                }
            }
        }
        if n == 0 {
            return if edges.is_empty() {
                Ok(PlumbingGraph { weights, edges, origin: None })
            } else {
                Err(Error::NotATree)
            };
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree);
        }
        // union-find; a tree with n−1 edges has no cycle iff it is connected
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(Error::NotATree);
            }
            parent[ra] = rb;
        }
        Ok(PlumbingGraph { weights, edges, origin: None })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn origin(&self) -> Option<&Origin> {
        self.origin.as_ref()
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.weights.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// The legs of a three-legged star as weight chains read outward from
    /// the center, together with the center index.
    pub fn star_legs(&self) -> Result<(usize, [Vec<usize>; 3])> {
        let adj = self.neighbours();
        let mut centers = (0..self.weights.len()).filter(|&v| adj[v].len() == 3);
        let center = centers.next().ok_or(Error::NotStarShaped)?;
        if centers.next().is_some() || adj.iter().any(|a| a.len() > 3) {
            return Err(Error::NotStarShaped);
        }
        let mut legs: [Vec<usize>; 3] = Default::default();
        for (slot, &start) in legs.iter_mut().zip(&adj[center]) {
            let (mut prev, mut cur) = (center, start);
            loop {
                slot.push(cur);
                match adj[cur].iter().find(|&&x| x != prev) {
                    Some(&next) => {
                        prev = cur;
                        cur = next;
                    }
                    None => break,
                }
            }
        }
        Ok((center, legs))
    }
}

/// Hirzebruch–Jung expansion `a/b = c₁ − 1/(c₂ − … − 1/c_k)`, all `cᵢ ≥ 2`.
pub fn hj_expand(a: i64, b: i64) -> Result<Vec<i64>> {
    if b <= 0 || b >= a || a.gcd(&b) != 1 {
        return Err(Error::InvalidFraction { numerator: a, denominator: b });
    }
    let (mut a, mut b) = (a, b);
    let mut out = Vec::new();
    while b > 0 {
        let c = (a + b - 1) / b;
        out.push(c);
        (a, b) = (b, c * b - a);
    }
    Ok(out)
}

/// Folds `[c₁, …, c_k]` back to the reduced fraction `(a, b)`.
pub fn hj_evaluate(cs: &[i64]) -> Option<(i64, i64)> {
    let (&last, rest) = cs.split_last()?;
    let (mut num, mut den) = (last, 1i64);
    for &c in rest.iter().rev() {
        (num, den) = (c.checked_mul(num)?.checked_sub(den)?, num);
    }
    Some((num, den))
}

/// Center of weight `b`, then each leg `−c₁, …, −c_k` outward.
pub fn star_plumbing(s: &SeifertData) -> PlumbingGraph {
    star_plumbing_from(s, None)
}

/// The canonical plumbing of a non-degenerate Brieskorn sphere.
pub fn brieskorn_plumbing(t: &BrieskornTriple) -> Result<PlumbingGraph> {
    let s = crate::seifert::seifert_invariants(t)?;
    Ok(star_plumbing_from(&s, Some(*t)))
}

fn star_plumbing_from(s: &SeifertData, triple: Option<BrieskornTriple>) -> PlumbingGraph {
    let mut weights = vec![s.central_weight()];
    let mut edges = Vec::new();
    for leg in s.legs() {
        let cs = hj_expand(leg.alpha, leg.beta).expect("normalized legs expand");
        let mut prev = 0;
        for c in cs {
            let v = weights.len();
            weights.push(-c);
            edges.push((prev, v));
            prev = v;
        }
    }
    PlumbingGraph { weights, edges, origin: Some(Origin { triple, seifert: *s }) }
}

/// Diagonal = weights, 1 per edge.
pub fn intersection_matrix(g: &PlumbingGraph) -> IntMatrix {
    let mut m = IntMatrix::diagonal(&g.weights);
    for &(a, b) in &g.edges {
        m.set(a, b, 1);
    }
    m
}

/// Inverse of [`star_plumbing`]. Legs are returned in ascending `α`.
pub fn graph_to_seifert(g: &PlumbingGraph) -> Result<SeifertData> {
    let (center, legs) = g.star_legs()?;
    let mut out = [Leg { alpha: 0, beta: 0 }; 3];
    for (slot, leg) in out.iter_mut().zip(&legs) {
        let cs: Vec<i64> = leg.iter().map(|&v| -g.weights[v]).collect();
        if cs.iter().any(|&c| c < 2) {
            return Err(Error::NotStarShaped);
        }
        let (alpha, beta) = hj_evaluate(&cs).ok_or(Error::Overflow)?;
        *slot = Leg { alpha, beta };
    }
    out.sort_by_key(|l| l.alpha);
    SeifertData::new(g.weights[center], out)
}

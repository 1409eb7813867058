//! Token graphs F_k(G): vertices are the k-subsets of [n] (colex indexed),
//! edges join subsets whose symmetric difference is an edge of G. Also the
//! per-subset internal edge counts behind the diagonal operator D_k, and the
//! restriction vectors phi_u.

use crate::combinatorics::{binomial_usize, enumerate_subsets, rank_colex, KSubset};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::scalar::Scalar;

/// F_k(G), stored as an ordinary graph over colex indices (vertex i + 1
/// corresponds to the k-subset of rank i) so the whole Laplacian machinery
/// applies unchanged.
#[derive(Clone, Debug)]
pub struct TokenGraph {
    base: Graph,
    k: usize,
    graph: Graph,
}

impl TokenGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The token graph itself, over colex-indexed vertices.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

/// Builds F_k(G) by generating each edge once as a triple (eta, v, w) with
/// eta a (k-1)-subset and {v, w} an edge of G avoiding eta; the pair
/// {eta + v, eta + w} is then an edge of F_k(G). Every token edge {A, B}
/// arises from exactly one triple (eta = A intersect B), so no
/// deduplication pass is needed and the cost stays far below the all-pairs
/// subset comparison.
pub fn token_graph(g: &Graph, k: usize) -> Result<TokenGraph> {
    let n = g.n();
    if k > n {
        return Err(Error::InvalidParameter(format!(
            "k = {k} exceeds vertex count {n}"
        )));
    }
    let vertices = binomial_usize(n, k as i64)?;
    if k == 0 {
        return Ok(TokenGraph {
            base: g.clone(),
            k,
            graph: Graph::new(vertices, [])?,
        });
    }
    let mut edges = Vec::new();
    let mut in_eta = vec![false; n + 1];
    for eta in enumerate_subsets(n, k - 1) {
        for &v in eta.elements() {
            in_eta[v] = true;
        }
        for &(v, w) in g.edges() {
            if !in_eta[v] && !in_eta[w] {
                let a = rank_colex(&eta.with(v)?)?.rank as usize;
                let b = rank_colex(&eta.with(w)?)?.rank as usize;
                edges.push((a + 1, b + 1));
            }
        }
        for &v in eta.elements() {
            in_eta[v] = false;
        }
    }
    Ok(TokenGraph {
        base: g.clone(),
        k,
        graph: Graph::new(vertices, edges)?,
    })
}

/// Degree of a subset in the token graph of its size: the number of edges
/// of `g` with exactly one endpoint inside `sigma`.
pub fn token_degree(g: &Graph, sigma: &KSubset) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| sigma.contains(u) != sigma.contains(v))
        .count()
}

/// |E_sigma|: the number of edges of `g` with both endpoints in `sigma`.
pub fn internal_edges(g: &Graph, sigma: &KSubset) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| sigma.contains(u) && sigma.contains(v))
        .count()
}

/// Diagonal of the operator D_k: entry at colex index of sigma is
/// |E_sigma|, exact.
pub fn dk_diagonal(g: &Graph, k: usize) -> Result<Vec<i64>> {
    if k > g.n() {
        return Err(Error::InvalidParameter(format!(
            "k = {k} exceeds vertex count {}",
            g.n()
        )));
    }
    Ok(enumerate_subsets(g.n(), k)
        .iter()
        .map(|sigma| internal_edges(g, sigma) as i64)
        .collect())
}

/// Quadratic form <D_k phi, phi> = sum over sigma of |E_sigma| phi(sigma)^2.
pub fn dk_quadratic<T: Scalar>(dk: &[i64], phi: &[T]) -> Result<T> {
    if dk.len() != phi.len() {
        return Err(Error::DimensionMismatch {
            expected: dk.len(),
            got: phi.len(),
        });
    }
    let mut acc = T::zero();
    for (&c, &x) in dk.iter().zip(phi) {
        acc += T::from_int(c) * x * x;
    }
    Ok(acc)
}

/// Precomputed index plan for the restrictions phi -> phi_u over a fixed
/// (n, k): for each vertex u, the list of (tau index, sigma index) pairs
/// with u not in tau and sigma = tau + u.
pub struct Restrictor {
    n: usize,
    k: usize,
    dim_out: usize,
    map: Vec<Vec<(usize, usize)>>,
}

impl Restrictor {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidParameter(format!(
                "restriction requires 1 <= k <= n, got k = {k}, n = {n}"
            )));
        }
        let dim_out = binomial_usize(n, k as i64 - 1)?;
        let mut map = vec![Vec::new(); n + 1];
        for (tau_idx, tau) in enumerate_subsets(n, k - 1).iter().enumerate() {
            for u in 1..=n {
                if !tau.contains(u) {
                    let sigma_idx = rank_colex(&tau.with(u)?)?.rank as usize;
                    map[u].push((tau_idx, sigma_idx));
                }
            }
        }
        Ok(Self { n, k, dim_out, map })
    }

    pub fn dim_in(&self) -> Result<usize> {
        binomial_usize(self.n, self.k as i64)
    }

    /// phi_u(tau) = phi(tau + u) if u not in tau, else 0.
    pub fn restrict<T: Scalar>(&self, phi: &[T], u: usize) -> Result<Vec<T>> {
        if u < 1 || u > self.n {
            return Err(Error::InvalidParameter(format!(
                "vertex {u} outside [1, {}]",
                self.n
            )));
        }
        let expected = self.dim_in()?;
        if phi.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: phi.len(),
            });
        }
        let mut out = vec![T::zero(); self.dim_out];
        for &(tau_idx, sigma_idx) in &self.map[u] {
            out[tau_idx] = phi[sigma_idx];
        }
        Ok(out)
    }
}

/// One-shot restriction phi -> phi_u for a k-subset vector phi over [n].
pub fn restrict<T: Scalar>(phi: &[T], n: usize, k: usize, u: usize) -> Result<Vec<T>> {
    Restrictor::new(n, k)?.restrict(phi, u)
}

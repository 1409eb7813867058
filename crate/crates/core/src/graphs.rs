//! Simple undirected graphs on vertex set [1, n]: Laplacians, complements,
//! Cartesian products, and the named families used as extremal examples and
//! test corpora.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Simple undirected graph. Vertices are 1-based; edges are stored as
/// sorted (u, v) pairs with u < v, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, normalizing edge orientation and rejecting
    /// self-loops, duplicates, and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut norm: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {a}")));
            }
            if a < 1 || a > n || b < 1 || b > n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({a}, {b}) outside vertex range [1, {n}]"
                )));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter("duplicate edge".into()));
        }
        let mut adj = vec![Vec::new(); n + 1];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Ok(Self {
            n,
            edges: norm,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = (u.min(v), u.max(v));
        self.edges.binary_search(&(a, b)).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Number of connected components (union-find).
    pub fn components(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        let mut count = self.n;
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                count -= 1;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components() == 1
    }

    /// Terse descriptor for reports; callers with richer provenance
    /// (family spec, graph6 line) should override it.
    pub fn descriptor(&self) -> String {
        format!("n={},m={}", self.n, self.edges.len())
    }
}

/// Laplacian matrix L(G): degree on the diagonal, -1 on edges.
pub fn laplacian<T: Scalar>(g: &Graph) -> DenseMatrix<T> {
    let n = g.n();
    let mut m = DenseMatrix::zeros(n, n);
    for v in 1..=n {
        m[(v - 1, v - 1)] = T::from_int(g.degree(v) as i64);
    }
    for &(u, v) in g.edges() {
        m[(u - 1, v - 1)] = -T::one();
        m[(v - 1, u - 1)] = -T::one();
    }
    m
}

/// Laplacian quadratic form <L(G) phi, phi> = sum over edges (phi_u - phi_v)^2,
/// computed edge-wise so the integer lane stays exact.
pub fn laplacian_quadratic<T: Scalar>(g: &Graph, phi: &[T]) -> Result<T> {
    if phi.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: phi.len(),
        });
    }
    let mut acc = T::zero();
    for &(u, v) in g.edges() {
        let d = phi[u - 1] - phi[v - 1];
        acc += d * d;
    }
    Ok(acc)
}

/// Complement graph: edge set is C([n], 2) minus the edges of `g`.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            if !g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("complement of a valid graph is valid")
}

/// Cartesian product G x H on [n * n'], flattening (u, u') to
/// (u - 1) * n' + u' (row-major).
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let np = h.n();
    let flat = |u: usize, up: usize| (u - 1) * np + up;
    let mut edges = Vec::new();
    for u in 1..=g.n() {
        for &(a, b) in h.edges() {
            edges.push((flat(u, a), flat(u, b)));
        }
    }
    for &(a, b) in g.edges() {
        for up in 1..=np {
            edges.push((flat(a, up), flat(b, up)));
        }
    }
    Graph::new(g.n() * np, edges).expect("product of valid graphs is valid")
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Result<Graph> {
    require_positive(n, "n")?;
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges)
}

/// Path P_n with edges {i, i+1}.
pub fn path(n: usize) -> Result<Graph> {
    require_positive(n, "n")?;
    Graph::new(n, (1..n).map(|i| (i, i + 1)))
}

/// Cycle C_n, n >= 3.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle requires n >= 3, got {n}"
        )));
    }
    Graph::new(n, (1..n).map(|i| (i, i + 1)).chain([(1, n)]))
}

/// Union of m disjoint cliques of size s, numbered in consecutive blocks so
/// that complementation maps this family onto `complete_multipartite`
/// vertex-for-vertex.
pub fn disjoint_cliques(m: usize, s: usize) -> Result<Graph> {
    require_positive(m, "m")?;
    require_positive(s, "s")?;
    let mut edges = Vec::new();
    for block in 0..m {
        let base = block * s;
        for i in 1..=s {
            for j in (i + 1)..=s {
                edges.push((base + i, base + j));
            }
        }
    }
    Graph::new(m * s, edges)
}

/// Complete balanced m-partite graph with parts of size s, in the same
/// consecutive-block numbering as `disjoint_cliques`.
pub fn complete_multipartite(m: usize, s: usize) -> Result<Graph> {
    require_positive(m, "m")?;
    require_positive(s, "s")?;
    let n = m * s;
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            if (u - 1) / s != (v - 1) / s {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Erdos-Renyi G(n, p) drawn from a ChaCha8 stream seeded with `seed`.
/// Pairs (u, v), u < v are visited in lexicographic order and each consumes
/// exactly one f64 draw, so the construction is reproducible across
/// platforms.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    require_positive(n, "n")?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

fn require_positive(v: usize, name: &str) -> Result<()> {
    if v == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be positive")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laplacian_path3() {
        let g = path(3).unwrap();
        let l = laplacian::<i64>(&g);
        assert_eq!(l[(0, 0)], 1);
        assert_eq!(l[(1, 1)], 2);
        assert_eq!(l[(2, 2)], 1);
        assert_eq!(l[(0, 1)], -1);
        assert_eq!(l[(1, 2)], -1);
        assert_eq!(l[(0, 2)], 0);
        // row sums zero
        for i in 0..3 {
            assert_eq!(l.row(i).iter().sum::<i64>(), 0);
        }
    }

    #[test]
    fn laplacian_k4_is_4i_minus_j() {
        let l = laplacian::<i64>(&complete(4).unwrap());
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(l[(i, j)], if i == j { 3 } else { -1 });
            }
        }
    }

    #[test]
    fn laplacian_empty_graph_is_zero() {
        let g = Graph::new(5, []).unwrap();
        assert_eq!(laplacian::<i64>(&g).max_abs(), 0);
    }

    #[test]
    fn complement_involution() {
        for seed in 0..50 {
            let n = 2 + (seed as usize % 9);
            let g = erdos_renyi(n, 0.5, seed).unwrap();
            assert_eq!(complement(&complement(&g)), g);
        }
    }

    #[test]
    fn complement_of_two_triangles_is_k33() {
        let g = disjoint_cliques(2, 3).unwrap();
        assert_eq!(complement(&g), complete_multipartite(2, 3).unwrap());
    }

    #[test]
    fn complement_of_complete_is_empty() {
        assert_eq!(complement(&complete(6).unwrap()).edge_count(), 0);
    }

    #[test]
    fn product_k2_k2_is_c4() {
        let k2 = complete(2).unwrap();
        let p = cartesian_product(&k2, &k2);
        assert_eq!(p.n(), 4);
        assert_eq!(p.edge_count(), 4);
        // every vertex has degree 2 and the graph is connected: a 4-cycle
        for v in 1..=4 {
            assert_eq!(p.degree(v), 2);
        }
        assert!(p.is_connected());
    }

    #[test]
    fn product_p2_p3_is_grid() {
        let p = cartesian_product(&path(2).unwrap(), &path(3).unwrap());
        assert_eq!(p.n(), 6);
        assert_eq!(p.edge_count(), 7);
        // oracle: the 2x3 grid edges under (u-1)*3 + u' flattening
        let expected = Graph::new(6, [(1, 2), (2, 3), (4, 5), (5, 6), (1, 4), (2, 5), (3, 6)])
            .unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn product_degrees_add() {
        let g = erdos_renyi(5, 0.6, 7).unwrap();
        let h = erdos_renyi(4, 0.4, 11).unwrap();
        let p = cartesian_product(&g, &h);
        for u in 1..=g.n() {
            for up in 1..=h.n() {
                let f = (u - 1) * h.n() + up;
                assert_eq!(p.degree(f), g.degree(u) + h.degree(up));
            }
        }
    }

    #[test]
    fn disjoint_cliques_shape() {
        let g = disjoint_cliques(2, 3).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.components(), 2);
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        for seed in 0..20 {
            let g = erdos_renyi(8, 0.5, 100 + seed).unwrap();
            let total: usize = (1..=8).map(|v| g.degree(v)).sum();
            assert_eq!(total, 2 * g.edge_count());
        }
    }

    #[test]
    fn erdos_renyi_deterministic() {
        let a = erdos_renyi(9, 0.37, 42).unwrap();
        let b = erdos_renyi(9, 0.37, 42).unwrap();
        assert_eq!(a, b);
        let c = erdos_renyi(9, 0.37, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn invalid_parameters() {
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(1, 4)]).is_err());
        assert!(Graph::new(3, [(1, 2), (2, 1)]).is_err());
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
        assert!(erdos_renyi(4, 1.5, 0).is_err());
    }
}

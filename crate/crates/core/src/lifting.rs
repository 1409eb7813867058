//! Inclusion operators B between subset levels: the 0/1 matrix with
//! B[sigma, eta] = 1 iff eta is a subset of sigma. Applications are
//! matrix-free; the dense form exists for kernel computation and as a test
//! oracle. Also the exact commutation residual of B L_{k-1} = L_k B and
//! orthonormal bases of Ker(B^T).

use crate::combinatorics::{binomial_usize, enumerate_subsets, rank_colex, KSubset};
use crate::error::{Error, Result};
use crate::graphs::{laplacian, Graph};
use crate::matrix::{dot, norm2, DenseMatrix};
use crate::scalar::{Real, Scalar};
use crate::token::token_graph;

/// Matrix-free descriptor of the inclusion operator from ell-subsets to
/// k-subsets of [n].
#[derive(Clone, Copy, Debug)]
pub struct LiftOperator {
    n: usize,
    k: usize,
    ell: usize,
}

impl LiftOperator {
    pub fn new(n: usize, k: usize, ell: usize) -> Result<Self> {
        if ell > k || k > n {
            return Err(Error::InvalidParameter(format!(
                "lift operator requires 0 <= ell <= k <= n, got n = {n}, k = {k}, ell = {ell}"
            )));
        }
        Ok(Self { n, k, ell })
    }

    pub fn rows(&self) -> Result<usize> {
        binomial_usize(self.n, self.k as i64)
    }

    pub fn cols(&self) -> Result<usize> {
        binomial_usize(self.n, self.ell as i64)
    }

    /// (B x)(sigma) = sum of x(eta) over the ell-subsets eta of sigma.
    pub fn apply<T: Scalar>(&self, x: &[T]) -> Result<Vec<T>> {
        let cols = self.cols()?;
        if x.len() != cols {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: x.len(),
            });
        }
        let rows = self.rows()?;
        let mut out = vec![T::zero(); rows];
        self.for_each_incidence(|sigma_idx, eta_idx| {
            out[sigma_idx] += x[eta_idx];
        })?;
        Ok(out)
    }

    /// (B^T y)(eta) = sum of y(sigma) over the k-supersets sigma of eta.
    pub fn apply_transpose<T: Scalar>(&self, y: &[T]) -> Result<Vec<T>> {
        let rows = self.rows()?;
        if y.len() != rows {
            return Err(Error::DimensionMismatch {
                expected: rows,
                got: y.len(),
            });
        }
        let cols = self.cols()?;
        let mut out = vec![T::zero(); cols];
        self.for_each_incidence(|sigma_idx, eta_idx| {
            out[eta_idx] += y[sigma_idx];
        })?;
        Ok(out)
    }

    /// Visits every incident pair (sigma index, eta index) in a fixed
    /// order: sigma in colex order, and for each sigma its ell-subsets in
    /// lexicographic position order.
    fn for_each_incidence(&self, mut visit: impl FnMut(usize, usize)) -> Result<()> {
        let (k, ell) = (self.k, self.ell);
        for (sigma_idx, sigma) in enumerate_subsets(self.n, k).iter().enumerate() {
            let elems = sigma.elements();
            let mut pos: Vec<usize> = (0..ell).collect();
            loop {
                let eta = KSubset::new(pos.iter().map(|&p| elems[p]).collect(), self.n)?;
                let eta_idx = rank_colex(&eta)?.rank as usize;
                visit(sigma_idx, eta_idx);
                if !next_position_combination(&mut pos, k) {
                    break;
                }
            }
        }
        Ok(())
    }

    /// Dense materialization built directly from the defining containment
    /// test. Kept independent of the matrix-free application path so it can
    /// serve as its oracle.
    pub fn to_dense<T: Scalar>(&self) -> Result<DenseMatrix<T>> {
        let sigmas = enumerate_subsets(self.n, self.k);
        let etas = enumerate_subsets(self.n, self.ell);
        let mut m = DenseMatrix::zeros(sigmas.len(), etas.len());
        for (i, sigma) in sigmas.iter().enumerate() {
            for (j, eta) in etas.iter().enumerate() {
                if eta.elements().iter().all(|&v| sigma.contains(v)) {
                    m[(i, j)] = T::one();
                }
            }
        }
        Ok(m)
    }
}

/// Advances a lexicographic combination of `pos.len()` positions drawn
/// from 0..k. Returns false once the last combination has been visited.
fn next_position_combination(pos: &mut [usize], k: usize) -> bool {
    let ell = pos.len();
    let mut i = ell;
    while i > 0 {
        i -= 1;
        if pos[i] < k - (ell - i) {
            pos[i] += 1;
            for j in (i + 1)..ell {
                pos[j] = pos[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Max-abs entry of B L_{k-1} - L_k B in exact integer arithmetic;
/// the commutation identity makes this 0 for every graph.
pub fn commutation_residual(g: &Graph, k: usize) -> Result<i64> {
    let n = g.n();
    if k < 1 || k > n {
        return Err(Error::InvalidParameter(format!(
            "commutation requires 1 <= k <= n, got k = {k}"
        )));
    }
    let b = LiftOperator::new(n, k, k - 1)?;
    let lk_minus = laplacian::<i64>(token_graph(g, k - 1)?.graph());
    let lk = laplacian::<i64>(token_graph(g, k)?.graph());

    let rows = b.rows()?;
    let cols = b.cols()?;
    let mut worst: i64 = 0;
    for eta in 0..cols {
        // column eta of B L_{k-1} is B applied to column eta of L_{k-1}
        let left = b.apply(&lk_minus.column(eta))?;
        // column eta of L_k B is L_k applied to B e_eta
        let mut e = vec![0i64; cols];
        e[eta] = 1;
        let right = lk.mul_vec(&b.apply(&e)?)?;
        for i in 0..rows {
            worst = worst.max((left[i] - right[i]).abs());
        }
    }
    Ok(worst)
}

/// Default rank-decision tolerance: 1e-10 times the largest column norm.
fn default_rank_tol<R: Real>(b: &DenseMatrix<R>) -> R {
    let mut largest = R::zero();
    for j in 0..b.cols() {
        let nrm = norm2(&b.column(j));
        if nrm > largest {
            largest = nrm;
        }
    }
    let base = if largest > R::one() { largest } else { R::one() };
    R::from_f64(1e-10).unwrap() * base
}

/// Orthonormal basis of Ker(B^T_{n,k,k-1}), returned as the columns of an
/// C(n,k) x (C(n,k) - C(n,k-1)) matrix.
///
/// The columns of the dense B span Im(B); they are orthonormalized first
/// (their count must match the rank C(n,k-1), otherwise the rank theorem
/// has been violated and an internal-consistency error is raised), then the
/// basis is extended with standard basis vectors and the complement block
/// is returned. Orthogonalization order is fixed, so the result is
/// deterministic.
pub fn kernel_basis<R: Real>(n: usize, k: usize) -> Result<DenseMatrix<R>> {
    kernel_basis_with_tol(n, k, None)
}

pub fn kernel_basis_with_tol<R: Real>(
    n: usize,
    k: usize,
    rank_tol: Option<R>,
) -> Result<DenseMatrix<R>> {
    if k < 1 || k > n / 2 {
        return Err(Error::InvalidParameter(format!(
            "kernel basis requires 1 <= k <= n/2, got n = {n}, k = {k}"
        )));
    }
    let b = LiftOperator::new(n, k, k - 1)?;
    let dense: DenseMatrix<R> = b.to_dense()?;
    let rows = dense.rows();
    let cols = dense.cols();
    let tol = rank_tol.unwrap_or_else(|| default_rank_tol(&dense));

    let mut basis: Vec<Vec<R>> = Vec::with_capacity(rows);
    let mut accept = |mut v: Vec<R>, basis: &mut Vec<Vec<R>>| -> bool {
        // modified Gram-Schmidt, two passes
        for _ in 0..2 {
            for q in basis.iter() {
                let c = dot(q, &v);
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi = *vi - c * *qi;
                }
            }
        }
        let nrm = norm2(&v);
        if nrm <= tol {
            return false;
        }
        for vi in v.iter_mut() {
            *vi = *vi / nrm;
        }
        basis.push(v);
        true
    };

    let mut image_dim = 0usize;
    for j in 0..cols {
        if accept(dense.column(j), &mut basis) {
            image_dim += 1;
        }
    }
    if image_dim != cols {
        return Err(Error::InternalConsistency(format!(
            "B_{{{n},{k},{}}} has numeric rank {image_dim}, expected {cols}",
            k - 1
        )));
    }

    for i in 0..rows {
        if basis.len() == rows {
            break;
        }
        let mut e = vec![R::zero(); rows];
        e[i] = R::one();
        accept(e, &mut basis);
    }
    if basis.len() != rows {
        return Err(Error::InternalConsistency(format!(
            "orthonormal extension stalled at {} of {rows} vectors",
            basis.len()
        )));
    }

    let kernel = &basis[cols..];
    let mut p = DenseMatrix::zeros(rows, kernel.len());
    for (j, col) in kernel.iter().enumerate() {
        p.set_column(j, col);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;
    use crate::graphs;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn apply_from_scalar_level() {
        // ell = 0: B maps the scalar 1 to the all-ones vector.
        let b = LiftOperator::new(5, 3, 0).unwrap();
        let out = b.apply(&[1i64]).unwrap();
        assert_eq!(out, vec![1; 10]);
    }

    #[test]
    fn apply_to_all_ones() {
        // each k-set has C(k, ell) ell-subsets
        let b = LiftOperator::new(6, 3, 2).unwrap();
        let x = vec![1i64; binomial(6, 2).unwrap() as usize];
        let out = b.apply(&x).unwrap();
        assert!(out.iter().all(|&v| v == 3));
    }

    #[test]
    fn transpose_of_indicator_hits_facets() {
        let n = 5;
        let k = 3;
        let sigma = KSubset::new(vec![2, 3, 5], n).unwrap();
        let idx = rank_colex(&sigma).unwrap().rank as usize;
        let mut y = vec![0i64; binomial(n as u64, k as i64).unwrap() as usize];
        y[idx] = 1;
        let b = LiftOperator::new(n, k, k - 1).unwrap();
        let out = b.apply_transpose(&y).unwrap();
        let mut expected = vec![0i64; binomial(n as u64, (k - 1) as i64).unwrap() as usize];
        for &u in sigma.elements() {
            let facet = sigma.without(u).unwrap();
            expected[rank_colex(&facet).unwrap().rank as usize] = 1;
        }
        assert_eq!(out, expected);
    }

    #[test]
    fn matrix_free_agrees_with_dense_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for n in 3..=8usize {
            for k in 0..=n.min(5) {
                for ell in 0..=k {
                    let b = LiftOperator::new(n, k, ell).unwrap();
                    let dense: DenseMatrix<f64> = b.to_dense().unwrap();
                    let x: Vec<f64> =
                        (0..dense.cols()).map(|_| rng.random::<f64>() - 0.5).collect();
                    let fast = b.apply(&x).unwrap();
                    let slow = dense.mul_vec(&x).unwrap();
                    for (a, bb) in fast.iter().zip(&slow) {
                        assert!((a - bb).abs() < 1e-12, "n={n} k={k} ell={ell}");
                    }
                    let y: Vec<f64> =
                        (0..dense.rows()).map(|_| rng.random::<f64>() - 0.5).collect();
                    let fast_t = b.apply_transpose(&y).unwrap();
                    let slow_t = dense.transpose().mul_vec(&y).unwrap();
                    for (a, bb) in fast_t.iter().zip(&slow_t) {
                        assert!((a - bb).abs() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn adjointness() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let b = LiftOperator::new(7, 3, 2).unwrap();
        for _ in 0..20 {
            let x: Vec<f64> = (0..b.cols().unwrap()).map(|_| rng.random::<f64>() - 0.5).collect();
            let y: Vec<f64> = (0..b.rows().unwrap()).map(|_| rng.random::<f64>() - 0.5).collect();
            let lhs = dot(&b.apply(&x).unwrap(), &y);
            let rhs = dot(&x, &b.apply_transpose(&y).unwrap());
            assert!((lhs - rhs).abs() < 1e-12);
        }
    }

    #[test]
    fn commutation_vanishes() {
        // empty graph: both sides zero
        let empty = Graph::new(5, []).unwrap();
        for k in 1..=3 {
            assert_eq!(commutation_residual(&empty, k).unwrap(), 0);
        }
        // complete graph
        assert_eq!(commutation_residual(&graphs::complete(5).unwrap(), 2).unwrap(), 0);
        // seeded random graphs
        for seed in 0..30u64 {
            let n = 4 + (seed as usize % 3);
            let g = graphs::erdos_renyi(n, 0.5, 500 + seed).unwrap();
            for k in 1..=3.min(n) {
                assert_eq!(commutation_residual(&g, k).unwrap(), 0, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn kernel_dimensions_and_orthogonality() {
        for n in 2..=8usize {
            for k in 1..=(n / 2) {
                let p: DenseMatrix<f64> = kernel_basis(n, k).unwrap();
                let expect =
                    (binomial(n as u64, k as i64).unwrap() - binomial(n as u64, k as i64 - 1).unwrap())
                        as usize;
                assert_eq!(p.cols(), expect, "n={n} k={k}");
                let b = LiftOperator::new(n, k, k - 1).unwrap();
                for j in 0..p.cols() {
                    let col = p.column(j);
                    let bt = b.apply_transpose(&col).unwrap();
                    assert!(norm2(&bt) < 1e-10, "n={n} k={k} col={j}");
                    for j2 in j..p.cols() {
                        let ip = dot(&col, &p.column(j2));
                        let expect_ip = if j == j2 { 1.0 } else { 0.0 };
                        assert!((ip - expect_ip).abs() < 1e-10);
                    }
                }
            }
        }
    }

    #[test]
    fn kernel_n2_k1_is_signed_half() {
        let p: DenseMatrix<f64> = kernel_basis(2, 1).unwrap();
        assert_eq!(p.cols(), 1);
        let col = p.column(0);
        let r = 1.0 / 2f64.sqrt();
        assert!((col[0].abs() - r).abs() < 1e-12);
        assert!((col[1].abs() - r).abs() < 1e-12);
        assert!((col[0] + col[1]).abs() < 1e-12);
    }

    #[test]
    fn kernel_n4_k2_has_two_columns() {
        let p: DenseMatrix<f64> = kernel_basis(4, 2).unwrap();
        assert_eq!(p.cols(), 2);
    }

    #[test]
    fn numeric_rank_matches_rank_theorem() {
        // rank of B_{n,k,ell} = C(n, ell) for k <= n/2, via orthogonalization
        for n in 3..=8usize {
            for k in 1..=(n / 2) {
                for ell in (k.saturating_sub(2))..k {
                    let b = LiftOperator::new(n, k, ell).unwrap();
                    let dense: DenseMatrix<f64> = b.to_dense().unwrap();
                    let tol = 1e-8;
                    let mut basis: Vec<Vec<f64>> = Vec::new();
                    for j in 0..dense.cols() {
                        let mut v = dense.column(j);
                        for _ in 0..2 {
                            for q in &basis {
                                let c = dot(q, &v);
                                for (vi, qi) in v.iter_mut().zip(q) {
                                    *vi -= c * qi;
                                }
                            }
                        }
                        let nrm = norm2(&v);
                        if nrm > tol {
                            for vi in v.iter_mut() {
                                *vi /= nrm;
                            }
                            basis.push(v);
                        }
                    }
                    assert_eq!(
                        basis.len(),
                        binomial(n as u64, ell as i64).unwrap() as usize,
                        "n={n} k={k} ell={ell}"
                    );
                }
            }
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(LiftOperator::new(4, 5, 1).is_err());
        assert!(LiftOperator::new(4, 2, 3).is_err());
        assert!(kernel_basis::<f64>(4, 3).is_err());
        assert!(kernel_basis::<f64>(4, 0).is_err());
        let b = LiftOperator::new(4, 2, 1).unwrap();
        assert!(b.apply(&[1i64; 3]).is_err());
    }
}

//! Spectra of symmetric operators: deterministic eigendecomposition,
//! clustering into (value, multiplicity) pairs, multiset containment, and
//! the non-trivial part of a token Laplacian spectrum obtained by
//! restriction to Ker(B^T).

use crate::combinatorics::binomial_usize;
use crate::eig;
use crate::error::{Error, Result};
use crate::graphs::{laplacian, Graph};
use crate::lifting::kernel_basis;
use crate::matrix::{dot, norm2, DenseMatrix};
use crate::scalar::Real;
use crate::token::token_graph;

/// An eigenvalue together with its unit-norm eigenvector.
#[derive(Clone, Debug)]
pub struct Eigenpair<R> {
    pub value: R,
    pub vector: Vec<R>,
}

/// A clustered spectrum: strictly increasing values with multiplicities,
/// plus the tolerance used for clustering.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<R> {
    entries: Vec<(R, usize)>,
    tol: R,
}

impl<R: Real> Spectrum<R> {
    pub fn entries(&self) -> &[(R, usize)] {
        &self.entries
    }

    pub fn tol(&self) -> R {
        self.tol
    }

    /// Total multiplicity, i.e. the ambient dimension.
    pub fn dim(&self) -> usize {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    pub fn min_value(&self) -> Option<R> {
        self.entries.first().map(|&(v, _)| v)
    }

    pub fn max_value(&self) -> Option<R> {
        self.entries.last().map(|&(v, _)| v)
    }

    /// Values expanded with multiplicity, ascending.
    pub fn expanded(&self) -> Vec<R> {
        let mut out = Vec::with_capacity(self.dim());
        for &(v, m) in &self.entries {
            out.extend(std::iter::repeat(v).take(m));
        }
        out
    }

    /// Builds a spectrum from already exact (value, multiplicity) pairs.
    pub fn from_entries(entries: Vec<(R, usize)>, tol: R) -> Result<Self> {
        for w in entries.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::InvalidParameter(
                    "spectrum values must be strictly increasing".into(),
                ));
            }
        }
        if entries.iter().any(|&(_, m)| m == 0) {
            return Err(Error::InvalidParameter(
                "spectrum multiplicities must be positive".into(),
            ));
        }
        Ok(Self { entries, tol })
    }
}

/// Default clustering tolerance: 1e-8 scaled by max(1, operator norm).
pub fn default_cluster_tol<R: Real>(op_norm_inf: R) -> R {
    let base = if op_norm_inf > R::one() {
        op_norm_inf
    } else {
        R::one()
    };
    R::from_f64(1e-8).unwrap() * base
}

/// Full eigendecomposition of a symmetric matrix, ascending, with
/// deterministic sweep order. `tol` bounds both the accepted input
/// asymmetry and the per-pair residual, relative to max(1, inf-norm).
pub fn eig_sym<R: Real>(m: &DenseMatrix<R>, tol: R) -> Result<Vec<Eigenpair<R>>> {
    if m.rows() != m.cols() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            got: m.cols(),
        });
    }
    let scale = {
        let nrm = m.norm_inf();
        if nrm > R::one() {
            nrm
        } else {
            R::one()
        }
    };
    let asym = m.max_asymmetry();
    if asym > tol * scale {
        // locate the worst offending pair for the error message
        let mut worst = (0usize, 0usize, R::zero());
        for i in 0..m.rows() {
            for j in (i + 1)..m.rows() {
                let d = (m[(i, j)] - m[(j, i)]).abs();
                if d > worst.2 {
                    worst = (i, j, d);
                }
            }
        }
        return Err(Error::NotSymmetric {
            i: worst.0,
            j: worst.1,
            delta: worst.2.to_f64().unwrap_or(f64::NAN),
        });
    }

    let (values, vectors) = eig::decompose(m)?;
    let mut pairs = Vec::with_capacity(values.len());
    for (i, &value) in values.iter().enumerate() {
        let mut vector = vectors.column(i);
        let nrm = norm2(&vector);
        if nrm > R::zero() {
            for v in vector.iter_mut() {
                *v = *v / nrm;
            }
        }
        pairs.push(Eigenpair { value, vector });
    }

    // Residual contract: ||M v - lambda v|| <= tol * max(1, ||M||).
    for (i, p) in pairs.iter().enumerate() {
        let mv = m.mul_vec(&p.vector)?;
        let mut r = R::zero();
        for (a, b) in mv.iter().zip(&p.vector) {
            let d = *a - p.value * *b;
            r = r + d * d;
        }
        if r.sqrt() > tol * scale {
            return Err(Error::InternalConsistency(format!(
                "eigenpair {i} residual {:e} exceeds contract",
                r.sqrt().to_f64().unwrap_or(f64::NAN)
            )));
        }
    }
    Ok(pairs)
}

/// Greedy left-to-right clustering of sorted values: a value joins the
/// current cluster iff it is within `tol` of the cluster's running mean;
/// the cluster value is the mean.
pub fn cluster<R: Real>(sorted: &[R], tol: R) -> Spectrum<R> {
    let mut entries: Vec<(R, usize)> = Vec::new();
    let mut sum = R::zero();
    let mut count = 0usize;
    for &v in sorted {
        if count > 0 {
            let mean = sum / R::from_int(count as i64);
            if (v - mean).abs() <= tol {
                sum = sum + v;
                count += 1;
                continue;
            }
            entries.push((mean, count));
        }
        sum = v;
        count = 1;
    }
    if count > 0 {
        entries.push((sum / R::from_int(count as i64), count));
    }
    Spectrum { entries, tol }
}

/// Outcome of a containment query, with the first violating entry when the
/// containment fails.
#[derive(Clone, Debug)]
pub struct Containment<R> {
    pub contained: bool,
    pub violation: Option<(R, usize)>,
}

/// True iff every (value, multiplicity) of `inner` matches a value of
/// `outer` within `tol` with at least that multiplicity.
pub fn spectrum_contains<R: Real>(
    outer: &Spectrum<R>,
    inner: &Spectrum<R>,
    tol: R,
) -> Containment<R> {
    for &(v, m) in inner.entries() {
        let found = outer
            .entries()
            .iter()
            .find(|&&(w, _)| (w - v).abs() <= tol);
        match found {
            Some(&(_, mult)) if mult >= m => {}
            _ => {
                return Containment {
                    contained: false,
                    violation: Some((v, m)),
                }
            }
        }
    }
    Containment {
        contained: true,
        violation: None,
    }
}

/// Multiset equality of two spectra: equal dimensions and pointwise
/// agreement of the expanded sorted values within `tol`.
pub fn multiset_eq<R: Real>(a: &Spectrum<R>, b: &Spectrum<R>, tol: R) -> bool {
    let (xs, ys) = (a.expanded(), b.expanded());
    xs.len() == ys.len() && xs.iter().zip(&ys).all(|(x, y)| (*x - *y).abs() <= tol)
}

/// Eigenvalues of L_k(G) as a clustered spectrum, together with the raw
/// ascending eigenvalue list.
pub fn token_spectrum<R: Real>(g: &Graph, k: usize, tol: R) -> Result<(Spectrum<R>, Vec<R>)> {
    let lk = laplacian::<R>(token_graph(g, k)?.graph());
    let ctol = if tol > R::zero() {
        tol
    } else {
        default_cluster_tol(lk.norm_inf())
    };
    let pairs = eig_sym(&lk, R::from_f64(1e-8).unwrap())?;
    let values: Vec<R> = pairs.iter().map(|p| p.value).collect();
    Ok((cluster(&values, ctol), values))
}

/// The non-trivial spectrum of L_k(G): eigenvalues of P^T L_k P where the
/// columns of P form an orthonormal basis of Ker(B^T_{n,k,k-1}). Its
/// disjoint union with the spectrum of L_{k-1}(G) recovers the spectrum of
/// L_k(G).
pub fn nontrivial_spectrum<R: Real>(g: &Graph, k: usize, tol: R) -> Result<Spectrum<R>> {
    let n = g.n();
    if k < 1 || k > n / 2 {
        return Err(Error::InvalidParameter(format!(
            "non-trivial spectrum requires 1 <= k <= n/2, got n = {n}, k = {k}"
        )));
    }
    let lk = laplacian::<R>(token_graph(g, k)?.graph());
    let p = kernel_basis::<R>(n, k)?;
    let restricted = restrict_operator(&lk, &p)?;
    let ctol = if tol > R::zero() {
        tol
    } else {
        default_cluster_tol(lk.norm_inf())
    };
    let pairs = eig_sym(&restricted, R::from_f64(1e-8).unwrap())?;
    let values: Vec<R> = pairs.iter().map(|p| p.value).collect();

    let expected = binomial_usize(n, k as i64)? - binomial_usize(n, k as i64 - 1)?;
    if values.len() != expected {
        return Err(Error::InternalConsistency(format!(
            "restricted operator has dimension {}, expected {expected}",
            values.len()
        )));
    }
    Ok(cluster(&values, ctol))
}

/// P^T M P for an orthonormal column block P.
pub fn restrict_operator<R: Real>(
    m: &DenseMatrix<R>,
    p: &DenseMatrix<R>,
) -> Result<DenseMatrix<R>> {
    let mp = m.matmul(p)?;
    let d = p.cols();
    let mut out = DenseMatrix::zeros(d, d);
    for i in 0..d {
        let pi = p.column(i);
        for j in 0..d {
            out[(i, j)] = dot(&pi, &mp.column(j));
        }
    }
    // symmetrize roundoff so eig_sym's asymmetry gate never trips on it
    for i in 0..d {
        for j in (i + 1)..d {
            let two = R::one() + R::one();
            let avg = (out[(i, j)] + out[(j, i)]) / two;
            out[(i, j)] = avg;
            out[(j, i)] = avg;
        }
    }
    Ok(out)
}

/// Smallest non-trivial eigenvalue of L_k(G), cross-validated against the
/// Rayleigh quotient of its lifted eigenvector under the full operator.
pub fn lambda_min_nontrivial<R: Real>(g: &Graph, k: usize, tol: R) -> Result<R> {
    let n = g.n();
    if k < 1 || k > n / 2 {
        return Err(Error::InvalidParameter(format!(
            "non-trivial minimum requires 1 <= k <= n/2, got n = {n}, k = {k}"
        )));
    }
    let lk = laplacian::<R>(token_graph(g, k)?.graph());
    let p = kernel_basis::<R>(n, k)?;
    let restricted = restrict_operator(&lk, &p)?;
    let pairs = eig_sym(&restricted, R::from_f64(1e-8).unwrap())?;
    let first = pairs
        .first()
        .ok_or_else(|| Error::InternalConsistency("empty restricted spectrum".into()))?;

    // Lift the minimizing eigenvector and check the Rayleigh quotient of
    // the full operator against the restricted eigenvalue.
    let lifted = {
        let mut v = vec![R::zero(); lk.rows()];
        for (j, &c) in first.vector.iter().enumerate() {
            let col = p.column(j);
            for (vi, pi) in v.iter_mut().zip(&col) {
                *vi = *vi + c * *pi;
            }
        }
        v
    };
    let quad = dot(&lk.mul_vec(&lifted)?, &lifted);
    let nrm2 = dot(&lifted, &lifted);
    let rayleigh = quad / nrm2;
    let check_tol = if tol > R::zero() {
        tol
    } else {
        default_cluster_tol(lk.norm_inf())
    };
    if (rayleigh - first.value).abs() > check_tol {
        return Err(Error::InternalConsistency(format!(
            "Rayleigh cross-check failed: {} vs {}",
            rayleigh.to_f64().unwrap_or(f64::NAN),
            first.value.to_f64().unwrap_or(f64::NAN)
        )));
    }
    Ok(first.value)
}

/// Largest eigenvalue of L_k(G).
pub fn lambda_max<R: Real>(g: &Graph, k: usize, _tol: R) -> Result<R> {
    let (_, values) = token_spectrum::<R>(g, k, R::zero())?;
    values
        .last()
        .copied()
        .ok_or_else(|| Error::InternalConsistency("empty spectrum".into()))
}

/// Second-smallest eigenvalue of the full spectrum of L_k(G), counted with
/// multiplicity.
pub fn lambda_2<R: Real>(g: &Graph, k: usize) -> Result<R> {
    let (_, values) = token_spectrum::<R>(g, k, R::zero())?;
    values
        .get(1)
        .copied()
        .ok_or_else(|| Error::InvalidParameter("spectrum has fewer than two eigenvalues".into()))
}

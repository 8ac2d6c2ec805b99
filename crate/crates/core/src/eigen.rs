//! Dense eigendecomposition and spectral-domain filtering.
//!
//! This is the slow, exact route: a cyclic Jacobi eigensolver plus filtering
//! carried out in the eigenbasis. The recursive Chebyshev path in
//! [`crate::spectral`] never calls into it at filter time; keeping the two
//! routes independent is what makes the dense path usable as an oracle.

use ndarray::{Array1, Array2, ArrayView2};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sparse::SparseSymMatrix;

/// Node counts above this are refused by the dense route.
pub const ORACLE_SIZE_CAP: usize = 512;

/// Eigendecomposition of a symmetric matrix: ascending eigenvalues paired
/// with orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct EigenSystem<T> {
    eigvals: Array1<T>,
    eigvecs: Array2<T>,
}

impl<T: Scalar> EigenSystem<T> {
    /// Full eigendecomposition via cyclic Jacobi rotations.
    ///
    /// Refuses matrices larger than [`ORACLE_SIZE_CAP`].
    pub fn compute(m: &SparseSymMatrix<T>) -> Result<Self> {
        if m.n() > ORACLE_SIZE_CAP {
            return Err(Error::OracleTooLarge {
                n: m.n(),
                cap: ORACLE_SIZE_CAP,
            });
        }
        let (eigvals, eigvecs) = jacobi(m.to_dense())?;
        Ok(Self { eigvals, eigvecs })
    }

    pub fn n(&self) -> usize {
        self.eigvals.len()
    }

    /// Eigenvalues in ascending order.
    pub fn eigvals(&self) -> &Array1<T> {
        &self.eigvals
    }

    /// Orthonormal eigenvectors; column k pairs with eigenvalue k.
    pub fn eigvecs(&self) -> &Array2<T> {
        &self.eigvecs
    }

    /// Largest eigenvalue.
    pub fn lambda_max(&self) -> T {
        self.eigvals[self.eigvals.len() - 1]
    }
}

/// Cyclic Jacobi eigensolver for a dense symmetric matrix.
///
/// Rotations repeat until the off-diagonal norm falls below a multiple of
/// machine epsilon times the Frobenius norm. Eigenpairs come back sorted
/// ascending, each eigenvector scaled so its largest-magnitude component is
/// positive (a deterministic sign convention; signs are otherwise arbitrary).
fn jacobi<T: Scalar>(mut a: Array2<T>) -> Result<(Array1<T>, Array2<T>)> {
    let n = a.nrows();
    let mut v = Array2::eye(n);
    if n == 0 {
        return Ok((Array1::zeros(0), v));
    }

    let fro = a.iter().map(|&x| x * x).sum::<T>().sqrt();
    let tol = fro * T::epsilon() * T::from_f64(n as f64);
    const MAX_SWEEPS: usize = 60;

    for _ in 0..MAX_SWEEPS {
        let off = off_diag_norm(&a);
        if off <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[[p, q]];
                if apq == T::zero() {
                    continue;
                }
                let (c, s) = rotation(a[[p, p]], a[[q, q]], apq);
                apply_rotation(&mut a, p, q, c, s);
                // accumulate V <- V * J(p, q, c, s)
                for r in 0..n {
                    let vrp = v[[r, p]];
                    let vrq = v[[r, q]];
                    v[[r, p]] = c * vrp - s * vrq;
                    v[[r, q]] = s * vrp + c * vrq;
                }
            }
        }
    }
    if off_diag_norm(&a) > tol * T::from_f64(1e3) {
        return Err(Error::InvalidParam(
            "jacobi eigensolver failed to converge".into(),
        ));
    }

    // Sort ascending, carrying columns along.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[[i, i]]
            .partial_cmp(&a[[j, j]])
            .expect("eigenvalues are finite")
    });
    let mut eigvals = Array1::zeros(n);
    let mut eigvecs = Array2::zeros((n, n));
    for (k, &src) in order.iter().enumerate() {
        eigvals[k] = a[[src, src]];
        let mut pivot = T::zero();
        for r in 0..n {
            if v[[r, src]].abs() > pivot.abs() {
                pivot = v[[r, src]];
            }
        }
        let flip = if pivot < T::zero() { -T::one() } else { T::one() };
        for r in 0..n {
            eigvecs[[r, k]] = flip * v[[r, src]];
        }
    }
    Ok((eigvals, eigvecs))
}

fn off_diag_norm<T: Scalar>(a: &Array2<T>) -> T {
    let n = a.nrows();
    let mut sum = T::zero();
    for p in 0..n {
        for q in (p + 1)..n {
            sum += a[[p, q]] * a[[p, q]];
        }
    }
    (sum + sum).sqrt()
}

/// Classical Jacobi rotation annihilating a_pq.
fn rotation<T: Scalar>(app: T, aqq: T, apq: T) -> (T, T) {
    let theta = (aqq - app) / (T::from_f64(2.0) * apq);
    let t = if theta >= T::zero() {
        T::one() / (theta + (theta * theta + T::one()).sqrt())
    } else {
        -T::one() / (-theta + (theta * theta + T::one()).sqrt())
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    (c, t * c)
}

fn apply_rotation<T: Scalar>(a: &mut Array2<T>, p: usize, q: usize, c: T, s: T) {
    let n = a.nrows();
    let app = a[[p, p]];
    let aqq = a[[q, q]];
    let apq = a[[p, q]];
    a[[p, p]] = c * c * app - T::from_f64(2.0) * s * c * apq + s * s * aqq;
    a[[q, q]] = s * s * app + T::from_f64(2.0) * s * c * apq + c * c * aqq;
    a[[p, q]] = T::zero();
    a[[q, p]] = T::zero();
    for r in 0..n {
        if r != p && r != q {
            let arp = a[[r, p]];
            let arq = a[[r, q]];
            a[[r, p]] = c * arp - s * arq;
            a[[p, r]] = a[[r, p]];
            a[[r, q]] = s * arp + c * arq;
            a[[q, r]] = a[[r, q]];
        }
    }
}

/// Graph Fourier transform: project a node signal onto the eigenbasis.
pub fn gft<T: Scalar>(x: ArrayView2<'_, T>, eig: &EigenSystem<T>) -> Result<Array2<T>> {
    if x.nrows() != eig.n() {
        return Err(Error::shape(
            format!("{} rows", eig.n()),
            format!("{} rows", x.nrows()),
        ));
    }
    Ok(eig.eigvecs.t().dot(&x))
}

/// Inverse graph Fourier transform.
pub fn igft<T: Scalar>(x_hat: ArrayView2<'_, T>, eig: &EigenSystem<T>) -> Result<Array2<T>> {
    if x_hat.nrows() != eig.n() {
        return Err(Error::shape(
            format!("{} rows", eig.n()),
            format!("{} rows", x_hat.nrows()),
        ));
    }
    Ok(eig.eigvecs.dot(&x_hat))
}

/// Dense spectral filtering oracle.
///
/// The coefficients are Chebyshev-basis coefficients on the spectrum rescaled
/// to [-1, 1]: the filter response at eigenvalue lambda is
/// `sum_k coeffs[k] * T_k(2 lambda / lambda_max - 1)`, evaluated here in the
/// eigenbasis rather than by sparse recursion.
pub fn spectral_filter_dense<T: Scalar>(
    x: ArrayView2<'_, T>,
    eig: &EigenSystem<T>,
    coeffs: &[T],
) -> Result<Array2<T>> {
    if coeffs.is_empty() {
        return Err(Error::InvalidParam("empty filter coefficients".into()));
    }
    let lambda_max = eig.lambda_max();
    if lambda_max <= T::zero() {
        return Err(Error::InvalidParam(
            "spectral filter needs a positive largest eigenvalue".into(),
        ));
    }
    let mut x_hat = gft(x, eig)?;
    let two = T::from_f64(2.0);
    for (row, &lambda) in x_hat.rows_mut().into_iter().zip(eig.eigvals.iter()) {
        let mu = two * lambda / lambda_max - T::one();
        // response by the Chebyshev recursion on the scalar mu
        let mut response = coeffs[0];
        if coeffs.len() > 1 {
            let mut t_prev = T::one();
            let mut t_cur = mu;
            response += coeffs[1] * t_cur;
            for &coef in &coeffs[2..] {
                let t_next = two * mu * t_cur - t_prev;
                t_prev = t_cur;
                t_cur = t_next;
                response += coef * t_cur;
            }
        }
        let mut row = row;
        row.mapv_inplace(|v| v * response);
    }
    igft(x_hat.view(), eig)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::arr2;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_sym(n: usize, rng: &mut ChaCha8Rng) -> SparseSymMatrix<f64> {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.gen_bool(0.4) {
                    edges.push((i, j, rng.gen_range(0.1..2.0)));
                }
            }
        }
        SparseSymMatrix::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn jacobi_two_node_laplacian() {
        let l = crate::spectral::normalized_laplacian(
            &SparseSymMatrix::from_edges(2, &[(0, 1, 1.0)]).unwrap(),
        );
        let eig = EigenSystem::compute(&l).unwrap();
        assert_abs_diff_eq!(eig.eigvals()[0], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(eig.eigvals()[1], 2.0, epsilon = 1e-12);
    }

    #[test]
    fn orthonormality_and_reconstruction() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let m = random_sym(16, &mut rng);
            let l = crate::spectral::normalized_laplacian(&m);
            let eig = EigenSystem::compute(&l).unwrap();
            let u = eig.eigvecs();
            let gram = u.t().dot(u);
            let eye = Array2::<f64>::eye(16);
            for (g, e) in gram.iter().zip(eye.iter()) {
                assert_abs_diff_eq!(g, e, epsilon = 1e-8);
            }
            // L = U diag(lambda) U^T
            let mut lam = Array2::<f64>::zeros((16, 16));
            for k in 0..16 {
                lam[[k, k]] = eig.eigvals()[k];
            }
            let rebuilt = u.dot(&lam).dot(&u.t());
            for (a, b) in rebuilt.iter().zip(l.to_dense().iter()) {
                assert_abs_diff_eq!(a, b, epsilon = 1e-8);
            }
            // non-negative spectrum for a normalized Laplacian
            assert!(eig.eigvals()[0] > -1e-10);
        }
    }

    #[test]
    fn gft_of_eigvec_is_unit_vector() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let m = random_sym(10, &mut rng);
        let l = crate::spectral::normalized_laplacian(&m);
        let eig = EigenSystem::compute(&l).unwrap();
        let k = 4;
        let col = eig.eigvecs().column(k).to_owned().insert_axis(ndarray::Axis(1));
        let hat = gft(col.view(), &eig).unwrap();
        for (i, v) in hat.column(0).iter().enumerate() {
            let expect = if i == k { 1.0 } else { 0.0 };
            assert_abs_diff_eq!(*v, expect, epsilon = 1e-10);
        }
    }

    #[test]
    fn gft_roundtrip_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = random_sym(16, &mut rng);
        let l = crate::spectral::normalized_laplacian(&m);
        let eig = EigenSystem::compute(&l).unwrap();
        let x = Array2::from_shape_fn((16, 3), |_| rng.gen_range(-1.0..1.0));
        let back = igft(gft(x.view(), &eig).unwrap().view(), &eig).unwrap();
        for (a, b) in back.iter().zip(x.iter()) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-8);
        }
    }

    #[test]
    fn constant_signal_concentrates_on_null_component() {
        // connected graph: energy of D^{1/2}-weighted constant sits on the
        // eigenvalue-0 eigenvector, computed against the dense oracle
        let m = SparseSymMatrix::from_edges(4, &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (0, 3, 1.0)])
            .unwrap();
        let l = crate::spectral::normalized_laplacian(&m);
        let eig = EigenSystem::compute(&l).unwrap();
        let d = m.degree_vector();
        let x = Array2::from_shape_fn((4, 1), |(i, _)| d[i].sqrt());
        let hat = gft(x.view(), &eig).unwrap();
        let total: f64 = hat.column(0).iter().map(|v| v * v).sum();
        let zero_component = hat[[0, 0]] * hat[[0, 0]];
        assert_abs_diff_eq!(zero_component / total, 1.0, epsilon = 1e-10);
    }

    #[test]
    fn filter_identity_coefficients() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = random_sym(12, &mut rng);
        let l = crate::spectral::normalized_laplacian(&m);
        let eig = EigenSystem::compute(&l).unwrap();
        let x = Array2::from_shape_fn((12, 2), |_| rng.gen_range(-1.0..1.0));
        let y = spectral_filter_dense(x.view(), &eig, &[1.0]).unwrap();
        for (a, b) in y.iter().zip(x.iter()) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-10);
        }
    }

    #[test]
    fn size_cap_enforced() {
        let m = SparseSymMatrix::<f64>::zeros(ORACLE_SIZE_CAP + 1);
        assert!(matches!(
            EigenSystem::compute(&m),
            Err(Error::OracleTooLarge { .. })
        ));
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let m = SparseSymMatrix::from_edges(3, &[(0, 1, 1.0)]).unwrap();
        let eig = EigenSystem::compute(&crate::spectral::normalized_laplacian(&m)).unwrap();
        let x = Array2::<f64>::zeros((5, 2));
        assert!(gft(x.view(), &eig).is_err());
        assert!(igft(x.view(), &eig).is_err());
    }

    #[test]
    fn jacobi_handles_diagonal_input() {
        let mut entries = vec![];
        for i in 0..5 {
            entries.push((i, i, (i + 1) as f64));
        }
        let m = SparseSymMatrix::from_edges(5, &entries).unwrap();
        let eig = EigenSystem::compute(&m).unwrap();
        for (k, v) in eig.eigvals().iter().enumerate() {
            assert_abs_diff_eq!(*v, (k + 1) as f64, epsilon = 1e-12);
        }
        let _ = arr2(&[[0.0f64]]);
    }
}

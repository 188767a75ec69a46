//! Crate-private dense symmetric linear algebra.
//!
//! Everything here works on row-major `d×d` buffers. The eigensolver is a
//! cyclic Jacobi rotation scheme: foolproof for symmetric matrices at the
//! dimensions this crate targets (d ≤ 64), and accurate to a small multiple
//! of machine epsilon relative to the Frobenius norm.

use crate::{Error, Result};

pub(crate) fn frobenius(a: &[f64]) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Jacobi eigendecomposition of a symmetric matrix: returns eigenvalues in
/// ascending order and the matching orthonormal eigenvectors as the columns
/// of a row-major `d×d` matrix.
pub(crate) fn jacobi_eigh(d: usize, a: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    assert_eq!(a.len(), d * d);
    if d == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let mut m = a.to_vec();
    let mut q = vec![0.0; d * d];
    for i in 0..d {
        q[i * d + i] = 1.0;
    }
    if d == 1 {
        return Ok((m, q));
    }

    let norm = frobenius(&m).max(f64::MIN_POSITIVE);
    let tol = 1e-14 * norm;
    const MAX_SWEEPS: usize = 64;

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..d - 1 {
            for r in p + 1..d {
                off += m[p * d + r].abs();
            }
        }
        if off < tol {
            return Ok(sort_eigen(d, diag(d, &m), q));
        }
        for p in 0..d - 1 {
            for r in p + 1..d {
                let apq = m[p * d + r];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let app = m[p * d + p];
                let aqq = m[r * d + r];
                let theta = 0.5 * (aqq - app) / apq;
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    let s = theta.signum();
                    s / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                m[p * d + p] = app - t * apq;
                m[r * d + r] = aqq + t * apq;
                m[p * d + r] = 0.0;
                m[r * d + p] = 0.0;
                for j in 0..d {
                    if j != p && j != r {
                        let ajp = m[j * d + p];
                        let ajq = m[j * d + r];
                        m[j * d + p] = ajp - s * (ajq + tau * ajp);
                        m[j * d + r] = ajq + s * (ajp - tau * ajq);
                        m[p * d + j] = m[j * d + p];
                        m[r * d + j] = m[j * d + r];
                    }
                }
                for j in 0..d {
                    let qjp = q[j * d + p];
                    let qjq = q[j * d + r];
                    q[j * d + p] = qjp - s * (qjq + tau * qjp);
                    q[j * d + r] = qjq + s * (qjp - tau * qjq);
                }
            }
        }
    }
    Err(Error::EigenNoConvergence { sweeps: MAX_SWEEPS })
}

fn diag(d: usize, m: &[f64]) -> Vec<f64> {
    (0..d).map(|i| m[i * d + i]).collect()
}

fn sort_eigen(d: usize, vals: Vec<f64>, vecs: Vec<f64>) -> (Vec<f64>, Vec<f64>) {
    let mut idx: Vec<usize> = (0..d).collect();
    idx.sort_by(|&i, &j| vals[i].partial_cmp(&vals[j]).unwrap());
    let sorted_vals: Vec<f64> = idx.iter().map(|&i| vals[i]).collect();
    let mut sorted_vecs = vec![0.0; d * d];
    for (new_col, &old_col) in idx.iter().enumerate() {
        for row in 0..d {
            sorted_vecs[row * d + new_col] = vecs[row * d + old_col];
        }
    }
    (sorted_vals, sorted_vecs)
}

/// Smallest eigenvalue of a symmetric matrix.
pub(crate) fn min_eigenvalue(d: usize, a: &[f64]) -> Result<f64> {
    let (vals, _) = jacobi_eigh(d, a)?;
    Ok(vals[0])
}

pub(crate) fn mat_mul(d: usize, a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut c = vec![0.0; d * d];
    for i in 0..d {
        for k in 0..d {
            let aik = a[i * d + k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..d {
                c[i * d + j] += aik * b[k * d + j];
            }
        }
    }
    c
}

pub(crate) fn mat_vec(d: usize, a: &[f64], x: &[f64]) -> Vec<f64> {
    (0..d)
        .map(|i| (0..d).map(|j| a[i * d + j] * x[j]).sum())
        .collect()
}

/// Rebuilds `Q f(Λ) Qᵀ` from an eigendecomposition, symmetrizing the result.
pub(crate) fn apply_spectral(
    d: usize,
    vals: &[f64],
    vecs: &[f64],
    f: impl Fn(f64) -> f64,
) -> Vec<f64> {
    let mut out = vec![0.0; d * d];
    for k in 0..d {
        let fk = f(vals[k]);
        for i in 0..d {
            let qik = vecs[i * d + k];
            for j in i..d {
                out[i * d + j] += fk * qik * vecs[j * d + k];
            }
        }
    }
    for i in 0..d {
        for j in 0..i {
            out[i * d + j] = out[j * d + i];
        }
    }
    out
}

/// Random orthogonal matrix via modified Gram–Schmidt on a Gaussian draw,
/// with one re-orthogonalization pass.
pub(crate) fn random_orthogonal(d: usize, rng: &mut impl rand::Rng) -> Vec<f64> {
    use rand::distributions::Distribution;
    let normal = GaussianPair;
    let mut q = vec![0.0; d * d];
    for v in q.iter_mut() {
        *v = normal.sample(rng);
    }
    // Columns become the orthonormal frame.
    for col in 0..d {
        for _pass in 0..2 {
            for prev in 0..col {
                let dot: f64 = (0..d).map(|i| q[i * d + col] * q[i * d + prev]).sum();
                for i in 0..d {
                    q[i * d + col] -= dot * q[i * d + prev];
                }
            }
        }
        let norm: f64 = (0..d).map(|i| q[i * d + col] * q[i * d + col]).sum::<f64>().sqrt();
        let norm = if norm < 1e-12 { 1.0 } else { norm };
        for i in 0..d {
            q[i * d + col] /= norm;
        }
    }
    q
}

/// Box–Muller standard normal; avoids pulling in a distributions crate for
/// one sampler.
struct GaussianPair;

impl rand::distributions::Distribution<f64> for GaussianPair {
    fn sample<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        loop {
            let u: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
            let v: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let g = (-2.0 * u.ln()).sqrt() * v.cos();
            if g.is_finite() {
                return g;
            }
        }
    }
}

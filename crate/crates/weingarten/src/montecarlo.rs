//! Seeded Monte Carlo verification harness: Haar sampling on the unitary,
//! orthogonal and symplectic groups, and empirical estimates of entry moments
//! and trace words, with deterministic splittable substreams.

use crate::error::{Result, WgError};
use num::complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    Unitary,
    Orthogonal,
    Symplectic,
}

/// Dense complex square matrix in row-major order.
#[derive(Clone, Debug)]
pub struct Mat {
    pub n: usize,
    pub data: Vec<Complex64>,
}

impl Mat {
    pub fn zeros(n: usize) -> Self {
        Mat { n, data: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Mat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let n = self.n;
        let mut out = Mat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn conj(&self) -> Mat {
        Mat { n: self.n, data: self.data.iter().map(|z| z.conj()).collect() }
    }

    pub fn adjoint(&self) -> Mat {
        self.transpose().conj()
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

fn gaussian_complex<R: Rng>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

fn ginibre<R: Rng>(d: usize, real: bool, rng: &mut R) -> Mat {
    let mut m = Mat::zeros(d);
    for k in 0..d * d {
        m.data[k] = if real {
            Complex64::new(rng.sample(StandardNormal), 0.0)
        } else {
            gaussian_complex(rng)
        };
    }
    m
}

/// In-place Householder QR returning Q with the diagonal-of-R phase (sign)
/// correction, so the result is Haar on U(d) (or O(d) for real input).
/// Without the correction the distribution is biased; see the regression test.
fn qr_haar(mut a: Mat, correct_phases: bool) -> Mat {
    let d = a.n;
    let mut q = Mat::identity(d);
    for k in 0..d {
        // build the Householder vector for column k
        let mut norm2 = 0.0;
        for i in k..d {
            norm2 += a[(i, k)].norm_sqr();
        }
        let norm = norm2.sqrt();
        if norm == 0.0 {
            continue;
        }
        let akk = a[(k, k)];
        let phase = if akk.norm() > 0.0 { akk / akk.norm() } else { Complex64::new(1.0, 0.0) };
        let alpha = -phase * norm;
        let mut v: Vec<Complex64> = (k..d).map(|i| a[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        // apply H = I - 2 v v^* / |v|^2 to A (left) and accumulate into Q
        for j in k..d {
            let mut dot = Complex64::new(0.0, 0.0);
            for (t, vi) in v.iter().enumerate() {
                dot += vi.conj() * a[(k + t, j)];
            }
            let s = 2.0 * dot / vnorm2;
            for (t, vi) in v.iter().enumerate() {
                let val = s * vi;
                a[(k + t, j)] -= val;
            }
        }
        for j in 0..d {
            let mut dot = Complex64::new(0.0, 0.0);
            for (t, vi) in v.iter().enumerate() {
                dot += vi.conj() * q[(k + t, j)];
            }
            let s = 2.0 * dot / vnorm2;
            for (t, vi) in v.iter().enumerate() {
                let val = s * vi;
                q[(k + t, j)] -= val;
            }
        }
    }
    // q currently holds H_{d-1}...H_0, so Q = q^dagger; build Q with columns
    // rescaled by the phases of diag(R) = diag(a)
    let mut out = Mat::zeros(d);
    for i in 0..d {
        for j in 0..d {
            let lambda = if correct_phases {
                let r = a[(j, j)];
                if r.norm() > 0.0 { r / r.norm() } else { Complex64::new(1.0, 0.0) }
            } else {
                Complex64::new(1.0, 0.0)
            };
            out[(i, j)] = q[(j, i)].conj() * lambda;
        }
    }
    out
}

#[cfg(test)]
fn qr_uncorrected(a: Mat) -> Mat {
    qr_haar(a, false)
}

/// Applies the antilinear map theta(v) = J conj(v) for J of size 2d
/// (J e_i = -f_i, J f_i = e_i with the block convention J_{i, d+i} = 1).
fn theta(v: &[Complex64], d: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); 2 * d];
    for i in 0..d {
        out[i] = v[d + i].conj();
        out[d + i] = -v[i].conj();
    }
    out
}

fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Haar sample on Sp(d) seen as 2d x 2d unitaries preserving the canonical
/// antisymmetric form: structure-preserving Gram-Schmidt on Gaussian vectors,
/// keeping each new vector orthogonal to the previously built quaternionic
/// planes span{u_l, theta(u_l)}.
fn sample_symplectic<R: Rng>(d: usize, rng: &mut R) -> Mat {
    let m = 2 * d;
    let mut us: Vec<Vec<Complex64>> = Vec::with_capacity(d);
    let mut thetas: Vec<Vec<Complex64>> = Vec::with_capacity(d);
    while us.len() < d {
        let mut v: Vec<Complex64> = (0..m).map(|_| gaussian_complex(rng)).collect();
        for (u, tu) in us.iter().zip(&thetas) {
            let cu = inner(u, &v);
            let ct = inner(tu, &v);
            for i in 0..m {
                v[i] -= cu * u[i] + ct * tu[i];
            }
        }
        let norm = inner(&v, &v).re.sqrt();
        if norm < 1e-8 {
            continue; // numerically degenerate draw; resample
        }
        for z in v.iter_mut() {
            *z /= norm;
        }
        let tv = theta(&v, d);
        us.push(v);
        thetas.push(tv);
    }
    // columns: M e_i = u_i, M f_i = -J conj(u_i) = -theta(u_i)
    let mut out = Mat::zeros(m);
    for (i, (u, tu)) in us.iter().zip(&thetas).enumerate() {
        for r in 0..m {
            out[(r, i)] = u[r];
            out[(r, d + i)] = -tu[r];
        }
    }
    out
}

/// One Haar-distributed sample: d x d for the unitary and orthogonal groups,
/// 2d x 2d for the symplectic group.
pub fn sample_haar<R: Rng>(group: Group, d: usize, rng: &mut R) -> Mat {
    match group {
        Group::Unitary => qr_haar(ginibre(d, false, rng), true),
        Group::Orthogonal => qr_haar(ginibre(d, true, rng), true),
        Group::Symplectic => sample_symplectic(d, rng),
    }
}

/// Largest absolute entry of M^dagger M - I.
pub fn unitarity_residual(m: &Mat) -> f64 {
    let p = m.adjoint().mul(m);
    let n = p.n;
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let expect = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((p[(i, j)] - expect).norm());
        }
    }
    worst
}

/// Largest absolute entry of M^t J M - J (matrix must be 2d x 2d).
pub fn symplectic_residual(m: &Mat) -> f64 {
    let n = m.n;
    assert!(n % 2 == 0);
    let d = n / 2;
    let mut j = Mat::zeros(n);
    for i in 0..d {
        j[(i, d + i)] = Complex64::new(1.0, 0.0);
        j[(d + i, i)] = Complex64::new(-1.0, 0.0);
    }
    let p = m.transpose().mul(&j).mul(m);
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            worst = worst.max((p[(a, b)] - j[(a, b)]).norm());
        }
    }
    worst
}

/// A moment of matrix entries to estimate empirically. Indices are 1-based,
/// matching the exact-formula queries.
#[derive(Clone, Debug)]
pub enum MomentQuery {
    /// product of U_{i_k j_k} times conjugates of U_{i'_k j'_k}
    Unitary { i: Vec<usize>, j: Vec<usize>, i_bar: Vec<usize>, j_bar: Vec<usize> },
    /// product of real entries O_{i_k j_k}
    Orthogonal { i: Vec<usize>, j: Vec<usize> },
    /// product of entries of the 2d x 2d symplectic matrix
    Symplectic { i: Vec<usize>, j: Vec<usize> },
}

impl MomentQuery {
    fn evaluate(&self, m: &Mat) -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        match self {
            MomentQuery::Unitary { i, j, i_bar, j_bar } => {
                for (a, b) in i.iter().zip(j) {
                    acc *= m[(a - 1, b - 1)];
                }
                for (a, b) in i_bar.iter().zip(j_bar) {
                    acc *= m[(a - 1, b - 1)].conj();
                }
            }
            MomentQuery::Orthogonal { i, j } | MomentQuery::Symplectic { i, j } => {
                for (a, b) in i.iter().zip(j) {
                    acc *= m[(a - 1, b - 1)];
                }
            }
        }
        acc
    }

    pub fn group(&self) -> Group {
        match self {
            MomentQuery::Unitary { .. } => Group::Unitary,
            MomentQuery::Orthogonal { .. } => Group::Orthogonal,
            MomentQuery::Symplectic { .. } => Group::Symplectic,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SampleEstimate {
    pub mean: Complex64,
    pub stderr: f64,
    pub samples: u64,
}

impl SampleEstimate {
    /// z-score of the estimate against an exact reference value.
    pub fn z_against(&self, exact: Complex64) -> f64 {
        if self.stderr == 0.0 {
            if (self.mean - exact).norm() == 0.0 { 0.0 } else { f64::INFINITY }
        } else {
            (self.mean - exact).norm() / self.stderr
        }
    }
}

/// Running pooled accumulator (sum and sum of squared moduli per query).
struct Accumulator {
    sum: Vec<Complex64>,
    sum_sq: Vec<f64>,
    count: u64,
}

impl Accumulator {
    fn new(k: usize) -> Self {
        Accumulator { sum: vec![Complex64::new(0.0, 0.0); k], sum_sq: vec![0.0; k], count: 0 }
    }

    fn merge(&mut self, other: &Accumulator) {
        for (a, b) in self.sum.iter_mut().zip(&other.sum) {
            *a += b;
        }
        for (a, b) in self.sum_sq.iter_mut().zip(&other.sum_sq) {
            *a += b;
        }
        self.count += other.count;
    }

    fn finish(&self) -> Vec<SampleEstimate> {
        let n = self.count as f64;
        self.sum
            .iter()
            .zip(&self.sum_sq)
            .map(|(s, sq)| {
                let mean = s / n;
                let var = ((sq - mean.norm_sqr() * n) / (n - 1.0)).max(0.0);
                SampleEstimate { mean, stderr: (var / n).sqrt(), samples: self.count }
            })
            .collect()
    }
}

pub const SUBSTREAMS: u64 = 16;

/// Estimates several moments of the same group/dimension cell, reusing each
/// sampled matrix for every query. The RNG is ChaCha with `SUBSTREAMS`
/// independent streams derived from the seed, merged in stream order, so the
/// result is deterministic in (seed, samples).
pub fn estimate_moments_batch(
    group: Group,
    d: usize,
    queries: &[MomentQuery],
    samples: u64,
    seed: u64,
) -> Result<Vec<SampleEstimate>> {
    if queries.iter().any(|q| q.group() != group) {
        return Err(WgError::SizeMismatch("query group does not match cell group".into()));
    }
    if samples == 0 {
        return Err(WgError::SizeMismatch("sample count must be positive".into()));
    }
    let mut total = Accumulator::new(queries.len());
    for stream in 0..SUBSTREAMS {
        let per = samples / SUBSTREAMS + u64::from(stream < samples % SUBSTREAMS);
        if per == 0 {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        let mut acc = Accumulator::new(queries.len());
        for _ in 0..per {
            let m = sample_haar(group, d, &mut rng);
            for (k, q) in queries.iter().enumerate() {
                let v = q.evaluate(&m);
                acc.sum[k] += v;
                acc.sum_sq[k] += v.norm_sqr();
            }
        }
        acc.count = per;
        total.merge(&acc);
    }
    Ok(total.finish())
}

pub fn estimate_moment(q: &MomentQuery, d: usize, samples: u64, seed: u64) -> Result<SampleEstimate> {
    Ok(estimate_moments_batch(q.group(), d, std::slice::from_ref(q), samples, seed)?[0])
}

/// One factor of a trace word.
#[derive(Clone, Copy, Debug)]
pub enum TraceFactor {
    /// a fixed constant matrix, by index into the `constants` slice
    Constant(usize),
    /// the Haar sample itself
    Haar,
    /// its transpose
    HaarTranspose,
    /// its entrywise conjugate
    HaarConjugate,
    /// its adjoint
    HaarAdjoint,
}

/// Estimates E[ tr(F_1 F_2 ... F_k) ] with tr the normalized trace, the
/// Haar factors all referring to one sample per draw.
pub fn estimate_trace_moment(
    group: Group,
    d: usize,
    word: &[TraceFactor],
    constants: &[Mat],
    samples: u64,
    seed: u64,
) -> Result<SampleEstimate> {
    let size = match group {
        Group::Symplectic => 2 * d,
        _ => d,
    };
    if constants.iter().any(|c| c.n != size) {
        return Err(WgError::SizeMismatch("constant matrices must match the group dimension".into()));
    }
    let mut total = Accumulator::new(1);
    for stream in 0..SUBSTREAMS {
        let per = samples / SUBSTREAMS + u64::from(stream < samples % SUBSTREAMS);
        if per == 0 {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        let mut acc = Accumulator::new(1);
        for _ in 0..per {
            let m = sample_haar(group, d, &mut rng);
            let mt = m.transpose();
            let mc = m.conj();
            let ma = m.adjoint();
            let mut prod = Mat::identity(size);
            for f in word {
                let factor = match f {
                    TraceFactor::Constant(k) => &constants[*k],
                    TraceFactor::Haar => &m,
                    TraceFactor::HaarTranspose => &mt,
                    TraceFactor::HaarConjugate => &mc,
                    TraceFactor::HaarAdjoint => &ma,
                };
                prod = prod.mul(factor);
            }
            let v = prod.trace() / size as f64;
            acc.sum[0] += v;
            acc.sum_sq[0] += v.norm_sqr();
        }
        acc.count = per;
        total.merge(&acc);
    }
    Ok(total.finish()[0])
}

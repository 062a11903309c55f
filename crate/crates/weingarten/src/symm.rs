//! Symmetric-group combinatorics: partitions, permutations, irreducible
//! characters (Murnaghan-Nakayama), dimension polynomials, Catalan numbers
//! and the permutation Moebius function.

use crate::error::{Result, WgError};
use crate::rational::{rat, BigRat, Poly, RationalFunction};
use num::{BigInt, One, Zero};
use std::collections::HashMap;
use std::fmt;

/// Non-increasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(WgError::Parse("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(WgError::Parse("partition parts must be non-increasing".into()));
        }
        Ok(Partition { parts })
    }

    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// |lambda|
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Doubles every part: lambda -> 2*lambda.
    pub fn doubled(&self) -> Partition {
        Partition {
            parts: self.parts.iter().map(|p| 2 * p).collect(),
        }
    }

    /// Parse the CLI cycle-type syntax "k1,k2,...".
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| WgError::Parse(format!("bad partition part {t:?}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }

    /// Centralizer size z = prod_i i^{m_i} m_i! of the conjugacy class with
    /// this cycle type.
    pub fn centralizer_size(&self) -> BigInt {
        let mut mult: HashMap<usize, u32> = HashMap::new();
        for &p in &self.parts {
            *mult.entry(p).or_insert(0) += 1;
        }
        let mut z = BigInt::one();
        for (i, m) in mult {
            z *= BigInt::from(i).pow(m);
            z *= factorial(m as usize);
        }
        z
    }

    /// Hook lengths of every cell, row-major.
    fn hooks(&self) -> Vec<usize> {
        let cols = self.conjugate();
        let mut hooks = Vec::new();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                hooks.push(row - j + cols[j] - i - 1);
            }
        }
        hooks
    }

    fn conjugate(&self) -> Vec<usize> {
        let width = self.parts.first().copied().unwrap_or(0);
        (0..width)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect()
    }

    /// Dimension of the S_n irreducible labelled by this partition, by the
    /// hook length formula n!/prod(hooks).
    pub fn dimension(&self) -> BigInt {
        let mut num = factorial(self.n());
        for h in self.hooks() {
            num /= BigInt::from(h);
        }
        num
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// (2n-1)!! = 1*3*5*...*(2n-1)
pub fn double_factorial_odd(n: usize) -> BigInt {
    (0..n).fold(BigInt::one(), |acc, k| acc * BigInt::from(2 * k + 1))
}

/// All partitions of `n`, each exactly once, in reverse-lexicographic order
/// ([n] first, [1,...,1] last).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// Element of S_n as a 0-based index map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(WgError::Parse("not a bijection".into()));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images_unchecked(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// (self o rhs)(i) = self(rhs(i))
    pub fn compose(&self, rhs: &Permutation) -> Permutation {
        Permutation {
            images: rhs.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k];
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    pub fn num_cycles(&self) -> usize {
        self.cycle_type().len()
    }

    /// |sigma| = n - (number of cycles); the minimal number of transpositions.
    pub fn transposition_length(&self) -> usize {
        self.n() - self.num_cycles()
    }
}

/// Irreducible character chi^lambda evaluated on cycle type mu, by the
/// Murnaghan-Nakayama border-strip recursion.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.n() != mu.n() {
        return Err(WgError::SizeMismatch(format!(
            "character: |lambda|={} but |mu|={}",
            lambda.n(),
            mu.n()
        )));
    }
    let mut memo = HashMap::new();
    Ok(mn(&lambda.parts, &mu.parts, &mut memo))
}

// Border strips are removed in the beta-set (first-column hook length)
// picture: with b_i = lambda_i + (k - 1 - i), removing a strip of length r
// replaces some b_i by b_i - r, which must be nonnegative and not already in
// the set; the strip height is the number of set elements jumped over.
fn mn(
    lambda: &[usize],
    mu: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), BigInt>,
) -> BigInt {
    if mu.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let r = mu[0];
    let rest = &mu[1..];
    let k = lambda.len();
    let betas: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (k - 1 - i))
        .collect();
    let mut total = BigInt::zero();
    for (i, &b) in betas.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if betas.contains(&target) {
            continue;
        }
        let height = betas.iter().filter(|&&x| target < x && x < b).count();
        let mut new_betas = betas.clone();
        new_betas[i] = target;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let m = new_betas.len();
        let next: Vec<usize> = new_betas
            .iter()
            .enumerate()
            .map(|(j, &nb)| nb - (m - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sign = if height % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        total += sign * mn(&next, rest, memo);
    }
    memo.insert(key, total.clone());
    total
}

/// Schur polynomial dimension s_{lambda,d}(1) as a polynomial in d, by the
/// hook content formula prod_{(i,j)} (d + j - i)/hook(i,j).
pub fn schur_dim(lambda: &Partition) -> RationalFunction {
    let mut num = Poly::one();
    let mut den = BigRat::one();
    let hooks = lambda.hooks();
    let mut cell = 0;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let c = j as i64 - i as i64;
            num = &num * &Poly::from_int_coeffs(&[c, 1]);
            den *= rat(hooks[cell] as i64);
            cell += 1;
        }
    }
    RationalFunction::from_poly(num.scale(&(BigRat::one() / den)))
}

/// Catalan number c_n = (2n)!/(n!(n+1)!).
pub fn catalan(n: usize) -> BigInt {
    factorial(2 * n) / (factorial(n) * factorial(n + 1))
}

/// Moebius function on S_n: product over cycles of (-1)^{|C|-1} c_{|C|-1}.
pub fn moebius_perm(sigma: &Permutation) -> BigInt {
    moebius_of_cycle_type(&sigma.cycle_type())
}

pub fn moebius_of_cycle_type(mu: &Partition) -> BigInt {
    let mut m = BigInt::one();
    for &c in mu.parts() {
        let factor = catalan(c - 1);
        m *= if (c - 1) % 2 == 1 { -factor } else { factor };
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        // independent oracle: Euler's recurrence for p(n)
        fn count(n: usize) -> usize {
            fn rec(remaining: usize, max: usize) -> usize {
                if remaining == 0 {
                    return 1;
                }
                (1..=remaining.min(max)).map(|p| rec(remaining - p, p)).sum()
            }
            rec(n, n)
        }
        assert_eq!(partitions_of(10).len(), count(10));
        assert_eq!(partitions_of(10).len(), 42);
    }

    #[test]
    fn partition_order_is_reverse_lex() {
        let ps = partitions_of(4);
        let expect: Vec<Partition> = vec![
            p(&[4]),
            p(&[3, 1]),
            p(&[2, 2]),
            p(&[2, 1, 1]),
            p(&[1, 1, 1, 1]),
        ];
        assert_eq!(ps, expect);
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(3).cycle_type(), p(&[1, 1, 1]));
        // (1 2)(3 4 5) in 0-based images
        let s = Permutation::new(vec![1, 0, 3, 4, 2]).unwrap();
        assert_eq!(s.cycle_type(), p(&[3, 2]));
        assert_eq!(s.cycle_type().n(), 5);
    }

    #[test]
    fn transposition_lengths() {
        assert_eq!(Permutation::identity(4).transposition_length(), 0);
        let t = Permutation::new(vec![1, 0, 2, 3]).unwrap();
        assert_eq!(t.transposition_length(), 1);
        // n-cycle has length n-1; oracle: BFS over the Cayley graph for n<=5
        for n in 2..=5 {
            let cyc = Permutation::new((0..n).map(|i| (i + 1) % n).collect()).unwrap();
            assert_eq!(cyc.transposition_length(), n - 1);
            assert_eq!(bfs_length(&cyc), n - 1);
        }
    }

    fn bfs_length(target: &Permutation) -> usize {
        use std::collections::VecDeque;
        let n = target.n();
        let id = Permutation::identity(n);
        let mut dist: HashMap<Vec<usize>, usize> = HashMap::new();
        dist.insert(id.images().to_vec(), 0);
        let mut queue = VecDeque::from([id]);
        while let Some(cur) = queue.pop_front() {
            let d = dist[cur.images()];
            if cur == *target {
                return d;
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    let mut imgs = cur.images().to_vec();
                    imgs.swap(i, j);
                    if !dist.contains_key(&imgs) {
                        dist.insert(imgs.clone(), d + 1);
                        queue.push_back(Permutation::from_images_unchecked(imgs));
                    }
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn character_one_dimensional_reps() {
        // trivial rep: always 1; sign rep: (-1)^{n - #parts}
        assert_eq!(character(&p(&[2]), &p(&[1, 1])).unwrap(), BigInt::from(1));
        assert_eq!(character(&p(&[2]), &p(&[2])).unwrap(), BigInt::from(1));
        assert_eq!(character(&p(&[1, 1]), &p(&[2])).unwrap(), BigInt::from(-1));
        assert_eq!(character(&p(&[1, 1]), &p(&[1, 1])).unwrap(), BigInt::from(1));
    }

    #[test]
    fn character_standard_rep_of_s3() {
        // chi^{[2,1]}(e) = dim = 2 by the hook length formula
        assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), BigInt::from(2));
        assert_eq!(p(&[2, 1]).dimension(), BigInt::from(2));
        assert_eq!(character(&p(&[2, 1]), &p(&[3])).unwrap(), BigInt::from(-1));
        assert_eq!(character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), BigInt::from(0));
    }

    #[test]
    fn character_size_mismatch_errors() {
        assert!(character(&p(&[2]), &p(&[3])).is_err());
    }

    #[test]
    fn character_orthogonality_small_n() {
        // sum_mu (n!/z_mu) chi^l(mu) chi^l'(mu) = n! delta
        for n in 1..=5 {
            let lambdas = partitions_of(n);
            let nfact = factorial(n);
            for a in &lambdas {
                for b in &lambdas {
                    let mut acc = BigRat::zero();
                    for mu in &lambdas {
                        let w = BigRat::new(nfact.clone(), mu.centralizer_size());
                        let ca = BigRational::from_integer(character(a, mu).unwrap());
                        let cb = BigRational::from_integer(character(b, mu).unwrap());
                        acc += w * ca * cb;
                    }
                    let expect = if a == b {
                        BigRational::from_integer(nfact.clone())
                    } else {
                        BigRat::zero()
                    };
                    assert_eq!(acc, expect, "orthogonality failed for {a} {b}");
                }
            }
        }
    }

    use num::BigRational;

    #[test]
    fn sum_of_squared_dimensions() {
        for n in 1..=6 {
            let total: BigInt = partitions_of(n)
                .iter()
                .map(|l| {
                    let d = l.dimension();
                    &d * &d
                })
                .sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn schur_dims() {
        // [2] -> d(d+1)/2; oracle: count monomials x_a x_b with a<=b at small d
        let s2 = schur_dim(&p(&[2]));
        let s11 = schur_dim(&p(&[1, 1]));
        for d in 1..=6i64 {
            let pairs_le = (1..=d).map(|a| d - a + 1).sum::<i64>();
            let pairs_lt = d * (d - 1) / 2;
            assert_eq!(s2.eval(&rat(d)).unwrap(), rat(pairs_le));
            assert_eq!(s11.eval(&rat(d)).unwrap(), rat(pairs_lt));
        }
        assert_eq!(schur_dim(&p(&[1])), RationalFunction::from_poly(Poly::var()));
    }

    #[test]
    fn schur_dim_zeros_below_length() {
        for lambda in partitions_of(4) {
            let s = schur_dim(&lambda);
            for d in 0..lambda.len() {
                assert_eq!(s.eval(&rat(d as i64)).unwrap(), rat(0));
            }
            let at_len = s.eval(&rat(lambda.len() as i64)).unwrap();
            assert!(at_len > BigRat::zero());
        }
    }

    #[test]
    fn catalan_values() {
        // direct factorial oracle
        assert_eq!(catalan(0), BigInt::from(1));
        assert_eq!(catalan(1), BigInt::from(1));
        assert_eq!(catalan(3), BigInt::from(5));
        for n in 0..10usize {
            let oracle = factorial(2 * n) / (factorial(n) * factorial(n + 1));
            assert_eq!(catalan(n), oracle);
        }
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius_perm(&Permutation::identity(4)), BigInt::from(1));
        let t = Permutation::new(vec![1, 0, 2, 3]).unwrap();
        assert_eq!(moebius_perm(&t), BigInt::from(-1));
        let c3 = Permutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(moebius_perm(&c3), BigInt::from(2));
    }

    #[test]
    fn transposition_length_parity_and_triangle_on_s4() {
        use itertools::Itertools;
        let perms: Vec<Permutation> = (0..4usize)
            .permutations(4)
            .map(Permutation::from_images_unchecked)
            .collect();
        for a in &perms {
            for b in &perms {
                let ab = a.compose(b);
                let la = a.transposition_length();
                let lb = b.transposition_length();
                let lab = ab.transposition_length();
                assert!(lab <= la + lb);
                assert_eq!((la + lb) % 2, lab % 2);
            }
        }
    }
}

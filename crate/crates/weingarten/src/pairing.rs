//! Pair-partition combinatorics behind the orthogonal and symplectic
//! Weingarten calculus: enumeration of all pairings of 2n points, the metric
//! l, coset types, Gram matrices, the pairing Moebius function and the
//! eigenvalues of the Gram operator.

use crate::error::{Result, WgError};
use crate::rational::{BigRat, Poly, RationalFunction};
use crate::symm::{character, double_factorial_odd, partitions_of, Partition, Permutation};
use itertools::Itertools;
use num::{BigInt, BigRational, One, Zero};
use std::collections::HashMap;
use std::fmt;

pub const Z_EIGENVALUE_CAP: usize = 4;
pub const GRAM_CAP: usize = 5;

/// Fixed-point-free involution on {0..2n-1}: n disjoint pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pairing {
    partner: Vec<usize>,
}

impl Pairing {
    pub fn new(partner: Vec<usize>) -> Result<Self> {
        let m = partner.len();
        if m == 0 || m % 2 != 0 {
            return Err(WgError::Parse("pairing needs an even positive number of points".into()));
        }
        for (k, &p) in partner.iter().enumerate() {
            if p >= m || p == k || partner[p] != k {
                return Err(WgError::Parse("not a fixed-point-free involution".into()));
            }
        }
        Ok(Pairing { partner })
    }

    /// The identity diagram {(0,1),(2,3),...}.
    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|k| k ^ 1).collect();
        Pairing { partner }
    }

    pub fn points(&self) -> usize {
        self.partner.len()
    }

    /// Number of pairs n.
    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, k: usize) -> usize {
        self.partner[k]
    }

    pub fn as_permutation(&self) -> Permutation {
        Permutation::from_images_unchecked(self.partner.clone())
    }

    /// Conjugation action sigma . p: pairs (sigma(a), sigma(b)).
    pub fn conjugate_by(&self, sigma: &Permutation) -> Pairing {
        let m = self.partner.len();
        let mut partner = vec![0; m];
        for k in 0..m {
            partner[sigma.apply(k)] = sigma.apply(self.partner[k]);
        }
        Pairing { partner }
    }

    /// Pairs (a, b) with a < b, sorted by a.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len())
            .filter(|&k| k < self.partner[k])
            .map(|k| (k, self.partner[k]))
            .collect()
    }

    /// Parse the 1-based CLI syntax "(1,2)(3,4)".
    pub fn parse(s: &str) -> Result<Self> {
        let mut points: Vec<(usize, usize)> = Vec::new();
        for grp in s.split(')').filter(|t| !t.trim().is_empty()) {
            let grp = grp.trim_start_matches(|c: char| c == '(' || c.is_whitespace());
            let nums: Vec<usize> = grp
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| WgError::Parse(format!("bad pairing point {t:?}")))
                })
                .collect::<Result<_>>()?;
            if nums.len() != 2 || nums[0] == 0 || nums[1] == 0 {
                return Err(WgError::Parse("each pair must hold two 1-based points".into()));
            }
            points.push((nums[0] - 1, nums[1] - 1));
        }
        let m = points.len() * 2;
        let mut partner = vec![usize::MAX; m];
        for (a, b) in points {
            if a >= m || b >= m || partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(WgError::Parse("pairing points must cover 1..2n exactly once".into()));
            }
            partner[a] = b;
            partner[b] = a;
        }
        Pairing::new(partner)
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in self.pairs() {
            write!(f, "({},{})", a + 1, b + 1)?;
        }
        Ok(())
    }
}

/// All (2n-1)!! pairings of 2n points in a deterministic order: the smallest
/// unpaired point is paired with each larger point, recursively.
pub fn enumerate_pairings(n: usize) -> Vec<Pairing> {
    assert!(n >= 1);
    let m = 2 * n;
    let mut out = Vec::new();
    let mut partner = vec![usize::MAX; m];
    fn rec(partner: &mut Vec<usize>, out: &mut Vec<Pairing>) {
        let a = match partner.iter().position(|&p| p == usize::MAX) {
            Some(a) => a,
            None => {
                out.push(Pairing {
                    partner: partner.clone(),
                });
                return;
            }
        };
        for b in (a + 1)..partner.len() {
            if partner[b] == usize::MAX {
                partner[a] = b;
                partner[b] = a;
                rec(partner, out);
                partner[a] = usize::MAX;
                partner[b] = usize::MAX;
            }
        }
    }
    rec(&mut partner, &mut out);
    out
}

/// The metric l(p1,p2) = |p1 p2| / 2; always an integer.
pub fn pairing_distance(p1: &Pairing, p2: &Pairing) -> Result<usize> {
    if p1.points() != p2.points() {
        return Err(WgError::SizeMismatch(format!(
            "pairing_distance: {} vs {} points",
            p1.points(),
            p2.points()
        )));
    }
    let prod = p1.as_permutation().compose(&p2.as_permutation());
    let len = prod.transposition_length();
    debug_assert!(len % 2 == 0);
    Ok(len / 2)
}

/// Coset type: the partition (n_1 >= n_2 >= ...) of n where 2n_i are the orbit
/// sizes of the group generated by p1 and p2.
pub fn coset_type(p1: &Pairing, p2: &Pairing) -> Result<Partition> {
    if p1.points() != p2.points() {
        return Err(WgError::SizeMismatch(format!(
            "coset_type: {} vs {} points",
            p1.points(),
            p2.points()
        )));
    }
    let m = p1.points();
    let mut seen = vec![false; m];
    let mut halves = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut size = 0usize;
        let mut stack = vec![start];
        while let Some(k) = stack.pop() {
            if seen[k] {
                continue;
            }
            seen[k] = true;
            size += 1;
            stack.push(p1.partner(k));
            stack.push(p2.partner(k));
        }
        debug_assert!(size % 2 == 0);
        halves.push(size / 2);
    }
    Ok(Partition::from_unsorted(halves))
}

/// Moebius function on pairs of pairings: prod_i (-1)^{n_i - 1} c_{n_i - 1}
/// over the coset type.
pub fn moebius_pairing(p1: &Pairing, p2: &Pairing) -> Result<BigInt> {
    Ok(crate::symm::moebius_of_cycle_type(&coset_type(p1, p2)?))
}

/// Gram matrix of the Brauer diagram vectors: entry (p1,p2) = d^{n - l(p1,p2)}.
pub struct GramMatrix {
    pub n: usize,
    pub order: Vec<Pairing>,
    pub entries: Vec<Vec<Poly>>,
}

pub fn gram_matrix(n: usize) -> Result<GramMatrix> {
    gram_matrix_with_cap(n, GRAM_CAP)
}

pub fn gram_matrix_with_cap(n: usize, cap: usize) -> Result<GramMatrix> {
    if n > cap {
        return Err(WgError::CapExceeded { what: "gram_matrix", n, cap });
    }
    let order = enumerate_pairings(n);
    let entries = order
        .iter()
        .map(|p1| {
            order
                .iter()
                .map(|p2| {
                    let l = pairing_distance(p1, p2).expect("same size");
                    Poly::monomial(BigRat::one(), n - l)
                })
                .collect()
        })
        .collect();
    Ok(GramMatrix { n, order, entries })
}

/// Eigenvalue z_lambda of the Gram operator on the isotypic block labelled by
/// the doubled diagram 2*lambda, by direct summation over S_{2n}:
///
///   z = sum_{sigma in S_2n} chi^{2 lambda}(sigma) d^{n - l(sigma.Id, Id)}
///       / sum_{sigma in O_n} chi^{2 lambda}(sigma)
///
/// where O_n is the stabilizer of the identity pairing.
pub fn z_eigenvalue(lambda: &Partition) -> Result<RationalFunction> {
    z_eigenvalue_with_cap(lambda, Z_EIGENVALUE_CAP)
}

pub fn z_eigenvalue_with_cap(lambda: &Partition, cap: usize) -> Result<RationalFunction> {
    let n = lambda.n();
    if n == 0 {
        return Ok(RationalFunction::one());
    }
    if n > cap {
        return Err(WgError::CapExceeded { what: "z_eigenvalue", n, cap });
    }
    let two_lambda = lambda.doubled();
    let chi = character_by_cycle_type(&two_lambda);
    let id = Pairing::identity(n);
    let mut num_coeffs = vec![BigRat::zero(); n + 1];
    let mut den = BigInt::zero();
    for images in (0..2 * n).permutations(2 * n) {
        let sigma = Permutation::from_images_unchecked(images);
        let value = &chi[&sigma.cycle_type()];
        let moved = id.conjugate_by(&sigma);
        let l = pairing_distance(&moved, &id).expect("same size");
        num_coeffs[n - l] += BigRational::from_integer(value.clone());
        if l == 0 && moved == id {
            den += value;
        }
    }
    RationalFunction::new(
        Poly::new(num_coeffs),
        Poly::constant(BigRational::from_integer(den)),
    )
}

/// chi^{lambda} on every cycle type of S_{|lambda|}, precomputed.
pub fn character_by_cycle_type(lambda: &Partition) -> HashMap<Partition, BigInt> {
    partitions_of(lambda.n())
        .into_iter()
        .map(|mu| {
            let v = character(lambda, &mu).expect("same size");
            (mu, v)
        })
        .collect()
}

/// Checks sum_{lambda |- n} dim(chi^{2 lambda} of S_2n) = (2n-1)!!.
pub fn dimension_identity_check(n: usize) -> bool {
    let total: BigInt = partitions_of(n)
        .iter()
        .map(|l| l.doubled().dimension())
        .sum();
    total == double_factorial_odd(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn pairing_counts() {
        assert_eq!(enumerate_pairings(1).len(), 1);
        assert_eq!(enumerate_pairings(2).len(), 3);
        // oracle: 9!! by direct product
        let dfact: usize = (0..5).map(|k| 2 * k + 1).product();
        assert_eq!(enumerate_pairings(5).len(), dfact);
        assert_eq!(dfact, 945);
        for n in 1..=6 {
            let count = enumerate_pairings(n).len();
            assert_eq!(BigInt::from(count), double_factorial_odd(n));
        }
    }

    #[test]
    fn distance_examples() {
        for p in enumerate_pairings(4) {
            assert_eq!(pairing_distance(&p, &p).unwrap(), 0);
        }
        let a = Pairing::parse("(1,2)(3,4)").unwrap();
        let b = Pairing::parse("(1,3)(2,4)").unwrap();
        assert_eq!(pairing_distance(&a, &b).unwrap(), 1);
    }

    #[test]
    fn distance_is_a_metric_on_p6() {
        let ps = enumerate_pairings(3);
        for a in &ps {
            for b in &ps {
                let lab = pairing_distance(a, b).unwrap();
                assert_eq!(lab, pairing_distance(b, a).unwrap());
                assert_eq!(lab == 0, a == b);
                for c in &ps {
                    let lac = pairing_distance(a, c).unwrap();
                    let lcb = pairing_distance(c, b).unwrap();
                    assert!(lab <= lac + lcb);
                }
            }
        }
    }

    #[test]
    fn coset_types() {
        let id = Pairing::identity(3);
        assert_eq!(coset_type(&id, &id).unwrap(), pt(&[1, 1, 1]));
        let a = Pairing::parse("(1,2)(3,4)").unwrap();
        let b = Pairing::parse("(1,3)(2,4)").unwrap();
        assert_eq!(coset_type(&a, &b).unwrap(), pt(&[2]));
        let p1 = Pairing::parse("(1,2)(3,4)(5,6)").unwrap();
        let p2 = Pairing::parse("(1,2)(3,5)(4,6)").unwrap();
        assert_eq!(coset_type(&p1, &p2).unwrap(), pt(&[2, 1]));
    }

    #[test]
    fn distance_equals_sum_over_coset_type_on_p6() {
        let ps = enumerate_pairings(3);
        for a in &ps {
            for b in &ps {
                let l = pairing_distance(a, b).unwrap();
                let t = coset_type(a, b).unwrap();
                let total: usize = t.parts().iter().map(|&ni| ni - 1).sum();
                assert_eq!(l, total);
            }
        }
    }

    #[test]
    fn moebius_pairing_values() {
        let ps = enumerate_pairings(3);
        for p in &ps {
            assert_eq!(moebius_pairing(p, p).unwrap(), BigInt::from(1));
        }
        let a = Pairing::parse("(1,2)(3,4)").unwrap();
        let b = Pairing::parse("(1,3)(2,4)").unwrap();
        assert_eq!(moebius_pairing(&a, &b).unwrap(), BigInt::from(-1));
        // coset type [3] -> c_2 = 2
        let p1 = Pairing::parse("(1,2)(3,4)(5,6)").unwrap();
        let p2 = Pairing::parse("(1,4)(3,6)(5,2)").unwrap();
        assert_eq!(coset_type(&p1, &p2).unwrap(), pt(&[3]));
        assert_eq!(moebius_pairing(&p1, &p2).unwrap(), BigInt::from(2));
    }

    #[test]
    fn gram_small() {
        let g = gram_matrix(1).unwrap();
        assert_eq!(g.entries[0][0], Poly::var());
        let g2 = gram_matrix(2).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j {
                    Poly::from_int_coeffs(&[0, 0, 1])
                } else {
                    Poly::var()
                };
                assert_eq!(g2.entries[i][j], expect);
            }
        }
        assert!(matches!(
            gram_matrix(6),
            Err(WgError::CapExceeded { .. })
        ));
    }

    #[test]
    fn z_eigenvalues_n2_match_gram_spectrum() {
        // 3x3 Gram at n=2 has eigenvalues d^2+2d (symmetric vector) and
        // d^2-d (multiplicity 2)
        let z2 = z_eigenvalue(&pt(&[2])).unwrap();
        let z11 = z_eigenvalue(&pt(&[1, 1])).unwrap();
        assert_eq!(
            z2,
            RationalFunction::from_poly(Poly::from_int_coeffs(&[0, 2, 1]))
        );
        assert_eq!(
            z11,
            RationalFunction::from_poly(Poly::from_int_coeffs(&[0, -1, 1]))
        );
        let z1 = z_eigenvalue(&pt(&[1])).unwrap();
        assert_eq!(z1, RationalFunction::from_poly(Poly::var()));
    }

    #[test]
    fn gram_positive_definite_at_large_d() {
        // eigenvalues z_lambda at integer d >= n are positive
        for n in 1..=3 {
            for lambda in partitions_of(n) {
                let z = z_eigenvalue(&lambda).unwrap();
                for d in n as i64..=(n as i64 + 3) {
                    assert!(z.eval(&rat(d)).unwrap() > BigRat::zero());
                }
            }
        }
    }

    #[test]
    fn dimension_identity() {
        assert_eq!(pt(&[1]).doubled().dimension(), BigInt::from(1));
        assert_eq!(
            pt(&[2]).doubled().dimension() + pt(&[1, 1]).doubled().dimension(),
            BigInt::from(3)
        );
        for n in 1..=5 {
            assert!(dimension_identity_check(n));
        }
    }

    #[test]
    fn pairing_parse_round_trip() {
        let p = Pairing::parse("(1,2)(3,4)").unwrap();
        assert_eq!(p, Pairing::identity(2));
        assert_eq!(format!("{}", p), "(1,2)(3,4)");
        assert!(Pairing::parse("(1,1)").is_err());
        assert!(Pairing::parse("(1,2)(2,3)").is_err());
    }

    #[test]
    fn hyperoctahedral_group_size() {
        // stabilizer of Id inside S_2n has order 2^n n!
        for n in 1..=3usize {
            let id = Pairing::identity(n);
            let count = (0..2 * n)
                .permutations(2 * n)
                .filter(|im| {
                    let s = Permutation::from_images_unchecked(im.clone());
                    id.conjugate_by(&s) == id
                })
                .count();
            assert_eq!(
                count,
                2usize.pow(n as u32) * (1..=n).product::<usize>()
            );
        }
    }
}

//! Unitary Weingarten function as an exact rational function of `d`, and the
//! moment formula for products of entries of Haar unitary matrices.

use crate::error::{Result, WgError};
use crate::rational::{BigRat, RationalFunction};
use crate::symm::{
    character, factorial, moebius_of_cycle_type, partitions_of, schur_dim, Partition, Permutation,
};
use num::{BigInt, BigRational};
use std::collections::BTreeMap;

pub const UNITARY_MOMENT_CAP: usize = 8;

/// All Weingarten values for a fixed n, keyed by cycle type.
pub struct UnitaryWgTable {
    pub n: usize,
    pub entries: BTreeMap<Partition, RationalFunction>,
}

impl UnitaryWgTable {
    /// Builds the full table from the character sum
    ///   Wg(mu) = 1/(n!)^2 sum_{lambda |- n} chi^l(e)^2 chi^l(mu) / s_{l,d}(1)
    /// with no length restriction on lambda; evaluation below d = n relies on
    /// pole cancellation in the reduced form.
    pub fn build(n: usize) -> Self {
        assert!(n >= 1);
        let lambdas = partitions_of(n);
        let dims: Vec<BigInt> = lambdas.iter().map(|l| l.dimension()).collect();
        let sdims: Vec<RationalFunction> = lambdas.iter().map(schur_dim).collect();
        let nfact2 = {
            let f = factorial(n);
            BigRational::from_integer(&f * &f)
        };
        let mut entries = BTreeMap::new();
        for mu in partitions_of(n) {
            let mut acc = RationalFunction::zero();
            for (k, lambda) in lambdas.iter().enumerate() {
                let chi = character(lambda, &mu).expect("same size");
                let coeff = BigRational::from_integer(&dims[k] * &dims[k] * &chi) / &nfact2;
                let term = sdims[k].inv().expect("nonzero dimension poly").scale(&coeff);
                acc = acc.add(&term);
            }
            entries.insert(mu, acc);
        }
        UnitaryWgTable { n, entries }
    }
}

/// Wg for a single cycle type mu of S_n.
pub fn wg_unitary(n: usize, mu: &Partition) -> Result<RationalFunction> {
    if mu.n() != n {
        return Err(WgError::SizeMismatch(format!(
            "wg_unitary: mu is a partition of {} not {}",
            mu.n(),
            n
        )));
    }
    Ok(UnitaryWgTable::build(n).entries[mu].clone())
}

/// Leading order of Wg: exponent n + |sigma| and coefficient Moeb(sigma),
/// asserted against the reduced rational function.
pub fn wg_unitary_leading(n: usize, mu: &Partition) -> Result<(usize, BigInt)> {
    let wg = wg_unitary(n, mu)?;
    let length = n - mu.len();
    let exponent = n + length;
    let moeb = moebius_of_cycle_type(mu);
    let order = wg.order().expect("Wg is nonzero");
    assert_eq!(order, -(exponent as i64), "Wg({mu}) order mismatch");
    assert_eq!(
        wg.leading_coeff(),
        BigRational::from_integer(moeb.clone()),
        "Wg({mu}) leading coefficient mismatch"
    );
    Ok((exponent, moeb))
}

/// Query for an integral of matrix entries: the product of U_{i_k j_k} times
/// conjugates of U_{i'_k j'_k}. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitaryMomentQuery {
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub i_bar: Vec<usize>,
    pub j_bar: Vec<usize>,
}

impl UnitaryMomentQuery {
    pub fn new(i: Vec<usize>, j: Vec<usize>, i_bar: Vec<usize>, j_bar: Vec<usize>) -> Result<Self> {
        if i.len() != j.len() || i_bar.len() != j_bar.len() {
            return Err(WgError::SizeMismatch(
                "i/j and i'/j' tuples must have matching lengths".into(),
            ));
        }
        if [&i, &j, &i_bar, &j_bar].iter().any(|t| t.iter().any(|&x| x == 0)) {
            return Err(WgError::IndexOutOfRange("matrix indices are 1-based".into()));
        }
        Ok(UnitaryMomentQuery { i, j, i_bar, j_bar })
    }

    pub fn degree(&self) -> usize {
        self.i.len() + self.i_bar.len()
    }
}

/// Exact moment of a product of Haar-unitary entries, as a reduced rational
/// function of d. Unbalanced queries (different numbers of plain and
/// conjugated factors) vanish identically.
pub fn moment_unitary(q: &UnitaryMomentQuery) -> Result<RationalFunction> {
    moment_unitary_with_cap(q, UNITARY_MOMENT_CAP)
}

pub fn moment_unitary_with_cap(q: &UnitaryMomentQuery, cap: usize) -> Result<RationalFunction> {
    let n = q.i.len();
    if n != q.i_bar.len() {
        return Ok(RationalFunction::zero());
    }
    if n == 0 {
        return Ok(RationalFunction::one());
    }
    if n > cap {
        return Err(WgError::CapExceeded { what: "moment_unitary", n, cap });
    }
    // only sigma with i_k = i'_{sigma(k)} for all k contribute, and likewise
    // for tau on the j side; enumerate those directly
    let sigmas = matching_permutations(&q.i, &q.i_bar);
    if sigmas.is_empty() {
        return Ok(RationalFunction::zero());
    }
    let taus = matching_permutations(&q.j, &q.j_bar);
    if taus.is_empty() {
        return Ok(RationalFunction::zero());
    }
    let table = UnitaryWgTable::build(n);
    // tally cycle types of tau sigma^{-1} over all contributing pairs
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    for sigma in &sigmas {
        let sigma_inv = sigma.inverse();
        for tau in &taus {
            let t = tau.compose(&sigma_inv).cycle_type();
            *counts.entry(t).or_insert(0) += 1;
        }
    }
    let mut acc = RationalFunction::zero();
    for (t, count) in counts {
        let c = BigRat::from_integer(BigInt::from(count));
        acc = acc.add(&table.entries[&t].scale(&c));
    }
    Ok(acc)
}

/// All sigma in S_n with left[k] == right[sigma(k)] for every k.
fn matching_permutations(left: &[usize], right: &[usize]) -> Vec<Permutation> {
    let n = left.len();
    let mut out = Vec::new();
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        k: usize,
        left: &[usize],
        right: &[usize],
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Permutation>,
    ) {
        let n = left.len();
        if k == n {
            out.push(Permutation::from_images_unchecked(images.clone()));
            return;
        }
        for m in 0..n {
            if !used[m] && right[m] == left[k] {
                images[k] = m;
                used[m] = true;
                rec(k + 1, left, right, images, used, out);
                used[m] = false;
            }
        }
    }
    rec(0, left, right, &mut images, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, Poly};
    use num::Zero;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_int_coeffs(num), Poly::from_int_coeffs(den)).unwrap()
    }

    #[test]
    fn wg_n1_and_n2() {
        assert_eq!(wg_unitary(1, &pt(&[1])).unwrap(), rf(&[1], &[0, 1]));
        // 1/(d^2-1) and -1/(d(d^2-1)) = -1/(d^3-d)
        assert_eq!(wg_unitary(2, &pt(&[1, 1])).unwrap(), rf(&[1], &[-1, 0, 1]));
        assert_eq!(wg_unitary(2, &pt(&[2])).unwrap(), rf(&[-1], &[0, -1, 0, 1]));
    }

    #[test]
    fn wg_size_mismatch() {
        assert!(wg_unitary(2, &pt(&[1])).is_err());
    }

    #[test]
    fn moment_abs_u11_fourth() {
        // int |U11|^4 = 2/(d(d+1)), finite at d = 1 where it equals 1
        let q = UnitaryMomentQuery::new(vec![1, 1], vec![1, 1], vec![1, 1], vec![1, 1]).unwrap();
        let m = moment_unitary(&q).unwrap();
        assert_eq!(m, rf(&[2], &[0, 1, 1]));
        assert_eq!(m.eval(&rat(1)).unwrap(), rat(1));
    }

    #[test]
    fn moment_mismatched_indices_vanish() {
        let q = UnitaryMomentQuery::new(vec![1], vec![1], vec![2], vec![1]).unwrap();
        assert!(moment_unitary(&q).unwrap().is_zero());
    }

    #[test]
    fn moment_unbalanced_vanishes() {
        let q = UnitaryMomentQuery::new(vec![1, 1], vec![1, 1], vec![1], vec![1]).unwrap();
        assert!(moment_unitary(&q).unwrap().is_zero());
    }

    #[test]
    fn moment_single_surviving_pair() {
        // only sigma = e, tau = (12) survive; oracle: explicit enumeration of
        // the 4 terms of the double sum
        let q = UnitaryMomentQuery::new(vec![1, 2], vec![2, 1], vec![1, 2], vec![1, 2]).unwrap();
        let m = moment_unitary(&q).unwrap();
        assert_eq!(m, rf(&[-1], &[0, -1, 0, 1]));
    }

    #[test]
    fn leading_terms() {
        let (e, c) = wg_unitary_leading(2, &pt(&[2])).unwrap();
        assert_eq!((e, c), (3, BigInt::from(-1)));
        let (e, c) = wg_unitary_leading(1, &pt(&[1])).unwrap();
        assert_eq!((e, c), (1, BigInt::from(1)));
        let (e, c) = wg_unitary_leading(3, &pt(&[3])).unwrap();
        assert_eq!((e, c), (5, BigInt::from(2)));
    }

    #[test]
    fn unitarity_row_sum() {
        // sum_j |U_{1j}|^2 = 1 at every integer d
        for d in 1..=6usize {
            let mut acc = BigRat::zero();
            for j in 1..=d {
                let q = UnitaryMomentQuery::new(vec![1], vec![j], vec![1], vec![j]).unwrap();
                acc += moment_unitary(&q).unwrap().eval(&rat(d as i64)).unwrap();
            }
            assert_eq!(acc, rat(1));
        }
    }

    #[test]
    fn relabeling_invariance() {
        // common relabeling of (i, i') and of (j, j') leaves the value fixed
        let base = UnitaryMomentQuery::new(vec![1, 2], vec![1, 1], vec![2, 1], vec![1, 1]).unwrap();
        let relabeled =
            UnitaryMomentQuery::new(vec![3, 5], vec![2, 2], vec![5, 3], vec![2, 2]).unwrap();
        assert_eq!(
            moment_unitary(&base).unwrap(),
            moment_unitary(&relabeled).unwrap()
        );
    }

    #[test]
    fn class_function_property() {
        // conjugated index patterns produce identical moments
        let a = UnitaryMomentQuery::new(
            vec![1, 2, 3],
            vec![1, 2, 3],
            vec![2, 3, 1],
            vec![2, 3, 1],
        )
        .unwrap();
        let b = UnitaryMomentQuery::new(
            vec![2, 3, 1],
            vec![2, 3, 1],
            vec![3, 1, 2],
            vec![3, 1, 2],
        )
        .unwrap();
        assert_eq!(moment_unitary(&a).unwrap(), moment_unitary(&b).unwrap());
    }

    #[test]
    fn rational_prolongation_at_small_d() {
        // n = 3 query with all indices <= 1: finite at d = 1 and equal to
        // int_{U(1)} |u|^6 = 1
        let q = UnitaryMomentQuery::new(
            vec![1, 1, 1],
            vec![1, 1, 1],
            vec![1, 1, 1],
            vec![1, 1, 1],
        )
        .unwrap();
        let m = moment_unitary(&q).unwrap();
        assert_eq!(m.eval(&rat(1)).unwrap(), rat(1));
    }

    #[test]
    fn cap_is_enforced() {
        let q = UnitaryMomentQuery::new(vec![1; 9], vec![1; 9], vec![1; 9], vec![1; 9]).unwrap();
        assert!(matches!(moment_unitary(&q), Err(WgError::CapExceeded { .. })));
    }
}

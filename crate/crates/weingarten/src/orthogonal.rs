//! Orthogonal and symplectic Weingarten tables, exact in the dimension
//! parameter, with moment formulas, degenerate-dimension regularization and
//! leading-order asymptotics.
//!
//! The orthogonal Weingarten matrix is the inverse of the pairing Gram matrix
//! over the rational-function field. Its entries depend only on the coset
//! type of the two pairings, so the inversion is done on the coset-collapsed
//! system (one unknown per partition of n) with fraction-free Gaussian
//! elimination; the full matrix is never materialized.

use crate::error::{Result, WgError};
use crate::pairing::{
    character_by_cycle_type, coset_type, enumerate_pairings, pairing_distance, z_eigenvalue,
    Pairing,
};
use crate::rational::{BigRat, Poly, RationalFunction};
use crate::symm::{factorial, moebius_of_cycle_type, partitions_of, Partition, Permutation};
use itertools::Itertools;
use num::{BigInt, BigRational, One, Zero};
use std::collections::{BTreeMap, HashMap};

pub const ORTHO_TABLE_CAP: usize = 5;
pub const CHARACTER_FORM_CAP: usize = 3;
pub const REGULARIZED_CAP: usize = 4;

/// Orthogonal (or symplectic) Weingarten values for fixed n, keyed by the
/// coset type of the pairing pair.
pub struct OrthoWgTable {
    pub n: usize,
    pub by_coset_type: BTreeMap<Partition, RationalFunction>,
}

impl OrthoWgTable {
    pub fn entry(&self, p1: &Pairing, p2: &Pairing) -> Result<&RationalFunction> {
        let t = coset_type(p1, p2)?;
        Ok(&self.by_coset_type[&t])
    }
}

/// Inverts the Gram matrix over the rational-function field, collapsed to
/// coset types: for a representative p1 of each type t, the row
///   sum_p d^{n - l(p1, p)} Wg(coset_type(p, Id)) = [t == [1,...,1]]
/// gives one equation per partition of n.
pub fn wg_orthogonal(n: usize) -> Result<OrthoWgTable> {
    wg_orthogonal_with_cap(n, ORTHO_TABLE_CAP)
}

pub fn wg_orthogonal_with_cap(n: usize, cap: usize) -> Result<OrthoWgTable> {
    if n == 0 || n > cap {
        return Err(WgError::CapExceeded { what: "wg_orthogonal", n, cap });
    }
    let types = partitions_of(n);
    let pairings = enumerate_pairings(n);
    let id = Pairing::identity(n);

    // one representative pairing per coset type against Id
    let mut reps: HashMap<Partition, Pairing> = HashMap::new();
    let mut type_of: Vec<Partition> = Vec::with_capacity(pairings.len());
    for p in &pairings {
        let t = coset_type(p, &id)?;
        reps.entry(t.clone()).or_insert_with(|| p.clone());
        type_of.push(t);
    }
    debug_assert_eq!(reps.len(), types.len());

    let k = types.len();
    let type_index: HashMap<&Partition, usize> =
        types.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut matrix = vec![vec![Poly::zero(); k]; k];
    for (row, t) in types.iter().enumerate() {
        let rep = &reps[t];
        for (pi, p) in pairings.iter().enumerate() {
            let l = pairing_distance(rep, p)?;
            let col = type_index[&type_of[pi]];
            matrix[row][col] = &matrix[row][col] + &Poly::monomial(BigRat::one(), n - l);
        }
    }
    let ones = Partition::new(vec![1; n]).expect("valid");
    let rhs: Vec<Poly> = types
        .iter()
        .map(|t| if *t == ones { Poly::one() } else { Poly::zero() })
        .collect();

    let solution = bareiss_solve(matrix, rhs)?;
    let by_coset_type = types.into_iter().zip(solution).collect();
    Ok(OrthoWgTable { n, by_coset_type })
}

/// Solves A x = b exactly by fraction-free (Bareiss) forward elimination on
/// the polynomial matrix, then back substitution over the function field.
fn bareiss_solve(mut a: Vec<Vec<Poly>>, mut b: Vec<Poly>) -> Result<Vec<RationalFunction>> {
    let k = a.len();
    let mut prev_pivot = Poly::one();
    for col in 0..k {
        if a[col][col].is_zero() {
            let swap = (col + 1..k).find(|&r| !a[r][col].is_zero());
            match swap {
                Some(r) => {
                    a.swap(col, r);
                    b.swap(col, r);
                }
                None => return Err(WgError::DivisionByZero),
            }
        }
        let pivot = a[col][col].clone();
        for row in col + 1..k {
            let factor = a[row][col].clone();
            for j in col..k {
                let num = &(&pivot * &a[row][j]) - &(&factor * &a[col][j]);
                let (q, r) = num.divrem(&prev_pivot);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a[row][j] = q;
            }
            let num = &(&pivot * &b[row]) - &(&factor * &b[col]);
            let (q, r) = num.divrem(&prev_pivot);
            debug_assert!(r.is_zero());
            b[row] = q;
        }
        prev_pivot = pivot;
    }
    let mut x = vec![RationalFunction::zero(); k];
    for row in (0..k).rev() {
        let mut acc = RationalFunction::from_poly(b[row].clone());
        for j in row + 1..k {
            acc = acc.sub(&x[j].mul(&RationalFunction::from_poly(a[row][j].clone())));
        }
        x[row] = acc.mul(&RationalFunction::from_poly(a[row][row].clone()).inv()?);
    }
    Ok(x)
}

/// Symplectic table: every orthogonal entry with d replaced by -d, re-reduced.
pub fn wg_symplectic(n: usize) -> Result<OrthoWgTable> {
    let ortho = wg_orthogonal(n)?;
    Ok(OrthoWgTable {
        n,
        by_coset_type: ortho
            .by_coset_type
            .into_iter()
            .map(|(t, f)| (t, f.substitute_neg()))
            .collect(),
    })
}

/// Character-expansion form of the orthogonal Weingarten entry,
///   <p1, Wg p2> = sum_lambda (1/z_lambda) (dim(2 lambda)/(2n)!)
///                 sum_{sigma : sigma.p2 = p1} chi^{2 lambda}(sigma),
/// computed by direct summation over S_{2n}.
pub fn wg_orthogonal_character_form(
    n: usize,
    p1: &Pairing,
    p2: &Pairing,
) -> Result<RationalFunction> {
    if n > CHARACTER_FORM_CAP {
        return Err(WgError::CapExceeded { what: "wg_orthogonal_character_form", n, cap: CHARACTER_FORM_CAP });
    }
    if p1.n() != n || p2.n() != n {
        return Err(WgError::SizeMismatch("pairings must have 2n points".into()));
    }
    let lambdas = partitions_of(n);
    let chis: Vec<HashMap<Partition, BigInt>> = lambdas
        .iter()
        .map(|l| character_by_cycle_type(&l.doubled()))
        .collect();
    let mut sums = vec![BigInt::zero(); lambdas.len()];
    for images in (0..2 * n).permutations(2 * n) {
        let sigma = Permutation::from_images_unchecked(images);
        if p2.conjugate_by(&sigma) != *p1 {
            continue;
        }
        let ct = sigma.cycle_type();
        for (k, chi) in chis.iter().enumerate() {
            sums[k] += &chi[&ct];
        }
    }
    let fact2n = BigRational::from_integer(factorial(2 * n));
    let mut acc = RationalFunction::zero();
    for (k, lambda) in lambdas.iter().enumerate() {
        let z = z_eigenvalue(lambda)?;
        let dim = BigRational::from_integer(lambda.doubled().dimension());
        let coeff = dim * BigRational::from_integer(sums[k].clone()) / &fact2n;
        acc = acc.add(&z.inv()?.scale(&coeff));
    }
    Ok(acc)
}

/// Moment query for entries of a Haar orthogonal (or symplectic) matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoMomentQuery {
    pub i: Vec<usize>,
    pub j: Vec<usize>,
}

impl OrthoMomentQuery {
    pub fn new(i: Vec<usize>, j: Vec<usize>) -> Result<Self> {
        if i.len() != j.len() {
            return Err(WgError::SizeMismatch(
                "i and j tuples must have the same length".into(),
            ));
        }
        if i.iter().chain(j.iter()).any(|&x| x == 0) {
            return Err(WgError::IndexOutOfRange("matrix indices are 1-based".into()));
        }
        Ok(OrthoMomentQuery { i, j })
    }

    pub fn degree(&self) -> usize {
        self.i.len()
    }
}

/// Exact moment of a product of Haar-orthogonal entries as a reduced rational
/// function of d. Odd-length products vanish identically.
pub fn moment_orthogonal(q: &OrthoMomentQuery) -> Result<RationalFunction> {
    let len = q.i.len();
    if len % 2 == 1 {
        return Ok(RationalFunction::zero());
    }
    if len == 0 {
        return Ok(RationalFunction::one());
    }
    let n = len / 2;
    let table = wg_orthogonal(n)?;
    let pairings = enumerate_pairings(n);
    let admissible = |indices: &[usize]| -> Vec<&Pairing> {
        pairings
            .iter()
            .filter(|p| p.pairs().iter().all(|&(a, b)| indices[a] == indices[b]))
            .collect()
    };
    let row = admissible(&q.i);
    let col = admissible(&q.j);
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    for p1 in &row {
        for p2 in &col {
            *counts.entry(coset_type(p1, p2)?).or_insert(0) += 1;
        }
    }
    let mut acc = RationalFunction::zero();
    for (t, count) in counts {
        let c = BigRat::from_integer(BigInt::from(count));
        acc = acc.add(&table.by_coset_type[&t].scale(&c));
    }
    Ok(acc)
}

/// Evaluates an orthogonal moment at an integer dimension, falling back to
/// the regularized table when the reduced rational function still has a pole
/// there (degenerate dimensions below the moment degree).
pub fn moment_orthogonal_at(q: &OrthoMomentQuery, d0: usize) -> Result<BigRat> {
    if q.i.iter().chain(q.j.iter()).any(|&x| x > d0) {
        return Err(WgError::IndexOutOfRange(format!(
            "orthogonal indices must lie in 1..={d0}"
        )));
    }
    let rf = moment_orthogonal(q)?;
    match rf.eval(&BigRational::from_integer(BigInt::from(d0))) {
        Ok(v) => Ok(v),
        Err(WgError::PoleAt(_)) => {
            let n = q.i.len() / 2;
            let reg = wg_orthogonal_regularized(n, d0)?;
            let pairings = enumerate_pairings(n);
            let admissible = |indices: &[usize]| -> Vec<usize> {
                pairings
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| p.pairs().iter().all(|&(a, b)| indices[a] == indices[b]))
                    .map(|(k, _)| k)
                    .collect()
            };
            let mut acc = BigRat::zero();
            for &a in &admissible(&q.i) {
                for &b in &admissible(&q.j) {
                    acc += &reg[a][b];
                }
            }
            Ok(acc)
        }
        Err(e) => Err(e),
    }
}

/// Sign of the full contraction of two pairings through the antisymmetric
/// form J: the sum over indices of the product of J-factors of both pairings
/// equals this sign times (2d)^{#joint orbits}. Computed by walking each
/// joint orbit with alternating index values and multiplying the J-factor
/// orientations (the factor for a pair (a, b), a < b, is the value sign at a).
pub fn symplectic_form_sign(p1: &Pairing, p2: &Pairing) -> Result<i64> {
    if p1.points() != p2.points() {
        return Err(WgError::SizeMismatch(
            "pairings must have the same number of points".into(),
        ));
    }
    let m = p1.points();
    let mut eps = vec![0i8; m];
    let mut visited = vec![false; m];
    for start in 0..m {
        if visited[start] {
            continue;
        }
        let mut x = start;
        let mut e = 1i8;
        loop {
            eps[x] = e;
            visited[x] = true;
            let y = p1.partner(x);
            eps[y] = -e;
            visited[y] = true;
            x = p2.partner(y);
            e = eps[y].wrapping_neg();
            if x == start {
                break;
            }
        }
    }
    let mut sign = 1i64;
    for (a, _) in p1.pairs().into_iter().chain(p2.pairs()) {
        sign *= eps[a] as i64;
    }
    Ok(sign)
}

/// Per-pairing sign eta(p) normalizing the symplectic Gram to the orthogonal
/// one: eta(p) = sign(Id, p) * (-1)^{l(Id, p)}, so that
/// sign(p1, p2) = eta(p1) eta(p2) (-1)^{l(p1, p2)} (asserted by tests).
pub fn symplectic_eta(p: &Pairing) -> Result<i64> {
    let id = Pairing::identity(p.n());
    let l = pairing_distance(&id, p)?;
    let s = symplectic_form_sign(&id, p)?;
    Ok(if l % 2 == 1 { -s } else { s })
}

/// Signed contraction of an index tuple along a pairing with the symplectic
/// form J on C^{2d} (J_{i, d+i} = 1, antisymmetric): the product of
/// J_{i_a, i_b} over pairs (a, b) with a < b.
fn symplectic_delta(p: &Pairing, indices: &[usize], d: usize) -> i64 {
    let mut sign = 1i64;
    for (a, b) in p.pairs() {
        let x = indices[a];
        let y = indices[b];
        if y == x + d && x <= d {
            // sign *= +1
        } else if x == y + d && y <= d {
            sign = -sign;
        } else {
            return 0;
        }
    }
    sign
}

/// Exact moment of entries of a Haar symplectic matrix in M_{2d}: the
/// orthogonal formula with Kronecker deltas replaced by eta-normalized
/// J-contractions and the Weingarten value taken as (-1)^n times the
/// orthogonal rational function evaluated at -2d (poles cancel in the
/// reduced total sum).
pub fn moment_symplectic(q: &OrthoMomentQuery, d: usize) -> Result<BigRat> {
    let len = q.i.len();
    if q.i.iter().chain(q.j.iter()).any(|&x| x > 2 * d) {
        return Err(WgError::IndexOutOfRange(format!(
            "symplectic indices must lie in 1..={}",
            2 * d
        )));
    }
    if len % 2 == 1 {
        return Ok(BigRat::zero());
    }
    if len == 0 {
        return Ok(BigRat::one());
    }
    let n = len / 2;
    let table = wg_orthogonal(n)?;
    let pairings = enumerate_pairings(n);
    let etas: Vec<i64> = pairings
        .iter()
        .map(symplectic_eta)
        .collect::<Result<Vec<_>>>()?;
    let deltas_i: Vec<i64> = pairings
        .iter()
        .zip(&etas)
        .map(|(p, eta)| eta * symplectic_delta(p, &q.i, d))
        .collect();
    let deltas_j: Vec<i64> = pairings
        .iter()
        .zip(&etas)
        .map(|(p, eta)| eta * symplectic_delta(p, &q.j, d))
        .collect();
    let mut weights: BTreeMap<Partition, i64> = BTreeMap::new();
    for (a, p1) in pairings.iter().enumerate() {
        if deltas_i[a] == 0 {
            continue;
        }
        for (b, p2) in pairings.iter().enumerate() {
            if deltas_j[b] == 0 {
                continue;
            }
            *weights.entry(coset_type(p1, p2)?).or_insert(0) += deltas_i[a] * deltas_j[b];
        }
    }
    let mut acc = RationalFunction::zero();
    for (t, w) in weights {
        let c = BigRat::from_integer(BigInt::from(w));
        acc = acc.add(&table.by_coset_type[&t].scale(&c));
    }
    let sign = if n % 2 == 1 { -BigRat::one() } else { BigRat::one() };
    Ok(sign * acc.eval(&-rat2(d))?)
}

fn rat2(d: usize) -> BigRat {
    BigRational::from_integer(BigInt::from(2 * d))
}

/// Regularized Weingarten matrix at a fixed integer dimension d0, valid also
/// for d0 < n: the pseudo-inverse of the numeric Gram matrix built from the
/// eigenprojections with z_lambda(d0) != 0, in exact rational arithmetic.
/// Rows and columns follow the `enumerate_pairings` order.
pub fn wg_orthogonal_regularized(n: usize, d0: usize) -> Result<Vec<Vec<BigRat>>> {
    if n == 0 || n > REGULARIZED_CAP {
        return Err(WgError::CapExceeded { what: "wg_orthogonal_regularized", n, cap: REGULARIZED_CAP });
    }
    let d0_rat = BigRational::from_integer(BigInt::from(d0));
    let lambdas = partitions_of(n);
    let fact2n = BigRational::from_integer(factorial(2 * n));

    // per cycle type mu of S_2n: s(mu) = sum over surviving lambda of
    //   (1/z_lambda(d0)) (dim(2 lambda)/(2n)!) chi^{2 lambda}(mu)
    let mut s_by_type: HashMap<Partition, BigRat> = HashMap::new();
    for lambda in &lambdas {
        let z = z_eigenvalue(lambda)?.eval(&d0_rat).expect("z is a polynomial");
        if z.is_zero() {
            continue;
        }
        let dim = BigRational::from_integer(lambda.doubled().dimension());
        let coeff = dim / &fact2n / z;
        for (mu, chi) in character_by_cycle_type(&lambda.doubled()) {
            let add = &coeff * BigRational::from_integer(chi);
            *s_by_type.entry(mu).or_insert_with(BigRat::zero) += add;
        }
    }

    let pairings = enumerate_pairings(n);
    let index: HashMap<&Pairing, usize> =
        pairings.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let m = pairings.len();
    let mut out = vec![vec![BigRat::zero(); m]; m];
    let zero = BigRat::zero();
    for images in (0..2 * n).permutations(2 * n) {
        let sigma = Permutation::from_images_unchecked(images);
        let s = s_by_type.get(&sigma.cycle_type()).unwrap_or(&zero);
        if s.is_zero() {
            continue;
        }
        for (b, p2) in pairings.iter().enumerate() {
            let a = index[&p2.conjugate_by(&sigma)];
            out[a][b] += s;
        }
    }
    Ok(out)
}

/// Asserts the leading-order law for an orthogonal coset type: the reduced
/// entry has order exactly d^{-(n+l)} with leading coefficient equal to the
/// pairing Moebius value, l = sum (n_i - 1).
pub fn wg_orthogonal_leading(n: usize, t: &Partition) -> Result<(usize, BigInt)> {
    if t.n() != n {
        return Err(WgError::SizeMismatch(format!(
            "coset type {t} is not a partition of {n}"
        )));
    }
    let table = wg_orthogonal(n)?;
    let entry = &table.by_coset_type[t];
    let l: usize = t.parts().iter().map(|&ni| ni - 1).sum();
    let exponent = n + l;
    let moeb = moebius_of_cycle_type(t);
    assert_eq!(
        entry.order().expect("nonzero entry"),
        -(exponent as i64),
        "Wg({t}) order mismatch"
    );
    assert_eq!(
        entry.leading_coeff(),
        BigRational::from_integer(moeb.clone()),
        "Wg({t}) leading coefficient mismatch"
    );
    Ok((exponent, moeb))
}

/// Verifies Gram * Wg = I entrywise over the rational-function field.
pub fn gram_times_wg_is_identity(n: usize) -> Result<bool> {
    let table = wg_orthogonal(n)?;
    let pairings = enumerate_pairings(n);
    for p1 in &pairings {
        for p2 in &pairings {
            let mut per_type: BTreeMap<Partition, Poly> = BTreeMap::new();
            for p in &pairings {
                let l = pairing_distance(p1, p)?;
                let t = coset_type(p, p2)?;
                let e = per_type.entry(t).or_insert_with(Poly::zero);
                *e = &*e + &Poly::monomial(BigRat::one(), n - l);
            }
            let mut acc = RationalFunction::zero();
            for (t, c) in per_type {
                acc = acc.add(&table.by_coset_type[&t].mul(&RationalFunction::from_poly(c)));
            }
            let expect = if p1 == p2 {
                RationalFunction::one()
            } else {
                RationalFunction::zero()
            };
            if acc != expect {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The 11 orthogonal Weingarten values for n <= 4, written out in closed
/// form; used as golden data by the test suites.
pub fn golden_orthogonal_table() -> Vec<(Partition, RationalFunction)> {
    let pt = |parts: &[usize]| Partition::new(parts.to_vec()).expect("valid");
    let rf = |num: &[i64], den_roots: &[i64], num_is_poly: bool| -> RationalFunction {
        let num_poly = if num_is_poly {
            Poly::from_int_coeffs(num)
        } else {
            Poly::constant(BigRat::from_integer(BigInt::from(num[0])))
        };
        let mut den = Poly::one();
        for &r in den_roots {
            den = &den * &Poly::from_int_coeffs(&[-r, 1]);
        }
        RationalFunction::new(num_poly, den).expect("valid")
    };
    vec![
        (pt(&[1]), rf(&[1], &[0], false)),
        (pt(&[1, 1]), rf(&[1, 1], &[0, 1, -2], true)),
        (pt(&[2]), rf(&[-1], &[0, 1, -2], false)),
        (pt(&[1, 1, 1]), rf(&[-2, 3, 1], &[0, 1, 2, -2, -4], true)),
        (pt(&[2, 1]), rf(&[-1], &[0, 1, 2, -4], false)),
        (pt(&[3]), rf(&[2], &[0, 1, 2, -2, -4], false)),
        (pt(&[1, 1, 1, 1]), rf(&[-6, -35, 1, 7, 1], &[0, -1, -2, -4, -6, 1, 2, 3], true)),
        (pt(&[2, 1, 1]), rf(&[6, -3, -6, -1], &[0, -1, -2, -4, -6, 1, 2, 3], true)),
        (pt(&[2, 2]), rf(&[18, 5, 1], &[0, -1, -2, -4, -6, 1, 2, 3], true)),
        (pt(&[3, 1]), rf(&[8, 2], &[-1, -2, -4, -6, 1, 2, 3], true)),
        (pt(&[4]), rf(&[-6, -5], &[0, -1, -2, -4, -6, 1, 2, 3], true)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_frac};

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn table_n1_and_n2() {
        let t1 = wg_orthogonal(1).unwrap();
        assert_eq!(t1.by_coset_type[&pt(&[1])].factored(), "1/d");
        let t2 = wg_orthogonal(2).unwrap();
        assert_eq!(
            t2.by_coset_type[&pt(&[1, 1])].factored(),
            "(d+1)/(d(d-1)(d+2))"
        );
        assert_eq!(t2.by_coset_type[&pt(&[2])].factored(), "-1/(d(d-1)(d+2))");
    }

    #[test]
    fn golden_table_matches_computation() {
        for n in 1..=4usize {
            let table = wg_orthogonal(n).unwrap();
            for (t, expect) in golden_orthogonal_table() {
                if t.n() != n {
                    continue;
                }
                assert_eq!(table.by_coset_type[&t], expect, "mismatch at Wg({t})");
            }
        }
    }

    #[test]
    fn gram_inverse_identity_small() {
        assert!(gram_times_wg_is_identity(1).unwrap());
        assert!(gram_times_wg_is_identity(2).unwrap());
        assert!(gram_times_wg_is_identity(3).unwrap());
    }

    #[test]
    fn character_form_equals_gram_inverse() {
        for n in 1..=3usize {
            let table = wg_orthogonal(n).unwrap();
            let ps = enumerate_pairings(n);
            for p1 in &ps {
                for p2 in &ps {
                    let cf = wg_orthogonal_character_form(n, p1, p2).unwrap();
                    assert_eq!(&cf, table.entry(p1, p2).unwrap());
                }
            }
        }
    }

    #[test]
    fn moment_o11_squared() {
        let q = OrthoMomentQuery::new(vec![1, 1], vec![1, 1]).unwrap();
        let m = moment_orthogonal(&q).unwrap();
        assert_eq!(m.factored(), "1/d");
    }

    #[test]
    fn moment_o11_fourth() {
        // 3 diagonal + 6 off-diagonal Weingarten entries from the n=2 table:
        // 3 Wg([1,1]) + 6 Wg([2]) = 3(d+1-2)/(d(d-1)(d+2)) = 3/(d(d+2))
        let q = OrthoMomentQuery::new(vec![1, 1, 1, 1], vec![1, 1, 1, 1]).unwrap();
        let m = moment_orthogonal(&q).unwrap();
        assert_eq!(m.factored(), "3/(d(d+2))");
        // sanity at d = 1: O(1) = {-1, +1}
        assert_eq!(m.eval(&rat(1)).unwrap(), rat(1));
    }

    #[test]
    fn moment_o11_o22_squared() {
        // only the pairing {(1,2),(3,4)} survives in both deltas
        let q = OrthoMomentQuery::new(vec![1, 1, 2, 2], vec![1, 1, 2, 2]).unwrap();
        let m = moment_orthogonal(&q).unwrap();
        assert_eq!(m.factored(), "(d+1)/(d(d-1)(d+2))");
        assert_eq!(m.eval(&rat(2)).unwrap(), rat_frac(3, 8));
    }

    #[test]
    fn odd_moments_vanish_without_enumeration() {
        let q = OrthoMomentQuery::new(vec![1, 1, 1], vec![1, 1, 1]).unwrap();
        assert!(moment_orthogonal(&q).unwrap().is_zero());
        assert_eq!(moment_symplectic(&q, 3).unwrap(), BigRat::zero());
    }

    #[test]
    fn symplectic_substitution() {
        let t = wg_symplectic(1).unwrap();
        assert_eq!(t.by_coset_type[&pt(&[1])].factored(), "-1/d");
        let t2 = wg_symplectic(2).unwrap();
        // -1/(d(d-1)(d+2)) under d -> -d becomes 1/(d(d+1)(d-2))
        assert_eq!(t2.by_coset_type[&pt(&[2])].factored(), "1/(d(d+1)(d-2))");
    }

    #[test]
    fn symplectic_sign_factorizes_over_pairings() {
        // the joint-orbit sign of the antisymmetric contraction splits as
        // eta(p1) eta(p2) (-1)^{l(p1,p2)}; this is what licenses reusing the
        // coset-type table for symplectic moments
        for n in 1..=4usize {
            let ps = enumerate_pairings(n);
            let etas: Vec<i64> = ps.iter().map(|p| symplectic_eta(p).unwrap()).collect();
            for (a, p1) in ps.iter().enumerate() {
                for (b, p2) in ps.iter().enumerate() {
                    let eps = symplectic_form_sign(p1, p2).unwrap();
                    let l = pairing_distance(p1, p2).unwrap();
                    let predicted = etas[a] * etas[b] * if l % 2 == 1 { -1 } else { 1 };
                    assert_eq!(eps, predicted, "n={n} p1={p1} p2={p2}");
                }
            }
        }
    }

    #[test]
    fn symplectic_exact_su2_moments() {
        // Sp(1) = SU(2): E[M11 M22] = E[|a|^2] = 1/2, E[M12 M21] = -1/2,
        // E[|a|^4] = 1/3, E[M11 M12 M21 M22] = -1/6, E[|a|^6] = 1/4
        let m = |i: &[usize], j: &[usize]| {
            moment_symplectic(&OrthoMomentQuery::new(i.to_vec(), j.to_vec()).unwrap(), 1).unwrap()
        };
        assert_eq!(m(&[1, 2], &[1, 2]), rat_frac(1, 2));
        assert_eq!(m(&[1, 2], &[2, 1]), rat_frac(-1, 2));
        assert_eq!(m(&[1, 2], &[1, 1]), BigRat::zero());
        assert_eq!(m(&[1, 1, 2, 2], &[1, 1, 2, 2]), rat_frac(1, 3));
        assert_eq!(m(&[1, 2, 1, 2], &[1, 2, 1, 2]), rat_frac(1, 3));
        assert_eq!(m(&[1, 1, 2, 2], &[1, 2, 1, 2]), rat_frac(-1, 6));
        assert_eq!(m(&[1, 2, 1, 2, 1, 2], &[1, 2, 1, 2, 1, 2]), rat_frac(1, 4));
    }

    #[test]
    fn symplectic_index_range() {
        let q = OrthoMomentQuery::new(vec![3, 1], vec![1, 1]).unwrap();
        assert!(matches!(
            moment_symplectic(&q, 1),
            Err(WgError::IndexOutOfRange(_))
        ));
    }

    #[test]
    fn regularized_matches_symbolic_in_regular_case() {
        let n = 2;
        let d0 = 5usize;
        let reg = wg_orthogonal_regularized(n, d0).unwrap();
        let table = wg_orthogonal(n).unwrap();
        let ps = enumerate_pairings(n);
        for (a, p1) in ps.iter().enumerate() {
            for (b, p2) in ps.iter().enumerate() {
                let sym = table.entry(p1, p2).unwrap().eval(&rat(d0 as i64)).unwrap();
                assert_eq!(reg[a][b], sym);
            }
        }
    }

    #[test]
    fn regularized_reproduces_o1_averages() {
        // at d0 = 1 every admissible product of O(1) = {+-1} entries averages
        // to 1 for all-ones index tuples: the double sum over all pairings of
        // the regularized entries must equal 1
        for n in 1..=3usize {
            let reg = wg_orthogonal_regularized(n, 1).unwrap();
            let total: BigRat = reg.iter().flatten().cloned().sum();
            assert_eq!(total, rat(1), "n = {n}");
        }
    }

    #[test]
    fn leading_terms() {
        assert_eq!(wg_orthogonal_leading(2, &pt(&[1, 1])).unwrap(), (2, BigInt::from(1)));
        assert_eq!(wg_orthogonal_leading(2, &pt(&[2])).unwrap(), (3, BigInt::from(-1)));
        assert_eq!(wg_orthogonal_leading(3, &pt(&[3])).unwrap(), (5, BigInt::from(2)));
    }

    #[test]
    fn cap_errors() {
        assert!(matches!(wg_orthogonal(6), Err(WgError::CapExceeded { .. })));
        let id = Pairing::identity(4);
        assert!(matches!(
            wg_orthogonal_character_form(4, &id, &id),
            Err(WgError::CapExceeded { .. })
        ));
    }
}

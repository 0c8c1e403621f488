//! Dimension, multidegrees and multigraded Hilbert function of the closure
//! of the image of `P^{d-1} ⇢ ∏_i P(k^d / W_i)`, for coordinate subspaces
//! `W_i`.
//!
//! Everything is driven by the table `d_I = dim ∩_{i∈I} W_i`. The
//! admissible tuples of total degree `h` are
//!
//! ```text
//! M(h) = { m ∈ Z_{≥0}^n : Σ m_i = h,  d − Σ_{i∈I} m_i > d_I  for all I ≠ ∅ }
//! ```
//!
//! and the image has dimension `p = max { h : M(h) ≠ ∅ }`, multidegree
//! function equal to one exactly on `M(p)`, and Hilbert function
//!
//! ```text
//! H(u) = Σ_{∅ ≠ S ⊆ M(p)} (−1)^{|S|−1} ∏_i C(u_i + ℓ_{S,i}, ℓ_{S,i}),
//! ℓ_{S,i} = min_{m∈S} m_i.
//! ```

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest factor count handled by the subset tables.
pub const MAX_FACTORS: usize = 16;

/// Largest ambient dimension representable by a coordinate bitmask.
pub const MAX_AMBIENT: usize = 64;

/// Span of a subset of the standard basis vectors of `k^d` (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoordinateSubspace {
    d: usize,
    mask: u64,
}

impl CoordinateSubspace {
    pub fn new(d: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        if d == 0 || d > MAX_AMBIENT {
            return Err(Error::Contract(format!(
                "ambient dimension {d} outside 1..={MAX_AMBIENT}"
            )));
        }
        let mut mask = 0u64;
        for j in members {
            if j >= d {
                return Err(Error::Contract(format!(
                    "basis index {j} out of range for dimension {d}"
                )));
            }
            mask |= 1 << j;
        }
        Ok(CoordinateSubspace { d, mask })
    }

    pub(crate) fn from_mask(d: usize, mask: u64) -> Self {
        debug_assert!(d <= MAX_AMBIENT && (d == 64 || mask >> d == 0));
        CoordinateSubspace { d, mask }
    }

    pub fn zero(d: usize) -> Self {
        CoordinateSubspace { d, mask: 0 }
    }

    pub fn ambient(&self) -> usize {
        self.d
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn dim(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_zero(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, j: usize) -> bool {
        j < self.d && self.mask & (1 << j) != 0
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.d).filter(|&j| self.contains(j)).collect()
    }

    /// Span of the basis vectors not in `self`.
    pub fn complement(&self) -> Self {
        let full = if self.d == 64 {
            u64::MAX
        } else {
            (1u64 << self.d) - 1
        };
        CoordinateSubspace {
            d: self.d,
            mask: full & !self.mask,
        }
    }
}

/// `d_I` for every nonempty subset `I ⊆ {0, …, n−1}`, indexed by bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DIndexTable {
    d: usize,
    n: usize,
    dims: Vec<usize>,
}

impl DIndexTable {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `d_I` for the subset encoded by `subset` (bit `i` set iff `i ∈ I`).
    pub fn get(&self, subset: usize) -> usize {
        assert!(
            subset != 0 && subset < self.dims.len(),
            "subset out of range"
        );
        self.dims[subset]
    }

    /// `d_I` for an explicit list of indices.
    pub fn get_indices(&self, indices: &[usize]) -> usize {
        self.get(indices.iter().fold(0, |acc, i| acc | (1 << i)))
    }

    /// Nonempty subset masks with their values, in increasing mask order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.dims.iter().copied().enumerate().skip(1)
    }
}

pub fn intersection_dims(kernels: &[CoordinateSubspace]) -> Result<DIndexTable> {
    let n = kernels.len();
    if n == 0 {
        return Err(Error::Contract("at least one subspace is required".into()));
    }
    if n > MAX_FACTORS {
        return Err(Error::Contract(format!(
            "{n} factors exceed the supported {MAX_FACTORS}"
        )));
    }
    let d = kernels[0].ambient();
    if let Some(bad) = kernels.iter().find(|k| k.ambient() != d) {
        return Err(Error::Dimension {
            expected: d,
            found: bad.ambient(),
        });
    }
    let mut meet = vec![0u64; 1 << n];
    let mut dims = vec![0usize; 1 << n];
    meet[0] = u64::MAX;
    for subset in 1..(1usize << n) {
        let low = subset.trailing_zeros() as usize;
        meet[subset] = meet[subset & (subset - 1)] & kernels[low].mask();
        dims[subset] = meet[subset].count_ones() as usize;
    }
    Ok(DIndexTable { d, n, dims })
}

fn is_admissible(table: &DIndexTable, m: &[usize]) -> bool {
    let mut sums = vec![0usize; 1 << table.n];
    for subset in 1..(1usize << table.n) {
        let low = subset.trailing_zeros() as usize;
        sums[subset] = sums[subset & (subset - 1)] + m[low];
        if sums[subset] >= table.d || table.d - sums[subset] <= table.dims[subset] {
            return false;
        }
    }
    true
}

/// Every tuple in `M(h)`, in lexicographic order.
pub fn admissible_tuples(table: &DIndexTable, h: usize) -> BTreeSet<Vec<usize>> {
    // singleton constraints bound each entry by d − 1 − d_{i}
    let caps: Vec<usize> = (0..table.n)
        .map(|i| table.d - 1 - table.dims[1 << i].min(table.d - 1))
        .collect();
    let singleton_ok = (0..table.n).all(|i| table.dims[1 << i] < table.d);
    let mut out = BTreeSet::new();
    if !singleton_ok {
        return out;
    }
    let mut current = vec![0usize; table.n];
    fill(table, &caps, h, 0, &mut current, &mut out);
    out
}

fn fill(
    table: &DIndexTable,
    caps: &[usize],
    remaining: usize,
    i: usize,
    current: &mut Vec<usize>,
    out: &mut BTreeSet<Vec<usize>>,
) {
    if i + 1 == current.len() {
        if remaining <= caps[i] {
            current[i] = remaining;
            if is_admissible(table, current) {
                out.insert(current.clone());
            }
        }
        return;
    }
    let rest_cap: usize = caps[i + 1..].iter().sum();
    let lo = remaining.saturating_sub(rest_cap);
    for v in lo..=remaining.min(caps[i]) {
        current[i] = v;
        fill(table, caps, remaining - v, i + 1, current, out);
    }
}

/// Dimension `p` together with the tuples of `M(p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultidegreeSet {
    pub p: usize,
    pub tuples: BTreeSet<Vec<usize>>,
}

impl MultidegreeSet {
    pub fn n(&self) -> Option<usize> {
        self.tuples.iter().next().map(Vec::len)
    }

    pub fn contains(&self, m: &[usize]) -> bool {
        self.tuples.contains(m)
    }
}

/// `p = max { h ≤ n(d − 1) : M(h) ≠ ∅ }`, found by scanning downward.
pub fn dimension_p(table: &DIndexTable) -> Result<usize> {
    Ok(multidegree_set(table)?.p)
}

pub fn multidegree_set(table: &DIndexTable) -> Result<MultidegreeSet> {
    if admissible_tuples(table, 0).is_empty() {
        return Err(Error::UndefinedMap);
    }
    let top = table.n * (table.d - 1);
    for h in (0..=top).rev() {
        let tuples = admissible_tuples(table, h);
        if !tuples.is_empty() {
            return Ok(MultidegreeSet { p: h, tuples });
        }
    }
    unreachable!("M(0) is nonempty")
}

/// `C(n, k)` as an exact big integer.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Hilbert function of the image variety at the multidegree `u`.
///
/// The alternating sum over subsets of `M(p)` is an inclusion–exclusion
/// count: `∏_i C(u_i + ℓ_i, ℓ_i)` counts `n`-tuples of monomials of degrees
/// `u_i` whose variables in factor `i` have index at most `ℓ_i`, and taking
/// minima over `S` is intersecting those sets. The sum is therefore the size
/// of their union, which we count directly by the largest variable index `k`
/// used in each factor: `k` contributes `∏_i N(u_i, k_i)` iff it is dominated
/// by some tuple of `M(p)`, where `N(u, k) = C(u + k, k) − C(u + k − 1, k − 1)`
/// counts degree-`u` monomials whose largest variable index is exactly `k`.
pub fn hilbert_function(mset: &MultidegreeSet, u: &[usize]) -> Result<BigUint> {
    let Some(n) = mset.n() else {
        return Err(Error::Contract("empty multidegree set".into()));
    };
    if u.len() != n {
        return Err(Error::Dimension {
            expected: n,
            found: u.len(),
        });
    }
    let exact_top = |u: usize, k: usize| -> BigUint {
        if k == 0 {
            BigUint::one()
        } else {
            binomial(u + k, k) - binomial(u + k - 1, k - 1)
        }
    };
    let bounds: Vec<usize> = (0..n)
        .map(|i| mset.tuples.iter().map(|t| t[i]).max().expect("nonempty"))
        .collect();
    let per_factor: Vec<Vec<BigUint>> = (0..n)
        .map(|i| (0..=bounds[i]).map(|k| exact_top(u[i], k)).collect())
        .collect();

    let mut total = BigUint::zero();
    let mut k = vec![0usize; n];
    loop {
        if mset
            .tuples
            .iter()
            .any(|t| t.iter().zip(&k).all(|(ti, ki)| ki <= ti))
        {
            let term = (0..n).fold(BigUint::one(), |acc, i| acc * &per_factor[i][k[i]]);
            total += term;
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(total);
            }
            if k[i] < bounds[i] {
                k[i] += 1;
                break;
            }
            k[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(d: usize, members: &[usize]) -> CoordinateSubspace {
        CoordinateSubspace::new(d, members.iter().copied()).unwrap()
    }

    fn tuples(ts: &[&[usize]]) -> BTreeSet<Vec<usize>> {
        ts.iter().map(|t| t.to_vec()).collect()
    }

    #[test]
    fn intersection_examples() {
        let table = intersection_dims(&[sub(3, &[]), sub(3, &[1, 2])]).unwrap();
        assert_eq!(table.get(0b01), 0);
        assert_eq!(table.get(0b10), 2);
        assert_eq!(table.get(0b11), 0);

        let full = intersection_dims(&[sub(4, &[0, 1, 2, 3]); 3]).unwrap();
        assert!(full.entries().all(|(_, v)| v == 4));

        let one = intersection_dims(&[sub(3, &[0])]).unwrap();
        assert_eq!(one.get(1), 1);
    }

    #[test]
    fn intersection_errors() {
        assert!(matches!(intersection_dims(&[]), Err(Error::Contract(_))));
        assert_eq!(
            intersection_dims(&[sub(3, &[]), sub(4, &[])]),
            Err(Error::Dimension {
                expected: 3,
                found: 4
            })
        );
        assert!(CoordinateSubspace::new(3, [3]).is_err());
    }

    #[test]
    fn admissible_examples() {
        let first = intersection_dims(&[sub(3, &[]), sub(3, &[1, 2])]).unwrap();
        assert_eq!(admissible_tuples(&first, 2), tuples(&[&[2, 0]]));

        let second = intersection_dims(&[sub(3, &[0]), sub(3, &[])]).unwrap();
        assert_eq!(admissible_tuples(&second, 2), tuples(&[&[0, 2], &[1, 1]]));

        assert_eq!(admissible_tuples(&second, 0), tuples(&[&[0, 0]]));
        let full = intersection_dims(&[sub(3, &[0, 1, 2]), sub(3, &[])]).unwrap();
        assert!(admissible_tuples(&full, 0).is_empty());
    }

    #[test]
    fn dimension_examples() {
        let first = intersection_dims(&[sub(3, &[]), sub(3, &[1, 2])]).unwrap();
        let second = intersection_dims(&[sub(3, &[0]), sub(3, &[])]).unwrap();
        assert_eq!(dimension_p(&first).unwrap(), 2);
        assert_eq!(dimension_p(&second).unwrap(), 2);

        let diagonal = intersection_dims(&[CoordinateSubspace::zero(4); 3]).unwrap();
        let mset = multidegree_set(&diagonal).unwrap();
        assert_eq!(mset.p, 3);
        assert_eq!(mset.tuples.len(), 10);
        assert!(mset.tuples.iter().all(|t| t.iter().sum::<usize>() == 3));

        let point = intersection_dims(&[sub(4, &[1, 2, 3])]).unwrap();
        assert_eq!(dimension_p(&point).unwrap(), 0);

        let undefined = intersection_dims(&[sub(3, &[0, 1, 2])]).unwrap();
        assert_eq!(dimension_p(&undefined), Err(Error::UndefinedMap));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(2, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(60, 30), BigUint::from(118264581564861424u64));
    }

    #[test]
    fn hilbert_examples() {
        let projective = MultidegreeSet {
            p: 2,
            tuples: tuples(&[&[2, 0, 0]]),
        };
        for (u, expected) in [([0, 0, 0], 1u32), ([1, 5, 2], 3), ([3, 0, 7], 10)] {
            assert_eq!(
                hilbert_function(&projective, &u).unwrap(),
                BigUint::from(expected)
            );
        }

        let pair = MultidegreeSet {
            p: 2,
            tuples: tuples(&[&[1, 1], &[0, 2]]),
        };
        assert_eq!(hilbert_function(&pair, &[0, 0]).unwrap(), BigUint::one());
        assert_eq!(
            hilbert_function(&pair, &[1, 1]).unwrap(),
            BigUint::from(5u32)
        );

        let empty = MultidegreeSet {
            p: 0,
            tuples: BTreeSet::new(),
        };
        assert!(matches!(
            hilbert_function(&empty, &[]),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            hilbert_function(&pair, &[1]),
            Err(Error::Dimension { .. })
        ));
    }
}

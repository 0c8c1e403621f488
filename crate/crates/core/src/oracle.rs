//! Brute-force reference computations.
//!
//! Each function here recomputes something the main modules compute, by a
//! deliberately naive route that shares no code path with the
//! implementation it is compared against.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::multidegree::MultidegreeSet;
use crate::tropical::{tropical_combination, Configuration, TorusPoint};

/// Largest spread `max_i v_ij − min_i v_ij` over all coordinates.
pub fn coordinate_range(config: &Configuration) -> i64 {
    (0..config.d())
        .map(|j| {
            let col = config.points().iter().map(|v| v.coords()[j]);
            col.clone().max().unwrap() - col.min().unwrap()
        })
        .max()
        .unwrap_or(0)
}

/// Every tropical combination with scalars in `[0, R]^n`, `R` the coordinate
/// range. Each hull lattice point `x` is reached with
/// `λ_i = max_j (x_j − v_ij)`, and those scalars lie in that box.
pub fn brute_force_hull(config: &Configuration) -> BTreeSet<TorusPoint> {
    let range = coordinate_range(config);
    (0..config.n())
        .map(|_| 0..=range)
        .multi_cartesian_product()
        .map(|lambdas| tropical_combination(&lambdas, config).expect("lengths agree"))
        .collect()
}

/// Min-plus determinant by enumerating all `r!` permutations.
pub fn permutation_determinant(matrix: &[Vec<i64>]) -> (i64, u128) {
    let r = matrix.len();
    let mut best = i64::MAX;
    let mut count = 0u128;
    for perm in (0..r).permutations(r) {
        let value: i64 = perm.iter().enumerate().map(|(i, &j)| matrix[i][j]).sum();
        match value.cmp(&best) {
            std::cmp::Ordering::Less => {
                best = value;
                count = 1;
            }
            std::cmp::Ordering::Equal => count += 1,
            std::cmp::Ordering::Greater => {}
        }
    }
    (best, count)
}

/// Number of coordinates attaining `min_j (v_j − x_j)`, minus one.
fn naive_codim(v: &TorusPoint, x: &TorusPoint) -> usize {
    let w: Vec<i64> = v
        .coords()
        .iter()
        .zip(x.coords())
        .map(|(a, b)| a - b)
        .collect();
    let lo = *w.iter().min().unwrap();
    w.iter().filter(|&&e| e == lo).count() - 1
}

/// Hull points (taken from [`brute_force_hull`]) whose skeleton codimensions
/// dominate `m`.
pub fn signature_scan(config: &Configuration, m: &[usize]) -> BTreeSet<TorusPoint> {
    brute_force_hull(config)
        .into_iter()
        .filter(|x| {
            config
                .points()
                .iter()
                .zip(m)
                .all(|(v, &k)| naive_codim(v, x) >= k)
        })
        .collect()
}

/// Literal alternating sum over nonempty subsets of `M(p)`.
pub fn hilbert_by_subsets(mset: &MultidegreeSet, u: &[usize]) -> BigUint {
    let tuples: Vec<&Vec<usize>> = mset.tuples.iter().collect();
    assert!(
        tuples.len() <= 20,
        "subset expansion over {} tuples is too large",
        tuples.len()
    );
    let n = u.len();
    let mut total = BigInt::zero();
    for subset in 1usize..(1 << tuples.len()) {
        let mins: Vec<usize> = (0..n)
            .map(|i| {
                (0..tuples.len())
                    .filter(|k| subset & (1 << k) != 0)
                    .map(|k| tuples[k][i])
                    .min()
                    .unwrap()
            })
            .collect();
        let term = mins.iter().zip(u).fold(BigInt::one(), |acc, (&l, &ui)| {
            acc * naive_binomial(ui + l, l)
        });
        if subset.count_ones() % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total.to_biguint().expect("Hilbert function is nonnegative")
}

/// `C(n, k)` from the factorial formula.
fn naive_binomial(n: usize, k: usize) -> BigInt {
    let fact = |m: usize| (1..=m).fold(BigInt::one(), |acc, i| acc * i);
    fact(n) / (fact(k) * fact(n - k))
}

/// `d − |∪_{i∈I} J_i|` for the subset `I` encoded as a bitmask, from the
/// argmin sets directly.
pub fn d_index_by_union(d: usize, argmin_masks: &[u64], subset: usize) -> usize {
    let union = argmin_masks
        .iter()
        .enumerate()
        .filter(|(i, _)| subset & (1 << i) != 0)
        .fold(0u64, |acc, (_, m)| acc | m);
    d - union.count_ones() as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multidegree::MultidegreeSet;

    #[test]
    fn brute_hull_of_staircase_has_six_points() {
        let c = Configuration::from_raw(3, &[vec![0, -1, -2], vec![0, -2, -4], vec![0, -3, -6]])
            .unwrap();
        let hull = brute_force_hull(&c);
        assert_eq!(hull.len(), 6);
        assert!(hull.contains(&TorusPoint::new(&[0, -1, -4]).unwrap()));
        assert!(!hull.contains(&TorusPoint::new(&[0, -2, -3]).unwrap()));
    }

    #[test]
    fn permutation_enumeration_small_cases() {
        assert_eq!(permutation_determinant(&[vec![0, 0], vec![0, 0]]), (0, 2));
        assert_eq!(
            permutation_determinant(&[vec![0, 1, 2], vec![0, 2, 4], vec![0, 3, 6]]),
            (4, 1)
        );
    }

    #[test]
    fn subset_expansion_by_hand() {
        let mset = MultidegreeSet {
            p: 2,
            tuples: [vec![1, 1], vec![0, 2]].into_iter().collect(),
        };
        // (1+1)(1+1) + C(3,2) − (1+1)
        assert_eq!(hilbert_by_subsets(&mset, &[1, 1]), BigUint::from(5u32));
        assert_eq!(hilbert_by_subsets(&mset, &[0, 0]), BigUint::one());
    }
}

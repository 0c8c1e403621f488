//! Tropical convex hulls of configurations: membership, lattice points and
//! skeleton signatures.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::tropical::{Configuration, TorusPoint};

/// Min-plus projection of `x` onto `tconv(config)`.
///
/// With `λ_i = max_j (x_j − v_ij)` the projection is
/// `π(x)_j = min_i (λ_i + v_ij)`; it satisfies `π(x) ≥ x` coordinatewise.
pub fn project(config: &Configuration, x: &TorusPoint) -> Result<Vec<i64>> {
    config.check_dim(x)?;
    let lambdas: Vec<i64> = config
        .points()
        .iter()
        .map(|v| {
            x.coords()
                .iter()
                .zip(v.coords())
                .map(|(a, b)| a - b)
                .max()
                .expect("d >= 2")
        })
        .collect();
    Ok((0..config.d())
        .map(|j| {
            config
                .points()
                .iter()
                .zip(&lambdas)
                .map(|(v, l)| l + v.coords()[j])
                .min()
                .expect("configuration is nonempty")
        })
        .collect())
}

/// Whether `x` lies in the tropical convex hull of the configuration.
pub fn contains(config: &Configuration, x: &TorusPoint) -> Result<bool> {
    Ok(project(config, x)? == x.coords())
}

/// All lattice points of `tconv(config)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullLatticeSet {
    config: Configuration,
    points: BTreeSet<TorusPoint>,
}

impl HullLatticeSet {
    pub fn config(&self) -> &Configuration {
        &self.config
    }

    pub fn points(&self) -> &BTreeSet<TorusPoint> {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: &TorusPoint) -> bool {
        self.points.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = &TorusPoint> {
        self.points.iter()
    }
}

/// Per-coordinate bounds `[min_i v_ij, max_i v_ij]` of the normalized
/// generators. The hull of the configuration lies inside this box.
pub fn bounding_box(config: &Configuration) -> Vec<(i64, i64)> {
    (0..config.d())
        .map(|j| {
            let column = config.points().iter().map(|v| v.coords()[j]);
            let lo = column.clone().min().expect("nonempty");
            let hi = column.max().expect("nonempty");
            (lo, hi)
        })
        .collect()
}

/// Calls `visit` on every integer point of the box (first coordinate fixed
/// at zero since it is zero for every normalized generator).
pub(crate) fn for_each_box_point(bounds: &[(i64, i64)], mut visit: impl FnMut(&[i64])) {
    let mut current: Vec<i64> = bounds.iter().map(|(lo, _)| *lo).collect();
    loop {
        visit(&current);
        let mut j = bounds.len();
        loop {
            if j == 1 {
                return;
            }
            j -= 1;
            if current[j] < bounds[j].1 {
                current[j] += 1;
                break;
            }
            current[j] = bounds[j].0;
        }
    }
}

/// Enumerates the lattice points of the hull by scanning the bounding box.
pub fn lattice_points(config: &Configuration) -> HullLatticeSet {
    let mut points = BTreeSet::new();
    for_each_box_point(&bounding_box(config), |raw| {
        let x = TorusPoint::new(raw).expect("d >= 2");
        if contains(config, &x).expect("dimensions agree") {
            points.insert(x);
        }
    });
    HullLatticeSet {
        config: config.clone(),
        points,
    }
}

/// Indices `j` attaining `min_j (v_j − x_j)`, as a bitmask over coordinates.
pub(crate) fn argmin_mask(v: &TorusPoint, x: &TorusPoint) -> u64 {
    let w = v.diff(x);
    let lo = *w.iter().min().expect("d >= 2");
    w.iter()
        .enumerate()
        .filter(|(_, &x)| x == lo)
        .fold(0u64, |mask, (j, _)| mask | (1 << j))
}

/// Codimensions of the skeleta of the standard hyperplanes through which a
/// hull point passes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonSignature {
    pub point: TorusPoint,
    /// `codims[i] + 1` is the number of times `min_j (v_ij − x_j)` is attained.
    pub codims: Vec<usize>,
}

impl SkeletonSignature {
    /// Coordinatewise `codims ≥ m`.
    pub fn dominates(&self, m: &[usize]) -> bool {
        self.codims.len() == m.len() && self.codims.iter().zip(m).all(|(c, k)| c >= k)
    }
}

pub fn skeleton_signature(config: &Configuration, x: &TorusPoint) -> Result<SkeletonSignature> {
    if !contains(config, x)? {
        return Err(Error::NotInHull(x.to_string()));
    }
    Ok(signature_unchecked(config, x))
}

pub(crate) fn signature_unchecked(config: &Configuration, x: &TorusPoint) -> SkeletonSignature {
    let codims = config
        .points()
        .iter()
        .map(|v| argmin_mask(v, x).count_ones() as usize - 1)
        .collect();
    SkeletonSignature {
        point: x.clone(),
        codims,
    }
}

pub(crate) fn check_multidegree_tuple(config: &Configuration, m: &[usize]) -> Result<()> {
    if m.len() != config.n() {
        return Err(Error::Dimension {
            expected: config.n(),
            found: m.len(),
        });
    }
    let total: usize = m.iter().sum();
    if total != config.d() - 1 {
        return Err(Error::Contract(format!(
            "multidegree entries sum to {total}, expected {}",
            config.d() - 1
        )));
    }
    Ok(())
}

/// Hull lattice points lying on the codimension-`m_i` skeleton of the
/// hyperplane at every `v_i`, i.e. whose signature dominates `m`.
pub fn locate_by_multidegree(config: &Configuration, m: &[usize]) -> Result<BTreeSet<TorusPoint>> {
    check_multidegree_tuple(config, m)?;
    Ok(lattice_points(config)
        .iter()
        .filter(|x| signature_unchecked(config, x).dominates(m))
        .cloned()
        .collect())
}

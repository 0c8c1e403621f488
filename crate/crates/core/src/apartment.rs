//! Lattice classes of one apartment and their torus coordinates.
//!
//! The class of `π^{m_1} R e_1 + … + π^{m_d} R e_d` corresponds to the torus
//! point `(−m_1, …, −m_d) + Z·1`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hull::lattice_points;
use crate::tropical::{Configuration, TorusPoint};

/// A homothety class of diagonal lattices, stored by its valuation
/// exponents shifted so that the smallest exponent is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagonalLatticeClass {
    exponents: Vec<i64>,
}

impl DiagonalLatticeClass {
    pub fn new(exponents: &[i64]) -> Result<Self> {
        if exponents.len() < 2 {
            return Err(Error::AmbientTooSmall(exponents.len()));
        }
        let lo = *exponents.iter().min().expect("nonempty");
        Ok(DiagonalLatticeClass {
            exponents: exponents.iter().map(|m| m - lo).collect(),
        })
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    /// Class of `π^a L ∩ π^b L'`: exponentwise `max(m + a, m' + b)`.
    pub fn intersect_scaled(&self, a: i64, other: &DiagonalLatticeClass, b: i64) -> Self {
        let raw: Vec<i64> = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(m, n)| (m + a).max(n + b))
            .collect();
        DiagonalLatticeClass::new(&raw).expect("dimension preserved")
    }
}

pub fn class_to_point(class: &DiagonalLatticeClass) -> TorusPoint {
    let raw: Vec<i64> = class.exponents.iter().map(|m| -m).collect();
    TorusPoint::new(&raw).expect("dimension at least 2")
}

pub fn point_to_class(p: &TorusPoint) -> DiagonalLatticeClass {
    let raw: Vec<i64> = p.coords().iter().map(|x| -x).collect();
    DiagonalLatticeClass::new(&raw).expect("dimension at least 2")
}

/// Adjacency in the building: `v − u` has a representative with entries in
/// `{0, 1}`, i.e. its spread `max − min` equals one.
pub fn is_adjacent(u: &TorusPoint, v: &TorusPoint) -> Result<bool> {
    if u.dim() != v.dim() {
        return Err(Error::Dimension {
            expected: u.dim(),
            found: v.dim(),
        });
    }
    if u == v {
        return Err(Error::Contract(format!(
            "adjacency of {u} with itself is undefined"
        )));
    }
    let w = v.diff(u);
    let lo = w.iter().min().expect("d >= 2");
    let hi = w.iter().max().expect("d >= 2");
    Ok(hi - lo == 1)
}

/// A configuration is convex when it already contains every lattice point
/// of its tropical convex hull.
pub fn is_convex_configuration(config: &Configuration) -> bool {
    let hull = lattice_points(config);
    hull.len() == config.n() && config.points().iter().all(|p| hull.contains(p))
}

/// Closure check straight from the lattice definition: for every pair of
/// classes and every relative scaling `a − b`, the class of
/// `π^a L ∩ π^b L'` belongs to the configuration. Only `a − b` in
/// `[−s, s]` matters, where `s` bounds the spread of exponent differences;
/// outside that window the intersection is one of the two lattices.
pub fn is_closed_under_intersections(config: &Configuration) -> bool {
    let classes: Vec<DiagonalLatticeClass> = config.points().iter().map(point_to_class).collect();
    let members: BTreeSet<&TorusPoint> = config.points().iter().collect();
    for (i, c) in classes.iter().enumerate() {
        for other in &classes[i + 1..] {
            let spread = c
                .exponents()
                .iter()
                .zip(other.exponents())
                .map(|(m, n)| (m - n).abs())
                .max()
                .unwrap_or(0);
            for shift in -spread..=spread {
                let meet = class_to_point(&c.intersect_scaled(shift, other, 0));
                if !members.contains(&meet) {
                    return false;
                }
            }
        }
    }
    true
}

/// The chain `L_0 ⊃ … ⊃ L_{d−1}` with `L_i = π(e_1 + … + e_i) + e_{i+1} + …`,
/// as torus points.
pub fn local_model_chain(d: usize) -> Result<Configuration> {
    if d < 2 {
        return Err(Error::AmbientTooSmall(d));
    }
    let points = (0..d)
        .map(|i| {
            let exponents: Vec<i64> = (0..d).map(|j| i64::from(j < i)).collect();
            class_to_point(&DiagonalLatticeClass::new(&exponents).expect("d >= 2"))
        })
        .collect();
    Configuration::new(d, points)
}

//! Irreducible components of the special fiber for a configuration in one
//! apartment.
//!
//! Every lattice point `v` of the hull gives a reference lattice. Reducing
//! the diagonal transition matrices to the lattices of the configuration
//! modulo `π` yields, for each factor `i`, the 0/1 diagonal supported on
//! `J_i = argmin_j (v_ij − v_j)`. The closure of the image of the resulting
//! rational map is `X(k^d; W_1, …, W_n)` with `W_i` spanned by the basis
//! vectors outside `J_i`, and it is an irreducible component of the special
//! fiber exactly when its dimension `p` equals `d − 1`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hull::{argmin_mask, contains, lattice_points, signature_unchecked};
use crate::multidegree::{
    binomial, intersection_dims, multidegree_set, CoordinateSubspace, DIndexTable, MultidegreeSet,
};
use crate::tropical::{is_general_position, Configuration, TorusPoint};

/// Diagonal reduction data at one hull lattice point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionProfile {
    pub vertex: TorusPoint,
    /// `J_i`: coordinates where the reduced diagonal of factor `i` is one.
    pub argmins: Vec<CoordinateSubspace>,
    /// `W_i`: the kernel of the reduced map to factor `i`.
    pub kernels: Vec<CoordinateSubspace>,
}

impl ReductionProfile {
    /// The reduced diagonal of factor `i` as a 0/1 vector.
    pub fn diagonal(&self, i: usize) -> Vec<u8> {
        let j = &self.argmins[i];
        (0..j.ambient()).map(|k| u8::from(j.contains(k))).collect()
    }

    /// Dimension of the image in each factor, `|J_i| − 1`.
    pub fn factor_dims(&self) -> Vec<usize> {
        self.argmins.iter().map(|j| j.dim() - 1).collect()
    }
}

pub fn reduction_profile(config: &Configuration, v: &TorusPoint) -> Result<ReductionProfile> {
    if !contains(config, v)? {
        return Err(Error::NotInHull(v.to_string()));
    }
    Ok(profile_unchecked(config, v))
}

fn profile_unchecked(config: &Configuration, v: &TorusPoint) -> ReductionProfile {
    let d = config.d();
    let argmins: Vec<CoordinateSubspace> = config
        .points()
        .iter()
        .map(|p| CoordinateSubspace::from_mask(d, argmin_mask(p, v)))
        .collect();
    let kernels = argmins.iter().map(CoordinateSubspace::complement).collect();
    ReductionProfile {
        vertex: v.clone(),
        argmins,
        kernels,
    }
}

/// Everything known about the image variety contributed by one hull point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDescriptor {
    pub vertex: TorusPoint,
    pub profile: ReductionProfile,
    pub table: DIndexTable,
    pub p: usize,
    pub multidegrees: MultidegreeSet,
    /// `p = d − 1`.
    pub is_component: bool,
    /// The vertex belongs to the configuration.
    pub is_primary: bool,
    pub factor_dims: Vec<usize>,
}

fn describe(config: &Configuration, v: &TorusPoint) -> ComponentDescriptor {
    let profile = profile_unchecked(config, v);
    let table = intersection_dims(&profile.kernels).expect("kernels share the ambient dimension");
    // each J_i is nonempty, so no kernel is the full space and M(0) = {0}
    let multidegrees = multidegree_set(&table).expect("reduced maps are somewhere defined");
    let p = multidegrees.p;
    ComponentDescriptor {
        vertex: v.clone(),
        factor_dims: profile.factor_dims(),
        profile,
        table,
        p,
        multidegrees,
        is_component: p == config.d() - 1,
        is_primary: config.contains_point(v),
    }
}

/// Descriptor of the hull point `v`.
pub fn describe_vertex(config: &Configuration, v: &TorusPoint) -> Result<ComponentDescriptor> {
    if !contains(config, v)? {
        return Err(Error::NotInHull(v.to_string()));
    }
    Ok(describe(config, v))
}

/// One descriptor per hull lattice point, in lexicographic vertex order.
pub fn classify(config: &Configuration) -> Vec<ComponentDescriptor> {
    lattice_points(config)
        .iter()
        .map(|v| describe(config, v))
        .collect()
}

/// Only the descriptors that are irreducible components.
pub fn components(config: &Configuration) -> Vec<ComponentDescriptor> {
    classify(config)
        .into_iter()
        .filter(|c| c.is_component)
        .collect()
}

/// All `m ∈ Z_{≥0}^n` with `Σ m_i = total`, in lexicographic order.
pub fn compositions(n: usize, total: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() + 1 == n {
            current.push(remaining);
            out.push(current.clone());
            current.pop();
            return;
        }
        for v in 0..=remaining {
            current.push(v);
            go(n, remaining - v, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, total, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// Assigns each tuple of total degree `d − 1` to the component whose
/// multidegree set contains it.
pub fn multidegree_partition(config: &Configuration) -> Result<BTreeMap<Vec<usize>, TorusPoint>> {
    partition_from(config, &classify(config))
}

pub fn partition_from(
    config: &Configuration,
    descriptors: &[ComponentDescriptor],
) -> Result<BTreeMap<Vec<usize>, TorusPoint>> {
    let mut owner: BTreeMap<Vec<usize>, TorusPoint> = BTreeMap::new();
    for desc in descriptors.iter().filter(|c| c.is_component) {
        for m in &desc.multidegrees.tuples {
            if let Some(previous) = owner.insert(m.clone(), desc.vertex.clone()) {
                return Err(Error::InvariantViolation(format!(
                    "multidegree {m:?} claimed by both {previous} and {}",
                    desc.vertex
                )));
            }
        }
    }
    for m in compositions(config.n(), config.d() - 1) {
        if !owner.contains_key(&m) {
            return Err(Error::InvariantViolation(format!(
                "multidegree {m:?} is claimed by no component"
            )));
        }
    }
    if owner.len() != compositions(config.n(), config.d() - 1).len() {
        return Err(Error::InvariantViolation(
            "a component claims a tuple of the wrong shape".into(),
        ));
    }
    Ok(owner)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentCounts {
    pub total: usize,
    pub primary: usize,
    pub secondary: usize,
}

pub fn component_counts(config: &Configuration) -> ComponentCounts {
    counts_from(&classify(config))
}

pub fn counts_from(descriptors: &[ComponentDescriptor]) -> ComponentCounts {
    let total = descriptors.iter().filter(|c| c.is_component).count();
    let primary = descriptors
        .iter()
        .filter(|c| c.is_component && c.is_primary)
        .count();
    ComponentCounts {
        total,
        primary,
        secondary: total - primary,
    }
}

/// `C(n + d − 2, d − 1)`, the number of components in general position.
pub fn generic_component_count(n: usize, d: usize) -> usize {
    let count = binomial(n + d - 2, d - 1);
    usize::try_from(count).expect("component count fits in usize")
}

/// Monomial type: general position, equivalently the secondary count equals
/// `C(n + d − 2, d − 1) − n`. Both sides are computed and must agree.
pub fn is_monomial_type(config: &Configuration) -> Result<bool> {
    let general = is_general_position(config);
    let counts = component_counts(config);
    let by_count = counts.secondary + config.n() == generic_component_count(config.n(), config.d());
    if general != by_count {
        return Err(Error::InvariantViolation(format!(
            "general position is {general} but the secondary count {} says {by_count}",
            counts.secondary
        )));
    }
    Ok(general)
}

/// A configuration and reference vertex whose reduced kernels are exactly
/// `kernels`, so that `X(k^d; W_1, …, W_n)` appears as a component.
///
/// The `i`-th point is the 0/1 indicator of `W_i`, and the vertex is the
/// origin.
pub fn realize_component(kernels: &[CoordinateSubspace]) -> Result<(Configuration, TorusPoint)> {
    let Some(first) = kernels.first() else {
        return Err(Error::Contract("at least one kernel is required".into()));
    };
    let d = first.ambient();
    if d < 2 {
        return Err(Error::AmbientTooSmall(d));
    }
    let table = intersection_dims(kernels)?;
    if table.get((1 << kernels.len()) - 1) != 0 {
        return Err(Error::Contract(
            "kernels have a nontrivial common intersection".into(),
        ));
    }
    if let Some(full) = kernels.iter().find(|k| k.dim() == d) {
        return Err(Error::Contract(format!(
            "kernel {:?} is the full space",
            full.members()
        )));
    }
    let points = kernels
        .iter()
        .map(|k| {
            let raw: Vec<i64> = (0..d).map(|j| i64::from(k.contains(j))).collect();
            TorusPoint::new(&raw)
        })
        .collect::<Result<Vec<_>>>()?;
    let config = Configuration::new(d, points)?;
    Ok((config, TorusPoint::origin(d)?))
}

/// Skeleton codimensions `C(v)` paired with kernel dimensions, for the
/// identity `dim W_i = d − 1 − C(v)_i`.
pub fn kernel_codim_pairs(config: &Configuration, v: &TorusPoint) -> Result<Vec<(usize, usize)>> {
    let profile = reduction_profile(config, v)?;
    let sig = signature_unchecked(config, v);
    Ok(profile
        .kernels
        .iter()
        .zip(sig.codims)
        .map(|(k, c)| (k.dim(), c))
        .collect())
}

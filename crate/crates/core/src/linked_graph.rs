//! The graph of adjacent hull lattice points with the reduced inclusion maps
//! on its edges (rank one, special fiber only).
//!
//! For adjacent classes choose representatives with `πM' ⊂ L' ⊂ M'`. In
//! diagonal coordinates the map `u → v` reduces to the 0/1 diagonal that is
//! one exactly where the 0/1-normalized difference `v − u` vanishes, and the
//! map back is the complementary diagonal.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::apartment::is_adjacent;
use crate::error::{Error, Result};
use crate::hull::{contains, lattice_points};
use crate::special_fiber::reduction_profile;
use crate::tropical::{segment, Configuration, TorusPoint};

/// A diagonal 0/1 endomorphism of `k^d`, stored by its support.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagonalMap {
    d: usize,
    support: u64,
}

impl DiagonalMap {
    pub fn identity(d: usize) -> Self {
        let support = if d == 64 { u64::MAX } else { (1u64 << d) - 1 };
        DiagonalMap { d, support }
    }

    pub fn from_entries(entries: &[u8]) -> Result<Self> {
        if entries.len() > 64 {
            return Err(Error::Contract("diagonal longer than 64 entries".into()));
        }
        let mut support = 0u64;
        for (j, &e) in entries.iter().enumerate() {
            match e {
                0 => {}
                1 => support |= 1 << j,
                other => {
                    return Err(Error::Contract(format!(
                        "diagonal entry {other} is not 0 or 1"
                    )))
                }
            }
        }
        Ok(DiagonalMap {
            d: entries.len(),
            support,
        })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn support(&self) -> u64 {
        self.support
    }

    pub fn support_indices(&self) -> Vec<usize> {
        (0..self.d)
            .filter(|&j| self.support & (1 << j) != 0)
            .collect()
    }

    pub fn entries(&self) -> Vec<u8> {
        (0..self.d)
            .map(|j| u8::from(self.support & (1 << j) != 0))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.support == 0
    }

    pub fn complement(&self) -> Self {
        DiagonalMap {
            d: self.d,
            support: DiagonalMap::identity(self.d).support & !self.support,
        }
    }

    /// Composition of diagonal maps is the entrywise product.
    pub fn compose(&self, other: &DiagonalMap) -> Self {
        DiagonalMap {
            d: self.d,
            support: self.support & other.support,
        }
    }

    fn is_subset_of(&self, other: &DiagonalMap) -> bool {
        self.support & !other.support == 0
    }
}

impl fmt::Display for DiagonalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self
            .support_indices()
            .iter()
            .map(|j| j.to_string())
            .collect();
        write!(f, "{{{}}}", idx.join(","))
    }
}

/// Result of composing edge maps along a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathMap {
    Map(DiagonalMap),
    /// The composition vanishes identically.
    Zero,
}

impl PathMap {
    fn from_diagonal(map: DiagonalMap) -> Self {
        if map.is_zero() {
            PathMap::Zero
        } else {
            PathMap::Map(map)
        }
    }
}

/// Reduced diagonal of the map `u → v` between adjacent classes, or `None`
/// when the classes are equal or not adjacent.
pub fn edge_diagonal(u: &TorusPoint, v: &TorusPoint) -> Option<DiagonalMap> {
    if u == v || !is_adjacent(u, v).ok()? {
        return None;
    }
    let w = v.diff(u);
    let lo = *w.iter().min().expect("d >= 2");
    let support = w
        .iter()
        .enumerate()
        .filter(|(_, &x)| x == lo)
        .fold(0u64, |acc, (j, _)| acc | (1 << j));
    Some(DiagonalMap {
        d: u.dim(),
        support,
    })
}

/// Hull lattice points joined when adjacent in the building.
#[derive(Debug, Clone)]
pub struct LinkedGraph {
    config: Configuration,
    vertices: Vec<TorusPoint>,
    index: BTreeMap<TorusPoint, usize>,
    /// Undirected edges `(a, b)` with `a < b`.
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    maps: BTreeMap<(usize, usize), DiagonalMap>,
}

pub fn build_graph(config: &Configuration) -> LinkedGraph {
    let vertices: Vec<TorusPoint> = lattice_points(config).points().iter().cloned().collect();
    let index = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    let mut edges = Vec::new();
    let mut neighbors = vec![Vec::new(); vertices.len()];
    let mut maps = BTreeMap::new();
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            if let Some(forward) = edge_diagonal(&vertices[a], &vertices[b]) {
                edges.push((a, b));
                neighbors[a].push(b);
                neighbors[b].push(a);
                maps.insert((a, b), forward);
                maps.insert((b, a), forward.complement());
            }
        }
    }
    LinkedGraph {
        config: config.clone(),
        vertices,
        index,
        edges,
        neighbors,
        maps,
    }
}

impl LinkedGraph {
    pub fn config(&self) -> &Configuration {
        &self.config
    }

    pub fn d(&self) -> usize {
        self.config.d()
    }

    pub fn vertices(&self) -> &[TorusPoint] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    pub fn index_of(&self, v: &TorusPoint) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Diagonal of the edge map from vertex `a` to vertex `b`.
    pub fn edge_map(&self, a: usize, b: usize) -> Option<DiagonalMap> {
        self.maps.get(&(a, b)).copied()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(a) = stack.pop() {
            for &b in &self.neighbors[a] {
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn resolve(&self, path: &[TorusPoint]) -> Result<Vec<usize>> {
        if path.is_empty() {
            return Err(Error::Contract("a path needs at least one vertex".into()));
        }
        path.iter()
            .map(|v| {
                self.index_of(v)
                    .ok_or_else(|| Error::NotInHull(v.to_string()))
            })
            .collect()
    }

    fn chain_maps(&self, ids: &[usize]) -> Result<Vec<(DiagonalMap, DiagonalMap)>> {
        ids.windows(2)
            .map(
                |w| match (self.edge_map(w[0], w[1]), self.edge_map(w[1], w[0])) {
                    (Some(f), Some(g)) => Ok((f, g)),
                    _ => Err(Error::Contract(format!(
                        "{} and {} are not joined by an edge",
                        self.vertices[w[0]], self.vertices[w[1]]
                    ))),
                },
            )
            .collect()
    }

    /// Composition of the edge maps along `path`; a one-vertex path gives
    /// the identity.
    pub fn path_map(&self, path: &[TorusPoint]) -> Result<PathMap> {
        let ids = self.resolve(path)?;
        let maps = self.chain_maps(&ids)?;
        let composed = maps
            .iter()
            .fold(DiagonalMap::identity(self.d()), |acc, (f, _)| {
                acc.compose(f)
            });
        Ok(PathMap::from_diagonal(composed))
    }

    /// Lattice walk from `u` to `v` along the tropical segment: each
    /// classical piece is traversed in unit 0/1 steps.
    pub fn minimal_path(&self, u: &TorusPoint, v: &TorusPoint) -> Result<Vec<TorusPoint>> {
        self.resolve(&[u.clone(), v.clone()])?;
        Ok(minimal_lattice_path(u, v))
    }

    /// Exactness conditions along a chain of vertices.
    pub fn exactness_check(&self, path: &[TorusPoint]) -> Result<ExactnessReport> {
        let ids = self.resolve(path)?;
        let maps = self.chain_maps(&ids)?;
        let (forward, backward): (Vec<_>, Vec<_>) = maps.into_iter().unzip();
        check_chain(&forward, &backward)
    }

    /// For each generator `v_i`, the composed edge maps along the minimal
    /// path from `root` to `v_i`.
    pub fn simple_root_maps(&self, root: &TorusPoint) -> Result<Vec<DiagonalMap>> {
        if !contains(&self.config, root)? {
            return Err(Error::NotInHull(root.to_string()));
        }
        self.config
            .points()
            .iter()
            .map(|target| {
                let path = self.minimal_path(root, target)?;
                match self.path_map(&path)? {
                    PathMap::Map(m) => Ok(m),
                    PathMap::Zero => Err(Error::InvariantViolation(format!(
                        "minimal path from {root} to {target} composes to zero"
                    ))),
                }
            })
            .collect()
    }

    /// Whether the root maps at `root` coincide with the reduction profile
    /// diagonals there.
    pub fn root_maps_match_profile(&self, root: &TorusPoint) -> Result<bool> {
        let maps = self.simple_root_maps(root)?;
        let profile = reduction_profile(&self.config, root)?;
        Ok(maps
            .iter()
            .zip(&profile.argmins)
            .all(|(m, j)| m.support() == j.mask()))
    }

    /// Chains of unit steps from every tropical segment between two
    /// generators.
    pub fn generator_chains(&self) -> Vec<Vec<TorusPoint>> {
        let pts = self.config.points();
        let mut chains = Vec::new();
        for (i, u) in pts.iter().enumerate() {
            for v in &pts[i + 1..] {
                chains.push(minimal_lattice_path(u, v));
            }
        }
        chains
    }
}

/// Unit-step lattice walk following the breakpoints of the segment from
/// `u` to `v`.
pub fn minimal_lattice_path(u: &TorusPoint, v: &TorusPoint) -> Vec<TorusPoint> {
    if u == v {
        return vec![u.clone()];
    }
    let breaks = segment(u, v).expect("distinct points of equal dimension");
    let mut path = vec![u.clone()];
    for pair in breaks.windows(2) {
        let w = pair[1].diff(&pair[0]);
        let lo = *w.iter().min().expect("d >= 2");
        let hi = *w.iter().max().expect("d >= 2");
        let step: Vec<i64> = w.iter().map(|&x| i64::from(x == hi)).collect();
        let mut current = pair[0].clone();
        for _ in 0..(hi - lo) {
            current = current.shifted(&step);
            path.push(current.clone());
        }
        debug_assert_eq!(&current, &pair[1]);
    }
    path
}

/// Exactness of the two maps on one edge `B_i ⇄ B_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeExactness {
    /// `ker(B_i → B_{i+1}) = Im(B_{i+1} → B_i)`.
    pub kernel_forward_is_image_backward: bool,
    /// `ker(B_{i+1} → B_i) = Im(B_i → B_{i+1})`.
    pub kernel_backward_is_image_forward: bool,
}

/// Exactness at an interior vertex `B_i` of the chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InteriorExactness {
    /// `Im(B_{i−1} → B_i) ∩ ker(B_i → B_{i+1}) = 0`.
    pub forward_image_meets_kernel_trivially: bool,
    /// `Im(B_{i+1} → B_i) ∩ ker(B_i → B_{i−1}) = 0`.
    pub backward_image_meets_kernel_trivially: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactnessReport {
    pub edges: Vec<EdgeExactness>,
    pub interior: Vec<InteriorExactness>,
}

impl ExactnessReport {
    /// Whether each of the four conditions holds at every position.
    pub fn conditions(&self) -> [bool; 4] {
        [
            self.edges
                .iter()
                .all(|e| e.kernel_forward_is_image_backward),
            self.edges
                .iter()
                .all(|e| e.kernel_backward_is_image_forward),
            self.interior
                .iter()
                .all(|e| e.forward_image_meets_kernel_trivially),
            self.interior
                .iter()
                .all(|e| e.backward_image_meets_kernel_trivially),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.conditions().iter().all(|&c| c)
    }
}

/// Exactness conditions for a chain `B_0 ⇄ B_1 ⇄ … ⇄ B_k` of diagonal maps,
/// `forward[i]: B_i → B_{i+1}` and `backward[i]: B_{i+1} → B_i`.
///
/// For diagonal 0/1 maps the kernel is spanned by the zero entries and the
/// image by the one entries, so the edge conditions say the two diagonals
/// are complementary and the interior conditions say consecutive forward
/// supports are nested (and backward supports reversed-nested).
pub fn check_chain(forward: &[DiagonalMap], backward: &[DiagonalMap]) -> Result<ExactnessReport> {
    if forward.len() != backward.len() {
        return Err(Error::Dimension {
            expected: forward.len(),
            found: backward.len(),
        });
    }
    let edges = forward
        .iter()
        .zip(backward)
        .map(|(f, g)| EdgeExactness {
            kernel_forward_is_image_backward: f.complement() == *g,
            kernel_backward_is_image_forward: g.complement() == *f,
        })
        .collect();
    let interior = (1..forward.len())
        .map(|i| InteriorExactness {
            // Im(f_{i-1}) = supp f_{i-1}, ker(f_i) = complement of supp f_i
            forward_image_meets_kernel_trivially: forward[i - 1].is_subset_of(&forward[i]),
            // Im(g_i) = supp g_i, ker(g_{i-1}) = complement of supp g_{i-1}
            backward_image_meets_kernel_trivially: backward[i].is_subset_of(&backward[i - 1]),
        })
        .collect();
    Ok(ExactnessReport { edges, interior })
}

/// Every simple path between two vertices, as index sequences. Exponential;
/// intended for small graphs.
pub fn simple_paths(graph: &LinkedGraph, from: usize, to: usize, limit: usize) -> Vec<Vec<usize>> {
    fn dfs(
        graph: &LinkedGraph,
        to: usize,
        limit: usize,
        path: &mut Vec<usize>,
        on_path: &mut BTreeSet<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if out.len() >= limit {
            return;
        }
        let last = *path.last().expect("nonempty");
        if last == to {
            out.push(path.clone());
            return;
        }
        for &next in graph.neighbors(last) {
            if on_path.insert(next) {
                path.push(next);
                dfs(graph, to, limit, path, on_path, out);
                path.pop();
                on_path.remove(&next);
            }
        }
    }
    let mut out = Vec::new();
    let mut path = vec![from];
    let mut on_path = BTreeSet::from([from]);
    dfs(graph, to, limit, &mut path, &mut on_path, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[i64]) -> TorusPoint {
        TorusPoint::new(c).unwrap()
    }

    fn cfg(points: &[&[i64]]) -> Configuration {
        let raw: Vec<Vec<i64>> = points.iter().map(|p| p.to_vec()).collect();
        Configuration::from_raw(points[0].len(), &raw).unwrap()
    }

    fn diag(e: &[u8]) -> DiagonalMap {
        DiagonalMap::from_entries(e).unwrap()
    }

    #[test]
    fn two_lattices_in_the_plane() {
        let g = build_graph(&cfg(&[&[0, 0], &[0, 1]]));
        assert_eq!(g.vertices().len(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(g.edge_map(0, 1), Some(diag(&[1, 0])));
        assert_eq!(g.edge_map(1, 0), Some(diag(&[0, 1])));
    }

    #[test]
    fn three_point_path_graph() {
        let g = build_graph(&cfg(&[&[0, 0, 0], &[0, -1, 0], &[0, -2, -1]]));
        assert_eq!(g.vertices().len(), 3);
        assert_eq!(g.edges().len(), 2);
        assert!(g.is_connected());
        let a = g.index_of(&pt(&[0, 0, 0])).unwrap();
        let b = g.index_of(&pt(&[0, -1, 0])).unwrap();
        assert_eq!(g.edge_map(a, b), Some(diag(&[0, 1, 0])));
        assert_eq!(g.edge_map(b, a), Some(diag(&[1, 0, 1])));
        let c = g.index_of(&pt(&[0, -2, -1])).unwrap();
        assert!(g.edge_map(a, c).is_none());
    }

    #[test]
    fn single_vertex_graph() {
        let g = build_graph(&cfg(&[&[0, 1, 2]]));
        assert_eq!(g.vertices().len(), 1);
        assert!(g.edges().is_empty());
    }

    #[test]
    fn path_map_examples() {
        let g = build_graph(&cfg(&[&[0, 0], &[0, 1]]));
        let (u, v) = (pt(&[0, 0]), pt(&[0, 1]));
        assert_eq!(
            g.path_map(std::slice::from_ref(&u)).unwrap(),
            PathMap::Map(DiagonalMap::identity(2))
        );
        assert_eq!(
            g.path_map(&[u.clone(), v.clone(), u.clone()]).unwrap(),
            PathMap::Zero
        );
        assert!(matches!(g.path_map(&[]), Err(Error::Contract(_))));

        let g = build_graph(&cfg(&[&[0, -1, -2], &[0, -3, -6]]));
        let bad = [pt(&[0, -1, -2]), pt(&[0, -3, -6])];
        assert!(matches!(g.path_map(&bad), Err(Error::Contract(_))));
    }

    #[test]
    fn minimal_path_follows_segment() {
        let path = minimal_lattice_path(&pt(&[0, -3, -6]), &pt(&[0, -1, -2]));
        assert_eq!(
            path,
            vec![
                pt(&[0, -3, -6]),
                pt(&[0, -2, -5]),
                pt(&[0, -1, -4]),
                pt(&[0, -1, -3]),
                pt(&[0, -1, -2]),
            ]
        );
        for pair in path.windows(2) {
            assert!(is_adjacent(&pair[0], &pair[1]).unwrap());
        }
    }

    #[test]
    fn exactness_examples() {
        let c = cfg(&[&[0, -1, -2], &[0, -3, -6]]);
        let g = build_graph(&c);
        for chain in g.generator_chains() {
            assert!(g.exactness_check(&chain).unwrap().all_hold());
        }

        let g = build_graph(&cfg(&[&[0, 0], &[0, 1]]));
        let report = g.exactness_check(&[pt(&[0, 0]), pt(&[0, 1])]).unwrap();
        assert!(report.all_hold());
        assert!(report.interior.is_empty());

        let forward = [diag(&[1, 0, 0]), diag(&[0, 1, 0])];
        let backward = [diag(&[0, 1, 1]), diag(&[1, 0, 1])];
        let report = check_chain(&forward, &backward).unwrap();
        assert_eq!(report.conditions(), [true, true, false, false]);
    }

    #[test]
    fn root_map_examples() {
        let c = cfg(&[&[0, -1, -2], &[0, -2, -4], &[0, -3, -6]]);
        let g = build_graph(&c);
        let maps = g.simple_root_maps(c.point(1)).unwrap();
        assert_eq!(maps[1], DiagonalMap::identity(3));

        let maps = g.simple_root_maps(&pt(&[0, -1, -4])).unwrap();
        let sizes: Vec<usize> = maps.iter().map(|m| m.support_indices().len()).collect();
        assert_eq!(sizes, vec![2, 1, 2]);
        assert!(g.root_maps_match_profile(&pt(&[0, -1, -4])).unwrap());

        let g = build_graph(&cfg(&[&[0, 0], &[0, 1]]));
        let maps = g.simple_root_maps(&pt(&[0, 0])).unwrap();
        assert_eq!(maps, vec![diag(&[1, 1]), diag(&[1, 0])]);

        assert!(matches!(
            build_graph(&c).simple_root_maps(&pt(&[0, -2, -3])),
            Err(Error::NotInHull(_))
        ));
    }
}

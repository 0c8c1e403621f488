//! Serializable reports. Every builder is a pure function of its input, and
//! every collection is emitted in a fixed order, so output is reproducible
//! byte for byte.

use mustafin_core::hull::lattice_points;
use mustafin_core::linked_graph::build_graph;
use mustafin_core::multidegree::hilbert_function;
use mustafin_core::special_fiber::{classify, counts_from, describe_vertex, partition_from};
use mustafin_core::tropical::{is_general_position, singular_minor, tropical_determinant};
use mustafin_core::{Configuration, TorusPoint};
use serde::{Deserialize, Serialize};

use crate::document::ConfigurationDocument;
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullReport {
    pub config: ConfigurationDocument,
    pub count: usize,
    pub points: Vec<Vec<i64>>,
}

/// Reduction data at one hull lattice point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexReport {
    pub vertex: Vec<i64>,
    /// Per factor, the coordinates where `v_i − vertex` is minimal.
    pub argmins: Vec<Vec<usize>>,
    pub kernel_dims: Vec<usize>,
    pub factor_dims: Vec<usize>,
    pub p: usize,
    pub multidegrees: Vec<Vec<usize>>,
    pub is_component: bool,
    pub is_primary: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsReport {
    pub total: usize,
    pub primary: usize,
    pub secondary: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionEntry {
    pub multidegree: Vec<usize>,
    pub vertex: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub config: ConfigurationDocument,
    pub general_position: bool,
    pub hull: Vec<Vec<i64>>,
    pub vertices: Vec<VertexReport>,
    pub counts: CountsReport,
    pub partition: Vec<PartitionEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertReport {
    pub vertex: Vec<i64>,
    pub u: Vec<usize>,
    pub p: usize,
    pub multidegrees: Vec<Vec<usize>>,
    /// Decimal digits; the value may exceed 64 bits.
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeReport {
    pub from: Vec<i64>,
    pub to: Vec<i64>,
    /// Diagonal of the reduced map `from → to`.
    pub forward: Vec<u8>,
    /// Diagonal of the reduced map `to → from`.
    pub backward: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub d: usize,
    pub vertices: Vec<Vec<i64>>,
    pub edges: Vec<EdgeReport>,
    pub connected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub matrix: Vec<Vec<i64>>,
    pub value: i64,
    pub optimal_count: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralPositionReport {
    pub general_position: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
}

fn coords(p: &TorusPoint) -> Vec<i64> {
    p.coords().to_vec()
}

pub fn hull_report(config: &Configuration, label: Option<String>) -> HullReport {
    let hull = lattice_points(config);
    HullReport {
        config: ConfigurationDocument::from_configuration(config, label),
        count: hull.len(),
        points: hull.iter().map(coords).collect(),
    }
}

pub fn classification_report(
    config: &Configuration,
    label: Option<String>,
) -> Result<ClassificationReport, CliError> {
    let descriptors = classify(config);
    let counts = counts_from(&descriptors);
    let partition = partition_from(config, &descriptors)?;
    Ok(ClassificationReport {
        config: ConfigurationDocument::from_configuration(config, label),
        general_position: is_general_position(config),
        hull: descriptors.iter().map(|c| coords(&c.vertex)).collect(),
        vertices: descriptors
            .iter()
            .map(|c| VertexReport {
                vertex: coords(&c.vertex),
                argmins: c.profile.argmins.iter().map(|j| j.members()).collect(),
                kernel_dims: c.profile.kernels.iter().map(|k| k.dim()).collect(),
                factor_dims: c.factor_dims.clone(),
                p: c.p,
                multidegrees: c.multidegrees.tuples.iter().cloned().collect(),
                is_component: c.is_component,
                is_primary: c.is_primary,
            })
            .collect(),
        counts: CountsReport {
            total: counts.total,
            primary: counts.primary,
            secondary: counts.secondary,
        },
        partition: partition
            .into_iter()
            .map(|(multidegree, vertex)| PartitionEntry {
                multidegree,
                vertex: coords(&vertex),
            })
            .collect(),
    })
}

pub fn hilbert_report(
    config: &Configuration,
    vertex: &[i64],
    u: &[usize],
) -> Result<HilbertReport, CliError> {
    let v = TorusPoint::new(vertex)?;
    if v.dim() != config.d() {
        return Err(mustafin_core::Error::Dimension {
            expected: config.d(),
            found: v.dim(),
        }
        .into());
    }
    let desc = describe_vertex(config, &v)?;
    let value = hilbert_function(&desc.multidegrees, u)?;
    Ok(HilbertReport {
        vertex: coords(&v),
        u: u.to_vec(),
        p: desc.p,
        multidegrees: desc.multidegrees.tuples.iter().cloned().collect(),
        value: value.to_string(),
    })
}

pub fn graph_report(config: &Configuration) -> GraphReport {
    let graph = build_graph(config);
    let vertices = graph.vertices();
    GraphReport {
        d: graph.d(),
        vertices: vertices.iter().map(coords).collect(),
        edges: graph
            .edges()
            .iter()
            .map(|&(a, b)| EdgeReport {
                from: coords(&vertices[a]),
                to: coords(&vertices[b]),
                forward: graph.edge_map(a, b).expect("edge").entries(),
                backward: graph.edge_map(b, a).expect("edge").entries(),
            })
            .collect(),
        connected: graph.is_connected(),
    }
}

/// Graphviz rendering of [`graph_report`]; edges are labelled with the
/// forward and backward diagonals.
pub fn graph_dot(report: &GraphReport) -> String {
    let name = |v: &[i64]| format!("\"({})\"", join(v));
    let mut out = String::from("graph hull {\n");
    for v in &report.vertices {
        out.push_str(&format!("  {};\n", name(v)));
    }
    for e in &report.edges {
        out.push_str(&format!(
            "  {} -- {} [label=\"{} / {}\"];\n",
            name(&e.from),
            name(&e.to),
            join(&e.forward),
            join(&e.backward)
        ));
    }
    out.push_str("}\n");
    out
}

pub fn general_position_report(config: &Configuration) -> GeneralPositionReport {
    let witness = singular_minor(config).map(|minor| {
        let matrix = minor.extract(config);
        let det = tropical_determinant(&matrix).expect("square minor");
        WitnessReport {
            rows: minor.rows,
            cols: minor.cols,
            matrix,
            value: det.value,
            optimal_count: det.optimal_count,
        }
    });
    GeneralPositionReport {
        general_position: witness.is_none(),
        witness,
    }
}

pub fn join<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

//! Min-plus primitives on exact integer data.
//!
//! Throughout, `a ⊕ b = min(a, b)` and `a ⊙ b = a + b`. Points of the
//! tropical torus are integer vectors modulo the all-ones direction and are
//! always stored with first coordinate zero.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// An integer point of the tropical torus `Z^d / Z·1`, kept in normalized
/// form (first coordinate zero).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusPoint {
    coords: Vec<i64>,
}

impl TorusPoint {
    /// Normalizes `raw` by subtracting its first coordinate from every entry.
    pub fn new(raw: &[i64]) -> Result<Self> {
        normalize(raw)
    }

    /// The origin `(0, …, 0)` of the `d`-dimensional torus.
    pub fn origin(d: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::AmbientTooSmall(d));
        }
        Ok(TorusPoint { coords: vec![0; d] })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.coords
    }

    /// Coordinatewise difference `self − other` of the stored representatives.
    pub fn diff(&self, other: &TorusPoint) -> Vec<i64> {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect()
    }

    /// Adds `t · e_S` where `S` is given by a 0/1 pattern, then renormalizes.
    pub(crate) fn shifted(&self, step: &[i64]) -> TorusPoint {
        let raw: Vec<i64> = self.coords.iter().zip(step).map(|(a, s)| a + s).collect();
        normalize_unchecked(&raw)
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coords.iter().join(","))
    }
}

fn normalize_unchecked(raw: &[i64]) -> TorusPoint {
    let base = raw[0];
    TorusPoint {
        coords: raw.iter().map(|x| x - base).collect(),
    }
}

/// Canonical representative of `raw` modulo `Z·(1, …, 1)`.
pub fn normalize(raw: &[i64]) -> Result<TorusPoint> {
    if raw.len() < 2 {
        return Err(Error::AmbientTooSmall(raw.len()));
    }
    Ok(normalize_unchecked(raw))
}

/// An ordered list of distinct torus points sharing one ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    d: usize,
    points: Vec<TorusPoint>,
}

impl Configuration {
    pub fn new(d: usize, points: Vec<TorusPoint>) -> Result<Self> {
        if d < 2 {
            return Err(Error::AmbientTooSmall(d));
        }
        if points.is_empty() {
            return Err(Error::Contract(
                "a configuration needs at least one point".into(),
            ));
        }
        for p in &points {
            if p.dim() != d {
                return Err(Error::Dimension {
                    expected: d,
                    found: p.dim(),
                });
            }
        }
        let mut seen = BTreeSet::new();
        for p in &points {
            if !seen.insert(p) {
                return Err(Error::Contract(format!("point {p} occurs twice")));
            }
        }
        Ok(Configuration { d, points })
    }

    /// Normalizes every raw vector and builds the configuration.
    pub fn from_raw(d: usize, raw: &[Vec<i64>]) -> Result<Self> {
        let points = raw
            .iter()
            .map(|r| {
                if r.len() != d {
                    Err(Error::Dimension {
                        expected: d,
                        found: r.len(),
                    })
                } else {
                    normalize(r)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Configuration::new(d, points)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[TorusPoint] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &TorusPoint {
        &self.points[i]
    }

    pub fn contains_point(&self, x: &TorusPoint) -> bool {
        self.points.iter().any(|p| p == x)
    }

    pub(crate) fn check_dim(&self, x: &TorusPoint) -> Result<()> {
        if x.dim() != self.d {
            return Err(Error::Dimension {
                expected: self.d,
                found: x.dim(),
            });
        }
        Ok(())
    }
}

/// `⊕_i λ_i ⊙ v_i`, i.e. the coordinatewise minimum of `λ_i + v_i`.
pub fn tropical_combination(lambdas: &[i64], config: &Configuration) -> Result<TorusPoint> {
    if lambdas.len() != config.n() {
        return Err(Error::Dimension {
            expected: config.n(),
            found: lambdas.len(),
        });
    }
    let raw: Vec<i64> = (0..config.d())
        .map(|j| {
            config
                .points()
                .iter()
                .zip(lambdas)
                .map(|(v, l)| l + v.coords()[j])
                .min()
                .expect("configuration is nonempty")
        })
        .collect();
    Ok(normalize_unchecked(&raw))
}

/// Breakpoints of the tropical segment from `x` to `y`, in order.
///
/// The segment is `{ t ⊙ x ⊕ y }` as `t` sweeps the sorted values of
/// `y − x`; consecutive breakpoints differ by a positive multiple of a 0/1
/// vector, so there are at most `d − 1` classical pieces.
pub fn segment(x: &TorusPoint, y: &TorusPoint) -> Result<Vec<TorusPoint>> {
    if x.dim() != y.dim() {
        return Err(Error::Dimension {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    if x == y {
        return Err(Error::DegenerateSegment(x.to_string()));
    }
    let w = y.diff(x);
    let mut shifts = w.clone();
    shifts.sort_unstable();
    shifts.dedup();
    let breakpoints = shifts
        .into_iter()
        .map(|t| {
            let raw: Vec<i64> = x
                .coords()
                .iter()
                .zip(y.coords())
                .map(|(a, b)| (a + t).min(*b))
                .collect();
            normalize_unchecked(&raw)
        })
        .dedup()
        .collect();
    Ok(breakpoints)
}

/// Value of a min-plus determinant and the number of optimal permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TropicalDeterminant {
    pub value: i64,
    pub optimal_count: u128,
}

impl TropicalDeterminant {
    pub fn is_singular(&self) -> bool {
        self.optimal_count >= 2
    }
}

/// Largest order accepted by [`tropical_determinant`].
pub const MAX_DETERMINANT_ORDER: usize = 20;

/// Min-plus determinant `min_σ Σ_i m[i][σ(i)]` together with the number of
/// permutations attaining it.
///
/// Computed by dynamic programming over the set of used columns, carrying
/// the optimum and its multiplicity for each prefix of rows.
pub fn tropical_determinant(matrix: &[Vec<i64>]) -> Result<TropicalDeterminant> {
    let r = matrix.len();
    if r == 0 {
        return Err(Error::Shape {
            rows: 0,
            row: 0,
            cols: 0,
        });
    }
    for (row, entries) in matrix.iter().enumerate() {
        if entries.len() != r {
            return Err(Error::Shape {
                rows: r,
                row,
                cols: entries.len(),
            });
        }
    }
    if r > MAX_DETERMINANT_ORDER {
        return Err(Error::Contract(format!(
            "tropical determinant of order {r} exceeds {MAX_DETERMINANT_ORDER}"
        )));
    }

    // best[mask]: optimum over assignments of rows 0..popcount(mask) to the columns in mask
    let full = (1usize << r) - 1;
    let mut best: Vec<Option<(i64, u128)>> = vec![None; full + 1];
    best[0] = Some((0, 1));
    for mask in 0..full {
        let Some((value, count)) = best[mask] else {
            continue;
        };
        let row = mask.count_ones() as usize;
        for (col, entry) in matrix[row].iter().enumerate() {
            if mask & (1 << col) != 0 {
                continue;
            }
            let next = mask | (1 << col);
            let candidate = value + entry;
            best[next] = match best[next] {
                None => Some((candidate, count)),
                Some((v, _)) if candidate < v => Some((candidate, count)),
                Some((v, c)) if candidate == v => Some((v, c + count)),
                keep => keep,
            };
        }
    }
    let (value, optimal_count) = best[full].expect("full assignment exists");
    Ok(TropicalDeterminant {
        value,
        optimal_count,
    })
}

/// Rows and columns (0-based) selecting a square submatrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl Minor {
    pub fn extract(&self, config: &Configuration) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|&i| {
                let v = config.point(i).coords();
                self.cols.iter().map(|&j| v[j]).collect()
            })
            .collect()
    }
}

/// First tropically singular square minor of the `n × d` coordinate matrix,
/// if any, scanning by size and then row and column subsets lexicographically.
pub fn singular_minor(config: &Configuration) -> Option<Minor> {
    let (n, d) = (config.n(), config.d());
    for k in 2..=n.min(d) {
        for rows in (0..n).combinations(k) {
            for cols in (0..d).combinations(k) {
                let minor = Minor {
                    rows: rows.clone(),
                    cols,
                };
                let det = tropical_determinant(&minor.extract(config))
                    .expect("minors are square and small");
                if det.is_singular() {
                    return Some(minor);
                }
            }
        }
    }
    None
}

/// True iff every square minor of the coordinate matrix, of every size, is
/// tropically non-singular.
pub fn is_general_position(config: &Configuration) -> bool {
    singular_minor(config).is_none()
}

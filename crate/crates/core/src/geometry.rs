//! Point configurations with coordinates in a number field, and their sets of
//! squared distances.

use alloc::sync::Arc;
use alloc::vec::Vec;

use thiserror::Error;

use crate::number_field::{NfElement, NumberField};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("point {index} has {got} coordinates, expected {expected}")]
    WrongDimension { index: usize, expected: usize, got: usize },
    #[error("points {first} and {second} coincide")]
    DuplicatePoints { first: usize, second: usize },
    #[error("need at least two points, got {0}")]
    TooFewPoints(usize),
    #[error("squared distances must be nonzero (entry {0})")]
    ZeroDistance(usize),
    #[error("need at least one distance")]
    NoDistances,
    #[error("coordinates or distances belong to a different number field")]
    FieldMismatch,
}

pub type Point = Vec<NfElement>;

/// Distinct points in `K^d`, viewed as a subset of `R^d`.
#[derive(Clone, Debug)]
pub struct PointSet {
    field: Arc<NumberField>,
    dim: usize,
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(field: Arc<NumberField>, dim: usize, points: Vec<Point>) -> Result<Self, GeometryError> {
        if dim == 0 {
            return Err(GeometryError::ZeroDimension);
        }
        for (index, pt) in points.iter().enumerate() {
            if pt.len() != dim {
                return Err(GeometryError::WrongDimension {
                    index,
                    expected: dim,
                    got: pt.len(),
                });
            }
            if pt.iter().any(|c| c.field().min_poly() != field.min_poly()) {
                return Err(GeometryError::FieldMismatch);
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(GeometryError::DuplicatePoints { first: i, second: j });
                }
            }
        }
        Ok(PointSet { field, dim, points })
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Same set with the points reordered by `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> PointSet {
        PointSet {
            field: Arc::clone(&self.field),
            dim: self.dim,
            points: order.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }

    /// Squared distance between points `i` and `j`; zero on the diagonal.
    pub fn squared_distance_or_zero(&self, i: usize, j: usize) -> NfElement {
        if i == j {
            return self.field.zero();
        }
        sum_of_squares(&self.field, &self.points[i], &self.points[j])
    }
}

fn sum_of_squares(field: &Arc<NumberField>, x: &[NfElement], y: &[NfElement]) -> NfElement {
    x.iter().zip(y).fold(field.zero(), |acc, (a, b)| {
        let diff = a - b;
        &acc + &(&diff * &diff)
    })
}

/// `sum_i (x_i - y_i)^2`.
pub fn squared_distance(x: &[NfElement], y: &[NfElement]) -> Result<NfElement, GeometryError> {
    if x.len() != y.len() {
        return Err(GeometryError::WrongDimension {
            index: 1,
            expected: x.len(),
            got: y.len(),
        });
    }
    let Some(first) = x.first() else {
        return Err(GeometryError::ZeroDimension);
    };
    if x.iter().chain(y).any(|c| !c.same_field(first)) {
        return Err(GeometryError::FieldMismatch);
    }
    if x == y {
        return Err(GeometryError::DuplicatePoints { first: 0, second: 1 });
    }
    Ok(sum_of_squares(first.field(), x, y))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceSource {
    FromPoints,
    Direct,
}

/// The set of squared distances: distinct nonzero values in canonical
/// (lexicographic coefficient) order. `values[j - 1]` is `alpha_j`.
#[derive(Clone, Debug)]
pub struct DistanceSet {
    field: Arc<NumberField>,
    values: Vec<NfElement>,
    source: DistanceSource,
}

impl DistanceSet {
    /// A distance set given directly. Duplicates are merged.
    pub fn direct(field: Arc<NumberField>, values: Vec<NfElement>) -> Result<Self, GeometryError> {
        if values.is_empty() {
            return Err(GeometryError::NoDistances);
        }
        for (i, v) in values.iter().enumerate() {
            if v.field().min_poly() != field.min_poly() {
                return Err(GeometryError::FieldMismatch);
            }
            if v.is_zero() {
                return Err(GeometryError::ZeroDistance(i));
            }
        }
        Ok(Self::canonical(field, values, DistanceSource::Direct))
    }

    fn canonical(field: Arc<NumberField>, mut values: Vec<NfElement>, source: DistanceSource) -> Self {
        values.sort();
        values.dedup();
        DistanceSet { field, values, source }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn values(&self) -> &[NfElement] {
        &self.values
    }

    /// Number of distinct squared distances.
    pub fn s(&self) -> usize {
        self.values.len()
    }

    pub fn source(&self) -> DistanceSource {
        self.source
    }

    /// Every value multiplied by `c`, re-sorted.
    pub fn scaled(&self, c: &crate::arith::Rational) -> DistanceSet {
        let values = self.values.iter().map(|v| v.scale(c)).collect();
        Self::canonical(Arc::clone(&self.field), values, self.source)
    }
}

/// `D(X)`: all pairwise squared distances, deduplicated and sorted.
pub fn distance_set(points: &PointSet) -> Result<DistanceSet, GeometryError> {
    Ok(distance_profile(points)?.0)
}

/// `D(X)` together with how many pairs realize each value.
pub fn distance_profile(points: &PointSet) -> Result<(DistanceSet, Vec<usize>), GeometryError> {
    let n = points.len();
    if n < 2 {
        return Err(GeometryError::TooFewPoints(n));
    }
    let mut all = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            all.push(points.squared_distance_or_zero(i, j));
        }
    }
    let set = DistanceSet::canonical(Arc::clone(&points.field), all.clone(), DistanceSource::FromPoints);
    let counts = set
        .values
        .iter()
        .map(|v| all.iter().filter(|w| *w == v).count())
        .collect();
    Ok((set, counts))
}

//! The defender's payoff region in the `(Π_B⁽¹⁾, Π_B⁽²⁾)` plane.
//!
//! Each pure attack `e_i` maps to the vertex image `p_i = (c⁽¹⁾_i, c⁽²⁾_i)`
//! and every mixed attack to the matching convex combination, so the region
//! is the convex hull of the vertex images.

mod render;

use std::cmp::Ordering;

use num::{Signed, Zero};

pub use render::{coordinate_table, render_svg, write_coordinate_table};

use crate::error::Result;
use crate::model::{AttackVector, GameInstance};
use crate::rational::{self, Rational};
use crate::solver::defender_payoff_coefficients;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointLabel {
    /// Image of the pure attack on this (zero-based) asset.
    Vertex(usize),
    Mixture,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarPoint {
    pub x: Rational,
    pub y: Rational,
    pub label: PointLabel,
}

impl PlanarPoint {
    pub fn new(x: Rational, y: Rational, label: PointLabel) -> Self {
        Self { x, y, label }
    }

    pub fn same_position(&self, other: &PlanarPoint) -> bool {
        self.x == other.x && self.y == other.y
    }

    /// True when `other` is at least as good in both coordinates and strictly
    /// better in one.
    pub fn is_dominated_by(&self, other: &PlanarPoint) -> bool {
        other.x >= self.x && other.y >= self.y && (other.x > self.x || other.y > self.y)
    }
}

/// Cross product of `(b − a) × (c − a)`; positive for a left turn.
fn cross(a: &PlanarPoint, b: &PlanarPoint, c: &PlanarPoint) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

pub fn vertex_images(instance: &GameInstance) -> Result<Vec<PlanarPoint>> {
    let c = defender_payoff_coefficients(instance)?;
    Ok(c.high
        .into_iter()
        .zip(c.low)
        .enumerate()
        .map(|(i, (x, y))| PlanarPoint::new(x, y, PointLabel::Vertex(i)))
        .collect())
}

pub fn point_for_attack(instance: &GameInstance, attack: &AttackVector) -> Result<PlanarPoint> {
    instance.check_len(attack.len())?;
    let c = defender_payoff_coefficients(instance)?;
    Ok(PlanarPoint::new(
        rational::dot(&c.high, attack.entries()),
        rational::dot(&c.low, attack.entries()),
        PointLabel::Mixture,
    ))
}

/// Counterclockwise convex hull by Andrew's monotone chain, starting from the
/// lowest-x (then lowest-y) point. Collinear boundary points and duplicates
/// are dropped; degenerate inputs give a single point or a segment.
pub fn convex_hull_2d(points: &[PlanarPoint]) -> Vec<PlanarPoint> {
    let mut sorted: Vec<&PlanarPoint> = points.iter().collect();
    sorted.sort_by(|a, b| a.x.cmp(&b.x).then_with(|| a.y.cmp(&b.y)));
    sorted.dedup_by(|a, b| a.same_position(b));
    if sorted.len() <= 2 {
        return sorted.into_iter().cloned().collect();
    }

    let mut lower: Vec<&PlanarPoint> = Vec::new();
    for p in &sorted {
        while lower.len() >= 2 && !cross(lower[lower.len() - 2], lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<&PlanarPoint> = Vec::new();
    for p in sorted.iter().rev() {
        while upper.len() >= 2 && !cross(upper[upper.len() - 2], upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.into_iter().chain(upper).cloned().collect()
}

/// Points not dominated by any other point. Exact duplicates of a maximal
/// point are all kept.
pub fn pareto_frontier(points: &[PlanarPoint]) -> Vec<PlanarPoint> {
    points
        .iter()
        .filter(|q| !points.iter().any(|p| q.is_dominated_by(p)))
        .cloned()
        .collect()
}

/// Whether `point` lies inside or on the boundary of a hull produced by
/// [`convex_hull_2d`].
pub fn hull_contains(hull: &[PlanarPoint], point: &PlanarPoint) -> bool {
    match hull {
        [] => false,
        [only] => only.same_position(point),
        [a, b] => {
            cross(a, b, point).is_zero()
                && between(&a.x, &point.x, &b.x)
                && between(&a.y, &point.y, &b.y)
        }
        _ => (0..hull.len()).all(|i| !cross(&hull[i], &hull[(i + 1) % hull.len()], point).is_negative()),
    }
}

/// Whether `point` lies on the boundary of a hull from [`convex_hull_2d`].
/// Degenerate hulls (a point or a segment) are all boundary.
pub fn hull_boundary_contains(hull: &[PlanarPoint], point: &PlanarPoint) -> bool {
    if hull.len() <= 2 {
        return hull_contains(hull, point);
    }
    hull_contains(hull, point) && (0..hull.len()).any(|i| cross(&hull[i], &hull[(i + 1) % hull.len()], point).is_zero())
}

fn between(a: &Rational, v: &Rational, b: &Rational) -> bool {
    match a.cmp(b) {
        Ordering::Greater => b <= v && v <= a,
        _ => a <= v && v <= b,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PayoffRegion {
    pub names: Vec<String>,
    pub vertices: Vec<PlanarPoint>,
    pub hull: Vec<PlanarPoint>,
    pub pareto: Vec<PlanarPoint>,
}

impl PayoffRegion {
    pub fn new(instance: &GameInstance) -> Result<Self> {
        let vertices = vertex_images(instance)?;
        Ok(Self::from_points(instance.assets().iter().map(|a| a.name.clone()).collect(), vertices))
    }

    pub fn from_points(names: Vec<String>, vertices: Vec<PlanarPoint>) -> Self {
        let hull = convex_hull_2d(&vertices);
        let pareto = pareto_frontier(&vertices);
        Self { names, vertices, hull, pareto }
    }

    pub fn contains(&self, point: &PlanarPoint) -> bool {
        hull_contains(&self.hull, point)
    }

    /// Whether `point` sits at a hull corner.
    pub fn is_hull_vertex(&self, point: &PlanarPoint) -> bool {
        self.hull.iter().any(|h| h.same_position(point))
    }

    pub fn on_boundary(&self, point: &PlanarPoint) -> bool {
        hull_boundary_contains(&self.hull, point)
    }

    pub fn is_pareto(&self, point: &PlanarPoint) -> bool {
        self.pareto.iter().any(|p| p.same_position(point))
    }

    pub fn label_of(&self, point: &PlanarPoint) -> String {
        match point.label {
            PointLabel::Vertex(i) => self.names.get(i).cloned().unwrap_or_else(|| format!("p{}", i + 1)),
            PointLabel::Mixture => "mixture".to_string(),
        }
    }
}

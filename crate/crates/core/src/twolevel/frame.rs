use crate::error::{Error, Result};
use crate::geometry::{bounding_box, Coord, Point};

use super::check_beta;

/// The eight isometries of the plane that map the axes onto the axes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Isometry {
    Identity,
    /// `(x, y) -> (-y, x)`
    Rot90,
    Rot180,
    /// `(x, y) -> (y, -x)`
    Rot270,
    /// `(x, y) -> (x, -y)`
    ReflectX,
    /// `(x, y) -> (-x, y)`
    ReflectY,
    /// `(x, y) -> (y, x)`
    Transpose,
    /// `(x, y) -> (-y, -x)`
    AntiTranspose,
}

impl Isometry {
    /// Enumeration order used when choosing a canonical frame.
    pub const ALL: [Isometry; 8] = [
        Isometry::Identity,
        Isometry::Rot90,
        Isometry::Rot180,
        Isometry::Rot270,
        Isometry::ReflectX,
        Isometry::ReflectY,
        Isometry::Transpose,
        Isometry::AntiTranspose,
    ];

    pub fn apply(self, p: &Point) -> Point {
        let (x, y) = (&p.x, &p.y);
        let (nx, ny) = match self {
            Isometry::Identity => (x.clone(), y.clone()),
            Isometry::Rot90 => (-y, x.clone()),
            Isometry::Rot180 => (-x, -y),
            Isometry::Rot270 => (y.clone(), -x),
            Isometry::ReflectX => (x.clone(), -y),
            Isometry::ReflectY => (-x, y.clone()),
            Isometry::Transpose => (y.clone(), x.clone()),
            Isometry::AntiTranspose => (-y, -x),
        };
        Point::new(nx, ny)
    }

    pub fn inverse(self) -> Isometry {
        match self {
            Isometry::Rot90 => Isometry::Rot270,
            Isometry::Rot270 => Isometry::Rot90,
            other => other,
        }
    }

    /// True if the isometry exchanges the roles of width and height.
    pub fn swaps_axes(self) -> bool {
        matches!(self, Isometry::Rot90 | Isometry::Rot270 | Isometry::Transpose | Isometry::AntiTranspose)
    }
}

/// An axis isometry about a group's bounding-box center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalFrame {
    pub isometry: Isometry,
    pub center: Point,
}

impl CanonicalFrame {
    pub fn to_canonical(&self, p: &Point) -> Point {
        let shifted = Point::new(&p.x - &self.center.x, &p.y - &self.center.y);
        self.isometry.apply(&shifted)
    }

    pub fn from_canonical(&self, p: &Point) -> Point {
        let q = self.isometry.inverse().apply(p);
        Point::new(q.x + &self.center.x, q.y + &self.center.y)
    }
}

pub fn bbox_center_point(group: &[Point]) -> Point {
    bounding_box(group).expect("groups are non-empty").center()
}

/// True if every closed quadrant around the bounding-box center holds a
/// terminal. Points on the center lines count for each quadrant they touch.
pub fn is_complete(group: &[Point]) -> bool {
    let c = bbox_center_point(group);
    let quadrant = |sx: bool, sy: bool| {
        group.iter().any(|p| {
            let okx = if sx { p.x >= c.x } else { p.x <= c.x };
            let oky = if sy { p.y >= c.y } else { p.y <= c.y };
            okx && oky
        })
    };
    quadrant(false, false) && quadrant(false, true) && quadrant(true, false) && quadrant(true, true)
}

/// The first frame, in [`Isometry::ALL`] order, under which the open
/// lower-left quadrant holds no terminal and the box is at least as wide as
/// it is tall. Returns the frame and the group in its coordinates.
pub fn canonicalize(group: &[Point]) -> Result<(CanonicalFrame, Vec<Point>)> {
    if group.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if is_complete(group) {
        return Err(Error::CompleteGroup);
    }
    let bbox = bounding_box(group)?;
    let center = bbox.center();
    let wide = bbox.width() >= bbox.height();
    let tall = bbox.height() >= bbox.width();
    for iso in Isometry::ALL {
        if !(if iso.swaps_axes() { tall } else { wide }) {
            continue;
        }
        let frame = CanonicalFrame { isometry: iso, center: center.clone() };
        let mapped: Vec<Point> = group.iter().map(|p| frame.to_canonical(p)).collect();
        if mapped.iter().all(|p| !(p.x.is_negative() && p.y.is_negative())) {
            return Ok((frame, mapped));
        }
    }
    unreachable!("an incomplete group has an empty open quadrant, which some isometry maps to the lower left")
}

/// Diagonal offsets for the adjusted connection point, in canonical
/// coordinates (box center at the origin).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thresholds {
    /// Largest `s` with no terminal in `{x < s, y < s}`.
    pub t1: Coord,
    /// Smallest `s` with no terminal in `{x > s, y > s}`.
    pub t2: Coord,
    /// Half the box height.
    pub tmax: Coord,
    pub beta: Coord,
    /// `min(t1, t2, beta * tmax)`.
    pub t: Coord,
}

/// Evaluates the thresholds of a group already in canonical coordinates,
/// with `s` ranging over `[0, tmax]`.
pub fn thresholds(canonical: &[Point], beta: &Coord) -> Result<Thresholds> {
    check_beta(beta)?;
    let bbox = bounding_box(canonical)?;
    let tmax = Coord::min_of(&bbox.width(), &bbox.height()).half();
    let zero = Coord::zero();
    // A point (x, y) blocks every s > max(x, y) from the first set and every
    // s < min(x, y) from the second.
    let lowest_max = canonical.iter().map(|p| Coord::max_of(&p.x, &p.y)).min().expect("non-empty");
    let highest_min = canonical.iter().map(|p| Coord::min_of(&p.x, &p.y)).max().expect("non-empty");
    let t1 = lowest_max.clamp_to(&zero, &tmax);
    let t2 = highest_min.clamp_to(&zero, &tmax);
    let t = Coord::min_of(&Coord::min_of(&t1, &t2), &(beta * &tmax));
    Ok(Thresholds { t1, t2, tmax, beta: beta.clone(), t })
}

/// Box center for complete groups; otherwise the center moved by `(t, t)`
/// in the canonical frame.
pub fn adjusted_connection_point(group: &[Point], beta: &Coord) -> Result<Point> {
    check_beta(beta)?;
    if group.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if is_complete(group) {
        return Ok(bbox_center_point(group));
    }
    let (frame, canonical) = canonicalize(group)?;
    let th = thresholds(&canonical, beta)?;
    Ok(frame.from_canonical(&Point::new(th.t.clone(), th.t)))
}

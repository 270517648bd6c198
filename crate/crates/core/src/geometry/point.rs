use std::fmt;

use super::Coord;

/// A point in the plane. Ordered lexicographically (x, then y).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Point {
    pub x: Coord,
    pub y: Coord,
}

impl Point {
    pub fn new(x: Coord, y: Coord) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point::new(Coord::from_int(x), Coord::from_int(y))
    }

    pub fn l1(&self, other: &Point) -> Coord {
        l1_dist(self, other)
    }

    pub fn translate(&self, dx: &Coord, dy: &Coord) -> Point {
        Point::new(&self.x + dx, &self.y + dy)
    }

    /// True if the two points share an x or a y coordinate.
    pub fn is_axis_aligned_with(&self, other: &Point) -> bool {
        self.x == other.x || self.y == other.y
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Rectilinear (L1) distance.
pub fn l1_dist(p: &Point, q: &Point) -> Coord {
    (&p.x - &q.x).abs() + (&p.y - &q.y).abs()
}

/// Sorts and removes duplicates.
pub fn dedup_points(points: &[Point]) -> Vec<Point> {
    let mut out = points.to_vec();
    out.sort();
    out.dedup();
    out
}

use super::{Coord, Point};
use crate::error::{Error, Result};

/// Closed axis-aligned rectangle. Degenerate (zero width or height) is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rect {
    pub xmin: Coord,
    pub xmax: Coord,
    pub ymin: Coord,
    pub ymax: Coord,
}

impl Rect {
    pub fn new(xmin: Coord, xmax: Coord, ymin: Coord, ymax: Coord) -> Self {
        assert!(xmin <= xmax && ymin <= ymax, "inverted rectangle");
        Rect { xmin, xmax, ymin, ymax }
    }

    /// Bounding box of two corners, in any order.
    pub fn spanning(a: &Point, b: &Point) -> Self {
        Rect {
            xmin: Coord::min_of(&a.x, &b.x),
            xmax: Coord::max_of(&a.x, &b.x),
            ymin: Coord::min_of(&a.y, &b.y),
            ymax: Coord::max_of(&a.y, &b.y),
        }
    }

    pub fn width(&self) -> Coord {
        &self.xmax - &self.xmin
    }

    pub fn height(&self) -> Coord {
        &self.ymax - &self.ymin
    }

    /// Width plus height.
    pub fn semiperimeter(&self) -> Coord {
        self.width() + self.height()
    }

    pub fn area(&self) -> Coord {
        self.width() * self.height()
    }

    pub fn center(&self) -> Point {
        Point::new((&self.xmin + &self.xmax).half(), (&self.ymin + &self.ymax).half())
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.xmin <= p.x && p.x <= self.xmax && self.ymin <= p.y && p.y <= self.ymax
    }

    /// The point of the rectangle closest to `p` (unique under L1).
    pub fn clamp(&self, p: &Point) -> Point {
        Point::new(p.x.clamp_to(&self.xmin, &self.xmax), p.y.clamp_to(&self.ymin, &self.ymax))
    }

    pub fn lower_left(&self) -> Point {
        Point::new(self.xmin.clone(), self.ymin.clone())
    }

    pub fn upper_right(&self) -> Point {
        Point::new(self.xmax.clone(), self.ymax.clone())
    }
}

pub fn bounding_box(points: &[Point]) -> Result<Rect> {
    let first = points.first().ok_or(Error::EmptyPointSet)?;
    let mut r = Rect::spanning(first, first);
    for p in &points[1..] {
        if p.x < r.xmin {
            r.xmin = p.x.clone();
        }
        if p.x > r.xmax {
            r.xmax = p.x.clone();
        }
        if p.y < r.ymin {
            r.ymin = p.y.clone();
        }
        if p.y > r.ymax {
            r.ymax = p.y.clone();
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let r = bounding_box(&[Point::int(0, 0), Point::int(1, 0), Point::int(0, 1)]).unwrap();
        assert_eq!(r, Rect::new(0.into(), 1.into(), 0.into(), 1.into()));
        assert_eq!(r.center(), Point::new(Coord::ratio(1, 2), Coord::ratio(1, 2)));
        assert_eq!(r.semiperimeter(), Coord::from_int(2));

        let r = bounding_box(&[Point::int(5, 5)]).unwrap();
        assert_eq!(r.semiperimeter(), Coord::zero());
        assert_eq!(r.center(), Point::int(5, 5));

        let r = bounding_box(&[Point::int(0, 0), Point::int(1, 0), Point::int(-1, 0)]).unwrap();
        assert_eq!(r, Rect::new((-1).into(), 1.into(), 0.into(), 0.into()));
        assert_eq!(r.semiperimeter(), Coord::from_int(2));
    }

    #[test]
    fn empty_input_is_an_error() {
        assert_eq!(bounding_box(&[]), Err(Error::EmptyPointSet));
        assert_eq!(Error::EmptyPointSet.to_string(), "empty point set");
    }

    proptest! {
        #[test]
        fn bounding_box_is_minimal(pts in prop::collection::vec((-20i64..20, -20i64..20), 1..12)) {
            let pts: Vec<Point> = pts.into_iter().map(|(x, y)| Point::int(x, y)).collect();
            let r = bounding_box(&pts).unwrap();
            prop_assert!(pts.iter().all(|p| r.contains(p)));
            // Every side is touched by some input point, so any shrink loses it.
            prop_assert!(pts.iter().any(|p| p.x == r.xmin));
            prop_assert!(pts.iter().any(|p| p.x == r.xmax));
            prop_assert!(pts.iter().any(|p| p.y == r.ymin));
            prop_assert!(pts.iter().any(|p| p.y == r.ymax));
        }
    }
}

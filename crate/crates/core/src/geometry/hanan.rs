use super::{Coord, Point};
use crate::error::{Error, Result};

/// The grid spanned by all distinct terminal x- and y-coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HananGrid {
    pub xs: Vec<Coord>,
    pub ys: Vec<Coord>,
}

impl HananGrid {
    pub fn len(&self) -> usize {
        self.xs.len() * self.ys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Row-major index: `iy * xs.len() + ix`.
    pub fn index(&self, ix: usize, iy: usize) -> usize {
        iy * self.xs.len() + ix
    }

    pub fn vertex(&self, idx: usize) -> Point {
        let nx = self.xs.len();
        Point::new(self.xs[idx % nx].clone(), self.ys[idx / nx].clone())
    }

    pub fn locate(&self, p: &Point) -> Option<usize> {
        let ix = self.xs.binary_search(&p.x).ok()?;
        let iy = self.ys.binary_search(&p.y).ok()?;
        Some(self.index(ix, iy))
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.locate(p).is_some()
    }

    /// Grid edges between coordinate-adjacent vertices, with their L1 lengths.
    pub fn edges(&self) -> Vec<(usize, usize, Coord)> {
        let (nx, ny) = (self.xs.len(), self.ys.len());
        let mut out = Vec::with_capacity(2 * nx * ny);
        for iy in 0..ny {
            for ix in 0..nx {
                if ix + 1 < nx {
                    out.push((self.index(ix, iy), self.index(ix + 1, iy), &self.xs[ix + 1] - &self.xs[ix]));
                }
                if iy + 1 < ny {
                    out.push((self.index(ix, iy), self.index(ix, iy + 1), &self.ys[iy + 1] - &self.ys[iy]));
                }
            }
        }
        out
    }
}

pub fn hanan_grid(points: &[Point]) -> Result<HananGrid> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let mut xs: Vec<Coord> = points.iter().map(|p| p.x.clone()).collect();
    let mut ys: Vec<Coord> = points.iter().map(|p| p.y.clone()).collect();
    xs.sort();
    xs.dedup();
    ys.sort();
    ys.dedup();
    Ok(HananGrid { xs, ys })
}

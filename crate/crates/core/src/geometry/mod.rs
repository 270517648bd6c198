//! Exact rational L1 geometry: coordinates, points, boxes, Hanan grids and
//! embedded rectilinear trees.

mod coord;
mod hanan;
mod point;
mod rect;
mod tree;

pub use coord::Coord;
pub use hanan::{hanan_grid, HananGrid};
pub use point::{dedup_points, l1_dist, Point};
pub use rect::{bounding_box, Rect};
pub use tree::{
    nearest_point_on_tree, tree_length, validate_tree, EmbeddedTree, Embedding, Segment, TreeEdge, Violation,
};

//! Approximation algorithms, exact oracles and lifting reductions for the
//! minimum two-level rectilinear Steiner tree problem.
//!
//! Terminals are partitioned into groups. A solution connects every group by
//! its own rectilinear Steiner tree and joins the groups through a top-level
//! tree over one connection point per group. All arithmetic is exact.

mod error;
pub mod geometry;
pub mod lifting;
pub mod oracle;
pub mod rsmt;
pub mod twolevel;
pub(crate) mod util;

pub use error::{Error, ParseCoordError, Result};
pub use geometry::{
    bounding_box, hanan_grid, l1_dist, nearest_point_on_tree, tree_length, validate_tree, Coord, EmbeddedTree,
    Embedding, HananGrid, Point, Rect, Segment, TreeEdge, Violation,
};
pub use lifting::{
    flatten, lift_instance, lift_tree, normalize_single_edges, project_to_two_level, FlatTree, LiftedTree,
};
pub use oracle::{exact_rsmt, exact_two_level, u_bound};
pub use rsmt::{approx_steiner, rectilinear_mst, steinerize, SteinerSubroutine, SubroutineMode};
pub use twolevel::{
    adjusted_connection_point, bbox_center_point, factor_f, optimize_beta, refine_subtree, solve_adjusted,
    solve_bbox_center, solve_simple, solve_small_top, solve_with_connection_points, top_level_bbox, FactorBreakdown,
    Instance, TwoLevelTree,
};

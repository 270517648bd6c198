//! Batch front end for the two-level Steiner tree solvers: instance files,
//! random instances, solver runs with oracle ratios, SVG output and timing.

pub mod bench;
pub mod generate;
pub mod instance_file;
pub mod solve;
pub mod svg;

pub use bench::{fit_exponent, run_bench, BenchConfig, BenchReport};
pub use generate::{generate_instance, Distribution};
pub use instance_file::{parse_instance, parse_point_list, print_instance, InstanceFileError, ParsedInstance};
pub use solve::{run_algorithm, solve_report, Algorithm, RunReport, SolveOptions};
pub use svg::render_svg;

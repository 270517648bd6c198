//! Algorithm selection and run reports.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use twolevel_core::oracle::exact_two_level;
use twolevel_core::{
    optimize_beta, solve_adjusted, solve_bbox_center, solve_simple, solve_small_top, solve_with_connection_points,
    Coord, Instance, Point, SteinerSubroutine, TwoLevelTree,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Simple,
    BboxCenter,
    Adjusted,
    SmallTop,
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "simple" => Ok(Algorithm::Simple),
            "bbox-center" => Ok(Algorithm::BboxCenter),
            "adjusted" => Ok(Algorithm::Adjusted),
            "small-top" => Ok(Algorithm::SmallTop),
            other => Err(format!("unknown algorithm `{other}` (expected simple, bbox-center, adjusted or small-top)")),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Simple => "simple",
            Algorithm::BboxCenter => "bbox-center",
            Algorithm::Adjusted => "adjusted",
            Algorithm::SmallTop => "small-top",
        })
    }
}

/// Everything that determines a solver run.
#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub algorithm: Algorithm,
    pub sub: SteinerSubroutine,
    /// Adjusted strategy only; defaults to the optimal value for the
    /// subroutine's factor.
    pub beta: Option<Coord>,
    /// Overrides the strategy's connection points.
    pub connect: Option<Vec<Point>>,
    pub oracle: bool,
}

impl SolveOptions {
    pub fn new(algorithm: Algorithm, sub: SteinerSubroutine) -> Self {
        SolveOptions { algorithm, sub, beta: None, connect: None, oracle: false }
    }

    pub fn effective_beta(&self) -> twolevel_core::Result<Coord> {
        match &self.beta {
            Some(b) => Ok(b.clone()),
            None => optimize_beta(&self.sub.alpha()).map(|(b, _)| b),
        }
    }
}

pub fn run_algorithm(instance: &Instance, opts: &SolveOptions) -> twolevel_core::Result<TwoLevelTree> {
    if let Some(q) = &opts.connect {
        return solve_with_connection_points(instance, q, &opts.sub);
    }
    match opts.algorithm {
        Algorithm::Simple => solve_simple(instance, &opts.sub),
        Algorithm::BboxCenter => solve_bbox_center(instance, &opts.sub),
        Algorithm::Adjusted => solve_adjusted(instance, &opts.effective_beta()?, &opts.sub),
        Algorithm::SmallTop => solve_small_top(instance, &opts.sub),
    }
}

/// An exact rational with a 6-significant-digit rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Length {
    pub exact: String,
    pub decimal: String,
}

impl From<&Coord> for Length {
    fn from(c: &Coord) -> Self {
        Length { exact: c.to_string(), decimal: c.to_decimal(6) }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact == self.decimal {
            f.write_str(&self.exact)
        } else {
            write!(f, "{} (~{})", self.exact, self.decimal)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub optimum: Length,
    pub ratio: Length,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub algorithm: String,
    pub subroutine: String,
    pub beta: Option<String>,
    pub forced_connection_points: bool,
    pub connection_points: Vec<[String; 2]>,
    pub total_length: Length,
    pub top_length: Length,
    pub subtree_lengths: Vec<Length>,
    pub oracle: Option<OracleReport>,
    pub wall_time_ms: f64,
    #[serde(skip)]
    pub total_exact: Coord,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "algorithm: {}  subroutine: {}", self.algorithm, self.subroutine)?;
        if let Some(b) = &self.beta {
            write!(f, "  beta: {b}")?;
        }
        if self.forced_connection_points {
            write!(f, "  (forced connection points)")?;
        }
        writeln!(f)?;
        let q: Vec<String> = self.connection_points.iter().map(|[x, y]| format!("({x}, {y})")).collect();
        writeln!(f, "connection points: {}", q.join(" "))?;
        writeln!(f, "top length: {}", self.top_length)?;
        for (i, l) in self.subtree_lengths.iter().enumerate() {
            writeln!(f, "subtree {}: {l}", i + 1)?;
        }
        writeln!(f, "total length: {}", self.total_length)?;
        if let Some(o) = &self.oracle {
            writeln!(f, "optimum: {}  ratio: {}", o.optimum, o.ratio)?;
        }
        write!(f, "time: {:.3} ms", self.wall_time_ms)
    }
}

/// Runs the selected solver and, on request, the exact oracle. Lengths are
/// recomputed from the returned embeddings.
pub fn solve_report(instance: &Instance, opts: &SolveOptions) -> twolevel_core::Result<(TwoLevelTree, RunReport)> {
    let start = Instant::now();
    let tree = run_algorithm(instance, opts)?;
    let elapsed = start.elapsed();
    let total = tree.total_length();
    let oracle = if opts.oracle {
        let (_, opt) = exact_two_level(instance)?;
        let ratio = if opt.is_zero() { Coord::one() } else { &total / &opt };
        Some(OracleReport { optimum: Length::from(&opt), ratio: Length::from(&ratio) })
    } else {
        None
    };
    let beta = match (opts.algorithm, &opts.connect) {
        (Algorithm::Adjusted, None) => Some(opts.effective_beta()?.to_string()),
        _ => None,
    };
    let report = RunReport {
        algorithm: opts.algorithm.to_string(),
        subroutine: opts.sub.name().to_string(),
        beta,
        forced_connection_points: opts.connect.is_some(),
        connection_points: tree.connection_points().iter().map(|p| [p.x.to_string(), p.y.to_string()]).collect(),
        total_length: Length::from(&total),
        top_length: Length::from(&tree.top_length()),
        subtree_lengths: tree.subtree_lengths().iter().map(Length::from).collect(),
        oracle,
        wall_time_ms: elapsed.as_secs_f64() * 1e3,
        total_exact: total,
    };
    Ok((tree, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig(groups: &[&[(i64, i64)]]) -> Instance {
        Instance::new(groups.iter().map(|g| g.iter().map(|&(x, y)| Point::int(x, y)).collect()).collect()).unwrap()
    }

    #[test]
    fn forced_points_reproduce_the_bad_choice() {
        let inst = fig(&[&[(0, 0), (1, 0)], &[(0, 0), (-1, 0)]]);
        let mut opts = SolveOptions::new(Algorithm::Simple, SteinerSubroutine::exact());
        opts.connect = Some(vec![Point::int(1, 0), Point::int(-1, 0)]);
        opts.oracle = true;
        let (_, r) = solve_report(&inst, &opts).unwrap();
        assert_eq!(r.total_exact, Coord::from_int(4));
        assert_eq!(r.oracle.unwrap().ratio.exact, "2");
    }

    #[test]
    fn default_beta_follows_the_subroutine() {
        let opts = SolveOptions::new(Algorithm::Adjusted, SteinerSubroutine::rmst());
        assert_eq!(opts.effective_beta().unwrap(), Coord::ratio(7, 13));
        let opts = SolveOptions::new(Algorithm::Adjusted, SteinerSubroutine::exact());
        assert_eq!(opts.effective_beta().unwrap(), Coord::ratio(3, 5));
    }

    #[test]
    fn report_lengths_and_json() {
        let inst = fig(&[&[(0, 0), (1, 0), (0, 1)], &[(0, 0), (-1, 0), (0, -1)]]);
        let mut opts = SolveOptions::new(Algorithm::BboxCenter, SteinerSubroutine::exact());
        opts.oracle = true;
        let (tree, r) = solve_report(&inst, &opts).unwrap();
        assert_eq!(r.total_exact, tree.total_length());
        assert_eq!(r.total_length.exact, "7");
        let o = r.oracle.clone().unwrap();
        assert_eq!(o.ratio, Length { exact: "7/4".into(), decimal: "1.75".into() });
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["total_length"]["exact"], "7");
        assert_eq!(json["oracle"]["optimum"]["exact"], "4");
        assert!(r.to_string().contains("ratio: 7/4 (~1.75)"));
    }

    #[test]
    fn algorithm_names() {
        for a in [Algorithm::Simple, Algorithm::BboxCenter, Algorithm::Adjusted, Algorithm::SmallTop] {
            assert_eq!(a.to_string().parse::<Algorithm>(), Ok(a));
        }
        assert!("greedy".parse::<Algorithm>().is_err());
    }
}

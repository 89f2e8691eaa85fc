//! Schröder lattice paths.
//!
//! A path starts on the x-axis, uses up `(1,1)`, down `(1,-1)` and level
//! `(2,0)` steps, never goes below the axis and ends back on it. A path is
//! *small* when no level step is taken at height zero.
//!
//! Paths are generated depth-first with the step order `U < L < D`, so every
//! enumeration in this crate is lexicographic in that order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Exact signed integer used for every count and determinant.
pub type BigCount = BigInt;

/// A lattice point `(x, y)`.
pub type Point = (i64, i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Level,
    Down,
}

impl Step {
    pub const ALL: [Step; 3] = [Step::Up, Step::Level, Step::Down];

    pub fn displacement(self) -> (i64, i64) {
        match self {
            Step::Up => (1, 1),
            Step::Level => (2, 0),
            Step::Down => (1, -1),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Level => 'L',
            Step::Down => 'D',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'U' => Some(Step::Up),
            'L' => Some(Step::Level),
            'D' => Some(Step::Down),
            _ => None,
        }
    }
}

/// Parse a string over `{U, L, D}`.
pub fn parse_steps(text: &str) -> Result<Vec<Step>> {
    text.chars()
        .map(|c| Step::from_char(c).ok_or_else(|| Error::InvalidPath(format!("unknown step {c:?}"))))
        .collect()
}

pub fn steps_to_string(steps: &[Step]) -> String {
    steps.iter().map(|s| s.as_char()).collect()
}

/// A Schröder path anchored at `(start_x, 0)`.
///
/// Construction checks that the path stays weakly above the axis and returns
/// to it, so every value of this type is a valid large Schröder path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PathRepr", into = "PathRepr")]
pub struct SchroederPath {
    start_x: i64,
    steps: Vec<Step>,
}

#[derive(Serialize, Deserialize)]
struct PathRepr {
    start_x: i64,
    steps: String,
}

impl TryFrom<PathRepr> for SchroederPath {
    type Error = Error;

    fn try_from(repr: PathRepr) -> Result<Self> {
        SchroederPath::new(repr.start_x, parse_steps(&repr.steps)?)
    }
}

impl From<SchroederPath> for PathRepr {
    fn from(path: SchroederPath) -> Self {
        PathRepr {
            start_x: path.start_x,
            steps: steps_to_string(&path.steps),
        }
    }
}

impl SchroederPath {
    pub fn new(start_x: i64, steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for (k, step) in steps.iter().enumerate() {
            height += step.displacement().1;
            if height < 0 {
                return Err(Error::InvalidPath(format!(
                    "{} dips below the axis after step {}",
                    steps_to_string(&steps),
                    k + 1
                )));
            }
        }
        if height != 0 {
            return Err(Error::InvalidPath(format!(
                "{} ends at height {height}",
                steps_to_string(&steps)
            )));
        }
        Ok(SchroederPath { start_x, steps })
    }

    /// Parse from a step string such as `"UULDD"`.
    pub fn parse(start_x: i64, steps: &str) -> Result<Self> {
        SchroederPath::new(start_x, parse_steps(steps)?)
    }

    /// The degenerate path consisting of the single point `(x, 0)`.
    pub fn point(x: i64) -> Self {
        SchroederPath {
            start_x: x,
            steps: Vec::new(),
        }
    }

    pub fn start_x(&self) -> i64 {
        self.start_x
    }

    pub fn end_x(&self) -> i64 {
        self.start_x + self.steps.iter().map(|s| s.displacement().0).sum::<i64>()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    pub fn step_string(&self) -> String {
        steps_to_string(&self.steps)
    }

    /// Every lattice point the path visits, in order, including both ends.
    pub fn vertices(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (self.start_x, 0);
        out.push((x, y));
        for step in &self.steps {
            let (dx, dy) = step.displacement();
            x += dx;
            y += dy;
            out.push((x, y));
        }
        out
    }

    /// No level step at height zero.
    pub fn is_small(&self) -> bool {
        let mut height = 0;
        for step in &self.steps {
            if height == 0 && *step == Step::Level {
                return false;
            }
            height += step.displacement().1;
        }
        true
    }

    /// Wrap the path in `depth` up steps and `depth` down steps. The result
    /// starts `depth` units further left and ends `depth` units further right.
    pub fn framed(&self, depth: usize) -> SchroederPath {
        let mut steps = Vec::with_capacity(self.steps.len() + 2 * depth);
        steps.extend(std::iter::repeat_n(Step::Up, depth));
        steps.extend_from_slice(&self.steps);
        steps.extend(std::iter::repeat_n(Step::Down, depth));
        SchroederPath {
            start_x: self.start_x - depth as i64,
            steps,
        }
    }

    /// Inverse of [`framed`](Self::framed); fails when the path does not
    /// begin with `depth` up steps and end with `depth` down steps, or when
    /// the inner part would dip below the axis.
    pub fn unframed(&self, depth: usize) -> Result<SchroederPath> {
        let len = self.steps.len();
        let has_frame = len >= 2 * depth
            && self.steps[..depth].iter().all(|s| *s == Step::Up)
            && self.steps[len - depth..].iter().all(|s| *s == Step::Down);
        if !has_frame {
            return Err(Error::InvalidPath(format!(
                "{} is not framed by {depth} up and down steps",
                self.step_string()
            )));
        }
        SchroederPath::new(self.start_x + depth as i64, self.steps[depth..len - depth].to_vec())
    }
}

impl fmt::Display for SchroederPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.step_string(), self.start_x)
    }
}

impl FromStr for SchroederPath {
    type Err = Error;

    /// Parses the `Display` form `STEPS@start_x`.
    fn from_str(s: &str) -> Result<Self> {
        let (steps, start) = s
            .split_once('@')
            .ok_or_else(|| Error::InvalidPath(format!("expected STEPS@start_x, got {s:?}")))?;
        let start_x = start
            .parse()
            .map_err(|_| Error::InvalidPath(format!("bad start abscissa {start:?}")))?;
        SchroederPath::parse(start_x, steps)
    }
}

/// Large Schröder numbers `r_0, …, r_{len-1}` via the first-return
/// convolution `r_{m+1} = r_m + Σ_k r_k r_{m-k}`.
pub fn large_schroeder_sequence(len: usize) -> Vec<BigCount> {
    let mut r: Vec<BigCount> = Vec::with_capacity(len);
    if len == 0 {
        return r;
    }
    r.push(BigCount::from(1));
    while r.len() < len {
        let m = r.len() - 1;
        let conv: BigCount = (0..=m).map(|k| &r[k] * &r[m - k]).sum();
        r.push(&r[m] + conv);
    }
    r
}

/// Small Schröder numbers `s_0, …, s_{len-1}`: `s_0 = 1`, `s_m = r_m / 2`.
pub fn small_schroeder_sequence(len: usize) -> Vec<BigCount> {
    large_schroeder_sequence(len)
        .into_iter()
        .enumerate()
        .map(|(m, r)| if m == 0 { r } else { r / 2 })
        .collect()
}

pub fn large_schroeder(n: usize) -> BigCount {
    large_schroeder_sequence(n + 1).pop().unwrap()
}

pub fn small_schroeder(n: usize) -> BigCount {
    small_schroeder_sequence(n + 1).pop().unwrap()
}

fn span_width(start_x: i64, end_x: i64) -> Result<i64> {
    let width = end_x - start_x;
    if width < 0 || width % 2 != 0 {
        return Err(Error::InvalidSpan {
            start: start_x,
            end: end_x,
        });
    }
    Ok(width)
}

/// Depth-first generation of every path from `(start_x, 0)` to `(end_x, 0)`
/// that avoids the `blocked` points, in `U < L < D` order. Branches that can
/// no longer return to the axis in time are cut.
pub(crate) fn walk_paths(
    start_x: i64,
    end_x: i64,
    small_only: bool,
    blocked: &dyn Fn(Point) -> bool,
    visit: &mut dyn FnMut(&[Step]),
) {
    if blocked((start_x, 0)) {
        return;
    }
    let mut steps = Vec::new();
    descend(start_x, 0, end_x, small_only, blocked, &mut steps, visit);
}

fn descend(
    x: i64,
    y: i64,
    end_x: i64,
    small_only: bool,
    blocked: &dyn Fn(Point) -> bool,
    steps: &mut Vec<Step>,
    visit: &mut dyn FnMut(&[Step]),
) {
    let remaining = end_x - x;
    if remaining == 0 {
        if y == 0 {
            visit(steps);
        }
        return;
    }
    for step in Step::ALL {
        let (dx, dy) = step.displacement();
        let (nx, ny) = (x + dx, y + dy);
        if ny < 0 || ny > end_x - nx {
            continue;
        }
        if small_only && step == Step::Level && y == 0 {
            continue;
        }
        if blocked((nx, ny)) {
            continue;
        }
        steps.push(step);
        descend(nx, ny, end_x, small_only, blocked, steps, visit);
        steps.pop();
    }
}

/// Every Schröder path from `(start_x, 0)` to `(end_x, 0)`, in `U < L < D`
/// lexicographic order. With `small_only`, only small paths are returned.
pub fn enumerate_paths(start_x: i64, end_x: i64, small_only: bool) -> Result<Vec<SchroederPath>> {
    span_width(start_x, end_x)?;
    let mut out = Vec::new();
    walk_paths(start_x, end_x, small_only, &|_| false, &mut |steps| {
        out.push(SchroederPath {
            start_x,
            steps: steps.to_vec(),
        });
    });
    Ok(out)
}

/// Number of large Schröder paths from `(start_x, 0)` to `(end_x, 0)`,
/// counted by dynamic programming over the lattice (no enumeration).
pub fn count_paths(start_x: i64, end_x: i64) -> Result<BigCount> {
    let width = span_width(start_x, end_x)? as usize;
    // ways[x][h]: paths from the start to (start_x + x, h)
    let zero = BigCount::from(0);
    let mut ways = vec![vec![zero; width + 1]; width + 1];
    ways[0][0] = BigCount::from(1);
    for x in 1..=width {
        for h in 0..=width {
            let mut total = BigCount::from(0);
            if h >= 1 {
                total += &ways[x - 1][h - 1];
            }
            if h < width {
                total += &ways[x - 1][h + 1];
            }
            if x >= 2 {
                total += &ways[x - 2][h];
            }
            ways[x][h] = total;
        }
    }
    Ok(ways[width][0].clone())
}

/// Number of large Schröder paths from `A_i = (-2i+1, 0)` to `B_j = (2j-1, 0)`.
pub fn count_paths_between(i: usize, j: usize) -> Result<BigCount> {
    if i == 0 || j == 0 {
        return Err(Error::Domain("path endpoints are indexed from 1".into()));
    }
    count_paths(-(2 * i as i64 - 1), 2 * j as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(paths: &[SchroederPath]) -> Vec<String> {
        paths.iter().map(|p| p.step_string()).collect()
    }

    /// Brute force: every word over {U, L, D} whose x-width is `width`,
    /// filtered by the path conditions.
    fn brute_force(width: i64, small_only: bool) -> Vec<String> {
        fn grow(prefix: &mut Vec<Step>, width_left: i64, out: &mut Vec<Vec<Step>>) {
            if width_left == 0 {
                out.push(prefix.clone());
                return;
            }
            for step in Step::ALL {
                let dx = step.displacement().0;
                if dx <= width_left {
                    prefix.push(step);
                    grow(prefix, width_left - dx, out);
                    prefix.pop();
                }
            }
        }
        let mut words = Vec::new();
        grow(&mut Vec::new(), width, &mut words);
        let mut valid: Vec<String> = words
            .into_iter()
            .filter_map(|w| SchroederPath::new(0, w).ok())
            .filter(|p| !small_only || p.is_small())
            .map(|p| p.step_string())
            .collect();
        let rank = |s: &String| s.chars().map(|c| Step::from_char(c).unwrap()).collect::<Vec<_>>();
        valid.sort_by_key(rank);
        valid
    }

    #[test]
    fn listed_values() {
        let r: Vec<u32> = vec![1, 2, 6, 22, 90, 394, 1806];
        let s: Vec<u32> = vec![1, 1, 3, 11, 45, 197, 903];
        let big = |v: Vec<u32>| v.into_iter().map(BigCount::from).collect::<Vec<_>>();
        assert_eq!(large_schroeder_sequence(7), big(r));
        assert_eq!(small_schroeder_sequence(7), big(s));
        assert_eq!(large_schroeder(0), 1.into());
        assert_eq!(large_schroeder(3), 22.into());
        assert_eq!(large_schroeder(6), 1806.into());
        assert_eq!(small_schroeder(0), 1.into());
        assert_eq!(small_schroeder(2), 3.into());
        assert_eq!(small_schroeder(5), 197.into());
    }

    #[test]
    fn large_is_twice_small() {
        for n in 1..=10 {
            assert_eq!(large_schroeder(n), small_schroeder(n) * 2);
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(strings(&enumerate_paths(-1, 1, false).unwrap()), ["UD", "L"]);
        assert_eq!(strings(&enumerate_paths(0, 4, true).unwrap()), ["UUDD", "ULD", "UDUD"]);
        let empty = enumerate_paths(0, 0, false).unwrap();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].steps().is_empty());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for m in 0..=5 {
            for small in [false, true] {
                let got = strings(&enumerate_paths(0, 2 * m, small).unwrap());
                assert_eq!(got, brute_force(2 * m, small), "m = {m}, small = {small}");
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        for n in 0..=10usize {
            let w = 2 * n as i64;
            assert_eq!(
                BigCount::from(enumerate_paths(0, w, false).unwrap().len()),
                large_schroeder(n)
            );
            assert_eq!(
                BigCount::from(enumerate_paths(0, w, true).unwrap().len()),
                small_schroeder(n)
            );
        }
    }

    #[test]
    fn enumerated_paths_are_valid() {
        for path in enumerate_paths(-3, 5, false).unwrap() {
            assert_eq!(path.start_x(), -3);
            assert_eq!(path.end_x(), 5);
            assert!(path.vertices().iter().all(|&(_, y)| y >= 0));
            assert_eq!(path.vertices().last().unwrap().1, 0);
            assert!(SchroederPath::new(path.start_x(), path.steps().to_vec()).is_ok());
        }
    }

    #[test]
    fn invalid_spans() {
        assert_eq!(
            enumerate_paths(0, 3, false),
            Err(Error::InvalidSpan { start: 0, end: 3 })
        );
        assert_eq!(
            enumerate_paths(2, 0, true),
            Err(Error::InvalidSpan { start: 2, end: 0 })
        );
        assert!(count_paths(0, -2).is_err());
    }

    #[test]
    fn paths_between_anchor_points() {
        assert_eq!(count_paths_between(1, 1).unwrap(), 2.into());
        assert_eq!(count_paths_between(1, 2).unwrap(), 6.into());
        assert_eq!(count_paths_between(2, 3).unwrap(), 90.into());
        for i in 1..=5 {
            for j in 1..=5 {
                assert_eq!(count_paths_between(i, j).unwrap(), large_schroeder(i + j - 1));
            }
        }
        assert!(count_paths_between(0, 1).is_err());
    }

    #[test]
    fn rejects_invalid_paths() {
        assert!(SchroederPath::parse(0, "DU").is_err());
        assert!(SchroederPath::parse(0, "UUD").is_err());
        assert!(SchroederPath::parse(0, "UXD").is_err());
        assert!(SchroederPath::parse(0, "").is_ok());
    }

    #[test]
    fn smallness() {
        assert!(!SchroederPath::parse(0, "L").unwrap().is_small());
        assert!(SchroederPath::parse(0, "ULD").unwrap().is_small());
        assert!(!SchroederPath::parse(0, "UDL").unwrap().is_small());
    }

    #[test]
    fn framing_round_trip() {
        let p = SchroederPath::parse(-1, "L").unwrap();
        let framed = p.framed(2);
        assert_eq!(framed.step_string(), "UULDD");
        assert_eq!(framed.start_x(), -3);
        assert_eq!(framed.end_x(), 3);
        assert_eq!(framed.unframed(2).unwrap(), p);
        assert!(SchroederPath::parse(0, "UDUD").unwrap().unframed(1).is_err());
    }

    #[test]
    fn json_shape() {
        let p = SchroederPath::parse(-3, "UULDD").unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"start_x":-3,"steps":"UULDD"}"#);
        let back: SchroederPath = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<SchroederPath>(r#"{"start_x":0,"steps":"D"}"#).is_err());
    }

    #[test]
    fn display_parse() {
        let p = SchroederPath::parse(-5, "ULD").unwrap();
        assert_eq!(p.to_string(), "ULD@-5");
        assert_eq!("ULD@-5".parse::<SchroederPath>().unwrap(), p);
    }
}

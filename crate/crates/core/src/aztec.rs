//! The Aztec diamond `Az(n)` and its domino tilings.
//!
//! A cell is the unit square with lower-left corner `(x, y)`; it belongs to
//! `Az(n)` when all four corners satisfy `|x| + |y| <= n + 1`. Rows are
//! numbered `1..=2n` from the bottom, row `i` holding the cells with
//! `y = i - 1 - n`.
//!
//! # Path frame
//!
//! The tiling-to-paths map threads a path through each of the bottom `n`
//! rows. Its points are midpoints of vertical cell edges; the west-edge
//! midpoint of cell `(x, y)` is written as the lattice point `(x, y + n)`.
//! In this frame the crossing of row `i` runs from `(-i, i - 1)` to
//! `(i, i - 1)`, and prefixing `i - 1` up steps and suffixing `i - 1` down
//! steps lands it exactly on the anchors `(∓(2i - 1), 0)`. All geometry stays
//! in integers.
//!
//! Walking east from the point of cell `c`:
//!
//! | domino covering `c`              | step | exit point |
//! |----------------------------------|------|------------|
//! | horizontal, anchored at `c`      | `L`  | `(x+2, h)` |
//! | vertical, anchored at `c`        | `U`  | `(x+1, h+1)` |
//! | vertical, anchored below `c`     | `D`  | `(x+1, h-1)` |
//!
//! Each exit is the reflection of the entry through the domino's center.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::hankel::{HankelKind, HankelMatrix};
use crate::lgv::{AnchorScheme, PathFamily, SchemeKind};
use crate::schroeder::{BigCount, Point, SchroederPath, Step};
use crate::{pow2, Error, Result};

pub const DEFAULT_TILING_CUTOFF: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub x: i64,
    pub y: i64,
}

impl Cell {
    pub fn new(x: i64, y: i64) -> Self {
        Cell { x, y }
    }
}

/// Row-major from the bottom: `(y, x)`.
impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn in_region(n: usize, cell: Cell) -> bool {
    let bound = n as i64 + 1;
    [(0, 0), (1, 0), (0, 1), (1, 1)]
        .iter()
        .all(|(dx, dy)| (cell.x + dx).abs() + (cell.y + dy).abs() <= bound)
}

/// The cells of `Az(n)` in `(y, x)` order; there are `2n(n+1)` of them.
pub fn region_cells(n: usize) -> Vec<Cell> {
    let m = n as i64;
    let mut cells = Vec::with_capacity(2 * n * (n + 1));
    for y in -m - 1..=m {
        for x in -m - 1..=m {
            let c = Cell::new(x, y);
            if in_region(n, c) {
                cells.push(c);
            }
        }
    }
    cells
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "H")]
    Horizontal,
    #[serde(rename = "V")]
    Vertical,
}

/// A domino by its lower-left cell. Horizontal dominoes also cover the
/// eastern neighbour, vertical ones the northern neighbour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domino {
    pub anchor: Cell,
    pub orientation: Orientation,
}

#[derive(Serialize, Deserialize)]
struct DominoRepr {
    x: i64,
    y: i64,
    o: Orientation,
}

impl Serialize for Domino {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DominoRepr {
            x: self.anchor.x,
            y: self.anchor.y,
            o: self.orientation,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Domino {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = DominoRepr::deserialize(d)?;
        Ok(Domino {
            anchor: Cell::new(r.x, r.y),
            orientation: r.o,
        })
    }
}

impl Domino {
    pub fn horizontal(x: i64, y: i64) -> Self {
        Domino {
            anchor: Cell::new(x, y),
            orientation: Orientation::Horizontal,
        }
    }

    pub fn vertical(x: i64, y: i64) -> Self {
        Domino {
            anchor: Cell::new(x, y),
            orientation: Orientation::Vertical,
        }
    }

    pub fn cells(&self) -> [Cell; 2] {
        let Cell { x, y } = self.anchor;
        match self.orientation {
            Orientation::Horizontal => [Cell::new(x, y), Cell::new(x + 1, y)],
            Orientation::Vertical => [Cell::new(x, y), Cell::new(x, y + 1)],
        }
    }
}

impl fmt::Display for Domino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = match self.orientation {
            Orientation::Horizontal => 'H',
            Orientation::Vertical => 'V',
        };
        write!(f, "{o}({}, {})", self.anchor.x, self.anchor.y)
    }
}

/// A domino tiling of `Az(order)`, dominoes sorted by `(y, x, orientation)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tiling {
    order: usize,
    dominoes: Vec<Domino>,
}

#[derive(Serialize, Deserialize)]
struct TilingRepr {
    order: usize,
    dominoes: Vec<Domino>,
}

impl Serialize for Tiling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TilingRepr {
            order: self.order,
            dominoes: self.dominoes.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tiling {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = TilingRepr::deserialize(d)?;
        Tiling::new(r.order, r.dominoes).map_err(serde::de::Error::custom)
    }
}

impl Tiling {
    /// Validates that the dominoes lie in `Az(order)`, do not overlap and
    /// cover it; errors name the first offending domino.
    pub fn new(order: usize, mut dominoes: Vec<Domino>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTiling("order must be positive".into()));
        }
        let mut owner: HashMap<Cell, Domino> = HashMap::new();
        for d in &dominoes {
            for c in d.cells() {
                if !in_region(order, c) {
                    return Err(Error::InvalidTiling(format!(
                        "domino {d} covers cell ({}, {}) outside Az({order})",
                        c.x, c.y
                    )));
                }
                if let Some(prev) = owner.insert(c, *d) {
                    return Err(Error::InvalidTiling(format!(
                        "domino {d} overlaps {prev} at cell ({}, {})",
                        c.x, c.y
                    )));
                }
            }
        }
        if let Some(c) = region_cells(order).into_iter().find(|c| !owner.contains_key(c)) {
            return Err(Error::InvalidTiling(format!("cell ({}, {}) is not covered", c.x, c.y)));
        }
        dominoes.sort();
        Ok(Tiling { order, dominoes })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    fn cover_map(&self) -> HashMap<Cell, Domino> {
        self.dominoes.iter().flat_map(|d| d.cells().map(|c| (c, *d))).collect()
    }
}

/// Cells of the bounding box `[-n, n-1]²`, indexed row-major from the
/// bottom so that index order is `(y, x)` order.
struct Board {
    n: i64,
    side: usize,
    covered: Vec<bool>,
}

impl Board {
    fn new(n: usize) -> Self {
        let side = 2 * n;
        let mut board = Board {
            n: n as i64,
            side,
            covered: vec![true; side * side],
        };
        for c in region_cells(n) {
            let idx = board.index(c);
            board.covered[idx] = false;
        }
        board
    }

    fn index(&self, c: Cell) -> usize {
        (c.y + self.n) as usize * self.side + (c.x + self.n) as usize
    }

    fn cell(&self, idx: usize) -> Cell {
        Cell::new((idx % self.side) as i64 - self.n, (idx / self.side) as i64 - self.n)
    }
}

/// Visit every tiling of `Az(n)`. Backtracking always covers the least
/// uncovered cell in `(y, x)` order, trying horizontal before vertical, so
/// each tiling is produced exactly once and dominoes come out sorted.
pub fn for_each_tiling(n: usize, cutoff: usize, mut visit: impl FnMut(&[Domino])) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("Aztec diamond order must be positive".into()));
    }
    if n > cutoff {
        return Err(Error::SizeLimit {
            what: "tiling enumeration",
            n,
            cutoff,
        });
    }
    let mut board = Board::new(n);
    let mut placed = Vec::with_capacity(n * (n + 1));
    place(&mut board, 0, &mut placed, &mut visit);
    Ok(())
}

fn place(board: &mut Board, from: usize, placed: &mut Vec<Domino>, visit: &mut impl FnMut(&[Domino])) {
    let Some(idx) = (from..board.covered.len()).find(|&i| !board.covered[i]) else {
        visit(placed);
        return;
    };
    let side = board.side;
    let cell = board.cell(idx);
    board.covered[idx] = true;
    if idx % side + 1 < side && !board.covered[idx + 1] {
        board.covered[idx + 1] = true;
        placed.push(Domino {
            anchor: cell,
            orientation: Orientation::Horizontal,
        });
        place(board, idx + 1, placed, visit);
        placed.pop();
        board.covered[idx + 1] = false;
    }
    if idx + side < board.covered.len() && !board.covered[idx + side] {
        board.covered[idx + side] = true;
        placed.push(Domino {
            anchor: cell,
            orientation: Orientation::Vertical,
        });
        place(board, idx + 1, placed, visit);
        placed.pop();
        board.covered[idx + side] = false;
    }
    board.covered[idx] = false;
}

pub fn enumerate_tilings(n: usize, cutoff: usize) -> Result<Vec<Tiling>> {
    let mut out = Vec::new();
    for_each_tiling(n, cutoff, |ds| {
        out.push(Tiling {
            order: n,
            dominoes: ds.to_vec(),
        })
    })?;
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMethod {
    Formula,
    Determinant,
    Enumeration,
}

/// Number of tilings of `Az(n)`: `2^{n(n+1)/2}`, `det H1_n`, or a full count.
pub fn count_tilings(n: usize, method: CountMethod, cutoff: usize) -> Result<BigCount> {
    if n == 0 {
        return Err(Error::Domain("Aztec diamond order must be positive".into()));
    }
    match method {
        CountMethod::Formula => Ok(pow2((n * (n + 1) / 2) as u64)),
        CountMethod::Determinant => Ok(HankelMatrix::of_kind(HankelKind::H1, n)?.determinant()),
        CountMethod::Enumeration => {
            let mut count = 0u64;
            for_each_tiling(n, cutoff, |_| count += 1)?;
            Ok(BigInt::from(count))
        }
    }
}

/// The path threaded through row `row` (1-based) of a tiling, in the path
/// frame described in the module docs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCrossing {
    pub row: usize,
    pub start: Point,
    pub steps: Vec<Step>,
}

impl RowCrossing {
    pub fn vertices(&self) -> Vec<Point> {
        let mut at = self.start;
        let mut out = vec![at];
        for s in &self.steps {
            let (dx, dy) = s.displacement();
            at = (at.0 + dx, at.1 + dy);
            out.push(at);
        }
        out
    }
}

/// The crossings of rows `1..=n`.
pub fn row_crossings(t: &Tiling) -> Result<Vec<RowCrossing>> {
    let n = t.order as i64;
    let cover = t.cover_map();
    (1..=n)
        .map(|i| {
            let start = (-i, i - 1);
            let (mut x, mut h) = start;
            let mut steps = Vec::new();
            while x < i {
                let cell = Cell::new(x, h - n);
                let d = cover.get(&cell).ok_or_else(|| {
                    Error::InvalidTiling(format!(
                        "row {i} crossing leaves the region at cell ({}, {})",
                        cell.x, cell.y
                    ))
                })?;
                let step = match d.orientation {
                    Orientation::Horizontal if d.anchor == cell => Step::Level,
                    Orientation::Vertical if d.anchor == cell => Step::Up,
                    Orientation::Vertical => Step::Down,
                    Orientation::Horizontal => {
                        return Err(Error::InvalidTiling(format!(
                            "row {i} crossing enters the middle of domino {d}"
                        )))
                    }
                };
                let (dx, dy) = step.displacement();
                x += dx;
                h += dy;
                steps.push(step);
            }
            if (x, h) != (i, i - 1) {
                return Err(Error::InvalidTiling(format!(
                    "row {i} crossing ends at ({x}, {h}) instead of ({i}, {})",
                    i - 1
                )));
            }
            Ok(RowCrossing {
                row: i as usize,
                start,
                steps,
            })
        })
        .collect()
}

/// The tiling-to-paths bijection: `π_i = U^{i-1} τ_i D^{i-1}` where `τ_i`
/// is the crossing of row `i`.
pub fn tiling_to_paths(t: &Tiling) -> Result<PathFamily> {
    let paths = row_crossings(t)?
        .into_iter()
        .map(|rc| {
            let depth = rc.row - 1;
            let mut steps = vec![Step::Up; depth];
            steps.extend(rc.steps);
            steps.extend(std::iter::repeat_n(Step::Down, depth));
            SchroederPath::new(-(2 * rc.row as i64 - 1), steps)
        })
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::Internal(format!("row crossing is not a Schröder path: {e}")))?;
    let family = PathFamily::new(AnchorScheme::new(SchemeKind::Pi, t.order), paths)?;
    if !family.is_nonintersecting() {
        return Err(Error::Internal("row crossings of a tiling intersect".into()));
    }
    Ok(family)
}

/// Inverse of [`tiling_to_paths`]: lay each crossing's dominoes along its
/// row, then fill whatever is left with horizontal dominoes.
pub fn paths_to_tiling(f: &PathFamily) -> Result<Tiling> {
    let scheme = f.scheme();
    if scheme.kind != SchemeKind::Pi || scheme.n == 0 {
        return Err(Error::Domain(format!(
            "expected a non-empty pi family, got {}",
            scheme.kind
        )));
    }
    if !f.is_nonintersecting() {
        return Err(Error::Domain("family is not non-intersecting".into()));
    }
    let n = scheme.n;
    let shift = n as i64;
    let mut owner: HashMap<Cell, Domino> = HashMap::new();
    let mut dominoes = Vec::with_capacity(n * (n + 1));
    for (slot, path) in f.paths().iter().enumerate() {
        let depth = slot;
        let steps = path.steps();
        let framed = steps.len() >= 2 * depth
            && steps[..depth].iter().all(|s| *s == Step::Up)
            && steps[steps.len() - depth..].iter().all(|s| *s == Step::Down);
        if !framed {
            return Err(Error::Domain(format!(
                "path {path} lacks its {depth} framing up and down steps"
            )));
        }
        let (mut x, mut h) = (-(depth as i64) - 1, depth as i64);
        for step in &steps[depth..steps.len() - depth] {
            let d = match step {
                Step::Level => Domino::horizontal(x, h - shift),
                Step::Up => Domino::vertical(x, h - shift),
                Step::Down => Domino::vertical(x, h - shift - 1),
            };
            for c in d.cells() {
                if !in_region(n, c) {
                    return Err(Error::Domain(format!("path {path} leaves Az({n}) through domino {d}")));
                }
                if owner.insert(c, d).is_some() {
                    return Err(Error::Domain(format!("path {path} reuses a cell of domino {d}")));
                }
            }
            dominoes.push(d);
            let (dx, dy) = step.displacement();
            x += dx;
            h += dy;
        }
    }
    for c in region_cells(n) {
        if owner.contains_key(&c) {
            continue;
        }
        let d = Domino::horizontal(c.x, c.y);
        let east = Cell::new(c.x + 1, c.y);
        if !in_region(n, east) || owner.contains_key(&east) {
            return Err(Error::Internal(format!(
                "cell ({}, {}) cannot be paired horizontally",
                c.x, c.y
            )));
        }
        owner.insert(c, d);
        owner.insert(east, d);
        dominoes.push(d);
    }
    Tiling::new(n, dominoes).map_err(|e| Error::Internal(e.to_string()))
}

/// `Π_n` as the image of every tiling of `Az(n)`, in canonical order. This
/// reaches sizes where direct family search is too slow.
pub fn pi_families_via_tilings(n: usize, cutoff: usize) -> Result<Vec<PathFamily>> {
    let mut out = Vec::new();
    let mut failure = None;
    for_each_tiling(n, cutoff, |ds| {
        if failure.is_some() {
            return;
        }
        match tiling_to_paths(&Tiling {
            order: n,
            dominoes: ds.to_vec(),
        }) {
            Ok(f) => out.push(f),
            Err(e) => failure = Some(e),
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    crate::lgv::canonical_sort(&mut out);
    Ok(out)
}

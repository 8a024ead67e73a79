//! Finite Mahavier truncations `G_n = {(x_0, …, x_n) : x_{i-1} ∈ f(x_i)}`.
//!
//! A cell fixes one piece `s_i` per step and contains the tuples with
//! `(x_i, x_{i-1}) ∈ s_i`. Each cell is convex, so `G_n` is connected exactly
//! when the graph of cells, joined when their closed solution sets meet, is
//! connected. Cell solution sets come from the chain solver, which also gives
//! exact coordinate projections.

use std::collections::{BTreeSet, HashMap, VecDeque};

use petgraph::unionfind::UnionFind;
use thiserror::Error;

use crate::chain::{solve_chain, ChainSolution};
use crate::interval::{Interval, IntervalSet};
use crate::piece::Piece;
use crate::properties::{fissile_set, FissileRegion, FissileSet};
use crate::rational::{midpoint, Rational};
use crate::relation::{normalize, PLRelation};

pub const DEFAULT_DEPTH_CAP: usize = 8;
pub const DEFAULT_CELL_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncationConfig {
    pub depth_cap: usize,
    pub cell_cap: usize,
}

impl Default for TruncationConfig {
    fn default() -> Self {
        TruncationConfig { depth_cap: DEFAULT_DEPTH_CAP, cell_cap: DEFAULT_CELL_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TruncationError {
    #[error("depth must be at least 1")]
    ZeroDepth,
    #[error("depth {depth} exceeds the configured cap {cap}")]
    DepthCap { depth: usize, cap: usize },
    #[error("more than {cap} cells; raise the cell cap to continue")]
    CellCap { cap: usize },
    #[error("relation is not defined on all of [0,1]")]
    PartialDomain,
    #[error("shift needs depth at least 2")]
    TooShallow,
    #[error("coordinate {k} is beyond depth {depth}")]
    NoSuchCoordinate { k: usize, depth: usize },
    #[error("point {which} lies in no cell of the complex")]
    PointOutside { which: &'static str },
}

impl TruncationError {
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, TruncationError::DepthCap { .. } | TruncationError::CellCap { .. })
    }
}

/// One convex cell: the chain `(x_i, x_{i-1}) ∈ s_i`, `x_0 ∈ lead`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    /// Indices of `s_1, …, s_n` into the relation's pieces.
    pub pieces: Vec<usize>,
    /// Bound on `x_0`; the full interval unless the cell came from a shift.
    pub lead: Interval,
    /// `constraints[i]` constrains `(x_i, x_{i+1})`.
    pub constraints: Vec<Piece>,
    pub solution: ChainSolution,
}

impl Cell {
    pub fn depth(&self) -> usize {
        self.constraints.len()
    }

    /// Exact range of each coordinate.
    pub fn feasible_box(&self) -> Vec<Interval> {
        (0..=self.depth()).map(|i| self.solution.projection(i)).collect()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.solution.contains(x)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationComplex {
    pub depth: usize,
    pub cells: Vec<Cell>,
    /// Pairs `(i, j)` with `i < j` whose cells meet.
    pub adjacency: Vec<(usize, usize)>,
}

fn bounds_for(lead: &Interval, depth: usize) -> Vec<Option<Interval>> {
    let mut b = vec![None; depth + 1];
    b[0] = Some(lead.clone());
    b
}

fn make_cell(pieces: Vec<usize>, lead: Interval, all: &[Piece]) -> Option<Cell> {
    let constraints: Vec<Piece> = pieces.iter().map(|&i| all[i].transpose()).collect();
    let solution = solve_chain(&constraints, &bounds_for(&lead, constraints.len()))?;
    Some(Cell { pieces, lead, constraints, solution })
}

struct Builder {
    pieces: Vec<Piece>,
    depth: usize,
    cap: usize,
    seq: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl Builder {
    fn dfs(&mut self, reach: &Interval) -> Result<(), TruncationError> {
        if self.seq.len() == self.depth {
            if self.out.len() >= self.cap {
                return Err(TruncationError::CellCap { cap: self.cap });
            }
            self.out.push(self.seq.clone());
            return Ok(());
        }
        for idx in 0..self.pieces.len() {
            // Step constraint on (x_{i-1}, x_i) is the transposed piece.
            let t = self.pieces[idx].transpose();
            let Some(dom) = reach.intersect(&t.x_extent()) else { continue };
            let Some(next) = t.image(&dom) else { continue };
            self.seq.push(idx);
            let res = self.dfs(&next);
            self.seq.pop();
            res?;
        }
        Ok(())
    }
}

/// Pairs of cells whose solution sets meet, by a joint search over piece
/// sequences with intersected constraints.
fn adjacency(cells: &[Cell], pieces: &[Piece]) -> Vec<(usize, usize)> {
    let depth = cells.first().map_or(0, Cell::depth);
    let n = pieces.len();
    let mut meet: Vec<Vec<Option<Piece>>> = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            meet[i][j] = pieces[i].transpose().intersect(&pieces[j].transpose());
        }
    }
    // Group cells by their lead bound so only compatible heads are paired.
    let index: HashMap<(&[usize], &Interval), usize> =
        cells.iter().enumerate().map(|(i, c)| ((c.pieces.as_slice(), &c.lead), i)).collect();
    let leads: BTreeSet<&Interval> = cells.iter().map(|c| &c.lead).collect();
    let mut out = BTreeSet::new();

    struct Joint<'a> {
        meet: &'a [Vec<Option<Piece>>],
        depth: usize,
        a: Vec<usize>,
        b: Vec<usize>,
        found: Vec<(Vec<usize>, Vec<usize>)>,
    }
    impl Joint<'_> {
        fn dfs(&mut self, reach: &Interval, diverged: bool) {
            if self.a.len() == self.depth {
                if diverged {
                    self.found.push((self.a.clone(), self.b.clone()));
                }
                return;
            }
            let n = self.meet.len();
            for i in 0..n {
                let start = if diverged { 0 } else { i };
                for j in start..n {
                    let Some(c) = &self.meet[i][j] else { continue };
                    let Some(dom) = reach.intersect(&c.x_extent()) else { continue };
                    let Some(next) = c.image(&dom) else { continue };
                    self.a.push(i);
                    self.b.push(j);
                    self.dfs(&next, diverged || i != j);
                    self.a.pop();
                    self.b.pop();
                }
            }
        }
    }

    let lead_list: Vec<&Interval> = leads.into_iter().collect();
    for (li, la) in lead_list.iter().enumerate() {
        for lb in &lead_list[li..] {
            let Some(reach) = la.intersect(lb) else { continue };
            let mut joint = Joint { meet: &meet, depth, a: Vec::new(), b: Vec::new(), found: Vec::new() };
            joint.dfs(&reach, false);
            for (a, b) in joint.found {
                for (ka, kb) in [(la, lb), (lb, la)] {
                    if let (Some(&i), Some(&j)) =
                        (index.get(&(a.as_slice(), *ka)), index.get(&(b.as_slice(), *kb)))
                    {
                        if i != j {
                            out.insert((i.min(j), i.max(j)));
                        }
                    }
                }
            }
            if la != lb {
                // Same piece sequence under two different leads.
                for c in cells.iter().filter(|c| &c.lead == *la) {
                    if let Some(&j) = index.get(&(c.pieces.as_slice(), *lb)) {
                        let i = index[&(c.pieces.as_slice(), *la)];
                        let joint = solve_chain(&c.constraints, &bounds_for(&reach, depth));
                        if joint.is_some() {
                            out.insert((i.min(j), i.max(j)));
                        }
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

pub fn build_truncation(r: &PLRelation, depth: usize) -> Result<TruncationComplex, TruncationError> {
    build_truncation_with(r, depth, &TruncationConfig::default())
}

pub fn build_truncation_with(
    r: &PLRelation,
    depth: usize,
    config: &TruncationConfig,
) -> Result<TruncationComplex, TruncationError> {
    if depth == 0 {
        return Err(TruncationError::ZeroDepth);
    }
    if depth > config.depth_cap {
        return Err(TruncationError::DepthCap { depth, cap: config.depth_cap });
    }
    if !r.domain_is_full() {
        return Err(TruncationError::PartialDomain);
    }
    let mut b = Builder {
        pieces: r.pieces().to_vec(),
        depth,
        cap: config.cell_cap,
        seq: Vec::new(),
        out: Vec::new(),
    };
    b.dfs(&Interval::unit())?;
    let cells: Vec<Cell> = b
        .out
        .into_iter()
        .map(|seq| make_cell(seq, Interval::unit(), r.pieces()).expect("forward reachability is exact on chains"))
        .collect();
    let adjacency = adjacency(&cells, r.pieces());
    Ok(TruncationComplex { depth, cells, adjacency })
}

impl TruncationComplex {
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::<usize>::new(self.cells.len());
        for &(i, j) in &self.adjacency {
            uf.union(i, j);
        }
        uf.into_labeling().into_iter().collect::<BTreeSet<_>>().len()
    }

    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.cells.len()];
        for &(i, j) in &self.adjacency {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.cells.iter().any(|c| c.contains(x))
    }

    /// Union of the cells projected to coordinates `(i, j)`.
    pub fn project_pair(&self, i: usize, j: usize) -> PLRelation {
        normalize(self.cells.iter().map(|c| c.solution.pair_projection(i, j)))
            .expect("projections stay in the unit square")
    }
}

pub fn truncation_connected(c: &TruncationComplex) -> bool {
    !c.cells.is_empty() && c.component_count() == 1
}

/// Drops `x_0`, giving a depth `n - 1` complex with the same point set as
/// the projection.
pub fn shift(c: &TruncationComplex, r: &PLRelation) -> Result<TruncationComplex, TruncationError> {
    if c.depth < 2 {
        return Err(TruncationError::TooShallow);
    }
    let mut seen = BTreeSet::new();
    let mut cells = Vec::new();
    for cell in &c.cells {
        // (x_1, x_0) ∈ s_1 with x_0 ∈ lead holds for some x_0 exactly when
        // x_1 lies in this interval.
        let lead = cell.solution.projection(1);
        let key = (cell.pieces[1..].to_vec(), lead.clone());
        if seen.insert(key) {
            cells.extend(make_cell(cell.pieces[1..].to_vec(), lead, r.pieces()));
        }
    }
    let adjacency = adjacency(&cells, r.pieces());
    Ok(TruncationComplex { depth: c.depth - 1, cells, adjacency })
}

/// Realized values of `x_k`.
pub fn project(c: &TruncationComplex, k: usize) -> Result<IntervalSet, TruncationError> {
    if k > c.depth {
        return Err(TruncationError::NoSuchCoordinate { k, depth: c.depth });
    }
    Ok(IntervalSet::from_intervals(c.cells.iter().map(|cell| cell.solution.projection(k))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FissileDiagnostic {
    /// Cells in which every tuple has a fissile coordinate `x_i`, `i ≥ 1`.
    pub fissile_cells: Vec<usize>,
    pub fraction: Rational,
}

/// `true` when `[lo, hi]` is covered by the given points and open intervals.
fn covered(param: &Interval, points: &[Rational], opens: &[Interval]) -> bool {
    let mut cands: BTreeSet<Rational> = [param.lo.clone(), param.hi.clone()].into_iter().collect();
    cands.extend(points.iter().filter(|p| param.contains(p)).cloned());
    for o in opens {
        cands.extend([&o.lo, &o.hi].into_iter().filter(|p| param.contains(p)).cloned());
    }
    let sorted: Vec<Rational> = cands.into_iter().collect();
    let mids: Vec<Rational> = sorted.windows(2).map(|w| midpoint(&w[0], &w[1])).collect();
    sorted.iter().chain(&mids).all(|t| points.contains(t) || opens.iter().any(|o| o.lo < *t && *t < o.hi))
}

fn cell_is_fissile(cell: &Cell, f: &FissileSet) -> bool {
    // Blocks are independent, so the cell has a nonfissile tuple iff every
    // block does.
    cell.solution.blocks.iter().any(|blk| {
        let mut points = Vec::new();
        let mut opens = Vec::new();
        for (&i, map) in blk.vars.iter().zip(&blk.maps) {
            if i == 0 {
                continue;
            }
            let back = |y: &Rational| (y - &map.b) / &map.a;
            for region in &f.regions {
                match region {
                    FissileRegion::Point(x) => points.push(back(x)),
                    FissileRegion::Open(a, b) => opens.push(Interval::new(back(a), back(b))),
                }
            }
        }
        covered(&blk.param, &points, &opens)
    })
}

/// A diagnostic only: the share of cells lying entirely over fissile points.
pub fn fissile_cell_diagnostic(r: &PLRelation, c: &TruncationComplex) -> FissileDiagnostic {
    let f = fissile_set(r);
    let fissile_cells: Vec<usize> =
        (0..c.cells.len()).filter(|&i| cell_is_fissile(&c.cells[i], &f)).collect();
    let fraction = if c.cells.is_empty() {
        Rational::from_integer(0.into())
    } else {
        Rational::new((fissile_cells.len() as i64).into(), (c.cells.len() as i64).into())
    };
    FissileDiagnostic { fissile_cells, fraction }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Probe {
    /// Cells of a shortest cell path joining the two points.
    pub cells: Vec<usize>,
    pub whole_complex: bool,
}

/// The fewest cells forming a connected union containing both points.
/// Returns `Ok(None)` when they lie in different components. This is a
/// heuristic at cell granularity, not a statement about the inverse limit.
pub fn irreducibility_probe(
    c: &TruncationComplex,
    a: &[Rational],
    b: &[Rational],
) -> Result<Option<Probe>, TruncationError> {
    let starts: Vec<usize> = (0..c.cells.len()).filter(|&i| c.cells[i].contains(a)).collect();
    let ends: BTreeSet<usize> = (0..c.cells.len()).filter(|&i| c.cells[i].contains(b)).collect();
    if starts.is_empty() {
        return Err(TruncationError::PointOutside { which: "a" });
    }
    if ends.is_empty() {
        return Err(TruncationError::PointOutside { which: "b" });
    }
    let adj = c.neighbours();
    let mut prev: Vec<Option<usize>> = vec![None; c.cells.len()];
    let mut seen = vec![false; c.cells.len()];
    let mut queue = VecDeque::new();
    for &s in &starts {
        seen[s] = true;
        queue.push_back(s);
    }
    while let Some(u) = queue.pop_front() {
        if ends.contains(&u) {
            let mut path = vec![u];
            let mut cur = u;
            while let Some(p) = prev[cur] {
                path.push(p);
                cur = p;
            }
            path.reverse();
            let whole_complex = path.len() == c.cells.len();
            return Ok(Some(Probe { cells: path, whole_complex }));
        }
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                prev[v] = Some(u);
                queue.push_back(v);
            }
        }
    }
    Ok(None)
}

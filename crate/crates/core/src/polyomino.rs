//! Polyominoes and their row/column incidence graphs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::bipartite::{inseparability_report, semirigid_report, BipartiteGraph, InseparabilityReport, SemirigidReport};
use crate::error::{input, Error, Result};

/// A connected set of unit cells, each named by its lower-left corner and
/// translated so that the minimum coordinates are 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyomino {
    cells: BTreeSet<(i64, i64)>,
}

impl Polyomino {
    pub fn new(cells: &[(i64, i64)]) -> Result<Self> {
        if cells.is_empty() {
            return input("a polyomino needs at least one cell");
        }
        let mut set = BTreeSet::new();
        for &c in cells {
            if !set.insert(c) {
                return input(format!("cell ({}, {}) is listed twice", c.0, c.1));
            }
        }
        let x0 = set.iter().map(|c| c.0).min().unwrap();
        let y0 = set.iter().map(|c| c.1).min().unwrap();
        let cells: BTreeSet<(i64, i64)> = set.iter().map(|&(x, y)| (x - x0, y - y0)).collect();
        let p = Polyomino { cells };
        if !p.is_connected() {
            return input("cells are not connected through shared edges");
        }
        Ok(p)
    }

    fn is_connected(&self) -> bool {
        let start = *self.cells.iter().next().unwrap();
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some((x, y)) = queue.pop_front() {
            for n in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
                if self.cells.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        seen.len() == self.cells.len()
    }

    pub fn cells(&self) -> impl Iterator<Item = &(i64, i64)> {
        self.cells.iter()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Every horizontal and vertical line meets the cells in a contiguous run.
    pub fn is_convex(&self) -> bool {
        let mut rows: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        let mut cols: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        for &(x, y) in &self.cells {
            rows.entry(y).or_default().push(x);
            cols.entry(x).or_default().push(y);
        }
        let contiguous = |v: &Vec<i64>| v.len() as i64 == v.iter().max().unwrap() - v.iter().min().unwrap() + 1;
        rows.values().all(contiguous) && cols.values().all(contiguous)
    }

    /// Cell corners, sorted.
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let set: BTreeSet<(i64, i64)> = self
            .cells
            .iter()
            .flat_map(|&(x, y)| [(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)])
            .collect();
        set.into_iter().collect()
    }

    /// Rectangles `[a, b]` with `a < b` whose cells all belong to the polyomino.
    pub fn inner_intervals(&self) -> usize {
        let xs = self.cells.iter().map(|c| c.0).max().unwrap() + 1;
        let ys = self.cells.iter().map(|c| c.1).max().unwrap() + 1;
        let mut count = 0;
        for x1 in 0..xs {
            for x2 in x1 + 1..=xs {
                for y1 in 0..ys {
                    for y2 in y1 + 1..=ys {
                        let full = (x1..x2).all(|x| (y1..y2).all(|y| self.cells.contains(&(x, y))));
                        if full {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    }

    /// `G(𝒫)`: one vertex per distinct first coordinate (numbered first),
    /// one per distinct second coordinate, and an edge `{hᵢ, vⱼ}` for every
    /// polyomino vertex `(i, j)`, in lexicographic order.
    pub fn to_bipartite(&self) -> BipartiteGraph {
        let verts = self.vertices();
        let firsts: Vec<i64> = verts.iter().map(|v| v.0).collect::<BTreeSet<_>>().into_iter().collect();
        let seconds: Vec<i64> = verts.iter().map(|v| v.1).collect::<BTreeSet<_>>().into_iter().collect();
        let p = firsts.len();
        let edges = verts
            .iter()
            .map(|&(i, j)| (firsts.binary_search(&i).unwrap(), p + seconds.binary_search(&j).unwrap()))
            .collect();
        BipartiteGraph::new(p + seconds.len(), edges).expect("incidence graph is simple and bipartite")
    }

    /// Vertex labels `h<i>` / `v<j>` for `to_bipartite`, 1-based.
    pub fn vertex_labels(&self) -> Vec<String> {
        let verts = self.vertices();
        let nf = verts.iter().map(|v| v.0).collect::<BTreeSet<_>>().len();
        let ns = verts.iter().map(|v| v.1).collect::<BTreeSet<_>>().len();
        (1..=nf).map(|i| format!("h{i}")).chain((1..=ns).map(|j| format!("v{j}"))).collect()
    }
}

/// Polyomino file layout.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyominoFile {
    pub cells: Vec<[i64; 2]>,
}

impl PolyominoFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("polyomino file: {e}")))
    }

    pub fn build(&self) -> Result<Polyomino> {
        let cells: Vec<(i64, i64)> = self.cells.iter().map(|c| (c[0], c[1])).collect();
        Polyomino::new(&cells)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolyominoCheck {
    Convex,
    Inseparable,
    Semirigid,
}

#[derive(Clone, Debug, Serialize)]
pub struct PolyominoAnalysis {
    pub cell_count: usize,
    pub convex: bool,
    pub warnings: Vec<String>,
    pub inseparability: Option<InseparabilityReport>,
    pub semirigidity: Option<SemirigidReport>,
}

pub const NON_CONVEX_WARNING: &str =
    "polyomino is not convex: the criteria are evaluated, but the inseparability and semi-rigidity guarantees do not apply";

/// Runs the requested graph criterion on `G(𝒫)`.
pub fn analyze(p: &Polyomino, check: PolyominoCheck) -> Result<PolyominoAnalysis> {
    let convex = p.is_convex();
    let mut warnings = Vec::new();
    if !convex && check != PolyominoCheck::Convex {
        log::warn!("{NON_CONVEX_WARNING}");
        warnings.push(NON_CONVEX_WARNING.to_string());
    }
    let g = p.to_bipartite();
    let mut out = PolyominoAnalysis { cell_count: p.cell_count(), convex, warnings, inseparability: None, semirigidity: None };
    match check {
        PolyominoCheck::Convex => {}
        PolyominoCheck::Inseparable => {
            let r = inseparability_report(&g)?;
            if convex && !r.inseparable {
                return Err(Error::Assertion(format!(
                    "convex polyomino separable at edge(s) {:?}",
                    r.separable_edges().iter().map(|j| j + 1).collect::<Vec<_>>()
                )));
            }
            out.inseparability = Some(r);
        }
        PolyominoCheck::Semirigid => {
            let r = semirigid_report(&g)?;
            if convex && r.semirigid != (p.cell_count() > 1) {
                return Err(Error::Assertion(format!(
                    "convex polyomino with {} cell(s) reported {}semi-rigid",
                    p.cell_count(),
                    if r.semirigid { "" } else { "not " }
                )));
            }
            out.semirigidity = Some(r);
        }
    }
    Ok(out)
}

fn shape(cells: &[(i64, i64)]) -> Polyomino {
    Polyomino::new(cells).expect("bundled shape is a polyomino")
}

/// Bundled convex polyominoes with one to nine cells.
pub fn convex_corpus() -> Vec<(&'static str, Polyomino)> {
    vec![
        ("monomino", shape(&[(0, 0)])),
        ("domino", shape(&[(0, 0), (1, 0)])),
        ("straight tromino", shape(&[(0, 0), (1, 0), (2, 0)])),
        ("L tromino", shape(&[(0, 0), (1, 0), (0, 1)])),
        ("square tetromino", shape(&[(0, 0), (1, 0), (0, 1), (1, 1)])),
        ("T tetromino", shape(&[(0, 0), (1, 0), (2, 0), (1, 1)])),
        ("S tetromino", shape(&[(0, 0), (1, 0), (1, 1), (2, 1)])),
        ("plus pentomino", shape(&[(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)])),
        ("staircase", shape(&[(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)])),
        ("2x3 rectangle", shape(&[(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)])),
        ("six-cell staircase", figure_two()),
        ("seven-cell staircase", convex_staircase()),
        ("3x3 minus a corner", shape(&[(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1), (0, 2), (1, 2)])),
        ("3x3 square", shape(&[(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1), (0, 2), (1, 2), (2, 2)])),
    ]
}

/// Six cells in three rows whose incidence graph is `5 × 4`.
pub fn figure_two() -> Polyomino {
    shape(&[(1, 1), (2, 1), (2, 2), (3, 2), (4, 2), (4, 3)])
}

/// Convex seven-cell staircase.
pub fn convex_staircase() -> Polyomino {
    shape(&[(5, 1), (6, 1), (6, 2), (5, 2), (7, 2), (7, 3), (8, 3)])
}

/// Nine cells with a gap in one column.
pub fn non_convex_example() -> Polyomino {
    shape(&[(5, 1), (6, 1), (7, 1), (6, 3), (6, 2), (7, 3), (6, 4), (7, 4), (8, 4)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipartite::induced_cycles;

    #[test]
    fn construction_errors() {
        assert!(Polyomino::new(&[]).is_err());
        assert!(Polyomino::new(&[(0, 0), (0, 0)]).is_err());
        assert!(Polyomino::new(&[(0, 0), (1, 1)]).is_err());
    }

    #[test]
    fn translation_is_normalized() {
        assert_eq!(Polyomino::new(&[(5, 7), (6, 7)]).unwrap(), Polyomino::new(&[(0, 0), (1, 0)]).unwrap());
    }

    #[test]
    fn convexity() {
        assert!(shape(&[(0, 0)]).is_convex());
        assert!(convex_staircase().is_convex());
        assert!(figure_two().is_convex());
        assert!(!non_convex_example().is_convex());
        assert!(!shape(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)]).is_convex());
    }

    #[test]
    fn single_cell_graph_is_a_square() {
        let g = shape(&[(0, 0)]).to_bipartite();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        assert_eq!(induced_cycles(&g).len(), 1);
    }

    #[test]
    fn figure_two_graph() {
        let p = figure_two();
        let g = p.to_bipartite();
        assert_eq!(p.vertex_labels().len(), 9);
        let (left, right) = g.parts();
        assert_eq!((left.len(), right.len()), (5, 4));
        assert_eq!(g.edge_count(), 14);
    }

    #[test]
    fn squares_match_inner_intervals_on_convex_shapes() {
        for (name, p) in convex_corpus() {
            let g = p.to_bipartite();
            assert_eq!(g.edge_count(), p.vertices().len());
            let cycles = induced_cycles(&g);
            assert!(cycles.iter().all(|c| c.len() == 4), "{name}");
            assert_eq!(cycles.len(), p.inner_intervals(), "{name}");
        }
    }

    #[test]
    fn l_tromino_graph_is_g3() {
        let g = shape(&[(0, 0), (1, 0), (0, 1)]).to_bipartite();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 8));
        assert_eq!(g.cycle_space_dim(), 3);
    }

    #[test]
    fn non_convex_analysis_warns() {
        let a = analyze(&non_convex_example(), PolyominoCheck::Inseparable).unwrap();
        assert!(!a.convex);
        assert_eq!(a.warnings.len(), 1);
        assert_eq!(a.inseparability.unwrap().disagreements(), 0);
    }
}

//! A 36-point, 42-block design from the Sylvester graph, and a 7×36
//! sesqui-array on 42 letters having it as column design.
//!
//! Pick an edge `a0 b0` of the Hoffman–Singleton graph. With `A` the other
//! neighbours of `a0` and `B` the other neighbours of `b0`, each of the 36
//! remaining vertices is adjacent to exactly one `a ∈ A` and one `b ∈ B`, so
//! it is labelled `(a, b)`. The graph induced on these 36 vertices is the
//! Sylvester graph Σ.
//!
//! Index conventions used throughout: `A` and `B` are ordered by ascending
//! vertex id and identified with `0..6`; point `(a, b)` has id `6a + b`;
//! letters are `b` (ids `0..6`) followed by `(a, b)` (ids `6 + 6a + b`);
//! array row 0 is `*` and row `1 + a` belongs to `a`.

use crate::arrays::LetterArray;
use crate::designs::{BlockDesign, ParallelClassPartition};
use crate::graph::Graph;
use crate::{Error, Result};

const SIDE: usize = 6;
const POINTS: usize = SIDE * SIDE;

/// Robertson's pentagon–pentagram construction.
///
/// Pentagon `P_h` has vertices `5h + j` with `j ~ j ± 1`; pentagram `Q_i` has
/// vertices `25 + 5i + j` with `j ~ j ± 2`; vertex `j` of `P_h` is joined to
/// vertex `h·i + j` of `Q_i`.
pub fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut g = Graph::new(50);
    for h in 0..5 {
        for j in 0..5 {
            g.add_edge(p(h, j), p(h, j + 1));
            g.add_edge(q(h, j), q(h, j + 2));
            for i in 0..5 {
                g.add_edge(p(h, j), q(i, h * i + j));
            }
        }
    }
    g
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterLabeling {
    pub a0: usize,
    pub b0: usize,
    /// Neighbours of `a0` other than `b0`, ascending.
    pub a_side: Vec<usize>,
    /// Neighbours of `b0` other than `a0`, ascending.
    pub b_side: Vec<usize>,
    /// Host vertex carrying label `(a, b)`, at index `6a + b`.
    pub vertex_of: Vec<usize>,
}

impl SylvesterLabeling {
    /// Label `(a, b)` of a host vertex, if it is one of the 36.
    pub fn point_of(&self, vertex: usize) -> Option<(usize, usize)> {
        self.vertex_of
            .iter()
            .position(|&v| v == vertex)
            .map(|i| (i / SIDE, i % SIDE))
    }
}

pub fn point_id(a: usize, b: usize) -> usize {
    SIDE * a + b
}

pub fn coords(point: usize) -> (usize, usize) {
    (point / SIDE, point % SIDE)
}

/// The Sylvester graph on point ids `6a + b`, with its labelling.
pub fn sylvester(hs: &Graph, a0: usize, b0: usize) -> Result<(Graph, SylvesterLabeling)> {
    if !hs.adjacent(a0, b0) {
        return Err(Error::NotAdjacent(a0, b0));
    }
    let a_side: Vec<usize> = hs
        .neighbors(a0)
        .iter()
        .copied()
        .filter(|&x| x != b0)
        .collect();
    let b_side: Vec<usize> = hs
        .neighbors(b0)
        .iter()
        .copied()
        .filter(|&x| x != a0)
        .collect();
    if a_side.len() != SIDE || b_side.len() != SIDE {
        return Err(Error::InvalidDesign(
            "host graph is not 7-regular at the chosen edge".into(),
        ));
    }
    let mut vertex_of = vec![usize::MAX; POINTS];
    for x in 0..hs.vertex_count() {
        if x == a0 || x == b0 || a_side.contains(&x) || b_side.contains(&x) {
            continue;
        }
        let a: Vec<usize> = (0..SIDE).filter(|&i| hs.adjacent(x, a_side[i])).collect();
        let b: Vec<usize> = (0..SIDE).filter(|&i| hs.adjacent(x, b_side[i])).collect();
        match (a.as_slice(), b.as_slice()) {
            ([a], [b]) if vertex_of[point_id(*a, *b)] == usize::MAX => {
                vertex_of[point_id(*a, *b)] = x
            }
            _ => {
                return Err(Error::InvalidDesign(format!(
                    "vertex {x} has no unique (a, b) label"
                )))
            }
        }
    }
    if vertex_of.contains(&usize::MAX) {
        return Err(Error::InvalidDesign("labels do not cover A x B".into()));
    }
    let sigma = hs.induced(&vertex_of);
    Ok((
        sigma,
        SylvesterLabeling {
            a0,
            b0,
            a_side,
            b_side,
            vertex_of,
        },
    ))
}

/// Lexicographically smallest edge.
pub fn default_edge(hs: &Graph) -> (usize, usize) {
    hs.edges().next().expect("graph has an edge")
}

/// Blocks `0..6` are `{(a, b) : a ∈ A}` for each `b`; block `6 + p` is the
/// closed Σ-neighbourhood of point `p`.
pub fn theta_design(sigma: &Graph) -> BlockDesign {
    let mut blocks: Vec<Vec<usize>> = (0..SIDE)
        .map(|b| (0..SIDE).map(|a| point_id(a, b)).collect())
        .collect();
    for p in 0..POINTS {
        blocks.push(
            std::iter::once(p)
                .chain(sigma.neighbors(p).iter().copied())
                .collect(),
        );
    }
    BlockDesign::new(POINTS, blocks).expect("point ids are in range")
}

/// The two resolutions of Θ: the `b`-blocks as one class, then the
/// neighbourhood blocks grouped by fixed `a` (or by fixed `b`).
pub fn theta_parallel_classes(group_by_first: bool) -> ParallelClassPartition {
    let mut classes = vec![(0..SIDE).collect::<Vec<_>>()];
    for x in 0..SIDE {
        classes.push(
            (0..SIDE)
                .map(|y| {
                    if group_by_first {
                        point_id(x, y)
                    } else {
                        point_id(y, x)
                    }
                })
                .map(|p| SIDE + p)
                .collect(),
        );
    }
    ParallelClassPartition { classes }
}

/// Letter `(a, b)` goes in row `a` at every Σ-neighbour of `(a, b)` and in
/// row `*` at column `(a, b)`; letter `b` goes in row `a` at column `(a, b)`.
pub fn delta0(sigma: &Graph) -> LetterArray {
    let letter_pair = |p: usize| SIDE + p;
    let mut grid = vec![usize::MAX; (SIDE + 1) * POINTS];
    let mut put = |row: usize, col: usize, letter: usize| {
        let cell = &mut grid[row * POINTS + col];
        assert_eq!(*cell, usize::MAX, "cell ({row}, {col}) filled twice");
        *cell = letter;
    };
    for p in 0..POINTS {
        let (a, b) = coords(p);
        put(0, p, letter_pair(p));
        put(1 + a, p, b);
        for &q in sigma.neighbors(p) {
            put(1 + a, q, letter_pair(p));
        }
    }
    LetterArray::new(SIDE + 1, POINTS, SIDE + POINTS, grid).expect("every cell is filled once")
}

/// Six permutations of `0..6`, `perms[a][x]` being the image of `x` under σ_a.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaSet {
    perms: [[usize; SIDE]; SIDE],
}

impl SigmaSet {
    pub fn new(perms: [[usize; SIDE]; SIDE]) -> Result<Self> {
        for (a, p) in perms.iter().enumerate() {
            let mut seen = [false; SIDE];
            for &x in p {
                if x >= SIDE || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidSigmaSet(format!(
                        "sigma_{a} is not a permutation"
                    )));
                }
            }
            if p[a] != a {
                return Err(Error::InvalidSigmaSet(format!(
                    "sigma_{a} does not fix {a}"
                )));
            }
        }
        for from in 0..SIDE {
            for to in 0..SIDE {
                let count = perms.iter().filter(|p| p[from] == to).count();
                if count != 1 {
                    return Err(Error::InvalidSigmaSet(format!(
                        "{count} permutations map {from} to {to}"
                    )));
                }
            }
        }
        Ok(Self { perms })
    }

    /// Build from 1-based cycle notation, one list of cycles per permutation.
    pub fn from_cycles(cycles: &[&[&[usize]]; SIDE]) -> Result<Self> {
        let mut perms = [[0; SIDE]; SIDE];
        for (perm, cs) in perms.iter_mut().zip(cycles) {
            *perm = std::array::from_fn(|x| x);
            for cycle in cs.iter() {
                for (i, &x) in cycle.iter().enumerate() {
                    let next = cycle[(i + 1) % cycle.len()];
                    perm[x - 1] = next - 1;
                }
            }
        }
        Self::new(perms)
    }

    pub fn apply(&self, a: usize, x: usize) -> usize {
        self.perms[a][x]
    }
}

/// σ1 = (1)(6,5,4,3,2), σ2 = (2)(5,6,4,1,3), σ3 = (3)(6,2,5,1,4),
/// σ4 = (4)(2,3,6,1,5), σ5 = (5)(3,4,2,1,6), σ6 = (6)(4,5,3,1,2).
pub fn default_sigmas() -> SigmaSet {
    SigmaSet::from_cycles(&[
        &[&[6, 5, 4, 3, 2]],
        &[&[5, 6, 4, 1, 3]],
        &[&[6, 2, 5, 1, 4]],
        &[&[2, 3, 6, 1, 5]],
        &[&[3, 4, 2, 1, 6]],
        &[&[4, 5, 3, 1, 2]],
    ])
    .expect("default permutations are sharply transitive")
}

/// Permute each column `(a, b)` of Δ0, keeping row `*`, so that the entry of
/// row `a'` moves to row `σ_a(a')`.
pub fn repair(delta0: &LetterArray, sigmas: &SigmaSet) -> Result<LetterArray> {
    if delta0.rows() != SIDE + 1 || delta0.cols() != POINTS {
        return Err(Error::DimensionMismatch(format!(
            "expected a 7x36 array, got {}x{}",
            delta0.rows(),
            delta0.cols()
        )));
    }
    let mut grid = delta0.grid().to_vec();
    for p in 0..POINTS {
        let (a, _) = coords(p);
        for row in 0..SIDE {
            grid[(1 + sigmas.apply(a, row)) * POINTS + p] = delta0.get(1 + row, p);
        }
    }
    LetterArray::new(SIDE + 1, POINTS, delta0.alphabet_size(), grid)
}

/// Every intermediate of the construction.
#[derive(Debug, Clone)]
pub struct SylvesterConstruction {
    pub hoffman_singleton: Graph,
    pub labeling: SylvesterLabeling,
    pub sigma_graph: Graph,
    pub theta: BlockDesign,
    pub delta0: LetterArray,
    pub array: LetterArray,
}

/// Run the whole pipeline from a chosen edge (default: the smallest).
pub fn construct(edge: Option<(usize, usize)>, sigmas: &SigmaSet) -> Result<SylvesterConstruction> {
    let hs = hoffman_singleton();
    let (a0, b0) = edge.unwrap_or_else(|| default_edge(&hs));
    let (sigma_graph, labeling) = sylvester(&hs, a0, b0)?;
    let theta = theta_design(&sigma_graph);
    let d0 = delta0(&sigma_graph);
    let array = repair(&d0, sigmas)?;
    Ok(SylvesterConstruction {
        hoffman_singleton: hs,
        labeling,
        sigma_graph,
        theta,
        delta0: d0,
        array,
    })
}

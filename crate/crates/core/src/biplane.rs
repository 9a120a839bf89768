//! Biplanes, Hussain chains, and K×(V−K) arrays built from a block.
//!
//! Fix a block `B` of a biplane. Every other block meets `B` in exactly two
//! points, so for an outside point `q` the blocks through `q` cut out `K`
//! edges on `B`. They form a 2-regular graph `H(q)`, the Hussain chain of `q`.
//! The array has rows indexed by the points of `B`, columns by the outside
//! points, and letters by the 2-subsets of `B`: cell `(p, q)` holds the two
//! neighbours of `p` in `H(q)`.

use crate::arrays::{check_conditions, summarize, ArrayKind, Classification, LetterArray};
use crate::designs::{concurrence_matrix, develop, is_difference_set, AbelianGroup, BlockDesign};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

/// A symmetric 2-(V, K, 2) design with V = 1 + K(K−1)/2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Biplane {
    design: BlockDesign,
    v: usize,
    k: usize,
}

impl Biplane {
    pub fn design(&self) -> &BlockDesign {
        &self.design
    }

    pub fn points(&self) -> usize {
        self.v
    }

    pub fn block_size(&self) -> usize {
        self.k
    }
}

pub fn as_biplane(d: &BlockDesign) -> Result<Biplane> {
    let v = d.points();
    if d.blocks().len() != v {
        return Err(Error::NotBiplane(format!(
            "{} blocks on {v} points is not symmetric",
            d.blocks().len()
        )));
    }
    let k = d
        .constant_block_size()
        .ok_or_else(|| Error::NotBiplane("block sizes vary".into()))?;
    if v != 1 + k * (k.saturating_sub(1)) / 2 {
        return Err(Error::NotBiplane(format!(
            "V = {v} but 1 + K(K-1)/2 = {}",
            1 + k * k.saturating_sub(1) / 2
        )));
    }
    let conc = concurrence_matrix(d);
    if let Some(bad) = conc.off_diagonal_values().into_iter().find(|&x| x != 2) {
        return Err(Error::NotBiplane(format!(
            "a point pair lies in {bad} blocks, not 2"
        )));
    }
    Ok(Biplane {
        design: d.clone(),
        v,
        k,
    })
}

/// The 2-regular graph cut out on a block by the blocks through an outside point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HussainChain {
    pub block_points: Vec<usize>,
    /// Edges `(x, y)` with `x < y`, in the original point ids.
    pub edges: BTreeSet<(usize, usize)>,
    /// Cycle lengths, ascending.
    pub cycle_type: Vec<usize>,
}

fn edge(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl HussainChain {
    pub fn new(
        mut block_points: Vec<usize>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        block_points.sort_unstable();
        let edges: BTreeSet<(usize, usize)> = edges.into_iter().map(|(a, b)| edge(a, b)).collect();
        let k = block_points.len();
        if edges.len() != k {
            return Err(Error::ChainAxiomViolation(format!(
                "chain has {} edges on {k} points",
                edges.len()
            )));
        }
        for &(a, b) in &edges {
            if a == b
                || block_points.binary_search(&a).is_err()
                || block_points.binary_search(&b).is_err()
            {
                return Err(Error::ChainAxiomViolation(format!(
                    "edge {{{a},{b}}} is not a pair of block points"
                )));
            }
        }
        let mut chain = Self {
            block_points,
            edges,
            cycle_type: Vec::new(),
        };
        if let Some(&p) = chain
            .block_points
            .iter()
            .find(|&&p| chain.neighbors(p).len() != 2)
        {
            return Err(Error::ChainAxiomViolation(format!(
                "point {p} does not have valency 2"
            )));
        }
        chain.cycle_type = chain.cycles().iter().map(Vec::len).collect();
        chain.cycle_type.sort_unstable();
        Ok(chain)
    }

    pub fn neighbors(&self, p: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == p {
                    Some(b)
                } else if b == p {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&edge(a, b))
    }

    /// Cycle decomposition: each cycle starts at its smallest point and
    /// walks first toward the smaller of its two neighbours.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.block_points {
            if seen.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut prev = start;
            let mut cur = *self.neighbors(start).iter().min().expect("valency 2");
            while cur != start {
                cycle.push(cur);
                seen.insert(cur);
                let next = self
                    .neighbors(cur)
                    .into_iter()
                    .find(|&x| x != prev)
                    .expect("valency 2");
                prev = cur;
                cur = next;
            }
            out.push(cycle);
        }
        out
    }

    pub fn has_four_cycle(&self) -> bool {
        self.cycle_type.contains(&4)
    }

    pub fn all_triangles(&self) -> bool {
        self.cycle_type.iter().all(|&l| l == 3)
    }
}

fn check_block(bp: &Biplane, block: usize) -> Result<()> {
    if block < bp.design.blocks().len() {
        Ok(())
    } else {
        Err(Error::InvalidDesign(format!(
            "block index {block} out of range"
        )))
    }
}

/// Hussain chains of every point outside the block, keyed by the point.
pub fn hussain_chains(bp: &Biplane, block: usize) -> Result<BTreeMap<usize, HussainChain>> {
    check_block(bp, block)?;
    let d = &bp.design;
    let b = d.block(block);
    let mut out = BTreeMap::new();
    for q in (0..bp.v).filter(|q| b.binary_search(q).is_err()) {
        let edges = d.blocks_through(q).into_iter().map(|other| {
            let meet: Vec<usize> = d
                .block(other)
                .iter()
                .copied()
                .filter(|p| b.binary_search(p).is_ok())
                .collect();
            debug_assert_eq!(meet.len(), 2);
            (meet[0], meet[1])
        });
        out.insert(q, HussainChain::new(b.to_vec(), edges)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockChainReport {
    pub block: usize,
    /// Cycle type → number of outside points whose chain has that type.
    pub histogram: BTreeMap<Vec<usize>, usize>,
    pub four_cycle_free: bool,
    pub all_triangles: bool,
}

impl BlockChainReport {
    /// Compact histogram, e.g. `3-3:4 6:6`.
    pub fn histogram_string(&self) -> String {
        self.histogram
            .iter()
            .map(|(t, n)| {
                format!(
                    "{}:{n}",
                    t.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join("-")
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn block_chain_report(bp: &Biplane, block: usize) -> Result<BlockChainReport> {
    let chains = hussain_chains(bp, block)?;
    let mut histogram = BTreeMap::new();
    for c in chains.values() {
        *histogram.entry(c.cycle_type.clone()).or_insert(0) += 1;
    }
    Ok(BlockChainReport {
        block,
        histogram,
        four_cycle_free: chains.values().all(|c| !c.has_four_cycle()),
        all_triangles: chains.values().all(HussainChain::all_triangles),
    })
}

pub fn chain_structure_report(bp: &Biplane) -> Result<Vec<BlockChainReport>> {
    (0..bp.design.blocks().len())
        .map(|b| block_chain_report(bp, b))
        .collect()
}

/// Array built from one block, with its bookkeeping.
#[derive(Debug, Clone)]
pub struct BiplaneArray {
    pub array: LetterArray,
    /// (A0) holds; equivalent to no chain containing a 4-cycle.
    pub binary: bool,
    pub block: usize,
    pub row_points: Vec<usize>,
    pub col_points: Vec<usize>,
    /// Letter id → 2-subset of the block, lexicographic.
    pub letters: Vec<(usize, usize)>,
}

pub fn construct_array(bp: &Biplane, block: usize) -> Result<BiplaneArray> {
    if bp.k < 4 {
        return Err(Error::BlockSizeTooSmall(bp.k));
    }
    let chains = hussain_chains(bp, block)?;
    let row_points = bp.design.block(block).to_vec();
    let col_points: Vec<usize> = chains.keys().copied().collect();
    let letters: Vec<(usize, usize)> = row_points
        .iter()
        .enumerate()
        .flat_map(|(i, &x)| row_points[i + 1..].iter().map(move |&y| (x, y)))
        .collect();
    let letter_id = |a: usize, b: usize| {
        letters
            .binary_search(&edge(a, b))
            .expect("pair of block points")
    };
    let mut grid = Vec::with_capacity(row_points.len() * col_points.len());
    for &p in &row_points {
        for q in &col_points {
            let n = chains[q].neighbors(p);
            grid.push(letter_id(n[0], n[1]));
        }
    }
    let array = LetterArray::new(row_points.len(), col_points.len(), letters.len(), grid)?;
    let s = summarize(&array);
    let binary =
        (0..letters.len()).all(|x| s.n_lr.row(x).iter().chain(s.n_lc.row(x)).all(|&n| n <= 1));
    Ok(BiplaneArray {
        array,
        binary,
        block,
        row_points,
        col_points,
        letters,
    })
}

/// Pairs of points with a common neighbour in the chain.
pub fn two_step_graph(chain: &HussainChain) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for &p in &chain.block_points {
        let n = chain.neighbors(p);
        for (i, &x) in n.iter().enumerate() {
            for &y in &n[i + 1..] {
                out.insert(edge(x, y));
            }
        }
    }
    out
}

/// Chains given by position must all live on the same block.
fn common_block(chains: &[HussainChain]) -> Result<&[usize]> {
    let first = chains
        .first()
        .ok_or_else(|| Error::ChainAxiomViolation("no chains given".into()))?;
    if chains.iter().any(|c| c.block_points != first.block_points) {
        return Err(Error::ChainAxiomViolation(
            "chains live on different point sets".into(),
        ));
    }
    Ok(&first.block_points)
}

fn pairs(points: &[usize]) -> Vec<(usize, usize)> {
    points
        .iter()
        .enumerate()
        .flat_map(|(i, &x)| points[i + 1..].iter().map(move |&y| (x, y)))
        .collect()
}

/// (H1): two pairs sharing a point are both edges of exactly one chain.
pub fn check_h1(chains: &[HussainChain]) -> Result<()> {
    let b = common_block(chains)?;
    for &p in b {
        let others: Vec<usize> = b.iter().copied().filter(|&x| x != p).collect();
        for (x, y) in pairs(&others) {
            let n = chains
                .iter()
                .filter(|c| c.has_edge(p, x) && c.has_edge(p, y))
                .count();
            if n != 1 {
                return Err(Error::ChainAxiomViolation(format!(
                    "H1: edges {{{p},{x}}} and {{{p},{y}}} occur together in {n} chains"
                )));
            }
        }
    }
    Ok(())
}

/// (H2): two disjoint pairs are both edges of exactly two chains.
pub fn check_h2(chains: &[HussainChain]) -> Result<()> {
    let all = pairs(common_block(chains)?);
    for (i, &(a, b)) in all.iter().enumerate() {
        for &(c, d) in &all[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let n = chains
                .iter()
                .filter(|ch| ch.has_edge(a, b) && ch.has_edge(c, d))
                .count();
            if n != 2 {
                return Err(Error::ChainAxiomViolation(format!(
                    "H2: edges {{{a},{b}}} and {{{c},{d}}} occur together in {n} chains"
                )));
            }
        }
    }
    Ok(())
}

/// (H3): any two chains share exactly two edges, and these are disjoint.
pub fn check_h3(chains: &[HussainChain]) -> Result<()> {
    common_block(chains)?;
    for (i, c1) in chains.iter().enumerate() {
        for (j, c2) in chains.iter().enumerate().skip(i + 1) {
            let shared: Vec<_> = c1.edges.intersection(&c2.edges).copied().collect();
            let ok = match shared.as_slice() {
                [(a, b), (c, d)] => a != c && a != d && b != c && b != d,
                _ => false,
            };
            if !ok {
                return Err(Error::ChainAxiomViolation(format!(
                    "H3: chains {i} and {j} share edges {shared:?}"
                )));
            }
        }
    }
    Ok(())
}

/// Rebuild the biplane from the chains of one block.
///
/// Points `0..K` are the block points (ascending), then one point per chain.
/// Block 0 is the block itself; then one block per 2-subset `{x, y}`
/// (lexicographic) holding `x`, `y` and every chain having `{x, y}` as an edge.
pub fn reconstruct_biplane(block_points: &[usize], chains: &[HussainChain]) -> Result<BlockDesign> {
    let mut sorted = block_points.to_vec();
    sorted.sort_unstable();
    if common_block(chains)? != sorted.as_slice() {
        return Err(Error::ChainAxiomViolation(
            "chains do not live on the given block".into(),
        ));
    }
    check_h1(chains)?;
    check_h2(chains)?;
    let k = sorted.len();
    let position = |p: usize| sorted.binary_search(&p).expect("block point");
    let mut blocks = vec![(0..k).collect::<Vec<_>>()];
    for (x, y) in pairs(&sorted) {
        let mut b = vec![position(x), position(y)];
        b.extend(
            chains
                .iter()
                .enumerate()
                .filter(|(_, c)| c.has_edge(x, y))
                .map(|(i, _)| k + i),
        );
        blocks.push(b);
    }
    BlockDesign::new(k + chains.len(), blocks)
}

#[derive(Debug, Clone, Serialize)]
pub struct K6BlockReport {
    pub block: usize,
    /// Every two-step graph is a pair of disjoint triangles.
    pub two_step_double_triangles: bool,
    /// Number of distinct two-step graphs among the outside points.
    pub distinct_two_step: usize,
    pub classification: Classification,
    /// Design on the 15 letters plus a point ∞: each column's letter set,
    /// and each row's missing letters together with ∞.
    pub derived: BlockDesign,
}

/// Symmetric design read off a triple array with v = r + c − 1: blocks are
/// the column letter sets and, for each row, the letters absent from it plus
/// a new point `v`.
pub fn derived_symmetric_design(array: &LetterArray) -> BlockDesign {
    let v = array.alphabet_size();
    let mut blocks: Vec<Vec<usize>> = (0..array.cols()).map(|j| array.column_letters(j)).collect();
    for i in 0..array.rows() {
        let present = array.row_letters(i);
        let mut b: Vec<usize> = (0..v)
            .filter(|x| present.binary_search(x).is_err())
            .collect();
        b.push(v);
        blocks.push(b);
    }
    BlockDesign::new(v + 1, blocks).expect("letters are in range")
}

pub fn k6_proposition_check(bp: &Biplane) -> Result<Vec<K6BlockReport>> {
    if bp.k != 6 {
        return Err(Error::WrongBlockSize {
            expected: 6,
            found: bp.k,
        });
    }
    (0..bp.design.blocks().len())
        .map(|block| {
            let chains = hussain_chains(bp, block)?;
            let mut stars = BTreeSet::new();
            let mut double_triangles = true;
            for chain in chains.values() {
                let star = two_step_graph(chain);
                let star_chain =
                    HussainChain::new(chain.block_points.clone(), star.iter().copied())?;
                double_triangles &= star_chain.cycle_type == [3, 3];
                stars.insert(star);
            }
            let built = construct_array(bp, block)?;
            Ok(K6BlockReport {
                block,
                two_step_double_triangles: double_triangles,
                distinct_two_step: stars.len(),
                classification: check_conditions(&built.array)?,
                derived: derived_symmetric_design(&built.array),
            })
        })
        .collect()
}

/// The biplanes shipped as difference sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShippedBiplane {
    /// (7,4,2): {0,1,2,4} in Z7
    Seven,
    /// (11,5,2): {1,3,4,5,9} in Z11
    Eleven,
    /// (16,6,2): {(1,0),(2,0),(3,0),(0,1),(0,2),(0,3)} in Z4×Z4
    Sixteen,
    /// (37,9,2): the quartic residues in Z37
    ThirtySeven,
}

impl ShippedBiplane {
    pub const ALL: [ShippedBiplane; 4] =
        [Self::Seven, Self::Eleven, Self::Sixteen, Self::ThirtySeven];

    /// Group and base block.
    pub fn difference_set(self) -> (AbelianGroup, Vec<usize>) {
        let cyclic = |n| AbelianGroup::cyclic(n).expect("order >= 2");
        match self {
            Self::Seven => (cyclic(7), vec![0, 1, 2, 4]),
            Self::Eleven => (cyclic(11), vec![1, 3, 4, 5, 9]),
            Self::Sixteen => {
                let g = AbelianGroup::new(vec![4, 4]).expect("order 16");
                let set = [[1, 0], [2, 0], [3, 0], [0, 1], [0, 2], [0, 3]]
                    .iter()
                    .map(|d| g.encode(d))
                    .collect();
                (g, set)
            }
            Self::ThirtySeven => (cyclic(37), vec![1, 7, 9, 10, 12, 16, 26, 33, 34]),
        }
    }

    /// Develop the difference set, after confirming λ = 2.
    pub fn load(self) -> Result<Biplane> {
        let (g, set) = self.difference_set();
        if !is_difference_set(&set, &g, 2) {
            return Err(Error::NotBiplane(format!(
                "{self} base block is not a difference set with lambda 2"
            )));
        }
        as_biplane(&develop(&[set], &g)?)
    }
}

impl fmt::Display for ShippedBiplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Seven => "(7,4,2)",
            Self::Eleven => "(11,5,2)",
            Self::Sixteen => "(16,6,2)",
            Self::ThirtySeven => "(37,9,2)",
        })
    }
}

impl FromStr for ShippedBiplane {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s
            .trim()
            .trim_start_matches('(')
            .split(',')
            .next()
            .unwrap_or("")
        {
            "7" => Ok(Self::Seven),
            "11" => Ok(Self::Eleven),
            "16" => Ok(Self::Sixteen),
            "37" => Ok(Self::ThirtySeven),
            _ => Err(format!(
                "unknown biplane `{s}`; expected (7,4,2), (11,5,2), (16,6,2) or (37,9,2)"
            )),
        }
    }
}

/// Convenience for callers that only need the kind.
pub fn classify_block(bp: &Biplane, block: usize) -> Result<(BiplaneArray, Option<ArrayKind>)> {
    let built = construct_array(bp, block)?;
    let kind = check_conditions(&built.array).ok().map(|c| c.kind);
    Ok((built, kind))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::{are_isomorphic, Isomorphism};

    fn chain(points: &[usize], edges: &[(usize, usize)]) -> HussainChain {
        HussainChain::new(points.to_vec(), edges.iter().copied()).unwrap()
    }

    #[test]
    fn shipped_biplanes_load() {
        for (s, v, k) in [
            (ShippedBiplane::Seven, 7, 4),
            (ShippedBiplane::Eleven, 11, 5),
            (ShippedBiplane::Sixteen, 16, 6),
            (ShippedBiplane::ThirtySeven, 37, 9),
        ] {
            let bp = s.load().unwrap();
            assert_eq!((bp.points(), bp.block_size()), (v, k), "{s}");
            assert_eq!(s.to_string().parse::<ShippedBiplane>().unwrap(), s);
        }
    }

    #[test]
    fn fano_plane_is_not_a_biplane() {
        let fano = develop(&[vec![0, 1, 3]], &AbelianGroup::cyclic(7).unwrap()).unwrap();
        assert!(matches!(as_biplane(&fano), Err(Error::NotBiplane(_))));
    }

    #[test]
    fn cycle_decomposition_is_canonical() {
        let c = chain(
            &[1, 2, 3, 4, 5, 6],
            &[(1, 4), (4, 2), (2, 1), (3, 6), (6, 5), (5, 3)],
        );
        assert_eq!(c.cycles(), vec![vec![1, 2, 4], vec![3, 5, 6]]);
        assert_eq!(c.cycle_type, vec![3, 3]);
        let hex = chain(
            &[1, 2, 3, 4, 5, 6],
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)],
        );
        assert_eq!(hex.cycles(), vec![vec![1, 2, 3, 4, 5, 6]]);
        assert!(HussainChain::new(vec![1, 2, 3], [(1, 2), (2, 3)]).is_err());
    }

    #[test]
    fn two_step_graphs() {
        let tri = chain(
            &[1, 2, 3, 4, 5, 6],
            &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)],
        );
        assert_eq!(two_step_graph(&tri), tri.edges);
        let hex = chain(
            &[1, 2, 3, 4, 5, 6],
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)],
        );
        let expected: BTreeSet<_> = [(1, 3), (3, 5), (1, 5), (2, 4), (4, 6), (2, 6)].into();
        assert_eq!(two_step_graph(&hex), expected);
        let pent = chain(&[0, 1, 2, 3, 4], &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        let diag: BTreeSet<_> = [(0, 2), (2, 4), (1, 4), (1, 3), (0, 3)].into();
        assert_eq!(two_step_graph(&pent), diag);
    }

    #[test]
    fn seven_point_chains_are_four_cycles() {
        let bp = ShippedBiplane::Seven.load().unwrap();
        for r in chain_structure_report(&bp).unwrap() {
            assert_eq!(r.histogram, BTreeMap::from([(vec![4], 3)]));
            assert!(!r.four_cycle_free);
        }
        let built = construct_array(&bp, 0).unwrap();
        assert!(!built.binary);
        let cls = check_conditions(&built.array).unwrap();
        assert!(cls.conditions.a1 && cls.conditions.a2 && cls.conditions.a4);
        assert_eq!(
            (cls.k, cls.lambda_rr, cls.lambda_rc),
            (Some(2), Some(1), Some(2))
        );
    }

    #[test]
    fn eleven_point_arrays_are_triple() {
        let bp = ShippedBiplane::Eleven.load().unwrap();
        for r in chain_structure_report(&bp).unwrap() {
            assert_eq!(r.histogram, BTreeMap::from([(vec![5], 6)]));
            assert!(r.four_cycle_free);
            let cls = check_conditions(&construct_array(&bp, r.block).unwrap().array).unwrap();
            assert_eq!(cls.notation(), "TA(10,3,3,2,3:5x6)");
        }
    }

    #[test]
    fn sixteen_point_chains() {
        let bp = ShippedBiplane::Sixteen.load().unwrap();
        for r in chain_structure_report(&bp).unwrap() {
            assert!(r
                .histogram
                .keys()
                .all(|t| t == &vec![3, 3] || t == &vec![6]));
            assert!(r.four_cycle_free);
        }
    }

    #[test]
    fn row_letters_avoid_the_row_point() {
        let bp = ShippedBiplane::Sixteen.load().unwrap();
        let built = construct_array(&bp, 3).unwrap();
        for (i, &p) in built.row_points.iter().enumerate() {
            let letters: BTreeSet<_> = built
                .array
                .row_letters(i)
                .into_iter()
                .map(|x| built.letters[x])
                .collect();
            let expected: BTreeSet<_> = pairs(&built.row_points)
                .into_iter()
                .filter(|&(a, b)| a != p && b != p)
                .collect();
            assert_eq!(letters, expected);
        }
    }

    #[test]
    fn axioms_hold_and_reconstruction_round_trips() {
        for s in [ShippedBiplane::Seven, ShippedBiplane::Eleven] {
            let bp = s.load().unwrap();
            let chains: Vec<HussainChain> = hussain_chains(&bp, 0).unwrap().into_values().collect();
            check_h1(&chains).unwrap();
            check_h2(&chains).unwrap();
            check_h3(&chains).unwrap();
            let rebuilt = reconstruct_biplane(bp.design().block(0), &chains).unwrap();
            assert_eq!(
                are_isomorphic(&rebuilt, bp.design(), 1_000_000).unwrap(),
                Isomorphism::Yes
            );
        }
    }

    #[test]
    fn reconstruction_rejects_h1_violations() {
        let bp = ShippedBiplane::Seven.load().unwrap();
        let mut chains: Vec<HussainChain> = hussain_chains(&bp, 0).unwrap().into_values().collect();
        chains[1] = chains[0].clone();
        let err = reconstruct_biplane(bp.design().block(0), &chains).unwrap_err();
        assert!(
            matches!(err, Error::ChainAxiomViolation(ref m) if m.starts_with("H1")),
            "{err}"
        );
    }

    #[test]
    fn small_block_size_is_rejected() {
        let fano_dual = BlockDesign::new(
            4,
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        )
        .unwrap();
        let bp = as_biplane(&fano_dual).unwrap();
        assert_eq!(
            construct_array(&bp, 0).unwrap_err(),
            Error::BlockSizeTooSmall(3)
        );
        assert!(matches!(
            k6_proposition_check(&bp),
            Err(Error::WrongBlockSize {
                expected: 6,
                found: 3
            })
        ));
    }
}

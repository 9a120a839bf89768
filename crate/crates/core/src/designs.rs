//! Block designs: incidence, concurrences, development of base blocks over
//! finite abelian groups, resolvability and isomorphism testing.

use crate::matrix::IntegerMatrix;
use crate::{Error, Result};
use serde::Serialize;
use std::collections::BTreeSet;

/// `v` points and a list of blocks, each a sorted set of point ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BlockDesign {
    points: usize,
    blocks: Vec<Vec<usize>>,
}

impl BlockDesign {
    pub fn new(points: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut sorted = Vec::with_capacity(blocks.len());
        for (i, mut block) in blocks.into_iter().enumerate() {
            block.sort_unstable();
            if block.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidDesign(format!("block {i} repeats a point")));
            }
            if let Some(&p) = block.iter().find(|&&p| p >= points) {
                return Err(Error::InvalidDesign(format!(
                    "block {i} has point {p} >= {points}"
                )));
            }
            sorted.push(block);
        }
        Ok(Self {
            points,
            blocks: sorted,
        })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn contains(&self, block: usize, point: usize) -> bool {
        self.blocks[block].binary_search(&point).is_ok()
    }

    /// Point × block incidence matrix.
    pub fn incidence(&self) -> IntegerMatrix {
        let mut n = IntegerMatrix::zeros(self.points, self.blocks.len());
        for (j, block) in self.blocks.iter().enumerate() {
            for &p in block {
                n.set(p, j, 1);
            }
        }
        n
    }

    pub fn replication(&self) -> Vec<usize> {
        let mut r = vec![0; self.points];
        for &p in self.blocks.iter().flatten() {
            r[p] += 1;
        }
        r
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Common replication, if every point lies in the same number of blocks.
    pub fn constant_replication(&self) -> Option<usize> {
        constant(&self.replication())
    }

    pub fn constant_block_size(&self) -> Option<usize> {
        constant(&self.block_sizes())
    }

    /// Indices of the blocks through a point.
    pub fn blocks_through(&self, point: usize) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.contains(b, point))
            .collect()
    }

    /// Block multiset in canonical order, for equality up to block relabelling.
    pub fn sorted_blocks(&self) -> Vec<Vec<usize>> {
        let mut b = self.blocks.clone();
        b.sort();
        b
    }
}

fn constant(xs: &[usize]) -> Option<usize> {
    match xs {
        [first, rest @ ..] if rest.iter().all(|x| x == first) => Some(*first),
        _ => None,
    }
}

/// Entry (p, q) counts blocks containing both p and q; the diagonal holds
/// the replication numbers.
pub fn concurrence_matrix(d: &BlockDesign) -> IntegerMatrix {
    let mut m = IntegerMatrix::zeros(d.points, d.points);
    for block in &d.blocks {
        for &p in block {
            for &q in block {
                m.set(p, q, m.get(p, q) + 1);
            }
        }
    }
    m
}

/// Points and blocks exchanged: point j of the dual is block j of `d`.
pub fn dual(d: &BlockDesign) -> BlockDesign {
    let blocks = (0..d.points).map(|p| d.blocks_through(p)).collect();
    BlockDesign {
        points: d.blocks.len(),
        blocks,
    }
}

/// Direct product of cyclic groups `Z_m1 × … × Z_mt`.
///
/// Elements are encoded as mixed-radix integers with the first modulus most
/// significant, so `(x, y)` in `Z4 × Z4` is `4x + y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    moduli: Vec<usize>,
}

impl AbelianGroup {
    pub fn new(moduli: Vec<usize>) -> Result<Self> {
        if moduli.contains(&0) || moduli.iter().product::<usize>() < 2 {
            return Err(Error::InvalidDesign(
                "group order must be at least 2 with positive moduli".into(),
            ));
        }
        Ok(Self { moduli })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().product()
    }

    pub fn encode(&self, digits: &[usize]) -> usize {
        assert_eq!(digits.len(), self.moduli.len());
        digits
            .iter()
            .zip(&self.moduli)
            .fold(0, |acc, (&d, &m)| acc * m + d % m)
    }

    pub fn decode(&self, mut x: usize) -> Vec<usize> {
        let mut digits = vec![0; self.moduli.len()];
        for (d, &m) in digits.iter_mut().zip(&self.moduli).rev() {
            *d = x % m;
            x /= m;
        }
        digits
    }

    fn combine(&self, a: usize, b: usize, f: impl Fn(usize, usize, usize) -> usize) -> usize {
        let (da, db) = (self.decode(a), self.decode(b));
        let digits: Vec<usize> = da
            .iter()
            .zip(&db)
            .zip(&self.moduli)
            .map(|((&x, &y), &m)| f(x, y, m))
            .collect();
        self.encode(&digits)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.combine(a, b, |x, y, m| (x + y) % m)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.combine(a, b, |x, y, m| (x + m - y) % m)
    }

    fn check(&self, x: usize) -> Result<()> {
        if x < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidGroupElement {
                element: x,
                order: self.order(),
            })
        }
    }
}

/// All distinct translates of the base blocks. A base block with a
/// nontrivial stabilizer contributes only its short orbit.
pub fn develop(base_blocks: &[Vec<usize>], g: &AbelianGroup) -> Result<BlockDesign> {
    let mut blocks = Vec::new();
    for base in base_blocks {
        for &x in base {
            g.check(x)?;
        }
        let mut orbit = BTreeSet::new();
        for t in 0..g.order() {
            let mut b: Vec<usize> = base.iter().map(|&x| g.add(x, t)).collect();
            b.sort_unstable();
            if orbit.insert(b.clone()) {
                blocks.push(b);
            }
        }
    }
    BlockDesign::new(g.order(), blocks)
}

/// True iff every non-identity element arises exactly `lambda` times as a
/// difference of two distinct elements of `set`.
pub fn is_difference_set(set: &[usize], g: &AbelianGroup, lambda: usize) -> bool {
    let n = g.order();
    if set.iter().any(|&x| x >= n) {
        return false;
    }
    let mut counts = vec![0usize; n];
    for (i, &x) in set.iter().enumerate() {
        for (j, &y) in set.iter().enumerate() {
            if i != j {
                counts[g.sub(x, y)] += 1;
            }
        }
    }
    counts[0] == 0 && counts[1..].iter().all(|&c| c == lambda)
}

/// Groups of block indices, each intended to partition the point set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParallelClassPartition {
    pub classes: Vec<Vec<usize>>,
}

/// True iff the classes partition the blocks and each class partitions the points.
pub fn verify_parallel_partition(d: &BlockDesign, p: &ParallelClassPartition) -> bool {
    let mut used = vec![false; d.blocks.len()];
    for class in &p.classes {
        let mut covered = vec![false; d.points];
        for &b in class {
            if b >= used.len() || std::mem::replace(&mut used[b], true) {
                return false;
            }
            for &pt in &d.blocks[b] {
                if std::mem::replace(&mut covered[pt], true) {
                    return false;
                }
            }
        }
        if covered.iter().any(|&c| !c) {
            return false;
        }
    }
    used.iter().all(|&u| u)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Isomorphism {
    Yes,
    No,
    BudgetExceeded,
}

pub const ISOMORPHISM_POINT_LIMIT: usize = 50;

/// Decide isomorphism by backtracking over point bijections.
///
/// Points are branched in order of their invariant (replication, sorted
/// concurrence profile). After each assignment the multiset of block traces
/// on the assigned points must agree between the two designs.
pub fn are_isomorphic(
    d1: &BlockDesign,
    d2: &BlockDesign,
    node_budget: usize,
) -> Result<Isomorphism> {
    for d in [d1, d2] {
        if d.points > ISOMORPHISM_POINT_LIMIT {
            return Err(Error::TooLarge {
                points: d.points,
                limit: ISOMORPHISM_POINT_LIMIT,
            });
        }
    }
    if d1.points != d2.points || d1.blocks.len() != d2.blocks.len() {
        return Ok(Isomorphism::No);
    }
    let mut s1 = d1.block_sizes();
    let mut s2 = d2.block_sizes();
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return Ok(Isomorphism::No);
    }
    let inv1 = point_invariants(d1);
    let inv2 = point_invariants(d2);
    let (mut m1, mut m2) = (inv1.clone(), inv2.clone());
    m1.sort();
    m2.sort();
    if m1 != m2 {
        return Ok(Isomorphism::No);
    }

    // Rare invariants first: they have the fewest candidates.
    let mut order: Vec<usize> = (0..d1.points).collect();
    order.sort_by_key(|&p| (inv1.iter().filter(|x| **x == inv1[p]).count(), p));

    let mut search = IsoSearch {
        d1,
        d2,
        inv1,
        inv2,
        order,
        image: vec![usize::MAX; d1.points],
        used: vec![false; d2.points],
        traces1: vec![0; d1.blocks.len()],
        traces2: vec![0; d2.blocks.len()],
        nodes: 0,
        budget: node_budget,
    };
    Ok(match search.extend(0) {
        Some(true) => Isomorphism::Yes,
        Some(false) => Isomorphism::No,
        None => Isomorphism::BudgetExceeded,
    })
}

fn point_invariants(d: &BlockDesign) -> Vec<(i64, Vec<i64>)> {
    let c = concurrence_matrix(d);
    (0..d.points)
        .map(|p| {
            let mut profile: Vec<i64> = (0..d.points)
                .filter(|&q| q != p)
                .map(|q| c.get(p, q))
                .collect();
            profile.sort_unstable();
            (c.get(p, p), profile)
        })
        .collect()
}

struct IsoSearch<'a> {
    d1: &'a BlockDesign,
    d2: &'a BlockDesign,
    inv1: Vec<(i64, Vec<i64>)>,
    inv2: Vec<(i64, Vec<i64>)>,
    order: Vec<usize>,
    image: Vec<usize>,
    used: Vec<bool>,
    traces1: Vec<u64>,
    traces2: Vec<u64>,
    nodes: usize,
    budget: usize,
}

impl IsoSearch<'_> {
    /// `None` when the budget runs out.
    fn extend(&mut self, depth: usize) -> Option<bool> {
        if depth == self.order.len() {
            return Some(true);
        }
        let p = self.order[depth];
        let bit = 1u64 << depth;
        for q in 0..self.d2.points {
            if self.used[q] || self.inv2[q] != self.inv1[p] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.assign(p, q, bit, true);
            if self.traces_agree() {
                match self.extend(depth + 1) {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
            }
            self.assign(p, q, bit, false);
        }
        Some(false)
    }

    fn assign(&mut self, p: usize, q: usize, bit: u64, on: bool) {
        self.image[p] = if on { q } else { usize::MAX };
        self.used[q] = on;
        for (b, block) in self.d1.blocks.iter().enumerate() {
            if block.binary_search(&p).is_ok() {
                self.traces1[b] ^= bit;
            }
        }
        for (b, block) in self.d2.blocks.iter().enumerate() {
            if block.binary_search(&q).is_ok() {
                self.traces2[b] ^= bit;
            }
        }
    }

    fn traces_agree(&self) -> bool {
        let mut a = self.traces1.clone();
        let mut b = self.traces2.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

//! Exact minimum biclique partitions: tau(G) over all complete bipartite
//! blocks and tau'(G) over nontrivial blocks only (both classes >= 2),
//! with tau'(G) = infinity when no nontrivial cover exists.
//!
//! The solver branches on the lexicographically smallest uncovered edge,
//! enumerating every block (a, b) that contains it inside the uncovered
//! graph (all maximal blocks and their sub-blocks through that edge).
//! Two admissible lower bounds prune the search: per uncovered component,
//! blocks used so far plus ceil(uncovered edges / largest possible block
//! edge count), with the block size capped by endpoint degrees and the
//! component order; and globally, half the GF(2)-rank of the residual
//! adjacency matrix, since each block contributes rank at most 2.
//! Residual edge sets recur massively across branch orders, so results are
//! memoized by the residual adjacency (packed into a single integer at
//! desk scale); this keeps K_8 (the worst case exercised by the test
//! suite) comfortably fast.

use crate::alpha::alpha_budgeted;
use crate::bitset::VertexSet;
use crate::blocks::{BipartiteBlock, Decomposition, DecompositionKind};
use crate::builders::star_decomposition;
use crate::graph::Graph;
use crate::search::{Budget, SearchError};
use std::collections::HashMap;
use std::hash::{BuildHasherDefault, Hasher};

pub const MAX_TAU_VERTICES: usize = 64;
pub const MAX_SUBSET_VERTICES: usize = 20;

/// tau' takes the distinguished value Infinite when some edge cannot be
/// covered by any nontrivial block; arithmetic on it saturates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauPrime {
    Finite(u32),
    Infinite,
}

impl TauPrime {
    pub fn is_finite(&self) -> bool {
        matches!(self, TauPrime::Finite(_))
    }

    /// n - |U| + tau'(G[U]) with saturation on the infinite branch.
    pub fn plus(&self, offset: u32) -> TauPrime {
        match self {
            TauPrime::Finite(v) => TauPrime::Finite(v + offset),
            TauPrime::Infinite => TauPrime::Infinite,
        }
    }
}

impl std::fmt::Display for TauPrime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TauPrime::Finite(v) => write!(f, "{v}"),
            TauPrime::Infinite => write!(f, "infinite"),
        }
    }
}

// ---------------------------------------------------------------------------
// residual-row helpers (adjacency as one u64 per vertex)
// ---------------------------------------------------------------------------

#[inline]
fn edge_count(rows: &[u64]) -> u32 {
    rows.iter().map(|r| r.count_ones()).sum::<u32>() / 2
}

#[inline]
fn support(rows: &[u64]) -> u64 {
    let mut s = 0u64;
    for (v, &r) in rows.iter().enumerate() {
        if r != 0 {
            s |= 1u64 << v;
        }
    }
    s
}

fn smallest_edge(rows: &[u64]) -> Option<(usize, usize)> {
    for (u, &r) in rows.iter().enumerate() {
        if r != 0 {
            return Some((u, r.trailing_zeros() as usize));
        }
    }
    None
}

fn component_of(rows: &[u64], start: usize) -> u64 {
    let mut comp = 0u64;
    let mut frontier = 1u64 << start;
    while frontier != 0 {
        comp |= frontier;
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & !comp;
    }
    comp
}

fn remove_block(rows: &mut [u64], a: u64, b: u64) {
    let mut m = a;
    while m != 0 {
        let x = m.trailing_zeros() as usize;
        m &= m - 1;
        rows[x] &= !b;
    }
    let mut m = b;
    while m != 0 {
        let y = m.trailing_zeros() as usize;
        m &= m - 1;
        rows[y] &= !a;
    }
}

/// Rank of the residual adjacency matrix over GF(2). Every block (a, b)
/// contributes a x b + b x a, a matrix of GF(2)-rank at most 2, so any
/// partition into t blocks forces rank <= 2t: tau >= ceil(rank / 2).
fn gf2_rank(rows: &[u64]) -> u32 {
    let mut pivots = [0u64; 64];
    let mut rank = 0u32;
    for &row in rows {
        let mut v = row;
        while v != 0 {
            let h = 63 - v.leading_zeros() as usize;
            if pivots[h] == 0 {
                pivots[h] = v;
                rank += 1;
                break;
            }
            v ^= pivots[h];
        }
    }
    rank
}

/// Largest possible |a| * |b| for a block through an edge with endpoint
/// degrees da, db inside a component of nc vertices: maximize s * t with
/// s <= db, t <= da, s + t <= nc (the product is concave, so only the
/// clamped midpoint and the two extremes matter).
fn edge_block_cap(da: u64, db: u64, nc: u64) -> u64 {
    let mut best = 0u64;
    for s in [1, db.min(nc - 1), nc / 2, nc.div_ceil(2)] {
        let s = s.clamp(1, db.min(nc.saturating_sub(1)));
        let t = da.min(nc - s);
        if t >= 1 {
            best = best.max(s * t);
        }
    }
    best
}

/// Is there a nontrivial block {x,w} x {y,z} through edge (x,y)?
fn k22_through(rows: &[u64], x: usize, y: usize) -> bool {
    let mut ws = rows[y] & !(1u64 << x);
    let zs_base = rows[x] & !(1u64 << y);
    while ws != 0 {
        let w = ws.trailing_zeros() as usize;
        ws &= ws - 1;
        if rows[w] & zs_base & !(1u64 << w) != 0 {
            return true;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// memo table
// ---------------------------------------------------------------------------

/// Multiply-rotate hasher for the residual-row keys (hot path).
#[derive(Default)]
struct RowHasher(u64);

impl Hasher for RowHasher {
    #[inline]
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0.rotate_left(5) ^ b as u64).wrapping_mul(0x517c_c1b7_2722_0a95);
        }
    }
    #[inline]
    fn write_u64(&mut self, n: u64) {
        self.0 = (self.0.rotate_left(5) ^ n).wrapping_mul(0x517c_c1b7_2722_0a95);
    }
    #[inline]
    fn write_usize(&mut self, n: usize) {
        self.write_u64(n as u64);
    }
    #[inline]
    fn finish(&self) -> u64 {
        self.0
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ExactVal {
    Unknown,
    Finite(u32),
    Infinite,
}

#[derive(Clone, Copy)]
struct Entry {
    lb: u32,
    exact: ExactVal,
    block: (u64, u64),
}

impl Default for Entry {
    fn default() -> Self {
        Entry {
            lb: 0,
            exact: ExactVal::Unknown,
            block: (0, 0),
        }
    }
}

enum Rec {
    Exact(u32),
    MoreThan,
    Infinite,
}

enum LowerBound {
    Finite(u32),
    Infinite,
}

/// Residuals on up to 11 vertices pack their whole edge set into one u64
/// (C(11,2) = 55 bits), which keeps the memo allocation-free at the sizes
/// the exact searches actually run at; larger instances fall back to the
/// boxed row keys.
const PACKED_VERTEX_LIMIT: usize = 11;

fn pack_rows(rows: &[u64]) -> u64 {
    let n = rows.len();
    let mut key = 0u64;
    let mut bit = 0u32;
    for u in 0..n {
        let row = rows[u] >> (u + 1);
        key |= (row & ((1u64 << (n - u - 1)) - 1)) << bit;
        bit += (n - u - 1) as u32;
    }
    key
}

struct TauSolver {
    nontrivial: bool,
    packed: bool,
    memo_packed: HashMap<u64, Entry, BuildHasherDefault<RowHasher>>,
    memo_rows: HashMap<Box<[u64]>, Entry, BuildHasherDefault<RowHasher>>,
    budget: Budget,
    /// Per-depth scratch buffers for block lists and child rows.
    scratch: Vec<(Vec<(u64, u64)>, Vec<u64>)>,
}

impl TauSolver {
    fn new_for(n: usize, nontrivial: bool, budget: u64) -> Self {
        TauSolver {
            nontrivial,
            packed: n <= PACKED_VERTEX_LIMIT,
            memo_packed: HashMap::default(),
            memo_rows: HashMap::default(),
            budget: Budget::new(budget),
            scratch: Vec::new(),
        }
    }

    fn memo_get(&self, rows: &[u64]) -> Option<Entry> {
        if self.packed {
            self.memo_packed.get(&pack_rows(rows)).copied()
        } else {
            self.memo_rows.get(rows).copied()
        }
    }

    /// Per-component ceilings summed, strengthened by the GF(2)-rank bound;
    /// Infinite when (nontrivial mode) some edge admits no nontrivial block
    /// at all.
    fn lower_bound(&self, rows: &[u64]) -> LowerBound {
        let mut remaining = support(rows);
        let mut total = 0u32;
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let comp = component_of(rows, start);
            remaining &= !comp;
            let nc = comp.count_ones() as u64;
            let mut m_c = 0u32;
            let mut max_block = 0u64;
            let mut cm = comp;
            while cm != 0 {
                let x = cm.trailing_zeros() as usize;
                cm &= cm - 1;
                let dx = rows[x].count_ones() as u64;
                m_c += dx as u32;
                let mut nb = rows[x];
                while nb != 0 {
                    let y = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    if y > x {
                        max_block =
                            max_block.max(edge_block_cap(dx, rows[y].count_ones() as u64, nc));
                        if self.nontrivial && !k22_through(rows, x, y) {
                            return LowerBound::Infinite;
                        }
                    }
                }
            }
            m_c /= 2;
            let max_block = max_block.min(m_c as u64).max(1);
            total += m_c.div_ceil(max_block as u32);
        }
        // rank is additive over components, so one global pass suffices
        LowerBound::Finite(total.max(gf2_rank(rows).div_ceil(2)))
    }

    /// All blocks (a, b) with u in a, v in b, complete within `rows`,
    /// ordered largest first.
    fn blocks_through(&self, rows: &[u64], u: usize, v: usize, out: &mut Vec<(u64, u64)>) {
        out.clear();
        let cand = (rows[u] | rows[v]) & !(1u64 << u) & !(1u64 << v);
        self.enum_blocks(rows, 1u64 << u, 1u64 << v, cand, out);
        out.sort_unstable_by(|x, y| {
            let sx = x.0.count_ones() * x.1.count_ones();
            let sy = y.0.count_ones() * y.1.count_ones();
            sy.cmp(&sx).then(x.cmp(y))
        });
    }

    fn enum_blocks(&self, rows: &[u64], a: u64, b: u64, cand: u64, out: &mut Vec<(u64, u64)>) {
        if !self.nontrivial || (a.count_ones() >= 2 && b.count_ones() >= 2) {
            out.push((a, b));
        }
        if cand == 0 {
            return;
        }
        let w = cand.trailing_zeros() as usize;
        let rest = cand & (cand - 1);
        let row = rows[w];
        if row & b == b {
            self.enum_blocks(rows, a | (1u64 << w), b, rest, out);
        }
        if row & a == a {
            self.enum_blocks(rows, a, b | (1u64 << w), rest, out);
        }
        self.enum_blocks(rows, a, b, rest, out);
    }

    fn take_scratch(&mut self, depth: usize) -> (Vec<(u64, u64)>, Vec<u64>) {
        while self.scratch.len() <= depth {
            self.scratch.push((Vec::new(), Vec::new()));
        }
        std::mem::take(&mut self.scratch[depth])
    }

    /// Exact(c): the true minimum is c (and c <= limit).
    /// MoreThan:  the true minimum exceeds limit.
    /// Infinite:  no cover exists at all (nontrivial mode).
    fn rec(&mut self, rows: &[u64], limit: u32, depth: usize) -> Result<Rec, SearchError> {
        let m = edge_count(rows);
        if m == 0 {
            return Ok(Rec::Exact(0));
        }
        if limit == 0 {
            return Ok(Rec::MoreThan);
        }
        if !self.budget.step() {
            return Err(SearchError::BudgetExceeded {
                lower_bound: 0,
                upper_bound: None,
            });
        }
        if let Some(e) = self.memo_get(rows) {
            match e.exact {
                ExactVal::Infinite => return Ok(Rec::Infinite),
                ExactVal::Finite(v) => {
                    return Ok(if v <= limit {
                        Rec::Exact(v)
                    } else {
                        Rec::MoreThan
                    });
                }
                ExactVal::Unknown => {
                    if e.lb > limit {
                        return Ok(Rec::MoreThan);
                    }
                }
            }
        }

        let (u, v) = smallest_edge(rows).expect("m > 0");
        let comp = component_of(rows, u);
        let sup = support(rows);
        if comp != sup {
            return self.rec_split(rows, limit, comp, depth);
        }

        let lb = match self.lower_bound(rows) {
            LowerBound::Infinite => {
                self.memo_infinite(rows);
                return Ok(Rec::Infinite);
            }
            LowerBound::Finite(lb) => lb,
        };
        if lb > limit {
            self.memo_lb(rows, lb);
            return Ok(Rec::MoreThan);
        }

        let (mut blocks, mut child) = self.take_scratch(depth);
        self.blocks_through(rows, u, v, &mut blocks);
        if blocks.is_empty() {
            // only reachable in nontrivial mode
            self.scratch[depth] = (blocks, child);
            self.memo_infinite(rows);
            return Ok(Rec::Infinite);
        }

        let mut interest = limit;
        let mut best: Option<u32> = None;
        let mut best_block = (0u64, 0u64);
        child.clear();
        child.extend_from_slice(rows);
        let mut result = Ok(());
        for &(a, b) in &blocks {
            if interest == 0 {
                break;
            }
            child.copy_from_slice(rows);
            remove_block(&mut child, a, b);
            match self.rec(&child, interest - 1, depth + 1) {
                Ok(Rec::Exact(c)) => {
                    let total = c + 1;
                    best = Some(total);
                    best_block = (a, b);
                    interest = total - 1;
                }
                Ok(Rec::MoreThan) | Ok(Rec::Infinite) => {}
                Err(e) => {
                    result = Err(e);
                    break;
                }
            }
        }
        self.scratch[depth] = (blocks, child);
        result?;
        match best {
            Some(val) => {
                self.memo_exact(rows, val, best_block);
                Ok(Rec::Exact(val))
            }
            None => {
                self.memo_lb(rows, limit + 1);
                Ok(Rec::MoreThan)
            }
        }
    }

    fn rec_split(
        &mut self,
        rows: &[u64],
        limit: u32,
        comp: u64,
        depth: usize,
    ) -> Result<Rec, SearchError> {
        let n = rows.len();
        let mut comp_rows = vec![0u64; n];
        let mut rest_rows = vec![0u64; n];
        for v in 0..n {
            if comp >> v & 1 == 1 {
                comp_rows[v] = rows[v];
            } else {
                rest_rows[v] = rows[v];
            }
        }
        let lb_rest = match self.lower_bound(&rest_rows) {
            LowerBound::Infinite => {
                self.memo_infinite(rows);
                return Ok(Rec::Infinite);
            }
            LowerBound::Finite(l) => l,
        };
        if lb_rest >= limit {
            // the component needs at least one more block
            self.memo_lb(rows, limit + 1);
            return Ok(Rec::MoreThan);
        }
        let res_comp = self.rec(&comp_rows, limit - lb_rest, depth + 1)?;
        let c = match res_comp {
            Rec::Infinite => {
                self.memo_infinite(rows);
                return Ok(Rec::Infinite);
            }
            Rec::MoreThan => {
                self.memo_lb(rows, limit + 1);
                return Ok(Rec::MoreThan);
            }
            Rec::Exact(c) => c,
        };
        let res_rest = self.rec(&rest_rows, limit - c, depth + 1)?;
        match res_rest {
            Rec::Infinite => {
                self.memo_infinite(rows);
                Ok(Rec::Infinite)
            }
            Rec::MoreThan => {
                self.memo_lb(rows, limit + 1);
                Ok(Rec::MoreThan)
            }
            Rec::Exact(r) => {
                self.memo_exact(rows, c + r, (0, 0));
                Ok(Rec::Exact(c + r))
            }
        }
    }

    fn memo_update(&mut self, rows: &[u64], f: impl FnOnce(&mut Entry)) {
        if self.packed {
            f(self.memo_packed.entry(pack_rows(rows)).or_default());
        } else if let Some(e) = self.memo_rows.get_mut(rows) {
            f(e);
        } else {
            let mut e = Entry::default();
            f(&mut e);
            self.memo_rows.insert(rows.to_vec().into_boxed_slice(), e);
        }
    }

    fn memo_exact(&mut self, rows: &[u64], val: u32, block: (u64, u64)) {
        self.memo_update(rows, |e| {
            e.exact = ExactVal::Finite(val);
            e.block = block;
            e.lb = e.lb.max(val);
        });
    }

    fn memo_infinite(&mut self, rows: &[u64]) {
        self.memo_update(rows, |e| e.exact = ExactVal::Infinite);
    }

    fn memo_lb(&mut self, rows: &[u64], lb: u32) {
        self.memo_update(rows, |e| e.lb = e.lb.max(lb));
    }

    /// Rebuilds the optimal block list for a residual solved exactly,
    /// mirroring the solve-time component splits.
    fn reconstruct(&self, rows: &[u64]) -> Vec<(u64, u64)> {
        let mut rows = rows.to_vec();
        let mut out = Vec::new();
        loop {
            let (u, _) = match smallest_edge(&rows) {
                None => return out,
                Some(e) => e,
            };
            let comp = component_of(&rows, u);
            if comp != support(&rows) {
                let n = rows.len();
                let mut comp_rows = vec![0u64; n];
                for v in 0..n {
                    if comp >> v & 1 == 1 {
                        comp_rows[v] = rows[v];
                        rows[v] = 0;
                    }
                }
                out.extend(self.reconstruct(&comp_rows));
                continue;
            }
            let e = self.memo_get(&rows).expect("solved residual is memoized");
            debug_assert!(matches!(e.exact, ExactVal::Finite(_)));
            debug_assert!(e.block != (0, 0), "single component entries carry a block");
            out.push(e.block);
            remove_block(&mut rows, e.block.0, e.block.1);
        }
    }
}

fn graph_rows(g: &Graph) -> Result<Vec<u64>, SearchError> {
    let n = g.n();
    if n > MAX_TAU_VERTICES {
        return Err(SearchError::TooLarge {
            n,
            max: MAX_TAU_VERTICES,
        });
    }
    Ok((0..n)
        .map(|v| g.neighbors(v).words().first().copied().unwrap_or(0))
        .collect())
}

fn masks_to_decomposition(
    n: usize,
    blocks: &[(u64, u64)],
    kind: DecompositionKind,
) -> Decomposition {
    let blocks = blocks
        .iter()
        .map(|&(a, b)| {
            BipartiteBlock::new(
                VertexSet::from_iter(n, (0..n).filter(|&v| a >> v & 1 == 1)),
                VertexSet::from_iter(n, (0..n).filter(|&v| b >> v & 1 == 1)),
            )
        })
        .collect();
    Decomposition::new(blocks, kind)
}

/// Exact tau(g) with a validated certificate. `budget` counts search nodes.
pub fn exact_tau(g: &Graph, budget: u64) -> Result<(u32, Decomposition), SearchError> {
    let rows = graph_rows(g)?;
    if edge_count(&rows) == 0 {
        return Ok((0, Decomposition::empty(DecompositionKind::Any)));
    }
    let (_, ind) = alpha_budgeted(g, budget).map_err(|_| SearchError::BudgetExceeded {
        lower_bound: 0,
        upper_bound: None,
    })?;
    let stars = star_decomposition(g, &ind).expect("alpha witness is independent");
    let ub = stars.len() as u32;
    debug_assert!(ub >= 1);
    let mut solver = TauSolver::new_for(g.n(), false, budget);
    let root_lb = match solver.lower_bound(&rows) {
        LowerBound::Finite(l) => l,
        LowerBound::Infinite => unreachable!("every edge is its own block"),
    };
    if root_lb >= ub {
        return Ok((ub, stars));
    }
    match solver.rec(&rows, ub - 1, 0) {
        Ok(Rec::Exact(c)) => {
            let blocks = solver.reconstruct(&rows);
            Ok((
                c,
                masks_to_decomposition(g.n(), &blocks, DecompositionKind::Any),
            ))
        }
        Ok(Rec::MoreThan) => Ok((ub, stars)),
        Ok(Rec::Infinite) => unreachable!("any-block mode cannot be infeasible"),
        Err(_) => Err(SearchError::BudgetExceeded {
            lower_bound: root_lb as u64,
            upper_bound: Some(ub as u64),
        }),
    }
}

/// Exact tau'(g): minimum cover by nontrivial blocks, or Infinite.
/// The certificate is returned for the finite case.
pub fn exact_tau_prime(
    g: &Graph,
    budget: u64,
) -> Result<(TauPrime, Option<Decomposition>), SearchError> {
    let rows = graph_rows(g)?;
    let m = edge_count(&rows);
    if m == 0 {
        return Ok((
            TauPrime::Finite(0),
            Some(Decomposition::empty(DecompositionKind::NontrivialOnly)),
        ));
    }
    // every nontrivial block spends at least 4 edges
    let limit = m / 4;
    if limit == 0 {
        return Ok((TauPrime::Infinite, None));
    }
    let mut solver = TauSolver::new_for(g.n(), true, budget);
    match solver.rec(&rows, limit, 0) {
        Ok(Rec::Exact(c)) => {
            let blocks = solver.reconstruct(&rows);
            Ok((
                TauPrime::Finite(c),
                Some(masks_to_decomposition(
                    g.n(),
                    &blocks,
                    DecompositionKind::NontrivialOnly,
                )),
            ))
        }
        Ok(Rec::MoreThan) | Ok(Rec::Infinite) => Ok((TauPrime::Infinite, None)),
        Err(_) => Err(SearchError::BudgetExceeded {
            lower_bound: 0,
            upper_bound: None,
        }),
    }
}

/// min over all U of (n - |U| + tau'(G[U])) together with a minimizing U.
/// Every subset is enumerated, so the vertex count is capped hard.
pub fn tau_subset_min(g: &Graph, budget: u64) -> Result<(u32, VertexSet), SearchError> {
    let n = g.n();
    if n > MAX_SUBSET_VERTICES {
        return Err(SearchError::TooLarge {
            n,
            max: MAX_SUBSET_VERTICES,
        });
    }
    let rows = graph_rows(g)?;
    let mut solver = TauSolver::new_for(g.n(), true, budget);
    let mut best = n as u32 + 1;
    let mut best_mask = 0u64;
    let mut masked = vec![0u64; n];
    for mask in 0u64..(1u64 << n) {
        let outside = n as u32 - mask.count_ones();
        // even tau' = 0 cannot improve on the incumbent
        if outside >= best {
            continue;
        }
        for v in 0..n {
            masked[v] = if mask >> v & 1 == 1 {
                rows[v] & mask
            } else {
                0
            };
        }
        let m_u = edge_count(&masked);
        let window = (best - 1 - outside).min(m_u / 4);
        if m_u > 0 && window == 0 {
            continue;
        }
        match solver.rec(&masked, window, 0) {
            Ok(Rec::Exact(c)) => {
                let val = outside + c;
                if val < best {
                    best = val;
                    best_mask = mask;
                }
            }
            Ok(Rec::MoreThan) | Ok(Rec::Infinite) => {}
            Err(_) => {
                return Err(SearchError::BudgetExceeded {
                    lower_bound: 0,
                    upper_bound: if best <= n as u32 {
                        Some(best as u64)
                    } else {
                        None
                    },
                })
            }
        }
    }
    let u = VertexSet::from_iter(n, (0..n).filter(|&v| best_mask >> v & 1 == 1));
    Ok((best, u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::validate_decomposition;

    #[test]
    fn tau_of_small_fixed_graphs() {
        let (t, cert) = exact_tau(&Graph::complete(4), u64::MAX).unwrap();
        assert_eq!(t, 3);
        assert!(validate_decomposition(&Graph::complete(4), &cert).passed);

        let (t, cert) = exact_tau(&Graph::cycle(4), u64::MAX).unwrap();
        assert_eq!(t, 1);
        assert!(validate_decomposition(&Graph::cycle(4), &cert).passed);

        // C5: tau = 3 = n - alpha
        let (t, _) = exact_tau(&Graph::cycle(5), u64::MAX).unwrap();
        assert_eq!(t, 3);

        let (t, cert) = exact_tau(&Graph::empty(6), u64::MAX).unwrap();
        assert_eq!(t, 0);
        assert!(cert.is_empty());
    }

    #[test]
    fn tau_prime_distinguishes_infinite() {
        let (tp, cert) = exact_tau_prime(&Graph::cycle(4), u64::MAX).unwrap();
        assert_eq!(tp, TauPrime::Finite(1));
        assert!(validate_decomposition(&Graph::cycle(4), &cert.unwrap()).passed);

        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            exact_tau_prime(&star, u64::MAX).unwrap().0,
            TauPrime::Infinite
        );

        // any K_{2,2} of K4 leaves a 2-edge matching that no nontrivial
        // block can cover
        assert_eq!(
            exact_tau_prime(&Graph::complete(4), u64::MAX).unwrap().0,
            TauPrime::Infinite
        );

        let (tp, _) = exact_tau_prime(&Graph::empty(3), u64::MAX).unwrap();
        assert_eq!(tp, TauPrime::Finite(0));
    }

    #[test]
    fn subset_min_matches_hand_values() {
        // C4: U = V gives 0 + tau'(C4) = 1
        let (v, u) = tau_subset_min(&Graph::cycle(4), u64::MAX).unwrap();
        assert_eq!(v, 1);
        assert_eq!(u.len(), 4);

        // K4: a single vertex U gives 3 + 0 = 3
        let (v, _) = tau_subset_min(&Graph::complete(4), u64::MAX).unwrap();
        assert_eq!(v, 3);

        let (v, u) = tau_subset_min(&Graph::empty(5), u64::MAX).unwrap();
        assert_eq!(v, 0);
        assert_eq!(u.len(), 5);
    }

    #[test]
    fn graham_pollak_small() {
        for n in 2..=6 {
            let (t, cert) = exact_tau(&Graph::complete(n), u64::MAX).unwrap();
            assert_eq!(t as usize, n - 1, "K_{n}");
            assert!(validate_decomposition(&Graph::complete(n), &cert).passed);
        }
    }

    #[test]
    fn budget_is_respected() {
        let g = Graph::complete(7);
        assert!(matches!(
            exact_tau(&g, 10),
            Err(SearchError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn oversize_graphs_are_rejected() {
        let g = Graph::empty(65);
        assert!(matches!(
            exact_tau(&g, u64::MAX),
            Err(SearchError::TooLarge { .. })
        ));
    }
}

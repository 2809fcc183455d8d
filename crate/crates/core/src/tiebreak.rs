//! Perturbation-based tie-breaking that simulates an unambiguously weighted
//! graph: no two distinct edge sets compare equal, so shortest paths and
//! shortest cycles are unique.
//!
//! Two real modes are provided. Randomized mode attaches a random salt to
//! every edge index and compares salt sums; it can collide (and collisions
//! are counted so callers can retry with a fresh seed). Deterministic mode
//! assigns edge index `i` the symbolic perturbation δ/2^(i+1) for an
//! arbitrarily small δ > 0, so comparisons of equal-weight edge sets reduce
//! to locating the smallest index where the sets differ: the set containing
//! it is the larger one. The δ value is never materialized.
//!
//! Sets are represented as hash-consed nodes of a complete binary tree over
//! the index universe, deduplicated through a dictionary keyed on
//! (level, left child, right child), so equal sets are always the *same*
//! object and first differences are found by a single root-to-leaf descent.
//!
//! A third, test-only Naive mode reports all equal-weight sets as equal; it
//! exists to demonstrate that greedy minimum-basis construction genuinely
//! needs tie-breaking.

use std::cell::Cell;
use std::cmp::Ordering;
use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// How equal-weight comparisons are resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreakMode {
    /// Symbolic δ/2^i perturbations; exact and reproducible.
    Deterministic,
    /// Per-index random salts summed alongside weights.
    Randomized { seed: u64 },
    /// No perturbation at all (test-only; greedy algorithms may fail).
    Naive,
}

/// Opaque perturbation key for an edge set.
///
/// Handles are only meaningful together with the context that produced them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreakHandle {
    /// Root subset-object id (deterministic mode). 0 is the empty set.
    Det(u32),
    /// Signed salt sum (randomized mode); signed because path algorithms
    /// subtract salts when traversing residual arcs.
    Rand(i128),
    /// Naive mode carries no information.
    Unit,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TieBreakError {
    #[error("edge ids must be strictly increasing")]
    Unsorted,
    #[error("index {0} exceeds the context universe {1}")]
    IndexOutOfRange(usize, usize),
}

// Child-id packing for dictionary keys: ids stay far below 2^40 at desk
// scale, so (level, left, right) packs into a u128 without collisions.
const Q: u128 = 1 << 40;

/// Arena + dictionary for one algorithm invocation.
///
/// Node encoding: 0 = empty subtree, 1 = present leaf; internal node ids
/// start at 2 and index `nodes` (id - 2 → (left, right)). Identical subtree
/// shapes are shared across positions, which preserves the defining
/// property: equal sets have equal root ids.
pub struct TieBreakContext {
    mode: TieBreakMode,
    /// Number of valid indices; the tree universe is the next power of two.
    universe: usize,
    levels: u32,
    salts: Vec<u64>,
    nodes: Vec<(u32, u32)>,
    dict: HashMap<u128, u32>,
    collisions: Cell<u64>,
}

impl TieBreakContext {
    /// `index_count` is the number of distinct perturbation indices the
    /// caller will use (typically edge count, plus scratch indices).
    pub fn new(mode: TieBreakMode, index_count: usize) -> Self {
        let universe = index_count.max(2).next_power_of_two();
        let levels = universe.trailing_zeros();
        let salts = match mode {
            TieBreakMode::Randomized { seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..universe).map(|_| rng.gen::<u64>()).collect()
            }
            _ => Vec::new(),
        };
        TieBreakContext {
            mode,
            universe,
            levels,
            salts,
            nodes: Vec::new(),
            dict: HashMap::new(),
            collisions: Cell::new(0),
        }
    }

    pub fn mode(&self) -> TieBreakMode {
        self.mode
    }

    /// Count of equal-salt-sum comparisons between possibly distinct sets
    /// (randomized mode only); nonzero values explain downstream retries.
    pub fn collision_count(&self) -> u64 {
        self.collisions.get()
    }

    /// Number of subset objects allocated so far (deterministic mode).
    pub fn object_count(&self) -> usize {
        self.nodes.len()
    }

    /// Drops every subset object, reclaiming arena memory between
    /// independent runs. Previously issued deterministic handles become
    /// invalid; the mode, salts, and collision counter are kept, so
    /// comparisons made after the reset order edge sets exactly as before
    /// (the perturbation of a set depends only on its contents).
    pub fn clear_objects(&mut self) {
        self.nodes.clear();
        self.dict.clear();
    }

    fn children(&self, id: u32) -> (u32, u32) {
        if id == 0 {
            (0, 0)
        } else {
            self.nodes[id as usize - 2]
        }
    }

    fn make(&mut self, level: u32, left: u32, right: u32) -> u32 {
        if left == 0 && right == 0 {
            return 0;
        }
        let key = (level as u128) * Q * Q + (left as u128) * Q + right as u128;
        if let Some(&id) = self.dict.get(&key) {
            return id;
        }
        let id = (self.nodes.len() + 2) as u32;
        self.nodes.push((left, right));
        self.dict.insert(key, id);
        id
    }

    fn toggle_rec(&mut self, node: u32, level: u32, index: usize) -> u32 {
        if level == 0 {
            return node ^ 1;
        }
        let half = 1usize << (level - 1);
        let (l, r) = self.children(node);
        if index < half {
            let l2 = self.toggle_rec(l, level - 1, index);
            self.make(level, l2, r)
        } else {
            let r2 = self.toggle_rec(r, level - 1, index - half);
            self.make(level, l, r2)
        }
    }

    fn contains(&self, node: u32, level: u32, index: usize) -> bool {
        if level == 0 {
            return node == 1;
        }
        let half = 1usize << (level - 1);
        let (l, r) = self.children(node);
        if index < half {
            self.contains(l, level - 1, index)
        } else {
            self.contains(r, level - 1, index - half)
        }
    }
}

/// Handle for the empty set (salt sum 0 / null root object).
pub fn tb_empty(ctx: &TieBreakContext) -> TieBreakHandle {
    match ctx.mode {
        TieBreakMode::Deterministic => TieBreakHandle::Det(0),
        TieBreakMode::Randomized { .. } => TieBreakHandle::Rand(0),
        TieBreakMode::Naive => TieBreakHandle::Unit,
    }
}

/// Handle for S ∪ {index}; the caller guarantees `index ∉ S`.
pub fn tb_extend(
    ctx: &mut TieBreakContext,
    h: TieBreakHandle,
    index: usize,
) -> Result<TieBreakHandle, TieBreakError> {
    if index >= ctx.universe {
        return Err(TieBreakError::IndexOutOfRange(index, ctx.universe));
    }
    Ok(match (ctx.mode, h) {
        (TieBreakMode::Deterministic, TieBreakHandle::Det(root)) => {
            debug_assert!(!ctx.contains(root, ctx.levels, index), "index already in set");
            TieBreakHandle::Det(ctx.toggle_rec(root, ctx.levels, index))
        }
        (TieBreakMode::Randomized { .. }, TieBreakHandle::Rand(sum)) => {
            TieBreakHandle::Rand(sum + ctx.salts[index] as i128)
        }
        (TieBreakMode::Naive, _) => TieBreakHandle::Unit,
        _ => panic!("handle does not match context mode"),
    })
}

/// Symmetric-difference update S ⊕ {index} with an explicit traversal sign
/// for the salt sum. Used by path algorithms whose perturbation is a signed
/// walk total rather than a plain set: forward arcs add their salt
/// (`sign = +1`), residual arcs subtract it (`sign = -1`). Deterministic
/// mode ignores the sign because it tracks the set itself.
pub fn tb_apply_signed(
    ctx: &mut TieBreakContext,
    h: TieBreakHandle,
    index: usize,
    sign: i8,
) -> Result<TieBreakHandle, TieBreakError> {
    if index >= ctx.universe {
        return Err(TieBreakError::IndexOutOfRange(index, ctx.universe));
    }
    Ok(match (ctx.mode, h) {
        (TieBreakMode::Deterministic, TieBreakHandle::Det(root)) => {
            TieBreakHandle::Det(ctx.toggle_rec(root, ctx.levels, index))
        }
        (TieBreakMode::Randomized { .. }, TieBreakHandle::Rand(sum)) => {
            TieBreakHandle::Rand(sum + sign as i128 * ctx.salts[index] as i128)
        }
        (TieBreakMode::Naive, _) => TieBreakHandle::Unit,
        _ => panic!("handle does not match context mode"),
    })
}

/// Handle for the set given as a strictly increasing list. Produces the
/// identical object an equivalent `tb_extend` chain yields.
pub fn tb_from_sorted(
    ctx: &mut TieBreakContext,
    indices: &[usize],
) -> Result<TieBreakHandle, TieBreakError> {
    if indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(TieBreakError::Unsorted);
    }
    let mut h = tb_empty(ctx);
    for &i in indices {
        h = tb_extend(ctx, h, i)?;
    }
    Ok(h)
}

/// Smallest index in the symmetric difference of the two sets, or None when
/// the sets are equal (constant time: equal sets are the same object).
/// Deterministic-mode handles only.
pub fn tb_first_difference(
    ctx: &TieBreakContext,
    h1: TieBreakHandle,
    h2: TieBreakHandle,
) -> Option<usize> {
    let (TieBreakHandle::Det(mut x), TieBreakHandle::Det(mut y)) = (h1, h2) else {
        panic!("tb_first_difference requires deterministic handles");
    };
    if x == y {
        return None;
    }
    let mut base = 0usize;
    let mut level = ctx.levels;
    while level > 0 {
        let (lx, rx) = ctx.children(x);
        let (ly, ry) = ctx.children(y);
        if lx != ly {
            x = lx;
            y = ly;
        } else {
            x = rx;
            y = ry;
            base += 1usize << (level - 1);
        }
        level -= 1;
        debug_assert!(x != y, "hash-consing guarantees differing subtrees");
    }
    Some(base)
}

/// Full perturbed-weight comparison: weights first, then the perturbation.
///
/// Deterministic mode: the set containing the smallest differing index
/// carries the largest perturbation term δ/2^(i+1), which dominates every
/// later term, so that set is the greater one; Equal only for identical
/// sets. Randomized mode: compares salt sums; an equal-sum pair is recorded
/// as a collision and reported as Less for the first argument (the paper
/// permits an arbitrary choice; a fixed one keeps a run deterministic).
/// Naive mode: weights only.
pub fn tb_compare(
    ctx: &TieBreakContext,
    weight_x: u64,
    hx: TieBreakHandle,
    weight_y: u64,
    hy: TieBreakHandle,
) -> Ordering {
    match weight_x.cmp(&weight_y) {
        Ordering::Equal => {}
        ord => return ord,
    }
    match (hx, hy) {
        (TieBreakHandle::Det(_), TieBreakHandle::Det(_)) => {
            match tb_first_difference(ctx, hx, hy) {
                None => Ordering::Equal,
                Some(i) => {
                    let TieBreakHandle::Det(x) = hx else { unreachable!() };
                    if ctx.contains(x, ctx.levels, i) {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    }
                }
            }
        }
        (TieBreakHandle::Rand(a), TieBreakHandle::Rand(b)) => match a.cmp(&b) {
            Ordering::Equal => {
                ctx.collisions.set(ctx.collisions.get() + 1);
                Ordering::Less
            }
            ord => ord,
        },
        (TieBreakHandle::Unit, TieBreakHandle::Unit) => Ordering::Equal,
        _ => panic!("handles from different context modes"),
    }
}

//! Exhaustive search over 2-colorings of `[r]`: the independent oracle for
//! every closed-form value.
//!
//! A coloring is extended one integer at a time (`1` is always red, red is
//! tried before blue). A branch dies as soon as either color class contains a
//! solution. Each class keeps its `j`-fold sumsets as bitsets, so adding `t`
//! updates them with one shift-or per fold:
//! `F_j(C ∪ {t}) = F_j(C) ∪ (F_{j-1}(C ∪ {t}) + t)`.

mod bits;
mod cnf;
mod coloring;
mod solutions;

use std::borrow::Cow;
use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use bits::Bits;
pub use cnf::{export_cnf, Cnf};
pub use coloring::{Color, Coloring};
pub use solutions::{enumerate_solutions, Solution};

use crate::equations::Equation;
use crate::error::{RadoError, Result};

/// Upper limit on the largest side total the bitset engine will represent.
pub const MAX_TOTAL: u64 = 1 << 24;

/// `{ Σ cᵢ·vᵢ : vᵢ ∈ values }` as a sorted set.
pub fn achievable_sums(values: &[u64], coeffs: &[u64]) -> Result<BTreeSet<u64>> {
    let layers = SumLayers::build(values, coeffs)?;
    Ok(layers.total().ones().map(|s| s as u64).collect())
}

/// The partial sumsets `P_0 = {0}`, `P_i = P_{i-1} + cᵢ·values`, kept so a
/// concrete assignment can be read back from any reachable total.
struct SumLayers<'a> {
    values: Vec<u64>,
    coeffs: &'a [u64],
    layers: Vec<Bits>,
}

impl<'a> SumLayers<'a> {
    fn build(values: &[u64], coeffs: &'a [u64]) -> Result<Self> {
        let mut values: Vec<u64> = values.to_vec();
        values.sort_unstable();
        values.dedup();
        let max = values.last().copied().unwrap_or(0);
        coeffs
            .iter()
            .try_fold(0u64, |acc, &c| acc.checked_add(c.checked_mul(max)?))
            .filter(|&t| t <= MAX_TOTAL)
            .ok_or_else(|| RadoError::TooLarge(format!("side totals exceed {MAX_TOTAL}")))?;
        let mut layers = vec![Bits::singleton(0)];
        for &c in coeffs {
            let prev = layers.last().expect("nonempty");
            let mut next = Bits::new();
            for &v in &values {
                next.or_shifted(prev, (c * v) as usize);
            }
            layers.push(next);
        }
        Ok(SumLayers {
            values,
            coeffs,
            layers,
        })
    }

    fn total(&self) -> &Bits {
        self.layers.last().expect("nonempty")
    }

    /// Values `v₁..vₙ` (aligned with the coefficients) with `Σ cᵢ·vᵢ = target`.
    fn reconstruct(&self, target: u64) -> Option<Vec<u64>> {
        if !self.total().contains(target as usize) {
            return None;
        }
        let mut out = vec![0; self.coeffs.len()];
        let mut rest = target;
        for i in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[i];
            let v = *self.values.iter().find(|&&v| {
                rest.checked_sub(c * v)
                    .is_some_and(|s| self.layers[i].contains(s as usize))
            })?;
            out[i] = v;
            rest -= c * v;
        }
        (rest == 0).then_some(out)
    }
}

/// A solution of the equation whose values all share one color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoSolution {
    pub color: Color,
    pub lhs: Vec<u64>,
    pub rhs: Vec<u64>,
}

/// A monochromatic solution of `eq` under `coloring`, if one exists. Red is
/// checked first, and the solution with the least common total is returned.
pub fn find_mono_solution(eq: &Equation, coloring: &Coloring) -> Result<Option<MonoSolution>> {
    for color in [Color::Red, Color::Blue] {
        let class = coloring.class(color);
        let lhs = SumLayers::build(&class, eq.lhs())?;
        let rhs = SumLayers::build(&class, eq.rhs())?;
        if let Some(s) = lhs.total().first_common(rhs.total()) {
            let solution = MonoSolution {
                color,
                lhs: lhs
                    .reconstruct(s as u64)
                    .ok_or_else(|| reconstruct_err(eq))?,
                rhs: rhs
                    .reconstruct(s as u64)
                    .ok_or_else(|| reconstruct_err(eq))?,
            };
            return Ok(Some(solution));
        }
    }
    Ok(None)
}

fn reconstruct_err(eq: &Equation) -> RadoError {
    RadoError::Internal(format!("could not read back a solution of {eq}"))
}

pub fn has_mono_solution(eq: &Equation, coloring: &Coloring) -> Result<bool> {
    Ok(find_mono_solution(eq, coloring)?.is_some())
}

/// Result of [`compute_rado`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    /// The Rado number; absent when the cutoff was hit.
    pub rado: Option<u64>,
    /// `max_r + 1` when the cutoff was hit.
    pub lower_bound: Option<u64>,
    /// Lexicographically least valid coloring of `[rado - 1]` (or of
    /// `[max_r]` on cutoff). Absent when the Rado number is 1.
    pub witness: Option<Coloring>,
    /// Search nodes visited. Varies with the thread count.
    pub nodes_explored: u64,
    pub cutoff_hit: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub max_r: u64,
    pub threads: usize,
}

impl SearchOptions {
    pub fn new(max_r: u64) -> Self {
        SearchOptions { max_r, threads: 1 }
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }
}

/// Least `r <= max_r` such that every 2-coloring of `[r]` has a
/// monochromatic solution of `eq`.
pub fn compute_rado(eq: &Equation, max_r: u64) -> Result<SearchOutcome> {
    compute_rado_with(eq, SearchOptions::new(max_r))
}

pub fn compute_rado_with(eq: &Equation, opts: SearchOptions) -> Result<SearchOutcome> {
    if opts.max_r == 0 {
        return Err(RadoError::Precondition("max_r must be at least 1".into()));
    }
    if opts.threads == 0 {
        return Err(RadoError::Precondition("threads must be at least 1".into()));
    }
    let max_r = usize::try_from(opts.max_r)
        .map_err(|_| RadoError::TooLarge(format!("max_r = {}", opts.max_r)))?;
    let engine = Engine::new(eq, max_r)?;
    let found = if opts.threads == 1 {
        let mut ex = Explorer::new(&engine, Vec::new());
        ex.dfs(&engine.empty_class(), &engine.empty_class());
        ex.finish()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| RadoError::Internal(format!("thread pool: {e}")))?;
        pool.install(|| parallel_search(&engine, opts.threads))
    };

    let witness = (found.best_depth > 0).then(|| Coloring::new(found.best.clone()));
    if let Some(w) = &witness {
        if let Some(sol) = find_mono_solution(eq, w)? {
            return Err(RadoError::Internal(format!(
                "witness {w} for {eq} has monochromatic solution {sol:?}"
            )));
        }
    }
    let cutoff_hit = found.best_depth == max_r;
    let depth = found.best_depth as u64;
    Ok(SearchOutcome {
        rado: (!cutoff_hit).then_some(depth + 1),
        lower_bound: cutoff_hit.then_some(depth + 1),
        witness,
        nodes_explored: found.nodes,
        cutoff_hit,
    })
}

/// Coefficients of one side grouped by value: `(coefficient, multiplicity)`.
struct Side {
    groups: Vec<(usize, usize)>,
}

impl Side {
    fn new(coeffs: &[u64]) -> Self {
        let mut sorted = coeffs.to_vec();
        sorted.sort_unstable();
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for c in sorted {
            match groups.last_mut() {
                Some((g, n)) if *g == c as usize => *n += 1,
                _ => groups.push((c as usize, 1)),
            }
        }
        Side { groups }
    }

    fn totals<'a>(&self, class: &'a ClassState) -> Cow<'a, Bits> {
        let mut acc: Option<Cow<'a, Bits>> = None;
        for &(c, n) in &self.groups {
            let part = if c == 1 {
                Cow::Borrowed(&class.folds[n])
            } else {
                Cow::Owned(class.folds[n].scaled(c))
            };
            acc = Some(match acc {
                None => part,
                Some(prev) => Cow::Owned(prev.sumset(&part)),
            });
        }
        acc.expect("a side has at least one coefficient")
    }
}

/// `folds[j]` is the `j`-fold sumset of the class (`folds[0] = {0}`).
#[derive(Clone)]
struct ClassState {
    folds: Vec<Bits>,
}

struct Engine {
    lhs: Side,
    rhs: Side,
    fold_depth: usize,
    max_r: usize,
}

impl Engine {
    fn new(eq: &Equation, max_r: usize) -> Result<Self> {
        let too_large = || {
            RadoError::TooLarge(format!(
                "side totals of {eq} up to r = {max_r} exceed {MAX_TOTAL}"
            ))
        };
        let widest = eq.lhs_sum()?.max(eq.rhs_sum()?);
        if widest
            .checked_mul(max_r as u64)
            .is_none_or(|t| t > MAX_TOTAL)
        {
            return Err(too_large());
        }
        let lhs = Side::new(eq.lhs());
        let rhs = Side::new(eq.rhs());
        let fold_depth = lhs
            .groups
            .iter()
            .chain(&rhs.groups)
            .map(|&(_, n)| n)
            .max()
            .expect("nonempty sides");
        Ok(Engine {
            lhs,
            rhs,
            fold_depth,
            max_r,
        })
    }

    fn empty_class(&self) -> ClassState {
        let mut folds = vec![Bits::new(); self.fold_depth + 1];
        folds[0] = Bits::singleton(0);
        ClassState { folds }
    }

    fn with_value(&self, class: &ClassState, t: usize) -> ClassState {
        let mut next = class.clone();
        for j in 1..=self.fold_depth {
            let (done, rest) = next.folds.split_at_mut(j);
            rest[0].or_shifted(&done[j - 1], t);
        }
        next
    }

    fn is_mono(&self, class: &ClassState) -> bool {
        self.lhs.totals(class).intersects(&self.rhs.totals(class))
    }
}

#[derive(Debug, Clone)]
struct Found {
    best_depth: usize,
    best: Vec<Color>,
    nodes: u64,
}

struct Explorer<'a> {
    engine: &'a Engine,
    path: Vec<Color>,
    found: Found,
}

impl<'a> Explorer<'a> {
    fn new(engine: &'a Engine, prefix: Vec<Color>) -> Self {
        Explorer {
            engine,
            found: Found {
                best_depth: prefix.len(),
                best: prefix.clone(),
                nodes: 0,
            },
            path: prefix,
        }
    }

    fn cutoff(&self) -> bool {
        self.found.best_depth == self.engine.max_r
    }

    /// Extends a valid prefix. Stops everything once `[max_r]` is reached.
    fn dfs(&mut self, red: &ClassState, blue: &ClassState) {
        let depth = self.path.len();
        if depth > self.found.best_depth {
            self.found.best_depth = depth;
            self.found.best = self.path.clone();
        }
        if self.cutoff() {
            return;
        }
        let t = depth + 1;
        for color in [Color::Red, Color::Blue] {
            if t == 1 && color == Color::Blue {
                break;
            }
            let grown = match color {
                Color::Red => self.engine.with_value(red, t),
                Color::Blue => self.engine.with_value(blue, t),
            };
            self.found.nodes += 1;
            if self.engine.is_mono(&grown) {
                continue;
            }
            self.path.push(color);
            match color {
                Color::Red => self.dfs(&grown, blue),
                Color::Blue => self.dfs(red, &grown),
            }
            self.path.pop();
            if self.cutoff() {
                return;
            }
        }
    }

    fn finish(self) -> Found {
        self.found
    }
}

struct Frontier {
    path: Vec<Color>,
    red: ClassState,
    blue: ClassState,
}

/// Expands the tree breadth-first (keeping lexicographic order) until there
/// are enough independent subtrees, then explores them in parallel. The
/// combined answer is the deepest result, ties going to the earliest subtree,
/// which is what the sequential search returns.
fn parallel_search(engine: &Engine, threads: usize) -> Found {
    let target = threads * 16;
    let mut nodes = 0u64;
    let mut level = vec![Frontier {
        path: Vec::new(),
        red: engine.empty_class(),
        blue: engine.empty_class(),
    }];
    loop {
        let depth = level[0].path.len();
        if depth == engine.max_r || level.len() >= target {
            break;
        }
        let t = depth + 1;
        let mut next = Vec::new();
        for f in &level {
            for color in [Color::Red, Color::Blue] {
                if t == 1 && color == Color::Blue {
                    break;
                }
                let grown = match color {
                    Color::Red => engine.with_value(&f.red, t),
                    Color::Blue => engine.with_value(&f.blue, t),
                };
                nodes += 1;
                if engine.is_mono(&grown) {
                    continue;
                }
                let mut path = f.path.clone();
                path.push(color);
                let (red, blue) = match color {
                    Color::Red => (grown, f.blue.clone()),
                    Color::Blue => (f.red.clone(), grown),
                };
                next.push(Frontier { path, red, blue });
            }
        }
        if next.is_empty() {
            return Found {
                best_depth: depth,
                best: level.swap_remove(0).path,
                nodes,
            };
        }
        level = next;
    }

    let results: Vec<Found> = level
        .into_par_iter()
        .map(|f| {
            let mut ex = Explorer::new(engine, f.path.clone());
            ex.dfs(&f.red, &f.blue);
            ex.finish()
        })
        .collect();
    let nodes = nodes + results.iter().map(|f| f.nodes).sum::<u64>();
    let mut best = results
        .into_iter()
        .reduce(|a, b| if b.best_depth > a.best_depth { b } else { a })
        .expect("frontier is nonempty");
    best.nodes = nodes;
    best
}

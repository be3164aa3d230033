use super::forced::{forced_witness, Workspace};
use crate::error::{Error, Result};
use crate::graph::{is_connected, suppress, Graph};
use crate::potential::greedy_spanning_tree;
use crate::reductions::{fpt_preprocess, unwind_trace};
use crate::solver::exact::{exact_max_leaves_capped, DEFAULT_CAP};
use crate::tree::{bfs_forest, leaf_count, TreeEdges};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Answer {
    Yes,
    No,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub subsets_enumerated: u64,
    pub reductions_applied: usize,
    pub k_after_preprocess: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub answer: Answer,
    pub witness: Option<TreeEdges>,
    pub stats: Stats,
}

#[derive(Debug, Clone, Copy)]
pub struct FptOptions {
    /// Worker threads for the subset enumeration; `None` uses the global pool.
    pub threads: Option<usize>,
    pub witness: bool,
}

impl Default for FptOptions {
    fn default() -> Self {
        FptOptions { threads: None, witness: true }
    }
}

const BATCH: usize = 1 << 12;

/// Decides whether `g` has a spanning tree with at least `k` leaves.
pub fn fpt_decide(g: &Graph, k: usize) -> Result<Verdict> {
    fpt_decide_with(g, k, FptOptions::default())
}

pub fn fpt_decide_with(g: &Graph, k: usize, opts: FptOptions) -> Result<Verdict> {
    if k < 1 {
        return Err(Error::Argument("k must be at least 1".into()));
    }
    if g.n() < 2 {
        return Err(Error::TooSmall { required: 2, found: g.n() });
    }
    if !g.is_simple() {
        return Err(Error::Argument("input graph must be simple".into()));
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    match opts.threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| Error::Argument(e.to_string()))?;
            pool.install(|| decide(g, k, opts.witness))
        }
        None => decide(g, k, opts.witness),
    }
}

fn decide(g: &Graph, k: usize, want_witness: bool) -> Result<Verdict> {
    let (h, k2, trace) = fpt_preprocess(g, k);
    let mut stats = Stats { subsets_enumerated: 0, reductions_applied: trace.len(), k_after_preprocess: k2 };
    let lift = |t: TreeEdges| -> Result<TreeEdges> { Ok(unwind_trace(&h, &trace, &t)?.1) };

    let shortcut = k2 <= 2 || h.n_ge3() >= 3 * k2 || h.leaves().len() >= k2;
    if shortcut {
        let witness = if want_witness { shortcut_tree(&h, k2).map(lift).transpose()? } else { None };
        return Ok(Verdict { answer: Answer::Yes, witness, stats });
    }
    let s = suppress(&h)?;
    if s.is_empty() {
        return Ok(Verdict { answer: Answer::No, witness: None, stats });
    }
    let cands: Vec<usize> = (0..s.vertices.len()).filter(|&i| s.incident(i).len() >= 3).collect();
    let mut found: Option<Vec<usize>> = None;
    'sizes: for size in 0..=k2.min(cands.len()) {
        let mut combos = Colex::new(cands.len(), size);
        loop {
            let batch: Vec<Vec<usize>> = combos.by_ref().take(BATCH).collect();
            if batch.is_empty() {
                break;
            }
            let hit = batch
                .par_iter()
                .enumerate()
                .map_init(
                    || Workspace::new(&s),
                    |ws, (i, idx)| {
                        let l: Vec<usize> = idx.iter().map(|&j| cands[j]).collect();
                        ws.evaluate(&l).filter(|&v| v >= k2).map(|_| i)
                    },
                )
                .flatten()
                .min();
            match hit {
                Some(i) => {
                    stats.subsets_enumerated += i as u64 + 1;
                    found = Some(batch[i].iter().map(|&j| cands[j]).collect());
                    break 'sizes;
                }
                None => stats.subsets_enumerated += batch.len() as u64,
            }
        }
    }
    match found {
        Some(l) => {
            let witness = if want_witness {
                let t = forced_witness(&s, &l).ok_or_else(|| Error::Invariant("feasible set without a tree".into()))?;
                Some(lift(t)?)
            } else {
                None
            };
            Ok(Verdict { answer: Answer::Yes, witness, stats })
        }
        None => Ok(Verdict { answer: Answer::No, witness: None, stats }),
    }
}

/// A tree with at least `k` leaves after a shortcut answered yes, if one can be found cheaply.
fn shortcut_tree(h: &Graph, k: usize) -> Option<TreeEdges> {
    let t = bfs_forest(h);
    if leaf_count(&t) >= k {
        return Some(t);
    }
    if let Ok((t, _)) = greedy_spanning_tree(h) {
        if leaf_count(&t) >= k {
            return Some(t);
        }
    }
    exact_max_leaves_capped(h, DEFAULT_CAP).ok().map(|(_, t)| t)
}

/// k-subsets of `0..n` in colexicographic order.
pub struct Colex {
    cur: Vec<usize>,
    n: usize,
    done: bool,
}

impl Colex {
    pub fn new(n: usize, k: usize) -> Self {
        Colex { cur: (0..k).collect(), n, done: k > n }
    }
}

impl Iterator for Colex {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        let k = self.cur.len();
        let mut i = 0;
        while i < k && self.cur[i] + 1 == if i + 1 < k { self.cur[i + 1] } else { self.n } {
            i += 1;
        }
        if i == k {
            self.done = true;
        } else {
            self.cur[i] += 1;
            for j in 0..i {
                self.cur[j] = j;
            }
        }
        Some(out)
    }
}

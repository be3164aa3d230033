//! Structural reduction rules with admissibility checks and replayable traces.
//! Spanning trees can be carried back across every step.

mod reconstruct;
mod rules;

pub use reconstruct::{reconstruct_tree, unwind_trace};
pub use rules::{check_template, find_matches, role_count};

use crate::error::{Error, Result};
use crate::graph::{bridges_and_cut_vertices, connected_components, Graph, VertexId};
use crate::patterns::{ball, check_invariant, find_2blossoms_near, find_2necklaces_near};
use rules::End;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleId {
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
    L7,
    R1,
    R2,
    R3,
    R4,
    R5,
    F1,
    F2,
}

/// The rules used by [`reduce_to_irreducible`], in application order.
pub const STRUCTURAL_RULES: [RuleId; 12] = [
    RuleId::L1,
    RuleId::L2,
    RuleId::L3,
    RuleId::L4,
    RuleId::L5,
    RuleId::L6,
    RuleId::L7,
    RuleId::R1,
    RuleId::R2,
    RuleId::R3,
    RuleId::R4,
    RuleId::R5,
];

impl RuleId {
    pub fn is_fpt(self) -> bool {
        matches!(self, RuleId::F1 | RuleId::F2)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for RuleId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        STRUCTURAL_RULES
            .iter()
            .chain(&[RuleId::F1, RuleId::F2])
            .copied()
            .find(|r| r.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Argument(format!("unknown rule `{s}`")))
    }
}

/// One applied rule. Vertex ids refer to the graph the step was applied to;
/// added vertices carry the ids they received there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub rule: RuleId,
    pub roles: Vec<VertexId>,
    pub removed_vertices: Vec<VertexId>,
    pub removed_edges: Vec<(VertexId, VertexId)>,
    pub added_vertices: Vec<VertexId>,
    pub added_edges: Vec<(VertexId, VertexId)>,
    /// Decrease of n≥3, measured on the two graphs.
    pub delta_n3: i64,
    /// Change of the component count.
    pub delta_cc: i64,
    pub delta_k: usize,
}

impl ReductionStep {
    /// Applies the recorded change to the pre-graph.
    pub fn replay(&self, g: &mut Graph) -> Result<()> {
        let bad = |e: Error| Error::Trace(format!("{} replay failed: {e}", self.rule));
        for &(u, v) in &self.removed_edges {
            g.remove_edge_between(u, v).map_err(bad)?;
        }
        for &v in &self.removed_vertices {
            if g.degree(v) != 0 {
                return Err(Error::Trace(format!("{} replay: vertex {v} still has edges", self.rule)));
            }
            g.remove_vertex(v).map_err(bad)?;
        }
        for &v in &self.added_vertices {
            g.add_vertex_with_id(v).map_err(bad)?;
        }
        for &(u, v) in &self.added_edges {
            g.add_edge(u, v).map_err(bad)?;
        }
        Ok(())
    }

    /// Undoes the step on the post-graph.
    pub fn invert(&self, g: &mut Graph) -> Result<()> {
        let bad = |e: Error| Error::Trace(format!("{} inverse failed: {e}", self.rule));
        for &(u, v) in &self.added_edges {
            g.remove_edge_between(u, v).map_err(bad)?;
        }
        for &v in &self.added_vertices {
            g.remove_vertex(v).map_err(bad)?;
        }
        for &v in &self.removed_vertices {
            g.add_vertex_with_id(v).map_err(bad)?;
        }
        for &(u, v) in &self.removed_edges {
            g.add_edge(u, v).map_err(bad)?;
        }
        Ok(())
    }

    /// Copy with every vertex id shifted, for 1-based output.
    pub fn shifted(&self, offset: i64) -> ReductionStep {
        let s = |v: &VertexId| (*v as i64 + offset) as VertexId;
        let se = |&(u, v): &(VertexId, VertexId)| (s(&u), s(&v));
        ReductionStep {
            roles: self.roles.iter().map(s).collect(),
            removed_vertices: self.removed_vertices.iter().map(s).collect(),
            removed_edges: self.removed_edges.iter().map(se).collect(),
            added_vertices: self.added_vertices.iter().map(s).collect(),
            added_edges: self.added_edges.iter().map(se).collect(),
            ..self.clone()
        }
    }
}

/// Outcome of an admissibility check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Admissibility {
    pub admissible: bool,
    pub reason: Option<String>,
}

fn cc(g: &Graph) -> usize {
    connected_components(g).len()
}

/// Performs the rewrite without any admissibility checks.
fn rewrite(g: &Graph, rule: RuleId, roles: &[VertexId]) -> Result<(Graph, ReductionStep)> {
    check_template(g, rule, roles)
        .map_err(|reason| Error::TemplateMismatch { rule: rule.to_string(), reason })?;
    let rw = rules::rewrite(rule, roles);
    let mut h = g.clone();
    let mut removed_edges = Vec::new();
    for &(u, v) in &rw.remove_edges {
        h.remove_edge_between(u, v)?;
        removed_edges.push((u.min(v), u.max(v)));
    }
    for &v in &rw.remove_vertices {
        for (a, b) in h.remove_vertex(v)? {
            removed_edges.push((a.min(b), a.max(b)));
        }
    }
    let added_vertices: Vec<VertexId> = (0..rw.new_vertices).map(|_| h.add_vertex()).collect();
    let resolve = |e: End| match e {
        End::Old(v) => v,
        End::New(i) => added_vertices[i],
    };
    let mut added_edges = Vec::new();
    for &(a, b) in &rw.add_edges {
        let (a, b) = (resolve(a), resolve(b));
        h.add_edge(a, b)?;
        added_edges.push((a.min(b), a.max(b)));
    }
    let step = ReductionStep {
        rule,
        roles: roles.to_vec(),
        removed_vertices: rw.remove_vertices.clone(),
        removed_edges,
        added_vertices,
        added_edges,
        delta_n3: g.n_ge3() as i64 - h.n_ge3() as i64,
        delta_cc: cc(&h) as i64 - cc(g) as i64,
        delta_k: usize::from(rule.is_fpt()),
    };
    Ok((h, step))
}

fn structure_keys(ms: Vec<crate::patterns::PatternMatch>) -> BTreeSet<Vec<VertexId>> {
    ms.into_iter()
        .map(|m| {
            let mut v = m.vertices;
            v.sort_unstable();
            v
        })
        .collect()
}

/// Returns the first forbidden structure the rewrite creates, if any.
fn forbidden_created(g: &Graph, h: &Graph, step: &ReductionStep) -> Option<String> {
    let mut touched: Vec<VertexId> = step.added_vertices.clone();
    for &(u, v) in step.removed_edges.iter().chain(&step.added_edges) {
        touched.extend([u, v]);
    }
    touched.retain(|&v| h.contains(v));
    touched.sort_unstable();
    touched.dedup();
    // components touched by the rewrite must keep a goober if the graph splits
    let comps = connected_components(h);
    if comps.len() > 1 {
        for c in &comps {
            if c.iter().any(|v| touched.binary_search(v).is_ok()) && c.iter().all(|&v| h.degree(v) > 2) {
                return Some(format!("component of vertex {} has no goober", c[0]));
            }
        }
    }
    for &v in &touched {
        if h.multiplicity(v, v) > 0 {
            return Some(format!("loop at {v}"));
        }
        let ns: Vec<VertexId> = h.neighbors(v).collect();
        if ns.len() != h.neighbor_set(v).len() {
            let k2e = h.degree(v) == 2 && h.neighbor_set(v).iter().all(|&u| h.degree(u) == 2);
            if !k2e {
                return Some(format!("parallel edge at {v}"));
            }
        }
    }
    let post_near = ball(h, &touched, 2);
    let seeds: Vec<VertexId> = touched.iter().copied().filter(|&v| g.contains(v)).chain(step.removed_vertices.iter().copied()).collect();
    let pre_near = ball(g, &seeds, 2);
    let before = structure_keys(find_2necklaces_near(g, Some(&pre_near)));
    if let Some(m) = find_2necklaces_near(h, Some(&post_near)).into_iter().find(|m| {
        let mut k = m.vertices.clone();
        k.sort_unstable();
        !before.contains(&k)
    }) {
        return Some(format!("creates a {} at {:?}", m.kind, m.vertices));
    }
    let before = structure_keys(find_2blossoms_near(g, Some(&pre_near)));
    if let Some(m) = find_2blossoms_near(h, Some(&post_near)).into_iter().find(|m| {
        let mut k = m.vertices.clone();
        k.sort_unstable();
        !before.contains(&k)
    }) {
        return Some(format!("creates a {} at {:?}", m.kind, m.vertices));
    }
    None
}

fn specific_reason(g: &Graph, h: &Graph, rule: RuleId, r: &[VertexId], step: &ReductionStep) -> Option<String> {
    match rule {
        RuleId::R3 => {
            if step.delta_cc != 0 {
                return Some("rewrite changes the number of components".into());
            }
            let (v, w) = (r[0], r[4]);
            if h.degree(v) < 3 && h.degree(w) < 3 {
                return Some(format!("both {v} and {w} would drop below degree 3"));
            }
            None
        }
        RuleId::R4 => (step.delta_cc <= 0).then(|| "rewrite does not disconnect the graph".to_string()),
        RuleId::R5 => {
            let e = g.edge_between(r[0], r[1]).expect("template checked");
            bridges_and_cut_vertices(g).bridges.contains(&e).then(|| "edge is a bridge".to_string())
        }
        _ => None,
    }
}

fn evaluate(g: &Graph, rule: RuleId, roles: &[VertexId]) -> Result<(Graph, ReductionStep, Option<String>)> {
    let (h, step) = rewrite(g, rule, roles)?;
    let reason = if rule.is_fpt() {
        None
    } else {
        specific_reason(g, &h, rule, roles, &step).or_else(|| forbidden_created(g, &h, &step))
    };
    Ok((h, step, reason))
}

/// Decides whether `rule` may be applied at `roles`; errors when the roles do not fit the template.
pub fn admissible(g: &Graph, rule: RuleId, roles: &[VertexId]) -> Result<Admissibility> {
    let (_, _, reason) = evaluate(g, rule, roles)?;
    Ok(Admissibility { admissible: reason.is_none(), reason })
}

/// Applies an admissible rule and returns the rewritten graph with its step record.
pub fn apply(g: &Graph, rule: RuleId, roles: &[VertexId]) -> Result<(Graph, ReductionStep)> {
    let (h, step, reason) = evaluate(g, rule, roles)?;
    match reason {
        Some(reason) => Err(Error::Inadmissible { rule: rule.to_string(), reason }),
        None => Ok((h, step)),
    }
}

/// First admissible application in rule order, smallest match first.
pub fn next_application(g: &Graph) -> Option<(Graph, ReductionStep)> {
    for rule in STRUCTURAL_RULES {
        for roles in find_matches(g, rule) {
            if let Ok((h, step, None)) = evaluate(g, rule, &roles) {
                return Some((h, step));
            }
        }
    }
    None
}

/// Applies structural rules until none is admissible.
pub fn reduce_to_irreducible(g: &Graph) -> Result<(Graph, Vec<ReductionStep>)> {
    let verdict = check_invariant(g);
    if !verdict.holds {
        return Err(Error::Invariant(format!("{:?}", verdict.violation.expect("failing verdict has a witness"))));
    }
    let mut cur = g.clone();
    let mut trace = Vec::new();
    while let Some((h, step)) = next_application(&cur) {
        cur = h;
        trace.push(step);
    }
    Ok((cur, trace))
}

/// Removes every 2-terminal diamond and 2-terminal blossom, lowering `k` by one each time.
pub fn fpt_preprocess(g: &Graph, k: usize) -> (Graph, usize, Vec<ReductionStep>) {
    let mut cur = g.clone();
    let mut k = k;
    let mut trace = Vec::new();
    loop {
        let next = [RuleId::F1, RuleId::F2]
            .into_iter()
            .find_map(|rule| find_matches(&cur, rule).into_iter().next().map(|r| (rule, r)));
        let Some((rule, roles)) = next else { break };
        let (h, step) = rewrite(&cur, rule, &roles).expect("matched template");
        cur = h;
        k = k.saturating_sub(1);
        trace.push(step);
    }
    (cur, k, trace)
}

/// Replays a whole trace on a copy of `g`.
pub fn replay_trace(g: &Graph, steps: &[ReductionStep]) -> Result<Graph> {
    let mut h = g.clone();
    for s in steps {
        s.replay(&mut h)?;
    }
    Ok(h)
}

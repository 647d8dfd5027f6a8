//! Game instances on abelian Cayley graphs.
//!
//! An instance is a triple `(G, S, T)`: the cop side moves by elements of
//! `S`, the robber by elements of `T ⊆ S`. `0` is never stored in `S`; both
//! sides may always stay (the graph is reflexive). The instance is
//! undirected exactly when `S = -S`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{AbelianGroup, GroupElement};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InstanceError {
    #[error("cop moveset is empty after stripping the identity")]
    EmptyS,
    #[error("robber moveset is not a subset of the cop moveset")]
    TNotSubset,
    #[error("cop moveset does not generate the group")]
    NonGenerating,
    #[error("directedness hint says {hinted} but the moveset gives {actual}")]
    DirectedHintMismatch { hinted: bool, actual: bool },
    #[error("element {0} does not belong to the group")]
    UnknownElement(GroupElement),
    #[error("instance JSON is malformed: {0}")]
    BadJson(String),
    #[error(transparent)]
    Group(#[from] crate::group::GroupError),
}

/// Which moveset to use when expanding neighborhoods.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Cop,
    Robber,
}

/// Boundary shapes that are handled by a direct tactic instead of recursion.
///
/// `InversePair` and `SingletonT` are only reported for undirected
/// instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundaryClass {
    NotBoundary,
    EmptyT,
    CompleteGraph,
    TinyGroup,
    InversePair,
    SingletonT,
}

/// A cops-and-robbers instance `(G, S, T)` on a Cayley graph.
#[derive(Clone)]
pub struct GameInstance {
    group: Arc<AbelianGroup>,
    cop_moves: Vec<usize>,
    robber_moves: Vec<usize>,
    directed: bool,
}

impl std::fmt::Debug for GameInstance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GameInstance(n={}, s={}, t={}, {})",
            self.group.order(),
            self.cop_moves.len(),
            self.robber_moves.len(),
            if self.directed { "directed" } else { "undirected" }
        )
    }
}

/// Builds an instance from element indices. `0` is silently stripped from
/// both movesets; the directed flag is always recomputed from `S`.
pub fn build_instance(
    group: Arc<AbelianGroup>,
    cop_moves: &[usize],
    robber_moves: &[usize],
    directed_hint: Option<bool>,
) -> Result<GameInstance, InstanceError> {
    let strip = |moves: &[usize]| -> Vec<usize> {
        let set: BTreeSet<usize> = moves.iter().copied().filter(|&s| s != 0).collect();
        set.into_iter().collect()
    };
    let s = strip(cop_moves);
    let t = strip(robber_moves);
    if s.is_empty() && group.order() > 1 {
        return Err(InstanceError::EmptyS);
    }
    if !t.iter().all(|x| s.binary_search(x).is_ok()) {
        return Err(InstanceError::TNotSubset);
    }
    if !group.is_generating(&s) {
        return Err(InstanceError::NonGenerating);
    }
    let neg: BTreeSet<usize> = s.iter().map(|&x| group.neg(x)).collect();
    let directed = neg.iter().copied().collect::<Vec<_>>() != s;
    if let Some(hinted) = directed_hint {
        if hinted != directed {
            return Err(InstanceError::DirectedHintMismatch {
                hinted,
                actual: directed,
            });
        }
    }
    Ok(GameInstance {
        group,
        cop_moves: s,
        robber_moves: t,
        directed,
    })
}

impl GameInstance {
    pub fn group(&self) -> &Arc<AbelianGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Cop moveset `S`, ascending, identity excluded.
    pub fn cop_moves(&self) -> &[usize] {
        &self.cop_moves
    }

    /// Robber moveset `T`, ascending, identity excluded.
    pub fn robber_moves(&self) -> &[usize] {
        &self.robber_moves
    }

    pub fn moves(&self, side: Side) -> &[usize] {
        match side {
            Side::Cop => &self.cop_moves,
            Side::Robber => &self.robber_moves,
        }
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// `{v} ∪ {v + s : s in moveset}`; the stay option is always present.
    pub fn out_neighbors(&self, v: usize, side: Side) -> Vec<usize> {
        let mut out: BTreeSet<usize> = BTreeSet::new();
        out.insert(v);
        for &s in self.moves(side) {
            out.insert(self.group.add(v, s));
        }
        out.into_iter().collect()
    }

    /// Same instance with the robber restricted to `new_t` (indices must
    /// form a subset of `S`).
    pub fn with_robber_moves(&self, new_t: &[usize]) -> GameInstance {
        let t: BTreeSet<usize> = new_t.iter().copied().filter(|&x| x != 0).collect();
        debug_assert!(t.iter().all(|x| self.cop_moves.binary_search(x).is_ok()));
        GameInstance {
            group: Arc::clone(&self.group),
            cop_moves: self.cop_moves.clone(),
            robber_moves: t.into_iter().collect(),
            directed: self.directed,
        }
    }

    pub fn classify_boundary(&self) -> BoundaryClass {
        let n = self.group.order();
        if self.robber_moves.is_empty() {
            return BoundaryClass::EmptyT;
        }
        if self.cop_moves.len() == n - 1 {
            return BoundaryClass::CompleteGraph;
        }
        if n <= 2 {
            return BoundaryClass::TinyGroup;
        }
        if !self.directed {
            let t = &self.robber_moves;
            if t.len() <= 2 {
                let a = t[0];
                let mut pair: Vec<usize> = vec![a, self.group.neg(a)];
                pair.sort_unstable();
                pair.dedup();
                if &pair == t {
                    return BoundaryClass::InversePair;
                }
            }
            if t.len() == 1 {
                return BoundaryClass::SingletonT;
            }
        }
        BoundaryClass::NotBoundary
    }
}

/// JSON interchange schema: residue tuples for every element.
#[derive(Serialize, Deserialize)]
struct InstanceJson {
    factors: Vec<u64>,
    #[serde(rename = "S")]
    s: Vec<GroupElement>,
    #[serde(rename = "T")]
    t: Vec<GroupElement>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

pub fn export_graph(inst: &GameInstance, format: ExportFormat) -> Vec<u8> {
    match format {
        ExportFormat::Json => export_json(inst).into_bytes(),
        ExportFormat::Dot => export_dot(inst).into_bytes(),
    }
}

pub fn export_json(inst: &GameInstance) -> String {
    let grp = inst.group();
    let doc = InstanceJson {
        factors: grp.root_factors().to_vec(),
        s: inst.cop_moves.iter().map(|&i| grp.element(i)).collect(),
        t: inst.robber_moves.iter().map(|&i| grp.element(i)).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("instance serializes")
}

pub fn import_json(text: &str) -> Result<GameInstance, InstanceError> {
    let doc: InstanceJson =
        serde_json::from_str(text).map_err(|e| InstanceError::BadJson(e.to_string()))?;
    let group = AbelianGroup::product(&doc.factors)?;
    let to_indices = |elems: &[GroupElement]| -> Result<Vec<usize>, InstanceError> {
        elems
            .iter()
            .map(|e| {
                group
                    .index_of(e)
                    .ok_or_else(|| InstanceError::UnknownElement(e.clone()))
            })
            .collect()
    };
    let s = to_indices(&doc.s)?;
    let t = to_indices(&doc.t)?;
    build_instance(group, &s, &t, None)
}

/// DOT serialization. Vertices are labeled by coordinate tuples; loops are
/// omitted and noted as a graph attribute; undirected instances emit each
/// edge once.
pub fn export_dot(inst: &GameInstance) -> String {
    let grp = inst.group();
    let n = grp.order();
    let mut out = String::new();
    let name = if inst.is_directed() { "digraph" } else { "graph" };
    let edge = if inst.is_directed() { "->" } else { "--" };
    let _ = writeln!(out, "{name} cayley {{");
    let _ = writeln!(out, "  comment=\"reflexive: every vertex has an implicit loop\";");
    for v in 0..n {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", grp.element(v));
    }
    for v in 0..n {
        for &s in inst.cop_moves() {
            let w = grp.add(v, s);
            if !inst.is_directed() && w < v {
                continue; // each undirected edge once
            }
            let _ = writeln!(out, "  {v} {edge} {w};");
        }
    }
    let _ = writeln!(out, "}}");
    out
}

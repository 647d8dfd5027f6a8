//! Reference solver: a direct fixpoint over joint cop moves.
//!
//! No sub-move sequentialization, no translation symmetry, no multiset
//! tricks beyond sorting the cop tuple. Exponential in the cop count, so
//! only usable on tiny instances — which is the point: it cross-validates
//! the reductions in the main solver.

use std::collections::BTreeMap;

use crate::cayley::{GameInstance, Side};
use crate::solver::Winner;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum NaiveSide {
    CopsToMove,
    RobberToMove,
}

pub struct NaiveResult {
    pub winner: Winner,
    pub k: usize,
    win: BTreeMap<(Vec<usize>, usize, NaiveSide), bool>,
}

impl NaiveResult {
    /// Winner of a state; cops are sorted internally.
    pub fn state_winner(&self, cops: &[usize], robber: usize, side: NaiveSide) -> Winner {
        let mut c = cops.to_vec();
        c.sort_unstable();
        if c.contains(&robber) {
            return Winner::CopsWin;
        }
        if *self.win.get(&(c, robber, side)).unwrap_or(&false) {
            Winner::CopsWin
        } else {
            Winner::RobberWin
        }
    }
}

fn sorted_multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in from..n {
            cur.push(v);
            rec(n, k, v, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Enumerates all joint cop moves (cartesian product of per-cop options).
fn joint_moves(inst: &GameInstance, cops: &[usize]) -> Vec<Vec<usize>> {
    let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
    for &c in cops {
        let opts = inst.out_neighbors(c, Side::Cop);
        let mut next = Vec::with_capacity(acc.len() * opts.len());
        for partial in &acc {
            for &dest in &opts {
                let mut p = partial.clone();
                p.push(dest);
                next.push(p);
            }
        }
        acc = next;
    }
    acc
}

/// Solves the game with `k` cops by Kleene iteration on the full state
/// space, with cop rounds as single joint moves.
pub fn naive_solve(inst: &GameInstance, k: usize) -> NaiveResult {
    let n = inst.order();
    if n == 1 {
        return NaiveResult {
            winner: Winner::CopsWin,
            k,
            win: BTreeMap::new(),
        };
    }
    let placements = sorted_multisets(n, k);
    let mut win: BTreeMap<(Vec<usize>, usize, NaiveSide), bool> = BTreeMap::new();
    for cops in &placements {
        for r in 0..n {
            if cops.contains(&r) {
                continue; // capture states are terminal, not stored
            }
            win.insert((cops.clone(), r, NaiveSide::CopsToMove), false);
            win.insert((cops.clone(), r, NaiveSide::RobberToMove), false);
        }
    }
    loop {
        let mut changed = false;
        let keys: Vec<_> = win
            .iter()
            .filter(|(_, &v)| !v)
            .map(|(k, _)| k.clone())
            .collect();
        for key in keys {
            let (cops, r, side) = (&key.0, key.1, key.2);
            let now_win = match side {
                NaiveSide::CopsToMove => joint_moves(inst, cops).into_iter().any(|dests| {
                    if dests.contains(&r) {
                        return true; // capture during the cop round
                    }
                    let mut c = dests;
                    c.sort_unstable();
                    *win.get(&(c, r, NaiveSide::RobberToMove)).unwrap()
                }),
                NaiveSide::RobberToMove => {
                    inst.out_neighbors(r, Side::Robber).into_iter().all(|dest| {
                        if cops.contains(&dest) {
                            return true; // moving onto a cop is capture
                        }
                        *win.get(&(cops.clone(), dest, NaiveSide::CopsToMove)).unwrap()
                    })
                }
            };
            if now_win {
                win.insert(key, true);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    // Cops place first, the robber second, then cops move.
    let winner = if placements.iter().any(|cops| {
        (0..n).all(|r| {
            cops.contains(&r) || *win.get(&(cops.clone(), r, NaiveSide::CopsToMove)).unwrap()
        })
    }) {
        Winner::CopsWin
    } else {
        Winner::RobberWin
    };
    NaiveResult { winner, k, win }
}

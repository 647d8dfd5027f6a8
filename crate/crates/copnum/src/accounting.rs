//! Guard accounting: which difference elements `k` let a single cop punish
//! which robber moves.
//!
//! A cop sitting at `robber + γ·k` can respond to any robber move `a` with
//! `a - k`, provided `a - k ∈ S ∪ {0}`; each such exchange shrinks γ by one,
//! so the robber can only afford finitely many plays of a guarded move.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::cayley::{BoundaryClass, GameInstance};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AccountingError {
    #[error("the difference element k must be nonzero")]
    ZeroK,
    #[error("operation requires a non-boundary instance, got {0:?}")]
    BoundaryInstance(BoundaryClass),
    #[error("no pair (a, b) with a + b != 0 exists in the robber moveset")]
    NoValidPair,
}

/// A difference element together with the robber moves it guards and the
/// reply that realizes each guard.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuardCertificate {
    /// The guarded difference, `k != 0`.
    pub k: usize,
    /// Guarded robber moves, each mapped to the reply `b ∈ S ∪ {0}` with
    /// `a - b = k`. Keys ascending.
    pub responses: BTreeMap<usize, usize>,
}

impl GuardCertificate {
    pub fn guarded(&self) -> impl Iterator<Item = usize> + '_ {
        self.responses.keys().copied()
    }

    pub fn guarded_count(&self) -> usize {
        self.responses.len()
    }

    pub fn covers(&self, a: usize) -> bool {
        self.responses.contains_key(&a)
    }

    /// Keeps only the guards for moves in `keep`.
    pub fn restricted_to(&self, keep: &[usize]) -> GuardCertificate {
        GuardCertificate {
            k: self.k,
            responses: self
                .responses
                .iter()
                .filter(|(a, _)| keep.contains(a))
                .map(|(&a, &b)| (a, b))
                .collect(),
        }
    }
}

/// All robber moves guarded by `k`: `{a ∈ T : a - k ∈ S ∪ {0}}` with
/// response `a - k`.
pub fn accounted_set(inst: &GameInstance, k: usize) -> Result<GuardCertificate, AccountingError> {
    if k == 0 {
        return Err(AccountingError::ZeroK);
    }
    let grp = inst.group();
    let mut responses = BTreeMap::new();
    for &a in inst.robber_moves() {
        let b = grp.sub(a, k);
        if b == 0 || inst.cop_moves().binary_search(&b).is_ok() {
            responses.insert(a, b);
        }
    }
    Ok(GuardCertificate { k, responses })
}

/// The `k != 0` guarding the most robber moves, ties broken by the smallest
/// `k`. The count is at least `⌈|T||S| / (|G|-1)⌉` by pigeonhole on the
/// difference multiset.
pub fn best_accounting_element(
    inst: &GameInstance,
) -> Result<GuardCertificate, AccountingError> {
    let boundary = inst.classify_boundary();
    if boundary != BoundaryClass::NotBoundary {
        return Err(AccountingError::BoundaryInstance(boundary));
    }
    let grp = inst.group();
    let mut tally = vec![0u32; grp.order()];
    for &a in inst.robber_moves() {
        for &b in std::iter::once(&0).chain(inst.cop_moves().iter()) {
            if a == b {
                continue;
            }
            tally[grp.sub(a, b)] += 1;
        }
    }
    let mut best = 1usize;
    for k in 2..grp.order() {
        if tally[k] > tally[best] {
            best = k;
        }
    }
    accounted_set(inst, best)
}

/// For undirected instances: the first pair `a, b ∈ T` (in element order)
/// with `a + b != 0`. The difference `k = a + b` guards both, with replies
/// `-b` and `-a`. The certificate is deliberately restricted to the pair.
pub fn frankl_pair(inst: &GameInstance) -> Result<GuardCertificate, AccountingError> {
    let grp = inst.group();
    let t = inst.robber_moves();
    for &a in t {
        for &b in t {
            if a == b {
                continue;
            }
            let k = grp.add(a, b);
            if k == 0 {
                continue;
            }
            let mut responses = BTreeMap::new();
            responses.insert(a, grp.neg(b));
            responses.insert(b, grp.neg(a));
            return Ok(GuardCertificate { k, responses });
        }
    }
    Err(AccountingError::NoValidPair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::build_instance;
    use crate::group::AbelianGroup;
    use std::sync::Arc;

    fn zinst(n: u64, s: &[usize], t: &[usize]) -> GameInstance {
        build_instance(AbelianGroup::product(&[n]).unwrap(), s, t, None).unwrap()
    }

    /// Brute-force difference multiset: counts of a - b over a in T,
    /// b in S ∪ {0}, a != b. Independent of the implementation above.
    fn tally_oracle(inst: &GameInstance) -> Vec<u32> {
        let grp = inst.group();
        let mut m = vec![0u32; grp.order()];
        for &a in inst.robber_moves() {
            for b in std::iter::once(0).chain(inst.cop_moves().iter().copied()) {
                if a != b {
                    m[grp.sub(a, b)] += 1;
                }
            }
        }
        m
    }

    #[test]
    fn accounted_set_examples() {
        let i = zinst(7, &[1, 2, 5, 6], &[1, 2, 5, 6]);
        let cert = accounted_set(&i, 3).unwrap();
        let expected: BTreeMap<usize, usize> = [(1, 5), (2, 6), (5, 2)].into_iter().collect();
        assert_eq!(cert.responses, expected);

        // k not realized as any difference guards nothing.
        let sparse = zinst(9, &[1, 8], &[1, 8]);
        let m = tally_oracle(&sparse);
        let dead = (1..9).find(|&k| m[k] == 0).unwrap();
        assert_eq!(accounted_set(&sparse, dead).unwrap().guarded_count(), 0);

        // Directed: a guards itself via the stay reply.
        let d = zinst(5, &[1, 2], &[1, 2]);
        let cert = accounted_set(&d, 1).unwrap();
        assert_eq!(cert.responses.get(&1), Some(&0));

        assert_eq!(accounted_set(&d, 0).unwrap_err(), AccountingError::ZeroK);
    }

    #[test]
    fn best_accounting_element_examples() {
        let i = zinst(7, &[1, 2, 5, 6], &[1, 2, 5, 6]);
        // Oracle: the tally over all k.
        let m = tally_oracle(&i);
        assert_eq!(&m[1..], &[3, 2, 3, 3, 2, 3]);
        let best = best_accounting_element(&i).unwrap();
        assert_eq!(best.k, 1);
        assert_eq!(best.guarded().collect::<Vec<_>>(), vec![1, 2, 6]);
        // Pigeonhole floor for this instance: ceil(4*4/6) = 3.
        assert!(best.guarded_count() >= 3);

        let b = zinst(5, &[1, 2, 3, 4], &[1]);
        assert!(matches!(
            best_accounting_element(&b).unwrap_err(),
            AccountingError::BoundaryInstance(BoundaryClass::CompleteGraph)
        ));
    }

    #[test]
    fn pigeonhole_bound_exhaustive() {
        // Sweep a family of instances and compare against the oracle tally.
        let cases: Vec<(u64, Vec<usize>, Vec<usize>)> = vec![
            (7, vec![1, 2, 5, 6], vec![1, 2, 5, 6]),
            (9, vec![1, 8, 3, 6], vec![1, 8, 3]),
            (12, vec![1, 11, 2, 10, 5, 7], vec![1, 11, 5]),
            (11, vec![1, 10, 3, 8], vec![1, 10, 3, 8]),
        ];
        for (n, s, t) in cases {
            let i = zinst(n, &s, &t);
            if i.classify_boundary() != BoundaryClass::NotBoundary {
                continue;
            }
            let m = tally_oracle(&i);
            let oracle_best = (1..i.order()).max_by_key(|&k| (m[k], std::cmp::Reverse(k))).unwrap();
            let best = best_accounting_element(&i).unwrap();
            assert_eq!(m[best.k], m[oracle_best], "must reach the max tally");
            assert_eq!(best.guarded_count() as u32, m[best.k]);
            let t_len = i.robber_moves().len();
            let s_len = i.cop_moves().len();
            let floor = (t_len * s_len).div_ceil(i.order() - 1);
            assert!(best.guarded_count() >= floor);
        }
    }

    #[test]
    fn certificates_are_sound() {
        let cases: Vec<(u64, Vec<usize>, Vec<usize>)> = vec![
            (7, vec![1, 2, 5, 6], vec![1, 2, 5, 6]),
            (9, vec![1, 8, 3, 6], vec![1, 8, 3]),
            (5, vec![1, 2], vec![1, 2]),
        ];
        for (n, s, t) in cases {
            let i = zinst(n, &s, &t);
            let grp = i.group();
            for k in 1..i.order() {
                let cert = accounted_set(&i, k).unwrap();
                for (&a, &b) in &cert.responses {
                    assert_eq!(grp.sub(a, b), cert.k);
                    assert!(b == 0 || i.cop_moves().binary_search(&b).is_ok());
                }
            }
        }
    }

    #[test]
    fn frankl_pair_examples() {
        let i = zinst(7, &[1, 2, 5, 6], &[1, 2, 5, 6]);
        let cert = frankl_pair(&i).unwrap();
        assert_eq!(cert.k, 3);
        let expected: BTreeMap<usize, usize> = [(1, 5), (2, 6)].into_iter().collect();
        assert_eq!(cert.responses, expected);
        // a - (-b) = a + b for both members of the pair.
        assert_eq!(i.group().sub(1, 5), 3);
        assert_eq!(i.group().sub(2, 6), 3);

        // First pair in order is (1, 3); (1, 8) would be rejected as 1+8=0.
        let j = zinst(9, &[1, 8, 3, 6], &[1, 8, 3]);
        let cert = frankl_pair(&j).unwrap();
        assert_eq!(cert.k, 4);
        assert!(cert.covers(1) && cert.covers(3));

        let pairless = zinst(9, &[1, 8, 3, 6], &[1, 8]);
        assert_eq!(frankl_pair(&pairless).unwrap_err(), AccountingError::NoValidPair);
    }

    #[test]
    fn frankl_pair_exists_off_boundary() {
        // For undirected non-boundary instances a valid pair always exists.
        let cases: Vec<(u64, Vec<usize>)> = vec![
            (7, vec![1, 2, 5, 6]),
            (9, vec![1, 8, 3, 6]),
            (12, vec![1, 11, 2, 10, 5, 7]),
        ];
        for (n, s) in cases {
            let i = zinst(n, &s, &s);
            assert!(!i.is_directed());
            assert_eq!(i.classify_boundary(), BoundaryClass::NotBoundary);
            frankl_pair(&i).unwrap();
        }
    }
}

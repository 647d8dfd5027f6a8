//! Dense state indexing for the retrograde solver.
//!
//! Cop positions form sorted multisets; a round splits them into the
//! already-moved part `A` and the not-yet-moved part `B`. Both parts are
//! ranked with the combinatorial number system (colex on the strictly
//! increasing image `d_i + i`), which gives every game state a dense index
//! so the solver runs on flat tables instead of hash maps.

/// Binomial table `C(e, r)` for `e <= max_e`, `r <= max_r`.
pub(crate) struct Binomials {
    max_r: usize,
    table: Vec<u64>,
}

impl Binomials {
    pub fn new(max_e: usize, max_r: usize) -> Binomials {
        let mut table = vec![0u64; (max_e + 1) * (max_r + 1)];
        for e in 0..=max_e {
            table[e * (max_r + 1)] = 1;
            for r in 1..=max_r.min(e) {
                table[e * (max_r + 1) + r] = if e == r {
                    1
                } else {
                    table[(e - 1) * (max_r + 1) + r - 1] + table[(e - 1) * (max_r + 1) + r]
                };
            }
        }
        Binomials { max_r, table }
    }

    #[inline]
    pub fn c(&self, e: usize, r: usize) -> u64 {
        if r > self.max_r || r > e {
            return if r == 0 { 1 } else { 0 };
        }
        self.table[e * (self.max_r + 1) + r]
    }
}

/// Number of multisets of size `size` over an alphabet of `m` symbols.
pub(crate) fn multiset_count(binom: &Binomials, m: usize, size: usize) -> u64 {
    if size == 0 {
        1
    } else {
        binom.c(m + size - 1, size)
    }
}

/// Rank of a sorted multiset (colex order).
#[inline]
pub(crate) fn rank_multiset(binom: &Binomials, digits: &[usize]) -> u64 {
    let mut rank = 0u64;
    for (i, &d) in digits.iter().enumerate() {
        rank += binom.c(d + i, i + 1);
    }
    rank
}

/// Inverse of [`rank_multiset`]; writes the sorted digits into `out`.
pub(crate) fn unrank_multiset(binom: &Binomials, mut rank: u64, size: usize, m: usize, out: &mut Vec<usize>) {
    out.clear();
    out.resize(size, 0);
    let mut e = m + size; // exclusive upper bound for e_i + 1
    for i in (0..size).rev() {
        // Largest e with C(e, i+1) <= rank.
        let mut ei = e - 1;
        while binom.c(ei, i + 1) > rank {
            ei -= 1;
        }
        rank -= binom.c(ei, i + 1);
        out[i] = ei - i;
        e = ei + 1;
    }
    debug_assert_eq!(rank, 0);
}

/// State layout for one `(n, k)` configuration.
///
/// Phases `0..k` hold cop sub-move states `(A, B)` with `|A| = phase`;
/// phase `k` holds robber-to-move states. In normalized mode the robber is
/// pinned to vertex 0 and cop digits are `position - 1`; in explicit mode
/// every combinatorial index is additionally multiplied by `n` for the
/// robber position, and cop digits are positions themselves.
pub(crate) struct StateSpace {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub normalized: bool,
    pub binom: Binomials,
    /// multiset_count(m, j) for j = 0..=k
    pub msc: Vec<u64>,
    /// phase start offsets; offset[k+1] = total
    pub offset: Vec<u64>,
    pub total: u64,
}

impl StateSpace {
    pub fn new(n: usize, k: usize, normalized: bool) -> StateSpace {
        let m = if normalized { n - 1 } else { n };
        let binom = Binomials::new(m + k + 1, k + 1);
        let msc: Vec<u64> = (0..=k).map(|j| multiset_count(&binom, m, j)).collect();
        let robber_dim = if normalized { 1 } else { n as u64 };
        let mut offset = Vec::with_capacity(k + 2);
        let mut acc = 0u64;
        for j in 0..k {
            offset.push(acc);
            acc += msc[j] * msc[k - j] * robber_dim;
        }
        offset.push(acc); // phase k = robber-to-move
        acc += msc[k] * robber_dim;
        offset.push(acc);
        StateSpace {
            n,
            k,
            m,
            normalized,
            binom,
            msc,
            offset,
            total: acc,
        }
    }

    /// Total states and a successor-arc estimate, computed without
    /// allocating; used for the budget guard.
    pub fn estimate(n: usize, k: usize, normalized: bool, cop_branch: usize, robber_branch: usize) -> (u128, u128) {
        let m = if normalized { n - 1 } else { n };
        let binom = Binomials::new(m + k + 1, k + 1);
        let robber_dim = if normalized { 1u128 } else { n as u128 };
        let mut states = 0u128;
        let mut arcs = 0u128;
        for j in 0..k {
            let c = multiset_count(&binom, m, j) as u128 * multiset_count(&binom, m, k - j) as u128 * robber_dim;
            states += c;
            arcs += c * cop_branch as u128;
        }
        let rtm = multiset_count(&binom, m, k) as u128 * robber_dim;
        states += rtm;
        arcs += rtm * robber_branch as u128;
        (states, arcs)
    }

    #[inline]
    pub fn robber_dim(&self) -> u64 {
        if self.normalized {
            1
        } else {
            self.n as u64
        }
    }

    /// Index of a cop sub-move state. `a` and `b` are sorted digit slices.
    #[inline]
    pub fn cop_state(&self, a: &[usize], b: &[usize], robber: usize) -> u64 {
        let j = a.len();
        debug_assert!(j < self.k && a.len() + b.len() == self.k);
        let comb = rank_multiset(&self.binom, a) * self.msc[self.k - j] + rank_multiset(&self.binom, b);
        self.offset[j] + comb * self.robber_dim() + if self.normalized { 0 } else { robber as u64 }
    }

    /// Index of a robber-to-move state. `c` is a sorted digit slice.
    #[inline]
    pub fn rtm_state(&self, c: &[usize], robber: usize) -> u64 {
        let comb = rank_multiset(&self.binom, c);
        self.offset[self.k] + comb * self.robber_dim() + if self.normalized { 0 } else { robber as u64 }
    }

    /// Phase of a state index (`k` means robber-to-move).
    #[inline]
    pub fn phase_of(&self, ix: u64) -> usize {
        // k is tiny; linear scan beats binary search here.
        let mut j = 0;
        while ix >= self.offset[j + 1] {
            j += 1;
        }
        j
    }

    /// Decodes a state. Returns (phase, a_digits, b_digits, robber);
    /// for phase == k the multiset is written to `a`.
    pub fn decode(&self, ix: u64, a: &mut Vec<usize>, b: &mut Vec<usize>) -> (usize, usize) {
        let j = self.phase_of(ix);
        let rel = ix - self.offset[j];
        let (comb, robber) = if self.normalized {
            (rel, 0usize)
        } else {
            ((rel / self.n as u64), (rel % self.n as u64) as usize)
        };
        if j == self.k {
            unrank_multiset(&self.binom, comb, self.k, self.m, a);
            b.clear();
        } else {
            let rank_a = comb / self.msc[self.k - j];
            let rank_b = comb % self.msc[self.k - j];
            unrank_multiset(&self.binom, rank_a, j, self.m, a);
            unrank_multiset(&self.binom, rank_b, self.k - j, self.m, b);
        }
        (j, robber)
    }
}

/// Inserts `x` into a sorted vector, keeping it sorted.
#[inline]
pub(crate) fn insert_sorted(v: &mut Vec<usize>, x: usize) {
    let pos = v.partition_point(|&y| y < x);
    v.insert(pos, x);
}

/// Sparse starting positions for the approximate small-`d` search.
///
/// Positions are 1-based: `set_a` holds `i` with `i mod k = 1` and `set_b`
/// holds `i` with `ceil(i/k) mod k = 1`, so every `k x k` grid of alignments
/// contains one pair from `set_a x set_b`. The block size is the largest `k`
/// with `k^2 - 1 <= floor(eps * d)`, which is what guarantees that one such
/// pair falls within the first `floor(eps * d) + 1` alignments of any match.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSets {
    pub k: usize,
    pub n: usize,
}

impl BlockSets {
    pub fn new(n: usize, d: usize, eps: f64) -> Self {
        let slack = super::floor_eps(d, eps);
        BlockSets {
            k: (slack + 1).isqrt().max(1),
            n,
        }
    }

    pub fn in_a(&self, i: usize) -> bool {
        i >= 1 && (i - 1) % self.k == 0
    }

    pub fn in_b(&self, i: usize) -> bool {
        i >= 1 && (i.div_ceil(self.k) - 1) % self.k == 0
    }

    /// 1-based members of `set_a` not exceeding `limit`.
    pub fn set_a(&self, limit: usize) -> Vec<usize> {
        (1..=limit.min(self.n)).filter(|&i| self.in_a(i)).collect()
    }

    pub fn set_b(&self, limit: usize) -> Vec<usize> {
        (1..=limit.min(self.n)).filter(|&i| self.in_b(i)).collect()
    }
}

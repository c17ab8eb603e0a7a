use std::ops::Range;

use super::text::{QueryReader, Symbol};

const MOD_A: u64 = (1 << 61) - 1;
const MOD_B: u64 = 0xffff_fffb; // largest prime below 2^32
const BASE_A: u64 = 0x5bd1_e995_3c6e_f372 % MOD_A;
const BASE_B: u64 = 0x9e37_79b9 % MOD_B;

/// Double-modulus polynomial hash of a substring, tagged with its length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FingerprintKey {
    pub len: usize,
    pub h1: u64,
    pub h2: u64,
}

#[inline]
fn mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Prefix hashes of a whole string, read once through a reader.
pub struct RollingHash {
    pre_a: Vec<u64>,
    pre_b: Vec<u64>,
    pow_a: Vec<u64>,
    pow_b: Vec<u64>,
}

impl RollingHash {
    pub fn new(reader: &QueryReader<'_>) -> Self {
        let n = reader.len();
        let (mut pre_a, mut pre_b) = (Vec::with_capacity(n + 1), Vec::with_capacity(n + 1));
        let (mut pow_a, mut pow_b) = (Vec::with_capacity(n + 1), Vec::with_capacity(n + 1));
        pre_a.push(0);
        pre_b.push(0);
        pow_a.push(1);
        pow_b.push(1);
        for i in 0..n {
            let c = u64::from(reader.get(i)) + 1;
            pre_a.push((mul(pre_a[i], BASE_A, MOD_A) + c % MOD_A) % MOD_A);
            pre_b.push((mul(pre_b[i], BASE_B, MOD_B) + c % MOD_B) % MOD_B);
            pow_a.push(mul(pow_a[i], BASE_A, MOD_A));
            pow_b.push(mul(pow_b[i], BASE_B, MOD_B));
        }
        RollingHash {
            pre_a,
            pre_b,
            pow_a,
            pow_b,
        }
    }

    pub fn key(&self, range: Range<usize>) -> FingerprintKey {
        let (l, r) = (range.start, range.end);
        let len = r - l;
        let h1 = (self.pre_a[r] + MOD_A - mul(self.pre_a[l], self.pow_a[len], MOD_A)) % MOD_A;
        let h2 = (self.pre_b[r] + MOD_B - mul(self.pre_b[l], self.pow_b[len], MOD_B)) % MOD_B;
        FingerprintKey { len, h1, h2 }
    }
}

/// The exact encoding `sum v(s_i) * sigma^(i-1)` with `v` the identity,
/// or `None` once it leaves 128 bits.
pub fn exact_value(s: &[Symbol], alphabet: u64) -> Option<u128> {
    let mut value: u128 = 0;
    let mut weight: u128 = 1;
    for (i, &c) in s.iter().enumerate() {
        value = value.checked_add(u128::from(c).checked_mul(weight)?)?;
        if i + 1 < s.len() {
            weight = weight.checked_mul(u128::from(alphabet))?;
        }
    }
    Some(value)
}

//! Seeded random instances with planted structure, shared by the benchmark
//! harness and the test suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::strings::{ulam_oracle, Symbol, Text};

pub fn random_symbols<R: Rng>(rng: &mut R, n: usize, sigma: u32) -> Vec<Symbol> {
    (0..n).map(|_| rng.random_range(0..sigma)).collect()
}

pub fn random_text<R: Rng>(rng: &mut R, n: usize, sigma: u32) -> Text {
    Text::new(random_symbols(rng, n, sigma), sigma.into()).expect("valid by construction")
}

/// Two random strings sharing one planted block of length `d`.
pub fn planted_common<R: Rng>(rng: &mut R, n: usize, d: usize, sigma: u32) -> (Text, Text) {
    assert!(1 <= d && d <= n);
    let mut a = random_symbols(rng, n, sigma);
    let mut b = random_symbols(rng, n, sigma);
    let (i, j) = (rng.random_range(0..=n - d), rng.random_range(0..=n - d));
    for t in 0..d {
        let c = rng.random_range(0..sigma);
        a[i + t] = c;
        b[j + t] = c;
    }
    (
        Text::new(a, sigma.into()).expect("in range"),
        Text::new(b, sigma.into()).expect("in range"),
    )
}

fn shuffled<R: Rng>(rng: &mut R, n: usize) -> Vec<Symbol> {
    let mut v: Vec<Symbol> = (0..n as Symbol).collect();
    v.shuffle(rng);
    v
}

/// Two random permutations of `0..n` sharing a planted run of length `d`.
pub fn planted_perm_common<R: Rng>(rng: &mut R, n: usize, d: usize) -> (Text, Text) {
    assert!(1 <= d && d <= n);
    let a = shuffled(rng, n);
    let (i, j) = (rng.random_range(0..=n - d), rng.random_range(0..=n - d));
    let block = &a[i..i + d];
    let mut rest: Vec<Symbol> = a.iter().copied().filter(|s| !block.contains(s)).collect();
    rest.shuffle(rng);
    let mut b = Vec::with_capacity(n);
    b.extend_from_slice(&rest[..j]);
    b.extend_from_slice(block);
    b.extend_from_slice(&rest[j..]);
    (
        Text::permutation(a).expect("permutation"),
        Text::permutation(b).expect("permutation"),
    )
}

/// Random string with a planted palindrome of length `d`.
pub fn planted_palindrome<R: Rng>(rng: &mut R, n: usize, d: usize, sigma: u32) -> Text {
    assert!(1 <= d && d <= n);
    let mut s = random_symbols(rng, n, sigma);
    let start = rng.random_range(0..=n - d);
    for t in 0..d / 2 {
        s[start + d - 1 - t] = s[start + t];
    }
    Text::new(s, sigma.into()).expect("in range")
}

/// A short random word repeated to length `n`, with `flips` random symbols
/// overwritten. Dense in long periodic palindromes when the word is one.
pub fn periodic_text<R: Rng>(rng: &mut R, n: usize, period: usize, sigma: u32, flips: usize) -> Text {
    let word = random_symbols(rng, period.max(1), sigma);
    let mut s: Vec<Symbol> = (0..n).map(|i| word[i % word.len()]).collect();
    for _ in 0..flips {
        let i = rng.random_range(0..n);
        s[i] = rng.random_range(0..sigma);
    }
    Text::new(s, sigma.into()).expect("in range")
}

/// Identity permutation against a copy with `moves` elements relocated,
/// resampled until the Ulam distance is exactly `2 * moves`.
pub fn planted_ulam<R: Rng>(rng: &mut R, n: usize, moves: usize) -> (Text, Text) {
    assert!(moves <= n / 2, "too many relocations for n = {n}");
    let a: Vec<Symbol> = (0..n as Symbol).collect();
    let ta = Text::permutation(a.clone()).expect("identity");
    loop {
        let mut b = a.clone();
        let mut picked = a.clone();
        picked.shuffle(rng);
        for &sym in &picked[..moves] {
            let from = b.iter().position(|&x| x == sym).expect("present");
            b.remove(from);
            let to = rng.random_range(0..=b.len());
            b.insert(to, sym);
        }
        let tb = Text::permutation(b).expect("permutation");
        if ulam_oracle(&ta, &tb).expect("non-repetitive") == 2 * moves as u64 {
            return (ta, tb);
        }
    }
}

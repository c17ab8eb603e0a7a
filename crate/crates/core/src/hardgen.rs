//! Adversarial instances with a certified answer: hidden-collision LCS
//! inputs (large alphabet and binary), palindromes hiding one marked bit,
//! and Ulam pairs differing by one adjacent swap.

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::strings::{format_texts, lcs_oracle, lps_oracle, ulam_oracle, Symbol, Text};

/// Default `d_alpha` of the binary codeword length `ceil(d_alpha log2 n)`.
pub const DEFAULT_D_ALPHA: f64 = 12.0;

/// What the construction guarantees about the answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlantedAnswer {
    Exact(u64),
    LessThan(u64),
    AtLeast(u64),
}

impl PlantedAnswer {
    pub fn admits(&self, value: u64) -> bool {
        match *self {
            PlantedAnswer::Exact(v) => value == v,
            PlantedAnswer::LessThan(v) => value < v,
            PlantedAnswer::AtLeast(v) => value >= v,
        }
    }
}

#[derive(Clone, Debug)]
pub struct HardInstance {
    pub generator: &'static str,
    pub params: Value,
    pub seed: u64,
    pub texts: Vec<Text>,
    pub planted_answer: PlantedAnswer,
    pub regime: &'static str,
    /// Rejected draws before this instance was accepted.
    pub resamples: u64,
}

#[derive(Serialize)]
struct Sidecar<'a> {
    generator: &'a str,
    params: &'a Value,
    seed: u64,
    planted_answer: PlantedAnswer,
}

impl HardInstance {
    pub fn sidecar_json(&self) -> String {
        let sidecar = Sidecar {
            generator: self.generator,
            params: &self.params,
            seed: self.seed,
            planted_answer: self.planted_answer,
        };
        serde_json::to_string_pretty(&sidecar).expect("plain data") + "\n"
    }

    /// Value of the relevant exact oracle on this instance.
    pub fn oracle_answer(&self) -> Result<u64> {
        match self.generator {
            "ed-lcs" | "bin-lcs" => Ok(lcs_oracle(&self.texts[0], &self.texts[1]).length as u64),
            "lps-hard" => Ok(lps_oracle(&self.texts[0]).length as u64),
            "ulam-swap" => ulam_oracle(&self.texts[0], &self.texts[1]),
            other => Err(Error::param(format!("unknown generator {other}"))),
        }
    }

    /// Writes `<generator>-<seed>.txt` and the matching `.json` sidecar.
    pub fn write_to(&self, dir: impl AsRef<Path>) -> Result<(PathBuf, PathBuf)> {
        let dir = dir.as_ref();
        std::fs::create_dir_all(dir)?;
        let stem = format!("{}-{}", self.generator, self.seed);
        let txt = dir.join(format!("{stem}.txt"));
        let side = dir.join(format!("{stem}.json"));
        std::fs::write(&txt, format_texts(&self.texts))?;
        std::fs::write(&side, self.sidecar_json())?;
        Ok((txt, side))
    }

    fn certified(self) -> Result<Self> {
        let got = self.oracle_answer()?;
        if !self.planted_answer.admits(got) {
            return Err(Error::param(format!(
                "{} instance (seed {}) has oracle answer {got}, planted {:?}",
                self.generator, self.seed, self.planted_answer
            )));
        }
        Ok(self)
    }
}

/// `2n` symbols split into two halves, all distinct or with one symbol
/// occurring once in each half.
fn split_list(rng: &mut ChaCha8Rng, n: usize, collide: bool) -> (Vec<Symbol>, Vec<Symbol>) {
    let m = 2 * n;
    let mut list: Vec<Symbol> = (0..m as Symbol).collect();
    list.shuffle(rng);
    // replace one symbol by a copy of another
    let dup = list[0];
    if collide {
        list[m - 1] = dup;
    }
    loop {
        list.shuffle(rng);
        let (a, b) = list.split_at(n);
        if !collide || (a.contains(&dup) && b.contains(&dup)) {
            return (a.to_vec(), b.to_vec());
        }
    }
}

pub fn gen_ed_to_lcs(n: usize, collide: bool, seed: u64) -> Result<HardInstance> {
    if n < 2 {
        return Err(Error::param("ed-lcs needs n >= 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (a, b) = split_list(&mut rng, n, collide);
    let sigma = 2 * n as u64;
    HardInstance {
        generator: "ed-lcs",
        params: json!({ "n": n, "collide": collide }),
        seed,
        texts: vec![Text::non_repetitive(a, sigma)?, Text::non_repetitive(b, sigma)?],
        planted_answer: PlantedAnswer::Exact(collide as u64),
        regime: if collide { "one-collision" } else { "distinct" },
        resamples: 0,
    }
    .certified()
}

/// `ceil(d_alpha log2 n)`.
pub fn codeword_len(n: usize, d_alpha: f64) -> usize {
    ((d_alpha * (n.max(2) as f64).log2()).ceil() as usize).max(1)
}

/// Whether every two distinct codewords share no run longer than `alpha s`.
///
/// Equivalently, no window of `floor(alpha s) + 1` symbols occurs in two
/// different codewords.
pub fn codewords_separated(words: &[Vec<Symbol>], alpha: f64) -> bool {
    let s = words.first().map_or(0, Vec::len);
    let w = (alpha * s as f64).floor() as usize + 1;
    if w > s {
        return true;
    }
    let mut owner: HashMap<&[Symbol], usize> = HashMap::new();
    for (i, word) in words.iter().enumerate() {
        for gram in word.windows(w) {
            if *owner.entry(gram).or_insert(i) != i {
                return false;
            }
        }
    }
    true
}

/// The [`gen_ed_to_lcs`] instance with each symbol replaced by a random
/// binary codeword. Codebooks are redrawn until pairwise runs stay within
/// `(c/3) s` and the zero regime keeps its binary LCS below `c s`.
pub fn gen_binary_lcs(n: usize, c: f64, collide: bool, seed: u64, d_alpha: f64) -> Result<HardInstance> {
    if !(c > 0.0 && c <= 1.0) {
        return Err(Error::param(format!("c must lie in (0, 1], got {c}")));
    }
    let base = gen_ed_to_lcs(n, collide, seed)?;
    let s = codeword_len(n, d_alpha);
    let alpha = c / 3.0;
    let bound = (c * s as f64).ceil() as u64;
    let planted = if collide {
        PlantedAnswer::AtLeast(s as u64)
    } else {
        PlantedAnswer::LessThan(bound)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut resamples = 0;
    loop {
        let words: Vec<Vec<Symbol>> = (0..2 * n)
            .map(|_| (0..s).map(|_| rng.random_range(0..2)).collect())
            .collect();
        let encode = |t: &Text| -> Vec<Symbol> {
            t.symbols().iter().flat_map(|&x| words[x as usize].iter().copied()).collect()
        };
        if codewords_separated(&words, alpha) {
            let inst = HardInstance {
                generator: "bin-lcs",
                params: json!({ "n": n, "c": c, "collide": collide, "d_alpha": d_alpha, "s": s }),
                seed,
                texts: vec![Text::new(encode(&base.texts[0]), 2)?, Text::new(encode(&base.texts[1]), 2)?],
                planted_answer: planted,
                regime: base.regime,
                resamples,
            };
            if let Ok(inst) = inst.certified() {
                return Ok(inst);
            }
        }
        resamples += 1;
    }
}

/// `k = ceil(3/c)`.
pub fn lps_block_count(c: f64) -> usize {
    (3.0 / c).ceil() as usize
}

/// Concatenation of `k` expansions of an `m`-bit string that is all zero or
/// has a single interior one; the expansion with index `r` maps `0` to `0^k`
/// and `1` to `1^r 0^(k-r)`.
pub fn gen_lps_hard(m: usize, c: f64, seed: u64, weight_one: bool) -> Result<HardInstance> {
    if m < 3 {
        return Err(Error::param("lps-hard needs m >= 3"));
    }
    if !(c > 0.0 && c <= 1.0) {
        return Err(Error::param(format!("c must lie in (0, 1], got {c}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = lps_block_count(c);
    let one = weight_one.then(|| rng.random_range(1..m - 1));
    let mut chars = Vec::with_capacity(k * k * m);
    for r in 1..=k {
        for j in 0..m {
            let ones = if Some(j) == one { r } else { 0 };
            chars.extend((0..k).map(|t| (t < ones) as Symbol));
        }
    }
    let n = chars.len();
    HardInstance {
        generator: "lps-hard",
        params: json!({ "m": m, "c": c, "k": k, "n": n, "weight_one": weight_one }),
        seed,
        texts: vec![Text::new(chars, 2)?],
        planted_answer: if weight_one {
            PlantedAnswer::LessThan((c * n as f64).ceil() as u64)
        } else {
            PlantedAnswer::Exact(n as u64)
        },
        regime: if weight_one { "weight-one" } else { "all-zero" },
        resamples: 0,
    }
    .certified()
}

/// The identity permutation against itself with positions `ell` and
/// `ell + 1` (1-based) swapped; `ell = 0` leaves it unchanged.
pub fn gen_ulam_swap(n: usize, ell: usize, seed: u64) -> Result<HardInstance> {
    if n < 2 || ell >= n {
        return Err(Error::param(format!("ulam-swap needs n >= 2 and ell in 0..n, got n = {n}, ell = {ell}")));
    }
    let a: Vec<Symbol> = (0..n as Symbol).collect();
    let mut b = a.clone();
    if ell > 0 {
        b.swap(ell - 1, ell);
    }
    HardInstance {
        generator: "ulam-swap",
        params: json!({ "n": n, "ell": ell }),
        seed,
        texts: vec![Text::permutation(a)?, Text::permutation(b)?],
        planted_answer: PlantedAnswer::Exact(if ell > 0 { 2 } else { 0 }),
        regime: if ell > 0 { "swap" } else { "identity" },
        resamples: 0,
    }
    .certified()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ed_lcs_regimes() {
        for seed in 0..30 {
            let zero = gen_ed_to_lcs(20, false, seed).unwrap();
            let one = gen_ed_to_lcs(20, true, seed).unwrap();
            assert_eq!(zero.oracle_answer().unwrap(), 0);
            assert_eq!(one.oracle_answer().unwrap(), 1);
            for t in zero.texts.iter().chain(&one.texts) {
                assert!(t.is_non_repetitive() && t.len() == 20);
            }
        }
    }

    #[test]
    fn binary_gap() {
        let s = codeword_len(16, DEFAULT_D_ALPHA);
        assert_eq!(s, 48);
        for seed in 0..5 {
            let z = gen_binary_lcs(16, 1.0, false, seed, DEFAULT_D_ALPHA).unwrap();
            assert!(z.oracle_answer().unwrap() < s as u64);
            let o = gen_binary_lcs(16, 1.0, true, seed, DEFAULT_D_ALPHA).unwrap();
            assert!(o.oracle_answer().unwrap() >= s as u64);
            assert_eq!(o.texts[0].len(), 16 * s);
        }
    }

    #[test]
    fn separated_codewords() {
        let words = vec![vec![0, 0, 1, 1], vec![1, 1, 0, 0]];
        assert!(codewords_separated(&words, 0.5));
        assert!(!codewords_separated(&words, 0.25));
    }

    #[test]
    fn lps_hard_regimes() {
        assert_eq!(lps_block_count(1.0), 3);
        assert_eq!(lps_block_count(0.5), 6);
        for seed in 0..10 {
            let z = gen_lps_hard(7, 0.5, seed, false).unwrap();
            assert_eq!(z.texts[0].len(), 36 * 7);
            assert_eq!(z.oracle_answer().unwrap(), 36 * 7);
            let w = gen_lps_hard(7, 0.5, seed, true).unwrap();
            assert!((w.oracle_answer().unwrap() as f64) < 0.5 * (36 * 7) as f64);
        }
    }

    #[test]
    fn ulam_swap_all_positions() {
        for ell in 0..50 {
            let inst = gen_ulam_swap(50, ell, 0).unwrap();
            assert_eq!(inst.oracle_answer().unwrap(), if ell == 0 { 0 } else { 2 });
        }
        assert!(gen_ulam_swap(50, 50, 0).is_err());
    }

    #[test]
    fn deterministic() {
        let a = gen_binary_lcs(8, 1.0, true, 3, DEFAULT_D_ALPHA).unwrap();
        let b = gen_binary_lcs(8, 1.0, true, 3, DEFAULT_D_ALPHA).unwrap();
        assert_eq!(format_texts(&a.texts), format_texts(&b.texts));
        assert_eq!(a.sidecar_json(), b.sidecar_json());
    }

    #[test]
    fn sidecar_and_files() {
        let dir = tempfile::tempdir().unwrap();
        let inst = gen_ulam_swap(10, 3, 7).unwrap();
        let (txt, side) = inst.write_to(dir.path()).unwrap();
        let back = crate::strings::read_texts(&txt).unwrap();
        assert_eq!(back, inst.texts);
        let v: Value = serde_json::from_str(&std::fs::read_to_string(side).unwrap()).unwrap();
        assert_eq!(v["generator"], "ulam-swap");
        assert_eq!(v["planted_answer"], json!({ "exact": 2 }));
        assert_eq!(v["seed"], 7);
        assert_eq!(v["params"]["ell"], 3);
    }
}

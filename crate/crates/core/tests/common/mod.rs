#![allow(dead_code)]

pub mod polyrep;

use gtklr::klr::Gen;
use rand::Rng;

/// A random generator word on `k` strands with random bottom labels.
pub fn random_word<R: Rng>(rng: &mut R, rank: usize, k: usize, len: usize) -> (Vec<Gen>, Vec<u8>) {
    let labels: Vec<u8> = (0..k).map(|_| rng.gen_range(1..=rank as u8)).collect();
    let word = (0..len)
        .map(|_| {
            if k >= 2 && rng.gen_bool(0.6) {
                Gen::Psi(rng.gen_range(1..k as u8))
            } else {
                Gen::X(rng.gen_range(1..=k as u8))
            }
        })
        .collect();
    (word, labels)
}

/// Labels just above a word (the word's generators listed top to bottom).
pub fn top_of(word: &[Gen], labels: &[u8]) -> Vec<u8> {
    let mut cur = labels.to_vec();
    for g in word.iter().rev() {
        if let Gen::Psi(r) = g {
            cur.swap(*r as usize - 1, *r as usize);
        }
    }
    cur
}

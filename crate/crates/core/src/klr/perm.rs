//! Permutations of strand positions and their canonical reduced words.
//!
//! A permutation is stored in one-line form: `perm[p]` is the top position
//! (0-based) of the strand starting at bottom position `p`. Letters of a
//! word are 1-based crossing positions, listed top to bottom, so the word
//! `(r_1, …, r_m)` is `s_{r_1} ∘ ⋯ ∘ s_{r_m}`.

pub fn identity(k: usize) -> Vec<u8> {
    (0..k as u8).collect()
}

pub fn is_identity(perm: &[u8]) -> bool {
    perm.iter().enumerate().all(|(p, &t)| p == t as usize)
}

pub fn inverse(perm: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; perm.len()];
    for (p, &t) in perm.iter().enumerate() {
        inv[t as usize] = p as u8;
    }
    inv
}

/// Number of inversions.
pub fn length(perm: &[u8]) -> usize {
    let k = perm.len();
    (0..k).map(|p| (p + 1..k).filter(|&q| perm[p] > perm[q]).count()).sum()
}

/// Whether the strands ending at top positions r and r+1 cross.
pub fn is_left_descent(perm: &[u8], r: u8) -> bool {
    let (a, b) = (r - 1, r);
    let pa = perm.iter().position(|&t| t == a).unwrap();
    let pb = perm.iter().position(|&t| t == b).unwrap();
    pa > pb
}

/// `s_r ∘ perm`.
pub fn left_mul(perm: &mut [u8], r: u8) {
    for t in perm.iter_mut() {
        if *t == r - 1 {
            *t = r;
        } else if *t == r {
            *t = r - 1;
        }
    }
}

pub fn from_word(word: &[u8], k: usize) -> Vec<u8> {
    let mut perm = identity(k);
    for &r in word.iter().rev() {
        left_mul(&mut perm, r);
    }
    perm
}

/// The lexicographically smallest reduced word.
pub fn canonical_word(perm: &[u8]) -> Vec<u8> {
    let mut w = perm.to_vec();
    let mut out = Vec::new();
    'outer: loop {
        for r in 1..w.len() as u8 {
            if is_left_descent(&w, r) {
                out.push(r);
                left_mul(&mut w, r);
                continue 'outer;
            }
        }
        return out;
    }
}

/// Labels read at the top of the strands: `top[perm[p]] = labels[p]`.
pub fn top_labels(perm: &[u8], labels: &[u8]) -> Vec<u8> {
    let mut top = vec![0u8; labels.len()];
    for (p, &t) in perm.iter().enumerate() {
        top[t as usize] = labels[p];
    }
    top
}

/// Every permutation of `k` points, in lexicographic one-line order.
pub fn all_perms(k: usize) -> Vec<Vec<u8>> {
    fn go(cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for t in 0..used.len() {
            if !used[t] {
                used[t] = true;
                cur.push(t as u8);
                go(cur, used, out);
                cur.pop();
                used[t] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

//! Free-group words over a small generator alphabet.
//!
//! A word is a vector of nonzero `i16` letters: value k > 0 is generator
//! k-1 and -k its inverse. The text form writes generator i as the i-th
//! lowercase letter and its inverse as the uppercase one, so `aBa` reads
//! g0 g1^-1 g0.

use crate::FormatError;

pub type Word = Vec<i16>;

pub fn word_to_text(w: &[i16]) -> String {
    w.iter()
        .map(|&v| {
            let i = (v.unsigned_abs() - 1) as u8;
            if v > 0 {
                (b'a' + i) as char
            } else {
                (b'A' + i) as char
            }
        })
        .collect()
}

pub fn word_from_text(text: &str, n_gens: usize) -> Result<Word, FormatError> {
    text.chars()
        .map(|c| {
            let (idx, sign) = if c.is_ascii_lowercase() {
                (c as u8 - b'a', 1)
            } else if c.is_ascii_uppercase() {
                (c as u8 - b'A', -1)
            } else {
                return Err(FormatError(format!("word letter {c:?} is not a latin letter")));
            };
            if idx as usize >= n_gens {
                return Err(FormatError(format!(
                    "word letter {c:?} exceeds the {n_gens} generators"
                )));
            }
            Ok(sign * (i16::from(idx) + 1))
        })
        .collect()
}

pub fn invert_word(w: &[i16]) -> Word {
    w.iter().rev().map(|&v| -v).collect()
}

pub fn free_reduce(w: &[i16]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &v in w {
        if out.last() == Some(&-v) {
            out.pop();
        } else {
            out.push(v);
        }
    }
    out
}

/// Free reduction plus stripping of inverse first/last pairs. Never
/// empties a nonempty freely reduced word.
pub fn cyclic_reduce(w: &[i16]) -> Word {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == -*w.last().unwrap() {
        w.pop();
        w.remove(0);
    }
    w
}

/// Letter order a < A < b < B < ...; every canonical choice uses it.
pub(crate) fn word_key(w: &[i16]) -> Vec<u16> {
    w.iter()
        .map(|&v| 2 * (v.unsigned_abs() - 1) + u16::from(v < 0))
        .collect()
}

/// Canonical representative of the conjugacy-and-inversion class of a
/// word: cyclically reduce, then take the least rotation over the word
/// and its inverse.
pub fn canonical_form(w: &[i16]) -> Word {
    let core = cyclic_reduce(w);
    if core.is_empty() {
        return core;
    }
    let mut best: Option<(Vec<u16>, Word)> = None;
    for cand in [core.clone(), invert_word(&core)] {
        for r in 0..cand.len() {
            let rot: Word = cand[r..].iter().chain(&cand[..r]).copied().collect();
            let key = word_key(&rot);
            if best.as_ref().is_none_or(|(bk, _)| key < *bk) {
                best = Some((key, rot));
            }
        }
    }
    best.unwrap().1
}

/// All freely reduced nonempty words of length at most `max_len`, in
/// (length, alphabet) order.
pub fn reduced_words(n_gens: usize, max_len: usize) -> Vec<Word> {
    let letters: Vec<i16> = (1..=n_gens as i16).flat_map(|i| [i, -i]).collect();
    let mut all: Vec<Word> = Vec::new();
    let mut frontier: Vec<Word> = letters.iter().map(|&l| vec![l]).collect();
    for _ in 0..max_len {
        all.extend_from_slice(&frontier);
        let mut next = Vec::with_capacity(frontier.len() * (letters.len().max(1) - 1));
        for w in &frontier {
            for &l in &letters {
                if *w.last().unwrap() != -l {
                    let mut e = w.clone();
                    e.push(l);
                    next.push(e);
                }
            }
        }
        frontier = next;
    }
    all
}

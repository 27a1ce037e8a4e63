#![allow(dead_code)]

use hirschkit::BraidWord;
use rand::Rng;

pub fn word(strands: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(strands, letters.iter().copied()).unwrap()
}

pub fn random_word<R: Rng>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<i32> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    word(strands, &letters)
}

pub fn is_knot(w: &BraidWord) -> bool {
    w.permutation().cycles().len() == 1
}

/// Random knot-closure word by rejection sampling.
pub fn random_knot_word<R: Rng>(rng: &mut R, max_strands: usize, max_len: usize) -> BraidWord {
    loop {
        let strands = rng.gen_range(2..=max_strands);
        let w = random_word(rng, strands, max_len);
        if is_knot(&w) {
            return w;
        }
    }
}

/// Applies `steps` random relator moves: inserting a cancelling pair,
/// commuting distant letters, or a positive braid relation.
pub fn scramble<R: Rng>(rng: &mut R, w: &BraidWord, steps: usize) -> BraidWord {
    let n = w.strands() as i32;
    let mut v = w.letters().to_vec();
    for _ in 0..steps {
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(1..n);
                let i = if rng.gen_bool(0.5) { i } else { -i };
                let at = rng.gen_range(0..=v.len());
                v.splice(at..at, [i, -i]);
            }
            1 => {
                let spots: Vec<usize> = (0..v.len().saturating_sub(1))
                    .filter(|&p| (v[p].abs() - v[p + 1].abs()).abs() >= 2)
                    .collect();
                if !spots.is_empty() {
                    let p = spots[rng.gen_range(0..spots.len())];
                    v.swap(p, p + 1);
                }
            }
            _ => {
                let spots: Vec<usize> = (0..v.len().saturating_sub(2))
                    .filter(|&p| {
                        v[p] > 0 && v[p] == v[p + 2] && v[p + 1] > 0 && (v[p] - v[p + 1]).abs() == 1
                    })
                    .collect();
                if !spots.is_empty() {
                    let p = spots[rng.gen_range(0..spots.len())];
                    let (a, b) = (v[p], v[p + 1]);
                    v[p..p + 3].copy_from_slice(&[b, a, b]);
                } else if n >= 3 {
                    let i = rng.gen_range(1..n - 1);
                    let at = rng.gen_range(0..=v.len());
                    // σi σi+1 σi (σi+1 σi σi+1)⁻¹ = 1
                    v.splice(at..at, [i, i + 1, i, -(i + 1), -i, -(i + 1)]);
                }
            }
        }
    }
    word(w.strands(), &v)
}

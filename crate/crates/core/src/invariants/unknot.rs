//! Bounded unknot certification for braid closures.
//!
//! First the cheap obstructions are checked (Alexander polynomial,
//! Bennequin bound). If none applies, a best-first search over braid words
//! looks for a sequence of conjugations, free reductions, braid-relation
//! rewrites and Markov destabilizations ending at the trivial 1-strand
//! braid. This is a semidecision: failure within the budget yields
//! `Unknown`, not a proof of knottedness.

use std::cmp::Reverse;
use std::collections::hash_map::Entry;
use std::collections::{BinaryHeap, HashMap};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::alexander::{alexander_knot, bennequin_bounds};
use super::laurent::LaurentPolynomial;
use crate::braid::{braids_equal, left_normal_form};
use crate::{BraidWord, Error, Result};

/// A step of an unknotting certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum UnknotMove {
    /// `w ↦ g⁻¹ w g` for the single letter `g`.
    Conjugate { by: i32 },
    FreeReduce,
    /// Replaces `from` at `position` by the equal braid word `to`.
    Rewrite { position: usize, from: Vec<i32>, to: Vec<i32> },
    Destabilize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "invariant", rename_all = "snake_case")]
pub enum Obstruction {
    /// The closure is a link with this many components, not a knot.
    NotAKnot { components: usize },
    Alexander { polynomial: LaurentPolynomial },
    AlexanderGenus { lower: i64 },
    Bennequin { lower: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum UnknotVerdict {
    CertifiedUnknot { moves: Vec<UnknotMove> },
    Obstructed { obstruction: Obstruction },
    Unknown { explored: usize },
}

impl UnknotVerdict {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, UnknotVerdict::Obstructed { .. })
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, UnknotVerdict::CertifiedUnknot { .. })
    }
}

/// Applies one move, checking that it is legal.
pub fn apply_move(w: &BraidWord, mv: &UnknotMove) -> Result<BraidWord> {
    match mv {
        UnknotMove::Conjugate { by } => {
            let g = BraidWord::new(w.strands(), [*by as i64])?;
            w.conjugate(&g)
        }
        UnknotMove::FreeReduce => Ok(w.free_reduce()),
        UnknotMove::Rewrite { position, from, to } => {
            let letters = w.letters();
            let end = position + from.len();
            if end > letters.len() || letters[*position..end] != from[..] {
                return Err(Error::InvalidArgument(format!("rewrite window mismatch at {position}")));
            }
            let a = BraidWord::new(w.strands(), from.iter().copied())?;
            let b = BraidWord::new(w.strands(), to.iter().copied())?;
            if !braids_equal(&a, &b)? {
                return Err(Error::InvalidArgument(format!("{from:?} and {to:?} differ as braids")));
            }
            let mut out = letters[..*position].to_vec();
            out.extend_from_slice(to);
            out.extend_from_slice(&letters[end..]);
            BraidWord::new(w.strands(), out)
        }
        UnknotMove::Destabilize => w.markov_destabilize(),
    }
}

/// Replays a move list from `w` and returns the final braid.
pub fn replay_moves(w: &BraidWord, moves: &[UnknotMove]) -> Result<BraidWord> {
    moves.iter().try_fold(w.clone(), |acc, mv| apply_move(&acc, mv))
}

/// Length-3 rewrites among `±1, ±2` in `B_3`, keyed by window.
fn relation_table() -> &'static HashMap<[i32; 3], Vec<[i32; 3]>> {
    static TABLE: OnceLock<HashMap<[i32; 3], Vec<[i32; 3]>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let letters: [i32; 4] = [1, -1, 2, -2];
        let mut words = vec![];
        for &x in &letters {
            for &y in &letters {
                for &z in &letters {
                    if x.abs() == z.abs() && x.abs() != y.abs() {
                        words.push([x, y, z]);
                    }
                }
            }
        }
        let nf = |w: &[i32; 3]| left_normal_form(&BraidWord::from_raw(3, w.to_vec()));
        let mut table = HashMap::new();
        for a in &words {
            let equal: Vec<[i32; 3]> =
                words.iter().filter(|b| *b != a && nf(a) == nf(b)).copied().collect();
            if !equal.is_empty() {
                table.insert(*a, equal);
            }
        }
        table
    })
}

fn rewrites_at(letters: &[i32], p: usize) -> Vec<(Vec<i32>, Vec<i32>)> {
    let mut out = vec![];
    if p + 1 < letters.len() {
        let (a, b) = (letters[p], letters[p + 1]);
        if (a.abs() - b.abs()).abs() >= 2 {
            out.push((vec![a, b], vec![b, a]));
        }
    }
    if p + 2 < letters.len() {
        let w = [letters[p], letters[p + 1], letters[p + 2]];
        if w[0].abs() == w[2].abs() && (w[0].abs() - w[1].abs()).abs() == 1 {
            let base = w[0].abs().min(w[1].abs()) - 1;
            let shift = |x: i32, by: i32| x.signum() * (x.abs() + by);
            let key = w.map(|x| shift(x, -base));
            if let Some(alts) = relation_table().get(&key) {
                for alt in alts {
                    out.push((w.to_vec(), alt.iter().map(|&x| shift(x, base)).collect()));
                }
            }
        }
    }
    out
}

struct Node {
    word: BraidWord,
    parent: Option<usize>,
    edge: Vec<UnknotMove>,
}

fn successors(w: &BraidWord) -> Vec<(BraidWord, Vec<UnknotMove>)> {
    let mut out = vec![];
    if let Ok(x) = w.markov_destabilize() {
        out.push((x, vec![UnknotMove::Destabilize]));
    }
    let top = w.strands() as i32 - 1;
    for g in (1..=top).flat_map(|i| [i, -i]) {
        let raw = w.conjugate(&BraidWord::from_raw(w.strands(), vec![g])).expect("same group");
        let reduced = raw.free_reduce();
        if reduced == raw {
            out.push((raw, vec![UnknotMove::Conjugate { by: g }]));
        } else {
            out.push((reduced, vec![UnknotMove::Conjugate { by: g }, UnknotMove::FreeReduce]));
        }
    }
    let letters = w.letters();
    for p in 0..letters.len() {
        for (from, to) in rewrites_at(letters, p) {
            let mut next = letters[..p].to_vec();
            next.extend_from_slice(&to);
            next.extend_from_slice(&letters[p + from.len()..]);
            let mv = UnknotMove::Rewrite { position: p, from, to };
            out.push((BraidWord::from_raw(w.strands(), next), vec![mv]));
        }
    }
    out
}

/// Best-first search (fewest strands, then shortest word) for a reduction
/// to the trivial 1-strand braid.
fn search(w: &BraidWord, budget: usize) -> UnknotVerdict {
    let mut nodes = vec![];
    let start = w.free_reduce();
    let first_edge = if start == *w { vec![] } else { vec![UnknotMove::FreeReduce] };
    let max_len = start.len() + 4;
    let mut index: HashMap<BraidWord, usize> = HashMap::new();
    let mut heap = BinaryHeap::new();
    index.insert(start.clone(), 0);
    heap.push(Reverse((start.strands(), start.len(), 0usize)));
    nodes.push(Node { word: start, parent: None, edge: first_edge });

    let mut explored = 0;
    while let Some(Reverse((_, _, id))) = heap.pop() {
        if explored >= budget {
            break;
        }
        explored += 1;
        if nodes[id].word.strands() == 1 {
            let mut moves = vec![];
            let mut cur = Some(id);
            while let Some(i) = cur {
                moves.splice(0..0, nodes[i].edge.iter().cloned());
                cur = nodes[i].parent;
            }
            return UnknotVerdict::CertifiedUnknot { moves };
        }
        for (next, edge) in successors(&nodes[id].word) {
            if next.len() > max_len {
                continue;
            }
            if let Entry::Vacant(slot) = index.entry(next.clone()) {
                let nid = nodes.len();
                slot.insert(nid);
                heap.push(Reverse((next.strands(), next.len(), nid)));
                nodes.push(Node { word: next, parent: Some(id), edge });
            }
        }
    }
    UnknotVerdict::Unknown { explored }
}

/// Unknot semidecision for a knot closure.
pub fn unknot_check(w: &BraidWord, budget: usize) -> Result<UnknotVerdict> {
    let alexander = alexander_knot(w)?;
    if !alexander.is_one() {
        return Ok(UnknotVerdict::Obstructed {
            obstruction: Obstruction::Alexander { polynomial: alexander },
        });
    }
    let genus = alexander.span() as i64 / 2;
    if genus > 0 {
        return Ok(UnknotVerdict::Obstructed {
            obstruction: Obstruction::AlexanderGenus { lower: genus },
        });
    }
    let bounds = bennequin_bounds(w);
    if bounds.lower > 0 {
        return Ok(UnknotVerdict::Obstructed {
            obstruction: Obstruction::Bennequin { lower: bounds.lower },
        });
    }
    Ok(search(w, budget))
}

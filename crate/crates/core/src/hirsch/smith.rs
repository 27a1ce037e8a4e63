//! Smith normal form over the integers and finitely generated abelian
//! groups.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::require_strand_number;
use crate::Result;

/// `Z^rank ⊕ Z/d₁ ⊕ ⋯ ⊕ Z/d_r` with `d₁ | d₂ | ⋯` and every `dᵢ ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    /// Cokernel of the integer matrix whose rows are relations among
    /// `cols` generators.
    pub fn from_relations(rows: &[Vec<i64>], cols: usize) -> Self {
        let invariants = smith_invariants(rows, cols);
        AbelianGroup {
            rank: cols - invariants.len(),
            torsion: invariants.into_iter().filter(|&d| d > 1).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> u64 {
        self.torsion.iter().product()
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        (self.rank == 0).then(|| self.torsion_order())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![];
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Nonzero diagonal entries of the Smith normal form, in divisibility
/// order.
pub fn smith_invariants(rows: &[Vec<i64>], cols: usize) -> Vec<u64> {
    let mut m: Vec<Vec<i128>> =
        rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let nrows = m.len();
    let mut diag = vec![];
    for t in 0..nrows.min(cols) {
        loop {
            // pivot: smallest nonzero magnitude in the trailing block
            let Some((pi, pj)) = (t..nrows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| m[i][j] != 0)
                .min_by_key(|&(i, j)| m[i][j].abs())
            else {
                return finish(diag);
            };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..nrows {
                let q = m[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                clean &= m[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = m[t][j] / p;
                if q != 0 {
                    for i in t..nrows {
                        m[i][j] -= q * m[i][t];
                    }
                }
                clean &= m[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into the pivot row
            let offender = (t + 1..nrows).find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        m[t][j] += m[i][j];
                    }
                }
                None => {
                    diag.push(p.unsigned_abs() as u64);
                    break;
                }
            }
        }
    }
    finish(diag)
}

fn finish(diag: Vec<u64>) -> Vec<u64> {
    debug_assert!(diag.windows(2).all(|w| w[1] % w[0] == 0));
    diag
}

/// `H_1(N)` modulo the identifications `[m₁] ∼ [m₂]` and
/// `[l₁] ∼ [l₂] + k[m₂]`, on generators `([m₂], [l₁])`. A torsion group
/// of order `(n - 1)²`.
pub fn gluing_cokernel(n: i64, k: i64) -> Result<AbelianGroup> {
    require_strand_number(n)?;
    let rows = vec![vec![n - 1, 0], vec![-k, 1 - n]];
    Ok(AbelianGroup::from_relations(&rows, 2))
}

/// `H_1(M)` for `M = N / (x ∼ φ(x))`. Gluing `T^out` to `T^in` adds one free
/// generator (a loop crossing the glued torus) to the cokernel above.
pub fn homology_of_m(n: i64, k: i64) -> Result<AbelianGroup> {
    let mut g = gluing_cokernel(n, k)?;
    g.rank += 1;
    Ok(g)
}

//! Reduced Burau representation and determinants over `Z[t, t⁻¹]`.

use serde::{Deserialize, Serialize};

use super::laurent::LaurentPolynomial as Poly;
use crate::BraidWord;

/// Square matrix of Laurent polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyMatrix {
    rows: Vec<Vec<Poly>>,
}

impl PolyMatrix {
    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { Poly::one() } else { Poly::zero() }).collect())
            .collect();
        PolyMatrix { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dim();
        assert_eq!(n, other.dim());
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(Poly::zero(), |acc, k| {
                            &acc + &(&self.rows[i][k] * &other.rows[k][j])
                        })
                    })
                    .collect()
            })
            .collect();
        PolyMatrix { rows }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        PolyMatrix { rows }
    }

    /// Determinant by fraction-free (Bareiss) elimination. Every division
    /// is exact in `Z[t, t⁻¹]`.
    pub fn determinant(&self) -> Poly {
        let n = self.dim();
        if n == 0 {
            return Poly::one();
        }
        let mut m = self.rows.clone();
        let mut prev = Poly::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return Poly::zero();
                };
                m.swap(k, r);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
                }
                m[i][k] = Poly::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }
}

/// Image of a single letter. For `σ_i` with `1 < i < l-1` the nontrivial
/// block on rows/columns `i-2..=i` is
///
/// ```text
/// 1  0  0
/// t -t  1
/// 0  0  1
/// ```
///
/// truncated at the matrix boundary for `i = 1` and `i = l-1`.
fn generator_matrix(strands: usize, letter: i32) -> PolyMatrix {
    let dim = strands - 1;
    let mut m = PolyMatrix::identity(dim);
    let i = letter.unsigned_abs() as usize - 1;
    let t = Poly::t();
    let tinv = Poly::monomial(1, -1);
    if letter > 0 {
        m.rows[i][i] = -t.clone();
        if i > 0 {
            m.rows[i][i - 1] = t;
        }
        if i + 1 < dim {
            m.rows[i][i + 1] = Poly::one();
        }
    } else {
        m.rows[i][i] = -tinv.clone();
        if i > 0 {
            m.rows[i][i - 1] = Poly::one();
        }
        if i + 1 < dim {
            m.rows[i][i + 1] = tinv;
        }
    }
    m
}

/// The reduced Burau matrix of `w`, an `(l-1) × (l-1)` matrix, multiplied
/// in the order the letters appear.
pub fn reduced_burau(w: &BraidWord) -> PolyMatrix {
    let dim = w.strands() - 1;
    w.letters()
        .iter()
        .fold(PolyMatrix::identity(dim), |acc, &x| acc.mul(&generator_matrix(w.strands(), x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(strands: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(strands, letters.iter().copied()).unwrap()
    }

    #[test]
    fn small_images() {
        assert!(reduced_burau(&BraidWord::identity(3)).is_identity());
        let m = reduced_burau(&w(2, &[1]));
        assert_eq!(m.dim(), 1);
        assert_eq!(*m.get(0, 0), Poly::monomial(-1, 1));
        assert_eq!(reduced_burau(&BraidWord::identity(1)).dim(), 0);
    }

    #[test]
    fn generators_invert_and_satisfy_relations() {
        for l in 2..=5 {
            for i in 1..l as i32 {
                let pair = reduced_burau(&w(l, &[i, -i]));
                assert!(pair.is_identity(), "l={l} i={i}");
                assert!(reduced_burau(&w(l, &[-i, i])).is_identity());
                if i + 1 < l as i32 {
                    let lhs = reduced_burau(&w(l, &[i, i + 1, i]));
                    let rhs = reduced_burau(&w(l, &[i + 1, i, i + 1]));
                    assert_eq!(lhs, rhs);
                }
                for j in i + 2..l as i32 {
                    assert_eq!(reduced_burau(&w(l, &[i, j])), reduced_burau(&w(l, &[j, i])));
                }
            }
        }
    }

    #[test]
    fn determinants() {
        // σ1σ2 in B3: det = t^2
        assert_eq!(reduced_burau(&w(3, &[1, 2])).determinant(), Poly::monomial(1, 2));
        assert_eq!(reduced_burau(&w(4, &[1, -2, 3])).determinant(), Poly::monomial(-1, 1));
        let zero_pivot = PolyMatrix {
            rows: vec![vec![Poly::zero(), Poly::one()], vec![Poly::one(), Poly::zero()]],
        };
        assert_eq!(zero_pivot.determinant(), Poly::constant(-1));
    }
}

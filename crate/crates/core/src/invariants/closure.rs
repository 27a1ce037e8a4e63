use serde::{Deserialize, Serialize};

use crate::BraidWord;

/// Component data of a braid closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureInfo {
    /// Number of link components `μ`.
    pub components: usize,
    /// One-based strand numbers of each permutation cycle; cycle `c` is
    /// component `c`.
    pub cycles: Vec<Vec<usize>>,
    /// Pairwise linking numbers; the diagonal is zero.
    pub linking_matrix: Vec<Vec<i64>>,
    /// Linking number of each component with the braid axis, i.e. the
    /// number of strands it occupies.
    pub axis_linking: Vec<usize>,
}

impl ClosureInfo {
    pub fn is_knot(&self) -> bool {
        self.components == 1
    }
}

pub fn closure_info(w: &BraidWord) -> ClosureInfo {
    let n = w.strands();
    let cycles = w.permutation().cycles();
    let mut component_of = vec![0; n];
    for (c, cycle) in cycles.iter().enumerate() {
        for &s in cycle {
            component_of[s] = c;
        }
    }
    let mu = cycles.len();
    let mut doubled = vec![vec![0i64; mu]; mu];
    let mut strand_at: Vec<usize> = (0..n).collect();
    for &x in w.letters() {
        let i = x.unsigned_abs() as usize - 1;
        let (a, b) = (component_of[strand_at[i]], component_of[strand_at[i + 1]]);
        if a != b {
            let sign = x.signum() as i64;
            doubled[a][b] += sign;
            doubled[b][a] += sign;
        }
        strand_at.swap(i, i + 1);
    }
    let linking_matrix = doubled
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| {
                    debug_assert!(v % 2 == 0, "inter-component crossings come in pairs");
                    v / 2
                })
                .collect()
        })
        .collect();
    ClosureInfo {
        components: mu,
        axis_linking: cycles.iter().map(Vec::len).collect(),
        cycles: cycles.into_iter().map(|c| c.into_iter().map(|s| s + 1).collect()).collect(),
        linking_matrix,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(strands: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(strands, letters.iter().copied()).unwrap()
    }

    #[test]
    fn figure_eight_is_a_knot() {
        let info = closure_info(&w(3, &[1, -2, 1, -2]));
        assert_eq!(info.components, 1);
        assert_eq!(info.axis_linking, vec![3]);
        assert_eq!(info.cycles, vec![vec![1, 2, 3]]);
    }

    #[test]
    fn trivial_two_strand_closure_is_split() {
        let info = closure_info(&BraidWord::identity(2));
        assert_eq!(info.components, 2);
        assert_eq!(info.linking_matrix, vec![vec![0, 0], vec![0, 0]]);
    }

    #[test]
    fn hopf_link() {
        let info = closure_info(&w(2, &[1, 1]));
        assert_eq!(info.components, 2);
        assert_eq!(info.linking_matrix, vec![vec![0, 1], vec![1, 0]]);
        let info = closure_info(&w(2, &[-1, -1, -1, -1]));
        assert_eq!(info.linking_matrix[0][1], -2);
    }

    #[test]
    fn three_components() {
        // full twist on 3 strands: every pair links once
        let info = closure_info(&w(3, &[1, 2, 1, 2, 1, 2]));
        assert_eq!(info.components, 3);
        assert_eq!(info.linking_matrix, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        assert_eq!(info.axis_linking.iter().sum::<usize>(), 3);
    }
}

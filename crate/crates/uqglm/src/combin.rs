//! Enumeration of the two partition families used by every sum of the
//! engine, plus canonical multiset keys for memoization.
//!
//! * Sum-formula partitions: every color set is split into two subsets, with
//!   equal first-subset sizes on the `s` and `t` sides.
//! * Recursion partitions: for a contiguous range of colors, one element is
//!   chosen per color ("singleton chains"), with the depth sum truncated by
//!   the first empty color.
//!
//! Enumeration is by index, not by value: one enumeration serves both
//! parameter families, and value binding happens at the evaluation sites.

use crate::scalar::{Orientation, Scalar};
use itertools::Itertools;

/// One color's split into the chosen subset and its complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl Bipartition {
    fn from_subset(n: usize, subset: &[usize]) -> Self {
        let mut in_first = vec![false; n];
        for &i in subset {
            in_first[i] = true;
        }
        Bipartition {
            first: subset.to_vec(),
            second: (0..n).filter(|&i| !in_first[i]).collect(),
        }
    }
}

/// A joint split of one color: subsets of equal size on the s and t sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JointBipartition {
    pub s: Bipartition,
    pub t: Bipartition,
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(k).collect()
}

/// All joint splits of a single color with `n` elements per side:
/// pairs of subsets with equal sizes j = 0..=n. There are C(2n, n) of them.
pub fn color_joint_bipartitions(n: usize) -> Vec<JointBipartition> {
    let mut out = Vec::new();
    for j in 0..=n {
        let subs = subsets_of_size(n, j);
        for a in &subs {
            for b in &subs {
                out.push(JointBipartition {
                    s: Bipartition::from_subset(n, a),
                    t: Bipartition::from_subset(n, b),
                });
            }
        }
    }
    out
}

/// Stream of joint partitions across all colors for the sum formula:
/// independently per color k, all pairs of equal-size subsets of the
/// cardinality-r_k index sets. Total count is the product of C(2 r_k, r_k).
pub fn sum_partitions(r: &[usize]) -> Box<dyn Iterator<Item = Vec<JointBipartition>>> {
    if r.is_empty() {
        return Box::new(std::iter::once(Vec::new()));
    }
    let factors: Vec<Vec<JointBipartition>> =
        r.iter().map(|&n| color_joint_bipartitions(n)).collect();
    Box::new(factors.into_iter().multi_cartesian_product())
}

/// Stream of unconstrained splits: independently per color, every subset
/// (with its complement). There are 2^{r_k} splits per color. This is the
/// partition family of the coproduct formulas.
pub fn subset_partitions(r: &[usize]) -> Box<dyn Iterator<Item = Vec<Bipartition>>> {
    if r.is_empty() {
        return Box::new(std::iter::once(Vec::new()));
    }
    let factors: Vec<Vec<Bipartition>> = r
        .iter()
        .map(|&n| {
            (0..=n)
                .flat_map(|j| subsets_of_size(n, j))
                .map(|s| Bipartition::from_subset(n, &s))
                .collect()
        })
        .collect();
    Box::new(factors.into_iter().multi_cartesian_product())
}

/// A term of a recursion sum: the depth `j` together with one chosen index
/// per color in the partitioned range (colors 2..j-1 in recursion order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursionChainPartition {
    pub depth: usize,
    pub choices: Vec<usize>,
}

/// Chains of single-element choices for the Bethe-vector and HC recursions.
///
/// `sizes[i]` is the cardinality of the color that depth `j = i + 3` starts
/// to partition (the recursion's colors 2, 3, ...). Depth `j = 2` always
/// contributes one empty chain; a depth whose range covers an empty color
/// yields nothing, which truncates the sum at the first empty color.
pub fn recursion_partitions(sizes: &[usize]) -> Vec<RecursionChainPartition> {
    let mut out = vec![RecursionChainPartition {
        depth: 2,
        choices: Vec::new(),
    }];
    for j in 3..=sizes.len() + 2 {
        let range = &sizes[..j - 2];
        if range.contains(&0) {
            break;
        }
        for choices in range.iter().map(|&n| 0..n).multi_cartesian_product() {
            out.push(RecursionChainPartition { depth: j, choices });
        }
    }
    out
}

/// Canonical memoization key: rank level, orientation, and per-color
/// multisets of serialized parameter values. Keys are equal exactly when
/// the level, the orientation, and every per-color multiset agree,
/// irrespective of the order of values inside a color.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultisetKey {
    pub level: usize,
    pub orientation: Orientation,
    pub sets: Vec<Vec<String>>,
}

pub fn multiset_key<S: Scalar>(
    level: usize,
    sets: &[Vec<S>],
    orientation: Orientation,
) -> MultisetKey {
    let sets = sets
        .iter()
        .map(|set| {
            let mut vals: Vec<String> = set.iter().map(|v| v.serialize()).collect();
            vals.sort();
            vals
        })
        .collect();
    MultisetKey {
        level,
        orientation,
        sets,
    }
}

impl MultisetKey {
    /// Compact canonical text form, usable as a table key.
    pub fn canonical_string(&self) -> String {
        let sets = self
            .sets
            .iter()
            .map(|s| format!("{{{}}}", s.join(",")))
            .collect::<Vec<_>>()
            .join("");
        format!("L{}|{}|{}", self.level, self.orientation, sets)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut acc = 1usize;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }

    #[test]
    fn sum_partition_counts_match_central_binomials() {
        assert_eq!(sum_partitions(&[1]).count(), 2);
        assert_eq!(sum_partitions(&[1, 1]).count(), 4);
        assert_eq!(sum_partitions(&[2, 1]).count(), 12);
        // completeness for all r with total <= 8 and up to 3 colors
        for r in [
            vec![0],
            vec![3],
            vec![4],
            vec![2, 2],
            vec![3, 2],
            vec![2, 2, 2],
            vec![4, 3],
            vec![3, 3, 2],
        ] {
            let expected: usize = r.iter().map(|&n| binom(2 * n, n)).product();
            assert_eq!(sum_partitions(&r).count(), expected, "r = {r:?}");
        }
        // empty color list: exactly the trivial partition
        assert_eq!(sum_partitions(&[]).count(), 1);
    }

    #[test]
    fn subset_partition_counts_are_powers_of_two() {
        assert_eq!(subset_partitions(&[1]).count(), 2);
        assert_eq!(subset_partitions(&[2, 1]).count(), 8);
        assert_eq!(subset_partitions(&[]).count(), 1);
        assert_eq!(subset_partitions(&[0, 3]).count(), 8);
    }

    #[test]
    fn sum_partitions_are_duplicate_free() {
        let all: Vec<_> = sum_partitions(&[2, 1]).collect();
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn recursion_partitions_truncate_at_first_empty_color() {
        // all sets empty: only the trivial depth-2 term survives
        let chains = recursion_partitions(&[0, 0]);
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].depth, 2);

        // sizes (1,1) for colors (2,3): one chain at full depth
        let chains = recursion_partitions(&[1, 1]);
        let full: Vec<_> = chains.iter().filter(|c| c.depth == 4).collect();
        assert_eq!(full.len(), 1);

        // color 2 empty blocks all depths beyond 2 even if color 3 is not
        let chains = recursion_partitions(&[0, 2]);
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].depth, 2);

        // sizes (2,3): depth 3 has 2 chains, depth 4 has 6
        let chains = recursion_partitions(&[2, 3]);
        assert_eq!(chains.iter().filter(|c| c.depth == 3).count(), 2);
        assert_eq!(chains.iter().filter(|c| c.depth == 4).count(), 6);
    }

    #[test]
    fn multiset_keys_canonicalize_within_colors_only() {
        let a = multiset_key(
            1,
            &[
                vec![Rat::from_i64(2), Rat::from_i64(1)],
                vec![Rat::from_i64(5)],
            ],
            Orientation::Direct,
        );
        let b = multiset_key(
            1,
            &[
                vec![Rat::from_i64(1), Rat::from_i64(2)],
                vec![Rat::from_i64(5)],
            ],
            Orientation::Direct,
        );
        assert_eq!(a, b);

        // colors are not interchangeable
        let c = multiset_key(
            1,
            &[vec![Rat::from_i64(1)], vec![Rat::from_i64(2)]],
            Orientation::Direct,
        );
        let d = multiset_key(
            1,
            &[vec![Rat::from_i64(2)], vec![Rat::from_i64(1)]],
            Orientation::Direct,
        );
        assert_ne!(c, d);

        // orientation is part of the identity
        let e = multiset_key(1, &[vec![Rat::from_i64(1)]], Orientation::Direct);
        let f = multiset_key(1, &[vec![Rat::from_i64(1)]], Orientation::Inverted);
        assert_ne!(e, f);

        // level is part of the identity
        let g = multiset_key(2, &[vec![Rat::from_i64(1)]], Orientation::Direct);
        assert_ne!(e, g);
    }
}

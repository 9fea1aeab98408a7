use serde::Serialize;

use super::HornSystem;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankCorrection {
    pub i: usize,
    pub j: usize,
    pub nu: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankBreakdown {
    pub d1: i64,
    pub d2: i64,
    pub corrections: Vec<RankCorrection>,
    pub rank: i64,
}

fn opposite_open_quadrants(a: [i64; 2], b: [i64; 2]) -> bool {
    a.iter().chain(&b).all(|&x| x != 0) && a[0].signum() == -b[0].signum() && a[1].signum() == -b[1].signum()
}

impl HornSystem {
    /// `d1·d2 - Σ ν_ij`, the correction running over dependent row pairs in
    /// opposite open quadrants.
    pub fn holonomic_rank(&self) -> RankBreakdown {
        let rows = self.rows();
        let d = |j: usize| rows.iter().map(|r| r[j].max(0)).sum::<i64>();
        let (d1, d2) = (d(0), d(1));
        let mut corrections = Vec::new();
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let (a, b) = (rows[i], rows[j]);
                if a[0] * b[1] - a[1] * b[0] != 0 || !opposite_open_quadrants(a, b) {
                    continue;
                }
                let nu = (a[0] * b[1]).abs().min((b[0] * a[1]).abs());
                corrections.push(RankCorrection { i, j, nu });
            }
        }
        let rank = d1 * d2 - corrections.iter().map(|c| c.nu).sum::<i64>();
        RankBreakdown { d1, d2, corrections, rank }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rank(rows: &[[i64; 2]]) -> i64 {
        HornSystem::from_ints(rows, &vec![0; rows.len()]).unwrap().holonomic_rank().rank
    }

    #[test]
    fn example_systems() {
        let hexagon = [[1, 1], [-1, -1], [1, 0], [-1, 0], [0, 1], [0, -1]];
        assert_eq!(rank(&hexagon), 3);
        let octagon = [[1, 2], [-1, -2], [-1, 1], [1, -1], [-3, -2], [3, 2], [2, -1], [-2, 1]];
        assert_eq!(rank(&octagon), 31);
        let decagon =
            [[-1, 0], [1, 0], [0, -1], [0, 1], [-2, 1], [2, -1], [3, 1], [-3, -1], [3, 2], [-3, -2]];
        assert_eq!(rank(&decagon), 34);
        let pentagon = [[1, 1], [-1, 0], [0, -1], [1, 0], [-1, 0], [0, -1], [0, 1]];
        assert_eq!(rank(&pentagon), 4);
        assert_eq!(rank(&[[1, 1], [1, 2], [-2, -3]]), 6);
        for k in 2..=6usize {
            let mut rows = vec![[1, 1]];
            rows.extend(std::iter::repeat_n([1, 0], k - 1));
            rows.extend(std::iter::repeat_n([-1, 0], k));
            rows.push([0, -1]);
            assert_eq!(rank(&rows), k as i64, "trapezoid k={k}");
        }
    }

    #[test]
    fn hexagon_breakdown() {
        let b = super::super::tests::hexagon().holonomic_rank();
        assert_eq!((b.d1, b.d2), (2, 2));
        assert_eq!(b.corrections, vec![RankCorrection { i: 0, j: 1, nu: 1 }]);
    }

    proptest! {
        #[test]
        fn rank_is_permutation_invariant(
            rows in prop::collection::vec((-4i64..=4, -4i64..=4), 1..7),
            seed in any::<u64>(),
        ) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let rows: Vec<[i64; 2]> = rows.into_iter().filter(|r| *r != (0, 0)).map(|(a, b)| [a, b]).collect();
            prop_assume!(!rows.is_empty());
            let mut perm = rows.clone();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let r1 = HornSystem::from_ints(&rows, &vec![1; rows.len()]).unwrap().holonomic_rank();
            let r2 = HornSystem::from_ints(&perm, &vec![1; perm.len()]).unwrap().holonomic_rank();
            prop_assert_eq!(r1.rank, r2.rank);
            let sum: i64 = r1.corrections.iter().map(|c| c.nu).sum();
            prop_assert_eq!(r1.rank, r1.d1 * r1.d2 - sum);
        }
    }
}

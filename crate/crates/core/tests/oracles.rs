//! Independent oracles: values computed a second way, or published sequences.

use num_bigint::{BigInt, BigUint};

use rrcomb::durfee::{decompose, first_durfee_height, h_count, Comparison};
use rrcomb::partition::{count_p, count_q, enumerate_partitions, partition_numbers};
use rrcomb::qseries::{euler_product, maltese_series, rr_product_side, rr_sum_side};
use rrcomb::Partition;

/// Partitions of `n` into parts `≤ k`, by the textbook recursion.
fn p_bounded(n: usize, k: usize, memo: &mut Vec<Vec<Option<u128>>>) -> u128 {
    if n == 0 {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    if let Some(v) = memo[n][k] {
        return v;
    }
    let v = p_bounded(n, k - 1, memo) + if k <= n { p_bounded(n - k, k, memo) } else { 0 };
    memo[n][k] = Some(v);
    v
}

#[test]
fn partition_numbers_match_recursion() {
    let n_max = 120;
    let mut memo = vec![vec![None; n_max + 1]; n_max + 1];
    let table = partition_numbers(n_max);
    for (n, p) in table.iter().enumerate() {
        assert_eq!(
            *p,
            BigUint::from(p_bounded(n, n, &mut memo)),
            "p({n})"
        );
    }
}

#[test]
fn published_partition_numbers() {
    assert_eq!(count_p(100), BigUint::from(190_569_292u64));
    assert_eq!(count_p(200), BigUint::from(3_972_999_029_388u64));
}

#[test]
fn enumeration_counts_match_p() {
    for n in 0..=40 {
        assert_eq!(
            BigUint::from(enumerate_partitions(n).unwrap().count()),
            count_p(n),
            "n = {n}"
        );
    }
}

// partitions into parts ≡ ±1 mod 5, n = 0..30
const RR_COUNTS: [u32; 31] = [
    1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 9, 10, 12, 14, 17, 19, 23, 26, 31, 35, 41, 46, 54, 61, 70,
    79, 91, 102, 117,
];

#[test]
fn rogers_ramanujan_counts() {
    let sum = rr_sum_side(30);
    let prod = rr_product_side(30);
    for (n, &c) in RR_COUNTS.iter().enumerate() {
        assert_eq!(count_q(n).unwrap(), BigUint::from(c), "q({n})");
        assert_eq!(sum.coeff(n), &BigInt::from(c));
        assert_eq!(prod.coeff(n), &BigInt::from(c));
    }
}

#[test]
fn euler_product_is_pentagonal() {
    let n = 300;
    let e = euler_product(n);
    let mut want = vec![0i64; n + 1];
    for k in 0i64.. {
        let g1 = (k * (3 * k - 1) / 2) as usize;
        if g1 > n {
            break;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        want[g1] = sign;
        let g2 = (k * (3 * k + 1) / 2) as usize;
        if g2 <= n {
            want[g2] = sign;
        }
    }
    for (i, w) in want.iter().enumerate() {
        assert_eq!(e.coeff(i), &BigInt::from(*w), "coefficient {i}");
    }
}

#[test]
fn classical_durfee_square_by_scan() {
    for n in 1..=25 {
        for lambda in enumerate_partitions(n).unwrap() {
            let naive = lambda
                .parts()
                .iter()
                .enumerate()
                .filter(|(i, &p)| p > *i)
                .count();
            assert_eq!(first_durfee_height(&lambda, 0).unwrap(), naive, "{lambda}");
        }
    }
}

#[test]
fn two_durfee_squares_iff_not_rogers_ramanujan() {
    // λ has a second square exactly when some row below the first square is non-empty
    for n in 1..=25 {
        for lambda in enumerate_partitions(n).unwrap() {
            let s = lambda
                .parts()
                .iter()
                .enumerate()
                .filter(|(i, &p)| p > *i)
                .count();
            let below = lambda.len() > s;
            assert_eq!(decompose(&lambda, 0).is_some(), below, "{lambda}");
            assert_eq!(lambda.is_rogers_ramanujan(), !below, "{lambda}");
        }
    }
}

#[test]
fn rank_generating_function_against_counts() {
    for (m, r) in [(0, 0), (0, 1), (0, 3), (1, 1), (1, 2), (2, 1), (3, 2)] {
        let s = maltese_series(m, r, 24).unwrap();
        for n in 1..=24 {
            let h = h_count(n, m, Comparison::Le, -r).unwrap();
            assert_eq!(s.coeff(n), &BigInt::from(h), "m={m} r={r} n={n}");
        }
    }
}

#[test]
fn small_rank_tables_by_hand() {
    // n = 4, m = 0: (3,1) rank 2; (2,1,1) rank 0; (1,1,1,1) rank -2;
    // (4) and (2,2) are Rogers-Ramanujan
    let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
    let rank = |v: &[usize]| decompose(&p(v), 0).map(|d| d.rank());
    assert_eq!(rank(&[3, 1]), Some(2));
    assert_eq!(rank(&[2, 1, 1]), Some(0));
    assert_eq!(rank(&[1, 1, 1, 1]), Some(-2));
    assert_eq!(rank(&[4]), None);
    assert_eq!(rank(&[2, 2]), None);
    assert_eq!(
        h_count(4, 0, Comparison::Le, 0).unwrap(),
        BigUint::from(2u32)
    );
    assert_eq!(
        h_count(4, 0, Comparison::Ge, 1).unwrap(),
        BigUint::from(1u32)
    );
}

//! Matrix rank over the rationals by fraction-free (Bareiss) elimination,
//! and over a prime field as an independent cross-check.

use num_bigint::BigInt;
use num_traits::Zero;

/// Rank over Q of an integer matrix given as rows.
pub fn rank_exact(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let n_rows = a.len();
    let n_cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(pivot) = (rank..n_rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let (head, tail) = a.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            for j in col + 1..n_cols {
                // Sylvester's identity keeps this division exact.
                let v = &row[j] * &prow[col] - &row[col] * &prow[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = prow[col].clone();
        rank += 1;
    }
    rank
}

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

/// Rank over GF(2^61 - 1).
pub fn rank_mod_prime(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<u64>> =
        rows.iter().map(|row| row.iter().map(|&x| x.rem_euclid(PRIME as i64) as u64).collect()).collect();
    let n_rows = a.len();
    let n_cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(pivot) = (rank..n_rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = pow_mod(a[rank][col], PRIME - 2);
        let (head, tail) = a.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let factor = mul_mod(row[col], inv);
            for j in col..n_cols {
                let sub = mul_mod(factor, prow[j]);
                row[j] = (row[j] + PRIME - sub) % PRIME;
            }
        }
        rank += 1;
    }
    rank
}

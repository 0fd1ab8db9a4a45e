//! Brute-force reference implementations, kept structurally independent
//! of the historical procedures they validate.

use num_bigint::BigUint;
use num_traits::One;

use crate::limits::{Error, Limits, Result, ENUMERATION_MAX_N};

/// Additively built triangle of binomial coefficients.
#[derive(Debug, Clone)]
pub struct PascalTable {
    rows: Vec<Vec<BigUint>>,
}

impl PascalTable {
    pub fn new(n_max: u64) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max as usize + 1);
        for n in 0..=n_max as usize {
            let mut row = vec![BigUint::one(); n + 1];
            for k in 1..n {
                row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
            }
            rows.push(row);
        }
        PascalTable { rows }
    }

    pub fn n_max(&self) -> u64 {
        self.rows.len() as u64 - 1
    }

    pub fn get(&self, n: u64, k: u64) -> Option<&BigUint> {
        self.rows.get(n as usize).and_then(|row| row.get(k as usize))
    }
}

/// C(n,k) from the additive Pascal recurrence.
pub fn binomial_pascal(n: u64, k: u64, limits: &Limits) -> Result<BigUint> {
    limits.check(n)?;
    if k > n {
        return Err(Error::KOutOfRange { n, k });
    }
    let table = PascalTable::new(n);
    Ok(table.get(n, k).expect("table built up to n").clone())
}

/// C(n,k) by generating every k-subset of {1..n} and counting them.
pub fn binomial_enumerate(n: u64, k: u64) -> Result<BigUint> {
    if n > ENUMERATION_MAX_N {
        return Err(Error::EnumerationGuard {
            n,
            max: ENUMERATION_MAX_N,
        });
    }
    if k > n {
        return Err(Error::KOutOfRange { n, k });
    }
    // Walk all bitmasks of {1..n}, keeping those with k members.
    let mut count: u64 = 0;
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as u64 == k {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// Exact product by ordinary multiplication.
pub fn multiply_direct(x: &BigUint, y: &BigUint) -> BigUint {
    x * y
}

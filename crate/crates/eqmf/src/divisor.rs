//! Divisor-power sums `sigma_k(n)` with a shared memo table.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

/// Thread-safe memo of divisor-power sums, keyed by `(k, n)`.
///
/// Inserts are idempotent, so concurrent writers may race harmlessly.
#[derive(Default)]
pub struct DivisorTable {
    cache: RwLock<HashMap<(u32, u64), BigInt>>,
}

impl DivisorTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `sigma_k(n) = sum of d^k over positive divisors d of n`.
    ///
    /// Panics if `n = 0`.
    pub fn sigma(&self, k: u32, n: u64) -> BigInt {
        assert!(n >= 1, "sigma_k(n) requires n >= 1");
        if let Some(v) = self
            .cache
            .read()
            .expect("divisor table poisoned")
            .get(&(k, n))
        {
            return v.clone();
        }
        let v = sigma_direct(k, n);
        self.cache
            .write()
            .expect("divisor table poisoned")
            .insert((k, n), v.clone());
        v
    }
}

fn sigma_direct(k: u32, n: u64) -> BigInt {
    let mut total = BigInt::from(0u32);
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                total += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    total
}

/// `sigma_k(n)` through a process-wide [`DivisorTable`].
pub fn sigma(k: u32, n: u64) -> BigInt {
    static TABLE: OnceLock<DivisorTable> = OnceLock::new();
    TABLE.get_or_init(DivisorTable::new).sigma(k, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent oracle: literal divisor enumeration by trial division.
    fn sigma_brute(k: u32, n: u64) -> BigInt {
        (1..=n)
            .filter(|d| n.is_multiple_of(*d))
            .map(|d| BigInt::from(d).pow(k))
            .sum()
    }

    #[test]
    fn small_values() {
        assert_eq!(sigma(1, 1), BigInt::from(1));
        assert_eq!(sigma(1, 6), BigInt::from(12));
        assert_eq!(sigma(3, 2), BigInt::from(9));
    }

    #[test]
    fn matches_brute_force() {
        for k in 0..=6 {
            for n in 1..=120 {
                assert_eq!(sigma(k, n), sigma_brute(k, n), "sigma_{k}({n})");
            }
        }
    }

    #[test]
    #[should_panic(expected = "n >= 1")]
    fn rejects_zero() {
        sigma(1, 0);
    }

    #[test]
    fn table_is_shareable_across_threads() {
        let table = std::sync::Arc::new(DivisorTable::new());
        let handles: Vec<_> = (0..4)
            .map(|t| {
                let table = table.clone();
                std::thread::spawn(move || {
                    for n in 1..=200u64 {
                        assert_eq!(table.sigma(t % 3, n), sigma_direct(t % 3, n));
                    }
                })
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
    }
}

//! Stirling numbers of the second kind and enumeration of integer
//! partitions with a fixed number of parts.

use std::sync::{LazyLock, RwLock};

use num_traits::{One, Zero};

use crate::exact::factorial;
use crate::series::Series;
use crate::{BigInt, Rational};

/// Triangle of `S(n, k)`, built row by row from the recurrence
/// `S(n, k) = k*S(n-1, k) + S(n-1, k-1)`.
///
/// Conventions: `S(0,0) = 1`, `S(n,0) = 0` for `n > 0`, and `S(n,k) = 0`
/// for `k > n`, so every sum downstream stays well-defined at its corner
/// terms.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new() -> Self {
        StirlingTable {
            rows: vec![vec![BigInt::one()]],
        }
    }

    pub fn with_rows(n: usize) -> Self {
        let mut t = Self::new();
        t.ensure_rows(n);
        t
    }

    /// Number of rows built so far (row indices `0..rows()`).
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    /// Extends the triangle through row `n`.
    pub fn ensure_rows(&mut self, n: usize) {
        while self.rows.len() <= n {
            let m = self.rows.len();
            let prev = &self.rows[m - 1];
            let mut row = vec![BigInt::zero(); m + 1];
            for k in 1..m {
                row[k] = &prev[k] * k + &prev[k - 1];
            }
            row[m] = BigInt::one();
            self.rows.push(row);
        }
    }

    /// `S(n, k)`; row `n` must already be built.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        self.rows[n][k].clone()
    }
}

impl Default for StirlingTable {
    fn default() -> Self {
        Self::new()
    }
}

// One shared table; growth takes the write lock, lookups only read.
static TABLE: LazyLock<RwLock<StirlingTable>> = LazyLock::new(|| RwLock::new(StirlingTable::new()));

/// `S(n, k)` from the shared process-wide table, grown on demand.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    {
        let t = TABLE.read().unwrap();
        if n < t.rows() {
            return t.get(n, k);
        }
    }
    let mut t = TABLE.write().unwrap();
    t.ensure_rows(n);
    t.get(n, k)
}

/// `n! * [x^n] (e^x - 1)^k / k!`: the generating-function route to
/// `S(n, k)`, computed through the series module and independent of
/// the recurrence that builds the table.
pub fn stirling2_via_gf(n: usize, k: usize) -> Rational {
    let expm1 = Series::from_coeffs(
        (0..=n)
            .map(|l| {
                if l == 0 {
                    Rational::zero()
                } else {
                    Rational::new(BigInt::one(), factorial(l as u64))
                }
            })
            .collect(),
    );
    expm1
        .pow(k as u32)
        .scale(&Rational::new(BigInt::one(), factorial(k as u64)))
        .egf_coeff(n)
}

/// True iff the table value `S(n, k)` matches the generating-function
/// expansion.
pub fn stirling2_gf_check(n: usize, k: usize) -> bool {
    Rational::from_integer(stirling2(n, k)) == stirling2_via_gf(n, k)
}

/// All multiplicity vectors `l_1..l_{n-k+1}` (index `i-1` holds the number
/// of parts equal to `i`) with `sum i*l_i = n` and `sum l_i = k`; these are
/// exactly the partitions of `n` into `k` positive parts. Each vector is
/// produced once, in a deterministic order.
pub fn enumerate_partitions(n: u32, k: u32) -> Vec<Vec<u32>> {
    assert!(1 <= k && k <= n, "need 1 <= k <= n");
    let len = (n - k + 1) as usize;
    let mut out = Vec::new();
    let mut mult = vec![0u32; len];
    descend(len, n, k, &mut mult, &mut out);
    out
}

/// Chooses the multiplicity of part size `i`, largest size first.
fn descend(i: usize, rem_n: u32, rem_k: u32, mult: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if i == 0 {
        if rem_n == 0 && rem_k == 0 {
            out.push(mult.clone());
        }
        return;
    }
    // Feasibility: rem_k parts of size 1..=i must reach rem_n.
    if rem_n < rem_k || rem_n > rem_k * i as u32 {
        return;
    }
    let max_mult = (rem_n / i as u32).min(rem_k);
    for m in 0..=max_mult {
        mult[i - 1] = m;
        descend(i - 1, rem_n - m * i as u32, rem_k - m, mult, out);
    }
    mult[i - 1] = 0;
}

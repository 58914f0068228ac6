//! Arbitrary-precision counting helpers and the dense `(a, b)` tables used by
//! the decomposition dynamic programs.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Exact non-negative count.
pub type BigCount = BigUint;

/// `C(n, k)`, zero whenever `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigCount {
    if n < 0 || k < 0 || k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigCount::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn pow2(e: usize) -> BigCount {
    BigCount::one() << e
}

/// Dense table of counts indexed by `(a, b)` with `0 <= a < rows`, `0 <= b < cols`.
#[derive(Clone, PartialEq, Eq)]
pub struct CountTable {
    rows: usize,
    cols: usize,
    cells: Vec<BigCount>,
}

impl CountTable {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CountTable {
            rows,
            cols,
            cells: vec![BigCount::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, a: usize, b: usize) -> BigCount {
        if a < self.rows && b < self.cols {
            self.cells[a * self.cols + b].clone()
        } else {
            BigCount::zero()
        }
    }

    pub fn add_at(&mut self, a: usize, b: usize, value: &BigCount) {
        if !value.is_zero() {
            self[(a, b)] += value;
        }
    }

    pub fn total(&self) -> BigCount {
        self.cells.iter().sum()
    }

    pub fn row_sum(&self, a: usize) -> BigCount {
        if a >= self.rows {
            return BigCount::zero();
        }
        self.cells[a * self.cols..(a + 1) * self.cols].iter().sum()
    }

    /// Iterator over non-zero cells.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &BigCount)> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(i, v)| (i / self.cols, i % self.cols, v))
    }

    /// Disjoint-union convolution: `out(a1+a2, b1+b2) += self(a1,b1) * other(a2,b2)`.
    pub fn convolve(&self, other: &CountTable) -> CountTable {
        let mut out = CountTable::zeros(self.rows + other.rows - 1, self.cols + other.cols - 1);
        for (a1, b1, x) in self.nonzero() {
            for (a2, b2, y) in other.nonzero() {
                out[(a1 + a2, b1 + b2)] += x * y;
            }
        }
        out
    }
}

impl Index<(usize, usize)> for CountTable {
    type Output = BigCount;

    fn index(&self, (a, b): (usize, usize)) -> &BigCount {
        assert!(a < self.rows && b < self.cols, "({a}, {b}) out of table bounds");
        &self.cells[a * self.cols + b]
    }
}

impl IndexMut<(usize, usize)> for CountTable {
    fn index_mut(&mut self, (a, b): (usize, usize)) -> &mut BigCount {
        assert!(a < self.rows && b < self.cols, "({a}, {b}) out of table bounds");
        &mut self.cells[a * self.cols + b]
    }
}

impl fmt::Debug for CountTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (a, b, v) in self.nonzero() {
            m.entry(&(a, b), &v.to_string());
        }
        m.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), BigCount::from(10u32));
        assert_eq!(binomial(5, -1), BigCount::zero());
        assert_eq!(binomial(5, 6), BigCount::zero());
        assert_eq!(binomial(0, 0), BigCount::one());
        assert_eq!(binomial(-1, 0), BigCount::zero());
        assert_eq!(binomial(100, 50).to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn pascal_rule() {
        for n in 1..40 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn convolution_is_symmetric_and_mass_multiplicative() {
        let mut t1 = CountTable::zeros(3, 2);
        t1[(0, 0)] = 1u32.into();
        t1[(2, 1)] = 3u32.into();
        let mut t2 = CountTable::zeros(2, 2);
        t2[(1, 1)] = 2u32.into();
        t2[(0, 0)] = 5u32.into();
        let a = t1.convolve(&t2);
        let b = t2.convolve(&t1);
        assert_eq!(a, b);
        assert_eq!(a.total(), t1.total() * t2.total());
        assert_eq!(a.get(3, 2), BigCount::from(6u32));
    }
}

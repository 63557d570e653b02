//! Fibonacci and Lucas numbers together with the gcd and parity rules
//! that the classifiers are built on.
//!
//! Indexing follows `F_1 = F_2 = 1` and `L_1 = 1, L_2 = 3`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::BigNat;

/// A (1-based) position in the Fibonacci or Lucas sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct SeqIndex(u32);

impl SeqIndex {
    pub fn new(value: u32) -> Result<Self, Error> {
        if value == 0 {
            return Err(Error::InvalidIndex(value));
        }
        Ok(SeqIndex(value))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for SeqIndex {
    type Error = Error;

    fn try_from(value: u32) -> Result<Self, Error> {
        SeqIndex::new(value)
    }
}

impl From<SeqIndex> for u32 {
    fn from(index: SeqIndex) -> u32 {
        index.0
    }
}

impl fmt::Display for SeqIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `n = 2^exponent * odd_part` with `odd_part` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoAdicSplit {
    pub exponent: u32,
    pub odd_part: u64,
}

pub fn two_adic_split(n: u64) -> TwoAdicSplit {
    assert!(n > 0, "two_adic_split is undefined at zero");
    let exponent = n.trailing_zeros();
    TwoAdicSplit { exponent, odd_part: n >> exponent }
}

/// Runs the recurrence `x_{j+1} = x_j + x_{j-1}` from `(x_1, x_2)` up to `x_n`.
fn linear_recurrence(first: u32, second: u32, n: u32) -> BigNat {
    let mut prev = BigUint::from(first);
    let mut cur = BigUint::from(second);
    if n == 1 {
        return prev;
    }
    for _ in 2..n {
        let next = &prev + &cur;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

pub fn fib(n: SeqIndex) -> BigNat {
    linear_recurrence(1, 1, n.get())
}

pub fn lucas(n: SeqIndex) -> BigNat {
    linear_recurrence(1, 3, n.get())
}

fn index_gcd(m: SeqIndex, n: SeqIndex) -> SeqIndex {
    SeqIndex(m.get().gcd(&n.get()))
}

/// `gcd(F_m, F_n) = F_gcd(m, n)`.
pub fn fib_gcd(m: SeqIndex, n: SeqIndex) -> BigNat {
    fib(index_gcd(m, n))
}

/// Three-case Lucas gcd rule, decided on the 2-adic valuations of the
/// indices:
///
/// * equal valuations: `L_gcd(m, n)`
/// * different valuations and `3 | gcd(m, n)`: `2`
/// * otherwise `1`
pub fn lucas_gcd(m: SeqIndex, n: SeqIndex) -> BigNat {
    let a = two_adic_split(m.get().into()).exponent;
    let b = two_adic_split(n.get().into()).exponent;
    let l = index_gcd(m, n);
    if a == b {
        lucas(l)
    } else if l.get().is_multiple_of(3) {
        BigUint::from(2u32)
    } else {
        BigUint::one()
    }
}

/// `L_m` is even exactly when `3 | m`.
pub fn lucas_is_even(m: SeqIndex) -> bool {
    m.get().is_multiple_of(3)
}

/// Coprimality of `L_m` and `L_n` read off the index structure alone.
pub fn lucas_coprime(m: SeqIndex, n: SeqIndex) -> bool {
    let sm = two_adic_split(m.get().into());
    let sn = two_adic_split(n.get().into());
    if sm.exponent == sn.exponent {
        sm.exponent == 0 && sm.odd_part.gcd(&sn.odd_part) == 1
    } else {
        !index_gcd(m, n).get().is_multiple_of(3)
    }
}

/// Precomputed prefix of a sequence, for callers that look up many values.
#[derive(Debug, Clone)]
pub struct SequenceTable {
    values: Vec<BigNat>,
}

impl SequenceTable {
    fn build(first: u32, second: u32, max_index: u32) -> Self {
        let mut values = Vec::with_capacity(max_index as usize + 1);
        values.push(BigUint::zero());
        if max_index >= 1 {
            values.push(BigUint::from(first));
        }
        if max_index >= 2 {
            values.push(BigUint::from(second));
        }
        for j in 3..=max_index as usize {
            let next = &values[j - 1] + &values[j - 2];
            values.push(next);
        }
        SequenceTable { values }
    }

    pub fn fibonacci(max_index: u32) -> Self {
        Self::build(1, 1, max_index)
    }

    pub fn lucas(max_index: u32) -> Self {
        Self::build(1, 3, max_index)
    }

    pub fn max_index(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    pub fn get(&self, n: SeqIndex) -> Option<&BigNat> {
        self.values.get(n.get() as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(n: u32) -> SeqIndex {
        SeqIndex::new(n).unwrap()
    }

    fn big(n: u64) -> BigNat {
        BigUint::from(n)
    }

    // Textbook Euclid, kept apart from the index-based rules it checks.
    fn euclid(a: &BigNat, b: &BigNat) -> BigNat {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = &x % &y;
            x = y;
            y = r;
        }
        x
    }

    #[test]
    fn zero_index_rejected() {
        assert!(SeqIndex::new(0).is_err());
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fib(idx(1)), big(1));
        assert_eq!(fib(idx(3)), big(2));
        assert_eq!(fib(idx(6)), big(8));
        assert_eq!(fib(idx(8)), big(21));
        assert_eq!(fib(idx(9)), big(34));
    }

    #[test]
    fn lucas_values() {
        assert_eq!(lucas(idx(2)), big(3));
        assert_eq!(lucas(idx(3)), big(4));
        assert_eq!(lucas(idx(9)), big(76));
        assert_eq!(lucas(idx(15)), big(1364));
        assert_eq!(lucas(idx(17)), big(3571));
    }

    #[test]
    fn two_adic_examples() {
        assert_eq!(two_adic_split(12), TwoAdicSplit { exponent: 2, odd_part: 3 });
        assert_eq!(two_adic_split(9), TwoAdicSplit { exponent: 0, odd_part: 9 });
        assert_eq!(two_adic_split(16), TwoAdicSplit { exponent: 4, odd_part: 1 });
    }

    #[test]
    fn two_adic_reconstructs() {
        for n in 1..=1_000_000u64 {
            let s = two_adic_split(n);
            assert_eq!(s.odd_part % 2, 1);
            assert_eq!(s.odd_part << s.exponent, n);
        }
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(fib_gcd(idx(6), idx(9)), big(2));
        assert_eq!(fib_gcd(idx(8), idx(9)), big(1));
        assert_eq!(fib_gcd(idx(11), idx(11)), fib(idx(11)));
        assert_eq!(lucas_gcd(idx(9), idx(15)), big(4));
        assert_eq!(lucas_gcd(idx(3), idx(6)), big(2));
        assert_eq!(lucas_gcd(idx(1), idx(2)), big(1));
    }

    #[test]
    fn parity_and_coprimality_examples() {
        assert!(lucas_is_even(idx(9)));
        assert!(!lucas_is_even(idx(2)));
        assert!(lucas_is_even(idx(3)));
        assert!(!lucas_coprime(idx(9), idx(15)));
        assert!(lucas_coprime(idx(3), idx(17)));
        assert!(lucas_coprime(idx(1), idx(2)));
    }

    #[test]
    fn gcd_rules_match_euclid() {
        let fibs = SequenceTable::fibonacci(120);
        let lucs = SequenceTable::lucas(120);
        for m in 1..=120 {
            for n in 1..=120 {
                let (im, in_) = (idx(m), idx(n));
                let fm = fibs.get(im).unwrap();
                let fn_ = fibs.get(in_).unwrap();
                assert_eq!(fib_gcd(im, in_), euclid(fm, fn_), "fib ({m},{n})");
                let lm = lucs.get(im).unwrap();
                let ln = lucs.get(in_).unwrap();
                let direct = euclid(lm, ln);
                assert_eq!(lucas_gcd(im, in_), direct, "lucas ({m},{n})");
                assert_eq!(lucas_coprime(im, in_), direct.is_one(), "coprime ({m},{n})");
            }
        }
    }

    #[test]
    fn lucas_parity_matches_values() {
        let lucs = SequenceTable::lucas(200);
        for m in 1..=200 {
            let v = lucs.get(idx(m)).unwrap();
            assert_eq!(lucas_is_even(idx(m)), v.is_even(), "m = {m}");
        }
    }

    #[test]
    fn recurrences_hold_and_table_agrees() {
        let fibs = SequenceTable::fibonacci(150);
        let lucs = SequenceTable::lucas(150);
        assert_eq!(fibs.max_index(), 150);
        for n in 2..150 {
            assert_eq!(fib(idx(n + 1)), fib(idx(n)) + fib(idx(n - 1)));
            assert_eq!(lucas(idx(n + 1)), lucas(idx(n)) + lucas(idx(n - 1)));
            assert_eq!(fibs.get(idx(n)).unwrap(), &fib(idx(n)));
            assert_eq!(lucs.get(idx(n)).unwrap(), &lucas(idx(n)));
        }
    }
}

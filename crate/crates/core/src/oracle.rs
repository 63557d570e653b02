//! Brute-force ground truth: a membership sieve over `[0, bound]`, from
//! which gaps, conductor, genus and symmetry are read off directly.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::kernel::{GenSet3, SymmetricCertificate};
use crate::BigNat;

/// Default largest conductor the oracle will sieve for.
pub const DEFAULT_CONDUCTOR_CEILING: u64 = 1_000_000;

const SLACK: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub conductor: u64,
    pub frobenius: u64,
    pub genus: u64,
    pub gaps: Vec<u64>,
    pub symmetric: bool,
    pub bound_used: u64,
}

impl OracleReport {
    pub fn is_member(&self, s: u64) -> bool {
        s >= self.conductor || self.gaps.binary_search(&s).is_err()
    }

    /// `2G = C` for symmetric semigroups, `2G > C` otherwise.
    pub fn genus_conductor_dichotomy_holds(&self) -> bool {
        if self.symmetric {
            2 * self.genus == self.conductor
        } else {
            2 * self.genus > self.conductor
        }
    }
}

struct BitSieve {
    words: Vec<u64>,
}

impl BitSieve {
    fn new(len: u64) -> Self {
        BitSieve { words: vec![0; (len as usize).div_ceil(64)] }
    }

    #[inline]
    fn get(&self, i: u64) -> bool {
        self.words[(i >> 6) as usize] >> (i & 63) & 1 == 1
    }

    #[inline]
    fn set(&mut self, i: u64) {
        self.words[(i >> 6) as usize] |= 1 << (i & 63);
    }

    fn set_from(&mut self, start: u64, len: u64) {
        let mut i = start;
        while i < len && i & 63 != 0 {
            self.set(i);
            i += 1;
        }
        if i >= len {
            return;
        }
        let first_word = (i >> 6) as usize;
        for w in &mut self.words[first_word..] {
            *w = u64::MAX;
        }
    }
}

fn small_generators(generators: &[BigNat]) -> Result<Vec<u64>, Error> {
    if generators.iter().any(Zero::is_zero) || generators.is_empty() {
        return Err(Error::ZeroGenerator);
    }
    if generators.iter().any(One::is_one) {
        return Err(Error::TrivialSemigroup);
    }
    let gcd = generators.iter().fold(BigUint::zero(), |acc, d| acc.gcd(d));
    if !gcd.is_one() {
        return Err(Error::NotCoprime(gcd));
    }
    // Generators beyond u64 can never fall inside a sieve window.
    Ok(generators.iter().filter_map(ToPrimitive::to_u64).collect())
}

/// Sieves membership over `[0, bound]`.
///
/// Fails with `BoundTooSmall` unless the run of members ending at `bound`
/// is at least as long as the smallest generator (which proves every larger
/// integer is a member) and at least `min(64, bound / 2)`.
pub fn enumerate(generators: &[BigNat], bound: u64) -> Result<OracleReport, Error> {
    let gens = small_generators(generators)?;
    let smallest = *gens.iter().min().expect("at least one generator fits in u64");
    let len = bound + 1;
    let mut sieve = BitSieve::new(len);
    sieve.set(0);
    let mut run = 1u64;
    let mut conductor = None;
    for s in 1..len {
        let member = gens.iter().any(|&d| d <= s && sieve.get(s - d));
        if member {
            sieve.set(s);
            run += 1;
            if run >= smallest {
                // s - smallest + 1 ..= s are all members, so everything above is.
                let c = s + 1 - run;
                conductor = Some(c);
                sieve.set_from(s + 1, len);
                break;
            }
        } else {
            run = 0;
        }
    }
    let conductor = conductor.ok_or(Error::BoundTooSmall { bound })?;
    let trailing = len - conductor;
    if trailing < smallest.max(SLACK.min(bound / 2)) {
        return Err(Error::BoundTooSmall { bound });
    }
    let gaps: Vec<u64> = (0..conductor).filter(|&s| !sieve.get(s)).collect();
    let frobenius = conductor - 1;
    let symmetric = (0..=frobenius).all(|s| sieve.get(s) != sieve.get(frobenius - s));
    Ok(OracleReport { conductor, frobenius, genus: gaps.len() as u64, gaps, symmetric, bound_used: bound })
}

/// An upper bound on the conductor of `S(generators)` for two or three
/// generators, from Sylvester's formula on a reduced pair lifted by
/// `F(a, b, c) = g F(a/g, b/g, c) + (g - 1) c` with `g = gcd(a, b)`.
/// Falls back to the product of the generators otherwise.
pub fn conductor_upper_bound(generators: &[BigNat]) -> BigNat {
    let product = || generators.iter().product::<BigNat>();
    match generators {
        [x, y] => {
            let f: BigInt = BigInt::from(x * y) - BigInt::from(x.clone()) - BigInt::from(y.clone());
            (f + BigInt::one()).max(BigInt::zero()).to_biguint().expect("nonnegative")
        }
        [_, _, _] => [(0, 1, 2), (0, 2, 1), (1, 2, 0)]
            .iter()
            .filter_map(|&(i, j, k)| {
                let (a, b, c) = (&generators[i], &generators[j], &generators[k]);
                let g = a.gcd(b);
                if !c.gcd(&g).is_one() {
                    return None;
                }
                let (x, y) = (BigInt::from(a / &g), BigInt::from(b / &g));
                let reduced = (&x * &y - &x - &y).max(BigInt::from(-1));
                let f = BigInt::from(g.clone()) * reduced + BigInt::from(&g - 1u32) * BigInt::from(c.clone());
                Some(if f.is_negative() {
                    BigUint::zero()
                } else {
                    (f + BigInt::one()).to_biguint().expect("nonnegative")
                })
            })
            .min()
            .unwrap_or_else(product),
        _ => product(),
    }
}

/// Sieves just far enough to decide the semigroup, or reports
/// `OracleInfeasible` when the conductor is above `ceiling`.
pub fn enumerate_within(generators: &[BigNat], ceiling: u64) -> Result<OracleReport, Error> {
    let gens = small_generators(generators)?;
    let slack = SLACK.max(*gens.iter().min().unwrap_or(&0));
    let upper = conductor_upper_bound(generators).to_u64().unwrap_or(u64::MAX);
    let bound = upper.min(ceiling).saturating_add(slack);
    match enumerate(generators, bound) {
        Ok(report) if report.conductor <= ceiling => Ok(report),
        Ok(_) | Err(Error::BoundTooSmall { .. }) if upper > ceiling => Err(Error::OracleInfeasible { ceiling }),
        other => other,
    }
}

/// Field-by-field comparison of a certificate against the sieve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equivalence {
    pub frobenius: bool,
    pub genus: bool,
    pub symmetric: bool,
    pub hilbert: bool,
}

impl Equivalence {
    pub fn holds(&self) -> bool {
        self.frobenius && self.genus && self.symmetric && self.hilbert
    }

    pub fn mismatches(&self) -> Vec<&'static str> {
        [("frobenius", self.frobenius), ("genus", self.genus), ("symmetry", self.symmetric), ("hilbert", self.hilbert)]
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|(name, _)| name)
            .collect()
    }

    fn all_false() -> Self {
        Equivalence { frobenius: false, genus: false, symmetric: false, hilbert: false }
    }
}

/// Sieves `g` to the certificate's conductor plus slack and compares
/// Frobenius number, genus, reflection symmetry and every Hilbert series
/// coefficient on `[0, conductor + 64]`.
pub fn check_equivalence(g: &GenSet3, cert: &SymmetricCertificate, ceiling: u64) -> Result<Equivalence, Error> {
    let predicted = cert.conductor().to_u64().filter(|&c| c <= ceiling);
    let predicted = predicted.ok_or(Error::OracleInfeasible { ceiling })?;
    if &cert.generators != g.values() {
        return Ok(Equivalence::all_false());
    }
    let smallest = g.get(0).to_u64().unwrap_or(u64::MAX);
    let bound = predicted + SLACK.max(smallest);
    let report = match enumerate(g.values(), bound) {
        Ok(report) => report,
        Err(Error::BoundTooSmall { .. }) => return Ok(Equivalence::all_false()),
        Err(e) => return Err(e),
    };
    let window = (report.conductor + SLACK).min(bound);
    let series = cert.hilbert().series(window)?;
    let hilbert = series.iter().enumerate().all(|(s, &c)| c == i64::from(report.is_member(s as u64)));
    Ok(Equivalence {
        frobenius: cert.frobenius == BigUint::from(report.frobenius),
        genus: cert.genus == BigUint::from(report.genus) && report.genus_conductor_dichotomy_holds(),
        symmetric: report.symmetric,
        hilbert,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{symmetric_closed_forms, Pair};

    fn gens(values: &[u64]) -> Vec<BigNat> {
        values.iter().map(|&v| BigUint::from(v)).collect()
    }

    #[test]
    fn example_one_sieve() {
        let r = enumerate(&gens(&[8, 21, 34]), 200).unwrap();
        assert_eq!((r.frobenius, r.genus, r.conductor), (115, 58, 116));
        assert!(r.symmetric);
        assert_eq!(r.bound_used, 200);
    }

    #[test]
    fn smallest_semigroup() {
        let r = enumerate(&gens(&[2, 3]), 16).unwrap();
        assert_eq!((r.frobenius, r.genus), (1, 1));
        assert_eq!(r.gaps, vec![1]);
        assert!(r.symmetric);
    }

    #[test]
    fn non_symmetric_example() {
        let r = enumerate(&gens(&[3, 5, 7]), 32).unwrap();
        assert_eq!(r.gaps, vec![1, 2, 4]);
        assert_eq!((r.frobenius, r.genus), (4, 3));
        assert!(!r.symmetric);
        assert!(2 * r.genus > r.conductor);
    }

    #[test]
    fn bound_too_small_detected() {
        assert_eq!(enumerate(&gens(&[8, 21, 34]), 120), Err(Error::BoundTooSmall { bound: 120 }));
        assert_eq!(enumerate(&gens(&[8, 21, 34]), 100), Err(Error::BoundTooSmall { bound: 100 }));
    }

    #[test]
    fn invalid_generators() {
        assert!(matches!(enumerate(&gens(&[4, 6]), 50), Err(Error::NotCoprime(_))));
        assert_eq!(enumerate(&gens(&[1, 6]), 50), Err(Error::TrivialSemigroup));
    }

    #[test]
    fn sieve_is_bound_independent() {
        for (a, b, c) in [(5, 7, 9), (8, 21, 34), (11, 13, 19), (6, 10, 15)] {
            let g = gens(&[a, b, c]);
            let small = enumerate_within(&g, DEFAULT_CONDUCTOR_CEILING).unwrap();
            let big = enumerate(&g, 2 * small.bound_used).unwrap();
            assert_eq!(small.gaps, big.gaps);
            assert_eq!(small.symmetric, big.symmetric);
        }
    }

    #[test]
    fn upper_bound_dominates_conductor() {
        for a in 3..=20u64 {
            for b in a + 1..=25 {
                for c in b + 1..=30 {
                    let g = gens(&[a, b, c]);
                    if g.iter().fold(BigUint::zero(), |x, y| x.gcd(y)) != BigUint::one() {
                        continue;
                    }
                    let r = enumerate_within(&g, DEFAULT_CONDUCTOR_CEILING).unwrap();
                    assert!(BigUint::from(r.conductor) <= conductor_upper_bound(&g), "({a},{b},{c})");
                    assert_eq!(r.symmetric, 2 * r.genus == r.conductor);
                    assert!(r.genus_conductor_dichotomy_holds());
                }
            }
        }
    }

    #[test]
    fn infeasible_when_above_ceiling() {
        let g = gens(&[76, 1364, 3571]);
        assert_eq!(enumerate_within(&g, 1000), Err(Error::OracleInfeasible { ceiling: 1000 }));
        assert_eq!(enumerate_within(&g, 36_000).unwrap().frobenius, 35189);
    }

    #[test]
    fn equivalence_examples() {
        let g = GenSet3::from_u64(8, 21, 34).unwrap();
        let cert = symmetric_closed_forms(&g, Pair(0, 2)).unwrap();
        assert!(check_equivalence(&g, &cert, DEFAULT_CONDUCTOR_CEILING).unwrap().holds());

        let g2 = GenSet3::from_u64(76, 1364, 3571).unwrap();
        let cert2 = symmetric_closed_forms(&g2, Pair(0, 1)).unwrap();
        assert!(check_equivalence(&g2, &cert2, DEFAULT_CONDUCTOR_CEILING).unwrap().holds());
        assert_eq!(check_equivalence(&g2, &cert2, 10_000), Err(Error::OracleInfeasible { ceiling: 10_000 }));
    }

    #[test]
    fn mutated_certificates_rejected() {
        let g = GenSet3::from_u64(8, 21, 34).unwrap();
        let cert = symmetric_closed_forms(&g, Pair(0, 2)).unwrap();
        for shifted in [&cert.frobenius + 2u32, &cert.frobenius - 2u32] {
            let mut bad = cert.clone();
            bad.frobenius = shifted;
            let eq = check_equivalence(&g, &bad, DEFAULT_CONDUCTOR_CEILING).unwrap();
            assert!(!eq.holds());
            assert!(eq.mismatches().contains(&"frobenius"));
        }
        let mut bad = cert.clone();
        bad.e2 = BigUint::from(44u32);
        assert!(!check_equivalence(&g, &bad, DEFAULT_CONDUCTOR_CEILING).unwrap().hilbert);
    }
}

//! Symmetry decisions for generator triples.
//!
//! A triple `S(d1, d2, d3)` with a minimal, overall coprime generating set is
//! symmetric exactly when some pair has a common factor `lambda > 1` and the
//! third generator lies in the semigroup generated by the pair divided by
//! `lambda`. [`classify_generic`] applies that test to raw values;
//! [`classify_fibonacci`] and [`classify_lucas`] decide the same question
//! from index arithmetic.

mod fibonacci;
mod lucas;
pub mod sweep;

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::kernel::{
    representation, symmetric_closed_forms, two_generator_closed_forms, Dependency, GenSet3, Pair, SymmetricCertificate,
};
use crate::sequences::{fib, lucas, SeqIndex};
use crate::{decimal, BigNat};

pub use fibonacci::{classify_fibonacci, fibonacci_sufficient_inequality};
pub use lucas::{
    classify_lucas, lucas_case_data, lucas_clause, lucas_sufficient_inequality, odd_index_containment, LucasCaseData,
    LucasClause,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Fibonacci,
    Lucas,
}

impl Family {
    /// Smallest index the classifiers accept.
    pub fn min_index(self) -> u32 {
        match self {
            Family::Fibonacci => 3,
            Family::Lucas => 2,
        }
    }

    pub fn value(self, n: SeqIndex) -> BigNat {
        match self {
            Family::Fibonacci => fib(n),
            Family::Lucas => lucas(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Fibonacci => "fibonacci",
            Family::Lucas => "lucas",
        })
    }
}

/// Three distinct sequence indices, stored ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexTriple {
    pub family: Family,
    pub indices: [SeqIndex; 3],
}

impl IndexTriple {
    pub fn new(family: Family, indices: [u32; 3]) -> Result<Self, Error> {
        let mut sorted = indices;
        sorted.sort_unstable();
        if sorted[0] == sorted[1] || sorted[1] == sorted[2] {
            return Err(Error::InvalidTriple(format!("indices {indices:?} are not distinct")));
        }
        if sorted[0] < family.min_index() {
            return Err(Error::InvalidTriple(format!(
                "{family} indices must be at least {}, got {}",
                family.min_index(),
                sorted[0]
            )));
        }
        let indices = sorted.map(|i| SeqIndex::new(i).expect("checked against min_index"));
        Ok(IndexTriple { family, indices })
    }

    pub fn index(&self, position: usize) -> u32 {
        self.indices[position].get()
    }

    pub fn generators(&self) -> GenSet3 {
        GenSet3::new(self.indices.map(|n| self.family.value(n))).expect("sequence values are positive")
    }
}

impl fmt::Display for IndexTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.indices;
        write!(f, "{}({a},{b},{c})", self.family)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Symmetric,
    NonSymmetric,
    /// Some generator is a combination of the other two.
    NonMinimal,
    /// The smallest generator is 2, so the semigroup needs only two generators.
    TwoGenerator,
    /// The generators share a factor, so they do not generate a numerical semigroup.
    NotCoprime,
}

impl Status {
    pub const ALL: [Status; 5] =
        [Status::Symmetric, Status::NonSymmetric, Status::NonMinimal, Status::TwoGenerator, Status::NotCoprime];
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Symmetric => "symmetric",
            Status::NonSymmetric => "non_symmetric",
            Status::NonMinimal => "non_minimal",
            Status::TwoGenerator => "two_generator",
            Status::NotCoprime => "not_coprime",
        })
    }
}

/// The clause that decided a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    DependentGenerator,
    /// Fibonacci index 3: `F_3 = 2` together with an odd generator.
    GeneratorTwo,
    SharedFactor,
    /// Fibonacci: `gcd(lambda, c)` is not 1 or 2.
    IndexGcdTooLarge,
    /// Lucas: the third value is not coprime to `eta`.
    LucasThirdNotCoprime,
    /// Every pair of generators is coprime.
    NoSharedPairFactor,
    /// Fibonacci: every index pair has gcd below 3.
    IndexGcdBelowThree,
    /// Lucas: `gcd(L_m, L_n) = 1` for every pair.
    LucasPairsCoprime,
    /// The third generator is outside the reduced pair semigroup.
    ContainmentFails,
    /// `S(3, d2, d3)` with `3 ∤ d2` and `d3 ∉ S(3, d2)`.
    SmallestGeneratorThree,
    PairCriterion,
    FibonacciCriterion,
    #[serde(rename = "lucas_clause_1")]
    LucasClause1,
    #[serde(rename = "lucas_clause_2")]
    LucasClause2,
    #[serde(rename = "lucas_clause_3")]
    LucasClause3,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::DependentGenerator => "dependent_generator",
            Reason::GeneratorTwo => "generator_two",
            Reason::SharedFactor => "shared_factor",
            Reason::IndexGcdTooLarge => "index_gcd_too_large",
            Reason::LucasThirdNotCoprime => "lucas_third_not_coprime",
            Reason::NoSharedPairFactor => "no_shared_pair_factor",
            Reason::IndexGcdBelowThree => "index_gcd_below_three",
            Reason::LucasPairsCoprime => "lucas_pairs_coprime",
            Reason::ContainmentFails => "containment_fails",
            Reason::SmallestGeneratorThree => "smallest_generator_three",
            Reason::PairCriterion => "pair_criterion",
            Reason::FibonacciCriterion => "fibonacci_criterion",
            Reason::LucasClause1 => "lucas_clause_1",
            Reason::LucasClause2 => "lucas_clause_2",
            Reason::LucasClause3 => "lucas_clause_3",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// The pair a decision hinged on: `gcd` is `lambda` (or `eta`) as a value,
/// `index_gcd` the gcd of the two sequence indices, `reduced` the pair
/// divided by `gcd`, and `coefficients` the `(A, B)` with
/// `third = A * reduced[0] + B * reduced[1]` when the containment holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairWitness {
    pub pair: Pair,
    #[serde(with = "decimal")]
    pub gcd: BigNat,
    pub index_gcd: Option<u32>,
    #[serde(with = "decimal::vec")]
    pub reduced: Vec<BigNat>,
    #[serde(with = "decimal::vec", default)]
    pub coefficients: Vec<BigNat>,
}

impl PairWitness {
    fn evaluate(g: &GenSet3, pair: Pair, gcd: BigNat, index_gcd: Option<u32>) -> Self {
        let reduced = vec![g.get(pair.0) / &gcd, g.get(pair.1) / &gcd];
        let coefficients =
            representation(g.get(pair.third()), &reduced[0], &reduced[1]).map(|(a, b)| vec![a, b]).unwrap_or_default();
        PairWitness { pair, gcd, index_gcd, reduced, coefficients }
    }

    pub fn contains_third(&self) -> bool {
        !self.coefficients.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub reason: Reason,
    #[serde(with = "decimal::array3")]
    pub generators: [BigNat; 3],
    pub certificate: Option<SymmetricCertificate>,
    pub witness: Option<PairWitness>,
    pub dependency: Option<Dependency>,
    pub lucas_case: Option<LucasCaseData>,
}

impl Verdict {
    fn new(status: Status, reason: Reason, g: &GenSet3) -> Self {
        Verdict {
            status,
            reason,
            generators: g.values().clone(),
            certificate: None,
            witness: None,
            dependency: None,
            lucas_case: None,
        }
    }

    fn with_witness(mut self, witness: PairWitness) -> Self {
        self.witness = Some(witness);
        self
    }

    /// True for every status whose semigroup is known to be symmetric.
    pub fn is_symmetric_semigroup(&self) -> bool {
        self.certificate.is_some()
    }
}

/// Non-minimal triples keep their dependency and, when the remaining pair is
/// coprime, the two-generator closed forms.
fn non_minimal(g: &GenSet3, dependency: Dependency, status: Status, reason: Reason) -> Verdict {
    let mut v = Verdict::new(status, reason, g);
    v.certificate = two_generator_closed_forms(g, dependency.dependent).ok();
    v.dependency = Some(dependency);
    v
}

fn symmetric(g: &GenSet3, witness: PairWitness, reason: Reason) -> Verdict {
    let cert = symmetric_closed_forms(g, witness.pair).expect("witness satisfies the pair criterion");
    let mut v = Verdict::new(Status::Symmetric, reason, g).with_witness(witness);
    v.certificate = Some(cert);
    v
}

/// `S(3, d2, d3)` is never symmetric when `3 ∤ d2` and `d3 ∉ S(3, d2)`.
/// Returns `None` when the rule does not apply.
pub fn check_smallest_three(g: &GenSet3) -> Option<Verdict> {
    let three = BigUint::from(3u32);
    if g.get(0) != &three || !g.gcd().is_one() {
        return None;
    }
    let d2_divisible = (g.get(1) % &three) == BigUint::from(0u32);
    let d3_in_pair = representation(g.get(2), &three, g.get(1)).is_some();
    if d2_divisible || d3_in_pair {
        return None;
    }
    Some(Verdict::new(Status::NonSymmetric, Reason::SmallestGeneratorThree, g))
}

/// Symmetry of an arbitrary triple through the pair criterion.
pub fn classify_generic(g: &GenSet3) -> Verdict {
    if let Some(dep) = g.dependency() {
        return non_minimal(g, dep, Status::NonMinimal, Reason::DependentGenerator);
    }
    if !g.gcd().is_one() {
        return Verdict::new(Status::NotCoprime, Reason::SharedFactor, g);
    }
    if let Some(v) = check_smallest_three(g) {
        return v;
    }
    let mut pairs: Vec<(BigNat, Pair)> = Pair::ALL.iter().map(|&p| (g.pair_gcd(p), p)).collect();
    pairs.sort_by(|(ga, pa), (gb, pb)| gb.cmp(ga).then((pa.0, pa.1).cmp(&(pb.0, pb.1))));
    let mut first_failure = None;
    for (lambda, pair) in pairs {
        if lambda.is_one() {
            continue;
        }
        let witness = PairWitness::evaluate(g, pair, lambda, None);
        if witness.contains_third() {
            return symmetric(g, witness, Reason::PairCriterion);
        }
        first_failure.get_or_insert(witness);
    }
    match first_failure {
        Some(w) => Verdict::new(Status::NonSymmetric, Reason::ContainmentFails, g).with_witness(w),
        None => Verdict::new(Status::NonSymmetric, Reason::NoSharedPairFactor, g),
    }
}

pub fn classify(t: &IndexTriple) -> Verdict {
    match t.family {
        Family::Fibonacci => classify_fibonacci(t),
        Family::Lucas => classify_lucas(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate_within, DEFAULT_CONDUCTOR_CEILING};

    fn big(n: u64) -> BigNat {
        BigUint::from(n)
    }

    #[test]
    fn generic_examples() {
        let v = classify_generic(&GenSet3::from_u64(8, 21, 34).unwrap());
        assert_eq!(v.status, Status::Symmetric);
        let w = v.witness.unwrap();
        assert_eq!(w.pair, Pair(0, 2));
        assert_eq!(w.gcd, big(2));
        assert_eq!(w.reduced, vec![big(4), big(17)]);
        assert_eq!(w.coefficients, vec![big(1), big(1)]);

        let v = classify_generic(&GenSet3::from_u64(3, 5, 7).unwrap());
        assert_eq!((v.status, v.reason), (Status::NonSymmetric, Reason::SmallestGeneratorThree));

        let v = classify_generic(&GenSet3::from_u64(4, 6, 10).unwrap());
        assert_eq!(v.status, Status::NonMinimal);
        assert!(v.certificate.is_none());

        let v = classify_generic(&GenSet3::from_u64(6, 10, 14).unwrap());
        assert_eq!((v.status, v.reason), (Status::NotCoprime, Reason::SharedFactor));

        let v = classify_generic(&GenSet3::from_u64(5, 7, 9).unwrap());
        assert_eq!((v.status, v.reason), (Status::NonSymmetric, Reason::NoSharedPairFactor));
    }

    #[test]
    fn smallest_three_examples() {
        assert!(check_smallest_three(&GenSet3::from_u64(3, 5, 7).unwrap()).is_some());
        assert!(check_smallest_three(&GenSet3::from_u64(3, 4, 5).unwrap()).is_some());
        // 10 = 3*2 + 4 lies in S(3, 4).
        assert!(check_smallest_three(&GenSet3::from_u64(3, 4, 10).unwrap()).is_none());
        assert!(check_smallest_three(&GenSet3::from_u64(3, 6, 7).unwrap()).is_none());
        assert!(check_smallest_three(&GenSet3::from_u64(4, 5, 7).unwrap()).is_none());
        let v = classify_generic(&GenSet3::from_u64(3, 6, 7).unwrap());
        assert_eq!(v.status, Status::NonMinimal);
    }

    #[test]
    fn generic_agrees_with_oracle() {
        for a in 3..=16u64 {
            for b in a + 1..=24 {
                for c in b + 1..=40 {
                    let g = GenSet3::from_u64(a, b, c).unwrap();
                    if !g.gcd().is_one() {
                        continue;
                    }
                    let v = classify_generic(&g);
                    let r = enumerate_within(g.values(), DEFAULT_CONDUCTOR_CEILING).unwrap();
                    assert_eq!(v.is_symmetric_semigroup(), r.symmetric, "({a},{b},{c}) {v:?}");
                    if let Some(cert) = &v.certificate {
                        assert_eq!(cert.frobenius, big(r.frobenius));
                        assert_eq!(cert.genus, big(r.genus));
                    }
                }
            }
        }
    }

    #[test]
    fn generic_is_order_independent() {
        let a = classify_generic(&GenSet3::from_u64(34, 8, 21).unwrap());
        let b = classify_generic(&GenSet3::from_u64(8, 21, 34).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn index_triples_validate() {
        assert!(IndexTriple::new(Family::Fibonacci, [2, 5, 7]).is_err());
        assert!(IndexTriple::new(Family::Lucas, [1, 5, 7]).is_err());
        assert!(IndexTriple::new(Family::Lucas, [5, 5, 7]).is_err());
        let t = IndexTriple::new(Family::Fibonacci, [9, 6, 8]).unwrap();
        assert_eq!(t.indices.map(SeqIndex::get), [6, 8, 9]);
        assert_eq!(t.to_string(), "fibonacci(6,8,9)");
    }

    #[test]
    fn verdicts_round_trip_through_json() {
        for (family, ix) in [
            (Family::Fibonacci, [6, 8, 9]),
            (Family::Lucas, [9, 15, 17]),
            (Family::Fibonacci, [5, 6, 7]),
            (Family::Lucas, [9, 15, 18]),
            (Family::Fibonacci, [70, 85, 90]),
        ] {
            let v = classify(&IndexTriple::new(family, ix).unwrap());
            let text = serde_json::to_string(&v).unwrap();
            assert!(!text.contains("e+"), "big integers must not become floats: {text}");
            assert_eq!(serde_json::from_str::<Verdict>(&text).unwrap(), v);
        }
    }

    #[test]
    fn reason_codes_match_serde_names() {
        let reasons = [Reason::LucasClause1, Reason::LucasClause2, Reason::LucasClause3, Reason::IndexGcdTooLarge];
        for r in reasons {
            assert_eq!(serde_json::to_value(r).unwrap(), r.code());
        }
    }
}

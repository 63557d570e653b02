use num_integer::Integer;
use num_traits::One;

use super::{
    check_smallest_three, classify_generic, non_minimal, symmetric, IndexTriple, PairWitness, Reason, Status, Verdict,
};
use crate::kernel::{GenSet3, Pair};
use crate::sequences::{fib, SeqIndex};
use crate::Family;

fn seq(n: u32) -> SeqIndex {
    SeqIndex::new(n).expect("gcd of positive indices is positive")
}

/// Pairs ordered by descending index gcd, then by position.
fn pairs_by_index_gcd(t: &IndexTriple) -> Vec<(u32, Pair)> {
    let mut pairs: Vec<(u32, Pair)> = Pair::ALL.iter().map(|&p| (t.index(p.0).gcd(&t.index(p.1)), p)).collect();
    pairs.sort_by(|(ga, pa), (gb, pb)| gb.cmp(ga).then((pa.0, pa.1).cmp(&(pb.0, pb.1))));
    pairs
}

/// Pairs with `lambda = gcd(a, b) >= 3` and `F_gcd(lambda, c) = 1`.
fn eligible_pairs(t: &IndexTriple) -> impl Iterator<Item = (u32, Pair)> + '_ {
    pairs_by_index_gcd(t)
        .into_iter()
        .filter(move |&(lambda, p)| lambda >= 3 && fib(seq(lambda.gcd(&t.index(p.third())))).is_one())
}

/// Symmetry of `S(F_a, F_b, F_c)`.
///
/// Index 3 (`F_3 = 2`) leaves at most two generators; index 4 (`F_4 = 3`)
/// goes through the smallest-generator-three rule. From index 5 on the
/// triple is symmetric iff some index pair has `lambda = gcd(a, b) >= 3`,
/// `gcd(lambda, c)` is 1 or 2, and `F_c` lies in `S(F_a / F_lambda, F_b / F_lambda)`.
pub fn classify_fibonacci(t: &IndexTriple) -> Verdict {
    assert_eq!(t.family, Family::Fibonacci);
    let g = t.generators();
    let index_gcd = t.index(0).gcd(&t.index(1)).gcd(&t.index(2));

    if t.index(0) == 3 {
        return match g.dependency() {
            Some(dep) if g.gcd().is_one() => non_minimal(&g, dep, Status::TwoGenerator, Reason::GeneratorTwo),
            _ => Verdict::new(Status::NotCoprime, Reason::SharedFactor, &g),
        };
    }
    if let Some(dep) = g.dependency() {
        return non_minimal(&g, dep, Status::NonMinimal, Reason::DependentGenerator);
    }
    // gcd(F_a, F_b, F_c) = F_gcd(a, b, c), which is 1 only for index gcd 1 or 2.
    if !fib(seq(index_gcd)).is_one() {
        return Verdict::new(Status::NotCoprime, Reason::IndexGcdTooLarge, &g);
    }
    if t.index(0) == 4 {
        return check_smallest_three(&g).unwrap_or_else(|| classify_generic(&g));
    }

    let mut first_failure = None;
    for (lambda, pair) in eligible_pairs(t) {
        let f_lambda = fib(seq(lambda));
        let witness = PairWitness::evaluate(&g, pair, f_lambda.clone(), Some(lambda));
        if witness.contains_third() {
            let v = symmetric(&g, witness, Reason::FibonacciCriterion);
            let cert = v.certificate.as_ref().expect("symmetric verdicts carry a certificate");
            // f1 = F_a F_b / F_lambda and f2 = F_c F_lambda.
            let f1 = g.get(pair.0) * g.get(pair.1) / &f_lambda;
            let f2 = g.get(pair.third()) * &f_lambda;
            assert_eq!((&cert.e1, &cert.e2), (&f1, &f2), "index formulas disagree with lcm form for {t}");
            return v;
        }
        first_failure.get_or_insert(witness);
    }
    match first_failure {
        Some(w) => Verdict::new(Status::NonSymmetric, Reason::ContainmentFails, &g).with_witness(w),
        None => Verdict::new(Status::NonSymmetric, Reason::IndexGcdBelowThree, &g),
    }
}

/// `F_c F_lambda > lcm(F_a, F_b) - F_a - F_b` on some eligible pair.
///
/// `None` when the inequality does not apply: smallest index below 5,
/// a non-minimal generating set, or no pair with `lambda >= 3` and
/// `gcd(lambda, c) in {1, 2}`.
pub fn fibonacci_sufficient_inequality(t: &IndexTriple) -> Option<bool> {
    assert_eq!(t.family, Family::Fibonacci);
    if t.index(0) < 5 {
        return None;
    }
    let g: GenSet3 = t.generators();
    if g.dependency().is_some() {
        return None;
    }
    let mut any = None;
    for (lambda, pair) in eligible_pairs(t) {
        let (fa, fb, fc) = (g.get(pair.0), g.get(pair.1), g.get(pair.third()));
        let holds = fc * fib(seq(lambda)) + fa + fb > fa.lcm(fb);
        any = Some(any.unwrap_or(false) || holds);
    }
    any
}

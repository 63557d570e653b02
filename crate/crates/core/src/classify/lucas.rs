use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{
    check_smallest_three, classify_generic, non_minimal, symmetric, IndexTriple, PairWitness, Reason, Status, Verdict,
};
use crate::kernel::Pair;
use crate::sequences::{lucas, lucas_gcd, two_adic_split, SeqIndex, TwoAdicSplit};
use crate::Family;

/// 2-adic data of an assignment `(k; m, n)`: `l = gcd(m, n) = 2^d l'` with
/// `d = min(a, b)` and `l' = gcd(m', n')`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LucasCaseData {
    pub k: u32,
    pub m: u32,
    pub n: u32,
    pub split_k: TwoAdicSplit,
    pub split_m: TwoAdicSplit,
    pub split_n: TwoAdicSplit,
    pub l: u32,
    pub d: u32,
    pub l_prime: u64,
}

pub fn lucas_case_data(k: u32, m: u32, n: u32) -> LucasCaseData {
    let split_m = two_adic_split(m.into());
    let split_n = two_adic_split(n.into());
    let data = LucasCaseData {
        k,
        m,
        n,
        split_k: two_adic_split(k.into()),
        split_m,
        split_n,
        l: m.gcd(&n),
        d: split_m.exponent.min(split_n.exponent),
        l_prime: split_m.odd_part.gcd(&split_n.odd_part),
    };
    debug_assert_eq!(u64::from(data.l), data.l_prime << data.d);
    data
}

/// Outcome of the three clause groups for one assignment `(k; m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LucasClause {
    /// `a = b != 0`, `a != c`, `3 ∤ gcd(k, l)`.
    One,
    /// `a = b = 0`, `gcd(m', n') > 1`, and `gcd(k', l') = 1` (c = 0) or `3 ∤ gcd(k, l)` (c != 0).
    Two,
    /// `a != b`, `3 | gcd(m, n)`, `3 ∤ k`.
    Three,
    /// `gcd(L_m, L_n) = 1`.
    PairCoprime,
    /// `gcd(L_m, L_n) > 1` but `L_k` shares a factor with it.
    ThirdShares,
}

impl LucasClause {
    pub fn is_satisfied(self) -> bool {
        matches!(self, LucasClause::One | LucasClause::Two | LucasClause::Three)
    }

    fn reason(self) -> Reason {
        match self {
            LucasClause::One => Reason::LucasClause1,
            LucasClause::Two => Reason::LucasClause2,
            LucasClause::Three => Reason::LucasClause3,
            LucasClause::PairCoprime => Reason::LucasPairsCoprime,
            LucasClause::ThirdShares => Reason::LucasThirdNotCoprime,
        }
    }
}

pub fn lucas_clause(data: &LucasCaseData) -> LucasClause {
    let (a, b, c) = (data.split_m.exponent, data.split_n.exponent, data.split_k.exponent);
    let three_free = !data.k.gcd(&data.l).is_multiple_of(3);
    let verdict = |ok: bool, clause: LucasClause| if ok { clause } else { LucasClause::ThirdShares };
    if a == b {
        if a != 0 {
            verdict(a != c && three_free, LucasClause::One)
        } else if data.l_prime == 1 {
            LucasClause::PairCoprime
        } else if c == 0 {
            verdict(data.split_k.odd_part.gcd(&data.l_prime) == 1, LucasClause::Two)
        } else {
            verdict(three_free, LucasClause::Two)
        }
    } else if !data.l.is_multiple_of(3) {
        LucasClause::PairCoprime
    } else {
        verdict(!data.k.is_multiple_of(3), LucasClause::Three)
    }
}

fn seq(n: u32) -> SeqIndex {
    SeqIndex::new(n).expect("Lucas indices are positive")
}

fn case_for(t: &IndexTriple, pair: Pair) -> LucasCaseData {
    lucas_case_data(t.index(pair.third()), t.index(pair.0), t.index(pair.1))
}

/// Symmetry of `S(L_k, L_m, L_n)`.
///
/// Index 2 (`L_2 = 3`) goes through the smallest-generator-three rule.
/// Otherwise every choice of the pair `(m, n)` is tried: the clause groups
/// decide whether `eta = gcd(L_m, L_n) > 1` with `L_k` coprime to it, and
/// the triple is symmetric iff `L_k` lies in `S(L_m / eta, L_n / eta)` for
/// some admissible pair.
pub fn classify_lucas(t: &IndexTriple) -> Verdict {
    assert_eq!(t.family, Family::Lucas);
    let g = t.generators();
    if let Some(dep) = g.dependency() {
        return non_minimal(&g, dep, Status::NonMinimal, Reason::DependentGenerator);
    }
    let cases: Vec<(Pair, LucasCaseData, LucasClause)> = Pair::ALL
        .iter()
        .map(|&p| {
            let data = case_for(t, p);
            (p, data, lucas_clause(&data))
        })
        .collect();
    if let Some((_, data, clause)) = cases.iter().find(|(_, _, c)| *c == LucasClause::ThirdShares) {
        let mut v = Verdict::new(Status::NotCoprime, clause.reason(), &g);
        v.lucas_case = Some(*data);
        return v;
    }
    if t.index(0) == 2 {
        return check_smallest_three(&g).unwrap_or_else(|| classify_generic(&g));
    }

    let mut admissible: Vec<_> = cases
        .into_iter()
        .filter(|(_, _, clause)| clause.is_satisfied())
        .map(|(p, data, clause)| (lucas_gcd(seq(data.m), seq(data.n)), p, data, clause))
        .collect();
    admissible.sort_by(|(ea, pa, ..), (eb, pb, ..)| eb.cmp(ea).then((pa.0, pa.1).cmp(&(pb.0, pb.1))));

    let mut first_failure = None;
    for (eta, pair, data, clause) in admissible {
        let witness = PairWitness::evaluate(&g, pair, eta.clone(), Some(data.l));
        if witness.contains_third() {
            let mut v = symmetric(&g, witness, clause.reason());
            let cert = v.certificate.as_ref().expect("symmetric verdicts carry a certificate");
            // l1 = L_m L_n / eta and l2 = L_k eta.
            let l1 = g.get(pair.0) * g.get(pair.1) / &eta;
            let l2 = g.get(pair.third()) * &eta;
            assert_eq!((&cert.e1, &cert.e2), (&l1, &l2), "index formulas disagree with lcm form for {t}");
            v.lucas_case = Some(data);
            return v;
        }
        first_failure.get_or_insert((witness, data));
    }
    match first_failure {
        Some((w, data)) => {
            let mut v = Verdict::new(Status::NonSymmetric, Reason::ContainmentFails, &g).with_witness(w);
            v.lucas_case = Some(data);
            v
        }
        None => Verdict::new(Status::NonSymmetric, Reason::LucasPairsCoprime, &g),
    }
}

/// `L_k' L_g > L_n' L_m' / L_g - L_n' - L_m'` with `g = gcd(m', n')`, on
/// some pair of an all-odd triple with `gcd(m', n') > 1` and
/// `gcd(m', n', k') = 1`. `None` when no pair qualifies or the generating
/// set is not minimal.
pub fn lucas_sufficient_inequality(t: &IndexTriple) -> Option<bool> {
    assert_eq!(t.family, Family::Lucas);
    if t.indices.iter().any(|i| i.get() % 2 == 0) {
        return None;
    }
    let g = t.generators();
    if g.dependency().is_some() {
        return None;
    }
    let mut any = None;
    for pair in Pair::ALL {
        let (m, n, k) = (t.index(pair.0), t.index(pair.1), t.index(pair.third()));
        let common = m.gcd(&n);
        if common == 1 || common.gcd(&k) != 1 {
            continue;
        }
        let l_g = lucas(seq(common));
        let (lm, ln, lk) = (g.get(pair.0), g.get(pair.1), g.get(pair.third()));
        let holds = lk * &l_g + lm + ln > lm * ln / &l_g;
        any = Some(any.unwrap_or(false) || holds);
    }
    any
}

/// `L_k` is a member of `S(L_m / L_g, L_n / L_g)` for an odd-index pair
/// with `g = gcd(m, n)`.
pub fn odd_index_containment(t: &IndexTriple, pair: Pair) -> bool {
    let g = t.generators();
    let l_g = lucas(seq(t.index(pair.0).gcd(&t.index(pair.1))));
    let (x, y) = (g.get(pair.0) / &l_g, g.get(pair.1) / &l_g);
    crate::kernel::representation(g.get(pair.third()), &x, &y).is_some() && !l_g.is_one()
}

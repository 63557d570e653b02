//! Two- and three-generator numerical semigroup machinery: membership,
//! minimality, Johnson's minimal relation matrix and the closed forms that
//! hold for symmetric triples.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::{decimal, BigNat};

/// Writes `c = a*x + b*y` with `a, b >= 0`, returning the solution with the
/// least `a`. `x` and `y` need not be coprime.
pub fn representation(c: &BigNat, x: &BigNat, y: &BigNat) -> Option<(BigNat, BigNat)> {
    assert!(!x.is_zero() && !y.is_zero(), "generators must be positive");
    let g = x.gcd(y);
    if !(c % &g).is_zero() {
        return None;
    }
    let (c, x, y) = (c / &g, x / &g, y / &g);
    if y.is_one() {
        return Some((BigUint::zero(), c));
    }
    // a = c * x^{-1} mod y is the least a >= 0 with y | c - a*x.
    let inv = (&x % &y).modinv(&y).expect("reduced pair is coprime");
    let a = (&c % &y) * inv % &y;
    let ax = &a * &x;
    if ax > c {
        return None;
    }
    let b = (c - ax) / &y;
    Some((a, b))
}

/// A coprime pair `2 <= d1 < d2` generating a two-element semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSet2 {
    #[serde(with = "decimal")]
    d1: BigNat,
    #[serde(with = "decimal")]
    d2: BigNat,
}

impl GenSet2 {
    /// Accepts the pair in either order.
    pub fn new(a: BigNat, b: BigNat) -> Result<Self, Error> {
        let (d1, d2) = if a <= b { (a, b) } else { (b, a) };
        if d1 < BigUint::from(2u32) || d1 == d2 || !d1.gcd(&d2).is_one() {
            return Err(Error::InvalidPair(d1, d2));
        }
        Ok(GenSet2 { d1, d2 })
    }

    pub fn d1(&self) -> &BigNat {
        &self.d1
    }

    pub fn d2(&self) -> &BigNat {
        &self.d2
    }
}

pub fn membership2(c: &BigNat, g: &GenSet2) -> bool {
    representation(c, &g.d1, &g.d2).is_some()
}

/// Sylvester's `d1*d2 - d1 - d2`.
pub fn frobenius2(g: &GenSet2) -> BigNat {
    &g.d1 * &g.d2 - &g.d1 - &g.d2
}

/// Three positive generators held in ascending order. `order[i]` is the
/// input position of the `i`-th smallest generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSet3 {
    #[serde(with = "decimal::array3")]
    values: [BigNat; 3],
    order: [usize; 3],
}

/// Two positions (ascending) of a [`GenSet3`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pair(pub usize, pub usize);

impl Pair {
    pub const ALL: [Pair; 3] = [Pair(0, 1), Pair(0, 2), Pair(1, 2)];

    pub fn third(self) -> usize {
        3 - self.0 - self.1
    }

    pub fn complement_of(position: usize) -> Pair {
        match position {
            0 => Pair(1, 2),
            1 => Pair(0, 2),
            _ => Pair(0, 1),
        }
    }
}

/// `values[dependent] = coefficients.0 * values[others.0] + coefficients.1 * values[others.1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dependency {
    pub dependent: usize,
    pub others: Pair,
    #[serde(with = "decimal::vec")]
    pub coefficients: Vec<BigNat>,
}

impl GenSet3 {
    pub fn new(input: [BigNat; 3]) -> Result<Self, Error> {
        if input.iter().any(Zero::is_zero) {
            return Err(Error::ZeroGenerator);
        }
        let mut order = [0usize, 1, 2];
        order.sort_by(|&i, &j| input[i].cmp(&input[j]).then(i.cmp(&j)));
        let values = order.map(|i| input[i].clone());
        Ok(GenSet3 { values, order })
    }

    pub fn from_u64(a: u64, b: u64, c: u64) -> Result<Self, Error> {
        Self::new([a.into(), b.into(), c.into()])
    }

    pub fn values(&self) -> &[BigNat; 3] {
        &self.values
    }

    pub fn get(&self, position: usize) -> &BigNat {
        &self.values[position]
    }

    pub fn order(&self) -> [usize; 3] {
        self.order
    }

    pub fn gcd(&self) -> BigNat {
        self.values[0].gcd(&self.values[1]).gcd(&self.values[2])
    }

    pub fn sum(&self) -> BigNat {
        self.values.iter().sum()
    }

    pub fn pair_gcd(&self, pair: Pair) -> BigNat {
        self.values[pair.0].gcd(&self.values[pair.1])
    }

    /// First generator (largest first) that the other two represent.
    pub fn dependency(&self) -> Option<Dependency> {
        (0..3).rev().find_map(|dependent| {
            let others = Pair::complement_of(dependent);
            representation(&self.values[dependent], &self.values[others.0], &self.values[others.1])
                .map(|(a, b)| Dependency { dependent, others, coefficients: vec![a, b] })
        })
    }
}

pub fn is_minimal_genset(g: &GenSet3) -> bool {
    g.dependency().is_none()
}

/// Johnson's minimal relation matrix, stored as unsigned magnitudes: row
/// `i` encodes `a[i][i]*d_i = sum_{j != i} a[i][j]*d_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationMatrix {
    pub a: [[BigNat; 3]; 3],
}

impl RelationMatrix {
    pub fn entry(&self, row: usize, col: usize) -> &BigNat {
        &self.a[row][col]
    }

    pub fn row_relations_hold(&self, g: &GenSet3) -> bool {
        (0..3).all(|i| {
            let lhs = &self.a[i][i] * g.get(i);
            let rhs: BigNat = (0..3).filter(|&j| j != i).map(|j| &self.a[i][j] * g.get(j)).sum();
            lhs == rhs
        })
    }

    pub fn row_gcds_are_one(&self) -> bool {
        self.a.iter().all(|row| row[0].gcd(&row[1]).gcd(&row[2]).is_one())
    }

    pub fn has_zero_off_diagonal(&self) -> bool {
        (0..3).any(|i| (0..3).any(|j| i != j && self.a[i][j].is_zero()))
    }

    /// Column sums `a_jj = sum_{i != j} a_ij` and the 2x2 minors that
    /// recover `d_1, d_2, d_3`. Returns the names of the identities that fail.
    pub fn column_and_minor_failures(&self, g: &GenSet3) -> Vec<&'static str> {
        let a = &self.a;
        let mut failures = Vec::new();
        let columns = [
            ("a11 = a21 + a31", &a[0][0], &a[1][0] + &a[2][0]),
            ("a22 = a12 + a32", &a[1][1], &a[0][1] + &a[2][1]),
            ("a33 = a13 + a23", &a[2][2], &a[0][2] + &a[1][2]),
        ];
        for (name, diag, sum) in columns {
            if *diag != sum {
                failures.push(name);
            }
        }
        // The minors are signed; compare the two products instead of subtracting.
        let minors = [
            ("d1 = a22 a33 - a23 a32", &a[1][1] * &a[2][2], &a[1][2] * &a[2][1], g.get(0)),
            ("d2 = a11 a33 - a13 a31", &a[0][0] * &a[2][2], &a[0][2] * &a[2][0], g.get(1)),
            ("d3 = a11 a22 - a12 a21", &a[0][0] * &a[1][1], &a[0][1] * &a[1][0], g.get(2)),
        ];
        for (name, plus, minus, d) in minors {
            if plus != minus + d {
                failures.push(name);
            }
        }
        failures
    }
}

pub fn johnson_matrix(g: &GenSet3) -> Result<RelationMatrix, Error> {
    if !is_minimal_genset(g) {
        return Err(Error::NonMinimalGenerators(g.values().to_vec()));
    }
    let mut a: [[BigNat; 3]; 3] = Default::default();
    for (i, row) in a.iter_mut().enumerate() {
        let Pair(j, k) = Pair::complement_of(i);
        let (dj, dk) = (g.get(j), g.get(k));
        let limit = dj * dk;
        let mut v = BigUint::from(2u32);
        let (cj, ck) = loop {
            assert!(v <= limit, "no relation below d_j * d_k");
            if let Some(w) = representation(&(&v * g.get(i)), dj, dk) {
                break w;
            }
            v += 1u32;
        };
        row[i] = v;
        row[j] = cj;
        row[k] = ck;
    }
    Ok(RelationMatrix { a })
}

/// `H(z) = prod (1 - z^e) / prod (1 - z^d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertForm {
    #[serde(with = "decimal::vec")]
    pub numerator_exponents: Vec<BigNat>,
    #[serde(with = "decimal::vec")]
    pub denominator_exponents: Vec<BigNat>,
}

impl HilbertForm {
    /// Exact power-series coefficients of degrees `0..=limit`.
    pub fn series(&self, limit: u64) -> Result<Vec<i64>, Error> {
        let len = limit as usize + 1;
        let mut c = vec![0i64; len];
        c[0] = 1;
        for e in self.numerator_exponents.iter().filter_map(|e| e.to_usize()) {
            if e == 0 {
                c.iter_mut().for_each(|x| *x = 0);
                continue;
            }
            for s in (e..len).rev() {
                c[s] = c[s].checked_sub(c[s - e]).ok_or(Error::CoefficientOverflow)?;
            }
        }
        for d in self.denominator_exponents.iter().filter_map(|d| d.to_usize()) {
            assert!(d > 0, "denominator exponent must be positive");
            for s in d..len {
                c[s] = c[s].checked_add(c[s - d]).ok_or(Error::CoefficientOverflow)?;
            }
        }
        Ok(c)
    }

    pub fn coefficient(&self, degree: &BigNat, limit: u64) -> Result<i64, Error> {
        match degree.to_u64() {
            Some(s) if s <= limit => Ok(self.series(s)?[s as usize]),
            _ => Err(Error::TruncationExceeded { degree: degree.clone(), limit }),
        }
    }
}

/// Closed-form data of a symmetric semigroup: `pair` carries the gcd
/// `lambda`, `e1 = lcm(pair)`, `e2 = third * lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricCertificate {
    #[serde(with = "decimal::array3")]
    pub generators: [BigNat; 3],
    pub pair: Pair,
    #[serde(with = "decimal")]
    pub lambda: BigNat,
    #[serde(with = "decimal")]
    pub e1: BigNat,
    #[serde(with = "decimal")]
    pub e2: BigNat,
    #[serde(with = "decimal")]
    pub frobenius: BigNat,
    #[serde(with = "decimal")]
    pub genus: BigNat,
}

impl SymmetricCertificate {
    fn from_parts(g: &GenSet3, pair: Pair, lambda: BigNat) -> Result<Self, Error> {
        let (x, y) = (g.get(pair.0), g.get(pair.1));
        let e1 = x.lcm(y);
        let e2 = g.get(pair.third()) * &lambda;
        let sum = g.sum();
        let total = &e1 + &e2;
        if total <= sum {
            return Err(Error::NotSymmetric("closed-form Frobenius number is negative"));
        }
        let frobenius = total - sum;
        if frobenius.is_even() {
            return Err(Error::NotSymmetric("closed-form Frobenius number is even"));
        }
        let genus = (&frobenius + 1u32) >> 1;
        Ok(SymmetricCertificate { generators: g.values().clone(), pair, lambda, e1, e2, frobenius, genus })
    }

    pub fn conductor(&self) -> BigNat {
        &self.frobenius + 1u32
    }

    pub fn hilbert(&self) -> HilbertForm {
        HilbertForm {
            numerator_exponents: vec![self.e1.clone(), self.e2.clone()],
            denominator_exponents: self.generators.to_vec(),
        }
    }

    /// Conductor plus 64, the default truncation for series checks.
    pub fn default_truncation(&self) -> u64 {
        self.conductor().to_u64().map_or(u64::MAX, |c| c.saturating_add(64))
    }
}

/// Checks `gcd(pair) = lambda > 1`, `gcd(third, lambda) = 1` and
/// `third in S(pair / lambda)`, then evaluates the closed forms.
pub fn symmetric_closed_forms(g: &GenSet3, pair: Pair) -> Result<SymmetricCertificate, Error> {
    let lambda = g.pair_gcd(pair);
    if lambda.is_one() {
        return Err(Error::NotSymmetric("pair is coprime"));
    }
    let third = g.get(pair.third());
    if !third.gcd(&lambda).is_one() {
        return Err(Error::NotSymmetric("third generator shares a factor with the pair gcd"));
    }
    let (x, y) = (g.get(pair.0) / &lambda, g.get(pair.1) / &lambda);
    if representation(third, &x, &y).is_none() {
        return Err(Error::NotSymmetric("third generator outside the reduced pair semigroup"));
    }
    SymmetricCertificate::from_parts(g, pair, lambda)
}

/// Closed forms for a triple whose `dependent` generator is redundant: the
/// same formulas with `lambda = 1`, i.e. Sylvester's two-generator case.
pub fn two_generator_closed_forms(g: &GenSet3, dependent: usize) -> Result<SymmetricCertificate, Error> {
    let pair = Pair::complement_of(dependent);
    let gcd = g.pair_gcd(pair);
    if !gcd.is_one() {
        return Err(Error::NotCoprime(gcd));
    }
    if g.get(pair.0).is_one() {
        return Err(Error::TrivialSemigroup);
    }
    if representation(g.get(dependent), g.get(pair.0), g.get(pair.1)).is_none() {
        return Err(Error::NotSymmetric("generator is not redundant"));
    }
    SymmetricCertificate::from_parts(g, pair, BigUint::one())
}

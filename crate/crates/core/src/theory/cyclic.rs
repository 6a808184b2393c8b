//! Closed forms for power graphs of cyclic groups `Z_n`.
//!
//! Vertex `a` of the power graph of `Z_n` is the residue `a`; every divisor
//! `c` of `n` names the vertex `c`, whose class `[c]` is the set of residues
//! with `gcd(x, n) = c`.

use num_rational::Ratio;

use crate::arith::{self, Factorization, Natural};
use crate::error::{Error, Result};

fn overflow(what: &'static str) -> Error {
    Error::Overflow(what)
}

fn factor_at_least_two<T: Natural>(n: T) -> Result<Factorization<T>> {
    let f = arith::factorize(n)?;
    if f.distinct() < 2 {
        return Err(Error::Precondition(format!("{n} must have at least two distinct prime factors")));
    }
    Ok(f)
}

/// Degree of the residue `a` in the power graph of `Z_n`, for `n` not a
/// prime power and `a` neither `0` nor a generator:
/// `n/b + sum_{d | b, d != b} phi(n/d) - 1` with `b = gcd(a, n)`.
pub fn degree_formula_cyclic<T: Natural>(n: T, a: T) -> Result<T> {
    factor_at_least_two(n)?;
    if a.is_zero() || a >= n {
        return Err(Error::Precondition(format!("residue {a} must lie in 1..{n}")));
    }
    let b = arith::gcd(a, n);
    if b == T::one() {
        return Err(Error::Precondition(format!("{a} generates Z_{n}; its degree is n - 1")));
    }
    let mut total = n / b;
    for d in arith::divisors(b)?.into_iter().filter(|&d| d != b) {
        total = total.checked_add(&arith::euler_phi(n / d)?).ok_or(overflow("degree"))?;
    }
    Ok(total - T::one())
}

/// `(delta, c)` where `delta` is the minimum degree of the power graph of
/// `Z_n` and `c` the smallest divisor of `n` whose residue attains it.
///
/// For prime powers the graph is complete and the witness is `n` itself,
/// i.e. the residue `0`. Otherwise only proper divisors `1 < c < n` are
/// evaluated, since every residue shares its degree with `gcd(a, n)`.
pub fn min_degree_cyclic<T: Natural>(n: T) -> Result<(T, T)> {
    if n <= T::one() {
        return Err(Error::Precondition(format!("n = {n} must be at least 2")));
    }
    let f = arith::factorize(n)?;
    if f.is_prime_power() {
        return Ok((n - T::one(), n));
    }
    let mut best: Option<(T, T)> = None;
    for c in arith::divisors_of(&f).into_iter().filter(|&c| c > T::one() && c < n) {
        let deg = degree_formula_cyclic(n, c)?;
        if best.is_none_or(|(d, _)| deg < d) {
            best = Some((deg, c));
        }
    }
    let (delta, c) = best.expect("composite n has a proper divisor");
    debug_assert!(delta > arith::phi_of(&f)?);
    Ok((delta, c))
}

/// Which closed form determines the minimum degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MinDegreeClause {
    /// `n = 1` or `n = p^a`: complete graph, `delta = n - 1`.
    PrimePower,
    /// `n = p1^a1 p2^a2`: attained at `p2^a2`.
    TwoPrimePowers,
    /// `n = p1 p2 p3`: attained at `p3`.
    ThreePrimes,
    /// `n = p1 p2 p3 p4`, odd or `p4 >= p3 + 2(p3 - 1)/(p2 - 1)`: attained at `p4`.
    FourPrimesLargest,
    /// `n = p1 p2 p3 p4`, even and below the threshold: attained at `p3 p4`.
    FourPrimesTopPair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicMinDegree<T> {
    pub clause: MinDegreeClause,
    pub value: T,
    /// Divisor whose residue attains the minimum (`n` stands for `0`).
    pub witness: T,
}

/// `p4 >= p3 + 2(p3 - 1)/(p2 - 1)`, in exact rational arithmetic.
pub fn four_prime_threshold_holds<T: Natural>(p2: T, p3: T, p4: T) -> bool {
    let one = T::one();
    let two = one + one;
    let bound = Ratio::from_integer(p3) + Ratio::new(two * (p3 - one), p2 - one);
    Ratio::from_integer(p4) >= bound
}

/// The closed-form minimum degree for the families of `n` where one is
/// known: `n = 1`, prime powers, `p1^a1 p2^a2`, `p1 p2 p3` and
/// `p1 p2 p3 p4`. `None` for every other `n`.
pub fn cyclic_min_degree_closed_form<T: Natural>(n: T) -> Result<Option<CyclicMinDegree<T>>> {
    let f = arith::factorize(n)?;
    let one = T::one();
    let phi = arith::phi_of(&f)?;
    let prod = |xs: &[T]| xs.iter().try_fold(one, |acc, &x| acc.checked_mul(&x).ok_or(overflow("closed form")));
    let pairs = f.pairs();
    let result = match pairs {
        [] | [_] => CyclicMinDegree { clause: MinDegreeClause::PrimePower, value: n - one, witness: n },
        [(p1, a1), (p2, a2)] => {
            let q1 = arith::checked_pow(*p1, *a1)?;
            let q2 = arith::checked_pow(*p2, *a2)?;
            // (p2^a2 - 1) phi(p1^a1) + p1^a1 - 1
            let value = (q2 - one).checked_mul(&(q1 - q1 / *p1)).ok_or(overflow("closed form"))? + q1 - one;
            CyclicMinDegree { clause: MinDegreeClause::TwoPrimePowers, value, witness: q2 }
        }
        [(p1, 1), (p2, 1), (p3, 1)] => {
            // phi(n) + p1 p2 - 1
            let value = phi + prod(&[*p1, *p2])? - one;
            CyclicMinDegree { clause: MinDegreeClause::ThreePrimes, value, witness: *p3 }
        }
        [(p1, 1), (p2, 1), (p3, 1), (p4, 1)] => {
            let odd = n.is_odd();
            if odd || four_prime_threshold_holds(*p2, *p3, *p4) {
                // phi(n) + p1 p2 p3 - 1
                let value = phi + prod(&[*p1, *p2, *p3])? - one;
                CyclicMinDegree { clause: MinDegreeClause::FourPrimesLargest, value, witness: *p4 }
            } else {
                // (p2 - 1)(p3 p4 + 1) + 1
                let value = (*p2 - one).checked_mul(&(prod(&[*p3, *p4])? + one)).ok_or(overflow("closed form"))? + one;
                CyclicMinDegree { clause: MinDegreeClause::FourPrimesTopPair, value, witness: prod(&[*p3, *p4])? }
            }
        }
        _ => return Ok(None),
    };
    Ok(Some(result))
}

/// `(eta1, eta2)` upper bounds on the minimum degree for `n` with at least
/// two distinct primes `p1 < ... < pr`:
///
/// * `eta1 = n/pr^ar + (pr^ar - 1) phi(n/pr^ar) - 1`, the degree of `pr^ar`;
/// * `eta2 = n/(p(r-1) pr) + phi(n) + phi(n/pr) + phi(n/p(r-1)) - 1`, the
///   degree of `p(r-1) pr`.
pub fn eta_bounds<T: Natural>(n: T) -> Result<(T, T)> {
    let f = factor_at_least_two(n)?;
    let r = f.distinct();
    let one = T::one();
    let top = f.prime_power(r - 1);
    let rest = n / top;
    let eta1 = (top - one)
        .checked_mul(&arith::euler_phi(rest)?)
        .and_then(|x| x.checked_add(&rest))
        .ok_or(overflow("eta1"))?
        - one;
    let (p_prev, p_last) = (f.pairs()[r - 2].0, f.pairs()[r - 1].0);
    let eta2 = [arith::phi_of(&f)?, arith::euler_phi(n / p_last)?, arith::euler_phi(n / p_prev)?]
        .into_iter()
        .try_fold(n / (p_prev * p_last), |acc, x| acc.checked_add(&x))
        .ok_or(overflow("eta2"))?
        - one;
    Ok((eta1, eta2))
}

/// Clauses of the degree comparison inequalities for `n = p1^a1 ... pr^ar`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DegCompareClause {
    /// `deg(p1^a1) >= deg(pr^ar)`.
    SmallestVsLargestPrimePower,
    /// `deg(pi^g) >= deg(pi^b)` for `1 <= g < b <= ai`.
    LowerPowerOfSamePrime,
    /// `deg(pi^b) >= deg(pj^b)` for `i < j`, `1 <= b <= min(ai, aj)`.
    SmallerPrimeSamePower,
    /// `deg(p1^b1 ... pr^br) >= deg(p2^b2 ... pr^br)` for `1 <= bi <= ai`
    /// and `sum bi < sum ai`.
    DropSmallestPrime,
}

/// One evaluated inequality `deg(larger_vertex) >= deg(smaller_vertex)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeComparison<T> {
    pub clause: DegCompareClause,
    pub larger_vertex: T,
    pub smaller_vertex: T,
    pub larger_degree: T,
    pub smaller_degree: T,
}

impl<T: Natural> DegreeComparison<T> {
    pub fn holds(&self) -> bool {
        self.larger_degree >= self.smaller_degree
    }
}

/// Evaluates every instance of the four comparison clauses allowed for `n`
/// through [`degree_formula_cyclic`].
pub fn degcompare_check<T: Natural>(n: T) -> Result<Vec<DegreeComparison<T>>> {
    let f = factor_at_least_two(n)?;
    let pairs = f.pairs();
    let r = pairs.len();
    let mut out = Vec::new();
    let mut compare = |clause, larger: T, smaller: T| -> Result<()> {
        out.push(DegreeComparison {
            clause,
            larger_vertex: larger,
            smaller_vertex: smaller,
            larger_degree: degree_formula_cyclic(n, larger)?,
            smaller_degree: degree_formula_cyclic(n, smaller)?,
        });
        Ok(())
    };

    compare(DegCompareClause::SmallestVsLargestPrimePower, f.prime_power(0), f.prime_power(r - 1))?;
    for &(p, a) in pairs {
        for g in 1..a {
            for b in g + 1..=a {
                compare(DegCompareClause::LowerPowerOfSamePrime, p.pow(g), p.pow(b))?;
            }
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            for b in 1..=pairs[i].1.min(pairs[j].1) {
                compare(DegCompareClause::SmallerPrimeSamePower, pairs[i].0.pow(b), pairs[j].0.pow(b))?;
            }
        }
    }
    let total: u32 = pairs.iter().map(|&(_, a)| a).sum();
    let mut betas = vec![1u32; r];
    loop {
        if betas.iter().sum::<u32>() < total {
            let tail = (1..r).fold(T::one(), |acc, i| acc * pairs[i].0.pow(betas[i]));
            compare(DegCompareClause::DropSmallestPrime, tail * pairs[0].0.pow(betas[0]), tail)?;
        }
        // odometer over 1 <= beta_i <= alpha_i
        let mut k = 0;
        while k < r && betas[k] == pairs[k].1 {
            betas[k] = 1;
            k += 1;
        }
        if k == r {
            break;
        }
        betas[k] += 1;
    }
    Ok(out)
}

/// Whether vertex connectivity equals minimum degree for `Z_n`: exactly
/// when `n` is a prime power or `n = 2 q^b` with `q` an odd prime. The
/// common value is `n - 1` for prime powers and `n - n/2^a` otherwise,
/// `a` being the exponent of 2 in `n`.
pub fn kappa_delta_classify_cyclic<T: Natural>(n: T) -> Result<(bool, Option<T>)> {
    if n <= T::one() {
        return Err(Error::Precondition(format!("n = {n} must be at least 2")));
    }
    let f = arith::factorize(n)?;
    let two = T::one() + T::one();
    if f.is_prime_power() {
        return Ok((true, Some(n - T::one())));
    }
    if let [(p, 1), (q, _)] = f.pairs() {
        if *p == two && q.is_odd() {
            let alpha = arith::valuation(n, two);
            return Ok((true, Some(n - n / arith::checked_pow(two, alpha)?)));
        }
    }
    Ok((false, None))
}

/// Vertex connectivity of the power graph of `Z_n` for `n = p^a q^b`:
/// `phi(n) + p^(a-1) q^(b-1)`.
pub fn kappa_closed_form_cyclic<T: Natural>(n: T) -> Result<T> {
    let f = arith::factorize(n)?;
    let [(p, a), (q, b)] = f.pairs() else {
        return Err(Error::Precondition(format!("{n} must have exactly two distinct prime factors")));
    };
    let extra = arith::checked_pow(*p, a - 1)?
        .checked_mul(&arith::checked_pow(*q, b - 1)?)
        .ok_or(overflow("connectivity"))?;
    arith::phi_of(&f)?.checked_add(&extra).ok_or(overflow("connectivity"))
}

/// Residues `x` of `Z_n` with `gcd(x, n) = d`, i.e. the class `[d]`.
pub fn residue_class(n: u64, d: u64) -> Vec<u64> {
    (1..=n).filter(|&x| arith::gcd(x, n) == d).map(|x| x % n).collect()
}

/// `{0} ∪ ⋃ [a]` over divisors `a` of `n/2` other than `n/2`: the minimum
/// separating set of the power graph of `Z_n` when connectivity equals
/// minimum degree and `n` is not a prime power. It equals `N(n/2)`.
pub fn min_separating_set_cyclic(n: u64) -> Result<Vec<u64>> {
    let (equal, _) = kappa_delta_classify_cyclic(n)?;
    if !equal || arith::factorize(n)?.is_prime_power() {
        return Err(Error::Precondition(format!("Z_{n} is outside the family 2q^b with connectivity = minimum degree")));
    }
    let half = n / 2;
    let mut set = vec![0];
    for a in arith::divisors(half)?.into_iter().filter(|&a| a != half) {
        set.extend(residue_class(n, a));
    }
    set.sort_unstable();
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_formula_examples() {
        assert_eq!(degree_formula_cyclic(12u64, 2), Ok(9));
        assert_eq!(degree_formula_cyclic(12u64, 6), Ok(9));
        assert_eq!(degree_formula_cyclic(12u64, 3), Ok(7));
        assert_eq!(degree_formula_cyclic(30u64, 5), Ok(13));
        assert_eq!(degree_formula_cyclic(30u32, 5), Ok(13));
    }

    #[test]
    fn degree_formula_rejections() {
        assert!(degree_formula_cyclic(16u64, 2).is_err());
        assert!(degree_formula_cyclic(7u64, 2).is_err());
        assert!(degree_formula_cyclic(12u64, 5).is_err());
        assert!(degree_formula_cyclic(12u64, 0).is_err());
        assert!(degree_formula_cyclic(12u64, 12).is_err());
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(min_degree_cyclic(12u64), Ok((7, 3)));
        assert_eq!(min_degree_cyclic(30u64), Ok((13, 5)));
        assert_eq!(min_degree_cyclic(210u64), Ok((73, 35)));
        assert_eq!(min_degree_cyclic(330u64), Ok((109, 11)));
        assert_eq!(min_degree_cyclic(49u64), Ok((48, 49)));
        assert_eq!(min_degree_cyclic(2u64), Ok((1, 2)));
        assert!(min_degree_cyclic(1u64).is_err());
    }

    #[test]
    fn closed_form_clauses() {
        let cf = |n: u64| cyclic_min_degree_closed_form(n).unwrap();
        assert_eq!(cf(12), Some(CyclicMinDegree { clause: MinDegreeClause::TwoPrimePowers, value: 7, witness: 3 }));
        assert_eq!(cf(30), Some(CyclicMinDegree { clause: MinDegreeClause::ThreePrimes, value: 13, witness: 5 }));
        assert_eq!(cf(210), Some(CyclicMinDegree { clause: MinDegreeClause::FourPrimesTopPair, value: 73, witness: 35 }));
        assert_eq!(cf(330), Some(CyclicMinDegree { clause: MinDegreeClause::FourPrimesLargest, value: 109, witness: 11 }));
        assert_eq!(cf(1155).map(|c| c.clause), Some(MinDegreeClause::FourPrimesLargest));
        assert_eq!(cf(1).map(|c| c.value), Some(0));
        assert_eq!(cf(27).map(|c| c.value), Some(26));
        assert_eq!(cf(60), None);
        assert_eq!(cf(2310), None);
    }

    #[test]
    fn threshold_is_exact_at_the_boundary() {
        // p2 = 3, p3 = 7: bound is 7 + 12/2 = 13 exactly
        assert!(four_prime_threshold_holds(3u64, 7, 13));
        assert!(!four_prime_threshold_holds(3u64, 7, 11));
        // p2 = 5, p3 = 7: bound 7 + 12/4 = 10
        assert!(four_prime_threshold_holds(5u64, 7, 11));
        // p2 = 7, p3 = 11: bound 11 + 20/6 = 14.33..
        assert!(!four_prime_threshold_holds(7u64, 11, 13));
        assert!(four_prime_threshold_holds(7u64, 11, 17));
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta_bounds(12u64), Ok((7, 9)));
        // delta(330) = 109 is attained at 11, so eta1 is the sharp bound there
        assert_eq!(eta_bounds(330u64), Ok((109, 113)));
        assert_eq!(eta_bounds(210u64).map(|e| e.1), Ok(73));
        assert!(eta_bounds(16u64).is_err());
        assert!(eta_bounds(13u64).is_err());
    }

    #[test]
    fn degcompare_examples() {
        let rows = degcompare_check(12u64).unwrap();
        let find = |clause, l: u64, s: u64| {
            rows.iter().find(|r| r.clause == clause && r.larger_vertex == l && r.smaller_vertex == s).cloned()
        };
        let i = find(DegCompareClause::SmallestVsLargestPrimePower, 4, 3).unwrap();
        assert_eq!((i.larger_degree, i.smaller_degree), (8, 7));
        let ii = find(DegCompareClause::LowerPowerOfSamePrime, 2, 4).unwrap();
        assert_eq!((ii.larger_degree, ii.smaller_degree), (9, 8));
        assert!(rows.iter().all(DegreeComparison::holds));

        let rows = degcompare_check(60u64).unwrap();
        assert!(rows
            .iter()
            .any(|r| r.clause == DegCompareClause::DropSmallestPrime && r.larger_vertex == 30 && r.smaller_vertex == 15));
        assert!(rows.iter().all(DegreeComparison::holds));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(kappa_delta_classify_cyclic(18u64), Ok((true, Some(9))));
        assert_eq!(kappa_delta_classify_cyclic(12u64), Ok((false, None)));
        assert_eq!(kappa_delta_classify_cyclic(49u64), Ok((true, Some(48))));
        assert_eq!(kappa_delta_classify_cyclic(2u64), Ok((true, Some(1))));
        assert_eq!(kappa_delta_classify_cyclic(6u64), Ok((true, Some(3))));
        assert_eq!(kappa_delta_classify_cyclic(30u64), Ok((false, None)));
        assert!(kappa_delta_classify_cyclic(1u64).is_err());
    }

    #[test]
    fn connectivity_closed_form() {
        assert_eq!(kappa_closed_form_cyclic(12u64), Ok(6));
        assert_eq!(kappa_closed_form_cyclic(18u64), Ok(9));
        assert_eq!(kappa_closed_form_cyclic(35u64), Ok(arith::euler_phi(35u64).unwrap() + 1));
        assert!(kappa_closed_form_cyclic(30u64).is_err());
        assert!(kappa_closed_form_cyclic(8u64).is_err());
    }

    #[test]
    fn separating_sets() {
        assert_eq!(min_separating_set_cyclic(6), Ok(vec![0, 1, 5]));
        let a18 = min_separating_set_cyclic(18).unwrap();
        assert_eq!(a18.len(), 9);
        assert!(!a18.contains(&9));
        assert_eq!(min_separating_set_cyclic(50).unwrap().len(), 25);
        assert!(min_separating_set_cyclic(12).is_err());
        assert!(min_separating_set_cyclic(16).is_err());
    }
}

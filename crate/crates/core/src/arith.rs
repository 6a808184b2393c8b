//! Exact integer number theory over any unsigned primitive integer.
//!
//! Every routine here is generic over [`Natural`], so the same code serves
//! `u32` sweeps, the crate's default [`crate::Int`] and `u128` headroom checks.
//! Intermediate products are checked; an overflow is reported as
//! [`Error::Overflow`] instead of wrapping.

use std::fmt::{self, Debug, Display};

use num_integer::Integer;
use num_traits::{PrimInt, Unsigned};

use crate::error::{Error, Result};

/// Unsigned primitive integers usable by the arithmetic layer.
pub trait Natural: PrimInt + Unsigned + Integer + Debug + Display + Send + Sync + 'static {
    fn as_u128(self) -> u128 {
        self.to_u128().expect("unsigned primitive fits in u128")
    }
}

impl<T> Natural for T where T: PrimInt + Unsigned + Integer + Debug + Display + Send + Sync + 'static {}

/// Prime factorization `p1^a1 * p2^a2 * ... * pr^ar` with `p1 < p2 < ... < pr`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Factorization<T> {
    pairs: Vec<(T, u32)>,
}

impl<T: Natural> Factorization<T> {
    /// Ascending `(prime, exponent)` pairs; empty for 1.
    pub fn pairs(&self) -> &[(T, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = T> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    /// Number of distinct prime factors.
    pub fn distinct(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_one(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_prime(&self) -> bool {
        matches!(self.pairs.as_slice(), [(_, 1)])
    }

    pub fn is_prime_power(&self) -> bool {
        self.pairs.len() == 1
    }

    /// Exponent of `p`, zero when `p` does not divide.
    pub fn exponent_of(&self, p: T) -> u32 {
        self.pairs
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, a)| a)
    }

    /// `p^a` for the pair at `index`.
    pub fn prime_power(&self, index: usize) -> T {
        let (p, a) = self.pairs[index];
        p.pow(a)
    }

    /// Reconstructs the factored number.
    pub fn value(&self) -> Result<T> {
        self.pairs.iter().try_fold(T::one(), |acc, &(p, a)| {
            checked_pow(p, a).and_then(|pp| acc.checked_mul(&pp).ok_or(Error::Overflow("factorization product")))
        })
    }
}

impl<T: Natural> Debug for Factorization<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.pairs.iter()).finish()
    }
}

impl<T: Natural> Display for Factorization<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, a)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if *a == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{a}")?;
            }
        }
        Ok(())
    }
}

pub fn checked_pow<T: Natural>(base: T, exp: u32) -> Result<T> {
    num_traits::checked_pow(base, exp as usize).ok_or(Error::Overflow("power"))
}

fn ensure_positive<T: Natural>(n: T, what: &'static str) -> Result<()> {
    if n.is_zero() {
        Err(Error::NonPositive(what))
    } else {
        Ok(())
    }
}

/// Trial-division factorization.
pub fn factorize<T: Natural>(n: T) -> Result<Factorization<T>> {
    ensure_positive(n, "n")?;
    let mut pairs = Vec::new();
    let mut rest = n;
    let two = T::one() + T::one();
    let mut d = two;
    while d <= rest / d {
        if rest % d == T::zero() {
            let mut a = 0;
            while rest % d == T::zero() {
                rest = rest / d;
                a += 1;
            }
            pairs.push((d, a));
        }
        d = if d == two { d + T::one() } else { d + two };
    }
    if rest > T::one() {
        pairs.push((rest, 1));
    }
    Ok(Factorization { pairs })
}

pub fn is_prime<T: Natural>(n: T) -> bool {
    !n.is_zero() && factorize(n).map(|f| f.is_prime()).unwrap_or(false)
}

/// Largest `a` with `p^a | n`; `p` must be at least 2.
pub fn valuation<T: Natural>(n: T, p: T) -> u32 {
    debug_assert!(p > T::one());
    let mut rest = n;
    let mut a = 0;
    while !rest.is_zero() && rest % p == T::zero() {
        rest = rest / p;
        a += 1;
    }
    a
}

/// Euler's totient from the product formula over the factorization.
pub fn euler_phi<T: Natural>(n: T) -> Result<T> {
    phi_of(&factorize(n)?)
}

/// Totient of an already factored number.
pub fn phi_of<T: Natural>(f: &Factorization<T>) -> Result<T> {
    f.pairs().iter().try_fold(T::one(), |acc, &(p, a)| {
        let high = checked_pow(p, a)?;
        let low = high / p;
        acc.checked_mul(&(high - low)).ok_or(Error::Overflow("euler phi"))
    })
}

/// All positive divisors of `n`, ascending.
pub fn divisors<T: Natural>(n: T) -> Result<Vec<T>> {
    Ok(divisors_of(&factorize(n)?))
}

pub fn divisors_of<T: Natural>(f: &Factorization<T>) -> Vec<T> {
    let mut out = vec![T::one()];
    for &(p, a) in f.pairs() {
        let len = out.len();
        let mut pk = T::one();
        for _ in 0..a {
            pk = pk * p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

fn check_prime_divisor<T: Natural>(n: T, p: T) -> Result<u32> {
    ensure_positive(n, "n")?;
    if !is_prime(p) || n % p != T::zero() {
        return Err(Error::NotPrimeDivisor { n: n.as_u128(), p: p.as_u128() });
    }
    Ok(valuation(n, p))
}

/// `sum_{d | n/p^beta} phi(n/d)`, evaluated term by term.
///
/// In debug builds the result is checked against
/// [`divisor_phi_sum_closed_form`].
pub fn divisor_phi_sum<T: Natural>(n: T, p: T, beta: u32) -> Result<T> {
    let alpha = check_prime_divisor(n, p)?;
    if beta == 0 || beta > alpha {
        return Err(Error::ExponentOutOfRange { beta, alpha });
    }
    let m = n / checked_pow(p, beta)?;
    let mut sum = T::zero();
    for d in divisors(m)? {
        sum = sum.checked_add(&euler_phi(n / d)?).ok_or(Error::Overflow("divisor phi sum"))?;
    }
    debug_assert_eq!(Ok(sum), divisor_phi_sum_closed_form(n, p, beta));
    Ok(sum)
}

/// `n - n/p^(alpha - beta + 1)` where `alpha` is the `p`-adic valuation of `n`.
pub fn divisor_phi_sum_closed_form<T: Natural>(n: T, p: T, beta: u32) -> Result<T> {
    let alpha = check_prime_divisor(n, p)?;
    if beta == 0 || beta > alpha {
        return Err(Error::ExponentOutOfRange { beta, alpha });
    }
    Ok(n - n / checked_pow(p, alpha - beta + 1)?)
}

pub fn gcd<T: Natural>(a: T, b: T) -> T {
    a.gcd(&b)
}

pub fn lcm<T: Natural>(a: T, b: T) -> Result<T> {
    if a.is_zero() || b.is_zero() {
        return Ok(T::zero());
    }
    (a / a.gcd(&b)).checked_mul(&b).ok_or(Error::Overflow("lcm"))
}

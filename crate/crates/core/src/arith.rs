//! Integer and rational helpers shared by the engines.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// The ordinary binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is divisible by i + 1 at every step
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The binomial `C(x + n, n)` extended to all integers `x` as the
/// polynomial `(x + 1)(x + 2)…(x + n) / n!`.
///
/// The product of `n` consecutive integers is divisible by `n!`, so the
/// result is always an integer.
pub fn binomial_polynomial(x: &BigInt, n: u64) -> BigInt {
    let mut prod = BigInt::one();
    for j in 1..=n {
        prod *= x + BigInt::from(j);
    }
    prod / BigInt::from(factorial(n))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut q = 2u64;
    while q.saturating_mul(q) <= n {
        if n.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

/// Distinct prime factors of `n` in increasing order, by trial division.
pub fn prime_support(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut q = 2u64;
    while q.saturating_mul(q) <= n {
        if n.is_multiple_of(q) {
            primes.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

/// Primes `q` with `q <= n`, in increasing order.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&q| is_prime(q)).collect()
}

/// Exponent of the prime `q` in `n!` (Legendre's formula).
pub fn factorial_valuation(n: u64, q: u64) -> u64 {
    let mut v = 0;
    let mut power = q;
    while power <= n {
        v += n / power;
        match power.checked_mul(q) {
            Some(next) => power = next,
            None => break,
        }
    }
    v
}

/// Largest `r` with `r^k <= v`.
pub fn nth_root_floor(v: &BigUint, k: u32) -> BigUint {
    assert!(k >= 1, "root degree must be positive");
    v.nth_root(k)
}

/// `Some(r)` when `v = r^k` exactly.
pub fn exact_nth_root(v: &BigUint, k: u32) -> Option<BigUint> {
    let r = nth_root_floor(v, k);
    (r.pow(k) == *v).then_some(r)
}

/// `Some(r)` when the nonnegative rational `v` equals `r^k` for a rational `r >= 0`.
///
/// A reduced fraction is a perfect `k`-th power exactly when numerator and
/// denominator are.
pub fn rational_nth_root(v: &BigRational, k: u32) -> Option<BigRational> {
    if v.is_negative() {
        return None;
    }
    let num = v.numer().magnitude();
    let den = v.denom().magnitude();
    let rn = exact_nth_root(num, k)?;
    let rd = exact_nth_root(den, k)?;
    Some(BigRational::new(BigInt::from(rn), BigInt::from(rd)))
}

/// Converts a rational to an unsigned integer when it is a nonnegative integer.
pub fn rational_to_biguint(v: &BigRational) -> Option<BigUint> {
    if v.is_integer() && !v.is_negative() {
        v.numer().to_biguint()
    } else {
        None
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

//! Exact arithmetic in the cyclotomic field Q(zeta_N).
//!
//! Elements are rational polynomials in zeta_N reduced modulo the N-th
//! cyclotomic polynomial, so equal values have equal coefficient vectors
//! and equality is decidable. Conjugation maps zeta^k to zeta^(N-k).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients of the n-th cyclotomic polynomial, ascending degree, monic.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by all lower-order cyclotomic polynomials of divisors
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = BigInt::from(-1);
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            poly = div_exact(&poly, &phi_d);
        }
    }
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

// exact division of integer polynomials, divisor monic
fn div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    assert!(den[dn].is_one());
    let out_len = rem.len() - dn;
    let mut out = vec![BigInt::zero(); out_len];
    for k in (0..out_len).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        out[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division was not exact");
    out
}

/// An element of Q(zeta_N) in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u64,
    /// length = deg(Phi_N); index k holds the coefficient of zeta^k
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(order: u64) -> Self {
        let deg = cyclotomic_polynomial(order).len() - 1;
        Cyclotomic {
            order,
            coeffs: vec![BigRational::zero(); deg.max(1)],
        }
    }

    pub fn one(order: u64) -> Self {
        Cyclotomic::from_rational(order, BigRational::one())
    }

    pub fn from_rational(order: u64, q: BigRational) -> Self {
        let mut out = Cyclotomic::zero(order);
        out.coeffs[0] = q;
        out
    }

    pub fn from_integer(order: u64, n: i64) -> Self {
        Cyclotomic::from_rational(order, BigRational::from_integer(BigInt::from(n)))
    }

    /// zeta_N^k
    pub fn root_of_unity(order: u64, k: u64) -> Self {
        let mut raw = vec![BigRational::zero(); order as usize];
        raw[(k % order) as usize] = BigRational::one();
        Cyclotomic::from_raw(order, raw)
    }

    /// Any coefficient vector over powers of zeta_N (length arbitrary,
    /// exponents mod N), reduced to canonical form.
    pub fn from_raw(order: u64, raw: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        // wrap exponents into [0, N)
        let mut wrapped = vec![BigRational::zero(); order as usize];
        for (k, c) in raw.into_iter().enumerate() {
            if !c.is_zero() {
                wrapped[k % order as usize] += c;
            }
        }
        // reduce modulo Phi_N
        for k in (deg..order as usize).rev() {
            let c = std::mem::replace(&mut wrapped[k], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for (i, p) in phi.iter().enumerate().take(deg) {
                wrapped[k - deg + i] -= &c * BigRational::from_integer(p.clone());
            }
        }
        wrapped.truncate(deg.max(1));
        Cyclotomic {
            order,
            coeffs: wrapped,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.order, other.order, "mixed cyclotomic orders");
        Cyclotomic {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.order, other.order, "mixed cyclotomic orders");
        Cyclotomic {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.order, other.order, "mixed cyclotomic orders");
        let mut raw = vec![BigRational::zero(); 2 * self.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        Cyclotomic::from_raw(self.order, raw)
    }

    pub fn scale(&self, q: &BigRational) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * q).collect(),
        }
    }

    /// Complex conjugation: zeta^k -> zeta^(N-k).
    pub fn conjugate(&self) -> Cyclotomic {
        let n = self.order as usize;
        let mut raw = vec![BigRational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[(n - k) % n] += c;
            }
        }
        Cyclotomic::from_raw(self.order, raw)
    }

    /// Galois action zeta -> zeta^k for gcd(k, N) = 1 (k = N-1 is conjugation).
    pub fn galois(&self, k: u64) -> Cyclotomic {
        let n = self.order as usize;
        let mut raw = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[(i * k as usize) % n] += c;
            }
        }
        Cyclotomic::from_raw(self.order, raw)
    }

    /// The rational value, when the element lies in Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        let q = self.to_rational()?;
        q.is_integer().then(|| q.to_integer())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = if k == 0 {
                format!("{c}")
            } else if c.is_one() {
                format!("z^{k}")
            } else {
                format!("{c}*z^{k}")
            };
            terms.push(t);
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn cyclotomic_polynomials_match_tables() {
        assert_eq!(cyclotomic_polynomial(1), vec![BigInt::from(-1), BigInt::one()]);
        // Phi_2 = x + 1, Phi_3 = x^2 + x + 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1
        let to_i64 = |v: Vec<BigInt>| -> Vec<i64> {
            v.into_iter().map(|b| i64::try_from(b).unwrap()).collect()
        };
        assert_eq!(to_i64(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
        // degree = Euler phi
        assert_eq!(cyclotomic_polynomial(60).len() - 1, 16);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in [3u64, 5, 6, 12] {
            let mut acc = Cyclotomic::zero(n);
            for k in 0..n {
                acc = acc.add(&Cyclotomic::root_of_unity(n, k));
            }
            assert!(acc.is_zero(), "sum of all {n}-th roots");
        }
    }

    #[test]
    fn multiplication_wraps_and_reduces() {
        let z = Cyclotomic::root_of_unity(6, 1);
        let mut p = Cyclotomic::one(6);
        for _ in 0..6 {
            p = p.mul(&z);
        }
        assert_eq!(p, Cyclotomic::one(6));
        // zeta_6^3 = -1
        let m = z.mul(&z).mul(&z);
        assert_eq!(m, Cyclotomic::from_integer(6, -1));
    }

    #[test]
    fn conjugation_fixes_rationals_and_inverts_roots() {
        let q = Cyclotomic::from_rational(5, rat(7, 3));
        assert_eq!(q.conjugate(), q);
        let z = Cyclotomic::root_of_unity(5, 2);
        assert_eq!(z.conjugate(), Cyclotomic::root_of_unity(5, 3));
        // z * conj(z) = 1
        assert_eq!(z.mul(&z.conjugate()), Cyclotomic::one(5));
    }

    #[test]
    fn golden_ratio_quadratics() {
        // (1+sqrt5)/2 = -z5^2 - z5^3 satisfies x^2 = x + 1
        let phi = Cyclotomic::root_of_unity(5, 2)
            .add(&Cyclotomic::root_of_unity(5, 3))
            .neg();
        let sq = phi.mul(&phi);
        assert_eq!(sq, phi.add(&Cyclotomic::one(5)));
        assert_eq!(phi.to_rational(), None);
    }

    #[test]
    fn rational_detection() {
        // 1 + z + z^2 + z^3 + z^4 = 0 in Q(zeta_5)
        let mut acc = Cyclotomic::zero(5);
        for k in 0..5 {
            acc = acc.add(&Cyclotomic::root_of_unity(5, k));
        }
        assert_eq!(acc.to_integer(), Some(BigInt::zero()));
        let z = Cyclotomic::root_of_unity(8, 1);
        // z8 + z8^7 = sqrt(2) is irrational
        assert_eq!(z.add(&z.conjugate()).to_rational(), None);
        // but its square is 2
        let s = z.add(&z.conjugate());
        assert_eq!(s.mul(&s).to_integer(), Some(BigInt::from(2)));
    }
}

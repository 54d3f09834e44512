//! Finite fields `GF(p^k)` with elements encoded as integers in `[0, q)`.
//!
//! The encoding of a residue `c_0 + c_1 t + .. + c_{k-1} t^{k-1}` is
//! `c_0 + c_1 p + .. + c_{k-1} p^{k-1}`. The modulus is the smallest monic
//! irreducible polynomial of degree `k` under that encoding of its lower
//! coefficients; `ξ` is the smallest element of multiplicative order `q - 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::quotient::is_prime;

pub const MAX_FIELD_ORDER: u32 = 1 << 16;

/// Field element encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElem(pub u32);

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub struct GaloisField {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    xi: FieldElem,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}) mod {:?}", self.q, self.modulus)
    }
}

/// `p^k` for a prime power `q`, if it is one.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut k = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

// Polynomials over GF(p), coefficients low to high, no trailing zeros.

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = pow_mod(m[dm], p - 2, p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let factor = r[r.len() - 1] * lead_inv % p;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - factor * c % p) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn pow_mod(mut b: u32, mut e: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut base = (b % p) as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    b = acc as u32;
    b
}

fn digits(mut x: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(x % p);
        x /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn is_irreducible_over_prime(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d as u32) {
            let mut g = digits(low, p, d);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl GaloisField {
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p as usize) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::Invalid("extension degree must be positive".into()));
        }
        let q = (p as u64).checked_pow(k).filter(|&q| q <= MAX_FIELD_ORDER as u64);
        let q = q.ok_or_else(|| Error::TooLarge(format!("GF({p}^{k})")))? as u32;

        let modulus = (0..q)
            .map(|low| {
                let mut f = digits(low, p, k as usize);
                f.push(1);
                f
            })
            .find(|f| is_irreducible_over_prime(f, p))
            .expect("irreducible polynomials exist in every degree");

        let slow_mul = |a: u32, b: u32| -> u32 {
            let prod = poly_mul(&trim(digits(a, p, k as usize)), &trim(digits(b, p, k as usize)), p);
            let mut r = poly_rem(&prod, &modulus, p);
            r.resize(k as usize, 0);
            undigits(&r, p)
        };
        let slow_pow = |a: u32, mut e: u32| -> u32 {
            let (mut acc, mut base) = (1, a);
            while e > 0 {
                if e & 1 == 1 {
                    acc = slow_mul(acc, base);
                }
                base = slow_mul(base, base);
                e >>= 1;
            }
            acc
        };
        let group_order = q - 1;
        let prime_factors: Vec<u32> = (2..=group_order)
            .filter(|&r| group_order.is_multiple_of(r) && is_prime(r as usize))
            .collect();
        let xi = (1..q)
            .find(|&a| prime_factors.iter().all(|&r| slow_pow(a, group_order / r) != 1))
            .expect("the multiplicative group is cyclic");

        let mut exp = Vec::with_capacity(group_order as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = 1;
        for i in 0..group_order {
            exp.push(x);
            log[x as usize] = i;
            x = slow_mul(x, xi);
        }
        Ok(GaloisField {
            p,
            k,
            q,
            modulus,
            exp,
            log,
            xi: FieldElem(xi),
        })
    }

    /// The field of order `q`, which must be a prime power.
    pub fn of_order(q: u32) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or_else(|| Error::Invalid(format!("{q} is not a prime power")))?;
        GaloisField::new(p, k)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Monic modulus, coefficients low to high.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Primitive element `ξ`.
    pub fn xi(&self) -> FieldElem {
        self.xi
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q).map(FieldElem)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FieldElem> {
        (1..self.q).map(FieldElem)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.k == 1 {
            return FieldElem((a.0 + b.0) % self.p);
        }
        if self.p == 2 {
            return FieldElem(a.0 ^ b.0);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0, 1);
        while x > 0 || y > 0 {
            out += (x % self.p + y % self.p) % self.p * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElem(out)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0, 0, 1);
        while x > 0 {
            out += (self.p - x % self.p) % self.p * place;
            x /= self.p;
            place *= self.p;
        }
        FieldElem(out)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem(0);
        }
        let l = (self.log[a.0 as usize] + self.log[b.0 as usize]) % (self.q - 1);
        FieldElem(self.exp[l as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        (a.0 != 0).then(|| {
            let l = (self.q - 1 - self.log[a.0 as usize]) % (self.q - 1);
            FieldElem(self.exp[l as usize])
        })
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return FieldElem(1);
        }
        if a.0 == 0 {
            return FieldElem(0);
        }
        let l = (self.log[a.0 as usize] as u64 * e) % (self.q as u64 - 1);
        FieldElem(self.exp[l as usize])
    }

    /// `ξ^i`.
    pub fn xi_pow(&self, i: u64) -> FieldElem {
        FieldElem(self.exp[(i % (self.q as u64 - 1)) as usize])
    }

    /// Discrete log base `ξ` of a nonzero element.
    pub fn log_xi(&self, a: FieldElem) -> Option<u32> {
        (a.0 != 0).then(|| self.log[a.0 as usize])
    }

    pub fn multiplicative_order(&self, a: FieldElem) -> Option<u32> {
        let l = self.log_xi(a)?;
        let n = self.q - 1;
        Some(n / crate::quotient::gcd(l as usize, n as usize) as u32)
    }

    /// Roots of the monic quadratic `t² + c t + e`, smallest first.
    pub fn quadratic_roots(&self, c: FieldElem, e: FieldElem) -> Vec<FieldElem> {
        self.elements()
            .filter(|&x| {
                let v = self.add(self.add(self.mul(x, x), self.mul(c, x)), e);
                v.0 == 0
            })
            .collect()
    }
}

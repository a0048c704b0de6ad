//! Arithmetic in `F_{p^n}` as polynomials over `Z_p` modulo a fixed irreducible.
//!
//! Elements are length-`n` coefficient vectors in ascending degree. The
//! canonical integer encoding `sum coeffs[i] * p^i` fixes the enumeration order
//! used everywhere downstream.

use crate::error::{Error, Result};
use crate::numtheory::{factorize, is_prime};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub coeffs: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    n: u32,
    /// Monic, ascending degree, length `n + 1`.
    modulus: Vec<u32>,
    q: u32,
}

impl FiniteField {
    /// Builds `F_{p^n}` with the lexicographically smallest monic irreducible
    /// modulus, comparing ascending-degree coefficient sequences.
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        if n == 0 {
            return Err(Error::invalid("extension degree must be at least 1"));
        }
        let q = (p as u128).checked_pow(n).unwrap_or(u128::MAX);
        if q > MAX_FIELD_ORDER as u128 {
            return Err(Error::capacity(
                "field order",
                q.min(u64::MAX as u128) as u64,
                MAX_FIELD_ORDER,
            ));
        }
        let (p, q) = (p as u32, q as u32);
        let modulus = smallest_irreducible(p, n);
        Ok(FiniteField { p, n, modulus, q })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.n as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.constant(1)
    }

    pub fn constant(&self, c: u32) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = c % self.p;
        e
    }

    /// The class of `x` in the quotient ring. In a prime field (`n = 1`, modulus `x`)
    /// this is zero.
    pub fn generator(&self) -> FieldElement {
        if self.n == 1 {
            // x = -c0 modulo the linear modulus x + c0
            return self.constant((self.p - self.modulus[0]) % self.p);
        }
        let mut e = self.zero();
        e.coeffs[1] = 1;
        e
    }

    pub fn encode(&self, x: &FieldElement) -> u32 {
        x.coeffs
            .iter()
            .rev()
            .fold(0u32, |acc, &c| acc * self.p + c)
    }

    pub fn decode(&self, mut code: u32) -> FieldElement {
        debug_assert!(code < self.q);
        let mut e = self.zero();
        for c in e.coeffs.iter_mut() {
            *c = code % self.p;
            code /= self.p;
        }
        e
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|c| self.decode(c))
    }

    pub fn is_zero(&self, x: &FieldElement) -> bool {
        x.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| (x + y) % self.p)
                .collect(),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect(),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let n = self.n as usize;
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * n];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // reduce by the monic modulus from the top down
        for d in (n..2 * n).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            for (k, &m) in self.modulus.iter().enumerate() {
                let idx = d - n + k;
                prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
            }
        }
        FieldElement {
            coeffs: prod[..n].iter().map(|&c| c as u32).collect(),
        }
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    /// `x^(p^k)`, the `k`-th power of the Frobenius map; `k` is taken mod `n`.
    pub fn frobenius(&self, x: &FieldElement, k: i64) -> FieldElement {
        let k = k.rem_euclid(self.n as i64);
        (0..k).fold(x.clone(), |acc, _| self.pow(&acc, self.p as u64))
    }

    /// Multiplicative order of a nonzero element (brute force).
    pub fn multiplicative_order(&self, x: &FieldElement) -> Result<u64> {
        if self.is_zero(x) {
            return Err(Error::DivisionByZero);
        }
        let one = self.one();
        let mut acc = x.clone();
        let mut k = 1;
        while acc != one {
            acc = self.mul(&acc, x);
            k += 1;
        }
        Ok(k)
    }

    /// First element in canonical order generating the multiplicative group.
    pub fn primitive_element(&self) -> FieldElement {
        let m = self.q as u64 - 1;
        let primes: Vec<u64> = factorize(m).into_iter().map(|(r, _)| r).collect();
        let one = self.one();
        (1..self.q)
            .map(|c| self.decode(c))
            .find(|x| primes.iter().all(|r| self.pow(x, m / r) != one))
            .expect("multiplicative group of a finite field is cyclic")
    }

    /// Display as a polynomial in `t`, e.g. `t^2+2t+1`.
    pub fn format(&self, x: &FieldElement) -> String {
        let mut terms = Vec::new();
        for (i, &c) in x.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}t"),
                _ => format!("{coef}t^{i}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    pub(crate) fn tables(&self) -> FieldTables {
        FieldTables::new(self)
    }
}

/// Lookup tables over canonical encodings, used when building group tables.
#[derive(Debug, Clone)]
pub(crate) struct FieldTables {
    pub q: usize,
    pub n: usize,
    pub add: Vec<u32>,
    pub mul: Vec<u32>,
    /// `frob[k * q + x] = x^(p^k)`
    pub frob: Vec<u32>,
}

impl FieldTables {
    fn new(f: &FiniteField) -> Self {
        let q = f.q as usize;
        let n = f.n as usize;
        let elems: Vec<FieldElement> = f.elements().collect();
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i * q + j] = f.encode(&f.add(a, b));
                mul[i * q + j] = f.encode(&f.mul(a, b));
            }
        }
        let mut frob = vec![0; n * q];
        for k in 0..n {
            for (i, a) in elems.iter().enumerate() {
                frob[k * q + i] = f.encode(&f.frobenius(a, k as i64));
            }
        }
        FieldTables { q, n, add, mul, frob }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn frob(&self, k: usize, a: u32) -> u32 {
        self.frob[(k % self.n) * self.q + a as usize]
    }
}

fn smallest_irreducible(p: u32, n: u32) -> Vec<u32> {
    let count = (p as u64).pow(n);
    for t in 0..count {
        // big-endian base-p digits of t are (c_0, ..., c_{n-1})
        let mut poly = vec![0u32; n as usize + 1];
        let mut rest = t;
        for i in (0..n as usize).rev() {
            poly[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        poly[n as usize] = 1;
        if is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over prime fields")
}

/// Exhaustive factor test: no monic divisor of degree `1..=deg/2`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for t in 0..(p as u64).pow(d as u32) {
            let mut g = vec![0u32; d + 1];
            let mut rest = t;
            for c in g.iter_mut().take(d) {
                *c = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            g[d] = 1;
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `f` modulo monic `g` over `Z_p`.
fn poly_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    let p = p as u64;
    for d in (dg..r.len()).rev() {
        let c = r[d] % p;
        if c == 0 {
            continue;
        }
        for (k, &gc) in g.iter().enumerate() {
            let idx = d - dg + k;
            r[idx] = (r[idx] + (p - c) * gc as u64) % p;
        }
    }
    r.truncate(dg);
    r.into_iter().map(|c| c as u32).collect()
}

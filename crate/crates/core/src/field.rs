//! Small finite fields `F_{p^m}`.
//!
//! Elements are encoded as integers `0..q`: the base-`p` digits of the code are
//! the coefficients of the polynomial representative, constant term first. The
//! integer order of codes is the canonical total order on field elements used by
//! every canonical form downstream.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A field element, encoded as described in the module docs.
pub type Elem = u32;

/// Default cap on the extension degree accepted by [`FiniteField::new`].
pub const DEFAULT_DEGREE_CAP: u32 = 12;

/// Hard cap on the field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

// Full addition/multiplication tables are kept below this size.
const TABLE_LIMIT: u32 = 256;

#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, coefficients constant term first, length `m + 1`.
    modulus: Vec<u32>,
    exp: Vec<Elem>,
    log: Vec<u32>,
    add_table: Option<Vec<Elem>>,
    mul_table: Option<Vec<Elem>>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.spec())
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A `p^m` field specification as written on the command line (`5`, `2^2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
}

impl FieldSpec {
    pub fn size(&self) -> u64 {
        (self.p as u64).pow(self.m)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.m)
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `p`, `p^m`, or a prime power written out (`4`, `9`, `25`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad field spec `{s}`"));
        if let Some((p, m)) = s.split_once('^') {
            let p: u32 = p.trim().parse().map_err(|_| bad())?;
            let m: u32 = m.trim().parse().map_err(|_| bad())?;
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if m == 0 {
                return Err(bad());
            }
            return Ok(FieldSpec { p, m });
        }
        let q: u32 = s.parse().map_err(|_| bad())?;
        if q < 2 {
            return Err(bad());
        }
        let p = (2..=q).find(|d| q % d == 0).unwrap();
        let mut rest = q;
        let mut m = 0;
        while rest % p == 0 {
            rest /= p;
            m += 1;
        }
        if rest != 1 {
            return Err(Error::NotPrime(q));
        }
        Ok(FieldSpec { p, m })
    }
}

// ---- polynomials over F_p, coefficients constant term first ----

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p);
    while r.len() > df {
        let shift = r.len() - 1 - df;
        let c = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        for (k, &fk) in f.iter().enumerate() {
            let t = (c as u64 * fk as u64 % p as u64) as u32;
            r[shift + k] = (r[shift + k] + p - t) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    poly_trim(&mut out);
    out
}

fn poly_mulmod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    poly_rem(&poly_mul(a, b, p), f, p)
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime and small
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// Irreducibility of a monic polynomial over `F_p` by the distinct-degree test:
/// `gcd(f, x^{p^k} - x) = 1` for every `k <= deg f / 2`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let m = f.len() - 1;
    if m == 0 {
        return false;
    }
    if m == 1 {
        return true;
    }
    let x = vec![0, 1];
    let mut xp = poly_rem(&x, f, p);
    for _ in 1..=m / 2 {
        // xp <- xp^p mod f
        let mut acc = vec![1u32];
        for _ in 0..p {
            acc = poly_mulmod(&acc, &xp, f, p);
        }
        xp = acc;
        let mut diff = xp.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        poly_trim(&mut diff);
        let g = poly_gcd(f, &diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

impl FiniteField {
    /// Builds `F_{p^m}` with the default degree cap.
    pub fn new(p: u32, m: u32) -> Result<Self> {
        Self::with_degree_cap(p, m, DEFAULT_DEGREE_CAP)
    }

    pub fn from_spec(spec: FieldSpec) -> Result<Self> {
        Self::new(spec.p, spec.m)
    }

    /// Builds `F_{p^m}` whose modulus is the lexicographically smallest monic
    /// irreducible of degree `m`, coefficients compared from the constant term.
    pub fn with_degree_cap(p: u32, m: u32, cap: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 || m > cap {
            return Err(Error::DegreeTooLarge { degree: m, cap });
        }
        let size = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if size > MAX_FIELD_SIZE {
            return Err(Error::DegreeTooLarge { degree: m, cap });
        }
        let q = size as u32;
        let modulus = smallest_irreducible(p, m);
        let mut field = FiniteField {
            p,
            m,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
            mul_table: None,
        };
        field.build_log_tables();
        if q <= TABLE_LIMIT {
            let mut add = vec![0; (q * q) as usize];
            let mut mul = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    add[(a * q + b) as usize] = field.add_slow(a, b);
                    mul[(a * q + b) as usize] = field.mul_slow(a, b);
                }
            }
            field.add_table = Some(add);
            field.mul_table = Some(mul);
        }
        Ok(field)
    }

    fn digits(&self, a: Elem) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.m as usize);
        let mut a = a;
        for _ in 0..self.m {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    fn from_digits(&self, d: &[u32]) -> Elem {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn build_log_tables(&mut self) {
        let q = self.q;
        if q == 2 {
            self.exp = vec![1];
            self.log = vec![0, 0];
            return;
        }
        for g in 2..q {
            let gd = self.digits(g);
            let mut powers = Vec::with_capacity((q - 1) as usize);
            let mut cur = vec![1u32];
            loop {
                let code = {
                    let mut d = cur.clone();
                    d.resize(self.m as usize, 0);
                    self.from_digits(&d)
                };
                if !powers.is_empty() && code == 1 {
                    break;
                }
                powers.push(code);
                if powers.len() as u32 > q - 1 {
                    break;
                }
                cur = poly_mulmod(&cur, &gd, &self.modulus, self.p);
            }
            if powers.len() as u32 == q - 1 {
                let mut log = vec![0u32; q as usize];
                for (k, &e) in powers.iter().enumerate() {
                    log[e as usize] = k as u32;
                }
                self.exp = powers;
                self.log = log;
                return;
            }
        }
        unreachable!("multiplicative group of a finite field is cyclic");
    }

    fn add_slow(&self, a: Elem, b: Elem) -> Elem {
        if self.m == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % (self.q as u64 - 1);
        self.exp[s as usize]
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.p,
            m: self.m,
        }
    }

    /// Modulus coefficients, constant term first (monic, length `m + 1`).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q
    }

    /// The class of `x` in `F_p[x]/(f)`.
    pub fn generator(&self) -> Elem {
        if self.m == 1 {
            // x is the root of the modulus x - c
            (self.p - self.modulus[0]) % self.p
        } else {
            self.p
        }
    }

    /// A fixed generator of the multiplicative group.
    pub fn primitive(&self) -> Elem {
        if self.q == 2 {
            1
        } else {
            self.exp[1]
        }
    }

    /// Embeds an integer into the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.p as i64) as Elem
    }

    pub fn in_prime_subfield(&self, a: Elem) -> bool {
        a < self.p
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.add_table {
            Some(t) => t[(a * self.q + b) as usize],
            None => self.add_slow(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.mul_table {
            Some(t) => t[(a * self.q + b) as usize],
            None => self.mul_slow(a, b),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.m == 1 {
            return (self.p - a) % self.p;
        }
        let d: Vec<u32> = self
            .digits(a)
            .into_iter()
            .map(|c| (self.p - c) % self.p)
            .collect();
        self.from_digits(&d)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let l = self.log[a as usize];
        let n = self.q - 1;
        Some(self.exp[((n - l) % n) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        let l = self.log[a as usize] as u64;
        self.exp[((l * (e % n)) % n) as usize]
    }

    /// `x -> x^{p^s}`.
    pub fn frobenius(&self, s: u32, x: Elem) -> Elem {
        if x == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        let mut e = 1u64;
        for _ in 0..s % self.m {
            e = e * self.p as u64 % n.max(1);
        }
        self.pow(x, e)
    }

    /// Evaluates a polynomial with coefficients in this field (constant term first).
    pub fn eval_poly(&self, coeffs: &[Elem], x: Elem) -> Elem {
        coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// All roots in the field, by exhaustive evaluation, in canonical order.
    pub fn solve_univariate(&self, coeffs: &[Elem]) -> Vec<Elem> {
        self.elements()
            .filter(|&x| self.eval_poly(coeffs, x) == 0)
            .collect()
    }

    /// Display form: the polynomial in the generator, e.g. `x+1`.
    pub fn format(&self, a: Elem) -> String {
        if self.m == 1 {
            return a.to_string();
        }
        let d = self.digits(a);
        let mut terms = Vec::new();
        for (k, &c) in d.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".into(),
                (1, c) => format!("{c}x"),
                (k, 1) => format!("x^{k}"),
                (k, c) => format!("{c}x^{k}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    let count = (p as u64).pow(m);
    for idx in 0..count {
        // c_0 is the most significant digit so that codes run in lex order
        let mut f = vec![0u32; m as usize + 1];
        let mut rest = idx;
        for j in (0..m as usize).rev() {
            f[j] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        f[m as usize] = 1;
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree");
}

/// An injective ring map `F_{p^a} -> F_{p^m}`.
#[derive(Debug, Clone)]
pub struct SubfieldEmbedding {
    table: Vec<Elem>,
    image_of_generator: Elem,
}

impl SubfieldEmbedding {
    /// The image of the class of `x` in the subfield is the root of the
    /// subfield modulus in the big field with the least code.
    pub fn new(sub: &FiniteField, big: &FiniteField) -> Result<Self> {
        if sub.p != big.p || big.m % sub.m != 0 {
            return Err(Error::NotSubfield {
                sub: sub.spec().to_string(),
                big: big.spec().to_string(),
            });
        }
        let lifted: Vec<Elem> = sub.modulus.iter().map(|&c| c as Elem).collect();
        let theta = big
            .elements()
            .find(|&x| big.eval_poly(&lifted, x) == 0)
            .expect("a subfield modulus splits in the extension");
        let table = sub
            .elements()
            .map(|a| {
                let d = sub.digits(a);
                let coeffs: Vec<Elem> = d.iter().map(|&c| c as Elem).collect();
                big.eval_poly(&coeffs, theta)
            })
            .collect();
        Ok(SubfieldEmbedding {
            table,
            image_of_generator: theta,
        })
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.table[a as usize]
    }

    pub fn image_of_generator(&self) -> Elem {
        self.image_of_generator
    }

    pub fn image(&self) -> &[Elem] {
        &self.table
    }
}

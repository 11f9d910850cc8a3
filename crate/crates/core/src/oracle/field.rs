//! `GF(p^e)` with elements encoded as integers whose base-`p` digits are
//! polynomial coefficients, lowest degree first.

use crate::ring::arith;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisField {
    p: u64,
    degree: u32,
    order: u64,
    /// Monic irreducible modulus, lowest degree first, length `degree + 1`.
    modulus: Vec<u64>,
}

impl GaloisField {
    /// `GF(q)` for a prime power `q`, using [`smallest_irreducible`].
    pub fn new(q: u64) -> Option<Self> {
        let (p, degree) = arith::prime_power(q)?;
        Some(GaloisField {
            p,
            degree,
            order: q,
            modulus: smallest_irreducible(p, degree),
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn digits(&self, mut x: u64) -> Vec<u64> {
        (0..self.degree)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn undigits(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn zip(&self, a: u64, b: u64, f: impl Fn(u64, u64) -> u64) -> u64 {
        let (da, db) = (self.digits(a), self.digits(b));
        let out: Vec<u64> = da
            .iter()
            .zip(&db)
            .map(|(&x, &y)| f(x, y) % self.p)
            .collect();
        self.undigits(&out)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.zip(a, b, |x, y| x + y)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        let p = self.p;
        self.zip(a, b, |x, y| x + p - y)
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.sub(0, a)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let product = poly_mul(&self.digits(a), &self.digits(b), self.p);
        let mut reduced = poly_rem(&product, &self.modulus, self.p);
        reduced.resize(self.degree as usize, 0);
        self.undigits(&reduced)
    }

    pub fn is_unit(&self, a: u64) -> bool {
        a != 0
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder of `a` modulo a monic `b`, length `deg b`.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    while r.len() > db {
        let lead = r.pop().expect("nonempty");
        if lead != 0 {
            let shift = r.len() - db;
            for (i, &c) in b[..db].iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - lead) * c) % p;
            }
        }
    }
    r
}

/// Monic polynomial of degree `degree` whose lower coefficients, read from
/// `x^{degree-1}` down to `x^0`, are the base-`p` digits of `index`.
fn monic_from_index(p: u64, degree: u32, mut index: u64) -> Vec<u64> {
    let mut coeffs: Vec<u64> = (0..degree)
        .map(|_| {
            let d = index % p;
            index /= p;
            d
        })
        .collect();
    coeffs.push(1);
    coeffs
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let degree = (f.len() - 1) as u32;
    for d in 1..=degree / 2 {
        for index in 0..p.pow(d) {
            let g = monic_from_index(p, d, index);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible polynomial of the given
/// degree over `GF(p)`, comparing coefficients from `x^{degree-1}` down to
/// `x^0`. Returned lowest degree first.
pub fn smallest_irreducible(p: u64, degree: u32) -> Vec<u64> {
    (0..p.pow(degree))
        .map(|index| monic_from_index(p, degree, index))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

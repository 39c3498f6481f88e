//! Residue field arithmetic for F_q with q = p^e.
//!
//! Elements are canonical indices in `0..q`. The index decodes as a base-p
//! digit vector, read as polynomial coefficients over F_p with the constant
//! term in the least significant digit. For e = 1 this is plain arithmetic
//! modulo p; for e > 1 it is polynomial arithmetic modulo a caller-supplied
//! irreducible polynomial, with add/mul tables built once at construction.

use crate::error::{Error, Result};

/// Largest extension field for which multiplication tables are built.
const MAX_TABLE_Q: u64 = 4096;

#[derive(Debug, Clone)]
pub struct Field {
    p: u64,
    e: u32,
    q: u64,
    /// Monic modulus coefficients c_0..c_e (little-endian), present iff e > 1.
    modulus: Option<Vec<u64>>,
    add_table: Vec<u32>,
    mul_table: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn pow(base: u64, exp: u32) -> u64 {
    base.checked_pow(exp).expect("field size overflow")
}

/// Reduce `poly` modulo the monic polynomial `modulus` over F_p (both
/// little-endian coefficient vectors).
fn poly_rem(poly: &mut Vec<u64>, modulus: &[u64], p: u64) {
    let deg_m = modulus.len() - 1;
    while poly.len() > deg_m {
        let lead = *poly.last().unwrap() % p;
        let shift = poly.len() - 1 - deg_m;
        if lead != 0 {
            for (i, &c) in modulus.iter().enumerate() {
                let idx = shift + i;
                let sub = (lead * c) % p;
                poly[idx] = (poly[idx] + p * p - sub) % p;
            }
        }
        poly.pop();
    }
    while poly.len() > 1 && *poly.last().unwrap() == 0 {
        poly.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn poly_is_zero(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}

/// Trial-division irreducibility test over F_p: a polynomial of degree e is
/// reducible iff it has a monic factor of degree 1..=e/2.
fn is_irreducible(modulus: &[u64], p: u64) -> bool {
    let e = modulus.len() - 1;
    if e == 0 {
        return false;
    }
    if modulus[0] == 0 {
        // divisible by x
        return e == 1;
    }
    for deg in 1..=(e / 2) {
        let count = pow(p, deg as u32);
        for idx in 0..count {
            // monic candidate of degree `deg`
            let mut cand = Vec::with_capacity(deg + 1);
            let mut t = idx;
            for _ in 0..deg {
                cand.push(t % p);
                t /= p;
            }
            cand.push(1);
            let mut rem = modulus.to_vec();
            poly_rem(&mut rem, &cand, p);
            if poly_is_zero(&rem) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Prime field F_p.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        Ok(Field {
            p,
            e: 1,
            q: p,
            modulus: None,
            add_table: Vec::new(),
            mul_table: Vec::new(),
        })
    }

    /// Extension field F_{p^e} given the modulus coefficients c_e..c_0
    /// (most significant first, as written in file headers).
    pub fn extension(p: u64, e: u32, coeffs_msd: &[u64]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if e < 2 {
            return Err(Error::InvalidRing(
                "extension degree must be at least 2 when a modulus polynomial is supplied".into(),
            ));
        }
        if coeffs_msd.len() != e as usize + 1 {
            return Err(Error::InvalidRing(format!(
                "modulus polynomial needs {} coefficients, got {}",
                e + 1,
                coeffs_msd.len()
            )));
        }
        if coeffs_msd.iter().any(|&c| c >= p) {
            return Err(Error::InvalidRing(format!(
                "modulus coefficients must lie in 0..{p}"
            )));
        }
        let q = pow(p, e);
        if q > MAX_TABLE_Q {
            return Err(Error::InvalidRing(format!(
                "residue field of size {q} exceeds the supported maximum of {MAX_TABLE_Q}"
            )));
        }
        let mut modulus: Vec<u64> = coeffs_msd.iter().rev().copied().collect();
        let lead = *modulus.last().unwrap();
        if lead == 0 {
            return Err(Error::InvalidRing("modulus leading coefficient is zero".into()));
        }
        if lead != 1 {
            // normalize to monic; irreducibility and the quotient ring are unchanged
            let inv = mod_inverse(lead, p);
            for c in modulus.iter_mut() {
                *c = (*c * inv) % p;
            }
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::ReduciblePolynomial(p));
        }

        let mut field = Field {
            p,
            e,
            q,
            modulus: Some(modulus),
            add_table: Vec::new(),
            mul_table: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        let modulus = self.modulus.as_ref().unwrap().clone();
        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        for a in 0..q as u64 {
            let pa = self.decode(a);
            for b in 0..q as u64 {
                let pb = self.decode(b);
                let sum: Vec<u64> = pa
                    .iter()
                    .zip(pb.iter())
                    .map(|(&x, &y)| (x + y) % self.p)
                    .collect();
                add[(a * self.q + b) as usize] = self.encode(&sum) as u32;
                let mut prod = poly_mul(&pa, &pb, self.p);
                poly_rem(&mut prod, &modulus, self.p);
                mul[(a * self.q + b) as usize] = self.encode(&prod) as u32;
            }
        }
        self.add_table = add;
        self.mul_table = mul;
    }

    /// Base-p digits of an index, padded to length e.
    fn decode(&self, idx: u64) -> Vec<u64> {
        let mut out = vec![0u64; self.e as usize];
        let mut t = idx;
        for d in out.iter_mut() {
            *d = t % self.p;
            t /= self.p;
        }
        out
    }

    fn encode(&self, coeffs: &[u64]) -> u64 {
        let mut idx = 0;
        for &c in coeffs.iter().rev() {
            idx = idx * self.p + c;
        }
        idx
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients c_e..c_0 (most significant first), if any.
    pub fn modulus_msd(&self) -> Option<Vec<u64>> {
        self.modulus
            .as_ref()
            .map(|m| m.iter().rev().copied().collect())
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.q && b < self.q);
        if self.e == 1 {
            (a + b) % self.p
        } else {
            self.add_table[(a * self.q + b) as usize] as u64
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.q && b < self.q);
        if self.e == 1 {
            (a * b) % self.p
        } else {
            self.mul_table[(a * self.q + b) as usize] as u64
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        debug_assert!(a < self.q);
        if self.e == 1 {
            (self.p - a) % self.p
        } else {
            // negate each base-p digit
            let coeffs: Vec<u64> = self.decode(a).iter().map(|&c| (self.p - c) % self.p).collect();
            self.encode(&coeffs)
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime, a != 0: Fermat
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

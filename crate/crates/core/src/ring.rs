//! Finite chain rings of the two supported families, with exact arithmetic,
//! theta-adic digit access, ideal enumeration and the homogeneous weight.
//!
//! Supported rings: Z_{p^m} (family `Zpm`, maximal ideal generated by p) and
//! F_q[u]/(u^m) with q = p^e (family `Fqum`, maximal ideal generated by u).
//! An element is identified by its canonical index
//! `a_0 + a_1*q + ... + a_{m-1}*q^{m-1}` where (a_0, ..., a_{m-1}) are its
//! theta-adic digits as residue field indices. For Zpm the canonical index is
//! exactly the integer value of the element, so the canonical element order
//! is 0, 1, ..., p^m - 1; for Fqum it is the lexicographic order on
//! (a_{m-1}, ..., a_0).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Z_{p^m}, theta = p.
    Zpm,
    /// F_q[u]/(u^m), theta = u.
    Fqum,
}

/// One ring element, identified by its canonical index. Elements are plain
/// values; all arithmetic goes through the [`Ring`] that owns them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u64);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    pub fn index(self) -> u64 {
        self.0
    }
}

#[derive(Debug, Clone)]
pub struct Ring {
    family: Family,
    p: u64,
    e: u32,
    m: u32,
    q: u64,
    size: u64,
    field: Field,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
            && self.p == other.p
            && self.e == other.e
            && self.m == other.m
            && self.field.modulus_msd() == other.field.modulus_msd()
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.header())
    }
}

pub type RingRef = Arc<Ring>;

impl Ring {
    /// Z_{p^m}.
    pub fn zpm(p: u64, m: u32) -> Result<Ring> {
        Ring::new(Family::Zpm, p, 1, m, None)
    }

    /// F_{p^e}[u]/(u^m); `modulus_msd` lists the e+1 modulus coefficients
    /// most significant first and is required exactly when e > 1.
    pub fn fqum(p: u64, e: u32, m: u32, modulus_msd: Option<&[u64]>) -> Result<Ring> {
        Ring::new(Family::Fqum, p, e, m, modulus_msd)
    }

    pub fn new(
        family: Family,
        p: u64,
        e: u32,
        m: u32,
        modulus_msd: Option<&[u64]>,
    ) -> Result<Ring> {
        if m < 2 {
            return Err(Error::DepthTooSmall(m));
        }
        if e < 1 {
            return Err(Error::InvalidRing("extension degree must be at least 1".into()));
        }
        if family == Family::Zpm && e != 1 {
            return Err(Error::InvalidRing(
                "Z_{p^m} has prime residue field; e must be 1".into(),
            ));
        }
        if family == Family::Zpm && modulus_msd.is_some() {
            return Err(Error::InvalidRing("Z_{p^m} takes no modulus polynomial".into()));
        }
        let field = match (e, modulus_msd) {
            (1, None) => Field::prime(p)?,
            (1, Some(_)) => {
                return Err(Error::InvalidRing(
                    "modulus polynomial is only meaningful for e > 1".into(),
                ))
            }
            (_, Some(coeffs)) => Field::extension(p, e, coeffs)?,
            (_, None) => {
                return Err(Error::InvalidRing(
                    "extension degree > 1 requires a modulus polynomial".into(),
                ))
            }
        };
        let q = field.q();
        let size = q
            .checked_pow(m)
            .ok_or_else(|| Error::InvalidRing("ring size overflows u64".into()))?;
        Ok(Ring {
            family,
            p,
            e,
            m,
            q,
            size,
            field,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// Depth of the ideal chain.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Residue field size.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// |R| = q^m.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `ring zpm p=<p> m=<m>` or `ring fqum p=<p> e=<e> m=<m> [poly=<c_e,...,c_0>]`.
    pub fn header(&self) -> String {
        match self.family {
            Family::Zpm => format!("ring zpm p={} m={}", self.p, self.m),
            Family::Fqum => match self.field.modulus_msd() {
                Some(coeffs) => format!(
                    "ring fqum p={} e={} m={} poly={}",
                    self.p,
                    self.e,
                    self.m,
                    coeffs
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ),
                None => format!("ring fqum p={} e={} m={}", self.p, self.e, self.m),
            },
        }
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        Elem(1)
    }

    /// The generator of the maximal ideal (p resp. u); canonical index q.
    pub fn theta(&self) -> Elem {
        Elem(self.q)
    }

    /// theta^j for 0 <= j <= m (theta^m = 0).
    pub fn theta_pow(&self, j: u32) -> Result<Elem> {
        if j > self.m {
            return Err(Error::IndexOutOfRange {
                index: j as u64,
                limit: self.m as u64 + 1,
            });
        }
        if j == self.m {
            return Ok(Elem(0));
        }
        Ok(Elem(self.q.pow(j)))
    }

    pub fn elem(&self, index: u64) -> Result<Elem> {
        if index >= self.size {
            return Err(Error::IndexOutOfRange {
                index,
                limit: self.size,
            });
        }
        Ok(Elem(index))
    }

    /// Theta-adic digits (a_0, ..., a_{m-1}) as residue field indices.
    pub fn digits(&self, x: Elem) -> Vec<u64> {
        let mut out = vec![0u64; self.m as usize];
        let mut t = x.0;
        for d in out.iter_mut() {
            *d = t % self.q;
            t /= self.q;
        }
        out
    }

    pub fn from_digits(&self, digits: &[u64]) -> Result<Elem> {
        if digits.len() != self.m as usize {
            return Err(Error::InvalidParameters(format!(
                "expected {} digits, got {}",
                self.m,
                digits.len()
            )));
        }
        let mut idx = 0u64;
        for &d in digits.iter().rev() {
            if d >= self.q {
                return Err(Error::IndexOutOfRange {
                    index: d,
                    limit: self.q,
                });
            }
            idx = idx * self.q + d;
        }
        Ok(Elem(idx))
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(a.0 < self.size && b.0 < self.size);
        match self.family {
            Family::Zpm => Elem((a.0 + b.0) % self.size),
            Family::Fqum => {
                let da = self.digits(a);
                let db = self.digits(b);
                let sum: Vec<u64> = da
                    .iter()
                    .zip(db.iter())
                    .map(|(&x, &y)| self.field.add(x, y))
                    .collect();
                self.from_digits(&sum).unwrap()
            }
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        debug_assert!(a.0 < self.size);
        match self.family {
            Family::Zpm => Elem((self.size - a.0) % self.size),
            Family::Fqum => {
                let neg: Vec<u64> = self.digits(a).iter().map(|&x| self.field.neg(x)).collect();
                self.from_digits(&neg).unwrap()
            }
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(a.0 < self.size && b.0 < self.size);
        match self.family {
            Family::Zpm => Elem(((a.0 as u128 * b.0 as u128) % self.size as u128) as u64),
            Family::Fqum => {
                // truncated convolution: u^m = 0
                let da = self.digits(a);
                let db = self.digits(b);
                let m = self.m as usize;
                let mut out = vec![0u64; m];
                for i in 0..m {
                    if da[i] == 0 {
                        continue;
                    }
                    for j in 0..m - i {
                        if db[j] == 0 {
                            continue;
                        }
                        let prod = self.field.mul(da[i], db[j]);
                        out[i + j] = self.field.add(out[i + j], prod);
                    }
                }
                self.from_digits(&out).unwrap()
            }
        }
    }

    /// Theta-valuation: smallest i with digit a_i != 0, or m for zero.
    pub fn valuation(&self, x: Elem) -> u32 {
        if x.0 == 0 {
            return self.m;
        }
        let mut t = x.0;
        let mut v = 0;
        while t % self.q == 0 {
            t /= self.q;
            v += 1;
        }
        v
    }

    /// x is a unit iff its constant theta-adic digit is nonzero.
    pub fn is_unit(&self, x: Elem) -> bool {
        x.0 % self.q != 0
    }

    /// Membership in the ideal generated by theta^j.
    pub fn in_ideal(&self, x: Elem, j: u32) -> bool {
        self.valuation(x) >= j
    }

    /// The homogeneous weight with normalization gamma = (q-1)q^{m-2}.
    pub fn hom_weight(&self, x: Elem) -> u64 {
        if x.0 == 0 {
            0
        } else if self.valuation(x) >= self.m - 1 {
            self.q.pow(self.m - 1)
        } else {
            (self.q - 1) * self.q.pow(self.m - 2)
        }
    }

    /// gamma = (q-1)q^{m-2}, the average homogeneous weight on nonzero
    /// cyclic submodules.
    pub fn gamma(&self) -> u64 {
        (self.q - 1) * self.q.pow(self.m - 2)
    }

    /// All multiples of theta^j in canonical order; j = m gives {0}.
    pub fn ideal_elements(&self, j: u32) -> Result<Vec<Elem>> {
        if j > self.m {
            return Err(Error::IndexOutOfRange {
                index: j as u64,
                limit: self.m as u64 + 1,
            });
        }
        let count = self.q.pow(self.m - j);
        let step = self.q.pow(j);
        Ok((0..count).map(|t| Elem(t * step)).collect())
    }

    /// All units in canonical order; |R^x| = q^m - q^{m-1}.
    pub fn units(&self) -> Vec<Elem> {
        (0..self.size)
            .map(Elem)
            .filter(|&x| self.is_unit(x))
            .collect()
    }

    /// All ring elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.size).map(Elem)
    }

    pub fn require_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    // ---- vector helpers ----

    pub fn vec_add(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b.iter()).map(|(&x, &y)| self.add(x, y)).collect()
    }

    pub fn vec_sub(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b.iter()).map(|(&x, &y)| self.sub(x, y)).collect()
    }

    pub fn vec_scale(&self, s: Elem, a: &[Elem]) -> Vec<Elem> {
        a.iter().map(|&x| self.mul(s, x)).collect()
    }

    pub fn inner_product(&self, a: &[Elem], b: &[Elem]) -> Elem {
        debug_assert_eq!(a.len(), b.len());
        let mut acc = Elem(0);
        for (&x, &y) in a.iter().zip(b.iter()) {
            acc = self.add(acc, self.mul(x, y));
        }
        acc
    }

    pub fn hom_weight_vec(&self, a: &[Elem]) -> u64 {
        a.iter().map(|&x| self.hom_weight(x)).sum()
    }

    /// A vector is regular iff it has a unit coordinate, i.e. its inner
    /// products with R^k sweep out all of R.
    pub fn is_regular_vector(&self, a: &[Elem]) -> bool {
        a.iter().any(|&x| self.is_unit(x))
    }
}

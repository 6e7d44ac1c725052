//! Exact arithmetic in the cyclotomic field `ℚ(ζ_q)` and over `ℚ[x]`.
//!
//! A [`CycloNumber`] is stored in the power basis `1, ζ, …, ζ^{φ(q)−1}`
//! after reduction modulo the `q`-th cyclotomic polynomial, so equality is
//! coefficientwise and rationality is a check on the higher coefficients.

mod poly;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use poly::{cyclotomic_polynomial, RationalFunction, RationalPoly};

use crate::{Error, Result};

/// Precomputed data for `ℚ(ζ_q)`.
#[derive(Debug)]
pub struct CyclotomicField {
    q: u64,
    phi: usize,
    modulus: Arc<RationalPoly>,
    /// `x^e mod Φ_q` for `0 ≤ e < q`, each of length `φ(q)`.
    powers: Vec<Vec<BigRational>>,
}

impl CyclotomicField {
    fn new(q: u64) -> Self {
        let modulus = cyclotomic_polynomial(q);
        let phi = modulus.degree().unwrap();
        let mut powers = Vec::with_capacity(q as usize);
        let mut cur = vec![BigRational::zero(); phi];
        if phi > 0 {
            cur[0] = BigRational::one();
        }
        for _ in 0..q {
            powers.push(cur.clone());
            // Multiply by x and reduce with the monic modulus.
            let top = cur[phi - 1].clone();
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigRational::zero();
            if !top.is_zero() {
                for (i, c) in cur.iter_mut().enumerate() {
                    *c -= &top * modulus.coeff(i);
                }
            }
        }
        CyclotomicField {
            q,
            phi,
            modulus,
            powers,
        }
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// `φ(q)`, the dimension over `ℚ`.
    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn modulus(&self) -> &RationalPoly {
        &self.modulus
    }
}

/// Shared field data for `ℚ(ζ_q)`; built once per `q`.
pub fn field(q: u64) -> Arc<CyclotomicField> {
    assert!(q >= 1, "cyclotomic field of order 0");
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CyclotomicField>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().unwrap().get(&q) {
        return f.clone();
    }
    let f = Arc::new(CyclotomicField::new(q));
    cache.lock().unwrap().entry(q).or_insert(f).clone()
}

/// An element of `ℚ(ζ_q)` in canonical power-basis form.
#[derive(Clone)]
pub struct CycloNumber {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.q == other.field.q && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNumber {}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNumber[q={}]({})", self.field.q, self)
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        poly::write_poly(f, &self.coeffs, &format!("ζ{}", self.field.q))
    }
}

impl CycloNumber {
    pub fn zero(q: u64) -> Self {
        let field = field(q);
        let coeffs = vec![BigRational::zero(); field.phi];
        CycloNumber { field, coeffs }
    }

    pub fn one(q: u64) -> Self {
        Self::from_rational(q, BigRational::one())
    }

    pub fn from_rational(q: u64, r: BigRational) -> Self {
        let mut z = Self::zero(q);
        z.coeffs[0] = r;
        z
    }

    pub fn from_integer(q: u64, n: i64) -> Self {
        Self::from_rational(q, BigRational::from_integer(n.into()))
    }

    /// `ζ_q^e`, any integer `e`.
    pub fn root_of_unity_power(q: u64, e: i64) -> Self {
        let field = field(q);
        let idx = e.rem_euclid(q as i64) as usize;
        let coeffs = field.powers[idx].clone();
        CycloNumber { field, coeffs }
    }

    /// Builds a number from arbitrary coefficients of `1, ζ, ζ², …`
    /// (any length), reducing modulo `Φ_q`.
    pub fn from_power_coeffs(q: u64, coeffs: &[BigRational]) -> Self {
        let mut z = Self::zero(q);
        for (e, c) in coeffs.iter().enumerate() {
            z.add_scaled_power(c, e as i64);
        }
        z
    }

    pub fn modulus(&self) -> u64 {
        self.field.q
    }

    /// Power-basis coordinates, length `φ(q)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Result<BigRational> {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    /// `self += c · ζ^e`.
    pub fn add_scaled_power(&mut self, c: &BigRational, e: i64) {
        if c.is_zero() {
            return;
        }
        let idx = e.rem_euclid(self.field.q as i64) as usize;
        for (a, p) in self.coeffs.iter_mut().zip(&self.field.powers[idx]) {
            if !p.is_zero() {
                *a += c * p;
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        CycloNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self.scale(&BigRational::from_integer(c.clone()))
    }

    /// Multiplicative inverse via extended Euclid against `Φ_q`.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivision { q: self.field.q });
        }
        let a = RationalPoly::new(self.coeffs.clone());
        let (g, s, _) = a.ext_gcd(&self.field.modulus);
        // Φ_q is irreducible, so any nonzero a of lower degree is coprime to it.
        debug_assert_eq!(g, RationalPoly::one());
        Ok(Self::from_power_coeffs(self.field.q, s.coeffs()))
    }

    /// Complex conjugate: `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero(self.field.q);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.add_scaled_power(c, -(i as i64));
        }
        out
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(
            self.field.q, other.field.q,
            "mixing elements of Q(zeta_{}) and Q(zeta_{})",
            self.field.q, other.field.q
        );
    }
}

impl Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        self.check_same_field(rhs);
        CycloNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl AddAssign<&CycloNumber> for CycloNumber {
    fn add_assign(&mut self, rhs: &CycloNumber) {
        self.check_same_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        self.check_same_field(rhs);
        CycloNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        self.check_same_field(rhs);
        let phi = self.field.phi;
        let mut prod = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out = CycloNumber::zero(self.field.q);
        for (e, c) in prod.iter().enumerate() {
            out.add_scaled_power(c, e as i64);
        }
        out
    }
}

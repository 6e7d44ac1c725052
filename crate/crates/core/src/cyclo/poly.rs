use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A polynomial over `ℚ`, coefficients from the constant term up. The zero
/// polynomial has no coefficients; otherwise the leading one is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^n`.
    pub fn monomial(c: BigRational, n: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&(BigRational::one() / l)),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: `self = q · d + r` with `deg r < deg d`.
    ///
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] -= &c * dc;
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s, t)` with `s·self + t·other = g`, `g`
    /// the monic gcd.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = BigRational::one() / l;
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs, "z")
    }
}

pub(crate) fn write_poly(f: &mut fmt::Formatter<'_>, coeffs: &[BigRational], var: &str) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let unit = mag.is_one();
        match (i, unit) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => write!(f, "{var}")?,
            (1, false) => write!(f, "{mag}*{var}")?,
            (_, true) => write!(f, "{var}^{i}")?,
            (_, false) => write!(f, "{mag}*{var}^{i}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// A quotient of two rational polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    pub numerator: RationalPoly,
    pub denominator: RationalPoly,
}

impl RationalFunction {
    /// Panics if `denominator` is zero.
    pub fn new(numerator: RationalPoly, denominator: RationalPoly) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        RationalFunction {
            numerator,
            denominator,
        }
    }

    /// Cancels the gcd of numerator and denominator and makes the
    /// denominator's constant term 1 when it is nonzero.
    pub fn reduced(&self) -> Self {
        let g = self.numerator.gcd(&self.denominator);
        let (num, _) = self.numerator.div_rem(&g);
        let (den, _) = self.denominator.div_rem(&g);
        let c = den.coeff(0);
        if c.is_zero() {
            return RationalFunction::new(num, den);
        }
        let inv = BigRational::one() / c;
        RationalFunction::new(num.scale(&inv), den.scale(&inv))
    }

    /// Power-series coefficients `0..n`; requires a nonzero constant term in
    /// the denominator.
    pub fn series(&self, n: usize) -> Vec<BigRational> {
        let d0 = self.denominator.coeff(0);
        assert!(!d0.is_zero(), "denominator vanishes at 0");
        let mut out: Vec<BigRational> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.numerator.coeff(k);
            for i in 1..=k {
                let d = self.denominator.coeff(i);
                if !d.is_zero() {
                    acc -= d * &out[k - i];
                }
            }
            out.push(acc / &d0);
        }
        out
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

/// `x^n − 1`.
fn x_n_minus_one(n: usize) -> RationalPoly {
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[0] = -BigRational::one();
    coeffs[n] = BigRational::one();
    RationalPoly::new(coeffs)
}

/// The `q`-th cyclotomic polynomial, computed as `(x^q − 1) / ∏_{d | q, d < q} Φ_d`.
///
/// Panics if `q == 0`.
pub fn cyclotomic_polynomial(q: u64) -> Arc<RationalPoly> {
    assert!(q >= 1, "cyclotomic polynomial of order 0");
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<RationalPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&q) {
        return p.clone();
    }
    let mut p = x_n_minus_one(q as usize);
    for d in (1..q).filter(|d| q % d == 0) {
        let (quot, rem) = p.div_rem(&cyclotomic_polynomial(d));
        debug_assert!(rem.is_zero());
        p = quot;
    }
    let p = Arc::new(p);
    cache.lock().unwrap().insert(q, p.clone());
    p
}

//! Finite-order torus elements, finite subgroups given by torus
//! representatives, and invariant dimensions `n_Γ(π_Λ) = dim V_Λ^Γ`.
//!
//! A torus element is `t = exp(2πi Σ_j x_j α_j^∨)` with `x_j ∈ [0, 1)`
//! rational, so `t^μ = exp(2πi Σ_j x_j ⟨μ, α_j^∨⟩)` and, for `q` a multiple
//! of the order of `t`, `t^μ = ζ_q^{e(t, μ)}` with `e = q · Σ_j x_j μ_j mod q`.
//!
//! Characters at `t` are evaluated with the singular-element form of the Weyl
//! character formula:
//!
//! ```text
//! χ_Λ(t) = Σ_{σ ∈ W^Z} ε(σ) t^{σ(Λ+ρ)−ρ} p_Z(σ(Λ+ρ) − ρ_Z) / ∏_{α ∈ Φ⁺∖Φ_Z⁺} (1 − t^{−α})
//! ```
//!
//! where `Φ_Z⁺ = {α > 0 : t^α = 1}` are the positive roots of the centralizer
//! `Z = C_G(t)°` and `W^Z = {σ : σ⁻¹Φ_Z⁺ ⊂ Φ⁺}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cyclo::CycloNumber;
use crate::repthy::{character_from_table, weyl_dimension, WeightTableCache};
use crate::rootsys::{RootSystemData, Weight};
use crate::{Error, Result};

/// A finite-order point of the maximal torus in simple-coroot coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusElement {
    coords: Vec<BigRational>,
    order: u64,
}

fn frac(x: &BigRational) -> BigRational {
    x - x.floor()
}

impl TorusElement {
    /// Reduces every coordinate into `[0, 1)`.
    pub fn new(coords: Vec<BigRational>) -> Self {
        let coords: Vec<BigRational> = coords.iter().map(frac).collect();
        let order = coords
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
            .to_u64()
            .expect("torus element order fits in u64");
        TorusElement { coords, order }
    }

    pub fn identity(rank: usize) -> Self {
        Self::new(vec![BigRational::zero(); rank])
    }

    /// From `(numerator, denominator)` pairs.
    pub fn from_fractions(fracs: &[(i64, i64)]) -> Self {
        Self::new(
            fracs
                .iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        )
    }

    /// Parses coordinates written as `"p/q"` or `"p"`.
    pub fn parse(coords: &[impl AsRef<str>]) -> Result<Self> {
        let parsed = coords
            .iter()
            .map(|s| {
                BigRational::from_str(s.as_ref().trim())
                    .map_err(|_| Error::InvalidInput(format!("bad rational {:?}", s.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(parsed))
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// Least `o ≥ 1` with `t^o = 1`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|x| x.is_zero())
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.coords.iter().map(|x| -x).collect())
    }

    pub fn power(&self, h: i64) -> Self {
        let h = BigRational::from_integer(h.into());
        Self::new(self.coords.iter().map(|x| x * &h).collect())
    }

    /// `σ t σ⁻¹`, so that `(σ·t)^μ = t^{σ⁻¹ μ}`.
    pub fn conjugate(&self, rs: &RootSystemData, sigma_index: usize) -> Result<Self> {
        let sigma = rs.weyl().get(sigma_index).ok_or(Error::WeylIndexOutOfRange {
            index: sigma_index,
            order: rs.weyl_order(),
        })?;
        let m = &rs.weyl()[sigma.inverse].matrix;
        let n = self.rank();
        Ok(Self::new(
            (0..n)
                .map(|j| {
                    (0..n).fold(BigRational::zero(), |acc, i| {
                        acc + &self.coords[i] * BigRational::from_integer(m[i][j].into())
                    })
                })
                .collect(),
        ))
    }

    /// `e` with `t^μ = ζ_q^e`, `0 ≤ e < q`.
    pub fn pairing_exponent(&self, mu: &Weight, q: u64) -> Result<u64> {
        if q == 0 || q % self.order != 0 {
            return Err(Error::OrderNotDividingModulus {
                order: self.order,
                q,
            });
        }
        if mu.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: mu.rank(),
            });
        }
        let s = self
            .coords
            .iter()
            .zip(mu.coords())
            .fold(BigRational::zero(), |acc, (x, &m)| acc + x * BigRational::from_integer(m.into()));
        let scaled = s * BigRational::from_integer(q.into());
        debug_assert!(scaled.is_integer());
        let e = scaled.to_integer();
        Ok(e.mod_floor(&BigInt::from(q)).to_u64().unwrap())
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// `e(t, μ)` as a free function.
pub fn pairing_exponent(t: &TorusElement, mu: &Weight, q: u64) -> Result<u64> {
    t.pairing_exponent(mu, q)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupElement {
    pub rep: TorusElement,
    pub count: u64,
}

/// A finite subgroup `Γ`, given as a multiset of torus representatives of its
/// elements (with multiplicities summing to `|Γ|`) and a modulus `q`
/// annihilating every element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSubgroupData {
    q: u64,
    elements: Vec<SubgroupElement>,
}

impl FiniteSubgroupData {
    pub fn new(q: u64, elements: Vec<SubgroupElement>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidSubgroup("no elements".into()));
        }
        let rank = elements[0].rep.rank();
        if q == 0 {
            return Err(Error::InvalidSubgroup("modulus q must be positive".into()));
        }
        for e in &elements {
            if e.rep.rank() != rank {
                return Err(Error::InvalidSubgroup("representatives of different ranks".into()));
            }
            if e.count == 0 {
                return Err(Error::InvalidSubgroup(format!("zero count for {}", e.rep)));
            }
            if q % e.rep.order() != 0 {
                return Err(Error::OrderNotDividingModulus {
                    order: e.rep.order(),
                    q,
                });
            }
        }
        let identities = elements.iter().filter(|e| e.rep.is_identity()).count();
        if identities != 1 {
            return Err(Error::InvalidSubgroup(format!(
                "expected exactly one identity entry, found {identities}"
            )));
        }
        Ok(FiniteSubgroupData { q, elements })
    }

    /// Uses the least common multiple of the element orders as modulus.
    pub fn with_default_modulus(elements: Vec<SubgroupElement>) -> Result<Self> {
        let q = elements.iter().fold(1u64, |acc, e| acc.lcm(&e.rep.order()));
        Self::new(q, elements)
    }

    pub fn trivial(rank: usize) -> Self {
        Self::new(
            1,
            vec![SubgroupElement {
                rep: TorusElement::identity(rank),
                count: 1,
            }],
        )
        .unwrap()
    }

    /// The cyclic group generated by `generator`, one entry per power.
    pub fn cyclic(generator: &TorusElement) -> Self {
        let o = generator.order();
        let elements = (0..o as i64)
            .map(|h| SubgroupElement {
                rep: generator.power(h),
                count: 1,
            })
            .collect();
        Self::new(o, elements).unwrap()
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn elements(&self) -> &[SubgroupElement] {
        &self.elements
    }

    pub fn rank(&self) -> usize {
        self.elements[0].rep.rank()
    }

    /// `|Γ| = Σ counts`.
    pub fn order(&self) -> u64 {
        self.elements.iter().map(|e| e.count).sum()
    }

    /// `true` when `q` is not a multiple of `|Γ|`.
    pub fn uses_relaxed_modulus(&self) -> bool {
        self.q % self.order() != 0
    }

    /// The same data with modulus replaced by a multiple of every element
    /// order.
    pub fn with_modulus(&self, q: u64) -> Result<Self> {
        Self::new(q, self.elements.clone())
    }

    /// Replaces every representative `t` by `σ t σ⁻¹`.
    pub fn conjugate(&self, rs: &RootSystemData, sigma_index: usize) -> Result<Self> {
        let elements = self
            .elements
            .iter()
            .map(|e| {
                Ok(SubgroupElement {
                    rep: e.rep.conjugate(rs, sigma_index)?,
                    count: e.count,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.q, elements)
    }
}

/// Root data of `Z = C_G(t)°` relative to `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerData {
    /// Indices into [`RootSystemData::positive_roots`] of `Φ_Z⁺`.
    pub pos_roots_z: Vec<usize>,
    /// `2ρ_Z`, integral.
    pub two_rho_z: Weight,
    /// Indices into [`RootSystemData::weyl`] of `W^Z`.
    pub wz: Vec<usize>,
    /// `N_γ = |Φ_Z⁺|`.
    pub n_gamma: usize,
    /// `1 / ∏_{α ∈ Φ_Z⁺} ⟨α, ρ_Z⟩`, in units of the scaled Gram matrix.
    pub(crate) p_z_normaliser: BigRational,
}

impl CentralizerData {
    /// `ρ_Z` in fundamental-weight coordinates.
    pub fn rho_z(&self) -> Vec<BigRational> {
        self.two_rho_z
            .coords()
            .iter()
            .map(|&c| BigRational::new(c.into(), 2.into()))
            .collect()
    }
}

pub fn centralizer_data(rs: &RootSystemData, t: &TorusElement) -> CentralizerData {
    let q = t.order();
    let pos_roots_z: Vec<usize> = rs
        .positive_roots()
        .iter()
        .enumerate()
        .filter(|(_, a)| t.pairing_exponent(a, q).unwrap() == 0)
        .map(|(i, _)| i)
        .collect();
    let two_rho_z = pos_roots_z
        .iter()
        .fold(Weight::zero(rs.rank()), |acc, &i| &acc + &rs.positive_roots()[i]);
    let wz = rs
        .weyl()
        .iter()
        .enumerate()
        .filter(|(_, sigma)| {
            let inv = &rs.weyl()[sigma.inverse];
            pos_roots_z.iter().all(|&i| {
                rs.root_lookup(&inv.act(&rs.positive_roots()[i]))
                    .expect("Weyl group permutes roots")
                    .1
            })
        })
        .map(|(i, _)| i)
        .collect();

    // ⟨α, ρ_Z⟩ = ⟨α, 2ρ_Z⟩_scaled / (2d) with d the Gram scale.
    let mut norm = BigRational::one();
    for &i in &pos_roots_z {
        let s = rs.inner_scaled(&rs.positive_roots()[i], &two_rho_z);
        assert!(s > 0, "⟨α, ρ_Z⟩ > 0 on Φ_Z⁺");
        norm *= BigRational::new(2.into(), BigInt::from(s));
    }
    CentralizerData {
        n_gamma: pos_roots_z.len(),
        pos_roots_z,
        two_rho_z,
        wz,
        p_z_normaliser: norm,
    }
}

/// `p_Z(v) = ∏_{α ∈ Φ_Z⁺} ⟨α, v + ρ_Z⟩ / ⟨α, ρ_Z⟩` for a rational vector `v`
/// in fundamental-weight coordinates.
pub fn p_z_eval(rs: &RootSystemData, cz: &CentralizerData, v: &[BigRational]) -> BigRational {
    let rho_z = cz.rho_z();
    let shifted: Vec<BigRational> = v.iter().zip(&rho_z).map(|(a, b)| a + b).collect();
    cz.pos_roots_z.iter().fold(BigRational::one(), |acc, &i| {
        let alpha = &rs.positive_roots()[i];
        acc * rs.inner_rational(alpha, &shifted) / rs.inner_rational(alpha, &rho_z)
    })
}

/// `p_Z(u − ρ_Z)` for an integral `u`, i.e. `∏ ⟨α, u⟩ / ⟨α, ρ_Z⟩`.
pub(crate) fn p_z_at(rs: &RootSystemData, cz: &CentralizerData, u: &Weight) -> BigRational {
    let mut num = BigInt::one();
    for &i in &cz.pos_roots_z {
        num *= rs.inner_scaled(&rs.positive_roots()[i], u);
    }
    &cz.p_z_normaliser * BigRational::from_integer(num)
}

/// Per-element data for repeated character evaluation at a fixed `t`.
#[derive(Debug, Clone)]
pub struct TorusContext {
    pub t: TorusElement,
    pub q: u64,
    pub centralizer: CentralizerData,
    /// `∏_{α ∈ Φ⁺∖Φ_Z⁺} (1 − t^{−α})^{−1}`.
    pub inv_denominator: CycloNumber,
    /// `e(t, −ρ)`.
    rho_shift: u64,
}

impl TorusContext {
    pub fn new(rs: &RootSystemData, t: &TorusElement, q: u64) -> Result<Self> {
        if t.rank() != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                got: t.rank(),
            });
        }
        let centralizer = centralizer_data(rs, t);
        let mut den = CycloNumber::one(q);
        for (i, alpha) in rs.positive_roots().iter().enumerate() {
            if centralizer.pos_roots_z.contains(&i) {
                continue;
            }
            let e = t.pairing_exponent(alpha, q)? as i64;
            let factor = &CycloNumber::one(q) - &CycloNumber::root_of_unity_power(q, -e);
            den = &den * &factor;
        }
        let inv_denominator = den.invert()?;
        let rho_shift = t.pairing_exponent(&-rs.rho(), q)?;
        Ok(TorusContext {
            t: t.clone(),
            q,
            centralizer,
            inv_denominator,
            rho_shift,
        })
    }

    /// Numerator of the character formula, before dividing by
    /// `∏(1 − t^{−α})`.
    pub fn numerator(&self, rs: &RootSystemData, lambda: &Weight) -> Result<CycloNumber> {
        let shifted = lambda + rs.rho();
        let mut acc = CycloNumber::zero(self.q);
        for &s in &self.centralizer.wz {
            let sigma = &rs.weyl()[s];
            let u = sigma.act(&shifted);
            let e = self.t.pairing_exponent(&u, self.q)? + self.rho_shift;
            let mut p = p_z_at(rs, &self.centralizer, &u);
            if sigma.sign < 0 {
                p = -p;
            }
            acc.add_scaled_power(&p, e as i64);
        }
        Ok(acc)
    }

    pub fn character(&self, rs: &RootSystemData, lambda: &Weight) -> Result<CycloNumber> {
        Ok(&self.numerator(rs, lambda)? * &self.inv_denominator)
    }
}

/// `χ_Λ(t)` by the singular-element character formula.
pub fn character_cr(rs: &RootSystemData, lambda: &Weight, t: &TorusElement, q: u64) -> Result<CycloNumber> {
    rs.check_dominant(lambda)?;
    TorusContext::new(rs, t, q)?.character(rs, lambda)
}

/// Which character evaluation feeds [`invariant_dimension`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Backend {
    /// Singular-element Weyl character formula.
    #[default]
    Cr,
    /// Freudenthal weight table summed over all weights.
    WeightSum,
    /// Both, with a hard error if they disagree.
    Both,
}

impl FromStr for Backend {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cr" => Ok(Backend::Cr),
            "weight_sum" => Ok(Backend::WeightSum),
            "both" => Ok(Backend::Both),
            _ => Err(Error::InvalidInput(format!("unknown backend {s:?}"))),
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Cr => "cr",
            Backend::WeightSum => "weight_sum",
            Backend::Both => "both",
        })
    }
}

/// Evaluates `n_Γ(π_Λ)` for many `Λ` against one subgroup.
pub struct SubgroupEvaluator<'a> {
    rs: &'a RootSystemData,
    gamma: FiniteSubgroupData,
    contexts: Vec<TorusContext>,
    backend: Backend,
    tables: WeightTableCache,
}

impl<'a> SubgroupEvaluator<'a> {
    pub fn new(rs: &'a RootSystemData, gamma: &FiniteSubgroupData, backend: Backend) -> Result<Self> {
        if gamma.rank() != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                got: gamma.rank(),
            });
        }
        let contexts = gamma
            .elements()
            .iter()
            .map(|e| TorusContext::new(rs, &e.rep, gamma.modulus()))
            .collect::<Result<Vec<_>>>()?;
        Ok(SubgroupEvaluator {
            rs,
            gamma: gamma.clone(),
            contexts,
            backend,
            tables: WeightTableCache::new(),
        })
    }

    pub fn subgroup(&self) -> &FiniteSubgroupData {
        &self.gamma
    }

    pub fn contexts(&self) -> &[TorusContext] {
        &self.contexts
    }

    fn averaged(&self, chars: &[CycloNumber]) -> CycloNumber {
        let q = self.gamma.modulus();
        let mut sum = CycloNumber::zero(q);
        for (c, e) in chars.iter().zip(self.gamma.elements()) {
            sum += &c.scale_int(&BigInt::from(e.count));
        }
        sum.scale(&BigRational::new(1.into(), self.gamma.order().into()))
    }

    fn characters(&self, lambda: &Weight, backend: Backend) -> Result<Vec<CycloNumber>> {
        match backend {
            Backend::Cr => self
                .contexts
                .iter()
                .map(|ctx| ctx.character(self.rs, lambda))
                .collect(),
            Backend::WeightSum => {
                let table = self.tables.get(self.rs, lambda)?;
                self.gamma
                    .elements()
                    .iter()
                    .map(|e| character_from_table(&table, &e.rep, self.gamma.modulus()))
                    .collect()
            }
            Backend::Both => unreachable!(),
        }
    }

    /// `dim V_Λ^Γ`, certified to be an integer in `[0, dim V_Λ]`.
    pub fn invariant_dimension(&self, lambda: &Weight) -> Result<BigInt> {
        self.rs.check_dominant(lambda)?;
        let avg = match self.backend {
            Backend::Both => {
                let cr = self.characters(lambda, Backend::Cr)?;
                let ws = self.characters(lambda, Backend::WeightSum)?;
                if let Some((a, b)) = cr.iter().zip(&ws).find(|(a, b)| a != b) {
                    return Err(Error::BackendMismatch {
                        lambda: lambda.coords().to_vec(),
                        cr: a.to_string(),
                        weight_sum: b.to_string(),
                    });
                }
                self.averaged(&cr)
            }
            b => self.averaged(&self.characters(lambda, b)?),
        };
        let value = avg.as_rational()?;
        if !value.is_integer() {
            return Err(Error::NotAnInteger(value.to_string()));
        }
        let value = value.to_integer();
        let dim = weyl_dimension(self.rs, lambda)?;
        if value.is_negative() || value > dim {
            return Err(Error::OutOfRange {
                value: value.to_string(),
                dim: dim.to_string(),
            });
        }
        Ok(value)
    }
}

/// `n_Γ(π_Λ)` with the default character backend.
pub fn invariant_dimension(rs: &RootSystemData, lambda: &Weight, gamma: &FiniteSubgroupData) -> Result<BigInt> {
    invariant_dimension_with(rs, lambda, gamma, Backend::Cr)
}

pub fn invariant_dimension_with(
    rs: &RootSystemData,
    lambda: &Weight,
    gamma: &FiniteSubgroupData,
    backend: Backend,
) -> Result<BigInt> {
    SubgroupEvaluator::new(rs, gamma, backend)?.invariant_dimension(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repthy::{character_weight_sum, dominant_weights_up_to_dimension};
    use crate::rootsys::Series;

    fn rs(s: Series, n: usize) -> RootSystemData {
        RootSystemData::build(s, n).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    fn t(f: &[(i64, i64)]) -> TorusElement {
        TorusElement::from_fractions(f)
    }

    #[test]
    fn torus_element_normalisation() {
        let x = t(&[(5, 4), (-1, 3)]);
        assert_eq!(x.coords()[0], BigRational::new(1.into(), 4.into()));
        assert_eq!(x.coords()[1], BigRational::new(2.into(), 3.into()));
        assert_eq!(x.order(), 12);
        assert_eq!(TorusElement::identity(3).order(), 1);
        assert_eq!(TorusElement::parse(&["1/2", "0"]).unwrap(), t(&[(1, 2), (0, 1)]));
        assert!(TorusElement::parse(&["x"]).is_err());
    }

    #[test]
    fn pairing_exponent_examples() {
        assert_eq!(t(&[(1, 3)]).pairing_exponent(&w(&[0]), 3).unwrap(), 0);
        assert_eq!(t(&[(1, 2)]).pairing_exponent(&w(&[1]), 2).unwrap(), 1);
        assert_eq!(t(&[(1, 3)]).pairing_exponent(&w(&[2]), 3).unwrap(), 2);
        assert_eq!(t(&[(1, 3)]).pairing_exponent(&w(&[2]), 6).unwrap(), 4);
        assert_eq!(
            t(&[(1, 3)]).pairing_exponent(&w(&[1]), 4),
            Err(Error::OrderNotDividingModulus { order: 3, q: 4 })
        );
    }

    #[test]
    fn pairing_is_additive() {
        let x = t(&[(1, 4), (3, 4)]);
        let (a, b) = (w(&[3, -1]), w(&[-2, 5]));
        let ea = x.pairing_exponent(&a, 8).unwrap();
        let eb = x.pairing_exponent(&b, 8).unwrap();
        assert_eq!(x.pairing_exponent(&(&a + &b), 8).unwrap(), (ea + eb) % 8);
    }

    #[test]
    fn centralizer_examples() {
        let a2 = rs(Series::A, 2);
        let cz = centralizer_data(&a2, &TorusElement::identity(2));
        assert_eq!(cz.n_gamma, 3);
        assert_eq!(cz.wz, vec![0]);

        let a1 = rs(Series::A, 1);
        let cz = centralizer_data(&a1, &t(&[(1, 3)]));
        assert!(cz.pos_roots_z.is_empty());
        assert_eq!(cz.wz.len(), 2);

        // t = (1/2, 0): t^{α₁} = e^{2πi·(1/2)·2} = 1, t^{α₂} = e^{−πi} = −1.
        let cz = centralizer_data(&a2, &t(&[(1, 2), (0, 1)]));
        assert_eq!(cz.pos_roots_z.len(), 1);
        assert_eq!(a2.positive_roots()[cz.pos_roots_z[0]], a2.simple_root(0));
        assert_eq!(cz.wz.len(), 3);
        let cz = centralizer_data(&a2, &t(&[(0, 1), (1, 2)]));
        assert_eq!(a2.positive_roots()[cz.pos_roots_z[0]], a2.simple_root(1));
        assert_eq!(cz.wz.len(), 3);
    }

    #[test]
    fn centralizer_invariants() {
        let b2 = rs(Series::B, 2);
        for x in [t(&[(1, 4), (1, 2)]), t(&[(1, 3), (1, 3)]), t(&[(0, 1), (1, 2)])] {
            let cz = centralizer_data(&b2, &x);
            assert!(cz.n_gamma <= b2.num_positive_roots());
            // |W^Z| · |W_Z| = |W|.
            assert_eq!(b2.weyl_order() % cz.wz.len(), 0);
        }
        // A regular element of order 5.
        let cz = centralizer_data(&b2, &t(&[(1, 5), (2, 5)]));
        assert!(cz.pos_roots_z.is_empty());
        assert_eq!(cz.wz.len(), 8);
    }

    #[test]
    fn p_z_examples() {
        let a1 = rs(Series::A, 1);
        let regular = centralizer_data(&a1, &t(&[(1, 3)]));
        assert!(p_z_eval(&a1, &regular, &[BigRational::from_integer(7.into())]).is_one());
        let full = centralizer_data(&a1, &TorusElement::identity(1));
        assert!(p_z_eval(&a1, &full, &[BigRational::zero()]).is_one());
        for k in 0..10i64 {
            assert_eq!(
                p_z_eval(&a1, &full, &[BigRational::from_integer(k.into())]),
                BigRational::from_integer((k + 1).into())
            );
        }
        // p_z_at(u) = p_z_eval(u − ρ_Z).
        let b2 = rs(Series::B, 2);
        let cz = centralizer_data(&b2, &t(&[(1, 2), (0, 1)]));
        let u = w(&[3, 2]);
        let v: Vec<BigRational> = u
            .coords()
            .iter()
            .zip(cz.rho_z())
            .map(|(&a, r)| BigRational::from_integer(a.into()) - r)
            .collect();
        assert_eq!(p_z_at(&b2, &cz, &u), p_z_eval(&b2, &cz, &v));
    }

    #[test]
    fn character_cr_examples() {
        let a1 = rs(Series::A, 1);
        for k in 0..8 {
            assert_eq!(
                character_cr(&a1, &w(&[k]), &TorusElement::identity(1), 5).unwrap(),
                CycloNumber::from_integer(5, k + 1)
            );
        }
        assert!(character_cr(&a1, &w(&[2]), &t(&[(1, 3)]), 3).unwrap().is_zero());
        // −id acts by (−1)^3 on all four weight spaces of π_3.
        assert_eq!(
            character_cr(&a1, &w(&[3]), &t(&[(1, 2)]), 2).unwrap(),
            CycloNumber::from_integer(2, -4)
        );
    }

    #[test]
    fn character_cr_matches_weight_sum() {
        let cases: Vec<(RootSystemData, Vec<TorusElement>, u64)> = vec![
            (rs(Series::A, 1), vec![t(&[(1, 2)]), t(&[(1, 3)]), t(&[(1, 4)]), t(&[(5, 6)])], 12),
            (
                rs(Series::A, 2),
                vec![t(&[(1, 2), (0, 1)]), t(&[(1, 3), (1, 3)]), t(&[(1, 3), (2, 3)]), t(&[(1, 4), (1, 2)])],
                12,
            ),
            (
                rs(Series::B, 2),
                vec![t(&[(0, 1), (1, 2)]), t(&[(1, 2), (0, 1)]), t(&[(1, 4), (1, 4)]), t(&[(1, 3), (0, 1)])],
                12,
            ),
            (rs(Series::G, 2), vec![t(&[(1, 2), (0, 1)]), t(&[(1, 3), (0, 1)]), t(&[(0, 1), (1, 2)])], 6),
        ];
        for (r, ts, q) in cases {
            for lambda in dominant_weights_up_to_dimension(&r, 200) {
                for x in &ts {
                    assert_eq!(
                        character_cr(&r, &lambda, x, q).unwrap(),
                        character_weight_sum(&r, &lambda, x, q).unwrap(),
                        "{}{} Λ={lambda} t={x}",
                        r.series(),
                        r.rank()
                    );
                }
            }
        }
    }

    #[test]
    fn invariant_dimension_examples() {
        let a1 = rs(Series::A, 1);
        let trivial = FiniteSubgroupData::trivial(1);
        let center = FiniteSubgroupData::cyclic(&t(&[(1, 2)]));
        let c3 = FiniteSubgroupData::cyclic(&t(&[(1, 3)]));
        for k in 0..10i64 {
            assert_eq!(invariant_dimension(&a1, &w(&[k]), &trivial).unwrap(), BigInt::from(k + 1));
            let expect = if k % 2 == 0 { k + 1 } else { 0 };
            assert_eq!(invariant_dimension(&a1, &w(&[k]), &center).unwrap(), BigInt::from(expect));
        }
        assert_eq!(invariant_dimension(&a1, &w(&[3]), &c3).unwrap(), BigInt::from(2));
    }

    #[test]
    fn invariant_dimension_properties() {
        let b2 = rs(Series::B, 2);
        let gammas = [
            FiniteSubgroupData::cyclic(&t(&[(1, 4), (1, 2)])),
            FiniteSubgroupData::cyclic(&t(&[(1, 3), (0, 1)])),
            FiniteSubgroupData::cyclic(&t(&[(0, 1), (1, 2)])),
        ];
        for gamma in &gammas {
            assert_eq!(invariant_dimension(&b2, &w(&[0, 0]), gamma).unwrap(), BigInt::one());
            for lambda in dominant_weights_up_to_dimension(&b2, 100) {
                let n = invariant_dimension_with(&b2, &lambda, gamma, Backend::Both).unwrap();
                assert!(!n.is_negative() && n <= weyl_dimension(&b2, &lambda).unwrap());
                for s in 0..b2.weyl_order() {
                    let conj = gamma.conjugate(&b2, s).unwrap();
                    assert_eq!(invariant_dimension(&b2, &lambda, &conj).unwrap(), n);
                }
            }
        }
    }

    #[test]
    fn invalid_subgroup_data() {
        let no_identity = vec![SubgroupElement {
            rep: t(&[(1, 2)]),
            count: 1,
        }];
        assert!(matches!(
            FiniteSubgroupData::new(2, no_identity),
            Err(Error::InvalidSubgroup(_))
        ));
        let bad_q = vec![
            SubgroupElement {
                rep: TorusElement::identity(1),
                count: 1,
            },
            SubgroupElement {
                rep: t(&[(1, 3)]),
                count: 1,
            },
        ];
        assert!(matches!(
            FiniteSubgroupData::new(2, bad_q.clone()),
            Err(Error::OrderNotDividingModulus { order: 3, q: 2 })
        ));
        assert_eq!(FiniteSubgroupData::with_default_modulus(bad_q).unwrap().modulus(), 3);

        let pair = |x: TorusElement| {
            FiniteSubgroupData::new(
                3,
                vec![
                    SubgroupElement {
                        rep: TorusElement::identity(x.rank()),
                        count: 1,
                    },
                    SubgroupElement { rep: x, count: 1 },
                ],
            )
            .unwrap()
        };
        // {1, ζ₃} is not closed. At Λ = ϖ the average is (2 + ζ₃ + ζ₃⁻¹)/2 = 1/2.
        let a1 = rs(Series::A, 1);
        assert!(matches!(
            invariant_dimension(&a1, &w(&[1]), &pair(t(&[(1, 3)]))),
            Err(Error::NotAnInteger(_))
        ));
        // In A2, t = (1/3, 2/3) acts on all three weights of ϖ₁ by ζ₃.
        let a2 = rs(Series::A, 2);
        assert!(matches!(
            invariant_dimension(&a2, &w(&[1, 0]), &pair(t(&[(1, 3), (2, 3)]))),
            Err(Error::NotRational(_))
        ));
    }

    #[test]
    fn relaxed_modulus_flag() {
        // Γ ≅ ℤ/2 × ℤ/2 in B2 is annihilated by q = 2 < |Γ| = 4.
        let elements = [(0, 0), (1, 0), (0, 1), (1, 1)]
            .iter()
            .map(|&(a, b)| SubgroupElement {
                rep: t(&[(a, 2), (b, 2)]),
                count: 1,
            })
            .collect();
        let g = FiniteSubgroupData::with_default_modulus(elements).unwrap();
        assert_eq!(g.modulus(), 2);
        assert_eq!(g.order(), 4);
        assert!(g.uses_relaxed_modulus());
        assert!(!FiniteSubgroupData::cyclic(&t(&[(1, 4), (0, 1)])).uses_relaxed_modulus());
    }

    #[test]
    fn backend_parsing() {
        assert_eq!("cr".parse::<Backend>().unwrap(), Backend::Cr);
        assert_eq!("weight_sum".parse::<Backend>().unwrap(), Backend::WeightSum);
        assert_eq!("both".parse::<Backend>().unwrap(), Backend::Both);
        assert!("fast".parse::<Backend>().is_err());
    }
}

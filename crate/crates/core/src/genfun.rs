//! Strings `Λ_k = Λ₀ + kω` and the generating functions
//! `F_Γ(z) = Σ_k n_Γ(π_{Λ_k}) z^k = p(z) / (1 − z^q)^{N+1}` with `N = |Φ⁺|`
//! and `deg p < q(N+1)`.
//!
//! Two independent constructions of `p` are provided. [`genfun_truncate`]
//! multiplies a computed prefix of the sequence by `(1 − z^q)^{N+1}` and checks
//! that the product vanishes beyond degree `q(N+1)`. [`genfun_characters`]
//! sums closed-form contributions of every `(γ, σ)` term of the character
//! formula:
//!
//! ```text
//! Σ_k P(k) (yz)^k = Σ_j b_j p_j(yz) / (1 − yz)^{M+1},    P(k) = Σ_j b_j k^j,
//! 1 / (1 − yz) = (Σ_{i<q} (yz)^i) / (1 − z^q)          when y^q = 1.
//! ```

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclo::{CycloNumber, RationalFunction, RationalPoly};
use crate::rootsys::{RootSystemData, Weight};
use crate::subgroup::{Backend, FiniteSubgroupData, SubgroupEvaluator, TorusContext};
use crate::{Error, Result};

/// The string `Λ₀ + kω`, `k ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StringSpec {
    pub direction: Weight,
    pub base: Weight,
}

impl StringSpec {
    pub fn new(direction: Weight, base: Weight) -> Result<Self> {
        if direction.rank() != base.rank() {
            return Err(Error::DimensionMismatch {
                expected: base.rank(),
                got: direction.rank(),
            });
        }
        for w in [&direction, &base] {
            if !w.is_dominant() {
                return Err(Error::NotDominant(w.coords().to_vec()));
            }
        }
        Ok(StringSpec { direction, base })
    }

    pub fn check(&self, rs: &RootSystemData) -> Result<()> {
        rs.check_dominant(&self.direction)?;
        rs.check_dominant(&self.base)
    }

    pub fn member(&self, k: u64) -> Weight {
        &self.base + &(k as i64 * &self.direction)
    }
}

/// `[Λ₀, Λ₀ + ω, …, Λ₀ + k_max·ω]`.
pub fn string_members(s: &StringSpec, k_max: u64) -> Vec<Weight> {
    (0..=k_max).map(|k| s.member(k)).collect()
}

/// `n_k = n_Γ(π_{Λ₀+kω})` for `0 ≤ k ≤ k_max`.
pub fn multiplicity_sequence(
    rs: &RootSystemData,
    s: &StringSpec,
    gamma: &FiniteSubgroupData,
    k_max: u64,
) -> Result<Vec<BigInt>> {
    multiplicity_sequence_with(rs, s, gamma, k_max, Backend::Cr)
}

pub fn multiplicity_sequence_with(
    rs: &RootSystemData,
    s: &StringSpec,
    gamma: &FiniteSubgroupData,
    k_max: u64,
    backend: Backend,
) -> Result<Vec<BigInt>> {
    s.check(rs)?;
    let eval = SubgroupEvaluator::new(rs, gamma, backend)?;
    string_members(s, k_max)
        .iter()
        .map(|lambda| eval.invariant_dimension(lambda))
        .collect()
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// A generating function `Σ_i b_i z^i / (1 − z^q)^{N+1}` with
/// `deg Σ b_i z^i < q(N+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    q: u64,
    big_n: usize,
    numerator: Vec<BigInt>,
}

impl RationalGF {
    /// Pads the numerator with zeros to length `q(N+1)`.
    pub fn new(q: u64, big_n: usize, mut numerator: Vec<BigInt>) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidInput("modulus q must be positive".into()));
        }
        let bound = q as usize * (big_n + 1);
        if let Some(d) = numerator.iter().rposition(|b| !b.is_zero()) {
            if d >= bound {
                return Err(Error::DegreeBound { degree: d, bound });
            }
        }
        numerator.resize(bound, BigInt::zero());
        Ok(RationalGF { q, big_n, numerator })
    }

    /// The numerator determined by the first `q(N+1)` terms of a sequence
    /// assumed to have this shape. No tail is checked.
    pub fn from_sequence(q: u64, big_n: usize, seq: &[BigInt]) -> Result<Self> {
        let bound = q as usize * (big_n + 1);
        if seq.len() < bound {
            return Err(Error::InvalidInput(format!(
                "need {bound} terms, got {}",
                seq.len()
            )));
        }
        Self::new(q, big_n, times_denominator(seq, q, big_n, bound))
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn big_n(&self) -> usize {
        self.big_n
    }

    /// `b₀, …, b_{q(N+1)−1}`.
    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    /// `q(N+1)`.
    pub fn block_len(&self) -> usize {
        self.numerator.len()
    }

    pub fn degree(&self) -> Option<usize> {
        self.numerator.iter().rposition(|b| !b.is_zero())
    }

    /// `n_{mq+j} = Σ_{h=0}^{min(N,m)} b_{hq+j} C(m−h+N, N)`.
    pub fn coefficient(&self, k: u64) -> BigInt {
        let (m, j) = k.div_rem(&self.q);
        let n = self.big_n as u64;
        (0..=n.min(m))
            .map(|h| &self.numerator[(h * self.q + j) as usize] * binomial(m - h + n, n))
            .sum()
    }

    pub fn expand(&self, k_max: u64) -> Vec<BigInt> {
        (0..=k_max).map(|k| self.coefficient(k)).collect()
    }

    pub fn numerator_poly(&self) -> RationalPoly {
        RationalPoly::new(
            self.numerator
                .iter()
                .map(|b| BigRational::from_integer(b.clone()))
                .collect(),
        )
    }

    /// `(1 − z^q)^{N+1}`.
    pub fn denominator_poly(&self) -> RationalPoly {
        one_minus_z_q(self.q).pow(self.big_n + 1)
    }

    pub fn to_rational_function(&self) -> RationalFunction {
        RationalFunction::new(self.numerator_poly(), self.denominator_poly())
    }

    /// Monic gcd of numerator and denominator.
    pub fn common_factor(&self) -> RationalPoly {
        self.numerator_poly().gcd(&self.denominator_poly())
    }
}

fn one_minus_z_q(q: u64) -> RationalPoly {
    let mut c = vec![BigRational::zero(); q as usize + 1];
    c[0] = BigRational::one();
    c[q as usize] = -BigRational::one();
    RationalPoly::new(c)
}

/// Coefficients `0..len` of `(Σ n_k z^k)(1 − z^q)^{N+1}`.
fn times_denominator(seq: &[BigInt], q: u64, big_n: usize, len: usize) -> Vec<BigInt> {
    let q = q as usize;
    let signed_binom: Vec<BigInt> = (0..=big_n + 1)
        .map(|i| {
            let b = binomial(big_n as u64 + 1, i as u64);
            if i % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .collect();
    (0..len)
        .map(|d| {
            signed_binom
                .iter()
                .enumerate()
                .take_while(|(i, _)| i * q <= d)
                .map(|(i, c)| c * &seq[d - i * q])
                .sum()
        })
        .collect()
}

/// Truncation path with the default tail of `N+1` blocks.
pub fn genfun_truncate(rs: &RootSystemData, s: &StringSpec, gamma: &FiniteSubgroupData) -> Result<RationalGF> {
    genfun_truncate_with(rs, s, gamma, None, Backend::Cr)
}

/// Computes `n_0 … n_{q(N+1+margin)−1}`, multiplies by `(1 − z^q)^{N+1}` and
/// requires the coefficients in degrees `[q(N+1), q(N+1+margin))` to vanish.
pub fn genfun_truncate_with(
    rs: &RootSystemData,
    s: &StringSpec,
    gamma: &FiniteSubgroupData,
    margin: Option<usize>,
    backend: Backend,
) -> Result<RationalGF> {
    let big_n = rs.num_positive_roots();
    let q = gamma.modulus();
    let margin = margin.unwrap_or(big_n + 1);
    if margin == 0 {
        return Err(Error::InvalidInput("tail margin must be at least 1".into()));
    }
    let len = q as usize * (big_n + 1 + margin);
    let seq = multiplicity_sequence_with(rs, s, gamma, len as u64 - 1, backend)?;
    numerator_with_tail_check(&seq, q, big_n)
}

/// Numerator of `(Σ n_k z^k)(1 − z^q)^{N+1}`, requiring every coefficient
/// from degree `q(N+1)` up to `seq.len() − 1` to vanish.
pub fn numerator_with_tail_check(seq: &[BigInt], q: u64, big_n: usize) -> Result<RationalGF> {
    let bound = q as usize * (big_n + 1);
    if seq.len() <= bound {
        return Err(Error::InvalidInput(format!(
            "need more than {bound} terms, got {}",
            seq.len()
        )));
    }
    let mut coeffs = times_denominator(seq, q, big_n, seq.len());
    if let Some((d, v)) = coeffs.iter().enumerate().skip(bound).find(|(_, v)| !v.is_zero()) {
        return Err(Error::TailNonvanishing {
            degree: d,
            value: v.to_string(),
        });
    }
    coeffs.truncate(bound);
    RationalGF::new(q, big_n, coeffs)
}

/// `(k+1)(k+2)…(k+j) = Σ_l c_l k^l`.
fn rising_factorial_coeffs(j: usize) -> Vec<BigRational> {
    let mut p = RationalPoly::one();
    for i in 1..=j {
        p = &p * &RationalPoly::from_integers(&[i as i64, 1]);
    }
    (0..=j).map(|l| p.coeff(l)).collect()
}

/// `p_0, …, p_m` with `Σ_k k^j y^k = p_j(y) / (1 − y)^{m+1}`, by
/// `p_j = j!(1−y)^{m−j} − Σ_{l<j} c_l p_l` where `j!·C(k+j, j) = Σ_l c_l k^l`.
pub fn power_sum_numerators(m: usize) -> Vec<RationalPoly> {
    let one_minus_y = RationalPoly::from_integers(&[1, -1]);
    let mut out: Vec<RationalPoly> = Vec::with_capacity(m + 1);
    let mut factorial = BigRational::one();
    for j in 0..=m {
        if j > 0 {
            factorial *= BigRational::from_integer(j.into());
        }
        let c = rising_factorial_coeffs(j);
        let mut p = one_minus_y.pow(m - j).scale(&factorial);
        for (l, pl) in out.iter().enumerate() {
            p = &p - &pl.scale(&c[l]);
        }
        out.push(p);
    }
    out
}

/// `1 + x + … + x^{q−1}`; with `x = ξz` and `ξ^q = 1` this is
/// `∏_{η^q = 1, η ≠ ξ} (1 − ηz)`.
fn geometric_block(q: u64) -> RationalPoly {
    RationalPoly::new(vec![BigRational::one(); q as usize])
}

/// `p_Z(σ(Λ₀ + kω + ρ) − ρ_Z)` as a polynomial in `k`.
fn p_z_along_string(rs: &RootSystemData, ctx: &TorusContext, u0: &Weight, dir: &Weight) -> RationalPoly {
    let cz = &ctx.centralizer;
    let mut p = RationalPoly::constant(cz.p_z_normaliser.clone());
    for &i in &cz.pos_roots_z {
        let alpha = &rs.positive_roots()[i];
        let a = rs.inner_scaled(alpha, u0);
        let b = rs.inner_scaled(alpha, dir);
        p = &p * &RationalPoly::new(vec![
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        ]);
    }
    p
}

/// Closed-form path: assembles the numerator of `F_Γ` from the character
/// formula without computing any multiplicity.
pub fn genfun_characters(rs: &RootSystemData, s: &StringSpec, gamma: &FiniteSubgroupData) -> Result<RationalGF> {
    s.check(rs)?;
    if gamma.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: gamma.rank(),
        });
    }
    let big_n = rs.num_positive_roots();
    let q = gamma.modulus();
    let bound = q as usize * (big_n + 1);
    let block = geometric_block(q);
    let one_minus_xq = one_minus_z_q(q);
    let base_shifted = &s.base + rs.rho();

    let mut total = vec![CycloNumber::zero(q); bound];
    for elem in gamma.elements() {
        let ctx = TorusContext::new(rs, &elem.rep, q)?;
        let m = ctx.centralizer.n_gamma;
        let p = power_sum_numerators(m);
        let rescale = &block.pow(m + 1) * &one_minus_xq.pow(big_n - m);

        let mut acc = vec![CycloNumber::zero(q); bound];
        for &si in &ctx.centralizer.wz {
            let sigma = &rs.weyl()[si];
            let u0 = sigma.act(&base_shifted);
            let dir = sigma.act(&s.direction);
            let e0 = elem.rep.pairing_exponent(&(&u0 - rs.rho()), q)? as i64;
            let ey = elem.rep.pairing_exponent(&dir, q)? as i64;

            let poly_k = p_z_along_string(rs, &ctx, &u0, &dir);
            let mut r = RationalPoly::zero();
            for (j, pj) in p.iter().enumerate() {
                let bj = poly_k.coeff(j);
                if !bj.is_zero() {
                    r = &r + &pj.scale(&bj);
                }
            }
            let g = &r * &rescale;
            if g.degree().is_some_and(|d| d >= bound) {
                return Err(Error::DegreeBound {
                    degree: g.degree().unwrap(),
                    bound,
                });
            }
            for (i, c) in g.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let c = if sigma.sign < 0 { -c } else { c.clone() };
                acc[i].add_scaled_power(&c, e0 + ey * i as i64);
            }
        }
        let weight = ctx
            .inv_denominator
            .scale(&BigRational::new(elem.count.into(), gamma.order().into()));
        for (t, a) in total.iter_mut().zip(&acc) {
            if !a.is_zero() {
                *t += &(a * &weight);
            }
        }
    }

    let numerator = total
        .iter()
        .enumerate()
        .map(|(d, c)| {
            let v = c.as_rational().map_err(|_| Error::NumeratorNotRational(d))?;
            if !v.is_integer() {
                return Err(Error::NonIntegralNumerator {
                    degree: d,
                    value: v.to_string(),
                });
            }
            Ok(v.to_integer())
        })
        .collect::<Result<Vec<_>>>()?;
    RationalGF::new(q, big_n, numerator)
}

/// Runs both paths and requires identical numerators.
pub fn genfun_checked(
    rs: &RootSystemData,
    s: &StringSpec,
    gamma: &FiniteSubgroupData,
    backend: Backend,
) -> Result<RationalGF> {
    let closed = genfun_characters(rs, s, gamma)?;
    let truncated = genfun_truncate_with(rs, s, gamma, None, backend)?;
    if let Some((d, (a, b))) = closed
        .numerator()
        .iter()
        .zip(truncated.numerator())
        .enumerate()
        .find(|(_, (a, b))| a != b)
    {
        return Err(Error::PathMismatch {
            degree: d,
            characters: a.to_string(),
            truncation: b.to_string(),
        });
    }
    Ok(closed)
}

/// Smallest `k` at which two generating functions with the same `q` and `N`
/// have different coefficients.
pub fn first_difference(a: &RationalGF, b: &RationalGF) -> Option<u64> {
    debug_assert_eq!((a.q, a.big_n), (b.q, b.big_n));
    // F_a − F_b = (p_a − p_b)/(1 − z^q)^{N+1}, and multiplying a power series
    // by 1/(1 − z^q)^{N+1} preserves its lowest-order term.
    a.numerator
        .iter()
        .zip(&b.numerator)
        .position(|(x, y)| x != y)
        .map(|d| d as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Series;
    use crate::subgroup::TorusElement;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn a1() -> RootSystemData {
        RootSystemData::build(Series::A, 1).unwrap()
    }

    fn su2_string() -> StringSpec {
        StringSpec::new(Weight::new(vec![1]), Weight::new(vec![0])).unwrap()
    }

    fn cyclic(fracs: &[(i64, i64)]) -> FiniteSubgroupData {
        FiniteSubgroupData::cyclic(&TorusElement::from_fractions(fracs))
    }

    #[test]
    fn string_members_examples() {
        let s = su2_string();
        assert_eq!(
            string_members(&s, 3),
            vec![Weight::new(vec![0]), Weight::new(vec![1]), Weight::new(vec![2]), Weight::new(vec![3])]
        );
        let constant = StringSpec::new(Weight::new(vec![0, 0]), Weight::new(vec![2, 1])).unwrap();
        assert_eq!(string_members(&constant, 2), vec![Weight::new(vec![2, 1]); 3]);
        let a2 = StringSpec::new(Weight::new(vec![1, 1]), Weight::new(vec![1, 0])).unwrap();
        assert_eq!(
            string_members(&a2, 1),
            vec![Weight::new(vec![1, 0]), Weight::new(vec![2, 1])]
        );
        assert!(StringSpec::new(Weight::new(vec![-1]), Weight::new(vec![0])).is_err());
    }

    #[test]
    fn sequences_for_su2() {
        let rs = a1();
        let s = su2_string();
        let trivial = FiniteSubgroupData::trivial(1);
        assert_eq!(multiplicity_sequence(&rs, &s, &trivial, 5).unwrap(), ints(&[1, 2, 3, 4, 5, 6]));
        assert_eq!(
            multiplicity_sequence(&rs, &s, &cyclic(&[(1, 2)]), 5).unwrap(),
            ints(&[1, 0, 3, 0, 5, 0])
        );
        assert_eq!(
            multiplicity_sequence(&rs, &s, &cyclic(&[(1, 3)]), 8).unwrap(),
            ints(&[1, 0, 1, 2, 1, 2, 3, 2, 3])
        );
    }

    #[test]
    fn truncation_examples() {
        let rs = a1();
        let s = su2_string();
        let gf = genfun_truncate(&rs, &s, &cyclic(&[(1, 2)])).unwrap();
        assert_eq!(gf.numerator(), ints(&[1, 0, 1, 0]).as_slice());
        let gf = genfun_truncate(&rs, &s, &cyclic(&[(1, 3)])).unwrap();
        assert_eq!(gf.numerator(), ints(&[1, 0, 1, 0, 1, 0]).as_slice());
        let gf = genfun_truncate(&rs, &s, &FiniteSubgroupData::trivial(1)).unwrap();
        assert_eq!(gf.numerator(), ints(&[1, 0]).as_slice());
    }

    #[test]
    fn tail_check_rejects_other_shapes() {
        let powers: Vec<BigInt> = (0..12).map(|k| BigInt::from(2).pow(k)).collect();
        assert!(matches!(
            numerator_with_tail_check(&powers, 2, 1),
            Err(Error::TailNonvanishing { degree: 4, .. })
        ));
        // k² needs N ≥ 2 when q = 1.
        let squares: Vec<BigInt> = (0..12i64).map(|k| BigInt::from(k * k)).collect();
        assert!(numerator_with_tail_check(&squares, 1, 1).is_err());
        let gf = numerator_with_tail_check(&squares, 1, 2).unwrap();
        assert_eq!(gf.numerator(), ints(&[0, 1, 1]).as_slice());
    }

    #[test]
    fn closed_form_examples() {
        let rs = a1();
        let s = su2_string();
        for (g, expect) in [
            (FiniteSubgroupData::trivial(1), ints(&[1, 0])),
            (cyclic(&[(1, 2)]), ints(&[1, 0, 1, 0])),
            (cyclic(&[(1, 3)]), ints(&[1, 0, 1, 0, 1, 0])),
        ] {
            assert_eq!(genfun_characters(&rs, &s, &g).unwrap().numerator(), expect.as_slice());
        }
    }

    #[test]
    fn closed_form_matches_truncation() {
        let cases: Vec<(Series, usize, Vec<(Vec<i64>, Vec<i64>)>, Vec<Vec<(i64, i64)>>)> = vec![
            (
                Series::A,
                2,
                vec![(vec![1, 0], vec![0, 0]), (vec![1, 1], vec![0, 1]), (vec![0, 0], vec![1, 1])],
                vec![vec![(1, 3), (2, 3)], vec![(1, 2), (0, 1)], vec![(1, 4), (1, 2)]],
            ),
            (
                Series::B,
                2,
                vec![(vec![1, 0], vec![0, 0]), (vec![0, 1], vec![1, 0])],
                vec![vec![(0, 1), (1, 2)], vec![(1, 4), (1, 4)]],
            ),
            (
                Series::G,
                2,
                vec![(vec![1, 0], vec![0, 0])],
                vec![vec![(1, 2), (0, 1)]],
            ),
        ];
        for (series, n, strings, gens) in cases {
            let rs = RootSystemData::build(series, n).unwrap();
            for (d, b) in &strings {
                let s = StringSpec::new(Weight::new(d.clone()), Weight::new(b.clone())).unwrap();
                for g in &gens {
                    let gamma = cyclic(g);
                    let closed = genfun_characters(&rs, &s, &gamma).unwrap();
                    let truncated = genfun_truncate(&rs, &s, &gamma).unwrap();
                    assert_eq!(closed, truncated, "{series}{n} {s:?} {g:?}");
                }
            }
        }
    }

    #[test]
    fn power_sums() {
        for m in 0..6 {
            let p = power_sum_numerators(m);
            let den = RationalPoly::from_integers(&[1, -1]).pow(m + 1);
            for (j, pj) in p.iter().enumerate() {
                assert!(pj.degree().map_or(true, |d| d <= m));
                let series = RationalFunction::new(pj.clone(), den.clone()).series(12);
                for (k, c) in series.iter().enumerate() {
                    let expect = BigRational::from_integer(BigInt::from(k).pow(j as u32));
                    assert_eq!(*c, expect, "m={m} j={j} k={k}");
                }
            }
        }
    }

    #[test]
    fn geometric_block_is_the_complementary_product() {
        for q in 1..=8u64 {
            for xi in 0..q as i64 {
                // ∏_{η ≠ ξ} (1 − ηz) with cyclotomic coefficients.
                let mut prod = vec![CycloNumber::one(q)];
                for eta in (0..q as i64).filter(|&e| e != xi) {
                    let mut next = vec![CycloNumber::zero(q); prod.len() + 1];
                    for (i, c) in prod.iter().enumerate() {
                        next[i] += c;
                        next[i + 1] += &(c * &CycloNumber::root_of_unity_power(q, eta)).scale(&(-BigRational::one()));
                    }
                    prod = next;
                }
                let block = geometric_block(q);
                for (i, c) in prod.iter().enumerate() {
                    let mut expect = CycloNumber::zero(q);
                    expect.add_scaled_power(&block.coeff(i), xi * i as i64);
                    assert_eq!(*c, expect, "q={q} ξ=ζ^{xi} i={i}");
                }
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let gf = RationalGF::new(2, 1, ints(&[1, 0, 1])).unwrap();
        assert_eq!(gf.coefficient(4), BigInt::from(5));
        assert_eq!(gf.expand(5), ints(&[1, 0, 3, 0, 5, 0]));
        let trivial = RationalGF::new(1, 1, ints(&[1])).unwrap();
        assert_eq!(trivial.expand(4), ints(&[1, 2, 3, 4, 5]));
        let again = RationalGF::from_sequence(2, 1, &gf.expand(20)).unwrap();
        assert_eq!(again, gf);
        assert_eq!(
            RationalGF::new(2, 1, ints(&[1, 0, 0, 0, 1])),
            Err(Error::DegreeBound { degree: 4, bound: 4 })
        );
    }

    #[test]
    fn first_difference_is_lowest_distinguishing_k() {
        let a = RationalGF::new(1, 1, ints(&[1])).unwrap();
        let a2 = RationalGF::new(2, 1, ints(&[1, 2, 1, 0])).unwrap();
        assert_eq!(a.expand(7), a2.expand(7));
        let b = RationalGF::new(2, 1, ints(&[1, 0, 1, 0])).unwrap();
        assert_eq!(first_difference(&a2, &b), Some(1));
        assert_eq!(first_difference(&b, &b), None);
    }

    #[test]
    fn common_factor_for_even_cyclic() {
        let rs = a1();
        let s = su2_string();
        let g2 = genfun_truncate(&rs, &s, &cyclic(&[(1, 2)])).unwrap();
        assert_eq!(g2.common_factor(), RationalPoly::one());
        let g4 = genfun_truncate(&rs, &s, &cyclic(&[(1, 4)])).unwrap();
        assert_eq!(g4.numerator(), ints(&[1, 0, 1, 0, 1, 0, 1, 0]).as_slice());
        assert_eq!(g4.common_factor(), RationalPoly::from_integers(&[1, 0, 1]));
    }
}

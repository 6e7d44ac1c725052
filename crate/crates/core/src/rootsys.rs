//! Root systems of the simple series A–G and the weight-lattice arithmetic
//! everything else builds on.
//!
//! Weights are stored in fundamental-weight coordinates, so `coords[j]` is the
//! pairing `⟨μ, α_j^∨⟩`. The Cartan matrix follows the convention
//! `cartan[i][j] = ⟨α_j, α_i^∨⟩`, which makes the simple root `α_j` equal to
//! column `j` of the Cartan matrix. Simple roots are numbered as in Bourbaki.
//! The invariant form is normalised so that long roots have squared length 2.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg;
use crate::{Error, Result};

/// Default cap on the rank accepted by [`RootSystemData::build`].
pub const DEFAULT_RANK_CAP: usize = 4;

/// Hard limit on the number of Weyl group elements enumerated eagerly.
pub const MAX_WEYL_ORDER: usize = 500_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "A" => Series::A,
            "B" => Series::B,
            "C" => Series::C,
            "D" => Series::D,
            "E" => Series::E,
            "F" => Series::F,
            "G" => Series::G,
            _ => {
                return Err(Error::InvalidRootSystem {
                    series: s.to_string(),
                    rank: 0,
                })
            }
        })
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    /// The fundamental weight `ϖ_i` (0-based index).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Weight { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.coords
    }
}

impl From<Vec<i64>> for Weight {
    fn from(coords: Vec<i64>) -> Self {
        Weight { coords }
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(self.coords.iter().map(|a| -a).collect())
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight::new(rhs.coords.iter().map(|a| self * a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// One element of the Weyl group, as its action on fundamental-weight
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: Vec<Vec<i64>>,
    /// `ε(σ) = det σ = (−1)^{ℓ(σ)}`.
    pub sign: i8,
    pub length: usize,
    /// Index of `σ⁻¹` in [`RootSystemData::weyl`].
    pub inverse: usize,
}

impl WeylElement {
    pub fn act(&self, mu: &Weight) -> Weight {
        Weight::new(apply(&self.matrix, mu.coords()))
    }
}

fn apply(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.len();
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|c| (0..n).map(|k| row[k] * b[k][c]).sum())
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct RootSystemData {
    series: Series,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Weight>,
    /// Positive roots in the simple-root basis (same order as `positive_roots`).
    positive_roots_simple: Vec<Vec<i64>>,
    rho: Weight,
    /// `⟨ϖ_i, ϖ_j⟩`.
    bilinear: Vec<Vec<BigRational>>,
    /// `bilinear · gram_denom`, integral.
    gram_scaled: Vec<Vec<i64>>,
    gram_denom: i64,
    weyl: Vec<WeylElement>,
    /// Root (in weight coordinates) → (index into positive_roots, is positive).
    root_index: HashMap<Vec<i64>, (usize, bool)>,
}

impl RootSystemData {
    /// Builds the root system of type `series` and `rank` with the default
    /// rank cap.
    pub fn build(series: Series, rank: usize) -> Result<Self> {
        Self::build_with_cap(series, rank, DEFAULT_RANK_CAP)
    }

    pub fn build_with_cap(series: Series, rank: usize, rank_cap: usize) -> Result<Self> {
        let cartan = cartan_matrix(series, rank)?;
        if rank > rank_cap {
            return Err(Error::RankCapExceeded {
                rank,
                cap: rank_cap,
            });
        }

        let positive_roots_simple = positive_roots_simple_basis(&cartan);
        let positive_roots: Vec<Weight> = positive_roots_simple
            .iter()
            .map(|beta| simple_to_weight(&cartan, beta))
            .collect();
        let mut root_index = HashMap::new();
        for (i, r) in positive_roots.iter().enumerate() {
            root_index.insert(r.coords().to_vec(), (i, true));
            root_index.insert((-r).into_coords(), (i, false));
        }

        let rho = Weight::new(vec![1; rank]);
        let (bilinear, gram_scaled, gram_denom) = invariant_form(&cartan)?;
        let weyl = enumerate_weyl(&cartan, &rho)?;

        Ok(RootSystemData {
            series,
            rank,
            cartan,
            positive_roots,
            positive_roots_simple,
            rho,
            bilinear,
            gram_scaled,
            gram_denom,
            weyl,
            root_index,
        })
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Positive root `i` written in the simple-root basis.
    pub fn positive_root_simple_coords(&self, i: usize) -> &[i64] {
        &self.positive_roots_simple[i]
    }

    /// `N = |Φ⁺|`.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn bilinear(&self) -> &[Vec<BigRational>] {
        &self.bilinear
    }

    pub fn weyl(&self) -> &[WeylElement] {
        &self.weyl
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl.len()
    }

    /// The simple root `α_j` in weight coordinates.
    pub fn simple_root(&self, j: usize) -> Weight {
        Weight::new(self.cartan.iter().map(|row| row[j]).collect())
    }

    /// Looks up a root: `Some((index, positive))` if `mu` is `±` a positive
    /// root.
    pub fn root_lookup(&self, mu: &Weight) -> Option<(usize, bool)> {
        self.root_index.get(mu.coords()).copied()
    }

    pub fn check_rank(&self, mu: &Weight) -> Result<()> {
        if mu.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: mu.rank(),
            });
        }
        Ok(())
    }

    pub fn check_dominant(&self, mu: &Weight) -> Result<()> {
        self.check_rank(mu)?;
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.coords().to_vec()));
        }
        Ok(())
    }

    pub fn weyl_act(&self, sigma_index: usize, mu: &Weight) -> Result<Weight> {
        self.check_rank(mu)?;
        let sigma = self.weyl.get(sigma_index).ok_or(Error::WeylIndexOutOfRange {
            index: sigma_index,
            order: self.weyl.len(),
        })?;
        Ok(sigma.act(mu))
    }

    /// `s_i(μ) = μ − ⟨μ, α_i^∨⟩ α_i`.
    pub fn simple_reflection(&self, i: usize, mu: &Weight) -> Weight {
        let c = mu.coords()[i];
        Weight::new(
            mu.coords()
                .iter()
                .zip(&self.cartan)
                .map(|(m, row)| m - c * row[i])
                .collect(),
        )
    }

    /// The unique dominant weight in the Weyl orbit of `mu`.
    pub fn to_dominant(&self, mu: &Weight) -> Weight {
        let mut w = mu.clone();
        while let Some(i) = w.coords().iter().position(|&c| c < 0) {
            w = self.simple_reflection(i, &w);
        }
        w
    }

    /// The Weyl orbit of `mu`, sorted.
    pub fn orbit(&self, mu: &Weight) -> Vec<Weight> {
        let mut seen = std::collections::BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(mu.clone());
        queue.push_back(mu.clone());
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank {
                if w.coords()[i] == 0 {
                    continue;
                }
                let r = self.simple_reflection(i, &w);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// The invariant form `⟨μ, ν⟩`.
    pub fn inner(&self, mu: &Weight, nu: &Weight) -> BigRational {
        BigRational::new(self.inner_scaled(mu, nu).into(), self.gram_denom.into())
    }

    /// `⟨μ, ν⟩ · d` for the fixed integer `d` returned by
    /// [`Self::gram_denominator`].
    pub fn inner_scaled(&self, mu: &Weight, nu: &Weight) -> i128 {
        let (a, b) = (mu.coords(), nu.coords());
        let mut acc: i128 = 0;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            let row: i128 = (0..self.rank)
                .map(|j| self.gram_scaled[i][j] as i128 * b[j] as i128)
                .sum();
            acc += a[i] as i128 * row;
        }
        acc
    }

    /// Inner product of an integral weight with a rational vector.
    pub fn inner_rational(&self, mu: &Weight, v: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for i in 0..self.rank {
            if mu.coords()[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                acc += &self.bilinear[i][j] * &v[j] * BigRational::from_integer(mu.coords()[i].into());
            }
        }
        acc
    }

    pub fn gram_denominator(&self) -> i64 {
        self.gram_denom
    }
}

/// `Σ_j β_j α_j` in weight coordinates.
fn simple_to_weight(cartan: &[Vec<i64>], beta: &[i64]) -> Weight {
    Weight::new(
        cartan
            .iter()
            .map(|row| row.iter().zip(beta).map(|(c, b)| c * b).sum())
            .collect(),
    )
}

fn positive_roots_simple_basis(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: std::collections::HashSet<Vec<i64>> = std::collections::HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
            if pairing == 0 {
                continue;
            }
            let mut r = beta.clone();
            r[i] -= pairing;
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = seen.into_iter().filter(|b| b.iter().all(|&c| c >= 0)).collect();
    pos.sort_by(|a, b| {
        let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    pos
}

/// Returns `(⟨ϖ_i, ϖ_j⟩, scaled integer Gram matrix, scale)`.
#[allow(clippy::type_complexity)]
fn invariant_form(cartan: &[Vec<i64>]) -> Result<(Vec<Vec<BigRational>>, Vec<Vec<i64>>, i64)> {
    let n = cartan.len();
    // d_i = (α_i, α_i)/2, fixed by d_i · cartan[i][j] = d_j · cartan[j][i].
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    d[0] = Some(BigRational::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                let di = d[i].clone().unwrap();
                d[j] = Some(di * BigRational::new(cartan[i][j].into(), cartan[j][i].into()));
                stack.push(j);
            }
        }
    }
    let d: Vec<BigRational> = d.into_iter().map(|x| x.expect("connected Dynkin diagram")).collect();
    let longest = d.iter().max().cloned().unwrap();
    let d: Vec<BigRational> = d.iter().map(|x| x / &longest).collect();

    let inv = linalg::inverse(&linalg::from_integers(cartan))?;
    let bilinear: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| &d[i] * &inv[i][j]).collect())
        .collect();
    let denom = bilinear
        .iter()
        .flatten()
        .fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled = bilinear
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    (x * BigRational::from_integer(denom.clone()))
                        .to_integer()
                        .to_i64()
                        .expect("small Gram matrix")
                })
                .collect()
        })
        .collect();
    Ok((bilinear, scaled, denom.to_i64().expect("small denominator")))
}

fn enumerate_weyl(cartan: &[Vec<i64>], rho: &Weight) -> Result<Vec<WeylElement>> {
    let n = cartan.len();
    let reflections: Vec<Vec<Vec<i64>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| i64::from(r == c) - if c == i { cartan[r][i] } else { 0 })
                        .collect()
                })
                .collect()
        })
        .collect();

    let ident = (0..n).map(|r| (0..n).map(|c| i64::from(r == c)).collect()).collect();
    let mut matrices: Vec<Vec<Vec<i64>>> = vec![ident];
    let mut lengths = vec![0usize];
    // (parent, generator) with element = s_generator · parent.
    let mut parents: Vec<Option<(usize, usize)>> = vec![None];
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    index.insert(rho.coords().to_vec(), 0);

    let mut head = 0;
    while head < matrices.len() {
        for (i, s) in reflections.iter().enumerate() {
            let m = mat_mul(s, &matrices[head]);
            let image = apply(&m, rho.coords());
            if index.contains_key(&image) {
                continue;
            }
            if matrices.len() >= MAX_WEYL_ORDER {
                return Err(Error::WeylGroupTooLarge {
                    limit: MAX_WEYL_ORDER,
                });
            }
            index.insert(image, matrices.len());
            matrices.push(m);
            lengths.push(lengths[head] + 1);
            parents.push(Some((head, i)));
        }
        head += 1;
    }

    // (s_i w)⁻¹ = w⁻¹ s_i; BFS order guarantees parents come first.
    let mut inverse_mats: Vec<Vec<Vec<i64>>> = Vec::with_capacity(matrices.len());
    let mut inverse = Vec::with_capacity(matrices.len());
    for p in &parents {
        let inv = match p {
            None => matrices[0].clone(),
            Some((parent, gen)) => mat_mul(&inverse_mats[*parent], &reflections[*gen]),
        };
        inverse.push(index[&apply(&inv, rho.coords())]);
        inverse_mats.push(inv);
    }

    Ok(matrices
        .into_iter()
        .zip(lengths)
        .zip(inverse)
        .map(|((matrix, length), inverse)| WeylElement {
            matrix,
            sign: if length % 2 == 0 { 1 } else { -1 },
            length,
            inverse,
        })
        .collect())
}

/// Cartan matrix with `cartan[i][j] = ⟨α_j, α_i^∨⟩`, Bourbaki numbering.
pub fn cartan_matrix(series: Series, rank: usize) -> Result<Vec<Vec<i64>>> {
    let valid = match series {
        Series::A => rank >= 1,
        Series::B | Series::C => rank >= 2,
        Series::D => rank >= 3,
        Series::E => (6..=8).contains(&rank),
        Series::F => rank == 4,
        Series::G => rank == 2,
    };
    if !valid {
        return Err(Error::InvalidRootSystem {
            series: series.to_string(),
            rank,
        });
    }
    let n = rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match series {
        Series::A | Series::B | Series::C => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Series::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Series::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        Series::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        Series::G => link(0, 1),
    }
    match series {
        // α_n short.
        Series::B => c[n - 1][n - 2] = -2,
        // α_n long.
        Series::C => c[n - 2][n - 1] = -2,
        // α_3, α_4 short.
        Series::F => c[2][1] = -2,
        // α_1 short.
        Series::G => c[0][1] = -3,
        _ => {}
    }
    Ok(c)
}

/// Σ of the positive roots, which must equal `2ρ`.
pub fn sum_of_positive_roots(rs: &RootSystemData) -> Weight {
    rs.positive_roots()
        .iter()
        .fold(Weight::zero(rs.rank()), |acc, r| &acc + r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::determinant;

    fn rs(s: Series, n: usize) -> RootSystemData {
        RootSystemData::build_with_cap(s, n, 8).unwrap()
    }

    #[test]
    fn sizes_of_small_systems() {
        for (s, n, big_n, w) in [
            (Series::A, 1, 1, 2),
            (Series::A, 2, 3, 6),
            (Series::A, 3, 6, 24),
            (Series::B, 2, 4, 8),
            (Series::B, 3, 9, 48),
            (Series::C, 3, 9, 48),
            (Series::D, 4, 12, 192),
            (Series::G, 2, 6, 12),
            (Series::F, 4, 24, 1152),
        ] {
            let r = rs(s, n);
            assert_eq!(r.num_positive_roots(), big_n, "{s}{n}");
            assert_eq!(r.weyl_order(), w, "{s}{n}");
        }
    }

    #[test]
    fn e6_needs_a_raised_cap() {
        assert_eq!(
            RootSystemData::build(Series::E, 6).unwrap_err(),
            Error::RankCapExceeded { rank: 6, cap: 4 }
        );
        let r = rs(Series::E, 6);
        assert_eq!(r.num_positive_roots(), 36);
        assert_eq!(r.weyl_order(), 51840);
    }

    #[test]
    fn invalid_types_are_rejected() {
        for (s, n) in [(Series::G, 3), (Series::E, 5), (Series::F, 2), (Series::A, 0), (Series::B, 1)] {
            assert!(matches!(
                RootSystemData::build(s, n),
                Err(Error::InvalidRootSystem { .. })
            ));
        }
        assert!("H".parse::<Series>().is_err());
    }

    #[test]
    fn simple_roots_are_cartan_columns() {
        let r = rs(Series::A, 2);
        assert_eq!(r.simple_root(0), Weight::new(vec![2, -1]));
        assert_eq!(r.simple_root(1), Weight::new(vec![-1, 2]));
        let b2 = rs(Series::B, 2);
        assert_eq!(b2.simple_root(0), Weight::new(vec![2, -2]));
        assert_eq!(b2.simple_root(1), Weight::new(vec![-1, 2]));
    }

    #[test]
    fn structural_invariants() {
        for (s, n) in [
            (Series::A, 1),
            (Series::A, 2),
            (Series::A, 3),
            (Series::B, 2),
            (Series::B, 3),
            (Series::C, 3),
            (Series::D, 4),
            (Series::G, 2),
        ] {
            let r = rs(s, n);
            // Cartan shape.
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        assert_eq!(r.cartan()[i][j], 2);
                    } else {
                        assert!(r.cartan()[i][j] <= 0);
                    }
                }
            }
            assert_eq!(r.rho().coords(), vec![1; n].as_slice());
            assert_eq!(sum_of_positive_roots(&r), 2 * r.rho());

            // Φ is closed under simple reflections.
            let all: std::collections::HashSet<Weight> = r
                .positive_roots()
                .iter()
                .flat_map(|a| [a.clone(), -a])
                .collect();
            for a in &all {
                for i in 0..n {
                    assert!(all.contains(&r.simple_reflection(i, a)));
                }
            }

            for sigma in r.weyl() {
                let det = determinant(&sigma.matrix);
                assert_eq!(det, (sigma.sign as i64).into());
                let inversions = r
                    .positive_roots()
                    .iter()
                    .filter(|a| !r.root_lookup(&sigma.act(a)).unwrap().1)
                    .count();
                assert_eq!(inversions, sigma.length);
                for a in &all {
                    assert!(all.contains(&sigma.act(a)));
                }
                let inv = &r.weyl()[sigma.inverse];
                let rho = r.rho();
                assert_eq!(&inv.act(&sigma.act(rho)), rho);
            }
        }
    }

    #[test]
    fn weyl_action_examples() {
        let a1 = rs(Series::A, 1);
        let s = a1.weyl().iter().position(|w| w.length == 1).unwrap();
        assert_eq!(a1.weyl_act(s, &Weight::new(vec![1])).unwrap(), Weight::new(vec![-1]));
        assert_eq!(a1.weyl_act(0, &Weight::new(vec![5])).unwrap(), Weight::new(vec![5]));
        assert!(matches!(
            a1.weyl_act(2, &Weight::new(vec![1])),
            Err(Error::WeylIndexOutOfRange { index: 2, order: 2 })
        ));

        let a2 = rs(Series::A, 2);
        let longest = a2.weyl().iter().position(|w| w.length == 3).unwrap();
        assert_eq!(
            a2.weyl_act(longest, &Weight::new(vec![1, 0])).unwrap(),
            Weight::new(vec![0, -1])
        );
    }

    #[test]
    fn reflection_fixes_its_hyperplane() {
        let b2 = rs(Series::B, 2);
        let mu = Weight::new(vec![0, 3]);
        assert_eq!(b2.simple_reflection(0, &mu), mu);
        let mu = Weight::new(vec![4, 0]);
        assert_eq!(b2.simple_reflection(1, &mu), mu);
    }

    #[test]
    fn inner_product_normalisation() {
        let a1 = rs(Series::A, 1);
        let alpha = a1.simple_root(0);
        assert_eq!(a1.inner(&alpha, &alpha), BigRational::from_integer(2.into()));
        assert!(a1.inner(&alpha, &Weight::zero(1)).is_zero());

        let a2 = rs(Series::A, 2);
        assert_eq!(
            a2.inner(&a2.simple_root(0), &a2.simple_root(1)),
            BigRational::from_integer((-1).into())
        );

        // Long roots have squared length 2, short roots 1 (B2) or 2/3 (G2).
        let b2 = rs(Series::B, 2);
        assert_eq!(b2.inner(&b2.simple_root(0), &b2.simple_root(0)), BigRational::from_integer(2.into()));
        assert_eq!(b2.inner(&b2.simple_root(1), &b2.simple_root(1)), BigRational::one());
        let g2 = rs(Series::G, 2);
        assert_eq!(g2.inner(&g2.simple_root(0), &g2.simple_root(0)), BigRational::new(2.into(), 3.into()));
    }

    #[test]
    fn coordinates_are_coroot_pairings() {
        // ⟨μ, α_j^∨⟩ = 2⟨μ, α_j⟩ / ⟨α_j, α_j⟩ must read off coords[j].
        for (s, n) in [(Series::B, 3), (Series::C, 3), (Series::G, 2), (Series::D, 4)] {
            let r = rs(s, n);
            let mu = Weight::new((1..=n as i64).collect());
            for j in 0..n {
                let a = r.simple_root(j);
                let pairing = BigRational::from_integer(2.into()) * r.inner(&mu, &a) / r.inner(&a, &a);
                assert_eq!(pairing, BigRational::from_integer(mu.coords()[j].into()));
            }
        }
    }

    #[test]
    fn inner_product_is_weyl_invariant() {
        let r = rs(Series::B, 3);
        let mu = Weight::new(vec![1, -2, 3]);
        let nu = Weight::new(vec![0, 4, -1]);
        for sigma in r.weyl() {
            assert_eq!(r.inner(&sigma.act(&mu), &sigma.act(&nu)), r.inner(&mu, &nu));
        }
    }

    #[test]
    fn dominant_representative() {
        let a2 = rs(Series::A, 2);
        for w in a2.orbit(&Weight::new(vec![2, 1])) {
            assert_eq!(a2.to_dominant(&w), Weight::new(vec![2, 1]));
        }
        assert_eq!(a2.orbit(&Weight::new(vec![2, 1])).len(), 6);
        assert_eq!(a2.orbit(&Weight::new(vec![1, 0])).len(), 3);
    }
}

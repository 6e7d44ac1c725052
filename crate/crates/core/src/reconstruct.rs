//! Recovering a whole string of multiplicities from finitely many samples.
//!
//! Writing `k = mq + j` with `0 ≤ j < q`, a generating function
//! `p(z)/(1 − z^q)^{N+1}` has coefficients
//! `n_{mq+j} = Σ_{h=0}^{N} b_{hq+j} C(m−h+N, N)` (terms with `h > m` vanish).
//! For each residue `j` this is a linear system in `b_j, b_{q+j}, …, b_{Nq+j}`.
//! Its matrix is non-singular whenever the `m` are distinct, so `N+1` samples
//! in every residue class determine `p`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::genfun::{binomial, first_difference, RationalGF};
use crate::linalg::{self, Matrix};
use crate::{Error, Result};

/// Samples `k ↦ n_k` on a finite set `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleWindow {
    pub q: u64,
    pub big_n: usize,
    pub samples: BTreeMap<u64, BigInt>,
}

impl SampleWindow {
    pub fn new(q: u64, big_n: usize, samples: BTreeMap<u64, BigInt>) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidInput("modulus q must be positive".into()));
        }
        if let Some((k, v)) = samples.iter().find(|(_, v)| v.is_negative()) {
            return Err(Error::InvalidInput(format!("negative sample n_{k} = {v}")));
        }
        Ok(SampleWindow { q, big_n, samples })
    }

    /// Restricts a full sequence `seq[k] = n_k` to the indices in `ks`.
    pub fn from_sequence(q: u64, big_n: usize, seq: &[BigInt], ks: impl IntoIterator<Item = u64>) -> Result<Self> {
        let samples = ks
            .into_iter()
            .map(|k| {
                seq.get(k as usize)
                    .map(|v| (k, v.clone()))
                    .ok_or_else(|| Error::InvalidInput(format!("no value for k = {k}")))
            })
            .collect::<Result<_>>()?;
        Self::new(q, big_n, samples)
    }

    pub fn indices(&self) -> impl Iterator<Item = u64> + '_ {
        self.samples.keys().copied()
    }

    pub fn condition(&self) -> WindowReport {
        window_condition(self.indices(), self.q, self.big_n)
    }
}

/// Per-residue sample counts against the requirement of `N+1` per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowReport {
    pub q: u64,
    pub needed: usize,
    pub counts: Vec<usize>,
    /// Residues with fewer than `needed` samples.
    pub failing: Vec<u64>,
}

impl WindowReport {
    pub fn satisfied(&self) -> bool {
        self.failing.is_empty()
    }

    pub fn into_result(self) -> Result<Self> {
        if self.satisfied() {
            Ok(self)
        } else {
            Err(Error::WindowConditionViolated {
                residues: self.failing,
                needed: self.needed,
            })
        }
    }
}

/// `|A ∩ (j + qℤ)| ≥ N+1` for every `0 ≤ j < q`. Duplicates count once.
pub fn window_condition(a: impl IntoIterator<Item = u64>, q: u64, big_n: usize) -> WindowReport {
    let distinct: BTreeSet<u64> = a.into_iter().collect();
    let mut counts = vec![0usize; q as usize];
    for k in distinct {
        counts[(k % q) as usize] += 1;
    }
    let needed = big_n + 1;
    let failing = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c < needed)
        .map(|(j, _)| j as u64)
        .collect();
    WindowReport {
        q,
        needed,
        counts,
        failing,
    }
}

/// `[C(m_i − h + N, N)]_{i,h}` with zero entries for `h > m_i`.
pub fn binomial_matrix(ms: &[u64], big_n: usize) -> Matrix {
    let n = big_n as u64;
    ms.iter()
        .map(|&m| {
            (0..=n)
                .map(|h| {
                    if h > m {
                        BigRational::zero()
                    } else {
                        BigRational::from_integer(binomial(m - h + n, n))
                    }
                })
                .collect()
        })
        .collect()
}

/// The solved system for one residue class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSystem {
    pub residue: u64,
    /// Sample indices `k_i = m_i q + j` used for the solve.
    pub basis: Vec<u64>,
    /// Inverse of the binomial matrix: `b_{hq+j} = Σ_i inverse[h][i] n_{k_i}`.
    pub inverse: Matrix,
    /// Further samples in this class that were checked against the solution.
    pub verified: Vec<u64>,
}

/// `n_k = Σ coefficient · n_{sample}` over the sampled indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub k: u64,
    pub terms: Vec<(u64, BigRational)>,
}

impl Certificate {
    pub fn apply(&self, samples: &BTreeMap<u64, BigInt>) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (s, c) in &self.terms {
            let v = samples
                .get(s)
                .ok_or_else(|| Error::InvalidInput(format!("certificate needs n_{s}")))?;
            acc += c * BigRational::from_integer(v.clone());
        }
        Ok(acc)
    }
}

pub fn apply_certificate(cert: &Certificate, samples: &BTreeMap<u64, BigInt>) -> Result<BigRational> {
    cert.apply(samples)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructionReport {
    pub gf: RationalGF,
    pub systems: Vec<ResidueSystem>,
}

impl ReconstructionReport {
    /// Number of samples beyond the `N+1` per class, all of which agreed.
    pub fn verified_count(&self) -> usize {
        self.systems.iter().map(|s| s.verified.len()).sum()
    }

    /// Linear expression of `n_k` in the basis samples of its residue class.
    pub fn certificate(&self, k: u64) -> Certificate {
        let q = self.gf.q();
        let n = self.gf.big_n() as u64;
        let (m, j) = (k / q, k % q);
        let sys = &self.systems[j as usize];
        let terms = sys
            .basis
            .iter()
            .enumerate()
            .map(|(i, &s)| {
                let c = (0..=n.min(m)).fold(BigRational::zero(), |acc, h| {
                    acc + BigRational::from_integer(binomial(m - h + n, n)) * &sys.inverse[h as usize][i]
                });
                (s, c)
            })
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Certificate { k, terms }
    }
}

/// Solves for the numerator from the first `N+1` samples of each residue
/// class and checks every further sample against it.
pub fn reconstruct_string(window: &SampleWindow) -> Result<ReconstructionReport> {
    window.condition().into_result()?;
    let q = window.q;
    let big_n = window.big_n;
    let mut numerator = vec![BigInt::zero(); q as usize * (big_n + 1)];
    let mut systems = Vec::with_capacity(q as usize);
    for j in 0..q {
        let ks: Vec<u64> = window.indices().filter(|k| k % q == j).collect();
        let (basis, extra) = ks.split_at(big_n + 1);
        let ms: Vec<u64> = basis.iter().map(|k| k / q).collect();
        let inverse = linalg::inverse(&binomial_matrix(&ms, big_n))?;
        let rhs: Vec<BigRational> = basis
            .iter()
            .map(|k| BigRational::from_integer(window.samples[k].clone()))
            .collect();
        let b = linalg::mat_vec(&inverse, &rhs);
        for (h, v) in b.iter().enumerate() {
            let d = h * q as usize + j as usize;
            if !v.is_integer() {
                return Err(Error::NonIntegralNumerator {
                    degree: d,
                    value: v.to_string(),
                });
            }
            numerator[d] = v.to_integer();
        }
        systems.push(ResidueSystem {
            residue: j,
            basis: basis.to_vec(),
            inverse,
            verified: extra.to_vec(),
        });
    }
    let gf = RationalGF::new(q, big_n, numerator)?;
    for sys in &systems {
        for &k in &sys.verified {
            let predicted = gf.coefficient(k);
            if predicted != window.samples[&k] {
                return Err(Error::InconsistentSamples {
                    k,
                    sampled: window.samples[&k].to_string(),
                    predicted: predicted.to_string(),
                });
            }
        }
    }
    Ok(ReconstructionReport { gf, systems })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    EquivalentOnString,
    /// The smallest `k` with `n_k ≠ n'_k`.
    DistinguishedAt { k: u64 },
    /// At least one of the windows misses the residue-count condition.
    InsufficientWindow { first: Vec<u64>, second: Vec<u64> },
}

impl Verdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Verdict::EquivalentOnString)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::EquivalentOnString => "equivalent_on_string",
            Verdict::DistinguishedAt { .. } => "distinguished_at",
            Verdict::InsufficientWindow { .. } => "insufficient_window",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::DistinguishedAt { k } => write!(f, "distinguished_at {k}"),
            v => f.write_str(v.label()),
        }
    }
}

/// Compares two subgroups on one string from their sample windows.
pub fn strong_multiplicity_test(a: &SampleWindow, b: &SampleWindow) -> Result<Verdict> {
    if (a.q, a.big_n) != (b.q, b.big_n) {
        return Err(Error::IncompatibleWindows(format!(
            "(q, N) = ({}, {}) vs ({}, {})",
            a.q, a.big_n, b.q, b.big_n
        )));
    }
    let (ca, cb) = (a.condition(), b.condition());
    if !ca.satisfied() || !cb.satisfied() {
        return Ok(Verdict::InsufficientWindow {
            first: ca.failing,
            second: cb.failing,
        });
    }
    let ga = reconstruct_string(a)?.gf;
    let gb = reconstruct_string(b)?.gf;
    Ok(match first_difference(&ga, &gb) {
        None => Verdict::EquivalentOnString,
        Some(k) => Verdict::DistinguishedAt { k },
    })
}

/// What a finite prefix `[0, T]` certifies when the two sequences are known
/// to disagree exactly on `disagreements`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityReport {
    pub t: u64,
    /// Window condition for `A = [0, T] ∖ disagreements`.
    pub window: WindowReport,
    pub disagreement_count: u64,
    /// `|disagreements| / T`.
    pub density: BigRational,
    /// `density < 1/q`.
    pub below_inverse_q: bool,
}

pub fn density_prefix_check(disagreements: &BTreeSet<u64>, q: u64, big_n: usize, t: u64) -> Result<DensityReport> {
    if q == 0 {
        return Err(Error::InvalidInput("modulus q must be positive".into()));
    }
    let min_t = q * (big_n as u64 + 1);
    if t < min_t {
        return Err(Error::InvalidInput(format!("prefix length {t} is below q(N+1) = {min_t}")));
    }
    if let Some(&k) = disagreements.iter().find(|&&k| k > t) {
        return Err(Error::InvalidInput(format!("disagreement {k} lies outside [0, {t}]")));
    }
    let window = window_condition((0..=t).filter(|k| !disagreements.contains(k)), q, big_n);
    let count = disagreements.len() as u64;
    let density = BigRational::new(count.into(), t.into());
    let below_inverse_q = density < BigRational::new(1.into(), q.into());
    Ok(DensityReport {
        t,
        window,
        disagreement_count: count,
        density,
        below_inverse_q,
    })
}

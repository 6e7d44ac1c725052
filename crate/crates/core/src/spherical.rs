//! Finite unions of strings and the family-wide equivalence driver.
//!
//! A family stands for the set of irreducibles relevant to a problem (for
//! example the spherical spectrum of a symmetric space). Two subgroups are
//! declared equivalent on the family when every string's generating function
//! agrees, each decided from a finite sample window.

use num_integer::Integer;

use crate::genfun::{RationalGF, StringSpec};
use crate::reconstruct::{reconstruct_string, strong_multiplicity_test, window_condition, SampleWindow, Verdict};
use crate::rootsys::{RootSystemData, Series, Weight};
use crate::subgroup::{Backend, FiniteSubgroupData, SubgroupEvaluator};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringFamily {
    pub label: String,
    pub strings: Vec<StringSpec>,
}

impl StringFamily {
    pub fn new(label: impl Into<String>, strings: Vec<StringSpec>) -> Result<Self> {
        if strings.is_empty() {
            return Err(Error::InvalidInput("a family needs at least one string".into()));
        }
        let rank = strings[0].base.rank();
        if strings.iter().any(|s| s.base.rank() != rank) {
            return Err(Error::InvalidInput("strings of different ranks".into()));
        }
        Ok(StringFamily {
            label: label.into(),
            strings,
        })
    }

    pub fn check(&self, rs: &RootSystemData) -> Result<()> {
        self.strings.iter().try_for_each(|s| s.check(rs))
    }
}

/// All irreducibles of `SU(2)`: the single string `kϖ`.
pub fn su2_family() -> StringFamily {
    StringFamily::new(
        "SU(2)",
        vec![StringSpec::new(Weight::new(vec![1]), Weight::new(vec![0])).unwrap()],
    )
    .unwrap()
}

/// Spherical representations of `Spin(n)` for the sphere `S^{n−1}`: the
/// single string `kϖ₁`. `rs` must be of type `B` or `D`.
pub fn sphere_family(rs: &RootSystemData) -> Result<StringFamily> {
    let n = match rs.series() {
        Series::B => 2 * rs.rank() + 1,
        Series::D => 2 * rs.rank(),
        s => {
            return Err(Error::InvalidInput(format!(
                "sphere families exist for types B and D, not {s}"
            )))
        }
    };
    let s = StringSpec::new(Weight::fundamental(rs.rank(), 0), Weight::zero(rs.rank()))?;
    StringFamily::new(format!("S^{}", n - 1), vec![s])
}

/// Which indices `k` to sample on each string.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum WindowSpec {
    /// `[0, q(N+1))` on every string.
    #[default]
    Default,
    /// `[start, start + len)` on every string.
    Interval { start: u64, len: u64 },
    /// The same explicit set on every string.
    Explicit(Vec<u64>),
    /// One explicit set per string.
    PerString(Vec<Vec<u64>>),
}

impl WindowSpec {
    pub fn indices(&self, string: usize, q: u64, big_n: usize) -> Result<Vec<u64>> {
        Ok(match self {
            WindowSpec::Default => (0..q * (big_n as u64 + 1)).collect(),
            WindowSpec::Interval { start, len } => (*start..start + len).collect(),
            WindowSpec::Explicit(ks) => ks.clone(),
            WindowSpec::PerString(all) => all
                .get(string)
                .cloned()
                .ok_or_else(|| Error::InvalidInput(format!("no window given for string {string}")))?,
        })
    }
}

/// `n_k` for each `k` in `ks`, packaged as a window.
pub fn sample_string(
    eval: &SubgroupEvaluator<'_>,
    s: &StringSpec,
    ks: &[u64],
    big_n: usize,
) -> Result<SampleWindow> {
    let samples = ks
        .iter()
        .map(|&k| Ok((k, eval.invariant_dimension(&s.member(k))?)))
        .collect::<Result<_>>()?;
    SampleWindow::new(eval.subgroup().modulus(), big_n, samples)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringResult {
    pub string: StringSpec,
    pub window: Vec<u64>,
    pub verdict: Verdict,
    pub first: RationalGF,
    pub second: RationalGF,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub label: String,
    pub q: u64,
    pub big_n: usize,
    pub strings: Vec<StringResult>,
}

impl FamilyReport {
    /// Equivalent on every string of the family.
    pub fn equivalent(&self) -> bool {
        self.strings.iter().all(|r| r.verdict.is_equivalent())
    }
}

/// Samples both subgroups on every string's window and compares the
/// reconstructed generating functions. Both subgroups are evaluated with the
/// least common multiple of their moduli.
pub fn family_equivalence_test(
    rs: &RootSystemData,
    family: &StringFamily,
    gamma_a: &FiniteSubgroupData,
    gamma_b: &FiniteSubgroupData,
    window: &WindowSpec,
    backend: Backend,
) -> Result<FamilyReport> {
    family.check(rs)?;
    let q = gamma_a.modulus().lcm(&gamma_b.modulus());
    let big_n = rs.num_positive_roots();
    let ga = gamma_a.with_modulus(q)?;
    let gb = gamma_b.with_modulus(q)?;
    let eval_a = SubgroupEvaluator::new(rs, &ga, backend)?;
    let eval_b = SubgroupEvaluator::new(rs, &gb, backend)?;

    let mut strings = Vec::with_capacity(family.strings.len());
    for (i, s) in family.strings.iter().enumerate() {
        let ks = window.indices(i, q, big_n)?;
        let report = window_condition(ks.iter().copied(), q, big_n);
        if !report.satisfied() {
            return Err(Error::FamilyWindowViolated {
                string: i,
                residues: report.failing,
                needed: report.needed,
            });
        }
        let wa = sample_string(&eval_a, s, &ks, big_n)?;
        let wb = sample_string(&eval_b, s, &ks, big_n)?;
        let verdict = strong_multiplicity_test(&wa, &wb)?;
        strings.push(StringResult {
            string: s.clone(),
            window: ks,
            verdict,
            first: reconstruct_string(&wa)?.gf,
            second: reconstruct_string(&wb)?.gf,
        });
    }
    Ok(FamilyReport {
        label: family.label.clone(),
        q,
        big_n,
        strings,
    })
}

//! Highest-weight representations: Weyl dimension, Freudenthal weight
//! multiplicities, and characters evaluated as plain weight sums.
//!
//! The weight-sum character is the oracle the closed-form character
//! evaluation in [`crate::subgroup`] is checked against.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::cyclo::CycloNumber;
use crate::rootsys::{RootSystemData, Weight};
use crate::subgroup::TorusElement;
use crate::{Error, Result};

/// Default cap on `dim V_Λ` for building weight tables.
pub const DEFAULT_DIMENSION_CAP: u64 = 100_000;

/// `dim V_Λ = ∏_{α>0} ⟨Λ+ρ, α⟩ / ⟨ρ, α⟩`.
pub fn weyl_dimension(rs: &RootSystemData, lambda: &Weight) -> Result<BigInt> {
    rs.check_dominant(lambda)?;
    let shifted = lambda + rs.rho();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for alpha in rs.positive_roots() {
        num *= rs.inner_scaled(&shifted, alpha);
        den *= rs.inner_scaled(rs.rho(), alpha);
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// All weights of `V_Λ` with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiplicityTable {
    pub highest: Weight,
    pub entries: BTreeMap<Weight, u64>,
}

impl WeightMultiplicityTable {
    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        self.entries.get(mu).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Dominant weights only.
    pub fn dominant(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.entries.iter().filter(|(w, _)| w.is_dominant())
    }
}

pub fn freudenthal_multiplicities(rs: &RootSystemData, lambda: &Weight) -> Result<WeightMultiplicityTable> {
    freudenthal_multiplicities_with_cap(rs, lambda, DEFAULT_DIMENSION_CAP)
}

/// Freudenthal's recursion over the dominant weights of `V_Λ`, processed by
/// increasing height of `Λ − μ`, followed by Weyl-orbit expansion.
pub fn freudenthal_multiplicities_with_cap(
    rs: &RootSystemData,
    lambda: &Weight,
    cap: u64,
) -> Result<WeightMultiplicityTable> {
    let dim = weyl_dimension(rs, lambda)?;
    if dim > BigInt::from(cap) {
        return Err(Error::DimensionCapExceeded {
            dim: dim.to_string(),
            cap,
        });
    }

    // Dominant weights μ ≼ Λ, reached through chains of dominant weights that
    // differ by positive roots; the value is the height of Λ − μ.
    let mut height: HashMap<Weight, i64> = HashMap::new();
    height.insert(lambda.clone(), 0);
    let mut stack = vec![lambda.clone()];
    while let Some(mu) = stack.pop() {
        let h = height[&mu];
        for (i, alpha) in rs.positive_roots().iter().enumerate() {
            let nu = &mu - alpha;
            if nu.is_dominant() && !height.contains_key(&nu) {
                let root_height: i64 = rs.positive_root_simple_coords(i).iter().sum();
                height.insert(nu.clone(), h + root_height);
                stack.push(nu);
            }
        }
    }
    let mut order: Vec<Weight> = height.keys().cloned().collect();
    order.sort_by(|a, b| height[a].cmp(&height[b]).then_with(|| b.cmp(a)));

    let norm = |w: &Weight| -> i128 {
        let s = w + rs.rho();
        rs.inner_scaled(&s, &s)
    };
    let top = norm(lambda);

    let mut mult: HashMap<Weight, i128> = HashMap::new();
    mult.insert(lambda.clone(), 1);
    // tail[(ν, i)] = Σ_{j≥0} m(ν + jα_i)(ν + jα_i, α_i). Every weight on the
    // string above μ has a dominant form processed before μ, so entries
    // never go stale.
    let mut tail: HashMap<(Weight, usize), i128> = HashMap::new();
    for mu in order.iter().skip(1) {
        let mut acc: i128 = 0;
        for (i, alpha) in rs.positive_roots().iter().enumerate() {
            let mut nu = mu + alpha;
            let mut path = Vec::new();
            let mut sum = 0;
            loop {
                if let Some(&s) = tail.get(&(nu.clone(), i)) {
                    sum = s;
                    break;
                }
                let Some(&m) = mult.get(&rs.to_dominant(&nu)) else {
                    break;
                };
                let term = m * rs.inner_scaled(&nu, alpha);
                let next = &nu + alpha;
                path.push((std::mem::replace(&mut nu, next), term));
            }
            for (w, term) in path.into_iter().rev() {
                sum += term;
                tail.insert((w, i), sum);
            }
            acc += sum;
        }
        let den = top - norm(mu);
        let num = 2 * acc;
        assert!(den > 0 && num % den == 0, "Freudenthal recursion broke at {mu}");
        mult.insert(mu.clone(), num / den);
    }

    let mut entries = BTreeMap::new();
    for (mu, m) in &mult {
        let m = u64::try_from(*m).expect("non-negative multiplicity");
        for w in rs.orbit(mu) {
            entries.insert(w, m);
        }
    }
    Ok(WeightMultiplicityTable {
        highest: lambda.clone(),
        entries,
    })
}

/// `χ_Λ(t) = Σ_μ m(μ) t^μ` as an exact element of `ℚ(ζ_q)`.
pub fn character_weight_sum(
    rs: &RootSystemData,
    lambda: &Weight,
    t: &TorusElement,
    q: u64,
) -> Result<CycloNumber> {
    let table = freudenthal_multiplicities(rs, lambda)?;
    character_from_table(&table, t, q)
}

pub fn character_from_table(table: &WeightMultiplicityTable, t: &TorusElement, q: u64) -> Result<CycloNumber> {
    // Bucket by exponent first; one field addition per residue.
    let mut buckets = vec![0u64; q as usize];
    for (mu, m) in &table.entries {
        let e = t.pairing_exponent(mu, q)?;
        buckets[e as usize] += m;
    }
    let mut out = CycloNumber::zero(q);
    for (e, count) in buckets.iter().enumerate() {
        if *count > 0 {
            out.add_scaled_power(&BigRational::from_integer((*count).into()), e as i64);
        }
    }
    Ok(out)
}

/// Insert-only, thread-safe memo of weight tables for one root system.
#[derive(Debug, Default)]
pub struct WeightTableCache {
    cap: Option<u64>,
    tables: Mutex<HashMap<Weight, Arc<WeightMultiplicityTable>>>,
}

impl WeightTableCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cap(cap: u64) -> Self {
        WeightTableCache {
            cap: Some(cap),
            tables: Mutex::default(),
        }
    }

    pub fn get(&self, rs: &RootSystemData, lambda: &Weight) -> Result<Arc<WeightMultiplicityTable>> {
        if let Some(t) = self.tables.lock().unwrap().get(lambda) {
            return Ok(t.clone());
        }
        let table = Arc::new(freudenthal_multiplicities_with_cap(
            rs,
            lambda,
            self.cap.unwrap_or(DEFAULT_DIMENSION_CAP),
        )?);
        Ok(self
            .tables
            .lock()
            .unwrap()
            .entry(lambda.clone())
            .or_insert(table)
            .clone())
    }

    pub fn len(&self) -> usize {
        self.tables.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Dominant weights `Λ` with `dim V_Λ ≤ max_dim`, by increasing coordinate sum.
pub fn dominant_weights_up_to_dimension(rs: &RootSystemData, max_dim: u64) -> Vec<Weight> {
    let n = rs.rank();
    let mut out = Vec::new();
    let bound = BigInt::from(max_dim);
    // Dimension is strictly increasing in every coordinate, so a coordinate
    // sum with no admissible weight ends the search.
    for total in 0.. {
        let mut any = false;
        for_each_composition(n, total, &mut |c| {
            let w = Weight::new(c.to_vec());
            if weyl_dimension(rs, &w).unwrap() <= bound {
                any = true;
                out.push(w);
            }
        });
        if !any {
            break;
        }
    }
    out
}

fn for_each_composition(parts: usize, total: i64, f: &mut dyn FnMut(&[i64])) {
    fn rec(buf: &mut Vec<i64>, parts: usize, left: i64, f: &mut dyn FnMut(&[i64])) {
        if buf.len() + 1 == parts {
            buf.push(left);
            f(buf);
            buf.pop();
            return;
        }
        for x in 0..=left {
            buf.push(x);
            rec(buf, parts, left - x, f);
            buf.pop();
        }
    }
    rec(&mut Vec::with_capacity(parts), parts, total, f);
}

/// Convenience for tests and reports: a dimension that fits in `u64`.
pub fn weyl_dimension_u64(rs: &RootSystemData, lambda: &Weight) -> Result<u64> {
    Ok(weyl_dimension(rs, lambda)?.to_u64().expect("dimension fits in u64"))
}

//! Representation-theoretic computations over exact arithmetic: weight
//! multiplicities (Freudenthal recursion), tensor product decompositions
//! (Klimyk / Racah-Speiser), and Dynkin indices of representations.
//!
//! Weights of a finite-dimensional module are integral, so the inner loops
//! run on `i64` coordinate vectors with `i128` accumulation for inner
//! products; all public values are arbitrary-precision.

use num::{BigInt, BigRational, FromPrimitive, Signed, ToPrimitive, Zero};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exec;
use crate::lie::{format_int_coords, RootSystem, Weight};

/// Resource guards for module-sized computations.
///
/// Guards are configuration, not constants, so larger E-series computations
/// can be enabled deliberately.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Maximum Weyl dimension of any module whose weight system is
    /// enumerated.
    pub max_dim: u64,
    /// Run the data-parallel inner loops on rayon when available.
    pub parallel: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_dim: 100_000,
            parallel: exec::parallel_enabled(),
        }
    }
}

impl Limits {
    pub fn with_max_dim(max_dim: u64) -> Self {
        Limits {
            max_dim,
            ..Limits::default()
        }
    }

    fn check_dim(&self, dim: &BigInt) -> Result<()> {
        if *dim > BigInt::from(self.max_dim) {
            Err(Error::DimensionGuard {
                dim: dim.to_string(),
                guard: self.max_dim,
            })
        } else {
            Ok(())
        }
    }
}

/// Full weight system of an irreducible module, stored by dominant orbit
/// representatives to keep F4/E6-sized modules modest in memory.
#[derive(Debug, Clone)]
pub struct WeightSystem {
    system: Arc<RootSystem>,
    highest: Vec<i64>,
    dominant: BTreeMap<Vec<i64>, u64>,
}

impl WeightSystem {
    pub fn highest(&self) -> Weight {
        Weight::from_ints(&self.system, &self.highest).expect("stored coords are valid")
    }

    /// Multiplicity of an arbitrary weight (zero when outside the module).
    pub fn multiplicity(&self, w: &Weight) -> u64 {
        match w.int_coords() {
            Some(coords) => self.multiplicity_int(&coords),
            None => 0,
        }
    }

    pub(crate) fn multiplicity_int(&self, coords: &[i64]) -> u64 {
        let dom = self.system.dominant_representative(coords);
        self.dominant.get(&dom).copied().unwrap_or(0)
    }

    /// Dominant representatives with their multiplicities, in lexicographic
    /// coordinate order.
    pub fn dominant_multiplicities(&self) -> impl Iterator<Item = (Weight, u64)> + '_ {
        self.dominant
            .iter()
            .map(|(c, &m)| (Weight::from_ints(&self.system, c).expect("valid"), m))
    }

    /// Expands every Weyl orbit; the full saturated multiset of weights.
    pub fn expand(&self) -> Vec<(Weight, u64)> {
        self.expand_int()
            .into_iter()
            .map(|(c, m)| (Weight::from_ints(&self.system, &c).expect("valid"), m))
            .collect()
    }

    pub(crate) fn expand_int(&self) -> Vec<(Vec<i64>, u64)> {
        let mut out = Vec::new();
        for (dom, &m) in &self.dominant {
            for w in weyl_orbit(&self.system, dom) {
                out.push((w, m));
            }
        }
        out
    }

    /// Sum of all multiplicities; equals the Weyl dimension of the highest
    /// weight.
    pub fn total(&self) -> BigInt {
        let mut total = BigInt::zero();
        for (dom, &m) in &self.dominant {
            let orbit = weyl_orbit(&self.system, dom).len();
            total += BigInt::from(orbit as u64) * BigInt::from(m);
        }
        total
    }

    pub fn num_dominant(&self) -> usize {
        self.dominant.len()
    }
}

/// Direct-sum decomposition into irreducibles: dominant highest weight to
/// positive multiplicity, keys in lexicographic coordinate order.
#[derive(Debug, Clone)]
pub struct Decomposition {
    system: Arc<RootSystem>,
    terms: BTreeMap<Vec<i64>, u64>,
}

impl PartialEq for Decomposition {
    fn eq(&self, other: &Self) -> bool {
        self.system.lie_type() == other.system.lie_type() && self.terms == other.terms
    }
}

impl Eq for Decomposition {}

impl Decomposition {
    pub(crate) fn from_terms(system: Arc<RootSystem>, terms: BTreeMap<Vec<i64>, u64>) -> Self {
        debug_assert!(terms.values().all(|&m| m > 0));
        Decomposition { system, terms }
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        w.int_coords()
            .and_then(|c| self.terms.get(&c).copied())
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Weight, u64)> + '_ {
        self.terms
            .iter()
            .map(|(c, &m)| (Weight::from_ints(&self.system, c).expect("valid"), m))
    }

    pub(crate) fn iter_int(&self) -> impl Iterator<Item = (&Vec<i64>, u64)> + '_ {
        self.terms.iter().map(|(c, &m)| (c, m))
    }

    /// Total dimension of the decomposition.
    pub fn dimension(&self) -> BigInt {
        let mut total = BigInt::zero();
        for (c, &m) in &self.terms {
            total += self.system.weyl_dim_int(c) * BigInt::from(m);
        }
        total
    }

    /// Checks multiset equality against `(coords, multiplicity)` pairs.
    pub fn matches(&self, expected: &[(&[i64], u64)]) -> bool {
        if self.terms.len() != expected.len() {
            return false;
        }
        expected
            .iter()
            .all(|(c, m)| self.terms.get(*c).copied() == Some(*m))
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, &m) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m > 1 {
                write!(f, "{}*", m)?;
            }
            write!(f, "V{}", format_int_coords(c))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn dominant_int_coords(w: &Weight) -> Result<Vec<i64>> {
    if !w.is_dominant_integral() {
        return Err(Error::NonDominant {
            weight: w.to_string(),
        });
    }
    Ok(w.int_coords().expect("dominant implies integral"))
}

fn check_same_system(a: &Weight, b: &Weight) -> Result<()> {
    if a.system().lie_type() != b.system().lie_type() {
        return Err(Error::SystemMismatch {
            left: a.system().lie_type().to_string(),
            right: b.system().lie_type().to_string(),
        });
    }
    Ok(())
}

/// Weyl orbit of a dominant weight, by reflection closure.
pub(crate) fn weyl_orbit(rs: &RootSystem, dominant: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut frontier = vec![dominant.to_vec()];
    seen.insert(dominant.to_vec());
    while let Some(w) = frontier.pop() {
        for i in 0..rs.rank() {
            if w[i] != 0 {
                let r = rs.reflect_int(&w, i);
                if seen.insert(r.clone()) {
                    frontier.push(r);
                }
            }
        }
    }
    let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
    out.sort();
    out
}

/// All weights of `V(highest)` by string closure: from the top of each
/// alpha_i-string the whole string downwards belongs to the module.
fn saturated_weight_set(rs: &RootSystem, highest: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut frontier = vec![highest.to_vec()];
    seen.insert(highest.to_vec());
    while let Some(w) = frontier.pop() {
        for i in 0..rs.rank() {
            let pairing = w[i];
            if pairing > 0 {
                let mut cur = w.clone();
                for _ in 0..pairing {
                    for (j, c) in cur.iter_mut().enumerate() {
                        *c -= rs.cartan()[i][j];
                    }
                    if seen.insert(cur.clone()) {
                        frontier.push(cur.clone());
                    }
                }
            }
        }
    }
    let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
    out.sort();
    out
}

/// Height of `highest - w` in the root lattice; `None` if the difference is
/// not a nonnegative root-lattice element.
fn level_below(rs: &RootSystem, highest: &[i64], w: &[i64]) -> Option<i64> {
    let diff: Vec<i64> = highest.iter().zip(w).map(|(a, b)| a - b).collect();
    let mut height = BigRational::zero();
    for v in rs.root_coords_of(&diff) {
        if !v.is_integer() || v.is_negative() {
            return None;
        }
        height += v;
    }
    height.to_integer().to_i64()
}

/// Freudenthal recursion over the saturated weight set of `V(lambda)`.
pub fn weight_multiplicities(lambda: &Weight) -> Result<WeightSystem> {
    weight_multiplicities_with(lambda, Limits::default())
}

pub fn weight_multiplicities_with(lambda: &Weight, limits: Limits) -> Result<WeightSystem> {
    let rs = Arc::clone(lambda.system());
    let coords = dominant_int_coords(lambda)?;
    limits.check_dim(&rs.weyl_dim_int(&coords))?;
    Ok(freudenthal(&rs, &coords, limits.parallel))
}

fn freudenthal(rs: &Arc<RootSystem>, highest: &[i64], parallel: bool) -> WeightSystem {
    let all = saturated_weight_set(rs, highest);
    let member: HashSet<&[i64]> = all.iter().map(|w| w.as_slice()).collect();

    // Group dominant weights by depth below the highest weight; the
    // recursion at depth L only reads multiplicities at smaller depth.
    let mut by_level: BTreeMap<i64, Vec<&[i64]>> = BTreeMap::new();
    for w in &all {
        if w.iter().all(|&c| c >= 0) {
            let lvl = level_below(rs, highest, w).expect("weights lie below the highest weight");
            by_level.entry(lvl).or_default().push(w.as_slice());
        }
    }

    let rho: Vec<i64> = vec![1; rs.rank()];
    let top_shift: Vec<i64> = highest.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let (top_norm, den) = rs.inner_int_raw(&top_shift, &top_shift);

    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    mult.insert(highest.to_vec(), 1);

    for (lvl, group) in &by_level {
        if *lvl == 0 {
            continue;
        }
        // levels with a handful of dominant weights are not worth the
        // dispatch overhead
        let run_parallel = parallel && group.len() >= 4 && all.len() >= 2_000;
        let computed: Vec<(Vec<i64>, u64)> = exec::map_collect(
            run_parallel,
            group.clone(),
            |mu: &[i64]| {
                // numerator: 2 sum_{alpha>0} sum_{j>=1} m(mu + j alpha) (mu + j alpha, alpha)
                let mut num: i128 = 0;
                for alpha in rs.positive_roots_int() {
                    let mut j = 1i64;
                    loop {
                        let shifted: Vec<i64> = mu
                            .iter()
                            .zip(alpha)
                            .map(|(c, a)| c + j * a)
                            .collect();
                        if !member.contains(shifted.as_slice()) {
                            break;
                        }
                        let dom = rs.dominant_representative(&shifted);
                        let m = *mult.get(&dom).expect("higher weights already computed");
                        let (pair, _) = rs.inner_int_raw(&shifted, alpha);
                        num += (m as i128) * pair;
                        j += 1;
                    }
                }
                let mu_shift: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
                let (mu_norm, _) = rs.inner_int_raw(&mu_shift, &mu_shift);
                // denominators share the gram scale, so it cancels here
                let _ = den;
                let denom = top_norm - mu_norm;
                debug_assert!(denom > 0);
                let twice = 2 * num;
                debug_assert_eq!(twice % denom, 0, "Freudenthal multiplicity must be integral");
                let m = (twice / denom) as u64;
                (mu.to_vec(), m)
            },
        );
        for (mu, m) in computed {
            debug_assert!(m > 0, "weights of the saturated set have positive multiplicity");
            mult.insert(mu, m);
        }
    }

    let dominant: BTreeMap<Vec<i64>, u64> = mult.into_iter().collect();
    WeightSystem {
        system: Arc::clone(rs),
        highest: highest.to_vec(),
        dominant,
    }
}

/// Tensor product decomposition by the Klimyk (Racah-Speiser) formula,
/// iterating over the weight system of the smaller-dimensional factor.
pub fn tensor_decompose(a: &Weight, b: &Weight) -> Result<Decomposition> {
    tensor_decompose_with(a, b, Limits::default())
}

pub fn tensor_decompose_with(a: &Weight, b: &Weight, limits: Limits) -> Result<Decomposition> {
    check_same_system(a, b)?;
    let rs = Arc::clone(a.system());
    let ca = dominant_int_coords(a)?;
    let cb = dominant_int_coords(b)?;
    let da = rs.weyl_dim_int(&ca);
    let db = rs.weyl_dim_int(&cb);
    limits.check_dim(&da)?;
    limits.check_dim(&db)?;
    let (anchor, roam) = if db <= da { (ca, cb) } else { (cb, ca) };
    Ok(klimyk(&rs, &anchor, &roam, limits.parallel))
}

/// Work-size floor below which the rayon paths cost more than they save;
/// measured on the in-guard module sizes this crate targets.
const PAR_POINT_THRESHOLD: usize = 20_000;

fn klimyk(rs: &Arc<RootSystem>, anchor: &[i64], roam: &[i64], parallel: bool) -> Decomposition {
    let ws = freudenthal(rs, roam, parallel);
    let base: Vec<i64> = anchor.iter().map(|c| c + 1).collect(); // anchor + rho

    let mut points: Vec<(Vec<i64>, i64)> = Vec::new();
    for (dom, &m) in &ws.dominant {
        for p in weyl_orbit(rs, dom) {
            points.push((p, m as i64));
        }
    }
    let parallel = parallel && points.len() >= PAR_POINT_THRESHOLD;
    let merge = |mut x: BTreeMap<Vec<i64>, i64>, y: BTreeMap<Vec<i64>, i64>| {
        for (k, v) in y {
            *x.entry(k).or_insert(0) += v;
        }
        x
    };
    let acc = exec::fold_reduce(
        parallel,
        points,
        |mut local: BTreeMap<Vec<i64>, i64>, (point, m): (Vec<i64>, i64)| {
            let shifted: Vec<i64> = base.iter().zip(&point).map(|(a, b)| a + b).collect();
            let (dom_shift, sign) = rs.dominant_shifted_int(&shifted);
            if sign != 0 {
                let key: Vec<i64> = dom_shift.iter().map(|c| c - 1).collect();
                *local.entry(key).or_insert(0) += sign as i64 * m;
            }
            local
        },
        BTreeMap::new,
        merge,
    );

    let mut terms = BTreeMap::new();
    for (k, v) in acc {
        assert!(
            v >= 0,
            "Racah-Speiser contributions must cancel to nonnegative totals"
        );
        if v > 0 {
            terms.insert(k, v as u64);
        }
    }
    Decomposition::from_terms(Arc::clone(rs), terms)
}

/// Dynkin index of the representation: `dim V(lambda) (lambda, lambda+2rho) / (2 dim g)`.
pub fn dynkin_index_rep(lambda: &Weight) -> Result<BigRational> {
    let rs = lambda.system();
    let coords = dominant_int_coords(lambda)?;
    let dim = BigRational::from(rs.weyl_dim_int(&coords));
    let cas = rs.casimir_int(&coords);
    let denom = BigRational::from_u64(2 * rs.dimension()).unwrap();
    Ok(dim * cas / denom)
}

#[doc(hidden)]
pub mod bench_hooks {
    //! Entry points with an explicit sequential/parallel switch, for the
    //! benchmark suite only.
    use super::*;

    pub fn weight_multiplicities_mode(lambda: &Weight, parallel: bool) -> WeightSystem {
        let coords = lambda.int_coords().expect("dominant integral");
        freudenthal(lambda.system(), &coords, parallel)
    }

    pub fn tensor_decompose_mode(a: &Weight, b: &Weight, parallel: bool) -> Decomposition {
        let ca = a.int_coords().expect("dominant integral");
        let cb = b.int_coords().expect("dominant integral");
        klimyk(a.system(), &ca, &cb, parallel)
    }
}

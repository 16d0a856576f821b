//! Shared helpers for the integration suites: an independent tensor-product
//! oracle built on plain character algebra, and dominant-weight enumeration.

#![allow(dead_code)]

use num::{BigInt, BigRational, One};
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;
use std::sync::Arc;

use sugawara::rep::{weight_multiplicities_with, Limits};
use sugawara::{RootSystem, Weight};

/// Brute-force tensor decomposition oracle: convolve the two full weight
/// multisets on a dense coordinate grid, then repeatedly peel the character
/// of the highest remaining weight.  Uses only weight systems and the
/// rho-pairing functional, never the reflection-based product path it is
/// checked against.  Caches irreducible-character expansions across calls.
pub struct CharacterOracle {
    rs: Arc<RootSystem>,
    /// Integer-scaled coefficients of the linear functional `(., rho)`.
    rho_coeffs: Vec<i64>,
    expansions: HashMap<Vec<i64>, Rc<Vec<(Vec<i64>, i64)>>>,
}

impl CharacterOracle {
    pub fn new(rs: &Arc<RootSystem>) -> Self {
        let rho = Weight::rho(rs);
        let vals: Vec<BigRational> = (0..rs.rank())
            .map(|i| {
                Weight::fundamental(rs, i)
                    .inner_product(&rho)
                    .expect("same system")
            })
            .collect();
        let mut den = BigInt::one();
        for v in &vals {
            den = num::integer::lcm(den, v.denom().clone());
        }
        let rho_coeffs: Vec<i64> = vals
            .iter()
            .map(|v| {
                let scaled = v.numer() * &den / v.denom();
                i64::try_from(scaled).expect("small pairing coefficients")
            })
            .collect();
        CharacterOracle {
            rs: Arc::clone(rs),
            rho_coeffs,
            expansions: HashMap::new(),
        }
    }

    fn expansion(&mut self, coords: &[i64]) -> Rc<Vec<(Vec<i64>, i64)>> {
        if let Some(e) = self.expansions.get(coords) {
            return Rc::clone(e);
        }
        let w = Weight::from_ints(&self.rs, coords).expect("valid coords");
        let points: Vec<(Vec<i64>, i64)> = weight_multiplicities_with(&w, Limits::default())
            .expect("oracle inputs fit the guard")
            .expand()
            .into_iter()
            .map(|(w, m)| (w.int_coords().expect("integral"), m as i64))
            .collect();
        let rc = Rc::new(points);
        self.expansions.insert(coords.to_vec(), Rc::clone(&rc));
        rc
    }

    fn pairing(&self, coords: &[i64]) -> i64 {
        coords
            .iter()
            .zip(&self.rho_coeffs)
            .map(|(c, r)| c * r)
            .sum()
    }

    pub fn tensor(&mut self, a: &Weight, b: &Weight) -> BTreeMap<Vec<i64>, u64> {
        let rank = self.rs.rank();
        let ca = a.int_coords().expect("dominant integral");
        let cb = b.int_coords().expect("dominant integral");
        let ea = self.expansion(&ca);
        let eb = self.expansion(&cb);

        // bounding box of the summed supports
        let mut lo = vec![i64::MAX; rank];
        let mut hi = vec![i64::MIN; rank];
        for d in 0..rank {
            let (mut la, mut ha) = (i64::MAX, i64::MIN);
            for (p, _) in ea.iter() {
                la = la.min(p[d]);
                ha = ha.max(p[d]);
            }
            let (mut lb, mut hb) = (i64::MAX, i64::MIN);
            for (p, _) in eb.iter() {
                lb = lb.min(p[d]);
                hb = hb.max(p[d]);
            }
            lo[d] = la + lb;
            hi[d] = ha + hb;
        }
        let widths: Vec<i64> = (0..rank).map(|d| hi[d] - lo[d] + 1).collect();
        let mut strides = vec![1i64; rank];
        for d in (0..rank.saturating_sub(1)).rev() {
            strides[d] = strides[d + 1] * widths[d + 1];
        }
        let cells = (strides[0] * widths[0]) as usize;
        assert!(cells <= 4_000_000, "oracle grid too large");
        let index = |coords: &[i64]| -> usize {
            let mut idx = 0i64;
            for d in 0..rank {
                idx += (coords[d] - lo[d]) * strides[d];
            }
            idx as usize
        };
        let coords_of = |mut idx: usize| -> Vec<i64> {
            let mut out = vec![0i64; rank];
            for d in 0..rank {
                out[d] = lo[d] + (idx as i64) / strides[d];
                idx %= strides[d] as usize;
            }
            out
        };

        // dense convolution of the two multisets
        let mut grid = vec![0i64; cells];
        let mut sum = vec![0i64; rank];
        for (pa, ma) in ea.iter() {
            for (pb, mb) in eb.iter() {
                for d in 0..rank {
                    sum[d] = pa[d] + pb[d];
                }
                grid[index(&sum)] += ma * mb;
            }
        }

        // visit cells in descending rho-pairing order; each nonzero cell in
        // that order is a maximal weight of the remaining character
        let mut order: Vec<u32> = (0..cells as u32).collect();
        let keys: Vec<i64> = (0..cells).map(|i| self.pairing(&coords_of(i))).collect();
        order.sort_by_key(|&i| (-keys[i as usize], i));

        let mut result = BTreeMap::new();
        for cell in order {
            let mult = grid[cell as usize];
            if mult == 0 {
                continue;
            }
            assert!(mult > 0, "character went negative");
            let top = coords_of(cell as usize);
            assert!(
                top.iter().all(|&c| c >= 0),
                "maximal weight {:?} must be dominant",
                top
            );
            let expansion = self.expansion(&top);
            for (p, m) in expansion.iter() {
                let e = &mut grid[index(p)];
                *e -= m * mult;
                assert!(*e >= 0, "peel went negative");
            }
            result.insert(top, mult as u64);
        }
        assert!(grid.iter().all(|&v| v == 0));
        result
    }
}

/// One-shot oracle call (fresh cache).
pub fn tensor_by_characters(a: &Weight, b: &Weight) -> BTreeMap<Vec<i64>, u64> {
    CharacterOracle::new(a.system()).tensor(a, b)
}

/// All dominant integral weights of `rs` whose irreducible module has
/// dimension at most `max_dim`, in lexicographic coordinate order.  Prunes
/// on the fact that the Weyl dimension grows in every coordinate.
pub fn dominant_weights_up_to(rs: &Arc<RootSystem>, max_dim: u64) -> Vec<Weight> {
    let rank = rs.rank();
    let bound = BigInt::from(max_dim);
    let fits = |coords: &[i64]| -> bool {
        Weight::from_ints(rs, coords)
            .expect("valid coords")
            .weyl_dim()
            .expect("dominant")
            <= bound
    };
    let mut out = Vec::new();
    let mut stack = vec![(vec![0i64; rank], 0usize)];
    while let Some((coords, pos)) = stack.pop() {
        if pos == rank {
            out.push(coords);
            continue;
        }
        let mut c = 0i64;
        loop {
            let mut next = coords.clone();
            next[pos] = c;
            if !fits(&next) {
                break;
            }
            stack.push((next, pos + 1));
            c += 1;
        }
    }
    out.sort();
    out.into_iter()
        .map(|c| Weight::from_ints(rs, &c).expect("valid coords"))
        .collect()
}

//! Affine-level arithmetic: Sugawara central charges, lowest conformal
//! weights, the graded-component eigenvalue of the subalgebra Virasoro
//! operator, and the solver for conformal levels.
//!
//! The solver clears denominators of the eigenvalue condition into integer
//! polynomials and enumerates rational roots exactly; irrational roots are
//! discarded and reported in the diagnostics so nothing is silently lost.

use num::{BigInt, BigRational, FromPrimitive, One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

use crate::embed::{BranchingComponent, EmbeddingSpec, FactorKind};
use crate::error::{Error, Result};
use crate::lie::{LieType, RootSystem, Weight};

/// One conformal level certified by the solver.
#[derive(Debug, Clone)]
pub struct LevelSolution {
    /// Ambient level `k`.
    pub k: BigRational,
    /// Factor levels `k_i = a_i k`, one per subalgebra factor.
    pub factor_levels: Vec<BigRational>,
    /// Exact eigenvalue of the subalgebra Virasoro zero mode on each
    /// component top; every entry equals 1.
    pub eigenvalue_witnesses: Vec<BigRational>,
    /// Subalgebra side of the central-charge identity.
    pub central_charge_lhs: BigRational,
    /// Ambient side of the central-charge identity.
    pub central_charge_rhs: BigRational,
}

/// Solver output: solutions in ascending order of `k`, plus diagnostics for
/// every excluded pole and every discarded nonrational root.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub solutions: Vec<LevelSolution>,
    pub diagnostics: Vec<String>,
}

/// Sugawara central charge `k dim g / (k + h-check)` for the given type.
pub fn sugawara_central_charge(t: LieType, k: &BigRational) -> Result<BigRational> {
    RootSystem::build(t)?.sugawara_central_charge(k)
}

/// Lowest conformal weight `(mu, mu + 2 rho_0)_0 / (2 (k' + h0))` of the
/// highest-weight module labeled `(k', mu)`.
pub fn lowest_conformal_weight(mu: &Weight, k_prime: &BigRational) -> Result<BigRational> {
    let rs = mu.system();
    let h = BigRational::from_u64(rs.dual_coxeter()).unwrap();
    if k_prime + h.clone() == BigRational::zero() {
        return Err(Error::CriticalLevel {
            algebra: rs.lie_type().to_string(),
            level: k_prime.to_string(),
            h_dual: rs.dual_coxeter(),
        });
    }
    let cas = mu.casimir()?;
    let two = BigRational::from_u64(2).unwrap();
    Ok(cas / (two * (k_prime + h)))
}

/// Poles of the component eigenvalue at level `k`: factor critical levels,
/// and `k = 0` whenever a center charge is present.
fn eigenvalue_pole(
    spec: &EmbeddingSpec,
    component: &BranchingComponent,
    k: &BigRational,
) -> Option<String> {
    for (fi, rs, index) in spec.simple_factors() {
        let _ = fi;
        let h = BigRational::from_u64(rs.dual_coxeter()).unwrap();
        if index * k + h == BigRational::zero() {
            return Some(format!(
                "k = {} makes factor {} critical (a k = -{})",
                k,
                rs.lie_type(),
                rs.dual_coxeter()
            ));
        }
    }
    if !component.center_norm.is_zero() && k.is_zero() {
        return Some("k = 0 with a nonzero center charge".to_string());
    }
    None
}

/// Eigenvalue of the subalgebra Virasoro zero mode on the top of one
/// branching component at ambient level `k`:
/// `sum_i (mu_i, mu_i + 2 rho_i)_i / (2 (a_i k + h_i)) + (gamma, gamma) / (2k)`.
pub fn l0_eigenvalue(
    spec: &EmbeddingSpec,
    component: &BranchingComponent,
    k: &BigRational,
) -> Result<BigRational> {
    if let Some(description) = eigenvalue_pole(spec, component, k) {
        return Err(Error::Pole { description });
    }
    let two = BigRational::from_u64(2).unwrap();
    let mut acc = BigRational::zero();
    for (fi, rs, index) in spec.simple_factors() {
        let slot = spec.weight_slot(fi);
        let mu = &component.factor_weights[slot];
        let cas = mu.casimir()?;
        let h = BigRational::from_u64(rs.dual_coxeter()).unwrap();
        acc += cas / (two.clone() * (index * k + h));
    }
    if !component.center_norm.is_zero() {
        acc += &component.center_norm / (two * k);
    }
    Ok(acc)
}

/// Central-charge identity at level `k`: returns `(lhs, rhs, equal)` with
/// `lhs = dim(center) + sum_i k_i dim(g_i) / (k_i + h_i)` and
/// `rhs = k dim g / (k + h)`.
pub fn central_charge_check(
    spec: &EmbeddingSpec,
    k: &BigRational,
) -> Result<(BigRational, BigRational, bool)> {
    let rhs = spec.ambient.sugawara_central_charge(k)?;
    let mut lhs = BigRational::from_u64(spec.abelian_dim() as u64).unwrap();
    for factor in &spec.factors {
        if let FactorKind::Simple(rs) = &factor.kind {
            let ki = &factor.index * k;
            lhs += rs.sugawara_central_charge(&ki)?;
        }
    }
    let equal = lhs == rhs;
    Ok((lhs, rhs, equal))
}

/// Dense univariate polynomial over the rationals, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Poly(Vec<BigRational>);

impl Poly {
    fn constant(c: BigRational) -> Self {
        Poly(vec![c])
    }

    /// `a + b k`
    fn linear(a: BigRational, b: BigRational) -> Self {
        Poly(vec![a, b])
    }

    fn trim(mut self) -> Self {
        while self.0.len() > 1 && self.0.last().map(|c| c.is_zero()) == Some(true) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        Poly(out).trim()
    }

    fn sub(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] -= c;
        }
        Poly(out).trim()
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out).trim()
    }

    /// Integer coefficients after clearing denominators and stripping the
    /// content.
    fn to_integer_coeffs(&self) -> Vec<BigInt> {
        let mut den = BigInt::one();
        for c in &self.0 {
            den = num::integer::lcm(den, c.denom().clone());
        }
        let mut ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| c.numer() * &den / c.denom())
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = num::integer::gcd(content, c.clone());
        }
        if !content.is_zero() && !content.is_one() {
            for c in &mut ints {
                *c /= &content;
            }
        }
        ints
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let nu = n
        .to_u128()
        .expect("root-candidate coefficients stay far below u128");
    let mut out = Vec::new();
    let mut d: u128 = 1;
    while d * d <= nu {
        if nu % d == 0 {
            out.push(BigInt::from(d));
            out.push(BigInt::from(nu / d));
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// All rational roots of an integer polynomial, plus the degree of the
/// residual factor with no rational roots.
fn rational_roots(coeffs: &[BigInt]) -> (BTreeSet<BigRational>, usize) {
    let mut roots = BTreeSet::new();
    let mut work: Vec<BigRational> = coeffs.iter().map(|c| BigRational::from(c.clone())).collect();

    // strip k^m
    while work.len() > 1 && work[0].is_zero() {
        work.remove(0);
        roots.insert(BigRational::zero());
    }
    loop {
        if work.len() <= 1 {
            break;
        }
        let a0 = work[0].numer().clone();
        let alead = work.last().unwrap().numer().clone();
        if a0.is_zero() {
            work.remove(0);
            roots.insert(BigRational::zero());
            continue;
        }
        let mut found = None;
        'search: for p in divisors(&a0) {
            for q in divisors(&alead) {
                for sign in [1i64, -1] {
                    let cand = BigRational::new(p.clone() * BigInt::from(sign), q.clone());
                    let mut val = BigRational::zero();
                    for c in work.iter().rev() {
                        val = val * cand.clone() + c;
                    }
                    if val.is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some(root) => {
                roots.insert(root.clone());
                // synthetic division by (k - root)
                let mut quotient = vec![BigRational::zero(); work.len() - 1];
                let mut carry = BigRational::zero();
                for i in (0..work.len()).rev() {
                    let v = &work[i] + &carry;
                    if i == 0 {
                        debug_assert!(v.is_zero());
                    } else {
                        quotient[i - 1] = v.clone();
                        carry = v * root.clone();
                    }
                }
                work = quotient;
            }
            None => break,
        }
    }
    let residual_degree = work.len() - 1;
    (roots, residual_degree)
}

/// Polynomial form of `l0_eigenvalue(component, k) - 1` after clearing all
/// denominators.
fn component_polynomial(spec: &EmbeddingSpec, component: &BranchingComponent) -> Poly {
    let two = BigRational::from_u64(2).unwrap();
    // denominators D_i(k) = 2 (a_i k + h_i) and, with a center, D_c(k) = 2k
    let mut dens: Vec<Poly> = Vec::new();
    let mut numerators: Vec<BigRational> = Vec::new();
    for (fi, rs, index) in spec.simple_factors() {
        let slot = spec.weight_slot(fi);
        let mu = &component.factor_weights[slot];
        numerators.push(mu.casimir().expect("validated component weight"));
        let h = BigRational::from_u64(rs.dual_coxeter()).unwrap();
        dens.push(Poly::linear(two.clone() * h, two.clone() * index));
    }
    if !component.center_norm.is_zero() {
        numerators.push(component.center_norm.clone());
        dens.push(Poly::linear(BigRational::zero(), two));
    }
    // sum_i n_i prod_{j != i} D_j - prod_j D_j = 0
    let mut total = Poly::constant(BigRational::zero());
    for i in 0..dens.len() {
        let mut term = Poly::constant(numerators[i].clone());
        for (j, d) in dens.iter().enumerate() {
            if j != i {
                term = term.mul(d);
            }
        }
        total = total.add(&term);
    }
    let mut full = Poly::constant(BigRational::one());
    for d in &dens {
        full = full.mul(d);
    }
    total.sub(&full)
}

/// Solves for every rational `k` with eigenvalue exactly 1 on all
/// components simultaneously, excluding poles and the ambient critical
/// level.
pub fn solve_conformal_levels(spec: &EmbeddingSpec) -> Result<SolveOutcome> {
    if spec.components.is_empty() {
        return Err(Error::EmptySpec {
            name: spec.name.clone(),
        });
    }
    let mut diagnostics = Vec::new();

    // unique cleared polynomials across components
    let mut unique: Vec<Vec<BigInt>> = Vec::new();
    for c in &spec.components {
        let poly = component_polynomial(spec, c);
        if poly.is_zero() {
            return Err(Error::Validation {
                check: "eigenvalue-polynomial".into(),
                detail: "component eigenvalue is identically 1, which cannot happen for \
                         a finite component"
                    .into(),
            });
        }
        let ints = poly.to_integer_coeffs();
        if !unique.contains(&ints) {
            unique.push(ints);
        }
    }

    let mut candidate_sets: Vec<BTreeSet<BigRational>> = Vec::new();
    for ints in &unique {
        let (roots, residual) = rational_roots(ints);
        if residual > 0 {
            let coeffs: Vec<String> = ints.iter().map(|c| c.to_string()).collect();
            diagnostics.push(format!(
                "discarded nonrational roots: residual factor of degree {} from coefficients [{}]",
                residual,
                coeffs.join(",")
            ));
        }
        candidate_sets.push(roots);
    }
    let mut candidates = candidate_sets[0].clone();
    for set in &candidate_sets[1..] {
        candidates = candidates.intersection(set).cloned().collect();
    }

    let h_ambient = BigRational::from_u64(spec.ambient.dual_coxeter()).unwrap();
    let mut solutions = Vec::new();
    'cands: for k in candidates {
        if k.clone() + h_ambient.clone() == BigRational::zero() {
            diagnostics.push(format!(
                "excluded k = {}: critical level of the ambient {}",
                k,
                spec.ambient.lie_type()
            ));
            continue;
        }
        let mut witnesses = Vec::new();
        for c in &spec.components {
            match l0_eigenvalue(spec, c, &k) {
                Ok(v) => {
                    if !v.is_one() {
                        // cleared polynomial picked up a spurious root at a
                        // cancelled pole; drop it
                        continue 'cands;
                    }
                    witnesses.push(v);
                }
                Err(Error::Pole { description }) => {
                    diagnostics.push(format!("excluded k = {}: {}", k, description));
                    continue 'cands;
                }
                Err(e) => return Err(e),
            }
        }
        let (lhs, rhs, _) = central_charge_check(spec, &k)?;
        let factor_levels: Vec<BigRational> =
            spec.factors.iter().map(|f| &f.index * &k).collect();
        solutions.push(LevelSolution {
            k,
            factor_levels,
            eigenvalue_witnesses: witnesses,
            central_charge_lhs: lhs,
            central_charge_rhs: rhs,
        });
    }
    solutions.sort_by(|a, b| a.k.cmp(&b.k));
    Ok(SolveOutcome {
        solutions,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::lie::LieFamily;
    use std::sync::Arc;

    fn rat(s: &str) -> BigRational {
        s.parse().unwrap()
    }

    fn ks(outcome: &SolveOutcome) -> Vec<String> {
        outcome.solutions.iter().map(|s| s.k.to_string()).collect()
    }

    #[test]
    fn central_charge_by_type() {
        let t = LieType::new(LieFamily::G, 2).unwrap();
        assert_eq!(sugawara_central_charge(t, &rat("-2")).unwrap(), rat("-14"));
    }

    #[test]
    fn lowest_conformal_weight_examples() {
        let a2 = RootSystem::build(LieType::parse("A2").unwrap()).unwrap();
        let two_w1 = Weight::fundamental(&a2, 0).scale(2);
        assert_eq!(
            lowest_conformal_weight(&two_w1, &rat("-5/3")).unwrap(),
            rat("5/2")
        );
        assert_eq!(
            lowest_conformal_weight(&Weight::zero(&a2), &rat("7")).unwrap(),
            BigRational::zero()
        );
        let f4 = RootSystem::build(LieType::parse("F4").unwrap()).unwrap();
        let w3 = Weight::fundamental(&f4, 2);
        assert_eq!(lowest_conformal_weight(&w3, &rat("-3")).unwrap(), rat("2"));
        let g2 = RootSystem::build(LieType::parse("G2").unwrap()).unwrap();
        let w12 = Weight::from_ints(&g2, &[1, 1]).unwrap();
        assert_eq!(
            lowest_conformal_weight(&w12, &rat("-2")).unwrap(),
            rat("7/2")
        );
        assert!(matches!(
            lowest_conformal_weight(&w12, &rat("-4")),
            Err(Error::CriticalLevel { .. })
        ));
    }

    #[test]
    fn eigenvalue_examples() {
        let f4e6 = catalog::build("f4-in-e6", None).unwrap();
        assert_eq!(
            l0_eigenvalue(&f4e6, &f4e6.components[0], &rat("-3")).unwrap(),
            BigRational::one()
        );
        let a2g2 = catalog::build("a2-in-g2", None).unwrap();
        assert_eq!(
            l0_eigenvalue(&a2g2, &a2g2.components[0], &rat("-5/3")).unwrap(),
            BigRational::one()
        );
        let glsp = catalog::build("gl-in-sp", Some(3)).unwrap();
        assert_eq!(
            l0_eigenvalue(&glsp, &glsp.components[0], &rat("1")).unwrap(),
            BigRational::one()
        );
        assert_eq!(
            l0_eigenvalue(&glsp, &glsp.components[0], &rat("-1/2")).unwrap(),
            BigRational::one()
        );
        assert!(matches!(
            l0_eigenvalue(&glsp, &glsp.components[0], &BigRational::zero()),
            Err(Error::Pole { .. })
        ));
    }

    #[test]
    fn solver_table_rows() {
        let a2g2 = catalog::build("a2-in-g2", None).unwrap();
        let out = solve_conformal_levels(&a2g2).unwrap();
        assert_eq!(ks(&out), vec!["-5/3"]);
        assert_eq!(out.solutions[0].factor_levels[0], rat("-5/3"));

        let dlbl5 = catalog::build("dl-in-bl", Some(5)).unwrap();
        assert_eq!(ks(&solve_conformal_levels(&dlbl5).unwrap()), vec!["-7/2"]);

        let glsp3 = catalog::build("gl-in-sp", Some(3)).unwrap();
        assert_eq!(
            ks(&solve_conformal_levels(&glsp3).unwrap()),
            vec!["-1/2", "1"]
        );

        let cartan = catalog::build("cartan-in-a2", None).unwrap();
        assert_eq!(ks(&solve_conformal_levels(&cartan).unwrap()), vec!["1"]);
    }

    #[test]
    fn closed_form_for_equal_casimir_simple_subalgebra() {
        // k = (C0/2 - h0) / a
        for (name, rank) in [
            ("a2-in-g2", None),
            ("f4-in-e6", None),
            ("g2-in-d4", None),
            ("cl-in-a2l-1", Some(5)),
            ("bl1-in-dl", Some(6)),
            ("dl-in-bl", Some(7)),
            ("bl-in-a2l", Some(3)),
            ("a1-in-a2", None),
            ("g2-in-b3", None),
        ] {
            let spec = catalog::build(name, rank).unwrap();
            let (rs, a) = spec.single_simple_factor().unwrap();
            let c0 = spec.components[0].factor_weights[0].casimir().unwrap();
            let h0 = BigRational::from_u64(rs.dual_coxeter()).unwrap();
            let expect = (c0 / rat("2") - h0) / a.clone();
            let out = solve_conformal_levels(&spec).unwrap();
            assert_eq!(out.solutions.len(), 1, "{}", name);
            assert_eq!(out.solutions[0].k, expect, "{}", name);
        }
    }

    #[test]
    fn central_charge_identity_examples() {
        let g2d4 = catalog::build("g2-in-d4", None).unwrap();
        let (lhs, rhs, eq) = central_charge_check(&g2d4, &rat("-2")).unwrap();
        assert!(eq);
        assert_eq!(lhs, rat("-14"));
        assert_eq!(rhs, rat("-14"));

        let f4e6 = catalog::build("f4-in-e6", None).unwrap();
        let (lhs, rhs, eq) = central_charge_check(&f4e6, &rat("-3")).unwrap();
        assert!(eq);
        assert_eq!(lhs, rat("-26"));
        assert_eq!(rhs, rat("-26"));

        let (lhs, rhs, eq) = central_charge_check(&f4e6, &rat("1")).unwrap();
        assert!(!eq);
        assert_eq!(lhs, rat("26/5"));
        assert_eq!(rhs, rat("6"));
    }

    #[test]
    fn empty_spec_is_a_usage_error() {
        let mut spec = catalog::build("f4-in-e6", None).unwrap();
        spec.components.clear();
        spec.refresh_adjoint_branching();
        assert!(matches!(
            solve_conformal_levels(&spec),
            Err(Error::EmptySpec { .. })
        ));
    }

    #[test]
    fn solver_ignores_component_dims() {
        // the eigenvalue condition never reads the stored dimension
        let mut spec = catalog::build("a2-in-g2", None).unwrap();
        let before = ks(&solve_conformal_levels(&spec).unwrap());
        spec.components[0].dim = 999;
        let after = ks(&solve_conformal_levels(&spec).unwrap());
        assert_eq!(before, after);
    }

    #[test]
    fn witnesses_are_exactly_one() {
        for spec in catalog::catalog() {
            let out = solve_conformal_levels(&spec).unwrap();
            for sol in &out.solutions {
                assert!(
                    sol.eigenvalue_witnesses.iter().all(|w| w.is_one()),
                    "{} at k = {}",
                    spec.display_name(),
                    sol.k
                );
                assert_eq!(
                    sol.central_charge_lhs,
                    sol.central_charge_rhs,
                    "{} at k = {}",
                    spec.display_name(),
                    sol.k
                );
            }
        }
    }

    #[test]
    fn rational_root_enumeration() {
        // 2k^2 - k - 1 = (2k + 1)(k - 1)
        let coeffs: Vec<BigInt> = [-1i64, -1, 2].iter().map(|&c| BigInt::from(c)).collect();
        let (roots, residual) = rational_roots(&coeffs);
        assert_eq!(residual, 0);
        let got: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
        assert_eq!(got, vec!["-1/2", "1"]);

        // k^2 - 2 has no rational roots
        let coeffs: Vec<BigInt> = [-2i64, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        let (roots, residual) = rational_roots(&coeffs);
        assert!(roots.is_empty());
        assert_eq!(residual, 2);
    }

    #[test]
    fn arc_sanity() {
        let spec = catalog::build("a2-in-g2", None).unwrap();
        let (rs, _) = spec.single_simple_factor().unwrap();
        let _: &Arc<RootSystem> = rs;
    }
}

//! Root systems of the simple complex Lie algebras, in exact rational
//! arithmetic.
//!
//! Conventions (Bourbaki numbering of simple roots and fundamental weights):
//!
//! * `A_n` (n >= 1): chain `1 - 2 - ... - n`.
//! * `B_n` (n >= 2): `1 - ... - (n-1) => n`, node `n` short.
//! * `C_n` (n >= 2): `1 - ... - (n-1) <= n`, node `n` long.
//! * `D_n` (n >= 4): chain `1 - ... - (n-2)` forking into `n-1` and `n`.
//! * `E_n` (n in 6..8): chain `1 - 3 - 4 - 5 - 6 [- 7 [- 8]]` with node `2`
//!   attached to node `4`.
//! * `F_4`: `1 - 2 => 3 - 4`, nodes 3 and 4 short.
//! * `G_2`: node 1 short, node 2 long.  The adjoint representation is
//!   `V(w2)` and the 7-dimensional representation is `V(w1)`.
//!
//! The invariant bilinear form is normalized so that `(theta, theta) = 2`
//! for the highest root `theta`.  Weights are stored in fundamental-weight
//! coordinates; a root expressed in that basis is the corresponding row of
//! the Cartan matrix.

use num::{bigint::Sign, BigInt, BigRational, FromPrimitive, One, Signed, ToPrimitive, Zero};
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The seven families of simple Lie algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl LieFamily {
    pub fn letter(self) -> char {
        match self {
            LieFamily::A => 'A',
            LieFamily::B => 'B',
            LieFamily::C => 'C',
            LieFamily::D => 'D',
            LieFamily::E => 'E',
            LieFamily::F => 'F',
            LieFamily::G => 'G',
        }
    }

    fn rank_requirement(self) -> &'static str {
        match self {
            LieFamily::A => "rank >= 1",
            LieFamily::B => "rank >= 2",
            LieFamily::C => "rank >= 2",
            LieFamily::D => "rank >= 4",
            LieFamily::E => "rank in {6, 7, 8}",
            LieFamily::F => "rank = 4",
            LieFamily::G => "rank = 2",
        }
    }

    fn rank_ok(self, rank: usize) -> bool {
        match self {
            LieFamily::A => rank >= 1,
            LieFamily::B => rank >= 2,
            LieFamily::C => rank >= 2,
            LieFamily::D => rank >= 4,
            LieFamily::E => (6..=8).contains(&rank),
            LieFamily::F => rank == 4,
            LieFamily::G => rank == 2,
        }
    }
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simple Lie algebra identified by family and rank, e.g. `E6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LieType {
    pub family: LieFamily,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: LieFamily, rank: usize) -> Result<Self> {
        if family.rank_ok(rank) {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
                requirement: family.rank_requirement(),
            })
        }
    }

    /// Parses strings such as `"G2"`, `"D5"`, `"a3"`.
    pub fn parse(input: &str) -> Result<Self> {
        let s = input.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => LieFamily::A,
            Some('B') => LieFamily::B,
            Some('C') => LieFamily::C,
            Some('D') => LieFamily::D,
            Some('E') => LieFamily::E,
            Some('F') => LieFamily::F,
            Some('G') => LieFamily::G,
            _ => {
                return Err(Error::ParseLieType {
                    input: input.to_string(),
                })
            }
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::ParseLieType {
                input: input.to_string(),
            })?;
        LieType::new(family, rank)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Immutable combinatorial data of a simple Lie algebra.
///
/// Positive roots are generated once at construction and cached; the Gram
/// matrix of fundamental weights is rescaled so that `(theta, theta) = 2`.
#[derive(Debug)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<BigRational>>,
    symmetrizers: Vec<BigRational>,
    gram: Vec<Vec<BigRational>>,
    /// `gram[i][j] = gram_num[i][j] / gram_den`, for the fast integer path.
    gram_num: Vec<Vec<i128>>,
    gram_den: i128,
    /// Positive roots in fundamental-weight coordinates.
    positive_roots: Vec<Vec<i64>>,
    theta: Vec<i64>,
    dual_coxeter: u64,
    dimension: u64,
}

impl RootSystem {
    /// Builds the full root system for `t`.
    pub fn build(t: LieType) -> Result<Arc<RootSystem>> {
        // `LieType` can only be constructed through the validating paths,
        // so the rank bounds hold here.
        let n = t.rank;
        let cartan = cartan_matrix(t);

        // Symmetrizers up to overall scale: d_i * C_ji = d_j * C_ij makes
        // B = C * diag(d) the Gram matrix of simple roots.
        let mut sym: Vec<Option<BigRational>> = vec![None; n];
        sym[0] = Some(BigRational::one());
        let mut stack = vec![0usize];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if cartan[i][j] != 0 && i != j && sym[j].is_none() {
                    // d_j / d_i = C_ji / C_ij
                    let ratio = BigRational::new(BigInt::from(cartan[j][i]), BigInt::from(cartan[i][j]));
                    sym[j] = Some(sym[i].clone().unwrap() * ratio);
                    stack.push(j);
                }
            }
        }
        let mut symmetrizers: Vec<BigRational> =
            sym.into_iter().map(|d| d.expect("connected diagram")).collect();

        // Positive roots by string closure, in simple-root coordinates.
        let root_coords = generate_positive_roots(&cartan);
        let theta_coords = root_coords
            .iter()
            .max_by_key(|c| c.iter().sum::<i64>())
            .expect("nonempty root system")
            .clone();

        // Rescale symmetrizers so the highest root has squared length 2.
        let theta_norm = root_norm(&cartan, &symmetrizers, &theta_coords);
        let scale = BigRational::from_i64(2).unwrap() / theta_norm;
        for d in &mut symmetrizers {
            *d *= scale.clone();
        }

        // Gram matrix of fundamental weights: G = diag(d) * (C^T)^{-1},
        // i.e. G[i][j] = d_i * (C^{-1})[j][i].
        let cinv = invert(&cartan)?;
        let mut gram = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                gram[i][j] = symmetrizers[i].clone() * cinv[j][i].clone();
            }
        }
        for i in 0..n {
            for j in 0..i {
                debug_assert_eq!(gram[i][j], gram[j][i], "gram must be symmetric");
            }
        }

        // Integer form of the Gram matrix over a common denominator.
        let mut den = BigInt::one();
        for row in &gram {
            for g in row {
                den = num::integer::lcm(den, g.denom().clone());
            }
        }
        let gram_den = den.to_i128().expect("small denominator");
        let gram_num: Vec<Vec<i128>> = gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|g| {
                        (g.numer() * &den / g.denom())
                            .to_i128()
                            .expect("small numerator")
                    })
                    .collect()
            })
            .collect();

        // Fundamental coordinates of each positive root: f = C^T c.
        let to_fundamental = |c: &[i64]| -> Vec<i64> {
            (0..n)
                .map(|i| (0..n).map(|m| c[m] * cartan[m][i]).sum())
                .collect()
        };
        let positive_roots: Vec<Vec<i64>> = root_coords.iter().map(|c| to_fundamental(c)).collect();
        let theta = to_fundamental(&theta_coords);

        let dimension = (n + 2 * positive_roots.len()) as u64;

        let mut rs = RootSystem {
            lie_type: t,
            cartan,
            cartan_inv: cinv,
            symmetrizers,
            gram,
            gram_num,
            gram_den,
            positive_roots,
            theta,
            dual_coxeter: 0,
            dimension,
        };

        // h-check = 1 + (theta, rho); exact integrality is a consistency check
        // on the whole construction.
        let rho: Vec<i64> = vec![1; n];
        let tr = rs.inner_int(&rs.theta, &rho);
        let hdual = BigRational::one() + tr;
        debug_assert!(hdual.is_integer());
        rs.dual_coxeter = hdual.to_integer().to_u64().expect("small dual Coxeter");

        debug_assert_eq!(
            rs.inner_int(&rs.theta, &rs.theta),
            BigRational::from_i64(2).unwrap()
        );

        Ok(Arc::new(rs))
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[BigRational] {
        &self.symmetrizers
    }

    pub fn gram(&self) -> &[Vec<BigRational>] {
        &self.gram
    }

    pub fn dual_coxeter(&self) -> u64 {
        self.dual_coxeter
    }

    pub fn dimension(&self) -> u64 {
        self.dimension
    }

    /// Positive roots in fundamental-weight coordinates.
    pub fn positive_roots_int(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Highest root in fundamental-weight coordinates.
    pub fn theta_int(&self) -> &[i64] {
        &self.theta
    }

    /// Exact inner product of two integral weights given by coordinate
    /// slices.  Accumulates in `i128`; coordinates stay far below the
    /// overflow range for every supported rank.
    pub fn inner_int(&self, a: &[i64], b: &[i64]) -> BigRational {
        let (num, den) = self.inner_int_raw(a, b);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    pub(crate) fn inner_int_raw(&self, a: &[i64], b: &[i64]) -> (i128, i128) {
        let n = self.rank();
        debug_assert!(a.len() == n && b.len() == n);
        let mut acc: i128 = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            let ai = a[i] as i128;
            for j in 0..n {
                if b[j] != 0 {
                    acc += ai * (b[j] as i128) * self.gram_num[i][j];
                }
            }
        }
        (acc, self.gram_den)
    }

    /// Inner product of arbitrary rational coordinate vectors.
    pub fn inner_rational(&self, a: &[BigRational], b: &[BigRational]) -> BigRational {
        let n = self.rank();
        debug_assert!(a.len() == n && b.len() == n);
        let mut acc = BigRational::zero();
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[j].is_zero() {
                    acc += &a[i] * &b[j] * &self.gram[i][j];
                }
            }
        }
        acc
    }

    /// `(lambda, lambda + 2 rho)` for integral coordinates.
    pub(crate) fn casimir_int(&self, coords: &[i64]) -> BigRational {
        let shifted: Vec<i64> = coords.iter().map(|c| c + 2).collect();
        self.inner_int(coords, &shifted)
    }

    /// Weyl dimension formula on integral dominant coordinates.
    pub(crate) fn weyl_dim_int(&self, coords: &[i64]) -> BigInt {
        let shifted: Vec<i64> = coords.iter().map(|c| c + 1).collect();
        let rho: Vec<i64> = vec![1; self.rank()];
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for alpha in &self.positive_roots {
            // The common gram_den cancels between numerator and denominator.
            let (a, _) = self.inner_int_raw(&shifted, alpha);
            let (b, _) = self.inner_int_raw(&rho, alpha);
            num *= BigInt::from(a);
            den *= BigInt::from(b);
        }
        let (q, r) = num::integer::div_rem(num, den);
        debug_assert!(r.is_zero(), "Weyl dimension must be an integer");
        debug_assert!(q.sign() == Sign::Plus);
        q
    }

    /// Simple-root coordinates of a weight given in fundamental coordinates:
    /// solves `f = C^T c`, i.e. `c = (C^{-1})^T f`.
    pub(crate) fn root_coords_of(&self, fund: &[i64]) -> Vec<BigRational> {
        let n = self.rank();
        (0..n)
            .map(|m| {
                let mut acc = BigRational::zero();
                for i in 0..n {
                    if fund[i] != 0 {
                        acc += BigRational::from_i64(fund[i]).unwrap() * &self.cartan_inv[i][m];
                    }
                }
                acc
            })
            .collect()
    }

    /// Reflection `s_i` applied to integral coordinates.
    pub(crate) fn reflect_int(&self, coords: &[i64], i: usize) -> Vec<i64> {
        let c = coords[i];
        let mut out = coords.to_vec();
        if c != 0 {
            for (j, o) in out.iter_mut().enumerate() {
                *o -= c * self.cartan[i][j];
            }
        }
        out
    }

    /// Sends integral coordinates to the dominant representative of their
    /// Weyl orbit (plain, unshifted reflection walk).
    pub(crate) fn dominant_representative(&self, coords: &[i64]) -> Vec<i64> {
        let mut f = coords.to_vec();
        'outer: loop {
            for i in 0..self.rank() {
                if f[i] < 0 {
                    f = self.reflect_int(&f, i);
                    continue 'outer;
                }
            }
            return f;
        }
    }

    /// Racah-Speiser step: walks `coords` (interpreted as a rho-shifted
    /// weight) to the dominant chamber.  Returns the representative and the
    /// determinant of the reflecting Weyl element, or sign `0` if the weight
    /// lies on a reflection hyperplane.
    pub(crate) fn dominant_shifted_int(&self, coords: &[i64]) -> (Vec<i64>, i8) {
        let mut f = coords.to_vec();
        let mut sign = 1i8;
        'outer: loop {
            for i in 0..self.rank() {
                if f[i] < 0 {
                    f = self.reflect_int(&f, i);
                    sign = -sign;
                    continue 'outer;
                }
            }
            if f.iter().any(|&c| c == 0) {
                return (f, 0);
            }
            return (f, sign);
        }
    }

    /// Sugawara central charge `k dim g / (k + h-check)`.
    pub fn sugawara_central_charge(&self, k: &BigRational) -> Result<BigRational> {
        let h = BigRational::from_u64(self.dual_coxeter).unwrap();
        if *k == -h.clone() {
            return Err(Error::CriticalLevel {
                algebra: self.lie_type.to_string(),
                level: k.to_string(),
                h_dual: self.dual_coxeter,
            });
        }
        let dim = BigRational::from_u64(self.dimension).unwrap();
        Ok(k * dim / (k + h))
    }
}

/// Weight in fundamental-weight coordinates, owned by a specific root system.
#[derive(Clone)]
pub struct Weight {
    system: Arc<RootSystem>,
    coords: Vec<BigRational>,
}

impl Weight {
    pub fn new(system: &Arc<RootSystem>, coords: Vec<BigRational>) -> Result<Self> {
        if coords.len() != system.rank() {
            return Err(Error::Parse {
                input: format!("{} coordinates", coords.len()),
                expected: format!("{} coordinates for {}", system.rank(), system.lie_type()),
            });
        }
        Ok(Weight {
            system: Arc::clone(system),
            coords,
        })
    }

    pub fn from_ints(system: &Arc<RootSystem>, coords: &[i64]) -> Result<Self> {
        Weight::new(
            system,
            coords.iter().map(|&c| BigRational::from_i64(c).unwrap()).collect(),
        )
    }

    pub fn zero(system: &Arc<RootSystem>) -> Self {
        Weight {
            system: Arc::clone(system),
            coords: vec![BigRational::zero(); system.rank()],
        }
    }

    /// Fundamental weight `w_{i+1}` (zero-based index).
    pub fn fundamental(system: &Arc<RootSystem>, i: usize) -> Self {
        let mut coords = vec![BigRational::zero(); system.rank()];
        coords[i] = BigRational::one();
        Weight {
            system: Arc::clone(system),
            coords,
        }
    }

    pub fn rho(system: &Arc<RootSystem>) -> Self {
        Weight {
            system: Arc::clone(system),
            coords: vec![BigRational::one(); system.rank()],
        }
    }

    pub fn theta(system: &Arc<RootSystem>) -> Self {
        Weight::from_ints(system, system.theta_int()).expect("theta has full rank")
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn is_dominant_integral(&self) -> bool {
        self.coords
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Integral coordinates, if the weight is integral.
    pub fn int_coords(&self) -> Option<Vec<i64>> {
        if !self.is_integral() {
            return None;
        }
        self.coords
            .iter()
            .map(|c| c.to_integer().to_i64())
            .collect()
    }

    fn check_same_system(&self, other: &Weight) -> Result<()> {
        if self.system.lie_type() != other.system.lie_type() {
            return Err(Error::SystemMismatch {
                left: self.system.lie_type().to_string(),
                right: other.system.lie_type().to_string(),
            });
        }
        Ok(())
    }

    /// Exact invariant bilinear form, `(theta, theta) = 2` normalization.
    pub fn inner_product(&self, other: &Weight) -> Result<BigRational> {
        self.check_same_system(other)?;
        Ok(self.system.inner_rational(&self.coords, &other.coords))
    }

    /// Casimir eigenvalue `(lambda, lambda + 2 rho)`.
    pub fn casimir(&self) -> Result<BigRational> {
        let coords = self.dominant_int_coords()?;
        Ok(self.system.casimir_int(&coords))
    }

    /// Dimension of the irreducible module with this highest weight.
    pub fn weyl_dim(&self) -> Result<BigInt> {
        let coords = self.dominant_int_coords()?;
        Ok(self.system.weyl_dim_int(&coords))
    }

    fn dominant_int_coords(&self) -> Result<Vec<i64>> {
        if !self.is_dominant_integral() {
            return Err(Error::NonDominant {
                weight: self.to_string(),
            });
        }
        Ok(self.int_coords().expect("dominant implies integral"))
    }

    /// Interprets the weight as rho-shifted and walks it into the dominant
    /// chamber.  Sign `0` means the weight sits on a reflection hyperplane.
    pub fn to_dominant_shifted(&self) -> Result<(Weight, i8)> {
        let ints = self.int_coords().ok_or_else(|| Error::NonIntegralWeight {
            weight: self.to_string(),
        })?;
        let (dom, sign) = self.system.dominant_shifted_int(&ints);
        Ok((
            Weight::from_ints(&self.system, &dom).expect("same rank"),
            sign,
        ))
    }

    /// Simple reflection `s_{i+1}` (zero-based index).
    pub fn reflect(&self, i: usize) -> Weight {
        let c = self.coords[i].clone();
        let mut coords = self.coords.clone();
        if !c.is_zero() {
            for (j, o) in coords.iter_mut().enumerate() {
                *o -= c.clone() * BigRational::from_i64(self.system.cartan()[i][j]).unwrap();
            }
        }
        Weight {
            system: Arc::clone(&self.system),
            coords,
        }
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.check_same_system(other)?;
        Ok(Weight {
            system: Arc::clone(&self.system),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.check_same_system(other)?;
        Ok(Weight {
            system: Arc::clone(&self.system),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: i64) -> Weight {
        let f = BigRational::from_i64(factor).unwrap();
        Weight {
            system: Arc::clone(&self.system),
            coords: self.coords.iter().map(|c| c * &f).collect(),
        }
    }
}

impl PartialEq for Weight {
    fn eq(&self, other: &Self) -> bool {
        self.system.lie_type() == other.system.lie_type() && self.coords == other.coords
    }
}

impl Eq for Weight {}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.system.lie_type(), self)
    }
}

/// Renders integral coordinates in the same bracketed form as `Weight`.
pub fn format_int_coords(coords: &[i64]) -> String {
    let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match t.family {
        LieFamily::A => {
            for i in 0..n.saturating_sub(1) {
                link(&mut c, i, i + 1);
            }
        }
        LieFamily::B => {
            for i in 0..n - 2 {
                link(&mut c, i, i + 1);
            }
            // alpha_{n-1} long, alpha_n short: C[i][j] = 2(a_i,a_j)/(a_j,a_j).
            c[n - 2][n - 1] = -2;
            c[n - 1][n - 2] = -1;
        }
        LieFamily::C => {
            for i in 0..n - 2 {
                link(&mut c, i, i + 1);
            }
            c[n - 2][n - 1] = -1;
            c[n - 1][n - 2] = -2;
        }
        LieFamily::D => {
            for i in 0..n - 2 {
                link(&mut c, i, i + 1);
            }
            link(&mut c, n - 3, n - 1);
        }
        LieFamily::E => {
            // Chain 1-3-4-5-6(-7)(-8) with 2 attached to 4 (Bourbaki).
            link(&mut c, 0, 2);
            link(&mut c, 2, 3);
            link(&mut c, 1, 3);
            for i in 3..n - 1 {
                link(&mut c, i, i + 1);
            }
        }
        LieFamily::F => {
            link(&mut c, 0, 1);
            c[1][2] = -2;
            c[2][1] = -1;
            link(&mut c, 2, 3);
        }
        LieFamily::G => {
            // alpha_1 short, alpha_2 long.
            c[0][1] = -1;
            c[1][0] = -3;
        }
    }
    c
}

/// String closure over simple-root coordinates: from the top of every root
/// string the full string downwards is present, so climbing upwards from the
/// simple roots reaches every positive root.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: HashSet<Vec<i64>> = HashSet::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut alpha = vec![0i64; n];
        alpha[i] = 1;
        roots.insert(alpha.clone());
        frontier.push(alpha);
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in frontier {
            for i in 0..n {
                if beta.iter().sum::<i64>() == 1 && beta[i] == 1 {
                    continue; // 2 alpha_i is never a root
                }
                // pairing <beta, alpha_i-check>
                let pairing: i64 = (0..n).map(|m| beta[m] * cartan[m][i]).sum();
                // p = steps down from beta that stay roots
                let mut p = 0i64;
                loop {
                    let mut down = beta.clone();
                    down[i] -= p + 1;
                    if down[i] < 0 || !roots.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let q = p - pairing;
                if q >= 1 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if roots.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Vec<i64>> = roots.into_iter().collect();
    out.sort();
    out
}

fn root_norm(cartan: &[Vec<i64>], sym: &[BigRational], coords: &[i64]) -> BigRational {
    // (beta, beta) with B[i][j] = C[i][j] d_j over simple-root coordinates.
    let n = cartan.len();
    let mut acc = BigRational::zero();
    for i in 0..n {
        if coords[i] == 0 {
            continue;
        }
        for j in 0..n {
            if coords[j] != 0 {
                acc += BigRational::from_i64(coords[i] * coords[j] * cartan[i][j]).unwrap()
                    * &sym[j];
            }
        }
    }
    acc
}

/// Gauss-Jordan inverse of an integer matrix over the rationals.
fn invert(m: &[Vec<i64>]) -> Result<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigRational::from_i64(x).unwrap()).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or_else(|| Error::Validation {
            check: "cartan-invertible".into(),
            detail: "Cartan matrix is singular".into(),
        })?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= p.clone();
            inv[col][j] /= p.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let av = a[col][j].clone();
                    let iv = inv[col][j].clone();
                    a[r][j] -= f.clone() * av;
                    inv[r][j] -= f.clone() * iv;
                }
            }
        }
    }
    Ok(inv)
}

//! Vogan diagrams and the per-orbit analytics attached to a dominant weight.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::nodeset::NodeSet;
use crate::rational::{int, Rational};
use crate::realform::{self, RealForm, Stabilizer};
use crate::rootsys::{DynkinType, Letter, RootSystem, RootVec, WeightVec};

/// A Dynkin diagram with a nonempty set of painted (non-compact) simple roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VoganDiagram {
    dtype: DynkinType,
    painted: NodeSet,
}

impl VoganDiagram {
    /// `painted` holds 1-based node labels.
    pub fn new(dtype: DynkinType, painted: &[usize]) -> Result<Self> {
        let rank = dtype.rank();
        if let Some(&bad) = painted.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::NodeOutOfRange { index: bad, rank });
        }
        Self::from_nodes(dtype, NodeSet::from_labels(painted))
    }

    pub fn from_nodes(dtype: DynkinType, painted: NodeSet) -> Result<Self> {
        if painted.is_empty() {
            return Err(Error::EmptyPainted);
        }
        if !NodeSet::full(dtype.rank()).is_superset(painted) {
            let index = painted.iter().find(|&i| i >= dtype.rank()).unwrap_or(0) + 1;
            return Err(Error::NodeOutOfRange { index, rank: dtype.rank() });
        }
        Ok(VoganDiagram { dtype, painted })
    }

    pub fn dtype(&self) -> DynkinType {
        self.dtype
    }

    pub fn painted(&self) -> NodeSet {
        self.painted
    }

    /// Every diagram of `dtype`, painted sets in (size, lex) order.
    pub fn all(dtype: DynkinType) -> Vec<VoganDiagram> {
        subsets_by_size(NodeSet::full(dtype.rank()), NodeSet::EMPTY)
            .into_iter()
            .filter(|s| !s.is_empty())
            .map(|painted| VoganDiagram { dtype, painted })
            .collect()
    }

    /// The representative of this diagram's orbit under diagram automorphisms
    /// whose painted label list is lexicographically smallest.
    pub fn canonical(&self) -> VoganDiagram {
        let best = automorphisms(self.dtype)
            .into_iter()
            .map(|perm| {
                let mut s = NodeSet::EMPTY;
                for i in self.painted.iter() {
                    s.insert(perm[i]);
                }
                s
            })
            .min_by(|a, b| a.labels().cmp(&b.labels()))
            .unwrap();
        VoganDiagram { dtype: self.dtype, painted: best }
    }
}

impl fmt::Display for VoganDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.dtype, self.painted)
    }
}

/// Subsets `T` with `lower ⊆ T ⊆ upper`, in (size, lex on labels) order.
pub(crate) fn subsets_by_size(upper: NodeSet, lower: NodeSet) -> Vec<NodeSet> {
    let free: Vec<usize> = upper.iter().filter(|&i| !lower.contains(i)).collect();
    let mut out: Vec<NodeSet> = (0u64..1 << free.len())
        .map(|mask| {
            let mut s = lower;
            for (k, &i) in free.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    s.insert(i);
                }
            }
            s
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.labels().cmp(&b.labels())));
    out
}

/// Diagram automorphisms as node permutations (0-based), identity first.
pub fn automorphisms(dtype: DynkinType) -> Vec<Vec<usize>> {
    let l = dtype.rank();
    let id: Vec<usize> = (0..l).collect();
    let mut out = vec![id.clone()];
    match (dtype.letter(), l) {
        (Letter::A, l) if l >= 2 => out.push((0..l).rev().collect()),
        (Letter::D, 4) => {
            let arms = [0, 2, 3];
            for p in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                let mut perm = id.clone();
                for k in 0..3 {
                    perm[arms[k]] = arms[p[k]];
                }
                out.push(perm);
            }
        }
        (Letter::D, _) => {
            let mut perm = id.clone();
            perm.swap(l - 2, l - 1);
            out.push(perm);
        }
        (Letter::E, 6) => out.push(vec![4, 3, 2, 1, 0, 5]),
        _ => {}
    }
    out
}

/// A root system together with a Vogan diagram: compactness of every root.
#[derive(Debug, Clone)]
pub struct RootData<'a> {
    rs: &'a RootSystem,
    vd: VoganDiagram,
    eps: Vec<i8>,
    eta: Vec<i64>,
}

impl<'a> RootData<'a> {
    pub fn new(rs: &'a RootSystem, vd: &VoganDiagram) -> Result<Self> {
        if rs.dtype() != vd.dtype() {
            return Err(Error::InvalidArgument("root system and diagram have different types".to_string()));
        }
        let l = rs.rank();
        let eps: Vec<i8> = rs
            .positive_roots()
            .iter()
            .map(|r| {
                let n: i64 = vd.painted().iter().map(|i| r.coords()[i]).sum();
                if n % 2 == 1 {
                    1
                } else {
                    -1
                }
            })
            .collect();
        let mut eta = vec![0i64; l];
        for (r, &e) in rs.positive_roots().iter().zip(&eps) {
            for k in 0..l {
                eta[k] -= 2 * e as i64 * r.coords()[k];
            }
        }
        Ok(RootData { rs, vd: *vd, eps, eta })
    }

    pub fn rs(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn vd(&self) -> &VoganDiagram {
        &self.vd
    }

    /// `ε` by positive-root index: `+1` non-compact, `-1` compact.
    pub fn eps(&self, idx: usize) -> i8 {
        self.eps[idx]
    }

    pub fn epsilon(&self, alpha: &RootVec) -> Result<i8> {
        self.rs.index_of(alpha.coords()).map(|i| self.eps[i]).ok_or_else(|| Error::NotARoot(alpha.to_string()))
    }

    /// `η = -2 Σ ε_α α` in root coordinates.
    pub fn eta(&self) -> WeightVec {
        WeightVec::root_i64(&self.eta)
    }

    pub fn eta_coords(&self) -> &[i64] {
        &self.eta
    }

    pub fn num_compact(&self) -> usize {
        self.eps.iter().filter(|&&e| e < 0).count()
    }

    /// Dimension of the maximal compact subalgebra `𝔨`.
    pub fn dim_k(&self) -> usize {
        self.rs.rank() + 2 * self.num_compact()
    }

    /// Whether `𝔨` has a center, i.e. the compact roots do not span.
    pub fn k_has_center(&self) -> bool {
        let compact: Vec<Vec<i64>> = self
            .rs
            .positive_roots()
            .iter()
            .zip(&self.eps)
            .filter(|(_, &e)| e < 0)
            .map(|(r, _)| r.coords().to_vec())
            .collect();
        linalg::rank_i64(&compact) < self.rs.rank()
    }

    pub fn real_form(&self) -> Result<RealForm> {
        let (d, c) = (self.dim_k(), self.k_has_center());
        realform::lookup(self.vd.dtype(), d, c).ok_or_else(|| {
            Error::InternalConsistency(alloc::format!("no real form of {} with dim k = {d}, centered = {c}", self.vd))
        })
    }

    pub fn identify_real_form(&self) -> Result<alloc::string::String> {
        self.real_form().map(|f| f.name)
    }

    /// No two non-compact positive roots add up to a root.
    pub fn is_integrable(&self) -> bool {
        let n = self.eps.len();
        for i in 0..n {
            if self.eps[i] < 0 {
                continue;
            }
            for j in i..n {
                if self.eps[j] > 0 && self.rs.sum_index(i, j).is_some() {
                    return false;
                }
            }
        }
        true
    }

    pub fn orbit(&self, phi: WeightVec) -> Result<OrbitSpec<'_, 'a>> {
        OrbitSpec::new(self, phi)
    }
}

/// A dominant weight `φ` with compact stabilizer for a given Vogan diagram.
#[derive(Debug, Clone)]
pub struct OrbitSpec<'r, 'a> {
    rd: &'r RootData<'a>,
    phi: WeightVec,
    pairing: Vec<Rational>,
    perp: Vec<bool>,
}

impl<'r, 'a> OrbitSpec<'r, 'a> {
    pub fn new(rd: &'r RootData<'a>, phi: WeightVec) -> Result<Self> {
        let rs = rd.rs;
        let l = rs.rank();
        if phi.len() != l {
            return Err(Error::DimensionMismatch { expected: l, found: phi.len() });
        }
        let phi = rs.to_weight_basis(&phi);
        if let Some(index) = phi.coords.iter().position(|c| c.is_negative()) {
            return Err(Error::NotDominant { index: index + 1 });
        }
        if let Some(index) = rd.vd.painted().iter().find(|&i| phi.coords[i].is_zero()) {
            return Err(Error::SupportViolation { index: index + 1 });
        }
        // (φ, α) = ½ Σ φ_i n_i |γ_i|², summed over a common denominator
        let scaled: Vec<Rational> = phi.coords.iter().zip(rs.lengths()).map(|(c, len)| c * len).collect();
        let den: BigInt = scaled.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let nums: Vec<BigInt> = scaled.iter().map(|q| q.numer() * (&den / q.denom())).collect();
        let den2: BigInt = den * 2;
        let mut perp = Vec::with_capacity(rs.positive_roots().len());
        let pairing: Vec<Rational> = rs
            .positive_roots()
            .iter()
            .map(|r| {
                let mut acc = BigInt::zero();
                for (n, &c) in nums.iter().zip(r.coords()) {
                    if c != 0 {
                        acc += n * c;
                    }
                }
                perp.push(acc.is_zero());
                Rational::new(acc, den2.clone())
            })
            .collect();
        Ok(OrbitSpec { rd, phi, pairing, perp })
    }

    pub fn rd(&self) -> &'r RootData<'a> {
        self.rd
    }

    /// `φ` in weight coordinates.
    pub fn phi(&self) -> &WeightVec {
        &self.phi
    }

    /// `(φ, α)` by positive-root index.
    pub fn pairing(&self, idx: usize) -> &Rational {
        &self.pairing[idx]
    }

    pub fn is_perp(&self, idx: usize) -> bool {
        self.perp[idx]
    }

    pub fn zero_nodes(&self) -> NodeSet {
        let mut s = NodeSet::EMPTY;
        for (i, c) in self.phi.coords.iter().enumerate() {
            if c.is_zero() {
                s.insert(i);
            }
        }
        s
    }

    /// Positive roots orthogonal to `φ`.
    pub fn phi_perp_positive_roots(&self) -> Vec<RootVec> {
        self.rd.rs.positive_roots().iter().zip(&self.perp).filter(|(_, &p)| p).map(|(r, _)| r.clone()).collect()
    }

    pub(crate) fn phi_prime_coords(&self) -> Vec<i64> {
        let mut v = self.rd.eta.clone();
        for (r, &p) in self.rd.rs.positive_roots().iter().zip(&self.perp) {
            if p {
                for (x, c) in v.iter_mut().zip(r.coords()) {
                    *x -= 2 * c;
                }
            }
        }
        v
    }

    /// `φ′ = η - 2 Σ_{α ∈ Δ+ ∩ φ⊥} α` in root coordinates.
    pub fn phi_prime(&self) -> WeightVec {
        WeightVec::root_i64(&self.phi_prime_coords())
    }

    /// `λ` with `φ′ = λφ`, if `φ′` is proportional to `φ`.
    pub fn check_special(&self) -> Option<Rational> {
        // compare in weight coordinates, where φ′ is integral
        let pp = self.phi_prime_coords();
        let a = self.rd.rs.cartan();
        let l = pp.len();
        let pw: Vec<i64> = (0..l).map(|j| (0..l).map(|i| a.entry(j, i) * pp[i]).sum()).collect();
        let k = self.phi.coords.iter().position(|c| !c.is_zero())?;
        let lambda = int(pw[k]) / &self.phi.coords[k];
        let ok = pw.iter().zip(&self.phi.coords).all(|(&p, c)| int(p) == &lambda * c);
        if !ok {
            return None;
        }
        debug_assert_eq!(lambda, self.lambda_from_eta());
        Some(lambda)
    }

    /// `(η, φ) / |φ|²`.
    pub fn lambda_from_eta(&self) -> Rational {
        let rs = self.rd.rs;
        let num = rs.inner_product(&self.phi, &self.rd.eta()).expect("same rank");
        let den = rs.inner_product(&self.phi, &self.phi).expect("same rank");
        num / den
    }

    /// Hermitian scalar curvature `s = Σ_{β ∈ Δ+ \ φ⊥} (φ′, β)/(φ, β)`.
    pub fn hermitian_scalar_curvature(&self) -> Rational {
        let rs = self.rd.rs;
        let pp = self.phi_prime_coords();
        let mut s = Rational::zero();
        for b in 0..rs.positive_roots().len() {
            if self.perp[b] {
                continue;
            }
            let num = pp
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .fold(Rational::zero(), |acc, (k, &c)| acc + int(c) * rs.root_simple_product(b, k));
            s += num / &self.pairing[b];
        }
        s
    }

    /// `(dim V, dim G/V)`.
    pub fn orbit_dimensions(&self) -> (usize, usize) {
        let off = self.perp.iter().filter(|&&p| !p).count();
        let dim_m = 2 * off;
        (self.rd.rs.dim_algebra() - dim_m, dim_m)
    }

    pub fn stabilizer_decomposition(&self) -> Stabilizer {
        let zero = self.zero_nodes();
        realform::stabilizer(self.rd.rs, zero, self.rd.rs.rank() - zero.len())
    }

    /// Squared norm of the Nijenhuis tensor of the canonical almost complex structure.
    pub fn nijenhuis_norm_sq(&self) -> Rational {
        let rs = self.rd.rs;
        let n = rs.positive_roots().len();
        let eps = &self.rd.eps;
        let mut total = Rational::zero();
        for a in 0..n {
            if self.perp[a] {
                continue;
            }
            for b in 0..n {
                if self.perp[b] || eps[b] < 0 {
                    continue;
                }
                if eps[a] > 0 {
                    if let Some(s) = rs.sum_index(a, b) {
                        let w = rs.nsq_sum(a, b);
                        if !w.is_zero() {
                            total += &self.pairing[s] / (&self.pairing[a] * &self.pairing[b]) * w;
                        }
                    }
                } else if let Some(d) = rs.diff_index(a, b) {
                    let w = rs.nsq_diff(a, b);
                    if !w.is_zero() && !self.pairing[d].is_zero() {
                        total += int(2) * &self.pairing[d] / (&self.pairing[a] * &self.pairing[b]) * w;
                    }
                }
            }
        }
        total
    }

    /// Whether the primitive integral weight on the ray of `φ` is a positive root.
    pub fn phi_in_delta(&self) -> bool {
        let prim = crate::rational::primitive(&self.phi.coords);
        let c = self.rd.rs.to_root_basis(&WeightVec::weight_i64(&prim));
        if c.coords.iter().any(|x| !x.is_integer()) {
            return false;
        }
        let ints: Vec<i64> = c.coords.iter().map(|x| crate::rational::to_i64(x).unwrap_or(i64::MAX)).collect();
        self.rd.rs.index_of(&ints).is_some()
    }
}

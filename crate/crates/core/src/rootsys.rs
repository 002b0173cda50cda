//! Abstract root systems built from Cartan data.
//!
//! Simple roots are numbered as follows (1-based):
//!
//! * `A`: a path `1 - 2 - ... - l`.
//! * `B`: a path with the double bond between 1 and 2; node 1 is short.
//! * `C`: a path with the double bond between `l-1` and `l`; node `l` is long.
//! * `D`: a path `1 - ... - (l-1)` with node `l` attached to `l-2`.
//! * `E6`/`E7`/`E8`: a path on the first `l-1` nodes, with node `l` attached
//!   to node 3, 4 and 5 respectively.
//! * `F4`: a path with the double bond between 2 and 3; nodes 1, 2 are short.
//! * `G2`: node 1 is short.
//!
//! Squared lengths default to 1 for short (and simply-laced) roots, 2 for long
//! roots in B, C, F and 3 for the long root of G2.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::nodeset::NodeSet;
use crate::rational::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Letter {
    pub const ALL: [Letter; 7] = [Letter::A, Letter::B, Letter::C, Letter::D, Letter::E, Letter::F, Letter::G];

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
            Letter::D => 'D',
            Letter::E => 'E',
            Letter::F => 'F',
            Letter::G => 'G',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        Some(match c.to_ascii_uppercase() {
            'A' => Letter::A,
            'B' => Letter::B,
            'C' => Letter::C,
            'D' => Letter::D,
            'E' => Letter::E,
            'F' => Letter::F,
            'G' => Letter::G,
            _ => return None,
        })
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A connected Dynkin type such as `B4` or `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    letter: Letter,
    rank: usize,
}

impl DynkinType {
    pub fn new(letter: Letter, rank: usize) -> Result<Self> {
        let ok = match letter {
            Letter::A => rank >= 1,
            Letter::B => rank >= 2,
            Letter::C => rank >= 3,
            Letter::D => rank >= 4,
            Letter::E => (6..=8).contains(&rank),
            Letter::F => rank == 4,
            Letter::G => rank == 2,
        };
        if !ok || rank > 64 {
            return Err(Error::InvalidType { letter, rank });
        }
        Ok(DynkinType { letter, rank })
    }

    pub fn letter(self) -> Letter {
        self.letter
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Every admissible type of rank at most `max_rank`, in letter then rank order.
    pub fn all_up_to(max_rank: usize) -> Vec<DynkinType> {
        let mut out = Vec::new();
        for letter in Letter::ALL {
            for rank in 1..=max_rank {
                if let Ok(t) = DynkinType::new(letter, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Closed-form number of positive roots.
    pub fn num_positive_roots(self) -> usize {
        let l = self.rank;
        match (self.letter, l) {
            (Letter::A, _) => l * (l + 1) / 2,
            (Letter::B | Letter::C, _) => l * l,
            (Letter::D, _) => l * (l - 1),
            (Letter::E, 6) => 36,
            (Letter::E, 7) => 63,
            (Letter::E, _) => 120,
            (Letter::F, _) => 24,
            (Letter::G, _) => 6,
        }
    }

    pub fn dim_algebra(self) -> usize {
        self.rank + 2 * self.num_positive_roots()
    }

    /// Diagram edges as 0-based node pairs `(i, j)` with `i < j`.
    pub fn edges(self) -> Vec<(usize, usize)> {
        let l = self.rank;
        let path = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.letter {
            Letter::A | Letter::B | Letter::C | Letter::F | Letter::G => path(l),
            Letter::D => {
                let mut e = path(l - 1);
                e.push((l - 3, l - 1));
                e
            }
            Letter::E => {
                let mut e = path(l - 1);
                e.push((l - 4, l - 1));
                e
            }
        }
    }

    /// Default squared lengths `|γ_i|²`.
    pub fn default_lengths(self) -> Vec<i64> {
        let l = self.rank;
        match self.letter {
            Letter::B => (0..l).map(|i| if i == 0 { 1 } else { 2 }).collect(),
            Letter::C => (0..l).map(|i| if i == l - 1 { 2 } else { 1 }).collect(),
            Letter::F => vec![1, 1, 2, 2],
            Letter::G => vec![1, 3],
            _ => vec![1; l],
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut chars = t.chars();
        let letter = chars.next().and_then(Letter::from_char).ok_or_else(|| Error::ParseType(s.to_string()))?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::ParseType(s.to_string()));
        }
        let rank: usize = digits.parse().map_err(|_| Error::ParseType(s.to_string()))?;
        DynkinType::new(letter, rank)
    }
}

/// Integer Cartan matrix, `A_ij = 2(γ_i,γ_j)/(γ_i,γ_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix(Vec<Vec<i64>>);

impl CartanMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: r.len() });
            }
            for (j, &a) in r.iter().enumerate() {
                let bad = if i == j { a != 2 } else { !(-3..=0).contains(&a) || (a == 0) != (rows[j][i] == 0) };
                if bad {
                    return Err(Error::InvalidArgument(format!("invalid Cartan entry A[{}][{}] = {a}", i + 1, j + 1)));
                }
            }
        }
        let m = CartanMatrix(rows);
        if !linalg::determinant(&m.to_rational()).is_positive() {
            return Err(Error::InvalidArgument("Cartan matrix must have positive determinant".into()));
        }
        Ok(m)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.0
    }

    pub fn to_rational(&self) -> Matrix {
        linalg::from_i64(&self.0)
    }
}

/// Cartan matrix of `dtype` in the labeling described at module level.
pub fn cartan_matrix(dtype: DynkinType) -> CartanMatrix {
    let len = dtype.default_lengths();
    let l = dtype.rank();
    let mut a = vec![vec![0i64; l]; l];
    for i in 0..l {
        a[i][i] = 2;
    }
    for (i, j) in dtype.edges() {
        let m = len[i].max(len[j]);
        // S_ij = -m/2, so A_ij = 2 S_ij / S_ii = -m / len_i
        a[i][j] = -m / len[i];
        a[j][i] = -m / len[j];
    }
    CartanMatrix(a)
}

/// A positive root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVec(Vec<i64>);

impl RootVec {
    pub fn new(coords: Vec<i64>) -> Self {
        RootVec(coords)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootVec(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Nodes with a nonzero coefficient.
    pub fn support(&self) -> NodeSet {
        let mut s = NodeSet::EMPTY;
        for (i, &c) in self.0.iter().enumerate() {
            if c != 0 {
                s.insert(i);
            }
        }
        s
    }

    pub fn to_weightvec(&self) -> WeightVec {
        WeightVec::root(self.0.iter().map(|&c| int(c)).collect())
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// All positive roots, ordered by height and then by decreasing coordinates
/// (so the simple roots come out as `γ_1, ..., γ_l`).
pub fn generate_positive_roots(cartan: &CartanMatrix) -> Vec<RootVec> {
    let l = cartan.rank();
    let mut known: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
    let mut layer: Vec<Vec<i64>> = (0..l).map(|i| RootVec::simple(l, i).0).collect();
    let mut all: Vec<Vec<i64>> = Vec::new();
    while !layer.is_empty() {
        layer.sort_by(|a, b| b.cmp(a));
        layer.dedup();
        for r in &layer {
            known.insert(r.clone(), ());
        }
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..l {
                let mut p = 0i64;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains_key(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..l).map(|j| beta[j] * cartan.entry(i, j)).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.push(up);
                }
            }
        }
        all.append(&mut layer);
        layer = next;
    }
    all.into_iter().map(RootVec).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Coordinates over the simple roots.
    Root,
    /// Coordinates over the fundamental weights.
    Weight,
}

/// A rational vector in the real span of the roots, tagged with its basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVec {
    pub coords: Vec<Rational>,
    pub basis: Basis,
}

impl WeightVec {
    pub fn root(coords: Vec<Rational>) -> Self {
        WeightVec { coords, basis: Basis::Root }
    }

    pub fn weight(coords: Vec<Rational>) -> Self {
        WeightVec { coords, basis: Basis::Weight }
    }

    pub fn weight_i64(coords: &[i64]) -> Self {
        WeightVec::weight(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn root_i64(coords: &[i64]) -> Self {
        WeightVec::root(coords.iter().map(|&c| int(c)).collect())
    }

    /// The fundamental weight `φ_i` (0-based `i`).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![Rational::zero(); rank];
        v[i] = Rational::one();
        WeightVec::weight(v)
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, t: &Rational) -> WeightVec {
        WeightVec { coords: self.coords.iter().map(|c| c * t).collect(), basis: self.basis }
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A root system with its Cartan data, invariant form and lookup tables.
#[derive(Debug, Clone)]
pub struct RootSystem {
    dtype: DynkinType,
    cartan: CartanMatrix,
    cartan_inv: Matrix,
    roots: Vec<RootVec>,
    index: BTreeMap<Vec<i64>, usize>,
    lengths: Vec<Rational>,
    form: Matrix,
    // (α_i, α_j) for all pairs of positive roots
    gram: Vec<Vec<Rational>>,
    // index of α_i + α_j when it is a root
    sum: Vec<Vec<Option<usize>>>,
    // index of α_i - α_j when it is a positive root
    diff: Vec<Vec<Option<usize>>>,
    supports: Vec<NodeSet>,
    // (α_r, γ_k)
    simple_prod: Vec<Vec<Rational>>,
    // N²_{α_i,α_j}, zero unless α_i + α_j is a root
    nsq_sum: Vec<Vec<Rational>>,
    // N²_{α_i,-α_j}, zero unless α_i - α_j is a positive root
    nsq_diff: Vec<Vec<Rational>>,
}

impl RootSystem {
    pub fn new(dtype: DynkinType) -> Self {
        let lengths = dtype.default_lengths().into_iter().map(int).collect();
        Self::with_lengths(dtype, lengths).expect("default lengths are consistent")
    }

    /// Builds the root system with explicit squared lengths `|γ_i|²`.
    ///
    /// The lengths must be compatible with the Cartan matrix, i.e. a positive
    /// multiple of the defaults.
    pub fn with_lengths(dtype: DynkinType, lengths: Vec<Rational>) -> Result<Self> {
        let l = dtype.rank();
        if lengths.len() != l {
            return Err(Error::DimensionMismatch { expected: l, found: lengths.len() });
        }
        if lengths.iter().any(|x| !x.is_positive()) {
            return Err(Error::InvalidArgument("squared lengths must be positive".into()));
        }
        let cartan = cartan_matrix(dtype);
        let half = Rational::new(1.into(), 2.into());
        let form: Matrix =
            (0..l).map(|i| (0..l).map(|j| int(cartan.entry(i, j)) * &lengths[i] * &half).collect()).collect();
        for i in 0..l {
            for j in 0..i {
                if form[i][j] != form[j][i] {
                    return Err(Error::InvalidArgument(format!(
                        "squared lengths are not compatible with the Cartan matrix of {dtype}"
                    )));
                }
            }
        }
        let cartan_inv = linalg::inverse(&cartan.to_rational()).expect("Cartan matrices are invertible");
        let roots = generate_positive_roots(&cartan);
        let index: BTreeMap<Vec<i64>, usize> = roots.iter().enumerate().map(|(k, r)| (r.0.clone(), k)).collect();

        // (α, γ_j) for every root, then the full Gram matrix
        let against_simple: Vec<Vec<Rational>> = roots
            .iter()
            .map(|r| (0..l).map(|j| (0..l).fold(Rational::zero(), |acc, i| acc + &form[i][j] * int(r.0[i]))).collect())
            .collect();
        let gram: Vec<Vec<Rational>> = against_simple
            .iter()
            .map(|a| roots.iter().map(|b| (0..l).fold(Rational::zero(), |acc, j| acc + &a[j] * int(b.0[j]))).collect())
            .collect();

        let n = roots.len();
        let mut sum = vec![vec![None; n]; n];
        let mut diff = vec![vec![None; n]; n];
        for i in 0..n {
            for j in 0..n {
                let s: Vec<i64> = (0..l).map(|k| roots[i].0[k] + roots[j].0[k]).collect();
                sum[i][j] = index.get(&s).copied();
                let d: Vec<i64> = (0..l).map(|k| roots[i].0[k] - roots[j].0[k]).collect();
                diff[i][j] = index.get(&d).copied();
            }
        }

        let mut rs = RootSystem {
            dtype,
            cartan,
            cartan_inv,
            roots,
            index,
            lengths,
            form,
            gram,
            sum,
            diff,
            supports: Vec::new(),
            simple_prod: against_simple,
            nsq_sum: Vec::new(),
            nsq_diff: Vec::new(),
        };
        let mut nsq_sum = vec![vec![Rational::zero(); n]; n];
        let mut nsq_diff = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            let a = &rs.roots[i].0;
            for j in 0..n {
                let b = &rs.roots[j].0;
                if rs.sum[i][j].is_some() {
                    nsq_sum[i][j] = rs.n_squared(a, b, &rs.gram[i][i]);
                }
                if rs.diff[i][j].is_some() {
                    let neg: Vec<i64> = b.iter().map(|x| -x).collect();
                    nsq_diff[i][j] = rs.n_squared(a, &neg, &rs.gram[i][i]);
                }
            }
        }
        rs.supports = rs.roots.iter().map(RootVec::support).collect();
        rs.nsq_sum = nsq_sum;
        rs.nsq_diff = nsq_diff;
        Ok(rs)
    }

    pub fn dtype(&self) -> DynkinType {
        self.dtype
    }

    pub fn rank(&self) -> usize {
        self.dtype.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn cartan_inv(&self) -> &Matrix {
        &self.cartan_inv
    }

    pub fn positive_roots(&self) -> &[RootVec] {
        &self.roots
    }

    pub fn lengths(&self) -> &[Rational] {
        &self.lengths
    }

    /// `S_ij = (γ_i, γ_j)`.
    pub fn form(&self) -> &Matrix {
        &self.form
    }

    pub fn dim_algebra(&self) -> usize {
        self.rank() + 2 * self.roots.len()
    }

    /// Position of a positive root in [`positive_roots`](Self::positive_roots).
    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// `(α_i, α_j)` by positive-root index.
    pub fn root_product(&self, i: usize, j: usize) -> &Rational {
        &self.gram[i][j]
    }

    /// Index of `α_i + α_j` if it is a root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        self.sum[i][j]
    }

    /// Index of `α_i - α_j` if it is a positive root.
    pub fn diff_index(&self, i: usize, j: usize) -> Option<usize> {
        self.diff[i][j]
    }

    /// Support of a positive root by index.
    pub fn root_support(&self, r: usize) -> NodeSet {
        self.supports[r]
    }

    /// `(α_r, γ_k)` by positive-root index and node.
    pub fn root_simple_product(&self, r: usize, k: usize) -> &Rational {
        &self.simple_prod[r][k]
    }

    /// `N²_{α_i,α_j}` (zero unless `α_i + α_j` is a root).
    pub fn nsq_sum(&self, i: usize, j: usize) -> &Rational {
        &self.nsq_sum[i][j]
    }

    /// `N²_{α_i,-α_j}` (zero unless `α_i - α_j` is a positive root).
    pub fn nsq_diff(&self, i: usize, j: usize) -> &Rational {
        &self.nsq_diff[i][j]
    }

    fn is_signed_root(&self, v: &[i64]) -> bool {
        if v.iter().all(|&x| x >= 0) {
            self.index.contains_key(v)
        } else if v.iter().all(|&x| x <= 0) {
            let neg: Vec<i64> = v.iter().map(|x| -x).collect();
            self.index.contains_key(&neg)
        } else {
            false
        }
    }

    /// `(p, q)` for the `α`-string `β - pα, ..., β + qα` through a signed root `β`.
    pub(crate) fn string_signed(&self, alpha: &[i64], beta: &[i64]) -> (i64, i64) {
        let walk = |dir: i64| {
            let mut n = 0;
            let mut v = beta.to_vec();
            loop {
                for (x, a) in v.iter_mut().zip(alpha) {
                    *x += dir * a;
                }
                if self.is_signed_root(&v) {
                    n += 1;
                } else {
                    return n;
                }
            }
        };
        (walk(-1), walk(1))
    }

    /// The `α`-string through `β`: `(p, q)` with `β - pα, ..., β + qα` all roots.
    pub fn root_string(&self, alpha: &RootVec, beta: &RootVec) -> Result<(u32, u32)> {
        for r in [alpha, beta] {
            if r.0.len() != self.rank() {
                return Err(Error::DimensionMismatch { expected: self.rank(), found: r.0.len() });
            }
            if self.index_of(&r.0).is_none() {
                return Err(Error::NotARoot(r.to_string()));
            }
        }
        if alpha == beta {
            return Err(Error::InvalidArgument("root string needs beta != ±alpha".into()));
        }
        let (p, q) = self.string_signed(&alpha.0, &beta.0);
        Ok((p as u32, q as u32))
    }

    /// `N²_{α,β} = q(1+p)(α,α)/2` for signed roots, zero when `α+β` is not a root.
    pub(crate) fn n_squared(&self, alpha: &[i64], beta: &[i64], alpha_len: &Rational) -> Rational {
        let s: Vec<i64> = alpha.iter().zip(beta).map(|(a, b)| a + b).collect();
        if !self.is_signed_root(&s) {
            return Rational::zero();
        }
        let (p, q) = self.string_signed(alpha, beta);
        int(q * (1 + p)) * alpha_len / int(2)
    }

    fn check_len(&self, w: &WeightVec) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: w.len() });
        }
        Ok(())
    }

    /// Root coordinates `c = A⁻¹ w`.
    pub fn to_root_basis(&self, w: &WeightVec) -> WeightVec {
        match w.basis {
            Basis::Root => w.clone(),
            Basis::Weight => WeightVec::root(linalg::mat_vec(&self.cartan_inv, &w.coords)),
        }
    }

    /// Weight coordinates `w_j = Σ_i A_ji c_i`.
    pub fn to_weight_basis(&self, w: &WeightVec) -> WeightVec {
        match w.basis {
            Basis::Weight => w.clone(),
            Basis::Root => WeightVec::weight(linalg::mat_vec(&self.cartan.to_rational(), &w.coords)),
        }
    }

    pub fn inner_product(&self, a: &WeightVec, b: &WeightVec) -> Result<Rational> {
        self.check_len(a)?;
        self.check_len(b)?;
        let l = self.rank();
        let out = match (a.basis, b.basis) {
            // (ψ, α) = ½ Σ w^i n^i |γ_i|²
            (Basis::Weight, Basis::Root) | (Basis::Root, Basis::Weight) => {
                let (w, c) = if a.basis == Basis::Weight { (a, b) } else { (b, a) };
                (0..l).fold(Rational::zero(), |acc, i| acc + &w.coords[i] * &c.coords[i] * &self.lengths[i]) / int(2)
            }
            _ => {
                let x = self.to_root_basis(a);
                let y = self.to_root_basis(b);
                let mut s = Rational::zero();
                for i in 0..l {
                    if x.coords[i].is_zero() {
                        continue;
                    }
                    for j in 0..l {
                        s += &x.coords[i] * &self.form[i][j] * &y.coords[j];
                    }
                }
                s
            }
        };
        Ok(out)
    }

    pub fn is_dominant(&self, psi: &WeightVec) -> bool {
        self.to_weight_basis(psi).coords.iter().all(|c| !c.is_negative())
    }

    /// Nodes where the weight coordinates are strictly positive.
    pub fn support(&self, psi: &WeightVec) -> NodeSet {
        let w = self.to_weight_basis(psi);
        let mut s = NodeSet::EMPTY;
        for (i, c) in w.coords.iter().enumerate() {
            if c.is_positive() {
                s.insert(i);
            }
        }
        s
    }

    /// Human-readable summary used by the `roots` command.
    pub fn describe_root(&self, r: &RootVec) -> String {
        let mut s = String::new();
        for (i, &c) in r.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('+');
            }
            if c != 1 {
                s.push_str(&format!("{c}"));
            }
            s.push_str(&format!("g{}", i + 1));
        }
        s
    }
}

//! Enumeration of all special weights of a Vogan diagram.
//!
//! For a support set `S ⊇ painted`, every weight with support exactly `S`
//! has the same `φ′`, namely `c_S = η - 2 Σ α` over positive roots supported
//! off `S`. So `S` carries a special weight iff `c_S` vanishes (a whole cone
//! with `λ = 0`) or is a nonzero multiple of a weight supported on `S`.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::orbit::OrbitReport;
use crate::rational::{frac, gcd_i64, int, Rational};
use crate::rootsys::WeightVec;
use crate::vogan::{subsets_by_size, RootData};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionKind {
    /// An isolated ray; `phi` is the primitive integer weight vector on it.
    Point { phi: Vec<i64>, lambda: Rational },
    /// The open cone `Σ_{i∈S} t_i φ_i`, `t_i > 0`, all with `λ = 0`.
    Cone,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialSolution {
    pub support: NodeSet,
    pub kind: SolutionKind,
}

impl SpecialSolution {
    pub fn is_cone(&self) -> bool {
        matches!(self.kind, SolutionKind::Cone)
    }

    pub fn lambda(&self) -> Rational {
        match &self.kind {
            SolutionKind::Point { lambda, .. } => lambda.clone(),
            SolutionKind::Cone => Rational::zero(),
        }
    }

    /// Weight coordinates of the point, or of the cone barycenter.
    pub fn representative(&self, rank: usize) -> Vec<i64> {
        match &self.kind {
            SolutionKind::Point { phi, .. } => phi.clone(),
            SolutionKind::Cone => (0..rank).map(|i| self.support.contains(i) as i64).collect(),
        }
    }
}

/// `c_S` in root coordinates.
pub fn c_vector(rd: &RootData<'_>, s: NodeSet) -> Vec<i64> {
    let rs = rd.rs();
    let off = s.complement(rs.rank());
    let mut c = rd.eta_coords().to_vec();
    for (r, root) in rs.positive_roots().iter().enumerate() {
        if off.is_superset(rs.root_support(r)) {
            for (x, n) in c.iter_mut().zip(root.coords()) {
                *x -= 2 * n;
            }
        }
    }
    c
}

pub fn solve_subset(rd: &RootData<'_>, s: NodeSet) -> Result<Option<SpecialSolution>> {
    let rs = rd.rs();
    let l = rs.rank();
    if !s.is_superset(rd.vd().painted()) || !NodeSet::full(l).is_superset(s) {
        return Err(Error::InvalidArgument(alloc::format!(
            "support {s} must contain the painted nodes {} and lie in 1..{l}",
            rd.vd().painted()
        )));
    }
    let c = c_vector(rd, s);
    let a = rs.cartan();
    let w: Vec<i64> = (0..l).map(|j| (0..l).map(|i| a.entry(j, i) * c[i]).sum()).collect();
    if w.iter().all(|&x| x == 0) {
        return Ok(Some(SpecialSolution { support: s, kind: SolutionKind::Cone }));
    }
    if (0..l).any(|i| !s.contains(i) && w[i] != 0) {
        return Ok(None);
    }
    let first = w[s.iter().next().unwrap()];
    if first == 0 {
        return Ok(None);
    }
    let sigma = first.signum();
    if s.iter().any(|i| w[i].signum() != sigma) {
        return Ok(None);
    }
    let g = gcd_i64(&w);
    let phi: Vec<i64> = w.iter().map(|x| x.abs() / g).collect();
    Ok(Some(SpecialSolution { support: s, kind: SolutionKind::Point { phi, lambda: int(sigma * g) } }))
}

/// All special weights, one per admissible support, in (size, lex) order.
pub fn enumerate_special(rd: &RootData<'_>) -> Vec<SpecialSolution> {
    let full = NodeSet::full(rd.rs().rank());
    subsets_by_size(full, rd.vd().painted())
        .into_iter()
        .filter_map(|s| solve_subset(rd, s).expect("supersets of the painted set are admissible"))
        .collect()
}

fn phi_prime_is(rd: &RootData<'_>, phi: WeightVec, lambda: &Rational) -> bool {
    let rs = rd.rs();
    let Ok(os) = rd.orbit(phi) else {
        return false;
    };
    let expected = rs.to_root_basis(os.phi()).scale(lambda);
    os.phi_prime() == expected
}

/// Recomputes `φ′` from scratch at the solution (or sample points of the cone).
pub fn verify_solution(rd: &RootData<'_>, sol: &SpecialSolution) -> bool {
    let rs = rd.rs();
    let l = rs.rank();
    match &sol.kind {
        SolutionKind::Point { phi, lambda } => {
            if lambda.is_zero() || phi.iter().any(|x| x.is_negative()) {
                return false;
            }
            let support: NodeSet = NodeSet::from_bits(
                phi.iter().enumerate().filter(|(_, &x)| x > 0).fold(0u64, |acc, (i, _)| acc | 1 << i),
            );
            if support != sol.support {
                return false;
            }
            let w = WeightVec::weight_i64(phi);
            if !phi_prime_is(rd, w.clone(), lambda) {
                return false;
            }
            let Ok(os) = rd.orbit(w) else {
                return false;
            };
            os.lambda_from_eta() == *lambda
        }
        SolutionKind::Cone => {
            let zero = Rational::zero();
            let bary = WeightVec::weight_i64(&sol.representative(l));
            if !phi_prime_is(rd, bary, &zero) {
                return false;
            }
            let mut rng = ChaCha8Rng::seed_from_u64(sol.support.bits());
            (0..8).all(|_| {
                let coords: Vec<Rational> = (0..l)
                    .map(|i| {
                        if sol.support.contains(i) {
                            let n = (rng.next_u32() % 20) as i64 + 1;
                            let d = (rng.next_u32() % 20) as i64 + 1;
                            frac(n, d)
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect();
                phi_prime_is(rd, WeightVec::weight(coords), &zero)
            })
        }
    }
}

/// Full report for a solution. Cones are analyzed at their barycenter.
pub fn classify(rd: &RootData<'_>, sol: &SpecialSolution) -> Result<OrbitReport> {
    let l = rd.rs().rank();
    let os = rd.orbit(WeightVec::weight_i64(&sol.representative(l)))?;
    let mut report = OrbitReport::from_orbit(&os)?;
    if report.lambda.as_ref() != Some(&sol.lambda()) {
        return Err(Error::InternalConsistency(alloc::format!(
            "{}: solver and direct check disagree on lambda at {}",
            rd.vd(),
            sol.support
        )));
    }
    if sol.is_cone() {
        report.cone = true;
        // a multi-dimensional cone is never a single ray through a root
        report.phi_is_root = sol.support.len() == 1 && report.phi_is_root;
    }
    Ok(report)
}

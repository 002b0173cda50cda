//! Per-solution report rows.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::rational::{int, sign, Rational};
use crate::realform::Stabilizer;
use crate::vogan::{OrbitSpec, VoganDiagram};

/// Sign class of `λ`, with the `s` prefix marking a non-integrable structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymplecticClass {
    GT,
    SGT,
    CY,
    SCY,
    F,
    SF,
}

impl SymplecticClass {
    pub fn new(lambda: &Rational, integrable: bool) -> Result<Self> {
        Ok(match (sign(lambda), integrable) {
            (-1, true) => SymplecticClass::GT,
            (-1, false) => SymplecticClass::SGT,
            (0, true) => SymplecticClass::CY,
            (0, false) => SymplecticClass::SCY,
            (_, false) => SymplecticClass::SF,
            (_, true) => {
                return Err(Error::InternalConsistency("integrable structure with positive lambda".into()));
            }
        })
    }

    pub fn label(self) -> &'static str {
        match self {
            SymplecticClass::GT => "GT",
            SymplecticClass::SGT => "sGT",
            SymplecticClass::CY => "CY",
            SymplecticClass::SCY => "sCY",
            SymplecticClass::F => "F",
            SymplecticClass::SF => "sF",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Self::GT, Self::SGT, Self::CY, Self::SCY, Self::F, Self::SF].into_iter().find(|c| c.label() == s)
    }
}

impl fmt::Display for SymplecticClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Everything reported about one orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub diagram: VoganDiagram,
    /// Nodes where `φ` is positive.
    pub support: NodeSet,
    /// `true` for a `λ = 0` cone, in which case `phi` is its barycenter.
    pub cone: bool,
    /// `φ` in weight coordinates.
    pub phi: Vec<Rational>,
    pub phi_is_root: bool,
    pub lambda: Option<Rational>,
    pub sclass: Option<SymplecticClass>,
    pub herm_scal: Rational,
    pub dim_v: usize,
    pub dim_m: usize,
    pub real_form: String,
    pub stabilizer: Stabilizer,
    pub integrable: bool,
    pub nijenhuis_sq: Rational,
}

impl OrbitReport {
    pub fn from_orbit(os: &OrbitSpec<'_, '_>) -> Result<Self> {
        let rd = os.rd();
        let rs = rd.rs();
        let lambda = os.check_special();
        let integrable = rd.is_integrable();
        let nijenhuis_sq = os.nijenhuis_norm_sq();
        if integrable != nijenhuis_sq.is_zero() {
            return Err(Error::InternalConsistency(format!("{}: pair criterion and Nijenhuis norm disagree", rd.vd())));
        }
        let sclass = lambda.as_ref().map(|l| SymplecticClass::new(l, integrable)).transpose()?;
        let herm_scal = os.hermitian_scalar_curvature();
        let (dim_v, dim_m) = os.orbit_dimensions();
        if let Some(l) = &lambda {
            if herm_scal != int(dim_m as i64) * l / int(2) {
                return Err(Error::InternalConsistency(format!("{}: s != n lambda", rd.vd())));
            }
        }
        let stabilizer = os.stabilizer_decomposition();
        if stabilizer.dim() != dim_v {
            return Err(Error::InternalConsistency(format!("{}: stabilizer dimension mismatch", rd.vd())));
        }
        if dim_v + dim_m != rs.dim_algebra() {
            return Err(Error::InternalConsistency(format!("{}: dimensions do not add up", rd.vd())));
        }
        Ok(OrbitReport {
            diagram: *rd.vd(),
            support: rs.support(os.phi()),
            cone: false,
            phi: os.phi().coords.clone(),
            phi_is_root: os.phi_in_delta(),
            lambda,
            sclass,
            herm_scal,
            dim_v,
            dim_m,
            real_form: rd.identify_real_form()?,
            stabilizer,
            integrable,
            nijenhuis_sq,
        })
    }
}

//! Solving many diagrams at once.

use rayon::prelude::*;
use vogan_core::{
    classify, enumerate_special, verify_solution, DynkinType, Error, Letter, RootData, RootSystem, VoganDiagram,
};

use crate::report::DiagramResult;

pub const THREADS_ENV: &str = "VOGAN_THREADS";

/// Solves one diagram, re-verifying every solution before classifying it.
pub fn solve_diagram(rs: &RootSystem, vd: &VoganDiagram) -> Result<DiagramResult, Error> {
    let rd = RootData::new(rs, vd)?;
    let reports = enumerate_special(&rd)
        .iter()
        .map(|sol| {
            if !verify_solution(&rd, sol) {
                return Err(Error::InternalConsistency(format!(
                    "{vd}: solution at {} fails verification",
                    sol.support
                )));
            }
            classify(&rd, sol)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DiagramResult { diagram: *vd, reports })
}

/// Types covered by `tables`: classical types of rank `2..=max_rank`, plus
/// G2, F4, E6, E7, E8 when `exceptional` is set, ordered by rank then letter.
pub fn table_types(max_rank: usize, exceptional: bool) -> Vec<DynkinType> {
    let mut out: Vec<DynkinType> = DynkinType::all_up_to(max_rank.max(1))
        .into_iter()
        .filter(|t| t.rank() >= 2 && matches!(t.letter(), Letter::A | Letter::B | Letter::C | Letter::D))
        .collect();
    if exceptional {
        for s in ["G2", "F4", "E6", "E7", "E8"] {
            out.push(s.parse().expect("valid type"));
        }
    }
    out.sort_by_key(|t| (t.rank(), t.letter()));
    out
}

#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    /// Include diagrams that are automorphism images of another one.
    pub all_diagrams: bool,
    /// Include diagrams without any solution.
    pub keep_empty: bool,
}

/// Worker count from [`THREADS_ENV`], if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.trim().parse().ok().filter(|&n| n > 0)
}

/// Solves every diagram of every type. The output order does not depend on `threads`.
pub fn sweep(types: &[DynkinType], opts: SweepOptions, threads: Option<usize>) -> Result<Vec<DiagramResult>, Error> {
    let systems: Vec<RootSystem> = types.iter().map(|&t| RootSystem::new(t)).collect();
    let jobs: Vec<(&RootSystem, VoganDiagram)> = systems
        .iter()
        .flat_map(|rs| {
            VoganDiagram::all(rs.dtype())
                .into_iter()
                .filter(move |vd| opts.all_diagrams || vd.canonical() == *vd)
                .map(move |vd| (rs, vd))
        })
        .collect();
    let run = || -> Result<Vec<DiagramResult>, Error> {
        let results: Vec<DiagramResult> =
            jobs.par_iter().map(|(rs, vd)| solve_diagram(rs, vd)).collect::<Result<_, _>>()?;
        Ok(results.into_iter().filter(|d| opts.keep_empty || !d.reports.is_empty()).collect())
    };
    match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(run),
        None => run(),
    }
}

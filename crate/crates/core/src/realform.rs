//! Names of real forms and of compact simple summands.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::nodeset::NodeSet;
use crate::rootsys::{DynkinType, Letter, RootSystem};

/// One entry of the real-form catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealForm {
    pub name: String,
    /// Dimension of the maximal compact subalgebra.
    pub dim_k: usize,
    /// Whether the maximal compact subalgebra has a center.
    pub centered: bool,
}

fn rf(name: String, dim_k: usize, centered: bool) -> RealForm {
    RealForm { name, dim_k, centered }
}

/// Inner non-compact real forms of `dtype`, in lookup priority order.
///
/// Where two forms share the key `(dim 𝔨, centered)` the first listed wins,
/// which only happens for `so(2,6) ≅ so*(8)`.
pub fn catalog(dtype: DynkinType) -> Vec<RealForm> {
    let l = dtype.rank();
    let mut out = Vec::new();
    match dtype.letter() {
        Letter::A => {
            let n = l + 1;
            for p in 1..=n / 2 {
                let q = n - p;
                out.push(rf(format!("su({p},{q})"), p * p + q * q - 1, true));
            }
        }
        Letter::B => {
            for a in 1..=l {
                let b = l - a;
                out.push(rf(format!("so({},{})", 2 * a, 2 * b + 1), a * (2 * a - 1) + b * (2 * b + 1), a == 1));
            }
        }
        Letter::C => {
            for p in 1..=l / 2 {
                let q = l - p;
                out.push(rf(format!("sp({p},{q})"), p * (2 * p + 1) + q * (2 * q + 1), false));
            }
            out.push(rf(format!("sp({l},R)"), l * l, true));
        }
        Letter::D => {
            for a in 1..=l / 2 {
                let b = l - a;
                out.push(rf(format!("so({},{})", 2 * a, 2 * b), a * (2 * a - 1) + b * (2 * b - 1), a == 1));
            }
            out.push(rf(format!("so*({})", 2 * l), l * l, true));
        }
        Letter::E => {
            let list: &[(&str, usize, bool)] = match l {
                6 => &[("e6(2)", 38, false), ("e6(-14)", 46, true)],
                7 => &[("e7(7)", 63, false), ("e7(-5)", 69, false), ("e7(-25)", 79, true)],
                _ => &[("e8(8)", 120, false), ("e8(-24)", 136, false)],
            };
            out.extend(list.iter().map(|&(n, d, c)| rf(n.into(), d, c)));
        }
        Letter::F => {
            out.push(rf("f4(4)".into(), 24, false));
            out.push(rf("f4(-20)".into(), 36, false));
        }
        Letter::G => out.push(rf("g2(2)".into(), 6, false)),
    }
    out
}

pub fn lookup(dtype: DynkinType, dim_k: usize, centered: bool) -> Option<RealForm> {
    catalog(dtype).into_iter().find(|f| f.dim_k == dim_k && f.centered == centered)
}

/// A compact simple summand of a stabilizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub name: String,
    pub dim: usize,
    /// Nodes of the sub-diagram it comes from.
    pub nodes: NodeSet,
}

/// Stabilizer algebra `𝔳`: simple summands plus a center of dimension `center_rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilizer {
    pub summands: Vec<Summand>,
    pub center_rank: usize,
}

impl Stabilizer {
    pub fn names(&self) -> Vec<String> {
        self.summands.iter().map(|s| s.name.clone()).collect()
    }

    pub fn dim(&self) -> usize {
        self.summands.iter().map(|s| s.dim).sum::<usize>() + self.center_rank
    }
}

impl fmt::Display for Stabilizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.summands {
            if !first {
                f.write_str("+")?;
            }
            f.write_str(&s.name)?;
            first = false;
        }
        for _ in 0..self.center_rank {
            if !first {
                f.write_str("+")?;
            }
            f.write_str("R")?;
            first = false;
        }
        Ok(())
    }
}

fn bond(rs: &RootSystem, i: usize, j: usize) -> i64 {
    rs.cartan().entry(i, j) * rs.cartan().entry(j, i)
}

/// Connected components of the sub-diagram on `nodes`, each in increasing order.
pub fn components(rs: &RootSystem, nodes: NodeSet) -> Vec<NodeSet> {
    let mut seen = NodeSet::EMPTY;
    let mut out = Vec::new();
    for start in nodes.iter() {
        if seen.contains(start) {
            continue;
        }
        let mut comp = NodeSet::EMPTY;
        let mut stack = alloc::vec![start];
        seen.insert(start);
        while let Some(v) = stack.pop() {
            comp.insert(v);
            for w in nodes.iter() {
                if !seen.contains(w) && bond(rs, v, w) != 0 {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

fn su(n: usize) -> (String, usize) {
    (format!("su({n})"), n * n - 1)
}

fn so(n: usize) -> (String, usize) {
    (format!("so({n})"), n * (n - 1) / 2)
}

fn sp(k: usize) -> (String, usize) {
    (format!("sp({k})"), k * (2 * k + 1))
}

/// Compact real form of the connected sub-diagram on `comp`.
pub fn name_component(rs: &RootSystem, comp: NodeSet) -> Summand {
    let nodes: Vec<usize> = comp.iter().collect();
    let k = nodes.len();
    let mut max_bond = 0;
    for &i in &nodes {
        for &j in &nodes {
            if i != j {
                max_bond = max_bond.max(bond(rs, i, j));
            }
        }
    }
    let (name, dim) = match max_bond {
        0 | 1 => simply_laced(rs, &nodes),
        3 => ("g2".into(), 14),
        _ => {
            if rs.dtype().letter() == Letter::F && k == 4 {
                ("f4".into(), 52)
            } else {
                let lens = rs.lengths();
                let short = nodes.iter().map(|&i| &lens[i]).min().unwrap();
                let n_short = nodes.iter().filter(|&&i| &lens[i] == short).count();
                let n_long = k - n_short;
                if k == 2 {
                    if rs.dtype().letter() == Letter::C {
                        sp(2)
                    } else {
                        so(5)
                    }
                } else if n_short == 1 {
                    so(2 * k + 1)
                } else {
                    debug_assert_eq!(n_long, 1);
                    sp(k)
                }
            }
        }
    };
    Summand { name, dim, nodes: comp }
}

fn simply_laced(rs: &RootSystem, nodes: &[usize]) -> (String, usize) {
    let k = nodes.len();
    let nbrs = |v: usize| nodes.iter().copied().filter(move |&w| w != v && bond(rs, v, w) != 0);
    let Some(&branch) = nodes.iter().find(|&&v| nbrs(v).count() >= 3) else {
        return su(k + 1);
    };
    let mut arms: Vec<usize> = nbrs(branch)
        .map(|first| {
            let (mut prev, mut cur, mut len) = (branch, first, 1);
            loop {
                let next: Vec<usize> = nbrs(cur).filter(|&w| w != prev).collect();
                match next.as_slice() {
                    [n] => {
                        prev = cur;
                        cur = *n;
                        len += 1;
                    }
                    _ => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => so(2 * k),
        [1, 2, 2] => ("e6".into(), 78),
        [1, 2, 3] => ("e7".into(), 133),
        [1, 2, 4] => ("e8".into(), 248),
        _ => unreachable!("sub-diagram of a Dynkin diagram is a Dynkin diagram"),
    }
}

/// Stabilizer of a weight whose zero nodes are `zero` and whose support has `m` nodes.
pub fn stabilizer(rs: &RootSystem, zero: NodeSet, m: usize) -> Stabilizer {
    let mut summands: Vec<Summand> = components(rs, zero).into_iter().map(|c| name_component(rs, c)).collect();
    summands.sort_by(|a, b| b.dim.cmp(&a.dim).then(a.nodes.iter().next().cmp(&b.nodes.iter().next())));
    Stabilizer { summands, center_rank: m }
}

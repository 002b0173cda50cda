//! Invariant checks over every diagram up to a given rank.

use vogan_core::rational::sign;
use vogan_core::{
    enumerate_special, verify_solution, DynkinType, Letter, RootData, RootSystem, VoganDiagram, WeightVec,
};

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn new(name: &'static str) -> Self {
        CheckResult { name, cases: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the suite on every type of rank `<= max_rank` (exceptional types included when in range).
pub fn run(max_rank: usize) -> Vec<CheckResult> {
    let mut counts = CheckResult::new("root counts match closed forms");
    let mut reflect = CheckResult::new("roots are permuted by simple reflections");
    let mut eps = CheckResult::new("compactness sign is multiplicative");
    let mut oracle = CheckResult::new("solutions pass direct verification");
    let mut sign_lemma = CheckResult::new("sign of (eta, phi_i) equals sign of lambda");
    let mut coherence = CheckResult::new("one sign class per diagram, at most one negative");
    let mut single = CheckResult::new("single painted node p gives phi_p");
    let mut classical = CheckResult::new("classical diagrams with two painted nodes are not integrable");

    for t in DynkinType::all_up_to(max_rank) {
        let rs = RootSystem::new(t);
        let roots = rs.positive_roots();
        counts.check(roots.len() == t.num_positive_roots(), || format!("{t}"));
        let cartan = rs.cartan();
        for r in roots {
            let c = r.coords();
            for i in 0..t.rank() {
                let mut img = c.to_vec();
                img[i] -= (0..t.rank()).map(|j| c[j] * cartan.entry(i, j)).sum::<i64>();
                let ok = if img.iter().all(|&x| x <= 0) {
                    // only γ_i itself is sent to a negative root
                    img.iter().map(|x| -x).collect::<Vec<_>>() == c
                } else {
                    rs.index_of(&img).is_some()
                };
                reflect.check(ok, || format!("{t}: s{} {}", i + 1, r));
            }
        }
        for vd in VoganDiagram::all(t) {
            let rd = RootData::new(&rs, &vd).expect("matching types");
            for i in 0..roots.len() {
                for j in 0..roots.len() {
                    if let Some(k) = rs.sum_index(i, j) {
                        eps.check(rd.eps(k) == -rd.eps(i) * rd.eps(j), || format!("{vd}: {} + {}", roots[i], roots[j]));
                    }
                }
            }
            let sols = enumerate_special(&rd);
            let signs: Vec<i8> = sols.iter().map(|s| sign(&s.lambda())).collect();
            let negatives = signs.iter().filter(|&&s| s < 0).count();
            let uniform = signs.windows(2).all(|w| w[0] == w[1]);
            coherence.check(uniform && negatives <= 1, || format!("{vd}"));
            for sol in &sols {
                oracle.check(verify_solution(&rd, sol), || format!("{vd} at {}", sol.support));
                let lam = sign(&sol.lambda());
                for p in vd.painted().iter() {
                    let phi_p = WeightVec::fundamental(t.rank(), p);
                    let s = sign(&rs.inner_product(&rd.eta(), &phi_p).expect("same rank"));
                    sign_lemma.check(s == lam, || format!("{vd} at {}, node {}", sol.support, p + 1));
                }
            }
            if vd.painted().len() == 1 {
                let p = vd.painted();
                let found = sols.iter().any(|s| {
                    s.support == p
                        && s.representative(t.rank()).iter().enumerate().all(|(i, &x)| x == p.contains(i) as i64)
                });
                single.check(found, || format!("{vd}"));
            }
            if vd.painted().len() >= 2 && matches!(t.letter(), Letter::A | Letter::B | Letter::C | Letter::D) {
                classical.check(!rd.is_integrable(), || format!("{vd}"));
            }
        }
    }
    vec![counts, reflect, eps, oracle, sign_lemma, coherence, single, classical]
}

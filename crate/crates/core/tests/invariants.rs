//! Property tests for algebraic invariants.

#![allow(clippy::needless_range_loop)]

use num_traits::{Signed, Zero};
use proptest::prelude::*;
use vogan_core::rational::{frac, int, Rational};
use vogan_core::*;

const TABLE_TYPES: [&str; 17] =
    ["A2", "B2", "G2", "A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4", "A5", "D5", "B5", "E6", "E7", "E8"];

fn any_type() -> impl Strategy<Value = DynkinType> {
    proptest::sample::select(DynkinType::all_up_to(8))
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=30).prop_map(|(n, d)| frac(n, d))
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=40, 1i64..=40).prop_map(|(n, d)| frac(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn basis_round_trip(t in any_type(), raw in proptest::collection::vec(small_rational(), 8)) {
        let rs = RootSystem::new(t);
        let v = WeightVec::weight(raw[..t.rank()].to_vec());
        prop_assert_eq!(rs.to_weight_basis(&rs.to_root_basis(&v)), v.clone());
        let r = WeightVec::root(raw[..t.rank()].to_vec());
        prop_assert_eq!(rs.to_root_basis(&rs.to_weight_basis(&r)), r.clone());
        // the mixed-basis shortcut agrees with the Gram-matrix product
        let direct = rs.inner_product(&v, &r).unwrap();
        let via_roots = rs.inner_product(&rs.to_root_basis(&v), &r).unwrap();
        prop_assert_eq!(direct, via_roots);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rescaling_lengths_changes_nothing(
        t in proptest::sample::select(TABLE_TYPES.to_vec()),
        mask in 1u64..256,
        c in positive_rational(),
    ) {
        let dt: DynkinType = t.parse().unwrap();
        let painted = NodeSet::from_bits(mask & NodeSet::full(dt.rank()).bits());
        prop_assume!(!painted.is_empty());
        let vd = VoganDiagram::from_nodes(dt, painted).unwrap();
        let base = RootSystem::new(dt);
        let scaled_lengths = base.lengths().iter().map(|x| x * &c).collect();
        let scaled = RootSystem::with_lengths(dt, scaled_lengths).unwrap();
        let rd0 = RootData::new(&base, &vd).unwrap();
        let rd1 = RootData::new(&scaled, &vd).unwrap();
        let s0 = enumerate_special(&rd0);
        let s1 = enumerate_special(&rd1);
        prop_assert_eq!(&s0, &s1);
        for sol in &s0 {
            let a = classify(&rd0, sol).unwrap();
            let b = classify(&rd1, sol).unwrap();
            prop_assert_eq!(a, b);
        }
        // and at a generic, non-special weight
        let generic: Vec<i64> = (0..dt.rank()).map(|i| if painted.contains(i) { 1 + i as i64 } else { (i % 2) as i64 }).collect();
        let o0 = rd0.orbit(WeightVec::weight_i64(&generic)).unwrap();
        let o1 = rd1.orbit(WeightVec::weight_i64(&generic)).unwrap();
        prop_assert_eq!(o0.hermitian_scalar_curvature(), o1.hermitian_scalar_curvature());
        prop_assert_eq!(o0.nijenhuis_norm_sq(), o1.nijenhuis_norm_sq());
        prop_assert_eq!(o0.check_special(), o1.check_special());
    }

    #[test]
    fn scaling_phi(
        t in proptest::sample::select(TABLE_TYPES.to_vec()),
        mask in 1u64..256,
        scale in positive_rational(),
    ) {
        let dt: DynkinType = t.parse().unwrap();
        let painted = NodeSet::from_bits(mask & NodeSet::full(dt.rank()).bits());
        prop_assume!(!painted.is_empty());
        let rs = RootSystem::new(dt);
        let vd = VoganDiagram::from_nodes(dt, painted).unwrap();
        let rd = RootData::new(&rs, &vd).unwrap();
        let mut weights: Vec<Vec<i64>> = enumerate_special(&rd).iter().map(|s| s.representative(dt.rank())).collect();
        weights.push((0..dt.rank()).map(|i| if painted.contains(i) { 2 } else { (i % 3) as i64 }).collect());
        for w in weights {
            let phi = WeightVec::weight_i64(&w);
            let a = rd.orbit(phi.clone()).unwrap();
            let b = rd.orbit(phi.scale(&scale)).unwrap();
            prop_assert_eq!(b.check_special(), a.check_special().map(|l| l / &scale));
            prop_assert_eq!(b.hermitian_scalar_curvature(), a.hermitian_scalar_curvature() / &scale);
            prop_assert_eq!(b.nijenhuis_norm_sq(), a.nijenhuis_norm_sq() / &scale);
            prop_assert_eq!(b.orbit_dimensions(), a.orbit_dimensions());
            prop_assert_eq!(b.stabilizer_decomposition(), a.stabilizer_decomposition());
            prop_assert_eq!(b.phi_perp_positive_roots(), a.phi_perp_positive_roots());
            prop_assert_eq!(b.phi_in_delta(), a.phi_in_delta());
        }
    }
}

#[test]
fn form_is_symmetric_positive_definite_with_cartan_pattern() {
    for t in DynkinType::all_up_to(8) {
        let rs = RootSystem::new(t);
        let s = rs.form();
        let l = t.rank();
        for i in 0..l {
            for j in 0..l {
                assert_eq!(s[i][j], s[j][i]);
                assert_eq!(s[i][j].is_zero(), rs.cartan().entry(i, j) == 0);
                assert_eq!(s[i][j], int(rs.cartan().entry(i, j)) * &rs.lengths()[i] / int(2));
            }
        }
        // Sylvester: leading minors positive
        for k in 1..=l {
            let minor: Vec<Vec<Rational>> = s[..k].iter().map(|r| r[..k].to_vec()).collect();
            assert!(linalg::determinant(&minor).is_positive(), "{t}");
        }
    }
}

#[test]
fn squared_structure_constants_are_symmetric() {
    // N²_{α,β} = N²_{β,α}, and N²_{α,-β} = N²_{β,-α}
    for t in DynkinType::all_up_to(6) {
        let rs = RootSystem::new(t);
        let n = rs.positive_roots().len();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(rs.nsq_sum(i, j), rs.nsq_sum(j, i), "{t}");
                if rs.diff_index(i, j).is_some() {
                    assert!(!rs.nsq_diff(i, j).is_zero());
                }
            }
        }
    }
}

#[test]
fn single_painted_node_is_special() {
    for t in DynkinType::all_up_to(8) {
        let rs = RootSystem::new(t);
        for p in 1..=t.rank() {
            let rd = RootData::new(&rs, &VoganDiagram::new(t, &[p]).unwrap()).unwrap();
            let sols = enumerate_special(&rd);
            let mut e = vec![0; t.rank()];
            e[p - 1] = 1;
            assert!(
                sols.iter().any(|s| s.support == NodeSet::from_labels(&[p]) && s.representative(t.rank()) == e),
                "{t} {p}"
            );
        }
    }
}

#[test]
fn points_lie_on_the_root_lattice_and_cones_are_exactly_zero_c() {
    for t in DynkinType::all_up_to(6) {
        let rs = RootSystem::new(t);
        for vd in VoganDiagram::all(t) {
            let rd = RootData::new(&rs, &vd).unwrap();
            let sols = enumerate_special(&rd);
            for sol in &sols {
                let c = solver::c_vector(&rd, sol.support);
                let phi_root = rs.to_root_basis(&WeightVec::weight_i64(&sol.representative(t.rank())));
                let expected: Vec<Rational> = phi_root.coords.iter().map(|x| x * sol.lambda()).collect();
                assert_eq!(c.iter().map(|&x| int(x)).collect::<Vec<_>>(), expected);
            }
            // a cone is emitted for S exactly when c_S vanishes
            let full = NodeSet::full(t.rank());
            for bits in 0..=full.bits() {
                let s = NodeSet::from_bits(bits);
                if !s.is_superset(vd.painted()) {
                    continue;
                }
                let zero = solver::c_vector(&rd, s).iter().all(|&x| x == 0);
                let cone = sols.iter().any(|x| x.support == s && x.is_cone());
                assert_eq!(zero, cone, "{vd} {s}");
            }
        }
    }
}

#[test]
fn full_support_cone_for_all_painted_a() {
    // present exactly for even rank
    for l in 2..=8 {
        let t = DynkinType::new(Letter::A, l).unwrap();
        let rs = RootSystem::new(t);
        let all: Vec<usize> = (1..=l).collect();
        let rd = RootData::new(&rs, &VoganDiagram::new(t, &all).unwrap()).unwrap();
        let sols = enumerate_special(&rd);
        let found = sols.iter().any(|s| s.is_cone() && s.support == NodeSet::full(l));
        assert_eq!(found, l % 2 == 0, "A{l}");
    }
}

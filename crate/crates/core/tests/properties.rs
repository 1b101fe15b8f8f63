//! Property tests for the algebraic invariants: associativity and norm
//! multiplicativity of the quaternion product, de Moivre exponent laws,
//! the SU(2) homomorphism and fibration, simulator norm preservation,
//! and adder symmetries.

use num_complex::Complex64;
use proptest::prelude::*;

use fracgate::{
    adder_two_simulated, gate_power, project_to_su2, quat_to_su2, su2_to_quat, CircuitOp,
    GeneratorKind, GeneratorTag, Quaternion, StateVector, UnitQuaternion, Unitary2,
};

fn quaternion_strategy() -> impl Strategy<Value = Quaternion> {
    (
        -2.0..2.0f64,
        -2.0..2.0f64,
        -2.0..2.0f64,
        -2.0..2.0f64,
    )
        .prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
}

fn unit_quaternion_strategy() -> impl Strategy<Value = UnitQuaternion> {
    quaternion_strategy()
        .prop_filter("norm bounded away from zero", |q| q.norm() > 0.2)
        .prop_map(|q| UnitQuaternion::normalized(q).unwrap())
}

/// Unit quaternions with a clearly nonzero vector part, so the polar
/// axis is data rather than convention.
fn nonreal_unit_strategy() -> impl Strategy<Value = UnitQuaternion> {
    unit_quaternion_strategy().prop_filter("not near +/-1", |q| {
        q.as_quaternion().vector_norm() > 0.05
    })
}

fn unitary_strategy() -> impl Strategy<Value = Unitary2> {
    (unit_quaternion_strategy(), 0.0..(2.0 * std::f64::consts::PI)).prop_map(|(q, phase)| {
        quat_to_su2(q)
            .as_unitary()
            .phase_scaled(Complex64::from_polar(1.0, phase))
    })
}

proptest! {
    #[test]
    fn multiplication_is_associative(
        a in quaternion_strategy(),
        b in quaternion_strategy(),
        c in quaternion_strategy(),
    ) {
        let left = (a * b) * c;
        let right = a * (b * c);
        prop_assert!(left.approx_eq(&right, 1e-12));
    }

    #[test]
    fn norm_is_multiplicative(a in quaternion_strategy(), b in quaternion_strategy()) {
        let lhs = (a * b).norm();
        let rhs = a.norm() * b.norm();
        prop_assert!((lhs - rhs).abs() <= 1e-12);
    }

    #[test]
    fn inverse_recovers_identity(q in quaternion_strategy()) {
        prop_assume!(q.norm() > 0.1);
        let inv = q.inverse().unwrap();
        prop_assert!((q * inv).approx_eq(&Quaternion::ONE, 1e-12));
    }

    #[test]
    fn polar_round_trip(q in unit_quaternion_strategy()) {
        let p = q.polar();
        prop_assert!(p.to_unit_quaternion().approx_eq(&q, 1e-12));
    }

    #[test]
    fn exponents_add(q in nonreal_unit_strategy(), s in -3.0..3.0f64, t in -3.0..3.0f64) {
        let product = q.pow(s) * q.pow(t);
        let direct = q.pow(s + t);
        prop_assert!(product.approx_eq(&direct, 1e-10));
    }

    #[test]
    fn root_round_trip(q in nonreal_unit_strategy()) {
        for t in [2.0, 3.0, 7.0, 2.5, std::f64::consts::PI] {
            let back = q.pow(1.0 / t).pow(t);
            prop_assert!(back.approx_eq(&q, 1e-9), "t = {t}");
        }
    }

    #[test]
    fn enumerated_roots_are_distinct_and_valid(q in nonreal_unit_strategy(), n in 1u32..8) {
        let roots = q.roots(n).unwrap();
        prop_assert_eq!(roots.len(), n as usize);
        for (i, r) in roots.iter().enumerate() {
            let powered = r.pow(f64::from(n));
            prop_assert!(powered.approx_eq(&q, 1e-9));
            for other in &roots[..i] {
                let d = (r.as_quaternion() - other.as_quaternion()).norm();
                prop_assert!(d > 1e-6);
            }
        }
    }

    #[test]
    fn quat_to_su2_is_a_homomorphism(
        p in unit_quaternion_strategy(),
        q in unit_quaternion_strategy(),
    ) {
        let lhs = quat_to_su2(p * q);
        let rhs = quat_to_su2(p).mul(&quat_to_su2(q));
        prop_assert!(lhs.approx_eq(&rhs, 1e-12));
    }

    #[test]
    fn su2_round_trips(q in unit_quaternion_strategy()) {
        let u = quat_to_su2(q);
        let back = su2_to_quat(&u.as_unitary()).unwrap();
        prop_assert!(back.approx_eq(&q, 1e-12));
        let forward = quat_to_su2(back);
        prop_assert!(forward.approx_eq(&u, 1e-12));
    }

    #[test]
    fn fibration_factors_every_unitary(a in unitary_strategy()) {
        let (special, phi) = project_to_su2(&a);
        let det = special.as_unitary().det();
        prop_assert!((det - Complex64::new(1.0, 0.0)).norm() <= 1e-10);
        let back = special.as_unitary().phase_scaled(phi.value());
        prop_assert!(back.approx_eq(&a, 1e-10));
    }

    #[test]
    fn sign_pair_acts_identically(
        q in unit_quaternion_strategy(),
        re0 in -1.0..1.0f64,
        im0 in -1.0..1.0f64,
        re1 in -1.0..1.0f64,
        im1 in -1.0..1.0f64,
    ) {
        let v = [Complex64::new(re0, im0), Complex64::new(re1, im1)];
        let norm = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
        prop_assume!(norm > 0.1);
        let v = [v[0] / norm, v[1] / norm];
        let u_plus = quat_to_su2(q).as_unitary().apply(v);
        let u_minus = quat_to_su2(-q).as_unitary().apply(v);
        let overlap = (u_plus[0].conj() * u_minus[0] + u_plus[1].conj() * u_minus[1]).norm();
        prop_assert!((overlap - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn integer_gate_powers_invert(a in unitary_strategy()) {
        for k in [2u32, 3, 5] {
            let b = gate_power(&a, f64::from(k), true).unwrap();
            let mut acc = Unitary2::identity();
            for _ in 0..k {
                acc = b.mul(&acc);
            }
            prop_assert!(acc.approx_eq(&a, 1e-9), "k = {k}");
        }
    }
}

fn ops_strategy(n: usize) -> impl Strategy<Value = Vec<CircuitOp>> {
    prop::collection::vec(
        (0u8..4, 0..n, 0..n.saturating_sub(1), -7.0..7.0f64),
        1..12,
    )
    .prop_map(move |raw| {
        raw.into_iter()
            .map(|(kind, a, b, angle)| match kind {
                0 => CircuitOp::Gate {
                    matrix: fracgate::rx(angle),
                    target: a,
                },
                1 => CircuitOp::Gate {
                    matrix: fracgate::fractional_h(angle).as_unitary(),
                    target: a,
                },
                2 => CircuitOp::Gate {
                    matrix: fracgate::hadamard(),
                    target: a,
                },
                _ => {
                    // Fold b into a distinct target index.
                    let target = (a + 1 + b) % n;
                    CircuitOp::Cnot {
                        control: a,
                        target: if target == a { (a + 1) % n } else { target },
                    }
                }
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn circuits_preserve_the_norm(ops in ops_strategy(4)) {
        let mut s = StateVector::new(4).unwrap();
        s.apply_all(&ops).unwrap();
        prop_assert!((s.norm_sqr() - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn dense_matrix_agrees_with_state_engine(ops in ops_strategy(3)) {
        let m = fracgate::circuit_unitary(&ops, 3).unwrap();
        let mut s = StateVector::new(3).unwrap();
        s.apply_all(&ops).unwrap();
        for (row, amp) in s.amplitudes().iter().enumerate() {
            prop_assert!((m[row][0] - amp).norm() <= 1e-10);
        }
    }

    #[test]
    fn adder_is_symmetric_and_periodic(
        theta in -7.0..7.0f64,
        phi in -7.0..7.0f64,
        tag_a in 0u8..2,
        tag_b in 0u8..2,
    ) {
        let tag = |t: u8| if t == 0 { GeneratorTag::XRotation } else { GeneratorTag::Hadamard };
        let a = GeneratorKind::from_angle(tag(tag_a), theta).gate().as_unitary();
        let b = GeneratorKind::from_angle(tag(tag_b), phi).gate().as_unitary();
        let p = adder_two_simulated(&a, &b);
        prop_assert!((0.0..=1.0 + 1e-12).contains(&p));
        let swapped = adder_two_simulated(&b, &a);
        prop_assert!((p - swapped).abs() <= 1e-12);
        let shifted = GeneratorKind::from_angle(tag(tag_a), theta + 2.0 * std::f64::consts::PI)
            .gate()
            .as_unitary();
        prop_assert!((adder_two_simulated(&shifted, &b) - p).abs() <= 1e-10);
    }

    #[test]
    fn hadamard_pair_never_exceeds_half(theta in 0.0..7.0f64, phi in 0.0..7.0f64) {
        let a = GeneratorKind::from_angle(GeneratorTag::Hadamard, theta).gate().as_unitary();
        let b = GeneratorKind::from_angle(GeneratorTag::Hadamard, phi).gate().as_unitary();
        prop_assert!(adder_two_simulated(&a, &b) <= 0.5 + 1e-9);
    }

    #[test]
    fn sampling_is_deterministic(angle in 0.0..3.0f64, seed in 0u64..1000) {
        let mut s = StateVector::new(1).unwrap();
        s.apply_1q(&fracgate::rx(angle), 0).unwrap();
        let a = s.sample(0, 200, seed).unwrap();
        let b = s.sample(0, 200, seed).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn values_are_thread_safe() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Quaternion>();
    assert_send_sync::<UnitQuaternion>();
    assert_send_sync::<Unitary2>();
    assert_send_sync::<StateVector>();
    assert_send_sync::<fracgate::ClassifierModel>();
    assert_send_sync::<fracgate::SurfaceGrid>();
}

#[test]
fn training_is_deterministic() {
    let text = "sport\tI played football\nmusic\tI played guitar\nsport\tfootball again\n";
    let corpus = fracgate::Corpus::parse(text).unwrap();
    let build = || {
        let vocab = fracgate::build_vocabulary(&corpus, 3).unwrap();
        fracgate::train(&corpus, 0.1, vocab, GeneratorTag::XRotation, true)
            .unwrap()
            .to_json()
    };
    assert_eq!(build(), build());
}

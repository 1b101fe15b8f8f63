//! Dense statevector simulation of circuits built from single-qubit
//! gates and CNOT, with seeded shot sampling.
//!
//! Basis states are indexed big-endian: qubit 0 is the most significant
//! bit of the basis index, so for three qubits |100> is index 4. This
//! convention is frozen because the dense circuit matrices depend on it.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::su2::Unitary2;

/// Statevector capacity cap (2^24 amplitudes = 256 MiB).
pub const MAX_QUBITS: usize = 24;

/// Dense circuit matrices are capped much lower (2^10 x 2^10).
pub const MAX_DENSE_QUBITS: usize = 10;

/// Identifier of the sampling RNG, recorded in every [`ShotResult`].
pub const RNG_ALGORITHM: &str = "chacha12";

/// One gate application in a circuit.
#[derive(Debug, Clone)]
pub enum CircuitOp {
    /// Single-qubit gate on `target`.
    Gate { matrix: Unitary2, target: usize },
    /// CNOT flipping `target` when `control` is 1.
    Cnot { control: usize, target: usize },
}

/// Dense amplitude vector over `n` qubits in big-endian basis order.
#[derive(Debug, Clone)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// |0...0> on `n` qubits, 1 <= n <= 24.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::QubitCountOutOfRange { n, max: MAX_QUBITS });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(Self { n, amps })
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    fn bit_mask(&self, qubit: usize) -> Result<usize> {
        if qubit >= self.n {
            return Err(Error::QubitIndexOutOfRange {
                index: qubit,
                n: self.n,
            });
        }
        Ok(1 << (self.n - 1 - qubit))
    }

    /// Applies a single-qubit gate to the target tensor factor.
    pub fn apply_1q(&mut self, u: &Unitary2, target: usize) -> Result<()> {
        let mask = self.bit_mask(target)?;
        let m = u.entries();
        for idx in 0..self.amps.len() {
            if idx & mask == 0 {
                let a0 = self.amps[idx];
                let a1 = self.amps[idx | mask];
                self.amps[idx] = m[0][0] * a0 + m[0][1] * a1;
                self.amps[idx | mask] = m[1][0] * a0 + m[1][1] * a1;
            }
        }
        Ok(())
    }

    /// Applies CNOT: swaps the amplitudes of each basis pair whose
    /// control bit is 1. Applying it twice restores the state exactly.
    pub fn apply_cnot(&mut self, control: usize, target: usize) -> Result<()> {
        if control == target {
            return Err(Error::ControlEqualsTarget { index: control });
        }
        let cmask = self.bit_mask(control)?;
        let tmask = self.bit_mask(target)?;
        for idx in 0..self.amps.len() {
            if idx & cmask != 0 && idx & tmask == 0 {
                self.amps.swap(idx, idx | tmask);
            }
        }
        Ok(())
    }

    pub fn apply(&mut self, op: &CircuitOp) -> Result<()> {
        match op {
            CircuitOp::Gate { matrix, target } => self.apply_1q(matrix, *target),
            CircuitOp::Cnot { control, target } => self.apply_cnot(*control, *target),
        }
    }

    pub fn apply_all(&mut self, ops: &[CircuitOp]) -> Result<()> {
        for op in ops {
            self.apply(op)?;
        }
        Ok(())
    }

    /// Probability of measuring 1 on `qubit`: the sum of |amplitude|^2
    /// over basis states whose bit at that qubit is 1.
    pub fn prob_one(&self, qubit: usize) -> Result<f64> {
        let mask = self.bit_mask(qubit)?;
        Ok(self
            .amps
            .iter()
            .enumerate()
            .filter(|(idx, _)| idx & mask != 0)
            .map(|(_, a)| a.norm_sqr())
            .sum())
    }

    /// Draws `shots` measurement outcomes of `qubit` with a seeded,
    /// portable RNG. Identical inputs give identical counts on every
    /// platform.
    pub fn sample(&self, qubit: usize, shots: u64, seed: u64) -> Result<ShotResult> {
        if shots == 0 {
            return Err(Error::ZeroShots);
        }
        let p = self.prob_one(qubit)?;
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let mut ones = 0u64;
        for _ in 0..shots {
            if rng.gen::<f64>() < p {
                ones += 1;
            }
        }
        let mut counts = BTreeMap::new();
        counts.insert(0u8, shots - ones);
        counts.insert(1u8, ones);
        Ok(ShotResult {
            counts,
            shots,
            seed,
            rng_algorithm: RNG_ALGORITHM,
        })
    }
}

/// Measurement record for one qubit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShotResult {
    /// Outcome (0 or 1) to occurrence count; the values sum to `shots`.
    pub counts: BTreeMap<u8, u64>,
    pub shots: u64,
    pub seed: u64,
    /// Which generator produced the samples.
    pub rng_algorithm: &'static str,
}

impl ShotResult {
    pub fn count(&self, outcome: u8) -> u64 {
        self.counts.get(&outcome).copied().unwrap_or(0)
    }

    /// Empirical frequency of outcome 1.
    pub fn frequency_one(&self) -> f64 {
        self.count(1) as f64 / self.shots as f64
    }
}

/// Full-space matrix of an op sequence: the product of each op's
/// 2^n x 2^n matrix in application order (last op leftmost).
///
/// Built by explicit tensor placement, independently of the pair-update
/// engine in [`StateVector`], so the two can cross-check each other.
pub fn circuit_unitary(ops: &[CircuitOp], n: usize) -> Result<Vec<Vec<Complex64>>> {
    if n == 0 || n > MAX_DENSE_QUBITS {
        return Err(Error::DenseMatrixTooLarge {
            n,
            max: MAX_DENSE_QUBITS,
        });
    }
    let dim = 1usize << n;
    let mut acc = identity_matrix(dim);
    for op in ops {
        let full = op_matrix(op, n)?;
        acc = dense_mul(&full, &acc);
    }
    Ok(acc)
}

fn identity_matrix(dim: usize) -> Vec<Vec<Complex64>> {
    let mut m = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Complex64::new(1.0, 0.0);
    }
    m
}

fn op_matrix(op: &CircuitOp, n: usize) -> Result<Vec<Vec<Complex64>>> {
    let dim = 1usize << n;
    let mut m = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    match op {
        CircuitOp::Gate { matrix, target } => {
            if *target >= n {
                return Err(Error::QubitIndexOutOfRange { index: *target, n });
            }
            let mask = 1 << (n - 1 - target);
            let g = matrix.entries();
            for (row, m_row) in m.iter_mut().enumerate() {
                let row_bit = usize::from(row & mask != 0);
                for (col_bit, &entry) in g[row_bit].iter().enumerate() {
                    let col = (row & !mask) | if col_bit == 1 { mask } else { 0 };
                    m_row[col] = entry;
                }
            }
        }
        CircuitOp::Cnot { control, target } => {
            if *control >= n {
                return Err(Error::QubitIndexOutOfRange { index: *control, n });
            }
            if *target >= n {
                return Err(Error::QubitIndexOutOfRange { index: *target, n });
            }
            if control == target {
                return Err(Error::ControlEqualsTarget { index: *control });
            }
            let cmask = 1 << (n - 1 - control);
            let tmask = 1 << (n - 1 - target);
            // The permutation is an involution, so row -> col uses the
            // same bit rule as col -> row.
            for (row, m_row) in m.iter_mut().enumerate() {
                let col = if row & cmask != 0 { row ^ tmask } else { row };
                m_row[col] = Complex64::new(1.0, 0.0);
            }
        }
    }
    Ok(m)
}

fn dense_mul(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let dim = a.len();
    let mut out = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    for r in 0..dim {
        for k in 0..dim {
            let av = a[r][k];
            if av.norm_sqr() == 0.0 {
                continue;
            }
            for c in 0..dim {
                out[r][c] += av * b[k][c];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates;

    const TOL: f64 = 1e-12;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn new_state_is_all_zeros_ket() {
        for n in [1usize, 2, 3] {
            let s = StateVector::new(n).unwrap();
            assert_eq!(s.amplitudes().len(), 1 << n);
            assert!((s.amplitudes()[0] - c(1.0, 0.0)).norm() <= TOL);
            assert!(s.amplitudes()[1..].iter().all(|a| a.norm() <= TOL));
        }
        assert!(StateVector::new(0).is_err());
        assert!(StateVector::new(25).is_err());
    }

    #[test]
    fn x_flips_qubit_one() {
        let mut s = StateVector::new(2).unwrap();
        s.apply_1q(&gates::pauli_x(), 1).unwrap();
        // |01> is index 1 in big-endian order.
        assert!((s.amplitudes()[1] - c(1.0, 0.0)).norm() <= TOL);
    }

    #[test]
    fn identity_leaves_state() {
        let mut s = StateVector::new(2).unwrap();
        s.apply_1q(&gates::rx(0.7), 0).unwrap();
        let before = s.amplitudes().to_vec();
        s.apply_1q(&gates::identity(), 1).unwrap();
        for (a, b) in s.amplitudes().iter().zip(&before) {
            assert!((a - b).norm() <= TOL);
        }
    }

    #[test]
    fn rx_on_first_qubit_of_two() {
        let theta = 0.9f64;
        let mut s = StateVector::new(2).unwrap();
        s.apply_1q(&gates::rx(theta), 0).unwrap();
        // a|00> + b|10> with a = cos(t/2), b = -i sin(t/2).
        assert!((s.amplitudes()[0] - c((theta / 2.0).cos(), 0.0)).norm() <= TOL);
        assert!((s.amplitudes()[2] - c(0.0, -(theta / 2.0).sin())).norm() <= TOL);
    }

    #[test]
    fn cnot_truth_table() {
        let mut s = StateVector::new(2).unwrap();
        s.apply_1q(&gates::pauli_x(), 0).unwrap(); // |10>
        s.apply_cnot(0, 1).unwrap();
        assert!((s.amplitudes()[3] - c(1.0, 0.0)).norm() <= TOL); // |11>

        let mut z = StateVector::new(2).unwrap();
        z.apply_cnot(0, 1).unwrap();
        assert!((z.amplitudes()[0] - c(1.0, 0.0)).norm() <= TOL); // |00> fixed
    }

    #[test]
    fn cnot_spreads_superposition_to_distant_target() {
        // a|000> + b|100> --CNOT(0,2)--> (a, 0, 0, 0, 0, b, 0, 0).
        let theta = 1.1f64;
        let mut s = StateVector::new(3).unwrap();
        s.apply_1q(&gates::rx(theta), 0).unwrap();
        s.apply_cnot(0, 2).unwrap();
        let a = c((theta / 2.0).cos(), 0.0);
        let b = c(0.0, -(theta / 2.0).sin());
        let expected = [a, c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), b, c(0.0, 0.0), c(0.0, 0.0)];
        for (got, want) in s.amplitudes().iter().zip(expected) {
            assert!((got - want).norm() <= TOL);
        }
    }

    #[test]
    fn cnot_is_an_involution() {
        let mut s = StateVector::new(3).unwrap();
        s.apply_1q(&gates::rx(0.4), 0).unwrap();
        s.apply_1q(&gates::fractional_h(0.3).as_unitary(), 1).unwrap();
        let before = s.amplitudes().to_vec();
        s.apply_cnot(1, 2).unwrap();
        s.apply_cnot(1, 2).unwrap();
        // Exact: the double swap restores every amplitude bit for bit.
        assert_eq!(s.amplitudes(), &before[..]);
    }

    #[test]
    fn cnot_rejects_equal_indices() {
        let mut s = StateVector::new(2).unwrap();
        assert!(matches!(
            s.apply_cnot(1, 1),
            Err(Error::ControlEqualsTarget { index: 1 })
        ));
        assert!(s.apply_cnot(0, 2).is_err());
    }

    #[test]
    fn prob_one_examples() {
        let s = StateVector::new(1).unwrap();
        assert_eq!(s.prob_one(0).unwrap(), 0.0);

        // Bell pair: H-CNOT in textbook form uses qubit 0 control.
        let mut bell = StateVector::new(2).unwrap();
        bell.apply_1q(&gates::hadamard(), 0).unwrap();
        bell.apply_cnot(0, 1).unwrap();
        assert!((bell.prob_one(1).unwrap() - 0.5).abs() <= TOL);
    }

    #[test]
    fn prob_one_matches_component_sum() {
        // State (ac, 0, 0, ad, 0, bc, bd, 0): P(q2 = 1) = |ad|^2 + |bc|^2.
        let (theta, phi) = (0.8f64, 2.1f64);
        let mut s = StateVector::new(3).unwrap();
        s.apply_1q(&gates::rx(theta), 0).unwrap();
        s.apply_cnot(0, 2).unwrap();
        s.apply_1q(&gates::rx(phi), 1).unwrap();
        s.apply_cnot(1, 2).unwrap();
        let (a, b) = ((theta / 2.0).cos(), (theta / 2.0).sin());
        let (cc, d) = ((phi / 2.0).cos(), (phi / 2.0).sin());
        let expected = (a * d).powi(2) + (b * cc).powi(2);
        assert!((s.prob_one(2).unwrap() - expected).abs() <= 1e-10);
    }

    #[test]
    fn norm_preserved_by_op_sequences() {
        let mut s = StateVector::new(4).unwrap();
        let ops = [
            CircuitOp::Gate { matrix: gates::rx(0.3), target: 0 },
            CircuitOp::Gate { matrix: gates::hadamard(), target: 2 },
            CircuitOp::Cnot { control: 0, target: 3 },
            CircuitOp::Gate { matrix: gates::fractional_h(0.8).as_unitary(), target: 1 },
            CircuitOp::Cnot { control: 2, target: 1 },
            CircuitOp::Gate { matrix: gates::rz(1.9), target: 3 },
        ];
        s.apply_all(&ops).unwrap();
        assert!((s.norm_sqr() - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn circuit_unitary_of_empty_ops_is_identity() {
        let m = circuit_unitary(&[], 2).unwrap();
        for (r, row) in m.iter().enumerate() {
            for (col, entry) in row.iter().enumerate() {
                let want = if r == col { 1.0 } else { 0.0 };
                assert!((entry - c(want, 0.0)).norm() <= TOL);
            }
        }
    }

    #[test]
    fn circuit_unitary_agrees_with_state_engine() {
        let ops = [
            CircuitOp::Gate { matrix: gates::rx(0.7), target: 0 },
            CircuitOp::Cnot { control: 0, target: 2 },
            CircuitOp::Gate { matrix: gates::fractional_h(0.4).as_unitary(), target: 1 },
            CircuitOp::Cnot { control: 1, target: 2 },
        ];
        let m = circuit_unitary(&ops, 3).unwrap();
        let mut s = StateVector::new(3).unwrap();
        s.apply_all(&ops).unwrap();
        for (row, amp) in s.amplitudes().iter().enumerate() {
            // First column of the matrix is the image of |000>.
            assert!((m[row][0] - amp).norm() <= 1e-10);
        }
    }

    #[test]
    fn circuit_unitary_agrees_on_six_qubits() {
        let ops = [
            CircuitOp::Gate { matrix: gates::hadamard(), target: 0 },
            CircuitOp::Cnot { control: 0, target: 5 },
            CircuitOp::Gate { matrix: gates::rx(1.3), target: 3 },
            CircuitOp::Cnot { control: 3, target: 1 },
            CircuitOp::Gate { matrix: gates::rz(0.6), target: 5 },
            CircuitOp::Cnot { control: 5, target: 2 },
            CircuitOp::Gate { matrix: gates::fractional_h(0.9).as_unitary(), target: 4 },
        ];
        let m = circuit_unitary(&ops, 6).unwrap();
        let mut s = StateVector::new(6).unwrap();
        s.apply_all(&ops).unwrap();
        for (row, amp) in s.amplitudes().iter().enumerate() {
            assert!((m[row][0] - amp).norm() <= 1e-10);
        }
    }

    #[test]
    fn circuit_unitary_rejects_large_registers() {
        assert!(matches!(
            circuit_unitary(&[], 11),
            Err(Error::DenseMatrixTooLarge { .. })
        ));
    }

    #[test]
    fn global_phase_is_unobservable() {
        let phase = Complex64::from_polar(1.0, 1.234);
        let g = gates::rx(0.9);
        let g_phased = g.phase_scaled(phase);
        let mut s1 = StateVector::new(2).unwrap();
        let mut s2 = StateVector::new(2).unwrap();
        s1.apply_1q(&g, 0).unwrap();
        s1.apply_cnot(0, 1).unwrap();
        s2.apply_1q(&g_phased, 0).unwrap();
        s2.apply_cnot(0, 1).unwrap();
        for q in 0..2 {
            let p1 = s1.prob_one(q).unwrap();
            let p2 = s2.prob_one(q).unwrap();
            assert!((p1 - p2).abs() <= 1e-12);
        }
    }

    #[test]
    fn sampling_extremes_and_determinism() {
        let zero = StateVector::new(1).unwrap();
        let r = zero.sample(0, 500, 7).unwrap();
        assert_eq!(r.count(1), 0);
        assert_eq!(r.count(0), 500);

        let mut one = StateVector::new(1).unwrap();
        one.apply_1q(&gates::pauli_x(), 0).unwrap();
        let r1 = one.sample(0, 500, 7).unwrap();
        assert_eq!(r1.count(1), 500);

        let mut half = StateVector::new(1).unwrap();
        half.apply_1q(&gates::hadamard(), 0).unwrap();
        let a = half.sample(0, 10_000, 42).unwrap();
        let b = half.sample(0, 10_000, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rng_algorithm, RNG_ALGORITHM);
        // Binomial bound: within 4 standard errors of p = 0.5.
        assert!((a.frequency_one() - 0.5).abs() <= 4.0 * (0.25f64 / 10_000.0).sqrt());

        assert!(matches!(half.sample(0, 0, 1), Err(Error::ZeroShots)));
    }
}

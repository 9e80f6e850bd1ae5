//! Butcher tableau of Kvaerno's 7-stage ESDIRK 5(4) method.
//!
//! Coefficients from A. Kværnø, "Singly diagonally implicit Runge-Kutta
//! methods with an explicit first stage", BIT Numerical Mathematics 44
//! (2004), method ESDIRK5(4)7L[2]SA. The first stage is explicit, every
//! implicit stage shares the diagonal γ, the scheme is stiffly accurate
//! (the solution weights are the last row of A) and L-stable, and rows six
//! and seven embed a 4th-order companion used for the error estimate.

pub const STAGES: usize = 7;

/// Shared implicit diagonal.
pub const GAMMA: f64 = 0.26;

/// Error-estimator order plus one; drives the step-size controller exponent.
pub const ERROR_ORDER: f64 = 5.0;

/// Lower-triangular stage coefficients, row-major (row i holds a[i][0..=i]).
pub const A: [[f64; STAGES]; STAGES] = [
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.26, GAMMA, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.13, 0.84033320996790809, GAMMA, 0.0, 0.0, 0.0, 0.0],
    [
        0.22371961478320505,
        0.47675532319799699,
        -0.06470895363112615,
        GAMMA,
        0.0,
        0.0,
        0.0,
    ],
    [
        0.16648564323248321,
        0.10450018841591720,
        0.03631482272098715,
        -0.13090704451073998,
        GAMMA,
        0.0,
        0.0,
    ],
    [
        0.13855640231268224,
        0.0,
        -0.04245337201752043,
        0.02446657898003141,
        0.61943039072480676,
        GAMMA,
        0.0,
    ],
    [
        0.13659751177640291,
        0.0,
        -0.05496908796538376,
        -0.04118626728321046,
        0.62993304899016403,
        0.06962479448202728,
        GAMMA,
    ],
];

/// Abscissae c_i = Σ_j a_ij.
pub const C: [f64; STAGES] = [
    0.0,
    0.52,
    1.230333209967908,
    0.8957659843500759,
    0.43639360985864756,
    1.0,
    1.0,
];

/// 5th-order solution weights (stiffly accurate: row 7 of A).
pub const B: [f64; STAGES] = A[6];

/// Embedded 4th-order weights (row 6 of A).
pub const B_HAT: [f64; STAGES] = A[5];

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn row_sums_match_abscissae() {
        for i in 0..STAGES {
            let sum: f64 = A[i].iter().sum();
            assert_abs_diff_eq!(sum, C[i], epsilon = 1e-14);
        }
    }

    #[test]
    fn weights_satisfy_low_order_conditions() {
        let sum_b: f64 = B.iter().sum();
        assert_abs_diff_eq!(sum_b, 1.0, epsilon = 1e-14);
        let sum_bh: f64 = B_HAT.iter().sum();
        assert_abs_diff_eq!(sum_bh, 1.0, epsilon = 1e-14);

        let bc: f64 = (0..STAGES).map(|i| B[i] * C[i]).sum();
        assert_abs_diff_eq!(bc, 0.5, epsilon = 1e-14);
        let bc2: f64 = (0..STAGES).map(|i| B[i] * C[i] * C[i]).sum();
        assert_abs_diff_eq!(bc2, 1.0 / 3.0, epsilon = 1e-14);
        let bc3: f64 = (0..STAGES).map(|i| B[i] * C[i] * C[i] * C[i]).sum();
        assert_abs_diff_eq!(bc3, 0.25, epsilon = 1e-14);
        let bc4: f64 = (0..STAGES).map(|i| B[i] * C[i].powi(4)).sum();
        assert_abs_diff_eq!(bc4, 0.2, epsilon = 1e-14);

        // One deep condition from each order: b·A·c = 1/6, b·A·A·c = 1/24.
        let ac: Vec<f64> = (0..STAGES)
            .map(|i| (0..STAGES).map(|j| A[i][j] * C[j]).sum())
            .collect();
        let bac: f64 = (0..STAGES).map(|i| B[i] * ac[i]).sum();
        assert_abs_diff_eq!(bac, 1.0 / 6.0, epsilon = 1e-14);
        let aac: Vec<f64> = (0..STAGES)
            .map(|i| (0..STAGES).map(|j| A[i][j] * ac[j]).sum())
            .collect();
        let baac: f64 = (0..STAGES).map(|i| B[i] * aac[i]).sum();
        assert_abs_diff_eq!(baac, 1.0 / 24.0, epsilon = 1e-14);
    }

    #[test]
    fn stiffly_accurate_and_singly_diagonal() {
        for i in 1..STAGES {
            assert_eq!(A[i][i], GAMMA);
        }
        assert_eq!(A[0][0], 0.0);
        assert_eq!(C[STAGES - 1], 1.0);
    }
}

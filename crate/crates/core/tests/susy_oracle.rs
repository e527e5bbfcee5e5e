mod common;

use common::*;
use nonassoc::laws::Status;
use nonassoc::susy::{
    build_matrix_supercharges, check_matrix_susy_algebra, discretize, lowest_eigenvalues,
    matrix_hamiltonian, partner_potentials, spectral_pairing_report, MatrixOperator,
    SpectrumConfig, Superpotential,
};

fn superpotentials() -> Vec<Poly<1>> {
    vec![
        Poly::monomial(gr(1), [2]),
        Poly::monomial(gr(1), [3]),
        Poly::monomial(gr(1), [4]).add(&Poly::monomial(gr(-3), [1])),
    ]
}

fn as_free(m: &MatrixOperator) -> FreeMatrix {
    let e = &m.entries;
    [
        [words_of(&e[0][0]), words_of(&e[0][1])],
        [words_of(&e[1][0]), words_of(&e[1][1])],
    ]
}

fn free_commutator(a: &FreeMatrix, b: &FreeMatrix) -> FreeMatrix {
    mat_add(&mat_mul(a, b), &mat_scale(&mat_mul(b, a), &gr(-1)))
}

#[test]
fn oracle_matrix_algebra() {
    let tests = test_polynomials::<1>(5);
    let (q, qbar, h) = free_matrix_susy(1);
    let zero = mat_zero();
    for u in superpotentials() {
        assert!(matrices_agree(&mat_mul(&q, &q), &zero, &u, &tests));
        assert!(matrices_agree(&mat_mul(&qbar, &qbar), &zero, &u, &tests));
        let anti = mat_add(&mat_mul(&qbar, &q), &mat_mul(&q, &qbar));
        assert!(matrices_agree(&anti, &mat_scale(&h, &gr(2)), &u, &tests));
        assert!(matrices_agree(&free_commutator(&q, &h), &zero, &u, &tests));
        assert!(matrices_agree(
            &free_commutator(&qbar, &h),
            &zero,
            &u,
            &tests
        ));
    }
}

#[test]
fn oracle_rejects_flipped_sigma_z() {
    let tests = test_polynomials::<1>(3);
    let (q, qbar, _) = free_matrix_susy(1);
    let (_, _, flipped) = free_matrix_susy(-1);
    let anti = mat_add(&mat_mul(&qbar, &q), &mat_mul(&q, &qbar));
    let u = Poly::monomial(gr(1), [2]);
    assert!(!matrices_agree(
        &anti,
        &mat_scale(&flipped, &gr(2)),
        &u,
        &tests
    ));
}

#[test]
fn engine_operators_match_oracle() {
    let tests = test_polynomials::<1>(4);
    let (q, qbar) = build_matrix_supercharges();
    let h = matrix_hamiltonian(1);
    let (fq, fqbar, fh) = free_matrix_susy(1);
    for u in superpotentials() {
        assert!(matrices_agree(&as_free(&q), &fq, &u, &tests));
        assert!(matrices_agree(&as_free(&qbar), &fqbar, &u, &tests));
        assert!(matrices_agree(&as_free(&h), &fh, &u, &tests));
    }
    assert!(check_matrix_susy_algebra().passed());
}

/// Dense Jacobi eigenvalues: an independent route to the lowest levels of a
/// small discretized Hamiltonian.
#[allow(clippy::needless_range_loop)]
fn jacobi_eigenvalues(diag: &[f64], off: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let mut a = vec![vec![0.0; n]; n];
    for i in 0..n {
        a[i][i] = diag[i];
        if i + 1 < n {
            a[i][i + 1] = off[i];
            a[i + 1][i] = off[i];
        }
    }
    for _sweep in 0..100 {
        let off_norm: f64 = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off_norm < 1e-22 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

#[test]
fn bisection_agrees_with_dense_diagonalization() {
    let partners = partner_potentials(Superpotential::Quadratic);
    let t = discretize(|x| partners.minus(x), (-6.0, 6.0), 120).unwrap();
    let fast = lowest_eigenvalues(&t, 6).unwrap();
    let dense = jacobi_eigenvalues(&t.diag, &t.off);
    for (a, b) in fast.iter().zip(&dense) {
        assert!((a - b).abs() < 1e-8, "{a} vs {b}");
    }
}

#[test]
fn quadratic_spectra_pair_and_match_oscillator_levels() {
    let report = spectral_pairing_report(&SpectrumConfig::default()).unwrap();
    assert_eq!(report.status, Status::Pass);
    let unpaired = report.unpaired.as_ref().unwrap();
    assert_eq!(unpaired.side, "h_plus");
    assert!(unpaired.energy.abs() < 1e-3);
    // H+ = p^2/2 + x^2/2 - 1/2 has levels n, H- has n + 1
    for (k, e) in report.h_plus.iter().enumerate() {
        assert!((e - k as f64).abs() < 1e-3, "H+ level {k}: {e}");
    }
    for (k, e) in report.h_minus.iter().enumerate() {
        assert!((e - (k + 1) as f64).abs() < 1e-3, "H- level {k}: {e}");
    }
}

#[test]
fn pairing_error_shrinks_with_grid() {
    let errors: Vec<f64> = [250, 500, 1000]
        .into_iter()
        .map(|grid| {
            let cfg = SpectrumConfig {
                grid,
                ..SpectrumConfig::default()
            };
            spectral_pairing_report(&cfg).unwrap().max_pairing_error
        })
        .collect();
    assert!(errors[0] > errors[1] && errors[1] > errors[2], "{errors:?}");
}

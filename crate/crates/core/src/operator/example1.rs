//! The supersymmetric operator identities in `Q_M (x) O`.
//!
//! For each catalog operator `L0` the element `L = L0 (x) u0 + L0 (x) u0*` is
//! bracketed against `h = Q + Qbar`.

use num_traits::One;

use super::tensor::{
    build_supercharges, d_operators, hamiltonian_split, hamiltonian_with_sign, slot, TensorElement,
    Weyl3,
};
use crate::laws::ReportBuilder;
use crate::laws::{LawReport, Witness};
use crate::scalar::GaussianRational;

/// `1, x1, p1, x1*p1, V[1,0,0]`.
pub fn example1_catalog() -> Vec<Weyl3> {
    vec![
        Weyl3::one(),
        Weyl3::x(0),
        Weyl3::p(0),
        &Weyl3::x(0) * &Weyl3::p(0),
        Weyl3::dv(0),
    ]
}

/// [`hamiltonian_split`] with the sign of its `V_jj` term flipped.
pub fn corrupted_hamiltonian() -> TensorElement {
    hamiltonian_with_sign(-1)
}

fn lift(l0: &Weyl3) -> TensorElement {
    TensorElement::diagonal(l0.clone(), l0.clone())
}

fn witness(inputs: Vec<String>, lhs: &TensorElement, rhs: &TensorElement) -> Witness {
    Witness {
        inputs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

/// `[L; Q, Q] = [L; Qbar, Qbar] = 0`.
pub fn check_vanishing_brackets(catalog: &[Weyl3]) -> LawReport {
    let (q, qbar) = build_supercharges();
    let mut report = ReportBuilder::new("susy_vanishing_brackets", "split_octonion_operators");
    for (k, l0) in catalog.iter().enumerate() {
        let l = lift(l0);
        for (s, (name, h)) in [("Q,Q", &q), ("Qbar,Qbar", &qbar)].into_iter().enumerate() {
            let value = l.nonassoc_commutator(h, h);
            report.check(value.is_zero(), vec![k, s], || {
                witness(
                    vec![l0.to_string(), name.into()],
                    &value,
                    &TensorElement::zero(),
                )
            });
        }
    }
    report.finish()
}

/// `[L; h, h] = [L; Q, Qbar] + [L; Qbar, Q]
///            = [D_j Dbar_j, L0*] (x) u0* + [Dbar_j D_j, L0] (x) u0`
/// with `L0* = L0` and a sum over `j`.
pub fn check_bracket_split(catalog: &[Weyl3]) -> LawReport {
    let (q, qbar) = build_supercharges();
    let h = &q + &qbar;
    let mut dd = Weyl3::zero();
    let mut dbar_d = Weyl3::zero();
    for j in 0..3 {
        let (d, dbar) = d_operators(j);
        dd = &dd + &(&d * &dbar);
        dbar_d = &dbar_d + &(&dbar * &d);
    }
    let mut report = ReportBuilder::new("susy_bracket_split", "split_octonion_operators");
    for (k, l0) in catalog.iter().enumerate() {
        let l = lift(l0);
        let full = l.nonassoc_commutator(&h, &h);
        let cross = &l.nonassoc_commutator(&q, &qbar) + &l.nonassoc_commutator(&qbar, &q);
        report.check(full == cross, vec![k, 0], || {
            witness(vec![l0.to_string(), "cross terms".into()], &full, &cross)
        });
        let printed = &TensorElement::basis(dd.commutator(l0), slot::U0C)
            + &TensorElement::basis(dbar_d.commutator(l0), slot::U0);
        report.check(full == printed, vec![k, 1], || {
            witness(vec![l0.to_string(), "D Dbar form".into()], &full, &printed)
        });
    }
    report.finish()
}

/// `[AB; h, h] = A [B; h, h] + [A; h, h] B` for `A = A0 (x) 1`, `B = B0 (x) 1`
/// over all ordered catalog pairs.
pub fn check_product_leibniz(catalog: &[Weyl3]) -> LawReport {
    let (q, qbar) = build_supercharges();
    let h = &q + &qbar;
    let mut report = ReportBuilder::new("susy_leibniz_product", "split_octonion_operators");
    let lifted: Vec<TensorElement> = catalog.iter().map(lift).collect();
    let brackets: Vec<TensorElement> = lifted
        .iter()
        .map(|a| a.nonassoc_commutator(&h, &h))
        .collect();
    for (ia, a) in lifted.iter().enumerate() {
        for (ib, b) in lifted.iter().enumerate() {
            let lhs = a.mul(b).nonassoc_commutator(&h, &h);
            let rhs = &a.mul(&brackets[ib]) + &brackets[ia].mul(b);
            report.check(lhs == rhs, vec![ia, ib], || {
                witness(
                    vec![catalog[ia].to_string(), catalog[ib].to_string()],
                    &lhs,
                    &rhs,
                )
            });
        }
    }
    report.finish()
}

/// `1/2 (Q + Qbar)^2 = 1/2 {Qbar, Q} = H`.
pub fn check_hamiltonian_decomposition(hamiltonian: &TensorElement) -> LawReport {
    let (q, qbar) = build_supercharges();
    let h = &q + &qbar;
    let half = GaussianRational::ratio(1, 2);
    let mut report =
        ReportBuilder::new("susy_hamiltonian_decomposition", "split_octonion_operators");
    let square = h.mul(&h).scale(&half);
    report.check(square == *hamiltonian, vec![0], || {
        witness(vec!["(Q+Qbar)^2/2".into()], &square, hamiltonian)
    });
    let anti = qbar.anticommutator(&q).scale(&half);
    report.check(anti == *hamiltonian, vec![1], || {
        witness(vec!["{Qbar,Q}/2".into()], &anti, hamiltonian)
    });
    report.finish()
}

/// `[L, c H] = [L; h, h]` for every catalog entry.
pub fn check_hamilton_equivalence(
    catalog: &[Weyl3],
    hamiltonian: &TensorElement,
    c: &GaussianRational,
    law_id: &str,
) -> LawReport {
    let (q, qbar) = build_supercharges();
    let h = &q + &qbar;
    let scaled = hamiltonian.scale(c);
    let mut report = ReportBuilder::new(law_id, "split_octonion_operators");
    for (k, l0) in catalog.iter().enumerate() {
        let l = lift(l0);
        let lhs = l.commutator(&scaled);
        let rhs = l.nonassoc_commutator(&h, &h);
        report.check(lhs == rhs, vec![k], || {
            witness(vec![l0.to_string()], &lhs, &rhs)
        });
    }
    report.finish()
}

/// All checks on `catalog`, in a fixed order:
///
/// 1. `susy_vanishing_brackets`
/// 2. `susy_bracket_split`
/// 3. `susy_leibniz_product`
/// 4. `susy_hamiltonian_decomposition`
/// 5. `susy_hamilton_equivalence`: `[L, H] = [L; h, h]` with `H = h h / 2`
/// 6. `susy_hamilton_equivalence_unhalved`: `[L, h h] = [L; h, h]`
/// 7. `susy_corrupted_hamiltonian_control`: item 6 with the `V_jj` sign of
///    `H` flipped; expected to fail
pub fn verify_example1(catalog: &[Weyl3]) -> Vec<LawReport> {
    let two = GaussianRational::from_int(2);
    let h = hamiltonian_split();
    vec![
        check_vanishing_brackets(catalog),
        check_bracket_split(catalog),
        check_product_leibniz(catalog),
        check_hamiltonian_decomposition(&h),
        check_hamilton_equivalence(
            catalog,
            &h,
            &GaussianRational::one(),
            "susy_hamilton_equivalence",
        ),
        check_hamilton_equivalence(catalog, &h, &two, "susy_hamilton_equivalence_unhalved"),
        check_hamilton_equivalence(
            catalog,
            &corrupted_hamiltonian(),
            &two,
            "susy_corrupted_hamiltonian_control",
        ),
    ]
}

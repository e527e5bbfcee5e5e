//! Symbolic operators: the Weyl algebra with formal potential derivatives,
//! and its tensor product with the split octonions.

mod example1;
mod tensor;
mod weyl;

pub use example1::{
    check_bracket_split, check_hamilton_equivalence, check_hamiltonian_decomposition,
    check_product_leibniz, check_vanishing_brackets, corrupted_hamiltonian, example1_catalog,
    verify_example1,
};
pub use tensor::{build_supercharges, d_operators, hamiltonian_split, slot, TensorElement, Weyl3};
pub use weyl::{Monomial, MultiIndex, OperatorError, RewriteRules, WeylElement};

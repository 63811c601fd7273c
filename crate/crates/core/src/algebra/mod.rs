//! Basis matrices, unfoldings of `L`, and the rotation-group action.

mod action;
mod basis;
mod table;
mod unfold;

pub use action::{adjoint_action, reduce_to_canonical};
pub use basis::{
    basis, basis_m, basis_p, block_i, block_j, block_r, block_t, m_coefficients, p_coefficients,
    resonant_l, BasisSet,
};
pub use table::{
    commutator_coefficients, commutator_table, decompose_single, table_entry, CommutatorEntry,
    CommutatorTable, TABLE_INDICES,
};
pub use unfold::{
    centralizer_unfolding, homogeneous_reduced, homogeneous_unfolding, reduced_unfolding,
    CentralizerCoords, ReducedCoords, REDUCED_BASIS_INDEX,
};

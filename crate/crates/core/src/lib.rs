//! Descending plane partitions and their Catalan subset.
//!
//! * [`dpp`]: validation, canonical enumeration and counting of DPPs, the
//!   product formula, and the sum-of-entries generating polynomial.
//! * [`qpoly`]: exact polynomials in `q`.
//! * [`catalan`]: Catalan DPPs, DPP paths, 231-avoiding permutations and the
//!   bijection between the first two.
//! * [`trees`]: the four Catalan generating trees and the shape comparison.
//! * [`asm`]: ASMs, monotone triangles, diagonal sequences and TSSCPPs.
//! * [`verify`]: the invariant suites run by the command-line tool.

pub mod asm;
pub mod catalan;
pub mod dpp;
pub mod qpoly;
mod rows;
pub mod trees;
pub mod verify;

pub use asm::{
    asm_to_monotone, enumerate_asms, enumerate_diagonals, enumerate_tsscpps, monotone_to_asm,
    validate_asm, validate_tsscpp, Asm, AsmError, DiagonalFlavor, DiagonalSequence,
    MonotoneTriangle, TsscppBox, TsscppError,
};
pub use catalan::{
    catalan_number, dpp_to_path, enumerate_231_avoiding, enumerate_catalan_dpps, enumerate_paths,
    is_231_avoiding, is_catalan_dpp, path_to_dpp, validate_path, CatalanDpp, CatalanError, DppPath,
    Permutation,
};
pub use dpp::{
    count_dpps, dpp_generating_polynomial, enumerate_dpps, product_formula, q_product_formula,
    sum_of_entries, validate_dpp, Dpp, DppError, DppRecord, StrictShiftedArray,
};
pub use qpoly::{QPolyError, QPolynomial};
pub use trees::{
    abstract_children, build_level, check_isomorphism, dpp_children, lr_maxima, path_children,
    path_parent, perm_children, IsomorphismReport, TreeError, TreeKind, TreeLabel, TreeLevel,
};

//! Explicit Ingham-type zero-density estimate: constants, bounds and the
//! published parameter table.

mod bounds;
mod params;
mod table;
mod terms;

pub use bounds::{
    corollary1_bound, corollary1_coeffs, density_exponent, fx_bound, near_line_check, nt_upper,
    theorem1_bound, DensityCoefficients,
};
pub use params::{table1_row, Table1Row, ZdParams, TABLE1};
pub use table::{
    compare_all, compare_row, compare_with, table1_csv, RowComparison, TABLE1_TOLERANCE,
};
pub use terms::{
    const_c1, const_c2, const_c3, const_c4, const_c5, const_c6, const_k, const_l, frak_a,
    zd_constants, AConstant, KConstant, LConstant, ZdConstants,
};

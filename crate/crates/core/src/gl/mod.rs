//! Finite fields, `GL₂(q)` classes by type, and the `GL₄(2)` unipotent example.

pub mod field;
pub mod gl2;
pub mod gl4;
pub mod matrix;
pub mod params;

pub use field::{FieldElem, GaloisField};
pub use gl2::{
    classify_gl2, coset_table, coset_table_brute_force, general_linear_2, gl2_class_catalog,
    gl2_over_sl2, same_type_commute_check, sl2_cxi_matching, split_predicate_crosscheck,
    CosetTable, GL2ClassRecord, Gl2Matching, Gl2Type,
};
pub use gl4::{gl4_counterexample, Gf2Mat4, Gl4Report};
pub use matrix::MatrixElem;
pub use params::{class_determinant, gl_split_predicate, GLClassParams, MonicPoly};

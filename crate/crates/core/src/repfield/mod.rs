//! Representations of quivers over prime fields: linear algebra, Hom/Ext,
//! Krull–Schmidt labels, enumeration of classes and the counts that feed
//! the Hall tables.

pub mod counts;
pub mod decompose;
pub mod enumerate;
pub mod field;
pub mod rep;

pub use counts::{
    direct_sum_splittings, ext1_dim, ext_classify, flag_count, flag_count_down, hall_count, hall_counts, pair_classes,
    pair_label, PairClass, DEFAULT_BUDGET,
};
pub use decompose::{aut_order, aut_order_direct, decompose, label, Label};
pub use enumerate::{enumerate_classes, orbit_census, ClassRep, EnumConfig};
pub use field::Mat;
pub use rep::{Rep, Subspaces};

//! Characteristic classes of tangent bundles given by Chern profiles.

mod genus;
mod identities;
mod index;
mod profile;

pub use genus::{evaluate_genus, genus_class, genus_number, GenusKind, GenusSpec, GenusValue};
pub use identities::{verify_dimension_identities, DimensionIdentities, Functional, LinearRelation};
pub use index::{
    ch_complexified_tangent, euler_characteristic, eval_polynomial, hodge_from_chi_y, product_rs_index, rs_index,
    signature, ProductIndex, RsIndex,
};
pub use profile::{
    chern_to_pontryagin, chern_to_power_sums, monomial_label, partitions, pontryagin_classes, power_sums_to_chern,
    ChernProfile, Partition, PontryaginVector,
};

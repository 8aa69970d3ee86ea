//! Free groups, the free product ℤ/k ∗ ℤ/k, and lower-central-series tools.

mod artin;
mod h1;
mod identity;
pub mod intlin;
mod magnus;
mod product;
mod word;

pub use artin::{action_from_longitudes, artin_action, longitudes, FreeEndo};
pub use h1::{
    c_vector, full_relations, h1_cert, power_commutator, rewrite_commutator, single_relation, AbelianCert,
    ClassOrder,
};
pub use identity::{commutator_identity_check, CommutatorConvention, IdentityReport};
pub use magnus::{magnus_depth, zeta_embed, MagnusSeries, MAX_DEGREE};
pub use product::{squier_witness, FreeProductWord};
pub use word::FreeWord;

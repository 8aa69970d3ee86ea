//! Presentations, relation checks and membership for the triangle-group images.

mod closure;
mod iso;
mod membership;
mod presentation;

pub use closure::*;
pub use iso::*;
pub use membership::*;
pub use presentation::*;

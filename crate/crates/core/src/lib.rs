//! Classification of superelliptic curve families of small genus by whether
//! the field of moduli is known to be a field of definition.

pub mod classify;
pub mod dataset;
pub mod exact_poly;
pub mod family;
pub mod groups;
pub mod signature;
pub mod verify;

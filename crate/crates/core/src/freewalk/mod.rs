//! Free-group words, Schreier bases of point stabilizers, and voltage
//! coverings of dessins.

mod schreier;
mod voltage;
mod word;

pub use schreier::{schreier_basis, RewriteStep, SchreierData};
pub use voltage::{
    assign_epimorphism, generates, walk_voltage, ElementTable, VoltageAssignment, VoltageFile,
    ELEMENT_LIMIT,
};
pub use word::{FreeWord, Letter};

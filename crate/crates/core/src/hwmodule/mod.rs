//! Simple highest-weight modules as explicit matrices over `Q(v)`.

mod build;
mod freudenthal;
mod shapovalov;
mod tensor;

pub use build::{
    build_module, build_module_with_budget, BasisLabel, HWModule, WeightSpace, DEFAULT_BUDGET,
};
pub use freudenthal::{freudenthal, WeightDiagram};
pub use shapovalov::pair_words;
pub use tensor::{tensor, tensor_power, tensor_power_support, ModuleAction};

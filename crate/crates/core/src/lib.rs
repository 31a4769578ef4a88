//! Exact verification of almost paracontact metric structures in dimension 3.

pub mod error;
pub mod forms;
pub mod frame;
pub mod geometry;
pub mod linalg;
pub mod tensor;

pub use error::{Error, Result};
pub use forms::{FormConvention, ThreeForm};
pub use frame::Frame;
pub use geometry::{lie_bracket, lie_derivative, signature_at, Geometry, Metric};
pub use tensor::{Tensor, VectorField};
pub mod analysis;
pub mod axioms;
pub mod manifest;
pub mod report;
pub mod structure;

pub use axioms::{classify, AxiomReport, Check, Classification, Evidence, StructureClass};
pub use manifest::{load_path, load_str, LoadOptions, Loaded, MetricMode};
pub use structure::ParacontactStructure;
pub use report::{execute, Command, Report, Suite};

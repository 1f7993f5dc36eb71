//! JSON documents: algebra and module specs on the way in, reports on the
//! way out.

mod report;
mod spec;

pub use report::{digest, ReportDocument, REPORT_SCHEMA, TOOL};
pub use spec::{
    AlgebraRefDoc, AlgebraSpec, ArrowDoc, CategoryDoc, CategoryTermDoc, CompositionDoc, ModuleSpec, ModulesDoc,
    MorphismDoc, QuiverDoc, ScalarDoc, StructureDoc, TermDoc,
};

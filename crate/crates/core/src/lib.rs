//! arrangealex: exact computation of fundamental-group presentations and
//! twisted Alexander polynomials of complex line arrangement complements.
//!
//! The pipeline: an arrangement of lines with exact Q(i) coefficients is
//! swept by a generic piecewise-linear path; the resulting marked 2-graph
//! yields a meridian presentation of the complement's fundamental group;
//! Fox calculus over F[t, t^-1] then produces the twisted Alexander
//! polynomials, which are compared against closed-form products and root
//! bounds.

pub mod analysis;
pub mod arrangement;
pub mod checks;
pub mod closed_forms;
pub mod corpus;
pub mod error;
pub mod field;
pub mod fox;
pub mod graph;
pub mod io;
pub mod laurent;
pub mod matrix;
pub mod presentation;
pub mod roots;
pub mod word;

pub use analysis::ArrangementAnalysis;
pub use arrangement::{Arrangement, AffineLine, IncidenceSummary, SingularPoint};
pub use error::{Error, Result};
pub use field::{FieldConfig, FieldElement, GaussianRational, Rational};
pub use laurent::{CanonicalPoly, LaurentPoly};
pub use matrix::{PolyMatrix, SnfResult};
pub use presentation::Presentation;
pub use word::FreeWord;

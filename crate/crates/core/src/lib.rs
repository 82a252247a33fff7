pub mod arith;
pub mod error;
pub mod extension;
pub mod field;
pub mod io;
pub mod oracle;
pub mod poly;
pub mod quasisym;

pub use error::{Error, Result};
pub use field::{FFElement, FieldCtx};
pub use poly::Poly;

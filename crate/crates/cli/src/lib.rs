//! Front end for `mustafin-core`: configuration documents, serializable
//! reports, fixed-width tables and oracle verification runs.

pub mod document;
pub mod error;
pub mod report;
pub mod table;
pub mod verify;

pub mod algebra;
pub mod boros_moll;
pub mod bounds;
pub mod certificates;
pub mod criteria;
pub mod error;
pub mod report;
pub mod seq;

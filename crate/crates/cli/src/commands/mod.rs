pub mod batch;
pub mod eval;
pub mod example;
pub mod spreadpoly;
pub mod verify;

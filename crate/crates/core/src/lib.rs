pub mod error;
pub mod exact_arith;
pub mod linalg;
pub mod multipoly;
pub mod wreath;
pub mod tableaux;
pub mod specht;
pub mod idempotents;
pub mod dmodule;
pub mod verify;
pub mod cli;

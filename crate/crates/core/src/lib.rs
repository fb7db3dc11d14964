pub mod partitions;
pub mod schur;
pub mod series;
pub mod characters;
pub mod cli;

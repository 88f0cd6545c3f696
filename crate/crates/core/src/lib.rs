#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod cli;
pub mod codes;
pub mod constructions;
pub mod graph;
pub mod io;
pub mod search;
pub mod spectral;

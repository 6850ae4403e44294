pub mod cli;
pub mod enumerate;
pub mod error;
pub mod formats;
pub mod game;
pub mod graph;
pub mod matching;
pub mod solver;
pub mod strategy;
pub mod suite;

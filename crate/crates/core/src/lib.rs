pub mod error;
pub mod fraccalc;
pub mod specialfn;
pub mod stefan;
pub mod verify;

pub use error::{Error, Result};
pub use stefan::{
    DimensionlessConfig, Flavor, FrontCoefficient, PhaseConfig, PhaseInputs, SolutionTriple,
};
pub use verify::{LimitInterchange, ResidualReport, SweepRow};

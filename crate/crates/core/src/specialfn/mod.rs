//! Special functions: Gamma, error functions and the Wright family.

mod dd;
mod erf;
mod gamma;
mod wright;

pub use dd::DoubleDouble;
pub use erf::{erf, erfc, erfcx};
pub use gamma::{gamma, rgamma};
pub use wright::{
    mainardi, mittag_leffler, one_minus_wright, wright, wright_dx, wright_ratio, wright_scaled,
    wright_series, Scaled, WrightArgs, MAX_SERIES_TERMS,
};

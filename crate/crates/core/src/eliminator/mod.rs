//! Blank-endmarker elimination.

pub mod eliminate;
pub mod machines;
pub mod stepper;

pub use eliminate::{eliminate, run_eliminated, ElimLimits, ElimStats, Eliminated};
pub use machines::{as_bem, BemError, BemMachine};
pub use stepper::{run_direct, with_endmarker, BemOutput, DirectRun, MachineStepper, StepResult};

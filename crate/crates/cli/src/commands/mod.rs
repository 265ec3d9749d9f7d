mod cohomology;
mod heisenberg_verify;
mod monopole;
mod pell;
mod stabilizer;
mod torus_check;

pub use cohomology::{cmd_cohomology, resolve_instance};
pub use heisenberg_verify::{cmd_verify_heisenberg, default_grid as heisenberg_default_grid};
pub use monopole::{cmd_monopole, parse_q};
pub use pell::cmd_pell;
pub use stabilizer::cmd_stabilizer;
pub use torus_check::cmd_torus_check;

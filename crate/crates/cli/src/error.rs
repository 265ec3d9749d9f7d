use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Quad(#[from] quad_field::QuadError),
    #[error(transparent)]
    Heis(#[from] heisenberg::HeisError),
    #[error(transparent)]
    Gauge(#[from] gauge::GaugeError),
    #[error(transparent)]
    Lazy(#[from] hopf_lazy::LazyError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Every error is a configuration error; tolerance failures are reports, not errors.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

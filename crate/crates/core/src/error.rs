use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} = {value} is outside the domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("non-finite integrand at theta = {theta}")]
    NonFiniteIntegrand { theta: f64 },

    #[error("perturbation must vanish at theta = 0, got {value}")]
    PerturbationBoundary { value: f64 },

    #[error("tridiagonal solve produced a non-finite value at row {row}")]
    SolverFailure { row: usize },

    #[error("radial profile line {line}: {message}")]
    ProfileFormat { line: usize, message: String },

    #[error("invalid radial profile: {0}")]
    InvalidProfile(String),

    #[error("radial function check failed: {0}")]
    InvalidRadialFunction(String),

    #[error("GeoJSON parse error: {0}")]
    GeoJsonParse(String),

    #[error("GeoJSON feature {feature}: coordinate ({lon}, {lat}) out of range")]
    CoordinateRange { feature: usize, lon: f64, lat: f64 },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

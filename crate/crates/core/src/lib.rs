//! Finite element kernels for scalar diffusion-convection-reaction problems
//! on triangulated polygons, with two stabilized nonconforming discretizations
//! (Crouzeix-Raviart with upwind faces, interior-penalty DG with symmetrization
//! parameter theta) and an analysis layer that measures discrete inf-sup
//! constants, consistency residuals, Strang-type error bounds and the duality
//! (Aubin-Nitsche) decomposition on manufactured problems.

pub mod analysis;
pub mod assembly;
pub mod fespace;
pub mod geom;
pub mod linalg;
pub mod mesh;
pub mod problem;
pub mod quadrature;
pub mod study;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("unsupported polynomial degree {0} (quadrature tables go up to degree 2k+2 = 10, k <= 4)")]
    UnsupportedDegree(usize),
    #[error("numerically singular system: {0}")]
    SingularSystem(String),
    #[error("rank-deficient or indefinite Gram matrix: {0}")]
    RankDeficient(String),
    #[error("missing exact solution on problem '{0}'")]
    MissingExactSolution(String),
    #[error("missing adjoint exact solution on problem '{0}'")]
    MissingAdjointSolution(String),
    #[error("invalid manufactured solution: {0}")]
    InvalidManufacturedSolution(String),
    #[error("mesh format error: {0}")]
    MeshFormat(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

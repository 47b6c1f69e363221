//! Harmonic shears of the `Fc` and `Fn` conformal families, their
//! Weierstrass–Enneper lifts to minimal graphs, and numerical checks of the
//! resulting geometry.

pub mod error;
pub mod families;
pub mod lift;
pub mod mesh;
pub mod partial_fraction;
pub mod quadrature;
pub mod shear;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use families::{ComplexValue, ConformalFamily, Dilatation, DiskPoint, SquareRoot};
pub use lift::{MinimalGraphPoint, MinimalLift};
pub use mesh::{DiskGrid, MeshFormat, SurfaceMesh};
pub use quadrature::{PathStrategy, QuadratureConfig};
pub use shear::{HarmonicShear, Provenance, ShearSpec};
pub use verify::{CheckResult, VerificationReport};

//! Exact computation of SL2(C) character varieties of twist knots and of the
//! 2-bridge knots b(p,3), built on Chebyshev polynomials.
//!
//! The crate is layered bottom-up:
//!
//! * [`poly`]: exact univariate, bivariate and Laurent polynomials over
//!   arbitrary-precision integers, with exact division and gcd.
//! * [`chebyshev`]: Chebyshev polynomials `S_n`, `T_n` and their alternating
//!   sums.
//! * [`twist`]: defining polynomials of twist knot character varieties in the
//!   trace and skein coordinate systems, the maps between them, and the
//!   identities relating them.
//! * [`bridge`]: the `Phi_w` polynomial of b(p,3), its recursive and closed
//!   forms, and the degree-parity/gcd irreducibility certificate.
//! * [`oracle`]: an independent route through symbolic Riley representations
//!   over `Z[s, 1/s][u]`.
//! * [`suite`]: named verification suites aggregating all of the above.

pub mod bridge;
pub mod chebyshev;
pub mod error;
pub mod oracle;
pub mod poly;
pub mod suite;
pub mod twist;

pub use bridge::{BridgeParams, BridgeWord, IrreducibilityReport, Verdict};
pub use error::{Error, Result};
pub use poly::{BiPoly, IdentityCheck, LaurentBi, UniPoly, Var};
pub use twist::{CoordSystem, TwistKnot};

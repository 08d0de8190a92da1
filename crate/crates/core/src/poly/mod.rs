//! Exact polynomial arithmetic over arbitrary-precision integers.
//!
//! [`UniPoly`] is dense, [`BiPoly`] and [`LaurentBi`] are sparse term maps.
//! All three keep a canonical form (no stored zeros, no trailing zeros), so
//! structural equality is polynomial equality.

mod bi;
mod json;
mod laurent;
mod uni;

use std::fmt;

pub use bi::BiPoly;
pub use json::{BiPolyJson, UniPolyJson};
pub use laurent::LaurentBi;
pub use uni::{uni_gcd, UniPoly};

use crate::error::Error;

/// Variable tags used across the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
    U,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::U => "u",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "x" => Ok(Var::X),
            "y" => Ok(Var::Y),
            "z" => Ok(Var::Z),
            "u" => Ok(Var::U),
            other => Err(Error::Decode(format!("unknown variable `{other}`"))),
        }
    }
}

/// Polynomial types that can report whether they vanish.
pub trait Zeroable {
    fn is_zero(&self) -> bool;
}

impl Zeroable for UniPoly {
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
}

impl Zeroable for BiPoly {
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }
}

/// Outcome of checking an identity `lhs = rhs`: the exact difference
/// `lhs - rhs`, which vanishes iff the identity holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck<P> {
    pub difference: P,
}

impl<P: Zeroable> IdentityCheck<P> {
    pub fn holds(&self) -> bool {
        self.difference.is_zero()
    }
}

impl IdentityCheck<UniPoly> {
    pub fn new(lhs: &UniPoly, rhs: &UniPoly) -> Self {
        IdentityCheck { difference: lhs - rhs }
    }
}

impl IdentityCheck<BiPoly> {
    pub fn new(lhs: &BiPoly, rhs: &BiPoly) -> Self {
        IdentityCheck { difference: lhs - rhs }
    }
}

/// Derives the owned/borrowed operator combinations from the `&a op &b` impl.
macro_rules! forward_binops {
    ($t:ty) => {
        forward_binops!(@one $t, Add, add);
        forward_binops!(@one $t, Sub, sub);
        forward_binops!(@one $t, Mul, mul);

        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }

        impl std::ops::AddAssign<&$t> for $t {
            fn add_assign(&mut self, rhs: &$t) {
                *self = &*self + rhs;
            }
        }

        impl std::ops::SubAssign<&$t> for $t {
            fn sub_assign(&mut self, rhs: &$t) {
                *self = &*self - rhs;
            }
        }
    };
    (@one $t:ty, $tr:ident, $m:ident) => {
        impl std::ops::$tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(&self, &rhs)
            }
        }
        impl std::ops::$tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                std::ops::$tr::$m(&self, rhs)
            }
        }
        impl std::ops::$tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binops;

/// Writes `coeff * mono` as the next summand of a rendered polynomial.
pub(crate) fn write_term(
    out: &mut String,
    coeff: &num_bigint::BigInt,
    mono: &str,
) {
    use num_traits::{One, Signed};
    let neg = coeff.is_negative();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let mag = coeff.abs();
    if mono.is_empty() {
        out.push_str(&mag.to_string());
    } else if mag.is_one() {
        out.push_str(mono);
    } else {
        out.push_str(&mag.to_string());
        out.push('*');
        out.push_str(mono);
    }
}

pub(crate) fn power_str(var: Var, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.name().to_string(),
        _ => format!("{}^{}", var.name(), e),
    }
}

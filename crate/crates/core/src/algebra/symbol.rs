use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Indeterminates of the coefficient field.
///
/// The first seven are the Hamiltonian coefficients, `H` is the energy
/// constant `h`, `Alpha` parametrizes the one-parameter quartic family,
/// `P` is the resonance parameter when it is kept symbolic, and
/// `Delta`/`Gamma`/`Mu` are the free parameters of local Galois families,
/// and `G2`/`G3` are free Weierstrass invariants.
/// `Var` is reserved for the main variable of univariate polynomials while
/// they pass through multivariate gcd computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sym {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    Alpha,
    P,
    Delta,
    Gamma,
    Mu,
    G2,
    G3,
    Var,
}

pub const NSYMS: usize = 16;

impl Sym {
    pub const ALL: [Sym; NSYMS] = [
        Sym::A,
        Sym::B,
        Sym::C,
        Sym::D,
        Sym::E,
        Sym::F,
        Sym::G,
        Sym::H,
        Sym::Alpha,
        Sym::P,
        Sym::Delta,
        Sym::Gamma,
        Sym::Mu,
        Sym::G2,
        Sym::G3,
        Sym::Var,
    ];

    /// The seven Hamiltonian coefficients in order.
    pub const COEFFS: [Sym; 7] = [Sym::A, Sym::B, Sym::C, Sym::D, Sym::E, Sym::F, Sym::G];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Sym::A => "A",
            Sym::B => "B",
            Sym::C => "C",
            Sym::D => "D",
            Sym::E => "E",
            Sym::F => "F",
            Sym::G => "G",
            Sym::H => "h",
            Sym::Alpha => "alpha",
            Sym::P => "p",
            Sym::Delta => "delta",
            Sym::Gamma => "gamma",
            Sym::Mu => "mu",
            Sym::G2 => "g2",
            Sym::G3 => "g3",
            Sym::Var => "v",
        }
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sym {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Sym::ALL.iter().copied().find(|sym| sym.name() == s).ok_or(())
    }
}

/// Tag of the independent variable of a univariate object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Var {
    Z,
    X,
    T,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::Z => "z",
            Var::X => "x",
            Var::T => "t",
        }
    }

    /// Chart on the other side of `x = 1/z`.
    pub fn reciprocal(self) -> Var {
        match self {
            Var::Z => Var::X,
            Var::X => Var::Z,
            Var::T => Var::T,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

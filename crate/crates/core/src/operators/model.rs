use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::algebra::{int, IntVec, Rat};
use crate::{Error, Result};

/// Named model families. `Custom` covers arbitrary `α`/`β`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Preset {
    Hermite,
    Laguerre,
    Jacobi,
    Bessel,
    Sutherland,
    Custom,
}

impl Preset {
    pub const TABLE: [Preset; 5] = [
        Preset::Hermite,
        Preset::Laguerre,
        Preset::Jacobi,
        Preset::Bessel,
        Preset::Sutherland,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Hermite => "hermite",
            Preset::Laguerre => "laguerre",
            Preset::Jacobi => "jacobi",
            Preset::Bessel => "bessel",
            Preset::Sutherland => "sutherland",
            Preset::Custom => "custom",
        }
    }

    /// One-particle groundstate `ψ₀(x)`, for documentation only.
    pub fn psi0_doc(self) -> &'static str {
        match self {
            Preset::Hermite => "exp(-x^2/2)",
            Preset::Laguerre => "x^a exp(-x^2/2)",
            Preset::Jacobi => "sin(x/2)^(a+1/2) cos(x/2)^(b+1/2)",
            Preset::Bessel => "exp(-b exp(-x) - a x)",
            Preset::Sutherland | Preset::Custom => "",
        }
    }

    /// Change of variables `z(x)`, for documentation only.
    pub fn z_doc(self) -> &'static str {
        match self {
            Preset::Hermite => "x",
            Preset::Laguerre => "x^2",
            Preset::Jacobi => "cos x",
            Preset::Bessel => "exp(x)",
            Preset::Sutherland => "exp(i x)",
            Preset::Custom => "",
        }
    }

    /// Whether the preset takes the parameter `a` / `b`.
    pub fn uses_params(self) -> (bool, bool) {
        match self {
            Preset::Laguerre => (true, false),
            Preset::Jacobi | Preset::Bessel => (true, true),
            _ => (false, false),
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "hermite" | "calogero" => Preset::Hermite,
            "laguerre" => Preset::Laguerre,
            "jacobi" => Preset::Jacobi,
            "bessel" => Preset::Bessel,
            "sutherland" => Preset::Sutherland,
            "custom" => Preset::Custom,
            other => return Err(Error::invalid(format!("unknown preset '{other}'"))),
        })
    }
}

/// Overall sign in front of the reduced operator. `Minus` is the
/// groundstate conjugation `Ψ₀⁻¹(H − E₀)Ψ₀`, whose spectrum on the
/// Calogero model is `2|n|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> Rat {
        match self {
            Sign::Plus => int(1),
            Sign::Minus => int(-1),
        }
    }
}

/// An operator `Σ α(z_j)∂_j² + Σ β(z_j)∂_j + 2κ Σ_{j<k} (α(z_j)∂_j − α(z_k)∂_k)/(z_j − z_k)`
/// with `α(z) = α₂z² + α₁z + α₀` and `β(z) = β₁z + β₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelSpec {
    pub nvars: usize,
    pub kappa: Rat,
    /// `(α₂, α₁, α₀)`
    pub alpha: [Rat; 3],
    /// `(β₁, β₀)`
    pub beta: [Rat; 2],
    pub preset: Preset,
    /// Preset parameters `(a, b)` where applicable.
    pub params: Vec<(&'static str, Rat)>,
}

impl ModelSpec {
    pub fn custom(nvars: usize, kappa: Rat, alpha: [Rat; 3], beta: [Rat; 2]) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::invalid("N must be at least 1"));
        }
        if alpha.iter().all(Zero::is_zero) {
            return Err(Error::invalid("alpha must not vanish identically"));
        }
        Ok(ModelSpec {
            nvars,
            kappa,
            alpha,
            beta,
            preset: Preset::Custom,
            params: Vec::new(),
        })
    }

    /// A named preset; `a` and `b` are ignored where unused.
    pub fn preset(preset: Preset, nvars: usize, kappa: Rat, a: Rat, b: Rat) -> Result<Self> {
        let one = || int(1);
        let z = Rat::zero;
        let (alpha, beta) = match preset {
            Preset::Hermite => ([z(), z(), one()], [int(-2), z()]),
            Preset::Laguerre => ([z(), one(), z()], [int(-1), &a + int(1)]),
            Preset::Jacobi => ([int(-1), z(), one()], [-(&a + &b + int(2)), &b - &a]),
            Preset::Bessel => ([one(), z(), z()], [int(1) - &a * int(2), &b * int(2)]),
            Preset::Sutherland => ([int(-1), z(), z()], [int(-1), z()]),
            Preset::Custom => {
                return Err(Error::invalid("custom models need explicit alpha and beta"))
            }
        };
        let mut spec = ModelSpec::custom(nvars, kappa, alpha, beta)?;
        spec.preset = preset;
        let (ua, ub) = preset.uses_params();
        if ua {
            spec.params.push(("a", a));
        }
        if ub {
            spec.params.push(("b", b));
        }
        Ok(spec)
    }

    /// The Calogero model: the Hermite preset.
    pub fn calogero(nvars: usize, kappa: Rat) -> Self {
        Self::preset(Preset::Hermite, nvars, kappa, Rat::zero(), Rat::zero())
            .expect("hermite preset is valid")
    }

    /// Degree of `α` as a polynomial.
    pub fn alpha_degree(&self) -> u32 {
        match self.alpha.iter().position(|c| !c.is_zero()) {
            Some(0) => 2,
            Some(1) => 1,
            _ => 0,
        }
    }

    /// `α_p`, the coefficient of `z^p` in `α`.
    pub fn alpha_coeff(&self, p: u32) -> &Rat {
        &self.alpha[2 - p as usize]
    }

    pub fn check_index(&self, n: &IntVec) -> Result<()> {
        Error::check_len(self.nvars, n.len())
    }
}

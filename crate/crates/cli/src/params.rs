//! Natural-unit rational arguments and their integer encodings.

use clap::Args;
use twistoid::{
    DicosmAxialParams, DicosmDiagonalParams, Error, ManifoldKind, Rational, TetracosmParams,
    TricosmParams, TwistoidParams,
};

fn rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| format!("'{s}' is not a rational of the form n or n/d"))
}

/// Twistoid parameters in natural units. Which ones are required depends on the manifold.
#[derive(Args, Debug, Clone, Default)]
pub struct ParamArgs {
    /// Length of the translation of σ₁ (dicosm axial, tetracosm)
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub c: Option<Rational>,
    /// Diagonal dicosm: c = n·√2/2
    #[arg(long)]
    pub n: Option<i64>,
    /// Tricosm: c = m/√3
    #[arg(long)]
    pub m: Option<i64>,
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub p1: Option<Rational>,
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub p2: Option<Rational>,
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub p3: Option<Rational>,
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub q3: Option<Rational>,
    /// Tricosm offset along v₁ = (2,−1,−1)/3
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<i64>,
    /// Tricosm offset along v₂ = (1,1,−2)/3
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<i64>,
    /// Tetracosm axis offset (p, q)
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub p: Option<Rational>,
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub q: Option<Rational>,
}

fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T, Error> {
    v.ok_or_else(|| Error::InvalidParameters(format!("missing --{name}")))
}

/// `scale · value` as an integer, or an error naming the required granularity.
fn scaled(v: Option<Rational>, name: &str, scale: i64) -> Result<i64, Error> {
    let x = need(v, name)? * Rational::from_integer(scale);
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::InvalidParameters(format!(
            "{name} must be a multiple of 1/{scale}"
        )))
    }
}

impl ParamArgs {
    pub fn encode(&self, kind: ManifoldKind) -> Result<TwistoidParams, Error> {
        Ok(match kind {
            ManifoldKind::DicosmAxial => DicosmAxialParams::new(
                scaled(self.c, "c", 1)?,
                scaled(self.p1, "p1", 2)?,
                scaled(self.p2, "p2", 2)?,
                scaled(self.p3, "p3", 2)?,
                scaled(self.q3, "q3", 2)?,
            )
            .into(),
            ManifoldKind::DicosmDiagonal => DicosmDiagonalParams::new(
                need(self.n, "n")?,
                scaled(self.p1, "p1", 4)?,
                scaled(self.p2, "p2", 4)?,
                scaled(self.p3, "p3", 4)?,
                scaled(self.q3, "q3", 2)?,
            )
            .into(),
            ManifoldKind::Tricosm => {
                TricosmParams::new(need(self.m, "m")?, need(self.a, "a")?, need(self.b, "b")?).into()
            }
            ManifoldKind::Tetracosm => TetracosmParams::new(
                scaled(self.c, "c", 1)?,
                scaled(self.p, "p", 2)?,
                scaled(self.q, "q", 2)?,
            )
            .into(),
            ManifoldKind::Hexacosm => TwistoidParams::Hexacosm,
        })
    }
}

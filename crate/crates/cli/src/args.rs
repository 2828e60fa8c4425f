use clap::{Args, Parser, Subcommand};
use distalg_core::{Format, VariantTag};

#[derive(Debug, Parser)]
#[command(name = "distalg", version, about = "Exact algebra of piecewise-smooth functions and delta combinations")]
pub struct Cli {
    /// Output format: text, latex or json.
    #[arg(long, short, global = true, default_value = "text")]
    pub mode: Format,

    #[command(subcommand)]
    pub command: Command,
}

/// Distributions not given as arguments are read from standard input,
/// one per non-empty line.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Noncommutative product of two distributions.
    Mul {
        #[arg(long, default_value = "star")]
        variant: VariantTag,
        #[arg(allow_hyphen_values = true)]
        f: Option<String>,
        #[arg(allow_hyphen_values = true)]
        g: Option<String>,
    },
    /// Distributional derivative.
    Diff {
        #[arg(short, default_value_t = 1)]
        n: u32,
        #[arg(allow_hyphen_values = true)]
        dist: Option<String>,
    },
    /// Exact antiderivative; the leftmost regular piece has zero constant term.
    Antideriv {
        #[arg(allow_hyphen_values = true)]
        dist: Option<String>,
    },
    /// Commutator `F*G - G*F`.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        f: Option<String>,
        #[arg(allow_hyphen_values = true)]
        g: Option<String>,
    },
    /// Pairing with a bump test function.
    Action {
        #[command(flatten)]
        quad: Quadrature,
        #[arg(allow_hyphen_values = true)]
        dist: Option<String>,
    },
    /// Limit of `<F G(x + eps), t>` as `eps -> 0+`.
    Oracle {
        #[command(flatten)]
        quad: Quadrature,
        /// Comma-separated, strictly decreasing.
        #[arg(long, default_value = "1e-2,1e-3,1e-4")]
        eps_schedule: String,
        /// last, richardson (last two values) or richardson-all.
        #[arg(long, default_value = "richardson")]
        extrapolation: String,
        #[arg(allow_hyphen_values = true)]
        f: Option<String>,
        #[arg(allow_hyphen_values = true)]
        g: Option<String>,
    },
    /// Prints the confined form of a linear ODE.
    Confine {
        #[command(flatten)]
        ode: OdeArgs,
    },
    /// Residual of the confined equation for a candidate distribution.
    Residual {
        #[command(flatten)]
        ode: OdeArgs,
        #[arg(allow_hyphen_values = true)]
        dist: Option<String>,
    },
    /// Delta terms produced by differentiating `H(x - a)*psi`.
    ParticularRhs {
        /// `a_n,...,a_0;f`
        #[arg(long)]
        ode: String,
        /// Boundary values `psi(a), psi'(a), ...`, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        values: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        at: String,
    },
    /// Confines `psi_u` to the interval and checks the residual.
    Verify {
        #[command(flatten)]
        ode: OdeArgs,
        /// Classical solution on the whole line, a smooth expression.
        #[arg(long)]
        psi_u: String,
    },
    /// Re-prints a distribution in normal form.
    Fmt {
        #[arg(allow_hyphen_values = true)]
        dist: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct Quadrature {
    /// Bump `a,b,c`: support ]a, b[, amplitude c.
    #[arg(long, allow_hyphen_values = true)]
    pub bump: String,
    /// Gauss-Legendre nodes per smooth interval.
    #[arg(long, env = "DISTALG_QUAD_NODES", default_value_t = distalg_core::weak::DEFAULT_NODES)]
    pub quad_nodes: usize,
}

#[derive(Debug, Args)]
pub struct OdeArgs {
    /// `a_n,...,a_0;f`, coefficients from the highest derivative down.
    #[arg(long)]
    pub ode: String,
    /// `a` for ]a, oo[ or `a,b` for ]a, b[.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub interval: String,
}

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use g2dual::verify::{
    cmd_branch, cmd_identities, cmd_oracle, cmd_tables, BranchRule, DepthConfig, OutputFormat,
};

/// Reproduces the exponent tables and checks the dimension identities of
/// the exceptional dual pairs with one member of type G2.
#[derive(Parser, Debug)]
#[command(name = "g2dual", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text, env = "G2DUAL_FORMAT")]
    format: Format,

    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0, env = "G2DUAL_JOBS")]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exponent tables and restricted-root data.
    Tables,
    /// K̃ and K' sequences, the V_{a,b} grid, branchings, quaternionic K-types.
    Identities(Depths),
    /// Full character-restriction oracles for V(nω).
    Oracle(Depths),
    /// Constituents of one branching rule.
    Branch {
        /// sp-to-gl, gl-to-glgl, spin-to-gl, sp8-su2l, su8-su2l or vn0-to-sp6.
        rule: String,
        /// Rank parameter for the Levi rules.
        #[arg(short)]
        m: Option<usize>,
        #[arg(short)]
        n: u32,
    },
}

#[derive(Args, Debug)]
struct Depths {
    #[arg(long, default_value_t = DepthConfig::default().e6, env = "G2DUAL_DEPTH_E6")]
    depth_e6: u32,
    #[arg(long, default_value_t = DepthConfig::default().e7, env = "G2DUAL_DEPTH_E7")]
    depth_e7: u32,
    #[arg(long, default_value_t = DepthConfig::default().e8, env = "G2DUAL_DEPTH_E8")]
    depth_e8: u32,
    /// Largest a + b in the V_{a,b} grid.
    #[arg(long, default_value_t = DepthConfig::default().lemma, env = "G2DUAL_DEPTH_LEMMA")]
    depth_lemma: u32,
}

impl Depths {
    fn config(&self) -> DepthConfig {
        DepthConfig {
            e6: self.depth_e6,
            e7: self.depth_e7,
            e8: self.depth_e8,
            lemma: self.depth_lemma,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        }
    }
}

fn run(cli: Cli) -> Result<bool, g2dual::Error> {
    let format = cli.format.into();
    let (text, passed) = match cli.command {
        Command::Tables => {
            let r = cmd_tables();
            (r.render(format), r.passed())
        }
        Command::Identities(d) => {
            let r = cmd_identities(&d.config())?;
            (r.render(format), r.passed())
        }
        Command::Oracle(d) => {
            let r = cmd_oracle(&d.config())?;
            (r.render(format), r.passed())
        }
        Command::Branch { rule, m, n } => {
            let listing = cmd_branch(rule.parse::<BranchRule>()?, m, n)?;
            (listing.render(format), listing.passed())
        }
    };
    print!("{text}");
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

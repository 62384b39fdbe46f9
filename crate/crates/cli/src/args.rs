use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "qkrull", version, about = "q-Krull dimension and q-theory of k[X]/I over prime fields")]
pub struct Cli {
    /// Print the JSON schemas of the analyze, query and verify outputs.
    #[arg(long)]
    pub json_schema: bool,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Full analysis of a ring file.
    Analyze {
        file: PathBuf,
        /// Human-readable summary instead of JSON.
        #[arg(long)]
        pretty: bool,
    },
    /// One question about a ring file.
    Query {
        file: PathBuf,
        #[command(subcommand)]
        query: Query,
    },
    /// DOT graph of the monomial primes containing the defining ideal.
    Dot { file: PathBuf },
    /// Runs the property suite over a seeded corpus.
    Verify(VerifyArgs),
    /// Parses a ring file and prints it in canonical form.
    Fmt { file: PathBuf },
}

/// IDEAL arguments are a comma-separated generator list or the name of an
/// ideal declared in the file. Polynomials over `R[t]` use the variable
/// named by `extend`.
#[derive(Subcommand, Debug)]
pub enum Query {
    Dense {
        ideal: String,
    },
    Semiregular {
        ideal: String,
    },
    #[command(name = "qclosure-member")]
    QclosureMember {
        ideal: String,
        element: String,
    },
    Qclosure {
        ideal: String,
    },
    Ann {
        ideal: String,
    },
    /// Height of the prime generated by PRIME.
    Height {
        prime: String,
    },
    /// Analysis of `R[t]`.
    Extend,
    #[command(name = "dm-check")]
    DmCheck {
        g: String,
        f: String,
    },
    #[command(name = "content-lemma")]
    ContentLemma {
        g: String,
        f: String,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Number of random rings.
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// Properties to run (comma-separated or repeated); all when absent.
    #[arg(long, value_delimiter = ',')]
    pub suite: Vec<String>,
    /// Named rings to include (comma-separated); `none` for no named rings.
    #[arg(long, value_delimiter = ',')]
    pub families: Vec<String>,
    /// Content-lemma draws per named ring.
    #[arg(long)]
    pub draws: Option<usize>,
    /// Content-lemma draws per random ring.
    #[arg(long)]
    pub random_draws: Option<usize>,
    /// Table instead of JSON.
    #[arg(long)]
    pub pretty: bool,
    /// Compare the JSON report against this file; any difference fails.
    #[arg(long)]
    pub expect: Option<PathBuf>,
    /// Also write the JSON report to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

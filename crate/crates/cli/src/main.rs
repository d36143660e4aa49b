use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use affine_klr::brauer::{self, BrauerGraph, DecompOptions};
use affine_klr::{
    build_quiver, classify, graded_dim, graded_dim_total, max_plus, orbit_representative, t_subquiver, Charges,
    FieldParams, GdimOptions, LaurentPoly, LevelKDominant, RootVector, TClass,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

mod graph_file;
mod render;

#[derive(Parser)]
#[command(name = "aklr", version, about = "Weights, quivers and representation type for cyclotomic KLR algebras of affine type A")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum TArg {
    Two,
    MinusTwo,
    SignEll,
    Other,
}

impl From<TArg> for TClass {
    fn from(t: TArg) -> Self {
        match t {
            TArg::Two => TClass::Two,
            TArg::MinusTwo => TClass::MinusTwo,
            TArg::SignEll => TClass::SignEll,
            TArg::Other => TClass::Other,
        }
    }
}

#[derive(Args)]
struct WeightArgs {
    /// Rank; indices run over 0..=ell.
    #[arg(long)]
    ell: usize,
    /// Coefficients m_0,...,m_ell of the dominant weight.
    #[arg(long, value_delimiter = ',', required = true)]
    weight: Vec<u32>,
}

#[derive(Args)]
struct BetaArgs {
    /// Coefficients of beta in the simple roots alpha_0,...,alpha_ell.
    #[arg(long, value_delimiter = ',', required = true)]
    beta: Vec<u32>,
    /// Adds this many copies of delta to beta.
    #[arg(long, default_value_t = 0)]
    mdelta: u32,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Brauer graph in JSON.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// A line with these multiplicities.
    #[arg(long, value_delimiter = ',')]
    line: Option<Vec<u32>>,
    /// The family member s,a,m: a line of s+2 vertices of multiplicity m except vertex a.
    #[arg(long, value_delimiter = ',')]
    gamma: Option<Vec<usize>>,
    /// A symmetric matrix, rows separated by ';' (decomp only).
    #[arg(long)]
    matrix: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// The maximal dominant weights of V(Lambda) and their X-vectors.
    Maxweights {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The weight quiver of Lambda.
    Quiver {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The subquiver T(Lambda) with its strata.
    Tquiver {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Representation type of the block R^Lambda(beta).
    Classify {
        #[command(flatten)]
        weight: WeightArgs,
        #[command(flatten)]
        beta: BetaArgs,
        /// Characteristic of the ground field (0 or a prime).
        #[arg(long = "char", default_value_t = 0)]
        char_p: u64,
        #[arg(long, value_enum, default_value_t = TArg::Other)]
        t: TArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Graded dimensions e(nu) R e(nu') from charged tableaux.
    Gdim {
        #[command(flatten)]
        weight: WeightArgs,
        #[command(flatten)]
        beta: BetaArgs,
        /// A residue sequence such as 0,1,0; repeat for a matrix of pairwise dimensions.
        #[arg(long, value_parser = parse_seq)]
        nu: Vec<Seq>,
        /// List the residue sequences whose idempotent is nonzero.
        #[arg(long)]
        sequences: bool,
        /// Evaluate at q = 1.
        #[arg(long)]
        at_one: bool,
        /// Refuse beta of larger height.
        #[arg(long, default_value_t = GdimOptions::default().max_size)]
        max_size: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Quiver, relations, Cartan matrix and derived invariants of a Brauer graph algebra.
    Brauer {
        #[command(flatten)]
        source: GraphSource,
        /// A second graph to test for derived equivalence.
        #[arg(long)]
        compare: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Nonnegative integer matrices D with D^t D equal to a Cartan matrix.
    Decomp {
        #[command(flatten)]
        source: GraphSource,
        /// Keep solutions without a unitriangular pattern.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        max_solutions: Option<usize>,
        #[arg(long, default_value_t = DecompOptions::default().node_limit)]
        node_limit: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Debug)]
struct Seq(Vec<usize>);

fn parse_seq(s: &str) -> Result<Seq, String> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()
        .map(Seq)
}

enum Failure {
    Usage(String),
    Domain(affine_klr::Error),
}

impl From<affine_klr::Error> for Failure {
    fn from(e: affine_klr::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<graph_file::InputError> for Failure {
    fn from(e: graph_file::InputError) -> Self {
        Failure::Usage(e.0)
    }
}

type Outcome = Result<String, Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

impl WeightArgs {
    fn base(&self) -> Result<LevelKDominant, Failure> {
        if self.ell == 0 {
            return usage("--ell must be at least 1");
        }
        if self.weight.len() != self.ell + 1 {
            return usage(format!("--weight has {} entries but --ell {} needs {}", self.weight.len(), self.ell, self.ell + 1));
        }
        Ok(LevelKDominant::new(self.weight.iter().map(|&m| m as i64).collect())?)
    }
}

impl BetaArgs {
    fn root(&self, e: usize) -> Result<RootVector, Failure> {
        if self.beta.len() != e {
            return usage(format!("--beta has {} entries but needs {e}", self.beta.len()));
        }
        Ok(RootVector::new(self.beta.iter().map(|&c| c as i64).collect())?.plus_delta(self.mdelta as i64))
    }
}

fn no_dot(format: Format, command: &str) -> Result<(), Failure> {
    if format == Format::Dot {
        return usage(format!("--format dot is not available for {command}"));
    }
    Ok(())
}

impl GraphSource {
    fn load(&self) -> Result<BrauerGraph, Failure> {
        if self.matrix.is_some() {
            return usage("--matrix is only accepted by decomp");
        }
        if let Some(path) = &self.graph {
            return Ok(graph_file::read(path)?.build()??);
        }
        if let Some(mults) = &self.line {
            return Ok(BrauerGraph::line(mults)?);
        }
        match self.gamma.as_deref() {
            Some(&[s, a, m]) => Ok(brauer::gamma_family(s, a, m as u32)?),
            _ => usage("--gamma takes exactly three values s,a,m"),
        }
    }

    fn cartan(&self) -> Result<Vec<Vec<i64>>, Failure> {
        match &self.matrix {
            Some(text) => parse_matrix(text),
            None => Ok(brauer::cartan_matrix(&self.load()?)?),
        }
    }
}

fn parse_matrix(text: &str) -> Result<Vec<Vec<i64>>, Failure> {
    let mut rows = Vec::new();
    for row in text.split(';') {
        let parsed: Result<Vec<i64>, _> = row.split(',').map(|t| t.trim().parse::<i64>()).collect();
        match parsed {
            Ok(r) => rows.push(r),
            Err(e) => return usage(format!("--matrix: {e}")),
        }
    }
    Ok(rows)
}

fn gdim_cmd(base: &LevelKDominant, beta: &RootVector, nu: &[Seq], sequences: bool, at_one: bool, opts: GdimOptions, format: Format) -> Outcome {
    let ch = Charges::of(base);
    let show = |p: &LaurentPoly| if at_one { p.at_one().to_string() } else { p.to_string() };
    if sequences {
        let seqs = affine_klr::tableaux::residue_sequences(&ch, beta, opts)?;
        return Ok(match format {
            Format::Json => render::json(&seqs),
            _ => seqs.iter().map(|s| format!("{}\n", s.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(","))).collect(),
        });
    }
    if nu.is_empty() {
        let total = show(&graded_dim_total(&ch, beta, opts)?);
        return Ok(match format {
            Format::Json => render::json(&serde_json::json!({ "total": total })),
            _ => format!("{total}\n"),
        });
    }
    let mut matrix = Vec::with_capacity(nu.len());
    for a in nu {
        let mut row = Vec::with_capacity(nu.len());
        for b in nu {
            row.push(show(&graded_dim(&ch, beta, &a.0, &b.0, opts)?));
        }
        matrix.push(row);
    }
    Ok(match format {
        Format::Json => {
            let seqs: Vec<&Vec<usize>> = nu.iter().map(|s| &s.0).collect();
            render::json(&serde_json::json!({ "sequences": seqs, "matrix": matrix }))
        }
        _ => matrix.iter().map(|row| format!("{}\n", row.join("\t"))).collect(),
    })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Maxweights { weight, format } => {
            no_dot(format, "maxweights")?;
            let base = weight.base()?;
            let entries = max_plus(&base);
            Ok(match format {
                Format::Json => render::maxweights_json(&base, &entries),
                _ => render::maxweights_text(&base, &entries),
            })
        }
        Command::Quiver { weight, format } => {
            let q = build_quiver(&weight.base()?)?;
            Ok(match format {
                Format::Text => render::quiver_text(&q, None),
                Format::Json => render::quiver_json(&q),
                Format::Dot => render::quiver_dot(&q, None),
            })
        }
        Command::Tquiver { weight, format } => {
            let t = t_subquiver(&weight.base()?)?;
            Ok(match format {
                Format::Text => render::quiver_text(&t.quiver, Some(&t.tags)),
                Format::Json => render::tquiver_json(&t),
                Format::Dot => render::quiver_dot(&t.quiver, Some(&t.tags)),
            })
        }
        Command::Classify { weight, beta, char_p, t, format } => {
            no_dot(format, "classify")?;
            let base = weight.base()?;
            let beta = beta.root(base.e())?;
            let params = FieldParams::new(char_p, t.into());
            if let Err(e) = params.validate(weight.ell) {
                return usage(format!("--char/--t: {e}"));
            }
            let rep = classify(&base, &beta, params)?;
            Ok(match format {
                Format::Json => {
                    let red = orbit_representative(&base, &beta)?;
                    render::json(&render::ClassifyJson {
                        ell: weight.ell,
                        base: base.coeffs().to_vec(),
                        beta: beta.coeffs.clone(),
                        rep_type: rep.to_string(),
                        beta0: red.beta0.coeffs,
                        m: red.m,
                    })
                }
                _ => format!("{rep}\n"),
            })
        }
        Command::Gdim { weight, beta, nu, sequences, at_one, max_size, format } => {
            no_dot(format, "gdim")?;
            let base = weight.base()?;
            let beta = beta.root(base.e())?;
            gdim_cmd(&base, &beta, &nu, sequences, at_one, GdimOptions { max_size }, format)
        }
        Command::Brauer { source, compare, format } => {
            no_dot(format, "brauer")?;
            let g = source.load()?;
            let derived_equivalent = match compare {
                Some(path) => {
                    let other = graph_file::read(&path)?.build()??;
                    Some(brauer::derived_equivalent(&g, &other)?)
                }
                None => None,
            };
            let presentation = brauer::quiver_presentation(&g);
            let invariants = brauer::derived_invariants(&g);
            let report = render::BrauerReport {
                presentation: &presentation,
                cartan: brauer::cartan_matrix(&g).map_err(|e| e.to_string()),
                invariants: &invariants,
                derived_equivalent,
            };
            Ok(match format {
                Format::Json => render::brauer_json(&report),
                _ => render::brauer_text(&report),
            })
        }
        Command::Decomp { source, all, max_solutions, node_limit, format } => {
            no_dot(format, "decomp")?;
            let c = source.cartan()?;
            let opts = DecompOptions { unitriangular: !all, max_solutions: max_solutions.unwrap_or(usize::MAX), node_limit };
            let res = brauer::decomp_search(&c, opts)?;
            Ok(match format {
                Format::Json => render::decomp_json(&res),
                _ => render::decomp_text(&res),
            })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

//! Batch command-line surface over the determinant-identity library.
//!
//! Every invocation is deterministic given its flags; seeds are explicit
//! with committed defaults. Output is JSON by default, CSV for the flat
//! tables. Exit codes: 0 on success or pass, 1 on an identity failure or
//! positivity violation, 2 on usage errors.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use opdet_core::dets::{self, RowPlan, StructureKind};
use opdet_core::measures::{self, parse_measure, NodeSet};
use opdet_core::opoly::{self, ClassicalFamily, JensenSeq};
use opdet_core::rational::{parse_rational, to_f64, Rational};
use opdet_core::verify::{
    self, jensen_convergence, positivity_scan, IdentityId, SamplePlan, VerifyReport, DEFAULT_SEED,
};
use opdet_core::{Error, UniPoly};

#[derive(Parser)]
#[command(
    name = "opdet",
    about = "Exact determinant identities of orthogonal polynomials",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the moment sequence of a measure.
    Moments {
        /// Measure grammar: hermite | laguerre:alpha=<r> | gegenbauer:lambda=<r>
        /// | moments:<r0>,<r1>,... | modified(<spec>;<node>^<mult>,...)
        #[arg(long)]
        measure: String,
        /// Highest moment order to print.
        #[arg(long)]
        upto: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print a polynomial as its ascending-degree coefficient list.
    Poly {
        #[arg(long)]
        measure: String,
        #[arg(long, value_enum)]
        kind: PolyKind,
        #[arg(long)]
        n: usize,
        /// Degree parameter of the r polynomials (their binomial order).
        #[arg(long)]
        m: Option<usize>,
        /// Coefficient shift of the generalized Jensen polynomials.
        #[arg(long)]
        k: Option<usize>,
        /// Nodes for the several-node q polynomial, as rationals.
        #[arg(long, value_delimiter = ',')]
        nodes: Option<Vec<String>>,
        /// Multiplicities paired with --nodes (default all 1).
        #[arg(long, value_delimiter = ',')]
        mults: Option<Vec<u32>>,
    },
    /// Evaluate a determinant.
    Det(DetArgs),
    /// Verify identities; exits 1 when any non-advisory report fails.
    Verify {
        /// Identity id, e.g. COR_LEC_R. Mutually exclusive with --all.
        #[arg(long, conflicts_with = "all")]
        id: Option<String>,
        /// Run every identity over its applicable default measures.
        #[arg(long)]
        all: bool,
        /// Restrict to one measure (default: the suite's measure set).
        #[arg(long)]
        measure: Option<String>,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        m_max: usize,
        #[arg(long, default_value_t = 3)]
        r_max: usize,
        #[arg(long, default_value_t = 4)]
        mult_sum_max: usize,
        #[arg(long, default_value_t = 3)]
        tuples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Exact-sign positivity scan of even-multiplicity determinants.
    ScanPositivity {
        #[arg(long)]
        measure: String,
        #[arg(long)]
        n: usize,
        /// Even multiplicities, e.g. 2,2.
        #[arg(long, value_delimiter = ',')]
        mults: Vec<u32>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Convergence table of scaled Jensen values toward the Laplace
    /// transform.
    JensenConverge {
        #[arg(long)]
        measure: String,
        /// Evaluation point, a non-negative rational.
        #[arg(long)]
        x: String,
        #[arg(long, default_value_t = 64)]
        m_max: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    /// Orthogonal polynomial with leading coefficient det M_{n-1}.
    Orth,
    /// Monic orthogonal polynomial.
    Monic,
    /// Shifted-moment polynomial q_n.
    Q,
    /// Shifted-moment polynomial r_{m,n}.
    R,
    /// Several-node q polynomial.
    QNodes,
    /// Jensen polynomial g_{n,k} of the Laplace transform.
    Jensen,
    /// Classically normalized family polynomial.
    Classical,
    /// Rational closed form of q_n for a classical family.
    ClassicalQ,
}

#[derive(Args)]
struct DetArgs {
    #[command(subcommand)]
    kind: DetKind,
}

#[derive(Subcommand)]
enum DetKind {
    /// det [ p_{n+j-1}(t_i) ] over distinct nodes.
    Slater {
        #[arg(long)]
        measure: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        nodes: Vec<String>,
    },
    /// Generalized determinant with derivative rows per node multiplicity.
    SlaterGeneral {
        #[arg(long)]
        measure: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        nodes: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        mults: Vec<u32>,
    },
    /// Continuous extension of slater / vandermonde to coincident nodes.
    Symmetrized {
        #[arg(long)]
        measure: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        nodes: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        mults: Option<Vec<u32>>,
    },
    /// Wronskian of m consecutive orthogonal polynomials at x.
    Wronskian {
        #[arg(long)]
        measure: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        x: String,
    },
    /// Hankel moment determinant det M_n.
    Hankel {
        #[arg(long)]
        measure: String,
        #[arg(long)]
        n: usize,
    },
    /// Hankel determinant of several-node q polynomials (last node is the
    /// evaluation point).
    HankelQ {
        #[arg(long)]
        measure: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        nodes: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        mults: Option<Vec<u32>>,
    },
    /// Hankel determinant of several-node r values.
    HankelR {
        #[arg(long)]
        measure: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        nodes: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        mults: Option<Vec<u32>>,
    },
    /// F-determinant over an index list.
    F {
        #[arg(long)]
        measure: String,
        #[arg(long, value_delimiter = ',')]
        indices: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        nodes: Option<Vec<String>>,
        #[arg(long, value_delimiter = ',')]
        mults: Option<Vec<u32>>,
        #[arg(long)]
        x: String,
    },
    /// Several-variable orthogonal polynomial value for an index vector.
    PAlpha {
        #[arg(long)]
        measure: String,
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        nodes: Vec<String>,
    },
    /// Structure constant of the identities.
    Structure {
        #[arg(long)]
        measure: String,
        #[arg(long, value_enum)]
        kind: StructureKindArg,
        #[arg(long)]
        n: usize,
        /// Single m for the scalar kinds, the multiplicity vector otherwise.
        #[arg(long, value_delimiter = ',')]
        mults: Vec<u32>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StructureKindArg {
    Bnm,
    Cnm,
    BMulti,
    CMulti,
}

impl From<StructureKindArg> for StructureKind {
    fn from(k: StructureKindArg) -> Self {
        match k {
            StructureKindArg::Bnm => StructureKind::Bnm,
            StructureKindArg::Cnm => StructureKind::Cnm,
            StructureKindArg::BMulti => StructureKind::BMulti,
            StructureKindArg::CMulti => StructureKind::CMulti,
        }
    }
}

fn parse_nodes(raw: &[String]) -> Result<Vec<Rational>, Error> {
    raw.iter().map(|s| parse_rational(s)).collect()
}

fn node_set(raw: &[String], mults: Option<&[u32]>) -> Result<NodeSet, Error> {
    let nodes = parse_nodes(raw)?;
    match mults {
        None => Ok(NodeSet::simple(&nodes)),
        Some(ms) => {
            if ms.len() != nodes.len() {
                return Err(Error::InvalidArgument(format!(
                    "{} nodes but {} multiplicities",
                    nodes.len(),
                    ms.len()
                )));
            }
            NodeSet::new(nodes.into_iter().zip(ms.iter().copied()).collect())
        }
    }
}

fn coeff_strings(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).unwrap());
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Moments {
            measure,
            upto,
            format,
        } => {
            let spec = parse_measure(&measure)?;
            let moments = spec.moments_upto(upto)?;
            match format {
                Format::Json => {
                    let strings: Vec<String> = moments.iter().map(|m| m.to_string()).collect();
                    print_json(&strings);
                }
                Format::Csv => {
                    println!("k,moment");
                    for (k, m) in moments.iter().enumerate() {
                        println!("{k},{m}");
                    }
                }
            }
            Ok(true)
        }
        Command::Poly {
            measure,
            kind,
            n,
            m,
            k,
            nodes,
            mults,
        } => {
            let spec = parse_measure(&measure)?;
            let poly = match kind {
                PolyKind::Orth => opoly::orth_poly(&spec, n)?,
                PolyKind::Monic => opoly::orth_poly_monic(&spec, n)?,
                PolyKind::Q => opoly::q_poly(&spec, n)?,
                PolyKind::R => {
                    let m = m.ok_or_else(|| {
                        Error::InvalidArgument("r polynomials need --m".into())
                    })?;
                    opoly::r_poly(&spec, m, n)?
                }
                PolyKind::QNodes => {
                    let raw = nodes.ok_or_else(|| {
                        Error::InvalidArgument("q-nodes needs --nodes".into())
                    })?;
                    let ns = node_set(&raw, mults.as_deref())?;
                    opoly::q_nodes(&spec, &ns, n)?
                }
                PolyKind::Jensen => {
                    let gs = JensenSeq::from_measure(&spec, n + k.unwrap_or(0))?;
                    opoly::jensen(&gs, n, k.unwrap_or(0))?
                }
                PolyKind::Classical => {
                    let family = ClassicalFamily::from_measure(&spec)?;
                    opoly::classical_poly(&family, n)?
                }
                PolyKind::ClassicalQ => {
                    let family = ClassicalFamily::from_measure(&spec)?;
                    opoly::classical_q_closed(&family, n)?
                }
            };
            print_json(&coeff_strings(&poly));
            Ok(true)
        }
        Command::Det(args) => {
            let value = run_det(args)?;
            print_json(&value.to_string());
            Ok(true)
        }
        Command::Verify {
            id,
            all,
            measure,
            n_max,
            m_max,
            r_max,
            mult_sum_max,
            tuples,
            seed,
        } => {
            let plan = SamplePlan {
                seed,
                n_max,
                m_max,
                r_max,
                mult_sum_max,
                tuples_per_case: tuples,
                ..SamplePlan::default()
            };
            let reports: Vec<VerifyReport> = if all {
                verify::verify_all(&plan)?
            } else {
                let id = id.ok_or_else(|| {
                    Error::InvalidArgument("verify needs --id <ID> or --all".into())
                })?;
                let id = IdentityId::from_str(&id)?;
                match measure {
                    Some(m) => vec![verify::verify_identity(id, &parse_measure(&m)?, &plan)?],
                    None => verify::applicable_specs(id)
                        .iter()
                        .map(|spec| verify::verify_identity(id, spec, &plan))
                        .collect::<Result<_, _>>()?,
                }
            };
            if reports.len() == 1 {
                print_json(&reports[0]);
            } else {
                print_json(&reports);
            }
            Ok(verify::all_passed(&reports))
        }
        Command::ScanPositivity {
            measure,
            n,
            mults,
            trials,
            seed,
        } => {
            let spec = parse_measure(&measure)?;
            let report = positivity_scan(&spec, n, &mults, trials, seed)?;
            print_json(&report);
            Ok(report.passed())
        }
        Command::JensenConverge {
            measure,
            x,
            m_max,
            format,
        } => {
            let spec = parse_measure(&measure)?;
            let x = parse_rational(&x)?;
            let table = jensen_convergence(&spec, &x, m_max)?;
            match format {
                Format::Json => print_json(&convergence_json(&table)),
                Format::Csv => {
                    println!("m,value_exact,value,abs_error");
                    for row in &table.rows {
                        println!(
                            "{},{},{:.12},{}",
                            row.m,
                            row.value_exact,
                            row.value,
                            row.abs_error
                                .map(|e| format!("{e:.12}"))
                                .unwrap_or_default()
                        );
                    }
                }
            }
            Ok(true)
        }
    }
}

fn run_det(args: DetArgs) -> Result<Rational, Error> {
    match args.kind {
        DetKind::Slater { measure, n, nodes } => {
            let spec = parse_measure(&measure)?;
            dets::slater(&spec, n, &parse_nodes(&nodes)?)
        }
        DetKind::SlaterGeneral {
            measure,
            n,
            nodes,
            mults,
        } => {
            let spec = parse_measure(&measure)?;
            let ns = node_set(&nodes, Some(&mults))?;
            dets::slater_general(&spec, n, &ns, &RowPlan::standard(&ns))
        }
        DetKind::Symmetrized {
            measure,
            n,
            nodes,
            mults,
        } => {
            let spec = parse_measure(&measure)?;
            let ns = node_set(&nodes, mults.as_deref())?;
            dets::symmetrized(&spec, n, &ns)
        }
        DetKind::Wronskian { measure, n, m, x } => {
            let spec = parse_measure(&measure)?;
            dets::wronskian(&spec, n, m, &parse_rational(&x)?)
        }
        DetKind::Hankel { measure, n } => {
            let spec = parse_measure(&measure)?;
            measures::hankel_det(&spec, n)
        }
        DetKind::HankelQ {
            measure,
            n,
            nodes,
            mults,
        } => {
            let spec = parse_measure(&measure)?;
            dets::hankel_q_det(&spec, n, &node_set(&nodes, mults.as_deref())?)
        }
        DetKind::HankelR {
            measure,
            n,
            nodes,
            mults,
        } => {
            let spec = parse_measure(&measure)?;
            dets::hankel_r_det(&spec, n, &node_set(&nodes, mults.as_deref())?)
        }
        DetKind::F {
            measure,
            indices,
            nodes,
            mults,
            x,
        } => {
            let spec = parse_measure(&measure)?;
            let ns = match nodes {
                Some(raw) => node_set(&raw, mults.as_deref())?,
                None => NodeSet::empty(),
            };
            dets::f_det(&spec, &indices, &ns, &parse_rational(&x)?)
        }
        DetKind::PAlpha {
            measure,
            alpha,
            nodes,
        } => {
            let spec = parse_measure(&measure)?;
            Ok(dets::p_alpha(&spec, &alpha, &parse_nodes(&nodes)?)?.value)
        }
        DetKind::Structure {
            measure,
            kind,
            n,
            mults,
        } => {
            let spec = parse_measure(&measure)?;
            Ok(dets::structure_constant(kind.into(), &spec, n, &mults)?.value)
        }
    }
}

fn convergence_json(table: &opdet_core::verify::JensenConvergence) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = table
        .rows
        .iter()
        .map(|r| {
            serde_json::json!({
                "m": r.m,
                "value_exact": r.value_exact.to_string(),
                "value": r.value,
                "abs_error_exact": r.abs_error_exact.as_ref().map(|e| e.to_string()),
                "abs_error": r.abs_error,
                "wronskian_cross": r.wronskian_cross.as_ref().map(|w| w.to_string()),
            })
        })
        .collect();
    let signs: Vec<serde_json::Value> = table
        .det_signs
        .iter()
        .map(|s| {
            serde_json::json!({
                "order": s.order,
                "approximant_m": s.approximant_m,
                "value": s.value.to_string(),
                "non_negative": s.non_negative,
            })
        })
        .collect();
    serde_json::json!({
        "x": table.x.to_string(),
        "target_exact": table.target_exact.as_ref().map(|t| t.to_string()),
        "target": table.target.or_else(|| table.target_exact.as_ref().map(to_f64)),
        "rows": rows,
        "derivative_det_signs": signs,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

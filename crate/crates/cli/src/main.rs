use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use morseflow::algorithm::{alg_run, AlgOutcome, FloperationKind, Label, DEFAULT_STEP_LIMIT};
use morseflow::field::{critical_simplices, find_closed_vpath, seeded_gradient_field};
use morseflow::homology::{
    homology, morse_chain_complex, morse_differential, simplicial_boundary, simplicial_chain_complex, verify_d_squared,
    ChainComplex,
};
use morseflow::path::{parse_simplex_sequence, path_sign};
use morseflow::{
    build_moduli, enumerate_flowlines_index1, enumerate_flowlines_index2, gen_full_simplex, gen_graph_property_complex,
    parse_complex_file, presets, print_complex_file, ComplexFile, Error, Flowline, GraphProperty, ModifiedHasseDiagram,
    Simplex,
};

#[derive(Parser)]
#[command(
    name = "morseflow",
    version,
    about = "Discrete Morse flowlines, moduli spaces and homology"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    Sphere,
    Rp2,
    TwoTriangles,
}

#[derive(Args)]
struct Input {
    /// Complex file (TOML).
    file: Option<PathBuf>,
    /// Use a built-in example instead of a file.
    #[arg(long, conflicts_with = "file")]
    preset: Option<Preset>,
}

#[derive(Args)]
struct Endpoints {
    /// Starting critical simplex, e.g. 1-2-3.
    #[arg(long)]
    alpha: Simplex,
    /// Final critical simplex.
    #[arg(long)]
    gamma: Simplex,
    /// Cap on flowline length; required when the field has a closed V-path.
    #[arg(long)]
    max_len: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the complex and its vector field are well formed.
    Validate(Input),
    /// List the critical simplices by dimension.
    Critical(Input),
    /// List the flowlines between two critical simplices with their signs.
    Flowlines {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        ends: Endpoints,
    },
    /// Describe the moduli space of index-2 flowlines.
    Moduli {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        ends: Endpoints,
    },
    /// Run the flowline algorithm and print every appended flowline.
    Trace {
        #[command(flatten)]
        input: Input,
        /// Starting flowline as a sequence of simplices, e.g. "1-2-3 1-2 1".
        #[arg(long)]
        from: String,
        /// Starting label.
        #[arg(long, default_value = "c")]
        start: Label,
        /// Stop after this many steps.
        #[arg(long, default_value_t = DEFAULT_STEP_LIMIT)]
        max_steps: usize,
    },
    /// Print a Morse differential (or simplicial boundary) matrix.
    Differential {
        #[command(flatten)]
        input: Input,
        /// Dimension of the source chain group.
        #[arg(short, long)]
        p: usize,
        /// Use the simplicial boundary instead of the Morse differential.
        #[arg(long)]
        simplicial: bool,
        /// Cap on flowline length.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Check that consecutive differentials compose to zero.
    D2Check {
        #[command(flatten)]
        input: Input,
        /// Use the simplicial boundary instead of the Morse differential.
        #[arg(long)]
        simplicial: bool,
        /// Cap on flowline length.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Integer homology of the Morse (or simplicial) chain complex.
    Homology {
        #[command(flatten)]
        input: Input,
        /// Use the simplicial chain complex instead of the Morse complex.
        #[arg(long)]
        simplicial: bool,
        /// Cap on flowline length.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Write a moduli space as a DOT graph.
    ExportDot {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        ends: Endpoints,
    },
    /// Write an example complex file.
    Gen {
        #[command(subcommand)]
        what: GenTarget,
        /// Replace the field by a seeded random gradient field.
        #[arg(long, global = true)]
        random_field: bool,
        /// Seed for the random field.
        #[arg(long, global = true, default_value_t = 0)]
        seed: u64,
        /// Probability of keeping each admissible pair in a random field.
        #[arg(long, global = true, default_value_t = 0.8)]
        density: f64,
        /// Output file; stdout when absent.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenTarget {
    /// Boundary of the tetrahedron with its example field.
    Sphere,
    /// Six-vertex real projective plane with its example field.
    Rp2,
    /// Two triangles sharing an edge with their example field.
    TwoTriangles,
    /// Full simplex on vertices 0..=dim.
    FullSimplex {
        #[arg(long)]
        dim: usize,
    },
    /// Complex of a graph property on the edges of K_n.
    GraphProperty {
        #[arg(long)]
        n: usize,
        /// One of colourable:K, max-edges:M, max-degree:D.
        #[arg(long)]
        property: String,
    },
}

/// A failed command: exit status 1 for a verification failure, 2 for bad
/// input.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::MalformedSimplex(_)
            | Error::NotInComplex(_)
            | Error::NotCritical(_)
            | Error::DimensionMismatch(_)
            | Error::MalformedPath(_)
            | Error::UnboundedEnumeration => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type Outcome = Result<String, Failure>;

fn load(input: &Input) -> Result<ComplexFile, Failure> {
    match (&input.preset, &input.file) {
        (Some(p), _) => Ok(match p {
            Preset::Sphere => {
                let (k, v) = presets::sphere();
                ComplexFile::with_field(k, v)
            }
            Preset::Rp2 => {
                let (k, v) = presets::rp2();
                ComplexFile::with_field(k, v)
            }
            Preset::TwoTriangles => ComplexFile {
                complex: presets::two_triangles(),
                vector_field: Some(presets::two_triangle_field()),
                morse_values: Some(presets::two_triangle_morse_function()),
            },
        }),
        (None, Some(path)) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            parse_complex_file(&text).map_err(|e| {
                let mut f = Failure::from(e);
                f.message = format!("{}: {}", path.display(), f.message);
                f
            })
        }
        (None, None) => Err(usage("give a complex file or --preset")),
    }
}

fn diagram(input: &Input) -> Result<ModifiedHasseDiagram, Failure> {
    let file = load(input)?;
    let field = file.field()?;
    Ok(ModifiedHasseDiagram::new(file.complex, field)?)
}

fn validate(input: &Input) -> Outcome {
    let file = load(input)?;
    let field = file.field()?;
    let h = ModifiedHasseDiagram::new(file.complex.clone(), field)?;
    let mut out = String::new();
    let f: Vec<String> = file.complex.f_vector().iter().map(usize::to_string).collect();
    writeln!(out, "ok").unwrap();
    writeln!(out, "f-vector: ({})", f.join(", ")).unwrap();
    writeln!(out, "euler characteristic: {}", file.complex.euler_characteristic()).unwrap();
    writeln!(out, "pairs: {}", h.field().len()).unwrap();
    match find_closed_vpath(h.field(), h.complex()) {
        None => writeln!(out, "gradient: yes").unwrap(),
        Some(cycle) => {
            let names: Vec<String> = cycle.iter().map(Simplex::to_string).collect();
            writeln!(out, "gradient: no, closed V-path {}", names.join(" ")).unwrap();
        }
    }
    Ok(out)
}

fn critical(input: &Input) -> Outcome {
    let h = diagram(input)?;
    let mut out = String::new();
    for p in 0..=h.complex().top_dimension().unwrap_or(0) {
        let names: Vec<String> = critical_simplices(h.complex(), h.field(), p)
            .iter()
            .map(Simplex::to_string)
            .collect();
        writeln!(out, "dim {p}: {}", names.join(" ")).unwrap();
    }
    Ok(out)
}

fn flowlines(input: &Input, ends: &Endpoints) -> Outcome {
    let h = diagram(input)?;
    let paths = match ends.alpha.dim().checked_sub(ends.gamma.dim()) {
        Some(1) => enumerate_flowlines_index1(&h, &ends.alpha, &ends.gamma, ends.max_len)?,
        Some(2) => enumerate_flowlines_index2(&h, &ends.alpha, &ends.gamma, ends.max_len)?
            .into_iter()
            .map(Flowline::into_path)
            .collect(),
        _ => return Err(usage("flowlines need endpoints of index 1 or 2")),
    };
    let mut out = String::new();
    for p in &paths {
        writeln!(out, "{:+}\t{p}", path_sign(p)).unwrap();
    }
    let total: i64 = paths.iter().map(|p| path_sign(p) as i64).sum();
    writeln!(out, "count {} signed {total}", paths.len()).unwrap();
    Ok(out)
}

fn moduli(input: &Input, ends: &Endpoints) -> Outcome {
    let h = diagram(input)?;
    let m = build_moduli(&h, &ends.alpha, &ends.gamma, ends.max_len)?;
    let comps = m.components();
    let mut out = String::new();
    writeln!(
        out,
        "M({}, {}): {} flowlines, {} edges, {} component{}",
        m.alpha,
        m.gamma,
        m.vertices().len(),
        m.edge_count(),
        comps.len(),
        if comps.len() == 1 { "" } else { "s" }
    )
    .unwrap();
    for (i, c) in comps.iter().enumerate() {
        let kind = match c.kind {
            morseflow::moduli::ComponentKind::Path => "path",
            morseflow::moduli::ComponentKind::Cycle => "cycle",
        };
        writeln!(out, "component {}: {kind}, {} flowlines", i + 1, c.flowlines.len()).unwrap();
        for f in &c.endpoints {
            writeln!(out, "  end {:+}\t{f}", path_sign(f.path())).unwrap();
        }
    }
    let boundary = m.boundary();
    let sum: i64 = boundary.iter().map(|(_, s)| *s as i64).sum();
    writeln!(out, "boundary flowlines: {}, signed sum {sum}", boundary.len()).unwrap();
    Ok(out)
}

fn trace(input: &Input, from: &str, start: Label, max_steps: usize) -> Outcome {
    let h = diagram(input)?;
    let nodes = parse_simplex_sequence(from)?;
    let f = Flowline::from_simplices(nodes, &h)?;
    let run = alg_run(&h, &f, start, max_steps)?;
    let mut out = String::new();
    for entry in run.outcome.list() {
        writeln!(
            out,
            "{}\t{:+}\t{}",
            entry.label,
            path_sign(entry.flowline.path()),
            entry.flowline
        )
        .unwrap();
    }
    let status = match &run.outcome {
        AlgOutcome::Terminated(_) => "terminated".to_string(),
        AlgOutcome::Cycled { period, .. } => format!("cycled with period {period}"),
    };
    eprintln!(
        "{status}: {} floperations ({} flop, {} insert, {} cancel)",
        run.floperations.len(),
        run.count(FloperationKind::Flop),
        run.count(FloperationKind::Insert),
        run.count(FloperationKind::Cancel)
    );
    Ok(out)
}

fn chain_complex(input: &Input, simplicial: bool, max_len: Option<usize>) -> Result<ChainComplex, Failure> {
    let h = diagram(input)?;
    Ok(if simplicial {
        simplicial_chain_complex(h.complex())?
    } else {
        morse_chain_complex(&h, max_len)?
    })
}

fn differential(input: &Input, p: usize, simplicial: bool, max_len: Option<usize>) -> Outcome {
    let h = diagram(input)?;
    let top = h.complex().top_dimension().unwrap_or(0);
    if p == 0 || p > top {
        return Err(usage(format!("p must lie in 1..={top}")));
    }
    let d = if simplicial {
        simplicial_boundary(h.complex(), p)?
    } else {
        morse_differential(&h, p, max_len)?
    };
    Ok(d.dump())
}

fn d2_check(input: &Input, simplicial: bool, max_len: Option<usize>) -> Outcome {
    let c = chain_complex(input, simplicial, max_len)?;
    for pair in c.differentials.windows(2) {
        if let Err(e) = verify_d_squared(&pair[1], &pair[0]) {
            return Err(Failure {
                code: 1,
                message: format!("d_{} d_{}: {e}", pair[0].p, pair[1].p),
            });
        }
    }
    Ok(format!(
        "ok: {} products checked\n",
        c.differentials.len().saturating_sub(1)
    ))
}

fn parse_property(text: &str) -> Result<GraphProperty, Failure> {
    let (name, value) = text
        .split_once(':')
        .ok_or_else(|| usage(format!("property {text:?} should look like name:value")))?;
    let value: usize = value
        .parse()
        .map_err(|_| usage(format!("property value {value:?} is not a number")))?;
    match name {
        "colourable" | "colorable" => Ok(GraphProperty::EdgeColourable(value)),
        "max-edges" => Ok(GraphProperty::MaxEdges(value)),
        "max-degree" => Ok(GraphProperty::MaxDegree(value)),
        _ => Err(usage(format!("unknown graph property {name:?}"))),
    }
}

fn gen(what: &GenTarget, random_field: bool, seed: u64, density: f64) -> Outcome {
    let mut file = match what {
        GenTarget::Sphere => {
            let (k, v) = presets::sphere();
            ComplexFile::with_field(k, v)
        }
        GenTarget::Rp2 => {
            let (k, v) = presets::rp2();
            ComplexFile::with_field(k, v)
        }
        GenTarget::TwoTriangles => ComplexFile {
            complex: presets::two_triangles(),
            vector_field: Some(presets::two_triangle_field()),
            morse_values: Some(presets::two_triangle_morse_function()),
        },
        GenTarget::FullSimplex { dim } => ComplexFile::new(gen_full_simplex(*dim)),
        GenTarget::GraphProperty { n, property } => {
            ComplexFile::new(gen_graph_property_complex(*n, &parse_property(property)?)?)
        }
    };
    if random_field {
        if !(0.0..=1.0).contains(&density) {
            return Err(usage("density must lie in [0, 1]"));
        }
        file.vector_field = Some(seeded_gradient_field(&file.complex, seed, density));
        file.morse_values = None;
    }
    Ok(print_complex_file(&file))
}

fn homology_report(input: &Input, simplicial: bool, max_len: Option<usize>) -> Outcome {
    let c = chain_complex(input, simplicial, max_len)?;
    Ok(homology(&c)?.to_string())
}

fn run(cli: Cli) -> Result<(String, Option<PathBuf>), Failure> {
    let out = match &cli.command {
        Command::Validate(input) => validate(input)?,
        Command::Critical(input) => critical(input)?,
        Command::Flowlines { input, ends } => flowlines(input, ends)?,
        Command::Moduli { input, ends } => moduli(input, ends)?,
        Command::Trace {
            input,
            from,
            start,
            max_steps,
        } => trace(input, from, *start, *max_steps)?,
        Command::Differential {
            input,
            p,
            simplicial,
            max_len,
        } => differential(input, *p, *simplicial, *max_len)?,
        Command::D2Check {
            input,
            simplicial,
            max_len,
        } => d2_check(input, *simplicial, *max_len)?,
        Command::Homology {
            input,
            simplicial,
            max_len,
        } => homology_report(input, *simplicial, *max_len)?,
        Command::ExportDot { input, ends } => {
            let h = diagram(input)?;
            build_moduli(&h, &ends.alpha, &ends.gamma, ends.max_len)?.to_dot()
        }
        Command::Gen {
            what,
            random_field,
            seed,
            density,
            output,
        } => return Ok((gen(what, *random_field, *seed, *density)?, output.clone())),
    };
    Ok((out, None))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, None)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok((text, Some(path))) => match std::fs::write(&path, text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                ExitCode::from(2)
            }
        },
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

//! Command-line front end: build matrices, run chip-firing dynamics,
//! compute critical groups, and execute the verification suites.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error.

mod output;

use std::fs;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use critlib::chipfire::{ChipConfig, ChipSystem, DEFAULT_GUARD};
use critlib::intlinalg::{IntMatrix, MatrixJson};
use critlib::mckay::{
    abelianization_map, catalog_table, cayley_digraph_check, mckay_cartan, RngStructure,
};
use critlib::rootsys::{
    minuscule_toppling_and_looping, root_system, stabilization_chain_from_rho, verify_minuscule_theorem,
    DynkinType,
};
use critlib::suite;

use output::{fail, format_config, format_weight_layout, ok_json, ok_text};

#[derive(Parser)]
#[command(
    name = "critlib",
    about = "Chip-firing on avalanche-finite matrices: Cartan and McKay-Cartan critical groups",
    version
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Operate on an explicit integer matrix (JSON file)
    Matrix(MatrixCmd),
    /// Root-system data and verifiers (types A1..G2)
    Root(RootCmd),
    /// McKay-Cartan constructions over the bundled group catalog
    Mckay(MckayCmd),
    /// Run the verification suite
    VerifyAll(VerifyArgs),
}

#[derive(Args)]
struct MatrixCmd {
    #[command(subcommand)]
    action: MatrixAction,
}

#[derive(Subcommand)]
enum MatrixAction {
    /// Certify avalanche-finiteness and print the witness vector
    Check(MatrixInput),
    /// Stabilize a configuration
    Stabilize {
        #[command(flatten)]
        input: MatrixInput,
        /// Comma-separated chip counts (overrides the file's config)
        #[arg(long)]
        config: Option<String>,
    },
    /// Enumerate the recurrent representatives
    Recurrents(MatrixInput),
    /// Enumerate the superstable representatives
    Superstables(MatrixInput),
    /// Invariant factors of the critical group
    CriticalGroup(MatrixInput),
    /// Validate a burning configuration
    Burning {
        #[command(flatten)]
        input: MatrixInput,
        /// Comma-separated burning configuration
        #[arg(long)]
        b: String,
    },
    /// The recurrent configuration representing the zero coset
    ZeroCoset(MatrixInput),
}

#[derive(Args)]
struct MatrixInput {
    /// Matrix JSON file: {"rows", "cols", "entries"} or {"matrix", "config"}
    #[arg(short, long)]
    input: String,
}

#[derive(Args)]
struct RootCmd {
    #[command(subcommand)]
    action: RootAction,
}

#[derive(Subcommand)]
enum RootAction {
    /// Print the Cartan matrix
    Cartan { r#type: String },
    /// List the positive roots in both coordinate systems
    Roots { r#type: String },
    /// List the minuscule nodes (1-based)
    Minuscule { r#type: String },
    /// Verify the superstable/recurrent classification
    VerifyThm1 { r#type: String },
    /// One maximal-chain toppling run from the Weyl vector plus highest root
    ChainFromRho { r#type: String },
    /// The minuscule toppling loop and its padded numbers-game sequence
    Looping {
        r#type: String,
        /// 1-based minuscule node
        #[arg(long)]
        node: usize,
    },
    /// Test whether a vector is a burning configuration for the Cartan matrix
    BurningTest {
        r#type: String,
        /// Comma-separated weight coordinates
        #[arg(long)]
        b: String,
    },
}

#[derive(Args)]
struct MckayCmd {
    #[command(subcommand)]
    action: MckayAction,
}

#[derive(Args)]
struct GroupArgs {
    /// Catalog name: cyclic-m, binary-dihedral-m, binary-tetrahedral,
    /// binary-octahedral, binary-icosahedral, A4, S4, A5
    #[arg(long)]
    group: String,
    /// Coefficients of gamma over the irreducible rows (defaults to the
    /// group's natural representation)
    #[arg(long)]
    gamma: Option<String>,
}

#[derive(Subcommand)]
enum MckayAction {
    /// Print the McKay matrices M, extended, and reduced
    Build(GroupArgs),
    /// Critical group invariants (cross-checked presentations)
    CriticalGroup(GroupArgs),
    /// Verify the surjection onto the character group of the abelianization
    VerifyAbelianization(GroupArgs),
    /// Products of the standard degree-zero generators in the rng
    RngTable(GroupArgs),
    /// Arborescence comparison on an abelian Cayley digraph
    Cayley {
        /// Invariant factors, comma-separated (e.g. 6 or 2,2)
        #[arg(long)]
        invariants: String,
        /// Generators: comma-separated entries, semicolon-separated tuples
        /// (e.g. 1,2,3 for cyclic or "1,0;0,1;1,1" for rank two)
        #[arg(long)]
        generators: String,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Run only the criteria whose id or name contains this substring
    #[arg(long)]
    only: Option<String>,
    /// Write the machine-readable summary to this file
    #[arg(long)]
    json: Option<String>,
}

fn main() -> ExitCode {
    // die quietly when a pipe closes instead of panicking mid-print
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let guard = std::env::var("CRITLIB_GUARD")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_GUARD);
    let json = cli.format == Format::Json;
    match run(cli.command, guard, json) {
        Ok(code) => code,
        Err(msg) => fail(&msg, json),
    }
}

fn parse_vec(s: &str) -> Result<Vec<BigInt>, String> {
    s.split(',')
        .map(|t| BigInt::from_str(t.trim()).map_err(|e| format!("bad integer {t:?}: {e}")))
        .collect()
}

fn parse_type(s: &str) -> Result<DynkinType, String> {
    s.parse::<DynkinType>().map_err(|e| e.to_string())
}

struct MatrixFile {
    matrix: IntMatrix,
    config: Option<ChipConfig>,
}

fn load_matrix(path: &str) -> Result<MatrixFile, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| format!("parsing {path}: {e}"))?;
    let (matrix_value, config) = if value.get("matrix").is_some() {
        let config = value
            .get("config")
            .map(|c| {
                let strings: Vec<String> = serde_json::from_value(c.clone())
                    .map_err(|e| format!("config in {path}: {e}"))?;
                strings
                    .iter()
                    .map(|s| BigInt::from_str(s).map_err(|e| format!("config entry {s:?}: {e}")))
                    .collect::<Result<Vec<_>, _>>()
                    .map(ChipConfig)
            })
            .transpose()?;
        (value["matrix"].clone(), config)
    } else {
        (value, None)
    };
    let mj: MatrixJson =
        serde_json::from_value(matrix_value).map_err(|e| format!("matrix in {path}: {e}"))?;
    let matrix = IntMatrix::from_json(&mj).map_err(|e| e.to_string())?;
    Ok(MatrixFile { matrix, config })
}

fn certify(m: IntMatrix) -> Result<ChipSystem, String> {
    ChipSystem::certify(m).map_err(|e| e.to_string())
}

fn run(cmd: Command, guard: u64, json: bool) -> Result<ExitCode, String> {
    match cmd {
        Command::Matrix(m) => run_matrix(m.action, guard, json),
        Command::Root(r) => run_root(r.action, guard, json),
        Command::Mckay(m) => run_mckay(m.action, json),
        Command::VerifyAll(v) => run_verify_all(v, guard, json),
    }
}

fn run_matrix(action: MatrixAction, guard: u64, json: bool) -> Result<ExitCode, String> {
    match action {
        MatrixAction::Check(input) => {
            let file = load_matrix(&input.input)?;
            let sys = certify(file.matrix)?;
            let witness: Vec<String> = sys
                .certificate()
                .witness_r
                .iter()
                .map(|r| r.to_string())
                .collect();
            if json {
                ok_json(serde_json::json!({
                    "accepted": true,
                    "witness_r": witness,
                    "stable_grid": sys.stable_grid_size().to_string(),
                }));
            } else {
                ok_text(&format!("accepted\nwitness r = [{}]", witness.join(", ")));
            }
        }
        MatrixAction::Stabilize { input, config } => {
            let file = load_matrix(&input.input)?;
            let start = match config {
                Some(s) => ChipConfig(parse_vec(&s)?),
                None => file
                    .config
                    .ok_or("no configuration given (use --config or a config file)")?,
            };
            let sys = certify(file.matrix)?;
            let (stable, record) = sys.stabilize(&start).map_err(|e| e.to_string())?;
            if json {
                let sequence: Vec<usize> = record.sequence.iter().map(|i| i + 1).collect();
                let counts: Vec<String> = record.counts.iter().map(|c| c.to_string()).collect();
                ok_json(serde_json::json!({
                    "stable": stable.0.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "firings": record.total_firings().to_string(),
                    "record": {"sequence": sequence, "counts": counts},
                }));
            } else {
                let seq: Vec<String> =
                    record.sequence.iter().map(|i| (i + 1).to_string()).collect();
                ok_text(&format!(
                    "stable = {}\nfirings = {}\ncounts = {}\nsequence = [{}]",
                    format_config(&stable),
                    record.total_firings(),
                    format_config(&ChipConfig(record.counts.clone())),
                    seq.join(",")
                ));
            }
        }
        MatrixAction::Recurrents(input) => {
            let file = load_matrix(&input.input)?;
            let sys = certify(file.matrix)?;
            let reps = sys
                .recurrent_representatives(guard)
                .map_err(|e| e.to_string())?;
            print_configs("recurrents", &reps, json);
        }
        MatrixAction::Superstables(input) => {
            let file = load_matrix(&input.input)?;
            let sys = certify(file.matrix)?;
            let reps = sys
                .superstable_representatives(guard)
                .map_err(|e| e.to_string())?;
            print_configs("superstables", &reps, json);
        }
        MatrixAction::CriticalGroup(input) => {
            let file = load_matrix(&input.input)?;
            let sys = certify(file.matrix)?;
            let inv = critlib::intlinalg::cokernel_invariants(&sys.matrix().transpose());
            if json {
                ok_json(serde_json::json!({"critical_group": inv.to_string()}));
            } else {
                ok_text(&inv.to_string());
            }
        }
        MatrixAction::Burning { input, b } => {
            let file = load_matrix(&input.input)?;
            let sys = certify(file.matrix)?;
            let b = ChipConfig(parse_vec(&b)?);
            let cert = sys.check_burning(&b).map_err(|e| e.to_string())?;
            let z: Vec<String> = cert.z.iter().map(|v| v.to_string()).collect();
            if json {
                ok_json(serde_json::json!({"burning": true, "z": z}));
            } else {
                ok_text(&format!("burning configuration\nz = [{}]", z.join(",")));
            }
        }
        MatrixAction::ZeroCoset(input) => {
            let file = load_matrix(&input.input)?;
            let sys = certify(file.matrix)?;
            let v = sys.zero_coset_recurrent(guard).map_err(|e| e.to_string())?;
            if json {
                ok_json(serde_json::json!({
                    "zero_coset": v.0.iter().map(|x| x.to_string()).collect::<Vec<_>>()
                }));
            } else {
                ok_text(&format_config(&v));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_configs(label: &str, reps: &[ChipConfig], json: bool) {
    if json {
        let list: Vec<Vec<String>> = reps
            .iter()
            .map(|v| v.0.iter().map(|x| x.to_string()).collect())
            .collect();
        ok_json(serde_json::json!({label: list, "count": reps.len()}));
    } else {
        let mut out = String::new();
        for v in reps {
            out.push_str(&format_config(v));
            out.push('\n');
        }
        out.push_str(&format!("count = {}", reps.len()));
        ok_text(&out);
    }
}

fn run_root(action: RootAction, guard: u64, json: bool) -> Result<ExitCode, String> {
    match action {
        RootAction::Cartan { r#type } => {
            let data = root_system(parse_type(&r#type)?);
            if json {
                ok_json(serde_json::json!({
                    "type": data.dynkin.to_string(),
                    "cartan": data.cartan.to_json(),
                    "extended_cartan": data.extended_cartan.to_json(),
                }));
            } else {
                ok_text(&format!("{}", data.cartan));
            }
        }
        RootAction::Roots { r#type } => {
            let data = root_system(parse_type(&r#type)?);
            if json {
                let roots: Vec<serde_json::Value> = data
                    .poset
                    .roots
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "simple": r.simple,
                            "weight": r.weight,
                            "height": r.height,
                        })
                    })
                    .collect();
                ok_json(serde_json::json!({
                    "count": roots.len(),
                    "roots": roots,
                    "highest": data.highest().simple,
                    "highest_short": data.highest_short().simple,
                }));
            } else {
                let mut out = String::new();
                for r in &data.poset.roots {
                    out.push_str(&format!(
                        "simple {:?}  weight {:?}  height {}\n",
                        r.simple, r.weight, r.height
                    ));
                }
                out.push_str(&format!("count = {}", data.poset.len()));
                ok_text(&out);
            }
        }
        RootAction::Minuscule { r#type } => {
            let data = root_system(parse_type(&r#type)?);
            let nodes: Vec<usize> = data.minuscule_nodes.iter().map(|i| i + 1).collect();
            if json {
                ok_json(serde_json::json!({
                    "minuscule_nodes": nodes,
                    "index_of_connection": data.index_of_connection,
                }));
            } else {
                let labels: Vec<String> = nodes.iter().map(|n| n.to_string()).collect();
                ok_text(&format!(
                    "minuscule nodes = {{{}}}\nindex of connection = {}",
                    labels.join(", "),
                    data.index_of_connection
                ));
            }
        }
        RootAction::VerifyThm1 { r#type } => {
            let data = root_system(parse_type(&r#type)?);
            let report = verify_minuscule_theorem(&data, guard).map_err(|e| e.to_string())?;
            if json {
                let configs = |v: &[ChipConfig]| -> Vec<Vec<String>> {
                    v.iter()
                        .map(|c| c.0.iter().map(|x| x.to_string()).collect())
                        .collect()
                };
                ok_json(serde_json::json!({
                    "type": report.dynkin.to_string(),
                    "passed": report.passed(),
                    "superstables": configs(&report.computed_superstables),
                    "recurrents": configs(&report.computed_recurrents),
                }));
            } else {
                let mut out = format!(
                    "{}: {}\n",
                    report.dynkin,
                    if report.passed() { "pass" } else { "FAIL" }
                );
                out.push_str("superstables:\n");
                for v in &report.computed_superstables {
                    out.push_str(&format!("  {}\n", format_config(v)));
                }
                out.push_str("recurrents:\n");
                for v in &report.computed_recurrents {
                    out.push_str(&format!("  {}\n", format_config(v)));
                }
                out.pop();
                ok_text(&out);
            }
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        RootAction::ChainFromRho { r#type } => {
            let data = root_system(parse_type(&r#type)?);
            let run = stabilization_chain_from_rho(&data).map_err(|e| e.to_string())?;
            let fired: Vec<usize> = run.fired.iter().map(|i| i + 1).collect();
            if json {
                let states: Vec<Vec<String>> = run
                    .states
                    .iter()
                    .map(|v| v.0.iter().map(|x| x.to_string()).collect())
                    .collect();
                ok_json(serde_json::json!({"fired": fired, "states": states}));
            } else {
                let mut out = String::new();
                for (k, state) in run.states.iter().enumerate() {
                    out.push_str(&format_weight_layout(data.dynkin, state));
                    if k < fired.len() {
                        out.push_str(&format!("  topple {}\n", fired[k]));
                    }
                }
                out.push_str(&format!("topplings = {}", fired.len()));
                ok_text(&out);
            }
        }
        RootAction::Looping { r#type, node } => {
            let data = root_system(parse_type(&r#type)?);
            if node == 0 || node > data.rank() {
                return Err(format!("node {node} out of range (1-based)"));
            }
            let run =
                minuscule_toppling_and_looping(&data, node - 1).map_err(|e| e.to_string())?;
            let fired: Vec<usize> = run.fired.iter().map(|i| i + 1).collect();
            if json {
                let topple: Vec<Vec<String>> = run
                    .topple_states
                    .iter()
                    .map(|v| v.0.iter().map(|x| x.to_string()).collect())
                    .collect();
                let padded: Vec<Vec<String>> = run
                    .padded_states
                    .iter()
                    .map(|v| v.iter().map(|x| x.to_string()).collect())
                    .collect();
                ok_json(serde_json::json!({
                    "type": run.dynkin.to_string(),
                    "node": node,
                    "fired": fired,
                    "topple_states": topple,
                    "padded_states": padded,
                    "padding": run.padding,
                }));
            } else {
                let mut out = format!("toppling loop at node {node} ({} steps)\n", fired.len());
                for (k, state) in run.topple_states.iter().enumerate() {
                    out.push_str(&format_weight_layout(data.dynkin, state));
                    if k == 0 {
                        out.push_str("  + highest short root\n");
                    } else if k <= fired.len() {
                        out.push_str(&format!("  topple {}\n", fired[k - 1]));
                    }
                }
                out.push_str("padded numbers-game loop (node 0 is the affine node):\n");
                for state in &run.padded_states {
                    let parts: Vec<String> = state.iter().map(|x| x.to_string()).collect();
                    out.push_str(&format!("  [{}]\n", parts.join(",")));
                }
                out.pop();
                ok_text(&out);
            }
        }
        RootAction::BurningTest { r#type, b } => {
            let data = root_system(parse_type(&r#type)?);
            let b = parse_vec(&b)?;
            let is_burning = critlib::rootsys::burning_configurations_cartan(&data, &b);
            if json {
                ok_json(serde_json::json!({"burning": is_burning}));
            } else {
                ok_text(if is_burning { "burning" } else { "not burning" });
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_gamma(args: &GroupArgs, len: usize) -> Result<Vec<i64>, String> {
    match &args.gamma {
        Some(s) => {
            let v: Result<Vec<i64>, _> = s.split(',').map(|t| t.trim().parse::<i64>()).collect();
            let v = v.map_err(|e| format!("bad gamma: {e}"))?;
            if v.len() != len {
                return Err(format!("gamma must have {len} coefficients"));
            }
            Ok(v)
        }
        None => Ok(vec![]),
    }
}

fn run_mckay(action: MckayAction, json: bool) -> Result<ExitCode, String> {
    match action {
        MckayAction::Build(args) => {
            let (data, _) = build_data(&args)?;
            if json {
                ok_json(serde_json::json!({
                    "group": data.table.name,
                    "degree": data.degree.to_string(),
                    "M": data.m.to_json(),
                    "extended": data.c_ext.to_json(),
                    "reduced": data.c.to_json(),
                    "degrees": data.delta_e.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                    "faithful": data.is_faithful(),
                }));
            } else {
                ok_text(&format!(
                    "group = {}\ndegree = {}\nM =\n{}extended =\n{}reduced =\n{}faithful = {}",
                    data.table.name,
                    data.degree,
                    data.m,
                    data.c_ext,
                    data.c,
                    data.is_faithful()
                ));
            }
        }
        MckayAction::CriticalGroup(args) => {
            let (data, _) = build_data(&args)?;
            let k = data.critical_group().map_err(|e| e.to_string())?;
            if json {
                ok_json(serde_json::json!({"critical_group": k.to_string()}));
            } else {
                ok_text(&k.to_string());
            }
        }
        MckayAction::VerifyAbelianization(args) => {
            let (data, _) = build_data(&args)?;
            let report = abelianization_map(&data).map_err(|e| e.to_string())?;
            if json {
                ok_json(serde_json::json!({
                    "critical_group": report.k_invariants.to_string(),
                    "character_group": report.dual_invariants.to_string(),
                    "isomorphism": report.is_isomorphism,
                    "det_indices": report.det_indices,
                }));
            } else {
                ok_text(&format!(
                    "K = {}\ncharacter group = {}\n{}",
                    report.k_invariants,
                    report.dual_invariants,
                    if report.is_isomorphism {
                        "isomorphism"
                    } else {
                        "surjection only"
                    }
                ));
            }
        }
        MckayAction::RngTable(args) => {
            let (data, _) = build_data(&args)?;
            let k = data.critical_group().map_err(|e| e.to_string())?;
            let rng = RngStructure::new(&data).map_err(|e| e.to_string())?;
            let gens = rng.standard_generators().map_err(|e| e.to_string())?;
            let mut products = Vec::new();
            for (i, x) in gens.iter().enumerate() {
                for (j, y) in gens.iter().enumerate() {
                    let p = rng.multiply(x, y).map_err(|e| e.to_string())?;
                    products.push((i + 1, j + 1, p));
                }
            }
            if json {
                let gens_json: Vec<Vec<String>> = gens
                    .iter()
                    .map(|g| g.0.iter().map(|x| x.to_string()).collect())
                    .collect();
                let prod_json: Vec<serde_json::Value> = products
                    .iter()
                    .map(|(i, j, p)| {
                        serde_json::json!({
                            "i": i,
                            "j": j,
                            "product": p.0.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                ok_json(serde_json::json!({
                    "additive": k.to_string(),
                    "generators": gens_json,
                    "products": prod_json,
                }));
            } else {
                let mut out = format!("additive structure = {k}\n");
                for (i, g) in gens.iter().enumerate() {
                    let parts: Vec<String> = g.0.iter().map(|x| x.to_string()).collect();
                    out.push_str(&format!("g{} = [{}]\n", i + 1, parts.join(",")));
                }
                for (i, j, p) in &products {
                    let parts: Vec<String> = p.0.iter().map(|x| x.to_string()).collect();
                    out.push_str(&format!("g{i} * g{j} = [{}]\n", parts.join(",")));
                }
                out.pop();
                ok_text(&out);
            }
        }
        MckayAction::Cayley {
            invariants,
            generators,
        } => {
            let invariants: Vec<u64> = invariants
                .split(',')
                .map(|t| t.trim().parse::<u64>().map_err(|e| format!("bad invariant: {e}")))
                .collect::<Result<_, _>>()?;
            let rank = invariants.iter().filter(|&&d| d > 1).count().max(1);
            // rank-one groups take a flat comma list; higher ranks separate
            // tuples with semicolons
            let tuples: Vec<String> = if rank == 1 && !generators.contains(';') {
                generators.split(',').map(str::to_string).collect()
            } else {
                generators.split(';').map(str::to_string).collect()
            };
            let generators: Vec<Vec<u64>> = tuples
                .iter()
                .map(|tuple| {
                    tuple
                        .split(',')
                        .map(|t| {
                            t.trim()
                                .parse::<u64>()
                                .map_err(|e| format!("bad generator: {e}"))
                        })
                        .collect()
                })
                .collect::<Result<_, _>>()?;
            let report =
                cayley_digraph_check(&invariants, &generators).map_err(|e| e.to_string())?;
            if json {
                ok_json(serde_json::json!({
                    "group_order": report.group_order,
                    "generators": report.generator_count,
                    "arborescences": report.arborescences.to_string(),
                    "critical_group": report.critical_invariants.to_string(),
                    "zero_sum": report.zero_sum,
                    "exceeds_order": report.exceeds_order,
                }));
            } else {
                ok_text(&format!(
                    "arborescences = {} (|A| = {}): {}\ncritical group = {}\nzero-sum = {}",
                    report.arborescences,
                    report.group_order,
                    if report.exceeds_order {
                        "count exceeds the group order"
                    } else {
                        "count equals the group order"
                    },
                    report.critical_invariants,
                    report.zero_sum
                ));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn build_data(args: &GroupArgs) -> Result<(critlib::mckay::McKayData, Vec<i64>), String> {
    let table = catalog_table(&args.group).map_err(|e| e.to_string())?;
    let gamma = {
        let parsed = parse_gamma(args, table.num_irreducibles())?;
        if parsed.is_empty() {
            table
                .natural_gamma
                .clone()
                .ok_or_else(|| format!("{} has no designated gamma; pass --gamma", args.group))?
        } else {
            parsed
        }
    };
    let data = mckay_cartan(&table, &gamma).map_err(|e| e.to_string())?;
    Ok((data, gamma))
}

fn run_verify_all(args: VerifyArgs, guard: u64, json: bool) -> Result<ExitCode, String> {
    let results = suite::run_all(guard, args.only.as_deref());
    let all_pass = results.iter().all(|r| r.passed);
    if let Some(path) = &args.json {
        let payload = serde_json::json!({
            "passed": all_pass,
            "results": results,
        });
        let text = serde_json::to_string_pretty(&payload).expect("serializable");
        fs::write(path, text).map_err(|e| format!("writing {path}: {e}"))?;
    }
    if json {
        ok_json(serde_json::json!({
            "passed": all_pass,
            "results": results,
        }));
    } else {
        for r in &results {
            println!(
                "{} {} ({})",
                if r.passed { "PASS" } else { "FAIL" },
                r.id,
                r.name
            );
            if !r.passed {
                for line in &r.details {
                    println!("    {line}");
                }
            }
        }
        println!(
            "{}",
            if all_pass {
                "all checks passed"
            } else {
                "SOME CHECKS FAILED"
            }
        );
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

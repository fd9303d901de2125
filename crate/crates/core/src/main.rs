use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use girthbound::bound::{
    check_bound, minimality_lint, no_certificate, parse_certificate, verify_certificate, write_certificate,
    write_verdict, Answer,
};
use girthbound::colour::{cayley_edge_labels, induced_colouring, super_proper_search, RotationSystem};
use girthbound::families::FamilySpec;
use girthbound::graph::{odd_girth, parse_graph, write_graph, Graph};
use girthbound::report::{reproduce, Level};
use girthbound::sp::{
    hom_search, hom_via_certificate, is_k4_minor_free, parse_hom, random_sp_instance, write_hom, DEFAULT_HOM_BUDGET,
};
use girthbound::triples::enumerate_k_good;
use girthbound::{budget_from_env, Error};

#[derive(Parser)]
#[command(name = "girthbound", version, about = "Odd-girth bounds for K4-minor-free graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a named graph or family member.
    Gen {
        family: String,
        params: Vec<u64>,
        #[arg(short, default_value = "-")]
        o: String,
    },
    /// Print the odd-girth, or INF for bipartite graphs.
    Oddgirth { file: String },
    /// Exit 0 iff the graph is K4-minor-free.
    Issp { file: String },
    /// List the k-good triples.
    Triples { k: u32 },
    /// Decide whether the graph bounds the K4-minor-free graphs of
    /// odd-girth at least 2k+1.
    Check {
        file: String,
        #[arg(long)]
        k: u32,
        /// Write the YES certificate here.
        #[arg(long)]
        cert: Option<String>,
        /// Write a NO witness graph here.
        #[arg(long)]
        no_witness: Option<String>,
        #[arg(long, default_value_t = 10_000)]
        cap: usize,
    },
    /// Exit 0 iff the certificate verifies against the graph.
    Verifycert { graph: String, cert: String },
    /// Search for a homomorphism G -> H.
    Hom {
        g: String,
        h: String,
        #[arg(long)]
        injective: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Map G into B using B's certificate.
    Maphom { g: String, b: String, cert: String },
    /// Random K4-minor-free instance of odd-girth at least 2k+1.
    Randsp {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short, default_value = "-")]
        o: String,
    },
    /// Edge-colouring operations.
    Edgecolour {
        #[command(subcommand)]
        op: ColourCmd,
    },
    /// Report violated minimality conditions.
    Lint {
        file: String,
        #[arg(long)]
        k: u32,
    },
    /// Rerun the verdict table.
    Reproduce {
        #[arg(long, default_value = "quick")]
        level: Level,
    },
}

#[derive(Subcommand)]
enum ColourCmd {
    /// Cayley colouring of the projective cube of dimension 2k.
    Pc {
        #[arg(long)]
        k: u32,
    },
    /// Colouring induced by an embedding into the projective cube.
    Induced { g: String, embedding: String },
    /// Super-proper 5-edge-colouring search.
    Superproper {
        g: String,
        rot: String,
        /// Forbidden colour pairs, e.g. `--pairs 1,2 3,4`.
        #[arg(long, num_args = 0..)]
        pairs: Vec<String>,
        #[arg(long)]
        budget: Option<u64>,
    },
}

fn read(path: &str) -> Result<String, Error> {
    let mut s = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    res.map_err(|e| Error::Domain(format!("cannot read {path}: {e}")))?;
    Ok(s)
}

fn write(path: &str, text: &str) -> Result<(), Error> {
    let res = if path == "-" {
        std::io::stdout().write_all(text.as_bytes())
    } else {
        std::fs::write(path, text)
    };
    res.map_err(|e| Error::Domain(format!("cannot write {path}: {e}")))
}

fn graph(path: &str) -> Result<Graph, Error> {
    parse_graph(&read(path)?)
}

fn parse_pair(s: &str) -> Result<(u32, u32), Error> {
    let bad = || Error::Domain(format!("bad colour pair `{s}` (expected a,b)"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.cmd {
        Cmd::Gen { family, params, o } => {
            let g = FamilySpec::parse(&family, &params)?.build()?;
            write(&o, &write_graph(&g))?;
        }
        Cmd::Oddgirth { file } => match odd_girth(&graph(&file)?) {
            Some(l) => println!("{l}"),
            None => println!("INF"),
        },
        Cmd::Issp { file } => {
            let yes = is_k4_minor_free(&graph(&file)?);
            println!("{}", if yes { "YES" } else { "NO" });
            return Ok(if yes { 0 } else { 1 });
        }
        Cmd::Triples { k } => {
            for t in enumerate_k_good(k) {
                println!("{} {} {}", t.p, t.q, t.r);
            }
        }
        Cmd::Check {
            file,
            k,
            cert,
            no_witness,
            cap,
        } => {
            let b = graph(&file)?;
            let v = check_bound(&b, k);
            match v.answer {
                Answer::Yes => {
                    println!("YES");
                    if let (Some(path), Some(c)) = (cert, &v.certificate) {
                        write(&path, &write_certificate(c))?;
                    }
                }
                Answer::No => {
                    print!("{}", write_verdict(&v));
                    if let Some(path) = no_witness {
                        match no_certificate(&b, k, &v, cap) {
                            Ok(w) => write(&path, &write_graph(&w))?,
                            Err(e) => eprintln!("no witness: {e}"),
                        }
                    }
                }
            }
            return Ok(if v.answer == Answer::Yes { 0 } else { 1 });
        }
        Cmd::Verifycert { graph: gp, cert } => {
            let b = graph(&gp)?;
            let c = parse_certificate(&read(&cert)?)?;
            let ok = c.base == b && verify_certificate(&b, &c, c.k);
            println!("{}", if ok { "VALID" } else { "INVALID" });
            return Ok(if ok { 0 } else { 1 });
        }
        Cmd::Hom {
            g,
            h,
            injective,
            budget,
        } => {
            let (g, h) = (graph(&g)?, graph(&h)?);
            let budget = budget.unwrap_or_else(|| budget_from_env(DEFAULT_HOM_BUDGET));
            match hom_search(&g, &h, injective, budget)? {
                Some(m) => print!("{}", write_hom(&m, h.n())),
                None => {
                    println!("NONE");
                    return Ok(1);
                }
            }
        }
        Cmd::Maphom { g, b, cert } => {
            let (g, b) = (graph(&g)?, graph(&b)?);
            let c = parse_certificate(&read(&cert)?)?;
            let m = hom_via_certificate(&g, &b, &c, c.k)?;
            print!("{}", write_hom(&m, b.n()));
        }
        Cmd::Randsp { k, n, seed, o } => {
            write(&o, &write_graph(&random_sp_instance(k, n, seed)?))?;
        }
        Cmd::Edgecolour { op } => match op {
            ColourCmd::Pc { k } => print!("{}", cayley_edge_labels(k)?.1.write()),
            ColourCmd::Induced { g, embedding } => {
                let g = graph(&g)?;
                let (m, nh) = parse_hom(&read(&embedding)?)?;
                let dim = nh.trailing_zeros();
                if !nh.is_power_of_two() || dim % 2 != 0 {
                    return Err(Error::NotEmbedding);
                }
                print!("{}", induced_colouring(&g, dim / 2, &m)?.write());
            }
            ColourCmd::Superproper { g, rot, pairs, budget } => {
                let g = graph(&g)?;
                let rot = RotationSystem::parse(&read(&rot)?)?;
                let pairs = pairs.iter().map(|p| parse_pair(p)).collect::<Result<Vec<_>, _>>()?;
                let budget = budget.unwrap_or_else(|| budget_from_env(DEFAULT_HOM_BUDGET));
                match super_proper_search(&g, &rot, &pairs, budget)? {
                    Some(c) => print!("{}", c.write()),
                    None => {
                        println!("UNSAT");
                        return Ok(1);
                    }
                }
            }
        },
        Cmd::Lint { file, k } => {
            let r = minimality_lint(&graph(&file)?, k);
            print!("{r}");
            return Ok(if r.is_clean() { 0 } else { 1 });
        }
        Cmd::Reproduce { level } => {
            let r = reproduce(level);
            print!("{r}");
            return Ok(if r.pass() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(2);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

use std::path::PathBuf;
use std::str::FromStr;

use clap::Args;
use facedist::characters::{
    g_count, hook_dimension, lemma1_check, s_subset_count, HookIndex, HookRatioRow,
};
use facedist::distributions::{
    class_product_exact, class_product_sampled, full_cycle_bound_holds_exact, kn_squared_tv_bound,
    parity_target, theorem1_bound, tv_to_uniform_parity, ClassDistribution, Mass,
};
use facedist::enumeration::{
    exact_face_distribution, EdgeSchemeMode, EnumerationScope, DEFAULT_CAP,
};
use facedist::mapcore::{CombinatorialMap, Graph};
use facedist::permcore::CycleType;
use facedist::Error;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::output::{soft_check, Report, Status, Table};

/// Why a run stopped early.
#[derive(Debug)]
pub enum Failure {
    Capacity(String),
    BadInput(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Capacity { what, predicted, cap } => Failure::Capacity(format!(
                "refusing to enumerate {predicted} {what} (cap {cap}); raise --cap or use a sampling subcommand"
            )),
            other => Failure::BadInput(other.to_string()),
        }
    }
}

fn bad(msg: impl Into<String>) -> Failure {
    Failure::BadInput(msg.into())
}

fn config<T: Serialize>(args: &T) -> Value {
    serde_json::to_value(args).expect("arguments serialise")
}

// enumerate

#[derive(Args, Debug, Serialize)]
#[group(skip)]
#[command(group = clap::ArgGroup::new("graph").required(true).multiple(false).args(["kn", "cycle", "edges"]))]
pub struct EnumerateArgs {
    /// Complete graph K_n
    #[arg(long)]
    pub kn: Option<usize>,
    /// Cycle graph C_n
    #[arg(long)]
    pub cycle: Option<usize>,
    /// Edge list with 1-based vertices, e.g. "1-2,2-3,3-1"
    #[arg(long)]
    pub edges: Option<String>,
    /// Vertex count for --edges; defaults to the largest vertex named
    #[arg(long, requires = "edges")]
    pub vertices: Option<usize>,
    /// Visit every edge scheme, not only the canonical one
    #[arg(long, conflicts_with = "fixed_e")]
    pub all_e: bool,
    /// Only the canonical edge scheme (the default)
    #[arg(long)]
    pub fixed_e: bool,
    /// Refuse scopes with more maps than this
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: u64,
}

fn parse_edges(spec: &str, vertices: Option<usize>) -> Result<Graph, Failure> {
    let mut edges = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (a, b) = item
            .split_once('-')
            .ok_or_else(|| bad(format!("edge {item:?} is not of the form a-b")))?;
        let parse = |s: &str| -> Result<usize, Failure> {
            let x: usize = s
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad vertex {s:?}")))?;
            x.checked_sub(1).ok_or_else(|| bad("vertices are 1-based"))
        };
        edges.push((parse(a)?, parse(b)?));
    }
    let named = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
    Ok(Graph::new(vertices.unwrap_or(named), &edges)?)
}

pub fn enumerate(args: &EnumerateArgs) -> Result<Report, Failure> {
    let graph = match (args.kn, args.cycle, &args.edges) {
        (Some(n), _, _) => Graph::complete(n)?,
        (_, Some(n), _) => Graph::cycle(n)?,
        (_, _, Some(spec)) => parse_edges(spec, args.vertices)?,
        _ => return Err(bad("no graph given")),
    };
    let mode = if args.all_e {
        EdgeSchemeMode::All
    } else {
        EdgeSchemeMode::FixedCanonical
    };
    let scope = EnumerationScope::new(graph.clone(), mode).with_cap(args.cap);
    let predicted = scope.predicted_count();
    let dist = exact_face_distribution(&scope)?;

    let mut table = Table::new(["faces", "genus", "count", "mass", "mass_exact"]);
    let mut rows = Vec::new();
    for (&f, &count) in &dist.counts {
        let mass = dist.distribution.mass(f);
        let genus = dist.genus_by_faces[&f];
        table.row([
            f.to_string(),
            genus.to_string(),
            count.to_string(),
            Mass::to_f64(&mass).to_string(),
            mass.to_string(),
        ]);
        rows.push(json!({
            "faces": f,
            "genus": genus,
            "count": count,
            "mass": Mass::to_f64(&mass),
            "mass_exact": mass.to_string(),
        }));
    }
    table.note("maps", dist.maps);
    table.note("expected_faces", &dist.expected_faces);
    Ok(Report {
        command: "enumerate",
        config: config(args),
        seed: None,
        mode: "exact",
        result: json!({
            "vertices": graph.vertex_count(),
            "edges": graph.edges().iter().map(|&(a, b)| [a + 1, b + 1]).collect::<Vec<_>>(),
            "edge_scheme_mode": mode,
            "predicted_count": predicted.to_string(),
            "maps": dist.maps,
            "face_counts": rows,
            "expected_faces": Mass::to_f64(&dist.expected_faces),
            "expected_faces_exact": dist.expected_faces.to_string(),
        }),
        table,
        status: Status::Ok,
    })
}

// classprod

#[derive(Args, Debug, Serialize)]
pub struct ClassprodArgs {
    /// Degree of the symmetric group
    #[arg(long)]
    pub n: usize,
    /// Cycle type of the second factor, e.g. "3,1^2"
    #[arg(long)]
    pub lambda: String,
    /// Cycle type of the first factor; defaults to the full cycle (n)
    #[arg(long)]
    pub alpha: Option<String>,
    /// Exact computation (the default)
    #[arg(long, conflicts_with = "samples")]
    pub exact: bool,
    /// Monte Carlo with this many samples instead
    #[arg(long, requires = "seed")]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
}

/// Largest `n` computed in rational arithmetic.
const RATIONAL_LIMIT: usize = 10;

fn cycle_type(s: &str, n: usize) -> Result<CycleType, Failure> {
    let t = CycleType::from_str(s)?;
    if t.n() != n {
        return Err(bad(format!("{t} is a partition of {}, not of {n}", t.n())));
    }
    Ok(t)
}

fn class_rows<W: Mass>(dist: &ClassDistribution<W>, table: &mut Table) -> Vec<Value> {
    dist.entries()
        .map(|(l, w)| {
            let exact = w.exact_string();
            table.row([
                l.to_string(),
                w.to_f64().to_string(),
                exact.clone().unwrap_or_default(),
            ]);
            json!({
                "cycle_type": l.parts(),
                "mass": w.to_f64(),
                "mass_exact": exact,
            })
        })
        .collect()
}

pub fn classprod(args: &ClassprodArgs) -> Result<Report, Failure> {
    let n = args.n;
    if n < 2 {
        return Err(bad("classprod needs n ≥ 2"));
    }
    let beta = cycle_type(&args.lambda, n)?;
    let alpha = match &args.alpha {
        Some(s) => cycle_type(s, n)?,
        None => CycleType::full_cycle(n),
    };
    let is_full = alpha == CycleType::full_cycle(n);
    let bound = is_full.then(|| theorem1_bound(n, &beta));
    let mut table = Table::new(["cycle_type", "mass", "mass_exact"]);

    if let (Some(samples), Some(seed)) = (args.samples, args.seed) {
        let s = class_product_sampled(&alpha, &beta, samples, seed)?;
        let entries = class_rows(&s.distribution, &mut table);
        table.note("tv", s.tv_to_uniform.estimate);
        let check =
            bound.map(|b| soft_check(s.tv_to_uniform.estimate, s.tv_to_uniform.std_error, b));
        if let Some(b) = bound {
            table.note("bound", b);
        }
        return Ok(Report {
            command: "classprod",
            config: config(args),
            seed: Some(seed),
            mode: "empirical",
            result: json!({
                "alpha": alpha.parts(),
                "lambda": beta.parts(),
                "entries": entries,
                "counts": s.counts.values().collect::<Vec<_>>(),
                "tv_to_parity_uniform": s.tv_to_uniform,
                "bound_check": check,
            }),
            table,
            status: Status::Ok,
        });
    }

    let (mode, entries, tv, tv_exact, holds) = if n <= RATIONAL_LIMIT {
        let dist: ClassDistribution<BigRational> = class_product_exact(&alpha, &beta)?;
        let tv = tv_to_uniform_parity(&dist, parity_target(&alpha, &beta))?;
        let holds = is_full.then(|| full_cycle_bound_holds_exact(&tv, n, beta.fixed_points()));
        (
            "exact",
            class_rows(&dist, &mut table),
            Mass::to_f64(&tv),
            Some(tv.to_string()),
            holds,
        )
    } else {
        let dist: ClassDistribution<f64> = class_product_exact(&alpha, &beta)?;
        let tv = tv_to_uniform_parity(&dist, parity_target(&alpha, &beta))?;
        let holds = bound.map(|b| tv <= b);
        ("float", class_rows(&dist, &mut table), tv, None, holds)
    };
    table.note("tv", tv);
    if let Some(b) = bound {
        table.note("bound", b);
    }
    if let Some(h) = holds {
        table.note("holds", h);
    }
    Ok(Report {
        command: "classprod",
        config: config(args),
        seed: None,
        mode,
        result: json!({
            "alpha": alpha.parts(),
            "lambda": beta.parts(),
            "entries": entries,
            "tv_to_parity_uniform": tv,
            "tv_exact": tv_exact,
            "bound": bound,
            "holds": holds,
        }),
        table,
        status: if holds == Some(false) {
            Status::Violation
        } else {
            Status::Ok
        },
    })
}

// localface

#[derive(Args, Debug, Serialize)]
pub struct LocalfaceArgs {
    /// Work on K_n
    #[arg(long)]
    pub n: usize,
    /// 1-based vertex
    #[arg(long, default_value_t = 1)]
    pub vertex: usize,
    #[arg(long, default_value_t = 10_000)]
    pub samples: u64,
    #[arg(long)]
    pub seed: u64,
}

pub fn localface(args: &LocalfaceArgs) -> Result<Report, Failure> {
    if args.n < 3 {
        return Err(bad("localface needs n ≥ 3"));
    }
    if args.vertex == 0 || args.vertex > args.n {
        return Err(bad(format!("vertex must lie in 1..={}", args.n)));
    }
    let graph = Graph::complete(args.n)?;
    let r = facedist::distributions::local_face_distribution(
        &graph,
        args.vertex - 1,
        args.samples,
        args.seed,
    )?;
    let mut table = Table::new(["cycle_type", "count", "mass"]);
    for (l, &c) in &r.counts {
        table.row([
            l.to_string(),
            c.to_string(),
            r.distribution.mass(l).to_string(),
        ]);
    }
    let squared = r.tv.estimate * r.tv.estimate;
    let kn_bound = kn_squared_tv_bound(args.n);
    table.note("p_hat", r.p_hat.estimate);
    table.note("tv", r.tv.estimate);
    table.note("kn_bound_on_squared_tv", kn_bound);
    let mut result = r.to_json_value();
    result["squared_tv"] = json!(squared);
    result["kn_bound_on_squared_tv"] = json!(kn_bound);
    result["status"] = json!(if squared <= kn_bound
        && r.squared_tv_bound.is_none_or(|b| squared <= b)
    {
        "pass"
    } else {
        "warn"
    });
    Ok(Report {
        command: "localface",
        config: config(args),
        seed: Some(args.seed),
        mode: "empirical",
        result,
        table,
        status: Status::Ok,
    })
}

// knextend

#[derive(Args, Debug, Serialize)]
pub struct KnextendArgs {
    /// Target K_n (n ≥ 4); the new vertex is v_n
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 10_000)]
    pub samples: u64,
    #[arg(long)]
    pub seed: u64,
}

pub fn knextend(args: &KnextendArgs) -> Result<Report, Failure> {
    let r = facedist::distributions::kn_extension_statistics(args.n, args.samples, args.seed)?;
    let reference = facedist::distributions::stirling_reference(args.n - 1, r.p_hat)?;
    let mut table = Table::new(["k", "count", "mass", "reference_mass"]);
    for k in 1..args.n {
        table.row([
            k.to_string(),
            r.face_count_at_v_counts[k - 1].to_string(),
            r.face_count_at_v.mass(k).to_string(),
            reference.mass(k).to_string(),
        ]);
    }
    table.note("not_in_face", r.not_in_face.estimate);
    table.note(
        "not_in_face_conditional",
        r.not_in_face_conditional.estimate,
    );
    table.note("not_in_face_bound", r.not_in_face_bound);
    table.note("faces", r.faces.estimate);
    table.note("faces_bound", r.faces_bound);
    table.note("dprime_fraction", r.dprime_fraction.estimate);
    table.note("p_hat", r.p_hat);
    table.note("tv_to_stirling", r.tv_to_stirling.estimate);
    let mut result = serde_json::to_value(&r).expect("report serialises");
    result["checks"] = json!({
        "not_in_face": soft_check(r.not_in_face.estimate, r.not_in_face.std_error, r.not_in_face_bound),
        "faces": soft_check(r.faces.estimate, r.faces.std_error, r.faces_bound),
    });
    Ok(Report {
        command: "knextend",
        config: config(args),
        seed: Some(args.seed),
        mode: "empirical",
        result,
        table,
        status: Status::Ok,
    })
}

// charcheck

#[derive(Args, Debug, Serialize)]
pub struct CharcheckArgs {
    /// Sweep n = 3..=nmax
    #[arg(long, default_value_t = 12)]
    pub nmax: usize,
}

fn row_json(row: &HookRatioRow) -> Value {
    json!({
        "n": row.hook.n(),
        "k": row.hook.k(),
        "lambda": row.lambda.parts(),
        "chi": row.character.to_string(),
        "f": row.dimension.to_string(),
        "ratio": row.ratio.to_string(),
        "bound": row.bound.to_string(),
        "holds": row.holds,
    })
}

pub fn charcheck(args: &CharcheckArgs) -> Result<Report, Failure> {
    if !(3..=40).contains(&args.nmax) {
        return Err(bad("charcheck needs 3 ≤ nmax ≤ 40"));
    }
    let mut table = Table::new(HookRatioRow::CSV_HEADER);
    let mut sweeps = Vec::new();
    let mut rows = Vec::new();
    let mut violations = 0usize;
    for n in 3..=args.nmax {
        let report = lemma1_check(n)?;
        let bad_rows = report.violations().count();
        violations += bad_rows;
        sweeps.push(json!({
            "n": n,
            "checked": report.rows.len(),
            "violations": bad_rows,
            "max_ratio_over_bound": report.max_ratio_over_bound.to_string(),
        }));
        for row in &report.rows {
            table.row(row.csv_record());
            rows.push(row_json(row));
        }
    }

    let hook = HookIndex::new(12, 4)?;
    let mu = [1, 4, 3, 2, 2];
    let example = json!({
        "hook": hook.to_string(),
        "mu": mu,
        "g": g_count(hook, &mu)?.to_string(),
        "padded_subset_count": s_subset_count(hook, &mu)?.to_string(),
        "subset_bound": facedist::permcore::binomial(6, 2).to_string(),
        "dimension": hook_dimension(hook).to_string(),
    });
    table.note("violations", violations);
    table.note(
        "worked_example",
        format!(
            "g^{hook}(1,4,3,2,2) = {} placements; padded-multiset count = {}; C(6,2) = 15",
            example["g"].as_str().unwrap_or_default(),
            example["padded_subset_count"].as_str().unwrap_or_default()
        ),
    );
    Ok(Report {
        command: "charcheck",
        config: config(args),
        seed: None,
        mode: "exact",
        result: json!({
            "sweeps": sweeps,
            "violations": violations,
            "worked_example": example,
            "rows": rows,
        }),
        table,
        status: if violations == 0 {
            Status::Ok
        } else {
            Status::Violation
        },
    })
}

// inspect

#[derive(Args, Debug, Serialize)]
pub struct InspectArgs {
    /// Map JSON file with 1-based labels
    #[arg(long)]
    pub map: PathBuf,
}

pub fn inspect(args: &InspectArgs) -> Result<Report, Failure> {
    let text = std::fs::read_to_string(&args.map)
        .map_err(|e| bad(format!("cannot read {}: {e}", args.map.display())))?;
    let m = CombinatorialMap::from_json(&text)?;
    let faces: Vec<String> = m
        .faces()
        .faces
        .iter()
        .map(|f| {
            let s: Vec<String> = f.iter().map(|d| (d + 1).to_string()).collect();
            format!("({})", s.join(" "))
        })
        .collect();
    let mut table = Table::new(["vertex", "pi", "omega", "sigma", "omega_type"]);
    let mut vertices = Vec::new();
    for v in 0..m.graph().vertex_count() {
        if m.graph().degree(v) == 0 {
            continue;
        }
        let (pi, omega, sigma) = (m.pi(v)?, m.omega(v)?, m.sigma(v)?);
        table.row([
            (v + 1).to_string(),
            pi.to_cycle_string(),
            omega.to_cycle_string(),
            sigma.to_cycle_string(),
            omega.cycle_type().to_string(),
        ]);
        vertices.push(json!({
            "vertex": v + 1,
            "pi": pi.to_cycle_string(),
            "omega": omega.to_cycle_string(),
            "sigma": sigma.to_cycle_string(),
            "omega_type": omega.cycle_type().parts(),
        }));
    }
    table.note("faces", faces.join(""));
    table.note("genus", m.genus());
    Ok(Report {
        command: "inspect",
        config: config(args),
        seed: None,
        mode: "exact",
        result: json!({
            "face_count": faces.len(),
            "faces": faces,
            "genus": m.genus(),
            "vertices": vertices,
        }),
        table,
        status: Status::Ok,
    })
}

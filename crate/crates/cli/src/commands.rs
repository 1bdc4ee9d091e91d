use std::fs;
use std::io::{self, Read, Write};
use std::time::Instant;

use serde::Serialize;
use szeged_core::enumerate::{Enumerator, ExtremalReport};
use szeged_core::families::{self, BundleSpec};
use szeged_core::graph::cactus_profile;
use szeged_core::indices::{partitions, summarize, QuarterInt};
use szeged_core::io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use szeged_core::verify::{
    verify_minimum, verify_per_graph, verify_second_minimum, Claim, LemmaUniverse, Status,
    StressOptions, VerificationReport, DEFAULT_LEMMA_SAMPLES, DEFAULT_STRESS_SAMPLES,
};
use szeged_core::{Error, Exec, Graph};

use crate::args::{
    Cli, Command, ComputeArgs, EnumerateArgs, FamilyArg, Format, InputSource, SearchArgs,
    VerifyArgs,
};
use crate::output::{write_csv, write_lines, Failure, Meta, Outcome, Verdict};

/// Vertex bound of the class sweeps when `verify` gets no universe flags.
const DEFAULT_VERIFY_MAX_N: usize = 7;

pub fn run(cli: &Cli) -> Outcome<Verdict> {
    let meta = Meta {
        seed: cli.seed,
        workers: cli.workers,
        started: Instant::now(),
    };
    let mut enumerator = Enumerator::new(Exec::from_workers(cli.workers));
    if let Some(cap) = cli.cap {
        enumerator = enumerator.with_max_n(cap)?;
    }
    let ctx = Context {
        meta,
        format: cli.format,
        enumerator,
    };
    match &cli.command {
        Command::Compute(args) => ctx.compute(args),
        Command::Build { family } => ctx.build(family),
        Command::Enumerate(args) => ctx.enumerate(args),
        Command::Search(args) => ctx.search(args),
        Command::Verify(args) => ctx.verify(args),
    }
}

struct Context {
    meta: Meta,
    format: Option<Format>,
    enumerator: Enumerator,
}

impl Context {
    fn format(&self, default: Format, allowed: &[Format]) -> Outcome<Format> {
        let format = self.format.unwrap_or(default);
        if allowed.contains(&format) {
            Ok(format)
        } else {
            Err(Failure::Usage(format!(
                "format {format:?} is not available for this subcommand"
            )))
        }
    }

    fn compute(&self, args: &ComputeArgs) -> Outcome<Verdict> {
        let format = self.format(Format::Json, &[Format::Json, Format::Csv, Format::Human])?;
        let graphs = read_input(&args.input)?;
        let results = graphs
            .iter()
            .map(|g| GraphReport::of(g, args.edges))
            .collect::<Outcome<Vec<_>>>()?;
        match format {
            Format::Json => self.meta.write_json(&ComputeBody { results })?,
            Format::Csv if args.edges => {
                let rows: Vec<EdgeCsvRow> = results
                    .iter()
                    .enumerate()
                    .flat_map(|(graph, r)| {
                        r.edges.iter().flatten().map(move |e| EdgeCsvRow {
                            graph,
                            u: e.u,
                            v: e.v,
                            n_u: e.n_u,
                            n_v: e.n_v,
                            m_u: e.m_u,
                            m_v: e.m_v,
                            m_0: e.m_0,
                        })
                    })
                    .collect();
                write_csv(&rows)?
            }
            Format::Csv => write_csv(&results.iter().map(ComputeRow::of).collect::<Vec<_>>())?,
            _ => write_lines(
                &results
                    .iter()
                    .flat_map(GraphReport::human)
                    .collect::<Vec<_>>(),
            )?,
        }
        Ok(Verdict::Pass)
    }

    fn build(&self, family: &FamilyArg) -> Outcome<Verdict> {
        let format = self.format(Format::G6, &[Format::G6, Format::Edgelist, Format::Json])?;
        let g = match family {
            FamilyArg::C0 { n, k } => families::c0(*n, *k),
            FamilyArg::C1 { n, k } => families::c1(*n, *k),
            FamilyArg::GStar1 { n, k } => families::g_star_1(*n, *k),
            FamilyArg::Bundle { cycles, pendants } => {
                families::bundle(&BundleSpec::new(cycles.clone(), *pendants))
            }
            FamilyArg::Cycle { n } => families::cycle(*n),
            FamilyArg::Path { n } => families::path(*n),
            FamilyArg::Star { n } => families::star(*n),
        }?;
        match format {
            Format::G6 => write_lines(&[emit_graph6(&g)?])?,
            Format::Edgelist => io::stdout()
                .lock()
                .write_all(emit_edge_list(&g).as_bytes())?,
            _ => self.meta.write_json(&BuildBody {
                graph6: emit_graph6(&g).ok(),
                n: g.n(),
                m: g.m(),
                edges: g.edges().to_vec(),
            })?,
        }
        Ok(Verdict::Pass)
    }

    fn enumerate(&self, args: &EnumerateArgs) -> Outcome<Verdict> {
        let format = self.format(Format::G6, &[Format::G6, Format::Json])?;
        let (n, k) = (args.n, args.k);
        if format == Format::G6 && args.labeled {
            // streamed: the labeled family is far larger than the class list
            let mut out = io::BufWriter::new(io::stdout().lock());
            let mut failed = None;
            self.enumerator.for_each_labeled(n, k, |g| {
                if failed.is_none() {
                    if let Err(e) = writeln!(out, "{}", emit_graph6(g).expect("n <= 12")) {
                        failed = Some(e);
                    }
                }
            })?;
            if let Some(e) = failed {
                return Err(e.into());
            }
            out.flush()?;
            return Ok(Verdict::Pass);
        }
        let graphs: Vec<Graph> = if args.labeled {
            self.enumerator.labeled(n, k)?
        } else {
            self.enumerator
                .classes(n, k)?
                .into_iter()
                .map(|c| c.graph)
                .collect()
        };
        let lines = graphs
            .iter()
            .map(emit_graph6)
            .collect::<Result<Vec<_>, _>>()?;
        match format {
            Format::G6 => write_lines(&lines)?,
            _ => self.meta.write_json(&EnumerateBody {
                n,
                k,
                labeled: args.labeled,
                count: lines.len(),
                graphs: lines,
            })?,
        }
        Ok(Verdict::Pass)
    }

    fn search(&self, args: &SearchArgs) -> Outcome<Verdict> {
        let format = self.format(Format::Json, &[Format::Json, Format::Csv, Format::Human])?;
        let n = args.n;
        if n == 0 {
            return Err(Error::NoVertices.into());
        }
        let ks: Vec<usize> = match args.k {
            Some(k) => vec![k],
            None => (0..=(n - 1) / 2).collect(),
        };
        let reports = ks
            .iter()
            .map(|&k| self.enumerator.search_extremal(n, k))
            .collect::<Result<Vec<_>, _>>()?;
        let agrees = reports.iter().all(|r| {
            let min = &r.minimum_bound;
            let second = &r.second_minimum_bound;
            (!args.expect_thm32 || (min.value_matches && min.extremal_matches))
                && (!args.expect_thm44
                    || (second.value_matches != Some(false)
                        && second.extremal_matches != Some(false)))
        });
        match format {
            Format::Json => self.meta.write_json(&SearchBody {
                reports: &reports,
                expectations_met: agrees,
            })?,
            Format::Csv => write_csv(
                &reports
                    .iter()
                    .map(|r| SearchRow::of(r, args.second))
                    .collect::<Vec<_>>(),
            )?,
            _ => write_lines(
                &reports
                    .iter()
                    .map(|r| search_line(r, args.second))
                    .collect::<Vec<_>>(),
            )?,
        }
        Ok(Verdict::from_pass(agrees))
    }

    fn verify(&self, args: &VerifyArgs) -> Outcome<Verdict> {
        let format = self.format(Format::Json, &[Format::Json, Format::Csv, Format::Human])?;
        let claim: Claim = args.claim.parse()?;
        let runs = if claim.is_per_graph() {
            if args.n.is_some() || args.m.is_some() {
                return Err(Failure::Usage(format!(
                    "{claim} takes --max-n, not a single class"
                )));
            }
            let universe = LemmaUniverse {
                max_n: args.max_n.unwrap_or(LemmaUniverse::default().max_n),
                samples: args.samples.unwrap_or(DEFAULT_LEMMA_SAMPLES),
                seed: self.meta.seed,
                sample_max_n: args.sample_max_n,
            };
            self.within_cap(universe.max_n)?;
            vec![Run {
                n: None,
                k: None,
                report: verify_per_graph(claim, &universe, &self.enumerator)?,
            }]
        } else {
            let stress = StressOptions {
                samples: args.samples.unwrap_or(DEFAULT_STRESS_SAMPLES),
                seed: self.meta.seed,
            };
            let classes = self.classes_to_verify(args)?;
            classes
                .into_iter()
                .map(|(n, k)| {
                    let report = if claim == Claim::Minimum {
                        verify_minimum(n, k, &stress, &self.enumerator)
                    } else {
                        verify_second_minimum(n, k, &stress, &self.enumerator)
                    }?;
                    Ok(Run {
                        n: Some(n),
                        k: Some(k),
                        report,
                    })
                })
                .collect::<Outcome<Vec<_>>>()?
        };
        let status = overall_status(&runs);
        match format {
            Format::Json => self.meta.write_json(&VerifyBody {
                claim,
                status,
                runs: &runs,
            })?,
            Format::Csv => write_csv(&runs.iter().map(VerifyRow::of).collect::<Vec<_>>())?,
            _ => write_lines(&verify_lines(claim, status, &runs))?,
        }
        Ok(Verdict::from_pass(status != Status::Fail))
    }

    fn within_cap(&self, n: usize) -> Outcome<()> {
        let cap = self.enumerator.max_n();
        if n > cap {
            return Err(Error::CapExceeded { n, cap }.into());
        }
        Ok(())
    }

    /// `(n, k)` pairs named by the universe flags of a class claim.
    fn classes_to_verify(&self, args: &VerifyArgs) -> Outcome<Vec<(usize, usize)>> {
        match (args.n, args.m, args.k) {
            (Some(n), None, Some(k)) => Ok(vec![(n, k)]),
            (None, Some(m), Some(k)) => {
                let n = (m + 1).checked_sub(k).filter(|&n| n > 0).ok_or_else(|| {
                    Error::Infeasible(format!("m = {m} and k = {k} give no vertex count"))
                })?;
                Ok(vec![(n, k)])
            }
            (None, None, k) => {
                let max_n = args.max_n.unwrap_or(DEFAULT_VERIFY_MAX_N);
                self.within_cap(max_n)?;
                Ok((3..=max_n)
                    .flat_map(|n| (1..=(n - 1) / 2).map(move |k| (n, k)))
                    .filter(|&(_, kk)| k.is_none_or(|k| k == kk))
                    .collect())
            }
            _ => Err(Failure::Usage("--n and --m need --k".into())),
        }
    }
}

fn read_input(input: &InputSource) -> Outcome<Vec<Graph>> {
    if let Some(text) = &input.g6 {
        return Ok(vec![parse_graph6(text)?]);
    }
    if let Some(path) = &input.file {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        if path.extension().and_then(|e| e.to_str()) == Some("g6") {
            return graph6_lines(&text);
        }
        return Ok(vec![parse_edge_list(&text)?]);
    }
    let mut text = String::new();
    io::stdin().read_to_string(&mut text)?;
    graph6_lines(&text)
}

fn graph6_lines(text: &str) -> Outcome<Vec<Graph>> {
    let graphs = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect::<Result<Vec<_>, _>>()?;
    if graphs.is_empty() {
        return Err(Failure::Usage("no graphs in input".into()));
    }
    Ok(graphs)
}

// ---------------------------------------------------------------------------
// Report bodies

#[derive(Serialize)]
struct ComputeBody {
    results: Vec<GraphReport>,
}

#[derive(Serialize)]
struct GraphReport {
    /// Absent above the graph6 size limit.
    graph6: Option<String>,
    n: usize,
    m: usize,
    wiener: u64,
    szeged: u64,
    edge_revised_szeged: QuarterInt,
    diff_square_sum: i64,
    is_cactus: bool,
    /// Cycle count, for cacti.
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<EdgeRow>>,
}

#[derive(Serialize)]
struct EdgeRow {
    u: usize,
    v: usize,
    n_u: usize,
    n_v: usize,
    m_u: usize,
    m_v: usize,
    m_0: usize,
}

/// One edge of one input graph, numbered in input order.
#[derive(Serialize)]
struct EdgeCsvRow {
    graph: usize,
    u: usize,
    v: usize,
    n_u: usize,
    n_v: usize,
    m_u: usize,
    m_v: usize,
    m_0: usize,
}

impl GraphReport {
    fn of(g: &Graph, with_edges: bool) -> Outcome<Self> {
        let summary = summarize(g)?;
        let profile = cactus_profile(g)?;
        let edges = if with_edges {
            let p = partitions(g)?;
            Some(
                g.edges()
                    .iter()
                    .zip(p.vertex.iter().zip(&p.edge))
                    .map(|(&(u, v), (vp, ep))| EdgeRow {
                        u,
                        v,
                        n_u: vp.n_u,
                        n_v: vp.n_v,
                        m_u: ep.m_u,
                        m_v: ep.m_v,
                        m_0: ep.m_0,
                    })
                    .collect(),
            )
        } else {
            None
        };
        Ok(GraphReport {
            graph6: emit_graph6(g).ok(),
            n: summary.n,
            m: summary.m,
            wiener: summary.wiener,
            szeged: summary.szeged,
            edge_revised_szeged: summary.edge_revised_szeged,
            diff_square_sum: summary.diff_square_sum,
            is_cactus: profile.is_cactus,
            k: profile.is_cactus.then_some(profile.k),
            edges,
        })
    }

    fn human(&self) -> Vec<String> {
        let mut lines = vec![
            format!(
                "{}  n = {}  m = {}",
                self.graph6.as_deref().unwrap_or("(large graph)"),
                self.n,
                self.m
            ),
            format!("  Wiener   {}", self.wiener),
            format!("  Szeged   {}", self.szeged),
            format!(
                "  Sz*e     {} = {}",
                self.edge_revised_szeged,
                self.edge_revised_szeged.to_decimal()
            ),
        ];
        for e in self.edges.iter().flatten() {
            lines.push(format!(
                "  ({},{})  m_u = {}  m_v = {}  m_0 = {}",
                e.u, e.v, e.m_u, e.m_v, e.m_0
            ));
        }
        lines
    }
}

#[derive(Serialize)]
struct ComputeRow {
    graph6: String,
    n: usize,
    m: usize,
    wiener: u64,
    szeged: u64,
    sz_e_quarters: i64,
    sz_e_decimal: String,
}

impl ComputeRow {
    fn of(r: &GraphReport) -> Self {
        ComputeRow {
            graph6: r.graph6.clone().unwrap_or_default(),
            n: r.n,
            m: r.m,
            wiener: r.wiener,
            szeged: r.szeged,
            sz_e_quarters: r.edge_revised_szeged.quarters(),
            sz_e_decimal: r.edge_revised_szeged.to_decimal(),
        }
    }
}

#[derive(Serialize)]
struct BuildBody {
    graph6: Option<String>,
    n: usize,
    m: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct EnumerateBody {
    n: usize,
    k: usize,
    labeled: bool,
    count: usize,
    graphs: Vec<String>,
}

#[derive(Serialize)]
struct SearchBody<'a> {
    reports: &'a [ExtremalReport],
    /// Every `--expect-*` cross-check agreed; true when none was requested.
    expectations_met: bool,
}

#[derive(Serialize)]
struct SearchRow {
    n: usize,
    k: usize,
    m: usize,
    classes: usize,
    min_quarters: i64,
    min_decimal: String,
    minimizers: usize,
    bound_case: &'static str,
    bound_agrees: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    second_quarters: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    second_decimal: Option<String>,
}

impl SearchRow {
    fn of(r: &ExtremalReport, second: bool) -> Self {
        let second_min = r.second_min.filter(|_| second);
        SearchRow {
            n: r.n,
            k: r.k,
            m: r.m,
            classes: r.class_count,
            min_quarters: r.min.quarters(),
            min_decimal: r.min.to_decimal(),
            minimizers: r.min_witnesses.len(),
            bound_case: r.minimum_bound.bound.case.label,
            bound_agrees: r.minimum_bound.value_matches && r.minimum_bound.extremal_matches,
            second_quarters: second.then(|| second_min.map_or(-1, |v| v.quarters())),
            second_decimal: second.then(|| second_min.map(|v| v.to_decimal()).unwrap_or_default()),
        }
    }
}

fn search_line(r: &ExtremalReport, second: bool) -> String {
    let witnesses: Vec<&str> = r.min_witnesses.iter().map(|w| w.graph6.as_str()).collect();
    let agreement = if r.minimum_bound.value_matches && r.minimum_bound.extremal_matches {
        "agrees"
    } else {
        "DISAGREES"
    };
    let mut line = format!(
        "n = {}  k = {}  m = {}  classes = {}  min = {} at {}  bound {} {}",
        r.n,
        r.k,
        r.m,
        r.class_count,
        r.min,
        witnesses.join(","),
        r.minimum_bound.bound.case.label,
        agreement
    );
    if second {
        match r.second_min {
            Some(v) => {
                let at: Vec<&str> = r
                    .second_witnesses
                    .iter()
                    .map(|w| w.graph6.as_str())
                    .collect();
                line.push_str(&format!("  second = {v} at {}", at.join(",")));
            }
            None => line.push_str("  second = none"),
        }
    }
    line
}

#[derive(Serialize)]
struct Run {
    n: Option<usize>,
    k: Option<usize>,
    report: VerificationReport,
}

#[derive(Serialize)]
struct VerifyBody<'a> {
    claim: Claim,
    status: Status,
    runs: &'a [Run],
}

fn overall_status(runs: &[Run]) -> Status {
    let statuses: Vec<Status> = runs.iter().map(|r| r.report.status).collect();
    if statuses.contains(&Status::Fail) {
        Status::Fail
    } else if statuses.contains(&Status::Pass) {
        Status::Pass
    } else {
        Status::Informational
    }
}

#[derive(Serialize)]
struct VerifyRow {
    claim: Claim,
    n: Option<usize>,
    k: Option<usize>,
    status: Status,
    checked: usize,
    not_applicable: usize,
    out_of_domain: usize,
    violations: usize,
    findings: usize,
}

impl VerifyRow {
    fn of(run: &Run) -> Self {
        let r = &run.report;
        VerifyRow {
            claim: r.claim,
            n: run.n,
            k: run.k,
            status: r.status,
            checked: r.checked,
            not_applicable: r.not_applicable,
            out_of_domain: r.out_of_domain,
            violations: r.violation_count,
            findings: r.findings.len(),
        }
    }
}

fn verify_lines(claim: Claim, status: Status, runs: &[Run]) -> Vec<String> {
    let mut lines = vec![format!("{claim}: {status:?}")];
    for run in runs {
        let r = &run.report;
        let scope = match (run.n, run.k) {
            (Some(n), Some(k)) => format!("C({n},{k})"),
            _ => "universe".to_string(),
        };
        lines.push(format!(
            "  {scope}: {:?}, {} checked, {} violations",
            r.status, r.checked, r.violation_count
        ));
        for v in &r.violations {
            lines.push(format!(
                "    VIOLATION {:?} {} {}: {} vs {}",
                v.kind, v.graph6, v.subject, v.observed, v.bound
            ));
        }
        for f in &r.findings {
            lines.push(format!("    FINDING {:?}: {}", f.kind, f.message));
        }
    }
    lines
}

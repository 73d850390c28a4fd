//! Command-line front end: parse, construct, certify, report.

use std::fmt::Write as _;
use std::panic;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::certificate::Certificate;
use crate::embed3::{build_tau, preset_family, verify_tau, EmbeddingA3, PresetKind};
use crate::equivariant::{build_delta, verify_delta_equivariance, verify_fixed_locus};
use crate::error::{Error, Result};
use crate::exactfield::{set_conductor_cap, CycNum};
use crate::planar3::{
    fmt_triple, normalize_planar, parse_triple, verify_extension, PlanarEmbedding, DEFAULT_DEGREE_CAP,
};
use crate::plane2::{cor25_family, cor25_h, decide_extendability, CurveAut, ExtendabilityVerdict, DEFAULT_ORDER_CAP};
use crate::polyring::{parse_constant, parse_ratfun, parse_upoly, URatFun};
use crate::projline::{
    aut_of_lambda, group_closure, mat2, orbit_decompose, split_top, FinSubgroupH, Moebius, P1Point, DEFAULT_GROUP_CAP,
};

#[derive(Parser, Debug)]
#[command(name = "eqcurve", version, about = "Exact equivariant embeddings of punctured projective lines")]
pub struct Cli {
    #[command(flatten)]
    pub flags: Flags,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Flags {
    /// Total degree cap for polynomial witness searches.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_CAP)]
    pub degree_cap: u32,
    /// Largest allowed phi(m) for cyclotomic fields Q(zeta_m).
    #[arg(long, global = true, default_value_t = 256)]
    pub conductor_cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Include intermediate data (orbits, delta, per-orbit terms).
    #[arg(long, global = true)]
    pub certificate: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Automorphism group of P^1 minus the given points.
    Aut {
        /// Points such as "[0:1],[1:1],[1:0]".
        #[arg(long)]
        lambda: String,
    },
    /// Equivariant self-map of P^1 whose fixed points are exactly Lambda.
    Delta {
        #[arg(long)]
        lambda: String,
        /// auto, cyclic:N, dihedral:N or tetrahedral.
        #[arg(long, default_value = "auto")]
        group: String,
    },
    /// Equivariant closed embedding of P^1 minus Lambda into A^3.
    Embed {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "auto")]
        group: String,
    },
    /// Closed-form embedding for a standard group: orbits given by (a,b) pairs.
    Preset {
        /// cyclic:N, dihedral:N or tetrahedral.
        #[arg(long)]
        kind: String,
        /// Pairs such as "1,-1; 2,3".
        #[arg(long)]
        params: String,
    },
    /// Chain of automorphisms of A^3 carrying x -> (0, Q, R) to x -> (x, 1/P, 0).
    PlanarNormalize {
        #[arg(long = "P")]
        p: String,
        #[arg(long = "Q")]
        q: String,
        #[arg(long = "R")]
        r: String,
        /// Overrides --degree-cap.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Checks F(tau(phi(x))) = tau(x).
    VerifyExtension {
        /// Polynomial triple in X, Y, Z, e.g. "(Z, Y, X)".
        #[arg(long = "F")]
        f: String,
        /// Rational triple in x, e.g. "(x, 1/(x*(x-1)), 0)".
        #[arg(long)]
        tau: String,
        /// Matrix "[[a,b],[c,d]]" acting on x.
        #[arg(long)]
        phi: String,
    },
    /// Decides whether g extends to the plane for some embedding.
    PlaneExtend {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        g: String,
    },
    /// The 3k points [a_i w^j : 1].
    Cor25 {
        #[arg(long)]
        k: usize,
        /// Comma-separated, first entry 1.
        #[arg(long)]
        a: String,
    },
}

#[derive(Debug, Default, Serialize)]
pub struct Section {
    pub title: String,
    pub body: String,
}

#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub sections: Vec<Section>,
    pub certificates: Vec<Certificate>,
}

impl Report {
    fn new(command: &str) -> Self {
        Report { command: command.into(), ..Default::default() }
    }

    fn section(&mut self, title: &str, body: impl Into<String>) {
        self.sections.push(Section { title: title.into(), body: body.into() });
    }

    pub fn passed(&self) -> bool {
        self.certificates.iter().all(Certificate::passed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                #[derive(Serialize)]
                struct Out<'a> {
                    status: &'static str,
                    #[serde(flatten)]
                    report: &'a Report,
                }
                let status = if self.passed() { "pass" } else { "fail" };
                serde_json::to_string_pretty(&Out { status, report: self }).expect("serialisable") + "\n"
            }
            Format::Text => {
                let mut s = format!("# {}\n", self.command);
                for sec in &self.sections {
                    let _ = writeln!(s, "\n## {}\n{}", sec.title, sec.body.trim_end());
                }
                for c in &self.certificates {
                    let _ = write!(s, "\n{c}");
                }
                s
            }
        }
    }
}

/// Exit status contract.
pub mod exit {
    pub const OK: i32 = 0;
    pub const CERTIFICATE_FAILURE: i32 = 1;
    pub const PARSE_ERROR: i32 = 2;
    pub const CONSTRUCTION_ERROR: i32 = 3;
}

fn parse_points(s: &str) -> Result<Vec<P1Point>> {
    let pts = P1Point::parse_list(s)?;
    if pts.is_empty() {
        return Err(Error::Parse("no points given".into()));
    }
    Ok(pts)
}

fn parse_order(s: &str, name: &str) -> Result<u64> {
    s.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad order in {name}:{s}")))
}

fn parse_preset_kind(s: &str) -> Result<PresetKind> {
    let s = s.trim().to_ascii_lowercase();
    match s.split_once(':') {
        Some(("cyclic", n)) => Ok(PresetKind::Cyclic(parse_order(n, "cyclic")?)),
        Some(("dihedral", n)) => Ok(PresetKind::Dihedral(parse_order(n, "dihedral")?)),
        None if s == "tetrahedral" => Ok(PresetKind::Tetrahedral),
        _ => Err(Error::Parse(format!("unknown group `{s}` (cyclic:N, dihedral:N, tetrahedral)"))),
    }
}

fn select_group(spec: &str, lambda: &[P1Point]) -> Result<FinSubgroupH> {
    match spec.trim().to_ascii_lowercase().as_str() {
        "auto" => auto_group(lambda),
        "trivial" => Ok(FinSubgroupH::trivial()),
        other => parse_preset_kind(other)?.group(),
    }
}

/// Full automorphism group when finite; with fewer than three points the
/// group is infinite, so take the involution swapping the two points
/// (`x -> a + b - x` for affine points) or the trivial group.
fn auto_group(lambda: &[P1Point]) -> Result<FinSubgroupH> {
    match lambda {
        [p, q] => {
            let one = CycNum::one();
            let zero = CycNum::zero();
            let swap = match (p.coord(), q.coord()) {
                (Some(a), Some(b)) => Moebius::new(mat2(-&one, a + b, zero, one))?,
                // x -> a + 1/(x - a) exchanges a and infinity
                (Some(a), None) | (None, Some(a)) => {
                    Moebius::new(mat2(a.clone(), &(-&(a * a)) + &one, one, -a))?
                }
                (None, None) => return Err(Error::DuplicatePoint(p.to_string())),
            };
            group_closure(&[swap], DEFAULT_GROUP_CAP)
        }
        [_] => Ok(FinSubgroupH::trivial()),
        _ => aut_of_lambda(lambda, DEFAULT_GROUP_CAP),
    }
}

fn parse_pairs(s: &str) -> Result<Vec<(CycNum, CycNum)>> {
    split_top(s, ';')
        .iter()
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let t = t.trim();
            let t = t.strip_prefix('(').and_then(|u| u.strip_suffix(')')).unwrap_or(t);
            match split_top(t, ',').as_slice() {
                [a, b] => Ok((parse_constant(a)?, parse_constant(b)?)),
                _ => Err(Error::Parse(format!("expected a pair a,b in `{t}`"))),
            }
        })
        .collect()
}

fn parse_ratfun_triple(s: &str) -> Result<[URatFun; 3]> {
    let s = s.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected (r1, r2, r3), got `{s}`")))?;
    let parts = split_top(inner, ',');
    let v: Vec<URatFun> = parts.iter().map(|p| parse_ratfun(p)).collect::<Result<_>>()?;
    v.try_into().map_err(|_| Error::Parse("expected three components".into()))
}

fn fmt_points(pts: &[P1Point]) -> String {
    pts.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn group_section(h: &FinSubgroupH) -> String {
    let mut s = format!("kind {} (order {})\n", h.kind(), h.order());
    for g in h.generators() {
        let _ = writeln!(s, "generator {g}");
    }
    s
}

fn embedding_sections(rep: &mut Report, e: &EmbeddingA3, detail: bool) {
    let c = &e.comps;
    rep.section("tau", format!("x = {}\ny = {}\nz = {}", c[0], c[1], c[2]));
    let table: Vec<String> = e.reps.iter().map(|(g, r)| format!("{g} -> {r}")).collect();
    let table = if table.is_empty() { "(trivial group)".to_string() } else { table.join("\n") };
    rep.section("representation", table);
    if detail {
        rep.section("delta", e.delta.to_string());
        let per: Vec<String> = e
            .per_orbit
            .iter()
            .enumerate()
            .map(|(i, t)| format!("orbit {}: x += {}; y += {}; z += {}", i + 1, t[0], t[1], t[2]))
            .collect();
        rep.section("per-orbit terms", per.join("\n"));
    }
}

fn execute(cli: &Cli) -> Result<Report> {
    let detail = cli.flags.certificate;
    match &cli.command {
        Command::Aut { lambda } => {
            let pts = parse_points(lambda)?;
            let h = auto_group(&pts)?;
            let mut rep = Report::new("aut");
            rep.section("lambda", fmt_points(&pts));
            rep.section("group", group_section(&h));
            let orbits = orbit_decompose(&h, &pts)?;
            rep.section("orbits", orbits.iter().map(|o| format!("{{{}}}", fmt_points(o))).collect::<Vec<_>>().join("\n"));
            if detail {
                rep.section("elements", h.elements().iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"));
            }
            let mut cert = Certificate::new("automorphisms");
            for g in h.elements() {
                cert.push(format!("{g} preserves Lambda"), pts.iter().all(|p| pts.contains(&g.apply(p))), None);
            }
            cert.push("classification matches the order", h.kind().order() == h.order(), None);
            rep.certificates.push(cert);
            Ok(rep)
        }
        Command::Delta { lambda, group } => {
            let pts = parse_points(lambda)?;
            let h = select_group(group, &pts)?;
            let (delta, orbits) = build_delta(&h, &pts)?;
            let mut rep = Report::new("delta");
            rep.section("group", group_section(&h));
            rep.section("delta", delta.to_string());
            if detail {
                let o: Vec<String> = orbits
                    .iter()
                    .map(|o| format!("p = {}, d = {}, pair = {}", o.p(), o.d, o.pair))
                    .collect();
                rep.section("orbits", o.join("\n"));
            }
            let lam = crate::equivariant::Locus::from_points(&pts)?;
            rep.certificates.push(verify_delta_equivariance(&delta, &h));
            rep.certificates.push(verify_fixed_locus(&delta, &lam));
            Ok(rep)
        }
        Command::Embed { lambda, group } => {
            let pts = parse_points(lambda)?;
            let h = select_group(group, &pts)?;
            let e = build_tau(&h, &pts)?;
            let mut rep = Report::new("embed");
            rep.section("group", group_section(&h));
            embedding_sections(&mut rep, &e, detail);
            rep.certificates.push(verify_tau(&e, &h));
            rep.certificates.push(verify_fixed_locus(&e.delta, &e.lambda));
            Ok(rep)
        }
        Command::Preset { kind, params } => {
            let kind = parse_preset_kind(kind)?;
            let params = parse_pairs(params)?;
            if params.is_empty() {
                return Err(Error::Parse("no parameter pairs".into()));
            }
            let p = preset_family(kind, &params)?;
            let mut rep = Report::new("preset");
            rep.section("group", group_section(&p.h));
            rep.section("lambda", format!("{} = 0", p.lambda.poly()));
            let pairs: Vec<String> = p.orbits.iter().map(|o| format!("P = {}; (f1, f2) = {}", o.power, o.pair)).collect();
            rep.section("orbit pairs", pairs.join("\n"));
            embedding_sections(&mut rep, &p.embedding, detail);
            rep.certificates.push(verify_tau(&p.embedding, &p.h));
            rep.certificates.push(verify_fixed_locus(&p.embedding.delta, &p.lambda));
            Ok(rep)
        }
        Command::PlanarNormalize { p, q, r, cap } => {
            let e = PlanarEmbedding::new(parse_upoly(p)?, parse_ratfun(q)?, parse_ratfun(r)?)?;
            let (n, cert) = normalize_planar(&e, cap.unwrap_or(cli.flags.degree_cap))?;
            let mut rep = Report::new("planar-normalize");
            rep.section(
                "witnesses",
                format!(
                    "A(Y, Z) = {}\n(a, b) = ({}, {})\nU = {}\nV = {}\nS = {}\nB(X, Y) = {}\nC(X, Y) = {}",
                    n.a_poly, n.ab.0, n.ab.1, n.u, n.v, n.s, n.b_poly, n.c_poly
                ),
            );
            let chain: Vec<String> = ["f2", "f3", "f4", "f5"]
                .iter()
                .zip(&n.chain)
                .map(|(name, f)| format!("{name} = {} ; inverse {}", fmt_triple(f.forward()), fmt_triple(f.inverse())))
                .collect();
            rep.section("chain", chain.join("\n"));
            if detail {
                rep.section("composite", fmt_triple(n.composite().forward()));
            }
            rep.certificates.push(cert);
            Ok(rep)
        }
        Command::VerifyExtension { f, tau, phi } => {
            let f = parse_triple(f)?;
            let tau = parse_ratfun_triple(tau)?;
            let phi = Moebius::parse(phi)?;
            let mut rep = Report::new("verify-extension");
            rep.section("input", format!("F = {}\ntau = ({}, {}, {})\nphi = {phi}", fmt_triple(&f), tau[0], tau[1], tau[2]));
            rep.certificates.push(verify_extension(&f, &tau, &phi));
            Ok(rep)
        }
        Command::PlaneExtend { lambda, g } => {
            let pts = parse_points(lambda)?;
            let g = Moebius::parse(g)?;
            let c = CurveAut::new(&pts, g, DEFAULT_ORDER_CAP)?;
            let v = decide_extendability(&c)?;
            let mut rep = Report::new("plane-extend");
            rep.section(
                "automorphism",
                format!(
                    "g = {}\norder {}\nfixed points: {} = 0, {} on the curve",
                    c.g(),
                    c.order(),
                    c.fixed_form(),
                    c.fixed_in_gamma()
                ),
            );
            let view = v.view();
            rep.section("verdict", format!("{}\n{}", view.verdict, view.detail));
            if let ExtendabilityVerdict::Extendable(e) = v {
                rep.certificates.push(e.certificate.clone());
            }
            Ok(rep)
        }
        Command::Cor25 { k, a } => {
            let a: Vec<CycNum> = split_top(a, ',')
                .iter()
                .filter(|t| !t.trim().is_empty())
                .map(|t| parse_constant(t))
                .collect::<Result<_>>()?;
            let pts = cor25_family(*k, &a)?;
            let h = cor25_h();
            let mut rep = Report::new("cor25");
            rep.section("lambda", pts.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"));
            let mut cert = Certificate::new("invariance");
            let ok = pts.iter().all(|p| pts.contains(&h.apply(p)));
            cert.push(format!("{h} permutes Lambda"), ok, None);
            rep.certificates.push(cert);
            Ok(rep)
        }
    }
}

/// Runs one invocation; returns the exit status and what to print on
/// stdout (report) and stderr (diagnostics).
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::PARSE_ERROR } else { exit::OK };
            let text = e.render().to_string();
            return if code == exit::OK { (code, text, String::new()) } else { (code, String::new(), text) };
        }
    };
    set_conductor_cap(cli.flags.conductor_cap);

    // conductor-cap violations inside arithmetic operators unwind
    let prev = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    let out = panic::catch_unwind(panic::AssertUnwindSafe(|| execute(&cli)));
    panic::set_hook(prev);

    match out {
        Ok(Ok(rep)) => {
            let code = if rep.passed() { exit::OK } else { exit::CERTIFICATE_FAILURE };
            (code, rep.render(cli.flags.format), String::new())
        }
        Ok(Err(e @ Error::Parse(_))) => (exit::PARSE_ERROR, String::new(), format!("error: {e}\n")),
        Ok(Err(e)) => (exit::CONSTRUCTION_ERROR, String::new(), format!("error: {e}\n")),
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "internal error".into());
            (exit::CONSTRUCTION_ERROR, String::new(), format!("error: {msg}\n"))
        }
    }
}

#[cfg(test)]
mod tests;

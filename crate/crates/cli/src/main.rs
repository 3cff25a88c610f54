//! `ortho`: command-line front end for the exact orthogonality toolkit.
//!
//! Every subcommand runs one verification or construction and emits either
//! a text report or JSON with the stable schema
//! `{command, checks: [{name, pass, detail}], witnesses: [{name, value}]}`.
//! Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.

use clap::{Parser, Subcommand};
use ortho_core::embeddings::{
    check_embedding, embed_fragment_into_tower, induced_embedding_point_map, HilbertFragment,
};
use ortho_core::exact_fields::{parse_element, parse_rat, FieldElement, Tower};
use ortho_core::inner_spaces::{Subspace, Vector};
use ortho_core::orthosets::{
    line, orthoclosure, perp, witness_l1, witness_l2, FiniteOrthoset, LineHandle, ProjectivePoint,
};
use ortho_core::sampling::Sampler;
use ortho_core::star_sfields::{
    parse_quaternion, quat_hypot, verify_no_sqrt2, Quaternion, StarScalar,
};
use ortho_core::symmetries::{
    apply_point, check_so2_abelian, flag_transport, line_rotation, transporter,
    verify_orthogonal, OrthogonalMap,
};
use ortho_core::Rat;
use serde::Serialize;
use serde_json::{json, Value};
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "ortho", about = "Exact quadratic/Hermitian space verifier")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Ambient space: R<n> (tower scalars) or H<n> (rational quaternions).
    #[arg(long, global = true, default_value = "R4")]
    space: String,
    /// Sample count for randomized checks.
    #[arg(long, global = true, default_value_t = 20)]
    samples: usize,
    /// RNG seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Maximum tower depth for adjunctions.
    #[arg(long, global = true, default_value_t = 12)]
    depth_limit: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an exact expression (rationals, + - * / ^, hypot).
    Eval { expr: String },
    /// Orthoclosure of a finite point set.
    Closure { points: Vec<String> },
    /// The line through two points, with a third-point witness.
    Line { e: String, f: String },
    /// L1/L2 linearity witnesses on random point pairs.
    Axioms,
    /// Transporter between two subspaces (vectors separated by ';').
    Transport { m1: String, m2: String },
    /// Rotation on the line e ⋆ f taking e to f.
    Rotate { e: String, f: String },
    /// Flag transport: (e on line e⋆a) to (f on line f⋆b).
    Flag {
        e: String,
        a: String,
        f: String,
        b: String,
    },
    /// Abelian SO(2) action on a random line, with swap control.
    So2,
    /// Embed a Hilbert fragment (hypot stages "a,b;…") into a tower target.
    Embed {
        fragment: String,
        /// Comma-separated positive non-square discriminants; empty = Q.
        #[arg(long, default_value = "")]
        target: String,
    },
    /// Quaternion operations.
    Quat {
        #[command(subcommand)]
        sub: QuatCmd,
    },
    /// Classify a finite orthoset and compute its rank.
    Classify {
        #[arg(long)]
        size: usize,
        /// Edges "a-b,c-d"; empty for the edgeless orthoset.
        #[arg(long, default_value = "")]
        edges: String,
    },
}

#[derive(Subcommand)]
enum QuatCmd {
    /// γ with γγ⋆ = αα⋆ + ββ⋆ by the four-square construction.
    Hypot { alpha: String, beta: String },
    /// Two-case proof that no rational quaternion squares to 2.
    NoSqrt2,
}

#[derive(Serialize)]
struct Check {
    name: String,
    pass: bool,
    detail: String,
}

#[derive(Serialize)]
struct Witness {
    name: String,
    value: Value,
}

#[derive(Serialize)]
struct Report {
    command: String,
    checks: Vec<Check>,
    witnesses: Vec<Witness>,
}

impl Report {
    fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            checks: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        });
    }

    fn witness(&mut self, name: &str, value: Value) {
        self.witnesses.push(Witness {
            name: name.to_string(),
            value,
        });
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Session state threaded through a command: the current tower plus the
/// run configuration.
struct Session {
    tower: Arc<Tower>,
    dim: usize,
    quaternionic: bool,
    samples: usize,
    seed: u64,
}

impl Session {
    fn new(cli: &Cli) -> Result<Session, String> {
        let space = cli.space.trim();
        let (kind, digits) = space.split_at(1);
        let dim: usize = digits
            .parse()
            .map_err(|_| format!("bad --space '{space}': expected R<n> or H<n>"))?;
        let quaternionic = match kind {
            "R" | "r" => false,
            "H" | "h" => true,
            _ => return Err(format!("bad --space '{space}': expected R<n> or H<n>")),
        };
        if dim == 0 {
            return Err("space dimension must be positive".into());
        }
        Ok(Session {
            tower: Tower::with_depth_limit(cli.depth_limit),
            dim,
            quaternionic,
            samples: cli.samples,
            seed: cli.seed,
        })
    }

    fn parse_scalar(&mut self, text: &str) -> Result<FieldElement, String> {
        let (value, tower) = parse_element(text, Arc::clone(&self.tower))
            .map_err(|e| format!("parse error in '{text}': {e}"))?;
        self.tower = tower;
        Ok(value)
    }

    fn parse_vector(&mut self, text: &str) -> Result<Vector<FieldElement>, String> {
        let parts = split_top_level(text, ',');
        let coords = parts
            .iter()
            .map(|p| self.parse_scalar(p))
            .collect::<Result<Vec<_>, _>>()?;
        Vector::new(coords).map_err(|e| format!("bad vector '{text}': {e}"))
    }

    fn parse_point(&mut self, text: &str) -> Result<ProjectivePoint<FieldElement>, String> {
        let v = self.parse_vector(text)?;
        ProjectivePoint::new(&v).map_err(|e| format!("bad point '{text}': {e}"))
    }

    fn parse_subspace(&mut self, text: &str) -> Result<Subspace<FieldElement>, String> {
        let vectors = split_top_level(text, ';')
            .iter()
            .map(|p| self.parse_vector(p))
            .collect::<Result<Vec<_>, _>>()?;
        let n = vectors.first().map(|v| v.dim()).unwrap_or(self.dim);
        Subspace::span(&vectors, n).map_err(|e| format!("bad subspace '{text}': {e}"))
    }
}

/// Splits on a separator, ignoring separators nested inside parentheses.
fn split_top_level(text: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            c if c == sep && depth == 0 => {
                out.push(std::mem::take(&mut cur));
            }
            c => cur.push(c),
        }
    }
    out.push(cur);
    out
}

fn matrix_json(u: &OrthogonalMap<FieldElement>) -> Value {
    let n = u.dim();
    let rows: Vec<Vec<String>> = (0..n)
        .map(|i| (0..n).map(|j| u.entry(i, j).to_string()).collect())
        .collect();
    json!(rows)
}

fn point_json<S: StarScalar>(p: &ProjectivePoint<S>) -> Value {
    json!(p.to_string())
}

fn run(cli: &Cli) -> Result<Report, String> {
    let mut session = Session::new(cli)?;
    match &cli.cmd {
        Cmd::Eval { expr } => cmd_eval(&mut session, expr),
        Cmd::Closure { points } => cmd_closure(&mut session, points),
        Cmd::Line { e, f } => cmd_line(&mut session, e, f),
        Cmd::Axioms => cmd_axioms(&session),
        Cmd::Transport { m1, m2 } => cmd_transport(&mut session, m1, m2),
        Cmd::Rotate { e, f } => cmd_rotate(&mut session, e, f),
        Cmd::Flag { e, a, f, b } => cmd_flag(&mut session, e, a, f, b),
        Cmd::So2 => cmd_so2(&session),
        Cmd::Embed { fragment, target } => cmd_embed(&mut session, fragment, target),
        Cmd::Quat { sub } => match sub {
            QuatCmd::Hypot { alpha, beta } => cmd_quat_hypot(alpha, beta),
            QuatCmd::NoSqrt2 => Ok(cmd_quat_no_sqrt2()),
        },
        Cmd::Classify { size, edges } => cmd_classify(*size, edges),
    }
}

fn cmd_eval(session: &mut Session, expr: &str) -> Result<Report, String> {
    let mut report = Report::new("eval");
    let value = session.parse_scalar(expr)?;
    report.check("parsed", true, expr.to_string());
    report.witness("value", json!(value.to_string()));
    report.witness("coefficients", json!(value.coeff_strings()));
    report.witness("tower", json!(value.tower().to_string()));
    Ok(report)
}

fn cmd_closure(session: &mut Session, points: &[String]) -> Result<Report, String> {
    if points.is_empty() {
        return Err("closure needs at least one point".into());
    }
    let mut report = Report::new("closure");
    let pts = points
        .iter()
        .map(|p| session.parse_point(p))
        .collect::<Result<Vec<_>, _>>()?;
    let closed = orthoclosure(&pts).map_err(|e| format!("closure failed: {e}"))?;
    for (i, p) in pts.iter().enumerate() {
        let inside = closed.contains(p.rep()).map_err(|e| e.to_string())?;
        report.check(&format!("extensive[{i}]"), inside, p.to_string());
    }
    let reclosed =
        Subspace::span(closed.basis(), closed.ambient()).map_err(|e| e.to_string())?;
    report.check("idempotent", reclosed == closed, format!("dim {}", closed.dim()));
    report.witness("dimension", json!(closed.dim()));
    report.witness(
        "basis",
        json!(closed.basis().iter().map(|b| b.to_string()).collect::<Vec<_>>()),
    );
    Ok(report)
}

fn cmd_line(session: &mut Session, e: &str, f: &str) -> Result<Report, String> {
    let mut report = Report::new("line");
    let e = session.parse_point(e)?;
    let f = session.parse_point(f)?;
    let l = line(&e, &f).map_err(|err| format!("line failed: {err}"))?;
    report.check("dimension is 2", l.subspace().dim() == 2, "e ⋆ f = {e,f}⊥⊥");
    report.check(
        "contains endpoints",
        l.contains(&e).map_err(|e| e.to_string())?
            && l.contains(&f).map_err(|e| e.to_string())?,
        "",
    );
    let third = witness_l2(&e, &f).map_err(|e| format!("L2 witness failed: {e}"))?;
    report.check(
        "third point",
        l.contains(&third).map_err(|e| e.to_string())? && third != e && third != f,
        third.to_string(),
    );
    report.witness(
        "basis",
        json!(l.subspace().basis().iter().map(|b| b.to_string()).collect::<Vec<_>>()),
    );
    report.witness("third_point", point_json(&third));
    Ok(report)
}

fn axioms_over<S: StarScalar>(
    report: &mut Report,
    pairs: &[(ProjectivePoint<S>, ProjectivePoint<S>)],
) {
    let mut l1_ok = 0usize;
    let mut l2_ok = 0usize;
    for (e, f) in pairs {
        if let Ok(g) = witness_l1(e, f) {
            if perp(&g, e).unwrap_or(false) {
                l1_ok += 1;
            }
        }
        if let Ok(h) = witness_l2(e, f) {
            let on_line = line(e, f)
                .and_then(|l| l.contains(&h))
                .unwrap_or(false);
            if on_line && h != *e && h != *f {
                l2_ok += 1;
            }
        }
    }
    let n = pairs.len();
    report.check(
        &format!("L1 witnesses ({})", S::kind_name()),
        l1_ok == n,
        format!("{l1_ok}/{n}"),
    );
    report.check(
        &format!("L2 witnesses ({})", S::kind_name()),
        l2_ok == n,
        format!("{l2_ok}/{n}"),
    );
}

fn cmd_axioms(session: &Session) -> Result<Report, String> {
    let mut report = Report::new("axioms");
    let mut sampler = Sampler::new(session.seed);
    if session.quaternionic {
        let pairs: Vec<(ProjectivePoint<Quaternion>, ProjectivePoint<Quaternion>)> = (0..session
            .samples)
            .map(|_| {
                let e = sampler.quaternion_point(session.dim, 3);
                loop {
                    let f = sampler.quaternion_point(session.dim, 3);
                    if f != e {
                        break (e, f);
                    }
                }
            })
            .collect();
        axioms_over(&mut report, &pairs);
        if let Some((e, f)) = pairs.first() {
            report.witness("first_pair", json!([e.to_string(), f.to_string()]));
        }
    } else {
        let pairs: Vec<(ProjectivePoint<FieldElement>, ProjectivePoint<FieldElement>)> = (0
            ..session.samples)
            .map(|_| sampler.point_pair(session.dim, 4))
            .collect();
        axioms_over(&mut report, &pairs);
        if let Some((e, f)) = pairs.first() {
            report.witness("first_pair", json!([e.to_string(), f.to_string()]));
        }
    }
    report.witness("samples", json!(session.samples));
    Ok(report)
}

fn cmd_transport(session: &mut Session, m1: &str, m2: &str) -> Result<Report, String> {
    let mut report = Report::new("transport");
    let m1 = session.parse_subspace(m1)?;
    let m2 = session.parse_subspace(m2)?;
    let u = transporter(&m1, &m2).map_err(|e| format!("transporter failed: {e}"))?;
    report.check(
        "orthogonal",
        verify_orthogonal(&u).map_err(|e| e.to_string())?,
        "Gram condition",
    );
    report.check(
        "maps M1 to M2",
        u.apply_subspace(&m1).map_err(|e| e.to_string())? == m2,
        "",
    );
    let meet = m1.intersection(&m2).map_err(|e| e.to_string())?;
    let fixed_meet = meet
        .basis()
        .iter()
        .all(|b| u.apply(b).map(|w| w == *b).unwrap_or(false));
    report.check("identity on intersection", fixed_meet, format!("dim {}", meet.dim()));
    let comp = m1
        .sum(&m2)
        .and_then(|j| j.orthocomplement())
        .map_err(|e| e.to_string())?;
    let fixed_comp = comp
        .basis()
        .iter()
        .all(|b| u.apply(b).map(|w| w == *b).unwrap_or(false));
    report.check("identity on joint complement", fixed_comp, format!("dim {}", comp.dim()));
    report.witness("matrix", matrix_json(&u));
    Ok(report)
}

fn line_of(
    session: &mut Session,
    e: &ProjectivePoint<FieldElement>,
    second: &str,
) -> Result<LineHandle<FieldElement>, String> {
    let a = session.parse_point(second)?;
    line(e, &a).map_err(|err| format!("line failed: {err}"))
}

fn cmd_rotate(session: &mut Session, e: &str, f: &str) -> Result<Report, String> {
    let mut report = Report::new("rotate");
    let e = session.parse_point(e)?;
    let f = session.parse_point(f)?;
    let l = line(&e, &f).map_err(|err| format!("line failed: {err}"))?;
    let u = line_rotation(&l, &e, &f).map_err(|err| format!("rotation failed: {err}"))?;
    report.check(
        "orthogonal",
        verify_orthogonal(&u).map_err(|e| e.to_string())?,
        "Gram condition",
    );
    let image = apply_point(&u, &e).map_err(|e| e.to_string())?;
    report.check("P(U)(e) = f", image == f, image.to_string());
    let perp_basis = l.subspace().orthocomplement().map_err(|e| e.to_string())?;
    let fixes = perp_basis
        .basis()
        .iter()
        .all(|b| u.apply(b).map(|w| w == *b).unwrap_or(false));
    report.check("fixes the orthocomplement", fixes, "");
    report.witness("matrix", matrix_json(&u));
    Ok(report)
}

fn cmd_flag(
    session: &mut Session,
    e: &str,
    a: &str,
    f: &str,
    b: &str,
) -> Result<Report, String> {
    let mut report = Report::new("flag");
    let e = session.parse_point(e)?;
    let f = session.parse_point(f)?;
    let l = line_of(session, &e, a)?;
    let m = line_of(session, &f, b)?;
    let u = flag_transport(&e, &l, &f, &m).map_err(|err| format!("flag transport failed: {err}"))?;
    report.check(
        "orthogonal",
        verify_orthogonal(&u).map_err(|e| e.to_string())?,
        "Gram condition",
    );
    let image = apply_point(&u, &e).map_err(|e| e.to_string())?;
    report.check("P(U)(e) = f", image == f, image.to_string());
    report.check(
        "U(l) = m",
        u.apply_subspace(l.subspace()).map_err(|e| e.to_string())? == *m.subspace(),
        "",
    );
    report.witness("matrix", matrix_json(&u));
    Ok(report)
}

fn cmd_so2(session: &Session) -> Result<Report, String> {
    let mut report = Report::new("so2");
    let mut sampler = Sampler::new(session.seed);
    let (e, f): (ProjectivePoint<FieldElement>, _) = sampler.point_pair(session.dim, 3);
    let l = line(&e, &f).map_err(|err| format!("line failed: {err}"))?;
    let mut params: Vec<Rat> = Vec::new();
    let wanted = session.samples.clamp(2, 12);
    while params.len() < wanted {
        let t = sampler.rat(6);
        if !params.contains(&t) {
            params.push(t);
        }
    }
    let rep = check_so2_abelian(&l, &e, &params).map_err(|e| e.to_string())?;
    report.check(
        "rotations commute",
        rep.all_commute,
        format!("{} pairs", rep.pairs_checked),
    );
    report.check(
        "transitive on sampled points",
        rep.transitive,
        format!("{} ordered pairs", rep.transitivity_checked),
    );
    report.check("swap control fails to commute", !rep.swap_commutes, "reflection");
    report.witness("line", json!([e.to_string(), f.to_string()]));
    report.witness(
        "parameters",
        json!(params.iter().map(|t| t.to_string()).collect::<Vec<_>>()),
    );
    Ok(report)
}

fn cmd_embed(session: &mut Session, fragment: &str, target: &str) -> Result<Report, String> {
    let mut report = Report::new("embed");
    // build the fragment from hypot stages "a,b;c,d;…"
    let mut frag = HilbertFragment::rationals();
    if !fragment.trim().is_empty() {
        for stage in split_top_level(fragment, ';') {
            let parts = split_top_level(&stage, ',');
            if parts.len() != 2 {
                return Err(format!("bad fragment stage '{stage}': expected 'a,b'"));
            }
            let (a, t) = parse_element(&parts[0], Arc::clone(frag.tower()))
                .map_err(|e| format!("parse error in '{}': {e}", parts[0]))?;
            let (b, _) = parse_element(&parts[1], t)
                .map_err(|e| format!("parse error in '{}': {e}", parts[1]))?;
            frag = frag
                .adjoin_hypot(&a, &b)
                .map_err(|e| format!("adjoining hypot({},{}) failed: {e}", parts[0], parts[1]))?;
        }
    }
    // build the target tower
    let mut tower = Tower::rationals();
    if !target.trim().is_empty() {
        for d in target.split(',') {
            let d = parse_rat(d.trim()).map_err(|e| format!("bad target disc '{d}': {e}"))?;
            let d = FieldElement::from_rat(Arc::clone(&tower), d);
            tower = ortho_core::exact_fields::extend_tower(&tower, &d)
                .map_err(|e| format!("bad target: {e}"))?;
        }
    }
    let emb = embed_fragment_into_tower(&frag, &tower)
        .map_err(|e| format!("embedding failed: {e}"))?;
    report.check(
        "stagewise images valid",
        true,
        format!("fragment depth {}", frag.depth()),
    );

    // homomorphism property on sampled elements
    let mut sampler = Sampler::new(session.seed);
    let mut hom_ok = true;
    for _ in 0..session.samples {
        let x = sampler.tower_element(frag.tower(), 3);
        let y = sampler.tower_element(frag.tower(), 3);
        let xy = x.try_mul(&y).map_err(|e| e.to_string())?;
        let lhs = emb.apply(&xy).map_err(|e| e.to_string())?;
        let rhs = emb
            .apply(&x)
            .and_then(|ix| emb.apply(&y).and_then(|iy| ix.try_mul(&iy)))
            .map_err(|e| e.to_string())?;
        hom_ok &= lhs == rhs;
    }
    report.check(
        "multiplicative on samples",
        hom_ok,
        format!("{} products", session.samples),
    );

    // induced orthoset embedding
    let pairs: Vec<(ProjectivePoint<FieldElement>, ProjectivePoint<FieldElement>)> = (0..session
        .samples)
        .map(|_| {
            let mk = |s: &mut Sampler| loop {
                let coords: Vec<FieldElement> =
                    (0..session.dim).map(|_| s.tower_element(frag.tower(), 2)).collect();
                if coords.iter().any(|c| !c.is_zero()) {
                    return ProjectivePoint::new(&Vector::new(coords).unwrap()).unwrap();
                }
            };
            (mk(&mut sampler), mk(&mut sampler))
        })
        .collect();
    let emb_report = check_embedding(|p| induced_embedding_point_map(&emb, p), &pairs)
        .map_err(|e| e.to_string())?;
    report.check(
        "induced orthoset embedding",
        emb_report.passed(),
        format!("{} pairs", emb_report.pairs_checked),
    );
    report.witness(
        "generator_images",
        json!(emb.images().iter().map(|g| g.to_string()).collect::<Vec<_>>()),
    );
    let final_tower = emb
        .images()
        .last()
        .map(|g| g.tower().to_string())
        .unwrap_or_else(|| tower.to_string());
    report.witness("target", json!(final_tower));
    Ok(report)
}

fn cmd_quat_hypot(alpha: &str, beta: &str) -> Result<Report, String> {
    let mut report = Report::new("quat hypot");
    let alpha = parse_quaternion(alpha).map_err(|e| format!("bad quaternion '{alpha}': {e}"))?;
    let beta = parse_quaternion(beta).map_err(|e| format!("bad quaternion '{beta}': {e}"))?;
    let gamma = quat_hypot(&alpha, &beta).map_err(|e| format!("quat_hypot failed: {e}"))?;
    let ok = gamma.norm_rat() == alpha.norm_rat() + beta.norm_rat();
    report.check("γγ⋆ = αα⋆ + ββ⋆", ok, gamma.norm_rat().to_string());
    report.witness("gamma", json!(gamma.to_string()));
    Ok(report)
}

fn cmd_quat_no_sqrt2() -> Report {
    let mut report = Report::new("quat no-sqrt2");
    let rep = verify_no_sqrt2();
    for case in &rep.cases {
        report.check(&case.case, case.contradiction, case.argument.clone());
    }
    report.check("x² = 2 insolvable", rep.insolvable, rep.expansion.clone());
    report.witness("trace", serde_json::to_value(&rep).expect("serializable"));
    report
}

fn cmd_classify(size: usize, edges: &str) -> Result<Report, String> {
    let mut report = Report::new("classify");
    let mut parsed = Vec::new();
    if !edges.trim().is_empty() {
        for e in edges.split(',') {
            let (a, b) = e
                .split_once('-')
                .ok_or_else(|| format!("bad edge '{e}': expected 'a-b'"))?;
            let a: usize = a.trim().parse().map_err(|_| format!("bad edge '{e}'"))?;
            let b: usize = b.trim().parse().map_err(|_| format!("bad edge '{e}'"))?;
            parsed.push((a, b));
        }
    }
    let x = FiniteOrthoset::new(size, &parsed).map_err(|e| format!("bad orthoset: {e}"))?;
    let (family, rank) = x.classify().map_err(|e| format!("classify failed: {e}"))?;
    report.check("classified", true, family.to_string());
    report.witness("family", json!(family.to_string()));
    report.witness("rank", json!(rank));
    report.witness("size", json!(x.size()));
    report.witness(
        "edges",
        json!(x.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>()),
    );
    Ok(report)
}

fn print_text(report: &Report) {
    println!("command: {}", report.command);
    if report.command == "eval" {
        for w in &report.witnesses {
            if w.name == "value" {
                if let Some(s) = w.value.as_str() {
                    println!("{s}");
                }
            }
        }
    }
    for c in &report.checks {
        let tag = if c.pass { "ok  " } else { "FAIL" };
        if c.detail.is_empty() {
            println!("[{tag}] {}", c.name);
        } else {
            println!("[{tag}] {}: {}", c.name, c.detail);
        }
    }
    for w in &report.witnesses {
        if report.command == "eval" && w.name == "value" {
            continue;
        }
        println!("witness {} = {}", w.name, w.value);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                print_text(&report);
            }
            if report.passed() {
                ExitCode::from(0)
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

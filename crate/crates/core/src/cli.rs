//! Text formats, request dispatch and JSON reports for the `gitstab` binary.
//!
//! Map text:
//!
//! ```text
//! map N=2 d=2 vars=(x,y,z): [y*z : x*z + y^2 : z^2]
//! ```
//!
//! The header may be omitted, in which case the variables are `x, y, z` for
//! three coordinates and `x1 .. xn` otherwise. Lines in the plane are written
//! `line: <linear form in x, y, z>`. Hénon specs use
//! `henon N=3 k=2 d=2 b=(1,2,3) P3=(x2^2) P4=(x2*x3 + 1/2*x3^2)`, where an
//! omitted `P<i>` is zero.

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify2::{self, Conclusion};
use crate::error::{Error, Result};
use crate::git::{self, CertificateKind, WeightVector};
use crate::henon::HenonSpec;
use crate::poly::{default_var_names, parse_poly_at, parse_rational, rat, Poly, Rat};
use crate::ratmap::{self, LineP2, PlaneCurveImage, ProjMap};

pub const SCHEMA: &str = "gitstab/1";
pub const DEFAULT_SEED: u64 = 20_240_917;

/// 1-based line and column of a byte offset.
fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    (line, col)
}

fn syntax(text: &str, offset: usize, message: impl Into<String>) -> Error {
    let (line, column) = position(text, offset);
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

struct Header {
    n: usize,
    d: u32,
    vars: Vec<String>,
}

fn parse_header(text: &str, end: usize) -> Result<Option<Header>> {
    let head = &text[..end];
    let start = head.len() - head.trim_start().len();
    let body = head.trim();
    if body.is_empty() {
        return Ok(None);
    }
    let Some(rest) = body.strip_prefix("map") else {
        return Err(syntax(text, start, "expected 'map' header or '['"));
    };
    let Some(rest) = rest.trim_end().strip_suffix(':') else {
        return Err(syntax(text, end, "expected ':' before '['"));
    };
    let offset_of = |s: &str| s.as_ptr() as usize - text.as_ptr() as usize;
    let (mut n, mut d, mut vars) = (None, None, None);
    for (key, value) in key_values(rest) {
        let at = offset_of(key);
        match key {
            "N" => n = Some(value.parse::<usize>().map_err(|_| syntax(text, at, "N must be an integer"))?),
            "d" => d = Some(value.parse::<u32>().map_err(|_| syntax(text, at, "d must be an integer"))?),
            "vars" => {
                let inner = value
                    .strip_prefix('(')
                    .and_then(|v| v.strip_suffix(')'))
                    .ok_or_else(|| syntax(text, at, "vars must be parenthesized"))?;
                vars = Some(inner.split(',').map(|s| s.trim().to_string()).collect::<Vec<_>>());
            }
            _ => return Err(syntax(text, at, format!("unknown header key '{key}'"))),
        }
    }
    match (n, d, vars) {
        (Some(n), Some(d), Some(vars)) => Ok(Some(Header { n, d, vars })),
        _ => Err(syntax(text, start, "header needs N=, d= and vars=")),
    }
}

/// `key=value` pairs separated by whitespace; a value starting with `(` runs
/// to the matching `)`.
fn key_values(text: &str) -> Vec<(&str, &str)> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        while i < bytes.len() && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        let ks = i;
        while i < bytes.len() && bytes[i] != b'=' && !bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        let key = &text[ks..i];
        if key.is_empty() {
            break;
        }
        if i >= bytes.len() || bytes[i] != b'=' {
            out.push((key, ""));
            continue;
        }
        i += 1;
        let vs = i;
        if i < bytes.len() && bytes[i] == b'(' {
            let mut depth = 0;
            while i < bytes.len() {
                match bytes[i] {
                    b'(' => depth += 1,
                    b')' => {
                        depth -= 1;
                        if depth == 0 {
                            i += 1;
                            break;
                        }
                    }
                    _ => {}
                }
                i += 1;
            }
        } else {
            while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
                i += 1;
            }
        }
        out.push((key, &text[vs..i]));
    }
    out
}

/// Parses a map and normalizes it.
pub fn parse_map(text: &str) -> Result<ProjMap> {
    let open = text.find('[').ok_or_else(|| syntax(text, text.len(), "expected '['"))?;
    let close = text.rfind(']').ok_or_else(|| syntax(text, text.len(), "expected ']'"))?;
    if close < open {
        return Err(syntax(text, close, "unexpected ']'"));
    }
    if let Some(extra) = text[close + 1..].find(|c: char| !c.is_whitespace()) {
        return Err(syntax(text, close + 1 + extra, "unexpected text after ']'"));
    }
    let header = parse_header(text, open)?;
    let body = &text[open + 1..close];
    let pieces: Vec<(usize, &str)> = body
        .split(':')
        .scan(open + 1, |off, piece| {
            let start = *off;
            *off += piece.len() + 1;
            Some((start, piece))
        })
        .collect();
    let names = match &header {
        Some(h) => h.vars.clone(),
        None => default_var_names(pieces.len()),
    };
    let coords = pieces
        .iter()
        .map(|&(start, piece)| {
            let (line, col) = position(text, start);
            parse_poly_at(piece, &names, line, col)
        })
        .collect::<Result<Vec<_>>>()?;
    let map = ProjMap::new(coords)?;
    if let Some(h) = header {
        if h.vars.len() != h.n + 1 || map.n() != h.n {
            return Err(Error::InvalidMap(format!(
                "header says N={} with {} variables, found {} coordinates",
                h.n,
                h.vars.len(),
                map.nvars()
            )));
        }
        if map.degree() != h.d {
            return Err(Error::InvalidMap(format!(
                "header says d={}, coordinates have degree {}",
                h.d,
                map.degree()
            )));
        }
    }
    map.normalize()
}

/// `line: u*x + v*y + w*z`, the prefix being optional.
pub fn parse_line(text: &str) -> Result<LineP2> {
    let trimmed = text.trim_start();
    let lead = text.len() - trimmed.len();
    let (body, offset) = match trimmed.strip_prefix("line:") {
        Some(rest) => (rest, lead + 5),
        None => (trimmed, lead),
    };
    let (line, col) = position(text, offset);
    let p = parse_poly_at(body, &["x", "y", "z"], line, col)?;
    LineP2::from_poly(&p)
}

pub fn parse_spec(text: &str) -> Result<HenonSpec> {
    let trimmed = text.trim_start();
    let lead = text.len() - trimmed.len();
    let Some(rest) = trimmed.strip_prefix("henon") else {
        return Err(syntax(text, lead, "expected 'henon'"));
    };
    let offset_of = |s: &str| s.as_ptr() as usize - text.as_ptr() as usize;
    let (mut n, mut k, mut d, mut b) = (None, None, None, None);
    let mut polys: Vec<(usize, &str, usize)> = Vec::new();
    let integer = |key: &str, value: &str| {
        value
            .parse::<usize>()
            .map_err(|_| syntax(text, offset_of(key), format!("{key} must be a non-negative integer")))
    };
    for (key, value) in key_values(rest) {
        match key {
            "N" => n = Some(integer(key, value)?),
            "k" => k = Some(integer(key, value)?),
            "d" => d = Some(integer(key, value)? as u32),
            "b" => {
                let inner = strip_parens(text, key, value)?;
                b = Some(
                    inner
                        .split(',')
                        .map(|s| parse_rational(s.trim()).map_err(|_| syntax(text, offset_of(s), "bad rational")))
                        .collect::<Result<Vec<Rat>>>()?,
                );
            }
            _ => {
                let idx = key
                    .strip_prefix('P')
                    .and_then(|i| i.parse::<usize>().ok())
                    .ok_or_else(|| syntax(text, offset_of(key), format!("unknown key '{key}'")))?;
                let inner = strip_parens(text, key, value)?;
                polys.push((idx, inner, offset_of(inner)));
            }
        }
    }
    let (Some(n), Some(k), Some(d), Some(b)) = (n, k, d, b) else {
        return Err(syntax(text, lead, "spec needs N=, k=, d= and b="));
    };
    if n < 2 || !(2..=n).contains(&k) {
        return Err(Error::InvalidHenon(format!("need N >= k >= 2, got N={n}, k={k}")));
    }
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let mut p = vec![Poly::zero(n); n - k + 1];
    for (idx, body, offset) in polys {
        if !(k + 1..=n + 1).contains(&idx) {
            return Err(Error::InvalidHenon(format!("P{idx} is not one of P{}..P{}", k + 1, n + 1)));
        }
        let (line, col) = position(text, offset);
        p[idx - k - 1] = parse_poly_at(body, &names, line, col)?;
    }
    HenonSpec::new(n, k, d, b, p)
}

fn strip_parens<'a>(text: &str, key: &str, value: &'a str) -> Result<&'a str> {
    value.strip_prefix('(').and_then(|v| v.strip_suffix(')')).ok_or_else(|| {
        let at = key.as_ptr() as usize - text.as_ptr() as usize;
        syntax(text, at, format!("{key} must be parenthesized"))
    })
}

/// Where a map or spec comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    File(PathBuf),
    Inline(String),
}

impl Source {
    pub fn read(&self) -> Result<String> {
        match self {
            Source::Inline(s) => Ok(s.clone()),
            Source::File(p) => std::fs::read_to_string(p).map_err(|e| Error::Io {
                path: p.display().to_string(),
                message: e.to_string(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Mu { map: Source, weights: String },
    Destab { map: Source, strict: bool },
    HenonBuild { spec: Source },
    Iterate { map: Source, n: usize },
    Classify22 { map: Source },
    LineImage { map: Source, line: String },
    Table { n: usize, k: usize, d: u32 },
    /// With no spec, a random quadratic planar spec is drawn from the seed.
    AuditHenon22 { spec: Option<Source>, samples: usize },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Mu { .. } => "mu",
            Command::Destab { .. } => "destab",
            Command::HenonBuild { .. } => "henon-build",
            Command::Iterate { .. } => "iterate",
            Command::Classify22 { .. } => "classify22",
            Command::LineImage { .. } => "line-image",
            Command::Table { .. } => "table",
            Command::AuditHenon22 { .. } => "audit-henon22",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisRequest {
    pub command: Command,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: &'static str,
    pub result: Value,
    pub seed: u64,
    pub exact: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report")
    }
}

/// JSON rendering of an error for the diagnostic stream.
pub fn error_json(e: &Error) -> String {
    let v = json!({
        "schema": SCHEMA,
        "error": { "kind": e.kind(), "message": e.to_string() },
    });
    serde_json::to_string_pretty(&v).expect("serializable error")
}

enum Prepared {
    Mu(ProjMap, WeightVector),
    Destab(ProjMap, bool),
    HenonBuild(HenonSpec),
    Iterate(ProjMap, usize),
    Classify22(ProjMap),
    LineImage(ProjMap, LineP2),
    Table(usize, usize, u32),
    Audit(HenonSpec, usize),
}

fn prepare(req: &AnalysisRequest) -> Result<Prepared> {
    let map = |s: &Source| parse_map(&s.read()?);
    Ok(match &req.command {
        Command::Mu { map: m, weights } => Prepared::Mu(map(m)?, WeightVector::parse(weights)?),
        Command::Destab { map: m, strict } => Prepared::Destab(map(m)?, *strict),
        Command::HenonBuild { spec } => Prepared::HenonBuild(parse_spec(&spec.read()?)?),
        Command::Iterate { map: m, n } => {
            if *n == 0 {
                return Err(Error::OutOfRange("iterate count must be positive".into()));
            }
            Prepared::Iterate(map(m)?, *n)
        }
        Command::Classify22 { map: m } => Prepared::Classify22(map(m)?),
        Command::LineImage { map: m, line } => Prepared::LineImage(map(m)?, parse_line(line)?),
        Command::Table { n, k, d } => {
            git::block_certificate(*n, *k, *d)?;
            Prepared::Table(*n, *k, *d)
        }
        Command::AuditHenon22 { spec, samples } => {
            let spec = match spec {
                Some(s) => parse_spec(&s.read()?)?,
                None => HenonSpec::random(&mut ChaCha8Rng::seed_from_u64(req.seed), 2, 2, 2)?,
            };
            Prepared::Audit(spec, *samples)
        }
    })
}

/// Validates every input, then dispatches.
pub fn run(req: &AnalysisRequest) -> Result<Report> {
    let prepared = prepare(req)?;
    let result = match prepared {
        Prepared::Mu(m, w) => mu_result(&m, &w)?,
        Prepared::Destab(m, strict) => {
            let cert = git::find_destabilizing_diag(&m, strict);
            let implies = match &cert {
                Some(c) if c.mu > 0 => "unstable",
                Some(_) => "not stable",
                None => "none",
            };
            json!({ "map": m.to_string(), "strict": strict, "certificate": cert, "implies": implies })
        }
        Prepared::HenonBuild(spec) => henon_build_result(&spec)?,
        Prepared::Iterate(m, n) => {
            let degrees = ratmap::iterate_degrees(&m, n)?;
            let d = u64::from(m.degree());
            let stable = degrees
                .iter()
                .enumerate()
                .all(|(i, &e)| u64::from(e) == d.pow(i as u32 + 1));
            json!({ "map": m.to_string(), "n": n, "degrees": degrees, "algebraically_stable_upto_n": stable })
        }
        Prepared::Classify22(m) => {
            let v = classify2::rat22_verdict(&m)?;
            let mut value = serde_json::to_value(&v).expect("serializable verdict");
            value["map"] = Value::String(m.to_string());
            value
        }
        Prepared::LineImage(m, line) => {
            let image = ratmap::line_image(&m, &line)?;
            let (point, equation) = match &image {
                PlaneCurveImage::Point(p) => (Some(p.clone()), None),
                _ => (None, image.equation().map(|q| q.to_string())),
            };
            json!({
                "map": m.to_string(),
                "line": line.to_string(),
                "kind": image.kind(),
                "point": point,
                "equation": equation,
            })
        }
        Prepared::Table(n, k, d) => serde_json::to_value(table_command(n, k, d)?).expect("serializable"),
        Prepared::Audit(spec, samples) => {
            let mut rng = ChaCha8Rng::seed_from_u64(req.seed.wrapping_add(1));
            let nonzero = |rng: &mut ChaCha8Rng| {
                let mut v = rng.gen_range(-9i64..=8);
                if v >= 0 {
                    v += 1;
                }
                rat(v, rng.gen_range(1i64..=4))
            };
            let horizontal: Vec<Rat> = (0..samples).map(|_| nonzero(&mut rng)).collect();
            let slanted: Vec<(Rat, Rat)> = (0..samples)
                .map(|_| (nonzero(&mut rng), rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4))))
                .collect();
            let audit = classify2::henon_line_audit(&spec, &horizontal, &slanted)?;
            let mut value = serde_json::to_value(&audit).expect("serializable audit");
            value["spec"] = Value::String(spec.to_string());
            value
        }
    };
    Ok(Report {
        schema: SCHEMA,
        command: req.command.name(),
        result,
        seed: req.seed,
        exact: true,
    })
}

fn mu_result(m: &ProjMap, w: &WeightVector) -> Result<Value> {
    let mu = git::mu(m, w)?;
    let implies = if mu > 0 {
        "unstable"
    } else if mu == 0 {
        "not stable"
    } else {
        "none"
    };
    Ok(json!({
        "map": m.to_string(),
        "weights": w,
        "mu": mu,
        "support_size": m.support().len(),
        "implies": implies,
    }))
}

fn henon_build_result(spec: &HenonSpec) -> Result<Value> {
    let names = spec.var_names();
    let show = |ps: &[Poly]| ps.iter().map(|p| p.to_string_with(&names)).collect::<Vec<_>>();
    let map = spec.homogenize_map();
    let cert = git::block_certificate(spec.n(), spec.k(), spec.d())?;
    let expect = match cert.expected {
        CertificateKind::StrictlyDestabilizing => git::Expectation::Positive,
        CertificateKind::NonStableWitness => git::Expectation::NonNegative,
    };
    let checked = git::verify_certificate(&map, &cert.weights, expect)?;
    let status = match (cert.expected, spec.n()) {
        (CertificateKind::StrictlyDestabilizing, _) => "unstable",
        (CertificateKind::NonStableWitness, 2) => match classify2::rat22_verdict(&map)?.semistable_conclusion {
            Conclusion::Semistable => "semistable",
            Conclusion::Unknown => "not stable; semistability unknown",
        },
        (CertificateKind::NonStableWitness, _) => "not stable; semistability unknown",
    };
    Ok(json!({
        "spec": spec.to_string(),
        "affine": show(&spec.build_affine()),
        "inverse": show(&spec.inverse_affine()),
        "map": map.to_string(),
        "normalized": map.is_normalized(),
        "dominant": ratmap::is_dominant(&map),
        "certificate": {
            "r": cert.r, "s": cert.s, "t": cert.t,
            "weights": checked.weights,
            "mu": checked.mu,
            "kind": checked.kind,
            "support_size": checked.support_size,
        },
        "git_status": status,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RenderedRow {
    pub row: String,
    pub coordinates: String,
    pub pattern: String,
    pub m: Option<u32>,
    pub form: String,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RenderedTable {
    #[serde(rename = "N")]
    pub n: usize,
    pub k: usize,
    pub d: u32,
    pub r: i64,
    pub s: i64,
    pub t: i64,
    pub weights: WeightVector,
    pub rows: Vec<RenderedRow>,
    pub text: Vec<String>,
}

/// The row patterns for shape `(n, k, d)` with their values at the block
/// certificate for that shape.
pub fn table_command(n: usize, k: usize, d: u32) -> Result<RenderedTable> {
    let cert = git::block_certificate(n, k, d)?;
    let table = git::generic_table(n, k, d)?;
    let rows: Vec<RenderedRow> = table
        .rows
        .iter()
        .map(|row| RenderedRow {
            row: row.label.to_string(),
            coordinates: row.label.coordinates().to_string(),
            pattern: match row.m {
                Some(m) => format!("{} (m={m})", row.label.pattern()),
                None => row.label.pattern().to_string(),
            },
            m: row.m,
            form: row.form.to_string(),
            value: row.form.eval(cert.r, cert.s, cert.t),
        })
        .collect();
    let mut text = vec![format!(
        "N={n} k={k} d={d}  (r,s,t)=({},{},{})  weights={}",
        cert.r, cert.s, cert.t, cert.weights
    )];
    text.push(format!("{:<4} {:<8} {:<46} {:<12} {}", "row", "coords", "monomial", "exponent", "value"));
    for r in &rows {
        text.push(format!(
            "{:<4} {:<8} {:<46} {:<12} {}",
            r.row, r.coordinates, r.pattern, r.form, r.value
        ));
    }
    Ok(RenderedTable {
        n,
        k,
        d,
        r: cert.r,
        s: cert.s,
        t: cert.t,
        weights: cert.weights,
        rows,
        text,
    })
}

//! Subcommand bodies. Reports go to `out`; diagnostics go to stderr.

use std::io::Write;

use anyhow::{bail, Result};
use ein3::crooked::{CrookedSurface, WingSign};
use ein3::einstein::IntersectionKind;
use ein3::linalg::Vector;
use ein3::oracle::{self, RegionMix, Rng, SampleCloud};

use crate::config::{Built, Session, SpaceKind};
use crate::export::{self, Format};

/// Process exit status of a completed command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    NotDisjoint,
    Disagree,
}

impl Outcome {
    pub fn code(self) -> u8 {
        match self {
            Outcome::Ok => 0,
            Outcome::NotDisjoint => 1,
            Outcome::Disagree => 3,
        }
    }
}

/// Shortest representation that parses back to the same `f64`.
pub fn num(x: f64) -> String {
    let x = x + 0.0;
    if x == 0.0 || (1e-5..1e16).contains(&x.abs()) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn vector(v: &Vector<f64>) -> String {
    let parts: Vec<String> = v.iter().map(|&x| num(x)).collect();
    format!("[{}]", parts.join(","))
}

fn wing(sign: WingSign) -> &'static str {
    match sign {
        WingSign::Plus => "wing+",
        WingSign::Minus => "wing-",
    }
}

fn warn_ambiguous(count: usize, alg: f64) {
    if count > 0 {
        eprintln!("warning: ambiguous within tolerance: {count} margin(s) within {} of zero", num(alg));
    }
}

pub fn classify_tori(s: &Session, names: &[String], out: &mut dyn Write) -> Result<Outcome> {
    let picked = s.pick("torus", names, 2)?;
    let [(n1, Built::Torus(t1)), (n2, Built::Torus(t2))] = picked[..] else {
        unreachable!("pick checks kinds")
    };
    let class = s.ein.classify_torus_pair(&t1.torus, &t2.torus);
    let kind = class.kind.as_str();
    write!(out, "eta={} kind={kind}", num(class.eta))?;
    if let Some(c) = &class.carrier {
        write!(out, " carrier={}", s.ein.space().signature(c))?;
    }
    writeln!(out)?;
    // the second path needs one torus to be a graph over the other's splitting
    let graph = [(t2, n1), (t1, n2)]
        .into_iter()
        .find_map(|(t, other)| t.graph.as_ref().filter(|(parent, _)| parent == other));
    if let Some((_, f)) = graph {
        let det = s.symp.eta_from_det(f)?;
        let agree = (det - class.eta).abs() <= s.tol.alg * (1.0 + det);
        writeln!(out, "eta_mu={} eta_det={} agree={agree}", num(class.eta), num(det))?;
        if !agree {
            return Ok(Outcome::Disagree);
        }
    }
    let gap = (class.eta - 1.0).abs();
    if class.kind != IntersectionKind::Equal && gap > 0.0 && gap <= s.tol.geo {
        eprintln!("warning: eta within {} of 1; the kind is sensitive to rounding", num(s.tol.geo));
    }
    Ok(Outcome::Ok)
}

type Named<'a> = Vec<(&'a str, &'a CrookedSurface<f64>)>;

fn surfaces<'a>(s: &'a Session, names: &'a [String], count: usize) -> Result<(Named<'a>, SpaceKind)> {
    let picked = s.pick("quad", names, count)?;
    let mut space = None;
    let mut out = Vec::new();
    for (n, b) in picked {
        let Built::Surface(c, k) = b else { unreachable!("pick checks kinds") };
        if space.is_some_and(|sp| sp != *k) {
            bail!("objects live in different symplectic spaces");
        }
        space = Some(*k);
        out.push((n, &**c));
    }
    Ok((out, space.expect("count > 0")))
}

pub fn check_photon(s: &Session, photon: Option<&str>, surface: Option<&str>, out: &mut dyn Write) -> Result<Outcome> {
    let names: Vec<String> = photon.into_iter().map(String::from).collect();
    let (pn, pb) = s.pick("photon", &names, 1)?[0];
    let Built::Photon(p, pspace) = pb else { unreachable!("pick checks kinds") };
    let names: Vec<String> = surface.into_iter().map(String::from).collect();
    let (sv, space) = surfaces(s, &names, 1)?;
    let (cn, c) = sv[0];
    if *pspace != space {
        bail!("photon `{pn}` and surface `{cn}` live in different symplectic spaces");
    }
    let margins = c.photon_margins(p)?;
    let alg = s.tol.alg;
    writeln!(out, "photon={pn} surface={cn}")?;
    for (sign, m) in [WingSign::Plus, WingSign::Minus].into_iter().zip(margins) {
        writeln!(out, "{} margin={}", wing(sign), num(m))?;
    }
    warn_ambiguous(margins.iter().filter(|m| m.abs() <= alg).count(), alg);
    let disjoint = c.photon_disjoint(p)?;
    writeln!(out, "disjoint={disjoint}")?;
    if disjoint {
        return Ok(Outcome::Ok);
    }
    if let Some((l, region)) = c.intersection_witness(p)? {
        writeln!(out, "witness region={region} basis={},{}", vector(&l.u()), vector(&l.v()))?;
    }
    Ok(Outcome::NotDisjoint)
}

pub fn check_crooked(s: &Session, names: &[String], out: &mut dyn Write) -> Result<Outcome> {
    let (sv, _) = surfaces(s, names, 2)?;
    let (c1, c2) = (sv[0].1, sv[1].1);
    let report = c1.disjointness_report(c2)?;
    writeln!(out, "surfaces={},{}", sv[0].0, sv[1].0)?;
    for m in &report.margins {
        writeln!(out, "{} against={} {} margin={}", m.photon, m.against, wing(m.sign), num(m.value))?;
    }
    let alg = s.tol.alg;
    warn_ambiguous(report.ambiguous(alg).count(), alg);
    writeln!(out, "min_margin={} disjoint={}", num(report.min_margin()), report.disjoint)?;
    Ok(if report.disjoint { Outcome::Ok } else { Outcome::NotDisjoint })
}

pub fn check_ads(s: &Session, names: &[String], out: &mut dyn Write) -> Result<Outcome> {
    let picked = s.pick("ads_plane", names, 2)?;
    let [(_, Built::AdsPlane(p1)), (_, Built::AdsPlane(p2))] = picked[..] else {
        unreachable!("pick checks kinds")
    };
    let join = |ms: &[f64]| ms.iter().map(|&m| num(m)).collect::<Vec<_>>().join(",");
    let ads = s.ads.ads_report(p1, p2);
    writeln!(out, "ads_margins={} ads_disjoint={}", join(&ads.margins), ads.disjoint)?;
    let dgk = s.ads.dgk_report(p1, p2)?;
    writeln!(out, "dgk_margins={} dgk_disjoint={}", join(&dgk.margins), dgk.disjoint)?;
    if let Some(why) = &dgk.coincident {
        writeln!(out, "dgk_note={why}")?;
    }
    let full = s.ads.crooked_surface(p1)?.disjointness_report(&s.ads.crooked_surface(p2)?)?;
    writeln!(out, "crooked_min_margin={} crooked_disjoint={}", num(full.min_margin()), full.disjoint)?;
    let alg = s.tol.alg;
    let ambiguous = ads.margins.iter().chain(&dgk.margins).filter(|m| m.abs() <= alg).count()
        + full.ambiguous(alg).count();
    warn_ambiguous(ambiguous, alg);
    let agree = ads.disjoint == dgk.disjoint && dgk.disjoint == full.disjoint;
    writeln!(out, "agree={agree}")?;
    Ok(match (agree, ads.disjoint) {
        (false, _) => Outcome::Disagree,
        (true, true) => Outcome::Ok,
        (true, false) => Outcome::NotDisjoint,
    })
}

pub struct SampleArgs<'a> {
    pub names: &'a [String],
    pub count: usize,
    pub format: Format,
}

pub fn sample(s: &Session, args: SampleArgs, out: &mut dyn Write) -> Result<Outcome> {
    if args.count == 0 {
        bail!("--count must be positive");
    }
    let picked: Vec<(&str, &Built)> = if args.names.is_empty() {
        s.objects
            .iter()
            .filter(|(_, b)| matches!(b, Built::Torus(_) | Built::Surface(..)))
            .take(2)
            .map(|(n, b)| (n.as_str(), b))
            .collect()
    } else {
        args.names.iter().map(|n| s.get(n).map(|b| (n.as_str(), b))).collect::<Result<_>>()?
    };
    if picked.is_empty() {
        bail!("no torus or quad to sample");
    }
    let root = Rng::new(s.seed.unwrap_or(0));
    let mut rows = Vec::new();
    let mut dropped = 0;
    for (i, (name, b)) in picked.into_iter().enumerate() {
        let mut rng = root.split(i as u64);
        let cloud: SampleCloud<f64> = match b {
            Built::Torus(t) => oracle::sample_torus(&s.ein, &t.torus, args.count, &mut rng)?,
            Built::Surface(c, _) => oracle::sample_surface(&s.ein, c, args.count, RegionMix::default(), &mut rng)?,
            other => bail!("object `{name}` is a {}; only tori and quads can be sampled", other.kind()),
        };
        let (points, lost) = cloud.minkowski(&s.ein);
        dropped += lost;
        rows.extend(points.into_iter().map(|(x, label)| (x, format!("{name}:{label}"))));
    }
    if dropped > 0 {
        eprintln!("dropped {dropped} point(s) at infinity");
    }
    export::write(args.format, &rows, out)?;
    Ok(Outcome::Ok)
}

pub fn verify(suite: &str, trials: Option<usize>, seed: u64, out: &mut dyn Write) -> Result<Outcome> {
    let reports = if suite == "all" {
        oracle::run_all(trials, seed)
    } else if oracle::SUITES.contains(&suite) {
        vec![oracle::run_suite(suite, trials, seed)?]
    } else {
        bail!("unknown suite `{suite}`; expected `all` or one of {}", oracle::SUITES.join(", "));
    };
    let mut passed = true;
    for r in &reports {
        writeln!(out, "{}", serde_json::to_string(r)?)?;
        passed &= r.passed;
    }
    Ok(if passed { Outcome::Ok } else { Outcome::NotDisjoint })
}

//! JSON configuration: named object definitions plus optional tolerances and
//! seed. Objects are validated and built into library types on load.

use std::collections::HashMap;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use ein3::ads::{AdsCrookedPlane, AdsModel};
use ein3::crooked::{CrookedSurface, LightlikeQuadrilateral};
use ein3::einstein::{EinModel, EinsteinTorus};
use ein3::linalg::{Matrix, Vector};
use ein3::symplectic::{Map2, Splitting, SympSpace};
use ein3::Tolerance;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Config {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps_alg: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps_geo: Option<f64>,
    pub objects: Vec<Object>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Object {
    pub name: String,
    #[serde(flatten)]
    pub def: Definition,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Definition {
    Torus(TorusDef),
    Quad(QuadDef),
    AdsPlane(AdsPlaneDef),
    Photon(PhotonDef),
}

/// Exactly one of `normal`, `splitting` or `graph_of` (with `map`).
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct TorusDef {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal: Option<[f64; 5]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub splitting: Option<SplittingDef>,
    /// Name of a torus given by a splitting; this torus is then the one of
    /// `graph(map) ⊕ graph(−Adj(map))` over that splitting.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph_of: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<[[f64; 2]; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplittingDef {
    pub s: [[f64; 4]; 2],
    pub s_perp: [[f64; 4]; 2],
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpaceKind {
    /// `ω(e1,e3) = ω(e2,e4) = 1`.
    #[default]
    Standard,
    /// `J ⊕ −J` on `V₀ ⊕ V₀`.
    Ads,
}

impl SpaceKind {
    fn is_standard(&self) -> bool {
        *self == SpaceKind::Standard
    }
}

/// Exactly one of explicit edges, `canonical` or `from_ads`, optionally
/// followed by a symplectic `transform`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct QuadDef {
    #[serde(default, skip_serializing_if = "SpaceKind::is_standard")]
    pub space: SpaceKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u_plus: Option<[f64; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u_minus: Option<[f64; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_plus: Option<[f64; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_minus: Option<[f64; 4]>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub canonical: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub from_ads: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transform: Option<[[f64; 4]; 4]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdsPlaneDef {
    pub base: [[f64; 2]; 2],
    pub a: [f64; 2],
    pub b: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhotonDef {
    #[serde(default, skip_serializing_if = "SpaceKind::is_standard")]
    pub space: SpaceKind,
    pub vector: [f64; 4],
}

#[derive(Debug, Clone)]
pub struct TorusObject {
    pub torus: EinsteinTorus<f64>,
    pub splitting: Option<Splitting<f64>>,
    /// The parent torus name and map when built by `graph_of`.
    pub graph: Option<(String, Map2<f64>)>,
}

#[derive(Debug, Clone)]
pub enum Built {
    Torus(TorusObject),
    Surface(Box<CrookedSurface<f64>>, SpaceKind),
    AdsPlane(AdsCrookedPlane<f64>),
    Photon(Vector<f64>, SpaceKind),
}

impl Built {
    pub fn kind(&self) -> &'static str {
        match self {
            Built::Torus(_) => "torus",
            Built::Surface(..) => "quad",
            Built::AdsPlane(_) => "ads_plane",
            Built::Photon(..) => "photon",
        }
    }
}

/// Models at the session tolerance and the built objects in file order.
pub struct Session {
    pub tol: Tolerance<f64>,
    pub seed: Option<u64>,
    pub ein: EinModel<f64>,
    pub symp: SympSpace<f64>,
    pub ads: AdsModel<f64>,
    pub objects: Vec<(String, Built)>,
}

/// Command-line overrides applied on top of the file.
#[derive(Debug, Clone, Copy, Default)]
pub struct Overrides {
    pub eps_alg: Option<f64>,
    pub eps_geo: Option<f64>,
    pub seed: Option<u64>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn build(&self, ov: Overrides) -> Result<Session> {
        let mut tol = Tolerance::<f64>::default();
        if let Some(a) = ov.eps_alg.or(self.eps_alg) {
            tol = tol.with_alg(positive("eps-alg", a)?);
        }
        if let Some(g) = ov.eps_geo.or(self.eps_geo) {
            tol = tol.with_geo(positive("eps-geo", g)?);
        }
        let mut session = Session {
            tol,
            seed: ov.seed.or(self.seed),
            ein: EinModel::standard(tol),
            symp: SympSpace::standard(tol),
            ads: AdsModel::new(tol),
            objects: Vec::with_capacity(self.objects.len()),
        };
        let mut index = HashMap::new();
        for obj in &self.objects {
            if index.insert(obj.name.clone(), session.objects.len()).is_some() {
                bail!("object `{}` defined twice", obj.name);
            }
            let built = session
                .build_object(&obj.def)
                .with_context(|| format!("object `{}`", obj.name))?;
            session.objects.push((obj.name.clone(), built));
        }
        Ok(session)
    }
}

fn positive(flag: &str, x: f64) -> Result<f64> {
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        bail!("{flag} must be positive, got {x}")
    }
}

fn vec4(x: &[f64; 4]) -> Vector<f64> {
    Vector::from_f64(x)
}

fn matrix<const N: usize>(rows: &[[f64; N]; N]) -> Matrix<f64> {
    Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

impl Session {
    pub fn get(&self, name: &str) -> Result<&Built> {
        self.objects
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, b)| b)
            .ok_or_else(|| anyhow!("undefined object `{name}`"))
    }

    /// Named objects if given, otherwise the first `count` objects of `kind`.
    pub fn pick<'a>(&'a self, kind: &str, names: &'a [String], count: usize) -> Result<Vec<(&'a str, &'a Built)>> {
        let picked: Vec<(&str, &Built)> = if names.is_empty() {
            self.objects
                .iter()
                .filter(|(_, b)| b.kind() == kind)
                .take(count)
                .map(|(n, b)| (n.as_str(), b))
                .collect()
        } else {
            names
                .iter()
                .map(|n| self.get(n).map(|b| (n.as_str(), b)))
                .collect::<Result<_>>()?
        };
        if picked.len() != count {
            bail!("expected {count} objects of kind `{kind}`, found {}", picked.len());
        }
        for (n, b) in &picked {
            if b.kind() != kind {
                bail!("object `{n}` is a {}, expected {kind}", b.kind());
            }
        }
        Ok(picked)
    }

    pub fn space(&self, kind: SpaceKind) -> &SympSpace<f64> {
        match kind {
            SpaceKind::Standard => &self.symp,
            SpaceKind::Ads => self.ads.space(),
        }
    }

    fn build_object(&self, def: &Definition) -> Result<Built> {
        Ok(match def {
            Definition::Torus(t) => Built::Torus(self.build_torus(t)?),
            Definition::Quad(q) => {
                let (quad, space) = self.build_quad(q)?;
                Built::Surface(Box::new(CrookedSurface::new(self.space(space), quad)?), space)
            }
            Definition::AdsPlane(p) => {
                let base = self.ads.point(matrix(&p.base))?;
                Built::AdsPlane(self.ads.crooked_plane(base, Vector::from_f64(&p.a), Vector::from_f64(&p.b))?)
            }
            Definition::Photon(p) => {
                let v = vec4(&p.vector);
                if !v.is_finite() || v.norm() == 0.0 {
                    bail!("photon vector must be finite and nonzero");
                }
                Built::Photon(v, p.space)
            }
        })
    }

    fn build_torus(&self, t: &TorusDef) -> Result<TorusObject> {
        match (&t.normal, &t.splitting, &t.graph_of, &t.map) {
            (Some(n), None, None, None) => Ok(TorusObject {
                torus: self.ein.torus(&Vector::from_f64(n))?,
                splitting: None,
                graph: None,
            }),
            (None, Some(sd), None, None) => {
                let s = self.symp.plane(&vec4(&sd.s[0]), &vec4(&sd.s[1]))?;
                let sp = self.symp.plane(&vec4(&sd.s_perp[0]), &vec4(&sd.s_perp[1]))?;
                let splitting = self.symp.splitting(s, sp)?;
                Ok(TorusObject {
                    torus: self.symp.splitting_torus(&self.ein, &splitting)?,
                    splitting: Some(splitting),
                    graph: None,
                })
            }
            (None, None, Some(parent), Some(m)) => {
                let Built::Torus(TorusObject {
                    splitting: Some(base), ..
                }) = self.get(parent)?
                else {
                    bail!("`graph_of` must name a torus given by a splitting");
                };
                let f = Map2::new(matrix(m))?;
                let splitting = self
                    .symp
                    .splitting(self.symp.graph(&f, base)?, self.symp.perp_graph(&f, base)?)?;
                Ok(TorusObject {
                    torus: self.symp.splitting_torus(&self.ein, &splitting)?,
                    splitting: Some(splitting),
                    graph: Some((parent.clone(), f)),
                })
            }
            _ => bail!("a torus needs exactly one of `normal`, `splitting`, or `graph_of` with `map`"),
        }
    }

    fn build_quad(&self, q: &QuadDef) -> Result<(LightlikeQuadrilateral<f64>, SpaceKind)> {
        let edges = [&q.u_plus, &q.u_minus, &q.v_plus, &q.v_minus];
        let explicit = edges.iter().filter(|e| e.is_some()).count();
        let (quad, space) = match (explicit, q.canonical, &q.from_ads) {
            (4, false, None) => {
                let [up, um, vp, vm] = edges.map(|e| vec4(e.as_ref().expect("counted")));
                (self.space(q.space).quad_new(up, um, vp, vm)?, q.space)
            }
            (0, true, None) => {
                let space = self.space(q.space);
                (LightlikeQuadrilateral::canonical().transform(space.darboux()), q.space)
            }
            (0, false, Some(name)) => {
                let Built::AdsPlane(p) = self.get(name)? else {
                    bail!("`from_ads` must name an ads_plane");
                };
                (self.ads.ads_quadrilateral(p)?, SpaceKind::Ads)
            }
            _ => bail!("a quad needs all four edges, `canonical`, or `from_ads`"),
        };
        if q.from_ads.is_some() && q.space != SpaceKind::Standard {
            bail!("`space` is implied by `from_ads`");
        }
        let Some(t) = &q.transform else {
            return Ok((quad, space));
        };
        let g = matrix(t);
        let symp = self.space(space);
        if !symp.is_symplectic(&g) {
            bail!("transform does not preserve the symplectic form");
        }
        let moved = quad.transform(&g);
        symp.validate_quad(&moved)?;
        Ok((moved, space))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"{
        "seed": 3,
        "objects": [
            {"name": "t1", "kind": "torus", "normal": [1, 0, 0, 0, 0]},
            {"name": "s", "kind": "torus", "splitting": {"s": [[1, 0, 0, 0], [0, 0, 1, 0]], "s_perp": [[0, 1, 0, 0], [0, 0, 0, 1]]}},
            {"name": "g", "kind": "torus", "graph_of": "s", "map": [[3, 0], [0, 1]]},
            {"name": "c", "kind": "quad", "canonical": true},
            {"name": "e", "kind": "quad", "u_plus": [1, 0, 0, 0], "u_minus": [0, 1, 0, 0], "v_plus": [0, 0, 0, 1], "v_minus": [0, 0, 1, 0]},
            {"name": "p", "kind": "ads_plane", "base": [[1, 0], [0, 1]], "a": [1, -2], "b": [1, -1]},
            {"name": "pq", "kind": "quad", "from_ads": "p"},
            {"name": "ph", "kind": "photon", "vector": [1, 1, -1, 1]}
        ]
    }"#;

    #[test]
    fn parses_and_builds_every_kind() {
        let cfg = Config::parse(SAMPLE).unwrap();
        let s = cfg.build(Overrides::default()).unwrap();
        let kinds: Vec<_> = s.objects.iter().map(|(_, b)| b.kind()).collect();
        assert_eq!(kinds, ["torus", "torus", "torus", "quad", "quad", "ads_plane", "quad", "photon"]);
        assert_eq!(s.seed, Some(3));
        assert!(matches!(s.get("pq").unwrap(), Built::Surface(_, SpaceKind::Ads)));
    }

    #[test]
    fn round_trip_preserves_objects() {
        let cfg = Config::parse(SAMPLE).unwrap();
        let again = Config::parse(&cfg.to_json()).unwrap();
        assert_eq!(cfg, again);
        let (a, b) = (cfg.build(Overrides::default()).unwrap(), again.build(Overrides::default()).unwrap());
        for ((n1, b1), (n2, b2)) in a.objects.iter().zip(&b.objects) {
            assert_eq!(n1, n2);
            match (b1, b2) {
                (Built::Torus(x), Built::Torus(y)) => assert_eq!(x.torus, y.torus),
                (Built::Surface(x, _), Built::Surface(y, _)) => assert_eq!(x.quad(), y.quad()),
                (Built::AdsPlane(x), Built::AdsPlane(y)) => assert_eq!(x.a, y.a),
                (Built::Photon(x, _), Built::Photon(y, _)) => assert_eq!(x, y),
                _ => panic!("kind changed for {n1}"),
            }
        }
    }

    #[test]
    fn overrides_win() {
        let cfg = Config::parse(SAMPLE).unwrap();
        let s = cfg
            .build(Overrides {
                eps_alg: Some(1e-7),
                seed: Some(9),
                ..Default::default()
            })
            .unwrap();
        assert_eq!((s.tol.alg, s.seed), (1e-7, Some(9)));
    }

    #[test]
    fn rejects_bad_input() {
        let bad = [
            r#"{"objects": [{"name": "a", "kind": "torus", "normal": [0, 0, 1, 0, 0]}]}"#,
            r#"{"objects": [{"name": "a", "kind": "torus"}]}"#,
            r#"{"objects": [{"name": "q", "kind": "quad", "u_plus": [1, 0, 0, 0], "u_minus": [0, 1, 0, 0], "v_plus": [0, 0, 1, 0], "v_minus": [0, 0, 0, 1]}]}"#,
            r#"{"objects": [{"name": "a", "kind": "photon", "vector": [0, 0, 0, 0]}]}"#,
            r#"{"objects": [{"name": "a", "kind": "torus", "graph_of": "b", "map": [[1, 0], [0, 1]]}]}"#,
            r#"{"objects": [{"name": "a", "kind": "photon", "vector": [1, 0, 0, 0]}, {"name": "a", "kind": "photon", "vector": [1, 0, 0, 0]}]}"#,
            r#"{"objects": [{"name": "a", "kind": "blob"}]}"#,
        ];
        for text in bad {
            let res = Config::parse(text).and_then(|c| c.build(Overrides::default()));
            assert!(res.is_err(), "{text}");
        }
    }
}

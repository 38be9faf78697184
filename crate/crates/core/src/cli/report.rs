//! Text and JSON reports printed by the CLI.

use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64;
use serde::Serialize;

use crate::classify::{self, fixed_points_for, reduce_to_canonical, TraceSign};
use crate::error::Result;
use crate::iwasawa::{decompose, recompose, Subgroup};
use crate::numfmt::{complex, num};
use crate::orbits::Orbit;
use crate::sl2r::{physical_reading, to_sl2r, RealIwasawaFactors};
use crate::stack::coefficients as stack_coefficients;
use crate::su11::{DiscPoint, Region, Su11Matrix};

pub trait Render: Serialize {
    fn text(&self) -> String;

    fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
            s.push('\n');
            s
        } else {
            self.text()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Source {
    Matrix,
    Stack { name: String, layers: usize },
}

impl Source {
    fn describe(&self) -> String {
        match self {
            Source::Matrix => "matrix".to_string(),
            Source::Stack { name, layers } => format!("stack {name} ({layers} layers)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Cx {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for Cx {
    fn from(z: Complex64) -> Self {
        Cx { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub re: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub im: Option<f64>,
    pub infinity: bool,
    pub region: Region,
}

impl From<DiscPoint> for PointOut {
    fn from(z: DiscPoint) -> Self {
        PointOut {
            re: z.value().map(|v| v.re),
            im: z.value().map(|v| v.im),
            infinity: z.is_infinite(),
            region: z.region(),
        }
    }
}

fn point_text(z: &DiscPoint) -> String {
    match z.value() {
        Some(v) => format!("{}  ({})", complex(v), z.region()),
        None => "infinity  (outside)".to_string(),
    }
}

fn line(out: &mut String, key: &str, value: impl AsRef<str>) {
    let _ = writeln!(out, "{key:<20}{}", value.as_ref());
}

fn header(out: &mut String, source: &Source, m: &Su11Matrix) {
    line(out, "source", source.describe());
    line(out, "alpha", complex(m.alpha()));
    line(out, "beta", complex(m.beta()));
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassifyReport {
    pub source: Source,
    pub alpha: Cx,
    pub beta: Cx,
    pub trace: f64,
    pub trace_squared: f64,
    pub class: Subgroup,
    pub trace_sign: TraceSign,
    pub degenerate: bool,
    pub fixed_point_kind: String,
    pub fixed_points: Vec<PointOut>,
    #[serde(skip)]
    points: Vec<DiscPoint>,
    #[serde(skip)]
    matrix: Su11Matrix,
}

pub fn classify(m: &Su11Matrix, source: &Source) -> ClassifyReport {
    let c = classify::classify(m);
    let fp = fixed_points_for(m, &c);
    let points = fp.points();
    ClassifyReport {
        source: source.clone(),
        alpha: m.alpha().into(),
        beta: m.beta().into(),
        trace: c.trace,
        trace_squared: c.trace_squared(),
        class: c.class,
        trace_sign: c.trace_sign,
        degenerate: c.degenerate,
        fixed_point_kind: fp.kind().to_string(),
        fixed_points: points.iter().map(|z| (*z).into()).collect(),
        points,
        matrix: *m,
    }
}

impl Render for ClassifyReport {
    fn text(&self) -> String {
        let mut out = String::new();
        header(&mut out, &self.source, &self.matrix);
        line(&mut out, "trace", num(self.trace));
        line(&mut out, "trace^2", num(self.trace_squared));
        line(&mut out, "class", self.class.to_string());
        line(&mut out, "trace sign", self.trace_sign.to_string());
        line(&mut out, "degenerate", if self.degenerate { "yes" } else { "no" });
        line(&mut out, "fixed points", &self.fixed_point_kind);
        for (k, z) in self.points.iter().enumerate() {
            line(&mut out, &format!("  z{}", k + 1), point_text(z));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IwasawaReport {
    pub source: Source,
    pub alpha: Cx,
    pub beta: Cx,
    pub phi: f64,
    pub xi: f64,
    pub nu: f64,
    pub magnification: f64,
    pub residual: f64,
    #[serde(skip)]
    matrix: Su11Matrix,
}

pub fn iwasawa(m: &Su11Matrix, source: &Source) -> IwasawaReport {
    let f = decompose(m);
    IwasawaReport {
        source: source.clone(),
        alpha: m.alpha().into(),
        beta: m.beta().into(),
        phi: f.phi,
        xi: f.xi,
        nu: f.nu,
        magnification: f.magnification(),
        residual: recompose(&f).max_entry_distance(m),
        matrix: *m,
    }
}

impl Render for IwasawaReport {
    fn text(&self) -> String {
        let mut out = String::new();
        header(&mut out, &self.source, &self.matrix);
        line(&mut out, "phi", num(self.phi));
        line(&mut out, "xi", num(self.xi));
        line(&mut out, "nu", num(self.nu));
        line(&mut out, "magnification", num(self.magnification));
        line(&mut out, "residual", num(self.residual));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjugateReport {
    pub source: Source,
    pub alpha: Cx,
    pub beta: Cx,
    pub class: Subgroup,
    pub trace_sign: TraceSign,
    pub conjugator_alpha: Cx,
    pub conjugator_beta: Cx,
    pub family: String,
    pub canonical_alpha: Cx,
    pub canonical_beta: Cx,
    pub canonical_form: String,
    pub parameter: f64,
    pub off_form_residual: f64,
    pub trace_difference: f64,
    #[serde(skip)]
    matrices: [Su11Matrix; 3],
}

pub fn conjugate(m: &Su11Matrix, source: &Source) -> Result<ConjugateReport> {
    let r = reduce_to_canonical(m)?;
    let c = r.conjugator.canonical_member;
    let sign = if r.sign() < 0.0 { "-" } else { "" };
    let symbol = match r.classification.class {
        Subgroup::K => "K(phi)",
        Subgroup::A => "A(xi)",
        Subgroup::N => "N(nu)",
    };
    Ok(ConjugateReport {
        source: source.clone(),
        alpha: m.alpha().into(),
        beta: m.beta().into(),
        class: r.classification.class,
        trace_sign: r.classification.trace_sign,
        conjugator_alpha: c.alpha().into(),
        conjugator_beta: c.beta().into(),
        family: r.conjugator.description.clone(),
        canonical_alpha: r.canonical.alpha().into(),
        canonical_beta: r.canonical.beta().into(),
        canonical_form: format!("{sign}{symbol}"),
        parameter: r.parameter(),
        off_form_residual: r.off_form_residual(),
        trace_difference: (r.canonical.trace() - m.trace()).abs(),
        matrices: [*m, c, r.canonical],
    })
}

impl Render for ConjugateReport {
    fn text(&self) -> String {
        let mut out = String::new();
        let [m, c, hat] = self.matrices;
        header(&mut out, &self.source, &m);
        line(&mut out, "class", self.class.to_string());
        line(&mut out, "trace sign", self.trace_sign.to_string());
        line(&mut out, "conjugator alpha", complex(c.alpha()));
        line(&mut out, "conjugator beta", complex(c.beta()));
        line(&mut out, "family", &self.family);
        line(&mut out, "canonical alpha", complex(hat.alpha()));
        line(&mut out, "canonical beta", complex(hat.beta()));
        line(&mut out, "canonical form", &self.canonical_form);
        let name = match self.class {
            Subgroup::K => "phi",
            Subgroup::A => "xi",
            Subgroup::N => "nu",
        };
        line(&mut out, name, num(self.parameter));
        line(&mut out, "off-form residual", num(self.off_form_residual));
        line(&mut out, "trace difference", num(self.trace_difference));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sl2rReport {
    pub source: Source,
    pub alpha: Cx,
    pub beta: Cx,
    pub entries: [[f64; 2]; 2],
    pub determinant: f64,
    pub phi: f64,
    pub xi: f64,
    pub nu: f64,
    pub magnification: f64,
    pub reading: Vec<String>,
    #[serde(skip)]
    matrix: Su11Matrix,
}

pub fn sl2r(m: &Su11Matrix, source: &Source) -> Sl2rReport {
    let r = to_sl2r(m);
    let f: RealIwasawaFactors = decompose(m).into();
    Sl2rReport {
        source: source.clone(),
        alpha: m.alpha().into(),
        beta: m.beta().into(),
        entries: r.entries(),
        determinant: r.determinant(),
        phi: f.phi,
        xi: f.xi,
        nu: f.nu,
        magnification: f.magnification(),
        reading: physical_reading(&f).lines().map(str::to_string).collect(),
        matrix: *m,
    }
}

impl Render for Sl2rReport {
    fn text(&self) -> String {
        let mut out = String::new();
        header(&mut out, &self.source, &self.matrix);
        let [[a, b], [c, d]] = self.entries;
        line(
            &mut out,
            "sl2r",
            format!("[[{}, {}], [{}, {}]]", num(a), num(b), num(c), num(d)),
        );
        line(&mut out, "determinant", num(self.determinant));
        line(&mut out, "phi", num(self.phi));
        line(&mut out, "xi", num(self.xi));
        line(&mut out, "nu", num(self.nu));
        line(&mut out, "magnification", num(self.magnification));
        for r in &self.reading {
            line(&mut out, "reading", r);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoefficientsReport {
    pub source: Source,
    pub alpha: Cx,
    pub beta: Cx,
    pub reflection: Cx,
    pub transmission: Cx,
    pub reflectance: f64,
    pub transmittance: f64,
    pub energy_residual: f64,
    #[serde(skip)]
    matrix: Su11Matrix,
}

pub fn coefficients(m: &Su11Matrix, source: &Source) -> CoefficientsReport {
    let c = stack_coefficients(m);
    CoefficientsReport {
        source: source.clone(),
        alpha: m.alpha().into(),
        beta: m.beta().into(),
        reflection: c.reflection.into(),
        transmission: c.transmission.into(),
        reflectance: c.reflectance(),
        transmittance: c.transmittance(),
        energy_residual: (c.reflectance() + c.transmittance() - 1.0).abs(),
        matrix: *m,
    }
}

impl Render for CoefficientsReport {
    fn text(&self) -> String {
        let mut out = String::new();
        header(&mut out, &self.source, &self.matrix);
        line(
            &mut out,
            "R",
            complex(Complex64::new(self.reflection.re, self.reflection.im)),
        );
        line(
            &mut out,
            "T",
            complex(Complex64::new(self.transmission.re, self.transmission.im)),
        );
        line(&mut out, "|R|^2", num(self.reflectance));
        line(&mut out, "|T|^2", num(self.transmittance));
        line(&mut out, "energy residual", num(self.energy_residual));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrbitSummary {
    pub subgroup: Subgroup,
    pub seed: Cx,
    pub range: (f64, f64),
    pub samples: usize,
    pub output: String,
}

pub fn orbit_summary(orbit: &Orbit, output: &Path) -> OrbitSummary {
    let first = orbit.samples.first().map_or(0.0, |s| s.0);
    let last = orbit.samples.last().map_or(0.0, |s| s.0);
    OrbitSummary {
        subgroup: orbit.subgroup,
        seed: orbit.seed.value().unwrap_or_default().into(),
        range: (first, last),
        samples: orbit.samples.len(),
        output: output.display().to_string(),
    }
}

impl Render for OrbitSummary {
    fn text(&self) -> String {
        format!(
            "wrote {} samples of the {}-orbit of {} over [{}, {}] to {}\n",
            self.samples,
            self.subgroup,
            complex(Complex64::new(self.seed.re, self.seed.im)),
            num(self.range.0),
            num(self.range.1),
            self.output
        )
    }
}

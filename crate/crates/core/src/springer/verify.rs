use serde::Serialize;

use super::ambient::Ambient;
use super::flag::{phi, phi_inverse, Flag, FlagJson};
use super::form::{FormError, FormSpec};
use super::projline::ProjLine;
use super::sample::{sample_rng, sample_t_a, satisfies};
use super::spaltenstein::{jordan_sequence, spaltenstein};
use crate::cupdiag::{CupDiagram, Parity};
use crate::tableaux::{big_psi_inverse, d_to_c, DominoTableau, Flavor, Partition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("diagram {0} has even parity; the type C statement needs odd parity")]
    EvenParity(String),
    #[error(transparent)]
    Form(#[from] FormError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: impl FnOnce() -> String) -> Self {
        Self { name, passed, detail: (!passed).then(detail) }
    }

    fn from_result(name: &'static str, r: Result<bool, String>) -> Self {
        match r {
            Ok(p) => Self::new(name, p, || "does not hold".into()),
            Err(e) => Self { name, passed: false, detail: Some(e) },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SampleReport {
    pub index: u64,
    pub lines: Vec<ProjLine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flag: Option<FlagJson>,
    pub checks: Vec<Check>,
}

impl SampleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentReport {
    pub flavor: Flavor,
    pub diagram: String,
    pub shape: (usize, usize),
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    pub samples: Vec<SampleReport>,
    /// Checks spanning several samples.
    pub global: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ComponentReport {
    pub fn passed(&self) -> bool {
        self.samples.iter().all(SampleReport::passed) && self.global.iter().all(|c| c.passed)
    }

    /// The first failing check with its sample index, if any.
    pub fn first_failure(&self) -> Option<(Option<u64>, &Check)> {
        let local = self.samples.iter().find_map(|s| s.checks.iter().find(|c| !c.passed).map(|c| (Some(s.index), c)));
        local.or_else(|| self.global.iter().find(|c| !c.passed).map(|c| (None, c)))
    }
}

/// A deliberate corruption used by negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tamper {
    /// Negate the Gram entry `(row, col)` of every form of this flavor large
    /// enough to have it.
    NegateGramEntry { flavor: Flavor, row: usize, col: usize },
}

/// Runs the sampled checks. The default verifier uses the standard forms.
#[derive(Debug, Clone, Default)]
pub struct Verifier {
    tamper: Option<Tamper>,
}

fn two_row(a: usize, b: usize) -> Partition {
    Partition::two_row(a, b)
}

/// Expected `J(x^{(i)})` along a flag lifted from a diagram without undotted
/// cups, for `i = 0..=len`: equal rows `(top - i, top - i)` once
/// `i ≥ m - k`, and `(a - 2i, b)` before.
fn closed_form_sequence(m: usize, k: usize, (a, b): (usize, usize), top: usize, len: usize) -> Vec<Partition> {
    (0..=len).map(|i| if i >= m - k { two_row(top - i, top - i) } else { two_row(a - 2 * i, b) }).collect()
}

fn has_undotted_cup(a: &CupDiagram) -> bool {
    a.cups().iter().any(|c| !c.dotted)
}

fn show<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn tampered(tamper: Tamper) -> Self {
        Self { tamper: Some(tamper) }
    }

    pub fn form(&self, flavor: Flavor, shape: (usize, usize), ambient: &Ambient) -> Result<FormSpec, FormError> {
        let form = FormSpec::for_shape(flavor, shape, ambient)?;
        match self.tamper {
            Some(Tamper::NegateGramEntry { flavor: f, row, col }) if f == flavor && row.max(col) < form.dim() => {
                let mut g = form.gram().clone();
                g[(row, col)] = -g[(row, col)].clone();
                FormSpec::with_gram(flavor, shape, ambient, g)
            }
            _ => Ok(form),
        }
    }

    fn lift(
        &self,
        a: &CupDiagram,
        seed: u64,
        index: u64,
        ambient: &Ambient,
    ) -> (Vec<ProjLine>, Vec<Check>, Option<Flag>) {
        let lines = sample_t_a(a, &mut sample_rng(a, seed, index));
        let mut checks = vec![Check::new("relations", satisfies(a, &lines), || "sample violates T_a".into())];
        let flag = match phi_inverse(&lines, ambient) {
            Ok(f) => Some(f),
            Err(e) => {
                checks.push(Check::from_result("lift", Err(show(e))));
                None
            }
        };
        (lines, checks, flag)
    }

    /// The type D statement on `samples` points of `T_a`: the lifted flags
    /// are `z`-compatible, lie in `E_{n-k,k}`, are isotropic, survive the
    /// `φ` round trip and have Spaltenstein tableau `Ψ⁻¹(a)` without signs.
    /// Diagrams without undotted cups also get their full Jordan-type
    /// sequence checked.
    pub fn verify_component(&self, a: &CupDiagram, samples: u64, seed: u64) -> Result<ComponentReport, VerifyError> {
        let shape = a.d_shape();
        let (m, k) = (a.m(), shape.1);
        let ambient = Ambient::for_shape(m, shape.0);
        let form = self.form(Flavor::D, shape, &ambient)?;
        let target = big_psi_inverse(a).map(|t| t.forget_signs()).map_err(show);
        let mut out = Vec::new();
        for index in 0..samples {
            let (lines, mut checks, flag) = self.lift(a, seed, index, &ambient);
            if let Some(flag) = &flag {
                checks.push(Check::from_result("z-compatible", flag.is_compatible(ambient.z()).map_err(show)));
                let top = flag.last().cloned().unwrap_or_else(|| crate::exact::Subspace::zero(ambient.dim()));
                checks.push(Check::from_result("in E", top.is_subspace_of(&form.e_space()).map_err(show)));
                checks.push(Check::from_result("isotropic", form.isotropic(&top).map_err(show)));
                checks
                    .push(Check::from_result("phi round trip", phi(flag, &ambient).map(|l| l == lines).map_err(show)));
                checks.push(tableau_check(flag, &form, &target));
                if !has_undotted_cup(a) {
                    let expect = closed_form_sequence(m, k, shape, m, m);
                    checks.push(sequence_check(flag, &form, &expect));
                }
            }
            out.push(SampleReport {
                index,
                lines,
                flag: flag.map(|f| FlagJson::from_flag(&f, &ambient, Some(shape))),
                checks,
            });
        }
        Ok(ComponentReport {
            flavor: Flavor::D,
            diagram: a.to_string(),
            shape,
            seed,
            target: target.ok().map(|t| t.to_string()),
            samples: out,
            global: Vec::new(),
            note: None,
        })
    }

    /// The type C statement for an odd diagram: dropping the last space of
    /// each lifted flag lands in `E_{n-k-1,k-1}`, is isotropic for `β_C`, has
    /// Spaltenstein tableau `d_to_c(Ψ⁻¹(a))` without signs, and distinct
    /// samples keep distinct images.
    pub fn verify_type_c(&self, a: &CupDiagram, samples: u64, seed: u64) -> Result<ComponentReport, VerifyError> {
        if a.parity() != Parity::Odd {
            return Err(VerifyError::EvenParity(a.to_string()));
        }
        let d_shape = a.d_shape();
        let (m, k) = (a.m(), d_shape.1);
        let shape = (d_shape.0 - 1, k - 1);
        let mut report = ComponentReport {
            flavor: Flavor::C,
            diagram: a.to_string(),
            shape,
            seed,
            target: None,
            samples: Vec::new(),
            global: Vec::new(),
            note: None,
        };
        if m == 1 {
            report.note = Some("m = 1: the type C fiber is a point; trivially passes".into());
            return Ok(report);
        }
        let ambient = Ambient::for_shape(m, d_shape.0);
        let form = self.form(Flavor::C, shape, &ambient)?;
        let target = big_psi_inverse(a).map_err(show).and_then(|t| d_to_c(&t).map_err(show)).map(|t| t.forget_signs());
        report.target = target.as_ref().ok().map(ToString::to_string);
        let mut images: Vec<(Vec<ProjLine>, Flag)> = Vec::new();
        for index in 0..samples {
            let (lines, mut checks, flag) = self.lift(a, seed, index, &ambient);
            let image = flag.map(|f| f.pi());
            if let Some(g) = &image {
                let top = g.last().cloned().unwrap_or_else(|| crate::exact::Subspace::zero(ambient.dim()));
                checks.push(Check::from_result("z-compatible", g.is_compatible(ambient.z()).map_err(show)));
                checks.push(Check::from_result("in E", top.is_subspace_of(&form.e_space()).map_err(show)));
                checks.push(Check::from_result("isotropic", form.isotropic(&top).map_err(show)));
                checks.push(tableau_check(g, &form, &target));
                if !has_undotted_cup(a) {
                    let expect = closed_form_sequence(m, k, shape, m - 1, m - 1);
                    checks.push(sequence_check(g, &form, &expect));
                }
                images.push((lines.clone(), g.clone()));
            }
            let flag = image.map(|g| FlagJson::from_flag(&g, &ambient, Some(shape)));
            report.samples.push(SampleReport { index, lines, flag, checks });
        }
        let collision = images.iter().enumerate().find_map(|(x, (lx, gx))| {
            images[x + 1..].iter().find(|(ly, gy)| lx != ly && gx == gy).map(|(ly, _)| (lx.clone(), ly.clone()))
        });
        report.global.push(Check::new("injective", collision.is_none(), || {
            let (p, q) = collision.clone().unwrap();
            format!("samples {p:?} and {q:?} have the same image")
        }));
        Ok(report)
    }
}

fn tableau_check(flag: &Flag, form: &FormSpec, target: &Result<DominoTableau, String>) -> Check {
    let got = spaltenstein(flag, form).map_err(show);
    match (got, target) {
        (Ok(t), Ok(want)) => Check::new("tableau", t == *want, || format!("got {t}, expected {want}")),
        (Err(e), _) => Check::from_result("tableau", Err(format!("spaltenstein: {e}"))),
        (_, Err(e)) => Check::from_result("tableau", Err(format!("target: {e}"))),
    }
}

fn sequence_check(flag: &Flag, form: &FormSpec, expect: &[Partition]) -> Check {
    match jordan_sequence(flag, form) {
        Ok(seq) => Check::new("jordan sequence", seq == expect, || {
            let s = |v: &[Partition]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
            format!("got {}, expected {}", s(&seq), s(expect))
        }),
        Err(e) => Check::from_result("jordan sequence", Err(show(e))),
    }
}

pub fn verify_component(a: &CupDiagram, samples: u64, seed: u64) -> Result<ComponentReport, VerifyError> {
    Verifier::new().verify_component(a, samples, seed)
}

pub fn verify_type_c(a: &CupDiagram, samples: u64, seed: u64) -> Result<ComponentReport, VerifyError> {
    Verifier::new().verify_type_c(a, samples, seed)
}

//! Acceptance suite: one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use springer_core::cupdiag::{
    diagrams_for_shape, intersection_graph, intersection_type, Cup, CupDiagram, IntersectionType, Parity, Ray,
};
use springer_core::exact::{GaussianRational as Q, Subspace};
use springer_core::sphere::oracle_cross_check;
use springer_core::springer::{
    jordan_sequence, spaltenstein, Ambient, Flag, FormSpec, PropagationInstance, Tamper, Verifier,
};
use springer_core::tableaux::{
    big_psi, big_psi_inverse, c_to_d, d_shapes_up_to, d_to_c, enumerate_adt, enumerate_signed, enumerate_syt, psi,
    Flavor,
};

type Outcome = Result<String, String>;

const SAMPLES: u64 = 5;
const SEED: u64 = 2024;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn err<E: ToString>(e: E) -> String {
    e.to_string()
}

fn enumeration_golden() -> Outcome {
    let syt = enumerate_syt(3, 2);
    let images: Vec<String> = syt.iter().map(|t| psi(t).to_string()).collect();
    ensure(
        images == ["|1 (2,3) (4,5)", "(1,2) |3 (4,5)", "|1 (2,5) (3,4)", "(1,2) (3,4) |5", "(1,4) (2,3) |5"],
        || format!("SYT(3,2) images {images:?}"),
    )?;
    let adt_d = strings(&enumerate_adt(5, 3, Flavor::D).map_err(err)?);
    ensure(adt_d == ["4 3 2 1 1 / 4 3 2", "4 3 3 1 1 / 4 2 2", "4 3 3 2 2 / 4 1 1"], || {
        format!("ADT_D(5,3) {adt_d:?}")
    })?;
    let adt_c = strings(&enumerate_adt(4, 2, Flavor::C).map_err(err)?);
    ensure(adt_c == ["3 2 1 1 / 3 2", "3 3 1 1 / 2 2", "3 3 2 2 / 1 1"], || format!("ADT_C(4,2) {adt_c:?}"))?;
    let sgn_d = strings(&enumerate_signed(5, 3, Flavor::D).map_err(err)?);
    ensure(
        sgn_d
            == [
                "4+ 3 2+ 1 1 / 4 3 2",
                "4+ 3 2- 1 1 / 4 3 2",
                "4- 3 2+ 1 1 / 4 3 2",
                "4- 3 2- 1 1 / 4 3 2",
                "4+ 3 3 1 1 / 4 2 2",
                "4- 3 3 1 1 / 4 2 2",
                "4+ 3 3 2 2 / 4 1 1",
                "4- 3 3 2 2 / 4 1 1",
            ],
        || format!("signed D(5,3) {sgn_d:?}"),
    )?;
    let sgn_c = strings(&enumerate_signed(4, 2, Flavor::C).map_err(err)?);
    ensure(sgn_c == ["3 2+ 1 1 / 3 2", "3 2- 1 1 / 3 2", "3 3 1 1 / 2 2", "3 3 2 2 / 1 1"], || {
        format!("signed C(4,2) {sgn_c:?}")
    })?;
    let b = diagrams_for_shape(5, 3);
    let names = strings(&b);
    ensure(
        names
            == [
                "(1,2) |3 |4",
                "|1 (2,3) |4",
                "|1 |2 (3,4)",
                "|1 |2* (3,4)*",
                "(1,2) |3 |4*",
                "|1 (2,3) |4*",
                "|1 |2* (3,4)",
                "|1 |2 (3,4)*",
            ],
        || format!("B(5,3) {names:?}"),
    )?;
    let even = b.iter().filter(|a| a.parity() == Parity::Even).count();
    ensure(even == 4, || format!("{even} even diagrams"))?;
    Ok(format!(
        "SYT(3,2) {}, ADT_D(5,3) {}, ADT_C(4,2) {}, signed {} and {}, B(5,3) {} = {} even + {} odd",
        syt.len(),
        adt_d.len(),
        adt_c.len(),
        sgn_d.len(),
        sgn_c.len(),
        b.len(),
        even,
        b.len() - even
    ))
}

fn bijection_suite() -> Outcome {
    let (mut shapes, mut objects) = (0, 0);
    for (a, b) in d_shapes_up_to(16) {
        shapes += 1;
        let diagrams = diagrams_for_shape(a, b);
        let signed = enumerate_signed(a, b, Flavor::D).map_err(err)?;
        ensure(diagrams.len() == signed.len(), || {
            format!("({a},{b}): {} diagrams, {} tableaux", diagrams.len(), signed.len())
        })?;
        for t in &signed {
            let d = big_psi(t).map_err(|e| format!("Psi({t}): {e}"))?;
            let back = big_psi_inverse(&d).map_err(|e| format!("Psi^-1({d}): {e}"))?;
            ensure(back == *t, || format!("Psi^-1(Psi({t})) = {back}"))?;
        }
        for d in &diagrams {
            let t = big_psi_inverse(d).map_err(|e| format!("Psi^-1({d}): {e}"))?;
            let again = big_psi(&t).map_err(|e| format!("Psi({t}): {e}"))?;
            ensure(again == *d, || format!("Psi(Psi^-1({d})) = {again}"))?;
        }
        let odd: Vec<&CupDiagram> = diagrams.iter().filter(|d| d.parity() == Parity::Odd).collect();
        let c_signed = enumerate_signed(a - 1, b - 1, Flavor::C).map_err(err)?;
        ensure(odd.len() == c_signed.len(), || {
            format!("({a},{b}): {} odd diagrams, {} C tableaux", odd.len(), c_signed.len())
        })?;
        let mut images = Vec::new();
        for d in odd {
            let t = big_psi_inverse(d).map_err(err)?;
            let c = d_to_c(&t).map_err(|e| format!("d_to_c({t}): {e}"))?;
            let back = c_to_d(&c, Parity::Odd).map_err(|e| format!("c_to_d({c}): {e}"))?;
            ensure(back == t, || format!("c_to_d(d_to_c({t})) = {back}"))?;
            images.push(c);
        }
        images.sort_by_key(ToString::to_string);
        let mut expect = c_signed;
        expect.sort_by_key(ToString::to_string);
        ensure(images == expect, || format!("({a},{b}): d_to_c is not onto the C tableaux"))?;
        objects += diagrams.len();
    }
    Ok(format!("{shapes} shapes, {objects} diagrams, Psi and D-to-C round trips exhaustive"))
}

fn intersection_rule() -> Outcome {
    let mut pairs = 0usize;
    for (a, b) in d_shapes_up_to(16) {
        let diagrams = diagrams_for_shape(a, b);
        for x in &diagrams {
            for y in &diagrams {
                oracle_cross_check(x, y).map_err(err)?.map_err(err)?;
                pairs += 1;
            }
        }
    }
    let b = diagrams_for_shape(5, 3);
    let g = intersection_graph(&b).map_err(err)?;
    let comps = g.connected_components();
    ensure(comps.len() == 2 && comps.iter().all(|c| c.len() == 4), || format!("components {comps:?}"))?;
    for c in &comps {
        let centers = c.iter().filter(|&&v| g.neighbours(v).len() == 3).count();
        let leaves = c.iter().filter(|&&v| g.neighbours(v).len() == 1).count();
        ensure(centers == 1 && leaves == 3, || format!("component {c:?} is not a 3-leaf star"))?;
    }
    let ab = intersection_type(&b[0], &b[1]).map_err(err)?;
    let ac = intersection_type(&b[0], &b[2]).map_err(err)?;
    ensure(ab == IntersectionType::NonEmpty(0), || format!("S_a and S_b meet in {ab}"))?;
    ensure(ac == IntersectionType::Empty, || format!("S_a and S_c meet in {ac}"))?;
    Ok(format!("{pairs} ordered pairs agree under both conventions, B(5,3) graph is two 3-leaf stars"))
}

fn spaltenstein_golden() -> Outcome {
    let amb = Ambient::new(5);
    let n = amb.dim();
    let form = FormSpec::for_shape(Flavor::D, (5, 3), &amb).map_err(err)?;
    let w = amb.vector(&[(3, Q::i())], &[(2, Q::one())]);
    let span = |vs: &[Vec<Q>]| Subspace::span(n, vs).map_err(err);
    let flag = Flag::new(vec![
        span(&[amb.e(1)])?,
        span(&[amb.e(1), amb.f(1)])?,
        span(&[amb.e(1), amb.e(2), amb.f(1)])?,
        span(&[amb.e(1), amb.e(2), amb.f(1), w])?,
    ])
    .map_err(err)?;
    let seq = strings(&jordan_sequence(&flag, &form).map_err(err)?);
    ensure(seq == ["(5,3)", "(3,3)", "(3,1)", "(1,1)", "()"], || format!("sequence {seq:?}"))?;
    let t = spaltenstein(&flag, &form).map_err(err)?.to_string();
    ensure(t == "4 3 3 1 1 / 4 2 2", || format!("tableau {t}"))?;
    Ok(format!("J = (1,1) (3,1) (3,3) (5,3), tableau {t}"))
}

fn component_run(flavor: Flavor) -> Outcome {
    let v = Verifier::new();
    let (mut diagrams, mut samples) = (0, 0);
    for (a, b) in d_shapes_up_to(12) {
        for d in diagrams_for_shape(a, b) {
            if flavor == Flavor::C && d.parity() != Parity::Odd {
                continue;
            }
            let r = match flavor {
                Flavor::D => v.verify_component(&d, SAMPLES, SEED),
                Flavor::C => v.verify_type_c(&d, SAMPLES, SEED),
            }
            .map_err(|e| format!("{d}: {e}"))?;
            if let Some((idx, c)) = r.first_failure() {
                let flag = idx
                    .and_then(|i| r.samples[i as usize].flag.as_ref())
                    .map(|f| serde_json::to_string(f).expect("flags serialize"));
                return Err(format!("{d}: check {} failed ({:?}) on sample {idx:?}, flag {flag:?}", c.name, c.detail));
            }
            diagrams += 1;
            samples += r.samples.len();
        }
    }
    Ok(format!("{diagrams} diagrams, {samples} lifted samples, all checks pass"))
}

fn isotropy_propagation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut shapes = Vec::new();
    for (a, b) in d_shapes_up_to(12) {
        shapes.push((Flavor::D, (a, b)));
        shapes.push((Flavor::C, (a - 1, b - 1)));
    }
    let mut tested = Vec::new();
    for (flavor, shape) in shapes {
        if PropagationInstance::random(flavor, shape, &mut rng).is_err() {
            continue;
        }
        for _ in 0..100 {
            let inst = PropagationInstance::random(flavor, shape, &mut rng).map_err(err)?;
            ensure(inst.hypotheses().map_err(err)?, || format!("{flavor} {shape:?}: bad instance"))?;
            ensure(inst.conclusion().map_err(err)?, || format!("{flavor} {shape:?}: U = {:?} fails", inst.u.basis()))?;
        }
        tested.push(format!("{flavor}{shape:?}"));
    }
    Ok(format!("{} form shapes x 100 instances, zero failures", tested.len()))
}

/// Negating any single nonzero Gram entry of the (5,3) forms must be caught
/// by some diagram, and so must dots moved to forbidden places. A flag of
/// length `l` lies in `ker z^l`, so entries pairing a coordinate outside it
/// cannot influence any check and are skipped.
fn negative_controls() -> Outcome {
    let (mut caught, mut skipped) = (0, 0);
    let amb = Ambient::new(5);
    for (flavor, shape, len) in [(Flavor::D, (5, 3), 4), (Flavor::C, (4, 2), 3)] {
        let form = FormSpec::for_shape(flavor, shape, &amb).map_err(err)?;
        let dim = form.dim();
        let reachable = |idx: usize| {
            if idx < shape.0 {
                idx < len
            } else {
                idx - shape.0 < len
            }
        };
        for row in 0..dim {
            for col in 0..dim {
                if form.gram()[(row, col)].is_zero() {
                    continue;
                }
                if !reachable(row) || !reachable(col) {
                    skipped += 1;
                    continue;
                }
                let v = Verifier::tampered(Tamper::NegateGramEntry { flavor, row, col });
                let hit = diagrams_for_shape(5, 3).iter().any(|d| {
                    let r = match flavor {
                        Flavor::D => v.verify_component(d, 2, SEED),
                        Flavor::C if d.parity() == Parity::Odd => v.verify_type_c(d, 2, SEED),
                        Flavor::C => return false,
                    };
                    r.map(|r| r.first_failure().is_some()).unwrap_or(true)
                });
                ensure(hit, || format!("negating {flavor} Gram entry ({row},{col}) went unnoticed"))?;
                caught += 1;
            }
        }
    }
    let cup = |left, right, dotted| Cup { left, right, dotted };
    let ray = |at| Ray { at, dotted: false };
    let bad_dots = [
        CupDiagram::new_unchecked(4, vec![cup(1, 2, true)], vec![ray(3), ray(4)]),
        CupDiagram::new_unchecked(4, vec![cup(1, 4, false), cup(2, 3, true)], vec![]),
    ];
    for d in bad_dots {
        ensure(d.to_string().parse::<CupDiagram>().is_err(), || format!("{d} should be rejected by the parser"))?;
        let r = Verifier::new().verify_component(&d, 2, SEED).map_err(err)?;
        let (_, c) = r.first_failure().ok_or_else(|| format!("illegal dot {d} went unnoticed"))?;
        ensure(c.name != "relations", || "failure came from sampling, not geometry".into())?;
        caught += 1;
    }
    Ok(format!(
        "{caught} perturbations detected: every reachable nonzero Gram entry of D(5,3) and C(4,2), two illegal dots \
         ({skipped} entries outside ker z^m skipped)"
    ))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome, Duration);
    let criteria: [Criterion; 8] = [
        ("enumeration golden counts", enumeration_golden, Duration::from_secs(1)),
        ("bijection suite, n <= 16", bijection_suite, Duration::from_secs(30)),
        ("intersection rule, n <= 16", intersection_rule, Duration::from_secs(120)),
        ("Spaltenstein golden flag", spaltenstein_golden, Duration::from_secs(1)),
        ("type D components, n <= 12", || component_run(Flavor::D), Duration::from_secs(120)),
        ("type C components, n <= 12", || component_run(Flavor::C), Duration::from_secs(120)),
        ("isotropy propagation, n <= 12", isotropy_propagation, Duration::from_secs(120)),
        ("negative controls", negative_controls, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (idx, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (status, msg) = match outcome {
            Ok(m) if took <= *limit => ("PASS", m),
            Ok(m) => ("FAIL", format!("{m}; exceeded the {limit:?} budget")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {}: {status} [{name}] {msg} ({took:.2?})", idx + 1);
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 8 acceptance criteria pass");
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::projline::ProjLine;
use crate::cupdiag::CupDiagram;
use crate::exact::GaussianRational as Q;
use crate::sphere::{translate_to_p1, FixedLine, ProjRelation};

const BOUND: i64 = 7;

/// FNV-1a, used to give every diagram its own stream under a shared seed.
fn stream_of(a: &CupDiagram) -> u64 {
    a.to_string().bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

/// The generator used for sample `index` of `a` under `seed`.
pub fn sample_rng(a: &CupDiagram, seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(index.wrapping_mul(0x9e37_79b9_7f4a_7c15)));
    rng.set_stream(stream_of(a));
    rng
}

fn small_ratio<R: Rng>(rng: &mut R) -> (i64, i64) {
    (rng.random_range(-BOUND..=BOUND), rng.random_range(1..=BOUND))
}

fn is_fixed(l: &ProjLine) -> bool {
    use FixedLine::*;
    [E, F, EPlusF, EMinusF, IePlusF, IeMinusF].into_iter().any(|f| ProjLine::fixed(f) == *l)
}

/// A point of `T_a`: rays get their fixed lines, the left end of each cup a
/// random line `(1 : μ)` with small Gaussian-rational `μ`, and the right end
/// its partner. Free lines avoid the fixed lines and all earlier lines and
/// their perps.
pub fn sample_t_a<R: Rng>(a: &CupDiagram, rng: &mut R) -> Vec<ProjLine> {
    let mut lines: Vec<Option<ProjLine>> = vec![None; a.m()];
    for rel in translate_to_p1(a) {
        match rel {
            ProjRelation::Fixed { i, line } => lines[i - 1] = Some(ProjLine::fixed(line)),
            ProjRelation::Perp { i, j } | ProjRelation::Same { i, j } => {
                let taken: Vec<ProjLine> = lines.iter().flatten().flat_map(|l| [l.clone(), l.perp()]).collect();
                let l = loop {
                    let (rn, rd) = small_ratio(rng);
                    let (in_, id) = small_ratio(rng);
                    let l = ProjLine::affine(Q::from_ratios(rn, rd, in_, id));
                    if !is_fixed(&l) && !taken.contains(&l) {
                        break l;
                    }
                };
                let partner = if matches!(rel, ProjRelation::Perp { .. }) { l.perp() } else { l.clone() };
                lines[i - 1] = Some(l);
                lines[j - 1] = Some(partner);
            }
        }
    }
    lines.into_iter().map(|l| l.expect("every vertex is a cup end or a ray")).collect()
}

/// Whether `lines` satisfies every relation of `translate_to_p1(a)`.
pub fn satisfies(a: &CupDiagram, lines: &[ProjLine]) -> bool {
    lines.len() == a.m()
        && translate_to_p1(a).iter().all(|rel| match *rel {
            ProjRelation::Perp { i, j } => lines[j - 1] == lines[i - 1].perp(),
            ProjRelation::Same { i, j } => lines[j - 1] == lines[i - 1],
            ProjRelation::Fixed { i, line } => lines[i - 1] == ProjLine::fixed(line),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cupdiag::diagrams_for_shape;

    #[test]
    fn samples_satisfy_relations() {
        for a in diagrams_for_shape(5, 3).into_iter().chain(diagrams_for_shape(4, 4)) {
            for s in 0..5 {
                let lines = sample_t_a(&a, &mut sample_rng(&a, 7, s));
                assert!(satisfies(&a, &lines), "{a}");
            }
        }
    }

    #[test]
    fn single_ray_and_cup() {
        let a: CupDiagram = "|1*".parse().unwrap();
        assert_eq!(sample_t_a(&a, &mut sample_rng(&a, 0, 0)), vec![ProjLine::fixed(FixedLine::E)]);
        let b: CupDiagram = "(1,2)".parse().unwrap();
        let l = sample_t_a(&b, &mut sample_rng(&b, 0, 0));
        assert_eq!(l[1], l[0].perp());
        assert!(!is_fixed(&l[0]));
        assert!(!satisfies(&b, &[l[0].clone(), l[0].clone()]));
    }

    #[test]
    fn deterministic() {
        let a: CupDiagram = "(1,2) (3,4)".parse().unwrap();
        let x = sample_t_a(&a, &mut sample_rng(&a, 3, 1));
        assert_eq!(x, sample_t_a(&a, &mut sample_rng(&a, 3, 1)));
        assert_ne!(x, sample_t_a(&a, &mut sample_rng(&a, 3, 2)));
    }
}

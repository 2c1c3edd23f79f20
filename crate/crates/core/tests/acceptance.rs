//! One line per acceptance criterion. Runs as a plain binary and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nilk::groupring::{self, kahler_d};
use nilk::laurent::{self, display, one_minus_s_n, specialize};
use nilk::nil::{frobenius, verschiebung};
use nilk::steinberg::{dennis_stein_word, dual_ring, reduced_x_word};
use nilk::verify::{self, Options};
use nilk::{IdealSpec, Matrix, Report, Status, SubringSpec, Symbol};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const LIMIT: Duration = Duration::from_secs(5);

type Outcome = Result<Vec<String>, Box<dyn std::error::Error>>;
type Criterion = (&'static str, fn() -> Outcome);

/// Collects failed conditions by name.
struct Conds(Vec<String>);

impl Conds {
    fn new() -> Conds {
        Conds(Vec::new())
    }

    fn req(&mut self, name: &str, ok: bool) {
        if !ok {
            self.0.push(name.to_string());
        }
    }

    /// Every listed check in the report has the given status.
    fn report(&mut self, rep: &Report, ids: &[&str], want: Status) {
        for id in ids {
            match rep.get(id) {
                Some(c) if c.status == want => {}
                Some(c) => self.0.push(format!("{id} is {}", c.status.as_str())),
                None => self.0.push(format!("{id} missing")),
            }
        }
    }
}

fn criterion1() -> Outcome {
    let t = laurent::run()?;
    let m = t.rep.matrix();
    let printed = display::theorem31().embed(m.ring())?;
    let mut c = Conds::new();
    c.req("(1,2) as printed", m.get(0, 1) == printed.get(0, 1));
    c.req("(2,1) as printed", m.get(1, 0) == printed.get(1, 0));
    c.req("(2,2) as printed", m.get(1, 1) == printed.get(1, 1));
    c.req("(1,1) = 1-(1-z^-1)s^4t^4", *m.get(0, 0) == m.ring().elem("1-(1-z^-1)*s^4*t^4"));
    c.req("printed (1,1) = 1-(1+z^-1)s^4t^4", *printed.get(0, 0) == m.ring().elem("1-(1+z^-1)*s^4*t^4"));
    c.req("det = 1", m.det()?.is_one());
    c.req("s -> 0 gives I", specialize(m, Symbol::S)?.is_identity());
    c.req("subring", m.entries_in_subring(SubringSpec));
    c.report(&t.report, &["thm31.display"], Status::Discrepancy);
    c.report(&t.report, &["thm31.entry12", "thm31.entry21", "thm31.entry22", "thm31.entry11", "thm31.det", "thm31.s_to_zero", "thm31.subring"], Status::Pass);
    Ok(c.0)
}

fn criterion2() -> Outcome {
    let a = laurent::lift_a()?;
    let r = a.ring().clone();
    let mut c = Conds::new();
    let reduced = a.apply_hom(nilk::Hom::TruncateT2)?;
    let rt = reduced.ring().clone();
    c.req("π(A) = diag(1+st, 1-st)", reduced == Matrix::diagonal(&rt, &[rt.elem("1+s*t"), rt.elem("1-s*t")])?);
    c.req("det A = 1", a.det()?.is_one());
    let pair = laurent::double_idempotent_b()?;
    let p = Matrix::diagonal(&r, &[r.one(), r.zero()])?;
    c.req("B1^2 = B1", pair.first.is_idempotent());
    c.req("B1 - P in M2(I)", pair.first.try_sub(&p)?.entries_in_ideal(IdealSpec::MonomialT2)?);
    let e2 = laurent::clutch_projector(&a, &p)?;
    c.req("e2^2 = e2", e2.is_idempotent());
    c.req("e2 - P in M2(I)", e2.try_sub(&p)?.entries_in_ideal(IdealSpec::MonomialT2)?);
    c.req("e2 in Q[t^2,t^3,s]", e2.entries_in_subring(SubringSpec));
    Ok(c.0)
}

fn criterion3() -> Outcome {
    let rep = laurent::theorem31_matrix()?;
    let blocks = laurent::decompose_m(&rep)?;
    let mut c = Conds::new();
    let printed = display::m_blocks();
    c.req("five blocks", blocks.len() == 5);
    c.req("blocks as printed", blocks == printed);
    let n = laurent::higman_companion(&blocks)?;
    c.req("N as printed", n.matrix() == &display::n10());
    c.req("N^10 = 0", n.matrix().pow(10)?.is_zero());
    c.req("det(I - sN) = 1", one_minus_s_n(n.matrix())?.det()?.is_one());
    Ok(c.0)
}

fn criterion4() -> Outcome {
    let n = laurent::higman_companion(&laurent::decompose_m(&laurent::theorem31_matrix()?)?)?;
    let mut c = Conds::new();
    let v2 = verschiebung(&n, 2)?;
    c.req("V_2(N) is 20x20", v2.matrix().rows() == 20 && v2.matrix().cols() == 20);
    c.req("V_2(N) nilpotent", v2.matrix().nilpotency_index(40).is_some());
    c.req("F_10(N) = 0", frobenius(&n, 10)?.matrix().is_zero());
    c.req("V_1(N) = N", verschiebung(&n, 1)? == n);
    Ok(c.0)
}

fn criterion5() -> Outcome {
    let d = dual_ring();
    let mut c = Conds::new();
    let id = Matrix::identity(&d, 2);
    c.req("<ε, x+ε> = I", dennis_stein_word(1, 2, &d.elem("ε"), &d.elem("x+ε"))?.eval(2)? == id);
    c.req("X = I", reduced_x_word().eval(2)? == id);
    let t = groupring::run()?;
    let yz = t.yz.matrix();
    c.req("det YZ = 1", yz.det()?.is_one());
    let diff = yz.try_sub(&Matrix::identity(yz.ring(), 2))?;
    c.req("YZ - I in M2((2))", diff.entries_in_ideal(IdealSpec::PrincipalTwo)?);
    c.req("reduce(YZ) = I", groupring::reduce_to_dual(&t.yz)?.is_identity());
    c.req("ψ(lift) = YZ", &t.lifted.apply_hom(nilk::Hom::Psi)? == yz);
    c.req("det lift = 1", t.lifted.det()?.is_one());
    c.req("lift shape", groupring::has_relative_shape(&t.lifted)?);
    c.req("lift as printed", t.lifted == groupring::display::theorem42());
    c.report(&t.report, &["c4.psi", "c4.det", "c4.shape", "c4.display"], Status::Pass);
    Ok(c.0)
}

fn criterion6() -> Outcome {
    let f = groupring::f2_ring();
    let mut c = Conds::new();
    let d1 = kahler_d(&f.one(), &f.elem("x"))?;
    c.req("D(1, x) = dx", d1.to_string() == "dx" && !d1.is_zero());
    c.req("D(x, x^2) = 0", kahler_d(&f.elem("x"), &f.elem("x^2"))?.is_zero());
    Ok(c.0)
}

fn suites(run: impl FnOnce(&mut Report, &mut ChaCha8Rng)) -> Vec<String> {
    let mut rep = Report::new();
    let mut rng = ChaCha8Rng::seed_from_u64(Options::default().seed);
    run(&mut rep, &mut rng);
    let mut c = Conds::new();
    c.req("at least one suite", !rep.checks().is_empty());
    for check in rep.checks() {
        if check.status != Status::Pass {
            c.0.push(format!("{}: {}", check.id, check.computed));
        }
    }
    c.0
}

fn criterion7() -> Outcome {
    let units = Options::default().units;
    let mut out = suites(|rep, rng| verify::generalized_units(rep, rng, units));
    if units < 50 {
        out.push(format!("only {units} units"));
    }
    Ok(out)
}

fn criterion8() -> Outcome {
    let cases = Options::default().cases;
    let mut out = suites(|rep, rng| {
        verify::ring_axioms(rep, rng, cases);
        verify::hom_properties(rep, rng, cases);
        verify::ideal_closure(rep, rng, cases);
        verify::det_multiplicative(rep, rng, cases);
        verify::word_properties(rep, rng, cases);
    });
    if cases < 1000 {
        out.push(format!("only {cases} cases"));
    }
    Ok(out)
}

fn criterion9() -> Outcome {
    let mut rep = Report::new();
    verify::witness_checks(&mut rep)?;
    let mut c = Conds::new();
    c.report(
        &rep,
        &[
            "sse.direct_sum_zero",
            "sse.direct_sum_zero_perturbed",
            "sse.nilpotent_chain",
            "sse.nilpotent_chain_perturbed",
            "se.nilpotent_to_zero",
            "se.nilpotent_to_zero_perturbed",
        ],
        Status::Pass,
    );
    Ok(c.0)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("K1 representative over Q[t^2,t^3,z,z^-1,s] (known (1,1) sign discrepancy recorded)", criterion1),
        ("lift, double idempotent and e2 identities", criterion2),
        ("M1..M5 blocks, 10x10 companion N, N^10 = 0, det(I - sN) = 1", criterion3),
        ("Verschiebung and Frobenius on N", criterion4),
        ("Steinberg words, YZ and its group-ring lift", criterion5),
        ("Kähler differential detection", criterion6),
        ("50 generalized units a + b·st", criterion7),
        ("randomized property suites, 1000 cases each", criterion8),
        ("SSE / SE witnesses and their perturbations", criterion9),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed();
        let problems = match result {
            Ok(mut p) => {
                if elapsed > LIMIT {
                    p.push(format!("took {elapsed:.2?}"));
                }
                p
            }
            Err(e) => vec![format!("error: {e}")],
        };
        let tag = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!("[{tag}] {} {name} ({elapsed:.2?})", k + 1);
        for p in &problems {
            println!("       {p}");
        }
        if !problems.is_empty() {
            failed += 1;
        }
    }
    println!("{} of 9 criteria pass", 9 - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}

//! Acceptance suite. Runs every criterion in order and prints one
//! `PASS`/`FAIL` line per criterion; exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tutte_genus::matroid::{
    are_isomorphic_bruteforce, check_independence_axioms, construct_q, construct_r, construct_s,
    construct_s_prime, AxiomReport, Matroid, MatroidError, SubsetMask,
};
use tutte_genus::poly::Polynomial;
use tutte_genus::tutte::{
    compare_polynomials, m1, m2, profile_counts, specialize_down, tuple_count,
    tutte_closed_uniform, tutte_delete_contract, tutte_genus, tutte_sum, EngineConfig, Verdict,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Conservation checks gathered from every genus run of criteria 4 to 6.
#[derive(Default)]
struct Ledger {
    runs: usize,
    failures: Vec<String>,
}

impl Ledger {
    /// Computes `T^(g)` from scratch, checking the profile total and the
    /// all-2s value along the way.
    fn genus(&mut self, name: &str, m: &Matroid, genus: usize, threads: usize) -> Polynomial {
        let n = m.ground_set_size();
        let table = m.rank_table().unwrap();
        let counts = profile_counts(&table, genus, &EngineConfig::with_threads(threads)).unwrap();
        let p = counts.expand();
        let expected = tuple_count(genus, n);
        self.runs += 1;
        if counts.total() != BigUint::from(1u8) << (genus * n) {
            self.failures.push(format!(
                "{name} g={genus}: profile total {}",
                counts.total()
            ));
        }
        let at_two = p.evaluate_all(&common::two());
        if at_two != expected {
            self.failures.push(format!(
                "{name} g={genus}: all-2s value {at_two}, expected {expected}"
            ));
        }
        p
    }
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    for n in 0..=10 {
        for r in 0..=n {
            let sum = tutte_sum(&Matroid::uniform(r, n).unwrap()).unwrap();
            let closed = tutte_closed_uniform(r, n).unwrap();
            ensure(sum == closed, || {
                format!(
                    "U({r},{n}): {} vs {}",
                    sum.canonical_text(),
                    closed.canonical_text()
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} uniform matroids"))
}

fn criterion_2() -> Outcome {
    let mut cases: Vec<(String, Matroid)> = vec![
        ("U(2,4)".into(), Matroid::uniform(2, 4).unwrap()),
        ("R(3,6)".into(), construct_r(3, 6).unwrap()),
        ("Q(3,6)".into(), construct_q(3, 6).unwrap()),
        ("S12".into(), construct_s(3).unwrap()),
        ("S'12".into(), construct_s_prime(3).unwrap()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..20 {
        let n = 1 + i % 8;
        cases.push((
            format!("random #{i} (n={n})"),
            common::random_bases_matroid(&mut rng, n),
        ));
    }
    for (name, m) in &cases {
        let a = tutte_sum(m).unwrap();
        let b = tutte_delete_contract(m).unwrap();
        ensure(a == b, || {
            format!("{name}: sum and deletion-contraction differ")
        })?;
    }
    Ok(format!("{} matroids", cases.len()))
}

fn criterion_3() -> Outcome {
    let r = construct_r(3, 6).unwrap();
    let q = construct_q(3, 6).unwrap();
    let (tr, tq) = (tutte_sum(&r).unwrap(), tutte_sum(&q).unwrap());
    ensure(tr == tq, || "T(R36) != T(Q36)".into())?;
    let iso = are_isomorphic_bruteforce(&r, &q).unwrap();
    ensure(!iso.is_isomorphic(), || {
        format!("isomorphism found: {:?}", iso.witness)
    })?;
    ensure(iso.permutations_checked == 720, || {
        format!("{} permutations checked", iso.permutations_checked)
    })?;
    Ok(format!(
        "T = {}; non-isomorphic after 720 permutations",
        tr.canonical_text()
    ))
}

fn criterion_4(ledger: &mut Ledger) -> Outcome {
    let mut lines = Vec::new();
    for (r, n) in [(3, 6), (3, 7), (4, 8)] {
        let a = ledger.genus(&format!("R({r},{n})"), &construct_r(r, n).unwrap(), 2, 1);
        let b = ledger.genus(&format!("Q({r},{n})"), &construct_q(r, n).unwrap(), 2, 1);
        match compare_polynomials(&a, &b) {
            Verdict::Equal => return Err(format!("T2(R({r},{n})) = T2(Q({r},{n}))")),
            Verdict::Differ(w) => lines.push(format!(
                "({r},{n}) witness {} R={} Q={}",
                w.monomial, w.left, w.right
            )),
        }
    }
    Ok(lines.join("; "))
}

/// Returns the canonical text of `T^(2)(S12)` and `T^(2)(S'12)` for one
/// thread count.
fn s12_texts(ledger: &mut Ledger, threads: usize) -> (String, String) {
    let s = ledger.genus("S12", &construct_s(3).unwrap(), 2, threads);
    let t = ledger.genus("S'12", &construct_s_prime(3).unwrap(), 2, threads);
    (s.canonical_text(), t.canonical_text())
}

fn criterion_5(ledger: &mut Ledger, outputs: &mut Vec<(usize, (String, String))>) -> Outcome {
    ensure(m1(3).unwrap() == 2, || {
        format!("m1(3) = {}", m1(3).unwrap())
    })?;
    ensure(m2(3).unwrap() == 4, || {
        format!("m2(3) = {}", m2(3).unwrap())
    })?;

    let start = Instant::now();
    let single = s12_texts(ledger, 1);
    let single_time = start.elapsed();
    ensure(single.0 == single.1, || "T2(S12) != T2(S'12)".into())?;
    ensure(single_time < Duration::from_secs(60), || {
        format!("single-threaded run took {single_time:?}")
    })?;
    outputs.push((1, single));

    let start = Instant::now();
    let eight = s12_texts(ledger, 8);
    let eight_time = start.elapsed();
    ensure(eight_time < Duration::from_secs(15), || {
        format!("8-thread run took {eight_time:?}")
    })?;
    outputs.push((8, eight));

    let o = Command::new(env!("CARGO_BIN_EXE_tutte-genus"))
        .args(["genus", "--builtin", "S:3", "-g", "4"])
        .output()
        .unwrap();
    ensure(o.status.code() == Some(3), || {
        format!("genus 4 run exited with {:?}", o.status.code())
    })?;

    Ok(format!(
        "m1=2 m2=4; T2(S12) = T2(S'12) ({} bytes); 1 thread {:.2?}, 8 threads {:.2?}; genus 4 refused with exit 3",
        outputs[0].1 .0.len(),
        single_time,
        eight_time
    ))
}

fn criterion_6(ledger: &mut Ledger) -> Outcome {
    let cases = [
        ("U(1,2)", Matroid::uniform(1, 2).unwrap()),
        ("U(2,4)", Matroid::uniform(2, 4).unwrap()),
        ("R(3,6)", construct_r(3, 6).unwrap()),
        ("Q(3,6)", construct_q(3, 6).unwrap()),
    ];
    for (name, m) in &cases {
        let t2 = ledger.genus(name, m, 2, 1);
        let reduced =
            specialize_down(&t2, m.ground_set_size()).map_err(|e| format!("{name}: {e}"))?;
        let t1 = tutte_sum(m).unwrap();
        ensure(reduced == t1, || {
            format!("{name}: specialization gives {}", reduced.canonical_text())
        })?;
    }
    Ok(format!("{} matroids", cases.len()))
}

fn criterion_7(ledger: &Ledger) -> Outcome {
    ensure(ledger.runs > 0, || "no genus runs recorded".into())?;
    ensure(ledger.failures.is_empty(), || ledger.failures.join("; "))?;
    Ok(format!("{} genus runs conserve 2^(g n)", ledger.runs))
}

fn criterion_8() -> Outcome {
    let r = Arc::new(construct_r(3, 6).unwrap());
    let cfg = EngineConfig::with_threads(1);
    let reference = tutte_genus(&r, 2, &cfg).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0xa11ce);
    for _ in 0..20 {
        let perm = common::random_permutation(&mut rng, 6);
        let moved = r.relabel(&perm).unwrap();
        ensure(tutte_genus(&moved, 2, &cfg).unwrap() == reference, || {
            format!("relabeling by {perm} changed T2")
        })?;
    }
    Ok("20 relabelings of R(3,6)".into())
}

fn criterion_9() -> Outcome {
    let built = [
        ("R(3,6)", construct_r(3, 6).unwrap()),
        ("Q(3,6)", construct_q(3, 6).unwrap()),
        ("S12", construct_s(3).unwrap()),
        ("S'12", construct_s_prime(3).unwrap()),
    ];
    for (name, m) in &built {
        // Rebuilding from the basis list re-runs the exchange check.
        Matroid::from_bases(m.ground_set_size(), &m.bases()).map_err(|e| format!("{name}: {e}"))?;
    }
    let family = [
        SubsetMask::from_elements([1, 2], 3).unwrap(),
        SubsetMask::from_elements([3], 3).unwrap(),
    ];
    let rejection = match Matroid::from_bases(3, &family) {
        Err(e @ MatroidError::UnequalBasisSizes { .. }) => e,
        other => {
            return Err(format!(
                "broken family not rejected for unequal sizes: {other:?}"
            ))
        }
    };
    let report = check_independence_axioms(&family, 3).unwrap();
    ensure(matches!(report, AxiomReport::NotHereditary { .. }), || {
        format!("independence check: {report}")
    })?;
    Ok(format!(
        "4 constructions valid; {{{{1,2}},{{3}}}} rejected: {rejection}"
    ))
}

fn criterion_10(outputs: &[(usize, (String, String))]) -> Outcome {
    let mut all = outputs.to_vec();
    all.push((2, s12_texts(&mut Ledger::default(), 2)));
    let reference = &all[0].1;
    for (threads, texts) in &all {
        ensure(texts == reference, || {
            format!("{threads}-thread output differs")
        })?;
    }
    let cli_text = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_tutte-genus"))
            .args(["genus", "--builtin", "S:3", "-g", "2", "--threads", threads])
            .output()
            .unwrap()
            .stdout
    };
    let first = cli_text("1");
    ensure(first == format!("{}\n", reference.0).into_bytes(), || {
        "CLI output differs from library".into()
    })?;
    for t in ["2", "8"] {
        ensure(cli_text(t) == first, || {
            format!("CLI output with {t} threads differs")
        })?;
    }
    Ok("library and CLI output identical for 1, 2 and 8 threads".into())
}

fn report(id: usize, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let elapsed = start.elapsed();
    let outcome = match (outcome, limit) {
        (Ok(_), Some(l)) if elapsed >= l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
        (o, _) => o,
    };
    let ok = outcome.is_ok();
    let detail = outcome.unwrap_or_else(|e| e);
    println!(
        "criterion {id:>2}: {} [{elapsed:.2?}] {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    ok
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let mut ledger = Ledger::default();
    let mut outputs = Vec::new();
    let results = [
        report(1, secs(5), criterion_1),
        report(2, secs(30), criterion_2),
        report(3, secs(1), criterion_3),
        report(4, secs(5), || criterion_4(&mut ledger)),
        report(5, secs(60), || criterion_5(&mut ledger, &mut outputs)),
        report(6, secs(10), || criterion_6(&mut ledger)),
        report(7, None, || criterion_7(&ledger)),
        report(8, secs(30), criterion_8),
        report(9, None, criterion_9),
        report(10, None, || criterion_10(&outputs)),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

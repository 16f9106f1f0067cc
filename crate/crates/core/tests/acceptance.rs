//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits nonzero on any FAIL.

mod support;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use grtame::artame::ArKind;
use grtame::grengine::{
    ladder_quasi_simples, mu_ij_table, partition_report, verify_property, Certification, EngineConfig, GrEngine,
    IsoClass, MeasureIndex, PartLabel, Strategy, Verdict, VerifyBounds,
};
use grtame::qkit::{cycle_quiver, parse_string};
use grtame::GrMeasure;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::oracle;

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

macro_rules! ensure_eq {
    ($left:expr, $right:expr, $($msg:tt)+) => {{
        let (l, r) = (&$left, &$right);
        if l != r {
            return Err(format!("{}: got {:?}, want {:?}", format!($($msg)+), l, r));
        }
    }};
}

fn mu(v: &[u32]) -> GrMeasure {
    GrMeasure::new(v.to_vec()).unwrap()
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn engine(word: &str) -> Result<GrEngine, String> {
    GrEngine::with_defaults(&cycle_quiver(word).map_err(err)?).map_err(err)
}

fn string(e: &GrEngine, tokens: &str) -> Result<IsoClass, String> {
    let toks: Vec<String> = tokens.split_whitespace().map(str::to_string).collect();
    Ok(e.string(parse_string(e.quiver(), &toks).map_err(err)?))
}

/// Orientation word of `Ã_n` with both directions present.
fn random_orientation(rng: &mut ChaCha8Rng, n: usize) -> String {
    loop {
        let w: String = (0..=n).map(|_| if rng.gen_bool(0.5) { '+' } else { '-' }).collect();
        if w.contains('+') && w.contains('-') {
            return w;
        }
    }
}

fn a32_x_y(e: &GrEngine) -> Result<(IsoClass, IsoClass), String> {
    Ok((string(e, "a2 a1 a0")?, string(e, "a3 a4")?))
}

fn c1_worked_example() -> Outcome {
    let e = engine("+++--")?;
    let tame = e.tame_context().map_err(err)?;
    let h1 = e.measure(&e.homogeneous(1).map_err(err)?).map_err(err)?;
    ensure_eq!(h1, mu(&[1, 2, 3, 4, 5]), "μ(H_1)");
    let (x, y) = a32_x_y(&e)?;
    ensure_eq!(e.measure(&x).map_err(err)?, mu(&[1, 2, 3, 4]), "μ(X)");
    ensure_eq!(e.measure(&y).map_err(err)?, mu(&[1, 2, 3]), "μ(Y)");
    let xq = tame.quasi_chain(&x, 2).map_err(err)?;
    ensure_eq!(e.measure(&xq).map_err(err)?, h1, "μ(X_q)");
    Ok(())
}

fn c2_sink_source() -> Outcome {
    for (word, n, want) in [("+-+-", 3usize, &[1u32, 3, 4][..]), ("+-+-+-", 5, &[1, 3, 5, 6])] {
        let e = engine(word)?;
        let r = e.gr_submodules(&e.homogeneous(1).map_err(err)?).map_err(err)?;
        ensure_eq!(r.measure, mu(want), "μ(H_1) for n={n}");
        ensure_eq!(r.gr_count, (n + 1) / 2, "gr(H_1) for n={n}");
        for t in &r.gr_submodules {
            ensure_eq!(e.kind(t), Some(ArKind::Preprojective), "kind of {} (n={n})", t.label());
            ensure_eq!(t.length(), n, "length of {} (n={n})", t.label());
        }
    }
    Ok(())
}

fn c3_string_theorem() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..5 {
        let n = rng.gen_range(2..=6);
        let word = random_orientation(&mut rng, n);
        let e = engine(&word)?;
        let mut checked = 0;
        for c in e.catalog(12).map_err(err)? {
            let Some(s) = c.as_string() else { continue };
            if c.length() < 2 || !e.is_band_free(s) {
                continue;
            }
            let r = e.gr_submodules(&c).map_err(err)?;
            ensure!(r.gr_count <= 2, "{word}: {} has {} GR submodules", c.label(), r.gr_count);
            for quo in &r.quotients {
                ensure!(quo.uniserial, "{word}: {} / {} is not uniserial", c.label(), quo.submodule);
            }
            checked += 1;
        }
        ensure!(checked > 0, "{word}: no band-free strings");
        let p = verify_property(&e, "prop_2gr", VerifyBounds::new(12)).map_err(err)?;
        ensure!(p.verdict != Verdict::Fail, "{word}: prop_2gr {:?}", p.failures);
    }
    Ok(())
}

fn c4_oracle_equivalence() -> Outcome {
    for word in ["++-", "+-+", "+++-", "++--", "+-+-"] {
        let q = cycle_quiver(word).map_err(err)?;
        let mods = oracle::indecomposables(&q, 8);
        let want_mu = oracle::measures(&q, &mods);
        let mut want: Vec<(Vec<usize>, Vec<u32>)> =
            mods.iter().zip(&want_mu).map(|(m, v)| (m.dims.clone(), v.clone())).collect();
        want.sort();
        for strategy in [Strategy::General, Strategy::Auto] {
            let e = GrEngine::new(&q, EngineConfig { strategy, ..EngineConfig::default() }).map_err(err)?;
            let mut got: Vec<(Vec<usize>, Vec<u32>)> = e
                .measure_all(8)
                .map_err(err)?
                .into_iter()
                .map(|(c, m)| (c.dim().0.clone(), m.elements().to_vec()))
                .collect();
            got.sort();
            ensure_eq!(got, want, "{word} {strategy:?} against brute force");
        }
        let fast =
            GrEngine::new(&q, EngineConfig { strategy: Strategy::Fast, ..EngineConfig::default() }).map_err(err)?;
        let general =
            GrEngine::new(&q, EngineConfig { strategy: Strategy::General, ..EngineConfig::default() }).map_err(err)?;
        let mut fast_count = 0;
        for c in fast.catalog(8).map_err(err)? {
            if c.as_string().is_some_and(|s| fast.is_band_free(s)) {
                let m = fast.measure(&c).map_err(err)?;
                ensure_eq!(m, general.measure(&c).map_err(err)?, "{word}: substring path on {}", c.label());
                ensure!(
                    want.contains(&(c.dim().0.clone(), m.elements().to_vec())),
                    "{word}: {} unknown to brute force",
                    c.label()
                );
                fast_count += 1;
            }
        }
        ensure!(fast_count > 0, "{word}: no band-free strings");
    }
    Ok(())
}

fn c5_kronecker() -> Outcome {
    let e = engine("+-")?;
    let q = e.quiver().clone();
    let index = MeasureIndex::build(&e, 9).map_err(err)?;
    let report = partition_report(&e, &index).map_err(err)?;

    let mods = oracle::indecomposables(&q, 9);
    let mus = oracle::measures(&q, &mods);
    // arrows point 0 → 1: preprojectives have more at the sink
    let mut oracle_rows = Vec::new();
    for (m, v) in mods.iter().zip(&mus) {
        let (label, class) = match m.dims[1].cmp(&m.dims[0]) {
            std::cmp::Ordering::Greater => (PartLabel::TakeOff, 0),
            std::cmp::Ordering::Equal => (PartLabel::Central, 1),
            std::cmp::Ordering::Less => (PartLabel::Landing, 2),
        };
        oracle_rows.push((v.clone(), label, class));
    }
    for (v, _, _) in &oracle_rows {
        let labels: Vec<PartLabel> = oracle_rows.iter().filter(|r| &r.0 == v).map(|r| r.1).collect();
        let want = if labels.contains(&PartLabel::TakeOff) {
            PartLabel::TakeOff
        } else if labels.iter().all(|l| *l == PartLabel::Landing) {
            PartLabel::Landing
        } else {
            PartLabel::Central
        };
        ensure_eq!(report.label_of(&mu(v)), Some(want), "label of {v:?}");
    }
    let mut want_all: Vec<Vec<u32>> = mus.clone();
    want_all.sort_by(|a, b| oracle::gr_cmp(a, b));
    want_all.dedup();
    let got_all: Vec<Vec<u32>> = index.entries.iter().map(|r| r.measure.elements().to_vec()).collect();
    ensure_eq!(got_all, want_all, "realized measures in order");

    let ascending = |class: usize| {
        let mut v: Vec<Vec<u32>> = oracle_rows.iter().filter(|r| r.2 == class).map(|r| r.0.clone()).collect();
        v.sort_by(|a, b| oracle::gr_cmp(a, b));
        v.dedup();
        v
    };
    let take_off = ascending(0);
    let regular = ascending(1);
    ensure_eq!(take_off[..3].to_vec(), vec![vec![1], vec![1, 3], vec![1, 3, 5]], "oracle take-off prefix");
    ensure_eq!(regular[..2].to_vec(), vec![vec![1, 2], vec![1, 2, 4]], "oracle regular prefix");
    let prefix: Vec<Vec<u32>> = report.take_off_prefix.iter().map(|m| m.elements().to_vec()).collect();
    ensure_eq!(prefix[..3].to_vec(), take_off[..3].to_vec(), "engine take-off prefix");
    for w in regular.windows(2) {
        let s = index.successor(&mu(&w[0])).map_err(err)?;
        ensure_eq!(s.successor, Some(mu(&w[1])), "successor of {:?}", w[0]);
    }
    Ok(())
}

fn c6_successors() -> Outcome {
    for word in ["+-", "+++--"] {
        let e = engine(word)?;
        let d = e.quiver().vertex_count();
        let index = MeasureIndex::build(&e, 6 * d).map_err(err)?;
        for i in 1..=4 {
            let hi = e.measure(&e.homogeneous(i).map_err(err)?).map_err(err)?;
            let next = e.measure(&e.homogeneous(i + 1).map_err(err)?).map_err(err)?;
            let a = index.successor(&hi).map_err(err)?;
            ensure_eq!(a.successor, Some(next), "{word}: successor of μ(H_{i})");
            ensure_eq!(a.status, Certification::Certified, "{word}: status after μ(H_{i})");
        }
    }
    let e = engine("+++--")?;
    let tame = e.tame_context().map_err(err)?;
    let index = MeasureIndex::build(&e, 30).map_err(err)?;
    let (x, _) = a32_x_y(&e)?;
    let r = 2;
    let h1 = e.measure(&e.homogeneous(1).map_err(err)?).map_err(err)?;
    ensure!(e.measure(&tame.quasi_chain(&x, r).map_err(err)?).map_err(err)? >= h1, "μ(X_r) < μ(H_1)");
    for j in 2 * r..=2 * r + 2 {
        let xj = e.measure(&tame.quasi_chain(&x, j).map_err(err)?).map_err(err)?;
        let next = e.measure(&tame.quasi_chain(&x, j + 1).map_err(err)?).map_err(err)?;
        let a = index.successor(&xj).map_err(err)?;
        ensure_eq!(a.successor, Some(next), "successor of μ(X_{j})");
        ensure_eq!(a.status, Certification::Certified, "status after μ(X_{j})");
    }
    Ok(())
}

fn c7_predecessors() -> Outcome {
    let e = engine("+++--")?;
    let tame = e.tame_context().map_err(err)?;
    let h1 = e.measure(&e.homogeneous(1).map_err(err)?).map_err(err)?;
    let i20 = MeasureIndex::build(&e, 20).map_err(err)?;
    let i25 = MeasureIndex::build(&e, 25).map_err(err)?;
    let (x, _) = a32_x_y(&e)?;
    let qs = ladder_quasi_simples(&e).map_err(err)?;
    ensure!(qs.contains(&x), "X is not among the qualifying quasi-simples");
    for q in &qs {
        let r = tame.tubes().iter().find(|t| t.quasi_simples.contains(q)).map(|t| t.rank).ok_or("no tube")?;
        let t = mu_ij_table(&e, &i25, q, 2 * r + 2).map_err(err)?;
        ensure!(!t.rows.is_empty(), "{}: empty table", q.label());
        ensure!(t.a_below_next, "{}: a_ij ≥ |X_(i+1)|", q.label());
        ensure!(t.realizers_preinjective, "{}: non-preinjective realizer", q.label());
        ensure!(t.predecessor_chain, "{}: not a chain of direct predecessors", q.label());
        ensure!(t.rows_ordered, "{}: rows out of order", q.label());
    }
    let r20 = i20.no_predecessor_report(Some(&h1));
    let r25 = i25.no_predecessor_report(Some(&h1));
    ensure!(
        r25.iter().any(|r| r.measure == h1 && r.status == Certification::Certified),
        "μ(H_1) missing from the report"
    );
    ensure_eq!(r20.len(), r25.len(), "report size at 4|δ| and 5|δ|");
    Ok(())
}

fn central_preinjectives(word: &str, bound: usize) -> Result<usize, String> {
    let e = engine(word)?;
    let index = MeasureIndex::build(&e, bound).map_err(err)?;
    Ok(partition_report(&e, &index).map_err(err)?.central_preinjectives(&e, &index).len())
}

fn c8_dichotomy() -> Outcome {
    ensure_eq!(central_preinjectives("+-+-", 12)?, 0, "sink-source at 3|δ|");
    ensure_eq!(central_preinjectives("+-+-", 16)?, 0, "sink-source at 4|δ|");
    let (a, b) = (central_preinjectives("+++--", 15)?, central_preinjectives("+++--", 20)?);
    ensure!(a < b, "Ã_(3,2) central preinjectives {a} at 3|δ|, {b} at 4|δ|");
    Ok(())
}

fn c9_invariants() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut words = vec!["+++--".to_string()];
    for _ in 0..2 {
        let n = rng.gen_range(2..=5);
        words.push(random_orientation(&mut rng, n));
    }
    let ids = [
        "bigprop_1a",
        "bigprop_1b",
        "bigprop_1c",
        "bigprop_1d",
        "bigprop_2",
        "bigprop_3",
        "bigprop_5",
        "bigprop_6",
        "bigprop_7",
        "onemap",
    ];
    for word in &words {
        let e = engine(word)?;
        let bound = 3 * e.quiver().vertex_count();
        for id in ids {
            let p = verify_property(&e, id, VerifyBounds::new(bound)).map_err(err)?;
            ensure!(p.verdict != Verdict::Fail, "{word} {id}: {:?}", p.failures);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 9] = [
        ("worked Ã_(3,2) values", 10, c1_worked_example),
        ("sink-source H_1", 30, c2_sink_source),
        ("string theorem suite", 120, c3_string_theorem),
        ("oracle equivalence", 120, c4_oracle_equivalence),
        ("Kronecker partition", 60, c5_kronecker),
        ("successor structure", 120, c6_successors),
        ("predecessor ladder", 180, c7_predecessors),
        ("preinjective/central dichotomy", 120, c8_dichotomy),
        ("invariant suite", 180, c9_invariants),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = t.elapsed();
        let outcome = match outcome {
            Ok(()) if took > Duration::from_secs(*limit) => Err(format!("exceeded {limit} s")),
            o => o,
        };
        match outcome {
            Ok(()) => println!("criterion {} {name}: PASS ({:.2} s, limit {limit} s)", k + 1, took.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({:.2} s, limit {limit} s): {msg}", k + 1, took.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

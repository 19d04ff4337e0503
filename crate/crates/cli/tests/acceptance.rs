//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use fatforest_core::closed::{
    betti_closed, betti_via_strand_subtraction, invariants_closed, skeleton_numerator, SkeletonQuery,
};
use fatforest_core::exact::numerator_from_fvector;
use fatforest_core::identities::identity_report;
use fatforest_core::{
    build_fat_forest, invariants_from_table, BettiTable, FatForestSpec, FieldSpec, Gluing, Integer, Oracle,
    SimplicialComplex, VertexSet,
};

const GOLDEN_K2: &str = include_str!("golden/delta_3_4_5_k2.txt");
const GOLDEN_K3: &str = include_str!("golden/delta_3_4_5_k3.txt");

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fatforest").chain(args.iter().copied());
    let code = fatforest_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ints(values: &[i64]) -> Vec<Integer> {
    values.iter().map(|&v| Integer::from(v)).collect()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn delta_345(k: usize) -> SimplicialComplex {
    build_fat_forest(&FatForestSpec::chain(&[3, 4, 5])).unwrap().skeleton(k)
}

/// The same table from `betti --method {formula,strands,hochster}`.
fn cli_three_ways(k: usize) -> Result<String, String> {
    let k = k.to_string();
    let mut outputs = Vec::new();
    for method in ["formula", "strands", "hochster"] {
        let (code, out, err) = cli(&["betti", "--sizes", "3,4,5", "-k", &k, "--method", method]);
        check(code == 0, || format!("{method}: exit {code}: {err}"))?;
        outputs.push(out);
    }
    check(outputs.windows(2).all(|w| w[0] == w[1]), || "methods print different tables".into())?;
    Ok(outputs.remove(0))
}

fn golden(k: usize, expected: &str, totals: &[i64], rows: &[(usize, &[i64])]) -> Outcome {
    let printed = cli_three_ways(k)?;
    check(printed == expected, || format!("table differs from golden file:\n{printed}"))?;

    let start = Instant::now();
    let oracle = Oracle::new(FieldSpec::GF2).hochster_betti(&delta_345(k)).unwrap();
    let elapsed = start.elapsed();
    let q = SkeletonQuery::new(vec![3, 4, 5], k).unwrap();
    for (name, table) in [
        ("formula", betti_closed(&q).unwrap()),
        ("strands", betti_via_strand_subtraction(&q).unwrap()),
        ("hochster GF(2)", oracle),
    ] {
        check(table.totals() == ints(totals), || format!("{name} totals {:?}", table.totals()))?;
        for &(diagonal, row) in rows {
            check(table.strand(diagonal) == ints(row), || {
                format!("{name} diagonal {diagonal}: {:?}", table.strand(diagonal))
            })?;
        }
    }
    check(elapsed < Duration::from_secs(60), || format!("oracle took {elapsed:?}"))?;
    Ok(format!("three methods match; oracle over 2^10 subsets in {elapsed:.2?}"))
}

fn criterion_1() -> Outcome {
    golden(
        2,
        GOLDEN_K2,
        &[1, 32, 138, 282, 334, 240, 102, 23, 2],
        &[(1, &[26, 103, 197, 224, 160, 71, 18, 2]), (3, &[6, 35, 85, 110, 80, 31, 5])],
    )
}

fn criterion_2() -> Outcome {
    golden(
        3,
        GOLDEN_K3,
        &[1, 27, 108, 207, 234, 165, 72, 18, 2],
        &[(1, &[26, 103, 197, 224, 160, 71, 18, 2]), (4, &[1, 5, 10, 10, 5, 1])],
    )
}

fn criterion_3() -> Outcome {
    let frozen_row2 = [15, 99, 280, 440, 415, 235, 74, 10];
    let published_row2 = [14, 92, 259, 405, 380, 214, 67, 9];
    cli_three_ways(1)?;
    let q = SkeletonQuery::new(vec![3, 4, 5], 1).unwrap();
    let formula = betti_closed(&q).unwrap();
    let strands = betti_via_strand_subtraction(&q).unwrap();
    let c = delta_345(1);
    let gf2 = Oracle::new(FieldSpec::GF2).hochster_betti(&c).unwrap();
    let gf3 = Oracle::new(FieldSpec::GF3).hochster_betti(&c).unwrap();
    check(formula == strands && strands == gf2 && gf2 == gf3, || "methods disagree".into())?;
    check(gf2.strand(1) == ints(&[26, 103, 197, 224, 160, 71, 18, 2]), || {
        format!("diagonal 1: {:?}", gf2.strand(1))
    })?;
    check(gf2.strand(2) == ints(&frozen_row2), || format!("diagonal 2: {:?}", gf2.strand(2)))?;
    check(gf2.strand(2) != ints(&published_row2), || "computed row equals the published row".into())?;

    let (code, out, _) = cli(&["paper-examples"]);
    check(code == 0, || format!("paper-examples exit {code}"))?;
    check(out.contains("15 99 280 440 415 235 74 10") && out.contains("14 92 259 405 380 214 67 9"), || {
        "discrepancy note missing".into()
    })?;
    check(out.contains(GOLDEN_K2) && out.contains(GOLDEN_K3), || {
        "paper-examples tables differ from golden".into()
    })?;
    Ok("formula = strands = GF(2) = GF(3); diagonal 2 is 15,99,280,440,415,235,74,10 (published row differs)"
        .into())
}

fn criterion_4() -> Outcome {
    for k in 1..=3usize {
        let q = SkeletonQuery::new(vec![3, 4, 5], k).unwrap();
        let closed = invariants_closed(&q).unwrap();
        let c = delta_345(k);
        let table = Oracle::default().hochster_betti(&c).unwrap();
        let oracle = invariants_from_table(&table, 10, c.dimension());
        check(closed == oracle, || format!("k = {k}: closed {closed:?}, oracle {oracle:?}"))?;
        check(
            closed.pd == 8 && closed.reg == k + 1 && closed.depth == 2 && closed.is_cm == (k <= 1),
            || format!("k = {k}: {closed:?}"),
        )?;
        let ks = k.to_string();
        let (_, a, _) = cli(&["invariants", "--sizes", "3,4,5", "-k", &ks, "--method", "closed"]);
        let (_, b, _) = cli(&["invariants", "--sizes", "3,4,5", "-k", &ks, "--method", "oracle"]);
        check(a == b, || format!("k = {k}: CLI outputs differ"))?;
    }
    Ok("pd=8, reg=k+1, depth=2, CM iff k<=1 for k=1,2,3".into())
}

/// One complex of the sweep corpus.
struct Case {
    sizes: Vec<usize>,
    gluing: &'static str,
    spec: FatForestSpec,
    k: usize,
}

impl Case {
    fn label(&self) -> String {
        format!("sizes {:?} {} k={}", self.sizes, self.gluing, self.k)
    }

    fn query(&self) -> SkeletonQuery {
        SkeletonQuery::new(self.sizes.clone(), self.k).unwrap()
    }

    fn full(&self) -> SimplicialComplex {
        build_fat_forest(&self.spec).unwrap()
    }
}

/// Every ordered list with e in {2,3}, n_i in {2,3,4}, N <= 12; chain, star
/// and one deterministic explicit schedule; k = 1..=max n_i.
fn corpus() -> Vec<Case> {
    let mut lists: Vec<Vec<usize>> = Vec::new();
    for e in 2..=3usize {
        let mut current = vec![2usize; e];
        loop {
            if current.iter().sum::<usize>() + 1 - e <= 12 {
                lists.push(current.clone());
            }
            let Some(pos) = current.iter().rposition(|&n| n < 4) else { break };
            current[pos] += 1;
            for slot in &mut current[pos + 1..] {
                *slot = 2;
            }
        }
    }
    let mut cases = Vec::new();
    for sizes in lists {
        let n = *sizes.iter().max().unwrap();
        let explicit = explicit_schedule(
            &sizes,
            &mut StdRng::seed_from_u64(sizes.iter().fold(7, |a, &s| a * 31 + s as u64)),
        );
        let gluings =
            [("chain-distinct", Gluing::ChainDistinct), ("star", Gluing::Star), ("explicit", explicit)];
        for (name, gluing) in gluings {
            for k in 1..=n {
                cases.push(Case {
                    sizes: sizes.clone(),
                    gluing: name,
                    spec: FatForestSpec::new(sizes.clone(), gluing.clone()),
                    k,
                });
            }
        }
    }
    cases
}

fn explicit_schedule(sizes: &[usize], rng: &mut StdRng) -> Gluing {
    let mut present = sizes[0];
    let mut pairs = Vec::new();
    for (idx, &n) in sizes.iter().enumerate().skip(1) {
        pairs.push((idx + 1, rng.gen_range(0..present)));
        present += n - 1;
    }
    Gluing::Explicit(pairs)
}

fn criterion_5(cases: &[Case]) -> Outcome {
    let start = Instant::now();
    for case in cases {
        let q = case.query();
        let c = case.full().skeleton(case.k);
        let formula = betti_closed(&q).map_err(|e| format!("{}: {e}", case.label()))?;
        let strands = betti_via_strand_subtraction(&q).map_err(|e| format!("{}: {e}", case.label()))?;
        let gf2 = Oracle::new(FieldSpec::GF2).hochster_betti(&c).unwrap();
        let gf3 = Oracle::new(FieldSpec::GF3).hochster_betti(&c).unwrap();
        check(formula == strands && strands == gf2 && gf2 == gf3, || {
            format!("{}: tables differ", case.label())
        })?;
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(600), || format!("sweep took {elapsed:?}"))?;
    Ok(format!("{} complexes, formula = strands = GF(2) = GF(3), {elapsed:.2?}", cases.len()))
}

fn criterion_6(cases: &[Case]) -> Outcome {
    let oracle = Oracle::default();
    for case in cases {
        let full = case.full();
        let sk = full.skeleton(case.k);
        let nonfaces = sk.minimal_nonfaces();
        check(nonfaces.iter().all(|s| s.len() == 2 || s.len() == case.k + 2), || {
            format!("{}: generator of unexpected degree", case.label())
        })?;
        let quadrics = |c: &SimplicialComplex| -> Vec<VertexSet> {
            c.minimal_nonfaces().into_iter().filter(|s| s.len() == 2).collect()
        };
        check(quadrics(&sk) == quadrics(&full.skeleton(1)), || {
            format!("{}: quadrics change with k", case.label())
        })?;

        let table = oracle.hochster_betti(&sk).unwrap();
        let whole = oracle.hochster_betti(&full).unwrap();
        check(table.entries().all(|((i, j), _)| j - i <= case.k + 1), || {
            format!("{}: entry beyond diagonal k+1", case.label())
        })?;
        let n = full.n_vertices();
        let lower_equal = (0..=n).all(|i| (i..i + case.k + 1).all(|j| table.get(i, j) == whole.get(i, j)));
        check(lower_equal, || format!("{}: strand below k+1 differs from the full complex", case.label()))?;
    }
    Ok(format!("{} complexes: generators in degrees 2 and k+2, strands restricted", cases.len()))
}

fn alternating_sums_match(table: &BettiTable, numerator: &fatforest_core::HilbertNumerator) -> bool {
    (0..=numerator.n_vars.max(table.max_degree())).all(|j| table.alternating_sum(j) == numerator.coeff(j))
}

fn criterion_7(cases: &[Case]) -> Outcome {
    for case in cases {
        let sk = case.full().skeleton(case.k);
        let expected = skeleton_numerator(&case.query());
        let from_f = numerator_from_fvector(&sk.f_vector(), sk.n_vertices()).unwrap();
        check(from_f == expected, || format!("{}: numerators differ", case.label()))?;
        let table = Oracle::default().hochster_betti(&sk).unwrap();
        check(alternating_sums_match(&table, &expected), || format!("{}: alternating sums", case.label()))?;
        check(alternating_sums_match(&betti_closed(&case.query()).unwrap(), &expected), || {
            format!("{}: closed alternating sums", case.label())
        })?;
    }
    Ok(format!("{} complexes: f-vector numerator = closed numerator = alternating sums", cases.len()))
}

fn criterion_8(cases: &[Case]) -> Outcome {
    let mut cm = 0;
    for case in cases {
        let sk = case.full().skeleton(case.k);
        let oracle = Oracle::default();
        let reisner = oracle.reisner_is_cm(&sk).unwrap();
        let inv =
            invariants_from_table(&oracle.hochster_betti(&sk).unwrap(), sk.n_vertices(), sk.dimension());
        let predicate = case.k <= 1 || *case.sizes.iter().max().unwrap() == 2;
        let closed = invariants_closed(&case.query()).unwrap().is_cm;
        check(
            reisner == (inv.depth == inv.krull_dim) && reisner == predicate && closed == predicate,
            || {
                format!(
                    "{}: reisner {reisner}, depth {} vs dim {}, predicate {predicate}",
                    case.label(),
                    inv.depth,
                    inv.krull_dim
                )
            },
        )?;
        cm += usize::from(reisner);
    }
    Ok(format!("{} complexes ({cm} Cohen-Macaulay): Reisner = depth test = predicate", cases.len()))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let mut reports = 0;
    let mut degrees = 0;
    for e in 1..=4usize {
        let mut sizes = vec![2usize; e];
        loop {
            // chain-distinct gluing is implied; the identities only see the sizes
            let report = identity_report(&sizes).map_err(|err| format!("{sizes:?}: {err}"))?;
            check(report.all_equal(), || format!("{sizes:?}: failed degrees {:?}", report.failed_degrees()))?;
            reports += 1;
            degrees += report.records.len();
            let Some(pos) = sizes.iter().rposition(|&n| n < 12) else { break };
            sizes[pos] += 1;
            let v = sizes[pos];
            for slot in &mut sizes[pos + 1..] {
                *slot = v;
            }
        }
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{reports} size lists, {degrees} degrees, all equal, {elapsed:.2?}"))
}

fn criterion_10() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_f0e5);
    let oracle = Oracle::default();
    for trial in 0..50 {
        let sizes = loop {
            let e = rng.gen_range(2..=5usize);
            let sizes: Vec<usize> = (0..e).map(|_| rng.gen_range(2..=6usize)).collect();
            if sizes.iter().sum::<usize>() + 1 - e <= 12 {
                break sizes;
            }
        };
        let k = rng.gen_range(0..=*sizes.iter().max().unwrap());
        let a = explicit_schedule(&sizes, &mut rng);
        let b = loop {
            let b = explicit_schedule(&sizes, &mut rng);
            if b != a {
                break b;
            }
        };
        let ca = build_fat_forest(&FatForestSpec::new(sizes.clone(), a.clone())).unwrap().skeleton(k);
        let cb = build_fat_forest(&FatForestSpec::new(sizes.clone(), b.clone())).unwrap().skeleton(k);
        let label = || format!("trial {trial}: sizes {sizes:?} k={k} schedules {a:?} / {b:?}");
        check(ca.f_vector() == cb.f_vector(), || format!("{}: f-vectors differ", label()))?;
        let ha = numerator_from_fvector(&ca.f_vector(), ca.n_vertices()).unwrap();
        let hb = numerator_from_fvector(&cb.f_vector(), cb.n_vertices()).unwrap();
        check(ha == hb, || format!("{}: numerators differ", label()))?;
        check(oracle.hochster_betti(&ca).unwrap() == oracle.hochster_betti(&cb).unwrap(), || {
            format!("{}: Betti tables differ", label())
        })?;
    }
    Ok("50 random specs, two schedules each: f-vectors, numerators and Betti tables identical".into())
}

fn main() -> ExitCode {
    let cases = corpus();
    let criteria: Vec<Criterion> = vec![
        ("golden k=2", Box::new(criterion_1)),
        ("golden k=3", Box::new(criterion_2)),
        ("k=1 resolution", Box::new(criterion_3)),
        ("invariants", Box::new(criterion_4)),
        ("suite A: three-way Betti equality", Box::new(|| criterion_5(&cases))),
        ("suite B: structure theorems", Box::new(|| criterion_6(&cases))),
        ("suite C: Hilbert consistency", Box::new(|| criterion_7(&cases))),
        ("CM classification", Box::new(|| criterion_8(&cases))),
        ("identities", Box::new(criterion_9)),
        ("gluing invariance", Box::new(criterion_10)),
    ];
    let mut failures = 0;
    for (idx, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail}", idx + 1),
            Err(reason) => {
                failures += 1;
                println!("FAIL criterion {} ({name}): {reason}", idx + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

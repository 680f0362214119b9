//! Acceptance campaign: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the summary is always printed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use mixvol::apps::newton::{detect_stretched_bk, newton_number};
use mixvol::apps::off::{voff, ConeSpec, Route};
use mixvol::apps::toric::{orbit_multiplicity, toric_report};
use mixvol::lattice::IntMatrix;
use mixvol::lemma::verify_all_sutures;
use mixvol::mixed::{khovanskii_mv, mixed_volume, mv_zero_witness, sum_dim};
use mixvol::polytope::{convex_hull, lattice_volume, minkowski_sum, normalized_volume, PointSet};
use mixvol::random::{
    random_bk, random_convenient, random_disjoint_face_family, random_lift, random_off_family, random_points,
    random_subset_family,
};
use mixvol::semi::{c_coefficient, is_interlaced, restricted_mixed_volume, suture_system, DaughterFamily, SutureTable};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Off-coordinate families of random mothers in {0..3}^n: 80 + 80 + 60.
fn main_corpus() -> Vec<DaughterFamily> {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    let mut out = Vec::new();
    for (n, count, lo, hi) in [(2, 80, 4, 7), (3, 80, 5, 8), (4, 60, 6, 9)] {
        for _ in 0..count {
            let pts = rng.gen_range(lo..=hi);
            out.push(random_off_family(&mut rng, n, pts, 3));
        }
    }
    out
}

fn daughter_sets(fam: &DaughterFamily) -> Vec<PointSet> {
    (0..fam.daughters().len()).map(|i| fam.daughter_set(i)).collect()
}

fn criterion_1_and_2() -> (Outcome, Outcome) {
    let start = Instant::now();
    let corpus = main_corpus();
    let mut tables = Vec::new();
    for (k, fam) in corpus.iter().enumerate() {
        let table = match suture_system(fam) {
            Ok(t) => t,
            Err(e) => return (Err(format!("family {k}: {e}")), Err("corpus failed".into())),
        };
        let oracle = mixed_volume(&daughter_sets(fam)).unwrap();
        if *table.mixed_volume() != oracle {
            return (
                Err(format!("family {k}: formula {} vs oracle {oracle}", table.mixed_volume())),
                Err("corpus failed".into()),
            );
        }
        tables.push(table);
    }
    let elapsed1 = start.elapsed();
    let c1 = if elapsed1 < Duration::from_secs(300) {
        Ok(format!("{} families (n = 2, 3, 4), formula = oracle, {:.1}s", corpus.len(), elapsed1.as_secs_f64()))
    } else {
        Err(format!("all values agree but took {:.1}s (limit 300s)", elapsed1.as_secs_f64()))
    };

    let mut compared = 0;
    for (k, (fam, table)) in corpus.iter().zip(&tables).enumerate() {
        for (s, face) in table.sutures.iter().enumerate() {
            let direct = restricted_mixed_volume(fam, face).unwrap();
            if direct != table.vdag[s] {
                return (c1, Err(format!("family {k}, suture {:?}: {} vs {direct}", face.points, table.vdag[s])));
            }
            compared += 1;
        }
    }
    (c1, Ok(format!("{compared} suture entries on {} families", corpus.len())))
}

fn criterion_3() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    let (mut yes, mut no) = (0, 0);
    for k in 0..240 {
        let n = if k % 2 == 0 { 2 } else { 3 };
        let count = rng.gen_range(n + 1..=n + 4);
        let (mother, ds) = random_subset_family(&mut rng, n, count, 3);
        let sets: Vec<PointSet> = ds.iter().map(|d| mother.subset(d)).collect();
        let equal = mixed_volume(&sets).unwrap() == lattice_volume(&mother).unwrap();
        let inter = is_interlaced(&ds, &mother).unwrap();
        ensure!(equal == inter, "family {k}: interlaced {inter} but MV = Vol is {equal}");
        if inter {
            yes += 1
        } else {
            no += 1
        }
    }
    ensure!(yes > 0 && no > 0, "corpus is one-sided ({yes} interlaced, {no} not)");
    Ok(format!("240 families, {yes} interlaced, {no} not"))
}

fn criterion_4() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    let mut nonzero = 0;
    for k in 0..120 {
        let n = 1 + k % 3;
        let lifts: Vec<_> = (0..n)
            .map(|_| {
                let count = rng.gen_range(1..=4);
                let base = random_points(&mut rng, n, count, 3);
                random_lift(&mut rng, base, 4)
            })
            .collect();
        let bases: Vec<PointSet> = lifts.iter().map(|l| l.base.clone()).collect();
        let direct = mixed_volume(&bases).unwrap();
        let k_mv = khovanskii_mv(&lifts).unwrap().value;
        ensure!(direct == k_mv, "configuration {k}: subdivision {k_mv} vs oracle {direct}");
        nonzero += usize::from(!direct.is_zero());
    }
    Ok(format!("120 lifted configurations in dims 1-3, {nonzero} with MV > 0"))
}

fn criterion_5() -> Outcome {
    let mother = PointSet::from_i64(&[vec![0, 0], vec![1, 0], vec![2, 0], vec![0, 1], vec![0, 2]]);
    let fam = DaughterFamily::new(mother, vec![vec![1, 2], vec![3, 4]]).map_err(|e| e.to_string())?;
    let t = suture_system(&fam).map_err(|e| e.to_string())?;
    ensure!(t.sutures.len() == 4, "{} sutures", t.sutures.len());
    ensure!(t.v == ints(&[1, 2, 2, 4]), "v = {:?}", t.v);
    ensure!(t.vdag == ints(&[1, 1, 1, 1]), "vdag = {:?}", t.vdag);
    ensure!(t.mixed_volume().is_one(), "MV = {}", t.mixed_volume());
    Ok("4 sutures, v = (1,2,2,4), vdag = (1,1,1,1), MV = 1".into())
}

fn fig6() -> PointSet {
    let mut rows = Vec::new();
    for base in [[0, 0, 0], [2, 0, 0], [0, 2, 0], [1, 1, 0], [0, 0, 1]] {
        for t in [0, 1] {
            rows.push(vec![base[0], base[1], base[2], t]);
        }
    }
    PointSet::from_i64(&rows)
}

fn criterion_6() -> Outcome {
    let p = fig6();
    ensure!(p.len() == 10, "{} points", p.len());
    let r = voff(&p, &ConeSpec::orthant(4), Route::Check).map_err(|e| e.to_string())?;
    ensure!(r.value.is_zero(), "Voff = {}", r.value);
    ensure!(r.zero_witness == Some(vec![0, 1, 2]), "witness {:?}", r.zero_witness);
    ensure!(detect_stretched_bk(&p).is_none(), "reported as stretched B_k");
    Ok("Voff = 0, zero witness {1,2,3}, not a stretched B_k-set".into())
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    let mut ks = [0usize; 5];
    for k in 0..60 {
        let n = 2 + k % 3;
        let (p, kk) = random_bk(&mut rng, n, 2);
        ks[kk] += 1;
        let nu = newton_number(&p).map_err(|e| format!("B_k set {k}: {e}"))?;
        let off = voff(&p, &ConeSpec::orthant(n), Route::Check).map_err(|e| format!("B_k set {k}: {e}"))?;
        ensure!(nu.is_zero() && off.value.is_zero(), "B_{kk} set {k} in dim {n}: nu = {nu}, Voff = {}", off.value);
    }
    let mut non_bk = 0;
    let mut positive = 0;
    let mut attempts = 0;
    while non_bk < 60 {
        attempts += 1;
        ensure!(attempts < 1000, "could not generate enough non-B_k sets");
        let n = 2 + attempts % 2;
        let p = random_convenient(&mut rng, n, 2, 3);
        if detect_stretched_bk(&p).is_some() {
            continue;
        }
        let nu = newton_number(&p).map_err(|e| e.to_string())?;
        let off = voff(&p, &ConeSpec::orthant(n), Route::Check).map_err(|e| e.to_string())?;
        ensure!(nu == off.value, "non-B_k set {non_bk}: nu = {nu}, Voff = {}", off.value);
        non_bk += 1;
        positive += usize::from(!nu.is_zero());
    }
    Ok(format!(
        "60 B_k sets (k = 1..4: {:?}) with nu = Voff = 0; 60 non-B_k sets with nu = Voff ({positive} positive)",
        &ks[1..]
    ))
}

fn criterion_8() -> Outcome {
    let cusp = PointSet::from_i64(&[vec![0], vec![2], vec![3]]);
    let m = orbit_multiplicity(&cusp, &[0]).map_err(|e| e.to_string())?;
    ensure!(m == BigInt::from(2), "cusp multiplicity {m}");
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    let (mut smooth, mut singular, mut done) = (0, 0, 0);
    while done < 120 {
        let n = 1 + done % 3;
        let count = rng.gen_range(n + 1..=n + 4);
        let p = random_points(&mut rng, n, count, 3);
        if p.affine_dim() != Some(n) {
            continue;
        }
        let r = toric_report(&p).map_err(|e| format!("set {done}: {e}"))?;
        ensure!(r.multiplicities.iter().all(|(_, m)| *m >= BigInt::one()), "set {done}: nonpositive multiplicity");
        ensure!(r.smooth == r.unit_coefficients, "set {done}: smooth {} vs unit coefficients {}", r.smooth, r.unit_coefficients);
        if r.smooth {
            smooth += 1
        } else {
            singular += 1
        }
        done += 1;
    }
    ensure!(smooth > 0 && singular > 0, "corpus is one-sided");
    Ok(format!("cusp gives 2; 120 random sets, {smooth} smooth, {singular} singular"))
}

fn criterion_9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0009);
    let mut sutures = 0;
    let mut covectors = 0;
    for k in 0..55 {
        let count = rng.gen_range(5..=7);
        let fam = if k % 4 == 3 {
            random_disjoint_face_family(&mut rng, 3, count, 2)
        } else {
            random_off_family(&mut rng, 3, count, 3)
        };
        for r in verify_all_sutures(&fam).map_err(|e| format!("instance {k}: {e}"))? {
            ensure!(r.holds(), "instance {k}, suture {:?}: {:?}", r.suture.points, r);
            sutures += 1;
            covectors += r.checks.len();
        }
    }
    Ok(format!("55 instances in dim 3, {sutures} sutures, {covectors} covectors"))
}

fn criterion_10() -> Outcome {
    let jobs = concat!(env!("CARGO_MANIFEST_DIR"), "/jobs");
    let cases = [
        ("mldeg", "ml-line.job", "1"),
        ("mldeg", "ml-conic.job", "4"),
        ("mldeg", "ml-vertical-line.job", "0"),
        ("eddeg", "ed-line.job", "1"),
        ("eddeg", "ed-conic.job", "4"),
        ("pdeg", "pdeg-linear.job", "0"),
        ("pdeg", "pdeg-conic.job", "1"),
        ("pdeg", "pdeg-cubic.job", "4"),
    ];
    for (cmd, file, want) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_mvol"))
            .args([cmd, &format!("{jobs}/{file}"), "--check", "--json"])
            .output()
            .map_err(|e| e.to_string())?;
        ensure!(out.status.code() == Some(0), "{cmd} {file}: exit {:?}", out.status.code());
        let doc: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        ensure!(doc["result"] == want, "{cmd} {file}: {}", doc["result"]);
        ensure!(doc["oracle"] == want, "{cmd} {file}: oracle {}", doc["oracle"]);
    }
    Ok("ML 1/4/0, ED 1/4, polar 0/1/4, all with --check".into())
}

fn check_table(t: &SutureTable) -> Result<(), String> {
    let n = t.sutures.len();
    for i in 0..n {
        ensure!(t.c.get(i, i).is_one(), "C diagonal entry {i} is {}", t.c.get(i, i));
        for j in i + 1..n {
            ensure!(t.c.get(i, j).is_zero(), "C not triangular at ({i},{j})");
        }
    }
    ensure!(t.c.determinant().is_one(), "det C = {}", t.c.determinant());
    ensure!(t.c.mul(&t.dmat) == IntMatrix::identity(n), "D is not the integer inverse of C");
    Ok(())
}

fn mv_properties(rng: &mut StdRng) -> Result<usize, String> {
    let mut runs = 0;
    for k in 0..60 {
        let n = 2 + k % 2;
        let sets: Vec<PointSet> = (0..n).map(|_| { let c = rng.gen_range(1..=4); random_points(rng, n, c, 2) }).collect();
        let mv = mixed_volume(&sets).unwrap();

        let mut rev = sets.clone();
        rev.reverse();
        ensure!(mixed_volume(&rev).unwrap() == mv, "symmetry fails on {sets:?}");

        let c = rng.gen_range(1..=3);
        let extra = random_points(rng, n, c, 2);
        let mut summed = sets.clone();
        summed[0] = minkowski_sum(&sets[0], &extra).unwrap();
        let mut other = sets.clone();
        other[0] = extra.clone();
        let lhs = mixed_volume(&summed).unwrap();
        let rhs = &mv + mixed_volume(&other).unwrap();
        ensure!(lhs == rhs, "multilinearity: {lhs} vs {rhs}");

        let diag = vec![sets[0].clone(); n];
        ensure!(
            mixed_volume(&diag).unwrap() == normalized_volume(&sets[0], n).unwrap(),
            "diagonal fails on {:?}",
            sets[0]
        );

        let mut bigger = sets.clone();
        bigger[1] = PointSet::new(n, sets[1].iter().chain(extra.iter()).cloned().collect()).unwrap();
        ensure!(mixed_volume(&bigger).unwrap() >= mv, "monotonicity fails");

        let witness = mv_zero_witness(&sets).unwrap();
        ensure!(witness.is_some() == mv.is_zero(), "zero criterion: MV {mv}, witness {witness:?}");
        if let Some(w) = witness {
            let chosen: Vec<&PointSet> = w.iter().map(|&i| &sets[i]).collect();
            ensure!(sum_dim(&chosen) < w.len(), "witness {w:?} is not deficient");
        }
        runs += 1;
    }
    Ok(runs)
}

/// `(-1)^(dim F - dim S)` for coordinate-face sutures of convenient sets
/// containing the standard simplex, after checking the remaining hypotheses.
fn sign_pattern(rng: &mut StdRng) -> Result<usize, String> {
    let mut pairs = 0;
    for k in 0..30 {
        let n = 2 + k % 2;
        let p = random_convenient(rng, n, 2, 3);
        let fam = mixvol::apps::off::off_coordinate_family(&p, &ConeSpec::orthant(n))
            .map_err(|e| e.to_string())?
            .family;
        let t = suture_system(&fam).map_err(|e| e.to_string())?;
        let zero = |i: usize, face: &[usize]| face.iter().all(|&j| p.point(j)[i].is_zero());
        let coordinate: Vec<usize> = (0..t.sutures.len())
            .filter(|&s| {
                let pts = &t.sutures[s].points;
                let vanishing = (0..n).filter(|&i| zero(i, pts)).count();
                t.sutures[s].dim == n - vanishing && pts.contains(&0)
            })
            .collect();
        for &s in &coordinate {
            let face_s = &t.sutures[s];
            for f in 0..t.sutures.len() {
                let face_f = &t.sutures[f];
                if f == s || !face_s.points.iter().all(|i| face_f.points.contains(i)) {
                    continue;
                }
                let c = c_coefficient(&fam.face_set(face_f), &fam.face_set(face_s)).map_err(|e| e.to_string())?;
                ensure!(c.is_one(), "hypothesis c = 1 fails for {:?} in {:?}", face_s.points, face_f.points);
                let sign = if (face_f.dim - face_s.dim) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                ensure!(*t.d_entry(s, f) == sign, "D entry ({:?}, {:?}) = {}", face_s.points, face_f.points, t.d_entry(s, f));
                pairs += 1;
            }
        }
        // Every face containing the origin is a coordinate face, hence a suture.
        let hull = convex_hull(&p).map_err(|e| e.to_string())?;
        for face in hull.faces().iter().filter(|f| f.points.contains(&0)) {
            ensure!(t.index_of(&face.points).is_some(), "face {:?} through the origin is not a suture", face.points);
        }
    }
    Ok(pairs)
}

fn criterion_11() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0011);
    let runs = mv_properties(&mut rng)?;
    let mut tables = 0;
    for k in 0..60 {
        let n = 2 + k % 2;
        let count = rng.gen_range(n + 2..=n + 5);
        let fam = if k % 2 == 0 {
            random_off_family(&mut rng, n, count, 3)
        } else {
            random_disjoint_face_family(&mut rng, n, count, 3)
        };
        check_table(&suture_system(&fam).map_err(|e| e.to_string())?).map_err(|e| format!("table {k}: {e}"))?;
        tables += 1;
    }
    let pairs = sign_pattern(&mut rng)?;
    Ok(format!("{runs} MV property rounds, {tables} suture tables triangular with det 1, {pairs} sign-pattern pairs"))
}

fn panic_message(e: Box<dyn std::any::Any + Send>) -> String {
    let msg = e
        .downcast_ref::<String>()
        .cloned()
        .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_default();
    format!("panicked: {msg}")
}

fn guarded(f: impl FnOnce() -> Outcome) -> Outcome {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| Err(panic_message(e)))
}

fn main() -> ExitCode {
    let names = [
        "suture formula equals the oracle on off-coordinate families",
        "componentwise: every vdag(S) equals the mixed volume inside aff(S)",
        "interlaced iff MV equals the volume of the hull",
        "subdivision formula equals the oracle on random lifts",
        "worked example W",
        "ten-point fixture: Voff = 0, witness {1,2,3}, not B_k",
        "B_k sets are negligible; nu = Voff on non-B_k sets",
        "toric multiplicities and smoothness",
        "local lemma on random three-dimensional families",
        "degree fixtures through the CLI with --check",
        "property suites",
    ];
    let start = Instant::now();
    let mut results: Vec<Outcome> = Vec::new();
    std::thread::scope(|scope| {
        let first = scope.spawn(|| {
            catch_unwind(criterion_1_and_2).unwrap_or_else(|e| {
                let msg = panic_message(e);
                (Err(msg.clone()), Err(msg))
            })
        });
        let rest: Vec<fn() -> Outcome> = vec![
            criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
            criterion_11,
        ];
        let handles: Vec<_> = rest.into_iter().map(|f| scope.spawn(move || guarded(f))).collect();
        let (one, two) = first.join().expect("caught");
        results.push(one);
        results.push(two);
        results.extend(handles.into_iter().map(|h| h.join().expect("guarded")));
    });

    let mut failed = 0;
    for (i, (name, r)) in names.iter().zip(&results).enumerate() {
        match r {
            Ok(detail) => println!("PASS criterion {:>2}: {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed in {:.1}s", names.len() - failed, start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

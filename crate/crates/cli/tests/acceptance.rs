//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//!
//! Golden files live in `tests/golden/`; run with `UPDATE_GOLDEN=1` to rewrite them.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use horn_core::complexity::{delta1, line_support_bound, poly_bound, sum_bound, zonotope_bound};
use horn_core::exact::to_i64;
use horn_core::fixtures::{self, Fixture};
use horn_core::puiseux::binomial_power;
use horn_core::solver::{
    candidate_supports, full_polynomial_basis, independent_subset, integer_box, parallelogram_solution,
    solve_on_support, verify_solution, PairStatus,
};
use horn_core::{Error, ExponentPoint, HornSystem, PuiseuxPoly, Rational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn fixture(name: &str) -> Fixture {
    fixtures::builtin(name).unwrap()
}

fn within(start: Instant, limit: Duration, what: &str) -> Check {
    let took = start.elapsed();
    ensure!(took < limit, "{what} took {took:?}, limit {limit:?}");
    Ok(())
}

fn ints(v: &[Rational]) -> Vec<i64> {
    v.iter().map(|r| to_i64(r).unwrap()).collect()
}

fn all_verify(sys: &HornSystem, polys: &[PuiseuxPoly], what: &str) -> Check {
    for (i, p) in polys.iter().enumerate() {
        ensure!(verify_solution(sys, p).is_zero(), "{what} entry {i} leaves a nonzero residual");
    }
    Ok(())
}

fn rank_regression() -> Check {
    let mut expected =
        vec![("hexagon", 3), ("decagon", 34), ("octagon", 31), ("pentagon", 4), ("triangle", 6)];
    let names: Vec<String> = (2..=6).map(|k| format!("trapezoid-{k}")).collect();
    expected.extend(names.iter().zip(2..=6).map(|(n, k)| (n.as_str(), k)));
    for (name, rank) in expected {
        let sys = fixture(name).system;
        let start = Instant::now();
        let got = sys.holonomic_rank().rank;
        within(start, Duration::from_secs(1), name)?;
        ensure!(got == rank, "{name}: rank {got}, expected {rank}");
    }
    Ok(())
}

fn pairing() -> Check {
    let oct = fixture("octagon").system.zonotope_pairing().unwrap();
    ensure!(ints(&oct.c_hat_sorted()) == [1, 2, 2, 3], "octagon c_hat {:?}", oct.c_hat_sorted());
    let hex = fixture("hexagon").system.zonotope_pairing().unwrap();
    let set: BTreeSet<i64> = ints(&hex.c_hat).into_iter().collect();
    ensure!(set == BTreeSet::from([1, 9, 10]), "hexagon c_hat {set:?}");
    let pent = fixture("pentagon").system.zonotope_pairing();
    ensure!(matches!(pent, Err(Error::NotZonotope)), "pentagon pairing: {pent:?}");
    Ok(())
}

fn zonotope_bounds() -> Check {
    for (name, raw, refined) in [("octagon", 6, 6), ("decagon", 7, 6), ("hexagon", 7, 6)] {
        let b = zonotope_bound(&fixture(name).system.zonotope_pairing().unwrap()).unwrap();
        ensure!(
            (b.raw.value, b.refined.value) == (raw, refined),
            "{name}: raw {} refined {}, expected {raw} {refined}",
            b.raw.value,
            b.refined.value
        );
    }
    let b = zonotope_bound(&fixture("parallelogram").system.zonotope_pairing().unwrap()).unwrap();
    ensure!(b.raw.value == 2, "k = 2: raw {}", b.raw.value);
    Ok(())
}

fn sum_bounds() -> Check {
    let mixed = |ones: usize, twos: usize| [vec![1; ones], vec![2; twos]].concat();
    let cases = [(vec![3, 4, 4], 6), (vec![1, 1, 2, 2], 4), (mixed(28, 3), 7), (mixed(14, 20), 7)];
    for (bounds, want) in cases {
        let got = sum_bound(&bounds).unwrap().value;
        ensure!(got == want, "sum_bound of {} values: {got}, expected {want}", bounds.len());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..1000 {
        let len = rng.gen_range(1..=40);
        let mut v: Vec<u64> = (0..len).map(|_| rng.gen_range(0..=12)).collect();
        let before = sum_bound(&v).unwrap().value;
        v.shuffle(&mut rng);
        let after = sum_bound(&v).unwrap().value;
        ensure!(before == after, "permutation changed {before} to {after} on {v:?}");
    }
    Ok(())
}

/// Rows `±(a, b)` with `α` and `ĉ` drawn per pair, Â rows pairwise independent.
fn random_zonotope(rng: &mut ChaCha8Rng, k: usize, max_c: i64) -> HornSystem {
    loop {
        let mut hat: Vec<[i64; 2]> = Vec::new();
        while hat.len() < k {
            let r = [rng.gen_range(-2..=2), rng.gen_range(-2..=2)];
            if r != [0, 0] && hat.iter().all(|h| h[0] * r[1] - h[1] * r[0] != 0) {
                hat.push(r);
            }
        }
        let mut rows = Vec::new();
        let mut params = Vec::new();
        for r in &hat {
            let alpha = rng.gen_range(-3..=3);
            let c = rng.gen_range(1..=max_c);
            rows.push(*r);
            params.push(alpha);
            rows.push([-r[0], -r[1]]);
            params.push(-alpha - c);
        }
        if let Ok(sys) = HornSystem::from_ints(&rows, &params) {
            return sys;
        }
    }
}

fn candidate_support_shapes() -> Check {
    let hex = fixture("hexagon").system;
    let report = candidate_supports(&hex).unwrap();
    let supports: Vec<_> = report.admissible().map(|e| e.support.clone()).collect();
    ensure!(supports.len() == 3, "{} components", supports.len());
    ensure!(supports.contains(&integer_box(0, 10, 0, 9)), "no {{0..10}}x{{0..9}} block");
    let strip = |size: usize, a: (i64, i64), b: (i64, i64)| {
        supports.iter().any(|s| {
            let sums: BTreeSet<_> = s.iter().map(|p| p.s.clone() + p.t.clone()).collect();
            s.len() == size
                && sums.len() == 2
                && s.contains(&ExponentPoint::ints(a.0, a.1))
                && s.contains(&ExponentPoint::ints(b.0, b.1))
        })
    };
    ensure!(strip(22, (10, 13), (0, 23)), "missing the 22-point strip through (10,13) and (0,23)");
    ensure!(strip(20, (13, 9), (23, 0)), "missing the 20-point strip through (13,9) and (23,0)");
    ensure!(report.union.len() == 152, "union has {} points", report.union.len());

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let sys = random_zonotope(&mut rng, 2, 9);
        let p = sys.zonotope_pairing().unwrap();
        let report = candidate_supports(&sys).unwrap();
        let entry = &report.entries[0];
        ensure!(entry.status == PairStatus::Admissible, "{:?}: {:?}", sys.rows(), entry.status);
        let want: i64 = ints(&p.c_hat).iter().map(|c| c + 1).product();
        ensure!(
            entry.support.len() as i64 == want,
            "{:?}: {} points, expected {want}",
            sys.rows(),
            entry.support.len()
        );
    }
    Ok(())
}

fn solver_certification() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let k = rng.gen_range(2..=3);
        let sys = random_zonotope(&mut rng, k, 3);
        let basis = full_polynomial_basis(&sys).map_err(|e| format!("{:?}: {e}", sys.rows()))?;
        ensure!(!basis.is_empty(), "{:?}: empty basis", sys.rows());
        all_verify(&sys, &basis.elements, "basis")?;
        if k == 2 {
            let f = parallelogram_solution(&sys).unwrap();
            let ns = solve_on_support(&sys, &f.support());
            let mut all = ns.elements.clone();
            all.push(f);
            ensure!(
                independent_subset(all).len() == ns.len(),
                "{:?}: closed form outside the nullspace",
                sys.rows()
            );
        }
    }
    within(start, Duration::from_secs(10), "suite")
}

fn parallelogram_fixture() -> Check {
    let sys = fixture("parallelogram").system;
    let basis = full_polynomial_basis(&sys).unwrap();
    ensure!(basis.len() == 1, "basis has {} elements", basis.len());
    let f = &basis.elements[0];
    ensure!(f.len() == 90, "{} terms", f.len());
    ensure!(basis.all_certified(), "uncertified");
    ensure!(delta1(f).is_zero(), "Δ1 does not vanish");
    let x1 = binomial_power(&ExponentPoint::ints(1, 0), 9, &ExponentPoint::ints(1, 0));
    let y1 = binomial_power(&ExponentPoint::ints(0, 1), 8, &ExponentPoint::ints(0, 1));
    let closed = x1.mul(&y1);
    ensure!(independent_subset(vec![f.clone(), closed]).len() == 1, "not proportional to x(x+1)^9 y(y+1)^8");
    Ok(())
}

fn pentagon_fixture() -> Check {
    let fx = fixture("pentagon");
    let [s0, s1, t0, t1] = fx.expected.solve_box.unwrap();
    let basis = solve_on_support(&fx.system, &integer_box(s0, s1, t0, t1));
    ensure!(basis.len() == 4 && basis.all_certified(), "{} elements", basis.len());
    ensure!(fx.printed_basis.len() == 4, "{} listed polynomials", fx.printed_basis.len());
    all_verify(&fx.system, &fx.printed_basis, "listed")?;
    ensure!(fx.printed_basis[0] == PuiseuxPoly::xy(2, 2), "first entry is not x^2 y^2");
    let second = PuiseuxPoly::from_int_terms(&[(0, 0, 1), (1, 0, -4), (0, 1, -4), (1, 1, 12)]);
    ensure!(fx.printed_basis[1] == second, "second entry is not 1 - 4x - 4y + 12xy");
    let cl1: Vec<bool> = fx.printed_basis.iter().map(|p| delta1(p).is_zero()).collect();
    ensure!(cl1 == [true, true, false, false], "Δ1 pattern {cl1:?}");
    let bounds: Vec<u64> = fx.printed_basis.iter().map(|p| if delta1(p).is_zero() { 1 } else { 2 }).collect();
    let total = sum_bound(&bounds).unwrap().value;
    ensure!(total == 4, "sum bound {total}");
    Ok(())
}

fn decagon_fixture() -> Check {
    let fx = fixture("decagon");
    let basis = full_polynomial_basis(&fx.system).unwrap();
    ensure!(basis.len() == 34 && basis.all_certified(), "{} elements", basis.len());
    ensure!(fx.printed_basis.len() == 34, "{} listed polynomials", fx.printed_basis.len());
    all_verify(&fx.system, &fx.printed_basis, "listed")?;
    let monomials = fx.printed_basis.iter().filter(|p| p.len() == 1).count();
    ensure!(monomials == 4, "{monomials} monomials listed");
    let zero: Vec<usize> = (0..34).filter(|&i| delta1(&fx.printed_basis[i]).is_zero()).collect();
    ensure!(zero.len() == 14, "{} entries with Δ1 = 0", zero.len());
    ensure!(Some(&zero) == fx.expected.printed_cl1.as_ref(), "Δ1 = 0 at {zero:?}");
    Ok(())
}

fn triangle_fixture() -> Check {
    let fx = fixture("triangle");
    let laurent = fx.printed_basis.iter().filter(|p| p.len() == 1).count();
    ensure!(laurent >= 4, "{laurent} Laurent monomials listed");
    all_verify(&fx.system, &fx.printed_basis, "listed")?;
    for p in &fx.printed_basis_y_sign_flipped {
        let twisted = fixtures::twist_y(p).unwrap();
        ensure!(verify_solution(&fx.system, &twisted).is_zero(), "twisted entry leaves a residual");
    }
    let [s0, s1, t0, t1] = fx.expected.solve_box.unwrap();
    let basis = solve_on_support(&fx.system, &integer_box(s0, s1, t0, t1));
    ensure!(basis.len() == 6 && basis.all_certified(), "{} elements on the box", basis.len());
    Ok(())
}

fn random_univariate(rng: &mut ChaCha8Rng, var: [i64; 2]) -> PuiseuxPoly {
    let deg = rng.gen_range(0..=4);
    let terms: Vec<(i64, i64, i64)> =
        (0..=deg).map(|i| (var[0] * i, var[1] * i, rng.gen_range(-5..=5))).collect();
    PuiseuxPoly::from_int_terms(&terms)
}

fn compose(g: &PuiseuxPoly, u: &PuiseuxPoly) -> PuiseuxPoly {
    let mut out = PuiseuxPoly::zero();
    for (p, c) in g.terms() {
        let k = to_i64(&p.s).unwrap() as u32;
        out = out.add(&u.pow(k).scale(c));
    }
    out
}

fn delta1_properties() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let a = random_univariate(&mut rng, [1, 0]);
        let b = random_univariate(&mut rng, [0, 1]);
        let g = random_univariate(&mut rng, [1, 0]);
        let f = compose(&g, &a.add(&b));
        ensure!(delta1(&f).is_zero(), "Δ1(g(a(x)+b(y))) ≠ 0 for g = {g}, a = {a}, b = {b}");
        for f in [&a, &b] {
            ensure!(delta1(f).is_zero(), "Δ1({f}) ≠ 0");
        }
    }
    within(start, Duration::from_secs(5), "suite")
}

fn line_estimates() -> Check {
    let xy = |n: u32| binomial_power(&ExponentPoint::ints(-1, 1), n, &ExponentPoint::ints(n as i64, 0));
    let cases = [
        ("(x+y)^2+(x+y)^5", xy(2).add(&xy(5)), 2),
        ("(1+x)(1+y)", PuiseuxPoly::from_int_terms(&[(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]), 2),
        ("four slices", four_slices(), 4),
    ];
    for (name, p, want) in cases {
        let got = poly_bound(&p).unwrap().value;
        ensure!(got == want, "{name}: {got}, expected {want}");
    }
    let hex = fixture("hexagon").system;
    let block = solve_on_support(&hex, &integer_box(0, 10, 0, 9));
    ensure!(block.len() == 1 && block.elements[0].len() == 110, "block solution");
    let got = line_support_bound(&block.elements[0]).unwrap().value;
    ensure!(got == 5, "block line bound {got}");
    Ok(())
}

fn four_slices() -> PuiseuxPoly {
    let primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];
    let terms: Vec<_> =
        (0..4).flat_map(|i| (0..4).map(move |j| (i + j, i - j + 3, primes[(4 * i + j) as usize]))).collect();
    PuiseuxPoly::from_int_terms(&terms)
}

const GOLDEN: &[(&str, &[&str])] = &[
    ("fixtures.txt", &["fixtures"]),
    ("rank-hexagon.txt", &["rank", "@hexagon"]),
    ("rank-decagon.json", &["--format", "json", "rank", "@decagon"]),
    ("rank-trapezoid-4.txt", &["rank", "@trapezoid-4"]),
    ("operators-hexagon.txt", &["operators", "@hexagon"]),
    ("operators-triangle.json", &["--format", "json", "operators", "@triangle"]),
    ("polygon-hexagon.txt", &["polygon", "@hexagon"]),
    ("polygon-trapezoid-3.json", &["--format", "json", "polygon", "@trapezoid-3"]),
    ("pairing-octagon.txt", &["pairing", "@octagon"]),
    ("pairing-decagon.json", &["--format", "json", "pairing", "@decagon"]),
    ("supports-hexagon.txt", &["supports", "@hexagon"]),
    ("supports-parallelogram.json", &["--format", "json", "supports", "@parallelogram"]),
    ("solve-parallelogram.json", &["--format", "json", "solve", "@parallelogram"]),
    ("solve-hexagon.txt", &["solve", "@hexagon"]),
    ("solve-pentagon.txt", &["solve", "@pentagon", "--box", "0", "5", "0", "5"]),
    ("solve-triangle.json", &["--format", "json", "solve", "@triangle", "--box", "-5", "9", "-5", "5"]),
    ("verify-pentagon.txt", &["verify", "@pentagon"]),
    ("verify-decagon.txt", &["verify", "@decagon"]),
    ("estimate-octagon.txt", &["estimate", "@octagon"]),
    ("estimate-decagon.json", &["--format", "json", "estimate", "@decagon"]),
    ("sum-estimate.txt", &["sum-estimate", "3", "4", "4"]),
    ("poly-estimate-four-slices.txt", &["poly-estimate", "tests/data/four_slices.json"]),
    (
        "poly-estimate-binomial-sum.json",
        &["--format", "json", "poly-estimate", "tests/data/binomial_sum.json"],
    ),
    ("delta1-pentagon.txt", &["delta1", "tests/data/pentagon_cl1.json"]),
    ("plot-hexagon.svg", &["plot", "@hexagon", "--divisors"]),
    ("plot-hexagon.txt", &["plot", "@hexagon", "--ascii"]),
    ("plot-triangle.txt", &["plot", "@triangle", "--ascii", "--box", "-5", "9", "-5", "5"]),
];

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_horncalc"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(
        out.status.success(),
        "horncalc {} exited with {}: {}",
        args.join(" "),
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    Ok(out.stdout)
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn determinism() -> Check {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (file, args) in GOLDEN {
        let first = run_cli(args)?;
        let second = run_cli(args)?;
        ensure!(first == second, "{file}: two runs differ");
        let path = golden_dir().join(file);
        if update {
            std::fs::write(&path, &first).map_err(|e| e.to_string())?;
            continue;
        }
        let stored = std::fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        ensure!(stored == first, "{file}: output differs from the golden file");
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("rank regression", rank_regression),
        ("pairing", pairing),
        ("zonotope bounds", zonotope_bounds),
        ("sum bound", sum_bounds),
        ("candidate supports", candidate_support_shapes),
        ("solver certification", solver_certification),
        ("parallelogram fixture", parallelogram_fixture),
        ("pentagon fixture", pentagon_fixture),
        ("decagon fixture", decagon_fixture),
        ("triangle fixture", triangle_fixture),
        ("delta1 properties", delta1_properties),
        ("line estimates", line_estimates),
        ("golden determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("criterion {:>2} {name:<22} PASS ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name:<22} FAIL ({ms} ms): {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        println!("all 13 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failed} of 13 criteria failed");
        ExitCode::FAILURE
    }
}

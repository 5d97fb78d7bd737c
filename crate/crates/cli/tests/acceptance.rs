//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fail.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use kdyck_core::formulas::{
    early_adventure_series, early_adventure_total, last_downrun_total, simplification_check,
    telescoping_check, Fault,
};
use kdyck_core::oracle::{
    count_paths, count_paths_exhaustive, first_downrun_total_oracle, paths_from_level,
    terminal_run_total_dp, terminal_run_total_exhaustive, ENUMERATION_STEP_LIMIT,
};
use kdyck_core::series::{denominator_series_check, kernel_check, kernel_factorization_check};
use kdyck_core::slices::{generate_f, h_coeffs_by_slices};
use kdyck_core::{
    dm_count, fuss_catalan, s_polynomial, s_polynomial_recursive, ubar_fixed_point, ubar_series,
    KParameter, PathSpec, ZSeries,
};
use num_bigint::BigInt;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn k(v: u32) -> KParameter {
    KParameter::new(v).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// dm_count == slice engine == DP == enumeration ((k+1)n <= 20).
fn three_route() -> Outcome {
    let mut cells = 0;
    let mut brute_cells = 0;
    for kk in 1..=4u32 {
        let f = generate_f(k(kk), 7);
        for n in 1..=8usize {
            for j in 0..=kk as usize * n {
                let closed = dm_count(k(kk), n, j);
                let sliced = f[n - 1].coeff(n, j).clone();
                let dp = count_paths(PathSpec::new(k(kk), n, j, true));
                ensure(closed == sliced && sliced == dp, || {
                    format!("k={kk} n={n} j={j}: formula={closed} slices={sliced} dp={dp}")
                })?;
                if (kk as usize + 1) * n <= 20 {
                    let brute = count_paths_exhaustive(PathSpec::new(k(kk), n, j, true))
                        .map_err(|e| e.to_string())?;
                    ensure(brute == dp, || format!("k={kk} n={n} j={j}: exhaustive={brute} dp={dp}"))?;
                    brute_cells += 1;
                }
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} cells, {brute_cells} also enumerated"))
}

fn kernel_identities() -> Outcome {
    for kk in 1..=5 {
        kernel_check(k(kk), 40).map_err(|e| format!("k={kk}: {e}"))?;
        ubar_series(k(kk), 40)
            .check_equal(&ubar_fixed_point(k(kk), 40), "ū")
            .map_err(|e| format!("k={kk}: {e}"))?;
    }
    for kk in 1..=4 {
        kernel_factorization_check(k(kk), 6, 20).map_err(|e| format!("k={kk}: {e}"))?;
    }
    Ok("kernel through z^40 (k<=5), factorization through z^20 u^6 (k<=4)".into())
}

fn denominators() -> Outcome {
    for kk in 1..=5 {
        for j in 0..=60 {
            let (a, b) = (s_polynomial(k(kk), j), s_polynomial_recursive(k(kk), j));
            ensure(a == b, || format!("k={kk} j={j}: {a} vs {b}"))?;
        }
        denominator_series_check(k(kk), 60).map_err(|e| format!("k={kk}: {e}"))?;
    }
    Ok("S_j closed == recursive for j<=60; Σ S_j u^j · kernel = 1 through u^60".into())
}

fn last_downrun() -> Outcome {
    for kk in 1..=4u32 {
        for m in 1..=8usize {
            let closed = last_downrun_total(k(kk), m);
            let diff = fuss_catalan(k(kk), m as i64 + 1) - fuss_catalan(k(kk), m as i64);
            let weighted: BigInt = (0..=kk as usize * m).map(|j| dm_count(k(kk), m, j) * j).sum();
            let literal = terminal_run_total_dp(k(kk), m);
            ensure(closed == diff && diff == weighted && weighted == literal, || {
                format!("k={kk} m={m}: closed={closed} fc-diff={diff} weighted={weighted} terminal-run={literal}")
            })?;
            if (kk as usize + 1) * m <= ENUMERATION_STEP_LIMIT {
                let brute = terminal_run_total_exhaustive(k(kk), m).map_err(|e| e.to_string())?;
                ensure(brute == literal, || format!("k={kk} m={m}: exhaustive={brute}"))?;
            }
        }
    }
    ensure(last_downrun_total(k(1), 2) == BigInt::from(3), || "spot (1,2)".into())?;
    ensure(last_downrun_total(k(2), 1) == BigInt::from(2), || "spot (2,1)".into())?;
    Ok("k<=4, m<=8; spots (1,2)=3 (2,1)=2".into())
}

fn early_adventure() -> Outcome {
    for kk in 1..=4u32 {
        for m in 0..=7usize {
            let (closed, oracle) = (early_adventure_total(k(kk), m), first_downrun_total_oracle(k(kk), m));
            ensure(closed == oracle, || format!("k={kk} m={m}: closed={closed} oracle={oracle}"))?;
        }
        let series = early_adventure_series(k(kk), 12);
        for m in 0..=12 {
            let closed = early_adventure_total(k(kk), m);
            ensure(series.coeffs()[m] == closed, || {
                format!("k={kk} m={m}: Σ ū^h gives {}, closed {closed}", series.coeffs()[m])
            })?;
        }
        telescoping_check(k(kk), 12).map_err(|e| format!("k={kk}: {e}"))?;
        simplification_check(k(kk), 12).map_err(|e| format!("k={kk}: {e}"))?;
    }
    ensure(early_adventure_total(k(1), 1) == BigInt::from(1), || "spot (1,1)".into())?;
    ensure(early_adventure_total(k(2), 1) == BigInt::from(3), || "spot (2,1)".into())?;
    Ok("k<=4, oracle m<=7, series m<=12; spots (1,1)=1 (2,1)=3".into())
}

fn return_to_axis() -> Outcome {
    for kk in 1..=4u32 {
        let ubar = ubar_series(k(kk), 8);
        for h in 0..=kk {
            let mut closed = &ubar.pow(h + 1) - &ubar.pow(h);
            if h == 0 {
                closed = &closed + &ZSeries::one(8);
            }
            let sliced = h_coeffs_by_slices(k(kk), h as usize, 8);
            for m in 0..=8 {
                let dp = paths_from_level(k(kk), h as usize, m);
                ensure(dp == closed.coeffs()[m] && dp == sliced.coeffs()[m], || {
                    format!(
                        "k={kk} h={h} m={m}: dp={dp} ū-powers={} slices={}",
                        closed.coeffs()[m],
                        sliced.coeffs()[m]
                    )
                })?;
            }
        }
    }
    Ok("k<=4, h<=k, m<=8".into())
}

fn row_sums_small() -> Outcome {
    for kk in 1..=4u32 {
        for n in 1..=8usize {
            let sum: BigInt = (0..=kk as usize * n).map(|j| dm_count(k(kk), n, j)).sum();
            let fc = fuss_catalan(k(kk), n as i64);
            ensure(sum == fc, || format!("k={kk} n={n}: row sum {sum} != FC {fc}"))?;
        }
    }
    Ok("k<=4, n<=8".into())
}

fn efficiency() -> Outcome {
    let t = Instant::now();
    let big = dm_count(k(3), 2000, 3000);
    let single = t.elapsed();
    ensure(single < Duration::from_secs(5), || format!("dm_count(3,2000,3000) took {single:?}"))?;
    ensure(big > BigInt::from(0), || "dm_count(3,2000,3000) is not positive".into())?;

    let t = Instant::now();
    let sum: BigInt = (0..=600).map(|j| dm_count(k(3), 200, j)).sum();
    let row = t.elapsed();
    ensure(sum == fuss_catalan(k(3), 200), || "row sum at n=200 differs from FC(200)".into())?;
    ensure(row < Duration::from_secs(60), || format!("row n=200 took {row:?}"))?;
    Ok(format!(
        "dm_count(3,2000,3000) in {single:.2?} ({} digits); row n=200 in {row:.2?}",
        big.to_string().len()
    ))
}

fn cli_contract() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_kdyck");
    let verify = |fault: Option<Fault>| {
        let mut cmd = Command::new(bin);
        cmd.args(["verify", "--k-max", "3", "--n-max", "6", "--order", "20"]);
        if let Some(f) = fault {
            cmd.args(["--inject-fault", f.name()]);
        }
        cmd.output().map_err(|e| e.to_string())
    };
    let stock = verify(None)?;
    ensure(stock.status.code() == Some(0), || {
        format!("stock verify exited {:?}:\n{}", stock.status.code(), String::from_utf8_lossy(&stock.stdout))
    })?;
    let mut caught = Vec::new();
    for fault in Fault::ALL {
        let out = verify(Some(fault))?;
        let stdout = String::from_utf8_lossy(&out.stdout);
        let stderr = String::from_utf8_lossy(&out.stderr);
        ensure(out.status.code() == Some(1), || format!("{fault}: exit {:?}", out.status.code()))?;
        ensure(stdout.contains("counterexample: k=") && stderr.contains("k="), || {
            format!("{fault}: no counterexample printed")
        })?;
        let first = stderr.trim().trim_start_matches("verification failed in ");
        caught.push(format!("{fault} -> {}", first.split(':').next().unwrap_or("?")));
    }
    Ok(format!("stock exit 0; {}", caught.join("; ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 three-route equivalence", three_route),
        ("2 kernel identities", kernel_identities),
        ("3 denominator coefficients", denominators),
        ("4 last down-run total", last_downrun),
        ("5 first down-run total", early_adventure),
        ("6 return-to-axis series", return_to_axis),
        ("7 row sums", row_sums_small),
        ("8 efficiency", efficiency),
        ("9 cli verify contract", cli_contract),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

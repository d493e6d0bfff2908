//! Acceptance criteria 1-13. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails. All comparisons are exact.

use std::process::{Command, ExitCode};

use hyfib::audit::{render_report, run_all, run_claim, ClaimResult, Profile, Status};
use hyfib::hybrid::{hybrid_mul, hybrid_to_matrix, Hybrid, Unit};
use hyfib::rings::{rat, Hyper, Int, Poly, Quad, Rat, Render, Ring};
use hyfib::sequences::{
    binet_check_poly, binet_eval, genfun_series_check, golden_coeffs, identity_lhs_rhs,
    IdentityKind, SeqKind, Sequences,
};
use hyfib::spinor::{
    chi, mat_apply, qhat, spinor_bar, spinor_mate, spinor_star, spinor_tilde, HSpinor,
};
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn claim(id: &str) -> ClaimResult {
    run_claim(id, None).expect("registered claim")
}

fn expect_status(id: &str, status: Status) -> Result<ClaimResult, String> {
    let r = claim(id);
    ensure(r.status == status, || {
        format!("{id} is {}, expected {status}", r.status)
    })?;
    Ok(r)
}

/// 1000 deterministic pseudo-random pairs of rational hybrid numbers.
fn random_pairs() -> Vec<(Hybrid<Rat>, Hybrid<Rat>)> {
    let coord = || (-500i64..=500, 1i64..=40).prop_map(|(n, d)| rat(n, d));
    let z = move || {
        (coord(), coord(), coord(), coord()).prop_map(|(a, b, c, d)| Hybrid::new(a, b, c, d))
    };
    let pair = (z(), z());
    let mut runner = TestRunner::deterministic();
    (0..1000)
        .map(|_| pair.new_tree(&mut runner).expect("strategy").current())
        .collect()
}

fn basis_pairs() -> Vec<(Hybrid<Rat>, Hybrid<Rat>)> {
    Unit::ALL
        .iter()
        .flat_map(|&u| {
            Unit::ALL
                .iter()
                .map(move |&v| (Hybrid::unit(u), Hybrid::unit(v)))
        })
        .collect()
}

fn c1_multiplication_table() -> Check {
    for (p, q) in basis_pairs().into_iter().chain(random_pairs()) {
        let lhs = hybrid_to_matrix(&hybrid_mul(&p, &q));
        let rhs = &hybrid_to_matrix(&p) * &hybrid_to_matrix(&q);
        ensure(lhs == rhs, || {
            format!("M(pq) != M(p)M(q) at p={}, q={}", p.render(), q.render())
        })?;
    }
    Ok(())
}

fn c2_left_regular_rule() -> Check {
    for (p, q) in basis_pairs().into_iter().chain(random_pairs()) {
        ensure(
            chi(&hybrid_mul(&p, &q)) == mat_apply(&qhat(&p), &chi(&q)),
            || {
                format!(
                    "chi(pq) != Qhat(p) chi(q) at p={}, q={}",
                    p.render(),
                    q.render()
                )
            },
        )?;
    }
    let r = expect_status("C01", Status::Fail)?;
    let cx = r.counterexample.ok_or("C01 without counterexample")?;
    ensure(cx.input == "p=1, q=1", || {
        format!("C01 counterexample at {}", cx.input)
    })
}

fn c3_seeds() -> Check {
    let seqs = Sequences::new();
    ensure(seqs.fsh(0) == HSpinor::from_ints(0, 1, 0, 2), || {
        "FSH_0".into()
    })?;
    ensure(seqs.fsh(1) == HSpinor::from_ints(1, 2, 1, 3), || {
        "FSH_1".into()
    })?;
    ensure(seqs.fsh(0).render() == "[h; 2h]", || seqs.fsh(0).render())?;
    ensure(seqs.fsh(1).render() == "[1+2h; 1+3h]", || {
        seqs.fsh(1).render()
    })
}

fn c4_cassini() -> Check {
    // independent oracle: machine integers, determinant expanded by hand
    let mut fib = vec![0i128, 1];
    while fib.len() < 120 {
        fib.push(fib[fib.len() - 1] + fib[fib.len() - 2]);
    }
    let seqs = Sequences::new();
    for n in 1..=50 {
        let f = |k: usize| fib[n + k];
        // (a + b h)(a - b h) - (c + d h)(-c + d h), whose h-parts cancel, with a = F_n, b = F_{n+2},
        // c = F_{n+1} - F_{n+2}, d = F_{n+3}
        let (a, b, c, d) = (f(0), f(2), f(1) - f(2), f(3));
        let real = (a * a - b * b) - (-c * c + d * d);
        ensure(real == -fib[2 * n + 5] + 2 * f(0) * f(0), || {
            format!("oracle at n={n}")
        })?;
        let det = seqs.cassini(n);
        ensure(det == Hyper::real(Int::from(real)), || {
            format!("det at n={n}: {}", det.render())
        })?;
    }
    ensure(seqs.cassini(1) == Hyper::from_int(-11), || "n=1".into())?;
    ensure(seqs.cassini(2) == Hyper::from_int(-32), || "n=2".into())?;
    expect_status("C05", Status::Pass).map(drop)
}

fn c5_binet() -> Check {
    let seqs = Sequences::new();
    for kind in [SeqKind::Fsh, SeqKind::Lsh] {
        let c = golden_coeffs(&seqs, kind).map_err(|e| e.to_string())?;
        for n in 0..=64 {
            let expected = seqs.term(kind, n);
            let got = binet_eval(&c, n).map_err(|e| format!("{kind} n={n}: {e}"))?;
            let expected = match expected {
                hyfib::sequences::SeqTerm::Spinor(s) => s.map(|k| Rat::from_integer(k.clone())),
                other => return Err(format!("unexpected term {}", other.render())),
            };
            ensure(got == expected, || format!("{kind} Binet differs at n={n}"))?;
        }
    }
    expect_status("C03a", Status::Pass)?;
    expect_status("C03b", Status::Mismatch)?;
    let r = expect_status("C06", Status::Mismatch)?;
    let lsh = golden_coeffs(&seqs, SeqKind::Lsh).map_err(|e| e.to_string())?;
    let half = rat(1, 2);
    let a1 = Hyper::new(Quad::one(), Quad::new(rat(3, 2), half.clone()));
    let b1 = Hyper::new(Quad::one(), Quad::new(rat(3, 2), -half));
    ensure(lsh.a.s1 == a1, || format!("A1 = {}", lsh.a.s1.render()))?;
    ensure(lsh.b.s1 == b1, || format!("B1 = {}", lsh.b.s1.render()))?;
    let derived = r.derived_form.unwrap_or_default();
    ensure(
        derived.contains(&a1.render()) && derived.contains(&b1.render()),
        || format!("C06 derived form {derived}"),
    )
}

fn c6_generating_functions() -> Check {
    let seqs = Sequences::new();
    for kind in [SeqKind::Fsh, SeqKind::Lsh] {
        ensure(genfun_series_check(&seqs, kind, 32), || {
            format!("{kind} numerator")
        })?;
    }
    for (id, form) in [
        ("C04", "[h+(1+h)x; 2h+(1+h)x]"),
        ("C07", "[2+3h+(-1+h)x; 2+4h+(-1+3h)x]"),
    ] {
        let r = expect_status(id, Status::Mismatch)?;
        ensure(r.derived_form.as_deref() == Some(form), || {
            format!("{id}: {:?}", r.derived_form)
        })?;
    }
    Ok(())
}

fn c7_shift_identities() -> Check {
    let seqs = Sequences::new();
    for id in [
        IdentityKind::FshShiftDifference,
        IdentityKind::FiveFshPlusLsh,
        IdentityKind::LucasWeightedFsh,
        IdentityKind::FibWeightedFsh,
    ] {
        for n in id.min_index() as i64..=100 {
            let (l, r) = identity_lhs_rhs(&seqs, id, n).map_err(|e| e.to_string())?;
            ensure(l == r, || format!("{id} at n={n}"))?;
        }
    }
    expect_status("C08", Status::Pass)?;
    expect_status("C09", Status::Pass).map(drop)
}

fn c8_conjugate_sums() -> Check {
    let seqs = Sequences::new();
    for n in 0..=64 {
        let s = seqs.fsh(n);
        let f = |k| seqs.fib(n + k);
        let two = |h: Hyper<Int>| &h + &h;
        let sum = |a: &HSpinor<Int>, b: &HSpinor<Int>| a + b;
        ensure(
            sum(&s, &spinor_bar(&s, &seqs.hybrid_fib(n)))
                == HSpinor::new(two(Hyper::real(f(0))), Hyper::zero()),
            || format!("bar at n={n}"),
        )?;
        ensure(
            sum(&s, &spinor_star(&s))
                == HSpinor::new(two(Hyper::real(f(0))), two(Hyper::real(f(0)))),
            || format!("star at n={n}"),
        )?;
        ensure(
            sum(&s, &spinor_mate(&s))
                == HSpinor::new(two(Hyper::new(Int::zero(), f(2))), two(Hyper::real(f(0)))),
            || format!("mate at n={n}"),
        )?;
        ensure(
            spinor_tilde(&s).scale(&Hyper::h()) == -spinor_mate(&s),
            || format!("tilde at n={n}"),
        )?;
    }
    expect_status("C02", Status::Pass).map(drop)
}

fn c9_polynomial_layer() -> Check {
    let seqs = Sequences::new();
    let one = Int::one();
    for n in 0..=30 {
        ensure(
            seqs.fsh_poly(n + 2) == seqs.fsh_poly(n + 1).scale_base(&Poly::x()) + seqs.fsh_poly(n),
            || format!("x-weighted recurrence at n={n}"),
        )?;
        ensure(
            seqs.fsh_poly(n).map(|p| p.eval(&one)) == seqs.fsh(n),
            || format!("fsh at x=1, n={n}"),
        )?;
        ensure(
            seqs.lsh_poly(n).map(|p| p.eval(&one)) == seqs.lsh(n),
            || format!("lsh at x=1, n={n}"),
        )?;
    }
    let r = expect_status("C10", Status::Fail)?;
    let input = r.counterexample.map(|c| c.input).unwrap_or_default();
    ensure(input == "n=0", || format!("C10 counterexample at {input}"))
}

fn c10_polynomial_binet() -> Check {
    let seqs = Sequences::new();
    for kind in [SeqKind::FshPoly, SeqKind::LshPoly] {
        ensure(binet_check_poly(&seqs, kind, 16), || {
            format!("{kind} cleared Binet")
        })?;
    }
    let r = expect_status("C13", Status::NotCheckable)?;
    ensure(r.anchor == "p(x)=h x^3-2 h x+b x", || r.anchor.clone())
}

fn c11_three_part_identities() -> Check {
    let seqs = Sequences::new();
    for n in 1..=30 {
        for id in [
            IdentityKind::LshPolyFromFshPoly,
            IdentityKind::LshPolyTwoFsh,
            IdentityKind::DiscriminantFshPolyUnsigned,
        ] {
            let (l, r) = identity_lhs_rhs(&seqs, id, n).map_err(|e| e.to_string())?;
            ensure(l == r, || format!("{id} at n={n}"))?;
        }
    }
    let (l, r) =
        identity_lhs_rhs(&seqs, IdentityKind::DiscriminantFshPoly, 2).map_err(|e| e.to_string())?;
    let at_one = |t: &hyfib::sequences::SeqTerm| t.render_at(&Rat::one()).unwrap_or_default();
    ensure(
        at_one(&l).starts_with("[5+") && at_one(&r).starts_with("[3+"),
        || format!("n=2 at x=1: {} vs {}", at_one(&l), at_one(&r)),
    )?;
    expect_status("C15a", Status::Pass)?;
    expect_status("C15b", Status::Pass)?;
    let c = expect_status("C15c", Status::Fail)?;
    let cx = c.counterexample.ok_or("C15c without counterexample")?;
    ensure(
        cx.input == "n=2" && cx.lhs == l.render() && cx.rhs == r.render(),
        || format!("C15c counterexample {cx:?}"),
    )
}

fn c12_regression_fixture() -> Check {
    let report = run_all(Profile::Full);
    let json = render_report(&report, "json").map_err(|e| e.to_string())? + "\n";
    ensure(json == include_str!("fixtures/audit_full.json"), || {
        "full report differs from tests/fixtures/audit_full.json".into()
    })?;
    let expected: std::collections::BTreeMap<String, Status> =
        serde_json::from_str(include_str!("fixtures/expected_verdicts.json"))
            .map_err(|e| e.to_string())?;
    let got: std::collections::BTreeMap<String, Status> = report
        .claims
        .iter()
        .map(|c| (c.id.clone(), c.status))
        .collect();
    ensure(got == expected, || format!("verdicts {got:?}"))
}

fn c13_cli_contract() -> Check {
    let cases: [(&[&str], &str); 3] = [
        (
            &[
                "seq", "--kind", "fsh", "--from", "0", "--to", "2", "--format", "json",
            ],
            "[\"[h; 2h]\",\"[1+2h; 1+3h]\",\"[1+3h; 1+5h]\"]\n",
        ),
        (&["mul", "i", "h"], "e+i\n"),
        (&["chi", "1+2i+3e+4h"], "[1+3h; 1+4h]\n"),
    ];
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_hyfib"))
            .args(args)
            .output()
            .map_err(|e| e.to_string())
    };
    for (args, expected) in cases {
        let out = run(args)?;
        let stdout = String::from_utf8_lossy(&out.stdout);
        ensure(out.status.code() == Some(0) && stdout == expected, || {
            format!(
                "hyfib {}: {:?} -> {stdout:?}",
                args.join(" "),
                out.status.code()
            )
        })?;
    }
    let out = run(&["audit", "--claim", "C05", "--format", "json"])?;
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(
        out.status.code() == Some(0) && v["claims"][0]["status"] == "pass",
        || format!("audit C05: {v}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        (
            "multiplication table is a matrix homomorphism",
            c1_multiplication_table,
        ),
        (
            "left-regular spinor rule; printed composition fails at p=q=1",
            c2_left_regular_rule,
        ),
        ("FSH_0 and FSH_1 seeds", c3_seeds),
        ("Cassini determinant for 1 <= n <= 50", c4_cassini),
        ("Binet exactness and coefficient audits", c5_binet),
        ("generating-function numerators", c6_generating_functions),
        (
            "shift and index-doubling identities to n = 100",
            c7_shift_identities,
        ),
        ("conjugate sums to n = 64", c8_conjugate_sums),
        (
            "polynomial recurrence and x = 1 specialisation",
            c9_polynomial_layer,
        ),
        (
            "division-free polynomial Binet to n = 16",
            c10_polynomial_binet,
        ),
        ("polynomial identities to n = 30", c11_three_part_identities),
        (
            "full audit matches the frozen fixture",
            c12_regression_fixture,
        ),
        ("CLI contract", c13_cli_contract),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:>2}: PASS  {name}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

use yokonuma::cli::{run, EXIT_FAIL, EXIT_PASS, EXIT_RESOURCE, EXIT_USAGE};
use yokonuma::repr::matrix_from_json;
use yokonuma::scalars::{derived_constants, RatFn};

fn call(args: &str) -> (i32, String, String) {
    let argv = std::iter::once("yhecke".to_string()).chain(shell_split(args));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

/// Splits on spaces, keeping single-quoted groups together.
fn shell_split(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    for c in s.chars() {
        match c {
            '\'' => quoted = !quoted,
            ' ' if !quoted => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            _ => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

#[test]
fn dims_footers() {
    for (args, footer, rows) in [
        ("dims --b 2 --n 3", "48 = 48", 10),
        ("dims --b 1 --n 4", "24 = 24", 5),
        ("dims --b 2 --n 2", "8 = 8", 5),
    ] {
        let (code, out, _) = call(args);
        assert_eq!(code, EXIT_PASS);
        let lines: Vec<_> = out.trim_end().lines().collect();
        assert_eq!(*lines.last().unwrap(), footer);
        assert_eq!(lines.len(), rows + 2, "{args}");
    }
    assert_eq!(call("dims --b 5 --n 6").0, EXIT_RESOURCE);
    assert_eq!(call("dims --b 5 --n 6 --max-dim 20000000").0, EXIT_PASS);
}

#[test]
fn matrix_outputs_parse_back() {
    let k = derived_constants(2);
    let (z, o) = (RatFn::zero(), RatFn::one());
    let (code, out, _) = call("matrix --b 2 --n 2 --lambda '[[1],[1]]' --gen R1 --spec generic");
    assert_eq!(code, EXIT_PASS);
    let m = matrix_from_json(&serde_json::from_str(&out).unwrap(), 2).unwrap();
    assert_eq!(
        m.to_rows(),
        vec![vec![z.clone(), k.q.clone()], vec![o.clone(), z.clone()]]
    );

    let (_, out, _) = call("matrix --b 2 --n 2 --lambda '[[1],[1]]' --gen T1");
    let m = matrix_from_json(&serde_json::from_str(&out).unwrap(), 2).unwrap();
    assert_eq!(
        m.to_rows(),
        vec![vec![RatFn::from_int(-1), z.clone()], vec![z, o]]
    );

    let (_, out, _) = call("matrix --b 1 --n 2 --lambda '[[2]]' --gen R1");
    let m = matrix_from_json(&serde_json::from_str(&out).unwrap(), 1).unwrap();
    assert_eq!(m.get(0, 0), &RatFn::t());
}

#[test]
fn matrix_errors() {
    let (code, _, err) = call("matrix --b 2 --n 2 --lambda '[[1],[2]]' --gen R1");
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("partition"), "{err}");
    let (code, _, err) = call("matrix --b 2 --n 2 --lambda '[[2],[]]' --gen R1 --spec group");
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("singular"), "{err}");
    assert_eq!(
        call("matrix --b 2 --n 2 --lambda '[[1],[1]]' --gen R2").0,
        EXIT_USAGE
    );
    let (code, out, _) = call("matrix --b 2 --n 2 --lambda '[[1],[1]]' --gen R1 --spec q=2,t=3");
    assert_eq!(code, EXIT_PASS);
    let m = matrix_from_json(&serde_json::from_str(&out).unwrap(), 2).unwrap();
    assert_eq!(m.get(0, 1), &RatFn::from_int(2));
}

#[test]
fn verify_suites_exit_codes() {
    for args in [
        "verify relations --b 3 --n 2",
        "verify oracle --q 3 --a 1 --bparam 2 --n 2",
        "verify modules --b 2 --n 3",
        "verify blocks --b 2 --n 2",
        "verify spa --b 2 --n 2",
        "verify group-spec --b 3 --n 2",
        "verify dimension --b 2 --n 4",
        "verify hoefsmit --mmax 4",
        "verify factorization --nmax 4 --bmax 2",
        "verify geometric-sum",
    ] {
        let (code, out, err) = call(args);
        assert_eq!(code, EXIT_PASS, "{args}: {out}{err}");
    }
    let (code, out, _) = call("verify irreducible --b 2 --n 3");
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("10 modules"));
    assert_eq!(out.matches("has dimension 1").count(), 10);

    assert_eq!(
        call("verify modules --b 2 --n 2 --sign one-minus-x").0,
        EXIT_FAIL
    );
    assert_eq!(
        call("verify oracle --q 5 --a 2 --bparam 2 --n 2").0,
        EXIT_USAGE
    );
    assert_eq!(
        call("verify oracle --q 5 --a 1 --bparam 4 --n 4").0,
        EXIT_RESOURCE
    );
    assert_eq!(call("verify relations --b 6 --n 5").0, EXIT_RESOURCE);
    assert_eq!(call("verify nonsense").0, EXIT_USAGE);
}

#[test]
fn verify_json_report() {
    let (code, out, _) = call("verify relations --b 2 --n 2 --target elements --format json");
    assert_eq!(code, EXIT_PASS);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks
        .iter()
        .all(|c| c["status"] == "pass" && c.get("witness").is_none()));
    let (_, out, _) = call("verify modules --b 2 --n 2 --sign one-minus-x --format json");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let failed: Vec<_> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .collect();
    assert!(failed.iter().all(|c| c["witness"].is_string()));
    assert!(failed
        .iter()
        .any(|c| c["check"].as_str().unwrap().contains("(r6)")));
}

#[test]
fn element_expansions() {
    let (code, out, _) = call("element R1*R1 --b 2 --n 2");
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out.trim(), "q·t_e + a·t_{(s1,(0,1))} + a·t_{(s1,(1,0))}");
    assert_eq!(call("element T1^2 --b 2 --n 2").1.trim(), "t_e");
    let (_, out, _) = call("element e[(2,2)] --b 2 --n 2");
    assert_eq!(out.trim().matches("(1/4)·").count(), 4);
    let (code, _, err) = call("element R1*X1 --b 2 --n 2");
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("position 3"), "{err}");
}

#[test]
fn element_json_round_trip() {
    let (_, out, _) = call("element R1*R1 --b 2 --n 2 --format json");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
    let k = derived_constants(2);
    let first = yokonuma::scalars::json::scalar_from_json(&terms[0]["coeff"], 2).unwrap();
    assert_eq!(first, k.q);
    assert_eq!(terms[0]["x"], "w=[1,2];d=[0,0]");
}

#[test]
fn deterministic_output() {
    let a = call("verify blocks --b 2 --n 3 --format json");
    let b = call("verify blocks --b 2 --n 3 --format json");
    assert_eq!(a, b);
}

//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::Command;
use std::time::{Duration, Instant};

use gyrograph::boundary::{bondy_chvatal_closure, boundary_interior_center};
use gyrograph::distance::{
    detour_matrix, distance_degree_sequence, distance_matrix, eccentricity_profile,
    DistanceDegreeSequence,
};
use gyrograph::graph::classify_gn_shape;
use gyrograph::hamiltonian::is_hamiltonian;
use gyrograph::hosoya::{hosoya_polynomial, reciprocal_status_hosoya};
use gyrograph::isomorphism::{gyro_isomorphic, verify_isomorphism};
use gyrograph::planarity::{is_planar, KuratowskiKind, PlanarityCertificate};
use gyrograph::resolving::{resolving_polynomial, resolving_sequence_exhaustive};
use gyrograph::spectral::{
    adjacency_matrix, char_poly_exact, closed_form_charpoly_gn, spectral_radius,
};
use gyrograph::table_io::Bundled;
use gyrograph::{power_graph, Graph, GyroGroup, IntPolynomial, Permutation};
use gyrograph_cli::report::{
    build_report, ReportOptions, ReportRequest, Verdict, PRINTED_G8_M1_MAP, PRINTED_K1_N1_MAP,
};

const TOL: f64 = 1e-10;
const ROOT_TOL: f64 = 1e-9;

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn pg(n: u32) -> Graph {
    power_graph(&GyroGroup::gn(n).unwrap())
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn c1_validity() -> Check {
    for n in 3..=5 {
        let r = GyroGroup::gn(n).map_err(|e| e.to_string())?.verify_axioms();
        ensure(
            r.is_gyrogroup(),
            format!("n = {n}: {:?}", r.counterexamples),
        )?;
        ensure(!r.is_group, format!("n = {n}: table is a group"))?;
    }
    Ok("G(3), G(4), G(5) are gyrogroups and not groups".into())
}

fn c2_shape() -> Check {
    for n in 3..=5 {
        let g = pg(n);
        let m = 1usize << (n - 1);
        let s = classify_gn_shape(&g);
        let exact = s.matches_gn_shape
            && s.hub == Some(0)
            && s.clique_part == (0..m).collect::<Vec<_>>()
            && s.pendant_part == (m..2 * m).collect::<Vec<_>>()
            && g.edge_count() == m * (m - 1) / 2 + m;
        ensure(exact, format!("n = {n}: {s:?}"))?;
    }
    Ok("K_m on P plus m pendants at 0 for n = 3..5".into())
}

fn pair_counts(g: &Graph) -> (usize, usize, usize) {
    let dm = distance_matrix(g);
    let n = g.order();
    let mut c = (n, 0, 0);
    for u in 0..n {
        for v in u + 1..n {
            match dm.get(u, v) {
                Some(1) => c.1 += 1,
                Some(2) => c.2 += 1,
                _ => {}
            }
        }
    }
    c
}

fn c3_counts() -> Check {
    let mut seen = Vec::new();
    for n in 3..=5 {
        let big = 1usize << n;
        let m = big / 2;
        let expected = (big, m * (m + 1) / 2, 3 * m * (m - 1) / 2);
        let got = pair_counts(&pg(n));
        ensure(got == expected, format!("n = {n}: {got:?} != {expected:?}"))?;
        seen.push(got);
    }
    ensure(seen[0] == (8, 10, 18), "n = 3 is not (8, 10, 18)")?;
    Ok(format!("{seen:?}"))
}

fn c4_polynomials() -> Check {
    for n in 3..=5u32 {
        let g = pg(n);
        let big = 1i64 << n;
        let m = big / 2;
        let hosoya = IntPolynomial::from_ascending([big, m * (m + 1) / 2, 3 * m * (m - 1) / 2]);
        let got = hosoya_polynomial(&g).map_err(|e| e.to_string())?;
        ensure(got == hosoya, format!("n = {n}: Hosoya {got}"))?;
        let mut rs = IntPolynomial::zero();
        rs.add_term(((4 * big - m - 4) / 2) as u32, (m - 1).into());
        rs.add_term((big + m - 1) as u32, m.into());
        rs.add_term((big + m - 2) as u32, ((m - 1) * (m - 2) / 2).into());
        let got = reciprocal_status_hosoya(&g).map_err(|e| e.to_string())?;
        ensure(
            got.polynomial == rs && got.fractional_terms.is_empty(),
            format!("n = {n}: rs-Hosoya {}", got.polynomial),
        )?;
    }
    let h3 = hosoya_polynomial(&pg(3)).unwrap();
    let rs3 = reciprocal_status_hosoya(&pg(3)).unwrap().polynomial;
    ensure(
        h3 == IntPolynomial::from_ascending([8, 10, 18]),
        format!("n = 3 Hosoya {h3}"),
    )?;
    ensure(
        rs3.to_string() == "3x^12 + 4x^11 + 3x^10",
        format!("n = 3 rs-Hosoya {rs3}"),
    )?;
    Ok(format!("n = 3: {h3} and {rs3}"))
}

fn resolving_closed_form(n: u32) -> Vec<u64> {
    let big = 1u64 << n;
    let m = big / 2;
    vec![m * m - m, m * m + m - 1, big, 1]
}

fn c5_resolving() -> Check {
    let g3 = pg(3);
    let full = resolving_sequence_exhaustive(&g3).map_err(|e| e.to_string())?;
    ensure(
        full.metric_dimension == 5,
        format!("n = 3: psi {}", full.metric_dimension),
    )?;
    ensure(
        full.sequence == resolving_closed_form(3),
        format!("n = 3: {:?}", full.sequence),
    )?;
    ensure(full.sequence == [12, 19, 8, 1], "n = 3 is not (12,19,8,1)")?;
    let start = Instant::now();
    let pruned = resolving_polynomial(&pg(4)).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure(
        pruned.metric_dimension == 13,
        format!("n = 4: psi {}", pruned.metric_dimension),
    )?;
    ensure(
        pruned.sequence == resolving_closed_form(4),
        format!(
            "n = 4: {:?} != closed form {:?}",
            pruned.sequence,
            resolving_closed_form(4)
        ),
    )?;
    ensure(
        took < Duration::from_secs(60),
        format!("n = 4 took {took:?}"),
    )?;
    Ok(format!(
        "psi = 5, 13; n = 3 {:?} (full), n = 4 {:?} (twin-pruned, closed form)",
        full.sequence, pruned.sequence
    ))
}

fn c6_charpoly() -> Check {
    for n in 3..=5 {
        let exact = char_poly_exact(&adjacency_matrix(&pg(n))).map_err(|e| e.to_string())?;
        let closed = closed_form_charpoly_gn(n).map_err(|e| e.to_string())?;
        ensure(exact == closed, format!("n = {n}: {exact} != {closed}"))?;
    }
    let report = build_report(
        &ReportRequest {
            ns: vec![3, 4, 5],
            ..ReportRequest::default()
        },
        ReportOptions::default(),
    );
    for n in 3..=5 {
        let id = format!("n{n}.charpoly");
        let v = report.entry(&id).map(|e| e.verdict);
        ensure(
            v == Some(Verdict::PaperTypoCorrected),
            format!("{id}: {v:?}"),
        )?;
    }
    Ok("exact equals corrected closed form; printed cubic flagged typo-corrected".into())
}

fn c7_spectral() -> Check {
    let mut first = 0.0;
    for n in 3..=5u32 {
        let m = (1u32 << (n - 1)) as f64;
        let r = spectral_radius(&adjacency_matrix(&pg(n)), TOL).map_err(|e| e.to_string())?;
        let (lo, hi) = (m - 1.0, m - 1.0 + m.sqrt());
        ensure(
            lo < r.value && r.value <= hi,
            format!("n = {n}: {lo} < {} <= {hi} fails", r.value),
        )?;
        if n == 3 {
            first = r.value;
        }
    }
    let root = (1.0 + 33f64.sqrt()) / 2.0;
    ensure(
        (first - root).abs() <= ROOT_TOL,
        format!("n = 3: {first} vs {root}"),
    )?;
    Ok(format!(
        "n = 3: 3 < {first:.10} <= 5, |lambda - (1+sqrt 33)/2| <= {ROOT_TOL:e}"
    ))
}

fn expected_dds(n: u32) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let big = 1usize << n;
    let m = big / 2;
    let mut shortest = vec![vec![1, big - 1]];
    let mut detour = {
        let mut e = vec![1, m];
        e.extend(std::iter::repeat_n(0, m - 3));
        e.push(m - 1);
        vec![e]
    };
    for _ in 1..m {
        shortest.push(vec![1, m - 1, m]);
        let mut p = vec![1];
        p.extend(std::iter::repeat_n(0, m - 2));
        p.extend([m - 1, m]);
        detour.push(p);
    }
    for _ in 0..m {
        shortest.push(vec![1, 1, big - 2]);
        let mut h = vec![1, 1, m - 1];
        h.extend(std::iter::repeat_n(0, m - 3));
        h.push(m - 1);
        detour.push(h);
    }
    (shortest, detour)
}

fn c8_detour() -> Check {
    let mut summary = Vec::new();
    for n in 3..=4u32 {
        let g = pg(n);
        let m = 1u32 << (n - 1);
        let start = Instant::now();
        let dd = detour_matrix(&g).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        let p = eccentricity_profile(&dd).map_err(|e| e.to_string())?;
        ensure(
            p.radius == m - 1 && p.diameter == m,
            format!("n = {n}: rad_D {} dia_D {}", p.radius, p.diameter),
        )?;
        let (es, ed) = expected_dds(n);
        let DistanceDegreeSequence { per_vertex: s, .. } =
            distance_degree_sequence(&distance_matrix(&g)).map_err(|e| e.to_string())?;
        let DistanceDegreeSequence { per_vertex: d, .. } =
            distance_degree_sequence(&dd).map_err(|e| e.to_string())?;
        ensure(s == es, format!("n = {n}: dds {s:?}"))?;
        ensure(d == ed, format!("n = {n}: dds_D {d:?}"))?;
        ensure(
            took < Duration::from_secs(120),
            format!("n = {n}: detour took {took:?}"),
        )?;
        summary.push(format!("n = {n}: rad_D {} dia_D {}", p.radius, p.diameter));
    }
    Ok(summary.join("; ") + "; dds and dds_D match")
}

fn c9_structure() -> Check {
    let g3 = pg(3);
    let p3 = is_planar(&g3).map_err(|e| e.to_string())?;
    ensure(p3.planar && p3.verify(&g3), "P(G(3)) planarity certificate")?;
    ensure(
        matches!(p3.certificate, PlanarityCertificate::Embedding(_)),
        "P(G(3)) certificate is not an embedding",
    )?;
    let g4 = pg(4);
    let p4 = is_planar(&g4).map_err(|e| e.to_string())?;
    ensure(
        !p4.planar && p4.verify(&g4),
        "P(G(4)) non-planarity certificate",
    )?;
    match &p4.certificate {
        PlanarityCertificate::Kuratowski(w)
            if w.kind == KuratowskiKind::K5 && w.is_subdivision_in(&g4) => {}
        c => return Err(format!("P(G(4)) certificate {c:?}")),
    }
    for n in 3..=5 {
        let g = pg(n);
        let h = is_hamiltonian(&g).map_err(|e| e.to_string())?;
        ensure(!h.hamiltonian, format!("n = {n}: Hamiltonian"))?;
        let classes = boundary_interior_center(&g).map_err(|e| e.to_string())?;
        ensure(
            classes.interior == [0] && classes.center == [0],
            format!(
                "n = {n}: interior {:?} center {:?}",
                classes.interior, classes.center
            ),
        )?;
        let closure = bondy_chvatal_closure(&g);
        ensure(
            closure.edges().collect::<Vec<_>>() == g.edges().collect::<Vec<_>>(),
            format!("n = {n}: closure adds edges"),
        )?;
    }
    Ok("P(G(3)) planar, P(G(4)) K5 subdivision, non-Hamiltonian, interior = center = {0}, closure fixed".into())
}

fn c10_isomorphism() -> Check {
    let load = |b: Bundled| b.load().map_err(|e| e.to_string());
    let (k, n, g8, m1) = (
        load(Bundled::K1)?,
        load(Bundled::N1)?,
        load(Bundled::G8)?,
        load(Bundled::M1)?,
    );
    let (pk, pn, pg8, pm1) = (
        power_graph(&k),
        power_graph(&n),
        power_graph(&g8),
        power_graph(&m1),
    );
    let f1 = Permutation::new(PRINTED_K1_N1_MAP.to_vec()).unwrap();
    let f2 = Permutation::new(PRINTED_G8_M1_MAP.to_vec()).unwrap();
    ensure(
        verify_isomorphism(&pk, &pn, &f1).unwrap().valid,
        "K(1)/N(1) map fails",
    )?;
    let forward = verify_isomorphism(&pg8, &pm1, &f2).unwrap().valid;
    let backward = verify_isomorphism(&pm1, &pg8, &f2).unwrap().valid;
    ensure(forward || backward, "G8/M(1) map fails in both directions")?;
    let kn = gyro_isomorphic(&k, &n).map_err(|e| e.to_string())?;
    ensure(
        kn.is_none(),
        format!("K(1) and N(1) isomorphic via {:?}", kn.map(|w| w.map)),
    )?;
    let gm = gyro_isomorphic(&g8, &m1).map_err(|e| e.to_string())?;
    ensure(
        gm.is_none(),
        format!(
            "maps validate (G8/M(1) only as M(1) -> G8); K(1) and N(1) not isomorphic; but G8 and M(1) are isomorphic via {}",
            gm.map(|w| w.map.to_string()).unwrap_or_default()
        ),
    )?;
    Ok("maps validate; K(1) and N(1), G8 and M(1) not isomorphic".into())
}

fn c11_negative_control() -> Check {
    let mut rows: Vec<Vec<String>> = Bundled::K1
        .csv()
        .lines()
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect();
    rows[3][5] = "5".into();
    let text: String = rows.iter().map(|r| r.join(",") + "\n").collect();
    let dir = std::env::temp_dir().join(format!("gyrograph-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let path = dir.join("k1-corrupted.csv");
    std::fs::write(&path, text).map_err(|e| e.to_string())?;
    let out = Command::new(env!("CARGO_BIN_EXE_gyrograph"))
        .arg("build")
        .arg("--table")
        .arg(&path)
        .output()
        .map_err(|e| e.to_string())?;
    let _ = std::fs::remove_dir_all(&dir);
    let stdout = String::from_utf8_lossy(&out.stdout);
    let stderr = String::from_utf8_lossy(&out.stderr);
    let code = out.status.code();
    ensure(code.is_some_and(|c| c != 0), format!("exit {code:?}"))?;
    ensure(
        stderr.contains("counterexample") && stdout.contains("\"counterexamples\""),
        format!("no counterexample reported: {stderr}"),
    )?;
    let first = stderr
        .lines()
        .find(|l| l.starts_with("counterexample"))
        .unwrap_or("");
    Ok(format!("exit {}, {first}", code.unwrap()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("G(n) validity", Duration::from_secs(5), c1_validity),
        ("power-graph shape", Duration::from_secs(1), c2_shape),
        ("pair-distance counts", Duration::from_secs(1), c3_counts),
        (
            "Hosoya and rs-Hosoya polynomials",
            Duration::from_secs(1),
            c4_polynomials,
        ),
        (
            "metric dimension and resolving polynomial",
            Duration::from_secs(60),
            c5_resolving,
        ),
        (
            "characteristic polynomial",
            Duration::from_secs(5),
            c6_charpoly,
        ),
        ("spectral bounds", Duration::from_secs(1), c7_spectral),
        ("detour and dds", Duration::from_secs(120), c8_detour),
        ("structure", Duration::from_secs(5), c9_structure),
        (
            "isomorphism demonstrations",
            Duration::from_secs(5),
            c10_isomorphism,
        ),
        (
            "negative control",
            Duration::from_secs(1),
            c11_negative_control,
        ),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let result = result.and_then(|msg| {
            if took <= budget {
                Ok(msg)
            } else {
                Err(format!("{msg}; took {took:.2?}, budget {budget:?}"))
            }
        });
        match result {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} [{took:.2?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} [{took:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

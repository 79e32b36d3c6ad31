//! Acceptance suite: one PASS/FAIL line per criterion, exact integers only.
//!
//! Criteria listed in `KNOWN_FAILURES` cannot hold as stated; they still
//! print FAIL, and the run only fails if some other criterion does (or if a
//! known failure unexpectedly starts passing).

use std::process::Command;
use std::time::Instant;

use hyperchess::bounds::{known_value, queen_nstar_search, table, Quantity, TableId};
use hyperchess::lattice::{canonical_count, canonical_vertices, canonicalize, color_of_coords, index_vertex};
use hyperchess::metrics::{
    bishop_cross_color, bishop_metric_distance, bishop_metric_radius_diameter,
    pawn_metric_radius_diameter, pawn_trip_eccentricity, verify_metric, MetricKind,
};
use hyperchess::search::{bfs_distances, eccentricity, reach_set};
use hyperchess::{Board, Distance, PieceGraph, PieceId, PieceRule, Subject, SymmetryClass, Vertex};

/// Criterion 9 asks the knight graph on C(2,4) to be a metric, but no
/// (2,1)-leap fits on a two-wide axis: every vertex is isolated.
const KNOWN_FAILURES: [u32; 1] = [9];

type Outcome = Result<(), String>;

fn check(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn board(n: u32, k: u32) -> Board {
    Board::new(n, k).unwrap()
}

fn rd(id: PieceId, n: u32, k: u32) -> (Distance, Distance) {
    let r = PieceGraph::new(PieceRule::new(id), board(n, k)).unwrap().radius_diameter(true).unwrap();
    (r.radius, r.diameter)
}

fn fin(d: u32) -> Distance {
    Distance::Finite(d)
}

/// Parses a caption list such as `(1,0,0), (0,1,1)`.
fn caption(text: &str) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = text
        .split(')')
        .filter_map(|chunk| chunk.split_once('('))
        .map(|(_, coords)| coords.parse::<Vertex>().unwrap())
        .collect();
    out.sort();
    out
}

fn c1_move_sets() -> Outcome {
    let b = board(4, 3);
    let start = Vertex::from([1, 0, 0]);
    let s = |id: PieceId, t: u32| reach_set(PieceRule::new(id), &b, &start, t).unwrap();
    let cases: [(&str, PieceId, u32, &str); 9] = [
        ("1", PieceId::BishopBar, 1, "(1,0,0),(0,1,1), (2,1,1), (3,2,2)"),
        ("2", PieceId::BishopMillennium, 1, "(1,0,0), (0,1,0), (2,1,0), (3,2,0), (0,1,1), (2,1,1), (3,2,2)"),
        (
            "3bis",
            PieceId::RookStar,
            1,
            "(1,0,0), (0,0,0), (2,0,0), (3,0,0), (0,1,0), (1,1,0),  (2,1,0), (1,2,0), (3,2,0), (1,3,0), \
             (0,0,1), (1,0,1), (2,0,1), (1,1,1), (1,0,2), (3,0,2), (1,2,2), (1,0,3), (1,3,3)",
        ),
        (
            "3",
            PieceId::RookMillennium,
            1,
            "(1,0,0), (0,0,0), (2,0,0), (3,0,0), (1,1,0), (1,2,0), (1,3,0), (0,0,1), (1,0,1), (2,0,1), \
             (1,1,1), (1,0,2), (3,0,2), (1,2,2), (1,0,3), (1,3,3)",
        ),
        (
            "4",
            PieceId::RookBar,
            1,
            "(1,0,0), (0,0,0), (2,0,0), (3,0,0), (1,1,0), (1,2,0), (1,3,0), (1,0,1), (1,0,2), (1,0,3)",
        ),
        (
            "5",
            PieceId::QueenMillennium,
            1,
            "(1,0,0), (0,0,0), (2,0,0), (3,0,0), (1,1,0), (1,2,0), (1,3,0), (0,0,1), (1,0,1), (2,0,1), \
             (1,1,1), (1,0,2), (3,0,2), (1,2,2), (1,0,3), (0,1,0), (2,1,0), (3,2,0), (0,1,1), (2,1,1), (3,2,2), (1,3,3)",
        ),
        (
            "6",
            PieceId::King,
            1,
            "(1,0,0), (0,0,0), (2,0,0), (0,1,0), (1,1,0), (2,1,0), (0,0,1), (1,0,1), (2,0,1), (0,1,1), \
             (1,1,1), (2,1,1)",
        ),
        ("8", PieceId::PawnBarForward, 2, "(1,0,0), (1,1,0), (1,2,0), (1,3,0)"),
        ("9", PieceId::PawnMillenniumForward, 1, "(1,0,0), (1,1,0), (1,2,0), (1,0,1), (1,1,1), (1,0,2), (1,2,2)"),
    ];
    for (fig, id, t, text) in cases {
        check(s(id, t) == caption(text), || format!("figure {fig} ({id})"))?;
    }
    let mut tilde = caption(
        "(1,0,0), (0,1,0), (2,1,0), (3,2,0), (0,0,1), (1,1,1), (2,0,1), (1,2,2), (3,0,2), (1,3,3)",
    );
    tilde.push(Vertex::from([3, 2, 2]));
    tilde.sort();
    check(s(PieceId::BishopTilde, 1) == tilde, || "figure 22 plus (3,2,2)".into())
}

fn c2_king() -> Outcome {
    for k in 1..=3 {
        for n in 1..=8 {
            let got = rd(PieceId::King, n, k);
            check(got == (fin((n - 1).div_ceil(2)), fin(n - 1)), || format!("C({n},{k}): {got:?}"))?;
        }
    }
    for (n, k) in [(6, 2), (4, 3)] {
        let b = board(n, k);
        for a in b.vertices() {
            let field = bfs_distances(PieceRule::new(PieceId::King), &b, &a).unwrap();
            for (i, d) in field.iter().enumerate() {
                let z = index_vertex(&b, i);
                let cheb = a.0.iter().zip(&z.0).map(|(x, y)| x.abs_diff(*y)).max().unwrap();
                check(d == fin(cheb), || format!("{a}->{z} on C({n},{k})"))?;
            }
        }
    }
    Ok(())
}

fn c3_rook() -> Outcome {
    for k in 2..=4 {
        for n in 2..=6 {
            let got = rd(PieceId::RookBar, n, k);
            check(got == (fin(k), fin(k)), || format!("rook-bar C({n},{k}): {got:?}"))?;
        }
    }
    let b = board(4, 3);
    for a in b.vertices() {
        let field = bfs_distances(PieceRule::new(PieceId::RookBar), &b, &a).unwrap();
        for (i, d) in field.iter().enumerate() {
            let z = index_vertex(&b, i);
            let diff = a.0.iter().zip(&z.0).filter(|(x, y)| x != y).count() as u32;
            check(d == fin(diff), || format!("{a}->{z}"))?;
        }
    }
    check(rd(PieceId::RookMillennium, 3, 3) == (fin(2), fin(3)), || "millennium rook C(3,3)".into())?;
    check(rd(PieceId::RookMillennium, 4, 3) == (fin(3), fin(3)), || "millennium rook C(4,3)".into())
}

fn table_passes(id: TableId, n_max: u32) -> Outcome {
    let rows = table(id, n_max, false).map_err(|e| e.to_string())?;
    let bad: Vec<u32> = rows.iter().filter(|r| !r.pass).map(|r| r.n).collect();
    check(!rows.is_empty() && bad.is_empty(), || format!("{id} fails at n = {bad:?}"))
}

fn c4_queens() -> Outcome {
    table_passes(TableId::Eq54, 10)?;
    table_passes(TableId::Eq53, 8)?;
    let eq55 = table(TableId::Eq55, 8, false).map_err(|e| e.to_string())?;
    let fails: Vec<u32> = eq55.iter().filter(|r| !r.pass).map(|r| r.n).collect();
    check(fails == [2], || format!("eq55 FAIL rows at n = {fails:?}, expected only n = 2"))?;
    let q = PieceId::QueenMillennium;
    check(rd(q, 4, 4) == (fin(2), fin(2)), || "C(4,4)".into())?;
    check(rd(q, 3, 4).1 == fin(2), || "d on C(3,4)".into())?;
    check(rd(q, 2, 4).1 == fin(1), || "d on C(2,4)".into())?;
    check(rd(q, 5, 4).1 == fin(3), || "d on C(5,4)".into())?;
    let start = Instant::now();
    table_passes(TableId::Eq12, 8)?;
    table_passes(TableId::Eq13, 9)?;
    let secs = start.elapsed().as_secs_f64();
    check(secs < 10.0, || format!("tilde queen tables took {secs:.1} s"))
}

fn c5_knight() -> Outcome {
    let n = PieceId::Knight;
    check(rd(n, 4, 2) == (fin(4), fin(5)), || "C(4,2)".into())?;
    table_passes(TableId::Eq7, 20)?;
    for size in 4..=8 {
        check(rd(n, size, 3).1 == fin(size), || format!("d on C({size},3)"))?;
    }
    let b = board(5, 3);
    let ecc = |v: [u32; 3]| eccentricity(PieceRule::new(n), &b, &Vertex::from(v)).unwrap();
    check(ecc([0, 0, 0]) == fin(5), || "e(0,0,0) on C(5,3)".into())?;
    check(ecc([2, 2, 2]) == fin(3), || "e(2,2,2) on C(5,3)".into())?;
    table_passes(TableId::KnightBounds, 8)?;
    for size in 4..=8 {
        let (r, d) = rd(n, size, 4);
        let (rl, dl) = (
            hyperchess::bounds::knight_radius_lower(size, 4).unwrap(),
            hyperchess::bounds::knight_diameter_lower(size, 4).unwrap(),
        );
        check(r.finite().unwrap() >= rl && d.finite().unwrap() >= dl, || format!("bounds on C({size},4)"))?;
    }
    Ok(())
}

fn c6_bishop_metric() -> Outcome {
    for (n, k) in [(4, 3), (5, 2)] {
        let report = verify_metric(MetricKind::BishopMetric { literal: false }, &board(n, k)).unwrap();
        check(report.verdict, || format!("verify on C({n},{k})"))?;
    }
    // Every reflection and axis permutation preserves both the tilde bishop
    // and the same-colour relation, so canonical sources cover all rows.
    for k in 2..=4 {
        check(bishop_cross_color(k).unwrap() == 1 << k, || format!("cross-colour constant for k = {k}"))?;
        for n in 2..=6u32 {
            let b = board(n, k);
            for a in canonical_vertices(&b, SymmetryClass::Full) {
                let field = bfs_distances(PieceRule::new(PieceId::BishopTilde), &b, &a).unwrap();
                for (i, d) in field.iter().enumerate() {
                    let z = index_vertex(&b, i);
                    if color_of_coords(&a.0) == color_of_coords(&z.0) {
                        let d = d.finite();
                        check(d.is_some_and(|d| d <= k), || format!("{a}->{z} on C({n},{k}): {d:?}"))?;
                    } else {
                        let m = bishop_metric_distance(&b, &a, &z, false).unwrap();
                        check(m == fin(1 << k), || format!("{a}->{z} on C({n},{k}): {m:?}"))?;
                    }
                }
            }
        }
    }
    for k in 2..=3 {
        for n in 2..=5 {
            let r = bishop_metric_radius_diameter(&board(n, k), false).unwrap();
            check((r.radius, r.diameter) == (fin(1 << k), fin(1 << k)), || format!("C({n},{k})"))?;
        }
    }
    Ok(())
}

fn c7_pawn_metric() -> Outcome {
    let pm = |n, k| {
        let r = pawn_metric_radius_diameter(&board(n, k)).unwrap();
        (r.radius, r.diameter)
    };
    check(pm(4, 2) == (fin(8), fin(9)), || "C(4,2)".into())?;
    check(pm(5, 2) == (fin(8), fin(9)), || "C(5,2)".into())?;
    check(pm(5, 3).1 == fin(10), || "d on C(5,3)".into())?;
    let start = Instant::now();
    let r83 = pawn_metric_radius_diameter(&board(8, 3)).unwrap();
    let secs = start.elapsed().as_secs_f64();
    check(r83.radius == fin(15), || format!("r on C(8,3): {:?}", r83.radius))?;
    check(r83.sources_examined == 20, || format!("{} sources on C(8,3)", r83.sources_examined))?;
    check(secs < 10.0, || format!("C(8,3) took {secs:.1} s"))?;
    check(pm(3, 2).1 == fin(4), || "d on C(3,2)".into())?;
    for k in 2..=3 {
        for n in 2..=7 {
            let report = verify_metric(MetricKind::PawnMetric, &board(n, k)).unwrap();
            check(report.verdict, || format!("verify on C({n},{k})"))?;
        }
    }
    Ok(())
}

fn c8_pawn_trips() -> Outcome {
    let trip = |n, k, from: &[u32]| {
        pawn_trip_eccentricity(&board(n, k), PieceId::PawnBarForward, PieceId::QueenMillennium, &Vertex::new(from.to_vec()))
            .unwrap()
    };
    check(trip(3, 2, &[0, 0]) == fin(2), || "from (0,0) on C(3,2)".into())?;
    check(trip(3, 3, &[0, 0, 0]) == fin(3), || "from (0,0,0) on C(3,3)".into())?;
    check(trip(3, 3, &[1, 2, 1]) == fin(2), || "from (1,2,1) on C(3,3)".into())?;
    // The planar closed form is a statement about the pawn metric: promotion
    // run plus return, then a queen or knight leg of at most two moves.
    for n in 4..=8 {
        let knight = rd(PieceId::Knight, n, 2).1.finite().unwrap();
        let formula = n - 2 + knight + 2;
        let r = pawn_metric_radius_diameter(&board(n, 2)).unwrap();
        check(r.diameter == fin(formula), || format!("d on C({n},2): {:?} vs {formula}", r.diameter))?;
        let radius_holds = r.radius == fin(formula);
        check(radius_holds == (n >= 6), || format!("r on C({n},2): {:?} vs {formula}", r.radius))?;
    }
    Ok(())
}

fn c9_axioms() -> Outcome {
    for id in [PieceId::King, PieceId::RookBar, PieceId::QueenTilde, PieceId::Knight] {
        for (n, k) in [(4, 2), (4, 3), (2, 4)] {
            let report = verify_metric(MetricKind::Piece(PieceRule::new(id)), &board(n, k)).unwrap();
            check(report.verdict, || {
                format!("{id} on C({n},{k}): {} isolated, {} unreachable pairs", report.isolated_count, report.unreachable_count)
            })?;
        }
    }
    for (n, k, centre) in [(3, 2, vec![1, 1]), (3, 3, vec![1, 1, 1])] {
        let report = verify_metric(MetricKind::Piece(PieceRule::new(PieceId::Knight)), &board(n, k)).unwrap();
        check(!report.verdict && report.isolated_vertices.contains(&Vertex::new(centre)), || {
            format!("knight on C({n},{k})")
        })?;
    }
    for id in [PieceId::PawnBarForward, PieceId::PawnMillenniumForward] {
        let report = verify_metric(MetricKind::Piece(PieceRule::new(id)), &board(3, 2)).unwrap();
        check(!report.verdict && report.symmetry_count > 0, || format!("{id} accepted"))?;
    }
    Ok(())
}

fn c10_symmetry() -> Outcome {
    for id in PieceId::ALL {
        for k in 1..=12u32 {
            for n in 1..=4096u32 {
                if (n as u64).pow(k) > 4096 {
                    break;
                }
                let graph = match PieceGraph::new(PieceRule::new(id), board(n, k)) {
                    Ok(g) => g,
                    Err(_) => continue, // piece undefined for this k
                };
                match (graph.radius_diameter(true), graph.radius_diameter(false)) {
                    (Ok(a), Ok(b)) => {
                        check((a.radius, a.diameter) == (b.radius, b.diameter), || format!("{id} on C({n},{k})"))?
                    }
                    (Err(_), Err(_)) => {}
                    _ => return Err(format!("{id} on C({n},{k}): one path errored")),
                }
            }
        }
    }
    for k in 1..=5 {
        for n in 1..=9 {
            let b = board(n, k);
            let mut orbits: Vec<Vertex> = b.vertices().map(|v| canonicalize(&b, &v, SymmetryClass::Full).unwrap()).collect();
            orbits.sort();
            orbits.dedup();
            check(canonical_count(n, k).unwrap() == orbits.len() as u64, || format!("count for C({n},{k})"))?;
        }
    }
    Ok(())
}

fn c11_nstar() -> Outcome {
    check(queen_nstar_search(PieceId::QueenMillennium, 2, 8).unwrap() == Some(3), || "queen k=2".into())?;
    check(queen_nstar_search(PieceId::QueenMillennium, 3, 8).unwrap() == Some(6), || "queen k=3".into())?;
    check(queen_nstar_search(PieceId::QueenTilde, 3, 8).unwrap() == Some(5), || "tilde queen k=3".into())?;
    for n in 3..=8 {
        check(known_value(Subject::Piece(PieceId::QueenTilde), n, 4, Quantity::Diameter).is_none(), || {
            format!("tilde queen k=4 n={n} should be open")
        })?;
    }
    for n in 3..=6 {
        let (r, d) = rd(PieceId::QueenTilde, n, 4);
        check(d.finite().unwrap() <= 4 && r.finite().unwrap() >= 2, || format!("C({n},4): r={r:?} d={d:?}"))?;
    }
    Ok(())
}

fn c12_determinism() -> Outcome {
    let fixtures: [(&str, &str, &str); 5] = [
        ("knight", "8", "2"),
        ("queen-tilde", "6", "3"),
        ("queen-millennium", "5", "4"),
        ("rook-star", "4", "3"),
        ("pawn-metric", "5", "3"),
    ];
    for (piece, n, k) in fixtures {
        let run = |threads: &str| {
            let out = Command::new(env!("CARGO_BIN_EXE_hyperchess"))
                .args(["radius-diameter", "--piece", piece, "--n", n, "--k", k, "--no-timing", "--format", "json"])
                .args(["--threads", threads])
                .output()
                .unwrap();
            (out.status.code(), out.stdout)
        };
        let (one, many) = (run("1"), run("8"));
        check(one.0 == Some(0) && one == many, || format!("{piece} C({n},{k})"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 12] = [
        (1, "move-set fixtures", c1_move_sets),
        (2, "king closed forms and Chebyshev distance", c2_king),
        (3, "rook closed forms", c3_rook),
        (4, "queen tables and values", c4_queens),
        (5, "knight values and bounds", c5_knight),
        (6, "bishop metric", c6_bishop_metric),
        (7, "pawn metric", c7_pawn_metric),
        (8, "pawn trips", c8_pawn_trips),
        (9, "metric-axiom verdicts", c9_axioms),
        (10, "symmetry reduction equivalence", c10_symmetry),
        (11, "n* searches", c11_nstar),
        (12, "thread-count determinism", c12_determinism),
    ];
    // Optional numeric arguments select criteria; cargo's own flags are ignored.
    let only: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut unexpected = Vec::new();
    for (id, name, run) in criteria {
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let known = KNOWN_FAILURES.contains(&id);
        match &outcome {
            Ok(()) => println!("criterion {id:>2} PASS  {name} ({secs:.2} s)"),
            Err(why) if known => println!("criterion {id:>2} FAIL  {name}: {why} [known]"),
            Err(why) => println!("criterion {id:>2} FAIL  {name}: {why}"),
        }
        if outcome.is_ok() == known {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}

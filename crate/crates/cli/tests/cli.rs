//! End-to-end tests of the binary: formats, exit codes, and the streaming
//! behavior of `reorient`.

use std::io::{BufRead, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::{Child, Command, Output, Stdio};

use ograph::engine::SmartStream;
use ograph::format;
use ograph::generators::{fixture, Fixture};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ograph"))
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.as_mut().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write_fixture_file(dir: &tempfile::TempDir, f: Fixture) -> PathBuf {
    let data = fixture(f);
    let path = dir.path().join(format!("{}.og", f.name()));
    std::fs::write(&path, format::write_ograph(&data.graph, data.order.as_ref())).unwrap();
    path
}

#[test]
fn reorient_c3_from_file_and_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = write_fixture_file(&dir, Fixture::C3);

    let out = run(&["reorient", c3.to_str().unwrap()], "");
    assert!(out.status.success());
    assert_eq!(stdout(&out), "o 0 1\no 2 0\no 2 1\n");

    let stream = format::write_odelta(&fixture(Fixture::C3).graph);
    let out = run(&["reorient"], &stream);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "o 0 1\no 2 0\no 2 1\n");
}

#[test]
fn reorient_is_prefix_stable() {
    let g = fixture(Fixture::Theta5).graph;
    let full_input = format::write_odelta(&g);
    let full = stdout(&run(&["reorient"], &full_input));

    let truncated: String = full_input.lines().take(4).map(|l| format!("{l}\n")).collect();
    let prefix = stdout(&run(&["reorient"], &truncated));
    assert!(full.starts_with(&prefix));
}

// The engine must answer each vertex before seeing the next one: write one
// line at a time and read the decided pairs back over the pipe.
#[test]
fn reorient_streams_interactively() {
    let mut child: Child = bin()
        .arg("reorient")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let mut stdin = child.stdin.take().unwrap();
    let mut reader = BufReader::new(child.stdout.take().unwrap());

    let g = fixture(Fixture::C3).graph;
    let mut expected_stream = SmartStream::new();
    for k in 0..g.n() {
        let delta = g.delta_at(k);
        writeln!(stdin, "{}", format::write_delta_line(&delta)).unwrap();
        stdin.flush().unwrap();
        let report = expected_stream.push(&delta).unwrap();
        for &(u, v) in &report.new_pairs {
            let mut line = String::new();
            reader.read_line(&mut line).unwrap();
            assert_eq!(line, format!("o {u} {v}\n"));
        }
    }
    drop(stdin);
    assert!(child.wait().unwrap().success());
}

#[test]
fn reorient_rejects_non_pseudo_transitive_stream() {
    // x joins above 0 while 0 ⊸ 1 stays untouched: 2 ⊸ 0 ⊸ 1 needs 2 − 1
    let out = run(&["reorient"], "v 0\nv 1 >0\nv 2 <0\n");
    assert_eq!(out.status.code(), Some(3));
    let err = stderr(&out);
    assert!(err.contains("pseudo_transitivity") && err.contains("2 0 1"), "stderr: {err}");
}

#[test]
fn reorient_handles_empty_and_flagged_runs() {
    let out = run(&["reorient"], "");
    assert!(out.status.success());
    assert_eq!(stdout(&out), "");

    let stream = format::write_odelta(&fixture(Fixture::Theta5).graph);
    let out = run(&["reorient", "--paranoid", "--verify"], &stream);
    assert!(out.status.success());
    assert!(stderr(&out).contains("GHT ok"));

    let out = run(&["reorient", "--quiet", "--verify"], &stream);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "");
}

#[test]
fn reorient_reports_parse_errors_with_lines() {
    let out = run(&["reorient"], "v 0\nv 2 >0\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"));
}

#[test]
fn check_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let theta5 = write_fixture_file(&dir, Fixture::Theta5);
    let ttl = write_fixture_file(&dir, Fixture::TtL);
    let g22 = write_fixture_file(&dir, Fixture::G22L);

    let out = run(&["check", "pt", theta5.to_str().unwrap()], "");
    assert!(out.status.success());
    assert_eq!(stdout(&out), "PT ok\n");

    let out = run(&["check", "phi", ttl.to_str().unwrap()], "");
    assert!(out.status.success());
    assert_eq!(stdout(&out), "PHI fail 0 1 2\n");

    let out = run(&["check", "theta", g22.to_str().unwrap()], "");
    assert_eq!(stdout(&out), "THETA fail 0 1 2 3\n");
    let out = run(&["check", "sigma", g22.to_str().unwrap()], "");
    assert_eq!(stdout(&out), "SIGMA fail 0 1 2 3\n");
    let out = run(&["check", "ght", g22.to_str().unwrap()], "");
    assert_eq!(stdout(&out), "GHT ok\n");
}

// gen | reorient | check lazy wired together through files.
#[test]
fn check_lazy_on_reorient_output() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = write_fixture_file(&dir, Fixture::C3);
    let order_text = stdout(&run(&["reorient", c3.to_str().unwrap()], ""));
    let order_path = dir.path().join("c3.order");
    std::fs::write(&order_path, order_text).unwrap();

    let out = run(&["check", "lazy", c3.to_str().unwrap(), order_path.to_str().unwrap()], "");
    assert!(out.status.success());
    assert_eq!(stdout(&out), "LAZY ok\n");
    let out = run(&["check", "ght", c3.to_str().unwrap(), order_path.to_str().unwrap()], "");
    assert_eq!(stdout(&out), "GHT ok\n");
}

#[test]
fn witness_chains() {
    let dir = tempfile::tempdir().unwrap();
    let theta5 = write_fixture_file(&dir, Fixture::Theta5);
    let out = run(&["witness", "theta", theta5.to_str().unwrap(), "0", "1", "2", "3"], "");
    assert!(out.status.success());
    assert_eq!(stdout(&out), "chain 4\n");

    let out = run(&["witness", "phi", theta5.to_str().unwrap(), "0", "1", "2"], "");
    assert_eq!(stdout(&out), "none\n");

    let out = run(&["witness", "theta", theta5.to_str().unwrap(), "0", "1", "2"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_fixtures_and_seeds_are_deterministic() {
    let out = run(&["gen", "--fixture", "C3"], "");
    assert!(out.status.success());
    assert_eq!(stdout(&out), "ograph v1\nn 3\ne 0 1\ne 1 2\ne 2 0\n");

    let a = run(&["gen", "--n", "20", "--density", "0.4", "--flips", "0.5", "--seed", "9"], "");
    let b = run(&["gen", "--n", "20", "--density", "0.4", "--flips", "0.5", "--seed", "9"], "");
    assert_eq!(stdout(&a), stdout(&b));

    let out = run(&["gen", "--fixture", "bogus"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn adversary_commands_emit_odelta() {
    let dir = tempfile::tempdir().unwrap();
    let ttl = write_fixture_file(&dir, Fixture::TtL);
    let out = run(&["adversary", "break-phi", ttl.to_str().unwrap(), "0", "1", "2"], "");
    assert!(out.status.success());
    assert_eq!(stdout(&out), "odelta v1\nv 3 <2\n");

    let g22 = write_fixture_file(&dir, Fixture::G22L);
    let out = run(&["adversary", "break-theta", g22.to_str().unwrap(), "0", "1", "2", "3"], "");
    assert!(out.status.success());
    assert_eq!(stdout(&out), "odelta v1\nv 4 >0 >1\n");

    // precondition failures are argument errors
    let out = run(&["adversary", "break-phi", g22.to_str().unwrap(), "0", "1", "2"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_commands() {
    let dir = tempfile::tempdir().unwrap();
    let ttl = write_fixture_file(&dir, Fixture::TtL);
    let out = run(
        &["oracle", "extendible", ttl.to_str().unwrap(), ttl.to_str().unwrap()],
        "",
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out), "EXTENDIBLE no\nv 3 <2\n");

    // C3 under its streamed order is extendible
    let c3 = write_fixture_file(&dir, Fixture::C3);
    let order_path = dir.path().join("c3.order");
    std::fs::write(&order_path, stdout(&run(&["reorient", c3.to_str().unwrap()], ""))).unwrap();
    let out = run(
        &["oracle", "extendible", c3.to_str().unwrap(), order_path.to_str().unwrap()],
        "",
    );
    assert_eq!(stdout(&out), "EXTENDIBLE yes\n");

    let out = run(&["oracle", "enumerate", "2", "--count-only"], "");
    assert_eq!(stdout(&out), "3\n");

    let out = run(&["oracle", "enumerate", "2"], "");
    let listing = stdout(&out);
    let blocks: Vec<&str> = listing.trim_end().split("\n\n").collect();
    assert_eq!(blocks.len(), 3);
    assert!(blocks.iter().all(|b| b.starts_with("ograph v1")));

    let out = run(&["oracle", "enumerate", "9"], "");
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn bench_emits_csv() {
    let out = run(&["bench", "--n", "16,32", "--reps", "1", "--seed", "1"], "");
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,step_mean_us,step_max_us,total_ms"));
    assert!(lines.next().unwrap().starts_with("16,"));
    assert!(lines.next().unwrap().starts_with("32,"));
    assert_eq!(lines.next(), None);
}

#[test]
fn file_parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.og");
    std::fs::write(&path, "ograph v1\nn 2\ne 0 1\ne 1 0\n").unwrap();
    let out = run(&["check", "pt", path.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 4"));
}

// Two binaries playing the vertex game over a pipe: gen writes the graph,
// one process replays it as a stream, the other verifies online.
#[test]
fn processes_pipe_together() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.og");
    let gen_out = run(&["gen", "--n", "24", "--density", "0.5", "--flips", "0.5", "--seed", "5"], "");
    std::fs::write(&path, stdout(&gen_out)).unwrap();

    let mut producer = bin()
        .args(["reorient", path.to_str().unwrap(), "--quiet", "--verify"])
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    assert!(producer.wait().unwrap().success());
    let mut err = String::new();
    producer.stderr.take().unwrap().read_to_string(&mut err).unwrap();
    assert!(err.contains("GHT ok"));
}

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn netbrain(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_netbrain")).args(args).output().unwrap()
}

fn ok(args: &[&str]) -> Output {
    let out = netbrain(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    out
}

fn edge_lines(text: &str) -> usize {
    text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()).count()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn csv_rows(path: &Path) -> Vec<Vec<String>> {
    let text = fs::read_to_string(path).unwrap();
    text.lines().skip(1).map(|l| l.split(',').map(String::from).collect()).collect()
}

#[test]
fn generate_er_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.txt");
    let out = ok(&["generate", "er", "--n", "1000", "--k", "8", "--seed", "7", "--out", p(&file)]);
    let m = edge_lines(&fs::read_to_string(&file).unwrap());
    assert!((m as f64 - 4000.0).abs() < 200.0, "m = {m}");
    let stats = String::from_utf8(out.stdout).unwrap();
    assert!(stats.contains(&format!("m={m}")), "{stats}");
    assert!(stats.starts_with("n="));
}

#[test]
fn generate_ring_lattice_to_stdout() {
    let out = ok(&["generate", "ws", "--n", "100", "--k", "4", "--p", "0", "--seed", "1"]);
    assert_eq!(edge_lines(&String::from_utf8(out.stdout).unwrap()), 200);
    assert!(String::from_utf8(out.stderr).unwrap().contains("m=200"));
}

#[test]
fn single_block_sbm_is_er() {
    let out = ok(&["generate", "sbm", "--n", "100", "--blocks", "1", "--mu", "0", "--k", "10", "--seed", "3"]);
    let m = edge_lines(&String::from_utf8(out.stdout).unwrap());
    // Binomial(4950, 10/99): mean 500, sd about 21.
    assert!((400..600).contains(&m), "m = {m}");
}

#[test]
fn generate_rejects_bad_parameters() {
    let out = netbrain(&["generate", "ws", "--n", "100", "--k", "3", "--seed", "1"]);
    assert!(!out.status.success());
    let out = netbrain(&["generate", "er", "--n", "100", "--k", "8", "--mu", "0.1"]);
    assert!(!out.status.success());
}

#[test]
fn ingest_relabels_and_reports() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.txt");
    fs::write(&input, "# citations\n5 900\n900 12\n12 900\n12 12\n77 78\n").unwrap();
    let labels = dir.path().join("labels.txt");
    let dense = dir.path().join("dense.txt");
    let out = ok(&["ingest", p(&input), "--out", p(&dense), "--labels", p(&labels)]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("raw_nodes=5 raw_edges=5"), "{text}");
    assert!(text.contains("dropped_duplicates=1 dropped_self_loops=1"), "{text}");
    assert!(text.contains("lcc_nodes=3 lcc_edges=2"), "{text}");
    assert_eq!(fs::read_to_string(&labels).unwrap(), "# node_id label\n0 5\n1 12\n2 900\n");
    assert_eq!(edge_lines(&fs::read_to_string(&dense).unwrap()), 2);
}

#[test]
fn malformed_edge_list_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.txt");
    fs::write(&input, "0 1\n1 two\n").unwrap();
    let out = netbrain(&["ingest", p(&input)]);
    assert!(!out.status.success());
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 2"));
}

/// On P3 from the centre the brain alone is 1/3 at step 0. A Standard walk
/// ends at a leaf after one step, so 2/3 is known at step 1 and the other
/// leaf needs at least one more walk.
#[test]
fn run_on_three_node_path() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("p3.txt");
    fs::write(&edges, "0 1\n1 2\n").unwrap();
    let out_dir = dir.path().join("out");
    ok(&["run", "--edge-list", p(&edges), "--starts", "1", "--policy", "standard", "--reps", "1", "--seed", "4", "--out", p(&out_dir)]);
    let rows = csv_rows(&out_dir.join("curves.csv"));
    assert_eq!(rows.len(), 100);
    for row in &rows {
        assert_eq!(&row[..5], ["edge_list", "standard", "1", "2", "0"]);
        let t: f64 = row[5].parse().unwrap();
        let steps: u64 = row[6].parse().unwrap();
        if t <= 1.0 / 3.0 {
            assert_eq!(steps, 0, "threshold {t}");
        } else if t <= 2.0 / 3.0 {
            assert_eq!(steps, 1, "threshold {t}");
        } else {
            assert!(steps >= 2, "threshold {t}");
        }
    }
    for name in ["aggregate.csv", "manifest.json", "config.toml"] {
        assert!(out_dir.join(name).exists(), "{name}");
    }
}

fn manifest(dir: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(dir.join("manifest.json")).unwrap()).unwrap()
}

#[test]
fn run_is_reproducible_from_its_own_config() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b, c) = (dir.path().join("a"), dir.path().join("b"), dir.path().join("c"));
    let args = |out: &Path| {
        let mut v: Vec<String> = ["run", "--model", "ba", "--n", "400", "--k", "4", "--graph-seed", "9", "--top-hubs", "3"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        v.extend(["--policy", "extended", "--policy", "lookahead", "--reps", "4", "--seed", "31", "--out"].map(String::from));
        v.push(p(out).to_string());
        v
    };
    ok(&args(&a).iter().map(String::as_str).collect::<Vec<_>>());
    ok(&args(&b).iter().map(String::as_str).collect::<Vec<_>>());
    ok(&["run", "--config", p(&a.join("config.toml")), "--out", p(&c)]);
    for name in ["curves.csv", "aggregate.csv"] {
        let first = fs::read(a.join(name)).unwrap();
        assert_eq!(first, fs::read(b.join(name)).unwrap(), "{name}");
        assert_eq!(first, fs::read(c.join(name)).unwrap(), "{name}");
    }
    let (ma, mb) = (manifest(&a), manifest(&b));
    assert_eq!(ma["cells"], mb["cells"]);
    assert_eq!(ma["config"], mb["config"]);
    assert_eq!(ma["curves"], 2 * 3 * 4);
    assert_eq!(ma["cells"].as_array().unwrap().len(), 24);
    assert_eq!(ma["command"], "run");
}

#[test]
fn step_cap_is_recorded() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    ok(&[
        "run", "--model", "er", "--n", "1000", "--k", "3", "--graph-seed", "2", "--stride", "100", "--reps", "2",
        "--step-cap", "100", "--seed", "5", "--out", p(&out),
    ]);
    let m = manifest(&out);
    assert!(m["cap_hits"].as_u64().unwrap() > 0, "{}", m["cap_hits"]);
    assert_eq!(m["config"]["step_cap"], 100);
}

#[test]
fn sweep_writes_one_file_per_value() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sweep.toml");
    fs::write(
        &config,
        r#"
policies = ["standard", "extended"]
repetitions_per_start = 2
thresholds = [0.5, 0.9, 1.0]
master_seed = 12

[graph.generator]
model = "ws"
n = 300
k_avg = 4.0
seed = 3

[start]
kind = "degree_ranked_stride"
stride = 100

[sweep]
axis = "p_rewire"
values = [0.01, 0.1, 1.0]
"#,
    )
    .unwrap();
    let out = dir.path().join("out");
    ok(&["sweep", "--config", p(&config), "--out", p(&out)]);
    let mut names: Vec<String> = fs::read_dir(&out).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    assert_eq!(
        names,
        [
            "aggregate.csv",
            "aggregate_00_p_rewire_0.01.csv",
            "aggregate_01_p_rewire_0.1.csv",
            "aggregate_02_p_rewire_1.csv",
            "config.toml",
            "curves.csv",
            "manifest.json",
        ]
    );
    // 3 values x 2 policies x 3 thresholds.
    assert_eq!(csv_rows(&out.join("aggregate.csv")).len(), 18);
    assert_eq!(csv_rows(&out.join("aggregate_01_p_rewire_0.1.csv")).len(), 6);
    assert_eq!(manifest(&out)["command"], "sweep");
}

#[test]
fn config_with_unknown_key_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bad.toml");
    fs::write(
        &config,
        "policies = [\"standard\"]\nrepetitions_per_start = 1\nmaster_seed = 1\nspeed = 3\n\
         [graph.generator]\nmodel = \"er\"\nn = 50\nk_avg = 4.0\nseed = 1\n[start]\nkind = \"top_hubs\"\ncount = 1\n",
    )
    .unwrap();
    let out = netbrain(&["run", "--config", p(&config), "--out", p(&dir.path().join("o"))]);
    assert!(!out.status.success());
    assert!(String::from_utf8(out.stderr).unwrap().contains("speed"));
}

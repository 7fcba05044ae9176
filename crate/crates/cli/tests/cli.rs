use std::process::{Command, Output};

fn quatknot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quatknot")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    let prefix = format!("{key}=");
    let start = line.find(&format!(" {prefix}")).map(|i| i + 1).or_else(|| line.starts_with(&prefix).then_some(0))?;
    let rest = &line[start + prefix.len()..];
    Some(rest.split(' ').next().unwrap())
}

fn records(args: &[&str]) -> Vec<String> {
    let mut full = vec!["--format", "records"];
    full.extend_from_slice(args);
    let o = quatknot(&full);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o).lines().map(String::from).collect()
}

#[test]
fn verify_exit_codes() {
    let ok = quatknot(&["verify", "--switch", "budapest"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("verdict: pass"));
    assert!(stdout(&ok).contains("lambda: k"));
    for bad in ["1,k,i,j", "1,0,0,1"] {
        let o = quatknot(&["verify", "--switch", bad]);
        assert_eq!(o.status.code(), Some(1), "{bad}");
        assert!(stdout(&o).contains("verdict: fail"));
    }
    assert_eq!(quatknot(&["verify", "--switch", "1+x,1,1,1"]).status.code(), Some(2));
    assert_eq!(quatknot(&["verify", "--switch", "nonesuch"]).status.code(), Some(2));
    assert_eq!(quatknot(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn vtrefoil_records() {
    let lines = records(&["invariant", "--gauss", "vtrefoil"]);
    assert_eq!(lines.len(), 2);
    assert_eq!(field(&lines[0], "level"), Some("0"));
    assert_eq!(field(&lines[0], "delta"), Some("t^4+2t^2+1"));
    assert_eq!(field(&lines[0], "ring"), Some("quaternionic"));
    assert_eq!(field(&lines[1], "delta"), Some("1"));
}

#[test]
fn kishino_records() {
    let lines = records(&["invariant", "--gauss", "kishino3", "--levels", "0,1"]);
    assert_eq!(field(&lines[0], "delta"), Some("0"));
    assert_eq!(field(&lines[1], "delta"), Some("2t^4+5t^2+2"));
    let alex = records(&["invariant", "--alexander", "--gauss", "kishino1", "--levels", "1"]);
    assert_eq!(field(&alex[0], "ring"), Some("alexander"));
    assert_eq!(field(&alex[0], "delta"), Some("-1-m+l*m"));
}

#[test]
fn braid_closure_records() {
    let lines = records(&["invariant", "--braid", "s1 s1 s1", "--strands", "2", "--levels", "1"]);
    assert_eq!(field(&lines[0], "delta"), Some("1"));
    assert_eq!(field(&lines[0], "raw"), Some("9"));
    let code = records(&["invariant", "--gauss", "O1+U2+O3+U1+O2+U3+", "--levels", "1"]);
    assert_eq!(field(&code[0], "raw"), Some("9"));
}

#[test]
fn bad_diagrams_are_usage_errors() {
    assert_eq!(quatknot(&["invariant", "--gauss", "O1+U7"]).status.code(), Some(2));
    assert_eq!(quatknot(&["invariant", "--braid", "s3", "--strands", "2"]).status.code(), Some(2));
}

#[test]
fn table_one_is_covered() {
    let lines = records(&["tables", "1"]);
    assert_eq!(lines.len(), 5);
    assert!(lines.iter().all(|l| field(l, "covered") == Some("true")), "{lines:?}");
}

#[test]
fn search_from_config_file() {
    let dir = std::env::temp_dir().join(format!("quatknot-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("grid.toml");
    std::fs::write(&path, "a = [\"-1\", \"0\", \"1\"]\nb = [\"-1\", \"0\", \"1\"]\nring = \"integer\"\n").unwrap();
    let lines = records(&["search", "--config", path.to_str().unwrap()]);
    assert!(!lines.is_empty());
    assert!(lines.iter().all(|l| field(l, "budapest") != Some("none")), "{lines:?}");
    std::fs::write(&path, "a = [\"1\"]\nbogus = 1\n").unwrap();
    assert_eq!(quatknot(&["search", "--config", path.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn catalog_lists_names() {
    let o = quatknot(&["catalog"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for name in ["vtrefoil", "kishino1", "kishino2", "kishino3", "trefoil", "figure8", "budapest", "s9-4"] {
        assert!(text.contains(name), "{name}");
    }
}

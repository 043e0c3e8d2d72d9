use std::io::Write;
use std::process::{Command, Stdio};

fn workbench() -> Command {
    Command::new(env!("CARGO_BIN_EXE_workbench"))
}

fn write_script(contents: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(contents.as_bytes()).unwrap();
    file.flush().unwrap();
    file
}

const GROEBNER_SESSION: &str =
    "ring R=0,(y,x),lp;\nideal I = 2x2-xy+2y2-2, 2x2-3xy+3y2-2;\ngroebner(I);\n";

#[test]
fn script_mode_reproduces_the_session_transcript() {
    let script = write_script(GROEBNER_SESSION);
    let output = workbench()
        .arg("--script")
        .arg(script.path())
        .output()
        .unwrap();
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert_eq!(
        stdout,
        "> ring R=0,(y,x),lp;\n\
         > ideal I = 2x2-xy+2y2-2, 2x2-3xy+3y2-2;\n\
         > groebner(I);\n\
         _[1]=4x4-5x2+1\n\
         _[2]=3y+8x3-8x\n"
    );
}

#[test]
fn quiet_mode_prints_outputs_only() {
    let script = write_script("G:=Group((5,6), (1,2,3,4), (2,5,4,6));\nSize(G);\n");
    let output = workbench()
        .arg("--script")
        .arg(script.path())
        .arg("--quiet")
        .output()
        .unwrap();
    assert!(output.status.success());
    assert_eq!(String::from_utf8(output.stdout).unwrap(), "48\n");
}

#[test]
fn json_format_applies_to_solve_output() {
    let script = write_script(
        "ring R=0,(y,x),lp;\nideal I = 2x2-xy+2y2-2, 2x2-3xy+3y2-2;\nsolve(I);\n",
    );
    let output = workbench()
        .arg("--script")
        .arg(script.path())
        .arg("--quiet")
        .arg("--format")
        .arg("json")
        .arg("--width")
        .arg("1/64")
        .output()
        .unwrap();
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).unwrap();
    let boxes: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    let list = boxes.as_array().unwrap();
    assert_eq!(list.len(), 4);
    for b in list {
        assert!(b["y"].is_array() && b["x"].is_array());
    }
}

#[test]
fn script_errors_exit_with_one_and_a_position() {
    let script = write_script("ring R=0,(y,x),lp;\nideal I = 3z;\n");
    let output = workbench()
        .arg("--script")
        .arg(script.path())
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("line 2"), "stderr: {stderr}");
}

#[test]
fn missing_script_file_is_an_io_error() {
    let output = workbench()
        .arg("--script")
        .arg("/nonexistent/script.txt")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_with_two() {
    let bad_width = workbench()
        .arg("--width")
        .arg("0")
        .arg("--script")
        .arg("/dev/null")
        .output()
        .unwrap();
    assert_eq!(bad_width.status.code(), Some(2));
    let bad_flag = workbench().arg("--no-such-flag").output().unwrap();
    assert_eq!(bad_flag.status.code(), Some(2));
}

#[test]
fn interactive_mode_reads_stdin_and_recovers_from_errors() {
    let mut child = workbench()
        .arg("--quiet")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"Size(G);\nG:=Group((5,6), (1,2,3,4), (2,5,4,6));\nSize(G);\n")
        .unwrap();
    let output = child.wait_with_output().unwrap();
    assert!(output.status.success());
    assert_eq!(String::from_utf8(output.stdout).unwrap(), "48\n");
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("unbound name 'G'"), "stderr: {stderr}");
}
